//! Seeded random representations, maps and sequences.
//!
//! Representations are built as cokernels of random maps between free
//! objects, their duals (kernels between cofree objects), and images of
//! random maps from free to cofree objects, so functoriality holds by
//! construction over every field.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::diagrams::Diagrams;
use crate::error::Error;
use crate::exact::{Field, Mat, Scalar};
use crate::fincat::FinCat;
use crate::homext::{dual_over, ext1, free_on, from_summands, hom_space, pushout_ses, yoneda_map, ExtClass};
use crate::rep::{coker_nat, image_nat, NatMap, Rep, Ses};

const ATTEMPTS: usize = 200;

pub struct Gen {
    rng: ChaCha8Rng,
    field: Field,
    max_dim: usize,
}

impl Gen {
    pub fn new(seed: u64, field: Field, max_dim: usize) -> Gen {
        Gen { rng: ChaCha8Rng::seed_from_u64(seed), field, max_dim }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn scalar(&mut self) -> Scalar {
        self.field.from_i64(self.rng.gen_range(-2..=2))
    }

    pub fn scalars(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    fn vector(&mut self, n: usize) -> Mat {
        let v = self.scalars(n);
        Mat::column(self.field, v)
    }

    fn objects(&mut self, cat: &FinCat, lo: usize, hi: usize) -> Vec<usize> {
        let n = self.rng.gen_range(lo..=hi);
        (0..n).map(|_| self.below(cat.n_objects())).collect()
    }

    /// A random map `⊕ R_o → target` given by random vectors at the generators.
    fn map_from_free(&mut self, cat: &Arc<FinCat>, objects: &[usize], target: &Rep) -> Result<NatMap, Error> {
        let (free, inj, proj) = free_on(cat, self.field, objects);
        let legs: Vec<NatMap> = objects
            .iter()
            .zip(&inj)
            .map(|(&o, i)| {
                let v = self.vector(target.dim(o));
                yoneda_map(i.src(), o, target, &v)
            })
            .collect();
        from_summands(&free, target, &legs, &proj)
    }

    fn cofree(&mut self, cat: &Arc<FinCat>, op: &Arc<FinCat>) -> Rep {
        let objs = self.objects(op, 1, 2);
        dual_over(&free_on(op, self.field, &objs).0, cat)
    }

    fn candidate(&mut self, cat: &Arc<FinCat>, op: &Arc<FinCat>) -> Result<Rep, Error> {
        match self.below(3) {
            0 => {
                let p0 = self.objects(cat, 1, 2);
                let target = free_on(cat, self.field, &p0).0;
                let p1 = self.objects(cat, 0, 2);
                Ok(coker_nat(&self.map_from_free(cat, &p1, &target)?)?.tgt().clone())
            }
            1 => {
                let p0 = self.objects(op, 1, 2);
                let target = free_on(op, self.field, &p0).0;
                let p1 = self.objects(op, 0, 2);
                let q = coker_nat(&self.map_from_free(op, &p1, &target)?)?.tgt().clone();
                Ok(dual_over(&q, cat))
            }
            _ => {
                let target = self.cofree(cat, op);
                let p = self.objects(cat, 1, 2);
                Ok(image_nat(&self.map_from_free(cat, &p, &target)?)?.src().clone())
            }
        }
    }

    /// A nonzero representation with every dimension at most `max_dim`.
    pub fn rep(&mut self, cat: &Arc<FinCat>) -> Result<Rep, Error> {
        let op = Arc::new(cat.opposite());
        for _ in 0..ATTEMPTS {
            let r = self.candidate(cat, &op)?;
            if !r.is_zero() && r.dims().iter().all(|&d| d <= self.max_dim) {
                return Ok(r);
            }
        }
        Err(Error::BudgetExhausted { attempts: ATTEMPTS })
    }

    /// A uniformly weighted random element of `Hom(src, tgt)`.
    pub fn natmap(&mut self, src: &Rep, tgt: &Rep) -> Result<NatMap, Error> {
        let h = hom_space(src, tgt)?;
        let c = self.scalars(h.dim());
        h.combine(&c)
    }

    /// `0 → im(P → B) → B → coker → 0` with nonzero end terms.
    pub fn ses(&mut self, cat: &Arc<FinCat>) -> Result<Ses, Error> {
        for _ in 0..ATTEMPTS {
            let b = self.rep(cat)?;
            let p = self.objects(cat, 1, 2);
            let map = self.map_from_free(cat, &p, &b)?;
            let mono = image_nat(&map)?;
            if mono.src().is_zero() {
                continue;
            }
            let epi = coker_nat(&mono)?;
            if epi.tgt().is_zero() {
                continue;
            }
            return Ses::new(mono, epi);
        }
        Err(Error::BudgetExhausted { attempts: ATTEMPTS })
    }

    /// `η: κ(A) ↪ F ↠ X` realizing a random class of `Ext¹(X, κA)`.
    pub fn eta_direct(&mut self, d: &Diagrams) -> Result<Ses, Error> {
        let a = self.rep(d.delta())?;
        let x = self.rep(d.product())?;
        let e = ext1(&x, &d.kappa(&a)?)?;
        let coords = self.scalars(e.dim());
        e.realize(&ExtClass { coords })
    }

    /// A random sequence `H ↪ F ↠ G` pushed out along `ρ^H: H → κ(colim H)`.
    pub fn eta_pushout(&mut self, d: &Diagrams) -> Result<Ses, Error> {
        let s = self.ses(d.product())?;
        let c = d.colim(s.sub())?;
        pushout_ses(&s, &c.rho)
    }

    /// Alternates between the two η generators.
    pub fn eta(&mut self, d: &Diagrams, i: usize) -> Result<Ses, Error> {
        if i.is_multiple_of(2) {
            self.eta_direct(d)
        } else {
            self.eta_pushout(d)
        }
    }
}

/// `⊕_o R_o` over every object, a projective generator.
pub fn free_generator(cat: &Arc<FinCat>, field: Field) -> Rep {
    let objs: Vec<usize> = (0..cat.n_objects()).collect();
    free_on(cat, field, &objs).0
}

/// The dual of the free generator of the opposite category, an injective cogenerator.
pub fn injective_cogenerator(cat: &Arc<FinCat>, field: Field) -> Rep {
    let op = Arc::new(cat.opposite());
    dual_over(&free_generator(&op, field), cat)
}

/// The indecomposable injectives `I_o = (R^op_o)*`.
pub fn indecomposable_injectives(cat: &Arc<FinCat>, field: Field) -> Vec<Rep> {
    let op = Arc::new(cat.opposite());
    (0..cat.n_objects()).map(|o| dual_over(&free_on(&op, field, &[o]).0, cat)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::shapes;

    #[test]
    fn generation_is_deterministic_and_valid() {
        let cat = Arc::new(shapes::span());
        let mut g1 = Gen::new(7, Field::Rationals, 3);
        let mut g2 = Gen::new(7, Field::Rationals, 3);
        for _ in 0..10 {
            let r1 = g1.rep(&cat).unwrap();
            let r2 = g2.rep(&cat).unwrap();
            assert_eq!(r1, r2);
            assert!(r1.validate().is_empty());
            assert!(r1.dims().iter().all(|&d| d <= 3));
        }
        for _ in 0..10 {
            let s = g1.ses(&cat).unwrap();
            for o in 0..3 {
                assert_eq!(s.middle().dim(o), s.sub().dim(o) + s.quotient().dim(o));
            }
        }
    }

    #[test]
    fn bc2_over_f2_covers_projective_and_not() {
        let cat = Arc::new(shapes::cyclic_group(2));
        let f2 = Field::prime(2).unwrap();
        let mut g = Gen::new(1, f2, 2);
        let (mut proj, mut non) = (false, false);
        for _ in 0..100 {
            let r = g.rep(&cat).unwrap();
            if crate::homext::is_projective(&r).unwrap().holds {
                proj = true;
            } else {
                non = true;
            }
        }
        assert!(proj && non);
    }
}
