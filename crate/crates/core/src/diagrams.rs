//! `Σ`-indexed diagrams in `A = Fun(Δ, Vect)`, stored as representations of
//! `Σ × Δ`, with the constant-diagram functor and (co)limits over `Σ`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::Field;
use crate::fincat::FinCat;
use crate::limits::{self, ColimData, LimData};
use crate::rep::{curry, uncurry, Curried, NatMap, Rep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagrams {
    sigma: Arc<FinCat>,
    delta: Arc<FinCat>,
    product: Arc<FinCat>,
    field: Field,
}

/// `colim_Σ F` as an object of `A`, with the unit `ρ: F → κ(colim F)`.
#[derive(Clone, Debug)]
pub struct BaseColim {
    pub apex: Rep,
    pub rho: NatMap,
    data: ColimData,
    curried: Curried,
}

/// `lim_Σ F` as an object of `A`, with the counit `π: κ(lim F) → F`.
#[derive(Clone, Debug)]
pub struct BaseLim {
    pub apex: Rep,
    pub pi: NatMap,
    data: LimData,
    curried: Curried,
}

impl Diagrams {
    pub fn new(sigma: Arc<FinCat>, delta: Arc<FinCat>, field: Field) -> Diagrams {
        let product = Arc::new(sigma.product(&delta));
        Diagrams { sigma, delta, product, field }
    }

    pub fn sigma(&self) -> &Arc<FinCat> {
        &self.sigma
    }

    pub fn delta(&self) -> &Arc<FinCat> {
        &self.delta
    }

    pub fn product(&self) -> &Arc<FinCat> {
        &self.product
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Index of `(σ, δ)` in `Σ × Δ`.
    pub fn pair(&self, s: usize, d: usize) -> usize {
        s * self.delta.n_objects() + d
    }

    fn check_base(&self, a: &Rep) -> Result<(), Error> {
        if a.field() != self.field || **a.cat() != *self.delta {
            return Err(Error::CategoryMismatch);
        }
        Ok(())
    }

    fn check_diagram(&self, f: &Rep) -> Result<(), Error> {
        if f.field() != self.field || **f.cat() != *self.product {
            return Err(Error::ShapeMismatch("expected a representation of Σ × Δ".into()));
        }
        Ok(())
    }

    /// Re-homes a base object on this instance's `Δ` pointer.
    fn base(&self, a: &Rep) -> Result<Rep, Error> {
        self.check_base(a)?;
        a.with_cat(self.delta.clone())
    }

    pub fn curry(&self, f: &Rep) -> Result<Curried, Error> {
        self.check_diagram(f)?;
        curry(f, &self.sigma, &self.delta)
    }

    pub fn uncurry(&self, c: &Curried) -> Result<Rep, Error> {
        uncurry(&self.product, &self.sigma, &self.delta, c)
    }

    pub fn fiber(&self, f: &Rep, s: usize) -> Result<Rep, Error> {
        Ok(self.curry(f)?.fibers.swap_remove(s))
    }

    /// The components `φ_σ: F_σ → G_σ` of a map of diagrams.
    pub fn curry_map(&self, phi: &NatMap) -> Result<Vec<NatMap>, Error> {
        let (fs, gs) = (self.curry(phi.src())?, self.curry(phi.tgt())?);
        let nd = self.delta.n_objects();
        Ok((0..self.sigma.n_objects())
            .map(|s| {
                let comp = (0..nd).map(|d| phi.comp(self.pair(s, d)).clone()).collect();
                NatMap::new_unchecked(fs.fibers[s].clone(), gs.fibers[s].clone(), comp)
            })
            .collect())
    }

    pub fn uncurry_map(&self, src: &Rep, tgt: &Rep, comps: &[NatMap]) -> Result<NatMap, Error> {
        let nd = self.delta.n_objects();
        let mut comp = Vec::with_capacity(self.product.n_objects());
        for c in comps {
            for d in 0..nd {
                comp.push(c.comp(d).clone());
            }
        }
        NatMap::new(src.clone(), tgt.clone(), comp)
    }

    /// The constant diagram `κ(A)`.
    pub fn kappa(&self, a: &Rep) -> Result<Rep, Error> {
        let a = self.base(a)?;
        let fibers = (0..self.sigma.n_objects()).map(|_| a.clone()).collect();
        let maps = (0..self.sigma.n_morphisms()).map(|_| NatMap::identity(&a)).collect();
        self.uncurry(&Curried { fibers, maps })
    }

    pub fn kappa_map(&self, phi: &NatMap) -> Result<NatMap, Error> {
        let (a, b) = (self.kappa(phi.src())?, self.kappa(phi.tgt())?);
        let nd = self.delta.n_objects();
        let comp = (0..self.product.n_objects()).map(|p| phi.comp(p % nd).clone()).collect();
        NatMap::new(a, b, comp)
    }

    pub fn colim(&self, f: &Rep) -> Result<BaseColim, Error> {
        let curried = self.curry(f)?;
        let data = limits::colim(&self.sigma, &curried)?;
        let apex = data.apex.clone();
        let k = self.kappa(&apex)?;
        let rho = self.uncurry_map(f, &k, &data.legs)?;
        Ok(BaseColim { apex, rho, data, curried })
    }

    pub fn lim(&self, f: &Rep) -> Result<BaseLim, Error> {
        let curried = self.curry(f)?;
        let data = limits::lim(&self.sigma, &curried)?;
        let apex = data.apex.clone();
        let k = self.kappa(&apex)?;
        let pi = self.uncurry_map(&k, f, &data.legs)?;
        Ok(BaseLim { apex, pi, data, curried })
    }

    /// `colim_Σ(φ)` for `φ: F → G`.
    pub fn colim_map(&self, phi: &NatMap, from: &BaseColim, to: &BaseColim) -> Result<NatMap, Error> {
        let legs = self.curry_map(&to.rho.after(phi)?)?;
        let x = to.apex.clone();
        let cocone: Vec<NatMap> = legs.into_iter().map(|l| retarget(l, &x)).collect();
        from.data.induced(&self.sigma, &from.curried, &cocone)
    }

    pub fn lim_map(&self, phi: &NatMap, from: &BaseLim, to: &BaseLim) -> Result<NatMap, Error> {
        let legs = self.curry_map(&phi.after(&from.pi)?)?;
        let x = from.apex.clone();
        let cone: Vec<NatMap> = legs.into_iter().map(|l| resource(l, &x)).collect();
        to.data.induced(&self.sigma, &to.curried, &cone)
    }

    /// The map `colim F → X` induced by a cocone `c: F → κ(X)`.
    pub fn induced_from_cocone(&self, c: &BaseColim, x: &Rep, cocone: &NatMap) -> Result<NatMap, Error> {
        let x = self.base(x)?;
        let legs: Vec<NatMap> = self.curry_map(cocone)?.into_iter().map(|l| retarget(l, &x)).collect();
        c.data.induced(&self.sigma, &c.curried, &legs)
    }

    /// The map `X → lim F` induced by a cone `c: κ(X) → F`.
    pub fn induced_to_cone(&self, l: &BaseLim, x: &Rep, cone: &NatMap) -> Result<NatMap, Error> {
        let x = self.base(x)?;
        let legs: Vec<NatMap> = self.curry_map(cone)?.into_iter().map(|l| resource(l, &x)).collect();
        l.data.induced(&self.sigma, &l.curried, &legs)
    }

    /// `∇^A: colim κ(A) → A`.
    pub fn codiagonal(&self, a: &Rep) -> Result<(BaseColim, NatMap), Error> {
        let k = self.kappa(a)?;
        let c = self.colim(&k)?;
        let id = NatMap::identity(&k);
        let nabla = self.induced_from_cocone(&c, a, &id)?;
        Ok((c, nabla))
    }

    /// `Δ^A: A → lim κ(A)`.
    pub fn diagonal(&self, a: &Rep) -> Result<(BaseLim, NatMap), Error> {
        let k = self.kappa(a)?;
        let l = self.lim(&k)?;
        let id = NatMap::identity(&k);
        let diag = self.induced_to_cone(&l, a, &id)?;
        Ok((l, diag))
    }

    /// The same diagrams with `Σ` and `Δ` both replaced by their opposites.
    pub fn opposite(&self) -> Diagrams {
        Diagrams::new(Arc::new(self.sigma.opposite()), Arc::new(self.delta.opposite()), self.field)
    }
}

/// Reattaches a leg to an equal target value (components are unchanged).
fn retarget(l: NatMap, x: &Rep) -> NatMap {
    let comps = l.comps().to_vec();
    NatMap::new_unchecked(l.src().clone(), x.clone(), comps)
}

fn resource(l: NatMap, x: &Rep) -> NatMap {
    let comps = l.comps().to_vec();
    NatMap::new_unchecked(x.clone(), l.tgt().clone(), comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Mat;
    use crate::fincat::shapes;
    use alloc::vec;

    const Q: Field = Field::Rationals;

    fn k_over_point() -> (Diagrams, Rep) {
        let point = Arc::new(shapes::point());
        let k = Rep::new(point.clone(), Q, vec![1], vec![Mat::identity(Q, 1)]).unwrap();
        (Diagrams::new(Arc::new(shapes::span()), point, Q), k)
    }

    #[test]
    fn colim_of_constant_over_span_is_k() {
        let (d, k) = k_over_point();
        let c = d.colim(&d.kappa(&k).unwrap()).unwrap();
        assert_eq!(c.apex.dims(), &[1]);
        let (_, nabla) = d.codiagonal(&k).unwrap();
        assert!(nabla.is_iso());
    }

    #[test]
    fn colim_over_discrete_is_sum() {
        let point = Arc::new(shapes::point());
        let k = Rep::new(point.clone(), Q, vec![1], vec![Mat::identity(Q, 1)]).unwrap();
        let d = Diagrams::new(Arc::new(shapes::discrete(2)), point, Q);
        let c = d.colim(&d.kappa(&k).unwrap()).unwrap();
        assert_eq!(c.apex.dims(), &[2]);
        let l = d.lim(&d.kappa(&k).unwrap()).unwrap();
        assert_eq!(l.apex.dims(), &[2]);
        let (_, nabla) = d.codiagonal(&k).unwrap();
        assert_eq!(nabla.comp(0), &Mat::from_i64(Q, 1, 2, &[1, 1]));
    }

    #[test]
    fn lim_of_constant_over_span_is_k() {
        let (d, k) = k_over_point();
        let l = d.lim(&d.kappa(&k).unwrap()).unwrap();
        assert_eq!(l.apex.dims(), &[1]);
        let (_, diag) = d.diagonal(&k).unwrap();
        assert!(diag.is_iso());
    }
}
