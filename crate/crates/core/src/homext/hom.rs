//! Hom spaces as solution spaces of the naturality equations, representable
//! functors, Yoneda maps, and the split tests for projectivity.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::{Field, Mat, Scalar};
use crate::fincat::FinCat;
use crate::rep::{direct_sum_many, NatMap, Rep};

/// `Hom(F, G)` with a basis of natural maps.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub src: Rep,
    pub tgt: Rep,
    pub basis: Vec<NatMap>,
    /// Columns are the flattened basis maps.
    coords: Mat,
}

/// Offsets of each component inside a flattened natural map.
fn offsets(f: &Rep, g: &Rep) -> Vec<usize> {
    let mut out = Vec::with_capacity(f.dims().len() + 1);
    let mut at = 0;
    out.push(0);
    for o in 0..f.dims().len() {
        at += g.dim(o) * f.dim(o);
        out.push(at);
    }
    out
}

/// The naturality equations on flattened maps `F → G`: one row per
/// non-identity morphism `λ: i → j` and entry `(r, c)` of `G(λ)X_i − X_jF(λ)`.
pub fn hom_system(f: &Rep, g: &Rep) -> Mat {
    let cat = f.cat();
    let field = f.field();
    let off = offsets(f, g);
    let nvars = off[off.len() - 1];
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for m in cat.non_identities() {
        let (i, j) = (cat.src(m), cat.tgt(m));
        let (fl, gl) = (f.action(m), g.action(m));
        for r in 0..g.dim(j) {
            for c in 0..f.dim(i) {
                let mut row = vec![field.zero(); nvars];
                for t in 0..g.dim(i) {
                    let v = off[i] + t * f.dim(i) + c;
                    row[v] = field.add(&row[v], gl.get(r, t));
                }
                for t in 0..f.dim(j) {
                    let v = off[j] + r * f.dim(j) + t;
                    row[v] = field.sub(&row[v], fl.get(t, c));
                }
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        return Mat::zeros(field, 0, nvars);
    }
    Mat::from_rows(field, &rows).expect("rows have equal length")
}

pub fn hom_space(f: &Rep, g: &Rep) -> Result<HomSpace, Error> {
    f.ensure_compatible(g)?;
    let coords = hom_system(f, g).kernel();
    let basis = (0..coords.cols())
        .map(|k| NatMap::from_flat(f, g, &coords.col(k)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(HomSpace { src: f.clone(), tgt: g.clone(), basis, coords })
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of `phi` in the basis.
    pub fn coords(&self, phi: &NatMap) -> Result<Vec<Scalar>, Error> {
        let v = Mat::column(self.src.field(), phi.flatten());
        let x = self
            .coords
            .solve(&v)?
            .ok_or(Error::NotNatural("map is not in this Hom space".into()))?;
        Ok(x.col(0))
    }

    pub fn combine(&self, coords: &[Scalar]) -> Result<NatMap, Error> {
        let field = self.src.field();
        let x = Mat::column(field, coords.to_vec());
        let flat = (&self.coords * &x).col(0);
        NatMap::from_flat(&self.src, &self.tgt, &flat)
    }

    /// Solves `Σ c_k L(b_k) = target` for a linear `L` given on the basis,
    /// returning a natural map or the certificate row of the failed system.
    pub fn solve_affine(
        &self,
        images: impl Fn(&NatMap) -> Result<Vec<Scalar>, Error>,
        target: Vec<Scalar>,
    ) -> Result<Result<NatMap, Mat>, Error> {
        let field = self.src.field();
        let cols = self.basis.iter().map(&images).collect::<Result<Vec<_>, _>>()?;
        let n = target.len();
        let a = Mat::from_fn(field, n, cols.len(), |r, c| cols[c][r].clone());
        match a.solve_or_certificate(&Mat::column(field, target))? {
            Ok(x) => Ok(Ok(self.combine(&x.col(0))?)),
            Err(cert) => Ok(Err(cert)),
        }
    }
}

/// The representable `R_i = k[c(i, −)]`, basis at `j` indexed by `c.hom(i, j)`.
pub fn representable(cat: &Arc<FinCat>, i: usize, field: Field) -> Rep {
    let dims: Vec<usize> = (0..cat.n_objects()).map(|j| cat.hom(i, j).len()).collect();
    let action = (0..cat.n_morphisms())
        .map(|m| {
            let (j, k) = (cat.src(m), cat.tgt(m));
            let (from, to) = (cat.hom(i, j), cat.hom(i, k));
            Mat::from_fn(field, to.len(), from.len(), |r, c| {
                let composite = cat.compose(m, from[c]).expect("composable by construction");
                if to[r] == composite { field.one() } else { field.zero() }
            })
        })
        .collect();
    Rep::new_unchecked(cat.clone(), field, dims, action)
}

/// The map `R_i → F` sending `id_i` to the vector `v ∈ F(i)`.
pub fn yoneda_map(r: &Rep, i: usize, f: &Rep, v: &Mat) -> NatMap {
    let cat = f.cat();
    let field = f.field();
    let comp = (0..cat.n_objects())
        .map(|j| {
            let hom = cat.hom(i, j);
            let blocks: Vec<Mat> = hom.iter().map(|&m| f.action(m) * v).collect();
            Mat::hstack_all(field, f.dim(j), &blocks)
        })
        .collect();
    NatMap::new_unchecked(r.clone(), f.clone(), comp)
}

/// The canonical epimorphism `P = ⊕_i R_i^{dim F(i)} ↠ F` from a free object.
#[derive(Clone, Debug)]
pub struct FreeCover {
    pub free: Rep,
    pub epi: NatMap,
    /// Generator `(object, basis index)` of each summand, in order.
    pub gens: Vec<(usize, usize)>,
    pub injections: Vec<NatMap>,
    pub projections: Vec<NatMap>,
}

/// `⊕ R_o` over the listed objects (with repetition), zero if empty.
pub fn free_on(cat: &Arc<FinCat>, field: Field, objects: &[usize]) -> (Rep, Vec<NatMap>, Vec<NatMap>) {
    if objects.is_empty() {
        return (Rep::zero(cat.clone(), field), Vec::new(), Vec::new());
    }
    let reps: Vec<Rep> = objects.iter().map(|&o| representable(cat, o, field)).collect();
    direct_sum_many(&reps).expect("summands share a category")
}

/// Sum of maps out of a direct sum given on each summand.
pub fn from_summands(src: &Rep, tgt: &Rep, legs: &[NatMap], projections: &[NatMap]) -> Result<NatMap, Error> {
    let mut total = NatMap::zero(src, tgt);
    for (leg, p) in legs.iter().zip(projections) {
        total = total.add(&leg.after(p)?)?;
    }
    Ok(total)
}

pub fn free_cover(f: &Rep) -> Result<FreeCover, Error> {
    let cat = f.cat();
    let field = f.field();
    let gens: Vec<(usize, usize)> =
        (0..cat.n_objects()).flat_map(|o| (0..f.dim(o)).map(move |k| (o, k))).collect();
    let objects: Vec<usize> = gens.iter().map(|g| g.0).collect();
    let (free, injections, projections) = free_on(cat, field, &objects);
    let legs: Vec<NatMap> = gens
        .iter()
        .zip(&injections)
        .map(|(&(o, k), inj)| yoneda_map(inj.src(), o, f, &Mat::unit(field, f.dim(o), k)))
        .collect();
    let epi = from_summands(&free, f, &legs, &projections)?;
    Ok(FreeCover { free, epi, gens, injections, projections })
}

/// Outcome of a split test: a splitting, or a linear certificate that none exists.
#[derive(Clone, Debug)]
pub enum SplitWitness {
    Section(NatMap),
    Obstruction(Mat),
}

#[derive(Clone, Debug)]
pub struct SplitTest {
    pub holds: bool,
    pub witness: SplitWitness,
}

/// Looks for `s: C → B` with `e ∘ s = id_C`.
pub fn find_section(e: &NatMap) -> Result<SplitTest, Error> {
    let h = hom_space(e.tgt(), e.src())?;
    let target = NatMap::identity(e.tgt()).flatten();
    Ok(match h.solve_affine(|b| Ok(e.after(b)?.flatten()), target)? {
        Ok(s) => SplitTest { holds: true, witness: SplitWitness::Section(s) },
        Err(c) => SplitTest { holds: false, witness: SplitWitness::Obstruction(c) },
    })
}

/// Looks for `r: B → A` with `r ∘ m = id_A`.
pub fn find_retraction(m: &NatMap) -> Result<SplitTest, Error> {
    let h = hom_space(m.tgt(), m.src())?;
    let target = NatMap::identity(m.src()).flatten();
    Ok(match h.solve_affine(|b| Ok(b.after(m)?.flatten()), target)? {
        Ok(r) => SplitTest { holds: true, witness: SplitWitness::Section(r) },
        Err(c) => SplitTest { holds: false, witness: SplitWitness::Obstruction(c) },
    })
}

/// `F` is projective iff its free cover splits.
pub fn is_projective(f: &Rep) -> Result<SplitTest, Error> {
    find_section(&free_cover(f)?.epi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::shapes;

    const Q: Field = Field::Rationals;

    #[test]
    fn representables_of_small_shapes() {
        let a2 = Arc::new(shapes::a2());
        let r1 = representable(&a2, 0, Q);
        assert_eq!(r1.dims(), &[1, 1]);
        assert_eq!(r1.action(a2.morphism_index("a").unwrap()), &Mat::identity(Q, 1));
        let span = Arc::new(shapes::span());
        assert_eq!(representable(&span, 0, Q).dims(), &[1, 1, 1]);
        let bc2 = Arc::new(shapes::cyclic_group(2));
        assert_eq!(representable(&bc2, 0, Q).dims(), &[2]);
    }

    #[test]
    fn yoneda_dimension_count() {
        let span = Arc::new(shapes::span());
        let f = Rep::from_generators(
            span.clone(),
            Q,
            vec![2, 1, 1],
            vec![(1, Mat::from_i64(Q, 1, 2, &[1, 0])), (2, Mat::from_i64(Q, 1, 2, &[0, 1]))],
        )
        .unwrap();
        for i in 0..3 {
            let r = representable(&span, i, Q);
            assert_eq!(hom_space(&r, &f).unwrap().dim(), f.dim(i));
        }
    }

    #[test]
    fn simple_to_simple_over_a2_is_zero() {
        let a2 = Arc::new(shapes::a2());
        let s1 = Rep::from_generators(a2.clone(), Q, vec![1, 0], vec![(1, Mat::zeros(Q, 0, 1))]).unwrap();
        let s2 = Rep::from_generators(a2.clone(), Q, vec![0, 1], vec![(1, Mat::zeros(Q, 1, 0))]).unwrap();
        assert_eq!(hom_space(&s1, &s2).unwrap().dim(), 0);
    }

    #[test]
    fn constant_over_span_has_one_dimensional_endomorphisms() {
        let span = Arc::new(shapes::span());
        let k = Rep::new(span, Q, vec![1; 3], vec![Mat::identity(Q, 1); 5]).unwrap();
        assert_eq!(hom_space(&k, &k).unwrap().dim(), 1);
    }

    #[test]
    fn free_cover_is_onto_and_representables_split() {
        let span = Arc::new(shapes::span());
        let k = Rep::new(span.clone(), Q, vec![1; 3], vec![Mat::identity(Q, 1); 5]).unwrap();
        assert!(free_cover(&k).unwrap().epi.is_epi());
        // κ(k) over the span is the representable at the initial object.
        assert!(is_projective(&k).unwrap().holds);
        let ra = representable(&span, 1, Q);
        assert!(is_projective(&ra).unwrap().holds);
        let s_c = Rep::from_generators(span, Q, vec![1, 0, 0], vec![(1, Mat::zeros(Q, 0, 1)), (2, Mat::zeros(Q, 0, 1))]).unwrap();
        let t = is_projective(&s_c).unwrap();
        assert!(!t.holds);
        assert!(matches!(t.witness, SplitWitness::Obstruction(_)));
    }
}
