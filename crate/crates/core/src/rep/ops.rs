//! Pointwise constructions: direct sums, kernels, cokernels, images,
//! pushouts and pullbacks, each with its universal maps.

use alloc::vec::Vec;

use super::{NatMap, Rep};
use crate::error::Error;
use crate::exact::Mat;

pub struct DirectSum {
    pub sum: Rep,
    pub inj1: NatMap,
    pub inj2: NatMap,
    pub proj1: NatMap,
    pub proj2: NatMap,
}

/// `F ⊕ G` with its injections and projections.
pub fn direct_sum(f: &Rep, g: &Rep) -> Result<DirectSum, Error> {
    let (sum, mut inj, mut proj) = direct_sum_many(&[f.clone(), g.clone()])?;
    let (inj2, proj2) = (inj.pop().unwrap(), proj.pop().unwrap());
    let (inj1, proj1) = (inj.pop().unwrap(), proj.pop().unwrap());
    Ok(DirectSum { sum, inj1, inj2, proj1, proj2 })
}

/// `⊕ reps` with the injections and projections, summands stacked in order.
pub fn direct_sum_many(reps: &[Rep]) -> Result<(Rep, Vec<NatMap>, Vec<NatMap>), Error> {
    let first = reps.first().ok_or(Error::Internal("empty direct sum".into()))?;
    for r in reps {
        first.ensure_compatible(r)?;
    }
    let cat = first.cat.clone();
    let field = first.field;
    let dims: Vec<usize> = (0..cat.n_objects()).map(|o| reps.iter().map(|r| r.dim(o)).sum()).collect();
    let action = (0..cat.n_morphisms())
        .map(|m| {
            reps.iter()
                .map(|r| r.action(m).clone())
                .reduce(|a, b| a.block_diag(&b))
                .unwrap()
        })
        .collect();
    let sum = Rep::new_unchecked(cat.clone(), field, dims.clone(), action);
    let mut inj = Vec::with_capacity(reps.len());
    let mut proj = Vec::with_capacity(reps.len());
    let mut offsets = alloc::vec![0usize; cat.n_objects()];
    for r in reps {
        let mut ic = Vec::with_capacity(cat.n_objects());
        let mut pc = Vec::with_capacity(cat.n_objects());
        for o in 0..cat.n_objects() {
            let off = offsets[o];
            let d = r.dim(o);
            let i = Mat::from_fn(field, dims[o], d, |a, b| {
                if a == off + b { field.one() } else { field.zero() }
            });
            pc.push(i.transpose());
            ic.push(i);
            offsets[o] += d;
        }
        inj.push(NatMap::new_unchecked(r.clone(), sum.clone(), ic));
        proj.push(NatMap::new_unchecked(sum.clone(), r.clone(), pc));
    }
    Ok((sum, inj, proj))
}

/// The subrepresentation of `g` spanned at each object by the columns of
/// `bases[o]` (which must be linearly independent and stable under `g`),
/// with its inclusion.
pub fn sub_rep(g: &Rep, bases: Vec<Mat>) -> Result<NatMap, Error> {
    let cat = g.cat.clone();
    let mut action = Vec::with_capacity(cat.n_morphisms());
    for m in 0..cat.n_morphisms() {
        let (i, j) = (cat.src(m), cat.tgt(m));
        let image = g.action(m) * &bases[i];
        match bases[j].solve(&image)? {
            Some(x) => action.push(x),
            None => return Err(Error::Internal("subspace is not stable".into())),
        }
    }
    let dims = bases.iter().map(Mat::cols).collect();
    let sub = Rep::new_unchecked(cat, g.field, dims, action);
    Ok(NatMap::new_unchecked(sub, g.clone(), bases))
}

/// The quotient of `g` by the common kernel of `quots[o]` (each surjective
/// and compatible with `g`), with the projection.
pub fn quotient_rep(g: &Rep, quots: Vec<Mat>) -> Result<NatMap, Error> {
    let cat = g.cat.clone();
    let mut action = Vec::with_capacity(cat.n_morphisms());
    for m in 0..cat.n_morphisms() {
        let (i, j) = (cat.src(m), cat.tgt(m));
        let section = quots[i]
            .right_inverse()
            .ok_or(Error::Internal("quotient map is not surjective".into()))?;
        action.push(&(&quots[j] * g.action(m)) * &section);
    }
    let dims = quots.iter().map(Mat::rows).collect();
    let q = Rep::new_unchecked(cat, g.field, dims, action);
    Ok(NatMap::new_unchecked(g.clone(), q, quots))
}

/// `ker φ ↪ src(φ)`.
pub fn ker_nat(phi: &NatMap) -> Result<NatMap, Error> {
    sub_rep(phi.src(), phi.comps().iter().map(Mat::kernel).collect())
}

/// `tgt(φ) ↠ coker φ`.
pub fn coker_nat(phi: &NatMap) -> Result<NatMap, Error> {
    quotient_rep(phi.tgt(), phi.comps().iter().map(Mat::cokernel).collect())
}

/// `im φ ↪ tgt(φ)`, using the pivot columns of each component as basis.
pub fn image_nat(phi: &NatMap) -> Result<NatMap, Error> {
    let bases = phi.comps().iter().map(|c| c.select_cols(&c.echelon().pivots)).collect();
    sub_rep(phi.tgt(), bases)
}

pub struct Pushout {
    pub apex: Rep,
    /// `B → P`
    pub to_left: NatMap,
    /// `C → P`
    pub to_right: NatMap,
    quotient: NatMap,
}

impl Pushout {
    /// The unique `P → X` restricting to `u` on `B` and `v` on `C`.
    pub fn mediator(&self, u: &NatMap, v: &NatMap) -> Result<NatMap, Error> {
        let field = self.apex.field;
        let mut comp = Vec::with_capacity(u.comps().len());
        for o in 0..u.comps().len() {
            let q = self.quotient.comp(o);
            let pair = u.comp(o).hstack(v.comp(o));
            let section = q.right_inverse().unwrap_or_else(|| Mat::zeros(field, q.cols(), q.rows()));
            comp.push(&pair * &section);
        }
        NatMap::new(self.apex.clone(), u.tgt().clone(), comp)
    }
}

/// Pushout of `f: A → B` and `g: A → C`, computed as `coker(f, −g)`.
pub fn pushout_nat(f: &NatMap, g: &NatMap) -> Result<Pushout, Error> {
    if f.src() != g.src() {
        return Err(Error::CategoryMismatch);
    }
    let ds = direct_sum(f.tgt(), g.tgt())?;
    let n = f.comps().len();
    let comp = (0..n).map(|o| f.comp(o).vstack(&-g.comp(o))).collect();
    let pair = NatMap::new_unchecked(f.src().clone(), ds.sum.clone(), comp);
    let quotient = coker_nat(&pair)?;
    let to_left = quotient.after(&ds.inj1)?;
    let to_right = quotient.after(&ds.inj2)?;
    Ok(Pushout { apex: quotient.tgt().clone(), to_left, to_right, quotient })
}

pub struct Pullback {
    pub apex: Rep,
    /// `P → B`
    pub from_left: NatMap,
    /// `P → C`
    pub from_right: NatMap,
    inclusion: NatMap,
}

impl Pullback {
    /// The unique `X → P` whose composites with the projections are `u`, `v`.
    pub fn mediator(&self, u: &NatMap, v: &NatMap) -> Result<NatMap, Error> {
        let mut comp = Vec::with_capacity(u.comps().len());
        for o in 0..u.comps().len() {
            let stacked = u.comp(o).vstack(v.comp(o));
            let x = self
                .inclusion
                .comp(o)
                .solve(&stacked)?
                .ok_or(Error::NotACone("maps do not agree over the base".into()))?;
            comp.push(x);
        }
        NatMap::new(u.src().clone(), self.apex.clone(), comp)
    }
}

/// Pullback of `f: B → D` and `g: C → D`, computed as `ker(f, −g)`.
pub fn pullback_nat(f: &NatMap, g: &NatMap) -> Result<Pullback, Error> {
    if f.tgt() != g.tgt() {
        return Err(Error::CategoryMismatch);
    }
    let ds = direct_sum(f.src(), g.src())?;
    let n = f.comps().len();
    let comp = (0..n).map(|o| f.comp(o).hstack(&-g.comp(o))).collect();
    let pair = NatMap::new_unchecked(ds.sum.clone(), f.tgt().clone(), comp);
    let inclusion = ker_nat(&pair)?;
    let from_left = ds.proj1.after(&inclusion)?;
    let from_right = ds.proj2.after(&inclusion)?;
    Ok(Pullback { apex: inclusion.src().clone(), from_left, from_right, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;
    use crate::fincat::shapes;
    use alloc::sync::Arc;
    use alloc::vec;

    const Q: Field = Field::Rationals;

    fn a2_rep(d1: usize, d2: usize, a: Mat) -> Rep {
        let cat = Arc::new(shapes::a2());
        let ai = cat.morphism_index("a").unwrap();
        Rep::from_generators(cat, Q, vec![d1, d2], vec![(ai, a)]).unwrap()
    }

    #[test]
    fn kernel_and_cokernel_of_projection() {
        // R_1 = (k → k) maps onto S_1 = (k → 0).
        let r1 = a2_rep(1, 1, Mat::identity(Q, 1));
        let s1 = a2_rep(1, 0, Mat::zeros(Q, 0, 1));
        let phi = NatMap::new(r1.clone(), s1.clone(), vec![Mat::identity(Q, 1), Mat::zeros(Q, 0, 1)]).unwrap();
        let k = ker_nat(&phi).unwrap();
        assert_eq!(k.src().dims(), &[0, 1]);
        let c = coker_nat(&phi).unwrap();
        assert!(c.tgt().is_zero());
        let im = image_nat(&phi).unwrap();
        assert_eq!(im.src().dims(), &[1, 0]);
    }

    #[test]
    fn pushout_of_two_inclusions_of_s2() {
        let r1 = a2_rep(1, 1, Mat::identity(Q, 1));
        let s2 = a2_rep(0, 1, Mat::zeros(Q, 1, 0));
        let inc = NatMap::new(s2.clone(), r1.clone(), vec![Mat::zeros(Q, 1, 0), Mat::identity(Q, 1)]).unwrap();
        let po = pushout_nat(&inc, &inc).unwrap();
        assert_eq!(po.apex.dims(), &[2, 1]);
        let id = NatMap::identity(&r1);
        let m = po.mediator(&id, &id).unwrap();
        assert_eq!(m.after(&po.to_left).unwrap(), id);
        assert_eq!(m.after(&po.to_right).unwrap(), id);
    }

    #[test]
    fn pullback_of_identity_is_diagonal() {
        let r1 = a2_rep(1, 1, Mat::identity(Q, 1));
        let id = NatMap::identity(&r1);
        let pb = pullback_nat(&id, &id).unwrap();
        assert_eq!(pb.apex.dims(), &[1, 1]);
        let m = pb.mediator(&id, &id).unwrap();
        assert!(m.is_iso());
    }
}
