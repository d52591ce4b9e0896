//! `Ext¹(M, N)` from the free presentation `0 → K → P → M → 0`, with
//! classification of extensions and realization of classes.

use alloc::vec::Vec;

use super::hom::{find_section, free_cover, hom_space, yoneda_map, FreeCover, HomSpace, SplitTest};
use crate::error::Error;
use crate::exact::{Mat, Scalar};
use crate::rep::{ker_nat, pullback_nat, pushout_nat, NatMap, Rep, Ses};

/// `Ext¹(M, N) ≅ coker(Hom(P, N) → Hom(K, N))`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub m: Rep,
    pub n: Rep,
    cover: FreeCover,
    /// `K ↪ P`
    incl: NatMap,
    hom_k: HomSpace,
    /// Restriction `Hom(P, N) → Hom(K, N)` in the Yoneda basis of `Hom(P, N)`.
    restriction: Mat,
    /// `Hom(K, N)`-coordinates ↦ class coordinates.
    quotient: Mat,
    /// Class coordinates ↦ a representing cocycle.
    section: Mat,
}

/// A class in `Ext¹(M, N)` given by coordinates in the chosen basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtClass {
    pub coords: Vec<Scalar>,
}

pub fn ext1(m: &Rep, n: &Rep) -> Result<ExtSpace, Error> {
    m.ensure_compatible(n)?;
    let field = m.field();
    let cover = free_cover(m)?;
    let incl = ker_nat(&cover.epi)?;
    let hom_k = hom_space(incl.src(), n)?;
    // Restrictions of the Yoneda basis of Hom(P, N).
    let mut cols: Vec<Vec<Scalar>> = Vec::new();
    for (g, &(o, _)) in cover.gens.iter().enumerate() {
        let r = cover.injections[g].src();
        for t in 0..n.dim(o) {
            let y = yoneda_map(r, o, n, &Mat::unit(field, n.dim(o), t));
            let b = y.after(&cover.projections[g])?.after(&incl)?;
            cols.push(hom_k.coords(&b)?);
        }
    }
    let restriction = Mat::from_fn(field, hom_k.dim(), cols.len(), |r, c| cols[c][r].clone());
    let quotient = restriction.cokernel();
    let section = quotient
        .right_inverse()
        .ok_or(Error::Internal("cokernel map is not onto".into()))?;
    Ok(ExtSpace { m: m.clone(), n: n.clone(), cover, incl, hom_k, restriction, quotient, section })
}

impl ExtSpace {
    pub fn dim(&self) -> usize {
        self.quotient.rows()
    }

    pub fn zero(&self) -> ExtClass {
        ExtClass { coords: (0..self.dim()).map(|_| self.m.field().zero()).collect() }
    }

    pub fn basis_class(&self, k: usize) -> ExtClass {
        ExtClass { coords: Mat::unit(self.m.field(), self.dim(), k).col(0) }
    }

    pub fn is_zero(&self, x: &ExtClass) -> bool {
        x.coords.iter().all(|c| self.m.field().is_zero(c))
    }

    /// The extension obtained by pushing `0 → K → P → M → 0` along a cocycle.
    pub fn realize(&self, x: &ExtClass) -> Result<Ses, Error> {
        if x.coords.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: (self.dim(), 1), found: (x.coords.len(), 1) });
        }
        let field = self.m.field();
        let cocycle = &self.section * &Mat::column(field, x.coords.clone());
        let h = self.hom_k.combine(&cocycle.col(0))?;
        self.realize_cocycle(&h)
    }

    /// Number of coefficients accepted by [`ExtSpace::realize_shifted`].
    pub fn coboundary_dim(&self) -> usize {
        self.restriction.cols()
    }

    /// Realizes `x` from its standard cocycle plus the coboundary with the
    /// given coefficients, which yields an equivalent but different sequence.
    pub fn realize_shifted(&self, x: &ExtClass, shift: &[Scalar]) -> Result<Ses, Error> {
        if x.coords.len() != self.dim() || shift.len() != self.coboundary_dim() {
            return Err(Error::DimensionMismatch {
                expected: (self.dim(), self.coboundary_dim()),
                found: (x.coords.len(), shift.len()),
            });
        }
        let field = self.m.field();
        let cocycle = &(&self.section * &Mat::column(field, x.coords.clone()))
            + &(&self.restriction * &Mat::column(field, shift.to_vec()));
        let h = self.hom_k.combine(&cocycle.col(0))?;
        self.realize_cocycle(&h)
    }

    fn realize_cocycle(&self, h: &NatMap) -> Result<Ses, Error> {
        let po = pushout_nat(&self.incl, h)?;
        let zero = NatMap::zero(&self.n, &self.m);
        let epi = po.mediator(&self.cover.epi, &zero)?;
        Ses::new(po.to_right, epi)
    }

    /// The class of an extension `0 → N → E → M → 0`.
    pub fn classify(&self, s: &Ses) -> Result<ExtClass, Error> {
        if s.sub() != &self.n || s.quotient() != &self.m {
            return Err(Error::NotExact("end terms differ from this Ext space".into()));
        }
        let field = self.m.field();
        let e = s.middle();
        // Lift each generator of P through E ↠ M.
        let mut legs = Vec::with_capacity(self.cover.gens.len());
        for (g, &(o, k)) in self.cover.gens.iter().enumerate() {
            let target = Mat::unit(field, self.m.dim(o), k);
            let v = s
                .epi()
                .comp(o)
                .solve(&target)?
                .ok_or(Error::Internal("epimorphism is not onto".into()))?;
            legs.push(yoneda_map(self.cover.injections[g].src(), o, e, &v));
        }
        let lift = super::hom::from_summands(&self.cover.free, e, &legs, &self.cover.projections)?;
        let restricted = lift.after(&self.incl)?;
        let mut comp = Vec::with_capacity(e.dims().len());
        for o in 0..e.dims().len() {
            let x = s
                .mono()
                .comp(o)
                .solve(restricted.comp(o))?
                .ok_or(Error::Internal("lift does not restrict into the kernel".into()))?;
            comp.push(x);
        }
        let h = NatMap::new(self.incl.src().clone(), self.n.clone(), comp)?;
        let c = Mat::column(field, self.hom_k.coords(&h)?);
        Ok(ExtClass { coords: (&self.quotient * &c).col(0) })
    }

    /// The matrix (columns = images of basis classes) of a linear map into
    /// another Ext space defined on sequences.
    pub fn map_matrix(
        &self,
        target: &ExtSpace,
        on_sequences: impl Fn(&Ses) -> Result<Ses, Error>,
    ) -> Result<Mat, Error> {
        let field = self.m.field();
        let cols = (0..self.dim())
            .map(|k| {
                let s = self.realize(&self.basis_class(k))?;
                Ok(target.classify(&on_sequences(&s)?)?.coords)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        Ok(Mat::from_fn(field, target.dim(), self.dim(), |r, c| cols[c][r].clone()))
    }
}

/// Whether `0 → A → B → C → 0` splits, with a section or an obstruction.
pub fn splits(s: &Ses) -> Result<SplitTest, Error> {
    find_section(s.epi())
}

/// An isomorphism `θ: E₁ → E₂` with `θ∘m₁ = m₂` and `e₂∘θ = e₁`, if any.
pub fn equivalence(s1: &Ses, s2: &Ses) -> Result<Option<NatMap>, Error> {
    if s1.sub() != s2.sub() || s1.quotient() != s2.quotient() {
        return Ok(None);
    }
    let h = hom_space(s1.middle(), s2.middle())?;
    let mut target = s2.mono().flatten();
    target.extend(s1.epi().flatten());
    let found = h.solve_affine(
        |b| {
            let mut v = b.after(s1.mono())?.flatten();
            v.extend(s2.epi().after(b)?.flatten());
            Ok(v)
        },
        target,
    )?;
    Ok(found.ok())
}

/// `0 → N → E ×_M M' → M' → 0` for `t: M' → M`.
pub fn pullback_ses(s: &Ses, t: &NatMap) -> Result<Ses, Error> {
    let pb = pullback_nat(s.epi(), t)?;
    let zero = NatMap::zero(s.sub(), t.src());
    let mono = pb.mediator(s.mono(), &zero)?;
    Ses::new(mono, pb.from_right)
}

/// `0 → N' → N' ⊔_N E → M → 0` for `a: N → N'`.
pub fn pushout_ses(s: &Ses, a: &NatMap) -> Result<Ses, Error> {
    let po = pushout_nat(s.mono(), a)?;
    let zero = NatMap::zero(a.tgt(), s.quotient());
    let epi = po.mediator(s.epi(), &zero)?;
    Ses::new(po.to_right, epi)
}

/// `Ext¹(t, N): Ext¹(M, N) → Ext¹(M', N)` for `t: M' → M`.
pub fn ext_map_first(t: &NatMap, from: &ExtSpace, to: &ExtSpace) -> Result<Mat, Error> {
    from.map_matrix(to, |s| pullback_ses(s, t))
}

/// `Ext¹(M, a): Ext¹(M, N) → Ext¹(M, N')` for `a: N → N'`.
pub fn ext_map_second(a: &NatMap, from: &ExtSpace, to: &ExtSpace) -> Result<Mat, Error> {
    from.map_matrix(to, |s| pushout_ses(s, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Field;
    use crate::fincat::shapes;
    use crate::homext::hom::representable;
    use alloc::sync::Arc;
    use alloc::vec;

    const Q: Field = Field::Rationals;

    fn simples_a2(field: Field) -> (Rep, Rep) {
        let a2 = Arc::new(shapes::a2());
        let s1 = Rep::from_generators(a2.clone(), field, vec![1, 0], vec![(1, Mat::zeros(field, 0, 1))]).unwrap();
        let s2 = Rep::from_generators(a2, field, vec![0, 1], vec![(1, Mat::zeros(field, 1, 0))]).unwrap();
        (s1, s2)
    }

    #[test]
    fn ext_between_simples_of_a2() {
        let (s1, s2) = simples_a2(Q);
        // 0 → S_2 → R_1 → S_1 → 0 is the only non-split extension.
        assert_eq!(ext1(&s1, &s2).unwrap().dim(), 1);
        assert_eq!(ext1(&s2, &s1).unwrap().dim(), 0);
        assert_eq!(ext1(&s1, &s1).unwrap().dim(), 0);
    }

    #[test]
    fn trivial_module_of_c2() {
        let bc2 = Arc::new(shapes::cyclic_group(2));
        for (field, expected) in [(Field::prime(2).unwrap(), 1), (Q, 0)] {
            let k = Rep::new(bc2.clone(), field, vec![1], vec![Mat::identity(field, 1); 2]).unwrap();
            assert_eq!(ext1(&k, &k).unwrap().dim(), expected);
        }
    }

    #[test]
    fn realize_then_classify_is_identity() {
        let (s1, s2) = simples_a2(Q);
        let e = ext1(&s1, &s2).unwrap();
        let x = ExtClass { coords: vec![Q.from_i64(3)] };
        let s = e.realize(&x).unwrap();
        assert_eq!(s.middle().dims(), &[1, 1]);
        assert!(!splits(&s).unwrap().holds);
        assert_eq!(e.classify(&s).unwrap(), x);
        let z = e.realize(&e.zero()).unwrap();
        assert!(splits(&z).unwrap().holds);
        assert!(equivalence(&z, &Ses::split(&s2, &s1).unwrap()).unwrap().is_some());
        assert!(equivalence(&z, &s).unwrap().is_none());
    }

    #[test]
    fn representables_have_no_extensions() {
        let span = Arc::new(shapes::span());
        let k = Rep::new(span.clone(), Q, vec![1; 3], vec![Mat::identity(Q, 1); 5]).unwrap();
        for i in 0..3 {
            assert_eq!(ext1(&representable(&span, i, Q), &k).unwrap().dim(), 0);
        }
    }
}
