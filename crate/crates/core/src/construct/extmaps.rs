//! The comparison maps between Ext spaces as exact matrices:
//! `Ψ: Ext¹(colim F, A) → Ext¹(F, κA)` (pullback along `ρ^F`),
//! `Φ: Ext¹(B, lim F) → Ext¹(κB, F)` (pushout along `ϱ^F`),
//! and the fiberwise restrictions `Ξ`, `Θ` for discrete `Σ`.

use alloc::vec::Vec;

use crate::diagrams::Diagrams;
use crate::error::Error;
use crate::exact::{Mat, Scalar};
use crate::homext::{
    dual_map_over, dual_over, dual_ses_over, ext1, ext_map_first, pullback_ses, pushout_ses, ExtClass, ExtSpace,
};
use crate::rep::{NatMap, Rep, Ses};

/// A linear map between Ext spaces in their chosen bases.
#[derive(Clone, Debug)]
pub struct ExtMap {
    pub domain: ExtSpace,
    pub codomain: ExtSpace,
    pub matrix: Mat,
}

impl ExtMap {
    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.is_surjective()
    }

    pub fn is_invertible(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// A basis class of the codomain outside the image, if the map is not onto.
    pub fn class_outside_image(&self) -> Option<ExtClass> {
        (0..self.codomain.dim())
            .map(|k| self.codomain.basis_class(k))
            .find(|x| !self.matrix.spans(&Mat::column(self.matrix.field(), x.coords.clone())))
    }

    pub fn apply(&self, x: &ExtClass) -> ExtClass {
        let v = &self.matrix * &Mat::column(self.matrix.field(), x.coords.clone());
        ExtClass { coords: v.col(0) }
    }
}

/// `κ^Σ` applied to a sequence in the base.
pub fn kappa_ses(d: &Diagrams, s: &Ses) -> Result<Ses, Error> {
    Ses::new(d.kappa_map(s.mono())?, d.kappa_map(s.epi())?)
}

/// `Ψ^Σ_{F,A}`.
pub fn psi(d: &Diagrams, f: &Rep, a: &Rep) -> Result<ExtMap, Error> {
    let colim = d.colim(f)?;
    let domain = ext1(&colim.apex, a)?;
    let codomain = ext1(f, &d.kappa(a)?)?;
    let matrix = domain.map_matrix(&codomain, |s| pullback_ses(&kappa_ses(d, s)?, &colim.rho))?;
    Ok(ExtMap { domain, codomain, matrix })
}

/// Recomputes `Ψ` on each basis class from a shifted realization and
/// reports whether the classes agree with the matrix columns.
pub fn psi_well_defined(d: &Diagrams, psi_map: &ExtMap, f: &Rep, shifts: &[Vec<Scalar>]) -> Result<bool, Error> {
    let colim = d.colim(f)?;
    let dom = &psi_map.domain;
    for k in 0..dom.dim() {
        let x = dom.basis_class(k);
        let expected = psi_map.apply(&x);
        for shift in shifts {
            let s = dom.realize_shifted(&x, shift)?;
            let got = psi_map.codomain.classify(&pullback_ses(&kappa_ses(d, &s)?, &colim.rho)?)?;
            if got != expected {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Φ^Σ_{B,F}`.
pub fn phi(d: &Diagrams, b: &Rep, f: &Rep) -> Result<ExtMap, Error> {
    let lim = d.lim(f)?;
    let domain = ext1(b, &lim.apex)?;
    let codomain = ext1(&d.kappa(b)?, f)?;
    let matrix = domain.map_matrix(&codomain, |s| pushout_ses(&kappa_ses(d, s)?, &lim.pi))?;
    Ok(ExtMap { domain, codomain, matrix })
}

/// The matrix of `Ext¹(M, N) → Ext¹(N*, M*)`, sequences sent to their duals
/// over the opposite category (`op` must carry the opposite of `M`'s category).
pub fn duality_matrix(from: &ExtSpace, to: &ExtSpace, op: &alloc::sync::Arc<crate::fincat::FinCat>) -> Result<Mat, Error> {
    from.map_matrix(to, |s| Ok(dual_ses_over(s, op)))
}

/// The independent route to `Φ`: transport `Ψ` for `(F*, B*)` over the
/// opposite diagrams back through duality. Returns `D_cod∘Φ` and
/// `Ψ^op∘(u^*∘D_dom)`, which must coincide.
#[derive(Clone, Debug)]
pub struct PhiDualityCheck {
    pub phi: ExtMap,
    pub psi_op: ExtMap,
    pub via_phi: Mat,
    pub via_psi: Mat,
}

impl PhiDualityCheck {
    pub fn agrees(&self) -> bool {
        self.via_phi == self.via_psi
    }
}

pub fn phi_by_duality(d: &Diagrams, b: &Rep, f: &Rep) -> Result<PhiDualityCheck, Error> {
    let phi_map = phi(d, b, f)?;
    let dop = d.opposite();
    let f_star = dual_over(f, dop.product());
    let b_star = dual_over(b, dop.delta());
    let psi_op = psi(&dop, &f_star, &b_star)?;

    // D_cod: Ext¹(κB, F) → Ext¹(F*, (κB)*) = Ext¹(F*, κ^op(B*)).
    let d_cod = duality_matrix(&phi_map.codomain, &psi_op.codomain, dop.product())?;
    let via_phi = &d_cod * &phi_map.matrix;

    // u: C_{F*} → (L_F)* induced by the dual cocone ϱ*.
    let lim = d.lim(f)?;
    let l_star = dual_over(&lim.apex, dop.delta());
    let cop = dop.colim(&f_star)?;
    let cocone = dual_map_over(&lim.pi, dop.product());
    let cocone = NatMap::new(f_star.clone(), dop.kappa(&l_star)?, cocone.comps().to_vec())?;
    let u = dop.induced_from_cocone(&cop, &l_star, &cocone)?;
    if !u.is_iso() {
        return Err(Error::Internal("dual cocone does not induce an isomorphism".into()));
    }
    // D_dom: Ext¹(B, L) → Ext¹(L*, B*), then pull back along u.
    let mid = ext1(&l_star, &b_star)?;
    let d_dom = duality_matrix(&phi_map.domain, &mid, dop.delta())?;
    let u_pull = ext_map_first(&u, &mid, &psi_op.domain)?;
    let via_psi = &psi_op.matrix * &(&u_pull * &d_dom);
    Ok(PhiDualityCheck { phi: phi_map, psi_op, via_phi, via_psi })
}

/// The fiberwise restrictions for discrete `Σ`.
#[derive(Clone, Debug)]
pub struct XiTheta {
    /// `Ext¹(F, κA) → ⊕_i Ext¹(F_i, A)`
    pub xi: Mat,
    /// `Ext¹(κA, F) → ⊕_i Ext¹(A, F_i)`
    pub theta: Mat,
    pub xi_parts: Vec<ExtSpace>,
    pub theta_parts: Vec<ExtSpace>,
}

fn restrict_ses(d: &Diagrams, s: &Ses, i: usize) -> Result<Ses, Error> {
    let mono = d.curry_map(s.mono())?.swap_remove(i);
    let epi = d.curry_map(s.epi())?.swap_remove(i);
    Ses::new(mono, epi)
}

fn stacked(d: &Diagrams, from: &ExtSpace, parts: &[ExtSpace]) -> Result<Mat, Error> {
    let field = d.field();
    let blocks = parts
        .iter()
        .enumerate()
        .map(|(i, p)| from.map_matrix(p, |s| restrict_ses(d, s, i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Mat::vstack_all(field, from.dim(), &blocks))
}

pub fn xi_theta(d: &Diagrams, f: &Rep, a: &Rep) -> Result<XiTheta, Error> {
    if !d.sigma().is_discrete() {
        return Err(Error::NotDiscrete);
    }
    let fibers = d.curry(f)?.fibers;
    let k = d.kappa(a)?;
    let xi_parts = fibers.iter().map(|fi| ext1(fi, a)).collect::<Result<Vec<_>, _>>()?;
    let theta_parts = fibers.iter().map(|fi| ext1(a, fi)).collect::<Result<Vec<_>, _>>()?;
    let xi = stacked(d, &ext1(f, &k)?, &xi_parts)?;
    let theta = stacked(d, &ext1(&k, f)?, &theta_parts)?;
    Ok(XiTheta { xi, theta, xi_parts, theta_parts })
}

/// `Ext¹(colim F, A) → ⊕_i Ext¹(F_i, A)`, pulling back along each leg `ρ_i`.
pub fn canonical_restriction(d: &Diagrams, f: &Rep, a: &Rep) -> Result<Mat, Error> {
    let colim = d.colim(f)?;
    let from = ext1(&colim.apex, a)?;
    let legs = d.curry_map(&colim.rho)?;
    let blocks = legs
        .iter()
        .map(|leg| {
            let leg = NatMap::new(leg.src().clone(), colim.apex.clone(), leg.comps().to_vec())?;
            let to = ext1(leg.src(), a)?;
            ext_map_first(&leg, &from, &to)
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(Mat::vstack_all(d.field(), from.dim(), &blocks))
}
