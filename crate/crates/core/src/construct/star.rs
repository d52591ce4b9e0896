//! The diagram `F_η` over the one-point extension `Σ*`, the pushout object
//! `Z_η` with `f_η`, `g_η`, `μ_η`, and the comparison of `Z_η` with
//! `colim_{Σ*} F_η`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::diagrams::{BaseColim, Diagrams};
use crate::error::Error;
use crate::fincat::FinCat;
use crate::rep::{pushout_nat, Curried, NatMap, Rep, Ses};

/// Splits `η: κ(A) ↪ F ↠ G` into `A` and the curried pieces, checking that
/// the first term is constant.
#[derive(Clone, Debug)]
pub struct ConstEta {
    pub eta: Ses,
    pub a: Rep,
    pub phi: Vec<NatMap>,
    pub psi: Vec<NatMap>,
    pub f: Curried,
    pub g: Curried,
}

impl ConstEta {
    pub fn new(d: &Diagrams, eta: &Ses) -> Result<ConstEta, Error> {
        let sub = d.curry(eta.sub())?;
        let a = sub.fibers[0].clone();
        let constant = sub.fibers.iter().all(|f| *f == a)
            && sub.maps.iter().all(|m| *m == NatMap::identity(&a));
        if !constant {
            return Err(Error::KernelNotConstant);
        }
        Ok(ConstEta {
            eta: eta.clone(),
            a,
            phi: d.curry_map(eta.mono())?,
            psi: d.curry_map(eta.epi())?,
            f: d.curry(eta.middle())?,
            g: d.curry(eta.quotient())?,
        })
    }
}

/// `F_η` over `Σ* × Δ` and the sequence `η′: κ(A) ↪ F_η ↠ G′`.
#[derive(Clone, Debug)]
pub struct Extended {
    pub diagrams: Diagrams,
    pub f_eta: Rep,
    pub eta_prime: Ses,
}

/// The diagrams over `Σ*` sharing `Δ` and the field with `d`.
pub fn star_diagrams(d: &Diagrams) -> Diagrams {
    Diagrams::new(Arc::new(d.sigma().one_point_extension()), d.delta().clone(), d.field())
}

pub fn extend_over_star(d: &Diagrams, eta: &Ses) -> Result<Extended, Error> {
    let c = ConstEta::new(d, eta)?;
    let ds = star_diagrams(d);
    let sigma = d.sigma();
    let (n_obj, n_old) = (sigma.n_objects(), sigma.n_morphisms());
    let a = &c.a;
    let zero = Rep::zero(d.delta().clone(), d.field());

    let mut f_fib = c.f.fibers.clone();
    f_fib.push(a.clone());
    let mut g_fib = c.g.fibers.clone();
    g_fib.push(zero.clone());
    let mut f_maps = c.f.maps.clone();
    let mut g_maps = c.g.maps.clone();
    for (i, (phi, gf)) in c.phi.iter().zip(&g_fib).enumerate().take(n_obj) {
        debug_assert_eq!(f_maps.len(), FinCat::extension_alpha(n_old, i));
        f_maps.push(phi.clone());
        g_maps.push(NatMap::zero(&zero, gf));
    }
    f_maps.push(NatMap::identity(a));
    g_maps.push(NatMap::identity(&zero));
    let f_eta = ds.uncurry(&Curried { fibers: f_fib, maps: f_maps })?;
    let g_prime = ds.uncurry(&Curried { fibers: g_fib, maps: g_maps })?;
    let k = ds.kappa(a)?;

    let mut mono = c.phi.clone();
    mono.push(NatMap::identity(a));
    let mut epi = c.psi.clone();
    epi.push(NatMap::zero(a, &zero));
    let mono = ds.uncurry_map(&k, &f_eta, &mono)?;
    let epi = ds.uncurry_map(&f_eta, &g_prime, &epi)?;
    let eta_prime = Ses::new(mono, epi)?;
    Ok(Extended { diagrams: ds, f_eta, eta_prime })
}

/// The pushout square of `colim(φ)` and `∇^A`, and the induced bottom row.
#[derive(Clone, Debug)]
pub struct ZEtaData {
    pub a: Rep,
    pub z: Rep,
    /// `A → Z_η`
    pub f_eta: NatMap,
    /// `Z_η → C_G`
    pub g_eta: NatMap,
    /// `C_F → Z_η`
    pub mu_eta: NatMap,
    pub nabla: NatMap,
    pub colim_phi: NatMap,
    pub colim_psi: NatMap,
    pub colim_f: BaseColim,
    pub colim_g: BaseColim,
}

impl ZEtaData {
    pub fn f_is_mono(&self) -> bool {
        self.f_eta.is_mono()
    }

    /// `f_η∘∇ = μ_η∘colim(φ)`, `g_η∘f_η = 0`, `g_η` onto, `g_η∘μ_η = colim(ψ)`,
    /// and exactness of `A → Z_η → C_G` when `f_η` is mono.
    pub fn invariant_failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        let square = (self.f_eta.after(&self.nabla), self.mu_eta.after(&self.colim_phi));
        if !matches!(square, (Ok(ref x), Ok(ref y)) if x == y) {
            out.push("pushout square does not commute");
        }
        if !self.g_eta.after(&self.f_eta).map(|m| m.is_zero()).unwrap_or(false) {
            out.push("g∘f is nonzero");
        }
        if !self.g_eta.is_epi() {
            out.push("g is not onto");
        }
        if self.g_eta.after(&self.mu_eta).ok().as_ref() != Some(&self.colim_psi) {
            out.push("g∘μ differs from colim(ψ)");
        }
        if self.f_is_mono() && Ses::new(self.f_eta.clone(), self.g_eta.clone()).is_err() {
            out.push("bottom row is not exact");
        }
        out
    }
}

pub fn z_eta(d: &Diagrams, eta: &Ses) -> Result<ZEtaData, Error> {
    let c = ConstEta::new(d, eta)?;
    let (colim_k, nabla) = d.codiagonal(&c.a)?;
    let colim_f = d.colim(eta.middle())?;
    let colim_g = d.colim(eta.quotient())?;
    let colim_phi = d.colim_map(eta.mono(), &colim_k, &colim_f)?;
    let colim_psi = d.colim_map(eta.epi(), &colim_f, &colim_g)?;
    let po = pushout_nat(&nabla, &colim_phi)?;
    let zero = NatMap::zero(&c.a, &colim_g.apex);
    let g_eta = po.mediator(&zero, &colim_psi)?;
    Ok(ZEtaData {
        a: c.a,
        z: po.apex.clone(),
        f_eta: po.to_left,
        g_eta,
        mu_eta: po.to_right,
        nabla,
        colim_phi,
        colim_psi,
        colim_f,
        colim_g,
    })
}

/// Comparison of `colim_{Σ*} F_η` with `Z_η` through the cocone
/// `ξ_i = μ_η∘ρ_i`, `ξ_* = f_η`.
#[derive(Clone, Debug)]
pub struct ColimStarCheck {
    pub z_dims: Vec<usize>,
    pub colim_dims: Vec<usize>,
    pub comparison: NatMap,
    pub inverse: Option<NatMap>,
}

impl ColimStarCheck {
    pub fn is_iso(&self) -> bool {
        self.inverse.is_some()
    }
}

pub fn verify_colim_star(d: &Diagrams, eta: &Ses) -> Result<(ZEtaData, ColimStarCheck), Error> {
    let z = z_eta(d, eta)?;
    let ext = extend_over_star(d, eta)?;
    let ds = &ext.diagrams;
    let cstar = ds.colim(&ext.f_eta)?;
    let rho = d.curry_map(&z.colim_f.rho)?;
    let z_apex = z.z.clone();
    let mut legs: Vec<NatMap> = Vec::with_capacity(rho.len() + 1);
    for r in &rho {
        let leg = z.mu_eta.after(&retarget(r, &z.colim_f.apex))?;
        legs.push(leg);
    }
    legs.push(z.f_eta.clone());
    let kz = ds.kappa(&z_apex)?;
    let xi = ds.uncurry_map(&ext.f_eta, &kz, &legs)?;
    let comparison = ds.induced_from_cocone(&cstar, &z_apex, &xi)?;
    let inverse = comparison.inverse();
    let check = ColimStarCheck {
        z_dims: z_apex.dims().to_vec(),
        colim_dims: cstar.apex.dims().to_vec(),
        comparison,
        inverse,
    };
    Ok((z, check))
}

fn retarget(m: &NatMap, tgt: &Rep) -> NatMap {
    NatMap::new_unchecked(m.src().clone(), tgt.clone(), m.comps().to_vec())
}
