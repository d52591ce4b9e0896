//! Exactness of `colim_Σ` and `lim_Σ` over `Fun(Δ, Vect)`, decided by split
//! tests on the constant diagram of an injective cogenerator (resp. a
//! projective generator).

use alloc::vec::Vec;

use super::gen::{free_generator, indecomposable_injectives, injective_cogenerator};
use super::{Certificate, Outcome, Verdict};
use crate::construct::z_eta;
use crate::diagrams::Diagrams;
use crate::error::Error;
use crate::exact::Mat;
use crate::homext::{ext1, is_injective, is_projective, representable};
use crate::rep::{Rep, Ses};

/// The one-dimensional representation at `o` on which endomorphisms of `o`
/// act by `endo` and every other morphism by zero, when that is functorial.
fn point_rep(d: &Diagrams, o: usize, endo: bool) -> Option<Rep> {
    let cat = d.product();
    let field = d.field();
    let n = cat.n_objects();
    let dims: Vec<usize> = (0..n).map(|j| usize::from(j == o)).collect();
    let action = (0..cat.n_morphisms())
        .map(|m| {
            let (s, t) = (cat.src(m), cat.tgt(m));
            if cat.is_identity(m) || (endo && s == o && t == o) {
                Mat::identity(field, dims[s])
            } else {
                Mat::zeros(field, dims[t], dims[s])
            }
        })
        .collect();
    Rep::new(cat.clone(), field, dims, action).ok()
}

/// Candidate quotients for the certificate search: one-dimensional
/// representations, representables, then cofree indecomposables over `Σ × Δ`.
fn candidates(d: &Diagrams) -> Vec<Rep> {
    let cat = d.product();
    let field = d.field();
    let n = cat.n_objects();
    let mut out = Vec::new();
    for o in 0..n {
        for endo in [false, true] {
            if let Some(r) = point_rep(d, o, endo) {
                if !out.contains(&r) {
                    out.push(r);
                }
            }
        }
    }
    for o in 0..n {
        out.push(representable(cat, o, field));
    }
    out.extend(indecomposable_injectives(cat, field));
    out
}

/// Searches for `η: κ(A) ↪ F ↠ X` with `f_η` not a monomorphism, taking `A`
/// among the indecomposable injectives of the base.
pub fn find_non_mono_eta(d: &Diagrams) -> Result<Option<(Ses, crate::construct::ZEtaData)>, Error> {
    for a in indecomposable_injectives(d.delta(), d.field()) {
        let ka = d.kappa(&a)?;
        for x in candidates(d) {
            let e = ext1(&x, &ka)?;
            for k in 0..e.dim() {
                let eta = e.realize(&e.basis_class(k))?;
                let z = z_eta(d, &eta)?;
                if !z.f_is_mono() {
                    return Ok(Some((eta, z)));
                }
            }
        }
    }
    Ok(None)
}

/// `colim_Σ` is exact iff `κ^Σ(I)` is injective for an injective cogenerator `I`.
pub fn decide_colim_exact(d: &Diagrams, search: bool) -> Result<Verdict, Error> {
    let i = injective_cogenerator(d.delta(), d.field());
    let test = is_injective(&d.kappa(&i)?)?;
    let verdict = if test.holds {
        Verdict::new("decide-colim-exact", Outcome::Holds, Certificate::Split(test))
    } else {
        let mut parts = alloc::vec![("split-test".into(), Certificate::Split(test))];
        if search {
            if let Some((eta, z)) = find_non_mono_eta(d)? {
                parts.push(("non-mono-f-eta".into(), Certificate::NonMonoEta { eta, z }));
            }
        }
        Verdict::new("decide-colim-exact", Outcome::Fails, Certificate::Parts(parts))
    };
    Ok(verdict.stat("cogenerator_dims", alloc::format!("{:?}", i.dims())))
}

/// `lim_Σ` is exact iff `κ^Σ(P)` is projective for a projective generator `P`;
/// cross-checked against the colimit decision for the opposite data.
pub fn decide_lim_exact(d: &Diagrams, search: bool) -> Result<Verdict, Error> {
    let p = free_generator(d.delta(), d.field());
    let test = is_projective(&d.kappa(&p)?)?;
    let dual = decide_colim_exact(&d.opposite(), search)?;
    let agrees = dual.outcome.holds() == test.holds;
    let mut verdict = if test.holds {
        Verdict::new("decide-lim-exact", Outcome::Holds, Certificate::Split(test))
    } else {
        let mut parts = alloc::vec![("split-test".into(), Certificate::Split(test))];
        if let Certificate::Parts(dp) = dual.certificate {
            for (name, c) in dp {
                if name == "non-mono-f-eta" {
                    parts.push(("opposite-non-mono-f-eta".into(), c));
                }
            }
        }
        Verdict::new("decide-lim-exact", Outcome::Fails, Certificate::Parts(parts))
    };
    if !agrees {
        verdict.outcome = Outcome::Inconclusive;
        verdict.certificate = Certificate::Mismatch("opposite colimit decision disagrees".into());
    }
    Ok(verdict.stat("generator_dims", alloc::format!("{:?}", p.dims())).stat("opposite_agrees", agrees))
}
