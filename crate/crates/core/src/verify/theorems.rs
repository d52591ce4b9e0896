//! Sampled checks: `f_η` mono versus exactness of colimits, bijectivity and
//! naturality of `Ψ`, the colimit of `F_η` over `Σ*`, and the discrete case.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::decide::decide_colim_exact;
use super::gen::{free_generator, injective_cogenerator, Gen};
use super::{Certificate, Outcome, Verdict};
use crate::construct::{canonical_restriction, psi, psi_well_defined, verify_colim_star, xi_theta, z_eta, ConstEta};
use crate::diagrams::Diagrams;
use crate::error::Error;
use crate::exact::{Field, Mat};
use crate::fincat::{shapes, FinCat};
use crate::homext::{ext_map_first, ext_map_second, is_injective, is_projective};

/// Largest dimension of randomly generated objects.
const MAX_DIM: usize = 2;

/// How the η-shaped sequences are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EtaMode {
    /// Realize a random class of `Ext¹(X, κA)`.
    Direct,
    /// Push a random sequence out along `ρ^H` of its first term.
    PushoutTrick,
    /// Alternate between the two.
    Both,
}

impl EtaMode {
    pub fn name(&self) -> &'static str {
        match self {
            EtaMode::Direct => "direct",
            EtaMode::PushoutTrick => "pushout",
            EtaMode::Both => "both",
        }
    }
}

fn sampled(budget: usize) -> Outcome {
    Outcome::HoldsSampled { budget }
}

/// Exactness of `colim_Σ` against `f_η` being a monomorphism: both sides are
/// sampled and must agree with each other and with the decision procedure.
pub fn verify_thm_first(d: &Diagrams, budget: usize, seed: u64, mode: EtaMode) -> Result<Verdict, Error> {
    let exact = decide_colim_exact(d, false)?.outcome.holds();
    let mut gen = Gen::new(seed, d.field(), MAX_DIM);

    let mut colim_failures = 0;
    let mut colim_cert = None;
    for _ in 0..budget {
        let s = gen.ses(d.product())?;
        let (cs, cm) = (d.colim(s.sub())?, d.colim(s.middle())?);
        let map = d.colim_map(s.mono(), &cs, &cm)?;
        if !map.is_mono() {
            colim_failures += 1;
            colim_cert.get_or_insert(Certificate::NonMonoColim { mono: s.mono().clone(), colim: map });
        }
    }

    let mut eta_failures = 0;
    let mut eta_cert = None;
    for i in 0..budget {
        let eta = match mode {
            EtaMode::Direct => gen.eta_direct(d)?,
            EtaMode::PushoutTrick => gen.eta_pushout(d)?,
            EtaMode::Both => gen.eta(d, i)?,
        };
        let z = z_eta(d, &eta)?;
        if !z.f_is_mono() {
            eta_failures += 1;
            eta_cert.get_or_insert(Certificate::NonMonoEta { eta, z });
        }
    }

    let agree = (colim_failures == 0) == exact && (eta_failures == 0) == exact;
    let mut parts = Vec::new();
    if let Some(c) = colim_cert {
        parts.push((String::from("colim-not-mono"), c));
    }
    if let Some(c) = eta_cert {
        parts.push((String::from("f-eta-not-mono"), c));
    }
    if !agree {
        parts.push((
            String::from("disagreement"),
            Certificate::Mismatch(format!(
                "decide says exact = {exact}; sampled colim failures = {colim_failures}, f_eta failures = {eta_failures}"
            )),
        ));
    }
    let outcome = if agree { sampled(budget) } else { Outcome::Fails };
    let mut v = Verdict::new("thm-first", outcome, Certificate::Parts(parts))
        .stat("colim_exact", exact)
        .stat("mode", mode.name())
        .stat("colim_mono_failures", colim_failures)
        .stat("f_eta_mono_failures", eta_failures);
    v.seed = Some(seed);
    v.budget = Some(budget);
    Ok(v)
}

/// `Ψ` injective on every sample, bijective on every sample exactly when
/// colimits are exact (with a non-surjective witness otherwise), and natural
/// in both arguments.
pub fn verify_thm_second(d: &Diagrams, budget: usize, seed: u64) -> Result<Verdict, Error> {
    let decided = decide_colim_exact(d, true)?;
    let exact = decided.outcome.holds();
    let mut gen = Gen::new(seed, d.field(), MAX_DIM);
    let (mut injective, mut bijective) = (0, 0);
    let (mut nat_checks, mut nat_failures) = (0, 0);
    let (mut wd_checks, mut wd_failures) = (0, 0);
    let mut not_onto = None;
    let mut not_injective = None;

    for i in 0..budget {
        let f = gen.rep(d.product())?;
        let a = gen.rep(d.delta())?;
        let map = psi(d, &f, &a)?;
        if map.is_injective() {
            injective += 1;
        } else if not_injective.is_none() {
            not_injective = Some(format!("Ψ has rank {} on a domain of dimension {}", map.rank(), map.domain.dim()));
        }
        if map.is_invertible() {
            bijective += 1;
        } else if not_onto.is_none() {
            if let Some(x) = map.class_outside_image() {
                not_onto = Some(Certificate::PsiNotOnto { f: f.clone(), a: a.clone(), matrix: map.matrix.clone(), outside: x.coords });
            }
        }
        if i % 4 != 0 {
            continue;
        }
        // Naturality in A.
        let a2 = gen.rep(d.delta())?;
        let u = gen.natmap(&a, &a2)?;
        let map2 = psi(d, &f, &a2)?;
        let left = &map2.matrix * &ext_map_second(&u, &map.domain, &map2.domain)?;
        let right = &ext_map_second(&d.kappa_map(&u)?, &map.codomain, &map2.codomain)? * &map.matrix;
        nat_checks += 1;
        if left != right {
            nat_failures += 1;
        }
        // Naturality in F.
        let f2 = gen.rep(d.product())?;
        let t = gen.natmap(&f2, &f)?;
        let (c2, c1) = (d.colim(&f2)?, d.colim(&f)?);
        let ct = d.colim_map(&t, &c2, &c1)?;
        let map3 = psi(d, &f2, &a)?;
        let left = &map3.matrix * &ext_map_first(&ct, &map.domain, &map3.domain)?;
        let right = &ext_map_first(&t, &map.codomain, &map3.codomain)? * &map.matrix;
        nat_checks += 1;
        if left != right {
            nat_failures += 1;
        }
        // Independence of the realizing sequence.
        let shift = gen.scalars(map.domain.coboundary_dim());
        wd_checks += 1;
        if !psi_well_defined(d, &map, &f, &[shift])? {
            wd_failures += 1;
        }
    }

    if !exact && not_onto.is_none() {
        if let Certificate::Parts(parts) = &decided.certificate {
            for (_, c) in parts {
                if let Certificate::NonMonoEta { eta, .. } = c {
                    let ce = ConstEta::new(d, eta)?;
                    let map = psi(d, eta.quotient(), &ce.a)?;
                    if let Some(x) = map.class_outside_image() {
                        not_onto = Some(Certificate::PsiNotOnto {
                            f: eta.quotient().clone(),
                            a: ce.a.clone(),
                            matrix: map.matrix.clone(),
                            outside: x.coords,
                        });
                    }
                }
            }
        }
    }

    let lemma_ok = injective == budget;
    let bij_ok = if exact { bijective == budget } else { not_onto.is_some() };
    let ok = lemma_ok && bij_ok && nat_failures == 0 && wd_failures == 0;
    let mut parts = Vec::new();
    if let Some(c) = not_onto {
        parts.push((String::from("psi-not-onto"), c));
    }
    if let Some(msg) = not_injective {
        parts.push((String::from("psi-not-injective"), Certificate::Mismatch(msg)));
    }
    let mut v = Verdict::new("thm-second", if ok { sampled(budget) } else { Outcome::Fails }, Certificate::Parts(parts))
        .stat("colim_exact", exact)
        .stat("samples", budget)
        .stat("injective", injective)
        .stat("bijective", bijective)
        .stat("naturality_checks", nat_checks)
        .stat("naturality_failures", nat_failures)
        .stat("well_defined_checks", wd_checks)
        .stat("well_defined_failures", wd_failures);
    v.seed = Some(seed);
    v.budget = Some(budget);
    Ok(v)
}

/// `colim_{Σ*} F_η ≅ Z_η` through the cocone `ξ^η` for random η. Every
/// sample's comparison map (and its inverse, when it exists) is attached.
pub fn verify_lemma_colim_star(d: &Diagrams, budget: usize, seed: u64) -> Result<Verdict, Error> {
    let mut gen = Gen::new(seed, d.field(), MAX_DIM);
    let mut isos = 0;
    let mut invariant_failures = 0;
    let mut parts = Vec::with_capacity(budget);
    for i in 0..budget {
        let eta = gen.eta(d, i)?;
        let (z, check) = verify_colim_star(d, &eta)?;
        if !z.invariant_failures().is_empty() {
            invariant_failures += 1;
        }
        if check.is_iso() {
            isos += 1;
        }
        parts.push((format!("sample-{i}"), Certificate::ColimStar { eta, check }));
    }
    let ok = isos == budget && invariant_failures == 0;
    let outcome = if ok { sampled(budget) } else { Outcome::Fails };
    let mut v = Verdict::new("lemma-colim-star", outcome, Certificate::Parts(parts))
        .stat("isomorphisms", isos)
        .stat("samples", budget)
        .stat("square_invariant_failures", invariant_failures);
    v.seed = Some(seed);
    v.budget = Some(budget);
    Ok(v)
}

/// For discrete `Σ` of each size: the canonical restriction map is invertible
/// and equals `Ξ∘Ψ`; `Ξ`, `Θ` are invertible; `κ` preserves projectives and
/// injectives.
pub fn verify_discrete_corollaries(
    delta: &Arc<FinCat>,
    field: Field,
    sizes: &[usize],
    samples: usize,
    seed: u64,
) -> Result<Verdict, Error> {
    let mut gen = Gen::new(seed, field, MAX_DIM);
    let mut failures: Vec<String> = Vec::new();
    let mut parts = Vec::new();
    let mut checks = 0;
    for &n in sizes {
        let d = Diagrams::new(Arc::new(shapes::discrete(n)), delta.clone(), field);
        let proj = is_projective(&d.kappa(&free_generator(delta, field))?)?;
        let inj = is_injective(&d.kappa(&injective_cogenerator(delta, field))?)?;
        if !proj.holds {
            failures.push(format!("size {n}: κ(P) is not projective"));
        }
        if !inj.holds {
            failures.push(format!("size {n}: κ(I) is not injective"));
        }
        parts.push((format!("size-{n}-projective"), Certificate::Split(proj)));
        parts.push((format!("size-{n}-injective"), Certificate::Split(inj)));
        for _ in 0..samples {
            let f = gen.rep(d.product())?;
            let a = gen.rep(delta)?;
            let canonical = canonical_restriction(&d, &f, &a)?;
            let xt = xi_theta(&d, &f, &a)?;
            let ps = psi(&d, &f, &a)?;
            checks += 1;
            if !canonical.is_invertible() {
                failures.push(format!("size {n}: canonical map not invertible"));
            }
            if canonical != &xt.xi * &ps.matrix {
                failures.push(format!("size {n}: canonical map differs from Ξ∘Ψ"));
            }
            if !xt.xi.is_invertible() || !xt.theta.is_invertible() {
                failures.push(format!("size {n}: Ξ or Θ not invertible"));
            }
            if n == 1 && canonical != Mat::identity(field, canonical.rows()) {
                failures.push(String::from("size 1: canonical map is not the identity"));
            }
        }
    }
    let outcome = if failures.is_empty() { sampled(checks) } else { Outcome::Fails };
    for f in &failures {
        parts.push((String::from("failure"), Certificate::Mismatch(f.clone())));
    }
    let mut v = Verdict::new("discrete-corollaries", outcome, Certificate::Parts(parts))
        .stat("sizes", format!("{sizes:?}"))
        .stat("checks", checks)
        .stat("failures", failures.len());
    v.seed = Some(seed);
    v.budget = Some(samples);
    Ok(v)
}
