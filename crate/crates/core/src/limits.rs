//! Colimits and limits of finite diagrams in `Fun(Δ, Vect)`, computed as a
//! cokernel (resp. kernel) of the usual presentation, together with the
//! maps induced by cocones and cones.

use alloc::format;
use alloc::vec::Vec;

use crate::error::Error;
use crate::exact::Mat;
use crate::fincat::FinCat;
use crate::rep::{coker_nat, direct_sum_many, ker_nat, Curried, NatMap, Rep};

/// `colim F` with its legs `F_σ → colim F`.
#[derive(Clone, Debug)]
pub struct ColimData {
    pub apex: Rep,
    pub legs: Vec<NatMap>,
    quotient: NatMap,
}

/// `lim F` with its legs `lim F → F_σ`.
#[derive(Clone, Debug)]
pub struct LimData {
    pub apex: Rep,
    pub legs: Vec<NatMap>,
    inclusion: NatMap,
}

fn check_diagram(sigma: &FinCat, d: &Curried) -> Result<(), Error> {
    if sigma.n_objects() == 0 {
        return Err(Error::ShapeMismatch("index category has no objects".into()));
    }
    if d.fibers.len() != sigma.n_objects() || d.maps.len() != sigma.n_morphisms() {
        return Err(Error::ShapeMismatch("diagram does not match its index category".into()));
    }
    Ok(())
}

/// `⊕_{λ non-identity} F_{src λ}`, or the zero object if `Σ` is discrete.
fn morphism_sum(sigma: &FinCat, d: &Curried, at_source: bool) -> Result<(Rep, Vec<NatMap>, Vec<NatMap>), Error> {
    let ms: Vec<usize> = sigma.non_identities().collect();
    if ms.is_empty() {
        let base = &d.fibers[0];
        return Ok((Rep::zero(base.cat().clone(), base.field()), Vec::new(), Vec::new()));
    }
    let terms: Vec<Rep> = ms
        .iter()
        .map(|&m| d.fibers[if at_source { sigma.src(m) } else { sigma.tgt(m) }].clone())
        .collect();
    direct_sum_many(&terms)
}

pub fn colim(sigma: &FinCat, d: &Curried) -> Result<ColimData, Error> {
    check_diagram(sigma, d)?;
    let (objs, inj, _) = direct_sum_many(&d.fibers)?;
    let (rels, _, rel_proj) = morphism_sum(sigma, d, true)?;
    let mut rel = NatMap::zero(&rels, &objs);
    for (k, m) in sigma.non_identities().enumerate() {
        let (i, j) = (sigma.src(m), sigma.tgt(m));
        let diff = inj[j].after(&d.maps[m])?.add(&inj[i].neg())?;
        rel = rel.add(&diff.after(&rel_proj[k])?)?;
    }
    let quotient = coker_nat(&rel)?;
    let legs = inj.iter().map(|i| quotient.after(i)).collect::<Result<Vec<_>, _>>()?;
    Ok(ColimData { apex: quotient.tgt().clone(), legs, quotient })
}

pub fn lim(sigma: &FinCat, d: &Curried) -> Result<LimData, Error> {
    check_diagram(sigma, d)?;
    let (objs, _, proj) = direct_sum_many(&d.fibers)?;
    let (rels, rel_inj, _) = morphism_sum(sigma, d, false)?;
    let mut rel = NatMap::zero(&objs, &rels);
    for (k, m) in sigma.non_identities().enumerate() {
        let (i, j) = (sigma.src(m), sigma.tgt(m));
        let diff = d.maps[m].after(&proj[i])?.add(&proj[j].neg())?;
        rel = rel.add(&rel_inj[k].after(&diff)?)?;
    }
    let inclusion = ker_nat(&rel)?;
    let legs = proj.iter().map(|p| p.after(&inclusion)).collect::<Result<Vec<_>, _>>()?;
    Ok(LimData { apex: inclusion.src().clone(), legs, inclusion })
}

impl ColimData {
    /// The unique `colim F → X` through which the cocone `c_σ: F_σ → X` factors.
    pub fn induced(&self, sigma: &FinCat, d: &Curried, cocone: &[NatMap]) -> Result<NatMap, Error> {
        if cocone.len() != sigma.n_objects() {
            return Err(Error::NotACocone("one leg per object is required".into()));
        }
        let x = cocone[0].tgt().clone();
        for (s, c) in cocone.iter().enumerate() {
            if c.tgt() != &x || c.src() != &d.fibers[s] {
                return Err(Error::NotACocone(format!("leg at `{}` has the wrong ends", sigma.object_name(s))));
            }
        }
        for m in sigma.non_identities() {
            let (i, j) = (sigma.src(m), sigma.tgt(m));
            if cocone[j].after(&d.maps[m])? != cocone[i] {
                return Err(Error::NotACocone(format!(
                    "triangle at `{}` does not commute",
                    sigma.morphism(m).name
                )));
            }
        }
        let field = x.field();
        let n = x.cat().n_objects();
        let mut comp = Vec::with_capacity(n);
        for o in 0..n {
            let blocks: Vec<Mat> = cocone.iter().map(|c| c.comp(o).clone()).collect();
            let pair = Mat::hstack_all(field, x.dim(o), &blocks);
            let q = self.quotient.comp(o);
            let section = q.right_inverse().ok_or(Error::Internal("colimit quotient not onto".into()))?;
            comp.push(&pair * &section);
        }
        NatMap::new(self.apex.clone(), x, comp)
    }
}

impl LimData {
    /// The unique `X → lim F` through which the cone `c_σ: X → F_σ` factors.
    pub fn induced(&self, sigma: &FinCat, d: &Curried, cone: &[NatMap]) -> Result<NatMap, Error> {
        if cone.len() != sigma.n_objects() {
            return Err(Error::NotACone("one leg per object is required".into()));
        }
        let x = cone[0].src().clone();
        for (s, c) in cone.iter().enumerate() {
            if c.src() != &x || c.tgt() != &d.fibers[s] {
                return Err(Error::NotACone(format!("leg at `{}` has the wrong ends", sigma.object_name(s))));
            }
        }
        for m in sigma.non_identities() {
            let (i, j) = (sigma.src(m), sigma.tgt(m));
            if d.maps[m].after(&cone[i])? != cone[j] {
                return Err(Error::NotACone(format!(
                    "triangle at `{}` does not commute",
                    sigma.morphism(m).name
                )));
            }
        }
        let field = x.field();
        let n = x.cat().n_objects();
        let mut comp = Vec::with_capacity(n);
        for o in 0..n {
            let blocks: Vec<Mat> = cone.iter().map(|c| c.comp(o).clone()).collect();
            let stacked = Mat::vstack_all(field, x.dim(o), &blocks);
            let sol = self
                .inclusion
                .comp(o)
                .solve(&stacked)?
                .ok_or(Error::Internal("cone does not land in the limit".into()))?;
            comp.push(sol);
        }
        NatMap::new(x, self.apex.clone(), comp)
    }
}
