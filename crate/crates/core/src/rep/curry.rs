//! Passing between representations of `Σ × Δ` and `Σ`-indexed diagrams of
//! representations of `Δ`.

use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{NatMap, Rep};
use crate::error::Error;
use crate::exact::Mat;
use crate::fincat::FinCat;

/// A `Σ`-diagram in `Fun(Δ, Vect)`: one fiber per object of `Σ` and one
/// natural map per morphism of `Σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Curried {
    pub fibers: Vec<Rep>,
    pub maps: Vec<NatMap>,
}

/// Splits a representation of `sigma × delta` into fibers and transition maps.
pub fn curry(f: &Rep, sigma: &FinCat, delta: &Arc<FinCat>) -> Result<Curried, Error> {
    let (ns, nd) = (sigma.n_objects(), delta.n_objects());
    let md = delta.n_morphisms();
    if f.cat().n_objects() != ns * nd || f.cat().n_morphisms() != sigma.n_morphisms() * md {
        return Err(Error::ShapeMismatch("sizes do not match Σ × Δ".into()));
    }
    let field = f.field();
    let fibers: Vec<Rep> = (0..ns)
        .map(|s| {
            let dims = (0..nd).map(|d| f.dim(s * nd + d)).collect();
            let id = sigma.identity(s);
            let action = (0..md).map(|g| f.action(id * md + g).clone()).collect();
            Rep::new_unchecked(delta.clone(), field, dims, action)
        })
        .collect();
    let maps = (0..sigma.n_morphisms())
        .map(|m| {
            let (i, j) = (sigma.src(m), sigma.tgt(m));
            let comp = (0..nd).map(|d| f.action(m * md + delta.identity(d)).clone()).collect();
            NatMap::new_unchecked(fibers[i].clone(), fibers[j].clone(), comp)
        })
        .collect();
    Ok(Curried { fibers, maps })
}

/// Reassembles a representation of `product = sigma × delta`.
pub fn uncurry(product: &Arc<FinCat>, sigma: &FinCat, delta: &FinCat, c: &Curried) -> Result<Rep, Error> {
    let (ns, nd) = (sigma.n_objects(), delta.n_objects());
    let md = delta.n_morphisms();
    if c.fibers.len() != ns || c.maps.len() != sigma.n_morphisms() {
        return Err(Error::ShapeMismatch("one fiber per object and one map per morphism".into()));
    }
    let field = c.fibers.first().map(Rep::field).ok_or(Error::ShapeMismatch("empty Σ".into()))?;
    let mut dims = Vec::with_capacity(ns * nd);
    for fib in &c.fibers {
        dims.extend_from_slice(fib.dims());
    }
    let mut action: Vec<Mat> = Vec::with_capacity(sigma.n_morphisms() * md);
    for m in 0..sigma.n_morphisms() {
        let i = sigma.src(m);
        for g in 0..md {
            action.push(c.maps[m].comp(delta.tgt(g)) * c.fibers[i].action(g));
        }
    }
    Rep::new(product.clone(), field, dims, action)
}
