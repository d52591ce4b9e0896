#![allow(dead_code)]

use std::sync::Arc;

use exactlim_core::fincat::{shapes, FinCat};
use exactlim_core::rep::Curried;
use exactlim_core::{Diagrams, Field, Mat, NatMap, Rep, Ses};

pub const Q: Field = Field::Rationals;

pub fn f2() -> Field {
    Field::prime(2).unwrap()
}

pub fn m(field: Field, rows: usize, cols: usize, data: &[i64]) -> Mat {
    Mat::from_i64(field, rows, cols, data)
}

/// A representation given by matrices on named generating morphisms.
pub fn rep(cat: &Arc<FinCat>, field: Field, dims: &[usize], gens: &[(&str, Mat)]) -> Rep {
    let given = gens
        .iter()
        .map(|(name, mat)| (cat.morphism_index(name).expect("known morphism"), mat.clone()))
        .collect();
    Rep::from_generators(cat.clone(), field, dims.to_vec(), given).unwrap()
}

pub fn natmap(src: &Rep, tgt: &Rep, comps: Vec<Mat>) -> NatMap {
    NatMap::new(src.clone(), tgt.clone(), comps).unwrap()
}

pub fn point_rep(field: Field, dim: usize) -> Rep {
    let p = Arc::new(shapes::point());
    Rep::new(p, field, vec![dim], vec![Mat::identity(field, dim)]).unwrap()
}

pub fn simple(cat: &Arc<FinCat>, field: Field, o: usize) -> Rep {
    let dims: Vec<usize> = (0..cat.n_objects()).map(|j| usize::from(j == o)).collect();
    let action = (0..cat.n_morphisms())
        .map(|k| {
            let (s, t) = (cat.src(k), cat.tgt(k));
            if cat.is_identity(k) {
                Mat::identity(field, dims[s])
            } else {
                Mat::zeros(field, dims[t], dims[s])
            }
        })
        .collect();
    Rep::new(cat.clone(), field, dims, action).unwrap()
}

/// The worked sequence over the span with base `Vect`:
/// `κ(k) ↪ (k ← k² → k) ↠ (0 ← k → 0)`.
pub fn span_worked_eta() -> (Diagrams, Ses) {
    let point = Arc::new(shapes::point());
    let d = Diagrams::new(Arc::new(shapes::span()), point, Q);
    let k = point_rep(Q, 1);
    let k2 = point_rep(Q, 2);
    let z = point_rep(Q, 0);
    let fibers = vec![k2.clone(), k.clone(), k.clone()];
    let sigma = d.sigma().clone();
    let maps: Vec<NatMap> = (0..sigma.n_morphisms())
        .map(|l| {
            let (s, t) = (sigma.src(l), sigma.tgt(l));
            let comp = match sigma.morphism(l).name.as_str() {
                "p" => m(Q, 1, 2, &[1, 0]),
                "q" => m(Q, 1, 2, &[0, 1]),
                _ => Mat::identity(Q, fibers[s].dim(0)),
            };
            natmap(&fibers[s], &fibers[t], vec![comp])
        })
        .collect();
    let f = d.uncurry(&Curried { fibers: fibers.clone(), maps }).unwrap();
    let g_fibers = vec![k.clone(), z.clone(), z.clone()];
    let g_maps = (0..sigma.n_morphisms())
        .map(|l| {
            let (s, t) = (sigma.src(l), sigma.tgt(l));
            let comp = Mat::from_fn(Q, g_fibers[t].dim(0), g_fibers[s].dim(0), |_, _| Q.one());
            natmap(&g_fibers[s], &g_fibers[t], vec![comp])
        })
        .collect();
    let g = d.uncurry(&Curried { fibers: g_fibers.clone(), maps: g_maps }).unwrap();
    let ka = d.kappa(&k).unwrap();
    let phi = [m(Q, 2, 1, &[1, 1]), m(Q, 1, 1, &[1]), m(Q, 1, 1, &[1])];
    let psi = [m(Q, 1, 2, &[1, -1]), m(Q, 0, 1, &[]), m(Q, 0, 1, &[])];
    let mono = natmap(&ka, &f, phi.to_vec());
    let epi = natmap(&f, &g, psi.to_vec());
    (d, Ses::new(mono, epi).unwrap())
}

/// The augmentation sequence `κ(k) ↪ k[C2] ↠ k_sign` over `BC2` with base `Vect`,
/// the first map being the norm element.
pub fn bc2_augmentation(field: Field) -> (Diagrams, Ses) {
    let point = Arc::new(shapes::point());
    let d = Diagrams::new(Arc::new(shapes::cyclic_group(2)), point, field);
    let prod = d.product().clone();
    let g = format!("(g,{})", d.delta().morphism(0).name);
    let swap = m(field, 2, 2, &[0, 1, 1, 0]);
    let regular = rep(&prod, field, &[2], &[(g.as_str(), swap)]);
    let k = d.kappa(&point_rep(field, 1)).unwrap();
    // The quotient is the sign representation, trivial in characteristic 2.
    let sign = rep(&prod, field, &[1], &[(g.as_str(), m(field, 1, 1, &[-1]))]);
    let mono = natmap(&k, &regular, vec![m(field, 2, 1, &[1, 1])]);
    let epi = natmap(&regular, &sign, vec![m(field, 1, 2, &[1, -1])]);
    (d, Ses::new(mono, epi).unwrap())
}
