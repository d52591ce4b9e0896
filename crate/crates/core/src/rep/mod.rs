//! Representations of a finite category (functors into finite-dimensional
//! vector spaces), natural maps between them, and short exact sequences.

mod curry;
mod ops;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::exact::{Field, Mat, Scalar};
use crate::fincat::FinCat;

pub use curry::{curry, uncurry, Curried};
pub use ops::{
    coker_nat, direct_sum, direct_sum_many, image_nat, ker_nat, pullback_nat, pushout_nat, quotient_rep,
    sub_rep, DirectSum, Pullback, Pushout,
};

/// A functor from a finite category to `Vect_k`: a dimension per object and
/// a `dim(tgt) × dim(src)` matrix per morphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rep {
    cat: Arc<FinCat>,
    field: Field,
    dims: Vec<usize>,
    action: Vec<Mat>,
}

/// One failed functor law.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongShape { morphism: String },
    IdentityNotIdentity { object: String },
    /// `F(g∘f) ≠ F(g)·F(f)`, where `g∘f` is the morphism `composite`.
    NotFunctorial { g: String, f: String, composite: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongShape { morphism } => write!(f, "matrix of `{morphism}` has the wrong shape"),
            Violation::IdentityNotIdentity { object } => {
                write!(f, "identity of `{object}` does not act as the identity matrix")
            }
            Violation::NotFunctorial { g, f: ff, composite } => {
                write!(f, "F({g}∘{ff}) ≠ F({g})·F({ff}) where {g}∘{ff} = {composite}")
            }
        }
    }
}

impl Rep {
    pub fn new(cat: Arc<FinCat>, field: Field, dims: Vec<usize>, action: Vec<Mat>) -> Result<Rep, Error> {
        if dims.len() != cat.n_objects() || action.len() != cat.n_morphisms() {
            return Err(Error::NotFunctorial(String::from(
                "one dimension per object and one matrix per morphism are required",
            )));
        }
        if action.iter().any(|m| m.field() != field) {
            return Err(Error::CategoryMismatch);
        }
        let rep = Rep { cat, field, dims, action };
        match rep.validate().into_iter().next() {
            Some(v) => Err(Error::NotFunctorial(format!("{v}"))),
            None => Ok(rep),
        }
    }

    pub(crate) fn new_unchecked(cat: Arc<FinCat>, field: Field, dims: Vec<usize>, action: Vec<Mat>) -> Rep {
        let rep = Rep { cat, field, dims, action };
        debug_assert!(rep.validate().is_empty(), "{:?}", rep.validate());
        rep
    }

    /// Builds a representation from matrices on some morphisms, filling in
    /// the rest by composition. Fails on a conflict, on a morphism that is
    /// not a composite of the given ones, or on any functor-law violation.
    pub fn from_generators(
        cat: Arc<FinCat>,
        field: Field,
        dims: Vec<usize>,
        given: Vec<(usize, Mat)>,
    ) -> Result<Rep, Error> {
        if dims.len() != cat.n_objects() {
            return Err(Error::NotFunctorial(String::from("one dimension per object is required")));
        }
        let n = cat.n_morphisms();
        let mut known: Vec<Option<Mat>> = vec![None; n];
        for o in 0..cat.n_objects() {
            known[cat.identity(o)] = Some(Mat::identity(field, dims[o]));
        }
        for (m, mat) in given {
            let (s, t) = (cat.src(m), cat.tgt(m));
            if mat.shape() != (dims[t], dims[s]) || mat.field() != field {
                return Err(Error::NotFunctorial(format!(
                    "{}",
                    Violation::WrongShape { morphism: cat.morphism(m).name.clone() }
                )));
            }
            if cat.is_identity(m) {
                if known[m].as_ref() != Some(&mat) {
                    return Err(Error::NotFunctorial(format!(
                        "{}",
                        Violation::IdentityNotIdentity { object: cat.object_name(s).into() }
                    )));
                }
                continue;
            }
            known[m] = Some(mat);
        }
        loop {
            let mut changed = false;
            for f in 0..n {
                for g in 0..n {
                    let Some(h) = cat.compose(g, f) else { continue };
                    let (Some(mf), Some(mg)) = (&known[f], &known[g]) else { continue };
                    let prod = mg * mf;
                    match &known[h] {
                        Some(existing) if *existing != prod => {
                            return Err(Error::NotFunctorial(format!(
                                "{}",
                                Violation::NotFunctorial {
                                    g: cat.morphism(g).name.clone(),
                                    f: cat.morphism(f).name.clone(),
                                    composite: cat.morphism(h).name.clone(),
                                }
                            )));
                        }
                        Some(_) => {}
                        None => {
                            known[h] = Some(prod);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                break;
            }
        }
        let mut action = Vec::with_capacity(n);
        for (m, k) in known.into_iter().enumerate() {
            match k {
                Some(mat) => action.push(mat),
                None => {
                    return Err(Error::NotFunctorial(format!(
                        "no matrix determines `{}`",
                        cat.morphism(m).name
                    )))
                }
            }
        }
        Rep::new(cat, field, dims, action)
    }

    pub fn zero(cat: Arc<FinCat>, field: Field) -> Rep {
        let dims = vec![0; cat.n_objects()];
        let action = (0..cat.n_morphisms()).map(|_| Mat::zeros(field, 0, 0)).collect();
        Rep { cat, field, dims, action }
    }

    /// Every functor-law violation; empty when the data is a functor.
    pub fn validate(&self) -> Vec<Violation> {
        let cat = &self.cat;
        let mut out = Vec::new();
        for m in 0..cat.n_morphisms() {
            let (s, t) = (cat.src(m), cat.tgt(m));
            if self.action[m].shape() != (self.dims[t], self.dims[s]) {
                out.push(Violation::WrongShape { morphism: cat.morphism(m).name.clone() });
            }
        }
        if !out.is_empty() {
            return out;
        }
        for o in 0..cat.n_objects() {
            if self.action[cat.identity(o)] != Mat::identity(self.field, self.dims[o]) {
                out.push(Violation::IdentityNotIdentity { object: cat.object_name(o).into() });
            }
        }
        for f in 0..cat.n_morphisms() {
            for g in 0..cat.n_morphisms() {
                if cat.is_identity(f) || cat.is_identity(g) {
                    continue;
                }
                let Some(h) = cat.compose(g, f) else { continue };
                if self.action[h] != &self.action[g] * &self.action[f] {
                    out.push(Violation::NotFunctorial {
                        g: cat.morphism(g).name.clone(),
                        f: cat.morphism(f).name.clone(),
                        composite: cat.morphism(h).name.clone(),
                    });
                }
            }
        }
        out
    }

    pub fn cat(&self) -> &Arc<FinCat> {
        &self.cat
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self, o: usize) -> usize {
        self.dims[o]
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn action(&self, m: usize) -> &Mat {
        &self.action[m]
    }

    pub fn actions(&self) -> &[Mat] {
        &self.action
    }

    pub fn same_category(&self, other: &Rep) -> bool {
        self.field == other.field && (Arc::ptr_eq(&self.cat, &other.cat) || self.cat == other.cat)
    }

    pub(crate) fn ensure_compatible(&self, other: &Rep) -> Result<(), Error> {
        if self.same_category(other) {
            Ok(())
        } else {
            Err(Error::CategoryMismatch)
        }
    }

    /// The same data viewed over an equal category value (used when two
    /// constructions produce structurally identical categories).
    pub fn with_cat(&self, cat: Arc<FinCat>) -> Result<Rep, Error> {
        if *cat != *self.cat {
            return Err(Error::CategoryMismatch);
        }
        Ok(Rep { cat, ..self.clone() })
    }
}

/// A natural transformation between two representations of the same category.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NatMap {
    src: Rep,
    tgt: Rep,
    comp: Vec<Mat>,
}

impl NatMap {
    pub fn new(src: Rep, tgt: Rep, comp: Vec<Mat>) -> Result<NatMap, Error> {
        src.ensure_compatible(&tgt)?;
        if comp.len() != src.cat.n_objects() {
            return Err(Error::NotNatural(String::from("one component per object is required")));
        }
        for (o, c) in comp.iter().enumerate() {
            if c.shape() != (tgt.dim(o), src.dim(o)) || c.field() != src.field {
                return Err(Error::NotNatural(format!(
                    "component at `{}` has the wrong shape",
                    src.cat.object_name(o)
                )));
            }
        }
        let map = NatMap { src, tgt, comp };
        match map.naturality_violations().first() {
            Some(&m) => Err(Error::NotNatural(format!(
                "square at `{}` does not commute",
                map.src.cat.morphism(m).name
            ))),
            None => Ok(map),
        }
    }

    pub(crate) fn new_unchecked(src: Rep, tgt: Rep, comp: Vec<Mat>) -> NatMap {
        let map = NatMap { src, tgt, comp };
        debug_assert!(map.naturality_violations().is_empty());
        map
    }

    /// Morphisms `λ: i → j` where `tgt(λ)·comp(i) ≠ comp(j)·src(λ)`.
    pub fn naturality_violations(&self) -> Vec<usize> {
        let cat = &self.src.cat;
        cat.non_identities()
            .filter(|&m| {
                let (i, j) = (cat.src(m), cat.tgt(m));
                self.tgt.action(m) * &self.comp[i] != &self.comp[j] * self.src.action(m)
            })
            .collect()
    }

    pub fn identity(rep: &Rep) -> NatMap {
        let comp = rep.dims.iter().map(|&d| Mat::identity(rep.field, d)).collect();
        NatMap { src: rep.clone(), tgt: rep.clone(), comp }
    }

    pub fn zero(src: &Rep, tgt: &Rep) -> NatMap {
        let comp = (0..src.cat.n_objects())
            .map(|o| Mat::zeros(src.field, tgt.dim(o), src.dim(o)))
            .collect();
        NatMap { src: src.clone(), tgt: tgt.clone(), comp }
    }

    pub fn src(&self) -> &Rep {
        &self.src
    }

    pub fn tgt(&self) -> &Rep {
        &self.tgt
    }

    pub fn comp(&self, o: usize) -> &Mat {
        &self.comp[o]
    }

    pub fn comps(&self) -> &[Mat] {
        &self.comp
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &NatMap) -> Result<NatMap, Error> {
        if first.tgt != self.src {
            return Err(Error::CategoryMismatch);
        }
        let comp = self.comp.iter().zip(&first.comp).map(|(a, b)| a * b).collect();
        Ok(NatMap { src: first.src.clone(), tgt: self.tgt.clone(), comp })
    }

    pub fn add(&self, other: &NatMap) -> Result<NatMap, Error> {
        if self.src != other.src || self.tgt != other.tgt {
            return Err(Error::CategoryMismatch);
        }
        let comp = self.comp.iter().zip(&other.comp).map(|(a, b)| a + b).collect();
        Ok(NatMap { src: self.src.clone(), tgt: self.tgt.clone(), comp })
    }

    pub fn scale(&self, s: &Scalar) -> NatMap {
        NatMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            comp: self.comp.iter().map(|c| c.scale(s)).collect(),
        }
    }

    pub fn neg(&self) -> NatMap {
        NatMap {
            src: self.src.clone(),
            tgt: self.tgt.clone(),
            comp: self.comp.iter().map(|c| -c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().all(Mat::is_zero)
    }

    pub fn is_mono(&self) -> bool {
        self.comp.iter().all(Mat::is_injective)
    }

    pub fn is_epi(&self) -> bool {
        self.comp.iter().all(Mat::is_surjective)
    }

    pub fn is_iso(&self) -> bool {
        self.comp.iter().all(Mat::is_invertible)
    }

    pub fn inverse(&self) -> Option<NatMap> {
        let comp = self.comp.iter().map(Mat::inverse).collect::<Option<Vec<_>>>()?;
        Some(NatMap { src: self.tgt.clone(), tgt: self.src.clone(), comp })
    }

    /// All components concatenated, each row-major, in object order.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.comp.iter().flat_map(|c| c.entries().iter().cloned()).collect()
    }

    /// Inverse of [`NatMap::flatten`]; checks naturality.
    pub fn from_flat(src: &Rep, tgt: &Rep, flat: &[Scalar]) -> Result<NatMap, Error> {
        let mut comp = Vec::with_capacity(src.cat.n_objects());
        let mut at = 0;
        for o in 0..src.cat.n_objects() {
            let (r, c) = (tgt.dim(o), src.dim(o));
            let m = Mat::from_vec(src.field, r, c, flat[at..at + r * c].to_vec())?;
            at += r * c;
            comp.push(m);
        }
        NatMap::new(src.clone(), tgt.clone(), comp)
    }
}

/// `0 → A → B → C → 0`, exact at every object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ses {
    mono: NatMap,
    epi: NatMap,
}

impl Ses {
    pub fn new(mono: NatMap, epi: NatMap) -> Result<Ses, Error> {
        if mono.tgt != epi.src {
            return Err(Error::NotExact(String::from("the middle terms differ")));
        }
        let cat = mono.src.cat.clone();
        for o in 0..cat.n_objects() {
            let name = cat.object_name(o);
            if !mono.comp[o].is_injective() {
                return Err(Error::NotExact(format!("first map is not injective at `{name}`")));
            }
            if !epi.comp[o].is_surjective() {
                return Err(Error::NotExact(format!("second map is not surjective at `{name}`")));
            }
            if !(&epi.comp[o] * &mono.comp[o]).is_zero() {
                return Err(Error::NotExact(format!("composite is nonzero at `{name}`")));
            }
            if mono.tgt.dim(o) != mono.src.dim(o) + epi.tgt.dim(o) {
                return Err(Error::NotExact(format!("image and kernel differ at `{name}`")));
            }
        }
        Ok(Ses { mono, epi })
    }

    pub fn mono(&self) -> &NatMap {
        &self.mono
    }

    pub fn epi(&self) -> &NatMap {
        &self.epi
    }

    pub fn sub(&self) -> &Rep {
        &self.mono.src
    }

    pub fn middle(&self) -> &Rep {
        &self.mono.tgt
    }

    pub fn quotient(&self) -> &Rep {
        &self.epi.tgt
    }

    /// The split sequence `A → A ⊕ C → C`.
    pub fn split(a: &Rep, c: &Rep) -> Result<Ses, Error> {
        let sum = direct_sum(a, c)?;
        Ses::new(sum.inj1, sum.proj2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::shapes;

    const Q: Field = Field::Rationals;

    #[test]
    fn constant_functor_is_valid() {
        let cat = Arc::new(shapes::span());
        let dims = vec![2; 3];
        let action = (0..5).map(|_| Mat::identity(Q, 2)).collect();
        assert!(Rep::new(cat, Q, dims, action).is_ok());
    }

    #[test]
    fn a2_rep_with_scalar_two() {
        let cat = Arc::new(shapes::a2());
        let a = cat.morphism_index("a").unwrap();
        let r = Rep::from_generators(cat, Q, vec![1, 1], vec![(a, Mat::from_i64(Q, 1, 1, &[2]))]);
        assert!(r.is_ok());
    }

    #[test]
    fn c2_with_two_is_not_functorial() {
        let cat = Arc::new(shapes::cyclic_group(2));
        let g = cat.morphism_index("g").unwrap();
        let mut action = vec![Mat::identity(Q, 1); 2];
        action[g] = Mat::from_i64(Q, 1, 1, &[2]);
        let rep = Rep { cat: cat.clone(), field: Q, dims: vec![1], action };
        let v = rep.validate();
        assert_eq!(v, vec![Violation::NotFunctorial { g: "g".into(), f: "g".into(), composite: "id_x".into() }]);
        let err = Rep::from_generators(cat, Q, vec![1], vec![(g, Mat::from_i64(Q, 1, 1, &[2]))]).unwrap_err();
        assert!(matches!(err, Error::NotFunctorial(ref s) if s.contains("g∘g")), "{err}");
    }

    #[test]
    fn natmap_rejects_non_natural() {
        let cat = Arc::new(shapes::a2());
        let a = cat.morphism_index("a").unwrap();
        let f = Rep::from_generators(cat.clone(), Q, vec![1, 1], vec![(a, Mat::identity(Q, 1))]).unwrap();
        let comp = vec![Mat::identity(Q, 1), Mat::zeros(Q, 1, 1)];
        assert!(matches!(NatMap::new(f.clone(), f.clone(), comp), Err(Error::NotNatural(_))));
        assert!(NatMap::new(f.clone(), f.clone(), vec![Mat::identity(Q, 1); 2]).is_ok());
    }

    #[test]
    fn flatten_round_trip() {
        let cat = Arc::new(shapes::span());
        let k = Rep::new(cat, Q, vec![1; 3], vec![Mat::identity(Q, 1); 5]).unwrap();
        let id = NatMap::identity(&k).scale(&Q.from_i64(3));
        let back = NatMap::from_flat(&k, &k, &id.flatten()).unwrap();
        assert_eq!(back, id);
    }
}
