//! Finite categories as explicit data.
//!
//! A [`FinCat`] lists its objects and morphisms and carries a total
//! composition table for composable pairs. Every constructor validates the
//! identity and associativity laws exhaustively, so any `FinCat` value in
//! hand is a genuine category.

mod presentation;
pub mod shapes;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

pub use presentation::{CatPresentation, Path, DEFAULT_BOUND};

/// Name of the object added by [`FinCat::one_point_extension`].
pub const STAR: &str = "*";

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub name: String,
    pub src: usize,
    pub tgt: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FinCat {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    identities: Vec<usize>,
    /// `compose[g * n + f] = g ∘ f` when `tgt(f) = src(g)`.
    compose: Vec<Option<usize>>,
    /// Morphisms `i → j`, in declaration order, at `homs[i * objects + j]`.
    homs: Vec<Vec<usize>>,
}

impl FinCat {
    /// Assembles a category from explicit tables and checks every law.
    pub fn from_parts(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        identities: Vec<usize>,
        compose: Vec<Option<usize>>,
    ) -> Result<FinCat, Error> {
        let n_obj = objects.len();
        let mut homs = vec![Vec::new(); n_obj * n_obj];
        for (idx, m) in morphisms.iter().enumerate() {
            if m.src >= n_obj || m.tgt >= n_obj {
                return Err(Error::MalformedCategory(format!(
                    "morphism `{}` references a missing object",
                    m.name
                )));
            }
            homs[m.src * n_obj + m.tgt].push(idx);
        }
        let cat = FinCat {
            objects,
            morphisms,
            identities,
            compose,
            homs,
        };
        match cat.violations().into_iter().next() {
            Some(v) => Err(Error::MalformedCategory(v)),
            None => Ok(cat),
        }
    }

    /// Every law violation, as human-readable lines. Empty for a valid category.
    pub fn violations(&self) -> Vec<String> {
        let mut out = Vec::new();
        let n_obj = self.objects.len();
        let n = self.morphisms.len();
        for (i, name) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(name) {
                out.push(format!("duplicate object `{name}`"));
            }
        }
        for (i, m) in self.morphisms.iter().enumerate() {
            if self.morphisms[..i].iter().any(|o| o.name == m.name) {
                out.push(format!("duplicate morphism `{}`", m.name));
            }
        }
        if self.identities.len() != n_obj {
            out.push("identity table must have one entry per object".to_string());
            return out;
        }
        if self.compose.len() != n * n {
            out.push("composition table has the wrong size".to_string());
            return out;
        }
        for (o, &id) in self.identities.iter().enumerate() {
            if id >= n || self.morphisms[id].src != o || self.morphisms[id].tgt != o {
                out.push(format!("identity of `{}` is not an endomorphism of it", self.objects[o]));
                return out;
            }
        }
        for g in 0..n {
            for f in 0..n {
                let composable = self.morphisms[f].tgt == self.morphisms[g].src;
                match (composable, self.compose[g * n + f]) {
                    (true, None) => out.push(format!(
                        "{} ∘ {} is undefined",
                        self.morphisms[g].name, self.morphisms[f].name
                    )),
                    (false, Some(_)) => out.push(format!(
                        "{} ∘ {} is defined for a non-composable pair",
                        self.morphisms[g].name, self.morphisms[f].name
                    )),
                    (true, Some(h)) => {
                        if h >= n
                            || self.morphisms[h].src != self.morphisms[f].src
                            || self.morphisms[h].tgt != self.morphisms[g].tgt
                        {
                            out.push(format!(
                                "{} ∘ {} has the wrong endpoints",
                                self.morphisms[g].name, self.morphisms[f].name
                            ));
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        for f in 0..n {
            let (s, t) = (self.morphisms[f].src, self.morphisms[f].tgt);
            if self.compose[self.identities[t] * n + f] != Some(f)
                || self.compose[f * n + self.identities[s]] != Some(f)
            {
                out.push(format!("identity law fails at `{}`", self.morphisms[f].name));
            }
        }
        for f in 0..n {
            for g in 0..n {
                let Some(gf) = self.compose[g * n + f] else { continue };
                for h in 0..n {
                    let Some(hg) = self.compose[h * n + g] else { continue };
                    if self.compose[h * n + gf] != self.compose[hg * n + f] {
                        out.push(format!(
                            "associativity fails at ({}, {}, {})",
                            self.morphisms[h].name, self.morphisms[g].name, self.morphisms[f].name
                        ));
                    }
                }
            }
        }
        out
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn object_name(&self, o: usize) -> &str {
        &self.objects[o]
    }

    pub fn morphism(&self, m: usize) -> &Morphism {
        &self.morphisms[m]
    }

    pub fn src(&self, m: usize) -> usize {
        self.morphisms[m].src
    }

    pub fn tgt(&self, m: usize) -> usize {
        self.morphisms[m].tgt
    }

    pub fn identity(&self, o: usize) -> usize {
        self.identities[o]
    }

    pub fn is_identity(&self, m: usize) -> bool {
        self.identities[self.morphisms[m].src] == m
    }

    /// `g ∘ f`, defined when `tgt(f) = src(g)`.
    pub fn compose(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.morphisms.len() + f]
    }

    pub fn hom(&self, i: usize, j: usize) -> &[usize] {
        &self.homs[i * self.objects.len() + j]
    }

    pub fn object_index(&self, name: &str) -> Option<usize> {
        self.objects.iter().position(|o| o == name)
    }

    pub fn morphism_index(&self, name: &str) -> Option<usize> {
        self.morphisms.iter().position(|m| m.name == name)
    }

    pub fn non_identities(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.morphisms.len()).filter(move |&m| !self.is_identity(m))
    }

    /// Only identity morphisms.
    pub fn is_discrete(&self) -> bool {
        self.morphisms.len() == self.objects.len()
    }

    /// An object `t` with exactly one morphism from every object.
    pub fn terminal_object(&self) -> Option<usize> {
        (0..self.n_objects()).find(|&t| (0..self.n_objects()).all(|i| self.hom(i, t).len() == 1))
    }

    /// An object `s` with exactly one morphism to every object.
    pub fn initial_object(&self) -> Option<usize> {
        (0..self.n_objects()).find(|&s| (0..self.n_objects()).all(|j| self.hom(s, j).len() == 1))
    }

    /// The opposite category: same objects and morphism names, reversed arrows.
    pub fn opposite(&self) -> FinCat {
        let n = self.morphisms.len();
        let morphisms = self
            .morphisms
            .iter()
            .map(|m| Morphism {
                name: m.name.clone(),
                src: m.tgt,
                tgt: m.src,
            })
            .collect();
        let mut compose = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                compose[g * n + f] = self.compose[f * n + g];
            }
        }
        FinCat::from_parts(self.objects.clone(), morphisms, self.identities.clone(), compose)
            .expect("opposite of a valid category is valid")
    }

    /// The product category. Object `(i, j)` has index `i * |Ob(d)| + j` and is
    /// named `(i,j)`; morphism `(f, g)` has index `f * |Mor(d)| + g`.
    pub fn product(&self, d: &FinCat) -> FinCat {
        let (no, mo) = (d.n_objects(), d.n_morphisms());
        let mut objects = Vec::with_capacity(self.n_objects() * no);
        for a in &self.objects {
            for b in &d.objects {
                objects.push(format!("({a},{b})"));
            }
        }
        let mut morphisms = Vec::with_capacity(self.n_morphisms() * mo);
        for f in &self.morphisms {
            for g in &d.morphisms {
                morphisms.push(Morphism {
                    name: format!("({},{})", f.name, g.name),
                    src: f.src * no + g.src,
                    tgt: f.tgt * no + g.tgt,
                });
            }
        }
        let identities = (0..self.n_objects())
            .flat_map(|i| (0..no).map(move |j| (i, j)))
            .map(|(i, j)| self.identities[i] * mo + d.identities[j])
            .collect();
        let n = morphisms.len();
        let mut compose = vec![None; n * n];
        for g in 0..n {
            for f in 0..n {
                let (g1, g2) = (g / mo, g % mo);
                let (f1, f2) = (f / mo, f % mo);
                if let (Some(h1), Some(h2)) = (self.compose(g1, f1), d.compose(g2, f2)) {
                    compose[g * n + f] = Some(h1 * mo + h2);
                }
            }
        }
        FinCat::from_parts(objects, morphisms, identities, compose)
            .expect("product of valid categories is valid")
    }

    /// Adds a source object `*` (appended last) with one morphism `α_i: * → i`
    /// per object, composing by `λ ∘ α_i = α_j` for `λ: i → j`.
    ///
    /// Morphism layout: the original morphisms keep their indices, then the
    /// `α_i` in object order, then `1_*`.
    pub fn one_point_extension(&self) -> FinCat {
        let n_obj = self.n_objects();
        let n_old = self.n_morphisms();
        let star = n_obj;
        let mut objects = self.objects.clone();
        objects.push(STAR.to_string());
        let mut morphisms = self.morphisms.clone();
        for (i, name) in self.objects.iter().enumerate() {
            morphisms.push(Morphism {
                name: format!("alpha_{name}"),
                src: star,
                tgt: i,
            });
        }
        let id_star = n_old + n_obj;
        morphisms.push(Morphism {
            name: format!("id_{STAR}"),
            src: star,
            tgt: star,
        });
        let mut identities = self.identities.clone();
        identities.push(id_star);
        let n = morphisms.len();
        let alpha = |i: usize| n_old + i;
        let mut compose = vec![None; n * n];
        for g in 0..n_old {
            for f in 0..n_old {
                compose[g * n + f] = self.compose(g, f);
            }
            compose[g * n + alpha(self.src(g))] = Some(alpha(self.tgt(g)));
        }
        for i in 0..n_obj {
            compose[alpha(i) * n + id_star] = Some(alpha(i));
        }
        compose[id_star * n + id_star] = Some(id_star);
        FinCat::from_parts(objects, morphisms, identities, compose)
            .expect("one-point extension of a valid category is valid")
    }

    /// The morphism `α_i` of a one-point extension built from a category with
    /// `n_obj` objects and `n_old` morphisms.
    pub fn extension_alpha(n_old: usize, i: usize) -> usize {
        n_old + i
    }
}
