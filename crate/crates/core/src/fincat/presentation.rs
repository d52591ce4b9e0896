//! Compiling a presented category (objects, generating arrows, relations)
//! into an explicit [`FinCat`].
//!
//! Morphisms out of each object are enumerated as the nodes of a
//! deterministic graph whose edges are the generators, coset-enumeration
//! style: relations are traced at every node and differing endpoints are
//! merged. Enumeration stops with [`Error::NonFinite`] once more than
//! `bound` live morphisms exist.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{FinCat, Morphism};
use crate::error::Error;

/// A composable sequence of generators starting at `src`. `arrows[0]` is
/// applied first, so `[a, b]` denotes `b ∘ a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub src: usize,
    pub arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CatPresentation {
    pub objects: Vec<String>,
    pub arrows: Vec<Morphism>,
    pub relations: Vec<(Path, Path)>,
    pub bound: usize,
}

pub const DEFAULT_BOUND: usize = 1000;

impl Path {
    pub fn identity(obj: usize) -> Path {
        Path { src: obj, arrows: Vec::new() }
    }

    /// Target object, or `None` if consecutive arrows do not compose.
    pub fn target(&self, arrows: &[Morphism]) -> Option<usize> {
        let mut at = self.src;
        for &a in &self.arrows {
            let m = arrows.get(a)?;
            if m.src != at {
                return None;
            }
            at = m.tgt;
        }
        Some(at)
    }

    /// Text form `b.a` (apply `a` first); `id(x)` for the empty path.
    pub fn render(&self, objects: &[String], arrows: &[Morphism]) -> String {
        if self.arrows.is_empty() {
            return format!("id({})", objects[self.src]);
        }
        let names: Vec<&str> = self.arrows.iter().rev().map(|&a| arrows[a].name.as_str()).collect();
        names.join(".")
    }
}

struct Node {
    target: usize,
    edges: Vec<Option<usize>>,
}

struct Enumeration<'a> {
    pres: &'a CatPresentation,
    nodes: Vec<Node>,
    parent: Vec<usize>,
    live: usize,
}

impl<'a> Enumeration<'a> {
    fn new(pres: &'a CatPresentation, source: usize) -> Self {
        let mut e = Enumeration {
            pres,
            nodes: Vec::new(),
            parent: Vec::new(),
            live: 0,
        };
        e.new_node(source);
        e
    }

    fn new_node(&mut self, target: usize) -> usize {
        self.nodes.push(Node {
            target,
            edges: vec![None; self.pres.arrows.len()],
        });
        let id = self.parent.len();
        self.parent.push(id);
        self.live += 1;
        id
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn step(&mut self, node: usize, gen: usize) -> usize {
        let node = self.find(node);
        match self.nodes[node].edges[gen] {
            Some(t) => self.find(t),
            None => {
                let t = self.new_node(self.pres.arrows[gen].tgt);
                self.nodes[node].edges[gen] = Some(t);
                t
            }
        }
    }

    fn trace(&mut self, node: usize, path: &[usize]) -> usize {
        path.iter().fold(node, |cur, &g| self.step(cur, g))
    }

    fn merge(&mut self, a: usize, b: usize) {
        let mut queue = vec![(a, b)];
        while let Some((x, y)) = queue.pop() {
            let (x, y) = (self.find(x), self.find(y));
            if x == y {
                continue;
            }
            let (keep, kill) = if x < y { (x, y) } else { (y, x) };
            self.parent[kill] = keep;
            self.live -= 1;
            for g in 0..self.pres.arrows.len() {
                if let Some(t) = self.nodes[kill].edges[g] {
                    match self.nodes[keep].edges[g] {
                        Some(t2) => queue.push((t, t2)),
                        None => self.nodes[keep].edges[g] = Some(t),
                    }
                }
            }
        }
    }

    /// Runs to completion; `budget` is how many live nodes are allowed.
    fn run(&mut self, budget: usize) -> Result<(), Error> {
        let mut next = 0;
        while next < self.nodes.len() {
            let n = next;
            next += 1;
            if self.find(n) != n {
                continue;
            }
            let target = self.nodes[n].target;
            for (p, q) in &self.pres.relations {
                if p.src != target {
                    continue;
                }
                let a = self.trace(n, &p.arrows);
                let b = self.trace(n, &q.arrows);
                if self.find(a) != self.find(b) {
                    self.merge(a, b);
                }
                if self.live > budget {
                    return Err(Error::NonFinite { bound: self.pres.bound });
                }
            }
            if self.find(n) != n {
                continue;
            }
            for g in 0..self.pres.arrows.len() {
                if self.pres.arrows[g].src == target {
                    self.step(n, g);
                }
            }
            if self.live > budget {
                return Err(Error::NonFinite { bound: self.pres.bound });
            }
        }
        Ok(())
    }

    /// Live nodes in breadth-first order from the root, each with the
    /// generator path reaching it first.
    fn bfs(&mut self) -> Vec<(usize, Vec<usize>)> {
        let root = self.find(0);
        let mut order = vec![(root, Vec::new())];
        let mut seen = vec![false; self.nodes.len()];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let (n, path) = order[head].clone();
            head += 1;
            for g in 0..self.pres.arrows.len() {
                if let Some(t) = self.nodes[n].edges[g] {
                    let t = self.find(t);
                    if !seen[t] {
                        seen[t] = true;
                        let mut p = path.clone();
                        p.push(g);
                        order.push((t, p));
                    }
                }
            }
        }
        order
    }
}

impl CatPresentation {
    pub fn new(objects: Vec<String>, arrows: Vec<Morphism>) -> Self {
        CatPresentation {
            objects,
            arrows,
            relations: Vec::new(),
            bound: DEFAULT_BOUND,
        }
    }

    fn check(&self) -> Result<(), Error> {
        let n_obj = self.objects.len();
        for (i, o) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(o) {
                return Err(Error::MalformedCategory(format!("duplicate object `{o}`")));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if a.src >= n_obj || a.tgt >= n_obj {
                return Err(Error::MalformedCategory(format!("arrow `{}` has a missing endpoint", a.name)));
            }
            if self.arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(Error::MalformedCategory(format!("duplicate arrow `{}`", a.name)));
            }
        }
        for (p, q) in &self.relations {
            let show = |x: &Path| {
                if x.src < n_obj && x.arrows.iter().all(|&a| a < self.arrows.len()) {
                    x.render(&self.objects, &self.arrows)
                } else {
                    "<invalid path>".to_string()
                }
            };
            let (tp, tq) = match (p.target(&self.arrows), q.target(&self.arrows)) {
                (Some(a), Some(b)) if p.src < n_obj && q.src < n_obj => (a, b),
                _ => {
                    return Err(Error::MalformedRelation(format!(
                        "{} = {} contains a non-composable path",
                        show(p),
                        show(q)
                    )))
                }
            };
            if p.src != q.src || tp != tq {
                return Err(Error::MalformedRelation(format!(
                    "{} = {} relates non-parallel paths",
                    show(p),
                    show(q)
                )));
            }
        }
        if self.bound == 0 {
            return Err(Error::MalformedCategory("closure bound must be positive".to_string()));
        }
        Ok(())
    }

    pub fn compile(&self) -> Result<FinCat, Error> {
        self.check()?;
        let n_obj = self.objects.len();
        // Per source object: (node id, path) in BFS order, and the node graph.
        let mut per_source = Vec::with_capacity(n_obj);
        let mut total = 0;
        for x in 0..n_obj {
            let budget = self.bound.saturating_sub(total);
            let mut e = Enumeration::new(self, x);
            e.run(budget)?;
            let order = e.bfs();
            total += order.len();
            per_source.push((e, order));
        }

        let mut morphisms = Vec::with_capacity(total);
        let mut index_of: Vec<Vec<Option<usize>>> = Vec::with_capacity(n_obj);
        let mut identities = Vec::with_capacity(n_obj);
        for (x, (e, order)) in per_source.iter().enumerate() {
            let mut idx = vec![None; e.nodes.len()];
            for (n, path) in order {
                idx[*n] = Some(morphisms.len());
                let name = if path.is_empty() {
                    identities.push(morphisms.len());
                    format!("id_{}", self.objects[x])
                } else {
                    Path { src: x, arrows: path.clone() }.render(&self.objects, &self.arrows)
                };
                morphisms.push(Morphism {
                    name,
                    src: x,
                    tgt: e.nodes[*n].target,
                });
            }
            index_of.push(idx);
        }

        // Locate each morphism as (source, node, representative path).
        let mut located = Vec::with_capacity(total);
        for (x, (_, order)) in per_source.iter().enumerate() {
            for (n, path) in order {
                located.push((x, *n, path.clone()));
            }
        }
        let n = morphisms.len();
        let mut compose = vec![None; n * n];
        for f in 0..n {
            let (x, node_f, _) = located[f].clone();
            for g in 0..n {
                if morphisms[g].src != morphisms[f].tgt {
                    continue;
                }
                let path_g = &located[g].2;
                let e = &mut per_source[x].0;
                let end = path_g.iter().fold(e.find(node_f), |cur, &a| {
                    let t = e.nodes[cur].edges[a].expect("enumeration is complete");
                    e.find(t)
                });
                compose[g * n + f] = index_of[x][end];
            }
        }
        FinCat::from_parts(self.objects.clone(), morphisms, identities, compose)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn obj(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn arrow(name: &str, src: usize, tgt: usize) -> Morphism {
        Morphism { name: name.to_string(), src, tgt }
    }

    #[test]
    fn free_a2() {
        let p = CatPresentation::new(obj(&["1", "2"]), vec![arrow("a", 0, 1)]);
        let c = p.compile().unwrap();
        assert_eq!(c.n_morphisms(), 3);
        let names: Vec<&str> = c.morphisms().iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["id_1", "a", "id_2"]);
    }

    #[test]
    fn cyclic_group_of_order_two() {
        let mut p = CatPresentation::new(obj(&["x"]), vec![arrow("g", 0, 0)]);
        p.relations.push((Path { src: 0, arrows: vec![0, 0] }, Path::identity(0)));
        let c = p.compile().unwrap();
        assert_eq!(c.n_morphisms(), 2);
        let g = c.morphism_index("g").unwrap();
        assert_eq!(c.compose(g, g), Some(c.identity(0)));
    }

    #[test]
    fn free_monoid_is_not_finite() {
        let mut p = CatPresentation::new(obj(&["x"]), vec![arrow("g", 0, 0)]);
        p.bound = 10;
        assert_eq!(p.compile(), Err(Error::NonFinite { bound: 10 }));
    }

    #[test]
    fn non_parallel_relation_rejected() {
        let mut p = CatPresentation::new(obj(&["1", "2"]), vec![arrow("a", 0, 1)]);
        p.relations.push((Path { src: 0, arrows: vec![0] }, Path::identity(0)));
        assert!(matches!(p.compile(), Err(Error::MalformedRelation(_))));
        let mut p = CatPresentation::new(obj(&["1", "2"]), vec![arrow("a", 0, 1)]);
        p.relations.push((Path { src: 0, arrows: vec![0, 0] }, Path::identity(0)));
        assert!(matches!(p.compile(), Err(Error::MalformedRelation(_))));
    }

    #[test]
    fn commutative_square_relation() {
        // 00 -> 01 -> 11 and 00 -> 10 -> 11 with the square commuting
        let objects = obj(&["00", "01", "10", "11"]);
        let arrows = vec![
            arrow("r", 0, 1),
            arrow("u", 1, 3),
            arrow("s", 0, 2),
            arrow("v", 2, 3),
        ];
        let mut p = CatPresentation::new(objects.clone(), arrows.clone());
        let c_free = p.compile().unwrap();
        assert_eq!(c_free.n_morphisms(), 4 + 4 + 2);
        p.relations.push((Path { src: 0, arrows: vec![0, 1] }, Path { src: 0, arrows: vec![2, 3] }));
        let c = p.compile().unwrap();
        assert_eq!(c.n_morphisms(), 9);
    }

    #[test]
    fn symmetric_group_three() {
        // S3 = <s, t | s^2 = t^2 = 1, sts = tst>
        let mut p = CatPresentation::new(obj(&["x"]), vec![arrow("s", 0, 0), arrow("t", 0, 0)]);
        p.relations.push((Path { src: 0, arrows: vec![0, 0] }, Path::identity(0)));
        p.relations.push((Path { src: 0, arrows: vec![1, 1] }, Path::identity(0)));
        p.relations.push((
            Path { src: 0, arrows: vec![0, 1, 0] },
            Path { src: 0, arrows: vec![1, 0, 1] },
        ));
        let c = p.compile().unwrap();
        assert_eq!(c.n_morphisms(), 6);
    }
}
