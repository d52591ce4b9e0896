//! The standard index shapes used throughout the tests and reports.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::presentation::{CatPresentation, Path};
use super::{FinCat, Morphism};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn arrow(name: &str, src: usize, tgt: usize) -> Morphism {
    Morphism { name: name.to_string(), src, tgt }
}

/// The terminal category: one object, one morphism.
pub fn point() -> FinCat {
    discrete(1)
}

/// The discrete category on objects `1..=n`.
pub fn discrete(n: usize) -> FinCat {
    let objects: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    CatPresentation::new(objects, Vec::new())
        .compile()
        .expect("discrete categories are finite")
}

/// `1 → 2` with the arrow named `a`.
pub fn a2() -> FinCat {
    CatPresentation::new(names(&["1", "2"]), vec![arrow("a", 0, 1)])
        .compile()
        .expect("A2 is finite")
}

/// `a ← c → b` with arrows `p: c → a`, `q: c → b`. Object order is `c, a, b`.
pub fn span() -> FinCat {
    CatPresentation::new(names(&["c", "a", "b"]), vec![arrow("p", 0, 1), arrow("q", 0, 2)])
        .compile()
        .expect("the span is finite")
}

/// The opposite of [`span`]: `a → c ← b`.
pub fn cospan() -> FinCat {
    span().opposite()
}

/// The cyclic group of order `n` as a one-object category on object `x`,
/// generated by `g` with `g^n = id`.
pub fn cyclic_group(n: usize) -> FinCat {
    assert!(n >= 1, "group order must be positive");
    let mut p = CatPresentation::new(names(&["x"]), vec![arrow("g", 0, 0)]);
    p.relations.push((Path { src: 0, arrows: vec![0; n] }, Path::identity(0)));
    p.compile().expect("cyclic groups are finite")
}

/// The commutative square `A2 × A2`.
pub fn square() -> FinCat {
    a2().product(&a2())
}

/// Library lookup by name: `Point`, `A2`, `Span`, `Cospan`, `Square`,
/// `BC<n>` (cyclic group), `Discrete<n>`.
pub fn by_name(name: &str) -> Option<FinCat> {
    match name {
        "Point" => Some(point()),
        "A2" => Some(a2()),
        "Span" => Some(span()),
        "Cospan" => Some(cospan()),
        "Square" => Some(square()),
        _ => {
            if let Some(n) = name.strip_prefix("BC").and_then(|s| s.parse::<usize>().ok()) {
                (1..=12).contains(&n).then(|| cyclic_group(n))
            } else if let Some(n) = name.strip_prefix("Discrete").and_then(|s| s.parse::<usize>().ok()) {
                (n <= 12).then(|| discrete(n))
            } else {
                None
            }
        }
    }
}

/// Names accepted by [`by_name`] that the reports and tests iterate over.
pub fn library_names() -> Vec<String> {
    let mut v = names(&["Point", "A2", "Span", "Cospan", "Square", "BC2", "BC3"]);
    for n in 1..=3 {
        v.push(format!("Discrete{n}"));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_sizes() {
        assert_eq!(point().n_morphisms(), 1);
        assert_eq!(discrete(3).n_morphisms(), 3);
        assert_eq!(a2().n_morphisms(), 3);
        assert_eq!(span().n_morphisms(), 5);
        assert_eq!(cospan().n_morphisms(), 5);
        assert_eq!(cyclic_group(2).n_morphisms(), 2);
        assert_eq!(cyclic_group(3).n_morphisms(), 3);
        assert_eq!(square().n_morphisms(), 9);
    }

    #[test]
    fn lookup() {
        for n in library_names() {
            assert!(by_name(&n).is_some(), "{n}");
        }
        assert!(by_name("Nope").is_none());
    }
}
