//! The text format for categories, functors, natural maps and short exact
//! sequences.
//!
//! ```text
//! category Span {
//!   objects: c, a, b;
//!   arrows: p: c -> a, q: c -> b;
//!   relations: ;            # optional, `g.g = id(x)` style
//!   bound: 1000;            # optional
//! }
//! category SpanA2 = product(Span, A2);
//!
//! functor K over Span field Q {
//!   dim c = 1; dim a = 1; dim b = 1;
//!   map p = [[1]]; map q = [[1]];
//! }
//! natmap phi: K -> F { at c = [[1], [1]]; }
//! ses eta { mono = phi; epi = psi; }
//! ```
//!
//! Paths are written `b.a` for `b ∘ a`. Missing dimensions are zero and
//! missing natural-map components are zero matrices.

mod lexer;
mod parser;

use std::fmt;

pub use parser::parse_document;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{pos}: {message}")]
pub struct SyntaxError {
    pub pos: Pos,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PathLit {
    Identity(String),
    /// Arrow names as written, outermost first: `b.a` is `["b", "a"]`.
    Arrows(Vec<String>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowDecl {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatExpr {
    Block {
        objects: Vec<(String, Pos)>,
        arrows: Vec<ArrowDecl>,
        relations: Vec<(PathLit, PathLit, Pos)>,
        bound: Option<usize>,
    },
    /// A previously declared category or a library shape.
    Named(String, Pos),
    Product(Box<CatExpr>, Box<CatExpr>),
    Opposite(Box<CatExpr>),
    Extend(Box<CatExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatLit {
    pub rows: Vec<Vec<String>>,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorItem {
    pub name: String,
    pub pos: Pos,
    pub cat: CatExpr,
    pub field: String,
    pub field_pos: Pos,
    pub dims: Vec<(String, usize, Pos)>,
    pub maps: Vec<(String, MatLit)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatMapItem {
    pub name: String,
    pub pos: Pos,
    pub src: (String, Pos),
    pub tgt: (String, Pos),
    pub comps: Vec<(String, MatLit)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesItem {
    pub name: String,
    pub pos: Pos,
    pub mono: (String, Pos),
    pub epi: (String, Pos),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Category { name: String, pos: Pos, def: CatExpr },
    Functor(FunctorItem),
    NatMap(NatMapItem),
    Ses(SesItem),
}
