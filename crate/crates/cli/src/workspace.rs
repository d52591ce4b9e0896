//! Named categories, functors, natural maps and sequences, built from parsed
//! items and printed back to the same text format.

use std::fmt::Write as _;
use std::sync::Arc;

use exactlim_core::fincat::{shapes, CatPresentation, FinCat, Morphism, Path, DEFAULT_BOUND};
use exactlim_core::{Field, Mat, NatMap, Rep, Scalar, Ses};

use crate::dsl::{parse_document, CatExpr, Item, MatLit, PathLit, Pos, SyntaxError};

#[derive(Debug, thiserror::Error)]
pub enum DslError {
    #[error("syntax error at {0}")]
    Syntax(#[from] SyntaxError),
    #[error("{pos}: {message}")]
    Semantic { pos: Pos, message: String },
}

fn semantic<T>(pos: Pos, message: impl Into<String>) -> Result<T, DslError> {
    Err(DslError::Semantic { pos, message: message.into() })
}

/// How a category was declared, without source positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatDef {
    Presented(CatPresentation),
    Named(String),
    Product(Box<CatDef>, Box<CatDef>),
    Opposite(Box<CatDef>),
    Extend(Box<CatDef>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CategoryEntry {
    pub name: String,
    pub def: CatDef,
    pub cat: Arc<FinCat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FunctorEntry {
    pub name: String,
    pub over: CatDef,
    pub rep: Rep,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatMapEntry {
    pub name: String,
    pub src: String,
    pub tgt: String,
    pub map: NatMap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesEntry {
    pub name: String,
    pub mono: String,
    pub epi: String,
    pub ses: Ses,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Workspace {
    pub categories: Vec<CategoryEntry>,
    pub functors: Vec<FunctorEntry>,
    pub natmaps: Vec<NatMapEntry>,
    pub sequences: Vec<SesEntry>,
}

pub fn parse_field(text: &str) -> Option<Field> {
    if text == "Q" {
        return Some(Field::Rationals);
    }
    let p: u32 = text.strip_prefix('F')?.parse().ok()?;
    Field::prime(p).ok()
}

impl Workspace {
    pub fn parse(src: &str) -> Result<Workspace, DslError> {
        let mut ws = Workspace::default();
        for item in parse_document(src)? {
            ws.add(item)?;
        }
        Ok(ws)
    }

    pub fn category(&self, name: &str) -> Option<&CategoryEntry> {
        self.categories.iter().find(|c| c.name == name)
    }

    pub fn functor(&self, name: &str) -> Option<&FunctorEntry> {
        self.functors.iter().find(|c| c.name == name)
    }

    pub fn natmap(&self, name: &str) -> Option<&NatMapEntry> {
        self.natmaps.iter().find(|c| c.name == name)
    }

    pub fn sequence(&self, name: &str) -> Option<&SesEntry> {
        self.sequences.iter().find(|c| c.name == name)
    }

    /// A declared category, else a library shape.
    pub fn lookup_category(&self, name: &str) -> Option<(CatDef, Arc<FinCat>)> {
        if let Some(c) = self.category(name) {
            return Some((CatDef::Named(name.into()), c.cat.clone()));
        }
        shapes::by_name(name).map(|c| (CatDef::Named(name.into()), Arc::new(c)))
    }

    /// Evaluates a category definition in this workspace.
    pub fn eval(&self, def: &CatDef) -> Option<Arc<FinCat>> {
        match def {
            CatDef::Presented(p) => p.compile().ok().map(Arc::new),
            CatDef::Named(n) => self.lookup_category(n).map(|x| x.1),
            CatDef::Product(a, b) => Some(Arc::new(self.eval(a)?.product(&*self.eval(b)?))),
            CatDef::Opposite(a) => Some(Arc::new(self.eval(a)?.opposite())),
            CatDef::Extend(a) => Some(Arc::new(self.eval(a)?.one_point_extension())),
        }
    }

    fn taken(&self, name: &str, kind: &str) -> bool {
        match kind {
            "category" => self.category(name).is_some(),
            "functor" => self.functor(name).is_some(),
            "natmap" => self.natmap(name).is_some(),
            _ => self.sequence(name).is_some(),
        }
    }

    fn resolve(&self, e: &CatExpr) -> Result<(CatDef, Arc<FinCat>), DslError> {
        match e {
            CatExpr::Named(n, pos) => match self.lookup_category(n) {
                Some(x) => Ok(x),
                None => semantic(*pos, format!("unknown category `{n}`")),
            },
            CatExpr::Product(a, b) => {
                let (da, ca) = self.resolve(a)?;
                let (db, cb) = self.resolve(b)?;
                Ok((CatDef::Product(Box::new(da), Box::new(db)), Arc::new(ca.product(&cb))))
            }
            CatExpr::Opposite(a) => {
                let (d, c) = self.resolve(a)?;
                Ok((CatDef::Opposite(Box::new(d)), Arc::new(c.opposite())))
            }
            CatExpr::Extend(a) => {
                let (d, c) = self.resolve(a)?;
                Ok((CatDef::Extend(Box::new(d)), Arc::new(c.one_point_extension())))
            }
            CatExpr::Block { objects, arrows, relations, bound } => {
                let mut obj_names: Vec<String> = Vec::new();
                for (o, pos) in objects {
                    if obj_names.contains(o) {
                        return semantic(*pos, format!("duplicate object `{o}`"));
                    }
                    obj_names.push(o.clone());
                }
                let obj = |name: &str, pos: Pos| match obj_names.iter().position(|x| x == name) {
                    Some(i) => Ok(i),
                    None => semantic(pos, format!("unknown object `{name}`")),
                };
                let mut morphs: Vec<Morphism> = Vec::new();
                for a in arrows {
                    if morphs.iter().any(|m| m.name == a.name) {
                        return semantic(a.pos, format!("duplicate arrow `{}`", a.name));
                    }
                    morphs.push(Morphism { name: a.name.clone(), src: obj(&a.src, a.pos)?, tgt: obj(&a.tgt, a.pos)? });
                }
                let path = |p: &PathLit, pos: Pos| -> Result<Path, DslError> {
                    match p {
                        PathLit::Identity(o) => Ok(Path::identity(obj(o, pos)?)),
                        PathLit::Arrows(names) => {
                            let mut idx = Vec::new();
                            for n in names.iter().rev() {
                                match morphs.iter().position(|m| &m.name == n) {
                                    Some(i) => idx.push(i),
                                    None => return semantic(pos, format!("unknown arrow `{n}`")),
                                }
                            }
                            Ok(Path { src: morphs[idx[0]].src, arrows: idx })
                        }
                    }
                };
                let mut pres = CatPresentation::new(obj_names.clone(), morphs.clone());
                for (l, r, pos) in relations {
                    pres.relations.push((path(l, *pos)?, path(r, *pos)?));
                }
                pres.bound = bound.unwrap_or(DEFAULT_BOUND);
                let pos = objects.first().map(|o| o.1).unwrap_or(Pos { line: 1, col: 1 });
                match pres.compile() {
                    Ok(c) => Ok((CatDef::Presented(pres), Arc::new(c))),
                    Err(e) => semantic(pos, e.to_string()),
                }
            }
        }
    }

    fn matrix(&self, lit: &MatLit, field: Field, rows: usize, cols: usize, what: &str) -> Result<Mat, DslError> {
        if lit.rows.is_empty() && rows * cols == 0 {
            return Ok(Mat::zeros(field, rows, cols));
        }
        let found_cols = lit.rows.first().map_or(0, |r| r.len());
        if lit.rows.len() != rows || lit.rows.iter().any(|r| r.len() != cols) {
            return semantic(
                lit.pos,
                format!("matrix for {what} must be {rows}×{cols}, found {}×{found_cols}", lit.rows.len()),
            );
        }
        let mut data = Vec::with_capacity(rows * cols);
        for r in &lit.rows {
            for e in r {
                match field.parse(e) {
                    Ok(s) => data.push(s),
                    Err(err) => return semantic(lit.pos, format!("{what}: {err}")),
                }
            }
        }
        Ok(Mat::from_vec(field, rows, cols, data).expect("shape checked"))
    }

    fn add(&mut self, item: Item) -> Result<(), DslError> {
        match item {
            Item::Category { name, pos, def } => {
                if self.taken(&name, "category") {
                    return semantic(pos, format!("category `{name}` is already defined"));
                }
                let (def, cat) = match def {
                    CatExpr::Named(n, p) => {
                        let (_, cat) = self.resolve(&CatExpr::Named(n.clone(), p))?;
                        (CatDef::Named(n), cat)
                    }
                    other => self.resolve(&other)?,
                };
                self.categories.push(CategoryEntry { name, def, cat });
            }
            Item::Functor(f) => {
                if self.taken(&f.name, "functor") {
                    return semantic(f.pos, format!("functor `{}` is already defined", f.name));
                }
                let (over, cat) = self.resolve(&f.cat)?;
                let Some(field) = parse_field(&f.field) else {
                    return semantic(f.field_pos, format!("unknown field `{}` (expected Q or F<p> for a prime p)", f.field));
                };
                let mut dims = vec![0; cat.n_objects()];
                let mut seen = vec![false; cat.n_objects()];
                for (o, n, pos) in &f.dims {
                    let Some(i) = cat.object_index(o) else {
                        return semantic(*pos, format!("unknown object `{o}`"));
                    };
                    if seen[i] {
                        return semantic(*pos, format!("dimension of `{o}` given twice"));
                    }
                    seen[i] = true;
                    dims[i] = *n;
                }
                let mut given = Vec::new();
                for (m, lit) in &f.maps {
                    let Some(idx) = resolve_morphism(&cat, m) else {
                        return semantic(lit.pos, format!("unknown morphism `{m}`"));
                    };
                    let (s, t) = (cat.src(idx), cat.tgt(idx));
                    given.push((idx, self.matrix(lit, field, dims[t], dims[s], &format!("`{m}`"))?));
                }
                // Maps into or out of a zero space need not be written.
                for m in cat.non_identities() {
                    let (s, t) = (cat.src(m), cat.tgt(m));
                    if dims[s] * dims[t] == 0 && !given.iter().any(|(g, _)| *g == m) {
                        given.push((m, Mat::zeros(field, dims[t], dims[s])));
                    }
                }
                let rep = match Rep::from_generators(cat, field, dims, given) {
                    Ok(r) => r,
                    Err(e) => return semantic(f.pos, format!("functor `{}`: {e}", f.name)),
                };
                self.functors.push(FunctorEntry { name: f.name, over, rep });
            }
            Item::NatMap(n) => {
                if self.taken(&n.name, "natmap") {
                    return semantic(n.pos, format!("natural map `{}` is already defined", n.name));
                }
                let get = |(name, pos): &(String, Pos)| match self.functor(name) {
                    Some(f) => Ok(f.rep.clone()),
                    None => semantic(*pos, format!("unknown functor `{name}`")),
                };
                let (src, tgt) = (get(&n.src)?, get(&n.tgt)?);
                if !src.same_category(&tgt) {
                    return semantic(n.pos, format!("`{}` and `{}` live over different categories or fields", n.src.0, n.tgt.0));
                }
                let cat = src.cat().clone();
                let field = src.field();
                let mut comps: Vec<Option<Mat>> = vec![None; cat.n_objects()];
                for (o, lit) in &n.comps {
                    let Some(i) = cat.object_index(o) else {
                        return semantic(lit.pos, format!("unknown object `{o}`"));
                    };
                    if comps[i].is_some() {
                        return semantic(lit.pos, format!("component at `{o}` given twice"));
                    }
                    comps[i] = Some(self.matrix(lit, field, tgt.dim(i), src.dim(i), &format!("component `{o}`"))?);
                }
                let comps = comps
                    .into_iter()
                    .enumerate()
                    .map(|(i, c)| c.unwrap_or_else(|| Mat::zeros(field, tgt.dim(i), src.dim(i))))
                    .collect();
                let map = match NatMap::new(src, tgt, comps) {
                    Ok(m) => m,
                    Err(e) => return semantic(n.pos, format!("natural map `{}`: {e}", n.name)),
                };
                self.natmaps.push(NatMapEntry { name: n.name, src: n.src.0, tgt: n.tgt.0, map });
            }
            Item::Ses(s) => {
                if self.taken(&s.name, "ses") {
                    return semantic(s.pos, format!("sequence `{}` is already defined", s.name));
                }
                let get = |(name, pos): &(String, Pos)| match self.natmap(name) {
                    Some(m) => Ok(m.map.clone()),
                    None => semantic(*pos, format!("unknown natural map `{name}`")),
                };
                let (mono, epi) = (get(&s.mono)?, get(&s.epi)?);
                let ses = match Ses::new(mono, epi) {
                    Ok(x) => x,
                    Err(e) => return semantic(s.pos, format!("sequence `{}`: {e}", s.name)),
                };
                self.sequences.push(SesEntry { name: s.name, mono: s.mono.0, epi: s.epi.0, ses });
            }
        }
        Ok(())
    }

    /// Text that parses back to an identical workspace.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for c in &self.categories {
            match &c.def {
                CatDef::Presented(p) => print_presentation(&mut out, &c.name, p),
                d => writeln!(out, "category {} = {};", c.name, print_def(d)).unwrap(),
            }
        }
        for f in &self.functors {
            let rep = &f.rep;
            let cat = rep.cat();
            writeln!(out, "functor {} over {} field {} {{", f.name, print_def(&f.over), rep.field()).unwrap();
            for o in 0..cat.n_objects() {
                writeln!(out, "  dim {} = {};", cat.object_name(o), rep.dim(o)).unwrap();
            }
            for m in cat.non_identities() {
                writeln!(out, "  map {} = {};", cat.morphism(m).name, print_matrix(rep.action(m))).unwrap();
            }
            out.push_str("}\n");
        }
        for n in &self.natmaps {
            let cat = n.map.src().cat();
            writeln!(out, "natmap {}: {} -> {} {{", n.name, n.src, n.tgt).unwrap();
            for o in 0..cat.n_objects() {
                writeln!(out, "  at {} = {};", cat.object_name(o), print_matrix(n.map.comp(o))).unwrap();
            }
            out.push_str("}\n");
        }
        for s in &self.sequences {
            writeln!(out, "ses {} {{ mono = {}; epi = {}; }}", s.name, s.mono, s.epi).unwrap();
        }
        out
    }
}

/// A morphism by name, or a `.`-separated composite of named morphisms.
pub fn resolve_morphism(cat: &FinCat, name: &str) -> Option<usize> {
    if let Some(i) = cat.morphism_index(name) {
        return Some(i);
    }
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0usize, 0);
    for (i, c) in name.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            '.' if depth == 0 => {
                parts.push(&name[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&name[start..]);
    if parts.len() < 2 {
        return None;
    }
    let mut acc: Option<usize> = None;
    for p in parts.iter().rev() {
        let m = cat.morphism_index(p)?;
        acc = Some(match acc {
            None => m,
            Some(f) => cat.compose(m, f)?,
        });
    }
    acc
}

fn print_presentation(out: &mut String, name: &str, p: &CatPresentation) {
    writeln!(out, "category {name} {{").unwrap();
    writeln!(out, "  objects: {};", p.objects.join(", ")).unwrap();
    let arrows: Vec<String> =
        p.arrows.iter().map(|a| format!("{}: {} -> {}", a.name, p.objects[a.src], p.objects[a.tgt])).collect();
    writeln!(out, "  arrows: {};", arrows.join(", ")).unwrap();
    if !p.relations.is_empty() {
        let rels: Vec<String> = p
            .relations
            .iter()
            .map(|(l, r)| format!("{} = {}", l.render(&p.objects, &p.arrows), r.render(&p.objects, &p.arrows)))
            .collect();
        writeln!(out, "  relations: {};", rels.join(", ")).unwrap();
    }
    writeln!(out, "  bound: {};", p.bound).unwrap();
    out.push_str("}\n");
}

fn print_def(d: &CatDef) -> String {
    match d {
        CatDef::Presented(_) => unreachable!("presented categories are always named"),
        CatDef::Named(n) => n.clone(),
        CatDef::Product(a, b) => format!("product({}, {})", print_def(a), print_def(b)),
        CatDef::Opposite(a) => format!("opposite({})", print_def(a)),
        CatDef::Extend(a) => format!("extend({})", print_def(a)),
    }
}

fn print_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub fn print_matrix(m: &Mat) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|r| format!("[{}]", m.row(r).iter().map(print_scalar).collect::<Vec<_>>().join(", ")))
        .collect();
    if m.rows() > 0 && m.cols() == 0 {
        return format!("[{}]", vec!["[]"; m.rows()].join(", "));
    }
    format!("[{}]", rows.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPAN_ETA: &str = "
functor K over Span field Q { dim c = 1; dim a = 1; dim b = 1; map p = [[1]]; map q = [[1]]; }
functor F over Span field Q { dim c = 2; dim a = 1; dim b = 1; map p = [[1, 0]]; map q = [[0, 1]]; }
functor X over Span field Q { dim c = 1; }
natmap phi: K -> F { at c = [[1], [1]]; at a = [[1]]; at b = [[1]]; }
natmap psi: F -> X { at c = [[1, -1]]; }
ses eta { mono = phi; epi = psi; }
";

    #[test]
    fn span_block_has_five_morphisms() {
        let ws = Workspace::parse("category S { objects: c, a, b; arrows: p: c -> a, q: c -> b; }").unwrap();
        assert_eq!(ws.categories[0].cat.n_morphisms(), 5);
    }

    #[test]
    fn non_functorial_matrix_names_the_pair() {
        let err = Workspace::parse("functor T over BC2 field Q { dim x = 1; map g = [[2]]; }").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("g∘g") && msg.contains("id_x"), "{msg}");
        assert!(msg.starts_with("1:1:"), "{msg}");
    }

    #[test]
    fn worked_span_sequence_registers() {
        let ws = Workspace::parse(SPAN_ETA).unwrap();
        let s = &ws.sequence("eta").unwrap().ses;
        assert_eq!(s.middle().dims(), &[2, 1, 1]);
    }

    #[test]
    fn print_parse_round_trip() {
        let src = format!(
            "category G {{ objects: x; arrows: g: x -> x; relations: g.g.g = id(x); bound: 50; }}\n\
             category P = product(Span, opposite(A2));\n\
             functor R over G field F5 {{ dim x = 1; map g = [[1]]; }}\n\
             functor E over P field Q {{ dim (c,1) = 1; dim (a,1) = 1; map (p,id_1) = [[1/2]]; }}\n{SPAN_ETA}"
        );
        let ws = Workspace::parse(&src).unwrap();
        let text = ws.print();
        let again = Workspace::parse(&text).unwrap_or_else(|e| panic!("{e}\n{text}"));
        assert_eq!(ws, again);
        assert_eq!(text, again.print());
    }

    #[test]
    fn semantic_errors() {
        for (src, needle) in [
            ("functor F over Nope field Q { }", "unknown category `Nope`"),
            ("functor F over Span field F4 { }", "unknown field `F4`"),
            ("functor F over Span field Q { dim z = 1; }", "unknown object `z`"),
            ("functor F over Span field Q { dim c = 1; map p = [[1]]; }", "must be 0×1"),
            ("natmap u: A -> B { }", "unknown functor `A`"),
            ("category S { objects: x; arrows: f: x -> y; }", "unknown object `y`"),
        ] {
            let msg = Workspace::parse(src).unwrap_err().to_string();
            assert!(msg.contains(needle), "{src}: {msg}");
        }
    }
}
