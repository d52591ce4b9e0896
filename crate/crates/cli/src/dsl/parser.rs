use super::lexer::{tokenize, Tok};
use super::{ArrowDecl, CatExpr, FunctorItem, Item, MatLit, NatMapItem, PathLit, Pos, SesItem, SyntaxError};

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

type PResult<T> = Result<T, SyntaxError>;

pub fn parse_document(src: &str) -> PResult<Vec<Item>> {
    let mut p = Parser { toks: tokenize(src)?, at: 0 };
    let mut items = Vec::new();
    while p.peek() != &Tok::Eof {
        items.push(p.item()?);
    }
    Ok(items)
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn next(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if t.0 != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn error<T>(&self, expected: &str) -> PResult<T> {
        Err(SyntaxError { pos: self.pos(), message: format!("expected {expected}, found {}", self.peek().describe()) })
    }

    fn is_sym(&self, c: char) -> bool {
        self.peek() == &Tok::Sym(c)
    }

    fn is_word(&self, w: &str) -> bool {
        matches!(self.peek(), Tok::Word(x) if x == w)
    }

    fn eat_sym(&mut self, c: char) -> bool {
        if self.is_sym(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn sym(&mut self, c: char) -> PResult<()> {
        if self.eat_sym(c) {
            Ok(())
        } else {
            self.error(&format!("`{c}`"))
        }
    }

    fn keyword(&mut self, w: &str) -> PResult<()> {
        if self.is_word(w) {
            self.at += 1;
            Ok(())
        } else {
            self.error(&format!("`{w}`"))
        }
    }

    fn word(&mut self, what: &str) -> PResult<(String, Pos)> {
        match self.peek().clone() {
            Tok::Word(w) => {
                let pos = self.pos();
                self.at += 1;
                Ok((w, pos))
            }
            _ => self.error(what),
        }
    }

    /// A name, possibly a tuple such as `(c,1)` or `(b.a,id_1)`.
    fn name(&mut self, what: &str) -> PResult<(String, Pos)> {
        if self.is_sym('(') {
            let pos = self.pos();
            self.at += 1;
            let mut parts = vec![self.dotted(what)?.0];
            while self.eat_sym(',') {
                parts.push(self.dotted(what)?.0);
            }
            self.sym(')')?;
            Ok((format!("({})", parts.join(",")), pos))
        } else {
            self.word(what)
        }
    }

    /// Names joined by `.`, as in composite morphism names.
    fn dotted(&mut self, what: &str) -> PResult<(String, Pos)> {
        let (mut s, pos) = self.name(what)?;
        while self.eat_sym('.') {
            s.push('.');
            s.push_str(&self.name(what)?.0);
        }
        Ok((s, pos))
    }

    fn number(&mut self, what: &str) -> PResult<(usize, Pos)> {
        let (w, pos) = self.word(what)?;
        match w.parse() {
            Ok(n) => Ok((n, pos)),
            Err(_) => Err(SyntaxError { pos, message: format!("expected {what}, found `{w}`") }),
        }
    }

    fn item(&mut self) -> PResult<Item> {
        match self.peek() {
            Tok::Word(w) if w == "category" => self.category(),
            Tok::Word(w) if w == "functor" => self.functor().map(Item::Functor),
            Tok::Word(w) if w == "natmap" => self.natmap().map(Item::NatMap),
            Tok::Word(w) if w == "ses" => self.ses().map(Item::Ses),
            _ => self.error("`category`, `functor`, `natmap` or `ses`"),
        }
    }

    fn category(&mut self) -> PResult<Item> {
        let pos = self.pos();
        self.keyword("category")?;
        let (name, _) = self.word("a category name")?;
        let def = if self.eat_sym('=') {
            let e = self.cat_expr()?;
            self.sym(';')?;
            e
        } else {
            self.cat_block()?
        };
        Ok(Item::Category { name, pos, def })
    }

    fn cat_expr(&mut self) -> PResult<CatExpr> {
        let (w, pos) = self.word("a category expression")?;
        if !self.is_sym('(') {
            return Ok(CatExpr::Named(w, pos));
        }
        self.at += 1;
        let e = match w.as_str() {
            "product" => {
                let a = self.cat_expr()?;
                self.sym(',')?;
                let b = self.cat_expr()?;
                CatExpr::Product(Box::new(a), Box::new(b))
            }
            "opposite" => CatExpr::Opposite(Box::new(self.cat_expr()?)),
            "extend" => CatExpr::Extend(Box::new(self.cat_expr()?)),
            _ => {
                return Err(SyntaxError {
                    pos,
                    message: format!("unknown category constructor `{w}` (expected product, opposite or extend)"),
                })
            }
        };
        self.sym(')')?;
        Ok(e)
    }

    fn cat_block(&mut self) -> PResult<CatExpr> {
        self.sym('{')?;
        let (mut objects, mut arrows, mut relations, mut bound) = (Vec::new(), Vec::new(), Vec::new(), None);
        while !self.eat_sym('}') {
            let (section, pos) = self.word("`objects`, `arrows`, `relations`, `bound` or `}`")?;
            self.sym(':')?;
            match section.as_str() {
                "objects" => objects.extend(self.list(|p| p.name("an object name"))?),
                "arrows" => arrows.extend(self.list(|p| {
                    let (name, pos) = p.word("an arrow name")?;
                    p.sym(':')?;
                    let (src, _) = p.name("a source object")?;
                    if p.next().0 != Tok::Arrow {
                        p.at -= 1;
                        return p.error("`->`");
                    }
                    let (tgt, _) = p.name("a target object")?;
                    Ok(ArrowDecl { name, src, tgt, pos })
                })?),
                "relations" => relations.extend(self.list(|p| {
                    let pos = p.pos();
                    let lhs = p.path()?;
                    p.sym('=')?;
                    let rhs = p.path()?;
                    Ok((lhs, rhs, pos))
                })?),
                "bound" => {
                    bound = Some(self.number("a closure bound")?.0);
                    self.sym(';')?;
                }
                _ => {
                    return Err(SyntaxError {
                        pos,
                        message: format!("unknown section `{section}` (expected objects, arrows, relations or bound)"),
                    })
                }
            }
        }
        Ok(CatExpr::Block { objects, arrows, relations, bound })
    }

    /// A possibly empty comma-separated list ending in `;`.
    fn list<T>(&mut self, mut elem: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        let mut out = Vec::new();
        if self.eat_sym(';') {
            return Ok(out);
        }
        loop {
            out.push(elem(self)?);
            if self.eat_sym(';') {
                return Ok(out);
            }
            self.sym(',')?;
        }
    }

    fn path(&mut self) -> PResult<PathLit> {
        if self.is_word("id") && self.toks.get(self.at + 1).map(|t| &t.0) == Some(&Tok::Sym('(')) {
            self.at += 2;
            let (o, _) = self.name("an object name")?;
            self.sym(')')?;
            return Ok(PathLit::Identity(o));
        }
        let mut arrows = vec![self.word("an arrow name")?.0];
        while self.eat_sym('.') {
            arrows.push(self.word("an arrow name")?.0);
        }
        Ok(PathLit::Arrows(arrows))
    }

    fn field(&mut self) -> PResult<(String, Pos)> {
        let (w, pos) = self.word("a field (Q, F2, Fp(p))")?;
        if (w == "Fp" || w == "F") && self.eat_sym('(') {
            let (p, _) = self.number("a prime")?;
            self.sym(')')?;
            return Ok((format!("F{p}"), pos));
        }
        Ok((w, pos))
    }

    fn functor(&mut self) -> PResult<FunctorItem> {
        let pos = self.pos();
        self.keyword("functor")?;
        let (name, _) = self.word("a functor name")?;
        self.keyword("over")?;
        let cat = self.cat_expr()?;
        self.keyword("field")?;
        let (field, field_pos) = self.field()?;
        self.sym('{')?;
        let (mut dims, mut maps) = (Vec::new(), Vec::new());
        while !self.eat_sym('}') {
            let (kw, kw_pos) = self.word("`dim`, `map` or `}`")?;
            match kw.as_str() {
                "dim" => {
                    let (o, pos) = self.name("an object name")?;
                    self.sym('=')?;
                    let (n, _) = self.number("a dimension")?;
                    dims.push((o, n, pos));
                }
                "map" => {
                    let (m, _) = self.dotted("a morphism")?;
                    self.sym('=')?;
                    maps.push((m, self.matrix()?));
                }
                _ => {
                    return Err(SyntaxError { pos: kw_pos, message: format!("expected `dim` or `map`, found `{kw}`") })
                }
            }
            self.sym(';')?;
        }
        Ok(FunctorItem { name, pos, cat, field, field_pos, dims, maps })
    }

    fn matrix(&mut self) -> PResult<MatLit> {
        let pos = self.pos();
        self.sym('[')?;
        let mut rows = Vec::new();
        if !self.eat_sym(']') {
            loop {
                self.sym('[')?;
                let mut row = Vec::new();
                if !self.eat_sym(']') {
                    loop {
                        row.push(self.scalar()?);
                        if self.eat_sym(']') {
                            break;
                        }
                        self.sym(',')?;
                    }
                }
                rows.push(row);
                if self.eat_sym(']') {
                    break;
                }
                self.sym(',')?;
            }
        }
        Ok(MatLit { rows, pos })
    }

    fn scalar(&mut self) -> PResult<String> {
        let mut s = String::new();
        if self.eat_sym('-') {
            s.push('-');
        }
        s.push_str(&self.word("a number")?.0);
        if self.eat_sym('/') {
            s.push('/');
            s.push_str(&self.word("a denominator")?.0);
        }
        Ok(s)
    }

    fn natmap(&mut self) -> PResult<NatMapItem> {
        let pos = self.pos();
        self.keyword("natmap")?;
        let (name, _) = self.word("a natural map name")?;
        self.sym(':')?;
        let src = self.word("a source functor")?;
        if self.next().0 != Tok::Arrow {
            self.at -= 1;
            return self.error("`->`");
        }
        let tgt = self.word("a target functor")?;
        self.sym('{')?;
        let mut comps = Vec::new();
        while !self.eat_sym('}') {
            self.keyword("at")?;
            let (o, _) = self.name("an object name")?;
            self.sym('=')?;
            comps.push((o, self.matrix()?));
            self.sym(';')?;
        }
        Ok(NatMapItem { name, pos, src, tgt, comps })
    }

    fn ses(&mut self) -> PResult<SesItem> {
        let pos = self.pos();
        self.keyword("ses")?;
        let (name, _) = self.word("a sequence name")?;
        self.sym('{')?;
        let (mut mono, mut epi) = (None, None);
        while !self.eat_sym('}') {
            let (kw, kw_pos) = self.word("`mono`, `epi` or `}`")?;
            self.sym('=')?;
            let target = self.word("a natural map name")?;
            match kw.as_str() {
                "mono" => mono = Some(target),
                "epi" => epi = Some(target),
                _ => return Err(SyntaxError { pos: kw_pos, message: format!("expected `mono` or `epi`, found `{kw}`") }),
            }
            self.sym(';')?;
        }
        let missing = |what: &str| SyntaxError { pos, message: format!("sequence `{name}` has no `{what}`") };
        let mono = mono.ok_or_else(|| missing("mono"))?;
        let epi = epi.ok_or_else(|| missing("epi"))?;
        Ok(SesItem { name, pos, mono, epi })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_item_kind() {
        let src = "category S { objects: c, a; arrows: p: c -> a; relations: ; bound: 10; }\n\
                   category T = product(S, opposite(A2));\n\
                   functor F over T field Fp(3) { dim (c,1) = 1; map (p,id_1) = [[-1/2]]; }\n\
                   natmap u: F -> F { at (c,1) = [[1]]; }\n\
                   ses e { mono = u; epi = u; }";
        let items = parse_document(src).unwrap();
        assert_eq!(items.len(), 5);
        let Item::Functor(f) = &items[2] else { panic!() };
        assert_eq!(f.field, "F3");
        assert_eq!(f.dims[0].0, "(c,1)");
        assert_eq!(f.maps[0].0, "(p,id_1)");
        assert_eq!(f.maps[0].1.rows, vec![vec!["-1/2".to_string()]]);
    }

    #[test]
    fn reports_locations() {
        let err = parse_document("category S {\n  objects: c a;\n}").unwrap_err();
        assert_eq!(err.pos, Pos { line: 2, col: 14 });
        assert!(err.message.contains("expected `,`"), "{}", err.message);
        let err = parse_document("functor F over S field Q { dim c = x; }").unwrap_err();
        assert_eq!(err.pos.col, 36);
    }

    #[test]
    fn relation_paths() {
        let items = parse_document("category G { objects: x; arrows: g: x -> x; relations: g.g = id(x); }").unwrap();
        let Item::Category { def: CatExpr::Block { relations, .. }, .. } = &items[0] else { panic!() };
        assert_eq!(relations[0].0, PathLit::Arrows(vec!["g".into(), "g".into()]));
        assert_eq!(relations[0].1, PathLit::Identity("x".into()));
    }
}
