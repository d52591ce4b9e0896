use super::{Pos, SyntaxError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    /// Names and numbers: `[A-Za-z0-9_*']+`.
    Word(String),
    Arrow,
    Sym(char),
    Eof,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Word(w) => format!("`{w}`"),
            Tok::Arrow => "`->`".into(),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Eof => "end of input".into(),
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '*' || c == '\''
}

pub fn tokenize(src: &str) -> Result<Vec<(Tok, Pos)>, SyntaxError> {
    let mut out = Vec::new();
    let chars: Vec<char> = src.chars().collect();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let bump = |i: &mut usize, line: &mut usize, col: &mut usize, c: char| {
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            bump(&mut i, &mut line, &mut col, c);
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                let ch = chars[i];
                bump(&mut i, &mut line, &mut col, ch);
            }
        } else if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push((Tok::Arrow, pos));
            bump(&mut i, &mut line, &mut col, '-');
            bump(&mut i, &mut line, &mut col, '>');
        } else if is_word_char(c) {
            let mut w = String::new();
            while i < chars.len() && is_word_char(chars[i]) {
                let ch = chars[i];
                w.push(ch);
                bump(&mut i, &mut line, &mut col, ch);
            }
            out.push((Tok::Word(w), pos));
        } else if "{}()[],;:=./-".contains(c) {
            out.push((Tok::Sym(c), pos));
            bump(&mut i, &mut line, &mut col, c);
        } else {
            return Err(SyntaxError { pos, message: format!("unexpected character `{c}`") });
        }
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}
