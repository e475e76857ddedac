//! Text format for ring presentations.
//!
//! ```text
//! # comment
//! ring: x, y, z
//! ideal: x*y, y*z,
//!        z^2
//! ```
//!
//! Sections are separated by newlines or `;`. A list continues onto the next
//! line after a trailing comma. An optional `homogeneous` header line makes
//! inhomogeneous generators a hard error. Coefficients are rationals written
//! with `/`, e.g. `3/4*x^2`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{Polynomial, VariableSet};
use crate::groebner::{IdealPresentation, RingPresentation};
use crate::{Error, Rational, Result};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    Colon,
    Break,
    Eof,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut column) = (1usize, 1usize);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let simple = |tok| Token {
            tok,
            line: l,
            column: col,
        };
        match c {
            '\n' => {
                chars.next();
                out.push(simple(Tok::Break));
                line += 1;
                column = 1;
                continue;
            }
            ' ' | '\t' | '\r' => {
                chars.next();
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    chars.next();
                }
                continue;
            }
            ';' => {
                chars.next();
                out.push(simple(Tok::Break));
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' | ',' | ':' => {
                chars.next();
                out.push(simple(match c {
                    '+' => Tok::Plus,
                    '-' => Tok::Minus,
                    '*' => Tok::Star,
                    '/' => Tok::Slash,
                    '^' => Tok::Caret,
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    _ => Tok::Colon,
                }));
            }
            c if c.is_ascii_digit() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                let n: BigInt = s.parse().expect("digits");
                out.push(simple(Tok::Int(n)));
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                let mut s = String::new();
                while let Some(&d) = chars.peek().filter(|d| d.is_ascii_alphanumeric() || **d == '_') {
                    s.push(d);
                    chars.next();
                    column += 1;
                }
                out.push(simple(Tok::Ident(s)));
                continue;
            }
            other => {
                return Err(Error::Syntax {
                    line,
                    column,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
        column += 1;
    }
    out.push(Token {
        tok: Tok::Eof,
        line,
        column,
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: Option<&'a VariableSet>,
    paren_depth: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_tok(&self) -> &Tok {
        // newlines inside parentheses are insignificant
        let mut i = self.pos;
        if self.paren_depth > 0 {
            while self.toks[i].tok == Tok::Break {
                i += 1;
            }
        }
        &self.toks[i].tok
    }

    fn bump(&mut self) -> Token {
        if self.paren_depth > 0 {
            while self.toks[self.pos].tok == Tok::Break {
                self.pos += 1;
            }
        }
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = self.peek();
        Err(Error::Syntax {
            line: t.line,
            column: t.column,
            message: message.into(),
        })
    }

    fn skip_breaks(&mut self) {
        while self.peek().tok == Tok::Break {
            self.pos += 1;
        }
    }

    fn at_section_end(&self) -> bool {
        matches!(self.peek().tok, Tok::Break | Tok::Eof)
    }

    /// True when the upcoming non-break tokens start a new section or end the input.
    fn next_is_header(&self) -> bool {
        let mut i = self.pos;
        while self.toks[i].tok == Tok::Break {
            i += 1;
        }
        match &self.toks[i].tok {
            Tok::Eof => true,
            Tok::Ident(s) => s == "homogeneous" || self.toks[i + 1].tok == Tok::Colon,
            _ => false,
        }
    }

    fn expect_end_of_section(&mut self) -> Result<()> {
        if self.at_section_end() {
            Ok(())
        } else {
            self.error("expected `,` or end of line")
        }
    }

    fn ident_list(&mut self) -> Result<Vec<(String, usize, usize)>> {
        let mut out = Vec::new();
        if self.at_section_end() {
            return Ok(out);
        }
        loop {
            let t = self.bump();
            match t.tok {
                Tok::Ident(s) => out.push((s, t.line, t.column)),
                _ => {
                    return Err(Error::Syntax {
                        line: t.line,
                        column: t.column,
                        message: "expected a variable name".into(),
                    })
                }
            }
            if self.peek().tok == Tok::Comma {
                self.bump();
                self.skip_breaks();
            } else {
                self.expect_end_of_section()?;
                return Ok(out);
            }
        }
    }

    /// Comma-separated polynomials with their source positions.
    fn expr_list(&mut self) -> Result<Vec<(Polynomial, usize, usize)>> {
        let mut out = Vec::new();
        if self.at_section_end() && self.next_is_header() {
            return Ok(out);
        }
        self.skip_breaks();
        loop {
            let start = self.peek().clone();
            let p = self.expr()?;
            out.push((p, start.line, start.column));
            if self.peek().tok == Tok::Comma {
                self.bump();
                self.skip_breaks();
            } else {
                self.expect_end_of_section()?;
                return Ok(out);
            }
        }
    }

    fn nvars(&self) -> usize {
        self.vars.map_or(0, |v| v.len())
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = self.term()?;
        loop {
            match self.peek_tok() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.term()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.unary()?;
        loop {
            match self.peek_tok() {
                Tok::Star => {
                    self.bump();
                    acc = &acc * &self.unary()?;
                }
                Tok::Slash => {
                    self.bump();
                    let at = self.peek().clone();
                    let d = self.unary()?;
                    if !d.is_constant() || d.is_zero() {
                        return Err(Error::Syntax {
                            line: at.line,
                            column: at.column,
                            message: "division only by nonzero constants".into(),
                        });
                    }
                    let c = d.terms()[0].1.recip();
                    acc = acc.scale(&c);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Polynomial> {
        match self.peek_tok() {
            Tok::Minus => {
                self.bump();
                Ok(-self.unary()?)
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Polynomial> {
        let base = self.atom()?;
        if *self.peek_tok() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => match n.to_u32().filter(|e| *e <= 1000) {
                Some(e) => Ok(base.pow(e)),
                None => Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: "exponent out of range".into(),
                }),
            },
            _ => Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: "expected a nonnegative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<Polynomial> {
        let t = self.bump();
        match t.tok {
            Tok::Int(n) => Ok(Polynomial::constant(self.nvars(), Rational::from_integer(n))),
            Tok::Ident(name) => {
                let vars = self.vars.expect("variables declared before expressions");
                match vars.index_of(&name) {
                    Some(i) => Ok(Polynomial::var(vars.len(), i)),
                    None => Err(Error::UnknownVariable {
                        name,
                        line: t.line,
                        column: t.column,
                    }),
                }
            }
            Tok::LParen => {
                self.paren_depth += 1;
                let inner = self.expr()?;
                let close = self.bump();
                self.paren_depth -= 1;
                if close.tok != Tok::RParen {
                    return Err(Error::Syntax {
                        line: close.line,
                        column: close.column,
                        message: "expected `)`".into(),
                    });
                }
                Ok(inner)
            }
            _ => Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: "expected a number, variable or `(`".into(),
            }),
        }
    }
}

struct Sections {
    vars: VariableSet,
    homogeneous: bool,
    list: Option<Vec<(Polynomial, usize, usize)>>,
}

fn parse_sections(text: &str, list_keyword: &str) -> Result<Sections> {
    let toks = lex(text)?;
    let mut vars: Option<VariableSet> = None;
    let mut homogeneous = false;
    let mut list = None;
    let mut p = Parser {
        toks,
        pos: 0,
        vars: None,
        paren_depth: 0,
    };
    loop {
        p.skip_breaks();
        let t = p.bump();
        let keyword = match t.tok {
            Tok::Eof => break,
            Tok::Ident(s) => s,
            _ => {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: format!("expected `ring:` or `{list_keyword}:`"),
                })
            }
        };
        if keyword == "homogeneous" {
            if p.peek().tok == Tok::Colon {
                p.bump();
                let v = p.bump();
                homogeneous = match v.tok {
                    Tok::Ident(ref s) if s == "true" => true,
                    Tok::Ident(ref s) if s == "false" => false,
                    _ => {
                        return Err(Error::Syntax {
                            line: v.line,
                            column: v.column,
                            message: "expected `true` or `false`".into(),
                        })
                    }
                };
            } else {
                homogeneous = true;
            }
            p.expect_end_of_section()?;
            continue;
        }
        if p.peek().tok != Tok::Colon {
            return p.error("expected `:` after section name");
        }
        p.bump();
        if keyword == "ring" {
            if vars.is_some() {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: "duplicate `ring:` section".into(),
                });
            }
            let names = p.ident_list()?;
            let names: Vec<String> = names.into_iter().map(|(s, _, _)| s).collect();
            vars = Some(VariableSet::new(&names)?);
        } else if keyword == list_keyword {
            let Some(v) = vars.as_ref() else {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: "`ring:` must come first".into(),
                });
            };
            if list.is_some() {
                return Err(Error::Syntax {
                    line: t.line,
                    column: t.column,
                    message: format!("duplicate `{list_keyword}:` section"),
                });
            }
            // the parser borrows the variables only while reading this list
            let v = v.clone();
            let mut sub = Parser {
                toks: core::mem::take(&mut p.toks),
                pos: p.pos,
                vars: Some(&v),
                paren_depth: 0,
            };
            let items = sub.expr_list();
            p.toks = core::mem::take(&mut sub.toks);
            p.pos = sub.pos;
            list = Some(items?);
        } else {
            return Err(Error::Syntax {
                line: t.line,
                column: t.column,
                message: format!("unknown section `{keyword}`"),
            });
        }
    }
    let Some(vars) = vars else {
        return Err(Error::Syntax {
            line: 1,
            column: 1,
            message: "missing `ring:` section".into(),
        });
    };
    Ok(Sections {
        vars,
        homogeneous,
        list,
    })
}

/// A parsed presentation plus non-fatal diagnostics (dropped zero generators).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parsed {
    pub presentation: RingPresentation,
    pub warnings: Vec<String>,
}

pub fn parse_presentation(text: &str) -> Result<Parsed> {
    let s = parse_sections(text, "ideal")?;
    let mut warnings = Vec::new();
    let mut gens = Vec::new();
    for (k, (g, line, column)) in s.list.unwrap_or_default().into_iter().enumerate() {
        if g.is_zero() {
            warnings.push(format!(
                "generator {} at {line}:{column} is zero and was dropped",
                k + 1
            ));
            continue;
        }
        if s.homogeneous && !g.is_homogeneous() {
            return Err(Error::Syntax {
                line,
                column,
                message: "generator is not homogeneous".into(),
            });
        }
        gens.push(g);
    }
    let ideal = IdealPresentation::new(s.vars, gens)?;
    Ok(Parsed {
        presentation: RingPresentation::new(ideal),
        warnings,
    })
}

/// A line arrangement file: `ring: x, y` followed by `lines: ...`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinesFile {
    pub variables: VariableSet,
    pub lines: Vec<Polynomial>,
}

pub fn parse_lines(text: &str) -> Result<LinesFile> {
    let s = parse_sections(text, "lines")?;
    Ok(LinesFile {
        variables: s.vars,
        lines: s.list.unwrap_or_default().into_iter().map(|(p, _, _)| p).collect(),
    })
}

/// Parses one polynomial over known variables.
pub fn parse_polynomial(text: &str, vars: &VariableSet) -> Result<Polynomial> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        pos: 0,
        vars: Some(vars),
        paren_depth: 0,
    };
    p.skip_breaks();
    let e = p.expr()?;
    p.skip_breaks();
    if p.peek().tok != Tok::Eof {
        return p.error("unexpected trailing input");
    }
    Ok(e)
}

/// Canonical text form; `parse_presentation` inverts it.
pub fn render_presentation(pres: &RingPresentation) -> String {
    let vars = pres.variables();
    let mut out = String::from("ring: ");
    out.push_str(&vars.names().join(", "));
    out.push_str("\nideal:");
    let gens: Vec<String> = pres
        .generators()
        .iter()
        .map(|g| g.display(vars).to_string())
        .collect();
    if !gens.is_empty() {
        out.push(' ');
        out.push_str(&gens.join(", "));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> RingPresentation {
        parse_presentation(s).unwrap().presentation
    }

    #[test]
    fn inline_sections() {
        let r = parse("ring: x,y,z ; ideal: x*y, y*z, z^2");
        assert_eq!(r.variables().len(), 3);
        assert_eq!(r.generators().len(), 3);
        assert!(r.ideal().is_homogeneous());
    }

    #[test]
    fn empty_ideal() {
        let r = parse("ring: x ; ideal:");
        assert_eq!(r.variables().len(), 1);
        assert!(r.generators().is_empty());
        let r = parse("ring: x\n");
        assert!(r.generators().is_empty());
    }

    #[test]
    fn quartic_generator() {
        let r = parse("ring: x,y ; ideal: x^3*y - x*y^3");
        assert_eq!(r.generators().len(), 1);
        assert_eq!(r.generators()[0].degree(), Some(4));
        assert_eq!(r.generators()[0].len(), 2);
    }

    #[test]
    fn multiline_comments_and_rationals() {
        let text = "# a comment\nring: x, y   # trailing\nideal: 3/4*x^2 - (x - y)*(x + y),\n  x*y\n";
        let r = parse(text);
        assert_eq!(r.generators().len(), 2);
        let vars = r.variables();
        assert_eq!(
            r.generators()[0].display(vars).to_string(),
            "-1/4*x^2 + y^2"
        );
    }

    #[test]
    fn parenthesised_newlines() {
        let r = parse("ring: x, y\nideal: (x +\n y)^2\n");
        assert_eq!(r.generators()[0].len(), 3);
    }

    #[test]
    fn zero_generators_are_dropped_with_warning() {
        let p = parse_presentation("ring: x, y ; ideal: x - x, y^2").unwrap();
        assert_eq!(p.presentation.generators().len(), 1);
        assert_eq!(p.warnings.len(), 1);
        assert!(p.warnings[0].contains("1:21"));
    }

    #[test]
    fn error_positions() {
        assert_eq!(
            parse_presentation("ring: x, y\nideal: x*w").unwrap_err(),
            Error::UnknownVariable {
                name: "w".into(),
                line: 2,
                column: 10
            }
        );
        match parse_presentation("ring: x\nideal: x +* x").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (2, 11)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(matches!(
            parse_presentation("ideal: x"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("ring: x, x"),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            parse_presentation("ring: x ; ideal: x / x"),
            Err(Error::Syntax { .. })
        ));
        assert!(matches!(
            parse_presentation("ring: x ; ideal: x $ 2"),
            Err(Error::Syntax { line: 1, column: 20, .. })
        ));
    }

    #[test]
    fn homogeneous_flag_rejects() {
        assert!(parse_presentation("ring: x, y\nideal: x^2 + y").is_ok());
        match parse_presentation("homogeneous\nring: x, y\nideal: x^2, x^2 + y").unwrap_err() {
            Error::Syntax { line, column, .. } => assert_eq!((line, column), (3, 13)),
            e => panic!("unexpected {e:?}"),
        }
        assert!(parse_presentation("homogeneous: false\nring: x, y\nideal: x^2 + y").is_ok());
    }

    #[test]
    fn render_round_trip() {
        let r = parse("ring: x,y,z ; ideal: x*z - y^2, 2/3*x^2 - y*z, -x*y + 5*z^2");
        let text = render_presentation(&r);
        assert_eq!(text, "ring: x, y, z\nideal: -y^2 + x*z, 2/3*x^2 - y*z, -x*y + 5*z^2\n");
        assert_eq!(parse(&text), r);
    }

    #[test]
    fn lines_file() {
        let f = parse_lines("ring: x, y\nlines: y, x, x - y, x + y\n").unwrap();
        assert_eq!(f.lines.len(), 4);
        let vars = VariableSet::new(&["x", "y"]).unwrap();
        let r = parse_polynomial("x + 2*y", &vars).unwrap();
        assert_eq!(r.len(), 2);
        assert!(parse_polynomial("x +", &vars).is_err());
    }

    #[test]
    fn zero_dividend_is_fine() {
        let vars = VariableSet::new(&["x"]).unwrap();
        assert!(parse_polynomial("0/3", &vars).unwrap().is_zero());
    }
}
