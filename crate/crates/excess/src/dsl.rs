//! The construction-expression language.
//!
//! Grammar (whitespace insignificant, integers decimal):
//!
//! ```text
//! expr     := ctor "(" args? ")"
//! ctor     := "simplex"|"polygon"|"cyclic"|"delta"|"M"|"J"|"pyramid"|"prism"
//!           | "product"|"free_join"|"wedge"|"truncate"|"glue"|"stack"|"dual"
//! args     := arg ("," arg)*
//! arg      := integer | expr | selector | option
//! selector := ("facet"|"vertex") "(" integer ")"
//!           | "edge" "(" integer "," integer ")"
//!           | "face" "(" integer (","? integer)* ")"
//! option   := "map" "=" "[" integer ("," integer)* "]"
//!           | "merge" "=" "[" pair ("," pair)* "]"
//! pair     := "(" integer "," integer ")"
//! ```
//!
//! `M` and `J` stay capitalised in canonical output; `m`/`j` are accepted on
//! input. The printed form of an expression is the canonical provenance
//! string, and `parse(print(e)) == e`.

use std::fmt;

use crate::construct::{self, FaceSelector};
use crate::error::{Error, Result};
use crate::polytope::IncidencePolytope;

const MAX_DEPTH: usize = 256;

/// AST of a construction expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Simplex(usize),
    Polygon(usize),
    Cyclic(usize, usize),
    Delta(usize, usize),
    MPoly(usize, usize),
    JPoly(usize),
    Pyramid(Box<Expr>, usize),
    Prism(Box<Expr>),
    Product(Box<Expr>, Box<Expr>),
    FreeJoin(Box<Expr>, Box<Expr>),
    Wedge(Box<Expr>, FaceSelector),
    Truncate(Box<Expr>, FaceSelector),
    Glue {
        p1: Box<Expr>,
        f1: FaceSelector,
        p2: Box<Expr>,
        f2: FaceSelector,
        map: Option<Vec<usize>>,
        merges: Vec<(usize, usize)>,
    },
    Stack(Box<Expr>, FaceSelector),
    Dual(Box<Expr>),
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Simplex(d) => write!(f, "simplex({d})"),
            Expr::Polygon(n) => write!(f, "polygon({n})"),
            Expr::Cyclic(d, n) => write!(f, "cyclic({d},{n})"),
            Expr::Delta(m, n) => write!(f, "delta({m},{n})"),
            Expr::MPoly(k, m) => write!(f, "M({k},{m})"),
            Expr::JPoly(d) => write!(f, "J({d})"),
            Expr::Pyramid(e, k) => write!(f, "pyramid({e},{k})"),
            Expr::Prism(e) => write!(f, "prism({e})"),
            Expr::Product(a, b) => write!(f, "product({a},{b})"),
            Expr::FreeJoin(a, b) => write!(f, "free_join({a},{b})"),
            Expr::Wedge(e, s) => write!(f, "wedge({e},{})", s.to_expr_string()),
            Expr::Truncate(e, s) => write!(f, "truncate({e},{})", s.to_expr_string()),
            Expr::Glue {
                p1,
                f1,
                p2,
                f2,
                map,
                merges,
            } => {
                write!(
                    f,
                    "glue({p1},{},{p2},{}",
                    f1.to_expr_string(),
                    f2.to_expr_string()
                )?;
                if let Some(m) = map {
                    write!(
                        f,
                        ",map=[{}]",
                        m.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
                    )?;
                }
                if !merges.is_empty() {
                    write!(
                        f,
                        ",merge=[{}]",
                        merges
                            .iter()
                            .map(|(a, b)| format!("({a},{b})"))
                            .collect::<Vec<_>>()
                            .join(",")
                    )?;
                }
                write!(f, ")")
            }
            Expr::Stack(e, s) => write!(f, "stack({e},{})", s.to_expr_string()),
            Expr::Dual(e) => write!(f, "dual({e})"),
        }
    }
}

/// Evaluates an expression to a polytope whose provenance is the canonical
/// printed expression. Construction failures carry the offending
/// sub-expression in the message.
pub fn eval(expr: &Expr) -> Result<IncidencePolytope> {
    let mut p = eval_inner(expr)?;
    p.provenance = Some(expr.to_string());
    Ok(p)
}

fn eval_inner(expr: &Expr) -> Result<IncidencePolytope> {
    let here = |e: Error| -> Error {
        match e {
            Error::Precondition(msg) => Error::Precondition(format!("in `{expr}`: {msg}")),
            Error::Input(msg) => Error::Input(format!("in `{expr}`: {msg}")),
            other => other,
        }
    };
    match expr {
        Expr::Simplex(d) => construct::simplex(*d).map_err(here),
        Expr::Polygon(n) => construct::polygon(*n).map_err(here),
        Expr::Cyclic(d, n) => construct::cyclic(*d, *n).map_err(here),
        Expr::Delta(m, n) => construct::delta(*m, *n).map_err(here),
        Expr::MPoly(k, m) => construct::m_poly(*k, *m).map_err(here),
        Expr::JPoly(d) => construct::j_poly(*d).map_err(here),
        Expr::Pyramid(e, k) => construct::pyramid(&eval_inner(e)?, *k).map_err(here),
        Expr::Prism(e) => construct::prism(&eval_inner(e)?).map_err(here),
        Expr::Product(a, b) => {
            construct::product(&eval_inner(a)?, &eval_inner(b)?).map_err(here)
        }
        Expr::FreeJoin(a, b) => {
            construct::free_join(&eval_inner(a)?, &eval_inner(b)?).map_err(here)
        }
        Expr::Wedge(e, s) => construct::wedge(&eval_inner(e)?, s).map_err(here),
        Expr::Truncate(e, s) => construct::truncate(&eval_inner(e)?, s).map_err(here),
        Expr::Glue {
            p1,
            f1,
            p2,
            f2,
            map,
            merges,
        } => construct::glue(
            &eval_inner(p1)?,
            f1,
            &eval_inner(p2)?,
            f2,
            map.as_deref(),
            merges,
        )
        .map_err(here),
        Expr::Stack(e, s) => construct::stack(&eval_inner(e)?, s).map_err(here),
        Expr::Dual(e) => eval_inner(e)?.dual().map_err(here),
    }
}

/// Parses a construction expression, reporting precise error positions.
pub fn parse(text: &str) -> Result<Expr> {
    let tokens = lex(text)?;
    let mut parser = Parser { tokens, pos: 0 };
    let expr = parser.expr(0)?;
    parser.expect_end()?;
    Ok(expr)
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Ident(String),
    Int(usize),
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
    Eq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Int(n) => write!(f, "`{n}`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::LBracket => write!(f, "`[`"),
            Tok::RBracket => write!(f, "`]`"),
            Tok::Comma => write!(f, "`,`"),
            Tok::Eq => write!(f, "`=`"),
            Tok::End => write!(f, "end of input"),
        }
    }
}

#[derive(Clone, Debug)]
struct Spanned {
    tok: Tok,
    line: usize,
    col: usize,
}

fn lex(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let mut line = 1usize;
    let mut col = 1usize;
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (tline, tcol) = (line, col);
        let bump = |c: char, line: &mut usize, col: &mut usize| {
            if c == '\n' {
                *line += 1;
                *col = 1;
            } else {
                *col += 1;
            }
        };
        if c.is_whitespace() {
            chars.next();
            bump(c, &mut line, &mut col);
            continue;
        }
        if c.is_ascii_digit() {
            let mut value: u64 = 0;
            while let Some(&d) = chars.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                chars.next();
                bump(d, &mut line, &mut col);
                value = value
                    .saturating_mul(10)
                    .saturating_add(d as u64 - '0' as u64);
                if value > u32::MAX as u64 {
                    return Err(Error::Parse {
                        line: tline,
                        col: tcol,
                        msg: "integer literal too large".into(),
                    });
                }
            }
            out.push(Spanned {
                tok: Tok::Int(value as usize),
                line: tline,
                col: tcol,
            });
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if !(d.is_ascii_alphanumeric() || d == '_') {
                    break;
                }
                name.push(d);
                chars.next();
                bump(d, &mut line, &mut col);
            }
            out.push(Spanned {
                tok: Tok::Ident(name),
                line: tline,
                col: tcol,
            });
            continue;
        }
        let tok = match c {
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            ',' => Tok::Comma,
            '=' => Tok::Eq,
            other => {
                return Err(Error::Parse {
                    line: tline,
                    col: tcol,
                    msg: format!("unexpected character `{other}`"),
                })
            }
        };
        chars.next();
        bump(c, &mut line, &mut col);
        out.push(Spanned {
            tok,
            line: tline,
            col: tcol,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        col,
    });
    Ok(out)
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Spanned {
        &self.tokens[self.pos]
    }

    fn next(&mut self) -> Spanned {
        let t = self.tokens[self.pos].clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, at: &Spanned, msg: String) -> Result<T> {
        Err(Error::Parse {
            line: at.line,
            col: at.col,
            msg,
        })
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<Spanned> {
        let t = self.next();
        if t.tok == tok {
            Ok(t)
        } else {
            self.err(&t, format!("expected {expected}, found {}", t.tok))
        }
    }

    fn expect_end(&mut self) -> Result<()> {
        let t = self.next();
        if t.tok == Tok::End {
            Ok(())
        } else {
            self.err(&t, format!("expected end of input, found {}", t.tok))
        }
    }

    fn integer(&mut self) -> Result<usize> {
        let t = self.next();
        match t.tok {
            Tok::Int(n) => Ok(n),
            ref other => {
                let msg = format!("expected integer, found {other}");
                self.err(&t, msg)
            }
        }
    }

    fn expr(&mut self, depth: usize) -> Result<Expr> {
        if depth > MAX_DEPTH {
            let t = self.peek().clone();
            return self.err(&t, "expression nesting too deep".into());
        }
        let t = self.next();
        let name = match t.tok {
            Tok::Ident(ref s) => s.clone(),
            ref other => return self.err(&t, format!("expected constructor name, found {other}")),
        };
        self.expect(Tok::LParen, "`(`")?;
        let expr = match name.as_str() {
            "simplex" => Expr::Simplex(self.integer()?),
            "polygon" => Expr::Polygon(self.integer()?),
            "cyclic" => {
                let d = self.integer()?;
                self.expect(Tok::Comma, "`,`")?;
                Expr::Cyclic(d, self.integer()?)
            }
            "delta" => {
                let m = self.integer()?;
                self.expect(Tok::Comma, "`,`")?;
                Expr::Delta(m, self.integer()?)
            }
            "M" | "m" => {
                let k = self.integer()?;
                self.expect(Tok::Comma, "`,`")?;
                Expr::MPoly(k, self.integer()?)
            }
            "J" | "j" => Expr::JPoly(self.integer()?),
            "pyramid" => {
                let e = self.expr(depth + 1)?;
                let k = if self.peek().tok == Tok::Comma {
                    self.next();
                    self.integer()?
                } else {
                    1
                };
                Expr::Pyramid(Box::new(e), k)
            }
            "prism" => Expr::Prism(Box::new(self.expr(depth + 1)?)),
            "product" | "free_join" => {
                let a = self.expr(depth + 1)?;
                self.expect(Tok::Comma, "`,`")?;
                let b = self.expr(depth + 1)?;
                if name == "product" {
                    Expr::Product(Box::new(a), Box::new(b))
                } else {
                    Expr::FreeJoin(Box::new(a), Box::new(b))
                }
            }
            "wedge" | "truncate" | "stack" => {
                let e = self.expr(depth + 1)?;
                self.expect(Tok::Comma, "`,`")?;
                let s = self.selector()?;
                match name.as_str() {
                    "wedge" => Expr::Wedge(Box::new(e), s),
                    "truncate" => Expr::Truncate(Box::new(e), s),
                    _ => Expr::Stack(Box::new(e), s),
                }
            }
            "glue" => {
                let p1 = self.expr(depth + 1)?;
                self.expect(Tok::Comma, "`,`")?;
                let f1 = self.selector()?;
                self.expect(Tok::Comma, "`,`")?;
                let p2 = self.expr(depth + 1)?;
                self.expect(Tok::Comma, "`,`")?;
                let f2 = self.selector()?;
                let mut map = None;
                let mut merges = Vec::new();
                while self.peek().tok == Tok::Comma {
                    self.next();
                    let t = self.next();
                    let key = match t.tok {
                        Tok::Ident(ref s) => s.clone(),
                        ref other => {
                            return self
                                .err(&t, format!("expected `map` or `merge`, found {other}"))
                        }
                    };
                    self.expect(Tok::Eq, "`=`")?;
                    self.expect(Tok::LBracket, "`[`")?;
                    match key.as_str() {
                        "map" => {
                            if map.is_some() {
                                return self.err(&t, "duplicate `map` option".into());
                            }
                            let mut values = vec![self.integer()?];
                            while self.peek().tok == Tok::Comma {
                                self.next();
                                values.push(self.integer()?);
                            }
                            map = Some(values);
                        }
                        "merge" => {
                            if !merges.is_empty() {
                                return self.err(&t, "duplicate `merge` option".into());
                            }
                            loop {
                                self.expect(Tok::LParen, "`(`")?;
                                let a = self.integer()?;
                                self.expect(Tok::Comma, "`,`")?;
                                let b = self.integer()?;
                                self.expect(Tok::RParen, "`)`")?;
                                merges.push((a, b));
                                if self.peek().tok == Tok::Comma {
                                    self.next();
                                } else {
                                    break;
                                }
                            }
                        }
                        other => {
                            return self
                                .err(&t, format!("expected `map` or `merge`, found `{other}`"))
                        }
                    }
                    self.expect(Tok::RBracket, "`]`")?;
                }
                Expr::Glue {
                    p1: Box::new(p1),
                    f1,
                    p2: Box::new(p2),
                    f2,
                    map,
                    merges,
                }
            }
            "dual" => Expr::Dual(Box::new(self.expr(depth + 1)?)),
            other => return self.err(&t, format!("unknown constructor `{other}`")),
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(expr)
    }

    fn selector(&mut self) -> Result<FaceSelector> {
        let t = self.next();
        let name = match t.tok {
            Tok::Ident(ref s) => s.clone(),
            ref other => {
                return self.err(
                    &t,
                    format!("expected a selector (facet/vertex/edge/face), found {other}"),
                )
            }
        };
        self.expect(Tok::LParen, "`(`")?;
        let sel = match name.as_str() {
            "facet" => FaceSelector::Facet(self.integer()?),
            "vertex" => FaceSelector::Vertex(self.integer()?),
            "edge" => {
                let u = self.integer()?;
                self.expect(Tok::Comma, "`,`")?;
                FaceSelector::Edge(u, self.integer()?)
            }
            "face" => {
                let mut list = vec![self.integer()?];
                loop {
                    match self.peek().tok {
                        Tok::Comma => {
                            self.next();
                            list.push(self.integer()?);
                        }
                        Tok::Int(_) => list.push(self.integer()?),
                        _ => break,
                    }
                }
                FaceSelector::Face(list)
            }
            other => {
                return self.err(
                    &t,
                    format!("expected a selector (facet/vertex/edge/face), found `{other}`"),
                )
            }
        };
        self.expect(Tok::RParen, "`)`")?;
        Ok(sel)
    }
}
