use num_bigint::BigInt;

use super::lexer::{syntax, tokenize, Token};
use crate::error::{Position, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum ExprKind {
    /// `z_{k+1}`, zero-based.
    Var(usize),
    /// `conj(z_{k+1})`.
    ConjVar(usize),
    Int(BigInt),
    ImaginaryUnit,
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Re(Box<Expr>),
    Im(Box<Expr>),
}

/// Parsed expression tree. Every node remembers where it started.
#[derive(Debug, Clone, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Position,
}

impl Expr {
    fn new(kind: ExprKind, pos: Position) -> Box<Expr> {
        Box::new(Expr { kind, pos })
    }

    /// Visits every node, parents first.
    pub fn walk<'a>(&'a self, f: &mut impl FnMut(&'a Expr)) {
        f(self);
        match &self.kind {
            ExprKind::Var(_) | ExprKind::ConjVar(_) | ExprKind::Int(_) | ExprKind::ImaginaryUnit => {}
            ExprKind::Neg(a) | ExprKind::Pow(a, _) | ExprKind::Re(a) | ExprKind::Im(a) => a.walk(f),
            ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) | ExprKind::Div(a, b) => {
                a.walk(f);
                b.walk(f);
            }
        }
    }
}

/// Resolves `z1..zn`, and `x, y` when `nvars == 2`.
pub fn variable_index(name: &str, nvars: usize) -> Option<usize> {
    if nvars == 2 {
        match name {
            "x" => return Some(0),
            "y" => return Some(1),
            _ => {}
        }
    }
    let k: usize = name.strip_prefix('z')?.parse().ok()?;
    (1..=nvars).contains(&k).then(|| k - 1)
}

struct Parser {
    tokens: Vec<(Token, Position)>,
    at: usize,
    nvars: usize,
    in_real_part: bool,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.at].0
    }

    fn pos(&self) -> Position {
        self.tokens[self.at].1
    }

    fn bump(&mut self) -> (Token, Position) {
        let t = self.tokens[self.at].clone();
        if self.at + 1 < self.tokens.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Token) -> Result<()> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            Err(syntax(
                self.pos(),
                format!("expected {}, found {}", want.describe(), self.peek().describe()),
            ))
        }
    }

    fn expr(&mut self) -> Result<Box<Expr>> {
        let mut lhs = self.term()?;
        loop {
            let pos = self.pos();
            let kind = match self.peek() {
                Token::Plus => ExprKind::Add as fn(_, _) -> _,
                Token::Minus => ExprKind::Sub,
                _ => return Ok(lhs),
            };
            self.bump();
            let rhs = self.term()?;
            lhs = Expr::new(kind(lhs, rhs), pos);
        }
    }

    fn term(&mut self) -> Result<Box<Expr>> {
        let mut lhs = self.unary()?;
        loop {
            let pos = self.pos();
            let kind = match self.peek() {
                Token::Star => {
                    self.bump();
                    ExprKind::Mul as fn(_, _) -> _
                }
                Token::Slash => {
                    self.bump();
                    ExprKind::Div
                }
                // juxtaposition, as in `2x` or `(x+1)(x-1)`
                Token::Int(_) | Token::Ident(_) | Token::LParen => ExprKind::Mul,
                _ => return Ok(lhs),
            };
            let rhs = self.unary()?;
            lhs = Expr::new(kind(lhs, rhs), pos);
        }
    }

    fn unary(&mut self) -> Result<Box<Expr>> {
        let pos = self.pos();
        match self.peek() {
            Token::Minus => {
                self.bump();
                Ok(Expr::new(ExprKind::Neg(self.unary()?), pos))
            }
            Token::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Box<Expr>> {
        let mut base = self.primary()?;
        while *self.peek() == Token::Caret {
            let pos = self.pos();
            self.bump();
            let (tok, epos) = self.bump();
            let exp = match tok {
                Token::Int(n) => u32::try_from(n).map_err(|_| syntax(epos, "exponent too large"))?,
                other => {
                    return Err(syntax(
                        epos,
                        format!("exponent must be a nonnegative integer literal, found {}", other.describe()),
                    ))
                }
            };
            base = Expr::new(ExprKind::Pow(base, exp), pos);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Box<Expr>> {
        let (tok, pos) = self.bump();
        match tok {
            Token::Int(n) => Ok(Expr::new(ExprKind::Int(n), pos)),
            Token::LParen => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            Token::Ident(name) => self.identifier(name, pos),
            other => Err(syntax(pos, format!("unexpected {}", other.describe()))),
        }
    }

    fn identifier(&mut self, name: String, pos: Position) -> Result<Box<Expr>> {
        match name.as_str() {
            "i" => Ok(Expr::new(ExprKind::ImaginaryUnit, pos)),
            "conj" => {
                self.expect(Token::LParen)?;
                let (tok, vpos) = self.bump();
                let var = match &tok {
                    Token::Ident(v) => variable_index(v, self.nvars),
                    _ => None,
                }
                .ok_or_else(|| syntax(vpos, "conj() takes a single variable"))?;
                self.expect(Token::RParen)?;
                Ok(Expr::new(ExprKind::ConjVar(var), pos))
            }
            "Re" | "Im" => {
                if self.in_real_part {
                    return Err(syntax(pos, format!("{name}() may not be nested inside Re() or Im()")));
                }
                self.expect(Token::LParen)?;
                self.in_real_part = true;
                let inner = self.expr();
                self.in_real_part = false;
                let inner = inner?;
                self.expect(Token::RParen)?;
                let kind = if name == "Re" {
                    ExprKind::Re(inner)
                } else {
                    ExprKind::Im(inner)
                };
                Ok(Expr::new(kind, pos))
            }
            _ => match variable_index(&name, self.nvars) {
                Some(k) => Ok(Expr::new(ExprKind::Var(k), pos)),
                None => Err(syntax(pos, format!("unknown variable {name:?} for {} variables", self.nvars))),
            },
        }
    }
}

/// Parses the full grammar (holomorphic and real-analytic constructs).
pub fn parse_expression(src: &str, nvars: usize) -> Result<Expr> {
    let tokens = tokenize(src)?;
    let mut p = Parser {
        tokens,
        at: 0,
        nvars,
        in_real_part: false,
    };
    if *p.peek() == Token::End {
        return Err(syntax(p.pos(), "empty expression"));
    }
    let e = p.expr()?;
    if *p.peek() != Token::End {
        return Err(syntax(p.pos(), format!("unexpected {}", p.peek().describe())));
    }
    Ok(*e)
}
