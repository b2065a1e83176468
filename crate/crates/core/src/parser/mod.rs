//! Text input for holomorphic polynomials and real-analytic defining
//! functions.
//!
//! Grammar, loosest binding first:
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/' | <juxtaposition>) unary)*
//! unary   := ('-' | '+') unary | power
//! power   := primary ('^' INTEGER)*
//! primary := INTEGER | 'i' | variable | 'conj' '(' variable ')'
//!          | ('Re' | 'Im') '(' expr ')' | '(' expr ')'
//! ```
//!
//! Variables are `z1..zn`; with two variables `x` and `y` are aliases for
//! `z1` and `z2`. Division is only allowed by nonzero constants, so
//! rational coefficients are written `3/2*x`.

mod ast;
mod lexer;

pub use ast::{parse_expression, variable_index, Expr, ExprKind};

use num_traits::Zero;

use crate::algebra::{BiPoly, GaussRational, Poly};
use crate::error::{Error, Result};
use crate::levi::{reality_conjugate, HermitianPoly};
use lexer::syntax;

/// Evaluates into the ring with `total` variables, where `conj(z_k)` is
/// variable `half + k`.
fn eval(e: &Expr, total: usize, half: usize) -> Result<Poly> {
    Ok(match &e.kind {
        ExprKind::Var(k) => Poly::var(total, *k),
        ExprKind::ConjVar(k) => Poly::var(total, half + k),
        ExprKind::Int(n) => Poly::constant(total, GaussRational::from_real(n.clone().into())),
        ExprKind::ImaginaryUnit => Poly::constant(total, GaussRational::i()),
        ExprKind::Neg(a) => -&eval(a, total, half)?,
        ExprKind::Add(a, b) => &eval(a, total, half)? + &eval(b, total, half)?,
        ExprKind::Sub(a, b) => &eval(a, total, half)? - &eval(b, total, half)?,
        ExprKind::Mul(a, b) => &eval(a, total, half)? * &eval(b, total, half)?,
        ExprKind::Div(a, b) => {
            let d = eval(b, total, half)?;
            if !d.is_constant() {
                return Err(syntax(b.pos, "division is only allowed by constants"));
            }
            let c = d.constant_term();
            if c.is_zero() {
                return Err(syntax(b.pos, "division by zero"));
            }
            eval(a, total, half)?.scale(&c.inv().expect("nonzero"))
        }
        ExprKind::Pow(a, k) => eval(a, total, half)?.pow(*k),
        ExprKind::Re(a) | ExprKind::Im(a) => {
            let inner = BiPoly::new(half, eval(a, total, half)?)?;
            let star = reality_conjugate(&inner);
            if matches!(e.kind, ExprKind::Re(_)) {
                (inner.poly() + star.poly()).scale(&GaussRational::ratio(1, 2))
            } else {
                // (P − P̄)/(2i) = −(i/2)(P − P̄)
                (inner.poly() - star.poly()).scale(&(&GaussRational::i() * &GaussRational::ratio(-1, 2)))
            }
        }
    })
}

/// Parses a polynomial in `z1..zn` (or `x, y`).
pub fn parse_holomorphic(src: &str, nvars: usize) -> Result<Poly> {
    let e = parse_expression(src, nvars)?;
    let mut bad = None;
    e.walk(&mut |node| {
        if bad.is_some() {
            return;
        }
        match node.kind {
            ExprKind::ConjVar(_) => bad = Some(Error::ConjugateInHolomorphic { position: node.pos }),
            ExprKind::Re(_) | ExprKind::Im(_) => {
                bad = Some(syntax(node.pos, "Re() and Im() are not holomorphic"));
            }
            _ => {}
        }
    });
    if let Some(err) = bad {
        return Err(err);
    }
    eval(&e, nvars, nvars)
}

/// Parses a real-valued polynomial in `z_k` and `conj(z_k)`.
pub fn parse_real_analytic(src: &str, nvars: usize) -> Result<HermitianPoly> {
    let e = parse_expression(src, nvars)?;
    let p = eval(&e, 2 * nvars, nvars)?;
    HermitianPoly::from_bipoly(&BiPoly::new(nvars, p)?)
}
