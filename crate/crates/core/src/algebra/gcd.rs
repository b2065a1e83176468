//! Multivariate gcd over ℚ(i) by recursive primitive remainder sequences,
//! and the square-free part built on it.

use std::collections::BTreeMap;

use num_traits::One;

use super::gauss::GaussRational;
use super::monomial::ExponentVector;
use super::poly::Poly;

/// Scales so the lexicographically largest term has coefficient 1.
pub fn monic(p: &Poly) -> Poly {
    match p.terms().next_back() {
        None => p.clone(),
        Some((_, c)) if c.is_one() => p.clone(),
        Some((_, c)) => p.scale(&c.inv().expect("nonzero")),
    }
}

fn coefficients_in(p: &Poly, var: usize) -> BTreeMap<u32, Poly> {
    let mut out: BTreeMap<u32, Poly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut rest = e.as_slice().to_vec();
        let k = std::mem::take(&mut rest[var]);
        out.entry(k)
            .or_insert_with(|| Poly::zero(p.nvars()))
            .add_term(ExponentVector::new(rest), c);
    }
    out
}

fn leading_coefficient_in(p: &Poly, var: usize) -> (u32, Poly) {
    let mut coeffs = coefficients_in(p, var);
    let (k, c) = coeffs.pop_last().expect("nonzero polynomial");
    (k, c)
}

fn content_in(p: &Poly, var: usize) -> Poly {
    coefficients_in(p, var)
        .into_values()
        .fold(Poly::zero(p.nvars()), |acc, c| gcd(&acc, &c))
}

fn primitive_part_in(p: &Poly, var: usize) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides")
}

/// Pseudo-remainder of `f` by `g` in `var`, up to factors free of `var`.
fn pseudo_remainder(f: &Poly, g: &Poly, var: usize) -> Poly {
    let (dg, lg) = leading_coefficient_in(g, var);
    let mut r = f.clone();
    while !r.is_zero() {
        let (dr, lr) = leading_coefficient_in(&r, var);
        if dr < dg {
            break;
        }
        let shift = ExponentVector::unit(r.nvars(), var);
        let mut shifted = g.clone();
        for _ in 0..(dr - dg) {
            shifted = shifted.mul_term(&shift, &GaussRational::one());
        }
        r = &(&r * &lg) - &(&shifted * &lr);
    }
    r
}

fn highest_var(a: &Poly, b: &Poly) -> Option<usize> {
    (0..a.nvars())
        .rev()
        .find(|&v| a.degree_in(v).unwrap_or(0) > 0 || b.degree_in(v).unwrap_or(0) > 0)
}

/// Greatest common divisor, normalized by [`monic`]. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    assert_eq!(a.nvars(), b.nvars(), "variable count mismatch");
    if a.is_zero() {
        return monic(b);
    }
    if b.is_zero() {
        return monic(a);
    }
    let Some(var) = highest_var(a, b) else {
        return Poly::one(a.nvars());
    };
    let da = a.degree_in(var).unwrap_or(0);
    let db = b.degree_in(var).unwrap_or(0);
    if da == 0 {
        return gcd(a, &content_in(b, var));
    }
    if db == 0 {
        return gcd(&content_in(a, var), b);
    }
    let content = gcd(&content_in(a, var), &content_in(b, var));
    let (mut f, mut g) = (primitive_part_in(a, var), primitive_part_in(b, var));
    if da < db {
        std::mem::swap(&mut f, &mut g);
    }
    while !g.is_zero() {
        let r = pseudo_remainder(&f, &g, var);
        f = g;
        g = primitive_part_in(&r, var);
    }
    monic(&(&content * &primitive_part_in(&f, var)))
}

/// The product of the distinct irreducible factors of `p`, normalized by
/// [`monic`]. Constants map to 1 and zero maps to zero.
pub fn squarefree_part(p: &Poly) -> Poly {
    if p.is_zero() {
        return p.clone();
    }
    let repeated = p.gradient().iter().fold(p.clone(), |acc, d| gcd(&acc, d));
    monic(&p.div_exact(&repeated).expect("gcd divides"))
}
