//! Independent reference computations for the integration tests.
//!
//! Nothing here calls into the library's standard-basis or linear-algebra
//! code: the colength of an ideal is computed by plain Gaussian elimination
//! on truncated polynomial spaces.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// Sparse polynomial over ℚ as `(exponents, coefficient)` pairs.
pub type RawPoly = Vec<(Vec<u32>, BigRational)>;

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn raw(terms: &[(&[u32], i64)]) -> RawPoly {
    terms.iter().map(|(e, c)| (e.to_vec(), int(*c))).collect()
}

pub fn raw_partial(f: &RawPoly, var: usize) -> RawPoly {
    f.iter()
        .filter(|(e, _)| e[var] > 0)
        .map(|(e, c)| {
            let mut d = e.clone();
            d[var] -= 1;
            (d, c * int(e[var] as i64))
        })
        .collect()
}

pub fn raw_gradient(f: &RawPoly, nvars: usize) -> Vec<RawPoly> {
    (0..nvars).map(|i| raw_partial(f, i)).collect()
}

/// `z_1^k + … + z_n^k`.
pub fn fermat(nvars: usize, k: u32) -> RawPoly {
    (0..nvars)
        .map(|i| {
            let mut e = vec![0; nvars];
            e[i] = k;
            (e, int(1))
        })
        .collect()
}

/// All exponent vectors of total degree `< bound`.
pub fn monomials_below(nvars: usize, bound: u32) -> Vec<Vec<u32>> {
    fn go(prefix: &mut Vec<u32>, nvars: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for k in 0..=budget {
            prefix.push(k);
            go(prefix, nvars, budget - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if bound > 0 {
        go(&mut Vec::new(), nvars, bound - 1, &mut out);
    }
    out
}

type SparseRow = BTreeMap<usize, BigRational>;

/// Reduces `row` against the echelon rows and keeps it if it survives.
fn insert_row(echelon: &mut BTreeMap<usize, SparseRow>, mut row: SparseRow) {
    row.retain(|_, v| !v.is_zero());
    while let Some((&lead, lead_val)) = row.iter().next() {
        let Some(pivot_row) = echelon.get(&lead) else {
            let inv = BigRational::one() / lead_val;
            let normalized = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
            echelon.insert(lead, normalized);
            return;
        };
        let factor = lead_val.clone();
        for (col, v) in pivot_row {
            *row.entry(*col).or_insert_with(BigRational::zero) -= &factor * v;
        }
        row.retain(|_, v| !v.is_zero());
    }
}

/// Rank of the span of `m·g` (truncated below degree `n`) together with the
/// given monomials, and the dimension of the ambient space of polynomials of
/// degree `< n`.
fn truncated_rank(gens: &[RawPoly], extra: &[Vec<u32>], nvars: usize, n: u32) -> (usize, usize) {
    let monos = monomials_below(nvars, n);
    let index: HashMap<&Vec<u32>, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut echelon = BTreeMap::new();
    for g in gens {
        for m in &monos {
            let mut row = SparseRow::new();
            for (e, c) in g {
                let prod: Vec<u32> = e.iter().zip(m).map(|(a, b)| a + b).collect();
                if let Some(&col) = index.get(&prod) {
                    *row.entry(col).or_insert_with(BigRational::zero) += c;
                }
            }
            insert_row(&mut echelon, row);
        }
    }
    for e in extra {
        if let Some(&col) = index.get(e) {
            insert_row(&mut echelon, [(col, int(1))].into_iter().collect());
        }
    }
    (echelon.len(), monos.len())
}

/// `dim ℚ[z] / (I + m^N)` by row reduction of the truncated ideal.
pub fn truncated_colength(gens: &[RawPoly], nvars: usize, n: u32) -> usize {
    let (rank, total) = truncated_rank(gens, &[], nvars, n);
    total - rank
}

/// True iff the monomials project to a basis of `ℚ[z] / (I + m^N)`.
pub fn is_complement_basis(gens: &[RawPoly], basis: &[Vec<u32>], nvars: usize, n: u32) -> bool {
    let (with_basis, total) = truncated_rank(gens, basis, nvars, n);
    with_basis == total && basis.len() == truncated_colength(gens, nvars, n)
}

/// Colength of `I` in the local ring at 0, found by increasing `N` until
/// `dim ℚ[z]/(I + m^N)` stops changing (then `m^N ⊆ I` by Nakayama).
/// `None` if it has not stabilized by `max_n`.
pub fn brute_force_colength(gens: &[RawPoly], nvars: usize, max_n: u32) -> Option<usize> {
    let mut prev = truncated_colength(gens, nvars, 1);
    for n in 2..=max_n {
        let d = truncated_colength(gens, nvars, n);
        if d == prev {
            return Some(d);
        }
        prev = d;
    }
    None
}

pub fn brute_force_milnor(f: &RawPoly, nvars: usize, max_n: u32) -> Option<usize> {
    brute_force_colength(&raw_gradient(f, nvars), nvars, max_n)
}
