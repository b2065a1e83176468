//! Newton supports, quasihomogeneous weights and the semiquasihomogeneous
//! split `f = Q + F′`.
//!
//! Weights are normalized to degree `d = 1`: a polynomial is
//! quasihomogeneous with weights `α` when every exponent `k` of its support
//! satisfies `⟨α, k⟩ = 1`.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use crate::algebra::gauss::rational_to_string;
use crate::algebra::linalg::{solve, Solution};
use crate::algebra::{ExponentVector, Poly};
use crate::error::{Error, Result};
use crate::local::{milnor_number, Limits, MilnorNumber};

/// Exponents of the nonzero terms of a polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NewtonSupport {
    pub nvars: usize,
    pub points: BTreeSet<ExponentVector>,
}

impl NewtonSupport {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn newton_support(f: &Poly) -> NewtonSupport {
    NewtonSupport {
        nvars: f.nvars(),
        points: f.terms().map(|(e, _)| e.clone()).collect(),
    }
}

/// Weights `α` for the normalized degree `d = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSystem {
    pub alpha: Vec<BigRational>,
    /// Set when the support does not pin the weights down; the returned
    /// system is then one deterministic choice among several.
    pub ambiguous: bool,
}

impl WeightSystem {
    pub fn degree(&self) -> BigRational {
        BigRational::one()
    }

    /// Uniform weights `1/k`, the homogeneous case.
    pub fn homogeneous(nvars: usize, k: u32) -> Self {
        WeightSystem {
            alpha: vec![BigRational::new(1.into(), k.into()); nvars],
            ambiguous: false,
        }
    }
}

impl Serialize for WeightSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(None)?;
        let alpha: Vec<String> = self.alpha.iter().map(rational_to_string).collect();
        m.serialize_entry("alpha", &alpha)?;
        m.serialize_entry("d", "1")?;
        if self.ambiguous {
            m.serialize_entry("ambiguous", &true)?;
        }
        m.end()
    }
}

/// `⟨α, m⟩`. Panics if the lengths differ.
pub fn weighted_degree(m: &ExponentVector, w: &WeightSystem) -> BigRational {
    assert_eq!(m.len(), w.alpha.len(), "exponent and weight lengths differ");
    m.as_slice()
        .iter()
        .zip(&w.alpha)
        .fold(BigRational::zero(), |acc, (&k, a)| acc + a * BigRational::from_integer(k.into()))
}

fn rat(k: u32) -> BigRational {
    BigRational::from_integer(k.into())
}

fn all_positive(v: &[BigRational]) -> bool {
    v.iter().all(Signed::is_positive)
}

fn dot(a: &[BigRational], b: &[BigRational]) -> BigRational {
    a.iter().zip(b).fold(BigRational::zero(), |acc, (x, y)| acc + x * y)
}

/// The point of `particular + span(kernel)` closest to the origin.
fn minimum_norm(particular: &[BigRational], kernel: &[Vec<BigRational>]) -> Vec<BigRational> {
    // normal equations (KᵀK) t = −Kᵀp
    let gram: Vec<Vec<BigRational>> = kernel
        .iter()
        .map(|u| kernel.iter().map(|v| dot(u, v)).collect())
        .collect();
    let rhs: Vec<BigRational> = kernel.iter().map(|u| -dot(u, particular)).collect();
    let Solution::Affine { particular: t, .. } = solve(&gram, &rhs) else {
        unreachable!("kernel vectors are independent");
    };
    let mut out = particular.to_vec();
    for (ti, u) in t.iter().zip(kernel) {
        for (o, ui) in out.iter_mut().zip(u) {
            *o += ti * ui;
        }
    }
    out
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = choose(n - 1, k);
    for mut c in choose(n - 1, k - 1) {
        c.push(n - 1);
        out.push(c);
    }
    out
}

/// Centroid of the vertices of `{Aα = 1, 0 ≤ α ≤ 1}`. Lies in the relative
/// interior, so it is strictly positive whenever any feasible point is.
fn box_centroid(rows: &[Vec<BigRational>], free_dims: usize) -> Option<Vec<BigRational>> {
    let n = rows.first().map_or(0, Vec::len);
    let mut vertices: BTreeSet<Vec<BigRational>> = BTreeSet::new();
    for fixed in choose(n, free_dims) {
        for mask in 0..(1u32 << free_dims) {
            let mut a = rows.to_vec();
            let mut b = vec![BigRational::one(); rows.len()];
            for (bit, &var) in fixed.iter().enumerate() {
                let mut row = vec![BigRational::zero(); n];
                row[var] = BigRational::one();
                a.push(row);
                b.push(if mask >> bit & 1 == 1 { BigRational::one() } else { BigRational::zero() });
            }
            if let Solution::Affine { particular, kernel } = solve(&a, &b) {
                let inside = particular
                    .iter()
                    .all(|v| !v.is_negative() && *v <= BigRational::one());
                if kernel.is_empty() && inside {
                    vertices.insert(particular);
                }
            }
        }
    }
    if vertices.is_empty() {
        return None;
    }
    let count = BigRational::from_integer(vertices.len().into());
    let mut sum = vec![BigRational::zero(); n];
    for v in &vertices {
        for (s, x) in sum.iter_mut().zip(v) {
            *s += x;
        }
    }
    Some(sum.into_iter().map(|s| s / &count).collect())
}

/// Positive weights with `⟨α, k⟩ = 1` on every support point.
///
/// When the support determines `α` uniquely that solution is returned. When
/// it does not, the minimum-norm solution is used if it is positive;
/// otherwise the vertex centroid of the feasible region inside the unit box.
/// Both fallbacks set [`WeightSystem::ambiguous`].
pub fn find_weights(support: &NewtonSupport) -> Result<WeightSystem> {
    if support.is_empty() {
        return Err(Error::ZeroInput);
    }
    let rows: Vec<Vec<BigRational>> = support
        .points
        .iter()
        .map(|k| k.as_slice().iter().map(|&e| rat(e)).collect())
        .collect();
    let ones = vec![BigRational::one(); rows.len()];
    let (particular, kernel) = match solve(&rows, &ones) {
        Solution::Inconsistent => return Err(Error::NotQuasihomogeneous),
        Solution::Affine { particular, kernel } => (particular, kernel),
    };
    if kernel.is_empty() {
        return if all_positive(&particular) {
            Ok(WeightSystem {
                alpha: particular,
                ambiguous: false,
            })
        } else {
            Err(Error::NotQuasihomogeneous)
        };
    }
    let candidate = minimum_norm(&particular, &kernel);
    if all_positive(&candidate) {
        return Ok(WeightSystem {
            alpha: candidate,
            ambiguous: true,
        });
    }
    match box_centroid(&rows, kernel.len()) {
        Some(alpha) if all_positive(&alpha) => Ok(WeightSystem { alpha, ambiguous: true }),
        _ => Err(Error::NotQuasihomogeneous),
    }
}

/// `f = Q + F′` with `Q` quasihomogeneous of weighted degree 1 and every
/// term of `F′` of weighted degree strictly above 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SemiQhDecomposition {
    #[serde(rename = "Q")]
    pub q: Poly,
    #[serde(rename = "Fprime")]
    pub fprime: Poly,
    pub weights: WeightSystem,
}

/// Checks one candidate weight system: nothing below the diagonal and an
/// isolated diagonal part. The inner `Err` carries the reason for rejection.
fn split_with(f: &Poly, weights: WeightSystem, limits: Limits) -> Result<std::result::Result<SemiQhDecomposition, String>> {
    let one = BigRational::one();
    if f.terms().any(|(e, _)| weighted_degree(e, &weights) < one) {
        return Ok(Err("terms below the diagonal".into()));
    }
    let q = f.filter_terms(|e, _| weighted_degree(e, &weights) == one);
    if milnor_number(&q, limits)? == MilnorNumber::Infinite {
        return Ok(Err(format!("quasihomogeneous part {q} has a non-isolated singularity")));
    }
    let fprime = f.filter_terms(|e, _| weighted_degree(e, &weights) > one);
    Ok(Ok(SemiQhDecomposition { q, fprime, weights }))
}

/// Weight systems pinned down by `n` support points with independent
/// exponent vectors, in a deterministic order.
fn pinned_weight_systems(f: &Poly) -> Vec<WeightSystem> {
    let n = f.nvars();
    let points: Vec<&ExponentVector> = f.terms().map(|(e, _)| e).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for subset in choose(points.len(), n) {
        let rows: Vec<Vec<BigRational>> = subset
            .iter()
            .map(|&i| points[i].as_slice().iter().map(|&e| rat(e)).collect())
            .collect();
        if let Solution::Affine { particular, kernel } = solve(&rows, &vec![BigRational::one(); n]) {
            if kernel.is_empty() && all_positive(&particular) && seen.insert(particular.clone()) {
                out.push(WeightSystem {
                    alpha: particular,
                    ambiguous: false,
                });
            }
        }
    }
    out
}

/// Tries weights read off the terms of ordinary degree `≤ d`, for
/// increasing `d`; if none fits, every weight system pinned down by `n`
/// independent support points. The first candidate for which no term falls
/// below the diagonal and the diagonal part has an isolated singularity wins.
pub fn semiqh_split(f: &Poly, limits: Limits) -> Result<SemiQhDecomposition> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NotInMaximalIdeal);
    }
    let degrees: BTreeSet<u32> = f.terms().map(|(e, _)| e.degree()).collect();
    let mut reason = String::from("no positive weight system");
    let truncations = degrees
        .into_iter()
        .filter_map(|d| find_weights(&newton_support(&f.filter_terms(|e, _| e.degree() <= d))).ok());
    for weights in truncations.chain(pinned_weight_systems(f)) {
        match split_with(f, weights, limits)? {
            Ok(split) => return Ok(split),
            Err(why) => reason = why,
        }
    }
    Err(Error::NotSemiquasihomogeneous(reason))
}
