//! Jets, the finite-determinacy bound and normal-form templates.
//!
//! Templates carry symbolic coefficients `c1, c2, …`: only the shape of the
//! normal form is determined, never the values of the coefficients.

use std::fmt;

use num_rational::BigRational;
use num_traits::One;
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::algebra::poly::{default_names, format_monomial};
use crate::algebra::{ExponentVector, Poly};
use crate::error::{Error, Result};
use crate::levi::{is_levi_flat, HermitianPoly, LeviCertificate};
use crate::local::{local_algebra_basis, milnor_number, Limits, MilnorNumber};
use crate::quasihomogeneous::{find_weights, newton_support, semiqh_split, weighted_degree, WeightSystem};

/// Terms of total degree `≤ k`.
pub fn jet(f: &Poly, k: u32) -> Poly {
    f.truncate(k)
}

/// `μ(f, 0) + 1`: an isolated singularity is right equivalent to its jet of
/// this order.
pub fn determinacy_bound(f: &Poly, limits: Limits) -> Result<usize> {
    match milnor_number(f, limits)? {
        MilnorNumber::Finite(mu) => Ok(mu + 1),
        MilnorNumber::Infinite => Err(Error::NonIsolated),
    }
}

/// A monomial slot `c_j·e_j` of a template.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtraMonomial {
    pub monomial: ExponentVector,
    pub name: String,
}

impl Serialize for ExtraMonomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("monomial", self.monomial.as_slice())?;
        m.serialize_entry("name", &self.name)?;
        m.end()
    }
}

/// `base + Σ c_j e_j` with symbolic `c_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalFormTemplate {
    pub base: Poly,
    pub extras: Vec<ExtraMonomial>,
    pub mu: usize,
    pub degree_bound: usize,
    pub weights: Option<WeightSystem>,
    /// Set when the template is produced outside the proven range of
    /// dimensions.
    pub heuristic: bool,
}

impl NormalFormTemplate {
    fn new(base: Poly, monomials: Vec<ExponentVector>, mu: usize, weights: Option<WeightSystem>) -> Self {
        let extras = monomials
            .into_iter()
            .enumerate()
            .map(|(j, monomial)| ExtraMonomial {
                monomial,
                name: format!("c{}", j + 1),
            })
            .collect();
        NormalFormTemplate {
            base,
            extras,
            mu,
            degree_bound: mu + 1,
            weights,
            heuristic: false,
        }
    }
}

impl fmt::Display for NormalFormTemplate {
    /// `x^5+y^5 + c1*x^3*y^3`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.base.nvars());
        write!(f, "{}", self.base.display_with(&names))?;
        for e in &self.extras {
            match format_monomial(&e.monomial, &names) {
                Some(m) => write!(f, " + {}*{m}", e.name)?,
                None => write!(f, " + {}", e.name)?,
            }
        }
        Ok(())
    }
}

impl Serialize for NormalFormTemplate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(None)?;
        m.serialize_entry("base", &self.base)?;
        m.serialize_entry("extras", &self.extras)?;
        m.serialize_entry("mu", &self.mu)?;
        m.serialize_entry("bound", &self.degree_bound)?;
        m.serialize_entry("heuristic", &self.heuristic)?;
        if let Some(w) = &self.weights {
            m.serialize_entry("weights", w)?;
        }
        m.end()
    }
}

/// All exponent vectors of total degree `d`, grevlex-descending.
fn monomials_of_degree(nvars: usize, d: u32) -> Vec<ExponentVector> {
    fn go(prefix: &mut Vec<u32>, left: usize, d: u32, out: &mut Vec<ExponentVector>) {
        if left == 1 {
            prefix.push(d);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in 0..=d {
            prefix.push(k);
            go(prefix, left - 1, d - k, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if nvars > 0 {
        go(&mut Vec::new(), nvars, d, &mut out);
    }
    out.sort_by(|a, b| b.cmp_grevlex(a));
    out
}

/// `Q + Σ c_j e_j` over the monomial basis elements of the local algebra of
/// `Q` lying strictly above the weighted diagonal.
pub fn arnold_template(q: &Poly, limits: Limits) -> Result<NormalFormTemplate> {
    let weights = find_weights(&newton_support(q))?;
    let basis = match local_algebra_basis(q, limits) {
        Err(Error::NotInMaximalIdeal) => return Err(Error::NotQuasihomogeneous),
        other => other?,
    };
    let one = BigRational::one();
    let above: Vec<ExponentVector> = basis
        .monomials
        .into_iter()
        .filter(|e| weighted_degree(e, &weights) > one)
        .collect();
    Ok(NormalFormTemplate::new(q.clone(), above, basis.mu, Some(weights)))
}

/// Both shapes produced for a homogeneous principal part.
#[derive(Debug, Clone, PartialEq)]
pub struct HomogeneousReport {
    /// `P` plus every monomial of degree in `(k, μ+1]`.
    pub coarse: NormalFormTemplate,
    /// The quasihomogeneous refinement, when `P`'s support admits weights.
    pub refined: Option<NormalFormTemplate>,
    pub certificate: LeviCertificate,
}

/// The holomorphic `P` with `F = Re(P) + (terms of degree > k)`, and `k`.
fn homogeneous_principal_part(f: &HermitianPoly) -> Result<(Poly, u32)> {
    let degree = |(mu, nu): &(ExponentVector, ExponentVector)| mu.degree() + nu.degree();
    let k = f
        .table()
        .keys()
        .map(degree)
        .min()
        .ok_or(Error::ZeroInput)?;
    if let Some((mu, nu)) = f
        .table()
        .keys()
        .find(|key| degree(key) == k && !key.0.is_constant() && !key.1.is_constant())
    {
        return Err(Error::InvalidPrincipalPart(format!(
            "lowest-degree part has a mixed term with exponents {:?}, {:?}",
            mu.as_slice(),
            nu.as_slice()
        )));
    }
    if k < 2 {
        return Err(Error::InvalidPrincipalPart(format!(
            "principal part has degree {k}; a singular germ needs degree at least 2"
        )));
    }
    let p = f.holomorphic_block().homogeneous_part(k).scale(&2.into());
    Ok((p, k))
}

/// Principal part, determinacy bound and both template shapes for
/// `F = Re(P) + h.o.t.` with `P` homogeneous.
pub fn homogeneous_report(f: &HermitianPoly, limits: Limits) -> Result<HomogeneousReport> {
    let (p, k) = homogeneous_principal_part(f)?;
    let mu = match milnor_number(&p, limits)? {
        MilnorNumber::Finite(mu) => mu,
        MilnorNumber::Infinite => return Err(Error::NonIsolated),
    };
    let certificate = is_levi_flat(f)?;
    if !certificate.is_flat() {
        return Err(Error::NotLeviFlat);
    }
    let n = p.nvars();
    let slots: Vec<ExponentVector> = (k + 1..=mu as u32 + 1)
        .flat_map(|d| monomials_of_degree(n, d))
        .collect();
    let coarse = NormalFormTemplate::new(p.clone(), slots, mu, Some(WeightSystem::homogeneous(n, k)));
    let refined = arnold_template(&p, limits).ok();
    Ok(HomogeneousReport {
        coarse,
        refined,
        certificate,
    })
}

/// The coarse shape of [`homogeneous_report`].
pub fn theorem1_template(f: &HermitianPoly, limits: Limits) -> Result<NormalFormTemplate> {
    Ok(homogeneous_report(f, limits)?.coarse)
}

/// `Re(Q + Σ c_j e_j)` for `F` whose holomorphic block is
/// semiquasihomogeneous with principal part `Q`. Below three variables the
/// result is marked heuristic.
pub fn theorem2_template(f: &HermitianPoly, limits: Limits) -> Result<NormalFormTemplate> {
    let h = f.holomorphic_block().scale(&2.into());
    if h.is_zero() {
        return Err(Error::InvalidPrincipalPart("no holomorphic terms".into()));
    }
    if milnor_number(&h, limits)? == MilnorNumber::Infinite {
        return Err(Error::NonIsolated);
    }
    let split = semiqh_split(&h, limits)?;
    let real_q = HermitianPoly::real_part(&split.q)?;
    let one = BigRational::one();
    for (mu, nu) in f.table().keys() {
        if real_q.table().contains_key(&(mu.clone(), nu.clone())) {
            continue;
        }
        let e = mu.mul(nu);
        if weighted_degree(&e, &split.weights) <= one {
            return Err(Error::NotSemiquasihomogeneous(format!(
                "term with exponents {:?}, {:?} is not above the weighted diagonal",
                mu.as_slice(),
                nu.as_slice()
            )));
        }
    }
    if real_q.table().iter().any(|(key, c)| f.table().get(key) != Some(c)) {
        return Err(Error::NotSemiquasihomogeneous(
            "principal part is not the real part of its holomorphic block".into(),
        ));
    }
    if !is_levi_flat(f)?.is_flat() {
        return Err(Error::NotLeviFlat);
    }
    let mut t = arnold_template(&split.q, limits)?;
    t.heuristic = f.nvars() < 3;
    Ok(t)
}
