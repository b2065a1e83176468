//! Complexification of real-analytic defining functions, the Levi 1-form,
//! and the Levi-flatness certificate.
//!
//! A real polynomial `F(z) = Σ F_μν z^μ z̄^ν` is stored as its coefficient
//! table. Replacing `z̄` by an independent variable `w` gives the
//! complexification `F_ℂ(z, w)`, a [`BiPoly`] whose `w` block plays the role
//! of the conjugate coordinates.
//!
//! Flatness is decided on the complexified hypersurface: the 4-form
//! `Ω ∧ dF_ℂ` with `Ω = (∂_z F_ℂ − ∂_w F_ℂ) ∧ Σ ∂²F_ℂ/∂z_j∂w_k dz_j ∧ dw_k`
//! vanishes along `{F_ℂ = 0}` exactly when every coefficient is divisible by
//! the square-free part of `F_ℂ`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::gcd::squarefree_part;
use crate::algebra::json::{coeff_from_strings, coeff_to_strings};
use crate::algebra::{BiPoly, ExponentVector, ExteriorForm, GaussRational, Poly};
use crate::error::{Error, Result};
use crate::local::{quotient_dimension, Limits};

/// Real-valued polynomial in `(z, z̄)`, stored as `F_μν`.
///
/// Invariants: `conj(F_μν) = F_νμ` for every entry and no constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct HermitianPoly {
    nvars: usize,
    table: BTreeMap<(ExponentVector, ExponentVector), GaussRational>,
}

impl HermitianPoly {
    pub fn from_table<I>(nvars: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((ExponentVector, ExponentVector), GaussRational)>,
    {
        let mut terms = Vec::new();
        for ((mu, nu), c) in entries {
            if mu.len() != nvars || nu.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: mu.len().max(nu.len()),
                });
            }
            let joined: Vec<u32> = mu.as_slice().iter().chain(nu.as_slice()).copied().collect();
            terms.push((ExponentVector::new(joined), c));
        }
        Self::from_bipoly(&BiPoly::new(nvars, Poly::from_terms(2 * nvars, terms)?)?)
    }

    /// Reads the table off a complexified polynomial, checking reality.
    pub fn from_bipoly(f: &BiPoly) -> Result<Self> {
        let n = f.half();
        let mut table = BTreeMap::new();
        for (e, c) in f.poly().terms() {
            let (mu, nu) = split(e, n);
            table.insert((mu, nu), c.clone());
        }
        let out = HermitianPoly { nvars: n, table };
        for ((mu, nu), c) in &out.table {
            if out.coeff(nu, mu) != c.conj() {
                return Err(Error::NotRealValued {
                    term: out.term_name(mu, nu),
                });
            }
        }
        if out.table.keys().any(|(mu, nu)| mu.is_constant() && nu.is_constant()) {
            return Err(Error::ConstantTerm);
        }
        Ok(out)
    }

    /// `Re(P) = (P + P̄)/2` for a holomorphic `P` with `P(0) = 0`.
    pub fn real_part(p: &Poly) -> Result<Self> {
        let n = p.nvars();
        let zero = ExponentVector::zero(n);
        let half = GaussRational::ratio(1, 2);
        let mut entries = Vec::new();
        for (e, c) in p.terms() {
            entries.push(((e.clone(), zero.clone()), c * &half));
            entries.push(((zero.clone(), e.clone()), &c.conj() * &half));
        }
        Self::from_table(n, entries)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.table.is_empty()
    }

    pub fn table(&self) -> &BTreeMap<(ExponentVector, ExponentVector), GaussRational> {
        &self.table
    }

    pub fn coeff(&self, mu: &ExponentVector, nu: &ExponentVector) -> GaussRational {
        self.table.get(&(mu.clone(), nu.clone())).cloned().unwrap_or_default()
    }

    /// `Σ F_μ0 z^μ`, the purely holomorphic entries.
    pub fn holomorphic_block(&self) -> Poly {
        let terms = self
            .table
            .iter()
            .filter(|((_, nu), _)| nu.is_constant())
            .map(|((mu, _), c)| (mu.clone(), c.clone()));
        Poly::from_terms(self.nvars, terms).expect("consistent lengths")
    }

    /// Evaluates `F(z)` with `z̄` taken literally.
    pub fn eval(&self, z: &[GaussRational]) -> GaussRational {
        let zbar: Vec<GaussRational> = z.iter().map(GaussRational::conj).collect();
        complexify(self).eval(z, &zbar)
    }

    fn names(&self) -> Vec<String> {
        let base = crate::algebra::poly::default_names(self.nvars);
        base.iter()
            .cloned()
            .chain(base.iter().map(|v| format!("conj({v})")))
            .collect()
    }

    fn term_name(&self, mu: &ExponentVector, nu: &ExponentVector) -> String {
        let joined: Vec<u32> = mu.as_slice().iter().chain(nu.as_slice()).copied().collect();
        crate::algebra::poly::format_monomial(&ExponentVector::new(joined), &self.names()).unwrap_or_else(|| "1".into())
    }
}

fn split(e: &ExponentVector, n: usize) -> (ExponentVector, ExponentVector) {
    let s = e.as_slice();
    (ExponentVector::new(s[..n].to_vec()), ExponentVector::new(s[n..].to_vec()))
}

impl fmt::Display for HermitianPoly {
    /// Writes `conj(z_k)` for the conjugate variables; parses back with
    /// [`crate::parser::parse_real_analytic`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        write!(f, "{}", complexify(self).poly().display_with(&names))
    }
}

impl fmt::Debug for HermitianPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HermitianPoly[{}]({self})", self.nvars)
    }
}

#[derive(Serialize, Deserialize)]
struct HermitianTermRepr {
    mu: Vec<u32>,
    nu: Vec<u32>,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct HermitianRepr {
    nvars: usize,
    terms: Vec<HermitianTermRepr>,
}

impl Serialize for HermitianPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms = self
            .table
            .iter()
            .map(|((mu, nu), c)| {
                let (re, im) = coeff_to_strings(c);
                HermitianTermRepr {
                    mu: mu.as_slice().to_vec(),
                    nu: nu.as_slice().to_vec(),
                    re,
                    im,
                }
            })
            .collect();
        HermitianRepr {
            nvars: self.nvars,
            terms,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HermitianPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = HermitianRepr::deserialize(d)?;
        let entries = repr
            .terms
            .into_iter()
            .map(|t| {
                let c = coeff_from_strings(&t.re, &t.im)?;
                Ok(((ExponentVector::new(t.mu), ExponentVector::new(t.nu)), c))
            })
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        HermitianPoly::from_table(repr.nvars, entries).map_err(serde::de::Error::custom)
    }
}

/// `P(z, w) ↦ conj(P)(w, z)`: swaps the blocks and conjugates coefficients.
/// Fixes exactly the complexifications of real-valued functions.
pub fn reality_conjugate(p: &BiPoly) -> BiPoly {
    let n = p.half();
    let terms = p.poly().terms().map(|(e, c)| {
        let s = e.as_slice();
        let swapped: Vec<u32> = s[n..].iter().chain(&s[..n]).copied().collect();
        (ExponentVector::new(swapped), c.conj())
    });
    BiPoly::new(n, Poly::from_terms(2 * n, terms).expect("same ring")).expect("same split")
}

/// `F_ℂ(z, w) = Σ F_μν z^μ w^ν`.
pub fn complexify(f: &HermitianPoly) -> BiPoly {
    let n = f.nvars;
    let terms = f.table.iter().map(|((mu, nu), c)| {
        let joined: Vec<u32> = mu.as_slice().iter().chain(nu.as_slice()).copied().collect();
        (ExponentVector::new(joined), c.clone())
    });
    BiPoly::new(n, Poly::from_terms(2 * n, terms).expect("table entries have length n")).expect("2n variables")
}

/// `(α, β)` with `α = Σ ∂F_ℂ/∂z_j dz_j`, `β = Σ ∂F_ℂ/∂w_j dw_j`, so that
/// `dF_ℂ = α + β`.
pub fn levi_form_restriction_split(fc: &BiPoly) -> (ExteriorForm, ExteriorForm) {
    let n = fc.half();
    let alpha = (0..n).fold(ExteriorForm::zero(n, 1), |acc, j| {
        acc.add(&ExteriorForm::dz(n, j).mul_poly(&fc.partial_z(j)))
            .expect("1-forms")
    });
    let beta = (0..n).fold(ExteriorForm::zero(n, 1), |acc, j| {
        acc.add(&ExteriorForm::dw(n, j).mul_poly(&fc.partial_w(j)))
            .expect("1-forms")
    });
    (alpha, beta)
}

/// `η_ℂ = i(∂_z F_ℂ − ∂_w F_ℂ)`.
pub fn levi_one_form(fc: &BiPoly) -> ExteriorForm {
    let (alpha, beta) = levi_form_restriction_split(fc);
    alpha.sub(&beta).expect("1-forms").scale(&GaussRational::i())
}

/// `dF_ℂ`.
pub fn differential(fc: &BiPoly) -> ExteriorForm {
    let (alpha, beta) = levi_form_restriction_split(fc);
    alpha.add(&beta).expect("1-forms")
}

/// `Σ_{j,k} ∂²F_ℂ/∂z_j∂w_k dz_j ∧ dw_k`, the complexified `∂∂̄F`.
pub fn mixed_hessian_form(fc: &BiPoly) -> ExteriorForm {
    let n = fc.half();
    let mut out = ExteriorForm::zero(n, 2);
    if n == 0 {
        return out;
    }
    for j in 0..n {
        let dzj = fc.partial_z(j);
        for k in 0..n {
            let coeff = dzj.partial(n + k);
            if coeff.is_zero() {
                continue;
            }
            let basis = ExteriorForm::dz(n, j).wedge(&ExteriorForm::dw(n, k)).expect("2 ≤ 2n");
            out = out.add(&basis.mul_poly(&coeff)).expect("2-forms");
        }
    }
    out
}

/// The 4-form `(∂_z F_ℂ − ∂_w F_ℂ) ∧ ∂∂̄F_ℂ ∧ dF_ℂ`.
///
/// Requires `n ≥ 2`; for `n = 1` there are no nonzero 4-forms.
pub fn obstruction_form(fc: &BiPoly) -> Result<ExteriorForm> {
    let (alpha, beta) = levi_form_restriction_split(fc);
    let theta = alpha.sub(&beta)?;
    let omega = theta.wedge(&mixed_hessian_form(fc))?;
    omega.wedge(&alpha.add(&beta)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Flat,
    NotFlat,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Flat => "FLAT",
            Verdict::NotFlat => "NOT_FLAT",
        })
    }
}

/// A coefficient of `Ω ∧ dF_ℂ` that does not vanish on `{F_ℂ = 0}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    /// Increasing covector indices (`dz` first, then `dw`).
    pub covectors: Vec<usize>,
    pub coefficient: BiPoly,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeviCertificate {
    pub verdict: Verdict,
    /// Present exactly when the verdict is `NotFlat`.
    pub witness: Option<Witness>,
    /// The square-free part of `F_ℂ` used for the divisibility tests.
    pub reduced_equation: BiPoly,
}

impl LeviCertificate {
    pub fn is_flat(&self) -> bool {
        self.verdict == Verdict::Flat
    }
}

pub fn is_levi_flat(f: &HermitianPoly) -> Result<LeviCertificate> {
    if f.is_zero() {
        return Err(Error::ZeroInput);
    }
    let fc = complexify(f);
    let n = fc.half();
    let reduced = BiPoly::new(n, squarefree_part(fc.poly()))?;
    let flat = LeviCertificate {
        verdict: Verdict::Flat,
        witness: None,
        reduced_equation: reduced.clone(),
    };
    if 2 * n < 4 {
        return Ok(flat);
    }
    let obstruction = obstruction_form(&fc)?;
    for (idx, coeff) in obstruction.terms() {
        if coeff.div_exact(reduced.poly()).is_none() {
            return Ok(LeviCertificate {
                verdict: Verdict::NotFlat,
                witness: Some(Witness {
                    covectors: idx.to_vec(),
                    coefficient: BiPoly::new(n, coeff.clone())?,
                }),
                reduced_equation: reduced,
            });
        }
    }
    Ok(flat)
}

/// True iff `⟨F_ℂ, ∂F_ℂ/∂z_j, ∂F_ℂ/∂w_j⟩` has finite colength in the local
/// ring of `ℂ^{2n}` at the origin, i.e. the singular locus of the
/// complexified hypersurface is at most the origin near 0.
pub fn singular_locus_is_origin(f: &HermitianPoly, limits: Limits) -> Result<bool> {
    let fc = complexify(f);
    let mut gens = vec![fc.poly().clone()];
    gens.extend(fc.poly().gradient());
    Ok(quotient_dimension(&gens, 2 * fc.half(), limits)?.is_some())
}
