use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use super::gauss::GaussRational;
use super::poly::{format_monomial, Poly};
use crate::error::{Error, Result};

/// Highest form degree the toolkit manipulates: `(1-form)∧(2-form)∧(1-form)`.
pub const MAX_FORM_DEGREE: usize = 4;

/// Polynomial in the split variables `(z₁..z_n | w₁..w_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    half: usize,
    poly: Poly,
}

impl BiPoly {
    pub fn new(half: usize, poly: Poly) -> Result<Self> {
        if poly.nvars() != 2 * half {
            return Err(Error::VariableMismatch {
                left: 2 * half,
                right: poly.nvars(),
            });
        }
        Ok(BiPoly { half, poly })
    }

    /// Number of `z` variables (equal to the number of `w` variables).
    pub fn half(&self) -> usize {
        self.half
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn z(half: usize, j: usize) -> Self {
        BiPoly {
            half,
            poly: Poly::var(2 * half, j),
        }
    }

    pub fn w(half: usize, j: usize) -> Self {
        BiPoly {
            half,
            poly: Poly::var(2 * half, half + j),
        }
    }

    pub fn partial_z(&self, j: usize) -> Poly {
        self.poly.partial(j)
    }

    pub fn partial_w(&self, j: usize) -> Poly {
        self.poly.partial(self.half + j)
    }

    /// Evaluates at `(z, w)`.
    pub fn eval(&self, z: &[GaussRational], w: &[GaussRational]) -> GaussRational {
        let point: Vec<GaussRational> = z.iter().chain(w).cloned().collect();
        self.poly.eval(&point)
    }
}

pub fn bipoly_names(half: usize) -> Vec<String> {
    (1..=half)
        .map(|i| format!("z{i}"))
        .chain((1..=half).map(|i| format!("w{i}")))
        .collect()
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display_with(&bipoly_names(self.half)))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

/// Graded exterior form over the covectors `dz₁..dz_n, dw₁..dw_n`, with
/// coefficients in the `2n`-variable ring of [`BiPoly`].
///
/// Basis covector `k < n` is `dz_{k+1}`; `k ≥ n` is `dw_{k-n+1}`. Keys are
/// strictly increasing index lists.
#[derive(Clone, PartialEq, Eq)]
pub struct ExteriorForm {
    half: usize,
    degree: usize,
    terms: BTreeMap<Vec<usize>, Poly>,
}

impl ExteriorForm {
    pub fn zero(half: usize, degree: usize) -> Self {
        ExteriorForm {
            half,
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(f: &BiPoly) -> Self {
        let mut out = Self::zero(f.half, 0);
        out.add_term(Vec::new(), f.poly.clone());
        out
    }

    pub fn dz(half: usize, j: usize) -> Self {
        assert!(j < half);
        Self::basis(half, vec![j])
    }

    pub fn dw(half: usize, j: usize) -> Self {
        assert!(j < half);
        Self::basis(half, vec![half + j])
    }

    fn basis(half: usize, idx: Vec<usize>) -> Self {
        let mut out = Self::zero(half, idx.len());
        out.add_term(idx, Poly::one(2 * half));
        out
    }

    /// Builds a form from `(covector indices, coefficient)` pairs. Indices
    /// may be unsorted; they are normalized with the antisymmetry sign.
    pub fn from_terms<I>(half: usize, degree: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Poly)>,
    {
        if degree > MAX_FORM_DEGREE.min(2 * half) {
            return Err(Error::DegreeOverflow {
                degree,
                limit: MAX_FORM_DEGREE.min(2 * half),
            });
        }
        let mut out = Self::zero(half, degree);
        for (idx, c) in terms {
            if idx.len() != degree || idx.iter().any(|&k| k >= 2 * half) {
                return Err(Error::DegreeOverflow {
                    degree: idx.len(),
                    limit: degree,
                });
            }
            if c.nvars() != 2 * half {
                return Err(Error::VariableMismatch {
                    left: 2 * half,
                    right: c.nvars(),
                });
            }
            if let Some((sign, sorted)) = normalize(idx) {
                out.add_term(sorted, if sign < 0 { -&c } else { c });
            }
        }
        Ok(out)
    }

    pub fn half(&self) -> usize {
        self.half
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero coefficients keyed by increasing covector indices.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Poly)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn coeff(&self, idx: &[usize]) -> Poly {
        self.terms
            .get(idx)
            .cloned()
            .unwrap_or_else(|| Poly::zero(2 * self.half))
    }

    fn add_term(&mut self, idx: Vec<usize>, c: Poly) {
        if c.is_zero() {
            return;
        }
        let slot = self
            .terms
            .entry(idx)
            .or_insert_with(|| Poly::zero(2 * self.half));
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check_compatible(&self, other: &ExteriorForm) -> Result<()> {
        if self.half != other.half {
            return Err(Error::VariableMismatch {
                left: self.half,
                right: other.half,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        self.check_compatible(other)?;
        if self.degree != other.degree {
            return Err(Error::DegreeOverflow {
                degree: other.degree,
                limit: self.degree,
            });
        }
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        self.add(&other.scale(&GaussRational::from_integer(-1)))
    }

    pub fn scale(&self, c: &GaussRational) -> ExteriorForm {
        self.mul_poly(&Poly::constant(2 * self.half, c.clone()))
    }

    /// Multiplies every coefficient by a function.
    pub fn mul_poly(&self, f: &Poly) -> ExteriorForm {
        let mut out = Self::zero(self.half, self.degree);
        if f.is_zero() {
            return out;
        }
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v * f);
        }
        out
    }

    /// Exterior product with Koszul signs.
    pub fn wedge(&self, other: &ExteriorForm) -> Result<ExteriorForm> {
        self.check_compatible(other)?;
        let degree = self.degree + other.degree;
        let limit = MAX_FORM_DEGREE.min(2 * self.half);
        if degree > limit {
            return Err(Error::DegreeOverflow { degree, limit });
        }
        let mut out = Self::zero(self.half, degree);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let idx: Vec<usize> = a.iter().chain(b).copied().collect();
                if let Some((sign, sorted)) = normalize(idx) {
                    let c = ca * cb;
                    out.add_term(sorted, if sign < 0 { -&c } else { c });
                }
            }
        }
        Ok(out)
    }

    fn covector_name(&self, k: usize) -> String {
        covector_name(self.half, k)
    }
}

/// `dz1..dzn` for indices below `half`, then `dw1..dwn`.
pub fn covector_name(half: usize, k: usize) -> String {
    if k < half {
        format!("dz{}", k + 1)
    } else {
        format!("dw{}", k - half + 1)
    }
}

/// Sorts covector indices, returning the permutation sign, or `None` if an
/// index repeats.
fn normalize(mut idx: Vec<usize>) -> Option<(i32, Vec<usize>)> {
    let mut sign = 1;
    // insertion sort counting transpositions; lists have length ≤ 4
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((sign, idx))
}

impl fmt::Display for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = bipoly_names(self.half);
        for (n, (idx, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            let basis: Vec<String> = idx.iter().map(|&k| self.covector_name(k)).collect();
            let coeff = match c.sorted_terms().as_slice() {
                [(e, v)] if e.is_constant() && !v.is_zero() => format!("{v}"),
                [(e, v)] if v.is_real() && *v.re() == num_rational::BigRational::from_integer(1.into()) => {
                    format_monomial(e, &names).unwrap_or_default()
                }
                _ => format!("({})", c.display_with(&names)),
            };
            if basis.is_empty() {
                write!(f, "{coeff}")?;
            } else {
                write!(f, "{coeff}*{}", basis.join("^"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ExteriorForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({self})", self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn antisymmetry() {
        let dz1 = ExteriorForm::dz(2, 0);
        let dz2 = ExteriorForm::dz(2, 1);
        assert!(dz1.wedge(&dz1).unwrap().is_zero());
        let a = dz1.wedge(&dz2).unwrap();
        let b = dz2.wedge(&dz1).unwrap();
        assert_eq!(a, b.scale(&GaussRational::from_integer(-1)));
    }

    #[test]
    fn repeated_covector_vanishes() {
        let w1 = BiPoly::w(2, 0);
        let form = ExteriorForm::dz(2, 0).mul_poly(w1.poly());
        let two = ExteriorForm::dz(2, 0).wedge(&ExteriorForm::dw(2, 0)).unwrap();
        assert!(form.wedge(&two).unwrap().is_zero());
    }

    #[test]
    fn degree_limits() {
        let dz1 = ExteriorForm::dz(1, 0);
        let dw1 = ExteriorForm::dw(1, 0);
        let two = dz1.wedge(&dw1).unwrap();
        assert!(matches!(two.wedge(&dz1), Err(Error::DegreeOverflow { degree: 3, limit: 2 })));
        let f = ExteriorForm::dz(3, 0)
            .wedge(&ExteriorForm::dz(3, 1))
            .and_then(|a| a.wedge(&ExteriorForm::dz(3, 2)))
            .and_then(|a| a.wedge(&ExteriorForm::dw(3, 0)))
            .unwrap();
        assert_eq!(f.degree(), 4);
        assert!(matches!(f.wedge(&ExteriorForm::dw(3, 1)), Err(Error::DegreeOverflow { degree: 5, limit: 4 })));
    }

    #[test]
    fn from_terms_normalizes_order() {
        let f = ExteriorForm::from_terms(2, 2, [(vec![1, 0], Poly::one(4))]).unwrap();
        assert_eq!(f.coeff(&[0, 1]), -&Poly::one(4));
        assert!(ExteriorForm::from_terms(2, 2, [(vec![1, 1], Poly::one(4))]).unwrap().is_zero());
    }

    #[test]
    fn display() {
        let z1 = BiPoly::z(1, 0);
        let f = ExteriorForm::dw(1, 0).mul_poly(z1.poly());
        assert_eq!(f.to_string(), "z1*dw1");
    }
}
