use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::gauss::GaussRational;
use super::linalg;
use super::monomial::ExponentVector;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial over ℚ(i).
///
/// Zero coefficients are never stored, so two polynomials are equal exactly
/// when their term maps are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<ExponentVector, GaussRational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: GaussRational) -> Self {
        Self::monomial(ExponentVector::zero(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, GaussRational::one())
    }

    /// The coordinate function `z_{var+1}`.
    pub fn var(nvars: usize, var: usize) -> Self {
        assert!(var < nvars, "variable index {var} out of range for {nvars} variables");
        Self::monomial(ExponentVector::unit(nvars, var), GaussRational::one())
    }

    pub fn monomial(exps: ExponentVector, c: GaussRational) -> Self {
        let mut p = Poly::zero(exps.len());
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Builds a canonical polynomial, summing repeated exponents.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, GaussRational)>,
    {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::VariableMismatch {
                    left: nvars,
                    right: e.len(),
                });
            }
            p.add_term(e, &c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&ExponentVector, &GaussRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExponentVector) -> GaussRational {
        self.terms.get(e).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GaussRational {
        self.coeff(&ExponentVector::zero(self.nvars))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(ExponentVector::is_constant)
    }

    /// Highest total degree of a term; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).max()
    }

    /// Lowest total degree of a term (the order at the origin).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(ExponentVector::degree).min()
    }

    /// Highest exponent of `z_{var+1}`; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    /// Terms sorted by descending graded reverse lexicographic order.
    pub fn sorted_terms(&self) -> Vec<(&ExponentVector, &GaussRational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_grevlex(a.0));
        v
    }

    pub(crate) fn add_term(&mut self, e: ExponentVector, c: &GaussRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · x^e · other`.
    pub(crate) fn add_scaled_shifted(&mut self, c: &GaussRational, e: &ExponentVector, other: &Poly) {
        for (oe, oc) in &other.terms {
            self.add_term(oe.mul(e), &(c * oc));
        }
    }

    fn check_same(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_same(other)?;
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_scaled_shifted(c, e, other);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &GaussRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul_term(&self, e: &ExponentVector, c: &GaussRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(oe, v)| (oe.mul(e), v * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one(self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to `z_{var+1}`.
    ///
    /// Panics if `var >= nvars`.
    pub fn partial(&self, var: usize) -> Poly {
        assert!(var < self.nvars, "variable index {var} out of range");
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            if k == 0 {
                continue;
            }
            let mut d = e.as_slice().to_vec();
            d[var] -= 1;
            out.add_term(ExponentVector::new(d), &(c * &GaussRational::from_integer(k as i64)));
        }
        out
    }

    /// All first partial derivatives, in variable order.
    pub fn gradient(&self) -> Vec<Poly> {
        (0..self.nvars).map(|i| self.partial(i)).collect()
    }

    /// Replaces every coefficient with its complex conjugate.
    pub fn conj(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.conj())).collect(),
        }
    }

    /// Terms of total degree at most `k`.
    pub fn truncate(&self, k: u32) -> Poly {
        self.filter_terms(|e, _| e.degree() <= k)
    }

    /// Terms of total degree exactly `d`.
    pub fn homogeneous_part(&self, d: u32) -> Poly {
        self.filter_terms(|e, _| e.degree() == d)
    }

    pub fn filter_terms<F>(&self, mut keep: F) -> Poly
    where
        F: FnMut(&ExponentVector, &GaussRational) -> bool,
    {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(e, c)| keep(e, c))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(ExponentVector::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn eval(&self, point: &[GaussRational]) -> GaussRational {
        assert_eq!(point.len(), self.nvars, "point has wrong dimension");
        let mut acc = GaussRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.as_slice()) {
                if k > 0 {
                    t *= &x.pow(k);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Substitutes `z_i ↦ Σ_j a[i][j]·z_j` and expands.
    pub fn substitute_linear(&self, a: &[Vec<GaussRational>]) -> Result<Poly> {
        let n = self.nvars;
        if a.len() != n || a.iter().any(|row| row.len() != n) {
            return Err(Error::MatrixShape {
                rows: a.len(),
                cols: a.first().map_or(0, Vec::len),
                expected: n,
            });
        }
        if linalg::rank(a.to_vec()) < n {
            return Err(Error::SingularMatrix);
        }
        let images: Vec<Poly> = a
            .iter()
            .map(|row| {
                Poly::from_terms(
                    n,
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| (ExponentVector::unit(n, j), c.clone())),
                )
                .expect("row length checked")
            })
            .collect();
        self.compose(&images)
    }

    /// Substitutes `z_i ↦ images[i]`. All images must share one ring.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: images.len(),
            });
        }
        let target = images.first().map_or(self.nvars, Poly::nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::VariableMismatch {
                left: target,
                right: bad.nvars,
            });
        }
        let mut powers: Vec<Vec<Poly>> = images.iter().map(|p| vec![Poly::one(target), p.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &k) in e.as_slice().iter().enumerate() {
                let k = k as usize;
                while powers[i].len() <= k {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    t = &t * &powers[i][k];
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Panics if `d` is zero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        assert_eq!(self.nvars, d.nvars, "variable count mismatch");
        // Lex leading terms: if d | r then LT(d) | LT(r).
        let (lead_e, lead_c) = d.terms.iter().next_back().expect("nonzero");
        let lead_inv = lead_c.inv().expect("nonzero");
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((re, rc)) = r.terms.iter().next_back() {
            let shift = lead_e.quotient_of(re)?;
            let c = rc * &lead_inv;
            q.add_term(shift.clone(), &c);
            r.add_scaled_shifted(&-&c, &shift, d);
        }
        Some(q)
    }

    /// Renders with explicit variable names.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        assert_eq!(names.len(), self.nvars);
        PolyDisplay { poly: self, names }
    }

    pub(crate) fn terms_mut(&mut self) -> &mut BTreeMap<ExponentVector, GaussRational> {
        &mut self.terms
    }
}

/// Default variable names: `x, y` in two variables, `z1..zn` otherwise.
pub fn default_names(nvars: usize) -> Vec<String> {
    if nvars == 2 {
        vec!["x".into(), "y".into()]
    } else {
        (1..=nvars).map(|i| format!("z{i}")).collect()
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

/// Renders `x^a*y^b`, or `None` for the constant monomial.
pub fn format_monomial(e: &ExponentVector, names: &[String]) -> Option<String> {
    let parts: Vec<String> = e
        .as_slice()
        .iter()
        .zip(names)
        .filter(|(k, _)| **k > 0)
        .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
        .collect();
    if parts.is_empty() {
        None
    } else {
        Some(parts.join("*"))
    }
}

fn format_term(e: &ExponentVector, c: &GaussRational, names: &[String]) -> String {
    match format_monomial(e, names) {
        None => c.to_string(),
        Some(m) => {
            if c.is_one() {
                m
            } else if (-c).is_one() {
                format!("-{m}")
            } else {
                format!("{c}*{m}")
            }
        }
    }
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in terms.into_iter().enumerate() {
            let s = format_term(e, c, self.names);
            if idx > 0 && !s.starts_with('-') {
                write!(f, "+")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_names(self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]({self})", self.nvars)
    }
}

// Operator forms panic on a variable-count mismatch; use the `checked_*`
// methods for untrusted operands.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.checked_add(o).expect("variable count mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.checked_sub(o).expect("variable count mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.checked_mul(o).expect("variable count mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&GaussRational::from_integer(-1))
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, o: Poly) -> Poly {
        &self + &o
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, o: Poly) -> Poly {
        &self - &o
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, o: Poly) -> Poly {
        &self * &o
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
