use std::cmp::Ordering;

use crate::algebra::monomial::cmp_revlex_tail;
use crate::algebra::{ExponentVector, GaussRational, Poly};

/// Negative degree reverse lexicographic order (Singular's `ds`).
///
/// Lower total degree is larger, so `1` is the largest monomial; equal
/// degrees are compared reverse lexicographically, which makes
/// `x > y > ...` among variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LocalOrder {
    nvars: usize,
}

impl LocalOrder {
    pub fn new(nvars: usize) -> Self {
        LocalOrder { nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn cmp(&self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        b.degree()
            .cmp(&a.degree())
            .then_with(|| cmp_revlex_tail(a.as_slice(), b.as_slice()))
    }

    /// Largest term of `p`, or `None` for zero.
    pub fn leading_term<'a>(&self, p: &'a Poly) -> Option<(&'a ExponentVector, &'a GaussRational)> {
        p.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }

    pub fn leading_exponent(&self, p: &Poly) -> Option<ExponentVector> {
        self.leading_term(p).map(|(e, _)| e.clone())
    }

    /// `deg(p) − deg(LM(p))`, the distance from the tangent cone.
    pub fn ecart(&self, p: &Poly) -> u32 {
        match (p.total_degree(), self.leading_term(p)) {
            (Some(d), Some((e, _))) => d - e.degree(),
            _ => 0,
        }
    }

    /// Scales `p` so its leading coefficient is 1.
    pub fn normalize(&self, p: &Poly) -> Poly {
        match self.leading_term(p) {
            Some((_, c)) => p.scale(&c.inv().expect("nonzero")),
            None => p.clone(),
        }
    }

    /// Sorts exponents from largest to smallest.
    pub fn sort_desc(&self, v: &mut [ExponentVector]) {
        v.sort_by(|a, b| self.cmp(b, a));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    #[test]
    fn one_is_largest() {
        let o = LocalOrder::new(2);
        assert_eq!(o.cmp(&ev(&[0, 0]), &ev(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[1, 0]), &ev(&[0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[2, 0]), &ev(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[1, 1]), &ev(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&ev(&[0, 2]), &ev(&[3, 0])), Ordering::Greater);
    }

    #[test]
    fn leading_terms_and_ecart() {
        let o = LocalOrder::new(2);
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        // x² + 3y²: same degree, x² wins
        let p = &x.pow(2) + &y.pow(2).scale(&GaussRational::from_integer(3));
        assert_eq!(o.leading_exponent(&p), Some(ev(&[2, 0])));
        assert_eq!(o.ecart(&p), 0);
        // y − x³: lowest degree wins
        let q = &y - &x.pow(3);
        assert_eq!(o.leading_exponent(&q), Some(ev(&[0, 1])));
        assert_eq!(o.ecart(&q), 2);
    }
}
