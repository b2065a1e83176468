//! Mora's tangent-cone normal form and standard bases for [`LocalOrder`].

use std::collections::HashSet;


use super::order::LocalOrder;
use crate::algebra::{ExponentVector, GaussRational, Poly};
use crate::error::{Error, Result};

/// Resource bounds for standard-basis computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest total degree of an S-pair lcm that will be processed.
    pub degree_cap: u32,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { degree_cap: 64 }
    }
}

struct Reducer {
    poly: Poly,
    lead: ExponentVector,
    lead_coeff: GaussRational,
    ecart: u32,
}

impl Reducer {
    fn new(poly: Poly, order: &LocalOrder) -> Self {
        let (lead, lead_coeff) = order
            .leading_term(&poly)
            .map(|(e, c)| (e.clone(), c.clone()))
            .expect("reducers are nonzero");
        let ecart = order.ecart(&poly);
        Reducer {
            poly,
            lead,
            lead_coeff,
            ecart,
        }
    }
}

/// `h − (LT(h)/LT(g))·g` for a reducer whose leading monomial divides `LM(h)`.
fn reduce_lead(h: &Poly, h_lead: &ExponentVector, h_coeff: &GaussRational, g: &Reducer) -> Poly {
    let shift = g.lead.quotient_of(h_lead).expect("divisibility checked");
    let c = h_coeff / &g.lead_coeff;
    h - &g.poly.mul_term(&shift, &c)
}

/// Mora's weak normal form: returns `h` with `u·p − h ∈ ⟨G⟩` for a unit `u`
/// of the local ring, and `LM(h)` not divisible by any `LM(g)`.
///
/// Reducers are chosen with minimal ecart; whenever the chosen reducer has
/// larger ecart than the current remainder, the remainder joins the reducer
/// set. This is what makes the loop terminate under a local order.
pub fn weak_normal_form(p: &Poly, gens: &[Poly], order: &LocalOrder) -> Poly {
    let mut reducers: Vec<Reducer> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Reducer::new(g.clone(), order))
        .collect();
    let mut h = p.clone();
    loop {
        let Some((lead, coeff)) = order.leading_term(&h).map(|(e, c)| (e.clone(), c.clone())) else {
            return h;
        };
        let Some(best) = reducers
            .iter()
            .enumerate()
            .filter(|(_, g)| g.lead.divides(&lead))
            .min_by_key(|(i, g)| (g.ecart, *i))
            .map(|(i, _)| i)
        else {
            return h;
        };
        let h_ecart = order.ecart(&h);
        let next = reduce_lead(&h, &lead, &coeff, &reducers[best]);
        if reducers[best].ecart > h_ecart {
            reducers.push(Reducer::new(h, order));
        }
        h = next;
    }
}

/// If the monomial ideal generated by `leads` contains a power of every
/// variable, returns a degree `D` with every monomial of degree `≥ D` in it.
/// A unit leading monomial gives `D = 0`.
pub(crate) fn saturation_degree(leads: &[ExponentVector], nvars: usize) -> Option<u32> {
    if leads.iter().any(ExponentVector::is_constant) {
        return Some(0);
    }
    let mut bounds = vec![None::<u32>; nvars];
    for (var, m) in leads.iter().filter_map(ExponentVector::pure_power) {
        let b = &mut bounds[var];
        *b = Some(b.map_or(m, |old| old.min(m)));
    }
    bounds
        .into_iter()
        .try_fold(1u32, |acc, b| b.map(|m| acc + m - 1))
}

/// Full reduction of every term, dropping terms of degree `≥ cutoff`.
///
/// Valid because such monomials lie in the ideal of the local ring once
/// its leading ideal contains all of them. The result is congruent to `p`
/// without any unit factor.
fn truncated_reduction(p: &Poly, reducers: &[Reducer], cutoff: u32, order: &LocalOrder) -> Poly {
    let mut r = p.filter_terms(|e, _| e.degree() < cutoff);
    let mut out = Poly::zero(p.nvars());
    while let Some((lead, coeff)) = order.leading_term(&r).map(|(e, c)| (e.clone(), c.clone())) {
        let best = reducers
            .iter()
            .filter(|g| g.lead.divides(&lead))
            .min_by_key(|g| g.ecart);
        match best {
            Some(g) => {
                r = reduce_lead(&r, &lead, &coeff, g).filter_terms(|e, _| e.degree() < cutoff);
            }
            None => {
                r.terms_mut().remove(&lead);
                out.add_term(lead, &coeff);
            }
        }
    }
    out
}

/// Normal form of `p` with respect to `gens` in the local ring.
///
/// When the leading monomials of `gens` generate a zero-dimensional
/// monomial ideal, the result `r` satisfies `p − r ∈ ⟨gens⟩` and no term of
/// `r` is divisible by a leading monomial. Otherwise this is Mora's weak
/// normal form (see [`weak_normal_form`]): only the leading term is
/// guaranteed standard, and the congruence holds up to a unit.
///
/// For `gens` a standard basis, the result is zero iff `p ∈ ⟨gens⟩`.
pub fn mora_normal_form(p: &Poly, gens: &[Poly], order: &LocalOrder) -> Poly {
    let reducers: Vec<Reducer> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Reducer::new(g.clone(), order))
        .collect();
    if reducers.is_empty() {
        return p.clone();
    }
    let leads: Vec<ExponentVector> = reducers.iter().map(|g| g.lead.clone()).collect();
    match saturation_degree(&leads, p.nvars()) {
        Some(cutoff) => truncated_reduction(p, &reducers, cutoff, order),
        None => weak_normal_form(p, gens, order),
    }
}

/// A standard basis of an ideal of the local ring.
#[derive(Debug, Clone, PartialEq)]
pub struct StandardBasis {
    generators: Vec<Poly>,
    leads: Vec<ExponentVector>,
    order: LocalOrder,
}

impl StandardBasis {
    pub fn generators(&self) -> &[Poly] {
        &self.generators
    }

    pub fn leading_exponents(&self) -> &[ExponentVector] {
        &self.leads
    }

    pub fn order(&self) -> &LocalOrder {
        &self.order
    }

    pub fn contains_unit(&self) -> bool {
        self.leads.iter().any(ExponentVector::is_constant)
    }

    /// True iff the quotient of the local ring is finite dimensional.
    pub fn is_zero_dimensional(&self) -> bool {
        saturation_degree(&self.leads, self.order.nvars()).is_some()
    }

    /// Monomials outside the leading ideal, largest first; `None` if
    /// there are infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<ExponentVector>> {
        saturation_degree(&self.leads, self.order.nvars())?;
        let n = self.order.nvars();
        let standard = |e: &ExponentVector| !self.leads.iter().any(|l| l.divides(e));
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        let mut stack = vec![ExponentVector::zero(n)];
        // the staircase is divisor-closed, so growing from 1 reaches all of it
        while let Some(e) = stack.pop() {
            if !seen.insert(e.clone()) || !standard(&e) {
                continue;
            }
            for v in 0..n {
                stack.push(e.mul(&ExponentVector::unit(n, v)));
            }
            out.push(e);
        }
        self.order.sort_desc(&mut out);
        Some(out)
    }

    pub fn normal_form(&self, p: &Poly) -> Poly {
        mora_normal_form(p, &self.generators, &self.order)
    }
}

fn s_polynomial(a: &Reducer, b: &Reducer) -> Poly {
    let lcm = a.lead.lcm(&b.lead);
    let sa = a.lead.quotient_of(&lcm).expect("lcm");
    let sb = b.lead.quotient_of(&lcm).expect("lcm");
    let ca = b.lead_coeff.clone();
    let cb = a.lead_coeff.clone();
    &a.poly.mul_term(&sa, &ca) - &b.poly.mul_term(&sb, &cb)
}

/// Standard basis of `⟨gens⟩` by Buchberger's pair loop with Mora's normal
/// form in place of division. The output is minimal: no leading exponent
/// divides another, and every generator has leading coefficient 1.
pub fn standard_basis(gens: &[Poly], order: &LocalOrder, limits: Limits) -> Result<StandardBasis> {
    let mut basis: Vec<Reducer> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.nvars() != order.nvars() {
            return Err(Error::VariableMismatch {
                left: order.nvars(),
                right: g.nvars(),
            });
        }
        basis.push(Reducer::new(order.normalize(g), order));
    }
    if basis.is_empty() {
        return Err(Error::ZeroIdeal);
    }
    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();
    while !basis.iter().any(|g| g.lead.is_constant()) {
        // lowest lcm degree first, then oldest pair
        let Some(pos) = pairs
            .iter()
            .enumerate()
            .min_by_key(|(k, &(i, j))| (basis[i].lead.lcm(&basis[j].lead).degree(), *k))
            .map(|(k, _)| k)
        else {
            break;
        };
        let (i, j) = pairs.remove(pos);
        let degree = basis[i].lead.lcm(&basis[j].lead).degree();
        if degree > limits.degree_cap {
            return Err(Error::ResourceLimit {
                degree,
                cap: limits.degree_cap,
            });
        }
        let s = s_polynomial(&basis[i], &basis[j]);
        let polys: Vec<Poly> = basis.iter().map(|g| g.poly.clone()).collect();
        let h = weak_normal_form(&s, &polys, order);
        if h.is_zero() {
            continue;
        }
        let k = basis.len();
        basis.push(Reducer::new(order.normalize(&h), order));
        pairs.extend((0..k).map(|i| (i, k)));
    }
    Ok(minimize(basis, order))
}

fn minimize(basis: Vec<Reducer>, order: &LocalOrder) -> StandardBasis {
    let mut kept: Vec<Reducer> = Vec::new();
    let mut sorted = basis;
    // smaller degree first, so divisors are seen before their multiples
    sorted.sort_by(|a, b| order.cmp(&b.lead, &a.lead).then(a.ecart.cmp(&b.ecart)));
    for g in sorted {
        if !kept.iter().any(|k| k.lead.divides(&g.lead)) {
            kept.push(g);
        }
    }
    if kept.iter().any(|g| g.lead.is_constant()) {
        kept = vec![Reducer::new(Poly::one(order.nvars()), order)];
    }
    StandardBasis {
        leads: kept.iter().map(|g| g.lead.clone()).collect(),
        generators: kept.into_iter().map(|g| g.poly).collect(),
        order: *order,
    }
}
