use std::fmt;

use serde::{Serialize, Serializer};

use super::mora::{standard_basis, Limits, StandardBasis};
use super::order::LocalOrder;
use crate::algebra::{ExponentVector, Poly};
use crate::error::{Error, Result};

/// Dimension of the local algebra `𝒪_n / (∂f/∂z₁, …, ∂f/∂z_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilnorNumber {
    Finite(usize),
    Infinite,
}

impl MilnorNumber {
    pub fn finite(self) -> Option<usize> {
        match self {
            MilnorNumber::Finite(m) => Some(m),
            MilnorNumber::Infinite => None,
        }
    }
}

impl fmt::Display for MilnorNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MilnorNumber::Finite(m) => write!(f, "{m}"),
            MilnorNumber::Infinite => write!(f, "INFINITE"),
        }
    }
}

impl Serialize for MilnorNumber {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            MilnorNumber::Finite(m) => s.serialize_u64(*m as u64),
            MilnorNumber::Infinite => s.serialize_str("INFINITE"),
        }
    }
}

/// Monomial basis of the local algebra of a germ.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalAlgebraBasis {
    pub monomials: Vec<ExponentVector>,
    pub mu: usize,
}

fn require_vanishing(f: &Poly) -> Result<()> {
    if f.constant_term() != Default::default() {
        return Err(Error::NotInMaximalIdeal);
    }
    Ok(())
}

/// Standard basis of the Jacobian ideal, or `None` when every partial
/// derivative vanishes (the zero germ).
pub fn jacobian_standard_basis(f: &Poly, limits: Limits) -> Result<Option<StandardBasis>> {
    let gens: Vec<Poly> = f.gradient().into_iter().filter(|p| !p.is_zero()).collect();
    if gens.is_empty() {
        return Ok(None);
    }
    standard_basis(&gens, &LocalOrder::new(f.nvars()), limits).map(Some)
}

pub fn milnor_number(f: &Poly, limits: Limits) -> Result<MilnorNumber> {
    require_vanishing(f)?;
    let Some(sb) = jacobian_standard_basis(f, limits)? else {
        return Ok(MilnorNumber::Infinite);
    };
    Ok(match sb.standard_monomials() {
        Some(m) => MilnorNumber::Finite(m.len()),
        None => MilnorNumber::Infinite,
    })
}

/// Standard monomials of the Jacobian ideal under [`LocalOrder`], largest
/// (that is, `1`) first.
pub fn local_algebra_basis(f: &Poly, limits: Limits) -> Result<LocalAlgebraBasis> {
    require_vanishing(f)?;
    let monomials = jacobian_standard_basis(f, limits)?
        .and_then(|sb| sb.standard_monomials())
        .ok_or(Error::NonIsolated)?;
    Ok(LocalAlgebraBasis {
        mu: monomials.len(),
        monomials,
    })
}

pub fn is_isolated_singularity(f: &Poly, limits: Limits) -> Result<bool> {
    Ok(milnor_number(f, limits)? != MilnorNumber::Infinite)
}

/// Dimension of `𝒪_n / ⟨gens⟩`; `None` when infinite. The zero ideal
/// counts as infinite in positive dimension.
pub fn quotient_dimension(gens: &[Poly], nvars: usize, limits: Limits) -> Result<Option<usize>> {
    let nonzero: Vec<Poly> = gens.iter().filter(|p| !p.is_zero()).cloned().collect();
    if nonzero.is_empty() {
        return Ok(if nvars == 0 { Some(1) } else { None });
    }
    let sb = standard_basis(&nonzero, &LocalOrder::new(nvars), limits)?;
    Ok(sb.standard_monomials().map(|m| m.len()))
}
