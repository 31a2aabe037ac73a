//! Parameter spaces, curve membership, and orbit enumeration.
//!
//! Each multi-parameter family carries a unit-group action on its
//! parameter tuple; the orbit of a tuple under that action is exactly the
//! set of parameter tuples describing the same algebra in the same normal
//! form. The curves and the surface bundled here cut out supersets of
//! those orbits inside the ambient parameter space, so membership is a
//! necessary condition for isomorphism, checked exactly.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::classify::{CanonicalClass, Family, Verdict};
use crate::ring::{Capability, RingElem, RingError};

/// Errors produced by parameter-space and orbit operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error(transparent)]
    Ring(#[from] RingError),
    /// The tuple length does not match the space or curve arity.
    #[error("expected {expected} coordinates, got {got}")]
    ArityMismatch { expected: usize, got: usize },
}

/// Ambient parameter spaces for the multi-parameter families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ParamSpace {
    /// Pairs (λ, μ): λ a unit, μ a nonzero nonunit.
    X0,
    /// Pairs (ξ, ρ) of nonzero nonunits with ξρ−1 a unit.
    Omega2,
    /// Triples (ξ, ν, ρ) of nonzero nonunits with ρ−ξν a unit.
    Omega3,
    /// Triples (μ, λ, ω) of nonzero nonunits with μω−λ a unit.
    Sigma3,
    /// Triples (μ, λ, ω): μ, ω nonzero nonunits, λ a unit that is not a
    /// cube of a unit, μω−λ a unit.
    SetS,
    /// Quadruples (α, β, γ, δ) of nonzero nonunits with αδ−γβ a unit.
    Omega4,
}

impl ParamSpace {
    pub fn arity(self) -> usize {
        match self {
            ParamSpace::X0 | ParamSpace::Omega2 => 2,
            ParamSpace::Omega3 | ParamSpace::Sigma3 | ParamSpace::SetS => 3,
            ParamSpace::Omega4 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ParamSpace::X0 => "X0",
            ParamSpace::Omega2 => "Omega2",
            ParamSpace::Omega3 => "Omega3",
            ParamSpace::Sigma3 => "Sigma3",
            ParamSpace::SetS => "SetS",
            ParamSpace::Omega4 => "Omega4",
        }
    }
}

fn require_arity(expected: usize, got: usize) -> Result<(), ModuliError> {
    if expected == got {
        Ok(())
    } else {
        Err(ModuliError::ArityMismatch { expected, got })
    }
}

fn require_same_domain(elems: &[&RingElem]) -> Result<(), ModuliError> {
    for pair in elems.windows(2) {
        if pair[0].domain() != pair[1].domain() {
            return Err(RingError::DomainMismatch {
                left: pair[0].domain().to_string(),
                right: pair[1].domain().to_string(),
            }
            .into());
        }
    }
    Ok(())
}

fn nonzero_nonunit(e: &RingElem) -> bool {
    !e.is_zero() && !e.is_unit()
}

/// Exact membership test for a tuple in a parameter space.
pub fn in_space(space: ParamSpace, tuple: &[RingElem]) -> Result<bool, ModuliError> {
    require_arity(space.arity(), tuple.len())?;
    let refs: Vec<&RingElem> = tuple.iter().collect();
    require_same_domain(&refs)?;
    let one = tuple[0].domain().one();
    Ok(match space {
        ParamSpace::X0 => tuple[0].is_unit() && nonzero_nonunit(&tuple[1]),
        ParamSpace::Omega2 => {
            tuple.iter().all(nonzero_nonunit)
                && tuple[0].mul(&tuple[1])?.sub(&one)?.is_unit()
        }
        ParamSpace::Omega3 => {
            tuple.iter().all(nonzero_nonunit)
                && tuple[2].sub(&tuple[0].mul(&tuple[1])?)?.is_unit()
        }
        ParamSpace::Sigma3 => {
            tuple.iter().all(nonzero_nonunit)
                && tuple[0].mul(&tuple[2])?.sub(&tuple[1])?.is_unit()
        }
        ParamSpace::SetS => {
            nonzero_nonunit(&tuple[0])
                && nonzero_nonunit(&tuple[2])
                && tuple[1].is_unit()
                && tuple[1].solve_unit_power(3)?.is_empty()
                && tuple[0].mul(&tuple[2])?.sub(&tuple[1])?.is_unit()
        }
        ParamSpace::Omega4 => {
            tuple.iter().all(nonzero_nonunit)
                && tuple[0]
                    .mul(&tuple[3])?
                    .sub(&tuple[2].mul(&tuple[1])?)?
                    .is_unit()
        }
    })
}

/// Curves (and one surface) whose sections carry the isomorphism classes
/// of the curve-tagged families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Curve {
    /// Base (λ, μ), point (x, y): μ³x² = λ²y³.
    C,
    /// Base (ξ, ν, ρ), point (x, y, z): xz = ξρ and ρ²y = νz².
    Del,
    /// Base (μ, λ, ω), point (x, y, z): μ³y = x³λ and μ²z = x²ω.
    Sigma,
    /// Base (ξ, ρ), point (x, y): xy = ξρ.
    H,
    /// Base (α, β, γ, δ), point (x, y, z, t): ytα² = βδx² and zxδ² = αγt².
    OmegaSurf,
}

impl Curve {
    pub fn arity(self) -> usize {
        match self {
            Curve::C | Curve::H => 2,
            Curve::Del | Curve::Sigma => 3,
            Curve::OmegaSurf => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Curve::C => "c",
            Curve::Del => "∂",
            Curve::Sigma => "σ",
            Curve::H => "h",
            Curve::OmegaSurf => "ω",
        }
    }
}

/// The curve whose sections classify a family's orbits, when one exists.
pub fn family_curve(family: Family) -> Option<Curve> {
    match family {
        Family::A4b => Some(Curve::C),
        Family::B5I_iv | Family::B5I_v => Some(Curve::Del),
        Family::B5II_a | Family::B5II_c => Some(Curve::Sigma),
        Family::B5II_b => Some(Curve::H),
        Family::B5III => Some(Curve::OmegaSurf),
        _ => None,
    }
}

/// Exact test of the curve's defining identities at a point.
pub fn curve_member(
    curve: Curve,
    base: &[RingElem],
    point: &[RingElem],
) -> Result<bool, ModuliError> {
    require_arity(curve.arity(), base.len())?;
    require_arity(curve.arity(), point.len())?;
    let refs: Vec<&RingElem> = base.iter().chain(point.iter()).collect();
    require_same_domain(&refs)?;
    Ok(match curve {
        Curve::C => {
            let (lam, mu) = (&base[0], &base[1]);
            let (x, y) = (&point[0], &point[1]);
            mu.pow_u(3).mul(&x.pow_u(2))? == lam.pow_u(2).mul(&y.pow_u(3))?
        }
        Curve::Del => {
            let (xi, nu, rho) = (&base[0], &base[1], &base[2]);
            let (x, y, z) = (&point[0], &point[1], &point[2]);
            x.mul(z)? == xi.mul(rho)?
                && rho.pow_u(2).mul(y)? == nu.mul(&z.pow_u(2))?
        }
        Curve::Sigma => {
            let (mu, lam, om) = (&base[0], &base[1], &base[2]);
            let (x, y, z) = (&point[0], &point[1], &point[2]);
            mu.pow_u(3).mul(y)? == x.pow_u(3).mul(lam)?
                && mu.pow_u(2).mul(z)? == x.pow_u(2).mul(om)?
        }
        Curve::H => {
            let (xi, rho) = (&base[0], &base[1]);
            let (x, y) = (&point[0], &point[1]);
            x.mul(y)? == xi.mul(rho)?
        }
        Curve::OmegaSurf => {
            let (al, be, ga, de) = (&base[0], &base[1], &base[2], &base[3]);
            let (x, y, z, t) = (&point[0], &point[1], &point[2], &point[3]);
            y.mul(t)?.mul(&al.pow_u(2))? == be.mul(de)?.mul(&x.pow_u(2))?
                && z.mul(x)?.mul(&de.pow_u(2))? == al.mul(ga)?.mul(&t.pow_u(2))?
        }
    })
}

/// Whether μ = λr³ or μ = λ²r³ for some unit r; this is equality in the
/// direct limit of D^×/(D^×)³ under squaring, the moduli set of the
/// antidiagonal family.
pub fn lim2mod3_equal(lambda: &RingElem, mu: &RingElem) -> Result<Verdict, ModuliError> {
    if !lambda.is_unit() || !mu.is_unit() {
        return Err(RingError::NotAUnit.into());
    }
    let inv = lambda.inv_unit()?;
    let first = mu.mul(&inv)?;
    let second = first.mul(&inv)?;
    let mut unknown = false;
    for target in [first, second] {
        match target.solve_unit_power(3) {
            Ok(roots) => {
                if !roots.is_empty() {
                    return Ok(Verdict::Yes);
                }
            }
            Err(RingError::Unsupported(_)) => unknown = true,
            Err(e) => return Err(e.into()),
        }
    }
    Ok(if unknown { Verdict::Unknown } else { Verdict::No })
}

/// Whether βα⁻¹ or βα⁻² is a cube of a unit: the isomorphism condition
/// for the antidiagonal family with parameters α and β. Same test as
/// [`lim2mod3_equal`].
pub fn cube_class_test(alpha: &RingElem, beta: &RingElem) -> Result<Verdict, ModuliError> {
    lim2mod3_equal(alpha, beta)
}

/// Full orbit of the class parameters under the family's unit-group
/// action. Requires a finite unit group; orbit elements are re-wrapped as
/// classes without re-normalization, so the seed's own tuple always
/// appears verbatim.
pub fn orbit(class: &CanonicalClass) -> Result<BTreeSet<CanonicalClass>, ModuliError> {
    let domain = &class.domain;
    if !domain.has(Capability::FiniteUnits) {
        return Err(RingError::Unsupported(format!(
            "orbit enumeration needs a finite unit group; domain is {domain}"
        ))
        .into());
    }
    let units = domain.enumerate_units()?;
    let vals = class.values();
    let mut tuples: BTreeSet<Vec<RingElem>> = BTreeSet::new();
    match class.family {
        // Trivial residual action: the parameters are rigid.
        Family::A1 | Family::A3 | Family::A4a | Family::B5I_ii | Family::B5I_iii => {
            tuples.insert(vals.clone());
        }
        // k · α = k³α.
        Family::A2 => {
            for k in &units {
                tuples.insert(vec![k.pow_u(3).mul(&vals[0])?]);
            }
        }
        // k · (λ, μ) = (k³λ, k²μ).
        Family::A4b => {
            for k in &units {
                tuples.insert(vec![k.pow_u(3).mul(&vals[0])?, k.pow_u(2).mul(&vals[1])?]);
            }
        }
        // Trivial unit action; the residual symmetry is the basis swap,
        // which exchanges the two parameters.
        Family::B5I_i => {
            tuples.insert(vals.clone());
            tuples.insert(vec![vals[1].clone(), vals[0].clone()]);
        }
        // k · (ξ, ν, ρ) = (k⁻¹ξ, k²ν, kρ).
        Family::B5I_iv | Family::B5I_v => {
            for k in &units {
                tuples.insert(vec![
                    k.inv_unit()?.mul(&vals[0])?,
                    k.pow_u(2).mul(&vals[1])?,
                    k.mul(&vals[2])?,
                ]);
            }
        }
        // k · (μ, λ, ω) = (kμ, k³λ, k²ω).
        Family::B5II_a | Family::B5II_c => {
            for k in &units {
                tuples.insert(vec![
                    k.mul(&vals[0])?,
                    k.pow_u(3).mul(&vals[1])?,
                    k.pow_u(2).mul(&vals[2])?,
                ]);
            }
        }
        // k · (ξ, ρ) = (kξ, k⁻¹ρ) for k with k³ = 1.
        Family::B5II_b => {
            for k in &units {
                if k.pow_u(3).is_one() {
                    tuples.insert(vec![k.mul(&vals[0])?, k.inv_unit()?.mul(&vals[1])?]);
                }
            }
        }
        // (k₁, k₂) · (α, β, γ, δ) = (k₁α, k₁²k₂⁻¹β, k₂²k₁⁻¹γ, k₂δ).
        Family::B5III => {
            for k1 in &units {
                for k2 in &units {
                    let k1_inv = k1.inv_unit()?;
                    let k2_inv = k2.inv_unit()?;
                    tuples.insert(vec![
                        k1.mul(&vals[0])?,
                        k1.pow_u(2).mul(&k2_inv)?.mul(&vals[1])?,
                        k2.pow_u(2).mul(&k1_inv)?.mul(&vals[2])?,
                        k2.mul(&vals[3])?,
                    ]);
                }
            }
        }
    }
    Ok(tuples
        .into_iter()
        .map(|t| CanonicalClass::from_params(domain.clone(), class.family, t, None))
        .collect())
}
