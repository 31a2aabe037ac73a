//! Two-dimensional evolution algebras and natural-basis changes.
//!
//! The structure matrix stores the coordinates of e1^2 in row 1 and of
//! e2^2 in row 2; distinct natural basis vectors multiply to zero. An
//! algebra is perfect when the structure determinant is a unit and
//! quasiperfect when it is nonzero. Quasiperfection is the hypothesis
//! under which natural bases are rigid (unique up to permutation and unit
//! scaling), so the invariant and basis-recognition routines guard on it.

use crate::ring::{DomainHandle, RingElem, RingError};
use thiserror::Error;

/// Errors raised by algebra-level operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error("structure matrix determinant is zero")]
    NotQuasiperfect,
    #[error("structure matrix determinant is not a unit")]
    NotPerfect,
}

/// Permutation of the two basis positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Perm {
    Id,
    Swap,
}

impl Perm {
    pub fn apply(self, i: usize) -> usize {
        match self {
            Perm::Id => i,
            Perm::Swap => 1 - i,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Perm::Id => "id",
            Perm::Swap => "swap",
        }
    }
}

/// Natural-basis change f_i = k_i * e_{perm(i)} with unit scalars k_i.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisChange {
    pub perm: Perm,
    pub units: [RingElem; 2],
}

impl BasisChange {
    /// The change mapping the transformed matrix back to the original.
    /// Both permutations here are involutions, so the inverse reuses the
    /// permutation and inverts the scalars in permuted order.
    pub fn inverse(&self) -> Result<BasisChange, RingError> {
        let m0 = self.units[self.perm.apply(0)].inv_unit()?;
        let m1 = self.units[self.perm.apply(1)].inv_unit()?;
        Ok(BasisChange { perm: self.perm, units: [m0, m1] })
    }
}

/// Basis-independent entry counts of a quasiperfect structure matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InvariantCounts {
    pub nonzero_total: u8,
    pub nonzero_diag: u8,
    pub unit_total: u8,
    pub unit_diag: u8,
}

/// Evolution algebra of rank 2 with a fixed natural basis.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct EvolutionAlgebra {
    domain: DomainHandle,
    omega: [[RingElem; 2]; 2],
}

impl EvolutionAlgebra {
    /// Wraps a structure matrix; every entry must come from `domain`.
    pub fn new(domain: DomainHandle, omega: [[RingElem; 2]; 2]) -> Result<Self, AlgebraError> {
        for row in &omega {
            for entry in row {
                if *entry.domain() != domain {
                    return Err(AlgebraError::Ring(RingError::DomainMismatch {
                        left: domain.descriptor(),
                        right: entry.domain().descriptor(),
                    }));
                }
            }
        }
        Ok(EvolutionAlgebra { domain, omega })
    }

    /// Integer-seeded structure matrix, mapped into `domain`.
    pub fn from_int_matrix(domain: &DomainHandle, m: [[i64; 2]; 2]) -> Self {
        let row = |r: [i64; 2]| [domain.from_i64(r[0]), domain.from_i64(r[1])];
        EvolutionAlgebra { domain: domain.clone(), omega: [row(m[0]), row(m[1])] }
    }

    pub fn domain(&self) -> &DomainHandle {
        &self.domain
    }

    pub fn matrix(&self) -> &[[RingElem; 2]; 2] {
        &self.omega
    }

    pub fn entry(&self, i: usize, q: usize) -> &RingElem {
        &self.omega[i][q]
    }

    pub fn det(&self) -> RingElem {
        let ad = self.omega[0][0].mul(&self.omega[1][1]).expect("same domain");
        let bc = self.omega[0][1].mul(&self.omega[1][0]).expect("same domain");
        ad.sub(&bc).expect("same domain")
    }

    pub fn is_perfect(&self) -> bool {
        self.det().is_unit()
    }

    pub fn is_quasiperfect(&self) -> bool {
        !self.det().is_zero()
    }

    /// Product of two elements given by natural-basis coordinates. Cross
    /// terms vanish, so the result is u1*v1 times row 1 plus u2*v2 times
    /// row 2.
    pub fn multiply(
        &self,
        u: &[RingElem; 2],
        v: &[RingElem; 2],
    ) -> Result<[RingElem; 2], AlgebraError> {
        let s = u[0].mul(&v[0])?;
        let t = u[1].mul(&v[1])?;
        let coord = |q: usize| -> Result<RingElem, RingError> {
            s.mul(&self.omega[0][q])?.add(&t.mul(&self.omega[1][q])?)
        };
        Ok([coord(0)?, coord(1)?])
    }

    /// Structure matrix in the basis f_i = k_i e_{perm(i)}:
    /// tau[i][q] = k_i^2 * k_q^{-1} * omega[perm(i)][perm(q)]. Scalars
    /// must be units; inversion never falls back to exact division.
    pub fn apply_basis_change(&self, change: &BasisChange) -> Result<Self, AlgebraError> {
        let inv = [change.units[0].inv_unit()?, change.units[1].inv_unit()?];
        let mut rows = Vec::with_capacity(2);
        for i in 0..2 {
            let ki2 = change.units[i].pow_u(2);
            let mut row = Vec::with_capacity(2);
            for q in 0..2 {
                let src = &self.omega[change.perm.apply(i)][change.perm.apply(q)];
                row.push(ki2.mul(&inv[q])?.mul(src)?);
            }
            let [a, b]: [RingElem; 2] = row.try_into().expect("two entries");
            rows.push([a, b]);
        }
        let [r0, r1]: [[RingElem; 2]; 2] = rows.try_into().expect("two rows");
        Ok(EvolutionAlgebra { domain: self.domain.clone(), omega: [r0, r1] })
    }

    /// Nonzero and unit counts of the structure matrix; these do not
    /// depend on the chosen natural basis when the algebra is
    /// quasiperfect.
    pub fn invariant_counts(&self) -> Result<InvariantCounts, AlgebraError> {
        if !self.is_quasiperfect() {
            return Err(AlgebraError::NotQuasiperfect);
        }
        let mut counts = InvariantCounts {
            nonzero_total: 0,
            nonzero_diag: 0,
            unit_total: 0,
            unit_diag: 0,
        };
        for i in 0..2 {
            for q in 0..2 {
                let entry = &self.omega[i][q];
                if !entry.is_zero() {
                    counts.nonzero_total += 1;
                    if i == q {
                        counts.nonzero_diag += 1;
                    }
                }
                if entry.is_unit() {
                    counts.unit_total += 1;
                    if i == q {
                        counts.unit_diag += 1;
                    }
                }
            }
        }
        Ok(counts)
    }

    /// Whether the two coordinate rows span the module and multiply to
    /// zero, i.e. form a natural basis. Requires quasiperfection, the
    /// hypothesis under which natural bases are rigid.
    pub fn is_natural_basis(&self, rows: &[[RingElem; 2]; 2]) -> Result<bool, AlgebraError> {
        if !self.is_quasiperfect() {
            return Err(AlgebraError::NotQuasiperfect);
        }
        let ad = rows[0][0].mul(&rows[1][1])?;
        let bc = rows[0][1].mul(&rows[1][0])?;
        if !ad.sub(&bc)?.is_unit() {
            return Ok(false);
        }
        let product = self.multiply(&rows[0], &rows[1])?;
        Ok(product[0].is_zero() && product[1].is_zero())
    }
}
