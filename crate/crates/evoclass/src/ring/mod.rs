//! Integral domains with exact arithmetic.
//!
//! Five concrete domains are provided: the integers, the rationals, prime
//! fields, univariate polynomials over the rationals or a prime field, and
//! integer Laurent polynomials. Values are immutable and every operation is
//! a pure function, so concurrent use needs no synchronization.

mod parse;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Errors produced by domain and element operations.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RingError {
    /// Two operands belong to different domains.
    #[error("domain mismatch: {left} vs {right}")]
    DomainMismatch { left: String, right: String },
    /// The divisor does not divide the dividend exactly.
    #[error("not divisible")]
    NotDivisible,
    /// Division by the zero element.
    #[error("division by zero")]
    DivisionByZero,
    /// The element has no multiplicative inverse in its domain.
    #[error("not a unit")]
    NotAUnit,
    /// The domain lacks a complete procedure for the requested operation.
    #[error("unsupported for {0}")]
    Unsupported(String),
    /// Malformed element or descriptor text.
    #[error("parse error at position {position}: expected {expected}")]
    Parse { position: usize, expected: String },
}

/// Coefficient field sitting under a polynomial domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyBase {
    Rationals,
    PrimeField(u64),
}

/// The concrete ring a handle stands for.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DomainKind {
    Integers,
    Rationals,
    PrimeField(u64),
    Poly { base: PolyBase, var: String },
    LaurentInt { var: String },
}

/// What a domain can do beyond plain arithmetic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capability {
    /// The unit group is finite and can be listed in full.
    FiniteUnits,
    /// `solve_unit_power` is complete for exponents 1, 2 and 3.
    UnitPowerSolver,
    /// `solve_unit_power` is complete for every positive exponent.
    UnitRootExtraction,
}

/// Handle to an integral domain.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DomainHandle {
    kind: DomainKind,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

fn check_var(var: &str) -> Result<(), RingError> {
    let mut chars = var.chars();
    let ok = match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => chars.all(|c| c.is_ascii_alphanumeric()),
        _ => false,
    };
    if ok {
        Ok(())
    } else {
        Err(RingError::Parse {
            position: 0,
            expected: "variable symbol (letter, then letters or digits)".into(),
        })
    }
}

impl DomainHandle {
    pub fn integers() -> Self {
        DomainHandle { kind: DomainKind::Integers }
    }

    pub fn rationals() -> Self {
        DomainHandle { kind: DomainKind::Rationals }
    }

    /// Prime field of the given order; rejects composites, so the handle
    /// always stands for an integral domain.
    pub fn prime_field(p: u64) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::Parse {
                position: 0,
                expected: format!("prime modulus, got {p}"),
            });
        }
        Ok(DomainHandle { kind: DomainKind::PrimeField(p) })
    }

    pub fn poly_q(var: &str) -> Result<Self, RingError> {
        check_var(var)?;
        Ok(DomainHandle {
            kind: DomainKind::Poly { base: PolyBase::Rationals, var: var.to_string() },
        })
    }

    pub fn poly_fp(p: u64, var: &str) -> Result<Self, RingError> {
        if !is_prime(p) {
            return Err(RingError::Parse {
                position: 0,
                expected: format!("prime modulus, got {p}"),
            });
        }
        check_var(var)?;
        Ok(DomainHandle {
            kind: DomainKind::Poly { base: PolyBase::PrimeField(p), var: var.to_string() },
        })
    }

    pub fn laurent_int(var: &str) -> Result<Self, RingError> {
        check_var(var)?;
        Ok(DomainHandle { kind: DomainKind::LaurentInt { var: var.to_string() } })
    }

    pub fn kind(&self) -> &DomainKind {
        &self.kind
    }

    /// Capability set of the domain. FiniteUnits holds exactly for the
    /// integers (units are 1 and -1) and for prime fields.
    pub fn capabilities(&self) -> Vec<Capability> {
        let mut caps = vec![Capability::UnitPowerSolver, Capability::UnitRootExtraction];
        if self.has(Capability::FiniteUnits) {
            caps.push(Capability::FiniteUnits);
        }
        caps
    }

    pub fn has(&self, cap: Capability) -> bool {
        match cap {
            Capability::FiniteUnits => {
                matches!(self.kind, DomainKind::Integers | DomainKind::PrimeField(_))
            }
            Capability::UnitPowerSolver | Capability::UnitRootExtraction => true,
        }
    }

    /// Complete list of units, smallest handles first; only available under
    /// the FiniteUnits capability.
    pub fn enumerate_units(&self) -> Result<Vec<RingElem>, RingError> {
        match self.kind {
            DomainKind::Integers => Ok(vec![self.from_i64(1), self.from_i64(-1)]),
            DomainKind::PrimeField(p) => Ok((1..p)
                .map(|r| RingElem { domain: self.clone(), payload: Payload::ModP(r) })
                .collect()),
            _ => Err(RingError::Unsupported(format!(
                "{self}: infinite unit group cannot be enumerated"
            ))),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_i64(0)
    }

    pub fn one(&self) -> RingElem {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> RingElem {
        self.from_bigint(BigInt::from(n))
    }

    /// Canonical image of an integer in the domain.
    pub fn from_bigint(&self, n: BigInt) -> RingElem {
        let payload = match &self.kind {
            DomainKind::Integers => Payload::Int(n),
            DomainKind::Rationals => Payload::Rat(BigRational::from_integer(n)),
            DomainKind::PrimeField(p) => Payload::ModP(reduce_mod(&n, *p)),
            DomainKind::Poly { base: PolyBase::Rationals, .. } => {
                if n.is_zero() {
                    Payload::PolyRat(vec![])
                } else {
                    Payload::PolyRat(vec![BigRational::from_integer(n)])
                }
            }
            DomainKind::Poly { base: PolyBase::PrimeField(p), .. } => {
                let r = reduce_mod(&n, *p);
                if r == 0 {
                    Payload::PolyMod(vec![])
                } else {
                    Payload::PolyMod(vec![r])
                }
            }
            DomainKind::LaurentInt { .. } => {
                if n.is_zero() {
                    Payload::Laurent { offset: 0, coeffs: vec![] }
                } else {
                    Payload::Laurent { offset: 0, coeffs: vec![n] }
                }
            }
        };
        RingElem { domain: self.clone(), payload }
    }
}

impl std::fmt::Display for DomainHandle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.descriptor())
    }
}

fn reduce_mod(n: &BigInt, p: u64) -> u64 {
    let m = n.mod_floor(&BigInt::from(p));
    m.to_u64().expect("residue fits in u64")
}

/// Exact value of a ring element; the variant matches the domain kind.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) enum Payload {
    Int(BigInt),
    /// Reduced fraction with positive denominator.
    Rat(BigRational),
    /// Residue in 0..p.
    ModP(u64),
    /// Dense coefficients ascending by degree, nonzero leading coefficient;
    /// the zero polynomial is the empty sequence.
    PolyRat(Vec<BigRational>),
    PolyMod(Vec<u64>),
    /// offset exponent plus dense coefficients; first and last are nonzero
    /// unless the element is zero (empty sequence, offset 0).
    Laurent { offset: i64, coeffs: Vec<BigInt> },
}

/// Element of an integral domain, tagged with its domain handle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RingElem {
    pub(crate) domain: DomainHandle,
    pub(crate) payload: Payload,
}

fn trim_rat(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn trim_mod(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn normalize_laurent(mut offset: i64, mut coeffs: Vec<BigInt>) -> Payload {
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    let lead_zeros = coeffs.iter().take_while(|c| c.is_zero()).count();
    if lead_zeros > 0 {
        coeffs.drain(..lead_zeros);
        offset += lead_zeros as i64;
    }
    if coeffs.is_empty() {
        offset = 0;
    }
    Payload::Laurent { offset, coeffs }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Long division in Q[x]; divisor must be nonzero. Returns (quotient,
/// remainder) with deg(remainder) < deg(divisor).
fn polyrat_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = &rem[da] / &b[db];
        for i in 0..=db {
            let t = &c * &b[i];
            rem[da - db + i] -= t;
        }
        quot[da - db] = c;
        rem = trim_rat(rem);
        if rem.len() <= db {
            break;
        }
    }
    (quot, rem)
}

fn polymod_divrem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let db = b.len() - 1;
    let mut rem = a.to_vec();
    if rem.len() < b.len() {
        return (vec![], rem);
    }
    let lead_inv = inv_mod(b[db], p);
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = mul_mod(rem[da], lead_inv, p);
        for i in 0..=db {
            let t = mul_mod(c, b[i], p);
            rem[da - db + i] = (rem[da - db + i] + p - t) % p;
        }
        quot[da - db] = c;
        rem = trim_mod(rem);
        if rem.len() <= db {
            break;
        }
    }
    (quot, rem)
}

fn same_domain<'a>(a: &'a RingElem, b: &'a RingElem) -> Result<(), RingError> {
    if a.domain == b.domain {
        Ok(())
    } else {
        Err(RingError::DomainMismatch {
            left: a.domain.descriptor(),
            right: b.domain.descriptor(),
        })
    }
}

impl RingElem {
    pub fn domain(&self) -> &DomainHandle {
        &self.domain
    }

    pub fn is_zero(&self) -> bool {
        match &self.payload {
            Payload::Int(n) => n.is_zero(),
            Payload::Rat(r) => r.is_zero(),
            Payload::ModP(r) => *r == 0,
            Payload::PolyRat(v) => v.is_empty(),
            Payload::PolyMod(v) => v.is_empty(),
            Payload::Laurent { coeffs, .. } => coeffs.is_empty(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.domain.one()
    }

    /// True iff the element divides 1. Nonzero elements of a field are all
    /// units; polynomial units are the nonzero constants; Laurent units are
    /// the monomials with coefficient 1 or -1.
    pub fn is_unit(&self) -> bool {
        match &self.payload {
            Payload::Int(n) => n.magnitude().is_one(),
            Payload::Rat(r) => !r.is_zero(),
            Payload::ModP(r) => *r != 0,
            Payload::PolyRat(v) => v.len() == 1,
            Payload::PolyMod(v) => v.len() == 1,
            Payload::Laurent { coeffs, .. } => {
                coeffs.len() == 1 && coeffs[0].magnitude().is_one()
            }
        }
    }

    pub fn add(&self, other: &RingElem) -> Result<RingElem, RingError> {
        same_domain(self, other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a + b),
            (Payload::Rat(a), Payload::Rat(b)) => Payload::Rat(a + b),
            (Payload::ModP(a), Payload::ModP(b)) => {
                let p = self.modulus();
                Payload::ModP((a + b) % p)
            }
            (Payload::PolyRat(a), Payload::PolyRat(b)) => {
                let n = a.len().max(b.len());
                let mut v = vec![BigRational::zero(); n];
                for (i, c) in a.iter().enumerate() {
                    v[i] += c;
                }
                for (i, c) in b.iter().enumerate() {
                    v[i] += c;
                }
                Payload::PolyRat(trim_rat(v))
            }
            (Payload::PolyMod(a), Payload::PolyMod(b)) => {
                let p = self.modulus();
                let n = a.len().max(b.len());
                let mut v = vec![0u64; n];
                for (i, c) in a.iter().enumerate() {
                    v[i] = (v[i] + c) % p;
                }
                for (i, c) in b.iter().enumerate() {
                    v[i] = (v[i] + c) % p;
                }
                Payload::PolyMod(trim_mod(v))
            }
            (
                Payload::Laurent { offset: oa, coeffs: ca },
                Payload::Laurent { offset: ob, coeffs: cb },
            ) => {
                if ca.is_empty() {
                    Payload::Laurent { offset: *ob, coeffs: cb.clone() }
                } else if cb.is_empty() {
                    Payload::Laurent { offset: *oa, coeffs: ca.clone() }
                } else {
                    let lo = (*oa).min(*ob);
                    let hi = (oa + ca.len() as i64).max(ob + cb.len() as i64);
                    let mut v = vec![BigInt::zero(); (hi - lo) as usize];
                    for (i, c) in ca.iter().enumerate() {
                        v[(oa - lo) as usize + i] += c;
                    }
                    for (i, c) in cb.iter().enumerate() {
                        v[(ob - lo) as usize + i] += c;
                    }
                    normalize_laurent(lo, v)
                }
            }
            _ => unreachable!("payload variant always matches domain kind"),
        };
        Ok(RingElem { domain: self.domain.clone(), payload })
    }

    pub fn neg(&self) -> RingElem {
        let payload = match &self.payload {
            Payload::Int(n) => Payload::Int(-n),
            Payload::Rat(r) => Payload::Rat(-r),
            Payload::ModP(r) => {
                let p = self.modulus();
                Payload::ModP(if *r == 0 { 0 } else { p - r })
            }
            Payload::PolyRat(v) => Payload::PolyRat(v.iter().map(|c| -c).collect()),
            Payload::PolyMod(v) => {
                let p = self.modulus();
                Payload::PolyMod(v.iter().map(|c| if *c == 0 { 0 } else { p - c }).collect())
            }
            Payload::Laurent { offset, coeffs } => Payload::Laurent {
                offset: *offset,
                coeffs: coeffs.iter().map(|c| -c).collect(),
            },
        };
        RingElem { domain: self.domain.clone(), payload }
    }

    pub fn sub(&self, other: &RingElem) -> Result<RingElem, RingError> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RingElem) -> Result<RingElem, RingError> {
        same_domain(self, other)?;
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => Payload::Int(a * b),
            (Payload::Rat(a), Payload::Rat(b)) => Payload::Rat(a * b),
            (Payload::ModP(a), Payload::ModP(b)) => Payload::ModP(mul_mod(*a, *b, self.modulus())),
            (Payload::PolyRat(a), Payload::PolyRat(b)) => {
                if a.is_empty() || b.is_empty() {
                    Payload::PolyRat(vec![])
                } else {
                    let mut v = vec![BigRational::zero(); a.len() + b.len() - 1];
                    for (i, ca) in a.iter().enumerate() {
                        for (j, cb) in b.iter().enumerate() {
                            v[i + j] += ca * cb;
                        }
                    }
                    Payload::PolyRat(trim_rat(v))
                }
            }
            (Payload::PolyMod(a), Payload::PolyMod(b)) => {
                if a.is_empty() || b.is_empty() {
                    Payload::PolyMod(vec![])
                } else {
                    let p = self.modulus();
                    let mut v = vec![0u64; a.len() + b.len() - 1];
                    for (i, ca) in a.iter().enumerate() {
                        for (j, cb) in b.iter().enumerate() {
                            v[i + j] = (v[i + j] + mul_mod(*ca, *cb, p)) % p;
                        }
                    }
                    Payload::PolyMod(trim_mod(v))
                }
            }
            (
                Payload::Laurent { offset: oa, coeffs: ca },
                Payload::Laurent { offset: ob, coeffs: cb },
            ) => {
                if ca.is_empty() || cb.is_empty() {
                    Payload::Laurent { offset: 0, coeffs: vec![] }
                } else {
                    let mut v = vec![BigInt::zero(); ca.len() + cb.len() - 1];
                    for (i, x) in ca.iter().enumerate() {
                        for (j, y) in cb.iter().enumerate() {
                            v[i + j] += x * y;
                        }
                    }
                    normalize_laurent(oa + ob, v)
                }
            }
            _ => unreachable!("payload variant always matches domain kind"),
        };
        Ok(RingElem { domain: self.domain.clone(), payload })
    }

    /// Repeated-multiplication power for small exponents.
    pub fn pow_u(&self, n: u32) -> RingElem {
        let mut acc = self.domain.one();
        for _ in 0..n {
            acc = acc.mul(self).expect("same domain");
        }
        acc
    }

    /// Exact quotient self / other when other divides self.
    pub fn exact_div(&self, other: &RingElem) -> Result<RingElem, RingError> {
        same_domain(self, other)?;
        if other.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let payload = match (&self.payload, &other.payload) {
            (Payload::Int(a), Payload::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if !r.is_zero() {
                    return Err(RingError::NotDivisible);
                }
                Payload::Int(q)
            }
            (Payload::Rat(a), Payload::Rat(b)) => Payload::Rat(a / b),
            (Payload::ModP(a), Payload::ModP(b)) => {
                let p = self.modulus();
                Payload::ModP(mul_mod(*a, inv_mod(*b, p), p))
            }
            (Payload::PolyRat(a), Payload::PolyRat(b)) => {
                if a.is_empty() {
                    Payload::PolyRat(vec![])
                } else {
                    let (q, r) = polyrat_divrem(a, b);
                    if !r.is_empty() {
                        return Err(RingError::NotDivisible);
                    }
                    Payload::PolyRat(q)
                }
            }
            (Payload::PolyMod(a), Payload::PolyMod(b)) => {
                if a.is_empty() {
                    Payload::PolyMod(vec![])
                } else {
                    let (q, r) = polymod_divrem(a, b, self.modulus());
                    if !r.is_empty() {
                        return Err(RingError::NotDivisible);
                    }
                    Payload::PolyMod(q)
                }
            }
            (
                Payload::Laurent { offset: oa, coeffs: ca },
                Payload::Laurent { offset: ob, coeffs: cb },
            ) => {
                if ca.is_empty() {
                    Payload::Laurent { offset: 0, coeffs: vec![] }
                } else {
                    // Both coefficient polynomials have nonzero constant
                    // terms, so any Laurent quotient must itself be an
                    // ordinary polynomial quotient with integer entries.
                    let a: Vec<BigRational> =
                        ca.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                    let b: Vec<BigRational> =
                        cb.iter().map(|c| BigRational::from_integer(c.clone())).collect();
                    let (q, r) = polyrat_divrem(&a, &b);
                    if !r.is_empty() {
                        return Err(RingError::NotDivisible);
                    }
                    let mut coeffs = Vec::with_capacity(q.len());
                    for c in &q {
                        if !c.denom().is_one() {
                            return Err(RingError::NotDivisible);
                        }
                        coeffs.push(c.numer().clone());
                    }
                    normalize_laurent(oa - ob, coeffs)
                }
            }
            _ => unreachable!("payload variant always matches domain kind"),
        };
        Ok(RingElem { domain: self.domain.clone(), payload })
    }

    /// Inverse of a unit; anything else is refused.
    pub fn inv_unit(&self) -> Result<RingElem, RingError> {
        if !self.is_unit() {
            return Err(RingError::NotAUnit);
        }
        let payload = match &self.payload {
            Payload::Int(n) => Payload::Int(n.clone()),
            Payload::Rat(r) => Payload::Rat(r.recip()),
            Payload::ModP(r) => Payload::ModP(inv_mod(*r, self.modulus())),
            Payload::PolyRat(v) => Payload::PolyRat(vec![v[0].recip()]),
            Payload::PolyMod(v) => Payload::PolyMod(vec![inv_mod(v[0], self.modulus())]),
            Payload::Laurent { offset, coeffs } => {
                Payload::Laurent { offset: -offset, coeffs: coeffs.clone() }
            }
        };
        Ok(RingElem { domain: self.domain.clone(), payload })
    }

    /// All units k with k^n equal to self; the returned set is complete and
    /// sorted. Empty when self is not an n-th power of a unit (in
    /// particular when self is not a unit at all).
    pub fn solve_unit_power(&self, n: u32) -> Result<Vec<RingElem>, RingError> {
        assert!(n >= 1, "exponent must be positive");
        let wrap = |payloads: Vec<Payload>| {
            let mut v: Vec<RingElem> = payloads
                .into_iter()
                .map(|payload| RingElem { domain: self.domain.clone(), payload })
                .collect();
            v.sort();
            v
        };
        let out = match &self.payload {
            Payload::Int(q) => {
                let one = BigInt::one();
                if *q == one {
                    if n % 2 == 0 {
                        wrap(vec![Payload::Int(-&one), Payload::Int(one)])
                    } else {
                        wrap(vec![Payload::Int(one)])
                    }
                } else if *q == -&one {
                    if n % 2 == 0 {
                        vec![]
                    } else {
                        wrap(vec![Payload::Int(-one)])
                    }
                } else {
                    vec![]
                }
            }
            Payload::Rat(q) => {
                if q.is_zero() {
                    vec![]
                } else {
                    match rational_nth_roots(q, n) {
                        Some(roots) => wrap(roots.into_iter().map(Payload::Rat).collect()),
                        None => vec![],
                    }
                }
            }
            Payload::ModP(q) => {
                if *q == 0 {
                    vec![]
                } else {
                    let p = self.modulus();
                    wrap(
                        (1..p)
                            .filter(|k| pow_mod(*k, n as u64, p) == *q)
                            .map(Payload::ModP)
                            .collect(),
                    )
                }
            }
            Payload::PolyRat(v) => {
                if v.len() != 1 {
                    vec![]
                } else {
                    match rational_nth_roots(&v[0], n) {
                        Some(roots) => {
                            wrap(roots.into_iter().map(|r| Payload::PolyRat(vec![r])).collect())
                        }
                        None => vec![],
                    }
                }
            }
            Payload::PolyMod(v) => {
                if v.len() != 1 {
                    vec![]
                } else {
                    let p = self.modulus();
                    wrap(
                        (1..p)
                            .filter(|k| pow_mod(*k, n as u64, p) == v[0])
                            .map(|k| Payload::PolyMod(vec![k]))
                            .collect(),
                    )
                }
            }
            Payload::Laurent { offset, coeffs } => {
                // Units are s*x^m with s in {1,-1}; k = t*x^e solves
                // k^n = s*x^m iff n divides m and t^n = s.
                if coeffs.len() != 1 || !coeffs[0].magnitude().is_one() {
                    vec![]
                } else if offset % n as i64 != 0 {
                    vec![]
                } else {
                    let e = offset / n as i64;
                    let positive = coeffs[0].is_positive();
                    let mono = |s: i64| Payload::Laurent { offset: e, coeffs: vec![BigInt::from(s)] };
                    if positive {
                        if n % 2 == 0 {
                            wrap(vec![mono(1), mono(-1)])
                        } else {
                            wrap(vec![mono(1)])
                        }
                    } else if n % 2 == 1 {
                        wrap(vec![mono(-1)])
                    } else {
                        vec![]
                    }
                }
            }
        };
        Ok(out)
    }

    fn modulus(&self) -> u64 {
        match &self.domain.kind {
            DomainKind::PrimeField(p) => *p,
            DomainKind::Poly { base: PolyBase::PrimeField(p), .. } => *p,
            _ => unreachable!("modulus only queried on prime-field payloads"),
        }
    }
}

/// Rational n-th roots of a nonzero rational: none, one (odd n), or a
/// sign pair (even n).
fn rational_nth_roots(q: &BigRational, n: u32) -> Option<Vec<BigRational>> {
    let num = q.numer();
    let den = q.denom();
    if n % 2 == 0 && num.is_negative() {
        return None;
    }
    let rn = exact_root(num.magnitude(), n)?;
    let rd = exact_root(den.magnitude(), n)?;
    let root = BigRational::new(BigInt::from(rn), BigInt::from(rd));
    if n % 2 == 0 {
        Some(vec![-root.clone(), root])
    } else if num.is_negative() {
        Some(vec![-root])
    } else {
        Some(vec![root])
    }
}

fn exact_root(m: &BigUint, n: u32) -> Option<BigUint> {
    let r = m.nth_root(n);
    if r.pow(n) == *m {
        Some(r)
    } else {
        None
    }
}
