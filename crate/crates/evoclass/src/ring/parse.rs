//! Element and descriptor text: parsing and canonical formatting.
//!
//! Canonical form prints polynomial terms by descending exponent with no
//! spaces, writes coefficients of magnitude 1 implicitly ("x^2", "-x"),
//! separates terms with "+" or "-", and prints zero as "0". Parsing accepts
//! any term order and repeated exponents; formatting re-canonicalizes, so
//! parse then format is idempotent.

use super::{
    DomainHandle, DomainKind, Payload, PolyBase, RingElem, RingError, reduce_mod, trim_mod,
    trim_rat,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::fmt;

const MAX_EXPONENT: i64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn lex(s: &str) -> Result<Vec<Token>, RingError> {
    let bytes = s.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        match c {
            b' ' | b'\t' => i += 1,
            b'+' => {
                out.push(Token { tok: Tok::Plus, pos: i });
                i += 1;
            }
            b'-' => {
                out.push(Token { tok: Tok::Minus, pos: i });
                i += 1;
            }
            b'*' => {
                out.push(Token { tok: Tok::Star, pos: i });
                i += 1;
            }
            b'^' => {
                out.push(Token { tok: Tok::Caret, pos: i });
                i += 1;
            }
            b'/' => {
                out.push(Token { tok: Tok::Slash, pos: i });
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let text = &s[start..i];
                let n: BigInt = text.parse().expect("digit run parses as integer");
                out.push(Token { tok: Tok::Int(n), pos: start });
            }
            c if c.is_ascii_alphabetic() => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_alphanumeric() {
                    i += 1;
                }
                out.push(Token { tok: Tok::Ident(s[start..i].to_string()), pos: start });
            }
            _ => {
                return Err(RingError::Parse {
                    position: i,
                    expected: "digit, sign, variable, '*', '^' or '/'".into(),
                });
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    len: usize,
}

impl Parser {
    fn new(s: &str) -> Result<Self, RingError> {
        Ok(Parser { toks: lex(s)?, i: 0, len: s.len() })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map(|t| t.pos).unwrap_or(self.len)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.i).map(|t| t.tok.clone());
        if t.is_some() {
            self.i += 1;
        }
        t
    }

    fn err<T>(&self, expected: &str) -> Result<T, RingError> {
        Err(RingError::Parse { position: self.pos(), expected: expected.into() })
    }

    /// Consumes a run of sign tokens; empty run means +1.
    fn sign(&mut self) -> i32 {
        let mut s = 1;
        while let Some(tok) = self.peek() {
            match tok {
                Tok::Plus => {
                    self.bump();
                }
                Tok::Minus => {
                    s = -s;
                    self.bump();
                }
                _ => break,
            }
        }
        s
    }

    fn uint(&mut self) -> Result<BigInt, RingError> {
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => {
                self.i = self.i.saturating_sub(1);
                self.err("integer")
            }
        }
    }

    fn signed_int(&mut self) -> Result<BigInt, RingError> {
        let s = self.sign();
        let n = self.uint()?;
        Ok(if s < 0 { -n } else { n })
    }

    fn done(&self) -> bool {
        self.i >= self.toks.len()
    }

    fn expect_end(&self) -> Result<(), RingError> {
        if self.done() {
            Ok(())
        } else {
            self.err("end of input")
        }
    }
}

/// One parsed polynomial term: exponent and rational coefficient.
struct Term {
    exp: i64,
    coeff: BigRational,
}

fn parse_terms(
    p: &mut Parser,
    var: &str,
    allow_fraction: bool,
    allow_negative_exp: bool,
) -> Result<Vec<Term>, RingError> {
    let mut terms = Vec::new();
    loop {
        let sign = p.sign();
        let mut coeff = match p.peek() {
            Some(Tok::Int(_)) => {
                let n = p.uint()?;
                let den = if allow_fraction && p.peek() == Some(&Tok::Slash) {
                    p.bump();
                    let d = p.uint()?;
                    if d.is_zero() {
                        return p.err("nonzero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                Some(BigRational::new(n, den))
            }
            Some(Tok::Ident(_)) => None,
            _ => return p.err("coefficient or variable"),
        };
        let exp = if coeff.is_none() || p.peek() == Some(&Tok::Star) {
            if coeff.is_some() {
                p.bump();
            }
            match p.bump() {
                Some(Tok::Ident(name)) if name == var => {}
                Some(Tok::Ident(_)) => {
                    p.i -= 1;
                    return p.err(&format!("variable '{var}'"));
                }
                _ => {
                    p.i = p.i.saturating_sub(1);
                    return p.err(&format!("variable '{var}'"));
                }
            }
            if p.peek() == Some(&Tok::Caret) {
                p.bump();
                let e = p.signed_int()?;
                let e = e.to_i64().filter(|e| e.abs() <= MAX_EXPONENT);
                match e {
                    Some(e) if e >= 0 || allow_negative_exp => e,
                    _ => return p.err("exponent in supported range"),
                }
            } else {
                1
            }
        } else {
            0
        };
        let c = coeff.take().unwrap_or_else(BigRational::one);
        let c = if sign < 0 { -c } else { c };
        terms.push(Term { exp, coeff: c });
        match p.peek() {
            Some(Tok::Plus) | Some(Tok::Minus) => continue,
            None => break,
            _ => return p.err("'+', '-' or end of input"),
        }
    }
    Ok(terms)
}

impl DomainHandle {
    /// Parses canonical or near-canonical element text for this domain.
    pub fn parse_elem(&self, s: &str) -> Result<RingElem, RingError> {
        let mut p = Parser::new(s)?;
        if p.done() {
            return p.err("element text");
        }
        let payload = match &self.kind {
            DomainKind::Integers => {
                let n = p.signed_int()?;
                p.expect_end()?;
                Payload::Int(n)
            }
            DomainKind::Rationals => {
                let n = p.signed_int()?;
                let payload = if p.peek() == Some(&Tok::Slash) {
                    p.bump();
                    let sign = p.sign();
                    let d = p.uint()?;
                    if d.is_zero() {
                        return p.err("nonzero denominator");
                    }
                    let d = if sign < 0 { -d } else { d };
                    Payload::Rat(BigRational::new(n, d))
                } else {
                    Payload::Rat(BigRational::from_integer(n))
                };
                p.expect_end()?;
                payload
            }
            DomainKind::PrimeField(q) => {
                let n = p.signed_int()?;
                p.expect_end()?;
                Payload::ModP(reduce_mod(&n, *q))
            }
            DomainKind::Poly { base, var } => {
                let allow_fraction = *base == PolyBase::Rationals;
                let terms = parse_terms(&mut p, var, allow_fraction, false)?;
                p.expect_end()?;
                let mut acc: BTreeMap<i64, BigRational> = BTreeMap::new();
                for t in terms {
                    *acc.entry(t.exp).or_insert_with(BigRational::zero) += t.coeff;
                }
                let deg = acc.keys().next_back().copied().unwrap_or(0);
                match base {
                    PolyBase::Rationals => {
                        let mut v = vec![BigRational::zero(); deg as usize + 1];
                        for (e, c) in acc {
                            v[e as usize] = c;
                        }
                        Payload::PolyRat(trim_rat(v))
                    }
                    PolyBase::PrimeField(q) => {
                        let mut v = vec![0u64; deg as usize + 1];
                        for (e, c) in acc {
                            debug_assert!(c.denom().is_one());
                            v[e as usize] = reduce_mod(c.numer(), *q);
                        }
                        Payload::PolyMod(trim_mod(v))
                    }
                }
            }
            DomainKind::LaurentInt { var } => {
                let terms = parse_terms(&mut p, var, false, true)?;
                p.expect_end()?;
                let mut acc: BTreeMap<i64, BigInt> = BTreeMap::new();
                for t in terms {
                    debug_assert!(t.coeff.denom().is_one());
                    *acc.entry(t.exp).or_insert_with(BigInt::zero) += t.coeff.numer();
                }
                acc.retain(|_, c| !c.is_zero());
                match (acc.keys().next().copied(), acc.keys().next_back().copied()) {
                    (Some(lo), Some(hi)) => {
                        let mut v = vec![BigInt::zero(); (hi - lo) as usize + 1];
                        for (e, c) in acc {
                            v[(e - lo) as usize] = c;
                        }
                        super::normalize_laurent(lo, v)
                    }
                    _ => Payload::Laurent { offset: 0, coeffs: vec![] },
                }
            }
        };
        Ok(RingElem { domain: self.clone(), payload })
    }

    /// Canonical text for this handle, accepted back by `parse_descriptor`.
    pub fn descriptor(&self) -> String {
        match &self.kind {
            DomainKind::Integers => "Z".into(),
            DomainKind::Rationals => "Q".into(),
            DomainKind::PrimeField(p) => format!("Fp:{p}"),
            DomainKind::Poly { base: PolyBase::Rationals, var } => format!("PolyQ:{var}"),
            DomainKind::Poly { base: PolyBase::PrimeField(p), var } => format!("PolyFp:{p}:{var}"),
            DomainKind::LaurentInt { var } => format!("LaurentZ:{var}"),
        }
    }

    /// Resolves a descriptor like "Z", "Fp:5" or "PolyFp:7:t".
    pub fn parse_descriptor(s: &str) -> Result<Self, RingError> {
        let parts: Vec<&str> = s.split(':').collect();
        let parse_p = |text: &str, at: usize| -> Result<u64, RingError> {
            text.parse::<u64>().map_err(|_| RingError::Parse {
                position: at,
                expected: "prime modulus".into(),
            })
        };
        match parts.as_slice() {
            ["Z"] => Ok(DomainHandle::integers()),
            ["Q"] => Ok(DomainHandle::rationals()),
            ["Fp", p] => DomainHandle::prime_field(parse_p(p, 3)?),
            ["PolyQ", var] => DomainHandle::poly_q(var),
            ["PolyFp", p, var] => DomainHandle::poly_fp(parse_p(p, 7)?, var),
            ["LaurentZ", var] => DomainHandle::laurent_int(var),
            _ => Err(RingError::Parse {
                position: 0,
                expected: "domain descriptor (Z, Q, Fp:<p>, PolyQ:<var>, PolyFp:<p>:<var>, LaurentZ:<var>)"
                    .into(),
            }),
        }
    }
}

fn write_poly_terms<C: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    var: &str,
    terms: &[(i64, bool, C)],
) -> fmt::Result {
    // terms: (exponent, coefficient-is-negative, |coefficient|), any order.
    let mut sorted: Vec<&(i64, bool, C)> = terms.iter().collect();
    sorted.sort_by_key(|t| std::cmp::Reverse(t.0));
    for (i, (exp, neg, mag)) in sorted.iter().enumerate() {
        if *neg {
            f.write_str("-")?;
        } else if i > 0 {
            f.write_str("+")?;
        }
        let mag_text = mag.to_string();
        match exp {
            0 => f.write_str(&mag_text)?,
            _ => {
                if mag_text != "1" {
                    write!(f, "{mag_text}*")?;
                }
                f.write_str(var)?;
                if *exp != 1 {
                    write!(f, "^{exp}")?;
                }
            }
        }
    }
    Ok(())
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        match (&self.payload, &self.domain.kind) {
            (Payload::Int(n), _) => write!(f, "{n}"),
            (Payload::Rat(r), _) => write!(f, "{r}"),
            (Payload::ModP(r), _) => write!(f, "{r}"),
            (Payload::PolyRat(v), DomainKind::Poly { var, .. }) => {
                let terms: Vec<(i64, bool, BigRational)> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(e, c)| (e as i64, c.is_negative(), c.abs()))
                    .collect();
                write_poly_terms(f, var, &terms)
            }
            (Payload::PolyMod(v), DomainKind::Poly { var, .. }) => {
                let terms: Vec<(i64, bool, u64)> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(e, c)| (e as i64, false, *c))
                    .collect();
                write_poly_terms(f, var, &terms)
            }
            (Payload::Laurent { offset, coeffs }, DomainKind::LaurentInt { var }) => {
                let terms: Vec<(i64, bool, BigInt)> = coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (offset + i as i64, c.is_negative(), c.abs()))
                    .collect();
                write_poly_terms(f, var, &terms)
            }
            _ => unreachable!("payload variant always matches domain kind"),
        }
    }
}

impl RingElem {
    /// Canonical text form; same output as `Display`.
    pub fn format_elem(&self) -> String {
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn z() -> DomainHandle {
        DomainHandle::integers()
    }

    fn q() -> DomainHandle {
        DomainHandle::rationals()
    }

    fn polyq() -> DomainHandle {
        DomainHandle::poly_q("x").unwrap()
    }

    fn lz() -> DomainHandle {
        DomainHandle::laurent_int("x").unwrap()
    }

    #[test]
    fn integer_round_trip() {
        for s in ["0", "7", "-12", "123456789012345678901234567890"] {
            let e = z().parse_elem(s).unwrap();
            assert_eq!(e.to_string(), s);
        }
        assert_eq!(z().parse_elem("+7").unwrap().to_string(), "7");
        assert_eq!(z().parse_elem("--7").unwrap().to_string(), "7");
    }

    #[test]
    fn rational_normalization() {
        assert_eq!(q().parse_elem("4/6").unwrap().to_string(), "2/3");
        assert_eq!(q().parse_elem("3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(q().parse_elem("-0/5").unwrap().to_string(), "0");
        assert_eq!(q().parse_elem("8/2").unwrap().to_string(), "4");
    }

    #[test]
    fn prime_field_reduction() {
        let f5 = DomainHandle::prime_field(5).unwrap();
        assert_eq!(f5.parse_elem("-1").unwrap().to_string(), "4");
        assert_eq!(f5.parse_elem("12").unwrap().to_string(), "2");
    }

    #[test]
    fn poly_round_trip() {
        for s in ["0", "x", "-x", "x^2-1", "2*x^3+x-5", "1/2*x^2-3/4"] {
            let e = polyq().parse_elem(s).unwrap();
            assert_eq!(e.to_string(), s, "round trip of {s}");
        }
        // Parsing collects like terms and reorders.
        assert_eq!(polyq().parse_elem("1+x+x").unwrap().to_string(), "2*x+1");
        assert_eq!(polyq().parse_elem("x^0").unwrap().to_string(), "1");
        assert_eq!(polyq().parse_elem("x^2-x^2").unwrap().to_string(), "0");
    }

    #[test]
    fn laurent_round_trip() {
        for s in ["0", "x^-1", "-x^-2", "5*x^5+3*x^4", "x+2+x^-1"] {
            let e = lz().parse_elem(s).unwrap();
            assert_eq!(e.to_string(), s, "round trip of {s}");
        }
        // Parsing accepts any term order; formatting sorts by exponent.
        assert_eq!(lz().parse_elem("x^-1+2+x").unwrap().to_string(), "x+2+x^-1");
    }

    #[test]
    fn parse_rejects_with_position() {
        match polyq().parse_elem("x^-2") {
            Err(RingError::Parse { position, .. }) => assert!(position >= 1),
            other => panic!("expected parse error, got {other:?}"),
        }
        match z().parse_elem("x") {
            Err(RingError::Parse { position, .. }) => assert_eq!(position, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match q().parse_elem("1/0") {
            Err(RingError::Parse { position, expected }) => {
                assert!(position > 0);
                assert!(expected.contains("nonzero"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        match lz().parse_elem("y+1") {
            Err(RingError::Parse { position, expected }) => {
                assert_eq!(position, 0);
                assert!(expected.contains('x'));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(z().parse_elem("").is_err());
        assert!(z().parse_elem("3 4").is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        for s in ["Z", "Q", "Fp:5", "PolyQ:x", "PolyFp:7:t", "LaurentZ:x"] {
            let d = DomainHandle::parse_descriptor(s).unwrap();
            assert_eq!(d.descriptor(), s);
        }
        assert!(DomainHandle::parse_descriptor("Fp:6").is_err());
        assert!(DomainHandle::parse_descriptor("R").is_err());
        assert!(DomainHandle::parse_descriptor("PolyQ:2x").is_err());
    }

    proptest! {
        #[test]
        fn format_parse_identity_integers(n in any::<i64>()) {
            let e = z().from_i64(n);
            prop_assert_eq!(z().parse_elem(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn format_parse_identity_rationals(n in any::<i32>(), d in 1..10000i32) {
            let e = q().parse_elem(&format!("{n}/{d}")).unwrap();
            prop_assert_eq!(q().parse_elem(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn format_parse_identity_poly(coeffs in proptest::collection::vec(-9i64..10, 0..6)) {
            let d = polyq();
            let mut e = d.zero();
            let x = d.parse_elem("x").unwrap();
            for (i, c) in coeffs.iter().enumerate() {
                let term = d.from_i64(*c).mul(&x.pow_u(i as u32)).unwrap();
                e = e.add(&term).unwrap();
            }
            prop_assert_eq!(d.parse_elem(&e.to_string()).unwrap(), e);
        }

        #[test]
        fn format_parse_identity_laurent(
            coeffs in proptest::collection::vec(-9i64..10, 0..6),
            shift in -5i64..6,
        ) {
            let d = lz();
            let mut e = d.zero();
            let x = d.parse_elem("x").unwrap();
            let xs = d.parse_elem(&format!("x^{shift}")).unwrap();
            for (i, c) in coeffs.iter().enumerate() {
                let term = d.from_i64(*c).mul(&x.pow_u(i as u32)).unwrap();
                e = e.add(&term).unwrap();
            }
            e = e.mul(&xs).unwrap();
            prop_assert_eq!(d.parse_elem(&e.to_string()).unwrap(), e);
        }
    }
}
