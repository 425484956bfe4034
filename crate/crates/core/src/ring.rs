//! Graded polynomial rings over `F_2` holding the mod-2 cohomology of
//! `C_n` and `C_n x C_n`.
//!
//! A class is a set of monomials (coefficients live in the two-element
//! field). Generators named `s*` are square-zero; products that push one of
//! them to exponent 2 vanish. Every product takes an optional degree cap and
//! drops monomials above it, which is what keeps representation-sized
//! exponents tractable.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Maximum number of generators of any supported ring.
pub const MAX_GENS: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Generator {
    pub name: &'static str,
    pub degree: u64,
    pub square_zero: bool,
}

const fn gen(name: &'static str, degree: u64, square_zero: bool) -> Generator {
    Generator {
        name,
        degree,
        square_zero,
    }
}

const CYCLIC_MOD4: [Generator; 2] = [gen("s", 1, true), gen("t", 2, false)];
const CYCLIC_MOD2: [Generator; 1] = [gen("v", 1, false)];
const BICYCLIC_MOD4: [Generator; 4] = [
    gen("s1", 1, true),
    gen("s2", 1, true),
    gen("t1", 2, false),
    gen("t2", 2, false),
];
const BICYCLIC_MOD2: [Generator; 2] = [gen("v1", 1, false), gen("v2", 1, false)];

/// Which cohomology ring a class lives in.
///
/// - `CyclicMod4`: `F_2[s, t]/(s^2)`, `n = 0 mod 4`
/// - `CyclicMod2`: `F_2[v]`, `n = 2 mod 4`
/// - `BicyclicMod4`: `F_2[s1, s2, t1, t2]/(s1^2, s2^2)`
/// - `BicyclicMod2`: `F_2[v1, v2]`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    CyclicMod4,
    CyclicMod2,
    BicyclicMod4,
    BicyclicMod2,
}

impl RingDescriptor {
    pub fn generators(self) -> &'static [Generator] {
        match self {
            RingDescriptor::CyclicMod4 => &CYCLIC_MOD4,
            RingDescriptor::CyclicMod2 => &CYCLIC_MOD2,
            RingDescriptor::BicyclicMod4 => &BICYCLIC_MOD4,
            RingDescriptor::BicyclicMod2 => &BICYCLIC_MOD2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            RingDescriptor::CyclicMod4 => "CyclicMod4",
            RingDescriptor::CyclicMod2 => "CyclicMod2",
            RingDescriptor::BicyclicMod4 => "BicyclicMod4",
            RingDescriptor::BicyclicMod2 => "BicyclicMod2",
        }
    }

    pub fn generator_index(self, name: &str) -> Option<usize> {
        self.generators().iter().position(|g| g.name == name)
    }

    /// Cyclic ring for `C_n`, `n` even.
    pub fn cyclic(n: u64) -> Result<Self> {
        match n % 4 {
            0 if n > 0 => Ok(RingDescriptor::CyclicMod4),
            2 => Ok(RingDescriptor::CyclicMod2),
            _ => Err(Error::Precondition(format!(
                "n must be even and positive, got {n}"
            ))),
        }
    }

    /// Ring for `C_n x C_n`, `n` even.
    pub fn bicyclic(n: u64) -> Result<Self> {
        match n % 4 {
            0 if n > 0 => Ok(RingDescriptor::BicyclicMod4),
            2 => Ok(RingDescriptor::BicyclicMod2),
            _ => Err(Error::Precondition(format!(
                "n must be even and positive, got {n}"
            ))),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Exponent vector in the generator order of its ring. Slots past the
/// ring's generator count stay zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    degree: u64,
    exps: [u64; MAX_GENS],
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        degree: 0,
        exps: [0; MAX_GENS],
    };

    /// `None` when a square-zero generator would get exponent >= 2.
    pub fn new(ring: RingDescriptor, exps: &[u64]) -> Option<Monomial> {
        let gens = ring.generators();
        assert!(exps.len() <= gens.len(), "too many exponents for {ring}");
        let mut out = [0u64; MAX_GENS];
        let mut degree = 0u64;
        for (i, (&e, g)) in exps.iter().zip(gens).enumerate() {
            if g.square_zero && e > 1 {
                return None;
            }
            out[i] = e;
            degree += e * g.degree;
        }
        Some(Monomial { degree, exps: out })
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn exponents(&self) -> &[u64; MAX_GENS] {
        &self.exps
    }

    fn support(&self) -> usize {
        self.exps.iter().filter(|&&e| e > 0).count()
    }

    fn times(&self, other: &Monomial, ring: RingDescriptor) -> Option<Monomial> {
        let mut exps = [0u64; MAX_GENS];
        for (i, g) in ring.generators().iter().enumerate() {
            let e = self.exps[i] + other.exps[i];
            if g.square_zero && e > 1 {
                return None;
            }
            exps[i] = e;
        }
        Some(Monomial {
            degree: self.degree + other.degree,
            exps,
        })
    }

    fn squared(&self, ring: RingDescriptor) -> Option<Monomial> {
        self.times(self, ring)
    }

    fn render(&self, ring: RingDescriptor) -> String {
        if self.degree == 0 {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (g, &e) in ring.generators().iter().zip(&self.exps) {
            match e {
                0 => {}
                1 => parts.push(g.name.to_string()),
                _ => parts.push(format!("{}^{}", g.name, e)),
            }
        }
        parts.join("*")
    }
}

// Canonical order: by degree, then pure powers before mixed monomials, then
// larger exponents on earlier generators first. Gives "t1^4 + t2^4 + t1^2*t2^2".
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.support().cmp(&other.support()))
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of one of the four rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mod2Class {
    ring: RingDescriptor,
    terms: BTreeSet<Monomial>,
}

impl Mod2Class {
    pub fn zero(ring: RingDescriptor) -> Self {
        Mod2Class {
            ring,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(ring: RingDescriptor) -> Self {
        Self::from_monomial(ring, Monomial::ONE)
    }

    pub fn from_monomial(ring: RingDescriptor, m: Monomial) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert(m);
        Mod2Class { ring, terms }
    }

    /// Sum of monomials given as exponent vectors; repeated or vanishing
    /// monomials cancel or drop.
    pub fn from_exponents<'a, I>(ring: RingDescriptor, exps: I) -> Self
    where
        I: IntoIterator<Item = &'a [u64]>,
    {
        let mut out = Self::zero(ring);
        for e in exps {
            if let Some(m) = Monomial::new(ring, e) {
                out.toggle(m);
            }
        }
        out
    }

    /// The named generator as a class.
    pub fn generator(ring: RingDescriptor, name: &str) -> Result<Self> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| Error::Invalid(format!("{ring} has no generator {name}")))?;
        let mut exps = [0u64; MAX_GENS];
        exps[idx] = 1;
        let m = Monomial::new(ring, &exps[..ring.generators().len()]).expect("degree-one monomial");
        Ok(Self::from_monomial(ring, m))
    }

    /// `gen^e` for a named generator.
    pub fn power_of(ring: RingDescriptor, name: &str, e: u64) -> Result<Self> {
        let idx = ring
            .generator_index(name)
            .ok_or_else(|| Error::Invalid(format!("{ring} has no generator {name}")))?;
        let mut exps = [0u64; MAX_GENS];
        exps[idx] = e;
        Ok(
            match Monomial::new(ring, &exps[..ring.generators().len()]) {
                Some(m) => Self::from_monomial(ring, m),
                None => Self::zero(ring),
            },
        )
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.contains(&Monomial::ONE)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coefficient(&self, exps: &[u64]) -> bool {
        Monomial::new(self.ring, exps).is_some_and(|m| self.terms.contains(&m))
    }

    pub fn max_degree(&self) -> Option<u64> {
        self.terms.iter().next_back().map(Monomial::degree)
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.insert(m) {
            self.terms.remove(&m);
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let terms = self
            .terms
            .symmetric_difference(&other.terms)
            .copied()
            .collect();
        Ok(Mod2Class {
            ring: self.ring,
            terms,
        })
    }

    pub fn mul(&self, other: &Self, cap: Option<u64>) -> Result<Self> {
        self.check_ring(other)?;
        let mut out = Self::zero(self.ring);
        for a in &self.terms {
            if cap.is_some_and(|c| a.degree > c) {
                // terms are sorted by degree
                break;
            }
            for b in &other.terms {
                if cap.is_some_and(|c| a.degree + b.degree > c) {
                    break;
                }
                if let Some(m) = a.times(b, self.ring) {
                    out.toggle(m);
                }
            }
        }
        Ok(out)
    }

    /// Square via Frobenius: cross terms cancel in characteristic 2.
    pub fn square(&self, cap: Option<u64>) -> Self {
        let mut out = Self::zero(self.ring);
        for a in &self.terms {
            if cap.is_some_and(|c| 2 * a.degree > c) {
                break;
            }
            if let Some(m) = a.squared(self.ring) {
                // squares of distinct monomials are distinct
                out.terms.insert(m);
            }
        }
        out
    }

    /// `self^m` by square-and-multiply.
    pub fn pow(&self, m: &BigUint, cap: Option<u64>) -> Self {
        let mut acc = Self::one(self.ring);
        for i in (0..m.bits()).rev() {
            acc = acc.square(cap);
            if m.bit(i) {
                acc = acc.mul(self, cap).expect("same ring");
            }
        }
        acc.truncate(cap)
    }

    pub fn pow_u64(&self, m: u64, cap: Option<u64>) -> Self {
        self.pow(&BigUint::from(m), cap)
    }

    /// `(1 + x)^m` for homogeneous `x`, as the product over the set bits `b`
    /// of `m` of `(1 + x^(2^b))`. Bits whose factor lies entirely above the
    /// cap are skipped.
    pub fn one_plus_pow(x: &Self, m: &BigUint, cap: Option<u64>) -> Result<Self> {
        let ring = x.ring;
        let one = Self::one(ring);
        if x.is_zero() || m.is_zero() {
            return Ok(one.truncate(cap));
        }
        let d = x.homogeneous_degree().ok_or_else(|| {
            Error::Invalid("Frobenius power needs a homogeneous class of positive degree".into())
        })?;
        let mut acc = one.clone();
        let mut xpow = x.clone();
        let mut deg = d;
        for b in 0..m.bits() {
            if b > 0 {
                deg = deg.saturating_mul(2);
                if cap.is_some_and(|c| deg > c) {
                    break;
                }
                xpow = xpow.square(None);
                if xpow.is_zero() {
                    break;
                }
            } else if cap.is_some_and(|c| deg > c) {
                break;
            }
            if m.bit(b) {
                let factor = one.add(&xpow)?;
                acc = acc.mul(&factor, cap)?;
            }
        }
        Ok(acc)
    }

    /// Degree shared by all monomials, when positive and uniform.
    fn homogeneous_degree(&self) -> Option<u64> {
        let first = self.terms.iter().next()?.degree;
        let last = self.terms.iter().next_back()?.degree;
        (first == last && first > 0).then_some(first)
    }

    pub fn truncate(mut self, cap: Option<u64>) -> Self {
        if let Some(c) = cap {
            self.terms.retain(|m| m.degree <= c);
        }
        self
    }

    pub fn homogeneous(&self, d: u64) -> Self {
        Mod2Class {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|m| m.degree == d)
                .copied()
                .collect(),
        }
    }

    /// Smallest positive degree with a nonzero component, with that component.
    pub fn first_nonzero_positive_degree(&self) -> Option<(u64, Self)> {
        let d = self.terms.iter().find(|m| m.degree > 0)?.degree;
        Some((d, self.homogeneous(d)))
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        self.terms
            .iter()
            .map(|m| m.render(self.ring))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    /// Inverse of [`Mod2Class::render`]. Terms are `+`-separated products of
    /// `gen` or `gen^e` factors, or `1`, or the single token `0`.
    pub fn parse(ring: RingDescriptor, input: &str) -> Result<Self> {
        Parser::new(ring, input).parse()
    }
}

impl fmt::Display for Mod2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// First nonvanishing positive-degree Stiefel-Whitney class.
///
/// `k` is the exponent from the closed-form theorems when one applied;
/// oracle-only results leave it `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Obstruction {
    pub degree: u64,
    pub class: Mod2Class,
    pub k: Option<u64>,
}

impl Obstruction {
    pub fn from_total(total: &Mod2Class) -> Option<Obstruction> {
        total
            .first_nonzero_positive_degree()
            .map(|(degree, class)| Obstruction {
                degree,
                class,
                k: None,
            })
    }

    /// Equality of degree and class, ignoring `k`.
    pub fn same_class(&self, other: &Obstruction) -> bool {
        self.degree == other.degree && self.class == other.class
    }
}

struct Parser<'a> {
    ring: RingDescriptor,
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(ring: RingDescriptor, src: &'a str) -> Self {
        Parser { ring, src, pos: 0 }
    }

    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a number"));
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| Error::parse(start, "number out of range"))
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        if !self.peek().is_some_and(|c| c.is_ascii_alphabetic()) {
            return Err(Error::parse(start, "expected a generator, 0 or 1"));
        }
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric()) {
            self.pos += 1;
        }
        Ok((start, &self.src[start..self.pos]))
    }

    fn parse(mut self) -> Result<Mod2Class> {
        self.skip_ws();
        if self.src[self.pos..].trim() == "0" {
            return Ok(Mod2Class::zero(self.ring));
        }
        let mut out = Mod2Class::zero(self.ring);
        loop {
            let term = self.term()?;
            out = out.add(&term)?;
            self.skip_ws();
            if self.pos == self.src.len() {
                return Ok(out);
            }
            if !self.eat('+') {
                return Err(Error::parse(self.pos, "expected '+' or end of input"));
            }
        }
    }

    fn term(&mut self) -> Result<Mod2Class> {
        let mut acc = Mod2Class::one(self.ring);
        loop {
            self.skip_ws();
            let factor = if self.peek().is_some_and(|c| c.is_ascii_digit()) {
                let at = self.pos;
                match self.number()? {
                    1 => Mod2Class::one(self.ring),
                    _ => {
                        return Err(Error::parse(
                            at,
                            "only the constant 1 may appear in a product",
                        ))
                    }
                }
            } else {
                let (at, name) = self.ident()?;
                let idx = self.ring.generator_index(name).ok_or_else(|| {
                    Error::parse(at, format!("unknown generator '{name}' for {}", self.ring))
                })?;
                let exp = if self.eat('^') { self.number()? } else { 1 };
                let mut exps = [0u64; MAX_GENS];
                exps[idx] = exp;
                match Monomial::new(self.ring, &exps[..self.ring.generators().len()]) {
                    Some(m) => Mod2Class::from_monomial(self.ring, m),
                    None => Mod2Class::zero(self.ring),
                }
            };
            acc = acc.mul(&factor, None)?;
            if !self.eat('*') {
                return Ok(acc);
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const B4: RingDescriptor = RingDescriptor::BicyclicMod4;
    const B2: RingDescriptor = RingDescriptor::BicyclicMod2;

    fn p(ring: RingDescriptor, s: &str) -> Mod2Class {
        Mod2Class::parse(ring, s).unwrap()
    }

    #[test]
    fn addition() {
        let t1 = p(B4, "t1");
        let t2 = p(B4, "t2");
        assert!(t1.add(&t1).unwrap().is_zero());
        assert_eq!(t1.add(&t2).unwrap().render(), "t1 + t2");
        let z = Mod2Class::zero(B4);
        assert_eq!(z.add(&t1).unwrap(), t1);
    }

    #[test]
    fn multiplication_examples() {
        let s1 = p(B4, "s1");
        assert!(s1.mul(&s1, None).unwrap().is_zero());
        let a = p(B4, "1 + t1 + t2");
        assert_eq!(a.mul(&a, None).unwrap(), p(B4, "1 + t1^2 + t2^2"));
        let x = p(B4, "1 + s1").mul(&p(B4, "1 + s2"), None).unwrap();
        assert_eq!(x, p(B4, "1 + s1 + s2 + s1*s2"));
    }

    #[test]
    fn ring_mismatch_is_reported() {
        let a = Mod2Class::one(B4);
        let b = Mod2Class::one(B2);
        assert!(matches!(a.add(&b), Err(Error::RingMismatch { .. })));
        assert!(a.mul(&b, None).is_err());
    }

    #[test]
    fn pow_examples() {
        let a = p(B4, "1 + t1 + t2");
        assert_eq!(a.pow_u64(4, None), p(B4, "1 + t1^4 + t2^4"));
        assert!(a.pow_u64(0, None).is_one());
        let t = p(RingDescriptor::CyclicMod4, "1 + t");
        let w = t.pow_u64(5, None);
        // (1+t)^5 = 1 + t + t^4 + t^5
        assert_eq!(w, p(RingDescriptor::CyclicMod4, "1 + t + t^4 + t^5"));
    }

    #[test]
    fn homogeneous_parts() {
        let a = p(B4, "1 + t1 + t1*t2");
        assert_eq!(a.homogeneous(2), p(B4, "t1"));
        assert_eq!(a.homogeneous(4), p(B4, "t1*t2"));
        assert!(Mod2Class::zero(B4).homogeneous(3).is_zero());
    }

    #[test]
    fn first_nonzero() {
        let a = p(B4, "1 + t1^4 + t2^4");
        assert_eq!(
            a.first_nonzero_positive_degree(),
            Some((8, p(B4, "t1^4 + t2^4")))
        );
        assert_eq!(Mod2Class::one(B4).first_nonzero_positive_degree(), None);
        assert_eq!(Mod2Class::zero(B4).first_nonzero_positive_degree(), None);
        let b = p(B2, "1 + v1^2 + v2^2");
        assert_eq!(
            b.first_nonzero_positive_degree(),
            Some((2, p(B2, "v1^2 + v2^2")))
        );
    }

    #[test]
    fn rendering() {
        assert_eq!(p(B4, "t2^4 + t1^4").render(), "t1^4 + t2^4");
        assert_eq!(Mod2Class::zero(B4).render(), "0");
        assert_eq!(
            p(B4, "t1^2*t2^2 + t2^4 + t1^4").render(),
            "t1^4 + t2^4 + t1^2*t2^2"
        );
        assert_eq!(p(B4, "s1*s2 + t2 + t1").render(), "t1 + t2 + s1*s2");
        assert_eq!(
            p(RingDescriptor::CyclicMod4, "s*t^2 + t^2 + s + 1").render(),
            "1 + s + t^2 + s*t^2"
        );
    }

    #[test]
    fn parse_errors_carry_position() {
        match Mod2Class::parse(B4, "t1 + x3") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 5),
            other => panic!("unexpected {other:?}"),
        }
        match Mod2Class::parse(B4, "t1 t2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(Mod2Class::parse(B4, "t1^").is_err());
        assert!(Mod2Class::parse(B4, "2*t1").is_err());
        assert!(Mod2Class::parse(B4, "").is_err());
    }

    #[test]
    fn parse_reduces_square_zero() {
        assert!(p(B4, "s1^2").is_zero());
        assert!(p(B4, "s1*s1").is_zero());
        assert_eq!(p(B4, "t1*t1"), p(B4, "t1^2"));
    }

    #[test]
    fn frobenius_fast_path_matches_pow() {
        let x = p(B4, "t1 + t2");
        for m in 0u64..70 {
            let fast = Mod2Class::one_plus_pow(&x, &BigUint::from(m), None).unwrap();
            let slow = Mod2Class::one(B4).add(&x).unwrap().pow_u64(m, None);
            assert_eq!(fast, slow, "m = {m}");
        }
        // capped
        let fast = Mod2Class::one_plus_pow(&x, &BigUint::from(1000u32), Some(40)).unwrap();
        let slow = Mod2Class::one(B4).add(&x).unwrap().pow_u64(1000, Some(40));
        assert_eq!(fast, slow);
        assert!(Mod2Class::one_plus_pow(&p(B4, "1 + t1"), &BigUint::from(3u8), None).is_err());
    }

    fn arb_class(ring: RingDescriptor) -> impl Strategy<Value = Mod2Class> {
        let n = ring.generators().len();
        prop::collection::vec(prop::collection::vec(0u64..4, n), 0..8).prop_map(move |terms| {
            Mod2Class::from_exponents(ring, terms.iter().map(|v| v.as_slice()))
        })
    }

    fn arb_any() -> impl Strategy<Value = Mod2Class> {
        prop_oneof![
            arb_class(RingDescriptor::CyclicMod4),
            arb_class(RingDescriptor::CyclicMod2),
            arb_class(B4),
            arb_class(B2),
        ]
    }

    fn arb_triple() -> impl Strategy<Value = (Mod2Class, Mod2Class, Mod2Class)> {
        prop_oneof![Just(B4), Just(B2), Just(RingDescriptor::CyclicMod4)]
            .prop_flat_map(|r| (arb_class(r), arb_class(r), arb_class(r)))
    }

    proptest! {
        #[test]
        fn ring_axioms((a, b, c) in arb_triple()) {
            let ab = a.mul(&b, None).unwrap();
            prop_assert_eq!(&ab, &b.mul(&a, None).unwrap());
            prop_assert_eq!(
                ab.mul(&c, None).unwrap(),
                a.mul(&b.mul(&c, None).unwrap(), None).unwrap()
            );
            prop_assert_eq!(
                a.mul(&b.add(&c).unwrap(), None).unwrap(),
                ab.add(&a.mul(&c, None).unwrap()).unwrap()
            );
            let one = Mod2Class::one(a.ring());
            prop_assert_eq!(a.mul(&one, None).unwrap(), a.clone());
            prop_assert!(a.add(&a).unwrap().is_zero());
        }

        #[test]
        fn frobenius_square(a in arb_any()) {
            let sq = a.square(None);
            prop_assert_eq!(&sq, &a.mul(&a, None).unwrap());
            for m in sq.monomials() {
                prop_assert!(a.monomials().any(|x| x.squared(a.ring()) == Some(*m)));
            }
        }

        #[test]
        fn cap_soundness((a, b, _c) in arb_triple(), cap in 0u64..16) {
            let capped = a.mul(&b, Some(cap)).unwrap();
            let full = a.mul(&b, None).unwrap().truncate(Some(cap));
            prop_assert_eq!(capped, full);
        }

        #[test]
        fn pow_matches_repeated_mul(a in arb_any(), m in 0u64..=32) {
            let mut naive = Mod2Class::one(a.ring());
            for _ in 0..m {
                naive = naive.mul(&a, Some(24)).unwrap();
            }
            prop_assert_eq!(a.pow_u64(m, Some(24)), naive);
        }

        #[test]
        fn render_parse_round_trip(a in arb_any()) {
            let back = Mod2Class::parse(a.ring(), &a.render()).unwrap();
            prop_assert_eq!(back, a);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn lucas_consistency(m in 0u64..=1_000_000) {
            let ring = RingDescriptor::CyclicMod4;
            let t = Mod2Class::generator(ring, "t").unwrap();
            let w = Mod2Class::one_plus_pow(&t, &BigUint::from(m), None).unwrap();
            let expected = (0..=m).filter(|&i| crate::arith::binom_mod2_u64(m, i)).count();
            prop_assert_eq!(w.len(), expected);
            for mono in w.monomials() {
                let i = mono.exponents()[1];
                prop_assert!(crate::arith::binom_mod2_u64(m, i));
            }
        }
    }
}
