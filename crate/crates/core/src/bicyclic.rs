//! Real representations of `C_n x C_n`, `n` even.
//!
//! A representation is stored by the multiplicities of its four
//! one-dimensional real summands and of the realized two-dimensional
//! characters `chi^(j1) x chi^(j2)`, indexed by canonical pairs. Once `w1`
//! and `w2` vanish, the whole total class depends only on the parity
//! profile `(m10, m01, m11)`.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{min_valuation, ord2, scaled_bit, Valuation};
use crate::error::{Error, Result};
use crate::ring::{Mod2Class, Monomial, Obstruction, RingDescriptor};

/// Which normalization produced a profile, and which ring it lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Regime {
    /// `n = 0 mod 4`: profile counts two-dimensional summands.
    Mod4,
    /// `n = 2 mod 4`: profile counts characters of the 2-torsion subgroup.
    Mod2,
}

impl Regime {
    pub fn of(n: u64) -> Result<Regime> {
        match RingDescriptor::bicyclic(n)? {
            RingDescriptor::BicyclicMod4 => Ok(Regime::Mod4),
            _ => Ok(Regime::Mod2),
        }
    }

    pub fn ring(self) -> RingDescriptor {
        match self {
            Regime::Mod4 => RingDescriptor::BicyclicMod4,
            Regime::Mod2 => RingDescriptor::BicyclicMod2,
        }
    }

    pub fn divisor(self) -> u32 {
        match self {
            Regime::Mod4 => 8,
            Regime::Mod2 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Regime::Mod4 => "Mod4",
            Regime::Mod2 => "Mod2",
        }
    }

    /// The two degree-2 polynomial generators (Mod4) or the degree-1
    /// generators (Mod2) that the profile factors are built from.
    fn gens(self) -> [&'static str; 2] {
        match self {
            Regime::Mod4 => ["t1", "t2"],
            Regime::Mod2 => ["v1", "v2"],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ParityProfile {
    pub m10: BigUint,
    pub m01: BigUint,
    pub m11: BigUint,
    pub regime: Regime,
}

impl ParityProfile {
    pub fn new(
        m10: impl Into<BigUint>,
        m01: impl Into<BigUint>,
        m11: impl Into<BigUint>,
        regime: Regime,
    ) -> Self {
        ParityProfile {
            m10: m10.into(),
            m01: m01.into(),
            m11: m11.into(),
            regime,
        }
    }

    pub fn ring(&self) -> RingDescriptor {
        self.regime.ring()
    }

    fn sums(&self) -> (BigUint, BigUint, BigUint) {
        (
            &self.m10 + &self.m11,
            &self.m01 + &self.m11,
            &self.m10 + &self.m01 + &self.m11,
        )
    }

    /// `m10 + m11` and `m01 + m11` both even: the condition under which the
    /// closed forms apply.
    pub fn parity_ok(&self) -> bool {
        let (a, b, _) = self.sums();
        !a.bit(0) && !b.bit(0)
    }

    pub fn scale(&self, factor: &BigUint) -> ParityProfile {
        ParityProfile {
            m10: &self.m10 * factor,
            m01: &self.m01 * factor,
            m11: &self.m11 * factor,
            regime: self.regime,
        }
    }

    pub fn add(&self, other: &ParityProfile) -> Result<ParityProfile> {
        if self.regime != other.regime {
            return Err(Error::RingMismatch {
                left: self.ring(),
                right: other.ring(),
            });
        }
        Ok(ParityProfile {
            m10: &self.m10 + &other.m10,
            m01: &self.m01 + &other.m01,
            m11: &self.m11 + &other.m11,
            regime: self.regime,
        })
    }
}

/// Character values at the four elements of order dividing 2:
/// `(0,0)`, `(n/2,0)`, `(0,n/2)`, `(n/2,n/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CharacterQuadruple {
    pub c00: BigInt,
    pub cn0: BigInt,
    pub c0n: BigInt,
    pub cnn: BigInt,
}

impl CharacterQuadruple {
    pub fn new(c00: i64, cn0: i64, c0n: i64, cnn: i64) -> Self {
        CharacterQuadruple {
            c00: c00.into(),
            cn0: cn0.into(),
            c0n: c0n.into(),
            cnn: cnn.into(),
        }
    }
}

/// Lexicographic minimum of `(i, j)` and `(-i, -j)` mod `n`.
pub fn canonical_pair(n: u64, i: u64, j: u64) -> Result<(u64, u64)> {
    if n < 2 || n % 2 != 0 {
        return Err(Error::Precondition(format!(
            "n must be even and at least 2, got {n}"
        )));
    }
    let (i, j) = (i % n, j % n);
    let half = n / 2;
    if (i == 0 || i == half) && (j == 0 || j == half) {
        return Err(Error::Invalid(format!(
            "({i},{j}) is 2-torsion; its character is one-dimensional"
        )));
    }
    let partner = ((n - i) % n, (n - j) % n);
    Ok((i, j).min(partner))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicyclicRep {
    n: u64,
    m: [u64; 4],
    pairs: BTreeMap<(u64, u64), u64>,
}

impl BicyclicRep {
    /// `m` holds the multiplicities of `1`, `sgn x 1`, `1 x sgn`,
    /// `sgn x sgn`; `pairs` those of two-dimensional summands. Pairs are
    /// canonicalized and merged.
    pub fn new<I>(n: u64, m: [u64; 4], pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = ((u64, u64), u64)>,
    {
        Regime::of(n)?;
        let mut map = BTreeMap::new();
        for ((i, j), mult) in pairs {
            let key = canonical_pair(n, i, j)?;
            if mult > 0 {
                *map.entry(key).or_insert(0) += mult;
            }
        }
        Ok(BicyclicRep { n, m, pairs: map })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> [u64; 4] {
        self.m
    }

    pub fn pairs(&self) -> &BTreeMap<(u64, u64), u64> {
        &self.pairs
    }

    pub fn regime(&self) -> Regime {
        Regime::of(self.n).expect("n validated at construction")
    }

    pub fn ring(&self) -> RingDescriptor {
        self.regime().ring()
    }

    pub fn dim(&self) -> u64 {
        self.m.iter().sum::<u64>() + 2 * self.pairs.values().sum::<u64>()
    }

    fn pair_mult(&self, x: u64, y: u64) -> u64 {
        self.pairs
            .iter()
            .filter(|((i, j), _)| i % 2 == x && j % 2 == y)
            .map(|(_, m)| m)
            .sum()
    }

    pub fn character(&self) -> CharacterQuadruple {
        let half = self.n / 2;
        let mut values = [0i64; 4];
        for (slot, (a, b)) in [(0, 0), (1, 0), (0, 1), (1, 1)].into_iter().enumerate() {
            let sign = |j1: u64, j2: u64| -> i64 {
                if (j1 * a + j2 * b) % 2 == 0 {
                    1
                } else {
                    -1
                }
            };
            let one_dim = [(0, 0), (half, 0), (0, half), (half, half)];
            let mut v = 0i64;
            for (idx, &(j1, j2)) in one_dim.iter().enumerate() {
                v += sign(j1, j2) * self.m[idx] as i64;
            }
            for (&(j1, j2), &mult) in &self.pairs {
                v += 2 * sign(j1, j2) * mult as i64;
            }
            values[slot] = v;
        }
        CharacterQuadruple::new(values[0], values[1], values[2], values[3])
    }

    /// Mod4: multiplicities of two-dimensional summands by index parity.
    /// Mod2: multiplicities of the three nontrivial characters of the
    /// 2-torsion subgroup in the restriction.
    pub fn profile(&self) -> ParityProfile {
        let regime = self.regime();
        let (p10, p01, p11) = (
            self.pair_mult(1, 0),
            self.pair_mult(0, 1),
            self.pair_mult(1, 1),
        );
        match regime {
            Regime::Mod4 => ParityProfile::new(p10, p01, p11, regime),
            Regime::Mod2 => ParityProfile::new(
                self.m[1] + 2 * p10,
                self.m[2] + 2 * p01,
                self.m[3] + 2 * p11,
                regime,
            ),
        }
    }

    /// `(w1, w2)`. Mod4 uses the closed expressions in the multiplicities;
    /// Mod2 reads them off the oracle.
    pub fn w1_w2(&self) -> (Mod2Class, Mod2Class) {
        let ring = self.ring();
        match self.regime() {
            Regime::Mod4 => {
                let [_, m1, m2, m3] = self.m;
                let p = self.profile();
                let mut w1_terms: Vec<[u64; 4]> = Vec::new();
                if (m1 + m3) % 2 == 1 {
                    w1_terms.push([1, 0, 0, 0]);
                }
                if (m2 + m3) % 2 == 1 {
                    w1_terms.push([0, 1, 0, 0]);
                }
                let w1 = Mod2Class::from_exponents(ring, w1_terms.iter().map(|e| &e[..]));
                let s1s2 = (m1 * m2 + m2 * m3 + m3 * m1) % 2 == 1;
                let t1 = (&p.m10 + &p.m11).bit(0);
                let t2 = (&p.m01 + &p.m11).bit(0);
                let mut terms: Vec<[u64; 4]> = Vec::new();
                if s1s2 {
                    terms.push([1, 1, 0, 0]);
                }
                if t1 {
                    terms.push([0, 0, 1, 0]);
                }
                if t2 {
                    terms.push([0, 0, 0, 1]);
                }
                let w2 = Mod2Class::from_exponents(ring, terms.iter().map(|e| &e[..]));
                (w1, w2)
            }
            Regime::Mod2 => {
                let total = total_sw_oracle(self, 2);
                (total.homogeneous(1), total.homogeneous(2))
            }
        }
    }

    pub fn is_w1_w2_zero(&self) -> bool {
        let (w1, w2) = self.w1_w2();
        w1.is_zero() && w2.is_zero()
    }

    /// Closed form when `w1 = w2 = 0`, otherwise the oracle's first
    /// nonzero class.
    pub fn obstruction(&self) -> Result<Option<Obstruction>> {
        if self.is_w1_w2_zero() {
            obstruction_closed(&self.profile())
        } else {
            Ok(first_nonzero_search(self.dim(), |cap| {
                total_sw_oracle(self, cap)
            }))
        }
    }
}

fn to_bigint(v: &BigInt, what: &str) -> Result<BigUint> {
    v.to_biguint()
        .ok_or_else(|| Error::Precondition(format!("{what} is negative")))
}

/// Profile from the character values at the 2-torsion subgroup.
pub fn profile_from_character(n: u64, cq: &CharacterQuadruple) -> Result<ParityProfile> {
    let regime = Regime::of(n)?;
    if cq.c00.sign() == Sign::Minus || [&cq.cn0, &cq.c0n, &cq.cnn].iter().any(|c| c.abs() > cq.c00)
    {
        return Err(Error::Precondition(
            "not the character of a real representation: |chi(g)| exceeds chi(1)".into(),
        ));
    }
    let d = BigInt::from(regime.divisor());
    let num10 = &cq.c00 - &cq.cn0 + &cq.c0n - &cq.cnn;
    let num01 = &cq.c00 + &cq.cn0 - &cq.c0n - &cq.cnn;
    let num11 = &cq.c00 - &cq.cn0 - &cq.c0n + &cq.cnn;
    let mut out = Vec::with_capacity(3);
    for num in [num10, num01, num11] {
        if !(&num % &d).is_zero() {
            return Err(Error::Precondition(format!(
                "not the character of a real representation of C_{n} x C_{n}: {num} is not divisible by {d}"
            )));
        }
        out.push(to_bigint(&(num / &d), "multiplicity")?);
    }
    let m11 = out.pop().expect("three values");
    let m01 = out.pop().expect("three values");
    let m10 = out.pop().expect("three values");
    Ok(ParityProfile {
        m10,
        m01,
        m11,
        regime,
    })
}

fn class(ring: RingDescriptor, s: &str) -> Mod2Class {
    Mod2Class::parse(ring, s).expect("literal class")
}

/// Full product of the total classes of all summands, capped at `cap`.
pub fn total_sw_oracle(rep: &BicyclicRep, cap: u64) -> Mod2Class {
    let ring = rep.ring();
    let cap = Some(cap);
    let [_, m1, m2, m3] = rep.m();
    let (g1, g2) = match rep.regime() {
        Regime::Mod4 => ("s1", "s2"),
        Regime::Mod2 => ("v1", "v2"),
    };
    let mut acc = Mod2Class::one(ring);
    let mut times = |factor: Mod2Class, e: u64| {
        let p = factor.pow(&BigUint::from(e), cap);
        acc = acc.mul(&p, cap).expect("same ring");
    };
    times(class(ring, &format!("1 + {g1}")), m1);
    times(class(ring, &format!("1 + {g2}")), m2);
    times(class(ring, &format!("1 + {g1} + {g2}")), m3);
    for (&(j1, j2), &mult) in rep.pairs() {
        match rep.regime() {
            Regime::Mod4 => {
                // w(chi^(j1) x chi^(j2)) = 1 + j1 t1 + j2 t2
                let mut f = Mod2Class::one(ring);
                if j1 % 2 == 1 {
                    f = f.add(&class(ring, "t1")).expect("same ring");
                }
                if j2 % 2 == 1 {
                    f = f.add(&class(ring, "t2")).expect("same ring");
                }
                times(f, mult);
            }
            Regime::Mod2 => {
                // restricts to two copies of a character of C_2 x C_2
                let mut f = Mod2Class::one(ring);
                if j1 % 2 == 1 {
                    f = f.add(&class(ring, "v1")).expect("same ring");
                }
                if j2 % 2 == 1 {
                    f = f.add(&class(ring, "v2")).expect("same ring");
                }
                times(f, 2 * mult);
            }
        }
    }
    acc
}

/// `(1+x1)^m10 (1+x2)^m01 (1+x1+x2)^m11` by plain square-and-multiply,
/// with `x = t` (Mod4) or `x = v` (Mod2).
pub fn profile_oracle(profile: &ParityProfile, cap: u64) -> Mod2Class {
    let ring = profile.ring();
    let [a, b] = profile.regime.gens();
    let cap = Some(cap);
    let f1 = class(ring, &format!("1 + {a}")).pow(&profile.m10, cap);
    let f2 = class(ring, &format!("1 + {b}")).pow(&profile.m01, cap);
    let f3 = class(ring, &format!("1 + {a} + {b}")).pow(&profile.m11, cap);
    f1.mul(&f2, cap)
        .and_then(|x| x.mul(&f3, cap))
        .expect("same ring")
}

/// Same product as [`profile_oracle`] through the Frobenius fast path.
pub fn total_sw_reduced(profile: &ParityProfile, cap: u64) -> Mod2Class {
    let ring = profile.ring();
    let [a, b] = profile.regime.gens();
    let cap = Some(cap);
    let x1 = class(ring, a);
    let x2 = class(ring, b);
    let x12 = x1.add(&x2).expect("same ring");
    let f1 = Mod2Class::one_plus_pow(&x1, &profile.m10, cap).expect("homogeneous");
    let f2 = Mod2Class::one_plus_pow(&x2, &profile.m01, cap).expect("homogeneous");
    let f3 = Mod2Class::one_plus_pow(&x12, &profile.m11, cap).expect("homogeneous");
    f1.mul(&f2, cap)
        .and_then(|x| x.mul(&f3, cap))
        .expect("same ring")
}

fn check_parity(profile: &ParityProfile) -> Result<()> {
    if profile.parity_ok() {
        Ok(())
    } else {
        Err(Error::Precondition(
            "w2 != 0: m10 + m11 and m01 + m11 must be even for the closed form".into(),
        ))
    }
}

/// `min(Ord2(m01+m11), Ord2(m10+m11), Ord2(m10+m01+m11) + 1)`.
pub fn k_index(profile: &ParityProfile) -> Result<Valuation> {
    check_parity(profile)?;
    let (a, b, c) = profile.sums();
    Ok(min_valuation([ord2(&b), ord2(&a), ord2(&c).plus(1)]))
}

/// Closed-form obstruction class. Mod4: degree `2^(k+1)`, Mod2: degree
/// `2^k`. `None` when the total class is 1.
pub fn obstruction_closed(profile: &ParityProfile) -> Result<Option<Obstruction>> {
    let k = match k_index(profile)? {
        Valuation::Infinite => return Ok(None),
        Valuation::Finite(k) => k,
    };
    let (a, b, c) = profile.sums();
    let ring = profile.ring();
    let shift = match profile.regime {
        Regime::Mod4 => k + 1,
        Regime::Mod2 => k,
    };
    if shift >= 63 {
        return Err(Error::Invalid(format!(
            "obstruction degree 2^{shift} does not fit in 64 bits"
        )));
    }
    let degree = 1u64 << shift;
    let (big, small) = (1u64 << k, 1u64 << (k - 1));
    let mut terms: Vec<[u64; 4]> = Vec::new();
    let pos = match profile.regime {
        Regime::Mod4 => (2usize, 3usize),
        Regime::Mod2 => (0, 1),
    };
    let mono = |e1: u64, e2: u64| {
        let mut e = [0u64; 4];
        e[pos.0] = e1;
        e[pos.1] = e2;
        e
    };
    if scaled_bit(&a, k) {
        terms.push(mono(big, 0));
    }
    if scaled_bit(&b, k) {
        terms.push(mono(0, big));
    }
    if scaled_bit(&c, k - 1) {
        terms.push(mono(small, small));
    }
    let n_gens = ring.generators().len();
    let class = Mod2Class::from_exponents(ring, terms.iter().map(|e| &e[..n_gens]));
    debug_assert!(!class.is_zero());
    debug_assert!(class.monomials().all(|m: &Monomial| m.degree() == degree));
    Ok(Some(Obstruction {
        degree,
        class,
        k: Some(k),
    }))
}

/// First nonzero positive-degree part of `total(cap)`, raising the cap
/// geometrically from 16 until something shows up or the cap passes
/// `2 * dim`.
pub fn first_nonzero_search<F>(dim: u64, total: F) -> Option<Obstruction>
where
    F: Fn(u64) -> Mod2Class,
{
    let limit = dim.saturating_mul(2).max(1);
    let mut cap = 16u64;
    loop {
        if let Some(o) = Obstruction::from_total(&total(cap.min(limit))) {
            return Some(o);
        }
        if cap >= limit {
            return None;
        }
        cap = cap.saturating_mul(2);
    }
}

/// Obstruction for a bare profile with no closed form available, from the
/// profile oracle. `dim` bounds the search.
pub fn obstruction_from_profile_oracle(profile: &ParityProfile, dim: u64) -> Option<Obstruction> {
    first_nonzero_search(dim, |cap| total_sw_reduced(profile, cap))
}

/// `profile` as plain integers, when they fit.
pub fn profile_u64(profile: &ParityProfile) -> Option<(u64, u64, u64)> {
    Some((
        profile.m10.to_u64()?,
        profile.m01.to_u64()?,
        profile.m11.to_u64()?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prof(a: u64, b: u64, c: u64, r: Regime) -> ParityProfile {
        ParityProfile::new(a, b, c, r)
    }

    #[test]
    fn canonical_pairs() {
        assert_eq!(canonical_pair(8, 5, 1).unwrap(), (3, 7));
        assert_eq!(canonical_pair(8, 1, 2).unwrap(), (1, 2));
        assert_eq!(canonical_pair(4, 2, 1).unwrap(), (2, 1));
        assert!(canonical_pair(8, 4, 0).is_err());
        assert!(canonical_pair(8, 0, 0).is_err());
        assert!(canonical_pair(5, 1, 0).is_err());
    }

    #[test]
    fn profile_from_rep_examples() {
        let r = BicyclicRep::new(8, [0; 4], [((1, 1), 2), ((3, 7), 1)]).unwrap();
        assert_eq!(r.profile(), prof(0, 0, 3, Regime::Mod4));
        let r = BicyclicRep::new(8, [0; 4], [((1, 2), 5)]).unwrap();
        assert_eq!(r.profile(), prof(5, 0, 0, Regime::Mod4));
        let r = BicyclicRep::new(8, [3, 0, 0, 0], []).unwrap();
        assert_eq!(r.profile(), prof(0, 0, 0, Regime::Mod4));
    }

    #[test]
    fn profile_from_character_examples() {
        let p = profile_from_character(4, &CharacterQuadruple::new(16, 0, 0, 0)).unwrap();
        assert_eq!(p, prof(2, 2, 2, Regime::Mod4));
        let p = profile_from_character(6, &CharacterQuadruple::new(8, 0, 0, 8)).unwrap();
        assert_eq!(p, prof(0, 0, 4, Regime::Mod2));
        assert!(profile_from_character(4, &CharacterQuadruple::new(4, 0, 0, 0)).is_err());
        assert!(profile_from_character(4, &CharacterQuadruple::new(8, 16, 0, 0)).is_err());
    }

    #[test]
    fn w1_w2_examples() {
        // sgn x 1 + sgn x sgn has determinant 1 x sgn
        let r = BicyclicRep::new(4, [0, 1, 0, 1], []).unwrap();
        let (w1, w2) = r.w1_w2();
        assert_eq!(w1.render(), "s2");
        assert_eq!(w2.render(), "s1*s2");
        let r = BicyclicRep::new(4, [0, 1, 1, 1], []).unwrap();
        let (w1, w2) = r.w1_w2();
        assert!(w1.is_zero());
        assert_eq!(w2.render(), "s1*s2");
        assert_eq!(total_sw_oracle(&r, 2).homogeneous(2), w2);
        let r = BicyclicRep::new(4, [0, 1, 0, 0], []).unwrap();
        assert_eq!(r.w1_w2().0.render(), "s1");
        let r = BicyclicRep::new(8, [2, 4, 2, 6], [((1, 1), 2), ((1, 2), 4)]).unwrap();
        assert!(r.is_w1_w2_zero());
    }

    #[test]
    fn oracle_examples() {
        let r4 = Regime::Mod4;
        let o = profile_oracle(&prof(2, 2, 0, r4), 100);
        assert_eq!(o.render(), "1 + t1^2 + t2^2 + t1^2*t2^2");
        let o = profile_oracle(&prof(0, 0, 2, r4), 100);
        assert_eq!(o.render(), "1 + t1^2 + t2^2");
        let o = profile_oracle(&prof(2, 2, 2, r4), 100);
        assert_eq!(o.homogeneous(8).render(), "t1^4 + t2^4 + t1^2*t2^2");
        let r = BicyclicRep::new(8, [0; 4], [((1, 0), 2), ((0, 1), 2)]).unwrap();
        assert_eq!(total_sw_oracle(&r, 100), profile_oracle(&r.profile(), 100));
    }

    #[test]
    fn reduced_examples() {
        let r4 = Regime::Mod4;
        assert_eq!(
            total_sw_reduced(&prof(0, 0, 4, r4), 8).render(),
            "1 + t1^4 + t2^4"
        );
        assert!(total_sw_reduced(&prof(0, 0, 0, r4), 8).is_one());
        assert_eq!(
            total_sw_reduced(&prof(2, 2, 2, r4), 40),
            profile_oracle(&prof(2, 2, 2, r4), 40)
        );
        // large entries stay cheap
        let big = prof(1_000_000, 1_000_000, 3_000_000, r4);
        let w = total_sw_reduced(&big, 64);
        assert_eq!(w, profile_oracle(&big, 64));
    }

    #[test]
    fn k_index_examples() {
        let r4 = Regime::Mod4;
        assert_eq!(k_index(&prof(0, 0, 4, r4)).unwrap(), Valuation::Finite(2));
        assert_eq!(k_index(&prof(2, 2, 0, r4)).unwrap(), Valuation::Finite(1));
        assert_eq!(k_index(&prof(0, 0, 0, r4)).unwrap(), Valuation::Infinite);
        assert!(k_index(&prof(1, 0, 0, r4)).is_err());
    }

    #[test]
    fn obstruction_examples() {
        let r4 = Regime::Mod4;
        let cases = [
            ((0, 0, 4), 8, "t1^4 + t2^4"),
            ((2, 2, 2), 8, "t1^4 + t2^4 + t1^2*t2^2"),
            ((2, 2, 0), 4, "t1^2 + t2^2"),
        ];
        for ((a, b, c), degree, class) in cases {
            let o = obstruction_closed(&prof(a, b, c, r4)).unwrap().unwrap();
            assert_eq!((o.degree, o.class.render().as_str()), (degree, class));
        }
        assert!(obstruction_closed(&prof(0, 0, 0, r4)).unwrap().is_none());
        let o = obstruction_closed(&prof(12, 12, 12, Regime::Mod2))
            .unwrap()
            .unwrap();
        assert_eq!(
            (o.degree, o.class.render()),
            (8, "v1^8 + v2^8 + v1^4*v2^4".to_string())
        );
    }

    #[test]
    fn fallback_for_chiral() {
        let r = BicyclicRep::new(4, [0, 1, 0, 0], [((1, 1), 3)]).unwrap();
        let o = r.obstruction().unwrap().unwrap();
        assert_eq!((o.degree, o.class.render()), (1, "s1".to_string()));
        let r = BicyclicRep::new(4, [5, 0, 0, 0], []).unwrap();
        assert!(r.obstruction().unwrap().is_none());
    }
}
