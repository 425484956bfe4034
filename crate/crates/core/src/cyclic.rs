//! Real representations of the cyclic group `C_n`, `n` even.
//!
//! Irreducible real summands are the trivial character, `sgn`, and the
//! realizations of `chi^j` for `0 < j < n/2`. Only the parity data of the
//! summands reaches the total Stiefel-Whitney class: `m_s mod 2` and
//! `m_d`, the multiplicity of odd-index characters.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::arith::binom_mod2_u64;
use crate::error::{Error, Result};
use crate::ring::{Mod2Class, Monomial, Obstruction, RingDescriptor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicRep {
    n: u64,
    m0: u64,
    ms: u64,
    mj: BTreeMap<u64, u64>,
}

impl CyclicRep {
    /// `mj` maps `j` in `1..n/2` to the multiplicity of the realized `chi^j`.
    /// Repeated indices add up; zero multiplicities are dropped.
    pub fn new<I>(n: u64, m0: u64, ms: u64, mj: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        if n < 2 || n % 2 != 0 {
            return Err(Error::Precondition(format!(
                "n must be even and at least 2, got {n}"
            )));
        }
        let mut map = BTreeMap::new();
        for (j, mult) in mj {
            if j == 0 || j >= n / 2 {
                return Err(Error::Invalid(format!(
                    "character index {j} outside 1..{} for n = {n}",
                    n / 2
                )));
            }
            if mult > 0 {
                *map.entry(j).or_insert(0) += mult;
            }
        }
        Ok(CyclicRep { n, m0, ms, mj: map })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m0(&self) -> u64 {
        self.m0
    }

    pub fn ms(&self) -> u64 {
        self.ms
    }

    pub fn mj(&self) -> &BTreeMap<u64, u64> {
        &self.mj
    }

    pub fn ring(&self) -> RingDescriptor {
        RingDescriptor::cyclic(self.n).expect("n validated at construction")
    }

    pub fn dim(&self) -> u64 {
        self.m0 + self.ms + 2 * self.mj.values().sum::<u64>()
    }

    /// Multiplicity of odd-index two-dimensional summands.
    pub fn m_d(&self) -> u64 {
        self.mj
            .iter()
            .filter(|(j, _)| *j % 2 == 1)
            .map(|(_, m)| m)
            .sum()
    }

    /// `m_s + 2 m_d`, the exponent of `(1 + v)` when `n = 2 mod 4`.
    pub fn m_d_prime(&self) -> u64 {
        self.ms + 2 * self.m_d()
    }

    /// Character value at the element `g` of `C_n` (taken mod `n`), for
    /// `g = 0` or `g = n/2`, the only points where it is always an integer.
    pub fn character_at(&self, g: u64) -> Result<i128> {
        let g = g % self.n;
        let half = self.n / 2;
        if g != 0 && g != half {
            return Err(Error::Invalid(format!(
                "character values are only tabulated at 0 and {half}"
            )));
        }
        let sign = |j: u64| -> i128 {
            if g == half && j % 2 == 1 {
                -1
            } else {
                1
            }
        };
        let mut value = i128::from(self.m0) + sign(half) * i128::from(self.ms);
        for (&j, &m) in &self.mj {
            value += 2 * sign(j) * i128::from(m);
        }
        Ok(value)
    }

    /// Closed-form total class: `(1+s)^(m_s mod 2) (1+t)^(m_d)` or
    /// `(1+v)^(m_s + 2 m_d)`.
    pub fn total_sw(&self, cap: Option<u64>) -> Mod2Class {
        let ring = self.ring();
        match ring {
            RingDescriptor::CyclicMod4 => {
                let t = Mod2Class::generator(ring, "t").expect("generator");
                let tpart = Mod2Class::one_plus_pow(&t, &BigUint::from(self.m_d()), cap)
                    .expect("homogeneous");
                if self.ms % 2 == 1 {
                    let one_s = Mod2Class::parse(ring, "1 + s").expect("literal");
                    one_s.mul(&tpart, cap).expect("same ring")
                } else {
                    tpart
                }
            }
            _ => {
                let v = Mod2Class::generator(ring, "v").expect("generator");
                Mod2Class::one_plus_pow(&v, &BigUint::from(self.m_d_prime()), cap)
                    .expect("homogeneous")
            }
        }
    }

    /// Product of the total classes of the individual summands, one factor
    /// per copy. Independent of the closed form; used as its oracle.
    pub fn total_sw_brute(&self, cap: Option<u64>) -> Mod2Class {
        let ring = self.ring();
        let mut acc = Mod2Class::one(ring);
        let mut times = |factor: &Mod2Class, count: u64| {
            for _ in 0..count {
                acc = acc.mul(factor, cap).expect("same ring");
            }
        };
        match ring {
            RingDescriptor::CyclicMod4 => {
                let one_s = Mod2Class::parse(ring, "1 + s").expect("literal");
                let one_t = Mod2Class::parse(ring, "1 + t").expect("literal");
                times(&one_s, self.ms);
                for (&j, &m) in &self.mj {
                    if j % 2 == 1 {
                        times(&one_t, m);
                    }
                }
            }
            _ => {
                // sgn restricts to the nontrivial character of C_2; an
                // odd-index chi^j restricts to two copies of it.
                let one_v = Mod2Class::parse(ring, "1 + v").expect("literal");
                times(&one_v, self.ms);
                for (&j, &m) in &self.mj {
                    if j % 2 == 1 {
                        times(&one_v, 2 * m);
                    }
                }
            }
        }
        acc
    }

    /// `w_k` read off the piecewise binomial formulas.
    pub fn w_piecewise(&self, k: u64) -> Mod2Class {
        let ring = self.ring();
        match ring {
            RingDescriptor::CyclicMod4 => {
                let md = self.m_d();
                let (coeff, exps) = if k % 2 == 0 {
                    (binom_mod2_u64(md, k / 2), [0, k / 2])
                } else {
                    let coeff = binom_mod2_u64(md, (k - 1) / 2) && self.ms % 2 == 1;
                    (coeff, [1, (k - 1) / 2])
                };
                if coeff {
                    Mod2Class::from_monomial(ring, Monomial::new(ring, &exps).expect("valid"))
                } else {
                    Mod2Class::zero(ring)
                }
            }
            _ => {
                if binom_mod2_u64(self.m_d_prime(), k) {
                    Mod2Class::power_of(ring, "v", k).expect("generator")
                } else {
                    Mod2Class::zero(ring)
                }
            }
        }
    }

    pub fn obstruction(&self) -> Option<Obstruction> {
        Obstruction::from_total(&self.total_sw(None))
    }
}

/// `m_d` (for `n = 0 mod 4`) or `m_s + 2 m_d` (for `n = 2 mod 4`) from the
/// character values at the identity and at the element of order 2.
pub fn m_d_from_character(n: u64, chi_one: i128, chi_half: i128) -> Result<u64> {
    let ring = RingDescriptor::cyclic(n)?;
    let divisor = match ring {
        RingDescriptor::CyclicMod4 => 4,
        _ => 2,
    };
    let diff = chi_one - chi_half;
    if diff < 0 || diff % divisor != 0 {
        return Err(Error::Precondition(format!(
            "({chi_one}, {chi_half}) is not the character of a real representation of C_{n}"
        )));
    }
    u64::try_from(diff / divisor).map_err(|_| Error::Invalid("character values too large".into()))
}
