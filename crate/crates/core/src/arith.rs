//! Exact 2-adic integer utilities.
//!
//! Everything here works on arbitrary-precision naturals: group orders and
//! representation dimensions for `GL2(F_q)` leave the 32-bit range quickly,
//! and multiplicities of summands of regular representations follow them.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// 2-adic valuation of a natural number. `ord2(0)` is `Infinite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinite,
}

impl Valuation {
    pub fn is_finite(self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(k) => Some(k),
            Valuation::Infinite => None,
        }
    }

    /// Shift by a constant; `Infinite` absorbs.
    pub fn plus(self, d: u64) -> Valuation {
        match self {
            Valuation::Finite(k) => Valuation::Finite(k + d),
            Valuation::Infinite => Valuation::Infinite,
        }
    }

    /// `self >= Finite(k)`, i.e. `2^k` divides the underlying number.
    pub fn at_least(self, k: u64) -> bool {
        self >= Valuation::Finite(k)
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinite => f.write_str("inf"),
        }
    }
}

pub fn ord2(a: &BigUint) -> Valuation {
    match a.trailing_zeros() {
        Some(k) => Valuation::Finite(k),
        None => Valuation::Infinite,
    }
}

pub fn ord2_u64(a: u64) -> Valuation {
    if a == 0 {
        Valuation::Infinite
    } else {
        Valuation::Finite(u64::from(a.trailing_zeros()))
    }
}

/// `C(m, n) mod 2` by Lucas: odd iff every binary digit of `n` is at most the
/// matching digit of `m`.
pub fn binom_mod2(m: &BigUint, n: &BigUint) -> bool {
    (n & m) == *n
}

pub fn binom_mod2_u64(m: u64, n: u64) -> bool {
    n & m == n
}

/// Number of carries when adding `r` and `n - r` in base 2, which is the
/// 2-adic valuation of `C(n, r)`.
pub fn v2_binom(n: &BigUint, r: &BigUint) -> Result<u64> {
    if r > n {
        return Err(Error::Precondition(format!(
            "v2_binom needs r <= n, got r = {r}, n = {n}"
        )));
    }
    let s = n - r;
    let width = n.bits().max(1);
    let mut carry = false;
    let mut carries = 0u64;
    for i in 0..width {
        let a = r.bit(i);
        let b = s.bit(i);
        let ones = u8::from(a) + u8::from(b) + u8::from(carry);
        carry = ones >= 2;
        if carry {
            carries += 1;
        }
    }
    Ok(carries)
}

pub fn popcount(n: &BigUint) -> u64 {
    n.count_ones()
}

/// `(n / 2^k) mod 2`, which equals `C(n, 2^k) mod 2` when `2^k | n`.
pub fn halved_binom_bit(n: &BigUint, k: u64) -> Result<bool> {
    if n.is_zero() {
        return Err(Error::Precondition("halved_binom_bit needs n > 0".into()));
    }
    if !ord2(n).at_least(k) {
        return Err(Error::Precondition(format!("2^{k} does not divide {n}")));
    }
    Ok(n.bit(k))
}

/// Whether `C(m, 2^i)` is even for every `i = 0..=k`. Evaluated digit by
/// digit through Lucas; coincides with `2^(k+1) | m`.
pub fn binomind_holds(m: &BigUint, k: u64) -> bool {
    (0..=k).all(|i| {
        let pow = BigUint::one() << i;
        !binom_mod2(m, &pow)
    })
}

/// `a / 2^k` read mod 2, for an `a` known to be divisible by `2^k`.
pub(crate) fn scaled_bit(a: &BigUint, k: u64) -> bool {
    debug_assert!(ord2(a).at_least(k));
    a.bit(k)
}

/// Minimum of a list of valuations; the empty minimum is `Infinite`.
pub fn min_valuation<I: IntoIterator<Item = Valuation>>(vals: I) -> Valuation {
    vals.into_iter().min().unwrap_or(Valuation::Infinite)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn ord2_examples() {
        assert_eq!(ord2(&big(0)), Valuation::Infinite);
        assert_eq!(ord2(&big(1)), Valuation::Finite(0));
        assert_eq!(ord2(&big(48)), Valuation::Finite(4));
        assert_eq!(ord2_u64(48), Valuation::Finite(4));
        assert!(Valuation::Finite(u64::MAX) < Valuation::Infinite);
    }

    #[test]
    fn binom_mod2_examples() {
        for m in 0..20 {
            assert!(binom_mod2(&big(m), &big(0)));
        }
        assert!(!binom_mod2(&big(5), &big(2)));
        assert!(binom_mod2(&big(7), &big(3)));
        // n > m gives zero
        assert!(!binom_mod2(&big(3), &big(4)));
    }

    #[test]
    fn v2_binom_examples() {
        assert_eq!(v2_binom(&big(6), &big(3)).unwrap(), 2);
        assert_eq!(v2_binom(&big(11), &big(0)).unwrap(), 0);
        assert_eq!(v2_binom(&big(0), &big(0)).unwrap(), 0);
        assert!(v2_binom(&big(3), &big(4)).is_err());
    }

    #[test]
    fn popcount_examples() {
        assert_eq!(popcount(&big(0)), 0);
        assert_eq!(popcount(&big(3)), 2);
        assert_eq!(popcount(&big(12)), 2);
    }

    #[test]
    fn halved_binom_examples() {
        assert!(halved_binom_bit(&big(12), 2).unwrap());
        assert!(!halved_binom_bit(&big(8), 1).unwrap());
        for k in 0..20 {
            assert!(halved_binom_bit(&(big(1) << k), k).unwrap());
        }
        assert!(halved_binom_bit(&big(6), 2).is_err());
        assert!(halved_binom_bit(&big(0), 0).is_err());
    }

    #[test]
    fn binomind_examples() {
        assert!(binomind_holds(&big(8), 2));
        assert!(!binomind_holds(&big(8), 3));
        for k in 0..12 {
            assert!(binomind_holds(&big(0), k));
        }
    }

    #[test]
    fn valuation_min() {
        let v = min_valuation([
            Valuation::Infinite,
            Valuation::Finite(3),
            Valuation::Finite(1),
        ]);
        assert_eq!(v, Valuation::Finite(1));
        assert_eq!(min_valuation([]), Valuation::Infinite);
        assert_eq!(Valuation::Infinite.plus(1), Valuation::Infinite);
    }
}
