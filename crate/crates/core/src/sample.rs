//! Seeded random representations for the verification suites.

use rand::Rng;

use crate::bicyclic::{canonical_pair, BicyclicRep, Regime};
use crate::cyclic::CyclicRep;

/// Canonical pairs of `C_n x C_n` with the given index parities.
pub fn pairs_with_parity(n: u64, x: u64, y: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i % 2 != x || j % 2 != y {
                continue;
            }
            if let Ok(p) = canonical_pair(n, i, j) {
                if p == (i, j) {
                    out.push(p);
                }
            }
        }
    }
    out
}

/// Split `total` into random nonnegative parts over `slots` slots.
fn scatter<R: Rng>(rng: &mut R, total: u64, slots: usize) -> Vec<u64> {
    let mut parts = vec![0u64; slots];
    if slots == 0 {
        return parts;
    }
    let mut left = total;
    while left > 0 {
        let chunk = rng.gen_range(1..=left);
        parts[rng.gen_range(0..slots)] += chunk;
        left -= chunk;
    }
    parts
}

/// Parity targets: `2 * U(0..31)` each, plus a common odd part on a coin flip.
fn profile_targets<R: Rng>(rng: &mut R) -> [u64; 3] {
    let odd = u64::from(rng.gen_bool(0.5));
    [0; 3].map(|_| 2 * rng.gen_range(0..32u64) + odd)
}

/// Representation of `C_n x C_n`, `n = 0 mod 4`, with `w1 = w2 = 0`.
pub fn mod4_rep<R: Rng>(rng: &mut R, n: u64) -> BicyclicRep {
    assert_eq!(Regime::of(n).ok(), Some(Regime::Mod4));
    let targets = profile_targets(rng);
    let mut pairs = Vec::new();
    for (&(x, y), &mxy) in [(1, 0), (0, 1), (1, 1)].iter().zip(&targets) {
        let slots = pairs_with_parity(n, x, y);
        pairs.extend(slots.iter().copied().zip(scatter(rng, mxy, slots.len())));
    }
    let s00 = pairs_with_parity(n, 0, 0);
    let extra = rng.gen_range(0..8);
    pairs.extend(s00.iter().copied().zip(scatter(rng, extra, s00.len())));
    let m = [
        rng.gen_range(0..8),
        2 * rng.gen_range(0..4),
        2 * rng.gen_range(0..4),
        2 * rng.gen_range(0..4),
    ];
    BicyclicRep::new(n, m, pairs).expect("valid sample")
}

/// Representation of `C_n x C_n`, `n = 2 mod 4`, realizing the targets:
/// each `m_xy` is split between the one-dimensional summand and twice the
/// two-dimensional ones.
fn mod2_realize<R: Rng>(rng: &mut R, n: u64, targets: [u64; 3]) -> BicyclicRep {
    let mut m = [rng.gen_range(0..8), 0, 0, 0];
    let mut pairs = Vec::new();
    for (idx, (&(x, y), &mxy)) in [(1, 0), (0, 1), (1, 1)].iter().zip(&targets).enumerate() {
        let slots = pairs_with_parity(n, x, y);
        let two_dim = if slots.is_empty() {
            0
        } else {
            rng.gen_range(0..=mxy / 2)
        };
        m[idx + 1] = mxy - 2 * two_dim;
        pairs.extend(
            slots
                .iter()
                .copied()
                .zip(scatter(rng, two_dim, slots.len())),
        );
    }
    let s00 = pairs_with_parity(n, 0, 0);
    let extra = rng.gen_range(0..8);
    pairs.extend(s00.iter().copied().zip(scatter(rng, extra, s00.len())));
    BicyclicRep::new(n, m, pairs).expect("valid sample")
}

/// Representation of `C_n x C_n`, `n = 2 mod 4`, with `w1 = w2 = 0`,
/// by rejection on the sampled profile.
pub fn mod2_rep<R: Rng>(rng: &mut R, n: u64) -> BicyclicRep {
    assert_eq!(Regime::of(n).ok(), Some(Regime::Mod2));
    loop {
        let targets = profile_targets(rng);
        let rep = mod2_realize(rng, n, targets);
        if rep.is_w1_w2_zero() {
            return rep;
        }
    }
}

/// Any representation of `C_n x C_n` with small multiplicities.
pub fn any_bicyclic_rep<R: Rng>(rng: &mut R, n: u64) -> BicyclicRep {
    let m = [0; 4].map(|_| rng.gen_range(0..4));
    let mut pairs = Vec::new();
    for _ in 0..rng.gen_range(0..5) {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if canonical_pair(n, i, j).is_ok() {
            pairs.push(((i, j), rng.gen_range(1..4)));
        }
    }
    BicyclicRep::new(n, m, pairs).expect("valid sample")
}

pub fn cyclic_rep<R: Rng>(rng: &mut R, n: u64) -> CyclicRep {
    let mj: Vec<(u64, u64)> = (1..n / 2).map(|j| (j, rng.gen_range(0..6))).collect();
    CyclicRep::new(n, rng.gen_range(0..6), rng.gen_range(0..6), mj).expect("valid sample")
}
