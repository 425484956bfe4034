//! Seeded verification suites: every closed form against its oracle.
//!
//! A suite is a list of checks; a sampled check runs once per sample with
//! its own RNG stream, so results do not depend on scheduling. Cases fan out
//! over rayon and are merged back in case order.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{
    binom_mod2, binom_mod2_u64, binomind_holds, halved_binom_bit, ord2, ord2_u64, popcount,
    v2_binom, Valuation,
};
use crate::bicyclic::{
    k_index, obstruction_closed, profile_from_character, profile_oracle, total_sw_oracle,
    total_sw_reduced, BicyclicRep, ParityProfile, Regime,
};
use crate::cyclic::{m_d_from_character, CyclicRep};
use crate::gl2::{
    discrepancy_report, emit_table, gl2_k, theorem_obstruction, DiscrepancyKind, FieldParam, Oir,
    OrthRep,
};
use crate::ring::{Mod2Class, Obstruction, RingDescriptor};
use crate::sample;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Arith,
    Ring,
    Cyclic,
    Bicyclic,
    Gl2,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Arith,
        Suite::Ring,
        Suite::Cyclic,
        Suite::Bicyclic,
        Suite::Gl2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Arith => "arith",
            Suite::Ring => "ring",
            Suite::Cyclic => "cyclic",
            Suite::Bicyclic => "bicyclic",
            Suite::Gl2 => "gl2",
        }
    }
}

type Outcome = std::result::Result<(), String>;

enum Runs {
    Once(fn() -> Outcome),
    Sampled(fn(&mut ChaCha8Rng) -> Outcome),
}

struct Check {
    suite: Suite,
    name: &'static str,
    runs: Runs,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub suite: Suite,
    pub name: String,
    pub cases: usize,
    pub failed: usize,
    /// First few failure messages, in case order.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }
}

const MAX_MESSAGES: usize = 5;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lib<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// Run the selected suites. Sampled checks run `samples` times each.
pub fn run(suites: &[Suite], seed: u64, samples: usize) -> VerifyReport {
    let wanted: BTreeSet<Suite> = suites.iter().copied().collect();
    let checks: Vec<Check> = all_checks()
        .into_iter()
        .filter(|c| wanted.contains(&c.suite))
        .collect();
    let mut cases: Vec<(usize, u64)> = Vec::new();
    for (i, c) in checks.iter().enumerate() {
        let n = match c.runs {
            Runs::Once(_) => 1,
            Runs::Sampled(_) => samples,
        };
        cases.extend((0..n as u64).map(|r| (i, r)));
    }
    let outcomes: Vec<Outcome> = cases
        .par_iter()
        .enumerate()
        .map(|(idx, &(ci, _))| match checks[ci].runs {
            Runs::Once(f) => f(),
            Runs::Sampled(f) => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(idx as u64);
                f(&mut rng)
            }
        })
        .collect();
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|c| CheckReport {
            suite: c.suite,
            name: c.name.to_string(),
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        })
        .collect();
    for (&(ci, run), outcome) in cases.iter().zip(outcomes) {
        let r = &mut reports[ci];
        r.cases += 1;
        if let Err(msg) = outcome {
            r.failed += 1;
            if r.failures.len() < MAX_MESSAGES {
                r.failures.push(format!("case {run}: {msg}"));
            }
        }
    }
    VerifyReport {
        seed,
        samples,
        checks: reports,
    }
}

fn all_checks() -> Vec<Check> {
    use Runs::{Once, Sampled};
    let c = |suite, name, runs| Check { suite, name, runs };
    vec![
        c(
            Suite::Arith,
            "lucas matches big-integer binomials",
            Once(|| lucas_exhaustive(256)),
        ),
        c(
            Suite::Arith,
            "v2 C(2n,n) = popcount(n)",
            Once(|| kummer_exhaustive(1024)),
        ),
        c(
            Suite::Arith,
            "binomind iff 2^(k+1) | m",
            Once(|| binomind_exhaustive(4096, 10)),
        ),
        c(
            Suite::Arith,
            "carry count is the 2-adic valuation",
            Sampled(carries_sample),
        ),
        c(
            Suite::Arith,
            "halved bit is C(m, 2^k) mod 2",
            Sampled(halved_sample),
        ),
        c(Suite::Arith, "ord2 is additive", Sampled(ord2_sample)),
        c(Suite::Ring, "ring axioms", Sampled(ring_axioms_sample)),
        c(
            Suite::Ring,
            "squaring is additive",
            Sampled(frobenius_sample),
        ),
        c(
            Suite::Ring,
            "render and parse round-trip",
            Sampled(round_trip_sample),
        ),
        c(
            Suite::Ring,
            "capped products agree with truncation",
            Sampled(cap_sample),
        ),
        c(
            Suite::Ring,
            "(1+x)^m by bits matches repeated products",
            Sampled(one_plus_pow_sample),
        ),
        c(
            Suite::Cyclic,
            "piecewise formulas match the product",
            Sampled(cyclic_sample),
        ),
        c(
            Suite::Bicyclic,
            "mod-4 closed form matches the oracle",
            Sampled(bicyclic_mod4_sample),
        ),
        c(
            Suite::Bicyclic,
            "mod-2 closed form matches the oracle",
            Sampled(bicyclic_mod2_sample),
        ),
        c(
            Suite::Bicyclic,
            "character route gives the profile",
            Sampled(character_sample),
        ),
        c(
            Suite::Bicyclic,
            "mod-4 w1, w2 match the oracle",
            Sampled(w1_w2_sample),
        ),
        c(
            Suite::Bicyclic,
            "reduced expansion matches the profile oracle",
            Sampled(reduced_sample),
        ),
        c(
            Suite::Bicyclic,
            "two-term k equals three-term k",
            Once(|| k_formula_exhaustive(128)),
        ),
        c(Suite::Gl2, "catalogue is complete", Once(gl2_catalogue)),
        c(Suite::Gl2, "tables are oracle-verified", Once(gl2_tables)),
        c(
            Suite::Gl2,
            "only known discrepancies",
            Once(gl2_discrepancies),
        ),
        c(
            Suite::Gl2,
            "regular representation obstruction",
            Once(gl2_regular),
        ),
        c(
            Suite::Gl2,
            "sums of OIRs match the oracle",
            Sampled(gl2_sum_sample),
        ),
    ]
}

pub const GL2_FIELDS: [u64; 12] = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29];

/// Lucas against Pascal's triangle in big integers, `0 <= r <= n <= limit`.
pub fn lucas_exhaustive(limit: u64) -> Outcome {
    let mut row = vec![BigUint::one()];
    for n in 0..=limit {
        for (r, c) in row.iter().enumerate() {
            let lucas = binom_mod2(&BigUint::from(n), &BigUint::from(r));
            ensure(
                lucas == c.bit(0) && lucas == binom_mod2_u64(n, r as u64),
                || format!("C({n},{r}) mod 2"),
            )?;
        }
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigUint::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigUint::one());
        row = next;
    }
    Ok(())
}

/// `v2(C(2n,n)) = popcount(n)`, with the central binomial built exactly.
pub fn kummer_exhaustive(limit: u64) -> Outcome {
    let mut central = BigUint::one();
    for n in 0..=limit {
        let nb = BigUint::from(n);
        let direct = ord2(&central).finite().unwrap_or(u64::MAX);
        let carries = v2_binom(&BigUint::from(2 * n), &nb).map_err(|e| e.to_string())?;
        ensure(direct == popcount(&nb) && carries == direct, || {
            format!(
                "n = {n}: direct {direct}, popcount {}, carries {carries}",
                popcount(&nb)
            )
        })?;
        // C(2n+2, n+1) = C(2n, n) (2n+1)(2n+2) / (n+1)^2
        central = central * ((2 * n + 1) * (2 * n + 2)) / ((n + 1) * (n + 1));
    }
    Ok(())
}

pub fn binomind_exhaustive(m_limit: u64, k_limit: u64) -> Outcome {
    for m in 0..=m_limit {
        for k in 0..=k_limit {
            let divides = m % (1u64 << (k + 1)) == 0;
            ensure(binomind_holds(&BigUint::from(m), k) == divides, || {
                format!("m = {m}, k = {k}")
            })?;
        }
    }
    Ok(())
}

fn carries_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = rng.gen_range(0..400u64);
    let r = rng.gen_range(0..=n);
    let mut c = BigUint::one();
    for i in 0..r {
        c = c * (n - i) / (i + 1);
    }
    let direct = ord2(&c).finite().unwrap_or(u64::MAX);
    let carries = lib(v2_binom(&BigUint::from(n), &BigUint::from(r)))?;
    ensure(direct == carries, || {
        format!("v2 C({n},{r}): {direct} vs {carries}")
    })
}

fn halved_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let k = rng.gen_range(0..20u64);
    let m = BigUint::from(rng.gen_range(1..1u64 << 20)) << k;
    let bit = lib(halved_binom_bit(&m, k))?;
    let lucas = binom_mod2(&m, &(BigUint::one() << k));
    ensure(bit == lucas, || format!("m = {m}, k = {k}"))
}

fn ord2_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let a: u64 = rng.gen_range(0..1 << 30);
    let b: u64 = rng.gen_range(0..1 << 30);
    let prod = ord2(&(BigUint::from(a) * b));
    let sum = match (ord2_u64(a), ord2_u64(b)) {
        (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
        _ => Valuation::Infinite,
    };
    ensure(prod == sum, || format!("ord2({a} * {b})"))
}

const RINGS: [RingDescriptor; 4] = [
    RingDescriptor::CyclicMod4,
    RingDescriptor::CyclicMod2,
    RingDescriptor::BicyclicMod4,
    RingDescriptor::BicyclicMod2,
];

/// Random class with exponents below 6 (square-zero generators at most 1).
pub fn random_class<R: Rng>(rng: &mut R, ring: RingDescriptor) -> Mod2Class {
    let gens = ring.generators();
    let terms: Vec<Vec<u64>> = (0..rng.gen_range(0..6))
        .map(|_| {
            gens.iter()
                .map(|g| rng.gen_range(0..if g.square_zero { 2 } else { 6 }))
                .collect()
        })
        .collect();
    Mod2Class::from_exponents(ring, terms.iter().map(Vec::as_slice))
}

fn random_ring(rng: &mut ChaCha8Rng) -> RingDescriptor {
    RINGS[rng.gen_range(0..RINGS.len())]
}

fn ring_axioms_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let ring = random_ring(rng);
    let [a, b, c] = [0; 3].map(|_| random_class(rng, ring));
    let mul = |x: &Mod2Class, y: &Mod2Class| x.mul(y, None).expect("same ring");
    let add = |x: &Mod2Class, y: &Mod2Class| x.add(y).expect("same ring");
    ensure(mul(&a, &b) == mul(&b, &a), || format!("ab != ba: {a}, {b}"))?;
    ensure(mul(&mul(&a, &b), &c) == mul(&a, &mul(&b, &c)), || {
        format!("associativity: {a}, {b}, {c}")
    })?;
    ensure(
        mul(&a, &add(&b, &c)) == add(&mul(&a, &b), &mul(&a, &c)),
        || format!("distributivity: {a}, {b}, {c}"),
    )?;
    ensure(add(&a, &a).is_zero(), || format!("a + a != 0: {a}"))?;
    ensure(mul(&a, &Mod2Class::one(ring)) == a, || {
        format!("a * 1 != a: {a}")
    })
}

fn frobenius_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let ring = random_ring(rng);
    let a = random_class(rng, ring);
    let b = random_class(rng, ring);
    let lhs = a.add(&b).expect("same ring").square(None);
    let rhs = a.square(None).add(&b.square(None)).expect("same ring");
    ensure(lhs == rhs, || format!("(a+b)^2: {a}, {b}"))?;
    ensure(
        a.square(None) == a.mul(&a, None).expect("same ring"),
        || format!("a^2: {a}"),
    )
}

fn round_trip_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let ring = random_ring(rng);
    let a = random_class(rng, ring);
    let back = lib(Mod2Class::parse(ring, &a.render()))?;
    ensure(back == a, || format!("{a} parsed back as {back}"))
}

fn cap_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let ring = random_ring(rng);
    let a = random_class(rng, ring);
    let b = random_class(rng, ring);
    let cap = rng.gen_range(0..12);
    let capped = a.mul(&b, Some(cap)).expect("same ring");
    let full = a.mul(&b, None).expect("same ring").truncate(Some(cap));
    ensure(capped == full, || format!("cap {cap}: {a} * {b}"))
}

fn one_plus_pow_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let ring = random_ring(rng);
    let gens = ring.generators();
    let g = gens[rng.gen_range(0..gens.len())];
    let x = lib(Mod2Class::generator(ring, g.name))?;
    let m = rng.gen_range(0..80u64);
    let cap = rng.gen_range(0..40);
    let fast = lib(Mod2Class::one_plus_pow(&x, &BigUint::from(m), Some(cap)))?;
    let one_x = Mod2Class::one(ring).add(&x).expect("same ring");
    let mut slow = Mod2Class::one(ring);
    for _ in 0..m {
        slow = slow.mul(&one_x, Some(cap)).expect("same ring");
    }
    ensure(fast == slow, || format!("(1 + {x})^{m} to degree {cap}"))
}

/// Piecewise `w_k` and the closed total class against the product of the
/// summands' total classes, plus the character route to `m_d` and the
/// vanishing bound.
pub fn check_cyclic(rep: &CyclicRep) -> Outcome {
    let brute = rep.total_sw_brute(None);
    ensure(rep.total_sw(None) == brute, || {
        format!("{rep:?}: closed total")
    })?;
    let top = brute.max_degree().unwrap_or(0);
    for k in 0..=rep.dim().max(top) {
        ensure(rep.w_piecewise(k) == brute.homogeneous(k), || {
            format!("{rep:?}: w_{k}")
        })?;
    }
    let (bound, md) = match rep.ring() {
        RingDescriptor::CyclicMod4 => (2 * rep.m_d() + rep.ms() % 2, rep.m_d()),
        _ => (rep.m_d_prime(), rep.m_d_prime()),
    };
    ensure(top == bound, || {
        format!("{rep:?}: top degree {top}, expected {bound}")
    })?;
    let chi_one = lib(rep.character_at(0))?;
    let chi_half = lib(rep.character_at(rep.n() / 2))?;
    let from_char = lib(m_d_from_character(rep.n(), chi_one, chi_half))?;
    ensure(from_char == md, || {
        format!("{rep:?}: m_d from character {from_char}, expected {md}")
    })
}

fn cyclic_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = [2u64, 4, 6, 8, 10, 12, 16, 20][rng.gen_range(0..8)];
    check_cyclic(&sample::cyclic_rep(rng, n))
}

/// The closed-form obstruction of a `w1 = w2 = 0` representation against
/// the full product over its summands: all lower classes vanish and the
/// first nonzero one matches in degree and class.
pub fn check_bicyclic(rep: &BicyclicRep) -> Outcome {
    let closed = lib(obstruction_closed(&rep.profile()))?;
    let cap = closed.as_ref().map_or(2 * rep.dim(), |o| o.degree);
    let oracle = total_sw_oracle(rep, cap);
    let found = Obstruction::from_total(&oracle);
    match (&closed, &found) {
        (Some(a), Some(b)) if a.same_class(b) => Ok(()),
        (None, None) => Ok(()),
        _ => Err(format!("{rep:?}: closed {closed:?}, oracle {found:?}")),
    }
}

fn bicyclic_mod4_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = [4u64, 8, 12][rng.gen_range(0..3)];
    check_bicyclic(&sample::mod4_rep(rng, n))
}

fn bicyclic_mod2_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = [2u64, 6, 10][rng.gen_range(0..3)];
    check_bicyclic(&sample::mod2_rep(rng, n))
}

fn character_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = 2 * rng.gen_range(1..7u64);
    let rep = sample::any_bicyclic_rep(rng, n);
    let p = lib(profile_from_character(n, &rep.character()))?;
    ensure(p == rep.profile(), || format!("{rep:?}: {p:?}"))?;
    if rep.regime() == Regime::Mod2 {
        let cap = 12;
        ensure(
            total_sw_oracle(&rep, cap) == profile_oracle(&p, cap),
            || format!("{rep:?}: mod-2 total is not a function of the profile"),
        )?;
    }
    Ok(())
}

fn w1_w2_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let n = [4u64, 8, 12][rng.gen_range(0..3)];
    let rep = sample::any_bicyclic_rep(rng, n);
    let oracle = total_sw_oracle(&rep, 2);
    let (w1, w2) = rep.w1_w2();
    ensure(
        oracle.homogeneous(1) == w1 && oracle.homogeneous(2) == w2,
        || format!("{rep:?}"),
    )
}

fn reduced_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let regime = if rng.gen_bool(0.5) {
        Regime::Mod4
    } else {
        Regime::Mod2
    };
    let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..200u64));
    let p = ParityProfile::new(a, b, c, regime);
    ensure(total_sw_reduced(&p, 40) == profile_oracle(&p, 40), || {
        format!("{p:?}")
    })
}

/// On every profile with `m10 = m01`, entries up to `limit`, where the
/// closed forms apply, the two-term `k` equals the three-term `k` and the
/// two obstruction formulas agree.
pub fn k_formula_exhaustive(limit: u64) -> Outcome {
    for regime in [Regime::Mod4, Regime::Mod2] {
        for m01 in 0..=limit {
            for m11 in 0..=limit {
                if (m01 + m11) % 2 == 1 {
                    continue;
                }
                let p = ParityProfile::new(m01, m01, m11, regime);
                let two = lib(gl2_k(&p))?;
                let three = lib(k_index(&p))?;
                ensure(two == three, || {
                    format!("({m01},{m01},{m11}): {two} vs {three}")
                })?;
                let a = lib(theorem_obstruction(&p))?;
                let b = lib(obstruction_closed(&p))?;
                ensure(a == b, || {
                    format!("({m01},{m01},{m11}) {regime:?}: {a:?} vs {b:?}")
                })?;
            }
        }
    }
    Ok(())
}

fn gl2_catalogue() -> Outcome {
    for q in GL2_FIELDS {
        let f = lib(FieldParam::new(q))?;
        let irreps = f.irreps();
        let sum_sq: BigUint = irreps.iter().map(|&i| BigUint::from(f.dim(i)).pow(2)).sum();
        ensure(sum_sq == f.order(), || {
            format!("q = {q}: sum of dim^2 is {sum_sq}")
        })?;
        ensure(irreps.len() as u64 == q * q - 1, || {
            format!("q = {q}: {} classes", irreps.len())
        })?;
        for oir in f.oirs() {
            lib(OrthRep::single(f, oir).profile()).map_err(|e| format!("q = {q}, {oir}: {e}"))?;
        }
    }
    Ok(())
}

fn gl2_tables() -> Outcome {
    for q in GL2_FIELDS {
        for which in [1, 2, 4] {
            let t = lib(emit_table(q, which))?;
            for row in &t.rows {
                ensure(row.verified, || {
                    format!("q = {q}, table {which}: {} {}", row.family, row.variant)
                })?;
            }
        }
    }
    Ok(())
}

fn gl2_discrepancies() -> Outcome {
    for q in GL2_FIELDS {
        for d in lib(discrepancy_report(q))? {
            ensure(d.kind != DiscrepancyKind::Unlisted, || {
                format!(
                    "q = {q}: table {} {} {} {}: printed {}, computed {}",
                    d.table, d.family, d.variant, d.column, d.printed, d.computed
                )
            })?;
        }
    }
    Ok(())
}

/// `nu(G) = Ord2(|G|)`: the regular representation's obstruction sits in
/// degree `2^(Ord2|G| - 1)`, and the closed form agrees with the oracle.
pub fn check_regular(q: u64) -> Outcome {
    let f = lib(FieldParam::new(q))?;
    let reg = OrthRep::regular(f);
    let nu = ord2(&f.order()).finite().expect("nonzero order");
    let o = lib(reg.obstruction(None))?;
    let o = o
        .obstruction
        .ok_or_else(|| format!("q = {q}: no obstruction"))?;
    ensure(o.degree == 1 << (nu - 1), || {
        format!("q = {q}: degree {}, nu = {nu}", o.degree)
    })?;
    let oracle =
        lib(reg.obstruction_oracle())?.ok_or_else(|| format!("q = {q}: oracle found none"))?;
    ensure(o.same_class(&oracle), || {
        format!("q = {q}: {o:?} vs {oracle:?}")
    })
}

fn gl2_regular() -> Outcome {
    GL2_FIELDS.iter().try_for_each(|&q| check_regular(q))
}

fn gl2_sum_sample(rng: &mut ChaCha8Rng) -> Outcome {
    let q = GL2_FIELDS[rng.gen_range(0..GL2_FIELDS.len())];
    let f = lib(FieldParam::new(q))?;
    let oirs: Vec<Oir> = f.oirs();
    let mut rep = OrthRep::zero(f);
    for _ in 0..rng.gen_range(1..5) {
        let oir = oirs[rng.gen_range(0..oirs.len())];
        rep = rep.plus(oir, BigUint::from(rng.gen_range(1..4u64)));
    }
    check_gl2_sum(&rep)
}

/// Closed form against the profile oracle for an achiral spinorial sum.
pub fn check_gl2_sum(rep: &OrthRep) -> Outcome {
    if rep.w1() || !lib(rep.is_spinorial())? {
        return Ok(());
    }
    let o = lib(rep.obstruction(None))?.obstruction;
    let oracle = lib(rep.obstruction_oracle())?;
    let same = match (&o, &oracle) {
        (Some(a), Some(b)) => a.same_class(b),
        (None, None) => true,
        _ => false,
    };
    ensure(same, || {
        format!("{:?}: closed {o:?}, oracle {oracle:?}", rep.terms())
    })?;
    ensure(!rep.dim().is_zero(), || "empty representation".into())
}
