use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use swclass::arith::binom_mod2;
use swclass::bicyclic::{
    obstruction_closed, profile_from_character, profile_oracle, total_sw_oracle, total_sw_reduced,
    BicyclicRep, ParityProfile, Regime,
};
use swclass::ring::{Mod2Class, Obstruction};
use swclass::sample;

fn check_against_oracle(rep: &BicyclicRep) {
    let profile = rep.profile();
    let closed = obstruction_closed(&profile).unwrap();
    match closed {
        Some(o) => {
            assert!(o.degree.is_power_of_two());
            let oracle = total_sw_oracle(rep, o.degree);
            let found = Obstruction::from_total(&oracle).expect("oracle nonzero");
            assert!(
                found.same_class(&o),
                "{rep:?}: closed {o:?} oracle {found:?}"
            );
        }
        None => {
            let oracle = total_sw_oracle(rep, 2 * rep.dim());
            assert!(oracle.is_one(), "{rep:?}");
        }
    }
}

#[test]
fn mod4_closed_form_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [4u64, 8, 12] {
        for _ in 0..100 {
            check_against_oracle(&sample::mod4_rep(&mut rng, n));
        }
    }
}

#[test]
fn mod2_closed_form_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for n in [2u64, 6, 10] {
        for _ in 0..100 {
            check_against_oracle(&sample::mod2_rep(&mut rng, n));
        }
    }
}

#[test]
fn mod2_oracle_depends_only_on_profile() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for n in [2u64, 6, 10] {
        for _ in 0..50 {
            let rep = sample::any_bicyclic_rep(&mut rng, n);
            assert_eq!(
                total_sw_oracle(&rep, 24),
                profile_oracle(&rep.profile(), 24)
            );
        }
    }
}

#[test]
fn mod4_w1_w2_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for n in [4u64, 8, 12] {
        for _ in 0..100 {
            let rep = sample::any_bicyclic_rep(&mut rng, n);
            let oracle = total_sw_oracle(&rep, 2);
            let (w1, w2) = rep.w1_w2();
            assert_eq!(oracle.homogeneous(1), w1);
            assert_eq!(oracle.homogeneous(2), w2);
        }
    }
}

#[test]
fn fallback_obstruction_is_oracle_first_class() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for n in [4u64, 6, 8] {
        for _ in 0..50 {
            let rep = sample::any_bicyclic_rep(&mut rng, n);
            let o = rep.obstruction().unwrap();
            let oracle = Obstruction::from_total(&total_sw_oracle(&rep, 2 * rep.dim() + 2));
            match (o, oracle) {
                (Some(a), Some(b)) => assert!(a.same_class(&b)),
                (None, None) => {}
                other => panic!("{rep:?}: {other:?}"),
            }
        }
    }
}

fn c2(m: u64) -> u64 {
    (m * m.saturating_sub(1) / 2) % 2
}

#[test]
fn degree_four_class_from_profile() {
    for a in 0u64..12 {
        for b in 0u64..12 {
            for c in 0u64..12 {
                let p = ParityProfile::new(a, b, c, Regime::Mod4);
                if !p.parity_ok() {
                    continue;
                }
                let w4 = profile_oracle(&p, 4).homogeneous(4);
                let ring = p.ring();
                let mut terms: Vec<[u64; 4]> = Vec::new();
                if c2(a + c) == 1 {
                    terms.push([0, 0, 2, 0]);
                }
                if c2(b + c) == 1 {
                    terms.push([0, 0, 0, 2]);
                }
                if (c2(b + c) + c2(a + c) + c2(b + a)) % 2 == 1 {
                    terms.push([0, 0, 1, 1]);
                }
                let expected = Mod2Class::from_exponents(ring, terms.iter().map(|e| &e[..]));
                assert_eq!(w4, expected, "({a},{b},{c})");
            }
        }
    }
}

#[test]
fn leading_power_coefficient_is_binomial() {
    for a in 0u64..40 {
        for b in 0u64..40 {
            for c in 0u64..40 {
                let p = ParityProfile::new(a, b, c, Regime::Mod4);
                if !p.parity_ok() {
                    continue;
                }
                let total = profile_oracle(&p, 64);
                // walk w_{2^k} while the lower power-of-two classes vanish
                for k in 1u64..=6 {
                    let deg = 1u64 << k;
                    let part = total.homogeneous(deg);
                    let e = 1u64 << (k - 1);
                    let expected = binom_mod2(&BigUint::from(a + c), &BigUint::from(e));
                    assert_eq!(
                        part.coefficient(&[0, 0, e, 0]),
                        expected,
                        "({a},{b},{c}) k={k}"
                    );
                    if !part.is_zero() {
                        break;
                    }
                }
            }
        }
    }
}

#[test]
fn vanishing_below_obstruction() {
    for a in (0u64..64).step_by(2) {
        for b in (0u64..64).step_by(2) {
            for c in [0u64, 2, 4, 6, 8, 30] {
                let p = ParityProfile::new(a, b, c, Regime::Mod4);
                if let Some(o) = obstruction_closed(&p).unwrap() {
                    let total = total_sw_reduced(&p, o.degree);
                    for i in 1..o.degree {
                        assert!(total.homogeneous(i).is_zero());
                    }
                    assert_eq!(total.homogeneous(o.degree), o.class);
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn character_route_matches_profile(seed in any::<u64>(), pick in 0usize..6) {
        let n = [2u64, 4, 6, 8, 10, 12][pick];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let rep = sample::any_bicyclic_rep(&mut rng, n);
        let p = profile_from_character(n, &rep.character()).unwrap();
        prop_assert_eq!(p, rep.profile());
    }

    #[test]
    fn reduced_matches_profile_oracle(a in 0u64..200, b in 0u64..200, c in 0u64..200, mod4 in any::<bool>()) {
        let regime = if mod4 { Regime::Mod4 } else { Regime::Mod2 };
        let p = ParityProfile::new(a, b, c, regime);
        prop_assert_eq!(total_sw_reduced(&p, 40), profile_oracle(&p, 40));
    }
}
