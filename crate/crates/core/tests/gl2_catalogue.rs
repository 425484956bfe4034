use num_bigint::BigUint;
use proptest::prelude::*;

use swclass::bicyclic::{total_sw_reduced, Regime};
use swclass::gl2::{FieldParam, Oir, OrthRep};
use swclass::verify::{check_gl2_sum, GL2_FIELDS};

fn field(pick: usize) -> FieldParam {
    FieldParam::new(GL2_FIELDS[pick % GL2_FIELDS.len()]).unwrap()
}

fn pick_rep(f: FieldParam, picks: &[(usize, u64)]) -> OrthRep {
    let oirs = f.oirs();
    picks.iter().fold(OrthRep::zero(f), |acc, &(i, m)| {
        acc.plus(oirs[i % oirs.len()], BigUint::from(m))
    })
}

#[test]
fn every_oir_has_a_symmetric_integral_profile() {
    for q in GL2_FIELDS {
        let f = FieldParam::new(q).unwrap();
        for oir in f.oirs() {
            let p = OrthRep::single(f, oir).profile().unwrap();
            assert_eq!(p.m10, p.m01, "q = {q}, {oir}");
        }
    }
}

#[test]
fn table_one_w2_matches_profile_when_q_is_one_mod_four() {
    for q in GL2_FIELDS.into_iter().filter(|q| q % 4 == 1) {
        let f = FieldParam::new(q).unwrap();
        for oir in f.oirs() {
            let p = OrthRep::single(f, oir).profile().unwrap();
            let (_, w2) = f.table1(oir);
            assert_eq!(w2, (&p.m01 + &p.m11).bit(0), "q = {q}, {oir}");
        }
    }
}

#[test]
fn table_one_w1_matches_profile_when_q_is_three_mod_four() {
    for q in GL2_FIELDS.into_iter().filter(|q| q % 4 == 3) {
        let f = FieldParam::new(q).unwrap();
        for oir in f.oirs() {
            let p = OrthRep::single(f, oir).profile().unwrap();
            let w1 = total_sw_reduced(&p, 1).homogeneous(1);
            assert_eq!(f.table1(oir).0, !w1.is_zero(), "q = {q}, {oir}");
        }
    }
}

#[test]
fn symmetric_squares_wrap_non_orthogonal_irreps() {
    for q in GL2_FIELDS {
        let f = FieldParam::new(q).unwrap();
        for oir in f.oirs() {
            if let Oir::Sym(i) = oir {
                assert!(!f.is_orthogonal(i));
                assert_ne!(f.dual(i), i);
                assert_eq!(f.dual(f.dual(i)), i);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn profile_is_additive(pick in 0usize..12, a in prop::collection::vec((0usize..2000, 1u64..5), 1..4),
                           b in prop::collection::vec((0usize..2000, 1u64..5), 1..4)) {
        let f = field(pick);
        let (ra, rb) = (pick_rep(f, &a), pick_rep(f, &b));
        let sum = ra.add(&rb).unwrap();
        prop_assert_eq!(sum.profile().unwrap(), ra.profile().unwrap().add(&rb.profile().unwrap()).unwrap());
        prop_assert_eq!(sum.w1(), ra.w1() ^ rb.w1());
        prop_assert_eq!(sum.dim(), ra.dim() + rb.dim());
    }

    #[test]
    fn profile_scales(pick in 0usize..12, a in prop::collection::vec((0usize..2000, 1u64..5), 1..4), c in 1u64..40) {
        let f = field(pick);
        let r = pick_rep(f, &a);
        let c = BigUint::from(c);
        prop_assert_eq!(r.scale(&c).profile().unwrap(), r.profile().unwrap().scale(&c));
    }

    #[test]
    fn closed_form_matches_oracle_on_sums(pick in 0usize..12, a in prop::collection::vec((0usize..2000, 1u64..8), 1..5)) {
        let r = pick_rep(field(pick), &a);
        prop_assert_eq!(check_gl2_sum(&r), Ok(()));
    }

    #[test]
    fn mod_two_obstruction_is_exact(pick in 0usize..12, a in prop::collection::vec((0usize..2000, 1u64..8), 1..5)) {
        let f = field(pick);
        prop_assume!(f.regime() == Regime::Mod2);
        let r = pick_rep(f, &a);
        prop_assume!(!r.w1());
        // for q = 3 mod 4 everything lives in H*(D), so the oracle is exact
        // whenever w1 = 0 and w2 = 0
        let o = r.obstruction(None).unwrap().obstruction;
        let oracle = r.obstruction_oracle().unwrap();
        if r.is_spinorial().unwrap() {
            prop_assert_eq!(o.map(|o| (o.degree, o.class)), oracle.map(|o| (o.degree, o.class)));
        } else {
            prop_assert_eq!(oracle.map(|o| o.degree), Some(2));
        }
    }
}
