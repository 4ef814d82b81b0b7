use std::sync::{Arc, OnceLock};

use logchern_core::blowup::blowup;
use logchern_core::catalog;
use logchern_core::divisor::{log_chern, strata, ScArrangement};
use logchern_core::{q, Cls, GradedRing, Space, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

struct Fixture {
    spaces: Vec<Space>,
}

fn fixture() -> &'static Fixture {
    static F: OnceLock<Fixture> = OnceLock::new();
    F.get_or_init(|| {
        let mut spaces = vec![
            (*catalog::entry("P3").unwrap().space).clone(),
            (*catalog::entry("P1xP1").unwrap().space).clone(),
            (*catalog::entry("P1xP2").unwrap().space).clone(),
        ];
        let b = blowup(&catalog::standard_center("line_in_P3").unwrap()).unwrap();
        spaces.push(b.space_with(Cls::one(b.ring())).unwrap());
        Fixture { spaces }
    })
}

fn class_from(ring: &Arc<GradedRing>, seeds: &[i64], offset: i64) -> Cls {
    let mut it = seeds.iter().cycle().skip(offset.unsigned_abs() as usize % seeds.len().max(1));
    let mut acc = Cls::zero(ring);
    for k in 0..=ring.half_top() {
        let d = 2 * k;
        let coords = (0..ring.dim(d)).map(|_| Q::new((*it.next().unwrap()).into(), 1.into())).collect();
        acc = &acc + &Cls::from_coords(ring, d, coords);
    }
    acc
}

fn classes() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>, Vec<i64>)> {
    (
        0..4usize,
        prop::collection::vec(-9i64..=9, 1..12),
        prop::collection::vec(-9i64..=9, 1..12),
        prop::collection::vec(-9i64..=9, 1..12),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn ring_laws((i, a, b, c) in classes()) {
        let ring = fixture().spaces[i].ring();
        let (x, y, z) = (class_from(ring, &a, 0), class_from(ring, &b, 1), class_from(ring, &c, 2));
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &Cls::one(ring), x.clone());
        prop_assert!((&x - &x).is_zero());
    }

    #[test]
    fn invert_is_a_two_sided_inverse((i, a, _b, _c) in classes(), c0 in 1i64..=5) {
        let ring = fixture().spaces[i].ring();
        let x = &class_from(ring, &a, 0).positive_part() + &Cls::constant(ring, q(c0, 1));
        let inv = x.invert().unwrap();
        prop_assert_eq!(&x * &inv, Cls::one(ring));
        prop_assert_eq!(inv.invert().unwrap(), x);
    }

    #[test]
    fn nonunits_are_not_invertible((i, a, _b, _c) in classes()) {
        let ring = fixture().spaces[i].ring();
        prop_assert!(class_from(ring, &a, 0).positive_part().invert().is_err());
    }

    #[test]
    fn exp_turns_sums_into_products((i, a, b, _c) in classes()) {
        let ring = fixture().spaces[i].ring();
        let x = class_from(ring, &a, 0).positive_part();
        let y = class_from(ring, &b, 1).positive_part();
        prop_assert_eq!((&x + &y).exp().unwrap(), &x.exp().unwrap() * &y.exp().unwrap());
    }

    #[test]
    fn integration_is_linear((i, a, b, _c) in classes(), s in -7i64..=7, t in -7i64..=7) {
        let space = &fixture().spaces[i];
        let ring = space.ring();
        let (x, y) = (class_from(ring, &a, 0), class_from(ring, &b, 1));
        let combo = &x.scale(&q(s, 1)) + &y.scale(&q(t, 2));
        let lhs = space.integrate(&combo).unwrap();
        let rhs = q(s, 1) * space.integrate(&x).unwrap() + q(t, 2) * space.integrate(&y).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(space.integrate(space.point()).unwrap(), Q::one());
    }

    /// Strata against a brute-force sum over subsets.
    #[test]
    fn strata_match_subset_enumeration(coeffs in prop::collection::vec((-3i64..=3, -3i64..=3), 0..6)) {
        let space = &fixture().spaces[1];
        let ring = space.ring();
        let (a, b) = (space.generator("a").unwrap(), space.generator("b").unwrap());
        let vs: Vec<Cls> = coeffs.iter().map(|&(s, t)| &a.scale(&q(s, 1)) + &b.scale(&q(t, 1))).collect();
        let arr = ScArrangement::from_classes(ring, vs.clone()).unwrap();
        let d = strata(&arr);
        let mut brute = vec![Cls::zero(ring); vs.len() + 1];
        for mask in 0u32..(1 << vs.len()) {
            let prod = (0..vs.len()).filter(|i| mask & (1 << i) != 0).fold(Cls::one(ring), |acc, i| &acc * &vs[i]);
            brute[mask.count_ones() as usize] = &brute[mask.count_ones() as usize] + &prod;
        }
        for (k, expected) in brute.iter().enumerate().skip(1) {
            prop_assert_eq!(&d.pd(k), expected);
        }
        let lc = log_chern(space, &d).unwrap();
        prop_assert_eq!(&lc * &d.total(), space.tangent_chern().clone());
        prop_assert_eq!(d.pd(vs.len() + 1), Cls::zero(ring));
    }
}

#[test]
fn zero_is_not_a_unit() {
    let ring = fixture().spaces[0].ring();
    assert!(Cls::zero(ring).invert().is_err());
    assert!(Cls::one(ring).exp().is_err());
    assert!(Q::zero().is_zero());
}
