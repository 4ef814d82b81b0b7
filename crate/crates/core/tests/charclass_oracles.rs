//! Split-bundle oracles: on `Pⁿ` every class is a polynomial in `H`, so
//! characteristic classes of `⊕ O(a_i)` can be expanded with plain scalar
//! series and compared against the engine.

use logchern_core::catalog::projective_space;
use logchern_core::charclass::{chern_character, chern_from_character, dual, power_sums, segre, todd_class, TotalChern};
use logchern_core::{build_ring, q, Cls, Generator, Poly, RingPresentation, Space, Q};
use num_traits::{One, Zero};
use proptest::prelude::*;

type Series = Vec<Q>;

fn mul(a: &Series, b: &Series, len: usize) -> Series {
    let mut out = vec![Q::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn factorial(k: usize) -> Q {
    (1..=k).fold(Q::one(), |acc, i| acc * Q::from_integer((i as i64).into()))
}

/// `exp(a x)` truncated.
fn exp_scaled(a: i64, len: usize) -> Series {
    (0..len).map(|k| Q::from_integer(a.into()).pow(k as i32) / factorial(k)).collect()
}

/// `x/(1 − e^{−x})` by long division of `1` by `(1 − e^{−x})/x`.
fn todd_series(len: usize) -> Series {
    let denom: Series = (0..len).map(|k| if k % 2 == 0 { Q::one() } else { -Q::one() } / factorial(k + 1)).collect();
    let mut out = vec![Q::zero(); len];
    let mut rem = vec![Q::zero(); len];
    rem[0] = Q::one();
    for k in 0..len {
        let c = &rem[k] / &denom[0];
        for j in 0..len - k {
            rem[k + j] -= &c * &denom[j];
        }
        out[k] = c;
    }
    out
}

/// `f(a x)` from the coefficients of `f`.
fn rescale(f: &Series, a: i64) -> Series {
    f.iter().enumerate().map(|(k, c)| c * Q::from_integer(a.into()).pow(k as i32)).collect()
}

fn as_series(space: &Space, x: &Cls) -> Series {
    (0..=space.dim()).map(|k| x.coords(2 * k)[0].clone()).collect()
}

fn split(space: &Space, degrees: &[i64]) -> TotalChern {
    let h = space.generator("H").unwrap();
    let roots: Vec<Cls> = degrees.iter().map(|&a| h.scale(&q(a, 1))).collect();
    TotalChern::split(space.ring(), &roots)
}

fn bundles() -> impl Strategy<Value = (u32, Vec<i64>)> {
    (1u32..=5, prop::collection::vec(-4i64..=4, 1..=4))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn whitney_product((n, degs) in bundles()) {
        let space = projective_space(n).unwrap();
        let len = n as usize + 1;
        let expected = degs.iter().fold(vec![Q::one()], |acc, &a| mul(&acc, &vec![Q::one(), q(a, 1)], len));
        let mut expected = expected;
        expected.resize(len, Q::zero());
        prop_assert_eq!(as_series(&space, split(&space, &degs).class()), expected);
    }

    #[test]
    fn chern_character_of_sum((n, degs) in bundles()) {
        let space = projective_space(n).unwrap();
        let len = n as usize + 1;
        let mut expected = vec![Q::zero(); len];
        for &a in &degs {
            for (k, c) in exp_scaled(a, len).into_iter().enumerate() {
                expected[k] += c;
            }
        }
        let tc = split(&space, &degs);
        let ch = chern_character(&tc);
        prop_assert_eq!(as_series(&space, &ch), expected);
        prop_assert_eq!(chern_from_character(&ch).unwrap().class().clone(), tc.class().clone());
    }

    #[test]
    fn todd_of_sum((n, degs) in bundles()) {
        let space = projective_space(n).unwrap();
        let len = n as usize + 1;
        let td = todd_series(len);
        let expected = degs.iter().fold(vec![Q::one()], |acc, &a| mul(&acc, &rescale(&td, a), len));
        let mut expected = expected;
        expected.resize(len, Q::zero());
        prop_assert_eq!(as_series(&space, &todd_class(&split(&space, &degs))), expected);
    }

    #[test]
    fn segre_and_dual((n, degs) in bundles()) {
        let space = projective_space(n).unwrap();
        let tc = split(&space, &degs);
        prop_assert_eq!(&segre(&tc) * tc.class(), Cls::one(space.ring()));
        let negated: Vec<i64> = degs.iter().map(|a| -a).collect();
        prop_assert_eq!(dual(tc.class()), split(&space, &negated).class().clone());
    }

    #[test]
    fn newton_power_sums((n, degs) in bundles()) {
        let space = projective_space(n).unwrap();
        let sums = power_sums(&split(&space, &degs), n).unwrap();
        prop_assert_eq!(sums.len(), n as usize);
        for (i, p) in sums.iter().enumerate() {
            let k = i + 1;
            let expected: Q = degs.iter().map(|&a| q(a, 1).pow(k as i32)).sum();
            let h = space.generator("H").unwrap();
            prop_assert_eq!(p, &h.pow(k as u32).scale(&expected));
        }
    }
}

#[test]
fn todd_series_oracle_values() {
    let td = todd_series(6);
    assert_eq!(td, vec![q(1, 1), q(1, 2), q(1, 12), q(0, 1), q(-1, 720), q(0, 1)]);
}

#[test]
fn todd_inverts_to_one_minus_exp() {
    let x = Poly::var(1, 0);
    let ring = build_ring(RingPresentation::new(vec![Generator::new("x", 2)], vec![x.pow(9)], 16)).unwrap();
    let xc = Cls::generator(&ring, 0);
    let td = todd_class(&TotalChern::new(1, &Cls::one(&ring) + &xc).unwrap());
    let lhs = &xc * &td.invert().unwrap();
    let rhs = &Cls::one(&ring) - &(-&xc).exp().unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn todd_genus_of_projective_spaces() {
    for n in 1..=6 {
        let p = projective_space(n).unwrap();
        let tc = TotalChern::new(n, p.tangent_chern().clone()).unwrap();
        assert_eq!(p.integrate(&todd_class(&tc)).unwrap(), Q::one(), "P{n}");
    }
}
