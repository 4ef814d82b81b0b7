use logchern_core::blowup::{
    betti_check, blowup, log_pullback_check, proper_transform_check, pullback_checks, validate_center,
    verify_blowup_formula,
};
use logchern_core::catalog;
use logchern_core::charclass::{divisor_grr_check, omx_log_consistency};
use logchern_core::divisor::{log_chern, strata};
use logchern_core::verdict::all_hold;
use logchern_core::{Cls, Q};
use num_traits::One;

fn failures(vs: &[logchern_core::Verdict]) -> Vec<String> {
    vs.iter().filter(|v| !v.holds).map(|v| format!("{} ({:?})", v.name, v.evidence)).collect()
}

#[test]
fn spaces_are_well_formed() {
    for e in catalog::all().unwrap() {
        let s = &e.space;
        assert_eq!(s.ring().dim(s.ring().top_degree()), 1, "{}", e.name);
        assert_eq!(s.integrate(s.point()).unwrap(), Q::one());
        assert_eq!(s.euler_characteristic(), e.euler, "{}", e.name);
    }
}

#[test]
fn arrangements_reconstruct_and_agree() {
    for e in catalog::all().unwrap() {
        for (name, arr) in &e.arrangements {
            let d = strata(arr);
            assert_eq!(d.total(), arr.product_of_factors(), "{} {name}", e.name);
            let lc = log_chern(&e.space, &d).unwrap();
            assert_eq!(&lc * &d.total(), e.space.tangent_chern().clone(), "{} {name}", e.name);
            assert!(lc.integrality().passes(), "{} {name}: {lc}", e.name);
            assert!(omx_log_consistency(&e.space, arr).unwrap().holds, "{} {name}", e.name);
            let grr = divisor_grr_check(&e.space, arr).unwrap();
            assert!(all_hold(&grr), "{} {name}: {:?}", e.name, failures(&grr));
        }
    }
}

#[test]
fn toric_boundaries_are_trivial() {
    for e in catalog::all().unwrap() {
        let lc = log_chern(&e.space, &strata(e.arrangement("toric").unwrap())).unwrap();
        assert_eq!(lc, Cls::one(e.space.ring()), "{}", e.name);
    }
}

#[test]
fn every_scenario_verifies() {
    for e in catalog::all().unwrap() {
        for c in e.centers.values() {
            assert!(all_hold(&validate_center(c)), "{}", c.name());
        }
        for (a, c) in &e.scenarios {
            let arr = e.arrangement(a).unwrap();
            let b = blowup(e.center(c).unwrap()).unwrap();
            let tag = format!("{} {a} {c}", e.name);
            let vs = verify_blowup_formula(&b, arr).unwrap();
            assert!(all_hold(&vs), "{tag}: {:?}", failures(&vs));
            assert!(log_pullback_check(&b, arr).unwrap().holds, "{tag}");
            assert!(proper_transform_check(&b, arr).unwrap().holds, "{tag}");
            assert!(betti_check(&b).holds, "{tag}");
            assert!(b.integration_consistency().unwrap().holds, "{tag}");
            let pb = pullback_checks(&b).unwrap();
            assert!(all_hold(&pb), "{tag}: {:?}", failures(&pb));
        }
    }
}
