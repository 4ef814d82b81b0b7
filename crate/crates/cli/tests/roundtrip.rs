use logchern_cli::document::{CenterBlock, GenDecl};
use logchern_cli::{emit_json, parse_json, parse_space, serialize, Context, Registry, SpaceFile};
use logchern_core::ring::monomials_of_degree;
use logchern_core::{Poly, Q};
use proptest::prelude::*;

const NAMES: [&str; 4] = ["H", "a", "b_2", "x1"];

fn gens() -> impl Strategy<Value = Vec<GenDecl>> {
    prop::collection::vec(prop::bool::ANY, 1..=3).prop_map(|degs| {
        degs.iter()
            .enumerate()
            .map(|(i, &four)| GenDecl { name: NAMES[i].to_string(), degree: if four { 4 } else { 2 } })
            .collect()
    })
}

/// Homogeneous polynomial of real degree `deg` (any degrees when `None`).
fn poly(gens: &[GenDecl], deg: Option<u32>, seed: &[(i64, i64)]) -> Poly {
    let w: Vec<u32> = gens.iter().map(|g| g.degree / 2).collect();
    let mons: Vec<_> = match deg {
        Some(d) => monomials_of_degree(&w, d / 2),
        None => (0..=3).flat_map(|k| monomials_of_degree(&w, k)).collect(),
    };
    let mut p = Poly::zero(gens.len());
    for (m, (n, d)) in mons.into_iter().zip(seed) {
        p.add_term(m, Q::new((*n).into(), (*d).into()));
    }
    p
}

fn seeds() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-5i64..=5, 1i64..=4), 0..6)
}

fn document() -> impl Strategy<Value = SpaceFile> {
    (gens(), gens(), 1u32..=3, prop::collection::vec(seeds(), 12)).prop_map(|(g, cg, dim, s)| {
        let rels = vec![poly(&g, Some(2 * dim + 2), &s[0]), poly(&g, Some(4), &s[1])];
        let divisors = vec![
            ("d1".to_string(), vec![poly(&g, Some(2), &s[2]), poly(&g, Some(2), &s[3])]),
            ("empty".to_string(), vec![]),
        ];
        let strata = vec![("s".to_string(), vec![poly(&g, Some(2), &s[4]), poly(&g, Some(4), &s[5])])];
        let cdim = dim - 1;
        let center = CenterBlock {
            name: "c".into(),
            dim: cdim,
            generators: cg.clone(),
            relations: vec![poly(&cg, Some(2 * cdim + 2), &s[6])],
            point: if cdim == 0 { Poly::one(cg.len()) } else { poly(&cg, Some(2 * cdim), &s[7]) },
            rho: g.iter().take(1).map(|d| (d.name.clone(), poly(&cg, Some(d.degree), &s[8]))).collect(),
            pd_center: poly(&g, Some(2), &s[9]),
            normal: poly(&cg, None, &s[10]),
            lifts: vec![(1, poly(&g, Some(2), &s[11]))],
        };
        SpaceFile {
            name: "Rand".into(),
            dim,
            point: poly(&g, Some(2 * dim), &s[0]),
            ctx: poly(&g, None, &s[1]),
            generators: g,
            relations: rels,
            divisors,
            strata,
            centers: vec![center],
        }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn serialize_then_parse_is_identity(doc in document()) {
        let text = serialize(&doc);
        let back = parse_space(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(serialize(&back), text);
    }
}

#[test]
fn json_reports_round_trip() {
    let registry = Registry::standard();
    let ctx = Context { emit_ring: true, ..Context::default() };
    for e in logchern_core::catalog::all().unwrap() {
        let space = format!("catalog:{}", e.name);
        for (a, c) in &e.scenarios {
            for cmd in ["verify-cor15", "verify-logpullback"] {
                let args = vec![space.clone(), a.clone(), c.clone()];
                let r = registry.run(cmd, &ctx, &args).unwrap();
                assert!(r.passed(), "{cmd} {args:?}");
                let json = emit_json(&r);
                assert_eq!(parse_json(&json).unwrap(), r);
            }
        }
        for a in e.arrangements.keys() {
            let r = registry.run("logchern", &ctx, &[space.clone(), a.clone()]).unwrap();
            assert_eq!(parse_json(&emit_json(&r)).unwrap(), r);
        }
    }
}
