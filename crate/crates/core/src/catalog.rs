//! Built-in spaces, divisors and blowup centers.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use crate::blowup::CenterSpec;
use crate::divisor::ScArrangement;
use crate::ring::{build_ring, Cls, Generator, Monomial, Poly, RingPresentation};
use crate::space::Space;
use crate::{Error, Result, Q};

pub const MAX_PROJECTIVE_DIM: u32 = 6;

/// `Pⁿ` with hyperplane class named `generator`.
pub fn projective_space_with(n: u32, generator: &str) -> Result<Space> {
    if !(1..=MAX_PROJECTIVE_DIM).contains(&n) {
        return Err(Error::OutOfRange { what: "projective dimension", value: n.into(), range: "1..=6" });
    }
    let h = Poly::var(1, 0);
    let ring = build_ring(RingPresentation::new(vec![Generator::new(generator, 2)], vec![h.pow(n + 1)], 2 * n))?;
    let hc = Cls::generator(&ring, 0);
    let ctx = (Cls::one(&ring) + &hc).pow(n + 1);
    Space::new(format!("P{n}"), hc.pow(n), ctx)
}

/// `Pⁿ = ℚ[H]/(H^{n+1})`, `c(TPⁿ) = (1+H)^{n+1}`.
pub fn projective_space(n: u32) -> Result<Space> {
    projective_space_with(n, "H")
}

/// The one-point space, `H^* = ℚ`.
pub fn point_space() -> Result<Space> {
    let ring = build_ring(RingPresentation::new(Vec::new(), Vec::new(), 0))?;
    Space::new("pt", Cls::one(&ring), Cls::one(&ring))
}

fn shift_poly(p: &Poly, before: usize, after: usize) -> Poly {
    let mut out = Poly::zero(before + p.nvars() + after);
    for (m, c) in p.terms() {
        let mut exps = vec![0; before];
        exps.extend_from_slice(m.exponents());
        exps.resize(before + p.nvars() + after, 0);
        out.add_term(Monomial::from_exponents(exps), c.clone());
    }
    out
}

/// `X₁ × X₂` by the Künneth formula. Colliding generator names of the second
/// factor get the suffix `_2`.
pub fn product(a: &Space, b: &Space) -> Result<Space> {
    let (ra, rb) = (a.ring(), b.ring());
    let (ma, mb) = (ra.ngens(), rb.ngens());
    let mut gens = ra.generators().to_vec();
    for g in rb.generators() {
        let mut name = g.name.clone();
        while gens.iter().any(|x| x.name == name) {
            name.push_str("_2");
        }
        gens.push(Generator::new(name, g.degree));
    }
    let rels = ra
        .presentation()
        .relations
        .iter()
        .map(|p| shift_poly(p, 0, mb))
        .chain(rb.presentation().relations.iter().map(|p| shift_poly(p, ma, 0)))
        .collect();
    let ring = build_ring(RingPresentation::new(gens, rels, ra.top_degree() + rb.top_degree()))?;
    let lift_a = |x: &Cls| Cls::from_poly(&ring, &shift_poly(&x.to_poly(), 0, mb));
    let lift_b = |x: &Cls| Cls::from_poly(&ring, &shift_poly(&x.to_poly(), ma, 0));
    let point = &lift_a(a.point())? * &lift_b(b.point())?;
    let ctx = &lift_a(a.tangent_chern())? * &lift_b(b.tangent_chern())?;
    Space::new(format!("{}x{}", a.name(), b.name()), point, ctx)
}

/// The first `k` coordinate hyperplanes of `Pⁿ`, labelled `x0, x1, …`.
pub fn coordinate_arrangement(space: &Space, k: usize) -> Result<ScArrangement> {
    let ring = space.ring();
    if ring.ngens() != 1 || ring.generators()[0].degree != 2 {
        return Err(Error::Precondition(format!("{} is not a projective space", space.name())));
    }
    let n = ring.half_top() as usize;
    if k > n + 1 {
        return Err(Error::OutOfRange { what: "number of coordinate hyperplanes", value: k as i64, range: "0..=n+1" });
    }
    let h = Cls::generator(ring, 0);
    ScArrangement::new(ring, (0..k).map(|i| (format!("x{i}"), h.clone())).collect())
}

fn binomial(n: u32, k: u32) -> Q {
    (0..k).fold(Q::one(), |acc, i| acc * Q::from_integer((n - i).into()) / Q::from_integer((i + 1).into()))
}

fn linear_center_name(d: u32, n: u32) -> String {
    match d {
        0 => format!("pt_in_P{n}"),
        1 => format!("line_in_P{n}"),
        2 => format!("plane_in_P{n}"),
        _ => format!("P{d}_in_P{n}"),
    }
}

/// A linear `P^d ⊂ Pⁿ` (`0 ≤ d < n`): `ρ(H) = h`, `PD[Y] = H^r`,
/// `c(N) = (1+h)^r`, `ĉ_i = C(r,i) H^i` (zero when `Y` is a point).
pub fn linear_center(ambient: &Arc<Space>, d: u32) -> Result<CenterSpec> {
    let amb = ambient.ring();
    let n = amb.half_top();
    if d >= n {
        return Err(Error::OutOfRange { what: "center dimension", value: d.into(), range: "0..n" });
    }
    let r = n - d;
    let y = if d == 0 { point_space()? } else { projective_space_with(d, "h")? };
    let yr = y.ring();
    let h_img = if d == 0 { Cls::zero(yr) } else { Cls::generator(yr, 0) };
    let big_h = Cls::generator(amb, 0);
    let normal = (Cls::one(yr) + &h_img).pow(r);
    let lifts = (1..r).filter(|_| d > 0).map(|i| (i, big_h.pow(i).scale(&binomial(r, i)))).collect();
    CenterSpec::new(linear_center_name(d, n), ambient.clone(), y.point().clone(), vec![h_img], big_h.pow(r), normal, lifts)
}

/// A point of a product of projective lines/spaces: all generators restrict
/// to zero, `c(N) = 1`.
fn point_center(name: &str, ambient: &Arc<Space>) -> Result<CenterSpec> {
    let pt = point_space()?;
    let images = vec![Cls::zero(pt.ring()); ambient.ring().ngens()];
    CenterSpec::new(name, ambient.clone(), pt.point().clone(), images, ambient.point().clone(), Cls::one(pt.ring()), BTreeMap::new())
}

/// A space with its named divisors, centers and blowup scenarios.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub description: String,
    pub space: Arc<Space>,
    /// `χ(X)`, known independently of the ring.
    pub euler: Q,
    pub arrangements: BTreeMap<String, ScArrangement>,
    pub centers: BTreeMap<String, CenterSpec>,
    /// Pairs (arrangement, center) where the center is the deepest stratum.
    pub scenarios: Vec<(String, String)>,
}

impl CatalogEntry {
    pub fn arrangement(&self, name: &str) -> Result<&ScArrangement> {
        self.arrangements
            .get(name)
            .ok_or_else(|| Error::Unknown { kind: "arrangement", name: format!("{name} (in {})", self.name) })
    }

    pub fn center(&self, name: &str) -> Result<&CenterSpec> {
        self.centers.get(name).ok_or_else(|| Error::Unknown { kind: "center", name: format!("{name} (in {})", self.name) })
    }
}

pub fn names() -> Vec<&'static str> {
    vec!["P1", "P2", "P3", "P4", "P5", "P6", "P1xP1", "P1xP2", "P2xP2", "P1xP1xP1"]
}

fn projective_entry(n: u32) -> Result<CatalogEntry> {
    let space = Arc::new(projective_space(n)?);
    let mut arrangements = BTreeMap::new();
    for k in 1..=(n as usize + 1) {
        arrangements.insert(format!("coord{k}"), coordinate_arrangement(&space, k)?);
    }
    arrangements.insert("hyperplane".into(), coordinate_arrangement(&space, 1)?);
    arrangements.insert("toric".into(), coordinate_arrangement(&space, n as usize + 1)?);
    let aliases: &[(&str, usize)] = match n {
        2 => &[("line", 1), ("twolines", 2)],
        3 => &[("plane", 1), ("twoplanes", 2), ("threeplanes", 3)],
        _ => &[],
    };
    for (alias, k) in aliases {
        arrangements.insert((*alias).into(), coordinate_arrangement(&space, *k)?);
    }
    let mut centers = BTreeMap::new();
    let mut scenarios = Vec::new();
    for d in 0..n {
        let c = linear_center(&space, d)?;
        scenarios.push((format!("coord{}", n - d), c.name().to_string()));
        centers.insert(c.name().to_string(), c);
    }
    Ok(CatalogEntry {
        name: format!("P{n}"),
        description: format!("complex projective {n}-space"),
        space,
        euler: Q::from_integer((n + 1).into()),
        arrangements,
        centers,
        scenarios,
    })
}

fn product_entry(name: &str, factors: &[(u32, &str)]) -> Result<CatalogEntry> {
    let mut spaces = factors.iter().map(|(n, g)| projective_space_with(*n, g));
    let first = spaces.next().expect("at least one factor")?;
    let space = spaces.try_fold(first, |acc, s| product(&acc, &s?))?;
    let space = Arc::new(Space::new(name, space.point().clone(), space.tangent_chern().clone())?);
    let ring = space.ring();
    let gens: Vec<Cls> = (0..ring.ngens()).map(|i| Cls::generator(ring, i)).collect();
    let upper = |g: &str| g.to_uppercase();

    // One divisor per factor coordinate through the origin, so that they
    // meet exactly in the origin point.
    let mut cross = Vec::new();
    let mut toric = Vec::new();
    for ((n, g), x) in factors.iter().zip(&gens) {
        for i in 0..*n {
            let label = if *n == 1 { upper(g) } else { format!("{}{}", upper(g), i + 1) };
            cross.push((label, x.clone()));
        }
        for i in 0..=*n {
            toric.push((format!("{g}{i}"), x.clone()));
        }
    }
    let mut arrangements = BTreeMap::new();
    arrangements.insert("cross".to_string(), ScArrangement::new(ring, cross)?);
    arrangements.insert("toric".to_string(), ScArrangement::new(ring, toric)?);
    let mut centers = BTreeMap::new();
    let pt_name = format!("pt_in_{name}");
    centers.insert(pt_name.clone(), point_center(&pt_name, &space)?);
    let mut scenarios = vec![("cross".to_string(), pt_name)];

    // P1 × {pt} inside P1 × P2, cut out by two copies of the P2 hyperplane.
    if factors == [(1, "a"), (2, "b")] {
        let y = projective_space_with(1, "h")?;
        let h = Cls::generator(y.ring(), 0);
        let b = gens[1].clone();
        let c = CenterSpec::new(
            "line_in_P1xP2",
            space.clone(),
            y.point().clone(),
            vec![h, Cls::zero(y.ring())],
            b.pow(2),
            Cls::one(y.ring()),
            BTreeMap::new(),
        )?;
        arrangements.insert("twob".into(), ScArrangement::new(ring, vec![("B1".into(), b.clone()), ("B2".into(), b)])?);
        scenarios.push(("twob".into(), c.name().to_string()));
        centers.insert(c.name().to_string(), c);
    }
    let euler = factors.iter().fold(Q::one(), |acc, (n, _)| acc * Q::from_integer((n + 1).into()));
    Ok(CatalogEntry {
        name: name.to_string(),
        description: format!("product {}", factors.iter().map(|(n, _)| format!("P{n}")).collect::<Vec<_>>().join(" x ")),
        space,
        euler,
        arrangements,
        centers,
        scenarios,
    })
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    match name {
        "P1xP1" => product_entry(name, &[(1, "a"), (1, "b")]),
        "P1xP2" => product_entry(name, &[(1, "a"), (2, "b")]),
        "P2xP2" => product_entry(name, &[(2, "a"), (2, "b")]),
        "P1xP1xP1" => product_entry(name, &[(1, "a"), (1, "b"), (1, "c")]),
        _ => match name.strip_prefix('P').and_then(|s| s.parse::<u32>().ok()) {
            Some(n) if (1..=MAX_PROJECTIVE_DIM).contains(&n) && name == format!("P{n}") => projective_entry(n),
            _ => Err(Error::Unknown { kind: "catalog space", name: name.to_string() }),
        },
    }
}

/// A center by name, searched across all entries (e.g. `line_in_P3`).
pub fn standard_center(name: &str) -> Result<CenterSpec> {
    for e in all()? {
        if let Some(c) = e.centers.get(name) {
            return Ok(c.clone());
        }
    }
    Err(Error::Unknown { kind: "center", name: name.to_string() })
}

pub fn all() -> Result<Vec<CatalogEntry>> {
    names().into_iter().map(entry).collect()
}
