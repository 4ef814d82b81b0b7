//! Truncated, evenly graded commutative rings over ℚ.
//!
//! A ring is given by generators of even degree, homogeneous relations and a
//! truncation degree `2n`. [`build_ring`] computes, for every even degree
//! `d ≤ 2n`, a monomial basis of the degree-`d` quotient and the linear map
//! reducing any degree-`d` monomial to that basis. Normal forms are obtained
//! degreewise by exact row reduction of the relation ideal's slice, never by
//! Gröbner bases: with a truncation every slice is finite-dimensional.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::{Error, Result, Q};

mod cls;
pub mod linalg;
mod map;
mod poly;

pub use cls::{Cls, IntegralityReport, Offender};
pub use map::RingMap;
pub use poly::{monomials_of_degree, render_terms, Monomial, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Real (cohomological) degree; even and at least 2.
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator { name: name.into(), degree }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    pub generators: Vec<Generator>,
    pub relations: Vec<Poly>,
    /// Real truncation degree `2n`; every class above it is zero.
    pub top_degree: u32,
}

impl RingPresentation {
    pub fn new(generators: Vec<Generator>, relations: Vec<Poly>, top_degree: u32) -> Self {
        RingPresentation { generators, relations, top_degree }
    }

    pub fn names(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.name.clone()).collect()
    }

    /// Generator degrees in units of 2.
    pub fn half_weights(&self) -> Vec<u32> {
        self.generators.iter().map(|g| g.degree / 2).collect()
    }

    fn validate(&self) -> Result<()> {
        if self.top_degree % 2 != 0 {
            return Err(Error::OddTruncation(self.top_degree));
        }
        let mut seen = HashSet::new();
        for g in &self.generators {
            if g.degree == 0 || g.degree % 2 != 0 {
                return Err(Error::BadGeneratorDegree { name: g.name.clone(), degree: g.degree });
            }
            if !seen.insert(g.name.as_str()) {
                return Err(Error::DuplicateGenerator(g.name.clone()));
            }
        }
        let n = self.generators.len();
        let weights = self.half_weights();
        let max_gen = self.generators.iter().map(|g| g.degree).max().unwrap_or(0);
        let bound = self.top_degree + max_gen;
        for (index, rel) in self.relations.iter().enumerate() {
            if rel.nvars() != n {
                return Err(Error::VariableCount { expected: n, found: rel.nvars() });
            }
            match rel.homogeneous_degree(&weights) {
                Err((a, b)) => {
                    return Err(Error::NonHomogeneousRelation { index, first: 2 * a, second: 2 * b })
                }
                Ok(Some(0)) => return Err(Error::ConstantRelation(index)),
                Ok(Some(d)) if 2 * d > bound => {
                    return Err(Error::RelationDegreeTooHigh { index, degree: 2 * d, bound })
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// One degree of the quotient: a monomial basis and the reduction table.
#[derive(Clone)]
struct Piece {
    basis: Vec<Monomial>,
    reduce: HashMap<Monomial, Vec<Q>>,
}

/// A finitely presented ring with per-degree monomial bases. Immutable once
/// built; share it through `Arc`.
pub struct GradedRing {
    presentation: RingPresentation,
    names: Vec<String>,
    weights: Vec<u32>,
    pieces: Vec<Piece>,
}

impl fmt::Debug for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GradedRing")
            .field("generators", &self.names)
            .field("top_degree", &self.presentation.top_degree)
            .field("betti", &self.betti())
            .finish()
    }
}

/// Builds the quotient ring. In each even degree the monomials are ordered
/// graded-lexicographically (first declared generator most significant);
/// row reduction eliminates the smallest monomials first and the surviving
/// monomials form the basis, stored largest first.
pub fn build_ring(presentation: RingPresentation) -> Result<Arc<GradedRing>> {
    presentation.validate()?;
    let weights = presentation.half_weights();
    let half_top = presentation.top_degree / 2;
    let rels: Vec<(u32, &Poly)> = presentation
        .relations
        .iter()
        .filter(|r| !r.is_zero())
        .map(|r| (r.homogeneous_degree(&weights).unwrap().unwrap(), r))
        .collect();

    let mut pieces = Vec::with_capacity(half_top as usize + 1);
    for k in 0..=half_top {
        let monos = monomials_of_degree(&weights, k);
        let column: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for &(dr, rel) in &rels {
            if dr > k {
                continue;
            }
            for m in monomials_of_degree(&weights, k - dr) {
                let mut row = vec![Q::zero(); monos.len()];
                for (rm, c) in rel.terms() {
                    row[column[&rm.mul(&m)]] += c;
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
        let pivots = linalg::rref(&mut rows);
        let pivot_set: HashSet<usize> = pivots.iter().copied().collect();
        // Basis largest first; coordinates follow that order.
        let free: Vec<usize> = (0..monos.len()).rev().filter(|c| !pivot_set.contains(c)).collect();
        let basis: Vec<Monomial> = free.iter().map(|&c| monos[c].clone()).collect();
        let mut reduce = HashMap::with_capacity(monos.len());
        for (slot, &c) in free.iter().enumerate() {
            let mut v = vec![Q::zero(); free.len()];
            v[slot] = Q::one();
            reduce.insert(monos[c].clone(), v);
        }
        for (row, &p) in rows.iter().zip(&pivots) {
            let v: Vec<Q> = free.iter().map(|&c| -row[c].clone()).collect();
            reduce.insert(monos[p].clone(), v);
        }
        pieces.push(Piece { basis, reduce });
    }

    let names = presentation.names();
    Ok(Arc::new(GradedRing { presentation, names, weights, pieces }))
}

impl GradedRing {
    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn generators(&self) -> &[Generator] {
        &self.presentation.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn ngens(&self) -> usize {
        self.names.len()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Generator degrees in units of 2.
    pub fn half_weights(&self) -> &[u32] {
        &self.weights
    }

    /// Real truncation degree `2n`.
    pub fn top_degree(&self) -> u32 {
        self.presentation.top_degree
    }

    /// `n`, half the truncation degree.
    pub fn half_top(&self) -> u32 {
        self.presentation.top_degree / 2
    }

    /// Monomial basis of the quotient in real degree `degree`; empty for odd
    /// degrees and degrees above the truncation.
    pub fn basis(&self, degree: u32) -> &[Monomial] {
        if degree % 2 != 0 {
            return &[];
        }
        self.pieces.get((degree / 2) as usize).map_or(&[], |p| &p.basis)
    }

    pub fn dim(&self, degree: u32) -> usize {
        self.basis(degree).len()
    }

    /// Dimensions of the even-degree pieces `0, 2, …, 2n`.
    pub fn betti(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.basis.len()).collect()
    }

    /// Half-degree of a monomial.
    pub fn half_degree(&self, m: &Monomial) -> u32 {
        m.degree(&self.weights)
    }

    /// Basis coordinates of `m`; `None` when the monomial lies above the
    /// truncation and is therefore zero.
    pub fn reduce_monomial(&self, m: &Monomial) -> Option<&[Q]> {
        let k = self.half_degree(m) as usize;
        self.pieces.get(k).map(|p| p.reduce[m].as_slice())
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        m.render(&self.names)
    }

    pub fn render_poly(&self, p: &Poly) -> String {
        p.render(&self.names, &self.weights)
    }

    pub fn render_relation(&self, p: &Poly) -> String {
        p.render_relation(&self.names, &self.weights)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::q;

    fn h_ring(n: u32) -> Arc<GradedRing> {
        let h = Poly::var(1, 0);
        build_ring(RingPresentation::new(vec![Generator::new("H", 2)], vec![h.pow(n + 1)], 2 * n)).unwrap()
    }

    fn render_basis(r: &GradedRing, d: u32) -> Vec<String> {
        r.basis(d).iter().map(|m| r.render_monomial(m)).collect()
    }

    #[test]
    fn projective_space_bases() {
        let r = h_ring(2);
        assert_eq!(render_basis(&r, 0), ["1"]);
        assert_eq!(render_basis(&r, 2), ["H"]);
        assert_eq!(render_basis(&r, 4), ["H^2"]);
        for n in 1..=6 {
            assert_eq!(h_ring(n).betti(), vec![1; n as usize + 1]);
        }
    }

    #[test]
    fn square_free_survivor() {
        let a = Poly::var(2, 0);
        let b = Poly::var(2, 1);
        let r = build_ring(RingPresentation::new(
            vec![Generator::new("a", 2), Generator::new("b", 2)],
            vec![a.pow(2), b.pow(2)],
            4,
        ))
        .unwrap();
        assert_eq!(render_basis(&r, 4), ["a*b"]);
        assert_eq!(r.betti(), vec![1, 2, 1]);
    }

    #[test]
    fn point_blowup_relations_reduce_e_squared() {
        // Degree-4 monomials {H^2, He, e^2} against {He, e^2 + H^2}.
        let h = Poly::var(2, 0);
        let e = Poly::var(2, 1);
        let r = build_ring(RingPresentation::new(
            vec![Generator::new("H", 2), Generator::new("e", 2)],
            vec![h.pow(3), &h * &e, &e.pow(2) + &h.pow(2)],
            4,
        ))
        .unwrap();
        assert_eq!(render_basis(&r, 4), ["H^2"]);
        assert_eq!(r.reduce_monomial(&Monomial::from_exponents(vec![0, 2])).unwrap(), &[q(-1, 1)]);
        assert_eq!(r.reduce_monomial(&Monomial::from_exponents(vec![1, 1])).unwrap(), &[q(0, 1)]);
        assert!(r.reduce_monomial(&Monomial::from_exponents(vec![3, 0])).is_none());
    }

    #[test]
    fn presentation_errors() {
        let h = Poly::var(1, 0);
        let gens = vec![Generator::new("H", 2)];
        let err = build_ring(RingPresentation::new(gens.clone(), vec![&h.pow(3) + &h], 4)).unwrap_err();
        assert!(matches!(err, Error::NonHomogeneousRelation { .. }));
        let err = build_ring(RingPresentation::new(vec![Generator::new("x", 3)], vec![], 4)).unwrap_err();
        assert!(matches!(err, Error::BadGeneratorDegree { .. }));
        let err = build_ring(RingPresentation::new(
            vec![Generator::new("H", 2), Generator::new("H", 2)],
            vec![],
            4,
        ))
        .unwrap_err();
        assert_eq!(err, Error::DuplicateGenerator("H".into()));
        let err = build_ring(RingPresentation::new(gens.clone(), vec![h.pow(5)], 4)).unwrap_err();
        assert!(matches!(err, Error::RelationDegreeTooHigh { .. }));
        let err = build_ring(RingPresentation::new(gens, vec![Poly::one(1)], 4)).unwrap_err();
        assert_eq!(err, Error::ConstantRelation(0));
    }
}
