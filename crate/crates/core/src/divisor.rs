//! Divisor arrangements, their stratum classes, and log-tangent Chern classes.
//!
//! A simple-crossings divisor enters through the Poincaré duals `v_i` of its
//! components. The stratum `V^(k)` of points on at least `k` branches then has
//! dual class `e_k(v_1, …, v_N)`, so `1 + Σ_k PD[V^(k)] = Π_i (1 + v_i)`.
//! Empty intersections need no bookkeeping: if `V_I = ∅` the cup product of
//! the corresponding `v_i` already vanishes. General normal-crossings divisors
//! are entered directly as [`StrataData`].
//!
//! The smooth-splitting check is purely formal: it does not see the geometric
//! hypothesis that `V ∩ V'` contains no open subset of `V`.

use std::collections::HashSet;
use std::sync::Arc;

use crate::ring::{Cls, GradedRing};
use crate::space::Space;
use crate::verdict::Verdict;
use crate::{Error, Result};

/// Components `V_i` of a simple-crossings divisor, given by their degree-2
/// classes `v_i = PD_X[V_i]`. Realizability is not checked.
#[derive(Clone, Debug)]
pub struct ScArrangement {
    ring: Arc<GradedRing>,
    labels: Vec<String>,
    classes: Vec<Cls>,
}

impl PartialEq for ScArrangement {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.labels == other.labels && self.classes == other.classes
    }
}

impl ScArrangement {
    pub fn new(ring: &Arc<GradedRing>, components: Vec<(String, Cls)>) -> Result<ScArrangement> {
        let mut seen = HashSet::new();
        let mut dup = Vec::new();
        let mut labels = Vec::with_capacity(components.len());
        let mut classes = Vec::with_capacity(components.len());
        for (label, v) in components {
            if !v.belongs_to(ring) {
                return Err(Error::MixedRings);
            }
            if !v.is_homogeneous_of(2) {
                return Err(Error::DegreeMismatch { what: format!("divisor component `{label}` = {v}"), expected: 2 });
            }
            if !seen.insert(label.clone()) {
                dup.push(label.clone());
            }
            labels.push(label);
            classes.push(v);
        }
        if !dup.is_empty() {
            return Err(Error::OverlappingLabels(dup));
        }
        Ok(ScArrangement { ring: ring.clone(), labels, classes })
    }

    /// Components labelled `V1, V2, …`.
    pub fn from_classes(ring: &Arc<GradedRing>, classes: Vec<Cls>) -> Result<ScArrangement> {
        let comps = classes.into_iter().enumerate().map(|(i, v)| (format!("V{}", i + 1), v)).collect();
        ScArrangement::new(ring, comps)
    }

    pub fn empty(ring: &Arc<GradedRing>) -> ScArrangement {
        ScArrangement { ring: ring.clone(), labels: Vec::new(), classes: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn classes(&self) -> &[Cls] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn is_over(&self, space: &Space) -> bool {
        Arc::ptr_eq(&self.ring, space.ring())
    }

    /// `V ∪ V'`; the label sets must be disjoint.
    pub fn union(&self, other: &ScArrangement) -> Result<ScArrangement> {
        if !Arc::ptr_eq(&self.ring, &other.ring) {
            return Err(Error::MixedRings);
        }
        let mine: HashSet<&String> = self.labels.iter().collect();
        let overlap: Vec<String> = other.labels.iter().filter(|l| mine.contains(l)).cloned().collect();
        if !overlap.is_empty() {
            return Err(Error::OverlappingLabels(overlap));
        }
        let mut out = self.clone();
        out.labels.extend(other.labels.iter().cloned());
        out.classes.extend(other.classes.iter().cloned());
        Ok(out)
    }

    /// The arrangement with component `index` removed, and that component.
    pub fn split_off(&self, index: usize) -> (ScArrangement, Cls) {
        let mut rest = self.clone();
        rest.labels.remove(index);
        let v = rest.classes.remove(index);
        (rest, v)
    }

    /// `Π_i (1 + v_i)`.
    pub fn product_of_factors(&self) -> Cls {
        self.classes.iter().fold(Cls::one(&self.ring), |acc, v| &acc * &(Cls::one(&self.ring) + v))
    }
}

/// Stratum classes `pd[k] = PD_X[V^(k)]` for `k = 1..=r`; `pd[k] = 0` beyond
/// the depth `r`.
#[derive(Clone, Debug)]
pub struct StrataData {
    ring: Arc<GradedRing>,
    pd: Vec<Cls>,
}

impl PartialEq for StrataData {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.pd == other.pd
    }
}

impl StrataData {
    /// `pd[0]` of the argument is `PD[V^(1)]`, and so on.
    pub fn new(ring: &Arc<GradedRing>, pd: Vec<Cls>) -> Result<StrataData> {
        for (i, c) in pd.iter().enumerate() {
            if !c.belongs_to(ring) {
                return Err(Error::MixedRings);
            }
            let degree = 2 * (i as u32 + 1);
            if !c.is_homogeneous_of(degree) {
                return Err(Error::DegreeMismatch { what: format!("stratum class PD[V^({})] = {c}", i + 1), expected: degree });
            }
        }
        Ok(StrataData { ring: ring.clone(), pd })
    }

    pub fn empty(ring: &Arc<GradedRing>) -> StrataData {
        StrataData { ring: ring.clone(), pd: Vec::new() }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn depth(&self) -> usize {
        self.pd.len()
    }

    /// `PD[V^(k)]`, with `pd(0) = 1` and zero past the depth.
    pub fn pd(&self, k: usize) -> Cls {
        match k {
            0 => Cls::one(&self.ring),
            _ => self.pd.get(k - 1).cloned().unwrap_or_else(|| Cls::zero(&self.ring)),
        }
    }

    pub fn classes(&self) -> &[Cls] {
        &self.pd
    }

    /// `1 + PD[V^(1)] + PD[V^(2)] + …`.
    pub fn total(&self) -> Cls {
        self.pd.iter().fold(Cls::one(&self.ring), |acc, c| &acc + c)
    }

    pub fn is_over(&self, space: &Space) -> bool {
        Arc::ptr_eq(&self.ring, space.ring())
    }
}

/// Elementary symmetric classes of the components, built by repeated
/// [`sc_union_strata`]. The depth is the number of components even when the
/// deepest classes vanish by truncation.
pub fn strata(arr: &ScArrangement) -> StrataData {
    arr.classes.iter().fold(StrataData::empty(&arr.ring), |d, v| {
        sc_union_strata(&d, v).expect("components are degree-2 classes of the same ring")
    })
}

/// Strata of `V ∪ V'` for a smooth `V'` meeting `V` transversally:
/// `pd'[k] = pd[k] + v'·pd[k−1]`.
pub fn sc_union_strata(d: &StrataData, v_new: &Cls) -> Result<StrataData> {
    if !v_new.belongs_to(&d.ring) {
        return Err(Error::MixedRings);
    }
    if !v_new.is_homogeneous_of(2) {
        return Err(Error::DegreeMismatch { what: format!("smooth component {v_new}"), expected: 2 });
    }
    let pd = (1..=d.depth() + 1).map(|k| &d.pd(k) + &(v_new * &d.pd(k - 1))).collect();
    Ok(StrataData { ring: d.ring.clone(), pd })
}

/// `c(TX(−log V)) = c(TX) / (1 + Σ_k PD[V^(k)])`.
pub fn log_chern(space: &Space, d: &StrataData) -> Result<Cls> {
    if !d.is_over(space) {
        return Err(Error::MixedRings);
    }
    Ok(space.tangent_chern() * &d.total().invert()?)
}

/// `c₁(O_X(V)) = PD_X[V]`, which is the first stratum class.
pub fn line_bundle_c1(d: &StrataData) -> Cls {
    d.pd(1)
}

/// Tensor additivity `c₁(O(V ∪ V')) = c₁(O(V)) + c₁(O(V'))`.
pub fn union_c1_additivity(a: &ScArrangement, b: &ScArrangement) -> Result<Verdict> {
    let union = a.union(b)?;
    let lhs = line_bundle_c1(&strata(&union));
    let rhs = &line_bundle_c1(&strata(a)) + &line_bundle_c1(&strata(b));
    Ok(Verdict::classes("c1(O(V u V')) = c1(O(V)) + c1(O(V'))", lhs, rhs))
}

/// Total-Chern form of `TX(−log(V∪V')) ⊕ O(V') ≅ TX(−log V) ⊕ ℂ`:
/// `c(TX(−log(V∪V')))·(1+v') = c(TX(−log V))`.
pub fn smooth_split_check(space: &Space, d: &StrataData, v_new: &Cls) -> Result<Verdict> {
    let union = sc_union_strata(d, v_new)?;
    let lhs = &log_chern(space, &union)? * &(space.one() + v_new);
    let rhs = log_chern(space, d)?;
    Ok(Verdict::classes("c(TX(-log(V u V')))(1+v') = c(TX(-log V))", lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, Generator, Poly, RingPresentation};
    use crate::q;

    fn pn(n: u32) -> Space {
        let h = Poly::var(1, 0);
        let r = build_ring(RingPresentation::new(vec![Generator::new("H", 2)], vec![h.pow(n + 1)], 2 * n)).unwrap();
        let hc = Cls::generator(&r, 0);
        Space::new(format!("P{n}"), hc.pow(n), (Cls::one(&r) + &hc).pow(n + 1)).unwrap()
    }

    fn lines(s: &Space, k: usize) -> ScArrangement {
        let h = s.generator("H").unwrap();
        ScArrangement::from_classes(s.ring(), vec![h; k]).unwrap()
    }

    #[test]
    fn strata_of_three_lines() {
        let s = pn(2);
        let h = s.generator("H").unwrap();
        let d = strata(&lines(&s, 3));
        assert_eq!(d.depth(), 3);
        assert_eq!(d.pd(1), h.scale(&q(3, 1)));
        assert_eq!(d.pd(2), h.pow(2).scale(&q(3, 1)));
        assert!(d.pd(3).is_zero());
        assert!(strata(&ScArrangement::empty(s.ring())).total() == s.one());
    }

    #[test]
    fn strata_of_two_planes() {
        let s = pn(3);
        let h = s.generator("H").unwrap();
        let d = strata(&lines(&s, 2));
        assert_eq!(d.pd(1), h.scale(&q(2, 1)));
        assert_eq!(d.pd(2), h.pow(2));
    }

    #[test]
    fn log_chern_examples() {
        let p2 = pn(2);
        assert_eq!(log_chern(&p2, &strata(&lines(&p2, 3))).unwrap(), p2.one());
        let one_line = log_chern(&p2, &strata(&lines(&p2, 1))).unwrap();
        assert_eq!(one_line.render_inline(), "1 + 2*H + H^2");
        let p3 = pn(3);
        let two = log_chern(&p3, &strata(&lines(&p3, 2))).unwrap();
        assert_eq!(two.render_inline(), "1 + 2*H + H^2");
        assert_eq!(log_chern(&p3, &StrataData::empty(p3.ring())).unwrap(), *p3.tangent_chern());
    }

    #[test]
    fn line_bundle_c1_passthrough() {
        let p3 = pn(3);
        let h = p3.generator("H").unwrap();
        let d = StrataData::new(p3.ring(), vec![h.scale(&q(2, 1))]).unwrap();
        assert_eq!(line_bundle_c1(&d), h.scale(&q(2, 1)));
        assert!(line_bundle_c1(&StrataData::empty(p3.ring())).is_zero());
        assert!(StrataData::new(p3.ring(), vec![h.pow(2)]).is_err());
    }

    #[test]
    fn additivity_and_overlap() {
        let p2 = pn(2);
        let h = p2.generator("H").unwrap();
        let a = ScArrangement::new(p2.ring(), vec![("L1".into(), h.clone()), ("L2".into(), h.clone())]).unwrap();
        let b = ScArrangement::new(p2.ring(), vec![("L3".into(), h.clone())]).unwrap();
        assert!(union_c1_additivity(&a, &b).unwrap().holds);
        assert!(union_c1_additivity(&ScArrangement::empty(p2.ring()), &b).unwrap().holds);
        let c = ScArrangement::new(p2.ring(), vec![("L1".into(), h)]).unwrap();
        assert_eq!(union_c1_additivity(&a, &c).unwrap_err(), Error::OverlappingLabels(vec!["L1".into()]));
    }

    #[test]
    fn smooth_split_examples() {
        let p2 = pn(2);
        let h = p2.generator("H").unwrap();
        let v = strata(&lines(&p2, 2));
        assert!(smooth_split_check(&p2, &v, &h).unwrap().holds);
        assert!(smooth_split_check(&p2, &StrataData::empty(p2.ring()), &h).unwrap().holds);
    }

    #[test]
    fn union_strata_matches_all_at_once() {
        let p2 = pn(2);
        let h = p2.generator("H").unwrap();
        let d = sc_union_strata(&strata(&lines(&p2, 2)), &h).unwrap();
        assert_eq!(d, strata(&lines(&p2, 3)));
        let single = sc_union_strata(&StrataData::empty(p2.ring()), &h).unwrap();
        assert_eq!(single.classes(), &[h.clone()]);
        assert!(sc_union_strata(&single, &h.pow(2)).is_err());
    }
}
