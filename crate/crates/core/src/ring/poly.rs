use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::Q;

/// Exponent vector over a fixed, ordered list of generators.
///
/// The derived `Ord` is lexicographic with the first generator most
/// significant. Monomials are only ever compared within one degree, so this
/// is the tie-break of the graded-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Weighted degree `Σ e_i w_i`.
    pub fn degree(&self, weights: &[u32]) -> u32 {
        self.0.iter().zip(weights).map(|(e, w)| e * w).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Same monomial over `extra` additional (absent) trailing generators.
    pub fn extend(&self, extra: usize) -> Monomial {
        let mut e = self.0.clone();
        e.extend(std::iter::repeat(0).take(extra));
        Monomial(e)
    }

    /// Renders as `H^2*e`; the unit monomial renders as `1`.
    pub fn render(&self, names: &[String]) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .zip(names)
            .filter(|(e, _)| **e > 0)
            .map(|(e, n)| if *e == 1 { n.clone() } else { format!("{n}^{e}") })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// All monomials of weighted degree `degree`, in ascending `Ord` order.
pub fn monomials_of_degree(weights: &[u32], degree: u32) -> Vec<Monomial> {
    fn go(weights: &[u32], left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        let i = prefix.len();
        if i == weights.len() {
            if left == 0 {
                out.push(Monomial(prefix.clone()));
            }
            return;
        }
        let w = weights[i];
        for e in 0..=left / w {
            prefix.push(e);
            go(weights, left - e * w, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if weights.is_empty() {
        if degree == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    go(weights, degree, &mut Vec::with_capacity(weights.len()), &mut out);
    out.sort();
    out
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Q::one())
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut p = Poly::zero(nvars);
        p.add_term(Monomial::var(nvars, index), Q::one());
        p
    }

    pub fn monomial(m: Monomial, c: Q) -> Self {
        let mut p = Poly::zero(m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        debug_assert_eq!(m.nvars(), self.nvars);
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Constant value if the polynomial has no non-unit monomials.
    pub fn as_constant(&self) -> Option<Q> {
        match self.terms.len() {
            0 => Some(Q::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn degrees(&self, weights: &[u32]) -> BTreeSet<u32> {
        self.terms.keys().map(|m| m.degree(weights)).collect()
    }

    /// `Ok(None)` for the zero polynomial, `Err((a, b))` with two distinct
    /// degrees when the polynomial is not homogeneous.
    pub fn homogeneous_degree(&self, weights: &[u32]) -> std::result::Result<Option<u32>, (u32, u32)> {
        let degs = self.degrees(weights);
        let mut it = degs.iter();
        match (it.next(), it.next()) {
            (None, _) => Ok(None),
            (Some(&d), None) => Ok(Some(d)),
            (Some(&a), Some(&b)) => Err((a, b)),
        }
    }

    pub fn part_of_degree(&self, weights: &[u32], degree: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree(weights) == degree)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn extend_vars(&self, extra: usize) -> Poly {
        Poly {
            nvars: self.nvars + extra,
            terms: self.terms.iter().map(|(m, c)| (m.extend(extra), c.clone())).collect(),
        }
    }

    /// Degree ascending, and within a degree the larger monomial first:
    /// `1 + 3*H + 3*H^2`, `7*H^2 - 4*H*e`.
    pub fn render(&self, names: &[String], weights: &[u32]) -> String {
        let mut terms: Vec<(&Monomial, &Q)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            a.0.degree(weights)
                .cmp(&b.0.degree(weights))
                .then_with(|| b.0.cmp(a.0))
        });
        render_terms(terms.into_iter().map(|(m, c)| (c.clone(), m.render(names))))
    }

    /// Relation layout: highest degree first and, within a degree, the
    /// monomial eliminated by row reduction first (`e^2 - 2*H*e + H^2`).
    pub fn render_relation(&self, names: &[String], weights: &[u32]) -> String {
        let mut terms: Vec<(&Monomial, &Q)> = self.terms.iter().collect();
        terms.sort_by(|a, b| {
            b.0.degree(weights)
                .cmp(&a.0.degree(weights))
                .then_with(|| a.0.cmp(b.0))
        });
        render_terms(terms.into_iter().map(|(m, c)| (c.clone(), m.render(names))))
    }
}

/// Joins `(coefficient, monomial)` pairs as `2*H - 1/2*H^2`; the monomial
/// `1` is absorbed into its coefficient. The empty sum renders as `0`.
pub fn render_terms(terms: impl IntoIterator<Item = (Q, String)>) -> String {
    let mut out = String::new();
    for (c, m) in terms {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        let body = if m == "1" {
            a.to_string()
        } else if a.is_one() {
            m
        } else {
            format!("{a}*{m}")
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $f(self, rhs: Poly) -> Poly {
                (&self).$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
