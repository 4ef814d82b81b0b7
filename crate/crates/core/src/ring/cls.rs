use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::{GradedRing, Monomial, Poly};
use crate::{Error, Result, Q};

/// A cohomology class in normal form: one coordinate vector per even degree,
/// expressed in that degree's monomial basis.
///
/// Two classes are equal exactly when they share a ring and all coordinates
/// agree. The arithmetic operators panic on classes from different rings;
/// use the `checked_*` methods where that can happen.
#[derive(Clone)]
pub struct Cls {
    ring: Arc<GradedRing>,
    comp: Vec<Vec<Q>>,
}

impl PartialEq for Cls {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring) && self.comp == other.comp
    }
}

impl Eq for Cls {}

impl fmt::Debug for Cls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cls({})", self.render_inline())
    }
}

impl fmt::Display for Cls {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_inline())
    }
}

/// One non-integral coordinate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Offender {
    pub degree: u32,
    pub monomial: String,
    pub coefficient: Q,
}

/// Whether every coordinate in the monomial basis is an integer. This is a
/// proxy: it says nothing about whether the basis spans the integral lattice,
/// and torsion is invisible over ℚ.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntegralityReport {
    pub offending: Vec<Offender>,
}

impl IntegralityReport {
    pub fn passes(&self) -> bool {
        self.offending.is_empty()
    }
}

impl Cls {
    pub fn zero(ring: &Arc<GradedRing>) -> Cls {
        let comp = (0..=ring.half_top()).map(|k| vec![Q::zero(); ring.dim(2 * k)]).collect();
        Cls { ring: ring.clone(), comp }
    }

    pub fn constant(ring: &Arc<GradedRing>, c: Q) -> Cls {
        let mut x = Cls::zero(ring);
        x.comp[0][0] = c;
        x
    }

    pub fn one(ring: &Arc<GradedRing>) -> Cls {
        Cls::constant(ring, Q::one())
    }

    pub fn generator(ring: &Arc<GradedRing>, index: usize) -> Cls {
        Cls::from_monomial(ring, &Monomial::var(ring.ngens(), index), &Q::one())
    }

    pub fn generator_named(ring: &Arc<GradedRing>, name: &str) -> Option<Cls> {
        ring.generator_index(name).map(|i| Cls::generator(ring, i))
    }

    pub fn from_monomial(ring: &Arc<GradedRing>, m: &Monomial, c: &Q) -> Cls {
        let mut x = Cls::zero(ring);
        x.add_monomial(m, c);
        x
    }

    /// Reduces a polynomial in the ring's generators to normal form.
    pub fn from_poly(ring: &Arc<GradedRing>, p: &Poly) -> Result<Cls> {
        if p.nvars() != ring.ngens() {
            return Err(Error::VariableCount { expected: ring.ngens(), found: p.nvars() });
        }
        let mut x = Cls::zero(ring);
        for (m, c) in p.terms() {
            x.add_monomial(m, c);
        }
        Ok(x)
    }

    /// Homogeneous class of real degree `degree` with the given coordinates.
    pub fn from_coords(ring: &Arc<GradedRing>, degree: u32, coords: Vec<Q>) -> Cls {
        assert_eq!(coords.len(), ring.dim(degree), "coordinate count mismatch");
        let mut x = Cls::zero(ring);
        if !coords.is_empty() {
            x.comp[(degree / 2) as usize] = coords;
        }
        x
    }

    fn add_monomial(&mut self, m: &Monomial, c: &Q) {
        if let Some(v) = self.ring.reduce_monomial(m) {
            let k = self.ring.half_degree(m) as usize;
            for (slot, x) in self.comp[k].iter_mut().zip(v) {
                if !x.is_zero() {
                    *slot += c * x;
                }
            }
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn same_ring(&self, other: &Cls) -> bool {
        Arc::ptr_eq(&self.ring, &other.ring)
    }

    pub fn belongs_to(&self, ring: &Arc<GradedRing>) -> bool {
        Arc::ptr_eq(&self.ring, ring)
    }

    /// Coordinates in real degree `degree` (empty above the truncation).
    pub fn coords(&self, degree: u32) -> &[Q] {
        if degree % 2 != 0 {
            return &[];
        }
        self.comp.get((degree / 2) as usize).map_or(&[], Vec::as_slice)
    }

    /// The homogeneous part of real degree `degree`.
    pub fn component(&self, degree: u32) -> Cls {
        let mut x = Cls::zero(&self.ring);
        if degree % 2 == 0 {
            if let Some(c) = self.comp.get((degree / 2) as usize) {
                x.comp[(degree / 2) as usize] = c.clone();
            }
        }
        x
    }

    /// Sum of the components of real degree at most `degree`.
    pub fn truncate_above(&self, degree: u32) -> Cls {
        let mut x = self.clone();
        for (k, c) in x.comp.iter_mut().enumerate() {
            if 2 * k as u32 > degree {
                c.iter_mut().for_each(|v| *v = Q::zero());
            }
        }
        x
    }

    pub fn constant_term(&self) -> Q {
        self.comp[0][0].clone()
    }

    pub fn positive_part(&self) -> Cls {
        let mut x = self.clone();
        x.comp[0][0] = Q::zero();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.comp.iter().flatten().all(Zero::is_zero)
    }

    /// Real degrees carrying a nonzero component, ascending.
    pub fn nonzero_degrees(&self) -> Vec<u32> {
        self.comp
            .iter()
            .enumerate()
            .filter(|(_, c)| c.iter().any(|x| !x.is_zero()))
            .map(|(k, _)| 2 * k as u32)
            .collect()
    }

    /// True for the zero class and for classes concentrated in `degree`.
    pub fn is_homogeneous_of(&self, degree: u32) -> bool {
        self.nonzero_degrees().iter().all(|&d| d == degree)
    }

    /// Polynomial representative built from the basis monomials.
    pub fn to_poly(&self) -> Poly {
        let mut p = Poly::zero(self.ring.ngens());
        for (k, c) in self.comp.iter().enumerate() {
            for (m, x) in self.ring.basis(2 * k as u32).iter().zip(c) {
                p.add_term(m.clone(), x.clone());
            }
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Cls {
        let comp = self.comp.iter().map(|v| v.iter().map(|x| x * c).collect()).collect();
        Cls { ring: self.ring.clone(), comp }
    }

    fn check(&self, other: &Cls) -> Result<()> {
        if self.same_ring(other) {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }

    pub fn checked_add(&self, other: &Cls) -> Result<Cls> {
        self.check(other)?;
        let comp = self
            .comp
            .iter()
            .zip(&other.comp)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x + y).collect())
            .collect();
        Ok(Cls { ring: self.ring.clone(), comp })
    }

    pub fn checked_sub(&self, other: &Cls) -> Result<Cls> {
        self.checked_add(&other.scale(&-Q::one()))
    }

    /// Product in normal form; every term above the truncation is dropped.
    pub fn checked_mul(&self, other: &Cls) -> Result<Cls> {
        self.check(other)?;
        let ring = &self.ring;
        let n = ring.half_top() as usize;
        let mut out = Cls::zero(ring);
        for k1 in 0..=n {
            let b1 = ring.basis(2 * k1 as u32);
            for (i, a) in self.comp[k1].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for k2 in 0..=n - k1 {
                    let b2 = ring.basis(2 * k2 as u32);
                    for (j, b) in other.comp[k2].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        out.add_monomial(&b1[i].mul(&b2[j]), &(a * b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Cls {
        let mut acc = Cls::one(&self.ring);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicative inverse `c₀⁻¹ Σ_{k=0}^{n} (−c₀⁻¹ x₊)^k`; the series is
    /// finite because `x₊` is nilpotent under the truncation.
    pub fn invert(&self) -> Result<Cls> {
        let c0 = self.constant_term();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = Q::one() / c0;
        let step = self.positive_part().scale(&-inv0.clone());
        let mut term = Cls::one(&self.ring);
        let mut sum = Cls::one(&self.ring);
        for _ in 0..self.ring.half_top() {
            term = &term * &step;
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum.scale(&inv0))
    }

    /// `Σ_{k=0}^{n} x^k / k!` for a class with zero degree-0 part.
    pub fn exp(&self) -> Result<Cls> {
        let c0 = self.constant_term();
        if !c0.is_zero() {
            return Err(Error::NotNilpotent(c0));
        }
        let mut term = Cls::one(&self.ring);
        let mut sum = Cls::one(&self.ring);
        for k in 1..=self.ring.half_top() {
            term = (&term * self).scale(&Q::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            sum = &sum + &term;
        }
        Ok(sum)
    }

    pub fn integrality(&self) -> IntegralityReport {
        let mut offending = Vec::new();
        for (k, c) in self.comp.iter().enumerate() {
            let degree = 2 * k as u32;
            for (m, x) in self.ring.basis(degree).iter().zip(c) {
                if !x.denom().is_one() {
                    offending.push(Offender {
                        degree,
                        monomial: self.ring.render_monomial(m),
                        coefficient: x.clone(),
                    });
                }
            }
        }
        IntegralityReport { offending }
    }

    /// `(degree, rendered component)` for every nonzero degree, with basis
    /// monomials largest first.
    pub fn render_components(&self) -> Vec<(u32, String)> {
        self.nonzero_degrees()
            .into_iter()
            .map(|d| (d, self.render_degree(d)))
            .collect()
    }

    pub fn render_degree(&self, degree: u32) -> String {
        super::render_terms(
            self.ring
                .basis(degree)
                .iter()
                .zip(self.coords(degree))
                .map(|(m, c)| (c.clone(), self.ring.render_monomial(m))),
        )
    }

    /// Single-line rendering such as `1 + 3*H - e + 4*H^2`.
    pub fn render_inline(&self) -> String {
        let terms = self.comp.iter().enumerate().flat_map(|(k, c)| {
            self.ring
                .basis(2 * k as u32)
                .iter()
                .zip(c)
                .map(|(m, x)| (x.clone(), self.ring.render_monomial(m)))
                .collect::<Vec<_>>()
        });
        super::render_terms(terms)
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr for &Cls {
            type Output = Cls;
            fn $f(self, rhs: &Cls) -> Cls {
                self.$checked(rhs).expect("arithmetic on classes from different rings")
            }
        }
        impl $tr for Cls {
            type Output = Cls;
            fn $f(self, rhs: Cls) -> Cls {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Cls> for Cls {
            type Output = Cls;
            fn $f(self, rhs: &Cls) -> Cls {
                (&self).$f(rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &Cls {
    type Output = Cls;
    fn neg(self) -> Cls {
        self.scale(&-Q::one())
    }
}

impl Neg for Cls {
    type Output = Cls;
    fn neg(self) -> Cls {
        -&self
    }
}
