use std::collections::HashMap;
use std::sync::Arc;


use super::{linalg, Cls, GradedRing, Monomial, Poly};
use crate::{Error, Result, Q};

/// A degree-preserving ring homomorphism given by the images of the source
/// generators. Construction checks that every source relation maps to zero.
#[derive(Clone, Debug)]
pub struct RingMap {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    images: Vec<Cls>,
}

impl RingMap {
    pub fn new(source: Arc<GradedRing>, target: Arc<GradedRing>, images: Vec<Cls>) -> Result<RingMap> {
        if images.len() != source.ngens() {
            return Err(Error::BadRingMap(format!(
                "{} generator images for {} generators",
                images.len(),
                source.ngens()
            )));
        }
        for (g, img) in source.generators().iter().zip(&images) {
            if !img.belongs_to(&target) {
                return Err(Error::MixedRings);
            }
            if !img.is_homogeneous_of(g.degree) {
                return Err(Error::BadRingMap(format!(
                    "image of `{}` is not homogeneous of degree {}",
                    g.name, g.degree
                )));
            }
        }
        let map = RingMap { source, target, images };
        for (i, rel) in map.source.presentation().relations.iter().enumerate() {
            let img = map.apply_poly(rel)?;
            if !img.is_zero() {
                return Err(Error::BadRingMap(format!(
                    "relation #{i} maps to {} instead of 0",
                    img.render_inline()
                )));
            }
        }
        // Products that vanish by truncation in the source must vanish in
        // the target too; every such monomial is divisible by one of degree
        // just above the source truncation.
        let n_src = map.source.half_top();
        let max_w = map.source.half_weights().iter().copied().max().unwrap_or(0);
        let mut cache = HashMap::new();
        for k in n_src + 1..=n_src + max_w {
            for m in super::monomials_of_degree(map.source.half_weights(), k) {
                let img = map.image_of_monomial(&m, &mut cache);
                if !img.is_zero() {
                    return Err(Error::BadRingMap(format!(
                        "{} vanishes by truncation but maps to {}",
                        map.source.render_monomial(&m),
                        img.render_inline()
                    )));
                }
            }
        }
        Ok(map)
    }

    /// The map sending the i-th generator of `source` to the i-th generator
    /// of `target` (a ring with at least as many generators).
    pub fn inclusion(source: Arc<GradedRing>, target: Arc<GradedRing>) -> Result<RingMap> {
        let images = (0..source.ngens()).map(|i| Cls::generator(&target, i)).collect();
        RingMap::new(source, target, images)
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn images(&self) -> &[Cls] {
        &self.images
    }

    fn image_of_monomial(&self, m: &Monomial, cache: &mut HashMap<(usize, u32), Cls>) -> Cls {
        let mut acc = Cls::one(&self.target);
        for (i, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            let p = cache.entry((i, e)).or_insert_with(|| self.images[i].pow(e)).clone();
            acc = &acc * &p;
        }
        acc
    }

    /// Evaluates a polynomial in the source generators at their images.
    pub fn apply_poly(&self, p: &Poly) -> Result<Cls> {
        if p.nvars() != self.source.ngens() {
            return Err(Error::VariableCount { expected: self.source.ngens(), found: p.nvars() });
        }
        let mut cache = HashMap::new();
        let mut out = Cls::zero(&self.target);
        for (m, c) in p.terms() {
            out = &out + &self.image_of_monomial(m, &mut cache).scale(c);
        }
        Ok(out)
    }

    pub fn apply(&self, x: &Cls) -> Result<Cls> {
        if !x.belongs_to(&self.source) {
            return Err(Error::MixedRings);
        }
        self.apply_poly(&x.to_poly())
    }

    /// Matrix of the map in real degree `degree`: one row per target basis
    /// element, one column per source basis element.
    pub fn matrix(&self, degree: u32) -> Vec<Vec<Q>> {
        let src = self.source.basis(degree);
        let rows = self.target.dim(degree);
        let mut cache = HashMap::new();
        let cols: Vec<Cls> = src.iter().map(|m| self.image_of_monomial(m, &mut cache)).collect();
        (0..rows)
            .map(|r| cols.iter().map(|c| c.coords(degree)[r].clone()).collect())
            .collect()
    }

    /// Basis of the kernel in real degree `degree`, as source classes.
    pub fn kernel(&self, degree: u32) -> Vec<Cls> {
        let ncols = self.source.dim(degree);
        let m = self.matrix(degree);
        linalg::nullspace(&m, ncols)
            .into_iter()
            .map(|v| Cls::from_coords(&self.source, degree, v))
            .collect()
    }

    pub fn is_surjective_in(&self, degree: u32) -> bool {
        linalg::rank(&self.matrix(degree)) == self.target.dim(degree)
    }

    /// Even degrees where the map misses part of the target.
    pub fn surjectivity_gaps(&self) -> Vec<u32> {
        (0..=self.target.half_top())
            .map(|k| 2 * k)
            .filter(|&d| !self.is_surjective_in(d))
            .collect()
    }

    pub fn is_injective(&self) -> bool {
        (0..=self.source.half_top()).all(|k| {
            let d = 2 * k;
            linalg::rank(&self.matrix(d)) == self.source.dim(d)
        })
    }

    pub fn preserves_unit(&self) -> bool {
        self.apply(&Cls::one(&self.source)).map_or(false, |x| x == Cls::one(&self.target))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{build_ring, Generator, RingPresentation};

    fn h_ring(name: &str, n: u32) -> Arc<GradedRing> {
        let h = Poly::var(1, 0);
        build_ring(RingPresentation::new(vec![Generator::new(name, 2)], vec![h.pow(n + 1)], 2 * n)).unwrap()
    }

    #[test]
    fn restriction_to_a_line() {
        let p3 = h_ring("H", 3);
        let p1 = h_ring("h", 1);
        let rho = RingMap::new(p3.clone(), p1.clone(), vec![Cls::generator(&p1, 0)]).unwrap();
        assert_eq!(rho.surjectivity_gaps(), Vec::<u32>::new());
        assert_eq!(rho.kernel(2).len(), 0);
        assert_eq!(rho.kernel(4).len(), 1);
        assert!(!rho.is_injective());
        let h2 = Cls::generator(&p3, 0).pow(2);
        assert!(rho.apply(&h2).unwrap().is_zero());
        assert!(rho.preserves_unit());
    }

    #[test]
    fn rejects_non_homomorphisms() {
        let p1 = h_ring("H", 1);
        let p2 = h_ring("h", 2);
        // H^2 = 0 upstairs but h^2 != 0 downstairs.
        let err = RingMap::new(p1, p2.clone(), vec![Cls::generator(&p2, 0)]).unwrap_err();
        assert!(matches!(err, Error::BadRingMap(_)));
    }
}
