//! Spaces: a cohomology ring together with its fundamental-class pairing and
//! total Chern class.

use std::sync::Arc;

use num_traits::{One, Zero};

use crate::ring::{Cls, GradedRing};
use crate::{Error, Result, Q};

/// Pairing with the fundamental class, normalized so the point class
/// integrates to 1. Requires a one-dimensional top-degree quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegrationFunctional {
    point: Cls,
}

impl IntegrationFunctional {
    pub fn new(point: Cls) -> Result<Self> {
        let ring = point.ring();
        let top = ring.top_degree();
        let dim = ring.dim(top);
        if dim != 1 {
            return Err(Error::TopDegreeNotOneDimensional(dim));
        }
        if !point.is_homogeneous_of(top) {
            return Err(Error::BadPointClass(format!("{point} is not of degree {top}")));
        }
        if point.is_zero() {
            return Err(Error::BadPointClass("point class is zero".into()));
        }
        Ok(IntegrationFunctional { point })
    }

    pub fn point(&self) -> &Cls {
        &self.point
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.point.ring()
    }

    /// Coefficient of the point class in the top-degree component.
    pub fn integrate(&self, x: &Cls) -> Result<Q> {
        if !x.same_ring(&self.point) {
            return Err(Error::MixedRings);
        }
        let top = self.point.ring().top_degree();
        Ok(&x.coords(top)[0] / &self.point.coords(top)[0])
    }
}

/// A closed even-dimensional manifold as seen by the calculator: its rational
/// cohomology ring, the point class and the total Chern class `c(TX)`.
#[derive(Clone, Debug)]
pub struct Space {
    name: String,
    integration: IntegrationFunctional,
    tangent: Cls,
}

impl Space {
    pub fn new(name: impl Into<String>, point: Cls, tangent_chern: Cls) -> Result<Space> {
        let integration = IntegrationFunctional::new(point)?;
        if !tangent_chern.same_ring(integration.point()) {
            return Err(Error::MixedRings);
        }
        if !tangent_chern.constant_term().is_one() {
            return Err(Error::NotNormalized(tangent_chern.constant_term()));
        }
        Ok(Space { name: name.into(), integration, tangent: tangent_chern })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.integration.ring()
    }

    pub fn point(&self) -> &Cls {
        self.integration.point()
    }

    pub fn integration(&self) -> &IntegrationFunctional {
        &self.integration
    }

    /// `c(TX)`.
    pub fn tangent_chern(&self) -> &Cls {
        &self.tangent
    }

    /// Complex dimension `n`.
    pub fn dim(&self) -> u32 {
        self.ring().half_top()
    }

    pub fn integrate(&self, x: &Cls) -> Result<Q> {
        self.integration.integrate(x)
    }

    /// `∫ c_n(TX)`.
    pub fn euler_characteristic(&self) -> Q {
        self.integrate(&self.tangent).unwrap_or_else(|_| Q::zero())
    }

    /// Same ring and point class with a different total Chern class.
    pub fn with_tangent_chern(&self, name: impl Into<String>, tangent_chern: Cls) -> Result<Space> {
        Space::new(name, self.point().clone(), tangent_chern)
    }

    pub fn one(&self) -> Cls {
        Cls::one(self.ring())
    }

    pub fn generator(&self, name: &str) -> Option<Cls> {
        Cls::generator_named(self.ring(), name)
    }
}
