//! Outcomes of identity checks. A check holds only on an exactly zero
//! difference; there are no tolerances anywhere.

use crate::ring::{Cls, IntegralityReport};
use crate::Q;

#[derive(Clone, Debug, PartialEq)]
pub enum Evidence {
    /// Both sides of a class identity and `lhs - rhs`.
    Classes { lhs: Cls, rhs: Cls, difference: Cls },
    Scalars { lhs: Q, rhs: Q },
    /// Named rows of integers, e.g. a Betti-number table.
    Table { rows: Vec<(String, Vec<i64>)> },
    Integrality { class: Cls, report: IntegralityReport },
    Note(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
    pub evidence: Evidence,
}

impl Verdict {
    /// Exact class equality. Mixed rings never hold.
    pub fn classes(name: impl Into<String>, lhs: Cls, rhs: Cls) -> Verdict {
        let (holds, difference) = match lhs.checked_sub(&rhs) {
            Ok(d) => (d.is_zero(), d),
            Err(_) => (false, lhs.clone()),
        };
        Verdict { name: name.into(), holds, evidence: Evidence::Classes { lhs, rhs, difference } }
    }

    pub fn scalars(name: impl Into<String>, lhs: Q, rhs: Q) -> Verdict {
        Verdict { name: name.into(), holds: lhs == rhs, evidence: Evidence::Scalars { lhs, rhs } }
    }

    pub fn table(name: impl Into<String>, holds: bool, rows: Vec<(String, Vec<i64>)>) -> Verdict {
        Verdict { name: name.into(), holds, evidence: Evidence::Table { rows } }
    }

    pub fn integrality(name: impl Into<String>, class: &Cls) -> Verdict {
        let report = class.integrality();
        Verdict {
            name: name.into(),
            holds: report.passes(),
            evidence: Evidence::Integrality { class: class.clone(), report },
        }
    }

    pub fn note(name: impl Into<String>, holds: bool, text: impl Into<String>) -> Verdict {
        Verdict { name: name.into(), holds, evidence: Evidence::Note(text.into()) }
    }

    /// Lowest degree where a failed class identity differs.
    pub fn first_discrepancy(&self) -> Option<u32> {
        match &self.evidence {
            Evidence::Classes { difference, .. } if !self.holds => {
                difference.nonzero_degrees().first().copied()
            }
            _ => None,
        }
    }
}

pub fn all_hold(verdicts: &[Verdict]) -> bool {
    verdicts.iter().all(|v| v.holds)
}
