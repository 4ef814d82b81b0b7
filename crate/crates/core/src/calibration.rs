//! Selects the blowup sign convention by running every candidate against
//! oracles that do not depend on it.
//!
//! The oracles are the self-intersection of the exceptional curve of a point
//! blown up in `P²` (`∫e² = −1`), the Betti-number decomposition, the Euler
//! characteristic law, and agreement of the two integration routes.

use crate::blowup::{betti_check, blowup_with, chern_blowup, expected_euler, SignConvention};
use crate::catalog;
use crate::ring::Cls;
use crate::verdict::Verdict;
use crate::{q, Result};

/// (catalog space, arrangement, center) triples used as oracles.
pub const ORACLE_SCENARIOS: &[(&str, &str, &str)] = &[
    ("P2", "twolines", "pt_in_P2"),
    ("P3", "threeplanes", "pt_in_P3"),
    ("P3", "twoplanes", "line_in_P3"),
    ("P4", "coord2", "plane_in_P4"),
    ("P1xP1", "cross", "pt_in_P1xP1"),
    ("P1xP2", "twob", "line_in_P1xP2"),
];

pub fn oracle_suite(conv: SignConvention) -> Result<Vec<Verdict>> {
    let mut out = Vec::new();
    for (space, arr, center) in ORACLE_SCENARIOS {
        let entry = catalog::entry(space)?;
        let c = entry.center(center)?;
        let b = match blowup_with(c, conv) {
            Ok(b) => b,
            Err(e) => {
                out.push(Verdict::note(format!("{center}: blowup ring"), false, e.to_string()));
                continue;
            }
        };
        if *center == "pt_in_P2" {
            let e = b.exceptional();
            out.push(Verdict::scalars("pt_in_P2: integral of e^2", b.integrate(&(e * e))?, q(-1, 1)));
        }
        out.push(betti_check(&b));
        out.push(b.integration_consistency()?);
        let ctx = chern_blowup(&b, entry.arrangement(arr)?)?;
        let top = b.ring().top_degree();
        out.push(Verdict::scalars(
            format!("{center}: Euler characteristic law"),
            b.integrate(&ctx.component(top))?,
            expected_euler(&b)?,
        ));
        let one = Cls::one(b.ring());
        out.push(Verdict::scalars(format!("{center}: integral of 1 is 0"), b.integrate(&one)?, q(0, 1)));
    }
    Ok(out)
}

/// Every candidate that passes the whole suite.
pub fn calibrate() -> Result<Vec<SignConvention>> {
    let mut out = Vec::new();
    for conv in SignConvention::candidates() {
        if crate::verdict::all_hold(&oracle_suite(conv)?) {
            out.push(conv);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn calibrated_convention_is_unique() {
        assert_eq!(calibrate().unwrap(), vec![SignConvention::CALIBRATED]);
    }
}
