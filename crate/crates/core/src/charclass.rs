//! Characteristic-class conversions for formal bundles.
//!
//! Everything is computed from the total Chern class through power sums
//! (Newton's identities); no roots are ever factored. The Chern character is
//! `rank + Σ p_k / k!` and the Todd class is `exp(Σ_j ℓ_j p_j)` where
//! `Σ_j ℓ_j t^j = log(t / (1 − e^{−t}))`, a scalar series computed exactly.
//!
//! Virtual classes are allowed: no vanishing `c_k = 0` for `k > rank` is
//! imposed, only reported by [`TotalChern::rank_excess`].

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::divisor::{log_chern, strata, ScArrangement};
use crate::ring::Cls;
use crate::space::Space;
use crate::verdict::Verdict;
use crate::{Error, Result, Q};

/// `c = 1 + c₁ + c₂ + …` of a (possibly virtual) bundle of the given rank.
#[derive(Clone, Debug, PartialEq)]
pub struct TotalChern {
    rank: u32,
    class: Cls,
}

impl TotalChern {
    pub fn new(rank: u32, class: Cls) -> Result<TotalChern> {
        if !class.constant_term().is_one() {
            return Err(Error::NotNormalized(class.constant_term()));
        }
        Ok(TotalChern { rank, class })
    }

    /// `Π_i (1 + x_i)` for line bundles with first Chern classes `x_i`.
    pub fn split(ring: &std::sync::Arc<crate::GradedRing>, roots: &[Cls]) -> TotalChern {
        let class = roots.iter().fold(Cls::one(ring), |acc, x| &acc * &(Cls::one(ring) + x));
        TotalChern { rank: roots.len() as u32, class }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn class(&self) -> &Cls {
        &self.class
    }

    /// `c_k`, the degree-`2k` component.
    pub fn chern(&self, k: u32) -> Cls {
        self.class.component(2 * k)
    }

    /// Indices `k > rank` with `c_k ≠ 0`.
    pub fn rank_excess(&self) -> Vec<u32> {
        self.class
            .nonzero_degrees()
            .into_iter()
            .map(|d| d / 2)
            .filter(|&k| k > self.rank)
            .collect()
    }
}

/// `p_1, …, p_k` by Newton's identities,
/// `p_k = c₁p_{k−1} − c₂p_{k−2} + … + (−1)^{k−1} k c_k`.
pub fn power_sums(tc: &TotalChern, up_to: u32) -> Result<Vec<Cls>> {
    let max = tc.class.ring().half_top();
    if up_to > max {
        return Err(Error::PowerSumRange { requested: up_to, max });
    }
    let c: Vec<Cls> = (0..=up_to).map(|k| tc.chern(k)).collect();
    let mut p: Vec<Cls> = Vec::with_capacity(up_to as usize);
    for k in 1..=up_to as usize {
        let mut pk = c[k].scale(&Q::from_integer(BigInt::from(k)));
        if k % 2 == 0 {
            pk = -pk;
        }
        for i in 1..k {
            let term = &c[i] * &p[k - i - 1];
            pk = if i % 2 == 1 { &pk + &term } else { &pk - &term };
        }
        p.push(pk);
    }
    Ok(p)
}

fn factorial(k: u32) -> Q {
    Q::from_integer((1..=k).map(BigInt::from).product())
}

/// `ch = rank + Σ_{k≥1} p_k / k!`.
pub fn chern_character(tc: &TotalChern) -> Cls {
    let ring = tc.class.ring();
    let n = ring.half_top();
    let p = power_sums(tc, n).expect("n is in range");
    p.iter().enumerate().fold(Cls::constant(ring, Q::from_integer(tc.rank.into())), |acc, (i, pk)| {
        &acc + &pk.scale(&(Q::one() / factorial(i as u32 + 1)))
    })
}

/// Inverse of [`chern_character`]: recovers `c` from `ch` through
/// `p_k = k!·ch_k` and `k·c_k = Σ_{i=1}^{k} (−1)^{i−1} c_{k−i} p_i`.
/// The degree-0 part of `ch` must be a non-negative integer (the rank).
pub fn chern_from_character(ch: &Cls) -> Result<TotalChern> {
    let ring = ch.ring();
    let r0 = ch.constant_term();
    if !r0.is_integer() || r0.is_negative() {
        return Err(Error::Precondition(format!("rank {r0} of a Chern character must be a non-negative integer")));
    }
    let rank: u32 = r0.to_integer().try_into().map_err(|_| Error::Precondition("rank too large".into()))?;
    let n = ring.half_top();
    let p: Vec<Cls> = (1..=n).map(|k| ch.component(2 * k).scale(&factorial(k))).collect();
    let mut c = vec![Cls::one(ring)];
    for k in 1..=n as usize {
        let mut acc = Cls::zero(ring);
        for i in 1..=k {
            let term = &c[k - i] * &p[i - 1];
            acc = if i % 2 == 1 { &acc + &term } else { &acc - &term };
        }
        c.push(acc.scale(&Q::new(1.into(), BigInt::from(k))));
    }
    let class = c.iter().fold(Cls::zero(ring), |acc, x| &acc + x);
    TotalChern::new(rank, class)
}

/// Truncated scalar power series `Σ a_j t^j`, `j ≤ n`.
mod series {
    use num_traits::{One, Zero};

    use crate::Q;

    pub fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
        let n = a.len();
        let mut out = vec![Q::zero(); n];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().take(n - i).enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    }

    /// `log(a)` for `a₀ = 1` via `Σ_m (−1)^{m+1} (a−1)^m / m`.
    pub fn log(a: &[Q]) -> Vec<Q> {
        let n = a.len();
        assert!(a[0].is_one());
        let mut u = a.to_vec();
        u[0] = Q::zero();
        let mut out = vec![Q::zero(); n];
        let mut pow = u.clone();
        for m in 1..n {
            let f = Q::new(if m % 2 == 1 { 1.into() } else { (-1).into() }, m.into());
            for (o, x) in out.iter_mut().zip(&pow) {
                *o += &f * x;
            }
            pow = mul(&pow, &u);
        }
        out
    }
}

/// Coefficients `ℓ_1, …, ℓ_n` of `log(t / (1 − e^{−t}))`.
pub fn todd_log_coefficients(n: u32) -> Vec<Q> {
    // (1 − e^{−t})/t = Σ_k (−1)^k t^k / (k+1)!, and log(t/(1−e^{−t})) = −log of it.
    let len = n as usize + 1;
    let f: Vec<Q> = (0..len)
        .map(|k| {
            let s = Q::one() / factorial(k as u32 + 1);
            if k % 2 == 0 {
                s
            } else {
                -s
            }
        })
        .collect();
    series::log(&f).into_iter().skip(1).map(|x| -x).collect()
}

/// `td = exp(Σ_j ℓ_j p_j)`; low terms `1 + c₁/2 + (c₁² + c₂)/12 + c₁c₂/24`.
pub fn todd_class(tc: &TotalChern) -> Cls {
    let ring = tc.class.ring();
    let n = ring.half_top();
    let p = power_sums(tc, n).expect("n is in range");
    let ell = todd_log_coefficients(n);
    let exponent = p.iter().zip(&ell).fold(Cls::zero(ring), |acc, (pj, l)| &acc + &pj.scale(l));
    exponent.exp().expect("exponent has no degree-0 part")
}

/// `s = c⁻¹`.
pub fn segre(tc: &TotalChern) -> Cls {
    tc.class.invert().expect("total Chern classes are units")
}

/// `Σ_k (−1)^k c_k`: turns `c(E)` into `c(E^*)`, e.g. `c(Ω¹_X)` from `c(TX)`.
pub fn dual(c: &Cls) -> Cls {
    let ring = c.ring();
    (0..=ring.half_top()).fold(Cls::zero(ring), |acc, k| {
        let part = c.component(2 * k);
        if k % 2 == 0 {
            &acc + &part
        } else {
            &acc - &part
        }
    })
}

fn require_over(space: &Space, arr: &ScArrangement) -> Result<()> {
    if arr.is_over(space) {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

/// `c(ι_*O_Ṽ) = Π_i (1 − v_i)⁻¹`, from Whitney on
/// `0 → O_X(−V_i) → O_X → O_{V_i} → 0`.
pub fn sheaf_chern_of_divisor(space: &Space, arr: &ScArrangement) -> Result<Cls> {
    require_over(space, arr)?;
    arr.classes().iter().try_fold(space.one(), |acc, v| Ok(&acc * &(space.one() - v).invert()?))
}

/// `ch(O_{V_i}) = ch(O_X) − ch(O_X(−V_i))`, summed over the components.
pub fn sheaf_character_of_divisor(space: &Space, arr: &ScArrangement) -> Result<Cls> {
    require_over(space, arr)?;
    let one = space.one();
    arr.classes().iter().try_fold(Cls::zero(space.ring()), |acc, v| {
        let dual_line = TotalChern::new(1, &one - v)?;
        Ok(&acc + &(&one - &chern_character(&dual_line)))
    })
}

/// The duality-transported sheaf identity
/// `c(Ω¹_X(log V)) = c(Ω¹_X)·c(ι_*O_Ṽ)`, compared against the log-tangent
/// class computed from the stratum formula.
pub fn omx_log_consistency(space: &Space, arr: &ScArrangement) -> Result<Verdict> {
    require_over(space, arr)?;
    let lhs = dual(&log_chern(space, &strata(arr))?);
    let rhs = &dual(space.tangent_chern()) * &sheaf_chern_of_divisor(space, arr)?;
    Ok(Verdict::classes("c(Omega^1(log V)) = c(Omega^1) c(i_* O_V~)", lhs, rhs))
}

/// Grothendieck–Riemann–Roch consistency for a simple-crossings divisor,
/// where the normalization is `⊔ V_i`:
///
/// * `ch(ι_*O_Ṽ) = ι_*(td(Ṽ)) / td(X)`, with
///   `ι_*(td(V_i)) = v_i · td(X) / td(O(V_i))`;
/// * the total Chern class recovered from that character equals
///   `Π (1 − v_i)⁻¹`;
/// * the sheaf route agrees with the stratum route ([`omx_log_consistency`]).
pub fn divisor_grr_check(space: &Space, arr: &ScArrangement) -> Result<Vec<Verdict>> {
    require_over(space, arr)?;
    let one = space.one();
    let td_x = todd_class(&TotalChern::new(space.dim(), space.tangent_chern().clone())?);
    let td_x_inv = td_x.invert()?;
    let ch = sheaf_character_of_divisor(space, arr)?;
    let pushed = arr.classes().iter().try_fold(Cls::zero(space.ring()), |acc, v| {
        let td_line = todd_class(&TotalChern::new(1, &one + v)?);
        Ok::<_, Error>(&acc + &(&(v * &td_x) * &td_line.invert()?))
    })?;
    let grr = Verdict::classes("ch(i_* O_V~) = i_*(td(V~)) / td(X)", ch.clone(), &pushed * &td_x_inv);
    let from_ch = chern_from_character(&ch)?;
    let translated = Verdict::classes(
        "c(i_* O_V~) from its Chern character",
        from_ch.class().clone(),
        sheaf_chern_of_divisor(space, arr)?,
    );
    Ok(vec![grr, translated, omx_log_consistency(space, arr)?])
}
