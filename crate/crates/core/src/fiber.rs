//! Fiber-cone growth: analytic spread, the series k ↦ μ(Iᵏ), h-vectors and
//! the Freiman predicate.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lattice::{binomial, generalized_lower_bound};

/// Default bound on the number of points held by one intermediate sumset.
pub const DEFAULT_CAP: usize = 1_000_000;

/// Default number of powers examined by series computations.
pub const DEFAULT_MAX_POWER: usize = 4;

/// Numeric fiber-cone data of a quasi-equigenerated ideal up to `I²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberProfile {
    pub ell: usize,
    pub mu_series: Vec<u64>,
    pub h_partial: Vec<i64>,
    pub freiman: bool,
    pub bound2: i64,
    pub h2: i64,
}

/// One row of [`GrowthReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthRow {
    pub k: usize,
    pub mu: u64,
    pub lower_bound: i64,
    pub meets_bound: bool,
    pub equality: bool,
    pub partial_sum: i64,
    pub partial_sum_nonnegative: bool,
}

/// Growth identities and inequalities for `2 ≤ k ≤ K`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GrowthReport {
    pub ell: usize,
    pub mu_series: Vec<u64>,
    pub h_partial: Vec<i64>,
    pub rows: Vec<GrowthRow>,
    /// Equality holds at every computed k.
    pub equality_everywhere: bool,
    /// Conditions not checked independently; they follow from `h₂ = 0`.
    pub implied_by_h2_zero: Vec<&'static str>,
}

fn witnessed(ideal: &MonomialIdeal) -> Result<std::borrow::Cow<'_, MonomialIdeal>> {
    if ideal.witness().is_some() {
        Ok(std::borrow::Cow::Borrowed(ideal))
    } else {
        Ok(std::borrow::Cow::Owned(ideal.clone().into_witnessed()?))
    }
}

/// ℓ(I) = dim A(G(I)) + 1.
pub fn analytic_spread(ideal: &MonomialIdeal) -> Result<usize> {
    let ideal = witnessed(ideal)?;
    Ok(ideal.generators().affine_dim()? + 1)
}

/// `[1, μ(I), μ(I²), …, μ(I^K)]`, by incremental dilation of the
/// generators. Fails with [`Error::ResourceLimit`] if any power has more
/// than `cap` generators.
pub fn mu_series(ideal: &MonomialIdeal, max_power: usize, cap: usize) -> Result<Vec<u64>> {
    let ideal = witnessed(ideal)?;
    let mut out = Vec::with_capacity(max_power + 1);
    out.push(1);
    for set in ideal.generators().dilations(cap).take(max_power) {
        out.push(set?.len() as u64);
    }
    Ok(out)
}

/// h-vector coefficients `h₀ … h_K` determined by a prefix of the Hilbert
/// function, from `μ(Iᵏ) = Σᵢ C(ℓ+k−i−1, k−i)·hᵢ`.
pub fn h_vector(mu: &[u64], ell: usize) -> Result<Vec<i64>> {
    if mu.first() != Some(&1) {
        return Err(Error::MalformedSeries("series must start with 1".into()));
    }
    if ell == 0 {
        return Err(Error::MalformedSeries(
            "analytic spread must be positive".into(),
        ));
    }
    let ovf = || Error::Overflow("h_vector");
    let ell = ell as u64;
    let mut h: Vec<i64> = Vec::with_capacity(mu.len());
    for (k, &m) in mu.iter().enumerate() {
        let mut acc = i64::try_from(m).map_err(|_| ovf())?;
        for (i, &hi) in h.iter().enumerate() {
            let d = (k - i) as u64;
            let c = binomial(ell + d - 1, d).ok_or_else(ovf)?;
            acc = acc
                .checked_sub(c.checked_mul(hi).ok_or_else(ovf)?)
                .ok_or_else(ovf)?;
        }
        h.push(acc);
    }
    Ok(h)
}

/// Inverse of [`h_vector`]: the Hilbert function values `μ(I⁰) … μ(I^K)`.
pub fn mu_from_h(h: &[i64], ell: usize, max_power: usize) -> Result<Vec<i64>> {
    let ovf = || Error::Overflow("mu_from_h");
    let ell = ell as u64;
    (0..=max_power)
        .map(|k| {
            h.iter()
                .enumerate()
                .take(k + 1)
                .try_fold(0i64, |acc, (i, &hi)| {
                    let d = (k - i) as u64;
                    let c = binomial(ell + d - 1, d)?;
                    acc.checked_add(c.checked_mul(hi)?)
                })
                .ok_or_else(ovf)
        })
        .collect()
}

/// The weighted partial sum `Σ_{i=2}^{k} C(ℓ+k−i−1, k−i)·hᵢ`, which equals
/// `μ(Iᵏ)` minus its lower bound.
pub fn partial_sum(h: &[i64], ell: usize, k: usize) -> Result<i64> {
    let ovf = || Error::Overflow("partial_sum");
    let ell = ell as u64;
    (2..=k.min(h.len().saturating_sub(1))).try_fold(0i64, |acc, i| {
        let d = (k - i) as u64;
        let c = binomial(ell + d - 1, d).ok_or_else(ovf)?;
        acc.checked_add(c.checked_mul(h[i]).ok_or_else(ovf)?)
            .ok_or_else(ovf)
    })
}

/// Decides whether a quasi-equigenerated ideal is Freiman, i.e. whether
/// `μ(I²) = ℓ·μ(I) − C(ℓ, 2)`.
pub fn is_freiman(ideal: &MonomialIdeal) -> Result<FiberProfile> {
    is_freiman_capped(ideal, usize::MAX)
}

pub fn is_freiman_capped(ideal: &MonomialIdeal, cap: usize) -> Result<FiberProfile> {
    let ideal = witnessed(ideal)?;
    let ell = analytic_spread(&ideal)?;
    let mu_series = mu_series(&ideal, 2, cap)?;
    let bound2 = generalized_lower_bound(mu_series[1], ell as u64, 2)?;
    let h_partial = h_vector(&mu_series, ell)?;
    let h2 = i64::try_from(mu_series[2]).map_err(|_| Error::Overflow("mu"))? - bound2;
    debug_assert_eq!(h2, h_partial[2]);
    Ok(FiberProfile {
        ell,
        freiman: h2 == 0,
        mu_series,
        h_partial,
        bound2,
        h2,
    })
}

/// Compares `μ(Iᵏ)` with its lower bound for `2 ≤ k ≤ K`.
pub fn check_growth_identities(
    ideal: &MonomialIdeal,
    max_power: usize,
    cap: usize,
) -> Result<GrowthReport> {
    if max_power < 2 {
        return Err(Error::MalformedSeries(
            "max power must be at least 2".into(),
        ));
    }
    let ideal = witnessed(ideal)?;
    let ell = analytic_spread(&ideal)?;
    let mu = mu_series(&ideal, max_power, cap)?;
    let h = h_vector(&mu, ell)?;
    let rows = (2..=max_power)
        .map(|k| {
            let lower_bound = generalized_lower_bound(mu[1], ell as u64, k as u64)?;
            let mu_k = i64::try_from(mu[k]).map_err(|_| Error::Overflow("mu"))?;
            let ps = partial_sum(&h, ell, k)?;
            debug_assert_eq!(ps, mu_k - lower_bound);
            Ok(GrowthRow {
                k,
                mu: mu[k],
                lower_bound,
                meets_bound: mu_k >= lower_bound,
                equality: mu_k == lower_bound,
                partial_sum: ps,
                partial_sum_nonnegative: ps >= 0,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let equality_everywhere = rows.iter().all(|r| r.equality);
    let implied_by_h2_zero = if h[2] == 0 {
        vec![
            "minimal multiplicity",
            "Cohen-Macaulay with 2-linear resolution",
            "reduction number at most 1",
        ]
    } else {
        Vec::new()
    };
    Ok(GrowthReport {
        ell,
        mu_series: mu,
        h_partial: h,
        rows,
        equality_everywhere,
        implied_by_h2_zero,
    })
}
