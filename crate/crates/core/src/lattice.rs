//! Lattice points in Zⁿ≥0 and exact sumset arithmetic.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

/// Pair counts above this threshold are summed in parallel.
const PARALLEL_PAIRS: usize = 1 << 16;

/// A point of Zⁿ with nonnegative coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Box<[u64]>);

impl ExponentVector {
    pub fn new(coords: impl Into<Box<[u64]>>) -> Self {
        ExponentVector(coords.into())
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim].into_boxed_slice())
    }

    /// The `i`-th unit vector (0-based).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v.into_boxed_slice())
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Total degree, the sum of the coordinates.
    pub fn degree(&self) -> Result<u64> {
        self.0
            .iter()
            .try_fold(0u64, |acc, &c| acc.checked_add(c))
            .ok_or(Error::Overflow("degree"))
    }

    /// Weighted degree ⟨weights, self⟩.
    pub fn weighted_degree(&self, weights: &[u64]) -> Result<u64> {
        self.0
            .iter()
            .zip(weights)
            .try_fold(0u64, |acc, (&c, &w)| acc.checked_add(c.checked_mul(w)?))
            .ok_or(Error::Overflow("weighted degree"))
    }

    /// Coordinatewise `self <= other`, i.e. the monomial `x^self` divides `x^other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn checked_add(&self, other: &ExponentVector) -> Result<ExponentVector> {
        let mut out = vec![0; self.dim()];
        add_into(&self.0, &other.0, &mut out)?;
        Ok(ExponentVector(out.into_boxed_slice()))
    }
}

impl fmt::Debug for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl From<Vec<u64>> for ExponentVector {
    fn from(v: Vec<u64>) -> Self {
        ExponentVector(v.into_boxed_slice())
    }
}

fn add_into(a: &[u64], b: &[u64], out: &mut [u64]) -> Result<()> {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x
            .checked_add(*y)
            .ok_or(Error::Overflow("sumset coordinates"))?;
    }
    Ok(())
}

/// A finite, duplicate-free set of exponent vectors of one ambient dimension.
///
/// Points are kept in lexicographic order, so equality of sets is equality
/// of the stored vectors and iteration order is deterministic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PointSet {
    dim: usize,
    points: Vec<ExponentVector>,
}

impl PointSet {
    /// Builds a point set, discarding repeated points.
    pub fn new(dim: usize, points: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut points: Vec<ExponentVector> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        points.sort_unstable();
        points.dedup();
        Ok(PointSet { dim, points })
    }

    pub fn empty(dim: usize) -> Result<Self> {
        Self::new(dim, [])
    }

    /// Convenience constructor from plain coordinate rows; the dimension is
    /// taken from the first row.
    pub fn from_rows<R: AsRef<[u64]>>(rows: &[R]) -> Result<Self> {
        let dim = rows.first().ok_or(Error::EmptyPointSet)?.as_ref().len();
        Self::new(dim, rows.iter().map(|r| ExponentVector::new(r.as_ref())))
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[ExponentVector] {
        &self.points
    }

    pub fn iter(&self) -> std::slice::Iter<'_, ExponentVector> {
        self.points.iter()
    }

    pub fn contains(&self, p: &ExponentVector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    fn check_same_dim(&self, other: &PointSet) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    /// `{a + b : a ∈ self, b ∈ other}`.
    pub fn sumset(&self, other: &PointSet) -> Result<PointSet> {
        self.sumset_capped(other, usize::MAX)
    }

    /// As [`sumset`](Self::sumset), failing with [`Error::ResourceLimit`] as
    /// soon as the result would hold more than `cap` points.
    pub fn sumset_capped(&self, other: &PointSet, cap: usize) -> Result<PointSet> {
        self.check_same_dim(other)?;
        let pairs = self.len().saturating_mul(other.len());
        let sums = if pairs >= PARALLEL_PAIRS && rayon::current_num_threads() > 1 {
            let chunk = (self.len() / rayon::current_num_threads()).max(1);
            let partial: Vec<HashSet<Box<[u64]>>> = self
                .points
                .par_chunks(chunk)
                .map(|xs| collect_sums(xs, &other.points, self.dim, cap))
                .collect::<Result<_>>()?;
            let mut all = HashSet::new();
            for part in partial {
                all.extend(part);
                if all.len() > cap {
                    return Err(Error::ResourceLimit {
                        what: "sumset size",
                        cap,
                    });
                }
            }
            all
        } else {
            collect_sums(&self.points, &other.points, self.dim, cap)?
        };
        let mut points: Vec<ExponentVector> = sums.into_iter().map(ExponentVector).collect();
        points.sort_unstable();
        Ok(PointSet {
            dim: self.dim,
            points,
        })
    }

    /// The k-fold sumset `kX = X + ⋯ + X`.
    pub fn dilate(&self, k: usize) -> Result<PointSet> {
        self.dilate_capped(k, usize::MAX)
    }

    pub fn dilate_capped(&self, k: usize, cap: usize) -> Result<PointSet> {
        if k == 0 {
            return Err(Error::ZeroDilation);
        }
        let mut it = self.dilations(cap);
        let mut last = None;
        for _ in 0..k {
            last = it.next();
        }
        last.expect("dilations never ends")
    }

    /// Successive dilates `X, 2X, 3X, …`, each obtained as `(k−1)X + X`.
    pub fn dilations(&self, cap: usize) -> Dilations<'_> {
        Dilations {
            base: self,
            current: None,
            cap,
            failed: false,
        }
    }

    /// Dimension of the affine hull of the set, by exact rank of the
    /// difference vectors `x − x₀`.
    pub fn affine_dim(&self) -> Result<usize> {
        let (base, rest) = self.points.split_first().ok_or(Error::EmptyPointSet)?;
        let rows: Vec<Vec<i64>> = rest
            .iter()
            .map(|p| {
                p.coords()
                    .iter()
                    .zip(base.coords())
                    .map(|(&a, &b)| {
                        let d = a as i128 - b as i128;
                        i64::try_from(d).map_err(|_| Error::Overflow("affine direction"))
                    })
                    .collect::<Result<Vec<i64>>>()
            })
            .collect::<Result<_>>()?;
        Ok(linalg::rank(&rows))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points.iter()).finish()
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a ExponentVector;
    type IntoIter = std::slice::Iter<'a, ExponentVector>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

fn collect_sums(
    xs: &[ExponentVector],
    ys: &[ExponentVector],
    dim: usize,
    cap: usize,
) -> Result<HashSet<Box<[u64]>>> {
    let mut seen: HashSet<Box<[u64]>> = HashSet::new();
    let mut buf = vec![0u64; dim];
    for x in xs {
        for y in ys {
            add_into(x.coords(), y.coords(), &mut buf)?;
            if !seen.contains(buf.as_slice()) {
                if seen.len() == cap {
                    return Err(Error::ResourceLimit {
                        what: "sumset size",
                        cap,
                    });
                }
                seen.insert(buf.clone().into_boxed_slice());
            }
        }
    }
    Ok(seen)
}

/// Iterator over `X, 2X, 3X, …` returned by [`PointSet::dilations`].
pub struct Dilations<'a> {
    base: &'a PointSet,
    current: Option<PointSet>,
    cap: usize,
    failed: bool,
}

impl Iterator for Dilations<'_> {
    type Item = Result<PointSet>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.failed {
            return None;
        }
        let next = match &self.current {
            None if self.base.len() > self.cap => Err(Error::ResourceLimit {
                what: "sumset size",
                cap: self.cap,
            }),
            None => Ok(self.base.clone()),
            Some(prev) => prev.sumset_capped(self.base, self.cap),
        };
        match next {
            Ok(set) => {
                self.current = Some(set.clone());
                Some(Ok(set))
            }
            Err(e) => {
                self.failed = true;
                Some(Err(e))
            }
        }
    }
}

/// `C(n, k)` as an `i64`, or `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<i64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after multiplication.
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    i64::try_from(acc).ok()
}

/// Freiman's lower bound `(d+1)·m − C(d+1, 2)` for `|2X|` when `|X| = m`
/// and the affine hull of `X` has dimension `d`.
pub fn freiman_lower_bound(m: u64, d: u64) -> Result<i64> {
    let ovf = || Error::Overflow("freiman_lower_bound");
    let lin = i64::try_from((d as i128 + 1) * m as i128).map_err(|_| ovf())?;
    let c = binomial(d + 1, 2).ok_or_else(ovf)?;
    lin.checked_sub(c).ok_or_else(ovf)
}

/// The lower bound `C(ℓ+k−2, k−1)·m − (k−1)·C(ℓ+k−2, k)` for `|kX|` when
/// `|X| = m` and `X` spans an affine space of dimension `ℓ − 1`.
pub fn generalized_lower_bound(m: u64, ell: u64, k: u64) -> Result<i64> {
    assert!(ell >= 1 && k >= 1, "ell and k must be positive");
    let ovf = || Error::Overflow("generalized_lower_bound");
    let top = ell + k - 2;
    let a = binomial(top, k - 1).ok_or_else(ovf)?;
    let b = binomial(top, k).ok_or_else(ovf)?;
    let m = i64::try_from(m).map_err(|_| ovf())?;
    let first = a.checked_mul(m).ok_or_else(ovf)?;
    let second = b.checked_mul(k as i64 - 1).ok_or_else(ovf)?;
    first.checked_sub(second).ok_or_else(ovf)
}
