//! Monomial ideals given by their minimal generators.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{ExponentVector, PointSet};
use crate::linalg::{self, LpOutcome};

/// A monomial `x^c`, identified with its exponent vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub ExponentVector);

impl Monomial {
    pub fn exponent(&self) -> &ExponentVector {
        &self.0
    }
}

impl From<ExponentVector> for Monomial {
    fn from(e: ExponentVector) -> Self {
        Monomial(e)
    }
}

/// Weights `a > 0` and degree `d` with `⟨a, c⟩ = d` for every generator `c`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub weights: Vec<u64>,
    pub degree: u64,
}

impl Witness {
    pub fn standard(dim: usize, degree: u64) -> Self {
        Witness {
            weights: vec![1; dim],
            degree,
        }
    }
}

/// A proper nonzero monomial ideal, stored as its minimal generating set
/// `G(I)`, optionally with a quasi-equigeneration witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    generators: PointSet,
    witness: Option<Witness>,
}

impl MonomialIdeal {
    /// Wraps a set of exponent vectors that must already be a minimal
    /// generating set: nonempty, without the zero vector, and an antichain.
    pub fn new(generators: PointSet) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        if let Some(z) = generators.iter().find(|p| p.is_zero()) {
            return Err(Error::UnitIdeal(z.coords().to_vec()));
        }
        let pts = generators.points();
        for (i, a) in pts.iter().enumerate() {
            for b in &pts[i + 1..] {
                let (divisor, multiple) = if a.divides(b) {
                    (a, b)
                } else if b.divides(a) {
                    (b, a)
                } else {
                    continue;
                };
                return Err(Error::NotAntichain {
                    divisor: divisor.coords().to_vec(),
                    multiple: multiple.coords().to_vec(),
                });
            }
        }
        Ok(MonomialIdeal {
            generators,
            witness: None,
        })
    }

    /// Attaches a witness after checking it against every generator.
    pub fn with_witness(mut self, witness: Witness) -> Result<Self> {
        check_witness(&self.generators, &witness)?;
        self.witness = Some(witness);
        Ok(self)
    }

    /// Attaches a witness if one exists, otherwise fails with
    /// [`Error::NotQuasiEquigenerated`].
    pub fn into_witnessed(self) -> Result<Self> {
        if self.witness.is_some() {
            return Ok(self);
        }
        let w = self
            .quasi_equigenerated_witness()?
            .ok_or(Error::NotQuasiEquigenerated)?;
        Ok(MonomialIdeal {
            witness: Some(w),
            ..self
        })
    }

    pub fn generators(&self) -> &PointSet {
        &self.generators
    }

    pub fn ambient_dim(&self) -> usize {
        self.generators.ambient_dim()
    }

    /// μ(I), the number of minimal generators.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    /// `G(I^k)`. With a witness this is the k-fold sumset of the generators;
    /// otherwise products are formed step by step and minimalized.
    pub fn power(&self, k: usize) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroDilation);
        }
        match &self.witness {
            Some(w) => {
                let generators = self.generators.dilate(k)?;
                let degree = w
                    .degree
                    .checked_mul(k as u64)
                    .ok_or(Error::Overflow("power degree"))?;
                Ok(MonomialIdeal {
                    generators,
                    witness: Some(Witness {
                        weights: w.weights.clone(),
                        degree,
                    }),
                })
            }
            None => self.power_general(k),
        }
    }

    /// `G(I^k)` by repeated multiplication and minimalization, ignoring any
    /// witness.
    pub fn power_general(&self, k: usize) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::ZeroDilation);
        }
        let mut acc = self.generators.clone();
        for _ in 1..k {
            let product = acc.sumset(&self.generators)?;
            acc = minimal_elements(product.points())?;
        }
        Ok(MonomialIdeal {
            generators: acc,
            witness: None,
        })
    }

    /// Searches for weights `a > 0` and a degree `d` with `⟨a, c⟩ = d` on
    /// every generator.
    ///
    /// Equigenerated ideals get `a = (1, …, 1)`. Otherwise an exact linear
    /// program minimizes `Σ aᵢ` over rational `a ≥ 1` orthogonal to all
    /// differences `c − c₁`; the optimum is scaled to a primitive integer
    /// vector.
    pub fn quasi_equigenerated_witness(&self) -> Result<Option<Witness>> {
        let pts = self.generators.points();
        let dim = self.ambient_dim();
        let d0 = pts[0].degree()?;
        let mut equal = true;
        for p in &pts[1..] {
            if p.degree()? != d0 {
                equal = false;
                break;
            }
        }
        if equal {
            return Ok(Some(Witness::standard(dim, d0)));
        }

        // a = 1 + y, y >= 0:  D y = −D·1 where D has rows c − c₁.
        let q = |v: i128| BigRational::from_integer(BigInt::from(v));
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for p in &pts[1..] {
            let diff: Vec<i128> = p
                .coords()
                .iter()
                .zip(pts[0].coords())
                .map(|(&a, &b)| a as i128 - b as i128)
                .collect();
            rhs.push(q(-diff.iter().sum::<i128>()));
            rows.push(diff.into_iter().map(q).collect::<Vec<_>>());
        }
        let cost = vec![BigRational::one(); dim];
        let y = match linalg::minimize(&rows, &rhs, &cost) {
            LpOutcome::Optimal(y) => y,
            LpOutcome::Infeasible => return Ok(None),
            LpOutcome::Unbounded => unreachable!("objective is bounded below by zero"),
        };
        let a: Vec<BigRational> = y.into_iter().map(|v| v + BigRational::one()).collect();
        let lcm = a.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
        let ints: Vec<BigInt> = a.iter().map(|v| (v * &lcm).to_integer()).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        let weights = ints
            .iter()
            .map(|v| {
                let w = v / &gcd;
                debug_assert!(w.is_positive());
                w.to_u64().ok_or(Error::Overflow("witness weights"))
            })
            .collect::<Result<Vec<u64>>>()?;
        let degree = pts[0].weighted_degree(&weights)?;
        let w = Witness { weights, degree };
        check_witness(&self.generators, &w)?;
        Ok(Some(w))
    }
}

fn check_witness(generators: &PointSet, w: &Witness) -> Result<()> {
    if w.weights.len() != generators.ambient_dim() {
        return Err(Error::InvalidWitness(format!(
            "weight vector has length {}, ambient dimension is {}",
            w.weights.len(),
            generators.ambient_dim()
        )));
    }
    if w.weights.contains(&0) {
        return Err(Error::InvalidWitness("weights must be positive".into()));
    }
    if w.degree == 0 {
        return Err(Error::InvalidWitness("degree must be positive".into()));
    }
    for c in generators {
        let deg = c.weighted_degree(&w.weights)?;
        if deg != w.degree {
            return Err(Error::InvalidWitness(format!(
                "generator {c:?} has weighted degree {deg}, expected {}",
                w.degree
            )));
        }
    }
    Ok(())
}

/// The ≤-minimal elements of a list of exponent vectors.
fn minimal_elements(points: &[ExponentVector]) -> Result<PointSet> {
    let dim = points.first().ok_or(Error::ZeroIdeal)?.dim();
    let mut by_degree = points
        .iter()
        .map(|p| Ok((p.degree()?, p)))
        .collect::<Result<Vec<_>>>()?;
    by_degree.sort();
    by_degree.dedup_by(|a, b| a.1 == b.1);
    // A proper divisor has strictly smaller total degree, so it is seen first.
    let mut kept: Vec<&ExponentVector> = Vec::new();
    for (_, p) in by_degree {
        if !kept.iter().any(|m| m.divides(p)) {
            kept.push(p);
        }
    }
    PointSet::new(dim, kept.into_iter().cloned())
}

/// The ideal generated by the given monomials, reduced to `G(I)`.
pub fn minimalize(monomials: &[Monomial]) -> Result<MonomialIdeal> {
    let first = monomials.first().ok_or(Error::ZeroIdeal)?;
    let dim = first.0.dim();
    if let Some(m) = monomials.iter().find(|m| m.0.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: m.0.dim(),
        });
    }
    let exps: Vec<ExponentVector> = monomials.iter().map(|m| m.0.clone()).collect();
    MonomialIdeal::new(minimal_elements(&exps)?)
}
