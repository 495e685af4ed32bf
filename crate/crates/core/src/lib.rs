//! Freiman ideals and their fiber cones, computed exactly.
//!
//! A quasi-equigenerated monomial ideal `I` has `μ(I²) ≥ ℓ·μ(I) − C(ℓ, 2)`,
//! where `ℓ` is its analytic spread; `I` is *Freiman* when equality holds.
//! Since the exponent vectors of `G(Iᵏ)` form the k-fold sumset of those of
//! `G(I)`, everything here reduces to exact lattice-point arithmetic:
//!
//! * [`lattice`]: point sets, sumsets, dilates, affine dimension, bounds.
//! * [`ideal`]: minimal generating sets, powers, quasi-equigeneration.
//! * [`fiber`]: analytic spread, `μ(Iᵏ)` series, h-vectors, the Freiman test.
//! * [`graph`]: edge ideals and the combinatorial Freiman-graph classifier.
//! * [`matroid`]: cycle matroids, matroidal ideals, spread and regularity.
//! * [`corpus`]: exhaustive and random small-graph corpora.
//! * [`io`], [`report`], [`verify`]: file formats, reports, and the sweep
//!   that cross-checks the combinatorial classifiers against the numbers.

pub mod corpus;
pub mod error;
pub mod fiber;
pub mod graph;
pub mod ideal;
pub mod io;
pub mod lattice;
pub mod linalg;
pub mod matroid;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use fiber::{FiberProfile, GrowthReport};
pub use graph::{GraphVerdict, SimpleGraph};
pub use ideal::{Monomial, MonomialIdeal, Witness};
pub use lattice::{ExponentVector, PointSet};
pub use matroid::{CycleMatroid, MatroidVerdict};
