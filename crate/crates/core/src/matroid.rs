//! Cycle matroids of graphs and their matroidal ideals.
//!
//! The ground set is the edge list of the graph in lexicographic order, so
//! edge `eᵢ` is variable `xᵢ`. The bases are the spanning forests.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fiber::{h_vector, mu_series};
use crate::graph::SimpleGraph;
use crate::ideal::{MonomialIdeal, Witness};
use crate::lattice::{ExponentVector, PointSet};
use crate::linalg;

/// Default cap on the number of bases enumerated.
pub const DEFAULT_FOREST_CAP: usize = 1_000_000;

/// The cycle matroid of a graph with its bases listed explicitly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleMatroid {
    source: SimpleGraph,
    bases: Vec<Vec<usize>>,
}

impl CycleMatroid {
    pub fn new(g: &SimpleGraph, cap: usize) -> Result<Self> {
        Ok(CycleMatroid {
            source: g.clone(),
            bases: spanning_forests(g, cap)?,
        })
    }

    pub fn source(&self) -> &SimpleGraph {
        &self.source
    }

    /// Number of ground-set elements (edges).
    pub fn ground_size(&self) -> usize {
        self.source.num_edges()
    }

    /// The bases as sorted edge-index lists, in lexicographic order.
    pub fn bases(&self) -> &[Vec<usize>] {
        &self.bases
    }

    /// Common size of all bases, `n − s`.
    pub fn rank(&self) -> usize {
        self.bases[0].len()
    }

    pub fn ideal(&self) -> Result<MonomialIdeal> {
        let m = self.ground_size();
        let gens = self.bases.iter().map(|b| {
            let mut c = vec![0u64; m];
            for &i in b {
                c[i] = 1;
            }
            ExponentVector::from(c)
        });
        MonomialIdeal::new(PointSet::new(m, gens)?)?
            .with_witness(Witness::standard(m, self.rank() as u64))
    }
}

/// Number of spanning trees of a connected graph, by the matrix-tree
/// theorem (a cofactor of the Laplacian).
pub fn spanning_tree_count(g: &SimpleGraph) -> BigInt {
    let n = g.num_vertices();
    if n <= 1 {
        return BigInt::from(1);
    }
    let minor: Vec<Vec<i64>> = (1..n)
        .map(|i| {
            (1..n)
                .map(|j| {
                    if i == j {
                        g.degree(i) as i64
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    linalg::determinant(&minor)
}

/// Number of spanning forests: the product over components of their
/// spanning-tree counts.
pub fn spanning_forest_count(g: &SimpleGraph) -> BigInt {
    g.components()
        .iter()
        .map(|c| spanning_tree_count(&c.graph))
        .product()
}

/// All spanning forests of `g` as sorted lists of indices into
/// `g.edges()`, in lexicographic order.
pub fn spanning_forests(g: &SimpleGraph, cap: usize) -> Result<Vec<Vec<usize>>> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let expected = spanning_forest_count(g);
    if expected > BigInt::from(cap) {
        return Err(Error::ResourceLimit {
            what: "spanning forest count",
            cap,
        });
    }
    let mut forests: Vec<Vec<usize>> = vec![Vec::new()];
    for comp in g.components() {
        let global: Vec<usize> = comp
            .graph
            .edges()
            .iter()
            .map(|&(u, v)| {
                g.edge_index(comp.vertices[u - 1], comp.vertices[v - 1])
                    .expect("component edge exists in the graph")
            })
            .collect();
        let trees = spanning_trees(&comp.graph);
        let mut next = Vec::with_capacity(forests.len() * trees.len());
        for f in &forests {
            for t in &trees {
                let mut b = f.clone();
                b.extend(t.iter().map(|&i| global[i]));
                next.push(b);
            }
        }
        forests = next;
    }
    for f in forests.iter_mut() {
        f.sort_unstable();
    }
    forests.sort();
    if BigInt::from(forests.len()) != expected {
        return Err(Error::Inconsistent(format!(
            "enumerated {} spanning forests, matrix-tree count is {expected}",
            forests.len()
        )));
    }
    Ok(forests)
}

/// Spanning trees of a connected graph, as edge-index lists.
fn spanning_trees(g: &SimpleGraph) -> Vec<Vec<usize>> {
    let need = g.num_vertices() - 1;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(need);
    let parent: Vec<usize> = (0..=g.num_vertices()).collect();
    extend_tree(g, 0, need, &mut chosen, parent, &mut out);
    out
}

fn find(parent: &[usize], mut v: usize) -> usize {
    while parent[v] != v {
        v = parent[v];
    }
    v
}

fn extend_tree(
    g: &SimpleGraph,
    next: usize,
    need: usize,
    chosen: &mut Vec<usize>,
    parent: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if chosen.len() == need {
        out.push(chosen.clone());
        return;
    }
    let edges = g.edges();
    if edges.len() - next < need - chosen.len() {
        return;
    }
    let (u, v) = edges[next];
    let (ru, rv) = (find(&parent, u), find(&parent, v));
    if ru != rv {
        let mut joined = parent.clone();
        joined[ru] = rv;
        chosen.push(next);
        extend_tree(g, next + 1, need, chosen, joined, out);
        chosen.pop();
    }
    extend_tree(g, next + 1, need, chosen, parent, out);
}

/// The matroidal ideal `I_M` of the cycle matroid of `g`.
pub fn matroidal_ideal(g: &SimpleGraph, cap: usize) -> Result<MonomialIdeal> {
    CycleMatroid::new(g, cap)?.ideal()
}

/// `e − c − s + 1`, where `c` counts cut vertices and `s` counts components
/// with at least one edge.
pub fn matroid_spread_formula(g: &SimpleGraph) -> Result<usize> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let e = g.num_edges();
    let c = g.cut_vertices().len();
    let s = g.components().len();
    Ok(e + 1 - c - s)
}

/// `e − b + 1`, where `b` counts blocks (bridges included). This agrees with
/// [`matroid_spread_formula`] exactly when every cut vertex lies in two
/// blocks; it is the affine dimension of the base polytope plus one in
/// general.
pub fn matroid_spread_blocks(g: &SimpleGraph) -> Result<usize> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    Ok(g.num_edges() + 1 - g.block_count())
}

/// h-vector of the base ring, from the Hilbert function of the matroidal
/// ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BaseRingHVector {
    /// `h₀, h₁, …`; trailing zeros are trimmed once the vector is complete.
    pub h: Vec<i64>,
    /// Number of powers used.
    pub max_power: usize,
    /// True when every possibly nonzero coefficient (index ≤ e − 2) has been
    /// computed.
    pub complete: bool,
}

impl BaseRingHVector {
    /// Degree of the h-polynomial, known only for complete vectors.
    pub fn degree(&self) -> Option<usize> {
        self.complete.then(|| self.h.len() - 1)
    }
}

/// Computes the h-vector of the base ring from `μ(I_M^k)` for `k ≤ K`.
/// The default `K = e − 1` covers the degree bound `deg h ≤ e − 2`.
pub fn base_ring_h_polynomial(
    g: &SimpleGraph,
    max_power: Option<usize>,
    cap: usize,
) -> Result<BaseRingHVector> {
    let e = g.num_edges();
    let degree_bound = e.saturating_sub(2);
    let k = max_power.unwrap_or((degree_bound + 1).max(1));
    let ideal = matroidal_ideal(g, cap)?;
    let ell = matroid_spread_formula(g)?;
    let mu = mu_series(&ideal, k, cap)?;
    let mut h = h_vector(&mu, ell)?;
    let complete = k >= degree_bound;
    if complete {
        if let Some(i) = h.iter().skip(degree_bound + 1).position(|&x| x != 0) {
            return Err(Error::Inconsistent(format!(
                "h-vector entry {} is nonzero beyond the degree bound {degree_bound}",
                i + degree_bound + 1
            )));
        }
        while h.len() > 1 && h.last() == Some(&0) {
            h.pop();
        }
    }
    Ok(BaseRingHVector {
        h,
        max_power: k,
        complete,
    })
}

/// One more than the degree of the h-polynomial of the base ring.
pub fn base_ring_regularity(g: &SimpleGraph, cap: usize) -> Result<usize> {
    let hv = base_ring_h_polynomial(g, None, cap)?;
    Ok(hv.degree().expect("default power covers the degree bound") + 1)
}

/// Result of [`classify_freiman_matroid`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatroidVerdict {
    pub freiman: bool,
    /// `e − n + s`, the number of independent cycles.
    pub total_cycles_bound: usize,
    /// `e − c − s + 1`.
    pub spread_formula: usize,
    /// `e − b + 1` with `b` the number of blocks.
    pub spread_blocks: usize,
    pub spread_numeric: usize,
    pub regularity: Option<usize>,
}

/// The cycle matroid is Freiman iff the graph has at most one cycle.
pub fn classify_freiman_matroid(g: &SimpleGraph, cap: usize) -> Result<MatroidVerdict> {
    let cycles = g.cyclomatic_number();
    let spread_formula = matroid_spread_formula(g)?;
    let spread_numeric = matroidal_ideal(g, cap)?.generators().affine_dim()? + 1;
    Ok(MatroidVerdict {
        freiman: cycles <= 1,
        total_cycles_bound: cycles,
        spread_formula,
        spread_blocks: matroid_spread_blocks(g)?,
        spread_numeric,
        regularity: None,
    })
}

impl MatroidVerdict {
    pub fn with_regularity(mut self, g: &SimpleGraph, cap: usize) -> Result<Self> {
        self.regularity = Some(base_ring_regularity(g, cap)?);
        Ok(self)
    }
}

/// Converts a spanning-forest count to `usize` when it fits.
pub fn forest_count_usize(g: &SimpleGraph) -> Option<usize> {
    spanning_forest_count(g).to_usize()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fiber::is_freiman;

    fn graph(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.iter().copied()).unwrap()
    }

    fn bowtie() -> SimpleGraph {
        graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    }

    #[test]
    fn spread_formulas_on_a_star() {
        // The centre of K1,3 is one cut vertex shared by three blocks: a single
        // basis, so the spread is 1, while e − c − s + 1 = 2.
        let star = SimpleGraph::complete_bipartite(1, 3);
        assert_eq!(matroid_spread_formula(&star).unwrap(), 2);
        assert_eq!(matroid_spread_blocks(&star).unwrap(), 1);
        let v = classify_freiman_matroid(&star, 100).unwrap();
        assert_eq!(v.spread_numeric, 1);
        assert_eq!(matroid_spread_blocks(&bowtie()).unwrap(), 5);
        assert_eq!(matroid_spread_formula(&bowtie()).unwrap(), 5);
    }

    #[test]
    fn forest_counts() {
        assert_eq!(
            spanning_forests(&SimpleGraph::cycle(3), 100).unwrap().len(),
            3
        );
        assert_eq!(
            spanning_forests(&SimpleGraph::complete(4), 100)
                .unwrap()
                .len(),
            16
        );
        assert_eq!(
            spanning_tree_count(&SimpleGraph::complete(4)),
            BigInt::from(16)
        );
        assert_eq!(spanning_forests(&bowtie(), 100).unwrap().len(), 9);
        assert!(matches!(
            spanning_forests(&SimpleGraph::complete(4), 15),
            Err(Error::ResourceLimit { .. })
        ));
        assert_eq!(
            spanning_forests(&SimpleGraph::empty(2), 10),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn matroidal_ideal_examples() {
        let tri = matroidal_ideal(&SimpleGraph::cycle(3), 100).unwrap();
        let expect = PointSet::from_rows(&[[0u64, 1, 1], [1, 0, 1], [1, 1, 0]]).unwrap();
        assert_eq!(tri.generators(), &expect);
        let path = matroidal_ideal(&SimpleGraph::path(3), 100).unwrap();
        assert_eq!(
            path.generators(),
            &PointSet::from_rows(&[[1u64, 1]]).unwrap()
        );
        let b = matroidal_ideal(&bowtie(), 100).unwrap();
        assert_eq!(b.mu(), 9);
        assert!(b.generators().iter().all(|p| p.degree().unwrap() == 4));
        assert_eq!(b.ambient_dim(), 6);
    }

    #[test]
    fn spread_formula_examples() {
        assert_eq!(
            matroid_spread_formula(&SimpleGraph::complete(4)).unwrap(),
            6
        );
        assert_eq!(matroid_spread_formula(&bowtie()).unwrap(), 5);
        let two = SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3));
        assert_eq!(two.cut_vertices().len(), 0);
        assert_eq!(matroid_spread_formula(&two).unwrap(), 5);
    }

    #[test]
    fn classification_examples() {
        let forest = graph(5, &[(1, 2), (2, 3), (4, 5)]);
        let v = classify_freiman_matroid(&forest, 100).unwrap();
        assert!(v.freiman);
        assert_eq!(v.spread_formula, 1);
        assert_eq!(v.spread_numeric, 1);
        for r in 3..=6 {
            assert!(
                classify_freiman_matroid(&SimpleGraph::cycle(r), 100)
                    .unwrap()
                    .freiman
            );
        }
        let v = classify_freiman_matroid(&bowtie(), 100).unwrap();
        assert!(!v.freiman);
        assert_eq!(v.spread_formula, 5);
        assert_eq!(v.spread_numeric, 5);
        let p = is_freiman(&matroidal_ideal(&bowtie(), 100).unwrap()).unwrap();
        assert_eq!((p.ell, p.mu_series[2], p.bound2), (5, 36, 35));
    }

    #[test]
    fn h_polynomial_examples() {
        let tri = base_ring_h_polynomial(&SimpleGraph::cycle(3), None, 1000).unwrap();
        assert_eq!(tri.h, vec![1]);
        assert_eq!(
            base_ring_regularity(&SimpleGraph::cycle(5), 1000).unwrap(),
            1
        );
        let b = base_ring_h_polynomial(&bowtie(), None, 100_000).unwrap();
        assert_eq!(b.h, vec![1, 4, 1]);
        assert_eq!(b.degree(), Some(2));
        let partial = base_ring_h_polynomial(&bowtie(), Some(2), 100_000).unwrap();
        assert!(!partial.complete);
        assert_eq!(partial.degree(), None);
        assert_eq!(partial.h, vec![1, 4, 1]);
    }
}
