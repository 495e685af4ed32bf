use freiman::corpus;
use freiman::fiber::{self, is_freiman};
use freiman::matroid::{
    base_ring_h_polynomial, base_ring_regularity, classify_freiman_matroid, matroid_spread_blocks,
    matroid_spread_formula, matroidal_ideal, spanning_forest_count, CycleMatroid,
};
use freiman::SimpleGraph;
use num_bigint::BigInt;

const CAP: usize = 1_000_000;

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(n, edges.iter().copied()).unwrap()
}

/// Cycles of lengths `r1` and `r2` glued at vertex 1.
fn two_cycles(r1: usize, r2: usize) -> SimpleGraph {
    let n = r1 + r2 - 1;
    let mut edges: Vec<(usize, usize)> = (1..r1).map(|i| (i, i + 1)).collect();
    edges.push((r1, 1));
    let second: Vec<usize> = std::iter::once(1).chain(r1 + 1..=n).collect();
    for w in second.windows(2) {
        edges.push((w[0], w[1]));
    }
    edges.push((*second.last().unwrap(), 1));
    SimpleGraph::new(n, edges).unwrap()
}

fn numeric(g: &SimpleGraph) -> fiber::FiberProfile {
    is_freiman(&matroidal_ideal(g, CAP).unwrap()).unwrap()
}

#[test]
fn bowtie() {
    let g = two_cycles(3, 3);
    let m = CycleMatroid::new(&g, CAP).unwrap();
    assert_eq!(m.bases().len(), 9);
    let p = numeric(&g);
    assert_eq!((p.ell, p.mu_series[2], p.bound2), (5, 36, 35));
    assert!(!p.freiman);
    let v = classify_freiman_matroid(&g, CAP).unwrap();
    assert_eq!((v.spread_formula, v.spread_numeric), (5, 5));
    assert!(!v.freiman);
}

#[test]
fn two_cycles_sharing_a_vertex_degree() {
    // deg h = r1 + r2 − 1 − max(r1, r2).
    for (r1, r2) in [(3, 3), (3, 4), (4, 4)] {
        let g = two_cycles(r1, r2);
        let h = base_ring_h_polynomial(&g, None, CAP).unwrap();
        assert!(h.complete);
        assert_eq!(
            h.degree(),
            Some(r1 + r2 - 1 - r1.max(r2)),
            "({r1},{r2}): {:?}",
            h.h
        );
    }
}

#[test]
fn theta_graphs_are_not_freiman() {
    let square_with_chord = graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]);
    let hexagon_with_chord = graph(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (1, 6), (1, 4)]);
    for g in [square_with_chord, hexagon_with_chord] {
        assert!(!numeric(&g).freiman, "{g:?}");
        assert!(!classify_freiman_matroid(&g, CAP).unwrap().freiman);
    }
}

#[test]
fn single_cycles_have_free_growth() {
    for r in 3..=6u64 {
        let g = SimpleGraph::cycle(r as usize);
        let mu = fiber::mu_series(&matroidal_ideal(&g, CAP).unwrap(), 3, CAP).unwrap();
        let expect: Vec<u64> = (0..=3u64).map(|k| binom(r + k - 1, k)).collect();
        assert_eq!(mu, expect, "C{r}");
    }
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn spread_formulas_against_numeric_spread() {
    let mut formula_misses = 0;
    for g in corpus::connected_up_to_iso_by_edges(6) {
        let numeric = fiber::analytic_spread(&matroidal_ideal(&g, CAP).unwrap()).unwrap();
        assert_eq!(matroid_spread_blocks(&g).unwrap(), numeric, "{g:?}");
        let formula = matroid_spread_formula(&g).unwrap();
        if formula != numeric {
            // Only when some cut vertex lies in three or more blocks.
            assert!(g.block_count() > g.cut_vertices().len() + 1, "{g:?}");
            formula_misses += 1;
        }
    }
    assert!(formula_misses > 0);
}

#[test]
fn spread_formula_on_two_connected_and_disconnected_graphs() {
    let k4 = SimpleGraph::complete(4);
    assert_eq!(matroid_spread_formula(&k4).unwrap(), 6);
    let two_triangles = SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3));
    assert_eq!(matroid_spread_formula(&two_triangles).unwrap(), 5);
    assert_eq!(numeric(&two_triangles).ell, 5);
}

#[test]
fn forest_counts_match_matrix_tree() {
    for g in corpus::random_sparse_graphs(5, 60, 7, 9) {
        let m = CycleMatroid::new(&g, CAP).unwrap();
        assert_eq!(BigInt::from(m.bases().len()), spanning_forest_count(&g));
    }
    assert_eq!(
        spanning_forest_count(&SimpleGraph::complete(5)),
        BigInt::from(125)
    );
}

#[test]
fn regularity_bounds() {
    // 2-connected: 3 <= reg <= e − 1.
    for g in [
        SimpleGraph::complete(4),
        SimpleGraph::complete_bipartite(2, 3),
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)]),
    ] {
        let reg = base_ring_regularity(&g, CAP).unwrap();
        assert!((3..g.num_edges()).contains(&reg), "{g:?}: {reg}");
    }
    // Disconnected with at least two cycles: 3 <= reg <= e − c − s.
    let unions = [
        SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(3)),
        SimpleGraph::cycle(3).disjoint_union(&SimpleGraph::cycle(4)),
        SimpleGraph::cycle(4)
            .disjoint_union(&SimpleGraph::path(3))
            .disjoint_union(&SimpleGraph::cycle(3)),
    ];
    for g in unions {
        let e = g.num_edges();
        let bound = e - g.cut_vertices().len() - g.components().len();
        let reg = base_ring_regularity(&g, CAP).unwrap();
        assert!(
            (3..=bound).contains(&reg),
            "{g:?}: reg {reg}, bound {bound}"
        );
    }
}

#[test]
fn deleting_an_edge_keeps_freiman_matroids_freiman() {
    for g in corpus::connected_up_to_iso_by_edges(6) {
        if g.cyclomatic_number() > 1 || g.num_edges() < 2 {
            continue;
        }
        for &(u, v) in g.edges() {
            let sub = g.edge_subgraph(g.edges().iter().copied().filter(|&e| e != (u, v)));
            assert!(numeric(&sub).freiman, "{g:?} minus {u}-{v}");
        }
    }
}
