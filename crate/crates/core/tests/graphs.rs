use freiman::corpus;
use freiman::fiber::{self, is_freiman};
use freiman::graph::{
    self, classify_connected_bipartite, classify_connected_general, classify_freiman_graph,
    edge_ideal, LongWalk, VerdictReason,
};
use freiman::SimpleGraph;

const CAP: usize = 1_000_000;

fn graph(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
    SimpleGraph::new(n, edges.iter().copied()).unwrap()
}

fn numeric(g: &SimpleGraph) -> bool {
    is_freiman(&edge_ideal(g).unwrap()).unwrap().freiman
}

#[test]
fn sumset_sizes_of_small_edge_ideals() {
    let c4 = edge_ideal(&SimpleGraph::cycle(4)).unwrap();
    let k4 = edge_ideal(&SimpleGraph::complete(4)).unwrap();
    let c6 = edge_ideal(&SimpleGraph::cycle(6)).unwrap();
    let x = c4.generators();
    assert_eq!(x.sumset(x).unwrap().len(), 9);
    assert_eq!(x.dilate(3).unwrap().len(), 16);
    let y = k4.generators();
    assert_eq!(y.sumset(y).unwrap().len(), 19);
    assert_eq!(y.affine_dim().unwrap(), 3);
    assert_eq!(c6.generators().dilate(2).unwrap().len(), 21);
}

#[test]
fn square_and_complete_graph() {
    let c4 = SimpleGraph::cycle(4);
    let v = classify_freiman_graph(&c4, CAP).unwrap();
    assert!(v.freiman);
    assert_eq!(v.reason, VerdictReason::K2sWithShortWalks);
    let k4 = SimpleGraph::complete(4);
    let v = classify_freiman_graph(&k4, CAP).unwrap();
    assert!(!v.freiman);
    assert_eq!(fiber::is_freiman(&edge_ideal(&k4).unwrap()).unwrap().h2, 1);
}

#[test]
fn long_walk_witnesses() {
    // C6: an even cycle of length 6.
    let v = classify_freiman_graph(&SimpleGraph::cycle(6), CAP).unwrap();
    assert!(!v.freiman && !numeric(&SimpleGraph::cycle(6)));
    assert_eq!(v.reason, VerdictReason::WitnessLongWalk);
    // Bowtie: two triangles sharing a vertex.
    let bowtie = graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)]);
    let w = graph::has_long_primitive_even_walk(&bowtie, CAP)
        .unwrap()
        .unwrap();
    assert!(matches!(
        w,
        LongWalk::OddCyclesSharingVertex { shared: 3, .. }
    ));
    assert!(!numeric(&bowtie));
    // Two disjoint triangles joined by an edge.
    let dumbbell = graph(6, &[(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6), (3, 4)]);
    let w = graph::has_long_primitive_even_walk(&dumbbell, CAP)
        .unwrap()
        .unwrap();
    assert!(matches!(w, LongWalk::DisjointOddCycles { .. }));
    assert!(!classify_freiman_graph(&dumbbell, CAP).unwrap().freiman);
    assert!(!numeric(&dumbbell));
}

#[test]
fn complete_bipartite_two_s_is_freiman() {
    for s in 2..=5 {
        let g = SimpleGraph::complete_bipartite(2, s);
        assert!(classify_freiman_graph(&g, CAP).unwrap().freiman, "K2,{s}");
        assert!(numeric(&g), "K2,{s}");
    }
    let k33 = SimpleGraph::complete_bipartite(3, 3);
    let v = classify_freiman_graph(&k33, CAP).unwrap();
    assert!(!v.freiman && !numeric(&k33));
}

#[test]
fn odd_unicyclic_and_trees_are_polynomial() {
    for g in [
        SimpleGraph::cycle(5),
        SimpleGraph::path(6),
        graph(5, &[(1, 2), (2, 3), (3, 1), (3, 4), (4, 5)]),
    ] {
        assert!(graph::is_polynomial_edge_ring(&g));
        let p = is_freiman(&edge_ideal(&g).unwrap()).unwrap();
        assert_eq!(p.ell, g.num_edges());
        assert!(p.freiman);
    }
}

#[test]
fn component_rule_on_all_small_graphs() {
    // Every graph on at most 6 vertices, connected or not, up to isomorphism.
    let mut disconnected = 0;
    for n in 2..=6 {
        for g in corpus::all_graphs_up_to_iso(n) {
            if g.num_edges() == 0 {
                continue;
            }
            let v = classify_freiman_graph(&g, CAP).unwrap();
            assert_eq!(v.freiman, numeric(&g), "{g:?}: {v:?}");
            if !g.is_connected_ignoring_isolated() {
                disconnected += 1;
            }
        }
    }
    // 1 on four vertices, 3 on five, 13 on six.
    assert_eq!(disconnected, 17);
}

#[test]
fn two_non_polynomial_components_are_not_freiman() {
    // Each square is Freiman on its own; together they are not.
    let two_squares = SimpleGraph::cycle(4).disjoint_union(&SimpleGraph::cycle(4));
    assert!(!classify_freiman_graph(&two_squares, CAP).unwrap().freiman);
    assert!(!numeric(&two_squares));
    let square_and_triangle = SimpleGraph::cycle(4).disjoint_union(&SimpleGraph::cycle(3));
    assert!(
        classify_freiman_graph(&square_and_triangle, CAP)
            .unwrap()
            .freiman
    );
    assert!(numeric(&square_and_triangle));
}

#[test]
fn bipartite_structural_path_agrees_with_general() {
    for n in 2..=7 {
        for g in corpus::connected_up_to_iso(n) {
            if !g.is_bipartite() {
                continue;
            }
            let s = classify_connected_bipartite(&g, CAP).unwrap();
            let t = classify_connected_general(&g, CAP).unwrap();
            assert_eq!(s.freiman, t.freiman, "{g:?}");
        }
    }
}

#[test]
fn classification_ignores_labels() {
    let graphs = corpus::random_graphs(11, 60, 8);
    for (i, g) in graphs.iter().enumerate() {
        let v = classify_freiman_graph(g, CAP).unwrap();
        for seed in 0..3 {
            let h = corpus::shuffled(g, seed * 1000 + i as u64);
            let w = classify_freiman_graph(&h, CAP).unwrap();
            assert_eq!((v.freiman, v.reason), (w.freiman, w.reason), "{g:?}");
        }
    }
}

#[test]
fn edgeless_graphs_are_rejected() {
    assert_eq!(
        classify_freiman_graph(&SimpleGraph::empty(3), CAP),
        Err(freiman::Error::NoEdges)
    );
}
