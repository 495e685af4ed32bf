//! Small-graph corpora: exhaustive labeled enumeration, isomorphism classes,
//! and seeded random samples.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::SimpleGraph;

/// Vertex pairs of `K_n` in lexicographic order.
fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

fn from_mask(n: usize, all: &[(usize, usize)], mask: u64) -> SimpleGraph {
    let edges = all
        .iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, &e)| e);
    SimpleGraph::new(n, edges).expect("pairs of K_n form a simple graph")
}

/// All connected labeled graphs on exactly `n ≥ 2` vertices, by increasing
/// adjacency bitmask.
pub fn connected_labeled(n: usize) -> Vec<SimpleGraph> {
    connected_labeled_range(n, 0, labeled_mask_limit(n))
}

/// Exclusive upper bound on adjacency bitmasks of graphs on `n` vertices.
pub fn labeled_mask_limit(n: usize) -> u64 {
    assert!(
        (2..=11).contains(&n),
        "labeled enumeration supports 2..=11 vertices"
    );
    1u64 << (n * (n - 1) / 2)
}

/// The connected labeled graphs on `n` vertices whose adjacency bitmask lies
/// in `lo..hi`, in mask order. Bit `i` is the `i`-th pair of `K_n` in
/// lexicographic order.
pub fn connected_labeled_range(n: usize, lo: u64, hi: u64) -> Vec<SimpleGraph> {
    let all = pairs(n);
    (lo..hi.min(labeled_mask_limit(n)))
        // A connected graph needs at least n−1 edges.
        .filter(|m| m.count_ones() as usize >= n - 1)
        .map(|m| from_mask(n, &all, m))
        .filter(SimpleGraph::is_connected)
        .collect()
}

/// Number of connected labeled graphs on exactly `n` vertices, computed
/// without materializing them.
pub fn count_connected_labeled(n: usize) -> usize {
    let all = pairs(n);
    (0u64..1 << all.len())
        .filter(|m| m.count_ones() as usize >= n - 1 && from_mask(n, &all, *m).is_connected())
        .count()
}

/// All connected labeled graphs on at most `n + 1` vertices with between 1
/// and `max_edges` edges, grouped by vertex count.
pub fn connected_labeled_by_edges(max_edges: usize) -> Vec<SimpleGraph> {
    let mut out = Vec::new();
    for n in 2..=max_edges + 1 {
        let all = pairs(n);
        let lo = n - 1;
        let hi = max_edges.min(all.len());
        for size in lo..=hi {
            for combo in combinations(all.len(), size) {
                let g = SimpleGraph::new(n, combo.iter().map(|&i| all[i]))
                    .expect("pairs of K_n form a simple graph");
                if g.is_connected() {
                    out.push(g);
                }
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n - (k - cur.len()) {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    if k <= n {
        rec(0, n, k, &mut cur, &mut out);
    }
    out
}

/// Isomorphism-invariant vertex coloring by iterated degree refinement.
fn refine(g: &SimpleGraph) -> Vec<usize> {
    let n = g.num_vertices();
    let mut color: Vec<usize> = (1..=n).map(|v| g.degree(v)).collect();
    let mut classes = color.iter().collect::<BTreeSet<_>>().len();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (1..=n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| color[w - 1]).collect();
                nb.sort_unstable();
                (color[v - 1], nb)
            })
            .collect();
        let distinct: Vec<&(usize, Vec<usize>)> =
            sigs.iter().collect::<BTreeSet<_>>().into_iter().collect();
        let next: Vec<usize> = sigs
            .iter()
            .map(|s| distinct.binary_search(&s).expect("signature present"))
            .collect();
        let count = distinct.len();
        color = next;
        if count == classes {
            return color;
        }
        classes = count;
    }
}

/// Canonical adjacency bitmask: the smallest mask over all labelings that
/// order vertices by refined color.
pub fn canonical_mask(g: &SimpleGraph) -> u64 {
    let n = g.num_vertices();
    assert!(n <= 11, "canonical form supports at most 11 vertices");
    let color = refine(g);
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut order: Vec<usize> = (1..=n).collect();
    order.sort_by_key(|&v| color[v - 1]);
    for v in order {
        match cells.last_mut() {
            Some(c) if color[c[0] - 1] == color[v - 1] => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut pos = vec![0usize; n + 1];
    let mut best = u64::MAX;
    assign(
        g,
        &cells,
        0,
        0,
        &mut pos,
        &mut vec![false; n + 1],
        &mut best,
    );
    best
}

fn pair_bit(n: usize, a: usize, b: usize) -> u32 {
    let (a, b) = (a.min(b), a.max(b));
    // index of (a, b), 0-based positions, in lexicographic pair order
    (a * (2 * n - a - 1) / 2 + (b - a - 1)) as u32
}

fn assign(
    g: &SimpleGraph,
    cells: &[Vec<usize>],
    cell: usize,
    next_pos: usize,
    pos: &mut [usize],
    used: &mut Vec<bool>,
    best: &mut u64,
) {
    if cell == cells.len() {
        let n = g.num_vertices();
        let mask = g
            .edges()
            .iter()
            .fold(0u64, |m, &(u, v)| m | 1 << pair_bit(n, pos[u], pos[v]));
        *best = (*best).min(mask);
        return;
    }
    let members = &cells[cell];
    let placed = members.iter().filter(|&&v| used[v]).count();
    if placed == members.len() {
        assign(g, cells, cell + 1, next_pos, pos, used, best);
        return;
    }
    for &v in members {
        if !used[v] {
            used[v] = true;
            pos[v] = next_pos;
            assign(g, cells, cell, next_pos + 1, pos, used, best);
            used[v] = false;
        }
    }
}

/// One representative per isomorphism class of graphs (connected or not) on
/// exactly `n` vertices, built by adding a vertex to each class on `n − 1`
/// vertices in every possible way.
pub fn all_graphs_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    let mut level: Vec<SimpleGraph> = vec![SimpleGraph::empty(1)];
    for k in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in 0u64..1 << (k - 1) {
                let mut edges: Vec<(usize, usize)> = g.edges().to_vec();
                edges.extend((1..k).filter(|&v| nb >> (v - 1) & 1 == 1).map(|v| (v, k)));
                let h = SimpleGraph::new(k, edges).expect("extension is simple");
                if seen.insert(canonical_mask(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    if n == 0 {
        return Vec::new();
    }
    level
}

/// Connected isomorphism classes on exactly `n ≥ 2` vertices.
pub fn connected_up_to_iso(n: usize) -> Vec<SimpleGraph> {
    all_graphs_up_to_iso(n)
        .into_iter()
        .filter(|g| g.num_edges() > 0 && g.is_connected())
        .collect()
}

/// Connected isomorphism classes with between 1 and `max_edges` edges.
pub fn connected_up_to_iso_by_edges(max_edges: usize) -> Vec<SimpleGraph> {
    (2..=max_edges + 1)
        .flat_map(connected_up_to_iso)
        .filter(|g| g.num_edges() <= max_edges)
        .collect()
}

/// Seeded random graphs on 2..=`max_vertices` vertices with a random edge
/// density; every sample has at least one edge. Samples may be disconnected.
pub fn random_graphs(seed: u64, count: usize, max_vertices: usize) -> Vec<SimpleGraph> {
    assert!(max_vertices >= 2, "random graphs need at least 2 vertices");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_vertices);
            let density = rng.gen_range(1..=9u32);
            let mut edges: Vec<(usize, usize)> = pairs(n)
                .into_iter()
                .filter(|_| rng.gen_range(0..10u32) < density)
                .collect();
            if edges.is_empty() {
                edges.push((1, 2));
            }
            SimpleGraph::new(n, edges).expect("pairs of K_n form a simple graph")
        })
        .collect()
}

/// Seeded random graphs on 2..=`max_vertices` vertices with between 1 and
/// `max_edges` edges.
pub fn random_sparse_graphs(
    seed: u64,
    count: usize,
    max_vertices: usize,
    max_edges: usize,
) -> Vec<SimpleGraph> {
    assert!(max_vertices >= 2 && max_edges >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_vertices);
            let all = pairs(n);
            let m = rng.gen_range(1..=max_edges.min(all.len()));
            let mut picked: Vec<usize> = sample(&mut rng, all.len(), m).into_vec();
            picked.sort_unstable();
            SimpleGraph::new(n, picked.into_iter().map(|i| all[i]))
                .expect("pairs of K_n form a simple graph")
        })
        .collect()
}

/// A deterministic pseudo-random relabeling of `g`.
pub fn shuffled(g: &SimpleGraph, seed: u64) -> SimpleGraph {
    let n = g.num_vertices();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    g.relabel(&perm).expect("relabeling preserves simplicity")
}
