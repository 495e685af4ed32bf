//! Simple graphs, their edge ideals, and the classification of graphs whose
//! edge ideals are Freiman.
//!
//! A connected graph is Freiman exactly when its edge ring is a polynomial
//! ring, or when the union `H` of its 4-cycles is a complete bipartite graph
//! `K₂,ₛ` and it has no primitive even closed walk of length greater than 4.
//! Primitive even walks come in three shapes: an even cycle; two odd cycles
//! meeting in exactly one vertex; two vertex-disjoint odd cycles joined by
//! walks. Only the first shape can have length 4, so long walks are detected
//! by searching for an even cycle of length ≥ 6 or for a pair of odd cycles
//! that share at most one vertex.
//!
//! Disconnected graphs are Freiman when every component is, and all but at
//! most one of them have a polynomial edge ring.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, Witness};
use crate::lattice::{ExponentVector, PointSet};

/// Default cap on the number of simple cycles visited.
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// A finite simple graph on the vertices `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Serialize for SimpleGraph {
    /// Same shape as the graph JSON input format: `{"n": …, "edges": [[u, v], …]}`.
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let edges: Vec<[usize; 2]> = self.edges.iter().map(|&(u, v)| [u, v]).collect();
        let mut st = s.serialize_struct("SimpleGraph", 2)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl SimpleGraph {
    /// Builds a graph, rejecting loops, repeated edges and vertices outside
    /// `1..=n`. Edges are stored as `(u, v)` with `u < v`, sorted.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::InvalidGraph(format!(
                        "vertex {w} out of range 1..={n}"
                    )));
                }
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!("duplicate edge {{{u},{v}}}")));
            }
        }
        Ok(Self::from_sorted(n, seen.into_iter().collect()))
    }

    fn from_sorted(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n + 1];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        SimpleGraph { n, edges, adj }
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted(n, Vec::new())
    }

    pub fn path(n: usize) -> Self {
        Self::from_sorted(n, (1..n).map(|i| (i, i + 1)).collect())
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        e.push((1, n));
        e.sort_unstable();
        Self::from_sorted(n, e)
    }

    pub fn complete(n: usize) -> Self {
        let e = (1..=n)
            .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(n, e)
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let e = (1..=a)
            .flat_map(|u| (a + 1..=a + b).map(move |v| (u, v)))
            .collect();
        Self::from_sorted(a + b, e)
    }

    /// Disjoint union, relabeling `other` to `n+1..`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.n;
        let mut e = self.edges.clone();
        e.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_sorted(self.n + other.n, e)
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u <= self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of the edge `{u, v}` in [`edges`](Self::edges).
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Vertices incident to at least one edge.
    pub fn non_isolated(&self) -> Vec<usize> {
        (1..=self.n).filter(|&v| !self.adj[v].is_empty()).collect()
    }

    /// Same graph with vertex `v` renamed to `perm[v-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SimpleGraph> {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        SimpleGraph::new(
            self.n,
            self.edges.iter().map(|&(u, v)| (perm[u - 1], perm[v - 1])),
        )
    }

    /// The subgraph on the same vertex set with the given edges.
    pub fn edge_subgraph(&self, keep: impl IntoIterator<Item = (usize, usize)>) -> SimpleGraph {
        let mut e: Vec<_> = keep
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        e.sort_unstable();
        e.dedup();
        Self::from_sorted(self.n, e)
    }

    /// Connected components that contain at least one edge, ordered by their
    /// smallest vertex. Isolated vertices are skipped.
    pub fn components(&self) -> Vec<Component> {
        let mut label = vec![usize::MAX; self.n + 1];
        let mut out = Vec::new();
        for s in 1..=self.n {
            if label[s] != usize::MAX || self.adj[s].is_empty() {
                continue;
            }
            let idx = out.len();
            let mut stack = vec![s];
            label[s] = idx;
            let mut verts = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if label[w] == usize::MAX {
                        label[w] = idx;
                        verts.push(w);
                        stack.push(w);
                    }
                }
            }
            verts.sort_unstable();
            out.push(verts);
        }
        out.into_iter()
            .map(|vertices| {
                let mut local = vec![0; self.n + 1];
                for (i, &v) in vertices.iter().enumerate() {
                    local[v] = i + 1;
                }
                let edges = self
                    .edges
                    .iter()
                    .filter(|&&(u, _)| local[u] != 0)
                    .map(|&(u, v)| (local[u], local[v]))
                    .collect::<Vec<_>>();
                let mut edges = edges;
                edges.sort_unstable();
                Component {
                    graph: SimpleGraph::from_sorted(vertices.len(), edges),
                    vertices,
                }
            })
            .collect()
    }

    /// True if the graph has at most one component with edges.
    pub fn is_connected_ignoring_isolated(&self) -> bool {
        self.components().len() <= 1
    }

    /// True if all `n` vertices lie in one component.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let comps = self.components();
        comps.len() == 1 && comps[0].vertices.len() == self.n
    }

    /// `e − n' + s` over the non-isolated part: the number of independent
    /// cycles.
    pub fn cyclomatic_number(&self) -> usize {
        let s = self.components().len();
        self.num_edges() + s - self.non_isolated().len()
    }

    /// A 2-coloring `(part_a, part_b)` of the non-isolated vertices, if one
    /// exists. Within each component the smallest vertex goes to `part_a`.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut color = vec![u8::MAX; self.n + 1];
        for s in 1..=self.n {
            if color[s] != u8::MAX || self.adj[s].is_empty() {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &w in &self.adj[u] {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[u];
                        stack.push(w);
                    } else if color[w] == color[u] {
                        return None;
                    }
                }
            }
        }
        let a = (1..=self.n).filter(|&v| color[v] == 0).collect();
        let b = (1..=self.n).filter(|&v| color[v] == 1).collect();
        Some((a, b))
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Articulation points: vertices whose removal increases the number of
    /// components of their component.
    pub fn cut_vertices(&self) -> BTreeSet<usize> {
        self.articulation().0
    }

    /// Number of blocks (maximal 2-connected subgraphs, bridges included),
    /// summed over all components.
    pub fn block_count(&self) -> usize {
        self.articulation().1
    }

    fn articulation(&self) -> (BTreeSet<usize>, usize) {
        let n = self.n;
        let mut blocks = 0;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut out = BTreeSet::new();
        let mut time = 0;
        for root in 1..=n {
            if disc[root] != 0 || self.adj[root].is_empty() {
                continue;
            }
            time += 1;
            disc[root] = time;
            low[root] = time;
            let mut root_children = 0;
            // (vertex, parent, next neighbor index)
            let mut stack = vec![(root, 0usize, 0usize)];
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                if top.2 < self.adj[u].len() {
                    let w = self.adj[u][top.2];
                    top.2 += 1;
                    if disc[w] == 0 {
                        time += 1;
                        disc[w] = time;
                        low[w] = time;
                        if u == root {
                            root_children += 1;
                        }
                        stack.push((w, u, 0));
                    } else if w != parent {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != 0 {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            blocks += 1;
                            if parent != root {
                                out.insert(parent);
                            }
                        }
                    }
                }
            }
            if root_children > 1 {
                out.insert(root);
            }
        }
        (out, blocks)
    }
}

/// A connected component, relabeled to `1..=k`; `vertices[i]` is the
/// original label of local vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: SimpleGraph,
}

/// A simple cycle as a closed vertex sequence (the first vertex is not
/// repeated). Canonical form: smallest vertex first, and the smaller of its
/// two cycle neighbors second.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle(pub Vec<usize>);

impl Cycle {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.0.len().is_multiple_of(2)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.0.len();
        (0..k).map(move |i| {
            let (a, b) = (self.0[i], self.0[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    fn sorted_vertices(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        v.sort_unstable();
        v
    }
}

/// Calls `visit` once for every simple cycle of `g`, in canonical form.
/// Stops early when `visit` breaks. Fails when more than `cap` cycles would
/// be visited.
pub fn for_each_simple_cycle<B>(
    g: &SimpleGraph,
    cap: usize,
    mut visit: impl FnMut(Cycle) -> ControlFlow<B>,
) -> Result<Option<B>> {
    let n = g.n;
    let mut on_path = vec![false; n + 1];
    let mut count = 0usize;
    for start in 1..=n {
        // Cycles whose smallest vertex is `start`, extending through larger
        // vertices only; the reflection is skipped by requiring
        // path[1] < path[last].
        let mut path = vec![start];
        on_path[start] = true;
        let mut iters: Vec<usize> = vec![0];
        while let Some(&u) = path.last() {
            let depth = path.len() - 1;
            let i = iters[depth];
            if i >= g.adj[u].len() {
                on_path[u] = false;
                path.pop();
                iters.pop();
                continue;
            }
            iters[depth] += 1;
            let w = g.adj[u][i];
            if w == start && path.len() >= 3 && path[1] < u {
                count += 1;
                if count > cap {
                    for &v in &path {
                        on_path[v] = false;
                    }
                    return Err(Error::ResourceLimit {
                        what: "simple cycle count",
                        cap,
                    });
                }
                if let ControlFlow::Break(b) = visit(Cycle(path.clone())) {
                    for &v in &path {
                        on_path[v] = false;
                    }
                    return Ok(Some(b));
                }
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                iters.push(0);
            }
        }
    }
    Ok(None)
}

/// All simple cycles, each once, in canonical form and DFS order.
pub fn enumerate_simple_cycles(g: &SimpleGraph, cap: usize) -> Result<Vec<Cycle>> {
    let mut out = Vec::new();
    for_each_simple_cycle::<()>(g, cap, |c| {
        out.push(c);
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// The edge ideal `I(G) = (xᵢxⱼ : {i,j} ∈ E)` in `n` variables, carrying
/// the standard witness of degree 2.
pub fn edge_ideal(g: &SimpleGraph) -> Result<MonomialIdeal> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let n = g.n;
    let gens = g.edges.iter().map(|&(u, v)| {
        let mut c = vec![0u64; n];
        c[u - 1] = 1;
        c[v - 1] = 1;
        ExponentVector::from(c)
    });
    MonomialIdeal::new(PointSet::new(n, gens)?)?.with_witness(Witness::standard(n, 2))
}

/// True iff every component has at most one cycle and that cycle is odd,
/// i.e. the edge ring has no even closed walks at all.
pub fn is_polynomial_edge_ring(g: &SimpleGraph) -> bool {
    g.components().iter().all(component_is_polynomial)
}

fn component_is_polynomial(c: &Component) -> bool {
    match c.graph.cyclomatic_number() {
        0 => true,
        1 => !c.graph.is_bipartite(),
        _ => false,
    }
}

/// The subgraph (same vertex labels) whose edges are those lying on some
/// 4-cycle.
pub fn four_cycle_union_subgraph(g: &SimpleGraph) -> SimpleGraph {
    let mut edges = BTreeSet::new();
    for u in 1..=g.n {
        for w in u + 1..=g.n {
            let common: Vec<usize> = intersect(&g.adj[u], &g.adj[w]);
            if common.len() < 2 {
                continue;
            }
            for &x in &common {
                edges.insert((u.min(x), u.max(x)));
                edges.insert((w.min(x), w.max(x)));
            }
        }
    }
    SimpleGraph::from_sorted(g.n, edges.into_iter().collect())
}

fn intersect(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// If the non-isolated part of `h` is `K₂,ₛ` with `s ≥ 2`, returns its two
/// parts `(small, large)` with `small.len() == 2`.
pub fn complete_bipartite_2s(h: &SimpleGraph) -> Option<(Vec<usize>, Vec<usize>)> {
    if h.num_edges() == 0 || h.components().len() != 1 {
        return None;
    }
    let (a, b) = h.bipartition()?;
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    (small.len() == 2 && large.len() >= 2 && h.num_edges() == 2 * large.len())
        .then_some((small, large))
}

/// Evidence of a primitive even closed walk of length greater than 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum LongWalk {
    /// An even cycle of length at least 6.
    EvenCycle { cycle: Cycle },
    /// Two odd cycles with exactly one common vertex.
    OddCyclesSharingVertex {
        first: Cycle,
        second: Cycle,
        shared: usize,
    },
    /// Two vertex-disjoint odd cycles (joined by walks in a connected graph).
    DisjointOddCycles { first: Cycle, second: Cycle },
}

/// Looks for a primitive even closed walk of length > 4 in a connected graph.
pub fn has_long_primitive_even_walk(g: &SimpleGraph, cap: usize) -> Result<Option<LongWalk>> {
    let mut odd: Vec<(Cycle, Vec<usize>)> = Vec::new();
    for_each_simple_cycle(g, cap, |c| {
        if c.is_even() {
            if c.len() >= 6 {
                return ControlFlow::Break(LongWalk::EvenCycle { cycle: c });
            }
            return ControlFlow::Continue(());
        }
        let sorted = c.sorted_vertices();
        for (prev, prev_sorted) in &odd {
            let common = intersect(prev_sorted, &sorted);
            match common.len() {
                0 => {
                    return ControlFlow::Break(LongWalk::DisjointOddCycles {
                        first: prev.clone(),
                        second: c,
                    })
                }
                1 => {
                    return ControlFlow::Break(LongWalk::OddCyclesSharingVertex {
                        first: prev.clone(),
                        second: c,
                        shared: common[0],
                    })
                }
                _ => {}
            }
        }
        odd.push((c, sorted));
        ControlFlow::Continue(())
    })
}

/// Why a graph was classified the way it was.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictReason {
    /// The edge ring is a polynomial ring.
    NoPrimitiveWalks,
    /// The 4-cycle union is `K₂,ₛ` and there are no long primitive walks.
    #[serde(rename = "K2s-with-short-walks")]
    K2sWithShortWalks,
    /// A primitive even walk of length > 4 exists.
    WitnessLongWalk,
    /// The 4-cycle union is nonempty but not `K₂,ₛ`.
    #[serde(rename = "four-cycle-union-not-K2s")]
    FourCycleUnionNotK2s,
    /// Decided from the components of a disconnected graph.
    ComponentRule,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum GraphWitness {
    LongWalk {
        walk: LongWalk,
    },
    FourCycleUnion {
        edges: Vec<(usize, usize)>,
    },
    /// Components (as original vertex lists) that are not Freiman, or the
    /// non-polynomial components when there are two or more of them.
    Components {
        offending: Vec<Vec<usize>>,
    },
}

/// Result of [`classify_freiman_graph`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphVerdict {
    pub freiman: bool,
    pub reason: VerdictReason,
    pub witness: Option<GraphWitness>,
}

impl GraphVerdict {
    fn yes(reason: VerdictReason, witness: Option<GraphWitness>) -> Self {
        GraphVerdict {
            freiman: true,
            reason,
            witness,
        }
    }

    fn no(reason: VerdictReason, witness: GraphWitness) -> Self {
        GraphVerdict {
            freiman: false,
            reason,
            witness: Some(witness),
        }
    }
}

/// Decides whether the edge ideal of `g` is Freiman, combinatorially.
pub fn classify_freiman_graph(g: &SimpleGraph, cap: usize) -> Result<GraphVerdict> {
    let comps = g.components();
    match comps.len() {
        0 => Err(Error::NoEdges),
        1 => {
            let c = &comps[0];
            let local = if c.graph.is_bipartite() {
                classify_connected_bipartite(&c.graph, cap)?
            } else {
                classify_connected_general(&c.graph, cap)?
            };
            Ok(relabel_verdict(local, &c.vertices))
        }
        _ => {
            let mut not_freiman = Vec::new();
            let mut non_polynomial = Vec::new();
            for c in &comps {
                if component_is_polynomial(c) {
                    continue;
                }
                non_polynomial.push(c.vertices.clone());
                if !classify_connected_general(&c.graph, cap)?.freiman {
                    not_freiman.push(c.vertices.clone());
                }
            }
            if non_polynomial.is_empty() {
                return Ok(GraphVerdict::yes(VerdictReason::NoPrimitiveWalks, None));
            }
            if !not_freiman.is_empty() {
                return Ok(GraphVerdict::no(
                    VerdictReason::ComponentRule,
                    GraphWitness::Components {
                        offending: not_freiman,
                    },
                ));
            }
            if non_polynomial.len() > 1 {
                return Ok(GraphVerdict::no(
                    VerdictReason::ComponentRule,
                    GraphWitness::Components {
                        offending: non_polynomial,
                    },
                ));
            }
            Ok(GraphVerdict::yes(VerdictReason::ComponentRule, None))
        }
    }
}

/// The general criterion for a connected graph (isolated vertices allowed).
pub fn classify_connected_general(g: &SimpleGraph, cap: usize) -> Result<GraphVerdict> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if is_polynomial_edge_ring(g) {
        return Ok(GraphVerdict::yes(VerdictReason::NoPrimitiveWalks, None));
    }
    let h = four_cycle_union_subgraph(g);
    if h.num_edges() == 0 {
        // Not polynomial and no 4-cycles: every primitive even walk is long.
        return long_walk_verdict(g, cap);
    }
    if complete_bipartite_2s(&h).is_none() {
        return Ok(GraphVerdict::no(
            VerdictReason::FourCycleUnionNotK2s,
            GraphWitness::FourCycleUnion {
                edges: h.edges().to_vec(),
            },
        ));
    }
    match has_long_primitive_even_walk(g, cap)? {
        Some(walk) => Ok(GraphVerdict::no(
            VerdictReason::WitnessLongWalk,
            GraphWitness::LongWalk { walk },
        )),
        None => Ok(GraphVerdict::yes(
            VerdictReason::K2sWithShortWalks,
            Some(GraphWitness::FourCycleUnion {
                edges: h.edges().to_vec(),
            }),
        )),
    }
}

fn long_walk_verdict(g: &SimpleGraph, cap: usize) -> Result<GraphVerdict> {
    match has_long_primitive_even_walk(g, cap)? {
        Some(walk) => Ok(GraphVerdict::no(
            VerdictReason::WitnessLongWalk,
            GraphWitness::LongWalk { walk },
        )),
        None => Err(Error::Inconsistent(
            "graph is neither polynomial nor Freiman but no long walk was found".into(),
        )),
    }
}

/// Structural criterion for connected bipartite graphs: a tree, or a
/// `K₂,ₛ` (the 4-cycle union) with disjoint trees attached at single
/// vertices.
pub fn classify_connected_bipartite(g: &SimpleGraph, cap: usize) -> Result<GraphVerdict> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    if !g.is_bipartite() {
        return Err(Error::InvalidGraph("graph is not bipartite".into()));
    }
    if g.cyclomatic_number() == 0 {
        return Ok(GraphVerdict::yes(VerdictReason::NoPrimitiveWalks, None));
    }
    let h = four_cycle_union_subgraph(g);
    if h.num_edges() == 0 {
        return long_walk_verdict(g, cap);
    }
    if complete_bipartite_2s(&h).is_none() {
        return Ok(GraphVerdict::no(
            VerdictReason::FourCycleUnionNotK2s,
            GraphWitness::FourCycleUnion {
                edges: h.edges().to_vec(),
            },
        ));
    }
    // Removing H's edges must leave a forest in which each tree meets V(H)
    // in at most one vertex.
    let in_h: Vec<bool> = (0..=g.n).map(|v| v > 0 && h.degree(v) > 0).collect();
    let rest = g.edge_subgraph(g.edges.iter().copied().filter(|&(u, v)| !h.has_edge(u, v)));
    let attached_trees_ok = rest.components().iter().all(|c| {
        c.graph.cyclomatic_number() == 0 && c.vertices.iter().filter(|&&v| in_h[v]).count() <= 1
    });
    if attached_trees_ok {
        Ok(GraphVerdict::yes(
            VerdictReason::K2sWithShortWalks,
            Some(GraphWitness::FourCycleUnion {
                edges: h.edges().to_vec(),
            }),
        ))
    } else {
        long_walk_verdict(g, cap)
    }
}

fn relabel_verdict(v: GraphVerdict, labels: &[usize]) -> GraphVerdict {
    let map = |x: usize| labels[x - 1];
    let cyc = |c: Cycle| Cycle(c.0.into_iter().map(map).collect());
    let edges = |es: Vec<(usize, usize)>| {
        let mut out: Vec<_> = es
            .into_iter()
            .map(|(u, v)| (map(u).min(map(v)), map(u).max(map(v))))
            .collect();
        out.sort_unstable();
        out
    };
    let witness = v.witness.map(|w| match w {
        GraphWitness::LongWalk { walk } => GraphWitness::LongWalk {
            walk: match walk {
                LongWalk::EvenCycle { cycle } => LongWalk::EvenCycle { cycle: cyc(cycle) },
                LongWalk::OddCyclesSharingVertex {
                    first,
                    second,
                    shared,
                } => LongWalk::OddCyclesSharingVertex {
                    first: cyc(first),
                    second: cyc(second),
                    shared: map(shared),
                },
                LongWalk::DisjointOddCycles { first, second } => LongWalk::DisjointOddCycles {
                    first: cyc(first),
                    second: cyc(second),
                },
            },
        },
        GraphWitness::FourCycleUnion { edges: e } => {
            GraphWitness::FourCycleUnion { edges: edges(e) }
        }
        GraphWitness::Components { offending } => GraphWitness::Components {
            offending: offending
                .into_iter()
                .map(|vs| vs.into_iter().map(map).collect())
                .collect(),
        },
    });
    GraphVerdict { witness, ..v }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, e: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::new(n, e.iter().copied()).unwrap()
    }

    fn bowtie() -> SimpleGraph {
        graph(5, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    }

    fn k4_minus_edge() -> SimpleGraph {
        graph(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (1, 3)])
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(
            SimpleGraph::new(3, [(1, 1)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            SimpleGraph::new(3, [(1, 4)]),
            Err(Error::InvalidGraph(_))
        ));
        assert!(matches!(
            SimpleGraph::new(3, [(1, 2), (2, 1)]),
            Err(Error::InvalidGraph(_))
        ));
    }

    #[test]
    fn structure_examples() {
        let tree = graph(5, &[(1, 2), (1, 3), (3, 4), (3, 5)]);
        assert_eq!(tree.cyclomatic_number(), 0);
        let c4 = SimpleGraph::cycle(4);
        assert_eq!(c4.cyclomatic_number(), 1);
        assert_eq!(c4.bipartition(), Some((vec![1, 3], vec![2, 4])));
        let k4 = SimpleGraph::complete(4);
        assert_eq!(k4.cyclomatic_number(), 3);
        assert!(!k4.is_bipartite());
        let two = c4.disjoint_union(&SimpleGraph::cycle(3));
        let comps = two.components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].vertices, vec![5, 6, 7]);
        assert_eq!(comps[1].graph, SimpleGraph::cycle(3));
    }

    #[test]
    fn cycle_enumeration() {
        let tree = graph(4, &[(1, 2), (2, 3), (2, 4)]);
        assert!(enumerate_simple_cycles(&tree, 10).unwrap().is_empty());
        let k4 = enumerate_simple_cycles(&SimpleGraph::complete(4), 100).unwrap();
        assert_eq!(k4.len(), 7);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        for c in &k4 {
            let v = c.vertices();
            assert_eq!(v[0], *v.iter().min().unwrap());
            assert!(v[1] < v[v.len() - 1]);
        }
        assert_eq!(enumerate_simple_cycles(&bowtie(), 10).unwrap().len(), 2);
        assert!(matches!(
            enumerate_simple_cycles(&SimpleGraph::complete(4), 6),
            Err(Error::ResourceLimit { .. })
        ));
    }

    #[test]
    fn cut_vertex_examples() {
        assert!(SimpleGraph::complete(4).cut_vertices().is_empty());
        assert_eq!(bowtie().cut_vertices(), BTreeSet::from([3]));
        assert_eq!(SimpleGraph::path(4).cut_vertices(), BTreeSet::from([2, 3]));
        let star = graph(4, &[(1, 2), (1, 3), (1, 4)]);
        assert_eq!(star.cut_vertices(), BTreeSet::from([1]));
    }

    #[test]
    fn edge_ideal_examples() {
        let i = edge_ideal(&graph(2, &[(1, 2)])).unwrap();
        assert_eq!(i.mu(), 1);
        let c4 = edge_ideal(&SimpleGraph::cycle(4)).unwrap();
        let expect =
            PointSet::from_rows(&[[1u64, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]])
                .unwrap();
        assert_eq!(c4.generators(), &expect);
        assert_eq!(c4.witness(), Some(&Witness::standard(4, 2)));
        assert_eq!(edge_ideal(&SimpleGraph::complete(4)).unwrap().mu(), 6);
        assert_eq!(edge_ideal(&SimpleGraph::empty(3)), Err(Error::NoEdges));
    }

    #[test]
    fn polynomial_edge_ring_examples() {
        assert!(is_polynomial_edge_ring(&SimpleGraph::cycle(5)));
        assert!(!is_polynomial_edge_ring(&SimpleGraph::cycle(4)));
        assert!(!is_polynomial_edge_ring(&bowtie()));
    }

    #[test]
    fn four_cycle_union_examples() {
        assert_eq!(
            four_cycle_union_subgraph(&SimpleGraph::path(5)).num_edges(),
            0
        );
        let k23 = SimpleGraph::complete_bipartite(2, 3);
        assert_eq!(four_cycle_union_subgraph(&k23), k23);
        let h = four_cycle_union_subgraph(&k4_minus_edge());
        assert_eq!(h.edges(), &[(1, 2), (1, 4), (2, 3), (3, 4)]);
        assert!(complete_bipartite_2s(&h).is_some());
        assert!(complete_bipartite_2s(&SimpleGraph::complete_bipartite(3, 3)).is_none());
        assert!(complete_bipartite_2s(&SimpleGraph::cycle(6)).is_none());
    }

    #[test]
    fn long_walk_examples() {
        let c6 = SimpleGraph::cycle(6);
        assert_eq!(
            has_long_primitive_even_walk(&c6, 100).unwrap(),
            Some(LongWalk::EvenCycle {
                cycle: Cycle(vec![1, 2, 3, 4, 5, 6])
            })
        );
        assert!(matches!(
            has_long_primitive_even_walk(&bowtie(), 100).unwrap(),
            Some(LongWalk::OddCyclesSharingVertex { shared: 3, .. })
        ));
        assert_eq!(
            has_long_primitive_even_walk(&k4_minus_edge(), 100).unwrap(),
            None
        );
        let two_triangles = graph(6, &[(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 6), (4, 6)]);
        assert!(matches!(
            has_long_primitive_even_walk(&two_triangles, 100).unwrap(),
            Some(LongWalk::DisjointOddCycles { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        let tree = graph(6, &[(1, 2), (2, 3), (2, 4), (4, 5), (4, 6)]);
        assert!(classify_freiman_graph(&tree, 100).unwrap().freiman);
        for s in 2..=4 {
            let v = classify_freiman_graph(&SimpleGraph::complete_bipartite(2, s), 100).unwrap();
            assert!(v.freiman);
            assert_eq!(v.reason, VerdictReason::K2sWithShortWalks);
        }
        let k4 = classify_freiman_graph(&SimpleGraph::complete(4), 100).unwrap();
        assert!(!k4.freiman);
        assert_eq!(k4.reason, VerdictReason::FourCycleUnionNotK2s);
        let c4c4 = SimpleGraph::cycle(4).disjoint_union(&SimpleGraph::cycle(4));
        let v = classify_freiman_graph(&c4c4, 100).unwrap();
        assert!(!v.freiman);
        assert_eq!(v.reason, VerdictReason::ComponentRule);
        assert!(v.witness.is_some());
        let c4c3 = SimpleGraph::cycle(4).disjoint_union(&SimpleGraph::cycle(3));
        assert!(classify_freiman_graph(&c4c3, 100).unwrap().freiman);
        let c6 = classify_freiman_graph(&SimpleGraph::cycle(6), 100).unwrap();
        assert!(!c6.freiman);
        assert_eq!(c6.reason, VerdictReason::WitnessLongWalk);
        assert_eq!(
            classify_freiman_graph(&SimpleGraph::empty(3), 100),
            Err(Error::NoEdges)
        );
    }

    #[test]
    fn witnesses_use_original_labels() {
        // C6 on vertices 4..=9 with isolated 1..=3
        let g = graph(9, &[(4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (4, 9)]);
        let v = classify_freiman_graph(&g, 100).unwrap();
        assert_eq!(
            v.witness,
            Some(GraphWitness::LongWalk {
                walk: LongWalk::EvenCycle {
                    cycle: Cycle(vec![4, 5, 6, 7, 8, 9])
                }
            })
        );
    }
}
