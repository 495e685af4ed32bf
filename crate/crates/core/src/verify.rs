//! Corpus sweep that checks the combinatorial classifiers and the growth
//! inequalities against brute-force sumset computations.
//!
//! Every instance is evaluated independently (in parallel); the summary only
//! sums per-check counters and sorts counterexamples, so it does not depend
//! on scheduling.

use std::path::Path;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::corpus;
use crate::error::{Error, Result};
use crate::fiber::{self, GrowthReport, DEFAULT_CAP, DEFAULT_MAX_POWER};
use crate::graph::{self, SimpleGraph};
use crate::ideal::MonomialIdeal;
use crate::io::graph_to_json;
use crate::lattice::{binomial, freiman_lower_bound};
use crate::matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyConfig {
    pub mode: Mode,
    /// Vertex bound for the edge-ideal corpus (and random matroid samples).
    pub max_vertices: usize,
    /// Edge bound for the matroid corpus.
    pub max_edges: usize,
    /// Number of random samples per corpus.
    pub count: usize,
    pub seed: u64,
    pub up_to_iso: bool,
    /// Largest power used in growth checks.
    pub max_power: usize,
    /// Base-ring regularity is only computed for graphs with at most this
    /// many edges.
    pub regularity_max_edges: usize,
    /// Resource guard applied to every sumset and enumeration.
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            mode: Mode::Exhaustive,
            max_vertices: 6,
            max_edges: 6,
            count: 200,
            seed: 42,
            up_to_iso: false,
            max_power: DEFAULT_MAX_POWER,
            regularity_max_edges: 8,
            cap: DEFAULT_CAP,
        }
    }
}

/// The checks of the sweep, in report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    FreimanInequality,
    GrowthLowerBound,
    PartialSumsNonnegative,
    EqualityPropagation,
    HVectorRoundTrip,
    SpreadUpperBound,
    PolynomialRingGrowth,
    PolynomialRingWindow,
    EdgeRingDimension,
    GraphClassifierConnected,
    GraphClassifierComponents,
    BipartiteStructural,
    RelabelInvariance,
    MatroidClassifier,
    MatroidPolynomialGrowth,
    MatroidSpreadFormula,
    MatroidSpreadBlocks,
    ForestCount,
    RegularityTwoConnected,
    RegularityDisconnected,
    RestrictionMonotone,
}

impl Check {
    pub const ALL: [Check; 21] = [
        Check::FreimanInequality,
        Check::GrowthLowerBound,
        Check::PartialSumsNonnegative,
        Check::EqualityPropagation,
        Check::HVectorRoundTrip,
        Check::SpreadUpperBound,
        Check::PolynomialRingGrowth,
        Check::PolynomialRingWindow,
        Check::EdgeRingDimension,
        Check::GraphClassifierConnected,
        Check::GraphClassifierComponents,
        Check::BipartiteStructural,
        Check::RelabelInvariance,
        Check::MatroidClassifier,
        Check::MatroidPolynomialGrowth,
        Check::MatroidSpreadFormula,
        Check::MatroidSpreadBlocks,
        Check::ForestCount,
        Check::RegularityTwoConnected,
        Check::RegularityDisconnected,
        Check::RestrictionMonotone,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Check::FreimanInequality => "freiman-inequality",
            Check::GrowthLowerBound => "growth-lower-bound",
            Check::PartialSumsNonnegative => "partial-sums-nonnegative",
            Check::EqualityPropagation => "equality-propagation",
            Check::HVectorRoundTrip => "h-vector-round-trip",
            Check::SpreadUpperBound => "spread-upper-bound",
            Check::PolynomialRingGrowth => "polynomial-ring-growth",
            Check::PolynomialRingWindow => "polynomial-ring-window",
            Check::EdgeRingDimension => "edge-ring-dimension",
            Check::GraphClassifierConnected => "graph-classifier-connected",
            Check::GraphClassifierComponents => "graph-classifier-components",
            Check::BipartiteStructural => "bipartite-structural-vs-general",
            Check::RelabelInvariance => "relabel-invariance",
            Check::MatroidClassifier => "matroid-classifier",
            Check::MatroidPolynomialGrowth => "matroid-polynomial-growth",
            Check::MatroidSpreadFormula => "matroid-spread-formula",
            Check::MatroidSpreadBlocks => "matroid-spread-blocks",
            Check::ForestCount => "forest-count-matrix-tree",
            Check::RegularityTwoConnected => "regularity-two-connected",
            Check::RegularityDisconnected => "regularity-disconnected",
            Check::RestrictionMonotone => "restriction-monotone",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Check::FreimanInequality => "|2X| >= (d+1)|X| - C(d+1,2), d = affine dimension",
            Check::GrowthLowerBound => {
                "mu(I^k) >= C(l+k-2,k-1) mu(I) - (k-1) C(l+k-2,k) for k <= K"
            }
            Check::PartialSumsNonnegative => "h2 >= 0 and weighted partial sums of h are >= 0",
            Check::EqualityPropagation => {
                "equality at k=2 iff equality at every k <= K iff h2..hK vanish"
            }
            Check::HVectorRoundTrip => "mu series rebuilt from h matches",
            Check::SpreadUpperBound => "analytic spread <= min(mu(I), number of variables)",
            Check::PolynomialRingGrowth => {
                "polynomial: mu(I^k) = C(m+k-1,k) for k <= K; otherwise spread < m"
            }
            Check::PolynomialRingWindow => {
                "edge ring polynomial iff mu(I^k) = C(m+k-1,k) for k = 2, 3"
            }
            Check::EdgeRingDimension => "spread = non-isolated vertices - bipartite components",
            Check::GraphClassifierConnected => "connected graphs: classifier = numeric test",
            Check::GraphClassifierComponents => {
                "disconnected graphs: component rule = numeric test"
            }
            Check::BipartiteStructural => "bipartite graphs: structural = general = numeric",
            Check::RelabelInvariance => "verdict unchanged by a vertex relabeling",
            Check::MatroidClassifier => "cycle matroid: at most one cycle iff numeric test",
            Check::MatroidPolynomialGrowth => "at most one cycle: mu(I^k) = C(l+k-1,k) for k <= 3",
            Check::MatroidSpreadFormula => "e - c - s + 1 = affine-rank spread",
            Check::MatroidSpreadBlocks => "e - b + 1 (b = blocks) = affine-rank spread",
            Check::ForestCount => "enumerated bases = matrix-tree count",
            Check::RegularityTwoConnected => "2-connected, >= 2 cycles: 3 <= reg <= e - 1",
            Check::RegularityDisconnected => "disconnected, >= 2 cycles: 3 <= reg <= e - c - s",
            Check::RestrictionMonotone => "deleting an edge of a Freiman matroid stays Freiman",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Status {
    Pass,
    Fail(String),
    /// Not decidable within the resource guard.
    Skip,
}

type Findings = Vec<(Check, Status)>;

fn status_of(r: Result<Option<String>>) -> Status {
    match r {
        Ok(None) => Status::Pass,
        Ok(Some(msg)) => Status::Fail(msg),
        Err(Error::ResourceLimit { .. }) => Status::Skip,
        Err(e) => Status::Fail(format!("error: {e}")),
    }
}

fn expect(cond: bool, msg: impl FnOnce() -> String) -> Option<String> {
    (!cond).then(msg)
}

/// Pass/fail counters of one check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub id: &'static str,
    pub description: &'static str,
    pub checked: u64,
    pub passed: u64,
    pub failed: u64,
    pub skipped: u64,
}

impl CheckRow {
    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub check: &'static str,
    /// `"edge-ideal"` or `"matroid"`.
    pub corpus: &'static str,
    pub instance: usize,
    pub detail: String,
    pub graph: SimpleGraph,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub config: VerifyConfig,
    pub graph_instances: usize,
    pub matroid_instances: usize,
    pub rows: Vec<CheckRow>,
    pub counterexamples: Vec<Counterexample>,
    pub all_passed: bool,
}

impl VerifySummary {
    pub fn row(&self, id: &str) -> Option<&CheckRow> {
        self.rows.iter().find(|r| r.id == id)
    }

    /// Writes each counterexample as a graph JSON file that
    /// `freiman graph classify` / `freiman matroid classify` accept.
    pub fn dump_counterexamples(&self, dir: &Path) -> std::io::Result<Vec<std::path::PathBuf>> {
        std::fs::create_dir_all(dir)?;
        let mut paths = Vec::new();
        for (i, c) in self.counterexamples.iter().enumerate() {
            let path = dir.join(format!("{:04}-{}-{}.json", i, c.corpus, c.check));
            std::fs::write(&path, graph_to_json(&c.graph) + "\n")?;
            paths.push(path);
        }
        Ok(paths)
    }
}

/// The edge-ideal corpus selected by `cfg`.
pub fn graph_corpus(cfg: &VerifyConfig) -> Vec<SimpleGraph> {
    match cfg.mode {
        Mode::Exhaustive => (2..=cfg.max_vertices)
            .flat_map(|n| {
                if cfg.up_to_iso {
                    corpus::connected_up_to_iso(n)
                } else {
                    corpus::connected_labeled(n)
                }
            })
            .collect(),
        Mode::Random => corpus::random_graphs(cfg.seed, cfg.count, cfg.max_vertices),
    }
}

/// The matroid corpus selected by `cfg`; empty when `max_edges` is 0.
pub fn matroid_corpus(cfg: &VerifyConfig) -> Vec<SimpleGraph> {
    if cfg.max_edges == 0 {
        return Vec::new();
    }
    match (cfg.mode, cfg.up_to_iso) {
        (Mode::Exhaustive, true) => corpus::connected_up_to_iso_by_edges(cfg.max_edges),
        (Mode::Exhaustive, false) => corpus::connected_labeled_by_edges(cfg.max_edges),
        (Mode::Random, _) => corpus::random_sparse_graphs(
            cfg.seed.wrapping_add(1),
            cfg.count,
            cfg.max_vertices,
            cfg.max_edges,
        ),
    }
}

/// Masks per chunk when streaming the labeled corpus.
const CHUNK: u64 = 1 << 16;

/// Builds the corpora from `cfg` and checks them. The exhaustive labeled
/// edge-ideal corpus is streamed in chunks rather than materialized.
pub fn run(cfg: &VerifyConfig) -> VerifySummary {
    let mut tally = Tally::default();
    if cfg.mode == Mode::Exhaustive && !cfg.up_to_iso {
        for n in 2..=cfg.max_vertices {
            let limit = corpus::labeled_mask_limit(n);
            let mut lo = 0;
            while lo < limit {
                let chunk = corpus::connected_labeled_range(n, lo, lo + CHUNK);
                tally.graphs(cfg, &chunk);
                lo += CHUNK;
            }
        }
    } else {
        tally.graphs(cfg, &graph_corpus(cfg));
    }
    tally.matroids(cfg, &matroid_corpus(cfg));
    tally.finish(cfg)
}

/// Checks explicit corpora: `graphs` through their edge ideals, `matroids`
/// through their cycle matroids.
pub fn run_on(
    cfg: &VerifyConfig,
    graphs: &[SimpleGraph],
    matroids: &[SimpleGraph],
) -> VerifySummary {
    let mut tally = Tally::default();
    tally.graphs(cfg, graphs);
    tally.matroids(cfg, matroids);
    tally.finish(cfg)
}

/// Running totals; absorbing findings is a pure sum plus an ordered append,
/// so the result does not depend on how instances were scheduled.
#[derive(Default)]
struct Tally {
    counts: Vec<[u64; 4]>,
    counterexamples: Vec<Counterexample>,
    graph_instances: usize,
    matroid_instances: usize,
}

impl Tally {
    fn graphs(&mut self, cfg: &VerifyConfig, graphs: &[SimpleGraph]) {
        let offset = self.graph_instances;
        let findings: Vec<Findings> = graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| graph_instance(g, offset + i, cfg))
            .collect();
        self.absorb("edge-ideal", offset, graphs, &findings);
        self.graph_instances += graphs.len();
    }

    fn matroids(&mut self, cfg: &VerifyConfig, matroids: &[SimpleGraph]) {
        let offset = self.matroid_instances;
        let findings: Vec<Findings> = matroids
            .par_iter()
            .map(|g| matroid_instance(g, cfg))
            .collect();
        self.absorb("matroid", offset, matroids, &findings);
        self.matroid_instances += matroids.len();
    }

    fn absorb(
        &mut self,
        corpus: &'static str,
        offset: usize,
        instances: &[SimpleGraph],
        findings: &[Findings],
    ) {
        if self.counts.is_empty() {
            self.counts = vec![[0; 4]; Check::ALL.len()];
        }
        for (i, f) in findings.iter().enumerate() {
            for (check, status) in f {
                let row = &mut self.counts[*check as usize];
                row[0] += 1;
                match status {
                    Status::Pass => row[1] += 1,
                    Status::Fail(detail) => {
                        row[2] += 1;
                        self.counterexamples.push(Counterexample {
                            check: check.id(),
                            corpus,
                            instance: offset + i,
                            detail: detail.clone(),
                            graph: instances[i].clone(),
                        });
                    }
                    Status::Skip => row[3] += 1,
                }
            }
        }
    }

    fn finish(mut self, cfg: &VerifyConfig) -> VerifySummary {
        if self.counts.is_empty() {
            self.counts = vec![[0; 4]; Check::ALL.len()];
        }
        let rows: Vec<CheckRow> = Check::ALL
            .iter()
            .zip(&self.counts)
            .map(|(c, k)| CheckRow {
                id: c.id(),
                description: c.description(),
                checked: k[0],
                passed: k[1],
                failed: k[2],
                skipped: k[3],
            })
            .collect();
        VerifySummary {
            config: cfg.clone(),
            graph_instances: self.graph_instances,
            matroid_instances: self.matroid_instances,
            all_passed: rows.iter().all(CheckRow::ok),
            rows,
            counterexamples: self.counterexamples,
        }
    }
}

/// Ideal-level checks shared by both corpora.
fn ideal_checks(ideal: &MonomialIdeal, growth: &GrowthReport, out: &mut Findings) {
    let ell = growth.ell;
    let mu = &growth.mu_series;
    let h = &growth.h_partial;
    let d = (ell - 1) as u64;
    out.push((
        Check::FreimanInequality,
        status_of(
            freiman_lower_bound(mu[1], d)
                .map(|b| expect(mu[2] as i64 >= b, || format!("|2X| = {} < {b}", mu[2]))),
        ),
    ));
    out.push((
        Check::GrowthLowerBound,
        status_of(Ok(growth
            .rows
            .iter()
            .find(|r| !r.meets_bound)
            .map(|r| format!("k={}: mu = {} < {}", r.k, r.mu, r.lower_bound)))),
    ));
    out.push((
        Check::PartialSumsNonnegative,
        status_of(Ok(if h[2] < 0 {
            Some(format!("h2 = {}", h[2]))
        } else {
            growth
                .rows
                .iter()
                .find(|r| !r.partial_sum_nonnegative)
                .map(|r| format!("k={}: partial sum {}", r.k, r.partial_sum))
        })),
    ));
    let equality2 = growth.rows[0].equality;
    let tail_zero = h[2..].iter().all(|&x| x == 0);
    out.push((
        Check::EqualityPropagation,
        status_of(Ok(expect(
            equality2 == growth.equality_everywhere
                && equality2 == tail_zero
                && equality2 == (h[2] == 0),
            || {
                format!(
                    "equality at k=2: {equality2}, rows: {:?}, h: {h:?}",
                    growth.rows.iter().map(|r| r.equality).collect::<Vec<_>>()
                )
            },
        ))),
    ));
    out.push((
        Check::HVectorRoundTrip,
        status_of(fiber::mu_from_h(h, ell, mu.len() - 1).map(|back| {
            let same = back.iter().zip(mu).all(|(&a, &b)| a == b as i64);
            expect(same, || format!("rebuilt {back:?} from {mu:?}"))
        })),
    ));
    out.push((
        Check::SpreadUpperBound,
        status_of(Ok(expect(
            ell <= ideal.mu().min(ideal.ambient_dim()),
            || {
                format!(
                    "spread {ell} > min({}, {})",
                    ideal.mu(),
                    ideal.ambient_dim()
                )
            },
        ))),
    ));
}

fn growth_or_skip(
    ideal: Result<MonomialIdeal>,
    cfg: &VerifyConfig,
    out: &mut Findings,
    checks: &[Check],
) -> Option<(MonomialIdeal, GrowthReport)> {
    let res = ideal.and_then(|i| {
        let g = fiber::check_growth_identities(&i, cfg.max_power.max(2), cfg.cap)?;
        Ok((i, g))
    });
    match res {
        Ok(pair) => Some(pair),
        Err(e) => {
            let status = status_of(Err(e));
            out.extend(checks.iter().map(|&c| (c, status.clone())));
            None
        }
    }
}

fn bipartite_component_count(g: &SimpleGraph) -> usize {
    g.components()
        .iter()
        .filter(|c| c.graph.is_bipartite())
        .count()
}

fn graph_instance(g: &SimpleGraph, index: usize, cfg: &VerifyConfig) -> Findings {
    let mut out = Findings::new();
    let dependent = [
        Check::FreimanInequality,
        Check::GrowthLowerBound,
        Check::PartialSumsNonnegative,
        Check::EqualityPropagation,
        Check::HVectorRoundTrip,
        Check::SpreadUpperBound,
        Check::PolynomialRingGrowth,
        Check::EdgeRingDimension,
        if g.is_connected_ignoring_isolated() {
            Check::GraphClassifierConnected
        } else {
            Check::GraphClassifierComponents
        },
    ];
    let Some((ideal, growth)) = growth_or_skip(graph::edge_ideal(g), cfg, &mut out, &dependent)
    else {
        return out;
    };
    ideal_checks(&ideal, &growth, &mut out);
    let mu = &growth.mu_series;
    let numeric = growth.h_partial[2] == 0;

    let m = g.num_edges() as u64;
    let poly = graph::is_polynomial_edge_ring(g);
    let free_through =
        |top: usize| (2..=top).all(|k| binomial(m + k as u64 - 1, k as u64) == Some(mu[k] as i64));
    let valid = if poly {
        free_through(mu.len() - 1)
    } else {
        (growth.ell as u64) < m
    };
    out.push((
        Check::PolynomialRingGrowth,
        status_of(Ok(expect(valid, || {
            format!(
                "polynomial = {poly}, mu = {mu:?}, m = {m}, spread = {}",
                growth.ell
            )
        }))),
    ));
    // The fixed window misses relations of degree > 3, e.g. two triangles
    // joined by an edge (a primitive even walk of length 8).
    if mu.len() > 3 {
        let window = free_through(3);
        out.push((
            Check::PolynomialRingWindow,
            status_of(Ok(expect(poly == window, || {
                format!("polynomial = {poly}, mu = {mu:?}, m = {m}")
            }))),
        ));
    }

    let expected_ell = g.non_isolated().len() - bipartite_component_count(g);
    out.push((
        Check::EdgeRingDimension,
        status_of(Ok(expect(growth.ell == expected_ell, || {
            format!("spread {} vs {expected_ell}", growth.ell)
        }))),
    ));

    let verdict = graph::classify_freiman_graph(g, cfg.cap);
    let class_check = dependent[8];
    out.push((
        class_check,
        status_of(verdict.as_ref().map_err(Clone::clone).map(|v| {
            expect(v.freiman == numeric, || {
                format!(
                    "classifier {} ({:?}) vs numeric h2 = {}",
                    v.freiman, v.reason, growth.h_partial[2]
                )
            })
        })),
    ));

    let comps = g.components();
    if comps.len() == 1 && comps[0].graph.is_bipartite() {
        let c = &comps[0].graph;
        let r = graph::classify_connected_bipartite(c, cfg.cap).and_then(|s| {
            let gen = graph::classify_connected_general(c, cfg.cap)?;
            Ok(expect(
                s.freiman == gen.freiman && gen.freiman == numeric,
                || {
                    format!(
                        "structural {}, general {}, numeric {numeric}",
                        s.freiman, gen.freiman
                    )
                },
            ))
        });
        out.push((Check::BipartiteStructural, status_of(r)));
    }

    if let Ok(v) = &verdict {
        let h = corpus::shuffled(g, cfg.seed ^ index as u64);
        let r = graph::classify_freiman_graph(&h, cfg.cap).and_then(|w| {
            let p = fiber::is_freiman_capped(&graph::edge_ideal(&h)?, cfg.cap)?;
            Ok(expect(
                w.freiman == v.freiman && w.reason == v.reason && p.freiman == numeric,
                || {
                    format!(
                        "relabeled: {} ({:?}), numeric {}",
                        w.freiman, w.reason, p.freiman
                    )
                },
            ))
        });
        out.push((Check::RelabelInvariance, status_of(r)));
    }
    out
}

fn matroid_instance(g: &SimpleGraph, cfg: &VerifyConfig) -> Findings {
    let mut out = Findings::new();
    let dependent = [
        Check::FreimanInequality,
        Check::GrowthLowerBound,
        Check::PartialSumsNonnegative,
        Check::EqualityPropagation,
        Check::HVectorRoundTrip,
        Check::SpreadUpperBound,
        Check::MatroidClassifier,
        Check::MatroidSpreadFormula,
        Check::MatroidSpreadBlocks,
        Check::ForestCount,
    ];
    let m = match matroid::CycleMatroid::new(g, cfg.cap) {
        Ok(m) => m,
        Err(e) => {
            let s = status_of(Err(e));
            out.extend(dependent.iter().map(|&c| (c, s.clone())));
            return out;
        }
    };
    let Some((ideal, growth)) = growth_or_skip(m.ideal(), cfg, &mut out, &dependent) else {
        return out;
    };
    ideal_checks(&ideal, &growth, &mut out);
    let numeric = growth.h_partial[2] == 0;
    let ell = growth.ell;
    let mu = &growth.mu_series;

    let cycles = g.cyclomatic_number();
    out.push((
        Check::MatroidClassifier,
        status_of(matroid::classify_freiman_matroid(g, cfg.cap).map(|v| {
            expect(v.freiman == numeric, || {
                format!(
                    "{} independent cycles, numeric h2 = {}",
                    cycles, growth.h_partial[2]
                )
            })
        })),
    ));
    if cycles <= 1 {
        let top = 3.min(mu.len() - 1);
        let bad =
            (1..=top).find(|&k| binomial((ell + k - 1) as u64, k as u64) != Some(mu[k] as i64));
        out.push((
            Check::MatroidPolynomialGrowth,
            status_of(Ok(
                bad.map(|k| format!("k={k}: mu = {} with spread {ell}", mu[k]))
            )),
        ));
    }
    out.push((
        Check::MatroidSpreadFormula,
        status_of(
            matroid::matroid_spread_formula(g)
                .map(|f| expect(f == ell, || format!("formula {f} vs numeric {ell}"))),
        ),
    ));
    out.push((
        Check::MatroidSpreadBlocks,
        status_of(
            matroid::matroid_spread_blocks(g)
                .map(|f| expect(f == ell, || format!("block formula {f} vs numeric {ell}"))),
        ),
    ));
    let count = matroid::spanning_forest_count(g);
    out.push((
        Check::ForestCount,
        status_of(Ok(expect(count == BigInt::from(m.bases().len()), || {
            format!("enumerated {} vs determinant {count}", m.bases().len())
        }))),
    ));

    if cycles >= 2 && g.num_edges() <= cfg.regularity_max_edges {
        let e = g.num_edges();
        let comps = g.components().len();
        let c = g.cut_vertices().len();
        let two_connected = comps == 1 && c == 0 && g.non_isolated().len() >= 3;
        if two_connected || comps >= 2 {
            let (check, upper) = if two_connected {
                (Check::RegularityTwoConnected, e - 1)
            } else {
                (Check::RegularityDisconnected, e.saturating_sub(c + comps))
            };
            let r = matroid::base_ring_regularity(g, cfg.cap).map(|reg| {
                expect((3..=upper).contains(&reg), || {
                    format!("reg {reg} outside [3, {upper}]")
                })
            });
            out.push((check, status_of(r)));
        }
    }

    if numeric && g.num_edges() >= 2 {
        let r = (0..g.num_edges()).try_fold(None, |acc: Option<String>, i| {
            if acc.is_some() {
                return Ok(acc);
            }
            let kept = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &e)| e);
            let sub = g.edge_subgraph(kept);
            let p = fiber::is_freiman_capped(&matroid::matroidal_ideal(&sub, cfg.cap)?, cfg.cap)?;
            Ok(expect(p.freiman, || {
                format!("deleting edge {:?} gives h2 = {}", g.edges()[i], p.h2)
            }))
        });
        out.push((Check::RestrictionMonotone, status_of(r)));
    }
    out
}
