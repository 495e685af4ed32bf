//! Reports emitted by the command-line tool.
//!
//! JSON output is the stable, machine-readable form: field order is fixed by
//! the struct definitions and every collection is sorted, so identical input
//! gives byte-identical output once timing is switched off. The table form
//! is for people and makes no stability promise.

use std::fmt::Write as _;
use std::time::Duration;

use serde::Serialize;

use crate::error::Result;
use crate::fiber::{self, FiberProfile, GrowthReport};
use crate::graph::{self, GraphVerdict, SimpleGraph};
use crate::ideal::{MonomialIdeal, Witness};
use crate::io::monomial_string;
use crate::matroid::{self, BaseRingHVector, CycleMatroid, MatroidVerdict};
use crate::verify::VerifySummary;

#[derive(Clone, Debug, Serialize)]
pub struct Input {
    pub path: String,
    pub kind: &'static str,
}

#[derive(Clone, Debug, Serialize)]
pub struct Timing {
    pub elapsed_ms: u64,
}

impl Timing {
    pub fn from(d: Duration) -> Self {
        Timing {
            elapsed_ms: d.as_millis() as u64,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct IdealReport {
    pub input: Input,
    pub variables: usize,
    pub generators: Vec<String>,
    pub witness: Witness,
    pub verdict: FiberProfile,
    /// Present when `K ≥ 2`.
    pub growth: Option<GrowthReport>,
    /// h-vector entries with index above `K` are not determined by the
    /// computed series.
    pub h_known_through: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub components: usize,
    pub bipartite: bool,
}

impl GraphSummary {
    fn of(g: &SimpleGraph) -> Self {
        GraphSummary {
            vertices: g.num_vertices(),
            edges: g.num_edges(),
            components: g.components().len(),
            bipartite: g.is_bipartite(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub input: Input,
    pub graph: GraphSummary,
    pub verdict: GraphVerdict,
    /// The numeric test on the edge ideal.
    pub numeric: FiberProfile,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MatroidReport {
    pub input: Input,
    pub graph: GraphSummary,
    pub ground_size: usize,
    pub rank: usize,
    pub cut_vertices: Vec<usize>,
    pub blocks: usize,
    pub base_count: usize,
    /// Bases as sorted arrays of 0-based edge indices, edges in sorted order.
    pub bases: Vec<Vec<usize>>,
    pub verdict: MatroidVerdict,
    pub numeric: FiberProfile,
    pub agreement: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_vector: Option<BaseRingHVector>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    #[serde(flatten)]
    pub summary: VerifySummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

pub fn ideal_report(
    input: Input,
    ideal: &MonomialIdeal,
    max_power: usize,
    cap: usize,
) -> Result<IdealReport> {
    let ideal = ideal.clone().into_witnessed()?;
    let verdict = fiber::is_freiman_capped(&ideal, cap)?;
    let growth = if max_power >= 2 {
        Some(fiber::check_growth_identities(&ideal, max_power, cap)?)
    } else {
        None
    };
    Ok(IdealReport {
        input,
        variables: ideal.ambient_dim(),
        generators: ideal.generators().iter().map(monomial_string).collect(),
        witness: ideal.witness().expect("witnessed above").clone(),
        verdict,
        growth,
        h_known_through: max_power.max(2),
        timing: None,
    })
}

pub fn graph_report(input: Input, g: &SimpleGraph, cap: usize) -> Result<GraphReport> {
    let verdict = graph::classify_freiman_graph(g, cap)?;
    let numeric = fiber::is_freiman_capped(&graph::edge_ideal(g)?, cap)?;
    Ok(GraphReport {
        input,
        graph: GraphSummary::of(g),
        agreement: verdict.freiman == numeric.freiman,
        verdict,
        numeric,
        timing: None,
    })
}

pub fn matroid_report(
    input: Input,
    g: &SimpleGraph,
    hvector: bool,
    cap: usize,
) -> Result<MatroidReport> {
    let m = CycleMatroid::new(g, cap)?;
    let mut verdict = matroid::classify_freiman_matroid(g, cap)?;
    let numeric = fiber::is_freiman_capped(&m.ideal()?, cap)?;
    let h_vector = if hvector {
        let h = matroid::base_ring_h_polynomial(g, None, cap)?;
        verdict.regularity = h.degree().map(|d| d + 1);
        Some(h)
    } else {
        None
    };
    Ok(MatroidReport {
        input,
        graph: GraphSummary::of(g),
        ground_size: m.ground_size(),
        rank: m.rank(),
        cut_vertices: g.cut_vertices().into_iter().collect(),
        blocks: g.block_count(),
        base_count: m.bases().len(),
        bases: m.bases().to_vec(),
        agreement: verdict.freiman == numeric.freiman,
        verdict,
        numeric,
        h_vector,
        timing: None,
    })
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(report: &T) -> String {
    serde_json::to_string_pretty(report).expect("reports serialize") + "\n"
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn timing_line(out: &mut String, t: &Option<Timing>) {
    if let Some(t) = t {
        let _ = writeln!(out, "elapsed      {} ms", t.elapsed_ms);
    }
}

impl IdealReport {
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let v = &self.verdict;
        let _ = writeln!(s, "input        {} ({})", self.input.path, self.input.kind);
        let _ = writeln!(s, "variables    {}", self.variables);
        let _ = writeln!(s, "generators   {}", self.generators.join(", "));
        let _ = writeln!(
            s,
            "witness      a = ({}), d = {}",
            join(&self.witness.weights),
            self.witness.degree
        );
        let _ = writeln!(s, "spread       {}", v.ell);
        let _ = writeln!(
            s,
            "mu(I^2)      {} (bound {}, h2 = {})",
            v.mu_series[2], v.bound2, v.h2
        );
        let _ = writeln!(s, "freiman      {}", v.freiman);
        if let Some(g) = &self.growth {
            let _ = writeln!(s, "mu series    [{}]", join(&g.mu_series));
            let _ = writeln!(
                s,
                "h (0..={})    [{}]",
                self.h_known_through,
                join(&g.h_partial)
            );
            let _ = writeln!(
                s,
                "{:>3} {:>12} {:>12} {:>6} {:>12}",
                "k", "mu", "bound", "equal", "partial sum"
            );
            for r in &g.rows {
                let _ = writeln!(
                    s,
                    "{:>3} {:>12} {:>12} {:>6} {:>12}",
                    r.k, r.mu, r.lower_bound, r.equality, r.partial_sum
                );
            }
            for c in &g.implied_by_h2_zero {
                let _ = writeln!(s, "implied      {c}");
            }
        }
        timing_line(&mut s, &self.timing);
        s
    }
}

impl GraphReport {
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "input        {} ({})", self.input.path, self.input.kind);
        let _ = writeln!(
            s,
            "graph        n = {}, e = {}, components = {}, bipartite = {}",
            self.graph.vertices, self.graph.edges, self.graph.components, self.graph.bipartite
        );
        let _ = writeln!(s, "freiman      {}", self.verdict.freiman);
        let reason = serde_json::to_string(&self.verdict.reason).expect("reason serializes");
        let _ = writeln!(s, "reason       {}", reason.trim_matches('"'));
        if let Some(w) = &self.verdict.witness {
            let _ = writeln!(
                s,
                "witness      {}",
                serde_json::to_string(w).expect("witness serializes")
            );
        }
        let n = &self.numeric;
        let _ = writeln!(
            s,
            "numeric      mu = [{}], h = [{}], spread = {}",
            join(&n.mu_series),
            join(&n.h_partial),
            n.ell
        );
        let _ = writeln!(s, "agreement    {}", self.agreement);
        timing_line(&mut s, &self.timing);
        s
    }
}

impl MatroidReport {
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let v = &self.verdict;
        let _ = writeln!(s, "input        {} ({})", self.input.path, self.input.kind);
        let _ = writeln!(
            s,
            "graph        n = {}, e = {}, components = {}",
            self.graph.vertices, self.graph.edges, self.graph.components
        );
        let _ = writeln!(s, "bases        {} (rank {})", self.base_count, self.rank);
        let _ = writeln!(
            s,
            "cut vertices [{}], blocks = {}",
            join(&self.cut_vertices),
            self.blocks
        );
        let _ = writeln!(s, "cycles       {}", v.total_cycles_bound);
        let _ = writeln!(
            s,
            "spread       numeric {}, e-c-s+1 = {}, e-b+1 = {}",
            v.spread_numeric, v.spread_formula, v.spread_blocks
        );
        let _ = writeln!(
            s,
            "freiman      {} (numeric {}, agreement {})",
            v.freiman, self.numeric.freiman, self.agreement
        );
        if let Some(h) = &self.h_vector {
            let _ = writeln!(
                s,
                "h            [{}]{}",
                join(&h.h),
                if h.complete { "" } else { " (incomplete)" }
            );
        }
        if let Some(r) = v.regularity {
            let _ = writeln!(s, "regularity   {r}");
        }
        timing_line(&mut s, &self.timing);
        s
    }
}

impl VerifyReport {
    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let sm = &self.summary;
        let _ = writeln!(
            s,
            "corpus: {} edge-ideal instances, {} matroid instances",
            sm.graph_instances, sm.matroid_instances
        );
        let _ = writeln!(
            s,
            "{:<34} {:>9} {:>9} {:>7} {:>7}  result",
            "check", "checked", "passed", "failed", "skipped"
        );
        for r in &sm.rows {
            let _ = writeln!(
                s,
                "{:<34} {:>9} {:>9} {:>7} {:>7}  {}",
                r.id,
                r.checked,
                r.passed,
                r.failed,
                r.skipped,
                if r.ok() { "PASS" } else { "FAIL" }
            );
        }
        for c in &sm.counterexamples {
            let _ = writeln!(
                s,
                "counterexample [{}] {} #{}: {}",
                c.check, c.corpus, c.instance, c.detail
            );
        }
        let _ = writeln!(s, "all passed: {}", sm.all_passed);
        timing_line(&mut s, &self.timing);
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn input() -> Input {
        Input {
            path: "c4.json".into(),
            kind: "graph",
        }
    }

    #[test]
    fn graph_report_for_square() {
        let r = graph_report(input(), &SimpleGraph::cycle(4), 1000).unwrap();
        assert!(r.verdict.freiman && r.agreement);
        assert_eq!(r.numeric.mu_series, vec![1, 4, 9]);
        assert_eq!(r.numeric.h_partial, vec![1, 1, 0]);
        let json = to_json(&r);
        assert!(!json.contains("timing"));
        assert!(r.to_table().contains("agreement    true"));
    }

    #[test]
    fn matroid_report_for_k4() {
        let r = matroid_report(input(), &SimpleGraph::complete(4), true, 100_000).unwrap();
        assert_eq!(r.base_count, 16);
        assert_eq!(r.verdict.spread_formula, 6);
        assert!(!r.verdict.freiman && r.agreement);
        let reg = r.verdict.regularity.unwrap();
        assert!((3..=5).contains(&reg));
    }
}
