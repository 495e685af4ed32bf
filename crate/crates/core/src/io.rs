//! Text formats for ideals and graphs.
//!
//! Ideals:
//!
//! * monomial text: generators separated by commas or newlines, each a
//!   `*`-product of factors `x<i>` or `x<i>^<e>` (variables numbered from 1).
//!   The ambient dimension is the largest variable index, unless a line
//!   `vars <n>` fixes it. `#` starts a comment.
//! * JSON: an array of equal-length exponent-vector arrays, e.g.
//!   `[[1,1,0],[0,1,1]]`.
//!
//! Graphs:
//!
//! * JSON: `{"n": 4, "edges": [[1,2],[2,3],[3,4],[4,1]]}`.
//! * edge list: a header `p <n> <m>` followed by `m` lines `u v`. Blank
//!   lines and lines starting with `c` or `#` are ignored.
//!
//! Input whose first non-blank character is `[` or `{` is read as JSON.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::ideal::MonomialIdeal;
use crate::lattice::{ExponentVector, PointSet};

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn looks_like_json(text: &str, open: char) -> bool {
    text.trim_start().starts_with(open)
}

fn json_err(e: serde_json::Error) -> Error {
    parse_err(e.line(), e.column(), e.to_string())
}

/// Parses an ideal in monomial or JSON syntax. The generators must form a
/// minimal generating set; redundant generators are reported, not dropped.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let rows = if looks_like_json(text, '[') {
        let rows: Vec<Vec<u64>> = serde_json::from_str(text).map_err(json_err)?;
        let dim = rows
            .first()
            .map(Vec::len)
            .ok_or_else(|| parse_err(1, 1, "no generators"))?;
        if dim == 0 {
            return Err(parse_err(1, 1, "exponent vectors must be nonempty"));
        }
        if let Some(i) = rows.iter().position(|r| r.len() != dim) {
            return Err(parse_err(
                1,
                1,
                format!(
                    "generator #{} has length {}, expected {dim}",
                    i + 1,
                    rows[i].len()
                ),
            ));
        }
        for (i, r) in rows.iter().enumerate() {
            if rows[..i].contains(r) {
                return Err(parse_err(1, 1, format!("duplicate generator #{}", i + 1)));
            }
        }
        rows
    } else {
        parse_monomial_text(text)?
    };
    let dim = rows[0].len();
    let set = PointSet::new(dim, rows.into_iter().map(ExponentVector::from))?;
    MonomialIdeal::new(set)
}

struct Cursor<'a> {
    line: usize,
    bytes: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn column(&self) -> usize {
        self.pos + 1
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(parse_err(self.line, start + 1, "expected a number"));
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("digits are ASCII")
            .parse()
            .map_err(|_| parse_err(self.line, start + 1, "number too large"))
    }
}

/// A parsed generator: line, column, sparse exponents.
type Located = (usize, usize, Vec<(usize, u64)>);

fn parse_monomial_text(text: &str) -> Result<Vec<Vec<u64>>> {
    let mut monomials: Vec<Located> = Vec::new();
    let mut declared: Option<(usize, usize)> = None;
    let mut max_var = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let trimmed = content.trim();
        if let Some(rest) = trimmed.strip_prefix("vars") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| parse_err(line, 1, "expected `vars <n>`"))?;
            if n == 0 {
                return Err(parse_err(line, 1, "`vars` must be positive"));
            }
            declared = Some((n, line));
            continue;
        }
        let mut cur = Cursor {
            line,
            bytes: content.as_bytes(),
            pos: 0,
        };
        loop {
            cur.skip_ws();
            if cur.peek().is_none() {
                break;
            }
            if cur.peek() == Some(b',') {
                return Err(parse_err(line, cur.column(), "empty generator"));
            }
            let start_col = cur.column();
            let mut factors = Vec::new();
            loop {
                cur.skip_ws();
                match cur.peek() {
                    Some(b'x') => cur.pos += 1,
                    Some(b) => {
                        return Err(parse_err(
                            line,
                            cur.column(),
                            format!("expected variable `x<i>`, found `{}`", b as char),
                        ))
                    }
                    None => return Err(parse_err(line, cur.column(), "expected variable `x<i>`")),
                }
                let var_col = cur.column();
                let var = cur.number()? as usize;
                if var == 0 {
                    return Err(parse_err(line, var_col, "variables are numbered from 1"));
                }
                cur.skip_ws();
                let exp = if cur.peek() == Some(b'^') {
                    cur.pos += 1;
                    cur.skip_ws();
                    cur.number()?
                } else {
                    1
                };
                max_var = max_var.max(var);
                factors.push((var, exp));
                cur.skip_ws();
                match cur.peek() {
                    Some(b'*') => {
                        cur.pos += 1;
                    }
                    Some(b',') => {
                        cur.pos += 1;
                        break;
                    }
                    None => break,
                    Some(b) => {
                        return Err(parse_err(
                            line,
                            cur.column(),
                            format!("unexpected `{}`", b as char),
                        ))
                    }
                }
            }
            monomials.push((line, start_col, factors));
        }
    }
    if monomials.is_empty() {
        return Err(parse_err(1, 1, "no generators"));
    }
    let dim = match declared {
        Some((n, line)) if n < max_var => {
            return Err(parse_err(
                line,
                1,
                format!("`vars {n}` is smaller than the largest variable index x{max_var}"),
            ))
        }
        Some((n, _)) => n,
        None => max_var,
    };
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(monomials.len());
    for (line, col, factors) in monomials {
        let mut row = vec![0u64; dim];
        for (var, exp) in factors {
            row[var - 1] = row[var - 1]
                .checked_add(exp)
                .ok_or_else(|| parse_err(line, col, "exponent overflow"))?;
        }
        if rows.contains(&row) {
            return Err(parse_err(line, col, "duplicate generator"));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Renders exponent vectors in monomial syntax, e.g. `x1^2*x3`.
pub fn monomial_string(c: &ExponentVector) -> String {
    let parts: Vec<String> = c
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| {
            if e == 1 {
                format!("x{}", i + 1)
            } else {
                format!("x{}^{}", i + 1, e)
            }
        })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

/// Parses a graph from JSON or edge-list syntax.
pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    if looks_like_json(text, '{') {
        let g: GraphJson = serde_json::from_str(text).map_err(json_err)?;
        for (i, [u, v]) in g.edges.iter().enumerate() {
            check_edge(g.n, *u, *v, &g.edges[..i])
                .map_err(|m| parse_err(1, 1, format!("edge #{} [{u},{v}]: {m}", i + 1)))?;
        }
        return SimpleGraph::new(g.n, g.edges.iter().map(|&[u, v]| (u, v)));
    }

    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges: Vec<[usize; 2]> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') || trimmed.starts_with('#') {
            continue;
        }
        let col_of = |tok: &str| tok.as_ptr() as usize - raw.as_ptr() as usize + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks[0] == "p" {
            if header.is_some() {
                return Err(parse_err(line, col_of(toks[0]), "duplicate header"));
            }
            if toks.len() != 3 {
                return Err(parse_err(line, col_of(toks[0]), "expected `p <n> <m>`"));
            }
            let n = parse_usize(toks[1], line, col_of(toks[1]))?;
            let m = parse_usize(toks[2], line, col_of(toks[2]))?;
            header = Some((n, m, line));
            continue;
        }
        let Some((n, _, _)) = header else {
            return Err(parse_err(
                line,
                col_of(toks[0]),
                "edge before `p <n> <m>` header",
            ));
        };
        if toks.len() != 2 {
            return Err(parse_err(line, col_of(toks[0]), "expected `u v`"));
        }
        let u = parse_usize(toks[0], line, col_of(toks[0]))?;
        let v = parse_usize(toks[1], line, col_of(toks[1]))?;
        check_edge(n, u, v, &edges).map_err(|m| parse_err(line, col_of(toks[0]), m))?;
        edges.push([u, v]);
    }
    let (n, m, hline) = header.ok_or_else(|| parse_err(1, 1, "missing `p <n> <m>` header"))?;
    if edges.len() != m {
        return Err(parse_err(
            hline,
            1,
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    SimpleGraph::new(n, edges.into_iter().map(|[u, v]| (u, v)))
}

fn parse_usize(tok: &str, line: usize, column: usize) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            column,
            format!("expected a nonnegative integer, found `{tok}`"),
        )
    })
}

fn check_edge(
    n: usize,
    u: usize,
    v: usize,
    before: &[[usize; 2]],
) -> std::result::Result<(), String> {
    if u == v {
        return Err(format!("loop at vertex {u}"));
    }
    for w in [u, v] {
        if w == 0 || w > n {
            return Err(format!("vertex {w} out of range 1..={n}"));
        }
    }
    if before
        .iter()
        .any(|&[a, b]| (a, b) == (u, v) || (a, b) == (v, u))
    {
        return Err(format!("duplicate edge {{{u},{v}}}"));
    }
    Ok(())
}

/// Compact JSON form `{"n":…,"edges":[[u,v],…]}`.
pub fn graph_to_json(g: &SimpleGraph) -> String {
    let doc = GraphJson {
        n: g.num_vertices(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("graph serializes")
}

/// Edge-list form with a `p <n> <m>` header.
pub fn graph_to_edge_list(g: &SimpleGraph) -> String {
    let mut s = format!("p {} {}\n", g.num_vertices(), g.num_edges());
    for &(u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
