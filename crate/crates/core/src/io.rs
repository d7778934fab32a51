//! Text formats.
//!
//! * Graph: `p edge <n> <m>`, then `e <u> <v>` per edge, 1-indexed; `c` lines
//!   are comments.
//! * Decomposition: `tcd <width> <nodes> <n>`, then `b <node> <v...>`,
//!   `c <node> <v...>` (one clique per line) and `t <i> <j>`; nodes and
//!   vertices 1-indexed; `#` starts a comment.
//! * Permutation: the values `π(1) .. π(n)` separated by whitespace.

use std::fmt::Write as _;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| Error::parse(line, format!("missing {what}")))?;
    tok.parse().map_err(|_| {
        Error::parse(
            line,
            format!("{what} is not a non-negative integer: '{tok}'"),
        )
    })
}

fn one_based(tok: &str, line: usize, limit: usize, what: &str) -> Result<usize> {
    let v: usize = tok
        .parse()
        .map_err(|_| Error::parse(line, format!("{what} is not a positive integer: '{tok}'")))?;
    if v == 0 || v > limit {
        return Err(Error::parse(
            line,
            format!("{what} {v} outside 1..={limit}"),
        ));
    }
    Ok(v - 1)
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(Error::parse(line, "second 'p' line"));
                }
                match toks.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(Error::parse(
                            line,
                            format!("expected 'p edge', found {other:?}"),
                        ))
                    }
                }
                let n = number(toks.next(), line, "vertex count")?;
                let m = number(toks.next(), line, "edge count")?;
                if n > MAX_VERTICES {
                    return Err(Error::CapacityExceeded {
                        n,
                        cap: MAX_VERTICES,
                    });
                }
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| Error::parse(line, "edge before 'p' line"))?;
                let u = one_based(toks.next().unwrap_or(""), line, n, "endpoint")?;
                let v = one_based(toks.next().unwrap_or(""), line, n, "endpoint")?;
                if u == v {
                    return Err(Error::parse(line, format!("self-loop on vertex {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(Error::parse(line, format!("unknown line type '{other}'"))),
        }
        if let Some(extra) = toks.next() {
            return Err(Error::parse(line, format!("unexpected token '{extra}'")));
        }
    }
    let (n, m) =
        header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing 'p edge' line"))?;
    let g = Graph::from_edges(n, &edges)?;
    if g.m() != m && edges.len() != m {
        return Err(Error::parse(
            1,
            format!("header declares {m} edges, found {}", g.m()),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// A parsed decomposition file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TcdFile {
    pub declared_width: usize,
    pub n: usize,
    pub decomposition: Decomposition,
}

pub fn parse_tcd(text: &str) -> Result<TcdFile> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<VertexSet> = Vec::new();
    let mut covers: Vec<Vec<VertexSet>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        if kind == "tcd" {
            if header.is_some() {
                return Err(Error::parse(line, "second 'tcd' header"));
            }
            let w = number(toks.next(), line, "width")?;
            let k = number(toks.next(), line, "node count")?;
            let n = number(toks.next(), line, "vertex count")?;
            if n > MAX_VERTICES {
                return Err(Error::CapacityExceeded {
                    n,
                    cap: MAX_VERTICES,
                });
            }
            if let Some(extra) = toks.next() {
                return Err(Error::parse(line, format!("unexpected token '{extra}'")));
            }
            header = Some((w, k, n));
            bags = vec![VertexSet::EMPTY; k];
            covers = vec![Vec::new(); k];
            continue;
        }
        let (_, k, n) = header.ok_or_else(|| Error::parse(line, "content before 'tcd' header"))?;
        match kind {
            "b" | "c" => {
                let node = one_based(toks.next().unwrap_or(""), line, k, "node")?;
                let mut s = VertexSet::EMPTY;
                for t in toks {
                    s.insert(one_based(t, line, n, "vertex")?);
                }
                if kind == "b" {
                    bags[node] |= s;
                } else {
                    covers[node].push(s);
                }
            }
            "t" => {
                let a = one_based(toks.next().unwrap_or(""), line, k, "node")?;
                let b = one_based(toks.next().unwrap_or(""), line, k, "node")?;
                if let Some(extra) = toks.next() {
                    return Err(Error::parse(line, format!("unexpected token '{extra}'")));
                }
                edges.push((a, b));
            }
            other => return Err(Error::parse(line, format!("unknown line type '{other}'"))),
        }
    }
    let (declared_width, _, n) =
        header.ok_or_else(|| Error::parse(text.lines().count().max(1), "missing 'tcd' header"))?;
    Ok(TcdFile {
        declared_width,
        n,
        decomposition: Decomposition::new(bags, covers, edges),
    })
}

pub fn write_tcd(d: &Decomposition, n: usize) -> String {
    let list = |s: VertexSet| s.iter().map(|v| format!(" {}", v + 1)).collect::<String>();
    let mut out = format!("tcd {} {} {}\n", d.width(), d.num_nodes(), n);
    for (t, &b) in d.bags.iter().enumerate() {
        writeln!(out, "b {}{}", t + 1, list(b)).unwrap();
        for &c in &d.covers[t] {
            writeln!(out, "c {}{}", t + 1, list(c)).unwrap();
        }
    }
    for &(a, b) in &d.edges {
        writeln!(out, "t {} {}", a + 1, b + 1).unwrap();
    }
    out
}

pub fn parse_permutation(text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        for tok in content.split_whitespace() {
            out.push(
                tok.parse()
                    .map_err(|_| Error::parse(i + 1, format!("not a positive integer: '{tok}'")))?,
            );
        }
    }
    crate::permutation::PermutationDiagram::new(&out)?;
    Ok(out)
}

pub fn write_permutation(pi: &[usize]) -> String {
    let v: Vec<String> = pi.iter().map(|x| x.to_string()).collect();
    format!("{}\n", v.join(" "))
}

/// Result of checking a decomposition file against a graph file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    /// 0 valid, 1 invalid, 2 unreadable input.
    pub code: i32,
    pub report: String,
}

/// How many violations a report lists before summarising.
const REPORT_LIMIT: usize = 10;

pub fn verify(graph_text: &str, tcd_text: &str) -> Verdict {
    let g = match parse_graph(graph_text) {
        Ok(g) => g,
        Err(e) => {
            return Verdict {
                code: 2,
                report: format!("graph file: {e}"),
            }
        }
    };
    let f = match parse_tcd(tcd_text) {
        Ok(f) => f,
        Err(e) => {
            return Verdict {
                code: 2,
                report: format!("decomposition file: {e}"),
            }
        }
    };
    let mut lines = Vec::new();
    if f.n != g.n() {
        lines.push(format!(
            "decomposition is for {} vertices, graph has {}",
            f.n,
            g.n()
        ));
    }
    let report = f.decomposition.validate(&g);
    for v in report.violations.iter().take(REPORT_LIMIT) {
        lines.push(v.to_string());
    }
    if report.violations.len() > REPORT_LIMIT {
        lines.push(format!(
            "... {} more",
            report.violations.len() - REPORT_LIMIT
        ));
    }
    let width = f.decomposition.width();
    if lines.is_empty() && f.declared_width != width {
        lines.push(format!(
            "header declares width {} but the covers have width {width}",
            f.declared_width
        ));
    }
    if lines.is_empty() {
        Verdict {
            code: 0,
            report: format!("valid, width {width}"),
        }
    } else {
        Verdict {
            code: 1,
            report: format!("invalid:\n  {}", lines.join("\n  ")),
        }
    }
}
