//! Separator dynamic program deciding `tcl(G) ≤ k`.
//!
//! A block is a connected set `C` together with `S = N(C)` where `S` can be
//! covered by at most `k` cliques. Block `C` is *good* when `G[S ∪ C]` has a
//! decomposition of width at most `k` with `S` inside one bag. That holds iff
//! `S ∪ C` itself needs at most `k` cliques, or some `v ∈ C` has
//! `vcc(S ∪ {v}) ≤ k` and every component of `G[C - v]` is a good block.
//! Blocks are resolved in order of increasing `|C|`, so every lookup hits a
//! finished entry.

use std::collections::HashMap;

use crate::cover::{lawler_table, CoverTable};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// One resolved block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockEntry {
    pub separator: VertexSet,
    pub component: VertexSet,
    pub answer: bool,
    /// Vertex added to the separator when the block was split.
    pub split: Option<usize>,
}

impl BlockEntry {
    /// `|S ∪ C|`.
    pub fn size(&self) -> usize {
        (self.separator | self.component).len()
    }
}

/// Result of one decision run.
#[derive(Clone, Debug)]
pub struct Decision {
    pub answer: bool,
    /// Separator used at the top level; `None` when `V` fits in one bag or the
    /// answer is no.
    pub separator: Option<VertexSet>,
    pub witness: Option<Decomposition>,
    pub entries: Vec<BlockEntry>,
}

fn check_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::Disconnected)
    }
}

/// Decides `tcl(G) ≤ k` for connected `G` using a cover table of `G`.
pub fn decide_tcl_at_most_k(g: &Graph, k: usize, table: &CoverTable) -> Result<Decision> {
    check_connected(g)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    if table.n() != g.n() {
        return Err(Error::InvalidParameter(
            "cover table belongs to another graph".into(),
        ));
    }
    let all = g.vertices();
    if table.value(all) <= k {
        return Ok(Decision {
            answer: true,
            separator: None,
            witness: Some(Decomposition::with_min_covers(g, vec![all], vec![])),
            entries: Vec::new(),
        });
    }

    // Collect blocks, bucketed by |C|.
    let mut seen: HashMap<VertexSet, usize> = HashMap::new();
    let mut buckets: Vec<Vec<BlockEntry>> = vec![Vec::new(); g.n() + 1];
    for bits in 1..all.bits() {
        let s = VertexSet::from_bits(bits);
        if table.value(s) > k {
            continue;
        }
        let info = g.components_of_removal(s);
        for c in info.full_components() {
            if seen.insert(c, 0).is_none() {
                buckets[c.len()].push(BlockEntry {
                    separator: s,
                    component: c,
                    answer: false,
                    split: None,
                });
            }
        }
    }

    let mut good: HashMap<VertexSet, BlockEntry> = HashMap::with_capacity(seen.len());
    let mut entries = Vec::with_capacity(seen.len());
    for bucket in buckets {
        for mut e in bucket {
            let s = e.separator;
            let c = e.component;
            if table.value(s | c) <= k {
                e.answer = true;
            } else {
                e.split = c.iter().find(|&v| {
                    table.value(s.with(v)) <= k
                        && g.components_within(c.without(v))
                            .iter()
                            .all(|d| good.get(d).is_some_and(|b| b.answer))
                });
                e.answer = e.split.is_some();
            }
            good.insert(c, e);
            entries.push(e);
        }
    }

    // Top level: a separator whose every component is a good block.
    let mut found = None;
    for bits in 1..all.bits() {
        let s = VertexSet::from_bits(bits);
        if table.value(s) > k {
            continue;
        }
        let comps = g.components_within(all - s);
        if comps.len() >= 2 && comps.iter().all(|d| good.get(d).is_some_and(|b| b.answer)) {
            found = Some((s, comps));
            break;
        }
    }

    let Some((sep, comps)) = found else {
        return Ok(Decision {
            answer: false,
            separator: None,
            witness: None,
            entries,
        });
    };

    let mut bags = vec![sep];
    let mut edges = Vec::new();
    for d in comps {
        let at = build(g, &good, d, &mut bags, &mut edges);
        edges.push((0, at));
    }
    let covers = bags.iter().map(|&b| table.partition(g, b)).collect();
    let raw = Decomposition::new(bags, covers, edges);
    debug_assert!(raw.validate(g).is_valid(), "{:?}", raw.validate(g));
    let witness = raw.sanitize(g)?;
    Ok(Decision {
        answer: true,
        separator: Some(sep),
        witness: Some(witness),
        entries,
    })
}

/// Appends a decomposition of good block `c`; returns the node holding `N(c)`.
fn build(
    g: &Graph,
    good: &HashMap<VertexSet, BlockEntry>,
    c: VertexSet,
    bags: &mut Vec<VertexSet>,
    edges: &mut Vec<(usize, usize)>,
) -> usize {
    let e = good[&c];
    let s = e.separator;
    match e.split {
        None => {
            bags.push(s | c);
            bags.len() - 1
        }
        Some(v) => {
            bags.push(s.with(v));
            let me = bags.len() - 1;
            for d in g.components_within(c.without(v)) {
                let at = build(g, good, d, bags, edges);
                edges.push((me, at));
            }
            me
        }
    }
}

/// `tcl(G)` with a witness of that width. Disconnected graphs are solved per
/// component; the result is the maximum.
pub fn compute_tcl(g: &Graph) -> Result<(usize, Decomposition)> {
    solve_by_components(g, |h| {
        let table = lawler_table(h, false)?;
        compute_tcl_connected(h, &table)
    })
}

/// `tcl(G)` for connected `G` given its cover table.
pub fn compute_tcl_connected(g: &Graph, table: &CoverTable) -> Result<(usize, Decomposition)> {
    check_connected(g)?;
    let upper = table.value(g.vertices());
    for k in 1..upper {
        let d = decide_tcl_at_most_k(g, k, table)?;
        if d.answer {
            return Ok((k, d.witness.expect("yes answers carry a witness")));
        }
    }
    Ok((
        upper,
        Decomposition::with_min_covers(g, vec![g.vertices()], vec![]),
    ))
}

/// Runs `solve` on each component of `G` and joins the pieces by linking
/// their roots in a path.
pub fn solve_by_components<F>(g: &Graph, mut solve: F) -> Result<(usize, Decomposition)>
where
    F: FnMut(&Graph) -> Result<(usize, Decomposition)>,
{
    if g.n() == 0 {
        return Ok((
            0,
            Decomposition::new(vec![VertexSet::EMPTY], vec![vec![]], vec![]),
        ));
    }
    let comps = g.components_within(g.vertices());
    if comps.len() == 1 {
        return solve(g);
    }
    let mut best = 0;
    let mut out = Decomposition::new(Vec::new(), Vec::new(), Vec::new());
    for c in comps {
        let (h, map) = g.induced_subgraph(c);
        let (w, d) = solve(&h)?;
        best = best.max(w);
        let offset = out.bags.len();
        let lift = |s: &VertexSet| s.iter().map(|v| map[v]).collect::<VertexSet>();
        out.bags.extend(d.bags.iter().map(lift));
        out.covers.extend(
            d.covers
                .iter()
                .map(|cv| cv.iter().map(lift).collect::<Vec<_>>()),
        );
        out.edges
            .extend(d.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
        if offset > 0 {
            out.edges.push((0, offset));
        }
    }
    Ok((best, out))
}
