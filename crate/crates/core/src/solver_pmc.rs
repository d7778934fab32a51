//! Block / potential-maximal-clique dynamic program for `tcl(G)`.
//!
//! For a minimal separator `S` and a full component `C` of `G - S`, the block
//! value is the least width of a decomposition of `G[S ∪ C]` that keeps `S`
//! inside one bag. It is the minimum, over PMCs `Ω` with `S ⊊ Ω ⊆ S ∪ C`, of
//! `vcc(Ω)` and the values of the blocks `(N(D), D)` for the components `D` of
//! `G - Ω` inside `C`. Cover numbers are always those of `G`.

use std::collections::HashMap;

use crate::cover::{lawler_table, CoverTable};
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver_dp::solve_by_components;
use crate::vertex_set::VertexSet;

/// A minimal separator with one component of `G - S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub separator: VertexSet,
    pub component: VertexSet,
    pub full: bool,
}

/// PMCs and minimal separators of `G`, each with its cover number.
#[derive(Clone, Debug)]
pub struct PmcCatalog {
    pub pmcs: Vec<(VertexSet, usize)>,
    pub separators: Vec<(VertexSet, usize)>,
    /// Separators with no other separator strictly inside them.
    pub inclusion_minimal: Vec<VertexSet>,
}

/// Sweeps all subsets with PMC marking and lists the minimal separators.
pub fn build_catalog(g: &Graph) -> Result<(PmcCatalog, CoverTable)> {
    let table = lawler_table(g, true)?;
    let pmcs = table
        .marked_pmcs()
        .expect("marks requested")
        .into_iter()
        .map(|p| (p, table.value(p)))
        .collect();
    let seps = g.enumerate_minimal_separators();
    let inclusion_minimal = seps
        .iter()
        .copied()
        .filter(|&s| !seps.iter().any(|&t| t.is_proper_subset(s)))
        .collect();
    let separators = seps.into_iter().map(|s| (s, table.value(s))).collect();
    Ok((
        PmcCatalog {
            pmcs,
            separators,
            inclusion_minimal,
        },
        table,
    ))
}

/// Full blocks of every separator in the catalog, by increasing `|S ∪ C|`.
pub fn full_blocks(g: &Graph, catalog: &PmcCatalog) -> Vec<Block> {
    let mut blocks: Vec<Block> = catalog
        .separators
        .iter()
        .flat_map(|&(s, _)| {
            let info = g.components_of_removal(s);
            info.full_components()
                .map(move |c| Block {
                    separator: s,
                    component: c,
                    full: true,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    blocks.sort_by_key(|b| ((b.separator | b.component).len(), b.component));
    blocks.dedup();
    blocks
}

#[derive(Clone, Copy)]
struct Best {
    value: usize,
    /// `None`: the whole block as one bag.
    omega: Option<VertexSet>,
}

/// `tcl(G)` for connected `G`, with a witness.
pub fn tcl_via_pmc(
    g: &Graph,
    catalog: &PmcCatalog,
    table: &CoverTable,
) -> Result<(usize, Decomposition)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let all = g.vertices();
    if g.is_clique(all) {
        return Ok((
            table.value(all),
            Decomposition::with_min_covers(g, vec![all], vec![]),
        ));
    }

    let mut best: HashMap<VertexSet, Best> = HashMap::new();
    for b in full_blocks(g, catalog) {
        let (s, c) = (b.separator, b.component);
        let whole = s | c;
        let mut cur = Best {
            value: table.value(whole),
            omega: None,
        };
        for &(omega, w) in &catalog.pmcs {
            if w >= cur.value || !(s.is_proper_subset(omega) && omega.is_subset(whole)) {
                continue;
            }
            let mut value = w;
            for d in g.components_within(c - omega) {
                let child = g.neighborhood(d) | d;
                assert!(child.is_proper_subset(whole), "child block is not smaller");
                let v = best.get(&d).expect("child block resolved first").value;
                value = value.max(v);
                if value >= cur.value {
                    break;
                }
            }
            if value < cur.value {
                cur = Best {
                    value,
                    omega: Some(omega),
                };
            }
        }
        best.insert(c, cur);
    }

    let mut answer: Option<(usize, VertexSet)> = None;
    for &s in &catalog.inclusion_minimal {
        let v = g
            .components_within(all - s)
            .iter()
            .map(|d| best[d].value)
            .max()
            .unwrap_or(0)
            .max(table.value(s));
        if answer.is_none_or(|(a, _)| v < a) {
            answer = Some((v, s));
        }
    }
    let (value, root) = answer.expect("an incomplete connected graph has a minimal separator");

    let mut bags = vec![root];
    let mut edges = Vec::new();
    for d in g.components_within(all - root) {
        let at = build(g, &best, root, d, &mut bags, &mut edges);
        edges.push((0, at));
    }
    let covers = bags.iter().map(|&b| table.partition(g, b)).collect();
    let witness = Decomposition::new(bags, covers, edges);
    debug_assert!(witness.validate(g).is_valid());
    debug_assert_eq!(witness.width(), value);
    Ok((value, witness))
}

fn build(
    g: &Graph,
    best: &HashMap<VertexSet, Best>,
    s: VertexSet,
    c: VertexSet,
    bags: &mut Vec<VertexSet>,
    edges: &mut Vec<(usize, usize)>,
) -> usize {
    match best[&c].omega {
        None => {
            bags.push(s | c);
            bags.len() - 1
        }
        Some(omega) => {
            bags.push(omega);
            let me = bags.len() - 1;
            for d in g.components_within(c - omega) {
                let at = build(g, best, g.neighborhood(d), d, bags, edges);
                edges.push((me, at));
            }
            me
        }
    }
}

/// Catalog, table and DP in one call; disconnected graphs are solved per
/// component.
pub fn compute_tcl(g: &Graph) -> Result<(usize, Decomposition)> {
    solve_by_components(g, |h| {
        let (catalog, table) = build_catalog(h)?;
        tcl_via_pmc(h, &catalog, &table)
    })
}
