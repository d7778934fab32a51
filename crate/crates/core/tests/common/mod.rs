#![allow(dead_code)]

use rand::Rng;
use tclq_core::{Decomposition, Graph, VertexSet};

/// Every maximal clique of `G` sits inside some bag.
pub fn cliques_contained(g: &Graph, d: &Decomposition) -> bool {
    g.maximal_cliques_within(g.vertices())
        .into_iter()
        .all(|w| d.bags.iter().any(|&b| w.is_subset(b)))
}

/// Valid for `G` with width exactly `w`.
pub fn witness_ok(g: &Graph, d: &Decomposition, w: usize) -> Result<(), String> {
    let r = d.validate(g);
    if !r.is_valid() {
        return Err(format!("invalid witness: {:?}", r.violations));
    }
    if d.width() != w {
        return Err(format!("witness width {} but reported {w}", d.width()));
    }
    if !cliques_contained(g, d) {
        return Err("a maximal clique is in no bag".into());
    }
    Ok(())
}

/// Proper colouring with colours exactly `0..k`.
pub fn proper_with_exactly(g: &Graph, colour: &[usize], k: usize) -> bool {
    let used: std::collections::BTreeSet<usize> = colour.iter().copied().collect();
    colour.len() == g.n()
        && used.into_iter().eq(0..k)
        && g.edges().iter().all(|&(u, v)| colour[u] != colour[v])
}

/// Redundant but valid variations of `d`.
pub fn perturb<R: Rng>(g: &Graph, d: &Decomposition, r: &mut R) -> Decomposition {
    let mut bags = d.bags.clone();
    let mut edges = d.edges.clone();
    for _ in 0..r.gen_range(1..=6) {
        let t = r.gen_range(0..bags.len());
        match r.gen_range(0..4) {
            0 => {
                bags.push(bags[t]);
                edges.push((t, bags.len() - 1));
            }
            1 => {
                let sub: VertexSet = bags[t].iter().filter(|_| r.gen_bool(0.5)).collect();
                bags.push(sub);
                edges.push((t, bags.len() - 1));
            }
            2 if !edges.is_empty() => {
                let i = r.gen_range(0..edges.len());
                let (a, b) = edges[i];
                bags.push(bags[a] & bags[b]);
                let mid = bags.len() - 1;
                edges[i] = (a, mid);
                edges.push((mid, b));
            }
            3 if !edges.is_empty() => {
                let (a, b) = edges[r.gen_range(0..edges.len())];
                if let Some(v) = (bags[a] - bags[b]).first() {
                    bags[b].insert(v);
                }
            }
            _ => {}
        }
    }
    Decomposition::with_min_covers(g, bags, edges)
}
