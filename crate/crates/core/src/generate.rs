//! Seeded instance generators, the apex reduction, and exhaustive
//! enumeration of small graphs up to isomorphism.

use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cograph::{Cotree, CotreeNode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::permutation::inversion_graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `complement(G)` plus `apexes` pairwise non-adjacent vertices, each joined
/// to every vertex of the complement. Apexes get ids `n..n + apexes`.
pub fn gen_reduction_h(g: &Graph, apexes: usize) -> Result<Graph> {
    if apexes < 4 {
        return Err(Error::InvalidParameter(format!(
            "need at least 4 apexes, got {apexes}"
        )));
    }
    let n = g.n();
    let total = n + apexes;
    if total > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            n: total,
            cap: MAX_VERTICES,
        });
    }
    let mut edges = g.complement().edges();
    for a in n..total {
        edges.extend((0..n).map(|v| (v, a)));
    }
    Graph::from_edges(total, &edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// A random spanning tree overlaid with `G(n, p)`.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let j = rng.gen_range(0..i);
        edges.push((order[i], order[j]));
    }
    edges.extend(random_graph(rng, n, p).edges());
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Random `k`-tree on `n` vertices: a `(k+1)`-clique, then each new vertex is
/// joined to a uniformly chosen existing `k`-clique.
pub fn random_ktree<R: Rng>(rng: &mut R, n: usize, k: usize) -> Graph {
    if n <= k + 1 {
        return Graph::complete(n);
    }
    let base = VertexSet::full(k + 1);
    let mut cliques: Vec<VertexSet> = base.iter().map(|v| base.without(v)).collect();
    let mut edges: Vec<(usize, usize)> = Graph::complete(k + 1).edges();
    for v in k + 1..n {
        let c = cliques[rng.gen_range(0..cliques.len())];
        edges.extend(c.iter().map(|u| (u, v)));
        cliques.extend(c.iter().map(|u| c.without(u).with(v)));
    }
    Graph::from_edges(n, &edges).expect("edges in range")
}

/// Random cotree on `n` leaves named `v1..vn`: subtrees are merged two or
/// three at a time under a random label until one remains.
pub fn random_cotree<R: Rng>(rng: &mut R, n: usize) -> Cotree {
    assert!((1..=MAX_VERTICES).contains(&n));
    let mut nodes: Vec<CotreeNode> = (0..n).map(CotreeNode::Leaf).collect();
    let mut roots: Vec<usize> = (0..n).collect();
    while roots.len() > 1 {
        roots.shuffle(rng);
        let take = if roots.len() >= 3 && rng.gen_bool(0.3) {
            3
        } else {
            2
        };
        let kids: Vec<usize> = roots.split_off(roots.len() - take);
        nodes.push(if rng.gen_bool(0.5) {
            CotreeNode::Join(kids)
        } else {
            CotreeNode::Union(kids)
        });
        roots.push(nodes.len() - 1);
    }
    Cotree {
        nodes,
        root: roots[0],
        names: (1..=n).map(|i| format!("v{i}")).collect(),
    }
}

pub fn random_permutation<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut pi: Vec<usize> = (1..=n).collect();
    pi.shuffle(rng);
    pi
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    KTree,
    Cograph,
    Permutation,
    Reduction,
    Random,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "ktree" => Family::KTree,
            "cograph" => Family::Cograph,
            "permutation" => Family::Permutation,
            "reduction" => Family::Reduction,
            "random" => Family::Random,
            other => return Err(Error::InvalidParameter(format!("unknown family '{other}'"))),
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct GenParams {
    pub n: usize,
    /// Tree width for `ktree`.
    pub k: usize,
    /// Edge probability for `random` and the reduction source graph.
    pub p: f64,
    /// Apex count for `reduction`; 0 means `n + 1`.
    pub apexes: usize,
    pub count: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n: 8,
            k: 2,
            p: 0.5,
            apexes: 0,
            count: 1,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Instance {
    Graph(Graph),
    Cograph(Cotree, Graph),
    Permutation(Vec<usize>, Graph),
    /// Source graph and the reduction built from it.
    Reduction(Graph, Graph),
}

impl Instance {
    /// The graph a solver would run on.
    pub fn graph(&self) -> &Graph {
        match self {
            Instance::Graph(g)
            | Instance::Cograph(_, g)
            | Instance::Permutation(_, g)
            | Instance::Reduction(_, g) => g,
        }
    }
}

/// `count` instances of `family`, fully determined by `seed`.
pub fn gen_corpora(seed: u64, family: Family, params: GenParams) -> Result<Vec<Instance>> {
    let GenParams {
        n,
        k,
        p,
        apexes,
        count,
    } = params;
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            n,
            cap: MAX_VERTICES,
        });
    }
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            Ok(match family {
                Family::KTree => {
                    if k == 0 {
                        return Err(Error::InvalidParameter("k-trees need k ≥ 1".into()));
                    }
                    Instance::Graph(random_ktree(&mut r, n, k))
                }
                Family::Random => Instance::Graph(random_graph(&mut r, n, p)),
                Family::Cograph => {
                    if n == 0 {
                        return Err(Error::InvalidParameter("cotrees need n ≥ 1".into()));
                    }
                    let t = random_cotree(&mut r, n);
                    let g = t.to_graph();
                    Instance::Cograph(t, g)
                }
                Family::Permutation => {
                    let pi = random_permutation(&mut r, n);
                    let g = inversion_graph(&pi)?;
                    Instance::Permutation(pi, g)
                }
                Family::Reduction => {
                    let src = random_connected_graph(&mut r, n, p);
                    let h = gen_reduction_h(&src, if apexes == 0 { n + 1 } else { apexes })?;
                    Instance::Reduction(src, h)
                }
            })
        })
        .collect()
}

/// Colour refinement to a stable partition. Returns per-vertex colours and
/// a certificate of the refinement history; both are isomorphism invariant.
fn refine(g: &Graph) -> (Vec<u32>, Vec<u64>) {
    let n = g.n();
    let mut colour: Vec<u32> = (0..n).map(|v| g.degree(v) as u32).collect();
    let mut cert = Vec::new();
    let mut classes = usize::MAX;
    loop {
        let sig: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).iter().map(|u| colour[u]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut uniq = sig.clone();
        uniq.sort();
        uniq.dedup();
        for (c, nb) in &uniq {
            cert.push(*c as u64);
            cert.push(nb.len() as u64);
            cert.extend(nb.iter().map(|&x| x as u64));
        }
        colour = sig
            .iter()
            .map(|s| uniq.binary_search(s).unwrap() as u32)
            .collect();
        let mut hist = vec![0u64; uniq.len()];
        for &c in &colour {
            hist[c as usize] += 1;
        }
        cert.extend(hist);
        if uniq.len() == classes {
            return (colour, cert);
        }
        classes = uniq.len();
    }
}

fn isomorphic(g: &Graph, cg: &[u32], h: &Graph, ch: &[u32]) -> bool {
    fn go(
        g: &Graph,
        cg: &[u32],
        h: &Graph,
        ch: &[u32],
        map: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used.contains(w) || cg[v] != ch[w] {
                continue;
            }
            if (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w)) {
                map.push(w);
                if go(g, cg, h, ch, map, used.with(w)) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    g.n() == h.n()
        && go(
            g,
            cg,
            h,
            ch,
            &mut Vec::with_capacity(g.n()),
            VertexSet::EMPTY,
        )
}

/// One representative of every isomorphism class of graphs on `n` vertices,
/// built by adding a vertex with every possible neighbourhood to the classes
/// on `n - 1` vertices.
pub fn nonisomorphic_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 10, "exhaustive enumeration is limited to 10 vertices");
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut buckets: HashMap<Vec<u64>, Vec<(Graph, Vec<u32>)>> = HashMap::new();
        let mut next = Vec::new();
        for g in &level {
            for nb in VertexSet::full(m - 1).subsets() {
                let mut rows: Vec<VertexSet> = (0..m - 1).map(|v| g.neighbors(v)).collect();
                rows.push(nb);
                let cand = Graph::from_adjacency(&rows);
                let (col, cert) = refine(&cand);
                let bucket = buckets.entry(cert).or_default();
                if !bucket.iter().any(|(h, ch)| isomorphic(&cand, &col, h, ch)) {
                    bucket.push((cand.clone(), col));
                    next.push(cand);
                }
            }
        }
        level = next;
    }
    level
}
