//! Permutation graphs and the scanline decision procedure.
//!
//! Vertex `i` (0-based) is the line from top position `i + 1` to bottom
//! position `π⁻¹(i + 1)`. Two lines cross iff their vertices are adjacent.
//! A scanline is a pair of gap indices `(top, bottom)`, each in `0..=n`; gap
//! `g` sits right after position `g`.

use std::collections::VecDeque;

use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationDiagram {
    /// `pi[i]` is `π(i + 1)`, 1-based values.
    pub pi: Vec<usize>,
    /// `bottom[v]`: bottom position of line `v`, i.e. `π⁻¹(v + 1)`.
    pub bottom: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scanline {
    pub top: usize,
    pub bottom: usize,
}

/// Scanlines whose crossing sets need at most `k` cliques, and the arcs
/// between them.
#[derive(Clone, Debug)]
pub struct ScanlineGraph {
    pub k: usize,
    pub nodes: Vec<Scanline>,
    pub arcs: Vec<(Scanline, Scanline)>,
}

/// Outcome of [`decide_tcl_at_most_k`].
#[derive(Clone, Debug)]
pub struct PermDecision {
    pub answer: bool,
    /// Scanlines from `(0,0)` to `(n,n)` on a yes answer.
    pub path: Vec<Scanline>,
    pub witness: Option<Decomposition>,
}

impl PermutationDiagram {
    pub fn new(pi: &[usize]) -> Result<Self> {
        let n = pi.len();
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut bottom = vec![0usize; n];
        for (pos, &value) in pi.iter().enumerate() {
            if value == 0 || value > n {
                return Err(Error::NotAPermutation(format!(
                    "value {value} outside 1..={n}"
                )));
            }
            if bottom[value - 1] != 0 {
                return Err(Error::NotAPermutation(format!("value {value} repeated")));
            }
            bottom[value - 1] = pos + 1;
        }
        Ok(PermutationDiagram {
            pi: pi.to_vec(),
            bottom,
        })
    }

    pub fn n(&self) -> usize {
        self.pi.len()
    }

    #[inline]
    fn top(&self, v: usize) -> usize {
        v + 1
    }

    pub fn lines(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    /// Lines with both endpoints left of `s`.
    fn left_of(&self, s: Scanline) -> VertexSet {
        (0..self.n())
            .filter(|&v| self.top(v) <= s.top && self.bottom[v] <= s.bottom)
            .collect()
    }

    /// Lines with both endpoints right of `s`.
    fn right_of(&self, s: Scanline) -> VertexSet {
        (0..self.n())
            .filter(|&v| self.top(v) > s.top && self.bottom[v] > s.bottom)
            .collect()
    }

    /// Lines between `s` and `t` or crossing either of them.
    pub fn candidate_component(&self, s: Scanline, t: Scanline) -> VertexSet {
        self.lines() - self.left_of(s) - self.right_of(t)
    }
}

/// `G[π]`: `i ~ j` iff `(i - j)(π⁻¹(i) - π⁻¹(j)) < 0`.
pub fn inversion_graph(pi: &[usize]) -> Result<Graph> {
    let d = PermutationDiagram::new(pi)?;
    Ok(diagram_graph(&d))
}

fn diagram_graph(d: &PermutationDiagram) -> Graph {
    let n = d.n();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if d.bottom[i] > d.bottom[j] {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("lines are in range")
}

/// Lines with exactly one endpoint left of `s`.
pub fn crossing_lines(d: &PermutationDiagram, s: Scanline) -> VertexSet {
    (0..d.n())
        .filter(|&v| (d.top(v) <= s.top) != (d.bottom[v] <= s.bottom))
        .collect()
}

/// Minimum clique partition of the lines in `L`, by patience sorting the
/// bottom positions taken in top order. Each pile is a decreasing run, hence
/// a clique; the pile count is the longest increasing run.
pub fn cover_partition(d: &PermutationDiagram, l: VertexSet) -> Vec<VertexSet> {
    // Lines iterate in top order since top(v) = v + 1.
    let mut tops: Vec<usize> = Vec::new();
    let mut piles: Vec<VertexSet> = Vec::new();
    for v in l {
        let b = d.bottom[v];
        let i = tops.partition_point(|&t| t < b);
        if i == tops.len() {
            tops.push(b);
            piles.push(VertexSet::singleton(v));
        } else {
            tops[i] = b;
            piles[i].insert(v);
        }
    }
    piles
}

pub fn cover_of_line_set(d: &PermutationDiagram, l: VertexSet) -> usize {
    cover_partition(d, l).len()
}

/// All scanlines whose crossing set needs at most `k` cliques.
pub fn k_small_scanlines(d: &PermutationDiagram, k: usize) -> Vec<Scanline> {
    let n = d.n();
    let mut out = Vec::new();
    for top in 0..=n {
        for bottom in 0..=n {
            let s = Scanline { top, bottom };
            if cover_of_line_set(d, crossing_lines(d, s)) <= k {
                out.push(s);
            }
        }
    }
    out
}

fn successors(d: &PermutationDiagram, s: Scanline, k: usize) -> Vec<Scanline> {
    let n = d.n();
    let tops = (s.top + 1..=n).map(|top| Scanline {
        top,
        bottom: s.bottom,
    });
    let bottoms = (s.bottom + 1..=n).map(|bottom| Scanline { top: s.top, bottom });
    tops.chain(bottoms)
        .filter(|&t| cover_of_line_set(d, d.candidate_component(s, t)) <= k)
        .collect()
}

/// `W_k`: k-small scanlines with arcs `s → t` where `t` moves one endpoint
/// of `s` strictly right and the candidate component needs at most `k`
/// cliques.
pub fn scanline_graph(d: &PermutationDiagram, k: usize) -> ScanlineGraph {
    let nodes = k_small_scanlines(d, k);
    let arcs = nodes
        .iter()
        .flat_map(|&s| successors(d, s, k).into_iter().map(move |t| (s, t)))
        .collect();
    ScanlineGraph { k, nodes, arcs }
}

/// Decides `tcl(G[π]) ≤ k` by searching for a scanline path from `(0,0)` to
/// `(n,n)`; the candidate components along the path form a path
/// decomposition.
pub fn decide_tcl_at_most_k(pi: &[usize], k: usize) -> Result<PermDecision> {
    let d = PermutationDiagram::new(pi)?;
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let n = d.n();
    let g = diagram_graph(&d);
    let start = Scanline { top: 0, bottom: 0 };
    let goal = Scanline { top: n, bottom: n };
    if n == 0 {
        let witness = Decomposition::new(vec![VertexSet::EMPTY], vec![vec![]], vec![]);
        return Ok(PermDecision {
            answer: true,
            path: vec![start],
            witness: Some(witness),
        });
    }
    let idx = |s: Scanline| s.top * (n + 1) + s.bottom;
    let mut prev: Vec<Option<Scanline>> = vec![None; (n + 1) * (n + 1)];
    let mut seen = vec![false; (n + 1) * (n + 1)];
    seen[idx(start)] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if s == goal {
            break;
        }
        for t in successors(&d, s, k) {
            if !seen[idx(t)] {
                seen[idx(t)] = true;
                prev[idx(t)] = Some(s);
                queue.push_back(t);
            }
        }
    }
    if !seen[idx(goal)] {
        return Ok(PermDecision {
            answer: false,
            path: Vec::new(),
            witness: None,
        });
    }
    let mut path = vec![goal];
    while let Some(p) = prev[idx(*path.last().unwrap())] {
        path.push(p);
    }
    path.reverse();

    let bags: Vec<VertexSet> = path
        .windows(2)
        .map(|w| d.candidate_component(w[0], w[1]))
        .filter(|b| !b.is_empty())
        .collect();
    let covers = bags.iter().map(|&b| cover_partition(&d, b)).collect();
    let edges = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let witness = Decomposition::new(bags, covers, edges);
    debug_assert!(
        witness.validate(&g).is_valid(),
        "{:?}",
        witness.validate(&g)
    );
    Ok(PermDecision {
        answer: true,
        path,
        witness: Some(witness),
    })
}

/// Least `k` accepted by [`decide_tcl_at_most_k`], with its witness.
pub fn compute_tcl(pi: &[usize]) -> Result<(usize, Decomposition)> {
    let d = PermutationDiagram::new(pi)?;
    if d.n() == 0 {
        return Ok((
            0,
            Decomposition::new(vec![VertexSet::EMPTY], vec![vec![]], vec![]),
        ));
    }
    for k in 1..=d.n() {
        let r = decide_tcl_at_most_k(pi, k)?;
        if r.answer {
            return Ok((k, r.witness.unwrap()));
        }
    }
    unreachable!("k = n always admits the single-bag path")
}
