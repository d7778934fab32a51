//! Simple undirected graphs on at most 64 vertices, with the separator and
//! potential-maximal-clique primitives the solvers are built from.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// Immutable simple graph. Vertex ids are `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

/// Components left after deleting a vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatorInfo {
    pub separator: VertexSet,
    /// Sorted by minimum vertex.
    pub components: Vec<VertexSet>,
    /// `full_flags[i]` iff `N(components[i]) == separator`.
    pub full_flags: Vec<bool>,
}

impl SeparatorInfo {
    pub fn full_components(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.components
            .iter()
            .zip(&self.full_flags)
            .filter(|(_, &f)| f)
            .map(|(&c, _)| c)
    }

    pub fn num_full(&self) -> usize {
        self.full_flags.iter().filter(|&&f| f).count()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// If `n` exceeds [`MAX_VERTICES`].
    pub fn empty(n: usize) -> Graph {
        assert!(
            n <= MAX_VERTICES,
            "graph on {n} vertices exceeds the {MAX_VERTICES}-vertex universe"
        );
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
            labels: None,
        }
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                n,
                cap: MAX_VERTICES,
            });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { u, v, vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    /// Graph with the given adjacency rows. Rows are symmetrised and
    /// self-loops dropped.
    pub fn from_adjacency(rows: &[VertexSet]) -> Graph {
        let n = rows.len();
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in (row & all).without(u) {
                g.adj[u].insert(v);
                g.adj[v].insert(u);
            }
        }
        g
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.adj[u] {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Δ(G); 0 on the empty graph.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// ω(G); 0 on the graph with no vertices.
    pub fn clique_number(&self) -> usize {
        self.maximal_cliques_within(self.vertices())
            .iter()
            .map(|c| c.len())
            .max()
            .unwrap_or(0)
    }

    /// Open neighbourhood of a set: `N(S) \ S`.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out |= self.adj[v];
        }
        out - s
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s - self.adj[v]).without(v).is_empty())
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| !self.adj[v].intersects(s))
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next |= self.adj[v];
            }
            next = (next & within) - seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of `G[within]`, sorted by minimum vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, rest);
            rest -= c;
            out.push(c);
        }
        out
    }

    /// Whether `G[s]` is connected. The empty set counts as connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.reach(v, s) == s,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_set(self.vertices())
    }

    pub fn components_of_removal(&self, s: VertexSet) -> SeparatorInfo {
        let components = self.components_within(self.vertices() - s);
        let full_flags = components
            .iter()
            .map(|&c| self.neighborhood(c) == s)
            .collect();
        SeparatorInfo {
            separator: s,
            components,
            full_flags,
        }
    }

    /// Complement graph. Labels are kept.
    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n)
                .map(|v| (all - self.adj[v]).without(v))
                .collect(),
            labels: self.labels.clone(),
        }
    }

    /// `G[S]` relabelled to `0..|S|`; `map[i]` is the original id of new vertex `i`.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.iter().collect();
        let mut inv = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            inv[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & s).iter().map(|w| inv[w]).collect())
            .collect();
        let labels = self
            .labels
            .as_ref()
            .map(|l| map.iter().map(|&v| l[v].clone()).collect());
        (
            Graph {
                n: map.len(),
                adj,
                labels,
            },
            map,
        )
    }

    /// `G` with `S` turned into a clique.
    pub fn complete_set(&self, s: VertexSet) -> Graph {
        let mut g = self.clone();
        for v in s {
            g.adj[v] |= s.without(v);
        }
        g
    }

    /// Adds the edges of `other` (same vertex count).
    pub fn union_edges(&self, other: &Graph) -> Graph {
        assert_eq!(self.n, other.n);
        let mut g = self.clone();
        for v in 0..self.n {
            g.adj[v] |= other.adj[v];
        }
        g
    }

    /// Maximal cliques of `G[within]`, sorted by bit pattern.
    pub fn maximal_cliques_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_maximal_clique(within, |c| out.push(c));
        out.sort_unstable();
        out
    }

    /// Maximal independent sets of `G[within]`, sorted by bit pattern.
    pub fn maximal_independent_sets_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.for_each_maximal_independent_set(within, |c| out.push(c));
        out.sort_unstable();
        out
    }

    /// Calls `f` on every maximal clique of `G[within]`, in search order.
    pub fn for_each_maximal_clique<F: FnMut(VertexSet)>(&self, within: VertexSet, mut f: F) {
        let within = within & self.vertices();
        if within.is_empty() {
            f(VertexSet::EMPTY);
            return;
        }
        bron_kerbosch(
            &|v| self.adj[v] & within,
            VertexSet::EMPTY,
            within,
            VertexSet::EMPTY,
            &mut f,
        );
    }

    /// Calls `f` on every maximal independent set of `G[within]`.
    pub fn for_each_maximal_independent_set<F: FnMut(VertexSet)>(
        &self,
        within: VertexSet,
        mut f: F,
    ) {
        let within = within & self.vertices();
        if within.is_empty() {
            f(VertexSet::EMPTY);
            return;
        }
        let non_adj = |v: usize| (within - self.adj[v]).without(v);
        bron_kerbosch(&non_adj, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut f);
    }

    pub fn enumerate_maximal_independent_sets(&self) -> Vec<VertexSet> {
        self.maximal_independent_sets_within(self.vertices())
    }

    /// All minimal separators, sorted by bit pattern. On a disconnected graph
    /// the empty set is included.
    pub fn enumerate_minimal_separators(&self) -> Vec<VertexSet> {
        let mut found: BTreeSet<VertexSet> = BTreeSet::new();
        let mut queue = VecDeque::new();
        let all = self.vertices();
        let push =
            |s: VertexSet, found: &mut BTreeSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
                if found.insert(s) {
                    queue.push_back(s);
                }
            };
        for v in 0..self.n {
            for c in self.components_within(all - self.closed_neighbors(v)) {
                push(self.neighborhood(c), &mut found, &mut queue);
            }
        }
        while let Some(s) = queue.pop_front() {
            for x in s {
                for c in self.components_within(all - (s | self.adj[x])) {
                    push(self.neighborhood(c), &mut found, &mut queue);
                }
            }
        }
        found.into_iter().collect()
    }

    /// Whether `S` is a minimal separator: `G - S` has at least two full components.
    pub fn is_minimal_separator(&self, s: VertexSet) -> bool {
        self.components_of_removal(s).num_full() >= 2
    }

    /// Whether `K` is a potential maximal clique: no full component of
    /// `G - K`, and every non-adjacent pair of `K` lies in the neighbourhood
    /// of a common component.
    pub fn is_pmc(&self, k: VertexSet) -> bool {
        if k.is_empty() || !k.is_subset(self.vertices()) {
            return false;
        }
        let info = self.components_of_removal(k);
        if info.num_full() > 0 {
            return false;
        }
        let seps: Vec<VertexSet> = info
            .components
            .iter()
            .map(|&c| self.neighborhood(c))
            .collect();
        for u in k {
            let mut reach = self.adj[u];
            for &s in &seps {
                if s.contains(u) {
                    reach |= s;
                }
            }
            if !(k.without(u)).is_subset(reach) {
                return false;
            }
        }
        true
    }
}

/// Bron–Kerbosch with Tomita pivoting over an abstract adjacency.
fn bron_kerbosch<A, F>(adj: &A, r: VertexSet, mut p: VertexSet, mut x: VertexSet, f: &mut F)
where
    A: Fn(usize) -> VertexSet,
    F: FnMut(VertexSet),
{
    if p.is_empty() {
        if x.is_empty() {
            f(r);
        }
        return;
    }
    let pivot = (p | x).iter().max_by_key(|&u| (adj(u) & p).len()).unwrap();
    for v in p - adj(pivot) {
        let nv = adj(v);
        bron_kerbosch(adj, r.with(v), p & nv, x & nv, f);
        p.remove(v);
        x.insert(v);
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    #[test]
    fn construction_and_errors() {
        assert_eq!(c4().m(), 4);
        assert_eq!(Graph::from_edges(3, &[]).unwrap().m(), 0);
        let g = Graph::from_edges(4, &[(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
        assert!(matches!(
            Graph::from_edges(65, &[]),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn complement_cases() {
        assert_eq!(Graph::complete(4).complement().m(), 0);
        let c = c5().complement();
        // C5's complement is the pentagram 0-2-4-1-3-0.
        let pentagram = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c, pentagram);
        assert_eq!(p4().complement().complement(), p4());
    }

    #[test]
    fn induced_subgraph_cases() {
        let (h, map) = c4().induced_subgraph(set(&[0, 1, 2]));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(c4().induced_subgraph(VertexSet::EMPTY).0.n(), 0);
        assert_eq!(c4().induced_subgraph(c4().vertices()).0, c4());
    }

    #[test]
    fn components_of_removal_cases() {
        let info = c4().components_of_removal(set(&[0, 2]));
        assert_eq!(info.components, vec![set(&[1]), set(&[3])]);
        assert_eq!(info.full_flags, vec![true, true]);

        let info = p4().components_of_removal(set(&[1]));
        assert_eq!(info.components, vec![set(&[0]), set(&[2, 3])]);
        assert_eq!(info.full_flags, vec![true, true]);

        let info = Graph::complete(4).components_of_removal(set(&[0, 1]));
        assert_eq!(info.components, vec![set(&[2, 3])]);
        assert_eq!(info.full_flags, vec![true]);
    }

    #[test]
    fn complete_set_cases() {
        let g = c4().complete_set(set(&[0, 2]));
        assert_eq!(g.m(), 5);
        assert!(g.has_edge(0, 2));
        assert_eq!(c4().complete_set(set(&[1])), c4());
        assert_eq!(
            Graph::empty(3).complete_set(set(&[0, 1, 2])),
            Graph::complete(3)
        );
    }

    #[test]
    fn mis_cases() {
        assert_eq!(
            Graph::complete(3).enumerate_maximal_independent_sets(),
            vec![set(&[0]), set(&[1]), set(&[2])]
        );
        let m = c5().enumerate_maximal_independent_sets();
        assert_eq!(m.len(), 5);
        assert!(m.iter().all(|s| s.len() == 2 && c5().is_independent(*s)));
        assert_eq!(
            p4().enumerate_maximal_independent_sets(),
            vec![set(&[0, 2]), set(&[0, 3]), set(&[1, 3])]
        );
        assert_eq!(
            Graph::empty(0).enumerate_maximal_independent_sets(),
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn minimal_separator_cases() {
        assert_eq!(
            p4().enumerate_minimal_separators(),
            vec![set(&[1]), set(&[2])]
        );
        assert_eq!(
            c4().enumerate_minimal_separators(),
            vec![set(&[0, 2]), set(&[1, 3])]
        );
        assert!(Graph::complete(4).enumerate_minimal_separators().is_empty());
        assert_eq!(
            Graph::empty(2).enumerate_minimal_separators(),
            vec![VertexSet::EMPTY]
        );
    }

    #[test]
    fn pmc_cases() {
        assert!(c4().is_pmc(set(&[0, 1, 2])));
        assert!(!c4().is_pmc(set(&[0, 2])));
        assert!(Graph::complete(3).is_pmc(set(&[0, 1, 2])));
        assert!(!c4().is_pmc(VertexSet::EMPTY));
        assert!(p4().is_pmc(set(&[1, 2])));
        assert!(!p4().is_pmc(set(&[0, 1, 2])));
    }

    #[test]
    fn accessors() {
        assert_eq!(c5().max_degree(), 2);
        assert_eq!(c5().clique_number(), 2);
        assert_eq!(Graph::complete(5).clique_number(), 5);
        assert_eq!(Graph::empty(0).clique_number(), 0);
        assert_eq!(c4().neighborhood(set(&[0])), set(&[1, 3]));
    }
}
