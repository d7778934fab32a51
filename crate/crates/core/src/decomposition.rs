//! Augmented tree decompositions: a tree, a bag per node, and a list of
//! cliques of `G` per node whose union is the bag.

use std::collections::VecDeque;
use std::fmt;

use crate::cover::vcc;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub bags: Vec<VertexSet>,
    pub covers: Vec<Vec<VertexSet>>,
    /// Undirected tree edges; node 0 is the root.
    pub edges: Vec<(usize, usize)>,
}

/// Per-node structure relative to the root at node 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NodeAnatomy {
    pub parent: Option<usize>,
    pub adhesion: VertexSet,
    pub margin: VertexSet,
    pub cone: VertexSet,
    pub component: VertexSet,
}

/// A broken condition found by [`Decomposition::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoNodes,
    CoverListLength { bags: usize, covers: usize },
    TreeEdgeOutOfRange { a: usize, b: usize },
    TreeEdgeCount { nodes: usize, edges: usize },
    TreeDisconnected,
    BagVertexOutOfRange { node: usize, vertex: usize },
    VertexUncovered(usize),
    EdgeUncovered(usize, usize),
    SubtreeDisconnected(usize),
    NotAClique { node: usize, clique: VertexSet },
    CoverMismatch { node: usize },
    IntraBagEdgeUncovered { node: usize, u: usize, v: usize },
}

fn set1(s: VertexSet) -> String {
    let v: Vec<String> = s.iter().map(|v| (v + 1).to_string()).collect();
    format!("{{{}}}", v.join(","))
}

impl Violation {
    /// Message with 1-indexed vertices and nodes, as in the file formats.
    pub fn one_based(&self) -> String {
        use Violation::*;
        match *self {
            NoNodes => "decomposition has no nodes".into(),
            CoverListLength { bags, covers } => {
                format!("{bags} bags but {covers} cover lists")
            }
            TreeEdgeOutOfRange { a, b } => {
                format!("tree edge {}-{} names a missing node", a + 1, b + 1)
            }
            TreeEdgeCount { nodes, edges } => {
                format!(
                    "tree on {nodes} nodes has {edges} edges, expected {}",
                    nodes.saturating_sub(1)
                )
            }
            TreeDisconnected => "tree is not connected".into(),
            BagVertexOutOfRange { node, vertex } => {
                format!(
                    "bag {} contains vertex {} outside the graph",
                    node + 1,
                    vertex + 1
                )
            }
            VertexUncovered(v) => format!("vertex {} is in no bag", v + 1),
            EdgeUncovered(u, v) => format!("edge {}-{} is in no bag", u + 1, v + 1),
            SubtreeDisconnected(v) => format!("bags containing vertex {} are not connected", v + 1),
            NotAClique { node, clique } => {
                format!(
                    "cover set {} of node {} is not a clique",
                    set1(clique),
                    node + 1
                )
            }
            CoverMismatch { node } => {
                format!("covers of node {} do not union to its bag", node + 1)
            }
            IntraBagEdgeUncovered { node, u, v } => {
                format!(
                    "edge {}-{} in bag {} lies in none of its cliques",
                    u + 1,
                    v + 1,
                    node + 1
                )
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.one_based())
    }
}

/// Outcome of validation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Decomposition {
    pub fn new(
        bags: Vec<VertexSet>,
        covers: Vec<Vec<VertexSet>>,
        edges: Vec<(usize, usize)>,
    ) -> Self {
        Decomposition {
            bags,
            covers,
            edges,
        }
    }

    /// Bags and edges, with minimum covers computed per bag.
    pub fn with_min_covers(g: &Graph, bags: Vec<VertexSet>, edges: Vec<(usize, usize)>) -> Self {
        let covers = bags.iter().map(|&b| vcc(g, b).1).collect();
        Decomposition {
            bags,
            covers,
            edges,
        }
    }

    /// One node holding `V`.
    pub fn single_bag(g: &Graph) -> Self {
        Self::with_min_covers(g, vec![g.vertices()], vec![])
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    /// Largest cover list; 0 for an empty decomposition.
    pub fn width(&self) -> usize {
        self.covers.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Replaces every cover by a minimum clique partition of its bag.
    pub fn recompute_covers(&mut self, g: &Graph) {
        self.covers = self.bags.iter().map(|&b| vcc(g, b).1).collect();
    }

    /// Width after checking validity.
    pub fn checked_width(&self, g: &Graph) -> Result<usize> {
        let r = self.validate(g);
        match r.violations.first() {
            None => Ok(self.width()),
            Some(v) => Err(Error::InvalidDecomposition(v.to_string())),
        }
    }

    fn adjacency(&self) -> Option<Vec<Vec<usize>>> {
        let k = self.bags.len();
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &self.edges {
            if a >= k || b >= k {
                return None;
            }
            adj[a].push(b);
            adj[b].push(a);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        Some(adj)
    }

    /// Parent of every node and a BFS order from node 0, if the edges form a
    /// tree on all nodes.
    pub fn rooted(&self) -> Option<(Vec<Option<usize>>, Vec<usize>)> {
        let k = self.bags.len();
        if k == 0 || self.edges.len() != k - 1 {
            return None;
        }
        let adj = self.adjacency()?;
        let mut parent = vec![None; k];
        let mut seen = vec![false; k];
        let mut order = Vec::with_capacity(k);
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(x) = queue.pop_front() {
            order.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        (order.len() == k).then_some((parent, order))
    }

    /// Checks every condition; intra-bag edges need not lie inside a single
    /// cover clique.
    pub fn validate(&self, g: &Graph) -> Report {
        self.validate_with(g, false)
    }

    /// Like [`validate`](Self::validate), and also requires every edge inside
    /// a bag to lie in one of that bag's cliques.
    pub fn validate_strict(&self, g: &Graph) -> Report {
        self.validate_with(g, true)
    }

    fn validate_with(&self, g: &Graph, strict: bool) -> Report {
        use Violation::*;
        let mut out = Vec::new();
        let k = self.bags.len();
        if k == 0 {
            return Report {
                violations: vec![NoNodes],
            };
        }
        if self.covers.len() != k {
            out.push(CoverListLength {
                bags: k,
                covers: self.covers.len(),
            });
        }
        let mut tree_ok = true;
        if let Some(&(a, b)) = self.edges.iter().find(|&&(a, b)| a >= k || b >= k) {
            out.push(TreeEdgeOutOfRange { a, b });
            tree_ok = false;
        } else if self.edges.len() != k - 1 {
            out.push(TreeEdgeCount {
                nodes: k,
                edges: self.edges.len(),
            });
            tree_ok = false;
        } else if self.rooted().is_none() {
            out.push(TreeDisconnected);
            tree_ok = false;
        }

        let all = g.vertices();
        for (t, &b) in self.bags.iter().enumerate() {
            if let Some(v) = (b - all).first() {
                out.push(BagVertexOutOfRange { node: t, vertex: v });
            }
        }
        let union = self.bags.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
        for v in all - union {
            out.push(VertexUncovered(v));
        }
        for (u, v) in g.edges() {
            let e = VertexSet::singleton(u).with(v);
            if !self.bags.iter().any(|&b| e.is_subset(b)) {
                out.push(EdgeUncovered(u, v));
            }
        }
        if tree_ok {
            let adj = self.adjacency().unwrap();
            for v in all & union {
                let nodes: Vec<usize> = (0..k).filter(|&t| self.bags[t].contains(v)).collect();
                let inner = nodes
                    .iter()
                    .map(|&t| {
                        adj[t]
                            .iter()
                            .filter(|&&s| s > t && self.bags[s].contains(v))
                            .count()
                    })
                    .sum::<usize>();
                if inner + 1 != nodes.len() {
                    out.push(SubtreeDisconnected(v));
                }
            }
        }
        for (t, cover) in self.covers.iter().enumerate().take(k) {
            let mut u = VertexSet::EMPTY;
            for &c in cover {
                if !c.is_subset(all) || !g.is_clique(c) {
                    out.push(NotAClique { node: t, clique: c });
                }
                u |= c;
            }
            if u != self.bags[t] {
                out.push(CoverMismatch { node: t });
            }
            if strict {
                for (a, b) in g.edges() {
                    let e = VertexSet::singleton(a).with(b);
                    if e.is_subset(self.bags[t]) && !cover.iter().any(|&c| e.is_subset(c)) {
                        out.push(IntraBagEdgeUncovered {
                            node: t,
                            u: a,
                            v: b,
                        });
                    }
                }
            }
        }
        Report { violations: out }
    }

    /// Anatomy of every node. Requires a valid tree.
    pub fn anatomy(&self) -> Option<Vec<NodeAnatomy>> {
        let (parent, order) = self.rooted()?;
        let mut cone = self.bags.clone();
        for &x in order.iter().rev() {
            if let Some(p) = parent[x] {
                let c = cone[x];
                cone[p] |= c;
            }
        }
        Some(
            (0..self.bags.len())
                .map(|x| {
                    let adhesion =
                        parent[x].map_or(VertexSet::EMPTY, |p| self.bags[x] & self.bags[p]);
                    NodeAnatomy {
                        parent: parent[x],
                        adhesion,
                        margin: self.bags[x] - adhesion,
                        cone: cone[x],
                        component: cone[x] - adhesion,
                    }
                })
                .collect(),
        )
    }

    /// Whether every node has a nonempty margin, a connected cone and
    /// component, and every adhesion vertex has a neighbour in the component.
    pub fn is_sane(&self, g: &Graph) -> bool {
        let Some(anat) = self.anatomy() else {
            return false;
        };
        anat.iter().all(|a| {
            !a.margin.is_empty()
                && g.is_connected_set(a.cone)
                && g.is_connected_set(a.component)
                && a.adhesion
                    .iter()
                    .all(|v| g.neighbors(v).intersects(a.component))
        })
    }

    /// Sane decomposition whose bags are subsets of input bags, with minimum
    /// covers. `G` must be connected and `self` valid for `G`.
    pub fn sanitize(&self, g: &Graph) -> Result<Decomposition> {
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        self.checked_width(g)?;
        let mut t = Tree::from_decomposition(self);
        loop {
            if t.contract_one() || t.shrink_adhesion_one(g) || t.split_one(g) {
                continue;
            }
            break;
        }
        Ok(t.into_decomposition(g))
    }
}

/// Mutable rooted tree used by [`Decomposition::sanitize`].
struct Tree {
    bag: Vec<VertexSet>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    alive: Vec<bool>,
    root: usize,
}

impl Tree {
    fn from_decomposition(d: &Decomposition) -> Tree {
        let (parent, order) = d.rooted().expect("validated");
        let k = d.bags.len();
        let mut children = vec![Vec::new(); k];
        for &x in &order {
            if let Some(p) = parent[x] {
                children[p].push(x);
            }
        }
        Tree {
            bag: d.bags.clone(),
            parent,
            children,
            alive: vec![true; k],
            root: 0,
        }
    }

    fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(self.root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                out.push(x);
            } else {
                stack.push((x, true));
                for &c in self.children[x].iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    fn preorder(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![self.root];
        while let Some(x) = stack.pop() {
            out.push(x);
            for &c in self.children[x].iter().rev() {
                stack.push(c);
            }
        }
        out
    }

    fn cones(&self) -> Vec<VertexSet> {
        let mut cone = self.bag.clone();
        for x in self.postorder() {
            if let Some(p) = self.parent[x] {
                let c = cone[x];
                cone[p] |= c;
            }
        }
        cone
    }

    /// Removes non-root `x`, splicing its children into its parent's list.
    fn remove(&mut self, x: usize) {
        let p = self.parent[x].expect("root is never removed");
        let kids = std::mem::take(&mut self.children[x]);
        for &c in &kids {
            self.parent[c] = Some(p);
        }
        let pos = self.children[p].iter().position(|&c| c == x).unwrap();
        self.children[p].splice(pos..=pos, kids);
        self.alive[x] = false;
    }

    fn contract_one(&mut self) -> bool {
        for x in self.preorder() {
            let Some(p) = self.parent[x] else { continue };
            if self.bag[x].is_subset(self.bag[p]) {
                self.remove(x);
                return true;
            }
            if self.bag[p].is_subset(self.bag[x]) {
                self.bag[p] = self.bag[x];
                self.remove(x);
                return true;
            }
        }
        false
    }

    fn subtree(&self, x: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            out.push(y);
            stack.extend(self.children[y].iter().copied());
        }
        out
    }

    fn shrink_adhesion_one(&mut self, g: &Graph) -> bool {
        let cone = self.cones();
        for x in self.preorder() {
            let Some(p) = self.parent[x] else { continue };
            let adhesion = self.bag[x] & self.bag[p];
            let component = cone[x] - adhesion;
            let idle: VertexSet = adhesion
                .iter()
                .filter(|&v| !g.neighbors(v).intersects(component))
                .collect();
            if !idle.is_empty() {
                for y in self.subtree(x) {
                    self.bag[y] -= idle;
                }
                return true;
            }
        }
        false
    }

    fn split_one(&mut self, g: &Graph) -> bool {
        let cone = self.cones();
        for x in self.postorder() {
            let Some(p) = self.parent[x] else { continue };
            let adhesion = self.bag[x] & self.bag[p];
            let parts = g.components_within(cone[x] - adhesion);
            if parts.len() < 2 {
                continue;
            }
            let old_children = std::mem::take(&mut self.children[x]);
            let bag = self.bag[x];
            let mut ids = Vec::with_capacity(parts.len());
            for (i, &d) in parts.iter().enumerate() {
                let id = if i == 0 {
                    x
                } else {
                    self.bag.push(VertexSet::EMPTY);
                    self.parent.push(Some(p));
                    self.children.push(Vec::new());
                    self.alive.push(true);
                    self.bag.len() - 1
                };
                self.bag[id] = (bag & d) | adhesion;
                ids.push(id);
            }
            for c in old_children {
                let below = cone[c] - bag;
                let i = parts
                    .iter()
                    .position(|d| below.is_subset(*d))
                    .expect("child component straddles two parts");
                self.children[ids[i]].push(c);
                self.parent[c] = Some(ids[i]);
            }
            let pos = self.children[p].iter().position(|&c| c == x).unwrap();
            self.children[p].splice(pos + 1..pos + 1, ids[1..].iter().copied());
            return true;
        }
        false
    }

    fn into_decomposition(self, g: &Graph) -> Decomposition {
        let order = self.preorder();
        let mut index = vec![usize::MAX; self.bag.len()];
        for (i, &x) in order.iter().enumerate() {
            index[x] = i;
        }
        let bags: Vec<VertexSet> = order.iter().map(|&x| self.bag[x]).collect();
        let edges = order
            .iter()
            .filter_map(|&x| self.parent[x].map(|p| (index[p], index[x])))
            .collect();
        debug_assert!(order.iter().all(|&x| self.alive[x]));
        Decomposition::with_min_covers(g, bags, edges)
    }
}
