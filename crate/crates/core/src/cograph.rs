//! Cographs given by cotrees.
//!
//! Internal nodes are labelled 0 (disjoint union) or 1 (join). Text form is
//! an s-expression: `(1 (0 a b) (0 c d))` is the 4-cycle a-c-b-d. A bare name
//! is a one-vertex cotree.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CotreeNode {
    Leaf(usize),
    Union(Vec<usize>),
    Join(Vec<usize>),
}

impl CotreeNode {
    fn children(&self) -> &[usize] {
        match self {
            CotreeNode::Leaf(_) => &[],
            CotreeNode::Union(c) | CotreeNode::Join(c) => c,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cotree {
    pub nodes: Vec<CotreeNode>,
    pub root: usize,
    /// Leaf name of each vertex; vertex ids follow first appearance.
    pub names: Vec<String>,
}

/// Per-node values from one bottom-up pass, with the number of node visits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    pub values: Vec<usize>,
    pub visits: usize,
}

impl Fold {
    pub fn root(&self, t: &Cotree) -> usize {
        self.values[t.root]
    }
}

fn err(msg: impl Into<String>) -> Error {
    Error::Cotree(msg.into())
}

fn tokenize(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in text.char_indices() {
        let delim = ch == '(' || ch == ')' || ch.is_whitespace();
        if delim {
            if let Some(s) = start.take() {
                out.push(&text[s..i]);
            }
            if !ch.is_whitespace() {
                out.push(&text[i..i + 1]);
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(&text[s..]);
    }
    out
}

struct Parser<'a> {
    tokens: Vec<&'a str>,
    pos: usize,
    tree: Cotree,
    ids: HashMap<String, usize>,
}

impl<'a> Parser<'a> {
    fn node(&mut self) -> Result<usize> {
        let tok = *self
            .tokens
            .get(self.pos)
            .ok_or_else(|| err("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            ")" => Err(err("unexpected ')'")),
            "(" => {
                let label = *self
                    .tokens
                    .get(self.pos)
                    .ok_or_else(|| err("unexpected end of input"))?;
                self.pos += 1;
                let join = match label {
                    "0" => false,
                    "1" => true,
                    other => return Err(err(format!("label must be 0 or 1, found '{other}'"))),
                };
                let mut kids = Vec::new();
                loop {
                    match self.tokens.get(self.pos) {
                        None => return Err(err("missing ')'")),
                        Some(&")") => {
                            self.pos += 1;
                            break;
                        }
                        Some(_) => kids.push(self.node()?),
                    }
                }
                if kids.len() < 2 {
                    return Err(err(format!(
                        "internal node with {} child(ren); at least 2 required",
                        kids.len()
                    )));
                }
                self.tree.nodes.push(if join {
                    CotreeNode::Join(kids)
                } else {
                    CotreeNode::Union(kids)
                });
                Ok(self.tree.nodes.len() - 1)
            }
            name => {
                if self.ids.contains_key(name) {
                    return Err(err(format!("duplicate leaf '{name}'")));
                }
                let v = self.tree.names.len();
                if v >= MAX_VERTICES {
                    return Err(Error::CapacityExceeded {
                        n: v + 1,
                        cap: MAX_VERTICES,
                    });
                }
                self.ids.insert(name.to_string(), v);
                self.tree.names.push(name.to_string());
                self.tree.nodes.push(CotreeNode::Leaf(v));
                Ok(self.tree.nodes.len() - 1)
            }
        }
    }
}

impl Cotree {
    /// Parses an s-expression as written, without binarizing.
    pub fn parse(text: &str) -> Result<Cotree> {
        let mut p = Parser {
            tokens: tokenize(text),
            pos: 0,
            tree: Cotree {
                nodes: Vec::new(),
                root: 0,
                names: Vec::new(),
            },
            ids: HashMap::new(),
        };
        if p.tokens.is_empty() {
            return Err(err("empty cotree"));
        }
        let root = p.node()?;
        if p.pos != p.tokens.len() {
            return Err(err(format!(
                "trailing input after cotree: '{}'",
                p.tokens[p.pos]
            )));
        }
        p.tree.root = root;
        Ok(p.tree)
    }

    pub fn n(&self) -> usize {
        self.names.len()
    }

    pub fn is_binary(&self) -> bool {
        self.nodes
            .iter()
            .all(|x| matches!(x, CotreeNode::Leaf(_)) || x.children().len() == 2)
    }

    /// Replaces every k-ary node by a left-deep chain of binary nodes with
    /// the same label. The original node keeps its index as the chain top.
    pub fn binarize(&self) -> Cotree {
        let mut t = self.clone();
        for i in 0..self.nodes.len() {
            let (kids, join) = match &self.nodes[i] {
                CotreeNode::Leaf(_) => continue,
                CotreeNode::Union(k) => (k.clone(), false),
                CotreeNode::Join(k) => (k.clone(), true),
            };
            let make = |a: usize, b: usize| {
                if join {
                    CotreeNode::Join(vec![a, b])
                } else {
                    CotreeNode::Union(vec![a, b])
                }
            };
            let mut acc = kids[0];
            for &k in &kids[1..kids.len() - 1] {
                t.nodes.push(make(acc, k));
                acc = t.nodes.len() - 1;
            }
            t.nodes[i] = make(acc, kids[kids.len() - 1]);
        }
        t
    }

    fn postorder(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len());
        let mut stack = vec![(self.root, false)];
        while let Some((x, done)) = stack.pop() {
            if done {
                out.push(x);
            } else {
                stack.push((x, true));
                for &c in self.nodes[x].children().iter().rev() {
                    stack.push((c, false));
                }
            }
        }
        out
    }

    /// Number of nodes reachable from the root.
    pub fn size(&self) -> usize {
        self.postorder().len()
    }

    /// Vertex set below every node.
    pub fn leaf_sets(&self) -> Vec<VertexSet> {
        let mut sets = vec![VertexSet::EMPTY; self.nodes.len()];
        for x in self.postorder() {
            sets[x] = match &self.nodes[x] {
                CotreeNode::Leaf(v) => VertexSet::singleton(*v),
                other => other
                    .children()
                    .iter()
                    .fold(VertexSet::EMPTY, |a, &c| a | sets[c]),
            };
        }
        sets
    }

    /// The cograph, with leaf names as labels.
    pub fn to_graph(&self) -> Graph {
        let sets = self.leaf_sets();
        let mut adj = vec![VertexSet::EMPTY; self.n()];
        for x in self.postorder() {
            if let CotreeNode::Join(kids) = &self.nodes[x] {
                for (i, &a) in kids.iter().enumerate() {
                    for &b in &kids[i + 1..] {
                        for u in sets[a] {
                            adj[u] |= sets[b];
                        }
                        for u in sets[b] {
                            adj[u] |= sets[a];
                        }
                    }
                }
            }
        }
        Graph::from_adjacency(&adj).with_labels(self.names.clone())
    }

    /// Bottom-up pass over a binary cotree. `step(join, values, l, r)`
    /// computes an internal node from its children; leaves get 1.
    fn binary_fold<F>(&self, mut step: F) -> Result<Fold>
    where
        F: FnMut(bool, &[usize], usize, usize) -> usize,
    {
        let mut values = vec![0usize; self.nodes.len()];
        let mut visits = 0;
        for x in self.postorder() {
            visits += 1;
            values[x] = match &self.nodes[x] {
                CotreeNode::Leaf(_) => 1,
                CotreeNode::Union(k) | CotreeNode::Join(k) if k.len() != 2 => {
                    return Err(err(format!(
                        "node {x} has {} children; binarize first",
                        k.len()
                    )));
                }
                CotreeNode::Union(k) => step(false, &values, k[0], k[1]),
                CotreeNode::Join(k) => step(true, &values, k[0], k[1]),
            };
        }
        Ok(Fold { values, visits })
    }
}

/// Cover number of every node: 1 at leaves, sum under union, max under join.
pub fn compute_ecc(t: &Cotree) -> Result<Fold> {
    t.binary_fold(|join, v, l, r| if join { v[l].max(v[r]) } else { v[l] + v[r] })
}

/// Tree-clique width of every node: 1 at leaves, max under union, and
/// `min(max(ecc_l, tcl_r), max(tcl_l, ecc_r))` under join.
pub fn compute_tcl(t: &Cotree) -> Result<Fold> {
    let e = compute_ecc(t)?.values;
    t.binary_fold(|join, v, l, r| {
        if join {
            e[l].max(v[r]).min(v[l].max(e[r]))
        } else {
            v[l].max(v[r])
        }
    })
}

/// Whether `G` has no induced path on four vertices. Brute force.
pub fn is_p4_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in g.neighbors(a) {
            for c in g.neighbors(b) - g.closed_neighbors(a) {
                if !(g.neighbors(c) - g.closed_neighbors(a) - g.closed_neighbors(b)).is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

impl fmt::Display for Cotree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &Cotree, x: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            match &t.nodes[x] {
                CotreeNode::Leaf(v) => write!(f, "{}", t.names[*v]),
                CotreeNode::Union(k) | CotreeNode::Join(k) => {
                    let label = if matches!(t.nodes[x], CotreeNode::Join(_)) {
                        1
                    } else {
                        0
                    };
                    write!(f, "({label}")?;
                    for &c in k {
                        write!(f, " ")?;
                        go(t, c, f)?;
                    }
                    write!(f, ")")
                }
            }
        }
        go(self, self.root, f)
    }
}
