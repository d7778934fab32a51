//! Brute-force ground truth for tiny graphs.
//!
//! Nothing here shares code with the solvers beyond [`Graph`] and
//! [`VertexSet`] plumbing: cover numbers come from exhaustive colouring,
//! separators from their definition, and triangulations from explicit fill.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_n: usize,
    pub max_steps: u64,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 10,
            max_steps: 200_000_000,
        }
    }
}

impl OracleBudget {
    pub fn with_max_n(max_n: usize) -> Self {
        OracleBudget {
            max_n,
            ..Default::default()
        }
    }

    fn admit(&self, g: &Graph) -> Result<()> {
        if g.n() > self.max_n {
            Err(Error::BudgetExceeded(format!(
                "{} vertices, oracle limit is {}",
                g.n(),
                self.max_n
            )))
        } else {
            Ok(())
        }
    }
}

struct Steps {
    left: u64,
}

impl Steps {
    fn tick(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded("step budget exhausted".into()));
        }
        self.left -= 1;
        Ok(())
    }
}

fn colourable(adj: &[Vec<bool>], k: usize, steps: &mut Steps) -> Result<bool> {
    fn go(
        adj: &[Vec<bool>],
        v: usize,
        colour: &mut Vec<usize>,
        used: usize,
        k: usize,
        steps: &mut Steps,
    ) -> Result<bool> {
        steps.tick()?;
        if v == adj.len() {
            return Ok(true);
        }
        // Colours beyond the first unused one are symmetric.
        for c in 0..(used + 1).min(k) {
            if (0..v).all(|u| !adj[v][u] || colour[u] != c) {
                colour[v] = c;
                if go(adj, v + 1, colour, used.max(c + 1), k, steps)? {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
    let mut colour = vec![usize::MAX; adj.len()];
    go(adj, 0, &mut colour, 0, k, steps)
}

fn chromatic(adj: &[Vec<bool>], steps: &mut Steps) -> Result<usize> {
    for k in 0..=adj.len() {
        if colourable(adj, k, steps)? {
            return Ok(k);
        }
    }
    unreachable!()
}

fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    (0..g.n())
        .map(|u| (0..g.n()).map(|v| g.has_edge(u, v)).collect())
        .collect()
}

/// χ(G) by exhaustive colour assignment.
pub fn brute_chromatic(g: &Graph, budget: OracleBudget) -> Result<usize> {
    budget.admit(g)?;
    chromatic(
        &matrix(g),
        &mut Steps {
            left: budget.max_steps,
        },
    )
}

/// Cover number of `G[S]` as χ of its complement, plain backtracking.
pub fn brute_vcc(g: &Graph, s: VertexSet, budget: OracleBudget) -> Result<usize> {
    budget.admit(g)?;
    let vs: Vec<usize> = s.iter().collect();
    let adj: Vec<Vec<bool>> = vs
        .iter()
        .map(|&u| vs.iter().map(|&v| u != v && !g.has_edge(u, v)).collect())
        .collect();
    chromatic(
        &adj,
        &mut Steps {
            left: budget.max_steps,
        },
    )
}

/// Brute cover number of every subset.
fn all_vcc(g: &Graph, budget: OracleBudget) -> Result<Vec<usize>> {
    let mut steps = Steps {
        left: budget.max_steps,
    };
    let n = g.n();
    let mut out = vec![0usize; 1 << n];
    for (bits, slot) in out.iter_mut().enumerate() {
        let vs: Vec<usize> = VertexSet::from_bits(bits as u64).iter().collect();
        let adj: Vec<Vec<bool>> = vs
            .iter()
            .map(|&u| vs.iter().map(|&v| u != v && !g.has_edge(u, v)).collect())
            .collect();
        *slot = chromatic(&adj, &mut steps)?;
    }
    Ok(out)
}

/// Components of the graph `adj` restricted to `within`, by flood fill.
fn flood(adj: &[u64], within: u64) -> Vec<u64> {
    let mut rest = within;
    let mut out = Vec::new();
    while rest != 0 {
        let mut comp = rest & rest.wrapping_neg();
        loop {
            let mut grow = comp;
            let mut x = comp;
            while x != 0 {
                let v = x.trailing_zeros() as usize;
                x &= x - 1;
                grow |= adj[v] & within;
            }
            if grow == comp {
                break;
            }
            comp = grow;
        }
        rest &= !comp;
        out.push(comp);
    }
    out
}

struct Decomposable<'a> {
    vcc: &'a [usize],
    k: usize,
    memo: HashMap<(u64, Vec<u64>), bool>,
    steps: Steps,
}

impl Decomposable<'_> {
    /// Whether the graph on `u` with adjacency `adj` is k-decomposable:
    /// `u` needs at most `k` cliques of `G`, or some `S` with at most `k`
    /// cliques splits it into at least two parts, each of which is
    /// k-decomposable after completing `S`.
    fn check(&mut self, u: u64, adj: &[u64]) -> Result<bool> {
        self.steps.tick()?;
        if self.vcc[u as usize] <= self.k {
            return Ok(true);
        }
        let key_adj: Vec<u64> = adj
            .iter()
            .enumerate()
            .map(|(v, &a)| if u >> v & 1 == 1 { a & u } else { 0 })
            .collect();
        let key = (u, key_adj);
        if let Some(&r) = self.memo.get(&key) {
            return Ok(r);
        }
        let mut result = false;
        let mut s = (u - 1) & u;
        while s != 0 {
            if self.vcc[s as usize] <= self.k {
                let comps = flood(adj, u & !s);
                if comps.len() >= 2 {
                    let mut filled = adj.to_vec();
                    let mut x = s;
                    while x != 0 {
                        let v = x.trailing_zeros() as usize;
                        x &= x - 1;
                        filled[v] |= s & !(1 << v);
                    }
                    let mut all = true;
                    for c in comps {
                        if !self.check(s | c, &filled)? {
                            all = false;
                            break;
                        }
                    }
                    if all {
                        result = true;
                        break;
                    }
                }
            }
            s = (s - 1) & u;
        }
        self.memo.insert(key, result);
        Ok(result)
    }
}

/// `tcl(G)` for connected `G` straight from the recursive separator
/// definition, with cover numbers always taken in `G`.
pub fn tcl_oracle(g: &Graph, budget: OracleBudget) -> Result<usize> {
    budget.admit(g)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let vcc = all_vcc(g, budget)?;
    let adj: Vec<u64> = (0..g.n()).map(|v| g.neighbors(v).bits()).collect();
    let full = g.vertices().bits();
    let mut steps = Steps {
        left: budget.max_steps,
    };
    for k in 1..=g.n() {
        let mut d = Decomposable {
            vcc: &vcc,
            k,
            memo: HashMap::new(),
            steps,
        };
        let ok = d.check(full, &adj)?;
        steps = d.steps;
        if ok {
            return Ok(k);
        }
    }
    unreachable!("k = n admits the single bag")
}

/// `tcl(G)` as the best elimination ordering: eliminating `v` after the set
/// `S` creates the bag `{v} ∪ Q(S, v)`, where `Q` holds the vertices outside
/// `S ∪ {v}` reachable from `v` through `S`.
pub fn tcl_by_elimination(g: &Graph, budget: OracleBudget) -> Result<usize> {
    budget.admit(g)?;
    let n = g.n();
    let vcc = all_vcc(g, budget)?;
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1u64..1 << n {
        let mut x = s;
        while x != 0 {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            let before = s & !(1 << v);
            // Reach from v through `before`.
            let mut seen = 1u64 << v;
            let mut frontier = 1u64 << v;
            let mut outside = 0u64;
            while frontier != 0 {
                let w = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let nb = adj[w] & !seen;
                seen |= nb;
                outside |= nb & !before;
                frontier |= nb & before;
            }
            let bag = (outside & !s) | (1 << v);
            let cost = best[before as usize].max(vcc[bag as usize]);
            if cost < best[s as usize] {
                best[s as usize] = cost;
            }
        }
    }
    Ok(best[(1usize << n) - 1])
}

/// Minimal separators from the definition: `S` separates some `a`, `b` and
/// no `S - x` does.
pub fn brute_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let full = g.vertices().bits();
    let separates = |s: u64, a: usize, b: usize| {
        let comps = flood(&adj, full & !s);
        !comps.iter().any(|&c| c >> a & 1 == 1 && c >> b & 1 == 1)
    };
    let mut out = Vec::new();
    for s in 0..=full {
        let rest = full & !s;
        let found = (0..n).any(|a| {
            rest >> a & 1 == 1
                && (a + 1..n).any(|b| {
                    rest >> b & 1 == 1
                        && separates(s, a, b)
                        && VertexSet::from_bits(s)
                            .iter()
                            .all(|x| !separates(s & !(1 << x), a, b))
                })
        });
        if found {
            out.push(VertexSet::from_bits(s));
        }
    }
    out
}

/// `S` crosses `T` when two components of `G - S` meet `T`.
fn crosses(adj: &[u64], full: u64, s: u64, t: u64) -> bool {
    flood(adj, full & !s)
        .iter()
        .filter(|&&c| c & t != 0)
        .count()
        >= 2
}

/// Maximal cliques of an explicit compatibility relation, plain recursion.
fn maximal_families(ok: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn go(ok: &[Vec<bool>], chosen: &mut Vec<usize>, next: usize, out: &mut Vec<Vec<usize>>) {
        if next == ok.len() {
            let maximal =
                (0..ok.len()).all(|i| chosen.contains(&i) || chosen.iter().any(|&j| !ok[i][j]));
            if maximal {
                out.push(chosen.clone());
            }
            return;
        }
        if chosen.iter().all(|&j| ok[next][j]) {
            chosen.push(next);
            go(ok, chosen, next + 1, out);
            chosen.pop();
        }
        go(ok, chosen, next + 1, out);
    }
    let mut out = Vec::new();
    go(ok, &mut Vec::new(), 0, &mut out);
    out
}

/// Potential maximal cliques: maximal cliques of the minimal triangulations,
/// each obtained by completing a maximal family of pairwise non-crossing
/// minimal separators.
pub fn brute_pmcs(g: &Graph, budget: OracleBudget) -> Result<Vec<VertexSet>> {
    budget.admit(g)?;
    if g.n() > 8 {
        return Err(Error::BudgetExceeded(
            "brute PMC enumeration is limited to 8 vertices".into(),
        ));
    }
    let n = g.n();
    let adj: Vec<u64> = (0..n).map(|v| g.neighbors(v).bits()).collect();
    let full = g.vertices().bits();
    let seps: Vec<u64> = brute_minimal_separators(g)
        .iter()
        .map(|s| s.bits())
        .collect();
    let ok: Vec<Vec<bool>> = seps
        .iter()
        .map(|&s| seps.iter().map(|&t| !crosses(&adj, full, s, t)).collect())
        .collect();
    let mut out = BTreeSet::new();
    for family in maximal_families(&ok) {
        let mut h = adj.clone();
        for &i in &family {
            let s = seps[i];
            for v in VertexSet::from_bits(s) {
                h[v] |= s & !(1 << v);
            }
        }
        let is_clique = |c: u64| {
            VertexSet::from_bits(c)
                .iter()
                .all(|v| c & !(1 << v) & !h[v] == 0)
        };
        for c in 1..=full {
            if is_clique(c) && (0..n).all(|v| c >> v & 1 == 1 || !is_clique(c | 1 << v)) {
                out.insert(VertexSet::from_bits(c));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Chordality by repeatedly deleting a simplicial vertex.
pub fn is_chordal(g: &Graph) -> bool {
    let mut left = g.vertices();
    'outer: while !left.is_empty() {
        for v in left {
            let nb = g.neighbors(v) & left;
            if nb.iter().all(|u| nb.without(u).is_subset(g.neighbors(u))) {
                left.remove(v);
                continue 'outer;
            }
        }
        return false;
    }
    true
}
