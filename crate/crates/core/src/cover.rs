//! Vertex clique cover numbers: the single-set routine [`vcc`] and the dense
//! subset tables [`lawler_table`] and [`fast_table`].
//!
//! A clique cover of `G[S]` is a colouring of the complement restricted to
//! `S`, so every table here is a chromatic-number table of `complement(G)`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest graph a dense subset table is built for.
pub const MAX_TABLE_VERTICES: usize = 24;

/// Marks a set whose cover number is not yet known during [`fast_table`].
const UNKNOWN: u8 = u8::MAX;

/// `vcc(G[S])` for every `S ⊆ V`, indexed by `S.index()`.
#[derive(Clone, Debug)]
pub struct CoverTable {
    n: usize,
    values: Vec<u8>,
    /// Clique removed at the optimum (bit pattern), when recorded.
    choice: Option<Vec<u32>>,
    pmc_marks: Option<Vec<bool>>,
}

impl CoverTable {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn value(&self, s: VertexSet) -> usize {
        self.values[s.index()] as usize
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn has_choices(&self) -> bool {
        self.choice.is_some()
    }

    /// Whether `S` was marked as a potential maximal clique. `None` when the
    /// table was built without marking.
    pub fn is_pmc(&self, s: VertexSet) -> Option<bool> {
        self.pmc_marks.as_ref().map(|m| m[s.index()])
    }

    /// Sets marked as potential maximal cliques, in increasing bit order.
    pub fn marked_pmcs(&self) -> Option<Vec<VertexSet>> {
        self.pmc_marks.as_ref().map(|m| {
            m.iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| VertexSet::from_bits(i as u64))
                .collect()
        })
    }

    /// A minimum partition of `S` into disjoint cliques of `G`.
    pub fn partition(&self, g: &Graph, s: VertexSet) -> Vec<VertexSet> {
        let mut out = Vec::with_capacity(self.value(s));
        let mut rest = s;
        while !rest.is_empty() {
            let target = self.value(rest) - 1;
            let part = match &self.choice {
                Some(c) => VertexSet::from_bits(c[rest.index()] as u64),
                None => g
                    .maximal_cliques_within(rest)
                    .into_iter()
                    .find(|&i| self.value(rest - i) == target)
                    .expect("cover table is inconsistent"),
            };
            out.push(part);
            rest -= part;
        }
        out
    }
}

fn check_capacity(g: &Graph) -> Result<()> {
    if g.n() > MAX_TABLE_VERTICES {
        Err(Error::CapacityExceeded {
            n: g.n(),
            cap: MAX_TABLE_VERTICES,
        })
    } else {
        Ok(())
    }
}

fn pmc_marks(g: &Graph) -> Vec<bool> {
    (0..1u64 << g.n())
        .map(|b| g.is_pmc(VertexSet::from_bits(b)))
        .collect()
}

/// Lawler's subset recurrence:
/// `X[S] = 1 + min { X[S \ I] : I a maximal clique of G[S] }`, `X[∅] = 0`.
pub fn lawler_table(g: &Graph, mark_pmcs: bool) -> Result<CoverTable> {
    check_capacity(g)?;
    let size = 1usize << g.n();
    let mut values = vec![0u8; size];
    let mut choice = vec![0u32; size];
    for bits in 1..size as u64 {
        let s = VertexSet::from_bits(bits);
        let mut best = u8::MAX;
        let mut arg = 0u32;
        g.for_each_maximal_clique(s, |i| {
            let v = values[(s - i).index()];
            if v < best || (v == best && (i.bits() as u32) < arg) {
                best = v;
                arg = i.bits() as u32;
            }
        });
        values[bits as usize] = best + 1;
        choice[bits as usize] = arg;
    }
    Ok(CoverTable {
        n: g.n(),
        values,
        choice: Some(choice),
        pmc_marks: mark_pmcs.then(|| pmc_marks(g)),
    })
}

/// Same values as [`lawler_table`], computed in stages: exact values up to 3
/// by incremental clique / bipartite / 3-colour tests, 4 by extending
/// 3-coverable sets with maximal cliques of `G`, and larger values by
/// extending with small maximal cliques of the remainder. A final
/// superset-minimum pass propagates the values of maximal coverable sets down
/// to their subsets.
pub fn fast_table(g: &Graph) -> Result<CoverTable> {
    check_capacity(g)?;
    let n = g.n();
    let size = 1usize << n;
    let all = g.vertices();
    let comp = g.complement();
    let mut x = vec![UNKNOWN; size];
    x[0] = 0;

    for bits in 1..size as u64 {
        let s = VertexSet::from_bits(bits);
        let v = s.first().unwrap();
        let prev = x[s.without(v).index()];
        x[bits as usize] = match prev {
            0 => 1,
            1 if g.is_clique(s) => 1,
            1 => 2,
            2 if is_bipartite(&comp, s) => 2,
            2 => 3,
            3 if is_three_colourable(&comp, s) => 3,
            _ => UNKNOWN,
        };
    }

    for i in g.maximal_cliques_within(all) {
        for s in (all - i).subsets() {
            if x[s.index()] == 3 {
                let t = (s | i).index();
                x[t] = x[t].min(4);
            }
        }
    }

    for bits in 1..size as u64 {
        let s = VertexSet::from_bits(bits);
        let xs = x[bits as usize];
        if !(4..UNKNOWN).contains(&xs) {
            continue;
        }
        let budget = s.len();
        g.for_each_maximal_clique(all - s, |i| {
            if i.len() * xs as usize <= budget {
                let t = (s | i).index();
                x[t] = x[t].min(xs + 1);
            }
        });
    }

    for v in 0..n {
        let bit = 1usize << v;
        for idx in 0..size {
            if idx & bit == 0 {
                let up = x[idx | bit];
                if up < x[idx] {
                    x[idx] = up;
                }
            }
        }
    }
    debug_assert!(x.iter().all(|&v| v != UNKNOWN));

    Ok(CoverTable {
        n,
        values: x,
        choice: None,
        pmc_marks: None,
    })
}

fn is_bipartite(h: &Graph, s: VertexSet) -> bool {
    let mut side = [0u8; 64];
    let mut rest = s;
    while let Some(r) = rest.first() {
        let mut stack = vec![r];
        side[r] = 1;
        rest.remove(r);
        while let Some(u) = stack.pop() {
            for w in h.neighbors(u) & s {
                if side[w] == 0 {
                    side[w] = 3 - side[u];
                    rest.remove(w);
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

fn is_three_colourable(h: &Graph, s: VertexSet) -> bool {
    colour_partition(h, s, 3).is_some()
}

/// Partition of `S` into at most `k` independent sets of `h`, by
/// most-constrained-first backtracking.
fn colour_partition(h: &Graph, s: VertexSet, k: usize) -> Option<Vec<VertexSet>> {
    fn go(h: &Graph, rest: VertexSet, classes: &mut Vec<VertexSet>, k: usize) -> bool {
        let Some((v, _)) = rest
            .iter()
            .map(|v| {
                let nv = h.neighbors(v);
                let opts = classes.iter().filter(|c| !c.intersects(nv)).count();
                (v, opts)
            })
            .min_by_key(|&(v, opts)| (opts, usize::MAX - (h.neighbors(v) & rest).len()))
        else {
            return true;
        };
        let nv = h.neighbors(v);
        for i in 0..classes.len() {
            if !classes[i].intersects(nv) {
                classes[i].insert(v);
                if go(h, rest.without(v), classes, k) {
                    return true;
                }
                classes[i].remove(v);
            }
        }
        if classes.len() < k {
            classes.push(VertexSet::singleton(v));
            if go(h, rest.without(v), classes, k) {
                return true;
            }
            classes.pop();
        }
        false
    }
    let mut classes = Vec::with_capacity(k);
    go(h, s, &mut classes, k).then_some(classes)
}

/// Minimum number of cliques of `G` covering `S`, with a witness partition of
/// `S` into that many disjoint cliques (sorted by bit pattern).
pub fn vcc(g: &Graph, s: VertexSet) -> (usize, Vec<VertexSet>) {
    if s.is_empty() {
        return (0, Vec::new());
    }
    if g.is_clique(s) {
        return (1, vec![s]);
    }
    let comp = g.complement();
    for k in 2..=s.len() {
        if let Some(mut parts) = colour_partition(&comp, s, k) {
            parts.sort_unstable();
            return (k, parts);
        }
    }
    unreachable!("singletons always cover S")
}

/// Just the number from [`vcc`].
pub fn vcc_number(g: &Graph, s: VertexSet) -> usize {
    vcc(g, s).0
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

    fn c5() -> Graph {
        Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap()
    }

    fn check_table(g: &Graph, t: &CoverTable) {
        for s in g.vertices().subsets() {
            let parts = t.partition(g, s);
            assert_eq!(parts.len(), t.value(s));
            let mut union = VertexSet::EMPTY;
            for p in parts {
                assert!(g.is_clique(p));
                assert!(!p.intersects(union));
                union |= p;
            }
            assert_eq!(union, s);
            for v in s {
                assert!(t.value(s.without(v)) <= t.value(s));
            }
        }
    }

    #[test]
    fn lawler_cases() {
        let t = lawler_table(&c4(), false).unwrap();
        assert_eq!(t.value(c4().vertices()), 2);
        check_table(&c4(), &t);
        let k4 = Graph::complete(4);
        let t = lawler_table(&k4, false).unwrap();
        assert_eq!(t.value(k4.vertices()), 1);
        check_table(&k4, &t);
        assert_eq!(
            lawler_table(&c5(), false).unwrap().value(c5().vertices()),
            3
        );
    }

    #[test]
    fn fast_matches_lawler_on_small_cases() {
        for g in [c4(), c5(), Graph::complete(4), Graph::empty(6)] {
            let a = lawler_table(&g, false).unwrap();
            let b = fast_table(&g).unwrap();
            assert_eq!(a.values(), b.values());
            check_table(&g, &b);
        }
        assert_eq!(
            fast_table(&Graph::empty(6))
                .unwrap()
                .value(VertexSet::full(6)),
            6
        );
    }

    #[test]
    fn pmc_marks_match_is_pmc() {
        let t = lawler_table(&c4(), true).unwrap();
        assert_eq!(
            t.marked_pmcs().unwrap(),
            vec![
                set(&[0, 1, 2]),
                set(&[0, 1, 3]),
                set(&[0, 2, 3]),
                set(&[1, 2, 3])
            ]
        );
    }

    #[test]
    fn capacity() {
        let g = Graph::empty(MAX_TABLE_VERTICES + 1);
        assert!(matches!(
            lawler_table(&g, false),
            Err(Error::CapacityExceeded { .. })
        ));
        assert!(matches!(
            fast_table(&g),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn vcc_cases() {
        let (k, parts) = vcc(&c4(), c4().vertices());
        assert_eq!(k, 2);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|&p| p.len() == 2 && c4().is_clique(p)));
        assert_eq!(vcc(&Graph::complete(4), VertexSet::full(4)).0, 1);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(vcc(&star, star.vertices()).0, 3);
        assert_eq!(vcc(&c5(), c5().vertices()).0, 3);
        assert_eq!(vcc(&c5(), VertexSet::EMPTY), (0, vec![]));
    }
}
