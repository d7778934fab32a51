//! Inclusion–exclusion counting over independent sets, and the chromatic
//! number with a constructive colouring built on top of it.
//!
//! All counts here are about colourings of the graph passed in. To count
//! clique covers of `G`, pass `complement(G)`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::cover::MAX_TABLE_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Size-graded tables need `(n + 1) * 2^n` words, so they stop earlier.
pub const MAX_PARTITION_VERTICES: usize = 20;

fn check(g: &Graph, cap: usize) -> Result<()> {
    if g.n() > cap {
        Err(Error::CapacityExceeded { n: g.n(), cap })
    } else {
        Ok(())
    }
}

/// Counters produced by one inclusion–exclusion sweep.
#[derive(Clone, Debug)]
pub struct IeCounters {
    /// `alpha[S]`: maximal independent sets disjoint from `S`.
    pub alpha: Vec<u64>,
    /// `c[k]`: sets of `k` distinct maximal independent sets covering `V`.
    pub c: Vec<BigUint>,
    /// `p[k]`: partitions of `V` into `k` nonempty independent sets.
    pub p: Vec<BigUint>,
}

/// `alpha[S]` for every `S`, via a subset-sum transform of the MIS indicator.
pub fn alpha_table(g: &Graph) -> Result<Vec<u64>> {
    check(g, MAX_TABLE_VERTICES)?;
    let n = g.n();
    let size = 1usize << n;
    let mut within = vec![0u64; size];
    for m in g.enumerate_maximal_independent_sets() {
        within[m.index()] += 1;
    }
    zeta(&mut within, n);
    let full = size - 1;
    Ok((0..size).map(|s| within[full ^ s]).collect())
}

/// In place: `f[T] <- sum of f[U] over U ⊆ T`.
fn zeta(f: &mut [u64], n: usize) {
    for v in 0..n {
        let bit = 1usize << v;
        for t in 0..f.len() {
            if t & bit != 0 {
                f[t] += f[t ^ bit];
            }
        }
    }
}

/// Signed histogram `h[a] = sum of (-1)^|S| over S with value[S] = a`.
fn signed_histogram(values: &[u64]) -> Vec<(u64, i64)> {
    let mut h = std::collections::BTreeMap::<u64, i64>::new();
    for (s, &a) in values.iter().enumerate() {
        let sign = if s.count_ones() % 2 == 0 { 1 } else { -1 };
        *h.entry(a).or_default() += sign;
    }
    h.into_iter().filter(|&(_, c)| c != 0).collect()
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

fn into_count(x: BigInt) -> BigUint {
    debug_assert!(
        !x.is_negative(),
        "inclusion-exclusion produced a negative count"
    );
    x.to_biguint().unwrap_or_default()
}

/// Number of `k`-sets of maximal independent sets whose union is `V`:
/// `sum over S of (-1)^|S| * C(alpha(S), k)`.
pub fn ie_count_covers(g: &Graph, k: usize) -> Result<BigUint> {
    let alpha = alpha_table(g)?;
    Ok(covers_from_histogram(&signed_histogram(&alpha), k))
}

fn covers_from_histogram(h: &[(u64, i64)], k: usize) -> BigUint {
    let mut acc = BigInt::zero();
    for &(a, c) in h {
        acc += BigInt::from(c) * BigInt::from(binomial(a, k as u64));
    }
    into_count(acc)
}

/// `ind[j][T]`: independent sets of size `j` inside `T`, flattened as
/// `ind[T * (n + 1) + j]`.
fn graded_independent_sets(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let w = n + 1;
    let size = 1usize << n;
    let mut t = vec![0u32; size * w];
    t[0] = 1;
    for bits in 1..size as u64 {
        let s = VertexSet::from_bits(bits);
        let v = 63 - bits.leading_zeros() as usize;
        let without = s.without(v).index();
        let avoid = (s - g.closed_neighbors(v)).index();
        for j in 0..w {
            let mut x = t[without * w + j];
            if j > 0 {
                x += t[avoid * w + j - 1];
            }
            t[bits as usize * w + j] = x;
        }
    }
    t
}

/// `[z^n] P(z)^k` where `P` has no constant term.
fn top_coefficient_power(p: &[u32], n: usize, k: usize) -> BigUint {
    if let Some(x) = top_power_u128(p, n, k) {
        return BigUint::from(x);
    }
    let p: Vec<BigUint> = p.iter().map(|&c| BigUint::from(c)).collect();
    let mut acc = vec![BigUint::zero(); n + 1];
    acc[0] = BigUint::one();
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); n + 1];
        for (i, a) in acc.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 1..=n - i {
                if p[j] != 0u32.into() {
                    next[i + j] += a * &p[j];
                }
            }
        }
        acc = next;
    }
    std::mem::take(&mut acc[n])
}

fn top_power_u128(p: &[u32], n: usize, k: usize) -> Option<u128> {
    let mut acc = vec![0u128; n + 1];
    acc[0] = 1;
    for _ in 0..k {
        let mut next = vec![0u128; n + 1];
        for i in 0..=n {
            if acc[i] == 0 {
                continue;
            }
            for j in 1..=n - i {
                let term = acc[i].checked_mul(p[j] as u128)?;
                next[i + j] = next[i + j].checked_add(term)?;
            }
        }
        acc = next;
    }
    Some(acc[n])
}

/// Ordered partitions of `V` into `k` nonempty independent sets:
/// `sum over X of (-1)^|X| [z^n] P_X(z)^k`, where `P_X` is the size-graded
/// count of nonempty independent sets avoiding `X`.
pub fn ie_count_ordered_partitions(g: &Graph, k: usize) -> Result<BigUint> {
    check(g, MAX_PARTITION_VERTICES)?;
    let n = g.n();
    if k == 0 {
        return Ok(if n == 0 {
            BigUint::one()
        } else {
            BigUint::zero()
        });
    }
    let w = n + 1;
    let table = graded_independent_sets(g);
    let full = (1usize << n) - 1;
    let mut acc = BigInt::zero();
    for x in 0..=full {
        let t = full ^ x;
        let mut poly = table[t * w..(t + 1) * w].to_vec();
        poly[0] = 0;
        let c = top_coefficient_power(&poly, n, k);
        if c.is_zero() {
            continue;
        }
        if x.count_ones() % 2 == 0 {
            acc += BigInt::from(c);
        } else {
            acc -= BigInt::from(c);
        }
    }
    Ok(into_count(acc))
}

/// Unordered partitions of `V` into `k` nonempty independent sets.
pub fn ie_count_partitions(g: &Graph, k: usize) -> Result<BigUint> {
    let ordered = ie_count_ordered_partitions(g, k)?;
    let fact: BigUint = (1..=k as u64).map(BigUint::from).product();
    Ok(ordered / fact)
}

/// `sum over X of (-1)^|X| a(X)^k` grouped by `a`, where `a(X)` counts
/// nonempty independent sets avoiding `X`. Positive exactly when `k ≥ χ(G)`.
struct TupleCounter {
    hist: Vec<(u64, i64)>,
}

impl TupleCounter {
    fn new(g: &Graph) -> Result<Self> {
        check(g, MAX_TABLE_VERTICES)?;
        let n = g.n();
        let size = 1usize << n;
        let mut within = vec![0u64; size];
        for bits in 1..size as u64 {
            if g.is_independent(VertexSet::from_bits(bits)) {
                within[bits as usize] = 1;
            }
        }
        zeta(&mut within, n);
        let full = size - 1;
        let a: Vec<u64> = (0..size).map(|x| within[full ^ x]).collect();
        Ok(TupleCounter {
            hist: signed_histogram(&a),
        })
    }

    fn count(&self, k: usize) -> BigInt {
        let mut acc = BigInt::zero();
        for &(a, c) in &self.hist {
            acc += BigInt::from(c) * BigInt::from(a).pow(k as u32);
        }
        acc
    }

    fn colourable(&self, k: usize) -> bool {
        self.count(k).is_positive()
    }
}

/// χ(G) as the least `k` with a positive inclusion–exclusion tuple count.
pub fn ie_chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let counter = TupleCounter::new(g)?;
    Ok((1..=g.n())
        .find(|&k| counter.colourable(k))
        .expect("n colours always suffice"))
}

fn is_k_colourable(g: &Graph, k: usize) -> Result<bool> {
    Ok(TupleCounter::new(g)?.colourable(k))
}

/// χ(G) and a proper colouring with exactly χ colours.
///
/// Starting from `G`, repeatedly take the lexicographically first pair of
/// non-adjacent super-vertices. If adding the edge keeps the graph
/// χ-colourable, keep the edge; otherwise merge the pair. When the
/// super-vertex graph is complete, each super-vertex is a colour class.
pub fn ie_chromatic_with_construction(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let k = ie_chromatic_number(g)?;
    let n = g.n();
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut members: Vec<VertexSet> = (0..n).map(VertexSet::singleton).collect();
    let mut alive = g.vertices();
    loop {
        let pair = alive
            .iter()
            .find_map(|a| (alive - adj[a]).iter().find(|&b| b > a).map(|b| (a, b)));
        let Some((a, b)) = pair else { break };
        let mut trial = adj.clone();
        trial[a].insert(b);
        trial[b].insert(a);
        let quotient = Graph::from_adjacency(&trial).induced_subgraph(alive).0;
        if is_k_colourable(&quotient, k)? {
            adj = trial;
        } else {
            let nb = adj[b];
            adj[a] |= nb;
            for w in adj[b] {
                adj[w].remove(b);
                adj[w].insert(a);
            }
            adj[b] = VertexSet::EMPTY;
            let mb = members[b];
            members[a] |= mb;
            alive.remove(b);
        }
    }
    debug_assert_eq!(alive.len(), k);
    let mut colour = vec![0usize; n];
    for (c, r) in alive.iter().enumerate() {
        for v in members[r] {
            colour[v] = c;
        }
    }
    Ok((k, colour))
}

/// All counters up to `k_max`.
pub fn ie_counters(g: &Graph, k_max: usize) -> Result<IeCounters> {
    let alpha = alpha_table(g)?;
    let h = signed_histogram(&alpha);
    let c = (0..=k_max).map(|k| covers_from_histogram(&h, k)).collect();
    let p = (0..=k_max)
        .map(|k| ie_count_partitions(g, k))
        .collect::<Result<Vec<_>>>()?;
    Ok(IeCounters { alpha, c, p })
}

/// Least `k` with a positive count, using the MIS cover form.
pub fn chromatic_from_covers(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let alpha = alpha_table(g)?;
    let h = signed_histogram(&alpha);
    Ok((1..=g.n())
        .find(|&k| !covers_from_histogram(&h, k).is_zero())
        .expect("n maximal independent sets always suffice"))
}

/// Least `k` with a positive count, using the partition form.
pub fn chromatic_from_partitions(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=g.n() {
        if !ie_count_ordered_partitions(g, k)?.is_zero() {
            return Ok(k);
        }
    }
    unreachable!("singletons always partition V")
}

/// Fits in `u64`, for tests and reports.
pub fn small(x: &BigUint) -> Option<u64> {
    x.to_u64()
}
