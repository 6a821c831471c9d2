//! Graph populations: labeled enumeration, isomorph reduction, seeded
//! random graphs, labeled trees and sparse families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order `enumerate_graphs` accepts.
pub const ENUMERATION_LIMIT: usize = 8;
/// Largest order for the isomorph filter.
pub const CANONICAL_LIMIT: usize = 7;

/// Position of the pair `{i, j}`, `i < j`, in graph6 bit order.
pub fn pair_index(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// The labeled graph on `n <= 11` vertices whose edges are the set bits of
/// `mask` in graph6 pair order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    debug_assert!(pair_count(n) <= 64);
    let mut g = Graph::empty(n).expect("order checked by caller");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                g.set_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    g
}

pub fn mask_of(g: &Graph) -> u64 {
    assert!(pair_count(g.n()) <= 64, "mask needs n <= 11");
    g.edges().iter().fold(0, |m, e| m | 1 << pair_index(e.u(), e.v()))
}

fn check_enumeration_order(n: usize) -> Result<()> {
    if (2..=ENUMERATION_LIMIT).contains(&n) {
        Ok(())
    } else {
        Err(Error::VertexCount(n, "2..=8"))
    }
}

/// Every labeled graph on `n` vertices, one per edge mask.
pub fn enumerate_graphs(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_order(n)?;
    Ok((0..1u64 << pair_count(n)).map(move |m| graph_from_mask(n, m)))
}

/// One representative per isomorphism class on `n <= 7` vertices.
pub fn enumerate_canonical(n: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumeration_order(n)?;
    if n > CANONICAL_LIMIT {
        return Err(Error::VertexCount(n, "2..=7 with isomorph reduction"));
    }
    Ok((0..1u64 << pair_count(n)).filter(move |&m| is_canonical(n, m)).map(move |m| graph_from_mask(n, m)))
}

fn degrees(n: usize, mask: u64) -> Vec<u32> {
    let mut d = vec![0; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                d[i] += 1;
                d[j] += 1;
            }
            k += 1;
        }
    }
    d
}

fn relabel(n: usize, mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if mask >> k & 1 == 1 {
                let (a, b) = (perm[i].min(perm[j]), perm[i].max(perm[j]));
                out |= 1 << pair_index(a, b);
            }
            k += 1;
        }
    }
    out
}

/// The least mask over all relabelings that list vertices by nondecreasing
/// degree. Equal for isomorphic graphs.
pub fn canonical_mask(n: usize, mask: u64) -> u64 {
    let d = degrees(n, mask);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (d[v], v));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    let mut best = u64::MAX;
    search_blocks(n, mask, &d, &order, 0, &mut perm, &mut |m| {
        best = best.min(m);
        true
    });
    best
}

/// `mask` already is the canonical labeling of its class.
pub fn is_canonical(n: usize, mask: u64) -> bool {
    let d = degrees(n, mask);
    if d.windows(2).any(|w| w[0] > w[1]) {
        return false;
    }
    let order: Vec<usize> = (0..n).collect();
    let mut perm = order.clone();
    search_blocks(n, mask, &d, &order, 0, &mut perm, &mut |m| m >= mask)
}

/// Runs over every permutation of the positions inside each block of equal
/// degree; `visit` returns `false` to stop, which makes the call return
/// `false`.
fn search_blocks(
    n: usize,
    mask: u64,
    d: &[u32],
    order: &[usize],
    start: usize,
    perm: &mut [usize],
    visit: &mut dyn FnMut(u64) -> bool,
) -> bool {
    if start == n {
        return visit(relabel(n, mask, perm));
    }
    let mut end = start;
    while end < n && d[order[end]] == d[order[start]] {
        end += 1;
    }
    let mut positions: Vec<usize> = (start..end).collect();
    permute(&mut positions, 0, &mut |ps| {
        for (k, &v) in order[start..end].iter().enumerate() {
            perm[v] = ps[k];
        }
        search_blocks(n, mask, d, order, end, perm, visit)
    })
}

fn permute(xs: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if k == xs.len() {
        return f(xs);
    }
    for i in k..xs.len() {
        xs.swap(k, i);
        let go_on = permute(xs, k + 1, f);
        xs.swap(k, i);
        if !go_on {
            return false;
        }
    }
    true
}

/// Same labeled graph up to isomorphism, for `n <= 11`.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_mask(a.n(), mask_of(a)) == canonical_mask(b.n(), mask_of(b))
}

/// Seeded `G(n, p)` graphs. The same seed always yields the same stream.
#[derive(Clone, Debug)]
pub struct RandomGraphs {
    n: usize,
    p: f64,
    left: usize,
    rng: ChaCha8Rng,
}

impl Iterator for RandomGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.left == 0 {
            return None;
        }
        self.left -= 1;
        Some(random_graph(&mut self.rng, self.n, self.p))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.left, Some(self.left))
    }
}

pub fn random_graphs(n: usize, count: usize, p: f64, seed: u64) -> Result<RandomGraphs> {
    if !(2..=crate::graph::MAX_VERTICES).contains(&n) {
        return Err(Error::VertexCount(n, "2..=64"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::Parameter(format!("edge probability {p} outside [0, 1]")));
    }
    Ok(RandomGraphs { n, p, left: count, rng: ChaCha8Rng::seed_from_u64(seed) })
}

pub(crate) fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("order checked");
    for j in 1..n {
        for i in 0..j {
            if rng.gen_bool(p) {
                g.set_edge_unchecked(i, j);
            }
        }
    }
    g
}

pub fn tree_count(n: usize) -> u64 {
    if n < 2 {
        0
    } else {
        (n as u64).pow(n as u32 - 2)
    }
}

/// The labeled tree whose Prüfer sequence is the base-`n` expansion of
/// `index`, `0 <= index < n^(n-2)`.
pub fn prufer_tree(n: usize, index: u64) -> Graph {
    let mut seq = Vec::with_capacity(n.saturating_sub(2));
    let mut x = index;
    for _ in 2..n {
        seq.push((x % n as u64) as usize);
        x /= n as u64;
    }
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut g = Graph::empty(n).expect("order checked");
    for &s in &seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf exists");
        g.set_edge_unchecked(leaf, s);
        degree[leaf] = 0;
        degree[s] -= 1;
    }
    let mut last = (0..n).filter(|&v| degree[v] == 1);
    let (a, b) = (last.next().expect("two leaves"), last.next().expect("two leaves"));
    g.set_edge_unchecked(a, b);
    g
}

/// All `n^(n-2)` labeled trees on `n >= 2` vertices.
pub fn labeled_trees(n: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(2..=12).contains(&n) {
        return Err(Error::VertexCount(n, "2..=12"));
    }
    Ok((0..tree_count(n)).map(move |i| prufer_tree(n, i)))
}

/// Edge masks of every labeled graph on `n <= 11` vertices with girth at
/// least `min_girth`, found by adding edges in pair order and refusing any
/// edge that would close a short cycle.
pub fn girth_at_least_masks(n: usize, min_girth: usize) -> Result<Vec<u64>> {
    if !(2..=11).contains(&n) {
        return Err(Error::VertexCount(n, "2..=11"));
    }
    if min_girth < 3 {
        return Err(Error::Parameter("girth bound must be at least 3".into()));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut out = Vec::new();
    let mut rows = vec![0u64; n];
    girth_rec(&pairs, 0, 0, &mut rows, min_girth, &mut out);
    out.sort_unstable();
    Ok(out)
}

fn within(rows: &[u64], from: usize, steps: usize) -> u64 {
    let mut seen = 1u64 << from;
    let mut frontier = seen;
    for _ in 0..steps {
        let mut next = 0;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= rows[v];
        }
        frontier = next & !seen;
        seen |= next;
        if frontier == 0 {
            break;
        }
    }
    seen
}

fn girth_rec(pairs: &[(usize, usize)], k: usize, mask: u64, rows: &mut [u64], g: usize, out: &mut Vec<u64>) {
    if k == pairs.len() {
        out.push(mask);
        return;
    }
    girth_rec(pairs, k + 1, mask, rows, g, out);
    let (i, j) = pairs[k];
    // the new edge closes a cycle of length dist(i, j) + 1
    if within(rows, i, g - 2) >> j & 1 == 0 {
        rows[i] |= 1 << j;
        rows[j] |= 1 << i;
        girth_rec(pairs, k + 1, mask | 1 << k, rows, g, out);
        rows[i] &= !(1 << j);
        rows[j] &= !(1 << i);
    }
}

/// Graphs on `2k` vertices where vertex `k + i` is a pendant attached to
/// vertex `i`, over every graph on the attachment vertices `0..k`.
pub fn pendant_perfect_graphs(k: usize) -> Result<impl Iterator<Item = Graph>> {
    if !(1..=8).contains(&k) {
        return Err(Error::Parameter(format!("pendant family needs 1 <= k <= 8, got {k}")));
    }
    Ok((0..1u64 << pair_count(k)).map(move |m| {
        let mut g = graph_from_mask(k, m).disjoint_union(&Graph::empty(k).expect("small")).expect("small");
        for i in 0..k {
            g.set_edge_unchecked(i, k + i);
        }
        g
    }))
}
