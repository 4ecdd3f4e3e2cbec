//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use latrig_core::Framework;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Shortest cycle by exhaustive DFS over simple paths; `None` for forests.
/// Paths no shorter than the best cycle so far are abandoned.
/// Still exponential, only for small graphs.
pub fn brute_force_girth(adj: &[Vec<usize>]) -> Option<usize> {
    fn extend(
        adj: &[Vec<usize>],
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        best: &mut Option<usize>,
    ) {
        if best.is_some_and(|b| path.len() >= b) {
            return;
        }
        let last = *path.last().unwrap();
        for &w in &adj[last] {
            if w == start && path.len() >= 3 {
                let len = path.len();
                if best.is_none_or(|b| len < b) {
                    *best = Some(len);
                }
            } else if w > start && !on_path[w] {
                on_path[w] = true;
                path.push(w);
                extend(adj, start, path, on_path, best);
                path.pop();
                on_path[w] = false;
            }
        }
    }
    let mut best = None;
    for start in 0..adj.len() {
        let mut on_path = vec![false; adj.len()];
        on_path[start] = true;
        extend(adj, start, &mut vec![start], &mut on_path, &mut best);
    }
    best
}

/// Rank over Q by textbook Gauss–Jordan on rationals.
#[allow(clippy::needless_range_loop)]
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] * &inv;
                for k in c..cols {
                    let t = &f * &m[rank][k];
                    m[r][k] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Edge list → adjacency lists.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    adj
}

/// k-core by queue peeling, independent of the library's scan order.
pub fn k_core(adj: &[Vec<usize>], k: usize) -> Vec<usize> {
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; adj.len()];
    let mut stack: Vec<usize> = (0..adj.len()).filter(|&v| deg[v] < k).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < k {
                    stack.push(w);
                }
            }
        }
    }
    (0..adj.len()).filter(|&v| alive[v]).collect()
}

/// All joint pairs whose nonzero coordinate differences are exactly the
/// leap `{a, b}` (one coordinate when an offset is zero).
pub fn brute_force_leaper_bars(f: &Framework, a: i64, b: i64) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..f.num_joints() {
        for j in i + 1..f.num_joints() {
            let mut diffs: Vec<i64> = f
                .joint(i)
                .coords()
                .iter()
                .zip(f.joint(j).coords())
                .map(|(x, y)| (x - y).abs())
                .filter(|&d| d != 0)
                .collect();
            diffs.sort_unstable();
            let mut want = vec![a.min(b), a.max(b)];
            want.retain(|&d| d != 0);
            if diffs == want {
                out.push((i, j));
            }
        }
    }
    out
}

/// Deterministic xorshift for fixture generation in tests.
pub struct XorShift(pub u64);

impl XorShift {
    pub fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next() % n
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + self.below((hi - lo + 1) as u64) as i64
    }
}

/// A random framework on distinct integer points.
pub fn random_framework(
    rng: &mut XorShift,
    dim: usize,
    joints: usize,
    bar_prob_percent: u64,
    spread: i64,
) -> Framework {
    let mut coords: Vec<Vec<i64>> = Vec::new();
    while coords.len() < joints {
        let p: Vec<i64> = (0..dim).map(|_| rng.range(-spread, spread)).collect();
        if !coords.contains(&p) {
            coords.push(p);
        }
    }
    let mut bars = Vec::new();
    for i in 0..joints {
        for j in i + 1..joints {
            if rng.below(100) < bar_prob_percent {
                bars.push((i, j));
            }
        }
    }
    Framework::from_coords(dim, coords, bars).unwrap()
}
