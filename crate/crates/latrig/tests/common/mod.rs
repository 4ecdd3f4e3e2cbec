//! Oracles and helpers shared by the integration tests.
#![allow(dead_code)]

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use latrig_core::Framework;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Adjacency keyed by grid id `x + n·y`, each list in the order bars were
/// added, as a dictionary-of-lists would hold it.
pub type Frame = BTreeMap<usize, Vec<usize>>;

pub fn frame_from(f: &Framework, n: usize) -> Frame {
    let id = |j: usize| {
        let c = f.joint(j).coords();
        c[0] as usize + n * c[1] as usize
    };
    let mut frame: Frame = (0..f.num_joints()).map(|j| (id(j), Vec::new())).collect();
    for bar in f.bars() {
        let (v1, v2) = (id(bar.lo()), id(bar.hi()));
        frame.get_mut(&v1).unwrap().push(v2);
        frame.get_mut(&v2).unwrap().push(v1);
    }
    frame
}

/// Line-for-line port of the reference `saveframe` writer.
pub fn reference_saveframe(frame: &Frame) -> String {
    let mut frame_file = String::new();
    for (&v1, neighbours) in frame {
        for &v2 in neighbours {
            if v1 < v2 {
                frame_file += &(v1.to_string() + "," + &v2.to_string() + "\n");
            }
        }
    }
    frame_file
}

/// Line-for-line port of the reference `sparsematrix` writer.
#[allow(clippy::explicit_counter_loop, clippy::write_with_newline)]
pub fn reference_sparsematrix(frame: &Frame, n: usize) -> String {
    let mut places = BTreeMap::new();
    let mut count = 1i64;
    for &v in frame.keys() {
        places.insert(v, count);
        count += 1;
    }
    let mut sparse_file = String::new();
    for (&v1, neighbours) in frame {
        for &v2 in neighbours {
            if v1 < v2 {
                let (v1, v2) = (v1 as i64, v2 as i64);
                let n = n as i64;
                let v1y = v1 / n;
                let v1x = v1 - v1y * n;
                let v2y = v2 / n;
                let v2x = v2 - v2y * n;
                let c1 = 2 * places[&(v1 as usize)] - 1;
                let c2 = 2 * places[&(v2 as usize)] - 1;
                let _ = write!(
                    sparse_file,
                    "{},{},{},{},{},{}\n",
                    c1,
                    c2,
                    v1x - v2x,
                    v1y - v2y,
                    v2x - v1x,
                    v2y - v1y
                );
            }
        }
    }
    sparse_file
}

/// Girth by breadth-first search from every vertex, tracking parents.
pub fn bfs_girth(adj: &[Vec<usize>]) -> Option<usize> {
    let mut best: Option<usize> = None;
    for s in 0..adj.len() {
        let mut dist = vec![usize::MAX; adj.len()];
        let mut parent = vec![usize::MAX; adj.len()];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn adjacency(f: &Framework) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); f.num_joints()];
    for bar in f.bars() {
        adj[bar.lo()].push(bar.hi());
        adj[bar.hi()].push(bar.lo());
    }
    adj
}

/// Two-colouring check by breadth-first search.
pub fn is_bipartite(adj: &[Vec<usize>]) -> bool {
    let mut colour = vec![None; adj.len()];
    for s in 0..adj.len() {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let c = colour[u].unwrap();
            for &w in &adj[u] {
                match colour[w] {
                    None => {
                        colour[w] = Some(!c);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == c => return false,
                    _ => {}
                }
            }
        }
    }
    true
}

/// Rank over Q by Gauss–Jordan elimination on big rationals.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
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
        let pivot: Vec<BigRational> = m[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot) {
                    *x -= &factor * p;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// Random planar lattice framework on an `n × n` grid with no isolated
/// joints. Joints are listed in ascending grid id.
pub fn random_grid_framework<R: Rng>(rng: &mut R, n: usize, bars: usize) -> Framework {
    let mut pairs = std::collections::BTreeSet::new();
    let cells = n * n;
    for _ in 0..bars {
        let a = rng.gen_range(0..cells);
        let b = rng.gen_range(0..cells);
        if a != b {
            pairs.insert((a.min(b), a.max(b)));
        }
    }
    let mut used: Vec<usize> = pairs.iter().flat_map(|&(a, b)| [a, b]).collect();
    used.sort_unstable();
    used.dedup();
    let index: BTreeMap<usize, usize> = used.iter().enumerate().map(|(k, &id)| (id, k)).collect();
    let coords = used
        .iter()
        .map(|&id| vec![(id % n) as i64, (id / n) as i64])
        .collect();
    let mut bar_list: Vec<(usize, usize)> =
        pairs.iter().map(|(a, b)| (index[a], index[b])).collect();
    // Shuffle so bar order differs from id order.
    for i in (1..bar_list.len()).rev() {
        bar_list.swap(i, rng.gen_range(0..=i));
    }
    Framework::from_coords(2, coords, bar_list).unwrap()
}
