//! Graph algorithms on the bar graph of a framework.
//!
//! Functions take adjacency lists (`&[Vec<usize>]`) so the girth builder can
//! run them on its partial frameworks; [`Framework`] has thin wrappers.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::framework::Framework;

/// Length of a shortest cycle, or `Infinite` for a forest.
///
/// `Finite(_) < Infinite`, so `girth >= Girth::Finite(g)` reads naturally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl Girth {
    pub fn finite(self) -> Option<usize> {
        match self {
            Girth::Finite(g) => Some(g),
            Girth::Infinite => None,
        }
    }

    pub fn at_least(self, g: usize) -> bool {
        self >= Girth::Finite(g)
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

/// Girth by a BFS from every vertex.
///
/// Every non-tree edge `uw` met by the BFS rooted at `r` closes a closed walk
/// of length `d(u) + d(w) + 1` through `r`; the minimum over all roots is the
/// girth because a BFS rooted on a shortest cycle sees that cycle exactly.
pub fn girth(adj: &[Vec<usize>]) -> Girth {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for root in 0..n {
        for &v in &touched {
            dist[v] = usize::MAX;
            parent[v] = usize::MAX;
        }
        touched.clear();
        dist[root] = 0;
        touched.push(root);
        queue.clear();
        queue.push_back(root);
        'bfs: while let Some(u) = queue.pop_front() {
            // Nothing shorter can be found below this depth.
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    touched.push(w);
                    queue.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    if len < best {
                        best = len;
                    }
                    if best == 3 {
                        break 'bfs;
                    }
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// Girth by a second route: for every edge `uv`, the shortest `u`–`v` path
/// avoiding that edge, plus one.
pub fn girth_by_edge_removal(adj: &[Vec<usize>]) -> Girth {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    let mut touched = Vec::new();
    for u in 0..n {
        for &v in adj[u].iter().filter(|&&v| v > u) {
            for &t in &touched {
                dist[t] = usize::MAX;
            }
            touched.clear();
            queue.clear();
            dist[u] = 0;
            touched.push(u);
            queue.push_back(u);
            while let Some(x) = queue.pop_front() {
                if dist[x] + 2 >= best || dist[v] != usize::MAX {
                    break;
                }
                for &y in &adj[x] {
                    if (x == u && y == v) || dist[y] != usize::MAX {
                        continue;
                    }
                    dist[y] = dist[x] + 1;
                    touched.push(y);
                    queue.push_back(y);
                }
            }
            if dist[v] != usize::MAX && dist[v] + 1 < best {
                best = dist[v] + 1;
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// A proper 2-colouring (`false`/`true` classes), if the graph is bipartite.
///
/// Components are coloured from their lowest-indexed joint, which gets `false`.
pub fn bipartition(adj: &[Vec<usize>]) -> Option<Vec<bool>> {
    let n = adj.len();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(false);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].expect("queued joints are coloured");
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(
        color
            .into_iter()
            .map(|c| c.expect("all coloured"))
            .collect(),
    )
}

/// Joints within graph distance `radius` of `start`, in BFS order
/// (`start` first).
pub fn neighborhood(adj: &[Vec<usize>], start: usize, radius: usize) -> Vec<usize> {
    let mut depth = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    let mut explored = Vec::new();
    depth[start] = 0;
    queue.push_back(start);
    while let Some(current) = queue.pop_front() {
        explored.push(current);
        if depth[current] < radius {
            for &w in &adj[current] {
                if depth[w] == usize::MAX {
                    depth[w] = depth[current] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    explored
}

/// Graph distance from `from` to `to` if it is at most `limit`.
pub fn distance_within(adj: &[Vec<usize>], from: usize, to: usize, limit: usize) -> Option<usize> {
    if from == to {
        return Some(0);
    }
    let mut depth = vec![usize::MAX; adj.len()];
    let mut queue = VecDeque::new();
    depth[from] = 0;
    queue.push_back(from);
    while let Some(u) = queue.pop_front() {
        if depth[u] >= limit {
            continue;
        }
        for &w in &adj[u] {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                if w == to {
                    return Some(depth[w]);
                }
                queue.push_back(w);
            }
        }
    }
    None
}

/// Survivors of repeatedly deleting the lowest-indexed joint of minimum
/// degree while that degree is below `min_degree`. Returned in index order.
pub fn min_degree_survivors(adj: &[Vec<usize>], min_degree: usize) -> Vec<usize> {
    let n = adj.len();
    let mut alive = vec![true; n];
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    loop {
        let mut victim = None;
        let mut lowest = min_degree;
        for v in 0..n {
            if alive[v] && degree[v] < lowest {
                lowest = degree[v];
                victim = Some(v);
            }
        }
        let Some(v) = victim else { break };
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                degree[w] -= 1;
            }
        }
    }
    (0..n).filter(|&v| alive[v]).collect()
}

impl Framework {
    pub fn girth(&self) -> Girth {
        girth(&self.adjacency())
    }

    pub fn bipartition(&self) -> Option<Vec<bool>> {
        bipartition(&self.adjacency())
    }

    /// See [`neighborhood`]. Panics if `start` is out of range.
    pub fn neighborhood(&self, start: usize, radius: usize) -> Vec<usize> {
        assert!(start < self.num_joints(), "start joint out of range");
        neighborhood(&self.adjacency(), start, radius)
    }

    /// Deletes low-degree joints until every remaining joint has degree
    /// at least `min_degree`, then compacts indices (relative order kept).
    pub fn prune_min_degree(&self, min_degree: usize) -> Framework {
        let keep = min_degree_survivors(&self.adjacency(), min_degree);
        self.induced(&keep)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![(i + n - 1) % n, (i + 1) % n]).collect()
    }

    fn path(n: usize) -> Vec<Vec<usize>> {
        (0..n)
            .map(|i| {
                let mut v = Vec::new();
                if i > 0 {
                    v.push(i - 1);
                }
                if i + 1 < n {
                    v.push(i + 1);
                }
                v
            })
            .collect()
    }

    #[test]
    fn girth_of_small_graphs() {
        assert_eq!(girth(&path(4)), Girth::Infinite);
        assert_eq!(girth(&cycle(6)), Girth::Finite(6));
        assert_eq!(girth(&cycle(3)), Girth::Finite(3));
        assert_eq!(girth_by_edge_removal(&cycle(7)), Girth::Finite(7));
        assert_eq!(girth_by_edge_removal(&path(5)), Girth::Infinite);
        assert!(Girth::Infinite.at_least(1000));
    }

    #[test]
    fn bipartition_cases() {
        assert_eq!(bipartition(&cycle(3)), None);
        assert_eq!(bipartition(&[vec![1], vec![0]]), Some(vec![false, true]));
    }

    #[test]
    fn neighborhoods() {
        let c6 = cycle(6);
        assert_eq!(neighborhood(&c6, 2, 0), vec![2]);
        assert_eq!(neighborhood(&c6, 0, 2).len(), 5);
        assert_eq!(neighborhood(&c6, 0, 2), vec![0, 5, 1, 4, 2]);
        let isolated = vec![Vec::new(), vec![2], vec![1]];
        assert_eq!(neighborhood(&isolated, 0, 5), vec![0]);
    }

    #[test]
    fn pruning() {
        assert!(min_degree_survivors(&path(3), 3).is_empty());
        // star K_{1,5}
        let mut star = vec![vec![1, 2, 3, 4, 5]];
        star.extend((0..5).map(|_| vec![0]));
        assert!(min_degree_survivors(&star, 2).is_empty());
        // K_5 is 4-regular
        let k5: Vec<Vec<usize>> = (0..5)
            .map(|i| (0..5).filter(|&j| j != i).collect())
            .collect();
        assert_eq!(min_degree_survivors(&k5, 3), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn distance_bound() {
        let c6 = cycle(6);
        assert_eq!(distance_within(&c6, 0, 3, 3), Some(3));
        assert_eq!(distance_within(&c6, 0, 3, 2), None);
        assert_eq!(distance_within(&c6, 4, 4, 0), Some(0));
    }
}
