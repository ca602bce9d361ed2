//! Integral max-flow for transportation problems on small bipartite graphs.

use std::collections::VecDeque;

/// A transportation instance: supplies on the left, demands on the right,
/// uncapacitated arcs `(left, right)`.
#[derive(Debug, Clone)]
pub struct Transport<'a> {
    pub supply: &'a [u64],
    pub demand: &'a [u64],
    pub arcs: &'a [(usize, usize)],
}

impl Transport<'_> {
    /// Per-arc flow meeting every supply and demand exactly, if one exists.
    pub fn solve(&self) -> Option<Vec<u64>> {
        let total: u64 = self.supply.iter().sum();
        if total != self.demand.iter().sum::<u64>() {
            return None;
        }
        let (nl, nr) = (self.supply.len(), self.demand.len());
        let n = nl + nr + 2;
        let (src, sink) = (n - 2, n - 1);
        let inf = total as i64 + 1;
        let mut cap = vec![vec![0i64; n]; n];
        for (i, &a) in self.supply.iter().enumerate() {
            cap[src][i] = a as i64;
        }
        for (j, &b) in self.demand.iter().enumerate() {
            cap[nl + j][sink] = b as i64;
        }
        for &(i, j) in self.arcs {
            cap[i][nl + j] = inf;
        }
        let original = cap.clone();
        let mut flow = 0i64;
        while let Some(parent) = augmenting_path(&cap, src, sink) {
            let mut push = i64::MAX;
            let mut v = sink;
            while v != src {
                let u = parent[v];
                push = push.min(cap[u][v]);
                v = u;
            }
            let mut v = sink;
            while v != src {
                let u = parent[v];
                cap[u][v] -= push;
                cap[v][u] += push;
                v = u;
            }
            flow += push;
        }
        if flow != total as i64 {
            return None;
        }
        // Net flow on each arc; parallel arcs take it all on the first copy.
        let mut seen = std::collections::HashSet::new();
        Some(
            self.arcs
                .iter()
                .map(|&(i, j)| {
                    if !seen.insert((i, j)) {
                        return 0;
                    }
                    (original[i][nl + j] - cap[i][nl + j]).max(0) as u64
                })
                .collect(),
        )
    }

    pub fn feasible(&self) -> bool {
        self.solve().is_some()
    }
}

fn augmenting_path(cap: &[Vec<i64>], src: usize, sink: usize) -> Option<Vec<usize>> {
    let n = cap.len();
    let mut parent = vec![usize::MAX; n];
    parent[src] = src;
    let mut queue = VecDeque::from([src]);
    while let Some(u) = queue.pop_front() {
        for v in 0..n {
            if parent[v] == usize::MAX && cap[u][v] > 0 {
                parent[v] = u;
                if v == sink {
                    return Some(parent);
                }
                queue.push_back(v);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_instance() {
        // a0 - b0 - a1 - b1
        let arcs = [(0, 0), (1, 0), (1, 1)];
        let t = Transport { supply: &[1, 1], demand: &[1, 1], arcs: &arcs };
        assert_eq!(t.solve(), Some(vec![1, 0, 1]));
        let t = Transport { supply: &[1, 1], demand: &[0, 2], arcs: &arcs };
        assert!(!t.feasible());
        let t = Transport { supply: &[2, 0], demand: &[1, 1], arcs: &arcs };
        assert!(!t.feasible());
    }

    #[test]
    fn unbalanced_is_infeasible() {
        let t = Transport { supply: &[2], demand: &[1], arcs: &[(0, 0)] };
        assert!(!t.feasible());
    }

    #[test]
    fn parallel_arcs_carry_flow_once() {
        let arcs = [(0, 0), (0, 0)];
        let t = Transport { supply: &[3], demand: &[3], arcs: &arcs };
        assert_eq!(t.solve(), Some(vec![3, 0]));
    }
}
