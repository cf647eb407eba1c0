use super::{Time, VertexId};
use crate::{Error, Result};

/// A directed edge that leaves `u` at `t` and reaches `v` at `t + lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TemporalEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub t: Time,
    pub lambda: Time,
}

impl TemporalEdge {
    pub const fn new(u: VertexId, v: VertexId, t: Time, lambda: Time) -> Self {
        Self { u, v, t, lambda }
    }

    #[inline]
    pub const fn end(&self) -> Time {
        self.t + self.lambda
    }

    /// `self` is dominated by `other` if both connect the same ordered pair
    /// and `other` leaves no earlier and arrives no later, one of them
    /// strictly.
    pub fn is_dominated_by(&self, other: &TemporalEdge) -> bool {
        self.u == other.u
            && self.v == other.v
            && other.t >= self.t
            && other.end() <= self.end()
            && (other.t > self.t || other.end() < self.end())
    }
}

/// All edges between one ordered vertex pair, as `(t, lambda)` sorted by `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParallelEdges {
    pub neighbor: VertexId,
    pub times: Vec<(Time, Time)>,
}

/// Size parameters. Degrees count temporal edges, parallel ones included.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphStats {
    /// Number of temporal edges, `M`.
    pub edges: usize,
    /// Ordered pairs joined by at least one edge, `m`.
    pub connected_pairs: usize,
    /// Largest number of parallel edges between one ordered pair, `pi`.
    pub max_parallel: usize,
    pub max_in_degree: usize,
    pub max_out_degree: usize,
    pub max_degree: usize,
    /// `min(max_in_degree, max_out_degree)`.
    pub c: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    /// Edge with the smallest `t` such that `t >= bound`.
    MinStartAtLeast,
    /// Edge with the largest `t` such that `t + lambda <= bound`.
    MaxEndAtMost,
}

/// Immutable temporal graph with edge-stream and adjacency-list views.
#[derive(Debug, Clone)]
pub struct TemporalGraph {
    n: usize,
    edges_asc: Vec<TemporalEdge>,
    out_adj: Vec<Vec<ParallelEdges>>,
    in_adj: Vec<Vec<ParallelEdges>>,
    stats: GraphStats,
    dominance_free: bool,
}

impl TemporalGraph {
    /// Validates and indexes `edges`, given in any order.
    pub fn new(n: usize, edges: Vec<TemporalEdge>) -> Result<Self> {
        for e in &edges {
            for vertex in [e.u, e.v] {
                if vertex >= n {
                    return Err(Error::VertexOutOfRange { vertex, n });
                }
            }
            if e.t < 0 {
                return Err(Error::NegativeTime(e.t));
            }
            if e.lambda < 1 {
                return Err(Error::ZeroTraversal(e.lambda));
            }
        }
        Ok(Self::build(n, edges))
    }

    fn build(n: usize, mut edges: Vec<TemporalEdge>) -> Self {
        // stable: equal-t edges keep input order
        edges.sort_by_key(|e| e.t);

        let out_adj = group(n, &edges, |e| (e.u, e.v));
        let in_adj = group(n, &edges, |e| (e.v, e.u));

        let mut stats = GraphStats {
            edges: edges.len(),
            ..Default::default()
        };
        for groups in &out_adj {
            stats.connected_pairs += groups.len();
            let degree: usize = groups.iter().map(|p| p.times.len()).sum();
            stats.max_out_degree = stats.max_out_degree.max(degree);
            for p in groups {
                stats.max_parallel = stats.max_parallel.max(p.times.len());
            }
        }
        for groups in &in_adj {
            let degree: usize = groups.iter().map(|p| p.times.len()).sum();
            stats.max_in_degree = stats.max_in_degree.max(degree);
        }
        stats.max_degree = stats.max_in_degree.max(stats.max_out_degree);
        stats.c = stats.max_in_degree.min(stats.max_out_degree);

        let dominance_free = out_adj.iter().flatten().all(|p| {
            p.times
                .windows(2)
                .all(|w| w[0].0 < w[1].0 && w[0].0 + w[0].1 < w[1].0 + w[1].1)
        });

        Self {
            n,
            edges_asc: edges,
            out_adj,
            in_adj,
            stats,
            dominance_free,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges_asc.len()
    }

    pub fn stats(&self) -> GraphStats {
        self.stats
    }

    /// Edges by ascending start time; equal start times keep input order.
    pub fn edges_asc(&self) -> &[TemporalEdge] {
        &self.edges_asc
    }

    /// Edges by descending start time.
    pub fn edges_desc(&self) -> impl DoubleEndedIterator<Item = &TemporalEdge> + '_ {
        self.edges_asc.iter().rev()
    }

    /// Outgoing edges of `u`, grouped by head and sorted by head id.
    pub fn out_groups(&self, u: VertexId) -> &[ParallelEdges] {
        &self.out_adj[u]
    }

    /// Incoming edges of `v`, grouped by tail and sorted by tail id.
    pub fn in_groups(&self, v: VertexId) -> &[ParallelEdges] {
        &self.in_adj[v]
    }

    /// `E(u, v)` as `(t, lambda)` pairs sorted by start time.
    pub fn parallel(&self, u: VertexId, v: VertexId) -> &[(Time, Time)] {
        let groups = &self.out_adj[u];
        match groups.binary_search_by_key(&v, |p| p.neighbor) {
            Ok(i) => &groups[i].times,
            Err(_) => &[],
        }
    }

    /// True when no edge is dominated by a parallel one and no edge is
    /// duplicated, which the adjacency-list algorithms rely on.
    pub fn is_dominance_free(&self) -> bool {
        self.dominance_free
    }

    /// Latest arrival time over all edges, 0 for an edgeless graph.
    pub fn horizon_end(&self) -> Time {
        self.edges_asc.iter().map(TemporalEdge::end).max().unwrap_or(0)
    }

    /// Drops every dominated edge and all but one copy of duplicates.
    pub fn remove_dominated_edges(&self) -> TemporalGraph {
        if self.dominance_free {
            return self.clone();
        }
        let mut keep = std::collections::HashSet::new();
        for (u, groups) in self.out_adj.iter().enumerate() {
            for p in groups {
                let mut best_end = Time::MAX;
                let mut i = p.times.len();
                // scan by descending t; within equal t only the shortest
                // traversal can survive
                while i > 0 {
                    let t = p.times[i - 1].0;
                    let mut j = i - 1;
                    while j > 0 && p.times[j - 1].0 == t {
                        j -= 1;
                    }
                    let lambda = p.times[j..i].iter().map(|&(_, l)| l).min().unwrap();
                    if t + lambda < best_end {
                        best_end = t + lambda;
                        keep.insert(TemporalEdge::new(u, p.neighbor, t, lambda));
                    }
                    i = j;
                }
            }
        }
        let edges = self
            .edges_asc
            .iter()
            .filter(|e| keep.remove(e))
            .copied()
            .collect();
        Self::build(self.n, edges)
    }

    /// Binary search over `E(u, v)`. [`SearchMode::MaxEndAtMost`] assumes the
    /// pair has no dominated edges, so that ends are sorted like starts.
    pub fn parallel_edge_search(
        &self,
        u: VertexId,
        v: VertexId,
        mode: SearchMode,
        bound: Time,
    ) -> Option<TemporalEdge> {
        find_parallel(self.parallel(u, v), mode, bound).map(|(t, lambda)| TemporalEdge::new(u, v, t, lambda))
    }
}

pub(crate) fn find_parallel(times: &[(Time, Time)], mode: SearchMode, bound: Time) -> Option<(Time, Time)> {
    match mode {
        SearchMode::MinStartAtLeast => {
            let i = times.partition_point(|&(t, _)| t < bound);
            times.get(i).copied()
        }
        SearchMode::MaxEndAtMost => {
            let i = times.partition_point(|&(t, l)| t + l <= bound);
            i.checked_sub(1).map(|i| times[i])
        }
    }
}

fn group(
    n: usize,
    edges: &[TemporalEdge],
    key: impl Fn(&TemporalEdge) -> (VertexId, VertexId),
) -> Vec<Vec<ParallelEdges>> {
    let mut buckets: Vec<Vec<(VertexId, Time, Time)>> = vec![Vec::new(); n];
    for e in edges {
        let (owner, other) = key(e);
        buckets[owner].push((other, e.t, e.lambda));
    }
    buckets
        .into_iter()
        .map(|mut b| {
            b.sort_unstable();
            let mut groups: Vec<ParallelEdges> = Vec::new();
            for (other, t, lambda) in b {
                match groups.last_mut() {
                    Some(p) if p.neighbor == other => p.times.push((t, lambda)),
                    _ => groups.push(ParallelEdges {
                        neighbor: other,
                        times: vec![(t, lambda)],
                    }),
                }
            }
            groups
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g1() -> TemporalGraph {
        TemporalGraph::new(
            3,
            vec![
                TemporalEdge::new(0, 1, 1, 2),
                TemporalEdge::new(0, 2, 2, 1),
                TemporalEdge::new(1, 2, 6, 2),
            ],
        )
        .unwrap()
    }

    fn g3() -> TemporalGraph {
        TemporalGraph::new(
            2,
            vec![TemporalEdge::new(0, 1, 2, 5), TemporalEdge::new(0, 1, 3, 3)],
        )
        .unwrap()
    }

    #[test]
    fn stats_of_g1() {
        let s = g1().stats();
        assert_eq!(s.edges, 3);
        assert_eq!(s.connected_pairs, 3);
        assert_eq!(s.max_parallel, 1);
        assert_eq!((s.max_in_degree, s.max_out_degree), (2, 2));
        assert_eq!(s.c, 2);
    }

    #[test]
    fn rejects_bad_edges() {
        assert!(matches!(
            TemporalGraph::new(2, vec![TemporalEdge::new(0, 1, 2, 0)]),
            Err(Error::ZeroTraversal(0))
        ));
        assert!(matches!(
            TemporalGraph::new(2, vec![TemporalEdge::new(0, 2, 2, 1)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        ));
        assert!(matches!(
            TemporalGraph::new(2, vec![TemporalEdge::new(0, 1, -1, 1)]),
            Err(Error::NegativeTime(-1))
        ));
    }

    #[test]
    fn stream_is_stable_on_ties() {
        let g = TemporalGraph::new(
            3,
            vec![
                TemporalEdge::new(2, 1, 4, 1),
                TemporalEdge::new(0, 1, 1, 1),
                TemporalEdge::new(1, 0, 4, 2),
            ],
        )
        .unwrap();
        let order: Vec<_> = g.edges_asc().iter().map(|e| (e.u, e.t)).collect();
        assert_eq!(order, vec![(0, 1), (2, 4), (1, 4)]);
        let desc: Vec<_> = g.edges_desc().map(|e| e.t).collect();
        assert_eq!(desc, vec![4, 4, 1]);
    }

    #[test]
    fn prune_g3_keeps_the_dominating_edge() {
        let g = g3();
        assert!(!g.is_dominance_free());
        let p = g.remove_dominated_edges();
        assert!(p.is_dominance_free());
        assert_eq!(p.edges_asc(), &[TemporalEdge::new(0, 1, 3, 3)]);
    }

    #[test]
    fn prune_leaves_g1_alone() {
        assert_eq!(g1().remove_dominated_edges().edges_asc(), g1().edges_asc());
    }

    #[test]
    fn prune_collapses_duplicates() {
        let g = TemporalGraph::new(
            2,
            vec![TemporalEdge::new(0, 1, 2, 3), TemporalEdge::new(0, 1, 2, 3)],
        )
        .unwrap();
        assert!(!g.is_dominance_free());
        assert_eq!(
            g.remove_dominated_edges().edges_asc(),
            &[TemporalEdge::new(0, 1, 2, 3)]
        );
    }

    #[test]
    fn parallel_search() {
        let p = g3().remove_dominated_edges();
        assert_eq!(
            p.parallel_edge_search(0, 1, SearchMode::MinStartAtLeast, 3),
            Some(TemporalEdge::new(0, 1, 3, 3))
        );
        assert_eq!(p.parallel_edge_search(0, 1, SearchMode::MinStartAtLeast, 4), None);
        assert_eq!(
            g1().parallel_edge_search(1, 2, SearchMode::MaxEndAtMost, 8),
            Some(TemporalEdge::new(1, 2, 6, 2))
        );
        assert_eq!(g1().parallel_edge_search(1, 2, SearchMode::MaxEndAtMost, 7), None);
        assert_eq!(
            g1().parallel_edge_search(2, 0, SearchMode::MaxEndAtMost, 100),
            None
        );
    }

    #[test]
    fn empty_graph() {
        let g = TemporalGraph::new(2, vec![]).unwrap();
        assert_eq!(g.num_edges(), 0);
        assert!(g.out_groups(0).is_empty() && g.in_groups(1).is_empty());
        assert_eq!(g.horizon_end(), 0);
    }
}
