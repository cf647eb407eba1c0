//! Non-dominated path frontiers.
//!
//! Three single-pass scans, one per domination criterion:
//!
//! | criterion       | pairs    | direction  | scan            |
//! |-----------------|----------|------------|-----------------|
//! | start/arrival   | `(s, a)` | from `x`   | ascending edges |
//! | distance/arrival| `(d, a)` | from `x`   | ascending edges |
//! | distance/start  | `(d, s)` | into `y`   | descending edges|
//!
//! Each list also holds the trivial pairs of the pseudocode: for the forward
//! scans every departure time `t` of `x` contributes `(t, t)` resp. `(0, t)`
//! to `x`'s own list, and for the backward scan every arrival time at `y`
//! contributes `(0, t + lambda)` to `y`'s list.

mod frontier;

use std::fmt;

pub use frontier::ParetoList;

use crate::tgraph::{TemporalGraph, Time, TimeWindow, VertexId};

/// One stream element, `(u, v, t, lambda)`. Internal scans also feed
/// zero-length helper edges through this shape.
pub(crate) type StreamEdge = (VertexId, VertexId, Time, Time);

/// Per-vertex `(start, arrival)` frontiers of paths leaving one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SAFrontier {
    lists: Vec<ParetoList>,
}

/// Per-vertex `(distance, arrival)` frontiers of paths leaving one source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DAFrontier {
    // key = -arrival, value = distance
    lists: Vec<ParetoList>,
}

/// Per-vertex `(distance, start)` frontiers of paths into one target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSFrontier {
    // key = start, value = distance
    lists: Vec<ParetoList>,
}

impl SAFrontier {
    pub fn num_vertices(&self) -> usize {
        self.lists.len()
    }

    pub fn list(&self, v: VertexId) -> &ParetoList {
        &self.lists[v]
    }

    /// `(s, a)` pairs of `v` by ascending start.
    pub fn pairs(&self, v: VertexId) -> Vec<(Time, Time)> {
        self.lists[v].entries().to_vec()
    }

    pub(crate) fn into_lists(self) -> Vec<ParetoList> {
        self.lists
    }
}

impl DAFrontier {
    pub fn num_vertices(&self) -> usize {
        self.lists.len()
    }

    pub fn len(&self, v: VertexId) -> usize {
        self.lists[v].len()
    }

    /// `(d, a)` pairs of `v` by ascending arrival.
    pub fn pairs(&self, v: VertexId) -> Vec<(Time, Time)> {
        self.lists[v]
            .entries()
            .iter()
            .rev()
            .map(|&(k, d)| (d, -k))
            .collect()
    }

    /// The pair with the latest arrival `<= t`, which is also the shortest
    /// among those arriving by `t`.
    pub fn latest_arrival_at_most(&self, v: VertexId, t: Time) -> Option<(Time, Time)> {
        self.lists[v].first_key_at_least(-t).map(|(k, d)| (d, -k))
    }
}

impl DSFrontier {
    pub fn num_vertices(&self) -> usize {
        self.lists.len()
    }

    pub fn len(&self, v: VertexId) -> usize {
        self.lists[v].len()
    }

    /// `(d, s)` pairs of `v` by ascending start.
    pub fn pairs(&self, v: VertexId) -> Vec<(Time, Time)> {
        self.lists[v].entries().iter().map(|&(s, d)| (d, s)).collect()
    }

    /// The pair with the earliest start `>= t`, which is also the shortest
    /// among those starting at `t` or later.
    pub fn earliest_start_at_least(&self, v: VertexId, t: Time) -> Option<(Time, Time)> {
        self.lists[v].first_key_at_least(t).map(|(s, d)| (d, s))
    }
}

fn dump(f: &mut fmt::Formatter<'_>, n: usize, pairs: impl Fn(VertexId) -> Vec<(Time, Time)>) -> fmt::Result {
    for v in 0..n {
        write!(f, "{v}:")?;
        for (a, b) in pairs(v) {
            write!(f, " ({a},{b})")?;
        }
        writeln!(f)?;
    }
    Ok(())
}

impl fmt::Display for SAFrontier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        dump(f, self.lists.len(), |v| self.pairs(v))
    }
}

impl fmt::Display for DAFrontier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        dump(f, self.lists.len(), |v| self.pairs(v))
    }
}

impl fmt::Display for DSFrontier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        dump(f, self.lists.len(), |v| self.pairs(v))
    }
}

/// Non-dominated `(start, arrival)` pairs of all paths from `x` inside `w`.
pub fn nondom_paths(g: &TemporalGraph, x: VertexId, w: TimeWindow) -> SAFrontier {
    let stream = g.edges_asc().iter().map(|e| (e.u, e.v, e.t, e.lambda));
    scan_start_arrival(g.num_vertices(), x, w, stream, |_, _, _| {})
}

/// Start/arrival scan over an arbitrary edge stream sorted by start time.
/// `on_insert(v, s, a)` sees every pair that entered some list.
pub(crate) fn scan_start_arrival(
    n: usize,
    x: VertexId,
    w: TimeWindow,
    stream: impl IntoIterator<Item = StreamEdge>,
    mut on_insert: impl FnMut(VertexId, Time, Time),
) -> SAFrontier {
    let mut lists = vec![ParetoList::new(); n];
    for (u, v, t, lambda) in stream {
        if t > w.t_omega {
            break;
        }
        let end = t + lambda;
        if !w.fits(t, end) {
            continue;
        }
        if u == x {
            lists[x].insert(t, t);
        }
        // latest-starting pair that is already at u by time t
        let Some((s, _)) = lists[u].last_value_at_most(t) else {
            continue;
        };
        if lists[v].insert(s, end) {
            on_insert(v, s, end);
        }
    }
    SAFrontier { lists }
}

/// Distance-wise non-dominated `(distance, arrival)` pairs from `x` in `w`.
pub fn dist_nondom_paths(g: &TemporalGraph, x: VertexId, w: TimeWindow) -> DAFrontier {
    let n = g.num_vertices();
    let mut lists = vec![ParetoList::new(); n];
    for e in g.edges_asc() {
        if e.t > w.t_omega {
            break;
        }
        let end = e.end();
        if !w.fits(e.t, end) {
            continue;
        }
        if e.u == x {
            lists[x].insert(-e.t, 0);
        }
        // latest arrival by t is also the shortest one
        let Some((_, d)) = lists[e.u].first_key_at_least(-e.t) else {
            continue;
        };
        lists[e.v].insert(-end, d + e.lambda);
    }
    DAFrontier { lists }
}

/// Inverse-distance-wise non-dominated `(distance, start)` pairs of all paths
/// into `y` inside `w`, from every vertex.
pub fn inv_dist_nondom_paths(g: &TemporalGraph, y: VertexId, w: TimeWindow) -> DSFrontier {
    let n = g.num_vertices();
    let mut lists = vec![ParetoList::new(); n];
    for e in g.edges_desc() {
        if e.t < w.t_alpha {
            break;
        }
        let end = e.end();
        if !w.fits(e.t, end) {
            continue;
        }
        if e.v == y {
            lists[y].insert(end, 0);
        }
        // earliest start no earlier than our arrival, and thus the shortest
        let Some((_, d)) = lists[e.v].first_key_at_least(end) else {
            continue;
        };
        lists[e.u].insert(e.t, d + e.lambda);
    }
    DSFrontier { lists }
}
