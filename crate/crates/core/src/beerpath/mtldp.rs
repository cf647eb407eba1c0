use std::collections::BinaryHeap;

use crate::tgraph::{find_parallel, SearchMode, TemporalGraph, Time, TimeWindow, NEG_INF};
use crate::{Error, Result};

/// Multiple-target latest departure in one pass over the descending stream.
///
/// `fin[v]` is the latest time a walk may reach target `v` ([`NEG_INF`] if
/// `v` is not a target); finite entries must lie inside `w`. The result holds
/// the latest departure from every vertex that still reaches some target by
/// its `fin`, or `fin[v]` itself if that is larger.
pub fn mtldp_stream(g: &TemporalGraph, w: TimeWindow, fin: &[Time]) -> Vec<Time> {
    mtldp_stream_observed(g, w, fin, |_, _, _| {})
}

pub(crate) fn mtldp_stream_observed(
    g: &TemporalGraph,
    w: TimeWindow,
    fin: &[Time],
    mut on_update: impl FnMut(usize, Time, Time),
) -> Vec<Time> {
    assert_eq!(fin.len(), g.num_vertices(), "one fin time per vertex");
    let mut tau = fin.to_vec();
    for e in g.edges_desc() {
        if e.t < w.t_alpha {
            break;
        }
        let end = e.end();
        if end <= tau[e.v] && w.fits(e.t, end) && e.t > tau[e.u] {
            on_update(e.u, tau[e.u], e.t);
            tau[e.u] = e.t;
        }
    }
    tau
}

/// Same contract as [`mtldp_stream`] via a max-priority queue over incoming
/// adjacency lists. Requires a graph without dominated edges.
pub fn mtldp_adjlist(g: &TemporalGraph, w: TimeWindow, fin: &[Time]) -> Result<Vec<Time>> {
    if !g.is_dominance_free() {
        return Err(Error::DominatedEdges);
    }
    assert_eq!(fin.len(), g.num_vertices(), "one fin time per vertex");
    let mut tau = fin.to_vec();
    let mut heap: BinaryHeap<_> = tau
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t != NEG_INF)
        .map(|(v, &t)| (t, v))
        .collect();
    while let Some((t, v)) = heap.pop() {
        if t != tau[v] {
            continue;
        }
        for p in g.in_groups(v) {
            // without dominated edges, the latest end <= t is also the latest start
            let Some((dep, _)) = find_parallel(&p.times, SearchMode::MaxEndAtMost, t) else {
                continue;
            };
            if dep >= w.t_alpha && dep > tau[p.neighbor] {
                tau[p.neighbor] = dep;
                heap.push((dep, p.neighbor));
            }
        }
    }
    Ok(tau)
}
