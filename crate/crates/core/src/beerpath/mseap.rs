use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::tgraph::{find_parallel, SearchMode, TemporalGraph, Time, TimeWindow, INF};
use crate::{Error, Result};

/// Multiple-source earliest arrival in one pass over the ascending stream.
///
/// `init[v]` is the earliest time a walk may leave `v` ([`INF`] if `v` is not
/// a source); finite entries must lie inside `w`. The result holds, for every
/// vertex, the earliest arrival of a walk that leaves some source no earlier
/// than its `init`, or `init[v]` itself if that is smaller.
pub fn mseap_stream(g: &TemporalGraph, w: TimeWindow, init: &[Time]) -> Vec<Time> {
    mseap_stream_observed(g, w, init, |_, _, _| {})
}

/// [`mseap_stream`] reporting every improvement as `(v, old, new)`.
pub(crate) fn mseap_stream_observed(
    g: &TemporalGraph,
    w: TimeWindow,
    init: &[Time],
    mut on_update: impl FnMut(usize, Time, Time),
) -> Vec<Time> {
    assert_eq!(init.len(), g.num_vertices(), "one init time per vertex");
    let mut tau = init.to_vec();
    for e in g.edges_asc() {
        if e.t > w.t_omega {
            break;
        }
        let end = e.end();
        if e.t >= tau[e.u] && w.fits(e.t, end) && end < tau[e.v] {
            on_update(e.v, tau[e.v], end);
            tau[e.v] = end;
        }
    }
    tau
}

/// Same contract as [`mseap_stream`], computed with a priority queue over the
/// adjacency lists and a binary search per neighbour. The graph must be free
/// of dominated edges (see [`TemporalGraph::remove_dominated_edges`]).
pub fn mseap_adjlist(g: &TemporalGraph, w: TimeWindow, init: &[Time]) -> Result<Vec<Time>> {
    if !g.is_dominance_free() {
        return Err(Error::DominatedEdges);
    }
    assert_eq!(init.len(), g.num_vertices(), "one init time per vertex");
    let mut tau = init.to_vec();
    let mut heap: BinaryHeap<_> = tau
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t != INF)
        .map(|(v, &t)| Reverse((t, v)))
        .collect();
    // lazy deletion stands in for decrease-key
    while let Some(Reverse((t, u))) = heap.pop() {
        if t != tau[u] {
            continue;
        }
        for p in g.out_groups(u) {
            let Some((dep, lambda)) = find_parallel(&p.times, SearchMode::MinStartAtLeast, t.max(w.t_alpha))
            else {
                continue;
            };
            let end = dep + lambda;
            if end <= w.t_omega && end < tau[p.neighbor] {
                tau[p.neighbor] = end;
                heap.push(Reverse((end, p.neighbor)));
            }
        }
    }
    Ok(tau)
}
