use super::{mseap_adjlist, mseap_stream, mtldp_adjlist, mtldp_stream, Variant};
use crate::nondom::{dist_nondom_paths, inv_dist_nondom_paths, nondom_paths, scan_start_arrival, StreamEdge};
use crate::tgraph::{
    first_at_or_after, last_at_or_before, BeerConfig, TemporalGraph, Time, TimeWindow, VertexId, INF, NEG_INF,
};
use crate::{Error, Result};

fn check_inputs(g: &TemporalGraph, v: VertexId, bc: &BeerConfig) -> Result<()> {
    let n = g.num_vertices();
    if v >= n {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if bc.num_vertices() != n {
        return Err(Error::InvalidBeer(format!(
            "configuration is for {} vertices, graph has {n}",
            bc.num_vertices()
        )));
    }
    Ok(())
}

/// Earliest arrival of a beer walk from `x` at every vertex, [`INF`] where
/// none exists. At a beer vertex `b` itself the value is the first open
/// instant at or after the arrival.
pub fn eabp(
    g: &TemporalGraph,
    x: VertexId,
    w: TimeWindow,
    bc: &BeerConfig,
    variant: Variant,
) -> Result<Vec<Time>> {
    check_inputs(g, x, bc)?;
    let run = |init: &[Time]| match variant {
        Variant::Stream => Ok(mseap_stream(g, w, init)),
        Variant::Adjlist => mseap_adjlist(g, w, init),
    };
    let mut init = vec![INF; g.num_vertices()];
    init[x] = w.t_alpha;
    let reach = run(&init)?;

    init.fill(INF);
    for (slot, &b) in bc.vertices().iter().enumerate() {
        if reach[b] == INF {
            continue;
        }
        let open = first_at_or_after(bc.active_times(slot), reach[b]);
        if open <= w.t_omega {
            init[b] = open;
        }
    }
    run(&init)
}

/// Latest departure from every vertex of a beer walk to `y`, [`NEG_INF`]
/// where none exists.
pub fn ldbp(
    g: &TemporalGraph,
    y: VertexId,
    w: TimeWindow,
    bc: &BeerConfig,
    variant: Variant,
) -> Result<Vec<Time>> {
    check_inputs(g, y, bc)?;
    let run = |fin: &[Time]| match variant {
        Variant::Stream => Ok(mtldp_stream(g, w, fin)),
        Variant::Adjlist => mtldp_adjlist(g, w, fin),
    };
    let mut fin = vec![NEG_INF; g.num_vertices()];
    fin[y] = w.t_omega;
    let reach = run(&fin)?;

    fin.fill(NEG_INF);
    for (slot, &b) in bc.vertices().iter().enumerate() {
        if reach[b] == NEG_INF {
            continue;
        }
        let open = last_at_or_before(bc.active_times(slot), reach[b]);
        if open >= w.t_alpha {
            fin[b] = open;
        }
    }
    run(&fin)
}

/// Minimum duration of a beer walk from `x` to every vertex, [`INF`] where
/// none exists.
///
/// # Panics
/// If `x` is not a vertex of `g` or `bc` was built for another graph size.
pub fn fbp(g: &TemporalGraph, x: VertexId, w: TimeWindow, bc: &BeerConfig) -> Vec<Time> {
    check_inputs(g, x, bc).expect("fbp inputs");
    let n = g.num_vertices();
    let eps = n;
    let frontier = nondom_paths(g, x, w).into_lists();

    // zero-length edges from a dummy source: one per beer stop reachable from x
    let mut dummies: Vec<StreamEdge> = Vec::new();
    for (slot, &b) in bc.vertices().iter().enumerate() {
        let times = bc.active_times(slot);
        if b == x {
            // stopping at x first means the walk only starts at the stop
            dummies.extend(times.iter().filter(|&&t| w.contains(t)).map(|&t| (eps, x, t, 0)));
            continue;
        }
        for &(s, a) in frontier[b].entries() {
            let open = first_at_or_after(times, a);
            if open <= w.t_omega {
                dummies.push((eps, b, s, open - s));
            }
        }
    }
    dummies.sort_by_key(|d| d.2);

    let real = g.edges_asc().iter().map(|e| (e.u, e.v, e.t, e.lambda));
    let mut best = vec![INF; n];
    scan_start_arrival(n + 1, eps, w, merge_by_start(dummies, real), |v, s, a| {
        if v < n {
            best[v] = best[v].min(a - s);
        }
    });
    best
}

/// Merges two start-sorted streams; on equal start the dummy edge goes first
/// so that a walk can leave a beer vertex at the instant it was served.
fn merge_by_start(
    dummies: Vec<StreamEdge>,
    real: impl Iterator<Item = StreamEdge>,
) -> impl Iterator<Item = StreamEdge> {
    let mut dummies = dummies.into_iter().peekable();
    let mut real = real.peekable();
    std::iter::from_fn(move || match (dummies.peek(), real.peek()) {
        (Some(d), Some(r)) if d.2 <= r.2 => dummies.next(),
        (Some(_), None) => dummies.next(),
        _ => real.next(),
    })
}

/// Minimum distance (sum of traversal times) of a beer walk from `x` to `y`,
/// [`INF`] if there is none.
///
/// # Panics
/// If `x` or `y` is not a vertex of `g` or `bc` was built for another graph.
pub fn sbp(g: &TemporalGraph, x: VertexId, y: VertexId, w: TimeWindow, bc: &BeerConfig) -> Time {
    check_inputs(g, x, bc).expect("sbp inputs");
    check_inputs(g, y, bc).expect("sbp inputs");
    let to = dist_nondom_paths(g, x, w);
    let from = inv_dist_nondom_paths(g, y, w);

    let mut best = INF;
    for (slot, &b) in bc.vertices().iter().enumerate() {
        let times = bc.active_times(slot);
        let mut heads = to.pairs(b);
        if b == x {
            heads.push((0, w.t_alpha));
        }
        for (d, a) in heads {
            let open = first_at_or_after(times, a);
            if open > w.t_omega {
                continue;
            }
            let tail = if b == y {
                Some(0)
            } else {
                from.earliest_start_at_least(b, open).map(|(d2, _)| d2)
            };
            if let Some(d2) = tail {
                best = best.min(d + d2);
            }
        }
    }
    best
}
