use super::for_each_walk;
use crate::tgraph::{TemporalGraph, Time, TimeWindow, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Criterion {
    /// `(start, arrival)` pairs from a source.
    StartArrival,
    /// `(distance, arrival)` pairs from a source.
    DistanceArrival,
    /// `(distance, start)` pairs into a target.
    DistanceStart,
}

/// Non-dominated `(key, value)` pairs, larger key and smaller value better,
/// sorted by key.
fn pareto(mut pairs: Vec<(Time, Time)>) -> Vec<(Time, Time)> {
    // best first: largest key, then smallest value
    pairs.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    let mut out: Vec<(Time, Time)> = Vec::new();
    for (k, v) in pairs {
        if out.last().is_none_or(|&(_, best)| v < best) {
            out.push((k, v));
        }
    }
    out.reverse();
    out
}

/// Reference frontiers by exhaustive enumeration, in the same per-vertex
/// presentation as the `pairs` accessors of the frontier types. For the two
/// forward criteria `v` is the source, for [`Criterion::DistanceStart`] it is
/// the target. The trivial anchor pairs of the scans are included: every
/// departure `t` of the source inside `w` as `(t, t)` resp. `(0, t)`, every
/// arrival `a` at the target as `(0, a)`.
pub fn oracle_frontiers(
    g: &TemporalGraph,
    v: VertexId,
    w: TimeWindow,
    criterion: Criterion,
) -> Vec<Vec<(Time, Time)>> {
    let n = g.num_vertices();
    let mut raw: Vec<Vec<(Time, Time)>> = vec![Vec::new(); n];
    let fitting = g.edges_asc().iter().filter(|e| w.fits(e.t, e.end()));
    match criterion {
        Criterion::StartArrival | Criterion::DistanceArrival => {
            let sa = criterion == Criterion::StartArrival;
            for e in fitting.filter(|e| e.u == v) {
                raw[v].push(if sa { (e.t, e.t) } else { (-e.t, 0) });
            }
            for_each_walk(g, v, w, |edges| {
                let last = edges.last().unwrap();
                let d: Time = edges.iter().map(|e| e.lambda).sum();
                raw[last.v].push(if sa {
                    (edges[0].t, last.end())
                } else {
                    (-last.end(), d)
                });
            });
        }
        Criterion::DistanceStart => {
            for e in fitting.filter(|e| e.v == v) {
                raw[v].push((e.end(), 0));
            }
            for x in 0..n {
                for_each_walk(g, x, w, |edges| {
                    if edges.last().unwrap().v == v {
                        raw[x].push((edges[0].t, edges.iter().map(|e| e.lambda).sum()));
                    }
                });
            }
        }
    }
    raw.into_iter()
        .map(|pairs| {
            let front = pareto(pairs);
            match criterion {
                Criterion::StartArrival => front,
                Criterion::DistanceArrival => front.into_iter().rev().map(|(k, d)| (d, -k)).collect(),
                Criterion::DistanceStart => front.into_iter().map(|(s, d)| (d, s)).collect(),
            }
        })
        .collect()
}
