use crate::tgraph::{BeerConfig, TemporalEdge, TemporalGraph, Time, TimeWindow, VertexId, INF, NEG_INF};

/// One walk found by exhaustive search, with the best that a beer stop on it
/// can achieve for each objective.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkRecord {
    pub origin: VertexId,
    pub target: VertexId,
    /// Empty for the zero-length walk at an open beer vertex.
    pub edges: Vec<TemporalEdge>,
    pub start: Time,
    pub end: Time,
    /// Sum of traversal times.
    pub distance: Time,
    pub beer_ok: bool,
    /// Latest start over all valid beer stops.
    pub beer_start: Option<Time>,
    /// Earliest end over all valid beer stops.
    pub beer_end: Option<Time>,
    /// Smallest `end - start` over all valid beer stops.
    pub beer_duration: Option<Time>,
}

/// Calls `f` on every non-empty walk from `x` that starts and ends inside
/// `w`. Terminates because every traversal takes at least one time unit.
pub fn for_each_walk(g: &TemporalGraph, x: VertexId, w: TimeWindow, mut f: impl FnMut(&[TemporalEdge])) {
    let mut out: Vec<Vec<TemporalEdge>> = vec![Vec::new(); g.num_vertices()];
    for e in g.edges_asc() {
        if w.fits(e.t, e.end()) {
            out[e.u].push(*e);
        }
    }
    let mut walk = Vec::new();
    extend(&out, x, w.t_alpha, &mut walk, &mut f);
}

fn extend(
    out: &[Vec<TemporalEdge>],
    u: VertexId,
    ready: Time,
    walk: &mut Vec<TemporalEdge>,
    f: &mut impl FnMut(&[TemporalEdge]),
) {
    let edges = &out[u];
    for e in &edges[edges.partition_point(|e| e.t < ready)..] {
        walk.push(*e);
        f(walk);
        extend(out, e.v, e.end(), walk, f);
        walk.pop();
    }
}

/// Smallest and largest open instant of `v` inside `[lo, hi]`.
fn open_between(bc: &BeerConfig, v: VertexId, lo: Time, hi: Time) -> Option<(Time, Time)> {
    let times = bc.active_times(bc.slot(v)?);
    let i = times.partition_point(|&t| t < lo);
    let j = times.partition_point(|&t| t <= hi);
    (i < j).then(|| (times[i], times[j - 1]))
}

/// Scores a non-empty walk. Stops may happen at the first vertex in
/// `[t_alpha, t_1]` (the walk then starts at the stop), between consecutive
/// edges, or at the last vertex in `[arrival, t_omega]` (the walk then ends at
/// the stop).
pub fn score_walk(edges: &[TemporalEdge], w: TimeWindow, bc: &BeerConfig) -> WalkRecord {
    let first = edges[0];
    let last = *edges.last().unwrap();
    let (t1, arrival) = (first.t, last.end());

    let at_first = open_between(bc, first.u, w.t_alpha, t1);
    let inside = edges
        .windows(2)
        .any(|p| open_between(bc, p[0].v, p[0].end(), p[1].t).is_some());
    let at_last = open_between(bc, last.v, arrival, w.t_omega);

    let beer_ok = inside || at_first.is_some() || at_last.is_some();
    let beer_end = if inside || at_first.is_some() {
        Some(arrival)
    } else {
        at_last.map(|o| o.0)
    };
    let beer_start = if inside || at_last.is_some() {
        Some(t1)
    } else {
        at_first.map(|o| o.1)
    };
    let beer_duration = if inside {
        Some(arrival - t1)
    } else {
        [at_first.map(|o| arrival - o.1), at_last.map(|o| o.0 - t1)]
            .into_iter()
            .flatten()
            .min()
    };
    WalkRecord {
        origin: first.u,
        target: last.v,
        edges: edges.to_vec(),
        start: t1,
        end: arrival,
        distance: edges.iter().map(|e| e.lambda).sum(),
        beer_ok,
        beer_start,
        beer_end,
        beer_duration,
    }
}

/// The zero-length walk at `x`, if `x` is a beer vertex open inside `w`.
pub fn trivial_walk(x: VertexId, w: TimeWindow, bc: &BeerConfig) -> Option<WalkRecord> {
    let (lo, hi) = open_between(bc, x, w.t_alpha, w.t_omega)?;
    Some(WalkRecord {
        origin: x,
        target: x,
        edges: Vec::new(),
        start: lo,
        end: lo,
        distance: 0,
        beer_ok: true,
        beer_start: Some(hi),
        beer_end: Some(lo),
        beer_duration: Some(0),
    })
}

/// Every walk from `x` inside `w`, scored, including the zero-length walk
/// when `x` is an open beer vertex.
pub fn enumerate_beer_walks(
    g: &TemporalGraph,
    x: VertexId,
    w: TimeWindow,
    bc: &BeerConfig,
) -> Vec<WalkRecord> {
    let mut walks: Vec<_> = trivial_walk(x, w, bc).into_iter().collect();
    for_each_walk(g, x, w, |edges| walks.push(score_walk(edges, w, bc)));
    walks
}

/// Optimal values of the four objectives for one source and every target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OneToAll {
    pub eabp: Vec<Time>,
    pub ldbp: Vec<Time>,
    pub fbp: Vec<Time>,
    pub sbp: Vec<Time>,
}

/// Reference optima over all beer walks from `x`, one entry per target.
/// Here `ldbp[y]` is the latest departure from `x` towards `y`.
pub fn oracle_from(g: &TemporalGraph, x: VertexId, w: TimeWindow, bc: &BeerConfig) -> OneToAll {
    let n = g.num_vertices();
    let mut r = OneToAll {
        eabp: vec![INF; n],
        ldbp: vec![NEG_INF; n],
        fbp: vec![INF; n],
        sbp: vec![INF; n],
    };
    let mut take = |rec: &WalkRecord| {
        if !rec.beer_ok {
            return;
        }
        let y = rec.target;
        r.eabp[y] = r.eabp[y].min(rec.beer_end.unwrap());
        r.ldbp[y] = r.ldbp[y].max(rec.beer_start.unwrap());
        r.fbp[y] = r.fbp[y].min(rec.beer_duration.unwrap());
        r.sbp[y] = r.sbp[y].min(rec.distance);
    };
    if let Some(rec) = trivial_walk(x, w, bc) {
        take(&rec);
    }
    for_each_walk(g, x, w, |edges| take(&score_walk(edges, w, bc)));
    r
}

/// `(eabp, ldbp, fbp, sbp)` optima from `x` to `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Objectives {
    pub eabp: Time,
    pub ldbp: Time,
    pub fbp: Time,
    pub sbp: Time,
}

pub fn oracle_objectives(
    g: &TemporalGraph,
    x: VertexId,
    y: VertexId,
    w: TimeWindow,
    bc: &BeerConfig,
) -> Objectives {
    let r = oracle_from(g, x, w, bc);
    Objectives {
        eabp: r.eabp[y],
        ldbp: r.ldbp[y],
        fbp: r.fbp[y],
        sbp: r.sbp[y],
    }
}

/// Reference optima for every source: `table[x]` is [`oracle_from`] of `x`.
pub fn oracle_table(g: &TemporalGraph, w: TimeWindow, bc: &BeerConfig) -> Vec<OneToAll> {
    (0..g.num_vertices()).map(|x| oracle_from(g, x, w, bc)).collect()
}
