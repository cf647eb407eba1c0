use std::collections::VecDeque;

use super::{Query, TransformedGraph};
use crate::tgraph::{BeerConfig, Time, INF};
use crate::{Error, Result};

fn active_vertices(tg: &TransformedGraph, bc: &BeerConfig, q: &Query) -> Result<Vec<bool>> {
    let n = tg.num_vertices();
    if bc.num_vertices() != n {
        return Err(Error::InvalidBeer(format!(
            "configuration is for {} vertices, graph has {n}",
            bc.num_vertices()
        )));
    }
    q.check(n, bc.len())?;
    Ok((0..n)
        .map(|v| bc.slot(v).is_some_and(|s| q.activation[s]))
        .collect())
}

/// Minimum duration of a beer walk from `q.x` to every vertex under the
/// activation model. `q.y` is ignored.
pub fn fbp_on_dag(tg: &TransformedGraph, bc: &BeerConfig, q: &Query) -> Result<Vec<Time>> {
    fbp_on_dag_counted(tg, bc, q, &mut Vec::new())
}

/// [`fbp_on_dag`] that also reports, per DAG node, how often its flag was
/// raised. No node is raised more than twice.
pub fn fbp_on_dag_counted(
    tg: &TransformedGraph,
    bc: &BeerConfig,
    q: &Query,
    raised: &mut Vec<u32>,
) -> Result<Vec<Time>> {
    fbp_traverse(tg, bc, q, raised, false)
}

// `lifo` swaps the queue for a stack; answers must not depend on it
fn fbp_traverse(
    tg: &TransformedGraph,
    bc: &BeerConfig,
    q: &Query,
    raised: &mut Vec<u32>,
    lifo: bool,
) -> Result<Vec<Time>> {
    let active = active_vertices(tg, bc, q)?;
    let w = q.window;
    let mut best = vec![INF; tg.num_vertices()];
    if active[q.x] {
        best[q.x] = 0;
    }
    let seed = if active[q.x] { 2 } else { 1 };

    // 0 unvisited, 1 reached, 2 reached with beer
    let mut flag = vec![0u8; tg.num_nodes()];
    raised.clear();
    raised.resize(tg.num_nodes(), 0);
    let mut queue = VecDeque::new();

    // latest source first: whatever it reaches, it reaches fastest
    for src in tg.sources(q.x, w) {
        if flag[src] >= seed {
            continue;
        }
        let start = tg.node(src).time;
        flag[src] = seed;
        raised[src] += 1;
        queue.push_back((src, seed));
        while let Some((u, f)) = if lifo { queue.pop_back() } else { queue.pop_front() } {
            if flag[u] != f {
                continue;
            }
            for arc in tg.arcs(u) {
                let node = tg.node(arc.to);
                if node.time > w.t_omega {
                    continue;
                }
                let g = if active[node.vertex] { 2 } else { f };
                if flag[arc.to] >= g {
                    continue;
                }
                flag[arc.to] = g;
                raised[arc.to] += 1;
                if g == 2 {
                    let d = node.time - start;
                    best[node.vertex] = best[node.vertex].min(d);
                }
                queue.push_back((arc.to, g));
            }
        }
    }
    Ok(best)
}

/// Minimum distance of a beer walk from `q.x` to every vertex under the
/// activation model. `q.y` is ignored.
pub fn sbp_on_dag(tg: &TransformedGraph, bc: &BeerConfig, q: &Query) -> Result<Vec<Time>> {
    sbp_on_dag_counted(tg, bc, q, &mut Vec::new())
}

/// [`sbp_on_dag`] that also reports, per DAG node, how many of its two
/// states (without and with beer) were settled.
pub fn sbp_on_dag_counted(
    tg: &TransformedGraph,
    bc: &BeerConfig,
    q: &Query,
    settled: &mut Vec<u32>,
) -> Result<Vec<Time>> {
    let active = active_vertices(tg, bc, q)?;
    let w = q.window;
    let mut best = vec![INF; tg.num_vertices()];
    if active[q.x] {
        best[q.x] = 0;
    }
    let seed = usize::from(active[q.x]);

    // dist[node][0]: no beer yet, dist[node][1]: beer taken
    let mut dist = vec![[INF; 2]; tg.num_nodes()];
    for src in tg.sources(q.x, w) {
        dist[src][seed] = 0;
    }
    settled.clear();
    settled.resize(tg.num_nodes(), 0);

    // node ids are topological, so one forward sweep settles every state
    for u in 0..tg.num_nodes() {
        for layer in 0..2 {
            let d = dist[u][layer];
            if d == INF {
                continue;
            }
            settled[u] += 1;
            if layer == 1 {
                let v = tg.node(u).vertex;
                best[v] = best[v].min(d);
            }
            for arc in tg.arcs(u) {
                let node = tg.node(arc.to);
                if node.time > w.t_omega {
                    continue;
                }
                let next = if active[node.vertex] { 1 } else { layer };
                let slot = &mut dist[arc.to][next];
                *slot = (*slot).min(d + arc.weight);
            }
        }
    }
    Ok(best)
}
