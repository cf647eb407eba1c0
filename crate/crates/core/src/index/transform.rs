use std::fmt::Write as _;

use crate::tgraph::{TemporalGraph, Time, TimeWindow, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// Arrival copy: some edge reaches the vertex at this time.
    In,
    /// Departure copy: some edge leaves the vertex at this time.
    Out,
}

/// Time-stamped copy of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DagNode {
    pub vertex: VertexId,
    pub time: Time,
    pub side: Side,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DagArc {
    pub to: usize,
    pub weight: Time,
}

/// Static DAG equivalent of a temporal graph.
///
/// Every vertex gets one arrival copy per distinct arrival time and one
/// departure copy per distinct departure time. Arcs of three kinds connect
/// them:
///
/// - each temporal edge `(u, v, t, lambda)` becomes an arc from departure
///   copy `(u, t)` to arrival copy `(v, t + lambda)` of weight `lambda`;
/// - zero-weight chain arcs link consecutive copies of the same vertex and
///   side, earlier to later, which models waiting;
/// - zero-weight connector arcs lead from an arrival copy to the earliest
///   departure copy at the same or a later time. The arrival copies of a
///   vertex are scanned latest first and a departure copy that already has a
///   connector gets no second one: the earlier arrival reaches it through
///   the chain anyway.
///
/// Node ids are a topological order: by time, arrivals before departures.
#[derive(Debug, Clone)]
pub struct TransformedGraph {
    n: usize,
    nodes: Vec<DagNode>,
    arc_start: Vec<usize>,
    arcs: Vec<DagArc>,
    /// Per vertex, node ids of arrival copies by ascending time.
    in_nodes: Vec<Vec<usize>>,
    /// Per vertex, node ids of departure copies by ascending time.
    out_nodes: Vec<Vec<usize>>,
    num_edges: usize,
    connectors: usize,
}

impl TransformedGraph {
    pub fn build(g: &TemporalGraph) -> Self {
        let n = g.num_vertices();
        let mut arr: Vec<Vec<Time>> = vec![Vec::new(); n];
        let mut dep: Vec<Vec<Time>> = vec![Vec::new(); n];
        for e in g.edges_asc() {
            dep[e.u].push(e.t);
            arr[e.v].push(e.end());
        }
        let mut keys = Vec::new();
        for v in 0..n {
            for (times, side) in [(&mut arr[v], Side::In), (&mut dep[v], Side::Out)] {
                times.sort_unstable();
                times.dedup();
                keys.extend(times.iter().map(|&t| (t, side, v)));
            }
        }
        keys.sort_unstable();

        let nodes: Vec<DagNode> = keys
            .iter()
            .map(|&(time, side, vertex)| DagNode { vertex, time, side })
            .collect();
        let mut in_nodes = vec![Vec::new(); n];
        let mut out_nodes = vec![Vec::new(); n];
        for (id, node) in nodes.iter().enumerate() {
            match node.side {
                Side::In => in_nodes[node.vertex].push(id),
                Side::Out => out_nodes[node.vertex].push(id),
            }
        }

        let id_at = |ids: &[usize], t: Time| -> usize { ids[ids.partition_point(|&i| nodes[i].time < t)] };
        let mut triples: Vec<(usize, usize, Time)> = Vec::new();
        for e in g.edges_asc() {
            triples.push((
                id_at(&out_nodes[e.u], e.t),
                id_at(&in_nodes[e.v], e.end()),
                e.lambda,
            ));
        }
        let mut connectors = 0;
        for v in 0..n {
            for ids in [&in_nodes[v], &out_nodes[v]] {
                triples.extend(ids.windows(2).map(|p| (p[0], p[1], 0)));
            }
            let outs = &out_nodes[v];
            let mut last_target = None;
            for &i in in_nodes[v].iter().rev() {
                let k = outs.partition_point(|&o| nodes[o].time < nodes[i].time);
                if k < outs.len() && last_target != Some(k) {
                    triples.push((i, outs[k], 0));
                    last_target = Some(k);
                    connectors += 1;
                }
            }
        }

        // compressed rows, arcs of a node in insertion order
        let mut arc_start = vec![0; nodes.len() + 1];
        for &(from, _, _) in &triples {
            arc_start[from + 1] += 1;
        }
        for i in 0..nodes.len() {
            arc_start[i + 1] += arc_start[i];
        }
        let mut fill = arc_start.clone();
        let mut arcs = vec![DagArc { to: 0, weight: 0 }; triples.len()];
        for (from, to, weight) in triples {
            arcs[fill[from]] = DagArc { to, weight };
            fill[from] += 1;
        }

        Self {
            n,
            nodes,
            arc_start,
            arcs,
            in_nodes,
            out_nodes,
            num_edges: g.num_edges(),
            connectors,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_nodes(&self) -> usize {
        self.nodes.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn num_connectors(&self) -> usize {
        self.connectors
    }

    pub fn nodes(&self) -> &[DagNode] {
        &self.nodes
    }

    pub fn node(&self, id: usize) -> DagNode {
        self.nodes[id]
    }

    pub fn arcs(&self, id: usize) -> &[DagArc] {
        &self.arcs[self.arc_start[id]..self.arc_start[id + 1]]
    }

    pub fn in_nodes(&self, v: VertexId) -> &[usize] {
        &self.in_nodes[v]
    }

    pub fn out_nodes(&self, v: VertexId) -> &[usize] {
        &self.out_nodes[v]
    }

    /// Departure copies of `x` inside `w`, latest first.
    pub fn sources(&self, x: VertexId, w: TimeWindow) -> impl Iterator<Item = usize> + '_ {
        self.out_nodes[x]
            .iter()
            .rev()
            .copied()
            .filter(move |&i| w.contains(self.nodes[i].time))
    }

    /// Checks the structural rules against the graph this was built from.
    pub fn validate(&self, g: &TemporalGraph) -> Result<(), String> {
        let m = g.num_edges();
        if self.num_edges != m || self.n != g.num_vertices() {
            return Err("built from a different graph".into());
        }
        if self.nodes.len() > 2 * m || self.arcs.len() > 4 * m {
            return Err(format!(
                "{} nodes and {} arcs exceed the bounds for {m} edges",
                self.nodes.len(),
                self.arcs.len()
            ));
        }
        let mut weighted = Vec::new();
        let mut connector_in = vec![0usize; self.nodes.len()];
        let mut connector_out = vec![0usize; self.nodes.len()];
        for from in 0..self.nodes.len() {
            let a = self.nodes[from];
            for arc in self.arcs(from) {
                let b = self.nodes[arc.to];
                if arc.to <= from {
                    return Err(format!("arc {from} -> {} breaks the topological order", arc.to));
                }
                match (a.side, b.side, arc.weight) {
                    (Side::Out, Side::In, lambda) if lambda >= 1 => {
                        if b.time != a.time + lambda {
                            return Err(format!("edge arc {from} -> {} has wrong weight", arc.to));
                        }
                        weighted.push((a.vertex, b.vertex, a.time, lambda));
                    }
                    (Side::In, Side::Out, 0) if a.vertex == b.vertex && b.time >= a.time => {
                        connector_out[from] += 1;
                        connector_in[arc.to] += 1;
                    }
                    (sa, sb, 0) if sa == sb && a.vertex == b.vertex => {
                        let ids = self.copies(a.vertex, sa);
                        let p = ids.binary_search(&from).map_err(|_| "missing copy".to_string())?;
                        if ids.get(p + 1) != Some(&arc.to) {
                            return Err(format!("chain arc {from} -> {} skips a copy", arc.to));
                        }
                    }
                    _ => return Err(format!("arc {from} -> {} has no valid kind", arc.to)),
                }
            }
        }
        let mut expected: Vec<_> = g.edges_asc().iter().map(|e| (e.u, e.v, e.t, e.lambda)).collect();
        expected.sort_unstable();
        weighted.sort_unstable();
        if expected != weighted {
            return Err("edge arcs do not match the temporal edges".into());
        }
        if connector_out.iter().chain(&connector_in).any(|&c| c > 1) {
            return Err("a copy has more than one connector".into());
        }
        for v in 0..self.n {
            for &i in &self.in_nodes[v] {
                let has_later_out = self.out_nodes[v]
                    .iter()
                    .any(|&o| self.nodes[o].time >= self.nodes[i].time);
                if has_later_out && connector_out[i] == 0 {
                    // allowed only if the next arrival copy goes to the same place
                    let next = self.in_nodes[v].iter().find(|&&j| j > i);
                    let target = |i: usize| {
                        self.out_nodes[v]
                            .iter()
                            .copied()
                            .find(|&o| self.nodes[o].time >= self.nodes[i].time)
                    };
                    if next.map(|&j| target(j)) != Some(target(i)) {
                        return Err(format!("arrival copy {i} lost its connector"));
                    }
                }
            }
        }
        Ok(())
    }

    fn copies(&self, v: VertexId, side: Side) -> &[usize] {
        match side {
            Side::In => &self.in_nodes[v],
            Side::Out => &self.out_nodes[v],
        }
    }

    /// Plain text: a `dag nodes arcs` header, one `node id vertex time in|out`
    /// line per node and one `arc from to weight` line per arc.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dag {} {}", self.nodes.len(), self.arcs.len());
        for (id, node) in self.nodes.iter().enumerate() {
            let side = if node.side == Side::In { "in" } else { "out" };
            let _ = writeln!(out, "node {id} {} {} {side}", node.vertex, node.time);
        }
        for from in 0..self.nodes.len() {
            for arc in self.arcs(from) {
                let _ = writeln!(out, "arc {from} {} {}", arc.to, arc.weight);
            }
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph dag {\n  rankdir=LR;\n");
        for (id, node) in self.nodes.iter().enumerate() {
            let side = if node.side == Side::In { "in" } else { "out" };
            let _ = writeln!(out, "  n{id} [label=\"{} @{} {side}\"];", node.vertex, node.time);
        }
        for from in 0..self.nodes.len() {
            for arc in self.arcs(from) {
                let style = if arc.weight == 0 { " style=dashed" } else { "" };
                let _ = writeln!(out, "  n{from} -> n{} [label=\"{}\"{style}];", arc.to, arc.weight);
            }
        }
        out.push_str("}\n");
        out
    }
}
