#![allow(dead_code)]

use temporal_beer::oracle::for_each_walk;
use temporal_beer::prelude::*;

pub fn graph(n: usize, edges: &[(usize, usize, Time, Time)]) -> TemporalGraph {
    TemporalGraph::new(
        n,
        edges
            .iter()
            .map(|&(u, v, t, l)| TemporalEdge::new(u, v, t, l))
            .collect(),
    )
    .unwrap()
}

/// x = 0, beer vertex 1 open at 5, y = 2.
pub fn g1() -> TemporalGraph {
    graph(3, &[(0, 1, 1, 2), (0, 2, 2, 1), (1, 2, 6, 2)])
}

pub fn g1_beer(times: Vec<Time>) -> BeerConfig {
    BeerConfig::new(3, vec![(1, times)]).unwrap()
}

pub fn g2() -> TemporalGraph {
    graph(3, &[(0, 1, 1, 1), (1, 2, 3, 1)])
}

pub fn g3() -> TemporalGraph {
    graph(2, &[(0, 1, 2, 5), (0, 1, 3, 3)])
}

pub fn w(a: Time, b: Time) -> TimeWindow {
    TimeWindow::new(a, b).unwrap()
}

/// Brute-force multiple-source earliest arrival.
pub fn brute_mseap(g: &TemporalGraph, w: TimeWindow, init: &[Time]) -> Vec<Time> {
    let mut best = init.to_vec();
    for (u, &t0) in init.iter().enumerate() {
        if t0 > w.t_omega {
            continue;
        }
        let sub = TimeWindow::new(t0, w.t_omega).unwrap();
        for_each_walk(g, u, sub, |edges| {
            let last = edges.last().unwrap();
            best[last.v] = best[last.v].min(last.end());
        });
    }
    best
}

/// Brute-force multiple-target latest departure.
pub fn brute_mtldp(g: &TemporalGraph, w: TimeWindow, fin: &[Time]) -> Vec<Time> {
    let mut best = fin.to_vec();
    for x in 0..g.num_vertices() {
        for_each_walk(g, x, w, |edges| {
            let last = edges.last().unwrap();
            if last.end() <= fin[last.v] {
                best[x] = best[x].max(edges[0].t);
            }
        });
    }
    best
}

/// Configuration in which every vertex is a beer vertex open all of `w`,
/// turning beer walks into plain walks.
pub fn everyone_open(n: usize, w: TimeWindow) -> BeerConfig {
    BeerConfig::new(
        n,
        (0..n).map(|v| (v, (w.t_alpha..=w.t_omega).collect())).collect(),
    )
    .unwrap()
}

/// One reference value: what brute force gives, what the fast code gives,
/// and the pinned expectation.
pub struct Fixture {
    pub name: &'static str,
    pub oracle: String,
    pub computed: String,
    pub pinned: String,
}

impl Fixture {
    pub fn ok(&self) -> bool {
        self.oracle == self.pinned && self.computed == self.pinned
    }
}

fn fx<T: std::fmt::Debug>(name: &'static str, oracle: T, computed: T, pinned: T) -> Fixture {
    Fixture {
        name,
        oracle: format!("{oracle:?}"),
        computed: format!("{computed:?}"),
        pinned: format!("{pinned:?}"),
    }
}

pub fn fixtures() -> Vec<Fixture> {
    use temporal_beer::oracle::{oracle_from, oracle_frontiers, oracle_objectives, Criterion};

    let (g, bc) = (g1(), g1_beer(vec![5]));
    let wide = w(0, 10);
    let sa = |g: &TemporalGraph, x, w| {
        let f = nondom_paths(g, x, w);
        (0..g.num_vertices()).map(|v| f.pairs(v)).collect::<Vec<_>>()
    };
    let da = |g: &TemporalGraph, x, w| {
        let f = dist_nondom_paths(g, x, w);
        (0..g.num_vertices()).map(|v| f.pairs(v)).collect::<Vec<_>>()
    };
    let ds = |g: &TemporalGraph, y, w| {
        let f = inv_dist_nondom_paths(g, y, w);
        (0..g.num_vertices()).map(|v| f.pairs(v)).collect::<Vec<_>>()
    };
    let ld = |w| {
        (0..3)
            .map(|x| oracle_objectives(&g, x, 2, w, &bc).ldbp)
            .collect::<Vec<_>>()
    };
    let open = |a, b| bc.with_activation(&[true], w(a, b)).unwrap();
    let ix = NondomIndex::build(&g, &bc);
    let q = |a, b| Query::new(0, 2, w(a, b), vec![true]);
    let tg = TransformedGraph::build(&g);
    let dagq = Query::new(0, 2, wide, vec![true]);
    let pruned = g3().remove_dominated_edges();

    vec![
        fx("G1 c", 2, g.stats().c, 2),
        fx(
            "G3 pruned",
            vec![TemporalEdge::new(0, 1, 3, 3)],
            pruned.edges_asc().to_vec(),
            vec![TemporalEdge::new(0, 1, 3, 3)],
        ),
        fx(
            "G1 sa from 0",
            oracle_frontiers(&g, 0, wide, Criterion::StartArrival),
            sa(&g, 0, wide),
            vec![vec![(1, 1), (2, 2)], vec![(1, 3)], vec![(2, 3)]],
        ),
        fx(
            "G1 sa from 0 in [4,10]",
            oracle_frontiers(&g, 0, w(4, 10), Criterion::StartArrival),
            sa(&g, 0, w(4, 10)),
            vec![vec![]; 3],
        ),
        fx(
            "G1 da from 0",
            oracle_frontiers(&g, 0, wide, Criterion::DistanceArrival)[1..].to_vec(),
            da(&g, 0, wide)[1..].to_vec(),
            vec![vec![(2, 3)], vec![(1, 3)]],
        ),
        fx(
            "G2 da from 0",
            oracle_frontiers(&g2(), 0, wide, Criterion::DistanceArrival)[2].clone(),
            da(&g2(), 0, wide)[2].clone(),
            vec![(2, 4)],
        ),
        fx(
            "G1 ds into 2",
            oracle_frontiers(&g, 2, wide, Criterion::DistanceStart),
            ds(&g, 2, wide),
            vec![vec![(1, 2)], vec![(2, 6)], vec![(0, 8)]],
        ),
        fx(
            "G2 ds into 2",
            oracle_frontiers(&g2(), 2, wide, Criterion::DistanceStart),
            ds(&g2(), 2, wide),
            vec![vec![(2, 1)], vec![(1, 3)], vec![(0, 4)]],
        ),
        fx(
            "G1 mseap",
            brute_mseap(&g, wide, &[0, INF, INF]),
            mseap_stream(&g, wide, &[0, INF, INF]),
            vec![0, 3, 3],
        ),
        fx(
            "G1 mseap two sources",
            brute_mseap(&g, wide, &[0, 6, INF]),
            mseap_stream(&g, wide, &[0, 6, INF]),
            vec![0, 3, 3],
        ),
        fx(
            "G1 mtldp",
            brute_mtldp(&g, wide, &[NEG_INF, NEG_INF, 10]),
            mtldp_stream(&g, wide, &[NEG_INF, NEG_INF, 10]),
            vec![2, 6, 10],
        ),
        fx(
            "G1 mtldp by 7",
            brute_mtldp(&g, wide, &[NEG_INF, NEG_INF, 7]),
            mtldp_stream(&g, wide, &[NEG_INF, NEG_INF, 7]),
            vec![2, NEG_INF, 7],
        ),
        fx(
            "G1 eabp",
            oracle_from(&g, 0, wide, &bc).eabp,
            eabp(&g, 0, wide, &bc, Variant::Stream).unwrap(),
            vec![INF, 5, 8],
        ),
        fx(
            "G1 eabp in [0,7]",
            oracle_from(&g, 0, w(0, 7), &bc).eabp[1..].to_vec(),
            eabp(&g, 0, w(0, 7), &bc, Variant::Stream).unwrap()[1..].to_vec(),
            vec![5, INF],
        ),
        fx(
            "G1 ldbp",
            ld(wide),
            ldbp(&g, 2, wide, &bc, Variant::Stream).unwrap(),
            vec![1, 5, NEG_INF],
        ),
        fx(
            "G1 ldbp in [0,7]",
            ld(w(0, 7)),
            ldbp(&g, 2, w(0, 7), &bc, Variant::Stream).unwrap(),
            vec![NEG_INF; 3],
        ),
        fx(
            "G1 fbp",
            oracle_from(&g, 0, wide, &bc).fbp[1..].to_vec(),
            fbp(&g, 0, wide, &bc)[1..].to_vec(),
            vec![4, 7],
        ),
        fx(
            "G1 fbp open at 3",
            oracle_objectives(&g, 0, 2, wide, &g1_beer(vec![3])).fbp,
            fbp(&g, 0, wide, &g1_beer(vec![3]))[2],
            7,
        ),
        fx(
            "G1 sbp",
            oracle_objectives(&g, 0, 2, wide, &bc).sbp,
            sbp(&g, 0, 2, wide, &bc),
            4,
        ),
        fx(
            "G1 sbp in [0,7]",
            oracle_objectives(&g, 0, 2, w(0, 7), &bc).sbp,
            sbp(&g, 0, 2, w(0, 7), &bc),
            INF,
        ),
        fx(
            "G1 index to beer",
            oracle_frontiers(&g, 0, w(0, ix.horizon()), Criterion::StartArrival)[1].clone(),
            ix.to_beer(0, 0).to_vec(),
            vec![(1, 3)],
        ),
        fx(
            "G1 index from beer",
            oracle_frontiers(&g, 1, w(0, ix.horizon()), Criterion::StartArrival)[2].clone(),
            ix.from_beer(0, 2).to_vec(),
            vec![(6, 8)],
        ),
        fx(
            "G1 index eabp",
            oracle_from(&g, 0, wide, &open(0, 10)).eabp[2],
            ix.query_eabp(&q(0, 10)).unwrap(),
            8,
        ),
        fx(
            "G1 index eabp in [2,10]",
            oracle_from(&g, 0, w(2, 10), &open(2, 10)).eabp[2],
            ix.query_eabp(&q(2, 10)).unwrap(),
            INF,
        ),
        fx(
            "G1 index ldbp",
            oracle_from(&g, 0, wide, &open(0, 10)).ldbp[2],
            ix.query_ldbp(&q(0, 10)).unwrap(),
            1,
        ),
        fx(
            "G1 index ldbp in [0,7]",
            oracle_from(&g, 0, w(0, 7), &open(0, 7)).ldbp[2],
            ix.query_ldbp(&q(0, 7)).unwrap(),
            NEG_INF,
        ),
        fx(
            "G2 DAG size",
            (4, 3),
            {
                let t = TransformedGraph::build(&g2());
                (t.num_nodes(), t.num_arcs())
            },
            (4, 3),
        ),
        // 3 edge arcs, 1 connector, 2 chain arcs
        fx(
            "G1 DAG size",
            (6, 3 + 1 + 2),
            (tg.num_nodes(), tg.num_arcs()),
            (6, 6),
        ),
        fx(
            "G1 fbp on DAG",
            oracle_from(&g, 0, wide, &open(0, 10)).fbp,
            fbp_on_dag(&tg, &bc, &dagq).unwrap(),
            vec![INF, 2, 7],
        ),
        fx(
            "G1 sbp on DAG",
            oracle_from(&g, 0, wide, &open(0, 10)).sbp,
            sbp_on_dag(&tg, &bc, &dagq).unwrap(),
            vec![INF, 2, 4],
        ),
        fx(
            "G1 walks",
            3,
            temporal_beer::oracle::enumerate_beer_walks(&g, 0, wide, &bc).len(),
            3,
        ),
    ]
}
