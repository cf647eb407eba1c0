//! Hand-checkable values on the three small reference graphs. Each value is
//! first reproduced by brute force, then pinned against the fast algorithm.

mod common;

use common::*;
use temporal_beer::index::LegCounters;
use temporal_beer::oracle::{self, oracle_frontiers, oracle_objectives, Criterion};
use temporal_beer::prelude::*;
use temporal_beer::tgraph::SearchMode;

#[test]
fn g1_graph_stats() {
    let s = g1().stats();
    assert_eq!(
        (g1().num_vertices(), s.edges, s.connected_pairs, s.max_parallel),
        (3, 3, 3, 1)
    );
    // vertex 0 has two outgoing edges, vertex 2 two incoming ones
    assert_eq!(s.c, 2);
    assert_eq!(
        g1().parallel_edge_search(1, 2, SearchMode::MaxEndAtMost, 8),
        Some(TemporalEdge::new(1, 2, 6, 2))
    );
}

#[test]
fn g3_pruning() {
    let p = g3().remove_dominated_edges();
    assert_eq!(p.edges_asc(), &[TemporalEdge::new(0, 1, 3, 3)]);
    assert_eq!(
        p.parallel_edge_search(0, 1, SearchMode::MinStartAtLeast, 3),
        Some(TemporalEdge::new(0, 1, 3, 3))
    );
    assert_eq!(p.parallel_edge_search(0, 1, SearchMode::MinStartAtLeast, 4), None);
}

#[test]
fn start_arrival_frontiers() {
    let want = vec![vec![(1, 1), (2, 2)], vec![(1, 3)], vec![(2, 3)]];
    assert_eq!(
        oracle_frontiers(&g1(), 0, w(0, 10), Criterion::StartArrival),
        want
    );
    let f = nondom_paths(&g1(), 0, w(0, 10));
    assert_eq!((0..3).map(|v| f.pairs(v)).collect::<Vec<_>>(), want);

    let late = oracle_frontiers(&g1(), 0, w(4, 10), Criterion::StartArrival);
    assert!(late.iter().all(Vec::is_empty));
    let f = nondom_paths(&g1(), 0, w(4, 10));
    assert!((0..3).all(|v| f.pairs(v).is_empty()));
}

#[test]
fn distance_arrival_frontiers() {
    let want = oracle_frontiers(&g1(), 0, w(0, 10), Criterion::DistanceArrival);
    assert_eq!((want[1].clone(), want[2].clone()), (vec![(2, 3)], vec![(1, 3)]));
    let f = dist_nondom_paths(&g1(), 0, w(0, 10));
    assert_eq!((f.pairs(1), f.pairs(2)), (vec![(2, 3)], vec![(1, 3)]));

    assert_eq!(
        oracle_frontiers(&g2(), 0, w(0, 10), Criterion::DistanceArrival)[2],
        vec![(2, 4)]
    );
    assert_eq!(dist_nondom_paths(&g2(), 0, w(0, 10)).pairs(2), vec![(2, 4)]);
}

#[test]
fn distance_start_frontiers() {
    for (g, want) in [
        (g1(), vec![vec![(1, 2)], vec![(2, 6)], vec![(0, 8)]]),
        (g2(), vec![vec![(2, 1)], vec![(1, 3)], vec![(0, 4)]]),
    ] {
        assert_eq!(oracle_frontiers(&g, 2, w(0, 10), Criterion::DistanceStart), want);
        let f = inv_dist_nondom_paths(&g, 2, w(0, 10));
        assert_eq!((0..3).map(|v| f.pairs(v)).collect::<Vec<_>>(), want);
    }
}

#[test]
fn mseap_and_mtldp() {
    let g = g1();
    for init in [[0, INF, INF], [0, 6, INF]] {
        let want = brute_mseap(&g, w(0, 10), &init);
        assert_eq!(want, vec![0, 3, 3]);
        assert_eq!(mseap_stream(&g, w(0, 10), &init), want);
        assert_eq!(mseap_adjlist(&g, w(0, 10), &init).unwrap(), want);
    }
    for (fin, pinned) in [
        ([NEG_INF, NEG_INF, 10], [2, 6, 10]),
        ([NEG_INF, NEG_INF, 7], [2, NEG_INF, 7]),
    ] {
        let want = brute_mtldp(&g, w(0, 10), &fin);
        assert_eq!(want, pinned);
        assert_eq!(mtldp_stream(&g, w(0, 10), &fin), want);
        assert_eq!(mtldp_adjlist(&g, w(0, 10), &fin).unwrap(), want);
    }
}

#[test]
fn objectives_on_g1() {
    let (g, bc) = (g1(), g1_beer(vec![5]));
    let o = oracle_objectives(&g, 0, 2, w(0, 10), &bc);
    assert_eq!((o.eabp, o.ldbp, o.fbp, o.sbp), (8, 1, 7, 4));
    assert_eq!(oracle_objectives(&g, 0, 1, w(0, 10), &bc).eabp, 5);

    let from = oracle::oracle_from(&g, 0, w(0, 10), &bc);
    assert_eq!(from.eabp, vec![INF, 5, 8]);
    assert_eq!(eabp(&g, 0, w(0, 10), &bc, Variant::Stream).unwrap(), from.eabp);
    assert_eq!(from.fbp[1..], [4, 7]);
    assert_eq!(fbp(&g, 0, w(0, 10), &bc)[1..], [4, 7]);
    assert_eq!(sbp(&g, 0, 2, w(0, 10), &bc), 4);

    let capped = oracle::oracle_from(&g, 0, w(0, 7), &bc);
    assert_eq!((capped.eabp[1], capped.eabp[2], capped.sbp[2]), (5, INF, INF));
    assert_eq!(eabp(&g, 0, w(0, 7), &bc, Variant::Stream).unwrap()[1..], [5, INF]);
    assert_eq!(sbp(&g, 0, 2, w(0, 7), &bc), INF);

    let ld: Vec<Time> = (0..3)
        .map(|x| oracle_objectives(&g, x, 2, w(0, 10), &bc).ldbp)
        .collect();
    assert_eq!(ld, vec![1, 5, NEG_INF]);
    assert_eq!(ldbp(&g, 2, w(0, 10), &bc, Variant::Stream).unwrap(), ld);
    let ld: Vec<Time> = (0..3)
        .map(|x| oracle_objectives(&g, x, 2, w(0, 7), &bc).ldbp)
        .collect();
    assert_eq!(ld, vec![NEG_INF; 3]);
    assert_eq!(ldbp(&g, 2, w(0, 7), &bc, Variant::Stream).unwrap(), ld);

    // open at the arrival instant: the walk still waits until 6
    let early = g1_beer(vec![3]);
    assert_eq!(oracle_objectives(&g, 0, 2, w(0, 10), &early).fbp, 7);
    assert_eq!(fbp(&g, 0, w(0, 10), &early)[2], 7);
}

#[test]
fn g1_walks() {
    let walks = oracle::enumerate_beer_walks(&g1(), 0, w(0, 10), &g1_beer(vec![5]));
    assert_eq!(walks.len(), 3);
    assert_eq!(walks.iter().filter(|r| r.beer_ok).count(), 2);
    assert!(oracle::enumerate_beer_walks(&g1(), 0, w(9, 10), &g1_beer(vec![5])).is_empty());
}

#[test]
fn index_on_g1() {
    let (g, bc) = (g1(), g1_beer(vec![5]));
    let ix = NondomIndex::build(&g, &bc);
    let full = w(0, ix.horizon());
    assert_eq!(
        oracle_frontiers(&g, 0, full, Criterion::StartArrival)[1],
        vec![(1, 3)]
    );
    assert_eq!(ix.to_beer(0, 0), &[(1, 3)]);
    let from_b = oracle_frontiers(&g, 1, full, Criterion::StartArrival);
    assert_eq!((from_b[2].clone(), from_b[0].clone()), (vec![(6, 8)], vec![]));
    assert_eq!((ix.from_beer(0, 2), ix.from_beer(0, 0)), (&[(6, 8)][..], &[][..]));

    let q = |a, b, on| Query::new(0, 2, w(a, b), vec![on]);
    let open = |a, b| g1_beer(vec![]).with_activation(&[true], w(a, b)).unwrap();
    for (a, b, pinned) in [(0, 10, 8), (2, 10, INF)] {
        assert_eq!(oracle_objectives(&g, 0, 2, w(a, b), &open(a, b)).eabp, pinned);
        assert_eq!(ix.query_eabp(&q(a, b, true)).unwrap(), pinned);
    }
    for (a, b, pinned) in [(0, 10, 1), (0, 7, NEG_INF)] {
        assert_eq!(oracle_objectives(&g, 0, 2, w(a, b), &open(a, b)).ldbp, pinned);
        assert_eq!(ix.query_ldbp(&q(a, b, true)).unwrap(), pinned);
    }
    assert_eq!(ix.query_eabp(&q(0, 10, false)).unwrap(), INF);
    assert_eq!(ix.query_ldbp(&q(0, 10, false)).unwrap(), NEG_INF);

    let mut c = LegCounters::default();
    ix.query_ldbp_counted(&q(0, 10, true), &mut c).unwrap();
    assert!(c.first <= 1 && c.second <= 1);
}

#[test]
fn dag_on_g1_and_g2() {
    let tg = TransformedGraph::build(&g2());
    assert_eq!((tg.num_nodes(), tg.num_arcs()), (4, 3));

    let tg = TransformedGraph::build(&g1());
    tg.validate(&g1()).unwrap();
    assert_eq!(tg.num_nodes(), 6);
    // three edge arcs, one connector, two chain arcs
    assert_eq!(tg.num_arcs(), 6);

    let bc = g1_beer(vec![5]);
    let q = Query::new(0, 2, w(0, 10), vec![true]);
    let open = bc.with_activation(&[true], w(0, 10)).unwrap();
    let brute = oracle::oracle_from(&g1(), 0, w(0, 10), &open);
    assert_eq!(brute.fbp, vec![INF, 2, 7]);
    assert_eq!(fbp_on_dag(&tg, &bc, &q).unwrap(), brute.fbp);
    assert_eq!(brute.sbp, vec![INF, 2, 4]);
    assert_eq!(sbp_on_dag(&tg, &bc, &q).unwrap(), brute.sbp);

    let off = Query::new(0, 2, w(0, 10), vec![false]);
    assert_eq!(fbp_on_dag(&tg, &bc, &off).unwrap(), vec![INF; 3]);
    assert_eq!(sbp_on_dag(&tg, &bc, &off).unwrap(), vec![INF; 3]);
}

#[test]
fn generator_is_seeded() {
    use temporal_beer::oracle::{gen_instance, InstanceSpec};
    let a = gen_instance(&InstanceSpec::default());
    let b = gen_instance(&InstanceSpec::default());
    let c = gen_instance(&InstanceSpec::default().with_seed(2));
    assert_eq!(a.graph.edges_asc(), b.graph.edges_asc());
    assert_ne!(a.graph.edges_asc(), c.graph.edges_asc());
}

#[test]
fn reference_table() {
    for f in fixtures() {
        assert!(
            f.ok(),
            "{}: oracle {}, computed {}, pinned {}",
            f.name,
            f.oracle,
            f.computed,
            f.pinned
        );
    }
}
