//! Beer-path objectives and the multi-source / multi-target sweeps they are
//! built from.
//!
//! Earliest-arrival and latest-departure queries come in two flavours that
//! compute the same thing: [`Variant::Stream`] makes single passes over the
//! sorted edge stream and works on any graph, [`Variant::Adjlist`] runs a
//! priority-queue sweep over adjacency lists and requires that dominated
//! edges were removed first.

mod mseap;
mod mtldp;
mod objectives;

use std::fmt;
use std::str::FromStr;

pub use mseap::{mseap_adjlist, mseap_stream};
pub use mtldp::{mtldp_adjlist, mtldp_stream};
pub use objectives::{eabp, fbp, ldbp, sbp};

#[cfg(test)]
pub(crate) use mseap::mseap_stream_observed;
#[cfg(test)]
pub(crate) use mtldp::mtldp_stream_observed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Variant {
    #[default]
    Stream,
    Adjlist,
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stream" => Ok(Self::Stream),
            "adjlist" => Ok(Self::Adjlist),
            other => Err(format!("unknown variant `{other}`, expected stream or adjlist")),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Stream => "stream",
            Self::Adjlist => "adjlist",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tgraph::{BeerConfig, TemporalEdge, TemporalGraph, Time, TimeWindow, INF, NEG_INF};
    use crate::Error;

    fn g1() -> TemporalGraph {
        TemporalGraph::new(
            3,
            vec![
                TemporalEdge::new(0, 1, 1, 2),
                TemporalEdge::new(0, 2, 2, 1),
                TemporalEdge::new(1, 2, 6, 2),
            ],
        )
        .unwrap()
    }

    fn beer(times: Vec<Time>) -> BeerConfig {
        BeerConfig::new(3, vec![(1, times)]).unwrap()
    }

    fn w(a: Time, b: Time) -> TimeWindow {
        TimeWindow::new(a, b).unwrap()
    }

    #[test]
    fn mseap_on_g1() {
        let g = g1();
        for variant in [Variant::Stream, Variant::Adjlist] {
            let run = |init: &[Time]| match variant {
                Variant::Stream => mseap_stream(&g, w(0, 10), init),
                Variant::Adjlist => mseap_adjlist(&g, w(0, 10), init).unwrap(),
            };
            assert_eq!(run(&[0, INF, INF]), vec![0, 3, 3]);
            assert_eq!(run(&[0, 6, INF]), vec![0, 3, 3]);
            assert_eq!(run(&[INF; 3]), vec![INF; 3]);
        }
    }

    #[test]
    fn mtldp_on_g1() {
        let g = g1();
        for variant in [Variant::Stream, Variant::Adjlist] {
            let run = |fin: &[Time]| match variant {
                Variant::Stream => mtldp_stream(&g, w(0, 10), fin),
                Variant::Adjlist => mtldp_adjlist(&g, w(0, 10), fin).unwrap(),
            };
            assert_eq!(run(&[NEG_INF, NEG_INF, 10]), vec![2, 6, 10]);
            assert_eq!(run(&[NEG_INF, NEG_INF, 7]), vec![2, NEG_INF, 7]);
            assert_eq!(run(&[NEG_INF; 3]), vec![NEG_INF; 3]);
        }
    }

    #[test]
    fn adjlist_rejects_dominated_edges() {
        let g = TemporalGraph::new(
            2,
            vec![TemporalEdge::new(0, 1, 2, 5), TemporalEdge::new(0, 1, 3, 3)],
        )
        .unwrap();
        assert!(matches!(
            mseap_adjlist(&g, w(0, 10), &[0, INF]),
            Err(Error::DominatedEdges)
        ));
        assert!(matches!(
            mtldp_adjlist(&g, w(0, 10), &[NEG_INF, 10]),
            Err(Error::DominatedEdges)
        ));
    }

    #[test]
    fn earliest_arrival() {
        let g = g1();
        for v in [Variant::Stream, Variant::Adjlist] {
            assert_eq!(eabp(&g, 0, w(0, 10), &beer(vec![5]), v).unwrap(), vec![INF, 5, 8]);
            assert_eq!(
                eabp(&g, 0, w(0, 7), &beer(vec![5]), v).unwrap(),
                vec![INF, 5, INF]
            );
            assert_eq!(eabp(&g, 0, w(0, 10), &beer(vec![]), v).unwrap(), vec![INF; 3]);
        }
        assert!(eabp(&g, 3, w(0, 10), &beer(vec![5]), Variant::Stream).is_err());
    }

    #[test]
    fn latest_departure() {
        let g = g1();
        for v in [Variant::Stream, Variant::Adjlist] {
            assert_eq!(
                ldbp(&g, 2, w(0, 10), &beer(vec![5]), v).unwrap(),
                vec![1, 5, NEG_INF]
            );
            assert_eq!(ldbp(&g, 2, w(0, 7), &beer(vec![5]), v).unwrap(), vec![NEG_INF; 3]);
            let none = BeerConfig::empty(3);
            assert_eq!(ldbp(&g, 2, w(0, 10), &none, v).unwrap(), vec![NEG_INF; 3]);
        }
    }

    #[test]
    fn fastest() {
        let g = g1();
        assert_eq!(fbp(&g, 0, w(0, 10), &beer(vec![5])), vec![INF, 4, 7]);
        assert_eq!(fbp(&g, 0, w(0, 10), &beer(vec![3]))[2], 7);
        assert_eq!(fbp(&g, 0, w(0, 10), &beer(vec![])), vec![INF; 3]);
        // a beer source is a zero-length beer path to itself
        assert_eq!(fbp(&g, 1, w(0, 10), &beer(vec![5])), vec![INF, 0, 3]);
    }

    #[test]
    fn fastest_starts_at_the_source_stop() {
        // x = 0 is the beer vertex, open at 1 and 3; leaving at 4 after the
        // stop at 3 takes 4 - 3 + 1 = 2
        let g = TemporalGraph::new(2, vec![TemporalEdge::new(0, 1, 4, 1)]).unwrap();
        let bc = BeerConfig::new(2, vec![(0, vec![1, 3])]).unwrap();
        assert_eq!(fbp(&g, 0, w(0, 10), &bc), vec![0, 2]);
        assert_eq!(eabp(&g, 0, w(0, 10), &bc, Variant::Stream).unwrap(), vec![1, 5]);
        assert_eq!(
            ldbp(&g, 1, w(0, 10), &bc, Variant::Stream).unwrap(),
            vec![3, NEG_INF]
        );
    }

    #[test]
    fn shortest() {
        let g = g1();
        assert_eq!(sbp(&g, 0, 2, w(0, 10), &beer(vec![5])), 4);
        assert_eq!(sbp(&g, 0, 2, w(0, 7), &beer(vec![5])), INF);
        assert_eq!(sbp(&g, 2, 0, w(0, 10), &beer(vec![5])), INF);
        assert_eq!(sbp(&g, 0, 1, w(0, 10), &beer(vec![5])), 2);
        assert_eq!(sbp(&g, 1, 1, w(0, 10), &beer(vec![5])), 0);
        assert_eq!(sbp(&g, 1, 2, w(0, 10), &beer(vec![5])), 2);
        assert_eq!(sbp(&g, 1, 2, w(0, 10), &beer(vec![7])), INF);
    }

    #[test]
    fn stream_updates_are_monotone() {
        let g = g1();
        mseap_stream_observed(&g, w(0, 10), &[0, INF, INF], |_, old, new| assert!(new < old));
        mtldp_stream_observed(&g, w(0, 10), &[NEG_INF, NEG_INF, 10], |_, old, new| {
            assert!(new > old)
        });
    }

    #[test]
    fn variant_parsing() {
        assert_eq!("adjlist".parse::<Variant>().unwrap(), Variant::Adjlist);
        assert_eq!(Variant::Stream.to_string(), "stream");
        assert!("heap".parse::<Variant>().is_err());
    }
}
