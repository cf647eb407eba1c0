//! Beer paths on temporal graphs.
//!
//! A temporal edge `(u, v, t, lambda)` can be traversed only by leaving `u`
//! at exactly time `t`, arriving at `v` at `t + lambda`. A *beer vertex* is a
//! point of interest that is open at a set of time instants; a *beer path*
//! has to wait at some beer vertex over an interval that contains one of its
//! open instants.
//!
//! The crate computes four objectives over beer paths inside a time window:
//!
//! - [`beerpath::eabp`]: earliest arrival, one source to all vertices
//! - [`beerpath::ldbp`]: latest departure, all vertices to one target
//! - [`beerpath::fbp`]: minimum duration, one source to all vertices
//! - [`beerpath::sbp`]: minimum distance (sum of traversal times), one pair
//!
//! Two preprocessing schemes answer repeated queries where beer vertices
//! are switched on and off per query: [`index::NondomIndex`] precomputes
//! non-dominated paths to and from every beer vertex, and
//! [`index::TransformedGraph`] turns the temporal graph into a static DAG of
//! time-stamped vertex copies.
//!
//! [`oracle`] enumerates every walk exhaustively and is what the test suite
//! checks all of the above against.
//!
//! ## Endpoint conventions
//!
//! A walk may stop for beer at its first or last vertex. At the first vertex
//! the stop may happen any time in `[t_alpha, t_1]` and the walk is then
//! considered to start at the stop; at the last vertex the stop may happen
//! any time in `[arrival, t_omega]` and the walk ends at the stop. A beer
//! vertex with an open instant in the window is therefore a zero-length beer
//! path to itself.
//!
//! ```
//! use temporal_beer::prelude::*;
//!
//! let g = TemporalGraph::new(3, vec![
//!     TemporalEdge::new(0, 1, 1, 2),
//!     TemporalEdge::new(0, 2, 2, 1),
//!     TemporalEdge::new(1, 2, 6, 2),
//! ]).unwrap();
//! let beer = BeerConfig::new(3, vec![(1, vec![5])]).unwrap();
//! let w = TimeWindow::new(0, 10).unwrap();
//!
//! let arrival = eabp(&g, 0, w, &beer, Variant::Stream).unwrap();
//! assert_eq!(arrival[2], 8);
//! assert_eq!(sbp(&g, 0, 2, w, &beer), 4);
//! ```

pub mod beerpath;
pub mod cli;
mod error;
pub mod index;
pub mod nondom;
pub mod oracle;
pub mod tgraph;

pub use error::{Error, Result};

/// Common imports for applications.
pub mod prelude {
    pub use crate::beerpath::{
        eabp, fbp, ldbp, mseap_adjlist, mseap_stream, mtldp_adjlist, mtldp_stream, sbp, Variant,
    };
    pub use crate::index::{fbp_on_dag, sbp_on_dag, NondomIndex, Query, TransformedGraph};
    pub use crate::nondom::{dist_nondom_paths, inv_dist_nondom_paths, nondom_paths};
    pub use crate::tgraph::{
        format_time, parse_beer_config, parse_edge_stream, write_beer_config, write_edge_stream, BeerConfig,
        TemporalEdge, TemporalGraph, Time, TimeWindow, VertexId, INF, NEG_INF,
    };
    pub use crate::{Error, Result};
}
