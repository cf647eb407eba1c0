//! Temporal graph data model, file formats and dominated-edge pruning.

mod beer;
mod graph;
mod io;

pub use beer::BeerConfig;
pub use graph::{GraphStats, ParallelEdges, SearchMode, TemporalEdge, TemporalGraph};
pub use io::{parse_beer_config, parse_edge_stream, write_beer_config, write_edge_stream};

pub(crate) use beer::{first_at_or_after, last_at_or_before};
pub(crate) use graph::find_parallel;

use crate::{Error, Result};

/// Vertex ids are dense, `0..n`.
pub type VertexId = usize;

/// Discrete time. Finite values are non-negative; [`INF`] and [`NEG_INF`]
/// mark "never" for minimised and maximised objectives respectively.
pub type Time = i64;

pub const INF: Time = Time::MAX;
pub const NEG_INF: Time = Time::MIN;

/// Renders a time, writing the sentinels as `inf` / `-inf`.
pub fn format_time(t: Time) -> String {
    match t {
        INF => "inf".to_string(),
        NEG_INF => "-inf".to_string(),
        t => t.to_string(),
    }
}

/// Closed interval `[t_alpha, t_omega]` every path must start and end in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TimeWindow {
    pub t_alpha: Time,
    pub t_omega: Time,
}

impl TimeWindow {
    pub fn new(t_alpha: Time, t_omega: Time) -> Result<Self> {
        if t_alpha > t_omega {
            return Err(Error::InvalidWindow { t_alpha, t_omega });
        }
        Ok(Self { t_alpha, t_omega })
    }

    #[inline]
    pub fn contains(&self, t: Time) -> bool {
        self.t_alpha <= t && t <= self.t_omega
    }

    /// Whether an edge departing at `t` and arriving at `end` fits.
    #[inline]
    pub fn fits(&self, t: Time, end: Time) -> bool {
        t >= self.t_alpha && end <= self.t_omega
    }
}
