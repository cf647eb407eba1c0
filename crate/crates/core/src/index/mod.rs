//! Preprocessing for repeated queries.
//!
//! Both schemes use the Boolean activation model: a query switches each beer
//! vertex on or off for its whole window, and an active beer vertex counts as
//! open at every instant. [`NondomIndex`] answers earliest-arrival and
//! latest-departure queries; [`TransformedGraph`] answers fastest and
//! shortest one-to-all queries on a static DAG.

mod dag_query;
mod nondom_index;
mod transform;

pub use dag_query::{fbp_on_dag, fbp_on_dag_counted, sbp_on_dag, sbp_on_dag_counted};
pub use nondom_index::{LegCounters, NondomIndex};
pub use transform::{DagArc, DagNode, Side, TransformedGraph};

use crate::tgraph::{TimeWindow, VertexId};
use crate::{Error, Result};

/// One query against a preprocessed graph. `activation[i]` switches the
/// `i`-th beer vertex (in configuration order) on or off.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Query {
    pub x: VertexId,
    pub y: VertexId,
    pub window: TimeWindow,
    pub activation: Vec<bool>,
}

impl Query {
    pub fn new(x: VertexId, y: VertexId, window: TimeWindow, activation: Vec<bool>) -> Self {
        Self {
            x,
            y,
            window,
            activation,
        }
    }

    pub(crate) fn check(&self, n: usize, k: usize) -> Result<()> {
        for vertex in [self.x, self.y] {
            if vertex >= n {
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        if self.activation.len() != k {
            return Err(Error::ActivationLength {
                expected: k,
                found: self.activation.len(),
            });
        }
        Ok(())
    }
}

/// Parses a mask such as `1,0,1`. An empty string is the empty mask.
pub fn parse_activation(text: &str) -> Result<Vec<bool>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|tok| match tok.trim() {
            "1" | "true" => Ok(true),
            "0" | "false" => Ok(false),
            other => Err(Error::InvalidBeer(format!("bad activation entry `{other}`"))),
        })
        .collect()
}
