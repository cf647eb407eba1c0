use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use crate::tgraph::{BeerConfig, TemporalEdge, TemporalGraph, Time, TimeWindow};

/// Shape of a random instance. With `exact` unset the sizes are upper
/// bounds: the vertex count is drawn from `2..=vertices` and the edge count
/// from `edges/2..=edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceSpec {
    pub seed: u64,
    pub vertices: usize,
    pub edges: usize,
    /// Start times are drawn from `0..=max_time`.
    pub max_time: Time,
    /// Traversal times are drawn from `1..=max_lambda`.
    pub max_lambda: Time,
    pub beer: usize,
    /// Each beer vertex gets up to this many open instants.
    pub max_active: usize,
    /// Remove dominated edges before returning.
    pub prune: bool,
    pub exact: bool,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        Self {
            seed: 1,
            vertices: 8,
            edges: 30,
            max_time: 30,
            max_lambda: 5,
            beer: 3,
            max_active: 4,
            prune: false,
            exact: false,
        }
    }
}

impl InstanceSpec {
    pub fn with_seed(&self, seed: u64) -> Self {
        Self { seed, ..self.clone() }
    }
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: TemporalGraph,
    pub beer: BeerConfig,
}

/// Seeded random instance. The generator is PCG-64 (128-bit LCG state
/// `s' = s * 0x2360ed051fc65da44385df649fccf645 + inc`, XSL-RR output), so a
/// seed always yields the same instance.
///
/// About a fifth of the edges reuse an earlier ordered pair, so parallel and
/// dominated edges show up regularly.
pub fn gen_instance(spec: &InstanceSpec) -> Instance {
    let mut rng = Pcg64::seed_from_u64(spec.seed);
    let pick = |rng: &mut Pcg64, max: usize, min: usize| {
        if spec.exact {
            max
        } else {
            rng.gen_range(min.min(max)..=max)
        }
    };
    let n = pick(&mut rng, spec.vertices.max(1), 2);
    let m = pick(&mut rng, spec.edges, spec.edges / 2);

    let mut edges: Vec<TemporalEdge> = Vec::with_capacity(m);
    for _ in 0..m {
        let (u, v) = match edges.len() {
            len if len > 0 && rng.gen_bool(0.2) => {
                let e = edges[rng.gen_range(0..len)];
                (e.u, e.v)
            }
            _ => (rng.gen_range(0..n), rng.gen_range(0..n)),
        };
        let t = rng.gen_range(0..=spec.max_time);
        let lambda = rng.gen_range(1..=spec.max_lambda.max(1));
        edges.push(TemporalEdge::new(u, v, t, lambda));
    }
    let mut graph = TemporalGraph::new(n, edges).expect("generated edges are valid");
    if spec.prune {
        graph = graph.remove_dominated_edges();
    }

    // mostly at least one beer vertex with at least one open instant, so
    // that most queries have an answer
    let k = if rng.gen_bool(0.1) {
        0
    } else {
        rng.gen_range(1.min(spec.beer)..=spec.beer.min(n))
    };
    let horizon = (spec.max_time + spec.max_lambda).max(0) as usize;
    let entries = sample(&mut rng, n, k)
        .into_iter()
        .map(|b| {
            let most = spec.max_active.min(horizon + 1);
            let c = if rng.gen_bool(0.1) {
                0
            } else {
                rng.gen_range(1.min(most)..=most)
            };
            let mut times: Vec<Time> = sample(&mut rng, horizon + 1, c)
                .into_iter()
                .map(|t| t as Time)
                .collect();
            times.sort_unstable();
            (b, times)
        })
        .collect();
    let beer = BeerConfig::new(n, entries).expect("generated beer vertices are valid");
    Instance { graph, beer }
}

/// Random window inside `[0, horizon]`. Half of the windows are wide,
/// starting in the first quarter and ending in the last.
pub fn random_window(rng: &mut impl Rng, horizon: Time) -> TimeWindow {
    if rng.gen_bool(0.5) {
        let q = horizon / 4;
        return TimeWindow::new(rng.gen_range(0..=q), rng.gen_range(horizon - q..=horizon)).unwrap();
    }
    let a = rng.gen_range(0..=horizon);
    let b = rng.gen_range(0..=horizon);
    TimeWindow::new(a.min(b), a.max(b)).unwrap()
}
