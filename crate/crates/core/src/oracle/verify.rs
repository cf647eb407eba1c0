//! Cross-checks of every algorithm against the oracle on a random corpus.

use std::fmt;
use std::ops::Range;

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64;

use super::{gen_instance, oracle_frontiers, oracle_table, random_window, Criterion, Instance, InstanceSpec};
use crate::beerpath::{
    eabp, fbp, ldbp, mseap_adjlist, mseap_stream, mtldp_adjlist, mtldp_stream, sbp, Variant,
};
use crate::index::{
    fbp_on_dag_counted, sbp_on_dag_counted, LegCounters, NondomIndex, Query, TransformedGraph,
};
use crate::nondom::{dist_nondom_paths, inv_dist_nondom_paths, nondom_paths};
use crate::tgraph::{BeerConfig, TemporalGraph, Time, TimeWindow, INF, NEG_INF};

/// Outcome of one property over a corpus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// Compared values that were finite or non-empty, as a measure of how
    /// much the corpus actually exercised.
    pub finite: usize,
    /// Description of the first failing case.
    pub first_failure: Option<String>,
}

impl Report {
    pub fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            failures: 0,
            finite: 0,
            first_failure: None,
        }
    }

    pub fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(detail());
            }
        }
    }

    /// Counts the finite entries of a compared result.
    pub fn note(&mut self, values: &[Time]) {
        self.finite += values.iter().filter(|&&t| t != INF && t != NEG_INF).count();
    }

    pub fn passed(&self) -> bool {
        self.failures == 0 && self.cases > 0
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(
                f,
                "PASS {}: {} cases, {} finite values",
                self.name, self.cases, self.finite
            )
        } else {
            write!(
                f,
                "FAIL {}: {} of {} cases failed",
                self.name, self.failures, self.cases
            )?;
            if let Some(d) = &self.first_failure {
                write!(f, "; first: {d}")?;
            }
            Ok(())
        }
    }
}

/// Seeds `seeds`, `per_seed` instances each, all shaped like `spec`.
#[derive(Debug, Clone)]
pub struct Corpus {
    pub spec: InstanceSpec,
    pub seeds: Range<u64>,
    pub per_seed: usize,
}

impl Corpus {
    /// Desk-scale shape used throughout the test suite: up to 7 vertices,
    /// 25 edges, start times up to 30, traversal times 1 to 5, 3 beer
    /// vertices with up to 4 open instants.
    pub fn small(seeds: Range<u64>, per_seed: usize) -> Self {
        let spec = InstanceSpec {
            vertices: 7,
            edges: 25,
            ..InstanceSpec::default()
        };
        Self {
            spec,
            seeds,
            per_seed,
        }
    }

    pub fn len(&self) -> usize {
        (self.seeds.end.saturating_sub(self.seeds.start)) as usize * self.per_seed
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn horizon(&self) -> Time {
        self.spec.max_time + self.spec.max_lambda
    }

    /// `(instance seed, instance, rng)` triples; the rng is seeded from the
    /// instance seed and drives the per-instance queries.
    pub fn iter(&self) -> impl Iterator<Item = (u64, Instance, Pcg64)> + '_ {
        self.seeds.clone().flat_map(move |s| {
            (0..self.per_seed as u64).map(move |i| {
                let seed = s.wrapping_mul(1_000_003).wrapping_add(i);
                let inst = gen_instance(&self.spec.with_seed(seed));
                (seed, inst, Pcg64::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15))
            })
        })
    }

    pub fn pruned(&self) -> Self {
        Self {
            spec: InstanceSpec {
                prune: true,
                ..self.spec.clone()
            },
            ..self.clone()
        }
    }
}

fn mismatch<T: fmt::Debug>(seed: u64, what: &str, w: TimeWindow, got: &T, want: &T) -> String {
    format!(
        "seed {seed}, {what}, window [{}, {}]: got {got:?}, oracle {want:?}",
        w.t_alpha, w.t_omega
    )
}

/// EABP, LDBP and FBP one-to-all plus SBP on `pairs` random pairs, against
/// oracle optima, on `windows` random windows per instance.
pub fn check_objectives(c: &Corpus, windows: usize, pairs: usize) -> Report {
    let mut r = Report::new("objectives match the oracle");
    for (seed, Instance { graph: g, beer: bc }, mut rng) in c.iter() {
        let n = g.num_vertices();
        for _ in 0..windows {
            let w = random_window(&mut rng, c.horizon());
            let table = oracle_table(&g, w, &bc);
            for x in 0..n {
                let got = eabp(&g, x, w, &bc, Variant::Stream).unwrap();
                r.note(&table[x].eabp);
                r.note(&table[x].fbp);
                r.check(got == table[x].eabp, || {
                    mismatch(seed, &format!("eabp from {x}"), w, &got, &table[x].eabp)
                });
                let got = fbp(&g, x, w, &bc);
                r.check(got == table[x].fbp, || {
                    mismatch(seed, &format!("fbp from {x}"), w, &got, &table[x].fbp)
                });
            }
            for y in 0..n {
                let got = ldbp(&g, y, w, &bc, Variant::Stream).unwrap();
                let want: Vec<Time> = (0..n).map(|x| table[x].ldbp[y]).collect();
                r.note(&want);
                r.check(got == want, || {
                    mismatch(seed, &format!("ldbp to {y}"), w, &got, &want)
                });
            }
            for _ in 0..pairs {
                let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
                let got = sbp(&g, x, y, w, &bc);
                let want = table[x].sbp[y];
                r.note(&[want]);
                r.check(got == want, || {
                    mismatch(seed, &format!("sbp {x} -> {y}"), w, &got, &want)
                });
            }
        }
    }
    r
}

fn strictly<F: Fn(Time, Time) -> bool>(pairs: &[(Time, Time)], first: F, second: F) -> bool {
    pairs
        .windows(2)
        .all(|p| first(p[0].0, p[1].0) && second(p[0].1, p[1].1))
}

/// All three frontier scans against oracle-filtered pair sets, plus their
/// ordering and size bounds.
pub fn check_frontiers(c: &Corpus, windows: usize) -> Report {
    let lt = |a: Time, b: Time| a < b;
    let mut r = Report::new("frontiers match the oracle and respect their bounds");
    for (seed, Instance { graph: g, .. }, mut rng) in c.iter() {
        let n = g.num_vertices();
        let st = g.stats();
        for _ in 0..windows {
            let w = random_window(&mut rng, c.horizon());
            for x in 0..n {
                let sa = nondom_paths(&g, x, w);
                let want = oracle_frontiers(&g, x, w, Criterion::StartArrival);
                let da = dist_nondom_paths(&g, x, w);
                let want_da = oracle_frontiers(&g, x, w, Criterion::DistanceArrival);
                let ds = inv_dist_nondom_paths(&g, x, w);
                let want_ds = oracle_frontiers(&g, x, w, Criterion::DistanceStart);
                for v in 0..n {
                    let (p, q, s) = (sa.pairs(v), da.pairs(v), ds.pairs(v));
                    r.finite += p.len() + q.len() + s.len();
                    r.check(p == want[v], || {
                        mismatch(seed, &format!("start/arrival {x} -> {v}"), w, &p, &want[v])
                    });
                    r.check(q == want_da[v], || {
                        mismatch(seed, &format!("distance/arrival {x} -> {v}"), w, &q, &want_da[v])
                    });
                    r.check(s == want_ds[v], || {
                        mismatch(seed, &format!("distance/start {v} -> {x}"), w, &s, &want_ds[v])
                    });

                    // (s, a) both increase; (d, a) by a: d decreases; (d, s) by s: d increases
                    r.check(strictly(&p, lt, lt), || {
                        format!("seed {seed}: start/arrival {x} -> {v} not monotone: {p:?}")
                    });
                    let q_rev: Vec<_> = q.iter().map(|&(d, a)| (a, d)).collect();
                    r.check(
                        q_rev.windows(2).all(|p| p[0].0 < p[1].0 && p[0].1 > p[1].1),
                        || format!("seed {seed}: distance/arrival {x} -> {v} not monotone: {q:?}"),
                    );
                    let s_rev: Vec<_> = s.iter().map(|&(d, s)| (s, d)).collect();
                    r.check(strictly(&s_rev, lt, lt), || {
                        format!("seed {seed}: distance/start {v} -> {x} not monotone: {s:?}")
                    });

                    if v != x {
                        r.check(p.len() <= st.c, || {
                            format!("seed {seed}: |L_{v}| = {} > c = {}", p.len(), st.c)
                        });
                    }
                    r.check(q.len() <= st.max_in_degree, || {
                        format!(
                            "seed {seed}: distance/arrival list at {v} has {} > d_in pairs",
                            q.len()
                        )
                    });
                    r.check(s.len() <= st.max_out_degree, || {
                        format!(
                            "seed {seed}: distance/start list at {v} has {} > d_out pairs",
                            s.len()
                        )
                    });
                }
            }
        }
    }
    r
}

fn random_times(rng: &mut Pcg64, n: usize, w: TimeWindow, none: Time) -> Vec<Time> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(1.0 / 3.0) {
                none
            } else {
                rng.gen_range(w.t_alpha..=w.t_omega)
            }
        })
        .collect()
}

/// Stream and adjacency-list sweeps agree on pruned graphs for random
/// initial and final times, and so do the EABP/LDBP variants.
pub fn check_variants(c: &Corpus, trials: usize) -> Report {
    let mut r = Report::new("stream and adjacency-list variants agree");
    for (seed, Instance { graph: g, beer: bc }, mut rng) in c.pruned().iter() {
        let n = g.num_vertices();
        for _ in 0..trials {
            let w = random_window(&mut rng, c.horizon());
            let init = random_times(&mut rng, n, w, INF);
            let (a, b) = (mseap_stream(&g, w, &init), mseap_adjlist(&g, w, &init).unwrap());
            r.note(&a);
            r.check(a == b, || {
                mismatch(seed, &format!("mseap init {init:?}"), w, &b, &a)
            });
            let fin = random_times(&mut rng, n, w, NEG_INF);
            let (a, b) = (mtldp_stream(&g, w, &fin), mtldp_adjlist(&g, w, &fin).unwrap());
            r.note(&a);
            r.check(a == b, || {
                mismatch(seed, &format!("mtldp fin {fin:?}"), w, &b, &a)
            });

            let x = rng.gen_range(0..n);
            let a = eabp(&g, x, w, &bc, Variant::Stream).unwrap();
            let b = eabp(&g, x, w, &bc, Variant::Adjlist).unwrap();
            r.check(a == b, || {
                mismatch(seed, &format!("eabp variants from {x}"), w, &b, &a)
            });
            let a = ldbp(&g, x, w, &bc, Variant::Stream).unwrap();
            let b = ldbp(&g, x, w, &bc, Variant::Adjlist).unwrap();
            r.check(a == b, || {
                mismatch(seed, &format!("ldbp variants to {x}"), w, &b, &a)
            });
        }
    }
    r
}

type AllObjectives = (Vec<Vec<Time>>, Vec<Vec<Time>>, Vec<Vec<Time>>, Vec<Vec<Time>>);

fn all_objectives(g: &TemporalGraph, w: TimeWindow, bc: &BeerConfig) -> AllObjectives {
    let n = g.num_vertices();
    let e = (0..n)
        .map(|x| eabp(g, x, w, bc, Variant::Stream).unwrap())
        .collect();
    let l = (0..n)
        .map(|y| ldbp(g, y, w, bc, Variant::Stream).unwrap())
        .collect();
    let f = (0..n).map(|x| fbp(g, x, w, bc)).collect();
    let s = (0..n)
        .map(|x| (0..n).map(|y| sbp(g, x, y, w, bc)).collect())
        .collect();
    (e, l, f, s)
}

/// Removing dominated edges changes none of the four objectives.
pub fn check_pruning(c: &Corpus, windows: usize) -> Report {
    let mut r = Report::new("pruning dominated edges changes no objective");
    for (seed, Instance { graph: g, beer: bc }, mut rng) in c.iter() {
        let p = g.remove_dominated_edges();
        for _ in 0..windows {
            let w = random_window(&mut rng, c.horizon());
            let (before, after) = (all_objectives(&g, w, &bc), all_objectives(&p, w, &bc));
            for table in [&before.0, &before.1, &before.2, &before.3] {
                table.iter().for_each(|row| r.note(row));
            }
            r.check(before == after, || {
                format!(
                    "seed {seed}, window [{}, {}]: objectives differ after pruning",
                    w.t_alpha, w.t_omega
                )
            });
        }
    }
    r
}

fn random_mask(rng: &mut Pcg64, k: usize) -> Vec<bool> {
    (0..k).map(|_| rng.gen_bool(0.6)).collect()
}

/// Index answers equal direct EABP/LDBP with active vertices open all window
/// long, using at most one binary search per beer vertex and leg.
pub fn check_index(c: &Corpus, queries: usize) -> Report {
    let mut r = Report::new("index queries match direct computation");
    for (seed, Instance { graph: g, beer: bc }, mut rng) in c.iter() {
        let n = g.num_vertices();
        let k = bc.len();
        let ix = NondomIndex::build(&g, &bc);
        for _ in 0..queries {
            let (x, y) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let w = random_window(&mut rng, c.horizon());
            let mask = random_mask(&mut rng, k);
            let open = bc.with_activation(&mask, w).unwrap();
            let q = Query::new(x, y, w, mask);

            let mut ce = LegCounters::default();
            let got = ix.query_eabp_counted(&q, &mut ce).unwrap();
            let want = eabp(&g, x, w, &open, Variant::Stream).unwrap()[y];
            r.note(&[want]);
            r.check(got == want, || {
                mismatch(seed, &format!("index eabp {q:?}"), w, &got, &want)
            });
            let mut cl = LegCounters::default();
            let got = ix.query_ldbp_counted(&q, &mut cl).unwrap();
            let want = ldbp(&g, y, w, &open, Variant::Stream).unwrap()[x];
            r.note(&[want]);
            r.check(got == want, || {
                mismatch(seed, &format!("index ldbp {q:?}"), w, &got, &want)
            });

            r.check(
                [ce.first, ce.second, cl.first, cl.second].iter().all(|&s| s <= k),
                || format!("seed {seed}: more than k = {k} searches per leg: {ce:?} {cl:?}"),
            );
        }
    }
    r
}

/// DAG structure and size, and flagged fastest/shortest queries against the
/// temporal algorithms with active vertices open all window long. Making
/// every vertex an active beer vertex turns beer walks into plain walks, so
/// the same runs also check plain fastest and shortest paths on the DAG
/// against the oracle.
pub fn check_dag(c: &Corpus, windows: usize) -> Report {
    let mut r = Report::new("DAG transformation is sound");
    for (seed, Instance { graph: g, beer: bc }, mut rng) in c.iter() {
        let n = g.num_vertices();
        let m = g.num_edges();
        let tg = TransformedGraph::build(&g);
        let valid = tg.validate(&g);
        r.check(valid.is_ok(), || format!("seed {seed}: {}", valid.unwrap_err()));
        r.check(tg.num_nodes() <= 2 * m && tg.num_arcs() <= 4 * m, || {
            format!(
                "seed {seed}: {} nodes, {} arcs for {m} edges",
                tg.num_nodes(),
                tg.num_arcs()
            )
        });
        let everyone = BeerConfig::new(n, (0..n).map(|v| (v, Vec::new())).collect()).unwrap();

        for round in 0..windows {
            let w = random_window(&mut rng, c.horizon());
            let mask = if round == 0 {
                vec![true; bc.len()]
            } else {
                random_mask(&mut rng, bc.len())
            };
            let open = bc.with_activation(&mask, w).unwrap();
            let all_open = everyone.with_activation(&vec![true; n], w).unwrap();
            let plain = oracle_table(&g, w, &all_open);
            for x in 0..n {
                let (mut raised, mut settled) = (Vec::new(), Vec::new());
                let q = Query::new(x, x, w, mask.clone());
                let got = fbp_on_dag_counted(&tg, &bc, &q, &mut raised).unwrap();
                let want = fbp(&g, x, w, &open);
                r.note(&want);
                r.check(got == want, || {
                    mismatch(
                        seed,
                        &format!("fbp on DAG from {x} mask {mask:?}"),
                        w,
                        &got,
                        &want,
                    )
                });
                let got = sbp_on_dag_counted(&tg, &bc, &q, &mut settled).unwrap();
                let want: Vec<Time> = (0..n).map(|y| sbp(&g, x, y, w, &open)).collect();
                r.note(&want);
                r.check(got == want, || {
                    mismatch(
                        seed,
                        &format!("sbp on DAG from {x} mask {mask:?}"),
                        w,
                        &got,
                        &want,
                    )
                });
                r.check(raised.iter().chain(&settled).all(|&v| v <= 2), || {
                    format!("seed {seed}: a DAG node was visited more than twice from {x}")
                });

                let q = Query::new(x, x, w, vec![true; n]);
                let got = fbp_on_dag_counted(&tg, &everyone, &q, &mut raised).unwrap();
                r.note(&plain[x].fbp);
                r.check(got == plain[x].fbp, || {
                    mismatch(seed, &format!("fastest on DAG from {x}"), w, &got, &plain[x].fbp)
                });
                let got = sbp_on_dag_counted(&tg, &everyone, &q, &mut settled).unwrap();
                r.check(got == plain[x].sbp, || {
                    mismatch(seed, &format!("shortest on DAG from {x}"), w, &got, &plain[x].sbp)
                });
            }
        }
    }
    r
}

/// Every check with its default effort, as run by the command-line `check`.
pub fn run_all(c: &Corpus) -> Vec<Report> {
    vec![
        check_objectives(c, 3, 5),
        check_frontiers(c, 3),
        check_variants(c, 3),
        check_pruning(c, 3),
        check_index(c, 20),
        check_dag(c, 2),
    ]
}
