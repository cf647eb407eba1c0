use std::fmt::Write as _;

use super::Query;
use crate::nondom::{nondom_paths, ParetoList};
use crate::tgraph::{BeerConfig, TemporalGraph, Time, TimeWindow, VertexId, INF, NEG_INF};
use crate::{Error, Result};

const MAGIC: &str = "tbeer-index 1";

/// Non-dominated `(start, arrival)` pairs of all paths into and out of every
/// beer vertex, computed once over the whole timeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NondomIndex {
    n: usize,
    horizon: Time,
    beer: Vec<VertexId>,
    /// `to_beer[v][i]`: paths from `v` to the `i`-th beer vertex.
    to_beer: Vec<Vec<ParetoList>>,
    /// `from_beer[i][v]`: paths from the `i`-th beer vertex to `v`.
    from_beer: Vec<Vec<ParetoList>>,
}

/// Binary searches spent on the first (`x` to beer) and second (beer to `y`)
/// leg of index queries.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LegCounters {
    pub first: usize,
    pub second: usize,
}

impl NondomIndex {
    /// One start/arrival scan per vertex plus one per beer vertex.
    pub fn build(g: &TemporalGraph, bc: &BeerConfig) -> Self {
        let n = g.num_vertices();
        let horizon = g.horizon_end();
        let w = TimeWindow {
            t_alpha: 0,
            t_omega: horizon,
        };
        let beer = bc.vertices().to_vec();

        let to_beer = (0..n)
            .map(|v| {
                let mut lists = nondom_paths(g, v, w).into_lists();
                beer.iter().map(|&b| std::mem::take(&mut lists[b])).collect()
            })
            .collect();
        let from_beer = beer.iter().map(|&b| nondom_paths(g, b, w).into_lists()).collect();
        Self {
            n,
            horizon,
            beer,
            to_beer,
            from_beer,
        }
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_beer(&self) -> usize {
        self.beer.len()
    }

    pub fn beer_vertices(&self) -> &[VertexId] {
        &self.beer
    }

    /// The precomputation window is `[0, horizon]`.
    pub fn horizon(&self) -> Time {
        self.horizon
    }

    pub fn to_beer(&self, v: VertexId, slot: usize) -> &[(Time, Time)] {
        self.to_beer[v][slot].entries()
    }

    pub fn from_beer(&self, slot: usize, v: VertexId) -> &[(Time, Time)] {
        self.from_beer[slot][v].entries()
    }

    /// Number of stored pairs.
    pub fn total_pairs(&self) -> usize {
        let count = |l: &Vec<Vec<ParetoList>>| l.iter().flatten().map(ParetoList::len).sum::<usize>();
        count(&self.to_beer) + count(&self.from_beer)
    }

    /// Earliest arrival at `q.y` of a path from `q.x` through an active beer
    /// vertex, [`INF`] if none.
    pub fn query_eabp(&self, q: &Query) -> Result<Time> {
        self.query_eabp_counted(q, &mut LegCounters::default())
    }

    pub fn query_eabp_counted(&self, q: &Query, c: &mut LegCounters) -> Result<Time> {
        q.check(self.n, self.beer.len())?;
        let w = q.window;
        let mut best = INF;
        for (slot, &b) in self.beer.iter().enumerate() {
            if !q.activation[slot] {
                continue;
            }
            let reach = if q.x == b {
                w.t_alpha
            } else {
                c.first += 1;
                match self.to_beer[q.x][slot].first_key_at_least(w.t_alpha) {
                    Some((_, a)) if a <= w.t_omega => a,
                    _ => continue,
                }
            };
            let arrive = if q.y == b {
                reach
            } else {
                c.second += 1;
                match self.from_beer[slot][q.y].first_key_at_least(reach) {
                    Some((_, a)) if a <= w.t_omega => a,
                    _ => continue,
                }
            };
            best = best.min(arrive);
        }
        Ok(best)
    }

    /// Latest departure from `q.x` of a path to `q.y` through an active beer
    /// vertex, [`NEG_INF`] if none.
    pub fn query_ldbp(&self, q: &Query) -> Result<Time> {
        self.query_ldbp_counted(q, &mut LegCounters::default())
    }

    pub fn query_ldbp_counted(&self, q: &Query, c: &mut LegCounters) -> Result<Time> {
        q.check(self.n, self.beer.len())?;
        let w = q.window;
        let mut best = NEG_INF;
        for (slot, &b) in self.beer.iter().enumerate() {
            if !q.activation[slot] {
                continue;
            }
            let leave = if q.y == b {
                w.t_omega
            } else {
                c.second += 1;
                match self.from_beer[slot][q.y].last_value_at_most(w.t_omega) {
                    Some((s, _)) if s >= w.t_alpha => s,
                    _ => continue,
                }
            };
            let depart = if q.x == b {
                leave
            } else {
                c.first += 1;
                match self.to_beer[q.x][slot].last_value_at_most(leave) {
                    Some((s, _)) if s >= w.t_alpha => s,
                    _ => continue,
                }
            };
            best = best.max(depart);
        }
        Ok(best)
    }

    /// Line-oriented text form; [`NondomIndex::load`] reads it back and
    /// saving the result reproduces the same bytes.
    ///
    /// ```text
    /// tbeer-index 1
    /// n k horizon
    /// beer b_1 .. b_k
    /// to v i len s_1 a_1 .. s_len a_len     (non-empty lists only)
    /// from i v len s_1 a_1 ..
    /// ```
    pub fn save(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{MAGIC}");
        let _ = writeln!(out, "{} {} {}", self.n, self.beer.len(), self.horizon);
        out.push_str("beer");
        for b in &self.beer {
            let _ = write!(out, " {b}");
        }
        out.push('\n');
        let mut list = |tag: &str, i: usize, j: usize, l: &ParetoList| {
            if l.is_empty() {
                return;
            }
            let _ = write!(out, "{tag} {i} {j} {}", l.len());
            for (s, a) in l.entries() {
                let _ = write!(out, " {s} {a}");
            }
            out.push('\n');
        };
        for (v, lists) in self.to_beer.iter().enumerate() {
            for (slot, l) in lists.iter().enumerate() {
                list("to", v, slot, l);
            }
        }
        for (slot, lists) in self.from_beer.iter().enumerate() {
            for (v, l) in lists.iter().enumerate() {
                list("from", slot, v, l);
            }
        }
        out
    }

    pub fn load(text: &str) -> Result<Self> {
        let bad = |line: usize, msg: &str| Error::Index(format!("line {line}: {msg}"));
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, MAGIC)) => {}
            _ => return Err(bad(1, "missing header")),
        }
        let nums = |line: usize, toks: &[&str]| -> Result<Vec<Time>> {
            toks.iter()
                .map(|t| t.parse::<Time>().map_err(|_| bad(line, "expected integers")))
                .collect()
        };

        let (ln, sizes) = lines.next().ok_or_else(|| bad(2, "missing sizes"))?;
        let sizes = nums(ln, &sizes.split_whitespace().collect::<Vec<_>>())?;
        let [n, k, horizon] = sizes[..] else {
            return Err(bad(ln, "expected `n k horizon`"));
        };
        if n < 0 || k < 0 {
            return Err(bad(ln, "negative size"));
        }
        let (n, k) = (n as usize, k as usize);

        let (ln, beer_line) = lines.next().ok_or_else(|| bad(3, "missing beer line"))?;
        let toks: Vec<_> = beer_line.split_whitespace().collect();
        if toks.first() != Some(&"beer") || toks.len() != k + 1 {
            return Err(bad(ln, "expected `beer` and k vertex ids"));
        }
        let beer = nums(ln, &toks[1..])?;
        if beer.iter().any(|&b| b < 0 || b as usize >= n) {
            return Err(bad(ln, "beer vertex out of range"));
        }
        let beer: Vec<VertexId> = beer.into_iter().map(|b| b as usize).collect();

        let mut to_beer = vec![vec![ParetoList::new(); k]; n];
        let mut from_beer = vec![vec![ParetoList::new(); n]; k];
        for (ln, line) in lines {
            let toks: Vec<_> = line.split_whitespace().collect();
            if toks.len() < 4 {
                return Err(bad(ln, "short list line"));
            }
            let v = nums(ln, &toks[1..])?;
            let (i, j, len) = (v[0], v[1], v[2]);
            if i < 0 || j < 0 || len < 0 || v.len() != 3 + 2 * len as usize {
                return Err(bad(ln, "list length mismatch"));
            }
            let pairs = v[3..].chunks(2).map(|p| (p[0], p[1])).collect();
            let list =
                ParetoList::from_sorted(pairs).ok_or_else(|| bad(ln, "pairs are not strictly increasing"))?;
            let (i, j) = (i as usize, j as usize);
            let slot = match toks[0] {
                "to" if i < n && j < k => &mut to_beer[i][j],
                "from" if i < k && j < n => &mut from_beer[i][j],
                _ => return Err(bad(ln, "bad list tag or index")),
            };
            *slot = list;
        }
        Ok(Self {
            n,
            horizon,
            beer,
            to_beer,
            from_beer,
        })
    }
}
