//! Line-oriented text formats.
//!
//! Graph file: a header `n M`, then `M` lines `u v t lambda`, in any order.
//! Beer file: a header `k`, then `k` lines `b c t_1 ... t_c` with the active
//! times strictly increasing. Blank lines and lines starting with `#` are
//! ignored in both.

use std::fmt::Write;

use super::{BeerConfig, TemporalEdge, TemporalGraph, Time, VertexId};
use crate::{Error, Result};

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    /// Next meaningful line as its line number and tokens.
    fn next_record(&mut self) -> Option<(usize, Vec<&'a str>)> {
        for (i, line) in self.inner.by_ref() {
            self.last = i + 1;
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line.split_whitespace().collect()));
        }
        None
    }

    fn expect_record(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        let last = self.last;
        self.next_record().ok_or_else(|| Error::Parse {
            line: last + 1,
            message: format!("unexpected end of input, expected {what}"),
        })
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.next_record() {
            Some((line, _)) => Err(parse_err(line, "trailing content")),
            None => Ok(()),
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn int<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

fn arity(line: usize, tokens: &[&str], expected: usize, what: &str) -> Result<()> {
    if tokens.len() != expected {
        return Err(parse_err(
            line,
            format!("expected {expected} fields for {what}, found {}", tokens.len()),
        ));
    }
    Ok(())
}

pub fn parse_edge_stream(text: &str) -> Result<TemporalGraph> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect_record("header `n M`")?;
    arity(line, &header, 2, "the header")?;
    let n: usize = int(line, header[0], "vertex count")?;
    let m: usize = int(line, header[1], "edge count")?;

    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line, f) = lines.expect_record("an edge line `u v t lambda`")?;
        arity(line, &f, 4, "an edge")?;
        let u: i64 = int(line, f[0], "vertex id")?;
        let v: i64 = int(line, f[1], "vertex id")?;
        let t: Time = int(line, f[2], "start time")?;
        let lambda: Time = int(line, f[3], "traversal time")?;
        for x in [u, v] {
            if x < 0 || x as usize >= n {
                return Err(parse_err(line, format!("vertex id {x} not in 0..{n}")));
            }
        }
        if t < 0 {
            return Err(parse_err(line, format!("negative start time {t}")));
        }
        if lambda < 1 {
            return Err(parse_err(line, format!("lambda must be >= 1, got {lambda}")));
        }
        edges.push(TemporalEdge::new(u as VertexId, v as VertexId, t, lambda));
    }
    lines.expect_end()?;
    TemporalGraph::new(n, edges)
}

pub fn parse_beer_config(text: &str, n: usize) -> Result<BeerConfig> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.expect_record("header `k`")?;
    arity(line, &header, 1, "the header")?;
    let k: usize = int(line, header[0], "beer vertex count")?;

    let mut entries = Vec::with_capacity(k);
    for _ in 0..k {
        let (line, f) = lines.expect_record("a beer line `b c t1 .. tc`")?;
        if f.len() < 2 {
            return Err(parse_err(line, "expected `b c t1 .. tc`"));
        }
        let b: usize = int(line, f[0], "vertex id")?;
        let c: usize = int(line, f[1], "time count")?;
        arity(line, &f, c + 2, "a beer vertex")?;
        let times = f[2..]
            .iter()
            .map(|tok| int::<Time>(line, tok, "active time"))
            .collect::<Result<Vec<_>>>()?;
        if b >= n {
            return Err(parse_err(line, format!("vertex id {b} not in 0..{n}")));
        }
        entries.push((b, times));
    }
    lines.expect_end()?;
    BeerConfig::new(n, entries).map_err(|e| parse_err(0, e.to_string()))
}

pub fn write_edge_stream(g: &TemporalGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.num_vertices(), g.num_edges());
    for e in g.edges_asc() {
        let _ = writeln!(out, "{} {} {} {}", e.u, e.v, e.t, e.lambda);
    }
    out
}

pub fn write_beer_config(bc: &BeerConfig) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{}", bc.len());
    for (i, b) in bc.vertices().iter().enumerate() {
        let times = bc.active_times(i);
        let _ = write!(out, "{} {}", b, times.len());
        for t in times {
            let _ = write!(out, " {t}");
        }
        out.push('\n');
    }
    out
}
