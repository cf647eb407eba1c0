//! Dominated parallel edges and what removing them leaves.

use temporal_beer::prelude::*;
use temporal_beer::tgraph::SearchMode;

fn main() -> Result<()> {
    // (0, 1, 2, 5) arrives at 7, after (0, 1, 3, 3) which leaves later
    let g = parse_edge_stream("2 2\n0 1 2 5\n0 1 3 3\n")?;
    println!("dominance free before: {}", g.is_dominance_free());

    let p = g.remove_dominated_edges();
    println!("dominance free after: {}", p.is_dominance_free());
    print!("{}", write_edge_stream(&p));

    let first = p.parallel_edge_search(0, 1, SearchMode::MinStartAtLeast, 3);
    println!("first edge 0 -> 1 leaving at 3 or later: {first:?}");
    println!("stats: {:?}", g.stats());
    Ok(())
}
