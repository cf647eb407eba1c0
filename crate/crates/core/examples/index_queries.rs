//! Precompute frontiers to and from the beer vertices once, then answer
//! queries with any subset of them switched on.

use temporal_beer::index::parse_activation;
use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let beer = BeerConfig::new(3, vec![(1, vec![5])])?;
    let ix = NondomIndex::build(&g, &beer);
    println!("{} stored pairs, horizon {}", ix.total_pairs(), ix.horizon());

    let w = TimeWindow::new(0, 10)?;
    for mask in ["1", "0"] {
        let q = Query::new(0, 2, w, parse_activation(mask)?);
        println!(
            "active {mask}: eabp {} ldbp {}",
            format_time(ix.query_eabp(&q)?),
            format_time(ix.query_ldbp(&q)?)
        );
    }

    let text = ix.save();
    let back = NondomIndex::load(&text)?;
    println!("reload identical: {}", back.save() == text);
    Ok(())
}
