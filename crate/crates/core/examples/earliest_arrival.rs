//! Earliest arrival at every vertex after stopping at a beer vertex.

use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let beer = BeerConfig::new(3, vec![(1, vec![5])])?;
    let w = TimeWindow::new(0, 10)?;

    for variant in [Variant::Stream, Variant::Adjlist] {
        let arrival = eabp(&g, 0, w, &beer, variant)?;
        let shown: Vec<_> = arrival.iter().map(|&t| format_time(t)).collect();
        println!("{variant}: {}", shown.join(" "));
    }

    // the underlying multi-source sweep, without beer
    let plain = mseap_stream(&g, w, &[0, INF, INF]);
    println!("plain earliest arrival: {plain:?}");
    Ok(())
}
