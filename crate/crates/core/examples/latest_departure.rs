//! Latest departure from every vertex that still reaches `y` with a beer stop.

use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let beer = BeerConfig::new(3, vec![(1, vec![5])])?;

    for omega in [10, 7] {
        let w = TimeWindow::new(0, omega)?;
        let dep = ldbp(&g, 2, w, &beer, Variant::Stream)?;
        let shown: Vec<_> = dep.iter().map(|&t| format_time(t)).collect();
        println!("window [0, {omega}]: {}", shown.join(" "));
    }

    let w = TimeWindow::new(0, 10)?;
    println!(
        "plain latest departure: {:?}",
        mtldp_stream(&g, w, &[NEG_INF, NEG_INF, 10])
    );
    Ok(())
}
