//! Minimum-duration and minimum-distance beer walks.

use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let beer = BeerConfig::new(3, vec![(1, vec![5])])?;
    let w = TimeWindow::new(0, 10)?;

    let duration = fbp(&g, 0, w, &beer);
    for (v, d) in duration.iter().enumerate() {
        println!("fastest 0 -> {v}: {}", format_time(*d));
    }
    println!("shortest 0 -> 2: {}", format_time(sbp(&g, 0, 2, w, &beer)));

    // the walk has to wait for the beer vertex to open
    let late = BeerConfig::new(3, vec![(1, vec![3])])?;
    println!(
        "fastest 0 -> 2 with beer open at 3: {}",
        format_time(fbp(&g, 0, w, &late)[2])
    );
    Ok(())
}
