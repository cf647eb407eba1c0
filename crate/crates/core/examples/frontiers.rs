//! The three non-dominated pair sets, printed one vertex per line.

use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let w = TimeWindow::new(0, 10)?;

    println!("(start, arrival) from 0:\n{}", nondom_paths(&g, 0, w));
    println!("(distance, arrival) from 0:\n{}", dist_nondom_paths(&g, 0, w));
    let into = inv_dist_nondom_paths(&g, 2, w);
    println!("(distance, start) into 2:\n{into}");
    println!(
        "shortest into 2 leaving 1 at 5 or later: {:?}",
        into.earliest_start_at_least(1, 5)
    );
    Ok(())
}
