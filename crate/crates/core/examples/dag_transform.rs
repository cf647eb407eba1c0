//! Expand a temporal graph into a static DAG of timed copies and run the
//! flagged searches on it.

use temporal_beer::prelude::*;

fn main() -> Result<()> {
    let g = parse_edge_stream("3 3\n0 1 1 2\n0 2 2 1\n1 2 6 2\n")?;
    let beer = BeerConfig::new(3, vec![(1, vec![5])])?;
    let tg = TransformedGraph::build(&g);
    println!(
        "nodes {} arcs {} connectors {}",
        tg.num_nodes(),
        tg.num_arcs(),
        tg.num_connectors()
    );
    print!("{}", tg.to_text());

    let q = Query::new(0, 2, TimeWindow::new(0, 10)?, vec![true]);
    let show = |xs: Vec<Time>| xs.into_iter().map(format_time).collect::<Vec<_>>().join(" ");
    println!("fastest: {}", show(fbp_on_dag(&tg, &beer, &q)?));
    println!("shortest: {}", show(sbp_on_dag(&tg, &beer, &q)?));
    println!("\n{}", tg.to_dot());
    Ok(())
}
