//! Seeded random instances in the on-disk text formats.

use temporal_beer::oracle::{gen_instance, InstanceSpec};
use temporal_beer::prelude::*;

fn main() {
    let spec = InstanceSpec {
        seed: 42,
        vertices: 5,
        edges: 12,
        ..InstanceSpec::default()
    };
    let inst = gen_instance(&spec);
    print!("{}", write_edge_stream(&inst.graph));
    print!("{}", write_beer_config(&inst.beer));

    let again = gen_instance(&spec);
    assert_eq!(again.graph.edges_asc(), inst.graph.edges_asc());
    println!("same seed, same instance");
}
