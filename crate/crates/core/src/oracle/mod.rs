//! Brute-force reference implementations and random instances.
//!
//! Everything here enumerates walks exhaustively and is only meant for
//! small graphs. The test suite and the `check` command compare every fast
//! algorithm in the crate against it.

mod enumerate;
mod frontiers;
mod generate;
pub mod verify;

pub use enumerate::{
    enumerate_beer_walks, for_each_walk, oracle_from, oracle_objectives, oracle_table, score_walk,
    trivial_walk, Objectives, OneToAll, WalkRecord,
};
pub use frontiers::{oracle_frontiers, Criterion};
pub use generate::{gen_instance, random_window, Instance, InstanceSpec};
