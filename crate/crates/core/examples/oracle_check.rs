//! Cross-check every fast algorithm against exhaustive walk enumeration on
//! a small random corpus.

use temporal_beer::oracle::verify::{run_all, Corpus};

fn main() {
    let corpus = Corpus::small(0..100, 1);
    let reports = run_all(&corpus);
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed()) {
        std::process::exit(1);
    }
}
