//! Classify digroups of each order up to isomorphism.
//!
//! cargo run --release --example classify -- 6 4
//! (maximum order, worker count)

use std::time::Instant;

use digroup::{enumerate_digroups, ClassCounts, SearchOptions};

fn main() {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(5);
    let workers: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let opts = SearchOptions::default().with_workers(workers);
    for n in 1..=max {
        let start = Instant::now();
        let catalog = enumerate_digroups(n, &opts).expect("order in range");
        let c = ClassCounts::tally(&catalog);
        println!(
            "n={n}: {} classes, {} commutative, {} groups ({:.2?})",
            c.total,
            c.commutative,
            c.groups,
            start.elapsed()
        );
        for e in catalog.iter().filter(|e| !e.flags.commutative) {
            println!(
                "  non-commutative, group={}: {:?} {:?}",
                e.flags.group,
                e.canonical.left_flat(),
                e.canonical.right_flat()
            );
        }
    }
}
