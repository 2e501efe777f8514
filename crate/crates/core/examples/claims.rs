//! Check that M is the smallest non-group digroup and that N is the only
//! non-commutative non-group digroup of order 6.
//!
//! cargo run --release --example claims

use digroup::enumerate::verify_claims_with;
use digroup::SearchOptions;

fn main() {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let report = verify_claims_with(&SearchOptions::default().with_workers(workers));
    print!("{report}");
    for r in &report.records {
        println!("{}: {:.2?}", r.id, r.runtime);
    }
}
