#![allow(dead_code)]

use digroup::{direct_product, enumerate_digroups, Builtin, Digroup, SearchOptions};

/// M, N, Z2, Z4, S3, M×Z2 and trivial(3), with names.
pub fn named_examples() -> Vec<(String, Digroup)> {
    let mut out: Vec<(String, Digroup)> = [
        Builtin::M,
        Builtin::N,
        Builtin::Cyclic(2),
        Builtin::Cyclic(4),
        Builtin::S3,
        Builtin::Trivial(3),
    ]
    .into_iter()
    .map(|b| (b.to_string(), b.build()))
    .collect();
    out.push((
        "M×Z2".into(),
        direct_product(&Builtin::M.build(), &Builtin::Cyclic(2).build()),
    ));
    out
}

/// Canonical representatives of every class of order 1..=max.
pub fn enumerated(max: usize) -> Vec<(String, Digroup)> {
    let mut out = Vec::new();
    for n in 1..=max {
        let catalog = enumerate_digroups(n, &SearchOptions::default()).expect("order in range");
        for (i, e) in catalog.into_iter().enumerate() {
            out.push((format!("class {i} of order {n}"), e.canonical));
        }
    }
    out
}

/// The named examples plus every enumerated digroup of order at most 4.
pub fn construction_pool() -> Vec<(String, Digroup)> {
    let mut pool = named_examples();
    pool.extend(enumerated(4));
    pool
}
