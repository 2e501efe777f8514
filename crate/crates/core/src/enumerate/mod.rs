//! Exhaustive classification of digroups of small order up to isomorphism.
//!
//! [`enumerate_digroups`] runs a propagating backtracking search and keeps
//! one canonical table per isomorphism class. [`naive_enumerate`] is an independent brute-force scan over every
//! table pair that satisfies the unit laws, used to cross-check the search
//! at orders up to 3.

mod claims;
mod search;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digroup::{validate_digroup, Digroup};
use crate::morphism::{canonical_form, table_cmp};
use crate::subdigroup::all_subdigroups;
use crate::table::DigroupTable;

pub use claims::{verify_claims, verify_claims_with, ClaimRecord, ClaimReport};

use search::{Problem, Search};

/// Default ceiling for the propagating search.
pub const MAX_SEARCH_ORDER: usize = 6;
/// Hard ceiling when [`SearchOptions::allow_large_order`] is set.
pub const MAX_OVERRIDE_ORDER: usize = 8;
/// Ceiling for the brute-force oracle.
pub const MAX_NAIVE_ORDER: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Propagating,
    Naive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Keep only the first `k` classes of the sorted catalog.
    pub max_solutions: Option<usize>,
    pub workers: usize,
    pub mode: SearchMode,
    /// Lifts the order ceiling to [`MAX_OVERRIDE_ORDER`]; no timing promise.
    pub allow_large_order: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            max_solutions: None,
            workers: 1,
            mode: SearchMode::Propagating,
            allow_large_order: false,
        }
    }
}

impl SearchOptions {
    pub fn naive() -> Self {
        Self {
            mode: SearchMode::Naive,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EnumerateError {
    #[error("order {order} is outside the supported range 1..={max} for {mode:?} mode")]
    OrderOutOfRange {
        order: usize,
        max: usize,
        mode: SearchMode,
    },
    #[error("at least one worker is required")]
    NoWorkers,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassFlags {
    pub commutative: bool,
    pub group: bool,
}

/// One isomorphism class, represented by its canonical table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub canonical: Digroup,
    pub order: usize,
    pub flags: ClassFlags,
    pub subdigroup_count: usize,
}

impl CatalogEntry {
    /// Canonicalizes `d` and computes its flags.
    pub fn from_digroup(d: &Digroup) -> Self {
        let canonical = canonical_form(d)
            .expect("catalog orders are within the canonical-form limit")
            .table;
        Self::from_canonical(canonical)
    }

    fn from_canonical(canonical: Digroup) -> Self {
        let subdigroup_count = all_subdigroups(&canonical)
            .expect("catalog orders are within the subset scan limit")
            .len();
        Self {
            order: canonical.order(),
            flags: ClassFlags {
                commutative: canonical.is_commutative(),
                group: canonical.is_group(),
            },
            subdigroup_count,
            canonical,
        }
    }
}

/// Tallies over a catalog.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassCounts {
    pub total: usize,
    pub commutative: usize,
    pub groups: usize,
    pub non_group: usize,
    pub non_commutative: usize,
}

impl ClassCounts {
    pub fn tally(entries: &[CatalogEntry]) -> Self {
        let mut c = Self::default();
        for e in entries {
            c.total += 1;
            if e.flags.commutative {
                c.commutative += 1;
            } else {
                c.non_commutative += 1;
            }
            if e.flags.group {
                c.groups += 1;
            } else {
                c.non_group += 1;
            }
        }
        c
    }
}

fn check_options(n: usize, opts: &SearchOptions) -> Result<(), EnumerateError> {
    if opts.workers == 0 {
        return Err(EnumerateError::NoWorkers);
    }
    let max = match (opts.mode, opts.allow_large_order) {
        (SearchMode::Naive, _) => MAX_NAIVE_ORDER,
        (SearchMode::Propagating, false) => MAX_SEARCH_ORDER,
        (SearchMode::Propagating, true) => MAX_OVERRIDE_ORDER,
    };
    if n == 0 || n > max {
        return Err(EnumerateError::OrderOutOfRange {
            order: n,
            max,
            mode: opts.mode,
        });
    }
    Ok(())
}

type Classes = BTreeMap<(Vec<usize>, Vec<usize>), Digroup>;

fn add_class(classes: &mut Classes, left: Vec<usize>, right: Vec<usize>, n: usize) {
    let table = DigroupTable::from_flat(n, 0, left, right).expect("search cells are in range");
    let d = Digroup::new(table).expect("search leaves satisfy every axiom");
    let c = canonical_form(&d)
        .expect("order within canonical limit")
        .table;
    classes
        .entry((c.left_flat().to_vec(), c.right_flat().to_vec()))
        .or_insert(c);
}

fn finish(classes: Classes, opts: &SearchOptions) -> Vec<CatalogEntry> {
    let mut entries: Vec<CatalogEntry> = classes
        .into_values()
        .map(CatalogEntry::from_canonical)
        .collect();
    entries.sort_by(|a, b| table_cmp(&a.canonical, &b.canonical));
    if let Some(k) = opts.max_solutions {
        entries.truncate(k);
    }
    entries
}

/// One entry per isomorphism class of digroups of order `n`, sorted by
/// canonical table.
pub fn enumerate_digroups(
    n: usize,
    opts: &SearchOptions,
) -> Result<Vec<CatalogEntry>, EnumerateError> {
    check_options(n, opts)?;
    if opts.mode == SearchMode::Naive {
        return naive_enumerate_with(n, opts);
    }
    let Some(mut root) = Search::root(Problem::new(n)) else {
        return Ok(Vec::new());
    };
    let mut classes = Classes::new();
    if opts.workers == 1 {
        root.run(0, None, &mut |_| unreachable!("no split"), &mut |(l, r)| {
            add_class(&mut classes, l, r, n)
        });
        return Ok(finish(classes, opts));
    }
    // split on the first few branching cells, then explore subtrees in parallel
    const SPLIT_DEPTH: usize = 3;
    let mut subtrees = Vec::new();
    root.run(
        0,
        Some(SPLIT_DEPTH),
        &mut |s| subtrees.push(s),
        &mut |(l, r)| add_class(&mut classes, l, r, n),
    );
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .expect("thread pool");
    let partial: Vec<Classes> = pool.install(|| {
        subtrees
            .into_par_iter()
            .map(|mut s| {
                let mut local = Classes::new();
                s.run(
                    SPLIT_DEPTH,
                    None,
                    &mut |_| unreachable!("no split"),
                    &mut |(l, r)| add_class(&mut local, l, r, n),
                );
                local
            })
            .collect()
    });
    for local in partial {
        for (key, d) in local {
            classes.entry(key).or_insert(d);
        }
    }
    Ok(finish(classes, opts))
}

/// Tallies of [`enumerate_digroups`].
pub fn count_by_class(n: usize, opts: &SearchOptions) -> Result<ClassCounts, EnumerateError> {
    Ok(ClassCounts::tally(&enumerate_digroups(n, opts)?))
}

/// Brute force: every table pair obeying the unit laws with identity 0,
/// filtered by [`validate_digroup`] and deduplicated by canonical form.
pub fn naive_enumerate(n: usize) -> Result<Vec<CatalogEntry>, EnumerateError> {
    naive_enumerate_with(n, &SearchOptions::naive())
}

fn naive_enumerate_with(
    n: usize,
    opts: &SearchOptions,
) -> Result<Vec<CatalogEntry>, EnumerateError> {
    check_options(
        n,
        &SearchOptions {
            mode: SearchMode::Naive,
            ..opts.clone()
        },
    )?;
    let nn = n * n;
    // free cells: left (x, y) for y ≠ 0 and right (x, y) for x, y ≠ 0
    let free: Vec<usize> = (0..2 * nn)
        .filter(|&c| {
            let (x, y) = ((c % nn) / n, c % n);
            if c < nn {
                y != 0
            } else {
                x != 0 && y != 0
            }
        })
        .collect();
    let mut cells = vec![0usize; 2 * nn];
    for x in 0..n {
        cells[x * n] = x;
        cells[nn + x] = x;
    }
    let mut classes = Classes::new();
    let mut digits = vec![0usize; free.len()];
    loop {
        for (&c, &v) in free.iter().zip(&digits) {
            cells[c] = v;
        }
        for x in 1..n {
            // x↼0 = 0⇀x
            cells[nn + x * n] = cells[x];
        }
        let table = DigroupTable::from_flat(n, 0, cells[..nn].to_vec(), cells[nn..].to_vec())
            .expect("digits are in range");
        if validate_digroup(&table).ok {
            add_class(&mut classes, cells[..nn].to_vec(), cells[nn..].to_vec(), n);
        }
        // odometer
        let Some(pos) = digits.iter().position(|&d| d + 1 < n) else {
            break;
        };
        for d in &mut digits[..pos] {
            *d = 0;
        }
        digits[pos] += 1;
    }
    Ok(finish(classes, opts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::Builtin;
    use crate::morphism::are_isomorphic;

    #[test]
    fn order_one_and_two() {
        let one = enumerate_digroups(1, &SearchOptions::default()).unwrap();
        assert_eq!(one.len(), 1);
        assert!(one[0].flags.group);
        let two = enumerate_digroups(2, &SearchOptions::default()).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two
            .iter()
            .any(|e| are_isomorphic(&e.canonical, &Builtin::M.build())));
        assert!(two
            .iter()
            .any(|e| are_isomorphic(&e.canonical, &Builtin::Cyclic(2).build())));
    }

    #[test]
    fn naive_matches_search_at_small_orders() {
        for n in 1..=3 {
            let fast = enumerate_digroups(n, &SearchOptions::default()).unwrap();
            let slow = naive_enumerate(n).unwrap();
            assert_eq!(fast, slow, "order {n}");
        }
    }

    #[test]
    fn counts_at_order_two() {
        let c = count_by_class(2, &SearchOptions::default()).unwrap();
        assert_eq!(
            c,
            ClassCounts {
                total: 2,
                commutative: 2,
                groups: 1,
                non_group: 1,
                non_commutative: 0
            }
        );
    }

    #[test]
    fn range_errors() {
        assert!(matches!(
            enumerate_digroups(7, &SearchOptions::default()),
            Err(EnumerateError::OrderOutOfRange { max: 6, .. })
        ));
        assert!(matches!(
            naive_enumerate(4),
            Err(EnumerateError::OrderOutOfRange { max: 3, .. })
        ));
        assert!(matches!(
            enumerate_digroups(0, &SearchOptions::default()),
            Err(EnumerateError::OrderOutOfRange { .. })
        ));
        assert_eq!(
            enumerate_digroups(2, &SearchOptions::default().with_workers(0)),
            Err(EnumerateError::NoWorkers)
        );
    }

    #[test]
    fn max_solutions_truncates_sorted_catalog() {
        let opts = SearchOptions {
            max_solutions: Some(1),
            ..SearchOptions::default()
        };
        let all = enumerate_digroups(2, &SearchOptions::default()).unwrap();
        assert_eq!(enumerate_digroups(2, &opts).unwrap(), all[..1]);
    }
}
