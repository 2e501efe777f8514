//! The minimality and uniqueness claims about the digroups M and N, checked
//! against the exhaustive catalog.

use std::fmt;
use std::time::{Duration, Instant};

use crate::builtin::Builtin;
use crate::morphism::are_isomorphic;

use super::{enumerate_digroups, CatalogEntry, ClassCounts, SearchOptions};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub expected: String,
    pub observed: String,
    pub pass: bool,
    pub runtime: Duration,
    /// Extra lines worth auditing, such as the raw class list behind C4.
    pub details: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClaimReport {
    pub records: Vec<ClaimRecord>,
}

impl ClaimReport {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn get(&self, id: &str) -> Option<&ClaimRecord> {
        self.records.iter().find(|r| r.id == id)
    }
}

impl fmt::Display for ClaimReport {
    /// Runtimes are omitted so the text is reproducible.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{} {}", r.id, if r.pass { "PASS" } else { "FAIL" })?;
            writeln!(f, "  expected: {}", r.expected)?;
            writeln!(f, "  observed: {}", r.observed)?;
            for d in &r.details {
                writeln!(f, "    {d}")?;
            }
        }
        Ok(())
    }
}

fn timed(
    id: &'static str,
    expected: &str,
    check: impl FnOnce() -> (bool, String, Vec<String>),
) -> ClaimRecord {
    let start = Instant::now();
    let (pass, observed, details) = check();
    ClaimRecord {
        id,
        expected: expected.to_owned(),
        observed,
        pass,
        runtime: start.elapsed(),
        details,
    }
}

fn catalog(n: usize, opts: &SearchOptions) -> Vec<CatalogEntry> {
    let opts = SearchOptions {
        max_solutions: None,
        ..opts.clone()
    };
    enumerate_digroups(n, &opts).expect("claim orders are within the search range")
}

fn describe(c: &ClassCounts) -> String {
    format!(
        "total={} commutative={} non_commutative={} groups={} non_group={}",
        c.total, c.commutative, c.non_commutative, c.groups, c.non_group
    )
}

fn class_line(e: &CatalogEntry) -> String {
    let name = [Builtin::N, Builtin::S3]
        .into_iter()
        .find(|b| are_isomorphic(&e.canonical, &b.build()))
        .map_or(String::new(), |b| format!(" ≅ {b}"));
    format!(
        "group={} subdigroups={} left={:?} right={:?}{name}",
        e.flags.group,
        e.subdigroup_count,
        e.canonical.left_flat(),
        e.canonical.right_flat()
    )
}

/// Runs C1 to C5 with default search options.
pub fn verify_claims() -> ClaimReport {
    verify_claims_with(&SearchOptions::default())
}

/// Runs C1 to C5, enumerating with `opts` (only `workers` matters).
pub fn verify_claims_with(opts: &SearchOptions) -> ClaimReport {
    let mut records = Vec::new();

    records.push(timed(
        "C1",
        "order 1 has exactly one class, the trivial group",
        || {
            let cat = catalog(1, opts);
            let c = ClassCounts::tally(&cat);
            (c.total == 1 && c.groups == 1, describe(&c), Vec::new())
        },
    ));

    records.push(timed(
        "C2",
        "order 2 contains a non-group class isomorphic to M",
        || {
            let cat = catalog(2, opts);
            let m = Builtin::M.build();
            let hit = cat
                .iter()
                .any(|e| !e.flags.group && are_isomorphic(&e.canonical, &m));
            let c = ClassCounts::tally(&cat);
            (
                hit,
                format!("{} contains_M={hit}", describe(&c)),
                Vec::new(),
            )
        },
    ));

    records.push(timed(
        "C3",
        "every digroup of order 3, 4, 5 is commutative",
        || {
            let mut pass = true;
            let mut details = Vec::new();
            for n in 3..=5 {
                let c = ClassCounts::tally(&catalog(n, opts));
                pass &= c.non_commutative == 0;
                details.push(format!("n={n}: {}", describe(&c)));
            }
            let observed = if pass {
                "no non-commutative class at orders 3..=5".to_owned()
            } else {
                "non-commutative class found".to_owned()
            };
            (pass, observed, details)
        },
    ));

    records.push(timed(
        "C4",
        "at order 6 the non-commutative classes that are not groups form exactly one class, isomorphic to N",
        || {
            let cat = catalog(6, opts);
            let nonc: Vec<&CatalogEntry> = cat.iter().filter(|e| !e.flags.commutative).collect();
            let non_group: Vec<&&CatalogEntry> = nonc.iter().filter(|e| !e.flags.group).collect();
            let n = Builtin::N.build();
            let pass = non_group.len() == 1 && are_isomorphic(&non_group[0].canonical, &n);
            let observed = format!(
                "{}; non-commutative non-group classes={}",
                describe(&ClassCounts::tally(&cat)),
                non_group.len()
            );
            (pass, observed, nonc.iter().map(|e| class_line(e)).collect())
        },
    ));

    records.push(timed("C5", "N is non-commutative at (β, β)", || {
        let n = Builtin::N.build();
        let b = n.element_by_label("β").expect("N labels β");
        let (l, r) = (n.left(b, b), n.right(b, b));
        let observed = format!("β⇀β = {} and β↼β = {}", n.label(l), n.label(r));
        (l != r, observed, Vec::new())
    }));

    ClaimReport { records }
}
