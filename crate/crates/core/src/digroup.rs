//! Digroup axioms and elementary properties.
//!
//! A table pair `(⇀, ↼)` with distinguished element `e` is a digroup when
//!
//! * the five diassociative equalities hold for all `x, y, z`:
//!   `x⇀(y⇀z) = (x⇀y)⇀z = x⇀(y↼z)`, `(x↼y)⇀z = x↼(y⇀z)`,
//!   `(x⇀y)↼z = (x↼y)↼z = x↼(y↼z)`;
//! * `e` is a bar-unit, `x⇀e = x = e↼x`, and `x↼e = e⇀x`;
//! * every `x` has a Liu inverse `y` with `y⇀x = e = x↼y`.
//!
//! [`validate_digroup`] checks all of this exhaustively. A [`Digroup`] is a
//! table that has passed the check; the remaining operations take a
//! `Digroup`, so the validation status travels with the value.

use std::ops::Deref;

use thiserror::Error;

use crate::mapping::Mapping;
use crate::report::{Law, ValidationReport, Violation};
use crate::table::{DigroupTable, Element, TableError};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DigroupError {
    #[error("malformed table: {0}")]
    Malformed(#[from] TableError),
    #[error("axioms fail: {0}")]
    Invalid(ValidationReport),
}

/// Checks every digroup axiom over all elements, pairs and triples.
///
/// Every failing `(law, witness)` instance is reported, sorted by law and then
/// lexicographically by witness tuple.
pub fn validate_digroup(t: &DigroupTable) -> ValidationReport {
    let n = t.order();
    let e = t.identity();
    let mut violations = Vec::new();
    let mut check = |law: Law, w: &[Element], lhs: Element, rhs: Element| {
        if lhs != rhs {
            violations.push(Violation::equation(law, w, lhs, rhs));
        }
    };
    for x in 0..n {
        for y in 0..n {
            let xly = t.left(x, y);
            let xry = t.right(x, y);
            for z in 0..n {
                let w = [x, y, z];
                check(Law::Diassoc1, &w, t.left(x, t.left(y, z)), t.left(xly, z));
                check(Law::Diassoc2, &w, t.left(xly, z), t.left(x, t.right(y, z)));
                check(Law::Diassoc3, &w, t.left(xry, z), t.right(x, t.left(y, z)));
                check(Law::Diassoc4, &w, t.right(xly, z), t.right(xry, z));
                check(
                    Law::Diassoc5,
                    &w,
                    t.right(xry, z),
                    t.right(x, t.right(y, z)),
                );
            }
        }
    }
    for x in 0..n {
        check(Law::BarunitRight, &[x], t.left(x, e), x);
        check(Law::BarunitLeft, &[x], t.right(e, x), x);
        check(Law::BarunitSwap, &[x], t.right(x, e), t.left(e, x));
    }
    for x in 0..n {
        if !(0..n).any(|y| t.left(y, x) == e && t.right(x, y) == e) {
            violations.push(Violation::missing(Law::InverseMissing, &[x]));
        }
    }
    ValidationReport::from_violations(violations)
}

/// A table that satisfies every digroup axiom.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digroup {
    table: DigroupTable,
    inverses: Vec<Element>,
}

impl Digroup {
    pub fn new(table: DigroupTable) -> Result<Self, DigroupError> {
        let report = validate_digroup(&table);
        if !report.ok {
            return Err(DigroupError::Invalid(report));
        }
        let e = table.identity();
        let inverses = table
            .elements()
            .map(|x| {
                table
                    .elements()
                    .find(|&y| table.left(y, x) == e && table.right(x, y) == e)
                    .expect("validated table has Liu inverses")
            })
            .collect();
        Ok(Self { table, inverses })
    }

    pub fn table(&self) -> &DigroupTable {
        &self.table
    }

    pub fn into_table(self) -> DigroupTable {
        self.table
    }

    /// The unique `y` with `y⇀x = e = x↼y`.
    pub fn liu_inverse(&self, x: Element) -> Element {
        self.inverses[x]
    }

    pub fn liu_inverse_map(&self) -> Mapping {
        Mapping::new(self.order(), self.order(), self.inverses.clone())
            .expect("inverses are carrier elements")
    }

    /// `x⇀y = y↼x`.
    pub fn commutes(&self, x: Element, y: Element) -> bool {
        self.left(x, y) == self.right(y, x)
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order();
        (0..n).all(|x| (0..n).all(|y| self.commutes(x, y)))
    }

    /// First ordered pair that does not commute.
    pub fn non_commuting_pair(&self) -> Option<(Element, Element)> {
        let n = self.order();
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| !self.commutes(x, y))
    }

    /// The two products coincide, so the digroup is a group.
    pub fn is_group(&self) -> bool {
        self.left_flat() == self.right_flat()
    }

    /// Applies `perm` (old → new) to the underlying table.
    pub fn relabel(&self, perm: &[Element]) -> Digroup {
        let table = self.table.relabel(perm);
        let mut inverses = vec![0; self.order()];
        for (x, &y) in self.inverses.iter().enumerate() {
            inverses[perm[x]] = perm[y];
        }
        Digroup { table, inverses }
    }

    pub fn with_labels<S: Into<String>>(
        self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, TableError> {
        Ok(Digroup {
            table: self.table.with_labels(labels)?,
            inverses: self.inverses,
        })
    }
}

impl Deref for Digroup {
    type Target = DigroupTable;

    fn deref(&self) -> &DigroupTable {
        &self.table
    }
}

impl TryFrom<DigroupTable> for Digroup {
    type Error = DigroupError;

    fn try_from(table: DigroupTable) -> Result<Self, DigroupError> {
        Digroup::new(table)
    }
}

/// Componentwise product; `(x1, x2)` sits at index `x1 * n2 + x2`.
pub fn direct_product(a: &Digroup, b: &Digroup) -> Digroup {
    let (n1, n2) = (a.order(), b.order());
    let n = n1 * n2;
    let split = |p: usize| (p / n2, p % n2);
    let mut left = Vec::with_capacity(n * n);
    let mut right = Vec::with_capacity(n * n);
    for p in 0..n {
        let (x1, x2) = split(p);
        for q in 0..n {
            let (y1, y2) = split(q);
            left.push(a.left(x1, y1) * n2 + b.left(x2, y2));
            right.push(a.right(x1, y1) * n2 + b.right(x2, y2));
        }
    }
    let identity = a.identity() * n2 + b.identity();
    let labels = match (a.labels(), b.labels()) {
        (None, None) => None,
        _ => Some(
            (0..n)
                .map(|p| {
                    let (x1, x2) = split(p);
                    format!("({},{})", a.label(x1), b.label(x2))
                })
                .collect(),
        ),
    };
    let table = DigroupTable::from_flat(n, identity, left, right)
        .expect("componentwise entries are in range")
        .with_labels_unchecked(labels);
    Digroup::new(table).expect("a product of digroups is a digroup")
}
