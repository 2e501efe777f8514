//! Raw operation tables.
//!
//! A [`DigroupTable`] is a pointed carrier `0..n` with two `n×n` tables, the
//! left product `⇀` and the right product `↼`. Construction only checks shape
//! and ranges; the digroup axioms are decided by [`crate::validate_digroup`].

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// An element of a carrier, as a dense index in `0..order`.
pub type Element = usize;

/// Which of the two operation tables a value belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Product {
    /// The left product `x ⇀ y`.
    Left,
    /// The right product `x ↼ y`.
    Right,
}

impl fmt::Display for Product {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Product::Left => f.write_str("left"),
            Product::Right => f.write_str("right"),
        }
    }
}

/// Structural problems found while building a table.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("a digroup needs at least one element")]
    EmptyCarrier,
    #[error("{table} table has {found} rows, expected {expected}")]
    RowCount {
        table: Product,
        expected: usize,
        found: usize,
    },
    #[error("{table} table row {row} has {found} entries, expected {expected}")]
    RowLength {
        table: Product,
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{table} table entry ({row}, {col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        table: Product,
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("identity {identity} is outside 0..{order}")]
    IdentityOutOfRange { identity: usize, order: usize },
    #[error("expected {expected} labels, found {found}")]
    LabelCount { expected: usize, found: usize },
    #[error("label {label:?} is used more than once")]
    DuplicateLabel { label: String },
}

/// A pointed carrier with a left and a right operation table.
///
/// Tables are stored row-major: `left[x * n + y] = x ⇀ y`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigroupTable {
    order: usize,
    identity: Element,
    left: Vec<Element>,
    right: Vec<Element>,
    labels: Option<Vec<String>>,
}

impl DigroupTable {
    /// Builds a table from row-major rows, checking dimensions and ranges.
    pub fn from_rows(
        identity: Element,
        left: &[Vec<Element>],
        right: &[Vec<Element>],
    ) -> Result<Self, TableError> {
        let order = left.len();
        if order == 0 {
            return Err(TableError::EmptyCarrier);
        }
        let flatten = |table: Product, rows: &[Vec<Element>]| -> Result<Vec<Element>, TableError> {
            if rows.len() != order {
                return Err(TableError::RowCount {
                    table,
                    expected: order,
                    found: rows.len(),
                });
            }
            let mut flat = Vec::with_capacity(order * order);
            for (row, entries) in rows.iter().enumerate() {
                if entries.len() != order {
                    return Err(TableError::RowLength {
                        table,
                        row,
                        expected: order,
                        found: entries.len(),
                    });
                }
                flat.extend_from_slice(entries);
            }
            Ok(flat)
        };
        let left = flatten(Product::Left, left)?;
        let right = flatten(Product::Right, right)?;
        Self::from_flat(order, identity, left, right)
    }

    /// Builds a table from flat row-major vectors of length `order²`.
    pub fn from_flat(
        order: usize,
        identity: Element,
        left: Vec<Element>,
        right: Vec<Element>,
    ) -> Result<Self, TableError> {
        if order == 0 {
            return Err(TableError::EmptyCarrier);
        }
        for (table, flat) in [(Product::Left, &left), (Product::Right, &right)] {
            if flat.len() != order * order {
                return Err(TableError::RowCount {
                    table,
                    expected: order,
                    found: flat.len() / order,
                });
            }
            if let Some(pos) = flat.iter().position(|&v| v >= order) {
                return Err(TableError::EntryOutOfRange {
                    table,
                    row: pos / order,
                    col: pos % order,
                    value: flat[pos],
                    order,
                });
            }
        }
        if identity >= order {
            return Err(TableError::IdentityOutOfRange { identity, order });
        }
        Ok(Self {
            order,
            identity,
            left,
            right,
            labels: None,
        })
    }

    /// Attaches display labels, one per element, pairwise distinct.
    pub fn with_labels<S: Into<String>>(
        mut self,
        labels: impl IntoIterator<Item = S>,
    ) -> Result<Self, TableError> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.order {
            return Err(TableError::LabelCount {
                expected: self.order,
                found: labels.len(),
            });
        }
        let mut seen = HashSet::new();
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(TableError::DuplicateLabel {
                    label: label.clone(),
                });
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `x`: its label if present, otherwise its index.
    pub fn label(&self, x: Element) -> String {
        match &self.labels {
            Some(labels) => labels[x].clone(),
            None => x.to_string(),
        }
    }

    /// Position of the element carrying `label`.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    /// `x ⇀ y`.
    #[inline]
    pub fn left(&self, x: Element, y: Element) -> Element {
        self.left[x * self.order + y]
    }

    /// `x ↼ y`.
    #[inline]
    pub fn right(&self, x: Element, y: Element) -> Element {
        self.right[x * self.order + y]
    }

    #[inline]
    pub fn apply(&self, product: Product, x: Element, y: Element) -> Element {
        match product {
            Product::Left => self.left(x, y),
            Product::Right => self.right(x, y),
        }
    }

    pub fn left_flat(&self) -> &[Element] {
        &self.left
    }

    pub fn right_flat(&self) -> &[Element] {
        &self.right
    }

    pub fn left_rows(&self) -> Vec<Vec<Element>> {
        self.left.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn right_rows(&self) -> Vec<Vec<Element>> {
        self.right.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    /// Compares the operation data only, ignoring labels.
    pub fn same_operations(&self, other: &Self) -> bool {
        self.order == other.order
            && self.identity == other.identity
            && self.left == other.left
            && self.right == other.right
    }

    /// Applies the bijection `perm` (old index → new index) to both tables.
    ///
    /// Labels follow their elements. Panics if `perm` is not a permutation of
    /// the carrier.
    pub fn relabel(&self, perm: &[Element]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n, "relabeling must cover the carrier");
        let mut inverse = vec![usize::MAX; n];
        for (old, &new) in perm.iter().enumerate() {
            assert!(new < n && inverse[new] == usize::MAX, "not a permutation");
            inverse[new] = old;
        }
        let build = |flat: &[Element]| -> Vec<Element> {
            let mut out = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    out[i * n + j] = perm[flat[inverse[i] * n + inverse[j]]];
                }
            }
            out
        };
        Self {
            order: n,
            identity: perm[self.identity],
            left: build(&self.left),
            right: build(&self.right),
            labels: self
                .labels
                .as_ref()
                .map(|labels| inverse.iter().map(|&old| labels[old].clone()).collect()),
        }
    }

    /// Restricts both tables to `members` (ascending), re-indexed densely.
    ///
    /// Returns `None` when the subset is empty, misses the identity, or is
    /// not closed under both products.
    pub fn restrict(&self, members: &[Element]) -> Option<Self> {
        let n = self.order;
        let mut position = vec![usize::MAX; n];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i;
        }
        let k = members.len();
        let identity = *position.get(self.identity).filter(|&&p| p != usize::MAX)?;
        let mut left = Vec::with_capacity(k * k);
        let mut right = Vec::with_capacity(k * k);
        for &x in members {
            for &y in members {
                let l = position[self.left(x, y)];
                let r = position[self.right(x, y)];
                if l == usize::MAX || r == usize::MAX {
                    return None;
                }
                left.push(l);
                right.push(r);
            }
        }
        let mut table = Self::from_flat(k, identity, left, right).ok()?;
        if let Some(labels) = &self.labels {
            table.labels = Some(members.iter().map(|&m| labels[m].clone()).collect());
        }
        Some(table)
    }

    pub(crate) fn with_labels_unchecked(mut self, labels: Option<Vec<String>>) -> Self {
        self.labels = labels;
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn projections(n: usize) -> DigroupTable {
        let left: Vec<Vec<usize>> = (0..n).map(|x| vec![x; n]).collect();
        let right: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
        DigroupTable::from_rows(0, &left, &right).unwrap()
    }

    #[test]
    fn rejects_ragged_rows() {
        let left = vec![vec![0, 0], vec![1]];
        let right = vec![vec![0, 1], vec![0, 1]];
        assert_eq!(
            DigroupTable::from_rows(0, &left, &right),
            Err(TableError::RowLength {
                table: Product::Left,
                row: 1,
                expected: 2,
                found: 1
            })
        );
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let left = vec![vec![0, 0], vec![1, 2]];
        let right = vec![vec![0, 1], vec![0, 1]];
        assert!(matches!(
            DigroupTable::from_rows(0, &left, &right),
            Err(TableError::EntryOutOfRange {
                value: 2,
                row: 1,
                col: 1,
                ..
            })
        ));
    }

    #[test]
    fn rejects_bad_identity_and_labels() {
        let t = projections(2);
        assert!(DigroupTable::from_flat(2, 2, t.left.clone(), t.right.clone()).is_err());
        assert_eq!(
            t.clone().with_labels(["x", "x"]),
            Err(TableError::DuplicateLabel { label: "x".into() })
        );
        assert!(matches!(
            t.with_labels(["x"]),
            Err(TableError::LabelCount {
                expected: 2,
                found: 1
            })
        ));
        assert_eq!(
            DigroupTable::from_rows(0, &[], &[]),
            Err(TableError::EmptyCarrier)
        );
    }

    #[test]
    fn relabel_moves_identity_and_labels() {
        let t = projections(3).with_labels(["e", "p", "q"]).unwrap();
        let r = t.relabel(&[2, 0, 1]);
        assert_eq!(r.identity(), 2);
        assert_eq!(r.labels().unwrap(), ["p", "q", "e"]);
        // projections stay projections under any relabeling
        assert!(r.same_operations(&projections(3).relabel(&[2, 0, 1])));
        assert_eq!(r.left(1, 0), 1);
        assert_eq!(r.right(1, 0), 0);
    }

    #[test]
    fn restrict_requires_closure_and_identity() {
        let t = projections(3);
        assert!(t.restrict(&[1, 2]).is_none());
        let sub = t.restrict(&[0, 2]).unwrap();
        assert_eq!(sub.order(), 2);
        assert!(sub.same_operations(&projections(2)));
    }
}
