//! Subdigroups.
//!
//! A subset `H` is a subdigroup when it contains `e` and is a digroup under
//! the restricted products. Three equivalent tests are available:
//!
//! 1. restrict the tables to `H` and validate the result;
//! 2. `e ∈ H` and `(H ⇀ H⁻) ∪ (H⁻ ↼ H) ⊆ H`;
//! 3. `H ≠ ∅` and `(H ∗ H) ∪ H⁻ ⊆ H` for `∗ ∈ {⇀, ↼}`.
//!
//! `H⁻` is the set of Liu inverses of members of `H`, taken in the ambient
//! digroup.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digroup::{validate_digroup, Digroup};
use crate::table::Element;

/// Largest carrier a [`SubsetMask`] can describe.
pub const MAX_MASK_ORDER: usize = 64;

/// Largest order for which [`all_subdigroups`] scans every subset.
pub const MAX_SCAN_ORDER: usize = 16;

/// A subset of a carrier of at most [`MAX_MASK_ORDER`] elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SubsetMask {
    order: usize,
    bits: u64,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SubsetError {
    #[error("order {0} exceeds the subset limit of {MAX_MASK_ORDER}")]
    OrderTooLarge(usize),
    #[error("element {element} is outside 0..{order}")]
    OutOfRange { element: usize, order: usize },
    #[error("order {0} is too large for an exhaustive subset scan (limit {MAX_SCAN_ORDER})")]
    ScanTooLarge(usize),
}

impl SubsetMask {
    /// Panics if `order > MAX_MASK_ORDER`.
    pub fn empty(order: usize) -> Self {
        assert!(
            order <= MAX_MASK_ORDER,
            "subset masks hold at most 64 elements"
        );
        Self { order, bits: 0 }
    }

    pub fn full(order: usize) -> Self {
        let mut s = Self::empty(order);
        s.bits = if order == 64 {
            u64::MAX
        } else {
            (1u64 << order) - 1
        };
        s
    }

    pub fn from_bits(order: usize, bits: u64) -> Result<Self, SubsetError> {
        if order > MAX_MASK_ORDER {
            return Err(SubsetError::OrderTooLarge(order));
        }
        let full = Self::full(order).bits;
        if bits & !full != 0 {
            return Err(SubsetError::OutOfRange {
                element: (bits & !full).trailing_zeros() as usize,
                order,
            });
        }
        Ok(Self { order, bits })
    }

    pub fn from_elements(
        order: usize,
        elements: impl IntoIterator<Item = Element>,
    ) -> Result<Self, SubsetError> {
        if order > MAX_MASK_ORDER {
            return Err(SubsetError::OrderTooLarge(order));
        }
        let mut s = Self::empty(order);
        for x in elements {
            if x >= order {
                return Err(SubsetError::OutOfRange { element: x, order });
            }
            s.insert(x);
        }
        Ok(s)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn contains(&self, x: Element) -> bool {
        x < self.order && self.bits >> x & 1 == 1
    }

    pub fn insert(&mut self, x: Element) -> bool {
        assert!(x < self.order, "element outside the carrier");
        let fresh = !self.contains(x);
        self.bits |= 1 << x;
        fresh
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_subset(&self, other: &SubsetMask) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        SubsetMask {
            order: self.order,
            bits: self.bits | other.bits,
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).filter(|&x| self.contains(x))
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.elements().collect()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

fn check_order(d: &Digroup, h: &SubsetMask) {
    assert_eq!(d.order(), h.order(), "subset and digroup carriers differ");
}

/// Nonempty, closed under both products and under Liu inverses.
pub fn is_subdigroup(d: &Digroup, h: &SubsetMask) -> bool {
    check_order(d, h);
    !h.is_empty()
        && h.elements().all(|x| {
            h.contains(d.liu_inverse(x))
                && h.elements()
                    .all(|y| h.contains(d.left(x, y)) && h.contains(d.right(x, y)))
        })
}

/// The three equivalent subdigroup criteria, each evaluated from its own
/// definition: restriction-and-validate, the mixed inverse criterion, and
/// closure.
pub fn subdigroup_criteria(d: &Digroup, h: &SubsetMask) -> (bool, bool, bool) {
    check_order(d, h);
    (
        restriction_is_digroup(d, h),
        mixed_inverse_criterion(d, h),
        is_subdigroup(d, h),
    )
}

fn restriction_is_digroup(d: &Digroup, h: &SubsetMask) -> bool {
    if !h.contains(d.identity()) {
        return false;
    }
    d.restrict(&h.to_vec())
        .is_some_and(|t| validate_digroup(&t).ok)
}

fn mixed_inverse_criterion(d: &Digroup, h: &SubsetMask) -> bool {
    h.contains(d.identity())
        && h.elements().all(|x| {
            h.elements().all(|y| {
                h.contains(d.left(x, d.liu_inverse(y))) && h.contains(d.right(d.liu_inverse(x), y))
            })
        })
}

/// Smallest subdigroup containing `s` and the identity.
pub fn generated_subdigroup(d: &Digroup, s: &SubsetMask) -> SubsetMask {
    check_order(d, s);
    let mut h = *s;
    h.insert(d.identity());
    let mut frontier: Vec<Element> = h.to_vec();
    while let Some(x) = frontier.pop() {
        let add = |h: &mut SubsetMask, z: Element, frontier: &mut Vec<Element>| {
            if h.insert(z) {
                frontier.push(z);
            }
        };
        add(&mut h, d.liu_inverse(x), &mut frontier);
        for y in h.to_vec() {
            for z in [d.left(x, y), d.left(y, x), d.right(x, y), d.right(y, x)] {
                add(&mut h, z, &mut frontier);
            }
        }
    }
    h
}

/// Every subdigroup, in ascending mask order.
pub fn all_subdigroups(d: &Digroup) -> Result<Vec<SubsetMask>, SubsetError> {
    let n = d.order();
    if n > MAX_SCAN_ORDER {
        return Err(SubsetError::ScanTooLarge(n));
    }
    let e_bit = 1u64 << d.identity();
    Ok((1u64..1 << n)
        .filter(|bits| bits & e_bit != 0)
        .map(|bits| SubsetMask { order: n, bits })
        .filter(|h| is_subdigroup(d, h))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::Builtin;

    fn labeled(d: &Digroup, labels: &[&str]) -> SubsetMask {
        SubsetMask::from_elements(
            d.order(),
            labels.iter().map(|l| d.element_by_label(l).unwrap()),
        )
        .unwrap()
    }

    #[test]
    fn subdigroups_of_n() {
        let n = Builtin::N.build();
        assert!(is_subdigroup(&n, &labeled(&n, &["e", "α"])));
        assert!(is_subdigroup(&n, &labeled(&n, &["e", "δ", "ε"])));
        assert!(!is_subdigroup(&n, &labeled(&n, &["e", "β"])));
        assert!(!is_subdigroup(&n, &SubsetMask::empty(6)));
    }

    #[test]
    fn criteria_on_small_cases() {
        let n = Builtin::N.build();
        assert_eq!(
            subdigroup_criteria(&n, &labeled(&n, &["e", "α"])),
            (true, true, true)
        );
        assert_eq!(
            subdigroup_criteria(&n, &SubsetMask::empty(6)),
            (false, false, false)
        );
        let m = Builtin::M.build();
        for bits in 0..4 {
            let (a, b, c) = subdigroup_criteria(&m, &SubsetMask::from_bits(2, bits).unwrap());
            assert!(a == b && b == c, "mask {bits:b}");
        }
    }

    #[test]
    fn generated() {
        let n = Builtin::N.build();
        assert_eq!(
            generated_subdigroup(&n, &labeled(&n, &["β"])),
            SubsetMask::full(6)
        );
        assert_eq!(
            generated_subdigroup(&n, &labeled(&n, &["δ"])),
            labeled(&n, &["e", "δ"])
        );
        assert_eq!(
            generated_subdigroup(&n, &SubsetMask::empty(6)),
            labeled(&n, &["e"])
        );
    }

    #[test]
    fn enumerations() {
        let m = Builtin::M.build();
        assert_eq!(
            all_subdigroups(&m).unwrap(),
            [
                SubsetMask::from_elements(2, [0]).unwrap(),
                SubsetMask::full(2)
            ]
        );
        let n = Builtin::N.build();
        let subs = all_subdigroups(&n).unwrap();
        for expected in [
            labeled(&n, &["e"]),
            labeled(&n, &["e", "α"]),
            labeled(&n, &["e", "δ", "ε"]),
            SubsetMask::full(6),
        ] {
            assert!(subs.contains(&expected), "{expected}");
        }
        assert!(subs.windows(2).all(|w| w[0].bits() < w[1].bits()));
        assert_eq!(
            all_subdigroups(&Builtin::Trivial(1).build()).unwrap(),
            [SubsetMask::full(1)]
        );
        assert_eq!(
            all_subdigroups(&Builtin::Trivial(17).build()),
            Err(SubsetError::ScanTooLarge(17))
        );
    }

    #[test]
    fn mask_construction_errors() {
        assert_eq!(
            SubsetMask::from_elements(3, [3]),
            Err(SubsetError::OutOfRange {
                element: 3,
                order: 3
            })
        );
        assert!(SubsetMask::from_bits(2, 0b100).is_err());
        assert_eq!(
            SubsetMask::from_bits(65, 0),
            Err(SubsetError::OrderTooLarge(65))
        );
        assert_eq!(SubsetMask::full(64).len(), 64);
    }
}
