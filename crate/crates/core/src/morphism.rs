//! Homomorphisms, isomorphisms and exact canonical forms.
//!
//! Homomorphisms preserve the identity and both products, so every
//! isomorphism fixes the identity. The canonical form of a digroup is its
//! lexicographically least relabeling (left table then right table, both
//! row-major) over all identity-fixing bijections that send the identity to 0.

use std::cmp::Ordering;

use thiserror::Error;

use crate::digroup::Digroup;
use crate::mapping::Mapping;
use crate::table::Element;

/// Largest order accepted by [`canonical_form`] and [`automorphisms`].
pub const MAX_CANONICAL_ORDER: usize = 8;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MorphismError {
    #[error("order {0} is above the canonical-form limit of {MAX_CANONICAL_ORDER}")]
    OrderTooLarge(usize),
}

/// Maps the identity to the identity and preserves `⇀` and `↼`.
pub fn is_homomorphism(from: &Digroup, to: &Digroup, m: &Mapping) -> bool {
    if m.domain_size() != from.order() || m.codomain_size() != to.order() {
        return false;
    }
    if m.apply(from.identity()) != to.identity() {
        return false;
    }
    let n = from.order();
    (0..n).all(|x| {
        (0..n).all(|y| {
            let (fx, fy) = (m.apply(x), m.apply(y));
            m.apply(from.left(x, y)) == to.left(fx, fy)
                && m.apply(from.right(x, y)) == to.right(fx, fy)
        })
    })
}

/// Backtracking over identity-fixing bijections, images tried in ascending
/// order, pruning on every fully assigned product.
struct BijectionSearch<'a> {
    from: &'a Digroup,
    to: &'a Digroup,
    image: Vec<Option<Element>>,
    used: Vec<bool>,
}

impl<'a> BijectionSearch<'a> {
    fn new(from: &'a Digroup, to: &'a Digroup) -> Option<Self> {
        if from.order() != to.order() {
            return None;
        }
        let n = from.order();
        let mut s = Self {
            from,
            to,
            image: vec![None; n],
            used: vec![false; n],
        };
        s.image[from.identity()] = Some(to.identity());
        s.used[to.identity()] = true;
        s.consistent(from.identity()).then_some(s)
    }

    /// Checks every product between `x` and already assigned elements.
    fn consistent(&self, x: Element) -> bool {
        let fx = self.image[x].expect("x is assigned");
        let (from, to) = (self.from, self.to);
        (0..from.order()).all(|y| {
            let Some(fy) = self.image[y] else {
                return true;
            };
            let pairs = [
                (from.left(x, y), to.left(fx, fy)),
                (from.left(y, x), to.left(fy, fx)),
                (from.right(x, y), to.right(fx, fy)),
                (from.right(y, x), to.right(fy, fx)),
            ];
            pairs
                .iter()
                .all(|&(p, q)| self.image[p].is_none_or(|fp| fp == q))
        })
    }

    /// Visits complete bijections; stops when `visit` returns `false`.
    fn run(&mut self, next: Element, visit: &mut dyn FnMut(&[Option<Element>]) -> bool) -> bool {
        let n = self.from.order();
        let Some(x) = (next..n).find(|&x| self.image[x].is_none()) else {
            return visit(&self.image);
        };
        for y in 0..n {
            if self.used[y] {
                continue;
            }
            self.image[x] = Some(y);
            self.used[y] = true;
            let keep_going = !self.consistent(x) || self.run(x + 1, visit);
            self.image[x] = None;
            self.used[y] = false;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn to_mapping(image: &[Option<Element>]) -> Mapping {
    let n = image.len();
    Mapping::new(n, n, image.iter().map(|y| y.expect("complete")).collect())
        .expect("bijection onto the carrier")
}

/// First isomorphism in lexicographic order of images, if any.
pub fn find_isomorphism(from: &Digroup, to: &Digroup) -> Option<Mapping> {
    if from.order() != to.order()
        || from.is_group() != to.is_group()
        || from.is_commutative() != to.is_commutative()
    {
        return None;
    }
    let mut search = BijectionSearch::new(from, to)?;
    let mut found = None;
    search.run(0, &mut |image| {
        found = Some(to_mapping(image));
        false
    });
    found
}

pub fn are_isomorphic(a: &Digroup, b: &Digroup) -> bool {
    find_isomorphism(a, b).is_some()
}

/// All bijective self-homomorphisms, in lexicographic order.
pub fn automorphisms(d: &Digroup) -> Result<Vec<Mapping>, MorphismError> {
    if d.order() > MAX_CANONICAL_ORDER {
        return Err(MorphismError::OrderTooLarge(d.order()));
    }
    let mut all = Vec::new();
    if let Some(mut search) = BijectionSearch::new(d, d) {
        search.run(0, &mut |image| {
            all.push(to_mapping(image));
            true
        });
    }
    Ok(all)
}

/// A canonical relabeling together with the map that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalTable {
    /// The least relabeling; identity at 0, no labels.
    pub table: Digroup,
    /// Source element → canonical element.
    pub certificate: Mapping,
}

/// Order used for canonical forms and catalogs: left table, then right table.
pub fn table_cmp(a: &Digroup, b: &Digroup) -> Ordering {
    a.order()
        .cmp(&b.order())
        .then_with(|| a.left_flat().cmp(b.left_flat()))
        .then_with(|| a.right_flat().cmp(b.right_flat()))
}

pub fn canonical_form(d: &Digroup) -> Result<CanonicalTable, MorphismError> {
    let n = d.order();
    if n > MAX_CANONICAL_ORDER {
        return Err(MorphismError::OrderTooLarge(n));
    }
    let e = d.identity();
    // preimage[new] = old; position 0 holds the identity
    let mut preimage: Vec<Element> = std::iter::once(e)
        .chain((0..n).filter(|&x| x != e))
        .collect();
    let mut perm = vec![0; n];
    let mut best: Option<(Vec<Element>, Vec<Element>)> = None;
    loop {
        for (new, &old) in preimage.iter().enumerate() {
            perm[old] = new;
        }
        let cell = |k: usize| -> Element {
            let (flat, k) = if k < n * n {
                (d.left_flat(), k)
            } else {
                (d.right_flat(), k - n * n)
            };
            perm[flat[preimage[k / n] * n + preimage[k % n]]]
        };
        let better = match &best {
            None => true,
            Some((_, cells)) => {
                (0..2 * n * n)
                    .map(|k| cell(k).cmp(&cells[k]))
                    .find(|o| o.is_ne())
                    == Some(Ordering::Less)
            }
        };
        if better {
            best = Some((perm.clone(), (0..2 * n * n).map(cell).collect()));
        }
        if !next_permutation(&mut preimage[1..]) {
            break;
        }
    }
    let (perm, _) = best.expect("at least one relabeling");
    let table = d.relabel(&perm).into_table().without_labels();
    Ok(CanonicalTable {
        table: Digroup::new(table).expect("relabeling preserves the axioms"),
        certificate: Mapping::new(n, n, perm).expect("permutation"),
    })
}

/// Rearranges into the next lexicographic permutation; `false` after the last.
pub(crate) fn next_permutation(v: &mut [Element]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len())
        .rev()
        .find(|&j| v[j] > v[i])
        .expect("pivot");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
