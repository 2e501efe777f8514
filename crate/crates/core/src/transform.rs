//! Self-maps of a finite carrier and finite sets of them.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::mapping::Mapping;
use crate::table::Element;

/// A self-map of `0..carrier_size`, composed right to left:
/// `(f·g)(x) = f(g(x))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Transform {
    image: Vec<Element>,
}

impl Transform {
    /// Returns `None` if some image entry falls outside the carrier.
    pub fn new(image: Vec<Element>) -> Option<Self> {
        let n = image.len();
        image.iter().all(|&y| y < n).then_some(Self { image })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            image: (0..n).collect(),
        }
    }

    pub fn constant(n: usize, value: Element) -> Self {
        assert!(value < n);
        Self {
            image: vec![value; n],
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.image.len()
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    /// `self · other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Transform) -> Transform {
        debug_assert_eq!(self.carrier_size(), other.carrier_size());
        Transform {
            image: other.image.iter().map(|&y| self.image[y]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.image.len()];
        self.image
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn inverse(&self) -> Option<Transform> {
        if !self.is_bijective() {
            return None;
        }
        let mut image = vec![0; self.image.len()];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Some(Transform { image })
    }
}

/// Distinct transforms in first-appearance order, with the element labeling
/// `a ↦ index of the transform determined by a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformSet {
    carrier_size: usize,
    transforms: Vec<Transform>,
    label_of: Mapping,
    index: HashMap<Transform, usize>,
}

impl TransformSet {
    /// Collapses the per-element transforms `a ↦ f_a` to a set, keeping the
    /// labeling.
    pub fn from_labeled(carrier_size: usize, per_element: Vec<Transform>) -> Self {
        let mut transforms = Vec::new();
        let mut index = HashMap::new();
        let mut labels = Vec::with_capacity(per_element.len());
        for f in per_element {
            debug_assert_eq!(f.carrier_size(), carrier_size);
            let next = transforms.len();
            let i = *index.entry(f.clone()).or_insert_with(|| {
                transforms.push(f);
                next
            });
            labels.push(i);
        }
        let label_of =
            Mapping::new(labels.len(), transforms.len(), labels).expect("indices of collected set");
        Self {
            carrier_size,
            transforms,
            label_of,
            index,
        }
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn len(&self) -> usize {
        self.transforms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transforms.is_empty()
    }

    pub fn transforms(&self) -> &[Transform] {
        &self.transforms
    }

    pub fn get(&self, i: usize) -> &Transform {
        &self.transforms[i]
    }

    /// Element → transform index.
    pub fn label_of(&self) -> &Mapping {
        &self.label_of
    }

    /// The transform determined by element `a`.
    pub fn of(&self, a: Element) -> &Transform {
        &self.transforms[self.label_of.apply(a)]
    }

    pub fn index_of(&self, f: &Transform) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Smallest element labeled with transform `i`.
    pub fn representative(&self, i: usize) -> Element {
        self.label_of
            .image()
            .iter()
            .position(|&j| j == i)
            .expect("labeling is onto")
    }

    pub fn contains(&self, f: &Transform) -> bool {
        self.index.contains_key(f)
    }

    /// Index of `transforms[i] · transforms[j]`, if it is in the set.
    pub fn compose_indices(&self, i: usize, j: usize) -> Option<usize> {
        self.index_of(&self.transforms[i].compose(&self.transforms[j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_applies_right_operand_first() {
        let f = Transform::new(vec![1, 2, 0]).unwrap();
        let g = Transform::new(vec![0, 0, 1]).unwrap();
        assert_eq!(f.compose(&g).image(), [1, 1, 2]);
        assert_eq!(g.compose(&f).image(), [0, 1, 0]);
        assert!(f.compose(&f.inverse().unwrap()).is_identity());
        assert!(g.inverse().is_none());
        assert!(Transform::new(vec![0, 3]).is_none());
    }

    #[test]
    fn set_semantics_keep_labels() {
        let id = Transform::identity(3);
        let c = Transform::constant(3, 2);
        let set = TransformSet::from_labeled(3, vec![id.clone(), c.clone(), id.clone()]);
        assert_eq!(set.len(), 2);
        assert_eq!(set.label_of().image(), [0, 1, 0]);
        assert_eq!(set.of(2), &id);
        assert_eq!(set.representative(1), 1);
        assert_eq!(set.index_of(&c), Some(1));
        assert_eq!(set.compose_indices(1, 0), Some(1));
    }
}
