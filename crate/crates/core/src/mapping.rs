use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::Element;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum MappingError {
    #[error("image has {found} entries, domain has {expected}")]
    Length { expected: usize, found: usize },
    #[error("image of {from} is {to}, outside 0..{codomain}")]
    OutOfRange {
        from: usize,
        to: usize,
        codomain: usize,
    },
}

/// A function between two finite carriers, `image[x]` being the image of `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Mapping {
    domain_size: usize,
    codomain_size: usize,
    image: Vec<Element>,
}

impl Mapping {
    pub fn new(
        domain_size: usize,
        codomain_size: usize,
        image: Vec<Element>,
    ) -> Result<Self, MappingError> {
        if image.len() != domain_size {
            return Err(MappingError::Length {
                expected: domain_size,
                found: image.len(),
            });
        }
        if let Some((from, &to)) = image.iter().enumerate().find(|(_, &y)| y >= codomain_size) {
            return Err(MappingError::OutOfRange {
                from,
                to,
                codomain: codomain_size,
            });
        }
        Ok(Self {
            domain_size,
            codomain_size,
            image,
        })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            domain_size: n,
            codomain_size: n,
            image: (0..n).collect(),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.domain_size
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn image(&self) -> &[Element] {
        &self.image
    }

    #[inline]
    pub fn apply(&self, x: Element) -> Element {
        self.image[x]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain_size];
        self.image
            .iter()
            .all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    pub fn is_bijective(&self) -> bool {
        self.domain_size == self.codomain_size && self.is_injective()
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Mapping) -> Option<Mapping> {
        (self.codomain_size == other.domain_size).then(|| Mapping {
            domain_size: self.domain_size,
            codomain_size: other.codomain_size,
            image: self.image.iter().map(|&y| other.image[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Option<Mapping> {
        if !self.is_bijective() {
            return None;
        }
        let mut image = vec![0; self.domain_size];
        for (x, &y) in self.image.iter().enumerate() {
            image[y] = x;
        }
        Some(Mapping {
            domain_size: self.domain_size,
            codomain_size: self.domain_size,
            image,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range() {
        assert_eq!(
            Mapping::new(2, 2, vec![0, 2]),
            Err(MappingError::OutOfRange {
                from: 1,
                to: 2,
                codomain: 2
            })
        );
        assert!(Mapping::new(2, 2, vec![0]).is_err());
    }

    #[test]
    fn inverse_and_composition() {
        let m = Mapping::new(3, 3, vec![0, 2, 1]).unwrap();
        assert!(m.is_bijective());
        let inv = m.inverse().unwrap();
        assert_eq!(m.then(&inv).unwrap(), Mapping::identity(3));
        let constant = Mapping::new(3, 3, vec![0, 0, 0]).unwrap();
        assert!(!constant.is_injective());
        assert!(constant.inverse().is_none());
    }
}
