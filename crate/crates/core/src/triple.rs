//! Standard triples and the digroups they produce.
//!
//! A standard triple on a set `Ω` is a permutation group `𝒢`, a
//! transformation semigroup `𝒮` with right unit `e_𝒮` and chosen left inverses
//! `f⁻ˡ`, and a map `φ: 𝒮 → 𝒢` subject to
//!
//! ```text
//! f·e_𝒮 = f                     f⁻ˡ·f = e_𝒮
//! φ(fg) = φ(f)φ(g)              φ(𝒮)𝒮 ⊆ 𝒮
//! φ(e_𝒮)·f = f                  e_𝒮·f = φ(f)·e_𝒮
//! φ(f)·f⁻ˡ = e_𝒮
//! f·φ(g) = f·g                  φ(φ(f)·g) = φ(f)φ(g)
//! ```
//!
//! `𝒢 × 𝒮` is then a digroup with `(α,f)⇀(β,g) = (αβ, fg)`,
//! `(α,f)↼(β,g) = (αβ, φ(f)g)` and identity `(1, e_𝒮)`.

use std::collections::HashMap;

use thiserror::Error;

use crate::digroup::{Digroup, DigroupError};
use crate::report::{Law, ValidationReport, Violation};
use crate::table::DigroupTable;
use crate::transform::Transform;
use crate::translations::left_translations;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum TripleError {
    #[error("{part} transform {index} does not act on a carrier of size {carrier}")]
    Carrier {
        part: &'static str,
        index: usize,
        carrier: usize,
    },
    #[error("{part} transforms {first} and {second} are equal")]
    Duplicate {
        part: &'static str,
        first: usize,
        second: usize,
    },
    #[error("{field} must have {expected} entries, found {found}")]
    Length {
        field: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{field} entry {index} = {value} is out of range")]
    Index {
        field: &'static str,
        index: usize,
        value: usize,
    },
    #[error("{part} part is empty")]
    Empty { part: &'static str },
    #[error("triple fails its conditions: {0}")]
    Invalid(ValidationReport),
    #[error("produced table is not a digroup: {0}")]
    NotADigroup(DigroupError),
}

/// Transforms are compared extensionally and referred to by index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTriple {
    carrier_size: usize,
    group_part: Vec<Transform>,
    semi_part: Vec<Transform>,
    right_unit: usize,
    left_inverse: Vec<usize>,
    phi: Vec<usize>,
    group_index: HashMap<Transform, usize>,
    semi_index: HashMap<Transform, usize>,
}

fn index_part(
    part: &'static str,
    carrier: usize,
    transforms: &[Transform],
) -> Result<HashMap<Transform, usize>, TripleError> {
    if transforms.is_empty() {
        return Err(TripleError::Empty { part });
    }
    let mut index = HashMap::new();
    for (i, f) in transforms.iter().enumerate() {
        if f.carrier_size() != carrier {
            return Err(TripleError::Carrier {
                part,
                index: i,
                carrier,
            });
        }
        if let Some(&first) = index.get(f) {
            return Err(TripleError::Duplicate {
                part,
                first,
                second: i,
            });
        }
        index.insert(f.clone(), i);
    }
    Ok(index)
}

fn check_indices(
    field: &'static str,
    values: &[usize],
    expected: usize,
    bound: usize,
) -> Result<(), TripleError> {
    if values.len() != expected {
        return Err(TripleError::Length {
            field,
            expected,
            found: values.len(),
        });
    }
    match values.iter().enumerate().find(|(_, &v)| v >= bound) {
        Some((index, &value)) => Err(TripleError::Index {
            field,
            index,
            value,
        }),
        None => Ok(()),
    }
}

impl StandardTriple {
    /// Checks shapes and index ranges only; the triple conditions are
    /// decided by [`validate_triple`].
    pub fn new(
        carrier_size: usize,
        group_part: Vec<Transform>,
        semi_part: Vec<Transform>,
        right_unit: usize,
        left_inverse: Vec<usize>,
        phi: Vec<usize>,
    ) -> Result<Self, TripleError> {
        let group_index = index_part("group", carrier_size, &group_part)?;
        let semi_index = index_part("semigroup", carrier_size, &semi_part)?;
        let s = semi_part.len();
        if right_unit >= s {
            return Err(TripleError::Index {
                field: "right_unit",
                index: 0,
                value: right_unit,
            });
        }
        check_indices("left_inverse", &left_inverse, s, s)?;
        check_indices("phi", &phi, s, group_part.len())?;
        Ok(Self {
            carrier_size,
            group_part,
            semi_part,
            right_unit,
            left_inverse,
            phi,
            group_index,
            semi_index,
        })
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn group_part(&self) -> &[Transform] {
        &self.group_part
    }

    pub fn semi_part(&self) -> &[Transform] {
        &self.semi_part
    }

    pub fn right_unit(&self) -> usize {
        self.right_unit
    }

    pub fn left_inverse(&self) -> &[usize] {
        &self.left_inverse
    }

    pub fn phi(&self) -> &[usize] {
        &self.phi
    }

    pub fn group_index_of(&self, f: &Transform) -> Option<usize> {
        self.group_index.get(f).copied()
    }

    pub fn semi_index_of(&self, f: &Transform) -> Option<usize> {
        self.semi_index.get(f).copied()
    }

    /// Index of the identity map in the group part.
    pub fn group_identity(&self) -> Option<usize> {
        self.group_index_of(&Transform::identity(self.carrier_size))
    }

    /// Same triple with a different right unit, for probing the checker.
    pub fn with_right_unit(mut self, right_unit: usize) -> Result<Self, TripleError> {
        if right_unit >= self.semi_part.len() {
            return Err(TripleError::Index {
                field: "right_unit",
                index: 0,
                value: right_unit,
            });
        }
        self.right_unit = right_unit;
        Ok(self)
    }
}

/// Checks every triple condition over all transforms and pairs.
///
/// Witnesses are transform indices: group-part indices for
/// [`Law::GroupClosure`], semigroup-part indices otherwise.
pub fn validate_triple(t: &StandardTriple) -> ValidationReport {
    let mut violations = Vec::new();
    let g = &t.group_part;
    let s = &t.semi_part;
    let unit = &s[t.right_unit];
    let phi = |f: usize| &g[t.phi[f]];

    // group part: identity, bijections, products and inverses
    if t.group_identity().is_none() {
        violations.push(Violation::missing(Law::GroupClosure, &[]));
    }
    for (i, a) in g.iter().enumerate() {
        match a.inverse() {
            Some(inv) if t.group_index_of(&inv).is_some() => {}
            _ => violations.push(Violation::missing(Law::GroupClosure, &[i])),
        }
        for (j, b) in g.iter().enumerate() {
            if t.group_index_of(&a.compose(b)).is_none() {
                violations.push(Violation::missing(Law::GroupClosure, &[i, j]));
            }
        }
    }

    let mut missing = Vec::new();
    let mut eq = |law: Law, w: &[usize], lhs: &Transform, rhs: &Transform| {
        if lhs != rhs {
            violations.push(Violation::missing(law, w));
        }
    };
    for f in 0..s.len() {
        let sf = &s[f];
        eq(Law::TripleRightUnit, &[f], &sf.compose(unit), sf);
        eq(
            Law::TripleLeftInverse,
            &[f],
            &s[t.left_inverse[f]].compose(sf),
            unit,
        );
        eq(Law::TriplePhiUnit, &[f], &phi(t.right_unit).compose(sf), sf);
        eq(
            Law::TripleUnitSwap,
            &[f],
            &unit.compose(sf),
            &phi(f).compose(unit),
        );
        eq(
            Law::TriplePhiInverse,
            &[f],
            &phi(f).compose(&s[t.left_inverse[f]]),
            unit,
        );
        for (gi, sg) in s.iter().enumerate() {
            let w = [f, gi];
            let fg = sf.compose(sg);
            eq(Law::TriplePhiAbsorb, &w, &sf.compose(phi(gi)), &fg);
            let phi_product = phi(f).compose(phi(gi));
            match t.semi_index_of(&fg) {
                Some(k) => eq(Law::TriplePhiMultiplicative, &w, phi(k), &phi_product),
                None => missing.push(Violation::missing(Law::SemiClosure, &w)),
            }
            match t.semi_index_of(&phi(f).compose(sg)) {
                Some(k) => eq(Law::TriplePhiTwisted, &w, phi(k), &phi_product),
                None => missing.push(Violation::missing(Law::TriplePhiAction, &w)),
            }
        }
    }
    violations.extend(missing);
    ValidationReport::from_violations(violations)
}

/// The triple `({L↼a}, {L⇀a}, φ)` on the carrier of `d`.
///
/// `{L⇀a}` has one member per element, so semigroup-part indices coincide
/// with elements.
pub fn triple_from_digroup(d: &Digroup) -> StandardTriple {
    let (lleft, lright) = left_translations(d);
    let n = d.order();
    debug_assert_eq!(lright.len(), n);
    let semi_of = |a| lright.label_of().apply(a);
    let mut left_inverse = vec![0; n];
    let mut phi = vec![0; n];
    for a in 0..n {
        left_inverse[semi_of(a)] = semi_of(d.liu_inverse(a));
        phi[semi_of(a)] = lleft.label_of().apply(a);
    }
    StandardTriple::new(
        n,
        lleft.transforms().to_vec(),
        lright.transforms().to_vec(),
        semi_of(d.identity()),
        left_inverse,
        phi,
    )
    .expect("translation sets form a well-shaped triple")
}

/// The digroup on `𝒢 × 𝒮`; pair `(α, f)` sits at `α * |𝒮| + f`.
///
/// Rejects triples that fail [`validate_triple`].
pub fn digroup_from_triple(t: &StandardTriple) -> Result<Digroup, TripleError> {
    let report = validate_triple(t);
    if !report.ok {
        return Err(TripleError::Invalid(report));
    }
    let (gn, sn) = (t.group_part.len(), t.semi_part.len());
    let order = gn * sn;
    let group_mul = |a: usize, b: usize| {
        t.group_index_of(&t.group_part[a].compose(&t.group_part[b]))
            .expect("validated group closure")
    };
    let semi_of = |f: Transform| t.semi_index_of(&f).expect("validated semigroup closure");
    let mut left = Vec::with_capacity(order * order);
    let mut right = Vec::with_capacity(order * order);
    for p in 0..order {
        let (alpha, f) = (p / sn, p % sn);
        for q in 0..order {
            let (beta, g) = (q / sn, q % sn);
            let ab = group_mul(alpha, beta);
            left.push(ab * sn + semi_of(t.semi_part[f].compose(&t.semi_part[g])));
            let twisted = t.group_part[t.phi[f]].compose(&t.semi_part[g]);
            right.push(ab * sn + semi_of(twisted));
        }
    }
    let identity = t.group_identity().expect("validated identity") * sn + t.right_unit;
    let table =
        DigroupTable::from_flat(order, identity, left, right).expect("pair indices are in range");
    Digroup::new(table).map_err(TripleError::NotADigroup)
}

/// Index in `digroup_from_triple(t)` of the pair `(α, f)`.
pub fn pair_index(t: &StandardTriple, alpha: usize, f: usize) -> usize {
    alpha * t.semi_part.len() + f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::Builtin;

    #[test]
    fn triples_from_examples() {
        let tm = triple_from_digroup(&Builtin::M.build());
        assert_eq!(
            (
                tm.carrier_size(),
                tm.group_part().len(),
                tm.semi_part().len()
            ),
            (2, 1, 2)
        );
        let tn = triple_from_digroup(&Builtin::N.build());
        assert_eq!(
            (
                tn.carrier_size(),
                tn.group_part().len(),
                tn.semi_part().len()
            ),
            (6, 2, 6)
        );
        assert!(validate_triple(&tn).ok);
        let tz = triple_from_digroup(&Builtin::Cyclic(2).build());
        assert_eq!(tz.group_part(), tz.semi_part());
        assert_eq!(tz.phi(), [0, 1]);
    }

    #[test]
    fn non_unit_right_unit_is_caught() {
        let tn = triple_from_digroup(&Builtin::N.build());
        let beta = Builtin::N.build().element_by_label("β").unwrap();
        let broken = tn.with_right_unit(beta).unwrap();
        let report = validate_triple(&broken);
        assert!(report.violates(Law::TripleRightUnit), "{report}");
        assert!(matches!(
            digroup_from_triple(&broken),
            Err(TripleError::Invalid(_))
        ));
    }

    #[test]
    fn round_trip_orders() {
        let dm = digroup_from_triple(&triple_from_digroup(&Builtin::M.build())).unwrap();
        assert_eq!(dm.order(), 2);
        let dn = digroup_from_triple(&triple_from_digroup(&Builtin::N.build())).unwrap();
        assert_eq!(dn.order(), 12);
    }

    #[test]
    fn shape_errors() {
        let id = Transform::identity(2);
        assert!(matches!(
            StandardTriple::new(
                2,
                vec![id.clone(), id.clone()],
                vec![id.clone()],
                0,
                vec![0],
                vec![0]
            ),
            Err(TripleError::Duplicate { part: "group", .. })
        ));
        assert!(matches!(
            StandardTriple::new(2, vec![id.clone()], vec![id.clone()], 0, vec![0], vec![1]),
            Err(TripleError::Index { field: "phi", .. })
        ));
        assert!(matches!(
            StandardTriple::new(
                2,
                vec![id.clone()],
                vec![Transform::identity(3)],
                0,
                vec![0],
                vec![0]
            ),
            Err(TripleError::Carrier {
                part: "semigroup",
                ..
            })
        ));
        assert!(matches!(
            StandardTriple::new(2, vec![id.clone()], vec![id], 0, vec![], vec![0]),
            Err(TripleError::Length {
                field: "left_inverse",
                ..
            })
        ));
    }

    #[test]
    fn group_part_must_be_a_group() {
        // group part {identity, constant}: not bijective, not closed under inverse
        let id = Transform::identity(2);
        let c = Transform::constant(2, 0);
        let t = StandardTriple::new(2, vec![id.clone(), c], vec![id], 0, vec![0], vec![0]).unwrap();
        let report = validate_triple(&t);
        assert!(report.violates(Law::GroupClosure));
    }
}
