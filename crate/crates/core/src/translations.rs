//! Translations of a digroup and the digroups built from them.
//!
//! For `a ∈ G` the left translations are `L⇀a(x) = a⇀x` and `L↼a(x) = a↼x`,
//! the right translations `R⇀a(x) = x⇀a` and `R↼a(x) = x↼a`. `{L↼a}` is a
//! group of permutations, `{L⇀a}` a semigroup with right unit `L⇀e`, and
//! `φ(L⇀a) = L↼a` is a semigroup homomorphism between them.
//!
//! The pair set `{L↼a} × {L⇀a}` is a digroup under
//!
//! ```text
//! (L↼a, L⇀b) ⇀ (L↼c, L⇀d) = (L↼a·L↼c, L⇀b·L⇀d)
//! (L↼a, L⇀b) ↼ (L↼c, L⇀d) = (L↼a·L↼c, L⇀(b↼d))
//! ```
//!
//! and `a ↦ (L↼a, L⇀a)` embeds `G` onto its diagonal. The right-translation
//! analogue on `{R↼a} × {R⇀a}` uses reversed composition:
//!
//! ```text
//! (f, α) ⇀ (g, β) = (ψ(g)·f, β·α)
//! (f, α) ↼ (g, β) = (g·f,    β·α)
//! ```
//!
//! with `ψ(R↼c) = R⇀c`, so that `a ↦ (R↼a, R⇀a)` is again an embedding.
//! Every construction validates its result before returning it.

use thiserror::Error;

use crate::digroup::{validate_digroup, Digroup};
use crate::mapping::Mapping;
use crate::morphism::{find_isomorphism, is_homomorphism};
use crate::report::{Law, ValidationReport, Violation};
use crate::subdigroup::{is_subdigroup, SubsetMask, MAX_MASK_ORDER};
use crate::table::{DigroupTable, Element};
use crate::transform::{Transform, TransformSet};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("constructed table is not a digroup: {0}")]
    NotADigroup(ValidationReport),
    #[error("composition of transforms {0} and {1} leaves the translation set")]
    NotClosed(usize, usize),
    #[error("the two routes for the right product disagree at pairs {0} and {1}")]
    RoutesDisagree(usize, usize),
    #[error("product of order {0} is too large for a diagonal subset (limit {MAX_MASK_ORDER})")]
    TooLarge(usize),
    #[error("embedding check failed: {0}")]
    Embedding(&'static str),
}

/// `({L↼a}, {L⇀a})`: rows of the right table and rows of the left table.
pub fn left_translations(d: &Digroup) -> (TransformSet, TransformSet) {
    let n = d.order();
    let row = |f: fn(&DigroupTable, Element, Element) -> Element, a: Element| {
        Transform::new((0..n).map(|x| f(d.table(), a, x)).collect()).expect("table entries")
    };
    let lleft = (0..n).map(|a| row(DigroupTable::right, a)).collect();
    let lright = (0..n).map(|a| row(DigroupTable::left, a)).collect();
    (
        TransformSet::from_labeled(n, lleft),
        TransformSet::from_labeled(n, lright),
    )
}

/// `({R⇀a}, {R↼a})`: columns of the left table and columns of the right table.
pub fn right_translations(d: &Digroup) -> (TransformSet, TransformSet) {
    let n = d.order();
    let col = |f: fn(&DigroupTable, Element, Element) -> Element, a: Element| {
        Transform::new((0..n).map(|x| f(d.table(), x, a)).collect()).expect("table entries")
    };
    let rright = (0..n).map(|a| col(DigroupTable::left, a)).collect();
    let rleft = (0..n).map(|a| col(DigroupTable::right, a)).collect();
    (
        TransformSet::from_labeled(n, rright),
        TransformSet::from_labeled(n, rleft),
    )
}

/// `φ(L⇀a) = L↼a`, as a map from `{L⇀a}` indices to `{L↼a}` indices.
pub fn phi(d: &Digroup) -> Mapping {
    let (lleft, lright) = left_translations(d);
    phi_between(&lleft, &lright)
}

fn phi_between(group: &TransformSet, semi: &TransformSet) -> Mapping {
    let image = (0..semi.len())
        .map(|j| group.label_of().apply(semi.representative(j)))
        .collect();
    Mapping::new(semi.len(), group.len(), image).expect("indices into the group part")
}

/// Exhaustively checks the translation identities, the group and semigroup
/// structure of the translation sets, and the properties of `φ`.
pub fn verify_translation_identities(d: &Digroup) -> ValidationReport {
    let n = d.order();
    let e = d.identity();
    let (lleft, lright) = left_translations(d);
    let one = Transform::identity(n);
    let ll = |a: Element| lleft.of(a);
    let lr = |a: Element| lright.of(a);
    let phi = |f: &Transform| -> Option<&Transform> {
        lright
            .index_of(f)
            .map(|j| lleft.of(lright.representative(j)))
    };
    let inv = |a: Element| d.liu_inverse(a);
    let mut violations = Vec::new();
    let mut check = |law: Law, w: &[Element], lhs: &Transform, rhs: &Transform| {
        if lhs != rhs {
            violations.push(Violation::missing(law, w));
        }
    };
    for a in 0..n {
        for b in 0..n {
            let w = [a, b];
            check(
                Law::LeftTransLeftProduct,
                &w,
                ll(d.left(a, b)),
                &ll(a).compose(ll(b)),
            );
            check(
                Law::LeftTransRightProduct,
                &w,
                ll(d.right(a, b)),
                &ll(a).compose(ll(b)),
            );
            check(
                Law::RightTransLeftProduct,
                &w,
                lr(d.left(a, b)),
                &lr(a).compose(lr(b)),
            );
            check(
                Law::RightTransMixed,
                &w,
                &lr(a).compose(lr(b)),
                &lr(a).compose(ll(b)),
            );
            check(
                Law::RightTransRightProduct,
                &w,
                lr(d.right(a, b)),
                &ll(a).compose(lr(b)),
            );
        }
    }
    check(Law::LeftTransUnit, &[e], ll(e), &one);
    for a in 0..n {
        let w = [a];
        check(Law::RightTransRightUnit, &w, &lr(a).compose(lr(e)), lr(a));
        check(
            Law::RightTransUnitSwap,
            &w,
            &lr(e).compose(lr(a)),
            &ll(a).compose(lr(e)),
        );
        check(Law::LeftTransInverse, &w, &ll(inv(a)).compose(ll(a)), &one);
        check(Law::LeftTransInverse, &w, &ll(a).compose(ll(inv(a))), &one);
        check(
            Law::RightTransInverse,
            &w,
            &lr(inv(a)).compose(lr(a)),
            lr(e),
        );
        check(
            Law::RightTransInverse,
            &w,
            &ll(a).compose(lr(inv(a))),
            lr(e),
        );
    }
    let mut missing = Vec::new();
    for (law, set) in [
        (Law::LeftTransClosure, &lleft),
        (Law::RightTransClosure, &lright),
    ] {
        for i in 0..set.len() {
            for j in 0..set.len() {
                if set.compose_indices(i, j).is_none() {
                    missing.push(Violation::missing(law, &[i, j]));
                }
            }
        }
    }
    // φ laws over the distinct members of {L⇀a}, witnessed by representatives
    let reps: Vec<Element> = (0..lright.len())
        .map(|j| lright.representative(j))
        .collect();
    let phi_of = |a: Element| ll(a);
    check(Law::PhiUnit, &[e], phi_of(e), &one);
    for &a in &reps {
        check(
            Law::PhiUnitSwap,
            &[a],
            &lr(e).compose(lr(a)),
            &phi_of(a).compose(lr(e)),
        );
        check(Law::PhiInverse, &[a], &phi_of(a).compose(lr(inv(a))), lr(e));
        for &b in &reps {
            let w = [a, b];
            let product = lr(a).compose(lr(b));
            match phi(&product) {
                Some(image) => check(
                    Law::PhiHomomorphism,
                    &w,
                    image,
                    &phi_of(a).compose(phi_of(b)),
                ),
                None => missing.push(Violation::missing(Law::PhiHomomorphism, &w)),
            }
            check(Law::PhiAbsorb, &w, &lr(a).compose(phi_of(b)), &product);
            let twisted = phi_of(a).compose(lr(b));
            match phi(&twisted) {
                Some(image) => check(Law::PhiTwisted, &w, image, &phi_of(a).compose(phi_of(b))),
                None => missing.push(Violation::missing(Law::PhiTwisted, &w)),
            }
        }
    }
    violations.extend(missing);
    ValidationReport::from_violations(violations)
}

/// A digroup on a product of two transform sets, with the embedding of the
/// source digroup onto its diagonal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductDigroup {
    /// Pair `(i, j)` sits at index `i * second.len() + j`.
    pub table: Digroup,
    pub first: TransformSet,
    pub second: TransformSet,
    pub pair_labels: Vec<(usize, usize)>,
    /// Source element → pair index.
    pub eta: Mapping,
    /// Image of `eta`.
    pub diagonal: SubsetMask,
}

impl ProductDigroup {
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        i * self.second.len() + j
    }

    pub fn pair(&self, p: usize) -> (usize, usize) {
        self.pair_labels[p]
    }

    /// Applies pair `p = (f, g)` to the point `(x, y)` componentwise.
    pub fn pair_action(&self, p: usize, point: (Element, Element)) -> (Element, Element) {
        let (i, j) = self.pair(p);
        (
            self.first.get(i).apply(point.0),
            self.second.get(j).apply(point.1),
        )
    }

    /// The diagonal restricted out of the product, as a digroup.
    pub fn diagonal_digroup(&self) -> Digroup {
        let sub = self
            .table
            .restrict(&self.diagonal.to_vec())
            .expect("diagonal is closed");
        Digroup::new(sub).expect("diagonal is a subdigroup")
    }
}

type PairOp<'a> =
    dyn Fn(usize, usize, usize, usize) -> Result<(usize, usize), ConstructionError> + 'a;

fn build_product(
    d: &Digroup,
    first: TransformSet,
    second: TransformSet,
    left_op: &PairOp<'_>,
    right_op: &PairOp<'_>,
) -> Result<ProductDigroup, ConstructionError> {
    let (m1, m2) = (first.len(), second.len());
    let order = m1 * m2;
    if order > MAX_MASK_ORDER {
        return Err(ConstructionError::TooLarge(order));
    }
    let pair_labels: Vec<(usize, usize)> = (0..order).map(|p| (p / m2, p % m2)).collect();
    let mut left = Vec::with_capacity(order * order);
    let mut right = Vec::with_capacity(order * order);
    for &(i, j) in &pair_labels {
        for &(k, l) in &pair_labels {
            let (a, b) = left_op(i, j, k, l)?;
            left.push(a * m2 + b);
            let (a, b) = right_op(i, j, k, l)?;
            right.push(a * m2 + b);
        }
    }
    let e = d.identity();
    let identity = first.label_of().apply(e) * m2 + second.label_of().apply(e);
    let labels: Vec<String> = pair_labels
        .iter()
        .map(|&(i, j)| {
            format!(
                "({},{})",
                d.label(first.representative(i)),
                d.label(second.representative(j))
            )
        })
        .collect();
    let table = DigroupTable::from_flat(order, identity, left, right)
        .expect("pair indices are in range")
        .with_labels(labels)
        .expect("pair labels are distinct");
    let report = validate_digroup(&table);
    if !report.ok {
        return Err(ConstructionError::NotADigroup(report));
    }
    let table = Digroup::new(table).expect("validated above");
    let eta_image: Vec<usize> = (0..d.order())
        .map(|a| first.label_of().apply(a) * m2 + second.label_of().apply(a))
        .collect();
    let diagonal = SubsetMask::from_elements(order, eta_image.iter().copied())
        .expect("order within mask limit");
    let eta = Mapping::new(d.order(), order, eta_image).expect("pair indices");
    Ok(ProductDigroup {
        table,
        first,
        second,
        pair_labels,
        eta,
        diagonal,
    })
}

/// The digroup on `{L↼a} × {L⇀a}`.
///
/// The right product's second component is computed twice, as `L⇀(b↼d)` with
/// `b = f(e)`, `d = g(e)`, and as `φ(f)·g`; the two must agree.
pub fn translation_product_digroup(d: &Digroup) -> Result<ProductDigroup, ConstructionError> {
    let (lleft, lright) = left_translations(d);
    let e = d.identity();
    let phi_map = phi_between(&lleft, &lright);
    let group_compose = |i: usize, k: usize| {
        lleft
            .compose_indices(i, k)
            .ok_or(ConstructionError::NotClosed(i, k))
    };
    let left_op = |i: usize, j: usize, k: usize, l: usize| {
        let second = lright
            .compose_indices(j, l)
            .ok_or(ConstructionError::NotClosed(j, l))?;
        Ok((group_compose(i, k)?, second))
    };
    let right_op = |i: usize, j: usize, k: usize, l: usize| {
        let b = lright.get(j).apply(e);
        let dd = lright.get(l).apply(e);
        let by_elements = lright.label_of().apply(d.right(b, dd));
        let by_phi = lleft.get(phi_map.apply(j)).compose(lright.get(l));
        if lright.index_of(&by_phi) != Some(by_elements) {
            return Err(ConstructionError::RoutesDisagree(j, l));
        }
        Ok((group_compose(i, k)?, by_elements))
    };
    build_product(d, lleft.clone(), lright.clone(), &left_op, &right_op)
}

/// [`translation_product_digroup`] plus a check that `eta` is an injective
/// homomorphism onto a subdigroup isomorphic to `d`.
pub fn cayley_embedding(d: &Digroup) -> Result<ProductDigroup, ConstructionError> {
    let product = translation_product_digroup(d)?;
    verify_embedding(d, &product)?;
    Ok(product)
}

/// The digroup on `{R↼a} × {R⇀a}` with its diagonal embedding, checked
/// before it is returned.
pub fn right_translation_product(d: &Digroup) -> Result<ProductDigroup, ConstructionError> {
    let (rright, rleft) = right_translations(d);
    // ψ(R↼c) = R⇀c
    let psi: Vec<usize> = (0..rleft.len())
        .map(|s| rright.label_of().apply(rleft.representative(s)))
        .collect();
    let group_compose = |i: usize, k: usize| {
        rright
            .compose_indices(i, k)
            .ok_or(ConstructionError::NotClosed(i, k))
    };
    let left_op = |f: usize, alpha: usize, g: usize, beta: usize| {
        let twisted = rright.get(psi[g]).compose(rleft.get(f));
        let first = rleft
            .index_of(&twisted)
            .ok_or(ConstructionError::NotClosed(g, f))?;
        Ok((first, group_compose(beta, alpha)?))
    };
    let right_op = |f: usize, alpha: usize, g: usize, beta: usize| {
        let first = rleft
            .compose_indices(g, f)
            .ok_or(ConstructionError::NotClosed(g, f))?;
        Ok((first, group_compose(beta, alpha)?))
    };
    let product = build_product(d, rleft.clone(), rright.clone(), &left_op, &right_op)?;
    verify_embedding(d, &product)?;
    Ok(product)
}

fn verify_embedding(d: &Digroup, product: &ProductDigroup) -> Result<(), ConstructionError> {
    if !product.eta.is_injective() {
        return Err(ConstructionError::Embedding("eta is not injective"));
    }
    if !is_homomorphism(d, &product.table, &product.eta) {
        return Err(ConstructionError::Embedding("eta is not a homomorphism"));
    }
    if !is_subdigroup(&product.table, &product.diagonal) {
        return Err(ConstructionError::Embedding("diagonal is not a subdigroup"));
    }
    if find_isomorphism(d, &product.diagonal_digroup()).is_none() {
        return Err(ConstructionError::Embedding(
            "diagonal is not isomorphic to the source",
        ));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::Builtin;

    #[test]
    fn translation_set_sizes() {
        let (ll, lr) = left_translations(&Builtin::N.build());
        assert_eq!((ll.len(), lr.len()), (2, 6));
        let (ll, lr) = left_translations(&Builtin::M.build());
        assert_eq!((ll.len(), lr.len()), (1, 2));
        let (ll, lr) = left_translations(&Builtin::S3.build());
        assert_eq!((ll.len(), lr.len()), (6, 6));
        assert_eq!(ll.transforms(), lr.transforms());
    }

    #[test]
    fn right_translation_sets_of_m() {
        let (rr, rl) = right_translations(&Builtin::M.build());
        assert_eq!(rr.transforms(), [Transform::identity(2)]);
        assert_eq!(
            rl.transforms(),
            [Transform::constant(2, 0), Transform::constant(2, 1)]
        );
        let (rr, rl) = right_translations(&Builtin::Cyclic(4).build());
        assert_eq!((rr.len(), rl.len()), (4, 4));
    }

    #[test]
    fn phi_shapes() {
        let p = phi(&Builtin::N.build());
        assert_eq!((p.domain_size(), p.codomain_size()), (6, 2));
        assert!(p.image().contains(&0) && p.image().contains(&1));
        assert_eq!(phi(&Builtin::M.build()).image(), [0, 0]);
        assert!(phi(&Builtin::S3.build()).is_bijective());
    }

    #[test]
    fn identities_hold_on_examples() {
        for b in [Builtin::M, Builtin::N, Builtin::S3] {
            let report = verify_translation_identities(&b.build());
            assert!(report.ok, "{b}: {report}");
        }
    }

    #[test]
    fn products_of_examples() {
        let m = Builtin::M.build();
        let pm = cayley_embedding(&m).unwrap();
        assert_eq!(pm.table.order(), 2);
        assert_eq!(pm.diagonal, SubsetMask::full(2));
        let pn = cayley_embedding(&Builtin::N.build()).unwrap();
        assert_eq!(pn.table.order(), 12);
        assert_eq!(pn.diagonal.len(), 6);
        let pz = translation_product_digroup(&Builtin::Cyclic(2).build()).unwrap();
        assert_eq!(pz.table.order(), 4);
        assert!(pz.table.is_group());
    }

    #[test]
    fn identity_pair_does_not_act_trivially() {
        let pm = translation_product_digroup(&Builtin::M.build()).unwrap();
        let id = pm.table.identity();
        assert_eq!(pm.pair_action(id, (0, 1)), (0, 0));
        let pz = translation_product_digroup(&Builtin::Cyclic(3).build()).unwrap();
        let id = pz.table.identity();
        for x in 0..3 {
            for y in 0..3 {
                assert_eq!(pz.pair_action(id, (x, y)), (x, y));
            }
        }
        let n = Builtin::N.build();
        let pn = translation_product_digroup(&n).unwrap();
        let (alpha, beta) = (
            n.element_by_label("α").unwrap(),
            n.element_by_label("β").unwrap(),
        );
        let p = pn.pair_index(
            pn.first.label_of().apply(alpha),
            pn.second.label_of().apply(beta),
        );
        assert_eq!(pn.pair_action(p, (0, 0)), (alpha, beta));
    }

    #[test]
    fn right_products_validate() {
        for b in [Builtin::M, Builtin::N, Builtin::Cyclic(3), Builtin::S3] {
            let p = right_translation_product(&b.build()).unwrap();
            assert!(p.table.order() >= b.build().order());
        }
    }
}
