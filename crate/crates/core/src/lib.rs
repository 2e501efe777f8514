//! Finite digroups as pairs of Cayley tables.
//!
//! The crate checks digroup axioms, computes Liu inverses and subdigroups,
//! tests isomorphism through exact canonical forms, builds the translation
//! digroups and standard triples, and enumerates all digroups of small order.

pub mod builtin;
pub mod cli;
pub mod digroup;
pub mod enumerate;
pub mod io;
pub mod mapping;
pub mod morphism;
pub mod report;
pub mod subdigroup;
pub mod table;
pub mod transform;
pub mod translations;
pub mod triple;

pub use builtin::{Builtin, BuiltinError};
pub use digroup::{direct_product, validate_digroup, Digroup, DigroupError};
pub use enumerate::{
    count_by_class, enumerate_digroups, naive_enumerate, verify_claims, CatalogEntry, ClaimRecord,
    ClaimReport, ClassCounts, EnumerateError, SearchMode, SearchOptions,
};
pub use mapping::{Mapping, MappingError};
pub use morphism::{
    are_isomorphic, automorphisms, canonical_form, find_isomorphism, is_homomorphism,
    CanonicalTable, MorphismError,
};
pub use report::{Law, ValidationReport, Violation};
pub use subdigroup::{
    all_subdigroups, generated_subdigroup, is_subdigroup, subdigroup_criteria, SubsetError,
    SubsetMask,
};
pub use table::{DigroupTable, Element, Product, TableError};
pub use transform::{Transform, TransformSet};
pub use translations::{
    cayley_embedding, left_translations, phi, right_translation_product, right_translations,
    translation_product_digroup, verify_translation_identities, ConstructionError, ProductDigroup,
};
pub use triple::{
    digroup_from_triple, triple_from_digroup, validate_triple, StandardTriple, TripleError,
};
