//! Structured axiom-check results shared by every checker in the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A named law that a checker can find violated.
///
/// The declaration order is the report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Law {
    // digroup axioms
    /// `x⇀(y⇀z) = (x⇀y)⇀z`
    Diassoc1,
    /// `(x⇀y)⇀z = x⇀(y↼z)`
    Diassoc2,
    /// `(x↼y)⇀z = x↼(y⇀z)`
    Diassoc3,
    /// `(x⇀y)↼z = (x↼y)↼z`
    Diassoc4,
    /// `(x↼y)↼z = x↼(y↼z)`
    Diassoc5,
    /// `x⇀e = x`
    BarunitRight,
    /// `e↼x = x`
    BarunitLeft,
    /// `x↼e = e⇀x`
    BarunitSwap,
    /// no `y` with `y⇀x = e = x↼y`
    InverseMissing,

    // translation identities, `a, b` witnesses
    /// `L↼(a⇀b) = L↼a·L↼b`
    LeftTransLeftProduct,
    /// `L↼(a↼b) = L↼a·L↼b`
    LeftTransRightProduct,
    /// `L⇀(a⇀b) = L⇀a·L⇀b`
    RightTransLeftProduct,
    /// `L⇀a·L⇀b = L⇀a·L↼b`
    RightTransMixed,
    /// `L⇀(a↼b) = L↼a·L⇀b`
    RightTransRightProduct,
    /// `L↼e = 1`
    LeftTransUnit,
    /// `L⇀a·L⇀e = L⇀a`
    RightTransRightUnit,
    /// `L⇀e·L⇀a = L↼a·L⇀e`
    RightTransUnitSwap,
    /// `L↼(a⁻)·L↼a = 1 = L↼a·L↼(a⁻)`
    LeftTransInverse,
    /// `L⇀(a⁻)·L⇀a = L⇀e = L↼a·L⇀(a⁻)`
    RightTransInverse,
    /// `{L↼a}` is closed under composition
    LeftTransClosure,
    /// `{L⇀a}` is closed under composition
    RightTransClosure,
    /// `φ(L⇀a·L⇀b) = φ(L⇀a)·φ(L⇀b)`
    PhiHomomorphism,
    /// `φ(L⇀e) = 1`
    PhiUnit,
    /// `L⇀e·L⇀a = φ(L⇀a)·L⇀e`
    PhiUnitSwap,
    /// `φ(L⇀a)·L⇀(a⁻) = L⇀e`
    PhiInverse,
    /// `L⇀a·φ(L⇀b) = L⇀a·L⇀b`
    PhiAbsorb,
    /// `φ(φ(L⇀a)·L⇀b) = φ(L⇀a)·φ(L⇀b)`
    PhiTwisted,

    // standard triple conditions, transform-index witnesses
    /// group part: identity present, bijective, closed, inverses present
    GroupClosure,
    /// semigroup part closed under composition
    SemiClosure,
    /// `f·e_S = f`
    TripleRightUnit,
    /// `f⁻ˡ·f = e_S`
    TripleLeftInverse,
    /// `φ(fg) = φ(f)φ(g)`
    TriplePhiMultiplicative,
    /// `φ(f)·g ∈ S`
    TriplePhiAction,
    /// `φ(e_S)·f = f`
    TriplePhiUnit,
    /// `e_S·f = φ(f)·e_S`
    TripleUnitSwap,
    /// `φ(f)·f⁻ˡ = e_S`
    TriplePhiInverse,
    /// `f·φ(g) = f·g`
    TriplePhiAbsorb,
    /// `φ(φ(f)·g) = φ(f)φ(g)`
    TriplePhiTwisted,
}

impl Law {
    pub fn id(self) -> &'static str {
        match self {
            Law::Diassoc1 => "DIASSOC_1",
            Law::Diassoc2 => "DIASSOC_2",
            Law::Diassoc3 => "DIASSOC_3",
            Law::Diassoc4 => "DIASSOC_4",
            Law::Diassoc5 => "DIASSOC_5",
            Law::BarunitRight => "BARUNIT_RIGHT",
            Law::BarunitLeft => "BARUNIT_LEFT",
            Law::BarunitSwap => "BARUNIT_SWAP",
            Law::InverseMissing => "INVERSE_MISSING",
            Law::LeftTransLeftProduct => "LEFT_TRANS_LEFT_PRODUCT",
            Law::LeftTransRightProduct => "LEFT_TRANS_RIGHT_PRODUCT",
            Law::RightTransLeftProduct => "RIGHT_TRANS_LEFT_PRODUCT",
            Law::RightTransMixed => "RIGHT_TRANS_MIXED",
            Law::RightTransRightProduct => "RIGHT_TRANS_RIGHT_PRODUCT",
            Law::LeftTransUnit => "LEFT_TRANS_UNIT",
            Law::RightTransRightUnit => "RIGHT_TRANS_RIGHT_UNIT",
            Law::RightTransUnitSwap => "RIGHT_TRANS_UNIT_SWAP",
            Law::LeftTransInverse => "LEFT_TRANS_INVERSE",
            Law::RightTransInverse => "RIGHT_TRANS_INVERSE",
            Law::LeftTransClosure => "LEFT_TRANS_CLOSURE",
            Law::RightTransClosure => "RIGHT_TRANS_CLOSURE",
            Law::PhiHomomorphism => "PHI_HOMOMORPHISM",
            Law::PhiUnit => "PHI_UNIT",
            Law::PhiUnitSwap => "PHI_UNIT_SWAP",
            Law::PhiInverse => "PHI_INVERSE",
            Law::PhiAbsorb => "PHI_ABSORB",
            Law::PhiTwisted => "PHI_TWISTED",
            Law::GroupClosure => "GROUP_CLOSURE",
            Law::SemiClosure => "SEMI_CLOSURE",
            Law::TripleRightUnit => "TRIPLE_RIGHT_UNIT",
            Law::TripleLeftInverse => "TRIPLE_LEFT_INVERSE",
            Law::TriplePhiMultiplicative => "TRIPLE_PHI_MULTIPLICATIVE",
            Law::TriplePhiAction => "TRIPLE_PHI_ACTION",
            Law::TriplePhiUnit => "TRIPLE_PHI_UNIT",
            Law::TripleUnitSwap => "TRIPLE_UNIT_SWAP",
            Law::TriplePhiInverse => "TRIPLE_PHI_INVERSE",
            Law::TriplePhiAbsorb => "TRIPLE_PHI_ABSORB",
            Law::TriplePhiTwisted => "TRIPLE_PHI_TWISTED",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// One failed law instance.
///
/// `lhs`/`rhs` hold the two sides of the failing equation when they are
/// single elements or transform indices; they are `None` for existence and
/// closure failures.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Violation {
    pub law: Law,
    pub witnesses: Vec<usize>,
    pub lhs: Option<usize>,
    pub rhs: Option<usize>,
}

impl Violation {
    pub fn equation(law: Law, witnesses: &[usize], lhs: usize, rhs: usize) -> Self {
        Self {
            law,
            witnesses: witnesses.to_vec(),
            lhs: Some(lhs),
            rhs: Some(rhs),
        }
    }

    pub fn missing(law: Law, witnesses: &[usize]) -> Self {
        Self {
            law,
            witnesses: witnesses.to_vec(),
            lhs: None,
            rhs: None,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at {:?}", self.law, self.witnesses)?;
        if let (Some(l), Some(r)) = (self.lhs, self.rhs) {
            write!(f, ": {l} != {r}")?;
        }
        Ok(())
    }
}

/// Result of an exhaustive law check. `ok` iff there are no violations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// Sorts and deduplicates, so reports are independent of check order.
    pub fn from_violations(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        Self {
            ok: violations.is_empty(),
            violations,
        }
    }

    pub fn passed() -> Self {
        Self::from_violations(Vec::new())
    }

    pub fn violates(&self, law: Law) -> bool {
        self.violations.iter().any(|v| v.law == law)
    }

    pub fn first(&self, law: Law) -> Option<&Violation> {
        self.violations.iter().find(|v| v.law == law)
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok {
            return f.write_str("ok");
        }
        writeln!(f, "{} violation(s)", self.violations.len())?;
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}
