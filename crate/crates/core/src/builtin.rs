//! Named digroups: the two worked examples, projection digroups, and a few
//! groups viewed as digroups with `⇀ = ↼`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::digroup::Digroup;
use crate::table::DigroupTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    /// Two elements `{0, a}`, `x⇀y = x`, `x↼y = y`.
    M,
    /// The six-element non-commutative digroup `{e, α, β, γ, δ, ε}`.
    N,
    /// `x⇀y = x`, `x↼y = y` on `n` points, identity 0.
    Trivial(usize),
    /// The cyclic group `Z_n`.
    Cyclic(usize),
    /// The symmetric group on three letters.
    S3,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BuiltinError {
    #[error("unknown builtin {0:?}; expected M, N, trivial(n), cyclic(n), Zn or S3")]
    Unknown(String),
    #[error("builtin {0} needs n >= 1")]
    ZeroOrder(String),
}

impl Builtin {
    pub fn build(self) -> Digroup {
        let table = match self {
            Builtin::M => projections(2)
                .with_labels(["0", "a"])
                .expect("distinct labels"),
            Builtin::N => n_table(),
            Builtin::Trivial(n) => projections(n),
            Builtin::Cyclic(n) => {
                let op: Vec<usize> = (0..n * n).map(|p| (p / n + p % n) % n).collect();
                DigroupTable::from_flat(n, 0, op.clone(), op).expect("cyclic table")
            }
            Builtin::S3 => s3_table(),
        };
        Digroup::new(table).expect("builtins are digroups")
    }

    pub fn name(self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::M => f.write_str("M"),
            Builtin::N => f.write_str("N"),
            Builtin::Trivial(n) => write!(f, "trivial({n})"),
            Builtin::Cyclic(n) => write!(f, "cyclic({n})"),
            Builtin::S3 => f.write_str("S3"),
        }
    }
}

impl FromStr for Builtin {
    type Err = BuiltinError;

    /// Accepts `M`, `N`, `S3`, `trivial(n)`, `cyclic(n)` and `Zn`.
    fn from_str(s: &str) -> Result<Self, BuiltinError> {
        let unknown = || BuiltinError::Unknown(s.to_string());
        let s = s.trim();
        match s {
            "M" => return Ok(Builtin::M),
            "N" => return Ok(Builtin::N),
            "S3" => return Ok(Builtin::S3),
            _ => {}
        }
        let parametrized = |prefix: &str| -> Option<Result<usize, BuiltinError>> {
            let arg = s
                .strip_prefix(prefix)?
                .strip_prefix('(')?
                .strip_suffix(')')?;
            Some(arg.trim().parse::<usize>().map_err(|_| unknown()))
        };
        let (n, ctor): (usize, fn(usize) -> Builtin) = if let Some(n) = parametrized("trivial") {
            (n?, Builtin::Trivial)
        } else if let Some(n) = parametrized("cyclic") {
            (n?, Builtin::Cyclic)
        } else if let Some(n) = s.strip_prefix('Z').and_then(|d| d.parse().ok()) {
            (n, Builtin::Cyclic)
        } else {
            return Err(unknown());
        };
        if n == 0 {
            return Err(BuiltinError::ZeroOrder(s.to_string()));
        }
        Ok(ctor(n))
    }
}

fn projections(n: usize) -> DigroupTable {
    let left = (0..n * n).map(|p| p / n).collect();
    let right = (0..n * n).map(|p| p % n).collect();
    DigroupTable::from_flat(n, 0, left, right).expect("projection table")
}

fn n_table() -> DigroupTable {
    // e α β γ δ ε = 0 1 2 3 4 5
    let left = [
        [0, 1, 1, 1, 0, 0],
        [1, 0, 0, 0, 1, 1],
        [2, 4, 4, 4, 2, 2],
        [3, 5, 5, 5, 3, 3],
        [4, 2, 2, 2, 4, 4],
        [5, 3, 3, 3, 5, 5],
    ];
    let right = [
        [0, 1, 2, 3, 4, 5],
        [1, 0, 5, 4, 3, 2],
        [1, 0, 5, 4, 3, 2],
        [1, 0, 5, 4, 3, 2],
        [0, 1, 2, 3, 4, 5],
        [0, 1, 2, 3, 4, 5],
    ];
    let rows = |t: [[usize; 6]; 6]| t.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    DigroupTable::from_rows(0, &rows(left), &rows(right))
        .and_then(|t| t.with_labels(["e", "α", "β", "γ", "δ", "ε"]))
        .expect("N table")
}

fn s3_table() -> DigroupTable {
    // permutations of {0,1,2} in lexicographic order; the identity comes first
    let perms: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("permutation");
    let mut op = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            // (p·q)(i) = p(q(i))
            op.push(index([p[q[0]], p[q[1]], p[q[2]]]));
        }
    }
    DigroupTable::from_flat(6, 0, op.clone(), op).expect("S3 table")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m_reproduces_example_tables() {
        let m = Builtin::M.build();
        assert_eq!(m.labels().unwrap(), ["0", "a"]);
        assert_eq!(m.left_rows(), [[0, 0], [1, 1]]);
        assert_eq!(m.right_rows(), [[0, 1], [0, 1]]);
        assert!(m.same_operations(Builtin::Trivial(2).build().table()));
    }

    #[test]
    fn n_right_row_beta() {
        let n = Builtin::N.build();
        let beta = n.element_by_label("β").unwrap();
        let row: Vec<String> = (0..6).map(|y| n.label(n.right(beta, y))).collect();
        assert_eq!(row, ["α", "e", "ε", "δ", "γ", "β"]);
    }

    #[test]
    fn trivial_three_is_commutative_non_group() {
        let t = Builtin::Trivial(3).build();
        assert!(t.is_commutative());
        assert!(!t.is_group());
    }

    #[test]
    fn s3_is_non_abelian_group() {
        let s3 = Builtin::S3.build();
        assert!(s3.is_group());
        assert!(!s3.is_commutative());
    }

    #[test]
    fn parses_names() {
        assert_eq!("M".parse(), Ok(Builtin::M));
        assert_eq!("trivial(4)".parse(), Ok(Builtin::Trivial(4)));
        assert_eq!("cyclic(3)".parse(), Ok(Builtin::Cyclic(3)));
        assert_eq!("Z4".parse(), Ok(Builtin::Cyclic(4)));
        assert!(matches!(
            "Q8".parse::<Builtin>(),
            Err(BuiltinError::Unknown(_))
        ));
        assert!(matches!(
            "Z0".parse::<Builtin>(),
            Err(BuiltinError::ZeroOrder(_))
        ));
        for b in [
            Builtin::M,
            Builtin::N,
            Builtin::S3,
            Builtin::Trivial(3),
            Builtin::Cyclic(5),
        ] {
            assert_eq!(b.to_string().parse(), Ok(b));
        }
    }
}
