//! JSON documents for digroups, triples and catalogs, plus the plain-text
//! table renderer.
//!
//! Matrices are row-major with the row index as left operand. Catalog files
//! hold one compact JSON object per line.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::digroup::Digroup;
use crate::enumerate::CatalogEntry;
use crate::table::{DigroupTable, Element, TableError};
use crate::transform::Transform;
use crate::triple::{StandardTriple, TripleError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `order` says {declared} but `{field}` has {found} rows")]
    OrderMismatch {
        declared: usize,
        field: &'static str,
        found: usize,
    },
    #[error("{0}")]
    Table(#[from] TableError),
    #[error("field `{field}` entry {index} has an element outside 0..{carrier}")]
    Transform {
        field: &'static str,
        index: usize,
        carrier: usize,
    },
    #[error("{0}")]
    Triple(#[from] TripleError),
}

impl From<serde_json::Error> for FormatError {
    fn from(e: serde_json::Error) -> Self {
        FormatError::Syntax {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DigroupFile {
    pub order: usize,
    pub identity: Element,
    pub left: Vec<Vec<Element>>,
    pub right: Vec<Vec<Element>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl From<&DigroupTable> for DigroupFile {
    fn from(t: &DigroupTable) -> Self {
        Self {
            order: t.order(),
            identity: t.identity(),
            left: t.left_rows(),
            right: t.right_rows(),
            labels: t.labels().map(<[String]>::to_vec),
        }
    }
}

impl DigroupFile {
    pub fn to_table(&self) -> Result<DigroupTable, FormatError> {
        for (field, rows) in [("left", &self.left), ("right", &self.right)] {
            if rows.len() != self.order {
                return Err(FormatError::OrderMismatch {
                    declared: self.order,
                    field,
                    found: rows.len(),
                });
            }
        }
        let t = DigroupTable::from_rows(self.identity, &self.left, &self.right)?;
        Ok(match &self.labels {
            Some(labels) => t.with_labels(labels.iter().cloned())?,
            None => t,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripleFile {
    pub carrier_size: usize,
    pub group_part: Vec<Vec<Element>>,
    pub semi_part: Vec<Vec<Element>>,
    pub right_unit: usize,
    pub left_inverse: Vec<usize>,
    pub phi: Vec<usize>,
}

impl From<&StandardTriple> for TripleFile {
    fn from(t: &StandardTriple) -> Self {
        let images = |part: &[Transform]| part.iter().map(|f| f.image().to_vec()).collect();
        Self {
            carrier_size: t.carrier_size(),
            group_part: images(t.group_part()),
            semi_part: images(t.semi_part()),
            right_unit: t.right_unit(),
            left_inverse: t.left_inverse().to_vec(),
            phi: t.phi().to_vec(),
        }
    }
}

impl TripleFile {
    pub fn to_triple(&self) -> Result<StandardTriple, FormatError> {
        let n = self.carrier_size;
        let part = |field, images: &[Vec<Element>]| {
            images
                .iter()
                .enumerate()
                .map(|(index, image)| match Transform::new(image.clone()) {
                    Some(f) if image.len() == n => Ok(f),
                    _ => Err(FormatError::Transform {
                        field,
                        index,
                        carrier: n,
                    }),
                })
                .collect::<Result<Vec<_>, _>>()
        };
        Ok(StandardTriple::new(
            n,
            part("group_part", &self.group_part)?,
            part("semi_part", &self.semi_part)?,
            self.right_unit,
            self.left_inverse.clone(),
            self.phi.clone(),
        )?)
    }
}

/// A catalog line: the digroup document plus class flags.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogLine {
    pub order: usize,
    pub identity: Element,
    pub left: Vec<Vec<Element>>,
    pub right: Vec<Vec<Element>>,
    pub commutative: bool,
    pub group: bool,
    pub subdigroup_count: usize,
}

impl From<&CatalogEntry> for CatalogLine {
    fn from(e: &CatalogEntry) -> Self {
        let t = e.canonical.table();
        Self {
            order: t.order(),
            identity: t.identity(),
            left: t.left_rows(),
            right: t.right_rows(),
            commutative: e.flags.commutative,
            group: e.flags.group,
            subdigroup_count: e.subdigroup_count,
        }
    }
}

impl CatalogLine {
    pub fn to_table(&self) -> Result<DigroupTable, FormatError> {
        DigroupFile {
            order: self.order,
            identity: self.identity,
            left: self.left.clone(),
            right: self.right.clone(),
            labels: None,
        }
        .to_table()
    }
}

/// Parses a digroup document. Shapes and ranges are checked, axioms are not.
pub fn parse_digroup(text: &str) -> Result<DigroupTable, FormatError> {
    serde_json::from_str::<DigroupFile>(text)?.to_table()
}

fn compact<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data")
}

/// A matrix with one row per line, indented for a top-level field.
fn matrix(rows: &[Vec<Element>]) -> String {
    if rows.is_empty() {
        return "[]".into();
    }
    let lines: Vec<String> = rows.iter().map(|r| format!("    {}", compact(r))).collect();
    format!("[\n{}\n  ]", lines.join(",\n"))
}

fn object(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields
        .iter()
        .map(|(k, v)| format!("  \"{k}\": {v}"))
        .collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

/// Pretty JSON with one matrix row per line.
pub fn serialize_digroup(t: &DigroupTable) -> String {
    let file = DigroupFile::from(t);
    let mut fields = vec![
        ("order", file.order.to_string()),
        ("identity", file.identity.to_string()),
        ("left", matrix(&file.left)),
        ("right", matrix(&file.right)),
    ];
    if let Some(labels) = &file.labels {
        fields.push(("labels", compact(labels)));
    }
    object(&fields)
}

pub fn parse_triple(text: &str) -> Result<StandardTriple, FormatError> {
    serde_json::from_str::<TripleFile>(text)?.to_triple()
}

/// Pretty JSON with one transform per line.
pub fn serialize_triple(t: &StandardTriple) -> String {
    let file = TripleFile::from(t);
    object(&[
        ("carrier_size", file.carrier_size.to_string()),
        ("group_part", matrix(&file.group_part)),
        ("semi_part", matrix(&file.semi_part)),
        ("right_unit", file.right_unit.to_string()),
        ("left_inverse", compact(&file.left_inverse)),
        ("phi", compact(&file.phi)),
    ])
}

/// One catalog entry as a single compact line, without the newline.
pub fn catalog_line(e: &CatalogEntry) -> String {
    serde_json::to_string(&CatalogLine::from(e)).expect("plain data")
}

pub fn parse_catalog_line(line: &str) -> Result<CatalogLine, FormatError> {
    let parsed: CatalogLine = serde_json::from_str(line)?;
    parsed.to_table()?;
    Ok(parsed)
}

fn width(s: &str) -> usize {
    s.chars().count()
}

fn pad(s: &str, w: usize) -> String {
    format!("{}{s}", " ".repeat(w - width(s)))
}

fn grid(d: &DigroupTable, symbol: &str, cell: impl Fn(Element, Element) -> Element) -> Vec<String> {
    let labels: Vec<String> = d.elements().map(|x| d.label(x)).collect();
    let w = labels
        .iter()
        .map(|l| width(l))
        .chain([width(symbol)])
        .max()
        .unwrap_or(1);
    let row = |head: &str, cells: Vec<&str>| {
        let cells: Vec<String> = cells.iter().map(|c| pad(c, w)).collect();
        format!("{} | {}", pad(head, w), cells.join(" "))
    };
    let mut lines = vec![row(symbol, labels.iter().map(String::as_str).collect())];
    let n = d.order();
    lines.push(format!(
        "{}-+-{}",
        "-".repeat(w),
        "-".repeat(n * (w + 1) - 1)
    ));
    for x in d.elements() {
        lines.push(row(
            &labels[x],
            d.elements().map(|y| labels[cell(x, y)].as_str()).collect(),
        ));
    }
    lines
}

/// The two operation tables side by side, left product first, with label
/// headers. Output depends only on the table.
pub fn render_table(d: &DigroupTable) -> String {
    let left = grid(d, "⇀", |x, y| d.left(x, y));
    let right = grid(d, "↼", |x, y| d.right(x, y));
    let mut out = String::new();
    for (l, r) in left.iter().zip(&right) {
        out.push_str(l);
        out.push_str("    ");
        out.push_str(r);
        out.push('\n');
    }
    out
}

/// Convenience for validated input.
pub fn render_digroup(d: &Digroup) -> String {
    render_table(d.table())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::Builtin;

    #[test]
    fn builtins_round_trip() {
        for b in [Builtin::M, Builtin::N, Builtin::S3, Builtin::Trivial(1)] {
            let d = b.build();
            let text = serialize_digroup(d.table());
            assert_eq!(&parse_digroup(&text).unwrap(), d.table(), "{b}");
        }
    }

    #[test]
    fn triples_round_trip() {
        for b in [Builtin::M, Builtin::N, Builtin::S3] {
            let t = crate::triple::triple_from_digroup(&b.build());
            let text = serialize_triple(&t);
            assert_eq!(parse_triple(&text).unwrap(), t, "{b}");
        }
    }

    #[test]
    fn dimension_and_range_errors() {
        let mut f = DigroupFile::from(Builtin::N.build().table());
        f.left[5].pop();
        let text = serde_json::to_string(&f).unwrap();
        assert!(matches!(
            parse_digroup(&text),
            Err(FormatError::Table(TableError::RowLength { row: 5, .. }))
        ));

        let mut f = DigroupFile::from(Builtin::M.build().table());
        f.right[1][1] = 2;
        let text = serde_json::to_string(&f).unwrap();
        assert!(matches!(
            parse_digroup(&text),
            Err(FormatError::Table(TableError::EntryOutOfRange {
                value: 2,
                ..
            }))
        ));

        let text = r#"{"order": 2, "identity": 0, "left": [[0,0],[1,1]]}"#;
        let err = parse_digroup(text).unwrap_err().to_string();
        assert!(err.contains("right"), "{err}");

        let text = r#"{"order": 3, "identity": 0, "left": [[0,0],[1,1]], "right": [[0,1],[0,1]]}"#;
        assert!(matches!(
            parse_digroup(text),
            Err(FormatError::OrderMismatch { declared: 3, .. })
        ));
    }

    #[test]
    fn duplicate_labels_rejected() {
        let text = r#"{"order": 2, "identity": 0, "left": [[0,0],[1,1]],
                       "right": [[0,1],[0,1]], "labels": ["a", "a"]}"#;
        assert!(matches!(
            parse_digroup(text),
            Err(FormatError::Table(TableError::DuplicateLabel { .. }))
        ));
    }

    #[test]
    fn render_m() {
        let m = Builtin::M.build();
        assert_eq!(
            render_digroup(&m),
            "⇀ | 0 a    ↼ | 0 a\n\
             --+----    --+----\n\
             0 | 0 0    0 | 0 a\n\
             a | a a    a | 0 a\n"
        );
    }

    #[test]
    fn render_trivial() {
        let t = Builtin::Trivial(1).build().into_table().without_labels();
        assert_eq!(
            render_table(&t),
            "⇀ | 0    ↼ | 0\n--+--    --+--\n0 | 0    0 | 0\n"
        );
    }

    #[test]
    fn catalog_lines_round_trip() {
        let e = CatalogEntry::from_digroup(&Builtin::N.build());
        let line = catalog_line(&e);
        assert!(!line.contains('\n'));
        let back = parse_catalog_line(&line).unwrap();
        assert_eq!(back, CatalogLine::from(&e));
        assert!(!back.commutative && !back.group);
    }
}
