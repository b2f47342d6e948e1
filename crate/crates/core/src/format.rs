//! The text formats shared by input files, catalog entries and reports.
//!
//! Everything is TOML. Exact numbers travel as strings: rationals as `p/q`
//! (integers without the denominator) and vectors as bracketed comma lists
//! such as `"[1, -1/2]"`. Integer lists may also be written as plain TOML
//! arrays; they are always written back as strings.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;
use crate::linalg::{split_bracketed, RationalVector};

/// Serde adapter for `Vec<BigInt>` as a `"[1, -2]"` string.
pub mod bigint_list {
    use num_bigint::BigInt;
    use serde::de::{self, SeqAccess, Visitor};
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::linalg::split_bracketed;

    pub fn to_text(values: &[BigInt]) -> String {
        let items: Vec<String> = values.iter().map(ToString::to_string).collect();
        format!("[{}]", items.join(", "))
    }

    pub fn from_text(text: &str) -> crate::Result<Vec<BigInt>> {
        split_bracketed(text)?
            .into_iter()
            .map(|item| {
                item.parse::<BigInt>()
                    .map_err(|_| crate::Error::parse(format!("invalid integer `{item}` in `{text}`")))
            })
            .collect()
    }

    pub fn serialize<S: Serializer>(values: &[BigInt], serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&to_text(values))
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Item {
        Int(i64),
        Text(String),
    }

    struct ListVisitor;

    impl<'de> Visitor<'de> for ListVisitor {
        type Value = Vec<BigInt>;

        fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
            f.write_str("an integer list such as \"[1, -2]\" or [1, -2]")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Self::Value, E> {
            from_text(v).map_err(E::custom)
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
            let mut out = Vec::new();
            while let Some(item) = seq.next_element::<Item>()? {
                out.push(match item {
                    Item::Int(i) => BigInt::from(i),
                    Item::Text(t) => t
                        .trim()
                        .parse()
                        .map_err(|_| de::Error::custom(format!("invalid integer `{t}`")))?,
                });
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<Vec<BigInt>, D::Error> {
        deserializer.deserialize_any(ListVisitor)
    }
}

/// 1-based line of a byte offset.
pub fn line_of_offset(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].matches('\n').count() + 1
}

/// Parses TOML, attaching the line number of the first syntax or schema
/// error.
pub fn parse_toml<T: serde::de::DeserializeOwned>(text: &str) -> Result<T> {
    toml::from_str(text).map_err(|e| Error::Parse {
        line: e.span().map(|s| line_of_offset(text, s.start)),
        message: e.message().to_string(),
    })
}

/// Line of item `index` of the string array assigned to `key`. Used to point
/// row-level errors at their source line.
fn line_of_array_item(text: &str, key: &str, items: &[String], index: usize) -> Option<usize> {
    let raw = items.get(index)?;
    // Earlier identical items come first in the text.
    let index = items[..index].iter().filter(|s| *s == raw).count();
    let key_pos = text
        .match_indices(key)
        .find(|(p, _)| text[p + key.len()..].trim_start().starts_with('='))?
        .0;
    let quoted = format!("\"{raw}\"");
    let mut from = key_pos;
    let mut seen = 0;
    while let Some(rel) = text[from..].find(&quoted) {
        let at = from + rel;
        if seen == index {
            return Some(line_of_offset(text, at));
        }
        seen += 1;
        from = at + quoted.len();
    }
    None
}

/// An integer relation matrix for `conelab group`.
///
/// ```toml
/// generators = 2
/// rows = ["[0, 4]"]
/// ```
/// `generators` may be omitted when at least one row is present.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<usize>,
    #[serde(default)]
    pub rows: Vec<String>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<(usize, IntegerMatrix)> {
        let file: MatrixFile = parse_toml(text)?;
        let row_error = |i: usize, message: String| Error::Parse {
            line: line_of_array_item(text, "rows", &file.rows, i),
            message: format!("row {}: {message}", i + 1),
        };
        let mut rows = Vec::with_capacity(file.rows.len());
        for (i, raw) in file.rows.iter().enumerate() {
            let row = bigint_list::from_text(raw).map_err(|e| row_error(i, e.to_string()))?;
            rows.push(row);
        }
        let cols = match (file.generators, rows.first()) {
            (Some(g), _) => g,
            (None, Some(r)) => r.len(),
            (None, None) => {
                return Err(Error::parse("matrix file needs `generators` or at least one row"))
            }
        };
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(row_error(
                    i,
                    format!("has {} entries, expected {cols}", row.len()),
                ));
            }
        }
        Ok((cols, IntegerMatrix::from_rows(cols, rows)?))
    }
}

/// A cone given by generators for `conelab cone`.
///
/// ```toml
/// dim = 2
/// generators = ["[1, 0]", "[1, 1]"]
/// ```
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeFile {
    pub dim: usize,
    #[serde(default)]
    pub generators: Vec<String>,
}

impl ConeFile {
    pub fn parse(text: &str) -> Result<(usize, Vec<RationalVector>)> {
        let file: ConeFile = parse_toml(text)?;
        let mut gens = Vec::with_capacity(file.generators.len());
        for (i, raw) in file.generators.iter().enumerate() {
            let located = |message: String| Error::Parse {
                line: line_of_array_item(text, "generators", &file.generators, i),
                message: format!("generator {}: {message}", i + 1),
            };
            let v: RationalVector = raw.parse().map_err(|e: Error| located(e.to_string()))?;
            if v.dim() != file.dim {
                return Err(located(format!("has {} coordinates, expected {}", v.dim(), file.dim)));
            }
            gens.push(v);
        }
        Ok((file.dim, gens))
    }
}

/// Parses a command-line list of integers such as `-1,0,1` or `[-1, 0, 1]`.
pub fn parse_integer_list(text: &str) -> Result<Vec<i64>> {
    let t = text.trim();
    let items: Vec<&str> = if t.starts_with('[') {
        split_bracketed(t)?
    } else if t.is_empty() {
        Vec::new()
    } else {
        t.split(',').map(str::trim).collect()
    };
    items
        .into_iter()
        .map(|s| s.parse().map_err(|_| Error::parse(format!("invalid integer `{s}`"))))
        .collect()
}

pub fn format_integer_list<I: std::fmt::Display>(values: impl IntoIterator<Item = I>) -> String {
    let items: Vec<String> = values.into_iter().map(|v| v.to_string()).collect();
    format!("[{}]", items.join(", "))
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    let mut out = String::with_capacity(64);
    for b in digest {
        let _ = write!(out, "{b:02x}");
    }
    out
}

pub fn to_toml<T: Serialize>(value: &T) -> Result<String> {
    toml::to_string(value).map_err(|e| Error::InvalidArgument(format!("cannot serialize: {e}")))
}

/// Parses a non-negative big integer, used for `--bound`.
pub fn parse_bigint(text: &str) -> Result<BigInt> {
    text.trim()
        .parse()
        .map_err(|_| Error::parse(format!("invalid integer `{text}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Debug, PartialEq, Serialize, Deserialize)]
    struct Holder {
        #[serde(with = "bigint_list")]
        xs: Vec<BigInt>,
    }

    #[test]
    fn bigint_lists_accept_strings_and_arrays() {
        let a: Holder = toml::from_str("xs = \"[1, -2, 30000000000000000000000]\"").unwrap();
        let b: Holder = toml::from_str("xs = [1, -2, \"30000000000000000000000\"]").unwrap();
        assert_eq!(a, b);
        assert_eq!(to_toml(&a).unwrap(), "xs = \"[1, -2, 30000000000000000000000]\"\n");
        let empty: Holder = toml::from_str("xs = \"[]\"").unwrap();
        assert!(empty.xs.is_empty());
    }

    #[test]
    fn matrix_file_errors_name_the_row_and_line() {
        let text = "generators = 2\nrows = [\n  \"[1, 2]\",\n  \"[1, x]\",\n]\n";
        match MatrixFile::parse(text) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, Some(4));
                assert!(message.starts_with("row 2"), "{message}");
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        let ragged = "rows = [\"[1, 2]\", \"[3]\"]\n";
        match MatrixFile::parse(ragged) {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, Some(1));
                assert!(message.contains("row 2") && message.contains("expected 2"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn toml_syntax_errors_carry_lines() {
        match MatrixFile::parse("generators = 2\nrows = [\"[1, 2]\"\nbogus") {
            Err(Error::Parse { line: Some(_), .. }) => {}
            other => panic!("expected located parse error, got {other:?}"),
        }
    }

    #[test]
    fn cone_files() {
        let (dim, gens) = ConeFile::parse("dim = 2\ngenerators = [\"[1, 0]\", \"[1/2, 1]\"]\n").unwrap();
        assert_eq!(dim, 2);
        assert_eq!(gens[1].to_string(), "[1/2, 1]");
        assert!(ConeFile::parse("dim = 3\ngenerators = [\"[1, 0]\"]\n").is_err());
    }

    #[test]
    fn integer_lists() {
        assert_eq!(parse_integer_list("-1,0,1").unwrap(), vec![-1, 0, 1]);
        assert_eq!(parse_integer_list("[0, 2]").unwrap(), vec![0, 2]);
        assert_eq!(parse_integer_list("").unwrap(), Vec::<i64>::new());
        assert!(parse_integer_list("1,a").is_err());
        assert_eq!(format_integer_list([-1, 0, 1]), "[-1, 0, 1]");
    }

    #[test]
    fn digest() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
