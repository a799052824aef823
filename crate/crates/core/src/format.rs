//! JSONL corpus format and color tables.
//!
//! One tree per line:
//!
//! ```text
//! {"id": "t0", "root": 0, "edges": [[0,1],[0,2]], "colors": {"0": 2, "1": 2, "2": 0}}
//! ```
//!
//! `root` is optional and only checked against the inferred root. Color
//! values are integers, or names when a [`ColorTable`] is supplied.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::tree::{build_tree, Color, ColoredArborescence, IdMap, TreeError};

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("line {line}: parse error: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: invalid tree: {source}")]
    Validation {
        line: usize,
        #[source]
        source: TreeError,
    },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CorpusError {
    pub fn line(&self) -> Option<usize> {
        match self {
            CorpusError::Parse { line, .. } | CorpusError::Validation { line, .. } => Some(*line),
            CorpusError::Io(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ColorValue {
    Index(u32),
    Name(String),
}

/// Raw on-disk record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<u64>,
    pub edges: Vec<[u64; 2]>,
    pub colors: BTreeMap<String, ColorValue>,
}

impl TreeRecord {
    /// Record for a dense tree; vertex ids are written as-is.
    pub fn from_tree(id: impl Into<String>, tree: &ColoredArborescence) -> Self {
        TreeRecord {
            id: id.into(),
            root: Some(tree.root() as u64),
            edges: tree.edges().map(|(p, c)| [p as u64, c as u64]).collect(),
            colors: (0..tree.len())
                .map(|v| (v.to_string(), ColorValue::Index(tree.color(v).0)))
                .collect(),
        }
    }
}

/// Mapping from human-readable color names to integer colors.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorTable(BTreeMap<String, u32>);

impl ColorTable {
    pub fn new(entries: impl IntoIterator<Item = (String, u32)>) -> Self {
        ColorTable(entries.into_iter().collect())
    }

    pub fn from_reader(reader: impl std::io::Read) -> serde_json::Result<Self> {
        serde_json::from_reader(reader)
    }

    pub fn get(&self, name: &str) -> Option<Color> {
        self.0.get(name).copied().map(Color)
    }

    /// First name mapped to `color`, if any.
    pub fn name_of(&self, color: Color) -> Option<&str> {
        self.0
            .iter()
            .find(|(_, &v)| v == color.0)
            .map(|(k, _)| k.as_str())
    }
}

/// A validated tree together with where it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorpusTree {
    pub id: String,
    pub line: usize,
    pub tree: ColoredArborescence,
    pub ids: IdMap,
}

/// Validates one record.
pub fn record_to_tree(
    record: &TreeRecord,
    table: Option<&ColorTable>,
    line: usize,
) -> Result<(ColoredArborescence, IdMap), CorpusError> {
    let mut colors = BTreeMap::new();
    for (key, value) in &record.colors {
        let vertex: u64 = key.parse().map_err(|_| CorpusError::Parse {
            line,
            message: format!("color key {key:?} is not a vertex id"),
        })?;
        let color = match value {
            ColorValue::Index(c) => Color(*c),
            ColorValue::Name(name) => table.and_then(|t| t.get(name)).ok_or_else(|| CorpusError::Parse {
                line,
                message: format!("unknown color name {name:?}"),
            })?,
        };
        colors.insert(vertex, color);
    }
    let edges: Vec<(u64, u64)> = record.edges.iter().map(|&[p, c]| (p, c)).collect();
    let (tree, ids) =
        build_tree(&edges, &colors).map_err(|source| CorpusError::Validation { line, source })?;
    if let Some(declared) = record.root {
        let inferred = ids.original(tree.root());
        if declared != inferred {
            return Err(CorpusError::Validation {
                line,
                source: TreeError::RootMismatch { declared, inferred },
            });
        }
    }
    Ok((tree, ids))
}

/// Streaming reader over a JSONL corpus. Blank lines are skipped.
pub struct CorpusReader<'t, R> {
    lines: std::io::Lines<R>,
    line: usize,
    table: Option<&'t ColorTable>,
}

impl<'t, R: BufRead> CorpusReader<'t, R> {
    pub fn new(reader: R) -> Self {
        CorpusReader {
            lines: reader.lines(),
            line: 0,
            table: None,
        }
    }

    pub fn with_color_table(reader: R, table: Option<&'t ColorTable>) -> Self {
        CorpusReader {
            lines: reader.lines(),
            line: 0,
            table,
        }
    }
}

impl<R: BufRead> Iterator for CorpusReader<'_, R> {
    type Item = Result<CorpusTree, CorpusError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let text = match self.lines.next()? {
                Ok(text) => text,
                Err(e) => return Some(Err(e.into())),
            };
            self.line += 1;
            if text.trim().is_empty() {
                continue;
            }
            let line = self.line;
            let record: TreeRecord = match serde_json::from_str(&text) {
                Ok(r) => r,
                Err(e) => {
                    return Some(Err(CorpusError::Parse {
                        line,
                        message: e.to_string(),
                    }))
                }
            };
            return Some(record_to_tree(&record, self.table, line).map(|(tree, ids)| CorpusTree {
                id: record.id,
                line,
                tree,
                ids,
            }));
        }
    }
}

/// Reads a whole corpus, failing on the first bad line.
pub fn parse_corpus(reader: impl BufRead) -> Result<Vec<CorpusTree>, CorpusError> {
    CorpusReader::new(reader).collect()
}

pub fn parse_corpus_with_colors(
    reader: impl BufRead,
    table: &ColorTable,
) -> Result<Vec<CorpusTree>, CorpusError> {
    CorpusReader::with_color_table(reader, Some(table)).collect()
}

pub fn write_tree(
    mut out: impl Write,
    id: &str,
    tree: &ColoredArborescence,
) -> std::io::Result<()> {
    serde_json::to_writer(&mut out, &TreeRecord::from_tree(id, tree))?;
    out.write_all(b"\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_line() {
        let src = r#"{"id": "a", "edges": [[0,1],[0,2]], "colors": {"0": 3, "1": 3, "2": 0}}"#;
        let corpus = parse_corpus(src.as_bytes()).unwrap();
        assert_eq!(corpus.len(), 1);
        assert_eq!(corpus[0].id, "a");
        assert_eq!(corpus[0].line, 1);
        assert_eq!(corpus[0].tree.len(), 3);
    }

    #[test]
    fn empty_stream() {
        assert!(parse_corpus("".as_bytes()).unwrap().is_empty());
        assert!(parse_corpus("\n\n".as_bytes()).unwrap().is_empty());
    }

    #[test]
    fn missing_colors_is_a_parse_error() {
        let err = parse_corpus(r#"{"id": "a", "edges": []}"#.as_bytes()).unwrap_err();
        assert!(matches!(err, CorpusError::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn validation_error_carries_line() {
        let src = "{\"id\":\"ok\",\"edges\":[],\"colors\":{\"0\":1}}\n\
                   {\"id\":\"bad\",\"edges\":[[0,1],[1,0]],\"colors\":{\"0\":1,\"1\":1}}\n";
        let err = parse_corpus(src.as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            CorpusError::Validation {
                line: 2,
                source: TreeError::CycleDetected { .. }
            }
        ));
    }

    #[test]
    fn declared_root_must_match() {
        let src = r#"{"id":"a","root":1,"edges":[[0,1]],"colors":{"0":1,"1":1}}"#;
        let err = parse_corpus(src.as_bytes()).unwrap_err();
        assert!(matches!(
            err,
            CorpusError::Validation {
                source: TreeError::RootMismatch { declared: 1, inferred: 0 },
                ..
            }
        ));
    }

    #[test]
    fn named_colors_resolve_through_table() {
        let table = ColorTable::from_reader(r#"{"blue": 0, "red": 2}"#.as_bytes()).unwrap();
        let src = r#"{"id":"a","edges":[[0,1]],"colors":{"0":"red","1":"blue"}}"#;
        let corpus = parse_corpus_with_colors(src.as_bytes(), &table).unwrap();
        assert_eq!(corpus[0].tree.colors(), &[Color(2), Color(0)]);
        assert_eq!(table.name_of(Color(2)), Some("red"));
        assert!(parse_corpus(src.as_bytes()).is_err());
    }

    #[test]
    fn record_round_trip() {
        let t = ColoredArborescence::from_parents(&[None, Some(0), Some(0)], vec![Color(1), Color(2), Color(3)])
            .unwrap();
        let mut buf = Vec::new();
        write_tree(&mut buf, "x", &t).unwrap();
        let back = parse_corpus(buf.as_slice()).unwrap();
        assert_eq!(back[0].tree, t);
        assert_eq!(back[0].id, "x");
    }
}
