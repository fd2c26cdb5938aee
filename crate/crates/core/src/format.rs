//! Canonical text and JSON serialization.
//!
//! Text form (LF line endings, ASCII only):
//!
//! ```text
//! grid: <m> <n>
//! <m lines of exactly n characters from {0,1}>
//! rows: <m integers>            (optional)
//! cols: <n integers>            (optional, required together with rows)
//! decoration: <m+n-1 integers>  (optional)
//! surplus: <m+n-1 integers>     (optional)
//! ```
//!
//! The JSON form is an object with keys `m`, `n`, `grid` and the optional
//! `row_labels`, `col_labels`, `decoration`, `surplus`. Unknown keys are
//! rejected.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{Grid01, LabelVector, Labelling};

/// A grid with whatever annotations travelled with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Document {
    pub grid: Grid01,
    pub labels: Option<Labelling>,
    pub decoration: Option<LabelVector>,
    pub surplus: Option<LabelVector>,
}

impl Document {
    pub fn new(grid: Grid01) -> Self {
        Document { grid, labels: None, decoration: None, surplus: None }
    }

    pub fn with_labels(mut self, labels: Labelling) -> Self {
        self.labels = Some(labels);
        self
    }

    pub fn with_decoration(mut self, a: LabelVector) -> Self {
        self.decoration = Some(a);
        self
    }

    pub fn with_surplus(mut self, z: LabelVector) -> Self {
        self.surplus = Some(z);
        self
    }

    fn check(&self) -> Result<()> {
        let (m, n) = (self.grid.m(), self.grid.n());
        if let Some(l) = &self.labels {
            if l.m() != m || l.n() != n {
                return Err(Error::Label(format!(
                    "labelling has {} rows and {} columns, grid is {m}x{n}",
                    l.m(),
                    l.n()
                )));
            }
        }
        for v in [&self.decoration, &self.surplus].into_iter().flatten() {
            if v.len() != m + n - 1 {
                return Err(Error::Length { expected: m + n - 1, found: v.len() });
            }
        }
        Ok(())
    }
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Writes the canonical, newline-terminated text form.
pub fn to_text(doc: &Document) -> String {
    let mut out = format!("grid: {} {}\n", doc.grid.m(), doc.grid.n());
    for row in doc.grid.row_strings() {
        out.push_str(&row);
        out.push('\n');
    }
    if let Some(l) = &doc.labels {
        out.push_str(&format!("rows: {}\n", join(l.rows())));
        out.push_str(&format!("cols: {}\n", join(l.cols())));
    }
    if let Some(a) = &doc.decoration {
        out.push_str(&format!("decoration: {}\n", join(a.as_slice())));
    }
    if let Some(z) = &doc.surplus {
        out.push_str(&format!("surplus: {}\n", join(z.as_slice())));
    }
    out
}

fn parse_ints(line_no: usize, s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("expected a nonnegative integer, found {t:?}"),
            })
        })
        .collect()
}

/// Parses one document in the text form.
pub fn parse_text(text: &str) -> Result<Document> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.trim_end()));
    let (line_no, header) =
        lines.by_ref().find(|(_, l)| !l.is_empty()).ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let dims = header.strip_prefix("grid:").ok_or_else(|| Error::Parse {
        line: line_no,
        msg: format!("expected header 'grid: <m> <n>', found {header:?}"),
    })?;
    let dims = parse_ints(line_no, dims)?;
    let &[m, n] = dims.as_slice() else {
        return Err(Error::Parse { line: line_no, msg: "header needs exactly two integers".into() });
    };
    if m == 0 || n == 0 {
        return Err(Error::Dimension(format!("grid must be at least 1x1, got {m}x{n}")));
    }

    let mut rows = Vec::with_capacity(m);
    for k in 0..m {
        match lines.next() {
            Some((_, l)) if l.chars().all(|c| c == '0' || c == '1') && !l.is_empty() => {
                if l.len() != n {
                    return Err(Error::Dimension(format!("grid row {} has length {}, expected {n}", k + 1, l.len())));
                }
                rows.push(l.to_string());
            }
            Some((no, l)) if !l.contains(':') && !l.is_empty() => {
                return Err(Error::Parse {
                    line: no,
                    msg: format!("grid row contains characters outside {{0,1}}: {l:?}"),
                })
            }
            _ => return Err(Error::Dimension(format!("expected {m} grid rows, found {k}"))),
        }
    }
    let grid = Grid01::from_rows(&rows)?;

    let mut row_labels = None;
    let mut col_labels = None;
    let mut decoration = None;
    let mut surplus = None;
    for (no, line) in lines {
        if line.is_empty() {
            continue;
        }
        let (key, rest) =
            line.split_once(':').ok_or_else(|| Error::Parse { line: no, msg: format!("unexpected line {line:?}") })?;
        let slot = match key {
            "rows" => &mut row_labels,
            "cols" => &mut col_labels,
            "decoration" => &mut decoration,
            "surplus" => &mut surplus,
            other => return Err(Error::Parse { line: no, msg: format!("unknown key {other:?}") }),
        };
        if slot.is_some() {
            return Err(Error::Parse { line: no, msg: format!("duplicate key {key:?}") });
        }
        *slot = Some(parse_ints(no, rest)?);
    }
    assemble(grid, row_labels, col_labels, decoration, surplus)
}

fn assemble(
    grid: Grid01,
    row_labels: Option<Vec<usize>>,
    col_labels: Option<Vec<usize>>,
    decoration: Option<Vec<usize>>,
    surplus: Option<Vec<usize>>,
) -> Result<Document> {
    let labels = match (row_labels, col_labels) {
        (Some(r), Some(c)) => {
            if r.len() != grid.m() || c.len() != grid.n() {
                return Err(Error::Label(format!(
                    "expected {} row labels and {} column labels, found {} and {}",
                    grid.m(),
                    grid.n(),
                    r.len(),
                    c.len()
                )));
            }
            Some(Labelling::new(r, c)?)
        }
        (None, None) => None,
        _ => return Err(Error::Label("row and column labels must be given together".into())),
    };
    let doc =
        Document { grid, labels, decoration: decoration.map(LabelVector::new), surplus: surplus.map(LabelVector::new) };
    doc.check()?;
    Ok(doc)
}

/// Splits a stream of text documents separated by blank lines.
pub fn parse_text_stream(text: &str) -> Result<Vec<Document>> {
    let mut docs = Vec::new();
    let mut current = String::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            if !current.is_empty() {
                docs.push(parse_text(&current)?);
                current.clear();
            }
        } else {
            current.push_str(line);
            current.push('\n');
        }
    }
    if !current.is_empty() {
        docs.push(parse_text(&current)?);
    }
    Ok(docs)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonDocument {
    m: usize,
    n: usize,
    grid: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    row_labels: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    col_labels: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    decoration: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    surplus: Option<Vec<usize>>,
}

pub fn to_json(doc: &Document) -> String {
    let j = JsonDocument {
        m: doc.grid.m(),
        n: doc.grid.n(),
        grid: doc.grid.row_strings(),
        row_labels: doc.labels.as_ref().map(|l| l.rows().to_vec()),
        col_labels: doc.labels.as_ref().map(|l| l.cols().to_vec()),
        decoration: doc.decoration.as_ref().map(|a| a.as_slice().to_vec()),
        surplus: doc.surplus.as_ref().map(|z| z.as_slice().to_vec()),
    };
    serde_json::to_string(&j).expect("plain data always serializes")
}

pub fn parse_json(text: &str) -> Result<Document> {
    let j: JsonDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })?;
    if j.grid.len() != j.m {
        return Err(Error::Dimension(format!("expected {} grid rows, found {}", j.m, j.grid.len())));
    }
    if let Some(k) = j.grid.iter().position(|r| r.len() != j.n) {
        return Err(Error::Dimension(format!("grid row {} has length {}, expected {}", k + 1, j.grid[k].len(), j.n)));
    }
    let grid = Grid01::from_rows(&j.grid)?;
    assemble(grid, j.row_labels, j.col_labels, j.decoration, j.surplus)
}

/// Accepts either form, deciding by the first non-blank character.
pub fn parse_any(text: &str) -> Result<Document> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_text(text)
    }
}
