//! Bit-exact text export of generator matrices and the matching import.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::{CodeError, LinearCode};
use crate::field::{FieldError, FiniteField};
use crate::linalg::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ImportError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// `field <spec>`, `n <n> k <k>`, then one `row: ...` line per row.
    MatrixText,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct JsonExport {
    field: String,
    n: usize,
    k: usize,
    rows: Vec<Vec<String>>,
}

fn text_rows(code: &LinearCode) -> Vec<Vec<String>> {
    let f = code.field();
    code.generator()
        .row_vecs()
        .iter()
        .map(|r| r.iter().map(|&e| f.format_element(e)).collect())
        .collect()
}

pub fn export_code(code: &LinearCode, format: ExportFormat) -> String {
    match format {
        ExportFormat::MatrixText => {
            let mut out = format!("field {}\nn {} k {}\n", code.field(), code.n(), code.k());
            for row in text_rows(code) {
                out.push_str("row: ");
                out.push_str(&row.join(" "));
                out.push('\n');
            }
            out
        }
        ExportFormat::Json => {
            let doc = JsonExport {
                field: code.field().to_string(),
                n: code.n(),
                k: code.k(),
                rows: text_rows(code),
            };
            let mut s = serde_json::to_string(&doc).expect("plain data");
            s.push('\n');
            s
        }
    }
}

fn malformed(line: usize, msg: impl Into<String>) -> ImportError {
    ImportError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn build(field: &FiniteField, n: usize, rows: &[Vec<String>]) -> Result<LinearCode, ImportError> {
    let mut data = Vec::with_capacity(rows.len() * n);
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(malformed(
                i + 3,
                format!("expected {n} entries, found {}", row.len()),
            ));
        }
        for e in row {
            data.push(field.parse_element(e)?);
        }
    }
    Ok(LinearCode::new(Matrix::new(field, rows.len(), n, data))?)
}

/// Parses the matrix-text format written by [`export_code`].
pub fn import_matrix_text(text: &str) -> Result<LinearCode, ImportError> {
    let mut lines = text.lines();
    let spec = lines
        .next()
        .and_then(|l| l.strip_prefix("field "))
        .ok_or_else(|| malformed(1, "expected `field <spec>`"))?;
    let field: FiniteField = spec.parse()?;
    let header = lines
        .next()
        .ok_or_else(|| malformed(2, "missing `n <n> k <k>`"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let (n, k) = match words.as_slice() {
        ["n", n, "k", k] => (
            n.parse::<usize>().map_err(|_| malformed(2, "bad n"))?,
            k.parse::<usize>().map_err(|_| malformed(2, "bad k"))?,
        ),
        _ => return Err(malformed(2, "expected `n <n> k <k>`")),
    };
    let mut rows = Vec::with_capacity(k);
    for (i, line) in lines.enumerate() {
        let body = line
            .strip_prefix("row:")
            .ok_or_else(|| malformed(i + 3, "expected `row: ...`"))?;
        rows.push(body.split_whitespace().map(str::to_string).collect());
    }
    if rows.len() != k {
        return Err(malformed(
            2,
            format!("header says k = {k}, found {} rows", rows.len()),
        ));
    }
    build(&field, n, &rows)
}

/// Parses the JSON format written by [`export_code`].
pub fn import_json(text: &str) -> Result<LinearCode, ImportError> {
    let doc: JsonExport =
        serde_json::from_str(text).map_err(|e| malformed(e.line(), e.to_string()))?;
    if doc.rows.len() != doc.k {
        return Err(malformed(
            1,
            format!("k = {} but {} rows", doc.k, doc.rows.len()),
        ));
    }
    let field: FiniteField = doc.field.parse()?;
    build(&field, doc.n, &doc.rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_prime_field_example() {
        let f = FiniteField::prime(5).unwrap();
        let code = LinearCode::new(Matrix::from_ints(&f, &[&[1, 1, 1], &[0, 2, 4]])).unwrap();
        let text = export_code(&code, ExportFormat::MatrixText);
        assert_eq!(text, "field 5^1:\nn 3 k 2\nrow: 1 1 1\nrow: 0 2 4\n");
        assert_eq!(import_matrix_text(&text).unwrap(), code);
    }

    #[test]
    fn empty_code_and_extension_field() {
        let f = FiniteField::with_order(16).unwrap();
        let empty = LinearCode::new(Matrix::zeros(&f, 0, 4)).unwrap();
        let text = export_code(&empty, ExportFormat::MatrixText);
        assert_eq!(text.lines().count(), 2);
        assert_eq!(
            export_code(
                &import_matrix_text(&text).unwrap(),
                ExportFormat::MatrixText
            ),
            text
        );

        let g = f.generator();
        let rows = vec![
            vec![f.one(), g, f.pow(g, 2)],
            vec![f.zero(), f.one(), f.pow(g, 7)],
        ];
        let code = LinearCode::new(Matrix::from_rows(&f, 3, &rows)).unwrap();
        for fmt in [ExportFormat::MatrixText, ExportFormat::Json] {
            let text = export_code(&code, fmt);
            let back = match fmt {
                ExportFormat::MatrixText => import_matrix_text(&text).unwrap(),
                ExportFormat::Json => import_json(&text).unwrap(),
            };
            assert_eq!(export_code(&back, fmt), text);
        }
    }

    #[test]
    fn malformed_input() {
        assert!(import_matrix_text("n 3 k 2\n").is_err());
        assert!(import_matrix_text("field 5^1:\nn 3 k 2\nrow: 1 1 1\n").is_err());
        assert!(import_matrix_text("field 5^1:\nn 3 k 1\nrow: 1 1\n").is_err());
        assert!(import_matrix_text("field 5^1:\nn 2 k 1\nrow: 0 0\n").is_err());
    }
}
