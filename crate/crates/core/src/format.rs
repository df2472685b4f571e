//! Text formats for generator matrices.
//!
//! Ring-code files:
//!
//! ```text
//! # comment
//! q m ell k
//! c,c,...,c | c,c,...,c | ...      (k lines, ell entries, m coefficients each)
//! ```
//!
//! Coefficients are listed constant term first. Field-code files have the
//! header `q n k` followed by k rows of n space-separated symbols. Over F_4
//! the symbols are `0 1 w w2`.

use crate::error::{Error, Result};
use crate::gf::{FieldElem, FieldSpec};
use crate::qc::FieldCode;
use crate::rcode::RingCode;
use crate::ring::{RingElem, RingSpec};
use std::path::Path;

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-empty, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_header(line: usize, s: &str) -> Result<Vec<usize>> {
    let v: Vec<usize> = s
        .split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("bad header field {t:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != 4 && v.len() != 3 {
        return Err(perr(line, "header must have 3 or 4 integers"));
    }
    Ok(v)
}

fn parse_symbol(f: FieldSpec, line: usize, s: &str) -> Result<FieldElem> {
    f.parse_symbol(s.trim()).ok_or_else(|| perr(line, format!("bad symbol {s:?} for {f}")))
}

pub fn parse_ring_code(text: &str) -> Result<RingCode> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let h = parse_header(hl, header)?;
    if h.len() != 4 {
        return Err(perr(hl, "ring-code header is `q m ell k`"));
    }
    let (q, m, ell, k) = (h[0], h[1], h[2], h[3]);
    let spec = RingSpec::from_params(q as u32, m).map_err(|e| perr(hl, e.to_string()))?;
    let f = spec.field();
    let mut gens = Vec::with_capacity(k);
    for (ln, l) in lines {
        let entries: Vec<&str> = l.split('|').collect();
        if entries.len() != ell {
            return Err(perr(ln, format!("expected {ell} entries, found {}", entries.len())));
        }
        let mut row: Vec<RingElem> = Vec::with_capacity(ell);
        for e in entries {
            let coeffs: Vec<FieldElem> =
                e.split(',').map(|s| parse_symbol(f, ln, s)).collect::<Result<_>>()?;
            if coeffs.len() != m {
                return Err(perr(ln, format!("expected {m} coefficients in {:?}", e.trim())));
            }
            row.push(spec.from_coeffs(&coeffs));
        }
        gens.push(row);
    }
    if gens.len() != k {
        return Err(perr(hl, format!("header announces {k} rows, found {}", gens.len())));
    }
    RingCode::new(spec, ell, gens)
}

pub fn render_ring_code(c: &RingCode, comment: Option<&str>) -> String {
    let spec = c.spec();
    let f = spec.field();
    let mut out = String::new();
    if let Some(cm) = comment {
        for l in cm.lines() {
            out.push_str(&format!("# {l}\n"));
        }
    }
    out.push_str(&format!("{} {} {} {}\n", f.q(), spec.m(), c.ell(), c.k()));
    for row in c.gens() {
        let entries: Vec<String> = row
            .iter()
            .map(|a| a.coeffs().iter().map(|&x| f.file_symbol(x)).collect::<Vec<_>>().join(","))
            .collect();
        out.push_str(&entries.join(" | "));
        out.push('\n');
    }
    out
}

pub fn parse_field_code(text: &str) -> Result<FieldCode> {
    let mut lines = content_lines(text);
    let (hl, header) = lines.next().ok_or_else(|| perr(0, "empty input"))?;
    let h = parse_header(hl, header)?;
    if h.len() != 3 {
        return Err(perr(hl, "field-code header is `q n k`"));
    }
    let (q, n, k) = (h[0], h[1], h[2]);
    let f = FieldSpec::from_order(q as u32).map_err(|e| perr(hl, e.to_string()))?;
    let mut rows = Vec::with_capacity(k);
    for (ln, l) in lines {
        let row: Vec<FieldElem> = l.split_whitespace().map(|s| parse_symbol(f, ln, s)).collect::<Result<_>>()?;
        if row.len() != n {
            return Err(perr(ln, format!("expected {n} symbols, found {}", row.len())));
        }
        rows.push(row);
    }
    if rows.len() != k {
        return Err(perr(hl, format!("header announces {k} rows, found {}", rows.len())));
    }
    FieldCode::from_rows(f, n, &rows)
}

pub fn render_field_code(d: &FieldCode, comment: Option<&str>) -> String {
    let f = d.field();
    let mut out = String::new();
    if let Some(cm) = comment {
        for l in cm.lines() {
            out.push_str(&format!("# {l}\n"));
        }
    }
    out.push_str(&format!("{} {} {}\n", f.q(), d.n(), d.k()));
    for r in d.rows() {
        let syms: Vec<&str> = r.iter().map(|&x| f.file_symbol(x)).collect();
        out.push_str(&syms.join(" "));
        out.push('\n');
    }
    out
}

pub fn load_ring_code(path: impl AsRef<Path>) -> Result<RingCode> {
    parse_ring_code(&std::fs::read_to_string(path)?)
}

pub fn load_field_code(path: impl AsRef<Path>) -> Result<FieldCode> {
    parse_field_code(&std::fs::read_to_string(path)?)
}
