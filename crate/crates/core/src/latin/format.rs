//! The `.ls` text format.
//!
//! Line 1 holds the decimal order `n`; the next `n` non-comment lines each
//! hold `n` whitespace-separated decimal symbols in `0..n`. Lines starting
//! with `#` are comments; blank lines are skipped. Line numbers in errors
//! are 1-based over the raw text.

use super::{LatinError, LatinSquare};

pub fn parse(text: &str) -> Result<LatinSquare, LatinError> {
    let mut order: Option<usize> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut line_count = 0;
    for (idx, raw) in text.lines().enumerate() {
        line_count = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match order {
            None => {
                let n: usize = line.parse().map_err(|_| LatinError::ParseError {
                    line: line_count,
                    msg: format!("expected the square order, found {:?}", line),
                })?;
                order = Some(n);
            }
            Some(n) => {
                if rows.len() == n {
                    return Err(LatinError::ParseError {
                        line: line_count,
                        msg: format!("unexpected data after {} rows", n),
                    });
                }
                let mut syms = Vec::with_capacity(n);
                for tok in line.split_whitespace() {
                    let s: usize = tok.parse().map_err(|_| LatinError::ParseError {
                        line: line_count,
                        msg: format!("invalid symbol {:?}", tok),
                    })?;
                    syms.push(s);
                }
                if syms.len() != n {
                    return Err(LatinError::ParseError {
                        line: line_count,
                        msg: format!("expected {} symbols, found {}", n, syms.len()),
                    });
                }
                rows.push(syms);
            }
        }
    }
    let n = order.ok_or(LatinError::ParseError {
        line: line_count + 1,
        msg: "missing order line".into(),
    })?;
    if rows.len() != n {
        return Err(LatinError::ParseError {
            line: line_count + 1,
            msg: format!("expected {} rows, found {}", n, rows.len()),
        });
    }
    LatinSquare::new(n, &rows)
}

pub fn serialize(sq: &LatinSquare) -> String {
    let mut out = format!("{}\n", sq.order());
    for row in sq.rows() {
        let cells: Vec<String> = row.iter().map(|s| s.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
