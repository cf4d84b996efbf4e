//! Text formats for multisets of permutations.
//!
//! One entry per line, `<permutation> [x <multiplicity>]`. Permutations are digit
//! strings (degree at most 9) or comma-separated values. `#` starts a comment;
//! blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::perm::{PermMultiset, Permutation};

/// Parses a multiset file. `degree` is used only when the file has no entries.
pub fn parse_multiset(text: &str, degree: Option<usize>) -> Result<PermMultiset> {
    let mut entries: Vec<(usize, Permutation, u64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let mult_text = match tokens.as_slice() {
            [_] => None,
            [_, "x" | "X", m] => Some(*m),
            [_, m] if m.starts_with(['x', 'X']) => Some(&m[1..]),
            _ => return Err(err(format!("expected `<permutation> [x <multiplicity>]`, got {line:?}"))),
        };
        let perm_text = tokens[0];
        let mult = match mult_text {
            Some(m) => match m.parse::<u64>() {
                Ok(0) => return Err(err("multiplicity must be positive".into())),
                Ok(v) => v,
                Err(_) => return Err(err(format!("invalid multiplicity {m:?}"))),
            },
            None => 1,
        };
        let pi: Permutation = perm_text
            .parse()
            .map_err(|e| err(format!("{perm_text:?}: {e}")))?;
        if let Some((first_line, first, _)) = entries.first() {
            if first.degree() != pi.degree() {
                return Err(err(format!(
                    "degree {} differs from degree {} on line {first_line}",
                    pi.degree(),
                    first.degree()
                )));
            }
        }
        entries.push((line_no, pi, mult));
    }
    let n = entries.first().map(|(_, p, _)| p.degree()).or(degree).unwrap_or(0);
    let mut b = PermMultiset::new(n);
    for (_, p, m) in entries {
        b.insert(p, m)?;
    }
    Ok(b)
}

/// Renders a multiset in the format read by [`parse_multiset`].
pub fn format_multiset(b: &PermMultiset) -> String {
    let mut out = String::new();
    for (p, m) in b.iter() {
        if m == 1 {
            let _ = writeln!(out, "{p}");
        } else {
            let _ = writeln!(out, "{p} x {m}");
        }
    }
    out
}
