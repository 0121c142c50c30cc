//! Parsers for the small CLI grammars: group specs and burn seed specs.

use latinburn::groups::{dihedral, direct_product, sym, z, z2_pow, FiniteGroup};
use latinburn::latin::{Entry, LatinSquare, LineKind, LineRef};

use crate::error::CliError;

/// Grammar: `z<n>`, `z2^<k>`, `s<m>`, `d<m>`, and products joined with
/// `x` (e.g. `z2xz4`).
pub fn parse_group(spec: &str) -> Result<FiniteGroup, CliError> {
    let spec = spec.trim().to_ascii_lowercase();
    let mut group: Option<FiniteGroup> = None;
    for atom in spec.split('x') {
        let next = parse_group_atom(atom)?;
        group = Some(match group {
            None => next,
            Some(g) => direct_product(&g, &next),
        });
    }
    group.ok_or_else(|| CliError::usage("empty group spec"))
}

fn parse_group_atom(atom: &str) -> Result<FiniteGroup, CliError> {
    let atom = atom.trim();
    let bad = || CliError::usage(format!("unrecognized group spec {:?}", atom));
    if let Some(k) = atom.strip_prefix("z2^") {
        let k: usize = k.parse().map_err(|_| bad())?;
        return z2_pow(k).map_err(CliError::usage);
    }
    if let Some(n) = atom.strip_prefix('z') {
        let n: usize = n.parse().map_err(|_| bad())?;
        return z(n).map_err(CliError::usage);
    }
    if let Some(m) = atom.strip_prefix('s') {
        let m: usize = m.parse().map_err(|_| bad())?;
        return sym(m).map_err(CliError::usage);
    }
    if let Some(m) = atom.strip_prefix('d') {
        let m: usize = m.parse().map_err(|_| bad())?;
        return dihedral(m).map_err(CliError::usage);
    }
    Err(bad())
}

/// Entry seed for an `HL` burn: `r,c;r,c;...` (0-based cells; an empty
/// string is the empty seed).
pub fn parse_entry_seed(sq: &LatinSquare, spec: &str) -> Result<Vec<Entry>, CliError> {
    let n = sq.order();
    let mut entries = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (r, c) = part
            .split_once(',')
            .ok_or_else(|| CliError::usage(format!("expected r,c in seed part {:?}", part)))?;
        let r: usize = r
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("invalid row in seed part {:?}", part)))?;
        let c: usize = c
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("invalid column in seed part {:?}", part)))?;
        if r >= n || c >= n {
            return Err(CliError::usage(format!(
                "cell ({}, {}) is out of range for order {}",
                r, c, n
            )));
        }
        entries.push(sq.entry_at(r, c));
    }
    Ok(entries)
}

/// Line seed for an `H3L` burn: `R0;C2;S1` (case-insensitive kinds,
/// 0-based indices; an empty string is the empty seed).
pub fn parse_line_seed(sq: &LatinSquare, spec: &str) -> Result<Vec<LineRef>, CliError> {
    let n = sq.order();
    let mut lines = Vec::new();
    for part in spec.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let kind = match part.chars().next().map(|c| c.to_ascii_uppercase()) {
            Some('R') => LineKind::Row,
            Some('C') => LineKind::Col,
            Some('S') => LineKind::Sym,
            _ => {
                return Err(CliError::usage(format!(
                    "line {:?} must start with R, C, or S",
                    part
                )))
            }
        };
        let index: usize = part[1..]
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("invalid line index in {:?}", part)))?;
        if index >= n {
            return Err(CliError::usage(format!(
                "line {} is out of range for order {}",
                part, n
            )));
        }
        lines.push(LineRef { kind, index });
    }
    Ok(lines)
}
