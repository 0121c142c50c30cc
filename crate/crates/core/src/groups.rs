//! Finite groups as multiplication tables, minimum generating sets, and the
//! coset description of Cayley-table subsquare closures.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::chains::{closure, ChainError};
use crate::latin::{LatinSquare, LineKind, LineRef, Subsquare};

/// Largest group order searched by [`min_generating_size`] without the
/// override flag.
pub const GEN_GUARD: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not a Latin square")]
    NotLatin,
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("operation is not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element {element} is out of range for a group of order {order}")]
    BadElement { element: usize, order: usize },
    #[error("parameter {param} exceeds the supported maximum {max}")]
    ParamTooLarge { param: usize, max: usize },
    #[error("group order {order} exceeds the guard ({guard})")]
    OrderTooLarge { order: usize, guard: usize },
    #[error("line {line} is invalid here: {reason}")]
    BadLine { line: LineRef, reason: String },
    #[error("bad group table: {0}")]
    ShapeError(String),
    #[error(transparent)]
    Chain(#[from] ChainError),
}

/// A finite group given extensionally by its multiplication table
/// (`table[a][b] = a op b`), with the identity and inverses resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a multiplication table: Latin property, a two-sided
    /// identity, and associativity (checked exhaustively).
    pub fn from_table(rows: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = rows.len();
        if n == 0 {
            return Err(GroupError::ShapeError("empty table".into()));
        }
        if rows.iter().any(|r| r.len() != n) {
            return Err(GroupError::ShapeError("table is not square".into()));
        }
        let mut table = Vec::with_capacity(n * n);
        for row in rows {
            for &v in row {
                if v >= n {
                    return Err(GroupError::ShapeError(format!(
                        "element {} out of range for order {}",
                        v, n
                    )));
                }
                table.push(v);
            }
        }
        if LatinSquare::from_flat(n, table.clone()).is_err() {
            return Err(GroupError::NotLatin);
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..n {
            for b in 0..n {
                let ab = table[a * n + b];
                for c in 0..n {
                    if table[ab * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let inverse = (0..n)
            .map(|x| {
                (0..n)
                    .find(|&y| table[x * n + y] == identity)
                    .expect("rows are permutations")
            })
            .collect();
        Ok(FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a..n).all(|b| self.op(a, b) == self.op(b, a)))
    }

    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| self.table[a * self.order..(a + 1) * self.order].to_vec())
            .collect()
    }
}

/// The cyclic group of order `n` (addition mod `n`).
pub fn z(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::ShapeError("order must be positive".into()));
    }
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| (a + b) % n).collect())
        .collect();
    Ok(FiniteGroup::from_table(&rows).expect("modular addition forms a group"))
}

/// The elementary abelian group of order `2^k`: bitwise XOR on `k`-bit
/// words. Its table equals the grid of the `k`-th intercalate power.
pub fn z2_pow(k: usize) -> Result<FiniteGroup, GroupError> {
    if k > 6 {
        return Err(GroupError::ParamTooLarge { param: k, max: 6 });
    }
    let n = 1usize << k;
    let rows: Vec<Vec<usize>> = (0..n).map(|a| (0..n).map(|b| a ^ b).collect()).collect();
    Ok(FiniteGroup::from_table(&rows).expect("XOR forms a group"))
}

/// Direct product; element `(a, b)` is flattened to `a * |G2| + b`.
pub fn direct_product(g1: &FiniteGroup, g2: &FiniteGroup) -> FiniteGroup {
    let (n1, n2) = (g1.order(), g2.order());
    let n = n1 * n2;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| g1.op(a / n2, b / n2) * n2 + g2.op(a % n2, b % n2))
                .collect()
        })
        .collect();
    FiniteGroup::from_table(&rows).expect("a product of groups is a group")
}

/// The symmetric group on `m <= 4` points: elements are the permutations of
/// `0..m` in lexicographic order, composed as `(p * q)(x) = p(q(x))`.
pub fn sym(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::ShapeError("need at least one point".into()));
    }
    if m > 4 {
        return Err(GroupError::ParamTooLarge { param: m, max: 4 });
    }
    let perms = permutations(m);
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed");
    let rows: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            perms
                .iter()
                .map(|q| {
                    let composed: Vec<usize> = (0..m).map(|x| p[q[x]]).collect();
                    index_of(&composed)
                })
                .collect()
        })
        .collect();
    Ok(FiniteGroup::from_table(&rows).expect("permutation composition forms a group"))
}

fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<usize> = (0..m).collect();
    fn go(items: &mut Vec<usize>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if items.is_empty() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..items.len() {
            let x = items.remove(i);
            prefix.push(x);
            go(items, prefix, out);
            prefix.pop();
            items.insert(i, x);
        }
    }
    go(&mut items, &mut Vec::new(), &mut out);
    out
}

/// The dihedral group of the `m`-gon (`m <= 6`), of order `2m`. Element
/// `f * m + i` acts as `x -> i + (-1)^f x (mod m)`.
pub fn dihedral(m: usize) -> Result<FiniteGroup, GroupError> {
    if m == 0 {
        return Err(GroupError::ShapeError("need at least one vertex".into()));
    }
    if m > 6 {
        return Err(GroupError::ParamTooLarge { param: m, max: 6 });
    }
    let n = 2 * m;
    let compose = |a: usize, b: usize| -> usize {
        let (f1, i1) = (a / m, a % m);
        let (f2, i2) = (b / m, b % m);
        let rot = if f1 == 0 {
            (i1 + i2) % m
        } else {
            (i1 + m - i2 % m) % m
        };
        ((f1 + f2) % 2) * m + rot
    };
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| compose(a, b)).collect())
        .collect();
    Ok(FiniteGroup::from_table(&rows).expect("dihedral symmetries form a group"))
}

/// The subgroup generated by `gens`: closure of `gens` plus the identity
/// under the group operation (inverses follow by finiteness).
pub fn subgroup_generated(g: &FiniteGroup, gens: &[usize]) -> Result<BTreeSet<usize>, GroupError> {
    let n = g.order();
    for &x in gens {
        if x >= n {
            return Err(GroupError::BadElement {
                element: x,
                order: n,
            });
        }
    }
    let mut members: BTreeSet<usize> = BTreeSet::new();
    members.insert(g.identity());
    let mut work: Vec<usize> = vec![g.identity()];
    for &x in gens {
        if members.insert(x) {
            work.push(x);
        }
    }
    while let Some(a) = work.pop() {
        let snapshot: Vec<usize> = members.iter().copied().collect();
        for b in snapshot {
            for p in [g.op(a, b), g.op(b, a)] {
                if members.insert(p) {
                    work.push(p);
                }
            }
        }
    }
    Ok(members)
}

/// Smallest cardinality of a generating set, with the lexicographically
/// least witness. Exhaustive over subsets by increasing size; the identity
/// is excluded from candidates since it never helps.
pub fn min_generating_size(
    g: &FiniteGroup,
    override_guard: bool,
) -> Result<(usize, Vec<usize>), GroupError> {
    let n = g.order();
    if !override_guard && n > GEN_GUARD {
        return Err(GroupError::OrderTooLarge {
            order: n,
            guard: GEN_GUARD,
        });
    }
    let candidates: Vec<usize> = (0..n).filter(|&x| x != g.identity()).collect();
    for k in 0..=candidates.len() {
        let mut comb: Vec<usize> = (0..k).collect();
        loop {
            let subset: Vec<usize> = comb.iter().map(|&i| candidates[i]).collect();
            if subgroup_generated(g, &subset)?.len() == n {
                return Ok((k, subset));
            }
            if !next_combination(&mut comb, candidates.len()) {
                break;
            }
        }
    }
    unreachable!("all non-identity elements generate the group");
}

fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] != i + n - k {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The Cayley table of `g` as a Latin square (borders removed).
pub fn cayley_square(g: &FiniteGroup) -> LatinSquare {
    LatinSquare::from_flat(g.order(), g.table.clone()).expect("group tables are Latin")
}

/// Outcome of [`coset_columns_predicate`]: the coset-formula prediction for
/// the columns and rows of a subsquare closure, next to the closure itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetCheck {
    pub predicted_cols: BTreeSet<usize>,
    pub predicted_rows: BTreeSet<usize>,
    pub closure_cols: BTreeSet<usize>,
    pub closure_rows: BTreeSet<usize>,
    pub check: bool,
}

/// Predicts the column and row sets of the smallest subsquare of the Cayley
/// square of `g` meeting `{row r, col c} ∪ lines` by the coset formula, and
/// compares against the closure computed on the square.
///
/// Each line maps to a column `c_i`: the line itself if it is a column,
/// `r⁻¹ ⊕ l` for a symbol `l`, and `r⁻¹ ⊕ l ⊕ c` for a row `l`. With
/// `s_i = c_i ⊕ c⁻¹`, the prediction is `Col = <s_1..s_k> ⊕ c` and
/// `Row = r ⊕ <s_1..s_k>`.
pub fn coset_columns_predicate(
    g: &FiniteGroup,
    r: usize,
    c: usize,
    lines: &[LineRef],
) -> Result<CosetCheck, GroupError> {
    let n = g.order();
    if r >= n {
        return Err(GroupError::BadElement {
            element: r,
            order: n,
        });
    }
    if c >= n {
        return Err(GroupError::BadElement {
            element: c,
            order: n,
        });
    }
    let mut seen = BTreeSet::new();
    let mut gens = Vec::with_capacity(lines.len());
    for &line in lines {
        if line.index >= n {
            return Err(GroupError::BadLine {
                line,
                reason: format!("order is {}", n),
            });
        }
        if (line.kind == LineKind::Row && line.index == r)
            || (line.kind == LineKind::Col && line.index == c)
        {
            return Err(GroupError::BadLine {
                line,
                reason: "must be distinct from the fixed row and column".into(),
            });
        }
        if !seen.insert(line) {
            return Err(GroupError::BadLine {
                line,
                reason: "repeated line".into(),
            });
        }
        let col = match line.kind {
            LineKind::Col => line.index,
            LineKind::Sym => g.op(g.inverse(r), line.index),
            LineKind::Row => g.op(g.op(g.inverse(r), line.index), c),
        };
        gens.push(g.op(col, g.inverse(c)));
    }
    let span = subgroup_generated(g, &gens)?;
    let predicted_cols: BTreeSet<usize> = span.iter().map(|&s| g.op(s, c)).collect();
    let predicted_rows: BTreeSet<usize> = span.iter().map(|&s| g.op(r, s)).collect();

    let sq = cayley_square(g);
    let mut seeds = vec![LineRef::row(r), LineRef::col(c)];
    seeds.extend_from_slice(lines);
    let closed = closure(&sq, &Subsquare::empty(), &seeds)?;
    let check = closed.cols() == &predicted_cols && closed.rows() == &predicted_rows;
    Ok(CosetCheck {
        predicted_cols,
        predicted_rows,
        closure_cols: closed.cols().clone(),
        closure_rows: closed.rows().clone(),
        check,
    })
}

/// `scc(L(G)) = alpha + 1` where `alpha` is the minimum generating number.
pub fn scc_group_formula(g: &FiniteGroup, override_guard: bool) -> Result<usize, GroupError> {
    Ok(min_generating_size(g, override_guard)?.0 + 1)
}
