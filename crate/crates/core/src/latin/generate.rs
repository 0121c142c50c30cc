//! Generator family: cyclic squares, products, intercalate powers, and
//! seeded random squares.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{LatinError, LatinSquare};

/// The cyclic square of order `n`: `grid[r][c] = (r + c) mod n`.
pub fn cyclic(n: usize) -> Result<LatinSquare, LatinError> {
    if n < 1 {
        return Err(LatinError::InvalidOrder { got: n, min: 1 });
    }
    let grid = (0..n * n).map(|v| (v / n + v % n) % n).collect();
    LatinSquare::from_flat(n, grid)
}

/// The product square of `a` (order `n1`) and `b` (order `n2`): index pairs
/// `(x, y)` are flattened row-major to `x * n2 + y`, and the entry
/// `((r1,r2), (c1,c2), (s1,s2))` is included for every pair of entries of
/// the factors.
pub fn product(a: &LatinSquare, b: &LatinSquare) -> LatinSquare {
    let (n1, n2) = (a.order(), b.order());
    let n = n1 * n2;
    let mut grid = vec![0usize; n * n];
    for r1 in 0..n1 {
        for c1 in 0..n1 {
            let s1 = a.sym_at(r1, c1);
            for r2 in 0..n2 {
                for c2 in 0..n2 {
                    let (r, c) = (r1 * n2 + r2, c1 * n2 + c2);
                    grid[r * n + c] = s1 * n2 + b.sym_at(r2, c2);
                }
            }
        }
    }
    LatinSquare::from_flat(n, grid).expect("product of Latin squares is Latin")
}

/// The `k`-th power of the intercalate (the unique 2x2 square), built as the
/// iterated product. The result has order `2^k` and grid `r XOR c`.
pub fn intercalate_power(k: usize) -> Result<LatinSquare, LatinError> {
    if k < 1 {
        return Err(LatinError::InvalidOrder { got: k, min: 1 });
    }
    let base = cyclic(2)?;
    let mut sq = base.clone();
    for _ in 1..k {
        sq = product(&sq, &base);
    }
    Ok(sq)
}

/// A deterministic pseudo-random order-`n` square: backtracking over cells
/// in row-major order with per-cell symbol preferences shuffled from `seed`.
///
/// The output always validates and is a pure function of `(n, seed)`. The
/// distribution over squares is NOT uniform.
pub fn random_square(n: usize, seed: u64) -> Result<LatinSquare, LatinError> {
    if n < 1 {
        return Err(LatinError::InvalidOrder { got: n, min: 1 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut prefs: Vec<Vec<usize>> = Vec::with_capacity(n * n);
    for _ in 0..n * n {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        prefs.push(order);
    }

    let mut cells = vec![0usize; n * n];
    let mut row_used = vec![false; n * n];
    let mut col_used = vec![false; n * n];
    let ok = fill(n, 0, &prefs, &mut cells, &mut row_used, &mut col_used);
    debug_assert!(ok, "full backtracking always completes a Latin square");
    LatinSquare::from_flat(n, cells)
}

fn fill(
    n: usize,
    pos: usize,
    prefs: &[Vec<usize>],
    cells: &mut [usize],
    row_used: &mut [bool],
    col_used: &mut [bool],
) -> bool {
    if pos == n * n {
        return true;
    }
    let (r, c) = (pos / n, pos % n);
    for &s in &prefs[pos] {
        if !row_used[r * n + s] && !col_used[c * n + s] {
            row_used[r * n + s] = true;
            col_used[c * n + s] = true;
            cells[pos] = s;
            if fill(n, pos + 1, prefs, cells, row_used, col_used) {
                return true;
            }
            row_used[r * n + s] = false;
            col_used[c * n + s] = false;
        }
    }
    false
}
