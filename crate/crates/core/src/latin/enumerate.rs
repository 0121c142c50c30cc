//! Exhaustive enumeration of all Latin squares of a small order.

use super::{LatinError, LatinSquare};

/// Largest order enumerable without an override.
pub const ENUM_GUARD: usize = 4;
/// Largest order enumerable with the override flag.
pub const ENUM_GUARD_OVERRIDE: usize = 5;

/// Enumerates every order-`n` Latin square exactly once, in lexicographic
/// grid order, by row-by-row backtracking.
///
/// Order 5 (161280 squares) is only allowed with `override_guard`; larger
/// orders are always rejected.
pub fn enumerate_all(n: usize, override_guard: bool) -> Result<SquareEnumeration, LatinError> {
    if n == 0 {
        return Err(LatinError::InvalidOrder { got: 0, min: 1 });
    }
    let guard = if override_guard {
        ENUM_GUARD_OVERRIDE
    } else {
        ENUM_GUARD
    };
    if n > guard {
        return Err(LatinError::OrderTooLarge { order: n, guard });
    }
    Ok(SquareEnumeration {
        n,
        cells: vec![0; n * n],
        next_try: vec![0; n * n],
        row_used: vec![false; n * n],
        col_used: vec![false; n * n],
        pos: 0,
    })
}

/// Stateful backtracking cursor over all order-`n` squares. Consume from a
/// single thread.
pub struct SquareEnumeration {
    n: usize,
    cells: Vec<usize>,
    // next symbol to try at each cell when (re)visited going forward
    next_try: Vec<usize>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
    // next cell to fill; n*n right after emitting a solution
    pos: usize,
}

impl Iterator for SquareEnumeration {
    type Item = LatinSquare;

    fn next(&mut self) -> Option<LatinSquare> {
        let n = self.n;
        let nn = n * n;
        let mut backtrack = self.pos == nn;
        loop {
            if backtrack {
                if self.pos == 0 {
                    return None;
                }
                self.pos -= 1;
                let (r, c) = (self.pos / n, self.pos % n);
                let s = self.cells[self.pos];
                self.row_used[r * n + s] = false;
                self.col_used[c * n + s] = false;
                self.next_try[self.pos] = s + 1;
                backtrack = false;
            }
            let (r, c) = (self.pos / n, self.pos % n);
            let mut placed = false;
            for s in self.next_try[self.pos]..n {
                if !self.row_used[r * n + s] && !self.col_used[c * n + s] {
                    self.cells[self.pos] = s;
                    self.row_used[r * n + s] = true;
                    self.col_used[c * n + s] = true;
                    placed = true;
                    break;
                }
            }
            if placed {
                self.pos += 1;
                if self.pos == nn {
                    let sq = LatinSquare::from_flat(n, self.cells.clone())
                        .expect("backtracking only produces Latin grids");
                    return Some(sq);
                }
                self.next_try[self.pos] = 0;
            } else {
                backtrack = true;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    /// Independent oracle: counts order-`n` squares by filling columns
    /// instead of rows.
    fn count_by_columns(n: usize) -> usize {
        fn go(
            n: usize,
            pos: usize,
            grid: &mut Vec<usize>,
            row_used: &mut Vec<bool>,
            col_used: &mut Vec<bool>,
        ) -> usize {
            if pos == n * n {
                return 1;
            }
            // column-major traversal
            let (c, r) = (pos / n, pos % n);
            let mut total = 0;
            for s in 0..n {
                if !row_used[r * n + s] && !col_used[c * n + s] {
                    row_used[r * n + s] = true;
                    col_used[c * n + s] = true;
                    grid[r * n + c] = s;
                    total += go(n, pos + 1, grid, row_used, col_used);
                    row_used[r * n + s] = false;
                    col_used[c * n + s] = false;
                }
            }
            total
        }
        go(
            n,
            0,
            &mut vec![0; n * n],
            &mut vec![false; n * n],
            &mut vec![false; n * n],
        )
    }

    #[test]
    fn counts_match_both_enumeration_orders() {
        let expected = [1usize, 2, 12, 576];
        for n in 1..=4 {
            let row_count = enumerate_all(n, false).unwrap().count();
            assert_eq!(row_count, expected[n - 1], "row-major count at order {}", n);
            assert_eq!(
                count_by_columns(n),
                expected[n - 1],
                "column-major count at order {}",
                n
            );
        }
    }

    #[test]
    fn enumeration_is_duplicate_free_and_ordered() {
        let squares: Vec<LatinSquare> = enumerate_all(4, false).unwrap().collect();
        let distinct: HashSet<Vec<usize>> = squares.iter().map(|sq| sq.rows().concat()).collect();
        assert_eq!(distinct.len(), squares.len());
        let mut flats: Vec<Vec<usize>> = squares.iter().map(|sq| sq.rows().concat()).collect();
        let sorted = {
            let mut v = flats.clone();
            v.sort();
            v
        };
        assert_eq!(flats, sorted, "lexicographic grid order");
        flats.clear();
    }

    #[test]
    fn first_square_is_cyclic_like() {
        // the lexicographically least order-3 square is the cyclic one
        let first = enumerate_all(3, false).unwrap().next().unwrap();
        assert_eq!(first, super::super::cyclic(3).unwrap());
    }

    #[test]
    fn order_guard() {
        assert!(matches!(
            enumerate_all(5, false),
            Err(LatinError::OrderTooLarge { order: 5, guard: 4 })
        ));
        assert!(enumerate_all(5, true).is_ok());
        assert!(matches!(
            enumerate_all(6, true),
            Err(LatinError::OrderTooLarge { order: 6, guard: 5 })
        ));
        assert!(matches!(
            enumerate_all(0, false),
            Err(LatinError::InvalidOrder { .. })
        ));
    }
}
