use super::Polynomial;
use crate::error::{Error, Result};

/// Determinant of a square matrix over the polynomial ring.
///
/// Laplace expansion along rows, memoized over the set of columns already
/// used: `partial[mask]` is the signed sum over all placements of the first
/// `popcount(mask)` rows into the columns of `mask`. Zero entries are
/// skipped, which keeps the banded matrices that show up here cheap.
pub fn determinant(matrix: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = matrix.len();
    for (row, entries) in matrix.iter().enumerate() {
        if entries.len() != n {
            return Err(Error::NonSquare {
                rows: n,
                row,
                len: entries.len(),
            });
        }
    }
    if n == 0 {
        return Ok(Polynomial::one());
    }
    assert!(n < usize::BITS as usize, "matrix too large for subset expansion");

    let full = (1usize << n) - 1;
    let mut partial: Vec<Option<Polynomial>> = vec![None; 1 << n];
    partial[0] = Some(Polynomial::one());
    for mask in 0..full {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        for (col, entry) in matrix[row].iter().enumerate() {
            if mask & (1 << col) != 0 || entry.is_zero() {
                continue;
            }
            // columns already used to the right of `col` are the new inversions
            let inversions = (mask >> (col + 1)).count_ones();
            let mut term = &acc * entry;
            if inversions % 2 == 1 {
                term = -term;
            }
            let slot = &mut partial[mask | (1 << col)];
            match slot {
                Some(p) => *p += term,
                None => *slot = Some(term),
            }
        }
    }
    Ok(partial[full].take().unwrap_or_default())
}
