//! Dense GF(2) linear algebra on bit-packed rows.
//!
//! Rows are `u128` words, bit `j` = column `j`, so everything up to 128
//! columns (length-64 codes expanded to (A|B) form) fits one word per row.

/// Reduces `rows` in place to reduced row echelon form and returns the pivot
/// columns in increasing order. Zero rows are removed, so the surviving row
/// count is the rank and the result is the unique RREF basis of the span.
pub fn rref(rows: &mut Vec<u128>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let mask = 1u128 << c;
        let Some(sel) = (r..rows.len()).find(|&i| rows[i] & mask != 0) else {
            continue;
        };
        rows.swap(r, sel);
        let pivot_row = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & mask != 0 {
                *row ^= pivot_row;
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[u128], ncols: usize) -> usize {
    let mut work: Vec<u128> = rows.to_vec();
    rref(&mut work, ncols);
    work.len()
}

/// Basis of the right nullspace: all x with row . x = 0 for every row.
pub fn nullspace(rows: &[u128], ncols: usize) -> Vec<u128> {
    let mut work: Vec<u128> = rows.to_vec();
    let pivots = rref(&mut work, ncols);
    let is_pivot: Vec<bool> = {
        let mut v = vec![false; ncols];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::with_capacity(ncols - pivots.len());
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut x = 1u128 << free;
        for (r, &p) in pivots.iter().enumerate() {
            if work[r] & (1u128 << free) != 0 {
                x |= 1u128 << p;
            }
        }
        basis.push(x);
    }
    basis
}

/// Inverse of an n x n matrix given as u64 rows (bit j of row i = entry i,j).
/// Returns `None` when singular.
pub fn invert(rows: &[u64], n: usize) -> Option<Vec<u64>> {
    debug_assert!(n <= 64);
    // Augment each row with the identity in the high half of a u128.
    let mut work: Vec<u128> = rows
        .iter()
        .enumerate()
        .map(|(i, &row)| row as u128 | (1u128 << (n + i)))
        .collect();
    let pivots = rref(&mut work, 2 * n);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(work.iter().map(|&row| (row >> n) as u64).collect())
}

/// Product X * Y of n x n bit matrices as u64 rows.
pub fn matmul(x: &[u64], y: &[u64], n: usize) -> Vec<u64> {
    (0..n)
        .map(|i| {
            let mut acc = 0u64;
            let mut bits = x[i];
            while bits != 0 {
                let j = bits.trailing_zeros() as usize;
                acc ^= y[j];
                bits &= bits - 1;
            }
            acc
        })
        .collect()
}
