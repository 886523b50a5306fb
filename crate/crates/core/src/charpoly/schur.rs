use std::collections::HashMap;

use super::poly::SPoly;

/// Jacobi–Trudi style determinant `det(c[λ_i + s - i])` of size `rows`.
///
/// `c[0]` is expected to be 1; indices outside `0..c.len()` read as zero.
/// Parts of `lambda` beyond its length are zero.
pub fn schur_det(lambda: &[u32], c: &[SPoly], rows: usize) -> SPoly {
    assert!(
        lambda.iter().filter(|&&p| p > 0).count() <= rows,
        "partition {lambda:?} has more nonzero parts than {rows} rows"
    );
    if rows == 0 {
        return SPoly::one();
    }
    let entry = |i: usize, s: usize| -> SPoly {
        let part = lambda.get(i).copied().unwrap_or(0) as i64;
        let idx = part + s as i64 - i as i64;
        if idx < 0 || idx as usize >= c.len() {
            SPoly::zero()
        } else {
            c[idx as usize].clone()
        }
    };
    let matrix: Vec<Vec<SPoly>> = (0..rows)
        .map(|i| (0..rows).map(|s| entry(i, s)).collect())
        .collect();
    determinant(&matrix)
}

/// Determinant by Laplace expansion along rows, memoized on the set of
/// remaining columns. Suitable for the small sizes that occur here.
pub fn determinant(m: &[Vec<SPoly>]) -> SPoly {
    let n = m.len();
    assert!(n < 64);
    let mut memo: HashMap<u64, SPoly> = HashMap::new();
    minor(m, 0, (1u64 << n) - 1, &mut memo)
}

fn minor(m: &[Vec<SPoly>], row: usize, cols: u64, memo: &mut HashMap<u64, SPoly>) -> SPoly {
    if row == m.len() {
        return SPoly::one();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = SPoly::zero();
    let mut sign_pos = true;
    for col in 0..m.len() {
        if cols & (1 << col) == 0 {
            continue;
        }
        let e = &m[row][col];
        if !e.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << col), memo);
            let term = e * &sub;
            acc = if sign_pos { &acc + &term } else { &acc - &term };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(cols, acc.clone());
    acc
}
