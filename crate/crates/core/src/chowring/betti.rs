//! Betti numbers from a Białynicki-Birula decomposition and from the
//! generating function for Hilbert schemes of points on surfaces.

use crate::fixedloci::FixedPointSet;

/// A cocharacter `(1, m)` pairing nonzero with every tangent character,
/// searching `m = start, start + 1, …`.
pub fn generic_cocharacter(set: &FixedPointSet, start: i64) -> (i64, i64) {
    let mut m = start;
    loop {
        let lambda = (1, m);
        let generic = (0..set.len()).all(|i| set.tangent(i).iter().all(|c| c.pair(lambda) != 0));
        if generic {
            return lambda;
        }
        m += 1;
    }
}

fn betti_for(set: &FixedPointSet, lambda: (i64, i64)) -> Vec<usize> {
    let mut b = vec![0usize; 2 * set.d() as usize + 1];
    for i in 0..set.len() {
        let positive = set.tangent(i).iter().filter(|c| c.pair(lambda) > 0).count();
        b[positive] += 1;
    }
    b
}

/// `b_{2k}` = number of fixed points with `k` positive tangent weights under a
/// generic cocharacter. Panics if a second generic choice disagrees.
pub fn betti_bb(set: &FixedPointSet) -> Vec<usize> {
    let first = generic_cocharacter(set, 1);
    let second = generic_cocharacter(set, first.1 + 1);
    let b = betti_for(set, first);
    assert_eq!(
        b,
        betti_for(set, second),
        "cell counts depend on the cocharacter {first:?} vs {second:?}"
    );
    b
}

/// Coefficients of `q^0..q^d` of
/// `∏_k (1 - z^{2k-2} q^k)^{-b0} (1 - z^{2k} q^k)^{-b2} (1 - z^{2k+2} q^k)^{-b4}`,
/// each as the list of even-degree coefficients `z^0, z^2, …, z^{4n}`.
pub fn gottsche_poincare(b0: u64, b2: u64, b4: u64, d: u32) -> Vec<Vec<u64>> {
    let d = d as usize;
    // series[n][j] = coefficient of q^n z^{2j}
    let mut series: Vec<Vec<u64>> = (0..=d).map(|n| vec![0u64; 2 * n + 1]).collect();
    series[0][0] = 1;
    for k in 1..=d {
        for (shift, b) in [(k - 1, b0), (k, b2), (k + 1, b4)] {
            // multiply by (1 - z^{2 shift} q^k)^{-1}, b times
            for _ in 0..b {
                for n in k..=d {
                    for j in 0..=2 * n {
                        if j >= shift && j - shift <= 2 * (n - k) {
                            let add = series[n - k][j - shift];
                            series[n][j] += add;
                        }
                    }
                }
            }
        }
    }
    series
}
