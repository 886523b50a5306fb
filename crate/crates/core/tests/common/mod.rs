//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use equichow::charpoly::{Character, Q};
use equichow::staircases::Staircase;
use equichow::toricfan::Chart;

/// Minimal generators `(a, b)` of the monomial ideal whose complement is the
/// staircase, as exponents of `u^a v^b`.
pub fn ideal_generators(s: &Staircase) -> Vec<(i64, i64)> {
    let h: Vec<i64> = s.heights().parts().iter().map(|&x| x as i64).collect();
    let mut gens = Vec::new();
    let mut prev = i64::MAX;
    for a in 0..=h.len() {
        let ha = h.get(a).copied().unwrap_or(0);
        if ha < prev {
            gens.push((a as i64, ha));
        }
        prev = ha;
    }
    gens
}

fn outside(s: &Staircase, m: (i64, i64)) -> bool {
    m.0 >= 0 && m.1 >= 0 && s.contains(m.0 as u32, m.1 as u32)
}

fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let ncols = rows.first().map_or(0, Vec::len);
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= y * &f;
                }
            }
        }
        r += 1;
    }
    r
}

/// Weights `δ = (a, b)` of `Hom(I, R/I)` with multiplicity, computed by
/// solving the syzygy conditions weight by weight: a homogeneous map of
/// weight `δ` sends each generator `m` to `c_m · m u^a v^b`.
pub fn hom_weights(s: &Staircase) -> BTreeMap<(i64, i64), usize> {
    let gens = ideal_generators(s);
    let n = s.size() as i64 + 1;
    let mut out = BTreeMap::new();
    for a in -n..=n {
        for b in -n..=n {
            let shift = |m: (i64, i64)| (m.0 + a, m.1 + b);
            let vars: Vec<usize> = (0..gens.len())
                .filter(|&i| outside(s, shift(gens[i])))
                .collect();
            if vars.is_empty() {
                continue;
            }
            let col = |i: usize| vars.iter().position(|&v| v == i);
            let mut rows = Vec::new();
            for i in 0..gens.len() {
                for j in i + 1..gens.len() {
                    let l = (gens[i].0.max(gens[j].0), gens[i].1.max(gens[j].1));
                    if !outside(s, shift(l)) {
                        continue;
                    }
                    let mut row = vec![Q::zero(); vars.len()];
                    if let Some(c) = col(i) {
                        row[c] += Q::one();
                    }
                    if let Some(c) = col(j) {
                        row[c] -= Q::one();
                    }
                    rows.push(row);
                }
            }
            let dim = vars.len() - rank(rows);
            if dim > 0 {
                out.insert((a, b), dim);
            }
        }
    }
    out
}

/// Tangent characters from [`hom_weights`] in the chart's character basis.
pub fn hom_characters(s: &Staircase, chart: &Chart) -> Vec<Character> {
    let mut v = Vec::new();
    for ((a, b), n) in hom_weights(s) {
        let chi = Character::new(
            a * chart.u.c1 + b * chart.v.c1,
            a * chart.u.c2 + b * chart.v.c2,
        );
        v.extend(std::iter::repeat_n(chi, n));
    }
    v.sort();
    v
}

/// Row `d` of `∏_{k≥1} ∏_{s} (1 - z^{2(k-1+s)} q^k)^{-b_{2s}}` as the
/// coefficients of `z^0, z^2, …`, by expanding each geometric series.
pub fn gottsche_row(b: [usize; 3], d: usize) -> Vec<u64> {
    // series[n] = polynomial in y = z^2
    let mut series: Vec<Vec<u64>> = vec![vec![0; 2 * d + 1]; d + 1];
    series[0][0] = 1;
    for k in 1..=d {
        for (s, &mult) in b.iter().enumerate() {
            let shift = k - 1 + s;
            for _ in 0..mult {
                let mut next = vec![vec![0u64; 2 * d + 1]; d + 1];
                for n in 0..=d {
                    for y in 0..=2 * d {
                        let c = series[n][y];
                        if c == 0 {
                            continue;
                        }
                        let mut m = 0;
                        while n + k * m <= d && y + shift * m <= 2 * d {
                            next[n + k * m][y + shift * m] += c;
                            m += 1;
                        }
                    }
                }
                series = next;
            }
        }
    }
    series[d][..=2 * d].to_vec()
}

/// `dim A_T^k` of a free module with Betti numbers `b` over `Q[t1, t2]`.
pub fn free_rank(b: &[u64], k: usize) -> usize {
    (0..=k.min(b.len().saturating_sub(1)))
        .map(|j| b[j] as usize * (k - j + 1))
        .sum()
}

/// Seed from `EQUICHOW_SEED`, defaulting to 0.
pub fn seed() -> u64 {
    std::env::var("EQUICHOW_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}
