//! S-module generators of the equivariant Chow groups of the fixed components,
//! given by their values at the torus-fixed points.

use std::collections::BTreeMap;

use crate::charpoly::{elementary_symmetric, linear_form, schur_det, SPoly};
use crate::fixedloci::{FactorCoordinate, FactorKind, FixedComponent};
use crate::staircases::{Partition, Staircase};
use crate::toricfan::{Chart, Fan, Line, Subtorus};

use super::ChowError;

/// A homogeneous class on one component, by its values at the component's
/// points (in the component's point order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub degree: u32,
    pub values: Vec<SPoly>,
}

#[derive(Debug, Clone, Default)]
pub struct GeneratorSet {
    pub generators: Vec<Generator>,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn max_degree(&self) -> u32 {
        self.generators.iter().map(|g| g.degree).max().unwrap_or(0)
    }
}

/// Generators of one factor: `values[g][k]` is generator `g` at the factor's
/// `k`-th local point.
#[derive(Debug, Clone)]
pub struct FactorGenerators {
    pub degrees: Vec<u32>,
    pub values: Vec<Vec<SPoly>>,
}

/// Monomials `u^a v^b` of `w`-weight `n`; `None` when there are infinitely many.
fn weight_piece(chart: &Chart, w: Subtorus, n: i64) -> Option<Vec<(u32, u32)>> {
    let (wu, wv) = (w.weight(chart.u), w.weight(chart.v));
    if wu == 0 || wv == 0 || (wu > 0) != (wv > 0) {
        return None;
    }
    let mut out = Vec::new();
    let (wu, wv, n) = if wu > 0 { (wu, wv, n) } else { (-wu, -wv, -n) };
    if n < 0 {
        return Some(out);
    }
    for a in 0..=(n / wu) {
        let rest = n - a * wu;
        if rest % wv == 0 {
            out.push((a as u32, (rest / wv) as u32));
        }
    }
    Some(out)
}

/// Products of one entry per list, keeping total degree `<= max_degree`.
fn products(lists: &[FactorGenerators], npoints: usize, max_degree: u32) -> FactorGenerators {
    let mut acc = FactorGenerators {
        degrees: vec![0],
        values: vec![vec![SPoly::one(); npoints]],
    };
    for l in lists {
        let mut next = FactorGenerators {
            degrees: Vec::new(),
            values: Vec::new(),
        };
        for (da, va) in acc.degrees.iter().zip(&acc.values) {
            for (db, vb) in l.degrees.iter().zip(&l.values) {
                if da + db > max_degree {
                    continue;
                }
                next.degrees.push(da + db);
                next.values
                    .push(va.iter().zip(vb).map(|(x, y)| x * y).collect());
            }
        }
        acc = next;
    }
    acc
}

/// Generators of a graded Hilbert scheme factor at the isolated fixed point
/// of `chart`, evaluated at the given local staircases.
///
/// For each weight `n` with `H(n) > 0` the factor maps to the Grassmannian of
/// `H(n)`-dimensional quotients of the weight-`n` piece; the Chern classes of
/// the universal quotient are the elementary symmetric functions of the
/// quotient's monomial characters, and the Schur determinants over the box
/// `(N - H(n)) x H(n)` generate. Products over the weights with total degree
/// above `max_degree` are dropped: they vanish modulo `S^+` on a smooth
/// projective factor of that dimension, so the rest still generate.
pub fn grassmann_factor_generators(
    chart: &Chart,
    w: Subtorus,
    hilbert: &BTreeMap<i64, u32>,
    stairs: &[Staircase],
    max_degree: u32,
) -> Result<FactorGenerators, ChowError> {
    let mut per_weight = Vec::new();
    for (&n, &h) in hilbert {
        if h == 0 {
            continue;
        }
        let piece = weight_piece(chart, w, n).ok_or(ChowError::InfiniteGradedPiece {
            chart: chart.index,
            weight: n,
            subtorus: w,
        })?;
        let big_n = piece.len();
        let rows = big_n - h as usize;
        let chern: Vec<Vec<SPoly>> = stairs
            .iter()
            .map(|s| {
                let forms: Vec<SPoly> = piece
                    .iter()
                    .filter(|&&(a, b)| s.contains(a, b))
                    .map(|&(a, b)| linear_form(chart.monomial(a, b)))
                    .collect();
                assert_eq!(
                    forms.len(),
                    h as usize,
                    "staircase does not have the prescribed Hilbert function"
                );
                elementary_symmetric(&forms)
            })
            .collect();
        let mut gens = FactorGenerators {
            degrees: Vec::new(),
            values: Vec::new(),
        };
        for lambda in Partition::in_box(rows, h) {
            if lambda.size() > max_degree {
                continue;
            }
            gens.degrees.push(lambda.size());
            gens.values.push(
                chern
                    .iter()
                    .map(|c| schur_det(lambda.parts(), c, rows))
                    .collect(),
            );
        }
        per_weight.push(gens);
    }
    Ok(products(&per_weight, stairs.len(), max_degree))
}

fn triangular(n: u32) -> i64 {
    (n as i64) * (n as i64 + 1) / 2
}

/// Generators of a line component: per block of `d` equal pieces, the class
/// with value `(T(l) - T(d - l)) χ` at a point with `l` pieces at the first
/// endpoint (`T(n) = n(n+1)/2`, `χ` the along-line character there), and all
/// products of powers at most `d` of these classes.
pub fn line_factor_generators(
    fan: &Fan,
    line: Line,
    blocks: &[(u32, u32)],
    counts: &[Vec<u32>],
) -> FactorGenerators {
    let chi = fan.line_character(line, line.first);
    let mut per_block = Vec::new();
    for (j, &(_, d)) in blocks.iter().enumerate() {
        let c: Vec<SPoly> = counts
            .iter()
            .map(|l| linear_form(chi.scale(triangular(l[j]) - triangular(d - l[j]))))
            .collect();
        let mut gens = FactorGenerators {
            degrees: vec![0],
            values: vec![vec![SPoly::one(); counts.len()]],
        };
        for m in 1..=d {
            let prev = gens.values.last().unwrap();
            let next = prev.iter().zip(&c).map(|(x, y)| x * y).collect();
            gens.degrees.push(m);
            gens.values.push(next);
        }
        per_block.push(gens);
    }
    products(&per_block, counts.len(), u32::MAX)
}

/// Pointwise products of one generator per factor, of degree at most the
/// component dimension.
pub fn component_generators(fan: &Fan, c: &FixedComponent) -> Result<GeneratorSet, ChowError> {
    let mut per_factor: Vec<FactorGenerators> = Vec::new();
    for (f, factor) in c.factors.iter().enumerate() {
        // distinct local coordinates of this factor and each point's slot
        let mut locals: Vec<&FactorCoordinate> = Vec::new();
        let mut slot = Vec::with_capacity(c.len());
        for coords in &c.coordinates {
            let x = &coords[f];
            let k = match locals.iter().position(|y| *y == x) {
                Some(k) => k,
                None => {
                    locals.push(x);
                    locals.len() - 1
                }
            };
            slot.push(k);
        }
        let local = match &factor.kind {
            FactorKind::ReducedPoint { .. } => FactorGenerators {
                degrees: vec![0],
                values: vec![vec![SPoly::one(); locals.len()]],
            },
            FactorKind::GradedHilb { chart, hilbert } => {
                let stairs: Vec<Staircase> = locals
                    .iter()
                    .map(|x| match x {
                        FactorCoordinate::Graded(s) => s.clone(),
                        other => panic!("graded factor with coordinate {other:?}"),
                    })
                    .collect();
                grassmann_factor_generators(
                    fan.chart(*chart),
                    c.subtorus,
                    hilbert,
                    &stairs,
                    factor.dimension,
                )?
            }
            FactorKind::LineBlocks { line, blocks, .. } => {
                let counts: Vec<Vec<u32>> = locals
                    .iter()
                    .map(|x| match x {
                        FactorCoordinate::Line(l) => l.clone(),
                        other => panic!("line factor with coordinate {other:?}"),
                    })
                    .collect();
                line_factor_generators(fan, *line, blocks, &counts)
            }
        };
        // spread to the component's points
        per_factor.push(FactorGenerators {
            degrees: local.degrees,
            values: local
                .values
                .iter()
                .map(|v| slot.iter().map(|&k| v[k].clone()).collect())
                .collect(),
        });
    }
    let all = products(&per_factor, c.len(), c.dimension);
    Ok(GeneratorSet {
        generators: all
            .degrees
            .into_iter()
            .zip(all.values)
            .map(|(degree, values)| Generator { degree, values })
            .collect(),
    })
}
