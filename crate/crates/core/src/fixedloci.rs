//! Relevant one-dimensional subtori and the irreducible components of the
//! fixed loci `Hilb^{d, T'}` they cut out.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::charpoly::{product_of_forms, Character, SPoly};
use crate::staircases::{
    enumerate_fixed_points, hilbert_multifunction, line_blocks_local, HilbertMultifunction,
    LineBlock, Locus, MultiStaircase, Partition, Staircase,
};
use crate::toricfan::{Fan, Line, Subtorus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComponentError {
    #[error("inconsistent component for subtorus {subtorus}: {message}")]
    InternalInconsistency { subtorus: Subtorus, message: String },
    #[error("zero tangent character at {point}")]
    ZeroWeight { point: String },
}

/// The torus-fixed points of `Hilb^d(X)` with their tangent characters.
#[derive(Debug, Clone)]
pub struct FixedPointSet {
    fan: Fan,
    d: u32,
    points: Vec<MultiStaircase>,
    tangent: Vec<Vec<Character>>,
    index: HashMap<MultiStaircase, usize>,
}

impl FixedPointSet {
    pub fn new(fan: &Fan, d: u32) -> FixedPointSet {
        let points = enumerate_fixed_points(fan, d);
        let tangent = points.iter().map(|z| z.tangent(fan)).collect();
        let index = points
            .iter()
            .enumerate()
            .map(|(i, z)| (z.clone(), i))
            .collect();
        FixedPointSet {
            fan: fan.clone(),
            d,
            points,
            tangent,
            index,
        }
    }

    pub fn fan(&self) -> &Fan {
        &self.fan
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[MultiStaircase] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &MultiStaircase {
        &self.points[i]
    }

    pub fn position(&self, z: &MultiStaircase) -> Option<usize> {
        self.index.get(z).copied()
    }

    pub fn tangent(&self, i: usize) -> &[Character] {
        &self.tangent[i]
    }

    /// Tangent characters at point `i` annihilated by `w`.
    pub fn invariant_tangent(&self, i: usize, w: Subtorus) -> Vec<Character> {
        self.tangent[i]
            .iter()
            .copied()
            .filter(|&c| w.annihilates(c))
            .collect()
    }

    /// Relevant subtori with the invariant tangent dimension at point `i`.
    pub fn relevance_at(&self, i: usize) -> BTreeMap<Subtorus, usize> {
        let mut out = BTreeMap::new();
        for &c in &self.tangent[i] {
            if let Some(w) = Subtorus::annihilator_of(c) {
                *out.entry(w).or_insert(0) += 1;
            }
        }
        out
    }

    /// Subtori annihilating some tangent character, sorted and deduplicated.
    pub fn relevant_subtori(&self) -> Vec<Subtorus> {
        let set: BTreeSet<Subtorus> = self
            .tangent
            .iter()
            .flatten()
            .filter_map(|&c| Subtorus::annihilator_of(c))
            .collect();
        set.into_iter().collect()
    }
}

pub fn relevant_subtori(fan: &Fan, d: u32) -> Vec<Subtorus> {
    FixedPointSet::new(fan, d).relevant_subtori()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    ReducedPoint {
        locus: Locus,
    },
    GradedHilb {
        chart: usize,
        hilbert: BTreeMap<i64, u32>,
    },
    LineBlocks {
        line: Line,
        pi: Partition,
        blocks: Vec<(u32, u32)>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub kind: FactorKind,
    pub dimension: u32,
    /// Fixed points of the factor alone.
    pub num_points: usize,
}

/// Where a point of a component sits inside one factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FactorCoordinate {
    Point,
    /// The staircase at the factor's chart.
    Graded(Staircase),
    /// Pieces of each block at the line's first endpoint.
    Line(Vec<u32>),
}

#[derive(Debug, Clone)]
pub struct FixedComponent {
    pub subtorus: Subtorus,
    pub multifunction: HilbertMultifunction,
    pub factors: Vec<Factor>,
    pub dimension: u32,
    /// Indices into the fixed point set, increasing.
    pub points: Vec<usize>,
    /// `coordinates[k][f]` is the place of `points[k]` in factor `f`.
    pub coordinates: Vec<Vec<FactorCoordinate>>,
    /// Invariant tangent characters at each point.
    pub invariant_tangent: Vec<Vec<Character>>,
    /// Equivariant Euler class of the component's tangent space at each point.
    pub euler: Vec<SPoly>,
}

impl FixedComponent {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Position of a global fixed point within this component.
    pub fn local_index(&self, global: usize) -> Option<usize> {
        self.points.binary_search(&global).ok()
    }

    /// All linear factors of all Euler classes, point by point.
    pub fn euler_factors(&self) -> Vec<Character> {
        self.invariant_tangent.iter().flatten().copied().collect()
    }
}

fn inconsistent(w: Subtorus, message: String) -> ComponentError {
    ComponentError::InternalInconsistency {
        subtorus: w,
        message,
    }
}

/// Euler class of the `w`-invariant tangent space at point `i`.
pub fn component_euler(
    set: &FixedPointSet,
    i: usize,
    w: Subtorus,
) -> Result<SPoly, ComponentError> {
    let chars = set.invariant_tangent(i, w);
    if chars.iter().any(Character::is_zero) {
        return Err(ComponentError::ZeroWeight {
            point: set.point(i).id().to_string(),
        });
    }
    Ok(product_of_forms(&chars))
}

/// Components of `Hilb^{d, T'}` for the subtorus `w`, ordered by their first point.
pub fn components(set: &FixedPointSet, w: Subtorus) -> Result<Vec<FixedComponent>, ComponentError> {
    let fan = set.fan();
    let shape = fan.classify_fixed_locus(w);
    let mut groups: Vec<(HilbertMultifunction, Vec<usize>)> = Vec::new();
    let mut seen: HashMap<HilbertMultifunction, usize> = HashMap::new();
    for i in 0..set.len() {
        let h = hilbert_multifunction(fan, set.point(i), w);
        match seen.get(&h) {
            Some(&g) => groups[g].1.push(i),
            None => {
                seen.insert(h.clone(), groups.len());
                groups.push((h, vec![i]));
            }
        }
    }
    groups
        .into_iter()
        .map(|(h, pts)| assemble(set, w, &shape.pfix, &shape.lfix, h, pts))
        .collect()
}

fn assemble(
    set: &FixedPointSet,
    w: Subtorus,
    pfix: &[usize],
    lfix: &[Line],
    multifunction: HilbertMultifunction,
    points: Vec<usize>,
) -> Result<FixedComponent, ComponentError> {
    let fan = set.fan();
    let mut factors = Vec::new();
    let mut coordinates: Vec<Vec<FactorCoordinate>> = vec![Vec::new(); points.len()];

    for &p in pfix {
        let chart = fan.chart(p);
        let (wu, wv) = (w.weight(chart.u), w.weight(chart.v));
        let local_dims: Vec<usize> = points
            .iter()
            .map(|&i| {
                crate::staircases::tangent_characters(set.point(i).at(p), chart)
                    .into_iter()
                    .filter(|&c| w.annihilates(c))
                    .count()
            })
            .collect();
        if local_dims.iter().any(|&k| k != local_dims[0]) {
            return Err(inconsistent(
                w,
                format!("local invariant dimensions {local_dims:?} at chart {p}"),
            ));
        }
        let dim = local_dims[0] as u32;
        let stairs: BTreeSet<&Staircase> = points.iter().map(|&i| set.point(i).at(p)).collect();
        if (wu > 0) != (wv > 0) && dim != 0 {
            return Err(inconsistent(
                w,
                format!("chart {p} has opposite weights but invariant tangent dimension {dim}"),
            ));
        }
        if dim == 0 {
            if stairs.len() != 1 {
                return Err(inconsistent(
                    w,
                    format!("rigid chart {p} carries {} staircases", stairs.len()),
                ));
            }
            factors.push(Factor {
                kind: FactorKind::ReducedPoint {
                    locus: Locus::Point(p),
                },
                dimension: 0,
                num_points: 1,
            });
            for c in coordinates.iter_mut() {
                c.push(FactorCoordinate::Point);
            }
        } else {
            let hilbert = multifunction
                .at(Locus::Point(p))
                .cloned()
                .unwrap_or_default();
            factors.push(Factor {
                kind: FactorKind::GradedHilb { chart: p, hilbert },
                dimension: dim,
                num_points: stairs.len(),
            });
            for (k, &i) in points.iter().enumerate() {
                coordinates[k].push(FactorCoordinate::Graded(set.point(i).at(p).clone()));
            }
        }
    }

    for &line in lfix {
        let blocks: Vec<_> = points
            .iter()
            .map(|&i| line_blocks_local(set.point(i), line))
            .collect();
        let pi = blocks[0].pi.clone();
        if blocks.iter().any(|b| b.pi != pi) {
            return Err(inconsistent(
                w,
                format!("points disagree on the partition along {line}"),
            ));
        }
        if pi.is_empty() {
            factors.push(Factor {
                kind: FactorKind::ReducedPoint {
                    locus: Locus::Line(line),
                },
                dimension: 0,
                num_points: 1,
            });
            for c in coordinates.iter_mut() {
                c.push(FactorCoordinate::Point);
            }
            continue;
        }
        let shape: Vec<(u32, u32)> = blocks[0]
            .blocks
            .iter()
            .map(|b| (b.length, b.multiplicity))
            .collect();
        let dimension = shape.iter().map(|&(_, m)| m).sum();
        let num_points = shape.iter().map(|&(_, m)| m as usize + 1).product();
        factors.push(Factor {
            kind: FactorKind::LineBlocks {
                line,
                pi,
                blocks: shape,
            },
            dimension,
            num_points,
        });
        for (k, b) in blocks.iter().enumerate() {
            coordinates[k].push(FactorCoordinate::Line(
                b.blocks.iter().map(|x: &LineBlock| x.at_first).collect(),
            ));
        }
    }

    let dimension: u32 = factors.iter().map(|f| f.dimension).sum();
    let expected: usize = factors.iter().map(|f| f.num_points).product();
    if expected != points.len() {
        return Err(inconsistent(
            w,
            format!(
                "{} points but the factors have {expected} fixed points together",
                points.len()
            ),
        ));
    }
    let distinct: BTreeSet<String> = coordinates.iter().map(|c| format!("{c:?}")).collect();
    if distinct.len() != points.len() {
        return Err(inconsistent(
            w,
            "two points share factor coordinates".to_string(),
        ));
    }

    let mut invariant_tangent = Vec::with_capacity(points.len());
    let mut euler = Vec::with_capacity(points.len());
    for &i in &points {
        let chars = set.invariant_tangent(i, w);
        if chars.len() as u32 != dimension {
            return Err(inconsistent(
                w,
                format!(
                    "invariant tangent dimension {} at {} differs from the factor dimension {dimension}",
                    chars.len(),
                    set.point(i).id()
                ),
            ));
        }
        euler.push(component_euler(set, i, w)?);
        invariant_tangent.push(chars);
    }
    if dimension == 0 && points.len() != 1 {
        return Err(inconsistent(
            w,
            "zero-dimensional component with several points".to_string(),
        ));
    }

    Ok(FixedComponent {
        subtorus: w,
        multifunction,
        factors,
        dimension,
        points,
        coordinates,
        invariant_tangent,
        euler,
    })
}

/// Components of every relevant subtorus, in subtorus order.
pub fn all_components(
    set: &FixedPointSet,
) -> Result<Vec<(Subtorus, Vec<FixedComponent>)>, ComponentError> {
    set.relevant_subtori()
        .into_par_iter()
        .map(|w| components(set, w).map(|c| (w, c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{linear_form, Q};

    fn plane3() -> FixedPointSet {
        FixedPointSet::new(&Fan::projective_plane(), 3)
    }

    fn find(set: &FixedPointSet, id: &str) -> usize {
        set.points().iter().position(|z| z.id() == id).unwrap()
    }

    fn w(a: i64, b: i64) -> Subtorus {
        Subtorus::through(a, b).unwrap()
    }

    #[test]
    fn relevant_subtori_of_the_plane() {
        let set = FixedPointSet::new(&Fan::projective_plane(), 1);
        let ws: Vec<(i64, i64)> = set.relevant_subtori().iter().map(|s| s.w()).collect();
        // the three ray directions up to sign
        assert_eq!(ws, vec![(0, 1), (1, 0), (1, 1)]);
    }

    #[test]
    fn every_point_in_exactly_one_component() {
        let set = plane3();
        for (_, comps) in all_components(&set).unwrap() {
            let mut all: Vec<usize> = comps.iter().flat_map(|c| c.points.clone()).collect();
            all.sort();
            assert_eq!(all, (0..set.len()).collect::<Vec<_>>());
            for c in &comps {
                if c.len() > 1 {
                    assert!(c.dimension >= 1);
                }
                for e in &c.euler {
                    assert!(!e.is_zero());
                    assert!(e.is_homogeneous_of(c.dimension));
                }
            }
        }
    }

    #[test]
    fn component_of_a_under_10() {
        let set = plane3();
        // A = (t1^2, t1 t2, t2^2) at p1; chart 0 has (u, v) = (t2, t1)
        let a = find(&set, "P2:d3:[2,1|∅|∅]");
        let comps = components(&set, w(1, 0)).unwrap();
        let c = comps.iter().find(|c| c.points.contains(&a)).unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c.dimension, 2);
        assert_eq!(c.factors.len(), 2);
        assert!(matches!(c.factors[0].kind, FactorKind::ReducedPoint { .. }));
        match &c.factors[1].kind {
            FactorKind::LineBlocks { pi, .. } => assert_eq!(pi, &Partition::new(vec![2, 1])),
            k => panic!("unexpected factor {k:?}"),
        }
        let t2sq = &linear_form(Character::new(0, 1)) * &linear_form(Character::new(0, 1));
        let ia = c.local_index(a).unwrap();
        assert_eq!(c.euler[ia], t2sq);
        let ids: BTreeSet<&str> = c.points.iter().map(|&i| set.point(i).id()).collect();
        // A13 is A moved to p3; D is {1,t1} at p1 and {1} at p3; D13 swaps the ends
        assert!(ids.contains("P2:d3:[∅|∅|2,1]"));
        let d = find(&set, "P2:d3:[2|∅|1]");
        assert_eq!(
            c.euler[c.local_index(d).unwrap()],
            t2sq.scale(&Q::from_integer((-1).into()))
        );
    }

    #[test]
    fn component_of_c_under_11() {
        let set = plane3();
        // C = ({1,t1}, {1}, ∅)
        let cpt = find(&set, "P2:d3:[2|1|∅]");
        let comps = components(&set, w(1, 1)).unwrap();
        let c = comps.iter().find(|c| c.points.contains(&cpt)).unwrap();
        assert_eq!(c.dimension, 2);
        assert_eq!(c.len(), 4);
        let d = find(&set, "P2:d3:[2|∅|1]");
        assert!(c.points.contains(&d));
    }

    #[test]
    fn invariant_dimension_matches_factors_everywhere() {
        for (fan, d) in [
            (Fan::p1_times_p1(), 3),
            (Fan::hirzebruch(1), 3),
            (Fan::hirzebruch(2), 2),
        ] {
            let set = FixedPointSet::new(&fan, d);
            for (_, comps) in all_components(&set).unwrap() {
                for c in comps {
                    let total: u32 = c.factors.iter().map(|f| f.dimension).sum();
                    assert_eq!(total, c.dimension);
                }
            }
        }
    }
}
