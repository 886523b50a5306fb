//! Partitions, staircases and the torus-fixed points of the Hilbert scheme.
//!
//! A staircase on an affine chart with coordinates `u, v` is stored by its column heights:
//! the cell `(a, b)` is the monomial `u^a v^b`, and column `a` holds the cells
//! `(a, 0), …, (a, h_a - 1)`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::charpoly::Character;
use crate::toricfan::{Chart, Fan, Line, Subtorus};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StaircaseError {
    #[error("fixed point {point} has cells outside the endpoints of {line}")]
    UnsupportedSupport { point: String, line: Line },
}

/// Weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Partition {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let n = self.part(0);
        Partition(
            (0..n)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    /// All partitions of `n`, largest first part first (`[3], [2,1], [1,1,1]`).
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Partitions fitting in a box with `rows` parts each at most `cols`.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        fn rec(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition::new(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then_with(|| b.cmp(a)));
        out
    }

    /// `(value, multiplicity)` blocks in decreasing order of value.
    pub fn blocks(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// Finite order ideal of `N^2`, stored by column heights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Staircase {
    heights: Partition,
}

impl Staircase {
    pub fn from_heights(heights: Partition) -> Staircase {
        Staircase { heights }
    }

    pub fn empty() -> Staircase {
        Staircase::default()
    }

    /// `None` unless the cells form an order ideal.
    pub fn from_cells(cells: &[(u32, u32)]) -> Option<Staircase> {
        let mut cols: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &(a, b) in cells {
            cols.entry(a).or_default().push(b);
        }
        let mut heights = Vec::new();
        for (expected, (a, mut bs)) in cols.into_iter().enumerate() {
            if a as usize != expected {
                return None;
            }
            bs.sort_unstable();
            bs.dedup();
            if bs.iter().enumerate().any(|(k, &b)| b as usize != k) {
                return None;
            }
            heights.push(bs.len() as u32);
        }
        if heights.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        Some(Staircase {
            heights: Partition(heights),
        })
    }

    pub fn heights(&self) -> &Partition {
        &self.heights
    }

    /// Lengths of the rows `b = 0, 1, …` (cells with fixed `v`-exponent).
    pub fn row_lengths(&self) -> Partition {
        self.heights.conjugate()
    }

    pub fn size(&self) -> u32 {
        self.heights.size()
    }

    pub fn is_empty(&self) -> bool {
        self.heights.is_empty()
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.heights.part(a as usize) > b
    }

    pub fn cells(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (a, &h) in self.heights.parts().iter().enumerate() {
            for b in 0..h {
                out.push((a as u32, b));
            }
        }
        out
    }

    pub fn transpose(&self) -> Staircase {
        Staircase {
            heights: self.heights.conjugate(),
        }
    }

    /// Cells to the right of `(a, b)` in its row.
    pub fn arm(&self, a: u32, b: u32) -> u32 {
        self.row_lengths().part(b as usize) - a - 1
    }

    /// Cells above `(a, b)` in its column.
    pub fn leg(&self, a: u32, b: u32) -> u32 {
        self.heights.part(a as usize) - b - 1
    }
}

impl fmt::Display for Staircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.heights)
    }
}

/// Characters of the tangent space `Hom(I, R/I)` at the monomial ideal of `e`
/// on `chart`, two per cell: `a·u − (l+1)·v` and `−(a+1)·u + l·v` for arm `a`
/// and leg `l`.
pub fn tangent_characters(e: &Staircase, chart: &Chart) -> Vec<Character> {
    let rows = e.row_lengths();
    let mut out = Vec::with_capacity(2 * e.size() as usize);
    for (a, b) in e.cells() {
        let arm = (rows.part(b as usize) - a - 1) as i64;
        let leg = (e.heights.part(a as usize) - b - 1) as i64;
        out.push(chart.u.scale(arm) - chart.v.scale(leg + 1));
        out.push(chart.v.scale(leg) - chart.u.scale(arm + 1));
    }
    out
}

/// One staircase per chart: a torus-fixed point of the Hilbert scheme.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiStaircase {
    stairs: Vec<Staircase>,
    id: String,
}

impl MultiStaircase {
    pub fn new(fan_name: &str, stairs: Vec<Staircase>) -> MultiStaircase {
        let d: u32 = stairs.iter().map(Staircase::size).sum();
        let body: Vec<String> = stairs.iter().map(|s| s.to_string()).collect();
        let id = format!("{fan_name}:d{d}:[{}]", body.join("|"));
        MultiStaircase { stairs, id }
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn stairs(&self) -> &[Staircase] {
        &self.stairs
    }

    pub fn at(&self, chart: usize) -> &Staircase {
        &self.stairs[chart]
    }

    pub fn length(&self) -> u32 {
        self.stairs.iter().map(Staircase::size).sum()
    }

    /// Tangent characters of the fixed point, chart by chart.
    pub fn tangent(&self, fan: &Fan) -> Vec<Character> {
        self.stairs
            .iter()
            .zip(fan.charts())
            .flat_map(|(s, c)| tangent_characters(s, c))
            .collect()
    }
}

impl fmt::Display for MultiStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)
    }
}

/// Compositions of `d` into `r` nonnegative parts, largest first part first.
pub fn compositions(d: u32, r: usize) -> Vec<Vec<u32>> {
    if r == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in compositions(d - first, r - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All torus-fixed points of the length-`d` Hilbert scheme, in canonical order.
pub fn enumerate_fixed_points(fan: &Fan, d: u32) -> Vec<MultiStaircase> {
    let r = fan.num_charts();
    let mut out = Vec::new();
    for comp in compositions(d, r) {
        let choices: Vec<Vec<Partition>> = comp.iter().map(|&n| Partition::all(n)).collect();
        let mut idx = vec![0usize; r];
        loop {
            let stairs = (0..r)
                .map(|i| Staircase::from_heights(choices[i][idx[i]].clone()))
                .collect();
            out.push(MultiStaircase::new(fan.name(), stairs));
            // odometer with the last chart varying fastest
            let mut k = r;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                if k == 0 {
                    k = usize::MAX;
                    break;
                }
            }
            if k == usize::MAX {
                break;
            }
        }
    }
    out
}

/// Number of partitions of each `n ≤ max`.
pub fn partition_counts(max: u32) -> Vec<u64> {
    let mut p = vec![0u64; max as usize + 1];
    p[0] = 1;
    for part in 1..=max as usize {
        for n in part..=max as usize {
            p[n] += p[n - part];
        }
    }
    p
}

/// A connected component of the fixed locus of a subtorus on the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Locus {
    Point(usize),
    Line(Line),
}

impl fmt::Display for Locus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Locus::Point(i) => write!(f, "p{i}"),
            Locus::Line(l) => write!(f, "{l}"),
        }
    }
}

/// Per component of the surface's fixed locus, the number of monomials of
/// each weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HilbertMultifunction {
    pub pieces: Vec<(Locus, BTreeMap<i64, u32>)>,
}

impl HilbertMultifunction {
    pub fn mass(&self) -> u32 {
        self.pieces.iter().flat_map(|(_, h)| h.values()).sum()
    }

    pub fn at(&self, locus: Locus) -> Option<&BTreeMap<i64, u32>> {
        self.pieces
            .iter()
            .find(|(l, _)| *l == locus)
            .map(|(_, h)| h)
    }
}

fn weight_counts(s: &Staircase, chart: &Chart, w: Subtorus, into: &mut BTreeMap<i64, u32>) {
    for (a, b) in s.cells() {
        *into.entry(w.weight(chart.monomial(a, b))).or_insert(0) += 1;
    }
}

pub fn hilbert_multifunction(fan: &Fan, z: &MultiStaircase, w: Subtorus) -> HilbertMultifunction {
    let shape = fan.classify_fixed_locus(w);
    let mut pieces = Vec::new();
    for &p in &shape.pfix {
        let mut h = BTreeMap::new();
        weight_counts(z.at(p), fan.chart(p), w, &mut h);
        pieces.push((Locus::Point(p), h));
    }
    for &l in &shape.lfix {
        let mut h = BTreeMap::new();
        weight_counts(z.at(l.first), fan.chart(l.first), w, &mut h);
        weight_counts(z.at(l.second), fan.chart(l.second), w, &mut h);
        pieces.push((Locus::Line(l), h));
    }
    HilbertMultifunction { pieces }
}

/// A block of equal curvilinear pieces along a line: `multiplicity` pieces
/// of length `length`, of which `at_first` sit at the line's first endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct LineBlock {
    pub length: u32,
    pub multiplicity: u32,
    pub at_first: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LineBlocks {
    pub line: Line,
    pub pi: Partition,
    pub blocks: Vec<LineBlock>,
}

impl LineBlocks {
    /// Pieces of each block located at the endpoint `chart`.
    pub fn count_at(&self, chart: usize) -> Vec<u32> {
        if chart == self.line.first {
            self.blocks.iter().map(|b| b.at_first).collect()
        } else if chart == self.line.second {
            self.blocks
                .iter()
                .map(|b| b.multiplicity - b.at_first)
                .collect()
        } else {
            panic!("chart {chart} is not an endpoint of {}", self.line)
        }
    }
}

/// Curvilinear piece lengths of the staircase at an endpoint of `line`: one
/// piece per monomial of the along-line coordinate, of length the number of
/// transverse powers above it.
pub fn pieces_at(z: &MultiStaircase, line: Line, chart: usize) -> Partition {
    let s = z.at(chart);
    if chart == line.first {
        // transverse coordinate u, along coordinate v
        s.row_lengths()
    } else {
        s.heights().clone()
    }
}

/// Decomposition of a fixed point supported on `line` into curvilinear
/// pieces transverse to it.
pub fn line_blocks(
    fan: &Fan,
    z: &MultiStaircase,
    line: Line,
) -> Result<LineBlocks, StaircaseError> {
    for c in 0..fan.num_charts() {
        if c != line.first && c != line.second && !z.at(c).is_empty() {
            return Err(StaircaseError::UnsupportedSupport {
                point: z.id().to_string(),
                line,
            });
        }
    }
    Ok(line_blocks_local(z, line))
}

/// Like [`line_blocks`], ignoring the staircases away from the line.
pub fn line_blocks_local(z: &MultiStaircase, line: Line) -> LineBlocks {
    let first = pieces_at(z, line, line.first);
    let second = pieces_at(z, line, line.second);
    let mut all: Vec<u32> = first.parts().to_vec();
    all.extend_from_slice(second.parts());
    let pi = Partition::new(all);
    let blocks = pi
        .blocks()
        .into_iter()
        .map(|(length, multiplicity)| LineBlock {
            length,
            multiplicity,
            at_first: first.parts().iter().filter(|&&p| p == length).count() as u32,
        })
        .collect();
    LineBlocks { line, pi, blocks }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, b: i64) -> Character {
        Character::new(a, b)
    }

    fn standard_chart() -> Chart {
        Chart {
            index: 0,
            u: ch(1, 0),
            v: ch(0, 1),
        }
    }

    fn sorted(mut v: Vec<Character>) -> Vec<Character> {
        v.sort();
        v
    }

    fn stair(h: &[u32]) -> Staircase {
        Staircase::from_heights(Partition::new(h.to_vec()))
    }

    #[test]
    fn partitions_of_small_numbers() {
        let p3: Vec<Vec<u32>> = Partition::all(3)
            .iter()
            .map(|p| p.parts().to_vec())
            .collect();
        assert_eq!(p3, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        let counts = partition_counts(10);
        for n in 0..=10 {
            assert_eq!(Partition::all(n).len() as u64, counts[n as usize]);
        }
        assert_eq!(counts[10], 42);
    }

    #[test]
    fn conjugation_is_an_involution() {
        for n in 0..8 {
            for p in Partition::all(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn box_partitions() {
        assert_eq!(Partition::in_box(2, 2).len(), 6);
        assert_eq!(Partition::in_box(0, 3), vec![Partition::empty()]);
        assert_eq!(Partition::in_box(3, 0), vec![Partition::empty()]);
    }

    #[test]
    fn staircase_cells_round_trip() {
        let s = stair(&[3, 1]);
        assert_eq!(Staircase::from_cells(&s.cells()), Some(s.clone()));
        assert!(s.contains(1, 0) && !s.contains(1, 1));
        assert_eq!(Staircase::from_cells(&[(0, 0), (0, 2)]), None);
        assert_eq!(Staircase::from_cells(&[(0, 0), (1, 0), (1, 1)]), None);
        assert_eq!(s.arm(0, 0), 1);
        assert_eq!(s.leg(0, 0), 2);
    }

    #[test]
    fn single_cell_tangent() {
        let t = tangent_characters(&stair(&[1]), &standard_chart());
        assert_eq!(sorted(t), sorted(vec![ch(-1, 0), ch(0, -1)]));
    }

    #[test]
    fn tangent_at_a() {
        // monomials 1, t1, t2
        let a = Staircase::from_cells(&[(0, 0), (1, 0), (0, 1)]).unwrap();
        let t = tangent_characters(&a, &standard_chart());
        assert_eq!(
            sorted(t),
            sorted(vec![
                ch(1, -2),
                ch(-2, 1),
                ch(-1, 0),
                ch(-1, 0),
                ch(0, -1),
                ch(0, -1)
            ])
        );
    }

    #[test]
    fn tangent_at_b() {
        // monomials 1, t1, t1^2
        let b = Staircase::from_cells(&[(0, 0), (1, 0), (2, 0)]).unwrap();
        let t = tangent_characters(&b, &standard_chart());
        assert_eq!(
            sorted(t),
            sorted(vec![
                ch(2, -1),
                ch(1, -1),
                ch(0, -1),
                ch(-3, 0),
                ch(-2, 0),
                ch(-1, 0)
            ])
        );
    }

    #[test]
    fn transpose_and_swap_preserve_tangent() {
        let c = Chart {
            index: 0,
            u: ch(2, 1),
            v: ch(1, 1),
        };
        for n in 0..7 {
            for p in Partition::all(n) {
                let s = Staircase::from_heights(p);
                let t = tangent_characters(&s, &c);
                assert_eq!(t.len(), 2 * n as usize);
                assert!(t.iter().all(|x| !x.is_zero()));
                assert_eq!(
                    sorted(t),
                    sorted(tangent_characters(&s.transpose(), &c.swapped()))
                );
            }
        }
    }

    #[test]
    fn fixed_point_counts() {
        let p2 = Fan::projective_plane();
        assert_eq!(enumerate_fixed_points(&p2, 0).len(), 1);
        assert_eq!(enumerate_fixed_points(&p2, 1).len(), 3);
        assert_eq!(enumerate_fixed_points(&p2, 3).len(), 22);
        assert_eq!(enumerate_fixed_points(&Fan::p1_times_p1(), 2).len(), 14);
        let p = partition_counts(4);
        let expected: u64 = compositions(4, 4)
            .iter()
            .map(|c| c.iter().map(|&n| p[n as usize]).product::<u64>())
            .sum();
        assert_eq!(
            enumerate_fixed_points(&Fan::hirzebruch(1), 4).len() as u64,
            expected
        );
    }

    #[test]
    fn ids_are_unique_and_ordered() {
        let pts = enumerate_fixed_points(&Fan::projective_plane(), 3);
        assert_eq!(pts[0].id(), "P2:d3:[3|∅|∅]");
        assert_eq!(pts[1].id(), "P2:d3:[2,1|∅|∅]");
        let mut ids: Vec<&str> = pts.iter().map(|p| p.id()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 22);
    }

    fn plane_point(stairs: [&[(u32, u32)]; 3]) -> MultiStaircase {
        MultiStaircase::new(
            "P2",
            stairs
                .iter()
                .map(|c| Staircase::from_cells(c).unwrap())
                .collect(),
        )
    }

    // chart 0 of the plane has u = t2, v = t1, so t1 is the cell (0, 1)
    const A0: &[(u32, u32)] = &[(0, 0), (0, 1), (1, 0)];
    const B0: &[(u32, u32)] = &[(0, 0), (0, 1), (0, 2)];
    const E3: &[(u32, u32)] = &[(0, 0), (0, 1)];
    const ONE: &[(u32, u32)] = &[(0, 0)];

    #[test]
    fn multifunctions_on_the_plane() {
        let f = Fan::projective_plane();
        let w = Subtorus::through(1, 0).unwrap();
        let v13 = f.line_between(2, 0).unwrap();
        let a = plane_point([A0, &[], &[]]);
        let h = hilbert_multifunction(&f, &a, w);
        assert_eq!(
            h.at(Locus::Line(v13)).unwrap(),
            &BTreeMap::from([(0, 2), (1, 1)])
        );
        assert!(h.at(Locus::Point(1)).unwrap().is_empty());
        let e = plane_point([ONE, ONE, ONE]);
        let h = hilbert_multifunction(&f, &e, w);
        assert_eq!(h.at(Locus::Line(v13)).unwrap(), &BTreeMap::from([(0, 2)]));
        assert_eq!(h.at(Locus::Point(1)).unwrap(), &BTreeMap::from([(0, 1)]));
        for z in enumerate_fixed_points(&f, 3) {
            for (a, b) in [(1, 0), (0, 1), (1, 1), (1, -1), (2, 1)] {
                assert_eq!(
                    hilbert_multifunction(&f, &z, Subtorus::through(a, b).unwrap()).mass(),
                    3
                );
            }
        }
    }

    #[test]
    fn line_blocks_on_the_plane() {
        let f = Fan::projective_plane();
        let v13 = f.line_between(2, 0).unwrap();
        let a = line_blocks(&f, &plane_point([A0, &[], &[]]), v13).unwrap();
        assert_eq!(a.pi, Partition::new(vec![2, 1]));
        assert_eq!(a.count_at(0), vec![1, 1]);
        let d = line_blocks(&f, &plane_point([E3, &[], ONE]), v13).unwrap();
        assert_eq!(d.pi, Partition::new(vec![2, 1]));
        assert_eq!(d.count_at(0), vec![1, 0]);
        let b = line_blocks(&f, &plane_point([B0, &[], &[]]), v13).unwrap();
        assert_eq!(b.pi, Partition::new(vec![3]));
        assert_eq!(b.count_at(0), vec![1]);
        assert!(matches!(
            line_blocks(&f, &plane_point([ONE, ONE, ONE]), v13),
            Err(StaircaseError::UnsupportedSupport { .. })
        ));
    }
}
