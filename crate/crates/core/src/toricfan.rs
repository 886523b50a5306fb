//! Fans of smooth complete toric surfaces.
//!
//! Rays `ρ_0, …, ρ_{r-1}` are stored in cyclic order. Chart `i` is the cone
//! spanned by `ρ_i` and `ρ_{i+1}`, so charts `i` and `i+1` share the ray
//! `ρ_{i+1}` and the invariant curve through their fixed points is the line
//! with index `i`.

use std::fmt;
use std::path::Path;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::charpoly::Character;

pub type Ray = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FanError {
    #[error("a complete fan needs at least 3 rays, got {0}")]
    TooFewRays(usize),
    #[error("ray {index} = {ray:?} is not primitive")]
    NotPrimitive { index: usize, ray: Ray },
    #[error("rays {a:?} and {b:?} (positions {i}, {j}) have determinant {det}, expected ±1 with the orientation of the first pair")]
    NotSmooth {
        i: usize,
        j: usize,
        a: Ray,
        b: Ray,
        det: i64,
    },
    #[error("rays do not wind around the origin exactly once (winding number {winding})")]
    NotComplete { winding: i64 },
    #[error("malformed fan description: {0}")]
    Parse(String),
    #[error("cannot read fan file {path}: {message}")]
    Io { path: String, message: String },
}

/// Coordinate characters of one affine chart: the chart is the affine plane with coordinates `u, v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Chart {
    pub index: usize,
    /// Dual to the next shared ray `ρ_{i+1}`; cuts out the curve of line `i`.
    pub u: Character,
    /// Dual to the previous shared ray `ρ_i`; cuts out the curve of line `i-1`.
    pub v: Character,
}

impl Chart {
    /// Character of the monomial `u^a v^b`.
    pub fn monomial(&self, a: u32, b: u32) -> Character {
        self.u.scale(a as i64) + self.v.scale(b as i64)
    }

    /// The same chart with the coordinate pair exchanged.
    pub fn swapped(&self) -> Chart {
        Chart {
            index: self.index,
            u: self.v,
            v: self.u,
        }
    }
}

/// Invariant curve joining the fixed points of charts `first` and
/// `first + 1 (mod r)`; it is `V(ρ_{first+1})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Line {
    pub first: usize,
    pub second: usize,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V({},{})", self.first, self.second)
    }
}

/// One-dimensional subtorus given by a primitive cocharacter, normalized so
/// the first nonzero coordinate is positive.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subtorus {
    w: (i64, i64),
}

impl Subtorus {
    /// Canonical subtorus through a nonzero integer vector.
    pub fn through(a: i64, b: i64) -> Option<Subtorus> {
        if a == 0 && b == 0 {
            return None;
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / g, b / g);
        if a < 0 || (a == 0 && b < 0) {
            a = -a;
            b = -b;
        }
        Some(Subtorus { w: (a, b) })
    }

    pub fn w(&self) -> (i64, i64) {
        self.w
    }

    /// Weight of `chi` under this subtorus.
    pub fn weight(&self, chi: Character) -> i64 {
        chi.pair(self.w)
    }

    pub fn annihilates(&self, chi: Character) -> bool {
        self.weight(chi) == 0
    }

    /// Canonical subtorus annihilating a nonzero character.
    pub fn annihilator_of(chi: Character) -> Option<Subtorus> {
        Subtorus::through(chi.c2, -chi.c1)
    }
}

impl fmt::Display for Subtorus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.w.0, self.w.1)
    }
}

/// Connected components of the fixed locus of a subtorus on the surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedLocusShape {
    /// Charts whose fixed point is isolated.
    pub pfix: Vec<usize>,
    /// Pointwise fixed invariant curves.
    pub lfix: Vec<Line>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct FanFile {
    rays: Vec<[i64; 2]>,
    #[serde(default)]
    name: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fan {
    name: String,
    rays: Vec<Ray>,
    charts: Vec<Chart>,
}

fn det(a: Ray, b: Ray) -> i64 {
    a.0 * b.1 - a.1 * b.0
}

impl Fan {
    /// Validates the rays and derives charts and invariant curves.
    pub fn new(rays: &[Ray]) -> Result<Fan, FanError> {
        Fan::named("X", rays)
    }

    pub fn named(name: &str, rays: &[Ray]) -> Result<Fan, FanError> {
        let r = rays.len();
        if r < 3 {
            return Err(FanError::TooFewRays(r));
        }
        for (index, &ray) in rays.iter().enumerate() {
            if ray.0.gcd(&ray.1) != 1 {
                return Err(FanError::NotPrimitive { index, ray });
            }
        }
        let orientation = det(rays[0], rays[1]);
        for i in 0..r {
            let j = (i + 1) % r;
            let d = det(rays[i], rays[j]);
            if d.abs() != 1 || d != orientation {
                return Err(FanError::NotSmooth {
                    i,
                    j,
                    a: rays[i],
                    b: rays[j],
                    det: d,
                });
            }
        }
        // Count the consecutive sectors [ρ_i, ρ_{i+1}) containing the positive
        // x-axis; each step turns by less than π, so this is the winding number.
        let winding = (0..r)
            .filter(|&i| {
                let (a, b) = (rays[i], rays[(i + 1) % r]);
                if orientation > 0 {
                    b.1 > 0 && a.1 <= 0
                } else {
                    b.1 < 0 && a.1 >= 0
                }
            })
            .count() as i64;
        if winding != 1 {
            return Err(FanError::NotComplete { winding });
        }
        let charts = (0..r)
            .map(|i| {
                let a = rays[i];
                let b = rays[(i + 1) % r];
                let d = orientation;
                // rows of the inverse of [a b]: u pairs to (0, 1), v to (1, 0)
                let u = Character::new(-a.1 * d, a.0 * d);
                let v = Character::new(b.1 * d, -b.0 * d);
                Chart { index: i, u, v }
            })
            .collect();
        Ok(Fan {
            name: name.to_string(),
            rays: rays.to_vec(),
            charts,
        })
    }

    pub fn from_json(text: &str) -> Result<Fan, FanError> {
        let file: FanFile =
            serde_json::from_str(text).map_err(|e| FanError::Parse(e.to_string()))?;
        let rays: Vec<Ray> = file.rays.iter().map(|r| (r[0], r[1])).collect();
        Fan::named(file.name.as_deref().unwrap_or("X"), &rays)
    }

    pub fn from_path(path: &Path) -> Result<Fan, FanError> {
        let text = std::fs::read_to_string(path).map_err(|e| FanError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Fan::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        let file = FanFile {
            rays: self.rays.iter().map(|r| [r.0, r.1]).collect(),
            name: Some(self.name.clone()),
        };
        serde_json::to_string(&file).expect("fan serializes")
    }

    pub fn projective_plane() -> Fan {
        Fan::named("P2", &[(1, 0), (0, 1), (-1, -1)]).unwrap()
    }

    pub fn p1_times_p1() -> Fan {
        Fan::named("P1xP1", &[(1, 0), (0, 1), (-1, 0), (0, -1)]).unwrap()
    }

    /// Hirzebruch surface `F_a`.
    pub fn hirzebruch(a: i64) -> Fan {
        Fan::named(&format!("F{a}"), &[(1, 0), (0, 1), (-1, a), (0, -1)]).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn num_charts(&self) -> usize {
        self.rays.len()
    }

    pub fn charts(&self) -> &[Chart] {
        &self.charts
    }

    pub fn chart(&self, i: usize) -> &Chart {
        &self.charts[i]
    }

    /// `(u_i, v_i)` of chart `i`.
    pub fn chart_basis(&self, i: usize) -> (Character, Character) {
        let c = &self.charts[i];
        (c.u, c.v)
    }

    pub fn lines(&self) -> Vec<Line> {
        (0..self.num_charts()).map(|i| self.line(i)).collect()
    }

    pub fn line(&self, first: usize) -> Line {
        Line {
            first,
            second: (first + 1) % self.num_charts(),
        }
    }

    /// The line joining charts `a` and `b`, if they are adjacent.
    pub fn line_between(&self, a: usize, b: usize) -> Option<Line> {
        let r = self.num_charts();
        if (a + 1) % r == b {
            Some(self.line(a))
        } else if (b + 1) % r == a {
            Some(self.line(b))
        } else {
            None
        }
    }

    /// Ray whose orbit closure is the curve of `line`.
    pub fn shared_ray(&self, line: Line) -> Ray {
        self.rays[line.second]
    }

    /// Character of the coordinate along `line` in the chart `at`.
    pub fn line_character(&self, line: Line, at: usize) -> Character {
        if at == line.first {
            self.charts[at].v
        } else if at == line.second {
            self.charts[at].u
        } else {
            panic!("chart {at} is not an endpoint of {line}")
        }
    }

    /// Character of the coordinate cutting out `line` in the chart `at`.
    pub fn transverse_character(&self, line: Line, at: usize) -> Character {
        if at == line.first {
            self.charts[at].u
        } else if at == line.second {
            self.charts[at].v
        } else {
            panic!("chart {at} is not an endpoint of {line}")
        }
    }

    pub fn classify_fixed_locus(&self, w: Subtorus) -> FixedLocusShape {
        let (a, b) = w.w();
        let lfix: Vec<Line> = self
            .lines()
            .into_iter()
            .filter(|&l| {
                let ray = self.shared_ray(l);
                ray == (a, b) || ray == (-a, -b)
            })
            .collect();
        let pfix = (0..self.num_charts())
            .filter(|&i| !lfix.iter().any(|l| l.first == i || l.second == i))
            .collect();
        FixedLocusShape { pfix, lfix }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(a: i64, b: i64) -> Character {
        Character::new(a, b)
    }

    fn as_set(p: (Character, Character)) -> Vec<Character> {
        let mut v = vec![p.0, p.1];
        v.sort();
        v
    }

    #[test]
    fn projective_plane_charts() {
        let f = Fan::projective_plane();
        assert_eq!(as_set(f.chart_basis(0)), as_set((ch(1, 0), ch(0, 1))));
        assert_eq!(as_set(f.chart_basis(1)), as_set((ch(-1, 0), ch(-1, 1))));
        assert_eq!(as_set(f.chart_basis(2)), as_set((ch(0, -1), ch(1, -1))));
    }

    #[test]
    fn charts_are_dual_bases() {
        for f in [
            Fan::projective_plane(),
            Fan::p1_times_p1(),
            Fan::hirzebruch(1),
            Fan::hirzebruch(3),
        ] {
            let r = f.num_charts();
            for i in 0..r {
                let c = f.chart(i);
                let (a, b) = (f.rays()[i], f.rays()[(i + 1) % r]);
                assert_eq!((c.u.pair(a), c.u.pair(b)), (0, 1));
                assert_eq!((c.v.pair(a), c.v.pair(b)), (1, 0));
                assert_eq!((c.u.c1 * c.v.c2 - c.u.c2 * c.v.c1).abs(), 1);
            }
        }
    }

    #[test]
    fn line_characters_on_the_plane() {
        let f = Fan::projective_plane();
        // V13 joins p3 (chart 2) and p1 (chart 0)
        let v13 = f.line_between(0, 2).unwrap();
        assert_eq!(f.line_character(v13, 0), ch(0, 1));
        assert_eq!(f.line_character(v13, 2), ch(0, -1));
        let v12 = f.line_between(0, 1).unwrap();
        assert_eq!(f.line_character(v12, 0), ch(1, 0));
    }

    #[test]
    fn along_characters_are_opposite() {
        for f in [
            Fan::projective_plane(),
            Fan::p1_times_p1(),
            Fan::hirzebruch(2),
        ] {
            for l in f.lines() {
                assert_eq!(f.line_character(l, l.first), -f.line_character(l, l.second));
                let ray = f.shared_ray(l);
                assert_eq!(f.line_character(l, l.first).pair(ray), 0);
                assert_eq!(f.transverse_character(l, l.first).pair(ray), 1);
            }
        }
    }

    #[test]
    fn hirzebruch_one_is_smooth() {
        assert!(Fan::new(&[(1, 0), (0, 1), (-1, 1), (0, -1)]).is_ok());
    }

    #[test]
    fn clockwise_order_is_accepted() {
        let f = Fan::new(&[(1, 0), (-1, -1), (0, 1)]).unwrap();
        for c in f.charts() {
            assert_eq!((c.u.c1 * c.v.c2 - c.u.c2 * c.v.c1).abs(), 1);
        }
    }

    #[test]
    fn validation_errors() {
        assert!(matches!(
            Fan::new(&[(1, 0), (1, 2), (-1, -1), (0, -1)]),
            Err(FanError::NotSmooth {
                i: 0,
                j: 1,
                det: 2,
                ..
            })
        ));
        assert!(matches!(
            Fan::new(&[(2, 0), (0, 1), (-1, -1)]),
            Err(FanError::NotPrimitive { index: 0, .. })
        ));
        assert!(matches!(
            Fan::new(&[(1, 0), (0, 1)]),
            Err(FanError::TooFewRays(2))
        ));
        // winds twice: six rays of the plane fan repeated
        assert!(matches!(
            Fan::new(&[(1, 0), (0, 1), (-1, -1), (1, 0), (0, 1), (-1, -1)]),
            Err(FanError::NotComplete { winding: 2 })
        ));
        assert!(matches!(
            Fan::new(&[(1, 0), (0, 1), (-1, 0)]),
            Err(FanError::NotSmooth { .. })
        ));
    }

    #[test]
    fn fixed_locus_shapes() {
        let f = Fan::projective_plane();
        let s = f.classify_fixed_locus(Subtorus::through(1, 0).unwrap());
        assert_eq!(s.lfix, vec![f.line_between(2, 0).unwrap()]);
        assert_eq!(s.pfix, vec![1]);
        // (1,1) is the negative of the ray (-1,-1): the curve through p2, p3 is fixed
        let s = f.classify_fixed_locus(Subtorus::through(1, 1).unwrap());
        assert_eq!(s.lfix, vec![f.line_between(1, 2).unwrap()]);
        assert_eq!(s.pfix, vec![0]);
        let s = f.classify_fixed_locus(Subtorus::through(1, -1).unwrap());
        assert!(s.lfix.is_empty());
        assert_eq!(s.pfix, vec![0, 1, 2]);
        let s = f.classify_fixed_locus(Subtorus::through(0, 1).unwrap());
        assert_eq!(s.lfix, vec![f.line_between(0, 1).unwrap()]);
        assert_eq!(s.pfix, vec![2]);
    }

    #[test]
    fn isolated_points_have_nonzero_weights() {
        let f = Fan::hirzebruch(1);
        for a in -3..=3 {
            for b in -3..=3 {
                let Some(w) = Subtorus::through(a, b) else {
                    continue;
                };
                let s = f.classify_fixed_locus(w);
                assert_eq!(s.pfix.len() + 2 * s.lfix.len(), f.num_charts());
                for &p in &s.pfix {
                    assert_ne!(w.weight(f.chart(p).u), 0);
                    assert_ne!(w.weight(f.chart(p).v), 0);
                }
                for &l in &s.lfix {
                    assert_eq!(w.weight(f.line_character(l, l.first)), 0);
                    assert_ne!(w.weight(f.transverse_character(l, l.first)), 0);
                }
            }
        }
    }

    #[test]
    fn subtorus_canonical_form() {
        assert_eq!(Subtorus::through(-2, 4).unwrap().w(), (1, -2));
        assert_eq!(Subtorus::through(0, -3).unwrap().w(), (0, 1));
        assert_eq!(Subtorus::through(0, 0), None);
        assert_eq!(Subtorus::annihilator_of(ch(1, -2)).unwrap().w(), (2, 1));
    }

    #[test]
    fn json_round_trip() {
        let f = Fan::from_json(r#"{"rays": [[1,0],[0,1],[-1,-1]], "name": "P2"}"#).unwrap();
        assert_eq!(f, Fan::projective_plane());
        assert_eq!(Fan::from_json(&f.to_json()).unwrap(), f);
        assert!(matches!(
            Fan::from_json("{\"rays\": 3}"),
            Err(FanError::Parse(_))
        ));
    }
}
