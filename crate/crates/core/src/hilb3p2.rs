//! The worked example `Hilb^3(P^2)`: the five orbit representatives under
//! the symmetric group permuting the homogeneous coordinates, their relevance
//! array, and the fifteen families of congruence relations presenting
//! `A_T^*(Hilb^3 P^2)` up to that symmetry.
//!
//! Subtorus labels `T_ab` are read as the cocharacter `(a, b)`.

use std::collections::BTreeMap;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::charpoly::{monomials_of_degree, q, Character, GradedSubspace, PointTuple, SPoly, Q};
use crate::chowring::{EquivariantModel, Relation};
use crate::staircases::{MultiStaircase, Staircase};
use crate::toricfan::{Fan, Subtorus};

/// Permutations of the three fixed points `p1, p2, p3` (charts 0, 1, 2),
/// named by their cycle: `perm[j]` is the image of chart `j`.
pub const PERMUTATIONS: [(&str, [usize; 3]); 6] = [
    ("", [0, 1, 2]),
    ("12", [1, 0, 2]),
    ("13", [2, 1, 0]),
    ("23", [0, 2, 1]),
    ("123", [1, 2, 0]),
    ("132", [2, 0, 1]),
];

/// Image of a character under the automorphism of `T` induced by permuting
/// the homogeneous coordinates `x0, x1, x2`; the character `(c1, c2)` is the
/// monomial `x0^(-c1-c2) x1^c1 x2^c2`.
pub fn theta(perm: [usize; 3], chi: Character) -> Character {
    let e = [-chi.c1 - chi.c2, chi.c1, chi.c2];
    let mut image = [0i64; 3];
    for j in 0..3 {
        image[perm[j]] = e[j];
    }
    Character::new(image[1], image[2])
}

/// Exponents of `chi` in the chart basis `(u, v)`.
fn coordinates_in(u: Character, v: Character, chi: Character) -> (i64, i64) {
    let det = u.c1 * v.c2 - u.c2 * v.c1;
    let a = (chi.c1 * v.c2 - chi.c2 * v.c1) * det;
    let b = (u.c1 * chi.c2 - u.c2 * chi.c1) * det;
    (a, b)
}

/// Image of a fixed point of `Hilb^d(P^2)` under a coordinate permutation.
pub fn act(fan: &Fan, perm: [usize; 3], z: &MultiStaircase) -> MultiStaircase {
    let mut stairs = vec![Staircase::empty(); 3];
    for (j, s) in z.stairs().iter().enumerate() {
        let target = fan.chart(perm[j]);
        let cells: Vec<(u32, u32)> = s
            .cells()
            .into_iter()
            .map(|(a, b)| {
                let chi = theta(perm, fan.chart(j).monomial(a, b));
                let (x, y) = coordinates_in(target.u, target.v, chi);
                assert!(x >= 0 && y >= 0, "permutation does not preserve the charts");
                (x as u32, y as u32)
            })
            .collect();
        stairs[perm[j]] =
            Staircase::from_cells(&cells).expect("image of a staircase is a staircase");
    }
    MultiStaircase::new(fan.name(), stairs)
}

/// Staircase at chart 0 from monomials `t1^i t2^j`.
fn chart0(fan: &Fan, monomials: &[(i64, i64)]) -> Staircase {
    let c = fan.chart(0);
    let cells: Vec<(u32, u32)> = monomials
        .iter()
        .map(|&(i, j)| {
            let (a, b) = coordinates_in(c.u, c.v, Character::new(i, j));
            (a as u32, b as u32)
        })
        .collect();
    Staircase::from_cells(&cells).unwrap()
}

/// The orbit representatives `A, B, C, D, E`.
pub fn representatives(fan: &Fan) -> Vec<(char, MultiStaircase)> {
    let one = Staircase::from_cells(&[(0, 0)]).unwrap();
    let none = Staircase::empty();
    let e1 = chart0(fan, &[(0, 0), (1, 0), (0, 1)]);
    let e2 = chart0(fan, &[(0, 0), (1, 0), (2, 0)]);
    let e3 = chart0(fan, &[(0, 0), (1, 0)]);
    let rows = [
        ('A', [e1, none.clone(), none.clone()]),
        ('B', [e2, none.clone(), none.clone()]),
        ('C', [e3.clone(), one.clone(), none.clone()]),
        ('D', [e3, none, one.clone()]),
        ('E', [one.clone(), one.clone(), one]),
    ];
    rows.into_iter()
        .map(|(c, s)| (c, MultiStaircase::new(fan.name(), s.to_vec())))
        .collect()
}

/// Point labels `a, a12, …, e` to fixed point indices of `model`. Labels of
/// one orbit may coincide (for instance `a23 = a`).
pub fn labels(model: &EquivariantModel) -> BTreeMap<String, usize> {
    let fan = model.fan();
    let mut out = BTreeMap::new();
    for (c, z) in representatives(fan) {
        for (name, perm) in PERMUTATIONS {
            let image = act(fan, perm, &z);
            let idx = model
                .fixed_points()
                .position(&image)
                .expect("image of a fixed point is a fixed point");
            out.insert(format!("{}{}", c.to_ascii_lowercase(), name), idx);
        }
    }
    out
}

/// `(cocharacter, invariant tangent dimension)` pairs at one point.
pub type RelevanceRow = Vec<((i64, i64), usize)>;

/// Relevant subtori and invariant tangent dimensions under each
/// representative, as listed for the example.
pub fn expected_relevance() -> Vec<(char, RelevanceRow)> {
    vec![
        (
            'A',
            vec![((1, 0), 2), ((0, 1), 2), ((2, 1), 1), ((1, 2), 1)],
        ),
        (
            'B',
            vec![((1, 0), 1), ((0, 1), 3), ((1, 1), 1), ((1, 2), 1)],
        ),
        ('C', vec![((1, 0), 1), ((0, 1), 3), ((1, 1), 2)]),
        ('D', vec![((1, 0), 2), ((0, 1), 2), ((1, 1), 2)]),
        ('E', vec![((1, 0), 2), ((0, 1), 2), ((1, 1), 2)]),
    ]
}

/// A relation `Σ c_X x ≡ 0` modulo a product of linear forms, on labels.
#[derive(Debug, Clone)]
pub struct LabelledRelation {
    pub number: usize,
    pub terms: Vec<(&'static str, i64)>,
    pub modulus: Vec<Character>,
}

impl LabelledRelation {
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, (label, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let mag = c.abs();
            if mag == 1 {
                s.push_str(&format!("{sign}{label}"));
            } else {
                s.push_str(&format!("{sign}{mag}{label}"));
            }
        }
        let modulus = crate::charpoly::product_of_forms(&self.modulus);
        format!("{s} ≡ 0 ({modulus})")
    }
}

/// The fifteen relation families. Family 8 is `3b - c + c12 - 3b12 ≡ 0 (t1)`.
pub fn relation_families() -> Vec<LabelledRelation> {
    let t1 = Character::new(1, 0);
    let t2 = Character::new(0, 1);
    let t1_minus_t2 = Character::new(1, -1);
    type Row = (Vec<(&'static str, i64)>, Vec<Character>);
    let rows: Vec<Row> = vec![
        (
            vec![("a", 1), ("a13", 1), ("d", -1), ("d13", -1)],
            vec![t2, t2],
        ),
        (vec![("d", 1), ("d13", -1)], vec![t2]),
        (vec![("a", 1), ("a13", -1)], vec![t2]),
        (vec![("a", 1), ("b", -1)], vec![Character::new(2, -1)]),
        (vec![("b", 1), ("b13", -1)], vec![t2]),
        (
            vec![("b", -1), ("c", 3), ("c12", -3), ("b12", 1)],
            vec![t1, t1, t1],
        ),
        (
            vec![("b", -1), ("c", 1), ("c12", 1), ("b12", -1)],
            vec![t1, t1],
        ),
        (vec![("b", 3), ("c", -1), ("c12", 1), ("b12", -3)], vec![t1]),
        (vec![("b", 1), ("b23", -1)], vec![Character::new(-1, 1)]),
        (
            vec![("c", 1), ("d", -1), ("c23", 1), ("d23", -1)],
            vec![t1_minus_t2, t1_minus_t2],
        ),
        (
            vec![("c", 1), ("d", 1), ("c23", -1), ("d23", -1)],
            vec![t1_minus_t2],
        ),
        (vec![("c23", 1), ("d23", -1)], vec![t1_minus_t2]),
        (vec![("c", 1), ("c13", -1)], vec![t2]),
        (vec![("d", 1), ("e", -2), ("d12", 1)], vec![t1, t1]),
        (vec![("d", 1), ("d12", -1)], vec![t1]),
    ];
    rows.into_iter()
        .enumerate()
        .map(|(k, (terms, modulus))| LabelledRelation {
            number: k + 1,
            terms,
            modulus,
        })
        .collect()
}

/// `σ.R` on fixed point indices: the coefficient of `X` moves to `σ.X` and
/// the modulus is transformed by `θ_σ`. Coefficients landing on one point add.
pub fn apply_to_relation(
    model: &EquivariantModel,
    labels: &BTreeMap<String, usize>,
    perm: [usize; 3],
    r: &LabelledRelation,
) -> Relation {
    let fan = model.fan();
    let mut coeffs: BTreeMap<usize, i64> = BTreeMap::new();
    for (label, c) in &r.terms {
        let z = model.fixed_points().point(labels[*label]).clone();
        let image = model.fixed_points().position(&act(fan, perm, &z)).unwrap();
        *coeffs.entry(image).or_insert(0) += c;
    }
    coeffs.retain(|_, c| *c != 0);
    Relation {
        points: coeffs.keys().copied().collect(),
        coefficients: coeffs.values().map(|&c| SPoly::constant(q(c))).collect(),
        modulus_factors: r.modulus.iter().map(|&m| theta(perm, m)).collect(),
    }
}

/// Every relation family under every permutation.
pub fn full_relation_system(model: &EquivariantModel) -> Vec<(usize, &'static str, Relation)> {
    let labels = labels(model);
    let mut out = Vec::new();
    for r in relation_families() {
        for (name, perm) in PERMUTATIONS {
            out.push((r.number, name, apply_to_relation(model, &labels, perm, &r)));
        }
    }
    out
}

/// Solutions in degree `k` of the listed relation system.
pub fn relation_solution_space(
    model: &EquivariantModel,
    system: &[(usize, &str, Relation)],
    k: u32,
) -> GradedSubspace {
    let eqs: Vec<_> = system
        .iter()
        .flat_map(|(_, _, r)| model.relation_equations(r, k))
        .collect();
    GradedSubspace::from_equations(model.npoints(), k, eqs.iter())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrayCheck {
    pub point: char,
    pub expected: RelevanceRow,
    pub computed: RelevanceRow,
}

impl ArrayCheck {
    pub fn passed(&self) -> bool {
        self.expected == self.computed
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyCheck {
    pub number: usize,
    pub text: String,
    /// `(permutation, degree, basis index)` of generators violating an image.
    pub failures: Vec<(String, u32, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeCheck {
    pub degree: u32,
    pub expected_dim: usize,
    pub module_dim: usize,
    pub relation_dim: usize,
    pub module_in_relations: bool,
    pub relations_in_module: bool,
}

impl DegreeCheck {
    pub fn passed(&self) -> bool {
        self.module_dim == self.expected_dim
            && self.relation_dim == self.expected_dim
            && self.module_in_relations
            && self.relations_in_module
    }
}

#[derive(Debug, Clone)]
pub struct Verification {
    pub label_map: String,
    pub array: Vec<ArrayCheck>,
    pub families: Vec<FamilyCheck>,
    pub degrees: Vec<DegreeCheck>,
    /// Random module elements found violating some listed relation.
    pub sample_failures: usize,
    pub samples: usize,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.array.iter().all(ArrayCheck::passed)
            && self.families.iter().all(|f| f.failures.is_empty())
            && self.degrees.iter().all(DegreeCheck::passed)
            && self.sample_failures == 0
    }
}

/// Freeness count `Σ_j b_{2j} (k - j + 1)`.
pub fn free_rank(betti: &[usize], k: u32) -> usize {
    betti
        .iter()
        .enumerate()
        .filter(|(j, _)| *j as u32 <= k)
        .map(|(j, b)| b * (k as usize - j + 1))
        .sum()
}

/// Runs every check of the example on a model of `Hilb^3(P^2)`; `seed`
/// drives the random membership samples.
pub fn verify(
    model: &EquivariantModel,
    max_degree: u32,
    seed: u64,
    samples: usize,
) -> Verification {
    let set = model.fixed_points();
    let reps = representatives(model.fan());
    let array = expected_relevance()
        .into_iter()
        .map(|(c, expected)| {
            let z = &reps.iter().find(|(x, _)| *x == c).unwrap().1;
            let i = set.position(z).unwrap();
            let rel = set.relevance_at(i);
            let computed = expected
                .iter()
                .map(|(w, _)| {
                    let s = Subtorus::through(w.0, w.1).unwrap();
                    (*w, rel.get(&s).copied().unwrap_or(0))
                })
                .chain(
                    rel.iter()
                        .filter(|(s, _)| {
                            !expected
                                .iter()
                                .any(|(w, _)| Subtorus::through(w.0, w.1) == Some(**s))
                        })
                        .map(|(s, n)| (s.w(), *n)),
                )
                .collect();
            ArrayCheck {
                point: c,
                expected,
                computed,
            }
        })
        .collect();

    let labels = labels(model);
    let slices: Vec<GradedSubspace> = (0..=max_degree)
        .map(|k| model.equivariant_graded_basis(k))
        .collect();
    let bases: Vec<Vec<PointTuple>> = slices.iter().map(GradedSubspace::basis).collect();
    let families = relation_families()
        .iter()
        .map(|r| {
            let mut failures = Vec::new();
            for (name, perm) in PERMUTATIONS {
                let rel = apply_to_relation(model, &labels, perm, r);
                for (k, basis) in bases.iter().enumerate() {
                    for (b, t) in basis.iter().enumerate() {
                        if !rel.holds(t) {
                            failures.push((name.to_string(), k as u32, b));
                        }
                    }
                }
            }
            FamilyCheck {
                number: r.number,
                text: r.render(),
                failures,
            }
        })
        .collect();

    let system = full_relation_system(model);
    let betti = crate::chowring::betti_bb(set);
    let degrees = (0..=max_degree)
        .map(|k| {
            let module = &slices[k as usize];
            let sol = relation_solution_space(model, &system, k);
            DegreeCheck {
                degree: k,
                expected_dim: free_rank(&betti, k),
                module_dim: module.dim(),
                relation_dim: sol.dim(),
                module_in_relations: module.is_subspace_of(&sol),
                relations_in_module: sol.is_subspace_of(module),
            }
        })
        .collect();

    // random S_1-combinations of basis elements, checked against the listed system
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sample_failures = 0;
    for _ in 0..samples {
        let k = rng.gen_range(0..max_degree.max(1));
        let mut alpha: PointTuple = vec![SPoly::zero(); model.npoints()];
        for t in &bases[k as usize] {
            for m in monomials_of_degree(1) {
                let c = Q::from_integer(rng.gen_range(-3i64..=3).into());
                if c.is_zero() {
                    continue;
                }
                for (x, y) in alpha.iter_mut().zip(t) {
                    *x = &*x + &(&m * y).scale(&c);
                }
            }
        }
        if system.iter().any(|(_, _, r)| !r.holds(&alpha)) {
            sample_failures += 1;
        }
    }

    Verification {
        label_map:
            "T_ab = cocharacter (a,b); X_ij = image of X under the transposition of p_i and p_j"
                .to_string(),
        array,
        families,
        degrees,
        sample_failures,
        samples,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_on_transpositions() {
        let chi = Character::new(2, 5);
        assert_eq!(theta([2, 1, 0], chi), Character::new(2, -7));
        assert_eq!(theta([0, 2, 1], chi), Character::new(5, 2));
        for (_, p) in PERMUTATIONS {
            assert_eq!(theta(p, Character::ZERO), Character::ZERO);
        }
    }

    #[test]
    fn orbits_cover_all_points() {
        let model = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
        let l = labels(&model);
        let mut pts: Vec<usize> = l.values().copied().collect();
        pts.sort();
        pts.dedup();
        assert_eq!(pts.len(), 22);
        assert_eq!(l["a23"], l["a"]);
        assert_eq!(l["e12"], l["e"]);
    }

    #[test]
    fn relation_rendering() {
        let r = &relation_families()[0];
        assert_eq!(r.render(), "a+a13-d-d13 ≡ 0 (t2^2)");
    }
}
