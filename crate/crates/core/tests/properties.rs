//! Property tests of the algebraic invariants.

use proptest::prelude::*;

use equichow::charpoly::{
    divide_exact, divide_linear, linear_form, product_of_forms, q, Character, GradedSubspace,
    PointTuple, SPoly,
};
use equichow::chowring::{component_generators, congruence_system, EquivariantModel, GeneratorSet};
use equichow::fixedloci::FixedComponent;
use equichow::hilb3p2::{act, theta, PERMUTATIONS};
use equichow::staircases::{tangent_characters, Partition, Staircase};
use equichow::toricfan::Fan;

fn homogeneous(k: u32) -> impl Strategy<Value = SPoly> {
    prop::collection::vec(-4i64..=4, k as usize + 1).prop_map(move |cs| {
        SPoly::from_terms(
            cs.into_iter()
                .enumerate()
                .map(|(j, c)| ((k - j as u32, j as u32), q(c))),
        )
    })
}

fn character() -> impl Strategy<Value = Character> {
    (-3i64..=3, -3i64..=3)
        .prop_filter("nonzero", |(a, b)| *a != 0 || *b != 0)
        .prop_map(|(a, b)| Character::new(a, b))
}

fn subspace(npoints: usize, k: u32) -> impl Strategy<Value = GradedSubspace> {
    let width = npoints * (k as usize + 1);
    prop::collection::vec(prop::collection::vec(-2i64..=2, width), 0..width).prop_map(move |rows| {
        let tuples: Vec<PointTuple> = rows
            .iter()
            .map(|r| {
                r.chunks(k as usize + 1)
                    .map(|c| {
                        SPoly::from_terms(
                            c.iter()
                                .enumerate()
                                .map(|(j, &x)| ((k - j as u32, j as u32), q(x))),
                        )
                    })
                    .collect()
            })
            .collect();
        GradedSubspace::from_tuples(npoints, k, &tuples)
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..=4, 0..5).prop_map(Partition::new)
}

proptest! {
    #[test]
    fn division_inverts_multiplication(p in (0u32..4).prop_flat_map(homogeneous), chi in character(), extra in prop::collection::vec(character(), 0..3)) {
        prop_assert_eq!(divide_linear(&(&p * &linear_form(chi)), chi).unwrap(), p.clone());
        let n = &p * &product_of_forms(&extra);
        prop_assert_eq!(divide_exact(&n, &extra).unwrap(), p);
    }

    #[test]
    fn intersection_laws(a in subspace(2, 1), b in subspace(2, 1), c in subspace(2, 1)) {
        let ab = a.intersect(&b);
        prop_assert_eq!(&ab, &b.intersect(&a));
        prop_assert!(ab.is_subspace_of(&a) && ab.is_subspace_of(&b));
        prop_assert_eq!(ab.intersect(&c), a.intersect(&b.intersect(&c)));
        let s = a.sum(&b);
        prop_assert!(a.is_subspace_of(&s) && b.is_subspace_of(&s));
        prop_assert_eq!(a.intersect(&GradedSubspace::full(2, 1)), a.clone());
        prop_assert_eq!(ab.dim() + s.dim(), a.dim() + b.dim());
    }

    #[test]
    fn tangent_space_has_twice_the_length(p in partition(), chart in 0usize..3) {
        let fan = Fan::projective_plane();
        let s = Staircase::from_heights(p);
        let t = tangent_characters(&s, fan.chart(chart));
        prop_assert_eq!(t.len(), 2 * s.size() as usize);
        prop_assert!(t.iter().all(|c| !c.is_zero()));
        prop_assert_eq!(s.transpose().transpose(), s);
    }

    #[test]
    fn theta_is_an_action(i in 0usize..6, j in 0usize..6, a in -5i64..5, b in -5i64..5) {
        let (p, r) = (PERMUTATIONS[i].1, PERMUTATIONS[j].1);
        let composed = [p[r[0]], p[r[1]], p[r[2]]];
        let chi = Character::new(a, b);
        prop_assert_eq!(theta(composed, chi), theta(p, theta(r, chi)));
    }
}

/// Congruence solution space of one component's system in degree `k`.
fn component_solutions(
    model: &EquivariantModel,
    c: &FixedComponent,
    g: &GeneratorSet,
    k: u32,
) -> GradedSubspace {
    let sys = congruence_system(c, g);
    let eqs: Vec<_> = sys
        .relations
        .iter()
        .flat_map(|r| model.relation_equations(r, k))
        .collect();
    GradedSubspace::from_equations(model.npoints(), k, eqs.iter())
}

#[test]
fn congruences_survive_a_sign_flip_at_one_point() {
    for d in [2, 3] {
        let model = EquivariantModel::new(&Fan::projective_plane(), d).unwrap();
        for s in model.subtori() {
            for (c, g) in s.components.iter().zip(&s.generators) {
                for p in 0..c.len() {
                    let mut flipped = c.clone();
                    flipped.euler[p] = -&flipped.euler[p];
                    let mut h = g.clone();
                    for gen in &mut h.generators {
                        gen.values[p] = -&gen.values[p];
                    }
                    for k in 0..=3 {
                        assert_eq!(
                            component_solutions(&model, c, g, k),
                            component_solutions(&model, &flipped, &h, k),
                            "d={d} w={:?} point {p} degree {k}",
                            s.subtorus.w()
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn generators_satisfy_their_own_congruences() {
    let model = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
    let n = model.npoints();
    for s in model.subtori() {
        for (c, g) in s.components.iter().zip(&s.generators) {
            let regenerated = component_generators(model.fan(), c).unwrap();
            assert_eq!(regenerated.generators, g.generators);
            let sys = congruence_system(c, g);
            for gen in &g.generators {
                let mut t = vec![SPoly::zero(); n];
                for (&p, v) in c.points.iter().zip(&gen.values) {
                    t[p] = v.clone();
                }
                assert!(
                    sys.relations.iter().all(|r| r.holds(&t)),
                    "w={:?}",
                    s.subtorus.w()
                );
            }
        }
    }
}

#[test]
fn congruences_and_pairings_agree() {
    use rand::{Rng, SeedableRng};
    let model = EquivariantModel::new(&Fan::projective_plane(), 2).unwrap();
    let n = model.npoints();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let mut members = 0;
    for trial in 0..200 {
        let k = rng.gen_range(0..=3u32);
        let basis = model.equivariant_graded_basis(k).basis();
        let mut alpha: PointTuple = vec![SPoly::zero(); n];
        for t in &basis {
            let c = q(rng.gen_range(-2..=2));
            for (a, b) in alpha.iter_mut().zip(t) {
                *a = &*a + &b.scale(&c);
            }
        }
        if trial % 2 == 1 {
            let p = rng.gen_range(0..n);
            let j = rng.gen_range(0..=k);
            alpha[p] = &alpha[p] + &SPoly::monomial(q(1), (k - j, j));
        }
        let by_congruence = model.membership(&alpha).is_ok();
        assert_eq!(
            by_congruence,
            model.membership_by_pairing(&alpha).is_ok(),
            "trial {trial}"
        );
        assert_eq!(
            by_congruence,
            model.equivariant_graded_basis(k).contains(&alpha),
            "trial {trial}"
        );
        members += by_congruence as usize;
    }
    assert!((100..200).contains(&members));
}

#[test]
fn permutations_preserve_the_fixed_points() {
    let model = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
    let set = model.fixed_points();
    for (_, p) in PERMUTATIONS {
        let mut image: Vec<usize> = set
            .points()
            .iter()
            .map(|z| set.position(&act(model.fan(), p, z)).unwrap())
            .collect();
        for (i, &j) in image.iter().enumerate() {
            let mut t: Vec<Character> = set.tangent(i).iter().map(|&c| theta(p, c)).collect();
            t.sort();
            let mut u = set.tangent(j).to_vec();
            u.sort();
            assert_eq!(t, u);
        }
        image.sort();
        image.dedup();
        assert_eq!(image.len(), set.len());
    }
}
