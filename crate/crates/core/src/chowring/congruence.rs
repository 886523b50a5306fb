//! Bott pairings and the congruence relations they impose.

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::charpoly::{
    divide_exact, divide_linear, product_of_forms, Character, PointTuple, SPoly, Q,
};
use crate::fixedloci::FixedComponent;
use crate::toricfan::Subtorus;

use super::generators::GeneratorSet;
use super::ChowError;

/// `Σ_q α_q d(q) ≡ 0` modulo the product of `modulus_factors`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    /// Global fixed point indices the coefficients refer to.
    pub points: Vec<usize>,
    pub coefficients: Vec<SPoly>,
    /// Primitive characters whose linear forms multiply to the modulus.
    pub modulus_factors: Vec<Character>,
}

impl Relation {
    pub fn modulus(&self) -> SPoly {
        product_of_forms(&self.modulus_factors)
    }

    /// Common degree of the nonzero coefficients.
    pub fn coefficient_degree(&self) -> u32 {
        self.coefficients
            .iter()
            .find_map(|c| c.homogeneous_degree())
            .unwrap_or(0)
    }

    pub fn combination(&self, alpha: &PointTuple) -> SPoly {
        self.points
            .iter()
            .zip(&self.coefficients)
            .fold(SPoly::zero(), |acc, (&p, d)| &acc + &(&alpha[p] * d))
    }

    /// Whether the tuple `alpha` (indexed by global fixed point) satisfies
    /// the relation.
    pub fn holds(&self, alpha: &PointTuple) -> bool {
        divide_exact(&self.combination(alpha), &self.modulus_factors).is_ok()
    }
}

#[derive(Debug, Clone)]
pub struct CongruenceSystem {
    pub subtorus: Subtorus,
    pub relations: Vec<Relation>,
}

/// A relation failed by a tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub subtorus: Subtorus,
    pub component: usize,
    pub relation: usize,
}

fn canonical(chi: Character) -> Character {
    chi.primitive_part().1
}

/// Scales a tuple of polynomials to integer coefficients with content 1 and
/// a positive first nonzero coefficient.
pub fn normalize_tuple(t: &mut [SPoly]) {
    let mut num_gcd = num_bigint::BigInt::zero();
    let mut den_lcm = num_bigint::BigInt::one();
    let mut first: Option<Q> = None;
    for p in t.iter() {
        for (_, c) in p.terms_glex() {
            if first.is_none() {
                first = Some(c.clone());
            }
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
    }
    let Some(first) = first else { return };
    let mut scale = Q::new(den_lcm, num_gcd);
    if first.is_negative() {
        scale = -scale;
    }
    for p in t.iter_mut() {
        *p = p.scale(&scale);
    }
}

/// One relation per generator: `d(q) = g_q ∏_{p≠q} e_p` modulo `∏_p e_p`,
/// with every linear factor dividing all coefficients cancelled, then the
/// coefficients made primitive. Relations with unit modulus or zero
/// coefficients are dropped.
pub fn congruence_system(c: &FixedComponent, gens: &GeneratorSet) -> CongruenceSystem {
    let mut relations = Vec::new();
    for g in &gens.generators {
        if let Some(r) = relation_for(c, &g.values) {
            if !relations.contains(&r) {
                relations.push(r);
            }
        }
    }
    CongruenceSystem {
        subtorus: c.subtorus,
        relations,
    }
}

fn relation_for(c: &FixedComponent, g: &[SPoly]) -> Option<Relation> {
    let n = c.len();
    let mut coefficients: Vec<SPoly> = (0..n)
        .map(|q| {
            (0..n)
                .filter(|&p| p != q)
                .fold(g[q].clone(), |acc, p| &acc * &c.euler[p])
        })
        .collect();
    let mut modulus: Vec<Character> = c.euler_factors().into_iter().map(canonical).collect();
    modulus.sort();
    let mut k = 0;
    while k < modulus.len() {
        let f = modulus[k];
        let divided: Result<Vec<SPoly>, _> =
            coefficients.iter().map(|d| divide_linear(d, f)).collect();
        match divided {
            Ok(v) => {
                coefficients = v;
                modulus.remove(k);
            }
            Err(_) => k += 1,
        }
    }
    if modulus.is_empty() || coefficients.iter().all(SPoly::is_zero) {
        return None;
    }
    normalize_tuple(&mut coefficients);
    Some(Relation {
        points: c.points.clone(),
        coefficients,
        modulus_factors: modulus,
    })
}

/// `Σ_p α_p g_p / e_p`, with `α` and `g` given on the component's points.
pub fn bott_pairing(c: &FixedComponent, alpha: &[SPoly], g: &[SPoly]) -> Result<SPoly, ChowError> {
    let n = c.len();
    let numerator = (0..n).fold(SPoly::zero(), |acc, p| {
        let term = (0..n)
            .filter(|&q| q != p)
            .fold(&alpha[p] * &g[p], |t, q| &t * &c.euler[q]);
        &acc + &term
    });
    divide_exact(&numerator, &c.euler_factors()).map_err(|_| ChowError::NotIntegral)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charpoly::{q, q_frac};
    use crate::chowring::generators::component_generators;
    use crate::fixedloci::{components, FixedPointSet};
    use crate::toricfan::Fan;

    fn setup(id: &str, w: (i64, i64)) -> (FixedPointSet, FixedComponent) {
        let set = FixedPointSet::new(&Fan::projective_plane(), 3);
        let i = set.points().iter().position(|z| z.id() == id).unwrap();
        let w = Subtorus::through(w.0, w.1).unwrap();
        let c = components(&set, w)
            .unwrap()
            .into_iter()
            .find(|c| c.points.contains(&i))
            .unwrap();
        (set, c)
    }

    fn at(set: &FixedPointSet, id: &str) -> usize {
        set.points().iter().position(|z| z.id() == id).unwrap()
    }

    #[test]
    fn unit_relation_of_the_a_component() {
        let (set, c) = setup("P2:d3:[2,1|∅|∅]", (1, 0));
        let gens = component_generators(set.fan(), &c).unwrap();
        let sys = congruence_system(&c, &gens);
        let one = sys
            .relations
            .iter()
            .find(|r| r.modulus_factors.len() == 2)
            .expect("a relation modulo t2^2");
        assert_eq!(one.modulus(), SPoly::t2().pow(2));
        let a = c.local_index(at(&set, "P2:d3:[2,1|∅|∅]")).unwrap();
        let a13 = c.local_index(at(&set, "P2:d3:[∅|∅|2,1]")).unwrap();
        assert_eq!(one.coefficients[a], SPoly::one());
        assert_eq!(one.coefficients[a13], SPoly::one());
        let minus: Vec<&SPoly> = one
            .coefficients
            .iter()
            .filter(|x| **x == -&SPoly::one())
            .collect();
        assert_eq!(minus.len(), 2);
    }

    #[test]
    fn b_component_relation() {
        let (set, c) = setup("P2:d3:[3|∅|∅]", (1, 0));
        assert_eq!(c.len(), 2);
        assert_eq!(c.dimension, 1);
        let gens = component_generators(set.fan(), &c).unwrap();
        let sys = congruence_system(&c, &gens);
        assert_eq!(sys.relations.len(), 1);
        let r = &sys.relations[0];
        assert_eq!(r.modulus(), SPoly::t2());
        assert_eq!(r.coefficients, vec![SPoly::one(), -&SPoly::one()]);
        let b = c.local_index(at(&set, "P2:d3:[3|∅|∅]")).unwrap();
        assert_eq!(c.euler[b], -&SPoly::t2());
    }

    #[test]
    fn pairings() {
        let (set, c) = setup("P2:d3:[2,1|∅|∅]", (1, 0));
        let ones = vec![SPoly::one(); 4];
        assert_eq!(bott_pairing(&c, &ones, &ones).unwrap(), SPoly::zero());
        let gens = component_generators(set.fan(), &c).unwrap();
        let top = gens.generators.iter().find(|g| g.degree == 2).unwrap();
        // c1 c2 integrates to 4 against g = 1: each of the four points contributes t2^2 / ±t2^2
        assert_eq!(
            bott_pairing(&c, &top.values, &ones).unwrap(),
            SPoly::constant(q(4))
        );
        let a = c.local_index(at(&set, "P2:d3:[2,1|∅|∅]")).unwrap();
        let mut alpha = vec![SPoly::zero(); 4];
        alpha[a] = SPoly::t2();
        assert_eq!(bott_pairing(&c, &alpha, &ones), Err(ChowError::NotIntegral));
    }

    #[test]
    fn normalization() {
        let mut t = vec![SPoly::t1().scale(&q_frac(-2, 3)), SPoly::t2().scale(&q(4))];
        normalize_tuple(&mut t);
        assert_eq!(t, vec![SPoly::t1(), SPoly::t2().scale(&q(-6))]);
    }
}
