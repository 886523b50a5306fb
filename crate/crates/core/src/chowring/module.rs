//! The equivariant Chow ring as an S-submodule of `S^{fixed points}`,
//! computed degree by degree.

use std::collections::HashMap;
use std::sync::Mutex;

use num_traits::Zero;
use rayon::prelude::*;

use crate::charpoly::{
    monomials_of_degree, product_of_forms, Character, GradedSubspace, PointTuple, RowEchelon,
    SPoly, SparseVec, Q,
};
use crate::fixedloci::{components, FixedComponent, FixedPointSet};
use crate::toricfan::{Fan, Subtorus};

use super::congruence::{congruence_system, CongruenceSystem, Relation, Violation};
use super::generators::{component_generators, GeneratorSet};
use super::ChowError;

/// Components, generators and congruences of one relevant subtorus.
#[derive(Debug, Clone)]
pub struct SubtorusData {
    pub subtorus: Subtorus,
    pub components: Vec<FixedComponent>,
    pub generators: Vec<GeneratorSet>,
    pub congruences: Vec<CongruenceSystem>,
}

type AnnihilatorCache = Mutex<HashMap<(Vec<Character>, u32), Vec<SparseVec>>>;

/// Everything the localization description of `A_T^*(Hilb^d X)` needs.
#[derive(Debug)]
pub struct EquivariantModel {
    set: FixedPointSet,
    subtori: Vec<SubtorusData>,
    annihilator_cache: AnnihilatorCache,
}

impl EquivariantModel {
    pub fn new(fan: &Fan, d: u32) -> Result<EquivariantModel, ChowError> {
        EquivariantModel::from_set(FixedPointSet::new(fan, d))
    }

    pub fn from_set(set: FixedPointSet) -> Result<EquivariantModel, ChowError> {
        let subtori: Result<Vec<SubtorusData>, ChowError> = set
            .relevant_subtori()
            .into_par_iter()
            .map(|w| {
                let comps = components(&set, w)?;
                let generators = comps
                    .iter()
                    .map(|c| component_generators(set.fan(), c))
                    .collect::<Result<Vec<_>, _>>()?;
                let congruences = comps
                    .iter()
                    .zip(&generators)
                    .map(|(c, g)| congruence_system(c, g))
                    .collect();
                Ok(SubtorusData {
                    subtorus: w,
                    components: comps,
                    generators,
                    congruences,
                })
            })
            .collect();
        Ok(EquivariantModel {
            set,
            subtori: subtori?,
            annihilator_cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn fixed_points(&self) -> &FixedPointSet {
        &self.set
    }

    pub fn fan(&self) -> &Fan {
        self.set.fan()
    }

    pub fn d(&self) -> u32 {
        self.set.d()
    }

    pub fn npoints(&self) -> usize {
        self.set.len()
    }

    pub fn subtori(&self) -> &[SubtorusData] {
        &self.subtori
    }

    pub fn subtorus(&self, w: Subtorus) -> Option<&SubtorusData> {
        self.subtori.iter().find(|s| s.subtorus == w)
    }

    /// Degree-`k` slice of the direct sum over the components of `w` of the
    /// modules spanned by their generators.
    pub fn subtorus_span(&self, data: &SubtorusData, k: u32) -> GradedSubspace {
        let n = self.npoints();
        let space = GradedSubspace::zero(n, k);
        let mut rows = Vec::new();
        for (c, gens) in data.components.iter().zip(&data.generators) {
            for g in &gens.generators {
                if g.degree > k {
                    continue;
                }
                for m in monomials_of_degree(k - g.degree) {
                    let mut t: PointTuple = vec![SPoly::zero(); n];
                    for (local, &global) in c.points.iter().enumerate() {
                        t[global] = &m * &g.values[local];
                    }
                    rows.push(space.encode(&t));
                }
            }
        }
        GradedSubspace::from_vectors(n, k, rows.iter())
    }

    /// Degree-`k` slice of `A_T^*`: the intersection over relevant subtori of
    /// their component module spans.
    pub fn equivariant_graded_basis(&self, k: u32) -> GradedSubspace {
        let n = self.npoints();
        if self.subtori.is_empty() {
            return GradedSubspace::full(n, k);
        }
        let spans: Vec<GradedSubspace> = self
            .subtori
            .par_iter()
            .map(|s| self.subtorus_span(s, k))
            .collect();
        GradedSubspace::intersect_all(n, k, &spans)
    }

    /// Linear functionals on `S_total` vanishing exactly on `modulus * S`.
    fn multiples_annihilator(&self, modulus: &[Character], total: u32) -> Vec<SparseVec> {
        let key = (modulus.to_vec(), total);
        if let Some(v) = self.annihilator_cache.lock().unwrap().get(&key) {
            return v.clone();
        }
        let m = modulus.len() as u32;
        let ncols = total as usize + 1;
        let mut e = RowEchelon::new(ncols);
        if total >= m {
            let u = product_of_forms(modulus);
            for mono in monomials_of_degree(total - m) {
                let p = &u * &mono;
                let v: SparseVec = p
                    .homogeneous_coords(total)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                e.insert(&v);
            }
        }
        let ann = e.kernel();
        self.annihilator_cache
            .lock()
            .unwrap()
            .insert(key, ann.clone());
        ann
    }

    /// Linear equations on degree-`k` tuples expressing one relation.
    pub fn relation_equations(&self, r: &Relation, k: u32) -> Vec<SparseVec> {
        let e = r.coefficient_degree();
        let total = k + e;
        let funcs = self.multiples_annihilator(&r.modulus_factors, total);
        let width = k as usize + 1;
        // images of each basis monomial at each point under multiplication by d(q)
        let mut images: Vec<(usize, Vec<Q>)> = Vec::new();
        for (&p, d) in r.points.iter().zip(&r.coefficients) {
            if d.is_zero() {
                continue;
            }
            for (j, mono) in monomials_of_degree(k).into_iter().enumerate() {
                images.push((p * width + j, (&mono * d).homogeneous_coords(total)));
            }
        }
        let mut out = Vec::with_capacity(funcs.len());
        for f in &funcs {
            let mut row: SparseVec = Vec::new();
            for (col, img) in &images {
                let mut acc = Q::zero();
                for (i, c) in f {
                    acc += c * &img[*i];
                }
                if !acc.is_zero() {
                    row.push((*col, acc));
                }
            }
            row.sort_by_key(|(c, _)| *c);
            if !row.is_empty() {
                out.push(row);
            }
        }
        out
    }

    /// Degree-`k` solutions of every congruence relation; equals
    /// [`Self::equivariant_graded_basis`].
    pub fn congruence_solution_space(&self, k: u32) -> GradedSubspace {
        let eqs: Vec<SparseVec> = self
            .subtori
            .par_iter()
            .flat_map_iter(|s| {
                s.congruences
                    .iter()
                    .flat_map(|sys| sys.relations.iter())
                    .flat_map(|r| self.relation_equations(r, k))
                    .collect::<Vec<_>>()
            })
            .collect();
        GradedSubspace::from_equations(self.npoints(), k, eqs.iter())
    }

    /// First violated relation, if any.
    pub fn membership(&self, alpha: &PointTuple) -> Result<(), Violation> {
        for s in &self.subtori {
            for (ci, sys) in s.congruences.iter().enumerate() {
                for (ri, r) in sys.relations.iter().enumerate() {
                    if !r.holds(alpha) {
                        return Err(Violation {
                            subtorus: s.subtorus,
                            component: ci,
                            relation: ri,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// Membership through Bott pairings against every generator.
    pub fn membership_by_pairing(&self, alpha: &PointTuple) -> Result<(), Violation> {
        for s in &self.subtori {
            for (ci, (c, gens)) in s.components.iter().zip(&s.generators).enumerate() {
                let local: Vec<SPoly> = c.points.iter().map(|&p| alpha[p].clone()).collect();
                for (gi, g) in gens.generators.iter().enumerate() {
                    if super::congruence::bott_pairing(c, &local, &g.values).is_err() {
                        return Err(Violation {
                            subtorus: s.subtorus,
                            component: ci,
                            relation: gi,
                        });
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_degree_dimensions() {
        let m = EquivariantModel::new(&Fan::projective_plane(), 1).unwrap();
        assert_eq!(m.equivariant_graded_basis(0).dim(), 1);
        assert_eq!(m.equivariant_graded_basis(1).dim(), 3);
        let m3 = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
        assert_eq!(m3.equivariant_graded_basis(0).dim(), 1);
        assert_eq!(m3.equivariant_graded_basis(1).dim(), 4);
    }

    #[test]
    fn two_routes_agree() {
        let m = EquivariantModel::new(&Fan::projective_plane(), 2).unwrap();
        for k in 0..=4 {
            assert_eq!(
                m.equivariant_graded_basis(k),
                m.congruence_solution_space(k),
                "degree {k}"
            );
        }
    }

    #[test]
    fn constants_are_members() {
        let m = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
        let f = &SPoly::t1() - &SPoly::t2().pow(2);
        assert!(m.membership(&vec![f; m.npoints()]).is_ok());
    }

    #[test]
    fn t2_at_a_is_not_a_member() {
        let m = EquivariantModel::new(&Fan::projective_plane(), 3).unwrap();
        let a = m
            .fixed_points()
            .points()
            .iter()
            .position(|z| z.id() == "P2:d3:[2,1|∅|∅]")
            .unwrap();
        let mut alpha = vec![SPoly::zero(); m.npoints()];
        alpha[a] = SPoly::t2();
        assert!(m.membership(&alpha).is_err());
        assert!(m.membership_by_pairing(&alpha).is_err());
    }
}
