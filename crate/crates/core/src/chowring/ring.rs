//! The ordinary Chow ring `A^*(Hilb^d X) = A_T^* / S^+ A_T^*` with a
//! basis and structure constants.

use crate::charpoly::{
    GradedSubspace, PointTuple, QuotientCoordinates, RowEchelon, SPoly, SparseVec, Q,
};

use super::module::EquivariantModel;
use super::ChowError;

/// `basis[i][a] * basis[j][b] = Σ_c coefficients[c] basis[i+j][c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstant {
    pub left: (u32, usize),
    pub right: (u32, usize),
    pub coefficients: Vec<Q>,
}

#[derive(Debug, Clone)]
pub struct GradedRingPresentation {
    pub cap: u32,
    /// `dim A_T^k` for `k <= cap`.
    pub equivariant_dims: Vec<usize>,
    /// `b_{2k} = dim A^k` for `k <= cap`.
    pub betti: Vec<usize>,
    /// Degree slices of `A_T^*`.
    pub slices: Vec<GradedSubspace>,
    /// Lifts to `A_T^k` of a basis of `A^k`.
    pub basis: Vec<Vec<PointTuple>>,
    /// Products of basis elements with total degree at most `min(cap, 2d)`.
    pub structure_constants: Vec<StructureConstant>,
}

impl GradedRingPresentation {
    pub fn constant(&self, left: (u32, usize), right: (u32, usize)) -> Option<&[Q]> {
        self.structure_constants
            .iter()
            .find(|s| s.left == left && s.right == right)
            .map(|s| s.coefficients.as_slice())
    }
}

fn times(t: &PointTuple, f: &SPoly) -> PointTuple {
    t.iter().map(|x| x * f).collect()
}

/// Graded pieces up to `cap`, Betti numbers, basis lifts and products.
///
/// The lifts are the first rows of the reduced echelon basis of `A_T^k` that
/// are independent modulo `S_1 A_T^{k-1}`; structure constants depend on this
/// choice.
pub fn chow_structure_constants(
    model: &EquivariantModel,
    cap: u32,
) -> Result<GradedRingPresentation, ChowError> {
    let n = model.npoints();
    let slices: Vec<GradedSubspace> = (0..=cap)
        .map(|k| model.equivariant_graded_basis(k))
        .collect();
    let mut images: Vec<Vec<SparseVec>> = Vec::with_capacity(slices.len());
    let mut basis_vecs: Vec<Vec<SparseVec>> = Vec::with_capacity(slices.len());
    let mut betti = Vec::new();
    for k in 0..=cap {
        let slice = &slices[k as usize];
        let image = if k == 0 {
            RowEchelon::new(slice.ambient_dim())
        } else {
            let prev = &slices[k as usize - 1];
            let mut tuples = Vec::new();
            for t in prev.basis() {
                tuples.push(times(&t, &SPoly::t1()));
                tuples.push(times(&t, &SPoly::t2()));
            }
            GradedSubspace::from_tuples(n, k, &tuples).echelon().clone()
        };
        if image.rank() > slice.dim() || !image.rows().all(|r| slice.contains_vector(r)) {
            return Err(ChowError::RankMismatch {
                degree: k,
                image: image.rank(),
                slice: slice.dim(),
            });
        }
        let mut growing = image.clone();
        let mut lifts = Vec::new();
        for r in slice.echelon().rows() {
            if growing.insert(r) {
                lifts.push(r.clone());
            }
        }
        betti.push(lifts.len());
        images.push(image.rows().cloned().collect());
        basis_vecs.push(lifts);
    }

    let basis: Vec<Vec<PointTuple>> = basis_vecs
        .iter()
        .zip(&slices)
        .map(|(vs, s)| vs.iter().map(|v| s.decode(v)).collect())
        .collect();

    let top = cap.min(2 * model.d());
    let coordinates: Vec<QuotientCoordinates> = (0..=top as usize)
        .map(|k| QuotientCoordinates::new(&images[k], &basis_vecs[k], slices[k].ambient_dim()))
        .collect();
    let mut structure_constants = Vec::new();
    for i in 0..=top {
        for j in i..=(top - i) {
            let target = &slices[(i + j) as usize];
            for (a, x) in basis[i as usize].iter().enumerate() {
                for (b, y) in basis[j as usize].iter().enumerate() {
                    let product: PointTuple = x.iter().zip(y).map(|(p, q)| p * q).collect();
                    let v = target.encode(&product);
                    let coefficients = coordinates[(i + j) as usize].coordinates(&v).ok_or(
                        ChowError::RankMismatch {
                            degree: i + j,
                            image: images[(i + j) as usize].len(),
                            slice: target.dim(),
                        },
                    )?;
                    structure_constants.push(StructureConstant {
                        left: (i, a),
                        right: (j, b),
                        coefficients,
                    });
                }
            }
        }
    }

    Ok(GradedRingPresentation {
        cap,
        equivariant_dims: slices.iter().map(GradedSubspace::dim).collect(),
        betti,
        slices,
        basis,
        structure_constants,
    })
}
