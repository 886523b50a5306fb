//! Exact arithmetic in `S = Q[t1, t2]`: characters, sparse polynomials,
//! division by linear forms, Jacobi–Trudi determinants and degreewise linear
//! algebra on `S^points`.

pub mod divide;
pub mod linalg;
pub mod poly;
pub mod schur;

pub use divide::{divide_exact, divide_linear, product_of_forms, DivisionError};
pub use linalg::{GradedSubspace, PointTuple, QuotientCoordinates, RowEchelon, SparseVec};
pub use poly::{elementary_symmetric, fmt_rational, linear_form, q, q_frac, Character, SPoly, Q};
pub use schur::{determinant, schur_det};

/// Monomials of `S_k` in graded-lex order: `t1^k, t1^(k-1) t2, ..., t2^k`.
pub fn monomials_of_degree(k: u32) -> Vec<SPoly> {
    (0..=k)
        .map(|j| SPoly::monomial(num_traits::One::one(), (k - j, j)))
        .collect()
}

/// `graded_intersect` of two slices with the same ambient and degree.
pub fn graded_intersect(a: &GradedSubspace, b: &GradedSubspace) -> GradedSubspace {
    a.intersect(b)
}
