//! Equivariant Chow rings by localization: generators of the fixed
//! components, congruence systems, degreewise module intersection, Betti
//! numbers and the ordinary Chow ring.

pub mod betti;
pub mod congruence;
pub mod generators;
pub mod module;
pub mod ring;

use thiserror::Error;

use crate::fixedloci::ComponentError;
use crate::toricfan::Subtorus;

pub use betti::{betti_bb, generic_cocharacter, gottsche_poincare};
pub use congruence::{bott_pairing, congruence_system, CongruenceSystem, Relation, Violation};
pub use generators::{
    component_generators, grassmann_factor_generators, line_factor_generators, Generator,
    GeneratorSet,
};
pub use module::{EquivariantModel, SubtorusData};
pub use ring::{chow_structure_constants, GradedRingPresentation, StructureConstant};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error(transparent)]
    Component(#[from] ComponentError),
    #[error("graded piece of weight {weight} at chart {chart} is infinite-dimensional for subtorus {subtorus}")]
    InfiniteGradedPiece {
        chart: usize,
        weight: i64,
        subtorus: Subtorus,
    },
    #[error("Bott pairing is not a polynomial")]
    NotIntegral,
    #[error(
        "degree {degree}: S1 * A^(k-1) has dimension {image} inside a slice of dimension {slice}"
    )]
    RankMismatch {
        degree: u32,
        image: usize,
        slice: usize,
    },
}
