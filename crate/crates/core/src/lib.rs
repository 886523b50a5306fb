//! Torus-equivariant and ordinary rational Chow rings of punctual Hilbert
//! schemes of points on smooth complete toric surfaces.

pub mod charpoly;
pub mod chowring;
pub mod cli;
pub mod fixedloci;
pub mod hilb3p2;
pub mod report;
pub mod staircases;
pub mod toricfan;
