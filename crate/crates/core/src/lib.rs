//! Spectral toolkit for weighted topological crystals: discrete Gauss-Bonnet
//! and Hodge operators, Floquet-Bloch band structure through explicit fiber
//! matrices, a toroidal pseudo-difference symbol calculus for measure and
//! potential perturbations, and truncated-operator spectra.

pub mod crystal;
pub mod graph;
pub mod sampling;

pub use crystal::{
    build_crystal, standard_lattice, Crystal, CrystalDescriptor, CrystalEdge, CrystalError,
    CrystalVertex, LatticePoint, LiftedCochain, Truncation, CATALOG,
};
pub use graph::{
    apply_d, apply_d_star, apply_gauss_bonnet, apply_laplacian0, apply_laplacian1, degree,
    inner_product, norm, Cochain, GraphError, Measure, OrientedEdge, OrientedGraph, Potential,
};
