//! Weight-two algebras of rescaled root lattices: axis vectors over root
//! pairs, frame decompositions of the conformal vector, and the full Ising
//! enumeration of the E8 lattice algebra.

pub mod frames;
pub mod ising;
pub mod roots;
pub mod weight2;

pub use frames::{
    axis_span_algebra, eta_frame, expected_t_charge, s_t_decomposition, AxisSpanAlgebra,
    StDecomposition,
};
pub use ising::{character_table, enumerate_ising, fast_inner, full_scan, CharacterTable, IsingVector, ScanReport};
pub use roots::{RootSystemData, RootType};
pub use weight2::{LatticeError, LatticeGriess};
