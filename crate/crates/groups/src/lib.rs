//! Finite groups generated by Miyamoto involutions: axis-orbit closure,
//! permutation representations with strong generating sets, product-order
//! tables and 3-transposition diagnostics.

pub mod axes;
pub mod perm;
pub mod sims;

pub use axes::{
    close_axes, filter_commuting, group_from_matrices, matrix_order, orbit_closure,
    perm_group_on, permutation_image, permutation_of, product_order_table,
    three_transposition_verdict, AxisSet, FlavorRule, GroupError, PermutationImage,
    TranspositionVerdict, DEFAULT_CLOSURE_BUDGET,
};
pub use perm::{enumerate_order, Perm};
pub use sims::PermGroup;
