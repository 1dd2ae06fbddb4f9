//! Constructors for the dihedral algebra catalog and the (2A,3A)-generated
//! algebra family.

pub mod catalog;
pub mod family;

pub use catalog::{
    catalog_conformal, frame_6a, lemma_2_14_identities, make_2a, make_2b, make_3a, make_6a,
    make_catalog, CatalogAlgebra,
};
pub use family::{
    build_abxy_2a, build_abxy_3a, build_xn, build_xn_capped, dispatch_abxy, frame_relations_check,
    omega_charge, AbxyBuild, AbxyThreeA, AbxyTwoA, BuildError, FamilyAlgebraXn, NinePointConfig,
    DEFAULT_N_CAP,
};
