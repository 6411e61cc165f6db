//! Central extensions of small finite groups and relative second cohomology.

pub mod cochain;
pub mod cohomology;
pub mod extension;
pub mod group;

pub use cochain::{coboundary, Cochain1, Cochain2, CoeffGroup};
pub use cohomology::{in_relative_cocycles, relative_cocycles, relative_h2, RelativeCocycles, LINALG_ORDER_GUARD};
pub use extension::{
    are_equivalent, build_extension, build_relative, extension_classes, extension_table, is_perfect, morphisms,
    morphisms_agree_on_commutators, zero_morphism_splits, CentralExtension, ExtensionMorphism, RelativeExtension,
    ENUMERATION_GUARD,
};
pub use group::{FiniteGroup, GroupHom};
