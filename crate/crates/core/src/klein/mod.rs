//! The free class-2 group with its order-two automorphism, the lattice identities of the
//! `[[-1, 1], [0, -1]]` module, and the explicit group law of the localized Klein bottle group.

pub mod closure_oracle;
pub mod lcs;
pub mod lemma61;
pub mod localization;
pub mod nil2;
pub mod tensor_identity;

pub use lcs::{lcs_intersection_exponent, lower_central_term, LcsExponent, Subgroup, Window};
pub use lemma61::{klein_action, klein_d, lemma61_suite};
pub use localization::{
    cocycle_w_check, derived_series_shadow, group_law_checks, kle_mul, localization_suite, AltData, DeterminantModel,
    ExteriorModel, LocElement,
};
pub use nil2::Nil2;
pub use tensor_identity::tensor_identity_suite;
