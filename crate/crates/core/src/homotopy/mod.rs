//! Homotopy O-operators on symmetric graded Lie algebras and pre-Lie∞ algebras.

pub mod bracket;
pub mod embed;
pub mod prelie_inf;
pub mod sym;

pub use bracket::{
    check_homotopy_oop, check_homotopy_rbo, expand_low_identities, graded_bracket, homotopy_oop_residual,
    is_homotopy_oop, is_homotopy_rbo, mc_check_homotopy, mc_residual_homotopy, search_homotopy_oop,
    DEFAULT_P_MAX, MAX_WEIGHT,
};
pub use prelie_inf::{
    check_prelie_infinity, check_psi_homomorphism, complete_order, diamond, gm_bracket, induce_prelie_infinity,
    is_prelie_infinity, prelie_infinity_residual, psi, GradedHookedCochain, GradedHookedMap, PreLieInfinity,
};
pub use sym::{canonical_words, GradedCochain, GradedSymMap, HomotopyOperator};

#[cfg(test)]
mod tests;
