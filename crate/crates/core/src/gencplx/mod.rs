//! The generalized tangent bundle `TM ⊕ T*M`: the standard Courant
//! structure, its deformation by a block endomorphism `J`, the double of a
//! quasi-Lie bialgebroid, and generalized complex structures.

mod courant;
mod gcs;
mod section;

pub use courant::{
    closed_form_forms, closed_form_mixed, closed_form_vectors, courant_axiom_defects, d_operator,
    deformed_bracket, double_bracket, std_bracket, CourantStructure,
};
pub use gcs::{
    algebraic_defects, b_transform, courant_nijenhuis, integrability_defect, lemma74_defects,
    prop75_equivalence, verify_theorem_d, BLOCK_IDENTITY, J_ORTHOGONAL, J_SQUARED,
};
pub use section::{build_j, pairing, GeneralizedEndomorphism, GeneralizedSection};
