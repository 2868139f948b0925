//! Coordinate calculus of multivector fields, differential forms and
//! `(1,1)`-tensor fields on `R^n`.

mod alternating;
mod calculus;
mod endomorphism;
mod koszul;
mod musical;
mod nijenhuis;

pub use alternating::{
    basis_label, increasing_tuples, Alternating, Contravariant, Covariant, DifferentialForm,
    MultiVectorField, Variance,
};
pub use calculus::{
    apply_vector, exterior_derivative, interior, lie_bracket, lie_derivative, schouten_bracket,
    vector_apply,
};
pub use endomorphism::{CotangentMap, EndomorphismField, PolyMatrix};
pub use koszul::{
    contract_bivector, koszul_bracket, koszul_bracket_graded, koszul_bracket_graded_unchecked,
    PoissonBivector,
};
pub use musical::{
    contract_pair, endomorphism_from_forms, flat, inverse_bivector, omega_n, pi_n, sharp,
    sharp_extend, skew_defect,
};
pub(crate) use musical::{omega_n_symmetric_part, omega_n_unchecked, pi_n_unchecked};
pub use nijenhuis::{
    bracket_n, d_n_cartan, d_n_direct, i_n, nijenhuis_torsion, torsion_on, VectorValuedTwoForm,
};
