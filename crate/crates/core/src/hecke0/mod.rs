//! The 0-Hecke algebra `H_n(0)`: products in the `T`, `ξ`, `η` and Norton
//! bases, the Frobenius form, finite dimensional modules given by exact
//! matrices, induction products, radical series, `q`-Cartan matrices,
//! quivers and minimal projective resolutions.

mod algebra;
mod build;
mod frobenius;
mod homology;
mod induction;
mod module;

pub use algebra::{
    hecke_algebra, norton_basis, norton_epsilon, reduced_word, t_product, HeckeAlgebra, HeckeBasis, HeckeElem, NortonReport,
    MAX_HECKE_DEGREE,
};
pub use build::{
    build_module, label_module, regular_module, verify_projective_action, ModuleKind, SkewShape, MAX_COMBINATORIAL_DEGREE,
    MAX_REGULAR_DEGREE,
};
pub use frobenius::{delta_one, frobenius, frobenius_form, zeta, FrobeniusReport, MAX_FROBENIUS_DEGREE};
pub use homology::{
    ext_poincare_check, q_cartan, quiver, quiver_arrow_formula, radical_report, syzygy_resolution, vertex_composition, ExtReport, QCartan,
    Quiver, QuiverMethod, RadicalReport, Resolution, Vertex, MAX_CARTAN_DEGREE, MAX_QUIVER_DEGREE, MAX_RESOLUTION_DEGREE,
    MAX_RESOLUTION_STEPS,
};
pub use induction::{
    beta, check_simple_filtration, exact_sequence, induction_product, n_element, same_labelled_module, shuffle_cosets,
    simple_product_filtration, ExactSequenceReport, MAX_INDUCTION_DEGREE,
};
pub use module::{tables_equivalent, Action, ActionTable, ModuleRep, SparseMat, Subspace};
