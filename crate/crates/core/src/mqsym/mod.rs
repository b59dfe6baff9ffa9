//! Matrix quasi-symmetric functions: the `MS` basis indexed by packed
//! matrices, the augmented shuffle product, the row-cut coproduct and the
//! transpose pairing, the maps to QSym, from NSym and from FQSym, the `ΦS`
//! basis, Hilbert series, and the operators `f_A` on the tensor algebra of
//! a polynomial ring.

mod algebra;
mod checks;
mod convolution;
mod hilbert;
mod packed;

pub use crate::suite::{AxiomReport, Check};
pub use algebra::{
    augmented_shuffle, embed_fqsym, ev, packed_words, pair_tensor, phis_in_ms, row_cuts, row_merge, t_ev, tensor_mul, word_matrix, MQElem,
    MqBasis, MqTensor,
};
pub use checks::{mqsym_axioms, MAX_AXIOM_DEGREE};
pub use convolution::{
    convolution_fa, convolution_homomorphism_check, convolution_of_product, convolution_star, injectivity_witness, split_monomial,
    tensor_coproduct, ConvolutionReport, Monomial, MultiWord, MAX_CONVOLUTION_DEGREE, MAX_VARIABLES,
};
pub use hilbert::{
    bipartite_connected, connected_counts, free_series, freeness_check, hilbert_closed_form, hilbert_series, FreenessReport, HilbertMethod,
    MAX_FREENESS_DEGREE,
};
pub use packed::{packed, PackedMat};
