//! Quasi-symmetric, noncommutative symmetric, symmetric and free symmetric
//! functions, with the arrows relating them to FQSym.

mod distribution;
mod fsym;
mod nsym;
mod qsym;
mod sym;

pub use distribution::{inv_maj_sides, qs_distribution, QsReport, MAX_DISTRIBUTION_DEGREE};
pub use fsym::{free_schur, lr_product_fqsym, lr_product_shuffle, FSymElem};
pub use nsym::{NSymElem, NsBasis};
pub use qsym::{commutative_image, eval_monomial, QSymElem, QsBasis};
pub use sym::{kostka, power_sum, MPoly, SymBasis, SymElem, MAX_SYM_DEGREE};
