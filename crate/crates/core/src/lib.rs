//! Exact computations in combinatorial Hopf algebras (FQSym, FSym, QSym,
//! NSym, Sym, MQSym) and in the representation theory of 0-Hecke algebras.

pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod exactalg;
pub mod fqsym;
pub mod hecke0;
pub mod mqsym;
pub mod posets;
pub mod suite;
pub mod symfam;

pub use error::{Error, Result};
