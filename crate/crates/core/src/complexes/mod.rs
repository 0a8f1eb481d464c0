//! Bounded chain complexes, homological indexing (`d_n : C_n → C_{n-1}`).

mod proj;
mod vect;

pub use proj::{BiElement, BimoduleComplex, ProjComplex};
pub use vect::{euler_char, homology_dims, VectComplex};
