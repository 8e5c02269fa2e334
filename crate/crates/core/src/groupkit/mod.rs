//! Finite groups as multiplication tables, homomorphism enumeration, free
//! words, presentations and the hom-counting oracle.

mod group;
mod hom;
pub mod library;
mod presentation;
mod word;

pub use group::{Elem, FinGroup};
pub use hom::{hom_set, GroupHom};
pub use presentation::{count_homs, list_homs, GroupPresentation};
pub use word::{eval_word, free_reduce, generator_of, letter, letter_inv, Letter, Word};
