//! Finitely presented groups: presentations, coset enumeration, abelian
//! invariants, and the active-sum construction.

mod abelian;
mod active_sum;
mod coset;
mod presentation;
pub mod word;

pub use abelian::{abelianization, smith_diagonal, Abelianization};
pub use active_sum::{active_sum_presentation, realize_active_sum, ActiveSumResult, Encoding};
pub use coset::{todd_coxeter, CosetTable, EnumerationOptions, EnumerationStats, Strategy};
pub use presentation::{GeneratorLabel, Presentation};
pub use word::{Letter, Word};
