//! Central words, Christoffel words and Stern's diatomic sequence.
//!
//! The crate builds everything from binary words: the palindromization map
//! `ψ`, Christoffel words given by slope or directive, continuants, the
//! Raney and Stern-Brocot trees, several evaluators of Stern's sequence and
//! length statistics of Christoffel words of a given order.

pub mod christoffel;
pub mod continuant;
pub mod distribution;
pub mod frac;
pub mod palindrome;
pub mod stern;
pub mod tree;
pub mod verify;
pub mod word;

pub use christoffel::{christoffel_by_directive, christoffel_by_slope, ChristoffelWord};
pub use frac::Frac;
pub use palindrome::{pal_closure, period_pair, psi, psi_inverse, PeriodPair};
pub use stern::{stern, stern_u64};
pub use word::{Letter, Word};
