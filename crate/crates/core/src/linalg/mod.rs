//! Exact integer and prime-field linear algebra.

mod invariants;
mod matrix;
mod modp;
mod snf;

pub use invariants::{cohomology_invariants, cohomology_invariants_mod, AbelianInvariants};
pub use matrix::{Entry, IntegerMatrix, Matrix};
pub use modp::{is_prime, kernel_mod_p, rank_mod_p};
pub use snf::{invariant_factors, snf, SnfResult};
