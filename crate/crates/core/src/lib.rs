//! Rack and group cohomology of finite structures given by tables, with
//! exact coefficients, dendriform products on rack cochains and the
//! cochain morphism `S` from group cochains to rack cochains of `Conj(G)`.

pub mod cochain;
pub mod combinatorics;
pub mod cubical;
pub mod error;
pub mod fixtures;
pub mod linalg;
pub mod morphism;
pub mod products;
pub mod scalar;
pub mod structures;

pub use cochain::{Cochain, CochainKind, Complex, ComplexTag};
pub use error::{Error, Result};
pub use linalg::{AbelianInvariants, IntegerMatrix, Matrix};
pub use scalar::{Coefficient, CoefficientSpec, Mat2, ModInt};
pub use structures::{FiniteGroup, FiniteRack, FiniteShelf, Structure};

pub type IntCochain = Cochain<i64>;
pub type ModCochain = Cochain<ModInt>;
pub type MatCochain = Cochain<Mat2<i64>>;
