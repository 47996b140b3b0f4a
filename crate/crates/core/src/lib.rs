//! Gröbner–Shirshov bases for free associative conformal algebras `C(B, N)`
//! with exact rational coefficients.

pub mod error;
pub mod gsb;
pub mod lie;
pub mod normal;
pub mod poly;
pub mod signature;
pub mod text;
pub mod word;

pub use error::{Error, Result};
pub use normal::{apply_d, locality_bound, mult, normalize, ProductCache, RawExpr};
pub use poly::{Coeff, Polynomial};
pub use signature::{Family, FamilyId, Generator, IndexOrder, Signature};
pub use word::{Letter, NormalWord};
