//! Exact polynomial arithmetic over the rationals.

pub mod binary_form;
pub mod monomial;
pub mod poly;
pub mod scalar;
pub mod univariate;

pub use binary_form::{binary_form_resultant, squarefree_binary_form};
pub use monomial::{Monomial, MonomialOrder, OrderKind, MAX_VARS};
pub use poly::Polynomial;
pub use scalar::Scalar;
