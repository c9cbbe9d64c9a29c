//! Exact computations on Jacobian and Milnor schemes of plane curves.
//!
//! The crate is organized bottom-up:
//!
//! * [`algebra`]: rationals, monomials, orders, polynomials, binary forms.
//! * [`expr`]: the text syntax for polynomials.
//! * [`groebner`]: division, S-polynomials, Buchberger, monomial ideals.
//! * [`zerodim`]: lengths of zero-dimensional schemes, local and global.
//! * [`singularity`]: per-point invariants and the double-point classifier.
//! * [`family`]: closed forms for the curves `x^a + y^a + x^b y^c`.

pub mod algebra;
pub mod error;
pub mod expr;
pub mod family;
pub mod groebner;
pub mod singularity;
pub mod zerodim;

pub use algebra::{
    binary_form_resultant, squarefree_binary_form, Monomial, MonomialOrder, OrderKind, Polynomial, Scalar,
};
pub use error::{Error, Result};
pub use expr::{parse_poly, render_poly, Ambient, ExprSyntaxError};
pub use family::{
    family_case, family_polynomial, membership_denominator, min_tjurina, predicted_gb, predicted_lt_gens, scan_params,
    tjurina_formula, FamilyCase, FamilyParams, TWO_TAIL_FIXTURES,
};
pub use groebner::{buchberger, divide, leading_term_ideal, s_polynomial, GroebnerBasis, MonomialIdeal};

pub use singularity::{
    analyze, classify_double_point, classify_double_point_traced, embedding_dimension, is_ordinary, is_slci,
    k_symmetry_order, local_milnor, local_tjurina, multiplicity_at, nodes_only_check, Classification,
    ClassificationOutcome, Point, SingularityReport,
};
pub use zerodim::{
    global_tjurina, global_tjurina_detailed, hilbert_function, line_restriction_length, local_length_at_origin,
    local_length_oracle, staircase_length, truncated_colength, truncation_cap, GlobalTjurina, HilbertFunction,
    LengthResult, Line, TruncationTrace,
};
