//! Pure-difference binomial arithmetic and Gröbner bases.
//!
//! Coefficients are fixed at `+1` and `-1`: the S-binomial and the
//! reduction of two pure differences are again pure differences (or zero),
//! so no general polynomial type is needed.

pub mod binomial;
pub mod buchberger;
pub mod hilbert;
pub mod monomial;
pub mod order;

pub use binomial::{normal_form, parse_binomial, reduce_monomial, s_binomial, Binomial};
pub use buchberger::{
    buchberger, buchberger_with_stats, initial_ideal, is_autoreduced, is_groebner, reduce_basis,
    BuchbergerOptions, BuchbergerStats, GroebnerBasis, PairStrategy,
};
pub use hilbert::{hilbert_data, hilbert_numerator, HilbertData};
pub use monomial::{parse_monomial, Monomial, VariableUniverse};
pub use order::{compare, BlockOrder, TermOrder};
