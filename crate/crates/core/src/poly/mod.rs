//! Exact polynomial arithmetic in `K[x_1..x_n, y_1..y_n]` under lex order.

mod ideal;
mod monomial;
mod polynomial;
pub mod text;

pub use ideal::{
    basis_order, buchberger, colon_contains, colon_memberships, divide, frobenius_power,
    is_groebner_basis, normal_form, not_in_bracket_m, s_polynomial, Division, IdealBasis,
};
pub use monomial::{lex_compare, var_name, Monomial};
pub use polynomial::{PolyRing, Polynomial};
