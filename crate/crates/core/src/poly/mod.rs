//! Exact sparse multivariate polynomials over the rationals, monomial
//! orders, division, Buchberger completion and ideal membership.

mod eval;
mod groebner;
mod ideal;
mod monomial;
mod polynomial;
pub mod text;
mod varset;

pub use eval::{EvalAlgebra, MatrixAlgebra, PolyAlgebra, Rationals};
pub use groebner::{
    buchberger, buchberger_with_cofactors, default_degree_cap, divide, normal_form, Division, GroebnerBasis,
};
pub use ideal::{Ideal, Membership};
pub use monomial::{MonoOrder, Monomial};
pub use polynomial::Polynomial;
pub use text::{format_polynomial, parse_polynomial};
pub use varset::{Role, Var, VarSet};
