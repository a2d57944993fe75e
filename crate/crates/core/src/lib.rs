//! Exact computations in the Jonquières subgroup of the planar Cremona
//! group over the rationals.
//!
//! * [`rat`], [`poly`], [`ratfunc`]: exact scalars, polynomials and rational
//!   functions, including the shift and discrete difference operators.
//! * [`jonquieres`]: elements `(x, y) -> (x + t, g(x) y + f(x))`, their group
//!   law, action, order and shape.
//! * [`words`] and [`parse`]: formal words, commutators, and the text syntax.
//! * [`certificates`]: nilpotency class of `Gamma_n`, derived length of
//!   `G = <s_1, alpha_1, mu_X>`, and the linearity obstruction.
//! * [`finite_obstruction`]: the monomial copy of `(Z/p)^2 x| Z` and the
//!   Heisenberg group mod p.
//! * [`elementary`]: elementary automorphisms of the plane and their
//!   faithful linearization.

pub mod certificates;
pub mod elementary;
pub mod error;
pub mod finite_obstruction;
pub mod jonquieres;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod ratfunc;
pub mod sampling;
pub mod words;

pub use certificates::{
    derived_length_g, gamma_chain_check, gamma_class, min_dim_lower_bound, nonlinearity_report,
    Certificate, ClassCertificate, NonlinearityReport, SolvabilityCertificate, Witness,
};
pub use elementary::{linearize, linearize_check, ElementaryAut, Matrix};
pub use error::Error;
pub use finite_obstruction::{birkhoff_min_dim, heisenberg_profile, GroupProfile, MonomialElement};
pub use jonquieres::{Form, GeneratorKind, JonqElement, Order};
pub use parse::{eval_word, parse_poly, parse_ratfunc, parse_word};
pub use poly::{Degree, Poly};
pub use rat::Rat;
pub use ratfunc::RatFunc;
pub use words::{commutator, iterated_commutator, Assignment, Letter, Word};
