//! Exact arithmetic over Q, Z and small prime fields.

pub mod modular;
pub mod parse;
pub mod poly;
pub mod quadratic;
pub mod rational;
pub mod resultant;
pub mod ring;
pub mod roots;
pub mod triangular;

pub use parse::parse_poly;
pub use poly::{BiPoly, Poly, QPoly};
pub use quadratic::{QuadraticElement, QuadraticRoots, RootSign};
pub use rational::{int, parse_rational, rat, Rational};
pub use resultant::{poly_resultant, resultant, Var};
pub use ring::{Field, Fp, QAlgebra, Ring};
pub use roots::{distinct_root_count, rational_roots, squarefree_part};
pub use triangular::Decomposition;
