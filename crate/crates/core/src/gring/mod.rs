//! Exact graded polynomial kernel over ℚ(√−1).

mod ade;
mod coef;
mod parse;
mod poly;
mod weight;

pub use ade::{ade_polynomial, AdeError, AdeType};
pub use coef::GaussRat;
pub use parse::{parse_poly, ParseError};
pub use poly::{DegreeError, Mono, Poly};
pub use weight::{
    basis_generating_counts, milnor_poincare, MilnorError, MilnorPoincare, RegularityReport,
    WeightError, WeightSystem,
};
