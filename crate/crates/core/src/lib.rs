pub mod algebra;
pub mod claims;
pub mod cli;
pub mod coeff;
pub mod element;
pub mod error;
pub mod expr;
pub mod groups;
pub mod gwa;
pub mod hnf;
pub mod linalg;
pub mod quantum;
pub mod skew;
pub mod verify;

pub use coeff::{Cyclotomic, MultiPoly, RatFunc, Substitution, Var};
pub use element::Element;
pub use error::{Error, Result};
