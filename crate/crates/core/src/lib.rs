//! Sign patterns, root profiles and hyperbolicity for real monic polynomials,
//! in exact rational arithmetic.
//!
//! * [`poly`]: polynomials, sign patterns, parsing.
//! * [`root_count`]: Sturm counts, root profiles, Descartes bounds.
//! * [`discriminant`]: resultants and membership tests.
//! * [`witness`]: verified example polynomials for each sign-pattern class.
//! * [`homotopy`]: the retraction to lower degree and path certificates.
//! * [`strata`]: multiplicity strata and constant-term fibers.

pub mod discriminant;
pub mod error;
pub mod homotopy;
pub mod poly;
pub mod root_count;
pub mod sample;
pub mod strata;
pub mod witness;

pub use error::{Error, Result};
pub use poly::{int, rat, DensePoly, Polynomial, Rational, Sign, SignPattern};
pub use root_count::{root_profile, Bound, RootProfile};
