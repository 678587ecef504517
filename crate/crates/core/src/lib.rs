//! Primality certificates for knots from knot Floer data.
//!
//! * [`laurent`]: exact bivariate Laurent polynomials and the symmetry
//!   `c(i, j) = c(-i, j - 2i)`.
//! * [`factor`]: integer factorization and symmetric factorizations.
//! * [`barred`]: filtered complexes over the two-element field and their
//!   bar-complexes.
//! * [`engine`]: knot files, verdicts, batch runs and the bundled corpus.

pub mod barred;
pub mod engine;
pub mod error;
pub mod factor;
pub mod laurent;

pub use barred::{BarComplex, BarCounts, FilteredComplex, Generator};
pub use engine::{analyze, KnotInput, Method, Status, Verdict};
pub use error::{Error, Result};
pub use factor::KnownKnot;
pub use laurent::{BivariateLaurent, CanonicalForm, MonomialUnit};
