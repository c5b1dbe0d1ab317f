//! Exact computations in weighted polynomial rings over the rationals.

pub mod error;
pub mod deformation;
pub mod formats;
pub mod groebner;
pub mod ideal;
pub mod linalg;
pub mod parse;
pub mod poly;
pub mod series;
pub mod syzygy;

pub use error::{DeformationError, FormatError, IdealError, PolyError};
pub use parse::parse_polynomial;
pub use poly::{Coeff, Monomial, Polynomial, RingRef, WeightedDegree, WeightedRing};
pub use series::{hilbert_series_ci, RationalSeries};
pub use ideal::GradedIdeal;
pub use syzygy::{syzygy_module, verify_syzygy, SyzygyVector};
