//! Semi-analytic series solutions of the foam drainage equation
//!
//! ```text
//! u_t + 2 u² u_x − (u_x)² − ½ u u_xx = 0,        A = u²
//! ```
//!
//! Three solvers share one truncated Taylor-series substrate:
//!
//! * [`rdtm`]: the reduced differential transform recurrence for the
//!   t-spectra `U_k(x)`.
//! * [`decomposition`]: Adomian (ADM) and Laplace (LDM) decomposition.
//! * [`harness`]: error tables, figure curves, timings and operation counts.
//!
//! Every x-dependent quantity is a [`TruncatedSeries`] expanded about the
//! point where the answer is wanted, so values at the expansion center are
//! exact up to rounding. All numerics are generic over [`Scalar`]; the
//! aliases below pick the usual precisions.

pub mod cli;
mod dd;
pub mod decomposition;
mod error;
pub mod harness;
pub mod model;
pub mod rdtm;
mod scalar;
pub mod series;

pub use dd::DoubleDouble;
pub use error::{Error, Result};
pub use scalar::Scalar;
pub use series::TruncatedSeries;

pub use decomposition::{LaplaceImage, TPolyComponent};
pub use model::{Problem, ProblemKind};
pub use rdtm::SpectrumSequence;

/// Double precision series.
pub type Series = TruncatedSeries<f64>;
/// Single precision series.
pub type Series32 = TruncatedSeries<f32>;
/// Double-double (~106 bit mantissa) series, for finite-difference checks
/// that need more than binary64 resolution.
pub type SeriesDd = TruncatedSeries<DoubleDouble>;

pub type Spectra = SpectrumSequence<f64>;
pub type SpectraDd = SpectrumSequence<DoubleDouble>;
pub type Component = TPolyComponent<f64>;
