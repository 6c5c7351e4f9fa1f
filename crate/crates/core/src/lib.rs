//! Radial shell method for spherically symmetric Vlasov-Poisson (VP) and
//! relativistic Vlasov-Poisson (RVP) systems in the repulsive (plasma) case.
//!
//! The crate builds focusing solutions end to end:
//!
//! * [`initdata`] derives the construction parameters from target bounds
//!   (`C1`, `C2`, radii `a < b < c`), evaluates the explicit compactly
//!   supported initial distribution, and samples it into weighted spherical
//!   shells;
//! * [`dynamics`] integrates the characteristic ODEs with the self-consistent
//!   radial field (enclosed charge via sort + prefix sum) using classical RK4;
//! * [`bounds`] evaluates the closed-form turning-time and radius-envelope
//!   estimates used to certify trajectories;
//! * [`observables`] reconstructs the charge density, the radial field and
//!   their sup norms from a shell ensemble.
//!
//! All numerics are generic over the floating-point type through
//! [`scalar::Scalar`]; the crate root exports `f64` aliases for the common
//! types.

pub mod bounds;
pub mod dynamics;
pub mod initdata;
pub mod observables;
pub mod phase;
pub mod profiles;
pub mod quad;
pub mod scalar;

pub use phase::SystemKind;
pub use scalar::Scalar;

/// Double-precision aliases for the main library types.
pub type PhasePoint64 = phase::PhasePoint<f64>;
pub type Shell64 = initdata::Shell<f64>;
pub type Ensemble64 = initdata::Ensemble<f64>;
pub type ParameterSet64 = initdata::ParameterSet<f64>;
pub type TargetSpec64 = initdata::TargetSpec<f64>;
