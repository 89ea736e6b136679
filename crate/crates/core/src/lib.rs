//! Exact-arithmetic kernel for tilt stability on Fano threefolds of Picard
//! rank one.
//!
//! Every quantity is an exact rational or an element of a real quadratic
//! field `Q(sqrt(D))`; there is no floating point anywhere in this crate, so
//! every comparison, wall equation, and inequality check is a theorem about
//! the inputs rather than an approximation.
//!
//! The layers, bottom to top:
//!
//! - [`exactnum`]: arbitrary-precision rationals and canonical-form
//!   quadratic numbers `a + b sqrt(D)` with exact sign determination.
//! - [`fano`]: the classification of rank-one Fano threefolds by index and
//!   degree, with their Riemann-Roch data.
//! - [`chern`]: Chern characters in degree coordinates, twists, slopes,
//!   discriminants, and the Euler pairing.
//! - [`charplane`]: the projectivized character plane, reduced points,
//!   kernel points of tilt charges, and the exclusion regions `R_m`.
//! - [`tilt`]: tilt-stability parameters `(alpha, beta)`, reduced and full
//!   central charges, and the slope `nu`.
//! - [`walls`]: numerical walls for a fixed character and their exact
//!   enumeration over a bounded lattice of candidate destabilizers.
//! - [`bgcheck`]: the `ch3`-at-`beta-bar` inequality, Euler-characteristic
//!   expansions against line bundles, positivity certificates, the sheaf
//!   region bound, and the extension iteration toward it.
//!
//! The crate is `no_std` (with `alloc`); all IO lives in companion crates.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bgcheck;
pub mod charplane;
pub mod chern;
pub mod error;
pub mod exactnum;
pub mod fano;
pub mod tilt;
pub mod walls;

pub use bgcheck::{
    check_bg, chi_line_expansion, extension_iteration, first_n_reaching_bound,
    index_one_certificate, sheaf_bound_check, BGReport, ChiExpansion, IndexOneCertificate,
    SheafBoundReport,
};
pub use charplane::{
    collinear, kernel_point, reduced_point, region_membership, slope_compare, tangent_line_at,
    Binding, Membership, PlaneLine, PlanePoint, RegionSpec, RegionStatus, SlopeOrder,
};
pub use chern::{char_product, chi, chi_pair, line_bundle_char, CharVec, ExtSlope, QuadCharVec};
pub use error::{Error, Result};
pub use exactnum::{rat, rat_int, sqrt_decompose, Quad, Rat};
pub use fano::{FanoData, HrrCoefficients};
pub use tilt::{full_charge, nu, reduced_charge, FullCharge, ReducedCharge, TiltParam, TiltSlope};
pub use walls::{
    enumerate_walls, numerical_wall, Wall, WallGroup, WallScanReport, DEFAULT_LATTICE,
};
