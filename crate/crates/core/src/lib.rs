//! Reflection points on circular and conic mirrors.
//!
//! The crate finds the reflection points of Alhazen's problem in the plane
//! (identified with `ℂ`):
//!
//! * [`disk`]: the unit-circle mirror, through the reflection quartic and
//!   through the circle-of-Apollonius quartic, with discriminant-based root
//!   classification.
//! * [`caustic`]: the catacaustic of the unit circle for a radiant point,
//!   which separates the two- and four-reflection regimes.
//! * [`conic`]: arbitrary conic mirrors, reduced to the frame where the two
//!   points are `±1` and solved through a degree six tangency polynomial.
//! * [`smetric`]: the triangular ratio metric on disk and conic domains and
//!   its level sets.
//!
//! Everything here is `no_std` (with `alloc`) and free of IO.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod caustic;
pub mod conic;
pub mod disk;
mod error;
pub mod poly;
pub mod smetric;

pub use error::{Error, Result};
pub use num_complex::Complex64 as C64;
pub use poly::{Poly, RootSet};

/// Version of this crate, echoed in serialized results.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Imaginary unit.
pub const I: C64 = C64::new(0.0, 1.0);

#[inline]
pub(crate) fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

#[inline]
pub(crate) fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
