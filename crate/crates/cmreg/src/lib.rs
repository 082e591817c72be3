//! Exact computation of Castelnuovo-Mumford regularity bounds for smooth
//! projective varieties.
//!
//! Everything here is integer or rational arithmetic over arbitrary-precision
//! numbers; there is no floating point anywhere in the crate. The central
//! objects are:
//!
//! * [`hilbert`] — Hilbert polynomials of `n`-dimensional smooth varieties,
//!   stored against the binomial basis `z ↦ C(z + j - 1, j)` so that the
//!   coefficient vector is a vector of integers whose entries are the Euler
//!   characteristics of iterated hyperplane sections.
//! * [`beilinson`] — rank tables of the Beilinson-style complex attached to a
//!   sheaf on projective space whose intermediate cohomology is confined to a
//!   single degree, and the regularity bound read off from its first Chern
//!   class.
//! * [`projection`] — the numerical transform describing a smooth variety
//!   isomorphically projected to a smaller projective space, together with
//!   the range of target dimensions for which the projection is guaranteed
//!   to behave.
//! * [`bounds`] — the regularity bounds themselves, by two independent
//!   routes that are checked against each other on every call, plus closed
//!   forms for curves, surfaces and scrolls and the classical comparison
//!   bounds.
//! * [`splitting`] — splitting types of the rank-`(r - n)` bundle that
//!   controls secant behaviour, and the incompatibility test used to cap
//!   secant line length.
//! * [`cli`] — the `cmreg` command-line front end.
//!
//! The crate is deliberately paranoid: derived quantities that can be
//! computed two ways (alternating-sum bound vs. rank-table bound, recursive
//! rank entries vs. their closed form, interpolation vs. re-evaluation) are
//! computed both ways and cross-checked, returning an error or panicking on
//! mismatch rather than silently preferring one route.

pub mod beilinson;
pub mod bounds;
pub mod cli;
pub mod hilbert;
mod par;
pub mod projection;
pub mod splitting;

pub use beilinson::{ChiProfile, RankTable, ResolutionShape};
pub use bounds::{BoundRow, BoundTable, Comparisons};
pub use hilbert::{binomial, HilbertPoly, RationalPoly};
pub use projection::{Family, GuaranteeLevel, ProjectionStatus, VarietySpec};
pub use splitting::SplittingType;
