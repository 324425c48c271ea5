//! Exact connectedness analysis for planar self-affine sets.
//!
//! The sets under study are the attractors `T` of `A T = T + D v`, where `A`
//! is an expanding integer matrix with characteristic polynomial
//! `x^2 + b x + c`, `v` is a vector with `{v, Av}` linearly independent, and
//! `D` is a finite set of integer multiples of `v` (a collinear digit set).
//! Whether `T` is connected depends only on `(b, c)` and the digit multiples.
//!
//! Two independent decision routes are provided: closed-form threshold
//! criteria over the integer parameters ([`criteria`]), and an exact
//! reachability oracle over a finite lattice transition system
//! ([`neighbors`]). [`render`] rasterizes the attractors and counts
//! 8-connected components, and [`sweep`] runs the two routes against each
//! other over parameter grids.
//!
//! All decision paths use integer or rational arithmetic only; floating
//! point is confined to rendering and to cross-checks.

pub mod algebra;
pub mod criteria;
pub mod neighbors;
pub mod render;
pub mod series;
pub mod sweep;

pub use algebra::{LatticePoint, Quadratic};
pub use criteria::{
    classify_consecutive, classify_nonconsecutive, hrp_expansion, verify_expansion,
    CollinearDigitSet, HrpExpansion, Status, Verdict,
};
pub use neighbors::{
    enumerate_neighbors, hata_connected, is_member, state_box, survivor_set, DifferenceSet,
    OracleError, SurvivorSet,
};
pub use render::{rasterize, rasterize_seq, RasterConfig, RasterResult, FIGURE_PANELS};
pub use series::{tilde_sums, SeriesBounds};
pub use sweep::{theorem_oracle_sweep, theorem_oracle_sweep_seq, SweepRange, SweepRow};
