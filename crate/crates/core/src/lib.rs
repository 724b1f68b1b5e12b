//! Pairwise intersecting Minkowski arrangements of convex-body homothets.
//!
//! The crate provides:
//! - exact rational convex bodies (H/V polytopes, balls, products) with
//!   gauge norms, volumes, centroids, and symmetrals ([`body`], [`norm`],
//!   [`volume`], [`symmetral`]);
//! - arrangement verification with exact certificates ([`arrangement`]);
//! - deterministic lower-bound witnesses ([`constructions`]);
//! - randomized constructions and Monte Carlo estimators ([`probabilistic`]);
//! - closed-form upper/lower bound evaluators ([`bounds`]);
//! - simulated-annealing search for planar witnesses ([`search`]).
//!
//! Pair checks, sampling, and search restarts run data-parallel on rayon by
//! default; building with `--no-default-features` selects the sequential
//! fallback with bit-identical results.

pub mod arrangement;
pub mod body;
pub mod bounds;
pub mod constructions;
mod error;
mod exec;
pub mod golden;
pub mod hull;
mod json;
pub mod lp;
pub mod norm;
pub mod probabilistic;
pub mod rat;
mod rng;
pub mod search;
pub mod symmetral;
pub mod volume;

pub use arrangement::{Arrangement, Condition, Homothet, VerificationReport};
pub use body::{ConvexBody, Shape};
pub use bounds::BoundReport;
pub use error::{Error, Result};
pub use hull::Halfspace;
pub use probabilistic::RandomConfig;
pub use rat::{Rat, RatVec, Scalar};
pub use search::{SearchConfig, SearchMode};
