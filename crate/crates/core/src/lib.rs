//! Online actor-critic (ADHDP) training on small control tasks, plus tools for
//! reconstructing and quantifying the critic loss landscape around the recorded
//! weight trajectory.
//!
//! The crate is organized around the pipeline:
//!
//! 1. [`env`] — deterministic physics for the cart-pole and spacecraft-attitude
//!    systems, failure detection, stage costs, and a PD baseline controller.
//! 2. [`net`] — one-hidden-layer perceptrons with hand-derived gradients.
//! 3. [`adhdp`] — the online TD training loop and its episode/weight logging.
//! 4. [`landscape`] — 2-D projection planes (PCA or random orthogonal), frozen
//!    reference batches, and match-loss grids with the projected weight path.
//! 5. [`metrics`] — landscape indices (sharpness, basin area, anisotropy) and
//!    the normalized finite-horizon performance index.

pub mod adhdp;
pub mod env;
pub mod error;
pub mod landscape;
pub mod metrics;
pub mod net;

pub use error::{Error, Result};
