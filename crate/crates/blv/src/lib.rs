//! Long-tailed ordinal classification workbench built around the Balancing
//! Logit Variation (BLV) training objective.
//!
//! The crate provides:
//!
//! - [`numerics`]: deterministic f64 kernels (stable softmax, counter-based
//!   RNG, PCA) shared by everything else
//! - [`data`]: dataset ingestion (JSON-lines), per-class statistics and
//!   frequency weights, stratified splitting, and a synthetic long-tailed
//!   Gaussian-cluster generator
//! - [`losses`]: BLV loss plus cross-entropy and focal baselines, each with
//!   exact analytic gradients with respect to the logits
//! - [`model`]: mean-pooling + dropout + linear classifier head with manual
//!   backpropagation, Adam/SGD, gradient accumulation, and checkpointing
//! - [`metrics`]: PCC, RMSE, accuracy, adjacent accuracy (standard and
//!   macro-averaged), macro F1, and confusion matrices
//! - [`viz`]: exact t-SNE with perplexity bisection, a PCA fallback, and
//!   plot-ready CSV export
//! - [`experiment`]: the multi-seed, multi-loss comparison harness
//!
//! All randomness flows through [`numerics::Rng`], a named counter-based
//! generator, so every public operation is reproducible given its seed.

pub mod data;
pub mod error;
pub mod experiment;
pub mod losses;
pub mod metrics;
pub mod model;
pub mod numerics;
pub mod viz;

pub use error::{Error, Result};
