//! Bivariate copula modelling for a mixed ordinal-continuous pair.
//!
//! The crate covers the full workflow for a pair `(X, Y)` where `X` is
//! ordinal with a few categories and `Y` is continuous:
//!
//! * [`sample`] — data model: category bookkeeping, pseudo-observations,
//!   orientation, rank statistics.
//! * [`latent`] — polyserial correlation and latent normal-score
//!   generation for visualising the ordinal margin on a continuous scale.
//! * [`copulas`] — parametric bivariate copula families (CDFs and
//!   conditional h-functions) plus survival rotations.
//! * [`fit`] — maximum likelihood on the mixed rectangle likelihood,
//!   AIC/BIC selection, and the empirical beta copula.
//! * [`diagnose`] — conditional CDFs/quantiles given each ordinal
//!   category and conditional Q-Q panels.
//! * [`models`] — reference probability models (location-scale mixtures
//!   and ordinal probit/logit regressions) with exact samplers.
//! * [`kl`] — Kullback-Leibler divergence of copula-induced models from a
//!   reference model, family-ladder search, and batch benchmark tables.
//! * [`numerics`] — special functions, quadrature, root finding, and the
//!   derivative-free optimizer everything else is built on.

pub mod copulas;
pub mod diagnose;
pub mod fit;
pub mod kl;
pub mod latent;
pub mod models;
pub mod numerics;
pub mod sample;

pub use copulas::{CopulaCdf, CopulaFamily, CopulaSpec, Family, Rotation};
pub use fit::{EmpiricalBetaCopula, FitResult};
pub use sample::{MixedPairSample, PseudoObs};
