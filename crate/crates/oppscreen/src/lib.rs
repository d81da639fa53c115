//! Detection of opportunity emotions in finance micro-blog posts.
//!
//! The crate covers the full path from raw annotated tweets to ranked
//! opportunity flags:
//!
//! - [`corpus`] — dataset loading, annotation aggregation, stratified folds.
//! - [`preprocess`] — tweet normalization: marker extraction, hashtag
//!   splitting, spelling correction, quantity/laughter tagging, stop-word
//!   removal and lemmatization.
//! - [`features`] — char/word n-gram vocabularies, dense counter features,
//!   chi-squared scoring and percentile selection.
//! - [`learners`] — from-scratch binary classifiers (gradient-descent
//!   logistic, CART, random forest, linear SVC), isotonic calibration and
//!   grid search.
//! - [`cascade`] — the stacked classifier with decision-depth abstention.
//! - [`evaluation`] — confusion matrices, opportunity precision and the
//!   tolerance metrics, cross-validated experiment protocols, ticker
//!   histograms.
//!
//! The numeric core is generic over the scalar type through [`Scalar`];
//! the aliases below pin `f64`, which is what the CLI uses.

pub mod cascade;
pub mod corpus;
pub mod error;
pub mod evaluation;
pub mod features;
pub mod learners;
pub mod preprocess;
mod scalar;
pub(crate) mod seeding;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Cascade model over `f64`, the default scalar.
pub type CascadeModel = cascade::CascadeModel<f64>;
/// Trained binary classifier over `f64`.
pub type TrainedModel = learners::TrainedModel<f64>;
/// Isotonic calibration map over `f64`.
pub type IsotonicMap = learners::IsotonicMap<f64>;
