//! Semi-supervised heading regression with temporal-continuity losses.
//!
//! The crate trains a small feedforward regressor to predict a planar
//! heading angle, encoded as `(cos θ, sin θ)`, from per-frame feature
//! vectors. Labels are scarce; the unsupervised signal is temporal
//! continuity within sequences, enforced either by a similarity-weighted
//! pairwise hinge or by a triplet ranking hinge on output distances.
//!
//! Modules:
//! - [`angular`]: angle ↔ unit-vector codec and evaluation metrics.
//! - [`losses`]: supervised MSE, continuity losses, and the λ-combined
//!   objective.
//! - [`regressor`]: MLP forward pass, exact analytic gradients, Adam
//!   optimizer, checkpoint I/O.
//! - [`synth`]: synthetic sequential datasets (trajectories, Fourier
//!   feature rendering, domain shift, label masks, file I/O).
//! - [`geometry`]: pinhole ray-casting onto the ground plane and
//!   image-to-world heading conversion.
//! - [`trainer`]: training/fine-tuning loops, experiment presets, circle
//!   evaluation.
//!
//! All randomness flows through explicitly seeded ChaCha streams; every
//! run is bitwise reproducible from its configuration.

pub mod angular;
pub mod error;
pub mod geometry;
pub mod losses;
pub mod regressor;
pub mod stream;
pub mod synth;
pub mod trainer;

pub use angular::{HeadingEncoding, MetricsReport};
pub use error::{Error, Result};
pub use geometry::{ActorPose, BoundingBox, CameraModel};
pub use losses::{LossConfig, LossVariant, Triplet};
pub use regressor::{
    Activation, Gradients, LossBreakdown, OptimizerSettings, OptimizerState, RegressorConfig,
    RegressorParams, SequenceBatch,
};
pub use synth::{
    Dataset, DatasetConfig, DomainSpec, LabeledSample, SampleRecord, SampleSequence,
    TrajectoryKind, TrajectoryPoint, UnlabeledSequence,
};
pub use trainer::{TrainConfig, TrainHistory, TrainSeeds};
