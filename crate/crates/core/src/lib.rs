//! Desk-scale simulation of a spin-based-amplifier search for exotic spin-
//! and velocity-dependent interactions.
//!
//! The crate models the full measurement chain: a rotating unpolarized mass
//! source ([`source_geometry`]), the pseudo-magnetic field it generates at a
//! vapor cell ([`exotic_fields`]), resonant amplification by hyperpolarized
//! nuclear spins ([`spin_amplifier`]), and lock-in extraction of the coupling
//! strength with statistics, systematics and exclusion curves
//! ([`signal_pipeline`]). [`cli_io`] binds the stages into config-driven,
//! reproducible pipelines.
//!
//! All physical quantities are strict SI internally. Every operation is a
//! pure function over immutable value types; evaluation may be freely
//! partitioned across workers, and sums over voxels run in a fixed order
//! with compensated summation so results are reproducible bit-for-bit.

pub mod cli_io;
pub mod constants;
pub mod exotic_fields;
pub mod fit;
pub mod signal_pipeline;
pub mod source_geometry;
pub mod spin_amplifier;
pub mod vec3;

pub use constants::PhysicalConstants;
pub use exotic_fields::{FieldTimeSeries, HarmonicSpectrum, Interaction};
pub use signal_pipeline::{CalibrationSet, ConstraintCurve, CouplingEstimate, SignalTrace};
pub use source_geometry::{Pose, RotationDirection, RotationSpec, SourceSpec, VoxelCloud};
pub use spin_amplifier::{AmplifierParams, LineshapeModel, SpinState};
pub use vec3::Vec3;
