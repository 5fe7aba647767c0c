//! Extended unpolarized mass sources under rigid rotation.
//!
//! A source is a rectangular box of uniform nucleon density, described in a
//! body frame whose origin sits on the rotation pivot. [`build_voxel_cloud`]
//! discretizes the box into a regular grid of nucleon-weighted sample points;
//! [`pose_at`] rotates the cloud into the lab frame and attaches rigid-body
//! velocities. The lab origin is the vapor-cell center.

use crate::vec3::Vec3;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("voxel resolution {resolution} m must be positive and no larger than the smallest box edge {edge} m")]
    InvalidResolution { resolution: f64, edge: f64 },
    #[error("box edges must be positive, got ({0}, {1}, {2}) m")]
    InvalidEdges(f64, f64, f64),
    #[error("mass and nucleon count must be positive (mass {mass} kg, nucleons {nucleons})")]
    InvalidAmounts { mass: f64, nucleons: f64 },
    #[error("rotation plane normal must be a unit vector, |n| = {0}")]
    NonUnitAxis(f64),
    #[error("rotation frequency must be positive, got {0} Hz")]
    InvalidFrequency(f64),
}

/// Sense of the source rotation. Reversing the direction flips the sign of
/// the time-dependent part of the rotation angle and therefore of every
/// velocity: positions obey `pos_ccw(t) = pos_cw(-t)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RotationDirection {
    Cw,
    Ccw,
}

impl RotationDirection {
    /// Sign of dθ/dt.
    pub fn signum(self) -> f64 {
        match self {
            RotationDirection::Cw => 1.0,
            RotationDirection::Ccw => -1.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RotationDirection::Cw => "CW",
            RotationDirection::Ccw => "CCW",
        }
    }
}

/// Rectangular-box mass source, uniform nucleon density.
#[derive(Debug, Clone, Copy)]
pub struct SourceSpec {
    /// Edge lengths of the box (m), along the body-frame axes.
    pub edges: Vec3,
    /// Body-frame offset of the box center from the rotation pivot (m).
    pub offset: Vec3,
    /// Total mass (kg).
    pub mass: f64,
    /// Total nucleon count (dimensionless).
    pub nucleons: f64,
}

impl SourceSpec {
    pub fn new(edges: Vec3, offset: Vec3, mass: f64, nucleons: f64) -> Result<Self, GeometryError> {
        if !(edges.x > 0.0 && edges.y > 0.0 && edges.z > 0.0) {
            return Err(GeometryError::InvalidEdges(edges.x, edges.y, edges.z));
        }
        if !(mass > 0.0 && nucleons > 0.0) {
            return Err(GeometryError::InvalidAmounts { mass, nucleons });
        }
        Ok(SourceSpec { edges, offset, mass, nucleons })
    }

    pub fn volume(&self) -> f64 {
        self.edges.x * self.edges.y * self.edges.z
    }

    /// Nucleons per cubic meter, uniform over the box.
    pub fn nucleon_density(&self) -> f64 {
        self.nucleons / self.volume()
    }

    pub fn smallest_edge(&self) -> f64 {
        self.edges.x.min(self.edges.y).min(self.edges.z)
    }
}

/// Pivot position, rotation axis and rate. The axis is the normal of the
/// rotation plane (ŷ for rotation in xz).
#[derive(Debug, Clone, Copy)]
pub struct RotationSpec {
    /// Pivot position in the lab frame (m), origin at the vapor-cell center.
    pub pivot: Vec3,
    /// Unit normal of the rotation plane.
    pub axis: Vec3,
    /// Rotation frequency ν (Hz).
    pub frequency: f64,
    pub direction: RotationDirection,
    /// Rotation angle at t = 0 (rad).
    pub initial_phase: f64,
}

impl RotationSpec {
    pub fn new(
        pivot: Vec3,
        axis: Vec3,
        frequency: f64,
        direction: RotationDirection,
        initial_phase: f64,
    ) -> Result<Self, GeometryError> {
        let n = axis.norm();
        if (n - 1.0).abs() > 1e-12 {
            return Err(GeometryError::NonUnitAxis(n));
        }
        if !(frequency > 0.0) {
            return Err(GeometryError::InvalidFrequency(frequency));
        }
        Ok(RotationSpec { pivot, axis, frequency, direction, initial_phase })
    }

    /// Angular velocity vector ω (rad/s) in the lab frame.
    pub fn angular_velocity(&self) -> Vec3 {
        self.axis * (self.direction.signum() * 2.0 * std::f64::consts::PI * self.frequency)
    }

    pub fn period(&self) -> f64 {
        1.0 / self.frequency
    }

    /// Same rotation with the direction reversed.
    pub fn reversed(&self) -> RotationSpec {
        RotationSpec {
            direction: match self.direction {
                RotationDirection::Cw => RotationDirection::Ccw,
                RotationDirection::Ccw => RotationDirection::Cw,
            },
            ..*self
        }
    }
}

/// A mass source discretized into nucleon-count-weighted sample points,
/// positions in the body frame (origin at the pivot).
#[derive(Debug, Clone)]
pub struct VoxelCloud {
    pub positions: Vec<Vec3>,
    pub nucleons: Vec<f64>,
    /// Requested grid resolution (m); actual cell widths are ≤ this.
    pub resolution: f64,
}

impl VoxelCloud {
    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn total_nucleons(&self) -> f64 {
        self.nucleons.iter().sum()
    }
}

/// Lab-frame snapshot of a rotating cloud.
#[derive(Debug, Clone)]
pub struct Pose {
    pub time: f64,
    /// Rotation angle θ(t) (rad).
    pub angle: f64,
    pub positions: Vec<Vec3>,
    pub velocities: Vec<Vec3>,
}

/// Discretize a box source into a regular axis-aligned grid of voxels.
///
/// Each axis is subdivided into `ceil(edge / resolution)` equal cells, so
/// cell widths never exceed the requested resolution, the grid is symmetric
/// about the box center, and the per-voxel nucleon count (density × cell
/// volume) conserves the total exactly.
pub fn build_voxel_cloud(spec: &SourceSpec, resolution: f64) -> Result<VoxelCloud, GeometryError> {
    let smallest = spec.smallest_edge();
    if !(resolution > 0.0) || resolution > smallest * (1.0 + 1e-12) {
        return Err(GeometryError::InvalidResolution { resolution, edge: smallest });
    }

    let cells = |edge: f64| -> usize { ((edge / resolution) - 1e-9).ceil().max(1.0) as usize };
    let (nx, ny, nz) = (cells(spec.edges.x), cells(spec.edges.y), cells(spec.edges.z));
    let (wx, wy, wz) = (
        spec.edges.x / nx as f64,
        spec.edges.y / ny as f64,
        spec.edges.z / nz as f64,
    );

    let count = spec.nucleons / (nx * ny * nz) as f64;
    let mut positions = Vec::with_capacity(nx * ny * nz);
    let mut nucleons = Vec::with_capacity(nx * ny * nz);
    for ix in 0..nx {
        let x = (ix as f64 + 0.5) * wx - spec.edges.x / 2.0;
        for iy in 0..ny {
            let y = (iy as f64 + 0.5) * wy - spec.edges.y / 2.0;
            for iz in 0..nz {
                let z = (iz as f64 + 0.5) * wz - spec.edges.z / 2.0;
                positions.push(spec.offset + Vec3::new(x, y, z));
                nucleons.push(count);
            }
        }
    }
    Ok(VoxelCloud { positions, nucleons, resolution })
}

/// Rotation angle θ(t) = φ₀ ± 2πνt, sign by direction.
pub fn rotation_angle(rotation: &RotationSpec, t: f64) -> f64 {
    rotation.initial_phase
        + rotation.direction.signum() * 2.0 * std::f64::consts::PI * rotation.frequency * t
}

/// Rodrigues rotation of `v` about unit `axis` by `angle`.
fn rotate_about_axis(axis: Vec3, angle: f64, v: Vec3) -> Vec3 {
    let (s, c) = angle.sin_cos();
    v * c + axis.cross(v) * s + axis * (axis.dot(v) * (1.0 - c))
}

/// Lab-frame pose of the cloud at time `t`: every voxel rotated about the
/// pivot axis by θ(t), with rigid-body velocity ω × (position − pivot).
pub fn pose_at(cloud: &VoxelCloud, rotation: &RotationSpec, t: f64) -> Pose {
    let angle = rotation_angle(rotation, t);
    let omega = rotation.angular_velocity();
    let mut positions = Vec::with_capacity(cloud.len());
    let mut velocities = Vec::with_capacity(cloud.len());
    for &p in &cloud.positions {
        let rel = rotate_about_axis(rotation.axis, angle, p);
        positions.push(rotation.pivot + rel);
        velocities.push(omega.cross(rel));
    }
    Pose { time: t, angle, positions, velocities }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn bgo_spec() -> SourceSpec {
        SourceSpec::new(
            Vec3::new(0.025, 0.025, 0.025),
            Vec3::new(0.0, 0.0, -0.2188),
            0.11234,
            6.71e25,
        )
        .unwrap()
    }

    fn paper_rotation(direction: RotationDirection) -> RotationSpec {
        RotationSpec::new(
            Vec3::new(6.0e-3, 3.4e-3, 583.2e-3),
            Vec3::Y,
            4.997,
            direction,
            0.0,
        )
        .unwrap()
    }

    #[test]
    fn exact_subdivision_of_bgo_cube() {
        // 25 mm cube at 12.5 mm -> 8 voxels of 6.71e25 / 8 nucleons each.
        let cloud = build_voxel_cloud(&bgo_spec(), 12.5e-3).unwrap();
        assert_eq!(cloud.len(), 8);
        for &n in &cloud.nucleons {
            assert!((n - 8.3875e24).abs() / 8.3875e24 < 1e-12);
        }
    }

    #[test]
    fn single_voxel_at_box_center() {
        let spec = bgo_spec();
        let cloud = build_voxel_cloud(&spec, 0.025).unwrap();
        assert_eq!(cloud.len(), 1);
        assert_eq!(cloud.positions[0], spec.offset);
        assert!((cloud.total_nucleons() - spec.nucleons).abs() / spec.nucleons < 1e-12);
    }

    #[test]
    fn rod_conservation_against_analytic_density() {
        let rod = SourceSpec::new(
            Vec3::new(15.2e-3, 30.5e-3, 487.6e-3),
            Vec3::ZERO,
            0.61034,
            3.64e26,
        )
        .unwrap();
        let cloud = build_voxel_cloud(&rod, 7.6e-3).unwrap();
        // Cell counts per axis and the per-voxel load from the closed-form
        // density rho = N / V.
        assert_eq!(cloud.len(), 2 * 5 * 65);
        let rho = rod.nucleon_density();
        let cell_volume = (15.2e-3 / 2.0) * (30.5e-3 / 5.0) * (487.6e-3 / 65.0);
        for &n in &cloud.nucleons {
            assert!((n - rho * cell_volume).abs() / n < 1e-12);
        }
        let total = cloud.total_nucleons();
        assert!((total - rod.nucleons).abs() / rod.nucleons < 1e-9);
    }

    #[test]
    fn voxel_centers_inside_box() {
        let spec = bgo_spec();
        let cloud = build_voxel_cloud(&spec, 4.0e-3).unwrap();
        for p in &cloud.positions {
            let d = *p - spec.offset;
            assert!(d.x.abs() < spec.edges.x / 2.0);
            assert!(d.y.abs() < spec.edges.y / 2.0);
            assert!(d.z.abs() < spec.edges.z / 2.0);
        }
    }

    #[test]
    fn oversized_resolution_rejected() {
        assert!(matches!(
            build_voxel_cloud(&bgo_spec(), 0.026),
            Err(GeometryError::InvalidResolution { .. })
        ));
    }

    #[test]
    fn rotation_angle_signs() {
        let cw = paper_rotation(RotationDirection::Cw);
        let ccw = paper_rotation(RotationDirection::Ccw);
        assert_eq!(rotation_angle(&cw, 0.0), 0.0);
        let quarter = 1.0 / (4.0 * 4.997);
        assert!((rotation_angle(&cw, quarter) - PI / 2.0).abs() < 1e-12);
        assert!((rotation_angle(&ccw, quarter) + PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn on_axis_voxel_has_zero_velocity() {
        let spec = SourceSpec::new(
            Vec3::new(1e-3, 1e-3, 1e-3),
            Vec3::ZERO,
            1.0,
            1.0,
        )
        .unwrap();
        let cloud = build_voxel_cloud(&spec, 1e-3).unwrap();
        let rot = paper_rotation(RotationDirection::Cw);
        for t in [0.0, 0.013, 0.11] {
            let pose = pose_at(&cloud, &rot, t);
            assert!(pose.velocities[0].norm() < 1e-15);
        }
    }

    #[test]
    fn lever_arm_speed_closed_form() {
        // Point voxel at lever arm R: |v| = 2 pi nu R = 7.655 m/s for
        // R = 0.2438 m, nu = 4.997 Hz.
        let spec = SourceSpec::new(
            Vec3::new(1e-6, 1e-6, 1e-6),
            Vec3::new(0.0, 0.0, -0.2438),
            1.0,
            1.0,
        )
        .unwrap();
        let cloud = build_voxel_cloud(&spec, 1e-6).unwrap();
        let rot = paper_rotation(RotationDirection::Cw);
        let expected = 2.0 * PI * 4.997 * 0.2438;
        assert!((expected - 7.654607367718244).abs() < 1e-12);
        for t in [0.0, 0.05, 0.21] {
            let pose = pose_at(&cloud, &rot, t);
            let speed = pose.velocities[0].norm();
            assert!((speed - expected).abs() / expected < 1e-12);
        }
    }

    #[test]
    fn velocity_magnitude_matches_axis_distance() {
        let cloud = build_voxel_cloud(&bgo_spec(), 6.25e-3).unwrap();
        let rot = paper_rotation(RotationDirection::Ccw);
        let omega = rot.angular_velocity();
        let pose = pose_at(&cloud, &rot, 0.37);
        for (p, v) in pose.positions.iter().zip(&pose.velocities) {
            let rel = *p - rot.pivot;
            let axial = rel - rot.axis * rel.dot(rot.axis);
            let expected = omega.norm() * axial.norm();
            assert!((v.norm() - expected).abs() / expected < 1e-9);
        }
    }

    #[test]
    fn poses_periodic_in_rotation_period() {
        let cloud = build_voxel_cloud(&bgo_spec(), 12.5e-3).unwrap();
        let rot = paper_rotation(RotationDirection::Cw);
        let a = pose_at(&cloud, &rot, 0.123);
        let b = pose_at(&cloud, &rot, 0.123 + rot.period());
        for (pa, pb) in a.positions.iter().zip(&b.positions) {
            assert!(pa.distance(*pb) < 1e-9);
        }
    }

    #[test]
    fn direction_reversal_mirrors_positions_and_negates_velocities() {
        let cloud = build_voxel_cloud(&bgo_spec(), 12.5e-3).unwrap();
        let cw = paper_rotation(RotationDirection::Cw);
        let ccw = paper_rotation(RotationDirection::Ccw);
        let t = 0.0831;
        let fwd = pose_at(&cloud, &ccw, t);
        let back = pose_at(&cloud, &cw, -t);
        for i in 0..cloud.len() {
            assert!(fwd.positions[i].distance(back.positions[i]) < 1e-12);
            assert!((fwd.velocities[i] + back.velocities[i]).norm() < 1e-9);
        }
    }

    #[test]
    fn rigid_body_distances_preserved() {
        let cloud = build_voxel_cloud(&bgo_spec(), 12.5e-3).unwrap();
        let rot = paper_rotation(RotationDirection::Cw);
        let p0 = pose_at(&cloud, &rot, 0.0);
        let p1 = pose_at(&cloud, &rot, rot.period());
        for i in 0..cloud.len() {
            for j in (i + 1)..cloud.len() {
                let d0 = p0.positions[i].distance(p0.positions[j]);
                let d1 = p1.positions[i].distance(p1.positions[j]);
                assert!((d0 - d1).abs() < 1e-12);
            }
        }
    }
}
