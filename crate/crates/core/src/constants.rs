//! Physical constants entering the pseudo-magnetic-field kernels.

use thiserror::Error;

/// Reduced Planck constant (J s).
pub const HBAR: f64 = 1.054571817e-34;
/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299792458.0;
/// Neutron mass (kg).
pub const NEUTRON_MASS: f64 = 1.67492749804e-27;

/// Default ¹²⁹Xe gyromagnetic ratio magnitude, γ/2π = 11.777 MHz/T.
pub const GAMMA_XE_129_HZ_PER_T: f64 = 11.777e6;

#[derive(Debug, Error)]
#[error("|mu| = {mu:e} J/T is inconsistent with gamma*hbar/2 = {expected:e} J/T (rel {rel:e})")]
pub struct InconsistentMoment {
    pub mu: f64,
    pub expected: f64,
    pub rel: f64,
}

/// Constants bundle for field evaluation. `mu_xe` and `gamma_n` both appear
/// in the kernels; for a spin-1/2 nucleus they are tied by |μ| = γ ħ / 2 and
/// the constructor keeps them consistent.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalConstants {
    /// Reduced Planck constant (J s).
    pub hbar: f64,
    /// Speed of light (m/s).
    pub c: f64,
    /// Mass of a neutron (kg).
    pub neutron_mass: f64,
    /// Magnitude of the ¹²⁹Xe magnetic moment (J/T).
    pub mu_xe: f64,
    /// Magnitude of the ¹²⁹Xe gyromagnetic ratio (rad s⁻¹ T⁻¹).
    pub gamma_n: f64,
}

impl PhysicalConstants {
    /// Constants with a caller-supplied gyromagnetic ratio (rad s⁻¹ T⁻¹);
    /// the moment is derived from it.
    pub fn with_gamma_n(gamma_n: f64) -> Self {
        PhysicalConstants {
            hbar: HBAR,
            c: SPEED_OF_LIGHT,
            neutron_mass: NEUTRON_MASS,
            mu_xe: gamma_n * HBAR / 2.0,
            gamma_n,
        }
    }

    /// Relative inconsistency between the stored moment and γħ/2.
    pub fn moment_consistency(&self) -> f64 {
        let expected = self.gamma_n * self.hbar / 2.0;
        ((self.mu_xe - expected) / expected).abs()
    }

    pub fn check_consistent(&self) -> Result<(), InconsistentMoment> {
        let rel = self.moment_consistency();
        if rel > 1e-9 {
            return Err(InconsistentMoment {
                mu: self.mu_xe,
                expected: self.gamma_n * self.hbar / 2.0,
                rel,
            });
        }
        Ok(())
    }

    /// ħc (J m), used by the coupling-product algebra.
    pub fn hbar_c(&self) -> f64 {
        self.hbar * self.c
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        PhysicalConstants::with_gamma_n(2.0 * std::f64::consts::PI * GAMMA_XE_129_HZ_PER_T)
    }
}
