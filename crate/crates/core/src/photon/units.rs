use crate::numerics::PhysicalConstants;

/// Unit system of the photon-soliton equation: field in `E_b = E_cl/sqrt(2)`,
/// length in `r_b = r_e/sqrt(pi)`, energy in `eps_b = E_b^2 r_b^3`.
#[derive(Debug, Clone, Copy)]
pub struct PhotonUnits {
    /// Field unit, same units as [`PhysicalConstants::critical_field`].
    pub e_b: f64,
    /// Length unit, meters.
    pub r_b: f64,
    /// Energy unit, joules.
    pub eps_b: f64,
    /// Electron rest energy, joules (kept for ratios).
    pub electron_rest_energy: f64,
    /// Classical electron radius, meters.
    pub classical_electron_radius: f64,
    /// Critical field.
    pub critical_field: f64,
}

impl PhotonUnits {
    pub fn from_constants(c: &PhysicalConstants) -> Self {
        let e_b = c.critical_field / std::f64::consts::SQRT_2;
        let r_b = c.classical_electron_radius / std::f64::consts::PI.sqrt();
        Self {
            e_b,
            r_b,
            eps_b: e_b * e_b * r_b.powi(3),
            electron_rest_energy: c.electron_rest_energy,
            classical_electron_radius: c.classical_electron_radius,
            critical_field: c.critical_field,
        }
    }

    /// eps_b expressed in electron rest energies; comes out ~0.0898.
    pub fn eps_b_in_mec2(&self) -> f64 {
        self.eps_b / self.electron_rest_energy
    }

    /// Convert a dimensionless radius to classical electron radii.
    pub fn rho_to_re(&self, rho: f64) -> f64 {
        rho * self.r_b / self.classical_electron_radius
    }

    /// Convert a dimensionless field value to critical-field units.
    pub fn field_to_ecl(&self, e_tilde: f64) -> f64 {
        e_tilde * self.e_b / self.critical_field
    }
}
