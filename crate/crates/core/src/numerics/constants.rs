/// Physical constants used for unit conversion at module boundaries.
///
/// Values are configuration inputs rather than hard-coded literals so that
/// unit-conversion tests can pin exact numbers. [`PhysicalConstants::codata`]
/// provides CODATA-2018 values in SI units.
///
/// The critical field here is defined by energy-density balance,
/// `E_cl^2 * r_e^3 = m_e c^2`, the scale at which the field energy inside a
/// classical-electron-radius volume reaches the electron rest energy. With
/// this convention the photon-soliton energy unit comes out at
/// `eps_b = E_b^2 r_b^3 = m_e c^2 / (2 pi^{3/2}) ~= 0.0898 m_e c^2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Fine-structure constant (dimensionless).
    pub alpha_fs: f64,
    /// Reduced Compton wavelength hbar/(m_e c), in meters.
    pub compton_length: f64,
    /// Classical electron radius alpha * lambda_C, in meters.
    pub classical_electron_radius: f64,
    /// Critical field sqrt(m_e c^2 / r_e^3); units J^(1/2) m^(-3/2).
    pub critical_field: f64,
    /// Electron rest energy m_e c^2, in joules.
    pub electron_rest_energy: f64,
    /// Elementary charge, in coulombs.
    pub elementary_charge: f64,
    /// Speed of light, in m/s.
    pub speed_of_light: f64,
}

impl PhysicalConstants {
    /// CODATA-2018 values.
    pub fn codata() -> Self {
        let alpha_fs = 7.297_352_569_3e-3;
        let compton_length = 3.861_592_679_6e-13;
        let classical_electron_radius = 2.817_940_326_2e-15;
        let electron_rest_energy = 8.187_105_776_9e-14;
        Self {
            alpha_fs,
            compton_length,
            classical_electron_radius,
            critical_field: (electron_rest_energy / classical_electron_radius.powi(3)).sqrt(),
            electron_rest_energy,
            elementary_charge: 1.602_176_634e-19,
            speed_of_light: 2.997_924_58e8,
        }
    }

    /// Consistency of the stored values: all positive and
    /// r_e = alpha * lambda_C to the stated relative tolerance.
    pub fn validate(&self, rel_tol: f64) -> Result<(), String> {
        let fields = [
            ("alpha_fs", self.alpha_fs),
            ("compton_length", self.compton_length),
            ("classical_electron_radius", self.classical_electron_radius),
            ("critical_field", self.critical_field),
            ("electron_rest_energy", self.electron_rest_energy),
            ("elementary_charge", self.elementary_charge),
            ("speed_of_light", self.speed_of_light),
        ];
        for (name, v) in fields {
            if !(v > 0.0) || !v.is_finite() {
                return Err(format!("constant {name} must be strictly positive, got {v}"));
            }
        }
        let derived = self.alpha_fs * self.compton_length;
        let rel = ((derived - self.classical_electron_radius) / self.classical_electron_radius)
            .abs();
        if rel > rel_tol {
            return Err(format!(
                "r_e != alpha * lambda_C: relative deviation {rel:.3e} exceeds {rel_tol:.1e}"
            ));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codata_is_self_consistent() {
        PhysicalConstants::codata().validate(1e-9).unwrap();
    }

    #[test]
    fn validate_flags_bad_values() {
        let mut c = PhysicalConstants::codata();
        c.classical_electron_radius *= 1.001;
        assert!(c.validate(1e-9).is_err());
        c.classical_electron_radius = -1.0;
        assert!(c.validate(1e-9).is_err());
    }

    #[test]
    fn critical_field_energy_balance() {
        let c = PhysicalConstants::codata();
        let u = c.critical_field.powi(2) * c.classical_electron_radius.powi(3);
        assert!((u / c.electron_rest_energy - 1.0).abs() < 1e-12);
    }
}
