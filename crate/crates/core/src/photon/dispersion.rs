//! Dispersion relation of the external field equation, parameterized over
//! the massless / massive / nonlinear-share variants.

/// External-equation variant: a Proca-style mass term `beta` and the share
/// `gamma` of the cubic nonlinearity moved into the external equation.
/// `beta = 0, gamma = 0` reduces to the massless wave equation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionVariant {
    pub mass_term: f64,
    pub nonlinearity_share: f64,
}

impl DispersionVariant {
    pub fn massless() -> Self {
        Self {
            mass_term: 0.0,
            nonlinearity_share: 0.0,
        }
    }

    pub fn new(mass_term: f64, nonlinearity_share: f64) -> Result<Self, String> {
        if !(mass_term >= 0.0) {
            return Err(format!("mass term must be >= 0, got {mass_term}"));
        }
        if !(0.0..=1.0).contains(&nonlinearity_share) {
            return Err(format!(
                "nonlinearity share must lie in [0, 1], got {nonlinearity_share}"
            ));
        }
        Ok(Self {
            mass_term,
            nonlinearity_share,
        })
    }
}

/// Plane-wave frequency of the external equation,
/// `omega^2 = c^2 k^2 + beta c^2`.
///
/// The nonlinearity share does not move the small-amplitude dispersion; it
/// only redistributes the cubic term between internal and external
/// equations.
pub fn external_dispersion(k: f64, variant: &DispersionVariant, c: f64) -> f64 {
    c * (k * k + variant.mass_term).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn massless_propagates_at_c() {
        let v = DispersionVariant::massless();
        assert_eq!(external_dispersion(1.0, &v, 1.0), 1.0);
        assert_eq!(external_dispersion(2.0, &v, 3.0e8), 6.0e8);
    }

    #[test]
    fn massive_plane_wave_substitution() {
        // Substituting E = exp(i(kx - wt)) into the massive external
        // equation gives w^2 = c^2 (k^2 + beta) directly.
        let v = DispersionVariant::new(3.0, 0.0).unwrap();
        assert!((external_dispersion(4.0, &v, 1.0) - 19.0f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn rest_frequency_at_zero_wavevector() {
        let v = DispersionVariant::new(2.0, 0.5).unwrap();
        let c = 7.0;
        assert!((external_dispersion(0.0, &v, c) - 2.0f64.sqrt() * c).abs() < 1e-12);
    }

    #[test]
    fn validation() {
        assert!(DispersionVariant::new(-1.0, 0.0).is_err());
        assert!(DispersionVariant::new(0.0, 1.5).is_err());
    }
}
