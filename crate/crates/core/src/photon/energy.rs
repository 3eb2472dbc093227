//! Soliton energy content `U = int (E^2/2) dV` and the energy-radius family.

use super::profile::{FieldProfile, PhotonError};
use super::transverse::{ground_state_profile, self_similar_scale};
use super::units::PhotonUnits;
use crate::numerics::RadialGrid;

/// Energy and effective radius of a profile.
#[derive(Debug, Clone, Copy)]
pub struct SolitonEnergy {
    /// Dimensionless energy integral int (E^2/2) 4 pi rho^2 drho.
    pub dimensionless: f64,
    /// Energy in units of m_e c^2.
    pub energy_mec2: f64,
    /// Radius enclosing 90% of the energy, in classical electron radii.
    pub radius_re: f64,
    /// Central field in critical-field units.
    pub central_field_ecl: f64,
}

/// Integrate the energy of a decaying profile.
///
/// The effective radius is the radius enclosing 90% of the integrated
/// energy, a monotone and binning-free definition. Profiles whose outermost
/// 10% of the span carries more than 1e-4 of the energy are rejected as
/// non-decaying.
pub fn soliton_energy(
    profile: &FieldProfile,
    units: &PhotonUnits,
) -> Result<SolitonEnergy, PhotonError> {
    let pts = profile.grid.points();
    let n = pts.len();
    let four_pi = 4.0 * std::f64::consts::PI;
    // Cumulative trapezoid of (E^2/2) 4 pi rho^2.
    let integrand: Vec<f64> = pts
        .iter()
        .zip(&profile.e)
        .map(|(&rho, &e)| 0.5 * e * e * four_pi * rho * rho)
        .collect();
    let mut cumulative = vec![0.0; n];
    for i in 1..n {
        cumulative[i] =
            cumulative[i - 1] + 0.5 * (pts[i] - pts[i - 1]) * (integrand[i] + integrand[i - 1]);
    }
    let total = cumulative[n - 1];
    if total == 0.0 {
        return Ok(SolitonEnergy {
            dimensionless: 0.0,
            energy_mec2: 0.0,
            radius_re: 0.0,
            central_field_ecl: 0.0,
        });
    }
    // Tail check over the outermost 10% of the span.
    let edge = pts[0] + 0.9 * (pts[n - 1] - pts[0]);
    let idx = pts.partition_point(|&p| p < edge).min(n - 1);
    let fraction = (total - cumulative[idx]) / total;
    if fraction > 1e-4 {
        return Err(PhotonError::NonDecayingTail { fraction });
    }
    // 90%-energy radius by linear interpolation of the cumulative integral.
    let target = 0.9 * total;
    let mut radius = pts[n - 1];
    for i in 1..n {
        if cumulative[i] >= target {
            let t = (target - cumulative[i - 1]) / (cumulative[i] - cumulative[i - 1]);
            radius = pts[i - 1] + t * (pts[i] - pts[i - 1]);
            break;
        }
    }
    Ok(SolitonEnergy {
        dimensionless: total,
        energy_mec2: total * units.eps_b_in_mec2(),
        radius_re: units.rho_to_re(radius),
        central_field_ecl: units.field_to_ecl(profile.central()),
    })
}

/// One member of the self-similar soliton family.
#[derive(Debug, Clone, Copy)]
pub struct FamilyMember {
    /// Central dimensionless amplitude.
    pub a: f64,
    pub radius_re: f64,
    pub energy_mec2: f64,
    pub central_field_ecl: f64,
}

/// Energy-radius family built by self-similar scaling of the ground-state
/// profile. `scales` multiplies distances; field amplitude goes as 1/scale,
/// so energy and radius both scale linearly.
pub fn soliton_family(
    grid: &RadialGrid,
    scales: &[f64],
    units: &PhotonUnits,
    shoot_tol: f64,
) -> Result<Vec<FamilyMember>, PhotonError> {
    let base = ground_state_profile(grid, shoot_tol)?;
    let mut out = Vec::with_capacity(scales.len());
    for &s in scales {
        let member = self_similar_scale(&base, s)?;
        let energy = soliton_energy(&member, units)?;
        out.push(FamilyMember {
            a: member.central(),
            radius_re: energy.radius_re,
            energy_mec2: energy.energy_mec2,
            central_field_ecl: energy.central_field_ecl,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{Direction, PhysicalConstants, RadialGrid};
    use crate::photon::profile::Geometry;

    fn units() -> PhotonUnits {
        PhotonUnits::from_constants(&PhysicalConstants::codata())
    }

    #[test]
    fn zero_profile_has_zero_energy() {
        let grid = RadialGrid::linspace(1e-6, 5.0, 50, Direction::Outward).unwrap();
        let p = FieldProfile {
            grid: grid.clone(),
            e: vec![0.0; 50],
            de: vec![0.0; 50],
            geometry: Geometry::Transverse,
        };
        let e = soliton_energy(&p, &units()).unwrap();
        assert_eq!(e.energy_mec2, 0.0);
        assert_eq!(e.radius_re, 0.0);
    }

    #[test]
    fn energy_scales_linearly_under_self_similar_scaling() {
        let grid = RadialGrid::linspace(1e-6, 18.0, 3000, Direction::Outward).unwrap();
        let base = ground_state_profile(&grid, 1e-11).unwrap();
        let e0 = soliton_energy(&base, &units()).unwrap();
        let mut rng = crate::numerics::Rng::seeded(99);
        for _ in 0..5 {
            let alpha = rng.uniform_in(0.2, 4.0);
            let scaled = self_similar_scale(&base, alpha).unwrap();
            let e1 = soliton_energy(&scaled, &units()).unwrap();
            let ratio = e1.dimensionless / e0.dimensionless;
            assert!(
                (ratio - alpha).abs() < 1e-9 * alpha,
                "energy ratio {ratio} vs alpha {alpha}"
            );
        }
    }

    #[test]
    fn non_decaying_tail_is_rejected() {
        let grid = RadialGrid::linspace(1e-6, 5.0, 200, Direction::Outward).unwrap();
        let p = FieldProfile {
            grid: grid.clone(),
            e: vec![1.0; 200],
            de: vec![0.0; 200],
            geometry: Geometry::Transverse,
        };
        assert!(matches!(
            soliton_energy(&p, &units()),
            Err(PhotonError::NonDecayingTail { .. })
        ));
    }
}
