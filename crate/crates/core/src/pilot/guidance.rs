//! Quantum potential and guidance-law velocities.

use super::field::{ComplexField, PilotError, VectorFieldC};
use num_complex::Complex64 as C64;
use std::sync::Arc;

/// Relative nodal threshold: |psi| below this fraction of the field's
/// amplitude scale counts as a node.
pub const NODAL_THRESHOLD: f64 = 1e-8;

type Potential = Arc<dyn Fn(&[f64], f64) -> f64 + Send + Sync>;
type VectorPotential = Arc<dyn Fn(&[f64], f64) -> Vec<f64> + Send + Sync>;

/// Velocity law applied to a wavefunction. Exactly one variant drives any
/// given trajectory run.
#[derive(Clone)]
pub enum GuidanceLaw {
    /// v = Im(grad psi / psi) / m  (hbar = 1).
    Schrodinger { mass: f64 },
    /// v = -c^2 (grad phi + e A) / (dphi/dt - e V), with phi the phase of
    /// psi; signs fixed so a free plane wave gives v = c^2 k / omega.
    KleinGordon {
        charge: f64,
        scalar_potential: Potential,
        vector_potential: VectorPotential,
    },
    /// v = (c^2 / omega) grad phi.
    PhotonPhase { omega: f64 },
    /// Poynting-vector transport v = S/U; needs a vector-potential field,
    /// see [`poynting_velocity`].
    Poynting { omega: f64 },
}

impl std::fmt::Debug for GuidanceLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Schrodinger { mass } => write!(f, "Schrodinger(m={mass})"),
            Self::KleinGordon { charge, .. } => write!(f, "KleinGordon(e={charge})"),
            Self::PhotonPhase { omega } => write!(f, "PhotonPhase(omega={omega})"),
            Self::Poynting { omega } => write!(f, "Poynting(omega={omega})"),
        }
    }
}

impl GuidanceLaw {
    /// Klein-Gordon law with vanishing potentials.
    pub fn klein_gordon_free(charge: f64) -> Self {
        Self::KleinGordon {
            charge,
            scalar_potential: Arc::new(|_, _| 0.0),
            vector_potential: Arc::new(|x, _| vec![0.0; x.len()]),
        }
    }

    pub fn klein_gordon(
        charge: f64,
        scalar: impl Fn(&[f64], f64) -> f64 + Send + Sync + 'static,
        vector: impl Fn(&[f64], f64) -> Vec<f64> + Send + Sync + 'static,
    ) -> Self {
        Self::KleinGordon {
            charge,
            scalar_potential: Arc::new(scalar),
            vector_potential: Arc::new(vector),
        }
    }
}

/// Quantum potential Q = -hbar^2 lap R / (2 m R) of the amplitude R = |psi|.
///
/// Nodal points are reported as errors, not evaluated.
pub fn quantum_potential(
    field: &ComplexField,
    mass: f64,
    point: &[f64],
    t: f64,
) -> Result<f64, PilotError> {
    field.check_dim(point)?;
    let r = field.value(point, t).norm();
    if r <= NODAL_THRESHOLD * field.amplitude_scale {
        return Err(PilotError::NodalPoint {
            at: point.to_vec(),
            t,
        });
    }
    Ok(-field.amplitude_laplacian(point, t) / (2.0 * mass * r))
}

/// Phase gradient Im(grad psi / psi) and phase time derivative
/// Im(psi_t / psi) at a non-nodal point.
fn phase_derivatives(
    field: &ComplexField,
    point: &[f64],
    t: f64,
) -> Result<(Vec<f64>, f64, C64), PilotError> {
    let psi = field.value(point, t);
    if psi.norm() <= NODAL_THRESHOLD * field.amplitude_scale {
        return Err(PilotError::NodalPoint {
            at: point.to_vec(),
            t,
        });
    }
    let grad = field.gradient(point, t);
    let grad_phi: Vec<f64> = grad.iter().map(|g| (g / psi).im).collect();
    let dphi_dt = (field.time_derivative(point, t) / psi).im;
    Ok((grad_phi, dphi_dt, psi))
}

/// Guidance velocity of `law` for `field` at a point (c = hbar = 1).
pub fn guidance_velocity(
    field: &ComplexField,
    law: &GuidanceLaw,
    point: &[f64],
    t: f64,
) -> Result<Vec<f64>, PilotError> {
    field.check_dim(point)?;
    match law {
        GuidanceLaw::Schrodinger { mass } => {
            let (grad_phi, _, _) = phase_derivatives(field, point, t)?;
            Ok(grad_phi.iter().map(|g| g / mass).collect())
        }
        GuidanceLaw::KleinGordon {
            charge,
            scalar_potential,
            vector_potential,
        } => {
            let (grad_phi, dphi_dt, _) = phase_derivatives(field, point, t)?;
            let v_pot = scalar_potential(point, t);
            let a_pot = vector_potential(point, t);
            let denom = dphi_dt - charge * v_pot;
            if denom.abs() < 1e-12 {
                return Err(PilotError::TurningPoint {
                    at: point.to_vec(),
                    t,
                });
            }
            Ok(grad_phi
                .iter()
                .zip(&a_pot)
                .map(|(g, a)| -(g + charge * a) / denom)
                .collect())
        }
        GuidanceLaw::PhotonPhase { omega } => {
            let (grad_phi, _, _) = phase_derivatives(field, point, t)?;
            Ok(grad_phi.iter().map(|g| g / omega).collect())
        }
        GuidanceLaw::Poynting { .. } => Err(PilotError::NeedsVectorField),
    }
}

/// Energy-transport velocity v = S/U of a (generally complex) transverse
/// vector potential: the phase-current term plus the curl spin term,
///
/// ```text
/// v = (c^2/omega) [ Im((grad A) . A*) - (1/2) curl Im(A* x A) ] / (A* . A)
/// ```
///
/// The spin term vanishes for plane polarization, where this reduces to the
/// photon phase guidance.
pub fn poynting_velocity(
    a_field: &VectorFieldC,
    point: &[f64],
    t: f64,
    omega: f64,
) -> Result<[f64; 3], PilotError> {
    if point.len() != a_field.dim() {
        return Err(PilotError::DimensionMismatch {
            field: a_field.dim(),
            point: point.len(),
        });
    }
    let a = a_field.value(point, t);
    let u: f64 = a.iter().map(|c| c.norm_sqr()).sum();
    if u <= 0.0 || !u.is_finite() {
        return Err(PilotError::ZeroField);
    }
    let h = a_field.fd_step;
    // Gradients of every component: da[i][j] = d A_j / d x_i.
    let mut da = [[C64::new(0.0, 0.0); 3]; 3];
    let mut xp = point.to_vec();
    for i in 0..3 {
        xp[i] = point[i] + h;
        let plus = a_field.value(&xp, t);
        xp[i] = point[i] - h;
        let minus = a_field.value(&xp, t);
        xp[i] = point[i];
        for j in 0..3 {
            da[i][j] = (plus[j] - minus[j]) / (2.0 * h);
        }
    }
    // Phase-current term Im((grad A) . A*).
    let mut translational = [0.0f64; 3];
    for i in 0..3 {
        let mut acc = C64::new(0.0, 0.0);
        for j in 0..3 {
            acc += da[i][j] * a[j].conj();
        }
        translational[i] = acc.im;
    }
    // Spin term -(1/2) curl W with W = Im(A* x A), via finite differences.
    let w_at = |x: &[f64]| -> [f64; 3] {
        let a = a_field.value(x, t);
        [
            (a[1].conj() * a[2] - a[2].conj() * a[1]).im,
            (a[2].conj() * a[0] - a[0].conj() * a[2]).im,
            (a[0].conj() * a[1] - a[1].conj() * a[0]).im,
        ]
    };
    let mut dw = [[0.0f64; 3]; 3]; // dw[i][j] = d W_j / d x_i
    for i in 0..3 {
        xp[i] = point[i] + h;
        let plus = w_at(&xp);
        xp[i] = point[i] - h;
        let minus = w_at(&xp);
        xp[i] = point[i];
        for j in 0..3 {
            dw[i][j] = (plus[j] - minus[j]) / (2.0 * h);
        }
    }
    let curl_w = [
        dw[1][2] - dw[2][1],
        dw[2][0] - dw[0][2],
        dw[0][1] - dw[1][0],
    ];
    let mut v = [0.0f64; 3];
    for i in 0..3 {
        v[i] = (translational[i] - 0.5 * curl_w[i]) / (omega * u);
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pilot::field::{ComplexField, VectorFieldC};

    #[test]
    fn constant_amplitude_has_zero_quantum_potential() {
        let f = ComplexField::from_amplitude(3, |_| 2.5);
        let q = quantum_potential(&f, 1.0, &[0.3, -0.1, 0.7], 0.0).unwrap();
        assert!(q.abs() < 1e-9, "Q = {q}");
    }

    #[test]
    fn exponential_amplitude_quantum_potential() {
        // R = exp(-r/a) in 3D: Q = -(1/2m)(1/a^2 - 2/(a r)).
        let a = 1.7;
        let f = ComplexField::from_amplitude(3, move |x| {
            let r = (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt();
            (-r / a).exp()
        })
        .with_fd_step(1e-4);
        let m = 2.0;
        for point in [[1.0, 0.0, 0.0], [0.5, 0.5, 0.5], [0.0, -2.0, 1.0]] {
            let r = (point.iter().map(|v| v * v).sum::<f64>()).sqrt();
            let expected = -(1.0 / (a * a) - 2.0 / (a * r)) / (2.0 * m);
            let q = quantum_potential(&f, m, &point, 0.0).unwrap();
            assert!(
                (q - expected).abs() < 1e-5 * expected.abs().max(1.0),
                "r={r}: {q} vs {expected}"
            );
        }
    }

    #[test]
    fn gaussian_amplitude_quantum_potential() {
        // R = exp(-r^2/(4 sigma^2)) in 3D: Q = -(1/2m)(r^2/(4 sigma^4) - 3/(2 sigma^2)).
        let sigma = 0.9f64;
        let f = ComplexField::from_amplitude(3, move |x| {
            let r2: f64 = x.iter().map(|v| v * v).sum();
            (-r2 / (4.0 * sigma * sigma)).exp()
        })
        .with_fd_step(1e-4);
        for point in [[0.2, 0.0, 0.0], [1.0, 1.0, -1.0]] {
            let r2: f64 = point.iter().map(|v| v * v).sum();
            let expected =
                -(r2 / (4.0 * sigma.powi(4)) - 3.0 / (2.0 * sigma * sigma)) / 2.0;
            let q = quantum_potential(&f, 1.0, &point, 0.0).unwrap();
            assert!(
                (q - expected).abs() < 1e-5 * expected.abs().max(1.0),
                "{q} vs {expected}"
            );
        }
    }

    #[test]
    fn nodal_point_is_an_error() {
        let f = ComplexField::standing_wave(1.0, 1.0);
        let node = std::f64::consts::FRAC_PI_2;
        assert!(matches!(
            quantum_potential(&f, 1.0, &[node], 0.0),
            Err(PilotError::NodalPoint { .. })
        ));
        assert!(matches!(
            guidance_velocity(&f, &GuidanceLaw::Schrodinger { mass: 1.0 }, &[node], 0.0),
            Err(PilotError::NodalPoint { .. })
        ));
    }

    #[test]
    fn plane_wave_schrodinger_velocity() {
        let k = vec![1.2, -0.4, 2.0];
        let f = ComplexField::plane_wave(k.clone(), 3.0);
        let m = 1.7;
        let v = guidance_velocity(
            &f,
            &GuidanceLaw::Schrodinger { mass: m },
            &[0.1, 0.2, 0.3],
            0.9,
        )
        .unwrap();
        for (vi, ki) in v.iter().zip(&k) {
            assert!((vi - ki / m).abs() < 1e-12);
        }
    }

    #[test]
    fn standing_wave_velocity_is_zero() {
        let f = ComplexField::standing_wave(2.0, 1.5);
        let v = guidance_velocity(&f, &GuidanceLaw::Schrodinger { mass: 1.0 }, &[0.3], 0.2)
            .unwrap();
        assert!(v[0].abs() < 1e-10, "v = {}", v[0]);
    }

    #[test]
    fn klein_gordon_plane_wave_limit() {
        // Free plane wave: v = k / omega = c^2 p / E.
        let (k, omega) = (0.8, 2.0);
        let f = ComplexField::plane_wave(vec![k], omega);
        let v = guidance_velocity(&f, &GuidanceLaw::klein_gordon_free(1.0), &[0.5], 1.0)
            .unwrap();
        assert!((v[0] - k / omega).abs() < 1e-10, "v = {}", v[0]);
    }

    #[test]
    fn photon_phase_matches_finite_difference_oracle() {
        // Sum of two plane waves +-k: v = (c^2/omega) grad arg(psi), checked
        // against a centered finite difference of the phase itself.
        let (k, omega) = (1.0, 1.0);
        let f = ComplexField::two_plane_waves(k, omega);
        let law = GuidanceLaw::PhotonPhase { omega };
        let h = 1e-6;
        for x in [0.3, 0.7, 1.1] {
            let v = guidance_velocity(&f, &law, &[x], 0.4).unwrap()[0];
            let phase = |x: f64| f.value(&[x], 0.4).arg();
            // unwrap the phase difference
            let mut dphi = phase(x + h) - phase(x - h);
            while dphi > std::f64::consts::PI {
                dphi -= 2.0 * std::f64::consts::PI;
            }
            while dphi < -std::f64::consts::PI {
                dphi += 2.0 * std::f64::consts::PI;
            }
            let oracle = dphi / (2.0 * h) / omega;
            assert!((v - oracle).abs() < 1e-6, "x={x}: {v} vs {oracle}");
        }
    }

    #[test]
    fn circular_plane_wave_poynting_velocity_is_c() {
        use num_complex::Complex64 as C64;
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let pol = [C64::new(s, 0.0), C64::new(0.0, s), C64::new(0.0, 0.0)];
        let (k, omega) = (1.0, 1.0); // on shell: omega = c k, c = 1
        let a = VectorFieldC::polarized_plane_wave(pol, k, omega);
        let v = poynting_velocity(&a, &[0.2, -0.1, 0.5], 0.3, omega).unwrap();
        assert!(v[0].abs() < 1e-9 && v[1].abs() < 1e-9);
        assert!((v[2] - 1.0).abs() < 1e-9, "vz = {}", v[2]);
    }

    #[test]
    fn plane_polarized_poynting_equals_phase_guidance() {
        use num_complex::Complex64 as C64;
        // Plane polarization with a transverse Gaussian envelope: the spin
        // term vanishes, so v must equal (c^2/omega) grad phi of any scalar
        // component.
        let (k, omega) = (1.3, 1.3);
        let a = VectorFieldC::new(3, move |x: &[f64], t: f64| {
            let envelope = (-(x[0] * x[0] + x[1] * x[1]) / 8.0).exp();
            let phase = C64::from_polar(envelope, k * x[2] - omega * t);
            [phase, C64::new(0.0, 0.0), C64::new(0.0, 0.0)]
        });
        let scalar = ComplexField::new(3, move |x: &[f64], t: f64| {
            let envelope = (-(x[0] * x[0] + x[1] * x[1]) / 8.0).exp();
            C64::from_polar(envelope, k * x[2] - omega * t)
        });
        let point = [0.4, -0.2, 0.9];
        let v = poynting_velocity(&a, &point, 0.1, omega).unwrap();
        let vp =
            guidance_velocity(&scalar, &GuidanceLaw::PhotonPhase { omega }, &point, 0.1)
                .unwrap();
        for i in 0..3 {
            assert!(
                (v[i] - vp[i]).abs() < 1e-8,
                "component {i}: {} vs {}",
                v[i],
                vp[i]
            );
        }
    }

    #[test]
    fn circular_polarization_shifts_only_the_transverse_components() {
        use num_complex::Complex64 as C64;
        // Nonuniform circularly polarized beam: the spin term contributes
        // perpendicular to propagation; the z-component must still match
        // the phase guidance.
        let (k, omega) = (1.0, 1.0);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let a = VectorFieldC::new(3, move |x: &[f64], t: f64| {
            let envelope = (-(x[0] * x[0] + x[1] * x[1]) / 6.0).exp();
            let phase = C64::from_polar(envelope, k * x[2] - omega * t);
            [phase * s, phase * C64::new(0.0, s), C64::new(0.0, 0.0)]
        });
        let scalar = ComplexField::new(3, move |x: &[f64], t: f64| {
            let envelope = (-(x[0] * x[0] + x[1] * x[1]) / 6.0).exp();
            C64::from_polar(envelope, k * x[2] - omega * t)
        });
        let point = [0.7, -0.3, 0.2];
        let vp = poynting_velocity(&a, &point, 0.0, omega).unwrap();
        let vg = guidance_velocity(&scalar, &GuidanceLaw::PhotonPhase { omega }, &point, 0.0)
            .unwrap();
        assert!((vp[2] - vg[2]).abs() < 1e-7, "z: {} vs {}", vp[2], vg[2]);
        let transverse_shift = (vp[0] - vg[0]).hypot(vp[1] - vg[1]);
        assert!(transverse_shift > 1e-3, "spin term should act transversely");
    }

    #[test]
    fn zero_field_poynting_is_an_error() {
        use num_complex::Complex64 as C64;
        let a = VectorFieldC::new(3, |_x: &[f64], _t: f64| {
            [C64::new(0.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 0.0)]
        });
        assert!(matches!(
            poynting_velocity(&a, &[0.0, 0.0, 0.0], 0.0, 1.0),
            Err(PilotError::ZeroField)
        ));
    }
}
