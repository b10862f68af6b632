//! Bound-state energies from the zeros of the scattering amplitude, the two
//! closed-form spectra of the box system, and the maps between wave number
//! and the spectral variable.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::special;

/// Which way the spectral variable is tied to the wave number.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnergyMapMode {
    /// `y = a k / pi`
    WaveNumberProportional,
    /// `y = pi / (a k)`
    WaveNumberReciprocal,
}

/// One bound state: quantum number, the amplitude zero it comes from, and
/// the physical wave number and energy in a box of width `a`.
///
/// `energy` is always `k * k / 2` of the stored `k`, bit for bit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub m: u32,
    pub y_spectral: Complex64,
    pub k: f64,
    pub energy: f64,
    pub a: f64,
}

/// Output of [`energy_map`]: spectral variable, energy, and the cosine of
/// the angle parameter induced by `cos(theta) = (y^2 - 1) / (y^2 + 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyMapPoint {
    pub y: f64,
    pub energy: f64,
    pub cos_theta: f64,
}

/// The scattering amplitude vanishes exactly where `mu + i y = -m`, i.e. at
/// `y = i (m + mu)`; this returns that zero in closed form.
pub fn amplitude_zero(mu: f64, m: u32) -> Result<Complex64> {
    if !mu.is_finite() || mu <= 0.0 {
        return Err(Error::Domain(format!(
            "amplitude_zero: mu = {mu} must be finite and positive"
        )));
    }
    Ok(Complex64::new(0.0, m as f64 + mu))
}

/// `|1 / Gamma(z)|` for any finite `z`, continued across the left half
/// plane through `1 / Gamma(z) = sin(pi z) Gamma(1 - z) / pi`.
///
/// This is the probe used to confirm that the amplitude really dies at the
/// closed-form zeros: approaching `z = -m` the value decays like the
/// distance to the pole.
pub fn recip_gamma_magnitude(z: Complex64) -> Result<f64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(
            "recip_gamma_magnitude: input must be finite".into(),
        ));
    }
    if z.re > 0.5 {
        let lg = special::log_gamma_complex(z)?;
        return Ok((-lg.log_modulus).exp());
    }
    let lg = special::log_gamma_complex(Complex64::new(1.0, 0.0) - z)?;
    let s = (std::f64::consts::PI * z).sin();
    Ok(s.norm() * lg.log_modulus.exp() / std::f64::consts::PI)
}

/// Spectrum of the box of width `a`: `E_m = (pi m / a)^2 / 2` for
/// `m = 0 ..= m_max`, the textbook ladder including the null `m = 0` entry.
///
/// The `m = 0` state carries zero energy and a vanishing wavefunction in the
/// sine basis; it is kept in the list because the ladder starts there, and
/// the synthesis layer is the place that flags it.
pub fn well_spectrum(a: f64, m_max: u32) -> Result<Vec<BoundState>> {
    check_width(a)?;
    let states = (0..=m_max)
        .map(|m| {
            let k = std::f64::consts::PI * m as f64 / a;
            BoundState {
                m,
                y_spectral: Complex64::new(0.0, m as f64),
                k,
                energy: 0.5 * k * k,
                a,
            }
        })
        .collect();
    Ok(states)
}

/// The two-parameter spectrum `E_m = ((pi / a) / (m + mu))^2 / 2` for
/// `m = 0 ..= m_max`, strictly decreasing in `m`.
///
/// This ladder accumulates at zero energy from above; it belongs to the same
/// polynomial family but no potential function reproduces it.
pub fn two_param_spectrum(a: f64, mu: f64, m_max: u32) -> Result<Vec<BoundState>> {
    check_width(a)?;
    if !mu.is_finite() || mu <= 0.0 {
        return Err(Error::Domain(format!(
            "two_param_spectrum: mu = {mu} must be finite and positive"
        )));
    }
    let states = (0..=m_max)
        .map(|m| {
            let k = (std::f64::consts::PI / a) / (m as f64 + mu);
            BoundState {
                m,
                y_spectral: Complex64::new(0.0, m as f64 + mu),
                k,
                energy: 0.5 * k * k,
                a,
            }
        })
        .collect();
    Ok(states)
}

/// Map a wave number to the spectral variable, the energy `E = k^2 / 2`,
/// and `cos(theta) = (y^2 - 1) / (y^2 + 1)`.
///
/// `k` must be strictly positive in both modes: the reciprocal map is
/// singular at zero, and the proportional map would land on `y = 0` where
/// `cos(theta) = -1` falls outside the open angle interval the polynomial
/// family lives on.
pub fn energy_map(a: f64, k: f64, mode: EnergyMapMode) -> Result<EnergyMapPoint> {
    check_width(a)?;
    if !k.is_finite() || k <= 0.0 {
        return Err(Error::Domain(format!(
            "energy_map: k = {k} must be finite and positive"
        )));
    }
    let y = match mode {
        EnergyMapMode::WaveNumberProportional => a * k / std::f64::consts::PI,
        EnergyMapMode::WaveNumberReciprocal => std::f64::consts::PI / (a * k),
    };
    let y2 = y * y;
    Ok(EnergyMapPoint {
        y,
        energy: 0.5 * k * k,
        cos_theta: (y2 - 1.0) / (y2 + 1.0),
    })
}

fn check_width(a: f64) -> Result<()> {
    if !a.is_finite() || a <= 0.0 {
        return Err(Error::Domain(format!(
            "box width a = {a} must be finite and positive"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn amplitude_zero_closed_form() {
        assert_eq!(
            amplitude_zero(0.5, 0).unwrap(),
            Complex64::new(0.0, 0.5)
        );
        assert_eq!(amplitude_zero(1.0, 2).unwrap(), Complex64::new(0.0, 3.0));
        let y = amplitude_zero(1.0, 2).unwrap();
        assert_eq!((y * y).re, -9.0);
        assert!(amplitude_zero(0.0, 1).is_err());
        assert!(amplitude_zero(-2.0, 1).is_err());
    }

    #[test]
    fn recip_gamma_magnitude_matches_known_values() {
        // 1/Gamma(2.5) on the direct path.
        let got = recip_gamma_magnitude(Complex64::new(2.5, 0.0)).unwrap();
        assert!((got - 1.0 / 1.329_340_388_179_137).abs() < 1e-14);
        // Gamma(-0.5) = -2 sqrt(pi), via the reflection path.
        let got = recip_gamma_magnitude(Complex64::new(-0.5, 0.0)).unwrap();
        let want = 1.0 / (2.0 * std::f64::consts::PI.sqrt());
        assert!((got - want).abs() < 1e-14);
        // Both paths agree where they overlap.
        for z in [Complex64::new(0.4, 1.3), Complex64::new(0.25, -2.0)] {
            let direct = {
                let lg = special::log_gamma_complex(z).unwrap();
                (-lg.log_modulus).exp()
            };
            let reflected = {
                let lg = special::log_gamma_complex(Complex64::new(1.0, 0.0) - z).unwrap();
                (std::f64::consts::PI * z).sin().norm() * lg.log_modulus.exp()
                    / std::f64::consts::PI
            };
            let got = recip_gamma_magnitude(z).unwrap();
            assert!((got - direct).abs() <= 1e-13 * direct);
            assert!((got - reflected).abs() <= 1e-13 * reflected);
        }
    }

    #[test]
    fn amplitude_probe_decays_into_each_pole() {
        for m in 0..=5 {
            let far = recip_gamma_magnitude(Complex64::new(-(m as f64) + 1e-3, 0.0)).unwrap();
            let near = recip_gamma_magnitude(Complex64::new(-(m as f64) + 1e-6, 0.0)).unwrap();
            assert!(near > 0.0);
            assert!(
                near < far,
                "m = {m}: |1/Gamma| = {near} at 1e-6 vs {far} at 1e-3"
            );
            // The decay is linear in the distance to the pole.
            assert!((near / far - 1e-3).abs() < 1e-4, "m = {m}: ratio {}", near / far);
        }
    }

    #[test]
    fn well_spectrum_ladder_at_width_pi() {
        let states = well_spectrum(std::f64::consts::PI, 5).unwrap();
        let want = [0.0, 0.5, 2.0, 4.5, 8.0, 12.5];
        assert_eq!(states.len(), 6);
        for (s, w) in states.iter().zip(want) {
            assert!(
                (s.energy - w).abs() <= 1e-12 * w.max(1.0),
                "m = {}: E = {} vs {w}",
                s.m,
                s.energy
            );
            assert_eq!(s.energy, 0.5 * s.k * s.k);
            assert_eq!(s.y_spectral, Complex64::new(0.0, s.m as f64));
            assert_eq!(s.a, std::f64::consts::PI);
        }
        // Identical expression as the textbook form.
        for s in &states {
            let textbook = 0.5 * (std::f64::consts::PI * s.m as f64 / s.a).powi(2);
            assert_eq!(s.energy, textbook);
        }
    }

    #[test]
    fn well_spectrum_is_nondecreasing_and_validates_width() {
        let states = well_spectrum(2.7, 20).unwrap();
        for pair in states.windows(2) {
            assert!(pair[0].energy < pair[1].energy || pair[0].m == 0);
        }
        assert_eq!(well_spectrum(1.0, 0).unwrap()[0].energy, 0.0);
        assert!(well_spectrum(0.0, 3).is_err());
        assert!(well_spectrum(-1.0, 3).is_err());
        assert!(well_spectrum(f64::NAN, 3).is_err());
    }

    #[test]
    fn two_param_spectrum_values_and_monotonicity() {
        let a = std::f64::consts::PI;
        let states = two_param_spectrum(a, 0.5, 3).unwrap();
        assert!((states[0].energy - 2.0).abs() < 1e-14);
        assert!((states[1].energy - 2.0 / 9.0).abs() < 1e-14);
        let s = two_param_spectrum(a, 1.0, 1).unwrap();
        assert!((s[1].energy - 0.125).abs() < 1e-15);
        for (mu, a) in [(0.5, 1.0), (2.3, 4.0), (0.01, 0.3)] {
            let states = two_param_spectrum(a, mu, 12).unwrap();
            for pair in states.windows(2) {
                assert!(pair[0].energy > pair[1].energy);
            }
            for st in &states {
                assert_eq!(st.energy, 0.5 * st.k * st.k);
                assert_eq!(st.y_spectral.im, st.m as f64 + mu);
            }
        }
    }

    #[test]
    fn two_param_spectrum_large_mu_endpoint() {
        let a = 2.0;
        let mu = 1.0e6;
        let states = two_param_spectrum(a, mu, 0).unwrap();
        let want = 0.5 * (std::f64::consts::PI / (a * mu)).powi(2);
        assert!((states[0].energy - want).abs() <= 1e-12 * want);
    }

    #[test]
    fn two_param_spectrum_validates_inputs() {
        assert!(two_param_spectrum(1.0, 0.0, 2).is_err());
        assert!(two_param_spectrum(-1.0, 0.5, 2).is_err());
        assert!(two_param_spectrum(1.0, f64::INFINITY, 2).is_err());
    }

    #[test]
    fn energy_map_proportional_example() {
        let p = energy_map(
            std::f64::consts::PI,
            2.0,
            EnergyMapMode::WaveNumberProportional,
        )
        .unwrap();
        assert_eq!(p.y, 2.0);
        assert_eq!(p.energy, 2.0);
        assert!((p.cos_theta - 0.6).abs() < 1e-15);
    }

    #[test]
    fn energy_map_reciprocal_example_and_symmetry_point() {
        let p = energy_map(
            std::f64::consts::PI,
            1.0,
            EnergyMapMode::WaveNumberReciprocal,
        )
        .unwrap();
        assert_eq!(p.y, 1.0);
        assert_eq!(p.energy, 0.5);
        // y = 1 is the right-angle point in both modes.
        assert_eq!(p.cos_theta, 0.0);
        let q = energy_map(
            std::f64::consts::PI,
            1.0,
            EnergyMapMode::WaveNumberProportional,
        )
        .unwrap();
        assert_eq!(q.cos_theta, 0.0);
    }

    #[test]
    fn energy_map_angle_is_always_usable() {
        for mode in [
            EnergyMapMode::WaveNumberProportional,
            EnergyMapMode::WaveNumberReciprocal,
        ] {
            for i in 1..=60 {
                let k = i as f64 * 0.25;
                let p = energy_map(1.7, k, mode).unwrap();
                assert!(p.cos_theta.abs() < 1.0, "k = {k}: cos = {}", p.cos_theta);
                let theta = p.cos_theta.acos();
                assert!(theta > 0.0 && theta < std::f64::consts::PI);
                assert!(crate::poly::PolyParams::new(0.8, theta).is_ok());
            }
        }
    }

    #[test]
    fn energy_map_rejects_bad_wave_numbers() {
        for mode in [
            EnergyMapMode::WaveNumberProportional,
            EnergyMapMode::WaveNumberReciprocal,
        ] {
            assert!(energy_map(1.0, 0.0, mode).is_err());
            assert!(energy_map(1.0, -2.0, mode).is_err());
            assert!(energy_map(1.0, f64::NAN, mode).is_err());
            assert!(energy_map(0.0, 1.0, mode).is_err());
        }
    }
}
