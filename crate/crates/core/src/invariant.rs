//! Gaussian-state machinery built on a mode sample: polar (Ermakov)
//! decomposition, wavefunction coefficients, ladder-operator coefficients,
//! second moments, uncertainty products, and energy expectation values.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::mode::{ModeSample, ModeTrajectory};
use crate::oscillator::OscillatorSpec;
use crate::squeeze::SqueezeParams;

/// Amplitude/phase frame of the polar decomposition
/// u = (xi / sqrt(2 m0)) e^{-i theta}.
#[derive(Clone, Copy, Debug)]
pub struct ErmakovFrame {
    pub t: f64,
    /// xi = sqrt(2 m0) |u|
    pub xi: f64,
    /// xi' computed analytically as sqrt(2 m0) Re(u' u*) / |u|
    pub dxi: f64,
    /// theta = -arg(u), unwrapped continuously from the first sample
    pub theta: f64,
}

/// Polar decomposition of a constant-mass trajectory. The phase is unwrapped
/// by nearest-branch continuation; a step of pi/2 or more between samples is
/// refused as aliasing.
pub fn ermakov_frame(trajectory: &ModeTrajectory) -> Result<Vec<ErmakovFrame>> {
    let spec = trajectory.spec();
    if !spec.has_constant_mass() {
        return Err(Error::UnsupportedKind { kind: spec.kind_name() });
    }
    let m0 = spec.m0();
    let scale = (2.0 * m0).sqrt();
    let mut frames = Vec::with_capacity(trajectory.samples().len());
    let mut prev_theta: Option<f64> = None;
    for s in trajectory.samples() {
        let r = s.u.norm();
        if r == 0.0 {
            return Err(Error::Decomposition { t: s.t });
        }
        let raw = -s.u.arg();
        let theta = match prev_theta {
            None => raw,
            Some(prev) => {
                let turns = ((prev - raw) / std::f64::consts::TAU).round();
                let theta = raw + turns * std::f64::consts::TAU;
                let dtheta = theta - prev;
                if dtheta.abs() >= std::f64::consts::FRAC_PI_2 {
                    return Err(Error::PhaseAliasing { t: s.t, dtheta });
                }
                theta
            }
        };
        prev_theta = Some(theta);
        frames.push(ErmakovFrame {
            t: s.t,
            xi: scale * r,
            dxi: scale * (s.du * s.u.conj()).re / r,
            theta,
        });
    }
    Ok(frames)
}

/// Maximum central-difference residual |xi'' + w2 xi - 1/xi^3| over the
/// interior of a uniformly spaced constant-mass trajectory.
pub fn ermakov_residual(trajectory: &ModeTrajectory) -> Result<f64> {
    let samples = trajectory.samples();
    if samples.len() < 3 {
        return Err(Error::InsufficientData { needed: 3, got: samples.len() });
    }
    let spec = trajectory.spec();
    if !spec.has_constant_mass() {
        return Err(Error::UnsupportedKind { kind: spec.kind_name() });
    }
    let h = samples[1].t - samples[0].t;
    let mut dev: f64 = 0.0;
    for w in samples.windows(2) {
        dev = dev.max(((w[1].t - w[0].t) - h).abs());
    }
    if dev > 1e-9 * h.abs() {
        return Err(Error::NonUniformGrid { dev });
    }
    let scale = (2.0 * spec.m0()).sqrt();
    let xi: Vec<f64> = samples.iter().map(|s| scale * s.u.norm()).collect();
    if xi.iter().any(|&x| x == 0.0) {
        return Err(Error::Decomposition { t: samples[0].t });
    }
    let mut worst: f64 = 0.0;
    for i in 1..samples.len() - 1 {
        let xi_dd = (xi[i - 1] - 2.0 * xi[i] + xi[i + 1]) / (h * h);
        let w2 = spec.frequency_sq(samples[i].t)?;
        let res = xi_dd + w2 * xi[i] - 1.0 / (xi[i] * xi[i] * xi[i]);
        worst = worst.max(res.abs());
    }
    Ok(worst)
}

/// Coordinate-space Gaussian wavefunction determined by a mode sample:
/// Psi(q) = norm_coeff * exp(exp_coeff * q^2).
#[derive(Clone, Copy, Debug)]
pub struct GaussianState {
    pub sample: ModeSample,
    /// (2 pi |u|^2)^{-1/4}; real and positive
    pub norm_coeff: f64,
    /// i m du* / (2 u*); Re < 0 for a normalized positive-frequency mode
    pub exp_coeff: Complex64,
}

impl GaussianState {
    pub fn new(sample: ModeSample) -> Result<GaussianState> {
        if sample.u.norm() == 0.0 {
            return Err(Error::Decomposition { t: sample.t });
        }
        let exp_coeff =
            Complex64::new(0.0, 1.0) * sample.mass * sample.du.conj() / (2.0 * sample.u.conj());
        if !(exp_coeff.re < 0.0) {
            return Err(Error::InvalidArgument(format!(
                "non-normalizable Gaussian (Re exp_coeff = {}); sample is not Wronskian-normalized",
                exp_coeff.re
            )));
        }
        let norm_coeff = (2.0 * std::f64::consts::PI * sample.u.norm_sqr()).powf(-0.25);
        Ok(GaussianState { sample, norm_coeff, exp_coeff })
    }

    /// Psi(q).
    pub fn wavefunction(&self, q: f64) -> Complex64 {
        (self.exp_coeff * (q * q)).exp() * self.norm_coeff
    }

    /// Integral of |Psi|^2 over q in [-8 sigma, 8 sigma] by adaptive Simpson
    /// quadrature (tolerance 1e-8). Equals 1 for a valid state.
    pub fn normalization(&self) -> f64 {
        let sigma = self.sample.u.norm();
        let f = |q: f64| self.wavefunction(q).norm_sqr();
        adaptive_simpson(&f, -8.0 * sigma, 8.0 * sigma, 1e-8)
    }
}

/// `gaussian_wavefunction` as a free function, mirroring the operation name.
pub fn gaussian_wavefunction(state: &GaussianState, q: f64) -> Complex64 {
    state.wavefunction(q)
}

/// Coefficients of the linear invariant A = c_p p + c_q q annihilating the
/// Gaussian state built on `sample`.
#[derive(Clone, Copy, Debug)]
pub struct LadderCoefficients {
    pub c_p: Complex64,
    pub c_q: Complex64,
}

impl LadderCoefficients {
    pub fn new(sample: &ModeSample) -> LadderCoefficients {
        LadderCoefficients {
            c_p: Complex64::new(0.0, 1.0) * sample.u.conj(),
            c_q: Complex64::new(0.0, -1.0) * sample.mass * sample.du.conj(),
        }
    }

    /// |[A, A+] - 1|; zero exactly when the Wronskian condition holds.
    pub fn commutator_residual(&self) -> f64 {
        let comm = Complex64::new(0.0, 1.0)
            * (self.c_q * self.c_p.conj() - self.c_p * self.c_q.conj());
        (comm - 1.0).norm()
    }
}

/// Second moments of the Gaussian state at one sample.
#[derive(Clone, Copy, Debug)]
pub struct UncertaintyReport {
    pub var_q: f64,
    pub var_p: f64,
    pub cov_qp: f64,
    /// sqrt(var_q var_p) = m |u| |u'|
    pub product: f64,
}

impl UncertaintyReport {
    /// var_q var_p - cov_qp^2; equals 1/4 exactly under the Wronskian
    /// condition (Robertson-Schrodinger saturation for pure Gaussians).
    pub fn generalized_uncertainty(&self) -> f64 {
        self.var_q * self.var_p - self.cov_qp * self.cov_qp
    }
}

pub fn moments(sample: &ModeSample) -> UncertaintyReport {
    let var_q = sample.u.norm_sqr();
    let var_p = sample.mass * sample.mass * sample.du.norm_sqr();
    let cov_qp = sample.mass * (sample.u * sample.du.conj()).re;
    UncertaintyReport { var_q, var_p, cov_qp, product: (var_q * var_p).sqrt() }
}

/// m |u| |u'|, the uncertainty product (Delta q)(Delta p).
pub fn uncertainty_product(sample: &ModeSample) -> f64 {
    sample.mass * sample.u.norm() * sample.du.norm()
}

/// Energy expectation value split into kinetic and potential parts.
#[derive(Clone, Copy, Debug)]
pub struct EnergyReport {
    pub epsilon: f64,
    pub kinetic: f64,
    pub potential: f64,
}

/// epsilon = (m/2)(|u'|^2 + w2 |u|^2); for a constant oscillator this is
/// time-independent with minimum w/2 at the vacuum.
pub fn energy_expectation(sample: &ModeSample, spec: &OscillatorSpec) -> Result<EnergyReport> {
    let w2 = spec.frequency_sq(sample.t)?;
    let m = sample.mass;
    let kinetic = m * sample.du.norm_sqr() / 2.0;
    let potential = m * w2 * sample.u.norm_sqr() / 2.0;
    Ok(EnergyReport { epsilon: kinetic + potential, kinetic, potential })
}

/// Expected quanta of the base invariant carried by the squeezed state:
/// <A+A> = |nu|^2 (and <I> = |nu|^2 + 1/2).
pub fn excitation_number(params: &SqueezeParams) -> Result<f64> {
    params.validate()?;
    Ok(params.nu().norm_sqr())
}

fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(f: &dyn Fn(f64) -> f64, a: f64, fa: f64, b: f64, fb: f64, fm: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        fa: f64,
        b: f64,
        fb: f64,
        fm: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(f, a, fa, m, fm, flm);
        let right = simpson(f, m, fm, b, fb, frm);
        if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
            left + right + (left + right - whole) / 15.0
        } else {
            recurse(f, a, fa, m, fm, flm, left, tol / 2.0, depth - 1)
                + recurse(f, m, fm, b, fb, frm, right, tol / 2.0, depth - 1)
        }
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    let whole = simpson(f, a, fa, b, fb, fm);
    recurse(f, a, fa, b, fb, fm, whole, tol, 40)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mode::{init_minimum_uncertainty, integrate_mode};
    use crate::squeeze::{mix_mode, SqueezeParams};
    use approx::assert_abs_diff_eq;

    fn vacuum_sample(omega: f64) -> ModeSample {
        let spec = OscillatorSpec::constant(1.0, omega * omega).unwrap();
        init_minimum_uncertainty(&spec, 0.0).unwrap()
    }

    /// Analytic stationary-vacuum sample u = e^{-i w t} / sqrt(2 m w).
    fn analytic_vacuum(omega: f64, m0: f64, t: f64) -> ModeSample {
        let amp = 1.0 / (2.0 * m0 * omega).sqrt();
        let u = Complex64::from_polar(amp, -omega * t);
        ModeSample { t, u, du: u * Complex64::new(0.0, -omega), mass: m0 }
    }

    #[test]
    fn ermakov_frame_of_stationary_vacuum() {
        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let samples: Vec<ModeSample> = (0..=100).map(|i| analytic_vacuum(1.0, 1.0, 0.025 * i as f64)).collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        let frames = ermakov_frame(&traj).unwrap();
        for f in &frames {
            assert_abs_diff_eq!(f.xi, 1.0, epsilon = 1e-12);
            assert_abs_diff_eq!(f.dxi, 0.0, epsilon = 1e-12);
            // theta = w t, unwrapped
            assert_abs_diff_eq!(f.theta, f.t, epsilon = 1e-12);
        }
    }

    #[test]
    fn ermakov_xi_sq_matches_closed_form_for_squeezed_state() {
        // epsilon = 1, omega = 1: xi^2(0) = 2 + sqrt(3)
        let params = crate::squeeze::squeeze_from_energy(1.0, 1.0).unwrap();
        let base = analytic_vacuum(1.0, 1.0, 0.0);
        let mixed = mix_mode(&base, &params).unwrap();
        let xi_sq = 2.0 * mixed.mass * mixed.u.norm_sqr();
        assert_abs_diff_eq!(xi_sq, 2.0 + 3.0f64.sqrt(), epsilon = 1e-12);
    }

    #[test]
    fn ermakov_frame_refuses_desitter_and_aliased_grids() {
        let spec = OscillatorSpec::desitter_mode(1.0, 1.0, 1.0).unwrap();
        let samples = vec![
            ModeSample { t: 0.0, u: Complex64::new(0.5, 0.0), du: Complex64::new(0.0, -1.0), mass: 1.0 },
            ModeSample { t: 1.0, u: Complex64::new(0.5, 0.0), du: Complex64::new(0.0, -1.0), mass: 1.0 },
        ];
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-12).unwrap();
        assert!(matches!(ermakov_frame(&traj), Err(Error::UnsupportedKind { .. })));

        // a vacuum sampled at dt = 2 aliases the phase (w dt = 2 >= pi/2)
        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let samples: Vec<ModeSample> = (0..4).map(|i| analytic_vacuum(1.0, 1.0, 2.0 * i as f64)).collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        assert!(matches!(ermakov_frame(&traj), Err(Error::PhaseAliasing { .. })));
    }

    #[test]
    fn ermakov_residual_constant_frame() {
        // xi = w^{-1/2} constant: residual vanishes identically
        let omega: f64 = 2.0;
        let spec = OscillatorSpec::constant(1.0, omega * omega).unwrap();
        let samples: Vec<ModeSample> =
            (0..=2000).map(|i| analytic_vacuum(omega, 1.0, 1e-3 * i as f64)).collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        let res = ermakov_residual(&traj).unwrap();
        assert!(res < 1e-9, "residual {res:.3e}");
    }

    #[test]
    fn ermakov_residual_detects_perturbed_amplitude() {
        let omega: f64 = 1.0;
        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let samples: Vec<ModeSample> = (0..=2000)
            .map(|i| {
                let mut s = analytic_vacuum(omega, 1.0, 1e-3 * i as f64);
                s.u *= 1.01; // +1% amplitude breaks the identity at O(1e-2)
                s
            })
            .collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        let res = ermakov_residual(&traj).unwrap();
        assert!(res > 1e-2, "residual {res:.3e}");
    }

    #[test]
    fn ermakov_residual_needs_uniform_grid() {
        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let ts = [0.0, 0.001, 0.003, 0.004];
        let samples: Vec<ModeSample> = ts.iter().map(|&t| analytic_vacuum(1.0, 1.0, t)).collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        assert!(matches!(ermakov_residual(&traj), Err(Error::NonUniformGrid { .. })));

        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let samples: Vec<ModeSample> = (0..2).map(|i| analytic_vacuum(1.0, 1.0, i as f64 * 1e-3)).collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        assert!(matches!(ermakov_residual(&traj), Err(Error::InsufficientData { .. })));
    }

    #[test]
    fn gaussian_wavefunction_values() {
        // omega = pi vacuum: |u|^2 = 1/(2 pi), so Psi(0) = 1
        let s = vacuum_sample(std::f64::consts::PI);
        let g = GaussianState::new(s).unwrap();
        let psi0 = g.wavefunction(0.0);
        assert_abs_diff_eq!(psi0.re, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(psi0.im, 0.0, epsilon = 1e-12);

        // omega = 1 vacuum: exp_coeff = -1/2 exactly
        let g1 = GaussianState::new(vacuum_sample(1.0)).unwrap();
        assert_abs_diff_eq!(g1.exp_coeff.re, -0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(g1.exp_coeff.im, 0.0, epsilon = 1e-14);
    }

    #[test]
    fn gaussian_normalization_integral() {
        for omega in [0.3, 1.0, 4.0] {
            let g = GaussianState::new(vacuum_sample(omega)).unwrap();
            assert_abs_diff_eq!(g.normalization(), 1.0, epsilon = 1e-6);
        }
        // squeezed states stay normalized
        let params = SqueezeParams::from_polar(0.8, 1.1).unwrap();
        let mixed = mix_mode(&vacuum_sample(1.0), &params).unwrap();
        let g = GaussianState::new(mixed).unwrap();
        assert_abs_diff_eq!(g.normalization(), 1.0, epsilon = 1e-6);
    }

    #[test]
    fn gaussian_rejects_conjugate_mode() {
        let s = vacuum_sample(1.0);
        let bad = ModeSample { u: s.u.conj(), du: s.du.conj(), ..s };
        assert!(GaussianState::new(bad).is_err());
    }

    #[test]
    fn moments_of_vacuum_and_squeezed_states() {
        let r = moments(&vacuum_sample(2.0));
        assert_abs_diff_eq!(r.var_q, 0.25, epsilon = 1e-14);
        assert_abs_diff_eq!(r.var_p, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(r.cov_qp, 0.0, epsilon = 1e-14);

        // squeezed r, delta = 0 at t = 0: var_q = e^{2r}/2
        for r_par in [0.3, 0.7] {
            let params = SqueezeParams::from_polar(r_par, 0.0).unwrap();
            let mixed = mix_mode(&vacuum_sample(1.0), &params).unwrap();
            let m = moments(&mixed);
            assert_abs_diff_eq!(m.var_q, (2.0 * r_par).exp() / 2.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn robertson_schrodinger_saturation() {
        let params = SqueezeParams::from_polar(1.2, 2.3).unwrap();
        for t in [0.0, 0.4, 1.7] {
            let base = analytic_vacuum(1.4, 2.0, t);
            let mixed = mix_mode(&base, &params).unwrap();
            let m = moments(&mixed);
            assert_abs_diff_eq!(m.generalized_uncertainty(), 0.25, epsilon = 1e-12);
        }
    }

    #[test]
    fn uncertainty_product_examples() {
        assert_abs_diff_eq!(uncertainty_product(&vacuum_sample(0.7)), 0.5, epsilon = 1e-14);
        assert_abs_diff_eq!(uncertainty_product(&vacuum_sample(3.0)), 0.5, epsilon = 1e-14);

        // real (mu, nu) at t = 0 keep the product at 1/2
        let params = SqueezeParams::from_polar(0.9, 0.0).unwrap();
        let mixed = mix_mode(&vacuum_sample(1.0), &params).unwrap();
        assert_abs_diff_eq!(uncertainty_product(&mixed), 0.5, epsilon = 1e-12);

        // quarter period later the product peaks at cosh(2r)/2
        let base = analytic_vacuum(1.0, 1.0, std::f64::consts::FRAC_PI_4);
        let params = SqueezeParams::from_polar(0.5, 0.0).unwrap();
        let mixed = mix_mode(&base, &params).unwrap();
        assert_abs_diff_eq!(uncertainty_product(&mixed), 1.0f64.cosh() / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn energy_of_vacuum_and_squeezed_states() {
        let spec = OscillatorSpec::constant(1.0, 4.0).unwrap();
        let e = energy_expectation(&vacuum_sample(2.0), &spec).unwrap();
        assert_abs_diff_eq!(e.epsilon, 1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.kinetic + e.potential, e.epsilon, epsilon = 1e-15);

        // epsilon = w cosh(2r)/2 for a squeezed state
        let spec1 = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let params = SqueezeParams::from_polar(0.6, 1.0).unwrap();
        let mixed = mix_mode(&vacuum_sample(1.0), &params).unwrap();
        let e = energy_expectation(&mixed, &spec1).unwrap();
        assert_abs_diff_eq!(e.epsilon, 1.2f64.cosh() / 2.0, epsilon = 1e-12);
    }

    #[test]
    fn energy_constant_along_trajectory() {
        let spec = OscillatorSpec::constant(1.0, 2.25).unwrap();
        let init = init_minimum_uncertainty(&spec, 0.0).unwrap();
        let grid: Vec<f64> = (0..=200).map(|i| 0.05 * i as f64).collect();
        let traj = integrate_mode(&spec, &init, 10.0, 1e-12, &grid).unwrap();
        let e0 = energy_expectation(&traj.samples()[0], &spec).unwrap().epsilon;
        for s in traj.samples() {
            let e = energy_expectation(s, &spec).unwrap().epsilon;
            assert!(((e - e0) / e0).abs() < 1e-9);
        }
    }

    #[test]
    fn energy_matches_ermakov_form() {
        // epsilon from (u, u') equals (xi'^2 + w^2 xi^2 + xi^{-2})/4
        let omega: f64 = 1.3;
        let spec = OscillatorSpec::constant(1.0, omega * omega).unwrap();
        let params = SqueezeParams::from_polar(0.5, 0.0).unwrap();
        let samples: Vec<ModeSample> = (0..=50)
            .map(|i| mix_mode(&analytic_vacuum(omega, 1.0, 0.02 * i as f64), &params).unwrap())
            .collect();
        let traj = ModeTrajectory::from_samples(spec.clone(), samples, 1e-14).unwrap();
        let frames = ermakov_frame(&traj).unwrap();
        for (s, f) in traj.samples().iter().zip(&frames) {
            let eps = energy_expectation(s, &spec).unwrap().epsilon;
            let eps_frame =
                0.25 * (f.dxi * f.dxi + omega * omega * f.xi * f.xi + 1.0 / (f.xi * f.xi));
            assert!((eps - eps_frame).abs() / eps < 1e-8);
        }
    }

    #[test]
    fn ladder_commutator_normalization() {
        let s = vacuum_sample(1.7);
        assert!(LadderCoefficients::new(&s).commutator_residual() < 1e-14);
        let bad = ModeSample { u: s.u * 1.2, du: s.du * 1.2, ..s };
        assert!(LadderCoefficients::new(&bad).commutator_residual() > 0.4);
    }

    #[test]
    fn excitation_number_values() {
        let id = SqueezeParams::from_polar(0.0, 0.0).unwrap();
        assert_eq!(excitation_number(&id).unwrap(), 0.0);
        let p1 = SqueezeParams::from_polar(1.0, 0.0).unwrap();
        assert_abs_diff_eq!(excitation_number(&p1).unwrap(), 1.0f64.sinh().powi(2), epsilon = 1e-12);
        // delta-independent
        for delta in [0.0, 1.0, 4.0] {
            let p = SqueezeParams::from_polar(0.5, delta).unwrap();
            assert_abs_diff_eq!(
                excitation_number(&p).unwrap(),
                0.5f64.sinh().powi(2),
                epsilon = 1e-12
            );
        }
    }

    #[test]
    fn phase_rate_satisfies_wronskian_relation() {
        // xi^2 theta' = 1, checked discretely on a fine grid
        let spec = OscillatorSpec::constant(1.0, 1.0).unwrap();
        let params = SqueezeParams::from_polar(0.4, 0.0).unwrap();
        let h = 1e-3;
        let samples: Vec<ModeSample> = (0..=1000)
            .map(|i| mix_mode(&analytic_vacuum(1.0, 1.0, h * i as f64), &params).unwrap())
            .collect();
        let traj = ModeTrajectory::from_samples(spec, samples, 1e-14).unwrap();
        let frames = ermakov_frame(&traj).unwrap();
        for w in frames.windows(2) {
            let theta_dot = (w[1].theta - w[0].theta) / h;
            let xi_mid = 0.5 * (w[0].xi + w[1].xi);
            assert!((xi_mid * xi_mid * theta_dot - 1.0).abs() < 1e-3);
        }
    }
}
