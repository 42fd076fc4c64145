//! Complex mode functions of the classical oscillator equation
//! d/dt(m(t) u') + m(t) w2(t) u = 0, normalized by the Wronskian condition
//! m (u'* u - u* u') = i.
//!
//! The Wronskian is conserved exactly by the flow for any profile, so its
//! drift along a numerical trajectory measures integrator error alone. It is
//! monitored, never renormalized: a drift beyond 10^3 * tol aborts the run.

use std::io::Write;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::ode;
use crate::oscillator::OscillatorSpec;
use crate::report::fmt_f64;

/// State of a mode function at one instant.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModeSample {
    pub t: f64,
    pub u: Complex64,
    /// du = u'(t)
    pub du: Complex64,
    /// m(t) at this instant
    pub mass: f64,
}

impl ModeSample {
    /// The Wronskian bilinear m (du* u - u* du); equals i for a normalized
    /// positive-frequency mode.
    pub fn wronskian(&self) -> Complex64 {
        (self.du.conj() * self.u - self.u.conj() * self.du) * self.mass
    }

    /// |W - i|, the deviation from exact normalization.
    pub fn wronskian_residual(&self) -> f64 {
        (self.wronskian() - Complex64::new(0.0, 1.0)).norm()
    }
}

/// `wronskian_residual` as a free function, mirroring the operation name.
pub fn wronskian_residual(sample: &ModeSample) -> f64 {
    sample.wronskian_residual()
}

/// Instantaneous-vacuum initial data at `t0`: u = 1/sqrt(2 m w), du = -i w u.
/// This is the positive-frequency minimum-uncertainty sample (Im(du/u) < 0)
/// and satisfies the Wronskian condition exactly.
pub fn init_minimum_uncertainty(spec: &OscillatorSpec, t0: f64) -> Result<ModeSample> {
    let omega_sq = spec.frequency_sq(t0)?;
    if !(omega_sq > 0.0) {
        return Err(Error::NoInstantaneousVacuum { t: t0, omega_sq });
    }
    let mass = spec.mass(t0)?;
    let omega = omega_sq.sqrt();
    let u = 1.0 / (2.0 * mass * omega).sqrt();
    Ok(ModeSample {
        t: t0,
        u: Complex64::new(u, 0.0),
        du: Complex64::new(0.0, -omega * u),
        mass,
    })
}

/// A time-ordered set of mode samples together with the spec that produced
/// them and the observed Wronskian drift.
#[derive(Clone, Debug)]
pub struct ModeTrajectory {
    spec: OscillatorSpec,
    samples: Vec<ModeSample>,
    tol: f64,
    max_wronskian_drift: f64,
}

impl ModeTrajectory {
    /// Build a trajectory from externally constructed samples (closed-form
    /// modes, mixed modes). Samples must be strictly increasing in t.
    pub fn from_samples(
        spec: OscillatorSpec,
        samples: Vec<ModeSample>,
        tol: f64,
    ) -> Result<ModeTrajectory> {
        if samples.is_empty() {
            return Err(Error::InsufficientData { needed: 1, got: 0 });
        }
        if !samples.windows(2).all(|w| w[0].t < w[1].t) {
            return Err(Error::InvalidArgument(
                "trajectory samples must be strictly increasing in t".into(),
            ));
        }
        let drift = samples
            .iter()
            .map(|s| s.wronskian_residual())
            .fold(0.0, f64::max);
        Ok(ModeTrajectory { spec, samples, tol, max_wronskian_drift: drift })
    }

    pub fn spec(&self) -> &OscillatorSpec {
        &self.spec
    }

    pub fn samples(&self) -> &[ModeSample] {
        &self.samples
    }

    pub fn tol(&self) -> f64 {
        self.tol
    }

    pub fn max_wronskian_drift(&self) -> f64 {
        self.max_wronskian_drift
    }

    /// Samples with t in the closed interval [t_lo, t_hi].
    pub fn window(&self, t_lo: f64, t_hi: f64) -> &[ModeSample] {
        let start = self.samples.partition_point(|s| s.t < t_lo);
        let end = self.samples.partition_point(|s| s.t <= t_hi);
        &self.samples[start..end]
    }

    /// CSV serialization: `t,re_u,im_u,re_du,im_du,mass,wronskian_residual`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "t,re_u,im_u,re_du,im_du,mass,wronskian_residual")?;
        for s in &self.samples {
            writeln!(
                w,
                "{},{},{},{},{},{},{}",
                fmt_f64(s.t),
                fmt_f64(s.u.re),
                fmt_f64(s.u.im),
                fmt_f64(s.du.re),
                fmt_f64(s.du.im),
                fmt_f64(s.mass),
                fmt_f64(s.wronskian_residual()),
            )?;
        }
        Ok(())
    }
}

/// Integrate the mode equation from `init` to `t_end`, sampling at
/// `output_grid` (monotone in the direction of integration; backward runs
/// with t_end < init.t are supported by reflecting the time axis).
pub fn integrate_mode(
    spec: &OscillatorSpec,
    init: &ModeSample,
    t_end: f64,
    tol: f64,
    output_grid: &[f64],
) -> Result<ModeTrajectory> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be positive")));
    }
    let init_residual = init.wronskian_residual();
    if init_residual > 10.0 * tol {
        return Err(Error::InvalidInit { residual: init_residual, limit: 10.0 * tol });
    }
    if t_end == init.t {
        return Err(Error::InvalidArgument("t_end equals the initial time".into()));
    }
    if output_grid.is_empty() {
        return Err(Error::InvalidArgument("output grid is empty".into()));
    }
    let backward = t_end < init.t;
    let (t_lo, t_hi) = if backward { (t_end, init.t) } else { (init.t, t_end) };
    // endpoints inside the profile domain (the integrator never leaves them)
    spec.frequency_sq(t_lo)?;
    spec.frequency_sq(t_hi)?;

    let dir_ok = if backward {
        output_grid.windows(2).all(|w| w[0] > w[1])
    } else {
        output_grid.windows(2).all(|w| w[0] < w[1])
    };
    if !dir_ok {
        return Err(Error::InvalidArgument(
            "output grid must be strictly monotone in the direction of integration".into(),
        ));
    }
    if output_grid
        .iter()
        .any(|&t| t < t_lo || t > t_hi || !t.is_finite())
    {
        return Err(Error::Domain {
            t: *output_grid
                .iter()
                .find(|&&t| t < t_lo || t > t_hi || !t.is_finite())
                .unwrap(),
            lo: t_lo,
            hi: t_hi,
        });
    }

    // Reflect backward runs: s = -t, w(s) = y(-s), w'(s) = -f(-s, w).
    let sgn = if backward { -1.0 } else { 1.0 };
    let (lo, hi) = self::domain(spec);
    let rhs = move |s: f64, y: &[f64; 4]| -> [f64; 4] {
        let t = (sgn * s).clamp(lo, hi);
        let w2 = spec.frequency_sq(t).expect("inside domain");
        let ml = spec.mass_log_derivative(t).expect("inside domain");
        let (ur, ui, vr, vi) = (y[0], y[1], y[2], y[3]);
        [
            sgn * vr,
            sgn * vi,
            sgn * (-ml * vr - w2 * ur),
            sgn * (-ml * vi - w2 * ui),
        ]
    };

    let s0 = sgn * init.t;
    let s_end = sgn * t_end;
    let grid_s: Vec<f64> = output_grid.iter().map(|&t| sgn * t).collect();
    let y0 = [init.u.re, init.u.im, init.du.re, init.du.im];

    let drift_limit = 1e3 * tol;
    let mut samples: Vec<ModeSample> = Vec::with_capacity(output_grid.len());
    let mut max_drift = init_residual;
    let mut sample_err: Option<Error> = None;

    let mut on_dense = |s: f64, y: &[f64; 4]| {
        let t = sgn * s;
        let mass = spec.mass(t.clamp(lo, hi)).expect("inside domain");
        let sample = ModeSample {
            t,
            u: Complex64::new(y[0], y[1]),
            du: Complex64::new(y[2], y[3]),
            mass,
        };
        let r = sample.wronskian_residual();
        if r > max_drift {
            max_drift = r;
        }
        if r > drift_limit && sample_err.is_none() {
            sample_err = Some(Error::IntegrationFailure { t, drift: r, limit: drift_limit });
        }
        samples.push(sample);
    };
    let mut on_step = |s: f64, y: &[f64; 4]| -> Result<()> {
        let t = sgn * s;
        let mass = spec.mass(t.clamp(lo, hi)).expect("inside domain");
        let sample = ModeSample {
            t,
            u: Complex64::new(y[0], y[1]),
            du: Complex64::new(y[2], y[3]),
            mass,
        };
        let r = sample.wronskian_residual();
        if r > max_drift {
            max_drift = r;
        }
        if r > drift_limit {
            return Err(Error::IntegrationFailure { t, drift: r, limit: drift_limit });
        }
        Ok(())
    };

    ode::integrate_dense(&rhs, s0, y0, s_end, tol, tol, &grid_s, &mut on_dense, &mut on_step)?;
    if let Some(e) = sample_err {
        return Err(e);
    }
    if backward {
        samples.reverse();
    }

    Ok(ModeTrajectory {
        spec: spec.clone(),
        samples,
        tol,
        max_wronskian_drift: max_drift,
    })
}

fn domain(spec: &OscillatorSpec) -> (f64, f64) {
    spec.domain()
}
