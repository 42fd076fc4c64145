//! Oscillator profiles: time-dependent mass m(t) and squared frequency w2(t).
//!
//! Everything downstream (mode integration, moments, energies) evaluates the
//! Hamiltonian coefficients through [`OscillatorSpec`]. Units are hbar = 1
//! and all quantities dimensionless.

use crate::error::{Error, Result};

/// Natural cubic spline over strictly increasing knots. Interpolation only;
/// evaluation outside the knot span is a domain error at the call site.
#[derive(Clone, Debug)]
pub(crate) struct CubicSpline {
    t: Vec<f64>,
    y: Vec<f64>,
    /// second derivatives at the knots
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn new(t: Vec<f64>, y: Vec<f64>) -> Result<CubicSpline> {
        if t.len() != y.len() {
            return Err(Error::InvalidArgument(format!(
                "knot count mismatch: {} times vs {} values",
                t.len(),
                y.len()
            )));
        }
        if t.len() < 2 {
            return Err(Error::InsufficientData { needed: 2, got: t.len() });
        }
        if !t.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(
                "knot times must be strictly increasing".into(),
            ));
        }
        let n = t.len();
        // tridiagonal solve for natural end conditions (m[0] = m[n-1] = 0)
        let mut m = vec![0.0; n];
        if n > 2 {
            let mut diag = vec![0.0; n];
            let mut rhs = vec![0.0; n];
            let mut upper = vec![0.0; n];
            for i in 1..n - 1 {
                let h0 = t[i] - t[i - 1];
                let h1 = t[i + 1] - t[i];
                diag[i] = 2.0 * (h0 + h1);
                upper[i] = h1;
                rhs[i] = 6.0 * ((y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0);
            }
            // forward elimination (lower entry at row i is h0 = t[i]-t[i-1])
            for i in 2..n - 1 {
                let h0 = t[i] - t[i - 1];
                let w = h0 / diag[i - 1];
                diag[i] -= w * upper[i - 1];
                rhs[i] -= w * rhs[i - 1];
            }
            for i in (1..n - 1).rev() {
                m[i] = (rhs[i] - upper[i] * m[i + 1]) / diag[i];
            }
        }
        Ok(CubicSpline { t, y, m })
    }

    pub fn span(&self) -> (f64, f64) {
        (self.t[0], *self.t.last().unwrap())
    }

    /// Evaluate at `x`, which must lie inside the knot span.
    pub fn eval(&self, x: f64) -> f64 {
        // exact reproduction at knots, including the last one
        let i = match self.t.binary_search_by(|k| k.partial_cmp(&x).unwrap()) {
            Ok(i) => return self.y[i],
            Err(i) => i.clamp(1, self.t.len() - 1),
        };
        let (t0, t1) = (self.t[i - 1], self.t[i]);
        let h = t1 - t0;
        let a = (t1 - x) / h;
        let b = (x - t0) / h;
        a * self.y[i - 1]
            + b * self.y[i]
            + ((a * a * a - a) * self.m[i - 1] + (b * b * b - b) * self.m[i]) * h * h / 6.0
    }
}

/// Which oscillator family a spec describes.
#[derive(Clone, Debug)]
enum Profile {
    Constant { omega_sq: f64 },
    Tabulated { omega_sq: CubicSpline },
    /// Per-mode oscillator of a massive scalar on an exponentially expanding
    /// background: m(t) = m0 e^{3 H0 t}, w2(t) = mass^2 + k^2 e^{-2 H0 t}.
    DeSitterMode { h0: f64, field_mass: f64, k: f64 },
}

/// Immutable oscillator description: mass scale, profile, and time domain.
#[derive(Clone, Debug)]
pub struct OscillatorSpec {
    profile: Profile,
    m0: f64,
    domain: (f64, f64),
}

impl OscillatorSpec {
    /// Constant-frequency oscillator. `omega_sq` may be negative (inverted
    /// oscillator); operations that need a real frequency check separately.
    pub fn constant(m0: f64, omega_sq: f64) -> Result<OscillatorSpec> {
        if !(m0 > 0.0) {
            return Err(Error::InvalidArgument(format!("m0 = {m0} must be positive")));
        }
        Ok(OscillatorSpec {
            profile: Profile::Constant { omega_sq },
            m0,
            domain: (f64::NEG_INFINITY, f64::INFINITY),
        })
    }

    /// Tabulated squared frequency on strictly increasing knots, cubic
    /// interpolation in between. The domain is the knot span; extrapolation
    /// is refused.
    pub fn tabulated(m0: f64, knots_t: Vec<f64>, knots_omega_sq: Vec<f64>) -> Result<OscillatorSpec> {
        if !(m0 > 0.0) {
            return Err(Error::InvalidArgument(format!("m0 = {m0} must be positive")));
        }
        let spline = CubicSpline::new(knots_t, knots_omega_sq)?;
        let domain = spline.span();
        Ok(OscillatorSpec {
            profile: Profile::Tabulated { omega_sq: spline },
            m0,
            domain,
        })
    }

    /// One Fourier mode of a minimally coupled massive scalar in an
    /// exponentially expanding spacetime with rate `h0`. The mass scale is
    /// fixed to m0 = 1 in these units.
    pub fn desitter_mode(h0: f64, field_mass: f64, k: f64) -> Result<OscillatorSpec> {
        if !(h0 > 0.0) {
            return Err(Error::InvalidArgument(format!("H0 = {h0} must be positive")));
        }
        if !(k > 0.0) {
            return Err(Error::InvalidArgument(format!("k = {k} must be positive")));
        }
        if !(field_mass >= 0.0) {
            return Err(Error::InvalidArgument(format!(
                "field mass = {field_mass} must be nonnegative"
            )));
        }
        Ok(OscillatorSpec {
            profile: Profile::DeSitterMode { h0, field_mass, k },
            m0: 1.0,
            domain: (f64::NEG_INFINITY, f64::INFINITY),
        })
    }

    /// Restrict the time domain (intersection with the current one).
    pub fn with_domain(mut self, t_min: f64, t_max: f64) -> Result<OscillatorSpec> {
        if !(t_min < t_max) {
            return Err(Error::InvalidArgument(format!(
                "empty domain [{t_min}, {t_max}]"
            )));
        }
        self.domain = (self.domain.0.max(t_min), self.domain.1.min(t_max));
        if !(self.domain.0 < self.domain.1) {
            return Err(Error::InvalidArgument(
                "requested domain does not intersect the profile domain".into(),
            ));
        }
        Ok(self)
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn m0(&self) -> f64 {
        self.m0
    }

    pub fn kind_name(&self) -> &'static str {
        match self.profile {
            Profile::Constant { .. } => "constant",
            Profile::Tabulated { .. } => "tabulated",
            Profile::DeSitterMode { .. } => "desitter-mode",
        }
    }

    /// The mass is time-independent for constant and tabulated kinds.
    pub fn has_constant_mass(&self) -> bool {
        !matches!(self.profile, Profile::DeSitterMode { .. })
    }

    fn check_domain(&self, t: f64) -> Result<()> {
        if t < self.domain.0 || t > self.domain.1 || t.is_nan() {
            return Err(Error::Domain { t, lo: self.domain.0, hi: self.domain.1 });
        }
        Ok(())
    }

    /// w2(t) for this profile.
    pub fn frequency_sq(&self, t: f64) -> Result<f64> {
        self.check_domain(t)?;
        Ok(match &self.profile {
            Profile::Constant { omega_sq } => *omega_sq,
            Profile::Tabulated { omega_sq } => omega_sq.eval(t),
            Profile::DeSitterMode { h0, field_mass, k } => {
                field_mass * field_mass + k * k * (-2.0 * h0 * t).exp()
            }
        })
    }

    /// m(t) for this profile; strictly positive on the domain.
    pub fn mass(&self, t: f64) -> Result<f64> {
        self.check_domain(t)?;
        Ok(match &self.profile {
            Profile::Constant { .. } | Profile::Tabulated { .. } => self.m0,
            Profile::DeSitterMode { h0, .. } => self.m0 * (3.0 * h0 * t).exp(),
        })
    }

    /// d(ln m)/dt, known in closed form for every kind.
    pub fn mass_log_derivative(&self, t: f64) -> Result<f64> {
        self.check_domain(t)?;
        Ok(match &self.profile {
            Profile::Constant { .. } | Profile::Tabulated { .. } => 0.0,
            Profile::DeSitterMode { h0, .. } => 3.0 * h0,
        })
    }
}

/// Read a two-column CSV `t,omega_sq` (header required) into knot vectors.
pub fn read_profile_csv(path: &std::path::Path) -> Result<(Vec<f64>, Vec<f64>)> {
    let text = std::fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header.trim() == "t,omega_sq" => {}
        Some((_, header)) => {
            return Err(Error::Config(format!(
                "profile CSV must start with header `t,omega_sq`, found `{}`",
                header.trim()
            )))
        }
        None => return Err(Error::Config("profile CSV is empty".into())),
    }
    let mut ts = Vec::new();
    let mut ys = Vec::new();
    for (idx, line) in lines {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut fields = line.split(',');
        let parse = |s: Option<&str>| -> Result<f64> {
            s.ok_or_else(|| Error::Config(format!("line {}: missing field", idx + 1)))?
                .trim()
                .parse::<f64>()
                .map_err(|e| Error::Config(format!("line {}: {e}", idx + 1)))
        };
        ts.push(parse(fields.next())?);
        ys.push(parse(fields.next())?);
        if fields.next().is_some() {
            return Err(Error::Config(format!("line {}: expected two columns", idx + 1)));
        }
    }
    Ok((ts, ys))
}
