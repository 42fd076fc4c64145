//! Embedded Dormand-Prince 5(4) integrator with a fourth-order continuous
//! extension, used for the classical mode equation.
//!
//! Dense output is evaluated at caller-requested grid points instead of
//! forcing the step sequence through them, so step-size control is never
//! perturbed by the output grid.

use crate::error::{Error, Result};

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const A71: f64 = 35.0 / 384.0;
const A73: f64 = 500.0 / 1113.0;
const A74: f64 = 125.0 / 192.0;
const A75: f64 = -2187.0 / 6784.0;
const A76: f64 = 11.0 / 84.0;

// difference between the 5th- and 4th-order weights
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

// continuous-extension weights
const D1: f64 = -12715105075.0 / 11282082432.0;
const D3: f64 = 87487479700.0 / 32700410799.0;
const D4: f64 = -10690763975.0 / 1880347072.0;
const D5: f64 = 701980252875.0 / 199316789632.0;
const D6: f64 = -1453857185.0 / 822651844.0;
const D7: f64 = 69997945.0 / 29380423.0;

const MAX_STEPS: usize = 20_000_000;

#[inline]
fn axpy<const N: usize>(y: &[f64; N], h: f64, terms: &[(f64, &[f64; N])]) -> [f64; N] {
    let mut out = *y;
    for (c, k) in terms {
        for i in 0..N {
            out[i] += h * c * k[i];
        }
    }
    out
}

/// One accepted step's interpolant over [t, t + h].
struct DenseStep<const N: usize> {
    rcont: [[f64; N]; 5],
}

impl<const N: usize> DenseStep<N> {
    fn eval(&self, theta: f64) -> [f64; N] {
        let th1 = 1.0 - theta;
        let mut out = [0.0; N];
        for i in 0..N {
            out[i] = self.rcont[0][i]
                + theta
                    * (self.rcont[1][i]
                        + th1
                            * (self.rcont[2][i]
                                + theta * (self.rcont[3][i] + th1 * self.rcont[4][i])));
        }
        out
    }
}

/// Integrate y' = f(t, y) from `t0` to `t_end` (t_end > t0), emitting dense
/// output at the ascending `grid` (all points within [t0, t_end]) through
/// `on_dense`, and calling `on_step` at every accepted step endpoint.
pub(crate) fn integrate_dense<const N: usize>(
    f: &dyn Fn(f64, &[f64; N]) -> [f64; N],
    t0: f64,
    y0: [f64; N],
    t_end: f64,
    rtol: f64,
    atol: f64,
    grid: &[f64],
    on_dense: &mut dyn FnMut(f64, &[f64; N]),
    on_step: &mut dyn FnMut(f64, &[f64; N]) -> Result<()>,
) -> Result<()> {
    assert!(t_end > t0);
    debug_assert!(grid.windows(2).all(|w| w[0] <= w[1]));

    let mut cursor = 0;
    while cursor < grid.len() && grid[cursor] <= t0 {
        on_dense(grid[cursor], &y0);
        cursor += 1;
    }

    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut h = initial_step(f, t, &y, &k1, t_end - t0, rtol, atol);
    let mut rejected = false;

    for _ in 0..MAX_STEPS {
        if t >= t_end {
            break;
        }
        let mut last = false;
        if t + h >= t_end {
            h = t_end - t;
            last = true;
        }
        if h <= f64::EPSILON * t.abs().max(1.0) * 4.0 {
            return Err(Error::IntegrationStalled {
                t,
                detail: format!("step size underflow (h = {h:.3e})"),
            });
        }

        let k2 = f(t + C2 * h, &axpy(&y, h, &[(A21, &k1)]));
        let k3 = f(t + C3 * h, &axpy(&y, h, &[(A31, &k1), (A32, &k2)]));
        let k4 = f(t + C4 * h, &axpy(&y, h, &[(A41, &k1), (A42, &k2), (A43, &k3)]));
        let k5 = f(
            t + C5 * h,
            &axpy(&y, h, &[(A51, &k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
        );
        let k6 = f(
            t + h,
            &axpy(&y, h, &[(A61, &k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
        );
        let y_new = axpy(&y, h, &[(A71, &k1), (A73, &k3), (A74, &k4), (A75, &k5), (A76, &k6)]);
        let k7 = f(t + h, &y_new);

        // scaled RMS error of the embedded pair
        let mut err_sq = 0.0;
        for i in 0..N {
            let e = h
                * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
            let sc = atol + rtol * y[i].abs().max(y_new[i].abs());
            err_sq += (e / sc) * (e / sc);
        }
        let err = (err_sq / N as f64).sqrt();

        if err <= 1.0 {
            // accepted: build the interpolant, emit any grid points inside
            if cursor < grid.len() && grid[cursor] <= t + h {
                let mut rcont = [[0.0; N]; 5];
                for i in 0..N {
                    let ydiff = y_new[i] - y[i];
                    let bspl = h * k1[i] - ydiff;
                    rcont[0][i] = y[i];
                    rcont[1][i] = ydiff;
                    rcont[2][i] = bspl;
                    rcont[3][i] = ydiff - h * k7[i] - bspl;
                    rcont[4][i] = h
                        * (D1 * k1[i]
                            + D3 * k3[i]
                            + D4 * k4[i]
                            + D5 * k5[i]
                            + D6 * k6[i]
                            + D7 * k7[i]);
                }
                let dense = DenseStep { rcont };
                while cursor < grid.len() && grid[cursor] <= t + h {
                    let theta = ((grid[cursor] - t) / h).clamp(0.0, 1.0);
                    let yg = dense.eval(theta);
                    on_dense(grid[cursor], &yg);
                    cursor += 1;
                }
            }

            t = if last { t_end } else { t + h };
            y = y_new;
            k1 = k7; // first-same-as-last
            on_step(t, &y)?;

            let fac = (0.9 * err.powf(-0.2)).clamp(0.2, if rejected { 1.0 } else { 10.0 });
            h *= fac;
            rejected = false;
        } else {
            h *= (0.9 * err.powf(-0.2)).clamp(0.2, 1.0);
            rejected = true;
        }
    }

    if t < t_end {
        return Err(Error::IntegrationStalled {
            t,
            detail: format!("step limit of {MAX_STEPS} exceeded"),
        });
    }
    // grid points numerically equal to t_end that were not swept up above
    while cursor < grid.len() {
        on_dense(grid[cursor], &y);
        cursor += 1;
    }
    Ok(())
}

/// Hairer-style automatic initial step selection.
fn initial_step<const N: usize>(
    f: &dyn Fn(f64, &[f64; N]) -> [f64; N],
    t0: f64,
    y0: &[f64; N],
    f0: &[f64; N],
    span: f64,
    rtol: f64,
    atol: f64,
) -> f64 {
    let sc = |i: usize| atol + rtol * y0[i].abs();
    let mut d0 = 0.0;
    let mut d1 = 0.0;
    for i in 0..N {
        d0 += (y0[i] / sc(i)).powi(2);
        d1 += (f0[i] / sc(i)).powi(2);
    }
    let d0 = (d0 / N as f64).sqrt();
    let d1 = (d1 / N as f64).sqrt();
    let h0 = if d0 < 1e-5 || d1 < 1e-5 { 1e-6 } else { 0.01 * d0 / d1 };
    let h0 = h0.min(span);

    let y1: [f64; N] = std::array::from_fn(|i| y0[i] + h0 * f0[i]);
    let f1 = f(t0 + h0, &y1);
    let mut d2 = 0.0;
    for i in 0..N {
        d2 += ((f1[i] - f0[i]) / sc(i)).powi(2);
    }
    let d2 = (d2 / N as f64).sqrt() / h0;

    let dmax = d1.max(d2);
    let h1 = if dmax <= 1e-15 {
        (h0 * 1e-3).max(1e-6)
    } else {
        (0.01 / dmax).powf(0.2)
    };
    (100.0 * h0).min(h1).min(span)
}
