//! CSV emission helpers. Floating-point fields are printed with 17
//! significant digits so identical runs produce bit-identical files.

use std::io::Write;

use crate::error::Result;
use crate::invariant::{EnergyReport, UncertaintyReport};

/// Render an f64 with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Write per-sample moment/energy rows:
/// `t,var_q,var_p,cov_qp,product,epsilon`.
pub fn write_moments_csv<W: Write>(
    mut w: W,
    rows: &[(f64, UncertaintyReport, EnergyReport)],
) -> Result<()> {
    writeln!(w, "t,var_q,var_p,cov_qp,product,epsilon")?;
    for (t, u, e) in rows {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            fmt_f64(*t),
            fmt_f64(u.var_q),
            fmt_f64(u.var_p),
            fmt_f64(u.cov_qp),
            fmt_f64(u.product),
            fmt_f64(e.epsilon),
        )?;
    }
    Ok(())
}
