//! Two-route verification of `K_s` on parameter grids.

use serde::Serialize;

use super::mp::ComplexValue;
use super::{kernel_eval_detailed, ClosedTable, EvalMode, KernelOptions, KernelParams, QuadrantPoint};
use crate::error::{Error, Result};
use crate::report::NumericReport;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelGrid {
    pub r: Vec<f64>,
    pub rho: Vec<f64>,
    pub beta: Vec<f64>,
    /// Values of `nu - mu + s/p`, realized with `s = 0`, `mu = 0`.
    pub strip: Vec<f64>,
    pub lambda: f64,
}

impl Default for KernelGrid {
    fn default() -> Self {
        KernelGrid {
            r: vec![0.5, 1.0, 2.0],
            rho: vec![0.5, 1.0, 2.0],
            beta: vec![-1.0, 0.0, 1.0],
            strip: vec![-0.3, 0.0, 0.3],
            lambda: 0.0,
        }
    }
}

impl KernelGrid {
    /// `default` or `;`-separated `key=v1,v2,...` with keys `r`, `rho`, `beta`,
    /// `a`, `lambda`; missing keys keep their defaults.
    pub fn parse(text: &str) -> Result<Self> {
        let mut g = KernelGrid::default();
        if text.trim() == "default" {
            return Ok(g);
        }
        for part in text.split(';').filter(|s| !s.trim().is_empty()) {
            let (key, vals) = part.split_once('=').ok_or_else(|| Error::Parse(format!("grid entry `{part}`")))?;
            let vals: Vec<f64> = vals
                .split(',')
                .map(|v| v.trim().parse::<f64>().map_err(|_| Error::Parse(format!("grid value `{v}`"))))
                .collect::<Result<_>>()?;
            match key.trim() {
                "r" => g.r = vals,
                "rho" => g.rho = vals,
                "beta" => g.beta = vals,
                "a" => g.strip = vals,
                "lambda" => g.lambda = *vals.first().ok_or_else(|| Error::Parse("empty lambda".into()))?,
                k => return Err(Error::Parse(format!("unknown grid key `{k}`"))),
            }
        }
        Ok(g)
    }

    pub fn len(&self) -> usize {
        self.r.len() * self.rho.len() * self.beta.len() * self.strip.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GridRow {
    pub quadrant: u8,
    pub r: f64,
    pub rho: f64,
    pub beta: f64,
    pub strip: f64,
    pub integral: ComplexValue,
    pub closed: ComplexValue,
    pub residual: f64,
}

/// Relative tolerance of the two-route comparison in a quadrant.
pub fn quadrant_tolerance(quadrant: u8) -> f64 {
    if quadrant >= 3 {
        1e-8
    } else {
        1e-6
    }
}

pub fn kernel_grid(p: u32, grid: &KernelGrid, quadrants: &[u8], precision: f64, opts: &KernelOptions) -> Result<Vec<GridRow>> {
    let mut rows = Vec::with_capacity(grid.len() * quadrants.len());
    for &quadrant in quadrants {
        for &r in &grid.r {
            for &rho in &grid.rho {
                for &beta in &grid.beta {
                    for &a in &grid.strip {
                        let point = QuadrantPoint::new(quadrant, rho, beta, grid.lambda)?;
                        let params = KernelParams { p, s: 0, nu: a, mu: 0.0, r, precision };
                        let integral = kernel_eval_detailed(&params, &point, EvalMode::Integral, opts)?.value;
                        let closed = kernel_eval_detailed(&params, &point, EvalMode::Closed, opts)?.value;
                        let residual = integral.rel_diff(&closed);
                        rows.push(GridRow { quadrant, r, rho, beta, strip: a, integral, closed, residual });
                    }
                }
            }
        }
    }
    Ok(rows)
}

pub fn kernel_grid_suite(p: u32, grid: &KernelGrid, quadrants: &[u8], precision: f64, opts: &KernelOptions) -> Result<(NumericReport, Vec<GridRow>)> {
    let mut rep = NumericReport::new("kernel_verify")
        .with_config("p", p)
        .with_config("bits", opts.prec.0)
        .with_config("precision", precision)
        .with_config("theta", opts.theta)
        .with_config("points", grid.len() * quadrants.len())
        .with_config("quadrants", format!("{quadrants:?}"));
    rep.convention("closed_table", format!("{:?}", opts.table));
    rep.convention("contour", "t + i theta(t), theta(t) interpolating the decaying directions; trapezoid with step halving");
    let rows = kernel_grid(p, grid, quadrants, precision, opts)?;
    for &q in quadrants {
        let worst = rows.iter().filter(|r| r.quadrant == q).map(|r| r.residual).fold(0.0, f64::max);
        rep.numeric(format!("two_route[quadrant {q}]"), worst, quadrant_tolerance(q), format!("{worst:e}"), String::new());
        rep.numeric(format!("within_precision[quadrant {q}]"), worst, 10.0 * precision, format!("{worst:e}"), String::new());
        let sample = rows.iter().find(|r| r.quadrant == q);
        if let Some(row) = sample {
            let point = QuadrantPoint::new(q, row.rho, row.beta, grid.lambda)?;
            let params = KernelParams { p, s: 0, nu: row.strip, mu: 0.0, r: row.r, precision };
            let printed = KernelOptions { table: ClosedTable::Printed, ..*opts };
            let alt = kernel_eval_detailed(&params, &point, EvalMode::Closed, &printed)?.value;
            let d = alt.rel_diff(&row.integral);
            rep.record(format!("printed_table[quadrant {q}]"), d < quadrant_tolerance(q), format!("{d:e}"), String::new());
        }
    }
    Ok((rep, rows))
}

pub fn rows_to_csv(rows: &[GridRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "quadrant", "r", "rho", "beta", "strip", "integral_re", "integral_im", "integral_err", "closed_re", "closed_im",
        "closed_err", "residual",
    ])
    .expect("in-memory csv");
    for row in rows {
        let i = row.integral.to_c64();
        let c = row.closed.to_c64();
        w.write_record([
            row.quadrant.to_string(),
            row.r.to_string(),
            row.rho.to_string(),
            row.beta.to_string(),
            row.strip.to_string(),
            format!("{:.17e}", i.re),
            format!("{:.17e}", i.im),
            format!("{:.3e}", row.integral.err_estimate),
            format!("{:.17e}", c.re),
            format!("{:.17e}", c.im),
            format!("{:.3e}", row.closed.err_estimate),
            format!("{:.3e}", row.residual),
        ])
        .expect("in-memory csv");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv")).expect("ascii csv")
}
