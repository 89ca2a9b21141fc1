use fracsusy::kernels::bessel::{bessel_eval, bessel_self_tests, BesselKind};
use fracsusy::kernels::mp::Prec;

fn main() -> fracsusy::Result<()> {
    let prec = Prec(256);
    for (kind, order, arg) in [(BesselKind::K, 0.5, 1.0), (BesselKind::K, 0.0, 2.0), (BesselKind::H1, 0.3, 1.5), (BesselKind::H2, -0.7, 0.8)] {
        let v = bessel_eval(prec, kind, &prec.float(order), &prec.float(arg), 1e-40)?;
        let z = v.to_c64();
        println!("{kind:?}_{order}({arg}) = {:.20e} {:+.20e}i  (err {:.1e})", z.re, z.im, v.err_estimate);
    }
    let report = bessel_self_tests(prec, 1e-30)?;
    for c in &report.checks {
        println!("{:<40} residual {:.2e} tol {:.0e} {}", c.check, c.residual, c.tolerance, if c.passed { "ok" } else { "FAIL" });
    }
    Ok(())
}
