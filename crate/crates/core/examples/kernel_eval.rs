use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::{kernel_eval_detailed, EvalMode, KernelOptions, KernelParams, QuadrantPoint};

fn main() -> fracsusy::Result<()> {
    let params = KernelParams { precision: 1e-25, ..KernelParams::new(3, 1, 0.1, -0.2, 1.0) };
    let opts = KernelOptions { prec: Prec(256), ..KernelOptions::default() };
    println!("a = nu - mu + s/p = {:.6}", params.strip());
    for quadrant in 1..=4 {
        let point = QuadrantPoint::new(quadrant, 1.0, 0.25, 0.5)?;
        let i = kernel_eval_detailed(&params, &point, EvalMode::Integral, &opts)?;
        let c = kernel_eval_detailed(&params, &point, EvalMode::Closed, &opts)?;
        let z = c.value.to_c64();
        println!(
            "Q{quadrant} (z+ = {:+.3}, z- = {:+.3}): {:.15e} {:+.15e}i, integral vs closed {:.1e}, {} nodes, tilt {:+}{}",
            point.z_plus,
            point.z_minus,
            z.re,
            z.im,
            i.value.rel_diff(&c.value),
            i.points,
            i.tilt,
            if i.tilt_retried { " (retried)" } else { "" }
        );
    }
    Ok(())
}
