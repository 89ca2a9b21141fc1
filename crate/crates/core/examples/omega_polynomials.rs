use fracsusy::duality::Duality;
use fracsusy::hopf::MonomialAlgebra;
use fracsusy::kernels::qkernel::q_kernel_terms;
use fracsusy::kernels::{omega_poly, q_kernel, KernelOptions, KernelParams, OmegaReading, QuadrantPoint};
use fracsusy::scalars::context;

fn main() -> fracsusy::Result<()> {
    let ctx = context(3, 1)?;
    let d = Duality::new(&ctx)?;
    for s in 0..3 {
        let w = omega_poly(s, &ctx)?;
        println!("omega_{s}(xi) = {}", d.a().display(&w.to_element(d.a())));
    }
    for (k, l) in [(0, 0), (0, 1), (2, 0)] {
        for (coefficient, s) in q_kernel_terms(&d, k, l, OmegaReading::SummationIndex)? {
            println!("Q_{k}{l}: K_{s} * [{}]", d.a().display(&coefficient));
        }
    }
    let params = KernelParams::new(3, 0, 0.1, 0.0, 1.0);
    let point = QuadrantPoint::new(3, 1.0, 0.0, 0.0)?;
    let q = q_kernel(&d, 0, 1, &params, &point, OmegaReading::SummationIndex, &KernelOptions::default())?;
    for c in q.summary() {
        println!("Q_01 at Q3: {:<16} {:+.12e} {:+.12e}i", c.monomial, c.re, c.im);
    }
    Ok(())
}
