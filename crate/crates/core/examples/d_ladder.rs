use fracsusy::duality::Duality;
use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::{d_ladder_suite, discriminate_reading, LadderOptions};
use fracsusy::scalars::context;

fn main() -> fracsusy::Result<()> {
    let d = Duality::new(&context(3, 2)?)?;
    let opts = LadderOptions::new(Prec(256));
    for n in 0..3 {
        let report = d_ladder_suite(&d, n, 0.1, &opts)?;
        println!("n = {n}:");
        for c in &report.checks {
            let tag = if c.informational { "info" } else if c.passed { "ok" } else { "FAIL" };
            println!("  {:<28} residual {:.2e} {tag} {} {}", c.check, c.residual, c.lhs, c.rhs);
        }
    }
    for (reading, residual) in discriminate_reading(&d, 1, 0.1, &opts)? {
        println!("omega reading {reading:?}: counted ladder residual {residual:.2e}");
    }
    Ok(())
}
