use std::time::Instant;

use fracsusy::kernels::mp::Prec;
use fracsusy::kernels::{kernel_grid_suite, KernelGrid, KernelOptions};

fn main() -> fracsusy::Result<()> {
    let bits: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(256);
    let grid = KernelGrid::default();
    let opts = KernelOptions { prec: Prec(bits), ..KernelOptions::default() };
    for q in 1..=4u8 {
        let start = Instant::now();
        let (rep, rows) = kernel_grid_suite(3, &grid, &[q], 1e-20, &opts)?;
        let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
        println!("quadrant {q}: {} points, max residual {worst:.2e}, passed {} ({:.1?})", rows.len(), rep.passed, start.elapsed());
        for c in rep.checks.iter().filter(|c| c.informational) {
            println!("  {}: agrees={} {}", c.check, c.passed, c.lhs);
        }
    }
    Ok(())
}
