use std::time::Instant;

use fracsusy::afalg::{a_axiom_suite, AAlgebra};
use fracsusy::scalars::context;
use fracsusy::ufalg::{u_axiom_suite, UAlgebra};

fn main() -> fracsusy::Result<()> {
    for p in [3, 5, 7] {
        let ctx = context(p, 2)?;
        let start = Instant::now();
        let u = u_axiom_suite(&UAlgebra::new(&ctx, -1), 3, 200, 1)?;
        let a = a_axiom_suite(&AAlgebra::new(&ctx), 3, 200, 1)?;
        println!(
            "p={p}: U {}/{} passed, A {}/{} passed in {:.1?}",
            u.total - u.failed,
            u.total,
            a.total - a.failed,
            a.total,
            start.elapsed()
        );
        for c in u.failures().chain(a.failures()).take(5) {
            println!("  failed {}: {} vs {}", c.check, c.lhs, c.rhs);
        }
    }
    Ok(())
}
