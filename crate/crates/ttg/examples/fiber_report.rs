//! The fiber report over a DVR: infinitely many primes over the generic
//! point, demonstrated on a finite chain with verified separating
//! witnesses.
//!
//! ```bash
//! cargo run -p ttg --example fiber_report
//! ```

use ttg::ideals::dvr_fiber_report;

fn main() -> ttg::Result<()> {
    println!("{}", dvr_fiber_report(4)?);
    Ok(())
}
