//! The zero-differential identity checks over the DVR and the
//! cross-module property suites, at their documented windows.
//!
//! ```bash
//! cargo run -p ttg --example identity_suite
//! ```

use ttg::verify::run_all;

fn main() -> ttg::Result<()> {
    for report in run_all(32, 7)? {
        println!(
            "{}: {}",
            report.name,
            if report.pass { "pass" } else { "FAIL" }
        );
    }
    Ok(())
}
