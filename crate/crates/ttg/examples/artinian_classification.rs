//! Over an artinian ring every thick tensor ideal is compact, and the
//! lattice of ideals is the powerset of the spectrum.
//!
//! ```bash
//! cargo run -p ttg --example artinian_classification
//! ```

use ttg::complexes::FreeComplex;
use ttg::corpus;
use ttg::ideals::enumerate_artinian;
use ttg::rings::Ring;
use ttg::spectra::artinian_spc_report;

fn main() -> ttg::Result<()> {
    let mut rng = corpus::rng(7);
    for spec in ["Z/12", "Z/30", "Z/8"] {
        let ring = Ring::parse(spec)?;
        let samples: Vec<FreeComplex> = (0..20)
            .map(|_| corpus::rand_complex(&ring, &mut rng, 3, 3))
            .collect();
        let lattice = enumerate_artinian(&ring, &samples)?;
        println!("{lattice}");
    }
    println!("{}", artinian_spc_report(&Ring::parse("Z/12")?)?);
    Ok(())
}
