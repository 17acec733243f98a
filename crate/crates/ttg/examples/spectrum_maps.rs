//! The order-reversing maps between Spec R and the tame spectrum:
//! supports of the ideals S(p) and the retraction s.
//!
//! ```bash
//! cargo run -p ttg --example spectrum_maps
//! ```

use ttg::rings::{Elem, PrimeIdeal, Ring};
use ttg::spectra::{s_of_support, supp_of_sp, SpclSet};

fn main() -> ttg::Result<()> {
    let z = Ring::Integers;
    for p in [
        PrimeIdeal::Zero,
        PrimeIdeal::Principal(Elem::int(2)),
        PrimeIdeal::Principal(Elem::int(5)),
    ] {
        let w = supp_of_sp(&z, &p)?;
        println!(
            "Supp S({}) = {}, and s recovers {}",
            p.render(&z),
            w.render(),
            s_of_support(&w).render(&z)
        );
    }

    // a finite union of closed points is not the support of a prime:
    // the complement has incomparable maximal elements
    let w = SpclSet::fin(
        z.clone(),
        [
            PrimeIdeal::Principal(Elem::int(2)),
            PrimeIdeal::Principal(Elem::int(3)),
        ],
    );
    println!("{} -> {}", w.render(), s_of_support(&w).render(&z));

    // over the DVR the zero ideal sits below the closed point
    for p in [PrimeIdeal::Zero, PrimeIdeal::DvrMax] {
        let w = supp_of_sp(&Ring::Dvr, &p)?;
        println!(
            "DVR: Supp S({}) = {} -> s gives {}",
            p.render(&Ring::Dvr),
            w.render(),
            s_of_support(&w).render(&Ring::Dvr)
        );
    }
    Ok(())
}
