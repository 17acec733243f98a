//! The smash-nilpotence search: residue-field checks, tensor powers,
//! annihilator chains and verified witnesses.
//!
//! ```bash
//! cargo run -p ttg --example nilpotence_search
//! ```

use ttg::complexes::{ChainMap, FreeComplex};
use ttg::nilpotence::find_nilpotence_index;
use ttg::rings::{Elem, Ring};
use ttg::DEFAULT_SIZE_BUDGET;

fn main() -> ttg::Result<()> {
    for (spec, a) in [("Z/4", 2i64), ("Z/8", 2), ("Z/9", 3), ("Z/6", 2)] {
        let ring = Ring::parse(spec)?;
        let unit = FreeComplex::unit(ring.clone());
        let f = ChainMap::scalar_endo(&unit, &Elem::int(a));
        let res = find_nilpotence_index(&f, 8, DEFAULT_SIZE_BUDGET)?;
        println!("{a}·id over {spec}: {res}");
    }
    Ok(())
}
