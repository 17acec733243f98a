//! The null-homotopy solver: witnesses for `f ≃ 0` and annihilators of
//! maps, decided exactly over the covering PID.
//!
//! ```bash
//! cargo run -p ttg --example nullhomotopy_witness
//! ```

use ttg::complexes::{ann_map, is_nullhomotopic, koszul, ChainMap};
use ttg::rings::{Elem, Ring};

fn main() -> ttg::Result<()> {
    let z = Ring::Integers;
    let k2 = koszul(&z, &[Elem::int(2)])?;

    // 2·id on K(2) is null-homotopic; the solver returns a verified witness
    let two = ChainMap::scalar_endo(&k2, &Elem::int(2));
    let (ok, witness) = is_nullhomotopic(&two)?;
    println!("2·id on K(2) null-homotopic: {ok}");
    if let Some(h) = witness {
        for (i, s) in &h.maps {
            println!("  s_{i} =");
            for row in s.render_rows() {
                println!("    [{row}]");
            }
        }
        println!("  witness re-verifies: {}", h.verifies(&two));
    }

    // the identity is not null-homotopic, and its annihilator is (2)
    let id = ChainMap::identity(&k2);
    let (ok, _) = is_nullhomotopic(&id)?;
    println!("id on K(2) null-homotopic: {ok}");
    println!("Ann(id_K(2)) = {}", ann_map(&id)?.render());

    // annihilators over an artinian base carry the congruence conditions
    let z12 = Ring::parse("Z/12")?;
    let k = koszul(&z12, &[Elem::int(4)])?;
    println!(
        "Ann K(4) over Z/12 = {}",
        ann_map(&ChainMap::identity(&k))?.render()
    );
    Ok(())
}
