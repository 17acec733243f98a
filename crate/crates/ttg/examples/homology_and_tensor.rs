//! Homology of bounded free complexes and derived tensor products.
//!
//! ```bash
//! cargo run -p ttg --example homology_and_tensor
//! ```

use ttg::complexes::{koszul, tensor, FreeComplex};
use ttg::rings::{Elem, Ring};
use ttg::DEFAULT_SIZE_BUDGET;

fn main() -> ttg::Result<()> {
    let z = Ring::Integers;
    let a = FreeComplex::cyclic_resolution(z.clone(), Elem::int(4))?;
    let b = FreeComplex::cyclic_resolution(z.clone(), Elem::int(6))?;
    let t = tensor(&a, &b, DEFAULT_SIZE_BUDGET)?;
    println!("Z/4[0] ⊗L Z/6[0]:");
    for (i, h) in t.homology()? {
        println!("  H_{i} = {h}");
    }
    println!("  supp = {}", t.supp()?.render());

    // the tensor of Koszul complexes is the Koszul complex of the
    // concatenated sequence
    let k2 = koszul(&z, &[Elem::int(2)])?;
    let k3 = koszul(&z, &[Elem::int(3)])?;
    let t = tensor(&k2, &k3, DEFAULT_SIZE_BUDGET)?;
    let k23 = koszul(&z, &[Elem::int(2), Elem::int(3)])?;
    assert_eq!(t.homology()?, k23.homology()?);
    println!(
        "K(2) ⊗ K(3) has the homology of K(2,3): exact = {}",
        t.is_exact()?
    );

    // homology over an artinian base needs congruence bookkeeping
    let z4 = Ring::parse("Z/4")?;
    let x = FreeComplex::cyclic_resolution(z4, Elem::int(2))?;
    println!("R --2--> R over Z/4:");
    for (i, h) in x.homology()? {
        println!("  H_{i} = {h}");
    }
    Ok(())
}
