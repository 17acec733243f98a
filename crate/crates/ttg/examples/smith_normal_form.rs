//! Smith normal form with transforms and modules in invariant-factor form.
//!
//! ```bash
//! cargo run -p ttg --example smith_normal_form
//! ```

use ttg::matrix::{smith_normal_form, IntMatrix};
use ttg::modules::{loewy_length, module_from_presentation, tensor_mod, tor1, FgModule};
use ttg::rings::{Elem, Ring};

fn main() -> ttg::Result<()> {
    let z = Ring::Integers;
    let m = IntMatrix::from_i64_rows(&z, &[&[2, 0], &[0, 3]]);
    let snf = smith_normal_form(&m)?;
    println!(
        "diag(2, 3) over Z has invariant factors {:?}",
        snf.diag
            .iter()
            .map(|e| z.render_elem(e))
            .collect::<Vec<_>>()
    );
    println!("U * A * V =\n{}", snf.left.mul(&m).mul(&snf.right));

    // the presented module Z² / (2e1, 3e2) is cyclic
    let md = module_from_presentation(&m)?;
    println!("coker(diag(2,3)) = {}", md.render());

    // torsion of the lift over an artinian base
    let z12 = Ring::parse("Z/12")?;
    let md = module_from_presentation(&IntMatrix::from_i64_rows(&z12, &[&[4]]))?;
    println!("coker([4]) over Z/12 = {}", md.render());

    // cyclic tensor and Tor over a PID
    let a = FgModule::cyclic(z.clone(), Elem::int(4));
    let b = FgModule::cyclic(z.clone(), Elem::int(6));
    println!(
        "Z/4 ⊗ Z/6 = {}, Tor_1(Z/4, Z/6) = {}",
        tensor_mod(&a, &b)?.render(),
        tor1(&a, &b)?.render()
    );

    // Loewy lengths over local rings
    let d = FgModule::dvr(0, vec![7]);
    println!("ll(R/x^7 over the DVR) = {}", loewy_length(&d)?);
    let z8 = Ring::parse("Z/8")?;
    println!(
        "ll(Z/8 over itself) = {}",
        loewy_length(&FgModule::free(z8, 1))?
    );
    Ok(())
}
