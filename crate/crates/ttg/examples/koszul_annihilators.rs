//! Koszul complexes, annihilators and supports: `Ann K(x) = (x)` and
//! `V(Ann X) = Supp X` on bounded complexes.
//!
//! ```bash
//! cargo run -p ttg --example koszul_annihilators
//! ```

use ttg::complexes::{ann_complex, koszul, FreeComplex};
use ttg::rings::{Elem, Ring};
use ttg::spectra::v_of;

fn main() -> ttg::Result<()> {
    let z = Ring::Integers;
    for xs in [vec![2i64], vec![2, 3], vec![4, 6]] {
        let elems: Vec<Elem> = xs.iter().map(|&v| Elem::int(v)).collect();
        let k = koszul(&z, &elems)?;
        let ann = ann_complex(&k)?;
        println!(
            "K({xs:?}): ranks {:?}, Ann = {}, Supp = {}",
            (k.lo()..=k.hi()).map(|i| k.rank_at(i)).collect::<Vec<_>>(),
            ann.render(),
            k.supp()?.render()
        );
        assert_eq!(v_of(&ann)?, k.supp()?);
    }

    // the complex presenting Z/12 has support {(2), (3)}
    let x = FreeComplex::cyclic_resolution(z.clone(), Elem::int(12))?;
    println!(
        "Z/12[0]: Ann = {}, Supp = {}",
        ann_complex(&x)?.render(),
        x.supp()?.render()
    );
    Ok(())
}
