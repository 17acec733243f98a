//! The ring catalog: parsing, factorization, finite spectra and residue
//! fields.
//!
//! ```bash
//! cargo run -p ttg --example ring_catalog
//! ```

use ttg::rings::{factor, residue_field_reduce, spec_list, Elem, PrimeIdeal, Ring};

fn main() -> ttg::Result<()> {
    for spec in [
        "Z",
        "Z/12",
        "GF(2)",
        "GF(5)[t]",
        "GF(2)[t]/(t^3+t+1)",
        "DVR",
    ] {
        let ring = Ring::parse(spec)?;
        println!(
            "{ring}: artinian = {}, field = {}",
            ring.is_artinian(),
            ring.is_field()
        );
    }

    println!();
    let twelve = Elem::int(12);
    let fs = factor(&Ring::Integers, &twelve)?;
    let rendered: Vec<String> = fs
        .iter()
        .map(|(p, k)| format!("{}^{k}", Ring::Integers.render_elem(p)))
        .collect();
    println!("12 factors over Z as {}", rendered.join(" * "));

    let f2t = Ring::PolyRing(2);
    let e = f2t.parse_elem("t^2+t")?;
    let fs = factor(&f2t, &e)?;
    let rendered: Vec<String> = fs
        .iter()
        .map(|(p, k)| format!("({})^{k}", f2t.render_elem(p)))
        .collect();
    println!("t^2+t factors over GF(2)[t] as {}", rendered.join(" * "));

    println!();
    for spec in ["Z/12", "GF(2)[t]/(t^3+t^2)", "DVR"] {
        let ring = Ring::parse(spec)?;
        let primes: Vec<String> = spec_list(&ring)?.iter().map(|p| p.render(&ring)).collect();
        println!("Spec {ring} = {{{}}}", primes.join(", "));
    }

    println!();
    let z6 = Ring::parse("Z/6")?;
    let p3 = PrimeIdeal::principal(&z6, Elem::int(3))?;
    let (field, image) = residue_field_reduce(&z6, &p3, &Elem::int(2))?;
    println!(
        "the image of 2 in the residue field {} of Z/6 at (3) is {}",
        field,
        field.render_elem(&image)
    );
    Ok(())
}
