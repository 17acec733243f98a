//! The infinite chain of Loewy classes over a DVR: the designated
//! generators, minimal classes, and the factorial complex escaping them
//! all.
//!
//! ```bash
//! cargo run -p ttg --example dvr_chain
//! ```

use ttg::formal::{
    factorial_complex, g_complex, loewy_profile, member_lc, minimal_c, tensor_formal,
};

fn main() -> ttg::Result<()> {
    for c in 1..=6u32 {
        let g = g_complex(c);
        println!("G_{c}: minimal class {}", minimal_c(&g));
    }
    for c in 1..=4u32 {
        println!(
            "G_{} in L_{c}? {:?}   in L_{}? {:?}",
            c + 1,
            member_lc(&g_complex(c + 1), c),
            c + 1,
            member_lc(&g_complex(c + 1), c + 1)
        );
    }

    let e = factorial_complex();
    println!("factorial complex: minimal class {}", minimal_c(&e));
    let profile = loewy_profile(&e, 8)?;
    let lengths: Vec<String> = profile
        .lengths
        .iter()
        .map(|(i, l)| format!("{i}:{l}"))
        .collect();
    println!("its Loewy profile on [0, 8): {}", lengths.join(" "));

    // windowed tensor products carry an honest unknown tail, with a
    // symbolic envelope when both tails are single polynomials
    let t = tensor_formal(&g_complex(2), &g_complex(3), 10)?;
    println!("G_2 ⊗ G_3 on a window of 10:\n{t}");
    Ok(())
}
