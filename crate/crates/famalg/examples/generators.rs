//! The five generators of the family algebra at n = 2.
//!
//! Prints `L`, `R`, `S`, `M = (L−R)/2`, `N = (L+R)/2` entry by entry,
//! verifies the trace normalizations `tr L = tr R = 0`, `tr S = c_2`, and
//! the idempotent-like law `S·S = c_2·S`.
//!
//! Run with: `cargo run --example generators`

use famalg::family::Family;

fn main() {
    let fam = Family::new(2).expect("n = 2");
    let dim = fam.dim();
    println!(
        "sl(2): the family algebra acts on {dim}-dimensional coordinate vectors\n"
    );

    for name in ["L", "R", "S", "M", "N"] {
        let g = fam.generator(name).expect("known generator");
        println!("generator {name} ({dim} x {dim}):");
        for r in 0..dim {
            let row: Vec<String> = (0..dim).map(|c| g.get(r, c).to_string()).collect();
            println!("  [ {} ]", row.join(" | "));
        }
        println!();
    }

    println!("legend:");
    for (idx, b) in fam.lie.basis.iter().enumerate() {
        println!("  x{} = coordinate of {}", idx + 1, b);
    }

    // Trace normalizations.
    assert!(fam.l.trace().is_zero());
    assert!(fam.r.trace().is_zero());
    assert_eq!(fam.s.trace(), *fam.cas.c(2));
    println!("\ntr L = tr R = 0 and tr S = c_2 = {}", fam.cas.c(2));

    // S behaves as c_2 times a projector: S·S = c_2·S.
    assert_eq!(fam.s.mul(&fam.s), fam.s.scale_poly(fam.cas.c(2)));
    println!("S*S = c_2*S  (exact)");

    // M and N really are the half-difference and half-sum.
    let two_m = fam.m.add(&fam.m);
    let two_n = fam.n_el.add(&fam.n_el);
    assert_eq!(two_m, fam.l.sub(&fam.r));
    assert_eq!(two_n, fam.l.add(&fam.r));
    println!("2M = L - R and 2N = L + R  (exact)");
}
