//! The fundamental matrix `F` and its invariants.
//!
//! Builds `F` for sl(3), prints the power traces `c_k = tr(F^k)` and the
//! characteristic coefficients `d_k`, and checks the Cayley–Hamilton
//! identity `F^n = Σ_{k=0}^{n−2} d_{n−k} F^k` as an exact identity of
//! polynomial matrices.  At n = 4 it also confirms the derived scalar
//! identity `c_5 = (5/6)·c_2·c_3`.
//!
//! Run with: `cargo run --example casimirs`

use famalg::casimir::CasimirData;
use famalg::family::Family;
use famalg::lie::LieData;
use famalg::rat::rat;

fn main() {
    let n = 3;
    let lie = LieData::build(n).expect("n >= 2");
    let cas = CasimirData::new(&lie, n + 2);

    println!("sl({n}): dim = {}, F is {n} x {n} with linear entries", lie.dim);
    for r in 0..n {
        for c in 0..n {
            println!("  F[{},{}] = {}", r + 1, c + 1, cas.f.mat.get(r, c));
        }
    }

    println!("\npower traces c_k = tr(F^k):");
    for k in 0..=n + 2 {
        println!("  c_{k} = {}", cas.c(k));
    }

    println!("\ncharacteristic coefficients (via Newton's identities):");
    for k in 2..=n {
        println!("  d_{k} = {}", cas.d(k));
    }

    // Cayley–Hamilton: F^n equals the d-weighted sum of lower powers.
    let mut rhs = cas.fpow[0].scale_poly(cas.d(n));
    for k in 1..=n - 2 {
        rhs = rhs.add(&cas.fpow[k].scale_poly(cas.d(n - k)));
    }
    assert_eq!(cas.fpow[n], rhs);
    println!("\nCayley-Hamilton: F^{n} = sum of d_(n-k) * F^k for k <= n-2  (exact)");

    // Scalar consequence at n = 4: c_5 is forced to (5/6) c_2 c_3.
    let fam = Family::new(4).expect("n = 4");
    let expected = fam.cas.c(2).mul(fam.cas.c(3)).scale(&rat(5, 6));
    assert_eq!(*fam.cas.c(5), expected);
    println!("n = 4: c_5 = (5/6) c_2 c_3  (exact)");
}
