//! Two constructions of the higher elements `L_k`, compared exactly.
//!
//! `L_k` can be built in two independent ways:
//!
//! * *trace form*: contract `F^k` against the representation matrices
//!   (the projection of `F^k · π_β`), coordinate by coordinate;
//! * *closed form*: `L^k` plus composition-weighted correction words
//!   `L^{a−1} S R^{b−1}` — with weight `1/n` for the two-part composition
//!   `(a, b)` and `c_j/n²` for the three-part composition `(a, j, b)`,
//!   `j ≥ 2`.
//!
//! Compositions with four or more parts drop out: pushing `S` through
//! `L`-words produces sandwich scalars `σ_j` whose alternating expansion
//! cancels them.  The first place this matters is `k = 6`, where the
//! composition `(1, 1, 2, 2)` would contribute `(c_2²/n³)·S`; this example
//! shows that adding that spurious term breaks the identity.
//!
//! Run with: `cargo run --release --example trace_form`

use famalg::family::{trace_form_lk, ElementBuilder, Family};
use famalg::rat::rat;

fn main() {
    let n = 4;
    let fam = Family::new(n).expect("n = 4");
    let mut b = ElementBuilder::new(&fam);

    for k in 0..=n + 1 {
        let closed = b.element_lk(k);
        let traced = trace_form_lk(&fam, k);
        assert_eq!(closed, traced, "L_{k} must agree");
        println!("L_{k}: closed form == trace form  (exact)");
    }

    // k = 6 would be the first degree with a four-part composition.  The
    // would-be term for (1, 1, 2, 2) is (c_2 c_2 / n^3) * S; adding it to
    // the corrected closed form visibly breaks the equality.
    let k = 6;
    let closed = b.element_lk(k);
    let traced = trace_form_lk(&fam, k);
    assert_eq!(closed, traced, "corrected closed form matches at k = 6");
    let spurious = fam.s.scale_poly(
        &fam.cas
            .c(2)
            .mul(fam.cas.c(2))
            .scale(&rat(1, (n * n * n) as i64)),
    );
    assert_ne!(closed.add(&spurious), traced);
    println!(
        "L_6: four-part composition terms cancel; reinstating (c_2^2/n^3)S breaks the identity"
    );
}
