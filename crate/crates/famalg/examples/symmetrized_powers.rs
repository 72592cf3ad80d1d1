//! Symmetrized powers of `L + R` expanded over Casimir monomials.
//!
//! `symmetrize((L+R)^m)` is an invariant polynomial of degree `m + 2`;
//! expanding it exactly over products of the Casimir generators
//! `c_2, …, c_n` shows a nonzero coefficient on `c_{m+2}` for every
//! `m < n − 1`.  That nonvanishing is what forbids any monic polynomial
//! relation for `L + R` of degree below `n − 1` with invariant
//! coefficients: symmetrizing such a relation would express `c_{m+2}`
//! through products of lower Casimirs, which are algebraically independent.
//!
//! Run with: `cargo run --release --example symmetrized_powers`

use famalg::family::Family;
use famalg::independence::symmetrized_power_witness;
use famalg::rat::render_rat;

fn monomial_name(lambda: &[usize]) -> String {
    lambda.iter().map(|p| format!("c{p}")).collect::<Vec<_>>().join("*")
}

fn main() {
    for n in [4, 5] {
        let fam = Family::new(n).expect("supported n");
        println!("n = {n}:");
        for m in 0..n - 1 {
            let w = symmetrized_power_witness(&fam, m).expect("m < n - 1");
            let mut rendered = String::new();
            for (lambda, coeff) in &w.expansion {
                if coeff.eq(&num::Zero::zero()) {
                    continue;
                }
                if !rendered.is_empty() {
                    rendered.push_str(" + ");
                }
                rendered.push_str(&format!("{} * {}", render_rat(coeff), monomial_name(lambda)));
            }
            println!("  symmetrize((L+R)^{m}) = {rendered}");
            assert!(!w.leading.eq(&num::Zero::zero()), "leading must be nonzero");
            println!(
                "    coefficient of c_{} is {} (nonzero)",
                m + 2,
                render_rat(&w.leading)
            );
        }
        // One degree higher the witness is out of range by design.
        assert!(symmetrized_power_witness(&fam, n - 1).is_err());
        println!();
    }
}
