//! Equivariance of family-algebra elements at n = 3.
//!
//! A family-algebra element `A` satisfies `A(g·ξ) = Ad(g) A(ξ) Ad(g)⁻¹`
//! for every group element `g` and point `ξ`.  This example draws random
//! unipotent group elements and random integer points, and checks the
//! identity exactly for all five generators and for every monomial in the
//! transversal.
//!
//! Run with: `cargo run --example equivariance_demo`

use famalg::family::{equivariance_check, ElementBuilder, Family};
use famalg::independence::{monomial_basis, monomial_element};
use famalg::lie::{random_group_element, random_point};
use famalg::DEFAULT_SEED;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() {
    let n = 3;
    let fam = Family::new(n).expect("n = 3");
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let pairs: Vec<_> = (0..5)
        .map(|_| {
            (
                random_group_element(&fam.lie, &mut rng),
                random_point(fam.dim(), 10, &mut rng),
            )
        })
        .collect();

    for name in ["L", "R", "S", "M", "N"] {
        let g = fam.generator(name).expect("known generator");
        for (i, (group, point)) in pairs.iter().enumerate() {
            assert!(
                equivariance_check(&fam.lie, g, group, point),
                "generator {name}, pair {i}"
            );
        }
        println!("generator {name}: equivariant on {} random pairs", pairs.len());
    }

    let mut builder = ElementBuilder::new(&fam);
    for mi in monomial_basis(n).expect("n >= 2") {
        let element = monomial_element(&mut builder, mi);
        for (group, point) in &pairs {
            assert!(equivariance_check(&fam.lie, &element, group, point));
        }
        println!("monomial {mi}: equivariant on {} random pairs", pairs.len());
    }
    println!("\nevery generator and every transversal monomial is equivariant");
}
