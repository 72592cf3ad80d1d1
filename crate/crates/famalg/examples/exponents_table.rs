//! Generalized exponents for n = 4, 5, 6: closed forms against tableaux.
//!
//! For each constituent of `End(V)` (V the adjoint representation) the
//! closed-form q-multiplicity is compared with the Kostka–Foulkes
//! polynomial computed independently via semistandard tableaux and the
//! charge statistic.  Also checks the shift law relating the last two rows
//! and the q = 1 dimension count.
//!
//! Run with: `cargo run --example exponents_table`

use famalg::exponents::verify_table1;

fn main() {
    for n in 4..=6 {
        let report = verify_table1(n).expect("n >= 4");
        println!(
            "n = {n}: family dimension {} over the invariant ring",
            report.family_dimension
        );
        let width = report.rows.iter().map(|r| r.weight.len()).max().unwrap_or(0);
        for row in &report.rows {
            println!(
                "  {:<width$}  {}  [{}]",
                row.weight, row.closed_form, row.partitions
            );
            assert!(row.equal, "charge form must match the closed form");
            assert_eq!(row.closed_form, row.charge_form);
        }
        assert!(report.shift_law_holds);
        assert!(report.dimension_check);
        println!(
            "  shift law holds; q = 1 totals (adjoint twice) = {}\n",
            report.family_dimension
        );
    }
    println!("all closed forms reproduced by the charge statistic");
}
