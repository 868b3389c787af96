//! Where sums of squares are squares, three conditions on a symmetric
//! matrix coincide: strongly invertible with nonnegative numerical range,
//! `L·Lᵀ` with `L` strongly invertible, and strongly invertible PSD.

use std::sync::Arc;

use semiring_cholesky::{corollary_equivalence_check, parse_uri, q_closed, AnySemiring, Semiring};

fn main() -> semiring_cholesky::Result<()> {
    for uri in [
        "bool",
        "zn:2",
        "chain:2",
        "z2x3",
        "product:zn:2,bool",
        "zn:6",
    ] {
        let AnySemiring::Finite(s) = parse_uri(uri)? else {
            unreachable!()
        };
        if !q_closed(&s)? {
            println!("{uri:<18} sums of squares are not squares; skipped");
            continue;
        }
        let label = s.label().to_string();
        let report = corollary_equivalence_check(&Arc::new(s), 2)?;
        println!(
            "{label:<18} {} matrices, {} satisfy all three, {} disagreements",
            report.checked,
            report.satisfying,
            report.violations.len()
        );
    }
    Ok(())
}
