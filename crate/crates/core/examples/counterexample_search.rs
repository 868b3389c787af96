//! Search all symmetric matrices of a given size for predicate
//! combinations, e.g. PSD matrices with no Cholesky factor.

use std::sync::Arc;

use semiring_cholesky::{make_boolean, make_zn, parse_predicates, search, Semiring, SemiringTable};

fn run(s: SemiringTable, query: &str) -> semiring_cholesky::Result<()> {
    let s = Arc::new(s);
    let literals = parse_predicates(query)?;
    let found: Vec<_> = search(&s, 2, &literals)?.collect::<semiring_cholesky::Result<_>>()?;
    println!("{} n=2 [{query}]: {} matches", s.label(), found.len());
    for m in found.iter().take(4) {
        println!("  {m}");
    }
    Ok(())
}

fn main() -> semiring_cholesky::Result<()> {
    run(make_zn(6)?, "strongly-invertible,psd,!cholesky")?;
    run(make_zn(6)?, "strongly-invertible,nnr,!cholesky")?;
    run(make_boolean(), "invertible,!strongly-invertible")?;
    Ok(())
}
