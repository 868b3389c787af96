//! The Schur complement of the leading entry and the block identity
//! `E·M·Eᵀ = diag(a, M/a)` behind it.

use std::sync::Arc;

use semiring_cholesky::{make_zn, schur_complement, verify_schur_identity, Matrix, Semiring};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    for rows in [
        [["5", "2", "0"], ["2", "1", "3"], ["0", "3", "1"]],
        [["1", "2", "3"], ["2", "5", "4"], ["3", "4", "1"]],
    ] {
        let m = Matrix::from_names(&z6, &rows)?;
        println!("M = {m}");
        let b: Vec<String> = m.block_view()?.b.iter().map(|e| z6.name(e)).collect();
        println!("  first column below the pivot: {}", b.join(", "));
        println!("  M/a = {}", schur_complement(&m)?);
        println!("  block identity holds: {}", verify_schur_identity(&m)?);
    }

    let singular_pivot = Matrix::from_names(&z6, &[["2", "1"], ["1", "1"]])?;
    if let Err(e) = schur_complement(&singular_pivot) {
        println!("[[2,1],[1,1]]: {e}");
    }
    Ok(())
}
