//! LU factorization of strongly invertible (not necessarily symmetric)
//! matrices.

use std::sync::Arc;

use semiring_cholesky::{lu, make_zn, Matrix};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    let m = Matrix::from_names(&z6, &[["1", "3", "2"], ["4", "1", "0"], ["5", "2", "1"]])?;
    let f = lu(&m)?;
    println!(
        "M = {m}\nL = {}\nU = {}\nL·U = M: {}",
        f.l,
        f.u,
        f.l.mul(&f.u)? == m
    );

    let m = Matrix::from_names(&z6, &[["2", "1"], ["1", "1"]])?;
    match lu(&m) {
        Ok(_) => println!("unexpected factorization"),
        Err(e) => println!("\n{m}: {e}"),
    }
    Ok(())
}
