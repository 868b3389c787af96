//! Invert matrices and test strong invertibility (every leading principal
//! submatrix invertible).

use std::sync::Arc;

use semiring_cholesky::{make_boolean, make_product, make_zn, Matrix};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    let m = Matrix::from_names(&z6, &[["5", "2"], ["2", "1"]])?;
    let inv = m.invert()?;
    println!("M = {m}\nM^-1 = {inv}\nM·M^-1 = {}", m.mul(&inv)?);
    println!("strong invertibility: {:?}", m.strong_invertibility()?);

    // Over an antinegative semiring only monomial matrices are invertible.
    let b = Arc::new(make_boolean());
    let p = Matrix::from_names(&b, &[["0", "1"], ["1", "0"]])?;
    println!("\npermutation over B: inverse {}", p.invert()?);
    println!(
        "[[1,1],[0,1]] over B invertible: {}",
        Matrix::from_names(&b, &[["1", "1"], ["0", "1"]])?.is_invertible()?
    );

    // Invertible but not strongly invertible: the leading entry is not a unit.
    let s = Arc::new(make_product(&make_zn(2)?, &make_boolean()));
    let m = Matrix::from_names(&s, &[["(1,0)", "(0,1)"], ["(0,1)", "(1,0)"]])?;
    println!("\nM over Z2 x B: M^2 = {}", m.mul(&m)?);
    println!("strong invertibility: {:?}", m.strong_invertibility()?);
    Ok(())
}
