//! Solve `M·y = c` by forward and backward substitution on the factors.

use std::sync::Arc;

use semiring_cholesky::{make_zn, solve_lu, solve_spd, ElemVec, Matrix};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    let m = Matrix::from_names(&z6, &[["1", "2"], ["2", "5"]])?;
    let c = ElemVec::from_names(&z6, &["1", "0"])?;
    let sol = solve_spd(&m, &c)?;
    println!(
        "M = {m}, c = {:?}\n  via Cholesky y = {:?} (residual verified: {})",
        c.names(),
        sol.y.names(),
        sol.residual_verified
    );
    println!("  M^-1·c = {:?}", m.invert()?.mul_vec(&c)?.names());

    // No Cholesky factor here, but LU still works.
    let m = Matrix::from_names(&z6, &[["5", "2"], ["2", "1"]])?;
    if let Err(e) = solve_spd(&m, &c) {
        println!("{m}: {e}");
    }
    println!("  via LU y = {:?}", solve_lu(&m, &c)?.y.names());
    Ok(())
}
