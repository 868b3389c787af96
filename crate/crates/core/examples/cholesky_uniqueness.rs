//! Cholesky factors `M = L·Lᵀ`, their uniqueness up to diagonal
//! involutions, and the cases where no factor exists.

use std::sync::Arc;

use semiring_cholesky::{
    all_cholesky_factors, cholesky, cholesky_with, diagonal_involutions,
    has_nonneg_numerical_range, make_z2x_mod_x3, make_zn, CholeskyOptions, HypothesisLevel, Matrix,
};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    let m = Matrix::from_names(&z6, &[["1", "2"], ["2", "5"]])?;
    let r = cholesky(&m)?;
    println!("Z6 {m}: {:?}, L = {}", r.status, r.factor.as_ref().unwrap());

    let opts = CholeskyOptions {
        verify: HypothesisLevel::Theorem,
        ..Default::default()
    };
    let r = cholesky_with(&m, opts)?;
    println!(
        "  theorem check: verified {:?}, numerical range {:?}",
        r.verified, r.numerical_range
    );

    let m = Matrix::from_names(&z6, &[["5", "2"], ["2", "1"]])?;
    println!(
        "Z6 {m}: {:?}, {} factors by exhaustive search",
        cholesky(&m)?.status,
        all_cholesky_factors(&m)?.len()
    );

    let s = Arc::new(make_z2x_mod_x3());
    let m = Matrix::from_names(&s, &[["1", "0"], ["0", "1+x^2"]])?;
    let l = cholesky(&m)?.factor.expect("factors");
    println!("\nZ2[x]/(x^3) {m}: L = {l}");
    for d in diagonal_involutions(&s, 2)? {
        let ld = l.mul(&d.to_matrix())?;
        println!(
            "  L·{:?} = {ld}  NNR: {}",
            d.diagonal.names(),
            has_nonneg_numerical_range(&ld)?.is_yes()
        );
    }
    println!("  all factors: {}", all_cholesky_factors(&m)?.len());
    Ok(())
}
