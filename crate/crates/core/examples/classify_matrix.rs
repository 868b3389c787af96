//! Classify matrices: symmetry, (strong) invertibility, nonnegative
//! numerical range and positive semidefiniteness with witnesses.

use std::sync::Arc;

use semiring_cholesky::{
    classify, make_boolean, make_naturals, make_product, make_zn, Matrix, PsdVerdict,
};

fn main() -> semiring_cholesky::Result<()> {
    let z6 = Arc::new(make_zn(6)?);
    let m = Matrix::from_names(&z6, &[["5", "2"], ["2", "1"]])?;
    let r = classify(&m, 3)?;
    println!(
        "Z6 {m}\n  strongly invertible {:?}, NNR {:?}",
        r.strongly_invertible, r.nnr
    );
    if let PsdVerdict::Yes(w) = &r.psd {
        println!("  PSD with B = {}", w.to_b(&z6, 2));
    }

    let s = Arc::new(make_product(&make_zn(2)?, &make_boolean()));
    let m = Matrix::from_names(&s, &[["(1,0)", "(0,1)"], ["(0,1)", "(1,0)"]])?;
    let r = classify(&m, 3)?;
    println!("Z2 x B {m}\n  NNR {:?}, PSD {:?}", r.nnr, r.psd);

    let n = Arc::new(make_naturals());
    let r = classify(&Matrix::identity(&n, 2), 3)?;
    println!("N identity\n  NNR {:?}, PSD yes: {}", r.nnr, r.psd.is_yes());
    Ok(())
}
