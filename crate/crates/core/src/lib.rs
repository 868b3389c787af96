//! Exact linear algebra over commutative semirings.
//!
//! Cholesky (`M = L·Lᵀ`) and LU factorization of strongly invertible
//! matrices over finite commutative semirings, with deciders for
//! strong invertibility, nonnegative numerical range and positive
//! semidefiniteness, and a solver for `M·y = c` built on the factors.
//!
//! ```
//! use std::sync::Arc;
//! use semiring_cholesky::{cholesky, make_zn, Matrix};
//!
//! let z6 = Arc::new(make_zn(6).unwrap());
//! let m = Matrix::from_names(&z6, &[["1", "2"], ["2", "5"]]).unwrap();
//! let l = cholesky(&m).unwrap().factor.unwrap();
//! assert_eq!(l.mul(&l.transpose()).unwrap(), m);
//! ```

pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod factorization;
pub mod fixtures;
pub mod io;
pub mod matrix;
pub mod search;
pub mod semiring;
pub mod solve;

pub use classify::{
    classify, corollary_equivalence_check, has_nonneg_numerical_range, is_positive_semidefinite,
    numerical_range, q_closed, ClassificationReport, GramClosure, GramWitness, NnrVerdict,
    PsdVerdict,
};
pub use error::{Error, Result};
pub use factorization::{
    all_cholesky_factors, cholesky, cholesky_with, diagonal_involutions, lu, schur_complement,
    verify_schur_identity, CholeskyOptions, CholeskyResult, CholeskyStatus, DiagonalInvolution,
    HypothesisLevel, LuFactors,
};
pub use matrix::{BlockView, ElemVec, Matrix, StrongInvertibility};
pub use search::{parse_predicates, search, Literal, Predicate};
pub use semiring::{
    make_boolean, make_chain_lattice, make_naturals, make_product, make_z2x_mod_x3, make_zn,
    parse_uri, validate_table, AnySemiring, DerivedSets, Element, Naturals, RawTables, Semiring,
    SemiringTable,
};
pub use solve::{backward_substitute, forward_substitute, solve_lu, solve_spd, Solution};
