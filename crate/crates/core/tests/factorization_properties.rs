mod common;

use std::sync::Arc;

use common::{finite, instance_space};
use semiring_cholesky::enumerate::{symmetric_matrices, Tuples};
use semiring_cholesky::{
    all_cholesky_factors, cholesky, cholesky_with, diagonal_involutions,
    has_nonneg_numerical_range, is_positive_semidefinite, lu, q_closed, CholeskyOptions,
    CholeskyStatus, GramClosure, HypothesisLevel, Matrix, NnrVerdict, PsdVerdict, Semiring,
    SemiringTable,
};

fn all_matrices(
    s: &Arc<SemiringTable>,
    n: usize,
) -> impl Iterator<Item = Matrix<SemiringTable>> + '_ {
    let elems = s.elements().unwrap();
    Tuples::new(elems, n * n).map(move |t| Matrix::from_fn(s, n, n, |i, j| t[i * n + j]))
}

fn general_space() -> Vec<(Arc<SemiringTable>, usize)> {
    let mut out: Vec<_> = ["bool", "zn:2", "zn:3", "zn:4", "zn:6", "product:zn:2,bool"]
        .iter()
        .map(|u| (finite(u), 2))
        .collect();
    out.extend(["bool", "zn:2", "zn:3"].iter().map(|u| (finite(u), 3)));
    out
}

#[test]
fn strongly_invertible_first_columns_are_negatable() {
    for (s, n) in general_space() {
        for m in all_matrices(&s, n) {
            if m.is_strongly_invertible().unwrap() {
                let b = m.block_view().unwrap().b;
                assert!(b.iter().all(|x| s.is_negatable(x)), "{}: {m}", s.label());
            }
        }
    }
}

#[test]
fn lu_factors_every_strongly_invertible_matrix() {
    for (s, n) in general_space() {
        for m in all_matrices(&s, n) {
            match lu(&m) {
                Ok(f) => {
                    assert!(m.is_strongly_invertible().unwrap());
                    assert!(f.l.is_lower_triangular() && f.l.diag().iter().all(|d| *d == s.one()));
                    assert!(f.u.is_upper_triangular() && f.u.diag().iter().all(|d| s.is_unit(d)));
                    assert_eq!(f.l.mul(&f.u).unwrap(), m);
                }
                Err(_) => assert!(!m.is_strongly_invertible().unwrap(), "{}: {m}", s.label()),
            }
        }
    }
}

#[test]
fn factors_are_unique_up_to_involutions() {
    for (s, n) in instance_space() {
        if n == 3 && s.order() > Some(2) {
            continue;
        }
        let involutions = diagonal_involutions(&s, n).unwrap();
        for m in symmetric_matrices(&s, n).unwrap() {
            let Some(l) = cholesky(&m).unwrap().factor else {
                continue;
            };
            let mut expected: Vec<_> = involutions
                .iter()
                .map(|d| l.mul(&d.to_matrix()).unwrap())
                .collect();
            expected.sort_by(|a, b| a.entries().cmp(b.entries()));
            expected.dedup();
            let mut invertible: Vec<_> = all_cholesky_factors(&m)
                .unwrap()
                .into_iter()
                .filter(|f| f.is_strongly_invertible().unwrap())
                .collect();
            invertible.sort_by(|a, b| a.entries().cmp(b.entries()));
            assert_eq!(invertible, expected, "{}: {m}", s.label());
        }
    }
}

#[test]
fn successful_cholesky_implies_psd() {
    for (s, n) in instance_space() {
        let closure = GramClosure::build(&s, n).unwrap();
        for m in symmetric_matrices(&s, n).unwrap() {
            let r = cholesky(&m).unwrap();
            if r.status.is_success() {
                assert!(closure.contains(&m), "{}: {m}", s.label());
                assert_eq!(r.pivots.len(), n);
            }
        }
    }
}

#[test]
fn psd_implies_nnr_when_squares_are_closed() {
    for uri in ["bool", "zn:2", "chain:2", "z2x3"] {
        let s = finite(uri);
        assert!(q_closed(s.as_ref()).unwrap());
        for n in 1..=2 {
            let closure = GramClosure::build(&s, n).unwrap();
            for m in symmetric_matrices(&s, n).unwrap() {
                if closure.contains(&m) {
                    assert!(
                        has_nonneg_numerical_range(&m).unwrap().is_yes(),
                        "{uri}: {m}"
                    );
                }
            }
        }
    }
}

#[test]
fn witnesses_are_sound() {
    for (s, n) in instance_space() {
        if n == 3 {
            continue;
        }
        for m in symmetric_matrices(&s, n).unwrap() {
            if let NnrVerdict::No { witness, value } = has_nonneg_numerical_range(&m).unwrap() {
                assert_eq!(m.quadratic_form(&witness), value);
                assert!(!s.is_square(&value));
            }
            if let PsdVerdict::Yes(w) = is_positive_semidefinite(&m).unwrap() {
                let b = w.to_b(&s, n);
                assert_eq!(b.mul(&b.transpose()).unwrap(), m, "{}", s.label());
            }
        }
    }
}

#[test]
fn failure_statuses_match_their_cause() {
    for (s, n) in instance_space() {
        for m in symmetric_matrices(&s, n).unwrap() {
            let r = cholesky(&m).unwrap();
            match r.status {
                CholeskyStatus::Success => assert!(m.is_strongly_invertible().unwrap()),
                CholeskyStatus::NotStronglyInvertible { k } => {
                    let lead = m.leading_principal_submatrix(k).unwrap();
                    assert!(!lead.is_invertible().unwrap(), "{}: {m} k={k}", s.label());
                }
                CholeskyStatus::PivotNotSquare { step, ref pivot } => {
                    assert!(s.is_unit(pivot) && !s.is_square(pivot));
                    assert_eq!(r.pivots.len(), step);
                }
                CholeskyStatus::SubdiagonalNotNegatable { .. } => {}
                CholeskyStatus::NotSymmetric => unreachable!(),
            }
        }
    }
}

#[test]
fn theorem_mode_certifies_only_hypotheses() {
    let opts = CholeskyOptions {
        verify: HypothesisLevel::Theorem,
        ..CholeskyOptions::default()
    };
    for uri in ["zn:6", "z2x3", "product:zn:2,bool"] {
        let s = finite(uri);
        for m in symmetric_matrices(&s, 2).unwrap() {
            let r = cholesky_with(&m, opts).unwrap();
            let hypotheses = m.is_strongly_invertible().unwrap()
                && has_nonneg_numerical_range(&m).unwrap().is_yes();
            assert_eq!(
                r.verified == HypothesisLevel::Theorem,
                hypotheses,
                "{uri}: {m}"
            );
            if hypotheses {
                assert!(r.status.is_success());
            }
        }
    }
}
