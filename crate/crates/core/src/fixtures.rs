//! Built-in reference fixtures: small matrices whose behaviour pins down
//! where Cholesky factors exist and where the various notions of
//! "positive" part ways.
//!
//! | id | semiring | matrix | expected |
//! |----|----------|--------|----------|
//! | F1 | `Z₆` | `[[5,2],[2,1]]` | strongly invertible, PSD, no Cholesky factor |
//! | F2 | `Z₂×𝔅` | `[[(1,0),(0,1)],[(0,1),(1,0)]]` | `M² = I`, not strongly invertible, NNR, not PSD, no lower-triangular factor |
//! | F3 | `Z₂[x]/(x³)` | `diag(1, 1+x²)` | factors, all factors `L·D`, none with NNR |
//! | F4 | `ℕ` | `I₂` | PSD, NNR fails at `(1,1)` |
//! | F5 | `𝔅`, `Z₂`, `Z₂[x]/(x³)` | all symmetric 2×2 | three-way equivalence holds |

use std::sync::Arc;

use serde::Serialize;

use crate::classify::{
    corollary_equivalence_check, has_nonneg_numerical_range, is_positive_semidefinite, NnrVerdict,
    PsdVerdict,
};
use crate::error::Result;
use crate::factorization::{all_cholesky_factors, cholesky, diagonal_involutions, CholeskyStatus};
use crate::matrix::{Matrix, StrongInvertibility};
use crate::semiring::{
    make_boolean, make_product, make_z2x_mod_x3, make_zn, Naturals, Semiring, SemiringTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixtureOutcome {
    pub id: &'static str,
    pub title: &'static str,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn check(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

fn outcome(
    id: &'static str,
    title: &'static str,
    run: impl FnOnce(&mut Checks) -> Result<()>,
) -> FixtureOutcome {
    let mut checks = Checks::default();
    if let Err(e) = run(&mut checks) {
        checks.check("evaluation", false, e.to_string());
    }
    let passed = !checks.0.is_empty() && checks.0.iter().all(|c| c.passed);
    FixtureOutcome {
        id,
        title,
        passed,
        checks: checks.0,
    }
}

/// Run all fixtures with the built-in semirings.
pub fn run_fixtures() -> Vec<FixtureOutcome> {
    run_fixtures_with(make_zn(6))
}

/// Run all fixtures, taking F1's semiring from `z6` (which may have failed
/// to load or validate; F1 then fails with that error).
pub fn run_fixtures_with(z6: Result<SemiringTable>) -> Vec<FixtureOutcome> {
    vec![
        outcome(
            "F1",
            "Z6: strongly invertible and PSD without a Cholesky factor",
            |c| f1(c, z6?),
        ),
        outcome(
            "F2",
            "Z2 x B: invertible NNR matrix without a lower-triangular factor",
            f2,
        ),
        outcome(
            "F3",
            "Z2[x]/(x^3): factors unique up to involutions, none with NNR",
            f3,
        ),
        outcome("F4", "N: identity is PSD but lacks NNR", f4),
        outcome(
            "F5",
            "three-way equivalence where sums of squares are squares",
            f5,
        ),
    ]
}

fn f1(c: &mut Checks, z6: SemiringTable) -> Result<()> {
    let s = Arc::new(z6);
    let m = Matrix::from_names(&s, &[["5", "2"], ["2", "1"]])?;
    c.check("symmetric", m.is_symmetric(), m.to_string());
    let strong = m.strong_invertibility()?;
    c.check("strongly invertible", strong.holds(), format!("{strong:?}"));
    match is_positive_semidefinite(&m)? {
        PsdVerdict::Yes(w) => {
            let b = w.to_b(&s, 2);
            c.check(
                "positive semidefinite",
                w.resum(&s, 2) == m,
                format!("B = {b}"),
            );
        }
        other => c.check("positive semidefinite", false, format!("{other:?}")),
    }
    let r = cholesky(&m)?;
    let five = s.parse_element("5")?;
    c.check(
        "cholesky fails on a non-square pivot",
        r.status
            == CholeskyStatus::PivotNotSquare {
                step: 0,
                pivot: five,
            },
        match &r.status {
            CholeskyStatus::PivotNotSquare { step, pivot } => {
                format!("pivot {} at step {step}", s.name(pivot))
            }
            other => format!("{other:?}"),
        },
    );
    let factors = all_cholesky_factors(&m)?;
    c.check(
        "no lower-triangular factor",
        factors.is_empty(),
        format!("{} factors", factors.len()),
    );
    Ok(())
}

fn f2(c: &mut Checks) -> Result<()> {
    let s = Arc::new(make_product(&make_zn(2)?, &make_boolean()));
    let m = Matrix::from_names(&s, &[["(1,0)", "(0,1)"], ["(0,1)", "(1,0)"]])?;
    let sq = m.mul(&m)?;
    c.check("M^2 = I", sq.is_identity(), sq.to_string());
    c.check("invertible", m.is_invertible()?, "");
    let strong = m.strong_invertibility()?;
    c.check(
        "not strongly invertible at k = 1",
        strong == StrongInvertibility::FailsAt(1),
        format!("{strong:?}"),
    );
    let nnr = has_nonneg_numerical_range(&m)?;
    c.check(
        "nonnegative numerical range",
        nnr.is_yes(),
        format!("{nnr:?}"),
    );
    let psd = is_positive_semidefinite(&m)?;
    c.check(
        "not positive semidefinite",
        psd == PsdVerdict::No,
        format!("{psd:?}"),
    );
    let factors = all_cholesky_factors(&m)?;
    c.check(
        "no lower-triangular factor",
        factors.is_empty(),
        format!("{} factors", factors.len()),
    );
    Ok(())
}

fn f3(c: &mut Checks) -> Result<()> {
    let s = Arc::new(make_z2x_mod_x3());
    let squares: Vec<String> = s
        .derived_sets()
        .squares()
        .iter()
        .map(|e| s.name(e))
        .collect();
    c.check(
        "Q(S) = {0, 1, x^2, 1+x^2}",
        squares == ["0", "1", "x^2", "1+x^2"],
        squares.join(", "),
    );

    let m = Matrix::from_names(&s, &[["1", "0"], ["0", "1+x^2"]])?;
    let r = cholesky(&m)?;
    let Some(l) = r.factor else {
        c.check("cholesky succeeds", false, format!("{:?}", r.status));
        return Ok(());
    };
    c.check(
        "cholesky succeeds",
        l.mul(&l.transpose())? == m,
        format!("L = {l}"),
    );

    let involutions = diagonal_involutions(&s, 1)?;
    let entries: Vec<String> = involutions
        .iter()
        .map(|d| d.diagonal.names().join(""))
        .collect();
    c.check(
        "involutions are {1, 1+x^2}",
        entries == ["1", "1+x^2"],
        entries.join(", "),
    );

    let mut expected = diagonal_involutions(&s, 2)?
        .iter()
        .map(|d| l.mul(&d.to_matrix()))
        .collect::<Result<Vec<_>>>()?;
    let mut factors = all_cholesky_factors(&m)?;
    let key = |x: &Matrix<SemiringTable>| x.entries().to_vec();
    expected.sort_by_key(key);
    expected.dedup();
    factors.sort_by_key(key);
    c.check(
        "factor set = {L·D}",
        factors == expected,
        format!("{} factors, {} products", factors.len(), expected.len()),
    );
    let mut with_nnr = 0;
    for f in &factors {
        if has_nonneg_numerical_range(f)?.is_yes() {
            with_nnr += 1;
        }
    }
    c.check(
        "no factor has NNR",
        with_nnr == 0,
        format!("{with_nnr} factors with NNR"),
    );
    Ok(())
}

fn f4(c: &mut Checks) -> Result<()> {
    let s = Arc::new(Naturals);
    let m = Matrix::identity(&s, 2);
    let psd = is_positive_semidefinite(&m)?;
    c.check("positive semidefinite", psd.is_yes(), format!("{psd:?}"));
    let nnr = has_nonneg_numerical_range(&m)?;
    let expected = NnrVerdict::No {
        witness: vec![1u32.into(), 1u32.into()],
        value: 2u32.into(),
    };
    c.check(
        "NNR counter-witness (1, 1)",
        nnr == expected,
        format!("{nnr:?}"),
    );
    Ok(())
}

fn f5(c: &mut Checks) -> Result<()> {
    for s in [make_boolean(), make_zn(2)?, make_z2x_mod_x3()] {
        let label = s.label().to_string();
        let report = corollary_equivalence_check(&Arc::new(s), 2)?;
        c.check(
            &format!("equivalence on {label}"),
            report.violations.is_empty(),
            format!(
                "{} matrices, {} satisfy all three, {} violations",
                report.checked,
                report.satisfying,
                report.violations.len()
            ),
        );
    }
    Ok(())
}
