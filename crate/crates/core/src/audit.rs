//! Reporting-incentive audits over a grid of reported targets.
//!
//! For each reported target `r ≤ true_t1` the audit enumerates the equilibrium
//! allocation indices at targets `(r, t2)` and records the extreme liquid
//! welfares bidder 1 can see there — always valued at the *true* target, since
//! welfare doesn't change just because the report did. Two monotonicity
//! properties are then judged across the grid: the worst-case welfare never
//! improves by under-reporting (the `raic` verdict, pessimistic side) and
//! neither does the best case (`oaic`, optimistic side). Reports with an empty
//! equilibrium set stay in the table but cannot witness either property, so
//! they degrade a clean verdict to `Inconclusive` instead of `Pass`.

use num::Signed;

use crate::error::{Error, Result};
use crate::model::{NormalizedInstance, Targets};
use crate::rational::Rat;
use crate::uniform::enumerate_equilibria;

/// One grid entry: the equilibrium indices at this report and the extreme
/// liquid welfares for bidder 1 (absent when no equilibrium exists).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditRow {
    pub report: Rat,
    pub equilibrium_set: Vec<usize>,
    pub min_lw: Option<Rat>,
    pub max_lw: Option<Rat>,
}

/// Which side of the equilibrium set a verdict speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditProperty {
    /// Monotonicity of the minimum (pessimistic) liquid welfare.
    Raic,
    /// Monotonicity of the maximum (optimistic) liquid welfare.
    Oaic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AuditVerdict {
    Pass,
    Fail,
    Inconclusive,
}

/// A monotonicity breach: the lower report saw strictly more welfare.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditViolation {
    pub property: AuditProperty,
    /// The offending report pair, lower report first.
    pub reports: (Rat, Rat),
    /// The compared welfare values in the same order.
    pub values: (Rat, Rat),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub true_t1: Rat,
    pub t2: Rat,
    pub rows: Vec<AuditRow>,
    pub raic: AuditVerdict,
    pub oaic: AuditVerdict,
    pub violations: Vec<AuditViolation>,
}

/// Judges one property: every pair of comparable (nonempty) rows must be
/// weakly increasing in report order.
fn judge(
    rows: &[AuditRow],
    property: AuditProperty,
    violations: &mut Vec<AuditViolation>,
) -> AuditVerdict {
    let pick = |row: &AuditRow| match property {
        AuditProperty::Raic => row.min_lw.clone(),
        AuditProperty::Oaic => row.max_lw.clone(),
    };
    let before = violations.len();
    for i in 0..rows.len() {
        let Some(low) = pick(&rows[i]) else { continue };
        for row in &rows[i + 1..] {
            let Some(high) = pick(row) else { continue };
            if low > high {
                violations.push(AuditViolation {
                    property,
                    reports: (rows[i].report.clone(), row.report.clone()),
                    values: (low.clone(), high),
                });
            }
        }
    }
    if violations.len() > before {
        AuditVerdict::Fail
    } else if rows.iter().any(|r| r.min_lw.is_none()) {
        AuditVerdict::Inconclusive
    } else {
        AuditVerdict::Pass
    }
}

/// Runs the full audit: one row per report in `grid` (strictly ascending, all
/// at most `true_t1`, with `true_t1` itself appended when missing), then both
/// monotonicity verdicts.
pub fn ic_audit(
    norm: &NormalizedInstance,
    true_t1: &Rat,
    t2: &Rat,
    grid: &[Rat],
) -> Result<AuditReport> {
    if !true_t1.is_positive() || !t2.is_positive() {
        return Err(Error::Precondition("targets must be positive".into()));
    }
    if grid.is_empty() {
        return Err(Error::Precondition("report grid must be nonempty".into()));
    }
    for pair in grid.windows(2) {
        if pair[0] >= pair[1] {
            return Err(Error::Precondition(
                "report grid must be strictly ascending".into(),
            ));
        }
    }
    if !grid[0].is_positive() {
        return Err(Error::Precondition("reports must be positive".into()));
    }
    if grid.last().unwrap() > true_t1 {
        return Err(Error::Precondition(
            "reports must not exceed the true target".into(),
        ));
    }

    let mut reports = grid.to_vec();
    if reports.last() != Some(true_t1) {
        reports.push(true_t1.clone());
    }

    let mut rows = Vec::with_capacity(reports.len());
    for report in reports {
        let targets = Targets::pair(report.clone(), t2.clone())?;
        let set = enumerate_equilibria(norm, &targets);
        // Welfare is monotone in the allocation index, so the set's ends give
        // the extremes; both are valued at the true target.
        let min_lw = set.first().map(|&k| true_t1 * norm.prefix_value(0, k));
        let max_lw = set.last().map(|&k| true_t1 * norm.prefix_value(0, k));
        rows.push(AuditRow {
            report,
            equilibrium_set: set,
            min_lw,
            max_lw,
        });
    }

    let mut violations = Vec::new();
    let raic = judge(&rows, AuditProperty::Raic, &mut violations);
    let oaic = judge(&rows, AuditProperty::Oaic, &mut violations);
    Ok(AuditReport {
        true_t1: true_t1.clone(),
        t2: t2.clone(),
        rows,
        raic,
        oaic,
        violations,
    })
}
