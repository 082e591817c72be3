//! Built-in self-verification suite: structural identities checked over a
//! configurable box, plus cross-route consistency checks over every catalog
//! variety at every admissible projection target.

use crate::beilinson;
use crate::bounds;
use crate::par;
use crate::projection::VarietySpec;

use super::catalog;

/// Outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Runs the full suite. `r_max`/`l_max` bound the coefficient-identity box;
/// the remaining checks sweep every catalog entry over all admissible `m`.
pub fn run_suite(r_max: usize, l_max: usize) -> Vec<CheckResult> {
    let specs: Vec<VarietySpec> =
        catalog::entries().iter().map(|entry| entry.spec()).collect();
    vec![
        coefficient_identity_check(r_max, l_max),
        route_equality_check(&specs),
        table_relations_check(&specs),
        rank_nonnegativity_check(&specs),
        euler_consistency_check(&specs),
        closed_form_check(&specs),
    ]
}

/// Rows checked and failure descriptions collected from one spec.
struct SpecOutcome {
    rows: u64,
    failures: Vec<String>,
}

fn sweep<F>(specs: &[VarietySpec], per_spec: F) -> (u64, Vec<String>)
where
    F: Fn(&VarietySpec) -> SpecOutcome + Sync + Send,
{
    let outcomes = par::map_vec(specs, per_spec);
    let rows = outcomes.iter().map(|outcome| outcome.rows).sum();
    let failures = outcomes
        .into_iter()
        .flat_map(|outcome| outcome.failures)
        .collect();
    (rows, failures)
}

fn finish(name: &'static str, rows: u64, failures: Vec<String>, what: &str) -> CheckResult {
    match failures.first() {
        None => CheckResult {
            name,
            passed: true,
            detail: format!("{rows} {what}"),
        },
        Some(first) => CheckResult {
            name,
            passed: false,
            detail: format!("{} failures, first: {first}", failures.len()),
        },
    }
}

fn admissible_m(spec: &VarietySpec) -> std::ops::RangeInclusive<usize> {
    spec.dim() + 1..=spec.ambient()
}

fn coefficient_identity_check(r_max: usize, l_max: usize) -> CheckResult {
    let report = beilinson::verify_coefficient_identity(r_max, l_max);
    let detail = match &report.first_failure {
        None => format!(
            "r <= {}, l <= {}: {} combinations agree on all three routes",
            report.r_max, report.l_max, report.checked
        ),
        Some(failure) => format!(
            "first failure at r = {}, l = {}: series {}, direct {}, closed {}",
            failure.r, failure.l, failure.series, failure.direct, failure.closed
        ),
    };
    CheckResult { name: "coefficient-identity", passed: report.passed(), detail }
}

fn route_equality_check(specs: &[VarietySpec]) -> CheckResult {
    let (rows, failures) = sweep(specs, |spec| {
        let mut outcome = SpecOutcome { rows: 0, failures: Vec::new() };
        for m in admissible_m(spec) {
            outcome.rows += 1;
            let direct = bounds::hilbert_sum_bound(spec, m);
            let via_table = bounds::rank_table_bound(spec, m);
            match (&direct, &via_table) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => outcome.failures.push(format!(
                    "{} at m = {m}: direct {direct:?}, rank table {via_table:?}",
                    spec.name()
                )),
            }
        }
        outcome
    });
    finish(
        "route-equality",
        rows,
        failures,
        "(spec, m) rows: direct sum equals rank-table bound",
    )
}

fn table_relations_check(specs: &[VarietySpec]) -> CheckResult {
    let (rows, failures) = sweep(specs, |spec| {
        let mut outcome = SpecOutcome { rows: 0, failures: Vec::new() };
        for m in admissible_m(spec) {
            match spec.table_relation_check(m) {
                Ok(report) => {
                    outcome.rows += report.rows.len() as u64;
                    for row in report.rows.iter().filter(|row| !row.passed()) {
                        outcome.failures.push(format!(
                            "{} at m = {m}, j = {}: got {}, expected {}",
                            spec.name(),
                            row.j,
                            row.lhs,
                            row.expected
                        ));
                    }
                }
                Err(err) => outcome
                    .failures
                    .push(format!("{} at m = {m}: {err}", spec.name())),
            }
        }
        outcome
    });
    finish(
        "table-relations",
        rows,
        failures,
        "profile/sheaf cross-table rows match their exact values",
    )
}

fn rank_nonnegativity_check(specs: &[VarietySpec]) -> CheckResult {
    let (rows, failures) = sweep(specs, |spec| {
        let mut outcome = SpecOutcome { rows: 0, failures: Vec::new() };
        for m in admissible_m(spec) {
            outcome.rows += 1;
            let table = spec
                .pushforward_profile(m)
                .and_then(|profile| profile.rank_table().map_err(Into::into));
            if let Err(err) = table {
                outcome
                    .failures
                    .push(format!("{} at m = {m}: {err}", spec.name()));
            }
        }
        outcome
    });
    finish(
        "rank-nonnegativity",
        rows,
        failures,
        "rank tables built with every term rank and rk(E) nonnegative",
    )
}

fn euler_consistency_check(specs: &[VarietySpec]) -> CheckResult {
    let (rows, failures) = sweep(specs, |spec| {
        let mut outcome = SpecOutcome { rows: 0, failures: Vec::new() };
        for m in admissible_m(spec) {
            outcome.rows += 1;
            let verified = spec.pushforward_profile(m).map_err(|err| err.to_string()).and_then(
                |profile| {
                    let table = profile.rank_table().map_err(|err| err.to_string())?;
                    profile
                        .euler_consistency(&table)
                        .map_err(|err| err.to_string())
                },
            );
            if let Err(err) = verified {
                outcome
                    .failures
                    .push(format!("{} at m = {m}: {err}", spec.name()));
            }
        }
        outcome
    });
    finish(
        "euler-consistency",
        rows,
        failures,
        "complexes whose Euler characteristic matches the sheaf's at every twist",
    )
}

fn closed_form_check(specs: &[VarietySpec]) -> CheckResult {
    let (rows, failures) = sweep(specs, |spec| {
        let mut outcome = SpecOutcome { rows: 0, failures: Vec::new() };
        if spec.family().is_none() {
            return outcome;
        }
        for m in admissible_m(spec) {
            outcome.rows += 1;
            let closed = bounds::closed_form_bound(spec, m);
            let direct = bounds::hilbert_sum_bound(spec, m);
            match (&closed, &direct) {
                (Ok(a), Ok(b)) if a == b => {}
                _ => outcome.failures.push(format!(
                    "{} at m = {m}: closed form {closed:?}, direct {direct:?}",
                    spec.name()
                )),
            }
        }
        outcome
    });
    finish(
        "closed-form-agreement",
        rows,
        failures,
        "family closed forms equal the direct sum",
    )
}
