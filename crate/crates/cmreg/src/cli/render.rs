//! Report rendering in three formats: human-readable text, JSON, and CSV.
//!
//! CSV is only defined for the tabular commands (`bound`, `table`); the
//! other reports are structured and get human or JSON output. All output is
//! deterministic: same command, same bytes.

use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::beilinson::{ChiProfile, RankTable};
use crate::bounds::{self, BoundRow, BoundTable, Comparisons};
use crate::projection::VarietySpec;

use super::verify::CheckResult;
use super::{catalog, CliError, Format, SplittingAnalysis};

/// Renders a `serde_json::Value` as pretty JSON with a trailing newline.
fn json_report(value: &Value) -> String {
    let mut text = serde_json::to_string_pretty(value)
        .expect("serializing an in-memory JSON value cannot fail");
    text.push('\n');
    text
}

/// Big integers that fit in an `i64` become JSON numbers; anything wider is
/// emitted as a decimal string so no precision is ever lost.
fn bigint_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(small) => Value::from(small),
        Err(_) => Value::String(value.to_string()),
    }
}

fn csv_only_for_tables() -> CliError {
    CliError::Validation(
        "csv output is only available for the bound and table commands".to_string(),
    )
}

fn spec_json(spec: &VarietySpec) -> Value {
    json!({
        "name": spec.name(),
        "dim": spec.dim(),
        "ambient": spec.ambient(),
        "degree": bigint_json(spec.degree()),
        "coeffs": spec.hilbert().coeffs().iter().map(bigint_json).collect::<Vec<_>>(),
        "family": spec.family().map(|family| family.to_string()),
    })
}

fn comparisons_json(comparisons: &Comparisons) -> Value {
    json!({
        "eisenbud_goto": bigint_json(&comparisons.eisenbud_goto),
        "mumford": bigint_json(&comparisons.mumford),
        "bel": bigint_json(&comparisons.bel),
    })
}

fn comparisons_human(comparisons: &Comparisons) -> String {
    format!(
        "comparisons: eisenbud-goto {}, mumford {}, bel {}",
        comparisons.eisenbud_goto, comparisons.mumford, comparisons.bel
    )
}

fn row_json(row: &BoundRow) -> Value {
    let mut obj = Map::new();
    obj.insert("m".to_string(), Value::from(row.m as u64));
    obj.insert("status".to_string(), Value::from(row.status.level.token()));
    match &row.outcome {
        Ok(result) => {
            obj.insert("bound".to_string(), bigint_json(&result.bound));
            obj.insert("provenance".to_string(), Value::from("hilbert-sum"));
        }
        Err(err) => {
            obj.insert("bound".to_string(), Value::Null);
            obj.insert("error".to_string(), Value::from(err.to_string()));
        }
    }
    Value::Object(obj)
}

fn table_json(spec: &VarietySpec, table: &BoundTable) -> String {
    json_report(&json!({
        "spec": spec_json(spec),
        "rows": table.rows.iter().map(row_json).collect::<Vec<_>>(),
        "comparisons": comparisons_json(&table.comparisons),
        "best": table.best.as_ref().map(bigint_json),
    }))
}

fn table_csv(table: &BoundTable) -> String {
    let mut out = String::from("m,status,bound,eg,mumford,bel\n");
    let c = &table.comparisons;
    for row in &table.rows {
        let bound = match &row.outcome {
            Ok(result) => result.bound.to_string(),
            Err(_) => String::new(),
        };
        writeln!(
            out,
            "{},{},{},{},{},{}",
            row.m,
            row.status.level.token(),
            bound,
            c.eisenbud_goto,
            c.mumford,
            c.bel
        )
        .expect("writing to a String cannot fail");
    }
    out
}

fn table_human(spec: &VarietySpec, table: &BoundTable) -> String {
    let mut out = format!("{spec}\n\n");
    // Column widths: statuses are short tokens, bounds can be wide.
    let bound_width = table
        .rows
        .iter()
        .filter_map(|row| row.outcome.as_ref().ok().map(|r| r.bound.to_string().len()))
        .max()
        .unwrap_or(1)
        .max("bound".len());
    writeln!(out, "  {:>4}  {:<12}  {:>bound_width$}  note", "m", "status", "bound")
        .expect("writing to a String cannot fail");
    for row in &table.rows {
        let (bound, note) = match &row.outcome {
            Ok(result) => (result.bound.to_string(), row.status.detail.clone()),
            Err(err) => ("-".to_string(), err.to_string()),
        };
        writeln!(
            out,
            "  {:>4}  {:<12}  {:>bound_width$}  {}",
            row.m,
            row.status.level.token(),
            bound,
            note
        )
        .expect("writing to a String cannot fail");
    }
    out.push('\n');
    out.push_str(&comparisons_human(&table.comparisons));
    out.push('\n');
    match &table.best {
        Some(best) => {
            writeln!(out, "best certified bound: {best}").expect("writing to a String cannot fail")
        }
        None => out.push_str("best certified bound: none (no certified row succeeded)\n"),
    }
    out
}

/// Report for the single-`m` `bound` command. The row is known to be `Ok`.
pub fn bound(
    format: Format,
    spec: &VarietySpec,
    row: &BoundRow,
    comparisons: &Comparisons,
) -> Result<String, CliError> {
    let result = row
        .outcome
        .as_ref()
        .expect("bound renderer is only called on successful rows");
    match format {
        Format::Human => {
            let mut out = format!("{spec}\n\n");
            writeln!(out, "m = {}: {} ({})", row.m, row.status.level, row.status.detail)
                .expect("writing to a String cannot fail");
            writeln!(out, "  regularity bound: {}", result.bound)
                .expect("writing to a String cannot fail");
            let ranks: Vec<String> = result.ranks.iter().map(BigInt::to_string).collect();
            writeln!(out, "  ranks a_i = [{}]", ranks.join(", "))
                .expect("writing to a String cannot fail");
            writeln!(out, "  rk E = {}, c1(E) = {}", result.rk_e, result.c1_e)
                .expect("writing to a String cannot fail");
            out.push('\n');
            out.push_str(&comparisons_human(comparisons));
            out.push('\n');
            Ok(out)
        }
        Format::Json => {
            let best = row
                .status
                .level
                .is_certified()
                .then(|| bigint_json(&result.bound));
            Ok(json_report(&json!({
                "spec": spec_json(spec),
                "rows": vec![row_json(row)],
                "comparisons": comparisons_json(comparisons),
                "best": best,
            })))
        }
        Format::Csv => {
            let mut out = String::from("m,status,bound,eg,mumford,bel\n");
            writeln!(
                out,
                "{},{},{},{},{},{}",
                row.m,
                row.status.level.token(),
                result.bound,
                comparisons.eisenbud_goto,
                comparisons.mumford,
                comparisons.bel
            )
            .expect("writing to a String cannot fail");
            Ok(out)
        }
    }
}

/// Report for the all-`m` (or custom-list) `table` command.
pub fn table(format: Format, spec: &VarietySpec, table: &BoundTable) -> Result<String, CliError> {
    match format {
        Format::Human => Ok(table_human(spec, table)),
        Format::Json => Ok(table_json(spec, table)),
        Format::Csv => Ok(table_csv(table)),
    }
}

/// Report for the `ranks` command: the full rank table of the projected
/// structure sheaf's resolution, plus the shape summary.
pub fn ranks(
    format: Format,
    spec: &VarietySpec,
    m: usize,
    profile: &ChiProfile,
    table: &RankTable,
) -> Result<String, CliError> {
    let regularity = table.bound() + BigInt::from(2);
    match format {
        Format::Human => {
            let mut out = format!("{spec}\n\n");
            writeln!(out, "projection to P^{m}, fiber twist k = {}", profile.k())
                .expect("writing to a String cannot fail");
            let ranks: Vec<String> = table.ranks().iter().map(BigInt::to_string).collect();
            writeln!(out, "ranks a_i = [{}]", ranks.join(", "))
                .expect("writing to a String cannot fail");
            writeln!(
                out,
                "rk E = {}, c1(E) = {}, rk G = {}",
                table.rk_e(),
                table.c1_e(),
                table.resolution().rk_g()
            )
            .expect("writing to a String cannot fail");
            writeln!(
                out,
                "profile bound -c1(E) = {}, regularity bound = {regularity}",
                table.bound()
            )
            .expect("writing to a String cannot fail");
            out.push('\n');
            writeln!(out, "{}", table.resolution()).expect("writing to a String cannot fail");
            writeln!(
                out,
                "euler consistency: verified for t in [{}, {}]",
                -(profile.ambient() as i64),
                profile.ambient()
            )
            .expect("writing to a String cannot fail");
            Ok(out)
        }
        Format::Json => Ok(json_report(&json!({
            "spec": spec_json(spec),
            "m": m,
            "k": profile.k(),
            "ranks": table.ranks().iter().map(bigint_json).collect::<Vec<_>>(),
            "rk_e": bigint_json(table.rk_e()),
            "c1_e": bigint_json(table.c1_e()),
            "rk_g": bigint_json(table.resolution().rk_g()),
            "profile_bound": bigint_json(table.bound()),
            "regularity_bound": bigint_json(&regularity),
            "resolution": table.resolution().to_string(),
        }))),
        Format::Csv => Err(csv_only_for_tables()),
    }
}

/// Report for the `splittings` command.
pub fn splittings(
    format: Format,
    spec: &VarietySpec,
    analysis: &SplittingAnalysis,
) -> Result<String, CliError> {
    match format {
        Format::Human => {
            let mut out = format!("{spec}\n\n");
            writeln!(
                out,
                "kernel bundle at m = r: rk E = {}, c1(E) = {}",
                analysis.rk_e, analysis.c1_e
            )
            .expect("writing to a String cannot fail");
            writeln!(out, "component twist range: {} <= a_i <= 0", analysis.low)
                .expect("writing to a String cannot fail");
            if analysis.all.is_empty() {
                out.push_str("no admissible splitting types\n");
            } else {
                writeln!(out, "admissible splitting types ({}):", analysis.all.len())
                    .expect("writing to a String cannot fail");
                for splitting in &analysis.all {
                    writeln!(out, "  {splitting}").expect("writing to a String cannot fail");
                }
            }
            writeln!(out, "max secant length compatible with a splitting: {}", analysis.max_secant)
                .expect("writing to a String cannot fail");
            if let Some((length, splitting)) = &analysis.secant {
                writeln!(out, "a {length}-secant line forces: {splitting}")
                    .expect("writing to a String cannot fail");
            }
            Ok(out)
        }
        Format::Json => {
            let secant = analysis.secant.as_ref().map(|(length, splitting)| {
                json!({
                    "length": length,
                    "components": splitting.components(),
                    "display": splitting.to_string(),
                })
            });
            Ok(json_report(&json!({
                "spec": spec_json(spec),
                "rk_e": analysis.rk_e,
                "c1_e": analysis.c1_e,
                "twist_range": [analysis.low, 0],
                "splittings": analysis
                    .all
                    .iter()
                    .map(|splitting| {
                        json!({
                            "components": splitting.components(),
                            "display": splitting.to_string(),
                        })
                    })
                    .collect::<Vec<_>>(),
                "max_secant": analysis.max_secant,
                "secant": secant,
            })))
        }
        Format::Csv => Err(csv_only_for_tables()),
    }
}

/// Report for the `verify` command: one line per check.
pub fn verify(format: Format, checks: &[CheckResult]) -> Result<String, CliError> {
    match format {
        Format::Human => {
            let mut out = String::new();
            let name_width = checks
                .iter()
                .map(|check| check.name.len())
                .max()
                .unwrap_or(0);
            for check in checks {
                let status = if check.passed { "pass" } else { "FAIL" };
                writeln!(out, "{:<name_width$}  {status}  {}", check.name, check.detail)
                    .expect("writing to a String cannot fail");
            }
            let passed = checks.iter().filter(|check| check.passed).count();
            writeln!(out, "\n{passed}/{} checks passed", checks.len())
                .expect("writing to a String cannot fail");
            Ok(out)
        }
        Format::Json => Ok(json_report(&json!({
            "checks": checks
                .iter()
                .map(|check| {
                    json!({
                        "name": check.name,
                        "passed": check.passed,
                        "detail": check.detail,
                    })
                })
                .collect::<Vec<_>>(),
            "passed": checks.iter().all(|check| check.passed),
        }))),
        Format::Csv => Err(csv_only_for_tables()),
    }
}

/// Report for the `catalog` command: every built-in entry with its computed
/// best certified bound next to the expected sharp value.
pub fn catalog_listing(format: Format) -> Result<String, CliError> {
    struct Line {
        name: &'static str,
        summary: &'static str,
        dim: usize,
        ambient: usize,
        degree: BigInt,
        best: Option<BigInt>,
        expected: Option<(i64, &'static str)>,
    }
    let lines: Vec<Line> = catalog::entries()
        .iter()
        .map(|entry| {
            let spec = entry.spec();
            let table = bounds::bound_table(&spec, None, false);
            Line {
                name: entry.name,
                summary: entry.summary,
                dim: spec.dim(),
                ambient: spec.ambient(),
                degree: spec.degree().clone(),
                best: table.best,
                expected: entry.expected,
            }
        })
        .collect();
    match format {
        Format::Human => {
            let mut out = String::new();
            let name_width = lines.iter().map(|line| line.name.len()).max().unwrap_or(0);
            for line in &lines {
                let best = line
                    .best
                    .as_ref()
                    .map_or_else(|| "-".to_string(), BigInt::to_string);
                let expected = line
                    .expected
                    .map_or_else(|| "-".to_string(), |(value, _)| value.to_string());
                writeln!(
                    out,
                    "{:<name_width$}  dim {}  P^{}  deg {:>2}  best {:>2}  expected {:>2}  {}",
                    line.name, line.dim, line.ambient, line.degree, best, expected, line.summary
                )
                .expect("writing to a String cannot fail");
            }
            out.push_str(
                "\nparametric names: rnc-<r> (rational normal curves), \
                 scroll-<n>-<r> (minimal-degree scrolls)\n",
            );
            Ok(out)
        }
        Format::Json => Ok(json_report(&json!({
            "entries": lines
                .iter()
                .map(|line| {
                    json!({
                        "name": line.name,
                        "summary": line.summary,
                        "dim": line.dim,
                        "ambient": line.ambient,
                        "degree": bigint_json(&line.degree),
                        "best": line.best.as_ref().map(bigint_json),
                        "expected": line.expected.map(|(value, _)| value),
                        "note": line.expected.map(|(_, note)| note),
                    })
                })
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => Err(csv_only_for_tables()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::bound_table;

    fn quartic() -> VarietySpec {
        VarietySpec::curve("elliptic-quartic", 4, 1, 3).unwrap()
    }

    #[test]
    fn human_table_layout() {
        let spec = quartic();
        let table_data = bound_table(&spec, None, false);
        let text = table(Format::Human, &spec, &table_data).unwrap();
        assert!(text.contains("elliptic-quartic"));
        assert!(text.contains("identity"));
        assert!(text.contains("best certified bound: 3"));
    }

    #[test]
    fn json_table_schema() {
        let spec = quartic();
        let table_data = bound_table(&spec, None, false);
        let text = table(Format::Json, &spec, &table_data).unwrap();
        let doc: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["spec"]["name"], "elliptic-quartic");
        assert_eq!(doc["spec"]["degree"], 4);
        assert_eq!(doc["rows"][0]["m"], 2);
        assert_eq!(doc["rows"][0]["bound"], 3);
        assert_eq!(doc["rows"][0]["provenance"], "hilbert-sum");
        assert_eq!(doc["best"], 3);
        assert_eq!(doc["comparisons"]["eisenbud_goto"], 3);
        assert_eq!(doc["comparisons"]["mumford"], 6);
        assert_eq!(doc["comparisons"]["bel"], 7);
    }

    #[test]
    fn csv_table_layout() {
        let spec = quartic();
        let table_data = bound_table(&spec, None, false);
        let text = table(Format::Csv, &spec, &table_data).unwrap();
        let mut csv_lines = text.lines();
        assert_eq!(csv_lines.next(), Some("m,status,bound,eg,mumford,bel"));
        assert_eq!(csv_lines.next(), Some("2,ran-extended,3,3,6,7"));
        assert_eq!(csv_lines.next(), Some("3,identity,4,3,6,7"));
        assert_eq!(csv_lines.next(), None);
    }

    #[test]
    fn csv_rejected_outside_tables() {
        assert!(matches!(verify(Format::Csv, &[]), Err(CliError::Validation(_))));
        assert!(matches!(catalog_listing(Format::Csv), Err(CliError::Validation(_))));
    }

    #[test]
    fn error_rows_render_without_bounds() {
        // A degenerate profile: "curve" of degree 2 whose sheaf cohomology
        // cannot come from a smooth connected curve in P^3.
        let spec = VarietySpec::generic(
            "degenerate-conic",
            3,
            crate::hilbert::HilbertPoly::from_integers(&[1, 2]).unwrap(),
        )
        .unwrap();
        let table_data = bound_table(&spec, None, false);
        assert!(table_data.has_inconsistency());
        let text = table(Format::Human, &spec, &table_data).unwrap();
        assert!(text.contains("best certified bound: none"));
        let csv = table(Format::Csv, &spec, &table_data).unwrap();
        // Bound column is empty on inconsistent rows.
        assert!(csv.lines().nth(1).unwrap().starts_with("2,ran-extended,,"));
        let json_text = table(Format::Json, &spec, &table_data).unwrap();
        let doc: Value = serde_json::from_str(&json_text).unwrap();
        assert!(doc["rows"][0]["bound"].is_null());
        assert!(doc["rows"][0]["error"].as_str().unwrap().contains("a_1"));
        assert!(doc["best"].is_null());
    }

    #[test]
    fn bigint_json_falls_back_to_strings() {
        let small = BigInt::from(12);
        assert_eq!(bigint_json(&small), Value::from(12));
        let huge = BigInt::from(u64::MAX) * BigInt::from(u64::MAX);
        assert_eq!(
            bigint_json(&huge),
            Value::String("340282366920938463426481119284349108225".to_string())
        );
    }
}
