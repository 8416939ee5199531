//! Text renderings of tables and verification reports.

use serde_json::json;
use slalg::verify::VerifyReport;
use slalg::{AlgebraKind, Error, Orientation};

use crate::Format;

fn csv_to_string(rows: &[Vec<String>]) -> Result<String, Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.write_record(row).map_err(|e| Error::Input(e.to_string()))?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Input(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Input(e.to_string()))
}

/// Header row plus one row per left factor.
fn grid(kind: AlgebraKind, o: Orientation) -> Vec<Vec<String>> {
    let table = kind.table(o);
    let names = kind.names();
    let mut rows = vec![std::iter::once("*".to_string()).chain(names.iter().map(|n| n.to_string())).collect()];
    for i in 0..kind.dim() {
        let mut row = vec![names[i].to_string()];
        row.extend((0..kind.dim()).map(|j| table.render_entry(i, j, names)));
        rows.push(row);
    }
    rows
}

pub fn table(kind: AlgebraKind, o: Orientation, format: Format) -> Result<String, Error> {
    match format {
        Format::Csv => csv_to_string(&grid(kind, o)),
        Format::Markdown => {
            let rows = grid(kind, o);
            let mut out = format!("{} multiplication table, λ = {o}\n\n", kind.name());
            for (n, row) in rows.iter().enumerate() {
                out.push_str(&format!("| {} |\n", row.join(" | ")));
                if n == 0 {
                    out.push_str(&format!("|{}\n", "---|".repeat(row.len())));
                }
            }
            Ok(out)
        }
        Format::Json => {
            let table = kind.table(o);
            let entries: Vec<Vec<_>> =
                (0..kind.dim()).map(|i| (0..kind.dim()).map(|j| table.entry(i, j)).collect()).collect();
            let v = json!({
                "algebra": kind.name(),
                "lambda": o.value(),
                "basis": kind.names(),
                "entries": entries,
            });
            Ok(format!("{v}\n"))
        }
    }
}

pub fn verify_json(reports: &[VerifyReport], passed: bool) -> String {
    format!("{}\n", serde_json::to_string_pretty(&json!({ "passed": passed, "reports": reports })).expect("serializable"))
}

pub fn verify_csv(reports: &[VerifyReport]) -> Result<String, Error> {
    let mut rows = vec![["suite", "algebra", "lambda", "cases", "failures", "table_diff"].map(String::from).to_vec()];
    for r in reports {
        rows.push(vec![
            r.suite.clone(),
            r.algebra.clone(),
            r.lambda.to_string(),
            r.cases.to_string(),
            r.failure_count.to_string(),
            r.table_diff.len().to_string(),
        ]);
    }
    csv_to_string(&rows)
}

pub fn verify_markdown(reports: &[VerifyReport], passed: bool) -> String {
    let timed = reports.iter().any(|r| r.wall_ms.is_some());
    let mut out = String::from("| suite | algebra | λ | cases | failures | status |");
    out.push_str(if timed { " ms |\n" } else { "\n" });
    out.push_str("|---|---|---|---|---|---|");
    out.push_str(if timed { "---|\n" } else { "\n" });
    for r in reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        out.push_str(&format!(
            "| {} | {} | {} | {} | {} | {} |",
            r.suite, r.algebra, r.lambda, r.cases, r.failure_count, status
        ));
        match r.wall_ms {
            Some(ms) => out.push_str(&format!(" {ms:.1} |\n")),
            None => out.push('\n'),
        }
    }
    for r in reports {
        if r.failures.is_empty() && r.table_diff.is_empty() && r.notes.is_empty() {
            continue;
        }
        out.push_str(&format!("\n### {} / {} / λ = {}\n\n", r.suite, r.algebra, r.lambda));
        for note in &r.notes {
            out.push_str(&format!("- note: {note}\n"));
        }
        for d in &r.table_diff {
            out.push_str(&format!(
                "- printed table ({}, {}): printed `{}`, derived `{}`\n",
                d.row, d.col, d.printed_entry, d.derived_entry
            ));
        }
        for f in &r.failures {
            out.push_str(&format!("- {}: `{}` vs `{}`\n", f.case, f.left, f.right));
        }
        if r.failure_count > r.failures.len() {
            out.push_str(&format!("- … {} more\n", r.failure_count - r.failures.len()));
        }
    }
    out.push_str(&format!("\nresult: {}\n", if passed { "pass" } else { "FAIL" }));
    out
}
