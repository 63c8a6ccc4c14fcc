//! Deterministic text renderings: aligned tables, CSV and JSON.
//!
//! Integers are written in full, rationals as `p/q`, and nothing depends on
//! locale, time or hash order.

use regdim::dims::DimensionRecord;
use regdim::exactnum::format_rational;
use regdim::resonance::{ExponentConfig, ResonanceReport, Violation};
use regdim::verify::SuiteReport;

pub const RECORD_HEADER: [&str; 12] = [
    "m",
    "n",
    "r",
    "D",
    "K_recursion",
    "K_prop1",
    "K_closed",
    "I_sum",
    "I_hyp",
    "I_subtract",
    "routes_agree",
    "in_validity_range",
];

fn i_hyp_text(rec: &DimensionRecord) -> String {
    match &rec.i_hyp {
        Ok(v) => format_rational(v),
        Err(e) => format!("error: {e}"),
    }
}

fn record_cells(rec: &DimensionRecord) -> Vec<String> {
    vec![
        rec.query.m.to_string(),
        rec.query.n.to_string(),
        rec.query.r.to_string(),
        rec.d.to_string(),
        rec.k_recursion.to_string(),
        rec.k_prop1.to_string(),
        rec.k_closed.to_string(),
        rec.i_sum.to_string(),
        i_hyp_text(rec),
        rec.i_subtract.to_string(),
        rec.routes_agree.to_string(),
        rec.in_validity_range.to_string(),
    ]
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

/// Columns padded to their widest cell, two spaces apart, no trailing blanks.
pub fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let header_cells: Vec<String> = header.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header_cells).chain(rows) {
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn csv_escape(cell: &str) -> String {
    if cell.contains([',', '"', '\n']) {
        format!("\"{}\"", cell.replace('"', "\"\""))
    } else {
        cell.to_string()
    }
}

pub fn csv(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = header.join(",");
    out.push('\n');
    for row in rows {
        out.push_str(&row.iter().map(|c| csv_escape(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

pub fn record_json(rec: &DimensionRecord) -> String {
    let i_hyp = match &rec.i_hyp {
        Ok(v) => json_str(&format_rational(v)),
        Err(_) => "null".to_string(),
    };
    let mut fields = vec![
        format!("\"m\":{}", rec.query.m),
        format!("\"n\":{}", rec.query.n),
        format!("\"r\":{}", rec.query.r),
        format!("\"D\":{}", rec.d),
        format!("\"K\":{}", rec.k_closed),
        format!("\"I\":{}", rec.i_sum),
        format!("\"K_recursion\":{}", rec.k_recursion),
        format!("\"K_prop1\":{}", rec.k_prop1),
        format!("\"K_closed\":{}", rec.k_closed),
        format!("\"I_sum\":{}", rec.i_sum),
        format!("\"I_hyp\":{i_hyp}"),
        format!("\"I_subtract\":{}", rec.i_subtract),
        format!("\"routes_agree\":{}", rec.routes_agree),
        format!("\"in_validity_range\":{}", rec.in_validity_range),
    ];
    if let Err(e) = &rec.i_hyp {
        fields.push(format!("\"I_hyp_error\":{}", json_str(&e.to_string())));
    }
    format!("{{{}}}", fields.join(","))
}

pub fn records_pretty(records: &[DimensionRecord]) -> String {
    let rows: Vec<Vec<String>> = records.iter().map(record_cells).collect();
    aligned(&RECORD_HEADER, &rows)
}

pub fn records_csv(records: &[DimensionRecord]) -> String {
    let rows: Vec<Vec<String>> = records.iter().map(record_cells).collect();
    csv(&RECORD_HEADER, &rows)
}

pub fn records_json(records: &[DimensionRecord]) -> String {
    if records.is_empty() {
        return "[]\n".to_string();
    }
    let body: Vec<String> = records.iter().map(|r| format!("  {}", record_json(r))).collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}

fn violation_text(v: &Violation) -> String {
    match v.j {
        Some(j) => format!("{} j={} k={} value={}", v.condition, j, v.k, format_rational(&v.value)),
        None => format!("{} k={} value={}", v.condition, v.k, format_rational(&v.value)),
    }
}

fn violation_json(v: &Violation) -> String {
    let j = v.j.map_or("null".to_string(), |j| j.to_string());
    format!(
        "{{\"condition\":{},\"j\":{},\"k\":{},\"value\":{}}}",
        json_str(v.condition.as_str()),
        j,
        v.k,
        json_str(&format_rational(&v.value))
    )
}

fn indices_text(report: &ResonanceReport, sep: &str) -> String {
    report.resonant_indices.iter().map(usize::to_string).collect::<Vec<_>>().join(sep)
}

pub fn classify_pretty(cfg: &ExponentConfig, report: &ResonanceReport, record: Option<&DimensionRecord>) -> String {
    let lambdas = cfg.lambdas.iter().map(format_rational).collect::<Vec<_>>().join(", ");
    let mut out = String::new();
    out.push_str(&format!("m                  {}\n", cfg.m));
    out.push_str(&format!("n                  {}\n", cfg.n()));
    out.push_str(&format!("g                  {}\n", format_rational(&cfg.g)));
    out.push_str(&format!("lambdas            {lambdas}\n"));
    let indices = if report.resonant_indices.is_empty() { "none".to_string() } else { indices_text(report, ", ") };
    out.push_str(&format!("resonant indices   {indices}\n"));
    out.push_str(&format!("r                  {}\n", report.r));
    out.push_str(&format!("lambda_infinity    {}\n", format_rational(&report.lambda_infinity)));
    out.push_str(&format!("assumption_valid   {}\n", report.assumption_valid));
    if report.violations.is_empty() {
        out.push_str("violations         none\n");
    } else {
        out.push_str(&format!("violations         {}\n", report.violations.len()));
        for v in &report.violations {
            out.push_str(&format!("  {}\n", violation_text(v)));
        }
    }
    if let Some(rec) = record {
        out.push('\n');
        out.push_str(&records_pretty(std::slice::from_ref(rec)));
    }
    out
}

pub fn classify_json(cfg: &ExponentConfig, report: &ResonanceReport, record: Option<&DimensionRecord>) -> String {
    let violations: Vec<String> = report.violations.iter().map(violation_json).collect();
    let report_json = format!(
        "{{\"resonant_indices\":[{}],\"r\":{},\"lambda_infinity\":{},\"violations\":[{}],\"assumption_valid\":{}}}",
        indices_text(report, ","),
        report.r,
        json_str(&format_rational(&report.lambda_infinity)),
        violations.join(","),
        report.assumption_valid
    );
    let record_json = record.map_or("null".to_string(), record_json);
    format!(
        "{{\n  \"config\": {},\n  \"report\": {},\n  \"record\": {}\n}}\n",
        cfg.to_json_string(),
        report_json,
        record_json
    )
}

pub const CLASSIFY_HEADER: [&str; 11] =
    ["m", "n", "g", "resonant_indices", "r", "lambda_infinity", "violations", "assumption_valid", "D", "K", "I"];

pub fn classify_csv(cfg: &ExponentConfig, report: &ResonanceReport, record: Option<&DimensionRecord>) -> String {
    let violations = report.violations.iter().map(violation_text).collect::<Vec<_>>().join(";");
    let (d, k, i) = record.map_or((String::new(), String::new(), String::new()), |rec| {
        (rec.d.to_string(), rec.k_closed.to_string(), rec.i_sum.to_string())
    });
    let row = vec![
        cfg.m.to_string(),
        cfg.n().to_string(),
        format_rational(&cfg.g),
        indices_text(report, ";"),
        report.r.to_string(),
        format_rational(&report.lambda_infinity),
        violations,
        report.assumption_valid.to_string(),
        d,
        k,
        i,
    ];
    csv(&CLASSIFY_HEADER, &[row])
}

pub const VERIFY_HEADER: [&str; 6] = ["suite", "passed", "failed", "skipped", "status", "first_counterexample"];

fn verify_cells(r: &SuiteReport) -> Vec<String> {
    vec![
        r.suite.name().to_string(),
        r.passed.to_string(),
        r.failed.to_string(),
        r.skipped.to_string(),
        if r.all_passed() { "PASS" } else { "FAIL" }.to_string(),
        r.first_counterexample.clone().unwrap_or_default(),
    ]
}

pub fn verify_pretty(reports: &[SuiteReport]) -> String {
    let rows: Vec<Vec<String>> = reports.iter().map(|r| verify_cells(r)[..5].to_vec()).collect();
    let mut out = aligned(&VERIFY_HEADER[..5], &rows);
    for r in reports {
        if let Some(case) = &r.first_counterexample {
            out.push_str(&format!("first counterexample ({}): {case}\n", r.suite));
        }
    }
    out
}

pub fn verify_csv(reports: &[SuiteReport]) -> String {
    let rows: Vec<Vec<String>> = reports.iter().map(verify_cells).collect();
    csv(&VERIFY_HEADER, &rows)
}

pub fn verify_json(reports: &[SuiteReport]) -> String {
    let body: Vec<String> = reports
        .iter()
        .map(|r| {
            let case = r.first_counterexample.as_deref().map_or("null".to_string(), json_str);
            format!(
                "  {{\"suite\":{},\"passed\":{},\"failed\":{},\"skipped\":{},\"all_passed\":{},\"first_counterexample\":{}}}",
                json_str(r.suite.name()),
                r.passed,
                r.failed,
                r.skipped,
                r.all_passed(),
                case
            )
        })
        .collect();
    format!("[\n{}\n]\n", body.join(",\n"))
}
