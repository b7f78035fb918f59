//! Human-readable and canonical renderings of a validation report.
//!
//! ```text
//! procco-report 1
//! mode strict
//! finding A1 error wp1,pe1 "wp1 consumes pe1 but none of its parts does (...)"
//! count A1 1
//! ```

use super::ValidationReport;
use crate::text::quote;

pub const REPORT_HEADER: &str = "procco-report 1";

/// One `CODE severity subjects: message` line per finding.
pub fn render_text(report: &ValidationReport) -> String {
    let mut out = String::new();
    for f in &report.findings {
        out.push_str(&f.to_string());
        out.push('\n');
    }
    out
}

pub fn render_canonical(report: &ValidationReport) -> String {
    let mut out = format!("{REPORT_HEADER}\nmode {}\n", report.mode.name());
    for f in &report.findings {
        out.push_str(&format!(
            "finding {} {} {} {}\n",
            f.code,
            f.severity,
            f.subject_list(),
            quote(&f.message)
        ));
    }
    for (code, n) in &report.counts {
        out.push_str(&format!("count {code} {n}\n"));
    }
    out
}
