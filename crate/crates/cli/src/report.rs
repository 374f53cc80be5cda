//! The machine-readable report every command emits, its deterministic JSON
//! encoding, and the human rendering behind `--pretty`.

use serde::Serialize;

use crate::crossval::CrossValidation;

/// Overall outcome of a command, mapped onto the process exit code.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    /// Everything asked for was computed and every check held.
    Pass,
    /// Some verification check failed.
    Mismatch,
    /// No check failed, but at least one sub-result is indeterminate.
    Indeterminate,
}

/// One verdict row: what was examined, the verdict, supporting detail.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerdictLine {
    pub subject: String,
    pub verdict: String,
    pub detail: String,
}

/// A command's complete result. The JSON form is deterministic given the
/// inputs, flags, and tool version: timing is carried outside the serialized
/// fields and appears only in the human rendering.
#[derive(Serialize)]
pub struct Report {
    pub command: String,
    pub version: String,
    pub inputs: serde_json::Value,
    pub outcome: Outcome,
    pub verdicts: Vec<VerdictLine>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_validation: Option<CrossValidation>,
    pub data: serde_json::Value,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub elapsed_ms: u128,
}

impl Report {
    pub fn new(command: &str, inputs: serde_json::Value) -> Report {
        Report {
            command: command.to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            inputs,
            outcome: Outcome::Pass,
            verdicts: Vec::new(),
            cross_validation: None,
            data: serde_json::Value::Object(serde_json::Map::new()),
            notes: Vec::new(),
            elapsed_ms: 0,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.outcome {
            Outcome::Pass => 0,
            Outcome::Mismatch => 1,
            Outcome::Indeterminate => 3,
        }
    }

    /// Canonical JSON bytes: pretty-printed with sorted object keys (the
    /// serializer's map type is ordered), trailing newline.
    pub fn to_json(&self) -> String {
        let mut text =
            serde_json::to_string_pretty(self).expect("reports contain only serializable data");
        text.push('\n');
        text
    }

    /// Human rendering; the only place timing is shown.
    pub fn render_pretty(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "twodiv {} v{}", self.command, self.version);
        let _ = writeln!(out, "inputs: {}", compact(&self.inputs));
        for line in &self.verdicts {
            let _ = writeln!(out, "  {:<28} {:<14} {}", line.subject, line.verdict, line.detail);
        }
        if let Some(cv) = &self.cross_validation {
            let _ = writeln!(
                out,
                "cross-validation: {} (splitting-criterion order {}, cohomology kernel order {})",
                if cv.agree { "AGREE" } else { "DISAGREE" },
                cv.galois_order,
                cv.cohomology_order
            );
        }
        for note in &self.notes {
            let _ = writeln!(out, "note: {note}");
        }
        let _ = writeln!(
            out,
            "outcome: {} ({} ms)",
            match self.outcome {
                Outcome::Pass => "pass",
                Outcome::Mismatch => "mismatch",
                Outcome::Indeterminate => "indeterminate",
            },
            self.elapsed_ms
        );
        out
    }
}

fn compact(v: &serde_json::Value) -> String {
    serde_json::to_string(v).unwrap_or_else(|_| "{}".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_bytes_are_stable_and_exclude_timing() {
        let mut report = Report::new("demo", serde_json::json!({"n": 3}));
        report.verdicts.push(VerdictLine {
            subject: "(t)".into(),
            verdict: "yes".into(),
            detail: "".into(),
        });
        report.elapsed_ms = 123;
        let first = report.to_json();
        report.elapsed_ms = 456;
        let second = report.to_json();
        assert_eq!(first, second, "timing must not leak into the JSON bytes");
        assert!(!first.contains("elapsed"));
        assert!(first.ends_with('\n'));
        // But the human rendering does show it.
        assert!(report.render_pretty().contains("456 ms"));
    }

    #[test]
    fn exit_codes_follow_the_outcome() {
        let mut report = Report::new("demo", serde_json::json!({}));
        assert_eq!(report.exit_code(), 0);
        report.outcome = Outcome::Mismatch;
        assert_eq!(report.exit_code(), 1);
        report.outcome = Outcome::Indeterminate;
        assert_eq!(report.exit_code(), 3);
    }
}
