//! Verification scenario files: one `VERIFY <expr> == <expr>` per line,
//! blank lines and `#` comments ignored.

use serde::Serialize;

use super::{first_coeff_mismatch, parse_expr, RatError};

#[derive(Clone, Debug, Serialize)]
pub struct LineResult {
    pub line: usize,
    pub text: String,
    pub pass: bool,
    /// coefficient-level diff (side, power, got, want) when the sides differ
    pub mismatch: Option<(String, usize, String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScenarioReport {
    pub results: Vec<LineResult>,
    pub passed: usize,
    pub failed: usize,
}

impl ScenarioReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ScenarioError {
    #[error("line {line}: {msg}")]
    BadLine { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Expr {
        line: usize,
        #[source]
        source: RatError,
    },
}

/// Runs every VERIFY line; expression-level failures (parse errors,
/// division by zero) abort with the line number, mathematical inequality
/// is reported per line.
pub fn run_scenario(text: &str) -> Result<ScenarioReport, ScenarioError> {
    let mut results = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let rest = trimmed.strip_prefix("VERIFY").ok_or_else(|| {
            ScenarioError::BadLine {
                line,
                msg: "expected a line of the form 'VERIFY <expr> == <expr>'".into(),
            }
        })?;
        let (lhs_text, rhs_text) =
            rest.split_once("==").ok_or_else(|| ScenarioError::BadLine {
                line,
                msg: "missing '==' separator".into(),
            })?;
        let lhs = parse_expr(lhs_text).map_err(|source| ScenarioError::Expr { line, source })?;
        let rhs = parse_expr(rhs_text).map_err(|source| ScenarioError::Expr { line, source })?;
        let pass = lhs == rhs;
        results.push(LineResult {
            line,
            text: trimmed.to_string(),
            pass,
            mismatch: if pass {
                None
            } else {
                Some(first_coeff_mismatch(&lhs, &rhs))
            },
        });
    }
    let passed = results.iter().filter(|r| r.pass).count();
    let failed = results.len() - passed;
    Ok(ScenarioReport {
        results,
        passed,
        failed,
    })
}
