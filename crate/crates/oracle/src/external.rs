use std::io::Write;
use std::process::{Command, Stdio};

use regex::Regex;

use crate::OracleError;

/// The model count from a clingo-style summary line such as `Models : 3`.
/// A trailing `+` (search not exhausted) makes the count unusable.
pub fn parse_model_count(output: &str) -> Option<u64> {
    let re = Regex::new(r"(?m)^\s*Models\s*:\s*(\d+)(\+?)").expect("valid pattern");
    let caps = re.captures(output)?;
    if !caps[2].is_empty() {
        return None;
    }
    caps[1].parse().ok()
}

/// Feeds `program` to `command` through a shell and reads the model count.
/// `Ok(None)` means the command could not be started or was not found.
pub fn external_count(program: &str, command: &str) -> Result<Option<u64>, OracleError> {
    let child = Command::new("sh")
        .arg("-c")
        .arg(command)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn();
    let Ok(mut child) = child else { return Ok(None) };
    if let Some(mut stdin) = child.stdin.take() {
        // A solver that exits early closes the pipe; its output tells the rest.
        let _ = stdin.write_all(program.as_bytes());
    }
    let out = child.wait_with_output().map_err(|e| OracleError::Solver(e.to_string()))?;
    if out.status.code() == Some(127) {
        return Ok(None);
    }
    let stdout = String::from_utf8_lossy(&out.stdout);
    match parse_model_count(&stdout) {
        Some(n) => Ok(Some(n)),
        None => Err(OracleError::Solver(format!(
            "no model count in output (exit {:?}): {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr).trim()
        ))),
    }
}
