//! Parsing of newline-separated decimal integers.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InputError {
    #[error("input is not valid UTF-8 (byte offset {0})")]
    Encoding(usize),
    #[error("line {line}: {reason}: {text:?}")]
    Malformed {
        line: usize,
        text: String,
        reason: String,
    },
}

/// Parses one signed 64-bit integer per line.
///
/// Surrounding spaces, tabs and a trailing `\r` are ignored. Blank lines,
/// anything `i64::from_str` rejects, and values outside the `i64` range are
/// errors; nothing saturates. A final newline is optional and empty input
/// yields an empty vector.
pub fn parse_integers(bytes: &[u8]) -> Result<Vec<i64>, InputError> {
    let text = std::str::from_utf8(bytes).map_err(|e| InputError::Encoding(e.valid_up_to()))?;
    text.lines()
        .enumerate()
        .map(|(i, raw)| {
            let trimmed = raw.trim_matches([' ', '\t', '\r']);
            trimmed.parse::<i64>().map_err(|e| InputError::Malformed {
                line: i + 1,
                text: raw.chars().take(64).collect(),
                reason: e.to_string(),
            })
        })
        .collect()
}

/// One value per line, each terminated by `\n`.
pub fn format_integers(values: &[i64]) -> String {
    let mut out = String::with_capacity(values.len() * 8);
    for v in values {
        out.push_str(&v.to_string());
        out.push('\n');
    }
    out
}
