use std::path::PathBuf;

/// Errors from loading inputs, writing outputs or running a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    /// Malformed JSON, or JSON of the wrong shape, located by byte offset.
    #[error("{source_name}: byte {offset} (line {line}, column {column}): {message}")]
    Syntax { source_name: String, offset: usize, line: usize, column: usize, message: String },
    /// Well-formed JSON that violates an invariant; `field` is a path like `ops[2].table`.
    #[error("{source_name}: {field}: {message}")]
    Invalid { source_name: String, field: String, message: String },
    #[error(transparent)]
    Core(#[from] cloneforge_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("invalid CLONEFORGE_TABLE_LIMIT {0:?}: expected a positive integer")]
    TableLimitEnv(String),
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;

impl CliError {
    pub(crate) fn invalid(source_name: &str, field: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Invalid { source_name: source_name.to_string(), field: field.into(), message: message.into() }
    }

    /// Converts a `serde_json` error, turning its line and column into a byte offset into `input`.
    pub(crate) fn json(source_name: &str, input: &str, err: serde_json::Error) -> Self {
        let (line, column) = (err.line(), err.column());
        let offset = byte_offset(input, line, column);
        // serde_json appends " at line L column C"; the offset replaces it
        let text = err.to_string();
        let message = match text.rfind(" at line ") {
            Some(i) => text[..i].to_string(),
            None => text,
        };
        CliError::Syntax { source_name: source_name.to_string(), offset, line, column, message }
    }
}

fn byte_offset(input: &str, line: usize, column: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = input.split_inclusive('\n').take(line - 1).map(str::len).sum();
    // columns are 1-based byte counts within the line; 0 means before the first byte
    (start + column.saturating_sub(1)).min(input.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn offsets_count_bytes() {
        let input = "{\n  \"a\": x\n}";
        let err = serde_json::from_str::<serde_json::Value>(input).unwrap_err();
        match CliError::json("t", input, err) {
            CliError::Syntax { offset, line, .. } => {
                assert_eq!(line, 2);
                assert_eq!(&input[offset..offset + 1], "x");
            }
            other => panic!("{other:?}"),
        }
    }
}
