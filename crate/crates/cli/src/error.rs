use std::fmt;

/// Machine-readable error classes; each maps to a stable string.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Code {
    Syntax,
    UnknownGenerator,
    DegreeMismatch,
    Duplicate,
    MissingField,
    InvalidValue,
    InvalidSpace,
    UnknownCommand,
    UnknownObject,
    Usage,
    Unsupported,
    Io,
}

impl Code {
    pub fn as_str(self) -> &'static str {
        match self {
            Code::Syntax => "syntax",
            Code::UnknownGenerator => "unknown-generator",
            Code::DegreeMismatch => "degree-mismatch",
            Code::Duplicate => "duplicate",
            Code::MissingField => "missing-field",
            Code::InvalidValue => "invalid-value",
            Code::InvalidSpace => "invalid-space",
            Code::UnknownCommand => "unknown-command",
            Code::UnknownObject => "unknown-object",
            Code::Usage => "usage",
            Code::Unsupported => "unsupported",
            Code::Io => "io",
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: [{code}] {message}")]
pub struct ParseError {
    pub code: Code,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(code: Code, line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError { code, line, column, message: message.into() }
    }
}

/// Anything that makes a command fail before it can produce a verdict.
#[derive(Clone, Debug, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{source_name}: {error}")]
    Parse { source_name: String, error: ParseError },
    #[error("[{code}] {message}")]
    Input { code: Code, message: String },
    #[error("[invalid-space] {context}: {error}")]
    Core { context: String, error: logchern_core::Error },
}

impl CliError {
    pub fn input(code: Code, message: impl Into<String>) -> Self {
        CliError::Input { code, message: message.into() }
    }

    pub fn core(context: impl Into<String>, error: logchern_core::Error) -> Self {
        CliError::Core { context: context.into(), error }
    }

    pub fn code(&self) -> Code {
        match self {
            CliError::Parse { error, .. } => error.code,
            CliError::Input { code, .. } => *code,
            CliError::Core { error, .. } => match error {
                logchern_core::Error::Unknown { .. } => Code::UnknownObject,
                _ => Code::InvalidSpace,
            },
        }
    }

    pub fn position(&self) -> Option<(usize, usize)> {
        match self {
            CliError::Parse { error, .. } => Some((error.line, error.column)),
            _ => None,
        }
    }
}
