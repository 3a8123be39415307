use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LabError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    /// A text format rejected at a specific line (1-based).
    #[error("{format}, line {line}: {msg}")]
    Syntax {
        format: &'static str,
        line: usize,
        msg: String,
    },
    #[error("{format}: {msg}")]
    Format { format: &'static str, msg: String },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] arglab_core::Error),
}

impl LabError {
    pub(crate) fn syntax(format: &'static str, line: usize, msg: impl Into<String>) -> Self {
        LabError::Syntax {
            format,
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn format(format: &'static str, msg: impl Into<String>) -> Self {
        LabError::Format {
            format,
            msg: msg.into(),
        }
    }

    /// 3 for resource caps, 2 for everything else that stops a run.
    pub fn exit_code(&self) -> i32 {
        match self {
            LabError::Core(e) if e.is_resource_limit() => 3,
            _ => 2,
        }
    }
}

pub type LabResult<T> = Result<T, LabError>;
