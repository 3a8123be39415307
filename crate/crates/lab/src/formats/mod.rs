//! Text and binary file formats.

mod af;
mod alpha;
mod container;
mod dimacs;
mod family;

pub use af::{parse_af, write_af};
pub use alpha::{parse_alpha, write_alpha};
pub use container::{read_container, write_container};
pub use dimacs::{parse_dimacs, write_dimacs};
pub use family::{format_members, parse_family, write_family};

use std::path::Path;

use crate::error::{LabError, LabResult};

pub fn read_text(path: &Path) -> LabResult<String> {
    std::fs::read_to_string(path).map_err(|source| LabError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn read_bytes(path: &Path) -> LabResult<Vec<u8>> {
    std::fs::read(path).map_err(|source| LabError::Io {
        path: path.to_owned(),
        source,
    })
}

pub fn write_file(path: &Path, contents: impl AsRef<[u8]>) -> LabResult<()> {
    std::fs::write(path, contents).map_err(|source| LabError::Io {
        path: path.to_owned(),
        source,
    })
}
