pub mod analyze;
pub mod burn;
pub mod gen;
pub mod verify;

use std::path::Path;

use latinburn::latin::{parse, LatinSquare};

use crate::error::CliError;

pub fn read_square(path: &Path) -> Result<LatinSquare, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("{}: {}", path.display(), e)))?;
    parse(&text).map_err(|e| CliError::io(format!("{}: {}", path.display(), e)))
}

/// Shift an index for display when `--human` is set.
pub fn disp(index: usize, human: bool) -> usize {
    if human {
        index + 1
    } else {
        index
    }
}
