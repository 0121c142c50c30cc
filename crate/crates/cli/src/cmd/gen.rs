use latinburn::groups::cayley_square;
use latinburn::latin::{cyclic, intercalate_power, product, random_square, serialize};

use crate::cli::{Cli, GenArgs, GenKind};
use crate::error::CliError;
use crate::spec::parse_group;

use super::read_square;

pub fn run(cli: &Cli, args: &GenArgs) -> Result<(), CliError> {
    let sq = match &args.kind {
        GenKind::Cyclic { n } => cyclic(*n).map_err(CliError::usage)?,
        GenKind::Ipow { k } => intercalate_power(*k).map_err(CliError::usage)?,
        GenKind::Product { left, right } => {
            let a = read_square(left)?;
            let b = read_square(right)?;
            product(&a, &b)
        }
        GenKind::Cayley { group } => cayley_square(&parse_group(group)?),
        GenKind::Random { n } => {
            let seed = match cli.seed.as_deref() {
                None => 0,
                Some(s) => s
                    .parse::<u64>()
                    .map_err(|_| CliError::usage(format!("--seed {:?} is not a u64", s)))?,
            };
            random_square(*n, seed).map_err(CliError::usage)?
        }
    };
    let text = serialize(&sq);
    match &args.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::io(format!("{}: {}", path.display(), e)))?,
        None => print!("{}", text),
    }
    Ok(())
}
