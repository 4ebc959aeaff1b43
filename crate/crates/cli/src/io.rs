use std::fmt;
use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use dcgraph::bp::BranchingProgram;
use dcgraph::format::{parse_dimacs, parse_nbp, parse_tg, parse_tt};
use dcgraph::generators::CnfFormula;
use dcgraph::{AcceptedFamily, Error, TransitionGraph};

/// Why a command did not succeed, with its exit status.
#[derive(Debug)]
pub enum Failure {
    /// A property or check did not hold (exit 1).
    Check(String),
    /// Bad arguments, unreadable or malformed input (exit 2).
    Usage(String),
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Check(m) | Failure::Usage(m) => f.write_str(m),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

pub type Outcome<T = ()> = Result<T, Failure>;

/// Reads a path, `-` meaning standard input.
pub fn read_input(path: &Path) -> Outcome<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("<stdin>: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
    }
}

fn parsed<T>(path: &Path, parse: impl Fn(&str) -> Result<T, Error>) -> Outcome<T> {
    let text = read_input(path)?;
    parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", name(path))))
}

fn name(path: &Path) -> String {
    if path == Path::new("-") {
        "<stdin>".into()
    } else {
        path.display().to_string()
    }
}

pub fn read_tg(path: &Path) -> Outcome<TransitionGraph> {
    parsed(path, parse_tg)
}

pub fn read_tt(path: &Path) -> Outcome<AcceptedFamily> {
    parsed(path, parse_tt)
}

pub fn read_nbp(path: &Path) -> Outcome<BranchingProgram> {
    parsed(path, parse_nbp)
}

pub fn read_dimacs(path: &Path) -> Outcome<CnfFormula> {
    parsed(path, parse_dimacs)
}

pub fn write_file(path: &Path, text: &str) -> Outcome {
    if path == Path::new("-") {
        emit(text);
        return Ok(());
    }
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
pub fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
    let _ = out.flush();
}
