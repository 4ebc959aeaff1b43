use std::fmt::Write;

use super::{eof_error, tokenize, Token};
use crate::error::{Error, Result};
use crate::generators::CnfFormula;

fn dimacs_comment(line: &str) -> Option<usize> {
    let trimmed = line.trim_start();
    trimmed.starts_with('c').then_some(0)
}

fn literal(t: &Token<'_>) -> Result<i64> {
    t.text
        .parse()
        .map_err(|_| t.error(format!("expected a literal, found `{}`", t.text)))
}

/// Standard DIMACS CNF: a `p cnf <vars> <clauses>` header, then literals
/// with each clause terminated by `0`. Clauses may span lines. A clause
/// count different from the header's is an error. A line starting with
/// `%` ends the input, as in the SATLIB benchmark files.
pub fn parse_dimacs(input: &str) -> Result<CnfFormula> {
    let mut end = input.len();
    let mut offset = 0;
    for line in input.split_inclusive('\n') {
        if line.trim_start().starts_with('%') {
            end = offset;
            break;
        }
        offset += line.len();
    }
    let input = &input[..end];
    let lines = tokenize(input, dimacs_comment);
    let header = lines.first().ok_or_else(|| eof_error(input, "`p cnf` header"))?;
    if header.len() != 4 || header[0].text != "p" || header[1].text != "cnf" {
        return Err(header[0].error("expected `p cnf <variables> <clauses>`"));
    }
    let vars = header[2].number()?;
    let expected = header[3].number()?;
    let mut clauses = Vec::with_capacity(expected);
    let mut current = Vec::new();
    let mut last = header[3];
    for t in lines[1..].iter().flatten() {
        last = *t;
        let lit = literal(t)?;
        if lit == 0 {
            clauses.push(std::mem::take(&mut current));
            continue;
        }
        if lit.unsigned_abs() as usize > vars {
            return Err(t.error(format!("literal {lit} out of range for {vars} variables")));
        }
        current.push(lit);
    }
    if !current.is_empty() {
        return Err(last.error("last clause is not terminated by 0"));
    }
    if clauses.len() != expected {
        return Err(header[3].error(format!("header declares {expected} clauses, found {}", clauses.len())));
    }
    CnfFormula::new(vars, clauses).map_err(|e| match e {
        Error::Parameter(m) => header[0].error(m),
        other => other,
    })
}

pub fn print_dimacs(c: &CnfFormula) -> String {
    let mut out = String::new();
    writeln!(out, "p cnf {} {}", c.variable_count(), c.clauses().len()).unwrap();
    for clause in c.clauses() {
        for lit in clause {
            write!(out, "{lit} ").unwrap();
        }
        out.push_str("0\n");
    }
    out
}
