use std::fmt::Write;

use super::{hash_comment, tokenize, Cursor, Token};
use crate::bp::{BranchingProgram, Literal};
use crate::error::Result;

/// ```text
/// nbp 1
/// vars 2
/// vertices 2
/// initial 0
/// terminal 1
/// edge 0 1 +0
/// edge 0 1 -1
/// ```
pub fn print_nbp(b: &BranchingProgram) -> String {
    let mut out = String::new();
    out.push_str("nbp 1\n");
    writeln!(out, "vars {}", b.variable_count).unwrap();
    writeln!(out, "vertices {}", b.vertex_count).unwrap();
    writeln!(out, "initial {}", b.initial).unwrap();
    writeln!(out, "terminal {}", b.terminal).unwrap();
    for e in &b.edges {
        writeln!(out, "edge {} {} {}", e.source, e.target, e.literal).unwrap();
    }
    out
}

/// Checks ranges only; acyclicity is left to [`BranchingProgram::validate`].
pub fn parse_nbp(input: &str) -> Result<BranchingProgram> {
    let lines = tokenize(input, hash_comment);
    let mut c = Cursor::new(input, &lines);
    c.header("nbp")?;
    let (vars, _) = c.field("vars")?;
    let (vertices, _) = c.field("vertices")?;
    let (initial, it) = c.field("initial")?;
    if initial >= vertices {
        return Err(it.error(format!("initial vertex {initial} out of range")));
    }
    let (terminal, tt) = c.field("terminal")?;
    if terminal >= vertices {
        return Err(tt.error(format!("terminal vertex {terminal} out of range")));
    }
    let mut b = BranchingProgram::new(vars, vertices, initial, terminal);
    for line in c.rest() {
        if line[0].text != "edge" {
            return Err(line[0].error(format!("expected `edge`, found `{}`", line[0].text)));
        }
        if line.len() != 4 {
            return Err(line[0].error("`edge` takes a source, a target and a literal"));
        }
        let vertex = |t: &Token<'_>| -> Result<usize> {
            let v = t.number()?;
            if v >= vertices {
                return Err(t.error(format!("vertex {v} out of range")));
            }
            Ok(v)
        };
        let source = vertex(&line[1])?;
        let target = vertex(&line[2])?;
        let lit = &line[3];
        let positive = match lit.text.as_bytes().first() {
            Some(b'+') => true,
            Some(b'-') => false,
            _ => return Err(lit.error("literal must start with `+` or `-`")),
        };
        let var = Token {
            text: &lit.text[1..],
            column: lit.column + 1,
            ..*lit
        };
        let i = var.number()?;
        if i >= vars {
            return Err(var.error(format!("variable {i} out of range for {vars} variables")));
        }
        b.add_edge(source, target, Literal { var: i, positive });
    }
    Ok(b)
}
