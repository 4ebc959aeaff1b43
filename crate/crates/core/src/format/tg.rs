use std::fmt::Write;

use super::{hash_comment, tokenize, Cursor, Token};
use crate::error::Result;
use crate::graph::TransitionGraph;
use crate::label::LabelSet;

/// ```text
/// tg 1
/// universe 3
/// vertices 2
/// initial 0
/// terminal 1
/// edge 0 1 0,2
/// edge 0 1 -
/// ```
pub fn print_tg(g: &TransitionGraph) -> String {
    let mut out = String::new();
    out.push_str("tg 1\n");
    writeln!(out, "universe {}", g.universe_size).unwrap();
    writeln!(out, "vertices {}", g.vertex_count).unwrap();
    writeln!(out, "initial {}", g.initial).unwrap();
    writeln!(out, "terminal {}", g.terminal).unwrap();
    for e in &g.edges {
        writeln!(out, "edge {} {} {}", e.source, e.target, e.label).unwrap();
    }
    out
}

pub fn parse_tg(input: &str) -> Result<TransitionGraph> {
    let lines = tokenize(input, hash_comment);
    let mut c = Cursor::new(input, &lines);
    c.header("tg")?;
    let (universe, _) = c.field("universe")?;
    let (vertices, _) = c.field("vertices")?;
    let (initial, it) = c.field("initial")?;
    if initial >= vertices {
        return Err(it.error(format!("initial vertex {initial} out of range")));
    }
    let (terminal, tt) = c.field("terminal")?;
    if terminal >= vertices {
        return Err(tt.error(format!("terminal vertex {terminal} out of range")));
    }
    let mut g = TransitionGraph::new(universe, vertices, initial, terminal);
    for line in c.rest() {
        if line[0].text != "edge" {
            return Err(line[0].error(format!("expected `edge`, found `{}`", line[0].text)));
        }
        if line.len() != 4 {
            return Err(line[0].error("`edge` takes a source, a target and a label"));
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
        let label = parse_label(&line[3], universe)?;
        g.add_edge(source, target, label);
    }
    Ok(g)
}

fn parse_label(t: &Token<'_>, universe: usize) -> Result<LabelSet> {
    let mut label = LabelSet::new();
    if t.text == "-" {
        return Ok(label);
    }
    let mut last = None;
    let mut offset = 0;
    for part in t.text.split(',') {
        let at = Token {
            text: part,
            line: t.line,
            column: t.column + offset,
        };
        offset += part.len() + 1;
        if part.is_empty() {
            return Err(at.error("empty label element"));
        }
        let i = at.number()?;
        if i >= universe {
            return Err(at.error(format!("variable {i} out of range for universe {universe}")));
        }
        if last.is_some_and(|l| i <= l) {
            return Err(at.error("label indices must be strictly increasing"));
        }
        last = Some(i);
        label.insert(i);
    }
    Ok(label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    const SAMPLE: &str = "tg 1\n# parity on two variables\nuniverse 2\nvertices 2\ninitial 0\nterminal 1\nedge 0 1 0\nedge 0 1 1  # second\n";

    #[test]
    fn parse_and_print() {
        let g = parse_tg(SAMPLE).unwrap();
        assert_eq!(g.size(), 2);
        assert_eq!(g.edges[1].label, LabelSet::from([1]));
        let printed = print_tg(&g);
        assert_eq!(printed, "tg 1\nuniverse 2\nvertices 2\ninitial 0\nterminal 1\nedge 0 1 0\nedge 0 1 1\n");
        assert_eq!(parse_tg(&printed).unwrap(), g);
    }

    fn position(input: &str) -> (usize, usize) {
        match parse_tg(input) {
            Err(Error::Format { line, column, .. }) => (line, column),
            other => panic!("expected a format error, got {other:?}"),
        }
    }

    #[test]
    fn errors_name_line_and_column() {
        let head = "tg 1\nuniverse 3\nvertices 2\ninitial 0\nterminal 1\n";
        assert_eq!(position(&format!("{head}edge 0 1 2,1\n")), (6, 12));
        assert_eq!(position(&format!("{head}edge 0 5 1\n")), (6, 8));
        assert_eq!(position(&format!("{head}edge 0 1 3\n")), (6, 10));
        assert_eq!(position(&format!("{head}edge 0 1 0,,1\n")), (6, 12));
        assert_eq!(position(&format!("{head}edge 0 1\n")), (6, 1));
        assert_eq!(position("tg 2\n"), (1, 4));
        assert_eq!(position("tg 1\nuniverse 1\n"), (3, 1));
        assert_eq!(position("tg 1\nuniverse x\n"), (2, 10));
    }

    #[test]
    fn empty_label_and_zero_universe() {
        let g = parse_tg("tg 1\nuniverse 0\nvertices 1\ninitial 0\nterminal 0\nedge 0 0 -\n").unwrap();
        assert!(g.edges[0].label.is_empty());
        assert_eq!(print_tg(&g), "tg 1\nuniverse 0\nvertices 1\ninitial 0\nterminal 0\nedge 0 0 -\n");
    }
}
