use std::fmt::Write;

use super::{hash_comment, tokenize, Cursor};
use crate::error::Result;
use crate::label::{Assignment, LabelSet};
use crate::semantics::AcceptedFamily;

/// One bitstring per accepted assignment, index 0 leftmost, in increasing
/// order. With zero variables the empty assignment is written `-`.
pub fn print_tt(f: &AcceptedFamily) -> String {
    let mut out = String::new();
    out.push_str("tt 1\n");
    writeln!(out, "vars {}", f.universe_size()).unwrap();
    for set in f.iter() {
        if f.universe_size() == 0 {
            out.push_str("-\n");
        } else {
            writeln!(out, "{}", set.to_bitstring(f.universe_size())).unwrap();
        }
    }
    out
}

pub fn parse_tt(input: &str) -> Result<AcceptedFamily> {
    let lines = tokenize(input, hash_comment);
    let mut c = Cursor::new(input, &lines);
    c.header("tt")?;
    let (n, _) = c.field("vars")?;
    let mut f = AcceptedFamily::empty(n);
    for line in c.rest() {
        let t = line[0];
        if line.len() != 1 {
            return Err(line[1].error("expected one bitstring per line"));
        }
        let set = if n == 0 && t.text == "-" {
            LabelSet::new()
        } else {
            if t.text.len() != n {
                return Err(t.error(format!("expected {n} bits, found {}", t.text.len())));
            }
            if let Some(pos) = t.text.bytes().position(|b| b != b'0' && b != b'1') {
                return Err(super::Token {
                    column: t.column + pos,
                    ..t
                }
                .error("bits must be 0 or 1"));
            }
            Assignment::parse_bits(t.text).expect("checked").unit_set()
        };
        if !f.insert(set)? {
            return Err(t.error(format!("duplicate assignment `{}`", t.text)));
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn parity_round_trip() {
        let f = AcceptedFamily::from_predicate(3, |s| s.len() % 2 == 1);
        let text = print_tt(&f);
        assert_eq!(text, "tt 1\nvars 3\n001\n010\n100\n111\n");
        assert_eq!(parse_tt(&text).unwrap(), f);
    }

    #[test]
    fn zero_variables() {
        let f = AcceptedFamily::from_sets(0, [LabelSet::new()]).unwrap();
        let text = print_tt(&f);
        assert_eq!(text, "tt 1\nvars 0\n-\n");
        assert_eq!(parse_tt(&text).unwrap(), f);
        assert_eq!(parse_tt("tt 1\nvars 0\n").unwrap(), AcceptedFamily::empty(0));
    }

    #[test]
    fn bad_input() {
        assert!(matches!(parse_tt("tt 1\nvars 2\n01\n01\n"), Err(Error::Format { line: 4, column: 1, .. })));
        assert!(matches!(parse_tt("tt 1\nvars 2\n0x\n"), Err(Error::Format { line: 3, column: 2, .. })));
        assert!(matches!(parse_tt("tt 1\nvars 2\n011\n"), Err(Error::Format { line: 3, .. })));
    }
}
