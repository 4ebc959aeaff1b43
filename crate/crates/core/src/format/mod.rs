//! Line-oriented text formats: `tg 1` graphs, `nbp 1` branching programs,
//! `tt 1` truth tables and DIMACS CNF.
//!
//! Every printer emits LF line endings and no comments. Parsers skip blank
//! lines and everything after `#` (`c` lines in DIMACS) and report errors
//! with one-based line and column.

mod dimacs;
mod nbp;
mod tg;
mod tt;

pub use dimacs::{parse_dimacs, print_dimacs};
pub use nbp::{parse_nbp, print_nbp};
pub use tg::{parse_tg, print_tg};
pub use tt::{parse_tt, print_tt};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Token<'a> {
    pub text: &'a str,
    pub line: usize,
    pub column: usize,
}

impl<'a> Token<'a> {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::Format {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    pub fn number(&self) -> Result<usize> {
        if !self.text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.error(format!("expected a non-negative integer, found `{}`", self.text)));
        }
        self.text
            .parse()
            .map_err(|_| self.error(format!("integer `{}` out of range", self.text)))
    }
}

/// Non-empty lines as whitespace-separated tokens.
pub(crate) fn tokenize(input: &str, comment: impl Fn(&str) -> Option<usize>) -> Vec<Vec<Token<'_>>> {
    let mut lines = Vec::new();
    for (i, raw) in input.split('\n').enumerate() {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let body = match comment(raw) {
            Some(cut) => &raw[..cut],
            None => raw,
        };
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in body.char_indices().chain(std::iter::once((body.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &body[s..pos],
                        line: i + 1,
                        column: s + 1,
                    });
                    start = None;
                }
                (false, None) => start = Some(pos),
                _ => {}
            }
        }
        if !tokens.is_empty() {
            lines.push(tokens);
        }
    }
    lines
}

pub(crate) fn hash_comment(line: &str) -> Option<usize> {
    line.find('#')
}

/// End-of-input error, placed after the last line.
pub(crate) fn eof_error(input: &str, what: &str) -> Error {
    Error::Format {
        line: input.split('\n').count().max(1),
        column: 1,
        message: format!("unexpected end of input, expected {what}"),
    }
}

/// Reads the header lines `<keyword> <value>` in order.
pub(crate) struct Cursor<'a, 'i> {
    pub input: &'i str,
    pub lines: &'a [Vec<Token<'i>>],
    pub at: usize,
}

impl<'a, 'i> Cursor<'a, 'i> {
    pub fn new(input: &'i str, lines: &'a [Vec<Token<'i>>]) -> Self {
        Cursor { input, lines, at: 0 }
    }

    pub fn next_line(&mut self, what: &str) -> Result<&'a [Token<'i>]> {
        let line = self.lines.get(self.at).ok_or_else(|| eof_error(self.input, what))?;
        self.at += 1;
        Ok(line)
    }

    pub fn header(&mut self, magic: &str) -> Result<()> {
        let line = self.next_line(&format!("`{magic} 1`"))?;
        if line[0].text != magic {
            return Err(line[0].error(format!("expected `{magic} 1` header")));
        }
        match line.get(1) {
            Some(v) if v.text == "1" && line.len() == 2 => Ok(()),
            Some(v) if line.len() == 2 => Err(v.error(format!("unsupported version `{}`", v.text))),
            _ => Err(line[0].error(format!("expected `{magic} 1` header"))),
        }
    }

    /// A `<keyword> <number>` line.
    pub fn field(&mut self, keyword: &str) -> Result<(usize, Token<'i>)> {
        let line = self.next_line(&format!("`{keyword}`"))?;
        if line[0].text != keyword {
            return Err(line[0].error(format!("expected `{keyword}`, found `{}`", line[0].text)));
        }
        if line.len() != 2 {
            return Err(line[0].error(format!("`{keyword}` takes exactly one value")));
        }
        Ok((line[1].number()?, line[1]))
    }

    pub fn rest(&self) -> &'a [Vec<Token<'i>>] {
        &self.lines[self.at..]
    }
}
