//! The `.fsys` text format.
//!
//! ```text
//! # the liar
//! sent a
//! a -> a
//! ```
//!
//! One item per line: blank, `# comment`, `sent <id>`, or `<id> -> <id>`.
//! Edge endpoints are declared implicitly. Both LF and CRLF line endings are
//! accepted.

use crate::error::{Error, Result};
use crate::system::{FSystem, FSystemBuilder, SentenceId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    Blank,
    /// Text after the `#`.
    Comment(String),
    Declaration(SentenceId),
    Edge(SentenceId, SentenceId),
}

/// A parsed file, line by line, so comments survive a rewrite.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FsysDocument {
    pub lines: Vec<Line>,
}

impl FsysDocument {
    pub fn parse(text: &str) -> Result<FsysDocument> {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, raw)| parse_line(raw.strip_suffix('\r').unwrap_or(raw), i + 1))
            .collect::<Result<_>>()?;
        Ok(FsysDocument { lines })
    }

    pub fn declarations(&self) -> impl Iterator<Item = &SentenceId> {
        self.lines.iter().filter_map(|l| match l {
            Line::Declaration(id) => Some(id),
            _ => None,
        })
    }

    pub fn edges(&self) -> impl Iterator<Item = (&SentenceId, &SentenceId)> {
        self.lines.iter().filter_map(|l| match l {
            Line::Edge(a, b) => Some((a, b)),
            _ => None,
        })
    }

    pub fn comments(&self) -> impl Iterator<Item = &str> {
        self.lines.iter().filter_map(|l| match l {
            Line::Comment(c) => Some(c.as_str()),
            _ => None,
        })
    }

    pub fn to_system(&self) -> Result<FSystem> {
        let mut builder = FSystemBuilder::lenient();
        for line in &self.lines {
            match line {
                Line::Declaration(id) => {
                    builder.sentence(id.as_str())?;
                }
                Line::Edge(a, b) => {
                    builder.edge(a.as_str(), b.as_str())?;
                }
                Line::Blank | Line::Comment(_) => {}
            }
        }
        builder.finish()
    }

    /// Writes the document back out, one normalised line per item.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            match line {
                Line::Blank => {}
                Line::Comment(c) => {
                    out.push('#');
                    out.push_str(c);
                }
                Line::Declaration(id) => {
                    out.push_str("sent ");
                    out.push_str(id.as_str());
                }
                Line::Edge(a, b) => {
                    out.push_str(a.as_str());
                    out.push_str(" -> ");
                    out.push_str(b.as_str());
                }
            }
            out.push('\n');
        }
        out
    }
}

fn error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

/// Column (1-based, in characters) of byte offset `at` in `raw`.
fn column(raw: &str, at: usize) -> usize {
    raw[..at].chars().count() + 1
}

/// Trims `raw[from..to]`, returning the token and its byte offset.
fn token(raw: &str, from: usize, to: usize) -> (&str, usize) {
    let slice = &raw[from..to];
    let start = slice.len() - slice.trim_start().len();
    (slice.trim(), from + start)
}

fn identifier(raw: &str, tok: &str, at: usize, line: usize, role: &str) -> Result<SentenceId> {
    if tok.is_empty() {
        return Err(error(line, column(raw, at), format!("missing {role}")));
    }
    SentenceId::new(tok).map_err(|_| error(line, column(raw, at), format!("malformed {role} {tok:?}")))
}

fn parse_line(raw: &str, line: usize) -> Result<Line> {
    let trimmed = raw.trim();
    if trimmed.is_empty() {
        return Ok(Line::Blank);
    }
    if let Some(rest) = trimmed.strip_prefix('#') {
        return Ok(Line::Comment(rest.to_string()));
    }
    if let Some(arrow) = raw.find("->") {
        let (source, source_at) = token(raw, 0, arrow);
        let (target, target_at) = token(raw, arrow + 2, raw.len());
        let target_at = if target.is_empty() { raw.len() } else { target_at };
        let from = identifier(raw, source, source_at, line, "source")?;
        let to = identifier(raw, target, target_at, line, "target")?;
        return Ok(Line::Edge(from, to));
    }
    let lead = raw.len() - raw.trim_start().len();
    let mut words = trimmed.split_whitespace();
    if words.next() == Some("sent") {
        let after = lead + "sent".len();
        let (name, at) = token(raw, after, raw.len());
        if name.split_whitespace().count() > 1 {
            let extra = at + name.find(char::is_whitespace).unwrap_or(0);
            let (_, extra_at) = token(raw, extra, raw.len());
            return Err(error(line, column(raw, extra_at), "unexpected text after declaration"));
        }
        let at = if name.is_empty() { raw.len() } else { at };
        return Ok(Line::Declaration(identifier(raw, name, at, line, "sentence")?));
    }
    Err(error(line, column(raw, lead), "expected `sent <id>` or `<id> -> <id>`"))
}

pub fn parse(text: &str) -> Result<FSystem> {
    FsysDocument::parse(text)?.to_system()
}

/// Canonical text: declarations for sentences with no edges, then every
/// edge, both in canonical order.
pub fn serialize(sys: &FSystem) -> String {
    let mut out = String::new();
    for x in 0..sys.len() {
        if sys.successor_list(x).is_empty() && sys.predecessor_list(x).is_empty() {
            out.push_str("sent ");
            out.push_str(sys.name(x));
            out.push('\n');
        }
    }
    for (x, y) in sys.edges() {
        out.push_str(sys.name(x));
        out.push_str(" -> ");
        out.push_str(sys.name(y));
        out.push('\n');
    }
    out
}
