//! Line-oriented text formats.
//!
//! `.hg` (hypergraph):
//!
//! ```text
//! # comment
//! vertices 4
//! edge a 1 2
//! edge t 1 3 4
//! ```
//!
//! `.cw` (CW-hypergraph):
//!
//! ```text
//! cells 0 2
//! cells 1 1
//! inc 0 1 1 -1
//! inc 0 2 1 +1
//! skel 1 1 1 2
//! ```
//!
//! All indices are 1-based. `cells` lines list dimensions 0, 1, 2, ... in
//! order; `inc <d> <i> <j> <sign>` says d-cell i lies in (d+1)-cell j with the
//! given sign; `skel <d> <j> <v...>` gives the 0-skeleton of d-cell j.

mod fixtures;

pub use fixtures::{
    builtin_fixture, fig1, fig2, fig2_example_lower_walk, fig2_example_upper_walk, search_fig2_signs,
    SignSearch, FIG1_HG, FIG2_CW,
};

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::{ParseError, ParseErrorKind, Result, SourceLocation};
use crate::model::{CwHypergraph, Hypergraph, Incidence, Instance, Sign};

struct Token<'a> {
    text: &'a str,
    column: usize,
}

struct Line<'a> {
    number: usize,
    excerpt: &'a str,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn at(&self, column: usize) -> SourceLocation {
        SourceLocation {
            line: self.number,
            column,
            excerpt: self.excerpt.to_string(),
        }
    }

    fn syntax(&self, token: usize, message: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Syntax, token, message)
    }

    fn semantic(&self, token: usize, message: impl Into<String>) -> ParseError {
        self.error(ParseErrorKind::Semantic, token, message)
    }

    fn error(&self, kind: ParseErrorKind, token: usize, message: impl Into<String>) -> ParseError {
        let column = self
            .tokens
            .get(token)
            .map_or_else(|| self.excerpt.chars().count() + 1, |t| t.column);
        ParseError {
            kind,
            location: self.at(column),
            message: message.into(),
        }
    }

    fn expect_args(&self, min: usize, max: Option<usize>, usage: &str) -> Result<(), ParseError> {
        let args = self.tokens.len() - 1;
        if args < min || max.is_some_and(|m| args > m) {
            let at = if args < min { self.tokens.len() } else { max.unwrap() + 1 };
            return Err(self.syntax(at, format!("expected `{usage}`")));
        }
        Ok(())
    }

    /// Positive or zero decimal integer at token position `idx`.
    fn integer(&self, idx: usize) -> Result<usize, ParseError> {
        let text = self.tokens[idx].text;
        if text.is_empty() || !text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(self.syntax(idx, format!("expected a non-negative integer, found `{text}`")));
        }
        text.parse()
            .map_err(|_| self.syntax(idx, format!("integer `{text}` is too large")))
    }

    /// 1-based index at `idx`, checked against `1..=bound`, returned 0-based.
    fn index(&self, idx: usize, what: &str, bound: usize) -> Result<usize, ParseError> {
        let value = self.integer(idx)?;
        if value == 0 || value > bound {
            return Err(self.semantic(idx, format!("{what} index out of range: {value} not in 1..={bound}")));
        }
        Ok(value - 1)
    }
}

fn lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    let text = text.strip_prefix('\u{feff}').unwrap_or(text);
    text.split('\n').enumerate().filter_map(|(i, raw)| {
        let raw = raw.strip_suffix('\r').unwrap_or(raw);
        let content = raw.split('#').next().unwrap_or("");
        let mut tokens = Vec::new();
        let mut start = None;
        for (pos, ch) in content.char_indices().chain(std::iter::once((content.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    tokens.push(Token {
                        text: &content[s..pos],
                        column: content[..s].chars().count() + 1,
                    });
                    start = None;
                }
                _ => {}
            }
        }
        (!tokens.is_empty()).then(|| Line {
            number: i + 1,
            excerpt: raw.trim(),
            tokens,
        })
    })
}

fn end_of_input(text: &str, message: &str) -> ParseError {
    ParseError {
        kind: ParseErrorKind::Syntax,
        location: SourceLocation {
            line: text.split('\n').count().max(1),
            column: 1,
            excerpt: String::new(),
        },
        message: message.to_string(),
    }
}

/// Parses the `.hg` format. Vertex lists may be given in any order and are
/// stored sorted; repeated vertices are rejected.
pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut vertex_count: Option<usize> = None;
    let mut edges = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut names = HashSet::new();
    for line in lines(text) {
        match line.tokens[0].text {
            "vertices" => {
                if vertex_count.is_some() {
                    return Err(line.syntax(0, "duplicate `vertices` declaration").into());
                }
                line.expect_args(1, Some(1), "vertices <n>")?;
                let n = line.integer(1)?;
                if n == 0 {
                    return Err(line.semantic(1, "vertex count must be positive").into());
                }
                vertex_count = Some(n);
            }
            "edge" => {
                let Some(n) = vertex_count else {
                    return Err(line.syntax(0, "`edge` before `vertices` declaration").into());
                };
                line.expect_args(1, None, "edge <name> <v1> <v2> ...")?;
                let name = line.tokens[1].text;
                if name.starts_with(|c: char| c.is_ascii_digit() || c == '+' || c == '-') {
                    return Err(line
                        .syntax(1, format!("edge name `{name}` must not start with a digit or sign"))
                        .into());
                }
                if line.tokens.len() == 2 {
                    return Err(line.semantic(2, format!("edge `{name}` is empty")).into());
                }
                let mut edge = Vec::with_capacity(line.tokens.len() - 2);
                for idx in 2..line.tokens.len() {
                    edge.push(line.index(idx, "vertex", n)?);
                }
                let mut seen = HashSet::new();
                for (offset, v) in edge.iter().enumerate() {
                    if !seen.insert(*v) {
                        return Err(line
                            .semantic(offset + 2, format!("vertex {} repeated in edge `{name}`", v + 1))
                            .into());
                    }
                }
                if !names.insert(name) {
                    return Err(line.semantic(1, format!("duplicate edge name `{name}`")).into());
                }
                edge.sort_unstable();
                edges.push(edge);
                labels.push(name.to_string());
            }
            other => {
                return Err(line
                    .syntax(0, format!("unknown directive `{other}` (expected `vertices` or `edge`)"))
                    .into())
            }
        }
    }
    let n = vertex_count.ok_or_else(|| end_of_input(text, "missing `vertices` declaration"))?;
    Hypergraph::with_labels(n, edges, labels)
}

struct PendingIncidence<'a> {
    line: Line<'a>,
    level: usize,
}

/// Parses the `.cw` format. Without `skel` lines the result has no skeletons.
pub fn parse_cw(text: &str) -> Result<CwHypergraph> {
    let mut counts: Vec<usize> = Vec::new();
    let mut pending_inc = Vec::new();
    let mut pending_skel = Vec::new();
    for line in lines(text) {
        match line.tokens[0].text {
            "cells" => {
                line.expect_args(2, Some(2), "cells <d> <count>")?;
                let d = line.integer(1)?;
                if d != counts.len() {
                    return Err(line
                        .syntax(1, format!("expected `cells {}`: dimensions must be listed 0, 1, 2, ... in order", counts.len()))
                        .into());
                }
                let count = line.integer(2)?;
                if d == 0 && count == 0 {
                    return Err(line.semantic(2, "at least one 0-cell is required").into());
                }
                counts.push(count);
            }
            "inc" => {
                line.expect_args(4, Some(4), "inc <d> <i> <j> <+1|-1>")?;
                let level = line.integer(1)?;
                let sign_token = line.tokens[4].text;
                if sign_token != "+1" && sign_token != "-1" {
                    return Err(line
                        .syntax(4, format!("sign must be `+1` or `-1`, found `{sign_token}`"))
                        .into());
                }
                line.integer(2)?;
                line.integer(3)?;
                pending_inc.push(PendingIncidence { line, level });
            }
            "skel" => {
                line.expect_args(2, None, "skel <d> <j> <v1> <v2> ...")?;
                line.integer(1)?;
                line.integer(2)?;
                pending_skel.push(line);
            }
            other => {
                return Err(line
                    .syntax(0, format!("unknown directive `{other}` (expected `cells`, `inc` or `skel`)"))
                    .into())
            }
        }
    }
    if counts.is_empty() {
        return Err(end_of_input(text, "missing `cells` declarations").into());
    }
    let top = counts.len() - 1;
    let mut incidences = vec![Vec::new(); top];
    let mut pairs = HashSet::new();
    for PendingIncidence { line, level } in pending_inc {
        if level >= top {
            return Err(line
                .semantic(1, format!("incidence level {level} out of range: top dimension is {top}"))
                .into());
        }
        let lower = line.index(2, &format!("{level}-cell"), counts[level])?;
        let upper = line.index(3, &format!("{}-cell", level + 1), counts[level + 1])?;
        if !pairs.insert((level, lower, upper)) {
            return Err(line
                .semantic(2, format!("duplicate incidence pair ({}, {}) at level {level}", lower + 1, upper + 1))
                .into());
        }
        let sign = if line.tokens[4].text == "+1" { Sign::Plus } else { Sign::Minus };
        incidences[level].push(Incidence::new(lower, upper, sign));
    }
    let mut skeletons = BTreeMap::new();
    for line in pending_skel {
        let d = line.integer(1)?;
        if d == 0 || d > top {
            return Err(line
                .semantic(1, format!("skeleton dimension {d} out of range 1..={top}"))
                .into());
        }
        let j = line.index(2, &format!("{d}-cell"), counts[d])?;
        if line.tokens.len() == 3 {
            return Err(line.semantic(3, "skeleton is empty").into());
        }
        let mut verts = Vec::new();
        let mut seen = HashSet::new();
        for idx in 3..line.tokens.len() {
            let v = line.index(idx, "vertex", counts[0])?;
            if !seen.insert(v) {
                return Err(line.semantic(idx, format!("vertex {} repeated in skeleton", v + 1)).into());
            }
            verts.push(v);
        }
        verts.sort_unstable();
        if skeletons.insert((d, j), verts).is_some() {
            return Err(line
                .semantic(2, format!("duplicate skeleton for {d}-cell {}", j + 1))
                .into());
        }
    }
    CwHypergraph::with_skeletons(counts, incidences, skeletons)
}

/// Parses either format, chosen by the first directive (`vertices`/`edge`
/// or `cells`/`inc`/`skel`).
pub fn parse_any(text: &str) -> Result<Instance> {
    let first = lines(text).next().map(|l| l.tokens[0].text.to_string());
    match first.as_deref() {
        Some("cells" | "inc" | "skel") => parse_cw(text).map(Instance::Cw),
        _ => parse_hg(text).map(Instance::Hypergraph),
    }
}

pub fn serialize_hg(h: &Hypergraph) -> String {
    let mut out = format!("vertices {}\n", h.vertex_count());
    for (edge, label) in h.edges().iter().zip(h.edge_labels()) {
        out.push_str("edge ");
        out.push_str(label);
        for v in edge {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

pub fn serialize_cw(x: &CwHypergraph) -> String {
    let mut out = String::new();
    for (d, c) in x.counts().iter().enumerate() {
        let _ = writeln!(out, "cells {d} {c}");
    }
    for d in 0..x.levels() {
        for inc in x.incidences(d) {
            let _ = writeln!(out, "inc {d} {} {} {}", inc.lower + 1, inc.upper + 1, inc.sign);
        }
    }
    for (&(d, j), verts) in x.skeletons() {
        let _ = write!(out, "skel {d} {}", j + 1);
        for v in verts {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    out
}

pub fn serialize(object: &Instance) -> String {
    match object {
        Instance::Hypergraph(h) => serialize_hg(h),
        Instance::Cw(x) => serialize_cw(x),
    }
}
