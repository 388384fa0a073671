//! Plain-text serialization for interval shortest-path instances.
//!
//! The format is line oriented. The first significant line is a header:
//!
//! ```text
//! rrsp <vertices> <arcs> <origin> <target> <beta>
//! ```
//!
//! followed by one line per arc:
//!
//! ```text
//! <tail> <head> <lower> <upper> <resource>
//! ```
//!
//! Blank lines are skipped and `#` starts a comment that runs to the end
//! of the line. The writer emits the canonical comment-free form.

use std::fmt::Write as _;

use crate::rrsp::{Arc, IntervalDigraph, RrspError};

fn parse_err(line: usize, msg: impl Into<String>) -> RrspError {
    RrspError::Parse {
        line,
        msg: msg.into(),
    }
}

fn field<T: std::str::FromStr>(
    tokens: &mut std::str::SplitWhitespace,
    line: usize,
    what: &str,
) -> Result<T, RrspError> {
    let tok = tokens
        .next()
        .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
}

fn end_of_line(
    tokens: &mut std::str::SplitWhitespace,
    line: usize,
) -> Result<(), RrspError> {
    match tokens.next() {
        Some(extra) => Err(parse_err(line, format!("unexpected token {extra:?}"))),
        None => Ok(()),
    }
}

/// Parse an instance from its text form.
pub fn parse_rrsp(text: &str) -> Result<IntervalDigraph, RrspError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("")))
        .filter(|(_, body)| !body.trim().is_empty());

    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty instance"))?;
    let mut tokens = header.split_whitespace();
    match tokens.next() {
        Some("rrsp") => {}
        Some(other) => {
            return Err(parse_err(
                header_line,
                format!("expected header tag \"rrsp\", found {other:?}"),
            ))
        }
        None => unreachable!("blank lines were filtered"),
    }
    let vertices: usize = field(&mut tokens, header_line, "vertex count")?;
    let arc_count: usize = field(&mut tokens, header_line, "arc count")?;
    let origin: usize = field(&mut tokens, header_line, "origin")?;
    let target: usize = field(&mut tokens, header_line, "target")?;
    let beta: i64 = field(&mut tokens, header_line, "resource budget")?;
    end_of_line(&mut tokens, header_line)?;

    let mut arcs = Vec::with_capacity(arc_count);
    for (line, body) in lines {
        if arcs.len() == arc_count {
            return Err(parse_err(line, "more arc lines than the header declares"));
        }
        let mut tokens = body.split_whitespace();
        let tail: usize = field(&mut tokens, line, "tail")?;
        let head: usize = field(&mut tokens, line, "head")?;
        let lower: i64 = field(&mut tokens, line, "lower cost")?;
        let upper: i64 = field(&mut tokens, line, "upper cost")?;
        let resource: i64 = field(&mut tokens, line, "resource")?;
        end_of_line(&mut tokens, line)?;
        arcs.push(Arc {
            tail,
            head,
            lower,
            upper,
            resource,
        });
    }
    if arcs.len() != arc_count {
        return Err(parse_err(
            0,
            format!("header declares {arc_count} arcs, found {}", arcs.len()),
        ));
    }
    IntervalDigraph::new(vertices, arcs, origin, target, beta)
}

/// Serialize an instance to the canonical text form.
pub fn write_rrsp(g: &IntervalDigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "rrsp {} {} {} {} {}",
        g.vertex_count(),
        g.arc_count(),
        g.origin(),
        g.target(),
        g.beta()
    );
    for a in g.arcs() {
        let _ = writeln!(
            out,
            "{} {} {} {} {}",
            a.tail, a.head, a.lower, a.upper, a.resource
        );
    }
    out
}
