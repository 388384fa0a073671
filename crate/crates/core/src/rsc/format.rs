//! Serialization for set covering instances.
//!
//! Two formats are supported. OR-Library scp files describe a structure
//! with base column costs as one whitespace-separated token stream:
//!
//! ```text
//! <rows> <cols>
//! <cost_1> ... <cost_cols>
//! <k_1> <col ...>        (1-based, repeated per row)
//! ...
//! ```
//!
//! Interval instances use a line-oriented format: a header `rsc <rows>
//! <cols>`, then one `<lower> <upper>` line per column, then one `<k>
//! <col ...>` line per row (1-based). Blank lines are skipped and `#`
//! starts a comment running to the end of the line. Writers emit the
//! canonical comment-free forms.

use std::fmt::Write as _;

use crate::rsc::{CoverMatrix, IntervalCoverProblem, RscError, ScpBase};

fn parse_err(line: usize, msg: impl Into<String>) -> RscError {
    RscError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Whitespace token stream that remembers which line each token came from.
struct Tokens<'a> {
    items: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> Tokens<'a> {
    fn new(text: &'a str) -> Self {
        let items = text
            .lines()
            .enumerate()
            .flat_map(|(i, l)| l.split_whitespace().map(move |t| (i + 1, t)))
            .collect();
        Tokens { items, pos: 0 }
    }

    fn next<T: std::str::FromStr>(&mut self, what: &str) -> Result<(usize, T), RscError> {
        let last_line = self.items.last().map_or(0, |&(l, _)| l);
        let &(line, tok) = self
            .items
            .get(self.pos)
            .ok_or_else(|| parse_err(last_line, format!("missing {what}")))?;
        self.pos += 1;
        let value = tok
            .parse()
            .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))?;
        Ok((line, value))
    }

    fn finish(&self) -> Result<(), RscError> {
        match self.items.get(self.pos) {
            Some(&(line, tok)) => Err(parse_err(line, format!("unexpected token {tok:?}"))),
            None => Ok(()),
        }
    }
}

/// Parse an OR-Library scp file into a structure with base costs.
pub fn parse_orlib(text: &str) -> Result<ScpBase, RscError> {
    let mut tokens = Tokens::new(text);
    let (_, rows): (_, usize) = tokens.next("row count")?;
    let (_, cols): (_, usize) = tokens.next("column count")?;
    let mut costs = Vec::with_capacity(cols);
    for _ in 0..cols {
        let (_, c): (_, i64) = tokens.next("column cost")?;
        costs.push(c);
    }
    let mut row_lists = Vec::with_capacity(rows);
    for i in 0..rows {
        let (_, k): (_, usize) = tokens.next("cover count")?;
        if k == 0 {
            return Err(RscError::UncoverableRow(i));
        }
        let mut list = Vec::with_capacity(k);
        for _ in 0..k {
            let (line, j): (usize, usize) = tokens.next("column index")?;
            if j == 0 || j > cols {
                return Err(parse_err(
                    line,
                    format!("column index {j} outside 1..={cols}"),
                ));
            }
            list.push(j - 1);
        }
        row_lists.push(list);
    }
    tokens.finish()?;
    ScpBase::new(CoverMatrix::new(cols, row_lists)?, costs)
}

fn push_wrapped(out: &mut String, values: impl Iterator<Item = i64>) {
    for (idx, v) in values.enumerate() {
        if idx > 0 {
            out.push(if idx % 12 == 0 { '\n' } else { ' ' });
        }
        let _ = write!(out, "{v}");
    }
    out.push('\n');
}

/// Serialize a structure with base costs in OR-Library scp form.
pub fn write_orlib(base: &ScpBase) -> String {
    let m = base.matrix();
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", m.num_rows(), m.num_cols());
    push_wrapped(&mut out, base.costs().iter().copied());
    for i in 0..m.num_rows() {
        let row = m.row(i);
        let _ = writeln!(out, "{}", row.len());
        push_wrapped(&mut out, row.iter().map(|&j| j as i64 + 1));
    }
    out
}

/// Parse an interval instance from its text form.
pub fn parse_rsc(text: &str) -> Result<IntervalCoverProblem, RscError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.split('#').next().unwrap_or("")))
        .filter(|(_, body)| !body.trim().is_empty());

    let mut field = |what: &str| -> Result<(usize, std::str::SplitWhitespace<'_>), RscError> {
        let (line, body) = lines
            .next()
            .ok_or_else(|| parse_err(0, format!("missing {what}")))?;
        Ok((line, body.split_whitespace()))
    };
    let take = |tokens: &mut std::str::SplitWhitespace<'_>,
                line: usize,
                what: &str|
     -> Result<i64, RscError> {
        let tok = tokens
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line, format!("bad {what} {tok:?}")))
    };
    let end = |tokens: &mut std::str::SplitWhitespace<'_>, line: usize| -> Result<(), RscError> {
        match tokens.next() {
            Some(extra) => Err(parse_err(line, format!("unexpected token {extra:?}"))),
            None => Ok(()),
        }
    };

    let (header_line, mut tokens) = field("header")?;
    match tokens.next() {
        Some("rsc") => {}
        Some(other) => {
            return Err(parse_err(
                header_line,
                format!("expected header tag \"rsc\", found {other:?}"),
            ))
        }
        None => unreachable!("blank lines were filtered"),
    }
    let rows = take(&mut tokens, header_line, "row count")? as usize;
    let cols = take(&mut tokens, header_line, "column count")? as usize;
    end(&mut tokens, header_line)?;

    let mut lower = Vec::with_capacity(cols);
    let mut upper = Vec::with_capacity(cols);
    for _ in 0..cols {
        let (line, mut tokens) = field("interval line")?;
        lower.push(take(&mut tokens, line, "lower cost")?);
        upper.push(take(&mut tokens, line, "upper cost")?);
        end(&mut tokens, line)?;
    }
    let mut row_lists = Vec::with_capacity(rows);
    for i in 0..rows {
        let (line, mut tokens) = field("cover line")?;
        let k = take(&mut tokens, line, "cover count")?;
        if k <= 0 {
            return Err(RscError::UncoverableRow(i));
        }
        let mut list = Vec::with_capacity(k as usize);
        for _ in 0..k {
            let j = take(&mut tokens, line, "column index")?;
            if j <= 0 || j as usize > cols {
                return Err(parse_err(
                    line,
                    format!("column index {j} outside 1..={cols}"),
                ));
            }
            list.push(j as usize - 1);
        }
        end(&mut tokens, line)?;
        row_lists.push(list);
    }
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "unexpected extra line"));
    }
    IntervalCoverProblem::new(CoverMatrix::new(cols, row_lists)?, lower, upper)
}

/// Serialize an interval instance to the canonical text form.
pub fn write_rsc(p: &IntervalCoverProblem) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "rsc {} {}", p.num_rows(), p.num_cols());
    for j in 0..p.num_cols() {
        let _ = writeln!(out, "{} {}", p.intervals().lower()[j], p.intervals().upper()[j]);
    }
    for i in 0..p.num_rows() {
        let row = p.matrix().row(i);
        let _ = write!(out, "{}", row.len());
        for &j in row {
            let _ = write!(out, " {}", j + 1);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rsc::generate::{generate_kz, generate_synthetic_scp};

    #[test]
    fn minimal_orlib_file_parses() {
        let base = parse_orlib("2 2\n3 4\n1 1\n2 1 2\n").unwrap();
        assert_eq!(base.matrix().num_rows(), 2);
        assert_eq!(base.matrix().num_cols(), 2);
        assert_eq!(base.costs(), &[3, 4]);
        assert_eq!(base.matrix().row(0), &[0]);
        assert_eq!(base.matrix().row(1), &[0, 1]);
    }

    #[test]
    fn orlib_tolerates_arbitrary_whitespace() {
        let oneline = parse_orlib("2 2 3 4 1 1 2 1 2").unwrap();
        let multiline = parse_orlib("2 2\n3\n4\n1\n1\n2\n1\n2\n").unwrap();
        assert_eq!(oneline, multiline);
    }

    #[test]
    fn orlib_round_trips() {
        let base = generate_synthetic_scp(15, 30, 0.15, 50, 3).unwrap();
        let text = write_orlib(&base);
        let back = parse_orlib(&text).unwrap();
        assert_eq!(back, base);
        assert_eq!(write_orlib(&back), text);
    }

    #[test]
    fn orlib_rejects_out_of_range_column() {
        let err = parse_orlib("1 2\n3 4\n1 3\n").unwrap_err();
        match err {
            RscError::Parse { line, msg } => {
                assert_eq!(line, 3);
                assert!(msg.contains('3'), "{msg}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn orlib_rejects_uncoverable_row_and_trailing_tokens() {
        assert!(matches!(
            parse_orlib("1 2\n3 4\n0\n"),
            Err(RscError::UncoverableRow(0))
        ));
        assert!(matches!(
            parse_orlib("1 2\n3 4\n1 1 7\n"),
            Err(RscError::Parse { .. })
        ));
    }

    #[test]
    fn rsc_text_round_trips() {
        let base = generate_synthetic_scp(10, 12, 0.25, 40, 9).unwrap();
        let p = generate_kz(base.matrix(), 9).unwrap();
        let text = write_rsc(&p);
        let back = parse_rsc(&text).unwrap();
        assert_eq!(back.matrix(), p.matrix());
        assert_eq!(back.intervals().lower(), p.intervals().lower());
        assert_eq!(back.intervals().upper(), p.intervals().upper());
        assert_eq!(write_rsc(&back), text);
    }

    #[test]
    fn rsc_text_skips_comments() {
        let text = "# tiny\nrsc 1 2  # one row\n1 2\n3 4\n2 1 2\n";
        let p = parse_rsc(text).unwrap();
        assert_eq!(p.num_rows(), 1);
        assert_eq!(p.num_cols(), 2);
        assert_eq!(p.intervals().upper(), &[2, 4]);
    }

    #[test]
    fn rsc_text_rejects_garbage() {
        assert!(parse_rsc("").is_err());
        assert!(parse_rsc("cover 1 1\n1 2\n1 1\n").is_err());
        assert!(parse_rsc("rsc 1 1\n1 2\n1 1\n1 1\n").is_err());
        assert!(parse_rsc("rsc 1 1\n2 1\n1 1\n").is_err());
    }
}
