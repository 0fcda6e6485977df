//! Text formats: automaton files, graph files and vector literals.
//!
//! An automaton file is line oriented; `#` starts a comment:
//!
//! ```text
//! semiring tropical-nat
//! states 2
//! alphabet a b
//! output 0 inf
//! trans a
//! 0 1
//! inf 0
//! trans b
//! inf inf
//! inf 0
//! ```
//!
//! Matrix rows are sources, columns are targets. A graph file has the
//! header lines `graph` and `vertices <n>` followed by `n` rows.

use std::fmt;

use thiserror::Error;

use crate::automata::WeightedAutomaton;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Vector};
use crate::semiring::{
    Boolean, MaxTimes, Rational, Semiring, SemiringId, TropicalNat, TropicalReal,
};
use crate::spath::WeightedDigraph;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown semiring `{0}`")]
    UnknownSemiring(String),
    #[error("expected {expected} entries, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("malformed scalar `{0}`")]
    MalformedScalar(String),
    #[error("missing `trans` block for symbol `{0}`")]
    MissingTrans(String),
    #[error("duplicate `trans` block for symbol `{0}`")]
    DuplicateTrans(String),
    #[error("`trans` block for unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("expected {0}")]
    Expected(String),
    #[error("invalid {0}")]
    Invalid(String),
}

impl ParseErrorKind {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            ParseErrorKind::UnknownSemiring(_) => "unknown-semiring",
            ParseErrorKind::DimensionMismatch { .. } => "dimension-mismatch",
            ParseErrorKind::MalformedScalar(_) => "malformed-scalar",
            ParseErrorKind::MissingTrans(_) => "missing-trans",
            ParseErrorKind::DuplicateTrans(_) => "duplicate-trans",
            ParseErrorKind::UnknownSymbol(_) => "unknown-symbol",
            ParseErrorKind::Expected(_) => "unexpected-input",
            ParseErrorKind::Invalid(_) => "invalid-value",
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    col: usize,
}

struct Line<'a> {
    number: usize,
    tokens: Vec<Token<'a>>,
}

impl Line<'_> {
    fn end_col(&self) -> usize {
        self.tokens
            .last()
            .map_or(1, |t| t.col + t.text.chars().count())
    }
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (byte, ch) in content
                .char_indices()
                .chain(std::iter::once((content.len(), ' ')))
            {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(byte),
                    (true, Some(s)) => {
                        tokens.push(Token {
                            text: &content[s..byte],
                            line: i + 1,
                            col: content[..s].chars().count() + 1,
                        });
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

struct Cursor<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Self {
        let lines = lines(text);
        let last_line = text.lines().count().max(1);
        Cursor {
            lines,
            pos: 0,
            last_line,
        }
    }

    fn eof_error(&self, expected: &str) -> ParseError {
        ParseError {
            line: self.last_line,
            col: 1,
            kind: ParseErrorKind::Expected(format!("{expected} before end of input")),
        }
    }

    fn next_line(&mut self, expected: &str) -> Result<&Line<'a>, ParseError> {
        let idx = self.pos;
        if idx >= self.lines.len() {
            return Err(self.eof_error(expected));
        }
        self.pos += 1;
        Ok(&self.lines[idx])
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    /// A line `<keyword> args...`; returns the argument tokens.
    fn keyword(&mut self, keyword: &str) -> Result<(usize, Vec<Token<'a>>), ParseError> {
        let line = self.next_line(&format!("`{keyword}`"))?;
        let first = line.tokens[0];
        if first.text != keyword {
            return Err(err_at(
                first,
                ParseErrorKind::Expected(format!("`{keyword}`, found `{}`", first.text)),
            ));
        }
        Ok((line.number, line.tokens[1..].to_vec()))
    }
}

fn err_at(tok: Token<'_>, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: tok.line,
        col: tok.col,
        kind,
    }
}

fn single_arg<'a>(line: usize, args: &[Token<'a>], what: &str) -> Result<Token<'a>, ParseError> {
    match args {
        [tok] => Ok(*tok),
        [] => Err(ParseError {
            line,
            col: 1,
            kind: ParseErrorKind::Expected(format!("{what} argument")),
        }),
        [_, extra, ..] => Err(err_at(
            *extra,
            ParseErrorKind::Expected("end of line".into()),
        )),
    }
}

fn positive_count(tok: Token<'_>, what: &str) -> Result<usize, ParseError> {
    match tok.text.parse::<usize>() {
        Ok(n) if n > 0 => Ok(n),
        _ => Err(err_at(
            tok,
            ParseErrorKind::Invalid(format!("{what} `{}`", tok.text)),
        )),
    }
}

fn scalars<S: Semiring>(
    line: usize,
    end_col: usize,
    tokens: &[Token<'_>],
    n: usize,
) -> Result<Vec<S>, ParseError> {
    if tokens.len() != n {
        let (line, col) = tokens.get(n).map_or((line, end_col), |t| (t.line, t.col));
        return Err(ParseError {
            line,
            col,
            kind: ParseErrorKind::DimensionMismatch {
                expected: n,
                found: tokens.len(),
            },
        });
    }
    tokens
        .iter()
        .map(|t| {
            S::parse_scalar(t.text)
                .map_err(|_| err_at(*t, ParseErrorKind::MalformedScalar(t.text.to_string())))
        })
        .collect()
}

fn matrix_rows<S: Semiring>(
    cur: &mut Cursor<'_>,
    n: usize,
    what: &str,
) -> Result<Vec<Vec<S>>, ParseError> {
    (0..n)
        .map(|_| {
            let line = cur.next_line(&format!("{n} rows for {what}"))?;
            scalars(line.number, line.end_col(), &line.tokens, n)
        })
        .collect()
}

/// An automaton over a semiring chosen at runtime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyAutomaton {
    Boolean(WeightedAutomaton<Boolean>),
    TropicalNat(WeightedAutomaton<TropicalNat>),
    TropicalReal(WeightedAutomaton<TropicalReal>),
    MaxTimes(WeightedAutomaton<MaxTimes>),
    Rational(WeightedAutomaton<Rational>),
}

impl AnyAutomaton {
    pub fn semiring(&self) -> SemiringId {
        match self {
            AnyAutomaton::Boolean(_) => SemiringId::Boolean,
            AnyAutomaton::TropicalNat(_) => SemiringId::TropicalNat,
            AnyAutomaton::TropicalReal(_) => SemiringId::TropicalReal,
            AnyAutomaton::MaxTimes(_) => SemiringId::MaxTimes,
            AnyAutomaton::Rational(_) => SemiringId::RationalField,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyAutomaton::Boolean(a) => write_automaton(a),
            AnyAutomaton::TropicalNat(a) => write_automaton(a),
            AnyAutomaton::TropicalReal(a) => write_automaton(a),
            AnyAutomaton::MaxTimes(a) => write_automaton(a),
            AnyAutomaton::Rational(a) => write_automaton(a),
        }
    }
}

/// Parses an automaton file.
pub fn parse_automaton(text: &str) -> Result<AnyAutomaton, ParseError> {
    let mut cur = Cursor::new(text);
    let (line, args) = cur.keyword("semiring")?;
    let tok = single_arg(line, &args, "semiring")?;
    let id: SemiringId = tok
        .text
        .parse()
        .map_err(|_| err_at(tok, ParseErrorKind::UnknownSemiring(tok.text.to_string())))?;
    Ok(match id {
        SemiringId::Boolean => AnyAutomaton::Boolean(parse_body(&mut cur)?),
        SemiringId::TropicalNat => AnyAutomaton::TropicalNat(parse_body(&mut cur)?),
        SemiringId::TropicalReal => AnyAutomaton::TropicalReal(parse_body(&mut cur)?),
        SemiringId::MaxTimes => AnyAutomaton::MaxTimes(parse_body(&mut cur)?),
        SemiringId::RationalField => AnyAutomaton::Rational(parse_body(&mut cur)?),
    })
}

/// Parses an automaton file whose semiring must be `S`.
pub fn parse_automaton_as<S: Semiring>(text: &str) -> Result<WeightedAutomaton<S>> {
    let mut cur = Cursor::new(text);
    let (line, args) = cur.keyword("semiring")?;
    let tok = single_arg(line, &args, "semiring")?;
    if tok.text != S::ID.name() {
        return Err(Error::usage(format!(
            "expected a {} automaton, found `{}`",
            S::ID,
            tok.text
        )));
    }
    Ok(parse_body(&mut cur)?)
}

fn parse_body<S: Semiring>(cur: &mut Cursor<'_>) -> Result<WeightedAutomaton<S>, ParseError> {
    let (line, args) = cur.keyword("states")?;
    let n = positive_count(single_arg(line, &args, "state count")?, "state count")?;

    let (line, args) = cur.keyword("alphabet")?;
    if args.is_empty() {
        return Err(ParseError {
            line,
            col: 1,
            kind: ParseErrorKind::Expected("at least one alphabet symbol".into()),
        });
    }
    let alphabet: Vec<String> = args.iter().map(|t| t.text.to_string()).collect();
    for (i, t) in args.iter().enumerate() {
        if alphabet[..i].contains(&alphabet[i]) {
            return Err(err_at(
                *t,
                ParseErrorKind::Invalid(format!("duplicate symbol `{}`", t.text)),
            ));
        }
    }

    let out_line = cur.next_line("`output`")?;
    let first = out_line.tokens[0];
    if first.text != "output" {
        return Err(err_at(
            first,
            ParseErrorKind::Expected(format!("`output`, found `{}`", first.text)),
        ));
    }
    let output = Vector::new(scalars(
        out_line.number,
        out_line.end_col(),
        &out_line.tokens[1..],
        n,
    )?);

    let mut blocks: Vec<Option<Matrix<S>>> = vec![None; alphabet.len()];
    while let Some(line) = cur.peek() {
        let first = line.tokens[0];
        if first.text != "trans" {
            return Err(err_at(
                first,
                ParseErrorKind::Expected(format!("`trans`, found `{}`", first.text)),
            ));
        }
        let (number, args) = (line.number, line.tokens[1..].to_vec());
        cur.pos += 1;
        let sym = single_arg(number, &args, "symbol")?;
        let idx = alphabet
            .iter()
            .position(|s| s == sym.text)
            .ok_or_else(|| err_at(sym, ParseErrorKind::UnknownSymbol(sym.text.to_string())))?;
        if blocks[idx].is_some() {
            return Err(err_at(
                sym,
                ParseErrorKind::DuplicateTrans(sym.text.to_string()),
            ));
        }
        let rows = matrix_rows(cur, n, &format!("`trans {}`", sym.text))?;
        blocks[idx] = Some(Matrix::from_rows(rows).expect("rows were checked"));
    }
    let trans = blocks
        .into_iter()
        .zip(&alphabet)
        .map(|(m, sym)| {
            m.ok_or_else(|| ParseError {
                line: cur.last_line,
                col: 1,
                kind: ParseErrorKind::MissingTrans(sym.clone()),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WeightedAutomaton::new(alphabet, output, trans).expect("automaton was validated"))
}

struct Row<'a, S>(&'a [S]);

impl<S: fmt::Display> fmt::Display for Row<'_, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Serializes an automaton in the format read by [`parse_automaton`].
pub fn write_automaton<S: Semiring>(aut: &WeightedAutomaton<S>) -> String {
    let mut s = format!(
        "semiring {}\nstates {}\nalphabet {}\noutput {}\n",
        S::ID,
        aut.states(),
        aut.alphabet().join(" "),
        aut.output_vector()
    );
    for (i, sym) in aut.alphabet().iter().enumerate() {
        s.push_str(&format!("trans {sym}\n"));
        for src in 0..aut.states() {
            s.push_str(&format!("{}\n", Row(aut.transition(i).row(src))));
        }
    }
    s
}

/// Parses a graph file into a tropical graph over nonnegative rationals.
pub fn parse_graph(text: &str) -> Result<WeightedDigraph<TropicalReal>, ParseError> {
    let mut cur = Cursor::new(text);
    let (line, args) = cur.keyword("graph")?;
    if let Some(extra) = args.first() {
        return Err(err_at(
            *extra,
            ParseErrorKind::Expected("end of line".into()),
        ));
    }
    let _ = line;
    let (line, args) = cur.keyword("vertices")?;
    let n = positive_count(single_arg(line, &args, "vertex count")?, "vertex count")?;
    let rows = matrix_rows(&mut cur, n, "the weight matrix")?;
    if let Some(extra) = cur.peek() {
        return Err(err_at(
            extra.tokens[0],
            ParseErrorKind::Expected("end of input".into()),
        ));
    }
    Ok(WeightedDigraph::from_rows(rows).expect("rows were checked"))
}

pub fn write_graph(graph: &WeightedDigraph<TropicalReal>) -> String {
    let mut s = format!("graph\nvertices {}\n", graph.vertices());
    for i in 0..graph.vertices() {
        s.push_str(&format!("{}\n", graph.row(i)));
    }
    s
}

/// Parses a vector literal: comma-separated scalars (`3,inf,0`), or a join
/// of unit vectors with 1-based indices (`unit:1+unit:4`, also accepted
/// with commas: `unit:1,unit:4`).
pub fn parse_vector<S: Semiring>(text: &str, dim: usize) -> Result<Vector<S>> {
    let text = text.trim();
    if text.contains("unit:") {
        let mut v = Vector::zeros(dim);
        for term in text.split(['+', ',']) {
            let term = term.trim();
            let idx = term
                .strip_prefix("unit:")
                .and_then(|i| i.parse::<usize>().ok())
                .filter(|&i| (1..=dim).contains(&i))
                .ok_or_else(|| {
                    Error::usage(format!(
                        "invalid unit vector term `{term}` for dimension {dim}"
                    ))
                })?;
            v = v.combine(&Vector::unit(dim, idx - 1));
        }
        return Ok(v);
    }
    let entries = text
        .split(',')
        .map(|t| S::parse_scalar(t.trim()))
        .collect::<Result<Vec<S>>>()?;
    if entries.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: entries.len(),
        });
    }
    Ok(Vector::new(entries))
}
