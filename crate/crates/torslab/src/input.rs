//! Reading algebras: the line-oriented quiver-spec format and preset names.
//!
//! ```text
//! # linear A3 with the composite relation
//! vertex 1..3
//! arrow a 1 2
//! arrow b 2 3
//! relation a b
//! ```
//!
//! Statements may appear in any order. Vertex ids are non-negative integers;
//! internally vertices are numbered by increasing id.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;
use torslab_core::algebra::{AlgebraError, AlgebraPresentation, MonomialIdeal};
use torslab_core::presets::{self, PresetError};
use torslab_core::quiver::{Path, Quiver};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unknown statement `{0}`")]
    UnknownStatement(String),
    #[error("`{statement}` expects {expected}")]
    Arity { statement: &'static str, expected: &'static str },
    #[error("invalid vertex id `{0}`")]
    BadVertex(String),
    #[error("empty vertex range {0}..{1}")]
    EmptyRange(u32, u32),
    #[error("vertex {0} declared twice")]
    DuplicateVertex(u32),
    #[error("invalid arrow name `{0}`")]
    BadArrowName(String),
    #[error("arrow `{0}` declared twice")]
    DuplicateArrow(String),
    #[error("arrow endpoint {0} is not a declared vertex")]
    DanglingEndpoint(u32),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("only monomial relations are supported; `{0}` is not an arrow name")]
    NonMonomial(String),
    #[error("relation of length {0}; generators must have length at least 2")]
    ShortRelation(usize),
    #[error("arrows `{0}` and `{1}` do not compose")]
    NotComposable(String, String),
    #[error("invalid radical power `{0}`; expected an integer at least 2")]
    BadRadical(String),
    #[error("radical power given twice")]
    DuplicateRadical,
    #[error("no vertices declared")]
    NoVertices,
}

/// A syntax or validation error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("invalid preset `{name}`: {reason}")]
    Preset { name: String, reason: String },
}

impl InputError {
    /// Whether the failure is the path-enumeration cap rather than bad input.
    pub fn is_cap(&self) -> bool {
        matches!(self, InputError::Algebra(AlgebraError::PathCapExceeded { .. }))
    }
}

#[derive(Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Token<'_> {
    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { line: self.line, column: self.column, kind }
    }
}

impl fmt::Debug for Token<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}:{}", self.text, self.line, self.column)
    }
}

fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (byte, c) in body.char_indices().chain([(body.len(), ' ')]) {
                match (c.is_whitespace(), start) {
                    (false, None) => start = Some(byte),
                    (true, Some(s)) => {
                        let column = body[..s].chars().count() + 1;
                        tokens.push(Token { text: &body[s..byte], line: i + 1, column });
                        start = None;
                    }
                    _ => {}
                }
            }
            tokens
        })
        .filter(|t| !t.is_empty())
        .collect()
}

fn vertex_id(tok: Token<'_>, text: &str) -> Result<u32, ParseError> {
    text.parse().map_err(|_| tok.error(ParseErrorKind::BadVertex(text.to_string())))
}

fn is_arrow_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// Parses a quiver-spec document into a quiver and a monomial ideal, without
/// enumerating paths.
pub fn parse_presentation(text: &str) -> Result<(Quiver, MonomialIdeal), ParseError> {
    let lines = tokenize(text);
    let mut vertices: Vec<(u32, Token<'_>)> = Vec::new();
    let mut arrows: Vec<[Token<'_>; 3]> = Vec::new();
    let mut relations: Vec<(Token<'_>, Vec<Token<'_>>)> = Vec::new();
    let mut radical: Option<usize> = None;

    for tokens in &lines {
        let head = tokens[0];
        let args = &tokens[1..];
        match head.text {
            "vertex" => {
                let [arg] = args else {
                    return Err(
                        head.error(ParseErrorKind::Arity { statement: "vertex", expected: "an id or a range a..b" })
                    );
                };
                match arg.text.split_once("..") {
                    Some((a, b)) => {
                        let (a, b) = (vertex_id(*arg, a)?, vertex_id(*arg, b)?);
                        if a > b {
                            return Err(arg.error(ParseErrorKind::EmptyRange(a, b)));
                        }
                        vertices.extend((a..=b).map(|v| (v, *arg)));
                    }
                    None => vertices.push((vertex_id(*arg, arg.text)?, *arg)),
                }
            }
            "arrow" => {
                let [name, src, dst] = args else {
                    return Err(head.error(ParseErrorKind::Arity {
                        statement: "arrow",
                        expected: "a name, a source and a target",
                    }));
                };
                arrows.push([*name, *src, *dst]);
            }
            "relation" => {
                if args.is_empty() {
                    return Err(head.error(ParseErrorKind::Arity {
                        statement: "relation",
                        expected: "a sequence of arrow names",
                    }));
                }
                relations.push((head, args.to_vec()));
            }
            "radical" => {
                let [arg] = args else {
                    return Err(head.error(ParseErrorKind::Arity { statement: "radical", expected: "one integer" }));
                };
                if radical.is_some() {
                    return Err(head.error(ParseErrorKind::DuplicateRadical));
                }
                match arg.text.parse::<usize>() {
                    Ok(n) if n >= 2 => radical = Some(n),
                    _ => return Err(arg.error(ParseErrorKind::BadRadical(arg.text.to_string()))),
                }
            }
            other => return Err(head.error(ParseErrorKind::UnknownStatement(other.to_string()))),
        }
    }

    let mut seen = BTreeSet::new();
    for &(v, tok) in &vertices {
        if !seen.insert(v) {
            return Err(tok.error(ParseErrorKind::DuplicateVertex(v)));
        }
    }
    if seen.is_empty() {
        return Err(ParseError { line: 1, column: 1, kind: ParseErrorKind::NoVertices });
    }
    let mut quiver = Quiver::new(seen.into_iter().collect()).expect("labels are distinct");

    for [name, src, dst] in &arrows {
        if !is_arrow_name(name.text) {
            return Err(name.error(ParseErrorKind::BadArrowName(name.text.to_string())));
        }
        if quiver.arrow_by_name(name.text).is_some() {
            return Err(name.error(ParseErrorKind::DuplicateArrow(name.text.to_string())));
        }
        let endpoint = |tok: &Token<'_>| -> Result<usize, ParseError> {
            let id = vertex_id(*tok, tok.text)?;
            quiver.vertex_by_label(id).ok_or_else(|| tok.error(ParseErrorKind::DanglingEndpoint(id)))
        };
        let (s, t) = (endpoint(src)?, endpoint(dst)?);
        quiver.add_arrow(name.text, s, t).expect("name and endpoints were checked");
    }

    let mut ideal = MonomialIdeal::new(Vec::new(), radical);
    for (head, names) in &relations {
        let mut ids = Vec::with_capacity(names.len());
        for tok in names {
            match quiver.arrow_by_name(tok.text) {
                Some(a) => ids.push(a),
                None if is_arrow_name(tok.text) => {
                    return Err(tok.error(ParseErrorKind::UnknownArrow(tok.text.to_string())))
                }
                None => return Err(tok.error(ParseErrorKind::NonMonomial(tok.text.to_string()))),
            }
        }
        if ids.len() < 2 {
            return Err(head.error(ParseErrorKind::ShortRelation(ids.len())));
        }
        if let Some(i) = ids.windows(2).position(|w| quiver.arrow(w[0]).target != quiver.arrow(w[1]).source) {
            return Err(names[i + 1]
                .error(ParseErrorKind::NotComposable(names[i].text.to_string(), names[i + 1].text.to_string())));
        }
        debug_assert!(Path::from_arrows(&quiver, &ids).is_ok());
        ideal = ideal.with_generator(ids);
    }
    Ok((quiver, ideal))
}

/// Parses and enumerates nonzero paths, failing if there are more than
/// `path_cap` of them.
pub fn parse_quiver_spec(text: &str, path_cap: usize) -> Result<AlgebraPresentation, InputError> {
    let (quiver, ideal) = parse_presentation(text)?;
    Ok(AlgebraPresentation::with_path_cap(quiver, ideal, path_cap)?)
}

/// Preset names and their parameter syntax, for `torslab presets`.
pub const PRESETS: &[(&str, &str)] = &[
    ("linear_an:n[:N]", "linearly oriented A_n, optionally modulo rad^N"),
    ("a_orientation:n:mask", "A_n with arrow i reversed when bit i-1 of mask is set"),
    ("cyclic_radn:v:N", "oriented cycle on v vertices modulo rad^N"),
    ("star:n:k", "star with n vertices, centre 1, k sinks and n-1-k sources"),
    ("kronecker:m", "two vertices joined by m parallel arrows"),
    ("nakayama:line|cycle:c1,c2,...", "Nakayama algebra with the given Kupisch series"),
];

/// Builds a preset from `name:param:param`.
pub fn preset(text: &str, path_cap: usize) -> Result<AlgebraPresentation, InputError> {
    let bad = |reason: &str| InputError::Preset { name: text.to_string(), reason: reason.to_string() };
    let mut parts = text.split(':');
    let name = parts.next().unwrap_or_default();
    let params: Vec<&str> = parts.collect();
    let num = |i: usize| -> Result<usize, InputError> {
        params.get(i).ok_or_else(|| bad("missing parameter"))?.parse().map_err(|_| bad("parameters must be integers"))
    };
    let arity = |lo: usize, hi: usize| -> Result<(), InputError> {
        if (lo..=hi).contains(&params.len()) {
            Ok(())
        } else {
            Err(bad("wrong number of parameters"))
        }
    };
    let built: Result<AlgebraPresentation, PresetError> = match name {
        "linear_an" => {
            arity(1, 2)?;
            let radical = if params.len() == 2 { Some(num(1)?) } else { None };
            presets::linear_an(num(0)?, radical)
        }
        "a_orientation" => {
            arity(2, 2)?;
            presets::a_orientation(num(0)?, num(1)? as u64)
        }
        "cyclic_radn" => {
            arity(2, 2)?;
            presets::cyclic_radn(num(0)?, num(1)?)
        }
        "star" => {
            arity(2, 2)?;
            presets::star(num(0)?, num(1)?)
        }
        "kronecker" => {
            arity(1, 1)?;
            presets::kronecker(num(0)?)
        }
        "nakayama" => {
            arity(2, 2)?;
            let cyclic = match params[0] {
                "line" => false,
                "cycle" => true,
                _ => return Err(bad("shape must be `line` or `cycle`")),
            };
            let kupisch: Result<Vec<usize>, _> = params[1].split(',').map(str::parse).collect();
            presets::nakayama(cyclic, &kupisch.map_err(|_| bad("Kupisch entries must be integers"))?)
        }
        _ => return Err(bad("unknown preset; run `torslab presets`")),
    };
    let alg = built.map_err(|e| bad(&e.to_string()))?;
    if alg.nonzero_paths().len() > path_cap {
        return Err(AlgebraError::PathCapExceeded { cap: path_cap }.into());
    }
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use torslab_core::DEFAULT_PATH_CAP;

    fn parse(text: &str) -> AlgebraPresentation {
        parse_quiver_spec(text, DEFAULT_PATH_CAP).unwrap()
    }

    fn error(text: &str) -> ParseError {
        parse_presentation(text).unwrap_err()
    }

    #[test]
    fn linear_a3() {
        let a = parse("vertex 1..3\narrow a 1 2\narrow b 2 3\n");
        assert_eq!(a.nonzero_paths().len(), 6);
        let r = parse("vertex 1..3 # three\narrow a 1 2\narrow b 2 3\nradical 2\n");
        assert_eq!(r.nonzero_paths().len(), 5);
        let c = parse("vertex 1\nvertex 2\narrow a 1 2\narrow b 2 1\nradical 3");
        assert!(c.nonzero_paths().iter().all(|p| p.len() <= 2));
        assert_eq!(c.nonzero_paths().len(), 6);
    }

    #[test]
    fn relations_and_order() {
        let a = parse("relation a b\narrow b 2 3\narrow a 1 2\nvertex 3\nvertex 1..2");
        assert_eq!(a.nonzero_paths().len(), 5);
        assert_eq!(a.quiver().labels(), &[1, 2, 3]);
    }

    #[test]
    fn positions() {
        let e = error("vertex 1..2\narrow a 1 2\n  relation a  x+y");
        assert_eq!((e.line, e.column), (3, 15));
        assert!(matches!(e.kind, ParseErrorKind::NonMonomial(_)));
        let e = error("vertex 1..2\narrow a 1 5");
        assert_eq!((e.line, e.column, e.kind), (2, 11, ParseErrorKind::DanglingEndpoint(5)));
        let e = error("vertex 1..2\narrow a 1 2\nrelation a");
        assert_eq!(e.kind, ParseErrorKind::ShortRelation(1));
        let e = error("vertex 1..2\narrow a 1 2\narrow b 1 2\nrelation a b");
        assert_eq!((e.line, e.column), (4, 12));
        assert_eq!(error("vertex 1\nvertex 1").kind, ParseErrorKind::DuplicateVertex(1));
        assert_eq!(error("vertx 1").kind, ParseErrorKind::UnknownStatement("vertx".into()));
        assert_eq!(error("# nothing").kind, ParseErrorKind::NoVertices);
        assert!(matches!(error("vertex 1\nradical 1").kind, ParseErrorKind::BadRadical(_)));
        assert!(matches!(error("vertex 1\narrow 2a 1 1").kind, ParseErrorKind::BadArrowName(_)));
        assert!(matches!(error("vertex 1\narrow a 1 1\nrelation a -a").kind, ParseErrorKind::NonMonomial(_)));
    }

    #[test]
    fn cap() {
        let err = parse_quiver_spec("vertex 1\narrow x 1 1", 50).unwrap_err();
        assert!(err.is_cap());
        let err = preset("linear_an:12", 10).unwrap_err();
        assert!(err.is_cap());
    }

    #[test]
    fn presets_parse() {
        assert_eq!(preset("linear_an:3", DEFAULT_PATH_CAP).unwrap().nonzero_paths().len(), 6);
        assert_eq!(preset("linear_an:3:2", DEFAULT_PATH_CAP).unwrap().nonzero_paths().len(), 5);
        assert_eq!(preset("star:4:2", DEFAULT_PATH_CAP).unwrap().vertex_count(), 4);
        assert_eq!(preset("kronecker:3", DEFAULT_PATH_CAP).unwrap().quiver().arrows().len(), 3);
        assert_eq!(preset("nakayama:cycle:2,2", DEFAULT_PATH_CAP).unwrap().nonzero_paths().len(), 4);
        assert!(preset("star:4:4", DEFAULT_PATH_CAP).is_err());
        assert!(preset("linear_an", DEFAULT_PATH_CAP).is_err());
        assert!(preset("bogus:1", DEFAULT_PATH_CAP).is_err());
        assert!(preset("nakayama:tree:1", DEFAULT_PATH_CAP).is_err());
    }
}
