//! Graph and distribution file parsing.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use gelab_core::{Distribution, Graph, Rational};
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    /// `u v` lines with 0-based labels, optional `n <count>` header.
    EdgeList,
    /// `p edge n m` header and `e u v` lines with 1-based labels.
    Dimacs,
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("{0}")]
    Invalid(String),
}

fn syntax(line: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax { line, message: message.into() }
}

pub fn read_to_string(path: &Path) -> Result<String, InputError> {
    fs::read_to_string(path).map_err(|source| InputError::Io { path: path.display().to_string(), source })
}

/// Lines with comments stripped and whitespace trimmed, numbered from 1.
fn content_lines(text: &str, comment: fn(&str) -> &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(move |(i, l)| (i + 1, comment(l).trim())).filter(|(_, l)| !l.is_empty())
}

fn parse_usize(token: &str, line: usize) -> Result<usize, InputError> {
    token.parse().map_err(|_| syntax(line, format!("expected a vertex label, found `{token}`")))
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph, InputError> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

fn build(n: usize, edges: Vec<(usize, usize, usize)>) -> Result<Graph, InputError> {
    let mut g = Graph::empty(n);
    for (line, u, v) in edges {
        g.add_edge(u, v).map_err(|e| syntax(line, e.to_string()))?;
    }
    Ok(g)
}

fn parse_edge_list(text: &str) -> Result<Graph, InputError> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, l) in content_lines(text, |l| l.split('#').next().unwrap_or("")) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] => {
                if declared.is_some() {
                    return Err(syntax(line, "duplicate `n` header"));
                }
                declared = Some(parse_usize(count, line)?);
            }
            [u, v] => edges.push((line, parse_usize(u, line)?, parse_usize(v, line)?)),
            _ => return Err(syntax(line, format!("expected `u v` or `n <count>`, found `{l}`"))),
        }
    }
    let n = match declared {
        Some(n) => n,
        None => edges.iter().map(|&(_, u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    build(n, edges)
}

fn parse_dimacs(text: &str) -> Result<Graph, InputError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (line, l) in content_lines(text, |l| if l.trim_start().starts_with('c') { "" } else { l }) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        match tokens.as_slice() {
            ["p", "edge" | "col", count, _m] => {
                if n.is_some() {
                    return Err(syntax(line, "duplicate `p` line"));
                }
                n = Some(parse_usize(count, line)?);
            }
            ["e", u, v] => {
                if n.is_none() {
                    return Err(syntax(line, "edge before the `p edge n m` line"));
                }
                let (u, v) = (parse_usize(u, line)?, parse_usize(v, line)?);
                if u == 0 || v == 0 {
                    return Err(syntax(line, "DIMACS labels start at 1"));
                }
                edges.push((line, u - 1, v - 1));
            }
            _ => return Err(syntax(line, format!("unrecognized DIMACS line `{l}`"))),
        }
    }
    let n = n.ok_or_else(|| InputError::Invalid("missing `p edge n m` line".into()))?;
    build(n, edges)
}

/// A parsed distribution and an optional warning for the user.
#[derive(Debug)]
pub struct ParsedDistribution {
    pub distribution: Distribution,
    pub warning: Option<String>,
}

/// Parses `v p_v` lines for a graph on `n` vertices; unlisted vertices get
/// probability zero. Values are `a/b` rationals or decimals, both read
/// exactly. Rational-only input must sum to exactly 1; input with decimals
/// is rescaled to sum to 1 with a warning when it does not.
pub fn parse_distribution(text: &str, n: usize) -> Result<ParsedDistribution, InputError> {
    let mut weights: Vec<Option<Rational>> = vec![None; n];
    let mut any_decimal = false;
    for (line, l) in content_lines(text, |l| l.split('#').next().unwrap_or("")) {
        let tokens: Vec<&str> = l.split_whitespace().collect();
        let [v, value] = tokens.as_slice() else {
            return Err(syntax(line, format!("expected `v p_v`, found `{l}`")));
        };
        let v = parse_usize(v, line)?;
        if v >= n {
            return Err(syntax(line, format!("vertex {v} out of range for a graph on {n} vertices")));
        }
        if weights[v].is_some() {
            return Err(syntax(line, format!("vertex {v} listed twice")));
        }
        let w: Rational =
            value.parse().map_err(|e: gelab_core::rational::ParseRationalError| syntax(line, e.to_string()))?;
        if w.is_negative() {
            return Err(syntax(line, format!("negative probability {w}")));
        }
        any_decimal |= !value.contains('/') && value.contains(['.', 'e', 'E']);
        weights[v] = Some(w);
    }
    let weights: Vec<Rational> = weights.into_iter().map(Option::unwrap_or_default).collect();
    let sum: Rational = weights.iter().sum();
    if sum.is_zero() {
        return Err(InputError::Invalid("distribution has no positive probability".into()));
    }
    if sum == Rational::one() {
        return Ok(ParsedDistribution { distribution: Distribution::exact(weights).map_err(invalid)?, warning: None });
    }
    if !any_decimal {
        return Err(InputError::Invalid(format!(
            "probabilities sum to {sum}, not 1; use exact `a/b` values that sum to 1"
        )));
    }
    Ok(ParsedDistribution {
        distribution: Distribution::normalized(weights).map_err(invalid)?,
        warning: Some(format!("decimal probabilities sum to {sum}; rescaled exactly to sum to 1")),
    })
}

fn invalid(e: gelab_core::Error) -> InputError {
    InputError::Invalid(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_with_comments_and_header() {
        let g = parse_graph("# a path\nn 4\n0 1 # first\n\n1 2\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        let g = parse_graph("0 1\n3 1\n", GraphFormat::EdgeList).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(parse_graph("", GraphFormat::EdgeList).unwrap().n(), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_graph("0 0\n", GraphFormat::EdgeList), Err(InputError::Syntax { line: 1, .. })));
        assert!(matches!(parse_graph("n 2\n0 2\n", GraphFormat::EdgeList), Err(InputError::Syntax { line: 2, .. })));
        assert!(parse_graph("0 1 2\n", GraphFormat::EdgeList).is_err());
        assert!(parse_graph("a b\n", GraphFormat::EdgeList).is_err());
    }

    #[test]
    fn dimacs() {
        let g = parse_graph("c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n", GraphFormat::Dimacs).unwrap();
        assert_eq!(g, Graph::complete(3));
        assert!(parse_graph("e 1 2\n", GraphFormat::Dimacs).is_err());
        assert!(parse_graph("p edge 2 1\ne 0 1\n", GraphFormat::Dimacs).is_err());
        assert!(parse_graph("", GraphFormat::Dimacs).is_err());
    }

    #[test]
    fn distributions() {
        let d = parse_distribution("0 1/2\n1 0.25\n2 1/4\n", 3).unwrap();
        assert!(d.warning.is_none());
        assert_eq!(d.distribution.exact_weights().unwrap()[1], Rational::new(1, 4));

        let d = parse_distribution("0 0.3\n1 0.3\n", 3).unwrap();
        assert!(d.warning.is_some());
        assert_eq!(
            d.distribution.exact_weights().unwrap(),
            &[Rational::new(1, 2), Rational::new(1, 2), Rational::zero()]
        );

        assert!(matches!(parse_distribution("0 1/3\n1 1/3\n", 2), Err(InputError::Invalid(_))));
        assert!(parse_distribution("0 1\n0 0\n", 2).is_err());
        assert!(parse_distribution("2 1\n", 2).is_err());
        assert!(parse_distribution("0 -1/2\n1 3/2\n", 2).is_err());
        assert!(parse_distribution("0 x\n", 1).is_err());
        assert!(parse_distribution("0 0\n", 1).is_err());
    }
}
