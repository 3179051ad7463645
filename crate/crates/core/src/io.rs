//! Edge-list text format and DOT export.
//!
//! ```text
//! # comment
//! digraph 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The header is `digraph N` or `graph N`; every later data line is a pair of
//! 0-based vertex indices. Writers emit arcs in ascending `(u, v)` order, so
//! `write(parse(x))` is canonical.

use std::fmt::Write as _;

use crate::digraph::{Digraph, DigraphBuilder, Graph};
use crate::error::{ModfError, Result};
use crate::sign::SignFunction;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedGraph {
    Digraph(Digraph),
    Graph(Graph),
}

fn parse_error(line: usize, message: impl Into<String>) -> ModfError {
    ModfError::Parse {
        line,
        message: message.into(),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_index(token: &str, line: usize) -> Result<usize> {
    token
        .parse::<usize>()
        .map_err(|_| parse_error(line, format!("expected a vertex index, found {token:?}")))
}

fn parse_pair(l: &str, line: usize, n: usize) -> Result<(usize, usize)> {
    let tokens: Vec<&str> = l.split_whitespace().collect();
    let [a, b] = tokens[..] else {
        return Err(parse_error(
            line,
            format!("expected two vertex indices, found {} tokens", tokens.len()),
        ));
    };
    let (u, v) = (parse_index(a, line)?, parse_index(b, line)?);
    for x in [u, v] {
        if x >= n {
            return Err(parse_error(
                line,
                format!("vertex {x} out of range for order {n}"),
            ));
        }
    }
    if u == v {
        return Err(parse_error(line, format!("self-loop at vertex {u}")));
    }
    Ok((u, v))
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut lines = data_lines(text);
    let Some((header_line, header)) = lines.next() else {
        return Err(parse_error(1, "missing `digraph N` or `graph N` header"));
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (directed, n) = match tokens[..] {
        ["digraph", n] => (true, n),
        ["graph", n] => (false, n),
        _ => {
            return Err(parse_error(
                header_line,
                format!("malformed header {header:?}, expected `digraph N` or `graph N`"),
            ))
        }
    };
    let n = n
        .parse::<usize>()
        .map_err(|_| parse_error(header_line, format!("invalid order {n:?}")))?;
    if n == 0 {
        return Err(parse_error(header_line, "order must be at least 1"));
    }
    if n > crate::MAX_VERTICES {
        return Err(parse_error(header_line, ModfError::TooLarge(n).to_string()));
    }

    let mut builder = DigraphBuilder::new(n)?;
    for (line, l) in lines {
        let (u, v) = parse_pair(l, line, n)?;
        if directed {
            if builder.has_arc(u, v) {
                return Err(parse_error(line, format!("duplicate arc {u} -> {v}")));
            }
            builder.add_arc(u, v)?;
        } else {
            if builder.has_arc(u, v) {
                return Err(parse_error(
                    line,
                    format!("duplicate edge {} -- {}", u.min(v), u.max(v)),
                ));
            }
            builder.add_symmetric(u, v)?;
        }
    }
    let d = builder.build();
    Ok(if directed {
        ParsedGraph::Digraph(d)
    } else {
        ParsedGraph::Graph(d.underlying_graph())
    })
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    match parse_edge_list(text)? {
        ParsedGraph::Digraph(d) => Ok(d),
        ParsedGraph::Graph(_) => Err(parse_error(1, "expected a digraph, found a graph")),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    match parse_edge_list(text)? {
        ParsedGraph::Graph(g) => Ok(g),
        ParsedGraph::Digraph(_) => Err(parse_error(1, "expected a graph, found a digraph")),
    }
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {}\n", d.order());
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn dot_vertices(out: &mut String, n: usize, f: Option<&SignFunction>) {
    for v in 0..n {
        match f {
            Some(f) => {
                let label = if f.is_positive(v) { "+1" } else { "-1" };
                let _ = writeln!(out, "  {v} [label=\"{label}\"];");
            }
            None => {
                let _ = writeln!(out, "  {v};");
            }
        }
    }
}

/// DOT rendering; when `f` is given each vertex is labelled `"+1"` or `"-1"`.
pub fn digraph_to_dot(d: &Digraph, f: Option<&SignFunction>) -> String {
    let mut out = String::from("digraph {\n");
    dot_vertices(&mut out, d.order(), f);
    for (u, v) in d.arcs() {
        let _ = writeln!(out, "  {u} -> {v};");
    }
    out.push_str("}\n");
    out
}

pub fn graph_to_dot(g: &Graph, f: Option<&SignFunction>) -> String {
    let mut out = String::from("graph {\n");
    dot_vertices(&mut out, g.order(), f);
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_directed_cycle() {
        let d = parse_digraph("# triangle\ndigraph 3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(d, Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap());
    }

    #[test]
    fn serialization_is_sorted() {
        let d = parse_digraph("digraph 3\n2 0\n0 2\n1 0\n").unwrap();
        assert_eq!(write_digraph(&d), "digraph 3\n0 2\n1 0\n2 0\n");
        let g = parse_graph("graph 3\n2 1\n1 0\n").unwrap();
        assert_eq!(write_graph(&g), "graph 3\n0 1\n1 2\n");
    }

    #[test]
    fn self_loop_is_rejected_with_line() {
        let err = parse_digraph("digraph 3\n0 1\n1 1\n").unwrap_err();
        assert!(matches!(err, ModfError::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn duplicate_arc_names_line() {
        let err = parse_digraph("digraph 3\n0 1\n# again\n0 1\n").unwrap_err();
        assert_eq!(
            err,
            ModfError::Parse {
                line: 4,
                message: "duplicate arc 0 -> 1".into()
            }
        );
        let err = parse_graph("graph 3\n0 1\n1 0\n").unwrap_err();
        assert!(matches!(err, ModfError::Parse { line: 3, .. }));
    }

    #[test]
    fn malformed_inputs() {
        for text in [
            "",
            "# only comments\n",
            "digraph\n",
            "digraph x\n",
            "digraph 0\n",
            "tree 3\n",
            "digraph 3\n0 3\n",
            "digraph 3\n0\n",
            "digraph 3\n0 1 2\n",
            "digraph 3\n0 -1\n",
            "digraph 65\n",
        ] {
            assert!(
                matches!(parse_edge_list(text), Err(ModfError::Parse { .. })),
                "accepted {text:?}"
            );
        }
        assert!(parse_graph("digraph 2\n0 1\n").is_err());
        assert!(parse_digraph("graph 2\n0 1\n").is_err());
    }

    #[test]
    fn opposite_arcs_are_allowed() {
        let d = parse_digraph("digraph 2\n0 1\n1 0\n").unwrap();
        assert!(d.has_opposite_pair());
    }

    #[test]
    fn dot_export() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert_eq!(digraph_to_dot(&d, None), "digraph {\n  0;\n  1;\n  0 -> 1;\n}\n");
        let f = SignFunction::from_positives(2, [1]).unwrap();
        let dot = digraph_to_dot(&d, Some(&f));
        assert!(dot.contains("0 [label=\"-1\"]"));
        assert!(dot.contains("1 [label=\"+1\"]"));
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(graph_to_dot(&g, None).contains("0 -- 1;"));
    }
}
