//! Plain-text instance files.
//!
//! ```text
//! p undirected 4 4
//! e 0 1
//! e 1 2
//! e 2 3
//! e 3 0
//! t 0 2
//! ```
//!
//! A `t` line lists one terminal set; problems that need a single set use the
//! first. `r v` names the root of a directed instance. Blank lines and lines
//! starting with `#` or `c` are skipped. Edge ids follow the order of the `e` lines.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

#[derive(Clone, Debug)]
pub struct Instance {
    pub graph: Graph,
    pub terminal_sets: Vec<Vec<VertexId>>,
    pub root: Option<VertexId>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

struct Header {
    line: usize,
    directed: bool,
    n: usize,
    m: usize,
}

impl Instance {
    /// The first terminal set, or an error naming what is missing.
    pub fn terminals(&self) -> Result<&[VertexId]> {
        self.terminal_sets
            .first()
            .map(Vec::as_slice)
            .ok_or_else(|| parse_err(0, "instance has no `t` line"))
    }

    /// Renders the instance in the format accepted by [`Instance::from_str`].
    pub fn to_text(&self) -> String {
        let g = &self.graph;
        let kind = if g.is_directed() { "directed" } else { "undirected" };
        let mut out = format!("p {kind} {} {}\n", g.n(), g.m());
        for e in g.edges() {
            let _ = writeln!(out, "e {} {}", e.u, e.v);
        }
        for set in &self.terminal_sets {
            out.push('t');
            for v in set {
                let _ = write!(out, " {v}");
            }
            out.push('\n');
        }
        if let Some(r) = self.root {
            let _ = writeln!(out, "r {r}");
        }
        out
    }
}

impl FromStr for Instance {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut header: Option<Header> = None;
        let mut edges = Vec::new();
        let mut terminal_sets = Vec::new();
        let mut root = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let mut fields = raw.split_whitespace();
            let Some(tag) = fields.next() else { continue };
            if tag.starts_with('#') || tag == "c" {
                continue;
            }
            let rest: Vec<&str> = fields.collect();
            if tag == "p" {
                if header.is_some() {
                    return Err(parse_err(line, "second `p` line"));
                }
                let [kind, n, m] = rest[..] else {
                    return Err(parse_err(line, "expected `p <directed|undirected> <n> <m>`"));
                };
                let directed = match kind {
                    "directed" => true,
                    "undirected" => false,
                    other => return Err(parse_err(line, format!("unknown graph kind `{other}`"))),
                };
                header = Some(Header {
                    line,
                    directed,
                    n: number(line, n)?,
                    m: number(line, m)?,
                });
                continue;
            }
            let Some(h) = &header else {
                return Err(parse_err(line, "expected the `p` line first"));
            };
            let vertices = rest
                .iter()
                .map(|f| {
                    let v = number(line, f)?;
                    if v >= h.n {
                        Err(parse_err(line, format!("vertex {v} out of range (n = {})", h.n)))
                    } else {
                        Ok(v)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            match tag {
                "e" => {
                    let [u, v] = vertices[..] else {
                        return Err(parse_err(line, "expected `e <u> <v>`"));
                    };
                    if u == v {
                        return Err(parse_err(line, format!("self-loop at vertex {u}")));
                    }
                    edges.push((u, v));
                }
                "t" => {
                    if vertices.is_empty() {
                        return Err(parse_err(line, "empty terminal set"));
                    }
                    terminal_sets.push(vertices);
                }
                "r" => {
                    let [r] = vertices[..] else {
                        return Err(parse_err(line, "expected `r <v>`"));
                    };
                    if root.replace(r).is_some() {
                        return Err(parse_err(line, "second `r` line"));
                    }
                }
                other => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            }
        }
        let h = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `p` line"))?;
        if edges.len() != h.m {
            return Err(parse_err(h.line, format!("header declares {} edges, found {}", h.m, edges.len())));
        }
        let graph = if h.directed {
            Graph::directed(h.n, &edges)?
        } else {
            Graph::undirected(h.n, &edges)?
        };
        Ok(Self {
            graph,
            terminal_sets,
            root,
        })
    }
}

fn number(line: usize, field: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| parse_err(line, format!("`{field}` is not a non-negative integer")))
}
