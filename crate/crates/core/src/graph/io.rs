//! Edge-list text format.
//!
//! ```text
//! # comment
//! n 5          optional vertex count
//! loops        optional flag permitting self-loops
//! 0 1
//! 1 2
//! ```

use std::fmt::Write as _;
use std::io::Read;

use super::Graph;
use crate::error::{Error, Result};

pub fn load_edge_list<R: Read>(mut reader: R) -> Result<Graph> {
    let mut text = String::new();
    reader.read_to_string(&mut text)?;
    parse_edge_list(&text)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n: Option<usize> = None;
    let mut loops = false;
    let mut edges = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match tokens.as_slice() {
            ["loops"] => loops = true,
            ["n", count] => {
                if declared_n.is_some() {
                    return Err(parse_err("duplicate `n` header".into()));
                }
                let count = count
                    .parse::<usize>()
                    .map_err(|_| parse_err(format!("bad vertex count `{count}`")))?;
                declared_n = Some(count);
            }
            [a, b] => {
                let parse = |t: &str| {
                    t.parse::<usize>()
                        .map_err(|_| parse_err(format!("bad vertex id `{t}`")))
                };
                edges.push((parse(a)?, parse(b)?, line_no));
            }
            _ => return Err(parse_err(format!("expected `u w`, got `{line}`"))),
        }
    }

    let needed = edges
        .iter()
        .map(|&(a, b, _)| a.max(b) + 1)
        .max()
        .unwrap_or(0);
    let n = match declared_n {
        Some(n) if n < needed => {
            return Err(Error::validation(format!(
                "header declares {n} vertices but ids reach {}",
                needed - 1
            )))
        }
        Some(n) => n,
        None => needed,
    };
    if !loops {
        if let Some(&(a, _, line)) = edges.iter().find(|&&(a, b, _)| a == b) {
            return Err(Error::validation(format!(
                "line {line}: self-loop at {a} without `loops` header"
            )));
        }
    }
    let pairs = edges.into_iter().map(|(a, b, _)| (a, b));
    if loops {
        Graph::with_loops(n, pairs)
    } else {
        Graph::new(n, pairs)
    }
}

/// Canonical serialization: header, then edges in lexicographic order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n {}", g.n());
    if g.loops_allowed() {
        out.push_str("loops\n");
    }
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.w);
    }
    out
}
