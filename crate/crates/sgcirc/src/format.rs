//! The `.sg` text format.
//!
//! UTF-8, LF lines. Optional `#` comment lines, one header `p sg <n> <m>`,
//! then exactly `m` lines `e <u> <v> <+|->` with 0-based endpoints;
//! `u == v` encodes a loop.

use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};

pub fn load<R: BufRead>(reader: R) -> Result<SignedGraph> {
    let mut graph: Option<SignedGraph> = None;
    let mut expected_m = 0usize;
    let mut seen_m = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if graph.is_some() {
                    return Err(parse_err(lineno, "duplicate header"));
                }
                if fields.len() != 4 || fields[1] != "sg" {
                    return Err(parse_err(lineno, "expected `p sg <n> <m>`"));
                }
                let n = fields[2]
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "bad vertex count"))?;
                expected_m = fields[3]
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "bad edge count"))?;
                graph = Some(SignedGraph::new(n));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| parse_err(lineno, "edge before header"))?;
                if fields.len() != 4 {
                    return Err(parse_err(lineno, "expected `e <u> <v> <+|->`"));
                }
                let u = fields[1]
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "bad endpoint"))?;
                let v = fields[2]
                    .parse::<usize>()
                    .map_err(|_| parse_err(lineno, "bad endpoint"))?;
                let sign = fields[3]
                    .chars()
                    .next()
                    .filter(|_| fields[3].len() == 1)
                    .and_then(Sign::from_symbol)
                    .ok_or_else(|| parse_err(lineno, "sign must be + or -"))?;
                seen_m += 1;
                if seen_m > expected_m {
                    return Err(parse_err(lineno, "more edges than declared"));
                }
                g.add_edge(u, v, sign)?;
            }
            other => {
                return Err(parse_err(lineno, &format!("unknown record `{other}`")));
            }
        }
    }
    let g = graph.ok_or_else(|| parse_err(0, "missing header"))?;
    if seen_m != expected_m {
        return Err(parse_err(
            0,
            &format!("declared {expected_m} edges, found {seen_m}"),
        ));
    }
    Ok(g)
}

pub fn load_str(text: &str) -> Result<SignedGraph> {
    load(text.as_bytes())
}

pub fn save<W: Write>(g: &SignedGraph, mut writer: W) -> Result<()> {
    writeln!(writer, "p sg {} {}", g.n(), g.m())?;
    for e in g.edges() {
        writeln!(writer, "e {} {} {}", e.u, e.v, e.sign.symbol())?;
    }
    Ok(())
}

pub fn save_string(g: &SignedGraph) -> String {
    let mut buf = Vec::new();
    save(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("output is ASCII")
}

fn parse_err(line: usize, msg: &str) -> Error {
    Error::Parse { line, msg: msg.to_string() }
}
