//! Edge-list text format: a header line `n m`, then `m` lines `u v` with
//! 0-based endpoints.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let (n, m) = parse_pair(header, 1)?;
    let mut g = Graph::new(n);
    let mut count = 0;
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let (u, v) = parse_pair(line, lineno)?;
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(Error::Parse(format!("line {lineno}: duplicate edge {u} {v}"))),
            Err(e) => return Err(Error::Parse(format!("line {lineno}: {e}"))),
        }
        count += 1;
    }
    if count != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {count}")));
    }
    Ok(g)
}

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let [a, b] = fields[..] else {
        return Err(Error::Parse(format!("line {lineno}: expected two integers")));
    };
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {lineno}: bad integer {s:?}")))
    };
    Ok((num(a)?, num(b)?))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.lo(), e.hi()));
    }
    out
}
