//! Plain-text exports.
//!
//! Graphs and cuts are edge lists, one `u v` pair per line with `u < v` in
//! ascending order, under a single header line:
//!
//! ```text
//! # hl-graph n=3 vertices=8 edges=12
//! # hl-cut n=8 g=16 size=96
//! ```
//!
//! Partitions list one block per line as space-separated labels, under
//! `# partition blocks=<k> cross=<value>`.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io::{BufRead, Write};

use hlnet_core::oracle::PartitionWitness;
use hlnet_core::{Edge, EdgeSet, Graph, VertexId, VertexSet};

use crate::error::{Error, Result};

pub fn write_graph<W: Write>(graph: &Graph, mut out: W) -> Result<()> {
    writeln!(
        out,
        "# hl-graph n={} vertices={} edges={}",
        graph.dim(),
        graph.vertex_count(),
        graph.edge_count()
    )?;
    write_pairs(graph.edges(), &mut out)
}

pub fn write_cut<W: Write>(dim: u32, g: u64, cut: &EdgeSet, mut out: W) -> Result<()> {
    writeln!(out, "# hl-cut n={dim} g={g} size={}", cut.len())?;
    write_pairs(cut.iter(), &mut out)
}

fn write_pairs<W: Write>(edges: impl Iterator<Item = Edge>, out: &mut W) -> Result<()> {
    let mut buf = String::new();
    for e in edges {
        let _ = writeln!(buf, "{} {}", e.u(), e.v());
        if buf.len() > 1 << 16 {
            out.write_all(buf.as_bytes())?;
            buf.clear();
        }
    }
    out.write_all(buf.as_bytes())?;
    Ok(())
}

pub fn write_partition<W: Write>(p: &PartitionWitness, mut out: W) -> Result<()> {
    writeln!(out, "# partition blocks={} cross={}", p.blocks.len(), p.cross_edges.len())?;
    for block in &p.blocks {
        let labels: Vec<String> = block.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", labels.join(" "))?;
    }
    Ok(())
}

/// Header keys of the form `key=value` after the `# <kind>` tag.
fn parse_header(line: &str, kind: &str) -> Result<BTreeMap<String, u64>> {
    let bad = |m: String| Error::Format { line: 1, message: m };
    let rest = line
        .strip_prefix("# ")
        .and_then(|r| r.strip_prefix(kind))
        .ok_or_else(|| bad(format!("expected header \"# {kind} ...\", found {line:?}")))?;
    rest.split_whitespace()
        .map(|kv| {
            let (k, v) = kv.split_once('=').ok_or_else(|| bad(format!("malformed header field {kv:?}")))?;
            let v = v.parse().map_err(|_| bad(format!("header field {k} is not a non-negative integer")))?;
            Ok((k.to_string(), v))
        })
        .collect()
}

fn header_field(fields: &BTreeMap<String, u64>, key: &str) -> Result<u64> {
    fields
        .get(key)
        .copied()
        .ok_or_else(|| Error::Format { line: 1, message: format!("header lacks {key}=") })
}

fn read_pairs<R: BufRead>(lines: std::io::Lines<R>) -> Result<Vec<Edge>> {
    let mut edges = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        let lineno = i + 2;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Format { line: lineno, message: format!("expected \"u v\", found {trimmed:?}") });
        };
        let parse = |s: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::Format { line: lineno, message: format!("{s:?} is not a vertex label") })
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u >= v {
            return Err(Error::Format { line: lineno, message: format!("pair ({u}, {v}) must have u < v") });
        }
        edges.push(Edge::new(u, v));
    }
    Ok(edges)
}

fn first_line<R: BufRead>(lines: &mut std::io::Lines<R>) -> Result<String> {
    lines
        .next()
        .transpose()?
        .ok_or_else(|| Error::Format { line: 1, message: "empty input".into() })
}

pub fn read_graph<R: BufRead>(input: R) -> Result<Graph> {
    let mut lines = input.lines();
    let header = parse_header(&first_line(&mut lines)?, "hl-graph")?;
    let n = header_field(&header, "n")?;
    let dim = u32::try_from(n).map_err(|_| Error::Format { line: 1, message: "n out of range".into() })?;
    let edges = read_pairs(lines)?;
    let graph = Graph::from_edges(dim, edges)?;
    for (key, actual) in [("vertices", graph.vertex_count() as u64), ("edges", graph.edge_count())] {
        if let Some(&declared) = header.get(key) {
            if declared != actual {
                return Err(Error::Format { line: 1, message: format!("header declares {key}={declared}, found {actual}") });
            }
        }
    }
    Ok(graph)
}

/// A cut file: its declared dimension, target `g`, and edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutFile {
    pub dim: u32,
    pub g: u64,
    pub edges: EdgeSet,
}

pub fn read_cut<R: BufRead>(input: R) -> Result<CutFile> {
    let mut lines = input.lines();
    let header = parse_header(&first_line(&mut lines)?, "hl-cut")?;
    let dim = header_field(&header, "n")? as u32;
    let g = header_field(&header, "g")?;
    let edges: EdgeSet = read_pairs(lines)?.into_iter().collect();
    if let Some(&size) = header.get("size") {
        if size != edges.len() as u64 {
            return Err(Error::Format { line: 1, message: format!("header declares size={size}, found {} edges", edges.len()) });
        }
    }
    Ok(CutFile { dim, g, edges })
}

pub fn read_partition<R: BufRead>(input: R) -> Result<Vec<VertexSet>> {
    let mut lines = input.lines();
    let header = parse_header(&first_line(&mut lines)?, "partition")?;
    let blocks_declared = header_field(&header, "blocks")?;
    let mut blocks = Vec::new();
    for (i, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let block = line
            .split_whitespace()
            .map(|s| {
                s.parse::<u32>()
                    .map(VertexId)
                    .map_err(|_| Error::Format { line: i + 2, message: format!("{s:?} is not a vertex label") })
            })
            .collect::<Result<VertexSet>>()?;
        blocks.push(block);
    }
    if blocks.len() as u64 != blocks_declared {
        return Err(Error::Format { line: 1, message: format!("header declares blocks={blocks_declared}, found {}", blocks.len()) });
    }
    Ok(blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use hlnet_core::oracle::components_after;
    use hlnet_core::{build_component_cut, hypercube, materialize, random_hl};

    #[test]
    fn q2_export_is_exact() {
        let g = materialize(&hypercube(2).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "# hl-graph n=2 vertices=4 edges=4\n0 1\n0 2\n1 3\n2 3\n");
    }

    #[test]
    fn graph_round_trip() {
        let g = materialize(&random_hl(6, 21).unwrap()).unwrap();
        let mut buf = Vec::new();
        write_graph(&g, &mut buf).unwrap();
        let back = read_graph(buf.as_slice()).unwrap();
        assert_eq!(back.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn cut_round_trip() {
        let r = hypercube(8).unwrap();
        let cut = build_component_cut(&r, 16).unwrap();
        let mut buf = Vec::new();
        write_cut(8, 16, &cut, &mut buf).unwrap();
        assert!(buf.starts_with(b"# hl-cut n=8 g=16 size=96\n"));
        assert_eq!(read_cut(buf.as_slice()).unwrap(), CutFile { dim: 8, g: 16, edges: cut });
    }

    #[test]
    fn partition_export() {
        let g = materialize(&hypercube(2).unwrap()).unwrap();
        let cut: EdgeSet = [Edge::new(0u32, 1u32), Edge::new(0u32, 2u32)].into_iter().collect();
        let p = components_after(&g, &cut).unwrap();
        let mut buf = Vec::new();
        write_partition(&p, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf.clone()).unwrap(), "# partition blocks=2 cross=2\n0\n1 2 3\n");
        assert_eq!(read_partition(buf.as_slice()).unwrap(), p.blocks);
    }

    #[test]
    fn rejects_malformed_lists() {
        let bad_header = "# hl-grph n=2\n0 1\n";
        assert!(matches!(read_graph(bad_header.as_bytes()), Err(Error::Format { line: 1, .. })));
        let reversed = "# hl-graph n=1 vertices=2 edges=1\n1 0\n";
        assert!(matches!(read_graph(reversed.as_bytes()), Err(Error::Format { line: 2, .. })));
        let wrong_count = "# hl-graph n=1 vertices=2 edges=5\n0 1\n";
        assert!(matches!(read_graph(wrong_count.as_bytes()), Err(Error::Format { line: 1, .. })));
        let irregular = "# hl-graph n=2 vertices=4 edges=3\n0 1\n1 2\n2 3\n";
        assert!(matches!(read_graph(irregular.as_bytes()), Err(Error::Core(_))));
        let bad_size = "# hl-cut n=2 g=1 size=3\n0 1\n";
        assert!(matches!(read_cut(bad_size.as_bytes()), Err(Error::Format { line: 1, .. })));
        let junk = "# hl-cut n=2 g=1 size=1\n0 x\n";
        assert!(matches!(read_cut(junk.as_bytes()), Err(Error::Format { line: 2, .. })));
    }
}
