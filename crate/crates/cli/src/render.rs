//! Table, JSON-lines and DOT output for forest records.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::Serialize;

use eisenstein_forest::{ForestNode, Triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Jsonl,
    Dot,
}

/// One output row. Field order is the JSON key order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub a: i128,
    pub b: i128,
    pub c: i128,
    pub twin_c: i128,
    pub n: i128,
    pub m: i128,
    pub path: String,
    pub depth: usize,
}

impl Record {
    pub fn tree(node: &ForestNode) -> Self {
        let t = node.tree_triple;
        Record {
            a: t.a,
            b: t.b,
            c: t.c,
            twin_c: node.twin_triple.c,
            n: node.pair.n,
            m: node.pair.m,
            path: node.path.to_string(),
            depth: node.depth,
        }
    }

    /// The twin triple of `node`; `twin_c` then points back at the tree form.
    pub fn twin(node: &ForestNode) -> Self {
        Record {
            c: node.twin_triple.c,
            twin_c: node.tree_triple.c,
            ..Record::tree(node)
        }
    }

    /// `(1,1,1)` has no pair and no path; its degenerate twin side `b − c` is 0.
    pub fn equilateral() -> Self {
        let t = Triple::EQUILATERAL;
        Record {
            a: t.a,
            b: t.b,
            c: t.c,
            twin_c: 0,
            n: 0,
            m: 0,
            path: String::new(),
            depth: 0,
        }
    }
}

/// Records in emission order: optional equilateral first, then each node
/// followed by its twin when requested.
pub fn records(
    nodes: &[ForestNode],
    include_twins: bool,
    include_equilateral: bool,
) -> Vec<Record> {
    let mut out = Vec::with_capacity(nodes.len() * if include_twins { 2 } else { 1 } + 1);
    if include_equilateral {
        out.push(Record::equilateral());
    }
    for node in nodes {
        out.push(Record::tree(node));
        if include_twins {
            out.push(Record::twin(node));
        }
    }
    out
}

const COLUMNS: [&str; 8] = ["a", "b", "c", "twin_c", "n", "m", "path", "depth"];

fn cells(r: &Record) -> [String; 8] {
    [
        r.a.to_string(),
        r.b.to_string(),
        r.c.to_string(),
        r.twin_c.to_string(),
        r.n.to_string(),
        r.m.to_string(),
        r.path.clone(),
        r.depth.to_string(),
    ]
}

pub fn write_table(out: &mut impl Write, rows: &[Record]) -> io::Result<()> {
    let body: Vec<[String; 8]> = rows.iter().map(cells).collect();
    let mut widths = COLUMNS.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |out: &mut dyn Write, row: &[String]| -> io::Result<()> {
        let mut text = String::new();
        for (i, (cell, w)) in row.iter().zip(widths).enumerate() {
            if i > 0 {
                text.push_str("  ");
            }
            if COLUMNS[i] == "path" {
                text.push_str(&format!("{cell:<w$}"));
            } else {
                text.push_str(&format!("{cell:>w$}"));
            }
        }
        writeln!(out, "{}", text.trim_end())
    };
    line(out, &COLUMNS.map(String::from))?;
    for row in &body {
        line(out, row)?;
    }
    Ok(())
}

pub fn write_jsonl(out: &mut impl Write, rows: &[Record]) -> io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut *out, row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Directed graph keyed by path, labelled "(a,b,c/twin_c)", edges labelled by step.
pub fn write_dot(
    out: &mut impl Write,
    nodes: &[ForestNode],
    include_equilateral: bool,
) -> io::Result<()> {
    writeln!(out, "digraph eisenstein_forest {{")?;
    writeln!(out, "  node [shape=box];")?;
    if include_equilateral {
        writeln!(out, "  \"equilateral\" [label=\"(1,1,1)\"];")?;
    }
    for node in nodes {
        let t = node.tree_triple;
        writeln!(
            out,
            "  \"{}\" [label=\"({},{},{}/{})\"];",
            node.path, t.a, t.b, t.c, node.twin_triple.c
        )?;
        if let (Some(parent), Some(step)) = (node.path.parent(), node.path.steps.last()) {
            writeln!(
                out,
                "  \"{parent}\" -> \"{}\" [label=\"{step}\"];",
                node.path
            )?;
        }
    }
    writeln!(out, "}}")
}

#[cfg(test)]
mod tests {
    use super::*;
    use eisenstein_forest::forest::enumerate_forest;

    fn render(f: impl FnOnce(&mut Vec<u8>) -> io::Result<()>) -> String {
        let mut buf = Vec::new();
        f(&mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn json_keys_in_fixed_order() {
        let nodes = enumerate_forest(13);
        let text = render(|o| write_jsonl(o, &records(&nodes, false, false)));
        assert_eq!(
            text,
            concat!(
                "{\"a\":7,\"b\":8,\"c\":5,\"twin_c\":3,\"n\":1,\"m\":2,\"path\":\"A\",\"depth\":0}\n",
                "{\"a\":13,\"b\":15,\"c\":7,\"twin_c\":8,\"n\":1,\"m\":3,\"path\":\"B\",\"depth\":0}\n",
            )
        );
    }

    #[test]
    fn twins_and_equilateral_rows() {
        let nodes = enumerate_forest(7);
        let rows = records(&nodes, true, true);
        assert_eq!(rows.len(), 3);
        assert_eq!(rows[0], Record::equilateral());
        assert_eq!((rows[1].c, rows[1].twin_c), (5, 3));
        assert_eq!((rows[2].c, rows[2].twin_c), (3, 5));
        assert_eq!(rows[2].path, "A");
    }

    #[test]
    fn table_layout() {
        let nodes = enumerate_forest(13);
        let text = render(|o| write_table(o, &records(&nodes, false, false)));
        let want = concat!(
            " a   b  c  twin_c  n  m  path  depth\n",
            " 7   8  5       3  1  2  A         0\n",
            "13  15  7       8  1  3  B         0\n",
        );
        assert_eq!(text, want);
    }

    #[test]
    fn dot_edges_carry_step_labels() {
        let nodes = enumerate_forest(20);
        let text = render(|o| write_dot(o, &nodes, false));
        assert!(text.starts_with("digraph eisenstein_forest {\n"));
        assert!(text.contains("  \"A\" [label=\"(7,8,5/3)\"];\n"));
        assert!(text.contains("  \"A:5\" [label=\"(19,21,16/5)\"];\n"));
        assert!(text.contains("  \"A\" -> \"A:5\" [label=\"5\"];\n"));
        assert_eq!(text.matches("->").count(), 1);
        assert!(text.ends_with("}\n"));
    }
}
