//! DOT (Graphviz) rendering for Hasse diagrams and digraphs.

use crate::birkhoff::Digraph;
use crate::error::{Error, Result};
use crate::factors::{CoverInterval, FactorMap};
use crate::lattice::Lattice;
use crate::limits;

/// Edge color palette for factor classes, cycled.
const PALETTE: [&str; 10] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
    "#bcbd22", "#7f7f7f",
];

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram: edges drawn upward (lower at the bottom), ranks by height,
/// arrowheads suppressed. Pass a factor map to color every cover edge by its
/// class.
pub fn lattice_dot(lat: &Lattice, classes: Option<&FactorMap>) -> Result<String> {
    if lat.n() > limits::MAX_DOT_NODES {
        return Err(Error::SizeLimit {
            what: "DOT node count".to_string(),
            limit: limits::MAX_DOT_NODES,
        });
    }
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [dir=none];\n");
    let max_height = (0..lat.n()).map(|x| lat.height(x)).max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<usize> = (0..lat.n()).filter(|&x| lat.height(x) == h).collect();
        if level.is_empty() {
            continue;
        }
        out.push_str("  { rank=same;");
        for x in level {
            out.push_str(&format!(" n{x};"));
        }
        out.push_str(" }\n");
    }
    for x in 0..lat.n() {
        out.push_str(&format!("  n{x} [label=\"{}\"];\n", escape(lat.name(x))));
    }
    for &(lo, hi) in lat.covers() {
        match classes.and_then(|fm| fm.class_of(CoverInterval { lower: lo, upper: hi })) {
            Some(c) => out.push_str(&format!(
                "  n{lo} -> n{hi} [color=\"{}\"];\n",
                PALETTE[c % PALETTE.len()]
            )),
            None => out.push_str(&format!("  n{lo} -> n{hi};\n")),
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// A directed graph with its edge directions shown.
pub fn digraph_dot(g: &Digraph) -> Result<String> {
    if g.n() > limits::MAX_DOT_NODES {
        return Err(Error::SizeLimit {
            what: "DOT node count".to_string(),
            limit: limits::MAX_DOT_NODES,
        });
    }
    let mut out = String::from("digraph {\n  node [shape=ellipse];\n");
    for v in 0..g.n() {
        out.push_str(&format!("  n{v} [label=\"{}\"];\n", escape(g.name(v))));
    }
    for (s, t) in g.edges() {
        out.push_str(&format!("  n{s} -> n{t};\n"));
    }
    out.push_str("}\n");
    Ok(out)
}
