//! Hasse diagrams of submodule lattices in Graphviz DOT.

use crate::algmod::Submodule;
use crate::latt::cover_relation;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per element in the given order, bottom to top, labelled by
/// dimension and alias; one edge per cover `lower -> upper`.
pub fn lattice_dot(
    name: &str,
    elems: &[Submodule],
    alias: impl Fn(&Submodule) -> Option<String>,
) -> String {
    let mut out = format!(
        "digraph {} {{\n  rankdir=BT;\n  node [shape=box];\n",
        quote(name)
    );
    for (i, s) in elems.iter().enumerate() {
        let label = match alias(s) {
            Some(a) => format!("{a} (dim {})", s.dim()),
            None => format!("dim {}", s.dim()),
        };
        out.push_str(&format!("  n{i} [label={}];\n", quote(&label)));
    }
    for (lo, hi) in cover_relation(elems) {
        out.push_str(&format!("  n{lo} -> n{hi};\n"));
    }
    out.push_str("}\n");
    out
}
