use std::fmt::Write as _;

use crate::model::{Instance, Orientation, OrientationError};

/// Graphviz text. 1-edges are bold blue, 0-edges dashed red, other values
/// plain and labeled. With an orientation every edge points at its receiver.
pub fn export_dot(inst: &Instance, o: Option<&Orientation>) -> Result<String, OrientationError> {
    if let Some(o) = o {
        o.check(inst)?;
    }
    let (kind, arrow) = if o.is_some() { ("digraph", "->") } else { ("graph", "--") };
    let mut s = format!("{kind} efx {{\n  node [shape=circle];\n");
    for v in 0..inst.n() {
        let _ = writeln!(s, "  {v};");
    }
    for (e, edge) in inst.edges().iter().enumerate() {
        let (a, b) = match o {
            Some(o) => (o.giver(inst, e), o.receiver(e)),
            None => (edge.u, edge.v),
        };
        let style = if inst.is_one(e) {
            "penwidth=3, color=blue".to_string()
        } else if inst.is_zero(e) {
            "style=dashed, color=red".to_string()
        } else {
            format!("label=\"{}\"", edge.value)
        };
        let _ = writeln!(s, "  {a} {arrow} {b} [{style}];");
    }
    s.push_str("}\n");
    Ok(s)
}
