//! Graphviz export of the dual graph of the boundary divisor.

use alloc::format;
use alloc::string::String;

use super::{GRestriction, Origin, ResolutionTree, TypeLabel};

pub fn dual_graph_dot(t: &ResolutionTree) -> String {
    let mut s = String::from("graph boundary {\n  node [shape=circle];\n");
    for c in &t.components {
        let name = match c.origin {
            Origin::LineAtInfinity => String::from("Linf"),
            Origin::ExceptionalOver { center } => format!("E{center}"),
        };
        let kind = match (c.type_label, &c.g_restriction) {
            (TypeLabel::NotHorizontal, GRestriction::Constant { lambda }) => lambda.key.clone(),
            (l, _) => format!("{l:?}"),
        };
        let over = match c.over {
            super::Over::Infinity => String::from("inf"),
            super::Over::BasePoint(b) => format!("b{b}"),
        };
        let mut label = format!("{name}\\n{kind} @{over}");
        if c.copies > 1 {
            label.push_str(&format!(" x{}", c.copies));
        }
        let style = if c.dicritical { ", style=bold" } else { "" };
        s.push_str(&format!("  c{} [label=\"{label}\"{style}];\n", c.id));
    }
    for (a, b) in &t.edges {
        s.push_str(&format!("  c{a} -- c{b};\n"));
    }
    s.push_str("}\n");
    s
}
