//! DOT drawings of `G*_0` .. `G*_3`, one node style per vertex class.

use std::fmt::Write;

use thiserror::Error;

use crate::extremal::{build_direct, VertexClass};

/// Beyond `G*_3` (31 vertices) drawings stop being readable.
pub const MAX_DOT_T: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DotError {
    #[error("DOT export is limited to t <= {MAX_DOT_T} (got t = {0})")]
    TooLarge(u32),
}

fn style(class: VertexClass) -> &'static str {
    match class {
        VertexClass::Hub => r##"fillcolor="#1f5fbf", fontcolor="white""##,
        VertexClass::Active(_) => r##"fillcolor="#9cc3f0""##,
        VertexClass::Center => r##"fillcolor="#d0d0d0""##,
        VertexClass::Leaf => r##"fillcolor="white""##,
    }
}

pub fn export_dot(t: u32) -> Result<String, DotError> {
    if t > MAX_DOT_T {
        return Err(DotError::TooLarge(t));
    }
    let g = build_direct(t).expect("small t always builds");
    let mut out = String::new();
    let _ = writeln!(out, "graph G_star_{t} {{");
    let _ = writeln!(out, "  node [shape=circle, style=filled];");
    for v in 0..g.graph().order() {
        let a = g.address_of(v);
        let _ = writeln!(
            out,
            "  {v} [label=\"{v}\", tooltip=\"{a}\", {}];",
            style(a.class)
        );
    }
    for (u, v) in g.graph().edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    Ok(out)
}
