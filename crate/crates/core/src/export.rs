//! Hasse diagrams and quivers as DOT or JSON. Output is deterministic.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::quiver::{Quiver, VertexSet};
use crate::space::Space;
use crate::weyl::ClassId;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(Error::Parse(format!("unknown format `{s}` (dot, json)"))),
        }
    }
}

/// What to draw.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Hasse,
    /// `Q_X`, optionally with the ideal of a class marked.
    Quiver(Option<ClassId>),
    /// `Q_{F_d}` with `Q_{Z_d}` marked.
    QuiverF(usize),
}

pub fn export(space: &Space, target: Target, format: Format) -> Result<String> {
    match (target, format) {
        (Target::Hasse, Format::Dot) => Ok(hasse_dot(space)),
        (Target::Hasse, Format::Json) => Ok(pretty(&hasse_json(space))),
        (Target::Quiver(w), f) => {
            let q = space.schubert_quiver().quiver();
            let marked = w.map(|w| space.ideal(w).clone());
            let title = match w {
                Some(w) => format!("Q_X of {}, ideal of {}", space.label(), space.name(w)),
                None => format!("Q_X of {}", space.label()),
            };
            Ok(match f {
                Format::Dot => quiver_dot(q, marked.as_ref(), &title),
                Format::Json => pretty(&quiver_json(q, marked.as_ref(), &title)),
            })
        }
        (Target::QuiverF(d), f) => {
            if d == 0 {
                return Err(Error::Parse("quiver-Fd needs d >= 1".into()));
            }
            let g = space.geometry(d)?;
            let title = format!("Q_F{d} of {}, Z_{d} marked", space.label());
            let q = g.quiver_f();
            Ok(match f {
                Format::Dot => quiver_dot(q, Some(g.z_in_f()), &title),
                Format::Json => pretty(&quiver_json(q, Some(g.z_in_f()), &title)),
            })
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// One node per class, ranked by codimension; edges go from a class to
/// the classes of its Chevalley product, labelled when the coefficient
/// is not 1.
pub fn hasse_dot(space: &Space) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph hasse {{");
    let _ = writeln!(out, "  label={};", quote(&space.label()));
    let _ = writeln!(out, "  rankdir=LR;");
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    for c in 0..=space.dimension() {
        let names: Vec<String> = space
            .cosets()
            .with_codim(c)
            .map(|w| quote(space.name(w)))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {}; }}", names.join("; "));
    }
    let mut ids: Vec<ClassId> = (0..space.len()).collect();
    ids.sort_by_key(|&w| (space.codim(w), space.name(w).to_string()));
    for w in ids {
        for (v, m) in space.chevalley(w) {
            let label = if m == 1 {
                String::new()
            } else {
                format!(" [label=\"{m}\"]")
            };
            let _ = writeln!(out, "  {} -> {}{label};", quote(space.name(w)), quote(space.name(v)));
        }
    }
    out.push_str("}\n");
    out
}

pub fn hasse_json(space: &Space) -> Value {
    let mut ids: Vec<ClassId> = (0..space.len()).collect();
    ids.sort_by_key(|&w| (space.codim(w), space.name(w).to_string()));
    let nodes: Vec<Value> = ids
        .iter()
        .map(|&w| {
            let c = space.cosets().get(w);
            json!({
                "name": space.name(w),
                "codim": space.codim(w),
                "dimension": c.length,
                "word": c.reduced_word.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "orbit_weight": c.orbit_weight,
            })
        })
        .collect();
    let edges: Vec<Value> = ids
        .iter()
        .flat_map(|&w| {
            space.chevalley(w).into_iter().map(move |(v, m)| {
                json!({"from": space.name(w), "to": space.name(v), "coefficient": m})
            })
        })
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "space": space.label(),
        "nodes": nodes,
        "edges": edges,
    })
}

fn vertex_name(q: &Quiver, p: usize) -> String {
    let (b, k) = q.label(p);
    format!("{}.{}", b + 1, k)
}

/// Arrows point down. Vertices in `marked` are drawn solid black, the
/// others dashed red.
pub fn quiver_dot(q: &Quiver, marked: Option<&VertexSet>, title: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph quiver {{");
    let _ = writeln!(out, "  label={};", quote(title));
    let _ = writeln!(out, "  node [shape=circle, fontsize=10];");
    for p in 0..q.len() {
        let style = match marked {
            Some(m) if !m.contains(p) => ", color=red, fontcolor=red, style=dashed",
            _ => "",
        };
        let _ = writeln!(out, "  {} [label={}{style}];", quote(&vertex_name(q, p)), quote(&vertex_name(q, p)));
    }
    let mut arrows: Vec<(String, String)> = q
        .arrows()
        .iter()
        .map(|&(a, b)| (vertex_name(q, a), vertex_name(q, b)))
        .collect();
    arrows.sort();
    for (a, b) in arrows {
        let _ = writeln!(out, "  {} -> {};", quote(&a), quote(&b));
    }
    out.push_str("}\n");
    out
}

pub fn quiver_json(q: &Quiver, marked: Option<&VertexSet>, title: &str) -> Value {
    let vertices: Vec<Value> = (0..q.len())
        .map(|p| {
            let (b, k) = q.label(p);
            let mut v = json!({"letter": b + 1, "occurrence": k, "position": p});
            if let Some(m) = marked {
                v["marked"] = json!(m.contains(p));
            }
            v
        })
        .collect();
    let arrows: Vec<Value> = q
        .labelled_arrows()
        .into_iter()
        .map(|((b, i), (c, j))| json!({"from": [b + 1, i], "to": [c + 1, j]}))
        .collect();
    json!({
        "schema_version": SCHEMA_VERSION,
        "title": title,
        "word": q.source_word().iter().map(|i| i + 1).collect::<Vec<_>>(),
        "vertices": vertices,
        "arrows": arrows,
    })
}
