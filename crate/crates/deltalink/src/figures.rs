//! Pathway graphs of the published figures.

use std::collections::BTreeMap;

use deltalink_core::analysis::{published_layout, table3_links, MoveClass, PathwayGraph, Which};
use deltalink_core::catalog::{is_split_name, mirror_name};
use deltalink_core::Catalog;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Figure {
    /// Self delta-moves in the (0, ±1) family.
    Fig3,
    /// Self delta-moves in the (0, ±2) family.
    Fig4,
    /// Mixed delta-moves among the splitting-table links.
    Fig9,
}

impl Figure {
    pub fn parse(text: &str) -> Option<Figure> {
        match text {
            "fig3" => Some(Figure::Fig3),
            "fig4" => Some(Figure::Fig4),
            "fig9" => Some(Figure::Fig9),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Figure::Fig3 => "fig3",
            Figure::Fig4 => "fig4",
            Figure::Fig9 => "fig9",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FigureEdge {
    pub a: String,
    pub b: String,
    pub class: MoveClass,
    /// No replayable witness backs this edge.
    pub cited: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FigureGraph {
    pub name: String,
    pub nodes: Vec<String>,
    pub edges: Vec<FigureEdge>,
}

fn labels(which: Which) -> Vec<String> {
    let (rows, cols, _) = published_layout(which).unwrap_or_default();
    let mut out: Vec<String> = Vec::new();
    for n in rows.into_iter().chain(cols) {
        if !out.iter().any(|o| o == n) {
            out.push(n.to_string());
        }
    }
    out
}

/// Name up to mirror image, preferring the form without an `m`.
fn unmirrored(name: &str) -> String {
    let m = mirror_name(name);
    if m.len() < name.len() {
        m
    } else {
        name.to_string()
    }
}

/// Unit edges of `class` whose ends map into `nodes` under `map`.
fn unit_edges(
    cat: &Catalog,
    graph: &PathwayGraph,
    class: MoveClass,
    keep: impl Fn(&str) -> Option<String>,
) -> Vec<FigureEdge> {
    let mut found: BTreeMap<(String, String), bool> = BTreeMap::new();
    for e in graph
        .edges()
        .iter()
        .filter(|e| e.length == 1 && e.class == class)
    {
        for (a, b) in [
            (e.from.clone(), e.to.clone()),
            (mirror_name(&e.from), mirror_name(&e.to)),
        ] {
            let (Some(a), Some(b)) = (keep(cat.canonical(&a)), keep(cat.canonical(&b))) else {
                continue;
            };
            if a == b {
                continue;
            }
            let key = if a < b { (a, b) } else { (b, a) };
            let cited = found.get(&key).copied().unwrap_or(true) && e.is_cited();
            found.insert(key, cited);
        }
    }
    found
        .into_iter()
        .map(|((a, b), cited)| FigureEdge { a, b, class, cited })
        .collect()
}

pub fn figure_graph(fig: Figure, cat: &Catalog, graph: &PathwayGraph) -> FigureGraph {
    match fig {
        Figure::Fig3 | Figure::Fig4 => {
            let nodes = labels(if fig == Figure::Fig3 {
                Which::Table1
            } else {
                Which::Table2
            });
            let edges = unit_edges(cat, graph, MoveClass::SelfDelta, |n| {
                nodes.iter().find(|x| *x == n).cloned()
            });
            FigureGraph {
                name: fig.name().into(),
                nodes,
                edges,
            }
        }
        Figure::Fig9 => {
            let links: Vec<String> = table3_links(cat).into_iter().map(String::from).collect();
            let keep = |n: &str| {
                let base = unmirrored(n);
                (links.contains(&base) || is_split_name(&base)).then_some(base)
            };
            let edges = unit_edges(cat, graph, MoveClass::Mixed, keep);
            let mut nodes = links.clone();
            for e in &edges {
                for n in [&e.a, &e.b] {
                    if !nodes.contains(n) {
                        nodes.push(n.clone());
                    }
                }
            }
            FigureGraph {
                name: fig.name().into(),
                nodes,
                edges,
            }
        }
    }
}
