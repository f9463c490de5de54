//! CSV, Markdown and DOT output.

use std::fmt::Write as _;

use deltalink_core::analysis::{CellStatus, TableModel};

use crate::figures::FigureGraph;

/// One line per cell: `row,column,printed,computed,status,note`.
pub fn table_csv(model: &TableModel) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let to_err = |e: csv::Error| e.to_string();
    let mut write = || -> Result<(), String> {
        w.write_record(["row", "column", "printed", "computed", "status", "note"])
            .map_err(to_err)?;
        for (row, c) in model.cells() {
            let (printed, computed) = (c.printed.to_string(), c.computed.to_string());
            w.write_record([
                row,
                &c.column,
                &printed,
                &computed,
                c.status.name(),
                c.note.as_deref().unwrap_or(""),
            ])
            .map_err(to_err)?;
        }
        Ok(())
    };
    write().expect("writing to memory");
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|").replace('*', "\\*")
}

/// Grid of computed values in the published layout, then the cells that
/// differ from the published ones.
pub fn table_markdown(model: &TableModel) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "### {} {}\n", model.which.name(), model.title);
    let _ = writeln!(
        out,
        "| | {} |",
        model
            .columns
            .iter()
            .map(|c| md_escape(c))
            .collect::<Vec<_>>()
            .join(" | ")
    );
    let _ = writeln!(out, "|---|{}", "---|".repeat(model.columns.len()));
    for row in &model.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| match c.status {
                CellStatus::Unpublished if c.computed.to_string() == "-" => "-".to_string(),
                CellStatus::Input => md_escape(&c.printed.to_string()),
                _ => md_escape(&c.computed.to_string()),
            })
            .collect();
        let _ = writeln!(out, "| {} | {} |", md_escape(&row.label), cells.join(" | "));
    }
    let summary: Vec<String> = model
        .summary()
        .iter()
        .map(|(s, n)| format!("{s} {n}"))
        .collect();
    let _ = writeln!(out, "\nCells: {}\n", summary.join(", "));
    let diffs: Vec<_> = model
        .cells()
        .filter(|(_, c)| {
            !matches!(
                c.status,
                CellStatus::Match | CellStatus::Input | CellStatus::Unpublished
            )
        })
        .collect();
    if diffs.is_empty() {
        out.push_str("Every published cell is reproduced.\n");
        return out;
    }
    out.push_str("| row | column | published | computed | status |\n|---|---|---|---|---|\n");
    for (row, c) in diffs {
        let computed = match &c.note {
            Some(n) => format!("{} ({n})", c.computed),
            None => c.computed.to_string(),
        };
        let _ = writeln!(
            out,
            "| {} | {} | {} | {} | {} |",
            md_escape(row),
            md_escape(&c.column),
            md_escape(&c.printed.to_string()),
            md_escape(&computed),
            c.status
        );
    }
    out
}

fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Undirected DOT graph; every edge carries a `kind` attribute.
pub fn graph_dot(g: &FigureGraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", dot_id(&g.name));
    for n in &g.nodes {
        let _ = writeln!(out, "  {};", dot_id(n));
    }
    for e in &g.edges {
        let style = if e.cited { ", style=dashed" } else { "" };
        let _ = writeln!(
            out,
            "  {} -- {} [kind={}{style}];",
            dot_id(&e.a),
            dot_id(&e.b),
            dot_id(e.class.name())
        );
    }
    out.push_str("}\n");
    out
}
