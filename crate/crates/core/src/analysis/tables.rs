use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::bounds::DistanceBound;
use super::graph::PathwayGraph;
use super::props::{component_names, distance, split_bounds, sum_component_u, AnalysisError};
use super::MoveClass;
use crate::catalog::{Catalog, KnownRange};
use crate::invariants::{arf, component_arfs, ConwayEngine};

/// Published tables that can be reproduced.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Which {
    Table1,
    Table2,
    Table3,
    Fig2,
}

impl Which {
    pub const ALL: [Which; 4] = [Which::Fig2, Which::Table1, Which::Table2, Which::Table3];

    pub fn parse(text: &str) -> Option<Which> {
        match text {
            "tab1" | "table1" => Some(Which::Table1),
            "tab2" | "table2" => Some(Which::Table2),
            "tab3" | "table3" => Some(Which::Table3),
            "fig2" => Some(Which::Fig2),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Which::Table1 => "tab1",
            Which::Table2 => "tab2",
            Which::Table3 => "tab3",
            Which::Fig2 => "fig2",
        }
    }
}

/// A published cell value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Printed {
    Exact(u32),
    /// `n*`: a pathway of length `n` is known.
    UpperBound(u32),
    Range(KnownRange),
    /// `a-b` in a distance table; parity of `a` is implied but not stated.
    TentativeRange {
        lower: u32,
        upper: u32,
    },
    Text(String),
    Blank,
}

impl Printed {
    /// Reads distance-table notation: `-`, `n`, `n*`, `a-b`.
    pub fn parse_distance(text: &str) -> Printed {
        let t = text.trim();
        if t == "-" || t.is_empty() {
            return Printed::Blank;
        }
        if let Some(n) = t.strip_suffix('*').and_then(|n| n.trim().parse().ok()) {
            return Printed::UpperBound(n);
        }
        if let Ok(n) = t.parse() {
            return Printed::Exact(n);
        }
        if let Some((a, b)) = t.split_once('-') {
            if let (Ok(lower), Ok(upper)) = (a.trim().parse(), b.trim().parse()) {
                return Printed::TentativeRange { lower, upper };
            }
        }
        Printed::Text(t.to_string())
    }

    /// Values the cell allows, for `n < 64`; `None` for non-numeric cells.
    fn admitted(&self, distinct: bool) -> Option<u64> {
        let lo = u32::from(distinct);
        let set =
            |f: &dyn Fn(u32) -> bool| (0..64u32).filter(|&n| f(n)).fold(0u64, |m, n| m | 1 << n);
        match self {
            Printed::Exact(v) => Some(set(&|n| n == *v)),
            Printed::UpperBound(v) => Some(set(&|n| n >= lo && n <= *v)),
            Printed::Range(r) => Some(set(&|n| r.admits(n))),
            Printed::TentativeRange { lower, upper } => {
                Some(set(&|n| n >= *lower && n <= *upper && n % 2 == lower % 2))
            }
            Printed::Text(_) | Printed::Blank => None,
        }
    }
}

impl fmt::Display for Printed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Printed::Exact(v) => write!(f, "{v}"),
            Printed::UpperBound(v) => write!(f, "{v}*"),
            Printed::Range(r) => write!(f, "{r}"),
            Printed::TentativeRange { lower, upper } => write!(f, "{lower}-{upper}"),
            Printed::Text(t) => f.write_str(t),
            Printed::Blank => f.write_str("-"),
        }
    }
}

fn bound_set(b: &DistanceBound) -> u64 {
    (0..64u32)
        .filter(|&n| b.admits(n))
        .fold(0u64, |m, n| m | 1 << n)
}

/// How a computed cell relates to the published one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CellStatus {
    /// Same set of admitted values.
    Match,
    /// Everything published is admitted; the computation knows less.
    Consistent,
    /// The computation admits a strict subset of the published values.
    Improved,
    /// Both admit some common value but neither contains the other.
    Overlap,
    /// No value is admitted by both.
    Conflict,
    /// Literature input echoed without computation.
    Input,
    /// Nothing printed to compare with.
    Unpublished,
    /// The computation failed.
    Error,
}

impl CellStatus {
    pub fn name(self) -> &'static str {
        match self {
            CellStatus::Match => "match",
            CellStatus::Consistent => "consistent",
            CellStatus::Improved => "improved",
            CellStatus::Overlap => "overlap",
            CellStatus::Conflict => "conflict",
            CellStatus::Input => "input",
            CellStatus::Unpublished => "unpublished",
            CellStatus::Error => "error",
        }
    }

    /// True when the computation contains every published value.
    pub fn contains_printed(self) -> bool {
        matches!(self, CellStatus::Match | CellStatus::Consistent)
    }
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn compare(printed: &Printed, computed: &DistanceBound, distinct: bool) -> CellStatus {
    let Some(p) = printed.admitted(distinct) else {
        return CellStatus::Unpublished;
    };
    let c = bound_set(computed);
    if p == c {
        CellStatus::Match
    } else if p & c == p {
        CellStatus::Consistent
    } else if p & c == c {
        CellStatus::Improved
    } else if p & c != 0 {
        CellStatus::Overlap
    } else {
        CellStatus::Conflict
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Computed {
    Bound(DistanceBound),
    Text(String),
    None,
}

impl fmt::Display for Computed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Computed::Bound(b) => render_bound(b, f),
            Computed::Text(t) => f.write_str(t),
            Computed::None => f.write_str("-"),
        }
    }
}

/// Table notation: `n` when exact, `n*` for an upper bound with lower bound 1,
/// otherwise the interval with its parity.
fn render_bound(b: &DistanceBound, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if let Some(v) = b.value() {
        return write!(f, "{v}");
    }
    match (b.upper, b.parity) {
        (Some(u), Some(p)) => {
            let lo = if b.lower % 2 == u32::from(p) {
                b.lower
            } else {
                b.lower + 1
            };
            let vals: Vec<String> = (lo..=u).step_by(2).map(|n| n.to_string()).collect();
            if vals.len() <= 2 {
                f.write_str(&vals.join(" or "))
            } else {
                write!(f, "{lo}-{u} ({})", if p == 0 { "even" } else { "odd" })
            }
        }
        (Some(u), None) => write!(f, "{} - {u}", b.lower),
        (None, Some(p)) => write!(f, ">={} ({})", b.lower, if p == 0 { "even" } else { "odd" }),
        (None, None) => write!(f, ">={}", b.lower),
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct TableCell {
    pub column: String,
    pub printed: Printed,
    pub computed: Computed,
    pub status: CellStatus,
    pub note: Option<String>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct TableRow {
    pub label: String,
    pub cells: Vec<TableCell>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct TableModel {
    pub which: Which,
    pub title: String,
    pub columns: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl TableModel {
    pub fn cell(&self, row: &str, column: &str) -> Option<&TableCell> {
        self.rows
            .iter()
            .find(|r| r.label == row)?
            .cells
            .iter()
            .find(|c| c.column == column)
    }

    pub fn cells(&self) -> impl Iterator<Item = (&str, &TableCell)> {
        self.rows
            .iter()
            .flat_map(|r| r.cells.iter().map(move |c| (r.label.as_str(), c)))
    }

    /// Cells per status, in `CellStatus` order.
    pub fn summary(&self) -> Vec<(CellStatus, usize)> {
        let mut out: Vec<(CellStatus, usize)> = Vec::new();
        for (_, c) in self.cells() {
            match out.iter_mut().find(|(s, _)| *s == c.status) {
                Some((_, n)) => *n += 1,
                None => out.push((c.status, 1)),
            }
        }
        out.sort();
        out
    }
}

const FIG2_LABELS: [&str; 3] = ["Trivial", "L8a2", "L8a4"];
const FIG2_CELLS: [&str; 9] = ["0", "1", "1", "-", "0", "2", "-", "-", "0"];

const TABLE1_ROWS: [&str; 10] = [
    "mL5a1", "L7n2", "mL8n2", "L9n3", "L7a1", "L9n8", "L9a3", "L8a1", "L9a1", "L9n6",
];
const TABLE1_COLUMNS: [&str; 10] = [
    "L7n2", "mL8n2", "L9n3", "L7a1", "L9n8", "L9a3", "L8a1", "L9a1", "L9n6", "L9a2",
];
const TABLE1_CELLS: [&str; 100] = [
    "1", "1", "2", "2", "2", "3*", "2", "4*", "3", "5*", //
    "0", "2", "1", "3*", "1", "4*", "1", "1-5", "2", "6*", //
    "-", "0", "3", "1", "2", "2", "3*", "3*", "4", "4*", //
    "-", "-", "0", "4*", "2", "5*", "2", "6*", "1", "7*", //
    "-", "-", "-", "0", "4*", "1", "4*", "2", "5*", "3*", //
    "-", "-", "-", "-", "0", "5*", "2", "6*", "1", "7*", //
    "-", "-", "-", "-", "-", "0", "5*", "1", "6*", "2", //
    "-", "-", "-", "-", "-", "-", "0", "6*", "3", "7*", //
    "-", "-", "-", "-", "-", "-", "-", "0", "7*", "1", //
    "-", "-", "-", "-", "-", "-", "-", "-", "0", "8*", //
];

const TABLE2_LABELS: [&str; 8] = [
    "L7a3", "L7a4", "L9a4", "L9a8", "mL9a9", "mL9a10", "L9n2", "mL9n5",
];
const TABLE2_CELLS: [&str; 64] = [
    "0", "1", "1", "2", "3*", "4*", "1", "2", //
    "-", "0", "2", "1", "2", "3*", "2", "3", //
    "-", "-", "0", "3", "4*", "5*", "2", "1", //
    "-", "-", "-", "0", "3*", "4*", "3", "4", //
    "-", "-", "-", "-", "0", "1", "4*", "5*", //
    "-", "-", "-", "-", "-", "0", "5*", "6", //
    "-", "-", "-", "-", "-", "-", "0", "1", //
    "-", "-", "-", "-", "-", "-", "-", "0", //
];

/// Row labels, column labels and printed cells of a distance table.
pub fn published_layout(
    which: Which,
) -> Option<(Vec<&'static str>, Vec<&'static str>, Vec<&'static str>)> {
    match which {
        Which::Fig2 => Some((
            FIG2_LABELS.to_vec(),
            FIG2_LABELS.to_vec(),
            FIG2_CELLS.to_vec(),
        )),
        Which::Table1 => Some((
            TABLE1_ROWS.to_vec(),
            TABLE1_COLUMNS.to_vec(),
            TABLE1_CELLS.to_vec(),
        )),
        Which::Table2 => Some((
            TABLE2_LABELS.to_vec(),
            TABLE2_LABELS.to_vec(),
            TABLE2_CELLS.to_vec(),
        )),
        Which::Table3 => None,
    }
}

/// Printed cells of value 1 in a distance table: the single self delta moves
/// the table asserts.
pub fn published_unit_edges(which: Which) -> Vec<(&'static str, &'static str)> {
    let Some((rows, cols, cells)) = published_layout(which) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        for (j, c) in cols.iter().enumerate() {
            if cells[i * cols.len() + j] == "1" {
                out.push((*r, *c));
            }
        }
    }
    out
}

fn error_cell(column: &str, printed: Printed, e: AnalysisError) -> TableCell {
    TableCell {
        column: column.into(),
        printed,
        computed: Computed::None,
        status: CellStatus::Error,
        note: Some(format!("{e}")),
    }
}

fn distance_table(
    which: Which,
    cat: &Catalog,
    graph: &PathwayGraph,
    engine: &mut ConwayEngine,
) -> TableModel {
    let (rows, cols, cells) = published_layout(which).unwrap_or_default();
    let title = match which {
        Which::Fig2 => "(d1,d2)=(0,0)",
        Which::Table1 => "(d1,d2)=(0,+-1)",
        _ => "(d1,d2)=(0,+-2)",
    };
    let mut out = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        let mut row = Vec::new();
        for (j, c) in cols.iter().enumerate() {
            let printed = Printed::parse_distance(cells[i * cols.len() + j]);
            if printed == Printed::Blank {
                row.push(TableCell {
                    column: c.to_string(),
                    printed,
                    computed: Computed::None,
                    status: CellStatus::Unpublished,
                    note: None,
                });
                continue;
            }
            match distance(cat, graph, r, c, MoveClass::SelfDelta, engine) {
                Ok(b) => {
                    let status = compare(&printed, &b, r != c);
                    row.push(TableCell {
                        column: c.to_string(),
                        printed,
                        computed: Computed::Bound(b),
                        status,
                        note: None,
                    });
                }
                Err(e) => row.push(error_cell(c, printed, e)),
            }
        }
        out.push(TableRow {
            label: r.to_string(),
            cells: row,
        });
    }
    TableModel {
        which,
        title: title.into(),
        columns: cols.iter().map(|c| c.to_string()).collect(),
        rows: out,
    }
}

pub const TABLE3_COLUMNS: [&str; 8] = [
    "Components",
    "sp^D",
    "sp^mD",
    "u^D",
    "Σu^D(L_i)",
    "sp",
    "Arf",
    "ΣArf(L_i)",
];

/// Rows of the published splitting table: listed links with a known mixed
/// splitting number.
pub fn table3_links(cat: &Catalog) -> Vec<&str> {
    cat.entries()
        .iter()
        .filter(|e| !e.derived && e.name.starts_with('L') && e.known.sp_mdelta.is_some())
        .map(|e| e.name.as_str())
        .collect()
}

fn exact_cell(column: &str, printed: Option<u32>, value: u32) -> TableCell {
    let printed = printed.map_or(Printed::Blank, Printed::Exact);
    let b = DistanceBound::exact(value);
    let status = compare(&printed, &b, false);
    TableCell {
        column: column.into(),
        printed,
        computed: Computed::Bound(b),
        status,
        note: None,
    }
}

fn range_printed(r: Option<KnownRange>) -> Printed {
    r.map_or(Printed::Blank, Printed::Range)
}

fn table3(cat: &Catalog, graph: &PathwayGraph, engine: &mut ConwayEngine) -> TableModel {
    let mut rows = Vec::new();
    for name in table3_links(cat) {
        let Some(e) = cat.get(name) else { continue };
        let k = &e.known;
        let mut cells = Vec::new();
        let comps = component_names(cat, e, engine).map(|c| c.join(","));
        let listed = e.components.join(",");
        match comps {
            Ok(c) => {
                let status = if listed.is_empty() {
                    CellStatus::Unpublished
                } else if c == listed {
                    CellStatus::Match
                } else {
                    CellStatus::Conflict
                };
                cells.push(TableCell {
                    column: TABLE3_COLUMNS[0].into(),
                    printed: Printed::Text(listed),
                    computed: Computed::Text(c),
                    status,
                    note: None,
                });
            }
            Err(err) => cells.push(error_cell(TABLE3_COLUMNS[0], Printed::Text(listed), err)),
        }
        match split_bounds(cat, graph, name, engine) {
            Ok(sb) => {
                for (col, printed, b) in
                    [(1, k.sp_delta, sb.sp_delta), (2, k.sp_mdelta, sb.sp_mdelta)]
                {
                    let printed = range_printed(printed);
                    let status = compare(&printed, &b, false);
                    cells.push(TableCell {
                        column: TABLE3_COLUMNS[col].into(),
                        printed,
                        computed: Computed::Bound(b),
                        status,
                        note: None,
                    });
                }
            }
            Err(err) => {
                cells.push(error_cell(
                    TABLE3_COLUMNS[1],
                    range_printed(k.sp_delta),
                    err.clone(),
                ));
                cells.push(error_cell(
                    TABLE3_COLUMNS[2],
                    range_printed(k.sp_mdelta),
                    err,
                ));
            }
        }
        cells.push(TableCell {
            column: TABLE3_COLUMNS[3].into(),
            printed: range_printed(k.u_delta),
            computed: Computed::None,
            status: CellStatus::Input,
            note: None,
        });
        match sum_component_u(cat, e, engine) {
            Ok(s) => {
                let mut cell = exact_cell(TABLE3_COLUMNS[4], k.sum_u_delta, s);
                if k.sum_u_delta.is_none() {
                    cell.note = Some(
                        "printed value withheld as inconsistent with unknotted components".into(),
                    );
                }
                cells.push(cell);
            }
            Err(err) => cells.push(error_cell(
                TABLE3_COLUMNS[4],
                k.sum_u_delta.map_or(Printed::Blank, Printed::Exact),
                err,
            )),
        }
        cells.push(TableCell {
            column: TABLE3_COLUMNS[5].into(),
            printed: k.sp.map_or(Printed::Blank, Printed::Exact),
            computed: Computed::None,
            status: CellStatus::Input,
            note: None,
        });
        match arf(&e.diagram, engine) {
            Ok(Some(a)) => cells.push(exact_cell(
                TABLE3_COLUMNS[6],
                k.arf.map(u32::from),
                a.into(),
            )),
            Ok(None) => cells.push(error_cell(
                TABLE3_COLUMNS[6],
                Printed::Blank,
                AnalysisError::NotProper(name.into()),
            )),
            Err(err) => cells.push(error_cell(TABLE3_COLUMNS[6], Printed::Blank, err.into())),
        }
        match component_arfs(&e.diagram, engine) {
            Ok(v) => cells.push(exact_cell(
                TABLE3_COLUMNS[7],
                k.sum_arf.map(u32::from),
                u32::from(v.iter().sum::<u8>() % 2),
            )),
            Err(err) => cells.push(error_cell(TABLE3_COLUMNS[7], Printed::Blank, err.into())),
        }
        rows.push(TableRow {
            label: name.to_string(),
            cells,
        });
    }
    TableModel {
        which: Which::Table3,
        title: "(mixed) delta splitting numbers".into(),
        columns: TABLE3_COLUMNS.iter().map(|c| c.to_string()).collect(),
        rows,
    }
}

/// Computes a published table from the catalog and the pathway evidence and
/// annotates every cell with its relation to the printed value.
pub fn reproduce(
    which: Which,
    cat: &Catalog,
    graph: &PathwayGraph,
    engine: &mut ConwayEngine,
) -> TableModel {
    match which {
        Which::Table3 => table3(cat, graph, engine),
        _ => distance_table(which, cat, graph, engine),
    }
}
