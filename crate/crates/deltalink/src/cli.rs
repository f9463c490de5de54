//! Command-line front end.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use deltalink_core::analysis::{
    bfs_pathways, distance, published_layout, reproduce, split_bounds, table3_links, DistanceBound,
    MoveClass, SearchConfig, SearchError, Which,
};
use deltalink_core::catalog::mirror_name;
use deltalink_core::diagram::parse_pd;
use deltalink_core::invariants::{
    arf, component_arfs, delta_invariants, fingerprint, linking_matrix,
};
use deltalink_core::moves::MoveKind;
use deltalink_core::{Catalog, ConwayEngine, LinkDiagram};

use crate::data::{format_evidence, load_catalog, load_evidence, write_evidence};
use crate::figures::{figure_graph, Figure};
use crate::render::{graph_dot, table_csv, table_markdown};

#[derive(Parser, Debug)]
#[command(
    name = "deltalink",
    version,
    about = "Delta-move distances and splitting numbers of links"
)]
pub struct Cli {
    /// Catalog file; defaults to $DELTALINK_CATALOG, then the bundled catalog.
    #[arg(long, global = true)]
    pub catalog: Option<PathBuf>,
    /// Evidence files to use instead of the bundled search results.
    #[arg(long, global = true)]
    pub evidence: Vec<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Linking matrix, Conway polynomial, Arf invariants and the delta pair.
    Invariants { link: String },
    /// Catalog identification and self-delta family.
    Classify { link: String },
    /// Bounds on the delta distance between two links.
    Distance {
        a: String,
        b: String,
        #[arg(long, default_value = "any")]
        moves: String,
    },
    /// Bounds on the delta and mixed delta splitting numbers.
    Split { link: String },
    /// Breadth-first search for delta pathways from catalog links.
    Search {
        /// Comma-separated names; `@fig2`, `@tab1`, `@tab2`, `@tab3` expand to a table's links.
        #[arg(long, required = true)]
        start: String,
        /// `self`, `mixed`, `any`, or a comma-separated list of move kinds.
        #[arg(long, default_value = "any")]
        moves: String,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, default_value_t = 12)]
        crossing_cap: usize,
        #[arg(long, default_value_t = 50_000)]
        state_budget: usize,
        #[arg(long, default_value_t = 50)]
        r3_budget: usize,
        /// Only R3 moves between delta moves, no finger moves.
        #[arg(long)]
        no_fingers: bool,
        /// Evidence file to write; edges go to standard output otherwise.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce a published table with a diff against its printed values.
    Table {
        #[arg(long)]
        which: String,
        #[arg(long, default_value = "md")]
        format: String,
    },
    /// Reproduce a published pathway graph.
    Graph {
        #[arg(long)]
        which: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
}

/// Failure with its exit status: 1 for domain errors, 2 for usage errors.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

fn io(e: std::io::Error) -> CliError {
    CliError::Domain(format!("output: {e}"))
}

/// A link given on the command line.
struct Link {
    label: String,
    diagram: LinkDiagram,
    /// Catalog names with the same fingerprint, listed entries first.
    names: Vec<String>,
}

impl Link {
    fn catalog_name(&self) -> Result<&str, CliError> {
        self.names
            .first()
            .map(String::as_str)
            .ok_or_else(|| CliError::Domain(format!("{} matches no catalog entry", self.label)))
    }
}

fn resolve(cat: &Catalog, spec: &str, engine: &mut ConwayEngine) -> Result<Link, CliError> {
    let diagram = if let Some(code) = spec.strip_prefix("pd:") {
        parse_pd(code).map_err(|e| CliError::Usage(format!("invalid PD code `{code}`: {e}")))?
    } else if let Some(e) = cat.get(spec) {
        e.diagram.clone()
    } else if let Some(e) = cat.get(&mirror_name(spec)) {
        e.diagram.mirror()
    } else {
        return Err(CliError::Usage(format!(
            "unknown link `{spec}`: not a catalog name and no `pd:` prefix"
        )));
    };
    let names = if cat.get(spec).is_some() {
        vec![spec.to_string()]
    } else {
        let fp = fingerprint(&diagram, engine).map_err(domain)?;
        cat.identify(&fp).into_iter().map(String::from).collect()
    };
    Ok(Link {
        label: spec.to_string(),
        diagram,
        names,
    })
}

fn move_kinds(text: &str) -> Result<Vec<MoveKind>, CliError> {
    match text {
        "self" => return Ok(vec![MoveKind::DeltaSelf]),
        "mixed" => return Ok(MoveKind::MIXED.to_vec()),
        "any" => return Ok(MoveKind::DELTA.to_vec()),
        _ => {}
    }
    text.split(',')
        .map(|k| {
            MoveKind::DELTA
                .into_iter()
                .find(|m| m.name().eq_ignore_ascii_case(k.trim()))
                .ok_or_else(|| CliError::Usage(format!("--moves: unknown move kind `{k}`")))
        })
        .collect()
}

fn start_names(cat: &Catalog, text: &str) -> Result<Vec<String>, CliError> {
    let mut out: Vec<String> = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let expanded: Vec<String> = match part.strip_prefix('@') {
            Some(preset) => match Which::parse(preset) {
                Some(Which::Table3) => table3_links(cat).into_iter().map(String::from).collect(),
                Some(w) => {
                    let (rows, cols, _) = published_layout(w).unwrap_or_default();
                    rows.into_iter().chain(cols).map(String::from).collect()
                }
                None => return Err(CliError::Usage(format!("--start: unknown preset `{part}`"))),
            },
            None if cat.get(part).is_some() => vec![part.to_string()],
            None => return Err(CliError::Usage(format!("--start: unknown link `{part}`"))),
        };
        for n in expanded {
            if !out.contains(&n) {
                out.push(n);
            }
        }
    }
    if out.is_empty() {
        return Err(CliError::Usage("--start: no links given".into()));
    }
    Ok(out)
}

fn write_bound(out: &mut dyn Write, label: &str, b: &DistanceBound) -> Result<(), CliError> {
    writeln!(out, "{label}: {b}").map_err(io)?;
    for d in &b.trace {
        writeln!(out, "  {d}").map_err(io)?;
    }
    Ok(())
}

fn invariants(out: &mut dyn Write, link: &Link, engine: &mut ConwayEngine) -> Result<(), CliError> {
    let d = &link.diagram;
    let m = d.component_count();
    writeln!(out, "link: {}", link.label).map_err(io)?;
    writeln!(out, "components: {m}").map_err(io)?;
    writeln!(out, "crossings: {}", d.crossing_count()).map_err(io)?;
    let lk = linking_matrix(d);
    let rows: Vec<String> = (0..m)
        .map(|i| {
            format!(
                "[{}]",
                (0..m)
                    .map(|j| lk.get(i, j).to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            )
        })
        .collect();
    writeln!(out, "linking matrix: [{}]", rows.join(", ")).map_err(io)?;
    writeln!(out, "conway: {}", engine.conway(d).map_err(domain)?).map_err(io)?;
    match arf(d, engine).map_err(domain)? {
        Some(a) => writeln!(out, "arf: {a}").map_err(io)?,
        None => writeln!(out, "arf: undefined (not a proper link)").map_err(io)?,
    }
    let arfs = component_arfs(d, engine).map_err(domain)?;
    writeln!(
        out,
        "component arfs: {}",
        arfs.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    )
    .map_err(io)?;
    if m == 2 {
        writeln!(
            out,
            "delta pair: {}",
            delta_invariants(d, engine).map_err(domain)?
        )
        .map_err(io)?;
    }
    let names = if link.names.is_empty() {
        "none".to_string()
    } else {
        link.names.join(", ")
    };
    writeln!(out, "catalog: {names}").map_err(io)?;
    Ok(())
}

fn classify(
    out: &mut dyn Write,
    cat: &Catalog,
    link: &Link,
    engine: &mut ConwayEngine,
) -> Result<(), CliError> {
    let names = if link.names.is_empty() {
        "none".to_string()
    } else {
        link.names.join(", ")
    };
    writeln!(out, "link: {}", link.label).map_err(io)?;
    writeln!(out, "catalog: {names}").map_err(io)?;
    if link
        .names
        .iter()
        .filter_map(|n| cat.get(n))
        .any(|e| e.mirror_ambiguous)
    {
        writeln!(
            out,
            "note: the invariants do not separate this link from its mirror image"
        )
        .map_err(io)?;
    }
    let lk = linking_matrix(&link.diagram);
    writeln!(out, "linking class: {:?}", lk.canonical_class()).map_err(io)?;
    if link.diagram.component_count() == 2 {
        let key = delta_invariants(&link.diagram, engine).map_err(domain)?;
        writeln!(out, "delta pair: {key}").map_err(io)?;
        if key.delta1 == 0 {
            let members = cat.family_members(key.class());
            writeln!(
                out,
                "family (0, ±{}): {}",
                key.delta2.abs(),
                members.join(", ")
            )
            .map_err(io)?;
        }
    }
    Ok(())
}

fn search(
    out: &mut dyn Write,
    cat: &Catalog,
    engine: &mut ConwayEngine,
    starts: &[String],
    cfg: &SearchConfig,
    target: Option<&PathBuf>,
    argv: &str,
) -> Result<(), CliError> {
    let refs: Vec<&str> = starts.iter().map(String::as_str).collect();
    let report = match bfs_pathways(cat, &refs, cfg, engine) {
        Ok(r) => r,
        Err(SearchError::ResourceLimit(partial)) => {
            log::warn!(
                "state budget exhausted; writing the {} edges found so far",
                partial.graph.edges().len()
            );
            partial
        }
        Err(e) => return Err(domain(e)),
    };
    let header = vec![
        format!("deltalink {}", argv),
        format!(
            "{} states, {} unidentified, {} edges",
            report.states,
            report.unidentified,
            report.graph.edges().len()
        ),
    ];
    match target {
        Some(path) => {
            write_evidence(path, report.graph.edges(), &header).map_err(domain)?;
            writeln!(out, "{}", header[1]).map_err(io)?;
        }
        None => out
            .write_all(format_evidence(report.graph.edges(), &header).as_bytes())
            .map_err(io)?,
    }
    Ok(())
}

fn execute(cli: Cli, argv: &str, out: &mut dyn Write) -> Result<(), CliError> {
    let mut engine = ConwayEngine::new();
    if let Command::Table { which, format } = &cli.command {
        Which::parse(which)
            .ok_or_else(|| CliError::Usage(format!("--which: unknown table `{which}`")))?;
        if format != "csv" && format != "md" {
            return Err(CliError::Usage(format!(
                "--format: expected csv or md, got `{format}`"
            )));
        }
    }
    if let Command::Graph { which, format } = &cli.command {
        Figure::parse(which)
            .ok_or_else(|| CliError::Usage(format!("--which: unknown graph `{which}`")))?;
        if format != "dot" {
            return Err(CliError::Usage(format!(
                "--format: expected dot, got `{format}`"
            )));
        }
    }
    let cat = load_catalog(cli.catalog.as_deref(), &mut engine).map_err(domain)?;
    match cli.command {
        Command::Invariants { link } => {
            let l = resolve(&cat, &link, &mut engine)?;
            invariants(out, &l, &mut engine)
        }
        Command::Classify { link } => {
            let l = resolve(&cat, &link, &mut engine)?;
            classify(out, &cat, &l, &mut engine)
        }
        Command::Distance { a, b, moves } => {
            let class = MoveClass::parse(&moves).ok_or_else(|| {
                CliError::Usage(format!(
                    "--moves: expected self, mixed or any, got `{moves}`"
                ))
            })?;
            let (la, lb) = (
                resolve(&cat, &a, &mut engine)?,
                resolve(&cat, &b, &mut engine)?,
            );
            let graph = load_evidence(&cli.evidence).map_err(domain)?;
            let bound = distance(
                &cat,
                &graph,
                la.catalog_name()?,
                lb.catalog_name()?,
                class,
                &mut engine,
            )
            .map_err(domain)?;
            write_bound(out, &format!("{class} delta distance {a} {b}"), &bound)
        }
        Command::Split { link } => {
            let l = resolve(&cat, &link, &mut engine)?;
            let graph = load_evidence(&cli.evidence).map_err(domain)?;
            let sb = split_bounds(&cat, &graph, l.catalog_name()?, &mut engine).map_err(domain)?;
            write_bound(out, &format!("sp^D({link})"), &sb.sp_delta)?;
            write_bound(out, &format!("sp^mD({link})"), &sb.sp_mdelta)
        }
        Command::Search {
            start,
            moves,
            depth,
            crossing_cap,
            state_budget,
            r3_budget,
            no_fingers,
            out: target,
        } => {
            let kinds = move_kinds(&moves)?;
            let starts = start_names(&cat, &start)?;
            let cfg = SearchConfig {
                kinds,
                depth,
                crossing_cap,
                state_budget,
                r3_budget,
                finger_moves: !no_fingers,
            };
            search(out, &cat, &mut engine, &starts, &cfg, target.as_ref(), argv)
        }
        Command::Table { which, format } => {
            let which = Which::parse(&which).expect("validated above");
            let graph = load_evidence(&cli.evidence).map_err(domain)?;
            let model = reproduce(which, &cat, &graph, &mut engine);
            let text = if format == "csv" {
                table_csv(&model)
            } else {
                table_markdown(&model)
            };
            out.write_all(text.as_bytes()).map_err(io)
        }
        Command::Graph { which, .. } => {
            let fig = Figure::parse(&which).expect("validated above");
            let graph = load_evidence(&cli.evidence).map_err(domain)?;
            out.write_all(graph_dot(&figure_graph(fig, &cat, &graph)).as_bytes())
                .map_err(io)
        }
    }
}

/// Parses `args` (program name first) and runs the command. Returns the
/// exit status: 0 on success, 1 on domain errors, 2 on usage errors.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let argv = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect::<Vec<_>>()
        .join(" ");
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{e}");
                return 2;
            }
            let _ = write!(out, "{e}");
            return 0;
        }
    };
    match execute(cli, &argv, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}
