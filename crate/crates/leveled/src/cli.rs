//! Command-line front end: input parsing, solver dispatch, the JSON result
//! schema, certificate files, and static SVG/DOT rendering.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::crossings::{level_partition_from_crossings, CrossRelation, LayeringOutcome};
use crate::error::Error;
use crate::graph::{generate, parse_edge_list, FamilySpec, Graph};
use crate::invariants::{
    book_thickness, expected_values, thickness, validate_inequalities, ReportLimits,
};
use crate::leveling::{
    hamiltonian_level_number, has_leveled_embedding, level_number, spine_level_number,
    verify_certificate, LevelCertificate, LevelResult, LevelValue,
};
use crate::spine::{fragments, DiskTest, Spine};

#[derive(Parser)]
#[command(name = "leveled", version, about = "Exact leveled-embedding invariants of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// emit the JSON result schema instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// worker threads for spine minimization (default: all cores)
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// include wall-clock timings in the output (breaks byte-identity)
    #[arg(long, global = true)]
    timings: bool,
    /// test each fragment for planarity on its own instead of together
    /// with the spine
    #[arg(long, global = true)]
    literal_prop: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Level number: minimum levels over all spines
    Level {
        /// graph: family shorthand (K5, K3,3, C7, P4, M16) or edge-list file
        graph: String,
        /// stop enumerating after this many candidate cycles
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Hamiltonian level number: minimum levels over hamiltonian spines
    Hlevel { graph: String },
    /// Level count for one fixed spine
    SpineLevel {
        graph: String,
        /// the spine as a comma-separated vertex cycle, e.g. 0,1,2,3
        #[arg(long)]
        spine: String,
    },
    /// Decide whether any leveled embedding exists
    DecideLeveled { graph: String },
    /// Exact book thickness (minimum pages over all printing cycles)
    BookThickness {
        graph: String,
        #[arg(long, default_value_t = 9)]
        max_vertices: usize,
    },
    /// Exact graph thickness (minimum planar edge partition)
    Thickness {
        graph: String,
        #[arg(long, default_value_t = 18)]
        max_edges: usize,
    },
    /// Compare the solver against the closed-form family values
    CheckFormulas { family: String },
    /// Verify a certificate file produced by level/hlevel/spine-level --json
    VerifyCert { file: PathBuf },
    /// Layer fragments over a crosses-over relation from a JSON file
    CrossLevels { file: PathBuf },
    /// All invariants of one graph with the inequality checks
    Report {
        graph: String,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Draw a certificate: spine as a circle, fragments colored by level
    Render {
        cert: PathBuf,
        #[arg(long)]
        svg: bool,
        #[arg(long)]
        dot: bool,
    },
}

/// Runs the CLI. Exit codes: 0 computed, 1 usage error, 2 size-gate
/// rejection, 3 verification failure.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    if let Some(w) = cli.workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
    let started = Instant::now();
    match dispatch(&cli, started) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::SizeGate { .. } => 2,
        Error::ImproperColoring | Error::Certificate(_) => 3,
        _ => 1,
    }
}

fn disk_mode(cli: &Cli) -> DiskTest {
    if cli.literal_prop {
        DiskTest::LiteralFragment
    } else {
        DiskTest::UnionWithSpine
    }
}

/// Loads a graph from a family shorthand or, failing that, an edge-list file.
/// Returns the graph and the canonical input label for the output schema.
fn load_graph(arg: &str) -> Result<(Graph, String), Error> {
    if let Ok(spec) = FamilySpec::parse(arg) {
        return Ok((generate(spec)?, spec.to_string()));
    }
    let text = std::fs::read_to_string(arg).map_err(|e| {
        Error::InvalidFamily(format!("{arg} is neither a family shorthand nor a readable file: {e}"))
    })?;
    Ok((parse_edge_list(&text)?, arg.to_string()))
}

// -- JSON result schema -------------------------------------------------------

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(untagged)]
enum ValueJson {
    Int(usize),
    Inf(InfTag),
}

#[derive(Serialize, Deserialize, Clone, Copy, PartialEq, Eq)]
enum InfTag {
    #[serde(rename = "inf")]
    Inf,
}

impl From<LevelValue> for ValueJson {
    fn from(v: LevelValue) -> ValueJson {
        match v {
            LevelValue::Finite(k) => ValueJson::Int(k),
            LevelValue::Infinite => ValueJson::Inf(InfTag::Inf),
        }
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphJson {
    fn of(g: &Graph) -> GraphJson {
        GraphJson {
            n: g.vertex_count(),
            edges: g.edges().to_vec(),
        }
    }

    fn to_graph(&self) -> Result<Graph, Error> {
        Graph::new(self.n, self.edges.iter().copied())
    }
}

#[derive(Serialize, Deserialize, Clone)]
struct FragmentJson {
    /// spine positions touched, ascending
    attachments: Vec<usize>,
    internal_vertices: Vec<usize>,
}

#[derive(Serialize, Deserialize, Clone)]
struct CertJson {
    spine: Vec<usize>,
    fragments: Vec<FragmentJson>,
    levels: Vec<usize>,
}

impl CertJson {
    fn of(g: &Graph, cert: &LevelCertificate) -> Result<CertJson, Error> {
        let frags = fragments(g, &cert.spine)?;
        Ok(CertJson {
            spine: cert.spine.verts().to_vec(),
            fragments: frags
                .iter()
                .map(|f| FragmentJson {
                    attachments: f.attachments.clone(),
                    internal_vertices: f.internal_vertices.clone(),
                })
                .collect(),
            levels: cert.levels.clone(),
        })
    }
}

#[derive(Serialize)]
struct ResultJson {
    command: String,
    input: String,
    value: ValueJson,
    exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    graph: Option<GraphJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<CertJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<BTreeMap<String, u128>>,
}

/// The portion of a result file that verify-cert and render need back.
#[derive(Deserialize)]
struct CertFile {
    graph: GraphJson,
    certificate: CertJson,
}

fn timing_map(cli: &Cli, started: Instant) -> Option<BTreeMap<String, u128>> {
    cli.timings.then(|| {
        let mut m = BTreeMap::new();
        m.insert("total_ms".to_string(), started.elapsed().as_millis());
        m
    })
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("schema types serialize"));
}

// -- dispatch -----------------------------------------------------------------

fn dispatch(cli: &Cli, started: Instant) -> Result<i32, Error> {
    match &cli.command {
        Command::Level { graph, cap } => {
            let (g, input) = load_graph(graph)?;
            let res = level_number(&g, *cap, disk_mode(cli))?;
            emit_level_result(cli, started, "level", &input, &g, &res);
            Ok(0)
        }
        Command::Hlevel { graph } => {
            let (g, input) = load_graph(graph)?;
            let res = hamiltonian_level_number(&g, disk_mode(cli))?;
            emit_level_result(cli, started, "hlevel", &input, &g, &res);
            Ok(0)
        }
        Command::SpineLevel { graph, spine } => {
            let (g, input) = load_graph(graph)?;
            let seq = parse_spine_arg(spine)?;
            let c = Spine::new(&g, &seq)?;
            let res = spine_level_number(&g, &c, disk_mode(cli))?;
            emit_level_result(cli, started, "spine-level", &input, &g, &res);
            Ok(0)
        }
        Command::DecideLeveled { graph } => {
            let (g, input) = load_graph(graph)?;
            let (leveled, witness) = has_leveled_embedding(&g, disk_mode(cli))?;
            if cli.json {
                #[derive(Serialize)]
                struct DecideJson {
                    command: &'static str,
                    input: String,
                    leveled: bool,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    witness_spine: Option<Vec<usize>>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    timings: Option<BTreeMap<String, u128>>,
                }
                print_json(&DecideJson {
                    command: "decide-leveled",
                    input,
                    leveled,
                    witness_spine: witness.as_ref().map(|c| c.verts().to_vec()),
                    timings: timing_map(cli, started),
                });
            } else {
                println!("{leveled}");
                if let Some(c) = witness {
                    println!("witness spine: {}", join(c.verts()));
                }
            }
            Ok(0)
        }
        Command::BookThickness { graph, max_vertices } => {
            let (g, input) = load_graph(graph)?;
            let v = book_thickness(&g, *max_vertices)?;
            emit_plain_value(cli, started, "book-thickness", &input, v);
            Ok(0)
        }
        Command::Thickness { graph, max_edges } => {
            let (g, input) = load_graph(graph)?;
            let v = thickness(&g, *max_edges)?;
            emit_plain_value(cli, started, "thickness", &input, v);
            Ok(0)
        }
        Command::CheckFormulas { family } => check_formulas(cli, started, family),
        Command::VerifyCert { file } => {
            let text = read_file(file)?;
            let parsed: CertFile = serde_json::from_str(&text)
                .map_err(|e| Error::Certificate(format!("malformed certificate file: {e}")))?;
            let (g, cert) = reconstruct(&parsed)?;
            verify_certificate(&g, &cert)?;
            if cli.json {
                #[derive(Serialize)]
                struct VerifyJson {
                    command: &'static str,
                    input: String,
                    valid: bool,
                }
                print_json(&VerifyJson {
                    command: "verify-cert",
                    input: file.display().to_string(),
                    valid: true,
                });
            } else {
                println!("certificate valid: {} levels on spine {}", cert.k, join(cert.spine.verts()));
            }
            Ok(0)
        }
        Command::CrossLevels { file } => {
            let text = read_file(file)?;
            let relation: CrossRelation = serde_json::from_str(&text)
                .map_err(|e| Error::InvalidRelation(format!("malformed relation file: {e}")))?;
            let outcome = level_partition_from_crossings(&relation)?;
            if cli.json {
                #[derive(Serialize)]
                struct CrossJson {
                    command: &'static str,
                    input: String,
                    value: ValueJson,
                    outcome: &'static str,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    levels: Option<Vec<usize>>,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    witness: Option<Vec<usize>>,
                }
                let (value, outcome_tag, levels, witness) = match &outcome {
                    LayeringOutcome::Partition(levels) => (
                        ValueJson::Int(levels.iter().copied().max().unwrap_or(0)),
                        "partition",
                        Some(levels.clone()),
                        None,
                    ),
                    LayeringOutcome::Witness(w) => {
                        (ValueJson::Inf(InfTag::Inf), "witness", None, Some(w.clone()))
                    }
                };
                print_json(&CrossJson {
                    command: "cross-levels",
                    input: file.display().to_string(),
                    value,
                    outcome: outcome_tag,
                    levels,
                    witness,
                });
            } else {
                match &outcome {
                    LayeringOutcome::Partition(levels) => println!("levels: {}", join(levels)),
                    LayeringOutcome::Witness(w) => {
                        println!("no level partition; under-crossing cycle: {}", join(w))
                    }
                }
            }
            Ok(0)
        }
        Command::Report { graph, cap } => {
            let (g, input) = load_graph(graph)?;
            let limits = ReportLimits {
                cycle_cap: *cap,
                ..ReportLimits::default()
            };
            let report = validate_inequalities(&g, &input, limits)?;
            if cli.json {
                #[derive(Serialize)]
                struct ReportJson<'a> {
                    command: &'static str,
                    input: &'a str,
                    report: &'a crate::invariants::InvariantReport,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    timings: Option<BTreeMap<String, u128>>,
                }
                print_json(&ReportJson {
                    command: "report",
                    input: &input,
                    report: &report,
                    timings: timing_map(cli, started),
                });
            } else {
                print_report_text(&report);
            }
            Ok(0)
        }
        Command::Render { cert, svg, dot } => {
            if *svg && *dot {
                eprintln!("error: choose one of --svg and --dot");
                return Ok(1);
            }
            let text = read_file(cert)?;
            let parsed: CertFile = serde_json::from_str(&text)
                .map_err(|e| Error::Certificate(format!("malformed certificate file: {e}")))?;
            let (g, c) = reconstruct(&parsed)?;
            if *dot {
                print!("{}", render_dot(&g, &c)?);
            } else {
                print!("{}", render_svg(&g, &c)?);
            }
            Ok(0)
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidFamily(format!("cannot read {}: {e}", path.display())))
}

fn parse_spine_arg(s: &str) -> Result<Vec<usize>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Error::NotACycle(format!("bad vertex {t:?} in --spine")))
        })
        .collect()
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Rebuilds the graph and certificate from a result file, cross-checking the
/// stored fragment list against the recomputed decomposition.
fn reconstruct(file: &CertFile) -> Result<(Graph, LevelCertificate), Error> {
    let g = file.graph.to_graph()?;
    let cert = &file.certificate;
    let spine = Spine::new(&g, &cert.spine)?;
    let frags = fragments(&g, &spine)?;
    if frags.len() != cert.fragments.len() {
        return Err(Error::Certificate(format!(
            "stored fragment count {} does not match the decomposition ({})",
            cert.fragments.len(),
            frags.len()
        )));
    }
    for (i, (f, fj)) in frags.iter().zip(&cert.fragments).enumerate() {
        if f.attachments != fj.attachments || f.internal_vertices != fj.internal_vertices {
            return Err(Error::Certificate(format!(
                "stored fragment {i} does not match the decomposition"
            )));
        }
    }
    let k = cert.levels.iter().copied().max().unwrap_or(0);
    Ok((
        g,
        LevelCertificate {
            spine,
            levels: cert.levels.clone(),
            k,
        },
    ))
}

fn emit_level_result(
    cli: &Cli,
    started: Instant,
    command: &str,
    input: &str,
    g: &Graph,
    res: &LevelResult,
) {
    if cli.json {
        let certificate = res
            .certificate
            .as_ref()
            .map(|c| CertJson::of(g, c).expect("solver certificates serialize"));
        print_json(&ResultJson {
            command: command.to_string(),
            input: input.to_string(),
            value: res.value.into(),
            exact: res.exact,
            graph: Some(GraphJson::of(g)),
            certificate,
            timings: timing_map(cli, started),
        });
    } else {
        println!("{}", res.value);
        if !res.exact {
            println!("upper bound only: cycle enumeration was truncated by --cap");
        }
    }
}

fn emit_plain_value(cli: &Cli, started: Instant, command: &str, input: &str, v: usize) {
    if cli.json {
        print_json(&ResultJson {
            command: command.to_string(),
            input: input.to_string(),
            value: ValueJson::Int(v),
            exact: true,
            graph: None,
            certificate: None,
            timings: timing_map(cli, started),
        });
    } else {
        println!("{v}");
    }
}

fn check_formulas(cli: &Cli, started: Instant, family: &str) -> Result<i32, Error> {
    let spec = FamilySpec::parse(family)?;
    let (expected_l, expected_hl) = expected_values(spec)?;
    let g = generate(spec)?;
    let solver_l = level_number(&g, None, disk_mode(cli))?.value;
    let solver_hl = expected_hl
        .map(|_| hamiltonian_level_number(&g, disk_mode(cli)).map(|r| r.value))
        .transpose()?;

    #[derive(Serialize)]
    struct FormulaCheck {
        name: &'static str,
        solver: ValueJson,
        expected: ValueJson,
        pass: bool,
    }
    let mut checks = vec![FormulaCheck {
        name: "level",
        solver: solver_l.into(),
        expected: expected_l.into(),
        pass: solver_l == expected_l,
    }];
    if let (Some(hl), Some(ehl)) = (solver_hl, expected_hl) {
        checks.push(FormulaCheck {
            name: "hlevel",
            solver: hl.into(),
            expected: ValueJson::Int(ehl),
            pass: hl == LevelValue::Finite(ehl),
        });
    }
    let all_pass = checks.iter().all(|c| c.pass);

    if cli.json {
        #[derive(Serialize)]
        struct FormulasJson {
            command: &'static str,
            input: String,
            checks: Vec<FormulaCheck>,
            pass: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            timings: Option<BTreeMap<String, u128>>,
        }
        print_json(&FormulasJson {
            command: "check-formulas",
            input: spec.to_string(),
            checks,
            pass: all_pass,
            timings: timing_map(cli, started),
        });
    } else {
        for c in &checks {
            let solver = fmt_value(c.solver);
            let expected = fmt_value(c.expected);
            let verdict = if c.pass { "PASS" } else { "FAIL" };
            println!("{}: solver {}, expected {}: {}", c.name, solver, expected, verdict);
        }
    }
    Ok(if all_pass { 0 } else { 3 })
}

fn fmt_value(v: ValueJson) -> String {
    match v {
        ValueJson::Int(k) => k.to_string(),
        ValueJson::Inf(_) => "inf".to_string(),
    }
}

fn print_report_text(report: &crate::invariants::InvariantReport) {
    use crate::invariants::ReportField;
    let field = |f: &ReportField| match f {
        ReportField::Computed { value, exact } => {
            if *exact {
                value.clone()
            } else {
                format!("{value} (upper bound)")
            }
        }
        ReportField::Skipped { reason } => format!("skipped: {reason}"),
    };
    println!("graph: {}", report.graph);
    println!("level number: {}", field(&report.level_number));
    println!("hamiltonian level number: {}", field(&report.hamiltonian_level_number));
    println!("book thickness: {}", field(&report.book_thickness));
    println!("thickness: {}", field(&report.thickness));
    for c in &report.checks {
        let verdict = match c.holds {
            Some(true) => "pass",
            Some(false) => "FAIL",
            None => "skipped",
        };
        println!("{}: {} ({})", c.name, verdict, c.detail);
    }
}

// -- rendering ----------------------------------------------------------------

const LEVEL_COLORS: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#bcbd22",
];

fn level_color(level: usize) -> &'static str {
    // levels are 1-based; 0 never occurs in a verified certificate
    LEVEL_COLORS[(level.max(1) - 1) % LEVEL_COLORS.len()]
}

/// Circle layout: spine vertices equally spaced on a circle, internal
/// fragment vertices pulled toward the center near their attachments.
fn layout(g: &Graph, cert: &LevelCertificate) -> Result<Vec<(f64, f64)>, Error> {
    let (cx, cy, r) = (300.0, 300.0, 240.0);
    let spine = &cert.spine;
    let m = spine.len();
    let mut pos = vec![None; g.vertex_count()];
    for (i, &v) in spine.verts().iter().enumerate() {
        let a = std::f64::consts::TAU * i as f64 / m as f64 - std::f64::consts::FRAC_PI_2;
        pos[v] = Some((cx + r * a.cos(), cy + r * a.sin()));
    }
    for f in fragments(g, spine)? {
        let (mut sx, mut sy) = (0.0, 0.0);
        for &p in &f.attachments {
            let a = std::f64::consts::TAU * p as f64 / m as f64 - std::f64::consts::FRAC_PI_2;
            sx += a.cos();
            sy += a.sin();
        }
        let norm = (sx * sx + sy * sy).sqrt();
        let (dx, dy) = if norm > 1e-9 {
            (sx / norm, sy / norm)
        } else {
            (0.0, 0.0)
        };
        for (j, &v) in f.internal_vertices.iter().enumerate() {
            // fan the internal vertices along the attachment direction
            let t = 0.25 + 0.5 * (j as f64 + 1.0) / (f.internal_vertices.len() as f64 + 1.0);
            pos[v] = Some((cx + r * t * dx, cy + r * t * dy));
        }
    }
    Ok(pos
        .into_iter()
        .map(|p| p.expect("spine and fragments cover every vertex"))
        .collect())
}

fn render_svg(g: &Graph, cert: &LevelCertificate) -> Result<String, Error> {
    let pos = layout(g, cert)?;
    let frags = fragments(g, &cert.spine)?;
    let mut s = String::new();
    s.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n",
    );
    s.push_str("  <rect width=\"600\" height=\"600\" fill=\"white\"/>\n");
    for (a, b) in cert.spine.cycle_edges() {
        let (x1, y1) = pos[a];
        let (x2, y2) = pos[b];
        s.push_str(&format!(
            "  <line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"black\" stroke-width=\"2.5\"/>\n",
        ));
    }
    for (i, f) in frags.iter().enumerate() {
        let color = level_color(cert.levels.get(i).copied().unwrap_or(1));
        for (a, b) in f.edges() {
            let (x1, y1) = pos[a];
            let (x2, y2) = pos[b];
            s.push_str(&format!(
                "  <line x1=\"{x1:.1}\" y1=\"{y1:.1}\" x2=\"{x2:.1}\" y2=\"{y2:.1}\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
            ));
        }
    }
    for (v, &(x, y)) in pos.iter().enumerate() {
        s.push_str(&format!(
            "  <circle cx=\"{x:.1}\" cy=\"{y:.1}\" r=\"10\" fill=\"white\" stroke=\"black\"/>\n",
        ));
        s.push_str(&format!(
            "  <text x=\"{x:.1}\" y=\"{:.1}\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">{v}</text>\n",
            y + 4.0,
        ));
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn render_dot(g: &Graph, cert: &LevelCertificate) -> Result<String, Error> {
    let frags = fragments(g, &cert.spine)?;
    let spine_edges = cert.spine.cycle_edges();
    let mut s = String::new();
    s.push_str("graph leveled {\n  layout=circo;\n  node [shape=circle];\n");
    for &(a, b) in &spine_edges {
        s.push_str(&format!("  {a} -- {b} [penwidth=2.5];\n"));
    }
    for (i, f) in frags.iter().enumerate() {
        let color = level_color(cert.levels.get(i).copied().unwrap_or(1));
        for (a, b) in f.edges() {
            s.push_str(&format!("  {a} -- {b} [color=\"{color}\"];\n"));
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn value_json_round_trip() {
        let inf: ValueJson = serde_json::from_str("\"inf\"").unwrap();
        assert!(matches!(inf, ValueJson::Inf(_)));
        let three: ValueJson = serde_json::from_str("3").unwrap();
        assert!(matches!(three, ValueJson::Int(3)));
        assert_eq!(serde_json::to_string(&ValueJson::Inf(InfTag::Inf)).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&ValueJson::Int(2)).unwrap(), "2");
    }

    #[test]
    fn spine_arg_parsing() {
        assert_eq!(parse_spine_arg("0,1, 2").unwrap(), vec![0, 1, 2]);
        assert!(parse_spine_arg("0,x").is_err());
    }

    #[test]
    fn render_k4_certificate() {
        let g = generate(FamilySpec::Complete(4)).unwrap();
        let res = hamiltonian_level_number(&g, DiskTest::default()).unwrap();
        let cert = res.certificate.unwrap();
        let svg = render_svg(&g, &cert).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(svg.matches("<circle").count() == 4);
        let dot = render_dot(&g, &cert).unwrap();
        assert!(dot.contains("graph leveled"));
    }
}
