//! `sbg`: interior polynomials, Ehrhart data and HOMFLY tops from the shell.
//!
//! Every command prints a human-readable summary followed by one line of
//! JSON (only the JSON with `--json-only`).
//!
//! Exit codes: 0 success, 1 computation error, 2 malformed input,
//! 3 `verify` found a mismatch, 64 usage error, 66 unreadable input file.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use interior_core::graph::{parse_graph_file, GraphFile, GraphJson};
use interior_core::interior::{interior_prime, recursion_trace, TraceNode};
use interior_core::knot::{
    homfly_with_budget, median_construct, morton_bound, parse_pd, seifert_decompose, verify_main_theorem_with_budget,
    LinkDiagram, DEFAULT_CROSSING_BUDGET,
};
use interior_core::lattice::{count_lattice_points, ehrhart_data, ehrhart_series, signed_ehrhart_series};
use interior_core::signed::{signed_interior_with, signed_ledger, SignedOptions};
use interior_core::{Error, IntPolynomial, LaurentPoly2};

#[derive(Parser)]
#[command(name = "sbg", version, about = "Interior polynomials of signed bipartite graphs and HOMFLY tops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Print only the JSON line.
    #[arg(long, global = true)]
    json_only: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Interior polynomial I' of an all-positive graph.
    Interior {
        graphfile: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Signed interior polynomial I+.
    SignedInterior {
        graphfile: PathBuf,
        /// Skip the alternating-cycle test and always expand the subset sum.
        #[arg(long)]
        no_shortcut: bool,
        /// Include the term-by-term ledger.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Lattice-point counts of the root polytope and the Ehrhart series.
    Ehrhart {
        graphfile: PathBuf,
        /// Largest dilation to count.
        #[arg(long, default_value_t = 6)]
        max_s: u64,
        /// Truncation order of the series.
        #[arg(long, default_value_t = 8)]
        order: usize,
        #[command(flatten)]
        common: Common,
    },
    /// HOMFLY polynomial of a PD code (or of the median diagram of a plane graph).
    Homfly {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        max_crossings: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Seifert circles and Seifert graph of a diagram.
    Seifert {
        file: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Median diagram of a graph file with rotation lines.
    Median {
        graphfile: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the top of the HOMFLY polynomial with the signed interior polynomial.
    Verify {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CROSSING_BUDGET)]
        max_crossings: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Full computation tree of the cycle-deletion recursion.
    RecursionTrace {
        graphfile: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(path: &Path, e: Error) -> Self {
        Failure { code: 2, message: format!("{}: {e}", path.display()) }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::InvalidDiagram(_)
            | Error::InvalidEmbedding(_)
            | Error::NonPlanar(..)
            | Error::DuplicateEdge(_)
            | Error::DuplicateVertex(_)
            | Error::UnknownVertex(_)
            | Error::ColorMismatch(..) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

type Outcome = Result<Output, Failure>;

struct Output {
    text: String,
    json: String,
    code: u8,
}

/// Puts `"format": 1` in front of any serializable body.
#[derive(Serialize)]
struct Versioned<T: Serialize> {
    format: u32,
    #[serde(flatten)]
    body: T,
}

fn output(text: String, body: impl Serialize) -> Outcome {
    let json = serde_json::to_string(&Versioned { format: 1, body }).expect("serializable");
    Ok(Output { text, json, code: 0 })
}

#[derive(Serialize)]
struct Ints(#[serde(with = "interior_core::poly::bigint_json::vec")] Vec<BigInt>);

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure { code: 66, message: format!("{}: {e}", path.display()) })
}

fn load_graph(path: &Path) -> Result<GraphFile, Failure> {
    parse_graph_file(&read(path)?).map_err(|e| Failure::input(path, e))
}

fn load_plane_graph(path: &Path) -> Result<GraphFile, Failure> {
    let f = load_graph(path)?;
    if f.embedding.is_none() {
        return Err(Failure { code: 2, message: format!("{}: no rotation (`R`) lines", path.display()) });
    }
    Ok(f)
}

/// Whether the first meaningful line looks like PD rather than a graph.
fn looks_like_pd(text: &str) -> bool {
    let first = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).find(|l| !l.is_empty());
    match first {
        Some(l) => l.starts_with("PD") || l.starts_with('X') || l.starts_with("O ") || l == "O" || l.starts_with("S "),
        None => false,
    }
}

/// A PD file, or the median diagram of a graph file with rotations.
fn load_diagram(path: &Path) -> Result<LinkDiagram, Failure> {
    let text = read(path)?;
    if looks_like_pd(&text) {
        return parse_pd(&text).map_err(|e| Failure::input(path, e));
    }
    let f = load_plane_graph(path)?;
    Ok(median_construct(&f.graph, f.embedding.as_ref().expect("checked"))?)
}

fn poly_line(name: &str, p: &IntPolynomial) -> String {
    format!("{name} = {}\n", p.to_text())
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Interior { graphfile, .. } => {
            let g = load_graph(&graphfile)?.graph;
            let p = interior_prime(&g)?;
            output(poly_line("I'", &p), &p)
        }
        Command::SignedInterior { graphfile, no_shortcut, trace, .. } => {
            let g = load_graph(&graphfile)?.graph;
            let opts = SignedOptions { shortcut: !no_shortcut, ..SignedOptions::default() };
            if !trace {
                let p = signed_interior_with(&g, opts)?;
                return output(poly_line("I+", &p), &p);
            }
            let ledger = signed_ledger(&g)?;
            let mut text = String::new();
            for row in &ledger.rows {
                let sign = if row.sign > 0 { '+' } else { '-' };
                writeln!(text, "|S| = {}  {sign}{} x ({})", row.size, row.count, row.interior.to_text()).unwrap();
            }
            text += &poly_line("I+", &ledger.total);
            #[derive(Serialize)]
            struct Body<'a> {
                #[serde(flatten)]
                total: &'a IntPolynomial,
                ledger: &'a interior_core::signed::SignedLedger,
            }
            output(text, Body { total: &ledger.total, ledger: &ledger })
        }
        Command::Ehrhart { graphfile, max_s, order, .. } => {
            let g = load_graph(&graphfile)?.graph;
            let counts: Vec<BigInt> = (0..=max_s).map(|s| count_lattice_points(&g, s)).collect();
            let data = ehrhart_data(&g)?;
            let series = ehrhart_series(&g, order).to_integers()?;
            let signed = if g.has_negative_edge() { Some(Ints(signed_ehrhart_series(&g, order)?.to_integers()?)) } else { None };
            let mut text = String::new();
            let join = |v: &[BigInt]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(" ");
            writeln!(text, "counts s=0..{max_s}: {}", join(&counts)).unwrap();
            let basis: Vec<String> = data.basis_coeffs.iter().map(|c| c.to_string()).collect();
            writeln!(text, "basis coefficients: {}", basis.join(" ")).unwrap();
            writeln!(text, "series to x^{order}: {}", join(&series)).unwrap();
            if let Some(s) = &signed {
                writeln!(text, "signed series to x^{order}: {}", join(&s.0)).unwrap();
            }
            #[derive(Serialize)]
            struct Body {
                counts: Ints,
                ehrhart: interior_core::lattice::EhrhartData,
                series: Ints,
                #[serde(skip_serializing_if = "Option::is_none")]
                signed_series: Option<Ints>,
            }
            output(text, Body { counts: Ints(counts), ehrhart: data, series: Ints(series), signed_series: signed })
        }
        Command::Homfly { file, max_crossings, .. } => {
            let d = load_diagram(&file)?;
            let p = homfly_with_budget(&d, max_crossings)?;
            let bound = morton_bound(&d);
            let top = p.coeff_of_z(bound);
            let text = format!(
                "P = {p}\ncrossings {}, components {}, Morton bound {bound}, max z-degree {}\n",
                d.crossing_count(),
                d.component_count(),
                p.max_z_degree().map_or("none".into(), |k| k.to_string())
            );
            #[derive(Serialize)]
            struct Body {
                crossings: usize,
                components: usize,
                writhe: i64,
                morton_bound: i64,
                max_z_degree: Option<i64>,
                homfly: LaurentPoly2,
                top: LaurentPoly2,
            }
            let body = Body {
                crossings: d.crossing_count(),
                components: d.component_count(),
                writhe: d.writhe(),
                morton_bound: bound,
                max_z_degree: p.max_z_degree(),
                homfly: p,
                top,
            };
            output(text, body)
        }
        Command::Seifert { file, .. } => {
            let d = load_diagram(&file)?;
            let s = seifert_decompose(&d)?;
            let mut text = String::new();
            for c in &s.circles {
                let arcs: Vec<String> = c.arcs.iter().map(|a| a.to_string()).collect();
                writeln!(text, "{:?} {}: {}", c.color, c.label, arcs.join(" ")).unwrap();
            }
            text += &s.graph.to_text(None);
            #[derive(Serialize)]
            struct Body {
                circles: Vec<interior_core::knot::SeifertCircle>,
                graph: GraphJson,
            }
            output(text, Body { graph: GraphJson::from_graph(&s.graph, None), circles: s.circles })
        }
        Command::Median { graphfile, .. } => {
            let f = load_plane_graph(&graphfile)?;
            let d = median_construct(&f.graph, f.embedding.as_ref().expect("checked"))?;
            let pd = d.to_pd_text();
            #[derive(Serialize)]
            struct Body<'a> {
                crossings: &'a [interior_core::knot::Crossing],
                pd: &'a str,
            }
            output(pd.clone(), Body { crossings: d.crossings(), pd: &pd })
        }
        Command::Verify { file, max_crossings, .. } => {
            let d = load_diagram(&file)?;
            let r = verify_main_theorem_with_budget(&d, max_crossings)?;
            let text = format!(
                "top of P      = {}\npredicted top = {}\nexponent {}, I+ = {}\n{}{}\n",
                r.top,
                r.predicted_top,
                r.exponent,
                r.signed_interior.to_text(),
                if r.equal { "equal" } else { "MISMATCH" },
                if r.sharp { ", Morton bound sharp" } else { ", Morton bound not attained" }
            );
            let code = if r.equal { 0 } else { 3 };
            let json = serde_json::to_string(&r).expect("serializable");
            Ok(Output { text, json, code })
        }
        Command::RecursionTrace { graphfile, .. } => {
            let g = load_graph(&graphfile)?.graph;
            let t = recursion_trace(&g)?;
            let mut text = String::new();
            fn walk(n: &TraceNode, depth: usize, out: &mut String) {
                let pad = "  ".repeat(depth);
                match &n.cycle {
                    Some(c) => {
                        let ids: Vec<String> = c.edge_ids.iter().map(|i| i.to_string()).collect();
                        writeln!(out, "{pad}cycle {} -> {}", ids.join(" "), n.value.to_text()).unwrap();
                    }
                    None => writeln!(out, "{pad}forest, {} components -> {}", n.forest_components.unwrap_or(0), n.value.to_text()).unwrap(),
                }
                for b in &n.branches {
                    let ids: Vec<String> = b.deleted.iter().map(|i| i.to_string()).collect();
                    writeln!(out, "{pad}{} delete {}", if b.sign > 0 { '+' } else { '-' }, ids.join(" ")).unwrap();
                    walk(&b.node, depth + 1, out);
                }
            }
            walk(&t, 0, &mut text);
            #[derive(Serialize)]
            struct Body {
                tree: TraceNode,
                leaves: usize,
                value: IntPolynomial,
            }
            output(text, Body { leaves: t.leaf_count(), value: t.value.clone(), tree: t })
        }
    }
}

fn json_only(c: &Command) -> bool {
    match c {
        Command::Interior { common, .. }
        | Command::SignedInterior { common, .. }
        | Command::Ehrhart { common, .. }
        | Command::Homfly { common, .. }
        | Command::Seifert { common, .. }
        | Command::Median { common, .. }
        | Command::Verify { common, .. }
        | Command::RecursionTrace { common, .. } => common.json_only,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let quiet = json_only(&cli.command);
    match run(cli.command) {
        Ok(out) => {
            if !quiet {
                print!("{}", out.text);
            }
            println!("{}", out.json);
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("sbg: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
