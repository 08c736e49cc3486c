//! Command-line front end: generators, exact chromatic numbers,
//! constructive colorings, verification, transforms, and bounds.
//!
//! Exit codes: 0 on success, 1 on a negative verdict (invalid coloring,
//! inequivalent graphs), 2 on usage or input errors.

use std::fs::File;
use std::io::{BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sgcirc::bounds::{self, Family};
use sgcirc::colorer;
use sgcirc::format;
use sgcirc::generators;
use sgcirc::json::{CertificateJson, ChiCJson, ColoringJson};
use sgcirc::rational::fmt_ratio;
use sgcirc::solver::{self, ChiC};
use sgcirc::{verify_coloring, Sign, SignedGraph, SwitchSet, Verdict};

#[derive(Parser)]
#[command(name = "sgcirc", version, about = "exact circular coloring of signed graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph from the built-in families or constructions.
    Gen(GenArgs),
    /// Compute the exact circular chromatic number of a graph.
    Chic(ChicArgs),
    /// Construct a certified coloring of radius below 4 for a 2-degenerate graph.
    Color2deg(Color2degArgs),
    /// Verify a coloring (or switching certificate) against a graph.
    Verify(VerifyArgs),
    /// Apply a vertex or edge contraction and print the image graph.
    Transform(TransformArgs),
    /// Lift a coloring of a contracted graph back to the original.
    Lift(LiftArgs),
    /// Switch a graph at a set of vertices.
    Switch(SwitchArgs),
    /// Decide switching equivalence of two graphs.
    Equiv(EquivArgs),
    /// Evaluate the closed-form bound for a graph class.
    Bound(BoundArgs),
}

#[derive(Args)]
struct GenArgs {
    #[command(subcommand)]
    family: GenFamily,
    /// Write the graph here instead of stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum GenFamily {
    /// The tight 2-degenerate family on 2i+1 vertices.
    Omega { i: usize },
    /// The subdivided variant on 2i vertices.
    Gammastar { i: usize },
    /// Full subdivision of every edge of a base graph.
    Sgraph { base: PathBuf },
    /// Replace every edge of a base graph by a length-2 path.
    T2 { base: PathBuf },
    /// Complete graph with all edges of one sign.
    Kn {
        n: usize,
        #[arg(value_parser = parse_sign, default_value = "+")]
        sign: Sign,
    },
    /// Cycle with an explicit sign pattern such as "+++-".
    Cycle { n: usize, pattern: String },
}

#[derive(Args)]
struct ChicArgs {
    graph: PathBuf,
    /// Evaluate candidates on this many threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Include a tightness analysis of the witness in the output.
    #[arg(long)]
    tightness: bool,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct Color2degArgs {
    graph: PathBuf,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    graph: PathBuf,
    /// A coloring JSON, or a certificate JSON with a switch set.
    coloring: PathBuf,
}

#[derive(Args)]
struct TransformArgs {
    #[command(subcommand)]
    kind: TransformKind,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum TransformKind {
    /// Contract the closed neighborhood of a vertex.
    Fu { graph: PathBuf, #[arg(long)] vertex: usize },
    /// Contract a positive edge and append the four gadget vertices.
    Fuv {
        graph: PathBuf,
        /// The edge, as "u,v".
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
    },
}

#[derive(Args)]
struct LiftArgs {
    #[command(subcommand)]
    kind: LiftKind,
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LiftKind {
    /// Lift a coloring of the vertex contraction back to the original graph.
    Fu {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
        /// Coloring JSON of the contracted graph.
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Lift a coloring of the original graph to its edge-contraction image.
    Fuv {
        graph: PathBuf,
        #[arg(long, value_parser = parse_pair)]
        edge: (usize, usize),
        /// Coloring JSON of the input graph at radius 4 - eps.
        #[arg(long)]
        coloring: PathBuf,
    },
}

#[derive(Args)]
struct SwitchArgs {
    graph: PathBuf,
    /// Vertices to switch at, as "1,3,4".
    #[arg(long, value_delimiter = ',')]
    set: Vec<usize>,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EquivArgs {
    a: PathBuf,
    b: PathBuf,
}

#[derive(Args)]
struct BoundArgs {
    #[arg(long = "class", value_enum)]
    family: FamilyArg,
    #[arg(long)]
    n: u64,
    /// Recompute the bound from its max-min form and cross-check.
    #[arg(long)]
    maxmin_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "2deg")]
    TwoDeg,
    #[value(name = "bipplanar")]
    BipPlanar,
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s.chars().collect::<Vec<_>>()[..] {
        [c] => Sign::from_symbol(c).ok_or_else(|| format!("sign must be + or -, got `{s}`")),
        _ => Err(format!("sign must be + or -, got `{s}`")),
    }
}

fn parse_pair(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected `u,v`")?;
    let a = a.trim().parse().map_err(|e| format!("{e}"))?;
    let b = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((a, b))
}

fn load_graph(path: &PathBuf) -> sgcirc::Result<SignedGraph> {
    format::load(BufReader::new(File::open(path)?))
}

fn load_coloring(path: &PathBuf) -> sgcirc::Result<sgcirc::Coloring> {
    let j: ColoringJson = serde_json::from_reader(BufReader::new(File::open(path)?))?;
    j.to_coloring()
}

fn emit(text: &str, output: &Option<PathBuf>) -> sgcirc::Result<()> {
    match output {
        Some(path) => {
            let mut f = File::create(path)?;
            writeln!(f, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn emit_json<T: serde::Serialize>(value: &T, output: &Option<PathBuf>) -> sgcirc::Result<()> {
    emit(&serde_json::to_string_pretty(value)?, output)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> sgcirc::Result<ExitCode> {
    match cli.command {
        Command::Gen(args) => {
            let g = match args.family {
                GenFamily::Omega { i } => generators::omega(i),
                GenFamily::Gammastar { i } => generators::gamma_star(i),
                GenFamily::Sgraph { base } => generators::s_of(&load_graph(&base)?)?,
                GenFamily::T2 { base } => generators::t2_of(&load_graph(&base)?)?,
                GenFamily::Kn { n, sign } => generators::complete(n, sign),
                GenFamily::Cycle { n, pattern } => {
                    let signs: Option<Vec<Sign>> =
                        pattern.chars().map(Sign::from_symbol).collect();
                    let signs = signs.ok_or_else(|| sgcirc::Error::Parse {
                        line: 0,
                        msg: format!("bad sign pattern `{pattern}`"),
                    })?;
                    generators::cycle(n, &signs)?
                }
            };
            emit(format::save_string(&g).trim_end(), &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Chic(args) => {
            let g = load_graph(&args.graph)?;
            let result = solver::chi_c_jobs(&g, args.jobs.max(1));
            let tightness = match (&result, args.tightness) {
                (ChiC::Finite { witness, .. }, true) => {
                    Some(solver::analyze_tightness(&g, witness)?)
                }
                _ => None,
            };
            emit_json(&ChiCJson::from_result(&result, tightness.as_ref())?, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Color2deg(args) => {
            let g = load_graph(&args.graph)?;
            let cert = colorer::color_2degenerate(&g)?;
            emit_json(&CertificateJson::from_certificate(&cert)?, &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let g = load_graph(&args.graph)?;
            let text = std::fs::read_to_string(&args.coloring)?;
            // accept a bare coloring or a full certificate
            let (graph, coloring) =
                if let Ok(cert) = serde_json::from_str::<CertificateJson>(&text) {
                    let cert = cert.to_certificate()?;
                    cert.switch_set.validate(&g)?;
                    (g.switch(&cert.switch_set)?, cert.coloring)
                } else {
                    let j: ColoringJson = serde_json::from_str(&text)?;
                    (g, j.to_coloring()?)
                };
            match verify_coloring(&graph, &coloring)? {
                Verdict::Satisfied => {
                    println!("valid");
                    Ok(ExitCode::SUCCESS)
                }
                Verdict::Violation { edge, reason, slack } => {
                    println!(
                        "invalid: edge {}{}{}: {} (slack {})",
                        edge.u,
                        edge.sign.symbol(),
                        edge.v,
                        reason,
                        fmt_ratio(&slack)
                    );
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Transform(args) => {
            match args.kind {
                TransformKind::Fu { graph, vertex } => {
                    let g = load_graph(&graph)?;
                    let c = generators::f_u(&g, vertex)?;
                    let mut text = String::new();
                    text.push_str("# vertex map (old -> new):\n");
                    for (old, new) in c.vertex_map.iter().enumerate() {
                        text.push_str(&format!("# {old} -> {new}\n"));
                    }
                    text.push_str(&format::save_string(&c.graph));
                    emit(text.trim_end(), &args.output)?;
                }
                TransformKind::Fuv { graph, edge: (u, v) } => {
                    let g = load_graph(&graph)?;
                    let image = generators::f_uv(&g, u, v)?;
                    let (up, vp, x, y) = generators::f_uv_new_ids(g.n());
                    let mut text = String::new();
                    text.push_str(&format!("# new vertices: u'={up} v'={vp} x={x} y={y}\n"));
                    text.push_str(&format::save_string(&image));
                    emit(text.trim_end(), &args.output)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift(args) => {
            match args.kind {
                LiftKind::Fu { graph, vertex, coloring } => {
                    let g = load_graph(&graph)?;
                    let c = load_coloring(&coloring)?;
                    let cert = colorer::lift_fu(&g, vertex, &c)?;
                    emit_json(&CertificateJson::from_certificate(&cert)?, &args.output)?;
                }
                LiftKind::Fuv { graph, edge: (u, v), coloring } => {
                    let g = load_graph(&graph)?;
                    let c = load_coloring(&coloring)?;
                    let lifted = colorer::lift_fuv(&g, u, v, &c)?;
                    emit_json(&ColoringJson::from_coloring(&lifted)?, &args.output)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Switch(args) => {
            let g = load_graph(&args.graph)?;
            let s = SwitchSet::from_iter(args.set);
            s.validate(&g)?;
            emit(format::save_string(&g.switch(&s)?).trim_end(), &args.output)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Equiv(args) => {
            let a = load_graph(&args.a)?;
            let b = load_graph(&args.b)?;
            match a.is_equivalent(&b)? {
                Some(witness) => {
                    let set: Vec<usize> = witness.iter().collect();
                    println!("equivalent via switch set {set:?}");
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    println!("not equivalent");
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::Bound(args) => {
            let family = match args.family {
                FamilyArg::TwoDeg => Family::TwoDegenerate,
                FamilyArg::BipPlanar => Family::BipartitePlanar,
            };
            let closed = match family {
                Family::TwoDegenerate => bounds::bound_2degenerate(args.n),
                Family::BipartitePlanar => bounds::bound_bipartite_planar(args.n),
            };
            println!("{}", fmt_ratio(&closed));
            if args.maxmin_check {
                let m = bounds::maxmin_verify(args.n, family);
                if m.value == closed {
                    eprintln!(
                        "max-min check passed (parameter {})",
                        m.parameter
                    );
                } else {
                    eprintln!(
                        "max-min check FAILED: closed form {} vs max-min {}",
                        fmt_ratio(&closed),
                        fmt_ratio(&m.value)
                    );
                    return Ok(ExitCode::from(1));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
