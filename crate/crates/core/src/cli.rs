//! Command-line front end. Exit codes: 0 success, 1 parse or validation
//! failure, 2 not morphable, 3 internal invariant violation.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::io::json;
use crate::io::svg::{render_animated, render_frames, RenderConfig, RenderMode};
use crate::lattice::potential;
use crate::morph::{decide, full_morph};
use crate::plane_graph::PlaneTriangulation;
use crate::rt::construct::canonical_labeling;
use crate::rt::{canonical_frame, construct_rt, extract_wood_set, validate_adt, validate_rt};
use crate::schnyder::{initial_wood, SchnyderWood};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_MORPHABLE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "rt-morph", version, about = "Right-triangle contact representations and their morphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Output {
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check a graph, wood, labeling, representation or plan file.
    Validate {
        file: PathBuf,
        /// Graph for wood and labeling files.
        #[arg(long)]
        graph: Option<PathBuf>,
        /// Wood for labeling files.
        #[arg(long)]
        wood: Option<PathBuf>,
    },
    /// The Schnyder wood of a graph with the given red root, from a canonical order.
    Wood {
        graph: PathBuf,
        #[arg(long)]
        red: usize,
        #[command(flatten)]
        out: Output,
    },
    /// Build the representation of a wood with the given labeling.
    Construct {
        graph: PathBuf,
        wood: PathBuf,
        /// Labeling file; the smallest topological order when omitted.
        labeling: Option<PathBuf>,
        #[arg(long, default_value = "canonical", value_parser = ["canonical"])]
        frame: String,
        #[command(flatten)]
        out: Output,
    },
    /// The set of Schnyder woods a representation belongs to.
    Extract {
        representation: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Lattice potential of a wood.
    Potential {
        graph: PathBuf,
        wood: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Whether two representations are connected by a piecewise linear morph.
    Decide {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// A piecewise linear morph between two representations.
    Morph {
        first: PathBuf,
        second: PathBuf,
        #[command(flatten)]
        out: Output,
    },
    /// Draw a plan as SVG frames or as one animated SVG.
    Render {
        plan: PathBuf,
        /// Output directory.
        #[arg(short, long)]
        output: PathBuf,
        /// Samples per linear morph; frames go to frames/NNNN.svg.
        #[arg(long, conflicts_with = "animated")]
        frames: Option<u32>,
        /// Write a single animated document, morph.svg.
        #[arg(long)]
        animated: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
        #[arg(long, default_value_t = 20)]
        margin: u32,
        #[arg(long, default_value_t = 10)]
        fps: u32,
    },
}

/// Failure with its exit code.
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InternalInvariant(_) => EXIT_INTERNAL,
            Error::NotMorphable(_) => EXIT_NOT_MORPHABLE,
            _ => EXIT_INVALID,
        };
        Failure { code, message: e.to_string() }
    }
}

type CliResult = std::result::Result<i32, Failure>;

fn at(path: &Path, e: Error) -> Failure {
    let mut f = Failure::from(e);
    f.message = format!("{}: {}", path.display(), f.message);
    f
}

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure { code: EXIT_INVALID, message: format!("{}: {e}", path.display()) })
}

fn load<T>(path: &Path, f: impl FnOnce(&str) -> Result<T>) -> std::result::Result<T, Failure> {
    f(&read(path)?).map_err(|e| at(path, e))
}

fn load_graph(path: &Path) -> std::result::Result<Arc<PlaneTriangulation>, Failure> {
    load(path, json::parse_graph).map(Arc::new)
}

fn load_wood(path: &Path, g: &Arc<PlaneTriangulation>) -> std::result::Result<SchnyderWood, Failure> {
    load(path, |s| json::parse_wood(s, g))
}

fn emit(out: &Output, text: &str) -> std::result::Result<(), Failure> {
    match &out.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure { code: EXIT_INVALID, message: format!("{}: {e}", p.display()) }),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn report(path: &Path, what: &str, d: Vec<String>) -> i32 {
    if d.is_empty() {
        eprintln!("{}: valid {what}", path.display());
        EXIT_OK
    } else {
        for m in d {
            eprintln!("{}: {m}", path.display());
        }
        EXIT_INVALID
    }
}

fn need<'a>(file: &Path, p: Option<&'a Path>, flag: &str) -> std::result::Result<&'a Path, Failure> {
    p.ok_or_else(|| Failure { code: EXIT_INVALID, message: format!("{}: {flag} is required for this file", file.display()) })
}

fn validate(file: &Path, graph: Option<&Path>, wood: Option<&Path>) -> CliResult {
    let text = read(file)?;
    let v: Value = serde_json::from_str(&text).map_err(|e| at(file, Error::Parse(e.to_string())))?;
    let has = |k: &str| v.get(k).is_some();
    if has("rotations") {
        json::parse_graph(&text).map_err(|e| at(file, e))?;
        Ok(report(file, "graph", Vec::new()))
    } else if has("triangles") {
        let tris = json::parse_triangles(&text).map_err(|e| at(file, e))?;
        let r = crate::rt::RTRepresentation::from_triangles(tris).map_err(|e| at(file, e))?;
        if let Some(gp) = graph {
            if **r.graph() != *load_graph(gp)? {
                return Ok(report(file, "representation", vec!["contacts induce a different embedding".into()]));
            }
        }
        Ok(report(file, "representation", validate_rt(&r)))
    } else if has("keyframes") {
        let plan = json::parse_plan(&text).map_err(|e| at(file, e))?;
        Ok(report(file, "plan", plan.check().map_err(|e| at(file, e))?))
    } else if has("roots") {
        let g = load_graph(need(file, graph, "--graph")?)?;
        let spec = serde_json::from_value(v).map_err(|e| at(file, Error::Parse(format!("wood: {e}"))))?;
        Ok(report(file, "wood", crate::schnyder::validate_wood_spec(&g, &spec)))
    } else if has("tau") {
        let g = load_graph(need(file, graph, "--graph")?)?;
        let t = load_wood(need(file, wood, "--wood")?, &g)?;
        let tau = json::parse_labeling(&text).map_err(|e| at(file, e))?;
        Ok(report(file, "labeling", validate_adt(&tau, &t)))
    } else {
        Err(at(file, Error::Parse("unrecognized file: expected a graph, wood, labeling, representation or plan".into())))
    }
}

fn execute(cmd: Command) -> CliResult {
    match cmd {
        Command::Validate { file, graph, wood } => validate(&file, graph.as_deref(), wood.as_deref()),
        Command::Wood { graph, red, out } => {
            let g = load_graph(&graph)?;
            let t = initial_wood(&g, red)?;
            emit(&out, &json::wood_to_json(&t))?;
            Ok(EXIT_OK)
        }
        Command::Construct { graph, wood, labeling, frame: _, out } => {
            let g = load_graph(&graph)?;
            let t = load_wood(&wood, &g)?;
            let tau = match &labeling {
                Some(p) => load(p, json::parse_labeling)?,
                None => canonical_labeling(&t)?,
            };
            let r = construct_rt(&t, &tau, &canonical_frame(g.n()))?;
            emit(&out, &json::representation_to_json(&r))?;
            Ok(EXIT_OK)
        }
        Command::Extract { representation, out } => {
            let r = load(&representation, json::parse_representation)?;
            emit(&out, &json::wood_set_to_json(&extract_wood_set(&r)?))?;
            Ok(EXIT_OK)
        }
        Command::Potential { graph, wood, out } => {
            let g = load_graph(&graph)?;
            let t = load_wood(&wood, &g)?;
            emit(&out, &json::potential_to_json(&potential(&t)?))?;
            Ok(EXIT_OK)
        }
        Command::Decide { first, second, out } => {
            let a = load(&first, json::parse_representation)?;
            let b = load(&second, json::parse_representation)?;
            let d = decide(&a, &b)?;
            emit(&out, &json::decision_to_json(&d))?;
            Ok(if d.possible { EXIT_OK } else { EXIT_NOT_MORPHABLE })
        }
        Command::Morph { first, second, out } => {
            let a = load(&first, json::parse_representation)?;
            let b = load(&second, json::parse_representation)?;
            let d = decide(&a, &b)?;
            if !d.possible {
                println!("{}", json::decision_to_json(&d));
                eprintln!("not morphable: {:?}", d.reason);
                return Ok(EXIT_NOT_MORPHABLE);
            }
            let plan = full_morph(&a, &b)?;
            emit(&out, &json::plan_to_json(&plan))?;
            Ok(EXIT_OK)
        }
        Command::Render { plan, output, frames, animated, width, height, margin, fps } => {
            let p = load(&plan, json::parse_plan)?;
            let mode = if animated { RenderMode::Animated } else { RenderMode::Frames };
            let cfg = RenderConfig { width, height, margin, frame_count: frames.unwrap_or(10), fps, mode };
            let io_err = |e: std::io::Error| Failure { code: EXIT_INVALID, message: format!("{}: {e}", output.display()) };
            if animated {
                let doc = render_animated(&p, &cfg)?;
                fs::create_dir_all(&output).map_err(io_err)?;
                fs::write(output.join("morph.svg"), doc).map_err(io_err)?;
            } else {
                let docs = render_frames(&p, &cfg)?;
                let dir = output.join("frames");
                fs::create_dir_all(&dir).map_err(io_err)?;
                for (i, doc) in docs.iter().enumerate() {
                    fs::write(dir.join(format!("{i:04}.svg")), doc).map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

/// Run the command line `argv`, including the program name, and return the
/// exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            f.code
        }
    }
}
