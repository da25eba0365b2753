use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gelab::input::{parse_distribution, parse_graph, read_to_string, GraphFormat, InputError};
use gelab::output::{self, ChiFReport, EntropyReport, GraphReport, MaximizerReport, SymmetryReport};
use gelab_core::constructions::{blow_up, hardness_gadget, substitute, substitute_distribution, union, GadgetSpec};
use gelab_core::entropy::{Variant, DEFAULT_MAX_ITERATIONS, DEFAULT_TOLERANCE};
use gelab_core::independent::DEFAULT_VERTEX_CAP;
use gelab_core::oracle::{brute_entropy, brute_entropy_seeded, SEEDS};
use gelab_core::{
    entropy, fractional_chromatic_number, is_entropy_maximizer, is_symmetric, Distribution, EntropyOptions, Error,
    Graph, Limits,
};
use serde::Serialize;

/// Graph entropy, fractional chromatic numbers and entropy-symmetry
/// certificates.
///
/// Exit status: 0 success or "yes", 1 "no" (symmetric, maximizer),
/// 2 input error, 3 Frank-Wolfe did not converge, 4 enumeration cap exceeded.
#[derive(Parser)]
#[command(name = "gelab", version)]
struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Format of input graph files.
    #[arg(long, global = true, value_enum, default_value_t = GraphFormat::EdgeList)]
    format: GraphFormat,

    /// Largest graph the independent-set enumerations accept (at most 64).
    #[arg(long, global = true, env = "GELAB_CAP", default_value_t = DEFAULT_VERTEX_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graph entropy H(G, P) in bits, with a duality-gap certificate.
    Entropy {
        graph: PathBuf,
        /// Distribution file (`v p_v` lines); uniform when omitted.
        #[arg(long)]
        dist: Option<PathBuf>,
        /// Target duality gap in bits.
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[arg(long, default_value_t = DEFAULT_MAX_ITERATIONS)]
        max_iterations: usize,
        /// Run plain Frank-Wolfe instead of the away-step variant.
        #[arg(long)]
        classic: bool,
    },
    /// Exact fractional chromatic number with an optimal fractional coloring.
    Chif { graph: PathBuf },
    /// Decide whether the uniform distribution maximizes the entropy.
    Symmetric { graph: PathBuf },
    /// Decide whether a distribution maximizes the entropy.
    Maximizer {
        graph: PathBuf,
        /// Distribution file; uniform when omitted.
        #[arg(long)]
        dist: Option<PathBuf>,
    },
    /// Emit the symmetry hardness gadget built from F.
    Gadget {
        graph: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Emit G with vertex `--vertex` replaced by the graph REPLACEMENT.
    Substitute {
        graph: PathBuf,
        #[arg(long)]
        vertex: usize,
        replacement: PathBuf,
        /// Distribution on G; with --replacement-dist, the substituted
        /// distribution is written to --dist-out.
        #[arg(long, requires_all = ["replacement_dist", "dist_out"])]
        dist: Option<PathBuf>,
        #[arg(long, requires = "dist")]
        replacement_dist: Option<PathBuf>,
        #[arg(long, requires = "dist")]
        dist_out: Option<PathBuf>,
    },
    /// Emit the blow-up of G encoding a rational distribution.
    Blowup {
        graph: PathBuf,
        #[arg(long)]
        dist: PathBuf,
    },
    /// Emit the edge union of two graphs on the same vertex set.
    Union { first: PathBuf, second: PathBuf },
    /// Brute-force upper bound on the entropy (graphs up to 10 vertices).
    BruteEntropy {
        graph: PathBuf,
        #[arg(long)]
        dist: Option<PathBuf>,
        /// Stop when the projected-gradient step is below this norm.
        #[arg(long, default_value_t = 1e-10)]
        precision: f64,
        /// Run only this start instead of the fixed multi-start seeds.
        #[arg(long)]
        seed: Option<u64>,
    },
}

enum Failure {
    Input(String),
    Core(Error),
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::NonConvergence(_)) => 3,
            Failure::Core(Error::VertexCapExceeded { .. } | Error::SetCapExceeded { .. }) => 4,
            _ => 2,
        }
    }
}

struct Context {
    json: bool,
    format: GraphFormat,
    limits: Limits,
}

impl Context {
    fn graph(&self, path: &Path) -> Result<Graph, Failure> {
        let text = read_to_string(path)?;
        parse_graph(&text, self.format).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }

    fn distribution(&self, path: Option<&Path>, n: usize) -> Result<Distribution, Failure> {
        let Some(path) = path else {
            if n == 0 {
                return Err(Failure::Core(Error::EmptyGraph));
            }
            return Ok(Distribution::uniform(n));
        };
        let text = read_to_string(path)?;
        let parsed = parse_distribution(&text, n).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
        if let Some(w) = parsed.warning {
            eprintln!("warning: {}: {w}", path.display());
        }
        Ok(parsed.distribution)
    }

    fn print<T: Serialize>(&self, report: &T, text: impl FnOnce() -> String) {
        if self.json {
            println!("{}", serde_json::to_string_pretty(report).expect("reports serialize"));
        } else {
            print!("{}", text());
        }
    }

    fn emit_graph(&self, command: &'static str, g: &Graph, title: String, labels: Vec<String>) {
        if self.json {
            self.print(&GraphReport::new(command, g, labels), String::new);
        } else {
            let mut comments = vec![title];
            comments.extend(labels.iter().enumerate().map(|(i, l)| format!("label {i} = {l}")));
            print!("{}", output::edge_list(g, &comments));
        }
    }
}

fn verdict(yes: bool) -> ExitCode {
    ExitCode::from(if yes { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let ctx = Context { json: cli.json, format: cli.format, limits: Limits::with_vertex_cap(cli.cap) };
    match cli.command {
        Command::Entropy { graph, dist, tol, max_iterations, classic } => {
            let g = ctx.graph(&graph)?;
            let p = ctx.distribution(dist.as_deref(), g.n())?;
            let variant = if classic { Variant::Classic } else { Variant::AwayStep };
            let options = EntropyOptions { tol, max_iterations, variant, limits: ctx.limits };
            match entropy(&g, &p, &options) {
                Ok(r) => ctx.print(&EntropyReport::from(&r), || output::entropy_text(&r)),
                Err(Error::NonConvergence(r)) => {
                    ctx.print(&EntropyReport::from(&*r), || output::entropy_text(&r));
                    return Err(Failure::Core(Error::NonConvergence(r)));
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Chif { graph } => {
            let g = ctx.graph(&graph)?;
            let (chi, coloring) = fractional_chromatic_number(&g, &ctx.limits)?;
            let report = ChiFReport::new(&chi, &coloring);
            ctx.print(&report, || report.text());
        }
        Command::Symmetric { graph } => {
            let g = ctx.graph(&graph)?;
            let v = is_symmetric(&g, &ctx.limits)?;
            ctx.print(&SymmetryReport::from(&v), || output::symmetry_text(&v));
            return Ok(verdict(v.is_symmetric));
        }
        Command::Maximizer { graph, dist } => {
            let g = ctx.graph(&graph)?;
            let p = ctx.distribution(dist.as_deref(), g.n())?;
            let v = is_entropy_maximizer(&g, &p, &ctx.limits)?;
            ctx.print(&MaximizerReport::from(&v), || output::maximizer_text(&v));
            return Ok(verdict(v.is_maximizer));
        }
        Command::Gadget { graph, k } => {
            let f = ctx.graph(&graph)?;
            let spec = GadgetSpec::new(f, k)?;
            let g = hardness_gadget(&spec);
            let labels = (0..g.n())
                .map(|x| match spec.pair_of(x) {
                    Some((v, b)) => format!("(v{v},b{b})"),
                    None => format!("a{x}"),
                })
                .collect();
            ctx.emit_graph("gadget", &g, format!("hardness gadget k={k} from {}", graph.display()), labels);
        }
        Command::Substitute { graph, vertex, replacement, dist, replacement_dist, dist_out } => {
            let g = ctx.graph(&graph)?;
            let f = ctx.graph(&replacement)?;
            let s = substitute(&g, vertex, &f)?;
            let mut labels = vec![String::new(); s.graph.n()];
            for (u, new) in s.g_labels.iter().enumerate() {
                if let Some(x) = new {
                    labels[*x] = format!("g{u}");
                }
            }
            for (u, &x) in s.f_labels.iter().enumerate() {
                labels[x] = format!("f{u}");
            }
            if let (Some(pd), Some(qd), Some(out)) = (dist, replacement_dist, dist_out) {
                let p = ctx.distribution(Some(&pd), g.n())?;
                let q = ctx.distribution(Some(&qd), f.n())?;
                let pq = substitute_distribution(&p, vertex, &q)?;
                let text: String = match pq.exact_weights() {
                    Some(w) => w.iter().enumerate().map(|(v, x)| format!("{v} {x}\n")).collect(),
                    None => pq.probs().iter().enumerate().map(|(v, x)| format!("{v} {x}\n")).collect(),
                };
                std::fs::write(&out, text)
                    .map_err(|e| Failure::Input(format!("cannot write {}: {e}", out.display())))?;
            }
            let title = format!("{} with vertex {vertex} replaced by {}", graph.display(), replacement.display());
            ctx.emit_graph("substitute", &s.graph, title, labels);
        }
        Command::Blowup { graph, dist } => {
            let g = ctx.graph(&graph)?;
            let p = ctx.distribution(Some(&dist), g.n())?;
            let (gb, spec) = blow_up(&g, &p)?;
            let mut labels = vec![String::new(); gb.n()];
            for v in 0..g.n() {
                for (i, x) in spec.copies(v).enumerate() {
                    labels[x] = format!("v{v} copy {i}");
                }
            }
            ctx.emit_graph("blowup", &gb, format!("blow-up of {} with m={}", graph.display(), spec.m), labels);
        }
        Command::Union { first, second } => {
            let f = ctx.graph(&first)?;
            let g = ctx.graph(&second)?;
            let u = union(&f, &g)?;
            let labels = (0..u.n()).map(|v| format!("v{v}")).collect();
            ctx.emit_graph("union", &u, format!("union of {} and {}", first.display(), second.display()), labels);
        }
        Command::BruteEntropy { graph, dist, precision, seed } => {
            let g = ctx.graph(&graph)?;
            let p = ctx.distribution(dist.as_deref(), g.n())?;
            let (value, seeds) = match seed {
                Some(s) => (brute_entropy_seeded(&g, &p, precision, s)?, vec![s]),
                None => (brute_entropy(&g, &p, precision)?, SEEDS.collect()),
            };
            let report = output::BruteEntropyReport { command: "brute-entropy", value, precision, seeds };
            ctx.print(&report, || format!("value {value}\n"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(failure) => {
            match &failure {
                Failure::Input(msg) => eprintln!("error: {msg}"),
                Failure::Core(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
