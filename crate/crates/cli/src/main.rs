use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphprod::invariants::{
    adim_bound, alpha_eq_bounds, alpha_noneq, alternating_family, compression_scan, scan_elements,
};
use graphprod::numeric::decimal;
use graphprod::{check_vertex_cocycle, Model, NormalForm, ProductAction, ProductConfig, VertexId};

/// Normal forms, cosets and affine isometric actions for graph products of groups.
#[derive(Parser, Debug)]
#[command(name = "graphprod", version)]
struct Cli {
    /// Product configuration (JSON).
    #[arg(long, short, global = true)]
    config: Option<PathBuf>,
    /// Replace every vertex cocycle by its padding for properness.
    #[arg(long, global = true)]
    padded: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the canonical normal form of a word.
    Normalize { word: String },
    /// Decide whether two words represent the same element.
    Eq { first: String, second: String },
    /// Print l_X and the syllable length.
    Lengths { word: String },
    /// Apply the retraction onto the special subgroup G_A.
    Retract {
        /// Vertex names, comma-separated.
        #[arg(long)]
        set: String,
        word: String,
    },
    /// Canonical representative of g·G_{st(v)}.
    CosetRep {
        #[arg(long)]
        vertex: String,
        word: String,
    },
    /// Print the cocycle value as a sparse vector and its norm.
    Beta { word: String },
    /// Run an exhaustive verification suite on a ball.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        radius: u64,
    },
    /// Split an element along the kernel of the retraction away from a vertex.
    Decompose {
        #[arg(long)]
        vertex: String,
        word: String,
    },
    /// Upper bound on the asymptotic dimension.
    AdimBound,
    /// Interval for the equivariant compression exponent.
    AlphaBounds,
    /// Non-equivariant compression exponent.
    AlphaNoneq,
    /// Empirical compression of the orbit map.
    Scan {
        /// Ball radius, or the longest word of the family.
        #[arg(long)]
        radius: u64,
        /// CSV output path.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Scan a word family instead of the full ball.
        #[arg(long, value_enum)]
        family: Option<Family>,
    },
    /// Minimum cocycle norm on each sphere.
    Profile {
        #[arg(long, default_value_t = 6)]
        radius: u64,
    },
    /// Join decomposition of the graph.
    Factors,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Suite {
    Cocycle,
    Norm,
    Lengths,
    Cosets,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    /// `a b a b …` over the first two vertices.
    Alternating,
}

/// A failure that maps to an exit code.
enum Failure {
    Usage(String),
    Verification(String),
}

impl From<graphprod::Error> for Failure {
    fn from(e: graphprod::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("I/O: {e}"))
    }
}

type Outcome = Result<(), Failure>;

struct Session {
    model: Model,
    action: ProductAction,
}

impl Session {
    fn open(cli: &Cli) -> Result<Self, Failure> {
        let path = cli
            .config
            .as_ref()
            .ok_or_else(|| Failure::Usage("--config <FILE> is required".into()))?;
        let model = ProductConfig::load(path)?.build()?;
        let action = if cli.padded {
            model.action.pad_for_properness()
        } else {
            model.action.clone()
        };
        Ok(Session { model, action })
    }

    fn parse(&self, word: &str) -> Result<NormalForm, Failure> {
        Ok(self.action.product().parse(word)?)
    }

    fn vertex(&self, name: &str) -> Result<VertexId, Failure> {
        Ok(self.action.product().vertex(name)?)
    }

    fn show(&self, g: &NormalForm) -> String {
        self.action.product().display(g).to_string()
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Outcome {
    let s = Session::open(cli)?;
    let product = s.action.product();
    let graph = product.graph();
    match &cli.command {
        Command::Normalize { word } => writeln!(out, "{}", s.show(&s.parse(word)?))?,
        Command::Eq { first, second } => {
            let equal = product.equals(&s.parse(first)?, &s.parse(second)?);
            writeln!(out, "{equal}")?;
        }
        Command::Lengths { word } => {
            let g = s.parse(word)?;
            writeln!(out, "word_length={}", product.word_length(&g))?;
            writeln!(out, "syllable_length={}", product.syllable_length(&g))?;
        }
        Command::Retract { set, word } => {
            let set = graph.parse_set(set)?;
            writeln!(out, "{}", s.show(&product.retract(&s.parse(word)?, set)?))?;
        }
        Command::CosetRep { vertex, word } => {
            let star = graph.star(s.vertex(vertex)?)?;
            writeln!(out, "{}", s.show(&product.coset_rep(&s.parse(word)?, star)?))?;
        }
        Command::Beta { word } => {
            for line in s.action.render(&s.action.beta(&s.parse(word)?)) {
                writeln!(out, "{line}")?;
            }
        }
        Command::Verify { suite, radius } => verify(&s, *suite, *radius, out)?,
        Command::Decompose { vertex, word } => {
            let v = s.vertex(vertex)?;
            let d = product.decompose(&s.parse(word)?, v)?;
            for f in &d.factors {
                writeln!(
                    out,
                    "factor tag=\"{}\" element={}",
                    product.format(&f.tag),
                    product.format_syllable(graphprod::Syllable::new(v, f.element))
                )?;
            }
            writeln!(out, "quotient={}", s.show(&d.quotient))?;
            writeln!(out, "kernel_length={}", product.kernel_length(&d))?;
        }
        Command::AdimBound => writeln!(out, "{}", adim_bound(graph, &s.model.adims)?)?,
        Command::AlphaBounds => {
            let i = alpha_eq_bounds(graph, &s.model.alphas, &s.model.orders(), s.action.exponent())?;
            writeln!(out, "lower={} upper={} exact={}", decimal(i.lower), decimal(i.upper), i.exact())?;
        }
        Command::AlphaNoneq => writeln!(out, "{}", decimal(alpha_noneq(&s.model.alphas)?))?,
        Command::Scan { radius, out: path, family } => {
            let scan = match family {
                None => compression_scan(&s.action, *radius)?,
                Some(Family::Alternating) => {
                    if graph.len() < 2 {
                        return Err(Failure::Usage("the alternating family needs two vertices".into()));
                    }
                    let words = alternating_family(product, VertexId(0), VertexId(1), *radius as usize)?;
                    scan_elements(&s.action, words)
                }
            };
            if let Some(path) = path {
                scan.write_csv(product, BufWriter::new(File::create(path)?))?;
            }
            writeln!(out, "rows={}", scan.rows.len())?;
            for (n, m) in &scan.sphere_minima {
                writeln!(out, "n={n} m={}", decimal(*m))?;
            }
            let flag = if scan.degenerate { " (degenerate: no sphere with n >= 2)" } else { "" };
            writeln!(out, "exponent={}{flag}", decimal(scan.exponent))?;
        }
        Command::Profile { radius } => {
            for row in s.action.properness_profile(*radius)? {
                writeln!(
                    out,
                    "n={} elements={} min_norm^{}={} min_norm={}",
                    row.length,
                    row.elements,
                    s.action.exponent(),
                    row.min_norm_pow,
                    decimal(row.min_norm)
                )?;
            }
        }
        Command::Factors => {
            for f in graph.join_factors() {
                writeln!(out, "{}", graph.set_names(f).join(" "))?;
            }
        }
    }
    Ok(())
}

fn verify(s: &Session, suite: Suite, radius: u64, out: &mut impl Write) -> Outcome {
    let action = &s.action;
    let product = action.product();
    let ball: Vec<NormalForm> = product.enumerate_ball(radius)?.iter().cloned().collect();
    let mut checks = 0usize;
    let fail = |what: String| Err(Failure::Verification(what));
    match suite {
        Suite::Cocycle => {
            for v in product.graph().vertices() {
                let report = check_vertex_cocycle(action.cocycle(v), radius, action.exponent());
                checks += report.checks;
                if !report.passed() {
                    return fail(format!("vertex {}: {report:?}", product.graph().name(v)));
                }
            }
            for g in &ball {
                for h in &ball {
                    checks += 1;
                    if !action.verify_cocycle_identity(g, h) {
                        return fail(format!("cocycle identity at g={} h={}", s.show(g), s.show(h)));
                    }
                }
            }
        }
        Suite::Norm => {
            for g in &ball {
                checks += 1;
                let id = action.verify_norm_identity(g);
                if !id.holds() {
                    return fail(format!("norm identity at {}: {} != {}", s.show(g), id.lhs, id.rhs));
                }
            }
        }
        Suite::Lengths => {
            for g in &ball {
                checks += 1;
                let add = product.length_additivity(g);
                if !add.holds() {
                    return fail(format!("length additivity at {}: {:?}", s.show(g), add));
                }
            }
        }
        Suite::Cosets => {
            let inverses: Vec<NormalForm> = ball.iter().map(|g| product.invert(g)).collect();
            for v in product.graph().vertices() {
                let star = product.graph().star(v)?;
                let reps: Vec<NormalForm> = ball.iter().map(|g| product.coset_rep(g, star)).collect::<Result<_, _>>()?;
                for i in 0..ball.len() {
                    for j in 0..ball.len() {
                        checks += 1;
                        let member = product.is_member(&product.multiply(&inverses[i], &ball[j]), star);
                        if member != (reps[i] == reps[j]) {
                            return fail(format!("coset reps at {} and {}", s.show(&ball[i]), s.show(&ball[j])));
                        }
                    }
                }
            }
        }
    }
    writeln!(out, "PASS {checks} checks")?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(out, "FAIL {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
