use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use geolang::groups::file::{load_group_file, parse_presentation, parse_sections};
use geolang::groups::{fingerprint, AnyEngine, CosetEnumerator, GroupEngine, GroupError};
use geolang::witnesses::{self, Report, WitnessError};
use geolang::{ball, geodesic_language, is_geodesic, pe_check, Bound, GenSet, GeodesicError, PEVerdict};

const VERSION_HEADER: &str = concat!("geolang ", env!("CARGO_PKG_VERSION"));

#[derive(Parser)]
#[command(name = "geolang", version, about = "Geodesic languages and the piecewise-excluding property")]
struct Cli {
    /// Worker threads (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Word-metric ball: one `distance<TAB>element` line per element.
    Ball {
        #[command(flatten)]
        input: GroupArgs,
        #[arg(long, default_value_t = 3)]
        radius: usize,
    },
    /// Geodesic words.
    Geo {
        #[command(subcommand)]
        command: GeoCommand,
    },
    /// The piecewise-excluding property.
    Pe {
        #[command(subcommand)]
        command: PeCommand,
    },
    /// Todd-Coxeter enumeration of a presentation; prints the table.
    Coset {
        #[arg(long)]
        presentation: PathBuf,
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Order statistics of a finite group.
    Fingerprint {
        #[arg(long)]
        group: PathBuf,
    },
    /// Reproduces a worked result.
    Repro {
        target: ReproTarget,
        /// Length bound for `cannon` and `extension`.
        #[arg(long, default_value_t = 6)]
        maxlen: usize,
        /// Random generating sets per configuration for `znc2`.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum GeoCommand {
    /// All geodesics up to a length, or all of them for a finite group.
    Enumerate {
        #[command(flatten)]
        input: GroupArgs,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Whether one word is geodesic.
    Check {
        #[command(flatten)]
        input: GroupArgs,
        #[arg(long)]
        word: String,
    },
}

#[derive(Subcommand)]
enum PeCommand {
    /// Decides (finite, `--exact`) or tries to refute (`--maxlen`) PE.
    Check {
        #[command(flatten)]
        input: GroupArgs,
        #[command(flatten)]
        bound: BoundArgs,
        /// Exit with status 1 if the language is shown not to be PE.
        #[arg(long)]
        expect_pe: bool,
    },
    /// Minimal forbidden subsequences of a PE language.
    Forbidden {
        #[command(flatten)]
        input: GroupArgs,
        #[arg(long, required = true)]
        exact: bool,
    },
}

#[derive(Args)]
struct GroupArgs {
    /// Group file.
    #[arg(long)]
    group: PathBuf,
    /// Generating-set file; defaults to the `[genset]` section of the group file.
    #[arg(long)]
    genset: Option<PathBuf>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct BoundArgs {
    /// Length bound; a PE answer under a bound is reported as inconclusive.
    #[arg(long)]
    maxlen: Option<usize>,
    /// Enumerate until the first empty stratum (finite groups).
    #[arg(long)]
    exact: bool,
}

impl BoundArgs {
    fn bound(&self) -> Bound {
        match self.maxlen {
            Some(l) if !self.exact => Bound::MaxLen(l),
            _ => Bound::Exact,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReproTarget {
    Q8,
    D8,
    Table1,
    Qxq,
    Extension,
    Znc2,
    Quotients,
    Lift,
    Cannon,
    All,
}

/// Failure classes, mapped to exit codes.
enum Failure {
    Refuted(String),
    Input(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Refuted(_) => 1,
            Failure::Input(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Refuted(m) | Failure::Input(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<GroupError> for Failure {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::CapExceeded(_) => Failure::Cap(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<GeodesicError> for Failure {
    fn from(e: GeodesicError) -> Self {
        match e {
            GeodesicError::ResourceCap(_) => Failure::Cap(e.to_string()),
            GeodesicError::Group(g) => g.into(),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Group(g) => g.into(),
            WitnessError::Geodesic(g) => g.into(),
            WitnessError::BadParams(_) => Failure::Input(e.to_string()),
            _ => Failure::Refuted(e.to_string()),
        }
    }
}

/// Report text plus an optional failure that sets the exit code after the
/// text is written.
struct Outcome {
    text: String,
    failure: Option<Failure>,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (text, failure) = match run(&cli.command) {
        Ok(o) => (o.text, o.failure),
        Err(f) => (String::new(), Some(f)),
    };
    let written = match &cli.out {
        Some(path) => fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match failure {
        Some(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
        None => ExitCode::SUCCESS,
    }
}

fn run(command: &Command) -> Result<Outcome, Failure> {
    match command {
        Command::Ball { input, radius } => with_genset(input, |gs| {
            let b = ball(gs, *radius)?;
            let sizes: Vec<String> = b.sphere_sizes().iter().map(usize::to_string).collect();
            Ok(Outcome::ok(format!("sphere sizes: {}\n{}", sizes.join(" "), b.to_text(gs.engine()))))
        }),
        Command::Geo { command: GeoCommand::Enumerate { input, bound } } => with_genset(input, |gs| {
            let geo = geodesic_language(gs, bound.bound())?;
            let sizes: Vec<String> = geo.language.stratum_sizes().iter().map(usize::to_string).collect();
            Ok(Outcome::ok(format!(
                "complete: {}\nstrata: {}\n{}",
                geo.complete(),
                sizes.join(" "),
                geo.language.to_text()
            )))
        }),
        Command::Geo { command: GeoCommand::Check { input, word } } => with_genset(input, |gs| {
            let w = gs.word(word).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(Outcome::ok(format!("word: {}\ngeodesic: {}\n", gs.display(&w), is_geodesic(gs, &w)?)))
        }),
        Command::Pe { command: PeCommand::Check { input, bound, expect_pe } } => with_genset(input, |gs| {
            let geo = geodesic_language(gs, bound.bound())?;
            let verdict = pe_check(&geo);
            let text = verdict.report(gs.alphabet());
            let failure = match &verdict {
                PEVerdict::NotPE { .. } if *expect_pe => Some(Failure::Refuted("geodesic language is not PE".into())),
                PEVerdict::Inconclusive { bound } => {
                    eprintln!("warning: no refutation up to length {bound}; PE is not decided");
                    None
                }
                _ => None,
            };
            Ok(Outcome { text, failure })
        }),
        Command::Pe { command: PeCommand::Forbidden { input, .. } } => with_genset(input, |gs| {
            let geo = geodesic_language(gs, Bound::Exact)?;
            match pe_check(&geo) {
                v @ PEVerdict::PE { .. } => Ok(Outcome::ok(v.report(gs.alphabet()))),
                v => Ok(Outcome {
                    text: v.report(gs.alphabet()),
                    failure: Some(Failure::Refuted("geodesic language is not PE".into())),
                }),
            }
        }),
        Command::Coset { presentation, cap } => {
            let text = read(presentation)?;
            let (p, default_cap) = parse_presentation(&text)?;
            let cap = cap.unwrap_or(default_cap);
            match CosetEnumerator::new(&p, cap).enumerate(&p) {
                Ok(t) => Ok(Outcome::ok(format!("{}names: {}\n", t.to_text(), t.names().join(" ")))),
                Err((e, partial)) => {
                    let spheres = partial.sphere_sizes(5).map(|s| format!("{s:?}")).unwrap_or_else(|| "undefined".into());
                    Ok(Outcome { text: format!("cap exceeded: {cap}\npartial sphere sizes: {spheres}\n"), failure: Some(e.into()) })
                }
            }
        }
        Command::Fingerprint { group } => {
            let f = load_group_file(group)?;
            let t = finite_table(&f.engine)?;
            Ok(Outcome::ok(format!("{}\n", fingerprint(&t))))
        }
        Command::Repro { target, maxlen, samples, seed } => repro(*target, *maxlen, *samples, *seed),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn finite_table(engine: &AnyEngine) -> Result<geolang::FiniteGroupTable, Failure> {
    if engine.order().is_none() {
        return Err(Failure::Input(format!("{} group is infinite", engine.kind())));
    }
    Ok(geolang::FiniteGroupTable::from_engine(engine, 1_000_000)?)
}

/// Loads the group and generating set and runs `f` on them.
fn with_genset(
    input: &GroupArgs,
    f: impl FnOnce(&GenSet<'_, AnyEngine>) -> Result<Outcome, Failure>,
) -> Result<Outcome, Failure> {
    let file = load_group_file(&input.group)?;
    let pairs: Vec<(String, String)> = match &input.genset {
        Some(path) => parse_sections(&read(path)?)?
            .into_iter()
            .filter(|s| s.name == "genset")
            .flat_map(|s| s.entries)
            .collect(),
        None => file.genset.clone(),
    };
    if pairs.is_empty() {
        return Err(Failure::Input("no [genset] section".into()));
    }
    let refs: Vec<(&str, &str)> = pairs.iter().map(|(n, w)| (n.as_str(), w.as_str())).collect();
    let gs = geolang::validate_genset(&file.engine, &refs)?;
    f(&gs)
}

fn repro(target: ReproTarget, maxlen: usize, samples: usize, seed: u64) -> Result<Outcome, Failure> {
    use ReproTarget::*;
    let targets: Vec<ReproTarget> = match target {
        All => vec![Q8, D8, Table1, Qxq, Extension, Znc2, Quotients, Lift, Cannon],
        t => vec![t],
    };
    let mut text = format!("{VERSION_HEADER}\n");
    let mut failed = Vec::new();
    for t in targets {
        let report = match t {
            Q8 => witnesses::q8_survey()?.report(),
            D8 => witnesses::d8()?.report(),
            Table1 => witnesses::table1_report().report(),
            Qxq => {
                let mut r = Report::new("Q8 x Q8");
                r.blocks.push(witnesses::qxq()?.block("i1 (j1k2) i1^-1"));
                r
            }
            Extension => witnesses::extension_report(maxlen)?,
            Znc2 => witnesses::znc2_report(samples, seed)?,
            Quotients => witnesses::quotient_report()?,
            Lift => witnesses::lift_report()?,
            Cannon => witnesses::cannon(maxlen)?.report(),
            All => unreachable!("expanded above"),
        };
        text.push('\n');
        text.push_str(&report.to_text());
        if !report.ok() {
            failed.push(report.title.clone());
        }
    }
    let failure = (!failed.is_empty()).then(|| Failure::Refuted(format!("failed: {}", failed.join("; "))));
    Ok(Outcome { text, failure })
}
