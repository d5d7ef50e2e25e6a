use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use stratzero::gamegen::{
    bench_run, gen_non_equivalent, gen_non_equivalent_kind, gen_pat_zero_sum, gen_pure_ne, ArithmeticMode,
    BenchConfig, Family, NonEquivalentKind, DEFAULT_RANGE,
};
use stratzero::nash::{solve_strat_ne, support_enumeration, verify_ne};
use stratzero::ser0::classify;
use stratzero::BimatrixGame;
use stratzero_cli::{
    emit_bench_csv, emit_equilibria, emit_report, parse_game_file, render_game_file, ReportDocument, ReportFormat,
};

const EXIT_INPUT: u8 = 2;
const EXIT_INVARIANT: u8 = 3;

#[derive(Parser)]
#[command(name = "stratzero", version, about = "Detect and solve bimatrix games that are zero-sum in disguise")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a game file.
    Check(ReportArgs),
    /// Classify a game file and compute an equilibrium when possible.
    Solve(ReportArgs),
    /// Classify a game file and test strict competitiveness.
    Classify(ReportArgs),
    /// Write a random game of one family.
    Gen {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Destination file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time classification over generated games and write CSV.
    Bench {
        /// Comma-separated sizes, either `N` for square games or `MxN`.
        #[arg(long, value_delimiter = ',', value_parser = parse_size, default_value = "256,512,1024")]
        sizes: Vec<(usize, usize)>,
        #[arg(long, default_value_t = 10)]
        reps: usize,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "equivalent,pure-ne,non-equivalent")]
        families: Vec<FamilyArg>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ModeArg::Exact)]
        mode: ModeArg,
        /// Destination file; standard output when absent.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// List equilibria by support enumeration.
    Oracle {
        file: PathBuf,
        /// Largest support size per player; defaults to min(m, n).
        #[arg(long)]
        max_support: Option<usize>,
        #[arg(long, value_enum, default_value_t = FormatArg::Human)]
        format: FormatArg,
    },
}

#[derive(clap::Args)]
struct ReportArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = FormatArg::Human)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Human,
    Machine,
}

impl From<FormatArg> for ReportFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Human => ReportFormat::Human,
            FormatArg::Machine => ReportFormat::Machine,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Equivalent,
    PureNe,
    NonEquivalent,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Equivalent => Family::Equivalent,
            FamilyArg::PureNe => Family::PureNe,
            FamilyArg::NonEquivalent => Family::NonEquivalent,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exact,
    Float,
}

fn parse_size(text: &str) -> Result<(usize, usize), String> {
    let parse = |s: &str| {
        s.trim()
            .parse::<usize>()
            .ok()
            .filter(|&v| v > 0)
            .ok_or_else(|| format!("bad size {text:?}: expected N or MxN with positive integers"))
    };
    match text.split_once(['x', 'X']) {
        Some((m, n)) => Ok((parse(m)?, parse(n)?)),
        None => {
            let n = parse(text)?;
            Ok((n, n))
        }
    }
}

enum Failure {
    Input(String),
    Invariant(String),
}

type CmdResult = Result<String, Failure>;

fn load(path: &Path) -> Result<BimatrixGame, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_game_file(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_or_return(path: Option<&Path>, text: String) -> CmdResult {
    match path {
        Some(p) => {
            fs::write(p, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", p.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn generate(family: FamilyArg, m: usize, n: usize, seed: u64) -> Result<String, stratzero::Error> {
    let mut header = format!("# family={} seed={seed}\n", Family::from(family).token());
    let game = match family {
        FamilyArg::Equivalent => {
            let (game, truth) = gen_pat_zero_sum(m, n, seed, DEFAULT_RANGE)?;
            header.push_str(&format!("# gamma={}\n", truth.expected_gamma.to_fraction_string()));
            game
        }
        FamilyArg::PureNe => gen_pure_ne(m, n, seed)?,
        FamilyArg::NonEquivalent => {
            let inst = if m < 3 || n < 3 {
                gen_non_equivalent_kind(m, n, seed, NonEquivalentKind::GammaNegative)?
            } else {
                gen_non_equivalent(m, n, seed)?
            };
            header.push_str(&format!("# reason={}\n", inst.expected_reason.token()));
            inst.game
        }
    };
    Ok(header + &render_game_file(&game))
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Check(args) => {
            let game = load(&args.file)?;
            let doc = ReportDocument::from_report(&classify(&game));
            Ok(emit_report(&doc, args.format.into()))
        }
        Command::Classify(args) => {
            let game = load(&args.file)?;
            let report = classify(&game);
            let doc = ReportDocument::from_report(&report).with_strictly_competitive(report.strictly_competitive);
            Ok(emit_report(&doc, args.format.into()))
        }
        Command::Solve(args) => {
            let game = load(&args.file)?;
            let outcome = solve_strat_ne(&game);
            if let Some(prof) = &outcome.profile {
                let ok = verify_ne(game.a(), game.b(), &prof.p, &prof.q)
                    .map_err(|e| Failure::Invariant(e.to_string()))?;
                if !ok {
                    return Err(Failure::Invariant(
                        "computed profile is not an equilibrium of the input game".into(),
                    ));
                }
            }
            Ok(emit_report(&ReportDocument::from_outcome(&outcome), args.format.into()))
        }
        Command::Gen { family, m, n, seed, out } => {
            let text = generate(family, m, n, seed).map_err(|e| Failure::Input(e.to_string()))?;
            write_or_return(out.as_deref(), text)
        }
        Command::Bench { sizes, reps, families, seed, mode, csv } => {
            let config = BenchConfig {
                sizes,
                reps,
                families: families.into_iter().map(Family::from).collect(),
                seed,
                mode: match mode {
                    ModeArg::Exact => ArithmeticMode::Exact,
                    ModeArg::Float => ArithmeticMode::Float,
                },
            };
            let records = bench_run(&config);
            if let Some(bad) = records.iter().find(|r| r.verdict != r.family.expected_verdict()) {
                return Err(Failure::Invariant(format!(
                    "{}x{} {} instance with seed {} was classified {}",
                    bad.m,
                    bad.n,
                    bad.family,
                    bad.seed,
                    bad.verdict.token()
                )));
            }
            write_or_return(csv.as_deref(), emit_bench_csv(&records))
        }
        Command::Oracle { file, max_support, format } => {
            let game = load(&file)?;
            let k = max_support.unwrap_or(game.m().min(game.n()));
            let found = support_enumeration(game.a(), game.b(), k).map_err(|e| Failure::Input(e.to_string()))?;
            Ok(emit_equilibria(game.m(), game.n(), &found, format.into()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = std::panic::catch_unwind(|| run(cli.command))
        .unwrap_or_else(|_| Err(Failure::Invariant("internal error".into())));
    match result {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::FAILURE;
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_INPUT)
        }
        Err(Failure::Invariant(msg)) => {
            eprintln!("invariant violated: {msg}");
            ExitCode::from(EXIT_INVARIANT)
        }
    }
}
