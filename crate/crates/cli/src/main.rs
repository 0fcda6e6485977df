//! `upto`: command-line front end for upto-core.
//!
//! Exit codes: 0 true/success, 1 false, 2 fuel exhausted, 64 usage or
//! parse error.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use upto_core::algorithms::{hkc, hkp, hkp_prime, sim, Answer, Budget, Verdict, DEFAULT_PAIR_FUEL};
use upto_core::automata::WeightedAutomaton;
use upto_core::bench::{
    gen_random, render_summary, run_bench, write_csv, Algo, BenchConfig, GenParams,
};
use upto_core::congruence::{HasCongruence, DEFAULT_REWRITE_FUEL};
use upto_core::format::{
    parse_automaton, parse_graph, parse_vector, write_automaton, AnyAutomaton,
};
use upto_core::spath::shortest_paths;
use upto_core::{Error, LMonoid, SemiringId};

const EXIT_FALSE: u8 = 1;
const EXIT_FUEL: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "upto",
    version,
    about = "Equivalence, inclusion and threshold checks for weighted automata"
)]
struct Cli {
    /// Maximum number of pairs extracted from the todo list.
    #[arg(long, global = true, default_value_t = DEFAULT_PAIR_FUEL)]
    fuel: u64,
    /// Maximum number of rewriting steps.
    #[arg(long, global = true, default_value_t = DEFAULT_REWRITE_FUEL)]
    rewrite_fuel: u64,
    /// Print a statistics line after the verdict.
    #[arg(long, global = true)]
    stats: bool,
    /// Print nothing on stdout; the exit code carries the answer.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Language equivalence of two initial vectors (HKC).
    Equiv {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Language inclusion of `left` in `right` (HKP, or HKP' with --sim).
    Incl {
        file: PathBuf,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long)]
        sim: bool,
    },
    /// Checks that every word has weight at most the threshold.
    Threshold {
        file: PathBuf,
        #[arg(long = "vec")]
        vector: String,
        #[arg(long)]
        threshold: u64,
        #[arg(long, default_value = "hkpa")]
        algo: Algo,
    },
    /// Prints the greatest simulation as 1-based `i j` pairs (i below j).
    Sim { file: PathBuf },
    /// Shortest-path weights from a source vertex (1-based).
    Spath {
        file: PathBuf,
        #[arg(long)]
        source: usize,
    },
    /// Generates a random tropical-nat automaton with initial vector unit:1.
    Gen {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        threshold: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs the threshold algorithms on random instances.
    Bench {
        /// Comma-separated `states:threshold` cells.
        #[arg(long)]
        grid: String,
        #[arg(long)]
        runs: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        csv: PathBuf,
    },
}

struct Output {
    quiet: bool,
    stats: bool,
}

impl Output {
    fn line(&self, text: impl AsRef<str>) {
        if !self.quiet {
            println!("{}", text.as_ref());
        }
    }

    /// Prints the answer, then the witness when false, then the stats.
    fn verdict(&self, v: &Verdict, alphabet: &[String]) -> u8 {
        self.line(v.answer.as_str());
        if let Some(w) = &v.witness {
            let word: Vec<&str> = w.iter().map(|&i| alphabet[i].as_str()).collect();
            self.line(word.join(" "));
        }
        if self.stats {
            self.line(v.summary(alphabet));
        }
        match v.answer {
            Answer::True => 0,
            Answer::False => EXIT_FALSE,
            Answer::FuelExhausted => EXIT_FUEL,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("upto: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<AnyAutomaton, Error> {
    parse_automaton(&read(path)?).map_err(|e| Error::Usage(format!("{}: {e}", path.display())))
}

fn unsupported(op: &'static str, semiring: SemiringId) -> Error {
    Error::Unsupported { op, semiring }
}

fn run(cli: Cli) -> Result<u8, Error> {
    let budget = Budget {
        pairs: cli.fuel,
        rewrite_steps: cli.rewrite_fuel,
    };
    let out = Output {
        quiet: cli.quiet,
        stats: cli.stats,
    };
    match cli.command {
        Command::Equiv { file, left, right } => {
            let aut = load(&file)?;
            match aut {
                AnyAutomaton::Boolean(a) => equiv(&out, &a, &left, &right, budget),
                AnyAutomaton::TropicalNat(a) => equiv(&out, &a, &left, &right, budget),
                AnyAutomaton::TropicalReal(a) => equiv(&out, &a, &left, &right, budget),
                AnyAutomaton::MaxTimes(a) => equiv(&out, &a, &left, &right, budget),
                AnyAutomaton::Rational(a) => equiv(&out, &a, &left, &right, budget),
            }
        }
        Command::Incl {
            file,
            left,
            right,
            sim,
        } => {
            let aut = load(&file)?;
            match aut {
                AnyAutomaton::Boolean(a) => incl(&out, &a, &left, &right, sim, budget),
                AnyAutomaton::TropicalNat(a) => incl(&out, &a, &left, &right, sim, budget),
                AnyAutomaton::TropicalReal(a) => incl(&out, &a, &left, &right, sim, budget),
                AnyAutomaton::MaxTimes(a) => incl(&out, &a, &left, &right, sim, budget),
                AnyAutomaton::Rational(_) => Err(unsupported("incl", SemiringId::RationalField)),
            }
        }
        Command::Threshold {
            file,
            vector,
            threshold,
            algo,
        } => match load(&file)? {
            AnyAutomaton::TropicalNat(a) => {
                let v = parse_vector(&vector, a.states())?;
                let verdict = algo.run(&a, &v, threshold, budget)?;
                Ok(out.verdict(&verdict, a.alphabet()))
            }
            other => Err(unsupported("threshold", other.semiring())),
        },
        Command::Sim { file } => {
            let aut = load(&file)?;
            match aut {
                AnyAutomaton::Boolean(a) => print_sim(&out, &a),
                AnyAutomaton::TropicalNat(a) => print_sim(&out, &a),
                AnyAutomaton::TropicalReal(a) => print_sim(&out, &a),
                AnyAutomaton::MaxTimes(a) => print_sim(&out, &a),
                AnyAutomaton::Rational(_) => Err(unsupported("sim", SemiringId::RationalField)),
            }
        }
        Command::Spath { file, source } => {
            let graph = parse_graph(&read(&file)?)
                .map_err(|e| Error::Usage(format!("{}: {e}", file.display())))?;
            if !(1..=graph.vertices()).contains(&source) {
                return Err(Error::Usage(format!(
                    "source {source} out of range 1..={}",
                    graph.vertices()
                )));
            }
            match shortest_paths(&graph, source - 1) {
                Ok(d) => {
                    out.line(d.to_string());
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("upto: {e}");
                    Ok(EXIT_FUEL)
                }
            }
        }
        Command::Gen {
            states,
            threshold,
            seed,
            out: path,
        } => {
            let (aut, _) = gen_random(&GenParams::new(states, threshold, seed))?;
            let text = format!(
                "# seed {seed}, threshold {threshold}, initial vector unit:1\n{}",
                write_automaton(&aut)
            );
            match path {
                Some(p) => fs::write(&p, text)
                    .map_err(|e| Error::Usage(format!("{}: {e}", p.display())))?,
                None => out.line(text.trim_end()),
            }
            Ok(0)
        }
        Command::Bench {
            grid,
            runs,
            seed,
            csv,
        } => {
            let config = BenchConfig {
                grid: parse_grid(&grid)?,
                runs_per_cell: runs,
                algos: Algo::ALL.to_vec(),
                seed,
                budget,
            };
            let report = run_bench(&config)?;
            let file = fs::File::create(&csv)
                .map_err(|e| Error::Usage(format!("{}: {e}", csv.display())))?;
            write_csv(&report.rows, io::BufWriter::new(file))?;
            if !out.quiet {
                let mut stdout = io::stdout().lock();
                stdout.write_all(render_summary(&report.summary).as_bytes())?;
            }
            Ok(0)
        }
    }
}

fn equiv<S: HasCongruence>(
    out: &Output,
    aut: &WeightedAutomaton<S>,
    left: &str,
    right: &str,
    budget: Budget,
) -> Result<u8, Error> {
    let v1 = parse_vector(left, aut.states())?;
    let v2 = parse_vector(right, aut.states())?;
    Ok(out.verdict(&hkc(aut, &v1, &v2, budget)?, aut.alphabet()))
}

fn incl<S: LMonoid>(
    out: &Output,
    aut: &WeightedAutomaton<S>,
    left: &str,
    right: &str,
    with_sim: bool,
    budget: Budget,
) -> Result<u8, Error> {
    let v1 = parse_vector(left, aut.states())?;
    let v2 = parse_vector(right, aut.states())?;
    let verdict = if with_sim {
        hkp_prime(aut, &v1, &v2, budget, &sim(aut))?
    } else {
        hkp(aut, &v1, &v2, budget)?
    };
    Ok(out.verdict(&verdict, aut.alphabet()))
}

fn print_sim<S: LMonoid>(out: &Output, aut: &WeightedAutomaton<S>) -> Result<u8, Error> {
    let rel = sim(aut);
    for (i, j) in rel.iter().filter(|(i, j)| i != j) {
        out.line(format!("{} {}", i + 1, j + 1));
    }
    if out.stats {
        out.line(format!("sim_size={}", rel.non_reflexive_len()));
    }
    Ok(0)
}

fn parse_grid(text: &str) -> Result<Vec<(usize, u64)>, Error> {
    text.split(',')
        .map(|cell| {
            let (n, t) = cell.trim().split_once(':').ok_or_else(|| {
                Error::Usage(format!("grid cell `{cell}` is not `states:threshold`"))
            })?;
            let n = n
                .parse()
                .map_err(|_| Error::Usage(format!("invalid state count `{n}`")))?;
            let t = t
                .parse()
                .map_err(|_| Error::Usage(format!("invalid threshold `{t}`")))?;
            Ok((n, t))
        })
        .collect()
}
