//! The `ptsep` command line.
//!
//! Exit codes: `0` affirmative answer, `1` negative answer, `2` usage, input
//! or contract error. Output is line oriented and deterministic.
//!
//! | command | prints |
//! |---|---|
//! | `separate --method pt\|prefix [--evidence] F1 F2` | `SEPARABLE` / `NOT_SEPARABLE`, then evidence lines |
//! | `is-pt F` | `PIECEWISE_TESTABLE` / `NOT_PIECEWISE_TESTABLE` |
//! | `oracle --max-n N F1 F2` | `SEPARABLE at n=K` / `COMMON_CLASS up to n=N` |
//! | `witness --n N F1 F2` | the common pattern and two `∼N`-equivalent words |
//! | `gen-sat CNF OUT` | writes `OUT.A1.aut` and `OUT.A2.aut` |
//! | `same-content [--max-len L] F1 F2` | `FOUND` with `u:`/`v:`, `NOT_FOUND` or `LENGTH_BOUND_REACHED` |
//! | `forest [--chars] TOKEN...` | the height and an indented factorization tree |

use std::ffi::OsString;
use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::alphabet::{Letter, Word};
use crate::automaton::Automaton;
use crate::error::Error;
use crate::format::{parse_automaton, serialize};
use crate::hardness::{parse_dimacs, same_content_witness, sat_reduction, ContentSearch};
use crate::prefix::prefix_separable;
use crate::pt::{common_pattern, is_piecewise_testable, pt_separable};
use crate::subword::forest::ramsey_factorization;
use crate::subword::pattern::{pattern_witness, realize_pattern, FactorizationPattern};
use crate::subword::{oracle_pt_separable, OracleVerdict};

#[derive(Parser, Debug)]
#[command(
    name = "ptsep",
    version,
    about = "Separation of regular languages by piecewise testable and prefix-testable languages"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether L(F1) can be separated from L(F2).
    Separate {
        #[arg(long, value_enum, default_value_t = Method::Pt)]
        method: Method,
        /// Also print why: a common pattern, or a separating level.
        #[arg(long)]
        evidence: bool,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Decide whether a deterministic automaton recognizes a piecewise
    /// testable language.
    IsPt { file: PathBuf },
    /// Brute-force search for a separating level n ≤ N over subword profiles.
    Oracle {
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Print a common factorization pattern and a pair of words, one from
    /// each language, with the same subwords of length ≤ n.
    Witness {
        #[arg(long, default_value_t = 3)]
        n: usize,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Write the two automata of the 3-SAT reduction for a DIMACS CNF.
    GenSat { cnf: PathBuf, out: String },
    /// Search for words of equal content in both languages
    /// (exhaustive, exponential in the alphabet size).
    SameContent {
        #[arg(long, default_value_t = 64)]
        max_len: usize,
        file1: PathBuf,
        file2: PathBuf,
    },
    /// Print a Ramseyan factorization tree for the content morphism.
    Forest {
        /// Split every token into single-character letters.
        #[arg(long)]
        chars: bool,
        #[arg(required = true)]
        tokens: Vec<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pt,
    Prefix,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Pt => "pt",
            Method::Prefix => "prefix",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictKind {
    Separable,
    NotSeparable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// A factorization pattern both languages have paths for.
    Pattern(FactorizationPattern),
    /// The smallest level at which no subword class meets both languages.
    Level(usize),
}

/// Answer of `separate`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub method: Method,
    pub evidence: Option<Evidence>,
}

/// Levels tried by the oracle when `separate --evidence` reports a
/// separating level.
const EVIDENCE_MAX_LEVEL: usize = 6;

impl Verdict {
    pub fn decide(
        method: Method,
        a1: &Automaton,
        a2: &Automaton,
        evidence: bool,
    ) -> Result<Verdict, Error> {
        let separable = match method {
            Method::Pt => pt_separable(a1, a2),
            Method::Prefix => prefix_separable(a1, a2),
        };
        let evidence = match (evidence, method, separable) {
            (false, _, _) | (true, Method::Prefix, _) => None,
            (true, Method::Pt, false) => common_pattern(a1, a2)?.map(Evidence::Pattern),
            (true, Method::Pt, true) => match oracle_pt_separable(a1, a2, EVIDENCE_MAX_LEVEL) {
                Ok(OracleVerdict::SeparableAt(n)) => Some(Evidence::Level(n)),
                _ => None,
            },
        };
        Ok(Verdict {
            kind: if separable {
                VerdictKind::Separable
            } else {
                VerdictKind::NotSeparable
            },
            method,
            evidence,
        })
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            VerdictKind::Separable => 0,
            VerdictKind::NotSeparable => 1,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{}",
            match self.kind {
                VerdictKind::Separable => "SEPARABLE",
                VerdictKind::NotSeparable => "NOT_SEPARABLE",
            }
        )?;
        match &self.evidence {
            Some(Evidence::Pattern(p)) => write!(f, "{p}"),
            Some(Evidence::Level(n)) => writeln!(f, "level: {n}"),
            None => Ok(()),
        }
    }
}

/// Result of one command: exit code and the text for both streams.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn out(code: i32, stdout: String) -> Self {
        Outcome {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(message: impl fmt::Display) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Runs the command line `args` (program name first) without touching the
/// process streams.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::out(0, text)
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(outcome) => outcome,
    }
}

fn load(path: &Path) -> Result<Automaton, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::error(format_args!("{}: {e}", path.display())))?;
    parse_automaton(&text).map_err(|e| Outcome::error(format_args!("{}: {e}", path.display())))
}

fn execute(command: Command) -> Result<Outcome, Outcome> {
    match command {
        Command::Separate {
            method,
            evidence,
            file1,
            file2,
        } => {
            let (a1, a2) = (load(&file1)?, load(&file2)?);
            let verdict = Verdict::decide(method, &a1, &a2, evidence).map_err(Outcome::error)?;
            Ok(Outcome::out(verdict.exit_code(), verdict.to_string()))
        }
        Command::IsPt { file } => {
            let d = load(&file)?;
            match is_piecewise_testable(&d) {
                Ok(true) => Ok(Outcome::out(0, "PIECEWISE_TESTABLE\n".into())),
                Ok(false) => Ok(Outcome::out(1, "NOT_PIECEWISE_TESTABLE\n".into())),
                Err(Error::NotDeterministic) => Err(Outcome::error(format_args!(
                    "{}: is-pt needs a deterministic automaton (at most one initial state \
                     and at most one transition per state and letter); \
                     use `separate` with an explicit complement for NFAs",
                    file.display()
                ))),
                Err(e) => Err(Outcome::error(e)),
            }
        }
        Command::Oracle {
            max_n,
            file1,
            file2,
        } => {
            let (a1, a2) = (load(&file1)?, load(&file2)?);
            let verdict = oracle_pt_separable(&a1, &a2, max_n).map_err(Outcome::error)?;
            let code = match verdict {
                OracleVerdict::SeparableAt(_) => 0,
                OracleVerdict::CommonClassUpTo(_) => 1,
            };
            Ok(Outcome::out(code, format!("{verdict}\n")))
        }
        Command::Witness { n, file1, file2 } => {
            if n == 0 {
                return Err(Outcome::error(Error::LevelTooSmall { min: 1, got: 0 }));
            }
            let (a1, a2) = (load(&file1)?, load(&file2)?);
            let Some(pattern) = common_pattern(&a1, &a2).map_err(Outcome::error)? else {
                return Ok(Outcome::out(1, "SEPARABLE\n".into()));
            };
            let canonical = pattern_witness(&pattern, n).map_err(Outcome::error)?;
            let realized = |a: &Automaton| {
                realize_pattern(a, &pattern, n)
                    .expect("extracted patterns have paths in both inputs")
            };
            let mut out = pattern.to_string();
            let _ = writeln!(out, "canonical: {canonical}");
            let _ = writeln!(out, "v: {}", realized(&a1));
            let _ = writeln!(out, "w: {}", realized(&a2));
            Ok(Outcome::out(0, out))
        }
        Command::GenSat { cnf, out } => {
            let text = std::fs::read_to_string(&cnf)
                .map_err(|e| Outcome::error(format_args!("{}: {e}", cnf.display())))?;
            let f = parse_dimacs(&text)
                .map_err(|e| Outcome::error(format_args!("{}: {e}", cnf.display())))?;
            let (a1, a2) = sat_reduction(&f);
            let mut report = String::new();
            for (suffix, a) in [("A1", &a1), ("A2", &a2)] {
                let path = format!("{out}.{suffix}.aut");
                std::fs::write(&path, serialize(a))
                    .map_err(|e| Outcome::error(format_args!("{path}: {e}")))?;
                let _ = writeln!(report, "wrote {path}");
            }
            Ok(Outcome::out(0, report))
        }
        Command::SameContent {
            max_len,
            file1,
            file2,
        } => {
            let (a1, a2) = (load(&file1)?, load(&file2)?);
            let result = same_content_witness(&a1, &a2, max_len).map_err(Outcome::error)?;
            let mut outcome = match result {
                ContentSearch::Found(u, v) => Outcome::out(0, format!("FOUND\nu: {u}\nv: {v}\n")),
                ContentSearch::NotFound => Outcome::out(1, "NOT_FOUND\n".into()),
                ContentSearch::LengthBoundReached => Outcome::out(
                    1,
                    format!("LENGTH_BOUND_REACHED\nno pair among words of length <= {max_len}\n"),
                ),
            };
            outcome.stderr =
                "note: same-content search is exhaustive and exponential in the alphabet size\n"
                    .into();
            Ok(outcome)
        }
        Command::Forest { chars, tokens } => {
            let letters: Vec<Letter> = if chars {
                tokens
                    .iter()
                    .flat_map(|t| t.chars())
                    .map(|c| Letter::new(&c.to_string()))
                    .collect::<Result<_, _>>()
            } else {
                tokens
                    .iter()
                    .map(|t| Letter::new(t))
                    .collect::<Result<_, _>>()
            }
            .map_err(Outcome::error)?;
            let tree = ramsey_factorization(&Word::from(letters)).map_err(Outcome::error)?;
            Ok(Outcome::out(
                0,
                format!("height: {}\n{tree}", tree.height()),
            ))
        }
    }
}
