//! Command-line front end for `equivhilb`: model files, text syntax and the
//! `equivhilb` binary's subcommands.
//!
//! Exit codes: 0 success, 1 domain violation or failed check, 2 usage or
//! parse error.

pub mod model_file;
pub mod text;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use equivhilb::arith::series_expand;
use equivhilb::automaton::build_automaton;
use equivhilb::language::{enumerate_ln, is_in_l, monomial_to_word, word_to_monomial};
use equivhilb::model::{reduced_hilbert_series_ordered, ModelError, ReducedSpec};
use equivhilb::oracle::{check_roots_of_unity, check_series};
use equivhilb::{Alphabet, ModelSpec, RatFunc};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model_file::{read_model, ModelFileError};
use crate::text::{parse_monomial, parse_vec, parse_word, TextError};

/// Seed of the sampler used by `check`, fixed so output is reproducible.
pub const CHECK_SEED: u64 = 0x5eed_2024;

/// Upper bound on the number of words `words --list` will materialize.
const WORD_CAP: usize = 1_000_000;

#[derive(Parser, Debug)]
#[command(name = "equivhilb", version, about = "Exact equivariant Hilbert series of hierarchical models")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Where the state counts come from: a model file or `--c` directly.
#[derive(Args, Debug, Clone)]
pub struct Source {
    /// Model file (JSON).
    pub model: Option<PathBuf>,
    /// State counts c_1,...,c_q of a reduced model without fixed facets,
    /// instead of a model file.
    #[arg(long, value_name = "C1,C2,...", conflicts_with = "model")]
    pub c: Option<String>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Table,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the hypotheses of the pipeline; lists every violation.
    Validate { model: PathBuf },
    /// Print the reduced model: state products per facet meeting T and the
    /// fixed facets.
    Reduce { model: PathBuf },
    /// Print the automaton of the reduced model.
    Automaton {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        minimize: bool,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
    },
    /// Print the equivariant Hilbert series as a rational function.
    Series {
        #[command(flatten)]
        source: Source,
        /// Solve over the minimized automaton (the default).
        #[arg(long, conflicts_with = "no_minimize")]
        minimize: bool,
        /// Solve over the automaton as built instead of its minimization.
        /// Same result, much slower for larger state counts.
        #[arg(long)]
        no_minimize: bool,
    },
    /// Print the coefficients of s^n t^d for 0 ≤ n ≤ nmax, 0 ≤ d ≤ dmax.
    Expand {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N1,N2,...")]
        nmax: String,
        #[arg(long)]
        dmax: u32,
    },
    /// Compare the series with the dimension formula and, without fixed
    /// facets, with the roots-of-unity formula.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N1,N2,...")]
        nmax: String,
        #[arg(long)]
        dmax: u32,
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Count (or list) the admissible words with n_j copies of τ_j and d
    /// ζ-letters; or translate one word or monomial.
    Words {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_name = "N1,N2,...")]
        n: Option<String>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        list: bool,
        /// Show membership and the monomial of this word.
        #[arg(long, conflicts_with_all = ["d", "list", "monomial"])]
        word: Option<String>,
        /// Show the word of this monomial (needs --n).
        #[arg(long, conflicts_with_all = ["d", "list"])]
        monomial: Option<String>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    File(#[from] ModelFileError),
    #[error(transparent)]
    Text(#[from] TextError),
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            _ => 2,
        }
    }
}

fn domain(e: impl std::fmt::Display) -> CliError {
    CliError::Domain(e.to_string())
}

/// Parses `args` (including the program name), runs the command, writes to
/// `out` / `err` and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn load(path: &Path) -> Result<ModelSpec, CliError> {
    Ok(read_model(path)?)
}

fn reduced(source: &Source) -> Result<ReducedSpec, CliError> {
    match (&source.model, &source.c) {
        (Some(path), None) => {
            let spec = load(path)?;
            spec.reduce().map_err(domain)
        }
        (None, Some(c)) => {
            let c = parse_vec(c)?;
            if c.contains(&0) {
                return Err(CliError::Usage("--c entries must be positive".into()));
            }
            Ok(ReducedSpec::new(c))
        }
        _ => Err(CliError::Usage("give a model file or --c".into())),
    }
}

fn series(red: &ReducedSpec, minimize: bool) -> Result<RatFunc, CliError> {
    let order: Vec<usize> = (0..red.nu_fixed.len()).collect();
    reduced_hilbert_series_ordered(red, &order, minimize).map_err(|e| match e {
        ModelError::TooManyVariables(_) => CliError::Usage(e.to_string()),
        other => domain(other),
    })
}

fn nvec(text: &str, q: usize, flag: &str) -> Result<Vec<u32>, CliError> {
    let v = parse_vec(text)?;
    if v.len() != q {
        return Err(CliError::Usage(format!(
            "{flag} needs {q} entries (one per facet meeting T), got {}",
            v.len()
        )));
    }
    Ok(v)
}

fn fmt_vec(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

fn write_out(out: &mut dyn Write, s: &str) -> Result<(), CliError> {
    out.write_all(s.as_bytes())
        .map_err(|e| CliError::Usage(format!("cannot write output: {e}")))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Validate { model } => {
            let violations = load(&model)?.validate();
            if violations.is_empty() {
                write_out(out, "valid\n")?;
                return Ok(0);
            }
            let text: String = violations.iter().map(|v| format!("{v}\n")).collect();
            write_out(out, &text)?;
            Ok(1)
        }
        Command::Reduce { model } => {
            let red = load(&model)?.reduce().map_err(domain)?;
            write_out(out, &red.to_string())?;
            Ok(0)
        }
        Command::Automaton {
            source,
            minimize,
            format,
        } => {
            let red = reduced(&source)?;
            let alphabet = Alphabet::new(&red.cprime).map_err(domain)?;
            let mut dfa = build_automaton(&alphabet);
            if minimize {
                dfa = dfa.minimize();
            }
            let text = match format {
                Format::Dot => dfa.to_dot(),
                Format::Table => dfa.to_table(),
            };
            write_out(out, &text)?;
            Ok(0)
        }
        Command::Series {
            source,
            no_minimize,
            ..
        } => {
            let red = reduced(&source)?;
            let h = series(&red, !no_minimize)?;
            write_out(out, &format!("{h}\n"))?;
            Ok(0)
        }
        Command::Expand { source, nmax, dmax } => {
            let red = reduced(&source)?;
            let nmax = nvec(&nmax, red.q(), "--nmax")?;
            let h = series(&red, true)?;
            let mut bound = nmax.clone();
            bound.push(dmax);
            let table = series_expand(&h, &bound).map_err(domain)?;
            let mut text = String::new();
            let mut n = vec![0u32; nmax.len()];
            'outer: loop {
                for d in 0..=dmax {
                    let mut point = n.clone();
                    point.push(d);
                    let c = table.coeff(&point).expect("inside the box");
                    text.push_str(&format!("n=({}) d={} {}\n", fmt_vec(&n), d, c));
                }
                let mut pos = n.len();
                loop {
                    if pos == 0 {
                        break 'outer;
                    }
                    pos -= 1;
                    if n[pos] < nmax[pos] {
                        n[pos] += 1;
                        n[pos + 1..].iter_mut().for_each(|x| *x = 0);
                        break;
                    }
                }
            }
            write_out(out, &text)?;
            Ok(0)
        }
        Command::Check {
            source,
            nmax,
            dmax,
            tol,
            trials,
        } => {
            let red = reduced(&source)?;
            let nmax = nvec(&nmax, red.q(), "--nmax")?;
            let h = series(&red, true)?;
            let report = check_series(&red, &h, &nmax, dmax).map_err(domain)?;
            let mut text = report.to_string();
            let mut ok = report.passed();
            text.push_str(&format!(
                "coefficients {} ({} cells, {} mismatches)\n",
                if ok { "PASS" } else { "FAIL" },
                report.cells.len(),
                report.mismatches().count()
            ));
            if red.nu_fixed.is_empty() {
                let mut rng = ChaCha8Rng::seed_from_u64(CHECK_SEED);
                let roots = check_roots_of_unity(&red, &h, trials, tol, &mut rng).map_err(domain)?;
                ok &= roots.passed();
                text.push_str(&roots.to_string());
            } else {
                text.push_str("roots-of-unity SKIP (model has fixed facets)\n");
            }
            text.push_str(if ok { "result PASS\n" } else { "result FAIL\n" });
            write_out(out, &text)?;
            Ok(if ok { 0 } else { 1 })
        }
        Command::Words {
            source,
            n,
            d,
            list,
            word,
            monomial,
        } => {
            let red = reduced(&source)?;
            let alphabet = Alphabet::new(&red.cprime).map_err(domain)?;
            let q = alphabet.q();
            if let Some(word) = word {
                let w = parse_word(&word)?;
                let member = is_in_l(&w, &alphabet);
                let mono = word_to_monomial(&w, q, None).map_err(domain)?;
                let mut text = format!("word {w}\nin language {member}\nmonomial {mono}\n");
                if member {
                    let back = monomial_to_word(&mono, &w.tau_counts(q)).map_err(domain)?;
                    text.push_str(&format!("round trip {back}\n"));
                }
                write_out(out, &text)?;
                return Ok(if member { 0 } else { 1 });
            }
            let n = match n {
                Some(n) => nvec(&n, q, "--n")?,
                None => return Err(CliError::Usage("--n is required".into())),
            };
            if let Some(monomial) = monomial {
                let m = parse_monomial(&monomial)?;
                let w = monomial_to_word(&m, &n).map_err(domain)?;
                write_out(out, &format!("{w}\n"))?;
                return Ok(0);
            }
            let d = d.ok_or_else(|| CliError::Usage("--d is required".into()))?;
            let words = enumerate_ln(&alphabet, &n, d, WORD_CAP).map_err(domain)?;
            let mut text = String::new();
            if list {
                for w in &words {
                    text.push_str(&format!("{w}\n"));
                }
            }
            text.push_str(&format!("count {}\n", words.len()));
            write_out(out, &text)?;
            Ok(0)
        }
    }
}
