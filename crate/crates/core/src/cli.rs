//! The `qsk` command line front end.
//!
//! Exit status: 0 on success, 1 when an asserted verification suite fails,
//! 2 on usage, parse or validation errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classical::schubert;
use crate::error::{Error, Result};
use crate::perm::{enumerate_class, Composition, Partition, PermClass, Permutation};
use crate::poly::{Labels, Polynomial};
use crate::quantum::{
    q_double_schubert, q_factorial_schur, q_monomial, q_schubert, q_schur, quantize,
    stable_approx,
};
use crate::verify::{self, Config, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Ranks above this value need an explicit `--max-n`.
pub const DEFAULT_MAX_N: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "qsk", version, about = "Classical and quantum Schubert polynomials")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Print the second alphabet as a1, a2, ... instead of y1, y2, ...
    #[arg(long, value_enum, default_value_t = Alphabet::Y, global = true)]
    pub alphabet: Alphabet,

    /// Largest rank accepted by any command.
    #[arg(long, env = "QSK_MAX_N", default_value_t = DEFAULT_MAX_N, global = true)]
    pub max_n: usize,

    /// Worker threads for verification (defaults to available parallelism).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alphabet {
    Y,
    A,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Schubert,
    Qschubert,
    Qdouble,
    Qschur,
    Qfactorial,
    Quantize,
    Qmonomial,
    Stable,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute one object and print it.
    Compute {
        #[arg(value_enum)]
        what: Target,
        /// Permutation in one-line notation (`13524` or `1,3,5,2,4`).
        #[arg(long)]
        w: Option<String>,
        /// Ambient rank.
        #[arg(long)]
        n: Option<usize>,
        /// Partition, e.g. `2,1`.
        #[arg(long)]
        shape: Option<String>,
        /// Number of variables of a Schur function.
        #[arg(long)]
        r: Option<usize>,
        /// Polynomial in x1..xn.
        #[arg(long)]
        poly: Option<String>,
        /// Composition, e.g. `2,0,1`.
        #[arg(long)]
        alpha: Option<String>,
        /// Padding for the stable approximant.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Run identity suites.
    Verify {
        /// Suite name, or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest rank exercised.
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Allow the rank-5 Cauchy check.
        #[arg(long)]
        slow: bool,
        #[arg(long, hide = true)]
        mutate_e2: bool,
    },
    /// List the permutations of a pattern class.
    Enumerate {
        /// dominant, grassmannian, vexillary, rv, avoiding321 or smooth.
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        /// Print only the count.
        #[arg(long)]
        count: bool,
    },
    /// Scan the conjectural 321-avoiding formulas and report per permutation.
    Conjecture {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Serialize)]
struct TermJson {
    coefficient: String,
    monomial: String,
}

#[derive(Serialize)]
struct PolynomialJson {
    polynomial: String,
    terms: Vec<TermJson>,
}

fn labels(alphabet: Alphabet) -> Labels {
    match alphabet {
        Alphabet::Y => Labels::default(),
        Alphabet::A => Labels::with_a_alphabet(),
    }
}

fn polynomial_json(p: &Polynomial, labels: Labels) -> PolynomialJson {
    PolynomialJson {
        polynomial: p.display_with(labels).to_string(),
        terms: p
            .terms()
            .rev()
            .map(|(m, c)| TermJson {
                coefficient: c.to_string(),
                monomial: Polynomial::term(m.clone(), 1).display_with(labels).to_string(),
            })
            .collect(),
    }
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T> {
    v.ok_or_else(|| Error::Parse {
        pos: 0,
        msg: format!("missing --{flag}"),
    })
}

fn check_rank(n: usize, cap: usize) -> Result<usize> {
    if n > cap {
        return Err(Error::RankTooLarge { n, cap });
    }
    Ok(n)
}

struct Computed {
    value: Polynomial,
}

#[allow(clippy::too_many_arguments)]
fn compute(
    what: Target,
    w: Option<String>,
    n: Option<usize>,
    shape: Option<String>,
    r: Option<usize>,
    poly: Option<String>,
    alpha: Option<String>,
    m: Option<usize>,
    cap: usize,
) -> Result<Computed> {
    let perm = |w: Option<String>| -> Result<Permutation> { need(w, "w")?.parse() };
    let rank_of = |w: &Permutation| -> Result<usize> {
        check_rank(n.unwrap_or_else(|| w.support_rank()), cap)
    };
    let value = match what {
        Target::Schubert => {
            let w = perm(w)?;
            check_rank(w.support_rank(), cap)?;
            (*schubert(&w)).clone()
        }
        Target::Qschubert => {
            let w = perm(w)?;
            let n = rank_of(&w)?;
            (*q_schubert(&w, n)?).clone()
        }
        Target::Qdouble => {
            let w = perm(w)?;
            let n = rank_of(&w)?;
            (*q_double_schubert(&w, n)?).clone()
        }
        Target::Qschur | Target::Qfactorial => {
            let lambda: Partition = need(shape, "shape")?.parse()?;
            let r = need(r, "r")?;
            let n = check_rank(need(n, "n")?, cap)?;
            if what == Target::Qschur {
                q_schur(&lambda, r, n)?
            } else {
                q_factorial_schur(&lambda, r, n)?
            }
        }
        Target::Quantize => {
            let f: Polynomial = need(poly, "poly")?.parse()?;
            let n = n.unwrap_or_else(|| f.max_index(crate::poly::Family::X) + 1);
            quantize(&f, check_rank(n, cap)?)?
        }
        Target::Qmonomial => {
            let alpha: Composition = need(alpha, "alpha")?.parse()?;
            let n = n.unwrap_or(alpha.parts().len() + 1);
            q_monomial(&alpha, check_rank(n, cap)?)?
        }
        Target::Stable => {
            let w = perm(w)?;
            let m = m.unwrap_or(0);
            check_rank(m + w.rank(), cap)?;
            stable_approx(&w, m)
        }
    };
    Ok(Computed { value })
}

fn print_reports(out: &mut dyn Write, reports: &[Report], format: Format) -> std::io::Result<()> {
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(reports).expect("reports serialize");
            writeln!(out, "{text}")
        }
        Format::Text => {
            for r in reports {
                let verdict = match (r.passed, r.mode) {
                    (true, _) => "pass",
                    (false, verify::Mode::Assert) => "FAIL",
                    (false, verify::Mode::Report) => "misses",
                };
                writeln!(
                    out,
                    "{:<30} {:>5} cases  {:<6} {:>3} misses  {} ms{}",
                    r.suite,
                    r.cases,
                    verdict,
                    r.failures.len(),
                    r.elapsed_ms,
                    if r.mode == verify::Mode::Report { "  (report)" } else { "" }
                )?;
                let shown = if r.mode == verify::Mode::Assert { 3 } else { 0 };
                for f in r.failures.iter().take(shown) {
                    writeln!(out, "  {}\n    expected: {}\n    actual:   {}", f.case, f.expected, f.actual)?;
                }
            }
            Ok(())
        }
    }
}

fn run_command(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    if cli.max_n > DEFAULT_MAX_N {
        let _ = writeln!(
            err,
            "warning: ranks above {DEFAULT_MAX_N} may take a very long time"
        );
    }
    if let Some(jobs) = cli.jobs {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let labels = labels(cli.alphabet);
    let io = |e: std::io::Error| match e.kind() {
        std::io::ErrorKind::BrokenPipe => Error::BrokenPipe,
        _ => Error::Output(e.to_string()),
    };
    match cli.command {
        Command::Compute {
            what,
            w,
            n,
            shape,
            r,
            poly,
            alpha,
            m,
        } => {
            let c = compute(what, w, n, shape, r, poly, alpha, m, cli.max_n)?;
            match cli.format {
                Format::Text => writeln!(out, "{}", c.value.display_with(labels)).map_err(io)?,
                Format::Json => {
                    let text = serde_json::to_string_pretty(&polynomial_json(&c.value, labels))
                        .expect("polynomial serializes");
                    writeln!(out, "{text}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            suite,
            n,
            slow,
            mutate_e2,
        } => {
            let config = Config {
                n: check_rank(n, cli.max_n)?,
                slow,
                mutate_e2,
            };
            let reports = verify::run_suite(&suite, &config)?;
            print_reports(out, &reports, cli.format).map_err(io)?;
            Ok(if verify::all_passed(&reports) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Enumerate { class, n, count } => {
            let class: PermClass = class.parse()?;
            let list = enumerate_class(n, class, cli.max_n.max(crate::perm::DEFAULT_CLASS_CAP))?;
            match (cli.format, count) {
                (Format::Text, true) => writeln!(out, "{}", list.len()).map_err(io)?,
                (Format::Text, false) => {
                    for w in &list {
                        writeln!(out, "{w}").map_err(io)?;
                    }
                }
                (Format::Json, _) => {
                    let names: Vec<String> = list.iter().map(|w| w.to_string()).collect();
                    let value = if count {
                        serde_json::json!({ "class": class.tag(), "n": n, "count": list.len() })
                    } else {
                        serde_json::json!({ "class": class.tag(), "n": n, "permutations": names })
                    };
                    writeln!(out, "{value:#}").map_err(io)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Conjecture { n } => {
            let n = check_rank(n, cli.max_n)?;
            let reports = verify::suite_conjectures(n);
            print_reports(out, &reports, cli.format).map_err(io)?;
            if cli.format == Format::Text {
                for r in reports.iter().filter(|r| r.mode == verify::Mode::Report) {
                    for o in &r.outcomes {
                        writeln!(out, "{} {}", if o.holds { "holds" } else { "fails" }, o.case)
                            .map_err(io)?;
                    }
                }
            }
            Ok(if verify::all_passed(&reports) {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match run_command(cli, out, err) {
        Ok(code) => code,
        // a closed pipe (`qsk ... | head`) is not worth reporting
        Err(Error::BrokenPipe) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}
