//! Command-line front end for exact partition counting, wave decomposition
//! export, oracle verification, plot-data emission and Molien counting.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 internal
//! consistency failure (oracle mismatch, failed rationality projection).

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sylvester::corpus::builtin_corpus;
use sylvester::molien::{catalog, invariant_counts, MolienSpec};
use sylvester::waves::{verify_against_oracle, WaveDecomposition};
use sylvester::{Error, PartSet};

#[derive(Parser)]
#[command(
    name = "sylvester",
    version,
    about = "Exact restricted partition functions via Sylvester waves"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate W(s, parts) exactly.
    Eval {
        /// Part list "2,3,5" or "natural:m" for {1..m}.
        #[arg(long)]
        parts: String,
        /// Argument s (any integer; counts require s >= 0).
        #[arg(long, allow_hyphen_values = true)]
        s: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write output here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the wave decomposition (per-residue polynomials) as JSON.
    Waves {
        #[arg(long)]
        parts: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV table of s, W(s).
    Table {
        #[arg(long)]
        parts: String,
        /// Upper bound for s (default 2·lcm + 10).
        #[arg(long)]
        smax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// CSV plot data x, W_real(x), W1_real(x) over a real range.
    Plotdata {
        #[arg(long)]
        parts: String,
        /// Range start (default −s_m − 10, covering the zero region).
        #[arg(long, allow_hyphen_values = true)]
        from: Option<f64>,
        /// Range end (default 3·lcm).
        #[arg(long, allow_hyphen_values = true)]
        to: Option<f64>,
        /// Sample spacing, > 0.
        #[arg(long, default_value_t = 0.25)]
        step: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify the closed form against the DP oracle; nonzero exit on mismatch.
    Check {
        /// Single part list; omit to sweep the built-in corpus.
        #[arg(long)]
        parts: Option<String>,
        /// Upper bound for s (default 3·lcm + 50 per set).
        #[arg(long)]
        smax: Option<u64>,
    },
    /// Count homogeneous invariants P(s, G) from a Molien spec.
    Molien {
        /// Catalog group "name:n", e.g. "dihedral:4".
        #[arg(long)]
        group: Option<String>,
        /// JSON spec file with numerator and degrees.
        #[arg(long)]
        spec: Option<PathBuf>,
        /// Single degree to evaluate.
        #[arg(long)]
        s: Option<u64>,
        /// Emit all degrees 0..=smax as CSV.
        #[arg(long)]
        smax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_parts(spec: &str) -> Result<PartSet, Error> {
    if let Some(m) = spec.strip_prefix("natural:") {
        let m: u32 = m
            .parse()
            .map_err(|_| Error::InvalidInput(format!("bad natural set size {m:?}")))?;
        if m == 0 {
            return Err(Error::InvalidInput("natural set needs m >= 1".into()));
        }
        return Ok(PartSet::natural(m));
    }
    let parts = spec
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad part {tok:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    PartSet::new(parts)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, content)
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| Error::InvalidInput(format!("write failed: {e}")))
        }
    }
}

/// Plain decimal with 12 significant digits.
fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let magnitude = x.abs().log10().floor() as i32;
    let decimals = (11 - magnitude).clamp(0, 17) as usize;
    format!("{x:.decimals$}")
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Eval { parts, s, format, out } => {
            let ps = parse_parts(&parts)?;
            let value = WaveDecomposition::new(&ps)?.eval_exact(s)?;
            let doc = match format {
                Format::Json => {
                    let parts = ps
                        .parts()
                        .iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",");
                    format!("{{\"parts\":[{parts}],\"s\":{s},\"value\":\"{value}\"}}\n")
                }
                _ => format!("{value}\n"),
            };
            emit(&out, &doc)
        }
        Command::Waves { parts, format, out } => {
            let ps = parse_parts(&parts)?;
            let document = WaveDecomposition::new(&ps)?.to_document();
            let doc = match format {
                Format::Text => {
                    let mut buf = String::new();
                    buf.push_str(&format!(
                        "parts {:?}  period {}\n",
                        document.parts, document.period
                    ));
                    for w in &document.waves {
                        buf.push_str(&format!("wave j={} omega={}\n", w.j, w.omega));
                        for res in &w.residues {
                            buf.push_str(&format!(
                                "  r={}: [{}]\n",
                                res.r,
                                res.coeffs.join(", ")
                            ));
                        }
                    }
                    buf
                }
                _ => {
                    let mut json = document.to_json();
                    json.push('\n');
                    json
                }
            };
            emit(&out, &doc)
        }
        Command::Table { parts, smax, format: _, out } => {
            let ps = parse_parts(&parts)?;
            let smax = smax.unwrap_or(2 * ps.period() + 10);
            let decomposition = WaveDecomposition::new(&ps)?;
            let mut buf = String::from("s,W\n");
            for s in 0..=smax {
                buf.push_str(&format!("{s},{}\n", decomposition.eval_exact(s as i64)?));
            }
            emit(&out, &buf)
        }
        Command::Plotdata { parts, from, to, step, out } => {
            if step <= 0.0 || !step.is_finite() {
                return Err(Error::InvalidInput(format!("step must be > 0, got {step}")));
            }
            let ps = parse_parts(&parts)?;
            let from = from.unwrap_or(-(ps.sum() as f64) - 10.0);
            let to = to.unwrap_or(3.0 * ps.period() as f64);
            if !from.is_finite() || !to.is_finite() || from > to {
                return Err(Error::InvalidInput(format!("bad range [{from}, {to}]")));
            }
            let decomposition = WaveDecomposition::new(&ps)?;
            let poly_wave = decomposition.wave(1).expect("j = 1 always present");
            let mut buf = String::from("x,W,W1\n");
            let steps = ((to - from) / step).floor() as u64;
            for i in 0..=steps {
                let x = from + step * i as f64;
                buf.push_str(&format!(
                    "{},{},{}\n",
                    fmt_real(x),
                    fmt_real(decomposition.eval_real(x)),
                    fmt_real(poly_wave.eval_real(x))
                ));
            }
            emit(&out, &buf)
        }
        Command::Check { parts, smax } => {
            let sets = match parts {
                Some(spec) => vec![parse_parts(&spec)?],
                None => builtin_corpus(),
            };
            for ps in &sets {
                let bound = smax.unwrap_or(3 * ps.period() + 50) as usize;
                verify_against_oracle(ps, bound)?;
                println!("ok {:?} for s <= {bound}", ps.parts());
            }
            println!("checked {} set(s) against the DP oracle", sets.len());
            Ok(())
        }
        Command::Molien { group, spec, s, smax, format, out } => {
            let spec = match (group, spec) {
                (Some(g), None) => {
                    let (name, n) = g.split_once(':').ok_or_else(|| {
                        Error::InvalidInput(format!("group must be name:n, got {g:?}"))
                    })?;
                    let n: u32 = n
                        .parse()
                        .map_err(|_| Error::InvalidInput(format!("bad group parameter {n:?}")))?;
                    catalog(name, n)?
                }
                (None, Some(path)) => {
                    let json = fs::read_to_string(&path).map_err(|e| {
                        Error::InvalidInput(format!("cannot read {}: {e}", path.display()))
                    })?;
                    MolienSpec::from_json(&json)?
                }
                _ => {
                    return Err(Error::InvalidInput(
                        "need exactly one of --group or --spec".into(),
                    ))
                }
            };
            match (s, smax) {
                (Some(s), None) => {
                    let counts = invariant_counts(&spec, s)?;
                    let value = counts.last().expect("counts non-empty");
                    let doc = match format {
                        Format::Json => format!(
                            "{{\"group\":\"{}\",\"s\":{s},\"value\":\"{value}\"}}\n",
                            spec.name
                        ),
                        _ => format!("{value}\n"),
                    };
                    emit(&out, &doc)
                }
                (None, Some(smax)) => {
                    let counts = invariant_counts(&spec, smax)?;
                    let mut buf = String::from("s,P\n");
                    for (s, p) in counts.iter().enumerate() {
                        buf.push_str(&format!("{s},{p}\n"));
                    }
                    emit(&out, &buf)
                }
                _ => Err(Error::InvalidInput(
                    "need exactly one of --s or --smax".into(),
                )),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap help/version are not errors
            if err.use_stderr() {
                eprintln!("{err}");
                return ExitCode::from(1);
            }
            print!("{err}");
            return ExitCode::SUCCESS;
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_internal() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
