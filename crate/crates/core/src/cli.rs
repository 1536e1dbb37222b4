//! The `spectre` command line.
//!
//! Exit codes: 0 success (a group was recognized), 1 empty verdict, 2 input
//! or usage error, 3 too many atomic divisors, 4 any other failure.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::PosInt;
use crate::atomic::{build_ad_graph, size_cap_c};
use crate::data::decimal;
use crate::error::{Error, Result};
use crate::oracle::{alt_mu_oracle, atoms_oracle, psl2_mu_oracle};
use crate::recognize::{RecognizeConfig, Recognizer};
use crate::spectra::{minimal_spectrum, MinSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_EMPTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TOO_MANY: i32 = 3;
pub const EXIT_OTHER: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "spectre", version, about = "Recognize finite simple groups from element orders")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Directory with m1_table.json, sporadic_spectra.json and classical_mu/;
    /// defaults to $SPECTRE_DATA_DIR.
    #[arg(long, global = true)]
    pub data_dir: Option<PathBuf>,
    /// Override for the atomic-divisor cap.
    #[arg(long, global = true)]
    pub cap: Option<u64>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Miller-Rabin rounds for big candidates.
    #[arg(long, global = true)]
    pub rounds: Option<u32>,
    #[command(subcommand)]
    pub command: Command,
}

/// Where the integers come from.
#[derive(Debug, Clone, clap::Args)]
pub struct InputArgs {
    /// File with one integer per line or a JSON array; `-` reads stdin.
    #[arg(required_unless_present = "values")]
    pub input: Option<PathBuf>,
    /// Inline list, separated by commas or whitespace.
    #[arg(long, conflicts_with = "input")]
    pub values: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the recognition pipeline.
    Recognize(InputArgs),
    /// Print the divisibility-maximal elements.
    Mu(InputArgs),
    /// Build the graph on atomic divisors.
    Adgraph {
        #[command(flatten)]
        input: InputArgs,
        /// Write DOT to this path instead of stdout.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Brute-force reference computations.
    #[command(subcommand)]
    Oracle(OracleCommand),
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Minimal spectrum of A_n from partitions.
    AltMu { n: u64 },
    /// Minimal spectrum of PSL_2(q) by matrix enumeration.
    Psl2Mu { q: u64 },
    /// Atomic divisors by the subset definition.
    Atoms(InputArgs),
}

/// Parses newline-separated integers (several per line allowed, `#` starts
/// a comment) or a JSON array of integers or decimal strings.
pub fn parse_input(text: &str) -> Result<Vec<PosInt>> {
    let trimmed = text.trim_start();
    if trimmed.starts_with('[') {
        return parse_json_input(text);
    }
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("");
        for tok in body.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            out.push(parse_value(tok, i + 1)?);
        }
    }
    if out.is_empty() {
        return Err(Error::Input {
            line: 0,
            message: "no integers given".into(),
        });
    }
    Ok(out)
}

fn parse_value(tok: &str, line: usize) -> Result<PosInt> {
    let bad = |m: String| Error::Input { line, message: m };
    let v = PosInt::from_str(tok).map_err(|_| bad(format!("{tok:?} is not a nonnegative integer")))?;
    if v == PosInt::from(0u32) {
        return Err(bad("0 is not an element order".into()));
    }
    Ok(v)
}

/// JSON entries are reported on line 1 with their position in the array.
fn parse_json_input(text: &str) -> Result<Vec<PosInt>> {
    let values: Vec<serde_json::Value> = serde_json::from_str(text).map_err(|e| Error::Input {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut out = Vec::new();
    for (i, v) in values.iter().enumerate() {
        let tok = match v {
            serde_json::Value::String(s) => s.clone(),
            serde_json::Value::Number(n) => n.to_string(),
            other => {
                return Err(Error::Input {
                    line: 1,
                    message: format!("array entry {} is not an integer: {other}", i + 1),
                })
            }
        };
        out.push(parse_value(tok.trim(), 1).map_err(|e| match e {
            Error::Input { line, message } => Error::Input {
                line,
                message: format!("array entry {}: {message}", i + 1),
            },
            e => e,
        })?);
    }
    if out.is_empty() {
        return Err(Error::Input {
            line: 1,
            message: "empty array".into(),
        });
    }
    Ok(out)
}

fn read_input(args: &InputArgs) -> Result<Vec<PosInt>> {
    if let Some(v) = &args.values {
        return parse_input(v);
    }
    let path = args.input.as_deref().unwrap_or(Path::new("-"));
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(path)?
    };
    parse_input(&text)
}

#[derive(Serialize)]
struct Numbers<'a>(#[serde(with = "decimal::vec")] &'a [PosInt]);

fn numbers_text(xs: &[PosInt]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn emit_numbers(out: &mut dyn Write, format: Format, xs: &[PosInt]) -> Result<()> {
    match format {
        Format::Text => writeln!(out, "{}", numbers_text(xs))?,
        Format::Json => writeln!(out, "{}", serde_json::to_string(&Numbers(xs))?)?,
    }
    Ok(())
}

#[derive(Serialize)]
struct AdGraphJson {
    #[serde(with = "decimal::vec")]
    atoms: Vec<PosInt>,
    edges: Vec<[String; 2]>,
}

impl Cli {
    fn config(&self) -> RecognizeConfig {
        let mut c = RecognizeConfig {
            cap_override: self.cap,
            threads: self.threads,
            data_dir: self.data_dir.clone(),
            ..RecognizeConfig::default()
        };
        if let Some(r) = self.rounds {
            c.primality_rounds = r;
        }
        c
    }

    fn execute(&self, out: &mut dyn Write) -> Result<i32> {
        match &self.command {
            Command::Recognize(input) => {
                let m = read_input(input)?;
                let rec = Recognizer::from_config(self.config())?;
                let outcome = rec.recognize(&m)?;
                match self.format {
                    Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&outcome)?)?,
                    Format::Text => {
                        let name = |g: &Option<crate::spectra::GroupName>| {
                            g.as_ref().map_or_else(|| "empty".to_string(), |g| g.to_string())
                        };
                        writeln!(out, "result: {}", name(&outcome.result))?;
                        if outcome.twin.is_some() {
                            writeln!(out, "twin: {}", name(&outcome.twin))?;
                        }
                        for e in &outcome.trail {
                            writeln!(out, "  [{}] {}", e.stage, e.message)?;
                        }
                    }
                }
                Ok(if outcome.is_empty() { EXIT_EMPTY } else { EXIT_OK })
            }
            Command::Mu(input) => {
                let mu = minimal_spectrum(&read_input(input)?);
                emit_numbers(out, self.format, mu.elements())?;
                Ok(EXIT_OK)
            }
            Command::Adgraph { input, dot } => {
                let mu = minimal_spectrum(&read_input(input)?);
                let cap = self.cap.unwrap_or_else(|| size_cap_c(mu.max().unwrap()));
                let g = build_ad_graph(&mu, usize::try_from(cap).unwrap_or(usize::MAX))?;
                let text = g.to_dot("AD");
                if let Some(path) = dot {
                    std::fs::write(path, &text)?;
                }
                match self.format {
                    Format::Json => {
                        let j = AdGraphJson {
                            atoms: g.graph.labels.clone(),
                            edges: g
                                .graph
                                .edge_labels()
                                .into_iter()
                                .map(|(a, b)| [a.to_string(), b.to_string()])
                                .collect(),
                        };
                        writeln!(out, "{}", serde_json::to_string(&j)?)?;
                    }
                    Format::Text if dot.is_none() => write!(out, "{text}")?,
                    Format::Text => writeln!(
                        out,
                        "{} atoms, {} edges",
                        g.order(),
                        g.graph.graph.edge_count()
                    )?,
                }
                Ok(EXIT_OK)
            }
            Command::Oracle(cmd) => {
                let values: MinSpec = match cmd {
                    OracleCommand::AltMu { n } => alt_mu_oracle(*n)?,
                    OracleCommand::Psl2Mu { q } => psl2_mu_oracle(*q)?,
                    OracleCommand::Atoms(input) => {
                        let m = read_input(input)?;
                        let atoms = atoms_oracle(minimal_spectrum(&m).elements())?;
                        MinSpec::new(atoms.values())
                    }
                };
                emit_numbers(out, self.format, values.elements())?;
                Ok(EXIT_OK)
            }
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Input { .. } | Error::Precondition(_) | Error::SizeGuard(_) | Error::Io(_) => EXIT_INPUT,
        Error::TooMany { .. } => EXIT_TOO_MANY,
        _ => EXIT_OTHER,
    }
}

/// Runs the command line with explicit streams and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match cli.execute(out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "spectre: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["spectre"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn parses_lines_and_json() {
        let v = parse_input("4\n 2 \n\n6 # comment\n").unwrap();
        assert_eq!(v, [4u32, 2, 6].map(PosInt::from).to_vec());
        let v = parse_input(r#"["12", 7, "100000000000000000000000000001"]"#).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[2].to_string(), "100000000000000000000000000001");
    }

    #[test]
    fn reports_bad_line() {
        match parse_input("3\n4\nabc\n") {
            Err(Error::Input { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_input("0"), Err(Error::Input { line: 1, .. })));
        assert!(matches!(parse_input("[1, -2]"), Err(Error::Input { .. })));
        assert!(matches!(parse_input(""), Err(Error::Input { .. })));
    }

    #[test]
    fn mu_inline() {
        let (code, out, _) = run_str(&["mu", "--values", "4,2,6"]);
        assert_eq!(code, 0);
        assert_eq!(out, "4 6\n");
        let (_, out, _) = run_str(&["--format", "json", "mu", "--values", "4 2 6"]);
        assert_eq!(out, "[\"4\",\"6\"]\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run_str(&["frobnicate"]).0, 2);
        assert_eq!(run_str(&["mu", "--values", "x"]).0, 2);
        assert_eq!(run_str(&["--version"]).0, 0);
    }
}
