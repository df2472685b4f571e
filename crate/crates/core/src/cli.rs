//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad input, 3 budget exceeded.

use crate::analysis::{self, AnalysisOptions};
use crate::buildup;
use crate::classify::{self, ClassifyOptions, Manifest};
use crate::corpus::{self, VerifyOptions};
use crate::equiv::{self, EquivOptions};
use crate::error::{Error, Result};
use crate::format;
use crate::qc::FieldCode;
use crate::rcode::RingCode;
use crate::ring::RingSpec;
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::io::Write;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_BAD_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "qcsd", version, about = "Quasi-cyclic self-dual codes: construction, verification, classification")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutFormat {
    Poly,
    Csv,
    Json,
}

#[derive(Args, Debug)]
struct Ring {
    #[arg(long)]
    q: u32,
    #[arg(long)]
    m: usize,
}

#[derive(Args, Debug)]
struct Work {
    /// Work budget (codewords or candidates).
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List the seed codes of length 2 (or 4 when q ≡ 3 mod 4).
    Seed {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Apply a witness file to a ring-code file.
    Extend {
        base: PathBuf,
        witness: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify self-dual codes over R of length ℓ up to equivalence of expansions.
    Classify {
        #[command(flatten)]
        ring: Ring,
        #[arg(long)]
        ell: usize,
        #[command(flatten)]
        work: Work,
        /// Keep only classes with at least this minimum distance.
        #[arg(long)]
        min_distance: Option<usize>,
        /// Allow parameters where completeness is not guaranteed.
        #[arg(long)]
        constructive: bool,
        /// Continue from a manifest written by an earlier run.
        #[arg(long)]
        resume: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutFormat,
    },
    /// Weight enumerator, minimum distance, enumerator form and divisibility.
    Analyze {
        file: PathBuf,
        /// Prime m of the quasi-cyclic structure, for field-code files.
        #[arg(long)]
        m: Option<usize>,
        /// Enumerate the whole code even when that is expensive.
        #[arg(long)]
        exact: bool,
        #[arg(long)]
        max_weight: Option<usize>,
        #[command(flatten)]
        work: Work,
        #[arg(long, value_enum, default_value = "poly")]
        format: OutFormat,
    },
    /// Convert a ring-code file to a field-code file.
    Expand {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the reference matrices against their published parameters.
    VerifyCorpus {
        #[arg(long)]
        name: Option<String>,
        /// Certify counts for the expensive entries too.
        #[arg(long)]
        exact: bool,
        #[command(flatten)]
        work: Work,
        #[arg(long, value_enum, default_value = "poly")]
        format: OutFormat,
    },
    /// Decide equivalence of two codes (ring-code or field-code files).
    Equiv {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Resource { .. } | Error::Undecided(_) => EXIT_BUDGET,
        _ => EXIT_BAD_INPUT,
    }
}

/// A code file of either kind.
struct Loaded {
    ring: Option<RingCode>,
    field: FieldCode,
}

fn load(path: &Path) -> Result<Loaded> {
    let text = std::fs::read_to_string(path)?;
    let header = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Parse { line: 0, msg: "empty input".into() })?;
    if header.split_whitespace().count() == 4 {
        let ring = format::parse_ring_code(&text)?;
        let field = ring.expand();
        Ok(Loaded { ring: Some(ring), field })
    } else {
        Ok(Loaded { ring: None, field: format::parse_field_code(&text)? })
    }
}

fn analysis_opts(w: &Work) -> AnalysisOptions {
    let mut o = AnalysisOptions::default();
    if let Some(b) = w.budget {
        o.budget = b;
    }
    o.workers = w.workers;
    o
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    if let Some(dir) = path.parent() {
        if !dir.as_os_str().is_empty() {
            std::fs::create_dir_all(dir)?;
        }
    }
    std::fs::write(path, text)?;
    Ok(())
}

/// Run with explicit arguments (the first is the program name); output goes to `out`.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_BAD_INPUT } else { EXIT_OK };
            let _ = write!(out, "{e}");
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn main() -> i32 {
    let stdout = std::io::stdout();
    let mut lock = stdout.lock();
    run(std::env::args_os(), &mut lock)
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Seed { ring, out: dir } => {
            let spec = RingSpec::from_params(ring.q, ring.m)?;
            let seeds = buildup::seed(&spec)?;
            writeln!(out, "{} seed(s)", seeds.len())?;
            for (i, s) in seeds.iter().enumerate() {
                let text = format::render_ring_code(s, Some(&format!("seed {i}")));
                write!(out, "{text}")?;
                if let Some(d) = &dir {
                    write_file(&d.join(format!("seed_{i}.rc")), &text)?;
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Extend { base, witness, out: path } => {
            let mut code = format::load_ring_code(&base)?;
            let spec = code.spec();
            let text = std::fs::read_to_string(&witness)?;
            for w in buildup::parse_witness_log(&spec, &text)? {
                code = w.apply(&code)?;
            }
            let rendered = format::render_ring_code(&code, None);
            match path {
                Some(p) => write_file(&p, &rendered)?,
                None => write!(out, "{rendered}")?,
            }
            Ok(EXIT_OK)
        }
        Cmd::Classify { ring, ell, work, min_distance, constructive, resume, out: dir, format: fmt } => {
            let spec = RingSpec::from_params(ring.q, ring.m)?;
            let mut opts = ClassifyOptions { workers: work.workers, min_distance, constructive, ..Default::default() };
            if let Some(b) = work.budget {
                opts.budget = b;
            }
            if let Some(d) = &dir {
                std::fs::create_dir_all(d)?;
                opts.checkpoint = Some(d.join("checkpoint.json"));
            }
            let run = match resume {
                Some(p) => classify::resume(p, &opts)?,
                None => classify::classify(&spec, ell, &opts)?,
            };
            if !run.complete {
                writeln!(out, "budget exhausted after length {}; resume from the checkpoint", run.reached_ell)?;
                return Ok(EXIT_BUDGET);
            }
            let report = classify::filter_report(&run, &opts)?;
            let mut files = Vec::new();
            if let Some(d) = &dir {
                for (i, c) in run.classes.iter().enumerate() {
                    let name = format!("class_{:03}.rc", i + 1);
                    let comment = format!("class {} of length {}", i + 1, run.target_ell);
                    write_file(&d.join(&name), &format::render_ring_code(&c.code, Some(&comment)))?;
                    files.push(name);
                }
                Manifest::from_run(&run, &files).write(d.join("manifest.json"))?;
                let _ = std::fs::remove_file(d.join("checkpoint.json"));
                write_file(&d.join("summary.csv"), &report.render_summary())?;
                write_file(&d.join("classes.csv"), &report.render_csv())?;
            }
            writeln!(out, "{} classes", run.classes.len())?;
            match fmt {
                OutFormat::Csv => write!(out, "{}", report.render_csv())?,
                OutFormat::Json => writeln!(out, "{}", to_json(&report)?)?,
                OutFormat::Poly => {
                    for r in &report.rows {
                        writeln!(out, "{}: [{},{},{}] {}", r.index + 1, r.n, r.k, r.d, r.enumerator.render_poly())?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Cmd::Analyze { file, m, exact, max_weight, work, format: fmt } => {
            let loaded = load(&file)?;
            let d = &loaded.field;
            let m = loaded.ring.as_ref().map(|r| r.spec().m()).or(m);
            let opts = analysis_opts(&work);
            let md = analysis::min_distance(d, &opts)?;
            let horizon = max_weight
                .or_else(|| analysis::template_weight_horizon(d.n()))
                .unwrap_or(md.value)
                .max(md.value.min(d.n()));
            let w = if exact { analysis::weight_enumerator(d, &opts)? } else { analysis::weight_enumerator_auto(d, horizon, &opts)? };
            let template = analysis::match_template(&w);
            let divisible = m.map(|m| analysis::divisibility_check(&w, m as u64));
            match fmt {
                OutFormat::Poly => {
                    writeln!(out, "[{},{},{}]{}", d.n(), d.k(), md.value, if md.exact { "" } else { " (lower bound)" })?;
                    writeln!(out, "W(y) = {}", w.render_poly())?;
                    match template.matched() {
                        Some(t) => writeln!(
                            out,
                            "form: {}{}",
                            t.name,
                            t.beta.map(|b| format!(", β = {b}")).unwrap_or_default()
                        )?,
                        None => writeln!(out, "form: none")?,
                    }
                    if let (Some(m), Some(ok)) = (m, divisible) {
                        writeln!(out, "divisibility by {m}: {}", if ok { "holds" } else { "FAILS" })?;
                    }
                }
                OutFormat::Csv => write!(out, "{}", w.render_csv())?,
                OutFormat::Json => {
                    let v = serde_json::json!({
                        "n": d.n(), "k": d.k(),
                        "d": md.value, "d_exact": md.exact,
                        "enumerator": w, "form": template, "divisible": divisible,
                    });
                    writeln!(out, "{}", to_json(&v)?)?;
                }
            }
            Ok(if divisible == Some(false) { EXIT_MISMATCH } else { EXIT_OK })
        }
        Cmd::Expand { file, out: path } => {
            let code = format::load_ring_code(&file)?;
            let text = format::render_field_code(&code.expand(), None);
            match path {
                Some(p) => write_file(&p, &text)?,
                None => write!(out, "{text}")?,
            }
            Ok(EXIT_OK)
        }
        Cmd::VerifyCorpus { name, exact, work, format: fmt } => {
            let entries: Vec<&corpus::CorpusEntry> = match &name {
                Some(n) => vec![corpus::find(n).ok_or_else(|| Error::Domain(format!("no corpus entry named {n}")))?],
                None => corpus::ENTRIES.iter().collect(),
            };
            let opts = VerifyOptions { exact, analysis: analysis_opts(&work), equiv: EquivOptions::default() };
            let mut failed = 0;
            let mut reports = Vec::new();
            for e in entries {
                let r = corpus::verify(e, &opts)?;
                if !r.pass() {
                    failed += 1;
                }
                if let OutFormat::Json = fmt {
                    reports.push(r);
                } else {
                    writeln!(out, "{}", r.line())?;
                }
            }
            if let OutFormat::Json = fmt {
                writeln!(out, "{}", to_json(&reports)?)?;
            }
            Ok(if failed > 0 { EXIT_MISMATCH } else { EXIT_OK })
        }
        Cmd::Equiv { a, b, budget } => {
            let (a, b) = (load(&a)?, load(&b)?);
            let mut opts = EquivOptions::default();
            if let Some(n) = budget {
                opts.node_budget = n;
            }
            match equiv::are_equivalent(&a.field, &b.field, &opts)? {
                Some(map) => {
                    writeln!(out, "equivalent")?;
                    writeln!(out, "{}", map.render(a.field.field()))?;
                }
                None => writeln!(out, "not equivalent")?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string_pretty(v).map_err(|e| Error::Io(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("qcsd").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn seed_and_bad_flags() {
        let (code, text) = run_str(&["seed", "--q", "2", "--m", "3"]);
        assert_eq!(code, 0);
        assert!(text.starts_with("1 seed(s)"));
        assert_eq!(run_str(&["seed", "--q", "7", "--m", "3"]).0, EXIT_BAD_INPUT);
        assert_eq!(run_str(&["frobnicate"]).0, EXIT_BAD_INPUT);
    }
}
