//! `quiverflag` — command-line front end for the quiverflag library.
//!
//! Subcommands cover the full pipeline: `check` validates a representation
//! file, `lift` emits its modified form, `flag` its complete flag,
//! `classify` the irreducible components containing it, `enumerate` lists
//! all cup diagrams for a two-row shape, `sample` draws random admissible
//! stable representations, and `verify-corpus` recomputes a regression
//! corpus bit-exactly.
//!
//! Exit codes: 0 success, 1 semantic failure (valid input failing a
//! mathematical requirement or comparison), 2 input error (malformed files
//! or arguments), 3 sampler exhaustion.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::anyhow;
use clap::{Args, Parser, Subcommand};

use quiverflag::cup::{classify, classify_flag, enumerate_cups, CupDiagram};
use quiverflag::flag::{flag_of, NilpotentData};
use quiverflag::io::{
    flag_pretty, from_json, to_json, CorpusEntryDto, CupDiagramDto, FlagDto, ModifiedRepDto,
    QuiverRepDto,
};
use quiverflag::lift::build_lift;
use quiverflag::par::par_map;
use quiverflag::partition::Partition;
use quiverflag::quiver::QuiverRep;
use quiverflag::sample::{derived_seed, sample_batch, SampleConfig};
use quiverflag::Error;

#[derive(Parser)]
#[command(
    name = "quiverflag",
    version,
    about = "Quiver variety points, flags, and cup-diagram components"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Emit JSON only, suppressing the human-readable report
    #[arg(long)]
    json: bool,
    /// Pretty-print emitted JSON
    #[arg(long)]
    pretty: bool,
}

#[derive(Clone, Debug)]
struct Lambda(Vec<usize>);

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad partition part {t:?} (expected e.g. --lambda 3,2)"))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Lambda)
}

#[derive(Subcommand)]
enum Command {
    /// Check admissibility, stability, Δ = 0, and the return composites
    Check {
        /// Representation file (JSON)
        #[arg(long)]
        input: PathBuf,
    },
    /// Lift a representation to its modified form
    Lift {
        #[arg(long)]
        input: PathBuf,
        /// Write the JSON here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Compute the complete flag determined by a representation
    Flag {
        #[arg(long)]
        input: PathBuf,
        /// Write the flag JSON here (span notation still goes to stdout)
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// List the irreducible components containing a Springer-fiber point
    Classify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate all cup diagrams for a two-row shape
    Enumerate {
        /// Two-row partition, e.g. 3,2
        #[arg(long, value_parser = parse_lambda)]
        lambda: Lambda,
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Sample admissible stable representations (Δ = 0 unless --with-delta)
    Sample {
        /// Partition, e.g. 3,2 or 2,2,1
        #[arg(long, value_parser = parse_lambda)]
        lambda: Lambda,
        /// Number of representations to draw
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// Master seed; each item i uses a seed derived from (seed, i)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Entries are drawn uniformly from {-pool, …, pool}
        #[arg(long, default_value_t = 2)]
        pool: i64,
        /// Rejection attempts per item before giving up
        #[arg(long = "max-attempts", default_value_t = 2000)]
        max_attempts: usize,
        /// Sample general points with Δ ≠ 0 allowed (return composites still vanish)
        #[arg(long = "with-delta")]
        with_delta: bool,
        /// Directory for rep_NNN.json files; default prints to stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Recompute every corpus entry and compare bit-exactly
    #[command(name = "verify-corpus")]
    VerifyCorpus {
        /// Directory of corpus entry files (JSON)
        #[arg(long)]
        input: PathBuf,
    },
}

/// An error annotated with the process exit code it maps to.
struct CliError {
    code: u8,
    error: anyhow::Error,
}

impl CliError {
    fn semantic(msg: impl Into<String>) -> Self {
        CliError {
            code: 1,
            error: anyhow!(msg.into()),
        }
    }

    fn input(msg: impl Into<String>) -> Self {
        CliError {
            code: 2,
            error: anyhow!(msg.into()),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Parse(_)
            | Error::Json(_)
            | Error::Input(_)
            | Error::InvalidPartition(_)
            | Error::MissingShadow { .. }
            | Error::BadCupDiagram(_) => 2,
            Error::SamplerExhausted { .. } => 3,
            _ => 1,
        };
        CliError {
            code,
            error: e.into(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {:#}", e.error);
            ExitCode::from(e.code)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Check { input } => cmd_check(&input),
        Command::Lift { input, output, out } => cmd_lift(&input, output.as_deref(), &out),
        Command::Flag { input, output, out } => cmd_flag(&input, output.as_deref(), &out),
        Command::Classify { input, output, out } => cmd_classify(&input, output.as_deref(), &out),
        Command::Enumerate {
            lambda,
            output,
            out,
        } => cmd_enumerate(&lambda, output.as_deref(), &out),
        Command::Sample {
            lambda,
            count,
            seed,
            pool,
            max_attempts,
            with_delta,
            output,
            out,
        } => {
            let cfg = SampleConfig {
                pool,
                max_attempts,
                with_delta,
            };
            cmd_sample(&lambda, count, seed, &cfg, output.as_deref(), &out)
        }
        Command::VerifyCorpus { input } => cmd_verify_corpus(&input),
    }
}

fn load_rep(path: &Path) -> Result<QuiverRep, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
    let (rep, _seed) = quiverflag::io::parse_rep(&text)?;
    Ok(rep)
}

/// Writes `json` to `output` when given, otherwise prints it to stdout.
fn emit_json(json: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, format!("{json}\n"))
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn cmd_check(input: &Path) -> Result<(), CliError> {
    let rep = load_rep(input)?;
    let adm = rep.admissibility_violation();
    let stab = rep.stability_violation();
    match adm {
        None => println!("admissible ✓"),
        Some(i) => println!("admissible ✗ (vertex {i})"),
    }
    match stab {
        None => println!("stable ✓"),
        Some(i) => println!("stable ✗ (vertex {i})"),
    }
    match rep.first_nonzero_delta() {
        None => println!("Delta=0 ✓"),
        Some(_) => println!("Delta=0 ✗ (Slodowy point, not Springer)"),
    }
    if rep.shadow_return_maps_vanish() {
        println!("return composites vanish ✓");
    } else {
        println!("return composites vanish ✗");
    }
    if adm.is_some() || stab.is_some() {
        Err(CliError::semantic(
            "representation is not admissible and stable",
        ))
    } else {
        Ok(())
    }
}

fn cmd_lift(input: &Path, output: Option<&Path>, out: &OutputOpts) -> Result<(), CliError> {
    let rep = load_rep(input)?;
    let mrep = build_lift(&rep)?;
    let json = to_json(&ModifiedRepDto::from_modified(&mrep), out.pretty);
    emit_json(&json, output)
}

fn cmd_flag(input: &Path, output: Option<&Path>, out: &OutputOpts) -> Result<(), CliError> {
    let rep = load_rep(input)?;
    let flag = flag_of(&rep)?;
    let nd = NilpotentData::new(rep.partition());
    let json = to_json(&FlagDto::from_flag(&flag, nd.labels()), out.pretty);
    if out.json {
        return emit_json(&json, output);
    }
    println!("{}", flag_pretty(&flag, nd.labels()));
    match output {
        Some(_) => emit_json(&json, output),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

/// `"(()) : cups (1,4)(2,3)"` / `"|()| : cup (2,3), rays 1,4"`.
fn diagram_line(d: &CupDiagram) -> String {
    let mut desc = String::new();
    if !d.cups().is_empty() {
        desc.push_str(if d.cups().len() == 1 { "cup " } else { "cups " });
        for &(a, b) in d.cups() {
            desc.push_str(&format!("({a},{b})"));
        }
    }
    let rays = d.rays();
    if !rays.is_empty() {
        if !desc.is_empty() {
            desc.push_str(", ");
        }
        desc.push_str(if rays.len() == 1 { "ray " } else { "rays " });
        let nums: Vec<String> = rays.iter().map(ToString::to_string).collect();
        desc.push_str(&nums.join(","));
    }
    if desc.is_empty() {
        desc.push_str("empty");
    }
    format!("{} : {}", d.to_bracket(), desc)
}

fn cmd_classify(input: &Path, output: Option<&Path>, out: &OutputOpts) -> Result<(), CliError> {
    let rep = load_rep(input)?;
    let quiver_side = classify(&rep).map_err(|e| match e {
        Error::DeltaNonzero { shadow } => CliError::semantic(format!(
            "not a Springer-fiber point: Δ_{shadow} ≠ 0 (classification requires Δ = 0)"
        )),
        other => other.into(),
    })?;
    // Live equivalence monitor: the flag-side classifier must agree.
    let flag = flag_of(&rep)?;
    let nd = NilpotentData::new(rep.partition());
    let k = rep.partition().parts()[1];
    let flag_side = classify_flag(&flag, &nd, k)?;
    if quiver_side != flag_side {
        println!("DISAGREE");
        println!("quiver side:");
        for d in &quiver_side {
            println!("  {}", diagram_line(d));
        }
        println!("flag side:");
        for d in &flag_side {
            println!("  {}", diagram_line(d));
        }
        return Err(CliError::semantic(
            "quiver-side and flag-side classifications disagree",
        ));
    }
    let dtos: Vec<CupDiagramDto> = quiver_side
        .iter()
        .map(CupDiagramDto::from_diagram)
        .collect();
    let json = to_json(&dtos, out.pretty);
    if out.json {
        return emit_json(&json, output);
    }
    for d in &quiver_side {
        println!("{}", diagram_line(d));
    }
    match output {
        Some(_) => emit_json(&json, output),
        None => Ok(()),
    }
}

fn cmd_enumerate(lambda: &Lambda, output: Option<&Path>, out: &OutputOpts) -> Result<(), CliError> {
    if lambda.0.len() != 2 {
        return Err(CliError::input(format!(
            "enumerate requires a two-row partition, got {:?}",
            lambda.0
        )));
    }
    let lam = Partition::new(lambda.0.clone())?;
    let (n, k) = (lam.n(), lam.parts()[1]);
    let diagrams = enumerate_cups(n, k)?;
    let dtos: Vec<CupDiagramDto> = diagrams.iter().map(CupDiagramDto::from_diagram).collect();
    let json = to_json(&dtos, out.pretty);
    if out.json {
        return emit_json(&json, output);
    }
    for d in &diagrams {
        println!("{}", diagram_line(d));
    }
    println!(
        "{} diagram{} on {n} vertices with {k} cup{}",
        diagrams.len(),
        if diagrams.len() == 1 { "" } else { "s" },
        if k == 1 { "" } else { "s" }
    );
    match output {
        Some(_) => emit_json(&json, output),
        None => Ok(()),
    }
}

fn cmd_sample(
    lambda: &Lambda,
    count: usize,
    seed: u64,
    cfg: &SampleConfig,
    output: Option<&Path>,
    out: &OutputOpts,
) -> Result<(), CliError> {
    let lam = Partition::new(lambda.0.clone())?;
    let reps = sample_batch(&lam, cfg, seed, count).map_err(|e| match e {
        Error::SamplerExhausted { attempts } => CliError {
            code: 3,
            error: anyhow!(
                "sampler exhausted after {attempts} attempts; try a larger --pool or --max-attempts"
            ),
        },
        other => other.into(),
    })?;
    if let Some(dir) = output {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::input(format!("cannot create {}: {e}", dir.display())))?;
    }
    for (i, rep) in reps.iter().enumerate() {
        let dto = QuiverRepDto::from_rep(rep, Some(derived_seed(seed, i as u64)));
        let json = to_json(&dto, out.pretty);
        match output {
            Some(dir) => {
                let path = dir.join(format!("rep_{i:03}.json"));
                fs::write(&path, format!("{json}\n")).map_err(|e| {
                    CliError::input(format!("cannot write {}: {e}", path.display()))
                })?;
            }
            None => println!("{json}"),
        }
    }
    if let Some(dir) = output {
        println!("wrote {count} representations to {}", dir.display());
    }
    Ok(())
}

/// Recomputes one corpus entry; `Err` carries the mismatch report.
fn verify_entry(entry: &CorpusEntryDto) -> Result<(), String> {
    let rep = entry
        .rep
        .to_rep()
        .map_err(|e| format!("rep does not parse: {e}"))?;
    let expected = entry
        .expected_flag
        .to_flag()
        .map_err(|e| format!("expected flag does not parse: {e}"))?;
    let labels = &entry.expected_flag.labels;
    let flag = flag_of(&rep).map_err(|e| format!("flag computation failed: {e}"))?;
    if flag != expected {
        let indent = |s: String| {
            s.lines()
                .map(|l| format!("    {l}"))
                .collect::<Vec<_>>()
                .join("\n")
        };
        return Err(format!(
            "flag mismatch\n  expected:\n{}\n  recomputed:\n{}",
            indent(flag_pretty(&expected, labels)),
            indent(flag_pretty(&flag, labels))
        ));
    }
    match &entry.expected_components {
        Some(exp) => {
            let found: Vec<Vec<(usize, usize)>> = classify(&rep)
                .map_err(|e| format!("classification failed: {e}"))?
                .iter()
                .map(|d| d.cups().to_vec())
                .collect();
            if &found != exp {
                return Err(format!(
                    "component mismatch\n  expected:   {exp:?}\n  recomputed: {found:?}"
                ));
            }
        }
        None => {
            if classify(&rep).is_ok() {
                return Err("entry has no expected components, yet it classifies".into());
            }
        }
    }
    Ok(())
}

fn cmd_verify_corpus(input: &Path) -> Result<(), CliError> {
    let mut files: Vec<PathBuf> = fs::read_dir(input)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", input.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    if files.is_empty() {
        return Err(CliError::input(format!(
            "no corpus files (*.json) in {}",
            input.display()
        )));
    }
    let mut entries = Vec::with_capacity(files.len());
    for path in &files {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))?;
        let entry: CorpusEntryDto = from_json(&text)?;
        entries.push(entry);
    }
    let results = par_map(&entries, verify_entry);
    let mut failures = 0usize;
    for (entry, result) in entries.iter().zip(&results) {
        match result {
            Ok(()) => println!("{}: ok", entry.name),
            Err(msg) => {
                failures += 1;
                println!("{}: FAIL\n{msg}", entry.name);
            }
        }
    }
    println!(
        "{}/{} entries verified",
        entries.len() - failures,
        entries.len()
    );
    if failures > 0 {
        Err(CliError::semantic(format!(
            "{failures} corpus entr{} failed verification",
            if failures == 1 { "y" } else { "ies" }
        )))
    } else {
        Ok(())
    }
}
