//! Command-line front end.
//!
//! Five subcommands cover the library surface: `decode` labels an integer
//! interval from a bit source, `encode` inverts a set back to its bit word,
//! `closed-form` prints numeration weights and elements, `verify` runs the
//! named check suites and prints one JSON report per line, and `automaton`
//! emits the base-change membership recognizer.
//!
//! Exit codes: 0 when everything passes, 1 when a verify suite records a
//! violation, 2 for usage, data, or I/O problems. Data goes to stdout (or
//! `--out`), diagnostics to stderr, and repeated runs produce identical
//! bytes. `SUMFREE_HORIZON_CAP` bounds how many positions any one decode may
//! sieve; it defaults to 2^30.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;
use serde_json::json;

use crate::base_change::{self, BaseChangeStream, Dfao};
use crate::bijection::{self, SumFreePrefix};
use crate::closed_form::{self, NumerationSystem};
use crate::regularity::{self, RecurrenceCheck};
use crate::report::Report;
use crate::stream::{self, BitStream, Tail, WordStream};
use crate::substitution::{self, SubstitutionParams};
use crate::{Error, Result};

const SOURCE_HELP: &str = "subst:L1,L2,L3 | periodic:BITS | file:PATH | base-change:B";

#[derive(Parser)]
#[command(
    name = "sumfree",
    version,
    about = "Decode zero-one sequences into sum-free sets and verify their structure",
    color = clap::ColorChoice::Never
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Label positions 1..=horizon from a bit source and print the decoded set
    Decode(DecodeArgs),
    /// Rebuild the bit word that decodes to a given sum-free set
    Encode(EncodeArgs),
    /// Print numeration weights, elements, and gap statistics from closed forms
    ClosedForm(ClosedFormArgs),
    /// Run verification suites; one JSON report per line
    Verify(VerifyArgs),
    /// Print the base-change membership automaton
    Automaton(AutomatonArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Plain,
    Json,
}

#[derive(Args)]
struct DecodeArgs {
    /// Bit source: subst:L1,L2,L3 | periodic:BITS | file:PATH | base-change:B
    #[arg(long, default_value = "subst:3,0,5")]
    source: String,
    /// Largest position to label
    #[arg(long, default_value_t = 10_000)]
    horizon: u64,
    /// Plain prints one element per line; json adds gap statistics
    #[arg(long, value_enum, default_value_t = Emit::Plain)]
    emit: Emit,
    /// Also write the full label word (0, 1, or * per position) to this file
    #[arg(long)]
    labels: Option<PathBuf>,
    /// Write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EncodeArgs {
    /// Set to encode: file:PATH reads a sequence file, any other source is
    /// decoded at --horizon first
    #[arg(long, default_value = "subst:3,0,5")]
    source: String,
    /// Decode horizon for stream sources (ignored for file:)
    #[arg(long, default_value_t = 10_000)]
    horizon: u64,
    /// Write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClosedFormArgs {
    /// Substitution parameters L1,L2,L3
    #[arg(long, default_value = "3,0,5")]
    subst: String,
    /// Number of elements to tabulate
    #[arg(long, default_value_t = 256)]
    n: u64,
    #[arg(long, value_enum, default_value_t = Emit::Plain)]
    emit: Emit,
    /// Write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run; `all` runs every suite in a fixed order
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Substitution parameters for the stream-based suites
    #[arg(long, default_value = "3,0,5")]
    subst: String,
    /// Statistics are checked for indices up to this bound
    #[arg(long, default_value_t = 256)]
    n: u64,
    /// Largest window scale for the reflection and conditions suites
    #[arg(long, default_value_t = 6)]
    scale: u32,
    /// Base for the sumset suite
    #[arg(long, default_value_t = 2)]
    b: u32,
    /// Horizon for the sumset and roundtrip suites
    #[arg(long, default_value_t = 10_000)]
    horizon: u64,
    /// Kernel depth for the regularity suite
    #[arg(long, default_value_t = 4)]
    depth: u32,
    /// Kernel window length for the regularity suite
    #[arg(long, default_value_t = 64)]
    window: usize,
    /// Bit source for the roundtrip suite
    #[arg(long, default_value = "subst:3,0,5")]
    source: String,
    /// Write reports here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Mu,
    Alpha,
    Conditions,
    Oracle,
    Reflection,
    Parity,
    Regularity,
    Sumset,
    Roundtrip,
    All,
}

const SUITE_ORDER: [Suite; 9] = [
    Suite::Mu,
    Suite::Alpha,
    Suite::Conditions,
    Suite::Oracle,
    Suite::Reflection,
    Suite::Parity,
    Suite::Regularity,
    Suite::Sumset,
    Suite::Roundtrip,
];

#[derive(Args)]
struct AutomatonArgs {
    /// Source base of the digit rewriting
    #[arg(long, default_value_t = 2)]
    b: u32,
    #[arg(long, value_enum, default_value_t = Format::Table)]
    format: Format,
    /// Write data here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Dot,
}

/// Where a decode's bits come from. Parsed from the `--source` flag.
pub enum Source {
    Substitution(SubstitutionParams),
    Periodic(Vec<u8>),
    File(PathBuf),
    BaseChange(u32),
}

impl Source {
    pub fn parse(text: &str) -> Result<Source> {
        let (kind, rest) = text
            .split_once(':')
            .ok_or_else(|| Error::Usage(format!("source {text:?} needs the form {SOURCE_HELP}")))?;
        match kind {
            "subst" => Ok(Source::Substitution(SubstitutionParams::parse(rest)?)),
            "periodic" => {
                let block = stream::parse_bit_word(rest)?;
                if block.is_empty() {
                    return Err(Error::Usage(
                        "periodic source needs at least one bit".into(),
                    ));
                }
                Ok(Source::Periodic(block))
            }
            "file" => Ok(Source::File(PathBuf::from(rest))),
            "base-change" => {
                let b = rest.trim().parse().map_err(|_| {
                    Error::Usage(format!("base {rest:?} is not an unsigned integer"))
                })?;
                Ok(Source::BaseChange(b))
            }
            other => Err(Error::Usage(format!(
                "unknown source kind {other:?}; expected {SOURCE_HELP}"
            ))),
        }
    }

    /// A file source exhausts at end of word; the rest never run dry.
    pub fn open(&self) -> Result<Box<dyn BitStream>> {
        Ok(match self {
            Source::Substitution(p) => Box::new(p.stream()),
            Source::Periodic(block) => Box::new(WordStream::periodic(block.clone())),
            Source::File(path) => Box::new(WordStream::new(
                stream::read_bit_word_file(path)?,
                Tail::Exhaust,
            )),
            Source::BaseChange(b) => Box::new(BaseChangeStream::new(*b)?),
        })
    }

    fn describe(&self) -> String {
        match self {
            Source::Substitution(p) => format!("subst:{p}"),
            Source::Periodic(block) => format!("periodic:{}", stream::bit_word_to_string(block)),
            Source::File(path) => format!("file:{}", path.display()),
            Source::BaseChange(b) => format!("base-change:{b}"),
        }
    }
}

/// Entry point for the binary: parse `args`, run, and return the exit code.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Same as [`run`] but with caller-supplied output streams, so tests can
/// capture bytes exactly.
pub fn run_with(
    args: impl IntoIterator<Item = String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match dispatch(cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    match cli.command {
        Command::Decode(a) => cmd_decode(a, out),
        Command::Encode(a) => cmd_encode(a, out),
        Command::ClosedForm(a) => cmd_closed_form(a, out),
        Command::Verify(a) => cmd_verify(a, out, err),
        Command::Automaton(a) => cmd_automaton(a, out),
    }
}

fn open_sink<'a>(path: &Option<PathBuf>, out: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(out)),
    })
}

fn horizon_cap() -> Result<u64> {
    match std::env::var("SUMFREE_HORIZON_CAP") {
        Ok(text) => text.trim().parse().map_err(|_| {
            Error::Usage(format!(
                "SUMFREE_HORIZON_CAP must be an unsigned integer, got {text:?}"
            ))
        }),
        Err(std::env::VarError::NotPresent) => Ok(1 << 30),
        Err(e) => Err(Error::Usage(format!("SUMFREE_HORIZON_CAP: {e}"))),
    }
}

fn checked_horizon(horizon: u64) -> Result<usize> {
    let cap = horizon_cap()?;
    if horizon > cap {
        return Err(Error::Usage(format!(
            "horizon {horizon} exceeds the cap {cap}; raise SUMFREE_HORIZON_CAP to allow it"
        )));
    }
    usize::try_from(horizon).map_err(|_| Error::HorizonOverflow {
        value: horizon.to_string(),
    })
}

fn bit_length(n: u64) -> u64 {
    (64 - n.leading_zeros()) as u64
}

/// Numeration system whose weights come from the substitution's closed form,
/// sized so indices below `count` are representable.
fn numeration_for(p: &SubstitutionParams, count: u64) -> Result<NumerationSystem> {
    if count == 0 {
        return Err(Error::Usage("need at least one element".into()));
    }
    let weights = (1..=bit_length(count - 1))
        .map(|i| closed_form::cantor_like_weight(i, p))
        .collect();
    NumerationSystem::new(weights)
}

/// Decodes the substitution stream far enough to produce exactly `count`
/// elements, using the closed form to pick the horizon.
fn decode_prefix(p: &SubstitutionParams, count: u64) -> Result<SumFreePrefix> {
    let horizon_value = numeration_for(p, count)?.element(count - 1)?;
    let horizon = horizon_value.to_u64().ok_or(Error::HorizonOverflow {
        value: horizon_value.to_string(),
    })?;
    let horizon = checked_horizon(horizon)?;
    let mut bits = p.stream();
    let (_, set) = bijection::decode(&mut bits, horizon)?;
    Ok(set)
}

#[derive(Serialize)]
struct DecodePayload {
    schema: u32,
    kind: &'static str,
    source: String,
    horizon: u64,
    consumed: u64,
    count: u64,
    elements: Vec<u64>,
    zero_runs: Vec<u64>,
    star_counts: Vec<u64>,
}

fn cmd_decode(a: DecodeArgs, out: &mut dyn Write) -> Result<bool> {
    let source = Source::parse(&a.source)?;
    let horizon = checked_horizon(a.horizon)?;
    let mut bits = source.open()?;
    let (labels, set) = bijection::decode(bits.as_mut(), horizon)?;
    if let Some(path) = &a.labels {
        let mut f = BufWriter::new(File::create(path)?);
        writeln!(f, "{}", labels.ternary_string())?;
        f.flush()?;
    }
    let mut sink = open_sink(&a.out, out)?;
    match a.emit {
        Emit::Plain => {
            for e in set.elements() {
                writeln!(sink, "{e}")?;
            }
        }
        Emit::Json => {
            let payload = DecodePayload {
                schema: 1,
                kind: "decode",
                source: source.describe(),
                horizon: a.horizon,
                consumed: labels.consumed(),
                count: set.len() as u64,
                elements: set.elements_u64()?,
                zero_runs: set.zero_runs().to_vec(),
                star_counts: set.star_counts().to_vec(),
            };
            writeln!(sink, "{}", to_json_line(&payload))?;
        }
    }
    sink.flush()?;
    Ok(true)
}

fn cmd_encode(a: EncodeArgs, out: &mut dyn Write) -> Result<bool> {
    let source = Source::parse(&a.source)?;
    let word = match &source {
        Source::File(path) => {
            let elements = bijection::read_sequence_file(path)?;
            bijection::encode(&elements)?
        }
        _ => {
            let horizon = checked_horizon(a.horizon)?;
            let mut bits = source.open()?;
            let (_, set) = bijection::decode(bits.as_mut(), horizon)?;
            bijection::encode(set.elements())?
        }
    };
    let mut sink = open_sink(&a.out, out)?;
    writeln!(sink, "{}", stream::bit_word_to_string(&word))?;
    sink.flush()?;
    Ok(true)
}

#[derive(Serialize)]
struct ClosedFormPayload {
    schema: u32,
    kind: &'static str,
    subst: String,
    count: u64,
    weights: Vec<String>,
    elements: Vec<String>,
    zero_runs: Vec<u64>,
    star_counts: Vec<u64>,
}

fn cmd_closed_form(a: ClosedFormArgs, out: &mut dyn Write) -> Result<bool> {
    let p = SubstitutionParams::parse(&a.subst)?;
    if a.n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    let system = numeration_for(&p, a.n)?;
    let elements = system.elements(a.n)?;
    let gap_count = (a.n - 1) as usize;
    let zero_runs = substitution::closed_zero_runs(&p, gap_count);
    let star_counts = closed_form::closed_star_counts(gap_count);
    let mut sink = open_sink(&a.out, out)?;
    match a.emit {
        Emit::Plain => {
            writeln!(sink, "# substitution {p}")?;
            writeln!(sink, "# weight\tvalue")?;
            for (i, w) in system.weights().iter().enumerate() {
                writeln!(sink, "{}\t{w}", i + 1)?;
            }
            writeln!(sink, "# n\telement\tzero_run\tstar_count")?;
            for (n, e) in elements.iter().enumerate() {
                if n == 0 {
                    writeln!(sink, "0\t{e}\t-\t-")?;
                } else {
                    writeln!(
                        sink,
                        "{n}\t{e}\t{}\t{}",
                        zero_runs[n - 1],
                        star_counts[n - 1]
                    )?;
                }
            }
        }
        Emit::Json => {
            let payload = ClosedFormPayload {
                schema: 1,
                kind: "closed-form",
                subst: p.to_string(),
                count: a.n,
                weights: system.weights().iter().map(|w| w.to_string()).collect(),
                elements: elements.iter().map(|e| e.to_string()).collect(),
                zero_runs,
                star_counts,
            };
            writeln!(sink, "{}", to_json_line(&payload))?;
        }
    }
    sink.flush()?;
    Ok(true)
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let p = SubstitutionParams::parse(&a.subst)?;
    if a.n == 0 {
        return Err(Error::Usage("--n must be at least 1".into()));
    }
    let suites: &[Suite] = match a.suite {
        Suite::All => &SUITE_ORDER,
        ref single => std::slice::from_ref(single),
    };
    let mut sink = open_sink(&a.out, out)?;
    let mut all_pass = true;
    for &suite in suites {
        let report = run_suite(suite, &a, &p)?;
        writeln!(sink, "{}", report.to_json())?;
        if !report.pass {
            all_pass = false;
            match report.first_violation() {
                Some(i) => writeln!(err, "suite {} failed at index {i}", report.kind)?,
                None => writeln!(err, "suite {} failed", report.kind)?,
            }
        }
    }
    sink.flush()?;
    Ok(all_pass)
}

fn run_suite(suite: Suite, a: &VerifyArgs, p: &SubstitutionParams) -> Result<Report> {
    match suite {
        Suite::Mu => suite_mu(p, a.n),
        Suite::Alpha => suite_alpha(p, a.n),
        Suite::Conditions => suite_conditions(p, a.scale),
        Suite::Oracle => suite_oracle(p, a.n),
        Suite::Reflection => suite_reflection(p, a.scale),
        Suite::Parity => suite_parity(p, a.n),
        Suite::Regularity => suite_regularity(p, a.depth, a.window),
        Suite::Sumset => suite_sumset(a.b, a.horizon),
        Suite::Roundtrip => suite_roundtrip(&a.source, a.horizon),
        Suite::All => unreachable!("expanded before dispatch"),
    }
}

fn merge_violations(report: &mut Report, extra: Report) {
    if !extra.pass {
        report.pass = false;
        report.violations.extend(extra.violations);
    }
}

/// Zero runs: scanned word against closed form, then the doubling recurrence.
fn suite_mu(p: &SubstitutionParams, n: u64) -> Result<Report> {
    let count = n as usize;
    let scanned = p.scan_zero_runs(count);
    let closed = substitution::closed_zero_runs(p, count);
    let mut report = Report::new("mu", n).with_params(json!({ "subst": p.to_string() }));
    for i in 0..count {
        if scanned[i] != closed[i] {
            report.record((i + 1) as u64, closed[i], scanned[i]);
        }
    }
    let check = RecurrenceCheck::ZeroRuns {
        runs: &closed,
        params: *p,
    };
    merge_violations(&mut report, regularity::verify_recurrences(&check, n / 2)?);
    Ok(report)
}

/// Star counts: decoded tallies against the closed form, then the recurrence.
fn suite_alpha(p: &SubstitutionParams, n: u64) -> Result<Report> {
    let set = decode_prefix(p, n + 1)?;
    let counts = set.star_counts();
    let mut report = Report::new("alpha", n).with_params(json!({ "subst": p.to_string() }));
    for i in 1..=n {
        let expected = closed_form::star_count_u64(i);
        let actual = counts[(i - 1) as usize];
        if actual != expected {
            report.record(i, expected, actual);
        }
    }
    let check = RecurrenceCheck::StarCounts { counts };
    merge_violations(&mut report, regularity::verify_recurrences(&check, n / 2)?);
    Ok(report)
}

/// Admissibility inequalities plus gap domination up to the given scale.
fn suite_conditions(p: &SubstitutionParams, scale: u32) -> Result<Report> {
    check_scale(scale)?;
    let needed = (1usize << (scale + 1)) - 1;
    let runs = substitution::closed_zero_runs(p, needed);
    let domination = substitution::check_gap_domination(&runs, scale)?;
    let mut report = Report::new("conditions", scale as u64).with_params(json!({
        "subst": p.to_string(),
        "admissible": p.is_admissible(),
    }));
    if !p.is_admissible() {
        report.record(0, "admissible parameters", "inequalities fail");
    }
    if let Some(f) = domination.first_failure {
        report.record(
            f.scale as u64,
            "gap domination",
            format!("{:?} clause fails", f.clause),
        );
    }
    Ok(report)
}

/// Decoded elements and gap statistics against the closed forms.
fn suite_oracle(p: &SubstitutionParams, n: u64) -> Result<Report> {
    let set = decode_prefix(p, n)?;
    let predicted = numeration_for(p, n)?.elements(n)?;
    let gap_count = (n - 1) as usize;
    let runs = substitution::closed_zero_runs(p, gap_count);
    let counts = closed_form::closed_star_counts(gap_count);
    let mut report = Report::new("oracle", n).with_params(json!({ "subst": p.to_string() }));
    for (i, (got, want)) in set.elements().iter().zip(&predicted).enumerate() {
        if got != want {
            report.record(i as u64, format!("S={want}"), format!("S={got}"));
        }
    }
    for i in 0..gap_count {
        if set.zero_runs()[i] != runs[i] {
            report.record(
                (i + 1) as u64,
                format!("mu={}", runs[i]),
                format!("mu={}", set.zero_runs()[i]),
            );
        }
        if set.star_counts()[i] != counts[i] {
            report.record(
                (i + 1) as u64,
                format!("alpha={}", counts[i]),
                format!("alpha={}", set.star_counts()[i]),
            );
        }
    }
    Ok(report)
}

/// Reflection window counts at every scale up to the bound; the first failing
/// scale's report is returned as-is.
fn suite_reflection(p: &SubstitutionParams, scale: u32) -> Result<Report> {
    check_scale(scale)?;
    let set = decode_prefix(p, 1u64 << (scale + 1))?;
    for m in 1..=scale {
        let mut r = closed_form::verify_reflection_windows(&set, m)?;
        if !r.pass {
            r.params = Some(json!({ "subst": p.to_string(), "scale": m }));
            return Ok(r);
        }
    }
    Ok(Report::new("reflection", scale as u64)
        .with_params(json!({ "subst": p.to_string(), "max_scale": scale })))
}

/// Element parities against the congruence-class law.
fn suite_parity(p: &SubstitutionParams, n: u64) -> Result<Report> {
    let set = decode_prefix(p, 4 * n + 4)?;
    regularity::parity_profile(&set, p, n)
}

/// Kernel ranks of the element and gap sequences must stop growing.
fn suite_regularity(p: &SubstitutionParams, depth: u32, window: usize) -> Result<Report> {
    if depth < 2 {
        return Err(Error::Usage(
            "--depth must be at least 2 to observe rank stabilization".into(),
        ));
    }
    if depth > 16 {
        return Err(Error::Usage("--depth above 16 is not supported".into()));
    }
    if window == 0 {
        return Err(Error::Usage("--window must be at least 1".into()));
    }
    let len = (1usize << depth) * (window + 1);
    let runs = substitution::closed_zero_runs(p, len - 1);
    let counts = closed_form::closed_star_counts(len - 1);
    let elements = numeration_for(p, len as u64)?.elements(len as u64)?;
    // Gap statistics are 1-based; pad index 0 so position n holds value n.
    let mut mu_seq = vec![BigUint::zero()];
    mu_seq.extend(runs.iter().map(|&r| BigUint::from(r)));
    let mut alpha_seq = vec![BigUint::zero()];
    alpha_seq.extend(counts.iter().map(|&c| BigUint::from(c)));
    let mu_ranks = regularity::regularity_profile(&mu_seq, 2, depth, window)?;
    let alpha_ranks = regularity::regularity_profile(&alpha_seq, 2, depth, window)?;
    let element_ranks = regularity::regularity_profile(&elements, 2, depth, window)?;
    let mut report = Report::new("regularity", len as u64).with_params(json!({
        "subst": p.to_string(),
        "depth": depth,
        "window": window,
        "mu_ranks": mu_ranks,
        "alpha_ranks": alpha_ranks,
    }));
    report.ranks = Some(element_ranks.clone());
    let profiles: [(&str, &[usize]); 3] = [
        ("mu", &mu_ranks),
        ("alpha", &alpha_ranks),
        ("elements", &element_ranks),
    ];
    for (name, ranks) in profiles {
        let stable = ranks.len() >= 2 && ranks[ranks.len() - 1] == ranks[ranks.len() - 2];
        if !stable {
            report.record(
                depth as u64,
                format!("{name} rank stable"),
                format!("ranks still rising: {ranks:?}"),
            );
        }
    }
    Ok(report)
}

fn suite_sumset(b: u32, horizon: u64) -> Result<Report> {
    let horizon = checked_horizon(horizon)? as u64;
    base_change::verify_sumset_structure(b, horizon)
}

/// Decode, re-encode, and compare with the consumed bits: the re-encoding
/// must be a prefix and the remainder all zero.
fn suite_roundtrip(source_text: &str, horizon: u64) -> Result<Report> {
    let source = Source::parse(source_text)?;
    let h = checked_horizon(horizon)?;
    let mut bits = source.open()?;
    let (labels, set) = bijection::decode(bits.as_mut(), h)?;
    let encoded = bijection::encode(set.elements())?;
    let original = labels.bit_word();
    let mut report =
        Report::new("roundtrip", horizon).with_params(json!({ "source": source.describe() }));
    for i in 0..encoded.len().min(original.len()) {
        if encoded[i] != original[i] {
            report.record(i as u64, original[i], encoded[i]);
            return Ok(report);
        }
    }
    if encoded.len() > original.len() {
        report.record(
            original.len() as u64,
            "consumed word at least as long as the re-encoding",
            format!("{} consumed bits", original.len()),
        );
        return Ok(report);
    }
    for (i, &bit) in original.iter().enumerate().skip(encoded.len()) {
        if bit != 0 {
            report.record(i as u64, 0, bit);
            return Ok(report);
        }
    }
    Ok(report)
}

fn check_scale(scale: u32) -> Result<()> {
    if scale == 0 || scale > 24 {
        return Err(Error::Usage("--scale must be between 1 and 24".into()));
    }
    Ok(())
}

fn cmd_automaton(a: AutomatonArgs, out: &mut dyn Write) -> Result<bool> {
    let dfao = Dfao::base_change(a.b)?;
    let mut sink = open_sink(&a.out, out)?;
    match a.format {
        Format::Table => write!(sink, "{}", dfao.table_string())?,
        Format::Dot => write!(sink, "{}", dfao.dot_string())?,
    }
    sink.flush()?;
    Ok(true)
}

fn to_json_line<T: Serialize>(payload: &T) -> String {
    serde_json::to_string(payload).expect("payload serialization cannot fail")
}
