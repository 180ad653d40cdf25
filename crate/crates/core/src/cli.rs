//! The `perfect-lee` command line. JSON documents go in and out via files,
//! stdin and stdout.
//!
//! Exit codes: 0 success, 1 verification failed (or a structural check
//! rejected an input), 2 usage or parse error, 3 resource cap exceeded.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::codes::{anticode_translate_family, ModularCode};
use crate::constructions::base::{
    diameter4_lattice, diameter_2d_family, golomb_welch_2d, hamming_code, lee_single_error_code,
    minkowski_code, seed_2484, HammingCode,
};
use crate::constructions::field::FieldTable;
use crate::constructions::product::{
    lee_double, lee_product, phelps_double, phelps_double_permuted, qary_product, BlockProduct,
    Outer, PermutationPlan,
};
use crate::enumeration::count_distinct_diameter_perfect;
use crate::error::{Error, Limits, Result};
use crate::lattice::Lattice;
use crate::serial::{self, Document};
use crate::tilings::{
    self, axis_period_probe, build_center_set, sequence_report, tiling_periodicity_probe,
    verify_window_tiling, CenterSet, SequenceGenerator, Window,
};
use crate::verify::{self, Mode};

#[derive(Debug, Parser)]
#[command(
    name = "perfect-lee",
    version,
    about = "Perfect and diameter perfect codes in the Lee, Manhattan and Hamming metrics"
)]
struct Cli {
    /// Seed for sampled verification and random sequences.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Largest number of points any single enumeration may touch.
    #[arg(long, global = true, default_value_t = Limits::DEFAULT_MAX_POINTS)]
    max_points: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a named code or lattice.
    Construct(ConstructArgs),
    /// Check a code; exit 0 iff it passes.
    Verify(VerifyArgs),
    /// Block products of an inner code and an outer Hamming code.
    Product(ProductArgs),
    /// Doubling constructions.
    Double(DoubleArgs),
    /// Build the diagonal-strip tiling and check a window of it.
    Tile(TileArgs),
    /// Number of distinct diameter perfect codes of length 2^r p over Z_4p.
    Count(CountArgs),
    /// Parameters, sizes and parity census of a code or lattice.
    Info(InfoArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConstructKind {
    LeeSingle,
    GolombWelch,
    Diameter4,
    Diameter2d,
    Minkowski,
    Hamming,
    #[value(name = "seed-2484")]
    Seed2484,
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: ConstructKind,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, visible_alias = "R")]
    radius: Option<u64>,
    /// Alphabet multiplier for lee-single (m = tau(2n+1)).
    #[arg(long, default_value_t = 1)]
    tau: u64,
    /// Member of the diameter2d family.
    #[arg(long)]
    i: Option<u64>,
    #[arg(long)]
    q: Option<u64>,
    #[arg(long)]
    r: Option<usize>,
    /// Emit the quotient code over Z_m instead of the lattice.
    #[arg(long)]
    reduce: bool,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Auto,
    Exhaustive,
    Formula,
    Sampled,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Exhaustive => Mode::Exhaustive,
            ModeArg::Formula => Mode::Formula,
            ModeArg::Sampled => Mode::Sampled,
        }
    }
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Code or lattice JSON; stdin when absent or `-`.
    input: Option<PathBuf>,
    /// Check perfectness with this error radius.
    #[arg(
        long,
        visible_alias = "R",
        conflicts_with = "distance",
        required_unless_present = "distance"
    )]
    radius: Option<u64>,
    /// Check diameter perfectness with this (even) minimum distance.
    #[arg(long)]
    distance: Option<u64>,
    #[arg(long, value_enum, default_value = "auto")]
    mode: ModeArg,
    /// Sample count for --mode sampled.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductKind {
    Qary,
    Lee,
}

#[derive(Debug, Args)]
struct ProductArgs {
    #[arg(long, value_enum)]
    kind: ProductKind,
    /// Inner code JSON.
    #[arg(long)]
    inner: PathBuf,
    /// Outer code JSON (a perfect Hamming code).
    #[arg(
        long,
        conflicts_with = "outer_hamming",
        required_unless_present = "outer_hamming"
    )]
    outer: Option<PathBuf>,
    /// Outer Hamming code given as `q,r`, used through its parity checks.
    #[arg(long)]
    outer_hamming: Option<String>,
    /// Permutation files for the Lee product, one per outer coordinate
    /// (default: all identities).
    #[arg(long)]
    perm: Vec<PathBuf>,
    /// Emit a local cover certificate on this many seeded points instead of
    /// the materialized code.
    #[arg(long)]
    samples: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DoubleKind {
    Lee,
    Phelps,
}

#[derive(Debug, Args)]
struct DoubleArgs {
    #[arg(long, value_enum)]
    kind: DoubleKind,
    /// First code JSON; stdin when absent or `-`.
    #[arg(long)]
    first: Option<PathBuf>,
    /// Second code JSON (default: the first code).
    #[arg(long)]
    second: Option<PathBuf>,
    /// Permutation JSON (default: identity).
    #[arg(long)]
    perm: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TileArgs {
    #[arg(long, visible_alias = "R", default_value_t = 1)]
    radius: u64,
    /// A sequence file, or `generator:NAME` with NAME one of constant[:c],
    /// alternating, fibonacci, sturmian, random.
    #[arg(long, default_value = "generator:fibonacci")]
    sequence: String,
    /// Half-open window `x0,y0,x1,y1`.
    #[arg(long, default_value = "0,0,200,200", allow_hyphen_values = true)]
    window: String,
    /// Run the periodicity probes for vectors up to this sup-norm.
    #[arg(long)]
    probe_max: Option<u64>,
    /// Write the multiplicity map as a binary PGM image.
    #[arg(long)]
    pgm: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CountArgs {
    #[arg(long)]
    r: u32,
    #[arg(long)]
    p: u64,
}

#[derive(Debug, Args)]
struct InfoArgs {
    /// Code or lattice JSON; stdin when absent or `-`.
    input: Option<PathBuf>,
}

/// Exit status for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Structural(_) => 1,
        Error::CapExceeded { .. } => 3,
        _ => 2,
    }
}

/// Runs the CLI on `argv` (including the program name) with the process's
/// stdin and stdout.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let stdin = io::stdin();
    let stdout = io::stdout();
    run_with_io(
        argv,
        &mut stdin.lock(),
        &mut stdout.lock(),
        &mut io::stderr(),
    )
}

/// Like `run`, with explicit streams.
pub fn run_with_io<I, S>(
    argv: I,
    input: &mut dyn Read,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = write!(err, "{e}");
            return code;
        }
    };
    let mut stdin_text = String::new();
    if reads_stdin(&cli.command) {
        if let Err(e) = input.read_to_string(&mut stdin_text) {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    }
    let input = stdin_text.as_str();
    let result = match cli.jobs {
        Some(jobs) => match rayon::ThreadPoolBuilder::new().num_threads(jobs).build() {
            Ok(pool) => pool.install(|| dispatch(&cli, input)),
            Err(e) => Err(Error::param(format!("cannot start {jobs} workers: {e}"))),
        },
        None => dispatch(&cli, input),
    };
    match result.and_then(|(text, status)| emit(&cli, out, &text).map(|_| status)) {
        Ok(status) => status,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn reads_stdin(command: &Command) -> bool {
    let is_stdin = |p: &Option<PathBuf>| p.as_deref().is_none_or(|p| p == Path::new("-"));
    match command {
        Command::Verify(a) => is_stdin(&a.input),
        Command::Info(a) => is_stdin(&a.input),
        Command::Double(a) => is_stdin(&a.first),
        _ => false,
    }
}

fn emit(cli: &Cli, out: &mut dyn Write, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => fs::write(path, format!("{text}\n"))?,
        None => writeln!(out, "{text}")?,
    }
    Ok(())
}

fn dispatch(cli: &Cli, input: &str) -> Result<(String, i32)> {
    let limits = Limits::new(cli.max_points);
    match &cli.command {
        Command::Construct(a) => construct(a, &limits).map(|t| (t, 0)),
        Command::Verify(a) => verify_cmd(a, cli.seed, input, &limits),
        Command::Product(a) => product(a, cli.seed, &limits),
        Command::Double(a) => double(a, input, &limits).map(|t| (t, 0)),
        Command::Tile(a) => tile(a, cli.seed, &limits).map(|t| (t, 0)),
        Command::Count(a) => Ok((count_distinct_diameter_perfect(a.r, a.p)?.to_string(), 0)),
        Command::Info(a) => info(a, input, &limits).map(|t| (t, 0)),
    }
}

fn read_source(path: Option<&Path>, stdin: &str) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => {
            fs::read_to_string(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))
        }
        _ => Ok(stdin.to_string()),
    }
}

fn read_code(path: Option<&Path>, stdin: &str, limits: &Limits) -> Result<ModularCode> {
    match serial::parse_document(&read_source(path, stdin)?)? {
        Document::Code(c) => Ok(c),
        Document::Lattice(l) => Ok(l.reduce_to_modular(limits)?.quotient),
    }
}

fn need<T>(value: Option<T>, flag: &str, kind: &str) -> Result<T> {
    value.ok_or_else(|| Error::param(format!("--kind {kind} needs --{flag}")))
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn construct(a: &ConstructArgs, limits: &Limits) -> Result<String> {
    let lattice_out = |l: Lattice| -> Result<String> {
        if a.reduce {
            Ok(serial::code_to_json(&l.reduce_to_modular(limits)?.quotient))
        } else {
            Ok(serial::lattice_to_json(&l))
        }
    };
    match a.kind {
        ConstructKind::LeeSingle => Ok(serial::code_to_json(&lee_single_error_code(
            need(a.n, "n", "lee-single")?,
            a.tau,
            limits,
        )?)),
        ConstructKind::GolombWelch => {
            let code = golomb_welch_2d(need(a.radius, "radius", "golomb-welch")?, limits)?;
            if a.reduce {
                Ok(serial::code_to_json(&code.quotient))
            } else {
                Ok(serial::lattice_to_json(&code.lattice))
            }
        }
        ConstructKind::Diameter4 => lattice_out(diameter4_lattice(need(a.n, "n", "diameter4")?)?),
        ConstructKind::Diameter2d => lattice_out(diameter_2d_family(
            need(a.radius, "radius", "diameter2d")?,
            a.i.unwrap_or(0),
        )?),
        ConstructKind::Minkowski => lattice_out(minkowski_code()),
        ConstructKind::Hamming => Ok(serial::code_to_json(&hamming_code(
            need(a.q, "q", "hamming")?,
            need(a.r, "r", "hamming")?,
            limits,
        )?)),
        ConstructKind::Seed2484 => Ok(serial::code_to_json(&seed_2484(limits)?)),
    }
}

fn required_seed(seed: Option<u64>) -> Result<u64> {
    seed.ok_or_else(|| Error::param("sampled verification needs an explicit --seed"))
}

fn verify_cmd(
    a: &VerifyArgs,
    seed: Option<u64>,
    stdin: &str,
    limits: &Limits,
) -> Result<(String, i32)> {
    let code = read_code(a.input.as_deref(), stdin, limits)?;
    let mode = Mode::from(a.mode);
    let cert = match (a.radius, a.distance, mode) {
        (Some(r), _, Mode::Sampled) => {
            let seed = required_seed(seed)?;
            let points = verify::sample_points(code.n(), code.m(), a.samples, seed);
            verify::local_cover_check(&code, &points, r, Some(seed))?
        }
        (Some(r), _, mode) => verify::is_perfect(&code, r, mode, limits)?,
        (None, Some(_), Mode::Sampled) => {
            return Err(Error::param(
                "sampled mode checks perfectness; use --radius",
            ))
        }
        (None, Some(d), mode) => verify::is_diameter_perfect(&code, d, mode, limits)?,
        (None, None, _) => return Err(Error::param("give --radius or --distance")),
    };
    Ok((to_json(&cert)?, if cert.pass { 0 } else { 1 }))
}

fn parse_pair(text: &str) -> Result<(u64, usize)> {
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| Error::Parse(format!("expected q,r, got {text:?}")))
    };
    match text.split_once(',') {
        Some((q, r)) => Ok((parse(q)?, parse(r)? as usize)),
        None => Err(Error::Parse(format!("expected q,r, got {text:?}"))),
    }
}

fn read_perm(path: &Path, stdin: &str) -> Result<PermutationPlan> {
    serial::parse_permutation(&read_source(Some(path), stdin)?)
}

fn product(a: &ProductArgs, seed: Option<u64>, limits: &Limits) -> Result<(String, i32)> {
    let none = "";
    let inner = read_code(Some(&a.inner), none, limits)?;
    let outer: Outer = match (&a.outer, &a.outer_hamming) {
        (Some(p), _) => read_code(Some(p), none, limits)?.into(),
        (None, Some(qr)) => {
            let (q, r) = parse_pair(qr)?;
            HammingCode::new(FieldTable::new(q)?, r)?.into()
        }
        (None, None) => return Err(Error::param("give --outer or --outer-hamming")),
    };
    let product: BlockProduct = match a.kind {
        ProductKind::Qary => {
            if !a.perm.is_empty() {
                return Err(Error::param("the q-ary product takes no permutations"));
            }
            qary_product(&inner, outer, limits)?
        }
        ProductKind::Lee => {
            let perms = if a.perm.is_empty() {
                vec![PermutationPlan::identity(2 * inner.n() + 1); outer_len(&outer)]
            } else {
                a.perm
                    .iter()
                    .map(|p| read_perm(p, none))
                    .collect::<Result<_>>()?
            };
            lee_product(&inner, outer, perms, limits)?
        }
    };
    match a.samples {
        Some(count) => {
            let seed = required_seed(seed)?;
            let points = verify::sample_points(product.len(), product.m(), count, seed);
            let cert = verify::local_cover_check(&product, &points, 1, Some(seed))?;
            let status = if cert.pass { 0 } else { 1 };
            let out = json!({ "code_size": product.size().to_string(), "certificate": cert });
            Ok((out.to_string(), status))
        }
        None => Ok((serial::code_to_json(&product.materialize(limits)?), 0)),
    }
}

fn outer_len(outer: &Outer) -> usize {
    use crate::codes::Membership;
    outer.n()
}

fn double(a: &DoubleArgs, stdin: &str, limits: &Limits) -> Result<String> {
    let first = read_code(a.first.as_deref(), stdin, limits)?;
    let none = "";
    let second = match &a.second {
        Some(p) => Some(read_code(Some(p), none, limits)?),
        None => None,
    };
    let perm = match &a.perm {
        Some(p) => Some(read_perm(p, none)?),
        None => None,
    };
    let code = match a.kind {
        DoubleKind::Lee => {
            let second = second.as_ref().unwrap_or(&first);
            let pi = perm.unwrap_or_else(|| PermutationPlan::identity(2 * first.n()));
            lee_double(&first, second, &pi, limits)?
        }
        DoubleKind::Phelps if second.is_none() && perm.is_none() => phelps_double(&first, limits)?,
        DoubleKind::Phelps => {
            let second = second.as_ref().unwrap_or(&first);
            let pi = perm.unwrap_or_else(|| PermutationPlan::identity(first.n() + 1));
            phelps_double_permuted(&first, second, &pi, limits)?
        }
    };
    Ok(serial::code_to_json(&code))
}

fn parse_window(text: &str) -> Result<Window> {
    let v: Vec<i64> = text
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad window {text:?}")))
        })
        .collect::<Result<_>>()?;
    if v.len() != 4 {
        return Err(Error::Parse(format!(
            "window needs x0,y0,x1,y1, got {text:?}"
        )));
    }
    Window::new(vec![v[0], v[1]], vec![v[2], v[3]])
}

fn tile(a: &TileArgs, seed: Option<u64>, limits: &Limits) -> Result<String> {
    let window = parse_window(&a.window)?;
    let margin = 2 * (a.radius as i64 + 1);
    let set: CenterSet = match a.sequence.strip_prefix("generator:") {
        Some(name) => {
            let generator = SequenceGenerator::parse(name, seed.unwrap_or(0))?;
            if matches!(generator, SequenceGenerator::Random(_)) && seed.is_none() {
                return Err(Error::param(
                    "the random generator needs an explicit --seed",
                ));
            }
            // Enough indices for the verification margin and for every probe.
            let reach = margin.max(a.probe_max.unwrap_or(0) as i64);
            tilings::strip_set_for_window(generator, a.radius, &window.grown(reach))?
        }
        None => {
            let none = "";
            let text = read_source(Some(Path::new(&a.sequence)), none)?;
            build_center_set(serial::parse_sequence(&text, a.radius)?)?
        }
    };
    let tilings::Backing::Sequence(seq) = set.backing() else {
        unreachable!("strip sets are sequence backed")
    };
    let report = verify_window_tiling(&set, &window, limits)?;
    if let Some(path) = &a.pgm {
        fs::write(path, tilings::pgm_bytes(&report)?)?;
    }
    let (lo, hi) = CenterSet::strip_index_range(a.radius, &window, 0);
    let (lo, hi) = (lo.max(seq.start), hi.min(seq.end()));
    let mut out = json!({
        "radius": a.radius,
        "anticode_axis": set.anticode().axis,
        "report": report,
        "sequence": sequence_report(seq, lo, hi)?,
    });
    if let Some(b) = a.probe_max {
        let obj = out.as_object_mut().expect("object");
        obj.insert(
            "probe".into(),
            serde_json::to_value(tiling_periodicity_probe(&set, &window, b, limits)?)?,
        );
        obj.insert(
            "axis_probe".into(),
            serde_json::to_value(axis_period_probe(&set, &window, b, limits)?)?,
        );
    }
    Ok(out.to_string())
}

fn info(a: &InfoArgs, stdin: &str, limits: &Limits) -> Result<String> {
    let doc = serial::parse_document(&read_source(a.input.as_deref(), stdin)?)?;
    let mut out = serde_json::Map::new();
    let code = match doc {
        Document::Lattice(l) => {
            let lc = l.reduce_to_modular(limits)?;
            out.insert("kind".into(), json!("lattice"));
            out.insert(
                "parameters".into(),
                serde_json::to_value(lc.parameters(limits)?)?,
            );
            out.insert(
                "hermite_form".into(),
                json!(l
                    .hermite_form()
                    .iter()
                    .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>()),
            );
            lc.quotient
        }
        Document::Code(c) => {
            out.insert("kind".into(), json!("modular_code"));
            c
        }
    };
    let (even, odd) = code.lee_parity_census();
    out.insert("n".into(), json!(code.n()));
    out.insert("m".into(), json!(code.m()));
    out.insert("metric".into(), serde_json::to_value(code.metric())?);
    out.insert("size".into(), json!(code.len()));
    out.insert("linear".into(), json!(code.is_linear()));
    out.insert("min_distance".into(), json!(code.min_distance()));
    out.insert(
        "lee_weight_parity".into(),
        json!({ "even": even, "odd": odd }),
    );
    if code.m() % 2 == 0 && code.m() >= 4 {
        let lee = code.clone().with_metric(crate::metrics::Metric::Lee);
        let family = anticode_translate_family(&lee, 1, 0, limits)?;
        let (e, o, x) = family.parity_census();
        out.insert(
            "anticode_translates".into(),
            json!({ "even": e, "odd": o, "mixed": x, "partition": family.is_partition() }),
        );
    }
    Ok(Value::Object(out).to_string())
}
