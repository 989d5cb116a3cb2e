//! Command-line front end for the NHT toolkit.
//!
//! Verbs: `build` and `verify` construct transform families and check their
//! defining identities, `apply`/`invert` push data streams through pipeline
//! specs, `search` enumerates 8-point parameter sets, `ntt` prints dense NTT
//! kernels, `pipeline` validates a spec and measures diffusion, and
//! `table1`/`table2` reproduce the reference vector tables for the classic
//! 6-point mod-13 and 8-point mod-24 transforms.
//!
//! Exit codes: 0 on success, 1 when any `FAIL` line was printed, 2 on usage
//! or input errors. All output is deterministic.
//!
//! Identity lines render the Gram scalar as a plain residue and the square
//! scalar as the centered representative (so the 6-point dual identity prints
//! `NN=-12I` rather than its residue).

use std::fs;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use nht_core::circulant::apply_circulant_exact;
use nht_core::nht::{self, IdentityRoute, NhtError, NhtTransform, NormalizeTarget};
use nht_core::ntt::NttTransform;
use nht_core::pipeline::{parse_spec, DataStream, PipelineSpec};
use nht_core::{Modulus, NhtParams, Rational};

#[derive(Parser)]
#[command(name = "nht", about = "Number-theoretic Hilbert transform toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a transform and print its matrix data
    Build(TransformArgs),
    /// Recompute and report the defining identities of a transform
    Verify(TransformArgs),
    /// Apply a pipeline spec to a data stream
    Apply(StreamArgs),
    /// Invert a pipeline spec on a data stream
    Invert(StreamArgs),
    /// Enumerate 8-point parameter sets up to a bound
    Search {
        #[arg(long)]
        bound: i64,
        #[arg(long)]
        require_invertible: bool,
    },
    /// Print the dense NTT kernel for a prime and block length
    Ntt {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
        /// Kernel element; defaults to the smallest of order n
        #[arg(long)]
        g: Option<u64>,
        /// Also print the inverse kernel and its prefactor
        #[arg(long)]
        inverse: bool,
    },
    /// Validate a pipeline spec; optionally measure diffusion
    Pipeline {
        #[arg(long)]
        spec: String,
        /// Number of single-flip trials for the diffusion report
        #[arg(long)]
        diffusion: Option<u32>,
        #[arg(long, default_value_t = 2)]
        blocks: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Reproduce the 6-point mod-13 reference table
    Table1,
    /// Reproduce the 8-point mod-24 reference table
    Table2 {
        #[arg(long, value_enum, default_value_t = Convention::Canonical)]
        convention: Convention,
    },
}

#[derive(Args)]
struct TransformArgs {
    /// four | six_ap | six_gen | eight | row
    #[arg(long)]
    family: String,
    /// Rational for four (e.g. 3/2), integer elsewhere
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    k: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    l: Option<i64>,
    /// Odd-position entries for family=row, comma separated
    #[arg(long, allow_hyphen_values = true)]
    entries: Option<String>,
    /// Selects a candidate modulus (raw or gcd-reduced)
    #[arg(long)]
    modulus: Option<u64>,
    /// none | transpose | involution
    #[arg(long)]
    normalize: Option<String>,
    /// Explicit normalization root (overrides the canonical choice)
    #[arg(long)]
    root: Option<u64>,
}

#[derive(Args)]
struct StreamArgs {
    #[arg(long)]
    spec: String,
    /// Input stream file; standard input when omitted
    #[arg(long = "in")]
    input: Option<String>,
    /// Output stream file; standard output when omitted
    #[arg(long)]
    out: Option<String>,
    /// Zero-pad the input to a block multiple, recording the original length
    #[arg(long)]
    pad: bool,
}

/// Halving convention for [`table2_text`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    /// Halve the exact integer product, then reduce integer entries mod 24
    Canonical,
    /// Reduce mod 24 first, then halve
    PaperRow7,
}

/// Runs the CLI on `args` (without the program name). Returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let argv = std::iter::once("nht".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            if is_help {
                let _ = write!(out, "{rendered}");
                return 0;
            }
            let _ = write!(err, "{rendered}");
            return 2;
        }
    };
    let result = match &cli.command {
        Command::Build(args) => cmd_build(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Apply(args) => cmd_stream(args, out, true),
        Command::Invert(args) => cmd_stream(args, out, false),
        Command::Search {
            bound,
            require_invertible,
        } => cmd_search(*bound, *require_invertible, out),
        Command::Ntt { p, n, g, inverse } => cmd_ntt(*p, *n, *g, *inverse, out),
        Command::Pipeline {
            spec,
            diffusion,
            blocks,
            seed,
        } => cmd_pipeline(spec, *diffusion, *blocks, *seed, out),
        Command::Table1 => {
            let _ = write!(out, "{}", table1_text());
            Ok(0)
        }
        Command::Table2 { convention } => {
            let _ = write!(out, "{}", table2_text(*convention));
            Ok(0)
        }
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            let _ = writeln!(err, "error: {message}");
            2
        }
    }
}

// ---------------------------------------------------------------------------
// transform construction shared by build/verify

enum Family {
    Four { a: Rational, b: Rational },
    SixAp { a: i64 },
    SixGen { a: i64, k: i64, l: i64 },
    Eight { a: i64, b: i64, c: i64, d: i64 },
    Row { entries: Vec<i64>, modulus: u64 },
}

fn parse_family(args: &TransformArgs) -> Result<Family, String> {
    let rational = |name: &str, v: &Option<String>| -> Result<Rational, String> {
        v.as_deref()
            .ok_or(format!("--{name} is required for family={}", args.family))?
            .parse::<Rational>()
            .map_err(|e| format!("bad --{name}: {e}"))
    };
    let int_str = |name: &str, v: &Option<String>| -> Result<i64, String> {
        v.as_deref()
            .ok_or(format!("--{name} is required for family={}", args.family))?
            .parse::<i64>()
            .map_err(|e| format!("bad --{name}: {e}"))
    };
    let need = |name: &str, v: Option<i64>| -> Result<i64, String> {
        v.ok_or(format!("--{name} is required for family={}", args.family))
    };
    match args.family.as_str() {
        "four" => Ok(Family::Four {
            a: rational("a", &args.a)?,
            b: rational("b", &args.b)?,
        }),
        "six_ap" => Ok(Family::SixAp {
            a: int_str("a", &args.a)?,
        }),
        "six_gen" => Ok(Family::SixGen {
            a: int_str("a", &args.a)?,
            k: need("k", args.k)?,
            l: need("l", args.l)?,
        }),
        "eight" => Ok(Family::Eight {
            a: int_str("a", &args.a)?,
            b: int_str("b", &args.b)?,
            c: need("c", args.c)?,
            d: need("d", args.d)?,
        }),
        "row" => {
            let entries = args
                .entries
                .as_deref()
                .ok_or("--entries is required for family=row".to_string())?
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<i64>()
                        .map_err(|e| format!("bad --entries: {e}"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let modulus = args.modulus.ok_or("--modulus is required for family=row")?;
            Ok(Family::Row { entries, modulus })
        }
        other => Err(format!("unknown family `{other}`")),
    }
}

/// The family's candidate transforms labeled by their identity (`NNt`/`NN`),
/// with per-candidate construction errors preserved.
fn family_candidates(
    family: &Family,
) -> Result<Vec<(&'static str, Result<NhtTransform, NhtError>)>, String> {
    match family {
        Family::Four { a, b } => {
            let (gram, square) = nht::four_point(*a, *b);
            Ok(vec![("NNt", gram), ("NN", square)])
        }
        Family::SixAp { a } => {
            let (t1, t2) = nht::six_point_ap(*a).map_err(|e| e.to_string())?;
            Ok(vec![("NNt", Ok(t1)), ("NN", Ok(t2))])
        }
        Family::SixGen { a, k, l } => {
            let t = nht::six_point_general(*a, *k, *l).map_err(|e| e.to_string())?;
            Ok(vec![("NNt", Ok(t))])
        }
        Family::Eight { a, b, c, d } => {
            let t = nht::eight_point(*a, *b, *c, *d).map_err(|e| e.to_string())?;
            Ok(vec![("NNt", Ok(t))])
        }
        Family::Row { entries, modulus } => {
            let t = nht::from_row(entries, *modulus).map_err(|e| e.to_string())?;
            Ok(vec![("row", Ok(t))])
        }
    }
}

/// Scalar shown in identity lines: Gram scalars as plain residues, square
/// scalars centered around zero.
fn display_scalar(value: u64, modulus: u64, route: IdentityRoute) -> i128 {
    match route {
        IdentityRoute::Gram => value as i128,
        IdentityRoute::Square => {
            if value as i128 > modulus as i128 / 2 {
                value as i128 - modulus as i128
            } else {
                value as i128
            }
        }
    }
}

// ---------------------------------------------------------------------------
// verify

fn cmd_verify(args: &TransformArgs, out: &mut dyn Write) -> Result<i32, String> {
    let family = parse_family(args)?;
    let mut lines: Vec<String> = Vec::new();
    match &family {
        Family::Row { .. } => {
            let (_, candidate) = family_candidates(&family)?.remove(0);
            let t = candidate.map_err(|e| e.to_string())?;
            let report = t.verify();
            let m = t.modulus().get();
            let mut any = false;
            if let Some(c) = report.gram_scalar {
                lines.push(format!("PASS NNt={c}I mod {m}"));
                any = true;
            }
            if let Some(q) = report.square_scalar {
                let shown = display_scalar(q, m, IdentityRoute::Square);
                lines.push(format!("PASS NN={shown}I mod {m}"));
                any = true;
            }
            if !any {
                lines.push(format!("FAIL no scalar identity mod {m}"));
            } else if !report.invertible {
                lines.push(format!(
                    "WARN non-invertible gcd({},{m})={}",
                    t.diag_const(),
                    report.gcd_c_m
                ));
            }
        }
        _ => {
            let mut candidates = family_candidates(&family)?;
            // --modulus narrows verification to one candidate, raw or reduced
            if let Some(m) = args.modulus {
                let mut selected = Vec::new();
                for (label, candidate) in candidates {
                    let Ok(t) = candidate else { continue };
                    if t.modulus().get() == m {
                        selected.push((label, Ok(t)));
                    } else if let Ok(r) = t.reduce_by_gcd() {
                        if r.modulus().get() == m {
                            selected.push((label, Ok(r)));
                        }
                    }
                }
                if selected.is_empty() {
                    return Err(format!("no candidate has modulus {m}"));
                }
                candidates = selected;
            }
            for (label, candidate) in candidates {
                match candidate {
                    Ok(t) => lines.extend(identity_lines(label, &t)),
                    Err(e) => lines.push(format!("WARN {label} candidate unavailable: {e}")),
                }
            }
        }
    }
    let mut failed = false;
    for line in &lines {
        failed |= line.starts_with("FAIL");
        let _ = writeln!(out, "{line}");
    }
    Ok(if failed { 1 } else { 0 })
}

fn identity_lines(label: &str, t: &NhtTransform) -> Vec<String> {
    let report = t.verify();
    let m = t.modulus().get();
    let mut lines = Vec::new();
    let scalar = match t.route() {
        IdentityRoute::Gram => report.gram_scalar,
        IdentityRoute::Square => report.square_scalar,
    };
    match scalar {
        Some(v) => {
            let shown = display_scalar(v, m, t.route());
            lines.push(format!("PASS {label}={shown}I mod {m}"));
            if !report.invertible {
                lines.push(format!(
                    "WARN non-invertible gcd({shown},{m})={}",
                    report.gcd_c_m
                ));
            }
        }
        None => lines.push(format!("FAIL {label} not scalar mod {m}")),
    }
    if let Ok(reduced) = t.reduce_by_gcd() {
        lines.push(format!(
            "NOTE reduce_by_gcd: m={m} -> {}",
            reduced.modulus().get()
        ));
    }
    lines
}

// ---------------------------------------------------------------------------
// build

fn cmd_build(args: &TransformArgs, out: &mut dyn Write) -> Result<i32, String> {
    let family = parse_family(args)?;
    let mut candidates: Vec<NhtTransform> = family_candidates(&family)?
        .into_iter()
        .filter_map(|(_, c)| c.ok())
        .collect();
    if candidates.is_empty() {
        return Err("no constructible candidate for these parameters".into());
    }
    let reduced: Vec<NhtTransform> = candidates
        .iter()
        .filter_map(|t| t.reduce_by_gcd().ok())
        .collect();
    candidates.extend(reduced);

    let selected: Vec<NhtTransform> = match (args.modulus, matches!(family, Family::Row { .. })) {
        (Some(m), false) => {
            let t = candidates
                .into_iter()
                .find(|t| t.modulus().get() == m)
                .ok_or(format!("no candidate has modulus {m}"))?;
            vec![t]
        }
        _ => {
            if args.normalize.is_some() && candidates.len() > 1 {
                return Err("specify --modulus to pick the candidate to normalize".into());
            }
            if candidates.len() == 1 || matches!(family, Family::Row { .. }) {
                vec![candidates.swap_remove(0)]
            } else {
                candidates
            }
        }
    };

    let mut first = true;
    for transform in selected {
        let transform = match args.normalize.as_deref() {
            None | Some("none") => transform,
            Some(mode) => {
                let target = match mode {
                    "transpose" => NormalizeTarget::TransposeInverse,
                    "involution" => NormalizeTarget::Involution,
                    other => return Err(format!("unknown normalize mode `{other}`")),
                };
                match args.root {
                    Some(r) => transform
                        .normalize_with_root(target, r)
                        .map_err(|e| e.to_string())?,
                    None => transform.normalize(target).map_err(|e| e.to_string())?,
                }
            }
        };
        if !first {
            let _ = writeln!(out);
        }
        first = false;
        print_transform(&transform, out);
    }
    Ok(0)
}

fn print_transform(t: &NhtTransform, out: &mut dyn Write) {
    let row: Vec<String> = t
        .matrix()
        .first_row()
        .iter()
        .map(|v| v.to_string())
        .collect();
    let scale = t
        .scale()
        .map(|s| s.to_string())
        .unwrap_or_else(|| "-".to_string());
    let _ = writeln!(
        out,
        "nht n={} m={} kind={} route={}",
        t.n(),
        t.modulus(),
        t.kind(),
        t.route()
    );
    let _ = writeln!(out, "params: {}", t.params());
    let _ = writeln!(out, "first_row: {}", row.join(" "));
    let _ = writeln!(
        out,
        "diag_const={} scale={} invertible={}",
        t.diag_const(),
        scale,
        t.is_invertible()
    );
}

// ---------------------------------------------------------------------------
// apply / invert

fn cmd_stream(args: &StreamArgs, out: &mut dyn Write, forward: bool) -> Result<i32, String> {
    let spec_text =
        fs::read_to_string(&args.spec).map_err(|e| format!("cannot read {}: {e}", args.spec))?;
    let spec = parse_spec(&spec_text).map_err(|e| e.to_string())?;

    let raw = match &args.input {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?,
        None => {
            let mut buf = String::new();
            std::io::Read::read_to_string(&mut std::io::stdin(), &mut buf)
                .map_err(|e| e.to_string())?;
            buf
        }
    };
    let (values, header) = parse_stream_text(&raw)?;

    let mut output = String::new();
    if forward {
        let alphabet = match header {
            Some((_, m)) => Modulus::new(m).map_err(|e| e.to_string())?,
            None => spec.input_modulus(),
        };
        let data = DataStream::new(&values, alphabet);
        let (data, original_len) = if args.pad && data.len() % spec.block_len() != 0 {
            let (padded, original) = data.pad_to_blocks(spec.block_len());
            (padded, Some(original))
        } else {
            (data, None)
        };
        let result = spec.apply(&data).map_err(|e| e.to_string())?;
        if let Some(len) = original_len {
            output.push_str(&format!("#len={len} m={}\n", alphabet.get()));
        }
        render_blocks(&mut output, result.values(), spec.block_len());
    } else {
        let data = DataStream::new(&values, spec.output_modulus());
        let result = spec.invert(&data).map_err(|e| e.to_string())?;
        let restored = match header {
            Some((len, m)) => {
                let alphabet = Modulus::new(m).map_err(|e| e.to_string())?;
                let kept: Vec<i128> = result.values()[..len.min(result.len())]
                    .iter()
                    .map(|&v| v as i128)
                    .collect();
                DataStream::new(&kept, alphabet)
            }
            None => result,
        };
        render_blocks(&mut output, restored.values(), spec.block_len());
    }

    match &args.out {
        Some(path) => fs::write(path, output).map_err(|e| format!("cannot write {path}: {e}"))?,
        None => {
            let _ = write!(out, "{output}");
        }
    }
    Ok(0)
}

/// Parses the stream file format: decimal integers separated by spaces, one
/// block per line, `#` comments, optional `#len=L m=M` header.
fn parse_stream_text(text: &str) -> Result<(Vec<i128>, Option<(usize, u64)>), String> {
    let mut header = None;
    let mut values = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let rest = rest.trim();
            if rest.starts_with("len=") {
                let mut len = None;
                let mut m = None;
                for tok in rest.split_whitespace() {
                    if let Some(v) = tok.strip_prefix("len=") {
                        len = Some(v.parse::<usize>().map_err(|e| format!("bad header: {e}"))?);
                    } else if let Some(v) = tok.strip_prefix("m=") {
                        m = Some(v.parse::<u64>().map_err(|e| format!("bad header: {e}"))?);
                    } else {
                        return Err(format!("bad header token `{tok}`"));
                    }
                }
                match (len, m) {
                    (Some(l), Some(m)) => header = Some((l, m)),
                    _ => return Err("header needs both len= and m=".into()),
                }
            }
            continue;
        }
        for tok in line.split_whitespace() {
            values.push(
                tok.parse::<i128>()
                    .map_err(|e| format!("bad value `{tok}`: {e}"))?,
            );
        }
    }
    Ok((values, header))
}

fn render_blocks(output: &mut String, values: &[u64], block: usize) {
    for chunk in values.chunks(block.max(1)) {
        let line: Vec<String> = chunk.iter().map(|v| v.to_string()).collect();
        output.push_str(&line.join(" "));
        output.push('\n');
    }
}

// ---------------------------------------------------------------------------
// search / ntt / pipeline

fn cmd_search(bound: i64, require_invertible: bool, out: &mut dyn Write) -> Result<i32, String> {
    if bound < 1 {
        return Err("--bound must be at least 1".into());
    }
    for params in nht::search_eight_point(bound, require_invertible) {
        if let NhtParams::EightPoint { a, b, c, d } = params {
            let t = nht::eight_point(a, b, c, d).expect("search results construct");
            let _ = writeln!(
                out,
                "a={a} b={b} c={c} d={d} m={} diag={} invertible={}",
                t.modulus(),
                t.diag_const(),
                t.is_invertible()
            );
        }
    }
    Ok(0)
}

fn cmd_ntt(
    p: u64,
    n: usize,
    g: Option<u64>,
    inverse: bool,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let t = match g {
        Some(g) => NttTransform::with_generator(p, n, g),
        None => NttTransform::new(p, n),
    }
    .map_err(|e| e.to_string())?;
    let _ = writeln!(out, "p={} n={} g={}", t.p(), t.n(), t.generator());
    let _ = writeln!(out, "L:");
    for row in t.matrix() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    if inverse {
        let _ = writeln!(out, "Linv (unscaled):");
        for row in t.inverse_matrix_unscaled() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
        let _ = writeln!(out, "prefactor: {}", t.inverse_scale());
    }
    Ok(0)
}

fn cmd_pipeline(
    spec_path: &str,
    diffusion: Option<u32>,
    blocks: usize,
    seed: u64,
    out: &mut dyn Write,
) -> Result<i32, String> {
    let text =
        fs::read_to_string(spec_path).map_err(|e| format!("cannot read {spec_path}: {e}"))?;
    let spec: PipelineSpec = parse_spec(&text).map_err(|e| e.to_string())?;
    let _ = writeln!(out, "block_length={}", spec.block_len());
    for (i, stage) in spec.stages().iter().enumerate() {
        let _ = writeln!(out, "stage {}: {}", i + 1, stage.describe());
    }
    match spec.braid() {
        Some(b) => {
            let _ = writeln!(out, "braid: rounds={} offset={}", b.rounds, b.offset);
        }
        None => {
            let _ = writeln!(out, "braid: none");
        }
    }
    let _ = writeln!(out, "OK {} stages", spec.stages().len());
    if let Some(trials) = diffusion {
        let report = spec
            .diffusion_report(blocks, trials, seed)
            .map_err(|e| e.to_string())?;
        let _ = writeln!(
            out,
            "diffusion: blocks={blocks} trials={} seed={seed}",
            report.trials
        );
        for (i, frac) in report.by_round.iter().enumerate() {
            let _ = writeln!(out, "round {}: {frac:.4}", i + 1);
        }
        let _ = writeln!(
            out,
            "mean_changed_fraction: {:.4}",
            report.mean_changed_fraction
        );
    }
    Ok(0)
}

// ---------------------------------------------------------------------------
// reference tables

const TABLE1_INPUTS: [(&str, [i128; 6]); 14] = [
    ("1", [1, 1, 1, 1, 1, 1]),
    ("2", [1, 1, 1, 0, 0, 0]),
    ("3", [0, 1, 1, 1, 0, 0]),
    ("4", [0, 0, 1, 1, 1, 0]),
    ("5", [1, 1, 0, 0, 1, 1]),
    ("6", [0, 0, 1, 1, 0, 0]),
    ("7", [1, 2, 3, 4, 5, 6]),
    ("8", [3, 4, 5, 6, 1, 2]),
    ("9", [2, 3, 4, 5, 6, 7]),
    ("11", [1, 0, 0, 0, 0, 0]),
    ("12", [0, 6, 0, 4, 0, 2]),
    ("13", [1, 2, 3, 3, 2, 1]),
    ("14", [3, 2, 1, 1, 2, 3]),
    ("15", [4, 4, 4, 4, 4, 4]),
];

/// Input/output pairs of the 6-point transform with first row
/// `(0, 2, 0, 4, 0, 6)` mod 13, recomputed through the library.
pub fn table1_text() -> String {
    let t = nht::from_row(&[2, 4, 6], 13).expect("reference transform constructs");
    let m = t.modulus();
    let mut out = String::new();
    for (label, f) in TABLE1_INPUTS {
        let g = t
            .forward(&nht_core::ResidueVector::new(&f, m))
            .expect("matched dimensions");
        out.push_str(&format!(
            "{label}: {} -> {}\n",
            join_i128(&f),
            join_u64(g.values())
        ));
    }
    out
}

const TABLE2_ROW: [i128; 8] = [0, 3, 0, -3, 0, 9, 0, 5];

const TABLE2_INPUTS: [(&str, [i128; 8]); 8] = [
    ("1", [1, 1, 1, 1, 1, 1, 1, 1]),
    ("2", [1, 1, 1, 0, 0, 0, 0, 0]),
    ("3", [0, 1, 1, 1, 0, 0, 0, 0]),
    ("4", [0, 0, 1, 1, 1, 1, 0, 0]),
    ("5", [1, 1, 0, 0, 0, 0, 1, 1]),
    ("6", [0, 0, 1, 1, 0, 0, 1, 1]),
    ("7", [1, 2, 3, 4, 5, 6, 7, 8]),
    ("8", [1, 2, 3, 4, 4, 3, 2, 1]),
];

const TABLE2_ROW7_REFERENCE: [i128; 8] = [8, 10, 2, 9, 4, 11, 6, 1];

/// Input/output pairs of the 8-point transform `G = (1/2) N F mod 24` with
/// first row `(0, 3, 0, -3, 0, 9, 0, 5)`.
///
/// Division by 2 is two-valued mod 24, so a convention is required. The
/// canonical convention halves the exact integer product (rendering odd
/// products as `p/2` fractions) and reduces integer entries into `[0, 24)`;
/// the `paper_row7` convention reduces mod 24 before halving. Row 7 of the
/// reference table is arithmetically inconsistent at position 1 under either
/// convention, which the output notes.
pub fn table2_text(convention: Convention) -> String {
    let mut out = String::new();
    for (label, f) in TABLE2_INPUTS {
        let t = apply_circulant_exact(&TABLE2_ROW, &f);
        let rendered: Vec<String> = t.iter().map(|&x| render_half(x, convention)).collect();
        out.push_str(&format!(
            "{label}: {} -> {}\n",
            join_i128(&f),
            rendered.join(", ")
        ));
    }
    out.push_str(&format!(
        "# note: row 7 reference ({}) is inconsistent at position 1: the exact product is 62, \
         but 2*10 mod 24 = 20 != 62 mod 24 = 14 and 62/2 mod 24 = 7 != 10; computed values are shown\n",
        join_i128(&TABLE2_ROW7_REFERENCE)
    ));
    out
}

fn render_half(x: i128, convention: Convention) -> String {
    match convention {
        Convention::Canonical => {
            if x % 2 == 0 {
                ((x / 2).rem_euclid(24)).to_string()
            } else {
                format!("{x}/2")
            }
        }
        Convention::PaperRow7 => {
            let u = x.rem_euclid(24);
            if u % 2 == 0 {
                (u / 2).to_string()
            } else {
                format!("{u}/2")
            }
        }
    }
}

fn join_i128(values: &[i128]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

fn join_u64(values: &[u64]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
