//! Chained, optionally braided, blockwise scrambling built from invertible
//! NHT and NTT stages.
//!
//! A pipeline splits the data stream into blocks of a fixed length and pushes
//! each block through every stage in order. Stage moduli must be
//! non-decreasing along the chain so values of a smaller ring embed losslessly
//! into the next. The optional braid repeats the pass for several rounds,
//! re-cutting block boundaries at a cyclic offset each round so diffusion
//! crosses block boundaries while staying exactly invertible.
//!
//! # Spec text format
//!
//! One declaration per line, `#` starts a comment:
//!
//! ```text
//! block_length=6
//! stage nht family=six_ap a=2 modulus=13
//! stage ntt p=31 n=6
//! braid rounds=2 offset=3
//! ```
//!
//! NHT stage keys: `family` (four|six_ap|six_gen|eight|row), the family's
//! numeric parameters (`a b c d k l`, rationals allowed for `four`;
//! `entries=v,v,...` for `row`), `modulus` to pick a candidate (required for
//! the two-candidate families and for `row`; raw and gcd-reduced moduli are
//! both accepted), `normalize` (none|transpose|involution) and `root` for an
//! explicit normalization root. NTT stage keys: `p`, `n`, optional `g`.
//! Unknown keys are errors.

use std::fmt;

use thiserror::Error;

use crate::circulant::ResidueVector;
use crate::modarith::{Modulus, Rational};
use crate::nht::{
    self, NhtError, NhtTransform, NormalizeTarget,
};
use crate::ntt::{NttError, NttTransform};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PipelineError {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid stage {position}: {message}")]
    InvalidStage { position: usize, message: String },
    #[error("stage {position} modulus {next} is smaller than preceding modulus {prev}")]
    ModulusOrderViolation { position: usize, prev: u64, next: u64 },
    #[error("alphabet {alphabet} exceeds stage modulus {modulus}")]
    AlphabetOverflow { alphabet: u64, modulus: u64 },
    #[error("stream length {length} is not a multiple of block length {block}")]
    LengthNotMultiple { length: usize, block: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(&'static str),
    #[error(transparent)]
    Nht(#[from] NhtError),
    #[error(transparent)]
    Ntt(#[from] NttError),
}

/// One invertible stage of the chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Stage {
    Nht(NhtTransform),
    Ntt(NttTransform),
}

impl Stage {
    pub fn block_len(&self) -> usize {
        match self {
            Stage::Nht(t) => t.n(),
            Stage::Ntt(t) => t.n(),
        }
    }

    pub fn modulus(&self) -> Modulus {
        match self {
            Stage::Nht(t) => t.modulus(),
            Stage::Ntt(t) => t.p(),
        }
    }

    pub fn is_invertible(&self) -> bool {
        match self {
            Stage::Nht(t) => t.is_invertible(),
            Stage::Ntt(_) => true,
        }
    }

    fn apply(&self, v: &ResidueVector) -> Result<ResidueVector, PipelineError> {
        match self {
            Stage::Nht(t) => Ok(t.forward(v)?),
            Stage::Ntt(t) => Ok(t.forward(v)?),
        }
    }

    fn invert(&self, v: &ResidueVector) -> Result<ResidueVector, PipelineError> {
        match self {
            Stage::Nht(t) => Ok(t.inverse(v)?),
            Stage::Ntt(t) => Ok(t.inverse(v)?),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Stage::Nht(t) => format!(
                "nht {} m={} kind={} route={}",
                t.params(),
                t.modulus(),
                t.kind(),
                t.route()
            ),
            Stage::Ntt(t) => format!("ntt p={} n={} g={}", t.p(), t.n(), t.generator()),
        }
    }
}

/// Braid schedule: `rounds` passes, re-blocking round `r` at cyclic offset
/// `(r * offset) mod n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Braid {
    pub rounds: u32,
    pub offset: usize,
}

/// A data stream with a declared alphabet modulus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DataStream {
    alphabet: Modulus,
    values: Vec<u64>,
}

impl DataStream {
    pub fn new(values: &[i128], alphabet: Modulus) -> Self {
        DataStream {
            alphabet,
            values: values.iter().map(|&v| alphabet.reduce(v)).collect(),
        }
    }

    pub fn from_residues(values: Vec<u64>, alphabet: Modulus) -> Self {
        assert!(values.iter().all(|&v| v < alphabet.get()));
        DataStream { alphabet, values }
    }

    pub fn alphabet(&self) -> Modulus {
        self.alphabet
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Zero-pads to a multiple of `block`; returns the padded stream and the
    /// original length.
    pub fn pad_to_blocks(&self, block: usize) -> (DataStream, usize) {
        let original = self.values.len();
        let mut values = self.values.clone();
        while values.len() % block != 0 {
            values.push(0);
        }
        (
            DataStream {
                alphabet: self.alphabet,
                values,
            },
            original,
        )
    }

    /// Keeps the first `len` values (undoes padding).
    pub fn truncated(&self, len: usize) -> DataStream {
        DataStream {
            alphabet: self.alphabet,
            values: self.values[..len.min(self.values.len())].to_vec(),
        }
    }
}

/// Per-round diffusion measurements from [`PipelineSpec::diffusion_report`].
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionReport {
    pub trials: u32,
    pub positions: usize,
    /// Mean fraction of output positions changed by a single-position flip,
    /// after the full pipeline.
    pub mean_changed_fraction: f64,
    /// Same measurement after 1, 2, ... rounds.
    pub by_round: Vec<f64>,
}

impl fmt::Display for DiffusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "trials={} positions={} mean_changed_fraction={:.4}",
            self.trials, self.positions, self.mean_changed_fraction
        )
    }
}

/// An ordered list of invertible stages plus an optional braid schedule.
#[derive(Debug, Clone, PartialEq)]
pub struct PipelineSpec {
    block_len: usize,
    stages: Vec<Stage>,
    braid: Option<Braid>,
}

impl PipelineSpec {
    pub fn new(
        block_len: usize,
        stages: Vec<Stage>,
        braid: Option<Braid>,
    ) -> Result<Self, PipelineError> {
        if block_len == 0 {
            return Err(PipelineError::InvalidArgument("block length must be positive"));
        }
        let mut prev_modulus: Option<u64> = None;
        for (idx, stage) in stages.iter().enumerate() {
            let position = idx + 1;
            if stage.block_len() != block_len {
                return Err(PipelineError::InvalidStage {
                    position,
                    message: format!(
                        "stage block length {} does not match pipeline block length {}",
                        stage.block_len(),
                        block_len
                    ),
                });
            }
            if !stage.is_invertible() {
                return Err(PipelineError::InvalidStage {
                    position,
                    message: format!("stage is not invertible ({})", stage.describe()),
                });
            }
            let m = stage.modulus().get();
            if let Some(prev) = prev_modulus {
                if m < prev {
                    return Err(PipelineError::ModulusOrderViolation {
                        position,
                        prev,
                        next: m,
                    });
                }
            }
            prev_modulus = Some(m);
        }
        if let Some(b) = braid {
            if b.rounds < 1 {
                return Err(PipelineError::InvalidArgument("braid rounds must be at least 1"));
            }
            if b.offset < 1 || b.offset >= block_len {
                return Err(PipelineError::InvalidArgument(
                    "braid offset must lie in [1, block_length - 1]",
                ));
            }
        }
        Ok(PipelineSpec {
            block_len,
            stages,
            braid,
        })
    }

    /// A pipeline with no stages; applying it is the identity.
    pub fn identity(block_len: usize) -> Self {
        PipelineSpec {
            block_len: block_len.max(1),
            stages: Vec::new(),
            braid: None,
        }
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn braid(&self) -> Option<Braid> {
        self.braid
    }

    /// Alphabet expected on input: the first stage's modulus.
    pub fn input_modulus(&self) -> Modulus {
        self.stages
            .first()
            .map(|s| s.modulus())
            .unwrap_or_else(|| Modulus::new(2).expect("2 is a valid modulus"))
    }

    /// Alphabet produced on output: the last stage's modulus.
    pub fn output_modulus(&self) -> Modulus {
        self.stages
            .last()
            .map(|s| s.modulus())
            .unwrap_or_else(|| Modulus::new(2).expect("2 is a valid modulus"))
    }

    fn rounds(&self) -> u32 {
        self.braid.map(|b| b.rounds).unwrap_or(1)
    }

    fn offset(&self) -> usize {
        self.braid.map(|b| b.offset).unwrap_or(0)
    }

    /// Applies every braid round to the stream.
    pub fn apply(&self, data: &DataStream) -> Result<DataStream, PipelineError> {
        self.run(data, None)
    }

    /// Exact inverse of [`apply`](Self::apply): rounds unwound in reverse,
    /// stages inverted in reverse order within each block.
    pub fn invert(&self, data: &DataStream) -> Result<DataStream, PipelineError> {
        if data.len() % self.block_len != 0 {
            return Err(PipelineError::LengthNotMultiple {
                length: data.len(),
                block: self.block_len,
            });
        }
        if self.stages.is_empty() {
            return Ok(data.clone());
        }
        let out_m = self.output_modulus();
        if data.alphabet.get() > out_m.get() {
            return Err(PipelineError::AlphabetOverflow {
                alphabet: data.alphabet.get(),
                modulus: out_m.get(),
            });
        }
        let mut values = data.values.clone();
        for r in (0..self.rounds()).rev() {
            let start = (r as usize * self.offset()) % self.block_len;
            self.map_blocks(&mut values, start, |block| {
                let mut v = block;
                for stage in self.stages.iter().rev() {
                    let rv = ResidueVector::from_residues(v, stage.modulus());
                    v = stage.invert(&rv)?.into_values();
                }
                Ok(v)
            })?;
        }
        Ok(DataStream {
            alphabet: self.input_modulus(),
            values,
        })
    }

    /// Runs `limit` rounds (all when `None`).
    fn run(&self, data: &DataStream, limit: Option<u32>) -> Result<DataStream, PipelineError> {
        if data.len() % self.block_len != 0 {
            return Err(PipelineError::LengthNotMultiple {
                length: data.len(),
                block: self.block_len,
            });
        }
        if self.stages.is_empty() {
            return Ok(data.clone());
        }
        let first_m = self.input_modulus();
        let rounds = limit.unwrap_or(self.rounds()).min(self.rounds());
        let mut alphabet = data.alphabet;
        let mut values = data.values.clone();
        for r in 0..rounds {
            if alphabet.get() > first_m.get() {
                return Err(PipelineError::AlphabetOverflow {
                    alphabet: alphabet.get(),
                    modulus: first_m.get(),
                });
            }
            let start = (r as usize * self.offset()) % self.block_len;
            self.map_blocks(&mut values, start, |block| {
                let mut v = block;
                for stage in &self.stages {
                    let rv = ResidueVector::from_residues(v, stage.modulus());
                    v = stage.apply(&rv)?.into_values();
                }
                Ok(v)
            })?;
            alphabet = self.output_modulus();
        }
        Ok(DataStream { alphabet, values })
    }

    /// Rewrites each block (cut at `start` into the cyclically-viewed stream)
    /// through `f`.
    fn map_blocks<F>(&self, values: &mut [u64], start: usize, mut f: F) -> Result<(), PipelineError>
    where
        F: FnMut(Vec<u64>) -> Result<Vec<u64>, PipelineError>,
    {
        let n = self.block_len;
        let len = values.len();
        for b in 0..len / n {
            let idx: Vec<usize> = (0..n).map(|i| (start + b * n + i) % len).collect();
            let block: Vec<u64> = idx.iter().map(|&i| values[i]).collect();
            let out = f(block)?;
            for (&i, v) in idx.iter().zip(out) {
                values[i] = v;
            }
        }
        Ok(())
    }

    /// Flips one random position per trial and measures how much of the
    /// output changes, per round count. Deterministic for a given seed.
    pub fn diffusion_report(
        &self,
        blocks: usize,
        trials: u32,
        seed: u64,
    ) -> Result<DiffusionReport, PipelineError> {
        if blocks == 0 {
            return Err(PipelineError::InvalidArgument("need at least one block"));
        }
        if trials == 0 {
            return Err(PipelineError::InvalidArgument("need at least one trial"));
        }
        let len = blocks * self.block_len;
        let m = self.input_modulus().get();
        let rounds = if self.stages.is_empty() { 1 } else { self.rounds() };
        let mut rng = SplitMix64::new(seed);
        let mut sums = vec![0f64; rounds as usize];
        let alphabet = self.input_modulus();
        for _ in 0..trials {
            let base: Vec<u64> = (0..len).map(|_| rng.below(m)).collect();
            let pos = rng.below(len as u64) as usize;
            let delta = 1 + rng.below(m - 1);
            let mut flipped = base.clone();
            flipped[pos] = (flipped[pos] + delta) % m;
            let base_stream = DataStream::from_residues(base, alphabet);
            let flip_stream = DataStream::from_residues(flipped, alphabet);
            for r in 1..=rounds {
                let a = self.run(&base_stream, Some(r))?;
                let b = self.run(&flip_stream, Some(r))?;
                let changed = a
                    .values
                    .iter()
                    .zip(&b.values)
                    .filter(|(x, y)| x != y)
                    .count();
                sums[(r - 1) as usize] += changed as f64 / len as f64;
            }
        }
        let by_round: Vec<f64> = sums.iter().map(|s| s / trials as f64).collect();
        Ok(DiffusionReport {
            trials,
            positions: len,
            mean_changed_fraction: *by_round.last().expect("at least one round"),
            by_round,
        })
    }
}

/// Parses the line-oriented pipeline grammar described in the module docs.
pub fn parse_spec(text: &str) -> Result<PipelineSpec, PipelineError> {
    let mut block_len: Option<usize> = None;
    let mut stages: Vec<Stage> = Vec::new();
    let mut braid: Option<Braid> = None;
    let mut braid_seen = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parse_err = |message: String| PipelineError::Parse {
            line: line_no,
            message,
        };
        let mut tokens = line.split_whitespace();
        let head = tokens.next().expect("non-empty line");
        match head {
            "stage" => {
                let n = block_len
                    .ok_or_else(|| parse_err("block_length must be declared before stages".into()))?;
                let kind = tokens
                    .next()
                    .ok_or_else(|| parse_err("stage needs a type: nht or ntt".into()))?;
                let kv = KeyValues::parse(tokens, line_no)?;
                let stage = match kind {
                    "nht" => Stage::Nht(build_nht_stage(kv, line_no)?),
                    "ntt" => Stage::Ntt(build_ntt_stage(kv, line_no)?),
                    other => return Err(parse_err(format!("unknown stage type `{other}`"))),
                };
                if stage.block_len() != n {
                    return Err(PipelineError::InvalidStage {
                        position: stages.len() + 1,
                        message: format!(
                            "stage block length {} does not match block_length={n}",
                            stage.block_len()
                        ),
                    });
                }
                stages.push(stage);
            }
            "braid" => {
                if braid_seen {
                    return Err(parse_err("duplicate braid declaration".into()));
                }
                braid_seen = true;
                let n = block_len
                    .ok_or_else(|| parse_err("block_length must be declared before braid".into()))?;
                let mut kv = KeyValues::parse(tokens, line_no)?;
                let rounds: u32 = kv.require("rounds")?;
                let offset: usize = kv.optional("offset")?.unwrap_or(n / 2);
                kv.finish()?;
                if rounds < 1 {
                    return Err(parse_err("braid rounds must be at least 1".into()));
                }
                if offset < 1 || offset >= n {
                    return Err(parse_err(format!(
                        "braid offset must lie in [1, {}]",
                        n - 1
                    )));
                }
                braid = Some(Braid { rounds, offset });
            }
            _ if head.contains('=') => {
                // bare key=value declarations (only block_length today)
                let mut kv = KeyValues::parse(std::iter::once(head).chain(tokens), line_no)?;
                let n: usize = kv.require("block_length")?;
                kv.finish()?;
                if block_len.is_some() {
                    return Err(parse_err("duplicate block_length".into()));
                }
                if n == 0 {
                    return Err(parse_err("block_length must be positive".into()));
                }
                block_len = Some(n);
            }
            other => return Err(parse_err(format!("unknown directive `{other}`"))),
        }
    }

    let block_len = block_len.ok_or(PipelineError::Parse {
        line: 0,
        message: "missing block_length declaration".into(),
    })?;
    if stages.is_empty() {
        return Err(PipelineError::Parse {
            line: 0,
            message: "at least one stage is required".into(),
        });
    }
    PipelineSpec::new(block_len, stages, braid)
}

/// Ordered `key=value` pairs with duplicate and unknown-key detection.
struct KeyValues {
    line: usize,
    pairs: Vec<(String, String)>,
}

impl KeyValues {
    fn parse<'a, I: Iterator<Item = &'a str>>(tokens: I, line: usize) -> Result<Self, PipelineError> {
        let mut pairs = Vec::new();
        for tok in tokens {
            let (k, v) = tok.split_once('=').ok_or(PipelineError::Parse {
                line,
                message: format!("expected key=value, got `{tok}`"),
            })?;
            if pairs.iter().any(|(existing, _)| existing == k) {
                return Err(PipelineError::Parse {
                    line,
                    message: format!("duplicate key `{k}`"),
                });
            }
            pairs.push((k.to_string(), v.to_string()));
        }
        Ok(KeyValues { line, pairs })
    }

    fn take_raw(&mut self, key: &str) -> Option<String> {
        let pos = self.pairs.iter().position(|(k, _)| k == key)?;
        Some(self.pairs.remove(pos).1)
    }

    fn require<T: std::str::FromStr>(&mut self, key: &str) -> Result<T, PipelineError>
    where
        T::Err: fmt::Display,
    {
        let raw = self.take_raw(key).ok_or(PipelineError::Parse {
            line: self.line,
            message: format!("missing key `{key}`"),
        })?;
        raw.parse().map_err(|e| PipelineError::Parse {
            line: self.line,
            message: format!("bad value for `{key}`: {e}"),
        })
    }

    fn optional<T: std::str::FromStr>(&mut self, key: &str) -> Result<Option<T>, PipelineError>
    where
        T::Err: fmt::Display,
    {
        match self.take_raw(key) {
            None => Ok(None),
            Some(raw) => raw.parse().map(Some).map_err(|e| PipelineError::Parse {
                line: self.line,
                message: format!("bad value for `{key}`: {e}"),
            }),
        }
    }

    /// Errors on any leftover (unknown) key.
    fn finish(self) -> Result<(), PipelineError> {
        if let Some((k, _)) = self.pairs.first() {
            return Err(PipelineError::Parse {
                line: self.line,
                message: format!("unknown key `{k}`"),
            });
        }
        Ok(())
    }
}

/// Builds the NHT transform for a stage line: constructs the family's
/// candidates, selects by modulus, then applies the normalize/root keys.
fn build_nht_stage(mut kv: KeyValues, line: usize) -> Result<NhtTransform, PipelineError> {
    let family: String = kv.require("family")?;
    let modulus: Option<u64> = kv.optional("modulus")?;
    let normalize: Option<String> = kv.optional("normalize")?;
    let root: Option<u64> = kv.optional("root")?;

    let invalid = |message: String| PipelineError::InvalidStage { position: 0, message };

    // raw candidates first, then their gcd-reductions
    let mut candidates: Vec<NhtTransform> = Vec::new();
    match family.as_str() {
        "four" => {
            let a: Rational = kv.require("a")?;
            let b: Rational = kv.require("b")?;
            let (gram, square) = nht::four_point(a, b);
            candidates.extend(gram);
            candidates.extend(square);
            if candidates.is_empty() {
                return Err(invalid("no valid four-point candidate".into()));
            }
        }
        "six_ap" => {
            let a: i64 = kv.require("a")?;
            let (t1, t2) = nht::six_point_ap(a).map_err(|e| invalid(e.to_string()))?;
            candidates.push(t1);
            candidates.push(t2);
        }
        "six_gen" => {
            let a: i64 = kv.require("a")?;
            let k: i64 = kv.require("k")?;
            let l: i64 = kv.require("l")?;
            candidates.push(nht::six_point_general(a, k, l).map_err(|e| invalid(e.to_string()))?);
        }
        "eight" => {
            let a: i64 = kv.require("a")?;
            let b: i64 = kv.require("b")?;
            let c: i64 = kv.require("c")?;
            let d: i64 = kv.require("d")?;
            candidates.push(nht::eight_point(a, b, c, d).map_err(|e| invalid(e.to_string()))?);
        }
        "row" => {
            let entries_raw: String = kv.require("entries")?;
            let entries: Vec<i64> = entries_raw
                .split(',')
                .map(|s| s.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| PipelineError::Parse {
                    line,
                    message: format!("bad value for `entries`: {e}"),
                })?;
            let m = modulus.ok_or(PipelineError::Parse {
                line,
                message: "family=row requires modulus=".into(),
            })?;
            candidates.push(nht::from_row(&entries, m).map_err(|e| invalid(e.to_string()))?);
        }
        other => {
            return Err(PipelineError::Parse {
                line,
                message: format!("unknown family `{other}`"),
            })
        }
    }
    kv.finish()?;

    let raw_count = candidates.len();
    let reduced: Vec<NhtTransform> = candidates
        .iter()
        .filter_map(|t| t.reduce_by_gcd().ok())
        .collect();
    candidates.extend(reduced);

    let mut transform = match modulus {
        Some(m) if family != "row" => candidates
            .into_iter()
            .find(|t| t.modulus().get() == m)
            .ok_or_else(|| invalid(format!("no candidate has modulus {m}")))?,
        _ if raw_count > 1 => {
            let moduli: Vec<String> = candidates
                .iter()
                .map(|t| t.modulus().get().to_string())
                .collect();
            return Err(PipelineError::Parse {
                line,
                message: format!(
                    "family={family} has candidates with moduli {}; pick one with modulus=",
                    moduli.join(", ")
                ),
            });
        }
        _ => candidates.into_iter().next().expect("one candidate"),
    };

    match normalize.as_deref() {
        None | Some("none") => {
            if root.is_some() {
                return Err(PipelineError::Parse {
                    line,
                    message: "root= requires normalize=transpose or normalize=involution".into(),
                });
            }
        }
        Some(target) => {
            let target = match target {
                "transpose" => NormalizeTarget::TransposeInverse,
                "involution" => NormalizeTarget::Involution,
                other => {
                    return Err(PipelineError::Parse {
                        line,
                        message: format!("unknown normalize mode `{other}`"),
                    })
                }
            };
            transform = match root {
                Some(r) => transform
                    .normalize_with_root(target, r)
                    .map_err(|e| invalid(e.to_string()))?,
                None => transform.normalize(target).map_err(|e| invalid(e.to_string()))?,
            };
        }
    }
    Ok(transform)
}

fn build_ntt_stage(mut kv: KeyValues, _line: usize) -> Result<NttTransform, PipelineError> {
    let p: u64 = kv.require("p")?;
    let n: usize = kv.require("n")?;
    let g: Option<u64> = kv.optional("g")?;
    kv.finish()?;
    let t = match g {
        Some(g) => NttTransform::with_generator(p, n, g),
        None => NttTransform::new(p, n),
    };
    t.map_err(|e| PipelineError::InvalidStage {
        position: 0,
        message: e.to_string(),
    })
}

/// SplitMix64; enough randomness for diffusion trials, fully deterministic.
struct SplitMix64(u64);

impl SplitMix64 {
    fn new(seed: u64) -> Self {
        SplitMix64(seed)
    }

    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound.max(1)
    }
}
