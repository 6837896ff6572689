use std::time::{Duration, Instant};

use chorded_spectra_core::cycles::{
    find_s_chorded_cycle, find_s_chorded_k_cycle, has_chorded_cycle,
};
use chorded_spectra_core::enumerate::{
    EnumerationError, EnumerationLimits, EnumerationMode, Enumerator, GraphClass,
};
use chorded_spectra_core::lab::{
    check_k_chorded_extremal, judge_chorded_extremal, verify_bound, BoundClaim, LabError,
};
use chorded_spectra_core::spectral::{threshold, SpectralError, ThresholdKind};
use chorded_spectra_core::{canonical_form, graph6_encode, spectral_radius, Graph};
use serde_json::{json, Value};

use crate::output;
use crate::parallel::extremal_spectral_parallel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification ran and its claim did not hold.
    Fail,
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Fail => "fail",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommandResult {
    pub status: Status,
    pub payload: Value,
    pub elapsed: Duration,
    /// Process exit code; 0 ok/pass, 1 fail (or nothing found for `detect`).
    pub exit_code: u8,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Resource(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Resource(_) => 3,
        }
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        match e {
            LabError::InvalidParams(_) | LabError::Family(_) | LabError::Threshold(_) => {
                CliError::Usage(e.to_string())
            }
            LabError::Enumeration(_) | LabError::CharPoly(_) | LabError::Spectral(_) => {
                CliError::Resource(e.to_string())
            }
        }
    }
}

impl From<SpectralError> for CliError {
    fn from(e: SpectralError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<EnumerationError> for CliError {
    fn from(e: EnumerationError) -> Self {
        CliError::Resource(e.to_string())
    }
}

fn finish(start: Instant, status: Status, exit_code: u8, payload: Value) -> CommandResult {
    CommandResult {
        status,
        payload,
        elapsed: start.elapsed(),
        exit_code,
    }
}

/// Spectral radius, Perron vector and the thresholds for the graph's size.
pub fn cmd_rho(g: &Graph, k: Option<usize>) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    let r = spectral_radius(g)?;
    let m = g.size();
    let chorded = match m {
        0..=3 => Value::Null,
        _ => {
            let t = threshold(ThresholdKind::Chorded, m, None)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            json!({
                "value": output::real(t),
                "form": if m <= 8 { "theta" } else { "sqrt_m" },
                "exceeded": r.rho > t + 1e-9,
            })
        }
    };
    let k_chorded = match k {
        None => Value::Null,
        Some(k) => {
            let t = threshold(ThresholdKind::KChorded, m, Some(k))
                .map_err(|e| CliError::Usage(e.to_string()))?;
            json!({ "k": k, "value": output::real(t), "exceeded": r.rho > t + 1e-9 })
        }
    };
    let payload = json!({
        "graph6": graph6_encode(g),
        "n": g.order(),
        "m": m,
        "rho": output::real(r.rho),
        "perron": r.perron.as_ref().map(|x| x.iter().map(|&v| output::real(v)).collect::<Vec<_>>()),
        "residual": output::real(r.residual),
        "iterations": r.iterations,
        "thresholds": { "chorded": chorded, "k_chorded": k_chorded },
    });
    Ok(finish(start, Status::Ok, 0, payload))
}

/// Looks for a cycle with at least `s` chords, of length `len` if given.
pub fn cmd_detect(g: &Graph, s: usize, len: Option<usize>) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    if s == 0 {
        return Err(CliError::Usage("--s must be at least 1".into()));
    }
    let w = match len {
        Some(len) => find_s_chorded_k_cycle(g, s, len),
        None if s == 1 => has_chorded_cycle(g),
        None => find_s_chorded_cycle(g, s),
    };
    let payload = json!({
        "s": s,
        "k": len,
        "found": w.is_some(),
        "witness": w.as_ref().map(output::witness),
    });
    Ok(finish(
        start,
        Status::Ok,
        if w.is_some() { 0 } else { 1 },
        payload,
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    ThmChorded,
    EgPath,
    CycleBound,
    OreBound,
    PropDoubly,
    KChordedExtremal,
}

#[derive(Debug, Clone, Copy)]
pub struct VerifyParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub jobs: usize,
    pub seed: u64,
    pub samples: usize,
    pub limits: EnumerationLimits,
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("this claim needs --{flag}")))
}

pub fn cmd_verify(claim: Claim, p: &VerifyParams) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    let verdict = match claim {
        Claim::ThmChorded => {
            let m = need(p.m, "m")?;
            chorded_spectra_core::lab::expected_chorded_extremal(m)?;
            let report =
                extremal_spectral_parallel(m, GraphClass::ChordedCycleFree, p.limits, p.jobs)?;
            judge_chorded_extremal(&report)?
        }
        Claim::EgPath => verify_bound(
            BoundClaim::EgPath {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            p.limits,
        )?,
        Claim::CycleBound => verify_bound(
            BoundClaim::CycleBound {
                n: need(p.n, "n")?,
                k: need(p.k, "k")?,
            },
            p.limits,
        )?,
        Claim::OreBound => verify_bound(BoundClaim::OreBound { n: need(p.n, "n")? }, p.limits)?,
        Claim::PropDoubly => verify_bound(BoundClaim::PropDoubly { n: need(p.n, "n")? }, p.limits)?,
        Claim::KChordedExtremal => {
            check_k_chorded_extremal(need(p.k, "k")?, need(p.m, "m")?, p.samples, p.seed)?
        }
    };
    let (status, code) = if verdict.pass {
        (Status::Ok, 0)
    } else {
        (Status::Fail, 1)
    };
    Ok(finish(start, status, code, output::verdict(&verdict)))
}

/// Extremal spectral search over a class of isolate-free `m`-edge graphs.
pub fn cmd_extremal(
    m: usize,
    class: GraphClass,
    limits: EnumerationLimits,
    jobs: usize,
) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    let report = extremal_spectral_parallel(m, class, limits, jobs)?;
    Ok(finish(start, Status::Ok, 0, output::extremal(&report)))
}

/// Canonical graph6 strings of every graph generated.
pub fn cmd_enumerate(
    mode: EnumerationMode,
    class: GraphClass,
    limits: EnumerationLimits,
) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    let e = Enumerator::new(mode, class, limits)?;
    let mut graphs = Vec::new();
    e.for_each(|g| graphs.push(canonical_form(g).to_graph6()));
    let (by, value) = match mode {
        EnumerationMode::IsolateFreeSize(m) => ("m", m),
        EnumerationMode::Order(n) => ("n", n),
    };
    let payload = json!({
        by: value,
        "class": class.name(),
        "count": graphs.len(),
        "graphs": graphs,
    });
    Ok(finish(start, Status::Ok, 0, payload))
}

/// The graph itself: graph6, order, size and edges.
pub fn cmd_show(g: &Graph) -> Result<CommandResult, CliError> {
    let start = Instant::now();
    let payload = json!({
        "graph6": graph6_encode(g),
        "canonical": canonical_form(g).to_graph6(),
        "n": g.order(),
        "m": g.size(),
        "edges": g.edges().map(|(u, v)| json!([u, v])).collect::<Vec<_>>(),
    });
    Ok(finish(start, Status::Ok, 0, payload))
}
