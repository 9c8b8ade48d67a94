//! Replaying mutation sequences under the green rule.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::VertexLabel;
use crate::orbifold::{build_diagram, OrbifoldParams, Rejection};
use crate::seed::{FramedSeed, VertexColor};
use crate::sequence::delta;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Mode {
    /// Stop at the first mutation of a non-green vertex.
    Strict,
    /// Record non-green mutations and keep going.
    Permissive,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepRecord {
    /// 1-based position in the sequence.
    pub index: usize,
    pub vertex: VertexLabel,
    pub color_before: VertexColor,
    pub c_row_before: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    Valid,
    /// 1-based step whose vertex was red.
    NotGreenAt(usize),
    NotAllRedAtEnd,
    EngineFault {
        step: usize,
        reason: String,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct VerificationReport {
    pub labels: Vec<VertexLabel>,
    pub symmetrizer: Vec<i64>,
    pub initial_c: Vec<Vec<i64>>,
    pub steps: Vec<StepRecord>,
    pub outcome: Outcome,
    /// Steps that mutated a red vertex (only more than one in permissive mode).
    pub violations: Vec<usize>,
    pub final_c: Vec<Vec<i64>>,
    /// Final C is −1 times a permutation matrix.
    pub final_negative_permutation: bool,
    /// C block after each executed step, when requested.
    #[serde(skip)]
    pub states: Option<Vec<Vec<i64>>>,
    #[serde(skip)]
    pub duration: Duration,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.outcome == Outcome::Valid
    }

    pub fn summary(&self) -> String {
        let outcome = match &self.outcome {
            Outcome::Valid => "Valid".to_string(),
            Outcome::NotGreenAt(i) => format!("NotGreenAt({i})"),
            Outcome::NotAllRedAtEnd => "NotAllRedAtEnd".to_string(),
            Outcome::EngineFault { step, reason } => format!("EngineFault(step {step}: {reason})"),
        };
        let perm =
            if self.final_negative_permutation { "final C = −permutation" } else { "final C is not −permutation" };
        format!("{outcome}, {} violations, {} steps, {perm}", self.violations.len(), self.steps.len())
    }
}

fn rows(seed: &FramedSeed) -> Vec<Vec<i64>> {
    (0..seed.rank()).map(|i| seed.c_row(i).to_vec()).collect()
}

#[derive(Debug, Clone, Copy)]
pub struct ApplyOptions {
    pub mode: Mode,
    pub keep_states: bool,
}

impl Default for ApplyOptions {
    fn default() -> Self {
        ApplyOptions { mode: Mode::Strict, keep_states: false }
    }
}

/// Replay `seq` on `seed`. Labels must resolve; MixedSign/ZeroRow become
/// an `EngineFault` outcome rather than an error.
pub fn apply_sequence(seed: &FramedSeed, seq: &[VertexLabel], mode: Mode) -> Result<(FramedSeed, VerificationReport)> {
    apply_with(seed, seq, ApplyOptions { mode, keep_states: false })
}

pub fn apply_with(
    seed: &FramedSeed,
    seq: &[VertexLabel],
    opts: ApplyOptions,
) -> Result<(FramedSeed, VerificationReport)> {
    let t0 = Instant::now();
    let idx: Vec<usize> = seq.iter().map(|v| seed.index_of(v)).collect::<Result<_>>()?;
    let mut cur = seed.clone();
    let mut steps = Vec::with_capacity(seq.len());
    let mut violations = Vec::new();
    let mut states = opts.keep_states.then(Vec::new);
    let mut outcome = None;
    for (pos, (&k, v)) in idx.iter().zip(seq).enumerate() {
        let at = pos + 1;
        let color = match cur.color_index(k) {
            Ok(c) => c,
            Err(e) => {
                outcome = Some(Outcome::EngineFault { step: at, reason: e.to_string() });
                break;
            }
        };
        steps.push(StepRecord {
            index: at,
            vertex: v.clone(),
            color_before: color,
            c_row_before: cur.c_row(k).to_vec(),
        });
        if color == VertexColor::Red {
            violations.push(at);
            if opts.mode == Mode::Strict {
                outcome = Some(Outcome::NotGreenAt(at));
                break;
            }
        }
        if let Err(e) = cur.mutate_index(k) {
            outcome = Some(Outcome::EngineFault { step: at, reason: e.to_string() });
            break;
        }
        // every visited state must stay sign-coherent
        if let Some(bad) = (0..cur.rank()).find_map(|i| cur.color_index(i).err()) {
            outcome = Some(Outcome::EngineFault { step: at, reason: bad.to_string() });
            break;
        }
        if let Some(st) = states.as_mut() {
            st.push(cur.cblock().to_vec());
        }
    }
    let outcome = match outcome {
        Some(o) => o,
        None if !violations.is_empty() => Outcome::NotGreenAt(violations[0]),
        None => match cur.is_final() {
            Ok(true) => Outcome::Valid,
            Ok(false) => Outcome::NotAllRedAtEnd,
            Err(e) => Outcome::EngineFault { step: seq.len(), reason: e.to_string() },
        },
    };
    let report = VerificationReport {
        labels: seed.base().labels().to_vec(),
        symmetrizer: seed.base().symmetrizer().to_vec(),
        initial_c: rows(seed),
        steps,
        outcome,
        violations,
        final_c: rows(&cur),
        final_negative_permutation: cur.is_negative_permutation(),
        states,
        duration: t0.elapsed(),
    };
    Ok((cur, report))
}

/// Build, frame and replay Δ for (n,p,q) in strict mode.
pub fn verify_mgs(pr: OrbifoldParams) -> std::result::Result<VerificationReport, Rejection> {
    let m = build_diagram(pr)?;
    let seq = delta(pr)?;
    let (_, rep) =
        apply_sequence(&FramedSeed::frame(m), &seq.steps, Mode::Strict).expect("Δ labels exist in the diagram");
    Ok(rep)
}

/// Expected state of one vertex: its color and superscript, i.e. the frozen
/// companions it is joined to with their edge weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexExpectation {
    pub vertex: VertexLabel,
    pub color: Option<VertexColor>,
    /// `None` leaves the superscript unchecked.
    pub superscript: Option<Vec<(VertexLabel, i64)>>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateAssertion {
    pub entries: Vec<VertexExpectation>,
}

impl StateAssertion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Expect `v` with `color` and superscript `sup` (pairs of companion and weight).
    pub fn expect(mut self, v: VertexLabel, color: VertexColor, sup: &[(VertexLabel, i64)]) -> Self {
        self.entries.push(VertexExpectation { vertex: v, color: Some(color), superscript: Some(sup.to_vec()) });
        self
    }

    pub fn expect_color(mut self, v: VertexLabel, color: VertexColor) -> Self {
        self.entries.push(VertexExpectation { vertex: v, color: Some(color), superscript: None });
        self
    }
}

/// Frozen companions of vertex `i` with weights: own companion first, then
/// canonical label order.
pub fn superscript(seed: &FramedSeed, i: usize) -> Result<Vec<(VertexLabel, i64)>> {
    let n = seed.rank();
    let order = std::iter::once(i).chain((0..n).filter(|&j| j != i));
    let mut out = Vec::new();
    for j in order {
        if seed.c_row(i)[j] != 0 {
            let w = seed.frozen_weight(i, j).ok_or_else(|| Error::NonIntegerWeight(seed.base().label(i).clone()))?;
            out.push((seed.base().label(j).clone(), w));
        }
    }
    Ok(out)
}

pub fn format_superscript(sup: &[(VertexLabel, i64)]) -> String {
    let parts: Vec<String> = sup.iter().map(|(v, w)| if *w == 1 { v.to_string() } else { format!("{w}{v}") }).collect();
    format!("{{{}}}", parts.join(","))
}

/// Compare `seed` against `a`. `Ok(Err(lines))` lists mismatches.
pub fn assert_state(seed: &FramedSeed, a: &StateAssertion) -> Result<std::result::Result<(), Vec<String>>> {
    let mut bad = Vec::new();
    for ex in &a.entries {
        let i = seed.index_of(&ex.vertex)?;
        match seed.color_index(i) {
            Ok(col) => {
                if let Some(want) = ex.color {
                    if want != col {
                        bad.push(format!("{}: color {col}, expected {want}", ex.vertex));
                    }
                }
            }
            Err(e) => bad.push(format!("{}: {e}", ex.vertex)),
        }
        if let Some(want) = &ex.superscript {
            let mut got = superscript(seed, i)?;
            let mut want = want.clone();
            got.sort();
            want.sort();
            if got != want {
                bad.push(format!(
                    "{}: superscript {}, expected {}",
                    ex.vertex,
                    format_superscript(&superscript(seed, i)?),
                    format_superscript(&want)
                ));
            }
        }
    }
    Ok(if bad.is_empty() { Ok(()) } else { Err(bad) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceStyle {
    Superscript,
    Matrix,
}

fn state_line(seed: &FramedSeed, style: TraceStyle) -> String {
    let mut parts = Vec::new();
    for i in 0..seed.rank() {
        let v = seed.base().label(i);
        match style {
            TraceStyle::Superscript => {
                let col = match seed.color_index(i) {
                    Ok(c) => c.to_string(),
                    Err(_) => "mixed".to_string(),
                };
                let sup = superscript(seed, i).map(|s| format_superscript(&s)).unwrap_or_else(|e| e.to_string());
                parts.push(format!("{v}: {col} {sup}"));
            }
            TraceStyle::Matrix => {
                let row: Vec<String> = seed.c_row(i).iter().map(|x| x.to_string()).collect();
                parts.push(format!("{v}: [{}]", row.join(",")));
            }
        }
    }
    parts.join(" | ")
}

/// One line per executed step showing every vertex after the mutation.
/// Needs a report produced with `keep_states`.
pub fn render_trace(report: &VerificationReport, style: TraceStyle) -> String {
    let mut out = String::new();
    let name = match style {
        TraceStyle::Superscript => "superscript",
        TraceStyle::Matrix => "matrix",
    };
    let _ = writeln!(out, "# {name} trace: rank {}, {} steps", report.labels.len(), report.steps.len());
    let n = report.labels.len();
    let base =
        crate::matrix::ExchangeMatrix::from_parts(report.labels.clone(), vec![0; n * n], report.symmetrizer.clone())
            .expect("labels and symmetrizer come from a valid seed");
    let flat = |rows: &[Vec<i64>]| rows.iter().flatten().copied().collect::<Vec<i64>>();
    if style == TraceStyle::Matrix {
        let s0 = FramedSeed::with_cblock(base.clone(), flat(&report.initial_c)).expect("square");
        let _ = writeln!(out, "0 start | {}", state_line(&s0, style));
    }
    let Some(states) = &report.states else {
        for st in &report.steps {
            let _ = writeln!(out, "{} μ_{}", st.index, st.vertex);
        }
        return out;
    };
    for (st, c) in report.steps.iter().zip(states) {
        let seed = FramedSeed::with_cblock(base.clone(), c.clone()).expect("square");
        let _ = writeln!(out, "{} μ_{} | {}", st.index, st.vertex, state_line(&seed, style));
    }
    out
}
