//! Deciders for whether FG is centrally essential, that is, whether every
//! nonzero r ∈ FG has a central c with 0 ≠ rc central.

mod local;
mod oracle;
mod structure;

use std::fmt;
use std::sync::Arc;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError, GroupAlgebra};
use crate::field::FieldSpec;
use crate::group::{FiniteGroup, GroupError};

pub use local::{
    local_prime, radical_center_basis, socle, witness_ce, witness_not_ce, CentralMultiplier,
    NonEssentialWitness, SocleOutcome,
};
pub use oracle::{center_intersection, enumeration_size, oracle, IntersectionDims, OracleOutcome};
pub use structure::{
    central_idempotent_check, check_q_subgroups, decompose_p, IdempotentCheck, PDecomposition,
};

/// Default cap on `q^|G|` for the exhaustive oracle.
pub const DEFAULT_ORACLE_BUDGET: u64 = 1 << 20;

#[derive(Debug, Error)]
pub enum DecisionError {
    #[error("the oracle would enumerate {q}^{n} elements, above the budget of {budget}")]
    BudgetExceeded { q: u32, n: usize, budget: u64 },
    #[error("{group} (order {order}) is not a {p}-group")]
    NotPGroup { group: String, order: usize, p: u32 },
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("{method} disagrees: {got} against {expected}")]
    Disagreement {
        method: Method,
        expected: Verdict,
        got: Verdict,
    },
    #[error("structural criteria do not settle {0}")]
    Inconclusive(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    CentrallyEssential,
    NotCentrallyEssential,
}

impl Verdict {
    pub fn from_essential(essential: bool) -> Self {
        if essential {
            Verdict::CentrallyEssential
        } else {
            Verdict::NotCentrallyEssential
        }
    }

    pub fn is_essential(self) -> bool {
        self == Verdict::CentrallyEssential
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::CentrallyEssential => "centrally_essential",
            Verdict::NotCentrallyEssential => "not_centrally_essential",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The procedure that produced a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Oracle,
    Socle,
    Structural,
    Char0,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Oracle => "oracle",
            Method::Socle => "socle",
            Method::Structural => "structural",
            Method::Char0 => "char0",
        })
    }
}

/// What the caller asks for; `Auto` runs the reduction pipeline.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Oracle,
    Socle,
    Structural,
}

/// Machine-readable justification of a verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Reason {
    /// The Sylow p-subgroup has nilpotency class at most 2.
    #[serde(rename = "nc_le_2")]
    NcLe2,
    /// G is not P × H with P a normal Sylow p-subgroup and H abelian.
    SylowDecompositionFailed,
    SocleInsideCenter,
    SocleOutsideCenter,
    /// An element x = g·Σ_Z with xC ∩ C = 0 was found and verified.
    WitnessFound,
    NoViolatingElement,
    ViolatingElementFound,
    Abelian,
    Nonabelian,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::NcLe2 => "nc_le_2",
            Reason::SylowDecompositionFailed => "sylow_decomposition_failed",
            Reason::SocleInsideCenter => "socle_inside_center",
            Reason::SocleOutsideCenter => "socle_outside_center",
            Reason::WitnessFound => "witness_found",
            Reason::NoViolatingElement => "no_violating_element",
            Reason::ViolatingElementFound => "violating_element_found",
            Reason::Abelian => "abelian",
            Reason::Nonabelian => "nonabelian",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            Reason::NcLe2 => "Sylow p-subgroup has nilpotency class at most 2",
            Reason::SylowDecompositionFailed => {
                "G is not a direct product of a Sylow p-subgroup and an abelian p'-group"
            }
            Reason::SocleInsideCenter => "socle of FG over the centre lies in the centre",
            Reason::SocleOutsideCenter => "socle contains a non-central element",
            Reason::WitnessFound => "g·Σ_Z meets the centre only in 0",
            Reason::NoViolatingElement => "every nonzero element meets the centre",
            Reason::ViolatingElementFound => "exhaustive search found r with rC ∩ C = 0",
            Reason::Abelian => {
                "in characteristic 0 only commutative group algebras qualify; G is abelian"
            }
            Reason::Nonabelian => {
                "in characteristic 0 only commutative group algebras qualify; G is not abelian"
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub name: String,
    pub order: usize,
}

/// `p = 0` stands for characteristic zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSummary {
    pub p: u32,
    pub k: u32,
}

impl fmt::Display for FieldSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.p, self.k) {
            (0, _) => write!(f, "characteristic 0"),
            (p, 1) => write!(f, "GF({p})"),
            (p, k) => write!(f, "GF({p}^{k})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub name: String,
    pub detail: String,
}

/// An algebra element as `(label, coefficient)` pairs in element-index order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub role: String,
    pub terms: Vec<(String, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub method: Method,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PhaseTiming {
    pub phase: String,
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecisionReport {
    pub group: GroupSummary,
    pub field: FieldSummary,
    pub method: Method,
    pub verdict: Verdict,
    pub reason: Reason,
    pub stages: Vec<Stage>,
    pub witnesses: Vec<Witness>,
    pub cross_checks: Vec<CrossCheck>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub timing: Vec<PhaseTiming>,
}

impl DecisionReport {
    pub fn witness(&self, role: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.role == role)
    }

    pub fn without_timing(mut self) -> Self {
        self.timing.clear();
        self
    }
}

impl fmt::Display for DecisionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "group:   {} (order {})",
            self.group.name, self.group.order
        )?;
        writeln!(f, "field:   {}", self.field)?;
        writeln!(f, "method:  {}", self.method)?;
        writeln!(f, "verdict: {}", self.verdict)?;
        writeln!(
            f,
            "reason:  {} ({})",
            self.reason.as_str(),
            self.reason.description()
        )?;
        if !self.stages.is_empty() {
            writeln!(f, "stages:")?;
            for s in &self.stages {
                writeln!(f, "  {}: {}", s.name, s.detail)?;
            }
        }
        if !self.witnesses.is_empty() {
            writeln!(f, "witnesses:")?;
            for w in &self.witnesses {
                let terms: Vec<String> = w
                    .terms
                    .iter()
                    .map(|(l, c)| {
                        if *c == 1 {
                            l.clone()
                        } else {
                            format!("{c}·{l}")
                        }
                    })
                    .collect();
                writeln!(f, "  {}: {}", w.role, terms.join(" + "))?;
            }
        }
        if !self.cross_checks.is_empty() {
            writeln!(f, "cross-checks:")?;
            for c in &self.cross_checks {
                writeln!(f, "  {}: {}", c.method, c.verdict)?;
            }
        }
        if !self.timing.is_empty() {
            writeln!(f, "timing:")?;
            for t in &self.timing {
                writeln!(f, "  {}: {:.3}s", t.phase, t.seconds)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Run every other applicable method as well and fail on disagreement.
    pub crossvalidate: bool,
    pub budget: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            crossvalidate: false,
            budget: DEFAULT_ORACLE_BUDGET,
        }
    }
}

struct Builder {
    stages: Vec<Stage>,
    witnesses: Vec<Witness>,
    cross_checks: Vec<CrossCheck>,
    timing: Vec<PhaseTiming>,
}

impl Builder {
    fn new() -> Self {
        Builder {
            stages: Vec::new(),
            witnesses: Vec::new(),
            cross_checks: Vec::new(),
            timing: Vec::new(),
        }
    }

    fn timed<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        self.timing.push(PhaseTiming {
            phase: phase.to_string(),
            seconds: start.elapsed().as_secs_f64(),
        });
        out
    }

    fn stage(&mut self, name: &str, detail: impl Into<String>) {
        self.stages.push(Stage {
            name: name.to_string(),
            detail: detail.into(),
        });
    }

    fn witness(&mut self, role: &str, x: &AlgebraElement) {
        self.witnesses.push(Witness {
            role: role.to_string(),
            terms: x.to_sparse(),
        });
    }
}

struct Outcome {
    method: Method,
    verdict: Verdict,
    reason: Reason,
}

/// The Sylow p-subgroup's algebra and its embedding into G.
fn sylow_algebra(
    alg: &GroupAlgebra,
    part: &crate::group::ElementSet,
) -> Result<(GroupAlgebra, Vec<usize>), DecisionError> {
    let g = alg.group();
    if part.len() == g.order() {
        return Ok((alg.clone(), g.elements().collect()));
    }
    let p = alg.field().characteristic();
    let (sub, embed) = g.subgroup(part, format!("Sylow {p}-subgroup of {}", g.name()))?;
    Ok((GroupAlgebra::new(sub, alg.field().clone()), embed))
}

/// Image of an element of FP in FG, revalidated there: xC ∩ C = 0.
fn lift_witness(
    alg: &GroupAlgebra,
    x: &AlgebraElement,
    embed: &[usize],
) -> Result<AlgebraElement, DecisionError> {
    let mut coeffs = vec![crate::field::FieldElement::ZERO; alg.dim()];
    for (i, c) in x.terms() {
        coeffs[embed[i]] = c;
    }
    let lifted = alg.from_coeffs(coeffs)?;
    if !std::ptr::eq(x.algebra().group(), alg.group()) {
        let dims = center_intersection(&lifted, &alg.center_basis());
        if dims.intersection() != 0 {
            return Err(DecisionError::Verification(format!(
                "lifted witness meets the centre of FG: {dims:?}"
            )));
        }
    }
    Ok(lifted)
}

fn describe_decomposition(d: &PDecomposition) -> String {
    format!(
        "|P| = {}, |H| = {}, P subgroup: {}, H subgroup: {}, commute: {}, H abelian: {}",
        d.p_part.len(),
        d.p_prime_part.len(),
        d.p_part_is_subgroup,
        d.p_prime_part_is_subgroup,
        d.parts_commute,
        d.h_abelian
    )
}

fn run_oracle(b: &mut Builder, alg: &GroupAlgebra, budget: u64) -> Result<Outcome, DecisionError> {
    let out = b.timed("oracle", || oracle(alg, budget))?;
    b.stage(
        "oracle",
        format!("{} projective candidates", out.candidates),
    );
    if let Some((r, dims)) = &out.counterexample {
        b.stage(
            "oracle_certificate",
            format!(
                "dim rC = {}, dim C = {}, dim(rC + C) = {}",
                dims.product, dims.center, dims.sum
            ),
        );
        b.witness("oracle_counterexample", r);
    }
    Ok(Outcome {
        method: Method::Oracle,
        verdict: out.verdict,
        reason: if out.verdict.is_essential() {
            Reason::NoViolatingElement
        } else {
            Reason::ViolatingElementFound
        },
    })
}

/// Socle decider on FP, witnesses lifted into FG.
fn run_socle(
    b: &mut Builder,
    alg: &GroupAlgebra,
    palg: &GroupAlgebra,
    embed: &[usize],
) -> Result<Outcome, DecisionError> {
    let out = b.timed("socle", || socle(palg))?;
    b.stage(
        "socle",
        format!(
            "radical of the centre has dimension {}, socle has dimension {}",
            out.radical_dim, out.socle_dim
        ),
    );
    if let Some((s, _)) = &out.excess {
        let lifted = lift_witness(alg, s, embed)?;
        b.witness("socle_excess", &lifted);
    }
    if !out.verdict.is_essential() && palg.group().star_condition().holds() {
        let w = b.timed("witness", || witness_not_ce(palg))?;
        b.stage(
            "witness",
            format!(
                "g = {}, dim xC = {}, dim(xC ∩ C) = 0",
                palg.group().label(w.g),
                w.dims.product
            ),
        );
        let lifted = lift_witness(alg, &w.x, embed)?;
        b.witness("element_times_center_sum", &lifted);
    }
    Ok(Outcome {
        method: Method::Socle,
        verdict: out.verdict,
        reason: if out.verdict.is_essential() {
            Reason::SocleInsideCenter
        } else {
            Reason::SocleOutsideCenter
        },
    })
}

/// Decomposition and the Sylow subgroup's algebra, or the negative
/// outcome when the reduction does not apply.
fn reduce(
    b: &mut Builder,
    alg: &GroupAlgebra,
) -> Result<Result<(GroupAlgebra, Vec<usize>, usize), Outcome>, DecisionError> {
    let p = alg.field().characteristic();
    let dec = b.timed("decompose", || decompose_p(alg.group(), p));
    b.stage("decompose", describe_decomposition(&dec));
    if !dec.reduces() {
        return Ok(Err(Outcome {
            method: Method::Structural,
            verdict: Verdict::NotCentrallyEssential,
            reason: Reason::SylowDecompositionFailed,
        }));
    }
    let (palg, embed) = sylow_algebra(alg, &dec.p_part)?;
    let nc = palg
        .group()
        .nilpotency_class()
        .expect("p-groups are nilpotent");
    b.stage("nilpotency_class", format!("P has nilpotency class {nc}"));
    Ok(Ok((palg, embed, nc)))
}

fn run_auto(b: &mut Builder, alg: &GroupAlgebra, opts: &Options) -> Result<Outcome, DecisionError> {
    let (palg, embed, nc) = match reduce(b, alg)? {
        Ok(parts) => parts,
        Err(outcome) => return Ok(outcome),
    };
    if nc <= 2 {
        if opts.crossvalidate {
            let mut side = Builder::new();
            let s = run_socle(&mut side, alg, &palg, &embed)?;
            b.timing.extend(side.timing);
            b.cross_checks.push(CrossCheck {
                method: Method::Socle,
                verdict: s.verdict,
            });
        }
        return Ok(Outcome {
            method: Method::Structural,
            verdict: Verdict::CentrallyEssential,
            reason: Reason::NcLe2,
        });
    }
    run_socle(b, alg, &palg, &embed)
}

fn run_structural(b: &mut Builder, alg: &GroupAlgebra) -> Result<Outcome, DecisionError> {
    let (palg, embed, nc) = match reduce(b, alg)? {
        Ok(parts) => parts,
        Err(outcome) => return Ok(outcome),
    };
    let structural = |verdict, reason| Outcome {
        method: Method::Structural,
        verdict,
        reason,
    };
    if nc <= 2 {
        return Ok(structural(Verdict::CentrallyEssential, Reason::NcLe2));
    }
    if !palg.group().star_condition().holds() {
        return Err(DecisionError::Inconclusive(format!(
            "{}: class {nc} and some non-central class contains no central coset",
            alg.group().name()
        )));
    }
    let w = b.timed("witness", || witness_not_ce(&palg))?;
    b.stage(
        "witness",
        format!(
            "g = {}, dim xC = {}, dim(xC ∩ C) = 0",
            palg.group().label(w.g),
            w.dims.product
        ),
    );
    let lifted = lift_witness(alg, &w.x, &embed)?;
    b.witness("element_times_center_sum", &lifted);
    Ok(structural(
        Verdict::NotCentrallyEssential,
        Reason::WitnessFound,
    ))
}

/// Runs the requested decider over a finite field.
pub fn check(
    group: impl Into<Arc<FiniteGroup>>,
    field: &FieldSpec,
    strategy: Strategy,
    opts: &Options,
) -> Result<DecisionReport, DecisionError> {
    let alg = GroupAlgebra::new(group, field.clone());
    let mut b = Builder::new();
    let primary = match strategy {
        Strategy::Auto => run_auto(&mut b, &alg, opts)?,
        Strategy::Oracle => run_oracle(&mut b, &alg, opts.budget)?,
        Strategy::Socle => {
            local_prime(&alg)?;
            let embed: Vec<usize> = alg.group().elements().collect();
            run_socle(&mut b, &alg, &alg, &embed)?
        }
        Strategy::Structural => run_structural(&mut b, &alg)?,
    };

    if opts.crossvalidate {
        let mut side = Builder::new();
        if primary.method != Method::Oracle {
            if enumeration_size(&alg, opts.budget).is_ok() {
                let o = run_oracle(&mut side, &alg, opts.budget)?;
                b.cross_checks.push(CrossCheck {
                    method: Method::Oracle,
                    verdict: o.verdict,
                });
            } else {
                b.stage("oracle", "skipped: enumeration exceeds the budget");
            }
        }
        let is_local = local_prime(&alg).is_ok();
        if is_local
            && strategy != Strategy::Socle
            && primary.method != Method::Socle
            && strategy != Strategy::Auto
        {
            let embed: Vec<usize> = alg.group().elements().collect();
            let s = run_socle(&mut side, &alg, &alg, &embed)?;
            b.cross_checks.push(CrossCheck {
                method: Method::Socle,
                verdict: s.verdict,
            });
        }
        if strategy == Strategy::Oracle || strategy == Strategy::Socle {
            match run_structural(&mut side, &alg) {
                Ok(s) => b.cross_checks.push(CrossCheck {
                    method: Method::Structural,
                    verdict: s.verdict,
                }),
                Err(DecisionError::Inconclusive(_)) => {
                    b.stage("structural", "skipped: inconclusive")
                }
                Err(e) => return Err(e),
            }
        }
        b.timing.extend(side.timing);
        if let Some(bad) = b.cross_checks.iter().find(|c| c.verdict != primary.verdict) {
            return Err(DecisionError::Disagreement {
                method: bad.method,
                expected: primary.verdict,
                got: bad.verdict,
            });
        }
    }

    Ok(DecisionReport {
        group: GroupSummary {
            name: alg.group().name().to_string(),
            order: alg.dim(),
        },
        field: FieldSummary {
            p: field.characteristic(),
            k: field.degree(),
        },
        method: primary.method,
        verdict: primary.verdict,
        reason: primary.reason,
        stages: b.stages,
        witnesses: b.witnesses,
        cross_checks: b.cross_checks,
        timing: b.timing,
    })
}

/// The reduction pipeline: decomposition, then the class-2 criterion,
/// then the socle decider on the Sylow subgroup.
pub fn decide(
    group: impl Into<Arc<FiniteGroup>>,
    field: &FieldSpec,
    opts: &Options,
) -> Result<DecisionReport, DecisionError> {
    check(group, field, Strategy::Auto, opts)
}

/// Characteristic zero: FG is centrally essential exactly when G is abelian.
pub fn decide_char0(g: &FiniteGroup) -> DecisionReport {
    let abelian = g.is_abelian();
    DecisionReport {
        group: GroupSummary {
            name: g.name().to_string(),
            order: g.order(),
        },
        field: FieldSummary { p: 0, k: 1 },
        method: Method::Char0,
        verdict: Verdict::from_essential(abelian),
        reason: if abelian {
            Reason::Abelian
        } else {
            Reason::Nonabelian
        },
        stages: vec![Stage {
            name: "abelian".into(),
            detail: format!("G is abelian: {abelian}"),
        }],
        witnesses: Vec::new(),
        cross_checks: Vec::new(),
        timing: Vec::new(),
    }
}
