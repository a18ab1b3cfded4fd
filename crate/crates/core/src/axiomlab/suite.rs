//! The expected-status matrix and a runner over it.

use rayon::prelude::*;
use serde::Serialize;

use super::{check_axiom, verify_refutation, AxiomId, CheckReport, SampleConfig, Status, Target};
use crate::rings::ModelId;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expectation {
    Holds,
    Refuted,
    /// Outcome recorded but not asserted.
    Report,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteEntry {
    pub target: Target,
    pub axiom: AxiomId,
    pub expected: Expectation,
    /// `None` if the check itself errored; see `error`.
    pub report: Option<CheckReport>,
    pub error: Option<String>,
    /// Independent re-check of a refutation.
    pub verified: Option<bool>,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub config: SampleConfig,
    pub entries: Vec<SuiteEntry>,
    pub mismatches: usize,
    pub unknowns: usize,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatches == 0
    }
}

fn pa_range(lo: u8, hi: u8) -> impl Iterator<Item = AxiomId> {
    (lo..=hi).map(AxiomId::pa)
}

fn tc_battery() -> impl Iterator<Item = AxiomId> {
    (1..=8).chain([12]).map(AxiomId::tc)
}

/// Every (target, axiom) pair the suite runs, with its expected outcome.
pub fn expected_matrix() -> Vec<(Target, AxiomId, Expectation)> {
    use Expectation::*;
    let mut out = Vec::new();
    let mut push = |t: Target, a: AxiomId, e: Expectation| out.push((t, a, e));

    let nat = Target::Arith(ModelId::Nat);
    for a in pa_range(1, 21).chain([AxiomId::pa17_minus()]) {
        push(nat, a, Holds);
    }
    for m in [ModelId::M0, ModelId::M1] {
        let t = Target::Arith(m);
        for a in pa_range(1, 15) {
            push(t, a, Holds);
        }
        push(t, AxiomId::pa(16), Report);
        push(t, AxiomId::pa(17), Report);
        push(t, AxiomId::pa17_minus(), Refuted);
    }
    let m2 = Target::Arith(ModelId::M2);
    for a in pa_range(1, 17).chain([AxiomId::pa17_minus()]) {
        push(m2, a, Holds);
    }
    let q = Target::Arith(ModelId::QNonNeg);
    for a in pa_range(1, 17).chain([AxiomId::pa17_minus()]) {
        let e = if a == AxiomId::pa(11) || a == AxiomId::pa(14) { Refuted } else { Holds };
        push(q, a, e);
    }

    for a in tc_battery() {
        push(Target::Dyadic, a, Holds);
    }
    for i in 1..=5 {
        push(Target::Dyadic, AxiomId::tcl(i), Holds);
    }
    for i in 1..=8 {
        push(Target::DyadicUrs, AxiomId::tcu(i), Holds);
    }
    for m in [ModelId::Nat, ModelId::M0, ModelId::M1, ModelId::M2] {
        for a in tc_battery() {
            push(Target::Markov(m), a, Holds);
        }
    }
    for m in [ModelId::Nat, ModelId::M0, ModelId::M1, ModelId::M2] {
        let submodel = matches!(m, ModelId::M0 | ModelId::M1);
        for i in 1..=8 {
            let e = if i == 7 && submodel { Refuted } else { Holds };
            push(Target::MarkovUrs(m), AxiomId::tcu(i), e);
        }
    }
    for i in 1..=8 {
        push(Target::Srs, AxiomId::tc(i), Holds);
    }
    push(Target::Srs, AxiomId::tc(12), Refuted);
    out
}

fn run_one(target: Target, axiom: AxiomId, expected: Expectation, cfg: &SampleConfig) -> SuiteEntry {
    let mut entry = SuiteEntry { target, axiom, expected, report: None, error: None, verified: None, ok: false };
    match check_axiom(target, axiom, cfg) {
        Err(e) => entry.error = Some(e.to_string()),
        Ok(report) => {
            if let Status::Refuted(w) = &report.status {
                entry.verified = Some(verify_refutation(target, axiom, w).unwrap_or(false));
            }
            let verified = entry.verified != Some(false);
            entry.ok = verified
                && match (expected, &report.status) {
                    (Expectation::Holds, Status::Holds) => true,
                    (Expectation::Refuted, Status::Refuted(_)) => true,
                    (Expectation::Report, _) => true,
                    _ => false,
                };
            entry.report = Some(report);
        }
    }
    entry
}

/// Run the whole matrix. Entries come back in matrix order regardless of
/// scheduling.
pub fn run_suite(cfg: &SampleConfig) -> SuiteReport {
    let entries: Vec<SuiteEntry> = expected_matrix()
        .into_par_iter()
        .map(|(t, a, e)| run_one(t, a, e, cfg))
        .collect();
    let mismatches = entries.iter().filter(|e| !e.ok).count();
    let unknowns = entries
        .iter()
        .filter(|e| matches!(e.report.as_ref().map(|r| &r.status), Some(Status::Unknown(_))))
        .count();
    SuiteReport { config: *cfg, entries, mismatches, unknowns }
}
