//! Checking axioms of weak arithmetic and of string theories against the
//! models in this crate.
//!
//! Universal axioms are tested on sampled instances. Existential axioms use a
//! witness finder; a refutation of an existential is only reported when the
//! finder's failure is a proof, e.g. because the Euclidean division in `M2`
//! is unique and a submodel lacks the `M2` quotient.

mod pa;
mod registry;
mod sample;
mod suite;
mod tc;
mod tcu;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dyadic::SmUrString;
use crate::markov::Mat2;
use crate::rings::{ModelElem, ModelId};
use crate::{Error, Nat, Result};

pub use registry::{known_counterexamples, Counterexample, CounterexampleKind};
pub use suite::{expected_matrix, run_suite, Expectation, SuiteEntry, SuiteReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Pa,
    Tc,
    Tcl,
    Tcu,
}

/// An axiom such as `pa17`, `pa17-`, `tc5`, `tcl3` or `tcu7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxiomId {
    pub family: Family,
    pub index: u8,
    /// The restricted variant; only `pa17-` (division for Bézout pairs).
    pub minus: bool,
}

impl AxiomId {
    pub const fn pa(index: u8) -> AxiomId {
        AxiomId { family: Family::Pa, index, minus: false }
    }
    pub const fn pa17_minus() -> AxiomId {
        AxiomId { family: Family::Pa, index: 17, minus: true }
    }
    pub const fn tc(index: u8) -> AxiomId {
        AxiomId { family: Family::Tc, index, minus: false }
    }
    pub const fn tcl(index: u8) -> AxiomId {
        AxiomId { family: Family::Tcl, index, minus: false }
    }
    pub const fn tcu(index: u8) -> AxiomId {
        AxiomId { family: Family::Tcu, index, minus: false }
    }

    fn valid(&self) -> bool {
        match self.family {
            Family::Pa => (1..=21).contains(&self.index) && (!self.minus || self.index == 17),
            Family::Tc => !self.minus && ((1..=8).contains(&self.index) || self.index == 12),
            Family::Tcl => !self.minus && (1..=5).contains(&self.index),
            Family::Tcu => !self.minus && (1..=8).contains(&self.index),
        }
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::Pa => "pa",
            Family::Tc => "tc",
            Family::Tcl => "tcl",
            Family::Tcu => "tcu",
        };
        write!(f, "{fam}{}{}", self.index, if self.minus { "-" } else { "" })
    }
}

impl FromStr for AxiomId {
    type Err = Error;
    fn from_str(s: &str) -> Result<AxiomId> {
        let bad = || Error::Parse { position: 0, expected: "axiom id like pa17, pa17-, tc5, tcl3, tcu7".into() };
        let lower = s.trim().to_ascii_lowercase().replace('λ', "l").replace('⁻', "-");
        let (fam, rest) = if let Some(r) = lower.strip_prefix("tcu") {
            (Family::Tcu, r)
        } else if let Some(r) = lower.strip_prefix("tcl") {
            (Family::Tcl, r)
        } else if let Some(r) = lower.strip_prefix("tc") {
            (Family::Tc, r)
        } else if let Some(r) = lower.strip_prefix("pa") {
            (Family::Pa, r)
        } else {
            return Err(bad());
        };
        let (digits, minus) = match rest.strip_suffix('-') {
            Some(d) => (d, true),
            None => (rest, false),
        };
        let index: u8 = digits.parse().map_err(|_| bad())?;
        let id = AxiomId { family: fam, index, minus };
        if id.valid() {
            Ok(id)
        } else {
            Err(bad())
        }
    }
}

/// A structure to check axioms against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    /// An ordered semiring, for the `pa` axioms.
    Arith(ModelId),
    /// Dyadic codes under `⊛`, for `tc` and `tcl`.
    Dyadic,
    /// Pairs of dyadic codes, for `tcu`.
    DyadicUrs,
    /// Determinant-one matrices over a model, for `tc`.
    Markov(ModelId),
    /// The ur-string domain among those matrices, for `tcu`.
    MarkovUrs(ModelId),
    /// Normal forms of `abc → b`, for `tc`.
    Srs,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Arith(m) => write!(f, "{m}"),
            Target::Dyadic => f.write_str("dyadic"),
            Target::DyadicUrs => f.write_str("dyadic-urs"),
            Target::Markov(m) => write!(f, "markov:{m}"),
            Target::MarkovUrs(m) => write!(f, "markov-urs:{m}"),
            Target::Srs => f.write_str("srs"),
        }
    }
}

impl FromStr for Target {
    type Err = Error;
    fn from_str(s: &str) -> Result<Target> {
        let s = s.trim();
        if let Some(m) = s.strip_prefix("markov-urs:") {
            return Ok(Target::MarkovUrs(m.parse()?));
        }
        if let Some(m) = s.strip_prefix("markov:") {
            return Ok(Target::Markov(m.parse()?));
        }
        match s {
            "dyadic" => Ok(Target::Dyadic),
            "dyadic-urs" => Ok(Target::DyadicUrs),
            "srs" => Ok(Target::Srs),
            other => other.parse().map(Target::Arith).map_err(|_| Error::Parse {
                position: 0,
                expected: "target: a model, dyadic, dyadic-urs, markov:<model>, markov-urs:<model> or srs".into(),
            }),
        }
    }
}

impl Serialize for Target {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl Serialize for AxiomId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SampleConfig {
    pub seed: u64,
    /// Random instances per axiom, on top of fixed probe instances.
    pub count: usize,
    /// Rough magnitude bound for sampled numbers and coefficients.
    pub size_bound: u64,
    /// Candidate budget for existential searches without a finder.
    pub search_budget: usize,
}

impl Default for SampleConfig {
    fn default() -> SampleConfig {
        SampleConfig { seed: 0, count: 48, size_bound: 1000, search_budget: 4096 }
    }
}

/// Elements making up a failing instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Arith(Vec<ModelElem>),
    Dyadic(Vec<Nat>),
    Matrices(Vec<Mat2>),
    SmUrs(Vec<SmUrString>),
    Words(Vec<String>),
}

impl Witness {
    pub fn render(&self) -> Vec<String> {
        match self {
            Witness::Arith(v) => v.iter().map(ToString::to_string).collect(),
            Witness::Dyadic(v) => v.iter().map(ToString::to_string).collect(),
            Witness::Matrices(v) => v.iter().map(ToString::to_string).collect(),
            Witness::SmUrs(v) => v.iter().map(ToString::to_string).collect(),
            Witness::Words(v) => v.iter().map(|w| if w.is_empty() { "ε".into() } else { w.clone() }).collect(),
        }
    }
}

impl Serialize for Witness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.render().serialize(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Status {
    Holds,
    Refuted(Witness),
    Unknown(String),
}

impl Status {
    pub fn label(&self) -> &'static str {
        match self {
            Status::Holds => "holds",
            Status::Refuted(_) => "refuted",
            Status::Unknown(_) => "unknown",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub target: Target,
    pub axiom: AxiomId,
    /// Instances evaluated, probes included.
    pub samples: usize,
    pub status: Status,
}

impl Serialize for CheckReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CheckReport", 5)?;
        st.serialize_field("target", &self.target)?;
        st.serialize_field("axiom", &self.axiom)?;
        st.serialize_field("samples", &self.samples)?;
        st.serialize_field("status", self.status.label())?;
        match &self.status {
            Status::Refuted(w) => st.serialize_field("witness", w)?,
            Status::Unknown(why) => st.serialize_field("witness", why)?,
            Status::Holds => st.serialize_field("witness", &Option::<String>::None)?,
        }
        st.end()
    }
}

/// Truth of one instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Verdict {
    Holds,
    Fails,
    Unknown,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Verdict {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// Evaluate probes then `count` sampled instances; stop at the first failure.
pub(crate) fn run_instances<T: Clone>(
    probes: Vec<Vec<T>>,
    count: usize,
    mut gen: impl FnMut() -> Vec<T>,
    mut eval: impl FnMut(&[T]) -> Result<Verdict>,
    wrap: impl Fn(Vec<T>) -> Witness,
) -> Result<(Status, usize)> {
    let mut unknown = None;
    let mut n = 0;
    let sampled = (0..count).map(|_| None);
    for inst in probes.into_iter().map(Some).chain(sampled) {
        let inst = match inst {
            Some(p) => p,
            None => gen(),
        };
        n += 1;
        match eval(&inst)? {
            Verdict::Holds => {}
            Verdict::Fails => return Ok((Status::Refuted(wrap(inst)), n)),
            Verdict::Unknown => {
                unknown.get_or_insert_with(|| format!("search budget exhausted on instance {n}"));
            }
        }
    }
    Ok((unknown.map_or(Status::Holds, Status::Unknown), n))
}

fn stable_hash(s: &str) -> u64 {
    // FNV-1a, so seeds do not depend on the std hasher.
    s.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ u64::from(b)).wrapping_mul(0x0100_0000_01b3))
}

/// Check one axiom on one target.
pub fn check_axiom(target: Target, axiom: AxiomId, cfg: &SampleConfig) -> Result<CheckReport> {
    let mut s = sample::Sampler::new(cfg.seed ^ stable_hash(&format!("{target}/{axiom}")), cfg.size_bound);
    let not_applicable = || Error::NotApplicable { target: target.to_string(), axiom: axiom.to_string() };
    let (status, samples) = match (target, axiom.family) {
        (Target::Arith(m), Family::Pa) => pa::check(m, axiom, cfg, &mut s).ok_or_else(not_applicable)??,
        (Target::Dyadic, Family::Tc) => tc::check(&tc::DyadicStrings, axiom, cfg, &mut s)?,
        (Target::Dyadic, Family::Tcl) => tc::check_lambda(axiom, cfg, &mut s)?,
        (Target::Markov(m), Family::Tc) => tc::check(&tc::MarkovStrings(m), axiom, cfg, &mut s)?,
        (Target::Srs, Family::Tc) => tc::check(&tc::SrsStrings, axiom, cfg, &mut s)?,
        (Target::DyadicUrs, Family::Tcu) => tcu::check(&tcu::DyadicUrs, axiom, cfg, &mut s)?,
        (Target::MarkovUrs(m), Family::Tcu) => tcu::check(&tcu::MarkovUrs(m), axiom, cfg, &mut s)?,
        _ => return Err(not_applicable()),
    };
    Ok(CheckReport { target, axiom, samples, status })
}

/// Re-check a refutation by evaluating the failing instance directly.
///
/// Existential instances are confirmed by an exhaustive argument over the
/// finitely many remainders below a constant divisor when possible, and by
/// uniqueness of `M2` division otherwise.
pub fn verify_refutation(target: Target, axiom: AxiomId, witness: &Witness) -> Result<bool> {
    match (target, witness) {
        (Target::Arith(m), Witness::Arith(xs)) => pa::verify(m, axiom, xs),
        (Target::Dyadic, Witness::Dyadic(xs)) if axiom.family == Family::Tcl => tc::verify_lambda(axiom, xs),
        (Target::Dyadic, Witness::Dyadic(xs)) => tc::verify(&tc::DyadicStrings, axiom, xs),
        (Target::Markov(m), Witness::Matrices(xs)) => tc::verify(&tc::MarkovStrings(m), axiom, xs),
        (Target::Srs, Witness::Words(xs)) => tc::verify(&tc::SrsStrings, axiom, xs),
        (Target::DyadicUrs, Witness::SmUrs(xs)) => tcu::verify(&tcu::DyadicUrs, axiom, xs),
        (Target::MarkovUrs(m), Witness::Matrices(xs)) => tcu::verify(&tcu::MarkovUrs(m), axiom, xs),
        _ => Ok(false),
    }
}
