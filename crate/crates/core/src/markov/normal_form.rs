//! Run-length normal forms `L1^{P1} … Lk^{Pk}` over the naturals and `M2`.
//!
//! The algorithm peels the last run with a Euclidean division and terminates
//! because the norm of the top row strictly decreases in a well-order of type
//! `ω²`.

use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::Serialize;

use super::{last_letter_ring, Mat2, RingMat};
use crate::rings::{is_member, m2_euclid, ModelElem, ModelId, Poly};
use crate::{Error, Letter, Nat, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Run {
    pub letter: Letter,
    pub exponent: ModelElem,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RunNF {
    pub model: ModelId,
    pub runs: Vec<Run>,
}

impl RunNF {
    pub fn evaluate(&self) -> Mat2 {
        let m = self
            .runs
            .iter()
            .fold(RingMat::identity(), |acc, r| acc.mul(&RingMat::letter_pow(r.letter, r.exponent.poly())));
        Mat2::unchecked(self.model, m)
    }

    /// Nonzero exponents and alternating letters.
    pub fn is_well_formed(&self) -> bool {
        self.runs.iter().all(|r| !r.exponent.is_zero() && r.exponent.model() == self.model)
            && self.runs.windows(2).all(|w| w[0].letter != w[1].letter)
    }

    /// Apply `X := p` to every exponent. The exponents may leave the model.
    pub fn subst_exponents(&self, p: &Poly) -> Vec<(Letter, Poly)> {
        self.runs.iter().map(|r| (r.letter, r.exponent.poly().compose(p))).collect()
    }
}

impl fmt::Display for RunNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.runs.is_empty() {
            return f.write_str("ε");
        }
        for (i, r) in self.runs.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let l = r.letter.upper();
            let e = r.exponent.poly();
            if e.is_one() {
                write!(f, "{l}")?;
            } else if e.as_nat().is_some() {
                write!(f, "{l}^{e}")?;
            } else {
                write!(f, "{l}^{{{e}}}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for RunNF {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let runs: Vec<(String, String)> = self
            .runs
            .iter()
            .map(|r| (r.letter.upper().to_string(), r.exponent.to_string()))
            .collect();
        let mut st = s.serialize_struct("RunNF", 3)?;
        st.serialize_field("model", &self.model)?;
        st.serialize_field("runs", &runs)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}

fn check_nf_model(model: ModelId) -> Result<()> {
    match model {
        ModelId::Nat | ModelId::M2 => Ok(()),
        m => Err(Error::UnsupportedModel { model: m, operation: "normal form" }),
    }
}

pub fn normal_form(alpha: &Mat2) -> Result<RunNF> {
    normal_form_trace(alpha).map(|(nf, _)| nf)
}

/// The normal form together with the matrices visited by the algorithm; the
/// first is `alpha` and each later one is the input with its last run removed.
pub fn normal_form_trace(alpha: &Mat2) -> Result<(RunNF, Vec<RingMat>)> {
    let model = alpha.model();
    check_nf_model(model)?;
    let mut cur = alpha.ring().clone();
    let mut trace = vec![cur.clone()];
    // runs from right to left
    let mut rev: Vec<(Letter, Poly)> = Vec::new();
    loop {
        let Some(letter) = last_letter_ring(&cur) else { break };
        match letter {
            Letter::A => {
                let (q, r) = m2_euclid(&cur.b, &cur.a);
                let d = &cur.d - &(&q * &cur.c);
                rev.push((Letter::A, q));
                cur = RingMat::new(cur.a, r, cur.c, d);
            }
            Letter::B => {
                if cur.b.is_zero() {
                    rev.push((Letter::B, cur.c.clone()));
                    break;
                }
                let (q, r) = m2_euclid(&cur.a, &cur.b);
                let c = &cur.c - &(&q * &cur.d);
                if c.is_nonneg() {
                    rev.push((Letter::B, q));
                    cur = RingMat::new(r, cur.b, c, cur.d);
                } else {
                    // a = q·b exactly and the matrix is B^{d-1}·A·B^{q-1}
                    debug_assert!(r.is_zero());
                    rev.push((Letter::B, &q - &Poly::one()));
                    rev.push((Letter::A, Poly::one()));
                    rev.push((Letter::B, &cur.d - &Poly::one()));
                    break;
                }
            }
        }
        trace.push(cur.clone());
    }
    let mut runs: Vec<Run> = Vec::new();
    for (letter, e) in rev.into_iter().rev() {
        if e.is_zero() {
            continue;
        }
        match runs.last_mut() {
            Some(last) if last.letter == letter => {
                let sum = last.exponent.poly() + &e;
                last.exponent = ModelElem::new(model, sum)?;
            }
            _ => runs.push(Run { letter, exponent: ModelElem::new(model, e)? }),
        }
    }
    Ok((RunNF { model, runs }, trace))
}

/// Ordinal norm `ω·degree + finite`, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct OrdNorm {
    pub degree: i64,
    #[serde(serialize_with = "ser_nat")]
    pub finite: Nat,
}

fn ser_nat<S: serde::Serializer>(n: &Nat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl fmt::Display for OrdNorm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ω·{}+{}", self.degree, self.finite)
    }
}

/// Size of a pair of non-negative rationals: with `k` the least common
/// denominator, the larger of `p·k` and `q·k` after dividing out
/// `gcd(p·k, q·k, k)`.
pub fn nnorm(p: &Rational, q: &Rational) -> Result<Nat> {
    if p < &Rational::zero() || q < &Rational::zero() || (p.is_zero() && q.is_zero()) {
        return Err(Error::PreconditionViolated("nnorm needs non-negative, not both zero".into()));
    }
    let k = p.denom().lcm(q.denom());
    let m = (p * Rational::from_integer(k.clone())).to_integer();
    let n = (q * Rational::from_integer(k.clone())).to_integer();
    let g = m.gcd(&n).gcd(&k);
    let top = m.max(n) / g;
    Ok(top.to_biguint().expect("non-negative"))
}

fn pair_norm(a: &Poly, b: &Poly) -> OrdNorm {
    let (da, db) = (a.degree_i64(), b.degree_i64());
    let degree = da.max(db);
    let finite = if da != db {
        Nat::zero()
    } else {
        nnorm(a.lead().expect("nonzero"), b.lead().expect("nonzero")).expect("non-negative leads")
    };
    OrdNorm { degree, finite }
}

/// Norm of the top row `(a, b)`.
pub fn ord_norm(m: &RingMat) -> Result<OrdNorm> {
    if m.a.is_zero() && m.b.is_zero() {
        return Err(Error::PreconditionViolated("top row is zero".into()));
    }
    Ok(pair_norm(&m.a, &m.b))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RunKind {
    Finite(Nat),
    /// A run of non-standard length.
    Varpi,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ProfileRun {
    pub letter: Letter,
    pub kind: RunKind,
}

impl fmt::Display for ProfileRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            RunKind::Finite(k) => write!(f, "{}:{}", self.letter.upper(), k),
            RunKind::Varpi => write!(f, "{}:ϖ", self.letter.upper()),
        }
    }
}

pub fn profile(nf: &RunNF) -> Vec<ProfileRun> {
    nf.runs
        .iter()
        .map(|r| ProfileRun {
            letter: r.letter,
            kind: match r.exponent.as_nat() {
                Some(k) => RunKind::Finite(k),
                None => RunKind::Varpi,
            },
        })
        .collect()
}

/// A position inside a normal form: the first `run_index` runs in full, then
/// `offset` letters of the next run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cut {
    pub run_index: usize,
    pub offset: Poly,
}

pub fn prefix_at_cut(nf: &RunNF, cut: &Cut) -> Result<Mat2> {
    let n = nf.runs.len();
    if cut.run_index > n || (cut.run_index == n && !cut.offset.is_zero()) {
        return Err(Error::OutOfBounds(format!("run {} of {}", cut.run_index, n)));
    }
    if !is_member(nf.model, &cut.offset) {
        return Err(Error::OutOfBounds(format!("offset {} is not in {}", cut.offset, nf.model)));
    }
    let mut acc = RingMat::identity();
    for r in &nf.runs[..cut.run_index] {
        acc = acc.mul(&RingMat::letter_pow(r.letter, r.exponent.poly()));
    }
    if cut.run_index < n {
        let r = &nf.runs[cut.run_index];
        if &cut.offset > r.exponent.poly() {
            return Err(Error::OutOfBounds(format!("offset {} exceeds {}", cut.offset, r.exponent)));
        }
        acc = acc.mul(&RingMat::letter_pow(r.letter, &cut.offset));
    }
    Ok(Mat2::unchecked(nf.model, acc))
}

/// Whether the prefix at the cut has all entries in `target`.
pub fn cut_in_model(nf: &RunNF, cut: &Cut, target: ModelId) -> Result<bool> {
    let m = prefix_at_cut(nf, cut)?;
    Ok(m.ring().entries().iter().all(|e| is_member(target, e)))
}
