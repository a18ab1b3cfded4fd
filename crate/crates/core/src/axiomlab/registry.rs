//! Named counterexamples, each with its own re-verification.

use serde::Serialize;

use super::pa::has_euclidean_division;
use super::{verify_refutation, AxiomId, Target, Witness};
use crate::markov::{self, normal_form, parse_mat, Mat2, RingMat};
use crate::rings::{self, is_member, ModelElem, ModelId, Poly, Pow2Witness};
use crate::tcstrings as srs;
use crate::{Error, Letter, Rational, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CounterexampleKind {
    /// A matrix whose row `row` is a Bézout pair without Euclidean division
    /// in the matrix's model; its normal form exists only in `M2`.
    NonEuclidean { matrix: Mat2, row: usize, m2_normal_form: String },
    /// `α·A = A·δ` over the non-negative rationals with no editors witness;
    /// `mu` is the forced candidate, which has a negative entry.
    EditorsFailure { alpha: Mat2, delta: Mat2, mu: RingMat },
    /// An element that is a power of two in Tarski's sense but not Smullyan's.
    TarskiNotSmullyan { x: ModelElem },
    /// `y < x < y + 1`.
    Discreteness { x: ModelElem, y: ModelElem },
    /// `u ⋄ x ⋄ v = x` with `u`, `v` nonempty.
    BiCancellation { x: String, u: String, v: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub name: &'static str,
    pub summary: &'static str,
    pub kind: CounterexampleKind,
}

impl Counterexample {
    /// Re-check the entry with the module operations it is about.
    pub fn verify(&self) -> Result<bool> {
        match &self.kind {
            CounterexampleKind::NonEuclidean { matrix, row, m2_normal_form } => {
                let model = matrix.model();
                let in_m2 = matrix.in_model(ModelId::M2)?;
                let nf = normal_form(&in_m2)?;
                let (a, b) = (matrix.entry(*row, 0), matrix.entry(*row, 1));
                let no_division = !has_euclidean_division(model, b.poly(), a.poly());
                let same_by_routine = matches!(
                    rings::try_euc_div(&b, &a),
                    Err(Error::NotEuclidean { .. })
                );
                // as an ur-string the matrix then has no last component
                let tcu7 = verify_refutation(
                    Target::MarkovUrs(model),
                    AxiomId::tcu(7),
                    &Witness::Matrices(vec![matrix.clone()]),
                )?;
                Ok(nf.to_string() == *m2_normal_form
                    && nf.evaluate() == in_m2
                    && no_division
                    && same_by_routine
                    && (!markov::urs_domain(matrix) || tcu7))
            }
            CounterexampleKind::EditorsFailure { alpha, delta, mu } => {
                let a = Mat2::gen(alpha.model(), Letter::A);
                let forced = a.ring().inverse().mul(alpha.ring());
                let no_witness = matches!(
                    markov::editors_split(alpha, &a, &a, delta),
                    Err(Error::NoWitness(m)) if *m == *mu
                );
                Ok(no_witness && forced == *mu && !mu.is_nonneg() && !mu.inverse().is_nonneg())
            }
            CounterexampleKind::TarskiNotSmullyan { x } => {
                // Smullyan: x itself is an odd divisor other than 1
                let not_smullyan = rings::pow2_refute(x, &Pow2Witness::Divisor(x.clone()))?;
                // Tarski: x = (2y+3)·z needs z = 1 (x has content 1) and then
                // y = (x-3)/2, or a constant factor 2y+3 ≥ 3 dividing x
                let half = Rational::new(1.into(), 2.into());
                let y = (x.poly() - &Poly::from_int(3)).scale(&half);
                let content_one = x.poly().terms().any(|(_, c)| c.is_integer() && c.to_integer() == 1.into());
                let tarski = content_one && !is_member(x.model(), &y);
                Ok(not_smullyan && tarski)
            }
            CounterexampleKind::Discreteness { x, y } => {
                verify_refutation(Target::Arith(x.model()), AxiomId::pa(11), &Witness::Arith(vec![x.clone(), y.clone()]))
            }
            CounterexampleKind::BiCancellation { x, u, v } => {
                let lhs = srs::srs_concat(&srs::srs_concat(u, x)?, v)?;
                Ok(lhs == *x && !u.is_empty() && !v.is_empty())
            }
        }
    }
}

impl Serialize for Counterexample {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Counterexample", 3)?;
        st.serialize_field("name", self.name)?;
        st.serialize_field("summary", self.summary)?;
        let data: Vec<String> = match &self.kind {
            CounterexampleKind::NonEuclidean { matrix, m2_normal_form, .. } => vec![matrix.to_string(), m2_normal_form.clone()],
            CounterexampleKind::EditorsFailure { alpha, delta, mu } => {
                vec![alpha.to_string(), delta.to_string(), mu.to_string()]
            }
            CounterexampleKind::TarskiNotSmullyan { x } => vec![x.to_string()],
            CounterexampleKind::Discreteness { x, y } => vec![x.to_string(), y.to_string()],
            CounterexampleKind::BiCancellation { x, u, v } => vec![x.clone(), u.clone(), v.clone()],
        };
        st.serialize_field("data", &data)?;
        st.end()
    }
}

fn m0(text: &str) -> Mat2 {
    parse_mat(ModelId::M0, text).expect("registry literal")
}

pub fn known_counterexamples() -> Vec<Counterexample> {
    let q = ModelId::QNonNeg;
    let qmat = |t: &str| parse_mat(q, t).expect("registry literal");
    let qpoly = |t: &str| rings::ModelElem::parse(q, t).expect("registry literal").into_poly();
    let (x, u, v) = srs::srs_bicancel_counterexample();
    vec![
        Counterexample {
            name: "A",
            summary: "Bézout pair (9, 3X+2) without Euclidean division in M0",
            kind: CounterexampleKind::NonEuclidean {
                matrix: m0("[[9,3X+2],[3X+4,X^2+2X+1]]"),
                row: 0,
                m2_normal_form: "B^{1/3*X} A^2 B^4 A^{1/3*X}".into(),
            },
        },
        Counterexample {
            name: "B",
            summary: "Bézout pair (5X+7, X^2-2) without Euclidean division in M0",
            kind: CounterexampleKind::NonEuclidean {
                matrix: m0("[[5X+7,X^2-2],[25,5X-7]]"),
                row: 0,
                m2_normal_form: "A^{1/5*X} B^3 A B A^2 B A^{1/5*X-1}".into(),
            },
        },
        Counterexample {
            name: "S",
            summary: "Skolem's matrix in M1; 3 does not divide X^2+1 with remainder in M1",
            kind: CounterexampleKind::NonEuclidean {
                row: 1,
                matrix: parse_mat(ModelId::M1, "[[X^2-6X+10,1/3X^4-2X^3+11/3X^2-2X+3],[3,X^2+1]]")
                    .expect("registry literal"),
                m2_normal_form: "A^{1/3*X^2-2*X+3} B^3 A^{1/3*X^2}".into(),
            },
        },
        Counterexample {
            name: "Q-editors",
            summary: "editors fails for α·A = A·δ over the non-negative rationals",
            kind: CounterexampleKind::EditorsFailure {
                alpha: qmat("[[7/5,1/5],[3/5,4/5]]"),
                delta: qmat("[[4/5,1/5],[3/5,7/5]]"),
                mu: RingMat::new(qpoly("4/5"), -qpoly("3/5"), qpoly("3/5"), qpoly("4/5")),
            },
        },
        Counterexample {
            name: "X-pow2",
            summary: "X is a power of two for Tarski but not for Smullyan in M0",
            kind: CounterexampleKind::TarskiNotSmullyan { x: ModelElem::parse(ModelId::M0, "X").expect("literal") },
        },
        Counterexample {
            name: "Q-discrete",
            summary: "1/2 lies strictly between 0 and 1 in the non-negative rationals",
            kind: CounterexampleKind::Discreteness {
                x: ModelElem::parse(q, "1").expect("literal"),
                y: ModelElem::parse(q, "1/2").expect("literal"),
            },
        },
        Counterexample {
            name: "srs-bicancel",
            summary: "a ⋄ b ⋄ c = b in the rewriting monoid of abc → b",
            kind: CounterexampleKind::BiCancellation { x, u, v },
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_entry_verifies() {
        for c in known_counterexamples() {
            assert!(c.verify().unwrap(), "{}", c.name);
        }
    }

    #[test]
    fn tampered_entries_fail() {
        let mut a = known_counterexamples().remove(0);
        if let CounterexampleKind::NonEuclidean { m2_normal_form, .. } = &mut a.kind {
            *m2_normal_form = "B^{1/3*X} A^2 B^4 A^{1/3*X-1}".into();
        }
        assert!(!a.verify().unwrap());
    }
}
