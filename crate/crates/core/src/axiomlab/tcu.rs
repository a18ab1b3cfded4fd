//! The ur-string axioms `tcu1`–`tcu8`.

use std::fmt;

use super::pa::has_euclidean_division;
use super::sample::Sampler;
use super::{run_instances, AxiomId, Family, SampleConfig, Status, Verdict, Witness};
use crate::dyadic::{self, SmUrString};
use crate::markov::{self, Mat2};
use crate::rings::{ModelElem, ModelId};
use crate::{EditorsSplit, Error, Nat, Result, Side};

pub(crate) trait UrModel {
    type U: Clone + PartialEq + fmt::Debug;
    type O: Clone + PartialEq + fmt::Debug;

    fn object(&self, s: &mut Sampler) -> Self::O;
    fn empty(&self) -> Self::U;
    fn singleton(&self, x: &Self::O) -> Self::U;
    fn concat(&self, x: &Self::U, y: &Self::U) -> Result<Self::U>;
    fn valid(&self, x: &Self::U) -> bool;
    /// Editors witness for `x⋆y = u⋆v`; `Ok(None)` means none exists.
    fn editors(&self, x: &Self::U, y: &Self::U, u: &Self::U, v: &Self::U) -> Result<Option<EditorsSplit<Self::U>>>;
    /// `x = β⋆[n]`; `Ok(None)` means no such split exists.
    fn pop(&self, x: &Self::U) -> Result<Option<(Self::U, Self::O)>>;
    /// Independent check that a nonempty `x` has no split `β⋆[n]`.
    fn confirm_no_pop(&self, x: &Self::U) -> bool;
    fn frege_eq(&self, x: &Self::U, y: &Self::U) -> bool;
    fn probes(&self, _axiom: AxiomId) -> Vec<Vec<Self::U>> {
        Vec::new()
    }
    fn wrap(v: Vec<Self::U>) -> Witness;

    fn encode(&self, xs: &[Self::O]) -> Result<Self::U> {
        xs.iter().try_fold(self.empty(), |acc, x| self.concat(&acc, &self.singleton(x)))
    }
}

pub(crate) struct DyadicUrs;
pub(crate) struct MarkovUrs(pub ModelId);

impl UrModel for DyadicUrs {
    type U = SmUrString;
    type O = Nat;

    fn object(&self, s: &mut Sampler) -> Nat {
        s.dyadic(10)
    }
    fn empty(&self) -> SmUrString {
        dyadic::urs_empty()
    }
    fn singleton(&self, x: &Nat) -> SmUrString {
        dyadic::urs_singleton(x)
    }
    fn concat(&self, x: &SmUrString, y: &SmUrString) -> Result<SmUrString> {
        Ok(dyadic::urs_concat(x, y))
    }
    fn valid(&self, x: &SmUrString) -> bool {
        SmUrString::new(x.mask().clone(), x.payload().clone()).is_ok()
    }
    fn editors(&self, x: &SmUrString, y: &SmUrString, u: &SmUrString, v: &SmUrString) -> Result<Option<EditorsSplit<SmUrString>>> {
        dyadic::urs_editors_split(x, y, u, v).map(Some)
    }
    fn pop(&self, x: &SmUrString) -> Result<Option<(SmUrString, Nat)>> {
        Ok(dyadic::urs_pop(x))
    }
    fn confirm_no_pop(&self, x: &SmUrString) -> bool {
        dyadic::urs_decode(x).is_err()
    }
    fn frege_eq(&self, x: &SmUrString, y: &SmUrString) -> bool {
        dyadic::urs_frege(x) == dyadic::urs_frege(y)
    }
    fn wrap(v: Vec<SmUrString>) -> Witness {
        Witness::SmUrs(v)
    }
}

impl UrModel for MarkovUrs {
    type U = Mat2;
    type O = ModelElem;

    fn object(&self, s: &mut Sampler) -> ModelElem {
        s.elem(self.0)
    }
    fn empty(&self) -> Mat2 {
        Mat2::identity(self.0)
    }
    fn singleton(&self, x: &ModelElem) -> Mat2 {
        markov::urs_singleton(x)
    }
    fn concat(&self, x: &Mat2, y: &Mat2) -> Result<Mat2> {
        x.mul(y)
    }
    fn valid(&self, x: &Mat2) -> bool {
        x.model() == self.0 && markov::urs_domain(x)
    }
    fn editors(&self, x: &Mat2, y: &Mat2, u: &Mat2, v: &Mat2) -> Result<Option<EditorsSplit<Mat2>>> {
        match markov::editors_split(x, y, u, v) {
            Ok(e) => Ok(Some(e)),
            Err(Error::NoWitness(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }
    fn pop(&self, x: &Mat2) -> Result<Option<(Mat2, ModelElem)>> {
        match markov::urs_pop(x) {
            Ok(p) => Ok(Some(p)),
            Err(Error::EmptyString | Error::NotEuclidean { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }
    fn confirm_no_pop(&self, x: &Mat2) -> bool {
        // α = β·B·A^n forces b = n·a + f with f < a on the top row
        !x.is_identity() && !has_euclidean_division(self.0, x.b(), x.a())
    }
    fn frege_eq(&self, x: &Mat2, y: &Mat2) -> bool {
        markov::urs_frege(x) == markov::urs_frege(y)
    }
    fn probes(&self, axiom: AxiomId) -> Vec<Vec<Mat2>> {
        let model = self.0;
        if !model.is_polynomial() {
            return Vec::new();
        }
        let a = markov::parse_mat(model, "[[9,3X+2],[3X+4,X^2+2X+1]]").expect("in every polynomial model");
        let b = markov::parse_mat(model, "[[5X+7,X^2-2],[25,5X-7]]").expect("in every polynomial model");
        let bb = Mat2::gen(model, crate::Letter::B).mul(&b).expect("same model");
        match axiom.index {
            1 | 7 => vec![vec![a], vec![bb]],
            3 => vec![vec![a.clone(), bb.clone(), a]],
            8 => vec![vec![a.clone(), a], vec![bb.clone(), bb]],
            _ => Vec::new(),
        }
    }
    fn wrap(v: Vec<Mat2>) -> Witness {
        Witness::Matrices(v)
    }
}

fn arity(axiom: AxiomId) -> usize {
    match axiom.index {
        1 | 5 | 7 => 1,
        2 | 8 => 2,
        3 => 3,
        4 => 3,
        _ => 4,
    }
}

fn ur<M: UrModel>(m: &M, s: &mut Sampler, max: usize) -> Result<M::U> {
    let n = s.below(max + 1);
    let xs: Vec<M::O> = (0..n).map(|_| m.object(s)).collect();
    m.encode(&xs)
}

fn sample_instance<M: UrModel>(m: &M, axiom: AxiomId, s: &mut Sampler) -> Result<Vec<M::U>> {
    Ok(match axiom.index {
        4 => {
            let x = m.object(s);
            let nonempty = |s: &mut Sampler| -> Result<M::U> {
                let k = 1 + s.below(3);
                let xs: Vec<M::O> = (0..k).map(|_| m.object(s)).collect();
                m.encode(&xs)
            };
            vec![m.singleton(&x), nonempty(s)?, nonempty(s)?]
        }
        5 => vec![m.singleton(&m.object(s))],
        6 => {
            let n = s.below(6);
            let xs: Vec<M::O> = (0..n).map(|_| m.object(s)).collect();
            let (i, j) = (s.below(n + 1), s.below(n + 1));
            vec![m.encode(&xs[..i])?, m.encode(&xs[i..])?, m.encode(&xs[..j])?, m.encode(&xs[j..])?]
        }
        8 => {
            let x = ur(m, s, 4)?;
            let y = if s.coin(0.3) { x.clone() } else { ur(m, s, 4)? };
            vec![x, y]
        }
        k => {
            let mut v = Vec::new();
            for _ in 0..arity(AxiomId::tcu(k)) {
                v.push(ur(m, s, 4)?);
            }
            v
        }
    })
}

fn eval<M: UrModel>(m: &M, axiom: AxiomId, xs: &[M::U]) -> Result<Verdict> {
    let e = m.empty();
    let c = |a: &M::U, b: &M::U| m.concat(a, b);
    let v = match axiom.index {
        1 => c(&e, &xs[0])? == xs[0] && c(&xs[0], &e)? == xs[0],
        2 => c(&xs[0], &xs[1])? != e || xs[0] == e || xs[1] == e,
        3 => c(&c(&xs[0], &xs[1])?, &xs[2])? == c(&xs[0], &c(&xs[1], &xs[2])?)?,
        // [x] is not empty and does not split into two nonempty parts
        4 => xs[0] != e && (xs[1] == e || xs[2] == e || c(&xs[1], &xs[2])? != xs[0]),
        // [·] has the left inverse pop, so it is injective
        5 => match m.pop(&xs[0])? {
            Some((rest, x)) => rest == e && m.singleton(&x) == xs[0],
            None => false,
        },
        6 => {
            if c(&xs[0], &xs[1])? != c(&xs[2], &xs[3])? {
                true
            } else {
                match m.editors(&xs[0], &xs[1], &xs[2], &xs[3])? {
                    Some(split) => {
                        let eta = &split.eta;
                        let ok = m.valid(eta)
                            && match split.side {
                                Side::Both => xs[0] == xs[2] && xs[1] == xs[3],
                                Side::Left => c(&xs[0], eta)? == xs[2] && xs[1] == c(eta, &xs[3])?,
                                Side::Right => xs[0] == c(&xs[2], eta)? && c(eta, &xs[1])? == xs[3],
                            };
                        if !ok {
                            return Err(Error::PreconditionViolated(format!("editors finder returned a bad witness for {xs:?}")));
                        }
                        true
                    }
                    None => false,
                }
            }
        }
        7 => {
            xs[0] == e
                || match m.pop(&xs[0])? {
                    Some((rest, x)) => m.valid(&rest) && c(&rest, &m.singleton(&x))? == xs[0],
                    None => {
                        if !m.confirm_no_pop(&xs[0]) {
                            return Err(Error::PreconditionViolated(format!("pop failed on {:?} but a split exists", xs[0])));
                        }
                        false
                    }
                }
        }
        8 => !m.frege_eq(&xs[0], &xs[1]) || xs[0] == xs[1],
        _ => unreachable!("axiom ids are validated"),
    };
    Ok(v.into())
}

pub(super) fn check<M: UrModel>(m: &M, axiom: AxiomId, cfg: &SampleConfig, s: &mut Sampler) -> Result<(Status, usize)> {
    let mut err = None;
    let out = run_instances(
        m.probes(axiom),
        cfg.count,
        || match sample_instance(m, axiom, s) {
            Ok(v) => v,
            Err(e) => {
                err.get_or_insert(e);
                vec![m.empty(); arity(axiom)]
            }
        },
        |xs| eval(m, axiom, xs),
        M::wrap,
    )?;
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// A refutation re-checked from the raw instance.
///
/// For `tcu7` the witness is accepted only if the independent test in
/// [`UrModel::confirm_no_pop`] agrees that no split exists.
pub(super) fn verify<M: UrModel>(m: &M, axiom: AxiomId, xs: &[M::U]) -> Result<bool> {
    if axiom.family != Family::Tcu || xs.len() != arity(axiom) || !xs.iter().all(|x| m.valid(x)) {
        return Ok(false);
    }
    if axiom.index == 7 {
        return Ok(m.confirm_no_pop(&xs[0]));
    }
    Ok(eval(m, axiom, xs)? == Verdict::Fails)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Poly;

    fn m2_pop_exponent(x: &Mat2) -> Poly {
        crate::rings::m2_euclid(x.b(), x.a()).0
    }

    #[test]
    fn tcu7_fails_on_the_named_matrix_in_m0() {
        let m = MarkovUrs(ModelId::M0);
        let a = markov::parse_mat(ModelId::M0, "[[9,3X+2],[3X+4,X^2+2X+1]]").unwrap();
        assert!(verify(&m, AxiomId::tcu(7), &[a.clone()]).unwrap());
        assert_eq!(m2_pop_exponent(&a).to_string(), "1/3*X");
        let m2 = MarkovUrs(ModelId::M2);
        let a2 = a.in_model(ModelId::M2).unwrap();
        assert!(!verify(&m2, AxiomId::tcu(7), &[a2]).unwrap());
    }
}
