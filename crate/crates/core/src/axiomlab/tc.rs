//! The string axioms `tc1`–`tc8`, `tc12` and the tally axioms `tcl1`–`tcl5`.

use std::collections::BTreeMap;
use std::fmt;

use super::sample::Sampler;
use super::{run_instances, AxiomId, Family, SampleConfig, Status, Verdict, Witness};
use crate::dyadic::{self, dyad_concat, lambda};
use crate::markov::{self, Mat2};
use crate::rings::ModelId;
use crate::tcstrings as srs;
use crate::{EditorsSplit, Error, Letter, Nat, Result, Side, Word};

/// A concatenation structure with a finder for each existential.
pub(crate) trait StringModel {
    type S: Clone + PartialEq + fmt::Debug;

    fn sample(&self, s: &mut Sampler) -> Self::S;
    fn empty(&self) -> Self::S;
    fn concat(&self, x: &Self::S, y: &Self::S) -> Result<Self::S>;
    fn valid(&self, x: &Self::S) -> bool;
    /// Editors witness for `x·y = u·v`. `Ok(None)` means none exists;
    /// [`Error::SearchExhausted`] means the search gave up.
    fn editors(&self, x: &Self::S, y: &Self::S, u: &Self::S, v: &Self::S) -> Result<Option<EditorsSplit<Self::S>>>;
    fn is_atom(&self, a: &Self::S) -> bool;
    /// `x = y·a` with `a` an atom, if there is such a split.
    fn stack_split(&self, x: &Self::S) -> Result<Option<(Self::S, Self::S)>>;
    fn probes(&self, _axiom: AxiomId) -> Vec<Vec<Self::S>> {
        Vec::new()
    }
    fn wrap(v: Vec<Self::S>) -> Witness;
}

pub(crate) struct DyadicStrings;
pub(crate) struct MarkovStrings(pub ModelId);
pub(crate) struct SrsStrings;

impl StringModel for DyadicStrings {
    type S = Nat;

    fn sample(&self, s: &mut Sampler) -> Nat {
        s.dyadic(16)
    }
    fn empty(&self) -> Nat {
        Nat::default()
    }
    fn concat(&self, x: &Nat, y: &Nat) -> Result<Nat> {
        Ok(dyad_concat(x, y))
    }
    fn valid(&self, _: &Nat) -> bool {
        true
    }
    fn editors(&self, x: &Nat, y: &Nat, u: &Nat, v: &Nat) -> Result<Option<EditorsSplit<Nat>>> {
        dyadic::dyad_editors(x, y, u, v).map(Some)
    }
    fn is_atom(&self, a: &Nat) -> bool {
        *a == dyadic::code_a() || *a == dyadic::code_b()
    }
    fn stack_split(&self, x: &Nat) -> Result<Option<(Nat, Nat)>> {
        let mut w = dyadic::sm_decode(x);
        Ok(w.0.pop().map(|l| (dyadic::sm_encode(&w), dyadic::sm_encode(&Word(vec![l])))))
    }
    fn wrap(v: Vec<Nat>) -> Witness {
        Witness::Dyadic(v)
    }
}

impl StringModel for MarkovStrings {
    type S = Mat2;

    fn sample(&self, s: &mut Sampler) -> Mat2 {
        s.sl2(self.0, 4)
    }
    fn empty(&self) -> Mat2 {
        Mat2::identity(self.0)
    }
    fn concat(&self, x: &Mat2, y: &Mat2) -> Result<Mat2> {
        x.mul(y)
    }
    fn valid(&self, x: &Mat2) -> bool {
        x.model() == self.0
    }
    fn editors(&self, x: &Mat2, y: &Mat2, u: &Mat2, v: &Mat2) -> Result<Option<EditorsSplit<Mat2>>> {
        match markov::editors_split(x, y, u, v) {
            Ok(e) => Ok(Some(e)),
            // the only candidates are u⁻¹x and its inverse
            Err(Error::NoWitness(_)) => Ok(None),
            Err(e) => Err(e),
        }
    }
    fn is_atom(&self, a: &Mat2) -> bool {
        *a == Mat2::gen(self.0, Letter::A) || *a == Mat2::gen(self.0, Letter::B)
    }
    fn stack_split(&self, x: &Mat2) -> Result<Option<(Mat2, Mat2)>> {
        // y = x·L⁻¹ is forced, so try both letters directly
        for l in [Letter::A, Letter::B] {
            let g = Mat2::gen(self.0, l);
            if let Ok(y) = Mat2::from_ring(self.0, x.ring().mul(&g.ring().inverse())) {
                return Ok(Some((y, g)));
            }
        }
        Ok(None)
    }
    fn probes(&self, axiom: AxiomId) -> Vec<Vec<Mat2>> {
        let named = |t: &str| markov::parse_mat(self.0, t).ok();
        let a = named("[[9,3X+2],[3X+4,X^2+2X+1]]");
        match (axiom.index, a) {
            (1 | 8, Some(a)) => vec![vec![a]],
            _ => Vec::new(),
        }
    }
    fn wrap(v: Vec<Mat2>) -> Witness {
        Witness::Matrices(v)
    }
}

impl StringModel for SrsStrings {
    type S = String;

    fn sample(&self, s: &mut Sampler) -> String {
        let w = s.word(b"abc", 9);
        srs::srs_normalize(&w).expect("alphabet abc")
    }
    fn empty(&self) -> String {
        String::new()
    }
    fn concat(&self, x: &String, y: &String) -> Result<String> {
        srs::srs_concat(x, y)
    }
    fn valid(&self, x: &String) -> bool {
        srs::validate_srs_word(x).is_ok() && srs::is_srs_normal(x)
    }
    fn editors(&self, x: &String, y: &String, u: &String, v: &String) -> Result<Option<EditorsSplit<String>>> {
        srs::srs_editors_witness(x, y, u, v).map(Some)
    }
    fn is_atom(&self, a: &String) -> bool {
        a == "a" || a == "c"
    }
    fn stack_split(&self, x: &String) -> Result<Option<(String, String)>> {
        let Some(last) = x.chars().last() else {
            return Ok(None);
        };
        let rest = &x[..x.len() - 1];
        Ok(Some(if last == 'b' {
            // b = a ⋄ bc, so a word ending in b ends in c after unfolding
            (srs::srs_normalize(&format!("{rest}ab"))?, "c".into())
        } else {
            (rest.to_string(), last.to_string())
        }))
    }
    fn probes(&self, axiom: AxiomId) -> Vec<Vec<String>> {
        let small = srs::srs_normal_words(2);
        let words3 = srs::srs_normal_words(3);
        let pairs = || small.iter().flat_map(|x| small.iter().map(move |y| vec![x.clone(), y.clone()]));
        let triples = || pairs().flat_map(|p| small.iter().map(move |z| [p.clone(), vec![z.clone()]].concat()));
        match axiom.index {
            1 | 8 => words3.into_iter().map(|w| vec![w]).collect(),
            2 | 6 => pairs().collect(),
            3 | 7 => triples().collect(),
            12 => {
                let (x, u, v) = srs::srs_bicancel_counterexample();
                let mut out = vec![vec![x, u, v]];
                out.extend(triples());
                out
            }
            4 | 5 => {
                let mut by_product: BTreeMap<String, Vec<(String, String)>> = BTreeMap::new();
                for p in pairs() {
                    let xy = srs::srs_concat(&p[0], &p[1]).expect("normal words");
                    by_product.entry(xy).or_default().push((p[0].clone(), p[1].clone()));
                }
                let mut out = Vec::new();
                for group in by_product.values() {
                    for (x, y) in group {
                        for (u, v) in group {
                            out.push(vec![x.clone(), y.clone(), u.clone(), v.clone()]);
                        }
                    }
                }
                out
            }
            _ => Vec::new(),
        }
    }
    fn wrap(v: Vec<String>) -> Witness {
        Witness::Words(v)
    }
}

fn arity(axiom: AxiomId) -> usize {
    match axiom.index {
        1 | 8 => 1,
        2 | 6 => 2,
        4 | 5 => 4,
        _ => 3,
    }
}

fn sample_instance<M: StringModel>(m: &M, axiom: AxiomId, s: &mut Sampler) -> Result<Vec<M::S>> {
    let draw = |s: &mut Sampler| if s.coin(0.15) { m.empty() } else { m.sample(s) };
    Ok(match axiom.index {
        4 | 5 => {
            let (p, q, r) = (draw(s), draw(s), draw(s));
            let (pq, qr) = (m.concat(&p, &q)?, m.concat(&q, &r)?);
            if s.coin(0.5) {
                vec![p, qr, pq, r]
            } else {
                vec![pq, r, p, qr]
            }
        }
        7 => {
            let (x, y) = (draw(s), draw(s));
            let z = if s.coin(0.3) { y.clone() } else { draw(s) };
            vec![x, y, z]
        }
        _ => (0..arity(axiom)).map(|_| draw(s)).collect(),
    })
}

fn split_holds<M: StringModel>(m: &M, xs: &[M::S], e: &EditorsSplit<M::S>, weak: bool) -> Result<bool> {
    let (x, y, u, v) = (&xs[0], &xs[1], &xs[2], &xs[3]);
    let eta = &e.eta;
    if !m.valid(eta) {
        return Ok(false);
    }
    Ok(match e.side {
        Side::Both => x == u && (weak || y == v),
        Side::Left => m.concat(x, eta)? == *u && (weak || *y == m.concat(eta, v)?),
        Side::Right => *x == m.concat(u, eta)? && (weak || m.concat(eta, y)? == *v),
    })
}

fn eval<M: StringModel>(m: &M, axiom: AxiomId, xs: &[M::S]) -> Result<Verdict> {
    let e = m.empty();
    let c = |a: &M::S, b: &M::S| m.concat(a, b);
    let v = match axiom.index {
        1 => c(&e, &xs[0])? == xs[0] && c(&xs[0], &e)? == xs[0],
        2 => c(&xs[0], &xs[1])? != e || (xs[0] == e && xs[1] == e),
        3 => c(&c(&xs[0], &xs[1])?, &xs[2])? == c(&xs[0], &c(&xs[1], &xs[2])?)?,
        4 | 5 => {
            if c(&xs[0], &xs[1])? != c(&xs[2], &xs[3])? {
                true
            } else {
                match m.editors(&xs[0], &xs[1], &xs[2], &xs[3]) {
                    Ok(Some(split)) => {
                        if !split_holds(m, xs, &split, axiom.index == 4)? {
                            return Err(Error::PreconditionViolated(format!("editors finder returned a bad witness for {xs:?}")));
                        }
                        true
                    }
                    Ok(None) => false,
                    Err(Error::SearchExhausted(_)) => return Ok(Verdict::Unknown),
                    Err(err) => return Err(err),
                }
            }
        }
        6 => c(&xs[0], &xs[1])? != xs[0] || xs[1] == e,
        7 => c(&xs[0], &xs[1])? != c(&xs[0], &xs[2])? || xs[1] == xs[2],
        8 => {
            xs[0] == e
                || match m.stack_split(&xs[0])? {
                    Some((y, a)) => m.is_atom(&a) && c(&y, &a)? == xs[0] && m.valid(&y),
                    None => false,
                }
        }
        12 => c(&c(&xs[1], &xs[0])?, &xs[2])? != xs[0] || (xs[1] == e && xs[2] == e),
        _ => unreachable!("axiom ids are validated"),
    };
    Ok(v.into())
}

pub(super) fn check<M: StringModel>(m: &M, axiom: AxiomId, cfg: &SampleConfig, s: &mut Sampler) -> Result<(Status, usize)> {
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

pub(super) fn verify<M: StringModel>(m: &M, axiom: AxiomId, xs: &[M::S]) -> Result<bool> {
    if axiom.family != Family::Tc || xs.len() != arity(axiom) || !xs.iter().all(|x| m.valid(x)) {
        return Ok(false);
    }
    Ok(eval(m, axiom, xs)? == Verdict::Fails)
}

fn eval_lambda(axiom: AxiomId, x: &Nat, y: &Nat) -> bool {
    let zero = Nat::default();
    match axiom.index {
        1 => lambda(&zero) == zero,
        2 => lambda(x) != zero || *x == zero,
        3 => lambda(&dyad_concat(x, y)) == dyad_concat(&lambda(x), &lambda(y)),
        4 => lambda(&lambda(x)) == lambda(x),
        5 => dyadic::is_b_free(&lambda(x)),
        _ => unreachable!("axiom ids are validated"),
    }
}

pub(super) fn check_lambda(axiom: AxiomId, cfg: &SampleConfig, s: &mut Sampler) -> Result<(Status, usize)> {
    let zero = Nat::default();
    run_instances(
        vec![vec![zero.clone(), zero]],
        cfg.count,
        || vec![s.dyadic(24), s.dyadic(24)],
        |xs| Ok(eval_lambda(axiom, &xs[0], &xs[1]).into()),
        Witness::Dyadic,
    )
}

pub(super) fn verify_lambda(axiom: AxiomId, xs: &[Nat]) -> Result<bool> {
    Ok(axiom.family == Family::Tcl && xs.len() == 2 && !eval_lambda(axiom, &xs[0], &xs[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::markov::RingMat;

    fn gen_inverse(l: Letter) -> RingMat {
        RingMat::letter_pow(l, &crate::Poly::one()).inverse()
    }

    #[test]
    fn srs_bicancellation_is_refuted() {
        let w = |s: &str| s.to_string();
        assert!(verify(&SrsStrings, AxiomId::tc(12), &[w("b"), w("a"), w("c")]).unwrap());
        assert!(!verify(&SrsStrings, AxiomId::tc(12), &[w("b"), w(""), w("")]).unwrap());
    }

    #[test]
    fn srs_stack_splits_b() {
        let (y, a) = SrsStrings.stack_split(&"ab".to_string()).unwrap().unwrap();
        assert_eq!((y.as_str(), a.as_str()), ("aab", "c"));
        assert_eq!(srs::srs_concat(&y, &a).unwrap(), "ab");
    }

    #[test]
    fn markov_stack_split_is_forced() {
        let m = MarkovStrings(ModelId::M0);
        let x = markov::parse_mat(ModelId::M0, "[[9,3X+2],[3X+4,X^2+2X+1]]").unwrap();
        let (y, a) = m.stack_split(&x).unwrap().unwrap();
        assert_eq!(y.ring().mul(a.ring()), *x.ring());
        let l = if a == Mat2::gen(ModelId::M0, Letter::A) { Letter::A } else { Letter::B };
        assert_eq!(x.ring().mul(&gen_inverse(l)), *y.ring());
    }

    #[test]
    fn lambda_examples() {
        for x in 0u32..200 {
            let x = Nat::from(x);
            assert!(eval_lambda(AxiomId::tcl(5), &x, &x));
            assert!(eval_lambda(AxiomId::tcl(4), &x, &x));
        }
    }
}
