//! Strings as matrices of determinant one.
//!
//! The letters `a` and `b` are sent to `A = [[1,1],[0,1]]` and
//! `B = [[1,0],[1,1]]`; concatenation is matrix product. Over any of the
//! models this gives a string structure whose elements are the determinant-one
//! matrices with entries in the model.

mod normal_form;
mod text;

use std::fmt;

use serde::Serialize;

use crate::rings::{self, is_member, ModelElem, ModelId, Poly};
use crate::{EditorsSplit, Error, Letter, Result, Side, Word};

pub use normal_form::{
    cut_in_model, nnorm, normal_form, normal_form_trace, ord_norm, prefix_at_cut, profile, Cut,
    OrdNorm, ProfileRun, Run, RunKind, RunNF,
};
pub use text::parse_mat;

/// A 2×2 matrix over `Q[X]`, `[[a, b], [c, d]]`, with no sign or model constraint.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingMat {
    pub a: Poly,
    pub b: Poly,
    pub c: Poly,
    pub d: Poly,
}

impl RingMat {
    pub fn new(a: Poly, b: Poly, c: Poly, d: Poly) -> RingMat {
        RingMat { a, b, c, d }
    }

    pub fn identity() -> RingMat {
        RingMat::new(Poly::one(), Poly::zero(), Poly::zero(), Poly::one())
    }

    pub fn a_pow(e: &Poly) -> RingMat {
        RingMat::new(Poly::one(), e.clone(), Poly::zero(), Poly::one())
    }

    pub fn b_pow(e: &Poly) -> RingMat {
        RingMat::new(Poly::one(), Poly::zero(), e.clone(), Poly::one())
    }

    pub fn letter_pow(l: Letter, e: &Poly) -> RingMat {
        match l {
            Letter::A => RingMat::a_pow(e),
            Letter::B => RingMat::b_pow(e),
        }
    }

    pub fn entries(&self) -> [&Poly; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn mul(&self, o: &RingMat) -> RingMat {
        RingMat {
            a: &(&self.a * &o.a) + &(&self.b * &o.c),
            b: &(&self.a * &o.b) + &(&self.b * &o.d),
            c: &(&self.c * &o.a) + &(&self.d * &o.c),
            d: &(&self.c * &o.b) + &(&self.d * &o.d),
        }
    }

    pub fn det(&self) -> Poly {
        &(&self.a * &self.d) - &(&self.b * &self.c)
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> RingMat {
        debug_assert!(self.det().is_one());
        RingMat::new(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn is_identity(&self) -> bool {
        self == &RingMat::identity()
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries().iter().all(|e| e.is_nonneg())
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> RingMat {
        RingMat::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }
}

impl fmt::Display for RingMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{},{}],[{},{}]]", self.a, self.b, self.c, self.d)
    }
}

/// A determinant-one matrix with entries in a model.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat2 {
    model: ModelId,
    m: RingMat,
}

impl Mat2 {
    pub fn new(model: ModelId, a: Poly, b: Poly, c: Poly, d: Poly) -> Result<Mat2> {
        Mat2::from_ring(model, RingMat::new(a, b, c, d))
    }

    pub fn from_ring(model: ModelId, m: RingMat) -> Result<Mat2> {
        for e in m.entries() {
            if !is_member(model, e) {
                return Err(Error::NotMember { model, value: e.to_string() });
            }
        }
        if !m.det().is_one() {
            return Err(Error::PreconditionViolated(format!("{m} has determinant {}", m.det())));
        }
        Ok(Mat2 { model, m })
    }

    pub fn identity(model: ModelId) -> Mat2 {
        Mat2 { model, m: RingMat::identity() }
    }

    pub fn gen(model: ModelId, l: Letter) -> Mat2 {
        Mat2 { model, m: RingMat::letter_pow(l, &Poly::one()) }
    }

    /// `A^e` or `B^e` for a model element `e`.
    pub fn letter_pow(l: Letter, e: &ModelElem) -> Mat2 {
        Mat2 { model: e.model(), m: RingMat::letter_pow(l, e.poly()) }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn ring(&self) -> &RingMat {
        &self.m
    }

    pub fn a(&self) -> &Poly {
        &self.m.a
    }
    pub fn b(&self) -> &Poly {
        &self.m.b
    }
    pub fn c(&self) -> &Poly {
        &self.m.c
    }
    pub fn d(&self) -> &Poly {
        &self.m.d
    }

    /// Entry `(i, j)` as a model element.
    pub fn entry(&self, i: usize, j: usize) -> ModelElem {
        let p = match (i, j) {
            (0, 0) => &self.m.a,
            (0, 1) => &self.m.b,
            (1, 0) => &self.m.c,
            (1, 1) => &self.m.d,
            _ => panic!("entry index out of range"),
        };
        ModelElem::new(self.model, p.clone()).expect("entries are members")
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn mul(&self, o: &Mat2) -> Result<Mat2> {
        if self.model != o.model {
            return Err(Error::ModelMismatch(self.model, o.model));
        }
        Ok(Mat2 { model: self.model, m: self.m.mul(&o.m) })
    }

    /// Reinterpret in a larger model.
    pub fn in_model(&self, model: ModelId) -> Result<Mat2> {
        Mat2::from_ring(model, self.m.clone())
    }

    fn unchecked(model: ModelId, m: RingMat) -> Mat2 {
        Mat2 { model, m }
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.m, f)
    }
}

impl Serialize for Mat2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Mat2", 2)?;
        st.serialize_field("model", &self.model)?;
        let rows = [
            [self.m.a.to_string(), self.m.b.to_string()],
            [self.m.c.to_string(), self.m.d.to_string()],
        ];
        st.serialize_field("matrix", &rows)?;
        st.end()
    }
}

pub fn encode_string(model: ModelId, w: &Word) -> Mat2 {
    w.letters()
        .iter()
        .fold(Mat2::identity(model), |acc, l| Mat2::unchecked(model, acc.m.mul(&Mat2::gen(model, *l).m)))
}

fn last_letter_ring(m: &RingMat) -> Option<Letter> {
    let (a, b, c, d) = (&m.a, &m.b, &m.c, &m.d);
    if (a < b && c <= d) || (a <= b && c < d) {
        Some(Letter::A)
    } else if (b < a && d <= c) || (b <= a && d < c) {
        Some(Letter::B)
    } else {
        None
    }
}

/// The last letter, read off the columns; `None` for the identity.
pub fn last_letter(m: &Mat2) -> Option<Letter> {
    last_letter_ring(&m.m)
}

/// Split `m = m' · L` for its last letter `L`.
pub fn pop_letter(m: &Mat2) -> Result<(Mat2, Letter)> {
    let r = &m.m;
    let out = match last_letter(m).ok_or(Error::EmptyString)? {
        Letter::A => (RingMat::new(r.a.clone(), &r.b - &r.a, r.c.clone(), &r.d - &r.c), Letter::A),
        Letter::B => (RingMat::new(&r.a - &r.b, r.b.clone(), &r.c - &r.d, r.d.clone()), Letter::B),
    };
    Ok((Mat2::unchecked(m.model, out.0), out.1))
}

/// Letter-by-letter decoding. Only matrices with integer entries have a
/// finite word, so others are rejected.
pub fn decode_word(m: &Mat2) -> Result<Word> {
    if !m.m.entries().iter().all(|e| e.as_integer().is_some()) {
        return Err(Error::UnsupportedModel { model: m.model, operation: "decoding a non-constant matrix" });
    }
    let mut out = Vec::new();
    let mut cur = m.clone();
    while !cur.is_identity() {
        let (rest, l) = pop_letter(&cur)?;
        out.push(l);
        cur = rest;
    }
    out.reverse();
    Ok(Word(out))
}

/// `α ⪯ β` (α is a prefix of β) decided without quantifiers.
pub fn is_prefix_qf(alpha: &Mat2, beta: &Mat2) -> Result<bool> {
    if alpha.model != beta.model {
        return Err(Error::ModelMismatch(alpha.model, beta.model));
    }
    let (a, b, c, d) = (alpha.a(), alpha.b(), alpha.c(), alpha.d());
    let (e, f, g, h) = (beta.a(), beta.b(), beta.c(), beta.d());
    Ok(d * e >= b * g && d * f >= b * h && a * g >= c * e && a * h >= c * f)
}

/// Editors witness for `α·β = γ·δ`, via `μ = γ⁻¹α`.
///
/// Fails with [`Error::NoWitness`] when neither `μ` nor `μ⁻¹` is non-negative,
/// which happens over the non-negative rationals.
pub fn editors_split(alpha: &Mat2, beta: &Mat2, gamma: &Mat2, delta: &Mat2) -> Result<EditorsSplit<Mat2>> {
    let model = alpha.model;
    for m in [beta, gamma, delta] {
        if m.model != model {
            return Err(Error::ModelMismatch(model, m.model));
        }
    }
    if alpha.m.mul(&beta.m) != gamma.m.mul(&delta.m) {
        return Err(Error::PreconditionViolated("α·β ≠ γ·δ".into()));
    }
    let mu = gamma.m.inverse().mul(&alpha.m);
    if mu.is_identity() {
        return Ok(EditorsSplit { side: Side::Both, eta: Mat2::identity(model) });
    }
    if mu.is_nonneg() {
        return Ok(EditorsSplit { side: Side::Right, eta: Mat2::from_ring(model, mu)? });
    }
    let inv = mu.inverse();
    if inv.is_nonneg() {
        return Ok(EditorsSplit { side: Side::Left, eta: Mat2::from_ring(model, inv)? });
    }
    Err(Error::NoWitness(Box::new(mu)))
}

pub fn transpose(m: &Mat2) -> Mat2 {
    let r = &m.m;
    Mat2::unchecked(m.model, RingMat::new(r.a.clone(), r.c.clone(), r.b.clone(), r.d.clone()))
}

/// `[[a,b],[c,d]] ↦ [[d,b],[c,a]]`.
pub fn anti_transpose(m: &Mat2) -> Mat2 {
    let r = &m.m;
    Mat2::unchecked(m.model, RingMat::new(r.d.clone(), r.b.clone(), r.c.clone(), r.a.clone()))
}

/// Substitute `X := p` in every entry.
pub fn subst_x(m: &Mat2, p: &Poly) -> Result<Mat2> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(Error::DegreeTooLow);
    }
    Mat2::from_ring(m.model, m.m.map(|e| e.compose(p)))
}

/// The singleton ur-string `[x] = B·A^x`.
pub fn urs_singleton(x: &ModelElem) -> Mat2 {
    let m = x.model();
    Mat2::unchecked(m, RingMat::b_pow(&Poly::one()).mul(&RingMat::a_pow(x.poly())))
}

pub fn urs_encode(model: ModelId, xs: &[ModelElem]) -> Result<Mat2> {
    let mut acc = Mat2::identity(model);
    for x in xs {
        if x.model() != model {
            return Err(Error::ModelMismatch(model, x.model()));
        }
        acc = Mat2::unchecked(model, acc.m.mul(&urs_singleton(x).m));
    }
    Ok(acc)
}

fn domain_ring(m: &RingMat) -> bool {
    &(&m.a * &m.d) == &(&(&m.b * &m.c) + &Poly::one())
        && ((m.b.is_zero() && m.c.is_zero()) || (m.a <= m.c && m.b <= m.d))
}

/// The ur-string domain: the identity, or matrices of the form `B·γ`.
pub fn urs_domain(m: &Mat2) -> bool {
    domain_ring(&m.m)
}

/// Split `α = β ⋆ [n]`.
pub fn urs_pop(alpha: &Mat2) -> Result<(Mat2, ModelElem)> {
    if !urs_domain(alpha) {
        return Err(Error::DomainViolation(alpha.to_string()));
    }
    if alpha.is_identity() {
        return Err(Error::EmptyString);
    }
    let model = alpha.model;
    let (a, b) = (alpha.entry(0, 0), alpha.entry(0, 1));
    let n = rings::try_euc_div(&b, &a)?.quotient;
    // (B·A^n)⁻¹ = [[1+n, -n], [-1, 1]]
    let np = n.poly();
    let inv = RingMat::new(&Poly::one() + np, -np, Poly::from_int(-1), Poly::one());
    let beta = Mat2::from_ring(model, alpha.m.mul(&inv))?;
    debug_assert!(urs_domain(&beta));
    Ok((beta, n))
}

/// Pops allowed before [`urs_decode`] gives up; nonstandard models have
/// ur-strings of infinite length.
pub const URS_DECODE_LIMIT: usize = 100_000;

pub fn urs_decode(alpha: &Mat2) -> Result<Vec<ModelElem>> {
    let mut out = Vec::new();
    let mut cur = alpha.clone();
    if !urs_domain(&cur) {
        return Err(Error::DomainViolation(cur.to_string()));
    }
    while !cur.is_identity() {
        if out.len() == URS_DECODE_LIMIT {
            return Err(Error::OutOfBounds(format!("more than {URS_DECODE_LIMIT} components")));
        }
        let (rest, x) = urs_pop(&cur)?;
        out.push(x);
        cur = rest;
    }
    out.reverse();
    Ok(out)
}

/// Frege-style code `⟨a, ⟨b, ⟨c, d⟩⟩⟩` of the entries under Cantor pairing.
pub fn urs_frege(m: &Mat2) -> Poly {
    let pair = |x: &Poly, y: &Poly| {
        let s = x + y;
        &(&s * &s) + x
    };
    pair(m.a(), &pair(m.b(), &pair(m.c(), m.d())))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BezEucReport {
    /// `ad - bc = 1`.
    pub bezout: bool,
    /// `b` divides by `a` with remainder in the model.
    pub euclidean_ab: bool,
    /// `d` divides by `c` with remainder in the model.
    pub euclidean_cd: bool,
}

pub fn bez_euc_check(model: ModelId, a: &Poly, b: &Poly, c: &Poly, d: &Poly) -> Result<BezEucReport> {
    let el = |p: &Poly| ModelElem::new(model, p.clone());
    let (ea, eb, ec, ed) = (el(a)?, el(b)?, el(c)?, el(d)?);
    let euc = |x: &ModelElem, y: &ModelElem| rings::try_euc_div(y, x).is_ok();
    Ok(BezEucReport {
        bezout: (a * d - b * c).is_one(),
        euclidean_ab: euc(&ea, &eb),
        euclidean_cd: euc(&ec, &ed),
    })
}
