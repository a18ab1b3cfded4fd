//! Ordered semiring models.
//!
//! Every element is carried as a [`Poly`] tagged with its [`ModelId`]; the
//! naturals and the non-negative rationals are the constant polynomials of the
//! respective kind. The order is the dominance order: `p ≤ q` iff `q - p` is
//! zero or has a positive leading coefficient.
//!
//! * `M0`: non-negative part of `Z[X]`.
//! * `M1`: non-negative integer-valued polynomials, `Int(Z)`.
//! * `M2`: non-negative part of `Q[X]·X + Z`.

mod parse;
mod poly;

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

pub use parse::parse_poly;
pub use poly::Poly;

use crate::{Error, Nat, Rational, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ModelId {
    #[serde(rename = "nat")]
    Nat,
    M0,
    M1,
    M2,
    #[serde(rename = "Qnn")]
    QNonNeg,
}

impl ModelId {
    pub const ALL: [ModelId; 5] =
        [ModelId::Nat, ModelId::M0, ModelId::M1, ModelId::M2, ModelId::QNonNeg];

    /// Every model except the non-negative rationals is discretely ordered.
    pub fn is_discrete(self) -> bool {
        self != ModelId::QNonNeg
    }

    pub fn is_polynomial(self) -> bool {
        matches!(self, ModelId::M0 | ModelId::M1 | ModelId::M2)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ModelId::Nat => "nat",
            ModelId::M0 => "M0",
            ModelId::M1 => "M1",
            ModelId::M2 => "M2",
            ModelId::QNonNeg => "Qnn",
        }
    }
}

impl fmt::Display for ModelId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ModelId {
    type Err = Error;
    fn from_str(s: &str) -> Result<ModelId> {
        match s.to_ascii_lowercase().as_str() {
            "nat" | "n" => Ok(ModelId::Nat),
            "m0" => Ok(ModelId::M0),
            "m1" => Ok(ModelId::M1),
            "m2" => Ok(ModelId::M2),
            "qnn" | "qnonneg" => Ok(ModelId::QNonNeg),
            _ => Err(Error::Parse { position: 0, expected: "one of nat, M0, M1, M2, Qnn".into() }),
        }
    }
}

/// Membership of a polynomial in a model's carrier.
pub fn is_member(model: ModelId, p: &Poly) -> bool {
    if !p.is_nonneg() {
        return false;
    }
    match model {
        ModelId::Nat => p.as_integer().is_some(),
        ModelId::QNonNeg => p.is_constant(),
        ModelId::M0 => p.has_integer_coeffs(),
        ModelId::M1 => p.binomial_coords().is_some(),
        ModelId::M2 => p.constant_term().is_integer(),
    }
}

/// An element of one of the models.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModelElem {
    model: ModelId,
    value: Poly,
}

impl ModelElem {
    pub fn new(model: ModelId, value: Poly) -> Result<ModelElem> {
        if is_member(model, &value) {
            Ok(ModelElem { model, value })
        } else {
            Err(Error::NotMember { model, value: value.to_string() })
        }
    }

    pub fn parse(model: ModelId, text: &str) -> Result<ModelElem> {
        ModelElem::new(model, parse_poly(text)?)
    }

    pub fn nat(n: impl Into<BigUint>) -> ModelElem {
        ModelElem { model: ModelId::Nat, value: Poly::from_nat(&n.into()) }
    }

    pub fn zero(model: ModelId) -> ModelElem {
        ModelElem { model, value: Poly::zero() }
    }

    pub fn one(model: ModelId) -> ModelElem {
        ModelElem { model, value: Poly::one() }
    }

    pub fn model(&self) -> ModelId {
        self.model
    }

    pub fn poly(&self) -> &Poly {
        &self.value
    }

    pub fn into_poly(self) -> Poly {
        self.value
    }

    pub fn as_nat(&self) -> Option<Nat> {
        self.value.as_nat()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.value.as_constant()
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }
}

impl fmt::Display for ModelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

impl fmt::Debug for ModelElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.model, self.value)
    }
}

impl Serialize for ModelElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ModelElem", 2)?;
        st.serialize_field("model", &self.model)?;
        st.serialize_field("poly", &self.value.to_string())?;
        st.end()
    }
}

pub fn render_poly(p: &Poly) -> String {
    p.to_string()
}

fn same_model(a: &ModelElem, b: &ModelElem) -> Result<ModelId> {
    if a.model == b.model {
        Ok(a.model)
    } else {
        Err(Error::ModelMismatch(a.model, b.model))
    }
}

/// Coordinates in the binomial basis `C(X,k)`.
pub fn binomial_coords(p: &Poly) -> Result<Vec<BigInt>> {
    p.binomial_coords().ok_or_else(|| Error::NotIntegerValued(p.to_string()))
}

pub fn leq(a: &ModelElem, b: &ModelElem) -> Result<bool> {
    same_model(a, b)?;
    Ok(a.value <= b.value)
}

pub fn add(a: &ModelElem, b: &ModelElem) -> Result<ModelElem> {
    let model = same_model(a, b)?;
    Ok(ModelElem { model, value: &a.value + &b.value })
}

pub fn mul(a: &ModelElem, b: &ModelElem) -> Result<ModelElem> {
    let model = same_model(a, b)?;
    Ok(ModelElem { model, value: &a.value * &b.value })
}

/// `a - b`, defined when `b ≤ a`.
pub fn try_sub(a: &ModelElem, b: &ModelElem) -> Result<ModelElem> {
    let model = same_model(a, b)?;
    if b.value > a.value {
        return Err(Error::Underflow { minuend: a.to_string(), subtrahend: b.to_string() });
    }
    Ok(ModelElem { model, value: &a.value - &b.value })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EucResult {
    pub quotient: ModelElem,
    pub remainder: ModelElem,
}

/// Euclidean division in `M2`: `a = q·b + r` with `0 ≤ r < b`.
///
/// Both arguments must be `M2` members and `b` nonzero. The result is unique,
/// so a submodel has a Euclidean division of `a` by `b` iff this one lies in it.
pub fn m2_euclid(a: &Poly, b: &Poly) -> (Poly, Poly) {
    assert!(!b.is_zero(), "m2_euclid: zero divisor");
    let a0 = a.constant_term();
    let a_rest = (a - &Poly::constant(a0.clone()))
        .div_exact(&Poly::x())
        .expect("no constant term left");
    let (p1, r1) = a_rest.div_rem(b);
    let r0 = &r1.shift(1) + &Poly::constant(a0);

    let mut n: BigInt = if r0.degree() == b.degree() {
        (r0.lead().expect("nonzero") / b.lead().expect("nonzero")).floor().to_integer()
    } else if r0.is_positive() || r0.is_zero() {
        BigInt::zero()
    } else {
        -BigInt::one()
    };
    let rem = |n: &BigInt| &r0 - &b.scale(&Rational::from_integer(n.clone()));
    loop {
        let r = rem(&n);
        if !r.is_nonneg() {
            n -= 1;
        } else if r >= *b {
            n += 1;
        } else {
            let q = &p1.shift(1) + &Poly::from_bigint(n);
            return (q, r);
        }
    }
}

/// Divide `a` by `b`. Only the discrete models with a Euclidean algorithm
/// succeed; `M0` and `M1` succeed exactly when the `M2` result is a member.
pub fn try_euc_div(a: &ModelElem, b: &ModelElem) -> Result<EucResult> {
    let model = same_model(a, b)?;
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let not_euclidean = || Error::NotEuclidean {
        model,
        dividend: a.to_string(),
        divisor: b.to_string(),
    };
    match model {
        ModelId::QNonNeg => Err(not_euclidean()),
        ModelId::Nat => {
            let (q, r) = a.as_nat().expect("nat").div_rem(&b.as_nat().expect("nat"));
            Ok(EucResult { quotient: ModelElem::nat(q), remainder: ModelElem::nat(r) })
        }
        ModelId::M0 | ModelId::M1 | ModelId::M2 => {
            let (q, r) = m2_euclid(&a.value, &b.value);
            if is_member(model, &q) && is_member(model, &r) {
                Ok(EucResult {
                    quotient: ModelElem { model, value: q },
                    remainder: ModelElem { model, value: r },
                })
            } else {
                Err(not_euclidean())
            }
        }
    }
}

/// `y | x` inside the model.
pub fn divides(y: &ModelElem, x: &ModelElem) -> Result<bool> {
    let model = same_model(x, y)?;
    if y.is_zero() {
        return Ok(x.is_zero());
    }
    Ok(x.value.div_exact(&y.value).is_some_and(|k| is_member(model, &k)))
}

pub fn gcd(x: &Nat, y: &Nat) -> Nat {
    x.gcd(y)
}

/// For `x | y·z`, split `x = u·v` with `u | y` and `v | z`.
pub fn primal_split(x: &Nat, y: &Nat, z: &Nat) -> Result<(Nat, Nat)> {
    if x.is_zero() && y.is_zero() && z.is_zero() {
        return Err(Error::PreconditionViolated("x, y, z all zero".into()));
    }
    let yz = y * z;
    let divides = if x.is_zero() { yz.is_zero() } else { (&yz % x).is_zero() };
    if !divides {
        return Err(Error::PreconditionViolated(format!("{x} does not divide {y}*{z}")));
    }
    let u = x.gcd(y);
    if u.is_zero() {
        // x = y = 0
        return Ok((u, Nat::one()));
    }
    let v = x / &u;
    Ok((u, v))
}

/// Smullyan's power of two: every divisor other than 1 is even.
pub fn pow2_smullyan(x: &Nat) -> bool {
    !x.is_zero() && (x & (x - 1u32)).is_zero()
}

/// Tarski's power of two: no factor of the form `2y+3`.
pub fn pow2_tarski(x: &Nat) -> bool {
    pow2_tarski_witness(x).is_none()
}

/// A factorisation `x = (2y+3)·z` refuting Tarski's definition, if any.
pub fn pow2_tarski_witness(x: &Nat) -> Option<(Nat, Nat)> {
    if x.is_zero() {
        return Some((Nat::zero(), Nat::zero()));
    }
    let k = x.trailing_zeros().unwrap_or(0);
    let odd = x >> k;
    (odd > Nat::one()).then(|| ((odd - 3u32) >> 1, Nat::one() << k))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pow2Witness {
    /// `y | x`, `y ≠ 1` and `2 ∤ y`.
    Divisor(ModelElem),
    /// `x = (2y+3)·z`.
    Factorization(ModelElem, ModelElem),
}

/// Check that the witness refutes "x is a power of two" in `x`'s model.
pub fn pow2_refute(x: &ModelElem, w: &Pow2Witness) -> Result<bool> {
    let model = x.model;
    let two = ModelElem { model, value: Poly::from_int(2) };
    match w {
        Pow2Witness::Divisor(y) => {
            Ok(divides(y, x)? && !y.value.is_one() && !divides(&two, y)?)
        }
        Pow2Witness::Factorization(y, z) => {
            same_model(x, y)?;
            same_model(x, z)?;
            let f = &(&y.value.scale(&Rational::from_integer(2.into())) + &Poly::from_int(3))
                * &z.value;
            Ok(f == x.value)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(m: ModelId, s: &str) -> ModelElem {
        ModelElem::parse(m, s).unwrap()
    }

    #[test]
    fn membership() {
        let half_x = parse_poly("X/2").unwrap();
        let tri = parse_poly("X^2/2+X/2").unwrap();
        assert!(!is_member(ModelId::M0, &tri));
        assert!(is_member(ModelId::M1, &tri));
        assert!(!is_member(ModelId::M1, &half_x));
        assert!(is_member(ModelId::M2, &half_x));
        assert!(!is_member(ModelId::M2, &parse_poly("X/2+1/2").unwrap()));
        assert!(is_member(ModelId::M0, &parse_poly("X-7").unwrap()));
        assert!(!is_member(ModelId::M0, &parse_poly("-X+7").unwrap()));
        assert!(is_member(ModelId::QNonNeg, &parse_poly("1/2").unwrap()));
        assert!(!is_member(ModelId::QNonNeg, &parse_poly("X").unwrap()));
        assert!(!is_member(ModelId::Nat, &parse_poly("1/2").unwrap()));
    }

    #[test]
    fn division_examples() {
        let r = try_euc_div(&el(ModelId::M2, "3X+2"), &el(ModelId::M2, "9")).unwrap();
        assert_eq!(r.quotient.poly(), &parse_poly("X/3").unwrap());
        assert_eq!(r.remainder.poly(), &parse_poly("2").unwrap());
        assert!(matches!(
            try_euc_div(&el(ModelId::M0, "3X+2"), &el(ModelId::M0, "9")),
            Err(Error::NotEuclidean { .. })
        ));
        let r = try_euc_div(&el(ModelId::M2, "X^2-2"), &el(ModelId::M2, "5X+7")).unwrap();
        assert_eq!(r.quotient.poly(), &parse_poly("X/5-1").unwrap());
        assert_eq!(r.remainder.poly(), &parse_poly("18/5X+5").unwrap());
        assert_eq!(
            try_euc_div(&el(ModelId::M2, "X"), &el(ModelId::M2, "0")),
            Err(Error::DivisionByZero)
        );
        assert!(matches!(
            try_euc_div(&el(ModelId::QNonNeg, "1"), &el(ModelId::QNonNeg, "1/2")),
            Err(Error::NotEuclidean { .. })
        ));
        let r = try_euc_div(&ModelElem::nat(17u32), &ModelElem::nat(5u32)).unwrap();
        assert_eq!((r.quotient.as_nat().unwrap(), r.remainder.as_nat().unwrap()), (3u32.into(), 2u32.into()));
    }

    #[test]
    fn model_mismatch() {
        assert_eq!(
            add(&ModelElem::nat(1u32), &ModelElem::one(ModelId::M0)),
            Err(Error::ModelMismatch(ModelId::Nat, ModelId::M0))
        );
    }

    #[test]
    fn subtraction() {
        let x = el(ModelId::M0, "X");
        assert_eq!(try_sub(&x, &el(ModelId::M0, "1")).unwrap().poly(), &parse_poly("X-1").unwrap());
        assert!(matches!(try_sub(&el(ModelId::M0, "1"), &x), Err(Error::Underflow { .. })));
    }

    #[test]
    fn primal_split_examples() {
        let n = |v: u32| Nat::from(v);
        assert_eq!(primal_split(&n(12), &n(8), &n(9)).unwrap(), (n(4), n(3)));
        assert_eq!(primal_split(&n(0), &n(0), &n(5)).unwrap(), (n(0), n(1)));
        assert_eq!(primal_split(&n(0), &n(5), &n(0)).unwrap(), (n(5), n(0)));
        assert!(primal_split(&n(7), &n(2), &n(3)).is_err());
        assert!(primal_split(&n(0), &n(0), &n(0)).is_err());
    }

    #[test]
    fn powers_of_two() {
        assert!(!pow2_tarski(&Nat::from(6u32)));
        assert_eq!(pow2_tarski_witness(&Nat::from(6u32)), Some((Nat::from(0u32), Nat::from(2u32))));
        let x = el(ModelId::M0, "X");
        assert!(pow2_refute(&x, &Pow2Witness::Divisor(x.clone())).unwrap());
        let x2 = el(ModelId::M2, "X");
        assert!(!pow2_refute(&x2, &Pow2Witness::Divisor(x2.clone())).unwrap());
        let six = ModelElem::nat(6u32);
        let w = Pow2Witness::Factorization(ModelElem::nat(0u32), ModelElem::nat(2u32));
        assert!(pow2_refute(&six, &w).unwrap());
    }
}
