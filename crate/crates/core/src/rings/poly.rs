//! Polynomials over the rationals in one variable `X`.
//!
//! Coefficients are stored sparsely and canonically: no zero coefficient is
//! ever kept, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::Rational;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: BTreeMap<u32, Rational>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly::default()
    }

    pub fn one() -> Poly {
        Poly::constant(Rational::one())
    }

    /// The indeterminate `X`.
    pub fn x() -> Poly {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Poly {
        Poly::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Poly {
        Poly::constant(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Poly {
        Poly::constant(Rational::from_integer(n))
    }

    pub fn from_nat(n: &BigUint) -> Poly {
        Poly::from_bigint(BigInt::from(n.clone()))
    }

    pub fn monomial(c: Rational, k: u32) -> Poly {
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(k, c);
        }
        Poly { coeffs }
    }

    /// Build from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (u32, Rational)>>(terms: I) -> Poly {
        let mut p = Poly::zero();
        for (k, c) in terms {
            p.add_term(k, &c);
        }
        p
    }

    fn add_term(&mut self, k: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    /// `None` for the zero polynomial. `Option`'s ordering puts it below every degree.
    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().next_back().copied()
    }

    /// Degree with the zero polynomial at `-1`.
    pub fn degree_i64(&self) -> i64 {
        self.degree().map_or(-1, i64::from)
    }

    pub fn lead(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.coeffs.get(&k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn is_constant(&self) -> bool {
        self.degree().unwrap_or(0) == 0
    }

    /// The constant value, if the polynomial has degree at most zero.
    pub fn as_constant(&self) -> Option<Rational> {
        self.is_constant().then(|| self.constant_term())
    }

    /// The integer value of a constant polynomial with integral value.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_constant().filter(|c| c.is_integer()).map(|c| c.to_integer())
    }

    pub fn as_nat(&self) -> Option<BigUint> {
        self.as_integer().and_then(|n| n.to_biguint())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| c.is_integer())
    }

    /// Sign in the dominance order: the sign of the leading coefficient.
    pub fn signum(&self) -> Ordering {
        match self.lead() {
            None => Ordering::Equal,
            Some(c) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn is_nonneg(&self) -> bool {
        self.signum() != Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `X^k`.
    pub fn shift(&self, k: u32) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Poly {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let Some(deg) = self.degree() else {
            return Rational::zero();
        };
        let mut acc = Rational::zero();
        for k in (0..=deg).rev() {
            acc = acc * x + self.coeff(k);
        }
        acc
    }

    /// `self[X := p]`.
    pub fn compose(&self, p: &Poly) -> Poly {
        let Some(deg) = self.degree() else {
            return Poly::zero();
        };
        let mut acc = Poly::zero();
        for k in (0..=deg).rev() {
            acc = &(&acc * p) + &Poly::constant(self.coeff(k));
        }
        acc
    }

    /// Division with remainder in `Q[X]`. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let dl = d.lead().expect("nonzero").clone();
        let mut q = Poly::zero();
        let mut r = self.clone();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let c = r.lead().expect("nonzero") / &dl;
            let t = Poly::monomial(c, rd - dd);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        (q, r)
    }

    /// Exact quotient in `Q[X]`, if `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return self.is_zero().then(Poly::zero);
        }
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Forward differences `Δᵏp(0)` for `k = 0..=deg`, if all are integers.
    ///
    /// These are the coordinates of `p` in the basis `C(X,k)`; `p` is
    /// integer-valued exactly when they are all integers.
    pub fn binomial_coords(&self) -> Option<Vec<BigInt>> {
        let Some(deg) = self.degree() else {
            return Some(Vec::new());
        };
        let mut row: Vec<Rational> = (0..=deg)
            .map(|i| self.eval(&Rational::from_integer(BigInt::from(i))))
            .collect();
        let mut out = Vec::with_capacity(row.len());
        while !row.is_empty() {
            let head = &row[0];
            if !head.is_integer() {
                return None;
            }
            out.push(head.to_integer());
            row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        Some(out)
    }

    /// `C(X, k) = X(X-1)...(X-k+1)/k!`.
    pub fn binomial(k: u32) -> Poly {
        let mut p = Poly::one();
        let mut fact = BigInt::one();
        for i in 0..k {
            p = &p * &(&Poly::x() - &Poly::from_int(i64::from(i)));
            fact *= BigInt::from(i + 1);
        }
        p.scale(&Rational::new(BigInt::one(), fact))
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }
}

impl Ord for Poly {
    fn cmp(&self, other: &Poly) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for Poly {
    fn partial_cmp(&self, other: &Poly) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (i, a) in &self.coeffs {
            for (j, b) in &rhs.coeffs {
                out.add_term(i + j, &(a * b));
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl From<i64> for Poly {
    fn from(n: i64) -> Poly {
        Poly::from_int(n)
    }
}

impl From<BigUint> for Poly {
    fn from(n: BigUint) -> Poly {
        Poly::from_nat(&n)
    }
}

impl From<BigInt> for Poly {
    fn from(n: BigInt) -> Poly {
        Poly::from_bigint(n)
    }
}

impl From<Rational> for Poly {
    fn from(c: Rational) -> Poly {
        Poly::constant(c)
    }
}

pub(crate) fn render_rational(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms by descending exponent, `p/q*X^k`, no spaces.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().rev() {
            let negative = c.numer().sign() == Sign::Minus;
            let mag = c.abs();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let var = match k {
                0 => None,
                1 => Some("X".to_string()),
                _ => Some(format!("X^{k}")),
            };
            match var {
                None => f.write_str(&render_rational(&mag))?,
                Some(v) if mag.is_one() => f.write_str(&v)?,
                Some(v) => write!(f, "{}*{}", render_rational(&mag), v)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::parse_poly;

    fn p(s: &str) -> Poly {
        parse_poly(s).unwrap()
    }

    #[test]
    fn degree_of_zero_sits_below_everything() {
        assert_eq!(Poly::zero().degree(), None);
        assert!(Poly::zero().degree() < Poly::one().degree());
        assert_eq!(Poly::zero().degree_i64(), -1);
    }

    #[test]
    fn dominance_order() {
        assert!(p("X") > p("1000000"));
        assert!(p("X-5") > p("0"));
        assert!(p("X^2/1000") > p("X*999"));
        assert!(p("-X+3") < p("0"));
    }

    #[test]
    fn render_is_canonical() {
        assert_eq!(p("2X+X^2+1").to_string(), "X^2+2*X+1");
        assert_eq!(p("X/3").to_string(), "1/3*X");
        assert_eq!(p("-X + 5").to_string(), "-X+5");
        assert_eq!(p("(1/3)X^4-2X^3").to_string(), "1/3*X^4-2*X^3");
        assert_eq!(p("0").to_string(), "0");
    }

    #[test]
    fn binomial_coordinates() {
        let skolem = p("1/3*X^4-2*X^3+11/3*X^2-2*X+3");
        let coords: Vec<i64> = skolem
            .binomial_coords()
            .unwrap()
            .iter()
            .map(|c| c.to_i64().unwrap())
            .collect();
        assert_eq!(coords, vec![3, 0, 0, 0, 8]);
        assert_eq!(
            p("X^2").binomial_coords().unwrap(),
            vec![BigInt::from(0), BigInt::from(1), BigInt::from(2)]
        );
        assert!(Poly::zero().binomial_coords().unwrap().is_empty());
        assert!(p("X/2").binomial_coords().is_none());
        assert_eq!(skolem, &Poly::binomial(4).scale(&Rational::from_integer(8.into())) + &p("3"));
    }

    #[test]
    fn long_division() {
        let (q, r) = p("X^2-2").div_rem(&p("5X+7"));
        assert_eq!(q, p("X/5-7/25"));
        assert_eq!(r, p("-1/25"));
        assert_eq!(&(&q * &p("5X+7")) + &r, p("X^2-2"));
    }

    #[test]
    fn compose_and_eval() {
        let a = p("X^2+2X+1");
        assert_eq!(a.compose(&p("X-1")), p("X^2"));
        assert_eq!(a.eval(&Rational::from_integer(3.into())), Rational::from_integer(16.into()));
    }
}
