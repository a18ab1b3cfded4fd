//! Cantor pairing and β-function coding of finite sequences of naturals.
//!
//! A sequence `[x_0, …, x_{n-1}]` is coded as `⟨n, ⟨u, v⟩⟩` where
//! `x_i = u mod (1 + (i+1)·v)`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::{Error, Nat, Result};

/// `⟨x, y⟩ = (x+y)² + x`.
pub fn cantor_pair(x: &Nat, y: &Nat) -> Nat {
    let s = x + y;
    &s * &s + x
}

pub fn cantor_unpair(p: &Nat) -> Result<(Nat, Nat)> {
    let s = p.sqrt();
    let x = p - &s * &s;
    if x <= s {
        let y = &s - &x;
        Ok((x, y))
    } else {
        Err(Error::NotAPair(p.to_string()))
    }
}

fn modulus(v: &Nat, i: &Nat) -> Nat {
    Nat::one() + (i + 1u32) * v
}

/// The β-function on a pair code `w = ⟨u, v⟩`: `u mod (1 + (i+1)·v)`.
///
/// The residue is taken with the strict bound `x < 1 + (i+1)·v`, which makes
/// the relation functional.
pub fn beta_get(w: &Nat, i: &Nat) -> Result<Nat> {
    let (u, v) = cantor_unpair(w)?;
    Ok(u % modulus(&v, i))
}

/// CRT for the moduli `m_k = 1 + (k+1)·v`, assuming `k! · (k+1) | v` for
/// every index. Modulo `m_k` we have `(k+1)·v ≡ -1`, hence `m_j ≡ (k-j)/(k+1)`
/// and `∏_{j<k} m_j ≡ k!/(k+1)^k`. A divisor `d` of `(k+1)·v` has inverse
/// `-(k+1)·v/d`, so no extended gcd on the large moduli is needed.
fn crt(residues: &[Nat], v: &Nat) -> Nat {
    let mut x = Nat::zero();
    let mut m = Nat::one();
    let mut fact = Nat::one();
    for (k, r) in residues.iter().enumerate() {
        let k1 = Nat::from(k + 1);
        let mk = modulus(v, &Nat::from(k));
        // inverse of the running product mod m_k
        let inv_fact = &mk - ((&k1 * v) / &fact) % &mk;
        let inv = (k1.pow(k as u32) * inv_fact) % &mk;
        // x + m·t ≡ r (mod m_k)
        let diff = (r + &mk - &x % &mk) % &mk;
        let t = (diff * inv) % &mk;
        x += &m * t;
        m *= &mk;
        fact *= k1;
    }
    x
}

fn factorial(n: u64) -> Nat {
    (1..=n).fold(Nat::one(), |acc, k| acc * k)
}

/// Largest `c` for which `v = c!` is used.
const FACTORIAL_LIMIT: u64 = 20;

/// `c!` for small `c`; otherwise the least multiple of `n!` that is `≥ c`.
/// Either way `n! | v` (the moduli are then pairwise coprime) and `v ≥ c`
/// (they exceed every element). Past the limit `c!` has hundreds of
/// thousands of digits and decoding needs square roots of it.
fn modulus_base(c: &Nat, n: u64) -> Nat {
    match c.to_u64() {
        Some(c) if c <= FACTORIAL_LIMIT => factorial(c),
        _ => {
            let step = factorial(n);
            c.div_ceil(&step) * step
        }
    }
}

pub fn beta_encode(xs: &[Nat]) -> Nat {
    if xs.is_empty() {
        return cantor_pair(&Nat::zero(), &cantor_pair(&Nat::zero(), &Nat::zero()));
    }
    let n = Nat::from(xs.len());
    let c = xs.iter().max().expect("nonempty").max(&n) + 1u32;
    let v = modulus_base(&c, xs.len() as u64);
    let u = crt(xs, &v);
    cantor_pair(&n, &cantor_pair(&u, &v))
}

fn split(s: &Nat) -> Result<(Nat, Nat)> {
    let (n, w) = cantor_unpair(s).map_err(|_| Error::NotASequence(s.to_string()))?;
    cantor_unpair(&w).map_err(|_| Error::NotASequence(s.to_string()))?;
    Ok((n, w))
}

pub fn beta_length(s: &Nat) -> Result<Nat> {
    split(s).map(|(n, _)| n)
}

pub fn beta_project(s: &Nat, i: &Nat) -> Result<Nat> {
    let (n, w) = split(s)?;
    if i >= &n {
        return Err(Error::IndexOutOfRange { index: i.to_string(), length: n.to_string() });
    }
    beta_get(&w, i)
}

pub fn beta_decode(s: &Nat) -> Result<Vec<Nat>> {
    let (n, w) = split(s)?;
    let (u, v) = cantor_unpair(&w)?;
    let n = n.to_u64().ok_or_else(|| Error::Malformed("sequence length too large".into()))?;
    Ok((0..n).map(|i| &u % modulus(&v, &BigUint::from(i))).collect())
}

pub fn beta_append(s: &Nat, x: &Nat) -> Result<Nat> {
    let mut xs = beta_decode(s)?;
    xs.push(x.clone());
    Ok(beta_encode(&xs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(cantor_pair(&n(1), &n(2)), n(10));
        assert_eq!(cantor_unpair(&n(10)).unwrap(), (n(1), n(2)));
        assert_eq!(cantor_unpair(&n(2)).unwrap(), (n(1), n(0)));
        assert!(matches!(cantor_unpair(&n(3)), Err(Error::NotAPair(_))));
    }

    #[test]
    fn unpair_agrees_with_exhaustive_scan() {
        for p in 0u64..400 {
            let scan: Vec<(u64, u64)> = (0..=p)
                .flat_map(|x| (0..=p).map(move |y| (x, y)))
                .filter(|&(x, y)| (x + y) * (x + y) + x == p)
                .collect();
            match cantor_unpair(&n(p)) {
                Ok((x, y)) => assert_eq!(scan, vec![(x.to_u64().unwrap(), y.to_u64().unwrap())]),
                Err(_) => assert!(scan.is_empty(), "{p}"),
            }
        }
    }

    #[test]
    fn beta_examples() {
        let w = cantor_pair(&n(52), &n(24));
        assert_eq!(beta_get(&w, &n(0)).unwrap(), n(2));
        assert_eq!(beta_get(&w, &n(1)).unwrap(), n(3));
        let s = beta_encode(&[n(2), n(3)]);
        assert_eq!(s, cantor_pair(&n(2), &w));
        assert_eq!(beta_encode(&[]), n(0));
        assert_eq!(beta_decode(&n(0)).unwrap(), Vec::<Nat>::new());
        assert!(matches!(beta_project(&s, &n(2)), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(beta_length(&n(3)), Err(Error::NotASequence(_))));
        assert_eq!(beta_decode(&beta_append(&s, &n(7)).unwrap()).unwrap(), vec![n(2), n(3), n(7)]);
    }

    #[test]
    fn large_elements_use_a_multiple_of_n_factorial() {
        let xs = [n(10_000), n(0), n(9_999)];
        let s = beta_encode(&xs);
        let (_, w) = cantor_unpair(&s).unwrap();
        let (_, v) = cantor_unpair(&w).unwrap();
        assert_eq!(v, n(10_002));
        assert_eq!(beta_decode(&s).unwrap(), xs);
    }

    #[test]
    fn non_strict_bound_is_not_functional() {
        // u ≡ 0 mod m: with x ≤ m both 0 and m satisfy u = q·m + x.
        let (u, m) = (n(50), n(25));
        let witnesses: Vec<u64> = (0..=50u64)
            .filter(|&x| {
                let x = n(x);
                x <= m && u >= x && ((&u - &x) % &m).is_zero()
            })
            .collect();
        assert_eq!(witnesses, vec![0, 25]);
    }
}
