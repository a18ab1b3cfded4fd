//! Smullyan's dyadic coding of `{a,b}`-strings as naturals.
//!
//! `ε ↦ 0`, `wa ↦ 2w+1`, `wb ↦ 2w+2`. Concatenation becomes
//! `m ⊛ n = m·ℓ(n) + n` where `ℓ(n)` is the largest power of two `≤ n+1`.

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::{EditorsSplit, Error, Letter, Nat, Result, Side, Word};

pub fn sm_encode(w: &Word) -> Nat {
    w.letters().iter().fold(Nat::zero(), |acc, l| {
        acc * 2u32
            + match l {
                Letter::A => 1u32,
                Letter::B => 2u32,
            }
    })
}

pub fn sm_decode(n: &Nat) -> Word {
    let mut out = Vec::with_capacity(length(n) as usize);
    let mut n = n.clone();
    while !n.is_zero() {
        if n.is_odd() {
            out.push(Letter::A);
            n = (n - 1u32) >> 1;
        } else {
            out.push(Letter::B);
            n = (n - 2u32) >> 1;
        }
    }
    out.reverse();
    Word(out)
}

/// Length of the coded string.
pub fn length(n: &Nat) -> u64 {
    (n + 1u32).bits() - 1
}

/// `2^|n|`, the largest power of two `≤ n+1`.
pub fn ell(n: &Nat) -> Nat {
    Nat::one() << length(n)
}

pub fn dyad_concat(m: &Nat, n: &Nat) -> Nat {
    m * ell(n) + n
}

/// The tally `a^|n|`.
pub fn lambda(n: &Nat) -> Nat {
    ell(n) - 1u32
}

/// The string contains no `b`.
pub fn is_b_free(n: &Nat) -> bool {
    n == &lambda(n)
}

pub fn code_a() -> Nat {
    Nat::one()
}

pub fn code_b() -> Nat {
    Nat::from(2u32)
}

/// Frege-style pairing `Λ(x)·b·x·y`.
pub fn dyad_pair(x: &Nat, y: &Nat) -> Nat {
    let t = dyad_concat(&lambda(x), &code_b());
    dyad_concat(&dyad_concat(&t, x), y)
}

/// Inverse of [`dyad_pair`].
pub fn dyad_unpair(p: &Nat) -> Result<(Nat, Nat)> {
    let w = sm_decode(p);
    let letters = w.letters();
    let k = letters
        .iter()
        .position(|l| *l == Letter::B)
        .ok_or_else(|| Error::NotAPair(p.to_string()))?;
    if letters.len() < 2 * k + 1 {
        return Err(Error::NotAPair(p.to_string()));
    }
    let x = Word(letters[k + 1..2 * k + 1].to_vec());
    let y = Word(letters[2 * k + 1..].to_vec());
    Ok((sm_encode(&x), sm_encode(&y)))
}

/// Split `x = u ⊛ v` where `v` has the length of the tally.
pub fn dyad_split_at(x: &Nat, tally: &Nat) -> Result<(Nat, Nat)> {
    if !is_b_free(tally) {
        return Err(Error::PreconditionViolated(format!("{tally} is not a tally")));
    }
    let l = ell(tally);
    if l > ell(x) {
        return Err(Error::PreconditionViolated(format!("tally {tally} longer than {x}")));
    }
    let base = &l - 1u32;
    let (u, rest) = (x - &base).div_rem(&l);
    Ok((u, base + rest))
}

/// The `r` with `x = p ⊛ r`, if `p` is a prefix of `x`.
pub fn strip_prefix(x: &Nat, p: &Nat) -> Option<Nat> {
    let (lx, lp) = (length(x), length(p));
    if lp > lx {
        return None;
    }
    let scale = Nat::one() << (lx - lp);
    let head = p * &scale;
    if &head > x {
        return None;
    }
    let r = x - head;
    (length(&r) == lx - lp).then_some(r)
}

/// The `r` with `x = r ⊛ s`, if `s` is a suffix of `x`.
pub fn strip_suffix(x: &Nat, s: &Nat) -> Option<Nat> {
    if length(s) > length(x) {
        return None;
    }
    let (u, v) = dyad_split_at(x, &lambda(s)).ok()?;
    (&v == s).then_some(u)
}

/// Editors witness for `x ⊛ y = u ⊛ v`.
pub fn dyad_editors(x: &Nat, y: &Nat, u: &Nat, v: &Nat) -> Result<EditorsSplit<Nat>> {
    if dyad_concat(x, y) != dyad_concat(u, v) {
        return Err(Error::PreconditionViolated("x⊛y ≠ u⊛v".into()));
    }
    let (lx, lu) = (length(x), length(u));
    let side = match lx.cmp(&lu) {
        std::cmp::Ordering::Less => Side::Left,
        std::cmp::Ordering::Greater => Side::Right,
        std::cmp::Ordering::Equal => Side::Both,
    };
    let eta = match side {
        Side::Left | Side::Both => strip_prefix(u, x),
        Side::Right => strip_prefix(x, u),
    }
    .expect("equal concatenations share prefixes");
    Ok(EditorsSplit { side, eta })
}

/// A string coded by a pair of dyadic codes: a mask `b a^{k1} b a^{k2} …`
/// recording component lengths, and the payload `b x1 b x2 …`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SmUrString {
    #[serde(serialize_with = "ser_nat")]
    mask: Nat,
    #[serde(serialize_with = "ser_nat")]
    payload: Nat,
}

fn ser_nat<S: serde::Serializer>(n: &Nat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&n.to_string())
}

impl SmUrString {
    pub fn new(mask: Nat, payload: Nat) -> Result<SmUrString> {
        let mw = sm_decode(&mask);
        let pw = sm_decode(&payload);
        if mw.len() != pw.len() {
            return Err(Error::InvalidUrString("mask and payload differ in length".into()));
        }
        if mw.letters().first().is_some_and(|l| *l == Letter::A) {
            return Err(Error::InvalidUrString("mask must start with b".into()));
        }
        if mw.letters().iter().zip(pw.letters()).any(|(m, p)| *m == Letter::B && *p != Letter::B) {
            return Err(Error::InvalidUrString("payload lacks a separator under a mask b".into()));
        }
        Ok(SmUrString { mask, payload })
    }

    pub fn mask(&self) -> &Nat {
        &self.mask
    }

    pub fn payload(&self) -> &Nat {
        &self.payload
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_zero()
    }

    /// Number of components.
    pub fn count(&self) -> usize {
        sm_decode(&self.mask).letters().iter().filter(|l| **l == Letter::B).count()
    }
}

impl fmt::Display for SmUrString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.mask, self.payload)
    }
}

pub fn urs_empty() -> SmUrString {
    SmUrString { mask: Nat::zero(), payload: Nat::zero() }
}

/// `[n] = (bΛ(n), bn)`.
pub fn urs_singleton(n: &Nat) -> SmUrString {
    SmUrString {
        mask: dyad_concat(&code_b(), &lambda(n)),
        payload: dyad_concat(&code_b(), n),
    }
}

pub fn urs_concat(x: &SmUrString, y: &SmUrString) -> SmUrString {
    SmUrString {
        mask: dyad_concat(&x.mask, &y.mask),
        payload: dyad_concat(&x.payload, &y.payload),
    }
}

pub fn urs_encode(xs: &[Nat]) -> SmUrString {
    xs.iter().fold(urs_empty(), |acc, x| urs_concat(&acc, &urs_singleton(x)))
}

pub fn urs_frege(x: &SmUrString) -> Nat {
    dyad_pair(&x.mask, &x.payload)
}

pub fn urs_decode(x: &SmUrString) -> Result<Vec<Nat>> {
    let mask = sm_decode(&x.mask);
    let payload = sm_decode(&x.payload);
    let mut out = Vec::new();
    let mut i = 0;
    let (m, p) = (mask.letters(), payload.letters());
    while i < m.len() {
        if m[i] != Letter::B || p[i] != Letter::B {
            return Err(Error::InvalidUrString(format!("no separator at {i}")));
        }
        let mut j = i + 1;
        while j < m.len() && m[j] == Letter::A {
            j += 1;
        }
        out.push(sm_encode(&Word(p[i + 1..j].to_vec())));
        i = j;
    }
    Ok(out)
}

/// Split off the last component: `x = rest ⋆ [last]`.
pub fn urs_pop(x: &SmUrString) -> Option<(SmUrString, Nat)> {
    let mut xs = urs_decode(x).ok()?;
    let last = xs.pop()?;
    Some((urs_encode(&xs), last))
}

/// Editors witness for `α ⋆ β = γ ⋆ δ`.
pub fn urs_editors_split(
    alpha: &SmUrString,
    beta: &SmUrString,
    gamma: &SmUrString,
    delta: &SmUrString,
) -> Result<EditorsSplit<SmUrString>> {
    if urs_concat(alpha, beta) != urs_concat(gamma, delta) {
        return Err(Error::PreconditionViolated("α⋆β ≠ γ⋆δ".into()));
    }
    let m = dyad_editors(&alpha.mask, &beta.mask, &gamma.mask, &delta.mask)?;
    let p = dyad_editors(&alpha.payload, &beta.payload, &gamma.payload, &delta.payload)?;
    debug_assert_eq!(m.side, p.side);
    let eta = SmUrString::new(m.eta, p.eta)?;
    Ok(EditorsSplit { side: m.side, eta })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(v: u64) -> Nat {
        Nat::from(v)
    }

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn code_table() {
        let table = [(0, ""), (1, "a"), (2, "b"), (3, "aa"), (4, "ab"), (5, "ba"), (6, "bb"), (19, "abaa")];
        for (code, word) in table {
            assert_eq!(sm_encode(&w(word)), n(code));
            assert_eq!(sm_decode(&n(code)), w(word));
        }
    }

    #[test]
    fn concat_examples() {
        assert_eq!(dyad_concat(&n(1), &n(2)), n(4));
        assert_eq!(dyad_concat(&n(5), &n(5)), n(25));
        assert_eq!(dyad_pair(&n(0), &n(0)), n(2));
        assert_eq!(dyad_pair(&n(1), &n(0)), n(9));
        assert_eq!(dyad_unpair(&n(9)).unwrap(), (n(1), n(0)));
    }

    #[test]
    fn split_examples() {
        assert_eq!(dyad_split_at(&n(4), &n(1)).unwrap(), (n(1), n(2)));
        assert_eq!(dyad_split_at(&n(19), &n(3)).unwrap(), (n(4), n(3)));
        assert!(dyad_split_at(&n(4), &n(2)).is_err());
        assert!(dyad_split_at(&n(1), &n(3)).is_err());
    }

    #[test]
    fn ur_string_examples() {
        assert_eq!(urs_singleton(&n(0)), SmUrString { mask: n(2), payload: n(2) });
        let s = urs_encode(&[n(1), n(2)]);
        assert_eq!((s.mask().clone(), s.payload().clone()), (n(25), n(26)));
        assert_eq!(urs_decode(&s).unwrap(), vec![n(1), n(2)]);
        assert_eq!(urs_decode(&urs_empty()).unwrap(), Vec::<Nat>::new());
        assert_eq!(SmUrString::new(n(5), n(5)).unwrap(), urs_singleton(&n(1)));
        assert!(SmUrString::new(n(4), n(4)).is_err());
        assert!(SmUrString::new(n(5), n(3)).is_err());
        assert!(SmUrString::new(n(2), n(5)).is_err());
    }

    #[test]
    fn editors_examples() {
        let enc = |xs: &[u64]| urs_encode(&xs.iter().map(|&v| n(v)).collect::<Vec<_>>());
        let split = urs_editors_split(&enc(&[1]), &enc(&[2, 3]), &enc(&[1, 2]), &enc(&[3])).unwrap();
        assert_eq!(split, EditorsSplit { side: Side::Left, eta: enc(&[2]) });
        let split = urs_editors_split(&enc(&[1, 2]), &enc(&[]), &enc(&[1]), &enc(&[2])).unwrap();
        assert_eq!(split, EditorsSplit { side: Side::Right, eta: enc(&[2]) });
        let split = urs_editors_split(&enc(&[1]), &enc(&[2]), &enc(&[1]), &enc(&[2])).unwrap();
        assert_eq!(split, EditorsSplit { side: Side::Both, eta: enc(&[]) });
    }
}
