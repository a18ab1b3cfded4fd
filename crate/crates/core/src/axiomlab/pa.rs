//! The arithmetic axioms `pa1`–`pa21` and `pa17-`.

use num_traits::{One, Zero};

use super::sample::Sampler;
use super::{run_instances, AxiomId, SampleConfig, Status, Verdict, Witness};
use crate::rings::{self, is_member, m2_euclid, ModelElem, ModelId, Poly};
use crate::{dyadic, Error, Nat, Rational, Result};

fn arity(axiom: AxiomId) -> usize {
    if axiom.minus {
        return 4;
    }
    match axiom.index {
        1 | 4 | 10 | 14 | 16 | 19 => 1,
        2 | 5 | 8 | 11 | 15 | 17 | 20 | 21 => 2,
        _ => 3,
    }
}

fn nat_only(axiom: AxiomId) -> bool {
    !axiom.minus && (18..=21).contains(&axiom.index)
}

fn elem(m: ModelId, p: &str) -> ModelElem {
    ModelElem::parse(m, p).expect("probe literal")
}

fn probes(m: ModelId, axiom: AxiomId) -> Vec<Vec<ModelElem>> {
    let mut out = Vec::new();
    match (m, axiom.index, axiom.minus) {
        (ModelId::QNonNeg, 11, _) => out.push(vec![elem(m, "1"), elem(m, "1/2")]),
        (ModelId::QNonNeg, 14, _) => out.push(vec![elem(m, "1/2")]),
        (ModelId::M0 | ModelId::M1, 17, true) => {
            out.push(["9", "3X+2", "3X+4", "X^2+2X+1"].iter().map(|p| elem(m, p)).collect())
        }
        (ModelId::M0 | ModelId::M1, 17, false) => out.push(vec![elem(m, "3X+2"), elem(m, "9")]),
        (ModelId::M0 | ModelId::M1 | ModelId::M2, 16, _) => out.push(vec![elem(m, "X")]),
        _ => {}
    }
    out
}

fn sample(m: ModelId, axiom: AxiomId, s: &mut Sampler) -> Vec<ModelElem> {
    if axiom.minus {
        let g = s.sl2(m, 5);
        return (0..4).map(|k| g.entry(k / 2, k % 2)).collect();
    }
    match axiom.index {
        9 | 11 | 12 | 13 | 15 if s.coin(0.5) => {
            // make the antecedent true more often
            let mut v: Vec<ModelElem> = (0..arity(axiom)).map(|_| s.elem(m)).collect();
            v.sort_by(|a, b| a.poly().cmp(b.poly()));
            if axiom.index != 9 {
                v.swap(0, 1);
            }
            v
        }
        18 => {
            let (y, z) = (s.elem(m), s.elem(m));
            let (yn, zn) = (y.as_nat().expect("nat"), z.as_nat().expect("nat"));
            let f1 = rings::gcd(&yn, &s.small_nat(1000));
            let f2 = rings::gcd(&zn, &s.small_nat(1000));
            let x = if s.coin(0.8) { f1 * f2 } else { s.elem(m).as_nat().expect("nat") };
            vec![ModelElem::nat(x), y, z]
        }
        20 => {
            let pick = |s: &mut Sampler| {
                if s.coin(0.7) {
                    ModelElem::nat(Nat::one() << s.range(0, 80) as usize)
                } else {
                    s.elem(m)
                }
            };
            vec![pick(s), pick(s)]
        }
        21 if s.coin(0.5) => {
            let k = s.small_nat(500);
            let (x, y) = (s.small_nat(10_000), s.small_nat(10_000));
            vec![ModelElem::nat(x * &k), ModelElem::nat(y * &k)]
        }
        n => (0..arity(AxiomId::pa(n))).map(|_| s.elem(m)).collect(),
    }
}

/// `∃z ∃r (r < a ∧ b = z·a + r)`, decided without the division routine.
///
/// A constant divisor `k` only admits the remainders `0..k` in the discrete
/// models, so they are enumerated. Otherwise division in `M2` is unique and a
/// submodel has a quotient iff it contains the `M2` one.
pub(crate) fn has_euclidean_division(m: ModelId, b: &Poly, a: &Poly) -> bool {
    assert!(!a.is_zero(), "zero divisor");
    if m == ModelId::QNonNeg {
        return true;
    }
    if let Some(k) = a.as_i64().filter(|k| *k <= 1 << 10) {
        let kq = Rational::from_integer(k.into());
        return (0..k).any(|r| {
            let rest = b - &Poly::from_int(r);
            let z = rest.scale(&(Rational::one() / &kq));
            rest.is_nonneg() && is_member(m, &z)
        });
    }
    let (q, r) = m2_euclid(b, a);
    is_member(m, &q) && is_member(m, &r)
}

fn all_elem(v: &[ModelElem], m: ModelId) -> bool {
    v.iter().all(|x| x.model() == m)
}

/// Truth of one instance. `Fails` on an existential is always a proof.
fn eval(m: ModelId, axiom: AxiomId, xs: &[ModelElem]) -> Result<Verdict> {
    if xs.len() != arity(axiom) || !all_elem(xs, m) {
        return Err(Error::PreconditionViolated(format!("{axiom} takes {} elements of {m}", arity(axiom))));
    }
    let p = |i: usize| xs[i].poly();
    let zero = Poly::zero();
    let one = Poly::one();
    let v = match (axiom.index, axiom.minus) {
        (1, _) => &(p(0) + &zero) == p(0),
        (2, _) => p(0) + p(1) == p(1) + p(0),
        (3, _) => &(p(0) + p(1)) + p(2) == p(0) + &(p(1) + p(2)),
        (4, _) => &(p(0) * &one) == p(0),
        (5, _) => p(0) * p(1) == p(1) * p(0),
        (6, _) => &(p(0) * p(1)) * p(2) == p(0) * &(p(1) * p(2)),
        (7, _) => p(0) * &(p(1) + p(2)) == &(p(0) * p(1)) + &(p(0) * p(2)),
        (8, _) => p(0) <= p(1) || p(1) <= p(0),
        (9, _) => !(p(0) <= p(1) && p(1) <= p(2)) || p(0) <= p(2),
        (10, _) => !(&(p(0) + &one) <= p(0)),
        (11, _) => !(p(1) <= p(0)) || p(1) == p(0) || &(p(1) + &one) <= p(0),
        (12, _) => !(p(1) <= p(0)) || p(1) + p(2) <= p(0) + p(2),
        (13, _) => !(p(1) <= p(0)) || p(1) * p(2) <= p(0) * p(2),
        // the predecessor x - 1 is unique in the ring
        (14, _) => p(0).is_zero() || is_member(m, &(p(0) - &one)),
        // so is the difference x - y
        (15, _) => !(p(1) <= p(0)) || is_member(m, &(p(0) - p(1))),
        (16, _) => has_euclidean_division(m, p(0), &Poly::from_int(2)),
        (17, false) => p(1).is_zero() || has_euclidean_division(m, p(0), p(1)),
        (17, true) => {
            let bez = &(p(0) * p(3)) - &(p(1) * p(2)) == one;
            !bez || has_euclidean_division(m, p(1), p(0))
        }
        (18, _) => {
            let n = |i: usize| xs[i].as_nat().expect("nat");
            let (x, y, z) = (n(0), n(1), n(2));
            let yz = &y * &z;
            let div = |d: &Nat, t: &Nat| if d.is_zero() { t.is_zero() } else { (t % d).is_zero() };
            if !div(&x, &yz) {
                true
            } else if x.is_zero() && y.is_zero() && z.is_zero() {
                true
            } else {
                let (u, w) = rings::primal_split(&x, &y, &z)?;
                &u * &w == x && div(&u, &y) && div(&w, &z)
            }
        }
        (19, _) => {
            let x = xs[0].as_nat().expect("nat");
            let y = dyadic::ell(&x);
            rings::pow2_smullyan(&y) && y <= &x + 1u32 && &x + 1u32 < &y * 2u32
        }
        (20, _) => {
            let (x, y) = (xs[0].as_nat().expect("nat"), xs[1].as_nat().expect("nat"));
            let ante = rings::pow2_smullyan(&x) && rings::pow2_smullyan(&y) && x <= y;
            !ante || (&y % &x).is_zero()
        }
        (21, _) => {
            let (x, y) = (xs[0].as_nat().expect("nat"), xs[1].as_nat().expect("nat"));
            let z = rings::gcd(&x, &y);
            let div = |d: &Nat, t: &Nat| if d.is_zero() { t.is_zero() } else { (t % d).is_zero() };
            // the universal over u is checked on small u and on the divisors in play
            let mut us: Vec<Nat> = (0u32..=64).map(Nat::from).collect();
            us.extend([x.clone(), y.clone(), z.clone(), &z + 1u32, &z * 2u32]);
            us.iter().all(|u| div(u, &z) == (div(u, &x) && div(u, &y)))
        }
        _ => unreachable!("axiom ids are validated"),
    };
    Ok(v.into())
}

pub(super) fn check(
    m: ModelId,
    axiom: AxiomId,
    cfg: &SampleConfig,
    s: &mut Sampler,
) -> Option<Result<(Status, usize)>> {
    if nat_only(axiom) && m != ModelId::Nat {
        return None;
    }
    Some(run_instances(
        probes(m, axiom),
        cfg.count,
        || sample(m, axiom, s),
        |xs| eval(m, axiom, xs),
        Witness::Arith,
    ))
}

pub(super) fn verify(m: ModelId, axiom: AxiomId, xs: &[ModelElem]) -> Result<bool> {
    if axiom.family != super::Family::Pa || (nat_only(axiom) && m != ModelId::Nat) {
        return Ok(false);
    }
    if xs.len() != arity(axiom) || !all_elem(xs, m) {
        return Ok(false);
    }
    Ok(eval(m, axiom, xs)? == Verdict::Fails)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Whether the Euclidean division of `b` by `a` exists, via the division routine.
    fn euclidean_by_routine(b: &ModelElem, a: &ModelElem) -> Result<bool> {
        if b.model() == ModelId::QNonNeg {
            return Ok(true);
        }
        match rings::try_euc_div(b, a) {
            Ok(r) => Ok(r.remainder.poly() < a.poly() && &(&(r.quotient.poly() * a.poly()) + r.remainder.poly()) == b.poly()),
            Err(Error::NotEuclidean { .. }) => Ok(false),
            Err(e) => Err(e),
        }
    }

    #[test]
    fn dual_division_routes_agree() {
        let mut s = Sampler::new(7, 200);
        for m in [ModelId::Nat, ModelId::M0, ModelId::M1, ModelId::M2] {
            for _ in 0..200 {
                let (b, a) = (s.elem(m), s.nonzero_elem(m));
                assert_eq!(
                    has_euclidean_division(m, b.poly(), a.poly()),
                    euclidean_by_routine(&b, &a).unwrap(),
                    "{m}: {b} by {a}"
                );
            }
        }
    }

    #[test]
    fn parity_fails_in_polynomial_submodels() {
        let x = |m| elem(m, "X");
        assert_eq!(eval(ModelId::M0, AxiomId::pa(16), &[x(ModelId::M0)]).unwrap(), Verdict::Fails);
        assert_eq!(eval(ModelId::M1, AxiomId::pa(16), &[x(ModelId::M1)]).unwrap(), Verdict::Fails);
        assert_eq!(eval(ModelId::M2, AxiomId::pa(16), &[x(ModelId::M2)]).unwrap(), Verdict::Holds);
    }

    #[test]
    fn rational_discreteness_fails() {
        let q = ModelId::QNonNeg;
        assert!(verify(q, AxiomId::pa(11), &[elem(q, "1"), elem(q, "1/2")]).unwrap());
        assert!(verify(q, AxiomId::pa(14), &[elem(q, "1/2")]).unwrap());
        assert!(!verify(q, AxiomId::pa(14), &[elem(q, "3/2")]).unwrap());
    }
}
