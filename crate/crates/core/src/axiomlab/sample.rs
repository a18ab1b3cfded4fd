//! Seeded generators for model elements, matrices and strings.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::markov::{Mat2, RingMat};
use crate::rings::{ModelElem, ModelId, Poly};
use crate::{Letter, Nat, Rational};

pub(crate) struct Sampler {
    rng: ChaCha8Rng,
    size: u64,
}

impl Sampler {
    pub fn new(seed: u64, size: u64) -> Sampler {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed), size: size.max(4) }
    }

    pub fn coin(&mut self, p: f64) -> bool {
        self.rng.gen_bool(p)
    }

    pub fn range(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn below(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    /// Coefficient bound for polynomials, kept small so products stay cheap.
    fn coeff_bound(&self) -> i64 {
        self.size.min(40) as i64
    }

    pub fn nat(&mut self) -> Nat {
        match self.below(4) {
            0 => Nat::from(self.rng.gen_range(0u64..4)),
            1 | 2 => Nat::from(self.rng.gen_range(0..=self.size)),
            _ => Nat::from(self.rng.gen::<u64>()),
        }
    }

    pub fn small_nat(&mut self, hi: u64) -> Nat {
        Nat::from(self.rng.gen_range(0..=hi))
    }

    fn rational(&mut self, num_bound: i64, den_max: i64) -> Rational {
        Rational::new(BigInt::from(self.range(-num_bound, num_bound)), BigInt::from(self.range(1, den_max)))
    }

    fn positive(&mut self, x: Rational) -> Rational {
        if x.is_zero() {
            Rational::one()
        } else {
            x.abs()
        }
    }

    /// A random element of the model, biased towards small values.
    pub fn elem(&mut self, model: ModelId) -> ModelElem {
        let b = self.coeff_bound();
        if self.coin(0.2) {
            let v = self.range(0, 3);
            return ModelElem::new(model, Poly::from_int(v)).expect("small naturals lie in every model");
        }
        let p = match model {
            ModelId::Nat => Poly::from_nat(&self.nat()),
            ModelId::QNonNeg => Poly::constant(self.rational(b, 12).abs()),
            ModelId::M0 => {
                let deg = self.range(0, 3) as u32;
                let mut terms: Vec<(u32, Rational)> =
                    (0..deg).map(|k| (k, Rational::from_integer(self.range(-b, b).into()))).collect();
                let lead = Rational::from_integer(self.range(if deg == 0 { 0 } else { 1 }, b).into());
                terms.push((deg, lead));
                Poly::from_terms(terms)
            }
            ModelId::M1 => {
                let deg = self.range(0, 3) as u32;
                let mut p = Poly::zero();
                for k in 0..deg {
                    p = &p + &Poly::binomial(k).scale(&Rational::from_integer(self.range(-b, b).into()));
                }
                let lead = self.range(if deg == 0 { 0 } else { 1 }, b);
                &p + &Poly::binomial(deg).scale(&Rational::from_integer(lead.into()))
            }
            ModelId::M2 => {
                let deg = self.range(0, 3) as u32;
                let mut terms = vec![(0, Rational::from_integer(self.range(-b, b).into()))];
                for k in 1..deg {
                    terms.push((k, self.rational(b, 6)));
                }
                if deg == 0 {
                    terms = vec![(0, Rational::from_integer(self.range(0, b).into()))];
                } else {
                    let lead = self.rational(b, 6);
                    terms.push((deg, self.positive(lead)));
                }
                Poly::from_terms(terms)
            }
        };
        ModelElem::new(model, p).expect("sampler produces members")
    }

    pub fn nonzero_elem(&mut self, model: ModelId) -> ModelElem {
        loop {
            let e = self.elem(model);
            if !e.is_zero() {
                return e;
            }
        }
    }

    /// Exponent for a run; over the naturals kept small.
    fn exponent(&mut self, model: ModelId) -> Poly {
        if model == ModelId::Nat {
            Poly::from_int(self.range(1, 5))
        } else {
            self.nonzero_elem(model).into_poly()
        }
    }

    /// A product of up to `max_runs` alternating runs.
    pub fn sl2(&mut self, model: ModelId, max_runs: usize) -> Mat2 {
        let runs = self.below(max_runs + 1);
        let mut letter = if self.coin(0.5) { Letter::A } else { Letter::B };
        let mut m = RingMat::identity();
        for _ in 0..runs {
            let e = self.exponent(model);
            m = m.mul(&RingMat::letter_pow(letter, &e));
            letter = letter.swap();
        }
        Mat2::from_ring(model, m).expect("products of generators lie in SL2")
    }

    pub fn word(&mut self, alphabet: &[u8], max_len: usize) -> String {
        let n = self.below(max_len + 1);
        (0..n).map(|_| alphabet[self.below(alphabet.len())] as char).collect()
    }

    /// A dyadic code of a string of length at most `max_len`.
    pub fn dyadic(&mut self, max_len: u32) -> Nat {
        let len = self.range(0, i64::from(max_len)) as u64;
        // codes of length `len` are [2^len - 1, 2^(len+1) - 2]
        let lo = (Nat::from(1u32) << len) - 1u32;
        let span: u64 = if len >= 63 { u64::MAX } else { (1u64 << len) - 1 };
        lo + Nat::from(self.rng.gen_range(0..=span))
    }
}
