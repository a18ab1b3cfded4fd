//! Shared fixtures for the benchmarks.

use urcode_core::markov::{parse_mat, Mat2, RingMat};
use urcode_core::rings::{parse_poly, ModelId, Poly};
use urcode_core::{Letter, Nat, Word};

/// The matrices whose normal forms are benchmarked, as `M2` members.
pub fn named_matrices() -> Vec<(&'static str, Mat2)> {
    [
        ("A", "[[9,3X+2],[3X+4,X^2+2X+1]]"),
        ("B", "[[5X+7,X^2-2],[25,5X-7]]"),
        ("S", "[[X^2-6X+10,1/3X^4-2X^3+11/3X^2-2X+3],[3,X^2+1]]"),
    ]
    .into_iter()
    .map(|(name, text)| (name, parse_mat(ModelId::M2, text).expect("fixture")))
    .collect()
}

/// `A^{e1} B^{e2} …` with exponents `k·X + k` for `k = 1..=runs`.
pub fn long_product(runs: usize) -> Mat2 {
    let mut m = RingMat::identity();
    let mut letter = Letter::A;
    for k in 1..=runs as i64 {
        let e = parse_poly(&format!("{k}X+{k}")).expect("fixture");
        m = m.mul(&RingMat::letter_pow(letter, &e));
        letter = letter.swap();
    }
    Mat2::from_ring(ModelId::M2, m).expect("product of generators")
}

/// `len` naturals `0, 7, 14, …` reduced below `bound`.
pub fn sequence(len: usize, bound: u64) -> Vec<Nat> {
    (0..len as u64).map(|i| Nat::from((i * 7919) % bound)).collect()
}

/// The alternating word `abab…` of length `len`.
pub fn word(len: usize) -> Word {
    Word((0..len).map(|i| if i % 2 == 0 { Letter::A } else { Letter::B }).collect())
}

/// Dividend/divisor pairs of growing degree.
pub fn division_pairs() -> Vec<(Poly, Poly)> {
    [("X^2+2X+1", "9"), ("1/3X^4-2X^3+11/3X^2-2X+3", "X^2+1"), ("7X^6+X+5", "5X^3/2+4")]
        .into_iter()
        .map(|(a, b)| (parse_poly(a).expect("fixture"), parse_poly(b).expect("fixture")))
        .collect()
}
