//! Concrete string structures: partitions of a word, common refinements,
//! ur-strings over a letter alphabet, and the monoid of normal forms of the
//! rewrite system `abc → b`.

mod srs;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

pub use srs::{
    is_srs_normal, srs_all_normal_forms, srs_bicancel_counterexample, srs_concat,
    srs_editors_witness, srs_normal_words, srs_normalize, srs_one_step, validate_srs_word,
};

/// A word cut into nonempty consecutive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Partition {
    base: String,
    parts: Vec<String>,
}

/// `f[i]` is the index of the coarser part containing finer part `i`.
pub type RefinementMap = Vec<usize>;

impl Partition {
    pub fn new(parts: Vec<String>) -> Result<Partition> {
        if parts.iter().any(|p| p.is_empty()) {
            return Err(Error::Malformed("partition parts must be nonempty".into()));
        }
        Ok(Partition { base: parts.concat(), parts })
    }

    /// The partition of `base` cut at the given positions (strictly inside).
    pub fn from_cuts(base: &str, cuts: &[usize]) -> Result<Partition> {
        let mut bounds = vec![0];
        bounds.extend_from_slice(cuts);
        bounds.push(base.len());
        if bounds.windows(2).any(|w| w[0] >= w[1]) && !base.is_empty() {
            return Err(Error::Malformed("cuts must increase strictly inside the word".into()));
        }
        if base.is_empty() {
            return if cuts.is_empty() { Partition::new(Vec::new()) } else { Err(Error::Malformed("cut in empty word".into())) };
        }
        Partition::new(bounds.windows(2).map(|w| base[w[0]..w[1]].to_string()).collect())
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn parts(&self) -> &[String] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Interior cut positions.
    pub fn cuts(&self) -> Vec<usize> {
        let mut pos = 0;
        let mut out = Vec::new();
        for p in &self.parts[..self.parts.len().saturating_sub(1)] {
            pos += p.len();
            out.push(pos);
        }
        out
    }

    /// All partitions of `base`.
    pub fn all_of(base: &str) -> Vec<Partition> {
        let n = base.len();
        if n == 0 {
            return vec![Partition { base: String::new(), parts: Vec::new() }];
        }
        (0u32..1 << (n - 1))
            .map(|mask| {
                let cuts: Vec<usize> = (1..n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                Partition::from_cuts(base, &cuts).expect("valid cuts")
            })
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.parts.join("|"))
    }
}

/// Parts separated by `|` or `,`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Partition> {
        if s.is_empty() || s == "ε" {
            return Partition::new(Vec::new());
        }
        Partition::new(s.split(['|', ',']).map(str::to_string).collect())
    }
}

fn refine(alpha: &[String], beta: &[String]) -> (Vec<String>, RefinementMap, RefinementMap) {
    let (Some((u, a0)), Some((v, b0))) = (alpha.split_last(), beta.split_last()) else {
        return (Vec::new(), Vec::new(), Vec::new());
    };
    let la: usize = a0.iter().map(String::len).sum();
    let lb: usize = b0.iter().map(String::len).sum();
    let (n, k) = (alpha.len(), beta.len());
    if la <= lb {
        // u = z·v
        let z = &u[..u.len() - v.len()];
        let mut a1 = a0.to_vec();
        if !z.is_empty() {
            a1.push(z.to_string());
        }
        let (mut g, mut f, mut h) = refine(&a1, b0);
        g.push(v.clone());
        f.push(n - 1);
        h.push(k - 1);
        (g, f, h)
    } else {
        // v = z·u
        let z = &v[..v.len() - u.len()];
        let mut b1 = b0.to_vec();
        b1.push(z.to_string());
        let (mut g, mut f, mut h) = refine(a0, &b1);
        g.push(u.clone());
        f.push(n - 1);
        h.push(k - 1);
        (g, f, h)
    }
}

/// The coarsest common refinement `γ` of two partitions of the same word,
/// with the maps `γ → α` and `γ → β`.
pub fn common_refinement(alpha: &Partition, beta: &Partition) -> Result<(Partition, RefinementMap, RefinementMap)> {
    if alpha.base != beta.base {
        return Err(Error::BaseMismatch);
    }
    let (parts, f, g) = refine(&alpha.parts, &beta.parts);
    Ok((Partition { base: alpha.base.clone(), parts }, f, g))
}

/// `f` is a surjective, weakly monotone map from the parts of `gamma` onto
/// those of `alpha` such that each part of `alpha` is the concatenation of its
/// preimage.
pub fn refinement_check(gamma: &Partition, alpha: &Partition, f: &[usize]) -> bool {
    if gamma.base != alpha.base || f.len() != gamma.len() {
        return false;
    }
    if f.windows(2).any(|w| w[0] > w[1] || w[1] > w[0] + 1) {
        return false;
    }
    if alpha.is_empty() {
        return gamma.is_empty();
    }
    if f.first() != Some(&0) || f.last() != Some(&(alpha.len() - 1)) {
        return false;
    }
    (0..alpha.len()).all(|j| {
        let glued: String = gamma.parts.iter().zip(f).filter(|(_, &t)| t == j).map(|(p, _)| p.as_str()).collect();
        glued == alpha.parts[j]
    })
}

/// The refinement map `δ → γ`, if `δ` refines `γ`.
pub fn embed(delta: &Partition, gamma: &Partition) -> Result<RefinementMap> {
    if delta.base != gamma.base {
        return Err(Error::BaseMismatch);
    }
    let mut out = Vec::with_capacity(delta.len());
    let mut gi = 0;
    let mut g_end = gamma.parts.first().map_or(0, String::len);
    let mut pos = 0;
    for part in &delta.parts {
        while pos >= g_end {
            gi += 1;
            g_end += gamma.parts[gi].len();
        }
        pos += part.len();
        if pos > g_end {
            return Err(Error::NoMorphism);
        }
        out.push(gi);
    }
    Ok(out)
}

/// `[x] = b·x` for a `b`-free word `x`.
pub fn urs_str_singleton(x: &str) -> Result<String> {
    if x.contains('b') {
        return Err(Error::PreconditionViolated(format!("{x} contains b")));
    }
    Ok(format!("b{x}"))
}

/// Split an ur-string `b x1 b x2 …` into its components.
pub fn urs_str_decode(s: &str) -> Result<Vec<String>> {
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let rest = s.strip_prefix('b').ok_or_else(|| Error::InvalidUrString(s.to_string()))?;
    Ok(rest.split('b').map(str::to_string).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn refinement_example() {
        let (g, f, h) = common_refinement(&p("ab|c"), &p("a|bc")).unwrap();
        assert_eq!(g, p("a|b|c"));
        assert_eq!(f, vec![0, 0, 1]);
        assert_eq!(h, vec![0, 1, 1]);
        assert!(refinement_check(&g, &p("ab|c"), &f));
        assert!(refinement_check(&g, &p("a|bc"), &h));
        assert!(!refinement_check(&g, &p("a|bc"), &f));
    }

    #[test]
    fn refinement_errors() {
        assert_eq!(common_refinement(&p("ab"), &p("ba")), Err(Error::BaseMismatch));
        assert_eq!(embed(&p("ab|c"), &p("a|bc")), Err(Error::NoMorphism));
        assert_eq!(embed(&p("a|b|c"), &p("a|bc")).unwrap(), vec![0, 1, 1]);
        let (g, f, h) = common_refinement(&p(""), &p("")).unwrap();
        assert!(g.is_empty() && f.is_empty() && h.is_empty());
    }

    #[test]
    fn ur_string_words() {
        assert_eq!(urs_str_decode("baabba").unwrap(), vec!["aa", "", "a"]);
        assert_eq!(urs_str_singleton("aa").unwrap(), "baa");
        assert!(urs_str_singleton("ab").is_err());
        assert!(urs_str_decode("ab").is_err());
        assert!(urs_str_decode("").unwrap().is_empty());
    }
}
