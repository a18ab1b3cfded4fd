//! The monoid of normal forms of the rewrite system `abc → b` over `{a,b,c}`,
//! with `x ⋄ y = nf(xy)`.

use std::collections::{BTreeSet, HashMap};

use crate::{EditorsSplit, Error, Result, Side};

pub fn validate_srs_word(w: &str) -> Result<()> {
    match w.find(|c| !matches!(c, 'a' | 'b' | 'c')) {
        None => Ok(()),
        Some(i) => Err(Error::Parse { position: i, expected: "letter a, b or c".into() }),
    }
}

pub fn is_srs_normal(w: &str) -> bool {
    !w.contains("abc")
}

/// Leftmost-innermost reduction with a stack: only a freshly pushed `c` can
/// complete a redex.
pub fn srs_normalize(w: &str) -> Result<String> {
    validate_srs_word(w)?;
    let mut st: Vec<u8> = Vec::with_capacity(w.len());
    for ch in w.bytes() {
        st.push(ch);
        if st.ends_with(b"abc") {
            st.truncate(st.len() - 3);
            st.push(b'b');
        }
    }
    Ok(String::from_utf8(st).expect("ascii"))
}

pub fn srs_concat(x: &str, y: &str) -> Result<String> {
    srs_normalize(&format!("{}{}", srs_normalize(x)?, srs_normalize(y)?))
}

/// Every word reachable in one rewrite step.
pub fn srs_one_step(w: &str) -> Vec<String> {
    w.match_indices("abc")
        .map(|(i, _)| format!("{}b{}", &w[..i], &w[i + 3..]))
        .collect()
}

/// The end points of all maximal rewrite sequences from `w`.
pub fn srs_all_normal_forms(w: &str, memo: &mut HashMap<String, BTreeSet<String>>) -> BTreeSet<String> {
    if let Some(s) = memo.get(w) {
        return s.clone();
    }
    let next = srs_one_step(w);
    let out = if next.is_empty() {
        BTreeSet::from([w.to_string()])
    } else {
        next.iter().flat_map(|n| srs_all_normal_forms(n, memo)).collect()
    };
    memo.insert(w.to_string(), out.clone());
    out
}

/// Normal words of length at most `n`, shortest first.
pub fn srs_normal_words(n: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for w in &layer {
            for c in ['a', 'b', 'c'] {
                let mut x = w.clone();
                x.push(c);
                if is_srs_normal(&x) {
                    next.push(x);
                }
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn check(x: &str, y: &str, u: &str, v: &str, w: &str) -> Result<Option<Side>> {
    if srs_concat(x, w)? == u && y == srs_concat(w, v)? {
        return Ok(Some(if w.is_empty() { Side::Both } else { Side::Left }));
    }
    if x == srs_concat(u, w)? && srs_concat(w, y)? == v {
        return Ok(Some(Side::Right));
    }
    Ok(None)
}

/// Longest words tried by brute force in [`srs_editors_witness`].
const EXHAUSTIVE_LIMIT: usize = 9;

/// Editors witness for `x ⋄ y = u ⋄ v` by bounded search.
///
/// Rewriting only happens at the seam, where `aᵏ b cʲ` loses `min(k, j)`
/// letters on each side. So a solution of `x ⋄ η = u` has the form `cᵐt` or
/// `bcᵐt` with `t` a suffix of `u` and `m` at most the number of `a`s in
/// `x`, and dually for `x = u ⋄ η`. Those shapes are tried first, then every
/// normal word up to length `min(|x| + |y| + 3, 9)`.
pub fn srs_editors_witness(x: &str, y: &str, u: &str, v: &str) -> Result<EditorsSplit<String>> {
    for w in [x, y, u, v] {
        validate_srs_word(w)?;
        if !is_srs_normal(w) {
            return Err(Error::PreconditionViolated(format!("{w} is not normal")));
        }
    }
    if srs_concat(x, y)? != srs_concat(u, v)? {
        return Err(Error::PreconditionViolated("x⋄y ≠ u⋄v".into()));
    }
    let bound = (x.len() + y.len() + 3).min(EXHAUSTIVE_LIMIT);
    let mut candidates: Vec<String> = vec![String::new()];
    for (from, over) in [(x, u), (u, x)] {
        let max_m = from.bytes().filter(|&l| l == b'a').count();
        for i in 0..=over.len() {
            let t = &over[i..];
            for m in 0..=max_m {
                let cs = "c".repeat(m);
                candidates.push(format!("{cs}{t}"));
                candidates.push(format!("b{cs}{t}"));
            }
        }
    }
    let xy = format!("{x}{y}");
    let uv = format!("{u}{v}");
    for s in [x, y, u, v, xy.as_str(), uv.as_str()] {
        for i in 0..s.len() {
            for j in i + 1..=s.len() {
                candidates.push(s[i..j].to_string());
            }
        }
    }
    for i in 1..=x.len() + y.len() + 3 {
        candidates.push("c".repeat(i));
        candidates.push(format!("{}b", "a".repeat(i - 1)));
    }
    let mut seen = std::collections::HashSet::new();
    for w in &candidates {
        if !is_srs_normal(w) || !seen.insert(w.clone()) {
            continue;
        }
        if let Some(side) = check(x, y, u, v, w)? {
            return Ok(EditorsSplit { side, eta: w.clone() });
        }
    }
    for w in srs_normal_words(bound) {
        if seen.contains(&w) {
            continue;
        }
        if let Some(side) = check(x, y, u, v, &w)? {
            return Ok(EditorsSplit { side, eta: w });
        }
    }
    Err(Error::SearchExhausted(format!("no editors witness up to length {bound}")))
}

/// `(x, u, v)` with `u ⋄ x ⋄ v = x` and `u`, `v` nonempty.
pub fn srs_bicancel_counterexample() -> (String, String, String) {
    ("b".into(), "a".into(), "c".into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalisation() {
        assert_eq!(srs_normalize("aabcc").unwrap(), "b");
        assert_eq!(srs_normalize("abcabc").unwrap(), "bb");
        assert_eq!(srs_normalize("cab").unwrap(), "cab");
        assert!(srs_normalize("abd").is_err());
        assert_eq!(srs_concat("aa", "bcc").unwrap(), "b");
    }

    #[test]
    fn bicancellation_fails() {
        let (x, u, v) = srs_bicancel_counterexample();
        assert_eq!(srs_concat(&srs_concat(&u, &x).unwrap(), &v).unwrap(), x);
        assert!(!u.is_empty() && !v.is_empty());
    }

    #[test]
    fn editors_example() {
        // a ⋄ bc = b = ab ⋄ c
        let s = srs_editors_witness("a", "bc", "ab", "c").unwrap();
        assert_eq!(s, EditorsSplit { side: Side::Left, eta: "b".into() });
    }
}
