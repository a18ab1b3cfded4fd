//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits nonzero if any fails.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use urcode_core::axiomlab::{self, Expectation, SampleConfig, Status, Target, Witness};
use urcode_core::beta::{beta_append, beta_decode, beta_encode};
use urcode_core::dyadic::{
    dyad_concat, dyad_pair, dyad_unpair, ell, lambda, sm_decode, sm_encode, strip_prefix, strip_suffix,
};
use urcode_core::markov::{
    self, decode_word, editors_split, encode_string, normal_form, normal_form_trace, ord_norm, parse_mat, Mat2,
    RingMat,
};
use urcode_core::rings::{parse_poly, ModelElem, ModelId, Poly};
use urcode_core::tcstrings::{
    common_refinement, embed, refinement_check, srs_all_normal_forms, srs_concat, srs_normalize, Partition,
};
use urcode_core::{Error, Letter, Nat, Rational, Side, Word};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(limit: Duration, t: Instant) -> Result<(), String> {
    ensure(t.elapsed() < limit, || format!("took {:?}, limit {:?}", t.elapsed(), limit))
}

fn n(v: u64) -> Nat {
    Nat::from(v)
}

fn word(s: &str) -> Word {
    s.parse().expect("word literal")
}

/// Words over {a,b} by the length-first recursion: ε, then w·a = 2w+1, w·b = 2w+2.
fn dyadic_oracle(w: &str) -> Nat {
    w.chars().fold(Nat::zero(), |acc, c| acc * 2u32 + if c == 'a' { 1u32 } else { 2u32 })
}

fn ac1() -> Outcome {
    let t = Instant::now();
    let table = [
        "", "a", "b", "aa", "ab", "ba", "bb", "aaa", "aab", "aba", "abb", "baa", "bab", "bba", "bbb", "aaaa",
        "aaab", "aaba", "aabb", "abaa",
    ];
    for (code, w) in table.iter().enumerate() {
        ensure(sm_decode(&n(code as u64)) == word(w), || format!("decode {code}"))?;
        ensure(sm_encode(&word(w)) == n(code as u64), || format!("encode {w}"))?;
    }
    within(Duration::from_secs(1), t)?;
    Ok(format!("{} rows", table.len()))
}

fn ac2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let tally = |x: &Nat| dyadic_oracle(&"a".repeat(sm_decode(x).len()));
    for _ in 0..10_000 {
        let (x, y) = (n(rng.gen()), n(rng.gen()));
        let (wx, wy) = (sm_decode(&x), sm_decode(&y));
        let xy = dyad_concat(&x, &y);
        ensure(xy == sm_encode(&wx.concat(&wy)), || format!("⊛ hom at {x},{y}"))?;
        ensure(ell(&xy) == ell(&x) * ell(&y), || format!("ℓ at {x},{y}"))?;
        ensure(lambda(&xy) == dyad_concat(&lambda(&x), &lambda(&y)), || format!("Λ hom at {x},{y}"))?;
        ensure(lambda(&x) == tally(&x), || format!("Λ value at {x}"))?;
        ensure(strip_prefix(&xy, &x) == Some(y.clone()), || format!("left cancel at {x},{y}"))?;
        ensure(strip_suffix(&xy, &y) == Some(x.clone()), || format!("right cancel at {x},{y}"))?;
    }
    let mut seen = HashMap::new();
    for x in 0..64u64 {
        for y in 0..64u64 {
            let p = dyad_pair(&n(x), &n(y));
            if let Some(prev) = seen.insert(p.clone(), (x, y)) {
                return Err(format!("pair collision {prev:?} and {:?}", (x, y)));
            }
            ensure(dyad_unpair(&p).ok() == Some((n(x), n(y))), || format!("unpair {x},{y}"))?;
        }
    }
    Ok("10^4 random pairs, 64^2 pairings".into())
}

fn ac3() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=8);
        let xs: Vec<Nat> = (0..len).map(|_| n(rng.gen_range(0..=10_000))).collect();
        let s = beta_encode(&xs);
        ensure(beta_decode(&s).ok() == Some(xs.clone()), || format!("round trip {xs:?}"))?;
        let extra = n(rng.gen_range(0..=10_000));
        let s2 = beta_append(&s, &extra).map_err(|e| e.to_string())?;
        let mut longer = xs.clone();
        longer.push(extra);
        ensure(beta_decode(&s2).ok() == Some(longer), || format!("append to {xs:?}"))?;
    }
    within(Duration::from_secs(10), t)?;
    Ok(format!("10^3 lists in {:?}", t.elapsed()))
}

/// Integer 2×2 product, independent of the crate's matrices.
fn mat_mul(x: [u64; 4], y: [u64; 4]) -> [u64; 4] {
    [x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]]
}

fn entries_u64(m: &Mat2) -> [u64; 4] {
    let e = |p: &Poly| p.as_i64().expect("integer entry") as u64;
    [e(m.a()), e(m.b()), e(m.c()), e(m.d())]
}

fn ac4() -> Outcome {
    let mut count = 0;
    for w in Word::all_up_to(12) {
        let m = encode_string(ModelId::Nat, &w);
        let oracle = w.letters().iter().fold([1, 0, 0, 1], |acc, l| match l {
            Letter::A => mat_mul(acc, [1, 1, 0, 1]),
            Letter::B => mat_mul(acc, [1, 0, 1, 1]),
        });
        ensure(entries_u64(&m) == oracle, || format!("product for {w}"))?;
        ensure(m.ring().det().is_one(), || format!("det for {w}"))?;
        ensure(decode_word(&m).ok() == Some(w.clone()), || format!("decode {w}"))?;
        count += 1;
    }
    ensure(count == (1 << 13) - 1, || format!("{count} words"))?;
    Ok(format!("{count} words"))
}

fn ac5() -> Outcome {
    let mut fib = vec![0u64, 1];
    for i in 2..=42 {
        fib.push(fib[i - 1] + fib[i - 2]);
    }
    let ba = Mat2::gen(ModelId::Nat, Letter::B).mul(&Mat2::gen(ModelId::Nat, Letter::A)).map_err(|e| e.to_string())?;
    let mut acc = Mat2::identity(ModelId::Nat);
    for k in 1..=20usize {
        acc = acc.mul(&ba).map_err(|e| e.to_string())?;
        let expect = [fib[2 * k - 1], fib[2 * k], fib[2 * k], fib[2 * k + 1]];
        ensure(entries_u64(&acc) == expect, || format!("(BA)^{k} = {acc}"))?;
    }
    Ok("n ≤ 20".into())
}

fn ac6() -> Outcome {
    let nat = ModelId::Nat;
    let mut checked = 0;
    for w in Word::all_up_to(8) {
        let l = w.letters();
        let enc = |s: &[Letter]| encode_string(nat, &Word(s.to_vec()));
        for i in 0..=l.len() {
            for j in 0..=l.len() {
                let (x, y, u, v) = (enc(&l[..i]), enc(&l[i..]), enc(&l[..j]), enc(&l[j..]));
                let split = editors_split(&x, &y, &u, &v).map_err(|e| format!("{w} at {i},{j}: {e}"))?;
                let mul = |p: &Mat2, q: &Mat2| p.mul(q).expect("same model");
                let eta = &split.eta;
                let ok = match split.side {
                    Side::Both => x == u && y == v && eta.is_identity(),
                    Side::Left => mul(&x, eta) == u && y == mul(eta, &v),
                    Side::Right => x == mul(&u, eta) && mul(eta, &y) == v,
                };
                ensure(ok, || format!("bad witness for {w} at {i},{j}"))?;
                checked += 1;
            }
        }
    }
    let q = ModelId::QNonNeg;
    let m = |s: &str| parse_mat(q, s).expect("literal");
    let a = Mat2::gen(q, Letter::A);
    match editors_split(&m("[[7/5,1/5],[3/5,4/5]]"), &a, &a, &m("[[4/5,1/5],[3/5,7/5]]")) {
        Err(Error::NoWitness(mu)) => {
            let minus = parse_poly("-3/5").expect("literal");
            ensure(mu.b == minus, || format!("μ = {mu}"))?;
        }
        other => return Err(format!("rational quadruple gave {other:?}")),
    }
    Ok(format!("{checked} factorisations, rational failure with -3/5"))
}

fn runs_of(runs: &[(char, &str)]) -> Vec<(Letter, Poly)> {
    runs.iter()
        .map(|(l, e)| (if *l == 'A' { Letter::A } else { Letter::B }, parse_poly(e).expect("exponent literal")))
        .collect()
}

fn ac7() -> Outcome {
    let cases: [(&str, &[(char, &str)]); 4] = [
        ("[[9,3X+2],[3X+4,X^2+2X+1]]", &[('B', "X/3"), ('A', "2"), ('B', "4"), ('A', "X/3")]),
        (
            "[[5X+7,X^2-2],[25,5X-7]]",
            &[('A', "X/5"), ('B', "3"), ('A', "1"), ('B', "1"), ('A', "2"), ('B', "1"), ('A', "X/5-1")],
        ),
        (
            "[[X^2-6X+10,1/3X^4-2X^3+11/3X^2-2X+3],[3,X^2+1]]",
            &[('A', "X^2/3-2X+3"), ('B', "3"), ('A', "X^2/3")],
        ),
        ("[[9,9X+2],[9X+4,9X^2+6X+1]]", &[('B', "X"), ('A', "2"), ('B', "4"), ('A', "X")]),
    ];
    for (text, expect) in cases {
        let t = Instant::now();
        let m = parse_mat(ModelId::M2, text).map_err(|e| e.to_string())?;
        let nf = normal_form(&m).map_err(|e| e.to_string())?;
        let got: Vec<(Letter, Poly)> = nf.runs.iter().map(|r| (r.letter, r.exponent.poly().clone())).collect();
        ensure(got == runs_of(expect), || format!("{text}: got {nf}"))?;
        within(Duration::from_secs(1), t)?;
    }
    Ok("A, B, S, A''".into())
}

fn random_m2_exponent(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(0..=2u32);
    if deg == 0 {
        return Poly::from_int(rng.gen_range(1..=10));
    }
    let frac = |rng: &mut ChaCha8Rng| Rational::new(rng.gen_range(-10..=10i64).into(), rng.gen_range(1..=10i64).into());
    let mut terms = vec![(0, Rational::from_integer(rng.gen_range(-10..=10i64).into()))];
    for k in 1..deg {
        terms.push((k, frac(rng)));
    }
    let lead = Rational::new(rng.gen_range(1..=10i64).into(), rng.gen_range(1..=10i64).into());
    terms.push((deg, lead));
    Poly::from_terms(terms)
}

fn ac8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut steps = 0;
    for _ in 0..1000 {
        let runs = rng.gen_range(0..=6);
        let mut letter = if rng.gen_bool(0.5) { Letter::A } else { Letter::B };
        let mut m = RingMat::identity();
        for _ in 0..runs {
            m = m.mul(&RingMat::letter_pow(letter, &random_m2_exponent(&mut rng)));
            letter = letter.swap();
        }
        let alpha = Mat2::from_ring(ModelId::M2, m).map_err(|e| e.to_string())?;
        let (nf, trace) = normal_form_trace(&alpha).map_err(|e| e.to_string())?;
        ensure(nf.evaluate() == alpha, || format!("evaluation of {nf} ≠ {alpha}"))?;
        for pair in trace.windows(2) {
            let (before, after) = (ord_norm(&pair[0]), ord_norm(&pair[1]));
            let (before, after) = (before.map_err(|e| e.to_string())?, after.map_err(|e| e.to_string())?);
            ensure(after < before, || format!("norm {after} !< {before} in {alpha}"))?;
            steps += 1;
        }
    }
    Ok(format!("10^3 matrices, {steps} steps"))
}

fn ac9() -> Outcome {
    let m0 = ModelId::M0;
    let p = |s: &str| parse_poly(s).expect("literal");
    let r = markov::bez_euc_check(m0, &p("9"), &p("3X+2"), &p("3X+4"), &p("X^2+2X+1")).map_err(|e| e.to_string())?;
    ensure(r.bezout && !r.euclidean_ab, || format!("{r:?}"))?;
    let bb = Mat2::gen(m0, Letter::B)
        .mul(&parse_mat(m0, "[[5X+7,X^2-2],[25,5X-7]]").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(matches!(markov::urs_pop(&bb), Err(Error::NotEuclidean { .. })), || "B·𝔅 popped".into())?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let len = rng.gen_range(0..=6);
        let xs: Vec<ModelElem> = (0..len).map(|_| ModelElem::nat(rng.gen_range(0..=1000u32))).collect();
        let enc = markov::urs_encode(ModelId::Nat, &xs).map_err(|e| e.to_string())?;
        ensure(markov::urs_decode(&enc).ok() == Some(xs.clone()), || format!("urs round trip {xs:?}"))?;
    }
    Ok("bez/euc, B·𝔅, 10^3 ur-strings".into())
}

fn ac10() -> Outcome {
    let mut pairs = 0usize;
    for w in Word::all_up_to(6) {
        let base = w.to_string();
        let all = Partition::all_of(&base);
        let cutset = |p: &Partition| p.cuts().into_iter().collect::<BTreeSet<_>>();
        for alpha in &all {
            for beta in &all {
                let (gamma, f, g) = common_refinement(alpha, beta).map_err(|e| e.to_string())?;
                pairs += 1;
                let ctx = || format!("{alpha} / {beta} -> {gamma}");
                if !base.is_empty() {
                    ensure(gamma.len() < alpha.len() + beta.len(), || format!("length bound: {}", ctx()))?;
                }
                ensure(refinement_check(&gamma, alpha, &f), || format!("map to α: {}", ctx()))?;
                ensure(refinement_check(&gamma, beta, &g), || format!("map to β: {}", ctx()))?;
                let pairing: HashSet<(usize, usize)> = f.iter().copied().zip(g.iter().copied()).collect();
                ensure(pairing.len() == gamma.len(), || format!("pairing not injective: {}", ctx()))?;
                let union: BTreeSet<usize> = cutset(alpha).union(&cutset(beta)).copied().collect();
                for delta in &all {
                    let dc = cutset(delta);
                    if !union.is_subset(&dc) {
                        continue;
                    }
                    let h = embed(delta, &gamma).map_err(|e| format!("{delta} into {}: {e}", ctx()))?;
                    ensure(refinement_check(delta, &gamma, &h), || format!("embedding {delta}: {}", ctx()))?;
                }
            }
        }
    }
    Ok(format!("{pairs} partition pairs"))
}

fn all_abc_words(max: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max {
        let next: Vec<String> = layer.iter().flat_map(|w| ['a', 'b', 'c'].map(|c| format!("{w}{c}"))).collect();
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn ac11() -> Outcome {
    let mut memo = HashMap::new();
    let words = all_abc_words(10);
    for w in &words {
        let nfs = srs_all_normal_forms(w, &mut memo);
        let nf = srs_normalize(w).map_err(|e| e.to_string())?;
        ensure(nfs.len() == 1 && nfs.contains(&nf), || format!("{w} has normal forms {nfs:?}"))?;
    }
    ensure(srs_concat(&srs_concat("a", "b").map_err(|e| e.to_string())?, "c").map_err(|e| e.to_string())? == "b", || {
        "a⋄b⋄c ≠ b".into()
    })?;
    let cfg = SampleConfig::default();
    for i in 1..=7 {
        let r = axiomlab::check_axiom(Target::Srs, axiomlab::AxiomId::tc(i), &cfg).map_err(|e| e.to_string())?;
        ensure(r.status == Status::Holds, || format!("tc{i}: {:?}", r.status))?;
    }
    let small: Vec<String> = all_abc_words(4).into_iter().filter(|w| srs_normalize(w).ok().as_ref() == Some(w)).collect();
    for x in &small {
        for y in &small {
            for z in &small {
                let c = |p: &str, q: &str| srs_concat(p, q).expect("normal words");
                ensure(c(x, y) != c(x, z) || y == z, || format!("left cancellation {x} {y} {z}"))?;
                ensure(c(y, x) != c(z, x) || y == z, || format!("right cancellation {x} {y} {z}"))?;
            }
        }
    }
    Ok(format!("{} words confluent, {} normal words cancel", words.len(), small.len()))
}

fn ac12() -> Outcome {
    let t = Instant::now();
    let report = axiomlab::run_suite(&SampleConfig::default());
    within(Duration::from_secs(60), t)?;
    for e in &report.entries {
        ensure(e.ok, || format!("{} {}: {:?} {:?}", e.target, e.axiom, e.report.as_ref().map(|r| &r.status), e.error))?;
    }
    ensure(report.unknowns == 0, || format!("{} unknowns", report.unknowns))?;
    let registry = axiomlab::known_counterexamples();
    let a = match &registry[0].kind {
        axiomlab::CounterexampleKind::NonEuclidean { matrix, .. } => matrix.clone(),
        _ => return Err("registry starts with 𝔄".into()),
    };
    let witness_of = |target: Target, axiom: &str| {
        report
            .entries
            .iter()
            .find(|e| e.target == target && e.axiom.to_string() == axiom)
            .and_then(|e| e.report.as_ref())
            .map(|r| r.status.clone())
    };
    let entries: Vec<ModelElem> = (0..4).map(|k| a.entry(k / 2, k % 2)).collect();
    ensure(
        witness_of(Target::Arith(ModelId::M0), "pa17-") == Some(Status::Refuted(Witness::Arith(entries))),
        || "M0 pa17- witness".into(),
    )?;
    ensure(
        witness_of(Target::MarkovUrs(ModelId::M0), "tcu7") == Some(Status::Refuted(Witness::Matrices(vec![a]))),
        || "M0 tcu7 witness".into(),
    )?;
    let holds = |t: Target, ax: &str| witness_of(t, ax) == Some(Status::Holds);
    ensure(holds(Target::Arith(ModelId::M2), "pa17"), || "M2 pa17".into())?;
    let expected_holds =
        report.entries.iter().filter(|e| e.expected == Expectation::Holds).count();
    Ok(format!("{} entries ({} expected to hold) in {:?}", report.entries.len(), expected_holds, t.elapsed()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 12] = [
        ("dyadic table", ac1),
        ("dyadic algebra", ac2),
        ("beta round trip", ac3),
        ("matrix/word isomorphism", ac4),
        ("Fibonacci powers", ac5),
        ("editors", ac6),
        ("M2 normal forms", ac7),
        ("norm descent", ac8),
        ("Bezout/Euclid fixtures", ac9),
        ("partitions", ac10),
        ("rewriting system", ac11),
        ("axiom suite", ac12),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        match outcome {
            Ok(detail) => println!("[PASS] AC{} {name}: {detail} ({:.2?})", i + 1, t.elapsed()),
            Err(why) => {
                failed += 1;
                println!("[FAIL] AC{} {name}: {why} ({:.2?})", i + 1, t.elapsed());
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
