//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
//! criterion fails. Runs without the libtest harness so every line is
//! printed even when an earlier criterion fails.

use std::time::{Duration, Instant};

use equivhilb::arith::{rat, series_expand, MultiPoly, RatFunc, VarSet};
use equivhilb::automaton::{build_automaton, Dfa};
use equivhilb::language::{
    enumerate_ln, is_in_l, monomial_normal_form, monomial_to_word, word_to_monomial, Alphabet,
    Letter, Word, YMonomial, YVar,
};
use equivhilb::model::{hilbert_series, ModelSpec, ReducedSpec};
use equivhilb::oracle::{brute_force_monomials, check_roots_of_unity, check_series, segre_dimension};
use equivhilb::transfer::equiv_hilbert;
use num_bigint::BigUint;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> (bool, String) {
    (elapsed <= limit, format!("{:.3}s (limit {}s)", elapsed.as_secs_f64(), limit.as_secs()))
}

/// `c` vectors with `1 ≤ q ≤ qmax` and entries in `1..=cmax`, shortest first.
fn c_vectors(qmax: usize, cmax: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![vec![]];
    for _ in 0..qmax {
        layer = layer
            .iter()
            .flat_map(|v| {
                (1..=cmax).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// All vectors `0 ≤ v ≤ bound` component-wise.
fn boxes(bound: &[u32]) -> Vec<Vec<u32>> {
    bound.iter().fold(vec![vec![]], |acc, &b| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=b).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect()
    })
}

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

/// The four-state diagram drawn for c = (1,1,1): states p1 (start), p2, p3
/// and p𝟙, all accepting.
fn drawn_four_state_dfa(alphabet: &Alphabet) -> Dfa {
    let letters = alphabet.letters();
    let (p1, p2, p3, pz) = (0u32, 1u32, 2u32, 3u32);
    let row = |tau: [Option<u32>; 3], zeta: Option<u32>| -> Vec<Option<u32>> {
        letters
            .iter()
            .map(|l| match l {
                Letter::Tau(j) => tau[*j as usize - 1],
                Letter::Zeta(_) => zeta,
            })
            .collect()
    };
    let delta = vec![
        row([Some(p1), Some(p2), Some(p3)], Some(pz)),
        row([None, Some(p2), Some(p3)], Some(pz)),
        row([None, None, Some(p3)], Some(pz)),
        row([Some(p1), Some(p2), Some(p3)], Some(pz)),
    ];
    let labels = ["p1", "p2", "p3", "p(1,1,1)"].map(String::from).to_vec();
    Dfa::new(alphabet.clone(), labels, delta, 0, vec![true; 4]).unwrap()
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let alphabet = Alphabet::new(&[1, 1, 1]).unwrap();
    let dfa = build_automaton(&alphabet);
    let min = dfa.minimize();
    let (fast, time) = within(start.elapsed(), Duration::from_secs(1));
    let drawn = drawn_four_state_dfa(&alphabet);
    let drawn_min = drawn.minimize();
    let pass = dfa.num_states() == 17 && min.num_states() == 4 && fast;
    outcome(
        pass,
        format!(
            "built {} states, minimized {} (required 17 and 4); the drawn 4-state diagram \
             minimizes to {} and {} the minimized automaton; {time}",
            dfa.num_states(),
            min.num_states(),
            drawn_min.num_states(),
            if drawn_min.is_isomorphic(&min) { "is isomorphic to" } else { "differs from" },
        ),
    )
}

fn independence_closed_form(vars: &VarSet, q: usize) -> RatFunc {
    let one = MultiPoly::one(vars);
    let mut num = one.clone();
    let mut prod = one;
    for j in 0..q {
        let s = MultiPoly::var(vars, j);
        num = &num * &s;
        prod = &prod * &(&MultiPoly::one(vars) - &s);
    }
    RatFunc::new(num, &prod - &MultiPoly::var(vars, q)).unwrap()
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for q in 1..=3 {
        let h = equiv_hilbert(&ReducedSpec::new(vec![1; q])).unwrap();
        let expected = independence_closed_form(h.vars(), q);
        let eq = h == expected;
        ok &= eq;
        notes.push(format!("q={q} {}", if eq { "equal" } else { "DIFFERENT" }));
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(10));
    outcome(ok && fast, format!("{}; {time}", notes.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let h = equiv_hilbert(&ReducedSpec::new(vec![2, 2])).unwrap();
    let v = h.vars().clone();
    let (s1, s2, t) = (MultiPoly::var(&v, 0), MultiPoly::var(&v, 1), MultiPoly::var(&v, 2));
    let k = |n: i64| MultiPoly::from_int(&v, n);
    let f = {
        let a = &(&(&s1 * &s2) * &(&s1 - &k(2))) * &(&s2 - &k(2));
        let b = &s1 * &(&s1 - &k(2));
        let c = &s2 * &(&s2 - &k(2));
        let d = &(&t.pow(2) * &(&(&(&s1 * &s2) + &s1) + &s2)).scale(&rat(2));
        let e = &(&t * &(&(&(&s1 * &s2) - &s1) - &s2)).scale(&rat(4));
        let g = (&k(1) - &t).pow(4);
        &(&(&(&(&a + &b) + &c) - d) - e) + &g
    };
    let s1s2 = &s1 * &s2;
    let corrected = &s1s2 * &(&(&(&k(1) - &s1) * &(&k(1) - &s2)) - &t.pow(2));
    let printed = &s1s2 * &(&(&(&s1s2 - &s1) - &s2) - &t.pow(2));
    let den_matches = h.den() == &f.integer_primitive();
    let corrected_matches = h == RatFunc::new(corrected, f.clone()).unwrap();
    let printed_differs = h != RatFunc::new(printed, f).unwrap();
    let (fast, time) = within(start.elapsed(), Duration::from_secs(300));
    outcome(
        den_matches && corrected_matches && printed_differs && fast,
        format!(
            "denominator {} f; numerator {} s1*s2*((1-s1)*(1-s2)-t^2); \
             printed numerator s1*s2*(s1*s2-s1-s2-t^2) {} (typo: it drops the +1); {time}",
            if den_matches { "equals" } else { "DIFFERS from" },
            if corrected_matches { "equals" } else { "DIFFERS from" },
            if printed_differs { "does not match" } else { "UNEXPECTEDLY matches" },
        ),
    )
}

fn criterion_4() -> Outcome {
    let mut ok = true;
    let mut worst = Duration::ZERO;
    let mut notes = Vec::new();
    for c in c_vectors(2, 3) {
        let start = Instant::now();
        let red = ReducedSpec::new(c.clone());
        let h = equiv_hilbert(&red).unwrap();
        let nmax = vec![4; c.len()];
        let report = check_series(&red, &h, &nmax, 4).unwrap();
        let elapsed = start.elapsed();
        worst = worst.max(elapsed);
        let bad = report.mismatches().count();
        ok &= bad == 0 && elapsed <= Duration::from_secs(120);
        notes.push(format!("{c:?}:{bad}"));
    }
    outcome(
        ok,
        format!("mismatches per cprime {}; slowest case {:.3}s (limit 120s)", notes.join(" "), worst.as_secs_f64()),
    )
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut ok = true;
    let mut checked = 0;
    let mut first_bad = None;
    for c in c_vectors(2, 2) {
        let alphabet = Alphabet::new(&c).unwrap();
        for n in boxes(&vec![3; c.len()]) {
            for d in 0..=3u32 {
                let words = enumerate_ln(&alphabet, &n, d as usize, 1 << 24).unwrap();
                let shifted: Vec<u32> = n.iter().map(|x| x + 1).collect();
                let want = segre_dimension(&c, &shifted, d);
                checked += 1;
                if BigUint::from(words.len()) != want {
                    ok = false;
                    first_bad.get_or_insert(format!("c={c:?} n={n:?} d={d}: {} vs {want}", words.len()));
                }
            }
        }
    }
    let (fast, time) = within(start.elapsed(), Duration::from_secs(60));
    outcome(
        ok && fast,
        format!("{checked} (c,n,d) triples{}; {time}", first_bad.map(|b| format!(", first mismatch {b}")).unwrap_or_default()),
    )
}

fn all_words(letters: &[Letter], max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                letters.iter().map(move |l| {
                    let mut w = w.clone();
                    w.push(l.clone());
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned().map(Word));
    }
    out
}

fn criterion_6() -> Outcome {
    let mut disagreements = 0usize;
    let mut words_checked = 0usize;
    for c in c_vectors(2, 2) {
        let alphabet = Alphabet::new(&c).unwrap();
        let dfa = build_automaton(&alphabet);
        let min = dfa.minimize();
        for w in all_words(&alphabet.letters(), 6) {
            let member = is_in_l(&w, &alphabet);
            words_checked += 1;
            if dfa.accepts(&w) != member || min.accepts(&w) != member {
                disagreements += 1;
            }
        }
    }
    outcome(
        disagreements == 0,
        format!("{words_checked} words, {disagreements} disagreements (built and minimized automata)"),
    )
}

fn criterion_7() -> Outcome {
    let mut ok = true;
    let mut words_checked = 0usize;
    for c in c_vectors(2, 2) {
        let alphabet = Alphabet::new(&c).unwrap();
        let q = c.len();
        for n in boxes(&vec![2; q]) {
            for d in 0..=3 {
                for w in enumerate_ln(&alphabet, &n, d, 1 << 24).unwrap() {
                    words_checked += 1;
                    let mono = word_to_monomial(&w, q, None).unwrap();
                    ok &= monomial_to_word(&mono, &n).ok().as_ref() == Some(&w);
                }
            }
        }
    }
    let mut mono = YMonomial::one();
    for (j, i, k) in [(1, 2, 2), (2, 2, 1), (1, 1, 4), (2, 1, 1), (1, 3, 1), (2, 2, 1)] {
        mono.mul_var(YVar { j, i, k }, 1);
    }
    let nf: Vec<(Vec<u32>, Vec<u32>)> = monomial_normal_form(&mono, 2)
        .unwrap()
        .iter()
        .map(|g| (g.i.to_vec(), g.k.to_vec()))
        .collect();
    let sorted = nf
        == vec![
            (vec![3, 1], vec![1, 1]),
            (vec![2, 2], vec![2, 1]),
            (vec![1, 2], vec![4, 1]),
        ];
    outcome(
        ok && sorted,
        format!(
            "{words_checked} words round-tripped {}; sorting example {}",
            if ok { "exactly" } else { "WITH FAILURES" },
            if sorted { "reproduced" } else { "NOT reproduced" }
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut ok = true;
    let mut checked = 0;
    for c in c_vectors(2, 2) {
        for n in boxes(&vec![3; c.len()]) {
            for d in 0..=3 {
                let brute = brute_force_monomials(&c, &n, d, 1 << 24).unwrap();
                checked += 1;
                ok &= BigUint::from(brute) == segre_dimension(&c, &n, d);
            }
        }
    }
    outcome(ok, format!("{checked} (c,n,d) triples compared"))
}

fn criterion_9() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for (seed, c) in [vec![1, 1], vec![2, 2], vec![2, 1]].into_iter().enumerate() {
        let red = ReducedSpec::new(c.clone());
        let h = equiv_hilbert(&red).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed as u64);
        let report = check_roots_of_unity(&red, &h, 20, 1e-9, &mut rng).unwrap();
        ok &= report.passed() && report.samples.len() == 20;
        notes.push(format!("{c:?} max_error={:.3e}", report.max_error()));
    }
    outcome(ok, format!("{} (tol 1e-9, 20 samples each)", notes.join(", ")))
}

fn criterion_10() -> Outcome {
    let mut ok = true;
    let mut notes = Vec::new();
    for c3 in 1..=3u64 {
        let spec = ModelSpec {
            m: 4,
            facets: vec![vec![1, 2], vec![3, 4]],
            varying: [4].into_iter().collect(),
            states: [(1, 1), (2, 2), (3, c3)].into_iter().collect(),
        };
        let h = hilbert_series(&spec).unwrap();
        let table = series_expand(&h, &[4, 4]).unwrap();
        let mut bad = 0;
        for n in 0..=4u64 {
            for d in 0..=4u64 {
                let want = if n == 0 {
                    BigUint::from(0u32)
                } else {
                    binom(2 + d - 1, d) * binom(c3 * n + d - 1, d)
                };
                let got = table.coeff(&[n as u32, d as u32]).unwrap();
                if got != num_rational::BigRational::from_integer(want.into()) {
                    bad += 1;
                }
            }
        }
        ok &= bad == 0;
        notes.push(format!("c3={c3}: {bad} mismatches"));
    }
    outcome(ok, format!("{} over n ≤ 4, d ≤ 4", notes.join(", ")))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 10] = [
        ("automaton shape for c=(1,1,1)", criterion_1),
        ("independence closed form, q=1..3", criterion_2),
        ("c=(2,2) denominator and numerator", criterion_3),
        ("coefficient oracle, q≤2, c≤3", criterion_4),
        ("word counts equal Segre dimensions", criterion_5),
        ("automaton accepts exactly the language", criterion_6),
        ("word/monomial round trips", criterion_7),
        ("brute-force monomials equal Segre dimensions", criterion_8),
        ("roots-of-unity formula", criterion_9),
        ("fixed-facet elimination", criterion_10),
    ];
    let mut failed = 0;
    for (idx, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {} ({})",
            idx + 1,
            if o.pass { "PASS" } else { "FAIL" },
            name,
            o.detail
        );
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
