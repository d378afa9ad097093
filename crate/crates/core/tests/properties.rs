use equivhilb::automaton::build_automaton;
use equivhilb::language::{
    is_in_l, monomial_normal_form, monomial_to_word, to_canonical, from_canonical, word_to_monomial,
    Alphabet, Letter, Word,
};
use equivhilb::model::{hilbert_series, reduced_hilbert_series_ordered, ModelSpec, ReducedSpec};
use proptest::prelude::*;

fn alphabet_and_word(max_len: usize) -> impl Strategy<Value = (Alphabet, Word)> {
    (1usize..=2, prop::collection::vec(1u32..=2, 2))
        .prop_flat_map(move |(q, c)| {
            let alphabet = Alphabet::new(&c[..q]).unwrap();
            let letters = alphabet.letters();
            let word = prop::collection::vec(prop::sample::select(letters), 0..=max_len);
            (Just(alphabet), word)
        })
        .prop_map(|(a, w)| (a, Word(w)))
}

/// Random words biased towards the language: τ-runs are sorted afterwards.
fn sorted_runs(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.len());
    let mut run: Vec<u32> = Vec::new();
    let flush = |run: &mut Vec<u32>, out: &mut Vec<Letter>| {
        run.sort_unstable();
        out.extend(run.drain(..).map(Letter::Tau));
    };
    for letter in w.letters() {
        match letter {
            Letter::Tau(j) => run.push(*j),
            z => {
                flush(&mut run, &mut out);
                out.push(z.clone());
            }
        }
    }
    flush(&mut run, &mut out);
    Word(out)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn automaton_recognizes_the_language((alphabet, w) in alphabet_and_word(10)) {
        let dfa = build_automaton(&alphabet);
        let min = dfa.minimize();
        let w2 = sorted_runs(&w);
        for word in [&w, &w2] {
            let member = is_in_l(word, &alphabet);
            prop_assert_eq!(dfa.accepts(word), member, "word {}", word);
            prop_assert_eq!(min.accepts(word), member, "word {}", word);
        }
    }

    #[test]
    fn words_survive_the_monomial_round_trip((alphabet, w) in alphabet_and_word(10)) {
        let w = sorted_runs(&w);
        prop_assume!(is_in_l(&w, &alphabet));
        let q = alphabet.q();
        let mono = word_to_monomial(&w, q, None).unwrap();
        prop_assert_eq!(mono.degree() as usize, q * w.zeta_count());
        let back = monomial_to_word(&mono, &w.tau_counts(q)).unwrap();
        prop_assert_eq!(&back, &w);
        let canon = to_canonical(&w, &alphabet).unwrap();
        prop_assert_eq!(from_canonical(&canon), w);
        let gens = monomial_normal_form(&mono, q).unwrap();
        prop_assert_eq!(gens.len(), canon.d());
    }
}

fn model(m: usize, facets: &[&[usize]], t: &[usize], states: &[(usize, u64)]) -> ModelSpec {
    ModelSpec {
        m,
        facets: facets.iter().map(|f| f.to_vec()).collect(),
        varying: t.iter().copied().collect(),
        states: states.iter().copied().collect(),
    }
}

#[test]
fn facet_order_outside_t_does_not_matter() {
    let a = model(5, &[&[1, 2], &[3, 4], &[5]], &[4], &[(1, 1), (2, 2), (3, 2), (5, 2)]);
    let b = model(5, &[&[5], &[3, 4], &[1, 2]], &[4], &[(1, 1), (2, 2), (3, 2), (5, 2)]);
    assert_eq!(hilbert_series(&a).unwrap(), hilbert_series(&b).unwrap());
}

#[test]
fn swapping_varying_facets_swaps_variables() {
    let a = model(3, &[&[1, 2], &[3]], &[2, 3], &[(1, 2)]);
    let b = model(3, &[&[3], &[1, 2]], &[2, 3], &[(1, 2)]);
    let ha = hilbert_series(&a).unwrap();
    let hb = hilbert_series(&b).unwrap();
    assert_ne!(ha, hb);
    assert_eq!(ha.permute_vars(&[1, 0, 2]).unwrap(), hb);
}

#[test]
fn elimination_order_does_not_matter() {
    let mut red = ReducedSpec::new(vec![1]);
    red.nu_fixed = vec![
        equivhilb::model::FixedFacet { facet: vec![2, 3], states: 2 },
        equivhilb::model::FixedFacet { facet: vec![5], states: 3 },
    ];
    let forward = reduced_hilbert_series_ordered(&red, &[0, 1], true).unwrap();
    let backward = reduced_hilbert_series_ordered(&red, &[1, 0], false).unwrap();
    assert_eq!(forward, backward);
}
