//! The deterministic automaton recognizing the language of admissible words,
//! with Moore minimization and DOT / table export.
//!
//! The transition function is partial: a missing transition means the
//! machine halts and rejects. Minimization treats "undefined" as an implicit
//! sink and never materializes it.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::{self, Write as _};

use crate::language::{Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("transition table has {got} rows for {expected} states")]
    RowCount { expected: usize, got: usize },
    #[error("state {state} has {got} transition slots, alphabet has {expected} letters")]
    RowWidth {
        state: usize,
        expected: usize,
        got: usize,
    },
    #[error("transition from state {from} targets missing state {to}")]
    DanglingTransition { from: usize, to: usize },
    #[error("start state {0} does not exist")]
    BadStart(usize),
}

/// Strictly increasing chain in `[q]`, stored as a bit set (bit `j − 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Chain(u32);

impl Chain {
    pub const EMPTY: Chain = Chain(0);

    pub fn from_elems(elems: &[u32]) -> Chain {
        Chain(elems.iter().fold(0, |acc, &j| acc | (1 << (j - 1))))
    }

    pub fn contains(self, j: u32) -> bool {
        j >= 1 && self.0 & (1 << (j - 1)) != 0
    }

    pub fn with(self, j: u32) -> Chain {
        Chain(self.0 | (1 << (j - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Largest element; `0` for the empty chain.
    pub fn max_elem(self) -> u32 {
        32 - self.0.leading_zeros()
    }

    pub fn elems(self) -> Vec<u32> {
        (1..=32).filter(|&j| self.contains(j)).collect()
    }

    /// Element directly after `j`, if any.
    pub fn next_after(self, j: u32) -> Option<u32> {
        (j + 1..=self.max_elem()).find(|&k| self.contains(k))
    }

    /// All non-empty chains in `[q]`, ordered by size and then
    /// lexicographically.
    pub fn all_nonempty(q: u32) -> Vec<Chain> {
        let mut chains: Vec<Chain> = (1u32..(1 << q)).map(Chain).collect();
        chains.sort_by_key(|c| (c.len(), c.elems()));
        chains
    }
}

impl PartialOrd for Chain {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Chain {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        (self.len(), self.elems()).cmp(&(other.len(), other.elems()))
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, j) in self.elems().into_iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{j}")?;
        }
        f.write_str("}")
    }
}

/// States of the unminimized automaton: `p_j`, `p_i`, `p_{i,C,k}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StateId {
    PJ(u32),
    PI(Box<[u32]>),
    PIC { i: Box<[u32]>, chain: Chain, k: u32 },
}

fn write_tuple(f: &mut fmt::Formatter<'_>, i: &[u32]) -> fmt::Result {
    f.write_str("(")?;
    for (idx, v) in i.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    f.write_str(")")
}

/// `p0`, `p(1,2)`, `p(1,2){1,3}3`.
impl fmt::Display for StateId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StateId::PJ(j) => write!(f, "p{j}"),
            StateId::PI(i) => {
                f.write_str("p")?;
                write_tuple(f, i)
            }
            StateId::PIC { i, chain, k } => {
                f.write_str("p")?;
                write_tuple(f, i)?;
                write!(f, "{chain}{k}")
            }
        }
    }
}

/// Deterministic automaton with a partial transition function.
///
/// States are `0..n`; `delta[s][a]` is the target of letter number `a`
/// (in [`Alphabet::letters`] order) from state `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Alphabet,
    letters: Vec<Letter>,
    labels: Vec<String>,
    delta: Vec<Vec<Option<u32>>>,
    start: u32,
    accepting: Vec<bool>,
}

impl Dfa {
    pub fn new(
        alphabet: Alphabet,
        labels: Vec<String>,
        delta: Vec<Vec<Option<u32>>>,
        start: usize,
        accepting: Vec<bool>,
    ) -> Result<Self, AutomatonError> {
        let n = labels.len();
        let letters = alphabet.letters();
        for len in [delta.len(), accepting.len()] {
            if len != n {
                return Err(AutomatonError::RowCount {
                    expected: n,
                    got: len,
                });
            }
        }
        for (s, row) in delta.iter().enumerate() {
            if row.len() != letters.len() {
                return Err(AutomatonError::RowWidth {
                    state: s,
                    expected: letters.len(),
                    got: row.len(),
                });
            }
            if let Some(&to) = row.iter().flatten().find(|&&to| to as usize >= n) {
                return Err(AutomatonError::DanglingTransition {
                    from: s,
                    to: to as usize,
                });
            }
        }
        if start >= n {
            return Err(AutomatonError::BadStart(start));
        }
        Ok(Dfa {
            alphabet,
            letters,
            labels,
            delta,
            start: start as u32,
            accepting,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn num_states(&self) -> usize {
        self.labels.len()
    }

    pub fn start(&self) -> usize {
        self.start as usize
    }

    pub fn label(&self, state: usize) -> &str {
        &self.labels[state]
    }

    pub fn is_accepting(&self, state: usize) -> bool {
        self.accepting[state]
    }

    pub fn num_accepting(&self) -> usize {
        self.accepting.iter().filter(|&&a| a).count()
    }

    /// Target of letter number `letter` from `state`.
    pub fn step_index(&self, state: usize, letter: usize) -> Option<usize> {
        self.delta[state][letter].map(|t| t as usize)
    }

    pub fn step(&self, state: usize, letter: &Letter) -> Option<usize> {
        let a = self.alphabet.letter_index(letter)?;
        self.step_index(state, a)
    }

    /// State reached after reading `w`, or `None` if the machine halts.
    pub fn run(&self, w: &Word) -> Option<usize> {
        w.letters()
            .iter()
            .try_fold(self.start(), |s, l| self.step(s, l))
    }

    pub fn accepts(&self, w: &Word) -> bool {
        self.run(w).is_some_and(|s| self.accepting[s])
    }

    /// All defined transitions `(from, letter index, to)` in state order,
    /// then letter order.
    pub fn transitions(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.delta.iter().enumerate().flat_map(|(s, row)| {
            row.iter()
                .enumerate()
                .filter_map(move |(a, to)| to.map(|to| (s, a, to as usize)))
        })
    }

    pub fn num_transitions(&self) -> usize {
        self.transitions().count()
    }

    pub fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        let mut stack = vec![self.start()];
        seen[self.start()] = true;
        while let Some(s) = stack.pop() {
            for to in self.delta[s].iter().flatten() {
                let to = *to as usize;
                if !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }

    /// States from which some accepting state can be reached.
    pub fn co_reachable(&self) -> Vec<bool> {
        let n = self.num_states();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (s, _, to) in self.transitions() {
            preds[to].push(s);
        }
        let mut live = self.accepting.clone();
        let mut stack: Vec<usize> = (0..n).filter(|&s| live[s]).collect();
        while let Some(s) = stack.pop() {
            for &p in &preds[s] {
                if !live[p] {
                    live[p] = true;
                    stack.push(p);
                }
            }
        }
        live
    }

    /// Sub-automaton on the states that are reachable and can still reach
    /// an accepting state. The start state is always kept. Returns the new
    /// automaton and, for each kept state, its index in `self`.
    pub fn trim(&self) -> (Dfa, Vec<usize>) {
        let reach = self.reachable();
        let live = self.co_reachable();
        let keep: Vec<usize> = (0..self.num_states())
            .filter(|&s| s == self.start() || (reach[s] && live[s]))
            .collect();
        let mut new_index = vec![None; self.num_states()];
        for (idx, &s) in keep.iter().enumerate() {
            new_index[s] = Some(idx as u32);
        }
        let delta = keep
            .iter()
            .map(|&s| {
                self.delta[s]
                    .iter()
                    .map(|to| to.and_then(|to| new_index[to as usize]))
                    .collect()
            })
            .collect();
        let dfa = Dfa {
            alphabet: self.alphabet.clone(),
            letters: self.letters.clone(),
            labels: keep.iter().map(|&s| self.labels[s].clone()).collect(),
            delta,
            start: new_index[self.start()].expect("start kept"),
            accepting: keep.iter().map(|&s| self.accepting[s]).collect(),
        };
        (dfa, keep)
    }

    /// Minimal partial automaton for the same language (Moore partition
    /// refinement). States are numbered in breadth-first order from the
    /// start, exploring letters in alphabet order; each class is labelled by
    /// its first member.
    pub fn minimize(&self) -> Dfa {
        let (trimmed, _) = self.trim();
        let n = trimmed.num_states();
        let mut class: Vec<u32> = trimmed.accepting.iter().map(|&a| a as u32).collect();
        let mut num_classes = renumber(&mut class);
        loop {
            let mut sigs: BTreeMap<(u32, Vec<Option<u32>>), u32> = BTreeMap::new();
            let mut next = vec![0u32; n];
            for s in 0..n {
                let sig = (
                    class[s],
                    trimmed.delta[s]
                        .iter()
                        .map(|to| to.map(|to| class[to as usize]))
                        .collect::<Vec<_>>(),
                );
                let fresh = sigs.len() as u32;
                next[s] = *sigs.entry(sig).or_insert(fresh);
            }
            let count = renumber(&mut next);
            class = next;
            if count == num_classes {
                break;
            }
            num_classes = count;
        }

        let mut rep: Vec<Option<usize>> = vec![None; num_classes];
        for s in 0..n {
            rep[class[s] as usize].get_or_insert(s);
        }
        let quotient = Dfa {
            alphabet: trimmed.alphabet.clone(),
            letters: trimmed.letters.clone(),
            labels: rep
                .iter()
                .map(|r| trimmed.labels[r.expect("class has a member")].clone())
                .collect(),
            delta: rep
                .iter()
                .map(|r| {
                    trimmed.delta[r.expect("class has a member")]
                        .iter()
                        .map(|to| to.map(|to| class[to as usize]))
                        .collect()
                })
                .collect(),
            start: class[trimmed.start()],
            accepting: rep
                .iter()
                .map(|r| trimmed.accepting[r.expect("class has a member")])
                .collect(),
        };
        quotient.bfs_renumbered()
    }

    /// Copy with states renumbered in breadth-first order from the start;
    /// unreachable states are dropped.
    pub fn bfs_renumbered(&self) -> Dfa {
        let mut order = Vec::new();
        let mut new_index = vec![None; self.num_states()];
        let mut queue = VecDeque::from([self.start()]);
        new_index[self.start()] = Some(0u32);
        while let Some(s) = queue.pop_front() {
            order.push(s);
            for to in self.delta[s].iter().flatten() {
                let to = *to as usize;
                if new_index[to].is_none() {
                    new_index[to] = Some((order.len() + queue.len()) as u32);
                    queue.push_back(to);
                }
            }
        }
        Dfa {
            alphabet: self.alphabet.clone(),
            letters: self.letters.clone(),
            labels: order.iter().map(|&s| self.labels[s].clone()).collect(),
            delta: order
                .iter()
                .map(|&s| {
                    self.delta[s]
                        .iter()
                        .map(|to| to.and_then(|to| new_index[to as usize]))
                        .collect()
                })
                .collect(),
            start: 0,
            accepting: order.iter().map(|&s| self.accepting[s]).collect(),
        }
    }

    /// Same alphabet and, after breadth-first renumbering, the same
    /// transitions and accepting set. Labels are ignored.
    pub fn is_isomorphic(&self, other: &Dfa) -> bool {
        let a = self.bfs_renumbered();
        let b = other.bfs_renumbered();
        a.alphabet == b.alphabet && a.delta == b.delta && a.accepting == b.accepting
    }

    /// Graphviz rendering. Accepting states are double circles; parallel
    /// transitions share one edge with comma-separated labels.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str("digraph dfa {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  __start [shape=point];\n");
        for s in 0..self.num_states() {
            let shape = if self.accepting[s] {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                out,
                "  s{s} [label=\"{}\", shape={shape}];",
                escape(&self.labels[s])
            );
        }
        let _ = writeln!(out, "  __start -> s{};", self.start);
        for s in 0..self.num_states() {
            let mut edges: BTreeMap<usize, Vec<String>> = BTreeMap::new();
            for (a, to) in self.delta[s].iter().enumerate() {
                if let Some(to) = to {
                    edges
                        .entry(*to as usize)
                        .or_default()
                        .push(self.letters[a].to_string());
                }
            }
            for (to, labels) in edges {
                let _ = writeln!(out, "  s{s} -> s{to} [label=\"{}\"];", labels.join(", "));
            }
        }
        out.push_str("}\n");
        out
    }

    /// One `from<TAB>letter<TAB>to` line per defined transition, followed by
    /// the start and accepting states.
    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "start\t{}", self.labels[self.start()]);
        let accepting: Vec<&str> = (0..self.num_states())
            .filter(|&s| self.accepting[s])
            .map(|s| self.labels[s].as_str())
            .collect();
        let _ = writeln!(out, "accepting\t{}", accepting.join(" "));
        for (s, a, to) in self.transitions() {
            let _ = writeln!(
                out,
                "{}\t{}\t{}",
                self.labels[s], self.letters[a], self.labels[to]
            );
        }
        out
    }
}

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Renames class ids to `0..k` in order of first appearance; returns `k`.
fn renumber(class: &mut [u32]) -> usize {
    let mut map: BTreeMap<u32, u32> = BTreeMap::new();
    for c in class.iter_mut() {
        let fresh = map.len() as u32;
        *c = *map.entry(*c).or_insert(fresh);
    }
    map.len()
}

/// `(q + 1) + ∏c + ∏c · q · 2^{q−1}`.
pub fn expected_state_count(c: &[u32]) -> usize {
    let q = c.len();
    let prod: usize = c.iter().map(|&x| x as usize).product();
    (q + 1) + prod + prod * q * (1 << (q - 1))
}

/// All states in construction order: `p_0..p_q`, then `p_i` for `i` in
/// lexicographic order, then `p_{i,C,k}` grouped by `i`, chains by size and
/// then lexicographically, `k` increasing.
pub fn automaton_states(alphabet: &Alphabet) -> Vec<StateId> {
    let q = alphabet.q() as u32;
    let tuples = alphabet.zeta_tuples();
    let chains = Chain::all_nonempty(q);
    let mut states: Vec<StateId> = (0..=q).map(StateId::PJ).collect();
    states.extend(tuples.iter().cloned().map(StateId::PI));
    for i in &tuples {
        for &chain in &chains {
            for k in chain.elems() {
                states.push(StateId::PIC {
                    i: i.clone(),
                    chain,
                    k,
                });
            }
        }
    }
    states
}

/// The automaton recognizing the admissible words over `alphabet`.
///
/// States and accepting set are as in the classical construction. The
/// τ-rules out of `p_i` and `p_{i,C,k}` are made deterministic: instead of
/// guessing the whole support `C` of the coming τ-block on its first letter,
/// the chain grows as new τ-indices appear. From `p_{i,C,j}`:
/// - `τ_j` loops, and `τ_k` for `k` directly after `j` in `C` moves to `k`;
/// - if `j = max C`, `τ_k` with `k > j` moves to `p_{i, C ∪ {k}, k}`;
/// - if `j = max C`, `ζ_{i'}` moves to `p_{i'}` when `i_k ≤ i'_k` for `k ∉ C`.
///
/// Every state of the classical construction is kept (the ones with
/// `k < max C` are simply not reachable), so the state count is the closed
/// formula of [`expected_state_count`].
pub fn build_automaton(alphabet: &Alphabet) -> Dfa {
    let q = alphabet.q() as u32;
    let letters = alphabet.letters();
    let states = automaton_states(alphabet);
    let index: BTreeMap<&StateId, u32> = states
        .iter()
        .enumerate()
        .map(|(idx, s)| (s, idx as u32))
        .collect();
    let id = |s: StateId| -> Option<u32> { Some(index[&s]) };

    let mut delta = Vec::with_capacity(states.len());
    for state in &states {
        let row: Vec<Option<u32>> = letters
            .iter()
            .map(|letter| match (state, letter) {
                (StateId::PJ(j), Letter::Tau(k)) => {
                    if *j == 0 || j <= k {
                        id(StateId::PJ(*k))
                    } else {
                        None
                    }
                }
                (StateId::PJ(_), Letter::Zeta(i)) => id(StateId::PI(i.clone())),
                (StateId::PI(i), Letter::Tau(k)) => id(StateId::PIC {
                    i: i.clone(),
                    chain: Chain::from_elems(&[*k]),
                    k: *k,
                }),
                (StateId::PI(i), Letter::Zeta(i2)) => {
                    if i.iter().zip(i2.iter()).all(|(a, b)| a <= b) {
                        id(StateId::PI(i2.clone()))
                    } else {
                        None
                    }
                }
                (StateId::PIC { i, chain, k: j }, Letter::Tau(k)) => {
                    if k == j || chain.next_after(*j) == Some(*k) {
                        id(StateId::PIC {
                            i: i.clone(),
                            chain: *chain,
                            k: *k,
                        })
                    } else if *j == chain.max_elem() && k > j {
                        id(StateId::PIC {
                            i: i.clone(),
                            chain: chain.with(*k),
                            k: *k,
                        })
                    } else {
                        None
                    }
                }
                (StateId::PIC { i, chain, k: j }, Letter::Zeta(i2)) => {
                    let ok = *j == chain.max_elem()
                        && (1..=q).all(|k| chain.contains(k) || i[k as usize - 1] <= i2[k as usize - 1]);
                    if ok {
                        id(StateId::PI(i2.clone()))
                    } else {
                        None
                    }
                }
            })
            .collect();
        delta.push(row);
    }
    let accepting = states
        .iter()
        .map(|s| match s {
            StateId::PJ(_) | StateId::PI(_) => true,
            StateId::PIC { chain, k, .. } => *k == chain.max_elem(),
        })
        .collect();
    Dfa {
        alphabet: alphabet.clone(),
        letters,
        labels: states.iter().map(ToString::to_string).collect(),
        delta,
        start: 0,
        accepting,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::language::is_in_l;

    fn t(j: u32) -> Letter {
        Letter::Tau(j)
    }

    fn all_words(letters: &[Letter], max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut frontier = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &frontier {
                for l in letters {
                    let mut v = w.0.clone();
                    v.push(l.clone());
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out
    }

    #[test]
    fn chain_basics() {
        let c = Chain::from_elems(&[1, 3]);
        assert_eq!(c.max_elem(), 3);
        assert_eq!(Chain::EMPTY.max_elem(), 0);
        assert_eq!(c.next_after(1), Some(3));
        assert_eq!(c.next_after(3), None);
        assert_eq!(c.to_string(), "{1,3}");
        let all = Chain::all_nonempty(3);
        let rendered: Vec<String> = all.iter().map(ToString::to_string).collect();
        assert_eq!(
            rendered,
            ["{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]
        );
    }

    #[test]
    fn state_counts() {
        for c in [&[1u32, 1, 1][..], &[1], &[2, 2], &[3, 1, 2], &[2, 2, 2, 2]] {
            let a = Alphabet::new(c).unwrap();
            assert_eq!(build_automaton(&a).num_states(), expected_state_count(c));
        }
        assert_eq!(expected_state_count(&[1, 1, 1]), 17);
        assert_eq!(expected_state_count(&[1]), 4);
        assert_eq!(expected_state_count(&[2, 2]), 23);
    }

    #[test]
    fn accepting_set() {
        let a = Alphabet::new(&[1, 1, 1]).unwrap();
        let dfa = build_automaton(&a);
        // 4 + 1 + one p_{1,C,max C} per chain.
        assert_eq!(dfa.num_accepting(), 4 + 1 + 7);
        assert!(dfa.is_accepting(dfa.start()));
    }

    #[test]
    fn runs() {
        let a = Alphabet::new(&[1, 1]).unwrap();
        let dfa = build_automaton(&a);
        assert!(dfa.accepts(&Word::empty()));
        assert!(!dfa.accepts(&Word(vec![t(2), t(1)])));
        assert!(dfa.accepts(&Word(vec![t(1), t(2)])));
        assert!(!dfa.accepts(&Word(vec![Letter::zeta(&[2, 1])])));
    }

    #[test]
    fn matches_membership_up_to_length_5() {
        for c in [&[1u32][..], &[2], &[1, 2], &[2, 2]] {
            let a = Alphabet::new(c).unwrap();
            let dfa = build_automaton(&a);
            for w in all_words(&a.letters(), 5) {
                assert_eq!(dfa.accepts(&w), is_in_l(&w, &a), "c={c:?} w={w}");
            }
        }
    }

    #[test]
    fn minimal_sizes() {
        // With all c_j = 1 the only constraint is monotone τ-runs.
        let a = Alphabet::new(&[1]).unwrap();
        assert_eq!(build_automaton(&a).minimize().num_states(), 1);
        let a = Alphabet::new(&[1, 1, 1]).unwrap();
        let min = build_automaton(&a).minimize();
        assert_eq!(min.num_states(), 3);
        assert!(min.is_isomorphic(&min.minimize()));
    }

    #[test]
    fn minimize_preserves_language() {
        let a = Alphabet::new(&[2, 1]).unwrap();
        let dfa = build_automaton(&a);
        let min = dfa.minimize();
        assert!(min.num_states() < dfa.num_states());
        for w in all_words(&a.letters(), 5) {
            assert_eq!(dfa.accepts(&w), min.accepts(&w), "{w}");
        }
    }

    #[test]
    fn empty_language_minimizes_to_start() {
        let a = Alphabet::new(&[1]).unwrap();
        let dfa = Dfa::new(
            a,
            vec!["a".into(), "b".into()],
            vec![vec![Some(1), None], vec![None, None]],
            0,
            vec![false, false],
        )
        .unwrap();
        let min = dfa.minimize();
        assert_eq!(min.num_states(), 1);
        assert_eq!(min.num_transitions(), 0);
        assert!(!min.to_dot().contains("doublecircle"));
    }

    #[test]
    fn constructor_validation() {
        let a = Alphabet::new(&[1]).unwrap();
        assert_eq!(
            Dfa::new(a.clone(), vec!["a".into()], vec![vec![Some(3), None]], 0, vec![true]),
            Err(AutomatonError::DanglingTransition { from: 0, to: 3 })
        );
        assert_eq!(
            Dfa::new(a.clone(), vec!["a".into()], vec![vec![None]], 0, vec![true]),
            Err(AutomatonError::RowWidth {
                state: 0,
                expected: 2,
                got: 1
            })
        );
        assert_eq!(
            Dfa::new(a, vec!["a".into()], vec![vec![None, None]], 1, vec![true]),
            Err(AutomatonError::BadStart(1))
        );
    }

    #[test]
    fn dot_merges_parallel_edges() {
        let a = Alphabet::new(&[1]).unwrap();
        let dot = build_automaton(&a).minimize().to_dot();
        assert_eq!(
            dot,
            "digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n  \
             s0 [label=\"p0\", shape=doublecircle];\n  __start -> s0;\n  \
             s0 -> s0 [label=\"t1, z(1)\"];\n}\n"
        );
    }

    #[test]
    fn table_dump() {
        let a = Alphabet::new(&[1]).unwrap();
        let table = build_automaton(&a).minimize().to_table();
        assert_eq!(table, "start\tp0\naccepting\tp0\np0\tt1\tp0\np0\tz(1)\tp0\n");
    }
}
