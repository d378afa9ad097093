//! Words over the alphabet `{τ_j} ∪ {ζ_i}`, membership in the language of
//! admissible words, and the bijection between admissible words with a fixed
//! τ-content and monomials of the toric algebra.
//!
//! Indices are 1-based throughout, matching the mathematical notation:
//! `Tau(j)` with `1 ≤ j ≤ q`, `Zeta(i)` with `1 ≤ i_j ≤ c_j`.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LanguageError {
    #[error("alphabet needs q ≥ 1 and every c_j ≥ 1")]
    BadAlphabet,
    #[error("letter {0} is not in the alphabet")]
    InvalidLetter(Letter),
    #[error("word is not in the language")]
    NotInLanguage,
    #[error("vector has length {got}, expected q = {q}")]
    Dimension { q: usize, got: usize },
    #[error("monomial is not in Mon(A): {0}")]
    NotInMonA(alloc::string::String),
    #[error("index k = {k} of y[{j},{i},{k}] exceeds n_{j} + 1 = {limit}")]
    IndexRange { j: u32, i: u32, k: u32, limit: u32 },
    #[error("enumeration would exceed the cap of {0} words")]
    ResourceCap(usize),
}

/// Letter of the alphabet. The derived order is `τ_1 < … < τ_q < ζ_i` with
/// ζ-letters in lexicographic order of `i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    Tau(u32),
    Zeta(Box<[u32]>),
}

impl Letter {
    pub fn zeta(i: &[u32]) -> Letter {
        Letter::Zeta(i.into())
    }

    pub fn is_tau(&self) -> bool {
        matches!(self, Letter::Tau(_))
    }
}

/// Text form: `t3`, `z(1,2)`.
impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Tau(j) => write!(f, "t{j}"),
            Letter::Zeta(i) => {
                f.write_str("z(")?;
                for (idx, v) in i.iter().enumerate() {
                    if idx > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

/// The letter universe determined by `(q, c)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    c: Vec<u32>,
}

impl Alphabet {
    pub fn new(c: &[u32]) -> Result<Self, LanguageError> {
        if c.is_empty() || c.contains(&0) {
            return Err(LanguageError::BadAlphabet);
        }
        Ok(Alphabet { c: c.to_vec() })
    }

    pub fn q(&self) -> usize {
        self.c.len()
    }

    pub fn c(&self) -> &[u32] {
        &self.c
    }

    pub fn num_zetas(&self) -> usize {
        self.c.iter().map(|&x| x as usize).product()
    }

    /// `[c_1] × ⋯ × [c_q]` in lexicographic order.
    pub fn zeta_tuples(&self) -> Vec<Box<[u32]>> {
        let mut out = Vec::with_capacity(self.num_zetas());
        let mut cur = vec![1u32; self.q()];
        loop {
            out.push(cur.clone().into_boxed_slice());
            let mut pos = self.q();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if cur[pos] < self.c[pos] {
                    cur[pos] += 1;
                    for slot in &mut cur[pos + 1..] {
                        *slot = 1;
                    }
                    break;
                }
            }
        }
    }

    /// All letters in canonical order.
    pub fn letters(&self) -> Vec<Letter> {
        (1..=self.q() as u32)
            .map(Letter::Tau)
            .chain(self.zeta_tuples().into_iter().map(Letter::Zeta))
            .collect()
    }

    pub fn contains(&self, letter: &Letter) -> bool {
        match letter {
            Letter::Tau(j) => (1..=self.q() as u32).contains(j),
            Letter::Zeta(i) => {
                i.len() == self.q() && i.iter().zip(&self.c).all(|(&v, &c)| (1..=c).contains(&v))
            }
        }
    }

    /// Position of `letter` in [`Alphabet::letters`].
    pub fn letter_index(&self, letter: &Letter) -> Option<usize> {
        if !self.contains(letter) {
            return None;
        }
        Some(match letter {
            Letter::Tau(j) => *j as usize - 1,
            Letter::Zeta(i) => {
                let mut idx = 0usize;
                for (v, c) in i.iter().zip(&self.c) {
                    idx = idx * *c as usize + (*v as usize - 1);
                }
                self.q() + idx
            }
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// Number of occurrences of each `τ_j`.
    pub fn tau_counts(&self, q: usize) -> Vec<u32> {
        let mut n = vec![0u32; q];
        for l in &self.0 {
            if let Letter::Tau(j) = l {
                n[*j as usize - 1] += 1;
            }
        }
        n
    }

    pub fn zeta_count(&self) -> usize {
        self.0.iter().filter(|l| !l.is_tau()).count()
    }
}

/// Space-separated letters; the empty word prints as `ε`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (idx, l) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Membership in the language.
///
/// (1) adjacent τ-letters are non-decreasing; (2) for every coordinate `j`,
/// consecutive ζ-letters with no `τ_j` between them have non-decreasing
/// `j`-th entries. Letters outside the alphabet make the word rejected.
pub fn is_in_l(w: &Word, alphabet: &Alphabet) -> bool {
    let q = alphabet.q();
    let mut last_tau: Option<u32> = None;
    let mut last_entry: Vec<Option<u32>> = vec![None; q];
    for letter in &w.0 {
        if !alphabet.contains(letter) {
            return false;
        }
        match letter {
            Letter::Tau(j) => {
                if last_tau.is_some_and(|prev| prev > *j) {
                    return false;
                }
                last_tau = Some(*j);
                last_entry[*j as usize - 1] = None;
            }
            Letter::Zeta(i) => {
                last_tau = None;
                for (slot, &v) in last_entry.iter_mut().zip(i.iter()) {
                    if slot.is_some_and(|prev| prev > v) {
                        return false;
                    }
                    *slot = Some(v);
                }
            }
        }
    }
    true
}

/// `τ^{k_1} ζ_{i_1} τ^{k_2} ⋯ ζ_{i_d} τ^{k_{d+1}}`, where `τ^k` abbreviates
/// `τ_1^{k_1} ⋯ τ_q^{k_q}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalWord {
    pub k: Vec<Vec<u32>>,
    pub zetas: Vec<Box<[u32]>>,
}

impl CanonicalWord {
    pub fn d(&self) -> usize {
        self.zetas.len()
    }

    pub fn to_word(&self) -> Word {
        let mut letters = Vec::new();
        for (l, block) in self.k.iter().enumerate() {
            for (j, &reps) in block.iter().enumerate() {
                for _ in 0..reps {
                    letters.push(Letter::Tau(j as u32 + 1));
                }
            }
            if let Some(i) = self.zetas.get(l) {
                letters.push(Letter::Zeta(i.clone()));
            }
        }
        Word(letters)
    }
}

pub fn to_canonical(w: &Word, alphabet: &Alphabet) -> Result<CanonicalWord, LanguageError> {
    if !is_in_l(w, alphabet) {
        return Err(LanguageError::NotInLanguage);
    }
    let q = alphabet.q();
    let mut k = vec![vec![0u32; q]];
    let mut zetas = Vec::new();
    for letter in &w.0 {
        match letter {
            Letter::Tau(j) => {
                let last = k.last_mut().expect("at least one block");
                last[*j as usize - 1] += 1;
            }
            Letter::Zeta(i) => {
                zetas.push(i.clone());
                k.push(vec![0u32; q]);
            }
        }
    }
    Ok(CanonicalWord { k, zetas })
}

pub fn from_canonical(cw: &CanonicalWord) -> Word {
    cw.to_word()
}

/// Variable `y_{j,i,k}` of the ambient polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YVar {
    pub j: u32,
    pub i: u32,
    pub k: u32,
}

/// Monomial in the `y_{j,i,k}`, as an exponent map.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct YMonomial(pub BTreeMap<YVar, u32>);

impl YMonomial {
    pub fn one() -> Self {
        YMonomial(BTreeMap::new())
    }

    pub fn mul_var(&mut self, var: YVar, exp: u32) {
        if exp > 0 {
            *self.0.entry(var).or_insert(0) += exp;
        }
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }
}

/// `y[1,1,2]^2*y[2,2,2]`; the unit monomial prints as `1`.
impl fmt::Display for YMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (idx, (v, e)) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str("*")?;
            }
            write!(f, "y[{},{},{}]", v.j, v.i, v.k)?;
            if *e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// The monomial of a word. A ζ-letter contributes `∏_j y_{j,i_j,k_j}^{a_j}`
/// where `k_j − 1` counts the `τ_j` to its left. `a = None` means all ones.
pub fn word_to_monomial(w: &Word, q: usize, a: Option<&[u32]>) -> Result<YMonomial, LanguageError> {
    if let Some(a) = a {
        if a.len() != q {
            return Err(LanguageError::Dimension { q, got: a.len() });
        }
    }
    let mut shift = vec![1u32; q];
    let mut out = YMonomial::one();
    for letter in &w.0 {
        match letter {
            Letter::Tau(j) => {
                let j = *j as usize;
                if j == 0 || j > q {
                    return Err(LanguageError::InvalidLetter(letter.clone()));
                }
                shift[j - 1] += 1;
            }
            Letter::Zeta(i) => {
                if i.len() != q {
                    return Err(LanguageError::InvalidLetter(letter.clone()));
                }
                for j in 0..q {
                    let exp = a.map_or(1, |a| a[j]);
                    out.mul_var(
                        YVar {
                            j: j as u32 + 1,
                            i: i[j],
                            k: shift[j],
                        },
                        exp,
                    );
                }
            }
        }
    }
    Ok(out)
}

/// One algebra generator `∏_j y_{j, i_j, k_j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub i: Box<[u32]>,
    pub k: Box<[u32]>,
}

/// Unique factorization into generators such that, for every `j`, the pairs
/// `(k_{(l,j)}, i_{(l,j)})` are lexicographically non-decreasing in `l`.
pub fn monomial_normal_form(mono: &YMonomial, q: usize) -> Result<Vec<Generator>, LanguageError> {
    let mut per_j: Vec<Vec<(u32, u32)>> = vec![Vec::new(); q];
    for (v, &e) in &mono.0 {
        if v.j == 0 || v.j as usize > q || v.i == 0 || v.k == 0 {
            return Err(LanguageError::NotInMonA(alloc::format!(
                "variable y[{},{},{}] is out of range for q = {q}",
                v.j,
                v.i,
                v.k
            )));
        }
        for _ in 0..e {
            per_j[v.j as usize - 1].push((v.k, v.i));
        }
    }
    let d = per_j[0].len();
    for (j, list) in per_j.iter().enumerate() {
        if list.len() != d {
            let culprit = if list.len() > d { list } else { &per_j[0] };
            let (k, i) = culprit[d.min(list.len())];
            let owner = if list.len() > d { j + 1 } else { 1 };
            return Err(LanguageError::NotInMonA(alloc::format!(
                "y[{owner},{i},{k}] cannot be matched: {} factors with j = 1 but {} with j = {}",
                d,
                list.len(),
                j + 1
            )));
        }
    }
    for list in &mut per_j {
        list.sort_unstable();
    }
    Ok((0..d)
        .map(|l| Generator {
            i: per_j.iter().map(|list| list[l].1).collect(),
            k: per_j.iter().map(|list| list[l].0).collect(),
        })
        .collect())
}

/// Inverse of [`word_to_monomial`] on words with τ-content `n`:
/// `τ^{k_1 − 𝟙} ζ_{i_1} τ^{k_2 − k_1} ⋯ ζ_{i_d} τ^{n + 𝟙 − k_d}`.
pub fn monomial_to_word(mono: &YMonomial, n: &[u32]) -> Result<Word, LanguageError> {
    let q = n.len();
    let gens = monomial_normal_form(mono, q)?;
    for g in &gens {
        for (j, (&k, &nj)) in g.k.iter().zip(n).enumerate() {
            if k > nj + 1 {
                return Err(LanguageError::IndexRange {
                    j: j as u32 + 1,
                    i: g.i[j],
                    k,
                    limit: nj + 1,
                });
            }
        }
    }
    let mut prev = vec![1u32; q];
    let mut k = Vec::with_capacity(gens.len() + 1);
    for g in &gens {
        k.push(g.k.iter().zip(&prev).map(|(a, b)| a - b).collect());
        prev.copy_from_slice(&g.k);
    }
    k.push(n.iter().zip(&prev).map(|(a, b)| a + 1 - b).collect());
    Ok(CanonicalWord {
        k,
        zetas: gens.into_iter().map(|g| g.i).collect(),
    }
    .to_word())
}

/// All words of the language with exactly `n_j` copies of `τ_j` and `d`
/// ζ-letters, generated from canonical forms (compositions of each `n_j`
/// into `d + 1` parts, filtered by the monotonicity constraint).
pub fn enumerate_ln(
    alphabet: &Alphabet,
    n: &[u32],
    d: usize,
    cap: usize,
) -> Result<Vec<Word>, LanguageError> {
    let q = alphabet.q();
    if n.len() != q {
        return Err(LanguageError::Dimension { q, got: n.len() });
    }
    let tuples = alphabet.zeta_tuples();
    let mut out = Vec::new();
    let mut k: Vec<Vec<u32>> = Vec::with_capacity(d + 1);
    let mut zetas: Vec<Box<[u32]>> = Vec::with_capacity(d);
    let mut remaining = n.to_vec();
    let mut ctx = Enum {
        tuples: &tuples,
        d,
        cap,
        out: &mut out,
    };
    ctx.block(&mut k, &mut zetas, &mut remaining)?;
    Ok(out)
}

struct Enum<'a> {
    tuples: &'a [Box<[u32]>],
    d: usize,
    cap: usize,
    out: &'a mut Vec<Word>,
}

impl Enum<'_> {
    /// Chooses the τ-block `k_l` for `l = k.len() + 1`.
    fn block(
        &mut self,
        k: &mut Vec<Vec<u32>>,
        zetas: &mut Vec<Box<[u32]>>,
        remaining: &mut Vec<u32>,
    ) -> Result<(), LanguageError> {
        if zetas.len() == self.d {
            if self.out.len() >= self.cap {
                return Err(LanguageError::ResourceCap(self.cap));
            }
            k.push(remaining.clone());
            self.out.push(
                CanonicalWord {
                    k: k.clone(),
                    zetas: zetas.clone(),
                }
                .to_word(),
            );
            k.pop();
            return Ok(());
        }
        let mut block = vec![0u32; remaining.len()];
        loop {
            self.zeta(k, zetas, remaining, &block)?;
            // Next vector 0 ≤ block ≤ remaining (odometer).
            let mut pos = block.len();
            loop {
                if pos == 0 {
                    return Ok(());
                }
                pos -= 1;
                if block[pos] < remaining[pos] {
                    block[pos] += 1;
                    for slot in &mut block[pos + 1..] {
                        *slot = 0;
                    }
                    break;
                }
            }
        }
    }

    fn zeta(
        &mut self,
        k: &mut Vec<Vec<u32>>,
        zetas: &mut Vec<Box<[u32]>>,
        remaining: &mut Vec<u32>,
        block: &[u32],
    ) -> Result<(), LanguageError> {
        let first = zetas.is_empty();
        for i in self.tuples {
            if !first {
                let prev = zetas.last().expect("nonempty");
                let ok = (0..block.len()).all(|j| block[j] > 0 || prev[j] <= i[j]);
                if !ok {
                    continue;
                }
            }
            for (r, b) in remaining.iter_mut().zip(block) {
                *r -= b;
            }
            k.push(block.to_vec());
            zetas.push(i.clone());
            let res = self.block(k, zetas, remaining);
            zetas.pop();
            k.pop();
            for (r, b) in remaining.iter_mut().zip(block) {
                *r += b;
            }
            res?;
        }
        Ok(())
    }
}
