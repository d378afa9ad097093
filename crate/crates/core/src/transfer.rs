//! Transfer-matrix method: the weighted generating function of the language
//! of a [`Dfa`] as an exact rational function, and the equivariant Hilbert
//! series built on it.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::arith::{ArithError, Monomial, MultiPoly, RatFunc, VarSet};
use crate::automaton::{build_automaton, Dfa};
use crate::language::{Alphabet, LanguageError, Letter};
use crate::model::ReducedSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TransferError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Language(#[from] LanguageError),
    #[error("weight function has {got} weights for {expected} letters")]
    WeightCount { expected: usize, got: usize },
    #[error("letter {0} has weight 1")]
    UnitWeight(Letter),
    #[error("weight function and automaton use different alphabets")]
    AlphabetMismatch,
    #[error("internal error: singular transfer system")]
    Singular,
    #[error("internal error: inexact division during elimination")]
    InexactDivision,
    #[error("reduced model still has fixed facets; use the model-level series")]
    FixedFacets,
    #[error("{expected} series variables expected, got {got}")]
    VariableCount { expected: usize, got: usize },
}

/// Monoid homomorphism from words to monomials, given on letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightFunction {
    alphabet: Alphabet,
    vars: VarSet,
    weights: Vec<Monomial>,
}

impl WeightFunction {
    /// `weights[a]` is the weight of letter number `a` in alphabet order.
    /// No letter may have weight 1.
    pub fn new(alphabet: Alphabet, vars: VarSet, weights: Vec<Monomial>) -> Result<Self, TransferError> {
        let letters = alphabet.letters();
        if weights.len() != letters.len() {
            return Err(TransferError::WeightCount {
                expected: letters.len(),
                got: weights.len(),
            });
        }
        if let Some(a) = weights.iter().position(Monomial::is_one) {
            return Err(TransferError::UnitWeight(letters[a].clone()));
        }
        Ok(WeightFunction {
            alphabet,
            vars,
            weights,
        })
    }

    /// `τ_j ↦ vars[s_vars[j]]`, `ζ_i ↦ vars[t_var]`.
    pub fn series(
        alphabet: &Alphabet,
        vars: &VarSet,
        s_vars: &[usize],
        t_var: usize,
    ) -> Result<Self, TransferError> {
        if s_vars.len() != alphabet.q() {
            return Err(TransferError::VariableCount {
                expected: alphabet.q(),
                got: s_vars.len(),
            });
        }
        if let Some(&v) = s_vars.iter().chain([&t_var]).find(|&&v| v >= vars.len()) {
            return Err(ArithError::VarOutOfRange(v).into());
        }
        let weights = alphabet
            .letters()
            .iter()
            .map(|l| match l {
                Letter::Tau(j) => Monomial::var(s_vars[*j as usize - 1], 1),
                Letter::Zeta(_) => Monomial::var(t_var, 1),
            })
            .collect();
        WeightFunction::new(alphabet.clone(), vars.clone(), weights)
    }

    /// The Hilbert-series weights over `s1, …, sq, t`.
    pub fn hilbert(alphabet: &Alphabet) -> Result<Self, TransferError> {
        let q = alphabet.q();
        let vars = VarSet::hilbert(q)?;
        let s_vars: Vec<usize> = (0..q).collect();
        WeightFunction::series(alphabet, &vars, &s_vars, q)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn weight(&self, letter: usize) -> &Monomial {
        &self.weights[letter]
    }
}

/// Sparse 0–1 matrix of one letter: entry `(i, j)` is 1 iff the letter leads
/// from state `j` to state `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransitionMatrix {
    size: usize,
    /// `(row, column)` pairs, sorted by column.
    ones: Vec<(usize, usize)>,
}

impl TransitionMatrix {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn ones(&self) -> &[(usize, usize)] {
        &self.ones
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.ones.contains(&(row, col))
    }

    pub fn is_zero(&self) -> bool {
        self.ones.is_empty()
    }

    /// `M v` over the integers.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; self.size];
        for &(i, j) in &self.ones {
            out[i] += v[j];
        }
        out
    }
}

/// One matrix per letter, in alphabet order.
pub fn transition_matrices(dfa: &Dfa) -> Vec<(Letter, TransitionMatrix)> {
    let n = dfa.num_states();
    dfa.letters()
        .iter()
        .enumerate()
        .map(|(a, letter)| {
            let ones = (0..n)
                .filter_map(|j| dfa.step_index(j, a).map(|i| (i, j)))
                .collect();
            (letter.clone(), TransitionMatrix { size: n, ones })
        })
        .collect()
}

type SparseRow = BTreeMap<usize, MultiPoly>;

/// `Σ_{w accepted} ρ(w)` as a canonical rational function.
///
/// With `A = Id − Σ_a ρ(a) M_a` the series is `uᵀ A⁻¹ e_start`, which equals
/// the `start` entry of the solution of `Aᵀ y = u`. That system is solved by
/// fraction-free elimination over the trimmed automaton with the start
/// state ordered last, so Cramer's rule gives the answer straight from the
/// final row and no back substitution is needed.
pub fn generating_function(dfa: &Dfa, rho: &WeightFunction) -> Result<RatFunc, TransferError> {
    match generating_fraction(dfa, rho)? {
        None => Ok(RatFunc::zero(&rho.vars)),
        Some((num, den)) => Ok(RatFunc::new(num, den)?),
    }
}

/// Unreduced `(numerator, denominator)` of the generating function, with
/// the determinant of `Id − Σ_a ρ(a) M_a` over the trimmed automaton as
/// denominator; `None` if the language is empty.
pub fn generating_fraction(
    dfa: &Dfa,
    rho: &WeightFunction,
) -> Result<Option<(MultiPoly, MultiPoly)>, TransferError> {
    if dfa.alphabet() != &rho.alphabet {
        return Err(TransferError::AlphabetMismatch);
    }
    let vars = rho.vars.clone();
    let (trim, _) = dfa.trim();
    let n = trim.num_states();
    if trim.num_accepting() == 0 {
        return Ok(None);
    }
    // Column order: start last.
    let start = trim.start();
    let col = |s: usize| -> usize {
        if s == start {
            n - 1
        } else if s > start {
            s - 1
        } else {
            s
        }
    };
    // Row s of Aᵀ: y_s − Σ_a ρ(a) y_{δ(s,a)} = [s accepting].
    let mut rows: Vec<SparseRow> = Vec::with_capacity(n);
    let mut rhs: Vec<MultiPoly> = Vec::with_capacity(n);
    for s in 0..n {
        let mut row = SparseRow::new();
        row.insert(col(s), MultiPoly::one(&vars));
        for (a, to) in (0..trim.letters().len()).filter_map(|a| trim.step_index(s, a).map(|to| (a, to))) {
            let w = MultiPoly::monomial(&vars, *rho.weight(a), crate::arith::rat(1));
            let entry = row.entry(col(to)).or_insert_with(|| MultiPoly::zero(&vars));
            *entry = &*entry - &w;
            if entry.is_zero() {
                row.remove(&col(to));
            }
        }
        rows.push(row);
        rhs.push(if trim.is_accepting(s) {
            MultiPoly::one(&vars)
        } else {
            MultiPoly::zero(&vars)
        });
    }
    let (det, last) = bareiss_last(rows, rhs, &vars)?;
    Ok(Some((last, det)))
}

/// Fraction-free Gaussian elimination of the square system `rows · y = rhs`.
/// Returns `(±det, ±det · y_last)` with matching signs.
fn bareiss_last(
    mut rows: Vec<SparseRow>,
    mut rhs: Vec<MultiPoly>,
    vars: &VarSet,
) -> Result<(MultiPoly, MultiPoly), TransferError> {
    let n = rows.len();
    let mut prev = MultiPoly::one(vars);
    for k in 0..n {
        let pivot = (k..n)
            .filter(|&r| rows[r].contains_key(&k))
            .min_by_key(|&r| (rows[r].len(), rows[r][&k].num_terms(), r))
            .ok_or(TransferError::Singular)?;
        rows.swap(k, pivot);
        rhs.swap(k, pivot);
        let (head, tail) = rows.split_at_mut(k + 1);
        let prow = &head[k];
        let pk = prow[&k].clone();
        let pb = rhs[k].clone();
        for (offset, row) in tail.iter_mut().enumerate() {
            let i = k + 1 + offset;
            let aik = row.remove(&k);
            let mut updated = SparseRow::new();
            let cols: alloc::collections::BTreeSet<usize> = row
                .keys()
                .chain(prow.keys().filter(|&&j| j > k))
                .copied()
                .collect();
            for j in cols {
                let mut val = row.get(&j).map_or_else(|| MultiPoly::zero(vars), |x| &pk * x);
                if let (Some(aik), Some(akj)) = (&aik, prow.get(&j)) {
                    val = &val - &(aik * akj);
                }
                if val.is_zero() {
                    continue;
                }
                let val = val.div_exact(&prev).ok_or(TransferError::InexactDivision)?;
                updated.insert(j, val);
            }
            *row = updated;
            let mut b = &pk * &rhs[i];
            if let Some(aik) = &aik {
                b = &b - &(aik * &pb);
            }
            rhs[i] = if b.is_zero() {
                b
            } else {
                b.div_exact(&prev).ok_or(TransferError::InexactDivision)?
            };
        }
        prev = pk;
    }
    Ok((prev, rhs.pop().expect("nonempty system")))
}

/// `s_1⋯s_q` times the generating function of the automaton for `cprime`
/// (minimized first if asked), with `τ_j ↦ vars[s_vars[j]]` and
/// `ζ ↦ vars[t_var]`.
pub fn equiv_hilbert_over(
    cprime: &[u32],
    vars: &VarSet,
    s_vars: &[usize],
    t_var: usize,
    minimize: bool,
) -> Result<RatFunc, TransferError> {
    let alphabet = Alphabet::new(cprime)?;
    let mut dfa = build_automaton(&alphabet);
    if minimize {
        dfa = dfa.minimize();
    }
    let rho = WeightFunction::series(&alphabet, vars, s_vars, t_var)?;
    let p = generating_function(&dfa, &rho)?;
    let shift = s_vars
        .iter()
        .fold(MultiPoly::one(vars), |acc, &v| &acc * &MultiPoly::var(vars, v));
    Ok(p.mul_poly(&shift)?)
}

/// Equivariant Hilbert series in `s1, …, sq, t` of a reduced model without
/// fixed facets.
pub fn equiv_hilbert(red: &ReducedSpec) -> Result<RatFunc, TransferError> {
    if !red.nu_fixed.is_empty() {
        return Err(TransferError::FixedFacets);
    }
    let q = red.q();
    let vars = VarSet::hilbert(q)?;
    let s_vars: Vec<usize> = (0..q).collect();
    equiv_hilbert_over(&red.cprime, &vars, &s_vars, q, true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, series_expand};
    use crate::language::Word;

    fn vars1() -> VarSet {
        VarSet::new(["s", "t"]).unwrap()
    }

    fn one_letter_dfa(accept_tau_loop: bool) -> Dfa {
        // Alphabet {τ1, ζ(1)}; state 0 loops on τ1 if asked.
        let a = Alphabet::new(&[1]).unwrap();
        let row = if accept_tau_loop {
            vec![Some(0), None]
        } else {
            vec![None, None]
        };
        Dfa::new(a, vec!["a".into()], vec![row], 0, vec![true]).unwrap()
    }

    fn rho1() -> WeightFunction {
        let a = Alphabet::new(&[1]).unwrap();
        WeightFunction::series(&a, &vars1(), &[0], 1).unwrap()
    }

    #[test]
    fn empty_word_only() {
        let p = generating_function(&one_letter_dfa(false), &rho1()).unwrap();
        assert_eq!(p, RatFunc::one(&vars1()));
    }

    #[test]
    fn geometric_series() {
        let p = generating_function(&one_letter_dfa(true), &rho1()).unwrap();
        assert_eq!(p.to_string(), "(-1)/(s - 1)");
    }

    #[test]
    fn unit_weight_rejected() {
        let a = Alphabet::new(&[1]).unwrap();
        let err = WeightFunction::new(a, vars1(), vec![Monomial::var(0, 1), Monomial::ONE]);
        assert_eq!(err, Err(TransferError::UnitWeight(Letter::zeta(&[1]))));
    }

    #[test]
    fn matrices_replay_the_automaton() {
        let a = Alphabet::new(&[2, 1]).unwrap();
        let dfa = build_automaton(&a);
        let mats = transition_matrices(&dfa);
        assert_eq!(mats.len(), a.letters().len());
        let n = dfa.num_states();
        for (idx, (letter, m)) in mats.iter().enumerate() {
            assert_eq!(letter, &a.letters()[idx]);
            let mut e = vec![0i64; n];
            e[dfa.start()] = 1;
            let image = m.apply(&e);
            let expected = dfa.step(dfa.start(), letter);
            for (i, &v) in image.iter().enumerate() {
                assert_eq!(v == 1, expected == Some(i));
            }
        }
        let quiet = one_letter_dfa(false);
        assert!(transition_matrices(&quiet).iter().all(|(_, m)| m.is_zero()));
    }

    #[test]
    fn single_coordinate_counts_words() {
        let a = Alphabet::new(&[1]).unwrap();
        let p = generating_function(&build_automaton(&a), &rho1()).unwrap();
        // Every word over {τ, ζ} is admissible when c = (1).
        assert_eq!(p.to_string(), "(-1)/(s + t - 1)");
    }

    #[test]
    fn minimization_does_not_change_the_series() {
        let a = Alphabet::new(&[2, 1]).unwrap();
        let rho = WeightFunction::hilbert(&a).unwrap();
        let dfa = build_automaton(&a);
        let full = generating_function(&dfa, &rho).unwrap();
        let min = generating_function(&dfa.minimize(), &rho).unwrap();
        assert_eq!(full, min);
    }

    #[test]
    fn coefficients_count_words() {
        let a = Alphabet::new(&[2, 1]).unwrap();
        let rho = WeightFunction::hilbert(&a).unwrap();
        let p = generating_function(&build_automaton(&a).minimize(), &rho).unwrap();
        let table = series_expand(&p, &[2, 2, 2]).unwrap();
        for n1 in 0..=2u32 {
            for n2 in 0..=2u32 {
                for d in 0..=2usize {
                    let words = crate::language::enumerate_ln(&a, &[n1, n2], d, 10_000).unwrap();
                    let got = table.coeff(&[n1, n2, d as u32]).unwrap();
                    assert_eq!(got, rat(words.len() as i64), "n=({n1},{n2}) d={d}");
                }
            }
        }
        assert!(crate::language::is_in_l(&Word::empty(), &a));
    }

    #[test]
    fn hilbert_q1() {
        let red = ReducedSpec::new(vec![1]);
        let h = equiv_hilbert(&red).unwrap();
        assert_eq!(h.to_string(), "(-s1)/(s1 + t - 1)");
    }
}
