//! Hierarchical models with varying coordinates: validation, reduction to
//! two-element facets, and the full series pipeline.
//!
//! The `j`-th facet meeting `T` (in input order) owns the variable `s_j`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ArithError, RatFunc, VarSet, MAX_VARS};
use crate::transfer::{equiv_hilbert_over, TransferError};

/// Facets on vertices `1..=m`, the varying set `T`, and a state count for
/// every vertex outside `T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModelSpec {
    pub m: usize,
    pub facets: Vec<Vec<usize>>,
    pub varying: BTreeSet<usize>,
    pub states: BTreeMap<usize, u64>,
}

/// A violated hypothesis. Facet numbers are 1-based positions in the list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    NoVertices,
    EmptyFacet(usize),
    VertexOutOfRange { facet: usize, vertex: usize },
    VaryingOutOfRange(usize),
    StateOutOfRange(usize),
    FacetContained { inner: usize, outer: usize },
    Uncovered(usize),
    MissingState(usize),
    ZeroState(usize),
    StateOnVarying(usize),
    NoVaryingFacet,
    Intersect(usize, usize),
    TooManyVarying { facet: usize, count: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::NoVertices => f.write_str("the model has no vertices"),
            Violation::EmptyFacet(i) => write!(f, "facet {i} is empty"),
            Violation::VertexOutOfRange { facet, vertex } => {
                write!(f, "facet {facet} contains vertex {vertex}, outside 1..m")
            }
            Violation::VaryingOutOfRange(v) => write!(f, "T contains vertex {v}, outside 1..m"),
            Violation::StateOutOfRange(v) => {
                write!(f, "state count given for vertex {v}, outside 1..m")
            }
            Violation::FacetContained { inner, outer } => {
                write!(f, "facet {inner} is contained in facet {outer}")
            }
            Violation::Uncovered(v) => write!(f, "vertex {v} lies in no facet"),
            Violation::MissingState(v) => {
                write!(f, "vertex {v} is not in T and has no state count")
            }
            Violation::ZeroState(v) => write!(f, "vertex {v} has state count 0"),
            Violation::StateOnVarying(v) => {
                write!(f, "vertex {v} is in T but has a fixed state count")
            }
            Violation::NoVaryingFacet => f.write_str("no facet meets T"),
            Violation::Intersect(a, b) => write!(f, "facets {a} and {b} intersect"),
            Violation::TooManyVarying { facet, count } => {
                write!(f, "facet {facet} meets T in {count} vertices")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("invalid model: {}", join_violations(.0))]
    Invalid(Vec<Violation>),
    #[error("state count product {0} does not fit in 32 bits")]
    StateOverflow(u128),
    #[error("model needs {0} series variables, at most {max} are supported", max = MAX_VARS)]
    TooManyVariables(usize),
    #[error("elimination order is not a permutation of the fixed facets")]
    BadOrder,
    #[error(transparent)]
    Transfer(#[from] TransferError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| format!("{x}"))
        .collect::<Vec<_>>()
        .join("; ")
}

/// A facet disjoint from `T` with its total number of joint states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedFacet {
    pub facet: Vec<usize>,
    pub states: u32,
}

/// The model after each facet meeting `T` is replaced by a two-element
/// facet with `cprime[j]` fixed states.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedSpec {
    pub cprime: Vec<u32>,
    pub nu_fixed: Vec<FixedFacet>,
}

impl ReducedSpec {
    pub fn new(cprime: Vec<u32>) -> Self {
        ReducedSpec {
            cprime,
            nu_fixed: Vec::new(),
        }
    }

    pub fn q(&self) -> usize {
        self.cprime.len()
    }
}

impl fmt::Display for ReducedSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "q = {}", self.q())?;
        let c: Vec<String> = self.cprime.iter().map(|c| format!("{c}")).collect();
        writeln!(f, "cprime = ({})", c.join(","))?;
        if self.nu_fixed.is_empty() {
            return writeln!(f, "fixed facets: none");
        }
        writeln!(f, "fixed facets:")?;
        for ff in &self.nu_fixed {
            let v: Vec<String> = ff.facet.iter().map(|v| format!("{v}")).collect();
            writeln!(f, "  {{{}}} states = {}", v.join(","), ff.states)?;
        }
        Ok(())
    }
}

impl ModelSpec {
    /// All violated hypotheses; empty means the pipeline applies.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.m == 0 {
            out.push(Violation::NoVertices);
        }
        let in_range = |v: usize| (1..=self.m).contains(&v);
        let sets: Vec<BTreeSet<usize>> = self
            .facets
            .iter()
            .map(|f| f.iter().copied().collect())
            .collect();
        for (idx, f) in self.facets.iter().enumerate() {
            if f.is_empty() {
                out.push(Violation::EmptyFacet(idx + 1));
            }
            for &v in f {
                if !in_range(v) {
                    out.push(Violation::VertexOutOfRange {
                        facet: idx + 1,
                        vertex: v,
                    });
                }
            }
        }
        for &v in &self.varying {
            if !in_range(v) {
                out.push(Violation::VaryingOutOfRange(v));
            }
        }
        for &v in self.states.keys() {
            if !in_range(v) {
                out.push(Violation::StateOutOfRange(v));
            }
        }
        for a in 0..sets.len() {
            for b in 0..sets.len() {
                if a != b && !sets[a].is_empty() && sets[a].is_subset(&sets[b]) && (sets[a] != sets[b] || a > b) {
                    out.push(Violation::FacetContained {
                        inner: a + 1,
                        outer: b + 1,
                    });
                }
            }
        }
        for v in 1..=self.m {
            if !sets.iter().any(|s| s.contains(&v)) {
                out.push(Violation::Uncovered(v));
            }
            let varying = self.varying.contains(&v);
            match self.states.get(&v) {
                None if !varying => out.push(Violation::MissingState(v)),
                Some(_) if varying => out.push(Violation::StateOnVarying(v)),
                Some(0) => out.push(Violation::ZeroState(v)),
                _ => {}
            }
        }
        for a in 0..sets.len() {
            for b in a + 1..sets.len() {
                if !sets[a].is_disjoint(&sets[b]) {
                    out.push(Violation::Intersect(a + 1, b + 1));
                }
            }
        }
        let mut meets = 0;
        for (idx, s) in sets.iter().enumerate() {
            let count = s.intersection(&self.varying).count();
            if count >= 2 {
                out.push(Violation::TooManyVarying {
                    facet: idx + 1,
                    count,
                });
            }
            if count >= 1 {
                meets += 1;
            }
        }
        if meets == 0 && self.m > 0 {
            out.push(Violation::NoVaryingFacet);
        }
        out
    }

    /// Product of the fixed state counts over the vertices of `facet` outside
    /// `T` (1 for none).
    fn fixed_product(&self, facet: &[usize]) -> Result<u32, ModelError> {
        let mut p: u128 = 1;
        for v in facet {
            if !self.varying.contains(v) {
                p *= u128::from(self.states[v]);
                if p > u128::from(u32::MAX) {
                    return Err(ModelError::StateOverflow(p));
                }
            }
        }
        Ok(p as u32)
    }

    pub fn reduce(&self) -> Result<ReducedSpec, ModelError> {
        let violations = self.validate();
        if !violations.is_empty() {
            return Err(ModelError::Invalid(violations));
        }
        let mut cprime = Vec::new();
        let mut nu_fixed = Vec::new();
        for f in &self.facets {
            let states = self.fixed_product(f)?;
            if f.iter().any(|v| self.varying.contains(v)) {
                cprime.push(states);
            } else {
                let mut facet = f.clone();
                facet.sort_unstable();
                nu_fixed.push(FixedFacet { facet, states });
            }
        }
        Ok(ReducedSpec { cprime, nu_fixed })
    }
}

/// Equivariant Hilbert series of the model in `s_1, …, s_q, t`.
pub fn hilbert_series(spec: &ModelSpec) -> Result<RatFunc, ModelError> {
    let red = spec.reduce()?;
    reduced_hilbert_series(&red)
}

/// Series of a reduced model, eliminating fixed facets in list order.
pub fn reduced_hilbert_series(red: &ReducedSpec) -> Result<RatFunc, ModelError> {
    let order: Vec<usize> = (0..red.nu_fixed.len()).collect();
    reduced_hilbert_series_ordered(red, &order, true)
}

/// Series of a reduced model, eliminating fixed facets in the given order.
///
/// Each fixed facet `F` is made varying through one of its vertices: it gets
/// a fresh variable `u` (after `t`) and a single fixed state, so its slice
/// at `u^{c_F}` carries the dimension factor of `c_F` states. The
/// coefficient of `u^{c_F}` is then extracted exactly. `minimize` selects
/// whether the automaton is minimized before the transfer-matrix solve.
pub fn reduced_hilbert_series_ordered(
    red: &ReducedSpec,
    order: &[usize],
    minimize: bool,
) -> Result<RatFunc, ModelError> {
    let f = red.nu_fixed.len();
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if sorted != (0..f).collect::<Vec<_>>() {
        return Err(ModelError::BadOrder);
    }
    let q = red.q();
    let total = q + 1 + f;
    if total > MAX_VARS {
        return Err(ModelError::TooManyVariables(total));
    }
    let base = VarSet::hilbert(q)?;
    let extra: Vec<String> = (1..=f).map(|k| format!("u{k}")).collect();
    let vars = base.extended(&extra)?;
    let mut cprime = red.cprime.clone();
    cprime.extend(core::iter::repeat_n(1, f));
    let s_vars: Vec<usize> = (0..q).chain(q + 1..total).collect();
    let mut h = equiv_hilbert_over(&cprime, &vars, &s_vars, q, minimize)?;
    for &idx in order {
        h = h.coeff_extract(q + 1 + idx, red.nu_fixed[idx].states)?;
    }
    Ok(h.restrict_to(&base)?)
}
