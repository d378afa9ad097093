//! Independent checks: closed-form graded dimensions, brute-force monomial
//! counts, coefficient comparison, and a floating-point check against the
//! roots-of-unity formula.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::PI;
use core::fmt;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Float, One, Zero};
use rand::Rng;

use crate::arith::{series_expand, ArithError, RatFunc, NUMERIC_POLE_EPS};
use crate::model::ReducedSpec;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("enumeration of {needed} multisets exceeds the cap of {cap}")]
    ResourceCap { needed: BigUint, cap: u64 },
    #[error("vector lengths differ: c has {c}, n has {n}")]
    Dimension { c: usize, n: usize },
    #[error("the roots-of-unity formula needs a model without fixed facets")]
    FixedFacets,
    #[error("no usable sample point after {0} attempts")]
    TooManyPoles(usize),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `binom(n, k)` by the multiplicative formula.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `∏_j binom(c_j n_j + d − 1, d)`: the dimension of the degree-`d` part of
/// the Segre product of polynomial rings in `c_j n_j` variables.
pub fn segre_dimension(c: &[u32], n: &[u32], d: u32) -> BigUint {
    assert_eq!(c.len(), n.len(), "c and n must have the same length");
    if d == 0 {
        return BigUint::one();
    }
    c.iter()
        .zip(n)
        .map(|(&c, &n)| binomial(u64::from(c) * u64::from(n) + u64::from(d) - 1, u64::from(d)))
        .product()
}

/// Number of distinct monomials among all products of `d` generators
/// `∏_j y_{j, i_j, k_j}` with `(i, k) ∈ [c] × [n]`, by direct enumeration.
/// Fails if more than `cap` multisets would have to be visited.
pub fn brute_force_monomials(c: &[u32], n: &[u32], d: u32, cap: u64) -> Result<u64, OracleError> {
    if c.len() != n.len() {
        return Err(OracleError::Dimension {
            c: c.len(),
            n: n.len(),
        });
    }
    let q = c.len();
    // Generators as per-coordinate variable ids; variable (i, k) of
    // coordinate j has id (i − 1)·n_j + (k − 1).
    let mut gens: Vec<Vec<u32>> = vec![Vec::new()];
    for j in 0..q {
        let count = c[j] * n[j];
        gens = gens
            .into_iter()
            .flat_map(|g| {
                (0..count).map(move |v| {
                    let mut g = g.clone();
                    g.push(v);
                    g
                })
            })
            .collect();
    }
    let g = gens.len() as u64;
    let needed = if g == 0 {
        BigUint::from(u64::from(d == 0))
    } else {
        binomial(g + u64::from(d) - 1, u64::from(d))
    };
    if needed > BigUint::from(cap) {
        return Err(OracleError::ResourceCap { needed, cap });
    }
    if d == 0 {
        return Ok(1);
    }
    if gens.is_empty() {
        return Ok(0);
    }
    let mut seen: BTreeSet<Vec<Vec<u32>>> = BTreeSet::new();
    let mut choice = vec![0usize; d as usize];
    loop {
        // Exponent data of the product: per coordinate, the sorted list of
        // variable ids.
        let mut key: Vec<Vec<u32>> = vec![Vec::with_capacity(d as usize); q];
        for &gi in &choice {
            for (j, &v) in gens[gi].iter().enumerate() {
                key[j].push(v);
            }
        }
        for list in &mut key {
            list.sort_unstable();
        }
        seen.insert(key);
        // Next non-decreasing index sequence.
        let mut pos = choice.len();
        loop {
            if pos == 0 {
                return Ok(seen.len() as u64);
            }
            pos -= 1;
            if choice[pos] + 1 < gens.len() {
                let v = choice[pos] + 1;
                for slot in &mut choice[pos..] {
                    *slot = v;
                }
                break;
            }
        }
    }
}

/// Expected coefficient of `s^n t^d` for a reduced model: zero if some
/// `n_j = 0`, otherwise the Segre dimension times one factor per fixed
/// facet.
pub fn expected_coefficient(red: &ReducedSpec, n: &[u32], d: u32) -> BigUint {
    if n.contains(&0) {
        return BigUint::zero();
    }
    let mut v = segre_dimension(&red.cprime, n, d);
    for ff in &red.nu_fixed {
        v *= segre_dimension(&[ff.states], &[1], d);
    }
    v
}

/// One compared coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub n: Vec<u32>,
    pub d: u32,
    pub expected: BigRational,
    pub actual: BigRational,
}

impl Cell {
    pub fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n: Vec<String> = self.n.iter().map(|x| alloc::format!("{x}")).collect();
        write!(
            f,
            "n=({}) d={} {} expected={} actual={}",
            n.join(","),
            self.d,
            if self.passed() { "PASS" } else { "FAIL" },
            self.expected,
            self.actual
        )?;
        if !self.passed() {
            write!(f, " delta={}", &self.actual - &self.expected)?;
        }
        Ok(())
    }
}

/// Result of [`check_series`]; displays one line per cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub cells: Vec<Cell>,
}

impl SeriesReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| !c.passed())
    }

    pub fn passed(&self) -> bool {
        self.mismatches().next().is_none()
    }
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cell in &self.cells {
            writeln!(f, "{cell}")?;
        }
        Ok(())
    }
}

/// Compares the coefficients of `h` (over `s1, …, sq, t`) with
/// [`expected_coefficient`] for all `0 ≤ n ≤ nmax`, `0 ≤ d ≤ dmax`.
pub fn check_series(
    red: &ReducedSpec,
    h: &RatFunc,
    nmax: &[u32],
    dmax: u32,
) -> Result<SeriesReport, OracleError> {
    if nmax.len() != red.q() {
        return Err(OracleError::Dimension {
            c: red.q(),
            n: nmax.len(),
        });
    }
    let mut bound = nmax.to_vec();
    bound.push(dmax);
    let table = series_expand(h, &bound)?;
    let mut cells = Vec::new();
    let mut n = vec![0u32; nmax.len()];
    loop {
        for d in 0..=dmax {
            let mut point = n.clone();
            point.push(d);
            let actual = table.coeff(&point).expect("inside the box");
            let expected = BigRational::from_integer(BigInt::from(expected_coefficient(red, &n, d)));
            cells.push(Cell {
                n: n.clone(),
                d,
                expected,
                actual,
            });
        }
        let mut pos = n.len();
        loop {
            if pos == 0 {
                return Ok(SeriesReport { cells });
            }
            pos -= 1;
            if n[pos] < nmax[pos] {
                n[pos] += 1;
                for slot in &mut n[pos + 1..] {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

/// The roots-of-unity formula evaluated at `s_j = w_j^{c_j}`:
/// `(1/∏c) Σ_m ∏_j(ω_j^{m_j} w_j) / (∏_j(1 − ω_j^{m_j} w_j) − t)`.
pub fn roots_of_unity_formula(c: &[u32], w: &[Complex64], t: Complex64) -> Result<Complex64, OracleError> {
    let q = c.len();
    let mut m = vec![1u32; q];
    let mut acc = Complex64::zero();
    loop {
        let mut num = Complex64::one();
        let mut prod = Complex64::one();
        for j in 0..q {
            let omega = Complex64::from_polar(1.0, 2.0 * PI * f64::from(m[j]) / f64::from(c[j]));
            let x = omega * w[j];
            num *= x;
            prod *= Complex64::one() - x;
        }
        let den = prod - t;
        if den.norm() < NUMERIC_POLE_EPS {
            return Err(ArithError::NumericPole.into());
        }
        acc += num / den;
        let mut pos = q;
        loop {
            if pos == 0 {
                let total: f64 = c.iter().map(|&x| f64::from(x)).product();
                return Ok(acc / total);
            }
            pos -= 1;
            if m[pos] < c[pos] {
                m[pos] += 1;
                for slot in &mut m[pos + 1..] {
                    *slot = 1;
                }
                break;
            }
        }
    }
}

/// One sample of [`check_roots_of_unity`].
#[derive(Clone, Debug, PartialEq)]
pub struct Sample {
    pub w: Vec<Complex64>,
    pub t: Complex64,
    pub formula: Complex64,
    pub computed: Complex64,
}

impl Sample {
    pub fn error(&self) -> f64 {
        (self.formula - self.computed).norm()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RootsReport {
    pub tol: f64,
    pub samples: Vec<Sample>,
}

impl RootsReport {
    pub fn max_error(&self) -> f64 {
        self.samples.iter().map(Sample::error).fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.max_error() <= self.tol
    }
}

impl fmt::Display for RootsReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, s) in self.samples.iter().enumerate() {
            let ok = s.error() <= self.tol;
            writeln!(
                f,
                "sample {} {} error={:.3e}",
                idx + 1,
                if ok { "PASS" } else { "FAIL" },
                s.error()
            )?;
        }
        writeln!(
            f,
            "roots-of-unity {} max_error={:.3e} tol={:e}",
            if self.passed() { "PASS" } else { "FAIL" },
            self.max_error(),
            self.tol
        )
    }
}

const MAX_ATTEMPTS_PER_TRIAL: usize = 100;

fn sample_disc<R: Rng + ?Sized>(rng: &mut R, radius: f64) -> Complex64 {
    let r = radius * Float::sqrt(rng.gen::<f64>());
    let theta = 2.0 * PI * rng.gen::<f64>();
    Complex64::from_polar(r, theta)
}

/// Compares `h` with the roots-of-unity formula at `trials` random points
/// (`|w_j| ≤ 0.3`, `|t| ≤ 0.2`, `s_j = w_j^{c_j}`). Points where either side
/// hits a numeric pole are redrawn.
pub fn check_roots_of_unity<R: Rng + ?Sized>(
    red: &ReducedSpec,
    h: &RatFunc,
    trials: usize,
    tol: f64,
    rng: &mut R,
) -> Result<RootsReport, OracleError> {
    if !red.nu_fixed.is_empty() {
        return Err(OracleError::FixedFacets);
    }
    let q = red.q();
    let mut samples = Vec::with_capacity(trials);
    for _ in 0..trials {
        let mut attempts = 0;
        loop {
            attempts += 1;
            if attempts > MAX_ATTEMPTS_PER_TRIAL {
                return Err(OracleError::TooManyPoles(MAX_ATTEMPTS_PER_TRIAL));
            }
            let w: Vec<Complex64> = (0..q).map(|_| sample_disc(rng, 0.3)).collect();
            let t = sample_disc(rng, 0.2);
            let mut point: Vec<Complex64> = w
                .iter()
                .zip(&red.cprime)
                .map(|(w, &c)| w.powu(c))
                .collect();
            point.push(t);
            let formula = match roots_of_unity_formula(&red.cprime, &w, t) {
                Ok(v) => v,
                Err(OracleError::Arith(ArithError::NumericPole)) => continue,
                Err(e) => return Err(e),
            };
            let computed = match h.eval_numeric(&point) {
                Ok(v) => v,
                Err(ArithError::NumericPole) => continue,
                Err(e) => return Err(e.into()),
            };
            samples.push(Sample {
                w,
                t,
                formula,
                computed,
            });
            break;
        }
    }
    Ok(RootsReport { tol, samples })
}
