//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Terms are kept in a `BTreeMap` keyed by [`Monomial`], whose ordering is
//! graded lexicographic with the first variable of the [`VarSet`] largest.
//! Zero coefficients are never stored.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Maximum number of variables a [`VarSet`] may hold.
pub const MAX_VARS: usize = 8;

/// Ordered list of variable names shared by every polynomial built over it.
#[derive(Clone, Debug)]
pub struct VarSet(Arc<[String]>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, ArithError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(ArithError::TooManyVariables(names.len()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() || names[..i].contains(name) {
                return Err(ArithError::BadVariableName(name.clone()));
            }
        }
        Ok(VarSet(names.into()))
    }

    /// `s1, …, sq, t`.
    pub fn hilbert(q: usize) -> Result<Self, ArithError> {
        let mut names: Vec<String> = (1..=q).map(|j| alloc::format!("s{j}")).collect();
        names.push("t".to_string());
        VarSet::new(names)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, var: usize) -> &str {
        &self.0[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A new set with `extra` appended after the existing names.
    pub fn extended<S: AsRef<str>>(&self, extra: &[S]) -> Result<Self, ArithError> {
        VarSet::new(
            self.0
                .iter()
                .cloned()
                .chain(extra.iter().map(|s| s.as_ref().to_string())),
        )
    }

    /// The first `len` variables.
    pub fn prefix(&self, len: usize) -> Self {
        VarSet(self.0[..len].to_vec().into())
    }
}

impl PartialEq for VarSet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for VarSet {}

/// Exponent vector. Unused trailing slots are zero.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial([u16; MAX_VARS]);

impl Monomial {
    pub const ONE: Monomial = Monomial([0; MAX_VARS]);

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many exponents");
        let mut m = [0u16; MAX_VARS];
        for (slot, &e) in m.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        Monomial(m)
    }

    pub fn var(var: usize, exp: u32) -> Self {
        let mut m = Monomial::ONE;
        m.0[var] = u16::try_from(exp).expect("exponent overflow");
        m
    }

    pub fn exp(&self, var: usize) -> u32 {
        u32::from(self.0[var])
    }

    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        self.0[..nvars].iter().map(|&e| u32::from(e)).collect()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, or `None` if `other` does not divide `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *o = a.checked_sub(*b)?;
        }
        Some(Monomial(out))
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&other.0)) {
            *o = *a.min(b);
        }
        Monomial(out)
    }

    pub(crate) fn with_exp(mut self, var: usize, exp: u32) -> Monomial {
        self.0[var] = u16::try_from(exp).expect("exponent overflow");
        self
    }

    fn permuted(&self, perm: &[usize]) -> Monomial {
        let mut out = [0u16; MAX_VARS];
        for (from, &to) in perm.iter().enumerate() {
            out[to] = self.0[from];
        }
        Monomial(out)
    }
}

impl Mul for Monomial {
    type Output = Monomial;

    fn mul(self, rhs: Monomial) -> Monomial {
        let mut out = [0u16; MAX_VARS];
        for (o, (a, b)) in out.iter_mut().zip(self.0.iter().zip(&rhs.0)) {
            *o = a.checked_add(*b).expect("exponent overflow");
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which arithmetic operation [`MultiPoly::arith`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, BigRational>,
}

impl MultiPoly {
    pub fn zero(vars: &VarSet) -> Self {
        MultiPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigRational::one())
    }

    pub fn constant(vars: &VarSet, c: BigRational) -> Self {
        Self::monomial(vars, Monomial::ONE, c)
    }

    pub fn from_int(vars: &VarSet, c: i64) -> Self {
        Self::constant(vars, BigRational::from_integer(BigInt::from(c)))
    }

    /// The variable with index `var`.
    pub fn var(vars: &VarSet, var: usize) -> Self {
        assert!(var < vars.len(), "variable index out of range");
        Self::monomial(vars, Monomial::var(var, 1), BigRational::one())
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly {
            vars: vars.clone(),
            terms,
        }
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut p = MultiPoly::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }

    /// True for zero and for nonzero constants.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Monomial::ONE)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> BigRational {
        self.leading_term()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.exp(var) > 0)
    }

    /// Highest-index variable that occurs, if any.
    pub fn main_var(&self) -> Option<usize> {
        (0..self.vars.len()).rev().find(|&v| self.uses_var(v))
    }

    pub fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self -= c * m * other`, in place.
    fn sub_scaled(&mut self, other: &MultiPoly, c: &BigRational, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(*om * *m, -(oc * c));
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), ArithError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(ArithError::VarSetMismatch)
        }
    }

    pub fn arith(&self, other: &MultiPoly, op: PolyOp) -> Result<MultiPoly, ArithError> {
        self.check_vars(other)?;
        Ok(match op {
            PolyOp::Add => self.add_unchecked(other),
            PolyOp::Sub => self.sub_unchecked(other),
            PolyOp::Mul => self.mul_unchecked(other),
        })
    }

    fn add_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let (mut big, small) = if self.terms.len() >= other.terms.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        big
    }

    fn sub_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        let integral = self.is_integral() && other.is_integral();
        if integral {
            // Integer accumulation avoids a gcd per coefficient update.
            let mut acc: BTreeMap<Monomial, BigInt> = BTreeMap::new();
            for (ma, ca) in &self.terms {
                for (mb, cb) in &other.terms {
                    let prod = ca.numer() * cb.numer();
                    *acc.entry(*ma * *mb).or_insert_with(BigInt::zero) += prod;
                }
            }
            let terms = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(m, c)| (m, BigRational::from_integer(c)))
                .collect();
            return MultiPoly {
                vars: self.vars.clone(),
                terms,
            };
        }
        let mut out = MultiPoly::zero(&self.vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.denom().is_one())
    }

    pub fn scale(&self, c: &BigRational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.vars);
        }
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k * *m, v.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut out = MultiPoly::one(&self.vars);
        for _ in 0..exp {
            out = out.mul_unchecked(self);
        }
        out
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder. Panics on a zero divisor.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        debug_assert_eq!(self.vars, divisor.vars);
        if divisor.is_constant() {
            return Some(self.scale(&divisor.constant_term().recip()));
        }
        for v in 0..self.vars.len() {
            if self.degree_in(v) < divisor.degree_in(v) && !self.is_zero() {
                return None;
            }
        }
        let (lm, lc) = divisor.leading_term().map(|(m, c)| (*m, c.clone()))?;
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(&self.vars);
        while let Some((rm, rc)) = rem.leading_term().map(|(m, c)| (*m, c.clone())) {
            let m = rm.checked_div(&lm)?;
            let c = rc / &lc;
            rem.sub_scaled(divisor, &c, &m);
            quot.terms.insert(m, c);
        }
        Some(quot)
    }

    /// Coefficients of `self` viewed as a univariate polynomial in `var`;
    /// entry `e` is the coefficient of `var^e` (free of `var`).
    pub fn coeffs_in(&self, var: usize) -> Vec<MultiPoly> {
        let deg = self.degree_in(var) as usize;
        let mut out: Vec<MultiPoly> = (0..=deg).map(|_| MultiPoly::zero(&self.vars)).collect();
        if self.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            let e = m.exp(var) as usize;
            out[e].terms.insert(m.with_exp(var, 0), c.clone());
        }
        out
    }

    /// Leading coefficient with respect to `var`.
    pub fn lead_coeff_in(&self, var: usize) -> MultiPoly {
        let deg = self.degree_in(var);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(var) == deg)
            .map(|(m, c)| (m.with_exp(var, 0), c.clone()))
            .collect();
        MultiPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// `self` with `var` set to zero.
    pub fn at_zero(&self, var: usize) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(var) == 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Substitutes a rational value for `var`.
    pub fn eval_var(&self, var: usize, value: &BigRational) -> MultiPoly {
        let mut out = MultiPoly::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let factor = num_traits::pow::pow(value.clone(), e as usize);
            out.add_term(m.with_exp(var, 0), c * factor);
        }
        out
    }

    /// Divides by `var^k`; `None` if some term has a smaller power of `var`.
    pub fn div_var_power(&self, var: usize, k: u32) -> Option<MultiPoly> {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e < k {
                return None;
            }
            terms.insert(m.with_exp(var, e - k), c.clone());
        }
        Some(MultiPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    /// Greatest common divisor of the monomials of all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::ONE,
            Some(first) => it.fold(*first, |acc, m| acc.gcd(m)),
        }
    }

    /// Positive rational `λ` such that `λ·self` has coprime integer
    /// coefficients with positive leading coefficient (sign folded into `λ`).
    pub fn primitive_scale(&self) -> BigRational {
        if self.is_zero() {
            return BigRational::one();
        }
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        let mut scale = BigRational::new(den_lcm, num_gcd);
        if self.leading_coeff().is_negative() {
            scale = -scale;
        }
        scale
    }

    /// Coprime integer coefficients, positive leading coefficient.
    pub fn integer_primitive(&self) -> MultiPoly {
        self.scale(&self.primitive_scale())
    }

    /// Leading coefficient scaled to one.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading_coeff().recip())
    }

    /// Moves the polynomial onto `vars`, which must be a prefix of (or equal
    /// to) the current set; fails if a dropped variable occurs.
    pub fn restrict_to(&self, vars: &VarSet) -> Result<MultiPoly, ArithError> {
        let n = vars.len();
        if n > self.vars.len() || self.vars.names()[..n] != vars.names()[..] {
            return Err(ArithError::VarSetMismatch);
        }
        if (n..self.vars.len()).any(|v| self.uses_var(v)) {
            return Err(ArithError::VariableStillPresent);
        }
        Ok(MultiPoly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Moves the polynomial onto a larger set whose prefix is the current set.
    pub fn embed_into(&self, vars: &VarSet) -> Result<MultiPoly, ArithError> {
        let n = self.vars.len();
        if vars.len() < n || vars.names()[..n] != self.vars.names()[..] {
            return Err(ArithError::VarSetMismatch);
        }
        Ok(MultiPoly {
            vars: vars.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Renames variable `v` to `perm[v]` (a permutation of the indices).
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly {
        assert_eq!(perm.len(), self.vars.len(), "permutation length");
        MultiPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.permuted(perm), c.clone()))
                .collect(),
        }
    }

    /// Evaluates at an exact rational point.
    pub fn eval_rational(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "point dimension");
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, x) in point.iter().enumerate() {
                let e = m.exp(v);
                if e > 0 {
                    term *= num_traits::pow::pow(x.clone(), e as usize);
                }
            }
            acc += term;
        }
        acc
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    /// Panics if the variable sets differ; use [`MultiPoly::arith`] for a
    /// checked version.
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, PolyOp::Add).expect("variable sets differ")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, PolyOp::Sub).expect("variable sets differ")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;

    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.arith(rhs, PolyOp::Mul).expect("variable sets differ")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        MultiPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

pub(crate) fn fmt_monomial(m: &Monomial, vars: &VarSet, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let mut first = true;
    for v in 0..vars.len() {
        let e = m.exp(v);
        if e == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        f.write_str(vars.name(v))?;
        if e > 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

/// Terms in descending graded-lex order, e.g. `s1*s2 - s1 - 2*t^2 + 1`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (idx, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                fmt_monomial(m, &self.vars, f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use crate::arith::testutil::{k, small_poly, vars, x};
    use alloc::string::ToString;
    use proptest::prelude::*;

    #[test]
    fn difference_of_squares() {
        let v = vars(&["s"]);
        let s = x(&v, 0);
        let p = &(&k(&v, 1) - &s) * &(&k(&v, 1) + &s);
        assert_eq!(p, &k(&v, 1) - &s.pow(2));
        assert_eq!(&p + &MultiPoly::zero(&v), p);
    }

    #[test]
    fn independence_denominator_expands() {
        let v = vars(&["s1", "s2", "t"]);
        let (s1, s2, t) = (x(&v, 0), x(&v, 1), x(&v, 2));
        let one = k(&v, 1);
        let f = &(&(&one - &s1) * &(&one - &s2)) - &t;
        let expanded = &(&(&(&one - &s1) - &s2) + &(&s1 * &s2)) - &t;
        assert_eq!(f, expanded);
        assert_eq!(f.to_string(), "s1*s2 - s1 - s2 - t + 1");
        let point = [rat(3), rat(-2), rat(7)];
        assert_eq!(f.eval_rational(&point), rat((1 - 3) * (1 + 2) - 7));
    }

    #[test]
    fn mismatched_vars_rejected() {
        let a = k(&vars(&["s"]), 1);
        let b = k(&vars(&["t"]), 1);
        assert_eq!(a.arith(&b, PolyOp::Add), Err(ArithError::VarSetMismatch));
    }

    #[test]
    fn exact_division() {
        let v = vars(&["s", "t"]);
        let (s, t) = (x(&v, 0), x(&v, 1));
        let a = &s + &t;
        let b = &s - &t;
        assert_eq!((&a * &b).div_exact(&b), Some(a.clone()));
        assert_eq!((&a * &b).div_exact(&(&s + &k(&v, 1))), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in small_poly(vars(&["s1", "s2", "t"])),
                     b in small_poly(vars(&["s1", "s2", "t"])),
                     c in small_poly(vars(&["s1", "s2", "t"]))) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            let point = [rat(2), rat(-1), rat(3)];
            prop_assert_eq!((&a * &b).eval_rational(&point), a.eval_rational(&point) * b.eval_rational(&point));
        }
    }
}
