use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::Zero;

use super::poly::{Monomial, MultiPoly, VarSet};
use super::ratfunc::RatFunc;
use super::ArithError;

/// Truncated power-series coefficients over a box `0 ≤ e_v ≤ bound[v]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    vars: VarSet,
    bound: Vec<u32>,
    coeffs: BTreeMap<Monomial, BigRational>,
}

impl SeriesTable {
    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn bound(&self) -> &[u32] {
        &self.bound
    }

    pub fn in_box(&self, exps: &[u32]) -> bool {
        exps.len() == self.bound.len() && exps.iter().zip(&self.bound).all(|(e, b)| e <= b)
    }

    /// Coefficient at `exps`; `None` outside the truncation box.
    pub fn coeff(&self, exps: &[u32]) -> Option<BigRational> {
        if !self.in_box(exps) {
            return None;
        }
        let m = Monomial::from_exponents(exps);
        Some(self.coeffs.get(&m).cloned().unwrap_or_else(BigRational::zero))
    }

    /// Nonzero coefficients in ascending graded-lex order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<u32>, &BigRational)> {
        let n = self.vars.len();
        self.coeffs.iter().map(move |(m, c)| (m.exponents(n), c))
    }

    /// Truncated sum.
    pub fn add(&self, other: &SeriesTable) -> Result<SeriesTable, ArithError> {
        self.same_shape(other)?;
        let mut coeffs = self.coeffs.clone();
        for (m, c) in &other.coeffs {
            let e = coeffs.entry(*m).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                coeffs.remove(m);
            }
        }
        Ok(SeriesTable {
            vars: self.vars.clone(),
            bound: self.bound.clone(),
            coeffs,
        })
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &SeriesTable) -> Result<SeriesTable, ArithError> {
        self.same_shape(other)?;
        let mut coeffs: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        let n = self.vars.len();
        for (ma, ca) in &self.coeffs {
            for (mb, cb) in &other.coeffs {
                let m = *ma * *mb;
                if (0..n).all(|v| m.exp(v) <= self.bound[v]) {
                    *coeffs.entry(m).or_insert_with(BigRational::zero) += ca * cb;
                }
            }
        }
        coeffs.retain(|_, c| !c.is_zero());
        Ok(SeriesTable {
            vars: self.vars.clone(),
            bound: self.bound.clone(),
            coeffs,
        })
    }

    fn same_shape(&self, other: &SeriesTable) -> Result<(), ArithError> {
        if self.vars != other.vars || self.bound != other.bound {
            return Err(ArithError::VarSetMismatch);
        }
        Ok(())
    }
}

/// Mixed-radix walk over the box in lexicographic order; every `m − e` with
/// `0 ≠ e ≤ m` is visited before `m`.
fn box_points(bound: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; bound.len()];
    loop {
        out.push(cur.clone());
        let mut pos = bound.len();
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if cur[pos] < bound[pos] {
                cur[pos] += 1;
                for slot in &mut cur[pos + 1..] {
                    *slot = 0;
                }
                break;
            }
        }
    }
}

fn box_index(point: &[u32], bound: &[u32]) -> usize {
    point
        .iter()
        .zip(bound)
        .fold(0usize, |acc, (&p, &b)| acc * (b as usize + 1) + p as usize)
}

/// Taylor expansion of `f` at the origin, truncated to `bound`.
///
/// Solves `den · a = num` coefficient by coefficient, so the only division is
/// by the constant term of the denominator.
pub fn series_expand(f: &RatFunc, bound: &[u32]) -> Result<SeriesTable, ArithError> {
    let vars = f.vars().clone();
    if bound.len() != vars.len() {
        return Err(ArithError::PointDimension {
            expected: vars.len(),
            got: bound.len(),
        });
    }
    let d0 = f.den().constant_term();
    if d0.is_zero() {
        return Err(ArithError::NotExpandable);
    }
    let fits = |m: &Monomial| (0..bound.len()).all(|v| m.exp(v) <= bound[v]);
    let den_terms: Vec<(Monomial, BigRational)> = f
        .den()
        .terms()
        .filter(|(m, _)| !m.is_one() && fits(m))
        .map(|(m, c)| (*m, c.clone()))
        .collect();
    let points = box_points(bound);
    let mut dense: Vec<BigRational> = vec![BigRational::zero(); points.len()];
    let mut coeffs = BTreeMap::new();
    for p in &points {
        let m = Monomial::from_exponents(p);
        let mut acc = f.num().coeff(&m);
        for (dm, dc) in &den_terms {
            if let Some(rest) = m.checked_div(dm) {
                let idx = box_index(&rest.exponents(bound.len()), bound);
                let prev = &dense[idx];
                if !prev.is_zero() {
                    acc -= dc * prev;
                }
            }
        }
        let a = acc / &d0;
        if !a.is_zero() {
            coeffs.insert(m, a.clone());
        }
        dense[box_index(p, bound)] = a;
    }
    Ok(SeriesTable {
        vars,
        bound: bound.to_vec(),
        coeffs,
    })
}

/// Truncation of a polynomial to the same kind of box, for comparisons.
pub fn truncate_poly(p: &MultiPoly, bound: &[u32]) -> SeriesTable {
    let n = p.vars().len();
    let coeffs = p
        .terms()
        .filter(|(m, _)| (0..n).all(|v| m.exp(v) <= bound[v]))
        .map(|(m, c)| (*m, c.clone()))
        .collect();
    SeriesTable {
        vars: p.vars().clone(),
        bound: bound.to_vec(),
        coeffs,
    }
}
