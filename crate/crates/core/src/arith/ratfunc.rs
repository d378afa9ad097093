use core::fmt;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use super::gcd::gcd_rec;
use super::poly::{MultiPoly, VarSet};
use super::ArithError;

/// Magnitude below which a numerically evaluated denominator counts as a pole.
pub const NUMERIC_POLE_EPS: f64 = 1e-12;

/// Element of the fraction field ℚ(vars), always kept in canonical form:
/// numerator and denominator coprime, denominator with coprime integer
/// coefficients and positive graded-lex leading coefficient. Zero is `0/1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    /// Canonical form of `num / den`.
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self, ArithError> {
        if num.vars() != den.vars() {
            return Err(ArithError::VarSetMismatch);
        }
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                den: MultiPoly::one(num.vars()),
                num,
            });
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd_rec(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).ok_or(ArithError::InexactDivision)?,
                    den.div_exact(&g).ok_or(ArithError::InexactDivision)?,
                )
            }
        };
        let scale = den.primitive_scale();
        Ok(RatFunc {
            num: num.scale(&scale),
            den: den.scale(&scale),
        })
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.vars());
        RatFunc { num: p, den }
    }

    pub fn zero(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::zero(vars))
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::from_poly(MultiPoly::one(vars))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> &VarSet {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Equality by cross-multiplication, independent of normal form.
    pub fn value_eq(&self, other: &RatFunc) -> bool {
        self.vars() == other.vars() && &self.num * &other.den == &other.num * &self.den
    }

    fn check(&self, other: &RatFunc) -> Result<(), ArithError> {
        if self.vars() == other.vars() {
            Ok(())
        } else {
            Err(ArithError::VarSetMismatch)
        }
    }

    pub fn add(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.check(other)?;
        if self.den == other.den {
            return RatFunc::new(&self.num + &other.num, self.den.clone());
        }
        RatFunc::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.add(&other.neg())
    }

    /// Cross-cancels `gcd(a, d)` and `gcd(c, b)` in `(a/b)·(c/d)`; both
    /// inputs are reduced, so the product needs no further gcd.
    pub fn mul(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(RatFunc::zero(self.vars()));
        }
        let (a, d) = cancel(&self.num, &other.den)?;
        let (c, b) = cancel(&other.num, &self.den)?;
        Ok(RatFunc::from_coprime(&a * &c, &b * &d))
    }

    /// Normalizes the sign and scale of an already reduced fraction.
    fn from_coprime(num: MultiPoly, den: MultiPoly) -> RatFunc {
        let scale = den.primitive_scale();
        RatFunc {
            num: num.scale(&scale),
            den: den.scale(&scale),
        }
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc, ArithError> {
        self.check(other)?;
        if other.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        RatFunc::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Result<RatFunc, ArithError> {
        self.mul(&RatFunc::from_poly(p.clone()))
    }

    /// `self` with `var = 0`; fails if the denominator vanishes there.
    pub fn at_zero(&self, var: usize) -> Result<RatFunc, ArithError> {
        let den0 = self.den.at_zero(var);
        if den0.is_zero() {
            return Err(ArithError::PoleAtOrigin);
        }
        RatFunc::new(self.num.at_zero(var), den0)
    }

    /// Coefficient of `var^k` in the expansion of `self` as a power series in
    /// `var` over the fraction field of the remaining variables.
    ///
    /// With `N = Σ N_i var^i`, `D = Σ D_i var^i` the coefficients obey
    /// `a_k = (N_k − Σ_{i≥1} D_i a_{k−i}) / D_0`, so `A_k = a_k·D_0^{k+1}` is a
    /// polynomial. Value-for-value this is the normalized `k`-th derivative at
    /// zero.
    pub fn coeff_extract(&self, var: usize, k: u32) -> Result<RatFunc, ArithError> {
        if var >= self.vars().len() {
            return Err(ArithError::VarOutOfRange(var));
        }
        let n = self.num.coeffs_in(var);
        let d = self.den.coeffs_in(var);
        let d0 = &d[0];
        if d0.is_zero() {
            return Err(ArithError::PoleAtOrigin);
        }
        let zero = MultiPoly::zero(self.vars());
        let k = k as usize;
        let mut d0_pow = alloc::vec![MultiPoly::one(self.vars())];
        for i in 1..=k + 1 {
            let next = &d0_pow[i - 1] * d0;
            d0_pow.push(next);
        }
        let mut a: alloc::vec::Vec<MultiPoly> = alloc::vec::Vec::with_capacity(k + 1);
        for j in 0..=k {
            let mut acc = n.get(j).unwrap_or(&zero) * &d0_pow[j];
            for i in 1..=j.min(d.len() - 1) {
                if !d[i].is_zero() {
                    acc = &acc - &(&(&d[i] * &a[j - i]) * &d0_pow[i - 1]);
                }
            }
            a.push(acc);
        }
        let mut num = a.pop().unwrap_or(zero);
        let mut den = d0_pow.swap_remove(k + 1);
        if num.is_zero() {
            return Ok(RatFunc::zero(self.vars()));
        }
        // Every factor of den divides d0, so gcds against d0 suffice.
        if !d0.is_constant() {
            loop {
                let g = gcd_rec(&num, d0);
                if g.is_constant() {
                    break;
                }
                let Some(rest) = den.div_exact(&g) else {
                    // num has a factor of d0 to a higher power than den.
                    return RatFunc::new(num, den);
                };
                num = num.div_exact(&g).ok_or(ArithError::InexactDivision)?;
                den = rest;
            }
        }
        Ok(RatFunc::from_coprime(num, den))
    }

    /// Moves onto a prefix of the variable set; the dropped variables must
    /// not occur.
    pub fn restrict_to(&self, vars: &VarSet) -> Result<RatFunc, ArithError> {
        Ok(RatFunc {
            num: self.num.restrict_to(vars)?,
            den: self.den.restrict_to(vars)?,
        })
    }

    /// Renames variable `v` to `perm[v]`, re-canonicalizing afterwards.
    pub fn permute_vars(&self, perm: &[usize]) -> Result<RatFunc, ArithError> {
        RatFunc::new(self.num.permute_vars(perm), self.den.permute_vars(perm))
    }

    /// Double-precision complex evaluation.
    pub fn eval_numeric(&self, point: &[Complex64]) -> Result<Complex64, ArithError> {
        if point.len() != self.vars().len() {
            return Err(ArithError::PointDimension {
                expected: self.vars().len(),
                got: point.len(),
            });
        }
        let den = eval_poly_numeric(&self.den, point);
        if den.norm() < NUMERIC_POLE_EPS {
            return Err(ArithError::NumericPole);
        }
        Ok(eval_poly_numeric(&self.num, point) / den)
    }
}

/// `(x / g, y / g)` with `g = gcd(x, y)`.
fn cancel(x: &MultiPoly, y: &MultiPoly) -> Result<(MultiPoly, MultiPoly), ArithError> {
    if x.is_constant() || y.is_constant() {
        return Ok((x.clone(), y.clone()));
    }
    let g = gcd_rec(x, y);
    if g.is_constant() {
        return Ok((x.clone(), y.clone()));
    }
    Ok((
        x.div_exact(&g).ok_or(ArithError::InexactDivision)?,
        y.div_exact(&g).ok_or(ArithError::InexactDivision)?,
    ))
}

/// Horner evaluation in the main variable, recursing into the coefficients.
pub fn eval_poly_numeric(p: &MultiPoly, point: &[Complex64]) -> Complex64 {
    match p.main_var() {
        None => Complex64::new(p.constant_term().to_f64().unwrap_or(f64::NAN), 0.0),
        Some(var) => {
            let coeffs = p.coeffs_in(var);
            let x = point[var];
            coeffs
                .iter()
                .rev()
                .fold(Complex64::zero(), |acc, c| acc * x + eval_poly_numeric(c, point))
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}
