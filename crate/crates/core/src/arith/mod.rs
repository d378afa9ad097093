//! Exact arithmetic: rationals, sparse multivariate polynomials, rational
//! functions and truncated power series.

mod gcd;
mod poly;
mod ratfunc;
mod series;

pub use gcd::poly_gcd;
pub use poly::{Monomial, MultiPoly, PolyOp, VarSet, MAX_VARS};
pub use ratfunc::{eval_poly_numeric, RatFunc, NUMERIC_POLE_EPS};
pub use series::{series_expand, truncate_poly, SeriesTable};

pub use num_bigint::{BigInt, BigUint};
pub use num_rational::BigRational;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("polynomials live over different variable sets")]
    VarSetMismatch,
    #[error("at most {max} variables are supported, got {0}", max = MAX_VARS)]
    TooManyVariables(usize),
    #[error("invalid or duplicate variable name {0:?}")]
    BadVariableName(String),
    #[error("variable index {0} out of range")]
    VarOutOfRange(usize),
    #[error("a variable being dropped still occurs")]
    VariableStillPresent,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division expected to be exact left a remainder")]
    InexactDivision,
    #[error("not expandable at origin: denominator has zero constant term")]
    NotExpandable,
    #[error("pole at origin")]
    PoleAtOrigin,
    #[error("numeric pole: denominator magnitude below {eps:e}", eps = NUMERIC_POLE_EPS)]
    NumericPole,
    #[error("expected {expected} coordinates, got {got}")]
    PointDimension { expected: usize, got: usize },
}

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[cfg(test)]
pub(crate) mod testutil {
    use super::{rat, Monomial, MultiPoly, VarSet};
    use alloc::vec::Vec;
    use proptest::prelude::*;

    pub fn vars(names: &[&str]) -> VarSet {
        VarSet::new(names.iter().copied()).unwrap()
    }

    pub fn x(vars: &VarSet, i: usize) -> MultiPoly {
        MultiPoly::var(vars, i)
    }

    pub fn k(vars: &VarSet, n: i64) -> MultiPoly {
        MultiPoly::from_int(vars, n)
    }

    /// Small integer polynomials in three variables, exponents ≤ 2.
    pub fn small_poly(vars: VarSet) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((-3i64..=3, prop::array::uniform3(0u32..=2)), 0..5).prop_map(
            move |terms| {
                MultiPoly::from_terms(
                    &vars,
                    terms
                        .into_iter()
                        .map(|(c, e)| (Monomial::from_exponents(&e), rat(c)))
                        .collect::<Vec<_>>(),
                )
            },
        )
    }
}
