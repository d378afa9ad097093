//! Multivariate polynomial gcd over ℚ.
//!
//! Recursive primitive polynomial remainder sequences: the highest-index
//! variable present is taken as the main variable, contents (gcds of the
//! coefficients in the remaining variables) are split off recursively and the
//! primitive parts are run through a pseudo-remainder sequence.

use alloc::vec;
use alloc::vec::Vec;

use super::poly::{Monomial, MultiPoly};
use super::ArithError;
use num_rational::BigRational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

/// Greatest common divisor normalized to leading coefficient one.
/// `gcd(a, 0)` is `a` normalized; `gcd(0, 0)` is zero.
pub fn poly_gcd(a: &MultiPoly, b: &MultiPoly) -> Result<MultiPoly, ArithError> {
    if a.vars() != b.vars() {
        return Err(ArithError::VarSetMismatch);
    }
    Ok(gcd_rec(a, b).monic())
}

fn one_like(p: &MultiPoly) -> MultiPoly {
    MultiPoly::one(p.vars())
}

pub(crate) fn gcd_rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if a.is_zero() {
        return b.integer_primitive();
    }
    if b.is_zero() {
        return a.integer_primitive();
    }
    if a.is_constant() || b.is_constant() {
        return one_like(a);
    }
    // Pull out the common monomial factor first; it is cheap and frequent.
    let ma = a.monomial_content();
    let mb = b.monomial_content();
    let mg = ma.gcd(&mb);
    if !ma.is_one() || !mb.is_one() {
        let a1 = strip_monomial(a, &ma);
        let b1 = strip_monomial(b, &mb);
        let g = gcd_rec(&a1, &b1);
        return g.mul_monomial(&mg);
    }
    if a.is_monomial() || b.is_monomial() {
        // Monomial content is one on both sides, so a monomial here is a unit.
        return one_like(a);
    }
    if a.num_terms() <= b.num_terms() {
        if b.div_exact(a).is_some() {
            return a.integer_primitive();
        }
    } else if a.div_exact(b).is_some() {
        return b.integer_primitive();
    }

    if coprime_mod_p(a, b) {
        return one_like(a);
    }

    let var = match (a.main_var(), b.main_var()) {
        (Some(x), Some(y)) => x.max(y),
        _ => return one_like(a),
    };
    let da = a.degree_in(var);
    let db = b.degree_in(var);
    if da == 0 {
        return gcd_rec(a, &content_in(b, var));
    }
    if db == 0 {
        return gcd_rec(&content_in(a, var), b);
    }
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let c = gcd_rec(&ca, &cb);
    let g = primitive_prs(pa, pb, var);
    (&c * &g).integer_primitive()
}

fn strip_monomial(p: &MultiPoly, m: &Monomial) -> MultiPoly {
    if m.is_one() {
        return p.clone();
    }
    let mut out = MultiPoly::zero(p.vars());
    for (k, c) in p.terms() {
        out.add_term(k.checked_div(m).expect("monomial content divides"), c.clone());
    }
    out
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub(crate) fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    let coeffs: Vec<MultiPoly> = p.coeffs_in(var).into_iter().filter(|c| !c.is_zero()).collect();
    let mut iter = coeffs.iter();
    let mut g = match iter.next() {
        Some(c) => c.integer_primitive(),
        None => return MultiPoly::zero(p.vars()),
    };
    for c in iter {
        if g.is_constant() {
            break;
        }
        g = gcd_rec(&g, c);
    }
    if g.is_constant() {
        one_like(p)
    } else {
        g
    }
}

fn primitive_part(p: &MultiPoly, var: usize) -> MultiPoly {
    let c = content_in(p, var);
    p.div_exact(&c).expect("content divides").integer_primitive()
}

/// Sparse pseudo-remainder: `lc(b)^e · a − Q · b` with `deg_var < deg_var(b)`
/// for some `e ≥ 0`.
pub(crate) fn pseudo_rem(a: &MultiPoly, b: &MultiPoly, var: usize) -> MultiPoly {
    let db = b.degree_in(var);
    let lcb = b.lead_coeff_in(var);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lcr = r.lead_coeff_in(var);
        let shift = Monomial::var(var, dr - db);
        let left = &r * &lcb;
        let right = (&lcr * b).mul_monomial(&shift);
        r = (&left - &right).integer_primitive();
    }
    r
}

fn primitive_prs(mut a: MultiPoly, mut b: MultiPoly, var: usize) -> MultiPoly {
    if a.degree_in(var) < b.degree_in(var) {
        core::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = pseudo_rem(&a, &b, var);
        if r.is_zero() {
            return b.integer_primitive();
        }
        if r.degree_in(var) == 0 {
            return MultiPoly::constant(a.vars(), BigRational::one());
        }
        a = b;
        b = primitive_part(&r, var);
    }
}

/// Mersenne prime used for the modular coprimality test.
const P: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(P)) as u64
}

fn pow_mod(mut base: u64, mut exp: u64) -> u64 {
    let mut acc = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64) -> u64 {
    pow_mod(a, P - 2)
}

fn int_mod(n: &BigInt) -> u64 {
    n.mod_floor(&BigInt::from(P)).to_u64().expect("reduced below p")
}

fn rat_mod(c: &BigRational) -> Option<u64> {
    let den = int_mod(c.denom());
    if den == 0 {
        return None;
    }
    Some(mul_mod(int_mod(c.numer()), inv_mod(den)))
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Coefficients (by degree in `var`) of `p` with every other variable
/// replaced by `point[v]`, reduced mod `P`.
fn univariate_image(p: &MultiPoly, var: usize, point: &[u64]) -> Option<Vec<u64>> {
    let mut out = vec![0u64; p.degree_in(var) as usize + 1];
    for (m, c) in p.terms() {
        let mut v = rat_mod(c)?;
        for (x, &val) in point.iter().enumerate() {
            if x != var && m.exp(x) > 0 {
                v = mul_mod(v, pow_mod(val, u64::from(m.exp(x))));
            }
        }
        let slot = &mut out[m.exp(var) as usize];
        *slot = (*slot + v) % P;
    }
    Some(out)
}

fn trim(p: &mut Vec<u64>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

/// Degree of the gcd of two univariate polynomials over `F_P`.
fn gcd_degree_mod(mut a: Vec<u64>, mut b: Vec<u64>) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        // a ← a mod b
        let lead_inv = inv_mod(*b.last().expect("nonempty"));
        while a.len() >= b.len() {
            let factor = mul_mod(*a.last().expect("nonempty"), lead_inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                let sub = mul_mod(factor, bc);
                a[shift + i] = (a[shift + i] + P - sub) % P;
            }
            trim(&mut a);
            if a.is_empty() {
                break;
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1)
}

/// `true` only if `a` and `b` are certainly coprime.
///
/// For every variable occurring in both, the other variables are evaluated
/// at pseudo-random points mod a large prime. When the leading coefficients
/// survive, the degree of a common factor can only grow under such an
/// evaluation, so a constant image gcd proves the true gcd is free of that
/// variable.
fn coprime_mod_p(a: &MultiPoly, b: &MultiPoly) -> bool {
    let n = a.vars().len();
    let mut state = (a.num_terms() as u64) << 32 ^ b.num_terms() as u64;
    'vars: for var in 0..n {
        if !(a.uses_var(var) && b.uses_var(var)) {
            continue;
        }
        for _attempt in 0..3 {
            let point: Vec<u64> = (0..n).map(|_| splitmix(&mut state) % P).collect();
            let (Some(ia), Some(ib)) = (univariate_image(a, var, &point), univariate_image(b, var, &point)) else {
                return false;
            };
            if ia.last() == Some(&0) || ib.last() == Some(&0) {
                continue;
            }
            if gcd_degree_mod(ia, ib) > 0 {
                return false;
            }
            continue 'vars;
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::testutil::{k, small_poly, vars, x};
    use proptest::prelude::*;

    #[test]
    fn linear_factor() {
        let v = vars(&["s"]);
        let s = x(&v, 0);
        let g = poly_gcd(&(&s.pow(2) - &k(&v, 1)), &(&s - &k(&v, 1))).unwrap();
        assert_eq!(g, &s - &k(&v, 1));
    }

    #[test]
    fn unit_and_zero() {
        let v = vars(&["s", "t"]);
        let f = &(&x(&v, 0) * &x(&v, 1)) + &k(&v, 3);
        assert_eq!(poly_gcd(&f, &k(&v, 1)).unwrap(), k(&v, 1));
        assert_eq!(poly_gcd(&f, &MultiPoly::zero(&v)).unwrap(), f.monic());
    }

    #[test]
    fn shared_monomial() {
        let v = vars(&["s1", "s2", "t"]);
        let (s1, s2, t) = (x(&v, 0), x(&v, 1), x(&v, 2));
        let a = &(&s1 * &s2) - &s1;
        let b = &s1 * &t;
        let g = poly_gcd(&a, &b).unwrap();
        assert_eq!(g, s1);
        assert!(a.div_exact(&g).is_some());
        assert!(b.div_exact(&g).is_some());
    }

    #[test]
    fn multivariate_common_factor() {
        let v = vars(&["s1", "s2", "t"]);
        let (s1, s2, t) = (x(&v, 0), x(&v, 1), x(&v, 2));
        let one = k(&v, 1);
        let f = &(&(&one - &s1) * &(&one - &s2)) - &t;
        let a = &f * &(&s1 + &t);
        let b = &f * &(&(&s2 * &t) - &one);
        assert_eq!(poly_gcd(&a, &b).unwrap(), f.monic());
        assert!(poly_gcd(&(&s1 + &t), &(&s2 - &t)).unwrap().is_one());
    }

    proptest! {
        #[test]
        fn common_factor_divides_gcd(a in small_poly(vars(&["s1", "s2", "t"])),
                                     b in small_poly(vars(&["s1", "s2", "t"])),
                                     g in small_poly(vars(&["s1", "s2", "t"]))) {
            prop_assume!(!g.is_zero());
            let ag = &a * &g;
            let bg = &b * &g;
            let h = poly_gcd(&ag, &bg).unwrap();
            if ag.is_zero() && bg.is_zero() {
                prop_assert!(h.is_zero());
            } else {
                prop_assert!(h.div_exact(&g).is_some());
                prop_assert!(ag.div_exact(&h).is_some());
                prop_assert!(bg.div_exact(&h).is_some());
            }
        }
    }
}
