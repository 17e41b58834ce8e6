//! Exact real-root counting for integer polynomials.
//!
//! Sturm's theorem over a signed primitive pseudo-remainder sequence: no
//! rational or floating-point arithmetic anywhere. Roots are counted with
//! multiplicity by peeling repeated factors through gcds with the
//! derivative.

use num::bigint::BigInt;
use num::{Integer, Signed, Zero};

use crate::poly::{IntPolynomial, PolyError};

/// Positive gcd of all coefficients (1 for the zero polynomial).
fn content(p: &IntPolynomial) -> BigInt {
    let mut g = BigInt::zero();
    for c in p.coeffs() {
        g = g.gcd(c);
    }
    if g.is_zero() {
        BigInt::from(1)
    } else {
        g
    }
}

/// Divides out the content, keeping the leading sign.
fn primitive_part(p: &IntPolynomial) -> IntPolynomial {
    let c = content(p);
    IntPolynomial::from_coeffs(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Remainder of `f` by `g` up to a positive constant factor, as a primitive
/// polynomial. Each elimination step pre-scales by the leading coefficient
/// of `g`; an odd number of scalings by a negative leading coefficient flips
/// the sign, which is undone at the end so the result has the sign of the
/// true rational remainder.
fn signed_prem(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let dg = g.degree().expect("division by zero polynomial");
    if dg == 0 {
        return IntPolynomial::zero();
    }
    if f.degree().is_none_or(|d| d < dg) {
        return primitive_part(f);
    }
    let lc = g.leading().unwrap().clone();
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let mut scalings = 0usize;
    loop {
        while rem.last().is_some_and(|c| c.is_zero()) {
            rem.pop();
        }
        if rem.len() <= dg {
            break;
        }
        for c in rem.iter_mut() {
            *c *= &lc;
        }
        scalings += 1;
        let shift = rem.len() - 1 - dg;
        let q = &rem[rem.len() - 1] / &lc;
        for (i, gc) in g.coeffs().iter().enumerate() {
            let sub = &q * gc;
            rem[shift + i] -= sub;
        }
        debug_assert!(rem.last().unwrap().is_zero());
    }
    let mut out = IntPolynomial::from_coeffs(rem);
    if lc.is_negative() && scalings % 2 == 1 {
        out = IntPolynomial::from_coeffs(out.coeffs().iter().map(|c| -c).collect());
    }
    primitive_part(&out)
}

/// Primitive gcd via the remainder sequence, leading coefficient positive.
fn gcd_primitive(f: &IntPolynomial, g: &IntPolynomial) -> IntPolynomial {
    let mut a = primitive_part(f);
    let mut b = primitive_part(g);
    if a.is_zero() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree() == Some(0) {
            return IntPolynomial::one();
        }
        let r = signed_prem(&a, &b);
        a = b;
        b = r;
    }
    if a.leading().is_some_and(|c| c.is_negative()) {
        a = IntPolynomial::from_coeffs(a.coeffs().iter().map(|c| -c).collect());
    }
    a
}

/// Exact quotient `f / g`, or `None` if `g` does not divide `f` over the
/// integers. When the division is exact every elimination step stays
/// integral, so plain long division suffices.
fn div_exact(f: &IntPolynomial, g: &IntPolynomial) -> Option<IntPolynomial> {
    let dg = g.degree()?;
    if f.is_zero() {
        return Some(IntPolynomial::zero());
    }
    let df = f.degree().unwrap();
    if df < dg {
        return None;
    }
    let lc = g.leading().unwrap();
    let mut rem: Vec<BigInt> = f.coeffs().to_vec();
    let mut quot = vec![BigInt::zero(); df - dg + 1];
    for k in (0..quot.len()).rev() {
        let top = rem[k + dg].clone();
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return None;
        }
        for (i, gc) in g.coeffs().iter().enumerate() {
            let sub = &q * gc;
            rem[k + i] -= sub;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(IntPolynomial::from_coeffs(quot))
}

fn sign_at_pos_inf(p: &IntPolynomial) -> i8 {
    match p.leading() {
        Some(c) if c.is_positive() => 1,
        Some(_) => -1,
        None => 0,
    }
}

fn sign_at_neg_inf(p: &IntPolynomial) -> i8 {
    let s = sign_at_pos_inf(p);
    match p.degree() {
        Some(d) if d % 2 == 1 => -s,
        _ => s,
    }
}

fn variations(signs: impl Iterator<Item = i8>) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for s in signs {
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            count += 1;
        }
        last = s;
    }
    count
}

/// Number of distinct real roots of a squarefree polynomial.
fn sturm_distinct(q: &IntPolynomial) -> usize {
    let Some(d) = q.degree() else { return 0 };
    if d == 0 {
        return 0;
    }
    let mut chain = vec![primitive_part(q), primitive_part(&q.derivative())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == Some(0) {
            break;
        }
        let r = signed_prem(&chain[n - 2], &chain[n - 1]);
        let neg = IntPolynomial::from_coeffs(r.coeffs().iter().map(|c| -c).collect());
        chain.push(neg);
    }
    let at_neg = variations(chain.iter().map(sign_at_neg_inf));
    let at_pos = variations(chain.iter().map(sign_at_pos_inf));
    at_neg - at_pos
}

/// Exact count of real roots with multiplicity.
///
/// Distinct roots of the squarefree part are counted by Sturm's theorem;
/// `gcd(p, p')` carries each root with multiplicity reduced by one and is
/// counted recursively.
pub fn count_real_roots(p: &IntPolynomial) -> Result<usize, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let mut total = 0;
    let mut cur = primitive_part(p);
    while cur.degree().unwrap_or(0) > 0 {
        let g = gcd_primitive(&cur, &cur.derivative());
        let squarefree = div_exact(&cur, &g).expect("gcd divides the polynomial");
        total += sturm_distinct(&squarefree);
        cur = g;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(cs)
    }

    #[test]
    fn quadratics() {
        // (1+t)^2: double root
        assert_eq!(count_real_roots(&p(&[1, 2, 1])).unwrap(), 2);
        // 1 + t + t^2: negative discriminant
        assert_eq!(count_real_roots(&p(&[1, 1, 1])).unwrap(), 0);
        // 1 + 4t + t^2: discriminant 12
        assert_eq!(count_real_roots(&p(&[1, 4, 1])).unwrap(), 2);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(count_real_roots(&IntPolynomial::zero()).is_err());
        assert_eq!(count_real_roots(&p(&[5])).unwrap(), 0);
        assert_eq!(count_real_roots(&p(&[-3, 2])).unwrap(), 1);
    }

    #[test]
    fn multiplicities() {
        // t^3 (t-1)^2 (t^2+1)
        let t3 = p(&[0, 0, 0, 1]);
        let sq = p(&[1, -2, 1]);
        let irr = p(&[1, 0, 1]);
        let prod = &(&t3 * &sq) * &irr;
        assert_eq!(count_real_roots(&prod).unwrap(), 5);
    }

    #[test]
    fn wilkinson_style_product() {
        // (t-1)(t-2)...(t-8): eight simple roots
        let mut prod = IntPolynomial::one();
        for k in 1..=8 {
            prod = &prod * &p(&[-k, 1]);
        }
        assert_eq!(count_real_roots(&prod).unwrap(), 8);
    }

    #[test]
    fn negative_leading_coefficient() {
        assert_eq!(count_real_roots(&p(&[2, 0, -1])).unwrap(), 2);
        assert_eq!(count_real_roots(&p(&[-2, 0, -1])).unwrap(), 0);
    }

    #[test]
    fn gcd_and_division() {
        let a = &p(&[1, 1]) * &p(&[2, 3]); // (1+t)(2+3t)
        let b = &p(&[1, 1]) * &p(&[5, 1]);
        assert_eq!(gcd_primitive(&a, &b), p(&[1, 1]));
        assert_eq!(div_exact(&a, &p(&[1, 1])).unwrap(), p(&[2, 3]));
        assert_eq!(div_exact(&a, &p(&[5, 1])), None);
    }
}
