//! Exact arithmetic in multi-quadratic fields `Q(√p_1, ..., √p_k)`.
//!
//! An element is a finite sum `Σ c_r √r` over square-free radicands `r` (with `r = 1` the
//! rational part). The basis `{√r}` is closed under products: `√a·√b = g·√(ab/g²)` with
//! `g = gcd(a, b)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadElem {
    terms: BTreeMap<u64, BigRational>,
}

/// Splits `m > 0` as `s² · c` with `c` square-free.
pub fn square_free_split(mut m: u64) -> (u64, u64) {
    assert!(m > 0, "square_free_split of zero");
    let (mut s, mut c) = (1u64, 1u64);
    let mut p = 2u64;
    while p * p <= m {
        let mut e = 0;
        while m % p == 0 {
            m /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            c *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, c * m)
}

pub fn is_square_free(m: u64) -> bool {
    m > 0 && square_free_split(m).0 == 1
}

/// Prime factors of a square-free radicand, ascending.
pub fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        while m % p == 0 {
            out.push(p);
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out.dedup();
    out
}

impl QuadElem {
    pub fn zero() -> Self {
        QuadElem::default()
    }

    pub fn one() -> Self {
        QuadElem::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        QuadElem::term(q, 1)
    }

    pub fn from_int(v: i64) -> Self {
        QuadElem::from_rational(BigRational::from_integer(v.into()))
    }

    /// `p/q`.
    pub fn rat(p: i64, q: i64) -> Self {
        QuadElem::from_rational(BigRational::new(p.into(), q.into()))
    }

    /// `c·√r` for square-free `r`.
    pub fn term(c: BigRational, r: u64) -> Self {
        assert!(is_square_free(r), "radicand {r} is not square-free");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(r, c);
        }
        QuadElem { terms }
    }

    /// `(p/q)·√m` for any positive integer `m`.
    pub fn scaled_sqrt(p: i64, q: i64, m: u64) -> Self {
        let (s, c) = square_free_split(m);
        QuadElem::term(BigRational::new(BigInt::from(p) * BigInt::from(s), q.into()), c)
    }

    /// `√m`.
    pub fn sqrt(m: u64) -> Self {
        QuadElem::scaled_sqrt(1, 1, m)
    }

    /// `√x` for a non-negative rational whose reduced numerator·denominator fits in `u64`.
    pub fn sqrt_rational(x: &BigRational) -> Option<Self> {
        if x.is_negative() {
            return None;
        }
        if x.is_zero() {
            return Some(QuadElem::zero());
        }
        // √(a/b) = √(ab)/b
        let a = x.numer().to_u64()?;
        let b = x.denom().to_u64()?;
        let (s, c) = square_free_split(a.checked_mul(b)?);
        Some(QuadElem::term(
            BigRational::new(BigInt::from(s), BigInt::from(b)),
            c,
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.keys().all(|&r| r == 1)
    }

    /// The rational value if the element has no irrational part.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.is_rational() {
            Some(self.coeff(1))
        } else {
            None
        }
    }

    pub fn coeff(&self, r: u64) -> BigRational {
        self.terms.get(&r).cloned().unwrap_or_else(BigRational::zero)
    }

    /// `(radicand, coefficient)` pairs with nonzero coefficient, ascending radicand.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigRational)> {
        self.terms.iter().map(|(&r, c)| (r, c))
    }

    pub fn radicands(&self) -> impl Iterator<Item = u64> + '_ {
        self.terms.keys().copied()
    }

    fn add_term(&mut self, r: u64, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(r).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&r);
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return QuadElem::zero();
        }
        QuadElem {
            terms: self.terms.iter().map(|(&r, v)| (r, v * c)).collect(),
        }
    }

    /// Field automorphism `√p ↦ −√p` for a prime `p`.
    pub fn conjugate(&self, p: u64) -> Self {
        QuadElem {
            terms: self
                .terms
                .iter()
                .map(|(&r, c)| (r, if r % p == 0 { -c } else { c.clone() }))
                .collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(&r, c)| c.to_f64().unwrap_or(f64::NAN) * (r as f64).sqrt())
            .sum()
    }
}

impl fmt::Debug for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (&r, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if r == 1 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "√{r}")?;
            } else {
                write!(f, "({c})√{r}")?;
            }
        }
        Ok(())
    }
}

impl From<i64> for QuadElem {
    fn from(v: i64) -> Self {
        QuadElem::from_int(v)
    }
}

impl From<BigRational> for QuadElem {
    fn from(v: BigRational) -> Self {
        QuadElem::from_rational(v)
    }
}

impl Add for &QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: &QuadElem) -> QuadElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(mut self, rhs: QuadElem) -> QuadElem {
        self += &rhs;
        self
    }
}

impl AddAssign<&QuadElem> for QuadElem {
    fn add_assign(&mut self, rhs: &QuadElem) {
        for (&r, c) in &rhs.terms {
            self.add_term(r, c.clone());
        }
    }
}

impl Neg for &QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            terms: self.terms.iter().map(|(&r, c)| (r, -c)).collect(),
        }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        -&self
    }
}

impl Sub for &QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: &QuadElem) -> QuadElem {
        self + &(-rhs)
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        &self - &rhs
    }
}

impl Mul for &QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: &QuadElem) -> QuadElem {
        let mut out = QuadElem::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                let g = a.gcd(&b);
                let r = (a / g) * (b / g);
                out.add_term(r, x * y * BigRational::from_integer(g.into()));
            }
        }
        out
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn products_of_roots() {
        let s2 = QuadElem::sqrt(2);
        let s3 = QuadElem::sqrt(3);
        let s6 = QuadElem::sqrt(6);
        assert_eq!(&s2 * &s2, QuadElem::from_int(2));
        assert_eq!(&s2 * &s3, s6);
        assert_eq!(&s6 * &s3, QuadElem::scaled_sqrt(3, 1, 2));
        assert_eq!(QuadElem::sqrt(12), QuadElem::scaled_sqrt(2, 1, 3));
        assert!((&s2 - &s2).is_zero());
    }

    #[test]
    fn golden_ratio_identities() {
        let s5 = QuadElem::sqrt(5);
        let half = QuadElem::rat(1, 2);
        let alpha = &(&s5 + &QuadElem::one()) * &half;
        let beta = &(&s5 - &QuadElem::one()) * &half;
        assert_eq!(&alpha * &beta, QuadElem::one());
        assert_eq!(&alpha - &beta, QuadElem::one());
        assert_eq!(&alpha * &alpha, &alpha + &QuadElem::one());
    }

    #[test]
    fn rational_square_roots() {
        let x = QuadElem::sqrt_rational(&BigRational::new(1.into(), 12.into())).unwrap();
        assert_eq!(&x * &x, QuadElem::rat(1, 12));
        assert_eq!(x, QuadElem::scaled_sqrt(1, 6, 3));
        assert!(QuadElem::sqrt_rational(&BigRational::new((-1).into(), 2.into())).is_none());
        assert!((x.to_f64() - (1.0f64 / 12.0).sqrt()).abs() < 1e-15);
    }

    #[test]
    fn square_free_parts() {
        assert_eq!(square_free_split(72), (6, 2));
        assert_eq!(square_free_split(1), (1, 1));
        assert_eq!(prime_factors(30), vec![2, 3, 5]);
        assert!(!is_square_free(18));
    }

    fn elem() -> impl Strategy<Value = QuadElem> {
        let radicands = prop::sample::select(vec![1u64, 2, 3, 5, 6, 10, 15, 30]);
        prop::collection::vec((radicands, -20i64..20, 1i64..9), 0..5).prop_map(|ts| {
            let mut e = QuadElem::zero();
            for (r, p, q) in ts {
                e += &QuadElem::term(BigRational::new(p.into(), q.into()), r);
            }
            e
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn multiplication_is_associative(x in elem(), y in elem(), z in elem()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        }

        #[test]
        fn distributive(x in elem(), y in elem(), z in elem()) {
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        }

        #[test]
        fn conjugation_is_a_ring_map(x in elem(), y in elem(), p in prop::sample::select(vec![2u64, 3, 5])) {
            prop_assert_eq!((&x * &y).conjugate(p), &x.conjugate(p) * &y.conjugate(p));
            let sum = &x + &x.conjugate(p);
            prop_assert!(sum.radicands().all(|r| r % p != 0));
            prop_assert_eq!(x.conjugate(p).conjugate(p), x.clone());
        }

        #[test]
        fn float_image_is_a_homomorphism(x in elem(), y in elem()) {
            let lhs = (&x * &y).to_f64();
            let rhs = x.to_f64() * y.to_f64();
            prop_assert!((lhs - rhs).abs() <= 1e-9 * (1.0 + lhs.abs()));
        }
    }
}
