//! Exact scalars: rationals and rational functions in one indeterminate `a`.
//!
//! A [`Scalar`] is either a reduced rational number or a reduced quotient of
//! two univariate polynomials over the rationals with a monic denominator.
//! Constant rational functions always collapse back to [`Scalar::Rat`], so
//! two equal values have exactly one representation and `Eq`/`Hash` are
//! structural.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense univariate polynomial over the rationals, coefficients from degree 0 up.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        let mut p = Poly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The indeterminate `a`.
    pub fn var() -> Self {
        Poly { coeffs: vec![BigRational::zero(), BigRational::one()] }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = Poly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let lc = self.leading();
        self.scale(&(BigRational::one() / lc))
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(x), Some(y)) => x + y,
                (Some(x), None) => x.clone(),
                (None, Some(y)) => y.clone(),
                (None, None) => unreachable!(),
            });
        }
        Poly::from_coeffs(out)
    }

    pub fn neg(&self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("polynomial division by zero");
        let lc = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let top = rem.len() - 1;
            let c = &rem[top] / &lc;
            if !c.is_zero() {
                let shift = top - dd;
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + j] -= &c * b;
                }
                quot[shift] = c;
            }
            rem.pop();
            while rem.last().is_some_and(|x| x.is_zero()) {
                rem.pop();
            }
        }
        (Poly::from_coeffs(quot), Poly::from_coeffs(rem))
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, var: &str) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = abs.is_one();
            match i {
                0 => write!(f, "{}", fmt_rat(&abs))?,
                _ => {
                    if !unit {
                        write!(f, "{}*", fmt_rat(&abs))?;
                    }
                    if i == 1 {
                        write!(f, "{var}")?;
                    } else {
                        write!(f, "{var}^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Reduced rational function `num/den` with `den` monic and `gcd(num, den) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }
}

/// An exact field element of Q or Q(a).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Func(RatFunc),
}

impl Scalar {
    pub fn int(n: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn ratio(n: i64, d: i64) -> Scalar {
        Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// The indeterminate `a` of Q(a).
    pub fn alpha() -> Scalar {
        Scalar::Func(RatFunc { num: Poly::var(), den: Poly::constant(BigRational::one()) })
    }

    /// Builds `num/den`, reducing to canonical form.
    pub fn from_polys(num: Poly, den: Poly) -> Scalar {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Scalar::zero();
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let lc = d.leading();
        if !lc.is_one() {
            let inv = BigRational::one() / lc;
            n = n.scale(&inv);
            d = d.scale(&inv);
        }
        match (n.as_constant(), d.as_constant()) {
            (Some(a), Some(b)) => Scalar::Rat(a / b),
            _ => Scalar::Func(RatFunc { num: n, den: d }),
        }
    }

    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(r) if r.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Func(_) => None,
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Scalar::Func(_))
    }

    fn parts(&self) -> (Poly, Poly) {
        match self {
            Scalar::Rat(r) => (Poly::constant(r.clone()), Poly::constant(BigRational::one())),
            Scalar::Func(f) => (f.num.clone(), f.den.clone()),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => {
                assert!(!r.is_zero(), "division by zero");
                Scalar::Rat(r.recip())
            }
            Scalar::Func(f) => Scalar::from_polys(f.den.clone(), f.num.clone()),
        }
    }

    /// Substitutes `a = value`; fails when the denominator vanishes there.
    pub fn evaluate_alpha(&self, value: &BigRational) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) => Ok(self.clone()),
            Scalar::Func(f) => {
                let d = f.den.eval(value);
                if d.is_zero() {
                    return Err(Error::PoleAtAlpha(fmt_rat(value)));
                }
                Ok(Scalar::Rat(f.num.eval(value) / d))
            }
        }
    }

    /// Parses `"p"`, `"p/q"`, or the literal `"a"`.
    pub fn parse(s: &str) -> Result<Scalar> {
        let s = s.trim();
        if s == "a" || s == "alpha" {
            return Ok(Scalar::alpha());
        }
        let bad = || Error::Parse(format!("not a rational number: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::Rat(BigRational::new(n, d)))
        } else {
            let n: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Scalar::Rat(BigRational::from_integer(n)))
        }
    }

    /// Canonical ordering key; total and deterministic, not an ordered-field order.
    fn sort_key(&self) -> (u8, Vec<&BigRational>, Vec<&BigRational>) {
        match self {
            Scalar::Rat(r) => (0, vec![r], vec![]),
            Scalar::Func(f) => (1, f.num.coeffs.iter().collect(), f.den.coeffs.iter().collect()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(r: BigRational) -> Self {
        Scalar::Rat(r)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", fmt_rat(r)),
            Scalar::Func(rf) => {
                let den_one = rf.den.as_constant().is_some_and(|c| c.is_one());
                if den_one {
                    rf.num.fmt_with(f, "a")
                } else {
                    write!(f, "(")?;
                    rf.num.fmt_with(f, "a")?;
                    write!(f, ")/(")?;
                    rf.den.fmt_with(f, "a")?;
                    write!(f, ")")
                }
            }
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                if ad == bd {
                    return Scalar::from_polys(an.add(&bn), ad);
                }
                Scalar::from_polys(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
            }
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            _ => self + &(-rhs),
        }
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => {
                if self.is_zero() || rhs.is_zero() {
                    return Scalar::zero();
                }
                let (an, ad) = self.parts();
                let (bn, bd) = rhs.parts();
                Scalar::from_polys(an.mul(&bn), ad.mul(&bd))
            }
        }
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => {
                assert!(!b.is_zero(), "division by zero");
                Scalar::Rat(a / b)
            }
            _ => self * &rhs.inv(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Func(f) => Scalar::Func(RatFunc { num: f.num.neg(), den: f.den.clone() }),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a *= b;
            return;
        }
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        let mut acc = Scalar::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

/// `(-1)^e` as a scalar.
pub fn sign(odd: bool) -> Scalar {
    if odd {
        Scalar::int(-1)
    } else {
        Scalar::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn evaluate_polynomial() {
        let a = Scalar::alpha();
        let x = &(&a * &a) + &a;
        assert_eq!(x.evaluate_alpha(&q(2)).unwrap(), Scalar::int(6));
    }

    #[test]
    fn pole_at_alpha() {
        let x = Scalar::alpha().inv();
        assert!(matches!(x.evaluate_alpha(&q(0)), Err(Error::PoleAtAlpha(_))));
    }

    #[test]
    fn weight_coordinate_at_two() {
        // -4/a - 1 at a = 2
        let x = &(&Scalar::int(-4) / &Scalar::alpha()) - &Scalar::one();
        assert_eq!(x.evaluate_alpha(&q(2)).unwrap(), Scalar::int(-3));
    }

    #[test]
    fn canonical_form_collapses_constants() {
        let a = Scalar::alpha();
        let x = &(&a + &Scalar::one()) / &(&a + &Scalar::one());
        assert_eq!(x, Scalar::one());
        let y = &(&(&a * &a) - &Scalar::one()) / &(&Scalar::int(2) * &(&a - &Scalar::one()));
        // (a^2 - 1) / (2a - 2) = (a + 1)/2
        let expect = &(&a + &Scalar::one()) / &Scalar::int(2);
        assert_eq!(y, expect);
        if let Scalar::Func(f) = &y {
            assert!(f.denom().leading().is_one());
        }
    }

    #[test]
    fn self_division_is_one() {
        let a = Scalar::alpha();
        let x = &(&a * &a) + &Scalar::ratio(3, 7);
        assert_eq!(&x / &x, Scalar::one());
    }

    #[test]
    fn display_is_stable() {
        let a = Scalar::alpha();
        let x = &(&Scalar::int(-4) / &a) - &Scalar::one();
        assert_eq!(x.to_string(), "(-a - 4)/(a)");
        assert_eq!(Scalar::ratio(-6, 4).to_string(), "-3/2");
        assert_eq!(Scalar::parse("-3/2").unwrap(), Scalar::ratio(-3, 2));
    }
}
