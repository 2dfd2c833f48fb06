//! Dense univariate polynomials in `q` with exact coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

/// A polynomial `sum_i coeffs[i] * q^i`.
///
/// The coefficient vector never ends in a zero, so the zero polynomial is the
/// empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> Poly<C> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * q^exp`
    pub fn monomial(c: C, exp: usize) -> Self {
        let mut coeffs = vec![C::zero(); exp + 1];
        coeffs[exp] = c;
        Self::from_coeffs(coeffs)
    }

    /// The variable `q` itself.
    pub fn q() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// `q - 1`
    pub fn q_minus_one() -> Self {
        Self::from_coeffs(vec![-C::one(), C::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from_i64_exact(c)).collect())
    }

    /// Builds a polynomial from a histogram of exponents: `counts[i]` copies of `q^i`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| C::from_count(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().cloned().fold(C::zero(), |acc, c| acc + c)
    }

    pub fn eval(&self, x: &C) -> C {
        self.coeffs
            .iter()
            .rev()
            .fold(C::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Divides by `(q - 1)^k`, failing if the quotient would not be a polynomial.
    pub fn exact_div_qminus1_pow(&self, k: usize) -> Result<Self> {
        let mut cur = self.clone();
        for step in 0..k {
            if cur.is_zero() {
                return Ok(cur);
            }
            // a_i = b_{i-1} - b_i, so b_{i-1} = a_i + b_i from the top down
            let a = &cur.coeffs;
            let d = a.len() - 1;
            let mut b = vec![C::zero(); d];
            let mut carry = C::zero();
            for i in (1..=d).rev() {
                carry = carry + a[i].clone();
                b[i - 1] = carry.clone();
            }
            let remainder = a[0].clone() + carry;
            if !remainder.is_zero() {
                return Err(Error::NotDivisible {
                    power: k,
                    divided: step,
                    remainder: remainder.to_string(),
                });
            }
            cur = Self::from_coeffs(b);
        }
        Ok(cur)
    }

    /// Substitutes `q -> q + 1`.
    pub fn shift_q(&self) -> Self {
        let q_plus_one = Self::from_coeffs(vec![C::one(), C::one()]);
        let mut out = Self::zero();
        for c in self.coeffs.iter().rev() {
            out = &out * &q_plus_one;
            out += &Self::constant(c.clone());
        }
        out
    }

    pub fn is_nonneg(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl<C: Coefficient> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = mag.is_one();
            match i {
                0 => write!(f, "{mag}")?,
                _ if unit => {}
                _ => write!(f, "{mag}*")?,
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl<C: Coefficient> AddAssign<&Poly<C>> for Poly<C> {
    fn add_assign(&mut self, rhs: &Poly<C>) {
        if self.coeffs.len() < rhs.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), C::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a = a.clone() + b.clone();
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }
}

impl<C: Coefficient> SubAssign<&Poly<C>> for Poly<C> {
    fn sub_assign(&mut self, rhs: &Poly<C>) {
        *self += &(-rhs);
    }
}

impl<C: Coefficient> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Add for Poly<C> {
    type Output = Poly<C>;
    fn add(mut self, rhs: Poly<C>) -> Poly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: &Poly<C>) -> Poly<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Sub for Poly<C> {
    type Output = Poly<C>;
    fn sub(mut self, rhs: Poly<C>) -> Poly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<C: Coefficient> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coefficient> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: &Poly<C>) -> Poly<C> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<C: Coefficient> Mul for Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Poly<C>) -> Poly<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Zero for Poly<C> {
    fn zero() -> Self {
        Poly::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Coefficient> One for Poly<C> {
    fn one() -> Self {
        Poly::one()
    }
}

impl<C: Coefficient> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Poly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

impl<C: Coefficient> Serialize for Poly<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let strs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        strs.serialize(s)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Poly<C> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let strs: Vec<String> = Vec::deserialize(d)?;
        let coeffs = strs
            .iter()
            .map(|s| {
                C::from_str_radix(s, 10)
                    .map_err(|_| D::Error::custom(format!("bad coefficient {s:?}")))
            })
            .collect::<std::result::Result<Vec<C>, _>>()?;
        Ok(Poly::from_coeffs(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type P = Poly<BigInt>;

    fn p(c: &[i64]) -> P {
        P::from_i64s(c)
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[1, 1]) + &p(&[0, 1]), p(&[1, 2]));
        assert_eq!(&p(&[3, 0, 5]) + &P::zero(), p(&[3, 0, 5]));
        let sum = &p(&[-1, 1]) + &p(&[1]);
        assert_eq!(sum, p(&[0, 1]));
        // cancellation of the top coefficient restores canonical form
        let c = &p(&[1, 2, 3]) + &p(&[0, 0, -3]);
        assert_eq!(c.coeffs().len(), 2);
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[-1, 1]) * &p(&[1, 1]), p(&[-1, 0, 1]));
        assert_eq!(&p(&[4, -2, 7]) * &P::one(), p(&[4, -2, 7]));
        assert_eq!(p(&[1, 1]).pow(2), p(&[1, 2, 1]));
    }

    #[test]
    fn exact_division() {
        assert_eq!(p(&[1, -2, 1]).exact_div_qminus1_pow(2).unwrap(), P::one());
        assert_eq!(p(&[5, 4]).exact_div_qminus1_pow(0).unwrap(), p(&[5, 4]));
        assert!(matches!(
            p(&[-1, 0, 1]).exact_div_qminus1_pow(2),
            Err(Error::NotDivisible { divided: 1, .. })
        ));
        assert_eq!(P::zero().exact_div_qminus1_pow(3).unwrap(), P::zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[-1, 1]).shift_q(), P::q());
        assert_eq!(P::one().shift_q(), P::one());
        assert_eq!(p(&[0, 0, 1]).shift_q(), p(&[1, 2, 1]));
    }

    #[test]
    fn nonneg_examples() {
        assert!(p(&[1, 1]).is_nonneg());
        assert!(!p(&[-1, 1]).is_nonneg());
        assert!(P::zero().is_nonneg());
    }

    #[test]
    fn big_coefficients_survive() {
        let big = p(&[1, 1]).pow(80);
        // C(80, 40) does not fit in 64 bits
        let mid: BigInt = "107507208733336176461620".parse().unwrap();
        assert_eq!(big.coeff(40), mid);
    }

    #[test]
    fn json_shape() {
        let s = serde_json::to_string(&p(&[-1, 1])).unwrap();
        assert_eq!(s, r#"["-1","1"]"#);
        let back: P = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p(&[-1, 1]));
        let z: P = serde_json::from_str(r#"["0","0"]"#).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn display() {
        assert_eq!(p(&[1, -2, 1]).to_string(), "1 - 2*q + q^2");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn machine_width_coefficients() {
        let a = Poly::<i64>::from_i64s(&[2, -3, 1]);
        assert_eq!(a.exact_div_qminus1_pow(1).unwrap(), Poly::<i64>::from_i64s(&[-2, 1]));
    }
}
