//! Dense polynomials in the formal variable `q` over an exact coefficient
//! ring, with the Gaussian binomials and structured products that every
//! group-order and dimension formula in this crate is built from.
//!
//! The coefficient type is generic: group orders and combinatorial
//! identities use arbitrary-precision integers, dimension polynomials use
//! rationals (they can carry powers of two in the denominator). Division is
//! always *checked*: a nonzero remainder is an error, never truncation,
//! because every in-scope quotient is exact by theory.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::sign::Sign;

/// Coefficient ring for [`QPolynomial`]: an exact, ordered, signed ring with
/// a divisibility test.
pub trait Coeff:
    Clone + Eq + Ord + Hash + fmt::Debug + fmt::Display + Zero + One + Signed + FromPrimitive
{
    /// Exact division: `Some(c)` with `c * rhs == self`, `None` when `rhs`
    /// does not divide `self` (or is zero).
    fn div_exact(&self, rhs: &Self) -> Option<Self>;

    fn of(v: i64) -> Self {
        Self::from_i64(v).expect("i64 embeds in every coefficient ring used here")
    }
}

impl Coeff for BigInt {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (quot, rem) = self.div_rem(rhs);
        rem.is_zero().then_some(quot)
    }
}

impl Coeff for BigRational {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }
}

impl Coeff for i64 {
    fn div_exact(&self, rhs: &Self) -> Option<Self> {
        if *rhs == 0 {
            return None;
        }
        (self % rhs == 0).then(|| self / rhs)
    }
}

/// A polynomial in `q` with coefficients in `T`, stored densely by ascending
/// exponent with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> QPolynomial<T> {
    pub fn zero() -> Self {
        QPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPolynomial::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        let mut p = QPolynomial { coeffs: vec![c] };
        p.normalize();
        p
    }

    /// `c * q^exp`.
    pub fn monomial(c: T, exp: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); exp + 1];
        coeffs[exp] = c;
        QPolynomial { coeffs }
    }

    /// `q^exp`.
    pub fn q_power(exp: usize) -> Self {
        Self::monomial(T::one(), exp)
    }

    /// Coefficients in ascending order of exponent; trailing zeros removed.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = QPolynomial { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integers, ascending exponents.
    pub fn from_i64_coeffs(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| T::of(c)).collect())
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Exponent of the leading term; `None` for the zero polynomial.
    pub fn q_degree(&self) -> Option<i64> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() as i64 - 1)
        }
    }

    pub fn leading_coeff(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn coeff(&self, exp: usize) -> T {
        self.coeffs.get(exp).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Exact evaluation at `q0` by Horner's rule.
    pub fn eval_at(&self, q0: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0.clone() + c.clone();
        }
        acc
    }

    /// Substitute `q -> q^base`, spreading the coefficients out.
    pub fn substitute_q_power(&self, base: usize) -> Self {
        assert!(base >= 1, "substitution exponent must be positive");
        if base == 1 || self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![T::zero(); (self.coeffs.len() - 1) * base + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * base] = c.clone();
        }
        QPolynomial { coeffs }
    }

    /// Substitute `q -> -q`, negating the odd-exponent coefficients.
    pub fn substitute_neg_q(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                if i % 2 == 0 {
                    c.clone()
                } else {
                    c.clone().neg()
                }
            })
            .collect();
        QPolynomial { coeffs }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Checked exact division: returns `c` with `rhs * c == self`.
    ///
    /// A nonzero remainder signals a wrong formula or invalid input data and
    /// raises [`Error::NonExactDivision`].
    pub fn exact_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DomainError("division by the zero polynomial".into()));
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let n = self.coeffs.len();
        let d = rhs.coeffs.len();
        if n < d {
            return Err(Error::NonExactDivision(format!(
                "degree {} does not divide degree {}",
                d - 1,
                n - 1
            )));
        }
        let lead = rhs.coeffs.last().expect("nonzero");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); n - d + 1];
        let mut top = n;
        while top >= d {
            let c = match rem[top - 1].div_exact(lead) {
                Some(c) => c,
                None => {
                    return Err(Error::NonExactDivision(format!(
                        "leading coefficient {} does not divide {}",
                        lead,
                        rem[top - 1]
                    )))
                }
            };
            let shift = top - d;
            if !c.is_zero() {
                for (i, rc) in rhs.coeffs.iter().enumerate() {
                    rem[i + shift] = rem[i + shift].clone() - c.clone() * rc.clone();
                }
            }
            quot[shift] = c;
            top -= 1;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::NonExactDivision("nonzero remainder".into()));
        }
        Ok(Self::from_coeffs(quot))
    }

    /// `q^x + sign * q^y`.
    pub fn two_term(x: u64, sign: Sign, y: u64) -> Self {
        let a = Self::q_power(x as usize);
        let b = Self::q_power(y as usize);
        match sign {
            Sign::Plus => a + b,
            Sign::Minus => a - b,
        }
    }

    /// `prod_{i=lo}^{hi} (q^{stride*i} + sign)`, the empty product when
    /// `hi < lo`.
    pub fn geom_range_product(stride: u64, lo: i64, hi: i64, sign: Sign) -> Self {
        let mut acc = Self::one();
        let mut i = lo;
        while i <= hi {
            assert!(i >= 0, "geometric range index must be nonnegative");
            acc = &acc * &Self::two_term(stride * i as u64, sign, 0);
            i += 1;
        }
        acc
    }
}

impl QPolynomial<BigInt> {
    /// Exact evaluation at an integer point given as `u64`.
    pub fn eval_at_u64(&self, q0: u64) -> BigInt {
        self.eval_at(&BigInt::from(q0))
    }

    /// Lift an integer polynomial into `Q[q]`.
    pub fn to_rational(&self) -> QPolynomial<BigRational> {
        QPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl QPolynomial<BigRational> {
    /// Drop back to `Z[q]` when every coefficient is an integer.
    pub fn to_integer(&self) -> Option<QPolynomial<BigInt>> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(QPolynomial { coeffs })
    }

    /// Evaluate at an integer point, requiring an integer value.
    pub fn eval_at_u64_integer(&self, q0: u64) -> Result<BigInt> {
        let v = self.eval_at(&BigRational::from_integer(BigInt::from(q0)));
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(Error::NonExactDivision(format!(
                "value {v} at q={q0} is not an integer"
            )))
        }
    }

    /// Smallest `2^k` clearing all denominators, with the cleared numerator.
    ///
    /// Dimension polynomials only ever acquire powers of two downstairs;
    /// anything else is a bug, reported as `None`.
    pub fn as_halved_integer(&self) -> Option<(QPolynomial<BigInt>, u32)> {
        let mut log2 = 0u32;
        for c in &self.coeffs {
            let mut d = c.denom().clone();
            let mut k = 0u32;
            let two = BigInt::from(2);
            while d.is_even() {
                d /= &two;
                k += 1;
            }
            if !d.is_one() && !(-&d).is_one() {
                return None;
            }
            log2 = log2.max(k);
        }
        let factor = BigRational::from_integer(BigInt::from(2).pow(log2));
        self.scale(&factor).to_integer().map(|p| (p, log2))
    }
}

/// One factor of a structured product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductFactor {
    /// `prod_{i=lo}^{hi} (q^{stride*i} + sign)`; empty when `hi < lo`.
    GeomRange {
        stride: u64,
        lo: i64,
        hi: i64,
        sign: Sign,
    },
    /// `q^x + sign * q^y`.
    TwoTerm { x: u64, sign: Sign, y: u64 },
}

/// Expand a product of factors of the shapes `prod (q^{c i} +- 1)` and
/// `(q^x +- q^y)` exactly; the empty spec gives `1`.
pub fn structured_product<T: Coeff>(spec: &[ProductFactor]) -> QPolynomial<T> {
    let mut acc = QPolynomial::one();
    for factor in spec {
        let f = match *factor {
            ProductFactor::GeomRange {
                stride,
                lo,
                hi,
                sign,
            } => QPolynomial::geom_range_product(stride, lo, hi, sign),
            ProductFactor::TwoTerm { x, sign, y } => QPolynomial::two_term(x, sign, y),
        };
        acc = &acc * &f;
    }
    acc
}

/// Gaussian binomial coefficient in base `q^base`: the `( n over k )` with
/// `q -> q^base` substituted, so `base = 1` gives `( )_q` and `base = 2`
/// gives `( )_{q^2}`.
pub fn q_binomial<T: Coeff>(n: u64, k: u64, base: u64) -> Result<QPolynomial<T>> {
    if k > n {
        return Err(Error::DomainError(format!(
            "binomial lower index {k} exceeds upper index {n}"
        )));
    }
    assert!(base >= 1, "binomial base must be positive");
    let k = k.min(n - k);
    let mut acc: QPolynomial<T> = QPolynomial::one();
    for i in 1..=k {
        let num = QPolynomial::two_term(n - k + i, Sign::Minus, 0);
        let den = QPolynomial::two_term(i, Sign::Minus, 0);
        acc = (&acc * &num)
            .exact_div(&den)
            .expect("Gaussian binomials are polynomials");
    }
    Ok(acc.substitute_q_power(base as usize))
}

impl<T: Coeff> Add for QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn add(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self + &rhs
    }
}

impl<T: Coeff> Add for &QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn add(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) + rhs.coeff(i));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl<T: Coeff> Sub for QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn sub(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self - &rhs
    }
}

impl<T: Coeff> Sub for &QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn sub(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for i in 0..n {
            coeffs.push(self.coeff(i) - rhs.coeff(i));
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl<T: Coeff> Neg for QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn neg(self) -> QPolynomial<T> {
        QPolynomial {
            coeffs: self.coeffs.into_iter().map(Neg::neg).collect(),
        }
    }
}

impl<T: Coeff> Mul for QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn mul(self, rhs: QPolynomial<T>) -> QPolynomial<T> {
        &self * &rhs
    }
}

impl<T: Coeff> Mul for &QPolynomial<T> {
    type Output = QPolynomial<T>;

    fn mul(self, rhs: &QPolynomial<T>) -> QPolynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

impl<T: Coeff> fmt::Display for QPolynomial<T> {
    /// Canonical rendering: descending powers with explicit coefficients,
    /// e.g. `q^4 + q^3 + 2*q^2 + q + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exp, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            match exp {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}*")?;
                    }
                    if exp == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{exp}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: Coeff> fmt::Debug for QPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
