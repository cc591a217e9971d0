use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{rat, AlgebraError, Rational};

/// Dense polynomial in the single variable `c` with rational coefficients.
///
/// `coeffs[i]` is the coefficient of `c^i`; trailing zeros are always trimmed,
/// so the zero polynomial has an empty coefficient vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(rat(1))
    }

    /// The variable `c`.
    pub fn c() -> Self {
        Self::monomial(rat(1), 1)
    }

    /// `c - 2`, written c̃ in the shifted basis.
    pub fn c_tilde() -> Self {
        Self::from_ints(&[-2, 1])
    }

    pub fn constant(r: Rational) -> Self {
        Self::from_coeffs(vec![r])
    }

    pub fn monomial(coef: Rational, exp: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); exp + 1];
        coeffs[exp] = coef;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Coefficients in ascending order of the exponent.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&x| rat(x)).collect())
    }

    /// Builds from integer coefficients produced by the state-sum evaluators.
    pub fn from_i128(coeffs: &[i128]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Exponent of the lowest nonzero term; `None` for the zero polynomial.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|x| !x.is_zero())
    }

    pub fn coeff(&self, exp: usize) -> Rational {
        self.coeffs.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * x + a)
    }

    pub fn eval_int(&self, x: i64) -> Rational {
        self.eval(&rat(x))
    }

    pub fn scale(&self, k: &Rational) -> Poly {
        if k.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * k).collect())
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Returns `q` with `q(x) = self(x + shift)`.
    pub fn taylor_shift(&self, shift: &Rational) -> Poly {
        // Horner in the shifted variable: p(x + s) = (...(a_n (x+s) + a_{n-1})(x+s) + ...)
        let lin = Poly::from_coeffs(vec![shift.clone(), rat(1)]);
        self.coeffs.iter().rev().fold(Poly::zero(), |acc, a| {
            &(&acc * &lin) + &Poly::constant(a.clone())
        })
    }

    /// Rewrites `self` in powers of c̃ = c − 2: the result's coefficient of
    /// `c^i` is the coefficient of c̃^i.
    pub fn in_ctilde(&self) -> Poly {
        self.taylor_shift(&rat(2))
    }

    /// Inverse of [`Poly::in_ctilde`].
    pub fn from_ctilde(&self) -> Poly {
        self.taylor_shift(&rat(-2))
    }

    /// Euclidean division; `None` if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.degree()?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Some((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * b;
            }
            quot[i] = q;
        }
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Exact quotient `self / divisor`; errors unless the division leaves no remainder.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly, AlgebraError> {
        let (q, r) = self.div_rem(divisor).ok_or(AlgebraError::DivisionByZero)?;
        if !r.is_zero() {
            return Err(AlgebraError::NotDivisible {
                dividend: self.to_string(),
                divisor: divisor.to_string(),
            });
        }
        Ok(q)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    /// Descending powers, e.g. `2*c^3 - 2*c` or `1/2*c^2 + 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exp, a) in self.coeffs.iter().enumerate().rev() {
            if a.is_zero() {
                continue;
            }
            let mag = a.abs();
            if first {
                if a.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if a.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let mono = match exp {
                0 => String::new(),
                1 => "c".to_string(),
                e => format!("c^{e}"),
            };
            if exp == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Poly {
    type Err = AlgebraError;

    /// Accepts the grammar produced by `Display`: a signed sum of terms
    /// `[coef][*]c[^e]` or bare coefficients, where a coefficient is an
    /// integer or `p/q`. Whitespace is ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser::new(s).parse()
    }
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(s: &'a str) -> Self {
        PolyParser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, AlgebraError> {
        Err(AlgebraError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return None;
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
    }

    fn parse(mut self) -> Result<Poly, AlgebraError> {
        let mut acc = Poly::zero();
        let mut first = true;
        loop {
            let sign = match self.peek() {
                None if first => return self.err("empty polynomial"),
                None => break,
                Some(b'+') if !first => {
                    self.pos += 1;
                    1
                }
                Some(b'-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(ch) => {
                    return self.err(format!("expected '+' or '-', found '{}'", ch as char))
                }
            };
            first = false;
            let term = self.term()?;
            acc = if sign < 0 { &acc - &term } else { &acc + &term };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly, AlgebraError> {
        let coef = match self.digits() {
            Some(num) => {
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let Some(den) = self.digits() else {
                        return self.err("expected denominator");
                    };
                    if den.is_zero() {
                        return self.err("zero denominator");
                    }
                    Some(Rational::new(num, den))
                } else {
                    Some(Rational::from_integer(num))
                }
            }
            None => None,
        };
        let has_star = if coef.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            true
        } else {
            false
        };
        if self.peek() == Some(b'c') {
            self.pos += 1;
            let exp = if self.peek() == Some(b'^') {
                self.pos += 1;
                match self.digits().and_then(|e| usize::try_from(e).ok()) {
                    Some(e) => e,
                    None => return self.err("expected exponent"),
                }
            } else {
                1
            };
            Ok(Poly::monomial(coef.unwrap_or_else(|| rat(1)), exp))
        } else if has_star {
            self.err("expected 'c' after '*'")
        } else if let Some(k) = coef {
            Ok(Poly::constant(k))
        } else {
            self.err("expected a coefficient or 'c'")
        }
    }
}

impl Add<&Poly> for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub<&Poly> for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul<&Poly> for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| acc + p)
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The pair (W̄_gl, W̄_so) of values of one element.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PairedPoly {
    pub gl: Poly,
    pub so: Poly,
}

impl PairedPoly {
    pub fn new(gl: Poly, so: Poly) -> Self {
        PairedPoly { gl, so }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        PairedPoly::new(self.gl.scale(k), self.so.scale(k))
    }
}

impl Add<&PairedPoly> for &PairedPoly {
    type Output = PairedPoly;
    fn add(self, rhs: &PairedPoly) -> PairedPoly {
        PairedPoly::new(&self.gl + &rhs.gl, &self.so + &rhs.so)
    }
}

impl Sub<&PairedPoly> for &PairedPoly {
    type Output = PairedPoly;
    fn sub(self, rhs: &PairedPoly) -> PairedPoly {
        PairedPoly::new(&self.gl - &rhs.gl, &self.so - &rhs.so)
    }
}
