use std::str::FromStr;

use num_bigint::BigInt;

use super::FamilyError;
use crate::algebra::{rat, Poly, Rational};
use crate::weight::WeightFlavor;

/// Families with printed closed-form values.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Omega,
    L,
    C,
    T,
}

impl FromStr for Family {
    type Err = FamilyError;
    fn from_str(s: &str) -> Result<Self, FamilyError> {
        match s {
            "omega" => Ok(Family::Omega),
            "L" => Ok(Family::L),
            "C" => Ok(Family::C),
            "T" => Ok(Family::T),
            _ => Err(FamilyError::Unknown(s.to_string())),
        }
    }
}

fn c_pow(k: usize) -> Poly {
    Poly::monomial(rat(1), k)
}

fn lin(a: i64, b: i64) -> Poly {
    Poly::from_ints(&[a, b])
}

/// `c (c - 1)`.
fn c_cm1() -> Poly {
    Poly::from_ints(&[0, -1, 1])
}

/// Deframed value of the family member with parameter `k`.
pub fn closed_form(family: Family, flavor: WeightFlavor, k: usize) -> Result<Poly, FamilyError> {
    use Family::*;
    use WeightFlavor::*;
    let need = |min: usize| {
        if k < min {
            Err(FamilyError::Range(format!("closed form needs k >= {min}")))
        } else {
            Ok(())
        }
    };
    match (family, flavor) {
        (Omega, Gl) => {
            need(2)?;
            Ok(if k % 2 == 0 {
                c_pow(k + 1) + Poly::from_ints(&[0, -2, 0, 1])
            } else {
                c_pow(k + 1) - c_pow(2)
            })
        }
        (Omega, So) => {
            need(2)?;
            Ok(c_cm1() * lin(-2, 1) * r_poly(k)?)
        }
        (L, Gl) => {
            need(1)?;
            Ok(Poly::c() * Poly::from_ints(&[1, 0, -1]).pow(k as u32))
        }
        (L, So) => {
            need(1)?;
            Ok(c_pow(k + 1) * lin(1, -1).pow(k as u32))
        }
        (T, Gl) => {
            need(1)?;
            Ok(lin(0, -1).pow(k as u32) * Poly::from_ints(&[-1, 0, 1]))
        }
        (T, So) => {
            need(1)?;
            Ok(c_cm1() * q_poly(k)?)
        }
        (C, So) => {
            need(2)?;
            Ok(c_cm1() * p_poly(k)?)
        }
        (C, Gl) => Err(FamilyError::NoClosedForm(
            "gl value of the ring family".into(),
        )),
    }
}

/// `a_2 = 2`, `a_{k+1} = 2 a_k - 4 (-1)^k`.
pub fn a_seq(k: usize) -> Result<BigInt, FamilyError> {
    if k < 2 {
        return Err(FamilyError::Range("a_k needs k >= 2".into()));
    }
    let mut a = BigInt::from(2);
    for j in 2..k {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        a = 2 * a - 4 * sign;
    }
    Ok(a)
}

/// `R_k = a_k + sum_{i=1}^{k-2} (-1)^{k-i} (c-2)^i`.
pub fn r_poly(k: usize) -> Result<Poly, FamilyError> {
    let mut r = Poly::constant(Rational::from_integer(a_seq(k)?));
    for i in 1..=k.saturating_sub(2) {
        let term = lin(-2, 1).pow(i as u32);
        r = if (k - i) % 2 == 0 { r + term } else { r - term };
    }
    Ok(r)
}

/// `Q_k = -(-c)^{k-1} + sum_{i even} C(k, i) (1-c)^{k-i}`.
pub fn q_poly(k: usize) -> Result<Poly, FamilyError> {
    if k < 1 {
        return Err(FamilyError::Range("Q_k needs k >= 1".into()));
    }
    let mut q = -lin(0, -1).pow(k as u32 - 1);
    let mut binom = BigInt::from(1);
    for i in 0..=k {
        if i > 0 {
            binom = binom * (k - i + 1) / i;
        }
        if i % 2 == 0 {
            q += &lin(1, -1)
                .pow((k - i) as u32)
                .scale(&Rational::from_integer(binom.clone()));
        }
    }
    Ok(q)
}

/// `P_k = 2^{k-1} - c^{k-1} (1-c)^{k-1}`.
pub fn p_poly(k: usize) -> Result<Poly, FamilyError> {
    if k < 1 {
        return Err(FamilyError::Range("P_k needs k >= 1".into()));
    }
    let e = (k - 1) as u32;
    Ok(Poly::constant(rat(2).pow(e as i32)) - Poly::from_ints(&[0, 1, -1]).pow(e))
}

/// `(d_1, e_1) = (0, 1)`, `(d_{k+1}, e_{k+1}) = (d_k + e_k, 2 d_k)`.
pub fn de_seq(k: usize) -> Result<(BigInt, BigInt), FamilyError> {
    if k < 1 {
        return Err(FamilyError::Range("(d_k, e_k) needs k >= 1".into()));
    }
    let (mut d, mut e) = (BigInt::from(0), BigInt::from(1));
    for _ in 1..k {
        (d, e) = (&d + &e, 2 * d);
    }
    Ok((d, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn a_values() {
        let got: Vec<i64> = (2..=6)
            .map(|k| a_seq(k).unwrap().try_into().unwrap())
            .collect();
        assert_eq!(got, vec![2, 0, 4, 4, 12]);
        assert_eq!(r_poly(3).unwrap().eval_int(2), rat(0));
    }

    #[test]
    fn r_mod_four() {
        for k in 2..=8 {
            let r0: BigInt = r_poly(k).unwrap().eval_int(0).to_integer();
            assert_eq!(
                num_integer::Integer::mod_floor(&r0, &BigInt::from(4)),
                BigInt::from(2),
                "k = {k}"
            );
        }
    }

    #[test]
    fn q_and_p_special_values() {
        for k in 2..=6 {
            let q = q_poly(k).unwrap();
            assert_eq!(q.eval_int(0), rat(2).pow(k as i32 - 1));
            assert_eq!(q.eval_int(2), rat(-2).pow(k as i32));
            assert_ne!(p_poly(k).unwrap().eval_int(0), rat(0));
        }
    }

    #[test]
    fn de_difference() {
        for k in 1..=10 {
            let (d, e) = de_seq(k).unwrap();
            let sign = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(d - e, BigInt::from(sign));
        }
    }

    #[test]
    fn printed_examples() {
        assert_eq!(
            closed_form(Family::Omega, WeightFlavor::So, 2).unwrap(),
            p("2*c") * p("c - 1") * p("c - 2")
        );
        assert_eq!(
            closed_form(Family::L, WeightFlavor::Gl, 2).unwrap(),
            p("c") * p("1 - c^2") * p("1 - c^2")
        );
        let c3 = closed_form(Family::C, WeightFlavor::So, 3).unwrap();
        let inner = p("4") - p("c^2") * p("1 - c") * p("1 - c");
        assert_eq!(c3, p("c") * p("c - 1") * inner);
        assert!(closed_form(Family::C, WeightFlavor::Gl, 3).is_err());
        assert!(closed_form(Family::Omega, WeightFlavor::Gl, 1).is_err());
    }
}
