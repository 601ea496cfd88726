use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::SerializeSeq;

use super::{is_prime, Fp};
use crate::error::{Error, Result};

/// A model of F_{p^2} as F_p[w]/(w^2 + m1*w + m0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Field {
    p: u64,
    m0: u64,
    m1: u64,
}

/// The canonical model of F_{p^2}: the modulus w^2 + m1*w + m0 with
/// `(m0, m1)` lexicographically smallest among irreducible quadratics.
pub fn fp2_make(p: u64) -> Result<Fp2Field> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    for m0 in 0..p {
        for m1 in 0..p {
            let has_root = (0..p).any(|x| {
                let x = x as u128;
                (x * x + m1 as u128 * x + m0 as u128) % p as u128 == 0
            });
            if !has_root {
                return Ok(Fp2Field { p, m0, m1 });
            }
        }
    }
    unreachable!("an irreducible quadratic exists over every prime field")
}

impl Fp2Field {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// Modulus coefficients `[m0, m1, 1]`, constant term first.
    pub fn modulus(&self) -> [u64; 3] {
        [self.m0, self.m1, 1]
    }

    pub fn zero(&self) -> Fp2 {
        Fp2 { field: *self, c0: 0, c1: 0 }
    }

    pub fn one(&self) -> Fp2 {
        self.from_int(1)
    }

    /// The generator `w` of the model.
    pub fn gen(&self) -> Fp2 {
        Fp2 { field: *self, c0: 0, c1: 1 % self.p }
    }

    pub fn from_int(&self, v: i64) -> Fp2 {
        Fp2 { field: *self, c0: Fp::new(v, self.p).value(), c1: 0 }
    }

    pub fn from_fp(&self, v: Fp) -> Fp2 {
        debug_assert_eq!(v.p(), self.p);
        Fp2 { field: *self, c0: v.value(), c1: 0 }
    }

    /// Element `c0 + c1*w`; coordinates are reduced mod p.
    pub fn elem(&self, c0: i64, c1: i64) -> Fp2 {
        Fp2 {
            field: *self,
            c0: Fp::new(c0, self.p).value(),
            c1: Fp::new(c1, self.p).value(),
        }
    }

    /// All p^2 elements in `(c0, c1)` lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = Fp2> + '_ {
        let p = self.p;
        (0..p).flat_map(move |c0| (0..p).map(move |c1| Fp2 { field: *self, c0, c1 }))
    }

    pub fn order(&self) -> u64 {
        self.p * self.p
    }
}

impl fmt::Display for Fp2Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}[w]/(w^2", self.p * self.p)?;
        if self.m1 != 0 {
            write!(f, " + {}w", self.m1)?;
        }
        if self.m0 != 0 {
            write!(f, " + {}", self.m0)?;
        }
        f.write_str(")")
    }
}

impl serde::Serialize for Fp2Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Fp2Field", 2)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("modulus", &self.modulus())?;
        st.end()
    }
}

/// Element `c0 + c1*w` of F_{p^2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp2 {
    field: Fp2Field,
    c0: u64,
    c1: u64,
}

impl Fp2 {
    pub fn field(&self) -> Fp2Field {
        self.field
    }

    pub fn coords(&self) -> (u64, u64) {
        (self.c0, self.c1)
    }

    pub fn is_zero(&self) -> bool {
        self.c0 == 0 && self.c1 == 0
    }

    pub fn in_prime_field(&self) -> bool {
        self.c1 == 0
    }

    pub fn pow(self, mut e: u128) -> Fp2 {
        let mut base = self;
        let mut acc = self.field.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    pub fn inv(self) -> Option<Fp2> {
        if self.is_zero() {
            None
        } else {
            let q = self.field.order() as u128;
            Some(self.pow(q - 2))
        }
    }

    /// The Frobenius conjugate x^p.
    pub fn frobenius(self) -> Fp2 {
        self.pow(self.field.p as u128)
    }

    /// Multiplicative order; `None` for zero.
    pub fn multiplicative_order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.field.one();
        let mut acc = self;
        let mut k = 1;
        while acc != one {
            acc = acc * self;
            k += 1;
        }
        Some(k)
    }

    /// Sort key: `(c0, c1)`.
    pub fn key(&self) -> (u64, u64) {
        (self.c0, self.c1)
    }
}

impl Add for Fp2 {
    type Output = Fp2;
    fn add(self, rhs: Fp2) -> Fp2 {
        assert_eq!(self.field, rhs.field, "mixed F_p^2 models");
        let p = self.field.p;
        Fp2 { field: self.field, c0: (self.c0 + rhs.c0) % p, c1: (self.c1 + rhs.c1) % p }
    }
}

impl Sub for Fp2 {
    type Output = Fp2;
    fn sub(self, rhs: Fp2) -> Fp2 {
        self + (-rhs)
    }
}

impl Neg for Fp2 {
    type Output = Fp2;
    fn neg(self) -> Fp2 {
        let p = self.field.p;
        Fp2 { field: self.field, c0: (p - self.c0) % p, c1: (p - self.c1) % p }
    }
}

impl Mul for Fp2 {
    type Output = Fp2;
    fn mul(self, rhs: Fp2) -> Fp2 {
        assert_eq!(self.field, rhs.field, "mixed F_p^2 models");
        let p = self.field.p as u128;
        let (a, b) = (self.c0 as u128, self.c1 as u128);
        let (c, d) = (rhs.c0 as u128, rhs.c1 as u128);
        let (m0, m1) = (self.field.m0 as u128, self.field.m1 as u128);
        // w^2 = -m1 w - m0
        let bd = b * d % p;
        let c0 = (a * c + p * p - bd * m0 % p) % p;
        let c1 = (a * d + b * c + p * p - bd * m1 % p) % p;
        Fp2 { field: self.field, c0: c0 as u64, c1: c1 as u64 }
    }
}

impl Mul<Fp2> for i64 {
    type Output = Fp2;
    fn mul(self, rhs: Fp2) -> Fp2 {
        rhs.field.from_int(self) * rhs
    }
}

impl fmt::Display for Fp2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c0, self.c1) {
            (c0, 0) => write!(f, "{c0}"),
            (0, 1) => f.write_str("w"),
            (0, c1) => write!(f, "{c1}w"),
            (c0, 1) => write!(f, "{c0}+w"),
            (c0, c1) => write!(f, "{c0}+{c1}w"),
        }
    }
}

impl serde::Serialize for Fp2 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.c0, self.c1].serialize(s)
    }
}

/// A primitive cube root of unity. Lives in F_p (as an element of the
/// canonical F_{p^2} model) when 3 | p-1, otherwise in F_{p^2} proper.
/// The first root in `(c0, c1)` order is returned.
pub fn cube_root_of_unity(p: u64) -> Result<Fp2> {
    if p == 3 {
        return Err(Error::NoCubeRoot);
    }
    let field = fp2_make(p)?;
    let one = field.one();
    let found = field
        .elements()
        .find(|&z| z * z + z + one == field.zero())
        .expect("x^2+x+1 splits in F_{p^2} for p != 3");
    Ok(found)
}

/// Polynomial over F_{p^2}, coefficients constant term first, no trailing
/// zeros. The field is carried separately so the zero polynomial is typed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fp2Poly {
    field: Fp2Field,
    coeffs: Vec<Fp2>,
}

impl Fp2Poly {
    pub fn new(field: Fp2Field, mut coeffs: Vec<Fp2>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Fp2Poly { field, coeffs }
    }

    pub fn from_ints(field: Fp2Field, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> Fp2Field {
        self.field
    }

    pub fn coeff(&self, i: usize) -> Fp2 {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn coeffs(&self) -> &[Fp2] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficientwise Frobenius conjugate.
    pub fn conj(&self) -> Fp2Poly {
        Fp2Poly::new(self.field, self.coeffs.iter().map(|c| c.frobenius()).collect())
    }

    pub fn eval(&self, x: Fp2) -> Fp2 {
        self.coeffs.iter().rev().fold(self.field.zero(), |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Fp2Poly) -> Fp2Poly {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Fp2Poly::new(self.field, vec![]);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j] + a * b;
            }
        }
        Fp2Poly::new(self.field, out)
    }

    /// Multiply the coefficient of t^k by `s^k` (the twist t -> s*t).
    pub fn scale_variable(&self, s: Fp2) -> Fp2Poly {
        let mut pow = self.field.one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            out.push(c * pow);
            pow = pow * s;
        }
        Fp2Poly::new(self.field, out)
    }
}

impl fmt::Display for Fp2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let body = if c.in_prime_field() { c.to_string() } else { format!("({c})") };
            match i {
                0 => write!(f, "{body}")?,
                1 => write!(f, "{body}t")?,
                _ => write!(f, "{body}t^{i}")?,
            }
        }
        Ok(())
    }
}

impl serde::Serialize for Fp2Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}
