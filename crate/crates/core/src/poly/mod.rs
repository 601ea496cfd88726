//! Integer polynomials: exact arithmetic, resultants, discriminants, Taylor
//! shifts, the root-difference polynomial and quartic resolvents.

mod modp;
mod newton;

pub use modp::{cycle_type_mod_ell, FpPoly};
pub use newton::{newton_polygon, NewtonPolygon, Segment};

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::ord_p_int_finite;
use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, constant term
/// first. The zero polynomial has no coefficients; otherwise the last
/// coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, treating the zero polynomial as an error.
    pub fn deg(&self) -> Result<usize> {
        self.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn require_monic(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroPolynomial)
        } else if !self.is_monic() {
            Err(Error::NotMonic)
        } else {
            Ok(())
        }
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// f(x + a), computed by repeated synthetic division.
    pub fn shift(&self, a: &BigInt) -> IntPoly {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        IntPoly::new(c)
    }

    /// f(s*x) / d, requiring exact division of every coefficient.
    pub fn rescale_variable(&self, s: &BigInt, d: &BigInt) -> Option<IntPoly> {
        let mut pow = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let num = c * &pow;
            let (q, r) = num.div_rem(d);
            if !r.is_zero() {
                return None;
            }
            out.push(q);
            pow *= s;
        }
        Some(IntPoly::new(out))
    }

    /// Eisenstein at p: leading coefficient a unit, all others divisible by
    /// p, constant term not divisible by p^2.
    pub fn is_eisenstein(&self, p: u64) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        let pb = BigInt::from(p);
        let lead_unit = !(&self.coeffs[n] % &pb).is_zero();
        let lower = self.coeffs[..n].iter().all(|c| (c % &pb).is_zero());
        let c0 = &self.coeffs[0];
        lead_unit && lower && !c0.is_zero() && ord_p_int_finite(c0, p) == 1
    }

    /// Exact division by a nonzero polynomial; `None` if not exact over Z.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dn = d.degree()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let n = rem.len() - 1;
        if n < dn {
            return None;
        }
        let lc = &d.coeffs[dn];
        let mut q = vec![BigInt::zero(); n - dn + 1];
        for i in (0..=n - dn).rev() {
            let (qi, r) = rem[i + dn].div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Str(String),
            Int(i64),
        }
        let raw: Vec<Coeff> = Vec::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(raw.len());
        for c in raw {
            coeffs.push(match c {
                Coeff::Int(i) => BigInt::from(i),
                Coeff::Str(s) => s
                    .trim()
                    .parse::<BigInt>()
                    .map_err(|_| serde::de::Error::custom(format!("bad coefficient {s:?}")))?,
            });
        }
        Ok(IntPoly::new(coeffs))
    }
}

/// Parse a polynomial from its JSON form (array of decimal strings, constant
/// term first).
pub fn parse_poly_json(text: &str) -> Result<IntPoly> {
    Ok(serde_json::from_str(text)?)
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Sylvester matrix with coefficient rows, highest degree first.
fn sylvester(f: &IntPoly, g: &IntPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap();
    let n = g.degree().unwrap();
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in f.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![BigInt::zero(); size];
        for (j, c) in g.coeffs.iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Res(f, g) = lc(f)^deg g * lc(g)^deg f * prod (alpha_i - beta_j), as the
/// Sylvester determinant.
pub fn resultant(f: &IntPoly, g: &IntPoly) -> Result<BigInt> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
    if m == 0 {
        return Ok(num_traits::pow(f.coeffs[0].clone(), n));
    }
    if n == 0 {
        return Ok(num_traits::pow(g.coeffs[0].clone(), m));
    }
    Ok(bareiss_det(sylvester(f, g)))
}

/// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f).
pub fn discriminant(f: &IntPoly) -> Result<BigInt> {
    let n = f.deg()?;
    if n < 2 {
        return Err(Error::Degree { found: n, reason: "discriminant needs degree >= 2" });
    }
    let r = resultant(f, &f.derivative())?;
    let lc = f.leading().unwrap();
    let (q, rem) = r.div_rem(lc);
    debug_assert!(rem.is_zero());
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -q } else { q })
}

/// The monic polynomial of degree n(n-1) whose roots are the differences
/// alpha_i - alpha_j (i != j) of the roots of the monic squarefree `f`:
/// Res_y(f(y), f(x+y)) with its factor x^n removed.
///
/// The bivariate resultant is recovered by evaluating at x = 0..=n^2 and
/// interpolating.
pub fn root_diff_poly(f: &IntPoly) -> Result<IntPoly> {
    f.require_monic()?;
    let n = f.deg()?;
    if n < 2 {
        return Err(Error::Degree { found: n, reason: "need degree >= 2" });
    }
    if discriminant(f)?.is_zero() {
        return Err(Error::NotSquarefree);
    }
    let total = n * n;
    let values: Vec<BigInt> = (0..=total)
        .map(|k| {
            let shifted = f.shift(&BigInt::from(k));
            resultant(f, &shifted)
        })
        .collect::<Result<_>>()?;
    let full = interpolate_integer_nodes(&values);
    // The i = j factors contribute exactly x^n.
    debug_assert!(full.coeffs.len() > n && full.coeffs[..n].iter().all(Zero::is_zero));
    let out = IntPoly::new(full.coeffs[n..].to_vec());
    debug_assert_eq!(out.degree(), Some(n * (n - 1)));
    Ok(out)
}

/// Interpolate integer values at nodes 0, 1, ..., len-1. The caller
/// guarantees the result has integer coefficients.
fn interpolate_integer_nodes(values: &[BigInt]) -> IntPoly {
    // Newton forward differences: P(x) = sum_j D_j * C(x, j).
    let mut diffs: Vec<BigInt> = values.to_vec();
    let mut newton = Vec::with_capacity(values.len());
    for _ in 0..values.len() {
        newton.push(diffs[0].clone());
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    // Expand binomial basis into monomials over Q.
    let mut acc = vec![BigRational::zero(); values.len()];
    let mut basis = vec![BigRational::one()]; // C(x, 0)
    for (j, d) in newton.iter().enumerate() {
        if j > 0 {
            // C(x, j) = C(x, j-1) * (x - (j-1)) / j
            let jm1 = BigRational::from_integer(BigInt::from(j - 1));
            let jr = BigRational::from_integer(BigInt::from(j));
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (i, b) in basis.iter().enumerate() {
                next[i + 1] += b / &jr;
                next[i] -= b * &jm1 / &jr;
            }
            basis = next;
        }
        let dr = BigRational::from_integer(d.clone());
        for (i, b) in basis.iter().enumerate() {
            acc[i] += b * &dr;
        }
    }
    IntPoly::new(
        acc.into_iter()
            .map(|c| {
                assert!(c.is_integer(), "interpolant is not integral");
                c.to_integer()
            })
            .collect(),
    )
}

/// Resolvent cubic of a monic quartic x^4 + a x^3 + b x^2 + c x + d, with
/// roots alpha1*alpha2 + alpha3*alpha4 and its conjugates:
/// x^3 - b x^2 + (ac - 4d) x - (a^2 d - 4bd + c^2).
pub fn resolvent_cubic(g: &IntPoly) -> Result<IntPoly> {
    g.require_monic()?;
    if g.degree() != Some(4) {
        return Err(Error::Degree { found: g.degree().unwrap(), reason: "resolvent needs a quartic" });
    }
    let (d, c, b, a) = (g.coeff(0), g.coeff(1), g.coeff(2), g.coeff(3));
    let four = BigInt::from(4);
    Ok(IntPoly::new(vec![
        -(&a * &a * &d - &four * &b * &d + &c * &c),
        &a * &c - &four * &d,
        -b,
        BigInt::one(),
    ]))
}
