use num_traits::Zero;

use super::{discriminant, IntPoly};
use crate::arith::{mod_u64, require_prime};
use crate::error::{Error, Result};

/// Dense polynomial over F_p with `u64` coefficients, constant term first,
/// trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    pub fn from_int(f: &IntPoly, p: u64) -> Self {
        Self::new(p, f.coeffs().iter().map(|c| mod_u64(c, p)).collect())
    }

    pub fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        FpPoly::new(
            self.p,
            (0..n).map(|i| (get(&self.coeffs, i) + self.p - get(&o.coeffs, i)) % self.p).collect(),
        )
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly::new(self.p, vec![]);
        }
        let mut out = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in o.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        FpPoly::new(self.p, out)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, d: &FpPoly) -> (FpPoly, FpPoly) {
        let p = self.p;
        let dn = d.degree().expect("division by zero polynomial");
        let inv = powmod(d.coeffs[dn], p - 2, p);
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return (FpPoly::new(p, vec![]), self.clone());
        }
        let mut q = vec![0u64; r.len() - dn];
        for i in (0..q.len()).rev() {
            let c = mulmod(r[i + dn], inv, p);
            q[i] = c;
            if c != 0 {
                for (j, &dc) in d.coeffs.iter().enumerate() {
                    r[i + j] = (r[i + j] + p - mulmod(c, dc, p)) % p;
                }
            }
        }
        r.truncate(dn);
        (FpPoly::new(p, q), FpPoly::new(p, r))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lc) => {
                let inv = powmod(lc, self.p - 2, self.p);
                FpPoly::new(self.p, self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect())
            }
        }
    }

    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// self^e mod m.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::new(self.p, vec![1]).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            e >>= 1;
        }
        acc
    }
}

/// Degrees of the irreducible factors of `t` mod `ell`, descending, by
/// distinct-degree factorization.
pub fn cycle_type_mod_ell(t: &IntPoly, ell: u64) -> Result<Vec<u32>> {
    require_prime(ell)?;
    let n = t.deg()?;
    if n == 0 {
        return Ok(vec![]);
    }
    let lc_zero = mod_u64(t.leading().unwrap(), ell) == 0;
    let disc_zero = n >= 2 && mod_u64(&discriminant(t)?, ell).is_zero();
    if lc_zero || disc_zero {
        return Err(Error::BadReduction(ell));
    }
    let mut f = FpPoly::from_int(t, ell).monic();
    let x = FpPoly::x(ell);
    let mut h = x.clone();
    let mut parts = Vec::new();
    let mut d = 1usize;
    while f.degree().unwrap() >= 2 * d {
        h = h.pow_mod(ell, &f);
        let g = f.gcd(&h.sub(&x));
        let gd = g.degree().unwrap();
        if gd > 0 {
            parts.extend(std::iter::repeat_n(d as u32, gd / d));
            f = f.div_rem(&g).0;
            h = h.rem(&f);
        }
        d += 1;
    }
    let rest = f.degree().unwrap();
    if rest > 0 {
        parts.push(rest as u32);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn examples() {
        let t = poly(&[-13, -11, 5, 0, 0, -2, 1]);
        assert_eq!(cycle_type_mod_ell(&t, 2).unwrap(), vec![5, 1]);
        assert_eq!(cycle_type_mod_ell(&poly(&[1, 0, 1]), 5).unwrap(), vec![1, 1]);
        assert_eq!(cycle_type_mod_ell(&poly(&[1, 0, 1]), 3).unwrap(), vec![2]);
        assert!(matches!(cycle_type_mod_ell(&poly(&[1, 0, 1]), 2), Err(Error::BadReduction(2))));
        assert!(cycle_type_mod_ell(&poly(&[1, 0, 1]), 9).is_err());
    }

    /// Oracle: count monic irreducibles dividing f by brute-force root
    /// counting in small cases (linear factors only) and via the product of
    /// orders: x^{ell^L} = x mod f where L is the lcm of the parts, and no
    /// proper divisor works.
    fn lcm(a: u64, b: u64) -> u64 {
        a / num_integer::gcd(a, b) * b
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn partition_sums_and_frobenius_order(c in prop::collection::vec(-20i64..=20, 2..=6), li in 0usize..5) {
                let ell = [2u64, 3, 5, 7, 11][li];
                let mut coeffs = c;
                coeffs.push(1);
                let t = IntPoly::from_i64s(&coeffs);
                let Ok(parts) = cycle_type_mod_ell(&t, ell) else { return Ok(()); };
                let n = t.degree().unwrap();
                prop_assert_eq!(parts.iter().map(|&d| d as usize).sum::<usize>(), n);
                let f = FpPoly::from_int(&t, ell);
                let x = FpPoly::x(ell);
                let order = parts.iter().fold(1u64, |a, &d| lcm(a, d as u64));
                // x^{ell^k} = x mod f exactly when every part divides k.
                let mut h = x.clone();
                for k in 1..=order {
                    h = h.pow_mod(ell, &f);
                    let fixed = h == x.rem(&f);
                    prop_assert_eq!(fixed, parts.iter().all(|&d| k % d as u64 == 0));
                }
                // Linear factors agree with root counting.
                let roots = (0..ell)
                    .filter(|&r| t.eval(&r.into()).is_zero() || mod_u64(&t.eval(&r.into()), ell) == 0)
                    .count();
                prop_assert_eq!(parts.iter().filter(|&&d| d == 1).count(), roots);
            }
        }
    }
}
