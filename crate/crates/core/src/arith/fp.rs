use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element of the prime field F_p, stored reduced in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp {
    p: u64,
    value: u64,
}

impl Fp {
    pub fn new(value: i64, p: u64) -> Self {
        let value = value.rem_euclid(p as i64) as u64;
        Fp { p, value }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        Fp { p, value: value % p }
    }

    pub fn zero(p: u64) -> Self {
        Fp { p, value: 0 }
    }

    pub fn one(p: u64) -> Self {
        Fp { p, value: 1 % p }
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.pow(self.p - 2))
        }
    }

    /// Signed representative in `(-p/2, p/2]`.
    pub fn centered(&self) -> i64 {
        let v = self.value as i64;
        if 2 * v > self.p as i64 {
            v - self.p as i64
        } else {
            v
        }
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { p: self.p, value: (self.value + rhs.value) % self.p }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp { p: self.p, value: (self.value + self.p - rhs.value) % self.p }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        let v = (self.value as u128 * rhs.value as u128) % self.p as u128;
        Fp { p: self.p, value: v as u64 }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp { p: self.p, value: (self.p - self.value) % self.p }
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl serde::Serialize for Fp {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(self.value)
    }
}
