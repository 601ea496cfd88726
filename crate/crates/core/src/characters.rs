//! The quadratic Dirichlet characters used as nebentypes, and products of
//! them.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::{require_prime, Fp};
use crate::error::{Error, Result};
use crate::local::Level;

/// Quadratic characters of conductor 17, 4 and 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BaseCharacter {
    /// Legendre symbol mod 17 (the character of Q(sqrt 17)).
    Eps17,
    /// The character of Q(i).
    Omega4,
    /// The character of Q(sqrt 2).
    Psi8,
}

impl BaseCharacter {
    fn name(self) -> &'static str {
        match self {
            BaseCharacter::Eps17 => "eps17",
            BaseCharacter::Omega4 => "omega4",
            BaseCharacter::Psi8 => "psi8",
        }
    }

    /// Value at an integer coprime to the conductor.
    fn eval(self, n: i64) -> i8 {
        match self {
            BaseCharacter::Eps17 => {
                // Euler's criterion.
                let r = n.mod_floor(&17) as u64;
                if Fp::from_u64(r, 17).pow(8).value() == 1 {
                    1
                } else {
                    -1
                }
            }
            BaseCharacter::Omega4 => {
                if n.mod_floor(&4) == 1 {
                    1
                } else {
                    -1
                }
            }
            BaseCharacter::Psi8 => {
                if matches!(n.mod_floor(&8), 1 | 7) {
                    1
                } else {
                    -1
                }
            }
        }
    }
}

/// A product of distinct base characters; the empty product is trivial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DirichletCharacter {
    parts: BTreeSet<BaseCharacter>,
}

impl DirichletCharacter {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn base(b: BaseCharacter) -> Self {
        DirichletCharacter { parts: [b].into_iter().collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> impl Iterator<Item = BaseCharacter> + '_ {
        self.parts.iter().copied()
    }

    /// Product of characters; each base character has order 2.
    pub fn mul(&self, other: &DirichletCharacter) -> DirichletCharacter {
        DirichletCharacter { parts: self.parts.symmetric_difference(&other.parts).copied().collect() }
    }

    /// omega4 * psi8 is the character of Q(sqrt -2), of conductor 8.
    pub fn conductor(&self) -> u64 {
        let odd = if self.parts.contains(&BaseCharacter::Eps17) { 17 } else { 1 };
        let two = match (self.parts.contains(&BaseCharacter::Omega4), self.parts.contains(&BaseCharacter::Psi8)) {
            (false, false) => 1,
            (true, false) => 4,
            (_, true) => 8,
        };
        odd * two
    }

    /// Value in {+1, -1} at an integer coprime to the conductor.
    pub fn eval(&self, n: i64) -> Result<i8> {
        let c = self.conductor();
        if n.gcd(&(c as i64)) != 1 {
            return Err(Error::CharacterUndefined { conductor: c, ell: n.unsigned_abs() });
        }
        Ok(self.parts.iter().map(|b| b.eval(n)).product())
    }
}

/// chi(ell) embedded in F_p.
pub fn char_eval(chi: &DirichletCharacter, ell: u64, p: u64) -> Result<Fp> {
    require_prime(ell)?;
    require_prime(p)?;
    Ok(Fp::new(i64::from(chi.eval(ell as i64)?), p))
}

impl fmt::Display for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("trivial");
        }
        let names: Vec<&str> = self.parts.iter().map(|b| b.name()).collect();
        f.write_str(&names.join("*"))
    }
}

impl FromStr for DirichletCharacter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "trivial" || s == "1" {
            return Ok(Self::trivial());
        }
        let mut out = Self::trivial();
        for name in s.split('*') {
            let b = match name.trim() {
                "eps17" => BaseCharacter::Eps17,
                "omega4" => BaseCharacter::Omega4,
                "psi8" => BaseCharacter::Psi8,
                other => return Err(Error::Parse(format!("unknown character {other:?}"))),
            };
            out = out.mul(&Self::base(b));
        }
        Ok(out)
    }
}

impl Serialize for DirichletCharacter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for DirichletCharacter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// det rho = eps * omega^k: checks that the conductor of eps is prime to p
/// and divides the level, and returns (eps, k mod p-1).
pub fn nebentype_factor(k: i64, eps: &DirichletCharacter, level: &Level, p: u64) -> Result<(DirichletCharacter, u64)> {
    require_prime(p)?;
    let c = eps.conductor();
    if c % p == 0 || !level.is_divisible_by(c) {
        return Err(Error::ConductorMismatch { conductor: c, level: level.to_string() });
    }
    Ok((eps.clone(), k.mod_floor(&((p - 1) as i64)) as u64))
}
