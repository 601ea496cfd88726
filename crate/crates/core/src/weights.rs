//! Predicted Serre weights from the tame inertia data at p.
//!
//! A weight is a p-restricted triple (a, b, c): 0 <= a-b <= p-1,
//! 0 <= b-c <= p-1, 0 <= c <= p-2.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arith::require_prime;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl Weight {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        Weight { a, b, c }
    }

    pub fn is_p_restricted(&self, p: u64) -> bool {
        let p = p as i64;
        (0..=p - 1).contains(&(self.a - self.b)) && (0..=p - 1).contains(&(self.b - self.c)) && (0..=p - 2).contains(&self.c)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.a, self.b, self.c)
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a weight: {s:?}"));
        let inner = s.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let v: Vec<i64> = inner.split(',').map(|t| t.trim().parse().map_err(|_| bad())).collect::<Result<_>>()?;
        match v[..] {
            [a, b, c] => Ok(Weight { a, b, c }),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// How a 2-dimensional block of inertia resolves an ambiguous weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ramification {
    /// Both a = b and a = b + p - 1 are allowed.
    Peu,
    /// Only a = b + p - 1.
    Tres,
    /// Not determined; treated like `Peu`.
    #[default]
    None,
}

impl Ramification {
    fn allows_equal(self) -> bool {
        !matches!(self, Ramification::Tres)
    }
}

/// Flags for the (a, b) and (b, c) blocks.
pub type Flags = (Ramification, Ramification);

/// Candidate values of x - y given its residue mod p-1.
fn gaps(residue: i64, p: i64, flag: Ramification) -> Vec<i64> {
    let r = residue.mod_floor(&(p - 1));
    if r != 0 {
        vec![r]
    } else if flag.allows_equal() {
        vec![0, p - 1]
    } else {
        vec![p - 1]
    }
}

/// All p-restricted triples congruent to (A-2, B-1, C) mod p-1.
pub fn p_restrict(big_a: i64, big_b: i64, big_c: i64, p: u64, flags: Flags) -> Result<BTreeSet<Weight>> {
    require_prime(p)?;
    let pi = p as i64;
    let c = big_c.mod_floor(&(pi - 1));
    let mut out = BTreeSet::new();
    for bc in gaps(big_b - 1 - big_c, pi, flags.1) {
        for ab in gaps(big_a - 2 - (big_b - 1), pi, flags.0) {
            let w = Weight::new(c + bc + ab, c + bc, c);
            debug_assert!(w.is_p_restricted(p));
            out.insert(w);
        }
    }
    Ok(out)
}

/// Residue data for rho restricted to inertia at p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "niveau")]
pub enum InertiaProfile {
    /// Exponents (A, B, C) of omega down the diagonal, one triple per
    /// triangularization.
    #[serde(rename = "1")]
    Niveau1 {
        exponents: Vec<[i64; 3]>,
        #[serde(default)]
        flags: Flags,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        flag_source: Option<String>,
    },
    /// Characters psi^m, psi^{pm} and omega^k.
    #[serde(rename = "2")]
    Niveau2 { k: i64, m: i64 },
    /// Characters theta^m, theta^{pm}, theta^{p^2 m}.
    #[serde(rename = "3")]
    Niveau3 { m: i64 },
}

impl InertiaProfile {
    pub fn unipotent() -> Self {
        InertiaProfile::Niveau1 {
            exponents: vec![[0, 0, 0]],
            flags: (Ramification::None, Ramification::None),
            flag_source: None,
        }
    }
}

const BOTH: Flags = (Ramification::Peu, Ramification::Peu);

/// Orbit of m under multiplication by p modulo p^k - 1.
fn frobenius_orbit(m: i64, p: i64, modulus: i64) -> Vec<i64> {
    let mut orbit = vec![m.mod_floor(&modulus)];
    loop {
        let next = (orbit.last().unwrap() * p).mod_floor(&modulus);
        if next == orbit[0] {
            return orbit;
        }
        orbit.push(next);
    }
}

/// Pairs (r, s) in [0, p^2-2] with r + s p = m mod p^2 - 1 and 0 <= r - s <= p-1.
pub fn niveau2_decompositions(m: i64, p: u64) -> Vec<(i64, i64)> {
    let p = p as i64;
    let q = p * p - 1;
    let mut out = Vec::new();
    for s in 0..q {
        for r in s..(s + p).min(q) {
            if (r + s * p - m).mod_floor(&q) == 0 {
                out.push((r, s));
            }
        }
    }
    out
}

/// Triples (r, s, t) in [0, p^3-2] with r + s p + t p^2 = m mod p^3 - 1 and
/// 0 <= r - t, s - t <= p - 1.
pub fn niveau3_decompositions(m: i64, p: u64) -> Vec<(i64, i64, i64)> {
    let p = p as i64;
    let q = p * p * p - 1;
    let mut out = Vec::new();
    for t in 0..q {
        for r in t..(t + p).min(q) {
            for s in t..(t + p).min(q) {
                if (r + s * p + t * p * p - m).mod_floor(&q) == 0 {
                    out.push((r, s, t));
                }
            }
        }
    }
    out
}

pub fn predicted_weights(profile: &InertiaProfile, p: u64) -> Result<BTreeSet<Weight>> {
    require_prime(p)?;
    let pi = p as i64;
    let mut out = BTreeSet::new();
    match profile {
        InertiaProfile::Niveau1 { exponents, flags, .. } => {
            if exponents.is_empty() {
                return Err(Error::InvalidProfile("niveau 1 profile lists no exponents".into()));
            }
            for &[a, b, c] in exponents {
                out.extend(p_restrict(a, b, c, p, *flags)?);
            }
        }
        InertiaProfile::Niveau2 { k, m } => {
            let q = pi * pi - 1;
            if (m * (pi - 1)).mod_floor(&q) == 0 {
                return Err(Error::InvalidProfile(format!("psi^{m} has niveau 1 at p = {p}")));
            }
            for mm in frobenius_orbit(*m, pi, q) {
                for (r, s) in niveau2_decompositions(mm, p) {
                    for (a, b, c) in [(*k, r, s), (r, *k, s), (r, s, *k)] {
                        out.extend(p_restrict(a, b, c, p, BOTH)?);
                    }
                }
            }
        }
        InertiaProfile::Niveau3 { m } => {
            let q = pi * pi * pi - 1;
            if (m * (pi - 1)).mod_floor(&q) == 0 {
                return Err(Error::InvalidProfile(format!("theta^{m} has niveau 1 at p = {p}")));
            }
            for mm in frobenius_orbit(*m, pi, q) {
                for (r, s, t) in niveau3_decompositions(mm, p) {
                    let mut v = [r, s, t];
                    v.sort_unstable_by(|x, y| y.cmp(x));
                    out.extend(p_restrict(v[0], v[1], v[2], p, BOTH)?);
                }
            }
        }
    }
    if out.is_empty() {
        return Err(Error::DecompositionImpossible(format!("no admissible decomposition at p = {p}")));
    }
    Ok(out)
}
