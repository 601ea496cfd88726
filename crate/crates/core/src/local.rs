//! Ramification filtrations and the local level exponent.
//!
//! Filtrations are numbered so that index 0 is the full inertia group, and
//! sigma lies in G_i iff ord_L(sigma(pi) - pi) >= i + 1 for a uniformizer pi.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::require_prime;
use crate::error::{Error, Result};

/// One step of a filtration: the order of the image of G_i and the
/// dimension of its fixed subspace.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationEntry {
    pub order: u64,
    pub fixed_dim: u32,
}

/// Indices past the end are implicitly (1, dim).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RamFiltration {
    entries: Vec<FiltrationEntry>,
    dim: u32,
}

impl RamFiltration {
    pub fn new(entries: Vec<FiltrationEntry>, dim: u32) -> Result<Self> {
        let bad = |m: String| Err(Error::InconsistentFiltration(m));
        if entries.is_empty() {
            return bad("empty filtration".into());
        }
        for (i, e) in entries.iter().enumerate() {
            if e.order == 0 {
                return bad(format!("order 0 at index {i}"));
            }
            if e.fixed_dim > dim {
                return bad(format!("fixed_dim {} exceeds dim {dim} at index {i}", e.fixed_dim));
            }
        }
        for (i, w) in entries.windows(2).enumerate() {
            if w[0].order % w[1].order != 0 {
                return bad(format!("order {} at index {} does not divide {}", w[1].order, i + 1, w[0].order));
            }
            if w[1].fixed_dim < w[0].fixed_dim {
                return bad(format!("fixed_dim decreases at index {}", i + 1));
            }
        }
        Ok(RamFiltration { entries, dim })
    }

    /// Convenience constructor from (order, fixed_dim) pairs.
    pub fn from_pairs(pairs: &[(u64, u32)], dim: u32) -> Result<Self> {
        Self::new(pairs.iter().map(|&(order, fixed_dim)| FiltrationEntry { order, fixed_dim }).collect(), dim)
    }

    pub fn entries(&self) -> &[FiltrationEntry] {
        &self.entries
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }
}

impl Serialize for RamFiltration {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

/// n_q = sum_i (|G_i|/|G_0|) * (dim - dim M^{G_i}).
pub fn level_exponent(filt: &RamFiltration) -> Result<u64> {
    let g0 = BigInt::from(filt.entries[0].order);
    let total: BigRational = filt
        .entries
        .iter()
        .map(|e| BigRational::new(BigInt::from(e.order * u64::from(filt.dim - e.fixed_dim)), g0.clone()))
        .sum();
    if !total.is_integer() {
        return Err(Error::InconsistentFiltration(format!(
            "level exponent {}/{} is not an integer",
            total.numer(),
            total.denom()
        )));
    }
    Ok(total.to_integer().try_into().expect("exponent fits in u64"))
}

/// The local contribution at q: a filtration, or an exponent taken from a
/// cited source when the filtration itself is not available.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelDatum {
    pub q: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub filtration: Option<Vec<FiltrationEntry>>,
    #[serde(default = "default_dim")]
    pub dim: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponent: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

fn default_dim() -> u32 {
    3
}

impl LevelDatum {
    pub fn from_filtration(q: u64, filt: &RamFiltration) -> Self {
        LevelDatum {
            q,
            filtration: Some(filt.entries.clone()),
            dim: filt.dim,
            exponent: None,
            source: None,
        }
    }

    pub fn stated(q: u64, exponent: u64, source: &str) -> Self {
        LevelDatum { q, filtration: None, dim: 3, exponent: Some(exponent), source: Some(source.into()) }
    }

    /// n_q, from the filtration when present, else the stated exponent.
    pub fn exponent(&self) -> Result<u64> {
        match (&self.filtration, self.exponent) {
            (Some(entries), None) => level_exponent(&RamFiltration::new(entries.clone(), self.dim)?),
            (None, Some(e)) => {
                if self.source.as_deref().is_none_or(str::is_empty) {
                    return Err(Error::Schema(format!("stated exponent at q={} needs a source", self.q)));
                }
                Ok(e)
            }
            (Some(entries), Some(e)) => {
                let computed = level_exponent(&RamFiltration::new(entries.clone(), self.dim)?)?;
                if computed != e {
                    return Err(Error::InconsistentFiltration(format!(
                        "q={}: filtration gives exponent {computed}, stated {e}",
                        self.q
                    )));
                }
                Ok(e)
            }
            (None, None) => Err(Error::Schema(format!("level datum at q={} has neither filtration nor exponent", self.q))),
        }
    }
}

/// N = prod q^{n_q}, kept factored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub factors: BTreeMap<u64, u64>,
}

impl Level {
    pub fn value(&self) -> BigInt {
        self.factors.iter().fold(BigInt::one(), |acc, (&q, &e)| acc * num_traits::pow(BigInt::from(q), e as usize))
    }

    pub fn is_divisible_by(&self, m: u64) -> bool {
        (self.value() % BigInt::from(m)).is_zero()
    }

    pub fn from_factors(factors: &[(u64, u64)]) -> Self {
        Level { factors: factors.iter().copied().filter(|&(_, e)| e > 0).collect() }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|(q, e)| if *e == 1 { q.to_string() } else { format!("{q}^{e}") })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl Serialize for Level {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let factors: BTreeMap<String, u64> = self.factors.iter().map(|(q, e)| (q.to_string(), *e)).collect();
        let mut st = s.serialize_struct("Level", 3)?;
        st.serialize_field("factored", &self.to_string())?;
        st.serialize_field("value", &self.value().to_string())?;
        st.serialize_field("exponents", &factors)?;
        st.end()
    }
}

/// Combine local data into the level. Each q must be a prime other than p
/// and appear once.
pub fn level(data: &[LevelDatum], p: u64) -> Result<Level> {
    let mut factors = BTreeMap::new();
    for d in data {
        require_prime(d.q)?;
        if d.q == p {
            return Err(Error::LevelAtP(d.q));
        }
        if factors.contains_key(&d.q) {
            return Err(Error::DuplicatePrime(d.q));
        }
        factors.insert(d.q, d.exponent()?);
    }
    factors.retain(|_, e| *e > 0);
    Ok(Level { factors })
}

/// Orders of G_0, G_1, ... up to the last nontrivial group, from the
/// distances ord_L(sigma(pi) - pi) over sigma != 1 of a totally ramified
/// Galois extension of degree n = e.
pub fn filtration_from_distances(distances: &[u64], e: u64, n: u64) -> Result<Vec<u64>> {
    let bad = |m: String| Err(Error::InconsistentRamification(m));
    if e != n {
        return bad(format!("extension must be totally ramified (e = {e}, n = {n})"));
    }
    if distances.len() as u64 != n - 1 {
        return bad(format!("expected {} distances, got {}", n - 1, distances.len()));
    }
    if distances.contains(&0) {
        return bad("distances are at least 1".into());
    }
    let mut orders = Vec::new();
    for i in 0.. {
        let order = 1 + distances.iter().filter(|&&d| d > i).count() as u64;
        if order == 1 {
            break;
        }
        orders.push(order);
    }
    Ok(orders)
}

/// Solve embeddings * factors * (nu + offset) = disc_mult * d * e for nu.
pub fn solve_break_equation(embeddings: u64, factors: u64, offset: u64, disc_mult: u64, d: u64, e: u64) -> Result<u64> {
    if [embeddings, factors, disc_mult, d, e].contains(&0) {
        return Err(Error::InconsistentRamification("inputs must be positive".into()));
    }
    let lhs = embeddings * factors;
    let rhs = disc_mult * d * e;
    if rhs % lhs != 0 {
        return Err(Error::InconsistentRamification(format!("{rhs}/{lhs} is not an integer")));
    }
    (rhs / lhs)
        .checked_sub(offset)
        .ok_or_else(|| Error::InconsistentRamification(format!("{rhs}/{lhs} is below the offset {offset}")))
}

/// Sufficient condition for a local lift: no local image has order
/// divisible by 9. `false` means inconclusive.
pub fn lifting_obstruction_vanishes(local_group_orders: &[u64]) -> bool {
    local_group_orders.iter().all(|o| o % 9 != 0)
}

/// Group actions on a 3-dimensional space whose fixed subspaces feed the
/// level formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StandardAction {
    /// diag(+-1, +-1, +-1) with determinant 1.
    V4Diagonal,
    /// Cyclic permutation of the coordinates.
    Order3Permutation,
    /// diag(1, -1, -1).
    DiagOneMinusMinus,
    /// diag(-1, 1, 1).
    DiagMinusOneOne,
}

impl StandardAction {
    pub fn generators(self) -> Vec<[[i64; 3]; 3]> {
        match self {
            StandardAction::V4Diagonal => vec![
                [[1, 0, 0], [0, -1, 0], [0, 0, -1]],
                [[-1, 0, 0], [0, 1, 0], [0, 0, -1]],
            ],
            StandardAction::Order3Permutation => vec![[[0, 0, 1], [1, 0, 0], [0, 1, 0]]],
            StandardAction::DiagOneMinusMinus => vec![[[1, 0, 0], [0, -1, 0], [0, 0, -1]]],
            StandardAction::DiagMinusOneOne => vec![[[-1, 0, 0], [0, 1, 0], [0, 0, 1]]],
        }
    }

    /// Dimension of the common fixed space, i.e. 3 - rank of the stacked
    /// matrices g - I (computed over Q; valid in odd characteristic).
    pub fn fixed_dim(self) -> u32 {
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for g in self.generators() {
            for (i, row) in g.iter().enumerate() {
                rows.push(
                    (0..3)
                        .map(|j| BigRational::from_integer(BigInt::from(row[j] - i64::from(i == j))))
                        .collect(),
                );
            }
        }
        3 - rank(rows) as u32
    }
}

fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] / &m[r][c];
                for j in c..cols {
                    let t = &factor * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    r
}
