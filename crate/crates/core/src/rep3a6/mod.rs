//! Coarse conjugacy classes of A6 and its triple cover 3.A6, the mod-5
//! character of the 3-dimensional representation, and Frobenius
//! characteristic polynomials.
//!
//! Classes are labelled as in the usual ATLAS/GAP tables. For an element g
//! of A6 of order prime to 3 there is a unique lift g' of the same order,
//! and the other lifts are c g' and c^2 g' for a fixed central generator c
//! with X(c) = 3z.

mod mod3;

pub use mod3::{
    a6_mod3_class_polys, charpoly3, mod3_class, sl2_elements, sym_square, sym_square_charpoly, Mat2, Mat3, Mod3Class, Mod3Tables,
};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{cube_root_of_unity, fp2_make, Fp2, Fp2Poly};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Order3Kind {
    ThreeCycle,
    DoubleThreeCycle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Fine5 {
    #[serde(rename = "5a")]
    A,
    #[serde(rename = "5b")]
    B,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoarseClassA6 {
    C1a,
    C2a,
    C3ab(Option<Order3Kind>),
    C4a,
    C5ab(Fine5),
}

impl CoarseClassA6 {
    pub fn label(&self) -> &'static str {
        match self {
            CoarseClassA6::C1a => "1a",
            CoarseClassA6::C2a => "2a",
            CoarseClassA6::C3ab(_) => "3ab",
            CoarseClassA6::C4a => "4a",
            CoarseClassA6::C5ab(_) => "5ab",
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            CoarseClassA6::C1a => 1,
            CoarseClassA6::C2a => 2,
            CoarseClassA6::C3ab(_) => 3,
            CoarseClassA6::C4a => 4,
            CoarseClassA6::C5ab(_) => 5,
        }
    }
}

impl fmt::Display for CoarseClassA6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoarseClassA6::C3ab(Some(Order3Kind::ThreeCycle)) => f.write_str("3ab(3-cycle)"),
            CoarseClassA6::C3ab(Some(Order3Kind::DoubleThreeCycle)) => f.write_str("3ab(double-3-cycle)"),
            CoarseClassA6::C5ab(Fine5::A) => f.write_str("5ab(5a)"),
            CoarseClassA6::C5ab(Fine5::B) => f.write_str("5ab(5b)"),
            _ => f.write_str(self.label()),
        }
    }
}

impl Serialize for CoarseClassA6 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Coarse classes of 3.A6, in table order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoarseClass3A6 {
    C1a,
    C3a,
    C3b,
    C2a,
    C6a,
    C6b,
    C3cd,
    C4a,
    C12a,
    C12b,
    C5ab,
    C15ac,
    C15bd,
}

use CoarseClass3A6 as C;

impl CoarseClass3A6 {
    pub const ALL: [CoarseClass3A6; 13] =
        [C::C1a, C::C3a, C::C3b, C::C2a, C::C6a, C::C6b, C::C3cd, C::C4a, C::C12a, C::C12b, C::C5ab, C::C15ac, C::C15bd];

    pub fn label(&self) -> &'static str {
        match self {
            C::C1a => "1a",
            C::C3a => "3a",
            C::C3b => "3b",
            C::C2a => "2a",
            C::C6a => "6a",
            C::C6b => "6b",
            C::C3cd => "3cd",
            C::C4a => "4a",
            C::C12a => "12a",
            C::C12b => "12b",
            C::C5ab => "5ab",
            C::C15ac => "15ac",
            C::C15bd => "15bd",
        }
    }

    pub fn order(&self) -> u32 {
        match self {
            C::C1a => 1,
            C::C2a => 2,
            C::C4a => 4,
            C::C5ab => 5,
            C::C3a | C::C3b | C::C3cd => 3,
            C::C6a | C::C6b => 6,
            C::C12a | C::C12b => 12,
            C::C15ac | C::C15bd => 15,
        }
    }

    /// X on this class as (integer, power of z): X = integer * z^power.
    fn value_parts(&self) -> (i64, u32) {
        match self {
            C::C1a => (3, 0),
            C::C3a => (3, 1),
            C::C3b => (3, 2),
            C::C2a => (-1, 0),
            C::C6a => (-1, 1),
            C::C6b => (-1, 2),
            C::C3cd => (0, 0),
            C::C4a => (1, 0),
            C::C12a => (1, 1),
            C::C12b => (1, 2),
            C::C5ab => (-2, 0),
            C::C15ac => (-2, 1),
            C::C15bd => (-2, 2),
        }
    }
}

impl fmt::Display for CoarseClass3A6 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for CoarseClass3A6 {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CoarseClass3A6::ALL
            .into_iter()
            .find(|c| c.label() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown 3.A6 class {s:?}")))
    }
}

impl Serialize for CoarseClass3A6 {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for CoarseClass3A6 {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Coarse A6 class of a permutation with the given cycle type.
pub fn coarse_from_cycle_type(partition: &[u32]) -> Result<CoarseClassA6> {
    if partition.contains(&0) || partition.iter().sum::<u32>() != 6 {
        return Err(Error::InvalidCycleType(partition.to_vec()));
    }
    let mut parts: Vec<u32> = partition.iter().copied().filter(|&x| x > 1).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    if parts.iter().map(|&x| x - 1).sum::<u32>() % 2 == 1 {
        return Err(Error::NotInA6(partition.to_vec()));
    }
    Ok(match parts[..] {
        [] => CoarseClassA6::C1a,
        [2, 2] => CoarseClassA6::C2a,
        [3] => CoarseClassA6::C3ab(Some(Order3Kind::ThreeCycle)),
        [3, 3] => CoarseClassA6::C3ab(Some(Order3Kind::DoubleThreeCycle)),
        [4, 2] => CoarseClassA6::C4a,
        [5] => CoarseClassA6::C5ab(Fine5::Unknown),
        _ => unreachable!("all even cycle types of degree 6 are listed"),
    })
}

/// The lift c^i g' of an A6 class of order prime to 3.
pub fn central_twist(base: CoarseClassA6, i: i64) -> Result<CoarseClass3A6> {
    let i = i.rem_euclid(3);
    let row = match base {
        CoarseClassA6::C1a => [C::C1a, C::C3a, C::C3b],
        CoarseClassA6::C2a => [C::C2a, C::C6a, C::C6b],
        CoarseClassA6::C4a => [C::C4a, C::C12a, C::C12b],
        CoarseClassA6::C5ab(_) => [C::C5ab, C::C15ac, C::C15bd],
        CoarseClassA6::C3ab(_) => return Err(Error::UseOrder3Rule(base.to_string())),
    };
    Ok(row[i as usize])
}

/// Coarse class of Frob_ell in 3.A6 from its cycle type on the roots of
/// the sextic, the Artin symbol power (P, K~/K) = c^artin_power, and the
/// residue degree f of P.
pub fn frobenius_class(cycle_type: &[u32], artin_power: i64, residue_degree: u32) -> Result<CoarseClass3A6> {
    let base = coarse_from_cycle_type(cycle_type)?;
    if residue_degree != base.order() {
        return Err(Error::ResidueDegree { residue_degree, order: base.order() });
    }
    if base.order() == 3 {
        return Ok(C::C3cd);
    }
    central_twist(base, artin_power * i64::from(residue_degree))
}

/// The model of F_25 and the cube root of unity z used for the table.
pub fn table_z() -> Fp2 {
    cube_root_of_unity(5).expect("F_25 has cube roots of unity")
}

/// X(cls) in F_25.
pub fn char_value(cls: CoarseClass3A6) -> Fp2 {
    let (k, e) = cls.value_parts();
    k * table_z().pow(u128::from(e))
}

/// Class of g^{-1}.
pub fn inverse_class(cls: CoarseClass3A6) -> CoarseClass3A6 {
    match cls {
        C::C3a => C::C3b,
        C::C3b => C::C3a,
        C::C6a => C::C6b,
        C::C6b => C::C6a,
        C::C12a => C::C12b,
        C::C12b => C::C12a,
        C::C15ac => C::C15bd,
        C::C15bd => C::C15ac,
        other => other,
    }
}

/// det(1 - eps rho(g) t) = 1 - eps X(g) t + eps^2 X(g^{-1}) t^2 - eps^3 t^3
/// over F_25.
pub fn frob_charpoly(cls: CoarseClass3A6, eps: i8) -> Result<Fp2Poly> {
    if eps != 1 && eps != -1 {
        return Err(Error::Schema(format!("eps must be +1 or -1, got {eps}")));
    }
    let field = fp2_make(5)?;
    let e = i64::from(eps);
    Ok(Fp2Poly::new(
        field,
        vec![
            field.one(),
            -(e * char_value(cls)),
            (e * e) * char_value(inverse_class(cls)),
            field.from_int(-(e * e * e)),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_types() {
        assert_eq!(coarse_from_cycle_type(&[5, 1]).unwrap(), CoarseClassA6::C5ab(Fine5::Unknown));
        assert_eq!(coarse_from_cycle_type(&[2, 2, 1, 1]).unwrap(), CoarseClassA6::C2a);
        assert_eq!(coarse_from_cycle_type(&[1; 6]).unwrap(), CoarseClassA6::C1a);
        assert_eq!(coarse_from_cycle_type(&[4, 2]).unwrap(), CoarseClassA6::C4a);
        assert_eq!(
            coarse_from_cycle_type(&[3, 3]).unwrap(),
            CoarseClassA6::C3ab(Some(Order3Kind::DoubleThreeCycle))
        );
        assert!(matches!(coarse_from_cycle_type(&[4, 1, 1]), Err(Error::NotInA6(_))));
        assert!(matches!(coarse_from_cycle_type(&[6]), Err(Error::NotInA6(_))));
        assert!(matches!(coarse_from_cycle_type(&[5]), Err(Error::InvalidCycleType(_))));
    }

    #[test]
    fn twists() {
        assert_eq!(central_twist(CoarseClassA6::C5ab(Fine5::Unknown), 2).unwrap(), C::C15bd);
        assert_eq!(central_twist(CoarseClassA6::C1a, 1).unwrap(), C::C3a);
        assert_eq!(central_twist(CoarseClassA6::C4a, 1).unwrap(), C::C12a);
        assert_eq!(central_twist(CoarseClassA6::C2a, -1).unwrap(), C::C6b);
        assert!(matches!(central_twist(CoarseClassA6::C3ab(None), 0), Err(Error::UseOrder3Rule(_))));
    }

    #[test]
    fn frobenius_classes() {
        assert_eq!(frobenius_class(&[5, 1], 1, 5).unwrap(), C::C15bd);
        assert_eq!(frobenius_class(&[3, 3], 2, 3).unwrap(), C::C3cd);
        assert_eq!(frobenius_class(&[1; 6], 0, 1).unwrap(), C::C1a);
        assert!(matches!(frobenius_class(&[5, 1], 1, 4), Err(Error::ResidueDegree { .. })));
        for ct in [&[1u32, 1, 1, 1, 1, 1][..], &[2, 2, 1, 1], &[3, 1, 1, 1], &[3, 3], &[4, 2], &[5, 1]] {
            let f = coarse_from_cycle_type(ct).unwrap().order();
            let c = frobenius_class(ct, 0, f).unwrap();
            assert!([C::C1a, C::C2a, C::C4a, C::C5ab, C::C3cd].contains(&c));
        }
    }

    #[test]
    fn table_values() {
        let z = table_z();
        let f = z.field();
        assert_eq!(z * z + z + f.one(), f.zero());
        let zp = z.frobenius();
        assert_eq!(zp, z * z);
        assert_eq!(char_value(C::C15bd), -2 * zp);
        assert_eq!(char_value(C::C3cd), f.zero());
        assert_eq!(char_value(C::C3b), 3 * zp);
        assert_eq!(inverse_class(C::C15bd), C::C15ac);
        for c in CoarseClass3A6::ALL {
            assert_eq!(inverse_class(inverse_class(c)), c);
            assert_eq!(char_value(inverse_class(c)), char_value(c).frobenius());
            assert_eq!(c.label().parse::<CoarseClass3A6>().unwrap(), c);
            assert_eq!(inverse_class(c).order(), c.order());
        }
    }

    #[test]
    fn charpolys() {
        let z = table_z();
        let f = z.field();
        let p = frob_charpoly(C::C15bd, 1).unwrap();
        assert_eq!(p.coeffs(), &[f.one(), 2 * z.frobenius(), 3 * z, f.from_int(-1)]);
        assert_eq!(frob_charpoly(C::C1a, 1).unwrap(), Fp2Poly::from_ints(f, &[1, -3, 3, -1]));
        assert_eq!(frob_charpoly(C::C2a, -1).unwrap(), Fp2Poly::from_ints(f, &[1, -1, -1, 1]));
        assert!(frob_charpoly(C::C1a, 2).is_err());
    }

    /// t^3 p(1/t) = -eps^3 * conj(p)(t): the reversed polynomial is the
    /// conjugate up to the leading sign.
    #[test]
    fn reciprocal_symmetry() {
        for c in CoarseClass3A6::ALL {
            for eps in [1i8, -1] {
                let p = frob_charpoly(c, eps).unwrap();
                let f = p.field();
                let rev: Vec<Fp2> = (0..4).map(|i| p.coeff(3 - i)).collect();
                let scale = f.from_int(-i64::from(eps).pow(3));
                let conj: Vec<Fp2> = (0..4).map(|i| scale * p.conj().coeff(i)).collect();
                assert_eq!(rev, conj, "{c} eps={eps}");
            }
        }
    }
}
