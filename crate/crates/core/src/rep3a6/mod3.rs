//! The mod-3 representation: A6 is PSL2(F9), and the symmetric square of
//! the standard representation of SL2(F9) factors through it.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use super::{CoarseClassA6, Fine5};
use crate::arith::{fp2_make, Fp2, Fp2Field, Fp2Poly};
use crate::error::{Error, Result};

pub type Mat2 = [[Fp2; 2]; 2];
pub type Mat3 = [[Fp2; 3]; 3];

/// Action of m on the basis (x^2, xy, y^2) of Sym^2.
pub fn sym_square(m: &Mat2) -> Mat3 {
    let [[a, b], [c, d]] = *m;
    // x -> a x + c y, y -> b x + d y (columns are images of basis vectors).
    [
        [a * a, a * b, b * b],
        [2 * (a * c), a * d + b * c, 2 * (b * d)],
        [c * c, c * d, d * d],
    ]
}

/// det(1 - t m) for a 3x3 matrix.
pub fn charpoly3(m: &Mat3) -> Fp2Poly {
    let f = m[0][0].field();
    let tr = m[0][0] + m[1][1] + m[2][2];
    let minor = |i: usize, j: usize| m[i][i] * m[j][j] - m[i][j] * m[j][i];
    let e2 = minor(0, 1) + minor(0, 2) + minor(1, 2);
    let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Fp2Poly::new(f, vec![f.one(), -tr, e2, -det])
}

/// det(1 - t Sym^2(m)) for m in SL2.
pub fn sym_square_charpoly(m: &Mat2) -> Result<Fp2Poly> {
    let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if det != det.field().one() {
        return Err(Error::DeterminantNotOne);
    }
    Ok(charpoly3(&sym_square(m)))
}

fn mat_mul(x: &Mat2, y: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn is_scalar_pm1(m: &Mat2) -> bool {
    let f = m[0][0].field();
    m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1] && (m[0][0] == f.one() || m[0][0] == -f.one())
}

/// All 720 elements of SL2(F9), in the canonical model F_3[w]/(w^2+1).
pub fn sl2_elements() -> Vec<Mat2> {
    let f = fp2_make(3).expect("3 is prime");
    let els: Vec<Fp2> = f.elements().collect();
    let mut out = Vec::with_capacity(720);
    for &a in &els {
        for &b in &els {
            for &c in &els {
                for &d in &els {
                    if a * d - b * c == f.one() {
                        out.push([[a, b], [c, d]]);
                    }
                }
            }
        }
    }
    out
}

/// Classes of A6 = PSL2(F9) distinguished by the mod-3 characteristic
/// polynomial. The two order-3 classes share one polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Mod3Class {
    #[serde(rename = "1a")]
    C1a,
    #[serde(rename = "2a")]
    C2a,
    #[serde(rename = "3ab")]
    C3ab,
    #[serde(rename = "4a")]
    C4a,
    #[serde(rename = "5a")]
    C5a,
    #[serde(rename = "5b")]
    C5b,
}

impl fmt::Display for Mod3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mod3Class::C1a => "1a",
            Mod3Class::C2a => "2a",
            Mod3Class::C3ab => "3ab",
            Mod3Class::C4a => "4a",
            Mod3Class::C5a => "5a",
            Mod3Class::C5b => "5b",
        })
    }
}

/// Class of g in PSL2(F9). The two classes of order 5 are told apart by
/// the trace of the order-5 lift, a root of x^2 + x - 1; 5a takes the
/// first root in (c0, c1) order.
pub fn mod3_class(g: &Mat2) -> Mod3Class {
    let f = g[0][0].field();
    let mut acc = *g;
    let mut order = 1;
    while !is_scalar_pm1(&acc) {
        acc = mat_mul(&acc, g);
        order += 1;
    }
    match order {
        1 => Mod3Class::C1a,
        2 => Mod3Class::C2a,
        3 => Mod3Class::C3ab,
        4 => Mod3Class::C4a,
        5 => {
            // acc = g^5 = +-I; the order-5 lift is g or -g.
            let tr = g[0][0] + g[1][1];
            let tr = if acc[0][0] == f.one() { tr } else { -tr };
            let first = f
                .elements()
                .find(|&x| x * x + x - f.one() == f.zero())
                .expect("x^2+x-1 splits in F_9");
            if tr == first {
                Mod3Class::C5a
            } else {
                Mod3Class::C5b
            }
        }
        o => unreachable!("PSL2(F9) has no elements of order {o}"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Mod3Tables {
    pub field: Fp2Field,
    /// det(1 - t rho(g)) per class.
    pub table: BTreeMap<Mod3Class, Fp2Poly>,
    /// The same for the Frobenius-conjugate representation, computed from
    /// Sym^2 of the conjugated matrices.
    pub conjugate: BTreeMap<Mod3Class, Fp2Poly>,
}

impl Mod3Tables {
    /// Polynomials compatible with a coarse class; two for 5ab when the
    /// fine class is unknown.
    pub fn candidates(&self, cls: CoarseClassA6, conjugate: bool) -> Vec<Fp2Poly> {
        let t = if conjugate { &self.conjugate } else { &self.table };
        let keys: &[Mod3Class] = match cls {
            CoarseClassA6::C1a => &[Mod3Class::C1a],
            CoarseClassA6::C2a => &[Mod3Class::C2a],
            CoarseClassA6::C3ab(_) => &[Mod3Class::C3ab],
            CoarseClassA6::C4a => &[Mod3Class::C4a],
            CoarseClassA6::C5ab(Fine5::A) => &[Mod3Class::C5a],
            CoarseClassA6::C5ab(Fine5::B) => &[Mod3Class::C5b],
            CoarseClassA6::C5ab(Fine5::Unknown) => &[Mod3Class::C5a, Mod3Class::C5b],
        };
        keys.iter().map(|k| t[k].clone()).collect()
    }
}

fn build_tables() -> Mod3Tables {
    let field = fp2_make(3).expect("3 is prime");
    let mut table: BTreeMap<Mod3Class, Fp2Poly> = BTreeMap::new();
    let mut conjugate: BTreeMap<Mod3Class, Fp2Poly> = BTreeMap::new();
    for g in sl2_elements() {
        let cls = mod3_class(&g);
        let poly = sym_square_charpoly(&g).expect("SL2 element");
        let gbar = g.map(|row| row.map(Fp2::frobenius));
        let cpoly = sym_square_charpoly(&gbar).expect("SL2 element");
        for (t, p) in [(&mut table, poly), (&mut conjugate, cpoly)] {
            let prev = t.entry(cls).or_insert_with(|| p.clone());
            assert_eq!(*prev, p, "charpoly is not a class function on {cls}");
        }
    }
    Mod3Tables { field, table, conjugate }
}

/// The class tables of the mod-3 representation and its conjugate, built
/// once by enumerating SL2(F9).
pub fn a6_mod3_class_polys() -> &'static Mod3Tables {
    static TABLES: OnceLock<Mod3Tables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}
