//! A 3-dimensional matrix model of 3.A6 over F_25, built by closure from
//! explicit generators. Used as an oracle independent of the printed class
//! table: labels come from element orders and central parts only.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};

use padic_serre::arith::{fp2_make, Fp2, Fp2Field, Fp2Poly};
use padic_serre::rep3a6::{central_twist, charpoly3, table_z, CoarseClass3A6, CoarseClassA6, Fine5, Mat3};

pub fn mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let z = a[0][0].field().zero();
    let mut out = [[z; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).fold(z, |acc, k| acc + a[i][k] * b[k][j]);
        }
    }
    out
}

pub fn scalar(f: Fp2Field, s: Fp2) -> Mat3 {
    let z = f.zero();
    [[s, z, z], [z, s, z], [z, z, s]]
}

pub fn is_scalar(m: &Mat3) -> bool {
    (0..3).all(|i| (0..3).all(|j| if i == j { m[i][i] == m[0][0] } else { m[i][j].is_zero() }))
}

pub fn from_ints(f: Fp2Field, rows: [[i64; 3]; 3]) -> Mat3 {
    rows.map(|r| r.map(|v| f.from_int(v)))
}

/// Generators: an order-3 permutation matrix, a diagonal sign matrix, an
/// element of order 5 and a monomial element involving z.
pub fn generators() -> Vec<Mat3> {
    let f = fp2_make(5).unwrap();
    let z = table_z();
    let o = f.zero();
    let one = f.one();
    vec![
        from_ints(f, [[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        from_ints(f, [[1, 0, 0], [0, -1, 0], [0, 0, -1]]),
        from_ints(f, [[3, 1, 4], [1, 4, 2], [1, 3, 1]]),
        [[one, o, o], [o, o, z], [o, -(z * z), o]],
    ]
}

pub fn closure(gens: &[Mat3], cap: usize) -> Vec<Mat3> {
    let f = gens[0][0][0].field();
    let id = scalar(f, f.one());
    let mut seen: HashSet<Mat3> = HashSet::from([id]);
    let mut out = vec![id];
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for h in gens {
            let gh = mul(&g, h);
            if seen.insert(gh) {
                out.push(gh);
                queue.push_back(gh);
                if out.len() > cap {
                    return out;
                }
            }
        }
    }
    out
}

pub fn group() -> Vec<Mat3> {
    closure(&generators(), 5000)
}

fn pow(m: &Mat3, k: u32) -> Mat3 {
    let f = m[0][0].field();
    (0..k).fold(scalar(f, f.one()), |acc, _| mul(&acc, m))
}

/// Order of the image in A6 = group / center.
pub fn projective_order(m: &Mat3) -> u32 {
    (1..=60).find(|&k| is_scalar(&pow(m, k))).expect("finite order")
}

pub fn order(m: &Mat3) -> u32 {
    let f = m[0][0].field();
    let id = scalar(f, f.one());
    (1..=60).find(|&k| pow(m, k) == id).expect("finite order")
}

/// Coarse class of g from group data alone: g = c^i g' with c = zI and g'
/// the lift of the same order as the image, or 3cd when the image has order 3.
pub fn label(m: &Mat3) -> CoarseClass3A6 {
    let f = m[0][0].field();
    let z = table_z();
    let o = projective_order(m);
    let base = match o {
        1 => CoarseClassA6::C1a,
        2 => CoarseClassA6::C2a,
        3 => return CoarseClass3A6::C3cd,
        4 => CoarseClassA6::C4a,
        5 => CoarseClassA6::C5ab(Fine5::Unknown),
        _ => panic!("no element of projective order {o} in A6"),
    };
    let i = (0..3u32)
        .find(|&i| {
            let zi_inv = scalar(f, z.pow(u128::from(3 - i) % 3));
            pow(&mul(&zi_inv, m), o) == scalar(f, f.one())
        })
        .expect("some central translate has the image's order");
    central_twist(base, i64::from(i)).unwrap()
}

pub fn trace(m: &Mat3) -> Fp2 {
    m[0][0] + m[1][1] + m[2][2]
}

/// det(1 - eps m t).
pub fn charpoly(m: &Mat3, eps: i64) -> Fp2Poly {
    let f = m[0][0].field();
    charpoly3(m).scale_variable(f.from_int(eps))
}

pub fn inverse(m: &Mat3, group: &[Mat3]) -> Mat3 {
    let f = m[0][0].field();
    let id = scalar(f, f.one());
    *group.iter().find(|h| mul(m, h) == id).expect("group is closed under inverses")
}

/// Class representatives with the inverse of each.
pub fn classes_with_inverses(group: &[Mat3]) -> HashMap<CoarseClass3A6, Vec<(Mat3, Mat3)>> {
    let mut out: HashMap<CoarseClass3A6, Vec<(Mat3, Mat3)>> = HashMap::new();
    for g in group {
        out.entry(label(g)).or_default().push((*g, inverse(g, group)));
    }
    out
}

pub mod sample {
    use num_bigint::BigInt;
    use padic_serre::krasner::{validate_evidence, Evidence};
    use padic_serre::error::Input;
    use padic_serre::poly::IntPoly;
    use rand::Rng;

    /// A monic polynomial with validated irreducibility evidence over Q_p,
    /// of degree 2..=max_deg. Mixes shifted Eisenstein polynomials with
    /// small random ones that pass one of the concrete tests.
    pub fn irreducible<R: Rng>(rng: &mut R, p: u64, max_deg: usize) -> (IntPoly, Evidence) {
        let pi = p as i64;
        loop {
            let n = rng.gen_range(2..=max_deg);
            let f = if rng.gen_bool(0.6) {
                let mut c: Vec<i64> = (0..n).map(|_| pi * rng.gen_range(-4..=4)).collect();
                let mut u = rng.gen_range(-6..=6);
                while u % pi == 0 {
                    u = rng.gen_range(-6..=6);
                }
                c[0] = pi * u;
                c.push(1);
                IntPoly::from_i64s(&c).shift(&BigInt::from(rng.gen_range(-(pi - 1)..=(pi - 1))))
            } else {
                let mut c: Vec<i64> = (0..n).map(|_| rng.gen_range(-30..=30)).collect();
                c.push(1);
                IntPoly::from_i64s(&c)
            };
            if f.coeff(0) == BigInt::from(0) {
                continue;
            }
            if let Ok(ev) = validate_evidence(&f, p, &Evidence::Auto, Input::F) {
                return (f, ev);
            }
        }
    }

    /// Random integer polynomial of degree < n.
    pub fn lower<R: Rng>(rng: &mut R, n: usize, bound: i64) -> IntPoly {
        IntPoly::from_i64s(&(0..n).map(|_| rng.gen_range(-bound..=bound)).collect::<Vec<_>>())
    }
}
