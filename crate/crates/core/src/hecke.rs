//! Hecke polynomials of eigenvalue systems and the attachment check
//! against characteristic polynomials of Frobenius.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::arith::{Fp2, Fp2Field, Fp2Poly};
use crate::error::{Error, Result};

/// Eigenvalues a_{ell,1}, a_{ell,2}, a_{ell,3}; a_{ell,0} = 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EigenvalueRecord {
    pub ell: u64,
    pub a: [Fp2; 3],
}

/// The JSON form `{"ell": 7, "a": [[c0, c1], [c0, c1], [c0, c1]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawEigenvalueRecord {
    pub ell: u64,
    pub a: [[i64; 2]; 3],
}

impl RawEigenvalueRecord {
    pub fn resolve(&self, field: Fp2Field) -> EigenvalueRecord {
        EigenvalueRecord { ell: self.ell, a: self.a.map(|[c0, c1]| field.elem(c0, c1)) }
    }
}

impl EigenvalueRecord {
    pub fn conj(&self) -> EigenvalueRecord {
        EigenvalueRecord { ell: self.ell, a: self.a.map(Fp2::frobenius) }
    }
}

/// 1 - a1 t + ell a2 t^2 - ell^3 a3 t^3.
pub fn hecke_poly(rec: &EigenvalueRecord) -> Result<Fp2Poly> {
    let field = rec.a[0].field();
    let p = field.p();
    if rec.ell % p == 0 {
        return Err(Error::Schema(format!("ell = {} must be prime to p = {p}", rec.ell)));
    }
    let l = field.from_int((rec.ell % p) as i64);
    let [a1, a2, a3] = rec.a;
    Ok(Fp2Poly::new(field, vec![field.one(), -a1, l * a2, -(l * l * l * a3)]))
}

/// Records whose Hecke polynomials are the given cubics. Each cubic must
/// have constant term 1 and degree at most 3.
pub fn solve_records(polys: &BTreeMap<u64, Fp2Poly>) -> Result<Vec<EigenvalueRecord>> {
    polys
        .iter()
        .map(|(&ell, poly)| {
            let field = poly.field();
            if poly.coeff(0) != field.one() || poly.degree().unwrap_or(0) > 3 {
                return Err(Error::Schema(format!("polynomial at ell = {ell} is not 1 + O(t) of degree <= 3")));
            }
            let l = field.from_int((ell % field.p()) as i64);
            let linv = l.inv().ok_or_else(|| Error::Schema(format!("ell = {ell} divides p")))?;
            let a = [-poly.coeff(1), poly.coeff(2) * linv, -(poly.coeff(3) * linv * linv * linv)];
            Ok(EigenvalueRecord { ell, a })
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EllStatus {
    Match,
    ConjugateMatch,
    Mismatch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    Attached,
    AttachedUpToConjugacy,
    NotAttached,
}

#[derive(Clone, Debug, Serialize)]
pub struct EllReport {
    pub ell: u64,
    pub status: EllStatus,
    /// True when the Hecke polynomial equals the conjugate of a candidate;
    /// can hold together with `Match` for F_p-rational polynomials.
    pub conjugate_matches: bool,
    /// Set when the Frobenius datum has two candidates (5a or 5b unknown):
    /// the two sides are then either equal or conjugate over F_p.
    pub indeterminate: bool,
    pub hecke_poly: Fp2Poly,
    pub candidates: Vec<Fp2Poly>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AttachmentVerdict {
    pub per_ell: Vec<EllReport>,
    pub overall: Overall,
}

impl AttachmentVerdict {
    pub fn mismatches(&self) -> Vec<u64> {
        self.per_ell.iter().filter(|r| r.status == EllStatus::Mismatch).map(|r| r.ell).collect()
    }
}

/// Compare each record's Hecke polynomial with the Frobenius candidates at
/// the same ell.
pub fn check_attached(
    records: &[EigenvalueRecord],
    frob_polys: &BTreeMap<u64, Vec<Fp2Poly>>,
) -> Result<AttachmentVerdict> {
    let mut per_ell = Vec::with_capacity(records.len());
    for rec in records {
        let candidates = frob_polys.get(&rec.ell).filter(|c| !c.is_empty()).ok_or(Error::MissingEll(rec.ell))?;
        let h = hecke_poly(rec)?;
        let direct = candidates.iter().any(|c| *c == h);
        let conjugate_matches = candidates.iter().any(|c| c.conj() == h);
        let status = if direct {
            EllStatus::Match
        } else if conjugate_matches {
            EllStatus::ConjugateMatch
        } else {
            EllStatus::Mismatch
        };
        per_ell.push(EllReport {
            ell: rec.ell,
            status,
            conjugate_matches,
            indeterminate: candidates.len() > 1,
            hecke_poly: h,
            candidates: candidates.clone(),
        });
    }
    let overall = if per_ell.iter().all(|r| r.status == EllStatus::Match) {
        Overall::Attached
    } else if per_ell.iter().all(|r| r.conjugate_matches) {
        Overall::AttachedUpToConjugacy
    } else {
        Overall::NotAttached
    };
    Ok(AttachmentVerdict { per_ell, overall })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::fp2_make;
    use crate::rep3a6::{frob_charpoly, CoarseClass3A6};

    fn single(m: BTreeMap<u64, Fp2Poly>) -> BTreeMap<u64, Vec<Fp2Poly>> {
        m.into_iter().map(|(k, v)| (k, vec![v])).collect()
    }

    #[test]
    fn trivial_record() {
        let f = fp2_make(5).unwrap();
        for ell in [2u64, 3, 7, 11] {
            let l = f.from_int(ell as i64);
            let linv = l.inv().unwrap();
            let rec = EigenvalueRecord { ell, a: [f.from_int(3), 3 * linv, linv * linv * linv] };
            assert_eq!(hecke_poly(&rec).unwrap(), Fp2Poly::from_ints(f, &[1, -3, 3, -1]));
        }
        let rec = EigenvalueRecord { ell: 5, a: [f.one(); 3] };
        assert!(hecke_poly(&rec).is_err());
    }

    #[test]
    fn exponents_of_ell() {
        let f = fp2_make(5).unwrap();
        let w = f.gen();
        let rec = EigenvalueRecord { ell: 7, a: [w, w + f.one(), 2 * w] };
        let h = hecke_poly(&rec).unwrap();
        assert_eq!(h.coeff(1), -w);
        assert_eq!(h.coeff(2), 7 * (w + f.one()));
        assert_eq!(h.coeff(3), -(343 * (2 * w)));
    }

    #[test]
    fn verdicts() {
        let classes = [(2u64, CoarseClass3A6::C15bd), (3, CoarseClass3A6::C3cd), (7, CoarseClass3A6::C12a)];
        let polys: BTreeMap<u64, Fp2Poly> =
            classes.iter().map(|&(l, c)| (l, frob_charpoly(c, 1).unwrap())).collect();
        let recs = solve_records(&polys).unwrap();
        let target = single(polys.clone());
        let v = check_attached(&recs, &target).unwrap();
        assert_eq!(v.overall, Overall::Attached);

        let conj: Vec<_> = recs.iter().map(EigenvalueRecord::conj).collect();
        let v = check_attached(&conj, &target).unwrap();
        assert_eq!(v.overall, Overall::AttachedUpToConjugacy);
        // 3cd has an F_5-rational polynomial, so it matches both ways.
        assert_eq!(v.per_ell[1].status, EllStatus::Match);

        let mut bad = recs.clone();
        bad[2].a[0] = bad[2].a[0] + bad[2].a[0].field().one();
        let v = check_attached(&bad, &target).unwrap();
        assert_eq!(v.overall, Overall::NotAttached);
        assert_eq!(v.mismatches(), vec![7]);

        let mut missing = target.clone();
        missing.remove(&3);
        assert!(matches!(check_attached(&recs, &missing), Err(Error::MissingEll(3))));
    }

    #[test]
    fn two_candidates() {
        let f = fp2_make(5).unwrap();
        let a = frob_charpoly(CoarseClass3A6::C15ac, 1).unwrap();
        let b = frob_charpoly(CoarseClass3A6::C15bd, 1).unwrap();
        let recs = solve_records(&[(2u64, b.clone())].into_iter().collect()).unwrap();
        let v = check_attached(&recs, &[(2u64, vec![a, b])].into_iter().collect()).unwrap();
        assert_eq!(v.overall, Overall::Attached);
        assert!(v.per_ell[0].indeterminate);
        assert!(solve_records(&[(2u64, Fp2Poly::from_ints(f, &[2, 1]))].into_iter().collect()).is_err());
    }

    #[test]
    fn raw_json() {
        let f = fp2_make(5).unwrap();
        let raw: RawEigenvalueRecord = serde_json::from_str(r#"{"ell":7,"a":[[1,2],[0,0],[4,-1]]}"#).unwrap();
        let rec = raw.resolve(f);
        assert_eq!(rec.a[2], f.elem(4, 4));
        assert_eq!(serde_json::to_string(&rec).unwrap(), r#"{"ell":7,"a":[[1,2],[0,0],[4,4]]}"#);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn elem(f: Fp2Field) -> impl Strategy<Value = Fp2> {
            (0..f.p() as i64, 0..f.p() as i64).prop_map(move |(a, b)| f.elem(a, b))
        }

        fn system(p: u64) -> impl Strategy<Value = Vec<EigenvalueRecord>> {
            let f = fp2_make(p).unwrap();
            let ells: Vec<u64> = crate::arith::primes_up_to(47).into_iter().filter(|&l| l != p).collect();
            let n = ells.len();
            prop::collection::vec([elem(f), elem(f), elem(f)], n).prop_map(move |v| {
                ells.iter().zip(v).map(|(&ell, a)| EigenvalueRecord { ell, a }).collect()
            })
        }

        proptest! {
            #[test]
            fn linear_in_a2(recs in system(5), d in elem(fp2_make(5).unwrap())) {
                let rec = &recs[0];
                let mut moved = rec.clone();
                moved.a[1] = moved.a[1] + d;
                let (h0, h1) = (hecke_poly(rec).unwrap(), hecke_poly(&moved).unwrap());
                let l = d.field().from_int(rec.ell as i64);
                prop_assert_eq!(h1.coeff(2) - h0.coeff(2), l * d);
                for k in [0, 1, 3] {
                    prop_assert_eq!(h1.coeff(k), h0.coeff(k));
                }
            }

            #[test]
            fn conjugation_equivariance(recs in system(3), other in system(3)) {
                let polys: BTreeMap<u64, Vec<Fp2Poly>> =
                    other.iter().map(|r| (r.ell, vec![hecke_poly(r).unwrap()])).collect();
                let cpolys: BTreeMap<u64, Vec<Fp2Poly>> =
                    polys.iter().map(|(&l, v)| (l, v.iter().map(Fp2Poly::conj).collect())).collect();
                let crecs: Vec<_> = recs.iter().map(EigenvalueRecord::conj).collect();
                let a = check_attached(&recs, &polys).unwrap();
                let b = check_attached(&crecs, &cpolys).unwrap();
                prop_assert_eq!(a.overall, b.overall);
                let sa: Vec<_> = a.per_ell.iter().map(|r| r.status).collect();
                let sb: Vec<_> = b.per_ell.iter().map(|r| r.status).collect();
                prop_assert_eq!(sa, sb);
            }

            #[test]
            fn round_trip(recs in system(5)) {
                let polys: BTreeMap<u64, Fp2Poly> = recs.iter().map(|r| (r.ell, hecke_poly(r).unwrap())).collect();
                let solved = solve_records(&polys).unwrap();
                prop_assert_eq!(&solved, &recs);
                prop_assert_eq!(check_attached(&solved, &single(polys)).unwrap().overall, Overall::Attached);
            }
        }
    }
}
