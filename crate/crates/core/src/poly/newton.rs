use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::IntPoly;
use crate::arith::{ord_p_int_finite, rat_string, require_prime};
use crate::error::{Error, Result};

/// One edge of a Newton polygon: `multiplicity` roots of valuation `slope`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub slope: BigRational,
    pub multiplicity: usize,
}

impl Serialize for Segment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Segment", 2)?;
        st.serialize_field("slope", &rat_string(&self.slope))?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

/// Lower convex hull of the points (i, ord_p(coefficient of x^{n-i})).
/// Slopes are root valuations, strictly increasing. Roots at zero (trailing
/// zero coefficients) are counted separately as infinite slope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    pub p: u64,
    pub degree: usize,
    pub segments: Vec<Segment>,
    pub infinite_multiplicity: usize,
    /// ord_p of the leading coefficient; the first vertex is (0, this).
    pub leading_valuation: u64,
}

impl NewtonPolygon {
    /// Largest finite slope, if any.
    pub fn max_finite_slope(&self) -> Option<&BigRational> {
        self.segments.last().map(|s| &s.slope)
    }

    /// Vertices of the finite part of the hull.
    pub fn vertices(&self) -> Vec<(usize, BigRational)> {
        let mut x = 0usize;
        let mut y = BigRational::from_integer(BigInt::from(self.leading_valuation));
        let mut out = vec![(x, y.clone())];
        for s in &self.segments {
            x += s.multiplicity;
            y += &s.slope * BigRational::from_integer(BigInt::from(s.multiplicity));
            out.push((x, y.clone()));
        }
        out
    }

    /// Slopes expanded with multiplicity, ascending.
    pub fn slope_multiset(&self) -> Vec<BigRational> {
        self.segments
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.slope.clone(), s.multiplicity))
            .collect()
    }

    pub fn is_single_slope(&self) -> bool {
        self.segments.len() == 1 && self.infinite_multiplicity == 0
    }
}

impl Serialize for NewtonPolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let vertices: Vec<(usize, String)> =
            self.vertices().into_iter().map(|(x, y)| (x, rat_string(&y))).collect();
        let mut st = s.serialize_struct("NewtonPolygon", 5)?;
        st.serialize_field("p", &self.p)?;
        st.serialize_field("degree", &self.degree)?;
        st.serialize_field("segments", &self.segments)?;
        st.serialize_field("infinite_multiplicity", &self.infinite_multiplicity)?;
        st.serialize_field("vertices", &vertices)?;
        st.end()
    }
}

pub fn newton_polygon(f: &IntPoly, p: u64) -> Result<NewtonPolygon> {
    require_prime(p)?;
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    let zeros = f.coeffs().iter().take_while(|c| c.is_zero()).count();
    // Points (i, v) for the coefficient of x^{n-i}, i = 0..=n-zeros.
    let pts: Vec<(i64, i64)> = (0..=n - zeros)
        .filter_map(|i| {
            let c = &f.coeffs()[n - i];
            (!c.is_zero()).then(|| (i as i64, ord_p_int_finite(c, p) as i64))
        })
        .collect();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            // Drop b unless it lies strictly below the segment a..pt.
            let cross = (b.0 - a.0) as i128 * (pt.1 - a.1) as i128
                - (b.1 - a.1) as i128 * (pt.0 - a.0) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    let segments = hull
        .windows(2)
        .map(|w| Segment {
            slope: BigRational::new(BigInt::from(w[1].1 - w[0].1), BigInt::from(w[1].0 - w[0].0)),
            multiplicity: (w[1].0 - w[0].0) as usize,
        })
        .collect();
    Ok(NewtonPolygon {
        p,
        degree: n,
        segments,
        infinite_multiplicity: zeros,
        leading_valuation: pts[0].1 as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::root_diff_poly;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn eisenstein_polygons() {
        let np = newton_polygon(&poly(&[-2, 0, 0, 1]), 2).unwrap();
        assert_eq!(np.segments, vec![Segment { slope: rat(1, 3), multiplicity: 3 }]);
        let np = newton_polygon(&poly(&[-14, 36, -20, 0, 1]), 2).unwrap();
        assert_eq!(np.segments, vec![Segment { slope: rat(1, 4), multiplicity: 4 }]);
    }

    #[test]
    fn two_slopes() {
        let np = newton_polygon(&poly(&[8, -6, 1]), 2).unwrap();
        assert_eq!(np.slope_multiset(), vec![rat(1, 1), rat(2, 1)]);
        assert_eq!(np.vertices(), vec![(0, rat(0, 1)), (1, rat(1, 1)), (2, rat(3, 1))]);
    }

    #[test]
    fn zero_roots_are_infinite_slope() {
        let np = newton_polygon(&poly(&[0, 0, 2, 1]), 2).unwrap();
        assert_eq!(np.infinite_multiplicity, 2);
        assert_eq!(np.slope_multiset(), vec![rat(1, 1)]);
        let np = newton_polygon(&poly(&[0, 0, 1]), 3).unwrap();
        assert!(np.segments.is_empty());
        assert_eq!(np.infinite_multiplicity, 2);
    }

    #[test]
    fn non_monic_leading_valuation() {
        // 4x^2 + 1 at 2: roots have valuation -1.
        let np = newton_polygon(&poly(&[1, 0, 4]), 2).unwrap();
        assert_eq!(np.leading_valuation, 2);
        assert_eq!(np.slope_multiset(), vec![rat(-1, 1), rat(-1, 1)]);
    }

    #[test]
    fn root_difference_polygons() {
        let np = newton_polygon(&root_diff_poly(&poly(&[-2, 0, 1])).unwrap(), 2).unwrap();
        assert_eq!(np.segments, vec![Segment { slope: rat(3, 2), multiplicity: 2 }]);
        let np = newton_polygon(&root_diff_poly(&poly(&[-2, 0, 0, 1])).unwrap(), 2).unwrap();
        assert_eq!(np.max_finite_slope(), Some(&rat(1, 3)));
        assert_eq!(np.slope_multiset().len(), 6);
    }

    #[test]
    fn rejects_zero_and_composite_p() {
        assert!(newton_polygon(&IntPoly::zero(), 2).is_err());
        assert!(newton_polygon(&poly(&[1, 1]), 4).is_err());
    }

    /// Brute-force oracle: the polygon's lower boundary at each integer x is
    /// the min over pairs of hull interpolation, and every point lies on or
    /// above it.
    fn below_all_points(f: &IntPoly, p: u64, np: &NewtonPolygon) -> bool {
        let n = f.degree().unwrap();
        let verts = np.vertices();
        let height = |x: usize| -> Option<BigRational> {
            verts.windows(2).find(|w| w[0].0 <= x && x <= w[1].0).map(|w| {
                let t = BigRational::new(BigInt::from(x - w[0].0), BigInt::from(w[1].0 - w[0].0));
                &w[0].1 + (&w[1].1 - &w[0].1) * t
            })
        };
        (0..=n - np.infinite_multiplicity).all(|i| {
            let c = &f.coeffs()[n - i];
            c.is_zero()
                || height(i).is_none_or(|h| BigRational::from_integer(BigInt::from(ord_p_int_finite(c, p))) >= h)
        })
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-30i64..=30, 2..=5)
                .prop_map(|c| IntPoly::from_i64s(&c))
                .prop_filter("degree >= 1", |f| f.degree().unwrap_or(0) >= 1)
        }

        proptest! {
            #[test]
            fn product_slopes_are_multiset_union(f in small_poly(), g in small_poly(), pi in 0usize..3) {
                let p = [2u64, 3, 5][pi];
                let (nf, ng) = (newton_polygon(&f, p).unwrap(), newton_polygon(&g, p).unwrap());
                let nfg = newton_polygon(&(&f * &g), p).unwrap();
                let mut union = nf.slope_multiset();
                union.extend(ng.slope_multiset());
                union.sort();
                prop_assert_eq!(nfg.slope_multiset(), union);
                prop_assert_eq!(nfg.infinite_multiplicity, nf.infinite_multiplicity + ng.infinite_multiplicity);
            }

            #[test]
            fn hull_lies_below_points(f in small_poly(), pi in 0usize..3) {
                let p = [2u64, 3, 5][pi];
                let np = newton_polygon(&f, p).unwrap();
                prop_assert!(below_all_points(&f, p, &np));
                let total: usize = np.segments.iter().map(|s| s.multiplicity).sum();
                prop_assert_eq!(total + np.infinite_multiplicity, f.degree().unwrap());
                for w in np.segments.windows(2) {
                    prop_assert!(w[0].slope < w[1].slope);
                }
            }

            #[test]
            fn root_difference_multiplicities_are_even(c in prop::collection::vec(-8i64..=8, 2..=3), pi in 0usize..3) {
                let p = [2u64, 3, 5][pi];
                let mut coeffs = c;
                coeffs.push(1);
                let f = IntPoly::from_i64s(&coeffs);
                prop_assume!(!crate::poly::discriminant(&f).unwrap().is_zero());
                let np = newton_polygon(&root_diff_poly(&f).unwrap(), p).unwrap();
                for s in &np.segments {
                    prop_assert_eq!(s.multiplicity % 2, 0);
                }
            }
        }
    }
}
