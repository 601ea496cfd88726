//! Root separation and "same extension of Q_p" certificates.
//!
//! Everything is in additive valuations: for monic f = x^n + a_1 x^{n-1} +
//! ... + a_n with d = ord_p disc f, a = ord_p a_n and
//! lambda = max_{i != j} ord_p(alpha_i - alpha_j):
//!
//! * lambda <= (d - (n-2)a)/n;
//! * the published precision k is the least integer with
//!   k > lambda + (d - a)/n, or with k > (2d - (n-1)a)/n.
//!
//! The published precision bounds the non-constant coefficients only. The
//! constant-term difference b_n - a_n enters ord_p g(alpha) without the
//! factor alpha, so on its own it must exceed lambda + d/n. For x^2 - 2 at 2
//! the published bound is k = 3, yet x^2 - 10 is congruent mod 8 and
//! generates a different field. [`certify_same_extension`] therefore uses
//! the weighted margin min_i (ord_p(b_i - a_i) + (n-i)a/n) > lambda + d/n,
//! and [`PrecisionReport`] carries both precisions.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::arith::{mod_u64, ord_p_int, ord_p_int_finite, rat_string, require_prime, strict_ceiling, Valuation};
use crate::error::{Error, Input, Result};
use crate::poly::{cycle_type_mod_ell, discriminant, newton_polygon, resultant, root_diff_poly, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Prop1,
    Prop1bis,
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prop1" => Ok(Method::Prop1),
            "prop1bis" => Ok(Method::Prop1bis),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

fn rat(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Degree, ord_p disc and ord_p a_n of a monic separable f of degree >= 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
    pub d: u64,
    pub a: u64,
}

pub fn invariants(f: &IntPoly, p: u64) -> Result<Invariants> {
    require_prime(p)?;
    f.require_monic()?;
    let n = f.deg()?;
    if n < 2 {
        return Err(Error::Degree { found: n, reason: "need degree >= 2" });
    }
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let disc = discriminant(f)?;
    if disc.is_zero() {
        return Err(Error::NotSquarefree);
    }
    Ok(Invariants { n, d: ord_p_int_finite(&disc, p), a: ord_p_int_finite(&f.coeff(0), p) })
}

/// lambda as the largest finite slope of the Newton polygon of the
/// root-difference polynomial.
pub fn lambda_exact(f: &IntPoly, p: u64) -> Result<BigRational> {
    require_prime(p)?;
    let diff = root_diff_poly(f)?;
    let np = newton_polygon(&diff, p)?;
    Ok(np.max_finite_slope().cloned().expect("separable polynomial has finite root differences"))
}

/// (d - (n-2)a)/n.
pub fn lambda_upper_bound(f: &IntPoly, p: u64) -> Result<BigRational> {
    let Invariants { n, d, a } = invariants(f, p)?;
    Ok(rat(BigInt::from(d) - BigInt::from((n - 2) as u64 * a), n))
}

/// The bound that k must strictly exceed under each method.
fn published_bound(inv: &Invariants, lambda: Option<&BigRational>, method: Method) -> Option<BigRational> {
    let Invariants { n, d, a } = *inv;
    match method {
        Method::Prop1 => lambda.map(|l| l + rat(BigInt::from(d) - BigInt::from(a), n)),
        Method::Prop1bis => Some(rat(BigInt::from(2 * d) - BigInt::from((n - 1) as u64 * a), n)),
    }
}

/// lambda + d/n, or (2d - (n-2)a)/n with lambda replaced by its upper
/// bound: what the weighted coefficient margin must strictly exceed.
fn certify_threshold(inv: &Invariants, lambda: Option<&BigRational>, method: Method) -> Option<BigRational> {
    let Invariants { n, d, a } = *inv;
    match method {
        Method::Prop1 => lambda.map(|l| l + rat(d, n)),
        Method::Prop1bis => Some(rat(BigInt::from(2 * d) - BigInt::from((n - 2) as u64 * a), n)),
    }
}

/// Published precision: least integer k with k > lambda + (d-a)/n (prop1)
/// or k > (2d - (n-1)a)/n (prop1bis).
pub fn precision_k(f: &IntPoly, p: u64, method: Method) -> Result<BigInt> {
    let inv = invariants(f, p)?;
    let lambda = match method {
        Method::Prop1 => Some(lambda_exact(f, p)?),
        Method::Prop1bis => None,
    };
    Ok(strict_ceiling(&published_bound(&inv, lambda.as_ref(), method).unwrap()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrecisionReport {
    pub p: u64,
    pub n: usize,
    pub d: u64,
    pub a: u64,
    pub lambda: Option<BigRational>,
    pub lambda_upper_bound: BigRational,
    pub bound_prop1: Option<BigRational>,
    pub bound_prop1bis: BigRational,
    pub k_prop1: Option<BigInt>,
    pub k_prop1bis: BigInt,
    /// Precision needed on the constant term alone.
    pub k_constant_prop1: Option<BigInt>,
    pub k_constant_prop1bis: BigInt,
    pub method_used: Method,
}

impl PrecisionReport {
    /// k for the requested method.
    pub fn k(&self) -> Option<&BigInt> {
        match self.method_used {
            Method::Prop1 => self.k_prop1.as_ref(),
            Method::Prop1bis => Some(&self.k_prop1bis),
        }
    }

    pub fn k_constant(&self) -> Option<&BigInt> {
        match self.method_used {
            Method::Prop1 => self.k_constant_prop1.as_ref(),
            Method::Prop1bis => Some(&self.k_constant_prop1bis),
        }
    }
}

/// Computes lambda only for `Method::Prop1`.
pub fn precision_report(f: &IntPoly, p: u64, method: Method) -> Result<PrecisionReport> {
    let inv = invariants(f, p)?;
    let lambda = match method {
        Method::Prop1 => Some(lambda_exact(f, p)?),
        Method::Prop1bis => None,
    };
    let bound_prop1 = published_bound(&inv, lambda.as_ref(), Method::Prop1);
    let bound_prop1bis = published_bound(&inv, None, Method::Prop1bis).unwrap();
    let k_const_1 = certify_threshold(&inv, lambda.as_ref(), Method::Prop1).map(|t| strict_ceiling(&t));
    let k_const_bis = strict_ceiling(&certify_threshold(&inv, None, Method::Prop1bis).unwrap());
    Ok(PrecisionReport {
        p,
        n: inv.n,
        d: inv.d,
        a: inv.a,
        lambda_upper_bound: lambda_upper_bound(f, p)?,
        k_prop1: bound_prop1.as_ref().map(strict_ceiling),
        k_prop1bis: strict_ceiling(&bound_prop1bis),
        lambda,
        bound_prop1,
        bound_prop1bis,
        k_constant_prop1: k_const_1,
        k_constant_prop1bis: k_const_bis,
        method_used: method,
    })
}

fn opt_rat(r: &Option<BigRational>) -> String {
    r.as_ref().map(rat_string).unwrap_or_else(|| "not computed".into())
}

fn opt_int(k: &Option<BigInt>) -> String {
    k.as_ref().map(ToString::to_string).unwrap_or_else(|| "unavailable".into())
}

impl Serialize for PrecisionReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PrecisionReport", 15)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("n", &self.n.to_string())?;
        st.serialize_field("d", &self.d.to_string())?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("lambda", &opt_rat(&self.lambda))?;
        st.serialize_field("lambda_upper_bound", &rat_string(&self.lambda_upper_bound))?;
        st.serialize_field("bound_prop1", &opt_rat(&self.bound_prop1))?;
        st.serialize_field("bound_prop1bis", &rat_string(&self.bound_prop1bis))?;
        st.serialize_field("k_prop1", &opt_int(&self.k_prop1))?;
        st.serialize_field("k_prop1bis", &self.k_prop1bis.to_string())?;
        st.serialize_field("k_constant_prop1", &opt_int(&self.k_constant_prop1))?;
        st.serialize_field("k_constant_prop1bis", &self.k_constant_prop1bis.to_string())?;
        st.serialize_field("method_used", &self.method_used)?;
        st.serialize_field(
            "note",
            "additive valuations ord_p with |x| = p^(-ord_p x); k bounds the non-constant \
             coefficients, k_constant the constant term",
        )?;
        st.end()
    }
}

/// ord_p(Res(f,g))/n against the published right-hand side
/// a/n + min_i ord_p(b_i - a_i) and the corrected
/// min_i (ord_p(b_i - a_i) + (n-i)a/n).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResultantMargin {
    pub lhs: Valuation,
    pub rhs: Valuation,
    pub rhs_corrected: Valuation,
}

impl ResultantMargin {
    pub fn holds(&self) -> bool {
        self.lhs >= self.rhs
    }

    pub fn holds_corrected(&self) -> bool {
        self.lhs >= self.rhs_corrected
    }
}

fn same_degree_monic(f: &IntPoly, g: &IntPoly) -> Result<usize> {
    f.require_monic()?;
    g.require_monic()?;
    let n = f.deg()?;
    if g.deg()? != n {
        return Err(Error::Degree { found: g.deg()?, reason: "f and g must have equal degree" });
    }
    Ok(n)
}

/// min_i (ord_p(b_i - a_i) + (n-i) * shift), i = 1..n, where b_i - a_i is
/// the coefficient of x^{n-i} in g - f.
fn weighted_min(f: &IntPoly, g: &IntPoly, p: u64, shift: &BigRational) -> Valuation {
    let n = f.degree().unwrap();
    let diff = g - f;
    (1..=n)
        .map(|i| match ord_p_int(&diff.coeff(n - i), p) {
            Valuation::Finite(v) => Valuation::Finite(v + shift * int(BigInt::from(n - i))),
            Valuation::Infinite => Valuation::Infinite,
        })
        .min()
        .unwrap_or(Valuation::Infinite)
}

pub fn resultant_margin(f: &IntPoly, g: &IntPoly, p: u64) -> Result<ResultantMargin> {
    require_prime(p)?;
    let n = same_degree_monic(f, g)?;
    if f.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let a = ord_p_int_finite(&f.coeff(0), p);
    let alpha = rat(a, n);
    let lhs = ord_p_int(&resultant(f, g)?, p).div_int(n);
    let rhs = weighted_min(f, g, p, &BigRational::zero()) + Valuation::Finite(alpha.clone());
    let rhs_corrected = weighted_min(f, g, p, &alpha);
    Ok(ResultantMargin { lhs, rhs, rhs_corrected })
}

/// Irreducibility evidence over Q_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Evidence {
    /// Try each of the concrete checks below.
    Auto,
    /// f(x + a) is Eisenstein at p.
    EisensteinShift(i64),
    /// f is irreducible modulo q; only q = p says anything about Q_p.
    IrreducibleModP(u64),
    /// Newton polygon is one segment whose slope has denominator n.
    SingleSlopePolygon,
    /// Taken on trust; flagged in the certificate.
    CallerAssertion,
}

impl fmt::Display for Evidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evidence::Auto => f.write_str("auto"),
            Evidence::EisensteinShift(a) => write!(f, "eisenstein-after-shift({a})"),
            Evidence::IrreducibleModP(q) => write!(f, "irreducible-mod-q({q})"),
            Evidence::SingleSlopePolygon => f.write_str("single-slope-polygon"),
            Evidence::CallerAssertion => f.write_str("caller-assertion"),
        }
    }
}

impl std::str::FromStr for Evidence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown evidence {s:?}"));
        let arg = |prefix: &str| -> Option<&str> { s.strip_prefix(prefix)?.strip_suffix(')') };
        Ok(match s {
            "auto" => Evidence::Auto,
            "single-slope-polygon" | "single-slope" => Evidence::SingleSlopePolygon,
            "caller-assertion" | "assert" => Evidence::CallerAssertion,
            _ => {
                if let Some(a) = arg("eisenstein-after-shift(").or_else(|| arg("eisenstein(")) {
                    Evidence::EisensteinShift(a.trim().parse().map_err(|_| bad())?)
                } else if let Some(q) = arg("irreducible-mod-q(").or_else(|| arg("irreducible-mod(")) {
                    Evidence::IrreducibleModP(q.trim().parse().map_err(|_| bad())?)
                } else {
                    return Err(bad());
                }
            }
        })
    }
}

fn single_slope_denominator_n(f: &IntPoly, p: u64) -> Result<bool> {
    let np = newton_polygon(f, p)?;
    let n = BigInt::from(f.deg()?);
    Ok(np.is_single_slope() && np.segments[0].slope.denom() == &n)
}

fn irreducible_mod_p(f: &IntPoly, p: u64) -> bool {
    let n = f.degree().unwrap_or(0) as u32;
    matches!(cycle_type_mod_ell(f, p), Ok(parts) if parts == [n])
}

/// Checks the evidence and returns the concrete evidence that succeeded.
pub fn validate_evidence(f: &IntPoly, p: u64, ev: &Evidence, input: Input) -> Result<Evidence> {
    let fail = |reason: String| Error::Evidence { input, reason };
    match ev {
        Evidence::EisensteinShift(a) => {
            if f.shift(&BigInt::from(*a)).is_eisenstein(p) {
                Ok(ev.clone())
            } else {
                Err(fail(format!("{input}(x + {a}) is not Eisenstein at {p}")))
            }
        }
        Evidence::IrreducibleModP(q) => {
            if *q != p {
                Err(fail(format!("irreducibility mod {q} says nothing over Q_{p}")))
            } else if irreducible_mod_p(f, p) {
                Ok(ev.clone())
            } else {
                Err(fail(format!("{input} is not irreducible mod {p}")))
            }
        }
        Evidence::SingleSlopePolygon => {
            if single_slope_denominator_n(f, p)? {
                Ok(ev.clone())
            } else {
                Err(fail(format!("Newton polygon of {input} is not one slope with denominator n")))
            }
        }
        Evidence::CallerAssertion => Ok(ev.clone()),
        Evidence::Auto => {
            if irreducible_mod_p(f, p) {
                return Ok(Evidence::IrreducibleModP(p));
            }
            if single_slope_denominator_n(f, p)? {
                return Ok(Evidence::SingleSlopePolygon);
            }
            for a in 0..p as i64 {
                for s in [a, -a] {
                    if f.shift(&BigInt::from(s)).is_eisenstein(p) {
                        return Ok(Evidence::EisensteinShift(s));
                    }
                }
            }
            Err(fail(format!("{input} fails every irreducibility test over Q_{p}")))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub p: u64,
    pub method: Method,
    pub evidence_f: Evidence,
    pub evidence_g: Evidence,
    pub caller_asserted: bool,
    /// min_i ord_p(b_i - a_i).
    pub congruence: Valuation,
    /// min_i (ord_p(b_i - a_i) + (n-i)a/n).
    pub weighted_margin: Valuation,
    pub threshold: BigRational,
    /// Published k for the method, and whether congruence >= k.
    pub published_k: BigInt,
    pub published_condition_met: bool,
}

impl Serialize for Certificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("Certificate", 11)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("p", &self.p.to_string())?;
        st.serialize_field("method", &self.method)?;
        st.serialize_field("evidence_f", &self.evidence_f.to_string())?;
        st.serialize_field("evidence_g", &self.evidence_g.to_string())?;
        st.serialize_field("caller_asserted", &self.caller_asserted)?;
        st.serialize_field("congruence", &self.congruence)?;
        st.serialize_field("weighted_margin", &self.weighted_margin)?;
        st.serialize_field("threshold", &rat_string(&self.threshold))?;
        st.serialize_field("published_k", &self.published_k.to_string())?;
        st.serialize_field("published_condition_met", &self.published_condition_met)?;
        st.end()
    }
}

/// Certified when both irreducibility evidences validate and the weighted
/// margin strictly exceeds the threshold; otherwise inconclusive. Never
/// claims the extensions differ.
pub fn certify_same_extension(
    f: &IntPoly,
    g: &IntPoly,
    p: u64,
    evidence_f: &Evidence,
    evidence_g: &Evidence,
    method: Method,
) -> Result<Certificate> {
    require_prime(p)?;
    let n = same_degree_monic(f, g)?;
    let inv = invariants(f, p)?;
    let evidence_f = validate_evidence(f, p, evidence_f, Input::F)?;
    let evidence_g = validate_evidence(g, p, evidence_g, Input::G)?;
    let lambda = match method {
        Method::Prop1 => Some(lambda_exact(f, p)?),
        Method::Prop1bis => None,
    };
    let threshold = certify_threshold(&inv, lambda.as_ref(), method).unwrap();
    let published_k = strict_ceiling(&published_bound(&inv, lambda.as_ref(), method).unwrap());
    let congruence = weighted_min(f, g, p, &BigRational::zero());
    let weighted_margin = weighted_min(f, g, p, &rat(inv.a, n));
    let certified = weighted_margin > Valuation::Finite(threshold.clone());
    let published_condition_met = congruence >= Valuation::Finite(int(published_k.clone()));
    let caller_asserted =
        evidence_f == Evidence::CallerAssertion || evidence_g == Evidence::CallerAssertion;
    Ok(Certificate {
        verdict: if certified { Verdict::Certified } else { Verdict::Inconclusive },
        p,
        method,
        evidence_f,
        evidence_g,
        caller_asserted,
        congruence,
        weighted_margin,
        threshold,
        published_k,
        published_condition_met,
    })
}

/// True if x is a nonzero square in Q_p (x rational with p-integral parts).
/// Used by tests as an independent oracle for quadratic extensions.
pub fn is_square_in_qp(x: &BigRational, p: u64) -> bool {
    if x.is_zero() {
        return false;
    }
    let (num, den) = (x.numer(), x.denom());
    let v = ord_p_int_finite(num, p) as i64 - ord_p_int_finite(den, p) as i64;
    if v % 2 != 0 {
        return false;
    }
    let pb = BigInt::from(p);
    let strip = |z: &BigInt| {
        let mut z = z.clone();
        while (&z % &pb).is_zero() {
            z /= &pb;
        }
        z
    };
    // Unit u = num'/den'; u is a square iff num'*den' is.
    let u = strip(num) * strip(den);
    if p == 2 {
        mod_u64(&u, 8) == 1
    } else {
        let r = mod_u64(&u, p);
        (1..p).any(|t| t * t % p == r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn cube_root_of_two_at_two() {
        let f = poly(&[-2, 0, 0, 1]);
        let r = precision_report(&f, 2, Method::Prop1bis).unwrap();
        assert_eq!((r.n, r.d, r.a), (3, 2, 1));
        assert_eq!(r.bound_prop1bis, rat(2, 3));
        assert_eq!(r.k_prop1bis, BigInt::from(1));
        assert_eq!(r.lambda, None);
        assert_eq!(lambda_exact(&f, 2).unwrap(), rat(1, 3));
        assert_eq!(lambda_upper_bound(&f, 2).unwrap(), rat(1, 3));
        assert_eq!(precision_k(&f, 2, Method::Prop1).unwrap(), BigInt::from(1));
        let r1 = precision_report(&f, 2, Method::Prop1).unwrap();
        assert_eq!(r1.bound_prop1, Some(rat(2, 3)));
        // lambda + d/n = 1/3 + 2/3 = 1, so the constant term needs p^2.
        assert_eq!(r1.k_constant_prop1, Some(BigInt::from(2)));
    }

    #[test]
    fn sqrt_two_at_two() {
        let f = poly(&[-2, 0, 1]);
        assert_eq!(lambda_exact(&f, 2).unwrap(), rat(3, 2));
        assert_eq!(lambda_upper_bound(&f, 2).unwrap(), rat(3, 2));
        assert_eq!(precision_k(&f, 2, Method::Prop1bis).unwrap(), BigInt::from(3));
    }

    #[test]
    fn strict_inequality_at_integer_bound() {
        // x^2 - 3 at 2: d = 2, a = 0, (2d - a)/n = 2 exactly, so k = 3.
        let f = poly(&[-3, 0, 1]);
        assert_eq!(precision_k(&f, 2, Method::Prop1bis).unwrap(), BigInt::from(3));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(precision_k(&poly(&[-2, 0, 2]), 2, Method::Prop1bis), Err(Error::NotMonic)));
        assert!(matches!(lambda_exact(&poly(&[1, 2, 1]), 2), Err(Error::NotSquarefree)));
        assert!(matches!(precision_k(&poly(&[0, 1, 1]), 2, Method::Prop1bis), Err(Error::ZeroConstantTerm)));
        assert!("prop2".parse::<Method>().is_err());
    }

    #[test]
    fn caveat_pair_rejects_g() {
        let f = poly(&[-2, 0, 0, 1]);
        let g = poly(&[0, 0, 0, 1]);
        let err = certify_same_extension(&f, &g, 2, &Evidence::Auto, &Evidence::Auto, Method::Prop1bis)
            .unwrap_err();
        assert!(matches!(err, Error::Evidence { input: Input::G, .. }), "{err}");
    }

    #[test]
    fn certifies_eisenstein_neighbour() {
        let f = poly(&[-2, 0, 0, 1]);
        let g = poly(&[-2, 2, 0, 1]);
        let c = certify_same_extension(
            &f,
            &g,
            2,
            &Evidence::EisensteinShift(0),
            &Evidence::EisensteinShift(0),
            Method::Prop1,
        )
        .unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
        assert!(c.published_condition_met);
        assert_eq!(c.weighted_margin, Valuation::Finite(rat(4, 3)));
        assert_eq!(c.threshold, rat(1, 1));
        let same = certify_same_extension(&f, &f, 2, &Evidence::Auto, &Evidence::Auto, Method::Prop1bis)
            .unwrap();
        assert_eq!(same.verdict, Verdict::Certified);
    }

    #[test]
    fn published_precision_is_not_enough_for_the_constant_term() {
        // x^2 - 10 = x^2 - 2 mod 8 = 2^k, but 10/2 = 5 is not a square in Q_2.
        let f = poly(&[-2, 0, 1]);
        let g = poly(&[-10, 0, 1]);
        assert!(!is_square_in_qp(&rat(5, 1), 2));
        let c = certify_same_extension(&f, &g, 2, &Evidence::Auto, &Evidence::Auto, Method::Prop1bis)
            .unwrap();
        assert!(c.published_condition_met);
        assert_eq!(c.verdict, Verdict::Inconclusive);
    }

    #[test]
    fn under_precision_is_inconclusive() {
        // Agrees with x^3 - 2 only mod 2^0 in the x-coefficient.
        let f = poly(&[-2, 0, 0, 1]);
        let g = poly(&[-2, 1, 0, 1]);
        let c = certify_same_extension(&f, &g, 2, &Evidence::Auto, &Evidence::CallerAssertion, Method::Prop1bis)
            .unwrap();
        assert_eq!(c.verdict, Verdict::Inconclusive);
        assert!(c.caller_asserted);
    }

    #[test]
    fn evidence_checks() {
        let g = poly(&[3, 0, -14, 4, 1]);
        assert_eq!(
            validate_evidence(&g, 2, &Evidence::EisensteinShift(-1), Input::F).unwrap(),
            Evidence::EisensteinShift(-1)
        );
        assert!(validate_evidence(&g, 2, &Evidence::EisensteinShift(0), Input::F).is_err());
        let q = poly(&[1, 1, 1]);
        assert_eq!(validate_evidence(&q, 2, &Evidence::Auto, Input::G).unwrap(), Evidence::IrreducibleModP(2));
        assert!(validate_evidence(&q, 2, &Evidence::IrreducibleModP(5), Input::G).is_err());
        let g1 = poly(&[-5, 0, 0, 0, -5, 1]);
        assert!(validate_evidence(&g1, 5, &Evidence::SingleSlopePolygon, Input::F).is_ok());
        assert!(validate_evidence(&poly(&[8, -6, 1]), 2, &Evidence::SingleSlopePolygon, Input::F).is_err());
        // Slope 1/2 on a quartic: denominator 2 != 4.
        assert!(validate_evidence(&poly(&[4, 0, 0, 0, 1]), 2, &Evidence::SingleSlopePolygon, Input::F).is_err());
        assert!(validate_evidence(&poly(&[-5, 0, 0, 0, 0, 1]), 5, &Evidence::SingleSlopePolygon, Input::F).is_ok());
        assert_eq!("eisenstein-after-shift(-1)".parse::<Evidence>().unwrap(), Evidence::EisensteinShift(-1));
        assert_eq!("irreducible-mod-q(2)".parse::<Evidence>().unwrap(), Evidence::IrreducibleModP(2));
        assert!("eisenstein(x)".parse::<Evidence>().is_err());
    }

    #[test]
    fn resultant_margin_examples() {
        let f = poly(&[-2, 0, 0, 1]);
        let m = resultant_margin(&f, &f, 2).unwrap();
        assert!(m.lhs.is_infinite() && m.holds() && m.holds_corrected());
        // Perturbing only the constant term by 8: g(alpha) = 8, so
        // ord R / n = 3 while the published right-hand side is 3 + 1/3.
        let g = poly(&[6, 0, 0, 1]);
        let m = resultant_margin(&f, &g, 2).unwrap();
        assert_eq!(m.lhs, Valuation::Finite(rat(3, 1)));
        assert_eq!(m.rhs, Valuation::Finite(rat(10, 3)));
        assert!(!m.holds());
        assert!(m.holds_corrected());
        // Non-constant perturbation: 8x contributes 3 + 1/3.
        let g = poly(&[-2, 8, 0, 1]);
        let m = resultant_margin(&f, &g, 2).unwrap();
        assert!(m.holds() && m.holds_corrected());
        assert_eq!(m.lhs, Valuation::Finite(rat(10, 3)));
    }

    #[test]
    fn square_classes() {
        assert!(is_square_in_qp(&rat(17, 1), 2));
        assert!(!is_square_in_qp(&rat(3, 1), 2));
        assert!(is_square_in_qp(&rat(4, 9), 3));
        assert!(!is_square_in_qp(&rat(2, 1), 3));
        assert!(is_square_in_qp(&rat(7, 1), 3));
        assert!(!is_square_in_qp(&rat(12, 1), 3));
    }
}
