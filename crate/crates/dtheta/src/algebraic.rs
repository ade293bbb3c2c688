//! Real algebraic numbers with proved, not floated, equality.
//!
//! A number is a square-free primitive defining polynomial with positive
//! leading coefficient, together with either an exact rational point or an
//! open isolating interval containing exactly one of its roots. Rational
//! values are always normalized to point form.

use crate::poly::{parse_rational, rational_string, Polynomial, Rational};
use crate::roots::{isolate_real_roots, sturm_count, IsolatedRoot};
use num::{BigInt, Zero};
use serde_json::{json, Value};
use std::cmp::Ordering;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraicError {
    #[error("interval ({0}, {1}) does not isolate exactly one root (found {2})")]
    NotIsolating(String, String, usize),
    #[error("defining polynomial has no real root to isolate")]
    NoRealRoot,
    #[error("bad algebraic number JSON: {0}")]
    BadJson(String),
}

#[derive(Clone, Debug)]
enum Loc {
    Point(Rational),
    Interval(Rational, Rational),
}

/// A real algebraic number. Equality, ordering, and root-multiplicity queries
/// are exact; refinement only shrinks the isolating interval.
#[derive(Clone)]
pub struct AlgebraicNumber {
    defpoly: Polynomial,
    loc: Loc,
}

impl AlgebraicNumber {
    /// Exact rational value; the defining polynomial is q*x - p for p/q.
    pub fn from_rational(r: Rational) -> Self {
        AlgebraicNumber {
            defpoly: Polynomial::new(vec![-r.numer().clone(), r.denom().clone()]),
            loc: Loc::Point(r),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from(BigInt::from(n)))
    }

    /// All distinct real roots of p, in increasing order, sharing p's
    /// square-free part as their defining polynomial.
    pub fn roots_of(p: &Polynomial) -> Vec<Self> {
        let sf = p.squarefree_part();
        isolate_real_roots(p)
            .into_iter()
            .map(|r| match r {
                IsolatedRoot::Point(t) => AlgebraicNumber::from_rational(t),
                IsolatedRoot::Interval(lo, hi) => AlgebraicNumber {
                    defpoly: sf.clone(),
                    loc: Loc::Interval(lo, hi),
                },
            })
            .collect()
    }

    /// The unique root of p in the open interval (lo, hi). p need not be
    /// square-free; the interval must isolate exactly one distinct root.
    pub fn from_defpoly_interval(
        p: &Polynomial,
        lo: Rational,
        hi: Rational,
    ) -> Result<Self, AlgebraicError> {
        if p.is_zero() {
            return Err(AlgebraicError::BadJson("zero defining polynomial".into()));
        }
        if lo >= hi {
            return Err(AlgebraicError::NotIsolating(
                rational_string(&lo),
                rational_string(&hi),
                0,
            ));
        }
        let mut inside = vec![];
        for root in Self::roots_of(p) {
            let mut r = root;
            // Refine until the root's region is entirely inside or outside
            // (lo, hi); roots never equal interval endpoints forever since a
            // point either is or is not inside, and interval roots are
            // irrational while endpoints are rational.
            loop {
                let (a, b) = r.bounds();
                if (lo < a && b < hi) || matches!(&r.loc, Loc::Point(t) if lo < *t && *t < hi) {
                    inside.push(r);
                    break;
                }
                if b <= lo || hi <= a {
                    break;
                }
                if matches!(r.loc, Loc::Point(_)) {
                    break; // a point on the boundary is outside the open interval
                }
                r.refine();
            }
        }
        match inside.len() {
            1 => Ok(inside.pop().unwrap()),
            k => Err(AlgebraicError::NotIsolating(
                rational_string(&lo),
                rational_string(&hi),
                k,
            )),
        }
    }

    pub fn defpoly(&self) -> &Polynomial {
        &self.defpoly
    }

    /// Exact rational value, when the number is rational.
    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.loc {
            Loc::Point(r) => Some(r),
            Loc::Interval(_, _) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(&self.loc, Loc::Point(r) if r.is_zero())
    }

    /// Closed rational bounds enclosing the value.
    pub fn bounds(&self) -> (Rational, Rational) {
        match &self.loc {
            Loc::Point(r) => (r.clone(), r.clone()),
            Loc::Interval(lo, hi) => (lo.clone(), hi.clone()),
        }
    }

    /// Halves the isolating interval (no-op for exact points). If the
    /// midpoint turns out to be the root, the number collapses to point form.
    pub fn refine(&mut self) {
        let (lo, hi) = match &self.loc {
            Loc::Point(_) => return,
            Loc::Interval(lo, hi) => (lo.clone(), hi.clone()),
        };
        let mid = (&lo + &hi) / Rational::from(BigInt::from(2));
        let fm = self.defpoly.eval_rational(&mid);
        if fm.is_zero() {
            self.loc = Loc::Point(mid);
            return;
        }
        let flo = self.defpoly.eval_rational(&lo);
        // Exactly one simple root inside, so the sign flips across it.
        if (flo.is_zero() || flo < Rational::zero()) != (fm < Rational::zero()) {
            self.loc = Loc::Interval(lo, mid);
        } else {
            self.loc = Loc::Interval(mid, hi);
        }
    }

    /// The negated number: defining polynomial mirrored through x -> -x,
    /// interval mirrored, point negated.
    pub fn negate(&self) -> Self {
        let mirrored = Polynomial::new(
            self.defpoly
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
        .primitive_positive();
        let loc = match &self.loc {
            Loc::Point(r) => Loc::Point(-r),
            Loc::Interval(lo, hi) => Loc::Interval(-hi, -lo),
        };
        AlgebraicNumber {
            defpoly: mirrored,
            loc,
        }
    }

    /// Whether this number is a root of q. Exact: evaluation for point form,
    /// gcd plus a Sturm count for interval form.
    pub fn is_root_of(&self, q: &Polynomial) -> bool {
        if q.is_zero() {
            return true;
        }
        if q.degree() == Some(0) {
            return false;
        }
        match &self.loc {
            Loc::Point(r) => q.is_root(r),
            Loc::Interval(lo, hi) => {
                let g = q.gcd(&self.defpoly);
                if g.degree() == Some(0) {
                    return false;
                }
                // Roots of g inside the interval are roots of defpoly there,
                // of which the isolated root is the only one; the endpoints
                // are non-roots of defpoly and hence of g.
                sturm_count(&g, lo, hi) == 1
            }
        }
    }

    /// Multiplicity of this number as a root of p (0 when not a root).
    /// Panics on the zero polynomial.
    pub fn root_multiplicity(&self, p: &Polynomial) -> usize {
        assert!(!p.is_zero(), "root multiplicity in zero polynomial");
        for (factor, exp) in p.squarefree_decomposition() {
            if self.is_root_of(&factor) {
                return exp;
            }
        }
        0
    }

    /// Proved equality.
    pub fn equals(&self, other: &Self) -> bool {
        match (&self.loc, &other.loc) {
            (Loc::Point(a), Loc::Point(b)) => a == b,
            (Loc::Point(a), Loc::Interval(lo, hi)) => {
                lo < a && a < hi && other.defpoly.is_root(a)
            }
            (Loc::Interval(lo, hi), Loc::Point(b)) => {
                lo < b && b < hi && self.defpoly.is_root(b)
            }
            (Loc::Interval(alo, ahi), Loc::Interval(blo, bhi)) => {
                let g = self.defpoly.gcd(&other.defpoly);
                if g.degree() == Some(0) {
                    return false;
                }
                let lo = alo.max(blo);
                let hi = ahi.min(bhi);
                if lo >= hi {
                    return false;
                }
                sturm_count(&g, lo, hi) == 1
            }
        }
    }

    /// JSON form: {"defpoly": [c0, c1, ...], "point": "p/q"} or
    /// {"defpoly": [...], "interval": ["lo", "hi"]}.
    pub fn to_json(&self) -> Value {
        let defpoly = poly_to_json(&self.defpoly);
        match &self.loc {
            Loc::Point(r) => json!({"defpoly": defpoly, "point": rational_string(r)}),
            Loc::Interval(lo, hi) => json!({
                "defpoly": defpoly,
                "interval": [rational_string(lo), rational_string(hi)],
            }),
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraicError> {
        let obj = v
            .as_object()
            .ok_or_else(|| AlgebraicError::BadJson("expected object".into()))?;
        let defpoly = obj
            .get("defpoly")
            .ok_or_else(|| AlgebraicError::BadJson("missing defpoly".into()))?;
        let p = poly_from_json(defpoly).map_err(AlgebraicError::BadJson)?;
        if let Some(pt) = obj.get("point") {
            let s = pt
                .as_str()
                .ok_or_else(|| AlgebraicError::BadJson("point must be a string".into()))?;
            let r = parse_rational(s).map_err(AlgebraicError::BadJson)?;
            if !p.is_zero() && !p.is_root(&r) {
                return Err(AlgebraicError::BadJson(format!(
                    "{s} is not a root of the defining polynomial"
                )));
            }
            return Ok(AlgebraicNumber::from_rational(r));
        }
        if let Some(iv) = obj.get("interval") {
            let arr = iv
                .as_array()
                .filter(|a| a.len() == 2)
                .ok_or_else(|| AlgebraicError::BadJson("interval must be [lo, hi]".into()))?;
            let lo = arr[0]
                .as_str()
                .ok_or_else(|| AlgebraicError::BadJson("interval endpoints are strings".into()))
                .and_then(|s| parse_rational(s).map_err(AlgebraicError::BadJson))?;
            let hi = arr[1]
                .as_str()
                .ok_or_else(|| AlgebraicError::BadJson("interval endpoints are strings".into()))
                .and_then(|s| parse_rational(s).map_err(AlgebraicError::BadJson))?;
            return AlgebraicNumber::from_defpoly_interval(&p, lo, hi);
        }
        Err(AlgebraicError::BadJson(
            "need either point or interval".into(),
        ))
    }
}

impl PartialEq for AlgebraicNumber {
    fn eq(&self, other: &Self) -> bool {
        self.equals(other)
    }
}

impl Eq for AlgebraicNumber {}

impl PartialOrd for AlgebraicNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AlgebraicNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.equals(other) {
            return Ordering::Equal;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        loop {
            let (alo, ahi) = a.bounds();
            let (blo, bhi) = b.bounds();
            if ahi < blo || (ahi == blo && (a.as_rational().is_none() || b.as_rational().is_none()))
            {
                return Ordering::Less;
            }
            if bhi < alo || (bhi == alo && (a.as_rational().is_none() || b.as_rational().is_none()))
            {
                return Ordering::Greater;
            }
            // Distinct reals separate after finitely many halvings.
            a.refine();
            b.refine();
        }
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.loc {
            Loc::Point(r) => write!(f, "{}", rational_string(r)),
            Loc::Interval(lo, hi) => write!(
                f,
                "root of {} in ({}, {})",
                self.defpoly,
                rational_string(lo),
                rational_string(hi)
            ),
        }
    }
}

impl fmt::Debug for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Coefficient list as a JSON array of exact integers, low degree first.
pub fn poly_to_json(p: &Polynomial) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| {
                let n: serde_json::Number = c
                    .to_string()
                    .parse()
                    .expect("integer coefficient is a valid JSON number");
                Value::Number(n)
            })
            .collect(),
    )
}

/// Accepts a JSON array of integers (numbers or decimal strings).
pub fn poly_from_json(v: &Value) -> Result<Polynomial, String> {
    let arr = v.as_array().ok_or("defpoly must be an array")?;
    let mut coeffs = vec![];
    for item in arr {
        let c: BigInt = match item {
            Value::Number(n) => n
                .to_string()
                .parse()
                .map_err(|_| format!("non-integer coefficient {n}"))?,
            Value::String(s) => s
                .parse()
                .map_err(|_| format!("bad coefficient string {s:?}"))?,
            other => return Err(format!("bad coefficient {other}")),
        };
        coeffs.push(c);
    }
    Ok(Polynomial::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_rational;
    use proptest::prelude::*;

    fn p(cs: &[i64]) -> Polynomial {
        Polynomial::from_ints(cs)
    }

    fn rat(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::from_defpoly_interval(&p(&[-2, 0, 1]), rat("1"), rat("2")).unwrap()
    }

    #[test]
    fn rational_form_is_canonical() {
        let half = AlgebraicNumber::from_rational(rat("2/4"));
        assert_eq!(half.as_rational(), Some(&rat("1/2")));
        assert_eq!(half.defpoly(), &p(&[-1, 2]));
    }

    #[test]
    fn multiplicity_frozen_examples() {
        // theta = 1 in (x^2 - 1)^2 has multiplicity 2.
        let one = AlgebraicNumber::from_integer(1);
        assert_eq!(one.root_multiplicity(&p(&[1, 0, -2, 0, 1])), 2);
        // theta = sqrt2 in x^3 - 2x has multiplicity 1.
        assert_eq!(sqrt2().root_multiplicity(&p(&[0, -2, 0, 1])), 1);
        // Non-root.
        assert_eq!(one.root_multiplicity(&p(&[0, -2, 0, 1])), 0);
    }

    #[test]
    fn equality_across_representations() {
        // Root of x^4 - 4 in (1, 2) equals root of x^2 - 2 in (1, 2).
        let a = AlgebraicNumber::from_defpoly_interval(&p(&[-4, 0, 0, 0, 1]), rat("1"), rat("2"))
            .unwrap();
        assert_eq!(a, sqrt2());
        assert_ne!(a, sqrt2().negate());
        assert_ne!(a, AlgebraicNumber::from_rational(rat("3/2")));
    }

    #[test]
    fn point_vs_interval_equality() {
        // Root of (x-1)(x^2-5) isolated near 1 equals rational 1.
        let q = p(&[-1, 1]).mul(&p(&[-5, 0, 1]));
        let a = AlgebraicNumber::from_defpoly_interval(&q, rat("1/2"), rat("3/2")).unwrap();
        assert_eq!(a, AlgebraicNumber::from_integer(1));
        assert_eq!(a.as_rational(), Some(&rat("1")));
    }

    #[test]
    fn non_isolating_interval_rejected() {
        let err = AlgebraicNumber::from_defpoly_interval(&p(&[-2, 0, 1]), rat("-2"), rat("2"));
        assert!(matches!(err, Err(AlgebraicError::NotIsolating(_, _, 2))));
    }

    #[test]
    fn negate_is_involution_and_mirrors() {
        let s = sqrt2();
        let n = s.negate();
        assert!(n < s);
        assert_eq!(n.negate(), s);
        let (lo, hi) = n.bounds();
        assert!(rat("-2") <= lo && lo < hi && hi <= rat("-1"));
        let r = AlgebraicNumber::from_rational(rat("-3/7"));
        assert_eq!(r.negate().as_rational(), Some(&rat("3/7")));
        assert_eq!(r.negate().negate(), r);
    }

    #[test]
    fn refine_preserves_identity() {
        let mut s = sqrt2();
        let orig = sqrt2();
        for _ in 0..12 {
            s.refine();
            assert_eq!(s, orig);
        }
        let (lo, hi) = s.bounds();
        assert!(&hi - &lo < rat("1/1000"));
    }

    #[test]
    fn ordering_sorts_roots() {
        let roots = AlgebraicNumber::roots_of(&p(&[0, -2, 0, 1])); // -sqrt2, 0, sqrt2
        assert_eq!(roots.len(), 3);
        assert!(roots[0] < roots[1] && roots[1] < roots[2]);
        assert!(roots[1].is_zero());
        assert_eq!(roots[2], sqrt2());
        assert_eq!(roots[0], sqrt2().negate());
    }

    #[test]
    fn json_round_trip() {
        for x in [
            AlgebraicNumber::from_rational(rat("-5/3")),
            sqrt2(),
            sqrt2().negate(),
            AlgebraicNumber::from_integer(0),
        ] {
            let j = x.to_json();
            let back = AlgebraicNumber::from_json(&j).unwrap();
            assert_eq!(back, x);
        }
        let j = AlgebraicNumber::from_integer(1).to_json();
        assert_eq!(j, serde_json::json!({"defpoly": [-1, 1], "point": "1/1"}));
    }

    #[test]
    fn multiplicity_is_additive_over_products() {
        let s = sqrt2();
        let f = p(&[0, -2, 0, 1]); // x(x^2-2)
        let g = p(&[-2, 0, 1]); // x^2 - 2
        let fg = f.mul(&g);
        assert_eq!(
            s.root_multiplicity(&fg),
            s.root_multiplicity(&f) + s.root_multiplicity(&g)
        );
        assert_eq!(s.root_multiplicity(&fg), 2);
    }

    proptest! {
        #[test]
        fn equality_on_random_rationals(a in -30i64..30, b in 1i64..12, c in -30i64..30, d in 1i64..12) {
            let x = AlgebraicNumber::from_rational(Rational::new(BigInt::from(a), BigInt::from(b)));
            let y = AlgebraicNumber::from_rational(Rational::new(BigInt::from(c), BigInt::from(d)));
            let same = Rational::new(BigInt::from(a), BigInt::from(b))
                == Rational::new(BigInt::from(c), BigInt::from(d));
            prop_assert_eq!(x == y, same);
            prop_assert_eq!(x.cmp(&y), Rational::new(BigInt::from(a), BigInt::from(b))
                .cmp(&Rational::new(BigInt::from(c), BigInt::from(d))));
        }

        #[test]
        fn negate_tracks_multiplicity(coeffs in proptest::collection::vec(-6i64..7, 2..6)) {
            let q = Polynomial::from_ints(&coeffs);
            prop_assume!(q.degree() >= Some(1));
            for r in AlgebraicNumber::roots_of(&q) {
                let m = r.root_multiplicity(&q);
                prop_assert!(m >= 1);
                // Mirror the polynomial; the negated root has the same multiplicity.
                let mirrored = Polynomial::new(
                    q.coeffs().iter().enumerate()
                        .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                        .collect());
                prop_assert_eq!(r.negate().root_multiplicity(&mirrored), m);
            }
        }
    }
}
