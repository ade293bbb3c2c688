//! Exact real-root counting and isolation for integer polynomials.
//!
//! Sturm sequences give exact root counts on rational intervals; isolation
//! combines a Cauchy bound, rational-root detection, and bisection. Rational
//! roots come back as exact points, irrational ones as open isolating
//! intervals with rational non-root endpoints.

use crate::poly::{Polynomial, Rational};
use num::{BigInt, Integer, One, Signed, Zero};

/// One isolated real root: either an exact rational point or an open interval
/// containing exactly one root of the polynomial it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsolatedRoot {
    Point(Rational),
    Interval(Rational, Rational),
}

impl IsolatedRoot {
    /// Closed rational bounds enclosing the root.
    pub fn bounds(&self) -> (Rational, Rational) {
        match self {
            IsolatedRoot::Point(r) => (r.clone(), r.clone()),
            IsolatedRoot::Interval(lo, hi) => (lo.clone(), hi.clone()),
        }
    }
}

fn sign_of(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

/// Sturm chain of a square-free polynomial: s0 = p, s1 = p', and each later
/// member is the negated remainder of the two before it, scaled by positive
/// constants only (so the sign pattern matches the rational chain).
fn sturm_chain(p: &Polynomial) -> Vec<Polynomial> {
    let mut chain = vec![p.primitive_part(), p.derivative().primitive_part()];
    loop {
        let a = &chain[chain.len() - 2];
        let b = &chain[chain.len() - 1];
        if b.is_zero() || a.degree() < b.degree() {
            break;
        }
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let r = a.pseudo_rem(b);
        if r.is_zero() {
            break;
        }
        // Over the rationals rem(a, b) = r / lead(b)^(delta+1); negate while
        // keeping only positive scalings.
        let lead_neg = b.leading().unwrap().is_negative();
        let flip_is_positive = lead_neg && (delta + 1) % 2 == 1;
        let next = if flip_is_positive { r } else { r.neg() };
        chain.push(next.primitive_part());
    }
    chain.retain(|q| !q.is_zero());
    chain
}

fn sign_variations(chain: &[Polynomial], t: &Rational) -> usize {
    let mut last = 0i8;
    let mut v = 0;
    for q in chain {
        let s = sign_of(&q.eval_rational(t));
        if s == 0 {
            continue;
        }
        if last != 0 && s != last {
            v += 1;
        }
        last = s;
    }
    v
}

/// Number of real roots of a square-free polynomial in the open interval
/// (lo, hi). Panics if p is zero or not square-free, if an endpoint is a
/// root, or if lo > hi; callers with a root at an endpoint must first move
/// the endpoint inward (e.g. by halving toward the interior).
pub fn sturm_count(p: &Polynomial, lo: &Rational, hi: &Rational) -> usize {
    assert!(!p.is_zero(), "sturm count of zero polynomial");
    assert!(
        p.degree() == Some(0) || p.gcd(&p.derivative()).degree() == Some(0),
        "sturm count requires a square-free polynomial"
    );
    assert!(lo <= hi, "sturm count interval endpoints out of order");
    assert!(
        !p.eval_rational(lo).is_zero() && !p.eval_rational(hi).is_zero(),
        "sturm count endpoints must not be roots"
    );
    if lo == hi || p.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(p);
    let a = sign_variations(&chain, lo);
    let b = sign_variations(&chain, hi);
    a - b
}

/// Cauchy root bound: every real root of p lies strictly inside
/// (-M, M) for M = 1 + max |c_i| / |lead|. Requires degree >= 1.
pub fn cauchy_bound(p: &Polynomial) -> Rational {
    let d = p.degree().expect("cauchy bound of zero polynomial");
    assert!(d >= 1, "cauchy bound needs degree >= 1");
    let lead = p.leading().unwrap().abs();
    let mut m = BigInt::zero();
    for c in &p.coeffs()[..d] {
        let a = c.abs();
        if a > m {
            m = a;
        }
    }
    Rational::one() + Rational::new(m, lead)
}

/// Divisors of |n| (including 1 and |n|), or None when trial division runs
/// out of fuel before the factorization completes.
fn divisors(n: &BigInt, fuel: u64) -> Option<Vec<BigInt>> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut primes: Vec<(BigInt, u32)> = vec![];
    let mut d = BigInt::from(2);
    let mut steps = 0u64;
    while &d * &d <= n {
        steps += 1;
        if steps > fuel {
            return None;
        }
        if (&n % &d).is_zero() {
            let mut e = 0u32;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            primes.push((d.clone(), e));
        }
        d += 1;
    }
    if n > BigInt::one() {
        primes.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in primes {
        let base = out.clone();
        let mut pk = BigInt::one();
        for _ in 0..e {
            pk = &pk * &p;
            out.extend(base.iter().map(|b| b * &pk));
        }
        if out.len() > 4096 {
            return None;
        }
    }
    Some(out)
}

/// All rational roots of a square-free primitive polynomial, sorted, or None
/// when the coefficient factorizations are out of reach.
fn rational_roots(q: &Polynomial) -> Option<Vec<Rational>> {
    let mut roots = vec![];
    let mut q = q.clone();
    if q.coeff(0).is_zero() {
        roots.push(Rational::zero());
        q = q.exact_div(&Polynomial::x());
    }
    if q.degree() >= Some(1) {
        const FUEL: u64 = 1 << 20;
        let nums = divisors(&q.coeff(0), FUEL)?;
        let dens = divisors(q.leading().unwrap(), FUEL)?;
        for a in &nums {
            for b in &dens {
                if !a.gcd(b).is_one() {
                    continue;
                }
                for cand in [Rational::new(a.clone(), b.clone()), Rational::new(-a.clone(), b.clone())] {
                    if q.is_root(&cand) {
                        roots.push(cand);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / Rational::from(BigInt::from(2))
}

/// Isolates all distinct real roots of p (equivalently, of its square-free
/// part), in increasing order. Rational roots are returned as exact points
/// whenever their detection is feasible; irrational roots always come back as
/// open intervals whose endpoints are rational non-roots, each containing
/// exactly one root of the square-free part. Panics on zero input.
pub fn isolate_real_roots(p: &Polynomial) -> Vec<IsolatedRoot> {
    assert!(!p.is_zero(), "root isolation of zero polynomial");
    let sf = p.squarefree_part();
    if sf.degree() <= Some(0) {
        return vec![];
    }
    let mut points: Vec<Rational> = vec![];
    let mut q = sf;
    if let Some(rs) = rational_roots(&q) {
        for r in &rs {
            q = q.exact_div(&Polynomial::linear_from_root(r));
        }
        points = rs;
    }
    // Bisection. If rational-root detection was incomplete, a midpoint can
    // still land on a rational root; deflate and restart when that happens.
    let mut intervals: Vec<(Rational, Rational)> = vec![];
    'restart: loop {
        intervals.clear();
        if q.degree() <= Some(0) {
            break;
        }
        let m = cauchy_bound(&q);
        let mut stack = vec![(-m.clone(), m)];
        while let Some((lo, hi)) = stack.pop() {
            match sturm_count(&q, &lo, &hi) {
                0 => {}
                1 => intervals.push((lo, hi)),
                _ => {
                    let mid = midpoint(&lo, &hi);
                    if q.is_root(&mid) {
                        points.push(mid.clone());
                        q = q.exact_div(&Polynomial::linear_from_root(&mid));
                        continue 'restart;
                    }
                    stack.push((lo, mid.clone()));
                    stack.push((mid, hi));
                }
            }
        }
        break;
    }
    // Shrink each interval until no known rational root touches it, so points
    // and intervals are strictly separated.
    points.sort();
    points.dedup();
    let mut shrunk = vec![];
    for (mut lo, mut hi) in intervals {
        while points.iter().any(|r| lo <= *r && *r <= hi) {
            let mid = midpoint(&lo, &hi);
            if q.is_root(&mid) {
                // Only reachable when detection was incomplete; the lone root
                // of this interval turned out rational after all.
                points.push(mid);
                points.sort();
                points.dedup();
                lo = hi.clone(); // drop the interval
                break;
            }
            if sign_of(&q.eval_rational(&lo)) != sign_of(&q.eval_rational(&mid)) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        if lo < hi {
            shrunk.push((lo, hi));
        }
    }
    let mut out: Vec<IsolatedRoot> = points.into_iter().map(IsolatedRoot::Point).collect();
    out.extend(shrunk.into_iter().map(|(lo, hi)| IsolatedRoot::Interval(lo, hi)));
    out.sort_by(|a, b| {
        let (alo, ahi) = a.bounds();
        let (blo, bhi) = b.bounds();
        // Regions are pairwise disjoint up to touching endpoints.
        (alo, ahi).cmp(&(blo, bhi))
    });
    out
}
