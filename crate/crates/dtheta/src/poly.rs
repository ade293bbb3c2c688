//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored low degree first with no trailing zeros; the zero
//! polynomial is the empty vector. Everything here is exact: no floating
//! point enters any computation.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational, always reduced with positive denominator.
pub type Rational = BigRational;

/// Integer polynomial, dense, low degree first, no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    coeffs: Vec<BigInt>,
}

impl Polynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Polynomial::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigInt::one())
    }

    /// The monomial x.
    pub fn x() -> Self {
        Polynomial::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        Polynomial::new(vec![c])
    }

    /// c * x^k.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Polynomial { coeffs: v }
    }

    /// The primitive linear polynomial with the given rational root:
    /// den*x - num for r = num/den in lowest terms.
    pub fn linear_from_root(r: &Rational) -> Self {
        Polynomial::new(vec![-r.numer().clone(), r.denom().clone()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Coefficient of x^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn neg(&self) -> Self {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Polynomial::new(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs: out }
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Exact evaluation at a rational point (Horner).
    pub fn eval_rational(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + Rational::from(c.clone());
        }
        acc
    }

    pub fn is_root(&self, t: &Rational) -> bool {
        self.eval_rational(t).is_zero()
    }

    /// Gcd of all coefficients, non-negative; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content, keeping the leading sign.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let c = self.content();
        Polynomial {
            coeffs: self.coeffs.iter().map(|a| a / &c).collect(),
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        let p = self.primitive_part();
        match p.leading() {
            Some(l) if l.is_negative() => p.neg(),
            _ => p,
        }
    }

    /// Exact division; None when the division is not exact over the integers.
    pub fn try_exact_div(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Polynomial::zero());
        }
        let dd = d.degree().unwrap();
        let nd = self.degree()?;
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        let lead = d.leading().unwrap();
        for k in (0..=nd - dd).rev() {
            let top = std::mem::take(&mut rem[dd + k]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate().take(dd) {
                rem[i + k] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Polynomial::new(quot))
        } else {
            None
        }
    }

    /// Exact division; panics when not exact.
    pub fn exact_div(&self, d: &Self) -> Self {
        self.try_exact_div(d).expect("polynomial division not exact")
    }

    /// Pseudo-remainder: the r with lead(d)^(deg self - deg d + 1) * self = q*d + r.
    /// Requires deg self >= deg d and d nonzero.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo-remainder by zero polynomial");
        let dd = d.degree().unwrap();
        let nd = self.degree().expect("pseudo-remainder of zero polynomial");
        assert!(nd >= dd, "pseudo-remainder needs deg a >= deg b");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        for k in (0..=nd - dd).rev() {
            // Multiply the whole remainder by lead even when the top
            // coefficient is zero so the total scaling is lead^(delta+1).
            let top = rem[dd + k].clone();
            for c in rem.iter_mut() {
                *c *= &lead;
            }
            if !top.is_zero() {
                for (i, c) in d.coeffs.iter().enumerate() {
                    rem[i + k] -= &top * c;
                }
            }
            debug_assert!(rem[dd + k].is_zero());
        }
        rem.truncate(dd);
        Polynomial::new(rem)
    }

    /// Primitive gcd with positive leading coefficient, via the primitive
    /// polynomial remainder sequence. Both inputs zero is a contract violation.
    pub fn gcd(&self, other: &Self) -> Self {
        assert!(
            !(self.is_zero() && other.is_zero()),
            "gcd of two zero polynomials"
        );
        if self.is_zero() {
            return other.primitive_positive();
        }
        if other.is_zero() {
            return self.primitive_positive();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        loop {
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b.primitive_positive();
            }
            a = b;
            b = r.primitive_part();
        }
    }

    /// The square-free part: the product of the distinct irreducible factors,
    /// primitive with positive leading coefficient. Panics on zero input.
    pub fn squarefree_part(&self) -> Self {
        assert!(!self.is_zero(), "square-free part of zero polynomial");
        let p = self.primitive_positive();
        if p.degree() == Some(0) {
            return Polynomial::one();
        }
        let g = p.gcd(&p.derivative());
        if g.degree() == Some(0) {
            return p;
        }
        p.exact_div(&g).primitive_positive()
    }

    /// Yun square-free decomposition: pairwise-coprime primitive square-free
    /// factors with strictly increasing exponents, such that self equals an
    /// integer unit times the product of factor^exponent. Panics on zero input.
    pub fn squarefree_decomposition(&self) -> Vec<(Polynomial, usize)> {
        assert!(!self.is_zero(), "square-free decomposition of zero polynomial");
        let p = self.primitive_positive();
        if p.degree() == Some(0) {
            return vec![];
        }
        let dp = p.derivative();
        let a0 = p.gcd(&dp);
        if a0.degree() == Some(0) {
            return vec![(p, 1)];
        }
        let mut out = vec![];
        let mut b = p.exact_div(&a0);
        let mut d = dp.exact_div(&a0).sub(&b.derivative());
        let mut i = 1usize;
        while b.degree() > Some(0) {
            let (f, nb, nd) = if d.is_zero() {
                // gcd(b, 0) = b: the final factor.
                (b.primitive_positive(), Polynomial::one(), Polynomial::zero())
            } else {
                let f = b.gcd(&d);
                let nb = b.exact_div(&f);
                let nd = d.exact_div(&f).sub(&nb.derivative());
                (f, nb, nd)
            };
            if f.degree() > Some(0) {
                out.push((f, i));
            }
            b = nb;
            d = nd;
            i += 1;
        }
        out
    }
}

impl fmt::Display for Polynomial {
    /// Coefficient list, low degree first: `[-1, 0, 1]` is x^2 - 1.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Parses a coefficient list of the Display form: `[-1, 0, 1]`.
pub fn parse_coeff_list(s: &str) -> Result<Polynomial, String> {
    let t = s.trim();
    let inner = t
        .strip_prefix('[')
        .and_then(|u| u.strip_suffix(']'))
        .ok_or_else(|| format!("expected [c0, c1, ...], got {t:?}"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(Polynomial::zero());
    }
    let mut coeffs = vec![];
    for part in inner.split(',') {
        let part = part.trim();
        let c: BigInt = part
            .parse()
            .map_err(|_| format!("bad integer coefficient {part:?}"))?;
        coeffs.push(c);
    }
    Ok(Polynomial::new(coeffs))
}

/// Parses `p/q` or a bare integer `p` into a reduced rational.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let t = s.trim();
    let (ns, ds) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let n: BigInt = ns.parse().map_err(|_| format!("bad numerator {ns:?}"))?;
    let d: BigInt = ds.parse().map_err(|_| format!("bad denominator {ds:?}"))?;
    if d.is_zero() {
        return Err("zero denominator".into());
    }
    Ok(Rational::new(n, d))
}

/// Renders a rational canonically as `p/q` (q always shown, q > 0).
pub fn rational_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}
