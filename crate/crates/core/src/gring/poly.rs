use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coef::GaussRat;
use super::weight::WeightSystem;
use crate::rat::Rat;

/// Exponent triple `x^i y^j z^k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Mono(pub [u16; 3]);

impl Mono {
    pub const ONE: Mono = Mono([0, 0, 0]);

    pub fn new(i: u16, j: u16, k: u16) -> Self {
        Mono([i, j, k])
    }

    pub fn var(v: usize) -> Self {
        let mut e = [0; 3];
        e[v] = 1;
        Mono(e)
    }

    pub fn mul(self, o: Mono) -> Mono {
        Mono([self.0[0] + o.0[0], self.0[1] + o.0[1], self.0[2] + o.0[2]])
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(self, o: Mono) -> Option<Mono> {
        let mut e = [0; 3];
        for v in 0..3 {
            e[v] = self.0[v].checked_sub(o.0[v])?;
        }
        Some(Mono(e))
    }

    pub fn total(self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// `a·i + b·j + c·k`, the weight in units of `2/h`.
    pub fn weight(self, w: &WeightSystem) -> u32 {
        w.a * self.0[0] as u32 + w.b * self.0[1] as u32 + w.c * self.0[2] as u32
    }

    pub fn is_one(self) -> bool {
        self == Mono::ONE
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, name) in ["x", "y", "z"].iter().enumerate() {
            let e = self.0[v];
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Polynomial in `x, y, z` over ℚ(√−1). Terms are sorted by monomial and
/// never carry a zero coefficient, so structural equality is equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, GaussRat)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::ONE)
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::term(c, Mono::ONE)
    }

    pub fn int(n: i64) -> Self {
        Poly::constant(GaussRat::int(n))
    }

    pub fn term(c: GaussRat, m: Mono) -> Self {
        if c.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Poly::term(GaussRat::ONE, m)
    }

    pub fn x() -> Self {
        Poly::mono(Mono::var(0))
    }

    pub fn y() -> Self {
        Poly::mono(Mono::var(1))
    }

    pub fn z() -> Self {
        Poly::mono(Mono::var(2))
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Mono, GaussRat)>>(it: I) -> Self {
        let mut v: Vec<(Mono, GaussRat)> = it.into_iter().collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, GaussRat)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, GaussRat)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Mono) -> GaussRat {
        match self.terms.binary_search_by(|t| t.0.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => GaussRat::ZERO,
        }
    }

    pub fn constant_term(&self) -> GaussRat {
        self.coeff(Mono::ONE)
    }

    /// Nonzero constant polynomial.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Every term has positive degree (entry lies in the maximal graded ideal).
    pub fn in_max_ideal(&self) -> bool {
        self.constant_term().is_zero()
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_mono(&self, m: Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, a)| (t.mul(m), a.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, c: &GaussRat, m: Mono) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(t, a)| (t.mul(m), a * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in variable `v` (0 = x, 1 = y, 2 = z).
    pub fn derivative(&self, v: usize) -> Poly {
        Poly::from_terms(self.terms.iter().filter(|(m, _)| m.0[v] > 0).map(|(m, c)| {
            let mut e = m.0;
            let k = e[v];
            e[v] -= 1;
            (Mono(e), c * &GaussRat::int(k as i64))
        }))
    }

    /// Common weight of all terms in units of `2/h`, if homogeneous.
    pub fn homogeneous_weight(&self, w: &WeightSystem) -> Result<u32, DegreeError> {
        let mut it = self.terms.iter();
        let first = it.next().ok_or(DegreeError::Zero)?.0.weight(w);
        if it.all(|(m, _)| m.weight(w) == first) {
            Ok(first)
        } else {
            Err(DegreeError::NonHomogeneous)
        }
    }

    /// Weighted degree `2·weight/h` if homogeneous.
    pub fn weighted_degree(&self, w: &WeightSystem) -> Result<Rat, DegreeError> {
        self.homogeneous_weight(w)
            .map(|wt| w.degree_of_weight(wt as i64))
    }

    fn mul_impl(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            let (m, c) = &o.terms[0];
            return Poly::from_terms(self.terms.iter().map(|(t, a)| (t.mul(*m), a * c)));
        }
        let mut v = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                v.push((m1.mul(*m2), c1 * c2));
            }
        }
        Poly::from_terms(v)
    }

    fn add_impl(&self, o: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &o.terms;
        while i < a.len() || j < b.len() {
            if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i >= a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate {
                    &a[i].1 - &b[j].1
                } else {
                    &a[i].1 + &b[j].1
                };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Poly { terms: out }
    }

    /// Evaluates at a complex floating point, for diagnostics only.
    pub fn eval_f64(&self, p: [(f64, f64); 3]) -> (f64, f64) {
        let mut acc = (0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_f64_pair();
            for v in 0..3 {
                for _ in 0..m.0[v] {
                    t = (t.0 * p[v].0 - t.1 * p[v].1, t.0 * p[v].1 + t.1 * p[v].0);
                }
            }
            acc = (acc.0 + t.0, acc.1 + t.1);
        }
        acc
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum DegreeError {
    #[error("the zero polynomial has no degree")]
    Zero,
    #[error("polynomial is not weighted-homogeneous")]
    NonHomogeneous,
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        self.add_impl(o, false)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        self.add_impl(o, true)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        self.mul_impl(o)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Poly {
    /// Highest monomial first; output is accepted by [`super::parse_poly`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, body) = c.signed_parts();
            if neg {
                write!(f, "-")?;
            } else if idx > 0 {
                write!(f, "+")?;
            }
            if m.is_one() {
                write!(f, "{body}")?;
            } else if body == "1" {
                write!(f, "{m}")?;
            } else {
                write!(f, "{body}*{m}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cancellation_leaves_canonical_zero() {
        let p = &Poly::x() + &Poly::y();
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q, Poly::zero());
    }

    #[test]
    fn derivative_of_power() {
        let p = Poly::x().pow(3);
        assert_eq!(p.derivative(0), Poly::x().pow(2).scale(&GaussRat::int(3)));
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn display_orders_high_first() {
        let p = &(&Poly::x().pow(3) + &Poly::y().pow(4)) + &Poly::z().pow(2);
        assert_eq!(p.to_string(), "x^3+y^4+z^2");
        let q = &Poly::z().scale(&GaussRat::I) - &Poly::y();
        assert_eq!(q.to_string(), "-y+I*z");
    }
}
