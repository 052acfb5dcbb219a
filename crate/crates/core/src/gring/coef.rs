//! Gaussian rationals, the coefficient field ℚ(√−1).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GaussRat {
    pub re: Rat,
    pub im: Rat,
}

impl GaussRat {
    pub const ZERO: GaussRat = GaussRat {
        re: Rat::ZERO,
        im: Rat::ZERO,
    };
    pub const ONE: GaussRat = GaussRat {
        re: Rat::ONE,
        im: Rat::ZERO,
    };
    pub const I: GaussRat = GaussRat {
        re: Rat::ZERO,
        im: Rat::ONE,
    };

    pub fn new(re: Rat, im: Rat) -> Self {
        GaussRat { re, im }
    }

    pub fn real(re: Rat) -> Self {
        GaussRat { re, im: Rat::ZERO }
    }

    pub fn int(n: i64) -> Self {
        GaussRat::real(Rat::int(n))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// re² + im²
    pub fn norm(&self) -> Rat {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        if self.im.is_zero() {
            return GaussRat::real(self.re.recip());
        }
        let n = self.norm().recip();
        GaussRat {
            re: &self.re * &n,
            im: -(&self.im * &n),
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = GaussRat::ONE;
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Writes `self` as a sign and a magnitude-like string suitable for the
    /// expression grammar, e.g. `-(1/2+I)` comes back as `(true, "(1/2+I)")`.
    /// Real and pure imaginary values avoid the parentheses.
    pub(crate) fn signed_parts(&self) -> (bool, String) {
        fn rat_atom(r: &Rat) -> String {
            match r.as_small() {
                Some((n, 1)) => n.abs().to_string(),
                Some((n, d)) => format!("{}/{}", n.abs(), d),
                None => r.abs().to_string(),
            }
        }
        if self.im.is_zero() {
            return (self.re.signum() < 0, rat_atom(&self.re));
        }
        if self.re.is_zero() {
            let neg = self.im.signum() < 0;
            let body = if self.im.abs().is_one() {
                "I".to_string()
            } else {
                format!("{}*I", rat_atom(&self.im))
            };
            return (neg, body);
        }
        let neg = self.re.signum() < 0;
        let (re, im) = if neg {
            (-&self.re, -&self.im)
        } else {
            (self.re.clone(), self.im.clone())
        };
        let im_part = if im.abs().is_one() {
            "I".to_string()
        } else {
            format!("{}*I", rat_atom(&im))
        };
        let sign = if im.signum() < 0 { '-' } else { '+' };
        (neg, format!("({}{}{})", rat_atom(&re), sign, im_part))
    }
}

impl From<i64> for GaussRat {
    fn from(n: i64) -> Self {
        GaussRat::int(n)
    }
}

impl From<Rat> for GaussRat {
    fn from(r: Rat) -> Self {
        GaussRat::real(r)
    }
}

impl<'a> Add<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussRat::real(&self.re * &rhs.re);
        }
        let re = &(&self.re * &rhs.re) - &(&self.im * &rhs.im);
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        GaussRat { re, im }
    }
}

impl<'a> Div<&'a GaussRat> for &'a GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        self * &rhs.inv()
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: GaussRat) -> GaussRat {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a GaussRat> for GaussRat {
            type Output = GaussRat;
            fn $m(self, rhs: &GaussRat) -> GaussRat {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&GaussRat> for GaussRat {
    fn add_assign(&mut self, rhs: &GaussRat) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&GaussRat> for GaussRat {
    fn sub_assign(&mut self, rhs: &GaussRat) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (neg, body) = self.signed_parts();
        if neg {
            write!(f, "-{body}")
        } else {
            write!(f, "{body}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(&GaussRat::I * &GaussRat::I, GaussRat::int(-1));
    }

    #[test]
    fn inverse() {
        let g = GaussRat::new(Rat::new(1, 2), Rat::int(-3));
        assert_eq!(&g * &g.inv(), GaussRat::ONE);
    }

    #[test]
    fn display() {
        assert_eq!(
            GaussRat::new(Rat::int(-1), Rat::int(2)).to_string(),
            "-(1-2*I)"
        );
        assert_eq!(GaussRat::new(Rat::ZERO, Rat::int(-1)).to_string(), "-I");
        assert_eq!(GaussRat::new(Rat::new(3, 2), Rat::ZERO).to_string(), "3/2");
    }
}
