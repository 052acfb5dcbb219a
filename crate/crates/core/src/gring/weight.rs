use std::fmt;

use num_integer::Integer;

use super::poly::{Mono, Poly};
use crate::linalg::{Echelon, SparseVec};
use crate::rat::Rat;

/// Weights `(a, b, c; h)`: `deg x = 2a/h`, `deg y = 2b/h`, `deg z = 2c/h`.
///
/// Internally degrees are tracked as integer *weights* `a·i + b·j + c·k`,
/// one weight unit being `2/h` in degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct WeightSystem {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub h: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeightError {
    #[error("weights must be positive")]
    NonPositive,
    #[error("gcd(a, b, c) = {0}, expected 1")]
    NotReduced(u32),
}

impl WeightSystem {
    pub fn new(a: u32, b: u32, c: u32, h: u32) -> Result<Self, WeightError> {
        if a == 0 || b == 0 || c == 0 || h == 0 {
            return Err(WeightError::NonPositive);
        }
        let g = a.gcd(&b).gcd(&c);
        if g != 1 {
            return Err(WeightError::NotReduced(g));
        }
        Ok(WeightSystem { a, b, c, h })
    }

    pub fn weights(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    /// Degree of a variable, `2a/h` etc.
    pub fn var_degree(&self, v: usize) -> Rat {
        self.degree_of_weight(self.weights()[v] as i64)
    }

    pub fn degree_of_weight(&self, w: i64) -> Rat {
        Rat::new(2 * w, self.h as i64)
    }

    /// Inverse of [`degree_of_weight`](Self::degree_of_weight); `None` when `d`
    /// is not a multiple of `2/h`.
    pub fn weight_of_degree(&self, d: &Rat) -> Option<i64> {
        let w = d * &Rat::new(self.h as i64, 2);
        if w.is_integer() {
            w.as_small().map(|(n, _)| n)
        } else {
            None
        }
    }

    pub fn epsilon(&self) -> i64 {
        self.a as i64 + self.b as i64 + self.c as i64 - self.h as i64
    }

    /// Monomials of the given weight, lexicographic in `(i, j, k)`.
    pub fn monomials_of_weight(&self, w: i64) -> Vec<Mono> {
        let mut out = Vec::new();
        if w < 0 {
            return out;
        }
        let w = w as u32;
        let (a, b, c) = (self.a, self.b, self.c);
        for i in 0..=w / a {
            let r1 = w - a * i;
            for j in 0..=r1 / b {
                let r2 = r1 - b * j;
                if r2 % c == 0 {
                    out.push(Mono::new(i as u16, j as u16, (r2 / c) as u16));
                }
            }
        }
        out
    }

    /// All monomials of weighted degree `d`, lexicographic in `(i, j, k)`.
    pub fn monomial_basis(&self, d: &Rat) -> Vec<Mono> {
        match self.weight_of_degree(d) {
            Some(w) => self.monomials_of_weight(w),
            None => Vec::new(),
        }
    }

    /// Exact expansion of χ_W and the regularity verdict.
    pub fn regularity(&self) -> RegularityReport {
        let (a, b, c, h) = (
            self.a as usize,
            self.b as usize,
            self.c as usize,
            self.h as usize,
        );
        // numerator (T^h - T^a)(T^h - T^b)(T^h - T^c)
        let binom = |hi: usize, lo: usize| -> Vec<i64> {
            let mut v = vec![0i64; hi.max(lo) + 1];
            v[hi] += 1;
            v[lo] -= 1;
            v
        };
        let mut num = vec![1i64];
        for w in [a, b, c] {
            num = poly_mul(&num, &binom(h, w));
        }
        let mut den = vec![1i64];
        for w in [a, b, c] {
            den = poly_mul(&den, &binom(w, 0));
        }
        let (quot, rem) = poly_divmod(&num, &den);
        let divisible = rem.iter().all(|&r| r == 0);
        let nonneg = quot.iter().all(|&q| q >= 0);
        let mut exponents = Vec::new();
        if divisible {
            for (p, &q) in quot.iter().enumerate() {
                for _ in 0..q.max(0) {
                    exponents.push(p as i64 - h as i64);
                }
            }
        }
        let is_regular = divisible && nonneg;
        RegularityReport {
            is_regular,
            milnor_number: exponents.len(),
            exponents: if is_regular { exponents } else { Vec::new() },
            epsilon: self.epsilon(),
        }
    }
}

impl fmt::Display for WeightSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{};{})", self.a, self.b, self.c, self.h)
    }
}

fn poly_mul(p: &[i64], q: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + q.len() - 1];
    for (i, &a) in p.iter().enumerate() {
        if a == 0 {
            continue;
        }
        for (j, &b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// Division by a polynomial with leading coefficient ±1 (exact over ℤ).
fn poly_divmod(num: &[i64], den: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut den = den.to_vec();
    while den.len() > 1 && *den.last().unwrap() == 0 {
        den.pop();
    }
    let lead = *den.last().unwrap();
    assert!(lead == 1 || lead == -1, "divisor must be monic up to sign");
    let mut rem = num.to_vec();
    if rem.len() < den.len() {
        return (vec![0], rem);
    }
    let mut quot = vec![0i64; rem.len() - den.len() + 1];
    for k in (0..quot.len()).rev() {
        let coef = rem[k + den.len() - 1] * lead;
        quot[k] = coef;
        if coef != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[k + j] -= coef * d;
            }
        }
    }
    (quot, rem)
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct RegularityReport {
    pub is_regular: bool,
    /// Exponents `m_1 ≤ … ≤ m_l` with multiplicity; empty when not regular.
    pub exponents: Vec<i64>,
    pub epsilon: i64,
    pub milnor_number: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MilnorError {
    #[error("polynomial is not weighted-homogeneous of degree 2")]
    NotDegreeTwo,
    #[error("weight system is not regular")]
    NotRegular,
    #[error("Jacobi ring exceeds the predicted dimension {predicted} (found {found})")]
    Exceeded { predicted: usize, found: usize },
    #[error("Jacobi ring falls short of the predicted dimension {predicted} (found {found})")]
    Short { predicted: usize, found: usize },
}

/// Graded dimensions of the Jacobi ring `R / (∂f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorPoincare {
    pub total_dim: usize,
    /// `(degree, dimension)` for every degree with a nonzero piece.
    pub graded_dims: Vec<(Rat, usize)>,
}

/// Computes the Jacobi ring degree by degree with exact ranks, stopping once
/// the cumulative dimension reaches the χ_W prediction, then certifying that
/// the pieces in the first `max(a, b, c)` weights above the socle vanish.
/// Every monomial of larger weight is a multiple of one in that window, so
/// nothing survives beyond it.
pub fn milnor_poincare(f: &Poly, w: &WeightSystem) -> Result<MilnorPoincare, MilnorError> {
    if f.homogeneous_weight(w) != Ok(w.h) {
        return Err(MilnorError::NotDegreeTwo);
    }
    let reg = w.regularity();
    if !reg.is_regular {
        return Err(MilnorError::NotRegular);
    }
    let predicted = reg.milnor_number;
    let partials: Vec<(Poly, u32)> = (0..3)
        .map(|v| (f.derivative(v), w.h - w.weights()[v]))
        .filter(|(p, _)| !p.is_zero())
        .collect();
    let piece_dim = |wt: i64| -> usize {
        let basis = w.monomials_of_weight(wt);
        if basis.is_empty() {
            return 0;
        }
        let index = |m: &Mono| basis.binary_search(m).expect("monomial of wrong weight");
        let mut ech = Echelon::new(basis.len());
        for (p, pw) in &partials {
            for m in w.monomials_of_weight(wt - *pw as i64) {
                let mut v: SparseVec = p
                    .mul_mono(m)
                    .terms()
                    .iter()
                    .map(|(t, c)| (index(t), c.clone()))
                    .collect();
                v.sort_by_key(|e| e.0);
                ech.insert(&v, None);
            }
        }
        basis.len() - ech.rank()
    };
    let socle = 3 * w.h as i64 - 2 * (w.a + w.b + w.c) as i64;
    let mut total = 0usize;
    let mut graded = Vec::new();
    let mut wt = 0i64;
    while total < predicted {
        if wt > socle {
            return Err(MilnorError::Short {
                predicted,
                found: total,
            });
        }
        let d = piece_dim(wt);
        if d > 0 {
            graded.push((w.degree_of_weight(wt), d));
            total += d;
        }
        wt += 1;
    }
    if total > predicted {
        return Err(MilnorError::Exceeded {
            predicted,
            found: total,
        });
    }
    let top = w.a.max(w.b).max(w.c) as i64;
    for extra in wt..=socle + top {
        let d = piece_dim(extra);
        if d > 0 {
            return Err(MilnorError::Exceeded {
                predicted,
                found: total + d,
            });
        }
    }
    Ok(MilnorPoincare {
        total_dim: total,
        graded_dims: graded,
    })
}

/// `Σ_d |basis(d)| T^{weight}` truncated at `order`, straight from the definition.
pub fn basis_generating_counts(w: &WeightSystem, order: usize) -> Vec<usize> {
    (0..=order)
        .map(|k| w.monomials_of_weight(k as i64).len())
        .collect()
}
