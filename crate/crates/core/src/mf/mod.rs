//! Matrix factorizations `Q = [[0, phi], [psi, 0]]` with `phi: P1 → P0`,
//! `psi: P0 → P1`, and their graded versions.
//!
//! A grading matrix `S` lists the `P0` slots first and the `P1` slots second.
//! A nonzero entry `Q_IJ` must be homogeneous of degree `1 + S_I − S_J`.

mod grading;
mod json;
mod matrix;
mod reduce;

use std::fmt;

use crate::gring::{Poly, WeightSystem};
use crate::rat::Rat;

pub use grading::{solve_grading, GradingFamily, GradingSolveError};
pub use json::{GradedMfJson, JsonError};
pub use matrix::PMat;
pub use reduce::Reduction;

/// The hypersurface `f` together with the weights it is homogeneous for.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    pub f: Poly,
    pub w: WeightSystem,
}

impl Ring {
    pub fn new(f: Poly, w: WeightSystem) -> Self {
        Ring { f, w }
    }

    /// `2/h`, the degree of one τ step.
    pub fn tau_step(&self) -> Rat {
        Rat::new(2, self.w.h as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MatrixFactorization {
    pub ring: Ring,
    pub phi: PMat,
    pub psi: PMat,
}

/// Which product failed and where.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MfViolation {
    #[error("blocks are not square of equal size ({phi:?} vs {psi:?})")]
    Shape {
        phi: (usize, usize),
        psi: (usize, usize),
    },
    #[error("{product} has {found} at ({row},{col}), expected {expected}")]
    Product {
        product: &'static str,
        row: usize,
        col: usize,
        expected: Poly,
        found: Poly,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GradingViolation {
    #[error("S has {found} entries, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("Q[{row}][{col}] = {entry} is not homogeneous")]
    NonHomogeneous { row: usize, col: usize, entry: Poly },
    #[error("Q[{row}][{col}] has degree {found}, expected {expected}")]
    Degree {
        row: usize,
        col: usize,
        expected: Rat,
        found: Rat,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MfError {
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("morphism is not a cocycle")]
    NotCocycle,
    #[error("morphism blocks have the wrong shape")]
    Shape,
}

impl MatrixFactorization {
    pub fn new(ring: Ring, phi: PMat, psi: PMat) -> Self {
        MatrixFactorization { ring, phi, psi }
    }

    pub fn size(&self) -> usize {
        self.phi.rows()
    }

    /// The zero object `(1, f)`.
    pub fn trivial(ring: Ring) -> Self {
        let f = ring.f.clone();
        MatrixFactorization {
            ring,
            phi: PMat::from_rows(vec![vec![Poly::one()]]),
            psi: PMat::from_rows(vec![vec![f]]),
        }
    }

    /// Entry `Q_IJ` of the block matrix, `None` on the zero diagonal blocks.
    pub fn q_entry(&self, i: usize, j: usize) -> Option<&Poly> {
        let r = self.size();
        match (i < r, j < r) {
            (true, false) => Some(self.phi.get(i, j - r)),
            (false, true) => Some(self.psi.get(i - r, j)),
            _ => None,
        }
    }

    /// Exact check of `phi·psi = psi·phi = f·1`.
    pub fn verify(&self) -> Result<(), MfViolation> {
        let r = self.phi.rows();
        let shape = |m: &PMat| (m.rows(), m.cols());
        if shape(&self.phi) != (r, r) || shape(&self.psi) != (r, r) {
            return Err(MfViolation::Shape {
                phi: shape(&self.phi),
                psi: shape(&self.psi),
            });
        }
        for (name, prod) in [
            ("phi*psi", self.phi.mul(&self.psi)),
            ("psi*phi", self.psi.mul(&self.phi)),
        ] {
            for (i, j, p) in prod.entries() {
                let expected = if i == j {
                    self.ring.f.clone()
                } else {
                    Poly::zero()
                };
                if *p != expected {
                    return Err(MfViolation::Product {
                        product: name,
                        row: i,
                        col: j,
                        expected,
                        found: p.clone(),
                    });
                }
            }
        }
        Ok(())
    }
}

pub fn verify_mf(m: &MatrixFactorization) -> Result<(), MfViolation> {
    m.verify()
}

/// The traceless part of `S` and its phase `tr S / 2r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseSplit {
    pub traceless: Vec<Rat>,
    pub phase: Rat,
}

impl PhaseSplit {
    pub fn reassemble(&self) -> Vec<Rat> {
        self.traceless.iter().map(|q| q + &self.phase).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedMF {
    pub mf: MatrixFactorization,
    pub s: Vec<Rat>,
}

impl GradedMF {
    pub fn new(mf: MatrixFactorization, s: Vec<Rat>) -> Self {
        GradedMF { mf, s }
    }

    /// The size-0 object over `ring`.
    pub fn zero(ring: Ring) -> Self {
        GradedMF {
            mf: MatrixFactorization::new(ring, PMat::zeros(0, 0), PMat::zeros(0, 0)),
            s: Vec::new(),
        }
    }

    /// The contractible object `(1, f)` with `P0` generator in degree `s`.
    pub fn trivial(ring: Ring, s: Rat) -> Self {
        let sbar = &s + &Rat::ONE;
        GradedMF {
            mf: MatrixFactorization::trivial(ring),
            s: vec![s, sbar],
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.mf.ring
    }

    pub fn phi(&self) -> &PMat {
        &self.mf.phi
    }

    pub fn psi(&self) -> &PMat {
        &self.mf.psi
    }

    pub fn size(&self) -> usize {
        self.mf.size()
    }

    /// `S` entries for the `P0` slots.
    pub fn s0(&self) -> &[Rat] {
        &self.s[..self.size()]
    }

    /// `S` entries for the `P1` slots.
    pub fn s1(&self) -> &[Rat] {
        &self.s[self.size()..]
    }

    pub fn verify_mf(&self) -> Result<(), MfViolation> {
        self.mf.verify()
    }

    /// Checks `deg Q_IJ = 1 + S_I − S_J` on every nonzero entry.
    pub fn verify_grading(&self) -> Result<(), GradingViolation> {
        let r = self.size();
        if self.s.len() != 2 * r {
            return Err(GradingViolation::Length {
                expected: 2 * r,
                found: self.s.len(),
            });
        }
        for i in 0..2 * r {
            for j in 0..2 * r {
                let Some(p) = self.mf.q_entry(i, j) else {
                    continue;
                };
                if p.is_zero() {
                    continue;
                }
                let expected = &(&Rat::ONE + &self.s[i]) - &self.s[j];
                match p.weighted_degree(&self.ring().w) {
                    Ok(d) if d == expected => {}
                    Ok(found) => {
                        return Err(GradingViolation::Degree {
                            row: i,
                            col: j,
                            expected,
                            found,
                        })
                    }
                    Err(_) => {
                        return Err(GradingViolation::NonHomogeneous {
                            row: i,
                            col: j,
                            entry: p.clone(),
                        })
                    }
                }
            }
        }
        Ok(())
    }

    pub fn phase(&self) -> Rat {
        if self.s.is_empty() {
            return Rat::ZERO;
        }
        let tr = self.s.iter().fold(Rat::ZERO, |a, b| &a + b);
        &tr / &Rat::int(self.s.len() as i64)
    }

    pub fn phase_split(&self) -> PhaseSplit {
        let phase = self.phase();
        PhaseSplit {
            traceless: self.s.iter().map(|x| x - &phase).collect(),
            phase,
        }
    }

    /// `S` as a sorted multiset, each half sorted separately.
    pub fn s_multiset(&self) -> (Vec<Rat>, Vec<Rat>) {
        let mut a = self.s0().to_vec();
        let mut b = self.s1().to_vec();
        a.sort();
        b.sort();
        (a, b)
    }

    fn with_s(&self, s: Vec<Rat>) -> GradedMF {
        GradedMF {
            mf: self.mf.clone(),
            s,
        }
    }

    /// τⁿ: `S ↦ S + 2n/h`.
    pub fn tau(&self, n: i64) -> GradedMF {
        let d = Rat::new(2 * n, self.ring().w.h as i64);
        self.with_s(self.s.iter().map(|x| x + &d).collect())
    }

    fn swap_halves(&self, shift: &Rat) -> GradedMF {
        let s: Vec<Rat> = self
            .s1()
            .iter()
            .chain(self.s0())
            .map(|x| x + shift)
            .collect();
        let mf = MatrixFactorization::new(self.ring().clone(), self.psi().neg(), self.phi().neg());
        GradedMF { mf, s }
    }

    /// `T`: `(phi, psi) ↦ (−psi, −phi)`, `S ↦ (s̄+1; s+1)`.
    pub fn shift_t(&self) -> GradedMF {
        self.swap_halves(&Rat::ONE)
    }

    pub fn shift_t_inv(&self) -> GradedMF {
        self.swap_halves(&Rat::int(-1))
    }

    /// `T^n` for any integer `n`.
    pub fn shift_t_pow(&self, n: i64) -> GradedMF {
        let mut g = self.clone();
        for _ in 0..n.unsigned_abs() {
            g = if n > 0 { g.shift_t() } else { g.shift_t_inv() };
        }
        g
    }

    /// The Serre functor `T ∘ τ⁻¹`.
    pub fn serre(&self) -> GradedMF {
        self.tau(-1).shift_t()
    }

    pub fn serre_inv(&self) -> GradedMF {
        self.shift_t_inv().tau(1)
    }

    /// Base change `phi ↦ a·phi·b⁻¹`, `psi ↦ b·psi·a⁻¹` with `S` kept.
    /// The pair `(a, b)` is then a morphism from `self` to the result.
    pub fn transform(&self, a: &PMat, a_inv: &PMat, b: &PMat, b_inv: &PMat) -> GradedMF {
        let phi = a.mul(self.phi()).mul(b_inv);
        let psi = b.mul(self.psi()).mul(a_inv);
        GradedMF {
            mf: MatrixFactorization::new(self.ring().clone(), phi, psi),
            s: self.s.clone(),
        }
    }

    /// Restriction to the given `P0` and `P1` slots.
    pub fn select(&self, p0: &[usize], p1: &[usize]) -> GradedMF {
        let r = self.size();
        let phi = self.phi().select(p0, p1);
        let psi = self.psi().select(p1, p0);
        let s = p0
            .iter()
            .map(|&i| self.s[i].clone())
            .chain(p1.iter().map(|&i| self.s[r + i].clone()))
            .collect();
        GradedMF {
            mf: MatrixFactorization::new(self.ring().clone(), phi, psi),
            s,
        }
    }

    pub fn reduce(&self) -> GradedMF {
        reduce::reduce(self, false).object
    }

    /// Reduction together with the inclusion and projection witnesses.
    pub fn reduce_with_witness(&self) -> Reduction {
        reduce::reduce(self, true)
    }
}

pub fn verify_grading(g: &GradedMF) -> Result<(), GradingViolation> {
    g.verify_grading()
}

pub fn tau(g: &GradedMF, n: i64) -> GradedMF {
    g.tau(n)
}

pub fn shift_t(g: &GradedMF) -> GradedMF {
    g.shift_t()
}

pub fn reduce(g: &GradedMF) -> GradedMF {
    g.reduce()
}

pub fn direct_sum(g1: &GradedMF, g2: &GradedMF) -> Result<GradedMF, MfError> {
    if g1.ring() != g2.ring() {
        return Err(MfError::RingMismatch);
    }
    let phi = PMat::block_diag(g1.phi(), g2.phi());
    let psi = PMat::block_diag(g1.psi(), g2.psi());
    let s = g1
        .s0()
        .iter()
        .chain(g2.s0())
        .chain(g1.s1())
        .chain(g2.s1())
        .cloned()
        .collect();
    Ok(GradedMF {
        mf: MatrixFactorization::new(g1.ring().clone(), phi, psi),
        s,
    })
}

/// Direct sum of any number of objects; `None` for an empty list.
pub fn direct_sum_all<'a, I: IntoIterator<Item = &'a GradedMF>>(
    items: I,
) -> Option<Result<GradedMF, MfError>> {
    let mut it = items.into_iter();
    let first = it.next()?.clone();
    Some(it.try_fold(first, |acc, g| direct_sum(&acc, g)))
}

/// Even map `(φ0: P0 → P0′, φ1: P1 → P1′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Morphism {
    pub phi0: PMat,
    pub phi1: PMat,
}

/// Odd map `(h0: P0 → P1′, h1: P1 → P0′)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Homotopy {
    pub h0: PMat,
    pub h1: PMat,
}

impl Morphism {
    pub fn new(phi0: PMat, phi1: PMat) -> Self {
        Morphism { phi0, phi1 }
    }

    pub fn identity(g: &GradedMF) -> Self {
        Morphism {
            phi0: PMat::identity(g.size()),
            phi1: PMat::identity(g.size()),
        }
    }

    pub fn zero(src: &GradedMF, dst: &GradedMF) -> Self {
        Morphism {
            phi0: PMat::zeros(dst.size(), src.size()),
            phi1: PMat::zeros(dst.size(), src.size()),
        }
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Morphism) -> Morphism {
        Morphism {
            phi0: self.phi0.mul(&other.phi0),
            phi1: self.phi1.mul(&other.phi1),
        }
    }

    pub fn add(&self, o: &Morphism) -> Morphism {
        Morphism {
            phi0: self.phi0.add(&o.phi0),
            phi1: self.phi1.add(&o.phi1),
        }
    }

    pub fn sub(&self, o: &Morphism) -> Morphism {
        Morphism {
            phi0: self.phi0.sub(&o.phi0),
            phi1: self.phi1.sub(&o.phi1),
        }
    }

    pub fn scale(&self, c: &crate::gring::GaussRat) -> Morphism {
        Morphism {
            phi0: self.phi0.scale(c),
            phi1: self.phi1.scale(c),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.phi0.is_zero() && self.phi1.is_zero()
    }

    fn shape_ok(&self, src: &GradedMF, dst: &GradedMF) -> bool {
        let want = (dst.size(), src.size());
        (self.phi0.rows(), self.phi0.cols()) == want && (self.phi1.rows(), self.phi1.cols()) == want
    }

    /// `phi′·φ1 = φ0·phi` and `psi′·φ0 = φ1·psi`.
    pub fn is_cocycle(&self, src: &GradedMF, dst: &GradedMF) -> bool {
        self.shape_ok(src, dst)
            && dst.phi().mul(&self.phi1) == self.phi0.mul(src.phi())
            && dst.psi().mul(&self.phi0) == self.phi1.mul(src.psi())
    }

    /// Every nonzero entry from slot `J` to slot `I` has degree `S′_I − S_J`.
    pub fn is_degree_zero(&self, src: &GradedMF, dst: &GradedMF) -> bool {
        if !self.shape_ok(src, dst) {
            return false;
        }
        let w = &src.ring().w;
        let check = |m: &PMat, sd: &[Rat], ss: &[Rat]| {
            m.entries()
                .all(|(i, j, p)| p.is_zero() || p.weighted_degree(w) == Ok(&sd[i] - &ss[j]))
        };
        check(&self.phi0, dst.s0(), src.s0()) && check(&self.phi1, dst.s1(), src.s1())
    }
}

impl Homotopy {
    /// `Q′H + HQ`, the even map this homotopy bounds.
    pub fn boundary(&self, src: &GradedMF, dst: &GradedMF) -> Morphism {
        Morphism {
            phi0: dst.phi().mul(&self.h0).add(&self.h1.mul(src.psi())),
            phi1: dst.psi().mul(&self.h1).add(&self.h0.mul(src.phi())),
        }
    }
}

/// Mapping cone of a degree-0 cocycle `Φ: src → dst`.
///
/// `P0 = P1(src) ⊕ P0(dst)`, `P1 = P0(src) ⊕ P1(dst)`,
/// `S = (s̄ + 1, s′; s + 1, s̄′)`.
pub fn cone(src: &GradedMF, dst: &GradedMF, m: &Morphism) -> Result<GradedMF, MfError> {
    if src.ring() != dst.ring() {
        return Err(MfError::RingMismatch);
    }
    if !m.shape_ok(src, dst) {
        return Err(MfError::Shape);
    }
    if !m.is_cocycle(src, dst) {
        return Err(MfError::NotCocycle);
    }
    let (r, r2) = (src.size(), dst.size());
    let phi = PMat::block(&src.psi().neg(), &PMat::zeros(r, r2), &m.phi0, dst.phi());
    let psi = PMat::block(&src.phi().neg(), &PMat::zeros(r, r2), &m.phi1, dst.psi());
    let one = Rat::ONE;
    let s = src
        .s1()
        .iter()
        .map(|x| x + &one)
        .chain(dst.s0().iter().cloned())
        .chain(src.s0().iter().map(|x| x + &one))
        .chain(dst.s1().iter().cloned())
        .collect();
    Ok(GradedMF {
        mf: MatrixFactorization::new(src.ring().clone(), phi, psi),
        s,
    })
}

impl fmt::Display for GradedMF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "f = {}  W = {}  size = {}",
            self.ring().f,
            self.ring().w,
            self.size()
        )?;
        writeln!(f, "phi =")?;
        write!(f, "{}", self.phi())?;
        writeln!(f, "psi =")?;
        write!(f, "{}", self.psi())?;
        let s: Vec<String> = self.s.iter().map(|x| x.to_string()).collect();
        writeln!(f, "S = ({})", s.join(", "))
    }
}
