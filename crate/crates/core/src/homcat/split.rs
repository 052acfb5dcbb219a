use std::collections::BTreeMap;

use super::hom::{hom_space, HomError, HomSpace};
use crate::catalog::Catalog;
use crate::gring::GaussRat;
use crate::linalg::{kernel, sparse_from_dense, Mat};
use crate::mf::{GradedMF, Morphism, PMat};
use crate::rat::Rat;

/// `End(g)` with structure constants over the Hom basis:
/// `basis[i] ∘ basis[j] = Σₖ mult[i][j][k] · basis[k]`.
#[derive(Debug)]
pub struct EndAlgebra {
    pub space: HomSpace,
    pub mult: Vec<Vec<Vec<GaussRat>>>,
    /// Coordinates of the identity.
    pub identity: Vec<GaussRat>,
}

impl EndAlgebra {
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn object(&self) -> &GradedMF {
        &self.space.src
    }

    /// Product of two elements given in coordinates, `a ∘ b`.
    pub fn product(&self, a: &[GaussRat], b: &[GaussRat]) -> Vec<GaussRat> {
        let n = self.dim();
        let mut out = vec![GaussRat::ZERO; n];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let c = ai * bj;
                for (o, m) in out.iter_mut().zip(&self.mult[i][j]) {
                    if !m.is_zero() {
                        *o += &(&c * m);
                    }
                }
            }
        }
        out
    }

    /// Whether the structure constants are associative and `identity` is a
    /// two-sided unit.
    pub fn is_consistent(&self) -> bool {
        let n = self.dim();
        let e = |i: usize| {
            let mut v = vec![GaussRat::ZERO; n];
            v[i] = GaussRat::ONE;
            v
        };
        for i in 0..n {
            if self.product(&self.identity, &e(i)) != e(i)
                || self.product(&e(i), &self.identity) != e(i)
            {
                return false;
            }
            for j in 0..n {
                for k in 0..n {
                    let l = self.product(&self.product(&e(i), &e(j)), &e(k));
                    let r = self.product(&e(i), &self.product(&e(j), &e(k)));
                    if l != r {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Dimension of the radical of the trace form `(a, b) ↦ Tr(L_{ab})`,
    /// which in characteristic zero is the Jacobson radical.
    pub fn radical_dim(&self) -> usize {
        let n = self.dim();
        // Tr(L_c) for basis element c: Σᵢ mult[c][i][i]
        let tr: Vec<GaussRat> = (0..n)
            .map(|c| (0..n).fold(GaussRat::ZERO, |acc, i| &acc + &self.mult[c][i][i]))
            .collect();
        let rows: Vec<_> = (0..n)
            .map(|a| {
                let row: Vec<GaussRat> = (0..n)
                    .map(|b| {
                        self.mult[a][b]
                            .iter()
                            .zip(&tr)
                            .fold(GaussRat::ZERO, |acc, (m, t)| &acc + &(m * t))
                    })
                    .collect();
                sparse_from_dense(&row)
            })
            .collect();
        kernel(n, &rows).len()
    }

    /// `End/rad ≅ ℂ`, i.e. the object is indecomposable over ℂ.
    pub fn is_local(&self) -> bool {
        self.dim() > 0 && self.dim() - self.radical_dim() == 1
    }
}

pub fn end_algebra(g: &GradedMF) -> Result<EndAlgebra, HomError> {
    let space = hom_space(g, g)?;
    let n = space.dim();
    let mut mult = vec![vec![Vec::new(); n]; n];
    for i in 0..n {
        for j in 0..n {
            mult[i][j] = space.coordinates(&space.basis[i].after(&space.basis[j]))?;
        }
    }
    let identity = if n == 0 {
        Vec::new()
    } else {
        space.coordinates(&Morphism::identity(g))?
    };
    Ok(EndAlgebra {
        space,
        mult,
        identity,
    })
}

/// `dim End(g) = 1`. The zero object is not indecomposable.
pub fn is_indecomposable(g: &GradedMF) -> Result<bool, HomError> {
    Ok(g.size() > 0 && super::hom::hom_dim(g, g)? == 1)
}

/// Indecomposability for arbitrary inputs: `End(g)` is local.
pub fn is_indecomposable_local(g: &GradedMF) -> Result<bool, HomError> {
    Ok(g.size() > 0 && end_algebra(g)?.is_local())
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SplitError {
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("the object has a unit entry; reduce it first")]
    NotReduced,
    #[error("the map is not idempotent up to homotopy")]
    NotIdempotent,
}

/// A summand cut out by an idempotent, with `projection ∘ inclusion = id`
/// and `inclusion ∘ projection = e` up to homotopy.
#[derive(Clone, Debug)]
pub struct Split {
    pub summand: GradedMF,
    pub inclusion: Morphism,
    pub projection: Morphism,
    /// The summand cut out by `1 − e`.
    pub complement: GradedMF,
}

fn is_reduced(g: &GradedMF) -> bool {
    g.phi().constant_part().is_zero() && g.psi().constant_part().is_zero()
}

/// `Σ_{k≥0} (1 − u)ᵏ` for `u ≡ 1` modulo positive-degree terms.
fn unipotent_inverse(u: &Morphism) -> Morphism {
    let id = Morphism::new(PMat::identity(u.phi0.rows()), PMat::identity(u.phi1.rows()));
    let x = id.sub(u);
    let mut term = id.clone();
    let mut sum = id;
    loop {
        term = term.after(&x);
        if term.is_zero() {
            return sum;
        }
        sum = sum.add(&term);
    }
}

fn constant(m: &Morphism) -> (Mat, Mat) {
    (m.phi0.constant_part(), m.phi1.constant_part())
}

/// Columns for a degree-preserving change of basis diagonalising the
/// constant idempotent `p`: in each class of equal `S` the image vectors
/// come first. Returns `(V, V⁻¹, image slots)`.
fn diagonalise(p: &Mat, s: &[Rat]) -> (Mat, Mat, Vec<usize>) {
    let r = s.len();
    let mut classes: BTreeMap<&Rat, Vec<usize>> = BTreeMap::new();
    for (i, x) in s.iter().enumerate() {
        classes.entry(x).or_default().push(i);
    }
    let mut v = Mat::zeros(r, r);
    let mut image = Vec::new();
    for slots in classes.values() {
        let m = slots.len();
        let mut block = Mat::zeros(m, m);
        for (a, &i) in slots.iter().enumerate() {
            for (b, &j) in slots.iter().enumerate() {
                block[(a, b)] = p[(i, j)].clone();
            }
        }
        let img = Mat::identity(m).sub(&block).kernel();
        let ker = block.kernel();
        for (c, vec) in img.iter().chain(ker.iter()).enumerate() {
            for (a, &i) in slots.iter().enumerate() {
                v[(i, slots[c])] = vec[a].clone();
            }
        }
        image.extend(slots[..img.len()].iter().copied());
    }
    image.sort();
    let vinv = v.inverse().expect("image and kernel of an idempotent span");
    (v, vinv, image)
}

fn complement_slots(n: usize, keep: &[usize]) -> Vec<usize> {
    (0..n).filter(|i| !keep.contains(i)).collect()
}

/// Splits `g` along an idempotent class `e` of `End(g)`.
pub fn split_idempotent(g: &GradedMF, e: &Morphism) -> Result<Split, SplitError> {
    if !is_reduced(g) {
        return Err(SplitError::NotReduced);
    }
    let space = hom_space(g, g)?;
    let c = space.coordinates(e)?;
    let c2 = space.coordinates(&e.after(e))?;
    if c != c2 {
        return Err(SplitError::NotIdempotent);
    }
    Ok(split_checked(g, e))
}

/// [`split_idempotent`] for an `e` already known to be idempotent up to
/// homotopy on a reduced `g`.
fn split_checked(g: &GradedMF, e: &Morphism) -> Split {
    // strict idempotent lift; e² − e has entries of positive degree
    let mut ehat = e.clone();
    loop {
        let sq = ehat.after(&ehat);
        if sq == ehat {
            break;
        }
        let cube = sq.after(&ehat);
        ehat = sq
            .scale(&GaussRat::int(3))
            .sub(&cube.scale(&GaussRat::int(2)));
    }
    let (p0, p1) = constant(&ehat);
    let pm = Morphism::new(PMat::from_const(&p0), PMat::from_const(&p1));
    let id = Morphism::identity(g);
    // u·p = ê·u, u ≡ 1 modulo positive degree
    let u = ehat.after(&pm).add(&id.sub(&ehat).after(&id.sub(&pm)));
    let uinv = unipotent_inverse(&u);
    let (v0, v0inv, img0) = diagonalise(&p0, g.s0());
    let (v1, v1inv, img1) = diagonalise(&p1, g.s1());
    let t0 = u.phi0.mul(&PMat::from_const(&v0));
    let t1 = u.phi1.mul(&PMat::from_const(&v1));
    let t0inv = PMat::from_const(&v0inv).mul(&uinv.phi0);
    let t1inv = PMat::from_const(&v1inv).mul(&uinv.phi1);
    let moved = g.transform(&t0inv, &t0, &t1inv, &t1);
    let r = g.size();
    let all: Vec<usize> = (0..r).collect();
    let (c0, c1) = (complement_slots(r, &img0), complement_slots(r, &img1));
    Split {
        summand: moved.select(&img0, &img1),
        inclusion: Morphism::new(t0.select(&all, &img0), t1.select(&all, &img1)),
        projection: Morphism::new(t0inv.select(&img0, &all), t1inv.select(&img1, &all)),
        complement: moved.select(&c0, &c1),
    }
}

/// Catalog objects that could be summands of `g` by grading alone.
fn candidates(cat: &Catalog, g: &GradedMF) -> Vec<(u32, i64)> {
    let (g0, g1) = g.s_multiset();
    let contains = |big: &[Rat], small: &[Rat]| {
        let mut i = 0;
        for x in small {
            while i < big.len() && big[i] < *x {
                i += 1;
            }
            if i == big.len() || big[i] != *x {
                return false;
            }
            i += 1;
        }
        true
    };
    let h = cat.h() as i64;
    let mut out = Vec::new();
    for k in cat.vertices() {
        let t0 = &cat.traceless(k)[0];
        let mut seen = Vec::new();
        for s in &g0 {
            let phase = s - t0;
            let twice_n = &(&phase * &Rat::int(h)) - &Rat::int(cat.sigma(k) as i64);
            if !twice_n.is_integer() || twice_n.floor_i64().rem_euclid(2) != 0 {
                continue;
            }
            let n = twice_n.floor_i64() / 2;
            if seen.contains(&n) {
                continue;
            }
            seen.push(n);
            let m = cat.object(k, n).expect("vertex in range").gmf;
            let (m0, m1) = m.s_multiset();
            if contains(&g0, &m0) && contains(&g1, &m1) {
                out.push((k, n));
            }
        }
    }
    out
}

/// Splits off one catalog summand of a reduced `g`: maps `f: g → M`,
/// `i: M → g` with `f ∘ i = id_M`, so that `i ∘ f` is a primitive idempotent.
fn split_one(cat: &Catalog, g: &GradedMF) -> Result<Option<((u32, i64), Split)>, SplitError> {
    for (k, n) in candidates(cat, g) {
        let m = cat.object(k, n).expect("vertex in range").gmf;
        let into = hom_space(&m, g)?;
        if into.dim() == 0 {
            continue;
        }
        let out = hom_space(g, &m)?;
        let endm = hom_space(&m, &m)?;
        for a in &into.basis {
            for b in &out.basis {
                let c = endm.coordinates(&b.after(a))?;
                if c[0].is_zero() {
                    continue;
                }
                let f = b.scale(&c[0].inv());
                // f∘a ≃ id_M, so e = a∘f is idempotent up to homotopy
                let e = a.after(&f);
                let split = split_checked(g, &e);
                return Ok(Some(((k, n), split)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DecomposeError {
    #[error(transparent)]
    Split(#[from] SplitError),
    #[error("a summand of size {size} has no catalog summand")]
    Stuck { size: usize },
}

/// Krull–Schmidt decomposition of `g` into catalog objects `(k, n)`,
/// in the order they were split off.
pub fn decompose(cat: &Catalog, g: &GradedMF) -> Result<Vec<(u32, i64)>, DecomposeError> {
    let mut rest = g.reduce();
    let mut out = Vec::new();
    while rest.size() > 0 {
        match split_one(cat, &rest)? {
            Some((kn, s)) => {
                out.push(kn);
                rest = s.complement;
            }
            None => return Err(DecomposeError::Stuck { size: rest.size() }),
        }
    }
    Ok(out)
}
