//! Degree-0 morphisms modulo homotopy, by exact linear algebra over the
//! monomial coefficients of every matrix entry.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::gring::{GaussRat, Mono, Poly, WeightSystem};
use crate::linalg::{kernel, Echelon, SparseVec};
use crate::mf::{GradedMF, Homotopy, Morphism, PMat};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("objects live over different rings")]
    RingMismatch,
    #[error("morphism endpoints do not match")]
    Endpoints,
    #[error("map is not a degree-0 cocycle between the given objects")]
    NotCocycle,
}

/// Unknown coefficients for the two blocks of a (possibly odd) map.
/// Block 0 has rows indexed by `rows[0]` and columns by `cols[0]`, etc.
#[derive(Debug)]
pub(crate) struct Layout {
    shape: [(usize, usize); 2],
    vars: Vec<(usize, usize, usize, Mono)>,
    index: HashMap<(usize, usize, usize, Mono), usize>,
}

impl Layout {
    /// Entry `(i, j)` of block `b` ranges over monomials of degree
    /// `rows[b][i] − cols[b][j] + shift`.
    fn new(w: &WeightSystem, rows: [&[Rat]; 2], cols: [&[Rat]; 2], shift: &Rat) -> Layout {
        let mut vars = Vec::new();
        let mut index = HashMap::new();
        let mut basis_cache: HashMap<Rat, Vec<Mono>> = HashMap::new();
        for b in 0..2 {
            for (i, ri) in rows[b].iter().enumerate() {
                for (j, cj) in cols[b].iter().enumerate() {
                    let d = &(ri - cj) + shift;
                    if d.signum() < 0 {
                        continue;
                    }
                    let monos = basis_cache
                        .entry(d.clone())
                        .or_insert_with(|| w.monomial_basis(&d));
                    for m in monos.iter() {
                        index.insert((b, i, j, *m), vars.len());
                        vars.push((b, i, j, *m));
                    }
                }
            }
        }
        Layout {
            shape: [
                (rows[0].len(), cols[0].len()),
                (rows[1].len(), cols[1].len()),
            ],
            vars,
            index,
        }
    }

    pub(crate) fn len(&self) -> usize {
        self.vars.len()
    }

    /// Coordinates of a pair of matrices; `None` if some term is not a slot.
    fn coords(&self, blocks: [&PMat; 2]) -> Option<SparseVec> {
        let mut v = Vec::new();
        for (b, m) in blocks.iter().enumerate() {
            for (i, j, p) in m.entries() {
                for (mono, c) in p.terms() {
                    v.push((*self.index.get(&(b, i, j, *mono))?, c.clone()));
                }
            }
        }
        v.sort_by_key(|e| e.0);
        Some(v)
    }

    fn matrices(&self, v: &SparseVec) -> [PMat; 2] {
        let mut acc: [BTreeMap<(usize, usize), Vec<(Mono, GaussRat)>>; 2] =
            [BTreeMap::new(), BTreeMap::new()];
        for (k, c) in v {
            let (b, i, j, m) = self.vars[*k];
            acc[b].entry((i, j)).or_default().push((m, c.clone()));
        }
        let mut out = [
            PMat::zeros(self.shape[0].0, self.shape[0].1),
            PMat::zeros(self.shape[1].0, self.shape[1].1),
        ];
        for b in 0..2 {
            for ((i, j), terms) in std::mem::take(&mut acc[b]) {
                out[b].set(i, j, Poly::from_terms(terms));
            }
        }
        out
    }
}

/// Accumulates `coef · p` into the sparse row map keyed by `(block, a, b, mono)`.
fn scatter(
    rows: &mut HashMap<(usize, usize, usize, Mono), SparseVec>,
    key: (usize, usize, usize),
    p: &Poly,
    m: Mono,
    col: usize,
    sign: &GaussRat,
) {
    for (t, c) in p.terms() {
        rows.entry((key.0, key.1, key.2, t.mul(m)))
            .or_default()
            .push((col, c * sign));
    }
}

/// The cocycle system and homotopy image for one pair of objects.
pub(crate) struct HomSystem {
    pub(crate) even: Layout,
    /// Rows of the cocycle condition, one per (equation block, entry, monomial).
    pub(crate) cocycle_rows: Vec<SparseVec>,
    /// Images of the odd basis maps under `H ↦ Q′H + HQ`, in even coordinates.
    pub(crate) boundaries: Vec<SparseVec>,
}

impl HomSystem {
    pub(crate) fn new(src: &GradedMF, dst: &GradedMF) -> HomSystem {
        let w = &src.ring().w;
        let even = Layout::new(w, [dst.s0(), dst.s1()], [src.s0(), src.s1()], &Rat::ZERO);
        let odd = Layout::new(w, [dst.s1(), dst.s0()], [src.s0(), src.s1()], &Rat::int(-1));
        let (phi, psi, phid, psid) = (src.phi(), src.psi(), dst.phi(), dst.psi());
        let one = GaussRat::ONE;
        let neg = GaussRat::int(-1);

        // E0 = phi′·φ1 − φ0·phi (P1 → P0′), E1 = psi′·φ0 − φ1·psi (P0 → P1′)
        let mut eq: HashMap<(usize, usize, usize, Mono), SparseVec> = HashMap::new();
        for (col, &(b, i, j, m)) in even.vars.iter().enumerate() {
            if b == 0 {
                for c in 0..phi.cols() {
                    scatter(&mut eq, (0, i, c), phi.get(j, c), m, col, &neg);
                }
                for a in 0..psid.rows() {
                    scatter(&mut eq, (1, a, j), psid.get(a, i), m, col, &one);
                }
            } else {
                for a in 0..phid.rows() {
                    scatter(&mut eq, (0, a, j), phid.get(a, i), m, col, &one);
                }
                for c in 0..psi.cols() {
                    scatter(&mut eq, (1, i, c), psi.get(j, c), m, col, &neg);
                }
            }
        }
        let mut keys: Vec<_> = eq.keys().copied().collect();
        keys.sort();
        let cocycle_rows = keys
            .into_iter()
            .filter_map(|k| {
                let mut row = eq.remove(&k).expect("key present");
                row.sort_by_key(|e| e.0);
                merge_sorted(&mut row);
                (!row.is_empty()).then_some(row)
            })
            .collect();

        // boundary of h0 (P0 → P1′) and h1 (P1 → P0′):
        // φ0 = phi′·h0 + h1·psi, φ1 = psi′·h1 + h0·phi
        let mut boundaries = Vec::with_capacity(odd.len());
        for &(b, i, j, m) in &odd.vars {
            let mut acc: BTreeMap<usize, GaussRat> = BTreeMap::new();
            let mut add = |blk: usize, r: usize, c: usize, p: &Poly| {
                for (t, coef) in p.terms() {
                    let k = even.index[&(blk, r, c, t.mul(m))];
                    let e = acc.entry(k).or_insert(GaussRat::ZERO);
                    *e += coef;
                }
            };
            if b == 0 {
                for a in 0..phid.rows() {
                    add(0, a, j, phid.get(a, i));
                }
                for c in 0..phi.cols() {
                    add(1, i, c, phi.get(j, c));
                }
            } else {
                for c in 0..psi.cols() {
                    add(0, i, c, psi.get(j, c));
                }
                for a in 0..psid.rows() {
                    add(1, a, j, psid.get(a, i));
                }
            }
            let v: SparseVec = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
            if !v.is_empty() {
                boundaries.push(v);
            }
        }
        HomSystem {
            even,
            cocycle_rows,
            boundaries,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        let n = self.even.len();
        let mut c = Echelon::new(n);
        for r in &self.cocycle_rows {
            c.insert(r, None);
        }
        let mut b = Echelon::new(n);
        for v in &self.boundaries {
            b.insert(v, None);
        }
        n - c.rank() - b.rank()
    }
}

fn merge_sorted(row: &mut SparseVec) {
    let mut out: SparseVec = Vec::with_capacity(row.len());
    for (k, c) in row.drain(..) {
        match out.last_mut() {
            Some((k2, c2)) if *k2 == k => *c2 += &c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    *row = out;
}

/// `Hom(src, dst)` in the homotopy category: a basis of cocycles whose
/// classes are independent modulo homotopy.
pub struct HomSpace {
    pub src: GradedMF,
    pub dst: GradedMF,
    pub basis: Vec<Morphism>,
    system: HomSystem,
    /// Boundaries tagged zero, basis vectors tagged by position.
    coords: Echelon,
}

impl std::fmt::Debug for HomSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HomSpace")
            .field("dim", &self.dim())
            .field("unknowns", &self.system.even.len())
            .finish()
    }
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the class of `m` in `basis`; `NotCocycle` when `m`
    /// has entries of the wrong degree or fails the cocycle condition.
    pub fn coordinates(&self, m: &Morphism) -> Result<Vec<GaussRat>, HomError> {
        if !m.is_cocycle(&self.src, &self.dst) {
            return Err(HomError::NotCocycle);
        }
        let v = self
            .system
            .even
            .coords([&m.phi0, &m.phi1])
            .ok_or(HomError::NotCocycle)?;
        let (rem, tag) = self.coords.reduce(&v);
        if !rem.is_empty() {
            return Err(HomError::NotCocycle);
        }
        Ok(tag)
    }

    /// `Σ cᵢ · basisᵢ`
    pub fn combine(&self, c: &[GaussRat]) -> Morphism {
        let mut m = Morphism::zero(&self.src, &self.dst);
        for (ci, b) in c.iter().zip(&self.basis) {
            if !ci.is_zero() {
                m = m.add(&b.scale(ci));
            }
        }
        m
    }

    pub fn is_null_homotopic(&self, m: &Morphism) -> Result<bool, HomError> {
        Ok(self.coordinates(m)?.iter().all(|c| c.is_zero()))
    }

    /// Number of unknown coefficients in the even system.
    pub fn unknowns(&self) -> usize {
        self.system.even.len()
    }
}

pub fn hom_space(src: &GradedMF, dst: &GradedMF) -> Result<HomSpace, HomError> {
    if src.ring() != dst.ring() {
        return Err(HomError::RingMismatch);
    }
    let system = HomSystem::new(src, dst);
    let n = system.even.len();
    let cycles = kernel(n, &system.cocycle_rows);
    let mut seed = Echelon::new(n);
    for v in &system.boundaries {
        seed.insert(v, None);
    }
    let mut chosen = Vec::new();
    for v in cycles {
        if seed.insert(&v, None) {
            chosen.push(v);
        }
    }
    let d = chosen.len();
    let mut coords = Echelon::with_tags(n, d);
    for v in &system.boundaries {
        coords.insert(v, None);
    }
    for (i, v) in chosen.iter().enumerate() {
        let mut tag = vec![GaussRat::ZERO; d];
        tag[i] = GaussRat::ONE;
        coords.insert(v, Some(tag));
    }
    let basis = chosen
        .iter()
        .map(|v| {
            let [a, b] = system.even.matrices(v);
            Morphism::new(a, b)
        })
        .collect();
    Ok(HomSpace {
        src: src.clone(),
        dst: dst.clone(),
        basis,
        system,
        coords,
    })
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct HomKey {
    src: crate::mf::MatrixFactorization,
    dst: crate::mf::MatrixFactorization,
    s_src: Vec<Rat>,
    s_dst: Vec<Rat>,
}

fn cache() -> &'static Mutex<HashMap<HomKey, usize>> {
    static C: OnceLock<Mutex<HashMap<HomKey, usize>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `dim Hom(src, dst)`, memoised on the pair up to a common shift of `S`.
pub fn hom_dim(src: &GradedMF, dst: &GradedMF) -> Result<usize, HomError> {
    if src.ring() != dst.ring() {
        return Err(HomError::RingMismatch);
    }
    if src.size() == 0 || dst.size() == 0 {
        return Ok(0);
    }
    let base = src.s[0].clone();
    let key = HomKey {
        src: src.mf.clone(),
        dst: dst.mf.clone(),
        s_src: src.s.iter().map(|x| x - &base).collect(),
        s_dst: dst.s.iter().map(|x| x - &base).collect(),
    };
    if let Some(&d) = cache().lock().expect("hom cache poisoned").get(&key) {
        return Ok(d);
    }
    let d = HomSystem::new(src, dst).dim();
    cache().lock().expect("hom cache poisoned").insert(key, d);
    Ok(d)
}

/// Class of `g ∘ f` in `Hom(X, Z)` for `f ∈ Hom(X, Y)`, `g ∈ Hom(Y, Z)`.
pub fn compose(f: &Morphism, g: &Morphism, target: &HomSpace) -> Result<Vec<GaussRat>, HomError> {
    if f.phi0.cols() != target.src.size()
        || g.phi0.rows() != target.dst.size()
        || f.phi0.rows() != g.phi0.cols()
    {
        return Err(HomError::Endpoints);
    }
    target.coordinates(&g.after(f))
}

/// The homotopy `(φ1·∂p0, φ0·∂p1)` with `∂` the derivative in variable `v`,
/// whose boundary is `∂f·Φ` for a cocycle `Φ`.
pub fn jacobi_homotopy(src: &GradedMF, phi: &Morphism, v: usize) -> Homotopy {
    let dphi = src.phi().map(|p| p.derivative(v));
    let dpsi = src.psi().map(|p| p.derivative(v));
    // Q′Φ = ΦQ gives Q′(Φ∂Q) + (Φ∂Q)Q = Φ(Q∂Q + ∂Q·Q) = ∂f·Φ
    Homotopy {
        h0: phi.phi1.mul(&dpsi),
        h1: phi.phi0.mul(&dphi),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Catalog;
    use crate::gring::AdeType;

    #[test]
    fn identity_spans_end_of_indecomposable() {
        for ty in [AdeType::A(3), AdeType::D(5), AdeType::E6] {
            let c = Catalog::get(ty, 1).unwrap();
            for k in c.vertices() {
                let x = c.object(k, 0).unwrap().gmf;
                let h = hom_space(&x, &x).unwrap();
                assert_eq!(h.dim(), 1, "{ty} k={k}");
                let id = Morphism::identity(&x);
                assert!(!h.is_null_homotopic(&id).unwrap());
                assert_eq!(hom_dim(&x, &x).unwrap(), 1);
            }
        }
    }

    #[test]
    fn e6_five_to_six() {
        let c = Catalog::get(AdeType::E6, 1).unwrap();
        let x = c.object(5, 0).unwrap().gmf;
        for n in -1..8 {
            let y = c.object(6, 0).unwrap().gmf.tau(n);
            let gap = (&(&y.phase() - &x.phase()) * &Rat::int(12)).floor_i64();
            let want = usize::from(gap == 4 || gap == 10);
            assert_eq!(hom_dim(&x, &y).unwrap(), want, "gap {gap}");
        }
    }

    #[test]
    fn zero_object_has_no_maps() {
        let c = Catalog::get(AdeType::A(2), 1).unwrap();
        let x = c.object(1, 0).unwrap().gmf;
        let z = GradedMF::trivial(c.ring.clone(), x.s[0].clone());
        assert_eq!(hom_space(&z, &x).unwrap().dim(), 0);
        assert_eq!(hom_space(&x, &z).unwrap().dim(), 0);
    }

    #[test]
    fn jacobi_multiples_are_null() {
        let c = Catalog::get(AdeType::E6, 1).unwrap();
        let x = c.object(1, 0).unwrap().gmf;
        let y = c.object(2, 0).unwrap().gmf;
        let h = hom_space(&x, &y).unwrap();
        for b in &h.basis {
            for v in 0..3 {
                let hz = jacobi_homotopy(&x, b, v);
                let df = c.ring.f.derivative(v);
                let want = Morphism::new(b.phi0.map(|p| p * &df), b.phi1.map(|p| p * &df));
                assert_eq!(hz.boundary(&x, &y), want);
            }
        }
    }
}
