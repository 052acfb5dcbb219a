//! The indecomposable graded factorizations `M̃ᵏₙ` of each ADE singularity.
//!
//! Vertex labels for `E₇` and `E₈` follow the labeling under which the
//! matrices, gradings and Hom tables agree (see [`DynkinDiagram`]).

mod tables;

use std::collections::{HashMap, VecDeque};
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use crate::gring::{ade_polynomial, parse_poly, AdeError, AdeType, Poly};
use crate::mf::{solve_grading, GradedMF, MatrixFactorization, PMat, Ring};
use crate::rat::Rat;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error(transparent)]
    Ade(#[from] AdeError),
    #[error("vertex {k} is not in 1..={rank}")]
    InvalidVertex { k: u32, rank: u32 },
    #[error("catalog data for vertex {k} is inconsistent: {reason}")]
    Inconsistent { k: u32, reason: String },
}

/// Undirected Dynkin tree on vertices `1..=l`.
///
/// * `A_l`: path `1–2–…–l`
/// * `D_l`: path `1–…–(l−2)`, with `l−1` and `l` both attached to `l−2`
/// * `E₆`: path `5–3–2–4–6`, with `1` attached to `2`
/// * `E₇`: path `7–6–5–3–2–1`, with `4` attached to `3`
/// * `E₈`: path `1–2–3–4–5–7–8`, with `6` attached to `5`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinDiagram {
    pub ty: AdeType,
    pub edges: Vec<(u32, u32)>,
}

impl DynkinDiagram {
    pub fn new(ty: AdeType) -> Self {
        let path = |v: &[u32]| v.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>();
        let edges = match ty {
            AdeType::A(l) => path(&(1..=l).collect::<Vec<_>>()),
            AdeType::D(l) => {
                let mut e = path(&(1..=l - 2).collect::<Vec<_>>());
                e.push((l - 2, l - 1));
                e.push((l - 2, l));
                e
            }
            AdeType::E6 => {
                let mut e = path(&[5, 3, 2, 4, 6]);
                e.push((1, 2));
                e
            }
            AdeType::E7 => {
                let mut e = path(&[7, 6, 5, 3, 2, 1]);
                e.push((4, 3));
                e
            }
            AdeType::E8 => {
                let mut e = path(&[1, 2, 3, 4, 5, 7, 8]);
                e.push((6, 5));
                e
            }
        };
        DynkinDiagram { ty, edges }
    }

    pub fn rank(&self) -> u32 {
        self.ty.rank()
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.rank()
    }

    pub fn neighbors(&self, k: u32) -> Vec<u32> {
        let mut v: Vec<u32> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == k {
                    Some(b)
                } else if b == k {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        v.sort();
        v
    }

    /// Graph distances from `k` to every vertex, indexed by vertex − 1.
    pub fn distances_from(&self, k: u32) -> Vec<u32> {
        let l = self.rank() as usize;
        let mut d = vec![u32::MAX; l];
        d[k as usize - 1] = 0;
        let mut q = VecDeque::from([k]);
        while let Some(v) = q.pop_front() {
            for n in self.neighbors(v) {
                if d[n as usize - 1] == u32::MAX {
                    d[n as usize - 1] = d[v as usize - 1] + 1;
                    q.push_back(n);
                }
            }
        }
        d
    }

    pub fn distance(&self, k: u32, kp: u32) -> u32 {
        self.distances_from(k)[kp as usize - 1]
    }

    /// The trivalent vertex, if any.
    pub fn trivalent(&self) -> Option<u32> {
        self.vertices().find(|&v| self.neighbors(v).len() == 3)
    }
}

pub fn dynkin_distance(ty: AdeType, k: u32, kp: u32) -> Result<u32, CatalogError> {
    for v in [k, kp] {
        check_vertex(ty, v)?;
    }
    Ok(DynkinDiagram::new(ty).distance(k, kp))
}

fn check_vertex(ty: AdeType, k: u32) -> Result<(), CatalogError> {
    if k == 0 || k > ty.rank() {
        return Err(CatalogError::InvalidVertex { k, rank: ty.rank() });
    }
    Ok(())
}

/// `Π₁` holds the vertices at odd distance from the base, `Π₂` the rest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrincipalDecomposition {
    pub base: u32,
    pub pi1: Vec<u32>,
    pub pi2: Vec<u32>,
}

impl PrincipalDecomposition {
    pub fn sigma(&self, k: u32) -> u32 {
        if self.pi1.contains(&k) {
            1
        } else {
            2
        }
    }
}

pub fn principal_decomposition(
    ty: AdeType,
    b: u32,
) -> Result<PrincipalDecomposition, CatalogError> {
    ty.check_b(b)?;
    let dia = DynkinDiagram::new(ty);
    let base = if ty.is_a() {
        b
    } else {
        dia.trivalent().expect("D and E diagrams branch")
    };
    let dist = dia.distances_from(base);
    let (pi1, pi2) = dia.vertices().partition(|&v| dist[v as usize - 1] % 2 == 1);
    Ok(PrincipalDecomposition { base, pi1, pi2 })
}

/// `M̃ᵏₙ` with its rank datum `ν_k` and class `σ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogObject {
    pub k: u32,
    pub n: i64,
    pub gmf: GradedMF,
    pub nu: u32,
    pub sigma: u32,
}

impl CatalogObject {
    /// `(2n + σ)/h`
    pub fn phase(&self) -> Rat {
        self.gmf.phase()
    }
}

/// Half-open phase interval `(lo, hi]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PhaseWindow {
    pub lo: Rat,
    pub hi: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("expected a window of the form a..b with rational ends, got {0:?}")]
pub struct WindowParseError(pub String);

impl PhaseWindow {
    pub fn new(lo: Rat, hi: Rat) -> Self {
        PhaseWindow { lo, hi }
    }

    pub fn contains(&self, x: &Rat) -> bool {
        *x > self.lo && *x <= self.hi
    }
}

impl FromStr for PhaseWindow {
    type Err = WindowParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || WindowParseError(s.to_string());
        let (a, b) = s.split_once("..").ok_or_else(err)?;
        let lo: Rat = a.trim().parse().map_err(|_| err())?;
        let hi: Rat = b.trim().parse().map_err(|_| err())?;
        Ok(PhaseWindow { lo, hi })
    }
}

/// All indecomposables of one ADE type (and `b` for `A_l`), with the
/// `Q` matrices and traceless gradings checked against each other.
#[derive(Debug)]
pub struct Catalog {
    pub ty: AdeType,
    pub b: u32,
    pub ring: Ring,
    pub diagram: DynkinDiagram,
    pub principal: PrincipalDecomposition,
    mfs: Vec<MatrixFactorization>,
    traceless: Vec<Vec<Rat>>,
    q: Vec<(Vec<Rat>, Vec<Rat>)>,
}

fn parse_matrix(rows: &[String]) -> PMat {
    PMat::from_rows(
        rows.iter()
            .map(|r| {
                r.split(',')
                    .map(|e| parse_poly(e).expect("catalog entry parses"))
                    .collect::<Vec<Poly>>()
            })
            .collect(),
    )
}

fn plus_minus(vals: &[Rat]) -> Vec<Rat> {
    let mut v: Vec<Rat> = vals.iter().flat_map(|q| [q.clone(), -q]).collect();
    v.sort();
    v
}

impl Catalog {
    pub fn new(ty: AdeType, b: u32) -> Result<Catalog, CatalogError> {
        let b = if ty.is_a() { b } else { 1 };
        let (f, w) = ade_polynomial(ty, b)?;
        let ring = Ring::new(f, w);
        let diagram = DynkinDiagram::new(ty);
        let principal = principal_decomposition(ty, b)?;
        let h = w.h as i64;
        let mut mfs = Vec::new();
        let mut traceless = Vec::new();
        let mut qs = Vec::new();
        for k in 1..=ty.rank() {
            let e = tables::entry(ty, k);
            let phi = parse_matrix(&e.phi);
            let psi = e
                .psi
                .as_ref()
                .map_or_else(|| phi.clone(), |p| parse_matrix(p));
            let mf = MatrixFactorization::new(ring.clone(), phi, psi);
            let (q, qbar) = match ty {
                AdeType::A(l) => tables::a_grading(l, b, k),
                _ => (e.q.clone(), e.qbar.clone()),
            };
            let q: Vec<Rat> = q.iter().map(|&v| Rat::new(v, h)).collect();
            let qbar: Vec<Rat> = qbar.iter().map(|&v| Rat::new(v, h)).collect();
            let bad = |reason: String| CatalogError::Inconsistent { k, reason };
            let fam = solve_grading(&mf).map_err(|e| bad(e.to_string()))?;
            let r = mf.size();
            let mut s0 = fam.traceless[..r].to_vec();
            let mut s1 = fam.traceless[r..].to_vec();
            s0.sort();
            s1.sort();
            if s0 != plus_minus(&q) || s1 != plus_minus(&qbar) {
                return Err(bad(format!(
                    "solved grading {:?} differs from (±q; ±q̄)",
                    fam.traceless
                )));
            }
            let sigma = principal.sigma(k) as i64;
            if !fam.is_admissible(&Rat::new(sigma, h)) {
                return Err(bad(format!("phase {sigma}/{h} is off the degree lattice")));
            }
            mfs.push(mf);
            traceless.push(fam.traceless);
            qs.push((q, qbar));
        }
        Ok(Catalog {
            ty,
            b,
            ring,
            diagram,
            principal,
            mfs,
            traceless,
            q: qs,
        })
    }

    /// Shared instance per `(type, b)`.
    pub fn get(ty: AdeType, b: u32) -> Result<Arc<Catalog>, CatalogError> {
        static CACHE: OnceLock<Mutex<HashMap<(AdeType, u32), Arc<Catalog>>>> = OnceLock::new();
        let b = if ty.is_a() { b } else { 1 };
        let cache = CACHE.get_or_init(Default::default);
        if let Some(c) = cache.lock().expect("catalog cache poisoned").get(&(ty, b)) {
            return Ok(c.clone());
        }
        let c = Arc::new(Catalog::new(ty, b)?);
        Ok(cache
            .lock()
            .expect("catalog cache poisoned")
            .entry((ty, b))
            .or_insert(c)
            .clone())
    }

    pub fn rank(&self) -> u32 {
        self.ty.rank()
    }

    pub fn h(&self) -> u32 {
        self.ring.w.h
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.rank()
    }

    pub fn check_vertex(&self, k: u32) -> Result<(), CatalogError> {
        check_vertex(self.ty, k)
    }

    pub fn mf(&self, k: u32) -> &MatrixFactorization {
        &self.mfs[k as usize - 1]
    }

    /// `ν_k`, half the size of `Qᵏ`'s blocks.
    pub fn nu(&self, k: u32) -> u32 {
        (self.mf(k).size() / 2) as u32
    }

    pub fn sigma(&self, k: u32) -> u32 {
        self.principal.sigma(k)
    }

    /// Table data `(q; q̄)` for vertex `k`.
    pub fn q_data(&self, k: u32) -> &(Vec<Rat>, Vec<Rat>) {
        &self.q[k as usize - 1]
    }

    /// The solved traceless grading, in slot order.
    pub fn traceless(&self, k: u32) -> &[Rat] {
        &self.traceless[k as usize - 1]
    }

    pub fn phase_of(&self, k: u32, n: i64) -> Rat {
        Rat::new(2 * n + self.sigma(k) as i64, self.h() as i64)
    }

    pub fn object(&self, k: u32, n: i64) -> Result<CatalogObject, CatalogError> {
        self.check_vertex(k)?;
        let phase = self.phase_of(k, n);
        let s = self.traceless(k).iter().map(|q| q + &phase).collect();
        Ok(CatalogObject {
            k,
            n,
            gmf: GradedMF::new(self.mf(k).clone(), s),
            nu: self.nu(k),
            sigma: self.sigma(k),
        })
    }

    /// `M̃ᵏₙ` with phase in `(lo, hi]`, sorted by `(phase, k)`.
    pub fn enumerate(&self, window: &PhaseWindow) -> Vec<CatalogObject> {
        let h = self.h() as i64;
        let mut out = Vec::new();
        if window.hi <= window.lo {
            return out;
        }
        for k in self.vertices() {
            let sigma = self.sigma(k) as i64;
            // (2n + σ)/h > lo  ⇔  n > (lo·h − σ)/2
            let n_lo =
                (&(&(&window.lo * &Rat::int(h)) - &Rat::int(sigma)) / &Rat::int(2)).floor_i64() + 1;
            let n_hi =
                (&(&(&window.hi * &Rat::int(h)) - &Rat::int(sigma)) / &Rat::int(2)).floor_i64();
            for n in n_lo..=n_hi {
                out.push(self.object(k, n).expect("vertex in range"));
            }
        }
        out.sort_by(|a, b| a.phase().cmp(&b.phase()).then(a.k.cmp(&b.k)));
        out
    }

    /// Which `(k, n)` has this exact `Q` block data and grading, if any.
    pub fn identify(&self, g: &GradedMF) -> Option<(u32, i64)> {
        for k in self.vertices() {
            if self.mf(k) != &g.mf {
                continue;
            }
            let phase = g.phase();
            let h = self.h() as i64;
            let twice_n = &(&phase * &Rat::int(h)) - &Rat::int(self.sigma(k) as i64);
            if !twice_n.is_integer() {
                continue;
            }
            let t = twice_n.floor_i64();
            if t % 2 == 0 && self.object(k, t / 2).ok()?.gmf == *g {
                return Some((k, t / 2));
            }
        }
        None
    }
}

pub fn build_object(ty: AdeType, b: u32, k: u32, n: i64) -> Result<CatalogObject, CatalogError> {
    Catalog::get(ty, b)?.object(k, n)
}

pub fn enumerate(
    ty: AdeType,
    b: u32,
    window: &PhaseWindow,
) -> Result<Vec<CatalogObject>, CatalogError> {
    Ok(Catalog::get(ty, b)?.enumerate(window))
}

/// Every ADE type of rank at most `max_rank` (with `D` from rank 4).
pub fn all_types(max_rank: u32) -> Vec<AdeType> {
    let mut v: Vec<AdeType> = (1..=max_rank).map(AdeType::A).collect();
    v.extend((4..=max_rank).map(AdeType::D));
    for (t, r) in [(AdeType::E6, 6), (AdeType::E7, 7), (AdeType::E8, 8)] {
        if r <= max_rank {
            v.push(t);
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distances() {
        assert_eq!(dynkin_distance(AdeType::E6, 5, 6).unwrap(), 4);
        assert_eq!(dynkin_distance(AdeType::D(4), 3, 4).unwrap(), 2);
        assert_eq!(dynkin_distance(AdeType::E8, 1, 8).unwrap(), 6);
        assert!(dynkin_distance(AdeType::E6, 0, 1).is_err());
        assert!(dynkin_distance(AdeType::E6, 7, 1).is_err());
    }

    #[test]
    fn base_vertices() {
        assert_eq!(principal_decomposition(AdeType::E6, 1).unwrap().base, 2);
        assert_eq!(principal_decomposition(AdeType::E7, 1).unwrap().base, 3);
        let e8 = principal_decomposition(AdeType::E8, 1).unwrap();
        assert_eq!(e8.base, 5);
        assert_eq!(DynkinDiagram::new(AdeType::E8).neighbors(5), vec![4, 6, 7]);
        let a3 = principal_decomposition(AdeType::A(3), 2).unwrap();
        assert_eq!(
            (a3.base, a3.pi1.clone(), a3.pi2.clone()),
            (2, vec![1, 3], vec![2])
        );
        assert_eq!(principal_decomposition(AdeType::D(6), 1).unwrap().base, 4);
    }

    #[test]
    fn e6_k2_object() {
        let o = build_object(AdeType::E6, 1, 2, 0).unwrap();
        assert_eq!(o.gmf.size(), 6);
        assert_eq!(o.nu, 3);
        assert_eq!(o.phase(), Rat::new(2, 12));
        let mut s0 = o.gmf.phase_split().traceless[..6].to_vec();
        s0.sort();
        let want: Vec<Rat> = [-4, -2, 0, 0, 2, 4]
            .iter()
            .map(|&v| Rat::new(v, 12))
            .collect();
        assert_eq!(s0, want);
    }

    #[test]
    fn window_counts() {
        let w = PhaseWindow::new(Rat::ZERO, Rat::int(2));
        assert_eq!(enumerate(AdeType::A(2), 1, &w).unwrap().len(), 6);
        let w1 = PhaseWindow::new(Rat::ZERO, Rat::ONE);
        assert_eq!(enumerate(AdeType::E8, 1, &w1).unwrap().len(), 120);
        let empty = PhaseWindow::new(Rat::ONE, Rat::ONE);
        assert!(enumerate(AdeType::E6, 1, &empty).unwrap().is_empty());
        assert_eq!("0..1".parse::<PhaseWindow>().unwrap(), w1);
        assert!("0-1".parse::<PhaseWindow>().is_err());
    }

    #[test]
    fn identify_round_trip() {
        let c = Catalog::get(AdeType::D(5), 1).unwrap();
        for k in c.vertices() {
            for n in -2..3 {
                assert_eq!(c.identify(&c.object(k, n).unwrap().gmf), Some((k, n)));
            }
        }
    }
}
