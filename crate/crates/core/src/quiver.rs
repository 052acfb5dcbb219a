//! Dynkin quivers, path counting and positive roots.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rand::Rng;

use crate::catalog::{DynkinDiagram, PrincipalDecomposition};
use crate::gring::AdeType;

/// A Dynkin diagram with every edge given a direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinQuiver {
    pub diagram: DynkinDiagram,
    /// `(source, target)`, one per edge of the diagram.
    pub arrows: Vec<(u32, u32)>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum QuiverError {
    #[error("arrow {0}->{1} is not an edge of the diagram")]
    NotAnEdge(u32, u32),
    #[error("edge {0}-{1} has no direction")]
    Missing(u32, u32),
}

impl DynkinQuiver {
    /// Checks that the arrows orient each edge exactly once.
    pub fn new(diagram: DynkinDiagram, arrows: Vec<(u32, u32)>) -> Result<Self, QuiverError> {
        let edges: BTreeSet<(u32, u32)> = diagram
            .edges
            .iter()
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        let mut seen = BTreeSet::new();
        for &(s, t) in &arrows {
            let e = (s.min(t), s.max(t));
            if !edges.contains(&e) || !seen.insert(e) {
                return Err(QuiverError::NotAnEdge(s, t));
            }
        }
        if let Some(&(a, b)) = edges.iter().find(|e| !seen.contains(e)) {
            return Err(QuiverError::Missing(a, b));
        }
        Ok(DynkinQuiver { diagram, arrows })
    }

    /// Every arrow from the odd-distance class to the even-distance class.
    pub fn principal(diagram: DynkinDiagram, principal: &PrincipalDecomposition) -> Self {
        let arrows = diagram
            .edges
            .iter()
            .map(|&(a, b)| {
                if principal.pi1.contains(&a) {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        DynkinQuiver { diagram, arrows }
    }

    /// Each edge oriented by a fair coin.
    pub fn random<R: Rng>(diagram: DynkinDiagram, rng: &mut R) -> Self {
        let arrows = diagram
            .edges
            .iter()
            .map(|&(a, b)| if rng.gen::<bool>() { (a, b) } else { (b, a) })
            .collect();
        DynkinQuiver { diagram, arrows }
    }

    /// Every arrow reversed.
    pub fn opposite(&self) -> Self {
        DynkinQuiver {
            diagram: self.diagram.clone(),
            arrows: self.arrows.iter().map(|&(s, t)| (t, s)).collect(),
        }
    }

    pub fn rank(&self) -> u32 {
        self.diagram.rank()
    }

    pub fn successors(&self, k: u32) -> Vec<u32> {
        self.arrows
            .iter()
            .filter(|a| a.0 == k)
            .map(|a| a.1)
            .collect()
    }
}

impl fmt::Display for DynkinQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .arrows
            .iter()
            .map(|(s, t)| format!("{s}->{t}"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Path counts of a quiver's path algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathAlgebraSummary {
    pub quiver: DynkinQuiver,
    /// Number of paths, including the trivial ones.
    pub dim: usize,
    /// `hom_dims[k−1][k′−1]` = number of paths from `k` to `k′`.
    pub hom_dims: Vec<Vec<usize>>,
}

pub fn path_hom_dims(q: &DynkinQuiver) -> PathAlgebraSummary {
    let l = q.rank() as usize;
    let mut hom = vec![vec![0usize; l]; l];
    for start in 1..=l as u32 {
        // the quiver is acyclic, so a DFS over paths terminates
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            hom[start as usize - 1][v as usize - 1] += 1;
            stack.extend(q.successors(v));
        }
    }
    let dim = hom.iter().flatten().sum();
    PathAlgebraSummary {
        quiver: q.clone(),
        dim,
        hom_dims: hom,
    }
}

/// Positive roots in the basis of simple roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PositiveRoots {
    pub ty: AdeType,
    pub roots: Vec<Vec<i64>>,
    pub highest: Vec<i64>,
}

impl PositiveRoots {
    pub fn count(&self) -> usize {
        self.roots.len()
    }
}

/// `(α, β)` for the symmetric Cartan form of the diagram.
fn pairing(d: &DynkinDiagram, a: &[i64], b: &[i64]) -> i64 {
    let mut s: i64 = a.iter().zip(b).map(|(x, y)| 2 * x * y).sum();
    for &(u, v) in &d.edges {
        let (u, v) = (u as usize - 1, v as usize - 1);
        s -= a[u] * b[v] + a[v] * b[u];
    }
    s
}

/// Closure of the simple roots under `α ↦ α + αᵢ` when `(α, αᵢ) = −1`,
/// which for a simply-laced system yields exactly the positive roots.
pub fn positive_roots(ty: AdeType) -> PositiveRoots {
    let d = DynkinDiagram::new(ty);
    let l = ty.rank() as usize;
    let simple: Vec<Vec<i64>> = (0..l)
        .map(|i| (0..l).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut found: BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut queue: VecDeque<Vec<i64>> = simple.iter().cloned().collect();
    while let Some(a) = queue.pop_front() {
        for s in &simple {
            if pairing(&d, &a, s) == -1 {
                let b: Vec<i64> = a.iter().zip(s).map(|(x, y)| x + y).collect();
                if found.insert(b.clone()) {
                    queue.push_back(b);
                }
            }
        }
    }
    let mut roots: Vec<Vec<i64>> = found.into_iter().collect();
    roots.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    let highest = roots.last().cloned().unwrap_or_default();
    PositiveRoots { ty, roots, highest }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{principal_decomposition, Catalog};
    use rand::SeedableRng;

    #[test]
    fn root_counts() {
        for l in 1..9 {
            assert_eq!(
                positive_roots(AdeType::A(l)).count() as u32,
                l * (l + 1) / 2
            );
        }
        for l in 4..9 {
            assert_eq!(positive_roots(AdeType::D(l)).count() as u32, l * (l - 1));
        }
        assert_eq!(positive_roots(AdeType::E6).count(), 36);
        assert_eq!(positive_roots(AdeType::E7).count(), 63);
        assert_eq!(positive_roots(AdeType::E8).count(), 120);
    }

    #[test]
    fn highest_root_is_nu() {
        for ty in crate::catalog::all_types(8) {
            let c = Catalog::get(ty, 1).unwrap();
            let hr = positive_roots(ty).highest;
            let nu: Vec<i64> = c.vertices().map(|k| c.nu(k) as i64).collect();
            assert_eq!(hr, nu, "{ty}");
        }
    }

    #[test]
    fn path_counts() {
        let a2 = DynkinQuiver::new(DynkinDiagram::new(AdeType::A(2)), vec![(1, 2)]).unwrap();
        assert_eq!(path_hom_dims(&a2).dim, 3);
        let a5 = DynkinQuiver::new(
            DynkinDiagram::new(AdeType::A(5)),
            (1..5).map(|i| (i, i + 1)).collect(),
        )
        .unwrap();
        assert_eq!(path_hom_dims(&a5).dim, 15);
        assert!(DynkinQuiver::new(DynkinDiagram::new(AdeType::A(3)), vec![(1, 2)]).is_err());
        assert!(
            DynkinQuiver::new(DynkinDiagram::new(AdeType::A(3)), vec![(1, 3), (2, 3)]).is_err()
        );
    }

    #[test]
    fn principal_orientations() {
        let a3 = principal_decomposition(AdeType::A(3), 2).unwrap();
        let q = DynkinQuiver::principal(DynkinDiagram::new(AdeType::A(3)), &a3);
        assert_eq!(q.arrows, vec![(1, 2), (3, 2)]);
        let d4 = principal_decomposition(AdeType::D(4), 1).unwrap();
        let q = DynkinQuiver::principal(DynkinDiagram::new(AdeType::D(4)), &d4);
        assert!(q.arrows.iter().all(|&(_, t)| t == 2));
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = DynkinQuiver::random(DynkinDiagram::new(AdeType::E8), &mut rng);
        assert_eq!(
            path_hom_dims(&r)
                .hom_dims
                .iter()
                .map(|row| row.iter().filter(|&&x| x > 0).count())
                .sum::<usize>(),
            path_hom_dims(&r).dim
        );
        assert_eq!(r.opposite().opposite(), r);
    }
}
