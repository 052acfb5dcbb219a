use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::hom::{hom_dim, HomError};
use crate::catalog::{Catalog, CatalogError};
use crate::gring::AdeType;

/// A finite multiset of integers, printed as `c^mult` tokens.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multiset(pub BTreeMap<i64, usize>);

impl Multiset {
    pub fn new() -> Self {
        Multiset(BTreeMap::new())
    }

    pub fn insert(&mut self, c: i64, mult: usize) {
        if mult > 0 {
            *self.0.entry(c).or_insert(0) += mult;
        }
    }

    pub fn from_values<I: IntoIterator<Item = i64>>(it: I) -> Self {
        let mut m = Multiset::new();
        for c in it {
            m.insert(c, 1);
        }
        m
    }

    /// Values with repetition, ascending.
    pub fn values(&self) -> Vec<i64> {
        self.0
            .iter()
            .flat_map(|(&c, &m)| std::iter::repeat(c).take(m))
            .collect()
    }

    pub fn mult(&self, c: i64) -> usize {
        self.0.get(&c).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn least(&self) -> Option<i64> {
        self.0.keys().next().copied()
    }

    pub fn greatest(&self) -> Option<i64> {
        self.0.keys().next_back().copied()
    }

    pub fn map(&self, f: impl Fn(i64) -> i64) -> Multiset {
        let mut m = Multiset::new();
        for (&c, &k) in &self.0 {
            m.insert(f(c), k);
        }
        m
    }

    pub fn union(&self, o: &Multiset) -> Multiset {
        let mut m = self.clone();
        for (&c, &k) in &o.0 {
            m.insert(c, k);
        }
        m
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, m) in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}^{m}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("bad multiset token {0:?}")]
pub struct MultisetParseError(pub String);

impl FromStr for Multiset {
    type Err = MultisetParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut m = Multiset::new();
        for tok in s.split_whitespace() {
            let bad = || MultisetParseError(tok.to_string());
            let (c, k) = match tok.split_once('^') {
                Some((c, k)) => (c.parse().map_err(|_| bad())?, k.parse().map_err(|_| bad())?),
                None => (tok.parse().map_err(|_| bad())?, 1),
            };
            if k == 0 {
                return Err(bad());
            }
            m.insert(c, k);
        }
        Ok(m)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TableError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("nonzero Hom at c = {c} outside [0, h-2] for ({k},{kp})")]
    OutOfRange { k: u32, kp: u32, c: i64 },
}

/// Extra steps scanned past each end of `[0, h−2]`, which must come out empty.
const GUARD: i64 = 2;

/// `𝔠(k, k′)`: the values `c = h·(φ(τⁿM^{k′}) − φ(M^k))` with multiplicity
/// `dim Hom(M^k_0, M^{k′}_n)`.
pub fn hom_multiset(cat: &Catalog, k: u32, kp: u32) -> Result<Multiset, TableError> {
    let x = cat.object(k, 0)?;
    cat.check_vertex(kp)?;
    let s = cat.sigma(k) as i64;
    let sp = cat.sigma(kp) as i64;
    let h = cat.h() as i64;
    // c = 2n + σ′ − σ
    let lo = (-2 * GUARD - sp + s).div_euclid(2);
    let hi = (h - 2 + 2 * GUARD - sp + s).div_euclid(2) + 1;
    let dims: Vec<(i64, usize)> = (lo..=hi)
        .into_par_iter()
        .map(|n| -> Result<(i64, usize), TableError> {
            let y = cat.object(kp, n)?;
            Ok((2 * n + sp - s, hom_dim(&x.gmf, &y.gmf)?))
        })
        .collect::<Result<_, _>>()?;
    let mut m = Multiset::new();
    for (c, d) in dims {
        if d > 0 && !(0..=h - 2).contains(&c) {
            return Err(TableError::OutOfRange { k, kp, c });
        }
        m.insert(c, d);
    }
    Ok(m)
}

/// All `𝔠(k, k′)` for one type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomTable {
    pub ty: AdeType,
    pub b: u32,
    pub entries: BTreeMap<(u32, u32), Multiset>,
}

impl HomTable {
    pub fn compute(cat: &Catalog) -> Result<HomTable, TableError> {
        let pairs: Vec<(u32, u32)> = cat
            .vertices()
            .flat_map(|k| cat.vertices().map(move |kp| (k, kp)))
            .collect();
        let entries = pairs
            .into_par_iter()
            .map(|(k, kp)| Ok(((k, kp), hom_multiset(cat, k, kp)?)))
            .collect::<Result<BTreeMap<_, _>, TableError>>()?;
        Ok(HomTable {
            ty: cat.ty,
            b: cat.b,
            entries,
        })
    }

    pub fn get(&self, k: u32, kp: u32) -> Option<&Multiset> {
        self.entries.get(&(k, kp))
    }

    pub fn rank(&self) -> u32 {
        self.entries.keys().map(|&(k, _)| k).max().unwrap_or(0)
    }
}

impl fmt::Display for HomTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = self.rank();
        for k in 1..=l {
            let cells: Vec<String> = (1..=l)
                .map(|kp| self.get(k, kp).map(|m| m.to_string()).unwrap_or_default())
                .collect();
            writeln!(f, "{k}: {}", cells.join(" | "))?;
        }
        Ok(())
    }
}
