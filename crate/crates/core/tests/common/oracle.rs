//! Dense brute-force Hom dimensions, kept apart from the library's solver.
//!
//! Every unknown coefficient gets its own column; the cocycle and boundary
//! maps are evaluated on unit inputs and row-reduced with pivots taken from
//! the last column and the last nonzero row.

use std::collections::BTreeMap;

use mfcat::gring::{GaussRat, Mono, Poly};
use mfcat::mf::{GradedMF, Morphism, PMat};
use mfcat::rat::Rat;

/// Monomials of degree `d` (a variable of weight `a` has degree `2a/h`),
/// found by trying every exponent triple up to the bound.
fn monomials(g: &GradedMF, d: &Rat) -> Vec<Mono> {
    let w = g.ring().w;
    let [a, b, c] = w.weights();
    let target = d * &Rat::new(w.h as i64, 2);
    if target.signum() < 0 || !target.is_integer() {
        return Vec::new();
    }
    let t = target.floor_i64() as u32;
    let mut out = Vec::new();
    for i in 0..=t {
        for j in 0..=t {
            for k in 0..=t {
                if i * a + j * b + k * c == t {
                    out.push(Mono::new(i as u16, j as u16, k as u16));
                }
            }
        }
    }
    out
}

type Key = (u8, usize, usize, Mono);

fn flatten(m: &Morphism) -> BTreeMap<Key, GaussRat> {
    let mut v = BTreeMap::new();
    for (tag, mat) in [(0u8, &m.phi0), (1u8, &m.phi1)] {
        for (i, j, p) in mat.entries() {
            for (mono, c) in p.terms() {
                if !c.is_zero() {
                    v.insert((tag, i, j, *mono), c.clone());
                }
            }
        }
    }
    v
}

fn unit(rows: usize, cols: usize, i: usize, j: usize, m: Mono) -> PMat {
    let mut p = PMat::zeros(rows, cols);
    p.set(i, j, Poly::mono(m));
    p
}

fn rank(cols: Vec<BTreeMap<Key, GaussRat>>) -> usize {
    let mut keys: Vec<Key> = cols.iter().flat_map(|c| c.keys().cloned()).collect();
    keys.sort();
    keys.dedup();
    let idx: BTreeMap<Key, usize> = keys.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let mut a: Vec<Vec<GaussRat>> = vec![vec![GaussRat::ZERO; cols.len()]; keys.len()];
    for (j, c) in cols.iter().enumerate() {
        for (k, v) in c {
            a[idx[k]][j] = v.clone();
        }
    }
    let nrows = a.len();
    let mut done = vec![false; nrows];
    let mut r = 0;
    for col in (0..cols.len()).rev() {
        let Some(p) = (0..nrows).rev().find(|&i| !done[i] && !a[i][col].is_zero()) else {
            continue;
        };
        done[p] = true;
        r += 1;
        let inv = a[p][col].inv();
        let prow = a[p].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == p || row[col].is_zero() {
                continue;
            }
            let f = &row[col] * &inv;
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &(&f * y);
                }
            }
        }
    }
    r
}

pub fn hom_dim(src: &GradedMF, dst: &GradedMF) -> usize {
    let (r, rp) = (src.size(), dst.size());
    if r == 0 || rp == 0 {
        return 0;
    }
    let (s0, s1, d0, d1) = (src.s0(), src.s1(), dst.s0(), dst.s1());
    let one = Rat::ONE;
    let zero = PMat::zeros(rp, r);

    let mut cocycle = Vec::new();
    let mut n_even = 0;
    for half in 0..2 {
        let (ds, ss) = if half == 0 { (d0, s0) } else { (d1, s1) };
        for i in 0..rp {
            for j in 0..r {
                for m in monomials(src, &(&ds[i] - &ss[j])) {
                    let u = unit(rp, r, i, j, m);
                    let f = if half == 0 {
                        Morphism::new(u, zero.clone())
                    } else {
                        Morphism::new(zero.clone(), u)
                    };
                    let e0 = dst.phi().mul(&f.phi1).sub(&f.phi0.mul(src.phi()));
                    let e1 = dst.psi().mul(&f.phi0).sub(&f.phi1.mul(src.psi()));
                    cocycle.push(flatten(&Morphism::new(e0, e1)));
                    n_even += 1;
                }
            }
        }
    }

    let mut bounds = Vec::new();
    for half in 0..2 {
        // h0: P0 → P1′, h1: P1 → P0′
        let (ds, ss) = if half == 0 { (d1, s0) } else { (d0, s1) };
        for i in 0..rp {
            for j in 0..r {
                for m in monomials(src, &(&(&ds[i] - &ss[j]) - &one)) {
                    let u = unit(rp, r, i, j, m);
                    let b = if half == 0 {
                        Morphism::new(dst.phi().mul(&u), u.mul(src.phi()))
                    } else {
                        Morphism::new(u.mul(src.psi()), dst.psi().mul(&u))
                    };
                    bounds.push(flatten(&b));
                }
            }
        }
    }
    n_even - rank(cocycle) - rank(bounds)
}
