//! Removal of contractible `(u, f/u)` summands.

use super::{GradedMF, Morphism, PMat};
use crate::gring::Poly;

/// Output of reduction. `projection ∘ inclusion = id`, and
/// `inclusion ∘ projection` is homotopic to the identity of the input.
#[derive(Clone, Debug)]
pub struct Reduction {
    pub object: GradedMF,
    /// `object → input`; zero-sized matrices unless witnesses were requested.
    pub inclusion: Morphism,
    /// `input → object`
    pub projection: Morphism,
}

/// Working state: `phi = a·phi₀·b⁻¹`, `psi = b·psi₀·a⁻¹`.
struct State {
    phi: PMat,
    psi: PMat,
    track: Option<[PMat; 4]>, // a, a⁻¹, b, b⁻¹
}

impl State {
    /// `row k += c·row i` on psi, i.e. `b ← E·b`.
    fn psi_row_op(&mut self, k: usize, i: usize, c: &Poly, swapped: bool) {
        self.psi.add_row_multiple(k, i, c);
        self.phi.add_col_multiple(i, k, &-c);
        if let Some(t) = &mut self.track {
            let (l, li) = if swapped { (0, 1) } else { (2, 3) };
            t[l].add_row_multiple(k, i, c);
            t[li].add_col_multiple(i, k, &-c);
        }
    }

    /// `col l += d·col j` on psi, i.e. `a⁻¹ ← a⁻¹·E`.
    fn psi_col_op(&mut self, l: usize, j: usize, d: &Poly, swapped: bool) {
        self.psi.add_col_multiple(l, j, d);
        self.phi.add_row_multiple(j, l, &-d);
        if let Some(t) = &mut self.track {
            let (r, ri) = if swapped { (2, 3) } else { (0, 1) };
            t[ri].add_col_multiple(l, j, d);
            t[r].add_row_multiple(j, l, &-d);
        }
    }

    fn swap(&mut self) {
        std::mem::swap(&mut self.phi, &mut self.psi);
    }
}

fn constant_unit(p: &Poly) -> bool {
    p.len() == 1 && p.terms()[0].0.is_one()
}

pub(super) fn reduce(g: &GradedMF, witness: bool) -> Reduction {
    let r = g.size();
    let mut st = State {
        phi: g.phi().clone(),
        psi: g.psi().clone(),
        track: witness.then(|| {
            [
                PMat::identity(r),
                PMat::identity(r),
                PMat::identity(r),
                PMat::identity(r),
            ]
        }),
    };
    let mut alive0 = vec![true; r];
    let mut alive1 = vec![true; r];
    loop {
        // first unit, scanning phi then psi row-major
        let mut found = None;
        'scan: for (swapped, m) in [(true, &st.phi), (false, &st.psi)] {
            for (i, j, p) in m.entries() {
                let live = if swapped {
                    alive0[i] && alive1[j]
                } else {
                    alive1[i] && alive0[j]
                };
                if live && constant_unit(p) {
                    found = Some((swapped, i, j));
                    break 'scan;
                }
            }
        }
        let Some((swapped, i, j)) = found else { break };
        // In the unswapped case psi[i][j] is the unit: i is a P1 slot, j a P0 slot.
        if swapped {
            st.swap();
        }
        let uinv = st.psi.get(i, j).constant_term().inv();
        for k in 0..r {
            if k == i || st.psi.get(k, j).is_zero() {
                continue;
            }
            let c = st.psi.get(k, j).scale(&-&uinv);
            st.psi_row_op(k, i, &c, swapped);
        }
        for l in 0..r {
            if l == j || st.psi.get(i, l).is_zero() {
                continue;
            }
            let d = st.psi.get(i, l).scale(&-&uinv);
            st.psi_col_op(l, j, &d, swapped);
        }
        if swapped {
            st.swap();
            alive0[i] = false;
            alive1[j] = false;
        } else {
            alive1[i] = false;
            alive0[j] = false;
        }
    }
    let keep0: Vec<usize> = (0..r).filter(|&i| alive0[i]).collect();
    let keep1: Vec<usize> = (0..r).filter(|&i| alive1[i]).collect();
    let all: Vec<usize> = (0..r).collect();
    let mut work = g.clone();
    work.mf.phi = st.phi;
    work.mf.psi = st.psi;
    let object = work.select(&keep0, &keep1);
    let (inclusion, projection) = match st.track {
        Some([a, a_inv, b, b_inv]) => (
            Morphism::new(a_inv.select(&all, &keep0), b_inv.select(&all, &keep1)),
            Morphism::new(a.select(&keep0, &all), b.select(&keep1, &all)),
        ),
        None => (
            Morphism::new(PMat::zeros(0, 0), PMat::zeros(0, 0)),
            Morphism::new(PMat::zeros(0, 0), PMat::zeros(0, 0)),
        ),
    };
    Reduction {
        object,
        inclusion,
        projection,
    }
}
