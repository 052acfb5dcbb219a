use std::collections::VecDeque;

use super::MatrixFactorization;
use crate::rat::Rat;

/// All grading matrices of a factorization: `traceless + φ·1` for phases
/// `φ ∈ residue + (2/h)ℤ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradingFamily {
    pub traceless: Vec<Rat>,
    /// Smallest nonnegative admissible phase.
    pub residue: Rat,
    pub step: Rat,
}

impl GradingFamily {
    pub fn is_admissible(&self, phase: &Rat) -> bool {
        (&(phase - &self.residue) / &self.step).is_integer()
    }

    /// The grading at phase `phase`, if it puts the `P0` generators in `(2/h)ℤ`.
    pub fn at_phase(&self, phase: &Rat) -> Option<Vec<Rat>> {
        self.is_admissible(phase)
            .then(|| self.traceless.iter().map(|q| q + phase).collect())
    }

    /// The `n`-th admissible phase, `residue + n·2/h`.
    pub fn phase(&self, n: i64) -> Rat {
        &self.residue + &(&self.step * &Rat::int(n))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GradingSolveError {
    #[error("entry ({row},{col}) is not homogeneous")]
    NonHomogeneous { row: usize, col: usize },
    #[error("degrees are inconsistent at entry ({row},{col})")]
    Inconsistent { row: usize, col: usize },
    #[error("slots split into several unlinked groups; the grading is not unique up to phase")]
    Disconnected,
}

/// Solves `S_I − S_J = deg Q_IJ − 1` over the nonzero entries.
pub fn solve_grading(m: &MatrixFactorization) -> Result<GradingFamily, GradingSolveError> {
    let w = &m.ring.w;
    let n = 2 * m.size();
    let step = Rat::new(2, w.h as i64);
    // edges (I, J, S_I − S_J)
    let mut adj: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); n];
    for i in 0..n {
        for j in 0..n {
            let Some(p) = m.q_entry(i, j) else { continue };
            if p.is_zero() {
                continue;
            }
            let d = p
                .weighted_degree(w)
                .map_err(|_| GradingSolveError::NonHomogeneous { row: i, col: j })?;
            let diff = &d - &Rat::ONE;
            adj[j].push((i, diff.clone()));
            adj[i].push((j, -diff));
        }
    }
    if n == 0 {
        return Ok(GradingFamily {
            traceless: Vec::new(),
            residue: Rat::ZERO,
            step,
        });
    }
    let mut s: Vec<Option<Rat>> = vec![None; n];
    s[0] = Some(Rat::ZERO);
    let mut queue = VecDeque::from([0usize]);
    while let Some(j) = queue.pop_front() {
        let sj = s[j].clone().expect("queued slot is set");
        for (i, diff) in &adj[j] {
            let want = &sj + diff;
            match &s[*i] {
                Some(v) if *v != want => {
                    return Err(GradingSolveError::Inconsistent { row: *i, col: j })
                }
                Some(_) => {}
                None => {
                    s[*i] = Some(want);
                    queue.push_back(*i);
                }
            }
        }
    }
    let s: Vec<Rat> = s
        .into_iter()
        .collect::<Option<_>>()
        .ok_or(GradingSolveError::Disconnected)?;
    let mean = &s.iter().fold(Rat::ZERO, |a, b| &a + b) / &Rat::int(n as i64);
    let traceless: Vec<Rat> = s.iter().map(|x| x - &mean).collect();
    // P0 generators sit in (2/h)ℤ: φ ≡ −traceless[0] mod 2/h
    let t = &(-&traceless[0]) / &step;
    let frac = &t - &Rat::int(t.floor_i64());
    let residue = &frac * &step;
    Ok(GradingFamily {
        traceless,
        residue,
        step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gring::{ade_polynomial, AdeType, Poly};
    use crate::mf::{PMat, Ring};

    #[test]
    fn a_type_family_matches_closed_form() {
        for l in 1..7u32 {
            for b in 1..=l {
                let (f, w) = ade_polynomial(AdeType::A(l), b).unwrap();
                for k in 1..=l {
                    let xa = Poly::x().pow(l + 1 - k);
                    let xk = Poly::x().pow(k);
                    let phi = PMat::from_rows(vec![
                        vec![Poly::y(), xa.clone()],
                        vec![xk.clone(), -&Poly::z()],
                    ]);
                    let psi = PMat::from_rows(vec![vec![Poly::z(), xa], vec![xk, -&Poly::y()]]);
                    let m = MatrixFactorization::new(Ring::new(f.clone(), w), phi, psi);
                    let fam = solve_grading(&m).unwrap();
                    let h = (l + 1) as i64;
                    let q = Rat::new(b as i64 - k as i64, h);
                    let qb = Rat::new(h - b as i64 - k as i64, h);
                    assert_eq!(fam.traceless, vec![q.clone(), -&q, qb.clone(), -&qb]);
                    // σ/h with σ ≡ b − k mod 2
                    let sigma = if (b as i64 - k as i64).rem_euclid(2) == 1 {
                        1
                    } else {
                        2
                    };
                    assert!(fam.is_admissible(&Rat::new(sigma, h)));
                    assert!(!fam.is_admissible(&Rat::new(sigma + 1, h)));
                }
            }
        }
    }

    #[test]
    fn non_homogeneous_entry() {
        let (f, w) = ade_polynomial(AdeType::A(2), 1).unwrap();
        let phi = PMat::from_rows(vec![vec![&Poly::x() + &Poly::z()]]);
        let m = MatrixFactorization::new(Ring::new(f, w), phi, PMat::zeros(1, 1));
        assert!(matches!(
            solve_grading(&m),
            Err(GradingSolveError::NonHomogeneous { .. })
        ));
    }
}
