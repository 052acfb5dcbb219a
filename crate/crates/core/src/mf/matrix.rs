use std::fmt;

use crate::gring::{GaussRat, Poly};
use crate::linalg::Mat;

/// Dense matrix of polynomials, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct PMat {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PMat {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        PMat::scalar(n, &Poly::one())
    }

    pub fn scalar(n: usize, p: &Poly) -> Self {
        let mut m = PMat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, p.clone());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        assert!(rows.iter().all(|v| v.len() == c), "ragged matrix");
        PMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_const(m: &Mat) -> Self {
        PMat {
            rows: m.rows,
            cols: m.cols,
            data: m.data.iter().map(|c| Poly::constant(c.clone())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Poly)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.cols, k % self.cols, p))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|p| p.is_zero())
    }

    pub fn mul(&self, o: &PMat) -> PMat {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = PMat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(a * b);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &PMat) -> PMat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> PMat {
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> PMat {
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.scale(c)).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&Poly) -> Poly) -> PMat {
        PMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &PMat, b: &PMat, c: &PMat, d: &PMat) -> PMat {
        assert_eq!(a.rows, b.rows);
        assert_eq!(c.rows, d.rows);
        assert_eq!(a.cols, c.cols);
        assert_eq!(b.cols, d.cols);
        let mut out = PMat::zeros(a.rows + c.rows, a.cols + b.cols);
        for (src, r0, c0) in [
            (a, 0, 0),
            (b, 0, a.cols),
            (c, a.rows, 0),
            (d, a.rows, a.cols),
        ] {
            for (i, j, p) in src.entries() {
                out.set(r0 + i, c0 + j, p.clone());
            }
        }
        out
    }

    pub fn block_diag(a: &PMat, b: &PMat) -> PMat {
        PMat::block(
            a,
            &PMat::zeros(a.rows, b.cols),
            &PMat::zeros(b.rows, a.cols),
            b,
        )
    }

    /// Rows `rs` and columns `cs`, in the given order.
    pub fn select(&self, rs: &[usize], cs: &[usize]) -> PMat {
        let mut out = PMat::zeros(rs.len(), cs.len());
        for (a, &i) in rs.iter().enumerate() {
            for (b, &j) in cs.iter().enumerate() {
                out.set(a, b, self.get(i, j).clone());
            }
        }
        out
    }

    /// Constant parts of every entry.
    pub fn constant_part(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p.constant_term()).collect(),
        }
    }

    /// `row[dst] += c · row[src]`
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = self.get(src, j);
            if s.is_zero() {
                continue;
            }
            let v = self.get(dst, j) + &(c * s);
            self.set(dst, j, v);
        }
    }

    /// `col[dst] += c · col[src]`
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, c: &Poly) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = self.get(i, src);
            if s.is_zero() {
                continue;
            }
            let v = self.get(i, dst) + &(s * c);
            self.set(i, dst, v);
        }
    }
}

impl fmt::Display for PMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}
