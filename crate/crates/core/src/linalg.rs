//! Exact linear algebra over ℚ(√−1).
//!
//! Sparse vectors are sorted `(index, value)` lists without zeros. Pivots are
//! always the lowest nonzero index, which makes kernel bases come out with the
//! lexicographically smallest pivot columns.

use crate::gring::GaussRat;

pub type SparseVec = Vec<(usize, GaussRat)>;

/// Scales a sparse vector.
pub fn sparse_scale(v: &SparseVec, c: &GaussRat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, a)| (*i, a * c)).collect()
}

/// `a + c·b`
pub fn sparse_axpy(a: &SparseVec, c: &GaussRat, b: &SparseVec) -> SparseVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = c * &b[j].1;
            if !v.is_zero() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = &a[i].1 + &(c * &b[j].1);
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_from_dense(d: &[GaussRat]) -> SparseVec {
    d.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| (i, v.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<GaussRat> {
    let mut d = vec![GaussRat::ZERO; n];
    for (i, a) in v {
        d[*i] = a.clone();
    }
    d
}

#[derive(Clone, Debug)]
struct Row {
    /// Leading entry is the pivot and equals one.
    entries: SparseVec,
    tag: Vec<GaussRat>,
}

/// Incremental row-echelon form. Every row may carry a "tag", a coefficient
/// vector recording how the row was assembled from tagged inputs; reducing a
/// vector against the echelon then yields its coordinates in terms of those
/// inputs.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    ntags: usize,
    rows: Vec<Row>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon::with_tags(ncols, 0)
    }

    pub fn with_tags(ncols: usize, ntags: usize) -> Self {
        Echelon {
            ncols,
            ntags,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.entries[0].0).collect()
    }

    /// Reduces `v` against the current rows. Returns the remainder (zero iff
    /// `v` lies in the row span) and the accumulated tag of the rows that were
    /// subtracted, i.e. `v = Σ tag·inputs + remainder`.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, Vec<GaussRat>) {
        let mut tag = vec![GaussRat::ZERO; self.ntags];
        if v.is_empty() {
            return (Vec::new(), tag);
        }
        let mut buf = sparse_to_dense(v, self.ncols);
        let start = v[0].0;
        for i in start..self.ncols {
            if buf[i].is_zero() {
                continue;
            }
            if let Some(r) = self.pivot_row[i] {
                let row = &self.rows[r];
                let c = buf[i].clone();
                for (j, a) in &row.entries {
                    let t = &c * a;
                    buf[*j] -= &t;
                }
                for (t, a) in tag.iter_mut().zip(&row.tag) {
                    if !a.is_zero() {
                        *t += &(&c * a);
                    }
                }
            }
        }
        (sparse_from_dense(&buf), tag)
    }

    /// Adds `v` (with optional tag) if it is independent of the current rows.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, v: &SparseVec, tag: Option<Vec<GaussRat>>) -> bool {
        let (rem, used) = self.reduce(v);
        if rem.is_empty() {
            return false;
        }
        let mut tag = tag.unwrap_or_else(|| vec![GaussRat::ZERO; self.ntags]);
        for (t, u) in tag.iter_mut().zip(&used) {
            *t -= u;
        }
        let lead = rem[0].1.inv();
        let entries = sparse_scale(&rem, &lead);
        let tag = tag.iter().map(|t| t * &lead).collect();
        let p = entries[0].0;
        self.pivot_row[p] = Some(self.rows.len());
        self.rows.push(Row { entries, tag });
        true
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).0.is_empty()
    }

    /// Turns the echelon into reduced row-echelon form in place.
    fn make_reduced(&mut self) {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].entries[0].0));
        // Rows with larger pivots are already reduced when we reach them.
        for &r in &order {
            let row = self.rows[r].clone();
            let p = row.entries[0].0;
            for other in 0..self.rows.len() {
                if other == r {
                    continue;
                }
                let c = match self.rows[other].entries.binary_search_by(|e| e.0.cmp(&p)) {
                    Ok(k) => self.rows[other].entries[k].1.clone(),
                    Err(_) => continue,
                };
                let neg = -&c;
                let o = &mut self.rows[other];
                o.entries = sparse_axpy(&o.entries, &neg, &row.entries);
                for (t, a) in o.tag.iter_mut().zip(&row.tag) {
                    *t += &(&neg * a);
                }
            }
        }
    }
}

/// Rank of a family of sparse vectors of length `ncols`.
pub fn rank(ncols: usize, vecs: &[SparseVec]) -> usize {
    let mut e = Echelon::new(ncols);
    for v in vecs {
        e.insert(v, None);
    }
    e.rank()
}

/// Basis of `{x : row·x = 0 for every row}`. One vector per free column, in
/// increasing column order; each has a one at its free column and zeros at
/// the other free columns.
pub fn kernel(ncols: usize, rows: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(r, None);
    }
    kernel_of_echelon(e)
}

fn kernel_of_echelon(mut e: Echelon) -> Vec<SparseVec> {
    let ncols = e.ncols;
    e.make_reduced();
    let mut is_pivot = vec![false; ncols];
    for r in &e.rows {
        is_pivot[r.entries[0].0] = true;
    }
    // column -> list of (pivot, coefficient) of rows that mention it
    let mut col_hits: Vec<Vec<(usize, GaussRat)>> = vec![Vec::new(); ncols];
    for r in &e.rows {
        let p = r.entries[0].0;
        for (j, a) in &r.entries[1..] {
            col_hits[*j].push((p, a.clone()));
        }
    }
    let mut out = Vec::new();
    for f in 0..ncols {
        if is_pivot[f] {
            continue;
        }
        let mut v: SparseVec = col_hits[f].iter().map(|(p, a)| (*p, -a)).collect();
        v.push((f, GaussRat::ONE));
        v.sort_by_key(|t| t.0);
        out.push(v);
    }
    out
}

/// Dense matrix over ℚ(√−1), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<GaussRat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![GaussRat::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussRat::ONE;
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussRat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |v| v.len());
        let data = rows.into_iter().flatten().collect::<Vec<_>>();
        assert_eq!(data.len(), r * c);
        Mat {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn row(&self, i: usize) -> &[GaussRat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        assert_eq!(self.cols, o.rows);
        let mut out = Mat::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o[(k, j)];
                    if !b.is_zero() {
                        let t = a * b;
                        out[(i, j)] += &t;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols));
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &GaussRat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn trace(&self) -> GaussRat {
        let mut t = GaussRat::ZERO;
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    fn row_sparse(&self, i: usize) -> SparseVec {
        sparse_from_dense(self.row(i))
    }

    pub fn rank(&self) -> usize {
        let rows: Vec<SparseVec> = (0..self.rows).map(|i| self.row_sparse(i)).collect();
        rank(self.cols, &rows)
    }

    /// Right kernel basis (column vectors).
    pub fn kernel(&self) -> Vec<Vec<GaussRat>> {
        let rows: Vec<SparseVec> = (0..self.rows).map(|i| self.row_sparse(i)).collect();
        kernel(self.cols, &rows)
            .into_iter()
            .map(|v| sparse_to_dense(&v, self.cols))
            .collect()
    }

    /// Inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let piv = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if piv != col {
                for j in 0..n {
                    a.data.swap(piv * n + j, col * n + j);
                    inv.data.swap(piv * n + j, col * n + j);
                }
            }
            let c = a[(col, col)].inv();
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &c;
                inv[(col, j)] = &inv[(col, j)] * &c;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] -= &t;
                    let t = &f * &inv[(col, j)];
                    inv[(r, j)] -= &t;
                }
            }
        }
        Some(inv)
    }

    /// Solves `self · x = b` for one solution, if any.
    pub fn solve(&self, b: &[GaussRat]) -> Option<Vec<GaussRat>> {
        assert_eq!(b.len(), self.rows);
        // eliminate on [A | b]
        let n = self.cols;
        let mut e = Echelon::new(n + 1);
        for i in 0..self.rows {
            let mut r = self.row_sparse(i);
            if !b[i].is_zero() {
                r.push((n, b[i].clone()));
            }
            e.insert(&r, None);
        }
        e.make_reduced();
        let mut x = vec![GaussRat::ZERO; n];
        for r in &e.rows {
            let p = r.entries[0].0;
            if p == n {
                return None;
            }
            if let Some((_, v)) = r.entries.iter().find(|(j, _)| *j == n) {
                x[p] = v.clone();
            }
        }
        Some(x)
    }
}

impl std::ops::Index<(usize, usize)> for Mat {
    type Output = GaussRat;
    fn index(&self, (i, j): (usize, usize)) -> &GaussRat {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Mat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussRat {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: i64) -> GaussRat {
        GaussRat::int(n)
    }

    #[test]
    fn kernel_of_simple_system() {
        // x0 + x1 = 0, x2 = 0 over 4 columns -> kernel spanned by (-1,1,0,0), (0,0,0,1)
        let rows = vec![vec![(0, g(1)), (1, g(1))], vec![(2, g(1))]];
        let k = kernel(4, &rows);
        assert_eq!(k.len(), 2);
        assert_eq!(k[0], vec![(0, g(-1)), (1, g(1))]);
        assert_eq!(k[1], vec![(3, g(1))]);
    }

    #[test]
    fn tags_give_coordinates() {
        let mut e = Echelon::with_tags(3, 2);
        let a = vec![(0, g(1)), (1, g(2))];
        let b = vec![(1, g(1)), (2, g(1))];
        e.insert(&a, Some(vec![g(1), g(0)]));
        e.insert(&b, Some(vec![g(0), g(1)]));
        // 3a - 2b
        let v = sparse_axpy(&sparse_scale(&a, &g(3)), &g(-2), &b);
        let (rem, tag) = e.reduce(&v);
        assert!(rem.is_empty());
        assert_eq!(tag, vec![g(3), g(-2)]);
    }

    #[test]
    fn inverse_roundtrip() {
        let m = Mat::from_rows(vec![vec![g(0), g(1)], vec![GaussRat::I, g(3)]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), Mat::identity(2));
        assert!(Mat::from_rows(vec![vec![g(1), g(2)], vec![g(2), g(4)]])
            .inverse()
            .is_none());
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_rows(vec![vec![g(1), g(1)], vec![g(2), g(2)]]);
        let x = m.solve(&[g(3), g(6)]).unwrap();
        assert_eq!(&x[0] + &x[1], g(3));
        assert!(m.solve(&[g(3), g(5)]).is_none());
    }
}
