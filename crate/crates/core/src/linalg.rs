//! Dense matrices over a [`Field`]: echelon forms, rank, kernels and
//! linear solves. Sizes in this crate stay in the hundreds, so a plain
//! row-major `Vec` is enough.

use crate::field::{Elem, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

// Serialized as a list of rows.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq((0..self.rows).map(|i| self.row(i)))
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Elem::ONE);
        }
        m
    }

    /// Builds a matrix from rows; every row must have length `cols`.
    pub fn from_rows(cols: usize, rows: &[Vec<Elem>]) -> Matrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix rows");
            data.extend_from_slice(r);
        }
        Matrix { rows: rows.len(), cols, data }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Elem {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn push_row(&mut self, row: &[Elem]) {
        assert_eq!(row.len(), self.cols);
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = f.add(out.get(i, j), f.mul(a, other.get(l, j)));
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, f: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Elem::ZERO; self.cols];
        for (i, &c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(c, self.get(i, j)));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, f: &Field, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows).map(|i| dot(f, self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Reduced row echelon form with zero rows dropped, plus pivot columns.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = f.inv(m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.data.truncate(r * m.cols);
        m.rows = r;
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis (as rows) of the right kernel `{x : self · x = 0}`.
    pub fn kernel(&self, f: &Field) -> Matrix {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(0, self.cols);
        for &fc in &free {
            let mut v = vec![Elem::ZERO; self.cols];
            v[fc] = Elem::ONE;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = f.neg(r.get(i, fc));
            }
            out.push_row(&v);
        }
        out
    }

    /// Solves `self · x = rhs`. Returns a particular solution and a basis of
    /// the homogeneous solutions, or `None` when inconsistent.
    pub fn solve(&self, f: &Field, rhs: &[Elem]) -> Option<(Vec<Elem>, Matrix)> {
        assert_eq!(rhs.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, self.cols, rhs[i]);
        }
        let (r, pivots) = aug.rref(f);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Elem::ZERO; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = r.get(i, self.cols);
        }
        Some((x, self.kernel(f)))
    }

    /// Whether `v` lies in the row space.
    pub fn row_space_contains(&self, f: &Field, v: &[Elem]) -> bool {
        let base = self.rank(f);
        let mut m = self.clone();
        m.push_row(v);
        m.rank(f) == base
    }

    /// Whether every row of `other` lies in the row space of `self`.
    pub fn row_space_contains_all(&self, f: &Field, other: &Matrix) -> bool {
        self.rank(f) == self.stack(other).rank(f)
    }
}

pub fn dot(f: &Field, a: &[Elem], b: &[Elem]) -> Elem {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Elem::ZERO, |acc, (&x, &y)| f.add(acc, f.mul(x, y)))
}

pub fn vec_add(f: &Field, a: &[Elem], b: &[Elem]) -> Vec<Elem> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

pub fn vec_scale(f: &Field, c: Elem, a: &[Elem]) -> Vec<Elem> {
    a.iter().map(|&x| f.mul(c, x)).collect()
}

/// Hamming weight.
pub fn weight(v: &[Elem]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(f: &Field, rows: &[&[u32]]) -> Matrix {
        let cols = rows[0].len();
        let rs: Vec<Vec<Elem>> = rows.iter().map(|r| r.iter().map(|&x| f.element(x).unwrap()).collect()).collect();
        Matrix::from_rows(cols, &rs)
    }

    #[test]
    fn rank_and_kernel_over_f3() {
        let f = Field::prime(3).unwrap();
        let a = m(&f, &[&[1, 2, 0, 1], &[2, 1, 0, 2], &[0, 0, 1, 1]]);
        assert_eq!(a.rank(&f), 2);
        let k = a.kernel(&f);
        assert_eq!(k.rows(), 2);
        for i in 0..k.rows() {
            assert!(a.mul_vec(&f, k.row(i)).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn rref_is_idempotent() {
        let f = Field::new(2, 2, None).unwrap();
        let a = m(&f, &[&[2, 3, 1], &[1, 1, 0], &[3, 2, 1]]);
        let (r, p) = a.rref(&f);
        let (r2, p2) = r.rref(&f);
        assert_eq!(r, r2);
        assert_eq!(p, p2);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = Field::prime(5).unwrap();
        let a = m(&f, &[&[1, 1], &[1, 1]]);
        let rhs = [Elem(2), Elem(2)];
        let (x, k) = a.solve(&f, &rhs).unwrap();
        assert_eq!(a.mul_vec(&f, &x), rhs.to_vec());
        assert_eq!(k.rows(), 1);
        assert!(a.solve(&f, &[Elem(1), Elem(2)]).is_none());
    }

    #[test]
    fn identity_product() {
        let f = Field::prime(7).unwrap();
        let a = m(&f, &[&[3, 4, 5], &[6, 0, 1]]);
        assert_eq!(a.mul(&f, &Matrix::identity(3)), a);
        assert_eq!(Matrix::identity(2).mul(&f, &a), a);
        assert_eq!(a.transpose().transpose(), a);
    }
}
