//! Small dense matrices over an exact or big-float field.

use crate::error::{Error, Result};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    pub n: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_cols(cols: Vec<Vec<F>>) -> Self {
        let n = cols.len();
        assert!(cols.iter().all(|c| c.len() == n), "matrix must be square");
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for col in &cols {
                rows.push(col[i].clone());
            }
        }
        Matrix { n, data: rows }
    }

    pub fn identity(n: usize, one: &F) -> Self {
        let zero = one.zero();
        let mut m = Matrix {
            n,
            data: vec![zero; n * n],
        };
        for i in 0..n {
            m[(i, i)] = one.clone();
        }
        m
    }

    pub fn diagonal(entries: Vec<F>) -> Self {
        let n = entries.len();
        let zero = entries[0].zero();
        let mut m = Matrix {
            n,
            data: vec![zero; n * n],
        };
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    pub fn mul(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let zero = self[(0, 0)].zero();
        let mut out = Matrix {
            n,
            data: vec![zero.clone(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let p = a.mul(&rhs[(k, j)]);
                    out[(i, j)] = out[(i, j)].add(&p);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix<F> {
        let n = self.n;
        let mut out = self.clone();
        for i in 0..n {
            for j in 0..n {
                out[(i, j)] = self[(j, i)].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> F {
        let mut t = self[(0, 0)].clone();
        for i in 1..self.n {
            t = t.add(&self[(i, i)]);
        }
        t
    }

    /// Determinant by fraction-free-ish Gaussian elimination (field division).
    pub fn det(&self) -> F {
        let n = self.n;
        let mut a = self.clone();
        let one = self[(0, 0)].one();
        let mut det = one.clone();
        let mut neg = false;
        for c in 0..n {
            let piv = (c..n).find(|&r| !a[(r, c)].is_zero());
            let piv = match piv {
                Some(p) => p,
                None => return one.zero(),
            };
            if piv != c {
                for j in 0..n {
                    let t = a[(c, j)].clone();
                    a[(c, j)] = a[(piv, j)].clone();
                    a[(piv, j)] = t;
                }
                neg = !neg;
            }
            det = det.mul(&a[(c, c)]);
            let inv = one.div(&a[(c, c)]);
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].mul(&inv);
                for j in c..n {
                    let s = f.mul(&a[(c, j)]);
                    a[(r, j)] = a[(r, j)].sub(&s);
                }
            }
        }
        if neg {
            det.neg()
        } else {
            det
        }
    }

    /// Minor over the given row/column index sets (strictly increasing).
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> F {
        assert_eq!(rows.len(), cols.len());
        let k = rows.len();
        let mut sub = Vec::with_capacity(k);
        for &r in rows {
            let mut row = Vec::with_capacity(k);
            for &c in cols {
                row.push(self[(r, c)].clone());
            }
            sub.push(row);
        }
        Matrix::from_rows(sub).det()
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        let n = self.n;
        let one = self[(0, 0)].one();
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, &one);
        for c in 0..n {
            let piv = (c..n)
                .find(|&r| !a[(r, c)].is_zero())
                .ok_or_else(|| Error::Singular("matrix inversion".into()))?;
            if piv != c {
                for j in 0..n {
                    let t = a[(c, j)].clone();
                    a[(c, j)] = a[(piv, j)].clone();
                    a[(piv, j)] = t;
                    let t = inv[(c, j)].clone();
                    inv[(c, j)] = inv[(piv, j)].clone();
                    inv[(piv, j)] = t;
                }
            }
            let d = one.div(&a[(c, c)]);
            for j in 0..n {
                a[(c, j)] = a[(c, j)].mul(&d);
                inv[(c, j)] = inv[(c, j)].mul(&d);
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for j in 0..n {
                    let s = f.mul(&a[(c, j)]);
                    a[(r, j)] = a[(r, j)].sub(&s);
                    let s = f.mul(&inv[(c, j)]);
                    inv[(r, j)] = inv[(r, j)].sub(&s);
                }
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        rank_of_rows(
            (0..self.n)
                .map(|i| (0..self.n).map(|j| self[(i, j)].clone()).collect())
                .collect(),
        )
    }
}

impl<F: Field> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.n + j]
    }
}

impl<F: Field> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.n + j]
    }
}

/// Row rank of a (not necessarily square) exact matrix.
pub fn rank_of_rows<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for c in 0..ncols {
        let piv = (rank..rows.len()).find(|&r| !rows[r][c].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        rows.swap(rank, piv);
        let inv = rows[rank][c].one().div(&rows[rank][c]);
        for j in c..ncols {
            rows[rank][j] = rows[rank][j].mul(&inv);
        }
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for j in c..ncols {
                let s = f.mul(&rows[rank][j]);
                rows[r][j] = rows[r][j].sub(&s);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of the nullspace of the row system (exact fields).
pub fn nullspace<F: Field>(rows: &[Vec<F>], ncols: usize) -> Vec<Vec<F>> {
    if rows.is_empty() {
        return Vec::new();
    }
    let one = rows[0][0].one();
    let zero = one.zero();
    let mut a: Vec<Vec<F>> = rows.to_vec();
    let mut piv_cols = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let piv = (r..a.len()).find(|&i| !a[i][c].is_zero());
        let piv = match piv {
            Some(p) => p,
            None => continue,
        };
        a.swap(r, piv);
        let inv = one.div(&a[r][c]);
        for j in 0..ncols {
            a[r][j] = a[r][j].mul(&inv);
        }
        for i in 0..a.len() {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone();
            for j in 0..ncols {
                let s = f.mul(&a[r][j]);
                a[i][j] = a[i][j].sub(&s);
            }
        }
        piv_cols.push(c);
        r += 1;
        if r == a.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !piv_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut v = vec![zero.clone(); ncols];
        v[fc] = one.clone();
        for (i, &pc) in piv_cols.iter().enumerate() {
            v[pc] = a[i][fc].neg();
        }
        basis.push(v);
    }
    basis
}
