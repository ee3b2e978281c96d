//! Flags in R^m as ordered bases, wedge determinants, and the genericity
//! predicate for tuples of flags.

use crate::error::{Error, Result};
use crate::matrix::{rank_of_rows, Matrix};
use crate::scalar::{Field, Rat};

/// A complete flag stored as an ordered basis: level `a` is the span of the
/// first `a` basis vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Flag {
    pub m: usize,
    basis: Vec<Vec<Rat>>,
}

impl Flag {
    /// Level-`a` spanning vectors (the first `a` basis vectors).
    pub fn level(&self, a: usize) -> &[Vec<Rat>] {
        &self.basis[..a]
    }

    pub fn basis(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    /// Spans agree at every level.
    pub fn same_flag(&self, other: &Flag) -> bool {
        if self.m != other.m {
            return false;
        }
        for a in 1..self.m {
            let mut cols: Vec<Vec<Rat>> = self.level(a).to_vec();
            cols.extend(other.level(a).iter().cloned());
            let rows: Vec<Vec<Rat>> = (0..self.m)
                .map(|i| cols.iter().map(|c| c[i].clone()).collect())
                .collect();
            if rank_of_rows(rows) != a {
                return false;
            }
        }
        true
    }

    /// Image flag under an invertible matrix (columns transform).
    pub fn apply(&self, g: &Matrix<Rat>) -> Result<Flag> {
        let m = self.m;
        assert_eq!(g.n, m);
        let basis: Vec<Vec<Rat>> = self
            .basis
            .iter()
            .map(|v| {
                (0..m)
                    .map(|i| {
                        let mut s = g[(i, 0)].mul(&v[0]);
                        for (j, vj) in v.iter().enumerate().skip(1) {
                            s = s.add(&g[(i, j)].mul(vj));
                        }
                        s
                    })
                    .collect()
            })
            .collect();
        flag_from_basis(basis)
    }
}

/// Build a flag from `m` linearly independent vectors.
pub fn flag_from_basis(vectors: Vec<Vec<Rat>>) -> Result<Flag> {
    let m = vectors.len();
    if m == 0 || vectors.iter().any(|v| v.len() != m) {
        return Err(Error::Dimension {
            got: vectors.first().map_or(0, |v| v.len()),
            dim: m,
        });
    }
    if Matrix::from_cols(vectors.clone()).det().is_zero() {
        return Err(Error::SingularBasis);
    }
    Ok(Flag { m, basis: vectors })
}

/// The coordinate flag e_1, ..., e_m.
pub fn coordinate_flag(m: usize) -> Flag {
    let basis = (0..m)
        .map(|j| {
            (0..m)
                .map(|i| if i == j { crate::scalar::rat_int(1) } else { crate::scalar::rat_int(0) })
                .collect()
        })
        .collect();
    Flag { m, basis }
}

/// The coordinate flag in reverse order e_m, ..., e_1 (used by the standard
/// position of a triangle).
pub fn reverse_coordinate_flag(m: usize) -> Flag {
    let mut f = coordinate_flag(m);
    f.basis.reverse();
    f
}

/// An ordered tuple of flags, optionally marked as cyclically arranged.
#[derive(Clone, Debug)]
pub struct FlagTuple {
    pub flags: Vec<Flag>,
    pub cyclic: bool,
}

impl FlagTuple {
    pub fn new(flags: Vec<Flag>) -> Result<Self> {
        if flags.len() < 3 {
            return Err(Error::Genericity("tuple needs at least 3 flags".into()));
        }
        let m = flags[0].m;
        if flags.iter().any(|f| f.m != m) {
            return Err(Error::Dimension { got: 0, dim: m });
        }
        Ok(FlagTuple { flags, cyclic: true })
    }

    pub fn m(&self) -> usize {
        self.flags[0].m
    }

    pub fn k(&self) -> usize {
        self.flags.len()
    }
}

/// Determinant of the m x m matrix assembled from flag levels, i.e. the wedge
/// of the given level vectors under the identification of the top exterior
/// power with the scalars.
pub fn wedge_det(parts: &[(&Flag, usize)]) -> Result<Rat> {
    let m = parts
        .first()
        .map(|(f, _)| f.m)
        .ok_or(Error::Dimension { got: 0, dim: 0 })?;
    let total: usize = parts.iter().map(|(_, a)| a).sum();
    if total != m {
        return Err(Error::Dimension { got: total, dim: m });
    }
    let mut cols = Vec::with_capacity(m);
    for (f, a) in parts {
        cols.extend(f.level(*a).iter().cloned());
    }
    Ok(Matrix::from_cols(cols).det())
}

/// Genericity of a flag tuple: every sum of levels has the maximal possible
/// dimension. It suffices to check index vectors with total at most m, since
/// larger sums contain a full-dimensional one.
pub fn is_generic_tuple(t: &FlagTuple) -> bool {
    let m = t.m();
    let k = t.k();
    let mut idx = vec![0usize; k];
    loop {
        let total: usize = idx.iter().sum();
        if total > 0 {
            let mut cols = Vec::new();
            for (i, &a) in idx.iter().enumerate() {
                cols.extend(t.flags[i].level(a).iter().cloned());
            }
            let rows: Vec<Vec<Rat>> = (0..m)
                .map(|r| cols.iter().map(|c| c[r].clone()).collect())
                .collect();
            if rank_of_rows(rows) != total.min(m) {
                return false;
            }
        }
        // next index vector with sum <= m
        let mut pos = 0;
        loop {
            if pos == k {
                return true;
            }
            idx[pos] += 1;
            if idx[pos] <= m && idx.iter().sum::<usize>() <= m {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    fn v(x: [i64; 3]) -> Vec<Rat> {
        x.iter().map(|&a| rat_int(a)).collect()
    }

    #[test]
    fn wedge_det_identity() {
        let f = coordinate_flag(3);
        assert_eq!(wedge_det(&[(&f, 3)]).unwrap(), rat_int(1));
    }

    #[test]
    fn wedge_det_by_cofactor() {
        // columns (1,-1,1), (0,0,1), (0,1,0) -> -1
        let f = flag_from_basis(vec![v([1, -1, 1]), v([0, 0, 1]), v([0, 1, 0])]).unwrap();
        assert_eq!(wedge_det(&[(&f, 3)]).unwrap(), rat_int(-1));
    }

    #[test]
    fn wedge_det_degenerate_repeat() {
        let f = coordinate_flag(3);
        // e1, then e1 again via a second flag sharing the first vector
        let g = flag_from_basis(vec![v([1, 0, 0]), v([0, 1, 0]), v([0, 0, 1])]).unwrap();
        assert_eq!(
            wedge_det(&[(&f, 1), (&g, 1), (&g, 1)]).unwrap(),
            rat_int(0)
        );
    }

    #[test]
    fn wedge_det_degree_mismatch() {
        let f = coordinate_flag(3);
        assert!(matches!(
            wedge_det(&[(&f, 2), (&f, 2)]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn generic_pair_and_degenerate_pair() {
        let asc = coordinate_flag(3);
        let desc = reverse_coordinate_flag(3);
        let t = FlagTuple::new(vec![asc.clone(), desc, asc.clone()]).unwrap();
        assert!(!is_generic_tuple(&t)); // contains two identical flags
        let alt = flag_from_basis(vec![v([1, -1, 1]), v([0, 1, 0]), v([0, 0, 1])]).unwrap();
        let t = FlagTuple::new(vec![asc, reverse_coordinate_flag(3), alt]).unwrap();
        assert!(is_generic_tuple(&t));
    }

    #[test]
    fn flag_from_dependent_basis_fails() {
        assert!(matches!(
            flag_from_basis(vec![v([1, 2, 3]), v([2, 4, 6]), v([0, 0, 1])]),
            Err(Error::SingularBasis)
        ));
    }

    #[test]
    fn genericity_invariant_under_gl_action() {
        let asc = coordinate_flag(3);
        let desc = reverse_coordinate_flag(3);
        let alt = flag_from_basis(vec![v([1, -1, 1]), v([0, 1, 0]), v([0, 0, 1])]).unwrap();
        let t = FlagTuple::new(vec![asc, desc, alt]).unwrap();
        let g = Matrix::from_rows(vec![v([2, 1, 0]), v([1, 1, 1]), v([0, 3, 1])]);
        assert!(!g.det().is_zero());
        let moved = FlagTuple::new(
            t.flags.iter().map(|f| f.apply(&g).unwrap()).collect(),
        )
        .unwrap();
        assert_eq!(is_generic_tuple(&t), is_generic_tuple(&moved));
    }
}
