//! Triangulated polygons: oriented diagonals, derived triangles with
//! preferred-vertex markers, and the diagonal flip at the combinatorial level.
//!
//! Vertices are labelled 1..=k in counter-clockwise order around the circle.

use crate::error::{Error, Result};

/// A triangle of the subdivision, stored in counter-clockwise cyclic order
/// starting at its preferred vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [usize; 3],
}

impl Triangle {
    pub fn sorted_key(&self) -> [usize; 3] {
        let mut v = self.vertices;
        v.sort_unstable();
        v
    }

    pub fn preferred(&self) -> usize {
        self.vertices[0]
    }

    fn with_preferred(mut sorted: [usize; 3], preferred: usize) -> Triangle {
        while sorted[0] != preferred {
            sorted.rotate_left(1);
        }
        Triangle { vertices: sorted }
    }
}

#[derive(Clone, Debug)]
pub struct TriangulatedPolygon {
    pub k: usize,
    /// Oriented diagonals (tail, head).
    diagonals: Vec<(usize, usize)>,
    triangles: Vec<Triangle>,
}

/// Strictly between `a` and `b` counter-clockwise (excluding endpoints).
fn ccw_between(k: usize, a: usize, b: usize, x: usize) -> bool {
    let mut v = a % k + 1;
    while v != b {
        if v == x {
            return true;
        }
        v = v % k + 1;
    }
    false
}

fn crossing(k: usize, d1: (usize, usize), d2: (usize, usize)) -> bool {
    let (a, b) = d1;
    let (c, d) = d2;
    if a == c || a == d || b == c || b == d {
        return false;
    }
    ccw_between(k, a, b, c) != ccw_between(k, a, b, d)
}

impl TriangulatedPolygon {
    pub fn new(k: usize, diagonals: Vec<(usize, usize)>) -> Result<Self> {
        if k < 3 {
            return Err(Error::Schema("polygon needs at least 3 vertices".into()));
        }
        if diagonals.len() != k - 3 {
            return Err(Error::Schema(format!(
                "expected {} diagonals for a {k}-gon, got {}",
                k - 3,
                diagonals.len()
            )));
        }
        for &(t, h) in &diagonals {
            if t == 0 || h == 0 || t > k || h > k || t == h {
                return Err(Error::Schema(format!("bad diagonal ({t},{h})")));
            }
            if t % k + 1 == h || h % k + 1 == t {
                return Err(Error::Schema(format!("({t},{h}) is a polygon side")));
            }
        }
        for i in 0..diagonals.len() {
            for j in i + 1..diagonals.len() {
                let same = diagonals[i] == diagonals[j]
                    || diagonals[i] == (diagonals[j].1, diagonals[j].0);
                if same || crossing(k, diagonals[i], diagonals[j]) {
                    return Err(Error::Schema(format!(
                        "diagonals {:?} and {:?} conflict",
                        diagonals[i], diagonals[j]
                    )));
                }
            }
        }
        let triangles = derive_triangles(k, &diagonals);
        Ok(TriangulatedPolygon {
            k,
            diagonals,
            triangles,
        })
    }

    pub fn diagonals(&self) -> &[(usize, usize)] {
        &self.diagonals
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn set_preferred(&mut self, triangle_index: usize, vertex: usize) -> Result<()> {
        let t = self.triangles[triangle_index];
        if !t.vertices.contains(&vertex) {
            return Err(Error::Schema(format!(
                "{vertex} is not a vertex of triangle {:?}",
                t.vertices
            )));
        }
        self.triangles[triangle_index] = Triangle::with_preferred(t.sorted_key(), vertex);
        Ok(())
    }

    pub fn triangle_index(&self, key: [usize; 3]) -> Option<usize> {
        self.triangles.iter().position(|t| t.sorted_key() == key)
    }

    /// The quadruple (e+, e_l, e-, e_r) of a diagonal: head, then the
    /// remaining vertices of the two adjacent triangles in counter-clockwise
    /// order.
    pub fn quadruple(&self, diagonal_index: usize) -> (usize, usize, usize, usize) {
        let (tail, head) = self.diagonals[diagonal_index];
        let mut left = None;
        let mut right = None;
        for t in &self.triangles {
            if t.vertices.contains(&tail) && t.vertices.contains(&head) {
                let third = *t
                    .vertices
                    .iter()
                    .find(|&&v| v != tail && v != head)
                    .unwrap();
                if ccw_between(self.k, head, tail, third) {
                    left = Some(third);
                } else {
                    right = Some(third);
                }
            }
        }
        (head, left.unwrap(), tail, right.unwrap())
    }

    /// Flip the given diagonal. The new diagonal is oriented from e_r to e_l
    /// and the two new triangles get the new head as preferred vertex; other
    /// triangles keep their markers.
    pub fn flip(&self, diagonal_index: usize) -> TriangulatedPolygon {
        let (ep, el, em, er) = self.quadruple(diagonal_index);
        let mut diagonals = self.diagonals.clone();
        diagonals[diagonal_index] = (er, el);
        let mut out = TriangulatedPolygon::new(self.k, diagonals).expect("flip stays valid");
        // carry over markers of untouched triangles
        for t in &self.triangles {
            let key = t.sorted_key();
            if let Some(i) = out.triangle_index(key) {
                out.triangles[i] = *t;
            }
        }
        // new triangles (f+, f_l, f-) = (el, em, er) and (f+, f-, f_r) = (el, er, ep)
        for tri in [[el, em, er], [el, er, ep]] {
            let mut key = tri;
            key.sort_unstable();
            let i = out.triangle_index(key).expect("new triangle exists");
            out.triangles[i] = Triangle::with_preferred(key, el);
        }
        out
    }
}

fn derive_triangles(k: usize, diagonals: &[(usize, usize)]) -> Vec<Triangle> {
    let mut adj = vec![vec![false; k + 1]; k + 1];
    for i in 1..=k {
        let j = i % k + 1;
        adj[i][j] = true;
        adj[j][i] = true;
    }
    for &(t, h) in diagonals {
        adj[t][h] = true;
        adj[h][t] = true;
    }
    let mut out = Vec::new();
    for a in 1..=k {
        for b in a + 1..=k {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..=k {
                if adj[b][c] && adj[a][c] {
                    out.push(Triangle::with_preferred([a, b, c], a));
                }
            }
        }
    }
    out.sort_by_key(|t| t.sorted_key());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadrilateral_quadruple() {
        let p = TriangulatedPolygon::new(4, vec![(3, 1)]).unwrap();
        assert_eq!(p.quadruple(0), (1, 2, 3, 4));
        assert_eq!(p.triangles().len(), 2);
    }

    #[test]
    fn flip_is_involution_on_the_diagonal() {
        let p = TriangulatedPolygon::new(4, vec![(3, 1)]).unwrap();
        let q = p.flip(0);
        assert_eq!(q.diagonals()[0], (4, 2));
        assert_eq!(q.quadruple(0), (2, 3, 4, 1));
        let r = q.flip(0);
        assert_eq!(r.diagonals()[0], (1, 3));
    }

    #[test]
    fn rejects_crossing_diagonals() {
        assert!(TriangulatedPolygon::new(5, vec![(1, 3), (2, 4)]).is_err());
        assert!(TriangulatedPolygon::new(5, vec![(1, 3)]).is_err()); // wrong count
        assert!(TriangulatedPolygon::new(5, vec![(1, 2), (1, 3)]).is_err()); // side
    }

    #[test]
    fn pentagon_faces() {
        let p = TriangulatedPolygon::new(5, vec![(3, 1), (3, 5)]).unwrap();
        let keys: Vec<_> = p.triangles().iter().map(|t| t.sorted_key()).collect();
        assert_eq!(keys, vec![[1, 2, 3], [1, 3, 5], [3, 4, 5]]);
    }
}
