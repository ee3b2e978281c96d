//! The weighted directed graph on the discrete parallelogram attached to a
//! quadrilateral, vertex and stratum mutations, and the diagonal flip as a
//! composition of stratum mutations with boundary-edge propagation.
//!
//! Vertices are quadruples (a, b, c, d) with c = 0 or d = 0 and
//! a + b + c + d = m. The initial arrow pattern consists of oriented
//! three-cycles on the small triangles of the two glued lattices (horizontal
//! arrows point away from the shared diagonal, vertical arrows toward it, the
//! closing arrows run inside each stratum); the two sides' contributions along
//! the shared diagonal cancel. This pattern is pinned by exact agreement of
//! the flip with the determinant-level coordinates.

use std::collections::BTreeMap;

use crate::chart::{triple_indices, ChartCoordinates, TripleIndex};
use crate::error::{Error, Result};
use crate::scalar::Rat;

pub type Vertex = [usize; 4];

/// Weight semifield for cluster mutations: exact rationals, tropical limits,
/// or symbolic positive fractions.
pub trait MutWeight: Clone + PartialEq + std::fmt::Debug {
    fn recip(&self) -> Self;
    /// self * (1 + v)^k
    fn mul_one_plus_pow(&self, v: &Self, k: usize) -> Self;
    /// self * (v / (1 + v))^k
    fn mul_ratio_pow(&self, v: &Self, k: usize) -> Self;
}

impl MutWeight for Rat {
    fn recip(&self) -> Self {
        crate::scalar::rat_int(1) / self
    }
    fn mul_one_plus_pow(&self, v: &Self, k: usize) -> Self {
        let f = crate::scalar::rat_int(1) + v;
        let mut out = self.clone();
        for _ in 0..k {
            out = &out * &f;
        }
        out
    }
    fn mul_ratio_pow(&self, v: &Self, k: usize) -> Self {
        let f = v / &(crate::scalar::rat_int(1) + v);
        let mut out = self.clone();
        for _ in 0..k {
            out = &out * &f;
        }
        out
    }
}

pub fn vertices(m: usize) -> Vec<Vertex> {
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            let c = m - a - b;
            out.push([a, b, c, 0]);
            if c != 0 {
                out.push([a, b, 0, c]);
            }
        }
    }
    out
}

pub fn is_interior(v: &Vertex) -> bool {
    v[0] > 0 && v[1] > 0
}

pub fn stratum(v: &Vertex) -> usize {
    v[2] + v[3]
}

pub fn is_diagonal(v: &Vertex) -> bool {
    v[2] == 0 && v[3] == 0
}

fn sq(v: &Vertex) -> (usize, usize) {
    (v[0] + v[3], v[1] + v[3])
}

fn from_sq(x: usize, y: usize, m: usize) -> Vertex {
    if x + y <= m {
        [x, y, m - x - y, 0]
    } else {
        let d = x + y - m;
        [x - d, y - d, 0, d]
    }
}

/// Rotate the parallelogram a quarter turn; the post-flip state in this
/// labelling is again an initial-pattern quiver for the new diagonal.
fn relabel(v: &Vertex, m: usize) -> Vertex {
    let (x, y) = sq(v);
    from_sq(m - y, x, m)
}

fn initial_arrow_counts(m: usize) -> BTreeMap<(Vertex, Vertex), i64> {
    let mut cnt: BTreeMap<((usize, usize), (usize, usize)), i64> = BTreeMap::new();
    let mut add = |p: (usize, usize), q: (usize, usize)| {
        *cnt.entry((p, q)).or_insert(0) += 1;
    };
    // side 1 (x + y <= m): cycles (x+1,y) -> (x,y) -> (x,y+1) -> (x+1,y)
    for x in 0..m {
        for y in 0..m - x {
            add((x + 1, y), (x, y));
            add((x, y), (x, y + 1));
            add((x, y + 1), (x + 1, y));
        }
    }
    // side 2 (x + y >= m - 1 for the triangle below (x+1,y+1)):
    // cycles (x,y+1) -> (x+1,y+1) -> (x+1,y) -> (x,y+1)
    for x in 0..m {
        for y in 0..m {
            if x + y < m - 1 {
                continue;
            }
            add((x, y + 1), (x + 1, y + 1));
            add((x + 1, y + 1), (x + 1, y));
            add((x + 1, y), (x, y + 1));
        }
    }
    let mut out = BTreeMap::new();
    for (&(p, q), &k) in &cnt {
        let back = cnt.get(&(q, p)).copied().unwrap_or(0);
        let net = k - back;
        if net > 0 {
            out.insert((from_sq(p.0, p.1, m), from_sq(q.0, q.1, m)), net);
        }
    }
    out
}

/// The four sides of the quadrilateral carrying optional boundary weights.
/// Each side is named by its endpoints in the quadruple and has a canonical
/// orientation pointing from the off-diagonal vertex to the diagonal endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Side {
    /// [e+, e_l], canonically oriented e_l -> e+
    PlusLeft,
    /// [e_l, e-], canonically oriented e_l -> e-
    LeftMinus,
    /// [e-, e_r], canonically oriented e_r -> e-
    MinusRight,
    /// [e_r, e+], canonically oriented e_r -> e+
    RightPlus,
}

impl Side {
    /// Row vertex carrying D^j for j = 1..m-1 in the canonical orientation.
    pub fn row_vertex(&self, j: usize, m: usize) -> Vertex {
        match self {
            Side::PlusLeft => [j, 0, m - j, 0],
            Side::LeftMinus => [0, j, m - j, 0],
            Side::MinusRight => [0, j, 0, m - j],
            Side::RightPlus => [j, 0, 0, m - j],
        }
    }

    /// Endpoints (from, to) of the canonical orientation in terms of the
    /// quadruple (e+, e_l, e-, e_r).
    pub fn canonical(&self, quad: (usize, usize, usize, usize)) -> (usize, usize) {
        let (ep, el, em, er) = quad;
        match self {
            Side::PlusLeft => (el, ep),
            Side::LeftMinus => (el, em),
            Side::MinusRight => (er, em),
            Side::RightPlus => (er, ep),
        }
    }

    pub fn all() -> [Side; 4] {
        [Side::PlusLeft, Side::LeftMinus, Side::MinusRight, Side::RightPlus]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Quiver<W: MutWeight> {
    pub m: usize,
    weights: BTreeMap<Vertex, W>,
    arrows: BTreeMap<(Vertex, Vertex), i64>,
}

impl<W: MutWeight> Quiver<W> {
    /// Initial-state quiver from interior weights (and optional boundary
    /// weights added later).
    pub fn initial(m: usize, weights: BTreeMap<Vertex, W>) -> Self {
        Quiver {
            m,
            weights,
            arrows: initial_arrow_counts(m),
        }
    }

    pub fn weight(&self, v: &Vertex) -> Option<&W> {
        self.weights.get(v)
    }

    pub fn set_weight(&mut self, v: Vertex, w: W) {
        self.weights.insert(v, w);
    }

    pub fn weights(&self) -> &BTreeMap<Vertex, W> {
        &self.weights
    }

    pub fn arrows(&self) -> &BTreeMap<(Vertex, Vertex), i64> {
        &self.arrows
    }

    fn eps(&self, u: &Vertex, v: &Vertex) -> i64 {
        self.arrows.get(&(*u, *v)).copied().unwrap_or(0)
            - self.arrows.get(&(*v, *u)).copied().unwrap_or(0)
    }

    /// Mutation at an interior vertex: invert its weight, scale the neighbors
    /// by (1+X)^{±1} per arrow, reroute arrows, erase two-loops.
    pub fn mutate_vertex(&self, v: &Vertex) -> Result<Self> {
        if !is_interior(v) {
            return Err(Error::NotMutable(*v));
        }
        let xv = self
            .weights
            .get(v)
            .ok_or_else(|| Error::Schema(format!("no weight at {v:?}")))?
            .clone();
        let mut weights = self.weights.clone();
        weights.insert(*v, xv.recip());
        // collect neighbors with net arrow counts
        let mut eps: BTreeMap<Vertex, i64> = BTreeMap::new();
        for (&(a, b), &k) in &self.arrows {
            if a == *v {
                *eps.entry(b).or_insert(0) += k;
            } else if b == *v {
                *eps.entry(a).or_insert(0) -= k;
            }
        }
        for (u, k) in &eps {
            if let Some(w) = weights.get_mut(u) {
                if *k > 0 {
                    *w = w.mul_one_plus_pow(&xv, *k as usize);
                } else if *k < 0 {
                    *w = w.mul_ratio_pow(&xv, (-k) as usize);
                }
            }
        }
        // arrows: reverse at v, compose paths through v, cancel two-loops
        let mut arrows: BTreeMap<(Vertex, Vertex), i64> = BTreeMap::new();
        let mut add = |arrows: &mut BTreeMap<(Vertex, Vertex), i64>, a: Vertex, b: Vertex, k: i64| {
            let cur = arrows.get(&(a, b)).copied().unwrap_or(0)
                - arrows.get(&(b, a)).copied().unwrap_or(0)
                + k;
            arrows.remove(&(a, b));
            arrows.remove(&(b, a));
            if cur > 0 {
                arrows.insert((a, b), cur);
            } else if cur < 0 {
                arrows.insert((b, a), -cur);
            }
        };
        for (&(a, b), &k) in &self.arrows {
            if a == *v || b == *v {
                add(&mut arrows, b, a, k);
            } else {
                add(&mut arrows, a, b, k);
            }
        }
        let ins: Vec<(Vertex, i64)> = self
            .arrows
            .iter()
            .filter(|((_, b), _)| b == v)
            .map(|((a, _), &k)| (*a, k))
            .collect();
        let outs: Vec<(Vertex, i64)> = self
            .arrows
            .iter()
            .filter(|((a, _), _)| a == v)
            .map(|((_, b), &k)| (*b, k))
            .collect();
        for (a, ka) in &ins {
            for (b, kb) in &outs {
                add(&mut arrows, *a, *b, ka * kb);
            }
        }
        Ok(Quiver {
            m: self.m,
            weights,
            arrows,
        })
    }

    /// Interior vertices of stratum `s` relative to the nested set with
    /// a, b > rmin.
    pub fn stratum_vertices(m: usize, s: usize, rmin: usize) -> Vec<Vertex> {
        vertices(m)
            .into_iter()
            .filter(|v| stratum(v) == s && v[0] > rmin && v[1] > rmin)
            .collect()
    }

    /// Compose mutations at all interior vertices of a stratum. The result is
    /// independent of the order; tests check this on random orders.
    pub fn stratum_mutation(&self, s: usize) -> Result<Self> {
        self.stratum_mutation_nested(s, 0)
    }

    pub fn stratum_mutation_nested(&self, s: usize, rmin: usize) -> Result<Self> {
        let mut q = self.clone();
        for v in Self::stratum_vertices(self.m, s, rmin) {
            q = q.mutate_vertex(&v)?;
        }
        Ok(q)
    }

    /// The full diagonal flip: rounds of stratum mutations restricted to the
    /// nested sets (round r mutates vertices with a, b > r, stratum by
    /// stratum from the diagonal outwards), then the quarter-turn relabelling
    /// that presents the result as the initial quiver of the flipped
    /// diagonal. After the relabelling the arrows coincide with the initial
    /// pattern again.
    pub fn flip_transform(&self) -> Result<Self> {
        let m = self.m;
        let rmax = m / 2;
        let mut q = self.clone();
        for r in 0..rmax {
            for s in 0..=m - 2 * r - 2 {
                q = q.stratum_mutation_nested(s, r)?;
            }
        }
        let weights = q
            .weights
            .iter()
            .map(|(v, w)| (relabel(v, m), w.clone()))
            .collect();
        let arrows = q
            .arrows
            .iter()
            .map(|((a, b), k)| ((relabel(a, m), relabel(b, m)), *k))
            .collect();
        Ok(Quiver { m, weights, arrows })
    }
}

// ---------------------------------------------------------------------------
// Chart glue for exact-rational quivers
// ---------------------------------------------------------------------------

/// Rotate a triple-ratio table between cyclic orderings of a triangle:
/// shift = 1 turns a table for (P,Q,R) into the table for (Q,R,P).
pub fn rotate_table(
    table: &BTreeMap<TripleIndex, Rat>,
    shift: usize,
) -> BTreeMap<TripleIndex, Rat> {
    let mut out = BTreeMap::new();
    for (&(a, b, c), v) in table {
        let key = match shift % 3 {
            0 => (a, b, c),
            1 => (b, c, a),
            _ => (c, a, b),
        };
        out.insert(key, v.clone());
    }
    out
}

/// Interior weights of the initial quiver from the quadrilateral data: the
/// diagonal's double ratios and the two triangles' triple-ratio tables taken
/// with preferred vertex e+.
pub fn build_quiver(
    m: usize,
    d_edge: &[Rat],
    t_left: &BTreeMap<TripleIndex, Rat>,
    t_right: &BTreeMap<TripleIndex, Rat>,
) -> Result<Quiver<Rat>> {
    let mut weights = BTreeMap::new();
    for v in vertices(m) {
        if !is_interior(&v) {
            continue;
        }
        let [a, b, c, d] = v;
        let w = if c != 0 {
            t_left
                .get(&(a, c, b))
                .ok_or_else(|| Error::Schema(format!("missing T^({a},{c},{b})")))?
                .clone()
        } else if d != 0 {
            t_right
                .get(&(a, b, d))
                .ok_or_else(|| Error::Schema(format!("missing T^({a},{b},{d})")))?
                .clone()
        } else {
            d_edge[a - 1].clone()
        };
        if !crate::scalar::Field::is_positive(&w) {
            return Err(Error::Positivity(format!("quiver weight at {v:?}")));
        }
        weights.insert(v, w);
    }
    Ok(Quiver::initial(m, weights))
}

/// Read the flipped quadrilateral data back off a post-flip quiver.
pub fn read_quiver(
    q: &Quiver<Rat>,
) -> Result<(Vec<Rat>, BTreeMap<TripleIndex, Rat>, BTreeMap<TripleIndex, Rat>)> {
    let m = q.m;
    let mut d_edge = Vec::new();
    for a in 1..m {
        d_edge.push(
            q.weight(&[a, m - a, 0, 0])
                .ok_or_else(|| Error::Schema("missing diagonal weight".into()))?
                .clone(),
        );
    }
    let mut t_left = BTreeMap::new();
    let mut t_right = BTreeMap::new();
    for (a, b, c) in triple_indices(m) {
        t_left.insert(
            (a, b, c),
            q.weight(&[a, c, b, 0])
                .ok_or_else(|| Error::Schema("missing left triangle weight".into()))?
                .clone(),
        );
        t_right.insert(
            (a, b, c),
            q.weight(&[a, b, 0, c])
                .ok_or_else(|| Error::Schema("missing right triangle weight".into()))?
                .clone(),
        );
    }
    Ok((d_edge, t_left, t_right))
}

impl Quiver<Rat> {
    /// Attach boundary weights for one side: `ds[j-1]` is D^j of the side
    /// edge in the side's canonical orientation.
    pub fn set_side_weights(&mut self, side: Side, ds: &[Rat]) {
        for (j, d) in ds.iter().enumerate() {
            self.weights.insert(side.row_vertex(j + 1, self.m), d.clone());
        }
    }

    /// Boundary weights of one side in the canonical orientation.
    pub fn side_weights(&self, side: Side) -> Option<Vec<Rat>> {
        (1..self.m)
            .map(|j| self.weight(&side.row_vertex(j, self.m)).cloned())
            .collect()
    }
}

/// Cluster-mutation flip of a full polygon chart at one diagonal, including
/// boundary propagation to the adjacent diagonals of the polygon. Returns the
/// chart of the flipped triangulation; the oracle for it is
/// [`crate::chart::direct_flip_coordinates`].
pub fn flip_chart(
    chart: &ChartCoordinates,
    poly: &crate::polygon::TriangulatedPolygon,
    diagonal_index: usize,
) -> Result<(crate::polygon::TriangulatedPolygon, ChartCoordinates)> {
    let m = chart.m;
    let quad = poly.quadruple(diagonal_index);
    let (ep, el, em, er) = quad;
    let tri_of = |x: [usize; 3]| {
        let mut k = x;
        k.sort_unstable();
        poly.triangle_index(k)
            .ok_or_else(|| Error::Schema("triangle not found".into()))
    };
    let t_left_idx = tri_of([ep, el, em])?;
    let t_right_idx = tri_of([ep, em, er])?;
    // rotate stored tables so the preferred vertex becomes e+
    let rot_to = |idx: usize, first: usize| -> Result<BTreeMap<TripleIndex, Rat>> {
        let tri = poly.triangles()[idx];
        let pos = tri
            .vertices
            .iter()
            .position(|&v| v == first)
            .ok_or_else(|| Error::Schema("marker not in triangle".into()))?;
        Ok(rotate_table(&chart.triangles[&idx], pos))
    };
    let t_left = rot_to(t_left_idx, ep)?;
    let t_right = rot_to(t_right_idx, ep)?;
    let mut q = build_quiver(m, &chart.edges[&diagonal_index], &t_left, &t_right)?;

    // attach boundary rows for quad sides that are diagonals of the polygon
    let mut attached: Vec<(usize, Side, bool)> = Vec::new();
    for (i, &(tail, head)) in poly.diagonals().iter().enumerate() {
        if i == diagonal_index {
            continue;
        }
        for side in Side::all() {
            let (from, to) = side.canonical(quad);
            if (tail, head) == (from, to) || (tail, head) == (to, from) {
                let stored = &chart.edges[&i];
                let reversed = (tail, head) != (from, to);
                let ds: Vec<Rat> = if reversed {
                    (1..m).map(|j| stored[m - j - 1].clone()).collect()
                } else {
                    stored.clone()
                };
                q.set_side_weights(side, &ds);
                attached.push((i, side, reversed));
            }
        }
    }

    let q2 = q.flip_transform()?;
    let (d_new, tl_new, tr_new) = read_quiver(&q2)?;

    let flipped = poly.flip(diagonal_index);
    let mut edges = chart.edges.clone();
    edges.insert(diagonal_index, d_new);
    // boundary read-back: the same polygon side in the flipped quadruple
    let fquad = flipped.quadruple(diagonal_index);
    for (i, _, _) in &attached {
        let (tail, head) = flipped.diagonals()[*i];
        for side in Side::all() {
            let (from, to) = side.canonical(fquad);
            if (tail, head) == (from, to) || (tail, head) == (to, from) {
                let vals = q2
                    .side_weights(side)
                    .ok_or_else(|| Error::Schema("missing boundary weights".into()))?;
                let reversed = (tail, head) != (from, to);
                let ds: Vec<Rat> = if reversed {
                    (1..m).map(|j| vals[m - j - 1].clone()).collect()
                } else {
                    vals
                };
                edges.insert(*i, ds);
            }
        }
    }

    let mut triangles = BTreeMap::new();
    for (i, tri) in flipped.triangles().iter().enumerate() {
        let key = tri.sorted_key();
        if let Some(old_idx) = poly.triangle_index(key) {
            if old_idx != t_left_idx && old_idx != t_right_idx {
                triangles.insert(i, chart.triangles[&old_idx].clone());
                continue;
            }
        }
        // one of the two new triangles; tables are stored with marker f+
        let [p, qv, r] = tri.vertices;
        let (fp, fl, fm, fr) = fquad;
        if [p, qv, r] == [fp, fl, fm] {
            triangles.insert(i, tl_new.clone());
        } else if [p, qv, r] == [fp, fm, fr] {
            triangles.insert(i, tr_new.clone());
        } else {
            return Err(Error::Schema("unexpected triangle after flip".into()));
        }
    }
    Ok((
        flipped,
        ChartCoordinates { m, edges, triangles },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};

    fn rat_quiver(m: usize, vals: &[(Vertex, (i64, i64))]) -> Quiver<Rat> {
        let weights = vals
            .iter()
            .map(|(v, (p, q))| (*v, rat(*p, *q)))
            .collect();
        Quiver::initial(m, weights)
    }

    #[test]
    fn interior_vertex_count_is_square() {
        for m in 2..=5 {
            let n = vertices(m).iter().filter(|v| is_interior(v)).count();
            assert_eq!(n, (m - 1) * (m - 1));
        }
    }

    #[test]
    fn mutation_rule_direct_instance() {
        // X^v = 2 with arrow v -> w, X^w = 3: new weights 1/2 and 9
        let v = [1, 1, 1, 0];
        let w = [1, 2, 0, 0];
        let q = rat_quiver(3, &[(v, (2, 1)), (w, (3, 1))]);
        assert!(q.arrows().contains_key(&(v, w)));
        let q2 = q.mutate_vertex(&v).unwrap();
        assert_eq!(q2.weight(&v).unwrap(), &rat(1, 2));
        assert_eq!(q2.weight(&w).unwrap(), &rat_int(9));
    }

    #[test]
    fn mutation_is_involution() {
        let vals: Vec<(Vertex, (i64, i64))> = vertices(3)
            .into_iter()
            .filter(is_interior)
            .zip([(2, 1), (3, 2), (5, 1), (1, 3)])
            .map(|(v, w)| (v, w))
            .collect();
        let q = rat_quiver(3, &vals);
        for v in vertices(3).into_iter().filter(|v| is_interior(v)) {
            let q2 = q.mutate_vertex(&v).unwrap().mutate_vertex(&v).unwrap();
            assert_eq!(q2, q);
        }
    }

    #[test]
    fn boundary_vertex_not_mutable() {
        let q = rat_quiver(2, &[([1, 1, 0, 0], (2, 1))]);
        assert!(matches!(
            q.mutate_vertex(&[0, 2, 0, 0]),
            Err(Error::NotMutable(_))
        ));
    }

    #[test]
    fn m2_flip_inverts_cross_ratio() {
        let q = rat_quiver(2, &[([1, 1, 0, 0], (5, 3))]);
        let f = q.flip_transform().unwrap();
        assert_eq!(f.weight(&[1, 1, 0, 0]).unwrap(), &rat(3, 5));
    }

    #[test]
    fn empty_stratum_is_identity() {
        let q = rat_quiver(2, &[([1, 1, 0, 0], (5, 3))]);
        let s = q.stratum_mutation(1).unwrap(); // no interior vertices there for m=2
        assert_eq!(s, q);
    }
}
