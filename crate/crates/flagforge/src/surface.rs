//! Surface-level bookkeeping: pants decompositions, the standard lamination,
//! eigenvalue-gap length relations, the tree-type verdict, and the preferred
//! lamination obtained by flipping the negative-limit leaves.

use std::collections::BTreeMap;

use crate::chart::{triple_indices, TripleIndex};
use crate::error::{Error, Result};
use crate::tropical::{
    build_tropical_quiver, edge_correction, limit_of, tropical_flip, GrowthPoly, ScaledLimit,
    ScalingSequence,
};

/// A boundary of a pants, identified by (pants index, slot 0..3). Slot i
/// carries the curve g_{i+1} of that pants, oriented with the pants on its
/// left.
pub type BoundarySlot = (usize, usize);

/// An open leaf, identified by (pants index, slot 0..3). Leaf i spirals
/// around the boundaries in slots i-1 and i+1 (mod 3) and is oriented towards
/// slot i+1.
pub type LeafId = (usize, usize);

#[derive(Clone, Debug)]
pub struct PantsDecomposition {
    pub genus: usize,
    /// Gluing involution on boundary slots; each closed curve appears as one
    /// unordered pair (the two sides are the curve and its inverse).
    pub gluing: Vec<(BoundarySlot, BoundarySlot)>,
}

impl PantsDecomposition {
    pub fn new(genus: usize, gluing: Vec<(BoundarySlot, BoundarySlot)>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::Schema("genus must be at least 2".into()));
        }
        let n_pants = 2 * genus - 2;
        let n_curves = 3 * genus - 3;
        if gluing.len() != n_curves {
            return Err(Error::Schema(format!(
                "expected {n_curves} closed curves, got {}",
                gluing.len()
            )));
        }
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &gluing {
            for s in [a, b] {
                if s.0 >= n_pants || s.1 >= 3 {
                    return Err(Error::Schema(format!("bad boundary slot {s:?}")));
                }
                if !seen.insert(s) {
                    return Err(Error::Schema(format!("slot {s:?} glued twice")));
                }
            }
        }
        if seen.len() != 2 * n_curves {
            return Err(Error::Schema("gluing does not cover all boundaries".into()));
        }
        Ok(PantsDecomposition { genus, gluing })
    }

    pub fn n_pants(&self) -> usize {
        2 * self.genus - 2
    }

    /// The slot glued to the given one (the other side of its closed curve).
    pub fn partner(&self, s: BoundarySlot) -> BoundarySlot {
        for &(a, b) in &self.gluing {
            if a == s {
                return b;
            }
            if b == s {
                return a;
            }
        }
        unreachable!("validated decomposition covers every slot")
    }

    /// Index of the closed curve containing the slot.
    pub fn curve_of(&self, s: BoundarySlot) -> usize {
        self.gluing
            .iter()
            .position(|&(a, b)| a == s || b == s)
            .expect("validated decomposition")
    }
}

/// Combinatorial record of the standard lamination: leaves with their
/// spiraling boundaries and orientations.
#[derive(Clone, Debug)]
pub struct LaminationLeaf {
    pub id: LeafId,
    /// Boundary the leaf is oriented towards (slot i+1).
    pub towards: BoundarySlot,
    /// Boundary the leaf spirals at its back end (slot i-1).
    pub away: BoundarySlot,
}

pub fn standard_lamination(pd: &PantsDecomposition) -> Vec<LaminationLeaf> {
    let mut out = Vec::new();
    for p in 0..pd.n_pants() {
        for i in 0..3 {
            out.push(LaminationLeaf {
                id: (p, i),
                towards: (p, (i + 1) % 3),
                away: (p, (i + 2) % 3),
            });
        }
    }
    out
}

/// Per-pants coordinate tables of a polynomial family of representations.
#[derive(Clone, Debug)]
pub struct PantsCoordinateSystem {
    pub m: usize,
    pub scaling: ScalingSequence,
    pub pd: PantsDecomposition,
    /// shears\[p\]\[leaf i\]\[a-1\] = sigma^a(e_i) as a growth polynomial
    pub shears: Vec<[Vec<GrowthPoly>; 3]>,
    /// triangles\[p\]\[0|1\] = tau table of t, t'
    pub triangles: Vec<[BTreeMap<TripleIndex, GrowthPoly>; 2]>,
    /// optional per-closed-curve shears (indexed like `pd.gluing`)
    pub closed_shears: Vec<Vec<GrowthPoly>>,
}

impl PantsCoordinateSystem {
    pub fn validate_shape(&self) -> Result<()> {
        let n = self.pd.n_pants();
        if self.shears.len() != n || self.triangles.len() != n {
            return Err(Error::Schema("coordinate tables do not match pants count".into()));
        }
        for p in 0..n {
            for i in 0..3 {
                if self.shears[p][i].len() != self.m - 1 {
                    return Err(Error::Schema(format!(
                        "pants {p} leaf {i}: expected {} shear entries",
                        self.m - 1
                    )));
                }
            }
            for t in 0..2 {
                for idx in triple_indices(self.m) {
                    if !self.triangles[p][t].contains_key(&idx) {
                        return Err(Error::Schema(format!(
                            "pants {p} triangle {t}: missing tau^{idx:?}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn shear(&self, leaf: LeafId, a: usize) -> &GrowthPoly {
        &self.shears[leaf.0][leaf.1][a - 1]
    }
}

/// The leaf of the pants oriented towards the given boundary slot, and the
/// one oriented away from it.
pub fn leaves_at_boundary(slot_i: usize) -> (usize, usize) {
    ((slot_i + 2) % 3, (slot_i + 1) % 3)
}

/// log(lambda_a / lambda_{a+1}) along the boundary in slot (p, i), as a
/// polynomial in n: the shear of the leaf oriented towards the boundary at
/// index a, the shear of the leaf oriented away at index m-a, and the
/// triangle terms tau^{(m-a)bc} with b + c = a from both triangles.
pub fn boundary_gap_poly(
    pcs: &PantsCoordinateSystem,
    pants: usize,
    slot: usize,
    a: usize,
) -> Result<GrowthPoly> {
    if pants >= pcs.pd.n_pants() || slot >= 3 {
        return Err(Error::Topology(format!("boundary ({pants},{slot})")));
    }
    if a == 0 || a >= pcs.m {
        return Err(Error::Schema(format!("gap index {a} out of range")));
    }
    let m = pcs.m;
    let (tow, away) = leaves_at_boundary(slot);
    let mut gap = pcs
        .shear((pants, tow), a)
        .add(pcs.shear((pants, away), m - a));
    for b in 1..a {
        let c = a - b;
        for t in 0..2 {
            gap = gap.add(&pcs.triangles[pants][t][&(m - a, b, c)]);
        }
    }
    Ok(gap)
}

/// One violated length relation.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation {
    /// gap(g, a) != gap(g^{-1}, m-a) for the glued pair
    Mismatch {
        curve: usize,
        a: usize,
        left: GrowthPoly,
        right: GrowthPoly,
    },
    /// gap polynomial is not eventually positive
    NotEventuallyPositive {
        slot: BoundarySlot,
        a: usize,
        gap: GrowthPoly,
    },
}

/// Check the length relations on every glued pair of boundaries.
pub fn validate_length_relations(pcs: &PantsCoordinateSystem) -> Result<Vec<Violation>> {
    pcs.validate_shape()?;
    let m = pcs.m;
    let mut out = Vec::new();
    for (curve, &(s1, s2)) in pcs.pd.gluing.iter().enumerate() {
        for a in 1..m {
            let left = boundary_gap_poly(pcs, s1.0, s1.1, a)?;
            let right = boundary_gap_poly(pcs, s2.0, s2.1, m - a)?;
            if left != right {
                out.push(Violation::Mismatch {
                    curve,
                    a,
                    left: left.clone(),
                    right,
                });
            }
            if !left.eventually_positive() {
                out.push(Violation::NotEventuallyPositive {
                    slot: s1,
                    a,
                    gap: left,
                });
            }
        }
    }
    Ok(out)
}

/// The tree-type verdict: triangle limits vanish and every leaf has a
/// consistent sign of shear limits.
#[derive(Clone, Debug)]
pub struct TreeTypeVerdict {
    pub is_tree_type: bool,
    /// Leaves with some strictly negative limit (the ones to flip).
    pub flip_set: Vec<LeafId>,
    /// Per-leaf shear limits.
    pub leaf_limits: BTreeMap<LeafId, Vec<ScaledLimit>>,
    /// Per-pants, per-triangle limit tables.
    pub triangle_limits: Vec<[BTreeMap<TripleIndex, ScaledLimit>; 2]>,
    pub trivial_scaling: bool,
    /// Human-readable reasons when the verdict is negative.
    pub diagnostics: Vec<String>,
}

pub fn check_tree_type(pcs: &PantsCoordinateSystem) -> Result<TreeTypeVerdict> {
    pcs.validate_shape()?;
    let m = pcs.m;
    let r = pcs.scaling;
    let mut diagnostics = Vec::new();
    let mut triangle_limits = Vec::new();
    let mut all_zero = true;
    for p in 0..pcs.pd.n_pants() {
        let mut pair: [BTreeMap<TripleIndex, ScaledLimit>; 2] = [BTreeMap::new(), BTreeMap::new()];
        for t in 0..2 {
            for (idx, poly) in &pcs.triangles[p][t] {
                let l = limit_of(poly, r);
                if !l.is_zero() {
                    diagnostics.push(format!(
                        "pants {p} triangle {t}: tau^{idx:?} has nonzero limit"
                    ));
                }
                pair[t].insert(*idx, l);
            }
        }
        triangle_limits.push(pair);
    }
    let mut leaf_limits = BTreeMap::new();
    let mut flip_set = Vec::new();
    for p in 0..pcs.pd.n_pants() {
        for i in 0..3 {
            let ls: Vec<ScaledLimit> = (1..m)
                .map(|a| limit_of(pcs.shear((p, i), a), r))
                .collect();
            let nonneg = ls.iter().all(ScaledLimit::is_nonnegative);
            let nonpos = ls.iter().all(ScaledLimit::is_nonpositive);
            if !nonneg && !nonpos {
                diagnostics.push(format!("pants {p} leaf {i}: mixed-sign shear limits"));
            }
            if ls.iter().any(|l| !l.is_zero()) {
                all_zero = false;
            }
            if nonpos && ls.iter().any(|l| !l.is_zero()) {
                flip_set.push((p, i));
            }
            leaf_limits.insert((p, i), ls);
        }
    }
    let is_tree_type = diagnostics.is_empty();
    if is_tree_type {
        // at most one negative-limit leaf per pants on validated data
        for p in 0..pcs.pd.n_pants() {
            let n = flip_set.iter().filter(|(q, _)| *q == p).count();
            if n > 1 {
                return Err(Error::Hypothesis(format!(
                    "pants {p} has {n} negative-limit leaves; length relations \
                     cannot hold for this data"
                )));
            }
        }
    }
    Ok(TreeTypeVerdict {
        is_tree_type,
        flip_set,
        leaf_limits,
        triangle_limits,
        trivial_scaling: all_zero,
        diagnostics,
    })
}

/// The preferred lamination: the state of one leaf after the correction.
#[derive(Clone, Debug)]
pub struct CorrectedLeaf {
    pub id: LeafId,
    pub flipped: bool,
    pub limits: Vec<ScaledLimit>,
    /// Set when the flipped leaf's two spiraling boundaries lie on the same
    /// closed curve; the correction rule is applied per shared boundary and
    /// this case is surfaced for inspection.
    pub coincident_boundaries: bool,
}

#[derive(Clone, Debug)]
pub struct PreferredLamination {
    pub leaves: Vec<CorrectedLeaf>,
    /// Post-flip triangle limits of the flipped quadrilaterals (all zero).
    pub flipped_triangle_limits: BTreeMap<LeafId, Vec<ScaledLimit>>,
}

/// Flip every negative-limit leaf and correct the neighbors sharing a
/// spiraling boundary; all corrected limits are non-negative and the new
/// triangle limits vanish.
pub fn preferred_lamination(
    pcs: &PantsCoordinateSystem,
    verdict: &TreeTypeVerdict,
) -> Result<PreferredLamination> {
    if !verdict.is_tree_type {
        return Err(Error::Hypothesis("input is not of tree type".into()));
    }
    if verdict.trivial_scaling {
        return Err(Error::Hypothesis("scaling is trivial (all limits zero)".into()));
    }
    let m = pcs.m;
    let mut leaves = Vec::new();
    let mut flipped_triangle_limits = BTreeMap::new();
    for p in 0..pcs.pd.n_pants() {
        for i in 0..3 {
            let id = (p, i);
            let base = verdict.leaf_limits[&id].clone();
            if verdict.flip_set.contains(&id) {
                // tropical flip of the leaf's quadrilateral: the two adjacent
                // triangles are the pants triangles, whose limits vanish
                let tl = &verdict.triangle_limits[p][0];
                let tr = &verdict.triangle_limits[p][1];
                let q = build_tropical_quiver(m, &base, tl, tr)?;
                let f = tropical_flip(&q)?;
                let mut new_limits = Vec::new();
                for a in 1..m {
                    new_limits.push(f.weight(&[a, m - a, 0, 0]).unwrap().limit()?.clone());
                }
                let mut tri_lims = Vec::new();
                for (a, b, c) in triple_indices(m) {
                    tri_lims.push(f.weight(&[a, c, b, 0]).unwrap().limit()?.clone());
                    tri_lims.push(f.weight(&[a, b, 0, c]).unwrap().limit()?.clone());
                }
                let towards = pcs.pd.curve_of((p, (i + 1) % 3));
                let away = pcs.pd.curve_of((p, (i + 2) % 3));
                flipped_triangle_limits.insert(id, tri_lims);
                leaves.push(CorrectedLeaf {
                    id,
                    flipped: true,
                    limits: new_limits,
                    coincident_boundaries: towards == away,
                });
            } else if let Some(&flipped_id) = verdict
                .flip_set
                .iter()
                .find(|(q, j)| *q == p && *j != i)
            {
                // shares exactly one spiraling boundary with the flipped leaf
                let corrected = edge_correction(&base, &verdict.leaf_limits[&flipped_id])?;
                leaves.push(CorrectedLeaf {
                    id,
                    flipped: false,
                    limits: corrected,
                    coincident_boundaries: false,
                });
            } else {
                leaves.push(CorrectedLeaf {
                    id,
                    flipped: false,
                    limits: base,
                    coincident_boundaries: false,
                });
            }
        }
    }
    Ok(PreferredLamination {
        leaves,
        flipped_triangle_limits,
    })
}

/// The genus-2 two-pants decomposition with slot i of pants 0 glued to slot i
/// of pants 1.
pub fn two_pants_decomposition() -> PantsDecomposition {
    PantsDecomposition::new(2, vec![((0, 0), (1, 0)), ((0, 1), (1, 1)), ((0, 2), (1, 2))])
        .expect("valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    /// The worked genus-2 example: pants P with leaves e_1, e_2, e_3 and
    /// pants Q with leaves f_1, f_2, f_3 (slots 0, 1, 2), m = 3.
    pub fn example_surface() -> PantsCoordinateSystem {
        let pd = two_pants_decomposition();
        let gp = GrowthPoly::from_ints;
        let shears = vec![
            [
                vec![gp(&[0, 0, -1]), gp(&[0, -1])],      // e1: -n^2, -n
                vec![gp(&[0, 0, 1]), gp(&[0, 0, 2])],     // e2: n^2, 2n^2
                vec![gp(&[0, 2]), gp(&[0, 0, 2])],        // e3: 2n, 2n^2
            ],
            [
                vec![gp(&[0]), gp(&[0, -1, -1])],         // f1: 0, -n^2 - n
                vec![gp(&[0, 1, 2]), gp(&[0, -1, 1])],    // f2: 2n^2 + n, n^2 - n
                vec![gp(&[0, 1, 2]), gp(&[0, 1])],        // f3: 2n^2 + n, n
            ],
        ];
        let tau = |c: &[i64]| {
            let mut t = BTreeMap::new();
            t.insert((1usize, 1usize, 1usize), GrowthPoly::from_ints(c));
            t
        };
        let triangles = vec![
            [tau(&[0, 1]), tau(&[0, -1])],   // t: n, t': -n
            [tau(&[0, 5]), tau(&[0, -5])],   // u: 5n, u': -5n
        ];
        PantsCoordinateSystem {
            m: 3,
            scaling: ScalingSequence::new(2).unwrap(),
            pd,
            shears,
            triangles,
            closed_shears: vec![vec![GrowthPoly::zero(); 2]; 3],
        }
    }

    #[test]
    fn standard_lamination_counts() {
        let pd = two_pants_decomposition();
        let lam = standard_lamination(&pd);
        assert_eq!(lam.len(), 6);
        assert_eq!(pd.gluing.len(), 3);
        for leaf in &lam {
            assert_ne!(leaf.towards, leaf.away);
        }
    }

    #[test]
    fn example_gap_polynomials() {
        let pcs = example_surface();
        let gp = GrowthPoly::from_ints;
        // boundary g_1 is slot 0 of pants 0
        assert_eq!(boundary_gap_poly(&pcs, 0, 0, 1).unwrap(), gp(&[0, 2, 2]));
        assert_eq!(boundary_gap_poly(&pcs, 0, 0, 2).unwrap(), gp(&[0, 0, 3]));
        assert_eq!(boundary_gap_poly(&pcs, 0, 1, 1).unwrap(), gp(&[0, 0, 1]));
        assert_eq!(boundary_gap_poly(&pcs, 0, 1, 2).unwrap(), gp(&[0, 1]));
        assert_eq!(boundary_gap_poly(&pcs, 0, 2, 1).unwrap(), gp(&[0, -1, 1]));
        assert_eq!(boundary_gap_poly(&pcs, 0, 2, 2).unwrap(), gp(&[0, 0, 1]));
        assert!(validate_length_relations(&pcs).unwrap().is_empty());
    }

    #[test]
    fn perturbed_example_reports_mismatch() {
        let mut pcs = example_surface();
        pcs.shears[0][1][0] = pcs.shears[0][1][0].add(&GrowthPoly::from_ints(&[0, 0, 0, 1]));
        let violations = validate_length_relations(&pcs).unwrap();
        assert!(violations
            .iter()
            .any(|v| matches!(v, Violation::Mismatch { .. })));
    }

    #[test]
    fn all_zero_coordinates_fail_positivity() {
        let mut pcs = example_surface();
        for p in 0..2 {
            for i in 0..3 {
                for a in 0..2 {
                    pcs.shears[p][i][a] = GrowthPoly::zero();
                }
            }
            for t in 0..2 {
                for v in pcs.triangles[p][t].values_mut() {
                    *v = GrowthPoly::zero();
                }
            }
        }
        let violations = validate_length_relations(&pcs).unwrap();
        assert!(violations
            .iter()
            .all(|v| matches!(v, Violation::NotEventuallyPositive { .. })));
        assert!(!violations.is_empty());
    }

    #[test]
    fn example_is_tree_type_with_flip_set() {
        let pcs = example_surface();
        let v = check_tree_type(&pcs).unwrap();
        assert!(v.is_tree_type);
        assert!(!v.trivial_scaling);
        assert_eq!(v.flip_set, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn cubic_scaling_is_trivial() {
        let mut pcs = example_surface();
        pcs.scaling = ScalingSequence::new(3).unwrap();
        let v = check_tree_type(&pcs).unwrap();
        assert!(v.is_tree_type);
        assert!(v.trivial_scaling);
        assert!(v.flip_set.is_empty());
    }

    #[test]
    fn mixed_signs_fail() {
        let mut pcs = example_surface();
        pcs.shears[0][0][1] = GrowthPoly::from_ints(&[0, 0, 1]); // sigma^2(e1) = +n^2
        let v = check_tree_type(&pcs).unwrap();
        assert!(!v.is_tree_type);
        assert!(v.diagnostics.iter().any(|d| d.contains("mixed-sign")));
    }

    #[test]
    fn preferred_lamination_on_example() {
        let pcs = example_surface();
        let v = check_tree_type(&pcs).unwrap();
        let lam = preferred_lamination(&pcs, &v).unwrap();
        for leaf in &lam.leaves {
            assert!(
                leaf.limits.iter().all(ScaledLimit::is_nonnegative),
                "leaf {:?} has a negative corrected limit: {:?}",
                leaf.id,
                leaf.limits
            );
        }
        for lims in lam.flipped_triangle_limits.values() {
            assert!(lims.iter().all(ScaledLimit::is_zero));
        }
        assert_eq!(
            lam.leaves.iter().filter(|l| l.flipped).count(),
            2
        );
    }

    #[test]
    fn corrected_limit_matches_gap_limit() {
        // for a corrected leaf e' sharing boundary g with the flipped e, the
        // correction equals the gap limit at index a or m-a
        let pcs = example_surface();
        let v = check_tree_type(&pcs).unwrap();
        let lam = preferred_lamination(&pcs, &v).unwrap();
        let r = pcs.scaling;
        // leaf e2 = (0,1) shares boundary slot 2 (g_3) with flipped e1
        let e2 = lam.leaves.iter().find(|l| l.id == (0, 1)).unwrap();
        // e2 is oriented towards g_3: corrections match gap(g_3, a)
        for a in 1..3usize {
            let gap = boundary_gap_poly(&pcs, 0, 2, a).unwrap();
            assert_eq!(e2.limits[a - 1], limit_of(&gap, r));
        }
    }

    #[test]
    fn no_negative_leaves_keeps_lamination() {
        let mut pcs = example_surface();
        // make e1 and f1 non-negative too
        pcs.shears[0][0] = vec![GrowthPoly::from_ints(&[0, 0, 1]), GrowthPoly::from_ints(&[0, 1])];
        pcs.shears[1][0] = vec![GrowthPoly::from_ints(&[0, 1]), GrowthPoly::from_ints(&[0, 0, 1])];
        let v = check_tree_type(&pcs).unwrap();
        assert!(v.flip_set.is_empty());
        let lam = preferred_lamination(&pcs, &v).unwrap();
        assert!(lam.leaves.iter().all(|l| !l.flipped));
        for leaf in &lam.leaves {
            assert_eq!(leaf.limits, v.leaf_limits[&leaf.id]);
        }
    }

    #[test]
    fn relabeling_invariance_of_tree_type() {
        // swap the two pants and the leaf labels consistently
        let pcs = example_surface();
        let v1 = check_tree_type(&pcs).unwrap();
        let mut swapped = pcs.clone();
        swapped.shears.swap(0, 1);
        swapped.triangles.swap(0, 1);
        let v2 = check_tree_type(&swapped).unwrap();
        assert_eq!(v1.is_tree_type, v2.is_tree_type);
        assert_eq!(v1.trivial_scaling, v2.trivial_scaling);
        let mut mapped: Vec<LeafId> = v1.flip_set.iter().map(|&(p, i)| (1 - p, i)).collect();
        mapped.sort_unstable();
        assert_eq!(v2.flip_set, mapped);
    }

    #[test]
    fn a_reversal_with_orientation_flip_preserves_verdict() {
        // replacing every shear table sigma^a by sigma^{m-a} corresponds to
        // reversing all leaf orientations; the verdict is unchanged
        let pcs = example_surface();
        let mut rev = pcs.clone();
        for p in 0..2 {
            for i in 0..3 {
                rev.shears[p][i].reverse();
            }
        }
        let v1 = check_tree_type(&pcs).unwrap();
        let v2 = check_tree_type(&rev).unwrap();
        assert_eq!(v1.is_tree_type, v2.is_tree_type);
        assert_eq!(v1.flip_set, v2.flip_set);
    }

    #[test]
    fn rat_int_sanity() {
        assert_eq!(rat_int(2), rat_int(1) + rat_int(1));
    }
}
