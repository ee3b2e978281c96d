//! Scaled-limit (tropical) calculus: growth polynomials, the limit functional
//! lim r_n * p(n) for r_n = n^{-k}, the log(1+x) collapse, asymptotic
//! mutations, and the tropical flip.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::quiver::{MutWeight, Quiver, Vertex};
use crate::scalar::{rat_int, Rat};

/// Polynomial in n with rational coefficients, canonical form (no zero
/// coefficients stored). As a chart weight it represents the coordinate
/// sequence exp(p(n)).
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrowthPoly {
    coeffs: BTreeMap<usize, Rat>,
}

impl GrowthPoly {
    pub fn zero() -> Self {
        GrowthPoly::default()
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (usize, Rat)>) -> Self {
        let mut p = GrowthPoly::default();
        for (d, c) in coeffs {
            p.add_term(d, c);
        }
        p
    }

    /// Convenience: integer coefficients by degree, lowest first.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        GrowthPoly::from_coeffs(
            coeffs
                .iter()
                .enumerate()
                .map(|(d, &c)| (d, rat_int(c))),
        )
    }

    pub fn add_term(&mut self, degree: usize, c: Rat) {
        let entry = self.coeffs.entry(degree).or_insert_with(<Rat as Zero>::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn coeff(&self, degree: usize) -> Rat {
        self.coeffs.get(&degree).cloned().unwrap_or_else(<Rat as Zero>::zero)
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rat> {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn neg(&self) -> Self {
        GrowthPoly {
            coeffs: self.coeffs.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, c) in &other.coeffs {
            out.add_term(d, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn eval(&self, n: i64) -> Rat {
        let mut acc = <Rat as Zero>::zero();
        for (&d, c) in &self.coeffs {
            let mut pw = rat_int(1);
            for _ in 0..d {
                pw = &pw * &rat_int(n);
            }
            acc = &acc + &(c * &pw);
        }
        acc
    }

    /// Leading coefficient; zero polynomial has none.
    pub fn leading(&self) -> Option<&Rat> {
        self.degree().and_then(|d| self.coeffs.get(&d))
    }

    /// Eventually positive: positive leading coefficient.
    pub fn eventually_positive(&self) -> bool {
        self.leading().map(crate::scalar::Field::is_positive).unwrap_or(false)
    }
}

/// The scaling family r_n = n^{-k}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScalingSequence {
    pub k: usize,
}

impl ScalingSequence {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::Schema("scaling exponent must be at least 1".into()));
        }
        Ok(ScalingSequence { k })
    }
}

/// Extended rational value of a scaled limit.
#[derive(Clone, Debug, PartialEq)]
pub enum ScaledLimit {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ScaledLimit {
    pub fn finite(r: Rat) -> Self {
        ScaledLimit::Finite(r)
    }

    pub fn zero() -> Self {
        ScaledLimit::Finite(<Rat as Zero>::zero())
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ScaledLimit::Finite(r) if r.is_zero())
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            ScaledLimit::NegInf => false,
            ScaledLimit::Finite(r) => !crate::scalar::Field::is_positive(&(-r)),
            ScaledLimit::PosInf => true,
        }
    }

    pub fn is_nonpositive(&self) -> bool {
        match self {
            ScaledLimit::NegInf => true,
            ScaledLimit::Finite(r) => !crate::scalar::Field::is_positive(r),
            ScaledLimit::PosInf => false,
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            ScaledLimit::NegInf => ScaledLimit::PosInf,
            ScaledLimit::Finite(r) => ScaledLimit::Finite(-r),
            ScaledLimit::PosInf => ScaledLimit::NegInf,
        }
    }

    /// Checked addition; opposite infinities are indeterminate.
    pub fn add(&self, other: &Self) -> Result<Self> {
        use ScaledLimit::*;
        Ok(match (self, other) {
            (Finite(a), Finite(b)) => Finite(a + b),
            (PosInf, NegInf) | (NegInf, PosInf) => return Err(Error::Indeterminate),
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
        })
    }

    pub fn max_zero(&self) -> Self {
        if self.is_nonnegative() {
            self.clone()
        } else {
            ScaledLimit::zero()
        }
    }

    pub fn min_zero(&self) -> Self {
        if self.is_nonpositive() {
            self.clone()
        } else {
            ScaledLimit::zero()
        }
    }
}

/// lim_n r_n * p(n): the degree-k coefficient when deg p <= k, otherwise a
/// signed infinity.
pub fn limit_of(p: &GrowthPoly, r: ScalingSequence) -> ScaledLimit {
    match p.degree() {
        None => ScaledLimit::zero(),
        Some(d) if d <= r.k => ScaledLimit::Finite(p.coeff(r.k)),
        Some(_) => {
            if p.eventually_positive() {
                ScaledLimit::PosInf
            } else {
                ScaledLimit::NegInf
            }
        }
    }
}

/// Scaled limit of log(1 + X_n) given the scaled limit of log X_n:
/// max(0, x).
pub fn tlog1p(x: &ScaledLimit) -> ScaledLimit {
    x.max_zero()
}

/// Mutation weight over scaled limits. An indeterminate sum poisons the
/// weight; the flip entry points surface it as an error.
#[derive(Clone, Debug, PartialEq)]
pub enum TropicalWeight {
    Lim(ScaledLimit),
    Indeterminate,
}

impl TropicalWeight {
    pub fn limit(&self) -> Result<&ScaledLimit> {
        match self {
            TropicalWeight::Lim(l) => Ok(l),
            TropicalWeight::Indeterminate => Err(Error::Indeterminate),
        }
    }
}

impl From<ScaledLimit> for TropicalWeight {
    fn from(l: ScaledLimit) -> Self {
        TropicalWeight::Lim(l)
    }
}

impl MutWeight for TropicalWeight {
    fn recip(&self) -> Self {
        match self {
            TropicalWeight::Lim(l) => TropicalWeight::Lim(l.neg()),
            TropicalWeight::Indeterminate => TropicalWeight::Indeterminate,
        }
    }
    fn mul_one_plus_pow(&self, v: &Self, k: usize) -> Self {
        // l + k * max(0, l(v))
        let (a, b) = match (self, v) {
            (TropicalWeight::Lim(a), TropicalWeight::Lim(b)) => (a, b),
            _ => return TropicalWeight::Indeterminate,
        };
        let mut acc = a.clone();
        for _ in 0..k {
            match acc.add(&b.max_zero()) {
                Ok(x) => acc = x,
                Err(_) => return TropicalWeight::Indeterminate,
            }
        }
        TropicalWeight::Lim(acc)
    }
    fn mul_ratio_pow(&self, v: &Self, k: usize) -> Self {
        // l + k * min(0, l(v))
        let (a, b) = match (self, v) {
            (TropicalWeight::Lim(a), TropicalWeight::Lim(b)) => (a, b),
            _ => return TropicalWeight::Indeterminate,
        };
        let mut acc = a.clone();
        for _ in 0..k {
            match acc.add(&b.min_zero()) {
                Ok(x) => acc = x,
                Err(_) => return TropicalWeight::Indeterminate,
            }
        }
        TropicalWeight::Lim(acc)
    }
}

/// Tropical quadrilateral quiver from per-index diagonal limits and the two
/// triangles' limit tables (entries keyed like the rational placement).
pub fn build_tropical_quiver(
    m: usize,
    d_edge: &[ScaledLimit],
    t_left: &BTreeMap<(usize, usize, usize), ScaledLimit>,
    t_right: &BTreeMap<(usize, usize, usize), ScaledLimit>,
) -> Result<Quiver<TropicalWeight>> {
    let mut weights: BTreeMap<Vertex, TropicalWeight> = BTreeMap::new();
    for v in crate::quiver::vertices(m) {
        if !crate::quiver::is_interior(&v) {
            continue;
        }
        let [a, b, c, d] = v;
        let w = if c != 0 {
            t_left
                .get(&(a, c, b))
                .ok_or_else(|| Error::Schema(format!("missing limit T^({a},{c},{b})")))?
                .clone()
        } else if d != 0 {
            t_right
                .get(&(a, b, d))
                .ok_or_else(|| Error::Schema(format!("missing limit T^({a},{b},{d})")))?
                .clone()
        } else {
            d_edge[a - 1].clone()
        };
        weights.insert(v, w.into());
    }
    Ok(Quiver::initial(m, weights))
}

/// Asymptotic mutation at an interior vertex of a tropical quiver.
pub fn asymptotic_mutate(
    q: &Quiver<TropicalWeight>,
    v: &Vertex,
) -> Result<Quiver<TropicalWeight>> {
    q.mutate_vertex(v)
}

/// Tropicalized diagonal flip. Fails with an indeterminate error if opposite
/// infinities ever meet.
pub fn tropical_flip(q: &Quiver<TropicalWeight>) -> Result<Quiver<TropicalWeight>> {
    let out = q.flip_transform()?;
    for w in out.weights().values() {
        w.limit()?;
    }
    Ok(out)
}

/// Corrected shear limits after flipping an adjacent leaf: index a picks up
/// the flipped leaf's limit at m - a.
pub fn edge_correction(
    neighbor: &[ScaledLimit],
    flipped: &[ScaledLimit],
) -> Result<Vec<ScaledLimit>> {
    let m = neighbor.len() + 1;
    assert_eq!(flipped.len() + 1, m);
    (1..m)
        .map(|a| neighbor[a - 1].add(&flipped[m - a - 1]))
        .collect()
}
