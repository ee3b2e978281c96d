//! Subtraction-free symbolic weights: fractions of polynomials with positive
//! coefficients in the initial quiver weights. Mutations stay inside this
//! class, so a chart whose coordinates are exp(p_i(n)) can be flipped exactly
//! and its scaled limits read off monomial by monomial. This is the exact
//! route of the tropical/exact agreement checks.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::quiver::MutWeight;
use crate::scalar::{rat_int, Rat};
use crate::tropical::ScaledLimit;

/// Sparse polynomial with positive rational coefficients over variables
/// indexed 0..nvars.
#[derive(Clone, Debug, PartialEq)]
pub struct PosPoly {
    terms: BTreeMap<Vec<u32>, Rat>,
    nvars: usize,
}

impl PosPoly {
    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], rat_int(1));
        PosPoly { terms, nvars }
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(e, rat_int(1));
        PosPoly { terms, nvars }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (e, c) in &rhs.terms {
            let entry = terms.entry(e.clone()).or_insert_with(<Rat as Zero>::zero);
            *entry = &*entry + c;
        }
        PosPoly {
            terms,
            nvars: self.nvars,
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert_with(<Rat as Zero>::zero);
                *entry = &*entry + &(c1 * c2);
            }
        }
        PosPoly {
            terms,
            nvars: self.nvars,
        }
    }

    /// Scaled limit of log of the polynomial evaluated on coordinates
    /// exp(p_i(n)): the max over monomials of the exponent-weighted sum of
    /// the variable limits (positive coefficients make the max exact).
    pub fn tropical(&self, var_limits: &[Rat]) -> Rat {
        self.terms
            .keys()
            .map(|e| {
                let mut s = <Rat as Zero>::zero();
                for (i, &k) in e.iter().enumerate() {
                    if k > 0 {
                        s = &s + &(&var_limits[i] * &rat_int(k as i64));
                    }
                }
                s
            })
            .max()
            .expect("nonempty polynomial")
    }
}

/// Fraction of positive polynomials; the symbolic mutation weight.
#[derive(Clone, Debug, PartialEq)]
pub struct PosRatio {
    pub num: PosPoly,
    pub den: PosPoly,
}

impl PosRatio {
    pub fn var(i: usize, nvars: usize) -> Self {
        PosRatio {
            num: PosPoly::var(i, nvars),
            den: PosPoly::one(nvars),
        }
    }

    pub fn tropical(&self, var_limits: &[Rat]) -> Rat {
        &self.num.tropical(var_limits) - &self.den.tropical(var_limits)
    }

    pub fn limit(&self, var_limits: &[Rat]) -> ScaledLimit {
        ScaledLimit::Finite(self.tropical(var_limits))
    }
}

impl MutWeight for PosRatio {
    fn recip(&self) -> Self {
        PosRatio {
            num: self.den.clone(),
            den: self.num.clone(),
        }
    }
    fn mul_one_plus_pow(&self, v: &Self, k: usize) -> Self {
        // (1 + n/d) = (d + n)/d
        let f_num = v.den.add(&v.num);
        let f_den = v.den.clone();
        let mut out = self.clone();
        for _ in 0..k {
            out = PosRatio {
                num: out.num.mul(&f_num),
                den: out.den.mul(&f_den),
            };
        }
        out
    }
    fn mul_ratio_pow(&self, v: &Self, k: usize) -> Self {
        // n/d / (1 + n/d) = n/(d + n)
        let f_num = v.num.clone();
        let f_den = v.den.add(&v.num);
        let mut out = self.clone();
        for _ in 0..k {
            out = PosRatio {
                num: out.num.mul(&f_num),
                den: out.den.mul(&f_den),
            };
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    #[test]
    fn tropical_of_sum_is_max() {
        // 1 + x0 x1 + x0^2 with limits (3, -1): max(0, 2, 6) = 6
        let n = 2;
        let p = PosPoly::one(n)
            .add(&PosPoly::var(0, n).mul(&PosPoly::var(1, n)))
            .add(&PosPoly::var(0, n).mul(&PosPoly::var(0, n)));
        assert_eq!(p.tropical(&[rat_int(3), rat_int(-1)]), rat_int(6));
        assert_eq!(p.tropical(&[rat(1, 2), rat_int(0)]), rat_int(1));
    }

    #[test]
    fn mutation_weight_ops_match_rational_instances() {
        // evaluate symbolic ops on a concrete positive point and compare
        let n = 2;
        let x = PosRatio::var(0, n);
        let y = PosRatio::var(1, n);
        let z = x.mul_one_plus_pow(&y, 1); // x (1 + y)
        let w = x.mul_ratio_pow(&y, 2); // x (y/(1+y))^2
        let eval = |p: &PosPoly, a: &Rat, b: &Rat| -> Rat {
            let mut acc = <Rat as num_traits::Zero>::zero();
            for (e, c) in &p.terms {
                let mut t = c.clone();
                for _ in 0..e[0] {
                    t = &t * a;
                }
                for _ in 0..e[1] {
                    t = &t * b;
                }
                acc = &acc + &t;
            }
            acc
        };
        let (a, b) = (rat(2, 3), rat(5, 1));
        let zv = &eval(&z.num, &a, &b) / &eval(&z.den, &a, &b);
        assert_eq!(zv, &a * &(&rat_int(1) + &b));
        let wv = &eval(&w.num, &a, &b) / &eval(&w.den, &a, &b);
        let f = &b / &(&rat_int(1) + &b);
        assert_eq!(wv, &(&a * &f) * &f);
    }
}
