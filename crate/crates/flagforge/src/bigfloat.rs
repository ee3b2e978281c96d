//! Arbitrary-precision floats for sequence evaluation at large n, where
//! coordinates like exp(n^2) overflow hardware exponents.

use std::cell::RefCell;
use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_traits::ToPrimitive;

use crate::scalar::{Field, Rat};

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constants cache"));
}

/// Big float tagged with its working precision in bits.
#[derive(Clone, Debug)]
pub struct Bf {
    pub x: BigFloat,
    pub prec: usize,
}

impl Bf {
    pub fn from_i64(v: i64, prec: usize) -> Self {
        Bf {
            x: BigFloat::from_i64(v, prec),
            prec,
        }
    }

    pub fn from_rat(r: &Rat, prec: usize) -> Self {
        let num = parse_int(&r.numer().to_string(), prec);
        let den = parse_int(&r.denom().to_string(), prec);
        Bf {
            x: num.div(&den, prec, RM),
            prec,
        }
    }

    pub fn exp(&self) -> Self {
        CONSTS.with(|cc| Bf {
            x: self.x.exp(self.prec, RM, &mut cc.borrow_mut()),
            prec: self.prec,
        })
    }

    pub fn ln(&self) -> Self {
        CONSTS.with(|cc| Bf {
            x: self.x.ln(self.prec, RM, &mut cc.borrow_mut()),
            prec: self.prec,
        })
    }

    pub fn abs(&self) -> Self {
        Bf {
            x: self.x.abs(),
            prec: self.prec,
        }
    }

    pub fn cmp(&self, rhs: &Bf) -> Ordering {
        match self.x.cmp(&rhs.x) {
            Some(o) if o < 0 => Ordering::Less,
            Some(o) if o > 0 => Ordering::Greater,
            _ => Ordering::Equal,
        }
    }

    pub fn to_f64(&self) -> f64 {
        // format via scientific string to survive exponents beyond f64 only
        // when the value itself fits
        let s = format!("{}", self.x);
        s.parse::<f64>().unwrap_or(f64::NAN)
    }
}

fn parse_int(s: &str, prec: usize) -> BigFloat {
    CONSTS.with(|cc| {
        BigFloat::parse(s, astro_float::Radix::Dec, prec, RM, &mut cc.borrow_mut())
    })
}

impl PartialEq for Bf {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Field for Bf {
    fn zero(&self) -> Self {
        Bf::from_i64(0, self.prec)
    }
    fn one(&self) -> Self {
        Bf::from_i64(1, self.prec)
    }
    fn add(&self, rhs: &Self) -> Self {
        Bf {
            x: self.x.add(&rhs.x, self.prec, RM),
            prec: self.prec,
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Bf {
            x: self.x.sub(&rhs.x, self.prec, RM),
            prec: self.prec,
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        Bf {
            x: self.x.mul(&rhs.x, self.prec, RM),
            prec: self.prec,
        }
    }
    fn div(&self, rhs: &Self) -> Self {
        Bf {
            x: self.x.div(&rhs.x, self.prec, RM),
            prec: self.prec,
        }
    }
    fn neg(&self) -> Self {
        Bf {
            x: self.x.neg(),
            prec: self.prec,
        }
    }
    fn is_zero(&self) -> bool {
        self.x.is_zero()
    }
    fn is_positive(&self) -> bool {
        !self.x.is_zero() && self.x.sign() == Some(Sign::Pos)
    }
}

/// Evaluate a rational to f64 (for report output).
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}
