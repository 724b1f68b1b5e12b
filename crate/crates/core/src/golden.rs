//! Exact arithmetic in the quadratic field Q(φ), φ² = φ + 1.
//!
//! Icosahedron coordinates live in this field, so distance and norm
//! comparisons for the 12-point configuration can be decided exactly
//! instead of through floating point.

use crate::rat::{rat_to_f64, Rat};
use num::{One, Signed, Zero};
use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

pub const PHI_F64: f64 = 1.618_033_988_749_895;

/// An element a + b·φ with rational a, b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub a: Rat,
    pub b: Rat,
}

impl Golden {
    pub fn new(a: Rat, b: Rat) -> Self {
        Golden { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Golden::new(Rat::from_integer(n.into()), Rat::zero())
    }

    pub fn phi() -> Self {
        Golden::new(Rat::zero(), Rat::one())
    }

    pub fn zero() -> Self {
        Golden::from_int(0)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        rat_to_f64(&self.a) + rat_to_f64(&self.b) * PHI_F64
    }

    /// Exact sign of a + b·φ. Since φ = (1+√5)/2, the sign of a + bφ is
    /// the sign of (2a + b) + b√5, decided by comparing squares.
    pub fn sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let u = &self.a * Rat::from_integer(2.into()) + &self.b; // 2a + b
        let b = &self.b;
        match (u.is_negative(), b.is_negative()) {
            (false, false) => Ordering::Greater,
            (true, true) => Ordering::Less,
            _ => {
                // u and b have opposite (weak) signs: compare u² with 5b².
                let u2 = &u * &u;
                let b2 = b * b * Rat::from_integer(5.into());
                match u2.cmp(&b2) {
                    Ordering::Equal => Ordering::Equal, // a + bφ = 0, caught above
                    Ordering::Greater => {
                        if u.is_negative() {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        }
                    }
                    Ordering::Less => {
                        if b.is_negative() {
                            Ordering::Less
                        } else {
                            Ordering::Greater
                        }
                    }
                }
            }
        }
    }
}

impl PartialOrd for Golden {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Golden {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).sign()
    }
}

impl Add for Golden {
    type Output = Golden;
    fn add(self, rhs: Golden) -> Golden {
        Golden::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for Golden {
    type Output = Golden;
    fn sub(self, rhs: Golden) -> Golden {
        Golden::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Golden {
    type Output = Golden;
    fn neg(self) -> Golden {
        Golden::new(-self.a, -self.b)
    }
}

impl Mul for Golden {
    type Output = Golden;
    // (a + bφ)(c + dφ) = ac + bd + (ad + bc + bd)φ, using φ² = φ + 1.
    fn mul(self, rhs: Golden) -> Golden {
        let ac = &self.a * &rhs.a;
        let bd = &self.b * &rhs.b;
        let ad_bc = &self.a * &rhs.b + &self.b * &rhs.a;
        Golden::new(ac + &bd, ad_bc + bd)
    }
}

/// Vector over Q(φ).
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenVec(pub Vec<Golden>);

impl GoldenVec {
    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn sub(&self, other: &GoldenVec) -> GoldenVec {
        GoldenVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| x.clone() - y.clone())
                .collect(),
        )
    }

    pub fn dot(&self, other: &GoldenVec) -> Golden {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(x, y)| x.clone() * y.clone())
            .fold(Golden::zero(), |acc, t| acc + t)
    }

    pub fn norm2_sq(&self) -> Golden {
        self.dot(self)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(Golden::to_f64).collect()
    }
}
