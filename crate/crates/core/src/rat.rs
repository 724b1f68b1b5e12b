//! Exact rational scalars and vectors.
//!
//! All certificate-grade arithmetic runs on arbitrary-precision rationals.
//! Floats appear only where a value is intrinsically irrational (Euclidean
//! ball norms, Monte Carlo estimates) and are always labelled as such via
//! [`Scalar::Approx`].

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use std::fmt;

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact conversion: every finite f64 is a dyadic rational.
pub fn rat_from_f64(x: f64) -> Option<Rat> {
    Rat::from_float(x)
}

pub fn rat_to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parse a decimal-free rational string `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> crate::Result<Rat> {
    s.trim()
        .parse::<Rat>()
        .map_err(|e| crate::Error::Parse(format!("bad rational {s:?}: {e}")))
}

/// Best rational approximation of `x` with denominator at most `max_den`,
/// by truncating the continued-fraction expansion.
pub fn rationalize(x: f64, max_den: u64) -> Rat {
    let exact = match rat_from_f64(x) {
        Some(r) => r,
        None => return Rat::zero(),
    };
    let cap = BigInt::from(max_den);
    if exact.denom() <= &cap {
        return exact;
    }
    // Standard continued-fraction convergents p_k/q_k.
    let mut a = exact.clone();
    let (mut p0, mut q0) = (BigInt::one(), BigInt::zero());
    let (mut p1, mut q1) = (a.floor().to_integer(), BigInt::one());
    let mut frac = &a - a.floor();
    while !frac.is_zero() {
        a = frac.recip();
        let ai = a.floor().to_integer();
        let p2 = &ai * &p1 + &p0;
        let q2 = &ai * &q1 + &q0;
        if q2 > cap {
            // Semiconvergent with the largest admissible coefficient.
            let t = (&cap - &q0) / &q1;
            if t.is_zero() {
                break;
            }
            let ps = &t * &p1 + &p0;
            let qs = &t * &q1 + &q0;
            let cand1 = Rat::new(p1.clone(), q1.clone());
            let cand2 = Rat::new(ps, qs);
            return if (&cand2 - &exact).abs() < (&cand1 - &exact).abs() {
                cand2
            } else {
                cand1
            };
        }
        p0 = std::mem::replace(&mut p1, p2);
        q0 = std::mem::replace(&mut q1, q2);
        frac = &a - a.floor();
    }
    Rat::new(p1, q1)
}

/// A number that is exact when the inputs admit exact arithmetic and a
/// float (with the crate-wide declared tolerance) otherwise.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(Rat),
    Approx(f64),
}

impl Scalar {
    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(r) => rat_to_f64(r),
            Scalar::Approx(x) => *x,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Scalar::Exact(r) => Some(r),
            Scalar::Approx(_) => None,
        }
    }

    /// Max of two values; stays exact only when both sides are exact or the
    /// comparison is decidable regardless of float error.
    pub fn max(self, other: Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a.max(b)),
            (a, b) => {
                if a.to_f64() >= b.to_f64() {
                    a
                } else {
                    b
                }
            }
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(r) => write!(f, "{r}"),
            Scalar::Approx(x) => write!(f, "{x}"),
        }
    }
}

// Exact values travel as rational strings, approximations as tagged floats.
impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(1))?;
        match self {
            Scalar::Exact(r) => map.serialize_entry("exact", &r.to_string())?,
            Scalar::Approx(x) => map.serialize_entry("approx", x)?,
        }
        map.end()
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Repr {
            exact: Option<String>,
            approx: Option<f64>,
        }
        let repr = Repr::deserialize(d)?;
        match (repr.exact, repr.approx) {
            (Some(s), None) => parse_rat(&s)
                .map(Scalar::Exact)
                .map_err(serde::de::Error::custom),
            (None, Some(x)) => Ok(Scalar::Approx(x)),
            _ => Err(serde::de::Error::custom(
                "expected exactly one of {\"exact\"} or {\"approx\"}",
            )),
        }
    }
}

/// Dense rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatVec(pub Vec<Rat>);

impl RatVec {
    pub fn zeros(dim: usize) -> Self {
        RatVec(vec![Rat::zero(); dim])
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        RatVec(xs.iter().map(|&x| rat_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &RatVec) -> RatVec {
        RatVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> RatVec {
        RatVec(self.0.iter().map(|a| -a).collect())
    }

    pub fn scale(&self, s: &Rat) -> RatVec {
        RatVec(self.0.iter().map(|a| a * s).collect())
    }

    pub fn dot(&self, other: &RatVec) -> Rat {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |acc, x| acc + x)
    }

    pub fn norm2_sq(&self) -> Rat {
        self.dot(self)
    }

    /// Concatenate blocks into one vector.
    pub fn concat(blocks: &[RatVec]) -> RatVec {
        RatVec(blocks.iter().flat_map(|b| b.0.iter().cloned()).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(rat_to_f64).collect()
    }

    pub fn from_f64_exact(xs: &[f64]) -> Option<RatVec> {
        xs.iter().map(|&x| rat_from_f64(x)).collect::<Option<Vec<_>>>().map(RatVec)
    }
}

impl std::ops::Index<usize> for RatVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let r = parse_rat("-7/3").unwrap();
        assert_eq!(r, rat(-7, 3));
        assert_eq!(r.to_string(), "-7/3");
        assert_eq!(parse_rat("5").unwrap(), rat_int(5));
    }

    #[test]
    fn f64_conversion_is_exact() {
        let r = rat_from_f64(0.1).unwrap();
        // 0.1 is not 1/10 in binary; conversion must preserve the bits.
        assert_eq!(rat_to_f64(&r), 0.1);
        assert_ne!(r, rat(1, 10));
    }

    #[test]
    fn rationalize_small_denominators() {
        assert_eq!(rationalize(0.5, 10), rat(1, 2));
        assert_eq!(rationalize(0.3333333333333, 10), rat(1, 3));
        assert_eq!(rationalize(0.6666666666667, 100), rat(2, 3));
        let phi = (1.0 + 5.0_f64.sqrt()) / 2.0;
        let approx = rationalize(phi, 100);
        assert!((rat_to_f64(&approx) - phi).abs() < 1e-3);
        assert!(approx.denom() <= &BigInt::from(100));
    }

    #[test]
    fn vector_ops() {
        let a = RatVec::from_ints(&[1, 2]);
        let b = RatVec::from_ints(&[3, -1]);
        assert_eq!(a.add(&b), RatVec::from_ints(&[4, 1]));
        assert_eq!(a.dot(&b), rat_int(1));
        assert_eq!(a.sub(&b).neg(), RatVec::from_ints(&[2, -3]));
    }
}
