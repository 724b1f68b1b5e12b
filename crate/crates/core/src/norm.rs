//! The gauge (Minkowski functional) of a body and derived quantities.
//!
//! `norm(x) = inf{ t > 0 : x ∈ tK }`. For polytopes and their products the
//! value is an exact rational; ball factors give floats, but three-way
//! comparisons against rational thresholds stay exact by comparing squares.

use crate::body::{ConvexBody, Shape};
use crate::rat::{rat_to_f64, Rat, RatVec, Scalar};
use crate::{Error, Result};
use num::{One, Signed, Zero};
use std::cmp::Ordering;

impl ConvexBody {
    /// Gauge of `x` with respect to this body.
    pub fn norm(&self, x: &RatVec) -> Result<Scalar> {
        self.check_dim(x)?;
        self.norm_unchecked(x)
    }

    fn norm_unchecked(&self, x: &RatVec) -> Result<Scalar> {
        match self.shape() {
            Shape::Polytope(_) => {
                let facets = self.facets().ok_or_else(|| {
                    Error::UnsupportedRepresentation(
                        "norm evaluation needs an H-form (dimension > 3 V-polytope)".into(),
                    )
                })?;
                let mut best = Rat::zero();
                for f in facets {
                    let v = f.normal.dot(x) / &f.offset;
                    if v > best {
                        best = v;
                    }
                }
                Ok(Scalar::Exact(best))
            }
            Shape::Ball { radius } => {
                let sq = x.norm2_sq() / (radius * radius);
                Ok(match exact_sqrt(&sq) {
                    Some(r) => Scalar::Exact(r),
                    None => Scalar::Approx(rat_to_f64(&sq).sqrt()),
                })
            }
            Shape::Product { factors } => {
                let mut best = Scalar::Exact(Rat::zero());
                let mut offset = 0;
                for f in factors {
                    let block = RatVec(x.0[offset..offset + f.dim()].to_vec());
                    best = best.max(f.norm_unchecked(&block)?);
                    offset += f.dim();
                }
                Ok(best)
            }
        }
    }

    /// Exact three-way comparison of `norm(x)` against a rational
    /// threshold, including through ball factors (by comparing squares).
    pub fn norm_cmp(&self, x: &RatVec, threshold: &Rat) -> Result<Ordering> {
        self.check_dim(x)?;
        self.norm_cmp_unchecked(x, threshold)
    }

    fn norm_cmp_unchecked(&self, x: &RatVec, threshold: &Rat) -> Result<Ordering> {
        if threshold.is_negative() {
            return Ok(Ordering::Greater);
        }
        match self.shape() {
            Shape::Polytope(_) => match self.norm_unchecked(x)? {
                Scalar::Exact(v) => Ok(v.cmp(threshold)),
                Scalar::Approx(_) => unreachable!("polytope norms are exact"),
            },
            Shape::Ball { radius } => {
                let lhs = x.norm2_sq();
                let rhs = threshold * threshold * radius * radius;
                Ok(lhs.cmp(&rhs))
            }
            Shape::Product { factors } => {
                let mut any_equal = false;
                let mut offset = 0;
                for f in factors {
                    let block = RatVec(x.0[offset..offset + f.dim()].to_vec());
                    match f.norm_cmp_unchecked(&block, threshold)? {
                        Ordering::Greater => return Ok(Ordering::Greater),
                        Ordering::Equal => any_equal = true,
                        Ordering::Less => {}
                    }
                    offset += f.dim();
                }
                Ok(if any_equal { Ordering::Equal } else { Ordering::Less })
            }
        }
    }

    /// Float gauge, for the annealer and Monte Carlo estimators.
    pub fn norm_f64(&self, x: &[f64]) -> f64 {
        match self.shape() {
            Shape::Polytope(p) => {
                let facets = p
                    .facets_f64
                    .as_ref()
                    .expect("norm_f64 requires an H-form");
                let mut best = 0.0f64;
                for (a, b) in facets {
                    let mut dot = 0.0;
                    for (ai, xi) in a.iter().zip(x) {
                        dot += ai * xi;
                    }
                    let v = dot / b;
                    if v > best {
                        best = v;
                    }
                }
                best
            }
            Shape::Ball { radius } => {
                let r = rat_to_f64(radius);
                x.iter().map(|v| v * v).sum::<f64>().sqrt() / r
            }
            Shape::Product { factors } => {
                let mut best = 0.0f64;
                let mut offset = 0;
                for f in factors {
                    best = best.max(f.norm_f64(&x[offset..offset + f.dim()]));
                    offset += f.dim();
                }
                best
            }
        }
    }

    /// `x / norm(x)`, exact. Errors on the zero vector and on bodies whose
    /// gauge is irrational at `x`.
    pub fn normalize(&self, x: &RatVec) -> Result<RatVec> {
        self.check_dim(x)?;
        if x.is_zero() {
            return Err(Error::ZeroVector);
        }
        match self.norm_unchecked(x)? {
            Scalar::Exact(v) => Ok(x.scale(&v.recip())),
            Scalar::Approx(_) => Err(Error::ExactUnavailable(
                "normalization through a ball factor is irrational".into(),
            )),
        }
    }

    /// Asymmetry measure θ(K, o) = min{θ : -K ⊆ θK} = max over vertices v
    /// of `norm(-v)`. Exactly 1 for o-symmetric bodies.
    pub fn theta(&self) -> Result<Scalar> {
        if self.is_symmetric() {
            return Ok(Scalar::Exact(Rat::one()));
        }
        match self.shape() {
            Shape::Ball { .. } => Ok(Scalar::Exact(Rat::one())),
            Shape::Product { factors } => {
                let mut best = Scalar::Exact(Rat::zero());
                for f in factors {
                    best = best.max(f.theta()?);
                }
                Ok(best)
            }
            Shape::Polytope(_) => {
                let vertices = self.vertices().ok_or_else(|| {
                    Error::UnsupportedRepresentation(
                        "theta of a non-symmetric polytope needs a vertex list".into(),
                    )
                })?;
                let mut best = Scalar::Exact(Rat::zero());
                for v in vertices {
                    best = best.max(self.norm_unchecked(&v.neg())?);
                }
                Ok(best)
            }
        }
    }

    /// Norm of the symmetric core K ∩ -K via the identity
    /// `max(norm(x), norm(-x))`; exact in every dimension.
    pub fn core_norm(&self, x: &RatVec) -> Result<Scalar> {
        Ok(self.norm(x)?.max(self.norm(&x.neg())?))
    }

    /// Exact comparison of the symmetric-core norm against a threshold.
    pub fn core_norm_cmp(&self, x: &RatVec, threshold: &Rat) -> Result<Ordering> {
        let a = self.norm_cmp(x, threshold)?;
        let b = self.norm_cmp(&x.neg(), threshold)?;
        Ok(a.max(b))
    }
}

/// Exact square root of a nonnegative rational if it is a perfect square.
fn exact_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}
