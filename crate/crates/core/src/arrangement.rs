//! Homothet families and the Minkowski-arrangement conditions.
//!
//! An arrangement stores its body with the reference point already
//! translated to the origin, so every condition is a pure norm inequality:
//!
//! - Minkowski:        norm(v_i - v_j) >= lambda_j for all i != j
//! - strict Minkowski: norm(v_i - v_j) >  lambda_j for all i != j
//! - pairwise intersecting: the exact feasibility system
//!   {x ∈ K, y ∈ K, v_i + lambda_i x = v_j + lambda_j y} is solvable
//!   (balls get the closed-form distance test, products factorize).
//!
//! All checks are exact; pair scans run in parallel with a deterministic
//! lexicographically-smallest first violation.

use crate::body::{ConvexBody, Shape};
use crate::lp::{Constraint, LinearSystem};
use crate::rat::{Rat, RatVec};
use crate::{exec, Error, Result};
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// One positive homothet `v + lambda K`.
#[derive(Clone, Debug, PartialEq)]
pub struct Homothet {
    pub lambda: Rat,
    pub v: RatVec,
}

impl Homothet {
    pub fn translate_unit(v: RatVec) -> Self {
        Homothet { lambda: Rat::one(), v }
    }
}

/// A body plus a family of homothets, reference point at the origin.
#[derive(Clone, Debug)]
pub struct Arrangement {
    body: ConvexBody,
    homothets: Vec<Homothet>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Condition {
    Minkowski,
    Strict,
    Intersecting,
}

/// Outcome of the three exact checks, plus the lexicographically smallest
/// violating pair of the first failing condition.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerificationReport {
    pub minkowski: bool,
    pub strict: bool,
    pub pairwise_intersecting: bool,
    pub count: usize,
    pub first_violation: Option<(usize, usize, Condition)>,
}

impl VerificationReport {
    pub fn all_hold(&self, strict_mode: bool) -> bool {
        self.pairwise_intersecting && if strict_mode { self.strict } else { self.minkowski }
    }
}

impl Arrangement {
    pub fn new(body: ConvexBody, homothets: Vec<Homothet>) -> Result<Arrangement> {
        for h in &homothets {
            if h.v.dim() != body.dim() {
                return Err(Error::DimensionMismatch { expected: body.dim(), got: h.v.dim() });
            }
            if !h.lambda.is_positive() {
                return Err(Error::InvalidParameter("homothety ratio must be positive".into()));
            }
        }
        Ok(Arrangement { body, homothets })
    }

    /// Build from a body with reference point `p` in its interior: the body
    /// is translated so `p` becomes the origin and each translation vector
    /// is moved to the homothety image of `p`, preserving the family.
    pub fn with_reference(
        body: ConvexBody,
        p: &RatVec,
        homothets: Vec<Homothet>,
    ) -> Result<Arrangement> {
        let recentered = body.translate(&p.neg())?;
        let moved = homothets
            .into_iter()
            .map(|h| Homothet { v: h.v.add(&p.scale(&h.lambda)), lambda: h.lambda })
            .collect();
        Arrangement::new(recentered, moved)
    }

    pub fn body(&self) -> &ConvexBody {
        &self.body
    }

    pub fn homothets(&self) -> &[Homothet] {
        &self.homothets
    }

    pub fn len(&self) -> usize {
        self.homothets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homothets.is_empty()
    }

    fn preflight(&self) -> Result<()> {
        // Surface representation errors before entering the parallel scans.
        let zero = RatVec::zeros(self.body.dim());
        self.body.norm_cmp(&zero, &Rat::one()).map(|_| ())
    }

    /// Lexicographically smallest ordered pair violating the (non-strict)
    /// Minkowski condition.
    pub fn minkowski_violation(&self) -> Result<Option<(usize, usize)>> {
        self.preflight()?;
        let hs = &self.homothets;
        Ok(exec::first_failing_ordered_pair(hs.len(), |i, j| {
            let d = hs[i].v.sub(&hs[j].v);
            self.body.norm_cmp(&d, &hs[j].lambda).expect("validated body") != Ordering::Less
        }))
    }

    /// Lexicographically smallest ordered pair violating the strict
    /// Minkowski condition.
    pub fn strict_violation(&self) -> Result<Option<(usize, usize)>> {
        self.preflight()?;
        let hs = &self.homothets;
        Ok(exec::first_failing_ordered_pair(hs.len(), |i, j| {
            let d = hs[i].v.sub(&hs[j].v);
            self.body.norm_cmp(&d, &hs[j].lambda).expect("validated body") == Ordering::Greater
        }))
    }

    /// Lexicographically smallest non-intersecting unordered pair.
    pub fn intersection_violation(&self) -> Result<Option<(usize, usize)>> {
        let hs = &self.homothets;
        if hs.len() >= 2 {
            // Surface representation errors on one pair before going parallel.
            homothets_intersect(&self.body, &hs[0], &hs[1])?;
        }
        Ok(exec::first_failing_unordered_pair(hs.len(), |i, j| {
            homothets_intersect(&self.body, &hs[i], &hs[j]).expect("validated body")
        }))
    }

    pub fn is_minkowski(&self) -> Result<bool> {
        Ok(self.minkowski_violation()?.is_none())
    }

    pub fn is_strict_minkowski(&self) -> Result<bool> {
        Ok(self.strict_violation()?.is_none())
    }

    pub fn is_pairwise_intersecting(&self) -> Result<bool> {
        Ok(self.intersection_violation()?.is_none())
    }

    /// Run all three checks and assemble the report.
    pub fn verify(&self) -> Result<VerificationReport> {
        let minkowski = self.minkowski_violation()?;
        let strict = self.strict_violation()?;
        let intersecting = self.intersection_violation()?;
        let first_violation = if let Some((i, j)) = minkowski {
            Some((i, j, Condition::Minkowski))
        } else if let Some((i, j)) = strict {
            Some((i, j, Condition::Strict))
        } else {
            intersecting.map(|(i, j)| (i, j, Condition::Intersecting))
        };
        Ok(VerificationReport {
            minkowski: minkowski.is_none(),
            strict: strict.is_none(),
            pairwise_intersecting: intersecting.is_none(),
            count: self.homothets.len(),
            first_violation,
        })
    }
}

/// Exact intersection test for two homothets of the same body.
fn homothets_intersect(body: &ConvexBody, hi: &Homothet, hj: &Homothet) -> Result<bool> {
    match body.shape() {
        Shape::Ball { radius } => {
            let d2 = hi.v.sub(&hj.v).norm2_sq();
            let reach = (&hi.lambda + &hj.lambda) * radius;
            Ok(d2 <= &reach * &reach)
        }
        Shape::Product { factors } => {
            let mut offset = 0;
            for f in factors {
                let bi = Homothet {
                    lambda: hi.lambda.clone(),
                    v: RatVec(hi.v.0[offset..offset + f.dim()].to_vec()),
                };
                let bj = Homothet {
                    lambda: hj.lambda.clone(),
                    v: RatVec(hj.v.0[offset..offset + f.dim()].to_vec()),
                };
                if !homothets_intersect(f, &bi, &bj)? {
                    return Ok(false);
                }
                offset += f.dim();
            }
            Ok(true)
        }
        Shape::Polytope(_) => {
            let d = body.dim();
            if let Some(facets) = body.facets() {
                // Feasibility in z: a·z <= lambda b + a·v for both homothets.
                let mut sys = LinearSystem::new(d);
                for h in [hi, hj] {
                    for f in facets {
                        let rhs = &h.lambda * &f.offset + f.normal.dot(&h.v);
                        sys.push(Constraint::le(f.normal.clone(), rhs));
                    }
                }
                Ok(sys.feasible())
            } else {
                // V-form: v_i + lambda_i sum(a u) = v_j + lambda_j sum(b u).
                let vs = body.vertices().expect("polytope carries a representation");
                let m = vs.len();
                let mut sys = LinearSystem::new(2 * m);
                for k in 0..d {
                    let mut row = RatVec::zeros(2 * m);
                    for (idx, u) in vs.iter().enumerate() {
                        row.0[idx] = &hi.lambda * &u.0[k];
                        row.0[m + idx] = -(&hj.lambda * &u.0[k]);
                    }
                    sys.push(Constraint::eq(row, &hj.v.0[k] - &hi.v.0[k]));
                }
                for block in [0, m] {
                    let mut row = RatVec::zeros(2 * m);
                    for idx in 0..m {
                        row.0[block + idx] = Rat::one();
                    }
                    sys.push(Constraint::eq(row, Rat::one()));
                }
                for idx in 0..2 * m {
                    let mut e = RatVec::zeros(2 * m);
                    e.0[idx] = Rat::one();
                    sys.push(Constraint::ge(e, Rat::zero()));
                }
                Ok(sys.feasible())
            }
        }
    }
}

/// Chain condition: `norm(p_j - p_i) = r_i` exactly for all i < j. The body
/// must be o-symmetric.
pub fn verify_chain(body: &ConvexBody, points: &[RatVec], radii: &[Rat]) -> Result<bool> {
    if !body.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    if points.len() != radii.len() {
        return Err(Error::InvalidParameter("one radius per point".into()));
    }
    for i in 0..points.len() {
        for j in (i + 1)..points.len() {
            let d = points[j].sub(&points[i]);
            if body.norm_cmp(&d, &radii[i])? != Ordering::Equal {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
