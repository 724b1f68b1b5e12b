//! The central symmetral ½(K−K) and the symmetric core K ∩ −K.
//!
//! Both symmetrizations are explicit bodies where that is cheap (the core
//! whenever facets are known, the symmetral in dimension <= 3 via the hull
//! of pairwise vertex differences) and norm-only handles everywhere else.
//! Handle norms are still exact for polytopes: the core norm is
//! `max(norm(x), norm(-x))` and the symmetral norm is a small exact LP.

use crate::body::{ConvexBody, Shape};
use crate::hull::Halfspace;
use crate::lp::{Constraint, LinearSystem};
use crate::rat::{Rat, RatVec, Scalar};
use crate::volume::Volume;
use crate::{Error, Result};
use num::{One, Zero};
use std::cmp::Ordering;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetralKind {
    /// ½(K − K)
    CentralSymmetral,
    /// K ∩ −K
    SymmetricCore,
}

/// A symmetrization of a base body: explicit when constructible, otherwise
/// a norm-only handle flagged by `body() == None`.
#[derive(Clone, Debug)]
pub struct Symmetrized {
    kind: SymmetralKind,
    base: ConvexBody,
    explicit: Option<ConvexBody>,
}

impl ConvexBody {
    /// The central symmetral ½(K − K).
    pub fn central_symmetral(&self) -> Result<Symmetrized> {
        let explicit = self.try_explicit_symmetral()?;
        Ok(Symmetrized { kind: SymmetralKind::CentralSymmetral, base: self.clone(), explicit })
    }

    /// The symmetric core K ∩ −K.
    pub fn symmetric_core(&self) -> Result<Symmetrized> {
        let explicit = self.try_explicit_core()?;
        Ok(Symmetrized { kind: SymmetralKind::SymmetricCore, base: self.clone(), explicit })
    }

    fn try_explicit_symmetral(&self) -> Result<Option<ConvexBody>> {
        if self.is_symmetric() {
            return Ok(Some(self.clone()));
        }
        match self.shape() {
            Shape::Ball { .. } => Ok(Some(self.clone())),
            Shape::Product { factors } => {
                let parts: Result<Vec<Option<ConvexBody>>> =
                    factors.iter().map(|f| f.try_explicit_symmetral()).collect();
                match parts?.into_iter().collect::<Option<Vec<_>>>() {
                    Some(fs) => Ok(Some(ConvexBody::product(fs)?)),
                    None => Ok(None),
                }
            }
            Shape::Polytope(_) => {
                if self.dim() > 3 {
                    return Ok(None);
                }
                let vs = self.vertices().expect("low-dim polytopes carry vertices");
                let half = Rat::new(1.into(), 2.into());
                let mut diffs = Vec::with_capacity(vs.len() * vs.len());
                for a in vs {
                    for b in vs {
                        diffs.push(a.sub(b).scale(&half));
                    }
                }
                Ok(Some(ConvexBody::vpolytope(self.dim(), diffs)?))
            }
        }
    }

    fn try_explicit_core(&self) -> Result<Option<ConvexBody>> {
        if self.is_symmetric() {
            return Ok(Some(self.clone()));
        }
        match self.shape() {
            Shape::Ball { .. } => Ok(Some(self.clone())),
            Shape::Product { factors } => {
                let parts: Result<Vec<Option<ConvexBody>>> =
                    factors.iter().map(|f| f.try_explicit_core()).collect();
                match parts?.into_iter().collect::<Option<Vec<_>>>() {
                    Some(fs) => Ok(Some(ConvexBody::product(fs)?)),
                    None => Ok(None),
                }
            }
            Shape::Polytope(_) => match self.facets() {
                // K ∩ -K in H-form: the facets of K plus their negations.
                Some(fs) => {
                    let mut all = fs.to_vec();
                    all.extend(
                        fs.iter()
                            .map(|f| Halfspace::new(f.normal.neg(), f.offset.clone())),
                    );
                    Ok(Some(ConvexBody::hpolytope(self.dim(), all)?))
                }
                None => Ok(None),
            },
        }
    }

    /// Exact gauge of ½(K − K) at `x` via the LP
    /// `min t : 2x = u - w, u ∈ tK, w ∈ tK`.
    pub fn symmetral_norm_lp(&self, x: &RatVec) -> Result<Rat> {
        let d = self.dim();
        self.check_dim(x)?;
        if let Some(facets) = self.facets() {
            // Variables (u, w, t).
            let n = 2 * d + 1;
            let mut sys = LinearSystem::new(n);
            for k in 0..d {
                let mut row = RatVec::zeros(n);
                row.0[k] = Rat::one();
                row.0[d + k] = -Rat::one();
                sys.push(Constraint::eq(row, &x.0[k] * Rat::from_integer(2.into())));
            }
            for f in facets {
                for block in [0, d] {
                    let mut row = RatVec::zeros(n);
                    for k in 0..d {
                        row.0[block + k] = f.normal.0[k].clone();
                    }
                    row.0[2 * d] = -f.offset.clone();
                    sys.push(Constraint::le(row, Rat::zero()));
                }
            }
            let mut t_obj = RatVec::zeros(n);
            t_obj.0[2 * d] = Rat::one();
            sys.push(Constraint::ge(t_obj.clone(), Rat::zero()));
            let (value, _) = sys
                .minimize(&t_obj)
                .ok_or_else(|| Error::ExactUnavailable("symmetral norm LP failed".into()))?;
            Ok(value)
        } else if let Some(vs) = self.vertices() {
            // tK = {sum a_i v_i : a_i >= 0, sum a_i = t}; variables (a, b, t).
            let m = vs.len();
            let n = 2 * m + 1;
            let mut sys = LinearSystem::new(n);
            for k in 0..d {
                let mut row = RatVec::zeros(n);
                for (i, v) in vs.iter().enumerate() {
                    row.0[i] = v.0[k].clone();
                    row.0[m + i] = -v.0[k].clone();
                }
                sys.push(Constraint::eq(row, &x.0[k] * Rat::from_integer(2.into())));
            }
            for block in [0, m] {
                let mut row = RatVec::zeros(n);
                for i in 0..m {
                    row.0[block + i] = Rat::one();
                }
                row.0[2 * m] = -Rat::one();
                sys.push(Constraint::eq(row, Rat::zero()));
            }
            for j in 0..2 * m {
                let mut e = RatVec::zeros(n);
                e.0[j] = Rat::one();
                sys.push(Constraint::ge(e, Rat::zero()));
            }
            let mut t_obj = RatVec::zeros(n);
            t_obj.0[2 * m] = Rat::one();
            let (value, _) = sys
                .minimize(&t_obj)
                .ok_or_else(|| Error::ExactUnavailable("symmetral norm LP failed".into()))?;
            Ok(value)
        } else {
            Err(Error::UnsupportedRepresentation(
                "symmetral norm needs facets or vertices".into(),
            ))
        }
    }
}

impl Symmetrized {
    pub fn kind(&self) -> SymmetralKind {
        self.kind
    }

    /// The explicit body, when one was constructible.
    pub fn body(&self) -> Option<&ConvexBody> {
        self.explicit.as_ref()
    }

    pub fn is_explicit(&self) -> bool {
        self.explicit.is_some()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Gauge of the symmetrized body at `x`; exact whenever the base body
    /// has a rational gauge.
    pub fn norm(&self, x: &RatVec) -> Result<Scalar> {
        match self.kind {
            SymmetralKind::SymmetricCore => self.base.core_norm(x),
            SymmetralKind::CentralSymmetral => {
                if let Some(b) = &self.explicit {
                    b.norm(x)
                } else if self.base.has_rational_norm() {
                    self.symmetral_norm_via_blocks(x)
                } else {
                    Err(Error::ExactUnavailable(
                        "symmetral norm through a ball factor".into(),
                    ))
                }
            }
        }
    }

    fn symmetral_norm_via_blocks(&self, x: &RatVec) -> Result<Scalar> {
        match self.base.shape() {
            Shape::Product { factors } => {
                let mut best = Scalar::Exact(Rat::zero());
                let mut offset = 0;
                for f in factors {
                    let block = RatVec(x.0[offset..offset + f.dim()].to_vec());
                    let v = f.central_symmetral()?.norm(&block)?;
                    best = best.max(v);
                    offset += f.dim();
                }
                Ok(best)
            }
            _ => Ok(Scalar::Exact(self.base.symmetral_norm_lp(x)?)),
        }
    }

    /// Exact comparison of the handle norm with a rational threshold.
    pub fn norm_cmp(&self, x: &RatVec, threshold: &Rat) -> Result<Ordering> {
        match self.kind {
            SymmetralKind::SymmetricCore => {
                if let Some(b) = &self.explicit {
                    b.norm_cmp(x, threshold)
                } else {
                    self.base.core_norm_cmp(x, threshold)
                }
            }
            SymmetralKind::CentralSymmetral => {
                if let Some(b) = &self.explicit {
                    b.norm_cmp(x, threshold)
                } else {
                    match self.norm(x)? {
                        Scalar::Exact(v) => Ok(v.cmp(threshold)),
                        Scalar::Approx(v) => Ok(v
                            .partial_cmp(&crate::rat::rat_to_f64(threshold))
                            .unwrap_or(Ordering::Equal)),
                    }
                }
            }
        }
    }

    /// Volume of the symmetrized body: exact through the explicit body,
    /// Monte Carlo through the handle otherwise.
    pub fn volume(&self) -> Result<Volume> {
        if let Some(b) = &self.explicit {
            return b.volume();
        }
        self.volume_monte_carlo(20_000, 0)
    }

    /// Handle-based Monte Carlo volume: rejection from a symmetrized box
    /// with exact membership via `norm_cmp`.
    pub fn volume_monte_carlo(&self, samples: u64, seed: u64) -> Result<Volume> {
        use rand::Rng;
        let bb = self.base.bounding_box()?;
        // Both ½(K-K) and K ∩ -K lie in the symmetric box with half-width
        // max(|lo|, |hi|, (hi-lo)/2) per coordinate.
        let spans: Vec<(f64, f64)> = bb
            .iter()
            .map(|(l, h)| {
                let l = crate::rat::rat_to_f64(l);
                let h = crate::rat::rat_to_f64(h);
                let m = ((h - l) / 2.0).max(l.abs().max(h.abs()));
                (-m, m)
            })
            .collect();
        let box_vol: f64 = spans.iter().map(|(l, h)| h - l).product();
        let one = Rat::one();
        let mut hit = 0u64;
        let mut rng = crate::rng::stream(seed, 0);
        for _ in 0..samples {
            let x: Vec<f64> = spans
                .iter()
                .map(|(l, h)| l + rng.random::<f64>() * (h - l))
                .collect();
            let xr = RatVec::from_f64_exact(&x).unwrap();
            if self.norm_cmp(&xr, &one)? != Ordering::Greater {
                hit += 1;
            }
        }
        let p = hit as f64 / samples as f64;
        Ok(Volume::Approx {
            value: box_vol * p,
            std_err: box_vol * (p * (1.0 - p) / samples as f64).sqrt(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    #[test]
    fn symmetric_body_is_its_own_symmetral() {
        let c = ConvexBody::cube(2);
        let s = c.central_symmetral().unwrap();
        let k = c.symmetric_core().unwrap();
        assert!(s.is_explicit() && k.is_explicit());
        let x = RatVec::from_ints(&[2, 3]);
        assert_eq!(s.norm(&x).unwrap(), Scalar::Exact(rat_int(3)));
        assert_eq!(k.norm(&x).unwrap(), Scalar::Exact(rat_int(3)));
    }

    #[test]
    fn triangle_symmetral_area_matches_rogers_shephard() {
        // For a planar simplex vol(K-K) = binom(4,2) vol(K) = 6 * 3/2 = 9,
        // so the symmetral has area 9/4.
        let t = ConvexBody::triangle();
        let s = t.central_symmetral().unwrap();
        assert!(s.is_explicit());
        assert_eq!(s.volume().unwrap(), Volume::Exact(rat(9, 4)));
        // The symmetral of a triangle is a hexagon.
        assert_eq!(s.body().unwrap().vertices().unwrap().len(), 6);
    }

    #[test]
    fn triangle_core_area_is_one() {
        let t = ConvexBody::triangle();
        let k = t.symmetric_core().unwrap();
        assert!(k.is_explicit());
        assert_eq!(k.volume().unwrap(), Volume::Exact(rat_int(1)));
    }

    #[test]
    fn core_norm_identity_explicit_vs_implicit() {
        let t = ConvexBody::triangle();
        let k = t.symmetric_core().unwrap();
        let explicit = k.body().unwrap();
        for coords in [[1i64, 2], [-3, 1], [2, -5], [0, 1]] {
            let x = RatVec::from_ints(&coords);
            let via_body = explicit.norm(&x).unwrap();
            let via_identity = t.core_norm(&x).unwrap();
            assert_eq!(via_body, via_identity, "mismatch at {coords:?}");
        }
    }

    #[test]
    fn symmetral_norm_lp_matches_explicit_body() {
        let t = ConvexBody::triangle();
        let s = t.central_symmetral().unwrap();
        let explicit = s.body().unwrap();
        for coords in [[1i64, 0], [0, 1], [1, 1], [-2, 3], [5, -1]] {
            let x = RatVec::from_ints(&coords);
            let via_body = match explicit.norm(&x).unwrap() {
                Scalar::Exact(v) => v,
                _ => unreachable!(),
            };
            let via_lp = t.symmetral_norm_lp(&x).unwrap();
            assert_eq!(via_body, via_lp, "mismatch at {coords:?}");
        }
    }

    #[test]
    fn product_symmetral_factorizes() {
        let t = ConvexBody::triangle();
        let tt = ConvexBody::product(vec![t.clone(), t]).unwrap();
        let s = tt.central_symmetral().unwrap();
        assert!(s.is_explicit());
        assert_eq!(s.volume().unwrap(), Volume::Exact(rat(81, 16)));
        let k = tt.symmetric_core().unwrap();
        assert_eq!(k.volume().unwrap(), Volume::Exact(rat_int(1)));
    }
}
