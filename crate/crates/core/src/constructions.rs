//! Deterministic lower-bound witnesses.
//!
//! - the 3^d cube grid (kappa(C^d) >= 3^d);
//! - the icosahedron contact configuration (12 strict unit points for the
//!   ball, exact in Q(phi)) and its cube-product amplification;
//! - products of the planar 10-triangle arrangement;
//! - the checked-in planar witnesses regenerated by the search module.

use crate::arrangement::{Arrangement, Homothet};
use crate::body::ConvexBody;
use crate::golden::{Golden, GoldenVec};
use crate::rat::{Rat, RatVec};
use crate::{Error, Result};
use num::One;
use std::cmp::Ordering;

const CIRCLES8_JSON: &str = include_str!("../../../data/circles8.json");
const TRIANGLES10_JSON: &str = include_str!("../../../data/triangles10.json");

/// The 3^d unit translates of the cube `[-1,1]^d` on the grid `{-1,0,1}^d`.
pub fn cube_grid_witness(dim: usize) -> Result<Arrangement> {
    if dim == 0 {
        return Err(Error::InvalidParameter("dimension must be >= 1".into()));
    }
    let body = ConvexBody::cube(dim);
    let n = 3usize.pow(dim as u32);
    let mut homothets = Vec::with_capacity(n);
    for idx in 0..n {
        let mut rem = idx;
        let mut coords = Vec::with_capacity(dim);
        for _ in 0..dim {
            coords.push(rem as i64 % 3 - 1);
            rem /= 3;
        }
        homothets.push(Homothet::translate_unit(RatVec::from_ints(&coords)));
    }
    Arrangement::new(body, homothets)
}

/// The 12 icosahedron vertices scaled to the unit sphere, kept exact in
/// Q(phi): stored unnormalized as the cyclic family (0, ±1, ±phi) with
/// squared circumradius phi + 2.
pub struct IcosahedronWitness {
    vertices: Vec<GoldenVec>,
}

pub fn icosahedron_witness() -> IcosahedronWitness {
    let zero = || Golden::from_int(0);
    let one = || Golden::from_int(1);
    let phi = Golden::phi;
    let mut vertices = Vec::with_capacity(12);
    for (a, b) in [(one(), phi()), (one(), -phi()), (-one(), phi()), (-one(), -phi())] {
        vertices.push(GoldenVec(vec![zero(), a.clone(), b.clone()]));
        vertices.push(GoldenVec(vec![a.clone(), b.clone(), zero()]));
        vertices.push(GoldenVec(vec![b, zero(), a]));
    }
    IcosahedronWitness { vertices }
}

impl IcosahedronWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Squared circumradius of the unnormalized family: phi + 2.
    pub fn radius_sq(&self) -> Golden {
        Golden::from_int(1) + Golden::phi() * Golden::phi()
    }

    /// Normalized points as floats (each has Euclidean norm 1).
    pub fn points_f64(&self) -> Vec<[f64; 3]> {
        let r = self.radius_sq().to_f64().sqrt();
        self.vertices
            .iter()
            .map(|v| {
                let f = v.to_f64();
                [f[0] / r, f[1] / r, f[2] / r]
            })
            .collect()
    }

    /// Exact check that every normalized vertex lies on the unit sphere and
    /// all pairwise distances strictly exceed 1; with all homothety ratios
    /// one, this is the strict pairwise-intersecting witness condition for
    /// the translates `-x_i + B^3` (which all contain the origin).
    pub fn verify_strict_unit_config(&self) -> bool {
        let r2 = self.radius_sq();
        for v in &self.vertices {
            if v.norm2_sq() != r2 {
                return false;
            }
        }
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let d2 = self.vertices[i].sub(&self.vertices[j]).norm2_sq();
                // normalized distance^2 > 1 <=> unnormalized > radius^2
                if d2.cmp(&r2) != Ordering::Greater {
                    return false;
                }
            }
        }
        true
    }

    /// Exact minimum squared pairwise distance of the normalized points,
    /// as an element of Q(phi). Equals 4/(phi+2).
    pub fn min_pairwise_distance_sq(&self) -> (Golden, Golden) {
        let mut min: Option<Golden> = None;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let d2 = self.vertices[i].sub(&self.vertices[j]).norm2_sq();
                if min.as_ref().is_none_or(|m| d2 < *m) {
                    min = Some(d2);
                }
            }
        }
        (min.unwrap(), self.radius_sq())
    }

    /// Cube-product amplification: the 2^k * 12 points
    /// `(s, x_i), s ∈ {-1,1}^k` on the boundary of `C^k × B^3`, verified
    /// exactly (cube blocks are ±1, ball blocks stay in Q(phi)).
    pub fn amplified(&self, k: usize) -> AmplifiedIcosahedron {
        let signs = sign_patterns(k);
        let mut points = Vec::with_capacity(signs.len() * self.vertices.len());
        for s in &signs {
            for v in &self.vertices {
                points.push((s.clone(), v.clone()));
            }
        }
        AmplifiedIcosahedron { k, points }
    }
}

/// Strict unit configuration on `C^k × B^3` built from the icosahedron.
pub struct AmplifiedIcosahedron {
    k: usize,
    points: Vec<(Vec<i8>, GoldenVec)>,
}

impl AmplifiedIcosahedron {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.k + 3
    }

    /// Exact verification of the product-norm strict condition: every point
    /// has product norm 1, and every pair differs by product norm > 1
    /// (cube blocks differ by 2, or ball blocks differ by more than 1).
    pub fn verify_strict_unit_config(&self) -> bool {
        let r2 = icosahedron_witness().radius_sq();
        for (s, v) in &self.points {
            if s.iter().any(|&c| c != 1 && c != -1) || v.norm2_sq() != r2 {
                return false;
            }
        }
        for i in 0..self.points.len() {
            for j in (i + 1)..self.points.len() {
                let (si, vi) = &self.points[i];
                let (sj, vj) = &self.points[j];
                if si == sj {
                    let d2 = vi.sub(vj).norm2_sq();
                    if d2.cmp(&r2) != Ordering::Greater {
                        return false;
                    }
                } // different sign blocks differ by 2 > 1 in the sup norm
            }
        }
        true
    }

    pub fn points_f64(&self) -> Vec<Vec<f64>> {
        let r = icosahedron_witness().radius_sq().to_f64().sqrt();
        self.points
            .iter()
            .map(|(s, v)| {
                let mut out: Vec<f64> = s.iter().map(|&c| c as f64).collect();
                out.extend(v.to_f64().iter().map(|x| x / r));
                out
            })
            .collect()
    }
}

fn sign_patterns(k: usize) -> Vec<Vec<i8>> {
    (0..(1usize << k))
        .map(|mask| (0..k).map(|b| if mask >> b & 1 == 1 { -1 } else { 1 }).collect())
        .collect()
}

/// Cube-product amplifier for rational point sets: from points p_j on bd K
/// with pairwise gauge distance > 1, produce the 2^k * m points `(s, p_j)`
/// on bd(C^k × K). The expansion is purely combinatorial; callers verify
/// the output against the product body.
pub fn cube_product_amplifier(k: usize, points: &[RatVec]) -> Vec<RatVec> {
    let mut out = Vec::with_capacity((1 << k) * points.len());
    for s in sign_patterns(k) {
        for p in points {
            let mut coords: Vec<Rat> =
                s.iter().map(|&c| Rat::from_integer((c as i64).into())).collect();
            coords.extend(p.0.iter().cloned());
            out.push(RatVec(coords));
        }
    }
    out
}

/// Product of `floor(d/2)` copies of the planar 10-triangle translate
/// arrangement: 10^(floor(d/2)) unit homothets of the triangle power with
/// the centroid as reference point.
pub fn triangle_product_witness(dim: usize) -> Result<Arrangement> {
    let k = dim / 2;
    if k == 0 {
        return Err(Error::InvalidParameter(
            "triangle products need dimension >= 2".into(),
        ));
    }
    let base = load_named_witness("triangles10")?;
    let factor_translations: Vec<RatVec> =
        base.homothets().iter().map(|h| h.v.clone()).collect();
    if base.homothets().iter().any(|h| h.lambda != Rat::one()) {
        return Err(Error::InvalidParameter(
            "the base triangle witness must be translate-only".into(),
        ));
    }
    let body = ConvexBody::product(vec![base.body().clone(); k])?;
    // All k-fold combinations of the base translations.
    let mut combos: Vec<RatVec> = vec![RatVec(vec![])];
    for _ in 0..k {
        let mut next = Vec::with_capacity(combos.len() * factor_translations.len());
        for c in &combos {
            for t in &factor_translations {
                let mut coords = c.0.clone();
                coords.extend(t.0.iter().cloned());
                next.push(RatVec(coords));
            }
        }
        combos = next;
    }
    Arrangement::new(body, combos.into_iter().map(Homothet::translate_unit).collect())
}

/// Checked-in planar witnesses, regenerated by the search module and
/// shipped under data/. Loading parses and validates the geometry;
/// condition verification stays with the caller.
pub fn load_named_witness(name: &str) -> Result<Arrangement> {
    let json = match name {
        "circles8" => CIRCLES8_JSON,
        "triangles10" => TRIANGLES10_JSON,
        _ => return Err(Error::UnknownWitness(name.into())),
    };
    Ok(serde_json::from_str(json)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::golden::PHI_F64;
    use crate::rat::rat_int;

    #[test]
    fn cube_grids_verify() {
        for d in 1..=2usize {
            let a = cube_grid_witness(d).unwrap();
            assert_eq!(a.len(), 3usize.pow(d as u32));
            let r = a.verify().unwrap();
            assert!(r.minkowski && r.pairwise_intersecting, "d = {d}");
        }
        assert_eq!(cube_grid_witness(1).unwrap().len(), 3);
    }

    #[test]
    fn icosahedron_exact_checks() {
        let ico = icosahedron_witness();
        assert_eq!(ico.len(), 12);
        assert!(ico.verify_strict_unit_config());
        let (min_d2, r2) = ico.min_pairwise_distance_sq();
        // min distance^2 (unnormalized) is 4; radius^2 is phi + 2.
        assert_eq!(min_d2, Golden::from_int(4));
        assert_eq!(r2, Golden::from_int(1) + Golden::phi() * Golden::phi());
        // Normalized: 2/sqrt(phi+2) ~ 1.05146 > 1.
        let ratio = (min_d2.to_f64() / r2.to_f64()).sqrt();
        assert!((ratio - 2.0 / (PHI_F64 + 2.0).sqrt()).abs() < 1e-12);
        assert!((ratio - 1.05146).abs() < 1e-5);
        // All normalized points are unit vectors.
        for p in ico.points_f64() {
            let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
            assert!((n - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn amplified_icosahedron_is_24_points_in_4d() {
        let amp = icosahedron_witness().amplified(1);
        assert_eq!(amp.len(), 24);
        assert_eq!(amp.dim(), 4);
        assert!(amp.verify_strict_unit_config());
        // k = 0 is the identity.
        let same = icosahedron_witness().amplified(0);
        assert_eq!(same.len(), 12);
        assert!(same.verify_strict_unit_config());
    }

    #[test]
    fn amplifier_on_segment_point() {
        // k=2 on the single point (1) of [-1,1]: 4 points with pairwise
        // sup-distance 2 > 1.
        let pts = cube_product_amplifier(2, &[RatVec::from_ints(&[1])]);
        assert_eq!(pts.len(), 4);
        let body = ConvexBody::product(vec![
            ConvexBody::cube(1),
            ConvexBody::cube(1),
            ConvexBody::cube(1),
        ])
        .unwrap();
        let one = rat_int(1);
        let segment = ConvexBody::cube(1);
        for i in 0..pts.len() {
            for j in 0..pts.len() {
                if i != j {
                    let d = pts[i].sub(&pts[j]);
                    assert_eq!(body.norm_cmp(&d, &one).unwrap(), Ordering::Greater);
                    // Independent recomputation: the product-norm distance
                    // is the max of the cube-block and K-block distances.
                    let cube_block = ConvexBody::cube(2)
                        .norm(&RatVec(d.0[..2].to_vec()))
                        .unwrap();
                    let k_block =
                        segment.norm(&RatVec(d.0[2..].to_vec())).unwrap();
                    assert_eq!(body.norm(&d).unwrap(), cube_block.max(k_block));
                }
            }
        }
        // k=0 is the identity.
        let id = cube_product_amplifier(0, &[RatVec::from_ints(&[1])]);
        assert_eq!(id, vec![RatVec::from_ints(&[1])]);
    }

    #[test]
    fn named_witnesses_load_and_verify() {
        let t = load_named_witness("triangles10").unwrap();
        assert_eq!(t.len(), 10);
        let r = t.verify().unwrap();
        assert!(r.minkowski && r.pairwise_intersecting);

        let c = load_named_witness("circles8").unwrap();
        assert_eq!(c.len(), 8);
        let r = c.verify().unwrap();
        assert!(r.strict && r.pairwise_intersecting);

        assert!(matches!(
            load_named_witness("hexagons7"),
            Err(Error::UnknownWitness(_))
        ));
    }

    #[test]
    fn triangle_products() {
        let a = triangle_product_witness(2).unwrap();
        assert_eq!(a.len(), 10);
        // d = 3 uses floor(3/2) = 1 factor.
        let a3 = triangle_product_witness(3).unwrap();
        assert_eq!(a3.len(), 10);
        assert_eq!(a3.body().dim(), 2);
        assert!(triangle_product_witness(1).is_err());
        // The centroid of each factor is the origin, so the product
        // reference point is the centroid.
        assert_eq!(a.body().centroid().unwrap(), RatVec::zeros(2));
    }
}
