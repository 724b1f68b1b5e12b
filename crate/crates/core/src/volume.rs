//! Volumes and centroids.
//!
//! Exact (triangulation) for polytopes up to dimension 3 and for products
//! of exact factors; closed form for balls; Monte Carlo rejection with a
//! reported standard error for everything else.

use crate::body::{ConvexBody, Shape};
use crate::hull;
use crate::rat::{rat_to_f64, Rat, RatVec};
use crate::{exec, rng, Error, Result};
use num::{One, Zero};
use rand::Rng;

#[derive(Clone, Debug, PartialEq)]
pub enum Volume {
    Exact(Rat),
    Approx { value: f64, std_err: f64 },
}

impl Volume {
    pub fn to_f64(&self) -> f64 {
        match self {
            Volume::Exact(r) => rat_to_f64(r),
            Volume::Approx { value, .. } => *value,
        }
    }

    pub fn as_exact(&self) -> Option<&Rat> {
        match self {
            Volume::Exact(r) => Some(r),
            _ => None,
        }
    }
}

/// Default sample count for the Monte Carlo fallback.
const MC_SAMPLES: u64 = 200_000;

impl ConvexBody {
    /// Volume of the body. Exact where a triangulation or product
    /// factorization exists, otherwise closed form (balls) or Monte Carlo.
    pub fn volume(&self) -> Result<Volume> {
        match self.shape() {
            Shape::Polytope(_) => match self.volume_exact_polytope() {
                Some(v) => Ok(Volume::Exact(v)),
                None => self.volume_monte_carlo(MC_SAMPLES, 0),
            },
            Shape::Ball { radius } => Ok(Volume::Approx {
                value: ball_volume(self.dim(), rat_to_f64(radius)),
                std_err: 0.0,
            }),
            Shape::Product { factors } => {
                let mut exact = Rat::one();
                let mut all_exact = true;
                let mut value = 1.0f64;
                let mut rel_var = 0.0f64;
                for f in factors {
                    match f.volume()? {
                        Volume::Exact(r) => {
                            value *= rat_to_f64(&r);
                            exact *= r;
                        }
                        Volume::Approx { value: v, std_err } => {
                            all_exact = false;
                            value *= v;
                            if v != 0.0 {
                                rel_var += (std_err / v).powi(2);
                            }
                        }
                    }
                }
                if all_exact {
                    Ok(Volume::Exact(exact))
                } else {
                    Ok(Volume::Approx { value, std_err: value.abs() * rel_var.sqrt() })
                }
            }
        }
    }

    fn volume_exact_polytope(&self) -> Option<Rat> {
        let vs = self.vertices()?;
        match self.dim() {
            1 => {
                let (lo, hi) = hull::interval_of_points(vs);
                Some(hi - lo)
            }
            2 => Some(hull::polygon_area(&hull::hull_2d(vs))),
            3 => Some(hull::volume_3d(vs)),
            _ => None,
        }
    }

    /// Rejection Monte Carlo volume from the exact bounding box, with the
    /// binomial standard error. Deterministic per seed.
    pub fn volume_monte_carlo(&self, samples: u64, seed: u64) -> Result<Volume> {
        let bb = self.bounding_box()?;
        let lo: Vec<f64> = bb.iter().map(|(l, _)| rat_to_f64(l)).collect();
        let span: Vec<f64> = bb.iter().map(|(l, h)| rat_to_f64(&(h - l))).collect();
        let box_vol: f64 = span.iter().product();
        let chunk = 4096u64;
        let chunks = samples.div_ceil(chunk);
        let hits = exec::sum_indexed(chunks as usize, |c| {
            let mut rng = rng::stream(seed, c as u64);
            let in_chunk = chunk.min(samples - c as u64 * chunk);
            let mut hit = 0u64;
            let mut x = vec![0.0f64; self.dim()];
            for _ in 0..in_chunk {
                for k in 0..self.dim() {
                    x[k] = lo[k] + rng.random::<f64>() * span[k];
                }
                let inside = match self.contains_f64_band(&x, 1e-12) {
                    Some(b) => b,
                    None => {
                        let xr = RatVec::from_f64_exact(&x).unwrap();
                        self.contains(&xr).unwrap_or(false)
                    }
                };
                if inside {
                    hit += 1;
                }
            }
            hit
        });
        let p = hits as f64 / samples as f64;
        Ok(Volume::Approx {
            value: box_vol * p,
            std_err: box_vol * (p * (1.0 - p) / samples as f64).sqrt(),
        })
    }

    /// Exact rational centroid. Supported for polytopes up to dimension 3,
    /// simplices in any dimension, symmetric bodies (centroid is the
    /// origin), and products of supported factors.
    pub fn centroid(&self) -> Result<RatVec> {
        if self.is_symmetric() {
            return Ok(RatVec::zeros(self.dim()));
        }
        match self.shape() {
            Shape::Ball { .. } => Ok(RatVec::zeros(self.dim())),
            Shape::Product { factors } => {
                let blocks: Vec<RatVec> =
                    factors.iter().map(|f| f.centroid()).collect::<Result<_>>()?;
                Ok(RatVec::concat(&blocks))
            }
            Shape::Polytope(_) => {
                let vs = self.vertices().ok_or_else(|| {
                    Error::ExactUnavailable("centroid needs a vertex list".into())
                })?;
                match self.dim() {
                    1 => {
                        let (lo, hi) = hull::interval_of_points(vs);
                        Ok(RatVec(vec![(lo + hi) / Rat::from_integer(2.into())]))
                    }
                    2 => Ok(hull::polygon_centroid(&hull::hull_2d(vs))),
                    3 => Ok(hull::centroid_3d(vs)),
                    d => {
                        // A simplex centroid is the vertex average.
                        if vs.len() == d + 1 && affinely_independent(vs) {
                            let sum = vs.iter().fold(RatVec::zeros(d), |acc, v| acc.add(v));
                            Ok(sum.scale(&Rat::new(1.into(), (d as i64 + 1).into())))
                        } else {
                            Err(Error::ExactUnavailable(
                                "centroid above dimension 3 requires a simplex".into(),
                            ))
                        }
                    }
                }
            }
        }
    }
}

fn affinely_independent(vs: &[RatVec]) -> bool {
    let d = vs[0].dim();
    if vs.len() != d + 1 {
        return false;
    }
    // Gaussian elimination on the edge vectors from vs[0].
    let mut m: Vec<Vec<Rat>> = vs[1..].iter().map(|v| v.sub(&vs[0]).0).collect();
    for col in 0..d {
        let pivot = (col..d).find(|&r| !m[r][col].is_zero());
        let Some(p) = pivot else { return false };
        m.swap(col, p);
        let inv = m[col][col].clone().recip();
        for r in (col + 1)..d {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..d {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    true
}

fn ball_volume(dim: usize, r: f64) -> f64 {
    // v_d = v_{d-2} * 2 pi r^2 / d, with v_0 = 1 and v_1 = 2r.
    let mut v = if dim.is_multiple_of(2) { 1.0 } else { 2.0 * r };
    let mut d = if dim.is_multiple_of(2) { 0 } else { 1 };
    while d < dim {
        d += 2;
        v *= 2.0 * std::f64::consts::PI * r * r / d as f64;
    }
    v
}
