//! Randomized constructions and Monte Carlo estimators.
//!
//! The random step only proposes; every returned arrangement or point set
//! is reverified by the exact machinery before it leaves this module.
//! Sampling is rejection from the exact bounding box with per-index random
//! streams, so outputs are reproducible for a fixed seed across any thread
//! count.

use crate::arrangement::{Arrangement, Homothet};
use crate::body::ConvexBody;
use crate::rat::{rat_from_f64, rat_to_f64, Rat, RatVec};
use crate::{exec, rng, Error, Result};
use num::One;
use rand::Rng;
use std::cmp::Ordering;

#[derive(Clone, Debug)]
pub struct RandomConfig {
    pub seed: u64,
    pub max_retries: usize,
    /// Multiplies the proof-level sample counts, which vanish at desk-scale
    /// dimensions; must be >= 1.
    pub oversample_factor: Rat,
}

impl Default for RandomConfig {
    fn default() -> Self {
        RandomConfig { seed: 0, max_retries: 8, oversample_factor: Rat::one() }
    }
}

impl RandomConfig {
    pub fn with_seed(seed: u64) -> Self {
        RandomConfig { seed, ..Default::default() }
    }

    pub fn oversample(mut self, factor: i64) -> Self {
        self.oversample_factor = Rat::from_integer(factor.into());
        self
    }

    fn validate(&self) -> Result<()> {
        if self.max_retries < 1 {
            return Err(Error::InvalidParameter("max_retries must be >= 1".into()));
        }
        if self.oversample_factor < Rat::one() {
            return Err(Error::InvalidParameter("oversample_factor must be >= 1".into()));
        }
        Ok(())
    }
}

/// Attempts per point before declaring the acceptance rate hopeless.
const MAX_ATTEMPTS_PER_POINT: u64 = 5_000_000;
const REFUSAL_RATE: f64 = 1e-6;

/// `n` points uniform in `K` (rejection sampling from the exact bounding
/// box). Points come back as exact rationals with membership verified
/// exactly; floats only steer the rejection.
pub fn sample_uniform(body: &ConvexBody, n: usize, cfg: &RandomConfig) -> Result<Vec<RatVec>> {
    cfg.validate()?;
    sample_uniform_stream(body, n, cfg.seed, 0)
}

fn sample_uniform_stream(
    body: &ConvexBody,
    n: usize,
    seed: u64,
    stream_base: u64,
) -> Result<Vec<RatVec>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let bb = body.bounding_box()?;
    let lo: Vec<f64> = bb.iter().map(|(l, _)| rat_to_f64(l)).collect();
    let span: Vec<f64> = bb.iter().map(|(l, h)| rat_to_f64(&(h - l))).collect();
    let results = exec::map_indexed(n, |i| -> Result<RatVec> {
        let mut rng = rng::stream(seed, stream_base + i as u64);
        let mut x = vec![0.0f64; body.dim()];
        for _attempt in 0..MAX_ATTEMPTS_PER_POINT {
            for k in 0..body.dim() {
                x[k] = lo[k] + rng.random::<f64>() * span[k];
            }
            // Cheap float prefilter; anything near the boundary gets the
            // exact test, so the returned point is certified in K.
            let inside = match body.contains_f64_band(&x, 1e-9) {
                Some(b) => b,
                None => {
                    let xr = RatVec::from_f64_exact(&x).expect("finite sample");
                    body.contains(&xr)?
                }
            };
            if inside {
                let xr = RatVec::from_f64_exact(&x).expect("finite sample");
                debug_assert!(body.contains(&xr)?);
                return Ok(xr);
            }
        }
        Err(Error::AcceptanceTooLow(REFUSAL_RATE))
    });
    results.into_iter().collect()
}

/// Greedy close-pair deletion: scan ordered pairs lexicographically and
/// delete the higher index of any live pair with `norm(x_i - x_j) <= limit`.
/// Afterwards every surviving ordered pair is strictly farther than `limit`.
fn delete_close_pairs(body: &ConvexBody, points: &[RatVec], limit: &Rat) -> Result<Vec<bool>> {
    let n = points.len();
    let mut alive = vec![true; n];
    for i in 0..n {
        if !alive[i] {
            continue;
        }
        for j in 0..n {
            if i == j || !alive[i] || !alive[j] {
                continue;
            }
            let d = points[i].sub(&points[j]);
            if body.norm_cmp(&d, limit)? != Ordering::Greater {
                alive[i.max(j)] = false;
            }
        }
    }
    Ok(alive)
}

/// The randomized strict-arrangement construction: sample `2m` points from
/// K (m = max(1, floor(oversample/4 (2/sqrt3)^d))), delete one member of
/// each close pair, and return the translates `-x_i + K`. The output always
/// passes the exact strict and intersection checks; all members contain the
/// origin.
pub fn strict_translate_arrangement(body: &ConvexBody, cfg: &RandomConfig) -> Result<Arrangement> {
    cfg.validate()?;
    let d = body.dim();
    let base = 0.25 * (2.0 / 3.0f64.sqrt()).powi(d as i32);
    let target = (base.floor() as usize).max(1);
    // The proof-level count floors at 1 and is then scaled by the
    // oversample factor.
    let m_eff = ((target as f64 * rat_to_f64(&cfg.oversample_factor)).floor() as usize).max(1);
    let one = Rat::one();
    for retry in 0..cfg.max_retries {
        let points =
            sample_uniform_stream(body, 2 * m_eff, cfg.seed, (retry as u64 + 1) << 32)?;
        let alive = delete_close_pairs(body, &points, &one)?;
        let survivors: Vec<&RatVec> =
            points.iter().zip(&alive).filter(|(_, &a)| a).map(|(p, _)| p).collect();
        if survivors.len() < target {
            continue;
        }
        let homothets =
            survivors.iter().map(|x| Homothet::translate_unit(x.neg())).collect();
        let arrangement = Arrangement::new(body.clone(), homothets)?;
        // Postcondition recheck through the exact verifier.
        if arrangement.is_strict_minkowski()? && arrangement.is_pairwise_intersecting()? {
            return Ok(arrangement);
        }
    }
    Err(Error::RetriesExhausted(cfg.max_retries))
}

/// Boundary points with pairwise gauge distance > 1 (an h'(K) witness):
/// sample k points from the centroid-centered body, drop short points and
/// one member of each close pair, normalize the rest to the boundary, and
/// recheck exactly. Returns the centered body along with the points.
pub struct BoundaryWitness {
    pub body: ConvexBody,
    pub points: Vec<RatVec>,
}

pub fn boundary_strict_points(body: &ConvexBody, cfg: &RandomConfig) -> Result<BoundaryWitness> {
    cfg.validate()?;
    if !body.has_rational_norm() {
        return Err(Error::UnsupportedRepresentation(
            "boundary normalization needs a rational gauge (no ball factors)".into(),
        ));
    }
    let centroid = body.centroid()?;
    let centered = body.translate(&centroid.neg())?;
    let d = centered.dim();

    // delta with e^(delta d) = (d+4)/(d+1); any positive rational stand-in
    // preserves the final inequality, the value only tunes survivor counts.
    let delta_f = ((d as f64 + 4.0) / (d as f64 + 1.0)).ln() / d as f64;
    let delta = rat_from_f64(delta_f).expect("finite delta");
    let short_limit = Rat::one() - &delta;
    let close_limit = Rat::one() + Rat::from_integer((d as i64 + 1).into()) * &delta;

    let base = 0.5 * (2.0 / 3.0f64.sqrt()).powi(d as i32) * 3.0
        / (std::f64::consts::E.powi(2) * (d as f64 + 4.0));
    let k_target = (base.floor() as usize).max(1);
    let k = ((k_target as f64 * rat_to_f64(&cfg.oversample_factor)).floor() as usize).max(1);

    for retry in 0..cfg.max_retries {
        let points =
            sample_uniform_stream(&centered, k, cfg.seed, (retry as u64 + 1) << 32)?;
        // Drop short points (gauge <= 1 - delta), then close pairs.
        let kept: Vec<RatVec> = points
            .into_iter()
            .filter(|x| {
                !x.is_zero()
                    && centered.norm_cmp(x, &short_limit).expect("rational gauge")
                        == Ordering::Greater
            })
            .collect();
        if kept.is_empty() {
            continue;
        }
        let alive = delete_close_pairs(&centered, &kept, &close_limit)?;
        let survivors: Vec<RatVec> = kept
            .iter()
            .zip(&alive)
            .filter(|(_, &a)| a)
            .map(|(p, _)| centered.normalize(p).expect("nonzero survivor"))
            .collect();
        if survivors.is_empty() {
            continue;
        }
        // Exact recheck: unit norms and pairwise gauge > 1 in both orders.
        let one = Rat::one();
        let mut ok = survivors
            .iter()
            .all(|p| centered.norm_cmp(p, &one).unwrap() == Ordering::Equal);
        'outer: for i in 0..survivors.len() {
            for j in 0..survivors.len() {
                if i != j {
                    let diff = survivors[i].sub(&survivors[j]);
                    if centered.norm_cmp(&diff, &one)? != Ordering::Greater {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if ok {
            return Ok(BoundaryWitness { body: centered, points: survivors });
        }
    }
    Err(Error::RetriesExhausted(cfg.max_retries))
}

/// A unit vector `u` such that the centroid of the orthogonal projection of
/// K onto the hyperplane perpendicular to `u` has magnitude at most `tol`.
/// Supported in dimensions 2 and 3 (numerical search; the projection of the
/// polytope is computed per candidate direction).
pub fn centroid_projection_direction(body: &ConvexBody, tol: f64) -> Result<Vec<f64>> {
    let vs: Vec<Vec<f64>> = body
        .vertices()
        .ok_or_else(|| {
            Error::UnsupportedRepresentation("projection search needs polytope vertices".into())
        })?
        .iter()
        .map(|v| v.to_f64())
        .collect();
    match body.dim() {
        2 => {
            // Projection onto the line perpendicular to u(t) = (cos t, sin t)
            // is an interval; its centroid is the midpoint. The midpoint
            // changes sign between t and t + pi, so bisection applies.
            let mid = |t: f64| -> f64 {
                let w = (-t.sin(), t.cos());
                let mut lo = f64::INFINITY;
                let mut hi = f64::NEG_INFINITY;
                for v in &vs {
                    let s = v[0] * w.0 + v[1] * w.1;
                    lo = lo.min(s);
                    hi = hi.max(s);
                }
                (lo + hi) / 2.0
            };
            let coarse = 64;
            let mut best = (f64::INFINITY, 0.0f64);
            for i in 0..coarse {
                let t = std::f64::consts::PI * i as f64 / coarse as f64;
                let m = mid(t);
                if m.abs() < best.0 {
                    best = (m.abs(), t);
                }
                if m.abs() <= tol {
                    return Ok(vec![t.cos(), t.sin()]);
                }
                let t2 = std::f64::consts::PI * (i + 1) as f64 / coarse as f64;
                if mid(t) * mid(t2) <= 0.0 {
                    let (mut a, mut b) = (t, t2);
                    for _ in 0..200 {
                        let c = 0.5 * (a + b);
                        if mid(a) * mid(c) <= 0.0 {
                            b = c;
                        } else {
                            a = c;
                        }
                    }
                    let t_star = 0.5 * (a + b);
                    if mid(t_star).abs() <= tol {
                        return Ok(vec![t_star.cos(), t_star.sin()]);
                    }
                }
            }
            Err(Error::ToleranceNotReached { tol, best: best.0 })
        }
        3 => {
            let residual = |u: &[f64; 3]| -> f64 { projection_centroid_3d(&vs, u) };
            let mut best_res = f64::INFINITY;
            // Multi-start pattern search over spherical angles.
            let starts = 40;
            let golden = std::f64::consts::PI * (3.0 - 5.0f64.sqrt());
            for s in 0..starts {
                let z = 1.0 - 2.0 * (s as f64 + 0.5) / starts as f64;
                let mut theta = z.acos();
                let mut psi = golden * s as f64;
                let mut step = 0.4f64;
                let mut cur = residual(&sphere(theta, psi));
                while step > 1e-14 {
                    let mut improved = false;
                    for (dt, dp) in [(step, 0.0), (-step, 0.0), (0.0, step), (0.0, -step)] {
                        let cand = residual(&sphere(theta + dt, psi + dp));
                        if cand < cur {
                            cur = cand;
                            theta += dt;
                            psi += dp;
                            improved = true;
                        }
                    }
                    if !improved {
                        step *= 0.5;
                    }
                    if cur <= tol * 0.1 {
                        break;
                    }
                }
                best_res = best_res.min(cur);
                if cur <= tol {
                    let u = sphere(theta, psi);
                    return Ok(u.to_vec());
                }
            }
            Err(Error::ToleranceNotReached { tol, best: best_res })
        }
        d => Err(Error::UnsupportedRepresentation(format!(
            "projection direction search is restricted to dimensions 2 and 3 (got {d})"
        ))),
    }
}

fn sphere(theta: f64, psi: f64) -> [f64; 3] {
    [theta.sin() * psi.cos(), theta.sin() * psi.sin(), theta.cos()]
}

/// Magnitude of the area centroid of the projection of the vertex set onto
/// the plane perpendicular to `u`.
fn projection_centroid_3d(vs: &[Vec<f64>], u: &[f64; 3]) -> f64 {
    // Orthonormal basis of u-perp.
    let pick = if u[0].abs() < 0.9 { [1.0, 0.0, 0.0] } else { [0.0, 1.0, 0.0] };
    let mut e1 = [
        pick[1] * u[2] - pick[2] * u[1],
        pick[2] * u[0] - pick[0] * u[2],
        pick[0] * u[1] - pick[1] * u[0],
    ];
    let n1 = (e1[0] * e1[0] + e1[1] * e1[1] + e1[2] * e1[2]).sqrt();
    for v in &mut e1 {
        *v /= n1;
    }
    let e2 = [
        u[1] * e1[2] - u[2] * e1[1],
        u[2] * e1[0] - u[0] * e1[2],
        u[0] * e1[1] - u[1] * e1[0],
    ];
    let pts: Vec<(f64, f64)> = vs
        .iter()
        .map(|v| {
            (
                v[0] * e1[0] + v[1] * e1[1] + v[2] * e1[2],
                v[0] * e2[0] + v[1] * e2[1] + v[2] * e2[2],
            )
        })
        .collect();
    let hull = hull_2d_f64(&pts);
    if hull.len() < 3 {
        return 0.0;
    }
    let mut cx = 0.0;
    let mut cy = 0.0;
    let mut area2 = 0.0;
    for i in 0..hull.len() {
        let j = (i + 1) % hull.len();
        let w = hull[i].0 * hull[j].1 - hull[j].0 * hull[i].1;
        cx += (hull[i].0 + hull[j].0) * w;
        cy += (hull[i].1 + hull[j].1) * w;
        area2 += w;
    }
    cx /= 3.0 * area2;
    cy /= 3.0 * area2;
    (cx * cx + cy * cy).sqrt()
}

fn hull_2d_f64(pts: &[(f64, f64)]) -> Vec<(f64, f64)> {
    let mut p: Vec<(f64, f64)> = pts.to_vec();
    p.sort_by(|a, b| a.partial_cmp(b).unwrap());
    p.dedup();
    if p.len() <= 2 {
        return p;
    }
    let cross = |o: (f64, f64), a: (f64, f64), b: (f64, f64)| {
        (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
    };
    let mut lower: Vec<(f64, f64)> = Vec::new();
    for &q in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0.0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(f64, f64)> = Vec::new();
    for &q in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0.0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Closed-form bound `(t^2 (4 - t^2) / 4)^(d/2)` on the distance
/// concentration probability F(t).
pub fn concentration_bound(d: usize, t: f64) -> f64 {
    (t * t * (4.0 - t * t) / 4.0).powf(d as f64 / 2.0)
}

/// Monte Carlo estimate of `F(t) = Pr(norm(x - y) <= t)` for x, y uniform
/// in K, over `n_pairs` independent pairs, with the binomial standard
/// error. This is a float estimator (the only float-tolerance computation
/// in the module); it never certifies anything.
pub fn estimate_f(body: &ConvexBody, t: f64, n_pairs: u64, cfg: &RandomConfig) -> Result<(f64, f64)> {
    Ok(estimate_f_multi(body, &[t], n_pairs, cfg)?.pop().expect("one threshold"))
}

/// [`estimate_f`] for several thresholds sharing one sampling pass.
pub fn estimate_f_multi(
    body: &ConvexBody,
    ts: &[f64],
    n_pairs: u64,
    cfg: &RandomConfig,
) -> Result<Vec<(f64, f64)>> {
    cfg.validate()?;
    for &t in ts {
        if !(t > 0.0 && t < std::f64::consts::SQRT_2) {
            return Err(Error::InvalidParameter(format!(
                "t must lie in (0, sqrt(2)), got {t}"
            )));
        }
    }
    let sampler = BodySampler::build(body)?;
    let d = body.dim();
    let chunk: u64 = 512;
    let chunks = n_pairs.div_ceil(chunk);
    let hit_vecs = exec::map_indexed(chunks as usize, |c| {
        let mut rng = rng::stream(cfg.seed, c as u64);
        let in_chunk = chunk.min(n_pairs - c as u64 * chunk);
        let mut hits = vec![0u64; ts.len()];
        let mut x = vec![0.0f64; d];
        let mut y = vec![0.0f64; d];
        let mut diff = vec![0.0f64; d];
        for _ in 0..in_chunk {
            sampler.draw(&mut rng, &mut x);
            sampler.draw(&mut rng, &mut y);
            for k in 0..d {
                diff[k] = x[k] - y[k];
            }
            let g = body.norm_f64(&diff);
            for (slot, &t) in hits.iter_mut().zip(ts) {
                if g <= t {
                    *slot += 1;
                }
            }
        }
        hits
    });
    let mut totals = vec![0u64; ts.len()];
    for hv in hit_vecs {
        for (tot, h) in totals.iter_mut().zip(hv) {
            *tot += h;
        }
    }
    Ok(totals
        .into_iter()
        .map(|h| {
            let p = h as f64 / n_pairs as f64;
            (p, (p * (1.0 - p) / n_pairs as f64).sqrt())
        })
        .collect())
}

/// Float sampler for the estimator: box rejection with early-exit
/// membership, or direct barycentric sampling when the body is a simplex.
struct BodySampler<'a> {
    body: &'a ConvexBody,
    lo: Vec<f64>,
    span: Vec<f64>,
    simplex: Option<Vec<Vec<f64>>>,
}

impl<'a> BodySampler<'a> {
    fn build(body: &'a ConvexBody) -> Result<Self> {
        let bb = body.bounding_box()?;
        let lo: Vec<f64> = bb.iter().map(|(l, _)| rat_to_f64(l)).collect();
        let span: Vec<f64> = bb.iter().map(|(l, h)| rat_to_f64(&(h - l))).collect();
        let simplex = body.vertices().and_then(|vs| {
            (vs.len() == body.dim() + 1 && vs.len() <= 16)
                .then(|| vs.iter().map(|v| v.to_f64()).collect::<Vec<_>>())
        });
        Ok(BodySampler { body, lo, span, simplex })
    }

    fn draw(&self, rng: &mut rand_chacha::ChaCha8Rng, out: &mut [f64]) {
        if let Some(verts) = &self.simplex {
            // Dirichlet(1,...,1) barycentric weights via exponentials.
            let mut total = 0.0;
            out.fill(0.0);
            let mut weights = [0.0f64; 16];
            for w in weights.iter_mut().take(verts.len()) {
                *w = -rng.random::<f64>().max(f64::MIN_POSITIVE).ln();
                total += *w;
            }
            for (v, w) in verts.iter().zip(&weights) {
                let scale = w / total;
                for (o, c) in out.iter_mut().zip(v) {
                    *o += scale * c;
                }
            }
            return;
        }
        loop {
            for k in 0..out.len() {
                out[k] = self.lo[k] + rng.random::<f64>() * self.span[k];
            }
            if self.body.contains_f64_band(out, 1e-15).unwrap_or(true) {
                return;
            }
        }
    }
}

/// Expected-close-pair probe used by the tests: count ordered close pairs
/// (gauge distance <= 1) among `2m` uniform samples.
pub fn count_close_ordered_pairs(body: &ConvexBody, n_points: usize, seed: u64) -> Result<u64> {
    let points = sample_uniform_stream(body, n_points, seed, 0)?;
    let one = Rat::one();
    let mut count = 0u64;
    for i in 0..points.len() {
        for j in 0..points.len() {
            if i != j {
                let d = points[i].sub(&points[j]);
                if body.norm_cmp(&d, &one)? != Ordering::Greater {
                    count += 1;
                }
            }
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use num::Zero;

    #[test]
    fn sample_membership_and_determinism() {
        let c = ConvexBody::cube(2);
        let cfg = RandomConfig::with_seed(42);
        let a = sample_uniform(&c, 4, &cfg).unwrap();
        assert_eq!(a.len(), 4);
        for p in &a {
            assert!(c.contains(p).unwrap());
        }
        let b = sample_uniform(&c, 4, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(sample_uniform(&c, 0, &cfg).unwrap().is_empty());
    }

    #[test]
    fn sample_ball_centroid_statistics() {
        let b = ConvexBody::ball(3, rat_int(1)).unwrap();
        let cfg = RandomConfig::with_seed(7);
        let pts = sample_uniform(&b, 1000, &cfg).unwrap();
        // Var of one coordinate of the uniform ball law is r^2/(d+2) = 1/5.
        let sigma = (1.0f64 / 5.0 / 1000.0).sqrt();
        for k in 0..3 {
            let mean: f64 =
                pts.iter().map(|p| rat_to_f64(&p.0[k])).sum::<f64>() / pts.len() as f64;
            assert!(mean.abs() < 5.0 * sigma, "coordinate {k} mean {mean}");
        }
    }

    #[test]
    fn simplex_sampling_in_dimension_six() {
        let s = ConvexBody::simplex(6);
        let cfg = RandomConfig::with_seed(3);
        let pts = sample_uniform(&s, 50, &cfg).unwrap();
        for p in &pts {
            assert!(s.contains(p).unwrap());
        }
    }

    #[test]
    fn strict_translates_verify_for_every_seed() {
        let disc = ConvexBody::disc();
        for seed in 0..5 {
            let cfg = RandomConfig { seed, max_retries: 16, oversample_factor: rat_int(8) };
            let a = strict_translate_arrangement(&disc, &cfg).unwrap();
            assert!(!a.is_empty());
            assert!(a.is_strict_minkowski().unwrap());
            assert!(a.is_pairwise_intersecting().unwrap());
        }
    }

    #[test]
    fn boundary_points_exact_recheck() {
        let t = ConvexBody::triangle();
        let cfg = RandomConfig { seed: 5, max_retries: 16, oversample_factor: rat_int(16) };
        let w = boundary_strict_points(&t, &cfg).unwrap();
        assert!(!w.points.is_empty());
        let one = Rat::one();
        for p in &w.points {
            assert_eq!(w.body.norm_cmp(p, &one).unwrap(), Ordering::Equal);
        }
        for i in 0..w.points.len() {
            for j in 0..w.points.len() {
                if i != j {
                    let d = w.points[i].sub(&w.points[j]);
                    assert_eq!(w.body.norm_cmp(&d, &one).unwrap(), Ordering::Greater);
                }
            }
        }
    }

    #[test]
    fn projection_direction_2d_and_symmetric() {
        // Symmetric body: the first candidate already has residual 0.
        let c = ConvexBody::cube(2);
        let u = centroid_projection_direction(&c, 1e-9).unwrap();
        assert!((u[0].powi(2) + u[1].powi(2) - 1.0).abs() < 1e-12);
        // Triangle: bisection on the angle; cross-check with a dense scan.
        let t = ConvexBody::triangle();
        let u = centroid_projection_direction(&t, 1e-9).unwrap();
        let vs: Vec<Vec<f64>> =
            t.vertices().unwrap().iter().map(|v| v.to_f64()).collect();
        let w = (-u[1], u[0]);
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for v in &vs {
            let s = v[0] * w.0 + v[1] * w.1;
            lo = lo.min(s);
            hi = hi.max(s);
        }
        assert!(((lo + hi) / 2.0).abs() <= 1e-9);
    }

    #[test]
    fn projection_direction_3d_shifted_tetrahedron() {
        let t = ConvexBody::simplex(3)
            .translate(&RatVec(vec![crate::rat::rat(1, 10), Rat::zero(), Rat::zero()]))
            .unwrap();
        let u = centroid_projection_direction(&t, 1e-9).unwrap();
        let vs: Vec<Vec<f64>> = t.vertices().unwrap().iter().map(|v| v.to_f64()).collect();
        let res = projection_centroid_3d(&vs, &[u[0], u[1], u[2]]);
        assert!(res <= 1e-9, "residual {res}");
    }

    #[test]
    fn estimate_f_trivial_limits() {
        let c = ConvexBody::cube(2);
        let cfg = RandomConfig::with_seed(1);
        // t close to sqrt(2): the bound approaches 1; any estimate is <= 1.
        let (p, _) = estimate_f(&c, 1.41, 20_000, &cfg).unwrap();
        assert!(p <= 1.0);
        assert!(concentration_bound(2, 1.41) > p * 0.99 || p < 1.0);
        // Tiny t: estimate goes to zero.
        let (p, _) = estimate_f(&c, 0.01, 20_000, &cfg).unwrap();
        assert!(p < 0.01);
        // Out-of-range t rejected.
        assert!(estimate_f(&c, 1.5, 10, &cfg).is_err());
        assert!(estimate_f(&c, 0.0, 10, &cfg).is_err());
    }

    #[test]
    fn estimate_f_disc_against_bound() {
        let disc = ConvexBody::disc();
        let cfg = RandomConfig::with_seed(2);
        let (p, se) = estimate_f(&disc, 1.0, 100_000, &cfg).unwrap();
        // The closed-form bound at d=2, t=1 is 3/4; the true value is well below.
        assert!(p + 3.0 * se <= 0.75, "estimate {p} too close to the bound");
    }

    #[test]
    fn close_pair_expectation_high_dim() {
        // Expected ordered close pairs among 2m cube samples is
        // 2m(2m-1) F(1) <= 2m(2m-1) (sqrt3/2)^d; the proof needs <= m.
        for d in 8..=10usize {
            let m = ((0.25 * (2.0 / 3.0f64.sqrt()).powi(d as i32)).floor() as usize).max(1);
            let body = ConvexBody::cube(d);
            let trials = 60;
            let mut total = 0u64;
            for s in 0..trials {
                total += count_close_ordered_pairs(&body, 2 * m, 1000 + s as u64).unwrap();
            }
            let mean = total as f64 / trials as f64;
            let bound =
                (2 * m * (2 * m - 1)) as f64 * concentration_bound(d, 1.0);
            assert!(
                mean <= (m as f64).max(bound * 1.5) + 0.5,
                "d={d}: mean close pairs {mean}, m={m}, bound {bound}"
            );
        }
    }
}
