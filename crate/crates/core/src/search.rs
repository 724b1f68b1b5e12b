//! Stochastic search for large planar arrangements.
//!
//! Simulated annealing over translations (and optionally homothety ratios)
//! with a hinge-loss energy. Floats only steer the search: a candidate is
//! accepted when its coordinates, rounded to small-denominator rationals,
//! pass the exact verifier. Tight optimal configurations (the 10-triangle
//! record has many exact-equality constraints) are reached by snapping
//! low-energy states onto nearby small-denominator rationals rather than by
//! waiting for float energies to vanish.

use crate::arrangement::{Arrangement, Homothet};
use crate::body::{ConvexBody, Shape};
use crate::rat::{rat_to_f64, rationalize, Rat, RatVec};
use crate::{exec, rng, Error, Result};
use rand::Rng;

/// Hinge slack granted to non-strict constraints so that exactly tight
/// configurations evaluate to energy zero in floating point.
const EPS_FLOAT: f64 = 1e-9;
/// Margin demanded of strict inequalities inside the annealer, so rounding
/// to rationals cannot cross them.
const EPS_SEARCH: f64 = 1e-6;
/// Best-state energy below which rationalization is worth attempting.
const SNAP_THRESHOLD: f64 = 5e-2;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    Strict,
    NonStrict,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub target_count: usize,
    pub mode: SearchMode,
    pub translates_only: bool,
    pub lambda_range: (f64, f64),
    pub steps: usize,
    pub restarts: usize,
    pub initial_temperature: f64,
    /// Per-step geometric cooling factor.
    pub cooling_rate: f64,
    pub seed: u64,
}

impl SearchConfig {
    /// Defaults tuned for the 8-disc strict target.
    pub fn strict_discs(target_count: usize) -> Self {
        SearchConfig {
            target_count,
            mode: SearchMode::Strict,
            translates_only: false,
            lambda_range: (0.02, 1.0),
            steps: 300_000,
            restarts: 20,
            initial_temperature: 0.12,
            cooling_rate: 0.99996,
            seed: 0,
        }
    }

    /// Defaults tuned for the 10-triangle translate target.
    pub fn nonstrict_translates(target_count: usize) -> Self {
        SearchConfig {
            target_count,
            mode: SearchMode::NonStrict,
            translates_only: true,
            lambda_range: (1.0, 1.0),
            steps: 300_000,
            restarts: 20,
            initial_temperature: 0.25,
            cooling_rate: 0.99996,
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.lambda_range.0 <= 0.0 || self.lambda_range.0 > self.lambda_range.1 {
            return Err(Error::InvalidParameter("lambda range must satisfy 0 < lo <= hi".into()));
        }
        if self.steps == 0 || self.restarts == 0 {
            return Err(Error::InvalidParameter("steps and restarts must be >= 1".into()));
        }
        if self.target_count == 0 {
            return Err(Error::InvalidParameter("target_count must be >= 1".into()));
        }
        Ok(())
    }
}

/// Float mirror of the body used inside the annealer.
struct FloatBody {
    kind: FloatKind,
}

enum FloatKind {
    Disc {
        r: f64,
    },
    Poly {
        /// Facet (normal, offset) pairs for the gauge.
        facets: Vec<([f64; 2], f64)>,
        /// Unit directions (facet normals and their negations) that span
        /// the normal fan of lambda_i K + lambda_j (-K).
        directions: Vec<[f64; 2]>,
        /// Support values h_K(u) and h_K(-u) per direction.
        support: Vec<(f64, f64)>,
    },
}

impl FloatBody {
    fn build(body: &ConvexBody) -> Result<FloatBody> {
        match body.shape() {
            Shape::Ball { radius } => Ok(FloatBody { kind: FloatKind::Disc { r: rat_to_f64(radius) } }),
            Shape::Polytope(_) => {
                let facets = body.facets().ok_or_else(|| {
                    Error::UnsupportedRepresentation("search needs facets for the gauge".into())
                })?;
                let verts: Vec<[f64; 2]> = body
                    .vertices()
                    .ok_or_else(|| {
                        Error::UnsupportedRepresentation("search needs polytope vertices".into())
                    })?
                    .iter()
                    .map(|v| {
                        let f = v.to_f64();
                        [f[0], f[1]]
                    })
                    .collect();
                let mut fl = Vec::new();
                let mut directions = Vec::new();
                for f in facets {
                    let n = f.normal.to_f64();
                    let len = (n[0] * n[0] + n[1] * n[1]).sqrt();
                    fl.push(([n[0], n[1]], rat_to_f64(&f.offset)));
                    directions.push([n[0] / len, n[1] / len]);
                    directions.push([-n[0] / len, -n[1] / len]);
                }
                let support_of = |u: &[f64; 2]| -> f64 {
                    verts
                        .iter()
                        .map(|v| v[0] * u[0] + v[1] * u[1])
                        .fold(f64::NEG_INFINITY, f64::max)
                };
                let support = directions
                    .iter()
                    .map(|u| (support_of(u), support_of(&[-u[0], -u[1]])))
                    .collect();
                Ok(FloatBody { kind: FloatKind::Poly { facets: fl, directions, support } })
            }
            Shape::Product { .. } => Err(Error::UnsupportedRepresentation(
                "planar search does not take product bodies".into(),
            )),
        }
    }

    fn gauge(&self, d: [f64; 2]) -> f64 {
        match &self.kind {
            FloatKind::Disc { r } => (d[0] * d[0] + d[1] * d[1]).sqrt() / r,
            FloatKind::Poly { facets, .. } => {
                let mut best = 0.0f64;
                for (n, b) in facets {
                    let v = (n[0] * d[0] + n[1] * d[1]) / b;
                    if v > best {
                        best = v;
                    }
                }
                best
            }
        }
    }

    /// Signed margin of the intersection condition for homothets
    /// (v_i, l_i), (v_j, l_j): nonnegative iff they intersect.
    fn intersect_margin(&self, diff: [f64; 2], li: f64, lj: f64) -> f64 {
        match &self.kind {
            FloatKind::Disc { r } => (li + lj) * r - (diff[0] * diff[0] + diff[1] * diff[1]).sqrt(),
            FloatKind::Poly { directions, support, .. } => {
                let mut worst = f64::INFINITY;
                for (u, (h_pos, h_neg)) in directions.iter().zip(support) {
                    let v = diff[0] * u[0] + diff[1] * u[1] + li * h_pos + lj * h_neg;
                    if v < worst {
                        worst = v;
                    }
                }
                worst
            }
        }
    }
}

#[derive(Clone)]
struct State {
    // (x, y, lambda) per homothet.
    items: Vec<[f64; 3]>,
}

fn pair_energy(body: &FloatBody, a: &[f64; 3], b: &[f64; 3], mode: SearchMode) -> f64 {
    let dij = [a[0] - b[0], a[1] - b[1]];
    let dji = [-dij[0], -dij[1]];
    let mut e = 0.0;
    // Minkowski condition in both orders: gauge(v_i - v_j) >= lambda_j.
    match mode {
        SearchMode::NonStrict => {
            e += (b[2] - body.gauge(dij) - EPS_FLOAT).max(0.0);
            e += (a[2] - body.gauge(dji) - EPS_FLOAT).max(0.0);
        }
        SearchMode::Strict => {
            e += (b[2] + EPS_SEARCH - body.gauge(dij)).max(0.0);
            e += (a[2] + EPS_SEARCH - body.gauge(dji)).max(0.0);
        }
    }
    // Intersection condition (closed either way; strict mode demands a
    // rounding margin).
    let margin = body.intersect_margin(dji, a[2], b[2]);
    match mode {
        SearchMode::NonStrict => e += (-margin - EPS_FLOAT).max(0.0),
        SearchMode::Strict => e += (EPS_SEARCH - margin).max(0.0),
    }
    e
}

fn total_energy(body: &FloatBody, state: &State, mode: SearchMode) -> f64 {
    let n = state.items.len();
    let mut e = 0.0;
    for i in 0..n {
        for j in (i + 1)..n {
            e += pair_energy(body, &state.items[i], &state.items[j], mode);
        }
    }
    e
}

/// Energy of an arrangement: zero iff the float-precision relaxation of all
/// pair constraints holds (with the strict-mode search margin), otherwise
/// the sum of positive hinge violations.
pub fn energy(arrangement: &Arrangement, mode: SearchMode) -> Result<f64> {
    if arrangement.body().dim() != 2 {
        return Err(Error::UnsupportedRepresentation("energy is planar".into()));
    }
    let fb = FloatBody::build(arrangement.body())?;
    let items = arrangement
        .homothets()
        .iter()
        .map(|h| {
            let v = h.v.to_f64();
            [v[0], v[1], rat_to_f64(&h.lambda)]
        })
        .collect();
    Ok(total_energy(&fb, &State { items }, mode))
}

/// Round a float state onto rationals with growing denominator caps and
/// return the first rounding that passes the exact verifier.
fn rationalize_state(
    body: &ConvexBody,
    state: &State,
    mode: SearchMode,
    translates_only: bool,
) -> Option<Arrangement> {
    // Canonicalize: anchor the first translation at the origin; for
    // varying ratios normalize the largest lambda to 1 (the constraints are
    // jointly scale-invariant).
    let mut items = state.items.clone();
    let (ax, ay) = (items[0][0], items[0][1]);
    let scale = if translates_only {
        1.0
    } else {
        1.0 / items.iter().map(|it| it[2]).fold(f64::MIN, f64::max)
    };
    for it in &mut items {
        it[0] = (it[0] - ax) * scale;
        it[1] = (it[1] - ay) * scale;
        it[2] *= scale;
    }
    for max_den in [3u64, 6, 12, 60, 1_000, 10_000, 100_000, 1_000_000, 100_000_000, 1_000_000_000]
    {
        let homothets: Vec<Homothet> = items
            .iter()
            .map(|it| Homothet {
                lambda: if translates_only {
                    Rat::from_integer(1.into())
                } else {
                    rationalize(it[2], max_den)
                },
                v: RatVec(vec![rationalize(it[0], max_den), rationalize(it[1], max_den)]),
            })
            .collect();
        if homothets.iter().any(|h| !num::Signed::is_positive(&h.lambda)) {
            continue;
        }
        let Ok(arrangement) = Arrangement::new(body.clone(), homothets) else {
            continue;
        };
        let Ok(report) = arrangement.verify() else {
            continue;
        };
        let ok = match mode {
            SearchMode::Strict => report.strict && report.pairwise_intersecting,
            SearchMode::NonStrict => report.minkowski && report.pairwise_intersecting,
        };
        if ok {
            return Some(arrangement);
        }
    }
    None
}

/// Simulated-annealing search for a pairwise intersecting (strict)
/// Minkowski arrangement of `cfg.target_count` homothets of a planar body.
/// Returns `None` when no restart produced an exactly verified arrangement;
/// that is a normal outcome, not an error.
pub fn search_arrangement(body: &ConvexBody, cfg: &SearchConfig) -> Result<Option<Arrangement>> {
    cfg.validate()?;
    if body.dim() != 2 {
        return Err(Error::UnsupportedRepresentation("search is planar".into()));
    }
    let fb = FloatBody::build(body)?;
    let results: Vec<Option<Arrangement>> = exec::map_indexed(cfg.restarts, |restart| {
        run_restart(body, &fb, cfg, restart as u64)
    });
    Ok(results.into_iter().flatten().next())
}

fn run_restart(
    body: &ConvexBody,
    fb: &FloatBody,
    cfg: &SearchConfig,
    restart: u64,
) -> Option<Arrangement> {
    let mut rng = rng::stream(cfg.seed, restart);
    let m = cfg.target_count;
    let (llo, lhi) = cfg.lambda_range;
    // Spread the initial positions over a box a few diameters wide and the
    // ratios log-uniformly, so both scales of two-scale optima are present
    // from the start.
    let spread = 2.2 * lhi * (m as f64).sqrt();
    let mut state = State {
        items: (0..m)
            .map(|_| {
                let lambda = if cfg.translates_only {
                    1.0
                } else {
                    (llo.ln() + rng.random::<f64>() * (lhi.ln() - llo.ln())).exp()
                };
                [
                    (rng.random::<f64>() - 0.5) * spread,
                    (rng.random::<f64>() - 0.5) * spread,
                    lambda,
                ]
            })
            .collect(),
    };
    let mut e = total_energy(fb, &state, cfg.mode);
    let mut best = state.clone();
    let mut best_e = e;
    let mut temp = cfg.initial_temperature;
    let snap_every = (cfg.steps / 24).max(1);

    for step in 0..cfg.steps {
        if e == 0.0 {
            if let Some(a) = rationalize_state(body, &state, cfg.mode, cfg.translates_only) {
                return Some(a);
            }
        }
        let i = rng.random_range(0..m);
        let old = state.items[i];
        let move_scale = old[2].max(llo);
        if cfg.translates_only || rng.random::<f64>() < 0.75 {
            let sigma = move_scale * (0.02 + temp);
            state.items[i][0] += (rng.random::<f64>() - 0.5) * 2.0 * sigma;
            state.items[i][1] += (rng.random::<f64>() - 0.5) * 2.0 * sigma;
        } else {
            let zeta = 0.05 + 2.0 * temp;
            let factor = ((rng.random::<f64>() - 0.5) * 2.0 * zeta).exp();
            state.items[i][2] = (old[2] * factor).clamp(llo, lhi);
        }
        // Incremental energy: only pairs touching i change.
        let mut delta = 0.0;
        for j in 0..m {
            if j != i {
                delta += pair_energy(fb, &state.items[i], &state.items[j], cfg.mode)
                    - pair_energy(fb, &old, &state.items[j], cfg.mode);
            }
        }
        if delta <= 0.0 || rng.random::<f64>() < (-delta / temp.max(1e-12)).exp() {
            e += delta;
            if e < best_e {
                best_e = e;
                best = state.clone();
            }
        } else {
            state.items[i] = old;
        }
        temp *= cfg.cooling_rate;
        if step % snap_every == snap_every - 1 && best_e <= SNAP_THRESHOLD {
            if let Some(a) = rationalize_state(body, &best, cfg.mode, cfg.translates_only) {
                return Some(a);
            }
        }
    }
    if best_e <= SNAP_THRESHOLD {
        if let Some(a) = rationalize_state(body, &best, cfg.mode, cfg.translates_only) {
            return Some(a);
        }
    }
    None
}

/// Convenience wrapper re-exported for tests: an exactly verified float
/// round trip of a rational arrangement.
pub fn snap_to_rationals(
    body: &ConvexBody,
    items: &[(f64, f64, f64)],
    mode: SearchMode,
    translates_only: bool,
) -> Option<Arrangement> {
    let state = State { items: items.iter().map(|&(x, y, l)| [x, y, l]).collect() };
    rationalize_state(body, &state, mode, translates_only)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;
    use num::One;

    fn tiny_cfg(mode: SearchMode, translates_only: bool, m: usize, seed: u64) -> SearchConfig {
        SearchConfig {
            target_count: m,
            mode,
            translates_only,
            lambda_range: if translates_only { (1.0, 1.0) } else { (0.05, 1.0) },
            steps: 60_000,
            restarts: 4,
            initial_temperature: 0.12,
            cooling_rate: 0.9999,
            seed,
        }
    }

    #[test]
    fn three_strict_discs_found_quickly() {
        let disc = ConvexBody::disc();
        let cfg = tiny_cfg(SearchMode::Strict, false, 3, 1);
        let found = search_arrangement(&disc, &cfg).unwrap();
        let a = found.expect("three strict discs are easy");
        let r = a.verify().unwrap();
        assert!(r.strict && r.pairwise_intersecting);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn energy_of_verified_witness_is_zero() {
        // The 3^2 grid is a valid non-strict witness; its energy must be 0.
        let mut hs = Vec::new();
        for x in -1..=1i64 {
            for y in -1..=1i64 {
                hs.push(Homothet::translate_unit(RatVec::from_ints(&[x, y])));
            }
        }
        let a = Arrangement::new(ConvexBody::cube(2), hs).unwrap();
        assert_eq!(energy(&a, SearchMode::NonStrict).unwrap(), 0.0);
        // In strict mode the grid has violations (touching boundaries).
        assert!(energy(&a, SearchMode::Strict).unwrap() > 0.0);
    }

    #[test]
    fn shipped_witnesses_have_zero_energy_in_their_modes() {
        use crate::constructions::load_named_witness;
        let t = load_named_witness("triangles10").unwrap();
        assert_eq!(energy(&t, SearchMode::NonStrict).unwrap(), 0.0);
        // The tight non-strict record is not strict.
        assert!(energy(&t, SearchMode::Strict).unwrap() > 0.0);
        let c = load_named_witness("circles8").unwrap();
        assert_eq!(energy(&c, SearchMode::Strict).unwrap(), 0.0);
        assert_eq!(energy(&c, SearchMode::NonStrict).unwrap(), 0.0);
    }

    #[test]
    fn energy_detects_coincident_centers() {
        let hs = vec![
            Homothet::translate_unit(RatVec::zeros(2)),
            Homothet::translate_unit(RatVec::zeros(2)),
        ];
        let a = Arrangement::new(ConvexBody::disc(), hs).unwrap();
        assert!(energy(&a, SearchMode::Strict).unwrap() > 0.0);
        assert!(energy(&a, SearchMode::NonStrict).unwrap() > 0.0);
    }

    #[test]
    fn perturbed_grid_energy_matches_recomputed_margins() {
        let mut hs = Vec::new();
        for x in -1..=1i64 {
            for y in -1..=1i64 {
                hs.push(Homothet::translate_unit(RatVec::from_ints(&[x, y])));
            }
        }
        // Shift one translate by 1e-3 toward a neighbor.
        hs[0] = Homothet::translate_unit(RatVec(vec![
            rat(-999, 1000),
            rat(-1, 1) * Rat::one(),
        ]));
        let a = Arrangement::new(ConvexBody::cube(2), hs).unwrap();
        let e = energy(&a, SearchMode::NonStrict).unwrap();
        // Centers (-999/1000, -1) and (0, -1): gauge distance 999/1000 < 1;
        // both ordered pairs violate by 1e-3 (minus the float slack).
        assert!((e - 2.0 * (1e-3 - EPS_FLOAT)).abs() < 1e-9, "energy {e}");
    }

    #[test]
    fn snapping_recovers_exact_thirds() {
        // A lattice state with float jitter well inside the snap radius.
        let t = ConvexBody::triangle();
        let jitter = 1e-7;
        let lattice: Vec<(f64, f64, f64)> = vec![
            (0.0, 0.0, 1.0),
            (2.0 / 3.0 + jitter, 1.0 / 3.0 - jitter, 1.0),
            (1.0 / 3.0 - jitter, 2.0 / 3.0 + jitter, 1.0),
        ];
        let a = snap_to_rationals(&t, &lattice, SearchMode::NonStrict, true).unwrap();
        assert_eq!(a.homothets()[1].v, RatVec(vec![rat(2, 3), rat(1, 3)]));
        assert!(a.verify().unwrap().minkowski);
    }
}
