//! Exact convex-hull and H↔V conversion machinery for dimensions 1–3.
//!
//! Everything here is rational arithmetic on small point sets; the 3-D
//! routines are brute force over facet triples, which is the simple and
//! robust choice at the sizes this crate handles.

use crate::rat::{Rat, RatVec};
use num::{Signed, Zero};
use std::cmp::Ordering;

/// Halfspace `normal · x <= offset`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Halfspace {
    pub normal: RatVec,
    pub offset: Rat,
}

impl Halfspace {
    pub fn new(normal: RatVec, offset: Rat) -> Self {
        Halfspace { normal, offset }
    }

    pub fn satisfies(&self, p: &RatVec) -> bool {
        self.normal.dot(p) <= self.offset
    }

    /// Canonical representative under positive scaling: the first nonzero
    /// normal coordinate becomes ±1.
    pub fn canonical(&self) -> Halfspace {
        for c in &self.normal.0 {
            if !c.is_zero() {
                let s = c.abs();
                return Halfspace {
                    normal: self.normal.scale(&s.clone().recip()),
                    offset: &self.offset / &s,
                };
            }
        }
        self.clone()
    }
}

fn dedup_points(points: &[RatVec]) -> Vec<RatVec> {
    let mut out: Vec<RatVec> = Vec::new();
    for p in points {
        if !out.contains(p) {
            out.push(p.clone());
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 1-D
// ---------------------------------------------------------------------------

pub fn interval_of_points(points: &[RatVec]) -> (Rat, Rat) {
    let mut lo = points[0].0[0].clone();
    let mut hi = lo.clone();
    for p in points {
        if p.0[0] < lo {
            lo = p.0[0].clone();
        }
        if p.0[0] > hi {
            hi = p.0[0].clone();
        }
    }
    (lo, hi)
}

// ---------------------------------------------------------------------------
// 2-D
// ---------------------------------------------------------------------------

fn cross2(o: &RatVec, a: &RatVec, b: &RatVec) -> Rat {
    let ax = &a.0[0] - &o.0[0];
    let ay = &a.0[1] - &o.0[1];
    let bx = &b.0[0] - &o.0[0];
    let by = &b.0[1] - &o.0[1];
    &ax * &by - &ay * &bx
}

/// Convex hull in the plane (monotone chain). Returns extreme points in
/// counterclockwise order; collinear non-extreme points are dropped.
pub fn hull_2d(points: &[RatVec]) -> Vec<RatVec> {
    let mut pts = dedup_points(points);
    pts.sort_by(|a, b| a.0[0].cmp(&b.0[0]).then(a.0[1].cmp(&b.0[1])));
    let n = pts.len();
    if n <= 2 {
        return pts;
    }
    let mut lower: Vec<RatVec> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && !cross2(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive()
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RatVec> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && !cross2(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive()
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Signed area of a polygon given in CCW order (positive for CCW).
pub fn polygon_area(hull: &[RatVec]) -> Rat {
    let n = hull.len();
    let mut twice = Rat::zero();
    for i in 0..n {
        let j = (i + 1) % n;
        twice += &hull[i].0[0] * &hull[j].0[1] - &hull[j].0[0] * &hull[i].0[1];
    }
    twice / Rat::from_integer(2.into())
}

/// Area centroid of a polygon in CCW order (signed fan from the origin, so
/// the origin need not be interior).
pub fn polygon_centroid(hull: &[RatVec]) -> RatVec {
    let n = hull.len();
    let mut cx = Rat::zero();
    let mut cy = Rat::zero();
    let mut total = Rat::zero();
    for i in 0..n {
        let j = (i + 1) % n;
        let w = &hull[i].0[0] * &hull[j].0[1] - &hull[j].0[0] * &hull[i].0[1];
        cx += (&hull[i].0[0] + &hull[j].0[0]) * &w;
        cy += (&hull[i].0[1] + &hull[j].0[1]) * &w;
        total += w;
    }
    let scale = (total * Rat::from_integer(3.into())).recip();
    RatVec(vec![cx * &scale, cy * &scale])
}

/// Outward facet halfspaces of a CCW polygon.
pub fn polygon_to_halfspaces(hull: &[RatVec]) -> Vec<Halfspace> {
    let n = hull.len();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let j = (i + 1) % n;
        let ex = &hull[j].0[0] - &hull[i].0[0];
        let ey = &hull[j].0[1] - &hull[i].0[1];
        // CCW edge (ex, ey) has outward normal (ey, -ex).
        let normal = RatVec(vec![ey, -ex]);
        let offset = normal.dot(&hull[i]);
        out.push(Halfspace::new(normal, offset));
    }
    out
}

/// Order points counterclockwise around `center` (which must not coincide
/// with any point and should be interior to their hull).
pub fn sort_ccw_around(points: &mut [RatVec], center: &RatVec) {
    let half = |v: &RatVec| -> u8 {
        let x = &v.0[0];
        let y = &v.0[1];
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    points.sort_by(|a, b| {
        let ua = a.sub(center);
        let ub = b.sub(center);
        half(&ua).cmp(&half(&ub)).then_with(|| {
            let cross = &ua.0[0] * &ub.0[1] - &ua.0[1] * &ub.0[0];
            match cross.cmp(&Rat::zero()) {
                Ordering::Greater => Ordering::Less,
                Ordering::Less => Ordering::Greater,
                Ordering::Equal => Ordering::Equal,
            }
        })
    });
}

/// Vertices of the (bounded) intersection of halfplanes, in CCW order.
/// The origin must be interior (all offsets positive).
pub fn halfspaces_to_polygon(hs: &[Halfspace]) -> Vec<RatVec> {
    let mut candidates: Vec<RatVec> = Vec::new();
    let n = hs.len();
    for i in 0..n {
        for j in (i + 1)..n {
            let a = &hs[i].normal;
            let b = &hs[j].normal;
            let det = &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0];
            if det.is_zero() {
                continue;
            }
            let x = (&hs[i].offset * &b.0[1] - &hs[j].offset * &a.0[1]) / &det;
            let y = (&a.0[0] * &hs[j].offset - &b.0[0] * &hs[i].offset) / &det;
            let p = RatVec(vec![x, y]);
            if hs.iter().all(|h| h.satisfies(&p)) {
                candidates.push(p);
            }
        }
    }
    let mut verts = dedup_points(&candidates);
    sort_ccw_around(&mut verts, &RatVec::zeros(2));
    verts
}

// ---------------------------------------------------------------------------
// 3-D
// ---------------------------------------------------------------------------

fn det3(a: &RatVec, b: &RatVec, c: &RatVec) -> Rat {
    let t1 = &a.0[0] * (&b.0[1] * &c.0[2] - &b.0[2] * &c.0[1]);
    let t2 = &a.0[1] * (&b.0[0] * &c.0[2] - &b.0[2] * &c.0[0]);
    let t3 = &a.0[2] * (&b.0[0] * &c.0[1] - &b.0[1] * &c.0[0]);
    t1 - t2 + t3
}

fn cross3(a: &RatVec, b: &RatVec) -> RatVec {
    RatVec(vec![
        &a.0[1] * &b.0[2] - &a.0[2] * &b.0[1],
        &a.0[2] * &b.0[0] - &a.0[0] * &b.0[2],
        &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0],
    ])
}

/// Supporting facet halfspaces of the hull of `points` in 3-D, canonical
/// and deduplicated. Brute force over all triples.
pub fn hull_3d_halfspaces(points: &[RatVec]) -> Vec<Halfspace> {
    let pts = dedup_points(points);
    let n = pts.len();
    let mut out: Vec<Halfspace> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let u = pts[j].sub(&pts[i]);
                let v = pts[k].sub(&pts[i]);
                let normal = cross3(&u, &v);
                if normal.is_zero() {
                    continue;
                }
                let offset = normal.dot(&pts[i]);
                // All points weakly on one side?
                let mut above = false;
                let mut below = false;
                for p in &pts {
                    match normal.dot(p).cmp(&offset) {
                        Ordering::Greater => above = true,
                        Ordering::Less => below = true,
                        Ordering::Equal => {}
                    }
                    if above && below {
                        break;
                    }
                }
                if above && below {
                    continue;
                }
                let hs = if above {
                    Halfspace::new(normal.neg(), -offset)
                } else {
                    Halfspace::new(normal, offset)
                };
                let canon = hs.canonical();
                if !out.contains(&canon) {
                    out.push(canon);
                }
            }
        }
    }
    out
}

/// Points of `points` lying on the boundary plane of `hs`, in a cyclic
/// order that is counterclockwise when viewed from outside (along the
/// outward normal).
pub fn facet_cycle(points: &[RatVec], hs: &Halfspace) -> Vec<RatVec> {
    let incident: Vec<RatVec> = dedup_points(points)
        .into_iter()
        .filter(|p| hs.normal.dot(p) == hs.offset)
        .collect();
    if incident.len() < 3 {
        return incident;
    }
    // Project out the dominant normal axis and sort around the mean.
    let axis = {
        let mut best = 0;
        for k in 1..3 {
            if hs.normal.0[k].abs() > hs.normal.0[best].abs() {
                best = k;
            }
        }
        best
    };
    let (u, v) = match axis {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    };
    let count = Rat::from_integer((incident.len() as i64).into());
    let mean_u = incident.iter().map(|p| p.0[u].clone()).fold(Rat::zero(), |a, b| a + b) / &count;
    let mean_v = incident.iter().map(|p| p.0[v].clone()).fold(Rat::zero(), |a, b| a + b) / &count;
    let mut keyed: Vec<(RatVec, RatVec)> = incident
        .iter()
        .map(|p| {
            (
                RatVec(vec![&p.0[u] - &mean_u, &p.0[v] - &mean_v]),
                p.clone(),
            )
        })
        .collect();
    // CCW sort in the projected plane.
    let half = |w: &RatVec| -> u8 {
        if w.0[1].is_positive() || (w.0[1].is_zero() && w.0[0].is_positive()) {
            0
        } else {
            1
        }
    };
    keyed.sort_by(|(a, _), (b, _)| {
        half(a).cmp(&half(b)).then_with(|| {
            let cross = &a.0[0] * &b.0[1] - &a.0[1] * &b.0[0];
            match cross.cmp(&Rat::zero()) {
                Ordering::Greater => Ordering::Less,
                Ordering::Less => Ordering::Greater,
                Ordering::Equal => Ordering::Equal,
            }
        })
    });
    let mut cycle: Vec<RatVec> = keyed.into_iter().map(|(_, p)| p).collect();
    // Enforce outward orientation via the whole polygon's area vector
    // (robust to collinear runs inside the cycle).
    let mut area_vec = RatVec::zeros(3);
    for t in 1..cycle.len() - 1 {
        let e1 = cycle[t].sub(&cycle[0]);
        let e2 = cycle[t + 1].sub(&cycle[0]);
        area_vec = area_vec.add(&cross3(&e1, &e2));
    }
    if area_vec.dot(&hs.normal).is_negative() {
        cycle.reverse();
    }
    cycle
}

/// Exact volume of the hull of `points` in 3-D (signed tetrahedron fan from
/// the origin over consistently oriented facets).
pub fn volume_3d(points: &[RatVec]) -> Rat {
    let six = Rat::from_integer(6.into());
    let mut total = Rat::zero();
    for hs in hull_3d_halfspaces(points) {
        let cycle = facet_cycle(points, &hs);
        for t in 1..cycle.len().saturating_sub(1) {
            total += det3(&cycle[0], &cycle[t], &cycle[t + 1]);
        }
    }
    total / six
}

/// Exact centroid of the hull of `points` in 3-D.
pub fn centroid_3d(points: &[RatVec]) -> RatVec {
    let mut weight = Rat::zero();
    let mut acc = RatVec::zeros(3);
    for hs in hull_3d_halfspaces(points) {
        let cycle = facet_cycle(points, &hs);
        for t in 1..cycle.len().saturating_sub(1) {
            let w = det3(&cycle[0], &cycle[t], &cycle[t + 1]);
            // Tetra (o, a, b, c) has centroid (a+b+c)/4 relative to o weight w.
            let c = cycle[0].add(&cycle[t]).add(&cycle[t + 1]);
            acc = acc.add(&c.scale(&w));
            weight += w;
        }
    }
    let scale = (weight * Rat::from_integer(4.into())).recip();
    acc.scale(&scale)
}

/// Vertices of a bounded 3-D halfspace intersection (origin interior).
pub fn halfspaces_to_vertices_3d(hs: &[Halfspace]) -> Vec<RatVec> {
    let n = hs.len();
    let mut candidates: Vec<RatVec> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let (a, b, c) = (&hs[i].normal, &hs[j].normal, &hs[k].normal);
                let det = det3(a, b, c);
                if det.is_zero() {
                    continue;
                }
                // Cramer's rule.
                let rhs = [&hs[i].offset, &hs[j].offset, &hs[k].offset];
                let mut coords = Vec::with_capacity(3);
                for col in 0..3 {
                    let mut m: Vec<RatVec> = vec![a.clone(), b.clone(), c.clone()];
                    for (row, r) in m.iter_mut().zip(rhs.iter()) {
                        row.0[col] = (*r).clone();
                    }
                    coords.push(det3(&m[0], &m[1], &m[2]) / &det);
                }
                let p = RatVec(coords);
                if hs.iter().all(|h| h.satisfies(&p)) && !candidates.contains(&p) {
                    candidates.push(p);
                }
            }
        }
    }
    candidates
}
