//! Convex bodies with the origin strictly interior.
//!
//! A body is an H-polytope, a V-polytope, a Euclidean ball, or a finite
//! product of bodies. Polytopes in dimension <= 3 carry both
//! representations (the missing one is computed exactly at construction);
//! higher-dimensional polytopes keep whatever form they were given unless a
//! constructor knows both analytically.

use crate::hull::{self, Halfspace};
use crate::lp::{Constraint, LinearSystem};
use crate::rat::{rat_int, rat_to_f64, Rat, RatVec};
use crate::{Error, Result};
use num::{One, Signed, Zero};

/// Which representation a polytope was constructed from; kept so JSON
/// round-trips reproduce the input form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyForm {
    H,
    V,
}

#[derive(Clone, Debug)]
pub struct PolytopeData {
    pub form: PolyForm,
    pub facets: Option<Vec<Halfspace>>,
    pub vertices: Option<Vec<RatVec>>,
    /// f64 mirror of `facets` for the float-only paths (search energy,
    /// Monte Carlo prefilters).
    pub facets_f64: Option<Vec<(Vec<f64>, f64)>>,
}

#[derive(Clone, Debug)]
pub enum Shape {
    Polytope(PolytopeData),
    Ball { radius: Rat },
    Product { factors: Vec<ConvexBody> },
}

#[derive(Clone, Debug)]
pub struct ConvexBody {
    dim: usize,
    symmetric: bool,
    shape: Shape,
}

impl ConvexBody {
    // -----------------------------------------------------------------
    // Constructors
    // -----------------------------------------------------------------

    /// Body from facet inequalities `a·x <= b`. Requires every `b > 0`
    /// (origin strictly interior) and a bounded intersection.
    pub fn hpolytope(dim: usize, facets: Vec<Halfspace>) -> Result<ConvexBody> {
        if facets.is_empty() {
            return Err(Error::Unbounded);
        }
        for f in &facets {
            if f.normal.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: f.normal.dim() });
            }
            if !f.offset.is_positive() {
                return Err(Error::OriginNotInterior);
            }
        }
        if !recession_cone_trivial(dim, &facets) {
            return Err(Error::Unbounded);
        }
        let vertices = if dim <= 3 { Some(facets_to_vertices(dim, &facets)?) } else { None };
        Ok(Self::polytope_from_parts(dim, PolyForm::H, Some(facets), vertices))
    }

    /// Body as the convex hull of `vertices`. Requires the origin strictly
    /// interior to the hull.
    pub fn vpolytope(dim: usize, vertices: Vec<RatVec>) -> Result<ConvexBody> {
        if vertices.is_empty() {
            return Err(Error::OriginNotInterior);
        }
        for v in &vertices {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: v.dim() });
            }
        }
        if !origin_interior_to_hull(dim, &vertices) {
            return Err(Error::OriginNotInterior);
        }
        if dim <= 3 {
            let (facets, canonical) = vertices_to_facets(dim, &vertices)?;
            Ok(Self::polytope_from_parts(dim, PolyForm::V, Some(facets), Some(canonical)))
        } else {
            Ok(Self::polytope_from_parts(dim, PolyForm::V, None, Some(vertices)))
        }
    }

    /// Euclidean ball of the given radius centered at the origin.
    pub fn ball(dim: usize, radius: Rat) -> Result<ConvexBody> {
        if !radius.is_positive() {
            return Err(Error::OriginNotInterior);
        }
        Ok(ConvexBody { dim, symmetric: true, shape: Shape::Ball { radius } })
    }

    pub fn product(factors: Vec<ConvexBody>) -> Result<ConvexBody> {
        if factors.is_empty() {
            return Err(Error::EmptyProduct);
        }
        if factors.len() == 1 {
            return Ok(factors.into_iter().next().unwrap());
        }
        let dim = factors.iter().map(|f| f.dim).sum();
        let symmetric = factors.iter().all(|f| f.symmetric);
        Ok(ConvexBody { dim, symmetric, shape: Shape::Product { factors } })
    }

    /// The cube `[-1, 1]^d` in H-form.
    pub fn cube(dim: usize) -> ConvexBody {
        let mut facets = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            for sign in [1i64, -1] {
                let mut n = RatVec::zeros(dim);
                n.0[k] = rat_int(sign);
                facets.push(Halfspace::new(n, Rat::one()));
            }
        }
        ConvexBody::hpolytope(dim, facets).expect("cube is valid")
    }

    /// The simplex conv{e_1, ..., e_d, -(1,...,1)} with centroid at the
    /// origin. Both representations are known analytically in every
    /// dimension: facets are `(1 - (d+1)e_i)·x <= 1` and `sum(x) <= 1`.
    pub fn simplex(dim: usize) -> ConvexBody {
        let mut vertices: Vec<RatVec> = (0..dim)
            .map(|k| {
                let mut v = RatVec::zeros(dim);
                v.0[k] = Rat::one();
                v
            })
            .collect();
        vertices.push(RatVec(vec![-Rat::one(); dim]));
        let mut facets = Vec::with_capacity(dim + 1);
        for k in 0..dim {
            let mut n = RatVec(vec![Rat::one(); dim]);
            n.0[k] = rat_int(1 - (dim as i64 + 1));
            facets.push(Halfspace::new(n, Rat::one()));
        }
        facets.push(Halfspace::new(RatVec(vec![Rat::one(); dim]), Rat::one()));
        let body = ConvexBody::polytope_from_parts(dim, PolyForm::V, Some(facets), Some(vertices));
        debug_assert!(body.contains(&RatVec::zeros(dim)).unwrap());
        body
    }

    /// The cross-polytope `{x : sum |x_i| <= 1}`: H-form has one facet per
    /// sign pattern, V-form is `{±e_i}`.
    pub fn cross_polytope(dim: usize) -> ConvexBody {
        let mut facets = Vec::with_capacity(1 << dim);
        for mask in 0u32..(1 << dim) {
            let n = RatVec(
                (0..dim)
                    .map(|k| if mask >> k & 1 == 1 { -Rat::one() } else { Rat::one() })
                    .collect(),
            );
            facets.push(Halfspace::new(n, Rat::one()));
        }
        let mut vertices = Vec::with_capacity(2 * dim);
        for k in 0..dim {
            for sign in [1i64, -1] {
                let mut v = RatVec::zeros(dim);
                v.0[k] = rat_int(sign);
                vertices.push(v);
            }
        }
        ConvexBody::polytope_from_parts(dim, PolyForm::H, Some(facets), Some(vertices))
    }

    /// The triangle conv{(1,0), (0,1), (-1,-1)} (simplex(2)); its centroid
    /// is the origin.
    pub fn triangle() -> ConvexBody {
        ConvexBody::simplex(2)
    }

    pub fn disc() -> ConvexBody {
        ConvexBody::ball(2, Rat::one()).unwrap()
    }

    fn polytope_from_parts(
        dim: usize,
        form: PolyForm,
        facets: Option<Vec<Halfspace>>,
        vertices: Option<Vec<RatVec>>,
    ) -> ConvexBody {
        let facets_f64 = facets.as_ref().map(|fs| {
            fs.iter()
                .map(|f| (f.normal.to_f64(), rat_to_f64(&f.offset)))
                .collect()
        });
        let symmetric = match (&vertices, &facets) {
            (Some(vs), _) => point_set_symmetric(vs),
            (None, Some(fs)) => facet_set_symmetric(fs),
            (None, None) => unreachable!("polytope with no representation"),
        };
        ConvexBody {
            dim,
            symmetric,
            shape: Shape::Polytope(PolytopeData { form, facets, vertices, facets_f64 }),
        }
    }

    // -----------------------------------------------------------------
    // Accessors
    // -----------------------------------------------------------------

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn is_ball(&self) -> bool {
        matches!(self.shape, Shape::Ball { .. })
    }

    /// True when every ball-free norm query on this body is exact.
    pub fn has_rational_norm(&self) -> bool {
        match &self.shape {
            Shape::Polytope(_) => true,
            Shape::Ball { .. } => false,
            Shape::Product { factors } => factors.iter().all(|f| f.has_rational_norm()),
        }
    }

    pub fn facets(&self) -> Option<&[Halfspace]> {
        match &self.shape {
            Shape::Polytope(p) => p.facets.as_deref(),
            _ => None,
        }
    }

    pub fn vertices(&self) -> Option<&[RatVec]> {
        match &self.shape {
            Shape::Polytope(p) => p.vertices.as_deref(),
            _ => None,
        }
    }

    /// Offsets of the factor blocks of a product body (a non-product body
    /// is a single block).
    pub fn block_ranges(&self) -> Vec<std::ops::Range<usize>> {
        match &self.shape {
            Shape::Product { factors } => {
                let mut out = Vec::with_capacity(factors.len());
                let mut start = 0;
                for f in factors {
                    out.push(start..start + f.dim);
                    start += f.dim;
                }
                out
            }
            _ => vec![0..self.dim],
        }
    }

    pub fn product_factors(&self) -> Option<&[ConvexBody]> {
        match &self.shape {
            Shape::Product { factors } => Some(factors),
            _ => None,
        }
    }

    // -----------------------------------------------------------------
    // Geometry queries
    // -----------------------------------------------------------------

    /// Exact membership `x ∈ K`.
    pub fn contains(&self, x: &RatVec) -> Result<bool> {
        self.check_dim(x)?;
        match &self.shape {
            Shape::Polytope(p) => {
                if let Some(facets) = &p.facets {
                    Ok(facets.iter().all(|f| f.satisfies(x)))
                } else {
                    // V-form in high dimension: exact LP membership.
                    let vs = p.vertices.as_ref().unwrap();
                    Ok(hull_membership(self.dim, vs, x))
                }
            }
            Shape::Ball { radius } => Ok(x.norm2_sq() <= radius * radius),
            Shape::Product { factors } => {
                let mut offset = 0;
                for f in factors {
                    let block = RatVec(x.0[offset..offset + f.dim].to_vec());
                    if !f.contains(&block)? {
                        return Ok(false);
                    }
                    offset += f.dim;
                }
                Ok(true)
            }
        }
    }

    /// Fast membership prefilter on floats: `Some(inside)` when the answer
    /// is clear of the boundary by more than the band, `None` otherwise.
    pub fn contains_f64_band(&self, x: &[f64], band: f64) -> Option<bool> {
        match &self.shape {
            Shape::Polytope(p) => {
                let facets = p.facets_f64.as_ref()?;
                let mut worst = f64::NEG_INFINITY;
                for (a, b) in facets {
                    let mut dot = 0.0;
                    for (ai, xi) in a.iter().zip(x) {
                        dot += ai * xi;
                    }
                    let slack = dot - b;
                    if slack > band {
                        return Some(false);
                    }
                    worst = worst.max(slack);
                }
                if worst < -band {
                    Some(true)
                } else {
                    None
                }
            }
            Shape::Ball { radius } => {
                let r = rat_to_f64(radius);
                let s: f64 = x.iter().map(|v| v * v).sum::<f64>() - r * r;
                if s > band {
                    Some(false)
                } else if s < -band {
                    Some(true)
                } else {
                    None
                }
            }
            Shape::Product { factors } => {
                let mut offset = 0;
                let mut all_in = true;
                for f in factors {
                    match f.contains_f64_band(&x[offset..offset + f.dim], band) {
                        Some(false) => return Some(false),
                        Some(true) => {}
                        None => all_in = false,
                    }
                    offset += f.dim;
                }
                if all_in {
                    Some(true)
                } else {
                    None
                }
            }
        }
    }

    /// Exact coordinate bounding box.
    pub fn bounding_box(&self) -> Result<Vec<(Rat, Rat)>> {
        match &self.shape {
            Shape::Polytope(p) => {
                if let Some(vs) = &p.vertices {
                    let mut out = Vec::with_capacity(self.dim);
                    for k in 0..self.dim {
                        let mut lo = vs[0].0[k].clone();
                        let mut hi = lo.clone();
                        for v in vs {
                            if v.0[k] < lo {
                                lo = v.0[k].clone();
                            }
                            if v.0[k] > hi {
                                hi = v.0[k].clone();
                            }
                        }
                        out.push((lo, hi));
                    }
                    Ok(out)
                } else {
                    let facets = p.facets.as_ref().unwrap();
                    let mut sys = LinearSystem::new(self.dim);
                    for f in facets {
                        sys.push(Constraint::le(f.normal.clone(), f.offset.clone()));
                    }
                    let mut out = Vec::with_capacity(self.dim);
                    for k in 0..self.dim {
                        let mut c = RatVec::zeros(self.dim);
                        c.0[k] = Rat::one();
                        let (lo, _) = sys.minimize(&c).ok_or(Error::Unbounded)?;
                        c.0[k] = -Rat::one();
                        let (neg_hi, _) = sys.minimize(&c).ok_or(Error::Unbounded)?;
                        out.push((lo, -neg_hi));
                    }
                    Ok(out)
                }
            }
            Shape::Ball { radius } => {
                Ok((0..self.dim).map(|_| (-radius.clone(), radius.clone())).collect())
            }
            Shape::Product { factors } => {
                let mut out = Vec::with_capacity(self.dim);
                for f in factors {
                    out.extend(f.bounding_box()?);
                }
                Ok(out)
            }
        }
    }

    /// The translated body `K + t`. The origin must remain interior. Both
    /// representations survive the translation when present.
    pub fn translate(&self, t: &RatVec) -> Result<ConvexBody> {
        self.check_dim(t)?;
        match &self.shape {
            Shape::Polytope(p) => {
                let facets = p.facets.as_ref().map(|fs| {
                    fs.iter()
                        .map(|f| Halfspace::new(f.normal.clone(), &f.offset + f.normal.dot(t)))
                        .collect::<Vec<_>>()
                });
                let vertices = p
                    .vertices
                    .as_ref()
                    .map(|vs| vs.iter().map(|v| v.add(t)).collect::<Vec<_>>());
                if let Some(fs) = &facets {
                    if fs.iter().any(|f| !f.offset.is_positive()) {
                        return Err(Error::OriginNotInterior);
                    }
                } else if let Some(vs) = &vertices {
                    if !origin_interior_to_hull(self.dim, vs) {
                        return Err(Error::OriginNotInterior);
                    }
                }
                Ok(Self::polytope_from_parts(self.dim, p.form, facets, vertices))
            }
            Shape::Ball { .. } => {
                if t.is_zero() {
                    Ok(self.clone())
                } else {
                    Err(Error::UnsupportedRepresentation(
                        "balls are centered at the origin and cannot be translated".into(),
                    ))
                }
            }
            Shape::Product { factors } => {
                let mut out = Vec::with_capacity(factors.len());
                let mut offset = 0;
                for f in factors {
                    let block = RatVec(t.0[offset..offset + f.dim].to_vec());
                    out.push(f.translate(&block)?);
                    offset += f.dim;
                }
                ConvexBody::product(out)
            }
        }
    }

    pub(crate) fn check_dim(&self, x: &RatVec) -> Result<()> {
        if x.dim() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: x.dim() });
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Validation helpers
// ---------------------------------------------------------------------------

/// The recession cone {x : a·x <= 0 for all facets} must be {0}; otherwise
/// the H-polytope is unbounded. Checked by 2d feasibility probes `x_k = ±1`.
fn recession_cone_trivial(dim: usize, facets: &[Halfspace]) -> bool {
    for k in 0..dim {
        for sign in [1i64, -1] {
            let mut sys = LinearSystem::new(dim);
            for f in facets {
                sys.push(Constraint::le(f.normal.clone(), Rat::zero()));
            }
            let mut e = RatVec::zeros(dim);
            e.0[k] = Rat::one();
            sys.push(Constraint::eq(e, rat_int(sign)));
            if sys.feasible() {
                return false;
            }
        }
    }
    true
}

/// Origin strictly interior to conv(vertices): there must be no nonzero u
/// with u·v >= 0 for all vertices. Checked by 2d feasibility probes.
fn origin_interior_to_hull(dim: usize, vertices: &[RatVec]) -> bool {
    for k in 0..dim {
        for sign in [1i64, -1] {
            let mut sys = LinearSystem::new(dim);
            for v in vertices {
                sys.push(Constraint::ge(v.clone(), Rat::zero()));
            }
            let mut e = RatVec::zeros(dim);
            e.0[k] = Rat::one();
            sys.push(Constraint::eq(e, rat_int(sign)));
            if sys.feasible() {
                return false;
            }
        }
    }
    true
}

/// Exact LP membership x ∈ conv(vertices).
fn hull_membership(dim: usize, vertices: &[RatVec], x: &RatVec) -> bool {
    // Variables: one barycentric weight per vertex, nonnegative, summing to
    // one, combining to x.
    let n = vertices.len();
    let mut sys = LinearSystem::new(n);
    for k in 0..dim {
        let row = RatVec(vertices.iter().map(|v| v.0[k].clone()).collect());
        sys.push(Constraint::eq(row, x.0[k].clone()));
    }
    sys.push(Constraint::eq(RatVec(vec![Rat::one(); n]), Rat::one()));
    for j in 0..n {
        let mut e = RatVec::zeros(n);
        e.0[j] = Rat::one();
        sys.push(Constraint::ge(e, Rat::zero()));
    }
    sys.feasible()
}

fn facets_to_vertices(dim: usize, facets: &[Halfspace]) -> Result<Vec<RatVec>> {
    Ok(match dim {
        1 => {
            let mut hi: Option<Rat> = None;
            let mut lo: Option<Rat> = None;
            for f in facets {
                let a = &f.normal.0[0];
                if a.is_positive() {
                    let bound = &f.offset / a;
                    if hi.as_ref().is_none_or(|h| bound < *h) {
                        hi = Some(bound);
                    }
                } else if a.is_negative() {
                    let bound = &f.offset / a;
                    if lo.as_ref().is_none_or(|l| bound > *l) {
                        lo = Some(bound);
                    }
                }
            }
            match (lo, hi) {
                (Some(l), Some(h)) => vec![RatVec(vec![l]), RatVec(vec![h])],
                _ => return Err(Error::Unbounded),
            }
        }
        2 => hull::halfspaces_to_polygon(facets),
        3 => hull::halfspaces_to_vertices_3d(facets),
        _ => {
            return Err(Error::UnsupportedRepresentation(
                "vertex enumeration above dimension 3".into(),
            ))
        }
    })
}

/// Returns (facets, canonical extreme vertices).
fn vertices_to_facets(dim: usize, vertices: &[RatVec]) -> Result<(Vec<Halfspace>, Vec<RatVec>)> {
    match dim {
        1 => {
            let (lo, hi) = hull::interval_of_points(vertices);
            let facets = vec![
                Halfspace::new(RatVec(vec![Rat::one()]), hi.clone()),
                Halfspace::new(RatVec(vec![-Rat::one()]), -lo.clone()),
            ];
            Ok((facets, vec![RatVec(vec![lo]), RatVec(vec![hi])]))
        }
        2 => {
            let hull = hull::hull_2d(vertices);
            if hull.len() < 3 {
                return Err(Error::OriginNotInterior);
            }
            let facets = hull::polygon_to_halfspaces(&hull);
            Ok((facets, hull))
        }
        3 => {
            let facets = hull::hull_3d_halfspaces(vertices);
            let canonical = hull::halfspaces_to_vertices_3d(&facets);
            Ok((facets, canonical))
        }
        _ => Err(Error::UnsupportedRepresentation(
            "facet enumeration above dimension 3".into(),
        )),
    }
}

fn point_set_symmetric(vs: &[RatVec]) -> bool {
    vs.iter().all(|v| {
        let n = v.neg();
        vs.contains(&n)
    })
}

fn facet_set_symmetric(fs: &[Halfspace]) -> bool {
    let canon: Vec<Halfspace> = fs.iter().map(Halfspace::canonical).collect();
    canon.iter().all(|f| {
        let neg = Halfspace::new(f.normal.neg(), f.offset.clone()).canonical();
        canon.contains(&neg)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn cube_has_both_forms_in_low_dim() {
        let c = ConvexBody::cube(2);
        assert_eq!(c.facets().unwrap().len(), 4);
        assert_eq!(c.vertices().unwrap().len(), 4);
        assert!(c.is_symmetric());
        let c4 = ConvexBody::cube(4);
        assert_eq!(c4.facets().unwrap().len(), 8);
        assert!(c4.vertices().is_none());
        assert!(c4.is_symmetric());
    }

    #[test]
    fn triangle_is_not_symmetric() {
        let t = ConvexBody::triangle();
        assert!(!t.is_symmetric());
        assert_eq!(t.vertices().unwrap().len(), 3);
        assert_eq!(t.facets().unwrap().len(), 3);
    }

    #[test]
    fn origin_on_boundary_rejected() {
        // Triangle with a vertex pushed so the origin lies on an edge.
        let vs = vec![
            RatVec::from_ints(&[1, 0]),
            RatVec::from_ints(&[0, 1]),
            RatVec::from_ints(&[-1, 1]), // origin on segment between (1,0)... actually on hull edge y=0? no
        ];
        // conv{(1,0),(0,1),(-1,1)}: the origin lies on the edge from (1,0) to (-1,1)? No:
        // that edge is x + 2y = 1. Origin fails it, so the origin is outside entirely.
        assert!(matches!(
            ConvexBody::vpolytope(2, vs),
            Err(Error::OriginNotInterior)
        ));
        // H-form with a zero offset is on-boundary by construction.
        let facets = vec![
            Halfspace::new(RatVec::from_ints(&[1, 0]), Rat::zero()),
            Halfspace::new(RatVec::from_ints(&[-1, 0]), Rat::one()),
            Halfspace::new(RatVec::from_ints(&[0, 1]), Rat::one()),
            Halfspace::new(RatVec::from_ints(&[0, -1]), Rat::one()),
        ];
        assert!(matches!(
            ConvexBody::hpolytope(2, facets),
            Err(Error::OriginNotInterior)
        ));
    }

    #[test]
    fn unbounded_hform_rejected() {
        // Half-strip: no upper bound on x.
        let facets = vec![
            Halfspace::new(RatVec::from_ints(&[-1, 0]), Rat::one()),
            Halfspace::new(RatVec::from_ints(&[0, 1]), Rat::one()),
            Halfspace::new(RatVec::from_ints(&[0, -1]), Rat::one()),
        ];
        assert!(matches!(ConvexBody::hpolytope(2, facets), Err(Error::Unbounded)));
    }

    #[test]
    fn simplex_forms_agree_with_conversion() {
        for d in 1..=3usize {
            let s = ConvexBody::simplex(d);
            let from_vertices =
                ConvexBody::vpolytope(d, s.vertices().unwrap().to_vec()).unwrap();
            let canon_a: Vec<Halfspace> =
                s.facets().unwrap().iter().map(Halfspace::canonical).collect();
            let canon_b: Vec<Halfspace> = from_vertices
                .facets()
                .unwrap()
                .iter()
                .map(Halfspace::canonical)
                .collect();
            for f in &canon_a {
                assert!(canon_b.contains(f), "dim {d}: facet {f:?} missing");
            }
            assert_eq!(canon_a.len(), canon_b.len());
        }
    }

    #[test]
    fn membership_and_boxes() {
        let t = ConvexBody::triangle();
        assert!(t.contains(&RatVec::zeros(2)).unwrap());
        assert!(t.contains(&RatVec::from_ints(&[1, 0])).unwrap());
        assert!(!t.contains(&RatVec::from_ints(&[1, 1])).unwrap());
        let bb = t.bounding_box().unwrap();
        assert_eq!(bb[0], (rat(-1, 1), rat(1, 1)));
        assert_eq!(bb[1], (rat(-1, 1), rat(1, 1)));

        // H-only box (cube in d=4) via LP.
        let c4 = ConvexBody::cube(4);
        let bb = c4.bounding_box().unwrap();
        assert!(bb.iter().all(|(lo, hi)| *lo == rat(-1, 1) && *hi == rat(1, 1)));
    }

    #[test]
    fn cross_polytope_membership_high_dim() {
        let c = ConvexBody::cross_polytope(5);
        assert!(c.is_symmetric());
        let mut x = RatVec::zeros(5);
        x.0[0] = rat(1, 2);
        x.0[3] = rat(1, 2);
        assert!(c.contains(&x).unwrap());
        x.0[4] = rat(1, 10);
        assert!(!c.contains(&x).unwrap());
    }

    #[test]
    fn translate_keeps_origin_interior_or_fails() {
        let t = ConvexBody::triangle();
        let moved = t.translate(&RatVec(vec![rat(1, 10), Rat::zero()])).unwrap();
        assert!(moved.contains(&RatVec::zeros(2)).unwrap());
        let too_far = t.translate(&RatVec::from_ints(&[5, 0]));
        assert!(too_far.is_err());
    }

    #[test]
    fn product_blocks() {
        let p = ConvexBody::product(vec![ConvexBody::ball(3, Rat::one()).unwrap(), ConvexBody::cube(1)])
            .unwrap();
        assert_eq!(p.dim(), 4);
        assert_eq!(p.block_ranges(), vec![0..3, 3..4]);
        assert!(p.is_symmetric());
        assert!(!p.has_rational_norm());
    }
}
