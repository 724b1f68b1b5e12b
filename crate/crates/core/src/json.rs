//! JSON wire formats.
//!
//! Rationals travel as decimal-free strings "p/q" (or "p"), so parsed
//! certificates stay exact. Bodies deserialize through the validating
//! constructors; malformed geometry is rejected at parse time.

use crate::arrangement::{Arrangement, Homothet};
use crate::body::{ConvexBody, PolyForm, Shape};
use crate::hull::Halfspace;
use crate::rat::{parse_rat, Rat, RatVec};
use crate::Error;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Serialize, Deserialize)]
struct FacetRepr {
    a: Vec<String>,
    b: String,
}

#[derive(Serialize, Deserialize)]
struct HPolytopeRepr {
    facets: Vec<FacetRepr>,
}

#[derive(Serialize, Deserialize)]
struct VPolytopeRepr {
    vertices: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct BallRepr {
    r: String,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum ShapeRepr {
    HPolytope(HPolytopeRepr),
    VPolytope(VPolytopeRepr),
    Ball(BallRepr),
    Product(Vec<BodyRepr>),
}

#[derive(Serialize, Deserialize)]
struct BodyRepr {
    dim: usize,
    shape: ShapeRepr,
}

fn rat_str(r: &Rat) -> String {
    r.to_string()
}

fn vec_str(v: &RatVec) -> Vec<String> {
    v.0.iter().map(|r| r.to_string()).collect()
}

fn parse_vec(strs: &[String]) -> crate::Result<RatVec> {
    Ok(RatVec(strs.iter().map(|s| parse_rat(s)).collect::<crate::Result<_>>()?))
}

impl From<&ConvexBody> for BodyRepr {
    fn from(body: &ConvexBody) -> Self {
        let shape = match body.shape() {
            Shape::Polytope(p) => match p.form {
                PolyForm::H => ShapeRepr::HPolytope(HPolytopeRepr {
                    facets: p
                        .facets
                        .as_ref()
                        .expect("H-form carries facets")
                        .iter()
                        .map(|f| FacetRepr { a: vec_str(&f.normal), b: rat_str(&f.offset) })
                        .collect(),
                }),
                PolyForm::V => ShapeRepr::VPolytope(VPolytopeRepr {
                    vertices: p
                        .vertices
                        .as_ref()
                        .expect("V-form carries vertices")
                        .iter()
                        .map(vec_str)
                        .collect(),
                }),
            },
            Shape::Ball { radius } => ShapeRepr::Ball(BallRepr { r: rat_str(radius) }),
            Shape::Product { factors } => {
                ShapeRepr::Product(factors.iter().map(BodyRepr::from).collect())
            }
        };
        BodyRepr { dim: body.dim(), shape }
    }
}

impl TryFrom<BodyRepr> for ConvexBody {
    type Error = Error;

    fn try_from(repr: BodyRepr) -> crate::Result<ConvexBody> {
        match repr.shape {
            ShapeRepr::HPolytope(h) => {
                let facets = h
                    .facets
                    .iter()
                    .map(|f| Ok(Halfspace::new(parse_vec(&f.a)?, parse_rat(&f.b)?)))
                    .collect::<crate::Result<Vec<_>>>()?;
                ConvexBody::hpolytope(repr.dim, facets)
            }
            ShapeRepr::VPolytope(v) => {
                let vertices = v
                    .vertices
                    .iter()
                    .map(|coords| parse_vec(coords))
                    .collect::<crate::Result<Vec<_>>>()?;
                ConvexBody::vpolytope(repr.dim, vertices)
            }
            ShapeRepr::Ball(b) => ConvexBody::ball(repr.dim, parse_rat(&b.r)?),
            ShapeRepr::Product(factors) => {
                let fs = factors
                    .into_iter()
                    .map(ConvexBody::try_from)
                    .collect::<crate::Result<Vec<_>>>()?;
                let body = ConvexBody::product(fs)?;
                if body.dim() != repr.dim {
                    return Err(Error::DimensionMismatch { expected: repr.dim, got: body.dim() });
                }
                Ok(body)
            }
        }
    }
}

impl Serialize for ConvexBody {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        BodyRepr::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConvexBody {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = BodyRepr::deserialize(d)?;
        ConvexBody::try_from(repr).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct HomothetRepr {
    lambda: String,
    v: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct ArrangementRepr {
    body: BodyRepr,
    homothets: Vec<HomothetRepr>,
}

impl Serialize for Arrangement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ArrangementRepr {
            body: BodyRepr::from(self.body()),
            homothets: self
                .homothets()
                .iter()
                .map(|h| HomothetRepr { lambda: rat_str(&h.lambda), v: vec_str(&h.v) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Arrangement {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = ArrangementRepr::deserialize(d)?;
        let body = ConvexBody::try_from(repr.body).map_err(serde::de::Error::custom)?;
        let homothets = repr
            .homothets
            .iter()
            .map(|h| {
                Ok(Homothet { lambda: parse_rat(&h.lambda)?, v: parse_vec(&h.v)? })
            })
            .collect::<crate::Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        Arrangement::new(body, homothets).map_err(serde::de::Error::custom)
    }
}
