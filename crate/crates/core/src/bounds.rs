//! Closed-form bound evaluators.
//!
//! Every evaluator returns a [`BoundReport`] carrying the intermediate
//! quantities that produced the value, so reports are auditable and
//! recomputable. The O(·) factors of the asymptotic statements are replaced
//! by the explicit proof-level expressions; values are exact rationals
//! wherever the formula admits it.

use crate::body::ConvexBody;
use crate::rat::{rat_int, rat_to_f64, Rat, Scalar};
use crate::volume::Volume;
use crate::Result;
use num::{BigInt, One};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub formula_id: String,
    pub value: Scalar,
    pub inputs: BTreeMap<String, Scalar>,
}

impl BoundReport {
    fn new(name: &str, formula_id: &str, value: Scalar) -> Self {
        BoundReport {
            name: name.into(),
            formula_id: formula_id.into(),
            value,
            inputs: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, v: Scalar) -> Self {
        self.inputs.insert(key.into(), v);
        self
    }

    fn with_int(self, key: &str, v: i64) -> Self {
        self.with(key, Scalar::Exact(rat_int(v)))
    }
}

/// Exact rational power with nonnegative integer exponent.
fn rat_pow(base: &Rat, exp: usize) -> Rat {
    let mut out = Rat::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

fn binomial(n: usize, k: usize) -> Rat {
    let mut out = BigInt::one();
    for i in 0..k {
        out = out * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rat::from_integer(out)
}

/// Number of homothety-ratio layers in the partition proof:
/// `N = 1 + ceil((ln d + ln theta) / ln(1 + 1/d))`, computed in floats with
/// a guard band that bumps N by one when the argument sits on an integer
/// (overshooting N is always safe, undershooting is not).
pub fn n_layers(d: usize, theta: f64) -> u32 {
    if d == 0 {
        return 1;
    }
    let x = ((d as f64).ln() + theta.ln()) / (1.0 + 1.0 / d as f64).ln();
    let r = x.round();
    let ceil = if (x - r).abs() < 1e-9 {
        r + 1.0
    } else {
        x.ceil()
    };
    1 + ceil.max(0.0) as u32
}

/// Packing bound `P(K, lambda) <= (lambda+1)^d vol(½(K-K)) / vol(K ∩ -K)`.
/// For o-symmetric K the volume ratio is 1 and the bound is `(lambda+1)^d`.
pub fn packing_upper(body: &ConvexBody, lambda: &Rat) -> Result<BoundReport> {
    let d = body.dim();
    let shell = rat_pow(&(lambda + Rat::one()), d);
    let (ratio, value) = if body.is_symmetric() {
        (Scalar::Exact(Rat::one()), Scalar::Exact(shell.clone()))
    } else {
        let sym_vol = body.central_symmetral()?.volume()?;
        let core_vol = body.symmetric_core()?.volume()?;
        match (&sym_vol, &core_vol) {
            (Volume::Exact(s), Volume::Exact(c)) => {
                let ratio = s / c;
                let value = &shell * &ratio;
                (Scalar::Exact(ratio), Scalar::Exact(value))
            }
            _ => {
                let ratio = sym_vol.to_f64() / core_vol.to_f64();
                (
                    Scalar::Approx(ratio),
                    Scalar::Approx(rat_to_f64(&shell) * ratio),
                )
            }
        }
    };
    Ok(
        BoundReport::new("packing_upper", "(lambda+1)^d * vol(sym)/vol(core)", value)
            .with("lambda", Scalar::Exact(lambda.clone()))
            .with_int("d", d as i64)
            .with("shell", Scalar::Exact(shell))
            .with("volume_ratio", ratio),
    )
}

/// Upper bound for kappa(K, o): `P(K, 2(1+1/d)) * (N+1)` with N from
/// [`n_layers`] at theta = theta(K, o). The concrete, non-asymptotic form
/// of the partition proof.
pub fn kappa_upper(body: &ConvexBody) -> Result<BoundReport> {
    let d = body.dim();
    let theta = body.theta()?;
    let n = n_layers(d, theta.to_f64());
    let lambda = Rat::new(BigInt::from(2 * (d as i64 + 1)), BigInt::from(d as i64));
    let packing = packing_upper(body, &lambda)?;
    let value = match &packing.value {
        Scalar::Exact(p) => Scalar::Exact(p * rat_int(n as i64 + 1)),
        Scalar::Approx(p) => Scalar::Approx(p * (n as f64 + 1.0)),
    };
    Ok(
        BoundReport::new("kappa_upper", "P(K,2(1+1/d)) * (N+1)", value)
            .with_int("d", d as i64)
            .with("theta", theta)
            .with_int("N", n as i64)
            .with("lambda", Scalar::Exact(lambda))
            .with("packing", packing.value),
    )
}

/// Body-free worst case at the centroid: `(3+2/d)^d * C(2d,d) * (N+1)`
/// with theta = d in the N formula (Minkowski's bound), combining the
/// packing bound with the Milman-Pajor and Rogers-Shephard volume bounds.
pub fn centroid_kappa_upper(d: usize) -> BoundReport {
    let n = n_layers(d, d as f64);
    let base = Rat::new(BigInt::from(3 * d as i64 + 2), BigInt::from(d as i64));
    let shell = rat_pow(&base, d);
    let binom = binomial(2 * d, d);
    let value = &shell * &binom * rat_int(n as i64 + 1);
    BoundReport::new(
        "centroid_kappa_upper",
        "(3+2/d)^d * C(2d,d) * (N+1)",
        Scalar::Exact(value),
    )
    .with_int("d", d as i64)
    .with_int("N", n as i64)
    .with("shell", Scalar::Exact(shell))
    .with("binomial", Scalar::Exact(binom))
}

/// Symmetric-body kappa bound `(3+2/d)^d (N+1)` with theta = 1.
pub fn kappa_upper_symmetric(d: usize) -> BoundReport {
    let n = n_layers(d, 1.0);
    let base = Rat::new(BigInt::from(3 * d as i64 + 2), BigInt::from(d as i64));
    let shell = rat_pow(&base, d);
    let value = &shell * rat_int(n as i64 + 1);
    BoundReport::new("kappa_upper_symmetric", "(3+2/d)^d * (N+1)", Scalar::Exact(value))
        .with_int("d", d as i64)
        .with_int("N", n as i64)
        .with("shell", Scalar::Exact(shell))
}

/// Chain-of-balls bound: `1 + D * I` where D bounds decreasing-radius
/// subsequences (symmetric kappa bound) and `I = floor(d (1+2^(1/d))^d)`
/// bounds increasing ones, combined through the Erdos-Szekeres count.
pub fn chain_upper(d: usize) -> BoundReport {
    let kappa_sym = kappa_upper_symmetric(d);
    let d_bound = kappa_sym.value.as_exact().expect("symmetric bound is exact").clone();
    let i_real = d as f64 * (1.0 + 2.0f64.powf(1.0 / d as f64)).powi(d as i32);
    let i_bound = i_real.floor() as i64;
    let value = Rat::one() + &d_bound * rat_int(i_bound);
    BoundReport::new("chain_upper", "1 + D * I", Scalar::Exact(value))
        .with_int("d", d as i64)
        .with("D", Scalar::Exact(d_bound))
        .with_int("I", i_bound)
        .with("I_real", Scalar::Approx(i_real))
}

/// Lower bound for the boundary Hadwiger variant h'(K): the statement
/// value `(2/sqrt(3))^d / (4 d^2)` (valid for large d) and the proof value
/// `(2/sqrt(3))^d * 9 / (4 e^2 (d+4)^2)`.
pub fn hadwiger_lower(d: usize) -> BoundReport {
    let growth = (2.0 / 3.0f64.sqrt()).powi(d as i32);
    let statement = growth / (4.0 * (d * d) as f64);
    let proof = growth * 9.0 / (4.0 * std::f64::consts::E.powi(2) * ((d + 4) * (d + 4)) as f64);
    // (2/sqrt(3))^d is rational for even d: 2^d / 3^(d/2).
    let value = if d.is_multiple_of(2) {
        let g = Rat::new(BigInt::from(2).pow(d as u32), BigInt::from(3).pow(d as u32 / 2));
        Scalar::Exact(g / rat_int(4 * (d * d) as i64))
    } else {
        Scalar::Approx(statement)
    };
    BoundReport::new(
        "hadwiger_lower",
        "(2/sqrt3)^d / (4d^2); proof form 9(2/sqrt3)^d / (4e^2(d+4)^2)",
        value,
    )
    .with_int("d", d as i64)
    .with("growth", Scalar::Approx(growth))
    .with("statement_value", Scalar::Approx(statement))
    .with("proof_value", Scalar::Approx(proof))
}

/// The sandwich check kappa-witness-size <= kappa_upper for a verified
/// witness; returns (size, bound report) so callers can assert and log.
pub fn check_witness_sandwich(
    arrangement: &crate::arrangement::Arrangement,
) -> Result<(usize, BoundReport)> {
    let bound = kappa_upper(arrangement.body())?;
    Ok((arrangement.len(), bound))
}
