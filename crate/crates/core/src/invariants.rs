//! Topological sides of the orbifold characteristic-number formulas, the
//! two Einstein obstruction checks, and connected sums.
//!
//! All arithmetic is exact over `ℚ` with arbitrary-precision integers.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("cone order must be at least 2, got {0}")]
    ConeOrder(i64),
    #[error("an orientable closed surface has even Euler characteristic at most 2, got {0}")]
    OrientableEuler(i64),
    #[error("connected sum needs equal cone orders, got {0} and {1}")]
    ConeOrderMismatch(i64, i64),
    #[error("blow-up count must be non-negative, got {0}")]
    NegativeBlowups(i64),
}

/// Topological data of an orbifold `(M, Σ)` with cone angle `2π/ν` along `Σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGeometry")]
pub struct OrbifoldGeometry {
    #[serde(rename = "euler_M")]
    pub euler_m: i64,
    #[serde(rename = "signature_M")]
    pub signature_m: i64,
    #[serde(rename = "euler_Sigma")]
    pub euler_sigma: i64,
    pub self_intersection: i64,
    pub cone_order: i64,
    pub sigma_orientable: bool,
}

#[derive(Deserialize)]
struct RawGeometry {
    #[serde(rename = "euler_M")]
    euler_m: i64,
    #[serde(rename = "signature_M")]
    signature_m: i64,
    #[serde(rename = "euler_Sigma")]
    euler_sigma: i64,
    self_intersection: i64,
    cone_order: i64,
    sigma_orientable: bool,
}

impl TryFrom<RawGeometry> for OrbifoldGeometry {
    type Error = GeometryError;

    fn try_from(r: RawGeometry) -> Result<Self, Self::Error> {
        OrbifoldGeometry::new(
            r.euler_m,
            r.signature_m,
            r.euler_sigma,
            r.self_intersection,
            r.cone_order,
            r.sigma_orientable,
        )
    }
}

impl OrbifoldGeometry {
    pub fn new(
        euler_m: i64,
        signature_m: i64,
        euler_sigma: i64,
        self_intersection: i64,
        cone_order: i64,
        sigma_orientable: bool,
    ) -> Result<Self, GeometryError> {
        if cone_order < 2 {
            return Err(GeometryError::ConeOrder(cone_order));
        }
        if sigma_orientable && (euler_sigma > 2 || euler_sigma % 2 != 0) {
            return Err(GeometryError::OrientableEuler(euler_sigma));
        }
        Ok(OrbifoldGeometry {
            euler_m,
            signature_m,
            euler_sigma,
            self_intersection,
            cone_order,
            sigma_orientable,
        })
    }

    /// `S⁴` with the unknotted `S²`, the unit for connected sums.
    pub fn sphere_pair(cone_order: i64) -> Result<Self, GeometryError> {
        Self::new(2, 0, 2, 0, cone_order, true)
    }

    fn nu(&self) -> BigRational {
        int(self.cone_order)
    }

    /// `1 − 1/ν`.
    fn cone_defect(&self) -> BigRational {
        BigRational::one() - self.nu().recip()
    }

    /// `χ(M) − (1 − 1/ν) χ(Σ)`.
    pub fn chi_orb(&self) -> BigRational {
        int(self.euler_m) - self.cone_defect() * int(self.euler_sigma)
    }

    /// `τ(M) − ⅓(1 − 1/ν²)[Σ]²`.
    pub fn tau_orb(&self) -> BigRational {
        let nu = self.nu();
        let factor = (BigRational::one() - (&nu * &nu).recip()) / int(3);
        int(self.signature_m) - factor * int(self.self_intersection)
    }

    /// `½(15χ(M) − 29τ(M)) − 4χ(Σ) + 4[Σ]²`.
    pub fn index_k(&self) -> BigRational {
        let half = BigRational::new(BigInt::from(15 * self.euler_m - 29 * self.signature_m), BigInt::from(2));
        half - int(4 * self.euler_sigma) + int(4 * self.self_intersection)
    }

    /// Satake Euler number of the orbifold normal bundle, taken as `[Σ]²/ν`.
    pub fn satake_normal_euler(&self) -> BigRational {
        int(self.self_intersection) / self.nu()
    }

    /// Evaluates `2χ(M) ± 3τ(M) ≥ (1 − 1/ν)(2χ(Σ) ± (1 + 1/ν)[Σ]²)` for
    /// both signs. `true` means the necessary condition holds.
    pub fn einstein_obstruction(&self) -> (bool, bool) {
        let check = |sign: i64| {
            let lhs = int(2 * self.euler_m + sign * 3 * self.signature_m);
            let rim = BigRational::one() + self.nu().recip();
            let rhs = self.cone_defect()
                * (int(2 * self.euler_sigma) + int(sign) * rim * int(self.self_intersection));
            lhs >= rhs
        };
        (check(1), check(-1))
    }

    /// `(M₁ # M₂, Σ₁ # Σ₂)` for connected surfaces with a common cone order.
    pub fn connected_sum(&self, other: &OrbifoldGeometry) -> Result<OrbifoldGeometry, GeometryError> {
        if self.cone_order != other.cone_order {
            return Err(GeometryError::ConeOrderMismatch(self.cone_order, other.cone_order));
        }
        Ok(OrbifoldGeometry {
            euler_m: self.euler_m + other.euler_m - 2,
            signature_m: self.signature_m + other.signature_m,
            euler_sigma: self.euler_sigma + other.euler_sigma - 2,
            self_intersection: self.self_intersection + other.self_intersection,
            cone_order: self.cone_order,
            sigma_orientable: self.sigma_orientable && other.sigma_orientable,
        })
    }

    pub fn report(&self) -> InvariantReport {
        let (plus, minus) = self.einstein_obstruction();
        let index = self.index_k();
        let mut warnings = Vec::new();
        if !index.is_integer() {
            warnings.push(format!(
                "index {index} is not an integer: 15 chi(M) - 29 tau(M) is odd, inconsistent data for a closed 4-manifold"
            ));
        }
        if !self.sigma_orientable {
            warnings.push("index formula applied unchanged to a non-orientable Sigma".to_string());
        }
        InvariantReport {
            chi_orb: Rational(self.chi_orb()),
            tau_orb: Rational(self.tau_orb()),
            index_k: Rational(index),
            satake_normal_euler: Rational(self.satake_normal_euler()),
            einstein_plus_ok: plus,
            einstein_minus_ok: minus,
            warnings,
        }
    }
}

fn int(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

/// An exact rational, serialized as `"p/q"` (or `"p"` when integral).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse::<BigRational>()
            .map(Rational)
            .map_err(|e| serde::de::Error::custom(format!("bad rational {s:?}: {e}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub chi_orb: Rational,
    pub tau_orb: Rational,
    #[serde(rename = "index_K")]
    pub index_k: Rational,
    pub satake_normal_euler: Rational,
    pub einstein_plus_ok: bool,
    pub einstein_minus_ok: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub warnings: Vec<String>,
}

pub fn chi_orb(g: &OrbifoldGeometry) -> BigRational {
    g.chi_orb()
}

pub fn tau_orb(g: &OrbifoldGeometry) -> BigRational {
    g.tau_orb()
}

pub fn index_k(g: &OrbifoldGeometry) -> BigRational {
    g.index_k()
}

pub fn satake_normal_euler(g: &OrbifoldGeometry) -> BigRational {
    g.satake_normal_euler()
}

pub fn einstein_obstruction(g: &OrbifoldGeometry) -> (bool, bool) {
    g.einstein_obstruction()
}

pub fn connected_sum(g1: &OrbifoldGeometry, g2: &OrbifoldGeometry) -> Result<OrbifoldGeometry, GeometryError> {
    g1.connected_sum(g2)
}

/// Whether the symplectic Seiberg–Witten criterion excludes an Einstein
/// edge-cone metric on `M # ℓ·(−CP²)`.
///
/// `c1_term_square` and `omega_pairing` are `(c₁(M) − (1−1/ν)[Σ])²` and
/// `(c₁(M) − (1−1/ν)[Σ])·[ω]`; exclusion needs a negative pairing and
/// `ℓ ≥ c1_term_square / 3`.
pub fn seiberg_witten_excluded(
    c1_term_square: &BigRational,
    omega_pairing: &BigRational,
    blowups: i64,
) -> Result<bool, GeometryError> {
    if blowups < 0 {
        return Err(GeometryError::NegativeBlowups(blowups));
    }
    Ok(omega_pairing.is_negative() && int(blowups) * int(3) >= *c1_term_square)
}

/// Convenience for callers with integer data.
pub fn seiberg_witten_excluded_int(c1_term_square: i64, omega_pairing: i64, blowups: i64) -> Result<bool, GeometryError> {
    seiberg_witten_excluded(&int(c1_term_square), &int(omega_pairing), blowups)
}
