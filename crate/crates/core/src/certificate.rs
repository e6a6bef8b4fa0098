//! Self-contained construction certificates and their verification.
//!
//! A certificate records every choice the construction made (points,
//! parameters, interpolant, specialization value, selected prime, the
//! polynomials) together with named check records. Verification
//! recomputes the polynomials from the recorded choices, re-derives every
//! check from the stored data alone, and compares byte-for-byte — so a
//! third party can audit a run without repeating any search.
//!
//! Wire format: JSON; every unbounded integer or rational is a decimal
//! string ("n" or "n/d"), polynomials are coefficient-string arrays with
//! the constant term first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, format_rational};
use crate::config::EffortConfig;
use crate::construct::{
    self, assemble_curve_polynomial, auxiliary_factor, AcceptableSet, ConstructionParams,
    ForbiddenRoots,
};
use crate::error::Error;
use crate::newton;
use crate::poly::{IrreducibilityCertificate, IrreducibilityVerdict, Polynomial};
use crate::projective;
use crate::Result;

/// serde adapter: BigInt <-> decimal string
pub mod int_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        let s = String::deserialize(d)?;
        crate::arith::parse_integer(&s).map_err(serde::de::Error::custom)
    }
}

/// serde adapter: BigRational <-> "n" or "n/d"
pub mod rat_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&crate::arith::format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::arith::parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

/// One named, recomputable check with its witness data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub pass: bool,
    pub witness: serde_json::Value,
}

impl CheckRecord {
    pub fn new(name: &str, pass: bool, witness: serde_json::Value) -> Self {
        CheckRecord {
            name: name.to_string(),
            pass,
            witness,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParamsRecord {
    pub r: String,
    pub d: String,
    pub n: String,
    pub m: String,
    pub radical: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpecializationRecord {
    /// integer substituted for the interpolation family parameter
    pub y: String,
    /// s in the monic cofactor (X - s)^{n-r}
    pub shift: String,
}

/// Certificate for one affine construction: the superelliptic model
/// y^d = f(x) whose affine rational points are exactly the input set.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveCertificate {
    pub config: EffortConfig,
    /// prescribed points (a_i, b_i)
    pub points: Vec<(String, String)>,
    pub params: ParamsRecord,
    /// h: irreducible interpolant with h(a_i) = b_i^d
    pub interpolant: Polynomial,
    pub specialization: SpecializationRecord,
    pub irreducibility: IrreducibilityCertificate,
    /// the selected prime from the 5 mod 12 class
    pub ell: String,
    /// g = ell * N^6 * prod (X - a_i)^6 + 1
    pub auxiliary: Polynomial,
    /// f = g * ((h - 1) g + 1); the curve is y^d = f(x)
    pub curve: Polynomial,
    pub genus: String,
    /// generators of the forbidden root set this run had to avoid
    pub forbidden: Vec<Polynomial>,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoordinateChangeRecord {
    /// row-major integer matrix (n x n for plain normalization,
    /// (n+1) x (n+1) when it includes the chart)
    pub matrix: Vec<Vec<String>>,
    pub scale: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemComponent {
    /// which ambient coordinate this equation pins: x_j^d = f_j(x_1)
    pub coordinate: u64,
    pub certificate: CurveCertificate,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairwiseResultant {
    pub first: u64,
    pub second: u64,
    pub resultant: String,
}

/// Certificate for a glued system in projective n-space:
/// V(x_2^d - f_2(x_1), ..., x_n^d - f_n(x_1)) after a recorded chart and
/// coordinate change.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SystemCertificate {
    pub config: EffortConfig,
    /// ambient projective dimension n
    pub dimension: u64,
    /// canonical primitive homogeneous coordinates of the prescribed set
    pub points: Vec<Vec<String>>,
    /// hyperplane avoiding every point
    pub chart: Vec<String>,
    pub coordinate_change: CoordinateChangeRecord,
    /// shared exponent d of every equation
    pub exponent: String,
    pub components: Vec<SystemComponent>,
    pub pairwise_resultants: Vec<PairwiseResultant>,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingletonModel {
    pub exponent: String,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrustedFact {
    pub name: String,
    pub status: String,
}

/// Certificate for the one-point case: the fixed hyperelliptic model
/// y^2 = x^5 - 2 (unique rational point at infinity) plus a unimodular
/// change of coordinates placing that point at the prescribed one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingletonCertificate {
    pub config: EffortConfig,
    /// canonical primitive homogeneous coordinates of the prescribed point
    pub point: Vec<String>,
    pub model: SingletonModel,
    pub genus: String,
    pub coordinate_change: CoordinateChangeRecord,
    /// facts consumed from the literature rather than re-proved here
    pub trusted: Vec<TrustedFact>,
    pub checks: Vec<CheckRecord>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
#[allow(clippy::large_enum_variant)]
pub enum Certificate {
    Construction(CurveCertificate),
    System(SystemCertificate),
    Singleton(SingletonCertificate),
}

impl Certificate {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("certificate serializes");
        out.push('\n');
        out
    }

    pub fn from_json(s: &str) -> Result<Certificate> {
        serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad certificate: {e}")))
    }
}

/// A verification mismatch: which check failed and why.
#[derive(Debug, Clone)]
pub struct VerifyFailure {
    pub check: String,
    pub detail: String,
}

impl std::fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "check {:?} failed: {}", self.check, self.detail)
    }
}

impl std::error::Error for VerifyFailure {}

pub type VerifyResult = std::result::Result<(), VerifyFailure>;

fn fail(check: &str, detail: impl Into<String>) -> VerifyFailure {
    VerifyFailure {
        check: check.to_string(),
        detail: detail.into(),
    }
}

// ---------------------------------------------------------------------------
// parsing stored certificates back into exact values
// ---------------------------------------------------------------------------

/// Native-typed view of a stored construction certificate.
pub struct ParsedConstruction {
    pub set: AcceptableSet,
    pub params: ConstructionParams,
    pub h: Polynomial,
    pub y: BigInt,
    pub shift: BigInt,
    pub ell: BigInt,
    pub g: Polynomial,
    pub f: Polynomial,
    pub genus: BigInt,
    pub forbidden: ForbiddenRoots,
}

impl CurveCertificate {
    pub fn parse(&self) -> Result<ParsedConstruction> {
        let raw: Vec<(BigRational, BigRational)> = self
            .points
            .iter()
            .map(|(a, b)| Ok((arith::parse_rational(a)?, arith::parse_rational(b)?)))
            .collect::<Result<_>>()?;
        let set = AcceptableSet::validate(&raw)?;
        let params = ConstructionParams {
            r: arith::parse_integer(&self.params.r)?
                .try_into()
                .map_err(|_| Error::Parse("r out of range".into()))?,
            d: arith::parse_integer(&self.params.d)?
                .try_into()
                .map_err(|_| Error::Parse("d out of range".into()))?,
            n: arith::parse_integer(&self.params.n)?
                .try_into()
                .map_err(|_| Error::Parse("n out of range".into()))?,
            m: arith::parse_integer(&self.params.m)?,
            radical: arith::parse_integer(&self.params.radical)?,
        };
        Ok(ParsedConstruction {
            set,
            params,
            h: self.interpolant.clone(),
            y: arith::parse_integer(&self.specialization.y)?,
            shift: arith::parse_integer(&self.specialization.shift)?,
            ell: arith::parse_integer(&self.ell)?,
            g: self.auxiliary.clone(),
            f: self.curve.clone(),
            genus: arith::parse_integer(&self.genus)?,
            forbidden: ForbiddenRoots::new(self.forbidden.clone()),
        })
    }
}

// ---------------------------------------------------------------------------
// check derivation shared by construction and verification
// ---------------------------------------------------------------------------

fn json_str(s: impl std::fmt::Display) -> serde_json::Value {
    serde_json::Value::String(s.to_string())
}

/// Re-derive every construction check from the stored values alone.
/// Construction calls this to mint the record; verification calls it again
/// and compares.
pub fn derive_construction_checks(
    p: &ParsedConstruction,
    irreducibility: &IrreducibilityCertificate,
) -> Result<Vec<CheckRecord>> {
    let mut checks = Vec::new();
    let d32 = u32::try_from(p.params.d).map_err(|_| Error::Parse("d too large".into()))?;
    let six_r = 6 * p.params.r;

    // interpolation: f(a_i) = b_i^d, bit-exact
    let mut interpolation_ok = true;
    let mut interpolation_witness = Vec::new();
    for (a, b) in p.set.points() {
        let value = p.f.evaluate_int(a);
        let target = BigRational::from_integer(b.pow(d32));
        interpolation_ok &= value == target;
        interpolation_witness.push(serde_json::json!({
            "x": a.to_string(),
            "value": format_rational(&value),
        }));
    }
    checks.push(CheckRecord::new(
        "interpolation",
        interpolation_ok,
        serde_json::Value::Array(interpolation_witness),
    ));

    // degrees: deg h = n, deg g = 6r, deg f = d = 18r + 3
    let degrees_ok = p.h.degree() == Some(p.params.n)
        && p.g.degree() == Some(six_r)
        && p.f.degree() == Some(p.params.d as usize)
        && p.params.d == 18 * p.params.r as u64 + 3
        && p.params.n == 6 * p.params.r + 3;
    checks.push(CheckRecord::new(
        "degrees",
        degrees_ok,
        serde_json::json!({
            "interpolant": p.h.degree(),
            "auxiliary": p.g.degree(),
            "curve": p.f.degree(),
        }),
    ));

    // interpolant integrality: m * h has integer coefficients
    let mh = p.h.scale(&BigRational::from_integer(p.params.m.clone()));
    checks.push(CheckRecord::new(
        "interpolant-integrality",
        mh.has_integer_coefficients(),
        json_str(&p.params.m),
    ));

    // irreducibility of h, revalidated from the stored witness
    let irr_ok = irreducibility.verdict == IrreducibilityVerdict::Irreducible
        && crate::poly::revalidate_irreducibility(&p.h, irreducibility).is_ok();
    checks.push(CheckRecord::new(
        "interpolant-irreducible",
        irr_ok,
        serde_json::to_value(irreducibility).expect("serializable"),
    ));

    // prime class: ell prime, ell = 5 mod 12, coprime to the radical
    let class_ok = arith::is_prime(&p.ell)
        && (&p.ell - BigInt::from(5)) % BigInt::from(12) == BigInt::zero()
        && num_integer::Integer::gcd(&p.ell, &p.params.radical).is_one();
    checks.push(CheckRecord::new("prime-class", class_ok, json_str(&p.ell)));

    // ell-adic conditions on h: integral coefficients, unit leading
    // coefficient, unit discriminant
    let disc_h = p.h.discriminant()?;
    let h_vals_ok =
        p.h.coeffs()
            .iter()
            .all(|c| c.is_zero() || arith::int_valuation(c.denom(), &p.ell) == 0);
    let lc_h =
        p.h.leading_coefficient()
            .cloned()
            .unwrap_or_else(BigRational::zero);
    let lc_h_unit = !lc_h.is_zero()
        && arith::int_valuation(lc_h.numer(), &p.ell) == 0
        && arith::int_valuation(lc_h.denom(), &p.ell) == 0;
    let disc_h_unit = !disc_h.is_zero()
        && arith::int_valuation(disc_h.numer(), &p.ell) == 0
        && arith::int_valuation(disc_h.denom(), &p.ell) == 0;
    checks.push(CheckRecord::new(
        "interpolant-ell-adic",
        h_vals_ok && lc_h_unit && disc_h_unit,
        serde_json::json!({
            "discriminant": format_rational(&disc_h),
        }),
    ));

    // polygon of g at ell: single pure segment of slope 1/6r
    let g_polygon = newton::newton_polygon(&p.g, &p.ell)?;
    let g_pure = newton::is_pure_slope_irreducible(&p.g, &p.ell)?
        && g_polygon.segments().len() == 1
        && g_polygon.segments()[0].slope
            == BigRational::new(BigInt::one(), BigInt::from(six_r as i64));
    checks.push(CheckRecord::new(
        "auxiliary-pure-slope",
        g_pure,
        serde_json::to_value(g_polygon.segments()).expect("serializable"),
    ));

    // polygon of (h-1)g + 1 at ell: slope-0 length n then slope-1/6r
    let psi = &(&(&p.h - &Polynomial::one()) * &p.g) + &Polynomial::one();
    let psi_shape = newton::check_two_segment_shape(&psi, &p.ell, p.params.n, six_r)?;
    let psi_polygon = newton::newton_polygon(&psi, &p.ell)?;
    checks.push(CheckRecord::new(
        "carrier-two-segment",
        psi_shape,
        serde_json::to_value(psi_polygon.segments()).expect("serializable"),
    ));

    // the two factors of f are coprime
    let factor_gcd = p.g.gcd(&psi)?;
    checks.push(CheckRecord::new(
        "factors-coprime",
        factor_gcd == Polynomial::one(),
        json_str(&factor_gcd),
    ));

    // f is separable
    let disc_f = p.f.discriminant()?;
    checks.push(CheckRecord::new(
        "curve-separable",
        !disc_f.is_zero(),
        json_str(format_rational(&disc_f)),
    ));

    // v_ell(leading coefficient of f) = 2: no rational points at infinity
    let lc_f =
        p.f.leading_coefficient()
            .cloned()
            .unwrap_or_else(BigRational::zero);
    let lc_val_ok = !lc_f.is_zero()
        && arith::int_valuation(lc_f.numer(), &p.ell) - arith::int_valuation(lc_f.denom(), &p.ell)
            == 2;
    checks.push(CheckRecord::new(
        "leading-coefficient-valuation",
        lc_val_ok,
        json_str(format_rational(&lc_f)),
    ));

    // both g and f avoid the forbidden root set (resultants nonzero)
    let mut avoid_ok = true;
    let mut avoid_witness = Vec::new();
    for q in p.forbidden.generators() {
        let res_g = p.g.resultant(q)?;
        let res_f = p.f.resultant(q)?;
        avoid_ok &= !res_g.is_zero() && !res_f.is_zero();
        avoid_witness.push(serde_json::json!({
            "generator-degree": q.degree(),
            "auxiliary-resultant": format_rational(&res_g),
            "curve-resultant": format_rational(&res_f),
        }));
    }
    checks.push(CheckRecord::new(
        "forbidden-avoidance",
        avoid_ok,
        serde_json::Value::Array(avoid_witness),
    ));

    // genus of the plane model: (d-1)(d-2)/2
    let expected_genus =
        (BigInt::from(p.params.d) - 1u32) * (BigInt::from(p.params.d) - 2u32) / BigInt::from(2);
    checks.push(CheckRecord::new(
        "genus",
        p.genus == expected_genus && p.params.d % 2 == 1,
        json_str(&expected_genus),
    ));

    Ok(checks)
}

// ---------------------------------------------------------------------------
// verification
// ---------------------------------------------------------------------------

/// Verify a construction certificate: recompute the polynomials from the
/// recorded choices, then re-derive every check and compare with the
/// stored records. Fails fast with the offending check's name.
pub fn verify_construction(cert: &CurveCertificate) -> VerifyResult {
    let parsed = cert.parse().map_err(|e| fail("parse", e.to_string()))?;

    // structural recomputation: every stored polynomial must equal the one
    // the recorded choices produce
    let params = construct::compute_params(&parsed.set, &cert.config)
        .map_err(|e| fail("params", e.to_string()))?;
    if params != parsed.params {
        return Err(fail("params", "stored parameters do not match the points"));
    }
    let l = construct::lagrange_interpolant(&parsed.set, params.d);
    let b = construct::vanishing_polynomial(&parsed.set);
    let c = Polynomial::linear_root(&BigRational::from_integer(parsed.shift.clone()))
        .pow((params.n - params.r) as u32);
    let h = &l + &(&b * &c).scale(&BigRational::from_integer(parsed.y.clone()));
    if h != parsed.h {
        return Err(fail(
            "interpolant-recomputation",
            "stored interpolant differs from L + y*b*c",
        ));
    }
    if !parsed.y.is_positive() {
        return Err(fail("interpolant-recomputation", "y must be positive"));
    }
    let g = auxiliary_factor(&parsed.set, &params.radical, &parsed.ell);
    if g != parsed.g {
        return Err(fail(
            "auxiliary-recomputation",
            "stored auxiliary factor differs from ell*N^6*b^6 + 1",
        ));
    }
    let f = assemble_curve_polynomial(&parsed.h, &parsed.g);
    if f != parsed.f {
        return Err(fail(
            "curve-recomputation",
            "stored curve polynomial differs from g*((h-1)g + 1)",
        ));
    }

    // re-derive all checks and compare with what the certificate claims
    let derived = derive_construction_checks(&parsed, &cert.irreducibility)
        .map_err(|e| fail("derive", e.to_string()))?;
    compare_checks(&derived, &cert.checks)
}

fn compare_checks(derived: &[CheckRecord], stored: &[CheckRecord]) -> VerifyResult {
    if derived.len() != stored.len() {
        return Err(fail("checks", "check list length mismatch"));
    }
    for (d, s) in derived.iter().zip(stored) {
        if d.name != s.name {
            return Err(fail(
                &s.name,
                format!("check order mismatch, expected {}", d.name),
            ));
        }
        if !d.pass {
            return Err(fail(&d.name, "recomputed check fails"));
        }
        if !s.pass {
            return Err(fail(&s.name, "stored check is marked failing"));
        }
        if d.witness != s.witness {
            return Err(fail(&d.name, "stored witness differs from recomputation"));
        }
    }
    Ok(())
}

/// Verify a singleton certificate: fixed model, separability, genus, and
/// the unimodular coordinate change mapping the base point to the
/// prescribed point.
pub fn verify_singleton(cert: &SingletonCertificate) -> VerifyResult {
    let model = construct::singleton_model();
    if cert.model.polynomial != model {
        return Err(fail("model-fixed", "stored model is not x^5 - 2"));
    }
    if cert.model.exponent != "2" {
        return Err(fail("model-fixed", "stored exponent is not 2"));
    }
    if cert.genus != "2" {
        return Err(fail("genus", "hyperelliptic quintic model has genus 2"));
    }
    let disc = model
        .discriminant()
        .map_err(|e| fail("model-separable", e.to_string()))?;
    if disc.is_zero() {
        return Err(fail("model-separable", "model discriminant vanishes"));
    }
    let point: Vec<BigInt> = cert
        .point
        .iter()
        .map(|s| arith::parse_integer(s))
        .collect::<Result<_>>()
        .map_err(|e| fail("parse", e.to_string()))?;
    let matrix: Vec<Vec<BigInt>> = cert
        .coordinate_change
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| arith::parse_integer(s))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()
        .map_err(|e| fail("parse", e.to_string()))?;
    let det = projective::int_det(&matrix);
    if det.abs() != BigInt::one() {
        return Err(fail(
            "basepoint-mapped",
            "coordinate change is not unimodular",
        ));
    }
    // first column must be the prescribed point
    for (i, row) in matrix.iter().enumerate() {
        if row[0] != point[i] {
            return Err(fail(
                "basepoint-mapped",
                "coordinate change does not send the base point to the prescribed point",
            ));
        }
    }
    if !cert
        .trusted
        .iter()
        .any(|t| t.name == "jacobian-rank-0" && t.status == "trusted-external")
    {
        return Err(fail(
            "trusted-facts",
            "missing the trusted rank-0 Jacobian record",
        ));
    }
    let derived =
        derive_singleton_checks_impl(&point, &matrix).map_err(|e| fail("derive", e.to_string()))?;
    compare_checks(&derived, &cert.checks)
}

/// Singleton checks, re-derivable from the stored point and matrix alone.
pub fn derive_singleton_checks_impl(
    point: &[BigInt],
    matrix: &[Vec<BigInt>],
) -> Result<Vec<CheckRecord>> {
    let mut checks = Vec::new();
    let model = construct::singleton_model();
    let disc = model.discriminant()?;
    checks.push(CheckRecord::new(
        "model-separable",
        !disc.is_zero(),
        json_str(format_rational(&disc)),
    ));

    // the prescribed point must be in canonical primitive form
    let content = point
        .iter()
        .fold(BigInt::zero(), |acc, c| num_integer::Integer::gcd(&acc, c));
    let first_nonzero_positive = point
        .iter()
        .find(|c| !c.is_zero())
        .is_some_and(|c| c.is_positive());
    checks.push(CheckRecord::new(
        "point-primitive",
        content.is_one() && first_nonzero_positive,
        serde_json::Value::Array(point.iter().map(json_str).collect()),
    ));

    // unimodular change of coordinates carrying the base point to the
    // prescribed point (first column)
    let det = projective::int_det(matrix);
    let square = matrix.len() == point.len() && matrix.iter().all(|r| r.len() == point.len());
    let maps = square
        && matrix
            .iter()
            .zip(point)
            .all(|(row, p)| row.first() == Some(p));
    checks.push(CheckRecord::new(
        "basepoint-mapped",
        det.abs().is_one() && maps,
        json_str(&det),
    ));

    Ok(checks)
}

/// Verify a glued-system certificate: every component certificate, the
/// chart and coordinate change, the per-coordinate point sets, pairwise
/// coprimality, and the point round trip.
pub fn verify_system(cert: &SystemCertificate) -> VerifyResult {
    for component in &cert.components {
        verify_construction(&component.certificate).map_err(|e| VerifyFailure {
            check: format!("component-{}/{}", component.coordinate, e.check),
            detail: e.detail,
        })?;
    }
    let derived = derive_system_checks(cert).map_err(|e| fail("derive", e.to_string()))?;
    compare_checks(&derived, &cert.checks)
}

/// Re-derive the system-level checks from the stored data.
pub fn derive_system_checks(cert: &SystemCertificate) -> Result<Vec<CheckRecord>> {
    let n = cert.dimension as usize;
    let mut checks = Vec::new();

    let points: Vec<Vec<BigInt>> = cert
        .points
        .iter()
        .map(|p| {
            p.iter()
                .map(|s| arith::parse_integer(s))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let chart: Vec<BigInt> = cert
        .chart
        .iter()
        .map(|s| arith::parse_integer(s))
        .collect::<Result<_>>()?;
    let matrix: Vec<Vec<BigInt>> = cert
        .coordinate_change
        .matrix
        .iter()
        .map(|row| {
            row.iter()
                .map(|s| arith::parse_integer(s))
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let scale = arith::parse_integer(&cert.coordinate_change.scale)?;
    let d: u64 = arith::parse_integer(&cert.exponent)?
        .try_into()
        .map_err(|_| Error::Parse("exponent out of range".into()))?;

    // shape: dimension >= 2, matrix (n+1)x(n+1) with last row = chart,
    // one component for each coordinate 2..=n
    let shape_ok = n >= 2
        && matrix.len() == n + 1
        && matrix.iter().all(|row| row.len() == n + 1)
        && matrix[n] == chart
        && cert.components.len() == n - 1
        && cert
            .components
            .iter()
            .enumerate()
            .all(|(idx, c)| c.coordinate == idx as u64 + 2)
        && scale.is_positive();
    checks.push(CheckRecord::new(
        "system-shape",
        shape_ok,
        serde_json::json!({"dimension": n, "components": cert.components.len()}),
    ));
    if !shape_ok {
        return Ok(checks);
    }

    // chart avoids every point; transform is invertible
    let det = projective::int_det(&matrix);
    let mut chart_ok = !det.is_zero();
    for p in &points {
        let inner: BigInt = chart.iter().zip(p).map(|(w, x)| w * x).sum();
        chart_ok &= !inner.is_zero();
    }
    checks.push(CheckRecord::new("chart-valid", chart_ok, json_str(&det)));

    // transformed affine images: integral, nonzero everywhere, all values
    // distinct, and the component point sets are exactly their pair sets
    let mut images: Vec<Vec<BigRational>> = Vec::new();
    for p in &points {
        let mv = projective::mat_vec(&matrix, p);
        let denom = mv[n].clone();
        let img: Vec<BigRational> = (0..n)
            .map(|i| BigRational::new(mv[i].clone() * &scale, denom.clone()))
            .collect();
        images.push(img);
    }
    let mut transform_ok = images
        .iter()
        .all(|img| img.iter().all(|c| c.is_integer() && !c.is_zero()));
    let mut all_values: Vec<&BigRational> = images.iter().flatten().collect();
    let before = all_values.len();
    all_values.sort();
    all_values.dedup();
    transform_ok &= all_values.len() == before;
    for component in &cert.components {
        let j = component.coordinate as usize;
        let expected: Vec<(String, String)> = images
            .iter()
            .map(|img| (format_rational(&img[0]), format_rational(&img[j - 1])))
            .collect();
        transform_ok &= component.certificate.points == expected;
    }
    checks.push(CheckRecord::new(
        "transform-acceptable",
        transform_ok,
        serde_json::json!({"scale": scale.to_string()}),
    ));

    // every component shares the exponent and its forbidden set is the
    // list of earlier curve polynomials
    let mut chain_ok = true;
    let mut earlier: Vec<Polynomial> = Vec::new();
    for component in &cert.components {
        chain_ok &= component.certificate.params.d == d.to_string();
        chain_ok &= component.certificate.forbidden == earlier;
        earlier.push(component.certificate.curve.clone());
    }
    checks.push(CheckRecord::new("component-chain", chain_ok, json_str(d)));

    // pairwise coprimality of the curve polynomials, witnessed by nonzero
    // resultants
    let mut coprime_ok = true;
    let mut derived_pairs = Vec::new();
    for (i, a) in cert.components.iter().enumerate() {
        for b in cert.components.iter().skip(i + 1) {
            let res = a.certificate.curve.resultant(&b.certificate.curve)?;
            coprime_ok &= !res.is_zero();
            derived_pairs.push(PairwiseResultant {
                first: a.coordinate,
                second: b.coordinate,
                resultant: format_rational(&res),
            });
        }
    }
    coprime_ok &= derived_pairs == cert.pairwise_resultants;
    checks.push(CheckRecord::new(
        "pairwise-coprime",
        coprime_ok,
        serde_json::json!({"pairs": derived_pairs.len()}),
    ));

    // round trip: every transformed image maps back to its original point
    let mut roundtrip_ok = true;
    for (p, img) in points.iter().zip(&images) {
        match projective::map_back(&matrix, &scale, img) {
            Ok(back) => roundtrip_ok &= back.coords() == p.as_slice(),
            Err(_) => roundtrip_ok = false,
        }
    }
    checks.push(CheckRecord::new(
        "points-roundtrip",
        roundtrip_ok,
        serde_json::Value::Null,
    ));

    Ok(checks)
}

/// Verify any certificate kind; returns the failing check on mismatch.
pub fn verify(cert: &Certificate) -> VerifyResult {
    match cert {
        Certificate::Construction(c) => verify_construction(c),
        Certificate::System(c) => verify_system(c),
        Certificate::Singleton(c) => verify_singleton(c),
    }
}
