//! Prescribed sets in projective n-space: canonical points, affine chart
//! selection, the coordinate change making every per-coordinate pair set
//! acceptable, and the sequential gluing of one construction per
//! coordinate into a single curve system.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith;
use crate::certificate::{
    derive_system_checks, CoordinateChangeRecord, PairwiseResultant, SystemCertificate,
    SystemComponent,
};
use crate::config::EffortConfig;
use crate::construct::{construct_curve, AcceptableSet, ForbiddenRoots};
use crate::error::Error;
use crate::Result;

/// A point of P^n in canonical primitive form: integer homogeneous
/// coordinates with gcd 1 and positive first nonzero entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectivePoint {
    coords: Vec<BigInt>,
}

impl ProjectivePoint {
    /// Canonicalize rational homogeneous coordinates.
    pub fn new(raw: &[BigRational]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::InvalidArgument("empty coordinate vector".into()));
        }
        let mut denom_lcm = BigInt::one();
        for c in raw {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = raw
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        ProjectivePoint::from_integer_coords(ints)
    }

    pub fn from_integer_coords(ints: Vec<BigInt>) -> Result<Self> {
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if content.is_zero() {
            return Err(Error::InvalidArgument(
                "homogeneous coordinates must not all vanish".into(),
            ));
        }
        let mut coords: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
        if coords
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(|c| c.is_negative())
        {
            for c in coords.iter_mut() {
                *c = -c.clone();
            }
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_integers(coords: &[i64]) -> Result<Self> {
        ProjectivePoint::from_integer_coords(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Embed an affine point as [x_1 : ... : x_n : 1].
    pub fn from_affine(affine: &[BigRational]) -> Result<Self> {
        let mut raw = affine.to_vec();
        raw.push(BigRational::one());
        ProjectivePoint::new(&raw)
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Ambient dimension n (coordinates are n+1 entries).
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl std::fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, " : ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

// ---------------------------------------------------------------------------
// exact integer matrix helpers
// ---------------------------------------------------------------------------

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn int_det(m: &[Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut a: Vec<Vec<BigInt>> = m.to_vec();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

pub fn mat_vec(m: &[Vec<BigInt>], v: &[BigInt]) -> Vec<BigInt> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

fn mat_mul(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let cols = b[0].len();
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| row.iter().zip(b).map(|(x, brow)| x * &brow[j]).sum())
                .collect()
        })
        .collect()
}

/// Adjugate: adj(M) * M = det(M) * I. Used to invert the recorded
/// coordinate change projectively (scale factors cancel).
pub fn adjugate(m: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let n = m.len();
    let cofactor = |i: usize, j: usize| -> BigInt {
        let minor: Vec<Vec<BigInt>> = m
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let det = int_det(&minor);
        if (i + j).is_multiple_of(2) {
            det
        } else {
            -det
        }
    };
    // adj[j][i] = cofactor(i, j)
    (0..n)
        .map(|j| (0..n).map(|i| cofactor(i, j)).collect())
        .collect()
}

/// Extend a primitive integer vector to a square integer matrix with that
/// vector as first column and determinant +-1.
pub fn complete_to_unimodular(p: &[BigInt]) -> Result<Vec<Vec<BigInt>>> {
    if p.is_empty() {
        return Err(Error::InvalidArgument("empty vector".into()));
    }
    let content = p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !content.is_one() {
        return Err(Error::InvalidArgument(
            "vector must be primitive (coordinate gcd 1)".into(),
        ));
    }
    Ok(complete_recursive(p))
}

fn complete_recursive(p: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = p.len();
    if n == 1 {
        return vec![vec![p[0].clone()]]; // +-1 by primitivity
    }
    let tail = &p[1..];
    let e = tail.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if e.is_zero() {
        // p = (+-1, 0, ..., 0): pad with unit rows
        let mut m = vec![vec![BigInt::zero(); n]; n];
        m[0][0] = p[0].clone();
        for (i, row) in m.iter_mut().enumerate().skip(1) {
            row[i] = BigInt::one();
        }
        return m;
    }
    let q: Vec<BigInt> = tail.iter().map(|c| c / &e).collect();
    let v = complete_recursive(&q); // (n-1) x (n-1), first column q
                                    // Bezout: a*p_0 + b*e = 1 (coprime since p is primitive)
    let eg = p[0].extended_gcd(&e);
    debug_assert!(eg.gcd.is_one());
    let (a, b) = (eg.x, eg.y);
    let mut m = vec![vec![BigInt::zero(); n]; n];
    m[0][0] = p[0].clone();
    m[0][1] = -b;
    for i in 1..n {
        m[i][0] = &e * &q[i - 1];
        m[i][1] = &a * &q[i - 1];
        for j in 2..n {
            m[i][j] = v[i - 1][j - 1].clone();
        }
    }
    m
}

// ---------------------------------------------------------------------------
// chart selection
// ---------------------------------------------------------------------------

fn unit_row(len: usize, k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::zero(); len];
    row[k] = BigInt::one();
    row
}

/// Hyperplane candidates: coordinate hyperplanes from the last coordinate
/// down, then nonnegative vectors in boxes of growing max-norm with the
/// first coordinate varying fastest.
fn chart_candidates(len: usize) -> impl Iterator<Item = Vec<BigInt>> {
    let coords = (0..len).rev().map(move |k| unit_row(len, k));
    let boxes = (1u64..).flat_map(move |bound| {
        let base = bound + 1;
        let total = base
            .checked_pow(len as u32)
            .expect("chart box overflow: dimension too large");
        (1..total).filter_map(move |code| {
            let mut digits = Vec::with_capacity(len);
            let mut c = code;
            let mut maxd = 0;
            for _ in 0..len {
                let digit = c % base;
                maxd = maxd.max(digit);
                digits.push(BigInt::from(digit));
                c /= base;
            }
            (maxd == bound).then_some(digits)
        })
    });
    coords.chain(boxes)
}

fn inner<'a>(w: &'a [BigInt], p: &'a [BigInt]) -> BigInt {
    w.iter().zip(p).map(|(a, b)| a * b).sum()
}

fn avoids_all(w: &[BigInt], points: &[ProjectivePoint]) -> bool {
    points.iter().all(|p| !inner(w, p.coords()).is_zero())
}

/// Integer vector w with <w, P> != 0 for every P: coordinate hyperplanes
/// first, then small-coefficient vectors in increasing max-norm. A valid
/// w always exists, so the scan terminates.
pub fn find_affine_chart(points: &[ProjectivePoint]) -> Result<Vec<BigInt>> {
    let len = common_length(points)?;
    Ok(chart_candidates(len)
        .find(|w| avoids_all(w, points))
        .expect("the candidate stream is exhaustive"))
}

fn common_length(points: &[ProjectivePoint]) -> Result<usize> {
    let len = points
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty point set".into()))?
        .coords()
        .len();
    if points.iter().any(|p| p.coords().len() != len) {
        return Err(Error::InvalidArgument(
            "points live in different projective spaces".into(),
        ));
    }
    Ok(len)
}

/// Full dehomogenization data: the hyperplane w plus the n rows whose
/// quotients by <w, P> give the affine coordinates.
struct ChartTransform {
    hyperplane: Vec<BigInt>,
    rows: Vec<Vec<BigInt>>,
}

fn affine_images(
    rows: &[Vec<BigInt>],
    w: &[BigInt],
    points: &[ProjectivePoint],
) -> Vec<Vec<BigRational>> {
    points
        .iter()
        .map(|p| {
            let denom = inner(w, p.coords());
            rows.iter()
                .map(|row| BigRational::new(inner(row, p.coords()), denom.clone()))
                .collect()
        })
        .collect()
}

/// Pick (w, rows): w avoids every point, [rows; w] is invertible, and no
/// point dehomogenizes to the affine origin (which no linear change of
/// coordinates could repair). Unit-row pivots are tried first, seeded
/// random rows only when a coordinate point of the set blocks every
/// pivot.
fn select_chart(
    points: &[ProjectivePoint],
    config: &EffortConfig,
    rng: &mut ChaCha8Rng,
) -> Result<ChartTransform> {
    let len = common_length(points)?;
    let n = len - 1;
    let mut charts_tried = 0u32;
    for w in chart_candidates(len) {
        if !avoids_all(&w, points) {
            continue;
        }
        charts_tried += 1;
        for k in (0..len).rev() {
            if w[k].is_zero() {
                continue;
            }
            let rows: Vec<Vec<BigInt>> = (0..len)
                .filter(|&i| i != k)
                .map(|i| unit_row(len, i))
                .collect();
            let images_nonzero = points
                .iter()
                .all(|p| rows.iter().any(|row| !inner(row, p.coords()).is_zero()));
            if images_nonzero {
                return Ok(ChartTransform {
                    hyperplane: w,
                    rows,
                });
            }
        }
        let mut half: i64 = 1;
        for _ in 0..=config.max_box_doublings {
            for _ in 0..config.matrix_attempts_per_box {
                let rows: Vec<Vec<BigInt>> = (0..n)
                    .map(|_| {
                        (0..len)
                            .map(|_| BigInt::from(rng.gen_range(-half..=half)))
                            .collect()
                    })
                    .collect();
                let mut full = rows.clone();
                full.push(w.clone());
                if int_det(&full).is_zero() {
                    continue;
                }
                let images_nonzero = points
                    .iter()
                    .all(|p| rows.iter().any(|row| !inner(row, p.coords()).is_zero()));
                if images_nonzero {
                    return Ok(ChartTransform {
                        hyperplane: w,
                        rows,
                    });
                }
            }
            half = half.saturating_mul(2);
        }
        if charts_tried >= 64 {
            break;
        }
    }
    Err(Error::EffortExhausted {
        stage: "chart-selection",
        detail: "no chart with nonzero affine images within budget".into(),
    })
}

// ---------------------------------------------------------------------------
// coordinate normalization
// ---------------------------------------------------------------------------

/// Result of the coordinate-change search: integer matrix, the positive
/// scale making every image integral, and the transformed points.
#[derive(Debug, Clone)]
pub struct NormalizedCoordinates {
    pub matrix: Vec<Vec<BigInt>>,
    pub scale: BigInt,
    pub images: Vec<Vec<BigInt>>,
}

/// Conditions the transformed points must satisfy exactly:
/// (a) every coordinate of every image is nonzero,
/// (b) all coordinate values, across all points, are pairwise distinct.
fn conditions_hold(images: &[Vec<BigRational>]) -> bool {
    if images.iter().any(|img| img.iter().any(|c| c.is_zero())) {
        return false;
    }
    let mut values: Vec<&BigRational> = images.iter().flatten().collect();
    let before = values.len();
    values.sort();
    values.dedup();
    values.len() == before
}

/// Find an invertible integer matrix A with conditions (a) and (b) on
/// {A P_j}, then scale to integrality. Identity first, then seeded random
/// matrices in boxes of doubling half-width; the bad locus is a finite
/// union of hyperplanes, so success is expected immediately.
pub fn normalize_coordinates(
    points: &[Vec<BigRational>],
    config: &EffortConfig,
) -> Result<NormalizedCoordinates> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    normalize_coordinates_with_rng(points, config, &mut rng)
}

pub(crate) fn normalize_coordinates_with_rng(
    points: &[Vec<BigRational>],
    config: &EffortConfig,
    rng: &mut ChaCha8Rng,
) -> Result<NormalizedCoordinates> {
    let n = points
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty point set".into()))?
        .len();
    if n == 0 || points.iter().any(|p| p.len() != n) {
        return Err(Error::InvalidArgument(
            "points must share a positive dimension".into(),
        ));
    }
    for (i, p) in points.iter().enumerate() {
        if p.iter().all(|c| c.is_zero()) {
            return Err(Error::InvalidArgument(
                "the zero point cannot be moved off the coordinate hyperplanes".into(),
            ));
        }
        for q in points.iter().skip(i + 1) {
            if p == q {
                return Err(Error::InvalidArgument("points must be distinct".into()));
            }
        }
    }

    let identity: Vec<Vec<BigInt>> = (0..n).map(|i| unit_row(n, i)).collect();
    let try_matrix = |a: &[Vec<BigInt>]| -> Option<NormalizedCoordinates> {
        if int_det(a).is_zero() {
            return None;
        }
        let images: Vec<Vec<BigRational>> = points
            .iter()
            .map(|p| {
                a.iter()
                    .map(|row| {
                        row.iter()
                            .zip(p)
                            .map(|(c, x)| BigRational::from_integer(c.clone()) * x)
                            .fold(BigRational::zero(), |acc, t| acc + t)
                    })
                    .collect()
            })
            .collect();
        if !conditions_hold(&images) {
            return None;
        }
        let mut scale = BigInt::one();
        for img in &images {
            for c in img {
                scale = scale.lcm(c.denom());
            }
        }
        let integral: Vec<Vec<BigInt>> = images
            .iter()
            .map(|img| {
                img.iter()
                    .map(|c| (c * BigRational::from_integer(scale.clone())).to_integer())
                    .collect()
            })
            .collect();
        Some(NormalizedCoordinates {
            matrix: a.to_vec(),
            scale,
            images: integral,
        })
    };

    if let Some(found) = try_matrix(&identity) {
        return Ok(found);
    }
    let mut half: i64 = 1;
    for _ in 0..=config.max_box_doublings {
        for _ in 0..config.matrix_attempts_per_box {
            let a: Vec<Vec<BigInt>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| BigInt::from(rng.gen_range(-half..=half)))
                        .collect()
                })
                .collect();
            if let Some(found) = try_matrix(&a) {
                return Ok(found);
            }
        }
        half = half.saturating_mul(2);
    }
    Err(Error::EffortExhausted {
        stage: "coordinate-change-search",
        detail: format!("no matrix satisfied (a)+(b) up to half-width {half}"),
    })
}

// ---------------------------------------------------------------------------
// gluing
// ---------------------------------------------------------------------------

/// Map a rational affine point found in the transformed coordinates back
/// to the original projective space through the recorded matrix.
pub fn map_back(
    matrix: &[Vec<BigInt>],
    scale: &BigInt,
    affine: &[BigRational],
) -> Result<ProjectivePoint> {
    // (q_1, ..., q_n, scale) is proportional to M * P
    let mut u: Vec<BigRational> = affine.to_vec();
    u.push(BigRational::from_integer(scale.clone()));
    let mut denom_lcm = BigInt::one();
    for c in &u {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let u_int: Vec<BigInt> = u
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    let p = mat_vec(&adjugate(matrix), &u_int);
    ProjectivePoint::from_integer_coords(p)
}

/// Build the glued system for a projective point set: chart, coordinate
/// change, one construction per coordinate j = 2..n against the growing
/// forbidden root set, and the composed certificate.
pub fn glue(points: &[ProjectivePoint], config: &EffortConfig) -> Result<SystemCertificate> {
    let mut deduped: Vec<ProjectivePoint> = Vec::new();
    for p in points {
        if !deduped.contains(p) {
            deduped.push(p.clone());
        }
    }
    let len = common_length(&deduped)?;
    let n = len - 1;
    if n < 2 {
        return Err(Error::InvalidArgument(
            "gluing needs ambient projective dimension at least 2".into(),
        ));
    }
    if deduped.len() < 2 {
        return Err(Error::SingletonCase);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let chart = select_chart(&deduped, config, &mut rng)?;
    let affine = affine_images(&chart.rows, &chart.hyperplane, &deduped);
    let normalized = normalize_coordinates_with_rng(&affine, config, &mut rng)?;

    // one acceptable pair set per coordinate
    let mut sets = Vec::with_capacity(n - 1);
    for j in 2..=n {
        let pairs: Vec<(BigRational, BigRational)> = normalized
            .images
            .iter()
            .map(|q| {
                (
                    BigRational::from_integer(q[0].clone()),
                    BigRational::from_integer(q[j - 1].clone()),
                )
            })
            .collect();
        sets.push(AcceptableSet::validate(&pairs)?);
    }

    // sequential constructions; each later curve must avoid all earlier roots
    let mut forbidden = ForbiddenRoots::empty();
    let mut components = Vec::with_capacity(sets.len());
    for (idx, set) in sets.iter().enumerate() {
        let certificate = construct_curve(set, &forbidden, config)?;
        forbidden.push(certificate.curve.clone());
        components.push(SystemComponent {
            coordinate: idx as u64 + 2,
            certificate,
        });
    }

    // composed projective transform: top rows A * U, last row w
    let mut matrix = mat_mul(&normalized.matrix, &chart.rows);
    matrix.push(chart.hyperplane.clone());

    let mut pairwise = Vec::new();
    for (i, a) in components.iter().enumerate() {
        for b in components.iter().skip(i + 1) {
            let res = a.certificate.curve.resultant(&b.certificate.curve)?;
            if res.is_zero() {
                return Err(Error::Internal(
                    "constructed curves share a root despite forbidden-set retries".into(),
                ));
            }
            pairwise.push(PairwiseResultant {
                first: a.coordinate,
                second: b.coordinate,
                resultant: arith::format_rational(&res),
            });
        }
    }

    let exponent = components[0].certificate.params.d.clone();
    let mut cert = SystemCertificate {
        config: config.clone(),
        dimension: n as u64,
        points: deduped
            .iter()
            .map(|p| p.coords().iter().map(|c| c.to_string()).collect())
            .collect(),
        chart: chart.hyperplane.iter().map(|c| c.to_string()).collect(),
        coordinate_change: CoordinateChangeRecord {
            matrix: matrix
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
            scale: normalized.scale.to_string(),
        },
        exponent,
        components,
        pairwise_resultants: pairwise,
        checks: Vec::new(),
    };
    cert.checks = derive_system_checks(&cert)?;
    if let Some(failing) = cert.checks.iter().find(|c| !c.pass) {
        return Err(Error::Internal(format!(
            "post-gluing check {:?} failed",
            failing.name
        )));
    }
    Ok(cert)
}
