//! p-adic Newton polygons: the lower convex hull of (i, v_p(c_i)) for a
//! polynomial sum c_i X^i, its segment data, and the pure-slope
//! irreducibility criterion.
//!
//! Slope convention: the hull is scanned left to right, so segments of a
//! polynomial with unit constant term and p-divisible top rise to the
//! right; root valuations are the NEGATIVES of the slopes reported here.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::Error;
use crate::poly::Polynomial;
use crate::Result;

/// One maximal straight piece of the lower hull.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segment {
    #[serde(with = "crate::certificate::rat_string")]
    pub slope: BigRational,
    /// horizontal length (always positive)
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct NewtonPolygon {
    prime: BigInt,
    vertices: Vec<(usize, i64)>,
    segments: Vec<Segment>,
}

impl NewtonPolygon {
    pub fn prime(&self) -> &BigInt {
        &self.prime
    }

    /// Hull vertices, strictly increasing in index.
    pub fn vertices(&self) -> &[(usize, i64)] {
        &self.vertices
    }

    /// Segments left to right; slopes strictly increasing.
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }
}

/// Lower convex hull of {(i, v_p(c_i)) : c_i != 0}, by a monotone-chain
/// scan. Zero coefficients contribute no point.
pub fn newton_polygon(f: &Polynomial, p: &BigInt) -> Result<NewtonPolygon> {
    if f.is_zero() {
        return Err(Error::InvalidArgument(
            "Newton polygon of the zero polynomial is undefined".into(),
        ));
    }
    if !arith::is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    let deg = f.degree().unwrap();
    let mut points: Vec<(usize, i64)> = Vec::new();
    for i in 0..=deg {
        let c = f.coeff(i);
        if c.is_zero() {
            continue;
        }
        let v = arith::int_valuation(c.numer(), p) - arith::int_valuation(c.denom(), p);
        points.push((i, v));
    }

    // monotone chain, keeping only the lower boundary's true vertices
    let mut hull: Vec<(usize, i64)> = Vec::new();
    for pt in points {
        while hull.len() >= 2 {
            let o = hull[hull.len() - 2];
            let a = hull[hull.len() - 1];
            let cross = (a.0 as i128 - o.0 as i128) * (pt.1 as i128 - o.1 as i128)
                - (a.1 as i128 - o.1 as i128) * (pt.0 as i128 - o.0 as i128);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    let segments = hull
        .windows(2)
        .map(|w| Segment {
            slope: BigRational::new(
                BigInt::from(w[1].1 - w[0].1),
                BigInt::from((w[1].0 - w[0].0) as i64),
            ),
            length: w[1].0 - w[0].0,
        })
        .collect();

    Ok(NewtonPolygon {
        prime: p.clone(),
        vertices: hull,
        segments,
    })
}

/// True iff the polygon is a single segment whose slope, in lowest terms
/// a/b, has b = deg(f). Such a polynomial is irreducible over the p-adic
/// field and hence over the rationals.
pub fn is_pure_slope_irreducible(f: &Polynomial, p: &BigInt) -> Result<bool> {
    let polygon = newton_polygon(f, p)?;
    if polygon.segments.len() != 1 {
        return Ok(false);
    }
    let deg = f.degree().unwrap();
    Ok(*polygon.segments[0].slope.denom() == BigInt::from(deg as i64))
}

/// True iff the polygon at p is exactly: a slope-0 segment of length n,
/// then a slope-1/sixr segment of length sixr.
pub fn check_two_segment_shape(f: &Polynomial, p: &BigInt, n: usize, sixr: usize) -> Result<bool> {
    if sixr == 0 {
        return Err(Error::InvalidArgument(
            "two-segment shape needs a positive second length".into(),
        ));
    }
    let deg = f
        .degree()
        .ok_or_else(|| Error::InvalidArgument("zero polynomial".into()))?;
    if deg != n + sixr {
        return Err(Error::InvalidArgument(format!(
            "degree {deg} does not match n + sixr = {}",
            n + sixr
        )));
    }
    if n == 0 {
        // a zero-length first segment cannot occur
        return Ok(false);
    }
    let polygon = newton_polygon(f, p)?;
    let expected = [
        Segment {
            slope: BigRational::from_integer(BigInt::from(0)),
            length: n,
        },
        Segment {
            slope: BigRational::new(BigInt::from(1), BigInt::from(sixr as i64)),
            length: sixr,
        },
    ];
    Ok(polygon.segments() == expected)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{big, rat, ratio};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn seg(slope: BigRational, length: usize) -> Segment {
        Segment { slope, length }
    }

    #[test]
    fn polygon_examples() {
        // 5X^2 + X + 1 at p=5: hull of (0,0),(1,0),(2,1)
        let f = Polynomial::from_integers(&[1, 1, 5]);
        let polygon = newton_polygon(&f, &big(5)).unwrap();
        assert_eq!(polygon.vertices(), &[(0, 0), (1, 0), (2, 1)]);
        assert_eq!(polygon.segments(), &[seg(rat(0), 1), seg(rat(1), 1)]);

        // X^2 + 2 at p=2: one segment from (0,1) to (2,0)
        let f = Polynomial::from_integers(&[2, 0, 1]);
        let polygon = newton_polygon(&f, &big(2)).unwrap();
        assert_eq!(polygon.segments(), &[seg(ratio(-1, 2), 2)]);

        // X + 3 at p=5: slope 0
        let f = Polynomial::from_integers(&[3, 1]);
        let polygon = newton_polygon(&f, &big(5)).unwrap();
        assert_eq!(polygon.segments(), &[seg(rat(0), 1)]);

        assert!(newton_polygon(&Polynomial::zero(), &big(5)).is_err());
        assert!(newton_polygon(&f, &big(6)).is_err());
    }

    #[test]
    fn denominators_contribute_negative_valuations() {
        // X^2 + 1/2 at p=2: hull of (0,-1),(2,0); still pure of slope 1/2
        let f = Polynomial::new(vec![ratio(1, 2), rat(0), rat(1)]);
        let polygon = newton_polygon(&f, &big(2)).unwrap();
        assert_eq!(polygon.vertices(), &[(0, -1), (2, 0)]);
        assert_eq!(polygon.segments(), &[seg(ratio(1, 2), 2)]);
        assert!(is_pure_slope_irreducible(&f, &big(2)).unwrap());
    }

    #[test]
    fn polygon_spans_from_lowest_nonzero_coefficient() {
        // X^3 + 2X: points at (1,1),(3,0)
        let f = Polynomial::from_integers(&[0, 2, 0, 1]);
        let polygon = newton_polygon(&f, &big(2)).unwrap();
        assert_eq!(polygon.vertices(), &[(1, 1), (3, 0)]);
        let total: usize = polygon.segments().iter().map(|s| s.length).sum();
        assert_eq!(total, 3 - 1);
    }

    #[test]
    fn pure_slope_examples() {
        let p2 = big(2);
        assert!(is_pure_slope_irreducible(&Polynomial::from_integers(&[-2, 0, 1]), &p2).unwrap());
        assert!(!is_pure_slope_irreducible(&Polynomial::from_integers(&[-4, 0, 1]), &p2).unwrap());

        // 5*(X-1)^6*(X-2)^6 + 1 at p=5: polygon (0,0) -> (12,1)
        let b = &Polynomial::from_integers(&[-1, 1]) * &Polynomial::from_integers(&[-2, 1]);
        let g = &b.pow(6).scale(&rat(5)) + &Polynomial::one();
        assert_eq!(g.degree(), Some(12));
        assert!(is_pure_slope_irreducible(&g, &big(5)).unwrap());
        let polygon = newton_polygon(&g, &big(5)).unwrap();
        assert_eq!(polygon.segments(), &[seg(ratio(1, 12), 12)]);
    }

    #[test]
    fn two_segment_shape_examples() {
        // X^2 + 3X + 3 at p=3 with (n, sixr) = (0, 2): Eisenstein, not two-segment
        let f = Polynomial::from_integers(&[3, 3, 1]);
        assert!(!check_two_segment_shape(&f, &big(3), 0, 2).unwrap());

        // sixr must be positive
        let linear = Polynomial::from_integers(&[1, 1]);
        assert!(check_two_segment_shape(&linear, &big(3), 1, 0).is_err());

        // degree mismatch
        assert!(check_two_segment_shape(&f, &big(3), 3, 2).is_err());

        // genuine two-segment witness: (X+1) * (3X^2+1) has v_3 = 0,0 then 1
        // at indices 0,1 then top; shape (n, sixr) = (1, 2)
        let g = &linear * &Polynomial::from_integers(&[1, 0, 3]);
        assert!(check_two_segment_shape(&g, &big(3), 1, 2).unwrap());
        assert!(!check_two_segment_shape(&g, &big(5), 1, 2).unwrap());
    }

    fn random_poly_with_unit_ends(rng: &mut ChaCha8Rng, p: i64, deg: usize) -> Polynomial {
        // nonzero constant term and random p-valuations in the middle
        let mut coeffs = Vec::with_capacity(deg + 1);
        for i in 0..=deg {
            let unit = rng.gen_range(1..p);
            let v = if i == 0 || i == deg {
                rng.gen_range(0..3)
            } else if rng.gen_bool(0.2) {
                // drop the coefficient entirely
                coeffs.push(rat(0));
                continue;
            } else {
                rng.gen_range(0..4)
            };
            coeffs.push(rat(unit * p.pow(v)));
        }
        Polynomial::new(coeffs)
    }

    #[test]
    fn slope_length_sum_telescopes() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = [2i64, 3, 5][rng.gen_range(0..3)];
            let deg = rng.gen_range(1..8);
            let f = random_poly_with_unit_ends(&mut rng, p, deg);
            let polygon = newton_polygon(&f, &big(p)).unwrap();
            let total: BigRational = polygon
                .segments()
                .iter()
                .map(|s| &s.slope * rat(s.length as i64))
                .fold(BigRational::zero(), |acc, x| acc + x);
            let first = polygon.vertices().first().unwrap();
            let last = polygon.vertices().last().unwrap();
            assert_eq!(total, rat(last.1 - first.1));
        }
    }

    #[test]
    fn reversed_coefficients_flip_slopes() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let p = [2i64, 3, 5][rng.gen_range(0..3)];
            let deg = rng.gen_range(1..8);
            let f = random_poly_with_unit_ends(&mut rng, p, deg);
            if f.coeff(0).is_zero() {
                continue;
            }
            let reversed = Polynomial::new((0..=deg).rev().map(|i| f.coeff(i)).collect());
            let fwd = newton_polygon(&f, &big(p)).unwrap();
            let bwd = newton_polygon(&reversed, &big(p)).unwrap();
            let flipped: Vec<Segment> = fwd
                .segments()
                .iter()
                .rev()
                .map(|s| seg(-s.slope.clone(), s.length))
                .collect();
            assert_eq!(bwd.segments(), flipped.as_slice());
        }
    }

    #[test]
    fn product_polygon_concatenates_eisenstein_and_unit_slope() {
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for _ in 0..100 {
            let p = [2i64, 3, 5][rng.gen_range(0..3)];
            let k = rng.gen_range(2..6usize);
            let m = rng.gen_range(1..5usize);
            // Eisenstein shape: v(c_0)=1, middle v >= 1, v(lc)=0
            let mut e = vec![rat(p * rng.gen_range(1..p))];
            for _ in 1..k {
                e.push(rat(p * rng.gen_range(1..p) * [1, p][rng.gen_range(0..2)]));
            }
            e.push(rat(rng.gen_range(1..p)));
            let e = Polynomial::new(e);
            // unit slope: v(c_i) = i exactly
            let u = Polynomial::new(
                (0..=m)
                    .map(|i| rat(rng.gen_range(1..p) * p.pow(i as u32)))
                    .collect(),
            );
            let product = &e * &u;
            let polygon = newton_polygon(&product, &big(p)).unwrap();
            let expected = [seg(ratio(-1, k as i64), k), seg(rat(1), m)];
            assert_eq!(polygon.segments(), expected.as_slice());
        }
    }
}
