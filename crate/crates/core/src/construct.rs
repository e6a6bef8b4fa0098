//! The construction pipeline: validate the prescribed point set, build an
//! irreducible interpolant through the d-th powers, select a prime from
//! the 5 mod 12 class satisfying the valuation and separability side
//! conditions, and assemble the superelliptic curve polynomial
//! f = g((h-1)g + 1) together with its certificate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith;
use crate::certificate::{
    derive_construction_checks, derive_singleton_checks_impl, CoordinateChangeRecord,
    CurveCertificate, ParamsRecord, ParsedConstruction, SingletonCertificate, SingletonModel,
    SpecializationRecord, TrustedFact,
};
use crate::config::EffortConfig;
use crate::error::{Clause, Error};
use crate::newton;
use crate::poly::{
    certify_irreducible, IrreducibilityCertificate, IrreducibilityVerdict, Polynomial,
};
use crate::projective::{self, ProjectivePoint};
use crate::Result;

/// A validated prescribed point set: integral coordinates, none zero,
/// pairwise distinct x-coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcceptableSet {
    points: Vec<(BigInt, BigInt)>,
}

impl AcceptableSet {
    /// Validate a raw point list: deduplicate exact repeats, then check
    /// the three acceptability clauses in definitional order, reporting
    /// the violated clause and its offending points.
    pub fn validate(raw: &[(BigRational, BigRational)]) -> Result<AcceptableSet> {
        if raw.is_empty() {
            return Err(Error::InvalidArgument(
                "the prescribed point set must be nonempty".into(),
            ));
        }
        let mut deduped: Vec<&(BigRational, BigRational)> = Vec::new();
        for p in raw {
            if !deduped.contains(&p) {
                deduped.push(p);
            }
        }

        // (i) distinct points must have distinct x-coordinates
        let mut offenders = Vec::new();
        for (i, p) in deduped.iter().enumerate() {
            for q in deduped.iter().skip(i + 1) {
                if p.0 == q.0 {
                    offenders.push(format_point(p));
                    offenders.push(format_point(q));
                }
            }
        }
        if !offenders.is_empty() {
            return Err(Error::NotAcceptable {
                clause: Clause::DistinctAbscissas,
                offenders,
            });
        }

        // (ii) no zero coordinates
        let offenders: Vec<String> = deduped
            .iter()
            .filter(|(a, b)| a.is_zero() || b.is_zero())
            .map(|p| format_point(p))
            .collect();
        if !offenders.is_empty() {
            return Err(Error::NotAcceptable {
                clause: Clause::NonzeroCoordinates,
                offenders,
            });
        }

        // (iii) integral coordinates
        let offenders: Vec<String> = deduped
            .iter()
            .filter(|(a, b)| !a.is_integer() || !b.is_integer())
            .map(|p| format_point(p))
            .collect();
        if !offenders.is_empty() {
            return Err(Error::NotAcceptable {
                clause: Clause::IntegralCoordinates,
                offenders,
            });
        }

        Ok(AcceptableSet {
            points: deduped
                .into_iter()
                .map(|(a, b)| (a.to_integer(), b.to_integer()))
                .collect(),
        })
    }

    pub fn from_integer_pairs(pairs: &[(i64, i64)]) -> Result<AcceptableSet> {
        let raw: Vec<(BigRational, BigRational)> = pairs
            .iter()
            .map(|&(a, b)| (arith::rat(a), arith::rat(b)))
            .collect();
        AcceptableSet::validate(&raw)
    }

    pub fn points(&self) -> &[(BigInt, BigInt)] {
        &self.points
    }

    pub fn r(&self) -> usize {
        self.points.len()
    }
}

fn format_point((a, b): &(BigRational, BigRational)) -> String {
    format!(
        "({}, {})",
        arith::format_rational(a),
        arith::format_rational(b)
    )
}

/// Derived construction parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionParams {
    /// number of prescribed points
    pub r: usize,
    /// curve exponent and degree, d = 18r + 3
    pub d: u64,
    /// interpolant degree, n = 6r + 3
    pub n: usize,
    /// product of pairwise x-coordinate differences
    pub m: BigInt,
    /// radical of m (squarefree kernel)
    pub radical: BigInt,
}

/// d = 18r + 3, n = 6r + 3, m = prod_{j<k} (a_j - a_k), N = rad(m).
/// A single point routes to the fixed-curve path instead.
pub fn compute_params(set: &AcceptableSet, config: &EffortConfig) -> Result<ConstructionParams> {
    let r = set.r();
    if r == 1 {
        return Err(Error::SingletonCase);
    }
    let mut m = BigInt::one();
    for (j, (aj, _)) in set.points().iter().enumerate() {
        for (ak, _) in set.points().iter().skip(j + 1) {
            m *= aj - ak;
        }
    }
    let radical = arith::radical(&m, config.trial_division_bound)?;
    Ok(ConstructionParams {
        r,
        d: 18 * r as u64 + 3,
        n: 6 * r + 3,
        m,
        radical,
    })
}

/// Lagrange interpolant through (a_i, b_i^d): degree <= r - 1, exact.
pub fn lagrange_interpolant(set: &AcceptableSet, d: u64) -> Polynomial {
    let d32 = u32::try_from(d).expect("desk-scale exponent");
    let mut total = Polynomial::zero();
    for (j, (aj, bj)) in set.points().iter().enumerate() {
        let mut numer = Polynomial::one();
        let mut denom = BigInt::one();
        for (k, (ak, _)) in set.points().iter().enumerate() {
            if k == j {
                continue;
            }
            numer = &numer * &Polynomial::linear_root(&BigRational::from_integer(ak.clone()));
            denom *= aj - ak;
        }
        let weight = BigRational::new(bj.pow(d32), denom);
        total = &total + &numer.scale(&weight);
    }
    total
}

/// b(X) = prod (X - a_i), monic with integer coefficients.
pub fn vanishing_polynomial(set: &AcceptableSet) -> Polynomial {
    let mut b = Polynomial::one();
    for (a, _) in set.points() {
        b = &b * &Polynomial::linear_root(&BigRational::from_integer(a.clone()));
    }
    b
}

/// g(X) = ell * N^6 * prod (X - a_i)^6 + 1. Evaluates to 1 at every a_i;
/// leading coefficient ell * N^6.
pub fn auxiliary_factor(set: &AcceptableSet, radical: &BigInt, ell: &BigInt) -> Polynomial {
    let b6 = vanishing_polynomial(set).pow(6);
    let scale = BigRational::from_integer(ell * radical.pow(6));
    &b6.scale(&scale) + &Polynomial::one()
}

/// f = g * ((h - 1) g + 1): degree d, f(a_i) = b_i^d, leading coefficient
/// of ell-adic valuation exactly 2.
pub fn assemble_curve_polynomial(h: &Polynomial, g: &Polynomial) -> Polynomial {
    let carrier = &(&(h - &Polynomial::one()) * g) + &Polynomial::one();
    g * &carrier
}

/// The chosen interpolant h = L + y * b * (X - s)^{n-r}, with its
/// irreducibility certificate.
#[derive(Debug, Clone)]
pub struct InterpolantChoice {
    pub h: Polynomial,
    pub y: u64,
    pub shift: BigInt,
    pub cofactor: Polynomial,
    pub certificate: IrreducibilityCertificate,
}

/// Smallest s >= 0 with L(s) != 0, so (X - s)^{n-r} is coprime to L.
fn cofactor_shift(l: &Polynomial, r: usize) -> Result<BigInt> {
    for s in 0..=r as i64 {
        if !l.evaluate(&arith::rat(s)).is_zero() {
            return Ok(BigInt::from(s));
        }
    }
    Err(Error::Internal(
        "interpolant vanishes at 0..r, impossible for degree < r".into(),
    ))
}

/// Search specialization values y = start_y, start_y + 1, ... until the
/// interpolant certifies irreducible.
pub fn build_interpolant_from(
    set: &AcceptableSet,
    params: &ConstructionParams,
    config: &EffortConfig,
    start_y: u64,
) -> Result<InterpolantChoice> {
    let l = lagrange_interpolant(set, params.d);
    let b = vanishing_polynomial(set);
    let shift = cofactor_shift(&l, params.r)?;
    let cofactor = Polynomial::linear_root(&BigRational::from_integer(shift.clone()))
        .pow((params.n - params.r) as u32);
    let bc = &b * &cofactor;
    for y in start_y..=config.max_y {
        let h = &l + &bc.scale(&BigRational::from_integer(BigInt::from(y)));
        debug_assert_eq!(h.degree(), Some(params.n));
        debug_assert!(h
            .scale(&BigRational::from_integer(params.m.clone()))
            .has_integer_coefficients());
        let certificate = certify_irreducible(&h, config)?;
        if certificate.verdict == IrreducibilityVerdict::Irreducible {
            return Ok(InterpolantChoice {
                h,
                y,
                shift,
                cofactor,
                certificate,
            });
        }
        log::debug!("specialization y = {y} not certified irreducible, advancing");
    }
    Err(Error::EffortExhausted {
        stage: "interpolant-search",
        detail: format!(
            "no certified-irreducible specialization with y in {start_y}..={}",
            config.max_y
        ),
    })
}

/// First irreducible interpolant (y from 1).
pub fn build_interpolant(
    set: &AcceptableSet,
    params: &ConstructionParams,
    config: &EffortConfig,
) -> Result<InterpolantChoice> {
    build_interpolant_from(set, params, config, 1)
}

/// Finite set B of forbidden complex roots, represented by generator
/// polynomials; avoidance is decided by resultants, never by numeric
/// root finding.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ForbiddenRoots {
    generators: Vec<Polynomial>,
}

impl ForbiddenRoots {
    pub fn new(generators: Vec<Polynomial>) -> Self {
        debug_assert!(generators.iter().all(|g| !g.is_zero()));
        ForbiddenRoots { generators }
    }

    pub fn empty() -> Self {
        ForbiddenRoots::default()
    }

    pub fn push(&mut self, generator: Polynomial) {
        debug_assert!(!generator.is_zero());
        self.generators.push(generator);
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }
}

/// One passing prime with the polynomials built at it.
#[derive(Debug, Clone)]
pub struct PrimeSelection {
    pub ell: BigInt,
    pub g: Polynomial,
    /// (h - 1) g + 1
    pub carrier: Polynomial,
    /// candidates consumed from the 5 mod 12 stream so far (this one included)
    pub candidates_tried: u64,
}

/// Stream of primes ell = 5 mod 12 passing all selection conditions, in
/// increasing order. Resumable: the construction pulls the next passing
/// prime when a later whole-curve condition fails.
pub struct PrimeSearch<'a> {
    h: &'a Polynomial,
    set: &'a AcceptableSet,
    params: &'a ConstructionParams,
    forbidden: &'a ForbiddenRoots,
    config: &'a EffortConfig,
    disc_h: BigRational,
    next_start: BigInt,
    tried: u64,
}

impl<'a> PrimeSearch<'a> {
    pub fn new(
        h: &'a Polynomial,
        set: &'a AcceptableSet,
        params: &'a ConstructionParams,
        forbidden: &'a ForbiddenRoots,
        config: &'a EffortConfig,
    ) -> Result<Self> {
        Ok(PrimeSearch {
            h,
            set,
            params,
            forbidden,
            config,
            disc_h: h.discriminant()?,
            next_start: BigInt::from(2),
            tried: 0,
        })
    }

    pub fn next_selection(&mut self) -> Result<PrimeSelection> {
        loop {
            if self.tried >= self.config.max_ell_candidates {
                return Err(Error::EffortExhausted {
                    stage: "prime-selection",
                    detail: format!(
                        "no prime passed within {} candidates from the 5 mod 12 class",
                        self.config.max_ell_candidates
                    ),
                });
            }
            let ell =
                arith::next_prime_in_class(&self.next_start, &BigInt::from(5), &BigInt::from(12))?;
            self.next_start = &ell + 1;
            self.tried += 1;
            match self.test_candidate(&ell)? {
                Some(selection) => return Ok(selection),
                None => continue,
            }
        }
    }

    fn test_candidate(&self, ell: &BigInt) -> Result<Option<PrimeSelection>> {
        let reject = |reason: &str| {
            log::debug!("rejected ell = {ell}: {reason}");
        };

        // coprime to the radical of m
        if !ell.gcd(&self.params.radical).is_one() {
            reject("divides the radical");
            return Ok(None);
        }
        // h must be ell-integral ...
        if self
            .h
            .coeffs()
            .iter()
            .any(|c| !c.is_zero() && arith::int_valuation(c.denom(), ell) > 0)
        {
            reject("interpolant not ell-integral");
            return Ok(None);
        }
        // ... with unit leading coefficient ...
        let lc = self.h.leading_coefficient().expect("h nonzero");
        if arith::int_valuation(lc.numer(), ell) != 0 {
            reject("ell divides the leading coefficient of h");
            return Ok(None);
        }
        // ... and unit discriminant (h separable mod ell)
        if arith::int_valuation(self.disc_h.numer(), ell)
            - arith::int_valuation(self.disc_h.denom(), ell)
            != 0
        {
            reject("ell divides the discriminant of h");
            return Ok(None);
        }

        let g = auxiliary_factor(self.set, &self.params.radical, ell);
        let carrier = &(&(self.h - &Polynomial::one()) * &g) + &Polynomial::one();

        // separability of the carrier (exact discriminant check)
        if carrier.discriminant()?.is_zero() {
            reject("carrier is inseparable");
            return Ok(None);
        }
        // Newton polygon shapes the proofs rely on
        if !newton::check_two_segment_shape(&carrier, ell, self.params.n, 6 * self.params.r)? {
            reject("carrier polygon is not the two-segment shape");
            return Ok(None);
        }
        if !newton::is_pure_slope_irreducible(&g, ell)? {
            reject("auxiliary polygon is not pure slope");
            return Ok(None);
        }
        // zeros of g stay outside the forbidden set
        for q in self.forbidden.generators() {
            if g.resultant(q)?.is_zero() {
                reject("auxiliary factor meets the forbidden root set");
                return Ok(None);
            }
        }

        Ok(Some(PrimeSelection {
            ell: ell.clone(),
            g,
            carrier,
            candidates_tried: self.tried,
        }))
    }
}

/// Smallest prime from the 5 mod 12 class passing every selection
/// condition for this interpolant.
pub fn choose_prime(
    h: &Polynomial,
    set: &AcceptableSet,
    params: &ConstructionParams,
    forbidden: &ForbiddenRoots,
    config: &EffortConfig,
) -> Result<BigInt> {
    PrimeSearch::new(h, set, params, forbidden, config)?
        .next_selection()
        .map(|s| s.ell)
}

/// Full pipeline: interpolant, prime, assembly, certificate. The whole
/// curve polynomial must also avoid the forbidden roots; a collision
/// retries the next prime, and an exhausted prime stream retries the next
/// specialization value.
pub fn construct_curve(
    set: &AcceptableSet,
    forbidden: &ForbiddenRoots,
    config: &EffortConfig,
) -> Result<CurveCertificate> {
    let params = compute_params(set, config)?;
    let mut start_y = 1u64;
    loop {
        let choice = build_interpolant_from(set, &params, config, start_y)?;
        let mut search = PrimeSearch::new(&choice.h, set, &params, forbidden, config)?;
        loop {
            let selection = match search.next_selection() {
                Ok(s) => s,
                Err(Error::EffortExhausted { .. }) => break,
                Err(e) => return Err(e),
            };
            let f = assemble_curve_polynomial(&choice.h, &selection.g);
            let mut clean = true;
            for q in forbidden.generators() {
                if f.resultant(q)?.is_zero() {
                    clean = false;
                    break;
                }
            }
            if !clean {
                log::debug!(
                    "curve polynomial at ell = {} meets the forbidden root set, next prime",
                    selection.ell
                );
                continue;
            }
            return finalize_certificate(set, &params, &choice, &selection, f, forbidden, config);
        }
        start_y = choice.y + 1;
    }
}

/// Recompute and record every check, then freeze the certificate.
/// A failing check here is an internal inconsistency, not user error.
fn finalize_certificate(
    set: &AcceptableSet,
    params: &ConstructionParams,
    choice: &InterpolantChoice,
    selection: &PrimeSelection,
    f: Polynomial,
    forbidden: &ForbiddenRoots,
    config: &EffortConfig,
) -> Result<CurveCertificate> {
    let genus = (BigInt::from(params.d) - 1u32) * (BigInt::from(params.d) - 2u32) / BigInt::from(2);
    let parsed = ParsedConstruction {
        set: set.clone(),
        params: params.clone(),
        h: choice.h.clone(),
        y: BigInt::from(choice.y),
        shift: choice.shift.clone(),
        ell: selection.ell.clone(),
        g: selection.g.clone(),
        f: f.clone(),
        genus: genus.clone(),
        forbidden: forbidden.clone(),
    };
    let checks = derive_construction_checks(&parsed, &choice.certificate)?;
    if let Some(failing) = checks.iter().find(|c| !c.pass) {
        return Err(Error::Internal(format!(
            "post-construction check {:?} failed",
            failing.name
        )));
    }
    Ok(CurveCertificate {
        config: config.clone(),
        points: set
            .points()
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        params: ParamsRecord {
            r: params.r.to_string(),
            d: params.d.to_string(),
            n: params.n.to_string(),
            m: params.m.to_string(),
            radical: params.radical.to_string(),
        },
        interpolant: choice.h.clone(),
        specialization: SpecializationRecord {
            y: choice.y.to_string(),
            shift: choice.shift.to_string(),
        },
        irreducibility: choice.certificate.clone(),
        ell: selection.ell.to_string(),
        auxiliary: selection.g.clone(),
        curve: f,
        genus: genus.to_string(),
        forbidden: forbidden.generators().to_vec(),
        checks,
    })
}

// ---------------------------------------------------------------------------
// the one-point case: fixed curve plus a coordinate change
// ---------------------------------------------------------------------------

/// Fixed hyperelliptic model for the one-point case: x^5 - 2.
pub fn singleton_model() -> Polynomial {
    Polynomial::from_integers(&[-2, 0, 0, 0, 0, 1])
}

/// Certificate for a single prescribed point: the model y^2 = x^5 - 2 has
/// exactly one rational point (at infinity; rank-0 Jacobian is consumed
/// as a trusted external fact), and a unimodular coordinate change places
/// that point at the prescribed one.
pub fn singleton_certificate(
    point: &ProjectivePoint,
    config: &EffortConfig,
) -> Result<SingletonCertificate> {
    let coords = point.coords();
    let matrix = projective::complete_to_unimodular(coords)?;
    let checks = derive_singleton_checks_impl(coords, &matrix)?;
    if let Some(failing) = checks.iter().find(|c| !c.pass) {
        return Err(Error::Internal(format!(
            "singleton check {:?} failed",
            failing.name
        )));
    }
    Ok(SingletonCertificate {
        config: config.clone(),
        point: coords.iter().map(|c| c.to_string()).collect(),
        model: SingletonModel {
            exponent: "2".to_string(),
            polynomial: singleton_model(),
        },
        genus: "2".to_string(),
        coordinate_change: CoordinateChangeRecord {
            matrix: matrix
                .iter()
                .map(|row| row.iter().map(|c| c.to_string()).collect())
                .collect(),
            scale: "1".to_string(),
        },
        trusted: vec![TrustedFact {
            name: "jacobian-rank-0".to_string(),
            status: "trusted-external".to_string(),
        }],
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{big, rat, ratio};

    #[test]
    fn validate_examples() {
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        assert_eq!(set.r(), 2);

        match AcceptableSet::from_integer_pairs(&[(1, 2), (1, 3)]) {
            Err(Error::NotAcceptable { clause, .. }) => {
                assert_eq!(clause, Clause::DistinctAbscissas)
            }
            other => panic!("expected clause (i) rejection, got {other:?}"),
        }
        match AcceptableSet::from_integer_pairs(&[(1, 2), (2, 0)]) {
            Err(Error::NotAcceptable { clause, .. }) => {
                assert_eq!(clause, Clause::NonzeroCoordinates)
            }
            other => panic!("expected clause (ii) rejection, got {other:?}"),
        }
        match AcceptableSet::validate(&[(ratio(1, 2), rat(1)), (rat(2), rat(3))]) {
            Err(Error::NotAcceptable { clause, .. }) => {
                assert_eq!(clause, Clause::IntegralCoordinates)
            }
            other => panic!("expected clause (iii) rejection, got {other:?}"),
        }

        // exact repeats are deduplicated, not rejected
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (1, 2), (2, 3)]).unwrap();
        assert_eq!(set.r(), 2);

        assert!(AcceptableSet::validate(&[]).is_err());
    }

    #[test]
    fn params_examples() {
        let config = EffortConfig::default();
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        assert_eq!((params.r, params.d, params.n), (2, 39, 15));
        assert_eq!(params.m, big(-1));
        assert_eq!(params.radical, big(1));

        let set = AcceptableSet::from_integer_pairs(&[(1, 1), (3, 1), (7, 1)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        assert_eq!((params.d, params.n), (57, 21));
        assert_eq!(params.m, big(-48));
        assert_eq!(params.radical, big(6));

        let single = AcceptableSet::from_integer_pairs(&[(1, 2)]).unwrap();
        assert!(matches!(
            compute_params(&single, &config),
            Err(Error::SingletonCase)
        ));
    }

    #[test]
    fn lagrange_examples() {
        let set = AcceptableSet::from_integer_pairs(&[(1, 1), (2, 1)]).unwrap();
        assert_eq!(lagrange_interpolant(&set, 39), Polynomial::one());

        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 1)]).unwrap();
        let l = lagrange_interpolant(&set, 39);
        assert!(l.degree() <= Some(1));
        assert_eq!(
            l.evaluate(&rat(1)),
            BigRational::from_integer(big(2).pow(39))
        );
        assert_eq!(l.evaluate(&rat(2)), rat(1));

        let set = AcceptableSet::from_integer_pairs(&[(1, 1), (-1, 1), (2, 1)]).unwrap();
        assert_eq!(lagrange_interpolant(&set, 57), Polynomial::one());
    }

    #[test]
    fn interpolant_contract() {
        let config = EffortConfig::default();
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        let choice = build_interpolant(&set, &params, &config).unwrap();
        assert_eq!(choice.h.degree(), Some(params.n));
        for (a, b) in set.points() {
            assert_eq!(
                choice.h.evaluate_int(a),
                BigRational::from_integer(b.pow(39))
            );
        }
        assert!(choice
            .h
            .scale(&BigRational::from_integer(params.m.clone()))
            .has_integer_coefficients());
        assert_eq!(
            choice.certificate.verdict,
            IrreducibilityVerdict::Irreducible
        );
        crate::poly::revalidate_irreducibility(&choice.h, &choice.certificate).unwrap();
    }

    #[test]
    fn cofactor_shift_avoids_interpolant_roots() {
        // L(0) = 0 here: interpolant through (1,1),(-1,-1) with odd d is X
        let set = AcceptableSet::from_integer_pairs(&[(1, 1), (-1, -1)]).unwrap();
        let l = lagrange_interpolant(&set, 39);
        assert!(l.evaluate(&rat(0)).is_zero());
        let shift = cofactor_shift(&l, set.r()).unwrap();
        assert!(shift > BigInt::zero());
        assert!(!l.evaluate(&BigRational::from_integer(shift)).is_zero());
    }

    #[test]
    fn auxiliary_factor_examples() {
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let g = auxiliary_factor(&set, &big(1), &big(5));
        assert_eq!(g.degree(), Some(12));
        // direct instantiation: 5(X-1)^6(X-2)^6 + 1
        let b = vanishing_polynomial(&set);
        assert_eq!(g, &b.pow(6).scale(&rat(5)) + &Polynomial::one());
        for (a, _) in set.points() {
            assert_eq!(g.evaluate_int(a), rat(1));
        }
        assert_eq!(*g.leading_coefficient().unwrap(), rat(5));

        // radical enters through its sixth power
        let g = auxiliary_factor(&set, &big(6), &big(5));
        assert_eq!(*g.leading_coefficient().unwrap(), rat(5 * 46656));
    }

    #[test]
    fn prime_selection_conditions_hold() {
        let config = EffortConfig::default();
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        let choice = build_interpolant(&set, &params, &config).unwrap();
        let forbidden = ForbiddenRoots::empty();
        let mut search = PrimeSearch::new(&choice.h, &set, &params, &forbidden, &config).unwrap();
        let selection = search.next_selection().unwrap();
        let ell = &selection.ell;
        assert!(arith::is_prime(ell));
        assert_eq!(ell % big(12), big(5));
        assert!(ell.gcd(&params.radical).is_one());
        let disc_h = choice.h.discriminant().unwrap();
        assert_eq!(arith::int_valuation(disc_h.numer(), ell), 0);
        assert!(selection.carrier.is_separable().unwrap());
        assert!(newton::check_two_segment_shape(&selection.carrier, ell, params.n, 12).unwrap());

        // the stream is resumable and strictly increasing
        let second = search.next_selection().unwrap();
        assert!(second.ell > selection.ell);
    }

    #[test]
    fn assembled_curve_contract() {
        let config = EffortConfig::default();
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        let choice = build_interpolant(&set, &params, &config).unwrap();
        let forbidden = ForbiddenRoots::empty();
        let selection = PrimeSearch::new(&choice.h, &set, &params, &forbidden, &config)
            .unwrap()
            .next_selection()
            .unwrap();
        let f = assemble_curve_polynomial(&choice.h, &selection.g);
        assert_eq!(f.degree(), Some(39));
        for (a, b) in set.points() {
            assert_eq!(f.evaluate_int(a), BigRational::from_integer(b.pow(39)));
        }
        let lc = f.leading_coefficient().unwrap();
        assert_eq!(arith::int_valuation(lc.numer(), &selection.ell), 2);
        // coprimality of the two factors is automatic: carrier = 1 mod g
        assert_eq!(
            selection.g.gcd(&selection.carrier).unwrap(),
            Polynomial::one()
        );
    }

    #[test]
    fn effort_zero_exhausts_immediately() {
        let config = EffortConfig {
            max_y: 0,
            ..EffortConfig::default()
        };
        let set = AcceptableSet::from_integer_pairs(&[(1, 2), (2, 3)]).unwrap();
        let params = compute_params(&set, &config).unwrap();
        assert!(matches!(
            build_interpolant(&set, &params, &config),
            Err(Error::EffortExhausted { .. })
        ));
    }

    #[test]
    fn singleton_certificate_shape() {
        let config = EffortConfig::default();
        let point = ProjectivePoint::from_integers(&[3, 5, 1]).unwrap();
        let cert = singleton_certificate(&point, &config).unwrap();
        assert_eq!(cert.model.polynomial, singleton_model());
        assert_eq!(cert.genus, "2");
        assert!(cert
            .trusted
            .iter()
            .any(|t| t.name == "jacobian-rank-0" && t.status == "trusted-external"));
        assert!(cert.checks.iter().all(|c| c.pass));
        // model is separable with the classic discriminant
        assert_eq!(singleton_model().discriminant().unwrap(), rat(50000));
    }
}
