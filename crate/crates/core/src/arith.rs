//! Arbitrary-precision exact arithmetic: p-adic valuations, primality,
//! radicals, exact n-th roots and prime search in congruence classes.
//!
//! Everything here is pure and exact; there is no floating-point shadow
//! arithmetic anywhere in the crate.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::Result;

/// A p-adic valuation: an integer, or +infinity for the valuation of zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(i64),
    Infinite,
}

impl Valuation {
    pub fn is_finite(&self) -> bool {
        matches!(self, Valuation::Finite(_))
    }

    /// Finite value, if any.
    pub fn finite(&self) -> Option<i64> {
        match self {
            Valuation::Finite(v) => Some(*v),
            Valuation::Infinite => None,
        }
    }
}

/// v(ab) = v(a) + v(b); infinity absorbs.
impl std::ops::Add for Valuation {
    type Output = Valuation;
    fn add(self, other: Valuation) -> Valuation {
        match (self, other) {
            (Valuation::Finite(a), Valuation::Finite(b)) => Valuation::Finite(a + b),
            _ => Valuation::Infinite,
        }
    }
}

impl std::fmt::Display for Valuation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{v}"),
            Valuation::Infinite => write!(f, "+inf"),
        }
    }
}

/// Exponent of the prime `p` in a nonzero integer.
pub fn int_valuation(n: &BigInt, p: &BigInt) -> i64 {
    debug_assert!(!n.is_zero());
    let mut v = 0i64;
    let mut rem = n.abs();
    loop {
        let (q, r) = rem.div_rem(p);
        if r.is_zero() {
            v += 1;
            rem = q;
        } else {
            return v;
        }
    }
}

/// Exponent of the prime `p` in the rational `q`, with v_p(0) = +infinity.
///
/// `p` is checked for primality; a composite modulus is an error rather
/// than a silent wrong answer.
pub fn valuation(q: &BigRational, p: &BigInt) -> Result<Valuation> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.clone()));
    }
    if q.is_zero() {
        return Ok(Valuation::Infinite);
    }
    Ok(Valuation::Finite(
        int_valuation(q.numer(), p) - int_valuation(q.denom(), p),
    ))
}

const SMALL_PRIMES: [u64; 25] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97,
];

/// Witnesses that decide primality for every n < 2^64.
const U64_MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn miller_rabin_witness(n: &BigUint, base: &BigUint, d: &BigUint, s: u64) -> bool {
    // returns true if `base` proves n composite
    let one = BigUint::one();
    let n_minus_1 = n - &one;
    let mut x = base.modpow(d, n);
    if x == one || x == n_minus_1 {
        return false;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_1 {
            return false;
        }
    }
    true
}

/// Deterministic primality for everything below 2^64 (fixed witness set),
/// strong probable-prime testing with 64 rounds beyond that (error < 2^-128).
/// Negative inputs are never prime.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    let n = n.magnitude();
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &p in SMALL_PRIMES.iter() {
        let p = BigUint::from(p);
        if *n == p {
            return true;
        }
        if (n % &p).is_zero() {
            return false;
        }
    }
    // n is odd and > 97 here
    let n_minus_1 = n - BigUint::one();
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    if n.to_u64().is_some() {
        // fixed witness set, deterministic for the whole u64 range
        return !U64_MR_BASES
            .iter()
            .any(|&b| miller_rabin_witness(n, &BigUint::from(b), &d, s));
    }

    // beyond u64: 64 rounds of strong probable-prime testing with a base
    // stream seeded from the input, so the answer is deterministic per n
    let seed = n.iter_u64_digits().next().unwrap_or(0) ^ 0x9e37_79b9_7f4a_7c15;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let limbs = (n.bits() as usize).div_ceil(64);
    let span = n - BigUint::from(4u32); // bases drawn from [2, n-2]
    for _ in 0..64 {
        let digits: Vec<u64> = (0..limbs).map(|_| rng.gen()).collect();
        let base = BigUint::from(2u32)
            + BigUint::new(
                digits
                    .iter()
                    .flat_map(|d| [*d as u32, (*d >> 32) as u32])
                    .collect(),
            ) % (&span + 1u32);
        if miller_rabin_witness(n, &base, &d, s) {
            return false;
        }
    }
    true
}

/// Full factorization of |n| by trial division up to `trial_bound`, with a
/// primality / perfect-prime-power rescue for the leftover cofactor.
/// Returns None when the cofactor resists (callers fall back or report).
pub fn factorize(n: &BigInt, trial_bound: u64) -> Option<Vec<(BigInt, u32)>> {
    if n.is_zero() {
        return None;
    }
    let mut rem = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    let bound = BigInt::from(trial_bound);
    while &p * &p <= rem && p <= bound {
        if (&rem % &p).is_zero() {
            let mut e = 0u32;
            while (&rem % &p).is_zero() {
                rem /= &p;
                e += 1;
            }
            out.push((p.clone(), e));
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if rem.is_one() {
        return Some(out);
    }
    if &p * &p > rem || is_prime(&rem) {
        out.push((rem, 1));
        return Some(out);
    }
    // composite leftover with no factor below the bound: try pure prime power
    for k in 2..=rem.bits() as u32 {
        if let Some(root) = integer_nth_root(&rem, k) {
            if is_prime(&root) {
                out.push((root, k));
                return Some(out);
            }
        }
    }
    None
}

/// All positive divisors from a factorization, capped (None when the
/// divisor count would exceed `cap`).
pub fn divisors(factors: &[(BigInt, u32)], cap: usize) -> Option<Vec<BigInt>> {
    let mut count: usize = 1;
    for (_, e) in factors {
        count = count.checked_mul(*e as usize + 1)?;
        if count > cap {
            return None;
        }
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(divs.len() * (*e as usize + 1));
        for d in &divs {
            let mut q = d.clone();
            next.push(q.clone());
            for _ in 0..*e {
                q *= p;
                next.push(q.clone());
            }
        }
        divs = next;
    }
    Some(divs)
}

/// Product of the distinct primes dividing |m| (1 for m = ±1).
///
/// Factoring is trial division up to `trial_bound`, plus a primality or
/// perfect-power rescue for the leftover cofactor; anything harder is
/// reported as incomplete rather than guessed.
pub fn radical(m: &BigInt, trial_bound: u64) -> Result<BigInt> {
    if m.is_zero() {
        return Err(Error::InvalidArgument("radical of 0 is undefined".into()));
    }
    match factorize(m, trial_bound) {
        Some(factors) => Ok(factors.iter().fold(BigInt::one(), |acc, (p, _)| acc * p)),
        None => Err(Error::FactorizationIncomplete(m.abs())),
    }
}

/// Exact integer n-th root: Some(r) iff r^n = a. Odd n accepts negative a.
pub fn integer_nth_root(a: &BigInt, n: u32) -> Option<BigInt> {
    assert!(n >= 1, "root index must be positive");
    if n == 1 {
        return Some(a.clone());
    }
    if a.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let root = if a.is_negative() {
        -((-a).nth_root(n))
    } else {
        num_integer::Roots::nth_root(a, n)
    };
    if num_traits::pow::pow(root.clone(), n as usize) == *a {
        Some(root)
    } else {
        None
    }
}

/// Exact rational d-th root: Some(y) iff y^d = q. Both the reduced
/// numerator and denominator must be d-th powers.
pub fn rational_nth_root(q: &BigRational, d: u32) -> Option<BigRational> {
    let num = integer_nth_root(q.numer(), d)?;
    let den = integer_nth_root(q.denom(), d)?;
    Some(BigRational::new(num, den))
}

/// Smallest prime p >= start with p ≡ residue (mod modulus).
pub fn next_prime_in_class(start: &BigInt, residue: &BigInt, modulus: &BigInt) -> Result<BigInt> {
    if !modulus.is_positive() {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if residue.gcd(modulus) != BigInt::one() {
        return Err(Error::InvalidArgument(format!(
            "class {residue} mod {modulus} contains at most one prime: gcd != 1"
        )));
    }
    let mut k = start + (residue - start).mod_floor(modulus);
    while k < BigInt::from(2) {
        k += modulus;
    }
    loop {
        if is_prime(&k) {
            return Ok(k);
        }
        k += modulus;
    }
}

/// All primes below `bound`, by sieve.
pub fn small_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

/// Parse a decimal integer string (optional leading minus).
pub fn parse_integer(s: &str) -> Result<BigInt> {
    s.trim()
        .parse::<BigInt>()
        .map_err(|e| Error::Parse(format!("bad integer {s:?}: {e}")))
}

/// Parse "n" or "n/d" into a reduced rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(parse_integer(s)?)),
        Some((num, den)) => {
            let num = parse_integer(num)?;
            let den = parse_integer(den)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
    }
}

/// Render a rational as "n" or "n/d" (always reduced, denominator positive).
pub fn format_rational(q: &BigRational) -> String {
    q.to_string()
}

/// Convenience constructors used throughout the crate and its tests.
pub fn big(n: i64) -> BigInt {
    BigInt::from(n)
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn valuation_examples() {
        assert_eq!(valuation(&rat(12), &big(2)).unwrap(), Valuation::Finite(2));
        assert_eq!(
            valuation(&ratio(5, 8), &big(2)).unwrap(),
            Valuation::Finite(-3)
        );
        assert_eq!(valuation(&rat(0), &big(7)).unwrap(), Valuation::Infinite);
        assert!(matches!(
            valuation(&rat(3), &big(6)),
            Err(Error::NotPrime(_))
        ));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&big(29)));
        assert!(!is_prime(&big(1)));
        assert!(!is_prime(&big(0)));
        assert!(!is_prime(&big(-7)));
        // Carmichael number: fools Fermat, not Miller-Rabin
        assert!(!is_prime(&big(561)));
        // a 2^89-1 Mersenne prime, well beyond u64
        let m89 = (BigInt::one() << 89) - 1;
        assert!(is_prime(&m89));
        assert!(!is_prime(&(m89 + 2)));
    }

    #[test]
    fn primality_agrees_with_trial_division_up_to_1e6() {
        let bound = 1_000_000u64;
        let primes = small_primes(bound);
        let mut is_p = vec![false; bound as usize + 1];
        for &p in &primes {
            is_p[p as usize] = true;
        }
        for n in 0..=bound {
            assert_eq!(
                is_prime(&BigInt::from(n)),
                is_p[n as usize],
                "disagreement at {n}"
            );
        }
    }

    #[test]
    fn radical_examples() {
        assert_eq!(radical(&big(-48), 1000).unwrap(), big(6));
        assert_eq!(radical(&big(-1), 1000).unwrap(), big(1));
        assert_eq!(radical(&big(30), 1000).unwrap(), big(30));
        assert!(radical(&big(0), 1000).is_err());
    }

    #[test]
    fn radical_rescues_large_prime_and_power_cofactors() {
        let p = big(1_000_003);
        assert_eq!(radical(&(&p * &p * 4), 1000).unwrap(), 2 * &p);
        let m = BigInt::from(1_000_033u64).pow(3);
        assert_eq!(radical(&m, 1000).unwrap(), big(1_000_033));
    }

    /// Oracle: factor by full trial division (test-only, small inputs).
    fn radical_by_trial_division(m: &BigInt) -> BigInt {
        let mut rem = m.abs();
        let mut rad = BigInt::one();
        let mut p = BigInt::from(2);
        while rem > BigInt::one() {
            if (&rem % &p).is_zero() {
                rad *= &p;
                while (&rem % &p).is_zero() {
                    rem /= &p;
                }
            }
            p += 1u32;
        }
        rad
    }

    #[test]
    fn radical_invariants_on_random_inputs() {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let m = big(rng.gen_range(1..=2_000_000i64)) * if rng.gen() { 1 } else { -1 };
            let rad = radical(&m, 1_000_000).unwrap();
            assert_eq!(rad, radical_by_trial_division(&m));
            // rad^2 divides m^2, and rad is squarefree
            assert!(((&m * &m) % (&rad * &rad)).is_zero());
            for &p in &small_primes(1500) {
                assert!(
                    !(&rad % BigInt::from(p * p)).is_zero(),
                    "{rad} not squarefree"
                );
            }
        }
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(integer_nth_root(&big(512), 3), Some(big(8)));
        assert_eq!(integer_nth_root(&big(-32), 5), Some(big(-2)));
        assert_eq!(integer_nth_root(&big(10), 2), None);
        assert_eq!(integer_nth_root(&big(-4), 2), None);
        assert_eq!(integer_nth_root(&big(0), 7), Some(big(0)));
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_nth_root(&ratio(8, 27), 3), Some(ratio(2, 3)));
        let q = BigRational::from_integer(BigInt::from(2).pow(39));
        assert_eq!(rational_nth_root(&q, 39), Some(rat(2)));
        assert_eq!(rational_nth_root(&ratio(4, 9), 3), None);
    }

    #[test]
    fn next_prime_in_class_examples() {
        assert_eq!(
            next_prime_in_class(&big(2), &big(5), &big(12)).unwrap(),
            big(5)
        );
        assert_eq!(
            next_prime_in_class(&big(6), &big(5), &big(12)).unwrap(),
            big(17)
        );
        assert_eq!(
            next_prime_in_class(&big(30), &big(5), &big(12)).unwrap(),
            big(41)
        );
        assert!(next_prime_in_class(&big(2), &big(3), &big(12)).is_err());
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let q = parse_rational(s).unwrap();
            assert_eq!(format_rational(&q), s);
        }
        assert_eq!(format_rational(&parse_rational("4/6").unwrap()), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    proptest! {
        #[test]
        fn valuation_is_additive(an in -2000i64..2000, ad in 1i64..60, bn in -2000i64..2000, bd in 1i64..60, pi in 0usize..4) {
            prop_assume!(an != 0 && bn != 0);
            let p = big([2, 3, 5, 7][pi]);
            let a = ratio(an, ad);
            let b = ratio(bn, bd);
            let lhs = valuation(&(&a * &b), &p).unwrap();
            let rhs = valuation(&a, &p).unwrap() + valuation(&b, &p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn dth_root_is_exact_when_present(n in -50i64..50, d in 1i64..20, e in 2u32..6) {
            prop_assume!(n != 0);
            let q = ratio(n, d);
            let power = num_traits::pow::pow(q.clone(), e as usize);
            let back = rational_nth_root(&power, e);
            if n > 0 || e % 2 == 1 {
                prop_assert_eq!(back.clone(), Some(q));
            }
            if let Some(y) = back {
                prop_assert_eq!(num_traits::pow::pow(y, e as usize), power);
            }
        }
    }
}
