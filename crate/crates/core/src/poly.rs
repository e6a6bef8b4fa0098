//! Dense univariate polynomials over the rationals, their reductions to
//! prime fields, and exact algebra on them: gcd, resultant and
//! discriminant through the subresultant pseudo-remainder sequence, plus
//! irreducibility certification.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{self, format_rational, parse_rational};
use crate::config::EffortConfig;
use crate::error::Error;
use crate::Result;

const KARATSUBA_CUTOFF: usize = 32;

/// Dense polynomial with rational coefficients, constant term first.
/// Canonical: the highest stored coefficient is nonzero; the zero
/// polynomial stores nothing and has degree "minus infinity" (None).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<BigRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(BigRational::one())
    }

    pub fn x() -> Self {
        Polynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    pub fn constant(c: BigRational) -> Self {
        Polynomial::new(vec![c])
    }

    pub fn monomial(c: BigRational, power: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); power + 1];
        coeffs[power] = c;
        Polynomial::new(coeffs)
    }

    /// X - root
    pub fn linear_root(root: &BigRational) -> Self {
        Polynomial::new(vec![-root.clone(), BigRational::one()])
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Polynomial::new(coeffs.iter().map(|&c| arith::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None encodes deg 0-polynomial = minus infinity.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Coefficient of X^i (zero beyond the stored range).
    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn leading_coefficient(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coefficient().is_some_and(|c| c.is_one())
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Exact value f(x) by Horner evaluation.
    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation at an integer, staying in integer arithmetic
    /// when the coefficients are integral.
    pub fn evaluate_int(&self, x: &BigInt) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.clone()))
    }

    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// f ∘ g, by Horner in the polynomial ring.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigRational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => Polynomial::zero(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Smallest positive integer s with s·f ∈ Z[X], together with the
    /// integer coefficients of s·f.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let mut denom_lcm = BigInt::one();
        for c in &self.coeffs {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&denom_lcm / c.denom()))
            .collect();
        (coeffs, denom_lcm)
    }

    /// Monic gcd over the rationals, via the subresultant sequence on
    /// primitive integer forms.
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::InvalidArgument("gcd(0, 0) is undefined".into()));
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        if self.degree() == Some(0) || other.degree() == Some(0) {
            return Ok(Polynomial::one());
        }
        let (a, _) = self.integer_form();
        let (b, _) = other.integer_form();
        let g = int_subresultant_gcd(&iprimitive(a), &iprimitive(b));
        Ok(Polynomial::new(g.into_iter().map(BigRational::from_integer).collect()).monic())
    }

    /// Resultant via the subresultant pseudo-remainder sequence; zero iff
    /// the two polynomials share a complex root.
    pub fn resultant(&self, other: &Polynomial) -> Result<BigRational> {
        if self.is_zero() || other.is_zero() {
            return Err(Error::InvalidArgument(
                "resultant requires nonzero polynomials".into(),
            ));
        }
        let (fa, alpha) = self.integer_form();
        let (gb, beta) = other.integer_form();
        let df = self.degree().unwrap() as u32;
        let dg = other.degree().unwrap() as u32;
        let res = int_resultant(&fa, &gb);
        // Res(F/α, G/β) = Res(F, G) / (α^{deg g} β^{deg f})
        let denom = alpha.pow(dg) * beta.pow(df);
        Ok(BigRational::new(res, denom))
    }

    /// disc(f) = (-1)^{d(d-1)/2} Res(f, f') / lc(f); zero iff f is
    /// inseparable.
    pub fn discriminant(&self) -> Result<BigRational> {
        let d = match self.degree() {
            Some(d) if d >= 1 => d,
            _ => {
                return Err(Error::InvalidArgument(
                    "discriminant requires degree >= 1".into(),
                ))
            }
        };
        if d == 1 {
            return Ok(BigRational::one());
        }
        let res = self.resultant(&self.derivative())?;
        let sign = if (d * (d - 1) / 2) % 2 == 0 { 1 } else { -1 };
        Ok(res / self.leading_coefficient().unwrap()
            * BigRational::from_integer(BigInt::from(sign)))
    }

    pub fn is_separable(&self) -> Result<bool> {
        Ok(!self.discriminant()?.is_zero())
    }

    /// Coefficientwise reduction modulo a prime. Fails (bad reduction)
    /// when p divides a coefficient denominator — the caller treats that
    /// prime as excluded.
    pub fn reduce_mod(&self, p: &BigInt) -> Result<ModPoly> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p.clone()));
        }
        let pu = p.magnitude();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if (c.denom() % p).is_zero() {
                return Err(Error::BadReduction {
                    prime: p.clone(),
                    detail: format!("denominator of {} vanishes mod p", format_rational(c)),
                });
            }
            let num = c.numer().mod_floor(p).magnitude() % pu;
            let den_inv = mod_inverse(&BigInt::from(c.denom().mod_floor(p).magnitude().clone()), p)
                .expect("denominator is a unit mod p");
            coeffs.push((num * den_inv.magnitude()) % pu);
        }
        Ok(ModPoly::from_residues(coeffs, pu.clone()))
    }
}

impl std::fmt::Display for Polynomial {
    /// Canonical text form "c0 + c1*X + ... + cd*X^d".
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{}", format_rational(c))?,
                1 => write!(f, "{}*X", format_rational(c))?,
                _ => write!(f, "{}*X^{}", format_rational(c), i)?,
            }
        }
        Ok(())
    }
}

/// Certificates serialize polynomials as the JSON array of coefficient
/// strings, constant term first.
impl Serialize for Polynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let strings: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        strings.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let strings = Vec::<String>::deserialize(deserializer)?;
        let coeffs = strings
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl std::ops::Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = rhs.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Polynomial::new(out)
    }
}

impl std::ops::Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl std::ops::Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        Polynomial::new(mul_coeffs(&self.coeffs, &rhs.coeffs))
    }
}

/// Schoolbook product with a Karatsuba switch above the cutoff degree;
/// desk-scale degrees rarely reach it but the switch is cheap.
fn mul_coeffs(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    if a.len().min(b.len()) <= KARATSUBA_CUTOFF {
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                out[i + j] += ai * bj;
            }
        }
        return out;
    }
    // Karatsuba: split at half the longer operand
    let m = a.len().max(b.len()) / 2;
    let (a0, a1) = a.split_at(a.len().min(m));
    let (b0, b1) = b.split_at(b.len().min(m));
    let z0 = mul_coeffs(a0, b0);
    let z2 = mul_coeffs(a1, b1);
    let asum = add_coeffs(a0, a1);
    let bsum = add_coeffs(b0, b1);
    let mut z1 = mul_coeffs(&asum, &bsum);
    sub_assign_coeffs(&mut z1, &z0);
    sub_assign_coeffs(&mut z1, &z2);
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, c) in z0.into_iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in z1.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + m] += c;
        }
    }
    for (i, c) in z2.into_iter().enumerate() {
        if !c.is_zero() {
            out[i + 2 * m] += c;
        }
    }
    out
}

fn add_coeffs(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => BigRational::zero(),
        })
        .collect()
}

fn sub_assign_coeffs(a: &mut Vec<BigRational>, b: &[BigRational]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigRational::zero());
    }
    for (i, c) in b.iter().enumerate() {
        a[i] -= c;
    }
}

// ---------------------------------------------------------------------------
// integer-polynomial layer (dense Vec<BigInt>, constant term first)
// ---------------------------------------------------------------------------

fn itrim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn ideg(v: &[BigInt]) -> Option<usize> {
    v.len().checked_sub(1)
}

fn icontent(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn iprimitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let c = icontent(&v);
    if c.is_zero() || c.is_one() {
        return v;
    }
    v.into_iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder: rem(lc(b)^{deg a - deg b + 1} · a, b), computed by
/// synthetic division with on-the-fly scaling.
fn ipseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let da = ideg(a).expect("a nonzero");
    let db = ideg(b).expect("b nonzero");
    assert!(da >= db && db >= 1);
    let d = b.last().unwrap().clone();
    let mut r: Vec<BigInt> = a.to_vec();
    let mut scalings_left = (da - db + 1) as i64;
    while let Some(dr) = ideg(&r) {
        if dr < db {
            break;
        }
        let k = dr - db;
        let lr = r.last().unwrap().clone();
        // r = d*r - lr * X^k * b
        for c in r.iter_mut() {
            *c *= &d;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + k] -= &lr * bc;
        }
        r = itrim(r);
        scalings_left -= 1;
    }
    for _ in 0..scalings_left {
        for c in r.iter_mut() {
            *c *= &d;
        }
    }
    itrim(r)
}

fn ipow(base: &BigInt, e: usize) -> BigInt {
    num_traits::pow::pow(base.clone(), e)
}

/// Resultant of two nonzero integer polynomials by the subresultant PRS
/// (Cohen, Algorithm 3.3.7): no intermediate coefficient blowup, exact
/// divisions throughout.
fn int_resultant(a_in: &[BigInt], b_in: &[BigInt]) -> BigInt {
    let mut a = itrim(a_in.to_vec());
    let mut b = itrim(b_in.to_vec());
    assert!(
        !a.is_empty() && !b.is_empty(),
        "resultant of zero polynomial"
    );
    let mut sign = 1i32;
    if ideg(&a) < ideg(&b) {
        if ideg(&a).unwrap() % 2 == 1 && ideg(&b).unwrap() % 2 == 1 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut b);
    }
    if ideg(&b) == Some(0) {
        // Res(A, c) = c^{deg A}
        let v = ipow(&b[0], ideg(&a).unwrap());
        return if sign < 0 { -v } else { v };
    }
    let ca = icontent(&a);
    let cb = icontent(&b);
    let a: Vec<BigInt> = a.into_iter().map(|c| c / &ca).collect();
    let mut b: Vec<BigInt> = b.into_iter().map(|c| c / &cb).collect();
    let mut a = a;
    let mut t = ipow(&ca, ideg(&b).unwrap()) * ipow(&cb, ideg(&a).unwrap());
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let da = ideg(&a).unwrap();
        let db = ideg(&b).unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = ipseudo_rem(&a, &b);
        a = b;
        if r.is_empty() {
            // positive-degree common factor
            return BigInt::zero();
        }
        let divisor = &g * ipow(&h, delta);
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            ipow(&g, delta) / ipow(&h, delta - 1)
        };
        if ideg(&b) == Some(0) {
            break;
        }
    }
    let da = ideg(&a).unwrap();
    let hh = ipow(&b[0], da) / ipow(&h, da - 1);
    t *= hh;
    if sign < 0 {
        -t
    } else {
        t
    }
}

/// Last nonzero element of the subresultant remainder sequence, made
/// primitive with positive leading coefficient: an integer gcd up to sign.
fn int_subresultant_gcd(a_in: &[BigInt], b_in: &[BigInt]) -> Vec<BigInt> {
    let mut a = itrim(a_in.to_vec());
    let mut b = itrim(b_in.to_vec());
    if ideg(&a) < ideg(&b) {
        std::mem::swap(&mut a, &mut b);
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        if b.is_empty() {
            break;
        }
        if ideg(&b) == Some(0) {
            // coprime
            return vec![BigInt::one()];
        }
        let da = ideg(&a).unwrap();
        let db = ideg(&b).unwrap();
        let delta = da - db;
        let r = ipseudo_rem(&a, &b);
        a = b;
        if r.is_empty() {
            break;
        }
        let divisor = &g * ipow(&h, delta);
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        h = if delta == 0 {
            h
        } else {
            ipow(&g, delta) / ipow(&h, delta - 1)
        };
    }
    let mut out = iprimitive(a);
    if out.last().is_some_and(|c| c.is_negative()) {
        for c in out.iter_mut() {
            *c = -c.clone();
        }
    }
    out
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

// ---------------------------------------------------------------------------
// polynomials over a prime field
// ---------------------------------------------------------------------------

/// Dense polynomial over F_p (p prime, certified by the caller), residues
/// in [0, p), leading residue nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModPoly {
    coeffs: Vec<BigUint>,
    modulus: BigUint,
}

impl ModPoly {
    pub fn from_residues(mut coeffs: Vec<BigUint>, modulus: BigUint) -> Self {
        for c in coeffs.iter_mut() {
            *c %= &modulus;
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ModPoly { coeffs, modulus }
    }

    pub fn from_integers(coeffs: &[i64], p: u64) -> Self {
        let modulus = BigUint::from(p);
        let pb = BigInt::from(p);
        ModPoly::from_residues(
            coeffs
                .iter()
                .map(|&c| BigInt::from(c).mod_floor(&pb).magnitude().clone())
                .collect(),
            modulus,
        )
    }

    pub fn modulus(&self) -> &BigUint {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn x(modulus: BigUint) -> Self {
        ModPoly::from_residues(vec![BigUint::zero(), BigUint::one()], modulus)
    }

    fn sub(&self, rhs: &ModPoly) -> ModPoly {
        let p = &self.modulus;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).cloned().unwrap_or_default();
            let b = rhs.coeffs.get(i).cloned().unwrap_or_default();
            out.push((a + p - b) % p);
        }
        ModPoly::from_residues(out, p.clone())
    }

    fn mul(&self, rhs: &ModPoly) -> ModPoly {
        if self.is_zero() || rhs.is_zero() {
            return ModPoly::from_residues(Vec::new(), self.modulus.clone());
        }
        let p = &self.modulus;
        let mut out = vec![BigUint::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (&out[i + j] + a * b) % p;
            }
        }
        ModPoly::from_residues(out, p.clone())
    }

    /// Remainder of self divided by g (g nonzero; lc(g) inverted mod p).
    fn rem(&self, g: &ModPoly) -> ModPoly {
        let dg = g.degree().expect("division by zero polynomial");
        let p = &self.modulus;
        let lc_inv = mod_inverse(
            &BigInt::from(g.coeffs.last().unwrap().clone()),
            &BigInt::from_biguint(Sign::Plus, p.clone()),
        )
        .expect("leading coefficient is a unit")
        .magnitude()
        .clone();
        let mut r = self.coeffs.clone();
        while r.len() > dg {
            let lr = r.last().unwrap().clone();
            if !lr.is_zero() {
                let q = (&lr * &lc_inv) % p;
                let k = r.len() - 1 - dg;
                for (i, gc) in g.coeffs.iter().enumerate() {
                    let sub = (&q * gc) % p;
                    r[i + k] = (&r[i + k] + p - sub) % p;
                }
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        ModPoly::from_residues(r, p.clone())
    }

    fn monic(&self) -> ModPoly {
        match self.coeffs.last() {
            None => self.clone(),
            Some(lc) => {
                let p = &self.modulus;
                let inv = mod_inverse(
                    &BigInt::from(lc.clone()),
                    &BigInt::from_biguint(Sign::Plus, p.clone()),
                )
                .expect("unit")
                .magnitude()
                .clone();
                ModPoly::from_residues(
                    self.coeffs.iter().map(|c| (c * &inv) % p).collect(),
                    p.clone(),
                )
            }
        }
    }

    fn gcd(&self, other: &ModPoly) -> ModPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// X^e modulo self, by square and multiply over the bits of e.
    fn x_pow_mod(&self, e: &BigUint) -> ModPoly {
        let mut result = ModPoly::from_residues(vec![BigUint::one()], self.modulus.clone());
        let mut base = ModPoly::x(self.modulus.clone()).rem(self);
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                result = result.mul(&base).rem(self);
            }
            if i + 1 < bits {
                base = base.mul(&base).rem(self);
            }
        }
        result
    }

    /// Irreducibility over F_p by the distinct-degree criterion: f of
    /// degree n is irreducible iff f | X^{p^n} - X and
    /// gcd(f, X^{p^{n/q}} - X) = 1 for every prime q | n.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let f = self.monic();
        let x = ModPoly::x(self.modulus.clone());
        let p = &self.modulus;
        let full = f.x_pow_mod(&ipow_biguint(p, n));
        if full.sub(&x.rem(&f)) != ModPoly::from_residues(Vec::new(), p.clone()) {
            return false;
        }
        for q in distinct_prime_factors(n) {
            let partial = f.x_pow_mod(&ipow_biguint(p, n / q));
            let diff = partial.sub(&x.rem(&f));
            if f.gcd(&diff).degree() != Some(0) {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for ModPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0 mod {}", self.modulus);
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*X")?,
                _ => write!(f, "{c}*X^{i}")?,
            }
        }
        write!(f, " mod {}", self.modulus)
    }
}

fn ipow_biguint(base: &BigUint, e: usize) -> BigUint {
    num_traits::pow::pow(base.clone(), e)
}

fn distinct_prime_factors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

// ---------------------------------------------------------------------------
// irreducibility certification over Q
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IrreducibilityVerdict {
    Irreducible,
    Reducible,
    Inconclusive,
}

/// What backs the verdict. Every `Irreducible` carries a recomputable
/// witness; `Inconclusive` is a normal outcome the construction responds
/// to by moving to the next specialization value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum IrreducibilityEvidence {
    /// irreducible modulo the witness prime, which divides neither the
    /// leading coefficient nor the discriminant numerator
    ModPIrreducible {
        #[serde(with = "crate::certificate::int_string")]
        prime: BigInt,
    },
    /// single-segment Newton polygon whose reduced slope denominator
    /// equals the degree (Eisenstein-type)
    PureSlopeEisenstein {
        #[serde(with = "crate::certificate::int_string")]
        prime: BigInt,
        #[serde(with = "crate::certificate::rat_string")]
        slope: BigRational,
    },
    /// explicit proper factor
    RationalFactorFound { factor: Polynomial },
    /// degree <= 3 and an exhaustive rational-root scan found nothing
    NoRationalRoot,
    /// degree 1 is irreducible outright
    Linear,
    /// all routes exhausted without a verdict
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrreducibilityCertificate {
    pub verdict: IrreducibilityVerdict,
    #[serde(flatten)]
    pub evidence: IrreducibilityEvidence,
}

/// Certify irreducibility of f over the rationals, or find a factor.
///
/// Routes, in order: an exact rational-root scan (factor detection), a
/// pure-slope Newton polygon certificate at primes dividing the extreme
/// coefficients, mod-p irreducibility for witness primes up to the effort
/// bound, and finally — for degree <= 3 where it is decisive — the
/// exhaustive root scan itself. "Inconclusive" is returned when every
/// route exhausts.
pub fn certify_irreducible(
    f: &Polynomial,
    config: &EffortConfig,
) -> Result<IrreducibilityCertificate> {
    let d = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => {
            return Err(Error::InvalidArgument(
                "irreducibility needs degree >= 1".into(),
            ))
        }
    };
    if d == 1 {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Irreducible,
            evidence: IrreducibilityEvidence::Linear,
        });
    }

    let disc = f.discriminant()?;
    if disc.is_zero() {
        // repeated factor
        let factor = f.gcd(&f.derivative())?;
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Reducible,
            evidence: IrreducibilityEvidence::RationalFactorFound { factor },
        });
    }

    let (int_coeffs, _) = f.integer_form();
    let int_coeffs = iprimitive(int_coeffs);

    // rational-root scan (candidates p/q, p | constant, q | leading)
    let mut scan_exhaustive = false;
    if int_coeffs[0].is_zero() {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Reducible,
            evidence: IrreducibilityEvidence::RationalFactorFound {
                factor: Polynomial::x(),
            },
        });
    }
    let c0_factors = arith::factorize(&int_coeffs[0], config.trial_division_bound);
    let lc_factors = arith::factorize(int_coeffs.last().unwrap(), config.trial_division_bound);
    if let (Some(c0f), Some(lcf)) = (&c0_factors, &lc_factors) {
        if let (Some(nums), Some(dens)) = (arith::divisors(c0f, 4096), arith::divisors(lcf, 4096)) {
            scan_exhaustive = true;
            for num in &nums {
                for den in &dens {
                    if !num.gcd(den).is_one() {
                        continue;
                    }
                    for root in [
                        BigRational::new(num.clone(), den.clone()),
                        BigRational::new(-num.clone(), den.clone()),
                    ] {
                        if f.evaluate(&root).is_zero() {
                            return Ok(IrreducibilityCertificate {
                                verdict: IrreducibilityVerdict::Reducible,
                                evidence: IrreducibilityEvidence::RationalFactorFound {
                                    factor: Polynomial::linear_root(&root),
                                },
                            });
                        }
                    }
                }
            }
        }
    }

    // Newton-polygon route at primes dividing an extreme coefficient
    let mut polygon_primes: Vec<BigInt> = Vec::new();
    for factors in [&c0_factors, &lc_factors].into_iter().flatten() {
        for (p, _) in factors {
            if !polygon_primes.contains(p) {
                polygon_primes.push(p.clone());
            }
        }
    }
    polygon_primes.sort();
    for p in &polygon_primes {
        if crate::newton::is_pure_slope_irreducible(f, p)? {
            let polygon = crate::newton::newton_polygon(f, p)?;
            return Ok(IrreducibilityCertificate {
                verdict: IrreducibilityVerdict::Irreducible,
                evidence: IrreducibilityEvidence::PureSlopeEisenstein {
                    prime: p.clone(),
                    slope: polygon.segments()[0].slope.clone(),
                },
            });
        }
    }

    // mod-p route: witness primes must preserve degree and separability
    let disc_num = disc.numer();
    let lc = int_coeffs.last().unwrap();
    for p in arith::small_primes(config.witness_prime_bound) {
        let pb = BigInt::from(p);
        if (lc % &pb).is_zero() || (disc_num % &pb).is_zero() {
            continue;
        }
        let reduced = ModPoly::from_residues(
            int_coeffs
                .iter()
                .map(|c| c.mod_floor(&pb).magnitude().clone())
                .collect(),
            pb.magnitude().clone(),
        );
        if reduced.is_irreducible() {
            return Ok(IrreducibilityCertificate {
                verdict: IrreducibilityVerdict::Irreducible,
                evidence: IrreducibilityEvidence::ModPIrreducible { prime: pb },
            });
        }
    }

    // for degree <= 3 the exhaustive root scan is decisive on its own
    if d <= 3 && scan_exhaustive {
        return Ok(IrreducibilityCertificate {
            verdict: IrreducibilityVerdict::Irreducible,
            evidence: IrreducibilityEvidence::NoRationalRoot,
        });
    }

    Ok(IrreducibilityCertificate {
        verdict: IrreducibilityVerdict::Inconclusive,
        evidence: IrreducibilityEvidence::Exhausted,
    })
}

/// Re-check a stored irreducibility certificate against the polynomial it
/// claims to describe. Used by `verify`.
pub fn revalidate_irreducibility(f: &Polynomial, cert: &IrreducibilityCertificate) -> Result<()> {
    match (&cert.verdict, &cert.evidence) {
        (IrreducibilityVerdict::Irreducible, IrreducibilityEvidence::ModPIrreducible { prime }) => {
            if !arith::is_prime(prime) {
                return Err(Error::Internal(format!("witness {prime} is not prime")));
            }
            let (int_coeffs, _) = f.integer_form();
            let int_coeffs = iprimitive(int_coeffs);
            let lc = int_coeffs.last().ok_or_else(|| {
                Error::Internal("empty polynomial in irreducibility certificate".into())
            })?;
            if (lc % prime).is_zero() {
                return Err(Error::Internal(
                    "witness prime divides the leading coefficient".into(),
                ));
            }
            let disc = f.discriminant()?;
            if (disc.numer() % prime).is_zero() {
                return Err(Error::Internal(
                    "witness prime divides the discriminant".into(),
                ));
            }
            let reduced = ModPoly::from_residues(
                int_coeffs
                    .iter()
                    .map(|c| c.mod_floor(prime).magnitude().clone())
                    .collect(),
                prime.magnitude().clone(),
            );
            if !reduced.is_irreducible() {
                return Err(Error::Internal(format!(
                    "polynomial is not irreducible mod {prime}"
                )));
            }
            Ok(())
        }
        (
            IrreducibilityVerdict::Irreducible,
            IrreducibilityEvidence::PureSlopeEisenstein { prime, slope },
        ) => {
            if !crate::newton::is_pure_slope_irreducible(f, prime)? {
                return Err(Error::Internal(format!(
                    "polygon at {prime} is not pure-slope"
                )));
            }
            let polygon = crate::newton::newton_polygon(f, prime)?;
            if &polygon.segments()[0].slope != slope {
                return Err(Error::Internal("stored slope mismatch".into()));
            }
            Ok(())
        }
        (IrreducibilityVerdict::Irreducible, IrreducibilityEvidence::Linear) => {
            if f.degree() == Some(1) {
                Ok(())
            } else {
                Err(Error::Internal("linear evidence on nonlinear input".into()))
            }
        }
        (IrreducibilityVerdict::Irreducible, IrreducibilityEvidence::NoRationalRoot) => {
            if f.degree().is_some_and(|d| (2..=3).contains(&d)) {
                Ok(())
            } else {
                Err(Error::Internal(
                    "root exclusion is only decisive for degree 2 or 3".into(),
                ))
            }
        }
        (
            IrreducibilityVerdict::Reducible,
            IrreducibilityEvidence::RationalFactorFound { factor },
        ) => {
            let g = f.gcd(factor)?;
            if g.degree() == factor.monic().degree() && g.degree() < f.degree() {
                Ok(())
            } else {
                Err(Error::Internal("stored factor does not divide".into()))
            }
        }
        (IrreducibilityVerdict::Inconclusive, _) => Ok(()),
        _ => Err(Error::Internal(
            "verdict/evidence combination is not valid".into(),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{big, rat, ratio};

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::from_integers(coeffs)
    }

    #[test]
    fn evaluate_examples() {
        assert_eq!(p(&[1, 0, 1]).evaluate(&rat(2)), rat(5));
        assert_eq!(Polynomial::zero().evaluate(&ratio(7, 3)), rat(0));
        assert_eq!(p(&[-1, 3]).evaluate(&ratio(1, 3)), rat(0));
    }

    #[test]
    fn ring_operations() {
        let xp1 = p(&[1, 1]);
        let xm1 = p(&[-1, 1]);
        assert_eq!(&xp1 * &xm1, p(&[-1, 0, 1]));
        assert_eq!(p(&[0, 0, 1]).compose(&xp1), p(&[1, 2, 1]));
        let f = p(&[3, -2, 7]);
        assert!((&f + &(-&f)).is_zero());
        // deg(f*g) = deg f + deg g
        assert_eq!((&f * &xp1).degree(), Some(3));
    }

    #[test]
    fn karatsuba_agrees_with_schoolbook() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let a: Vec<BigRational> = (0..rng.gen_range(33..80))
                .map(|_| ratio(rng.gen_range(-50..50), rng.gen_range(1..9)))
                .collect();
            let b: Vec<BigRational> = (0..rng.gen_range(33..80))
                .map(|_| ratio(rng.gen_range(-50..50), rng.gen_range(1..9)))
                .collect();
            let karat = mul_coeffs(&a, &b);
            let mut school = vec![BigRational::zero(); a.len() + b.len() - 1];
            for (i, ai) in a.iter().enumerate() {
                for (j, bj) in b.iter().enumerate() {
                    school[i + j] += ai * bj;
                }
            }
            assert_eq!(karat, school);
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p(&[0, 0, 0, 1]).derivative(), p(&[0, 0, 3]));
        assert_eq!(p(&[5]).derivative(), Polynomial::zero());
        assert_eq!(p(&[0, 1, 1]).derivative(), p(&[1, 2]));
    }

    #[test]
    fn gcd_examples() {
        let g = p(&[-1, 0, 1]).gcd(&p(&[-1, 1])).unwrap();
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(
            p(&[1, 0, 1]).gcd(&p(&[-1, 0, 1])).unwrap(),
            Polynomial::one()
        );
        // (X-1)^2 (X+2) and (X-1)(X+3)
        let a = &p(&[-1, 1]).pow(2) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 1]);
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
        assert!(Polynomial::zero().gcd(&Polynomial::zero()).is_err());
        // gcd is monic even from non-monic inputs
        let a = p(&[-2, 2]); // 2(X-1)
        let b = p(&[-3, 0, 3]); // 3(X^2-1)
        assert_eq!(a.gcd(&b).unwrap(), p(&[-1, 1]));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(p(&[-2, 1]).resultant(&p(&[-3, 1])).unwrap(), rat(-1));
        assert_eq!(p(&[-1, 0, 1]).resultant(&p(&[-1, 1])).unwrap(), rat(0));
        assert_eq!(p(&[0, 0, 1]).resultant(&p(&[1, 1])).unwrap(), rat(1));
        assert!(p(&[1]).resultant(&Polynomial::zero()).is_err());
        // lc scaling: Res(2X-4, X-3) = 2 * (3 - 2)... via lc(f)^deg g * g-product
        assert_eq!(p(&[-4, 2]).resultant(&p(&[-3, 1])).unwrap(), rat(-2));
        // rational coefficients: Res((X-2)/5, X-3) = (1/5)^1 * (-1)
        let f = p(&[-2, 1]).scale(&ratio(1, 5));
        assert_eq!(f.resultant(&p(&[-3, 1])).unwrap(), ratio(-1, 5));
        // constants: Res(c, g) = c^{deg g}
        assert_eq!(p(&[7]).resultant(&p(&[1, 0, 1])).unwrap(), rat(49));
        assert_eq!(p(&[1, 0, 1]).resultant(&p(&[7])).unwrap(), rat(49));
    }

    #[test]
    fn discriminant_examples() {
        assert_eq!(p(&[-1, 0, 1]).discriminant().unwrap(), rat(4));
        assert_eq!(p(&[1, 2, 1]).discriminant().unwrap(), rat(0));
        assert_eq!(p(&[-1, 0, 0, 1]).discriminant().unwrap(), rat(-27));
        assert_eq!(p(&[-2, 0, 0, 0, 0, 1]).discriminant().unwrap(), rat(50000));
        assert!(p(&[3]).discriminant().is_err());
        assert_eq!(p(&[1, 4]).discriminant().unwrap(), rat(1));
    }

    #[test]
    fn separability_examples() {
        assert!(p(&[-1, 0, 1]).is_separable().unwrap());
        assert!(!p(&[1, -2, 1]).is_separable().unwrap());
        assert!(p(&[-2, 0, 0, 0, 0, 1]).is_separable().unwrap());
    }

    #[test]
    fn reduce_mod_examples() {
        let f = Polynomial::new(vec![ratio(1, 2), rat(0), rat(1)]);
        let reduced = f.reduce_mod(&big(3)).unwrap();
        assert_eq!(reduced, ModPoly::from_integers(&[2, 0, 1], 3));
        assert!(matches!(
            f.reduce_mod(&big(2)),
            Err(Error::BadReduction { .. })
        ));
        let x = Polynomial::x();
        assert_eq!(
            x.reduce_mod(&big(5)).unwrap(),
            ModPoly::from_integers(&[0, 1], 5)
        );
        assert!(x.reduce_mod(&big(4)).is_err());
    }

    /// Brute-force oracle: irreducible iff no monic factor of degree
    /// 1..deg/2 divides. Only viable for tiny p and degree.
    fn brute_force_irreducible(f: &ModPoly) -> bool {
        let n = match f.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(n) => n,
        };
        let p = f.modulus().to_u64_digits()[0] as i64;
        for d in 1..=n / 2 {
            // enumerate monic candidates of degree d
            let count = (p as u64).pow(d as u32);
            for code in 0..count {
                let mut coeffs: Vec<i64> = Vec::with_capacity(d + 1);
                let mut c = code;
                for _ in 0..d {
                    coeffs.push((c % p as u64) as i64);
                    c /= p as u64;
                }
                coeffs.push(1);
                let candidate = ModPoly::from_integers(&coeffs, p as u64);
                if f.rem(&candidate).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn irreducibility_mod_p_examples() {
        assert!(ModPoly::from_integers(&[1, 0, 1], 3).is_irreducible());
        assert!(!ModPoly::from_integers(&[-1, 0, 1], 3).is_irreducible());
        assert!(ModPoly::from_integers(&[1, 1, 0, 1], 2).is_irreducible());
        // constants and zero are not irreducible
        assert!(!ModPoly::from_integers(&[2], 3).is_irreducible());
        assert!(!ModPoly::from_integers(&[], 3).is_irreducible());
    }

    #[test]
    fn irreducibility_mod_p_matches_brute_force() {
        for p in [2u64, 3, 5] {
            for deg in 2..=4usize {
                let count = p.pow(deg as u32);
                for code in 0..count {
                    let mut coeffs: Vec<i64> = Vec::with_capacity(deg + 1);
                    let mut c = code;
                    for _ in 0..deg {
                        coeffs.push((c % p) as i64);
                        c /= p;
                    }
                    coeffs.push(1);
                    let f = ModPoly::from_integers(&coeffs, p);
                    assert_eq!(
                        f.is_irreducible(),
                        brute_force_irreducible(&f),
                        "{f} disagreement"
                    );
                }
            }
        }
    }

    #[test]
    fn certify_examples() {
        let config = EffortConfig::default();
        // X^2 + 1: mod-3 witness (2 divides the discriminant, so 3 is first)
        let cert = certify_irreducible(&p(&[1, 0, 1]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Irreducible);
        assert_eq!(
            cert.evidence,
            IrreducibilityEvidence::ModPIrreducible { prime: big(3) }
        );
        revalidate_irreducibility(&p(&[1, 0, 1]), &cert).unwrap();

        // X^2 - 1: factor found
        let cert = certify_irreducible(&p(&[-1, 0, 1]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Reducible);
        assert_eq!(
            cert.evidence,
            IrreducibilityEvidence::RationalFactorFound {
                factor: p(&[-1, 1])
            }
        );
        revalidate_irreducibility(&p(&[-1, 0, 1]), &cert).unwrap();

        // X^2 - 2: classic Eisenstein at 2
        let cert = certify_irreducible(&p(&[-2, 0, 1]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Irreducible);
        assert_eq!(
            cert.evidence,
            IrreducibilityEvidence::PureSlopeEisenstein {
                prime: big(2),
                slope: ratio(-1, 2)
            }
        );
        revalidate_irreducibility(&p(&[-2, 0, 1]), &cert).unwrap();

        // degree 1
        let cert = certify_irreducible(&p(&[4, 2]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Irreducible);

        // repeated factor detected through the discriminant
        let cert = certify_irreducible(&p(&[1, 2, 1]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Reducible);

        // X^4 + 1: irreducible over Q but reducible mod every prime and
        // not pure-slope; ends inconclusive
        let cert = certify_irreducible(&p(&[1, 0, 0, 0, 1]), &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Inconclusive);

        assert!(certify_irreducible(&p(&[3]), &config).is_err());
    }

    #[test]
    fn certify_finds_non_eisenstein_pure_slopes() {
        let config = EffortConfig::default();
        // 2X^3 - 9: slope denominator 3 at p=3 (reversed-Eisenstein shape)
        let f = p(&[-9, 0, 0, 2]);
        let cert = certify_irreducible(&f, &config).unwrap();
        assert_eq!(cert.verdict, IrreducibilityVerdict::Irreducible);
        revalidate_irreducibility(&f, &cert).unwrap();
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(Polynomial::zero().to_string(), "0");
        let f = Polynomial::new(vec![rat(1), rat(0), ratio(-3, 2)]);
        assert_eq!(f.to_string(), "1 + 0*X + -3/2*X^2");
        assert_eq!(p(&[7]).to_string(), "7");
    }

    #[test]
    fn serde_round_trip() {
        let f = Polynomial::new(vec![ratio(1, 2), rat(-3), rat(0), rat(5)]);
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["1/2","-3","0","5"]"#);
        let back: Polynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn random_resultant_gcd_consistency() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..200 {
            let a: Vec<i64> = (0..=rng.gen_range(1..6))
                .map(|_| rng.gen_range(-9..=9))
                .collect();
            let b: Vec<i64> = (0..=rng.gen_range(1..6))
                .map(|_| rng.gen_range(-9..=9))
                .collect();
            let (fa, fb) = (Polynomial::from_integers(&a), Polynomial::from_integers(&b));
            if fa.is_zero() || fb.is_zero() {
                continue;
            }
            let res = fa.resultant(&fb).unwrap();
            let gcd = fa.gcd(&fb).unwrap();
            if fa.degree() == Some(0) || fb.degree() == Some(0) {
                continue;
            }
            assert_eq!(res.is_zero(), gcd.degree() != Some(0), "{fa} vs {fb}");
        }
    }

    #[test]
    fn random_discriminant_product_rule() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        for _ in 0..100 {
            let a: Vec<i64> = (0..=rng.gen_range(1..5))
                .map(|_| rng.gen_range(-6..=6))
                .collect();
            let b: Vec<i64> = (0..=rng.gen_range(1..5))
                .map(|_| rng.gen_range(-6..=6))
                .collect();
            let (fa, fb) = (Polynomial::from_integers(&a), Polynomial::from_integers(&b));
            if fa.degree().unwrap_or(0) < 1 || fb.degree().unwrap_or(0) < 1 {
                continue;
            }
            let product_separable = (&fa * &fb).is_separable().unwrap();
            let parts = fa.is_separable().unwrap()
                && fb.is_separable().unwrap()
                && !fa.resultant(&fb).unwrap().is_zero();
            assert_eq!(product_separable, parts);
        }
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        for _ in 0..100 {
            let a: Vec<i64> = (0..=rng.gen_range(0..6))
                .map(|_| rng.gen_range(-9..=9))
                .collect();
            let b: Vec<i64> = (0..=rng.gen_range(0..6))
                .map(|_| rng.gen_range(-9..=9))
                .collect();
            let (fa, fb) = (Polynomial::from_integers(&a), Polynomial::from_integers(&b));
            let x = ratio(rng.gen_range(-12..=12), rng.gen_range(1..=9));
            assert_eq!((&fa * &fb).evaluate(&x), fa.evaluate(&x) * fb.evaluate(&x));
            assert_eq!((&fa + &fb).evaluate(&x), fa.evaluate(&x) + fb.evaluate(&x));
        }
    }
}
