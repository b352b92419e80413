//! Polynomials over GF(2) and arithmetic in binary fields GF(2)[x]/m(x).
//!
//! Everything here is plain classical arithmetic. It is the reference that
//! synthesized circuits are checked against, and it supplies the reductions
//! used to build constant-multiplication matrices.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

const LIMB_BITS: usize = 64;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl std::ops::Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("no inverse: {0} is not invertible modulo m(x)")]
    NoInverse(String),
    #[error("invalid hex digit {0:?}")]
    BadHexDigit(char),
    #[error("empty polynomial literal")]
    Empty,
    #[error("invalid exponent {0:?}")]
    BadExponent(String),
    #[error("exponent {0} listed more than once")]
    RepeatedExponent(usize),
}

/// A polynomial over GF(2). Bit `i` is the coefficient of `x^i`.
///
/// Limbs are little-endian and never carry trailing zero limbs, so derived
/// equality is coefficient-wise equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Polynomial {
    limbs: Vec<u64>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial { limbs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// `x^e`.
    pub fn monomial(e: usize) -> Self {
        let mut p = Polynomial { limbs: vec![0; e / LIMB_BITS + 1] };
        p.limbs[e / LIMB_BITS] = 1 << (e % LIMB_BITS);
        p
    }

    /// Sum of `x^e` over the given exponents. Repeated exponents cancel.
    pub fn from_exponents(exponents: &[usize]) -> Self {
        let mut p = Polynomial::zero();
        for &e in exponents {
            p.flip(e);
        }
        p
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut limbs = vec![0u64; bits.len().div_ceil(LIMB_BITS)];
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            limbs[i / LIMB_BITS] |= 1 << (i % LIMB_BITS);
        }
        Self::from_limbs(limbs)
    }

    /// Builds a polynomial from little-endian 64-bit limbs.
    pub fn from_limbs(limbs: Vec<u64>) -> Self {
        let mut p = Polynomial { limbs };
        p.normalize();
        p
    }

    /// The low `len` coefficients as a bit vector.
    pub fn to_bits(&self, len: usize) -> Vec<bool> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn limbs(&self) -> &[u64] {
        &self.limbs
    }

    /// Uniformly random polynomial with degree below `len`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, len: usize) -> Self {
        let mut limbs: Vec<u64> = (0..len.div_ceil(LIMB_BITS)).map(|_| rng.gen()).collect();
        if !len.is_multiple_of(LIMB_BITS) {
            if let Some(last) = limbs.last_mut() {
                *last &= (1u64 << (len % LIMB_BITS)) - 1;
            }
        }
        Self::from_limbs(limbs)
    }

    fn normalize(&mut self) {
        while self.limbs.last() == Some(&0) {
            self.limbs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.limbs == [1]
    }

    pub fn degree(&self) -> Degree {
        match self.limbs.last() {
            None => Degree::NegInfinity,
            Some(&top) => Degree::Finite(
                (self.limbs.len() - 1) * LIMB_BITS + (LIMB_BITS - 1 - top.leading_zeros() as usize),
            ),
        }
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.limbs
            .get(i / LIMB_BITS)
            .is_some_and(|l| (l >> (i % LIMB_BITS)) & 1 == 1)
    }

    pub fn set_coeff(&mut self, i: usize, value: bool) {
        if self.coeff(i) != value {
            self.flip(i);
        }
    }

    /// Adds `x^i`.
    pub fn flip(&mut self, i: usize) {
        let limb = i / LIMB_BITS;
        if limb >= self.limbs.len() {
            self.limbs.resize(limb + 1, 0);
        }
        self.limbs[limb] ^= 1 << (i % LIMB_BITS);
        self.normalize();
    }

    /// Exponents of the nonzero terms in descending order.
    pub fn exponents(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.weight());
        for (li, &limb) in self.limbs.iter().enumerate().rev() {
            let mut l = limb;
            while l != 0 {
                let b = LIMB_BITS - 1 - l.leading_zeros() as usize;
                out.push(li * LIMB_BITS + b);
                l &= !(1u64 << b);
            }
        }
        out
    }

    /// `self · x^k`.
    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Polynomial::zero();
        }
        let (words, bits) = (k / LIMB_BITS, k % LIMB_BITS);
        let mut limbs = vec![0u64; self.limbs.len() + words + 1];
        for (i, &l) in self.limbs.iter().enumerate() {
            limbs[i + words] ^= l << bits;
            if bits != 0 {
                limbs[i + words + 1] ^= l >> (LIMB_BITS - bits);
            }
        }
        Self::from_limbs(limbs)
    }

    /// Keeps the coefficients of `x^0 .. x^(len-1)`.
    pub fn truncate(&self, len: usize) -> Self {
        let mut limbs: Vec<u64> = self.limbs.iter().take(len.div_ceil(LIMB_BITS)).copied().collect();
        if !len.is_multiple_of(LIMB_BITS) && limbs.len() == len.div_ceil(LIMB_BITS) {
            if let Some(last) = limbs.last_mut() {
                *last &= (1u64 << (len % LIMB_BITS)) - 1;
            }
        }
        Self::from_limbs(limbs)
    }

    /// Coefficients `x^start .. x^(start+len-1)`, shifted down to `x^0`.
    pub fn slice(&self, start: usize, len: usize) -> Self {
        let mut out = Polynomial::zero();
        for i in 0..len {
            if self.coeff(start + i) {
                out.flip(i);
            }
        }
        out
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let (long, short) = if self.limbs.len() >= other.limbs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut limbs = long.limbs.clone();
        for (d, s) in limbs.iter_mut().zip(&short.limbs) {
            *d ^= s;
        }
        Self::from_limbs(limbs)
    }

    /// Product in GF(2)[x], by shift-and-add over the set bits of `self`.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut acc = vec![0u64; self.limbs.len() + other.limbs.len() + 1];
        for e in self.exponents() {
            let (words, bits) = (e / LIMB_BITS, e % LIMB_BITS);
            for (i, &l) in other.limbs.iter().enumerate() {
                acc[i + words] ^= l << bits;
                if bits != 0 {
                    acc[i + words + 1] ^= l >> (LIMB_BITS - bits);
                }
            }
        }
        Self::from_limbs(acc)
    }

    /// Square via bit spreading; coefficient `i` moves to `2i`.
    pub fn square(&self) -> Polynomial {
        let mut limbs = Vec::with_capacity(2 * self.limbs.len());
        for &l in &self.limbs {
            limbs.push(spread_bits(l as u32));
            limbs.push(spread_bits((l >> 32) as u32));
        }
        Self::from_limbs(limbs)
    }

    /// Quotient and remainder of division by a nonzero divisor.
    ///
    /// # Panics
    /// Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor
            .degree()
            .finite()
            .expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Degree::Finite(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            rem = rem.add(&divisor.shl(shift));
        }
        (quot, rem)
    }

    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    /// Lowercase hex with the least significant digit holding `x^0 .. x^3`.
    pub fn to_hex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, l) in self.limbs.iter().rev().enumerate() {
            if i == 0 {
                s.push_str(&format!("{l:x}"));
            } else {
                s.push_str(&format!("{l:016x}"));
            }
        }
        s
    }

    /// Inverse of [`Polynomial::to_hex`]; accepts an optional `0x` prefix.
    pub fn from_hex(text: &str) -> Result<Polynomial, PolyError> {
        let t = text.trim();
        let t = t.strip_prefix("0x").or_else(|| t.strip_prefix("0X")).unwrap_or(t);
        if t.is_empty() {
            return Err(PolyError::Empty);
        }
        let mut p = Polynomial::zero();
        for (pos, ch) in t.chars().rev().enumerate() {
            let v = ch.to_digit(16).ok_or(PolyError::BadHexDigit(ch))?;
            for b in 0..4 {
                if (v >> b) & 1 == 1 {
                    p.flip(4 * pos + b);
                }
            }
        }
        Ok(p)
    }

    /// Parses an exponent list such as `"2,0"` (meaning `1 + x^2`).
    pub fn from_exponent_list(text: &str) -> Result<Polynomial, PolyError> {
        let exps = parse_exponents(text)?;
        let mut sorted = exps.clone();
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(PolyError::RepeatedExponent(w[0]));
        }
        Ok(Polynomial::from_exponents(&exps))
    }
}

fn spread_bits(x: u32) -> u64 {
    let mut v = x as u64;
    v = (v | (v << 16)) & 0x0000_FFFF_0000_FFFF;
    v = (v | (v << 8)) & 0x00FF_00FF_00FF_00FF;
    v = (v | (v << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    v = (v | (v << 2)) & 0x3333_3333_3333_3333;
    v = (v | (v << 1)) & 0x5555_5555_5555_5555;
    v
}

fn parse_exponents(text: &str) -> Result<Vec<usize>, PolyError> {
    if text.trim().is_empty() {
        return Err(PolyError::Empty);
    }
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| PolyError::BadExponent(tok.to_string()))
        })
        .collect()
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .into_iter()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{e}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl fmt::LowerHex for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_hex())
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ModulusError {
    #[error("modulus list is empty")]
    Empty,
    #[error("invalid exponent {0:?} in modulus list")]
    BadExponent(String),
    #[error("exponents must be strictly descending ({prev} is followed by {next})")]
    NotDescending { prev: usize, next: usize },
    #[error("modulus must end with the constant term 0")]
    MissingConstant,
    #[error("modulus degree must be at least 1")]
    ZeroDegree,
    #[error("modulus weight {0} is below 3; a trinomial or heavier is required")]
    WeightTooLow(usize),
}

/// A degree-`n` field polynomial `m(x)`, stored as the descending list of
/// exponents of its nonzero terms, e.g. `[10, 3, 0]` for `1 + x^3 + x^10`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct ModulusSpec {
    exponents: Vec<usize>,
}

impl ModulusSpec {
    pub fn new(exponents: Vec<usize>) -> Result<Self, ModulusError> {
        let (&first, &last) = match (exponents.first(), exponents.last()) {
            (Some(f), Some(l)) => (f, l),
            _ => return Err(ModulusError::Empty),
        };
        if let Some(w) = exponents.windows(2).find(|w| w[0] <= w[1]) {
            return Err(ModulusError::NotDescending { prev: w[0], next: w[1] });
        }
        if first == 0 {
            return Err(ModulusError::ZeroDegree);
        }
        if last != 0 {
            return Err(ModulusError::MissingConstant);
        }
        if exponents.len() < 3 {
            return Err(ModulusError::WeightTooLow(exponents.len()));
        }
        Ok(ModulusSpec { exponents })
    }

    /// Degree of `m(x)`.
    pub fn n(&self) -> usize {
        self.exponents[0]
    }

    /// Number of nonzero terms, ω.
    pub fn weight(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[usize] {
        &self.exponents
    }

    /// The exponents strictly between `n` and `0`.
    pub fn middle_exponents(&self) -> &[usize] {
        &self.exponents[1..self.exponents.len() - 1]
    }

    pub fn polynomial(&self) -> Polynomial {
        Polynomial::from_exponents(&self.exponents)
    }
}

impl TryFrom<Vec<usize>> for ModulusSpec {
    type Error = ModulusError;

    fn try_from(v: Vec<usize>) -> Result<Self, ModulusError> {
        ModulusSpec::new(v)
    }
}

impl From<ModulusSpec> for Vec<usize> {
    fn from(m: ModulusSpec) -> Vec<usize> {
        m.exponents
    }
}

impl fmt::Display for ModulusSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exponents.iter().map(|e| e.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ModulusSpec {
    type Err = ModulusError;

    fn from_str(s: &str) -> Result<Self, ModulusError> {
        parse_modulus(s)
    }
}

/// Parses `"163,7,6,3,0"`-style modulus text.
pub fn parse_modulus(text: &str) -> Result<ModulusSpec, ModulusError> {
    let exps = parse_exponents(text).map_err(|e| match e {
        PolyError::BadExponent(t) => ModulusError::BadExponent(t),
        _ => ModulusError::Empty,
    })?;
    ModulusSpec::new(exps)
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.mul(b)
}

/// Remainder of `a` modulo `m(x)`. Reduction walks down from the top
/// coefficient and folds each set bit through the sparse exponent list.
pub fn poly_mod(a: &Polynomial, m: &ModulusSpec) -> Polynomial {
    let n = m.n();
    let Degree::Finite(top) = a.degree() else {
        return Polynomial::zero();
    };
    if top < n {
        return a.clone();
    }
    let mut r = a.clone();
    for i in (n..=top).rev() {
        if r.coeff(i) {
            for &e in m.exponents() {
                r.flip(i - n + e);
            }
        }
    }
    r
}

pub fn field_mul(a: &Polynomial, b: &Polynomial, m: &ModulusSpec) -> Polynomial {
    poly_mod(&a.mul(b), m)
}

/// Inverse modulo `m(x)` by the extended Euclidean algorithm.
pub fn field_inv(a: &Polynomial, m: &ModulusSpec) -> Result<Polynomial, PolyError> {
    let a = poly_mod(a, m);
    if a.is_zero() {
        return Err(PolyError::NoInverse(a.to_string()));
    }
    // Invariant: s_i · a ≡ r_i (mod m).
    let (mut r0, mut r1) = (m.polynomial(), a.clone());
    let (mut s0, mut s1) = (Polynomial::zero(), Polynomial::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let s = s0.add(&q.mul(&s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    if !r0.is_one() {
        return Err(PolyError::NoInverse(a.to_string()));
    }
    Ok(poly_mod(&s0, m))
}

/// `x^(2^count) mod m`, starting from `start` and squaring `count` times.
fn repeated_square(start: &Polynomial, count: usize, m: &ModulusSpec) -> Polynomial {
    let mut p = start.clone();
    for _ in 0..count {
        p = poly_mod(&p.square(), m);
    }
    p
}

fn prime_factors(mut n: usize) -> Vec<usize> {
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

/// Rabin's test: `m` is irreducible iff `x^(2^n) ≡ x (mod m)` and
/// `gcd(x^(2^(n/p)) - x, m) = 1` for every prime `p | n`.
pub fn is_irreducible(m: &ModulusSpec) -> bool {
    let n = m.n();
    let x = Polynomial::monomial(1);
    let mp = m.polynomial();
    let x_mod = poly_mod(&x, m);
    let mut factors = prime_factors(n);
    // Walk the divisors n/p in increasing order so the squaring chain is shared.
    factors.sort_unstable_by(|a, b| b.cmp(a));
    let mut current = x_mod.clone();
    let mut done = 0;
    for p in factors {
        let d = n / p;
        current = repeated_square(&current, d - done, m);
        done = d;
        let g = current.add(&x_mod).gcd(&mp);
        if !g.is_one() {
            return false;
        }
    }
    current = repeated_square(&current, n - done, m);
    current == x_mod
}

impl PartialOrd for Polynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by degree first, then coefficient-wise from the top.
impl Ord for Polynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.limbs
            .len()
            .cmp(&other.limbs.len())
            .then_with(|| self.limbs.iter().rev().cmp(other.limbs.iter().rev()))
    }
}
