//! Arithmetic over small finite fields GF(p^m), q = p^m <= 256.
//!
//! Elements are represented as integers in 0..q. For prime fields the
//! integer is the residue itself and arithmetic is modular. For extension
//! fields the integer encodes the coefficient vector of a polynomial over
//! GF(p) in base p (constant term least significant), reduced modulo a
//! monic irreducible polynomial of degree m. Extension arithmetic is table
//! driven: addition through a q*q table of coefficient-wise sums, and
//! multiplication/inversion through exp/log tables over a generator of the
//! multiplicative group.
//!
//! When no reduction polynomial is supplied, the smallest monic irreducible
//! polynomial of degree m (ordered by base-p integer encoding) is chosen;
//! this yields x^2+x+1 for GF(4), x^3+x+1 for GF(8) and x^8+x^4+x^3+x+1
//! for GF(256).

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: u32 = 256;

/// A finite field GF(p^m). Cheap to clone (shared immutable tables).
#[derive(Clone)]
pub struct FieldSpec(Arc<Repr>);

struct Repr {
    p: u32,
    m: u32,
    q: u32,
    /// Reduction polynomial, ascending coefficients, length m+1, monic.
    /// `None` exactly when m == 1.
    poly: Option<Vec<u8>>,
    /// exp[i] = g^i for a fixed generator g, i in 0..q-1 (extension only).
    exp: Vec<u8>,
    /// log[a] = i with exp[i] = a, a in 1..q (extension only; log[0] unused).
    log: Vec<u16>,
    /// add[a*q + b] = a + b (extension only).
    add: Vec<u8>,
    /// neg[a] = -a (extension only).
    neg: Vec<u8>,
}

impl FieldSpec {
    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Self> {
        Self::build(p, 1, None)
    }

    /// GF(p^m) with the default (smallest) reduction polynomial.
    pub fn extension(p: u32, m: u32) -> Result<Self> {
        Self::build(p, m, None)
    }

    /// GF(p^m) with an explicit reduction polynomial (ascending
    /// coefficients, length m+1, monic, irreducible over GF(p)).
    pub fn with_polynomial(p: u32, m: u32, poly: Vec<u8>) -> Result<Self> {
        Self::build(p, m, Some(poly))
    }

    /// The field of order q, factoring q as p^m.
    pub fn of_order(q: u32) -> Result<Self> {
        let (p, m) = factor_prime_power(q)
            .ok_or_else(|| Error::InvalidField(format!("{q} is not a prime power")))?;
        Self::build(p, m, None)
    }

    fn build(p: u32, m: u32, poly: Option<Vec<u8>>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidField(format!("characteristic {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::InvalidField("extension degree must be at least 1".into()));
        }
        let q = p
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| Error::InvalidField(format!("order {p}^{m} exceeds {MAX_ORDER}")))?;

        if m == 1 {
            if let Some(poly) = &poly {
                // Tolerate an explicit degree-1 polynomial only if trivial (x - c form is
                // pointless here); simplest is to reject so serialized forms stay canonical.
                if !poly.is_empty() {
                    return Err(Error::InvalidField(
                        "a reduction polynomial is only meaningful for m > 1".into(),
                    ));
                }
            }
            return Ok(FieldSpec(Arc::new(Repr {
                p,
                m,
                q,
                poly: None,
                exp: Vec::new(),
                log: Vec::new(),
                add: Vec::new(),
                neg: Vec::new(),
            })));
        }

        let poly = match poly {
            Some(poly) => {
                validate_polynomial(p, m, &poly)?;
                poly
            }
            None => default_polynomial(p, m),
        };

        let repr = build_extension_tables(p, m, q, poly)?;
        Ok(FieldSpec(Arc::new(repr)))
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn m(&self) -> u32 {
        self.0.m
    }

    /// Field order q = p^m.
    pub fn order(&self) -> u32 {
        self.0.q
    }

    /// Reduction polynomial (ascending coefficients); `None` for prime fields.
    pub fn polynomial(&self) -> Option<&[u8]> {
        self.0.poly.as_deref()
    }

    /// All elements in their integer encoding, ascending.
    pub fn elements(&self) -> impl Iterator<Item = u8> {
        (0..self.0.q).map(|x| x as u8)
    }

    pub fn contains(&self, a: u8) -> bool {
        (a as u32) < self.0.q
    }

    pub fn check_symbol(&self, a: u8) -> Result<()> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(Error::SymbolOutOfRange { symbol: a as u32, order: self.0.q })
        }
    }

    pub fn add(&self, a: u8, b: u8) -> u8 {
        let r = &*self.0;
        debug_assert!(self.contains(a) && self.contains(b));
        if r.m == 1 {
            ((a as u32 + b as u32) % r.p) as u8
        } else {
            r.add[a as usize * r.q as usize + b as usize]
        }
    }

    pub fn neg(&self, a: u8) -> u8 {
        let r = &*self.0;
        debug_assert!(self.contains(a));
        if r.m == 1 {
            ((r.p - a as u32) % r.p) as u8
        } else {
            r.neg[a as usize]
        }
    }

    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u8, b: u8) -> u8 {
        let r = &*self.0;
        debug_assert!(self.contains(a) && self.contains(b));
        if r.m == 1 {
            ((a as u32 * b as u32) % r.p) as u8
        } else if a == 0 || b == 0 {
            0
        } else {
            let i = (r.log[a as usize] as u32 + r.log[b as usize] as u32) % (r.q - 1);
            r.exp[i as usize]
        }
    }

    pub fn inv(&self, a: u8) -> Result<u8> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let r = &*self.0;
        debug_assert!(self.contains(a));
        if r.m == 1 {
            // Fermat: a^(p-2) mod p.
            let mut acc = 1u8;
            for _ in 0..r.p - 2 {
                acc = self.mul(acc, a);
            }
            Ok(acc)
        } else {
            let i = (r.q - 1 - r.log[a as usize] as u32) % (r.q - 1);
            Ok(r.exp[i as usize])
        }
    }

    pub fn div(&self, a: u8, b: u8) -> Result<u8> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

impl PartialEq for FieldSpec {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.m == other.0.m && self.0.poly == other.0.poly)
    }
}

impl Eq for FieldSpec {}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldSpec")
            .field("p", &self.0.p)
            .field("m", &self.0.m)
            .field("poly", &self.0.poly)
            .finish()
    }
}

/// Serialized shape: {"p": .., "m": .., "poly": [..]} with "poly" omitted
/// for prime fields.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct FieldDoc {
    pub p: u32,
    pub m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<u8>>,
}

impl TryFrom<FieldDoc> for FieldSpec {
    type Error = Error;

    fn try_from(doc: FieldDoc) -> Result<Self> {
        match doc.poly {
            Some(poly) => FieldSpec::with_polynomial(doc.p, doc.m, poly),
            None => FieldSpec::build(doc.p, doc.m, None),
        }
    }
}

impl From<FieldSpec> for FieldDoc {
    fn from(f: FieldSpec) -> FieldDoc {
        FieldDoc { p: f.p(), m: f.m(), poly: f.polynomial().map(<[u8]>::to_vec) }
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FieldDoc::from(self.clone()).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let doc = FieldDoc::deserialize(d)?;
        FieldSpec::try_from(doc).map_err(serde::de::Error::custom)
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut m = 0;
            let mut rest = q;
            while rest.is_multiple_of(p) {
                rest /= p;
                m += 1;
            }
            return (rest == 1).then_some((p, m));
        }
        p += 1;
    }
    Some((q, 1))
}

// ---- polynomial helpers over GF(p), dense ascending coefficient vectors ----

fn poly_trim(a: &mut Vec<u8>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

/// Remainder of a / b with b monic, coefficients mod p.
fn poly_rem(a: &[u8], b: &[u8], p: u32) -> Vec<u8> {
    let mut r: Vec<u8> = a.to_vec();
    poly_trim(&mut r);
    while r.len() >= b.len() {
        let lead = *r.last().unwrap() as u32;
        let shift = r.len() - b.len();
        for (i, &bc) in b.iter().enumerate() {
            let cur = r[shift + i] as u32;
            r[shift + i] = ((cur + p * p - (lead * bc as u32) % p) % p) as u8;
        }
        poly_trim(&mut r);
    }
    r
}

fn validate_polynomial(p: u32, m: u32, poly: &[u8]) -> Result<()> {
    if poly.len() != m as usize + 1 {
        return Err(Error::InvalidField(format!(
            "reduction polynomial must have {} coefficients, got {}",
            m + 1,
            poly.len()
        )));
    }
    if poly.iter().any(|&c| c as u32 >= p) {
        return Err(Error::InvalidField("polynomial coefficient out of range".into()));
    }
    if poly[m as usize] != 1 {
        return Err(Error::InvalidField("reduction polynomial must be monic".into()));
    }
    if !is_irreducible(p, poly) {
        return Err(Error::InvalidField("reduction polynomial is reducible".into()));
    }
    Ok(())
}

/// Trial division by every monic polynomial of degree 1..=m/2.
fn is_irreducible(p: u32, poly: &[u8]) -> bool {
    let m = poly.len() - 1;
    for deg in 1..=m / 2 {
        let count = (p as u64).pow(deg as u32);
        for w in 0..count {
            let mut div: Vec<u8> = Vec::with_capacity(deg + 1);
            let mut rest = w;
            for _ in 0..deg {
                div.push((rest % p as u64) as u8);
                rest /= p as u64;
            }
            div.push(1);
            if poly_rem(poly, &div, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible polynomial of degree m, ordered by base-p
/// integer encoding of the coefficient vector.
fn default_polynomial(p: u32, m: u32) -> Vec<u8> {
    let count = (p as u64).pow(m);
    for w in 0..count {
        let mut poly: Vec<u8> = Vec::with_capacity(m as usize + 1);
        let mut rest = w;
        for _ in 0..m {
            poly.push((rest % p as u64) as u8);
            rest /= p as u64;
        }
        poly.push(1);
        if is_irreducible(p, &poly) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of degree {m} over GF({p}) always exists");
}

fn build_extension_tables(p: u32, m: u32, q: u32, poly: Vec<u8>) -> Result<Repr> {
    let qi = q as usize;
    let digits = |a: u32| -> Vec<u8> {
        let mut v = Vec::with_capacity(m as usize);
        let mut rest = a;
        for _ in 0..m {
            v.push((rest % p) as u8);
            rest /= p;
        }
        v
    };
    let encode = |v: &[u8]| -> u32 { v.iter().rev().fold(0, |acc, &d| acc * p + d as u32) };

    let mut add = vec![0u8; qi * qi];
    let mut neg = vec![0u8; qi];
    for a in 0..q {
        let da = digits(a);
        let n: Vec<u8> = da.iter().map(|&d| ((p - d as u32) % p) as u8).collect();
        neg[a as usize] = encode(&n) as u8;
        for b in 0..q {
            let db = digits(b);
            let s: Vec<u8> =
                da.iter().zip(&db).map(|(&x, &y)| ((x as u32 + y as u32) % p) as u8).collect();
            add[a as usize * qi + b as usize] = encode(&s) as u8;
        }
    }

    // Raw product of two elements via convolution + reduction.
    let raw_mul = |a: u32, b: u32| -> u32 {
        let da = digits(a);
        let db = digits(b);
        let mut conv = vec![0u8; 2 * m as usize - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                conv[i + j] = ((conv[i + j] as u32 + x as u32 * y as u32) % p) as u8;
            }
        }
        let rem = poly_rem(&conv, &poly, p);
        encode(&rem)
    };

    // Find a generator of the multiplicative group and fill exp/log.
    let mut exp = vec![0u8; qi - 1];
    let mut log = vec![0u16; qi];
    'candidates: for g in 2..q {
        let mut x = 1u32;
        for i in 0..q - 1 {
            exp[i as usize] = x as u8;
            x = raw_mul(x, g);
            if x == 1 && i + 2 < q {
                continue 'candidates; // order too small
            }
        }
        if x != 1 {
            continue;
        }
        for (i, &e) in exp.iter().enumerate() {
            log[e as usize] = i as u16;
        }
        return Ok(Repr { p, m, q, poly: Some(poly), exp, log, add, neg });
    }
    Err(Error::InvalidField(format!("no generator found for GF({q}); polynomial not irreducible?")))
}
