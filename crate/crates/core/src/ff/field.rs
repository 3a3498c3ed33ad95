//! Prime-power fields `F_q`, `q = p^k <= 2^16`.
//!
//! Elements are stored as their canonical integer encoding
//! `sum coeffs[i] * p^i`, where `coeffs` are the coordinates in the power
//! basis of the modulus. The encoding doubles as the total order used for
//! canonical representatives throughout the crate.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Desk-scale cap on the field size.
pub const MAX_FIELD_SIZE: u64 = 1 << 16;

/// Tables up to this many entries are materialised for addition.
const ADD_TABLE_LIMIT: usize = 1 << 20;

/// An element of some `F_q`, as its canonical encoding.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    /// The integer encoding `sum coeffs[i] * p^i`.
    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Unchecked conversion for indices already known to be in range.
    pub(crate) fn from_index(i: usize) -> FieldElement {
        FieldElement(i as u32)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

struct FieldData {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    // exp[i] = g^i for a fixed generator g of F_q^*, log is its inverse.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u32>>,
}

/// A finite field `F_{p^k}` with a fixed irreducible modulus.
///
/// Cloning is cheap; all tables are shared.
#[derive(Clone)]
pub struct Field(Arc<FieldData>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.k == other.0.k && self.0.modulus == other.0.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} (modulus {:?})", self.0.p, self.0.k, self.0.modulus)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Split a prime power into `(p, k)`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

// Dense polynomial helpers over F_p on digit vectors, lowest degree first.

fn trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small; Fermat.
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    trim(&mut r);
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let factor = (*r.last().unwrap() as u64 * lead_inv as u64 % p as u64) as u32;
        for (i, &c) in m.iter().enumerate() {
            let sub = (factor as u64 * c as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        trim(&mut r);
    }
    r
}

fn digits_of(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for slot in out.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    out
}

fn encode_digits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Trial division by every monic polynomial of degree `1..=k/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let k = f.len() - 1;
    for deg in 1..=k / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut g = digits_of(low as u32, p, deg);
            g.push(1);
            if poly_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn slow_mul(a: u32, b: u32, p: u32, k: usize, modulus: &[u32]) -> u32 {
    let da = digits_of(a, p, k);
    let db = digits_of(b, p, k);
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let r = poly_rem(&prod, modulus, p);
    encode_digits(&r, p)
}

impl Field {
    /// Build `F_{p^k}` with the smallest monic irreducible modulus, ordering
    /// candidates by the integer encoding of their non-leading coefficients.
    /// For `k = 1` the modulus is `x`.
    pub fn new(p: u64, k: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(Error::ZeroDegree);
        }
        let q = p.checked_pow(k).filter(|&q| q <= MAX_FIELD_SIZE);
        let q = q.ok_or(Error::TooLarge { p, k })? as u32;
        let p = p as u32;
        let ku = k as usize;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            (0..q)
                .map(|low| {
                    let mut f = digits_of(low, p, ku);
                    f.push(1);
                    f
                })
                .find(|f| is_irreducible(f, p))
                .expect("an irreducible polynomial of every degree exists")
        };
        Ok(Field(Arc::new(Self::tables(p, k, q, modulus))))
    }

    /// The field with `q` elements.
    pub fn with_order(q: u64) -> Result<Field> {
        match prime_power(q) {
            Some((p, k)) => Field::new(p, k),
            None if q < 2 => Err(Error::NotPrime(q)),
            None => Err(Error::NotPrime(q)),
        }
    }

    fn tables(p: u32, k: u32, q: u32, modulus: Vec<u32>) -> FieldData {
        let ku = k as usize;
        let mul = |a: u32, b: u32| -> u32 {
            if ku == 1 {
                (a as u64 * b as u64 % p as u64) as u32
            } else {
                slow_mul(a, b, p, ku, &modulus)
            }
        };
        let order = q - 1;
        let mut exp = Vec::with_capacity(order as usize);
        for g in 1..q {
            exp.clear();
            let mut x = 1u32;
            loop {
                exp.push(x);
                x = mul(x, g);
                if x == 1 {
                    break;
                }
            }
            if exp.len() as u32 == order {
                break;
            }
        }
        let mut log = vec![0u32; q as usize];
        for (i, &x) in exp.iter().enumerate() {
            log[x as usize] = i as u32;
        }
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits_of(a, p, ku).iter().map(|&c| (p - c) % p).collect();
                encode_digits(&d, p)
            })
            .collect();
        let add_digits = |a: u32, b: u32| -> u32 {
            let (mut a, mut b) = (a, b);
            let mut out = 0u32;
            let mut scale = 1u32;
            for _ in 0..ku {
                out += ((a % p + b % p) % p) * scale;
                a /= p;
                b /= p;
                scale = scale.wrapping_mul(p);
            }
            out
        };
        let add = ((q as usize) * (q as usize) <= ADD_TABLE_LIMIT && ku > 1).then(|| {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b);
                }
            }
            t
        });
        FieldData {
            p,
            k,
            q,
            modulus,
            exp,
            log,
            neg,
            add,
        }
    }

    pub fn p(&self) -> u32 {
        self.0.p
    }

    pub fn k(&self) -> u32 {
        self.0.k
    }

    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Monic modulus, lowest degree first.
    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::ZERO
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::ONE
    }

    /// The element with the given encoding.
    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value < self.0.q as u64 {
            Ok(FieldElement(value as u32))
        } else {
            Err(Error::NotAnElement {
                value,
                q: self.0.q,
            })
        }
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.0.p as i64) as u32)
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.0.q).map(FieldElement)
    }

    /// Nonzero elements in canonical order.
    pub fn nonzero(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.0.q).map(FieldElement)
    }

    /// Power-basis coordinates of `a`.
    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        digits_of(a.0, self.0.p, self.0.k as usize)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement> {
        if coeffs.len() != self.0.k as usize {
            return Err(Error::ArityMismatch {
                expected: self.0.k as usize,
                got: coeffs.len(),
            });
        }
        if let Some(&c) = coeffs.iter().find(|&&c| c >= self.0.p) {
            return Err(Error::NotAnElement {
                value: c as u64,
                q: self.0.p,
            });
        }
        Ok(FieldElement(encode_digits(coeffs, self.0.p)))
    }

    /// The power-basis units `1, x, ..., x^{k-1}`, which generate the
    /// additive group.
    pub fn additive_basis(&self) -> Vec<FieldElement> {
        (0..self.0.k).map(|i| FieldElement(self.0.p.pow(i))).collect()
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let d = &*self.0;
        if d.k == 1 {
            let s = a.0 + b.0;
            return FieldElement(if s >= d.p { s - d.p } else { s });
        }
        if let Some(t) = &d.add {
            return FieldElement(t[(a.0 * d.q + b.0) as usize]);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut out = 0;
        let mut scale = 1;
        for _ in 0..d.k {
            out += ((x % d.p + y % d.p) % d.p) * scale;
            x /= d.p;
            y /= d.p;
            scale *= d.p;
        }
        FieldElement(out)
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let d = &*self.0;
        let n = d.q - 1;
        let e = d.log[a.0 as usize] + d.log[b.0 as usize];
        FieldElement(d.exp[(if e >= n { e - n } else { e }) as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = &*self.0;
        let n = d.q - 1;
        Ok(FieldElement(d.exp[((n - d.log[a.0 as usize]) % n) as usize]))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return FieldElement::ONE;
        }
        if a.is_zero() {
            return FieldElement::ZERO;
        }
        let d = &*self.0;
        let n = (d.q - 1) as u64;
        let idx = (d.log[a.0 as usize] as u64 * (e % n)) % n;
        FieldElement(d.exp[idx as usize])
    }

    /// A fixed generator of the multiplicative group.
    pub fn generator(&self) -> FieldElement {
        FieldElement(*self.0.exp.get(1).unwrap_or(&1))
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: FieldElement) -> Result<u32> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.0.q - 1;
        let l = self.0.log[a.0 as usize];
        Ok(n / gcd(n, l))
    }

    /// The unique subgroup of `F_q^*` of the given order.
    pub fn multiplicative_subgroup(&self, order: u32) -> Result<Vec<FieldElement>> {
        let n = self.0.q - 1;
        if order == 0 || !n.is_multiple_of(order) {
            return Err(Error::InvalidGroup(format!(
                "F_{}^* has no subgroup of order {order}",
                self.0.q
            )));
        }
        let step = n / order;
        let mut h: Vec<FieldElement> = (0..order)
            .map(|i| FieldElement(self.0.exp[(i * step) as usize]))
            .collect();
        h.sort();
        Ok(h)
    }

    /// Check that `a` is an encoding of this field.
    pub fn check(&self, a: FieldElement) -> Result<FieldElement> {
        self.element(a.0 as u64)
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_f2() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.q(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.add(f.one(), f.one()), f.zero());
    }

    #[test]
    fn f9_uses_x_squared_plus_one() {
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
        // x is encoded as 3; x * x = -1 = 2.
        let x = f.element(3).unwrap();
        assert_eq!(f.mul(x, x), f.element(2).unwrap());
    }

    #[test]
    fn lex_smallest_modulus_matches_brute_force_scan() {
        // Oracle: scan monic degree-2 polynomials mod 3 by root search.
        let mut first = None;
        'outer: for hi in 0..3u32 {
            for lo in 0..3u32 {
                if (0..3u32).all(|x| (x * x + hi * x + lo) % 3 != 0) {
                    first = Some(vec![lo, hi, 1]);
                    break 'outer;
                }
            }
        }
        assert_eq!(Field::new(3, 2).unwrap().modulus(), first.unwrap().as_slice());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(Field::new(2, 17).unwrap_err(), Error::TooLarge { p: 2, k: 17 });
        assert!(Field::new(2, 16).is_ok());
        assert_eq!(Field::new(3, 0).unwrap_err(), Error::ZeroDegree);
    }

    #[test]
    fn inverse_in_f7() {
        let f = Field::new(7, 1).unwrap();
        let six = f.element(6).unwrap();
        assert_eq!(f.inv(six).unwrap(), six);
        assert_eq!(f.inv(f.zero()).unwrap_err(), Error::DivisionByZero);
    }

    #[test]
    fn additive_inverse_everywhere() {
        for q in [2, 4, 8, 9, 25, 27, 49] {
            let f = Field::with_order(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.add(x, f.neg(x)), f.zero());
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for q in [2, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = Field::with_order(q).unwrap();
            for a in f.elements() {
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_additive() {
        for q in [4, 8, 9, 25, 27, 49] {
            let f = Field::with_order(q).unwrap();
            let p = f.p() as u64;
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
                }
            }
        }
    }

    #[test]
    fn table_mul_matches_schoolbook() {
        let f = Field::new(3, 3).unwrap();
        for a in f.elements() {
            for b in f.elements() {
                let slow = slow_mul(a.value(), b.value(), 3, 3, f.modulus());
                assert_eq!(f.mul(a, b).value(), slow);
            }
        }
    }

    #[test]
    fn large_field_without_add_table() {
        let f = Field::new(2, 16).unwrap();
        let a = f.element(0xBEEF).unwrap();
        let b = f.element(0x1234).unwrap();
        assert_eq!(f.add(a, b).value(), 0xBEEF ^ 0x1234);
        assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
    }

    #[test]
    fn multiplicative_subgroups() {
        let f = Field::new(13, 1).unwrap();
        let h = f.multiplicative_subgroup(3).unwrap();
        assert_eq!(h.iter().map(|x| x.value()).collect::<Vec<_>>(), vec![1, 3, 9]);
        assert!(f.multiplicative_subgroup(5).is_err());
        let f7 = Field::new(7, 1).unwrap();
        let pm = f7.multiplicative_subgroup(2).unwrap();
        assert_eq!(pm.iter().map(|x| x.value()).collect::<Vec<_>>(), vec![1, 6]);
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }
}
