//! Finite fields `F_q`, `q = p^m`, in a polynomial basis over `F_p`.
//!
//! An element is stored as the integer `sum(c_i * p^i)` of its coefficient
//! digits (constant digit least significant), which is also its serialized
//! form. Multiplication goes through log/exp tables built once per field.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest field order for which tables are built.
pub const MAX_ORDER: u64 = 1 << 20;

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    /// Monic modulus, lowest coefficient first, length `m + 1`.
    modulus: Vec<u32>,
    alpha: u32,
    /// `exp[i] = alpha^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    /// `log[alpha^i] = i`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A finite field with its canonical modulus and primitive element.
///
/// Cloning is cheap; equality compares `(p, m)`, which determines the
/// field completely since all choices are canonical.
#[derive(Clone)]
pub struct GaloisField(Arc<Tables>);

impl PartialEq for GaloisField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.m == other.0.m)
    }
}

impl Eq for GaloisField {}

impl fmt::Debug for GaloisField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.0.q)
    }
}

fn is_prime(n: u64) -> bool {
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

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Splits `q` as `p^m`.
pub fn prime_power(q: u64) -> Result<(u32, u32)> {
    if q < 2 {
        return Err(Error::NotPrimePower(q));
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut rest = q;
    let mut m = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        m += 1;
    }
    if rest != 1 || !is_prime(p) {
        return Err(Error::NotPrimePower(q));
    }
    Ok((p as u32, m))
}

// Dense polynomial helpers over F_p, lowest coefficient first.

fn fp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = fp_trim(a.to_vec());
    let db = b.len() - 1;
    let inv_lead = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = (r[r.len() - 1] as u64 * inv_lead as u64 % p as u64) as u32;
        for (i, &bi) in b.iter().enumerate() {
            let sub = (c as u64 * bi as u64 % p as u64) as u32;
            r[shift + i] = (r[shift + i] + p - sub) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn digits(mut v: u32, p: u32, m: u32) -> Vec<u32> {
    (0..m)
        .map(|_| {
            let d = v % p;
            v /= p;
            d
        })
        .collect()
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for low in 0..count {
            let mut g = digits(low as u32, p, d as u32);
            g.push(1);
            if fp_rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn slow_mul(a: u32, b: u32, p: u32, m: u32, modulus: &[u32]) -> u32 {
    let da = digits(a, p, m);
    let db = digits(b, p, m);
    let mut prod = vec![0u32; 2 * m as usize];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = ((prod[i + j] as u64 + x as u64 * y as u64) % p as u64) as u32;
        }
    }
    let r = fp_rem(&prod, modulus, p);
    let mut out = vec![0; m as usize];
    out[..r.len()].copy_from_slice(&r);
    undigits(&out, p)
}

impl GaloisField {
    /// Builds `F_{p^m}` with its canonical modulus and primitive element.
    pub fn new(p: u32, m: u32) -> Result<Self> {
        if !is_prime(p as u64) || m == 0 {
            return Err(Error::NotPrimePower((p as u64).saturating_pow(m)));
        }
        let q64 = (p as u64).checked_pow(m).unwrap_or(u64::MAX);
        if q64 > MAX_ORDER {
            return Err(Error::FieldTooLarge(q64));
        }
        let q = q64 as u32;
        let modulus = Self::canonical_modulus(p, m);

        let order = q - 1;
        let factors = prime_factors(order as u64);
        let slow_pow = |x: u32, mut e: u64| {
            let mut r = 1u32;
            let mut b = x;
            while e > 0 {
                if e & 1 == 1 {
                    r = slow_mul(r, b, p, m, &modulus);
                }
                b = slow_mul(b, b, p, m, &modulus);
                e >>= 1;
            }
            r
        };
        let alpha =
            (1..q).find(|&x| factors.iter().all(|&r| slow_pow(x, order as u64 / r) != 1)).expect("a finite field has a primitive element");

        let mut exp = Vec::with_capacity(2 * order as usize);
        let mut log = vec![0u32; q as usize];
        let mut cur = 1u32;
        for i in 0..order {
            exp.push(cur);
            log[cur as usize] = i;
            cur = slow_mul(cur, alpha, p, m, &modulus);
        }
        for i in 0..order as usize {
            exp.push(exp[i]);
        }
        Ok(GaloisField(Arc::new(Tables { p, m, q, modulus, alpha, exp, log })))
    }

    /// Builds the field of order `q`.
    pub fn with_order(q: u64) -> Result<Self> {
        let (p, m) = prime_power(q)?;
        Self::new(p, m)
    }

    /// Smallest monic irreducible polynomial of degree `m` over `F_p`,
    /// ordered by the integer value of its coefficient digits.
    pub fn canonical_modulus(p: u32, m: u32) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for low in 0..count {
            let mut f = digits(low as u32, p, m);
            f.push(1);
            if m == 1 || (f[0] != 0 && is_irreducible(&f, p)) {
                return f;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.m
    }

    pub fn order(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    /// Canonical primitive element: the smallest value of order `q - 1`.
    pub fn primitive(&self) -> u32 {
        self.0.alpha
    }

    pub fn contains(&self, x: u32) -> bool {
        x < self.0.q
    }

    /// Checks that `x` is a valid element encoding.
    pub fn element(&self, x: u64) -> Result<u32> {
        if x < self.0.q as u64 {
            Ok(x as u32)
        } else {
            Err(Error::NotAnElement { value: x, q: self.0.q as u64 })
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let t = &*self.0;
        if t.p == 2 {
            a ^ b
        } else if t.m == 1 {
            (a + b) % t.p
        } else {
            let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
            for _ in 0..t.m {
                out += ((a % t.p + b % t.p) % t.p) * place;
                a /= t.p;
                b /= t.p;
                place *= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let t = &*self.0;
        if t.p == 2 {
            a
        } else if t.m == 1 {
            (t.p - a) % t.p
        } else {
            let (mut a, mut out, mut place) = (a, 0, 1);
            for _ in 0..t.m {
                out += ((t.p - a % t.p) % t.p) * place;
                a /= t.p;
                place *= t.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let t = &*self.0;
        t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &*self.0;
        Ok(t.exp[((t.q - 1 - t.log[a as usize]) % (t.q - 1)) as usize])
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut result = 1;
        let mut base = a;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `alpha^k` for any integer `k`, negative exponents included.
    pub fn alpha_pow(&self, k: i64) -> u32 {
        let order = (self.0.q - 1) as i64;
        self.0.exp[k.rem_euclid(order) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: u32) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let order = (self.0.q - 1) as u64;
        let l = self.0.log[a as usize] as u64;
        Ok(order / gcd(order, l))
    }

    /// `alpha^((q-1)/n)`, an element of multiplicative order exactly `n`.
    pub fn root_of_unity(&self, n: u64) -> Result<u32> {
        let order = (self.0.q - 1) as u64;
        if n == 0 || !order.is_multiple_of(n) {
            return Err(Error::NotADivisor { n, q_minus_one: order });
        }
        Ok(self.pow(self.0.alpha, order / n))
    }

    /// The element `n * 1` (the image of an integer).
    pub fn from_int(&self, n: u64) -> u32 {
        (n % self.0.p as u64) as u32
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.0.q
    }

    /// Wraps a raw value as a checked [`FieldElement`].
    pub fn wrap(&self, x: u64) -> Result<FieldElement> {
        Ok(FieldElement { field: self.clone(), value: self.element(x)? })
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A field element that remembers its field, for checked arithmetic at API
/// boundaries. Bulk code works on raw `u32` values through [`GaloisField`].
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: GaloisField,
    value: u32,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.value, self.field)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &GaloisField {
        &self.field
    }

    /// Base-`p` digits, constant digit first.
    pub fn coeffs(&self) -> Vec<u32> {
        digits(self.value, self.field.0.p, self.field.0.m)
    }

    fn same_field(&self, rhs: &Self) -> Result<()> {
        if self.field == rhs.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        FieldElement { field: self.field.clone(), value }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.add(self.value, rhs.value)))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.sub(self.value, rhs.value)))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.mul(self.value, rhs.value)))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.div(self.value, rhs.value)?))
    }

    pub fn inv(&self) -> Result<Self> {
        Ok(self.with(self.field.inv(self.value)?))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }
}
