//! Exact arithmetic in GF(p^r).
//!
//! Elements are stored as their canonical index: the base-`p` number whose
//! digits are the coefficients of the element in the power basis
//! `1, g, g^2, ...` of the modulus root `g`. Index order is the canonical
//! element order used everywhere else in the crate (point orderings, root
//! selection, ...). Multiplication goes through discrete-log tables built
//! once per field.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// Fields up to this order get a full addition table.
const ADD_TABLE_LIMIT: u32 = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not prime")]
    NonPrimeP(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("modulus is not a monic irreducible polynomial of degree {0}")]
    ReducibleModulus(u32),
    #[error("field order {p}^{r} exceeds the bound {bound}")]
    FieldTooLarge { p: u32, r: u32, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("element index {0} is out of range")]
    ElementOutOfRange(u32),
    #[error("coefficient vector has wrong length or entries outside [0, p)")]
    BadCoefficients,
    #[error("basis elements are linearly dependent over the prime field")]
    SingularBasis,
    #[error("extension degree {0} is odd, there is no index-2 subfield")]
    OddExtensionDegree(u32),
    #[error("GF({p}^{r}) has no subfield of degree {s}")]
    NoSubfield { p: u32, r: u32, s: u32 },
}

/// A field element, identified by its canonical index.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Elem(pub u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    #[inline]
    pub fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// JSON descriptor of a field: `{"p":…, "r":…, "modulus":[c_0,…,c_r]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub r: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<Vec<u32>>,
}

struct Inner {
    p: u32,
    r: u32,
    q: u32,
    modulus: Vec<u32>,
    basis: Vec<Elem>,
    // Column j holds the power-basis digits of basis[j].
    basis_matrix: Vec<Vec<u32>>,
    basis_inverse: Vec<Vec<u32>>,
    generator: Elem,
    // exp has length 2(q-1) so products of logs need no reduction.
    exp: Vec<u32>,
    log: Vec<u32>,
    add_table: Option<Vec<u32>>,
    neg: Vec<u32>,
    trace: Vec<u32>,
}

/// The finite field GF(p^r). Cheap to clone; immutable after construction.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; {:?})", self.p(), self.r(), self.0.modulus)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.r == other.0.r
                && self.0.modulus == other.0.modulus
                && self.0.basis == other.0.basis)
    }
}

impl Eq for Field {}

impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.descriptor().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Field {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let desc = FieldDescriptor::deserialize(d)?;
        Field::from_descriptor(&desc).map_err(serde::de::Error::custom)
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while (d as u64) * (d as u64) <= n as u64 {
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

// ---- polynomial helpers over F_p (coefficient vectors, low degree first) ----

fn poly_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, so a^(p-2)
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

fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut a = poly_trim(a.to_vec());
    let m = poly_trim(m.to_vec());
    let dm = m.len() - 1;
    let lead_inv = inv_mod(m[dm], p);
    while a.len() > dm {
        let da = a.len() - 1;
        let c = (a[da] as u64 * lead_inv as u64 % p as u64) as u32;
        if c != 0 {
            for (i, &mi) in m.iter().enumerate() {
                let idx = da - dm + i;
                a[idx] = ((a[idx] as u64 + (p - c) as u64 * mi as u64) % p as u64) as u32;
            }
        }
        a = poly_trim(a);
    }
    a
}

fn is_irreducible(modulus: &[u32], p: u32) -> bool {
    let r = modulus.len() - 1;
    // any monic factor of degree d <= r/2 would divide it
    for d in 1..=r / 2 {
        let count = (p as u64).pow(d as u32);
        for n in 0..count {
            let mut g = Vec::with_capacity(d + 1);
            let mut t = n;
            for _ in 0..d {
                g.push((t % p as u64) as u32);
                t /= p as u64;
            }
            g.push(1);
            if poly_rem(modulus, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn digits_of(idx: u32, p: u32, r: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(r as usize);
    let mut t = idx;
    for _ in 0..r {
        out.push(t % p);
        t /= p;
    }
    out
}

fn index_of(digits: &[u32], p: u32) -> u32 {
    digits.iter().rev().fold(0u32, |acc, &d| acc * p + d)
}

// Multiplication of digit vectors modulo the (monic) modulus.
fn mulmod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let r = modulus.len() - 1;
    let mut prod = vec![0u64; 2 * r];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u64 * bj as u64) % p as u64;
        }
    }
    for deg in (r..2 * r).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for i in 0..r {
            let sub = c * modulus[i] as u64 % p as u64;
            prod[deg - r + i] = (prod[deg - r + i] + p as u64 - sub) % p as u64;
        }
    }
    prod[..r].iter().map(|&x| x as u32).collect()
}

// Inverse of an r×r matrix over F_p, or None if singular.
fn mat_inverse_mod(m: &[Vec<u32>], p: u32) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut v: Vec<u64> = row.iter().map(|&x| x as u64).collect();
            v.extend((0..n).map(|j| (i == j) as u64));
            v
        })
        .collect();
    let p64 = p as u64;
    for col in 0..n {
        let piv = (col..n).find(|&r| a[r][col] != 0)?;
        a.swap(col, piv);
        let inv = inv_mod(a[col][col] as u32, p) as u64;
        for x in a[col].iter_mut() {
            *x = *x * inv % p64;
        }
        for row in 0..n {
            if row != col && a[row][col] != 0 {
                let c = a[row][col];
                for j in 0..2 * n {
                    a[row][j] = (a[row][j] + p64 - c * a[col][j] % p64) % p64;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].iter().map(|&x| x as u32).collect()).collect())
}

impl Field {
    /// Builds GF(p^r). When `modulus` is `None` the lexicographically least
    /// monic irreducible polynomial is used (coefficients compared from the
    /// degree r-1 term down). `modulus` lists `c_0, …, c_r` and must be monic.
    pub fn new(p: u32, r: u32, modulus: Option<&[u32]>) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NonPrimeP(p));
        }
        if r == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q64 = (p as u64).checked_pow(r).unwrap_or(u64::MAX);
        if q64 > MAX_FIELD_ORDER {
            return Err(FieldError::FieldTooLarge { p, r, bound: MAX_FIELD_ORDER });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != r as usize + 1 || m[r as usize] != 1 || m.iter().any(|&c| c >= p) {
                    return Err(FieldError::ReducibleModulus(r));
                }
                if !is_irreducible(m, p) {
                    return Err(FieldError::ReducibleModulus(r));
                }
                m.to_vec()
            }
            None => Self::least_irreducible(p, r),
        };
        let basis = (0..r).map(|i| Elem(p.pow(i))).collect();
        Self::build(p, r, modulus, basis)
    }

    /// GF(p) with the trivial modulus `x`.
    pub fn prime(p: u32) -> Result<Field, FieldError> {
        Field::new(p, 1, None)
    }

    pub fn from_descriptor(desc: &FieldDescriptor) -> Result<Field, FieldError> {
        Field::new(desc.p, desc.r, desc.modulus.as_deref())
    }

    /// Smallest field GF(p^r) of order `q`, with the default modulus.
    pub fn of_order(q: u32) -> Result<Field, FieldError> {
        let f = prime_factors(q);
        if f.len() != 1 {
            return Err(FieldError::NonPrimeP(q));
        }
        let p = f[0];
        let mut r = 0;
        let mut t = q;
        while t > 1 {
            t /= p;
            r += 1;
        }
        Field::new(p, r, None)
    }

    pub fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor { p: self.p(), r: self.r(), modulus: Some(self.0.modulus.clone()) }
    }

    fn least_irreducible(p: u32, r: u32) -> Vec<u32> {
        if r == 1 {
            return vec![0, 1];
        }
        let count = (p as u64).pow(r);
        for n in 0..count {
            let mut m = digits_of(n as u32, p, r);
            m.push(1);
            if m[0] != 0 && is_irreducible(&m, p) {
                return m;
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    fn build(p: u32, r: u32, modulus: Vec<u32>, basis: Vec<Elem>) -> Result<Field, FieldError> {
        let q = p.pow(r);
        let basis_matrix: Vec<Vec<u32>> =
            (0..r as usize).map(|i| basis.iter().map(|b| digits_of(b.0, p, r)[i]).collect()).collect();
        let basis_inverse = mat_inverse_mod(&basis_matrix, p).ok_or(FieldError::SingularBasis)?;

        // Find the least primitive element by checking its order against the
        // prime divisors of q - 1.
        let order = q - 1;
        let factors = prime_factors(order);
        let pow_slow = |base: &[u32], mut e: u32| -> Vec<u32> {
            let mut result = digits_of(1, p, r);
            let mut b = base.to_vec();
            while e > 0 {
                if e & 1 == 1 {
                    result = mulmod(&result, &b, &modulus, p);
                }
                b = mulmod(&b, &b, &modulus, p);
                e >>= 1;
            }
            result
        };
        let one = digits_of(1, p, r);
        let generator = (1..q)
            .find(|&g| {
                let d = digits_of(g, p, r);
                factors.iter().all(|&l| pow_slow(&d, order / l) != one)
            })
            .map(Elem)
            .unwrap_or(Elem::ONE);

        let mut exp = vec![0u32; 2 * order.max(1) as usize];
        let mut log = vec![0u32; q as usize];
        let gd = digits_of(generator.0, p, r);
        let mut cur = one.clone();
        for i in 0..order as usize {
            let idx = index_of(&cur, p);
            exp[i] = idx;
            log[idx as usize] = i as u32;
            cur = mulmod(&cur, &gd, &modulus, p);
        }
        for i in order as usize..exp.len() {
            exp[i] = exp[i - order as usize];
        }

        let add_digits = |a: u32, b: u32| -> u32 {
            let (da, db) = (digits_of(a, p, r), digits_of(b, p, r));
            let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
            index_of(&s, p)
        };
        let add_table = if p != 2 && r > 1 && q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_digits(a, b);
                }
            }
            Some(t)
        } else {
            None
        };
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = digits_of(a, p, r).iter().map(|&x| (p - x) % p).collect();
                index_of(&d, p)
            })
            .collect();

        let mut inner = Inner {
            p,
            r,
            q,
            modulus,
            basis,
            basis_matrix,
            basis_inverse,
            generator,
            exp,
            log,
            add_table,
            neg,
            trace: Vec::new(),
        };
        let tmp = Field(Arc::new(Inner { trace: Vec::new(), ..inner_clone(&inner) }));
        inner.trace = (0..q)
            .map(|x| {
                let mut acc = Elem::ZERO;
                let mut y = Elem(x);
                for _ in 0..r {
                    acc = tmp.add(acc, y);
                    y = tmp.pow(y, p as u64);
                }
                debug_assert!(acc.0 < p, "trace must land in the prime field");
                acc.0
            })
            .collect();
        Ok(Field(Arc::new(inner)))
    }

    /// Same field with a different F_p-basis for [`Field::basis_expand`].
    pub fn with_basis(&self, basis: &[Elem]) -> Result<Field, FieldError> {
        if basis.len() != self.r() as usize || basis.iter().any(|b| b.0 >= self.q()) {
            return Err(FieldError::SingularBasis);
        }
        Self::build(self.p(), self.r(), self.0.modulus.clone(), basis.to_vec())
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn r(&self) -> u32 {
        self.0.r
    }

    /// Field order `p^r`.
    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.0.modulus
    }

    pub fn basis(&self) -> &[Elem] {
        &self.0.basis
    }

    /// The primitive element used for the log tables (least in canonical order).
    pub fn generator(&self) -> Elem {
        self.0.generator
    }

    pub fn element(&self, index: u32) -> Result<Elem, FieldError> {
        if index < self.q() {
            Ok(Elem(index))
        } else {
            Err(FieldError::ElementOutOfRange(index))
        }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + Clone {
        (0..self.q()).map(Elem)
    }

    /// Image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p() as i64) as u32)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let inner = &*self.0;
        if inner.p == 2 {
            Elem(a.0 ^ b.0)
        } else if inner.r == 1 {
            let s = a.0 + b.0;
            Elem(if s >= inner.p { s - inner.p } else { s })
        } else if let Some(t) = &inner.add_table {
            Elem(t[(a.0 * inner.q + b.0) as usize])
        } else {
            let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
            for _ in 0..inner.r {
                out += ((x % inner.p + y % inner.p) % inner.p) * place;
                x /= inner.p;
                y /= inner.p;
                place *= inner.p;
            }
            Elem(out)
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        Elem(self.0.neg[a.0 as usize])
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.0 == 0 || b.0 == 0 {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        Elem(inner.exp[(inner.log[a.0 as usize] + inner.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let inner = &*self.0;
        let order = inner.q - 1;
        let l = inner.log[a.0 as usize];
        Ok(Elem(inner.exp[((order - l) % order) as usize]))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` for a non-negative exponent; `0^0 = 1`.
    pub fn pow(&self, a: Elem, e: u64) -> Elem {
        if e == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let inner = &*self.0;
        let order = (inner.q - 1) as u64;
        let l = inner.log[a.0 as usize] as u64;
        Elem(inner.exp[((l * (e % order)) % order) as usize])
    }

    /// `a^e` for any integer exponent; negative powers of zero fail.
    pub fn pow_signed(&self, a: Elem, e: i64) -> Result<Elem, FieldError> {
        if e >= 0 {
            Ok(self.pow(a, e as u64))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// Discrete log to base [`Field::generator`]; `None` for zero.
    pub fn log(&self, a: Elem) -> Option<u32> {
        (!a.is_zero()).then(|| self.0.log[a.0 as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: Elem) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.q() - 1;
        Some(n / gcd(l, n))
    }

    pub fn is_primitive(&self, a: Elem) -> bool {
        self.order(a) == Some(self.q() - 1)
    }

    /// Least primitive element in canonical order.
    pub fn least_primitive(&self) -> Elem {
        self.elements().find(|&a| self.is_primitive(a)).unwrap_or(Elem::ONE)
    }

    /// Absolute trace `Tr(a) = Σ_{i<r} a^{p^i}`, returned as an integer in `[0, p)`.
    #[inline]
    pub fn trace(&self, a: Elem) -> u32 {
        self.0.trace[a.0 as usize]
    }

    /// `a^{p^s}`: the `s`-th power of the absolute Frobenius.
    pub fn frobenius(&self, a: Elem, s: u32) -> Elem {
        self.pow(a, (self.p() as u64).pow(s % self.r()))
    }

    /// Degree of the index-2 subfield over F_p, i.e. `r / 2`.
    pub fn half_degree(&self) -> Result<u32, FieldError> {
        if self.r() % 2 == 1 {
            Err(FieldError::OddExtensionDegree(self.r()))
        } else {
            Ok(self.r() / 2)
        }
    }

    /// Order of the index-2 subfield: the `q` in F_{q^2}.
    pub fn half_order(&self) -> Result<u32, FieldError> {
        Ok(self.p().pow(self.half_degree()?))
    }

    /// Conjugation `x ↦ x^q` of F_{q^2} over F_q.
    pub fn conjugate(&self, a: Elem) -> Result<Elem, FieldError> {
        Ok(self.frobenius(a, self.half_degree()?))
    }

    /// Elements of the subfield of order `p^s` (fixed points of `x ↦ x^{p^s}`).
    pub fn subfield_elements(&self, s: u32) -> Result<Vec<Elem>, FieldError> {
        if s == 0 || !self.r().is_multiple_of(s) {
            return Err(FieldError::NoSubfield { p: self.p(), r: self.r(), s });
        }
        Ok(self.elements().filter(|&x| self.frobenius(x, s) == x).collect())
    }

    /// Coordinates of `a` in the field's F_p-basis.
    pub fn basis_expand(&self, a: Elem) -> Vec<u32> {
        let inner = &*self.0;
        let d = digits_of(a.0, inner.p, inner.r);
        inner
            .basis_inverse
            .iter()
            .map(|row| (row.iter().zip(&d).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % inner.p as u64) as u32)
            .collect()
    }

    /// Inverse of [`Field::basis_expand`].
    pub fn basis_combine(&self, coeffs: &[u32]) -> Result<Elem, FieldError> {
        let inner = &*self.0;
        if coeffs.len() != inner.r as usize || coeffs.iter().any(|&c| c >= inner.p) {
            return Err(FieldError::BadCoefficients);
        }
        let d: Vec<u32> = inner
            .basis_matrix
            .iter()
            .map(|row| {
                (row.iter().zip(coeffs).map(|(&x, &y)| x as u64 * y as u64).sum::<u64>() % inner.p as u64) as u32
            })
            .collect();
        Ok(Elem(index_of(&d, inner.p)))
    }

    /// Power-basis digits of `a` (the JSON element encoding).
    pub fn coefficients(&self, a: Elem) -> Vec<u32> {
        digits_of(a.0, self.p(), self.r())
    }

    pub fn from_coefficients(&self, coeffs: &[u32]) -> Result<Elem, FieldError> {
        if coeffs.len() != self.r() as usize || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(FieldError::BadCoefficients);
        }
        Ok(Elem(index_of(coeffs, self.p())))
    }

    /// Evaluates a polynomial (low degree first) at `x`.
    pub fn eval_poly(&self, coeffs: &[Elem], x: Elem) -> Elem {
        coeffs.iter().rev().fold(Elem::ZERO, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Wraps an element together with this field for checked arithmetic.
    pub fn wrap(&self, a: Elem) -> FieldElement {
        FieldElement { field: self.clone(), value: a }
    }

    /// Finds an embedding of `self` into `big` by locating the least root of
    /// `self`'s modulus in `big`.
    pub fn embed_into(&self, big: &Field) -> Result<Embedding, FieldError> {
        if self.p() != big.p() || !big.r().is_multiple_of(self.r()) {
            return Err(FieldError::NoSubfield { p: big.p(), r: big.r(), s: self.r() });
        }
        let modulus: Vec<Elem> = self.0.modulus.iter().map(|&c| Elem(c)).collect();
        let root = big.elements().find(|&x| big.eval_poly(&modulus, x).is_zero()).ok_or(FieldError::NoSubfield {
            p: big.p(),
            r: big.r(),
            s: self.r(),
        })?;
        let powers: Vec<Elem> = (0..self.r()).map(|i| big.pow(root, i as u64)).collect();
        let forward: Vec<Elem> = self
            .elements()
            .map(|a| {
                self.coefficients(a)
                    .iter()
                    .zip(&powers)
                    .fold(Elem::ZERO, |acc, (&c, &g)| big.add(acc, big.mul(Elem(c), g)))
            })
            .collect();
        let mut backward = vec![u32::MAX; big.q() as usize];
        for (i, b) in forward.iter().enumerate() {
            backward[b.0 as usize] = i as u32;
        }
        Ok(Embedding { small: self.clone(), big: big.clone(), forward, backward })
    }
}

// Inner is not Clone because of the Arc wrapper; this copies the tables
// needed to evaluate powers while the trace table is being filled.
fn inner_clone(inner: &Inner) -> Inner {
    Inner {
        p: inner.p,
        r: inner.r,
        q: inner.q,
        modulus: inner.modulus.clone(),
        basis: inner.basis.clone(),
        basis_matrix: inner.basis_matrix.clone(),
        basis_inverse: inner.basis_inverse.clone(),
        generator: inner.generator,
        exp: inner.exp.clone(),
        log: inner.log.clone(),
        add_table: inner.add_table.clone(),
        neg: inner.neg.clone(),
        trace: Vec::new(),
    }
}

pub(crate) fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A field homomorphism `small -> big`.
#[derive(Clone, Debug)]
pub struct Embedding {
    small: Field,
    big: Field,
    forward: Vec<Elem>,
    backward: Vec<u32>,
}

impl Embedding {
    pub fn small(&self) -> &Field {
        &self.small
    }

    pub fn big(&self) -> &Field {
        &self.big
    }

    pub fn map(&self, a: Elem) -> Elem {
        self.forward[a.0 as usize]
    }

    /// Preimage of `b`, if `b` lies in the image.
    pub fn preimage(&self, b: Elem) -> Option<Elem> {
        let v = self.backward[b.0 as usize];
        (v != u32::MAX).then_some(Elem(v))
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// An element bundled with its field, for arithmetic that must reject
/// operands from different fields.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: Elem,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn value(&self) -> Elem {
        self.value
    }

    pub fn apply(&self, op: ArithOp, rhs: &FieldElement) -> Result<FieldElement, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::FieldMismatch);
        }
        let f = &self.field;
        let (a, b) = (self.value, rhs.value);
        let value = match op {
            ArithOp::Add => f.add(a, b),
            ArithOp::Sub => f.sub(a, b),
            ArithOp::Mul => f.mul(a, b),
            ArithOp::Div => f.div(a, b)?,
        };
        Ok(f.wrap(value))
    }

    pub fn pow(&self, e: i64) -> Result<FieldElement, FieldError> {
        Ok(self.field.wrap(self.field.pow_signed(self.value, e)?))
    }

    pub fn trace(&self) -> u32 {
        self.field.trace(self.value)
    }

    pub fn basis_expand(&self) -> Vec<u32> {
        self.field.basis_expand(self.value)
    }
}
