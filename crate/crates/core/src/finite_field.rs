//! Arithmetic in GF(p^k) and square matrices over it.
//!
//! Elements are encoded as a single integer by packing the coefficients of
//! their polynomial representative in base `p` (constant term lowest). This
//! code is the canonical key used for hashing matrices and projective points.
//!
//! Moduli are fixed for the fields the group constructions rely on:
//! GF(4) uses x²+x+1, GF(8) uses x³+x+1, GF(64) uses x⁶+x+1 and prime fields
//! use x. Other fields take the first monic irreducible polynomial in
//! coefficient-code order.

use std::fmt;

use crate::arith::is_prime;
use crate::error::{Error, Result};

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 4096;
/// Iteration cap for [`Field::mat_order`].
pub const MATRIX_ORDER_CAP: u64 = 1_000_000;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub u32);

impl FieldElement {
    pub fn code(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field GF(p^k) with a fixed modulus and log/exp tables.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn fixed_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    match (p, k) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (2, 6) => Some(vec![1, 1, 0, 0, 0, 0, 1]),
        _ => None,
    }
}

impl Field {
    /// Builds GF(p^k).
    pub fn new(p: u32, k: u32) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if !(1..=8).contains(&k) {
            return Err(Error::UnsupportedField {
                p,
                k,
                reason: "degree must be in 1..=8",
            });
        }
        let q = (p as u64).pow(k);
        if q > MAX_FIELD_SIZE as u64 {
            return Err(Error::UnsupportedField {
                p,
                k,
                reason: "field size exceeds 4096",
            });
        }
        let q = q as u32;
        let modulus = match fixed_modulus(p, k) {
            Some(m) => m,
            None => search_modulus(p, k).ok_or(Error::NoModulus { p, k })?,
        };
        if k > 1 && !is_irreducible(&modulus, p) {
            return Err(Error::NoModulus { p, k });
        }
        let mut field = Field {
            p,
            k,
            q,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
        };
        field.build_tables()?;
        Ok(field)
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn with_order(q: u32) -> Result<Field> {
        match crate::arith::prime_power(q as u64) {
            Some((p, k)) => Field::new(p as u32, k),
            None => Err(Error::InvalidParameter {
                name: "field",
                reason: format!("{q} is not a prime power"),
            }),
        }
    }

    fn build_tables(&mut self) -> Result<()> {
        let q = self.q;
        if q == 2 {
            self.exp = vec![1];
            self.log = vec![0, 0];
            return Ok(());
        }
        for cand in 2..q {
            let mut x = 1u32;
            let mut exp = Vec::with_capacity(q as usize - 1);
            loop {
                exp.push(x);
                x = self.slow_mul(x, cand);
                if x == 1 {
                    break;
                }
            }
            if exp.len() == q as usize - 1 {
                let mut log = vec![0u32; q as usize];
                for (i, &e) in exp.iter().enumerate() {
                    log[e as usize] = i as u32;
                }
                self.exp = exp;
                self.log = log;
                return Ok(());
            }
        }
        Err(Error::NoModulus {
            p: self.p,
            k: self.k,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn size(&self) -> u32 {
        self.q
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The element `x` of the polynomial basis (equal to 0 in prime fields).
    pub fn x(&self) -> FieldElement {
        if self.k == 1 {
            FieldElement(0)
        } else {
            FieldElement(self.p)
        }
    }

    /// The generator of the multiplicative group used for the log tables.
    pub fn primitive(&self) -> FieldElement {
        FieldElement(*self.exp.get(1).unwrap_or(&1))
    }

    pub fn element(&self, code: u32) -> FieldElement {
        FieldElement(code % self.q)
    }

    /// Embeds an integer through the prime subfield.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.q).map(FieldElement)
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.k as usize);
        let mut c = a.0;
        for _ in 0..self.k {
            out.push(c % self.p);
            c /= self.p;
        }
        out
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            code = code * self.p + c % self.p;
        }
        FieldElement(code)
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.p == 2 {
            return FieldElement(a.0 ^ b.0);
        }
        let (mut x, mut y) = (a.0, b.0);
        let mut code = 0;
        let mut place = 1;
        for _ in 0..self.k {
            code += ((x % self.p + y % self.p) % self.p) * place;
            x /= self.p;
            y /= self.p;
            place *= self.p;
        }
        FieldElement(code)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if self.p == 2 {
            return a;
        }
        let mut x = a.0;
        let mut code = 0;
        let mut place = 1;
        for _ in 0..self.k {
            code += ((self.p - x % self.p) % self.p) * place;
            x /= self.p;
            place *= self.p;
        }
        FieldElement(code)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let n = self.q - 1;
        let s = (self.log[a.0 as usize] + self.log[b.0 as usize]) % n;
        FieldElement(self.exp[s as usize])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::SingularMatrix);
        }
        let n = self.q - 1;
        let l = self.log[a.0 as usize];
        Ok(FieldElement(self.exp[((n - l) % n) as usize]))
    }

    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if e == 0 {
            return self.one();
        }
        if a.0 == 0 {
            return FieldElement(0);
        }
        let n = (self.q - 1) as u64;
        let l = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((l * (e % n)) % n) as usize])
    }

    /// Signed exponent; negative powers of zero are treated as zero.
    pub fn pow_signed(&self, a: FieldElement, e: i64) -> FieldElement {
        let n = (self.q - 1) as i64;
        if a.0 == 0 {
            return if e == 0 { self.one() } else { FieldElement(0) };
        }
        self.pow(a, e.rem_euclid(n) as u64)
    }

    /// Multiplication by schoolbook polynomial product and reduction. Used
    /// to build the log tables and as an independent check of them.
    pub fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let k = self.k as usize;
        let ca = self.coeffs(FieldElement(a));
        let cb = self.coeffs(FieldElement(b));
        let mut prod = vec![0u32; 2 * k];
        for i in 0..k {
            for j in 0..k {
                prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
            }
        }
        // reduce using x^k = -(m_0 + ... + m_{k-1} x^{k-1})
        for d in (k..2 * k).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let sub = c * self.modulus[i] % p;
                let idx = d - k + i;
                prod[idx] = (prod[idx] + p - sub) % p;
            }
        }
        self.from_coeffs(&prod[..k]).0
    }

    pub fn identity_matrix(&self, dim: usize) -> Matrix {
        let mut entries = vec![FieldElement(0); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = FieldElement(1);
        }
        Matrix { dim, entries }
    }

    pub fn mat_mul(&self, a: &Matrix, b: &Matrix) -> Result<Matrix> {
        if a.dim != b.dim {
            return Err(Error::DimensionMismatch);
        }
        Ok(self.mat_mul_unchecked(a, b))
    }

    pub(crate) fn mat_mul_unchecked(&self, a: &Matrix, b: &Matrix) -> Matrix {
        let d = a.dim;
        let mut entries = vec![FieldElement(0); d * d];
        for i in 0..d {
            for j in 0..d {
                let mut acc = FieldElement(0);
                for t in 0..d {
                    acc = self.add(acc, self.mul(a.entries[i * d + t], b.entries[t * d + j]));
                }
                entries[i * d + j] = acc;
            }
        }
        Matrix { dim: d, entries }
    }

    pub fn mat_det(&self, a: &Matrix) -> FieldElement {
        let d = a.dim;
        let mut m = a.entries.clone();
        let mut det = self.one();
        for col in 0..d {
            let Some(pivot) = (col..d).find(|&r| !m[r * d + col].is_zero()) else {
                return self.zero();
            };
            if pivot != col {
                for c in 0..d {
                    m.swap(pivot * d + c, col * d + c);
                }
                det = self.neg(det);
            }
            let pv = m[col * d + col];
            det = self.mul(det, pv);
            let pinv = self.inv(pv).expect("pivot is nonzero");
            for r in col + 1..d {
                let factor = self.mul(m[r * d + col], pinv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..d {
                    let v = self.mul(factor, m[col * d + c]);
                    m[r * d + c] = self.sub(m[r * d + c], v);
                }
            }
        }
        det
    }

    pub fn mat_inv(&self, a: &Matrix) -> Result<Matrix> {
        let d = a.dim;
        let mut m = a.entries.clone();
        let mut inv = self.identity_matrix(d).entries;
        for col in 0..d {
            let pivot = (col..d)
                .find(|&r| !m[r * d + col].is_zero())
                .ok_or(Error::SingularMatrix)?;
            if pivot != col {
                for c in 0..d {
                    m.swap(pivot * d + c, col * d + c);
                    inv.swap(pivot * d + c, col * d + c);
                }
            }
            let pinv = self.inv(m[col * d + col])?;
            for c in 0..d {
                m[col * d + c] = self.mul(m[col * d + c], pinv);
                inv[col * d + c] = self.mul(inv[col * d + c], pinv);
            }
            for r in 0..d {
                if r == col {
                    continue;
                }
                let factor = m[r * d + col];
                if factor.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let v = self.mul(factor, m[col * d + c]);
                    m[r * d + c] = self.sub(m[r * d + c], v);
                    let w = self.mul(factor, inv[col * d + c]);
                    inv[r * d + c] = self.sub(inv[r * d + c], w);
                }
            }
        }
        Ok(Matrix {
            dim: d,
            entries: inv,
        })
    }

    /// Least `m ≥ 1` with `a^m = 1`, by iteration up to [`MATRIX_ORDER_CAP`].
    pub fn mat_order(&self, a: &Matrix) -> Result<u64> {
        let id = self.identity_matrix(a.dim);
        let mut x = a.clone();
        for m in 1..=MATRIX_ORDER_CAP {
            if x == id {
                return Ok(m);
            }
            x = self.mat_mul_unchecked(&x, a);
        }
        Err(Error::OrderCapExceeded {
            cap: MATRIX_ORDER_CAP,
        })
    }

    /// `M · v` for a column vector.
    pub fn mat_vec(&self, a: &Matrix, v: &[FieldElement]) -> Vec<FieldElement> {
        let d = a.dim;
        (0..d)
            .map(|i| {
                (0..d).fold(self.zero(), |acc, t| {
                    self.add(acc, self.mul(a.entries[i * d + t], v[t]))
                })
            })
            .collect()
    }

    /// Scales a matrix so that its first nonzero entry (row-major) is 1.
    pub fn projective_normalize(&self, a: &Matrix) -> Matrix {
        match a.entries.iter().find(|e| !e.is_zero()) {
            Some(&lead) => {
                let s = self.inv(lead).expect("nonzero");
                Matrix {
                    dim: a.dim,
                    entries: a.entries.iter().map(|&e| self.mul(e, s)).collect(),
                }
            }
            None => a.clone(),
        }
    }

    /// All invertible `dim × dim` matrices, in entry-code order.
    pub fn general_linear(&self, dim: usize) -> Result<Vec<Matrix>> {
        let total = (self.q as u64).checked_pow((dim * dim) as u32);
        match total {
            Some(t) if t <= 50_000_000 => {}
            _ => {
                return Err(Error::UnsupportedField {
                    p: self.p,
                    k: self.k,
                    reason: "general linear group too large to enumerate",
                })
            }
        }
        let total = total.unwrap_or(0);
        let mut out = Vec::new();
        for code in 0..total {
            let mut c = code;
            let entries = (0..dim * dim)
                .map(|_| {
                    let e = FieldElement((c % self.q as u64) as u32);
                    c /= self.q as u64;
                    e
                })
                .collect();
            let m = Matrix { dim, entries };
            if !self.mat_det(&m).is_zero() {
                out.push(m);
            }
        }
        Ok(out)
    }
}

fn poly_rem(mut a: Vec<u32>, b: &[u32], p: u32) -> Vec<u32> {
    let db = b.len() - 1;
    let lead_inv = crate::arith::pow_mod(b[db] as u64, p as u64 - 2, p as u64) as u32;
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let f = top * lead_inv % p;
            let shift = a.len() - 1 - db;
            for (i, &bc) in b.iter().enumerate() {
                let idx = shift + i;
                a[idx] = (a[idx] + p - f * bc % p) % p;
            }
        }
        a.pop();
    }
    a
}

/// Trial division by every monic polynomial of degree ≤ k/2.
pub fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = poly.len() - 1;
    if k <= 1 {
        return k == 1;
    }
    for d in 1..=k / 2 {
        let count = (p as u64).pow(d as u32);
        for code in 0..count {
            let mut c = code;
            let mut div: Vec<u32> = (0..d)
                .map(|_| {
                    let v = (c % p as u64) as u32;
                    c /= p as u64;
                    v
                })
                .collect();
            div.push(1);
            if poly_rem(poly.to_vec(), &div, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn search_modulus(p: u32, k: u32) -> Option<Vec<u32>> {
    let count = (p as u64).pow(k);
    (0..count).find_map(|code| {
        let mut c = code;
        let mut poly: Vec<u32> = (0..k)
            .map(|_| {
                let v = (c % p as u64) as u32;
                c /= p as u64;
                v
            })
            .collect();
        poly.push(1);
        is_irreducible(&poly, p).then_some(poly)
    })
}

/// Square matrix over a [`Field`], stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub dim: usize,
    pub entries: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_codes(dim: usize, codes: &[u32]) -> Result<Matrix> {
        if codes.len() != dim * dim {
            return Err(Error::DimensionMismatch);
        }
        Ok(Matrix {
            dim,
            entries: codes.iter().map(|&c| FieldElement(c)).collect(),
        })
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        self.entries[row * self.dim + col]
    }

    pub fn codes(&self) -> Vec<u32> {
        self.entries.iter().map(|e| e.0).collect()
    }
}

/// Points of PG(1, q): index `i < q` is `[i:1]`, index `q` is `[1:0]`.
#[derive(Clone, Debug)]
pub struct ProjectiveLine<'f> {
    field: &'f Field,
}

impl<'f> ProjectiveLine<'f> {
    pub fn new(field: &'f Field) -> Self {
        ProjectiveLine { field }
    }

    pub fn len(&self) -> usize {
        self.field.size() as usize + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn points(&self) -> Vec<(FieldElement, FieldElement)> {
        let mut pts: Vec<_> = self
            .field
            .elements()
            .map(|x| (x, self.field.one()))
            .collect();
        pts.push((self.field.one(), self.field.zero()));
        pts
    }

    pub fn index_of(&self, x: FieldElement, y: FieldElement) -> Option<usize> {
        if !y.is_zero() {
            let inv = self.field.inv(y).ok()?;
            Some(self.field.mul(x, inv).0 as usize)
        } else if !x.is_zero() {
            Some(self.field.size() as usize)
        } else {
            None
        }
    }

    /// Image of a point under `[[a,b],[c,d]]` acting on column vectors.
    pub fn act(&self, m: &Matrix, point: usize) -> Result<usize> {
        if m.dim != 2 {
            return Err(Error::DimensionMismatch);
        }
        if self.field.mat_det(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.act_unchecked(m, point))
    }

    fn act_unchecked(&self, m: &Matrix, point: usize) -> usize {
        let f = self.field;
        let (x, y) = if point == f.size() as usize {
            (f.one(), f.zero())
        } else {
            (FieldElement(point as u32), f.one())
        };
        let nx = f.add(f.mul(m.get(0, 0), x), f.mul(m.get(0, 1), y));
        let ny = f.add(f.mul(m.get(1, 0), x), f.mul(m.get(1, 1), y));
        self.index_of(nx, ny)
            .expect("invertible matrix maps points to points")
    }

    /// The permutation of point indices induced by `m`.
    pub fn permutation(&self, m: &Matrix) -> Result<Vec<u16>> {
        if m.dim != 2 {
            return Err(Error::DimensionMismatch);
        }
        if self.field.mat_det(m).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok((0..self.len())
            .map(|pt| self.act_unchecked(m, pt) as u16)
            .collect())
    }
}
