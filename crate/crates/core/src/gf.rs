//! Arithmetic in F_q, q = p^m.
//!
//! Elements are plain integer codes in `[0, q)`: the base-p digits of a code
//! are the coefficients of the element in the power basis `1, u, ..., u^(m-1)`
//! of `F_p[u]/(modulus)`. Code 0 is zero and code 1 is one. Multiplication
//! goes through log/antilog tables keyed by the primitive element; for
//! `q <= 256` full addition and multiplication tables are kept as well.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A field element, stored as its integer code.
pub type FieldElement = u32;

const MAX_ORDER: u64 = 1 << 16;
const SMALL_TABLES: u32 = 256;

#[derive(Clone)]
pub struct Field {
    inner: Arc<Tables>,
}

struct Tables {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
    primitive: u32,
    /// `exp[i] = primitive^i` for `i < 2(q-1)`.
    exp: Vec<u32>,
    log: Vec<u32>,
    neg: Vec<u32>,
    add: Option<Vec<u16>>,
    mul: Option<Vec<u16>>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p
                && self.inner.m == other.inner.m
                && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}[u]/({})", self.inner.p, fmt_fp_poly(&self.inner.modulus, 'u'))
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}", self.inner.q)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
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

/// Built-in defining polynomials, ascending coefficients over F_p.
fn default_modulus(p: u32, m: u32) -> Option<Vec<u32>> {
    match (p, m) {
        (_, 1) => Some(vec![0, 1]),
        (2, 2) => Some(vec![1, 1, 1]),
        (2, 3) => Some(vec![1, 1, 0, 1]),
        (3, 2) => Some(vec![2, 2, 1]),
        _ => None,
    }
}

// Small helpers on dense polynomials over F_p, used only while building a
// field (before any tables exist).

fn fp_trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn fp_rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut r = fp_trim(a.to_vec());
    let b = fp_trim(b.to_vec());
    let db = b.len() - 1;
    let lead_inv = fp_inv(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let c = r[dr] * lead_inv % p;
        for (i, &bi) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = (r[idx] + p * p - c * bi % p) % p;
        }
        r = fp_trim(r);
    }
    r
}

fn fp_inv(a: u32, p: u32) -> u32 {
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

fn fp_irreducible(f: &[u32], p: u32) -> bool {
    let deg = f.len() - 1;
    if deg <= 1 {
        return deg == 1;
    }
    for d in 1..=deg / 2 {
        let count = (p as u64).pow(d as u32);
        for lower in 0..count {
            let mut cand = Vec::with_capacity(d + 1);
            let mut t = lower;
            for _ in 0..d {
                cand.push((t % p as u64) as u32);
                t /= p as u64;
            }
            cand.push(1);
            if fp_rem(f, &cand, p).is_empty() {
                return false;
            }
        }
    }
    true
}

fn fmt_fp_poly(c: &[u32], var: char) -> String {
    let mut terms = Vec::new();
    for (k, &ck) in c.iter().enumerate().rev() {
        if ck == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        terms.push(match (ck, k) {
            (_, 0) => ck.to_string(),
            (1, _) => mono,
            _ => format!("{ck}{mono}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

struct Raw {
    p: u32,
    m: u32,
    q: u32,
    modulus: Vec<u32>,
}

impl Raw {
    fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0; self.m as usize];
        let mut t = a;
        for d in out.iter_mut() {
            *d = t % self.p;
            t /= self.p;
        }
        out
    }

    fn code(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.code(&s)
    }

    fn mul(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u32; da.len() + db.len()];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        let mut r = fp_rem(&prod, &self.modulus, self.p);
        r.resize(self.m as usize, 0);
        self.code(&r)
    }

    fn pow(&self, a: u32, mut e: u64) -> u32 {
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

    fn is_generator(&self, g: u32, divisors: &[u64]) -> bool {
        let order = (self.q - 1) as u64;
        g != 0 && divisors.iter().all(|&r| self.pow(g, order / r) != 1)
    }
}

impl Field {
    /// Builds F_{p^m}. `modulus` is an ascending coefficient list over F_p of
    /// length `m + 1`; when omitted the built-in default for `(p, m)` is used.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(Error::InvalidModulus("extension degree must be at least 1".into()));
        }
        let q = (p as u64).checked_pow(m).filter(|&q| q <= MAX_ORDER);
        let Some(q) = q else {
            return Err(Error::UnsupportedSize(
                (p as u64).saturating_pow(m.min(64)),
            ));
        };
        let q = q as u32;
        let raw_order = (q - 1) as u64;
        let divisors = prime_divisors(raw_order);

        let modulus = match modulus {
            Some(given) if m > 1 => {
                if given.len() != m as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        m + 1,
                        given.len()
                    )));
                }
                if given.iter().any(|&c| c >= p) {
                    return Err(Error::InvalidModulus("coefficient out of range".into()));
                }
                if given[m as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if !fp_irreducible(given, p) {
                    return Err(Error::ReducibleModulus(p));
                }
                given.to_vec()
            }
            _ => match default_modulus(p, m) {
                Some(d) => d,
                None => Self::search_primitive_modulus(p, m, &divisors),
            },
        };

        let raw = Raw { p, m, q, modulus };
        let primitive = (1..q)
            .find(|&g| raw.is_generator(g, &divisors))
            .expect("a finite field has a primitive element");

        let order = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * order.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = raw.mul(x, primitive);
        }
        for i in order..exp.len() {
            exp[i] = exp[i - order];
        }
        let neg = (0..q)
            .map(|a| {
                let d: Vec<u32> = raw.digits(a).iter().map(|&c| (p - c) % p).collect();
                raw.code(&d)
            })
            .collect();

        let (add, mul) = if q <= SMALL_TABLES {
            let mut add = vec![0u16; (q * q) as usize];
            let mut mul = vec![0u16; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    let idx = (a * q + b) as usize;
                    add[idx] = raw.add(a, b) as u16;
                    mul[idx] = if a == 0 || b == 0 {
                        0
                    } else {
                        exp[(log[a as usize] + log[b as usize]) as usize] as u16
                    };
                }
            }
            (Some(add), Some(mul))
        } else {
            (None, None)
        };

        Ok(Field {
            inner: Arc::new(Tables {
                p,
                m,
                q,
                modulus: raw.modulus,
                primitive,
                exp,
                log,
                neg,
                add,
                mul,
            }),
        })
    }

    /// The prime field F_p.
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// F_q for a prime power q, with the default modulus.
    pub fn of_order(q: u32) -> Result<Field> {
        if q < 2 {
            return Err(Error::NotPrime(q as u64));
        }
        let p = prime_divisors(q as u64)[0] as u32;
        let mut m = 0;
        let mut t = q;
        while t % p == 0 {
            t /= p;
            m += 1;
        }
        if t != 1 {
            return Err(Error::NotPrime(q as u64));
        }
        Field::new(p, m, None)
    }

    fn search_primitive_modulus(p: u32, m: u32, divisors: &[u64]) -> Vec<u32> {
        let count = (p as u64).pow(m);
        for lower in 0..count {
            let mut cand = Vec::with_capacity(m as usize + 1);
            let mut t = lower;
            for _ in 0..m {
                cand.push((t % p as u64) as u32);
                t /= p as u64;
            }
            cand.push(1);
            if cand[0] == 0 || !fp_irreducible(&cand, p) {
                continue;
            }
            let raw = Raw { p, m, q: count as u32, modulus: cand };
            if raw.is_generator(p, divisors) {
                return raw.modulus;
            }
        }
        unreachable!("primitive polynomials exist for every degree")
    }

    pub fn p(&self) -> u32 {
        self.inner.p
    }

    pub fn m(&self) -> u32 {
        self.inner.m
    }

    pub fn q(&self) -> u32 {
        self.inner.q
    }

    /// Defining polynomial over F_p, ascending coefficients (`[0, 1]` for prime fields).
    pub fn modulus(&self) -> &[u32] {
        &self.inner.modulus
    }

    pub fn primitive_element(&self) -> FieldElement {
        self.inner.primitive
    }

    /// The residue class of `u` (for prime fields this is just 0).
    pub fn u(&self) -> FieldElement {
        if self.inner.m == 1 {
            0
        } else {
            self.inner.p
        }
    }

    pub fn elements(&self) -> std::ops::Range<FieldElement> {
        0..self.inner.q
    }

    pub fn nonzero_elements(&self) -> std::ops::Range<FieldElement> {
        1..self.inner.q
    }

    pub fn check(&self, a: u64) -> Result<FieldElement> {
        if a < self.inner.q as u64 {
            Ok(a as u32)
        } else {
            Err(Error::ElementOutOfRange { code: a, q: self.inner.q })
        }
    }

    /// Image of an integer under Z -> F_p -> F_q.
    pub fn from_int(&self, n: i64) -> FieldElement {
        n.rem_euclid(self.inner.p as i64) as u32
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &self.inner;
        if let Some(add) = &t.add {
            return add[(a * t.q + b) as usize] as u32;
        }
        if t.p == 2 {
            return a ^ b;
        }
        if t.m == 1 {
            return (a + b) % t.p;
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut scale) = (0, 1);
        for _ in 0..t.m {
            out += ((a % t.p + b % t.p) % t.p) * scale;
            a /= t.p;
            b /= t.p;
            scale *= t.p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        self.inner.neg[a as usize]
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let t = &self.inner;
        if let Some(mul) = &t.mul {
            return mul[(a * t.q + b) as usize] as u32;
        }
        if a == 0 || b == 0 {
            0
        } else {
            t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
        }
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let t = &self.inner;
        let order = t.q - 1;
        Ok(t.exp[((order - t.log[a as usize]) % order) as usize])
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; negative exponents go through the inverse.
    pub fn pow(&self, a: FieldElement, e: i64) -> Result<FieldElement> {
        if a == 0 {
            return match e {
                0 => Ok(1),
                e if e > 0 => Ok(0),
                _ => Err(Error::DivisionByZero),
            };
        }
        let t = &self.inner;
        let order = (t.q - 1) as i64;
        let k = (t.log[a as usize] as i64 * e.rem_euclid(order)).rem_euclid(order);
        Ok(t.exp[k as usize])
    }

    /// Discrete log base the primitive element.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        (a != 0).then(|| self.inner.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> FieldElement {
        let order = (self.inner.q - 1) as u64;
        self.inner.exp[(k % order) as usize]
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(&self, a: FieldElement) -> Option<u32> {
        let l = self.log(a)?;
        let n = self.inner.q - 1;
        Some(n / gcd_u32(n, l))
    }

    /// `a^(1/p)`, the inverse of the Frobenius map.
    pub fn pth_root(&self, a: FieldElement) -> FieldElement {
        let mut r = a;
        for _ in 1..self.inner.m {
            r = self.pow(r, self.inner.p as i64).expect("positive exponent");
        }
        r
    }

    /// Parses an element: a decimal code, or a sum of terms in `u`
    /// (`u`, `u^k`, `3u^2`, `2*u`), e.g. `u^2+u+1`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty element".into()));
        }
        let mut total = 0;
        for (negative, term) in split_signed_terms(&s)? {
            let value = self.parse_element_term(&term)?;
            total = self.add(total, if negative { self.neg(value) } else { value });
        }
        Ok(total)
    }

    fn parse_element_term(&self, term: &str) -> Result<FieldElement> {
        let bad = || Error::Parse(format!("bad field element term `{term}`"));
        match term.find('u') {
            None => {
                let v: u64 = term.parse().map_err(|_| bad())?;
                self.check(v)
            }
            Some(pos) => {
                if self.inner.m == 1 {
                    return Err(Error::Parse(format!("`u` used in prime field {self}")));
                }
                let coef = term[..pos].trim_end_matches('*');
                let coef = if coef.is_empty() {
                    1
                } else {
                    self.check(coef.parse().map_err(|_| bad())?)?
                };
                let rest = &term[pos + 1..];
                let k: i64 = if rest.is_empty() {
                    1
                } else {
                    rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
                };
                Ok(self.mul(coef, self.pow(self.u(), k)?))
            }
        }
    }

    pub fn format_element(&self, a: FieldElement) -> String {
        a.to_string()
    }

    /// Power-basis coefficients of an element (length m).
    pub fn digits(&self, a: FieldElement) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.inner.m as usize);
        let mut t = a;
        for _ in 0..self.inner.m {
            out.push(t % self.inner.p);
            t /= self.inner.p;
        }
        out
    }
}

fn gcd_u32(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Splits `a+b-c` into `[(false,a),(false,b),(true,c)]`, respecting parentheses.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut negative = false;
    for ch in s.chars() {
        match ch {
            '(' => {
                depth += 1;
                current.push(ch);
            }
            ')' => {
                depth -= 1;
                current.push(ch);
            }
            '+' | '-' if depth == 0 && !current.ends_with('^') => {
                if !current.is_empty() {
                    out.push((negative, std::mem::take(&mut current)));
                } else if !out.is_empty() {
                    return Err(Error::Parse(format!("dangling sign in `{s}`")));
                }
                negative = ch == '-';
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in `{s}`")));
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    out.push((negative, current));
    Ok(out)
}
