//! Dense univariate polynomials over F_q.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::gf::{split_signed_terms, Field, FieldElement};

/// Ascending coefficients, no trailing zeros; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElement>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        debug_assert!(coeffs.iter().all(|&c| c < field.q()));
        Poly { field: field.clone(), coeffs }
    }

    /// Like [`Poly::new`] but rejects out-of-range codes.
    pub fn from_codes(field: &Field, coeffs: &[u64]) -> Result<Poly> {
        let coeffs = coeffs
            .iter()
            .map(|&c| field.check(c))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(field, coeffs))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly::new(field, Vec::new())
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn constant(field: &Field, c: FieldElement) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    /// `c x^k`
    pub fn monomial(field: &Field, c: FieldElement, k: usize) -> Poly {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Poly::new(field, coeffs)
    }

    /// `x^n - a(x)`
    pub fn x_pow_minus(a: &Poly, n: usize) -> Poly {
        &Poly::monomial(&a.field, 1, n) - a
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> FieldElement {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Coefficients padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<FieldElement> {
        let mut v = self.coeffs.clone();
        v.resize(n.max(v.len()), 0);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn lead(&self) -> FieldElement {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lead()).expect("nonzero lead");
        self.scale(inv)
    }

    pub fn scale(&self, c: FieldElement) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Ok(Poly::new(f, coeffs))
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.field));
        }
        let f = &self.field;
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Ok(Poly::new(f, out))
    }

    /// `(quotient, remainder)` with `self = quotient * divisor + remainder`.
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let f = &self.field;
        let db = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= db {
            return Ok((Poly::zero(f), self.clone()));
        }
        let lead_inv = f.inv(divisor.lead())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = f.mul(rem[k + db], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = f.sub(rem[k + j], f.mul(c, b));
            }
        }
        rem.truncate(db);
        Ok((Poly::new(f, quot), Poly::new(f, rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        Ok(self.divmod(divisor)?.1)
    }

    /// Exact quotient, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &Poly) -> Result<Option<Poly>> {
        let (q, r) = self.divmod(divisor)?;
        Ok(r.is_zero().then_some(q))
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.from_int(i as i64), c))
            .collect();
        Poly::new(f, coeffs)
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut result = Poly::one(&self.field).rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                result = (&result * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(result)
    }

    pub fn mul_mod(&self, other: &Poly, modulus: &Poly) -> Result<Poly> {
        self.checked_mul(other)?.rem(modulus)
    }

    /// Ordering used for divisors: degree first, then ascending coefficient codes.
    pub fn canonical_cmp(&self, other: &Poly) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.cmp(&other.coeffs))
    }

    /// Parses `[c0,c1,...]` or a sum of terms such as `x^3+2x+u^2`.
    pub fn parse(field: &Field, s: &str) -> Result<Poly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = s.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            if inner.is_empty() {
                return Ok(Poly::zero(field));
            }
            let coeffs = inner
                .split(',')
                .map(|c| field.parse_element(c))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Poly::new(field, coeffs));
        }
        let mut acc = Poly::zero(field);
        for (negative, term) in split_signed_terms(&s)? {
            let t = parse_term(field, &term)?;
            acc = if negative { &acc - &t } else { &acc + &t };
        }
        Ok(acc)
    }

    /// Human-readable form, highest degree first.
    pub fn to_human(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".into(),
                _ => format!("x^{k}"),
            };
            let coef = self.field.format_element(c);
            terms.push(match (c, k) {
                (_, 0) => coef,
                (1, _) => mono,
                _ if self.field.m() > 1 => format!("({coef})*{mono}"),
                _ => format!("{coef}{mono}"),
            });
        }
        terms.join(" + ")
    }

    /// `[c0,c1,...]`
    pub fn to_list(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

fn parse_term(field: &Field, term: &str) -> Result<Poly> {
    let bad = || Error::Parse(format!("bad polynomial term `{term}`"));
    let Some(pos) = term.rfind('x') else {
        return Ok(Poly::constant(field, field.parse_element(term)?));
    };
    let coef_str = term[..pos].trim_end_matches('*');
    let coef_str = coef_str
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .unwrap_or(coef_str);
    let coef = if coef_str.is_empty() { 1 } else { field.parse_element(coef_str)? };
    let rest = &term[pos + 1..];
    let k: usize = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^').ok_or_else(bad)?.parse().map_err(|_| bad())?
    };
    Ok(Poly::monomial(field, coef, k))
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_human())
    }
}

macro_rules! impl_op {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$checked(rhs).expect("polynomials over different fields")
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

impl_op!(Add, add, checked_add);
impl_op!(Sub, sub, checked_sub);
impl_op!(Mul, mul, checked_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// `x - r`
pub fn linear(field: &Field, r: FieldElement) -> Poly {
    Poly::new(field, vec![field.neg(r), 1])
}

/// Distinct roots of a monic `f` when it splits into distinct linear factors.
pub fn splits_distinct_linear(f: &Poly) -> Result<Option<Vec<FieldElement>>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let roots: Vec<FieldElement> = f.field().elements().filter(|&r| f.eval(r) == 0).collect();
    Ok((roots.len() == f.deg() && f.deg() >= 1).then_some(roots))
}

/// Lagrange basis polynomials `e_i(x) = prod_{j != i} (x - r_j)/(r_i - r_j)`.
///
/// Modulo `prod (x - r_j)` they form a complete set of orthogonal idempotents.
pub fn lagrange_idempotents(field: &Field, roots: &[FieldElement]) -> Result<Vec<Poly>> {
    if roots.is_empty() {
        return Err(Error::EmptyInput);
    }
    for (i, a) in roots.iter().enumerate() {
        if roots[i + 1..].contains(a) {
            return Err(Error::DuplicateRoots);
        }
    }
    roots
        .iter()
        .enumerate()
        .map(|(i, &ri)| {
            let mut num = Poly::one(field);
            let mut den = 1;
            for (j, &rj) in roots.iter().enumerate() {
                if i != j {
                    num = &num * &linear(field, rj);
                    den = field.mul(den, field.sub(ri, rj));
                }
            }
            Ok(num.scale(field.inv(den)?))
        })
        .collect()
}
