//! Factorization over F_q and divisor enumeration.
//!
//! [`factor`] runs squarefree decomposition, distinct-degree splitting and
//! seeded equal-degree splitting (Cantor–Zassenhaus, with the trace map in
//! characteristic 2). [`factor_trial_division`] is the slow exhaustive
//! alternative and serves as the reference in tests.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::poly::Poly;

#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: FieldElement,
    /// Monic irreducible factors with multiplicities, in canonical order.
    pub factors: Vec<(Poly, usize)>,
}

impl Factorization {
    pub fn expand(&self, field: &Field) -> Poly {
        let mut acc = Poly::constant(field, self.unit);
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn divisor_count(&self) -> u128 {
        self.factors.iter().map(|(_, m)| *m as u128 + 1).product()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.factors.iter().map(|(_, m)| *m).collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|(_, m)| *m == 1)
    }

    /// All monic divisors, sorted by degree then coefficient codes.
    pub fn divisors(&self, field: &Field) -> Vec<Poly> {
        let mut out = vec![Poly::one(field)];
        for (f, m) in &self.factors {
            let mut next = Vec::with_capacity(out.len() * (m + 1));
            for d in &out {
                let mut power = d.clone();
                next.push(power.clone());
                for _ in 0..*m {
                    power = &power * f;
                    next.push(power.clone());
                }
            }
            out = next;
        }
        out.sort_by(|a, b| a.canonical_cmp(b));
        out
    }

    /// Exponent vector of a monic divisor with respect to these factors.
    pub fn exponents_of(&self, divisor: &Poly) -> Result<Option<Vec<usize>>> {
        let mut rest = divisor.monic();
        let mut exps = Vec::with_capacity(self.factors.len());
        for (f, m) in &self.factors {
            let mut e = 0;
            while e < *m {
                match rest.exact_div(f)? {
                    Some(q) => {
                        rest = q;
                        e += 1;
                    }
                    None => break,
                }
            }
            exps.push(e);
        }
        Ok(rest.is_one().then_some(exps))
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.unit)?;
        for (g, m) in &self.factors {
            write!(f, " * ({g})^{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn finish(unit: FieldElement, mut factors: Vec<(Poly, usize)>) -> Factorization {
    factors.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    let mut merged: Vec<(Poly, usize)> = Vec::with_capacity(factors.len());
    for (f, m) in factors {
        match merged.last_mut() {
            Some((g, k)) if *g == f => *k += m,
            _ => merged.push((f, m)),
        }
    }
    Factorization { unit, factors: merged }
}

/// Complete factorization into monic irreducibles; deterministic for a given seed.
pub fn factor(f: &Poly, seed: u64) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let unit = f.lead();
    let monic = f.monic();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(&monic)? {
        for (block, d) in distinct_degree(&part)? {
            for g in equal_degree(&block, d, &mut rng)? {
                out.push((g, mult));
            }
        }
    }
    Ok(finish(unit, out))
}

/// Squarefree test derived from the full factorization.
pub fn is_squarefree(f: &Poly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(factor(f, 0)?.is_squarefree())
}

/// `g` with `g(x)^p = f(x)`, for `f` whose exponents are all multiples of p.
fn pth_root(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.p() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .map(|&c| field.pth_root(c))
        .collect();
    Poly::new(field, coeffs)
}

/// Pairs `(squarefree part, multiplicity)` of a monic polynomial.
fn squarefree_decomposition(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let p = field.p() as usize;
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let d = f.derivative();
    if d.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root(f))? {
            out.push((g, m * p));
        }
        return Ok(out);
    }
    let mut c = f.gcd(&d)?;
    let mut w = f.divmod(&c)?.0;
    let mut i = 1;
    while w.deg() > 0 {
        let y = w.gcd(&c)?;
        let z = w.divmod(&y)?.0;
        if z.deg() > 0 {
            out.push((z, i));
        }
        i += 1;
        w = y;
        c = c.divmod(&w)?.0;
    }
    if c.deg() > 0 {
        for (g, m) in squarefree_decomposition(&pth_root(&c))? {
            out.push((g, m * p));
        }
    }
    Ok(out)
}

/// Splits a squarefree monic polynomial into products of equal-degree irreducibles.
fn distinct_degree(f: &Poly) -> Result<Vec<(Poly, usize)>> {
    let field = f.field();
    let q = field.q() as u64;
    let x = Poly::x(field);
    let mut out = Vec::new();
    let mut rest = f.clone();
    let mut h = x.rem(&rest)?;
    let mut d = 0;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(q, &rest)?;
        let g = rest.gcd(&(&h - &x))?;
        if g.deg() > 0 {
            rest = rest.divmod(&g)?.0;
            h = h.rem(&rest)?;
            out.push((g, d));
        }
    }
    if rest.deg() > 0 {
        let deg = rest.deg();
        out.push((rest, deg));
    }
    Ok(out)
}

fn random_poly(field: &Field, below: usize, rng: &mut ChaCha8Rng) -> Poly {
    let coeffs = (0..below).map(|_| rng.gen_range(0..field.q())).collect();
    Poly::new(field, coeffs)
}

/// Splits a product of distinct monic irreducibles of degree `d`.
fn equal_degree(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> Result<Vec<Poly>> {
    let n = f.deg();
    if n == d {
        return Ok(vec![f.clone()]);
    }
    let field = f.field();
    let q = field.q() as u64;
    loop {
        let a = random_poly(field, n, rng);
        if a.deg() == 0 {
            continue;
        }
        let b = if field.p() == 2 {
            // Tr(a) = a + a^2 + ... + a^(2^(m d - 1))
            let mut t = a.clone();
            let mut sum = a.clone();
            for _ in 1..(field.m() as usize * d) {
                t = t.mul_mod(&t, f)?;
                sum = &sum + &t;
            }
            sum
        } else {
            // a^((q^d - 1)/2) = (a * a^q * ... * a^(q^(d-1)))^((q-1)/2)
            let mut t = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                t = t.pow_mod(q, f)?;
                norm = norm.mul_mod(&t, f)?;
            }
            &norm.pow_mod((q - 1) / 2, f)? - &Poly::one(field)
        };
        let g = f.gcd(&b)?;
        if g.deg() > 0 && g.deg() < n {
            let h = f.divmod(&g)?.0;
            let mut out = equal_degree(&g, d, rng)?;
            out.extend(equal_degree(&h, d, rng)?);
            return Ok(out);
        }
    }
}

/// Factorization by dividing out every monic polynomial of increasing degree.
///
/// Exponential in the degree; intended for small `q^(deg/2)`.
pub fn factor_trial_division(f: &Poly) -> Result<Factorization> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let field = f.field();
    let q = field.q() as u64;
    let unit = f.lead();
    let mut rest = f.monic();
    let mut out = Vec::new();
    let mut d = 1;
    while 2 * d <= rest.deg() {
        let count = q.pow(d as u32);
        for lower in 0..count {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut t = lower;
            for _ in 0..d {
                coeffs.push((t % q) as u32);
                t /= q;
            }
            coeffs.push(1);
            let cand = Poly::new(field, coeffs);
            let mut mult = 0;
            while let Some(quot) = rest.exact_div(&cand)? {
                rest = quot;
                mult += 1;
            }
            if mult > 0 {
                out.push((cand, mult));
            }
            if 2 * d > rest.deg() {
                break;
            }
        }
        d += 1;
    }
    if rest.deg() > 0 {
        out.push((rest, 1));
    }
    Ok(finish(unit, out))
}
