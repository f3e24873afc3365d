//! Polycyclic codes over F_q^l, stored through their component codes.
//!
//! A code is an ideal of `F_q^l[x]/<x^n - a(x)>`. In the standard idempotent
//! basis it is `sum_i eps_i C_i`, where `C_i = <g^(i)(x)>` is an
//! `a^(i)`-polycyclic code over F_q, so the code is fully described by the
//! moduli `x^n - a^(i)(x)` and monic divisors `g^(i)(x)` of them.
//!
//! Vector indexing: a vector is `(c_1, ..., c_n)` and corresponds to the
//! polynomial `c_1 + c_2 x + ... + c_n x^(n-1)`; in code both are 0-based.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::factor::{factor, Factorization};
use crate::gf::{Field, FieldElement};
use crate::poly::Poly;
use crate::ring::{IdempotentBasis, ProductRing, RingElement, RingVector};
use crate::words::{CodewordSet, DEFAULT_BUDGET};

/// Seed for the factorizations done while building and counting codes.
pub const FACTOR_SEED: u64 = 0x5eed;

/// One component code `<g(x)>` inside `F_q[x]/<modulus>`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ComponentCode {
    pub modulus: Poly,
    pub generator: Poly,
    pub check: Poly,
}

impl ComponentCode {
    pub fn dimension(&self) -> usize {
        self.modulus.deg() - self.generator.deg()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolycyclicCode {
    field: Field,
    l: usize,
    n: usize,
    mod_comps: Vec<Poly>,
    gen_comps: Vec<Poly>,
    check_comps: Vec<Poly>,
}

/// Validates `a^(i)` and returns the moduli `x^n - a^(i)(x)`.
pub fn moduli_from(field: &Field, n: usize, a_comps: &[Poly]) -> Result<Vec<Poly>> {
    if n == 0 || a_comps.is_empty() {
        return Err(Error::EmptyInput);
    }
    a_comps
        .iter()
        .enumerate()
        .map(|(i, a)| {
            if a.field() != field {
                return Err(Error::FieldMismatch);
            }
            if a.deg() >= n && !a.is_zero() {
                return Err(Error::DegreeTooLarge { degree: a.deg(), limit: n - 1 });
            }
            if a.coeff(0) == 0 {
                return Err(Error::NonUnitConstantTerm { component: i + 1 });
            }
            Ok(Poly::x_pow_minus(a, n))
        })
        .collect()
}

impl PolycyclicCode {
    /// Builds the code with component generators `g_comps` (normalized
    /// monic; the zero polynomial stands for the zero component code).
    pub fn new(field: &Field, l: usize, n: usize, a_comps: &[Poly], g_comps: &[Poly]) -> Result<Self> {
        if a_comps.len() != l {
            return Err(Error::LengthMismatch { expected: l, got: a_comps.len() });
        }
        let mods = moduli_from(field, n, a_comps)?;
        Self::from_moduli(field, n, mods, g_comps)
    }

    pub(crate) fn from_moduli(field: &Field, n: usize, mods: Vec<Poly>, g_comps: &[Poly]) -> Result<Self> {
        let l = mods.len();
        if g_comps.len() != l {
            return Err(Error::LengthMismatch { expected: l, got: g_comps.len() });
        }
        let mut gens = Vec::with_capacity(l);
        let mut checks = Vec::with_capacity(l);
        for (i, (m, g)) in mods.iter().zip(g_comps).enumerate() {
            if g.field() != field {
                return Err(Error::FieldMismatch);
            }
            let g = if g.is_zero() { m.clone() } else { g.monic() };
            if g.deg() > n {
                return Err(Error::DegreeTooLarge { degree: g.deg(), limit: n });
            }
            let h = m.exact_div(&g)?.ok_or(Error::NotADivisor { component: i + 1 })?;
            gens.push(g);
            checks.push(h);
        }
        Ok(PolycyclicCode {
            field: field.clone(),
            l,
            n,
            mod_comps: mods,
            gen_comps: gens,
            check_comps: checks,
        })
    }

    /// The whole space `F_q^l[x]/<x^n - a(x)>`.
    pub fn whole_space(field: &Field, n: usize, a_comps: &[Poly]) -> Result<Self> {
        let ones = vec![Poly::one(field); a_comps.len()];
        Self::new(field, a_comps.len(), n, a_comps, &ones)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> ProductRing {
        ProductRing::new(&self.field, self.l).expect("l >= 1")
    }

    pub fn mod_comps(&self) -> &[Poly] {
        &self.mod_comps
    }

    pub fn gen_comps(&self) -> &[Poly] {
        &self.gen_comps
    }

    pub fn check_comps(&self) -> &[Poly] {
        &self.check_comps
    }

    /// `a^(i)(x) = x^n - modulus_i`.
    pub fn a_comps(&self) -> Vec<Poly> {
        let xn = Poly::monomial(&self.field, 1, self.n);
        self.mod_comps.iter().map(|m| &xn - m).collect()
    }

    pub fn same_ambient(&self, other: &PolycyclicCode) -> bool {
        self.field == other.field && self.n == other.n && self.mod_comps == other.mod_comps
    }

    pub(crate) fn with_generators(&self, gens: &[Poly]) -> Result<PolycyclicCode> {
        Self::from_moduli(&self.field, self.n, self.mod_comps.clone(), gens)
    }

    /// `g(x) = sum_i eps_i g^(i)(x)` as coefficients over F_q^l (length n + 1).
    pub fn generator_poly(&self) -> Vec<RingElement> {
        (0..=self.n)
            .map(|k| RingElement::new(self.gen_comps.iter().map(|g| g.coeff(k)).collect()))
            .collect()
    }

    /// Sum of component degrees.
    pub fn generator_degree_sum(&self) -> usize {
        self.gen_comps.iter().map(Poly::deg).sum()
    }

    /// Dimension over F_q: `sum_i (n - deg g^(i))`.
    pub fn dimension(&self) -> usize {
        self.l * self.n - self.generator_degree_sum()
    }

    pub fn cardinality(&self) -> BigUint {
        BigUint::from(self.field.q()).pow(self.dimension() as u32)
    }

    /// All generator degrees equal.
    pub fn is_monic(&self) -> bool {
        self.gen_comps.windows(2).all(|w| w[0].deg() == w[1].deg())
    }

    /// Free rank `n - deg g` when the code is free, otherwise `None`.
    pub fn rank(&self) -> Option<usize> {
        self.is_monic().then(|| self.n - self.gen_comps[0].deg())
    }

    /// Component codes with respect to `basis`; the i-th one is `pi_i(C)`.
    pub fn decompose(&self, basis: &IdempotentBasis) -> Vec<ComponentCode> {
        basis
            .elements
            .iter()
            .map(|e| {
                // idempotents of F_q^l are 0/1 vectors; a complete orthogonal
                // family is a permutation of the standard basis
                let j = e.comps.iter().position(|&c| c == 1).expect("valid basis");
                ComponentCode {
                    modulus: self.mod_comps[j].clone(),
                    generator: self.gen_comps[j].clone(),
                    check: self.check_comps[j].clone(),
                }
            })
            .collect()
    }

    /// Component `i` (0-based, standard basis) of `v` as a polynomial.
    pub fn component_poly(&self, v: &RingVector, i: usize) -> Poly {
        Poly::new(&self.field, v.component(i))
    }

    pub fn vector_from_polys(&self, comps: &[Poly]) -> RingVector {
        let cs: Vec<Vec<FieldElement>> = comps.iter().map(|p| p.padded(self.n)).collect();
        RingVector::from_components(&cs).expect("equal lengths")
    }

    pub fn membership(&self, v: &RingVector) -> Result<bool> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, got: v.len() });
        }
        for (i, g) in self.gen_comps.iter().enumerate() {
            if !g.divides(&self.component_poly(v, i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// F_q-basis `{ eps_i x^j g^(i)(x) : j < n - deg g^(i) }`.
    pub fn basis_vectors(&self) -> Vec<RingVector> {
        let mut out = Vec::with_capacity(self.dimension());
        for (i, g) in self.gen_comps.iter().enumerate() {
            for j in 0..self.n - g.deg() {
                let mut comps = vec![Poly::zero(&self.field); self.l];
                comps[i] = &Poly::monomial(&self.field, 1, j) * g;
                out.push(self.vector_from_polys(&comps));
            }
        }
        out
    }

    /// The basis vectors flattened in Gray-map order (position-major).
    pub fn flat_basis(&self) -> Vec<Vec<FieldElement>> {
        self.basis_vectors().iter().map(flatten).collect()
    }

    /// Every codeword, flattened position-major.
    pub fn codewords(&self, budget: u128) -> Result<CodewordSet> {
        CodewordSet::span(&self.field, &self.flat_basis(), self.n * self.l, budget)
    }

    /// `D` is a subcode of `self`.
    pub fn contains(&self, d: &PolycyclicCode) -> Result<bool> {
        if !self.same_ambient(d) {
            return Err(Error::ModulusMismatch);
        }
        for (gc, gd) in self.gen_comps.iter().zip(&d.gen_comps) {
            if !gc.divides(gd)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn shift_spec(&self) -> ShiftSpec {
        ShiftSpec::from_components(&self.a_comps(), self.n)
    }

    pub fn is_shift_closed(&self, s: &ShiftSpec, budget: u128) -> Result<bool> {
        let words = self.codewords(budget)?;
        Ok(set_closed_under(&words, self.l, |v| s.poly_shift(v)))
    }

    pub fn is_seq_closed(&self, s: &ShiftSpec, budget: u128) -> Result<bool> {
        let words = self.codewords(budget)?;
        Ok(set_closed_under(&words, self.l, |v| s.seq_shift(v)))
    }
}

/// Position-major flattening (the Gray map in the standard basis).
pub fn flatten(v: &RingVector) -> Vec<FieldElement> {
    v.entries.iter().flat_map(|e| e.comps.iter().copied()).collect()
}

pub fn unflatten(w: &[FieldElement], l: usize) -> RingVector {
    RingVector::new(w.chunks(l).map(|c| RingElement::new(c.to_vec())).collect())
}

/// Whether a flattened codeword set is closed under a map on ring vectors.
pub fn set_closed_under(words: &CodewordSet, l: usize, op: impl Fn(&RingVector) -> RingVector) -> bool {
    words.iter().all(|w| words.contains(&flatten(&op(&unflatten(&w, l)))))
}

/// The shift vector `a = (a_1, ..., a_n)` with `a(x) = a_1 + a_2 x + ... + a_n x^(n-1)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftSpec {
    pub field: Field,
    pub a_vec: RingVector,
}

impl ShiftSpec {
    pub fn from_components(a_comps: &[Poly], n: usize) -> ShiftSpec {
        let field = a_comps[0].field().clone();
        let cs: Vec<Vec<FieldElement>> = a_comps.iter().map(|a| a.padded(n)[..n].to_vec()).collect();
        ShiftSpec { field, a_vec: RingVector::from_components(&cs).expect("equal lengths") }
    }

    pub fn new(field: &Field, a_vec: RingVector) -> Result<ShiftSpec> {
        let ring = ProductRing::new(field, a_vec.entries.first().map_or(0, RingElement::l))?;
        if a_vec.is_empty() || !ring.is_unit(&a_vec.entries[0]) {
            return Err(Error::NotAUnit);
        }
        Ok(ShiftSpec { field: field.clone(), a_vec })
    }

    pub fn n(&self) -> usize {
        self.a_vec.len()
    }

    pub fn l(&self) -> usize {
        self.a_vec.entries[0].l()
    }

    fn ring(&self) -> ProductRing {
        ProductRing::new(&self.field, self.l()).expect("l >= 1")
    }

    fn check_len(&self, v: &RingVector) -> Result<()> {
        if v.len() != self.n() {
            return Err(Error::LengthMismatch { expected: self.n(), got: v.len() });
        }
        Ok(())
    }

    /// `(0, c_1, ..., c_{n-1}) + c_n (a_1, ..., a_n)`
    pub fn try_poly_shift(&self, v: &RingVector) -> Result<RingVector> {
        self.check_len(v)?;
        let ring = self.ring();
        let n = self.n();
        let last = &v.entries[n - 1];
        let entries = (0..n)
            .map(|t| {
                let carry = ring.mul(last, &self.a_vec.entries[t])?;
                if t == 0 {
                    Ok(carry)
                } else {
                    ring.add(&v.entries[t - 1], &carry)
                }
            })
            .collect::<Result<_>>()?;
        Ok(RingVector::new(entries))
    }

    /// `(c_2, ..., c_n, c . a)`
    pub fn try_seq_shift(&self, v: &RingVector) -> Result<RingVector> {
        self.check_len(v)?;
        let ring = self.ring();
        let mut entries = v.entries[1..].to_vec();
        entries.push(ring.dot(v, &self.a_vec)?);
        Ok(RingVector::new(entries))
    }

    pub fn poly_shift(&self, v: &RingVector) -> RingVector {
        self.try_poly_shift(v).expect("vector of shift length")
    }

    pub fn seq_shift(&self, v: &RingVector) -> RingVector {
        self.try_seq_shift(v).expect("vector of shift length")
    }
}

fn factorizations(mods: &[Poly]) -> Result<Vec<Factorization>> {
    mods.iter().map(|m| factor(m, FACTOR_SEED)).collect()
}

/// Number of `a`-polycyclic codes: `prod_i prod_j (n_ij + 1)`.
pub fn count_codes(field: &Field, n: usize, a_comps: &[Poly]) -> Result<u128> {
    let mods = moduli_from(field, n, a_comps)?;
    Ok(factorizations(&mods)?.iter().map(Factorization::divisor_count).product())
}

/// Every code of the ambient ring, as combinations of sorted component divisors
/// (the last component varies fastest).
pub struct CodeEnumerator {
    field: Field,
    n: usize,
    mods: Vec<Poly>,
    divisors: Vec<Vec<Poly>>,
    index: Vec<usize>,
    done: bool,
}

impl Iterator for CodeEnumerator {
    type Item = PolycyclicCode;

    fn next(&mut self) -> Option<PolycyclicCode> {
        if self.done {
            return None;
        }
        let gens: Vec<Poly> = self
            .index
            .iter()
            .zip(&self.divisors)
            .map(|(&k, ds)| ds[k].clone())
            .collect();
        let code = PolycyclicCode::from_moduli(&self.field, self.n, self.mods.clone(), &gens)
            .expect("divisors of the moduli");
        let mut pos = self.index.len();
        loop {
            if pos == 0 {
                self.done = true;
                break;
            }
            pos -= 1;
            self.index[pos] += 1;
            if self.index[pos] < self.divisors[pos].len() {
                break;
            }
            self.index[pos] = 0;
        }
        Some(code)
    }
}

pub fn enumerate_codes(field: &Field, n: usize, a_comps: &[Poly]) -> Result<CodeEnumerator> {
    let mods = moduli_from(field, n, a_comps)?;
    let divisors = factorizations(&mods)?
        .iter()
        .map(|f| f.divisors(field))
        .collect::<Vec<_>>();
    Ok(CodeEnumerator {
        field: field.clone(),
        n,
        index: vec![0; mods.len()],
        mods,
        divisors,
        done: false,
    })
}

/// Closure check with the default budget.
pub fn is_shift_closed(code: &PolycyclicCode, s: &ShiftSpec) -> Result<bool> {
    code.is_shift_closed(s, DEFAULT_BUDGET)
}
