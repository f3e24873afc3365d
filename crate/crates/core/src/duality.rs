//! The annihilator form `<f, g>_a = r(0)`, where `r` is the remainder of
//! `f g` modulo `x^n - a(x)`, its Gram matrix, annihilator duals and the
//! duality predicates.

use crate::code::{moduli_from, unflatten, PolycyclicCode, FACTOR_SEED};
use crate::error::{Error, Result};
use crate::factor::factor;
use crate::gf::{Field, FieldElement};
use crate::linalg;
use crate::poly::Poly;
use crate::ring::{ProductRing, RingElement, RingVector};
use crate::words::CodewordSet;

/// `<f1, f2>` computed componentwise against the given moduli.
pub fn bform(f1: &RingVector, f2: &RingVector, moduli: &[Poly]) -> Result<RingElement> {
    if f1.len() != f2.len() {
        return Err(Error::LengthMismatch { expected: f1.len(), got: f2.len() });
    }
    let field = moduli.first().ok_or(Error::EmptyInput)?.field();
    let comps = moduli
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let a = Poly::new(field, f1.component(i));
            let b = Poly::new(field, f2.component(i));
            Ok(a.mul_mod(&b, m)?.coeff(0))
        })
        .collect::<Result<_>>()?;
    Ok(RingElement::new(comps))
}

/// `A[i][j] = <x^i, x^j>`, i.e. the constant terms of `x^(i+j) mod (x^n - a(x))`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GramMatrix {
    pub field: Field,
    pub entries: Vec<Vec<RingElement>>,
}

impl GramMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn l(&self) -> usize {
        self.entries[0][0].l()
    }

    /// Component `k` of the matrix, over F_q.
    pub fn component(&self, k: usize) -> linalg::Matrix {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.comps[k]).collect())
            .collect()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// Exactly one nonzero entry in every row and column.
    pub fn is_monomial(&self) -> bool {
        let n = self.n();
        let row_ok = self.entries.iter().all(|r| r.iter().filter(|e| !e.is_zero()).count() == 1);
        let col_ok = (0..n).all(|j| (0..n).filter(|&i| !self.entries[i][j].is_zero()).count() == 1);
        row_ok && col_ok
    }

    /// Nonsingular in every component.
    pub fn is_nondegenerate(&self) -> bool {
        (0..self.l()).all(|k| linalg::determinant(&self.field, &self.component(k)) != 0)
    }

    /// `c A` for a row vector `c` over F_q^l.
    pub fn apply(&self, c: &RingVector) -> RingVector {
        let ring = ProductRing::new(&self.field, self.l()).expect("l >= 1");
        let n = self.n();
        RingVector::new(
            (0..n)
                .map(|j| {
                    let mut acc = ring.zero();
                    for i in 0..n {
                        let t = ring.mul(&c.entries[i], &self.entries[i][j]).expect("same l");
                        acc = ring.add(&acc, &t).expect("same l");
                    }
                    acc
                })
                .collect(),
        )
    }
}

/// Gram matrix for raw moduli `x^n - a^(i)(x)`; `a(0)` may be zero here.
pub fn gram_for_moduli(field: &Field, n: usize, moduli: &[Poly]) -> Result<GramMatrix> {
    let l = moduli.len();
    // constant terms of x^k mod m for k < 2n - 1
    let consts: Vec<Vec<FieldElement>> = moduli
        .iter()
        .map(|m| {
            let mut out = Vec::with_capacity(2 * n);
            let mut power = Poly::one(field).rem(m)?;
            let x = Poly::x(field);
            for _ in 0..2 * n - 1 {
                out.push(power.coeff(0));
                power = power.mul_mod(&x, m)?;
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| RingElement::new((0..l).map(|k| consts[k][i + j]).collect()))
                .collect()
        })
        .collect();
    Ok(GramMatrix { field: field.clone(), entries })
}

pub fn gram(field: &Field, n: usize, a_comps: &[Poly]) -> Result<GramMatrix> {
    let moduli: Vec<Poly> = a_comps.iter().map(|a| Poly::x_pow_minus(a, n)).collect();
    gram_for_moduli(field, n, &moduli)
}

impl PolycyclicCode {
    /// `C° = <h(x)>`, generated by the check polynomials.
    pub fn ann_dual(&self) -> PolycyclicCode {
        self.with_generators(self.check_comps()).expect("check polynomials divide the moduli")
    }

    pub fn gram(&self) -> GramMatrix {
        gram_for_moduli(self.field(), self.n(), self.mod_comps()).expect("nonzero moduli")
    }

    /// `C ⊆ C°`: `h^(i) | g^(i)` for all i.
    pub fn is_ann_self_orthogonal(&self) -> bool {
        self.pairs().all(|(g, h)| h.divides(g).expect("nonzero"))
    }

    /// `C° ⊆ C`: `g^(i) | h^(i)` for all i.
    pub fn is_ann_dual_containing(&self) -> bool {
        self.pairs().all(|(g, h)| g.divides(h).expect("nonzero"))
    }

    /// `x^n - a^(i)(x) = unit * (g^(i))^2` for all i.
    pub fn is_ann_self_dual(&self) -> bool {
        self.self_dual_units().is_some()
    }

    /// The units `a_i` with `x^n - a^(i)(x) = a_i (g^(i))^2`, when self-dual.
    pub fn self_dual_units(&self) -> Option<Vec<FieldElement>> {
        self.mod_comps()
            .iter()
            .zip(self.gen_comps())
            .map(|(m, g)| {
                let sq = g * g;
                (sq.deg() == m.deg() && sq.scale(m.lead()) == *m).then_some(m.lead())
            })
            .collect()
    }

    /// `gcd(g^(i), h^(i)) = 1` for all i.
    pub fn is_ann_lcd(&self) -> bool {
        self.pairs().all(|(g, h)| g.gcd(h).expect("same field").is_one())
    }

    fn pairs(&self) -> impl Iterator<Item = (&Poly, &Poly)> {
        self.gen_comps().iter().zip(self.check_comps())
    }

    /// `Ann(C)` by exhaustive search over the ambient space.
    pub fn ann_brute(&self, budget: u128) -> Result<CodewordSet> {
        let field = self.field().clone();
        let (n, l) = (self.n(), self.l());
        let basis = self.basis_vectors();
        let mods = self.mod_comps().to_vec();
        CodewordSet::filter_ambient(&field, n * l, budget, |w| {
            let f = unflatten(w, l);
            basis.iter().all(|b| {
                (0..l).all(|i| {
                    let fi = Poly::new(&field, f.component(i));
                    let bi = Poly::new(&field, b.component(i));
                    fi.mul_mod(&bi, &mods[i]).expect("nonzero modulus").is_zero()
                })
            })
        })
    }

    /// `{ f : <f, c> = 0 for all c in C }` by exhaustive search.
    pub fn bform_dual_brute(&self, budget: u128) -> Result<CodewordSet> {
        let field = self.field().clone();
        let (n, l) = (self.n(), self.l());
        let basis = self.basis_vectors();
        let mods = self.mod_comps().to_vec();
        CodewordSet::filter_ambient(&field, n * l, budget, |w| {
            let f = unflatten(w, l);
            basis.iter().all(|b| bform(&f, b, &mods).expect("same length").is_zero())
        })
    }

    /// Exhaustive check of `C° = (C A)^perp`.
    pub fn dual_relation_check(&self, budget: u128) -> Result<bool> {
        let field = self.field().clone();
        let (n, l) = (self.n(), self.l());
        let ring = self.ring();
        let a = self.gram();
        let images: Vec<RingVector> = self.basis_vectors().iter().map(|b| a.apply(b)).collect();
        let perp = CodewordSet::filter_ambient(&field, n * l, budget, |w| {
            let f = unflatten(w, l);
            images.iter().all(|y| ring.dot(&f, y).expect("same length").is_zero())
        })?;
        let dual = self.ann_dual().codewords(budget)?;
        Ok(perp == dual)
    }
}

/// Kernel of the annihilator form restricted to a code, computed by linear
/// algebra over F_q: returns a basis of `{ f : <f, b> = 0 for all basis vectors b }`.
pub fn bform_dual_basis(code: &PolycyclicCode) -> Vec<Vec<FieldElement>> {
    let field = code.field();
    let (n, l) = (code.n(), code.l());
    let mods = code.mod_comps();
    let dim = n * l;
    // row for each (basis vector b, component k): f -> <f, b>_k
    let mut rows = Vec::new();
    for b in code.basis_vectors() {
        for k in 0..l {
            let row: Vec<FieldElement> = (0..dim)
                .map(|idx| {
                    let mut e = vec![0; dim];
                    e[idx] = 1;
                    let f = unflatten(&e, l);
                    bform(&f, &b, mods).expect("same length").comps[k]
                })
                .collect();
            rows.push(row);
        }
    }
    if rows.is_empty() {
        return linalg::identity(dim);
    }
    linalg::null_space(field, &rows, dim)
}

fn component_factorizations(field: &Field, n: usize, a_comps: &[Poly]) -> Result<Vec<Vec<usize>>> {
    moduli_from(field, n, a_comps)?
        .iter()
        .map(|m| Ok(factor(m, FACTOR_SEED)?.multiplicities()))
        .collect()
}

/// `prod (m_ij - ceil(m_ij / 2) + 1)`
pub fn count_ann_self_orthogonal(field: &Field, n: usize, a_comps: &[Poly]) -> Result<u128> {
    Ok(component_factorizations(field, n, a_comps)?
        .iter()
        .flatten()
        .map(|&m| (m - m.div_ceil(2) + 1) as u128)
        .product())
}

/// 1 if every multiplicity is even, else 0.
pub fn count_ann_self_dual(field: &Field, n: usize, a_comps: &[Poly]) -> Result<u128> {
    let all_even = component_factorizations(field, n, a_comps)?
        .iter()
        .flatten()
        .all(|m| m % 2 == 0);
    Ok(u128::from(all_even))
}

/// `2^(sum_i s_i)`, s_i the number of distinct irreducible factors.
pub fn count_ann_lcd(field: &Field, n: usize, a_comps: &[Poly]) -> Result<u128> {
    let s: usize = component_factorizations(field, n, a_comps)?.iter().map(Vec::len).sum();
    Ok(1u128 << s)
}
