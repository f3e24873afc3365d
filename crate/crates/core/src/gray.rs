//! Gray maps from `(F_q^l)^n` to `F_q^{nl}`.
//!
//! `phi` writes each entry in idempotent-basis coordinates, position-major:
//! index `t * l + i` holds coordinate `i` of entry `t`. `psi` additionally
//! multiplies every `l`-block on the right by an invertible `M`.

use crate::code::PolycyclicCode;
use crate::duality::GramMatrix;
use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::lincode::LinearCode;
use crate::linalg::{self, Matrix};
use crate::ring::{IdempotentBasis, RingVector};
use crate::words::CodewordSet;
use crate::ShiftSpec;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GraySpec {
    field: Field,
    m: Matrix,
    m_inv: Matrix,
}

impl GraySpec {
    pub fn new(field: &Field, m: Matrix) -> Result<GraySpec> {
        let l = m.len();
        if l == 0 {
            return Err(Error::EmptyInput);
        }
        if let Some(bad) = m.iter().find(|r| r.len() != l) {
            return Err(Error::LengthMismatch { expected: l, got: bad.len() });
        }
        for &c in m.iter().flatten() {
            field.check(c as u64)?;
        }
        let m_inv = linalg::inverse(field, &m)?;
        Ok(GraySpec { field: field.clone(), m, m_inv })
    }

    pub fn identity(field: &Field, l: usize) -> GraySpec {
        GraySpec::new(field, linalg::identity(l)).expect("identity is invertible")
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn l(&self) -> usize {
        self.m.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn inverse(&self) -> &Matrix {
        &self.m_inv
    }

    /// `lambda` with `M M^T = lambda I`, when it exists and is nonzero.
    pub fn orthogonality_scalar(&self) -> Option<FieldElement> {
        let mmt = linalg::mat_mul(&self.field, &self.m, &linalg::transpose(&self.m));
        let lambda = mmt[0][0];
        let scaled = mmt
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &c)| c == if i == j { lambda } else { 0 }));
        (scaled && lambda != 0).then_some(lambda)
    }
}

pub fn phi(field: &Field, v: &RingVector, basis: &IdempotentBasis) -> Vec<FieldElement> {
    v.entries.iter().flat_map(|e| basis.coordinates(field, e)).collect()
}

pub fn phi_inverse(field: &Field, w: &[FieldElement], basis: &IdempotentBasis) -> Result<RingVector> {
    let l = basis.l();
    if w.len() % l != 0 {
        return Err(Error::LengthMismatch { expected: w.len().next_multiple_of(l), got: w.len() });
    }
    Ok(RingVector::new(w.chunks(l).map(|c| basis.combine(field, c)).collect()))
}

fn blocks_times(field: &Field, w: &[FieldElement], m: &Matrix) -> Vec<FieldElement> {
    w.chunks(m.len()).flat_map(|b| linalg::vec_mul(field, b, m)).collect()
}

pub fn psi(v: &RingVector, gs: &GraySpec, basis: &IdempotentBasis) -> Vec<FieldElement> {
    blocks_times(&gs.field, &phi(&gs.field, v, basis), &gs.m)
}

pub fn psi_inverse(w: &[FieldElement], gs: &GraySpec, basis: &IdempotentBasis) -> Result<RingVector> {
    if w.len() % gs.l() != 0 {
        return Err(Error::LengthMismatch { expected: w.len().next_multiple_of(gs.l()), got: w.len() });
    }
    phi_inverse(&gs.field, &blocks_times(&gs.field, w, &gs.m_inv), basis)
}

/// `Psi(C)`, spanned by `psi(eps_i x^j g^(i))` for `j < n - deg g^(i)`.
pub fn gray_image(code: &PolycyclicCode, gs: &GraySpec, basis: &IdempotentBasis) -> LinearCode {
    let rows: Matrix = code.basis_vectors().iter().map(|v| psi(v, gs, basis)).collect();
    LinearCode::from_rows_with_len(code.field(), code.n() * code.l(), &rows).expect("rows of length nl")
}

fn conjugate(
    w: &[FieldElement],
    s: &ShiftSpec,
    basis: &IdempotentBasis,
    op: impl Fn(&ShiftSpec, &RingVector) -> Result<RingVector>,
) -> Result<Vec<FieldElement>> {
    let nl = s.n() * s.l();
    if w.len() != nl {
        return Err(Error::LengthMismatch { expected: nl, got: w.len() });
    }
    let v = phi_inverse(&s.field, w, basis)?;
    Ok(phi(&s.field, &op(s, &v)?, basis))
}

/// `T = phi . tau_a . phi^-1`
pub fn quasi_shift(w: &[FieldElement], s: &ShiftSpec, basis: &IdempotentBasis) -> Result<Vec<FieldElement>> {
    conjugate(w, s, basis, ShiftSpec::try_poly_shift)
}

/// `T~ = phi . tau'_a . phi^-1`
pub fn quasi_seq_shift(w: &[FieldElement], s: &ShiftSpec, basis: &IdempotentBasis) -> Result<Vec<FieldElement>> {
    conjugate(w, s, basis, ShiftSpec::try_seq_shift)
}

fn invariant(code: &LinearCode, s: &ShiftSpec, op: impl Fn(&[FieldElement]) -> Result<Vec<FieldElement>>) -> bool {
    code.n() == s.n() * s.l() && code.generator().iter().all(|r| op(r).map_or(false, |w| code.contains(&w)))
}

pub fn is_quasi_cyclic(code: &LinearCode, s: &ShiftSpec, basis: &IdempotentBasis) -> bool {
    invariant(code, s, |w| quasi_shift(w, s, basis))
}

pub fn is_quasi_sequential(code: &LinearCode, s: &ShiftSpec, basis: &IdempotentBasis) -> bool {
    invariant(code, s, |w| quasi_seq_shift(w, s, basis))
}

/// `nl x nl` matrix whose `(i, j)` block is `diag(A[i][j])`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockGram {
    pub entries: Matrix,
}

impl BlockGram {
    pub fn is_monomial(&self) -> bool {
        let n = self.entries.len();
        self.entries.iter().all(|r| r.iter().filter(|&&c| c != 0).count() == 1)
            && (0..n).all(|j| self.entries.iter().filter(|r| r[j] != 0).count() == 1)
    }
}

pub fn block_gram(a: &GramMatrix) -> BlockGram {
    let (n, l) = (a.n(), a.l());
    let mut entries = vec![vec![0; n * l]; n * l];
    for i in 0..n {
        for j in 0..n {
            for k in 0..l {
                entries[i * l + k][j * l + k] = a.entries[i][j].comps[k];
            }
        }
    }
    BlockGram { entries }
}

/// Checks `{ psi(c A) } = { psi(c) A-bar }` over all codewords `c`.
pub fn psi_gram_identity_check(code: &PolycyclicCode, gs: &GraySpec, budget: u128) -> Result<bool> {
    let s = code.shift_spec();
    if !s.a_vec.entries.iter().all(|e| e.is_constant_tuple()) {
        return Err(Error::PreconditionViolated("a(x) coefficients must be constant tuples".into()));
    }
    let field = code.field();
    let basis = code.ring().standard_basis();
    let a = code.gram();
    let abar = block_gram(&a);
    let words = code.codewords(budget)?;
    let nl = code.n() * code.l();
    let lhs: Vec<Vec<FieldElement>> = words
        .iter()
        .map(|w| psi(&a.apply(&crate::code::unflatten(&w, code.l())), gs, &basis))
        .collect();
    let rhs: Vec<Vec<FieldElement>> = words
        .iter()
        .map(|w| linalg::vec_mul(field, &psi(&crate::code::unflatten(&w, code.l()), gs, &basis), &abar.entries))
        .collect();
    Ok(CodewordSet::from_vectors(field.q(), nl, &lhs) == CodewordSet::from_vectors(field.q(), nl, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Poly;
    use crate::ring::{ProductRing, RingElement};

    fn f(q: u32) -> Field {
        Field::of_order(q).unwrap()
    }

    fn rv(entries: &[&[u32]]) -> RingVector {
        RingVector::new(entries.iter().map(|e| RingElement::new(e.to_vec())).collect())
    }

    #[test]
    fn phi_and_psi_small() {
        let f2 = f(2);
        let std = ProductRing::new(&f2, 2).unwrap().standard_basis();
        assert_eq!(phi(&f2, &rv(&[&[1, 0], &[0, 1]]), &std), vec![1, 0, 0, 1]);
        let gs = GraySpec::new(&f2, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(psi(&rv(&[&[1, 0]]), &gs, &std), vec![1, 1]);
        let v = rv(&[&[1, 1], &[0, 1], &[1, 0]]);
        assert_eq!(psi_inverse(&psi(&v, &gs, &std), &gs, &std).unwrap(), v);
    }

    #[test]
    fn gray_spec_errors() {
        let f3 = f(3);
        assert_eq!(GraySpec::new(&f3, vec![vec![1, 2], vec![2, 1]]), Err(Error::SingularMatrix));
        assert!(matches!(GraySpec::new(&f3, vec![vec![1, 2]]), Err(Error::LengthMismatch { .. })));
        let f5 = f(5);
        let gs = GraySpec::new(&f5, vec![vec![1, 4], vec![4, 4]]).unwrap();
        assert_eq!(gs.orthogonality_scalar(), Some(2));
        let gs = GraySpec::new(&f5, vec![vec![1, 1], vec![0, 1]]).unwrap();
        assert_eq!(gs.orthogonality_scalar(), None);
    }

    #[test]
    fn block_gram_cyclic_is_identity_for_n1() {
        let f3 = f(3);
        let one = Poly::one(&f3);
        let a = crate::duality::gram(&f3, 1, &[one.clone(), one]).unwrap();
        assert_eq!(block_gram(&a).entries, linalg::identity(2));
    }

    #[test]
    fn quasi_shift_l1_is_cyclic_shift() {
        let f2 = f(2);
        let s = ShiftSpec::from_components(&[Poly::one(&f2)], 4);
        let std = ProductRing::new(&f2, 1).unwrap().standard_basis();
        assert_eq!(quasi_shift(&[1, 1, 0, 0], &s, &std).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(quasi_shift(&[1, 0, 0, 1], &s, &std).unwrap(), vec![1, 1, 0, 0]);
        assert!(matches!(quasi_shift(&[1, 0], &s, &std), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn gray_image_dimension() {
        let f2 = f(2);
        let one = Poly::one(&f2);
        let g1 = Poly::parse(&f2, "x+1").unwrap();
        let g2 = Poly::parse(&f2, "x^6+x^5+x^4+x^3+x^2+x+1").unwrap();
        let code = PolycyclicCode::new(&f2, 2, 7, &[one.clone(), one], &[g1, g2]).unwrap();
        let gs = GraySpec::new(&f2, vec![vec![1, 1], vec![0, 1]]).unwrap();
        let img = gray_image(&code, &gs, &code.ring().standard_basis());
        assert_eq!((img.n(), img.k()), (14, 7));
    }
}
