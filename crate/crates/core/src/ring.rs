//! The product ring F_q^l, its orthogonal idempotent bases, and the maps
//! between vectors over F_q^l and their l component vectors over F_q.
//!
//! Everything downstream works in the standard basis `eps_1, ..., eps_l`;
//! other idempotent bases are converted at the boundary through
//! [`IdempotentBasis::coordinates`] and [`IdempotentBasis::combine`].

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Field, FieldElement};
use crate::linalg::{self, Matrix};
use crate::poly::{splits_distinct_linear, Poly};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    pub comps: Vec<FieldElement>,
}

impl RingElement {
    pub fn new(comps: Vec<FieldElement>) -> Self {
        RingElement { comps }
    }

    pub fn l(&self) -> usize {
        self.comps.len()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|&c| c == 0)
    }

    /// `(c, c, ..., c)`
    pub fn is_constant_tuple(&self) -> bool {
        self.comps.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Debug for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.comps.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A length-n vector over F_q^l.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RingVector {
    pub entries: Vec<RingElement>,
}

impl RingVector {
    pub fn new(entries: Vec<RingElement>) -> Self {
        RingVector { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    /// Component `i` (0-based) in the standard basis, as a vector over F_q.
    pub fn component(&self, i: usize) -> Vec<FieldElement> {
        self.entries.iter().map(|e| e.comps[i]).collect()
    }

    /// Interleaves standard-basis component vectors.
    pub fn from_components(components: &[Vec<FieldElement>]) -> Result<RingVector> {
        let n = components.first().map_or(0, Vec::len);
        if let Some(bad) = components.iter().find(|c| c.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: bad.len() });
        }
        Ok(RingVector::new(
            (0..n)
                .map(|t| RingElement::new(components.iter().map(|c| c[t]).collect()))
                .collect(),
        ))
    }

    /// Number of nonzero entries (Hamming weight over the alphabet F_q^l).
    pub fn symbol_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }
}

/// F_q^l with componentwise operations.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductRing {
    pub field: Field,
    pub l: usize,
}

impl ProductRing {
    pub fn new(field: &Field, l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::EmptyInput);
        }
        Ok(ProductRing { field: field.clone(), l })
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.l])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(vec![1; self.l])
    }

    pub fn constant(&self, c: FieldElement) -> RingElement {
        RingElement::new(vec![c; self.l])
    }

    /// `eps_i`, 0-based.
    pub fn eps(&self, i: usize) -> RingElement {
        let mut comps = vec![0; self.l];
        comps[i] = 1;
        RingElement::new(comps)
    }

    fn check(&self, x: &RingElement) -> Result<()> {
        if x.l() != self.l {
            return Err(Error::LengthMismatch { expected: self.l, got: x.l() });
        }
        Ok(())
    }

    fn zip(
        &self,
        x: &RingElement,
        y: &RingElement,
        op: impl Fn(FieldElement, FieldElement) -> FieldElement,
    ) -> Result<RingElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(RingElement::new(x.comps.iter().zip(&y.comps).map(|(&a, &b)| op(a, b)).collect()))
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.zip(x, y, |a, b| self.field.add(a, b))
    }

    pub fn sub(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.zip(x, y, |a, b| self.field.sub(a, b))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.zip(x, y, |a, b| self.field.mul(a, b))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        Ok(RingElement::new(x.comps.iter().map(|&a| self.field.neg(a)).collect()))
    }

    /// Scalar multiple by an element of F_q.
    pub fn scale(&self, c: FieldElement, x: &RingElement) -> RingElement {
        RingElement::new(x.comps.iter().map(|&a| self.field.mul(c, a)).collect())
    }

    pub fn is_unit(&self, x: &RingElement) -> bool {
        x.comps.iter().all(|&c| c != 0)
    }

    pub fn inv(&self, x: &RingElement) -> Result<RingElement> {
        self.check(x)?;
        if !self.is_unit(x) {
            return Err(Error::NotAUnit);
        }
        Ok(RingElement::new(
            x.comps.iter().map(|&a| self.field.inv(a).expect("nonzero")).collect(),
        ))
    }

    /// Euclidean inner product `sum x_t y_t` in F_q^l.
    pub fn dot(&self, x: &RingVector, y: &RingVector) -> Result<RingElement> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { expected: x.len(), got: y.len() });
        }
        let mut acc = self.zero();
        for (a, b) in x.entries.iter().zip(&y.entries) {
            acc = self.add(&acc, &self.mul(a, b)?)?;
        }
        Ok(acc)
    }

    pub fn vec_add(&self, x: &RingVector, y: &RingVector) -> Result<RingVector> {
        if x.len() != y.len() {
            return Err(Error::LengthMismatch { expected: x.len(), got: y.len() });
        }
        Ok(RingVector::new(
            x.entries
                .iter()
                .zip(&y.entries)
                .map(|(a, b)| self.add(a, b))
                .collect::<Result<_>>()?,
        ))
    }

    pub fn zero_vector(&self, n: usize) -> RingVector {
        RingVector::new(vec![self.zero(); n])
    }

    /// Every element of F_q^l, in odometer order of the component codes.
    pub fn elements(&self) -> Vec<RingElement> {
        let q = self.field.q() as usize;
        let total = q.pow(self.l as u32);
        (0..total)
            .map(|mut idx| {
                let comps = (0..self.l)
                    .map(|_| {
                        let c = (idx % q) as u32;
                        idx /= q;
                        c
                    })
                    .collect();
                RingElement::new(comps)
            })
            .collect()
    }

    pub fn standard_basis(&self) -> IdempotentBasis {
        IdempotentBasis {
            elements: (0..self.l).map(|i| self.eps(i)).collect(),
            change_of_basis: linalg::identity(self.l),
            inverse: linalg::identity(self.l),
        }
    }

    /// Complete orthogonal idempotent test, including linear independence.
    pub fn verify_idempotent_basis(&self, cands: &[RingElement]) -> bool {
        if cands.len() != self.l || cands.iter().any(|c| c.l() != self.l) {
            return false;
        }
        for (i, a) in cands.iter().enumerate() {
            for (j, b) in cands.iter().enumerate() {
                let prod = self.mul(a, b).expect("checked lengths");
                let expected = if i == j { a.clone() } else { self.zero() };
                if prod != expected {
                    return false;
                }
            }
        }
        let mut sum = self.zero();
        for c in cands {
            sum = self.add(&sum, c).expect("checked lengths");
        }
        if sum != self.one() {
            return false;
        }
        let rows: Matrix = cands.iter().map(|c| c.comps.clone()).collect();
        linalg::rank(&self.field, &rows) == self.l
    }

    pub fn idempotent_basis(&self, elements: Vec<RingElement>) -> Result<IdempotentBasis> {
        if !self.verify_idempotent_basis(&elements) {
            return Err(Error::InvalidFactorBasis(
                "not a complete orthogonal idempotent basis".into(),
            ));
        }
        let change_of_basis: Matrix = elements.iter().map(|e| e.comps.clone()).collect();
        let inverse = linalg::inverse(&self.field, &change_of_basis)?;
        Ok(IdempotentBasis { elements, change_of_basis, inverse })
    }

    /// Component vectors of `v` with respect to `basis` (the projections pi~_i).
    pub fn project(&self, v: &RingVector, i: usize, basis: &IdempotentBasis) -> Result<Vec<FieldElement>> {
        if i == 0 || i > self.l {
            return Err(Error::IndexOutOfRange { index: i, len: self.l });
        }
        v.entries
            .iter()
            .map(|e| {
                self.check(e)?;
                Ok(basis.coordinates(&self.field, e)[i - 1])
            })
            .collect()
    }

    /// `sum_j e_j * a^(j)`.
    pub fn assemble(&self, components: &[Vec<FieldElement>], basis: &IdempotentBasis) -> Result<RingVector> {
        if components.len() != self.l {
            return Err(Error::LengthMismatch { expected: self.l, got: components.len() });
        }
        let n = components[0].len();
        if let Some(bad) = components.iter().find(|c| c.len() != n) {
            return Err(Error::LengthMismatch { expected: n, got: bad.len() });
        }
        Ok(RingVector::new(
            (0..n)
                .map(|t| {
                    let coords: Vec<FieldElement> = components.iter().map(|c| c[t]).collect();
                    basis.combine(&self.field, &coords)
                })
                .collect(),
        ))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IdempotentBasis {
    pub elements: Vec<RingElement>,
    /// Row i holds the standard coordinates of `e_i`.
    pub change_of_basis: Matrix,
    pub inverse: Matrix,
}

impl IdempotentBasis {
    /// Coordinates of `x` in this basis: `x = sum_i c_i e_i`.
    pub fn coordinates(&self, field: &Field, x: &RingElement) -> Vec<FieldElement> {
        linalg::vec_mul(field, &x.comps, &self.inverse)
    }

    pub fn combine(&self, field: &Field, coords: &[FieldElement]) -> RingElement {
        RingElement::new(linalg::vec_mul(field, coords, &self.change_of_basis))
    }

    pub fn l(&self) -> usize {
        self.elements.len()
    }
}

/// `Some(prod deg f_i)` when every `f_i` splits over F_q into distinct linear factors.
pub fn quotient_splits_check(fs: &[Poly]) -> Option<usize> {
    if fs.is_empty() {
        return None;
    }
    let mut l = 1;
    for f in fs {
        match splits_distinct_linear(f) {
            Ok(Some(roots)) => l *= roots.len(),
            _ => return None,
        }
    }
    Some(l)
}

/// Tensor product of complete idempotent families of F_q^{d_1}, ..., F_q^{d_k}.
///
/// For two factors of sizes m and n, `e_i (x) f_j` is the element of
/// F_q^{mn} with component `a + b m` equal to `e_i[a] f_j[b]`, and it is placed
/// at index `i + j m` (all 0-based), so standard bases map to standard bases.
/// More factors are folded from the left.
pub fn tensor_idempotents(field: &Field, sets: &[Vec<RingElement>]) -> Result<IdempotentBasis> {
    let Some(first) = sets.first() else {
        return Err(Error::InvalidFactorBasis("no factors".into()));
    };
    let check = |set: &Vec<RingElement>| -> Result<()> {
        let d = set.first().map_or(0, RingElement::l);
        let ring = ProductRing::new(field, d.max(1))?;
        if set.is_empty() || !ring.verify_idempotent_basis(set) {
            return Err(Error::InvalidFactorBasis(format!("{set:?}")));
        }
        Ok(())
    };
    check(first)?;
    let mut acc = first.clone();
    for set in &sets[1..] {
        check(set)?;
        let m = acc.len();
        let n = set.len();
        let mut next = vec![RingElement::new(Vec::new()); m * n];
        for (j, f) in set.iter().enumerate() {
            for (i, e) in acc.iter().enumerate() {
                let mut comps = vec![0; m * n];
                for b in 0..n {
                    for a in 0..m {
                        comps[a + b * m] = field.mul(e.comps[a], f.comps[b]);
                    }
                }
                next[i + j * m] = RingElement::new(comps);
            }
        }
        acc = next;
    }
    ProductRing::new(field, acc.len())?.idempotent_basis(acc)
}
