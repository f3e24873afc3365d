//! CSS parameters from nested classical codes and from dual-containing
//! polycyclic codes through their Gray images.

use std::fmt;

use crate::code::PolycyclicCode;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::gray::{block_gram, gray_image, GraySpec};
use crate::lincode::{Distance, LinearCode};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct QuantumParams {
    pub n: usize,
    pub k: usize,
    /// Lower bound on the quantum distance.
    pub d_lb: usize,
    /// `d_lb` is the exact CSS distance.
    pub exact: bool,
    /// `lambda` with `M M^T = lambda I` for the polycyclic construction.
    pub lambda: Option<FieldElement>,
}

impl fmt::Display for QuantumParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rel = if self.exact { "" } else { ">=" };
        write!(f, "[[{},{},{}{}]]", self.n, self.k, rel, self.d_lb)?;
        if let Some(l) = self.lambda {
            write!(f, " lambda={l}")?;
        }
        Ok(())
    }
}

fn cost(c: &LinearCode) -> u128 {
    c.enumeration_cost()
}

/// Distance from `Distance` of a possibly zero code; `None` for the zero code.
fn distance_or_none(c: &LinearCode, budget: u128) -> Result<Option<Distance>> {
    match c.min_distance(budget) {
        Ok(d) => Ok(Some(d)),
        Err(Error::ZeroCode) => Ok(None),
        Err(e) => Err(e),
    }
}

/// CSS code from `C2^perp ⊆ C1`: `[[n, k1 + k2 - n, d]]`.
pub fn css(c1: &LinearCode, c2: &LinearCode, budget: u128) -> Result<QuantumParams> {
    if c1.field() != c2.field() {
        return Err(Error::FieldMismatch);
    }
    if c1.n() != c2.n() {
        return Err(Error::LengthMismatch { expected: c1.n(), got: c2.n() });
    }
    let c2_perp = c2.dual();
    if !c2_perp.is_subcode_of(c1) {
        return Err(Error::NotNested);
    }
    let c1_perp = c1.dual();
    let n = c1.n();
    let k = c1.k() + c2.k() - n;
    if cost(c1).saturating_add(cost(c2)) <= budget {
        let d1 = c1.min_weight_where(&|w| !c2_perp.contains(w));
        let d2 = c2.min_weight_where(&|w| !c1_perp.contains(w));
        if let Some(d) = d1.into_iter().chain(d2).min() {
            return Ok(QuantumParams { n, k, d_lb: d, exact: true, lambda: None });
        }
    }
    let bound = [distance_or_none(c1, budget)?, distance_or_none(c2, budget)?]
        .into_iter()
        .flatten()
        .map(Distance::value)
        .min()
        .unwrap_or(1)
        .max(1);
    Ok(QuantumParams { n, k, d_lb: bound, exact: false, lambda: None })
}

/// `[[nl, nl - 2 sum deg g^(i), >= d(Psi(C))]]` for a dual-containing code
/// and `M M^T = lambda I`.
pub fn quantum_from_polycyclic(code: &PolycyclicCode, gs: &GraySpec, budget: u128) -> Result<QuantumParams> {
    if !code.is_ann_dual_containing() {
        return Err(Error::NotDualContaining);
    }
    let lambda = gs.orthogonality_scalar().ok_or(Error::MNotScaledOrthogonal)?;
    let image = gray_image(code, gs, &code.ring().standard_basis());
    let n = code.n() * code.l();
    let k = n - 2 * code.generator_degree_sum();
    let d = image.min_distance(budget)?;
    Ok(QuantumParams { n, k, d_lb: d.value(), exact: false, lambda: Some(lambda) })
}

/// CSS parameters of the pair `(Psi(C), Psi(C) A-bar)`, whose nesting follows
/// from `C° = (C A)^perp`; used to cross-check `quantum_from_polycyclic`.
pub fn css_of_gray_pair(code: &PolycyclicCode, gs: &GraySpec, budget: u128) -> Result<QuantumParams> {
    let image = gray_image(code, gs, &code.ring().standard_basis());
    let abar = block_gram(&code.gram());
    css(&image, &image.times_matrix(&abar.entries), budget)
}
