//! Exponential vectors in the symmetric Fock space `Γ(H)`, kept symbolic.
//!
//! With `⟨e(ξ), e(η)⟩ = exp⟨ξ, η⟩` (conjugate-linear in the first slot) the
//! Weyl operators act by
//!
//! ```text
//! W(ξ) e(η) = exp(-‖ξ‖²/2 - ⟨ξ, η⟩) e(ξ + η)
//! ```
//!
//! which gives `W(ξ)W(η) = exp(-i Im⟨ξ, η⟩) W(ξ + η)`. Second quantization
//! of an isometry sends `e(η)` to `e(Vη)`. Nothing is truncated.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::Point;
use crate::sparse::{inner, RepContext, SparseVector};

/// Largest admissible `‖ξ‖²` for a generator.
pub const MAX_NORM_SQR: f64 = 700.0;

pub(crate) fn cexp(z: Complex64) -> Complex64 {
    let r = libm::exp(z.re);
    Complex64::new(r * libm::cos(z.im), r * libm::sin(z.im))
}

fn guard(v: &SparseVector) -> Result<f64> {
    let n = v.norm_sqr();
    if n > MAX_NORM_SQR {
        Err(Error::Overflow { norm_sqr: n })
    } else {
        Ok(n)
    }
}

/// `Σ c_i e(ξ_i)` with pairwise distinct generators.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ExpCombo {
    terms: Vec<(Complex64, SparseVector)>,
}

impl ExpCombo {
    pub fn new(terms: impl IntoIterator<Item = (Complex64, SparseVector)>) -> Self {
        let mut combo = ExpCombo::default();
        for (c, g) in terms {
            combo.push(c, g);
        }
        combo
    }

    /// The single exponential vector `e(ξ)`.
    pub fn exponential(xi: SparseVector) -> Self {
        ExpCombo {
            terms: alloc::vec![(Complex64::new(1.0, 0.0), xi)],
        }
    }

    /// `e(0)`, the vacuum.
    pub fn vacuum() -> Self {
        Self::exponential(SparseVector::zero())
    }

    fn push(&mut self, c: Complex64, g: SparseVector) {
        match self.terms.iter_mut().find(|(_, h)| *h == g) {
            Some((acc, _)) => *acc += c,
            None => self.terms.push((c, g)),
        }
    }

    pub fn terms(&self) -> &[(Complex64, SparseVector)] {
        &self.terms
    }

    pub fn scale(&self, c: Complex64) -> Self {
        ExpCombo {
            terms: self.terms.iter().map(|(a, g)| (c * a, g.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &ExpCombo) -> Self {
        let mut out = self.clone();
        for (c, g) in &other.terms {
            out.push(-c, g.clone());
        }
        out
    }
}

/// `Σ_ij conj(a_i) b_j exp⟨ξ_i, η_j⟩`.
pub fn exp_inner(left: &ExpCombo, right: &ExpCombo) -> Result<Complex64> {
    for (_, g) in left.terms.iter().chain(&right.terms) {
        guard(g)?;
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for (a, xi) in &left.terms {
        for (b, eta) in &right.terms {
            acc += a.conj() * b * cexp(inner(xi, eta));
        }
    }
    Ok(acc)
}

pub fn weyl_apply(xi: &SparseVector, combo: &ExpCombo) -> Result<ExpCombo> {
    let nxi = guard(xi)?;
    let mut out = ExpCombo::default();
    for (c, eta) in &combo.terms {
        guard(eta)?;
        let factor = cexp(Complex64::new(-nxi / 2.0, 0.0) - inner(xi, eta));
        out.push(c * factor, xi.add(eta));
    }
    Ok(out)
}

/// `Γ(V_x)`: every generator moved by `V_x`.
pub fn gamma_apply(ctx: &RepContext, x: &Point, combo: &ExpCombo) -> Result<ExpCombo> {
    let mut out = ExpCombo::default();
    for (c, eta) in &combo.terms {
        out.push(*c, ctx.v_shift(x, eta)?);
    }
    Ok(out)
}

/// Mutual-Gram discrepancy between two combos: the larger of
/// `|⟨L,L⟩ - ⟨L,R⟩|` and `|⟨R,R⟩ - ⟨R,L⟩|`, relative to `max(1, ‖L‖², ‖R‖²)`.
/// Zero iff `L = R` (up to rounding), since `‖L - R‖² ≤` twice the numerator.
pub fn combo_discrepancy(lhs: &ExpCombo, rhs: &ExpCombo) -> Result<f64> {
    let ll = exp_inner(lhs, lhs)?;
    let lr = exp_inner(lhs, rhs)?;
    let rr = exp_inner(rhs, rhs)?;
    let rl = lr.conj();
    let abs = |z: Complex64| libm::sqrt(z.norm_sqr());
    let scale = 1.0f64.max(abs(ll)).max(abs(rr));
    Ok(abs(ll - lr).max(abs(rr - rl)) / scale)
}

#[derive(Clone, Debug, PartialEq)]
pub struct RelationReport {
    pub discrepancies: Vec<f64>,
    pub tolerance: f64,
}

impl RelationReport {
    pub fn max_discrepancy(&self) -> f64 {
        self.discrepancies.iter().copied().fold(0.0, f64::max)
    }

    pub fn passed(&self) -> bool {
        self.discrepancies.iter().all(|d| *d < self.tolerance)
    }
}

/// `W(ξ)W(η) = exp(-i Im⟨ξ,η⟩) W(ξ+η)`, evaluated on each probe.
pub fn check_weyl_relation(
    xi: &SparseVector,
    eta: &SparseVector,
    probes: &[ExpCombo],
    tolerance: f64,
) -> Result<RelationReport> {
    let phase = cexp(Complex64::new(0.0, -inner(xi, eta).im));
    let sum = xi.add(eta);
    let discrepancies = probes
        .iter()
        .map(|p| {
            let lhs = weyl_apply(xi, &weyl_apply(eta, p)?)?;
            let rhs = weyl_apply(&sum, p)?.scale(phase);
            combo_discrepancy(&lhs, &rhs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { discrepancies, tolerance })
}

/// `W(V_x ξ) Γ(V_x) = Γ(V_x) W(ξ)`, the implemented form of
/// `α_x(W(ξ)) = W(V_x ξ)`, evaluated on each probe.
pub fn check_covariance(
    ctx: &RepContext,
    x: &Point,
    xi: &SparseVector,
    probes: &[ExpCombo],
    tolerance: f64,
) -> Result<RelationReport> {
    let moved = ctx.v_shift(x, xi)?;
    let discrepancies = probes
        .iter()
        .map(|p| {
            let lhs = weyl_apply(&moved, &gamma_apply(ctx, x, p)?)?;
            let rhs = gamma_apply(ctx, x, &weyl_apply(xi, p)?)?;
            combo_discrepancy(&lhs, &rhs)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RelationReport { discrepancies, tolerance })
}

/// `G_ij = ⟨e(ξ_i), e(ξ_j)⟩ = exp⟨ξ_i, ξ_j⟩`.
pub fn gram_matrix(family: &[SparseVector]) -> Result<Vec<Vec<Complex64>>> {
    for g in family {
        guard(g)?;
    }
    Ok(family
        .iter()
        .map(|a| family.iter().map(|b| cexp(inner(a, b))).collect())
        .collect())
}
