//! The opposite representation `V^op` on `H^op`.
//!
//! A class `[(ξ, a)]` has `ξ ∈ Ker(V_a^*)` and `a` strictly interior;
//! `(ξ, a) ∼ (η, b)` iff `V_b ξ = V_a η`. Every class is stored with the
//! canonical representative `U_{-a} ξ` (its normal form), supported in
//! `(A - a) \ A ⊆ A^c`, so class equality is entrywise equality of normal
//! forms. The map `T ξ = [(U_a ξ, a)]` from `Ker(W_a^*)` is the identity on
//! normal forms, and reflection `y ↦ -y` carries `ℓ²(A^c)` onto `ℓ²(B)`.

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{check_dim, Error, Result};
use crate::lattice::Point;
use crate::sparse::{inner, RepContext, SparseVector};

#[derive(Clone, Debug, PartialEq)]
pub struct OppositeClass {
    xi: SparseVector,
    index: Point,
    normal: SparseVector,
}

impl OppositeClass {
    pub fn xi(&self) -> &SparseVector {
        &self.xi
    }

    pub fn index(&self) -> &Point {
        &self.index
    }

    /// `U_{-a} ξ`.
    pub fn normal(&self) -> &SparseVector {
        &self.normal
    }

    /// Class equality: the normal forms agree exactly.
    pub fn same_class(&self, other: &OppositeClass) -> bool {
        self.normal == other.normal
    }
}

fn check_index(ctx: &RepContext, a: &Point) -> Result<()> {
    check_dim(ctx.dim(), a.dim())?;
    if !ctx.module().cone().interior_point(a) {
        return Err(Error::NotInterior("class index must be a strictly interior lattice point"));
    }
    Ok(())
}

pub fn class_make(ctx: &RepContext, xi: SparseVector, a: Point) -> Result<OppositeClass> {
    check_index(ctx, &a)?;
    let in_kernel = xi
        .support()
        .all(|s| ctx.in_module(s) && !ctx.in_module(&(s - &a)));
    if !in_kernel {
        return Err(Error::Support("ξ ∉ Ker(V_a^*)"));
    }
    let normal = xi.translate(&-&a);
    Ok(OppositeClass { xi, index: a, normal })
}

/// `[(ξ,a)] + [(η,b)] = [(V_b ξ + V_a η, a + b)]`.
pub fn class_add(ctx: &RepContext, c1: &OppositeClass, c2: &OppositeClass) -> Result<OppositeClass> {
    let xi = ctx
        .v_shift(&c2.index, &c1.xi)?
        .add(&ctx.v_shift(&c1.index, &c2.xi)?);
    class_make(ctx, xi, &c1.index + &c2.index)
}

/// `λ[(ξ,a)] = [(λξ, a)]`.
pub fn class_scale(lambda: Complex64, c: &OppositeClass) -> OppositeClass {
    OppositeClass {
        xi: c.xi.scale(lambda),
        index: c.index.clone(),
        normal: c.normal.scale(lambda),
    }
}

/// `⟨[(ξ,a)] | [(η,b)]⟩ = ⟨V_b ξ | V_a η⟩`.
pub fn class_inner(ctx: &RepContext, c1: &OppositeClass, c2: &OppositeClass) -> Result<Complex64> {
    let left = ctx.v_shift(&c2.index, &c1.xi)?;
    let right = ctx.v_shift(&c1.index, &c2.xi)?;
    Ok(inner(&left, &right))
}

/// Inner product computed on normal forms; equals [`class_inner`].
pub fn normal_inner(c1: &OppositeClass, c2: &OppositeClass) -> Complex64 {
    inner(&c1.normal, &c2.normal)
}

/// `V^op_a [(ξ,b)] = [(ξ, a + b)]`.
pub fn v_op_apply(ctx: &RepContext, a: &Point, c: &OppositeClass) -> Result<OppositeClass> {
    check_index(ctx, a)?;
    class_make(ctx, c.xi.clone(), a + &c.index)
}

/// The representative `(V_c ξ, a + c)` of the same class.
pub fn rerepresent(ctx: &RepContext, c: &OppositeClass, shift: &Point) -> Result<OppositeClass> {
    check_dim(ctx.dim(), shift.dim())?;
    class_make(ctx, ctx.v_shift(shift, &c.xi)?, &c.index + shift)
}

/// `T f = [(U_b f, b)]` for `f ∈ Ker(W_b^*)`, i.e. `supp f ⊆ A^c \ (A^c - b)`.
pub fn intertwiner_t(ctx: &RepContext, b: &Point, f: &SparseVector) -> Result<OppositeClass> {
    check_index(ctx, b)?;
    let in_kernel = f
        .support()
        .all(|s| !ctx.in_module(s) && ctx.in_module(&(s + b)));
    if !in_kernel {
        return Err(Error::Support("vector not in Ker(W_b^*)"));
    }
    class_make(ctx, f.translate(b), b.clone())
}

/// Outcome of checking `W ≅ V^op ≅ V^B` on a family of sample vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct EquivalenceReport {
    pub samples: usize,
    /// `ι` maps every sample supported in `A^c` into `B`.
    pub reflection_support_ok: bool,
    /// Largest `|ι W_a f - V^B_a ι f|` entry.
    pub reflection_intertwining_error: f64,
    /// Largest `|T W_a f - V^op_a T f|` entry on normal forms.
    pub t_intertwining_error: f64,
    /// Largest entry of `|⟨f_i,f_j⟩ - ⟨T f_i, T f_j⟩_op|`.
    pub gram_error_t: f64,
    /// Largest entry of `|⟨T f_i, T f_j⟩_op - ⟨ι f_i, ι f_j⟩|`.
    pub gram_error_chain: f64,
    /// Largest disagreement between the class inner product and the
    /// normal-form inner product.
    pub inner_route_error: f64,
    pub tolerance: f64,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.reflection_support_ok
            && self.reflection_intertwining_error <= self.tolerance
            && self.t_intertwining_error <= self.tolerance
            && self.gram_error_t <= self.tolerance
            && self.gram_error_chain <= self.tolerance
            && self.inner_route_error <= self.tolerance
    }
}

/// Checks the chain `W ≅ V^op ≅ V^B`: reflection `(ιf)(y) = f(-y)` sends
/// `ℓ²(A^c)` to `ℓ²(B)` and intertwines `W_a` with `V^B_a`; `T` is isometric
/// and intertwines `W_a` with `V^op_a`. Samples must be supported in `A^c`;
/// their projections onto `Ker(W_b^*)` feed the `T` checks.
pub fn inversion_to_vb(
    ctx: &RepContext,
    samples: &[SparseVector],
    a: &Point,
    b: &Point,
    tolerance: f64,
) -> Result<EquivalenceReport> {
    check_index(ctx, a)?;
    check_index(ctx, b)?;
    let ctx_b = RepContext::new(ctx.module().opposite());

    let mut reflection_support_ok = true;
    let mut reflection_intertwining_error = 0.0f64;
    for f in samples {
        let iota = f.reflect();
        reflection_support_ok &= ctx_b.supported_in_module(&iota);
        if !reflection_support_ok {
            continue;
        }
        let lhs = ctx.w_shift(a, f)?.reflect();
        let rhs = ctx_b.v_shift(a, &iota)?;
        reflection_intertwining_error = reflection_intertwining_error.max(lhs.max_abs_diff(&rhs));
    }

    let kernel: Vec<SparseVector> = samples
        .iter()
        .map(|f| f.restrict(|s| ctx.in_module(&(s + b))))
        .collect();
    let classes = kernel
        .iter()
        .map(|f| intertwiner_t(ctx, b, f))
        .collect::<Result<Vec<_>>>()?;

    let mut t_intertwining_error = 0.0f64;
    for (f, class) in kernel.iter().zip(&classes) {
        let wf = ctx.w_shift(a, f)?;
        let lhs = intertwiner_t(ctx, &(a + b), &wf)?;
        let rhs = v_op_apply(ctx, a, class)?;
        t_intertwining_error = t_intertwining_error.max(lhs.normal.max_abs_diff(&rhs.normal));
    }

    let mut gram_error_t = 0.0f64;
    let mut gram_error_chain = 0.0f64;
    let mut inner_route_error = 0.0f64;
    for i in 0..kernel.len() {
        for j in 0..kernel.len() {
            let k = inner(&kernel[i], &kernel[j]);
            let op = class_inner(ctx, &classes[i], &classes[j])?;
            let via_normals = normal_inner(&classes[i], &classes[j]);
            let vb = inner(&kernel[i].reflect(), &kernel[j].reflect());
            gram_error_t = gram_error_t.max(libm::sqrt((k - op).norm_sqr()));
            gram_error_chain = gram_error_chain.max(libm::sqrt((op - vb).norm_sqr()));
            inner_route_error = inner_route_error.max(libm::sqrt((op - via_normals).norm_sqr()));
        }
    }

    Ok(EquivalenceReport {
        samples: samples.len(),
        reflection_support_ok,
        reflection_intertwining_error,
        t_intertwining_error,
        gram_error_t,
        gram_error_chain,
        inner_route_error,
        tolerance,
    })
}
