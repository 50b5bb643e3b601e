//! Finitely supported vectors of `ℓ²(Z^d)` and the shift operators acting
//! on them: the isometric representation `V^A` on `ℓ²(A)`, its adjoints and
//! wandering spaces, the bilateral shift `U` on `ℓ²(Z^d)` that dilates it,
//! and the compressed semigroup `W_a = U_{-a}|ℓ²(A^c)`.
//!
//! Supports and memberships are exact integer computations. Scalars are
//! complex doubles; shifts only move values, so isometry and semigroup
//! identities hold bit for bit.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::error::{check_dim, Error, Result};
use crate::lattice::{Point, Window};
use crate::module::ModuleExpr;

/// Entries with magnitude below this are dropped on normalization.
pub const DROP_BELOW: f64 = 1e-15;

#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseVector {
    entries: BTreeMap<Point, Complex64>,
}

impl SparseVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The basis vector `e_p`.
    pub fn basis(p: Point) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(p, Complex64::new(1.0, 0.0));
        SparseVector { entries }
    }

    /// Sums duplicate points and drops negligible entries.
    pub fn from_entries(items: impl IntoIterator<Item = (Point, Complex64)>) -> Self {
        let mut entries: BTreeMap<Point, Complex64> = BTreeMap::new();
        for (p, v) in items {
            *entries.entry(p).or_default() += v;
        }
        entries.retain(|_, v| v.norm_sqr() >= DROP_BELOW * DROP_BELOW);
        SparseVector { entries }
    }

    pub fn get(&self, p: &Point) -> Complex64 {
        self.entries.get(p).copied().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Point, &Complex64)> {
        self.entries.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Point> {
        self.entries.keys()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Support translated by `x`; values untouched.
    pub fn translate(&self, x: &Point) -> Self {
        SparseVector {
            entries: self.entries.iter().map(|(p, v)| (p + x, *v)).collect(),
        }
    }

    /// `(ιf)(y) = f(-y)`.
    pub fn reflect(&self) -> Self {
        SparseVector {
            entries: self.entries.iter().map(|(p, v)| (-p, *v)).collect(),
        }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::from_entries(self.entries.iter().map(|(p, v)| (p.clone(), c * v)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut entries = self.entries.clone();
        for (p, v) in &other.entries {
            *entries.entry(p.clone()).or_default() += v;
        }
        entries.retain(|_, v| v.norm_sqr() >= DROP_BELOW * DROP_BELOW);
        SparseVector { entries }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    /// Keeps the entries whose point satisfies `keep`.
    pub fn restrict(&self, mut keep: impl FnMut(&Point) -> bool) -> Self {
        SparseVector {
            entries: self
                .entries
                .iter()
                .filter(|(p, _)| keep(p))
                .map(|(p, v)| (p.clone(), *v))
                .collect(),
        }
    }

    pub fn norm_sqr(&self) -> f64 {
        self.entries.values().map(|v| v.norm_sqr()).sum()
    }

    /// Largest entrywise difference in modulus.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for (p, v) in &self.entries {
            worst = worst.max((v - other.get(p)).norm_sqr());
        }
        for (p, v) in &other.entries {
            if !self.entries.contains_key(p) {
                worst = worst.max(v.norm_sqr());
            }
        }
        libm::sqrt(worst)
    }
}

/// `⟨f, g⟩ = Σ conj(f(y)) g(y)`: conjugate-linear in the first slot.
pub fn inner(f: &SparseVector, g: &SparseVector) -> Complex64 {
    let (small, large, flip) = if f.len() <= g.len() { (f, g, false) } else { (g, f, true) };
    let mut acc = Complex64::new(0.0, 0.0);
    for (p, a) in &small.entries {
        if let Some(b) = large.entries.get(p) {
            acc += if flip { b.conj() * a } else { a.conj() * b };
        }
    }
    acc
}

/// The bilateral shift `U_x` on `ℓ²(Z^d)`: translation of the support by `x`.
pub fn dilation_shift(x: &Point, f: &SparseVector) -> SparseVector {
    f.translate(x)
}

/// Shift index and the Archimedean-derived ceiling it was checked against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Escape {
    pub steps: u64,
    pub bound: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverage {
    pub point: Point,
    /// A lattice point `a ∈ S` with `point + a ∈ A`, so `e_point ∈ U_a^* ℓ²(A)`.
    pub shift: Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DilationReport {
    pub direction: Point,
    pub covered: Vec<Coverage>,
    pub uncovered: Vec<Point>,
}

impl DilationReport {
    pub fn passed(&self) -> bool {
        self.uncovered.is_empty()
    }
}

/// The representation `V^A` of `S` on `ℓ²(A)`.
#[derive(Clone, Debug)]
pub struct RepContext {
    module: ModuleExpr,
}

impl RepContext {
    pub fn new(module: ModuleExpr) -> Self {
        RepContext { module }
    }

    pub fn module(&self) -> &ModuleExpr {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn in_module(&self, y: &Point) -> bool {
        self.module.member(y)
    }

    pub fn supported_in_module(&self, f: &SparseVector) -> bool {
        f.support().all(|p| self.module.member(p))
    }

    pub fn supported_in_complement(&self, f: &SparseVector) -> bool {
        f.support().all(|p| !self.module.member(p))
    }

    fn check_semigroup_index(&self, x: &Point) -> Result<()> {
        check_dim(self.dim(), x.dim())?;
        if !self.module.cone().contains_point(x) {
            return Err(Error::Module(alloc::format!("shift index {x} is not in S")));
        }
        Ok(())
    }

    fn check_interior_index(&self, a: &Point) -> Result<()> {
        check_dim(self.dim(), a.dim())?;
        if !self.module.cone().interior_point(a) {
            return Err(Error::NotInterior("index must be a strictly interior lattice point"));
        }
        Ok(())
    }

    /// `(V_x f)(y) = f(y - x)` if `y - x ∈ A`, else 0.
    pub fn v_shift(&self, x: &Point, f: &SparseVector) -> Result<SparseVector> {
        self.check_semigroup_index(x)?;
        if !self.supported_in_module(f) {
            return Err(Error::Support("vector not in ℓ²(A)"));
        }
        Ok(f.translate(x))
    }

    /// `(V_x^* f)(y) = f(y + x)` for `y ∈ A`.
    pub fn v_adjoint(&self, x: &Point, f: &SparseVector) -> Result<SparseVector> {
        self.check_semigroup_index(x)?;
        if !self.supported_in_module(f) {
            return Err(Error::Support("vector not in ℓ²(A)"));
        }
        let back = -x;
        Ok(f.translate(&back).restrict(|y| self.module.member(y)))
    }

    /// Projection onto `Ker(V_x^*)`: multiplication by the indicator of
    /// `A \ (A + x)`.
    pub fn kernel_project(&self, x: &Point, f: &SparseVector) -> SparseVector {
        f.restrict(|y| self.module.member(y) && !self.module.member(&(y - x)))
    }

    /// Window points `y` with `V_x^* e_y = 0`, computed through the adjoint.
    pub fn kernel_window_basis(&self, x: &Point, w: &Window) -> Result<Vec<Point>> {
        let mut basis = Vec::new();
        for y in w.points(self.dim()) {
            if self.module.member(&y) && self.v_adjoint(x, &SparseVector::basis(y.clone()))?.is_zero() {
                basis.push(y);
            }
        }
        Ok(basis)
    }

    /// `W_a f = U_{-a} f` for `f ∈ ℓ²(A^c)`.
    pub fn w_shift(&self, a: &Point, f: &SparseVector) -> Result<SparseVector> {
        self.check_semigroup_index(a)?;
        if !self.supported_in_complement(f) {
            return Err(Error::Support("vector not in ℓ²(A^c)"));
        }
        let out = f.translate(&-a);
        debug_assert!(self.supported_in_complement(&out));
        Ok(out)
    }

    /// `(W_a^* f)(y) = f(y - a)` for `y ∈ A^c`.
    pub fn w_adjoint(&self, a: &Point, f: &SparseVector) -> Result<SparseVector> {
        self.check_semigroup_index(a)?;
        if !self.supported_in_complement(f) {
            return Err(Error::Support("vector not in ℓ²(A^c)"));
        }
        Ok(f.translate(a).restrict(|y| !self.module.member(y)))
    }

    /// For every window point `y`, finds the least `n ≥ 0` with
    /// `y + n·a₀ ∈ A`, where `a₀` is the cone's canonical interior point,
    /// exhibiting `e_y ∈ U_{n·a₀}^* ℓ²(A)`.
    pub fn check_dilation_minimality(&self, w: &Window) -> Result<DilationReport> {
        let direction = self.module.cone().interior_lattice_point();
        let mut covered = Vec::new();
        let mut uncovered = Vec::new();
        for y in w.points(self.dim()) {
            let n = if self.module.member(&y) {
                Some(0)
            } else {
                let bound = self.module.complement_escape_bound(&y, &direction)?;
                (1..=bound).find(|&n| self.module.member(&(&y + &direction.scale(n as i64))))
            };
            match n {
                Some(n) => covered.push(Coverage {
                    shift: direction.scale(n as i64),
                    point: y,
                }),
                None => uncovered.push(y),
            }
        }
        Ok(DilationReport {
            direction,
            covered,
            uncovered,
        })
    }

    /// Least `n ≥ 1` with `y ∉ A + n·a`: `e_y` leaves the range of `V_{na}`.
    pub fn purity_escape(&self, y: &Point, a: &Point) -> Result<Escape> {
        self.check_interior_index(a)?;
        if !self.module.member(y) {
            return Err(Error::Support("purity escape needs a point of A"));
        }
        let bound = self.module.range_escape_bound(y, a)?;
        let steps = (1..=bound)
            .find(|&n| !self.module.member(&(y - &a.scale(n as i64))))
            .ok_or_else(|| Error::Module("escape bound violated".to_string()))?;
        Ok(Escape { steps, bound })
    }

    /// Least `n ≥ 1` with `y ∉ A^c - n·a`: `e_y` leaves the range of `W_{na}`.
    pub fn complement_escape(&self, y: &Point, a: &Point) -> Result<Escape> {
        self.check_interior_index(a)?;
        if self.module.member(y) {
            return Err(Error::Support("complement escape needs a point of A^c"));
        }
        let bound = self.module.complement_escape_bound(y, a)?;
        let steps = (1..=bound)
            .find(|&n| self.module.member(&(y + &a.scale(n as i64))))
            .ok_or_else(|| Error::Module("escape bound violated".to_string()))?;
        Ok(Escape { steps, bound })
    }
}
