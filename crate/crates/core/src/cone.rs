//! Rational polyhedral cones `P ⊂ R^d` kept in both generator (V) and
//! halfspace (H) form.
//!
//! The H-form is produced by the double description method run on the dual
//! cone `{n : ⟨g, n⟩ ≥ 0 for all generators g}`; its extreme rays are the
//! facet normals of `P`. Normals are stored as primitive integer vectors in
//! lexicographic order, so two cones are equal iff their H-forms are equal.

use alloc::string::ToString;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{check_dim, Error, Result};
use crate::lattice::Point;
use crate::lp;
use crate::rational::{
    dot, floor_div, independent_subset, kernel_vector, neg, primitive, primitive_rational, rank,
    solve, to_i64_vec, RatVec, Rational,
};

pub const MAX_DIM: usize = 4;
pub const MAX_GENERATORS: usize = 16;

#[derive(Clone, Debug)]
pub struct Cone {
    dim: usize,
    generators: Vec<RatVec>,
    halfspaces: Vec<RatVec>,
    int_normals: Vec<Vec<i64>>,
    steps: Vec<Point>,
    pointed: bool,
}

impl PartialEq for Cone {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.int_normals == other.int_normals
    }
}

impl Eq for Cone {}

impl Cone {
    /// Builds a cone from generators, synthesizing the halfspace form.
    ///
    /// Rejected inputs: wrong lengths, more than [`MAX_DIM`] dimensions or
    /// [`MAX_GENERATORS`] generators, all-zero input, a generator pair
    /// `g, -λg` (a line), generators that do not span `R^d`, and generators
    /// whose positive hull is all of `R^d` (empty halfspace set).
    pub fn from_generators(dim: usize, generators: &[RatVec]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DegenerateCone("dimension must be positive".to_string()));
        }
        if dim > MAX_DIM {
            return Err(Error::TooLarge(alloc::format!(
                "dimension {dim} exceeds the supported maximum {MAX_DIM}"
            )));
        }
        if generators.is_empty() {
            return Err(Error::DegenerateCone("no generators given".to_string()));
        }
        if generators.len() > MAX_GENERATORS {
            return Err(Error::TooLarge(alloc::format!(
                "{} generators exceed the supported maximum {MAX_GENERATORS}",
                generators.len()
            )));
        }
        for g in generators {
            check_dim(dim, g.len())?;
        }

        let mut gens: Vec<RatVec> = Vec::new();
        let mut dirs: Vec<Vec<BigInt>> = Vec::new();
        for g in generators {
            if g.iter().all(Zero::is_zero) {
                continue;
            }
            let d = primitive(g);
            let opposite: Vec<BigInt> = d.iter().map(|x| -x).collect();
            if dirs.contains(&opposite) {
                return Err(Error::DegenerateCone(alloc::format!(
                    "generators contain the line spanned by {:?}; cones must be pointed in their input",
                    d.iter().map(ToString::to_string).collect::<Vec<_>>()
                )));
            }
            if !dirs.contains(&d) {
                dirs.push(d);
                gens.push(g.clone());
            }
        }
        if gens.is_empty() {
            return Err(Error::DegenerateCone("all generators are zero".to_string()));
        }
        if rank(&gens) < dim {
            return Err(Error::DegenerateCone(alloc::format!(
                "generators span a subspace of dimension {} < {dim}",
                rank(&gens)
            )));
        }

        let halfspaces = dual_extreme_rays(dim, &gens);
        if halfspaces.is_empty() {
            return Err(Error::DegenerateCone(
                "generators positively span R^d; the halfspace description is empty".to_string(),
            ));
        }
        for n in &halfspaces {
            for g in &gens {
                if dot(n, g).is_negative() {
                    return Err(Error::DegenerateCone(
                        "internal: generator violates a synthesized halfspace".to_string(),
                    ));
                }
            }
        }
        let int_normals = halfspaces
            .iter()
            .map(|n| to_i64_vec(&primitive(n)))
            .collect::<Result<Vec<_>>>()?;
        let pointed = rank(&halfspaces) == dim;

        let mut steps: Vec<Point> = Vec::new();
        for g in &gens {
            let extreme = if pointed {
                let tight: Vec<RatVec> = halfspaces
                    .iter()
                    .filter(|n| dot(n, g).is_zero())
                    .cloned()
                    .collect();
                rank(&tight) == dim - 1
            } else {
                true
            };
            if extreme {
                steps.push(Point(to_i64_vec(&primitive(g))?));
            }
        }
        steps.sort();

        Ok(Cone {
            dim,
            generators: gens,
            halfspaces,
            int_normals,
            steps,
            pointed,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[RatVec] {
        &self.generators
    }

    /// Facet normals `n_i`; the cone is `{x : ⟨n_i, x⟩ ≥ 0}`.
    pub fn halfspaces(&self) -> &[RatVec] {
        &self.halfspaces
    }

    pub fn int_normals(&self) -> &[Vec<i64>] {
        &self.int_normals
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    /// Always true: non-spanning generator sets are rejected on construction.
    pub fn is_spanning(&self) -> bool {
        true
    }

    /// Primitive integer generators of the extreme rays; the step set used
    /// for lattice minimality scans.
    pub fn lattice_steps(&self) -> &[Point] {
        &self.steps
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.halfspaces.iter().all(|n| !dot(n, x).is_negative()))
    }

    /// Membership in the interior `Ω`.
    pub fn contains_interior(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(self.halfspaces.iter().all(|n| dot(n, x).is_positive()))
    }

    /// Membership of a lattice point in `S = P ∩ Z^d`.
    pub fn contains_point(&self, p: &Point) -> bool {
        debug_assert_eq!(p.dim(), self.dim);
        self.int_normals.iter().all(|n| p.dot(n) >= 0)
    }

    pub fn interior_point(&self, p: &Point) -> bool {
        debug_assert_eq!(p.dim(), self.dim);
        self.int_normals.iter().all(|n| p.dot(n) > 0)
    }

    /// Generator-form membership decided by exact linear programming.
    pub fn contains_by_generators(&self, x: &[Rational]) -> Result<bool> {
        check_dim(self.dim, x.len())?;
        Ok(lp::nonnegative_combination(&self.generators, x).is_some())
    }

    /// A strictly interior lattice point: the sum of the lattice steps.
    pub fn interior_lattice_point(&self) -> Point {
        let a = self
            .steps
            .iter()
            .fold(Point::zero(self.dim), |acc, s| &acc + s);
        debug_assert!(self.interior_point(&a));
        a
    }

    /// Least `n ≥ 1` such that `n·a - x` lies in the interior.
    pub fn archimedean_bound(&self, a: &[Rational], x: &[Rational]) -> Result<u64> {
        check_dim(self.dim, x.len())?;
        if !self.contains_interior(a)? {
            return Err(Error::NotInterior("Archimedean bound requires a ∈ Ω"));
        }
        let mut n = BigInt::one();
        for normal in &self.halfspaces {
            let k = floor_div(&dot(normal, x), &dot(normal, a)) + BigInt::one();
            if k > n {
                n = k;
            }
        }
        n.to_u64()
            .ok_or_else(|| Error::TooLarge("Archimedean bound exceeds 64 bits".to_string()))
    }

    /// Lattice form of [`Cone::archimedean_bound`].
    pub fn archimedean_bound_lattice(&self, a: &Point, x: &Point) -> Result<u64> {
        check_dim(self.dim, x.dim())?;
        if !self.interior_point(a) {
            return Err(Error::NotInterior("Archimedean bound requires a ∈ Ω"));
        }
        let mut n: i64 = 1;
        for normal in &self.int_normals {
            let k = x.dot(normal).div_euclid(a.dot(normal)) + 1;
            n = n.max(k);
        }
        Ok(n as u64)
    }

    /// A vector `x` with `x ∉ P` and `-x ∉ P`, scaled to a primitive integer
    /// vector. Solves `⟨n₁,x⟩ = -1, ⟨n₂,x⟩ = 1` for the first independent
    /// pair of normals, completed to a full-rank system with zero right-hand
    /// sides.
    pub fn outside_witness(&self) -> Result<RatVec> {
        if self.dim == 1 {
            return Err(Error::DimensionOne("no witness exists in dimension 1"));
        }
        let hs = &self.halfspaces;
        let pair = (0..hs.len())
            .flat_map(|i| (i + 1..hs.len()).map(move |j| (i, j)))
            .find(|&(i, j)| rank(&[hs[i].clone(), hs[j].clone()]) == 2)
            .ok_or_else(|| {
                Error::DegenerateCone(
                    "fewer than two independent halfspace normals; cone is not pointed-spanning"
                        .to_string(),
                )
            })?;
        let mut rows = alloc::vec![hs[pair.0].clone(), hs[pair.1].clone()];
        let mut rhs = alloc::vec![-Rational::one(), Rational::one()];
        let candidates = hs.iter().cloned().chain((0..self.dim).map(|i| {
            let mut e = alloc::vec![Rational::zero(); self.dim];
            e[i] = Rational::one();
            e
        }));
        for c in candidates {
            if rows.len() == self.dim {
                break;
            }
            rows.push(c);
            if rank(&rows) == rows.len() {
                rhs.push(Rational::zero());
            } else {
                rows.pop();
            }
        }
        let x = solve(&rows, &rhs).expect("full-rank system by construction");
        let x = primitive_rational(&x);
        debug_assert!(!self.contains(&x)? && !self.contains(&neg(&x))?);
        Ok(x)
    }

    /// A nonzero `ℓ` with `±ℓ ∈ P`, when the cone is not pointed.
    pub fn lineality_direction(&self) -> Option<RatVec> {
        if self.pointed {
            return None;
        }
        kernel_vector(&self.halfspaces, self.dim).map(|v| primitive_rational(&v))
    }

    /// `d` linearly independent facet normals, certifying pointedness.
    pub fn pointedness_basis(&self) -> Option<Vec<RatVec>> {
        let idx = independent_subset(&self.halfspaces);
        (idx.len() == self.dim).then(|| idx.into_iter().map(|i| self.halfspaces[i].clone()).collect())
    }
}

/// Extreme rays of `{n : ⟨g, n⟩ ≥ 0 ∀ g ∈ rows}` for a full-rank row set,
/// by the double description method with the algebraic adjacency test.
fn dual_extreme_rays(dim: usize, rows: &[RatVec]) -> Vec<RatVec> {
    let basis_idx = independent_subset(rows);
    debug_assert_eq!(basis_idx.len(), dim);
    let basis: Vec<RatVec> = basis_idx.iter().map(|&i| rows[i].clone()).collect();

    // columns of the inverse of the basis matrix
    let mut rays: Vec<RatVec> = (0..dim)
        .map(|k| {
            let mut e = alloc::vec![Rational::zero(); dim];
            e[k] = Rational::one();
            let col = solve(&basis, &e).expect("independent rows");
            primitive_rational(&col)
        })
        .collect();
    let mut processed = basis;

    for (i, h) in rows.iter().enumerate() {
        if basis_idx.contains(&i) {
            continue;
        }
        let vals: Vec<Rational> = rays.iter().map(|r| dot(h, r)).collect();
        let mut next: Vec<RatVec> = Vec::new();
        for (r, v) in rays.iter().zip(&vals) {
            if !v.is_negative() {
                next.push(r.clone());
            }
        }
        for (p, vp) in rays.iter().zip(&vals) {
            if !vp.is_positive() {
                continue;
            }
            for (q, vq) in rays.iter().zip(&vals) {
                if !vq.is_negative() {
                    continue;
                }
                let common: Vec<RatVec> = processed
                    .iter()
                    .filter(|row| dot(row, p).is_zero() && dot(row, q).is_zero())
                    .cloned()
                    .collect();
                if dim < 2 || rank(&common) != dim - 2 {
                    continue;
                }
                let combo: RatVec = q
                    .iter()
                    .zip(p)
                    .map(|(qk, pk)| vp * qk - vq * pk)
                    .collect();
                let combo = primitive_rational(&combo);
                if !next.contains(&combo) {
                    next.push(combo);
                }
            }
        }
        rays = next;
        processed.push(h.clone());
    }
    rays.sort();
    rays
}
