//! Lattice `P`-modules over `S = P ∩ Z^d` and their opposites.
//!
//! A cone module is `A = ∪_{f∈F} (f + S)` for a finite offset set `F`; the
//! opposite of a module `M` is `{x : -x ∉ M}`, the lattice version of
//! `-(Int A)^c`. The representation class has depth at most one: the
//! opposite of an opposite collapses back to the inner cone module.

use alloc::boxed::Box;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::cone::Cone;
use crate::error::{check_dim, Error, Result};
use crate::lattice::{Point, Window};
use crate::rational::{neg, rank, RatVec, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeModule {
    cone: Cone,
    offsets: Vec<Point>,
}

impl ConeModule {
    pub fn new(cone: Cone, offsets: Vec<Point>) -> Result<Self> {
        if offsets.is_empty() {
            return Err(Error::Module("a cone module needs at least one offset".to_string()));
        }
        for f in &offsets {
            check_dim(cone.dim(), f.dim())?;
        }
        let offsets = reduce_offsets(&offsets, &cone);
        Ok(ConeModule { cone, offsets })
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    /// Reduced offsets: an antichain in the `S`-order, sorted.
    pub fn offsets(&self) -> &[Point] {
        &self.offsets
    }

    pub fn member(&self, y: &Point) -> bool {
        self.offsets.iter().any(|f| self.cone.contains_point(&(y - f)))
    }

    fn translate(&self, z: &Point) -> ConeModule {
        ConeModule {
            cone: self.cone.clone(),
            offsets: self.offsets.iter().map(|f| f + z).collect(),
        }
    }

    fn single_offset(&self) -> Option<&Point> {
        match self.offsets.as_slice() {
            [f] => Some(f),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleExpr {
    Cone(ConeModule),
    Opposite(ConeModule),
}

impl ModuleExpr {
    pub fn cone_module(cone: Cone, offsets: Vec<Point>) -> Result<Self> {
        Ok(ModuleExpr::Cone(ConeModule::new(cone, offsets)?))
    }

    /// The lattice points `S` of the cone itself (`F = {0}`).
    pub fn semigroup(cone: Cone) -> Self {
        let zero = Point::zero(cone.dim());
        ModuleExpr::Cone(ConeModule {
            cone,
            offsets: alloc::vec![zero],
        })
    }

    pub fn cone(&self) -> &Cone {
        match self {
            ModuleExpr::Cone(m) | ModuleExpr::Opposite(m) => &m.cone,
        }
    }

    pub fn dim(&self) -> usize {
        self.cone().dim()
    }

    pub fn inner(&self) -> &ConeModule {
        match self {
            ModuleExpr::Cone(m) | ModuleExpr::Opposite(m) => m,
        }
    }

    pub fn is_opposite(&self) -> bool {
        matches!(self, ModuleExpr::Opposite(_))
    }

    pub fn member(&self, y: &Point) -> bool {
        match self {
            ModuleExpr::Cone(m) => m.member(y),
            ModuleExpr::Opposite(m) => !m.member(&-y),
        }
    }

    /// Complement-then-negate; an opposite of an opposite collapses.
    pub fn opposite(&self) -> ModuleExpr {
        match self {
            ModuleExpr::Cone(m) => ModuleExpr::Opposite(m.clone()),
            ModuleExpr::Opposite(m) => ModuleExpr::Cone(m.clone()),
        }
    }

    /// The module shifted by `z`. For opposites, `Opp(M) + z = Opp(M - z)`.
    pub fn translate(&self, z: &Point) -> ModuleExpr {
        match self {
            ModuleExpr::Cone(m) => ModuleExpr::Cone(m.translate(z)),
            ModuleExpr::Opposite(m) => ModuleExpr::Opposite(m.translate(&-z)),
        }
    }

    /// The same set as a plain cone module, available in dimension one.
    pub fn as_cone_module(&self) -> Option<ConeModule> {
        (self.dim() == 1).then(|| self.normalized_1d())
    }

    /// In dimension one every module here is a cone module; rewrites an
    /// opposite exactly. `Opp({n·y ≥ c}) = {n·y ≥ 1 - c}` for the unit normal `n`.
    pub(crate) fn normalized_1d(&self) -> ConeModule {
        debug_assert_eq!(self.dim(), 1);
        match self {
            ModuleExpr::Cone(m) => m.clone(),
            ModuleExpr::Opposite(m) => {
                let n = m.cone.int_normals()[0][0];
                let c = m.offsets.iter().map(|f| n * f.0[0]).min().expect("nonempty");
                ConeModule {
                    cone: m.cone.clone(),
                    offsets: alloc::vec![Point(alloc::vec![n * (1 - c)])],
                }
            }
        }
    }

    /// An `n ≥ 1` with `y - n·a ∉ self`, for `y` in the module and `a`
    /// strictly interior, derived from Archimedean bounds.
    pub fn range_escape_bound(&self, y: &Point, a: &Point) -> Result<u64> {
        let cone = self.cone();
        let offs = &self.inner().offsets;
        match self {
            ModuleExpr::Cone(_) => max_bound(offs.iter().map(|f| cone.archimedean_bound_lattice(a, &(y - f)))),
            ModuleExpr::Opposite(_) => min_bound(offs.iter().map(|f| cone.archimedean_bound_lattice(a, &(y + f)))),
        }
    }

    /// An `n ≥ 1` with `y + n·a ∈ self`, for `y` outside the module and `a`
    /// strictly interior.
    pub fn complement_escape_bound(&self, y: &Point, a: &Point) -> Result<u64> {
        let cone = self.cone();
        let offs = &self.inner().offsets;
        match self {
            ModuleExpr::Cone(_) => min_bound(offs.iter().map(|f| cone.archimedean_bound_lattice(a, &(f - y)))),
            ModuleExpr::Opposite(_) => max_bound(offs.iter().map(|f| cone.archimedean_bound_lattice(a, &-&(y + f)))),
        }
    }
}

fn max_bound(mut it: impl Iterator<Item = Result<u64>>) -> Result<u64> {
    it.try_fold(1, |acc, b| Ok(acc.max(b?)))
}

fn min_bound(mut it: impl Iterator<Item = Result<u64>>) -> Result<u64> {
    it.try_fold(u64::MAX, |acc, b| Ok(acc.min(b?)))
}

/// The `S`-minimal elements of `offsets`, deduplicated and sorted. For cones
/// with a line, mutually comparable offsets keep their lexicographically
/// smallest representative.
pub fn reduce_offsets(offsets: &[Point], cone: &Cone) -> Vec<Point> {
    let mut uniq: Vec<Point> = offsets.to_vec();
    uniq.sort();
    uniq.dedup();
    let dominated = |f: &Point| {
        uniq.iter().any(|g| {
            g != f
                && cone.contains_point(&(f - g))
                && (!cone.contains_point(&(g - f)) || g < f)
        })
    };
    uniq.iter().filter(|f| !dominated(f)).cloned().collect()
}

/// Window points `y ∈ m` such that `y - g ∉ m` for every step `g`.
pub fn minimal_elements_in_window(m: &ModuleExpr, w: &Window, steps: &[Point]) -> Vec<Point> {
    w.points(m.dim())
        .filter(|y| m.member(y) && steps.iter().all(|g| !m.member(&(y - g))))
        .collect()
}

/// The continuous set a module stands for in extreme-point arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ContinuousSet {
    /// `f + P`.
    TranslatedCone { apex: Point },
    /// `-(f + Ω)^c`, the opposite of `f + P`.
    OppositeOfTranslatedCone { apex: Point },
}

impl ContinuousSet {
    pub fn contains(&self, cone: &Cone, x: &[Rational]) -> Result<bool> {
        match self {
            ContinuousSet::TranslatedCone { apex } => {
                let shifted: RatVec = x.iter().zip(apex.to_rational()).map(|(a, b)| a - b).collect();
                cone.contains(&shifted)
            }
            ContinuousSet::OppositeOfTranslatedCone { apex } => {
                let shifted: RatVec = x.iter().zip(apex.to_rational()).map(|(a, b)| -a - b).collect();
                Ok(!cone.contains_interior(&shifted)?)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExtremeCertificate {
    /// `d` independent facet normals: the translated cone is pointed and its
    /// apex is its only extreme point.
    PointedApex { apex: RatVec, normal_basis: Vec<RatVec> },
    /// `center ± direction` both lie in the set, so `center` is a midpoint;
    /// the set is invariant under positive scaling about `center`, so no
    /// other point can be extreme either.
    Midpoint { center: RatVec, direction: RatVec },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremeReport {
    pub set: ContinuousSet,
    pub extreme_points: Vec<RatVec>,
    pub certificate: ExtremeCertificate,
}

impl ExtremeReport {
    /// Re-checks the certificate by direct membership and rank computations.
    pub fn verify(&self, cone: &Cone) -> Result<bool> {
        match &self.certificate {
            ExtremeCertificate::PointedApex { apex, normal_basis } => Ok(normal_basis.len()
                == cone.dim()
                && rank(normal_basis) == cone.dim()
                && normal_basis.iter().all(|n| cone.halfspaces().contains(n))
                && self.set.contains(cone, apex)?
                && self.extreme_points == alloc::vec![apex.clone()]),
            ExtremeCertificate::Midpoint { center, direction } => {
                let plus: RatVec = center.iter().zip(direction).map(|(c, d)| c + d).collect();
                let minus: RatVec = center.iter().zip(direction).map(|(c, d)| c - d).collect();
                Ok(direction.iter().any(|d| *d != Rational::from_integer(0.into()))
                    && self.set.contains(cone, center)?
                    && self.set.contains(cone, &plus)?
                    && self.set.contains(cone, &minus)?
                    && self.extreme_points.is_empty())
            }
        }
    }
}

/// Extreme points of the continuous set behind a single-offset module or
/// its opposite: `{f}` for a pointed `f + P`, and `∅` for `-(f + Ω)^c`,
/// certified by the midpoint identity `-f = ((-f + x) + (-f - x)) / 2`
/// with `x ∉ P ∪ -P`.
pub fn extreme_points_continuous(m: &ModuleExpr) -> Result<ExtremeReport> {
    let cone = m.cone();
    if cone.dim() == 1 {
        return Err(Error::DimensionOne(
            "extreme-point certificates need d ≥ 2 (in d = 1 the opposite is a translate)",
        ));
    }
    let apex = m.inner().single_offset().cloned().ok_or_else(|| {
        Error::Module("extreme points are reported only for single-offset modules and their opposites".to_string())
    })?;
    let apex_r = apex.to_rational();
    match m {
        ModuleExpr::Cone(_) => {
            let set = ContinuousSet::TranslatedCone { apex };
            match cone.pointedness_basis() {
                Some(normal_basis) => Ok(ExtremeReport {
                    set,
                    extreme_points: alloc::vec![apex_r.clone()],
                    certificate: ExtremeCertificate::PointedApex { apex: apex_r, normal_basis },
                }),
                None => Ok(ExtremeReport {
                    set,
                    extreme_points: Vec::new(),
                    certificate: ExtremeCertificate::Midpoint {
                        center: apex_r,
                        direction: cone.lineality_direction().expect("not pointed"),
                    },
                }),
            }
        }
        ModuleExpr::Opposite(_) => {
            let direction = match cone.lineality_direction() {
                Some(l) => l,
                None => cone.outside_witness()?,
            };
            Ok(ExtremeReport {
                set: ContinuousSet::OppositeOfTranslatedCone { apex },
                extreme_points: Vec::new(),
                certificate: ExtremeCertificate::Midpoint { center: neg(&apex_r), direction },
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoCertificate {
    /// Reduced offset antichains of the cone modules compared (the inner
    /// modules, for two opposites) are not translates of each other.
    Antichains { left: Vec<Point>, right: Vec<Point> },
    /// The continuous sets have different numbers of extreme points.
    ExtremePoints { left: Box<ExtremeReport>, right: Box<ExtremeReport> },
    /// The cone module has step-minimal elements; the opposite of a
    /// single-offset module provably has none (every facet contains a step).
    MinimalElements { cone_module_minimal: Vec<Point>, cone_module_is_left: bool },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowEvidence {
    pub window: Window,
    pub left_minimal: Vec<Point>,
    pub right_minimal: Vec<Point>,
    /// A shift consistent with the window data, if one was found.
    pub candidate_shift: Option<Point>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// `right = left + shift`.
    Yes { shift: Point },
    No(NoCertificate),
    Inconclusive(WindowEvidence),
}

/// Decides whether `m2` is a translate `m1 + z` of `m1`.
///
/// Cone modules are compared exactly through their reduced antichains; two
/// opposites through their inner modules; mixed pairs are rewritten exactly
/// in `d = 1` and otherwise settled by extreme-point or minimal-element
/// certificates when one applies, falling back to window evidence.
pub fn translate_equivalent(m1: &ModuleExpr, m2: &ModuleExpr, w: &Window) -> Result<Decision> {
    let cone = m1.cone();
    if cone != m2.cone() {
        return Err(Error::ConeMismatch);
    }
    if !cone.is_pointed() {
        return Err(Error::Module("translate decision requires a pointed cone".to_string()));
    }
    if cone.dim() == 1 {
        return Ok(decide_cone_modules(&m1.normalized_1d(), &m2.normalized_1d()));
    }
    match (m1, m2) {
        (ModuleExpr::Cone(a), ModuleExpr::Cone(b)) => Ok(decide_cone_modules(a, b)),
        (ModuleExpr::Opposite(a), ModuleExpr::Opposite(b)) => {
            // Opp(b) = Opp(a) + z  iff  b = a - z
            Ok(match decide_cone_modules(a, b) {
                Decision::Yes { shift } => Decision::Yes { shift: -&shift },
                other => other,
            })
        }
        (ModuleExpr::Cone(c), ModuleExpr::Opposite(o)) => decide_mixed(m1, m2, c, o, true, w),
        (ModuleExpr::Opposite(o), ModuleExpr::Cone(c)) => decide_mixed(m1, m2, c, o, false, w),
    }
}

fn decide_cone_modules(a: &ConeModule, b: &ConeModule) -> Decision {
    let (fa, fb) = (&a.offsets, &b.offsets);
    let no = || {
        Decision::No(NoCertificate::Antichains {
            left: fa.clone(),
            right: fb.clone(),
        })
    };
    if fa.len() != fb.len() {
        return no();
    }
    let anchor = &fa[0];
    let mut shifts: Vec<Point> = fb
        .iter()
        .map(|b| b - anchor)
        .filter(|z| {
            let mut moved: Vec<Point> = fa.iter().map(|f| f + z).collect();
            moved.sort();
            &moved == fb
        })
        .collect();
    shifts.sort();
    match shifts.into_iter().next() {
        Some(shift) => Decision::Yes { shift },
        None => no(),
    }
}

fn decide_mixed(
    m1: &ModuleExpr,
    m2: &ModuleExpr,
    cone_side: &ConeModule,
    opposite_inner: &ConeModule,
    cone_is_left: bool,
    w: &Window,
) -> Result<Decision> {
    if cone_side.single_offset().is_some() && opposite_inner.single_offset().is_some() {
        let left = extreme_points_continuous(m1)?;
        let right = extreme_points_continuous(m2)?;
        return Ok(Decision::No(NoCertificate::ExtremePoints {
            left: Box::new(left),
            right: Box::new(right),
        }));
    }
    if opposite_inner.single_offset().is_some() {
        return Ok(Decision::No(NoCertificate::MinimalElements {
            cone_module_minimal: cone_side.offsets.clone(),
            cone_module_is_left: cone_is_left,
        }));
    }
    let steps = m1.cone().lattice_steps();
    let left_minimal = minimal_elements_in_window(m1, w, steps);
    let right_minimal = minimal_elements_in_window(m2, w, steps);
    let candidate_shift = match (left_minimal.first(), right_minimal.first()) {
        (Some(l), Some(r)) if left_minimal.len() == right_minimal.len() => {
            let z = r - l;
            let agrees = w.points(m1.dim()).all(|y| m2.member(&y) == m1.member(&(&y - &z)));
            agrees.then_some(z)
        }
        _ => None,
    };
    Ok(Decision::Inconclusive(WindowEvidence {
        window: *w,
        left_minimal,
        right_minimal,
        candidate_shift,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::from_ints;
    use alloc::vec;

    fn cone(gens: &[&[i64]]) -> Cone {
        let g: Vec<RatVec> = gens.iter().map(|g| from_ints(g)).collect();
        Cone::from_generators(gens[0].len(), &g).unwrap()
    }

    fn quadrant() -> Cone {
        cone(&[&[1, 0], &[0, 1]])
    }

    fn p(v: &[i64]) -> Point {
        Point(v.to_vec())
    }

    #[test]
    fn membership_examples() {
        let n2 = ModuleExpr::semigroup(quadrant());
        assert!(n2.member(&p(&[3, 0])));
        let b = n2.opposite();
        assert!(b.member(&p(&[1, -5])));
        assert!(!b.member(&p(&[0, 0])));
        assert_eq!(b.opposite(), n2);
    }

    #[test]
    fn one_dimensional_opposite_is_shift_by_one() {
        let n = ModuleExpr::semigroup(cone(&[&[1]]));
        let w = Window::new(10).unwrap();
        let members: Vec<Point> = w.points(1).filter(|y| n.opposite().member(y)).collect();
        let expected: Vec<Point> = (1..=10).map(|k| p(&[k])).collect();
        assert_eq!(members, expected);
    }

    #[test]
    fn reduction_examples() {
        let q = quadrant();
        assert_eq!(reduce_offsets(&[p(&[0, 0]), p(&[2, 1])], &q), vec![p(&[0, 0])]);
        assert_eq!(
            reduce_offsets(&[p(&[1, 0]), p(&[0, 1])], &q),
            vec![p(&[0, 1]), p(&[1, 0])]
        );
        assert_eq!(
            reduce_offsets(&[p(&[0, 0]), p(&[1, -1]), p(&[2, -2])], &q).len(),
            3
        );
    }

    #[test]
    fn minimal_elements_examples() {
        let q = quadrant();
        let w = Window::new(10).unwrap();
        let steps = q.lattice_steps().to_vec();
        let n2 = ModuleExpr::semigroup(q.clone());
        assert_eq!(minimal_elements_in_window(&n2, &w, &steps), vec![p(&[0, 0])]);
        assert!(minimal_elements_in_window(&n2.opposite(), &w, &steps).is_empty());
        let two = ModuleExpr::cone_module(q, vec![p(&[1, 0]), p(&[0, 1])]).unwrap();
        assert_eq!(
            minimal_elements_in_window(&two, &w, &steps),
            vec![p(&[0, 1]), p(&[1, 0])]
        );
    }

    #[test]
    fn extreme_point_reports() {
        let q = quadrant();
        let n2 = ModuleExpr::semigroup(q.clone());
        let r = extreme_points_continuous(&n2).unwrap();
        assert_eq!(r.extreme_points, vec![from_ints(&[0, 0])]);
        assert!(r.verify(&q).unwrap());
        let r = extreme_points_continuous(&n2.opposite()).unwrap();
        assert!(r.extreme_points.is_empty());
        assert_eq!(
            r.certificate,
            ExtremeCertificate::Midpoint { center: from_ints(&[0, 0]), direction: from_ints(&[1, -1]) }
        );
        assert!(r.verify(&q).unwrap());
        let half = ModuleExpr::semigroup(cone(&[&[1]]));
        assert!(matches!(extreme_points_continuous(&half), Err(Error::DimensionOne(_))));
    }

    #[test]
    fn translate_examples() {
        let q = quadrant();
        let w = Window::new(10).unwrap();
        let n2 = ModuleExpr::semigroup(q.clone());
        let shifted = ModuleExpr::cone_module(q.clone(), vec![p(&[1, 1])]).unwrap();
        assert_eq!(
            translate_equivalent(&n2, &shifted, &w).unwrap(),
            Decision::Yes { shift: p(&[1, 1]) }
        );
        assert_eq!(
            translate_equivalent(&shifted, &n2, &w).unwrap(),
            Decision::Yes { shift: p(&[-1, -1]) }
        );
        assert!(matches!(
            translate_equivalent(&n2, &n2.opposite(), &w).unwrap(),
            Decision::No(NoCertificate::ExtremePoints { .. })
        ));
        let n = ModuleExpr::semigroup(cone(&[&[1]]));
        assert_eq!(
            translate_equivalent(&n, &n.opposite(), &w).unwrap(),
            Decision::Yes { shift: p(&[1]) }
        );
        let other = ModuleExpr::semigroup(cone(&[&[1, 0], &[1, 1]]));
        assert_eq!(translate_equivalent(&n2, &other, &w), Err(Error::ConeMismatch));
    }

    #[test]
    fn opposite_pairs_and_mixed_fallbacks() {
        let q = quadrant();
        let w = Window::new(6).unwrap();
        let a = ModuleExpr::cone_module(q.clone(), vec![p(&[1, 0]), p(&[0, 2])]).unwrap();
        let z = p(&[2, -3]);
        let b = a.translate(&z);
        assert_eq!(
            translate_equivalent(&a.opposite(), &b.opposite(), &w).unwrap(),
            Decision::Yes { shift: -&z }
        );
        assert!(matches!(
            translate_equivalent(&a, &ModuleExpr::semigroup(q.clone()).opposite(), &w).unwrap(),
            Decision::No(NoCertificate::MinimalElements { cone_module_is_left: true, .. })
        ));
        assert!(matches!(
            translate_equivalent(&a, &b.opposite(), &w).unwrap(),
            Decision::Inconclusive(_)
        ));
    }
}
