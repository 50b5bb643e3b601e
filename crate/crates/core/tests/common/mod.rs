#![allow(dead_code)]

use ccrop_core::cone::Cone;
use ccrop_core::lattice::Point;
use ccrop_core::module::ModuleExpr;
use ccrop_core::rational::from_ints;
use ccrop_core::sparse::SparseVector;
use num_complex::Complex64;
use proptest::prelude::*;

pub fn p(v: &[i64]) -> Point {
    Point(v.to_vec())
}

pub fn cone(gens: &[&[i64]]) -> Cone {
    let gens: Vec<_> = gens.iter().map(|g| from_ints(g)).collect();
    Cone::from_generators(gens[0].len(), &gens).unwrap()
}

pub fn quadrant() -> Cone {
    cone(&[&[1, 0], &[0, 1]])
}

pub fn skew() -> Cone {
    cone(&[&[1, 0], &[1, 1]])
}

/// Pointed spanning cones in the plane with small generators.
pub fn planar_cone() -> impl Strategy<Value = Cone> {
    prop::collection::vec(prop::array::uniform2(-3i64..=3), 2..=4).prop_filter_map("not a pointed cone", |gens| {
        let gens: Vec<_> = gens.iter().map(|g| from_ints(g)).collect();
        Cone::from_generators(2, &gens).ok().filter(Cone::is_pointed)
    })
}

pub fn point(dim: usize, r: i64) -> impl Strategy<Value = Point> {
    prop::collection::vec(-r..=r, dim).prop_map(Point)
}

pub fn module_on(c: Cone) -> impl Strategy<Value = ModuleExpr> {
    (prop::collection::vec(point(c.dim(), 2), 1..=3), any::<bool>()).prop_map(move |(offs, opp)| {
        let m = ModuleExpr::cone_module(c.clone(), offs).unwrap();
        if opp {
            m.opposite()
        } else {
            m
        }
    })
}

pub fn planar_module() -> impl Strategy<Value = ModuleExpr> {
    planar_cone().prop_flat_map(module_on)
}

pub fn coeff() -> impl Strategy<Value = Complex64> {
    (-1.0f64..1.0, -1.0f64..1.0).prop_map(|(re, im)| Complex64::new(re, im))
}

/// Sparse vectors on window points filtered by `keep`.
pub fn vector_where(dim: usize, r: i64, keep: impl Fn(&Point) -> bool + Clone + 'static) -> impl Strategy<Value = SparseVector> {
    prop::collection::vec((point(dim, r), coeff()), 0..6).prop_map(move |items| {
        SparseVector::from_entries(items.into_iter().filter(|(p, _)| keep(p)))
    })
}
