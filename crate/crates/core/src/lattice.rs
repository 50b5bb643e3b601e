//! Integer lattice points and finite observation windows.

use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::rational::{from_ints, RatVec};

/// A point of `Z^d`. Ordered lexicographically.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Point(pub Vec<i64>);

impl Point {
    pub fn new(coords: Vec<i64>) -> Self {
        Point(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Point(alloc::vec![0; dim])
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut p = Point::zero(dim);
        p.0[i] = 1;
        p
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn scale(&self, k: i64) -> Point {
        Point(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, normal: &[i64]) -> i64 {
        self.0.iter().zip(normal).map(|(a, b)| a * b).sum()
    }

    pub fn to_rational(&self) -> RatVec {
        from_ints(&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl Add for &Point {
    type Output = Point;
    fn add(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Point {
    type Output = Point;
    fn sub(self, rhs: &Point) -> Point {
        debug_assert_eq!(self.dim(), rhs.dim());
        Point(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Point {
    type Output = Point;
    fn neg(self) -> Point {
        Point(self.0.iter().map(|a| -a).collect())
    }
}

impl From<Vec<i64>> for Point {
    fn from(v: Vec<i64>) -> Self {
        Point(v)
    }
}

/// The box `[-R, R]^d ∩ Z^d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    radius: i64,
}

impl Window {
    pub fn new(radius: i64) -> Result<Self> {
        if radius < 1 {
            return Err(Error::Module(alloc::format!(
                "window radius must be at least 1, got {radius}"
            )));
        }
        Ok(Window { radius })
    }

    pub fn radius(&self) -> i64 {
        self.radius
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.0.iter().all(|x| x.abs() <= self.radius)
    }

    /// Number of lattice points in the window in dimension `dim`.
    pub fn len(&self, dim: usize) -> usize {
        ((2 * self.radius + 1) as usize).pow(dim as u32)
    }

    /// All window points in lexicographic order.
    pub fn points(&self, dim: usize) -> WindowPoints {
        WindowPoints {
            radius: self.radius,
            next: Some(alloc::vec![-self.radius; dim]),
        }
    }
}

pub struct WindowPoints {
    radius: i64,
    next: Option<Vec<i64>>,
}

impl Iterator for WindowPoints {
    type Item = Point;

    fn next(&mut self) -> Option<Point> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut i = succ.len();
        loop {
            if i == 0 {
                break;
            }
            i -= 1;
            if succ[i] < self.radius {
                succ[i] += 1;
                self.next = Some(succ);
                break;
            }
            succ[i] = -self.radius;
        }
        Some(Point(current))
    }
}
