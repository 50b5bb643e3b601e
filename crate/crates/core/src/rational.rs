//! Exact rational scalars and the small amount of linear algebra the cone
//! code needs (rank, square solves, kernels, primitive integer scaling).

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// A rational column vector.
pub type RatVec = Vec<Rational>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Parses `"p/q"` or `"p"` (optional leading sign, surrounding spaces allowed).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(alloc::format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let parse_int = |t: &str| -> Result<BigInt> {
        let digits = t.strip_prefix(['-', '+']).unwrap_or(t);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<BigInt>().map_err(|_| bad())
    };
    let n = parse_int(num)?;
    let d = parse_int(den)?;
    if d.is_zero() {
        return Err(Error::Parse(alloc::format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Formats as `"p"` for integers and `"p/q"` otherwise, the inverse of
/// [`parse_rational`].
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub fn dot_int(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, &y)| acc + x * int(y))
}

pub fn neg(v: &[Rational]) -> RatVec {
    v.iter().map(|x| -x).collect()
}

pub fn from_ints(v: &[i64]) -> RatVec {
    v.iter().map(|&x| int(x)).collect()
}

/// Reduces `rows` to reduced row echelon form in place, pivoting only within
/// the first `cols` columns, and returns the pivot columns.
fn echelon(rows: &mut [RatVec], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x /= &lead;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for j in c..rows[i].len() {
                    let delta = &factor * &rows[r][j];
                    rows[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(rows: &[RatVec]) -> usize {
    let Some(cols) = rows.first().map(Vec::len) else {
        return 0;
    };
    let mut m = rows.to_vec();
    echelon(&mut m, cols).len()
}

/// Solves the square system `a x = b`; `None` when `a` is singular.
pub fn solve(a: &[RatVec], b: &[Rational]) -> Option<RatVec> {
    let n = a.len();
    let mut aug: Vec<RatVec> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = echelon(&mut aug, n);
    if pivots.len() < n {
        return None;
    }
    Some(aug.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// A nonzero vector orthogonal to every row, if the rows do not span.
pub fn kernel_vector(rows: &[RatVec], dim: usize) -> Option<RatVec> {
    let mut m = rows.to_vec();
    let pivots = echelon(&mut m, dim);
    let free = (0..dim).find(|c| !pivots.contains(c))?;
    let mut v = alloc::vec![Rational::zero(); dim];
    v[free] = Rational::one();
    for (row, &pc) in m.iter().zip(&pivots) {
        v[pc] = -row[free].clone();
    }
    Some(v)
}

/// Greedily picks indices of a maximal linearly independent subfamily.
pub fn independent_subset(rows: &[RatVec]) -> Vec<usize> {
    let mut picked: Vec<usize> = Vec::new();
    let mut basis: Vec<RatVec> = Vec::new();
    for (i, r) in rows.iter().enumerate() {
        basis.push(r.clone());
        if rank(&basis) == basis.len() {
            picked.push(i);
        } else {
            basis.pop();
        }
    }
    picked
}

/// Positive rescaling of `v` to a primitive integer vector (coprime entries).
/// The zero vector maps to itself.
pub fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let den = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return scaled;
    }
    scaled.into_iter().map(|x| x / &g).collect()
}

pub fn primitive_rational(v: &[Rational]) -> RatVec {
    primitive(v).into_iter().map(Rational::from_integer).collect()
}

pub fn to_i64_vec(v: &[BigInt]) -> Result<Vec<i64>> {
    v.iter()
        .map(|x| {
            x.to_i64()
                .ok_or_else(|| Error::TooLarge("coordinate exceeds 64-bit range".to_string()))
        })
        .collect()
}

/// `floor(p / q)` for rationals with `q > 0`.
pub fn floor_div(p: &Rational, q: &Rational) -> BigInt {
    (p / q).floor().to_integer()
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("3").unwrap(), int(3));
        assert_eq!(parse_rational("-6/4").unwrap(), Rational::new((-3).into(), 2.into()));
        assert_eq!(parse_rational(" 2/-4 ").unwrap(), Rational::new((-1).into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(format_rational(&parse_rational("10/4").unwrap()), "5/2");
        assert_eq!(format_rational(&int(-7)), "-7");
    }

    #[test]
    fn rank_and_solve() {
        let rows = vec![from_ints(&[1, 2]), from_ints(&[2, 4])];
        assert_eq!(rank(&rows), 1);
        assert!(solve(&rows, &[int(1), int(2)]).is_none());
        let a = vec![from_ints(&[1, 0]), from_ints(&[1, -1])];
        let x = solve(&a, &[int(1), int(-1)]).unwrap();
        assert_eq!(x, from_ints(&[1, 2]));
    }

    #[test]
    fn kernel_and_primitive() {
        let rows = vec![from_ints(&[0, 0, 1])];
        let k = kernel_vector(&rows, 3).unwrap();
        assert!(dot(&k, &rows[0]).is_zero());
        assert!(k.iter().any(|x| !x.is_zero()));
        let v = vec![Rational::new(2.into(), 3.into()), Rational::new((-4).into(), 9.into())];
        assert_eq!(to_i64_vec(&primitive(&v)).unwrap(), vec![3, -2]);
        assert_eq!(floor_div(&int(-4), &int(3)), BigInt::from(-2));
    }
}
