//! Exact rational vectors and Gaussian elimination.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rat = BigRational;

pub fn rat(i: i64) -> Rat {
    BigRational::from_integer(BigInt::from(i))
}

pub fn rat_frac(p: i64, q: i64) -> Rat {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn rat_from_str(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num: BigInt = p.trim().parse().ok()?;
        let den: BigInt = q.trim().parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(BigRational::new(num, den))
    } else {
        let num: BigInt = s.parse().ok()?;
        Some(BigRational::from_integer(num))
    }
}

pub fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x * y)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * s).collect()
}

/// Row-echelon rank of a rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let pivot = (r..m.len()).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = &m[i][c] / &inv;
                for j in c..cols {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// Affine rank of a point set: rank of differences to the first point,
/// plus one (so a single point has affine rank 1, a segment 2, ...).
pub fn affine_rank(points: &[Vec<Rat>]) -> usize {
    if points.is_empty() {
        return 0;
    }
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    rank(&diffs) + 1
}

/// Unique-up-to-scale normal of the hyperplane through `points` (which must
/// have affine rank exactly `dim`, i.e. span a hyperplane in R^dim).
/// Returns the normalized normal and offset with `normal · p = offset`.
pub fn hyperplane_through(points: &[Vec<Rat>]) -> Option<(Vec<Rat>, Rat)> {
    let dim = points[0].len();
    let diffs: Vec<Vec<Rat>> = points[1..].iter().map(|p| sub(p, &points[0])).collect();
    let normal = nullspace_vector(&diffs, dim)?;
    let offset = dot(&normal, &points[0]);
    Some(normalize_hyperplane(normal, offset))
}

/// A nonzero solution of `rows · x = 0` when the solution space is exactly
/// one-dimensional; None otherwise.
fn nullspace_vector(rows: &[Vec<Rat>], dim: usize) -> Option<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivot_col = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let pivot = (r..m.len()).find(|&i| !m[i][c].is_zero());
        let Some(p) = pivot else { continue };
        m.swap(r, p);
        let inv = m[r][c].clone();
        for j in 0..dim {
            m[r][j] = &m[r][j] / &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in 0..dim {
                    let delta = &factor * &m[r][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
        pivot_col.push(c);
        r += 1;
    }
    if r + 1 != dim {
        return None; // nullity != 1
    }
    let free = (0..dim).find(|c| !pivot_col.contains(c))?;
    let mut x = vec![Rat::zero(); dim];
    x[free] = Rat::one();
    for (row, &pc) in pivot_col.iter().enumerate() {
        x[pc] = -m[row][free].clone();
    }
    Some(x)
}

/// Scales so the first nonzero entry of (normal, offset) is positive and all
/// entries are integers with gcd 1. Deterministic canonical form.
pub fn normalize_hyperplane(normal: Vec<Rat>, offset: Rat) -> (Vec<Rat>, Rat) {
    let mut denom_lcm = BigInt::one();
    for x in normal.iter().chain(std::iter::once(&offset)) {
        denom_lcm = num_integer::lcm(denom_lcm, x.denom().clone());
    }
    let mut ints: Vec<BigInt> = normal
        .iter()
        .chain(std::iter::once(&offset))
        .map(|x| x.numer() * (&denom_lcm / x.denom()))
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        g = num_integer::gcd(g, v.abs());
    }
    if !g.is_zero() && !g.is_one() {
        for v in ints.iter_mut() {
            *v = &*v / &g;
        }
    }
    if let Some(first) = ints.iter().find(|v| !v.is_zero()) {
        if first.is_negative() {
            for v in ints.iter_mut() {
                *v = -&*v;
            }
        }
    }
    let off = ints.pop().expect("offset present");
    (
        ints.into_iter().map(BigRational::from_integer).collect(),
        BigRational::from_integer(off),
    )
}

/// Solves the square system `a · x = b` (exact); None if singular.
pub fn solve_square(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let n = a.len();
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        let inv = m[c][c].clone();
        for j in c..=n {
            m[c][j] = &m[c][j] / &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..=n {
                    let delta = &factor * &m[c][j];
                    m[i][j] = &m[i][j] - &delta;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        let rows = vec![vec![rat(1), rat(0), rat(1)], vec![rat(0), rat(1), rat(1)]];
        assert_eq!(rank(&rows), 2);
        let (n, c) = hyperplane_through(&[
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(0), rat(0), rat(1)],
        ])
        .unwrap();
        // x + y + z = 1
        assert_eq!(n, vec![rat(1), rat(1), rat(1)]);
        assert_eq!(c, rat(1));
    }

    #[test]
    fn affine_ranks() {
        let square = vec![
            vec![rat(0), rat(0)],
            vec![rat(1), rat(0)],
            vec![rat(0), rat(1)],
            vec![rat(1), rat(1)],
        ];
        assert_eq!(affine_rank(&square), 3);
        let segment = vec![vec![rat(0), rat(0)], vec![rat(2), rat(2)]];
        assert_eq!(affine_rank(&segment), 2);
    }

    #[test]
    fn string_round_trip() {
        let x = rat_frac(-3, 6);
        assert_eq!(rat_to_string(&x), "-1/2");
        assert_eq!(rat_from_str("-1/2").unwrap(), x);
        assert_eq!(rat_from_str("7").unwrap(), rat(7));
    }

    #[test]
    fn solves_square_systems() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(5), rat(1)];
        let x = solve_square(&a, &b).unwrap();
        assert_eq!(x, vec![rat(2), rat(1)]);
    }
}
