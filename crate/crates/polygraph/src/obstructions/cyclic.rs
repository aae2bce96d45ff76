//! Facets of cyclic polytopes by Gale's evenness condition.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CyclicError {
    #[error("cyclic polytope needs n >= d+1 >= 3, got d={0}, n={1}")]
    BadParams(usize, usize),
}

/// Facets of the cyclic polytope C_d(n) as d-subsets of {0..n-1}: a subset
/// qualifies iff every maximal block of consecutive elements not touching
/// either end has even size.
pub fn cyclic_polytope_facets(d: usize, n: usize) -> Result<Vec<Vec<usize>>, CyclicError> {
    if d < 2 || n < d + 1 {
        return Err(CyclicError::BadParams(d, n));
    }
    let mut out = Vec::new();
    let mut subset = Vec::with_capacity(d);
    gale_rec(0, n, d, &mut subset, &mut out);
    Ok(out)
}

fn gale_rec(start: usize, n: usize, d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == d {
        if gale_evenness(cur, n) {
            out.push(cur.clone());
        }
        return;
    }
    let remaining = d - cur.len();
    for v in start..=(n - remaining) {
        cur.push(v);
        gale_rec(v + 1, n, d, cur, out);
        cur.pop();
    }
}

fn gale_evenness(subset: &[usize], n: usize) -> bool {
    // Split sorted subset into maximal runs of consecutive integers.
    let mut i = 0;
    while i < subset.len() {
        let mut j = i;
        while j + 1 < subset.len() && subset[j + 1] == subset[j] + 1 {
            j += 1;
        }
        let touches_end = subset[i] == 0 || subset[j] == n - 1;
        if !touches_end && (j - i + 1) % 2 == 1 {
            return false;
        }
        i = j + 1;
    }
    true
}

/// Number of facets of C_d(n).
pub fn cyclic_facet_count(d: usize, n: usize) -> Result<u64, CyclicError> {
    Ok(cyclic_polytope_facets(d, n)?.len() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimension_four_formula() {
        // f_3(C_4(m)) = m(m-3)/2.
        for m in 5..=12u64 {
            assert_eq!(
                cyclic_facet_count(4, m as usize).unwrap(),
                m * (m - 3) / 2,
                "m={m}"
            );
        }
        assert_eq!(cyclic_facet_count(4, 6).unwrap(), 9);
    }

    #[test]
    fn dimension_three_is_simplicial_bound() {
        // 2n - 4 facets for the simplicial 3-polytope on the moment curve.
        assert_eq!(cyclic_facet_count(3, 6).unwrap(), 8);
        for n in 4..=9u64 {
            assert_eq!(cyclic_facet_count(3, n as usize).unwrap(), 2 * n - 4);
        }
    }

    #[test]
    fn polygon_edges() {
        assert_eq!(cyclic_facet_count(2, 5).unwrap(), 5);
        for n in 3..=9u64 {
            assert_eq!(cyclic_facet_count(2, n as usize).unwrap(), n);
        }
    }

    #[test]
    fn rejects_small_parameters() {
        assert!(cyclic_facet_count(3, 3).is_err());
        assert!(cyclic_facet_count(1, 5).is_err());
    }

    #[test]
    fn gale_counts_match_brute_force_hulls() {
        // Independent oracle: exact hull facet counts on the moment curve.
        use crate::geometry::{convex_hull_facets, named_polytope, NamedPolytope};
        let _ = convex_hull_facets;
        for d in 2..=5usize {
            for n in (d + 1)..=7usize {
                let p = named_polytope(&NamedPolytope::Cyclic(d, n)).unwrap();
                assert_eq!(
                    p.facet_count() as u64,
                    cyclic_facet_count(d, n).unwrap(),
                    "d={d} n={n}"
                );
            }
        }
    }
}
