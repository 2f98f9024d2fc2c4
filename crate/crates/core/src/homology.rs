//! Reduced simplicial homology ranks over Q or a prime field.
//!
//! The reduced chain complex includes the empty face, so `boundary 0` is the
//! augmentation row mapping each vertex to the empty face. Ranks over Q come
//! from fraction-free (Bareiss) integer elimination: the fast path runs in
//! checked `i128` and falls back to arbitrary-precision integers if a minor
//! ever overflows. Ranks over `F_p` come from ordinary modular elimination.
//! There is no floating point in any path.

use crate::arith::is_prime;
use crate::complex::SimplicialComplex;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("field characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("field characteristic {0} too large (limit 2^31 - 1)")]
    CharacteristicTooLarge(u64),
}

/// Coefficient field for homology and Betti tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    Rationals,
    /// `F_p` for a prime `p`.
    Prime(u64),
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<Self, HomologyError> {
        if p > i32::MAX as u64 {
            return Err(HomologyError::CharacteristicTooLarge(p));
        }
        if !is_prime(p as usize) {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

/// Sparse signed boundary matrix: `rows` faces of dimension `i-1`, `cols`
/// faces of dimension `i`, column entries `(row, sign)` with sign in
/// `{-1, +1}`.
#[derive(Debug, Clone)]
pub struct BoundaryMatrix {
    pub rows: usize,
    pub cols: usize,
    pub col_entries: Vec<Vec<(usize, i8)>>,
}

impl BoundaryMatrix {
    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut dense = vec![vec![0i64; self.cols]; self.rows];
        for (c, entries) in self.col_entries.iter().enumerate() {
            for &(r, s) in entries {
                dense[r][c] = s as i64;
            }
        }
        dense
    }
}

/// Boundary operators `d_0 .. d_dim` of the reduced chain complex. The k-th
/// vertex (ascending) of a face is removed with sign `(-1)^k`; `d_0` sends
/// every vertex to the empty face with sign +1.
pub fn boundary_matrices(delta: &SimplicialComplex) -> Vec<BoundaryMatrix> {
    let Some(dim) = delta.dim() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    for i in 0..=dim {
        let lower = delta.faces_of_dim(i - 1);
        let upper = delta.faces_of_dim(i);
        let mut col_entries = Vec::with_capacity(upper.len());
        for &face in upper {
            let mut entries = Vec::with_capacity(face.count_ones() as usize);
            let mut rest = face;
            let mut k = 0u32;
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let sub = face & !(1u64 << v);
                let row = lower.binary_search(&sub).expect("facet of a face is a face");
                let sign: i8 = if k.is_multiple_of(2) { 1 } else { -1 };
                entries.push((row, sign));
                k += 1;
            }
            entries.sort_unstable_by_key(|&(r, _)| r);
            col_entries.push(entries);
        }
        out.push(BoundaryMatrix {
            rows: lower.len(),
            cols: upper.len(),
            col_entries,
        });
    }
    out
}

/// Rank of an integer matrix over Q: checked `i128` Bareiss first, exact
/// big-integer Bareiss if any intermediate minor overflows.
pub fn rank_rationals(dense: &[Vec<i64>]) -> usize {
    let rows = dense.len();
    if rows == 0 || dense[0].is_empty() {
        return 0;
    }
    let mut m: Vec<Vec<i128>> = dense
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    match bareiss_i128(&mut m) {
        Some(rank) => rank,
        None => {
            let mut m: Vec<Vec<BigInt>> = dense
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect();
            bareiss_bigint(&mut m)
        }
    }
}

fn bareiss_i128(m: &mut [Vec<i128>]) -> Option<usize> {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0usize;
    let mut prev: i128 = 1;
    for c in 0..cols {
        if r == rows {
            break;
        }
        // smallest nonzero pivot keeps intermediate minors small
        let Some(piv) = (r..rows)
            .filter(|&i| m[i][c] != 0)
            .min_by_key(|&i| m[i][c].unsigned_abs())
        else {
            continue;
        };
        m.swap(r, piv);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let a = m[r][c].checked_mul(m[i][j])?;
                let b = m[i][c].checked_mul(m[r][j])?;
                m[i][j] = a.checked_sub(b)? / prev; // exact by Sylvester's identity
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        r += 1;
    }
    Some(r)
}

fn bareiss_bigint(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    let cols = m[0].len();
    let mut r = 0usize;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows)
            .filter(|&i| !m[i][c].is_zero())
            .min_by_key(|&i| m[i][c].abs())
        else {
            continue;
        };
        m.swap(r, piv);
        for i in (r + 1)..rows {
            for j in (c + 1)..cols {
                let num = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
    }
    r
}

/// Rank of an integer matrix over `F_p` by modular Gaussian elimination.
// Index loops: elimination reads row `r` while mutating row `i` of the same
// matrix, which iterators cannot express without split borrows.
#[allow(clippy::needless_range_loop)]
pub fn rank_mod_p(dense: &[Vec<i64>], p: u64) -> usize {
    let rows = dense.len();
    if rows == 0 || dense[0].is_empty() {
        return 0;
    }
    let cols = dense[0].len();
    let mut m: Vec<Vec<u64>> = dense
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let mut r = 0usize;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = mod_inverse(m[r][c], p);
        for i in (r + 1)..rows {
            if m[i][c] == 0 {
                continue;
            }
            let factor = mul_mod(m[i][c], inv, p);
            for j in c..cols {
                let sub = mul_mod(factor, m[r][j], p);
                m[i][j] = (m[i][j] + p - sub) % p;
            }
        }
        r += 1;
    }
    r
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Fermat: a^(p-2) mod p
    let mut base = a % p;
    let mut exp = p - 2;
    let mut acc: u64 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Rank of a boundary matrix over the given field.
pub fn boundary_rank(mat: &BoundaryMatrix, field: &FieldSpec) -> usize {
    if mat.rows == 0 || mat.cols == 0 {
        return 0;
    }
    let dense = mat.to_dense();
    match field {
        FieldSpec::Rationals => rank_rationals(&dense),
        FieldSpec::Prime(p) => rank_mod_p(&dense, *p),
    }
}

/// Reduced Betti numbers `(dim H~_{-1}, dim H~_0, .., dim H~_dim)`.
/// `{empty}` has exactly `H~_{-1} = 1`; the void complex returns an empty
/// vector.
pub fn reduced_betti_numbers(delta: &SimplicialComplex, field: &FieldSpec) -> Vec<u64> {
    let Some(dim) = delta.dim() else {
        return Vec::new();
    };
    let mats = boundary_matrices(delta);
    let ranks: Vec<usize> = mats.iter().map(|m| boundary_rank(m, field)).collect();
    let mut out = Vec::with_capacity((dim + 2) as usize);
    let rank_at = |i: usize| ranks.get(i).copied().unwrap_or(0);
    // H~_{-1}: the empty face minus the image of d_0
    out.push(1 - rank_at(0) as u64);
    for i in 0..=dim {
        let chains = delta.faces_of_dim(i).len();
        let nullity = chains - rank_at(i as usize);
        out.push((nullity - rank_at(i as usize + 1)) as u64);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{build_circulant, CirculantSpec};
    use crate::complex::independence_complex;

    fn pentagon() -> SimplicialComplex {
        let spec = CirculantSpec::new(5, [1]).unwrap();
        independence_complex(&build_circulant(&spec)).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(13).is_ok());
        assert_eq!(FieldSpec::prime(1).unwrap_err(), HomologyError::NotPrime(1));
        assert_eq!(FieldSpec::prime(4).unwrap_err(), HomologyError::NotPrime(4));
        assert!(matches!(
            FieldSpec::prime(1 << 40).unwrap_err(),
            HomologyError::CharacteristicTooLarge(_)
        ));
        assert_eq!(FieldSpec::Rationals.to_string(), "Q");
        assert_eq!(FieldSpec::Prime(2).to_string(), "F_2");
    }

    #[test]
    fn edge_boundary_matrices() {
        let edge = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        let mats = boundary_matrices(&edge);
        assert_eq!(mats.len(), 2);
        // augmentation: one row, two +1 columns
        assert_eq!(mats[0].rows, 1);
        assert_eq!(mats[0].cols, 2);
        assert_eq!(mats[0].to_dense(), vec![vec![1, 1]]);
        // d_1 of {0,1} = {1} - {0}; rows sorted as [{0}, {1}] -> [-1, +1]^T
        assert_eq!(mats[1].to_dense(), vec![vec![-1], vec![1]]);
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn boundary_of_boundary_vanishes() {
        let delta = pentagon();
        let mats = boundary_matrices(&delta);
        for w in mats.windows(2) {
            let (lo, hi) = (&w[0], &w[1]);
            let a = lo.to_dense();
            let b = hi.to_dense();
            for c in 0..hi.cols {
                for r in 0..lo.rows {
                    let mut acc = 0i64;
                    for k in 0..lo.cols {
                        acc += a[r][k] * b[k][c];
                    }
                    assert_eq!(acc, 0);
                }
            }
        }
    }

    #[test]
    fn rank_basics() {
        assert_eq!(rank_rationals(&[vec![1, 0], vec![0, 1]]), 2);
        assert_eq!(rank_rationals(&[vec![0, 0], vec![0, 0]]), 0);
        assert_eq!(rank_rationals(&[vec![1, 2], vec![2, 4]]), 1);
        assert_eq!(rank_rationals(&[vec![1, 2, 3], vec![4, 5, 6]]), 2);
        assert_eq!(rank_rationals(&[]), 0);
        // 2 is invertible over Q but zero over F_2
        assert_eq!(rank_rationals(&[vec![2]]), 1);
        assert_eq!(rank_mod_p(&[vec![2]], 2), 0);
        assert_eq!(rank_mod_p(&[vec![2]], 3), 1);
        assert_eq!(rank_mod_p(&[vec![-1, 1], vec![1, 1]], 2), 1);
        assert_eq!(rank_mod_p(&[vec![-1, 1], vec![1, 1]], 3), 2);
    }

    #[test]
    fn betti_of_small_spaces() {
        // contractible edge
        let edge = SimplicialComplex::from_facets(2, &[vec![0, 1]]).unwrap();
        assert_eq!(reduced_betti_numbers(&edge, &FieldSpec::Rationals), vec![0, 0, 0]);

        // filled triangle: contractible
        let tri = SimplicialComplex::from_facets(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(
            reduced_betti_numbers(&tri, &FieldSpec::Rationals),
            vec![0, 0, 0, 0]
        );

        // hollow triangle: a circle
        let circle =
            SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(
            reduced_betti_numbers(&circle, &FieldSpec::Rationals),
            vec![0, 0, 1]
        );

        // two disjoint triangles: one extra component
        let two = SimplicialComplex::from_facets(6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(
            reduced_betti_numbers(&two, &FieldSpec::Rationals),
            vec![0, 1, 0, 0]
        );

        // just the empty face
        let point = SimplicialComplex::from_facets(1, &[vec![0]]).unwrap();
        let empty = point.restriction(&[]).unwrap();
        assert_eq!(reduced_betti_numbers(&empty, &FieldSpec::Rationals), vec![1]);
    }

    #[test]
    fn pentagon_is_a_circle() {
        let delta = pentagon();
        assert_eq!(
            reduced_betti_numbers(&delta, &FieldSpec::Rationals),
            vec![0, 0, 1]
        );
        assert_eq!(
            reduced_betti_numbers(&delta, &FieldSpec::Prime(2)),
            vec![0, 0, 1]
        );
    }

    #[test]
    fn projective_plane_detects_characteristic() {
        // minimal 6-vertex triangulation of RP^2
        let facets: Vec<Vec<usize>> = vec![
            vec![0, 1, 2],
            vec![0, 1, 3],
            vec![0, 2, 4],
            vec![0, 3, 5],
            vec![0, 4, 5],
            vec![1, 2, 5],
            vec![1, 3, 4],
            vec![1, 4, 5],
            vec![2, 3, 4],
            vec![2, 3, 5],
        ];
        let rp2 = SimplicialComplex::from_facets(6, &facets).unwrap();
        let f = rp2.f_vector();
        assert_eq!(f.entries(), &[1, 6, 15, 10]);
        assert_eq!(
            reduced_betti_numbers(&rp2, &FieldSpec::Rationals),
            vec![0, 0, 0, 0]
        );
        assert_eq!(
            reduced_betti_numbers(&rp2, &FieldSpec::Prime(2)),
            vec![0, 0, 1, 1]
        );
        assert_eq!(
            reduced_betti_numbers(&rp2, &FieldSpec::Prime(3)),
            vec![0, 0, 0, 0]
        );
    }

    #[test]
    fn euler_poincare_for_circulants() {
        for n in 2..=9usize {
            for spec in crate::circulant::enumerate_specs(n) {
                let delta = independence_complex(&build_circulant(&spec)).unwrap();
                let betti = reduced_betti_numbers(&delta, &FieldSpec::Rationals);
                let alt: i64 = betti
                    .iter()
                    .enumerate()
                    .map(|(k, &b)| {
                        let sign = if k % 2 == 0 { -1 } else { 1 }; // k = i+1
                        sign * b as i64
                    })
                    .sum();
                assert_eq!(alt, delta.f_vector().reduced_euler(), "{spec}");
            }
        }
    }
}
