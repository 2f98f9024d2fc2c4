//! Algebraic invariants of the Stanley-Reisner quotient `R/I`.
//!
//! Hilbert series data comes straight from the f-vector. Graded Betti
//! numbers come from Hochster's formula
//! `beta_{i,j} = sum over |sigma| = j of dim H~_{j-i-1}(restriction; K)`,
//! summed over all `2^n` vertex subsets, optionally folded along the
//! dihedral symmetry of circulant complexes (one homology computation per
//! orbit, weighted by orbit size). Restrictions that are cones are skipped:
//! cones are contractible, so they contribute nothing over any field.

use crate::arith::{binomial, binomial_at};
use crate::complex::{FVector, SimplicialComplex};
use crate::homology::{reduced_betti_numbers, FieldSpec};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Default cap on the ground-set size for Betti tables (the Hochster sum
/// walks all `2^n` subsets).
pub const DEFAULT_MAX_BETTI_GROUND: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum InvariantsError {
    #[error("Betti table on {n} vertices exceeds the configured cap {cap}")]
    GroundTooLarge { n: usize, cap: usize },
    #[error("symmetry folding requested for a complex without circulant labels")]
    SymmetryUnavailable,
}

/// Hilbert series bookkeeping for `R/I` with `n` ambient variables.
///
/// The series is `h_poly(t) / (1-t)^krull_dim` in reduced form and
/// `k_poly(t) / (1-t)^n` over all variables. The regularity index is the
/// first degree from which the Hilbert function agrees with the Hilbert
/// polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertData {
    ambient: usize,
    krull_dim: usize,
    h_poly: Vec<i64>,
    k_poly: Vec<i64>,
    regularity_index: usize,
}

impl HilbertData {
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn krull_dim(&self) -> usize {
        self.krull_dim
    }

    /// Numerator of the reduced Hilbert series (trailing zeros trimmed).
    pub fn h_poly(&self) -> &[i64] {
        &self.h_poly
    }

    /// Numerator over the full `(1-t)^n`: `h_poly * (1-t)^(n-d)`.
    pub fn k_poly(&self) -> &[i64] {
        &self.k_poly
    }

    pub fn regularity_index(&self) -> usize {
        self.regularity_index
    }
}

/// Multiply an integer polynomial by `(1-t)^e`.
fn mul_one_minus_t_pow(poly: &[i64], e: usize) -> Vec<i64> {
    let mut acc: Vec<i128> = poly.iter().map(|&c| c as i128).collect();
    for _ in 0..e {
        let mut next = vec![0i128; acc.len() + 1];
        for (k, &c) in acc.iter().enumerate() {
            next[k] += c;
            next[k + 1] -= c;
        }
        acc = next;
    }
    acc.into_iter()
        .map(|c| i64::try_from(c).expect("k-polynomial coefficient fits i64"))
        .collect()
}

/// Hilbert data from an f-vector in an `n`-variable polynomial ring.
///
/// The regularity index is computed twice, from the closed form
/// `max(0, deg h - d + 1)` and from direct comparison of Hilbert function
/// values against the Hilbert polynomial; the two must agree.
pub fn hilbert_data(f: &FVector, n: usize) -> HilbertData {
    let d = f.krull_dim();
    assert!(d <= n, "complex has more vertices than ambient variables");
    let h = f.h_vector();
    let mut h_poly: Vec<i64> = h.entries().to_vec();
    while h_poly.len() > 1 && *h_poly.last().unwrap() == 0 {
        h_poly.pop();
    }
    let deg = h_poly.len() - 1;
    let ri = (deg as i64 - d as i64 + 1).max(0) as usize;

    // Independent route: the Hilbert function H(k) (combinatorial) against
    // the Hilbert polynomial P(k) (same binomials read as polynomials).
    let fv = f.entries();
    let hilbert_fn = |k: usize| -> i128 {
        if k == 0 {
            return 1;
        }
        (1..=d)
            .map(|i| fv[i] as i128 * binomial(k - 1, i - 1))
            .sum()
    };
    let hilbert_poly = |k: i128| -> i128 {
        (1..=d)
            .map(|i| fv[i] as i128 * binomial_at(k - 1, i - 1))
            .sum()
    };
    let horizon = d + deg + 2;
    let ri_direct = (0..=horizon)
        .rev()
        .find(|&k| hilbert_fn(k) != hilbert_poly(k as i128))
        .map_or(0, |k| k + 1);
    assert_eq!(
        ri, ri_direct,
        "regularity index: closed form and direct comparison disagree"
    );

    let k_poly = mul_one_minus_t_pow(&h_poly, n - d);
    HilbertData {
        ambient: n,
        krull_dim: d,
        h_poly,
        k_poly,
        regularity_index: ri,
    }
}

/// Graded Betti numbers `beta_{i,j}` of `R/I`, sparse; only nonzero entries
/// are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    ground: usize,
    field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries in (i, j) order.
    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// Total Betti number `b_i = sum_j beta_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|((bi, _), _)| *bi == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Largest homological degree with a nonzero entry. `beta_{0,0} = 1`
    /// always exists, so this is well defined.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().expect("table has beta_{0,0}")
    }

    /// Castelnuovo-Mumford regularity: `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .expect("table has beta_{0,0}")
    }

    /// Degrees `(j, beta_{pd, j})` appearing in the last column.
    pub fn last_column(&self) -> Vec<(usize, u64)> {
        let pd = self.projective_dimension();
        self.entries
            .iter()
            .filter(|((i, _), _)| *i == pd)
            .map(|(&(_, j), &v)| (j, v))
            .collect()
    }

    /// `sum_i (-1)^i beta_{i,j}` collected as a polynomial in `t^j`,
    /// trailing zeros trimmed. Equals the Hilbert `k_poly` over any field.
    pub fn k_polynomial(&self) -> Vec<i64> {
        let max_j = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut out = vec![0i64; max_j + 1];
        for (&(i, j), &v) in &self.entries {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            out[j] += sign * v as i64;
        }
        while out.len() > 1 && *out.last().unwrap() == 0 {
            out.pop();
        }
        out
    }
}

fn rotate_mask(sigma: u64, r: usize, n: usize) -> u64 {
    if r == 0 {
        return sigma;
    }
    let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    ((sigma << r) | (sigma >> (n - r))) & mask
}

fn reflect_mask(sigma: u64, n: usize) -> u64 {
    let mut out = 0u64;
    let mut rest = sigma;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        out |= 1 << ((n - v) % n);
    }
    out
}

/// Smallest mask in the dihedral orbit of `sigma`, plus the orbit size.
fn dihedral_orbit(sigma: u64, n: usize) -> (u64, usize) {
    let reflected = reflect_mask(sigma, n);
    let mut images: Vec<u64> = Vec::with_capacity(2 * n);
    for r in 0..n {
        images.push(rotate_mask(sigma, r, n));
        images.push(rotate_mask(reflected, r, n));
    }
    images.sort_unstable();
    images.dedup();
    (images[0], images.len())
}

/// Is the complex a cone, i.e. is there a vertex contained in every facet?
/// Cones are contractible, so their reduced homology vanishes.
fn is_cone(delta: &SimplicialComplex) -> bool {
    'apex: for &vmask in delta.faces_of_dim(0) {
        let Some(dim) = delta.dim() else {
            return false;
        };
        for d in -1..=dim {
            for &face in delta.faces_of_dim(d) {
                if face & vmask == 0 && !delta.contains_mask(face | vmask) {
                    continue 'apex;
                }
            }
        }
        return true;
    }
    false
}

/// Hochster Betti table with the default ground cap.
pub fn betti_table_hochster(
    delta: &SimplicialComplex,
    field: FieldSpec,
    use_symmetry: bool,
) -> Result<BettiTable, InvariantsError> {
    betti_table_hochster_capped(delta, field, use_symmetry, DEFAULT_MAX_BETTI_GROUND)
}

/// Hochster Betti table.
///
/// With `use_symmetry` the subset sum is folded along the dihedral group of
/// the circulant labeling: only the lexicographically smallest subset of
/// each orbit is computed and its contribution is weighted by orbit size.
/// Requesting symmetry for a complex not built from a circulant graph is an
/// error.
pub fn betti_table_hochster_capped(
    delta: &SimplicialComplex,
    field: FieldSpec,
    use_symmetry: bool,
    max_ground: usize,
) -> Result<BettiTable, InvariantsError> {
    let n = delta.ground_set_size();
    if n > max_ground {
        return Err(InvariantsError::GroundTooLarge { n, cap: max_ground });
    }
    if use_symmetry && !delta.has_dihedral_symmetry() {
        return Err(InvariantsError::SymmetryUnavailable);
    }
    let total: u64 = 1u64 << n;
    let entries = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<(usize, usize), u64>, sigma| {
            let weight = if use_symmetry {
                let (min, size) = dihedral_orbit(sigma, n);
                if min != sigma {
                    return acc;
                }
                size as u64
            } else {
                1
            };
            // restrictions that are full simplices or cones are contractible
            if sigma != 0 && delta.contains_mask(sigma) {
                return acc;
            }
            let restr = delta.restriction_mask(sigma);
            if is_cone(&restr) {
                return acc;
            }
            let j = sigma.count_ones() as usize;
            for (k, &b) in reduced_betti_numbers(&restr, &field).iter().enumerate() {
                if b != 0 {
                    let q = k as isize - 1; // homology degree
                    let i = (j as isize - q - 1) as usize;
                    *acc.entry((i, j)).or_insert(0) += weight * b;
                }
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });
    Ok(BettiTable {
        ground: n,
        field,
        entries,
    })
}

/// Homological profile of `R/I` derived from a Betti table and the Hilbert
/// data of the same complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraicReport {
    pub krull_dim: usize,
    pub projective_dimension: usize,
    pub depth: usize,
    pub regularity: usize,
    pub regularity_index: usize,
    pub is_cohen_macaulay: bool,
    /// `b_pd` when Cohen-Macaulay, absent otherwise.
    pub cm_type: Option<u64>,
    pub is_gorenstein: bool,
    /// Last Betti column concentrated in a single degree.
    pub is_level: bool,
}

impl AlgebraicReport {
    pub fn from_table(delta: &SimplicialComplex, table: &BettiTable) -> AlgebraicReport {
        let n = delta.ground_set_size();
        assert_eq!(n, table.ground(), "table belongs to a different complex");
        let krull_dim = delta.krull_dimension();
        let hilbert = hilbert_data(&delta.f_vector(), n);
        let pd = table.projective_dimension();
        let depth = n - pd; // Auslander-Buchsbaum
        let is_cm = depth == krull_dim;
        let cm_type = is_cm.then(|| table.total(pd));
        AlgebraicReport {
            krull_dim,
            projective_dimension: pd,
            depth,
            regularity: table.regularity(),
            regularity_index: hilbert.regularity_index(),
            is_cohen_macaulay: is_cm,
            cm_type,
            is_gorenstein: is_cm && cm_type == Some(1),
            is_level: table.last_column().len() == 1,
        }
    }
}

/// Betti table plus derived report in one call (symmetry folding is applied
/// when the complex carries circulant labels).
pub fn algebraic_report(
    delta: &SimplicialComplex,
    field: FieldSpec,
) -> Result<(BettiTable, AlgebraicReport), InvariantsError> {
    let table = betti_table_hochster(delta, field, delta.has_dihedral_symmetry())?;
    let report = AlgebraicReport::from_table(delta, &table);
    Ok((table, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circulant::{build_circulant, CirculantSpec};
    use crate::complex::independence_complex;

    fn complex_for(n: usize, s: &[usize]) -> SimplicialComplex {
        let spec = CirculantSpec::new(n, s.iter().copied()).unwrap();
        independence_complex(&build_circulant(&spec)).unwrap()
    }

    #[test]
    fn hilbert_pentagon() {
        let delta = complex_for(5, &[1]);
        let hd = hilbert_data(&delta.f_vector(), 5);
        assert_eq!(hd.krull_dim(), 2);
        assert_eq!(hd.h_poly(), &[1, 3, 1]);
        assert_eq!(hd.regularity_index(), 1);
        assert_eq!(hd.k_poly(), &[1, 0, -5, 5, 0, -1]);
    }

    #[test]
    fn hilbert_full_simplex() {
        let delta = complex_for(4, &[]);
        let hd = hilbert_data(&delta.f_vector(), 4);
        assert_eq!(hd.krull_dim(), 4);
        assert_eq!(hd.h_poly(), &[1]);
        assert_eq!(hd.k_poly(), &[1]);
        assert_eq!(hd.regularity_index(), 0);
    }

    #[test]
    fn hilbert_hexagon_and_c8() {
        let hd = hilbert_data(&complex_for(6, &[1]).f_vector(), 6);
        assert_eq!(hd.h_poly(), &[1, 3, 0, -2]);
        assert_eq!(hd.regularity_index(), 1);

        let hd = hilbert_data(&complex_for(8, &[2, 3]).f_vector(), 8);
        assert_eq!(hd.h_poly(), &[1, 6, 5]);
        assert_eq!(hd.regularity_index(), 1);
        // k_poly = (1 + 6t + 5t^2)(1-t)^6
        assert_eq!(
            hd.k_poly(),
            &mul_one_minus_t_pow(&[1, 6, 5], 6)[..]
        );
    }

    #[test]
    fn hochster_pentagon_table() {
        let delta = complex_for(5, &[1]);
        for sym in [false, true] {
            let t = betti_table_hochster(&delta, FieldSpec::Rationals, sym).unwrap();
            let entries: Vec<_> = t.iter().collect();
            assert_eq!(
                entries,
                vec![((0, 0), 1), ((1, 2), 5), ((2, 3), 5), ((3, 5), 1)]
            );
            assert_eq!(t.projective_dimension(), 3);
            assert_eq!(t.regularity(), 2);
            assert_eq!(t.k_polynomial(), vec![1, 0, -5, 5, 0, -1]);
        }
    }

    #[test]
    fn hochster_full_simplex() {
        let delta = complex_for(4, &[]);
        let t = betti_table_hochster(&delta, FieldSpec::Rationals, true).unwrap();
        assert_eq!(t.iter().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(t.projective_dimension(), 0);
        assert_eq!(t.regularity(), 0);
    }

    #[test]
    fn hochster_c8_table() {
        let delta = complex_for(8, &[2, 3]);
        let t = betti_table_hochster(&delta, FieldSpec::Rationals, true).unwrap();
        let totals: Vec<u64> = (0..=t.projective_dimension()).map(|i| t.total(i)).collect();
        assert_eq!(totals, vec![1, 16, 44, 58, 48, 24, 5]);
        assert_eq!(t.get(1, 2), 16); // one generator per edge
        assert_eq!(t.get(6, 8), 5);
        assert_eq!(t.last_column(), vec![(8, 5)]);
        assert_eq!(t.regularity(), 2);
    }

    #[test]
    fn hochster_hexagon_table() {
        let delta = complex_for(6, &[1]);
        let t = betti_table_hochster(&delta, FieldSpec::Rationals, true).unwrap();
        let entries: Vec<_> = t.iter().collect();
        assert_eq!(
            entries,
            vec![
                ((0, 0), 1),
                ((1, 2), 6),
                ((2, 3), 6),
                ((2, 4), 3),
                ((3, 5), 6),
                ((4, 6), 2)
            ]
        );
    }

    #[test]
    fn symmetry_requires_circulant_labels() {
        let c = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert_eq!(
            betti_table_hochster(&c, FieldSpec::Rationals, true).unwrap_err(),
            InvariantsError::SymmetryUnavailable
        );
        assert!(betti_table_hochster(&c, FieldSpec::Rationals, false).is_ok());
    }

    #[test]
    fn ground_cap() {
        let delta = complex_for(22, &(1..=11).collect::<Vec<_>>());
        assert_eq!(
            betti_table_hochster(&delta, FieldSpec::Rationals, true).unwrap_err(),
            InvariantsError::GroundTooLarge { n: 22, cap: 20 }
        );
        assert!(betti_table_hochster_capped(&delta, FieldSpec::Rationals, true, 22).is_ok());
    }

    #[test]
    fn report_pentagon_gorenstein() {
        let delta = complex_for(5, &[1]);
        let (table, r) = algebraic_report(&delta, FieldSpec::Rationals).unwrap();
        assert_eq!(r.krull_dim, 2);
        assert_eq!(r.projective_dimension, 3);
        assert_eq!(r.depth, 2);
        assert!(r.is_cohen_macaulay);
        assert_eq!(r.cm_type, Some(1));
        assert!(r.is_gorenstein);
        assert!(r.is_level);
        assert_eq!(r.regularity, 2);
        assert_eq!(r.regularity_index, 1);
        assert_eq!(table.total(3), 1);
    }

    #[test]
    fn report_c8_level_not_gorenstein() {
        let delta = complex_for(8, &[2, 3]);
        let (_, r) = algebraic_report(&delta, FieldSpec::Rationals).unwrap();
        assert!(r.is_cohen_macaulay);
        assert_eq!(r.krull_dim, 2);
        assert_eq!(r.cm_type, Some(5));
        assert_eq!(r.regularity, 2);
        assert!(r.is_level);
        assert!(!r.is_gorenstein);
    }

    #[test]
    fn report_hexagon_not_cm() {
        let delta = complex_for(6, &[1]);
        let (_, r) = algebraic_report(&delta, FieldSpec::Rationals).unwrap();
        assert_eq!(r.krull_dim, 3);
        assert_eq!(r.depth, 2);
        assert!(!r.is_cohen_macaulay);
        assert_eq!(r.cm_type, None);
        assert!(!r.is_gorenstein);
        assert_eq!(r.regularity, 2);
    }

    #[test]
    fn report_polynomial_ring() {
        // edgeless graph: I = 0, the quotient is the polynomial ring itself
        let delta = complex_for(2, &[]);
        let (table, r) = algebraic_report(&delta, FieldSpec::Rationals).unwrap();
        assert_eq!(table.iter().collect::<Vec<_>>(), vec![((0, 0), 1)]);
        assert_eq!(r.krull_dim, 2);
        assert_eq!(r.depth, 2);
        assert!(r.is_cohen_macaulay);
        assert_eq!(r.cm_type, Some(1));
        assert!(r.is_gorenstein);
        assert_eq!(r.regularity, 0);
        assert_eq!(r.regularity_index, 0);
    }

    #[test]
    fn cone_detection() {
        let cone = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![0, 2]]).unwrap();
        assert!(is_cone(&cone));
        let path = SimplicialComplex::from_facets(3, &[vec![0, 1], vec![1, 2]]).unwrap();
        assert!(is_cone(&path)); // vertex 1 is an apex
        let gap = SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).unwrap();
        assert!(!is_cone(&gap));
        let empty = gap.restriction(&[]).unwrap();
        assert!(!is_cone(&empty));
    }

    #[test]
    fn orbit_folding_matches_plain_enumeration() {
        for n in 2..=8usize {
            for spec in crate::circulant::enumerate_specs(n) {
                let delta = independence_complex(&build_circulant(&spec)).unwrap();
                let plain = betti_table_hochster(&delta, FieldSpec::Rationals, false).unwrap();
                let folded = betti_table_hochster(&delta, FieldSpec::Rationals, true).unwrap();
                assert_eq!(plain, folded, "{spec}");
            }
        }
    }
}
