//! Simplicial complexes as bitmask faces, specialized to independence
//! complexes of graphs.
//!
//! A face is a `u64` whose set bits are the vertices; faces are stored per
//! cardinality in sorted order, with the empty face (mask 0) at level 0. The
//! complex `{empty}` (one face, dimension -1) and the void complex (no faces
//! at all, only ever produced by skeletons above the dimension) are distinct.

use crate::arith::binomial;
use crate::circulant::Graph;
use thiserror::Error;

/// Default cap on the number of faces enumerated for one complex.
pub const DEFAULT_MAX_FACES: usize = 1 << 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("face enumeration exceeded the cap of {cap} faces")]
    FaceCapExceeded { cap: usize },
    #[error("vertex {0} outside the ground set of size {1}")]
    UnknownVertex(usize, usize),
    #[error("vertex {0} is not a face of the complex")]
    VertexNotInComplex(usize),
}

/// Connectivity verdict for a pure skeleton.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkeletonConnectivity {
    Connected,
    Disconnected,
    /// The skeleton has no faces (requested degree exceeds the dimension).
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    ground: usize,
    /// `faces[k]`: all faces of cardinality `k` (dimension `k-1`), each a
    /// sorted list of bitmasks. Empty vector = void complex.
    faces: Vec<Vec<u64>>,
    dihedral: bool,
}

/// Independence complex of `g` with the default face cap.
pub fn independence_complex(g: &Graph) -> Result<SimplicialComplex, ComplexError> {
    independence_complex_capped(g, DEFAULT_MAX_FACES)
}

/// Independence complex of `g`: faces are the independent vertex sets.
/// Enumeration extends each face only by vertices above its maximum, so
/// every face is produced exactly once; levels are sorted afterwards.
pub fn independence_complex_capped(
    g: &Graph,
    max_faces: usize,
) -> Result<SimplicialComplex, ComplexError> {
    let n = g.vertex_count();
    let mut faces: Vec<Vec<u64>> = vec![vec![0u64]];
    let mut total = 1usize;
    let mut level: Vec<u64> = (0..n).map(|v| 1u64 << v).collect();
    while !level.is_empty() {
        total += level.len();
        if total > max_faces {
            return Err(ComplexError::FaceCapExceeded { cap: max_faces });
        }
        let mut next = Vec::new();
        for &face in &level {
            let top = 63 - face.leading_zeros() as usize;
            for v in (top + 1)..n {
                if g.adjacency_mask(v) & face == 0 {
                    next.push(face | 1 << v);
                }
            }
        }
        let mut sorted = level;
        sorted.sort_unstable();
        faces.push(sorted);
        level = next;
    }
    Ok(SimplicialComplex {
        ground: n,
        faces,
        dihedral: g.is_circulant(),
    })
}

impl SimplicialComplex {
    /// Downward closure of an explicit facet list (testing and small
    /// constructions). Always contains the empty face.
    pub fn from_facets(ground: usize, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        use std::collections::BTreeSet;
        let mut levels: Vec<BTreeSet<u64>> = vec![BTreeSet::from([0u64])];
        for facet in facets {
            let mut mask = 0u64;
            for &v in facet {
                if v >= ground {
                    return Err(ComplexError::UnknownVertex(v, ground));
                }
                mask |= 1 << v;
            }
            // every submask of the facet is a face
            let mut sub = mask;
            loop {
                let k = sub.count_ones() as usize;
                while levels.len() <= k {
                    levels.push(BTreeSet::new());
                }
                levels[k].insert(sub);
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
        }
        Ok(Self {
            ground,
            faces: levels.into_iter().map(|s| s.into_iter().collect()).collect(),
            dihedral: false,
        })
    }

    pub fn ground_set_size(&self) -> usize {
        self.ground
    }

    /// True when the complex has no faces at all (not even the empty face).
    pub fn is_void(&self) -> bool {
        self.faces.is_empty()
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for `{empty}`.
    pub fn dim(&self) -> Option<isize> {
        if self.is_void() {
            None
        } else {
            Some(self.faces.len() as isize - 2)
        }
    }

    /// Krull dimension of the Stanley-Reisner quotient: `dim + 1`.
    pub fn krull_dimension(&self) -> usize {
        let d = self.dim().expect("void complex has no Krull dimension");
        (d + 1) as usize
    }

    pub fn face_count(&self) -> usize {
        self.faces.iter().map(Vec::len).sum()
    }

    /// Faces of cardinality `k` (dimension `k-1`), sorted by mask.
    pub fn faces_of_cardinality(&self, k: usize) -> &[u64] {
        static EMPTY: [u64; 0] = [];
        self.faces.get(k).map(Vec::as_slice).unwrap_or(&EMPTY)
    }

    /// Faces of dimension `d` (`d = -1` is the empty face level).
    pub fn faces_of_dim(&self, d: isize) -> &[u64] {
        if d < -1 {
            return &[];
        }
        self.faces_of_cardinality((d + 1) as usize)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        let k = mask.count_ones() as usize;
        self.faces
            .get(k)
            .is_some_and(|lvl| lvl.binary_search(&mask).is_ok())
    }

    /// True when the complex was built from a circulant graph and therefore
    /// is invariant under the dihedral relabelings `k -> k+1`, `k -> -k`.
    pub fn has_dihedral_symmetry(&self) -> bool {
        self.dihedral
    }

    pub fn f_vector(&self) -> FVector {
        assert!(!self.is_void(), "void complex has no f-vector");
        FVector(self.faces.iter().map(|lvl| lvl.len() as u64).collect())
    }

    /// Pure k-skeleton: all faces contained in some face of dimension `k`.
    /// Void when `k` exceeds the dimension.
    pub fn pure_skeleton(&self, k: usize) -> SimplicialComplex {
        let top = self.faces_of_cardinality(k + 1);
        if top.is_empty() {
            return SimplicialComplex {
                ground: self.ground,
                faces: Vec::new(),
                dihedral: false,
            };
        }
        let mut faces: Vec<Vec<u64>> = Vec::with_capacity(k + 2);
        for card in 0..=(k + 1) {
            let kept: Vec<u64> = self.faces_of_cardinality(card)
                .iter()
                .copied()
                .filter(|&f| top.iter().any(|&t| f & !t == 0))
                .collect();
            faces.push(kept);
        }
        SimplicialComplex {
            ground: self.ground,
            faces,
            dihedral: self.dihedral,
        }
    }

    /// Connectivity of the pure k-skeleton, walking its vertices along its
    /// edges. A single-vertex skeleton is connected; a skeleton with no
    /// faces is `Empty`.
    pub fn skeleton_connectivity(&self, k: usize) -> SkeletonConnectivity {
        let skel = self.pure_skeleton(k);
        if skel.is_void() {
            return SkeletonConnectivity::Empty;
        }
        let verts = skel.faces_of_cardinality(1);
        if verts.is_empty() {
            // {empty} skeleton: no vertices to connect
            return SkeletonConnectivity::Empty;
        }
        let vertex_mask: u64 = verts.iter().copied().fold(0, |a, b| a | b);
        let mut adj = vec![0u64; self.ground];
        for &e in skel.faces_of_cardinality(2) {
            let a = e.trailing_zeros() as usize;
            let b = 63 - e.leading_zeros() as usize;
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let start = vertex_mask.trailing_zeros() as usize;
        let mut seen: u64 = 1 << start;
        let mut frontier: u64 = seen;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        if seen == vertex_mask {
            SkeletonConnectivity::Connected
        } else {
            SkeletonConnectivity::Disconnected
        }
    }

    /// Restriction to a vertex subset: all faces contained in `sigma`.
    pub fn restriction(&self, sigma: &[usize]) -> Result<SimplicialComplex, ComplexError> {
        let mut mask = 0u64;
        for &v in sigma {
            if v >= self.ground {
                return Err(ComplexError::UnknownVertex(v, self.ground));
            }
            mask |= 1 << v;
        }
        Ok(self.restriction_mask(mask))
    }

    /// Restriction with the subset given as a bitmask (hot path for the
    /// Hochster sum).
    pub fn restriction_mask(&self, sigma: u64) -> SimplicialComplex {
        let mut faces: Vec<Vec<u64>> = Vec::new();
        for lvl in &self.faces {
            let kept: Vec<u64> = lvl.iter().copied().filter(|&f| f & !sigma == 0).collect();
            if kept.is_empty() {
                break; // no faces of this size inside sigma, none larger either
            }
            faces.push(kept);
        }
        SimplicialComplex {
            ground: self.ground,
            faces,
            dihedral: false,
        }
    }

    /// Link of a vertex: `{F : v not in F, F + v in complex}`.
    pub fn link(&self, v: usize) -> Result<SimplicialComplex, ComplexError> {
        if v >= self.ground {
            return Err(ComplexError::UnknownVertex(v, self.ground));
        }
        let bit = 1u64 << v;
        if !self.contains_mask(bit) {
            return Err(ComplexError::VertexNotInComplex(v));
        }
        let mut faces: Vec<Vec<u64>> = Vec::new();
        for lvl in self.faces.iter().skip(1) {
            let kept: Vec<u64> = lvl
                .iter()
                .copied()
                .filter(|&f| f & bit != 0)
                .map(|f| f & !bit)
                .collect();
            if kept.is_empty() {
                break;
            }
            faces.push(kept);
        }
        Ok(SimplicialComplex {
            ground: self.ground,
            faces,
            dihedral: false,
        })
    }
}

/// Vertices of a face mask, ascending.
pub fn mask_vertices(mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

/// Face counts `(f_{-1}, f_0, .., f_{d-1})` with `f_{-1} = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector(Vec<u64>);

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        assert!(!entries.is_empty() && entries[0] == 1, "f_{{-1}} must be 1");
        FVector(entries)
    }

    /// Entries indexed by cardinality: `entries()[k] = f_{k-1}`.
    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    /// Krull dimension `d` of the quotient (length of the vector minus one).
    pub fn krull_dim(&self) -> usize {
        self.0.len() - 1
    }

    /// `h_k = sum_{i=0..k} (-1)^{k-i} C(d-i, k-i) f_{i-1}` for `k = 0..=d`.
    pub fn h_vector(&self) -> HVector {
        let d = self.krull_dim();
        let mut h = Vec::with_capacity(d + 1);
        for k in 0..=d {
            let mut acc: i128 = 0;
            for i in 0..=k {
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                acc += sign * binomial(d - i, k - i) * self.0[i] as i128;
            }
            h.push(i64::try_from(acc).expect("h-vector entry fits i64"));
        }
        HVector(h)
    }

    /// Reduced Euler characteristic `sum_{i=-1}^{d-1} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> i64 {
        let mut acc: i64 = 0;
        for (k, &f) in self.0.iter().enumerate() {
            let sign = if k % 2 == 0 { -1 } else { 1 }; // k = i+1, sign = (-1)^i
            acc += sign * f as i64;
        }
        acc
    }
}

/// The h-vector `(h_0, .., h_d)`; entries may be negative for non-CM
/// complexes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector(Vec<i64>);

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }
}
