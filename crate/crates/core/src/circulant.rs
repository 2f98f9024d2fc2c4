//! Circulant graphs `C_n(S)` and the graph predicates the verification layer
//! leans on.
//!
//! Vertices are the residues `0..n` and `{i, j}` is an edge exactly when the
//! circular distance `|i - j|_n = min(|i - j|, n - |i - j|)` lies in `S`,
//! with `S` a subset of `{1, .., floor(n/2)}`. Complementation happens on
//! connection sets: the complement of `C_n(S)` is `C_n(T \ S)` for
//! `T = {1, .., floor(n/2)}`.
//!
//! Graphs are adjacency bitmasks (`u64` per vertex), which caps the order at
//! 64; every computation in this crate lives far below that.

use std::fmt;
use thiserror::Error;

/// Hard representation limit: adjacency rows are single `u64` masks.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SpecError {
    #[error("circulant order must be at least 2, got {0}")]
    OrderTooSmall(usize),
    #[error("circulant order {0} exceeds the representation limit {MAX_VERTICES}")]
    OrderTooLarge(usize),
    #[error("connection {connection} outside 1..={half} for n = {n}")]
    ConnectionOutOfRange {
        n: usize,
        half: usize,
        connection: usize,
    },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} does not exist in a graph on {1} vertices")]
    UnknownVertex(usize, usize),
    #[error("duplicate vertex {0} in vertex list")]
    DuplicateVertex(usize),
    #[error("order is not a permutation of the vertex set")]
    NotAPermutation,
}

/// A circulant graph description: order `n` plus the connection set `S`.
///
/// Instances are always valid by construction; `new` rejects out-of-range
/// connections and sorts/dedups the set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CirculantSpec {
    n: usize,
    connections: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, connections: impl IntoIterator<Item = usize>) -> Result<Self, SpecError> {
        if n < 2 {
            return Err(SpecError::OrderTooSmall(n));
        }
        if n > MAX_VERTICES {
            return Err(SpecError::OrderTooLarge(n));
        }
        let half = n / 2;
        let mut connections: Vec<usize> = connections.into_iter().collect();
        connections.sort_unstable();
        connections.dedup();
        for &c in &connections {
            if c == 0 || c > half {
                return Err(SpecError::ConnectionOutOfRange {
                    n,
                    half,
                    connection: c,
                });
            }
        }
        Ok(Self { n, connections })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn connections(&self) -> &[usize] {
        &self.connections
    }

    /// Complement on connection sets: `S -> {1..floor(n/2)} \ S`.
    /// Composing twice is the identity.
    pub fn complement(&self) -> CirculantSpec {
        let half = self.n / 2;
        let connections = (1..=half).filter(|c| !self.connections.contains(c)).collect();
        CirculantSpec {
            n: self.n,
            connections,
        }
    }

    /// Closed-form edge count: `n|S|`, minus `n/2` when `n` is even and the
    /// diameter connection `n/2` is present (those edges are counted once).
    pub fn edge_count_formula(&self) -> usize {
        let s = self.connections.len();
        let mut count = self.n * s;
        if self.n.is_multiple_of(2) && self.connections.contains(&(self.n / 2)) {
            count -= self.n / 2;
        }
        count
    }

    /// Connection set as a bitmask (bit `c-1` for connection `c`); gives the
    /// canonical enumeration/sort order for sweeps.
    pub fn connection_bitmask(&self) -> u64 {
        self.connections.iter().map(|&c| 1u64 << (c - 1)).sum()
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C_{}({{", self.n)?;
        for (k, c) in self.connections.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}})")
    }
}

/// Every connection set for order `n`, in bitmask order (empty set first,
/// `2^floor(n/2)` specs total).
pub fn enumerate_specs(n: usize) -> impl Iterator<Item = CirculantSpec> {
    let half = n / 2;
    (0u64..(1u64 << half)).map(move |bits| {
        let connections = (0..half).filter(|c| bits >> c & 1 == 1).map(|c| c + 1);
        CirculantSpec::new(n, connections).expect("enumerated spec is valid")
    })
}

/// Circular distance `|i - j|_n`.
pub fn circular_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j) % n;
    d.min(n - d)
}

/// Simple undirected graph with bitmask adjacency rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    circulant: bool,
}

/// Build the circulant graph for a spec. Valid specs always build; all input
/// validation lives in [`CirculantSpec::new`].
pub fn build_circulant(spec: &CirculantSpec) -> Graph {
    let n = spec.n();
    let mut adj = vec![0u64; n];
    for i in 0..n {
        for j in (i + 1)..n {
            if spec.connections().contains(&circular_distance(i, j, n)) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph {
        n,
        adj,
        circulant: true,
    }
}

impl Graph {
    /// Graph from an explicit edge list. Rejects out-of-range endpoints;
    /// loops `(v, v)` are ignored (simple graphs only).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        assert!(n <= MAX_VERTICES, "graph order exceeds bitmask width");
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::UnknownVertex(u, n));
            }
            if v >= n {
                return Err(GraphError::UnknownVertex(v, n));
            }
            if u != v {
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
        }
        Ok(Self {
            n,
            adj,
            circulant: false,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// True when this graph was built as a circulant (and therefore carries
    /// the dihedral symmetry `k -> k+1`, `k -> -k` on its vertex labels).
    pub fn is_circulant(&self) -> bool {
        self.circulant
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbours of `v` as a bitmask.
    pub fn adjacency_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let mask = self.adj[v];
        (0..self.n).filter(move |&u| mask >> u & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Edge count by enumeration (handshake sum halved).
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// True iff the graph is nonempty and has exactly one connected
    /// component. The vertexless graph is not connected.
    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let full: u64 = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        let mut seen: u64 = 1;
        let mut frontier: u64 = 1;
        while frontier != 0 {
            let mut next: u64 = 0;
            let mut rest = frontier;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == full
    }

    /// Subgraph induced on `vertices` (any order, no duplicates). New vertex
    /// `i` corresponds to `labels[i]`, ascending.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph, GraphError> {
        let mut labels: Vec<usize> = Vec::with_capacity(vertices.len());
        for &v in vertices {
            if v >= self.n {
                return Err(GraphError::UnknownVertex(v, self.n));
            }
            labels.push(v);
        }
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            let dup = labels.windows(2).find(|w| w[0] == w[1]).unwrap()[0];
            return Err(GraphError::DuplicateVertex(dup));
        }
        let k = labels.len();
        let mut adj = vec![0u64; k];
        for a in 0..k {
            for b in (a + 1)..k {
                if self.has_edge(labels[a], labels[b]) {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
            }
        }
        Ok(InducedSubgraph {
            graph: Graph {
                n: k,
                adj,
                circulant: false,
            },
            labels,
        })
    }

    /// Does `order` (a permutation of the vertices) eliminate perfectly?
    /// `order[k]` must be simplicial in the subgraph induced on
    /// `order[k..]`: its later neighbours form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> Result<bool, GraphError> {
        if order.len() != self.n {
            return Err(GraphError::NotAPermutation);
        }
        let mut seen: u64 = 0;
        for &v in order {
            if v >= self.n {
                return Err(GraphError::UnknownVertex(v, self.n));
            }
            if seen >> v & 1 == 1 {
                return Err(GraphError::NotAPermutation);
            }
            seen |= 1 << v;
        }
        let mut remaining: u64 = seen; // all vertices
        for &v in order {
            remaining &= !(1u64 << v);
            let later = self.adj[v] & remaining;
            // later neighbourhood must be a clique
            let mut rest = later;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if later & !(1u64 << u) & !self.adj[u] != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Maximum cardinality search: repeatedly pick the vertex with the most
    /// already-visited neighbours (ties broken by smallest index). Returns
    /// the visit order; its reverse is a perfect elimination order exactly
    /// when the graph is chordal.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let mut visited: u64 = 0;
        let mut weight = vec![0usize; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| visited >> v & 1 == 0)
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unvisited vertex remains");
            visited |= 1 << v;
            order.push(v);
            let mut rest = self.adj[v] & !visited;
            while rest != 0 {
                let u = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                weight[u] += 1;
            }
        }
        order
    }

    /// Chordality via MCS: the reversed search order is a perfect
    /// elimination order iff one exists at all.
    pub fn is_chordal(&self) -> bool {
        let mut order = self.maximum_cardinality_search();
        order.reverse();
        self.is_perfect_elimination_order(&order)
            .expect("MCS order is a permutation")
    }
}

/// An induced subgraph together with the map back to original labels:
/// vertex `i` of `graph` is `labels[i]` in the parent.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl InducedSubgraph {
    /// Translate an order given in parent labels into the subgraph's own
    /// vertex numbering.
    pub fn order_from_labels(&self, order: &[usize]) -> Result<Vec<usize>, GraphError> {
        order
            .iter()
            .map(|&l| {
                self.labels
                    .binary_search(&l)
                    .map_err(|_| GraphError::UnknownVertex(l, self.graph.vertex_count()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_validation() {
        assert!(CirculantSpec::new(5, [1, 2]).is_ok());
        assert!(CirculantSpec::new(5, []).is_ok());
        assert_eq!(
            CirculantSpec::new(1, [1]).unwrap_err(),
            SpecError::OrderTooSmall(1)
        );
        assert_eq!(
            CirculantSpec::new(5, [3]).unwrap_err(),
            SpecError::ConnectionOutOfRange {
                n: 5,
                half: 2,
                connection: 3
            }
        );
        assert_eq!(
            CirculantSpec::new(5, [0]).unwrap_err(),
            SpecError::ConnectionOutOfRange {
                n: 5,
                half: 2,
                connection: 0
            }
        );
        // duplicates collapse
        let s = CirculantSpec::new(8, [3, 2, 3]).unwrap();
        assert_eq!(s.connections(), &[2, 3]);
        assert!(CirculantSpec::new(65, [1]).is_err());
    }

    #[test]
    fn complement_examples() {
        let s = CirculantSpec::new(8, [2, 3]).unwrap();
        assert_eq!(s.complement().connections(), &[1, 4]);
        let s = CirculantSpec::new(5, [1, 2]).unwrap();
        assert_eq!(s.complement().connections(), &[] as &[usize]);
        let s = CirculantSpec::new(13, [1, 5]).unwrap();
        assert_eq!(s.complement().connections(), &[2, 3, 4, 6]);
        // involution
        for n in 2..=12 {
            for spec in enumerate_specs(n) {
                assert_eq!(spec.complement().complement(), spec);
            }
        }
    }

    #[test]
    fn edge_count_formula_examples() {
        assert_eq!(
            CirculantSpec::new(8, [2, 3]).unwrap().edge_count_formula(),
            16
        );
        assert_eq!(
            CirculantSpec::new(6, [1, 3]).unwrap().edge_count_formula(),
            9
        );
        assert_eq!(CirculantSpec::new(5, []).unwrap().edge_count_formula(), 0);
        assert_eq!(
            CirculantSpec::new(6, [3]).unwrap().edge_count_formula(),
            3
        );
    }

    #[test]
    fn build_matches_distance_rule() {
        let spec = CirculantSpec::new(6, [1]).unwrap();
        let g = build_circulant(&spec);
        assert!(g.is_circulant());
        assert_eq!(g.edge_count(), 6);
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 5));
        assert!(!g.has_edge(0, 2));
        assert!(!g.has_edge(0, 3));

        // complete graph when S is everything
        let spec = CirculantSpec::new(7, [1, 2, 3]).unwrap();
        let g = build_circulant(&spec);
        assert_eq!(g.edge_count(), 21);

        // edgeless when S is empty
        let spec = CirculantSpec::new(7, []).unwrap();
        assert_eq!(build_circulant(&spec).edge_count(), 0);
    }

    #[test]
    fn vertex_transitivity_under_rotation() {
        for n in 2..=12 {
            for spec in enumerate_specs(n) {
                let g = build_circulant(&spec);
                for i in 0..n {
                    for j in 0..n {
                        assert_eq!(
                            g.has_edge(i, j),
                            g.has_edge((i + 1) % n, (j + 1) % n),
                            "rotation breaks {spec}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn connectivity() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_connected());
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        let lone = Graph::from_edges(1, &[]).unwrap();
        assert!(lone.is_connected());
        let two = Graph::from_edges(2, &[]).unwrap();
        assert!(!two.is_connected());
        let none = Graph::from_edges(0, &[]).unwrap();
        assert!(!none.is_connected());
        // C_10({2}) splits into two 5-cycles
        let g = build_circulant(&CirculantSpec::new(10, [2]).unwrap());
        assert!(!g.is_connected());
        let g = build_circulant(&CirculantSpec::new(10, [1]).unwrap());
        assert!(g.is_connected());
    }

    #[test]
    fn induced_subgraph_examples() {
        // middle band of C_7({1,2}) on {3,4}: single edge
        let g = build_circulant(&CirculantSpec::new(7, [1, 2]).unwrap());
        let sub = g.induced_subgraph(&[3, 4]).unwrap();
        assert_eq!(sub.labels, vec![3, 4]);
        assert_eq!(sub.graph.edge_count(), 1);
        assert!(!sub.graph.is_circulant());

        assert_eq!(
            g.induced_subgraph(&[3, 9]).unwrap_err(),
            GraphError::UnknownVertex(9, 7)
        );
        assert_eq!(
            g.induced_subgraph(&[3, 3]).unwrap_err(),
            GraphError::DuplicateVertex(3)
        );
    }

    #[test]
    fn peo_on_paths_and_cycles() {
        let path = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_perfect_elimination_order(&[0, 1, 2, 3]).unwrap());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // no order works on a 4-cycle
        let mut perm = vec![0, 1, 2, 3];
        let mut any = false;
        loop {
            any |= c4.is_perfect_elimination_order(&perm).unwrap();
            if !next_permutation(&mut perm) {
                break;
            }
        }
        assert!(!any);
        assert_eq!(
            path.is_perfect_elimination_order(&[0, 1, 2]).unwrap_err(),
            GraphError::NotAPermutation
        );
        assert_eq!(
            path.is_perfect_elimination_order(&[0, 1, 2, 2]).unwrap_err(),
            GraphError::NotAPermutation
        );
    }

    #[test]
    fn chordality_basics() {
        let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(triangle.is_chordal());
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(!c4.is_chordal());
        let c5 = build_circulant(&CirculantSpec::new(5, [1]).unwrap());
        assert!(!c5.is_chordal());
        let complete = build_circulant(&CirculantSpec::new(7, [1, 2, 3]).unwrap());
        assert!(complete.is_chordal());
        let empty = Graph::from_edges(0, &[]).unwrap();
        assert!(empty.is_chordal());
        // chordal: C4 plus a chord
        let kite = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        assert!(kite.is_chordal());
    }

    #[test]
    fn order_from_labels_maps_back() {
        let g = build_circulant(&CirculantSpec::new(11, [1, 2]).unwrap());
        let sub = g.induced_subgraph(&[3, 4, 5, 6, 7, 8]).unwrap();
        let order = sub.order_from_labels(&[3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(order, vec![0, 1, 2, 3, 4, 5]);
        assert!(sub.graph.is_perfect_elimination_order(&order).unwrap());
    }

    fn next_permutation(p: &mut [usize]) -> bool {
        let n = p.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && p[i - 1] >= p[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while p[j] <= p[i - 1] {
            j -= 1;
        }
        p.swap(i - 1, j);
        p[i..].reverse();
        true
    }
}
