//! The `Hypergraph` carrier type and structural operations.
//!
//! A hypergraph is stored in a single normal form: vertices are dense ids
//! `0..n`, every edge is a strictly sorted set of `k` distinct ids, and the
//! edge list itself is sorted lexicographically. Equality of `Hypergraph`
//! values is therefore structural equality of labeled hypergraphs.

use crate::error::{Error, Result};
use std::collections::VecDeque;

/// A k-uniform hypergraph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// Coarse structural classification by the vertex-count criterion.
///
/// A connected k-uniform hypergraph with m edges has at most `m(k-1)+1`
/// vertices; equality characterizes hypertrees and `n = m(k-1)`
/// characterizes unicyclic hypergraphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StructureClass {
    Hypertree,
    Unicyclic,
    OtherConnected,
    Disconnected,
}

impl std::fmt::Display for StructureClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            StructureClass::Hypertree => "hypertree",
            StructureClass::Unicyclic => "unicyclic",
            StructureClass::OtherConnected => "other-connected",
            StructureClass::Disconnected => "disconnected",
        };
        f.write_str(s)
    }
}

impl Hypergraph {
    /// Builds a hypergraph from raw edge lists, normalizing as it validates.
    ///
    /// Rejects invalid input instead of repairing it: every edge must have
    /// exactly `k` distinct in-range vertices and no edge may repeat.
    pub fn build(k: usize, n: usize, raw_edges: &[Vec<usize>]) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadParam(format!("uniformity k = {k} must be >= 2")));
        }
        if n < 1 {
            return Err(Error::BadParam("vertex count n must be >= 1".into()));
        }
        let mut edges: Vec<Vec<usize>> = Vec::with_capacity(raw_edges.len());
        for raw in raw_edges {
            let mut e = raw.clone();
            e.sort_unstable();
            e.dedup();
            if e.len() != k || raw.len() != k {
                return Err(Error::EdgeWrongSize {
                    edge: raw.clone(),
                    k,
                });
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { v, n });
            }
            edges.push(e);
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge {
                edge: w[0].clone(),
            });
        }
        Ok(Hypergraph { k, n, edges })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges (the size of the hypergraph).
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &[usize] {
        &self.edges[e]
    }

    /// Vertex-indexed incidence lists (edge ids in ascending order).
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        Ok(self.incident_edges(v)?.len())
    }

    /// Ids of the edges containing `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> Result<Vec<usize>> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(self
            .edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect())
    }

    /// True iff every pair of vertices is joined by a path.
    /// A single-vertex hypergraph is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut edge_seen = vec![false; self.m()];
        let inc = self.incidence();
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(v) = queue.pop_front() {
            for &e in &inc[v] {
                if !edge_seen[e] {
                    edge_seen[e] = true;
                    for &w in &self.edges[e] {
                        if !seen[w] {
                            seen[w] = true;
                            reached += 1;
                            queue.push_back(w);
                        }
                    }
                }
            }
        }
        reached == self.n
    }

    /// Classifies by the vertex-count criterion: a connected hypergraph with
    /// `n = m(k-1)+1` is a hypertree, with `n = m(k-1)` unicyclic, and
    /// anything connected with fewer vertices has at least two cycles.
    pub fn classify(&self) -> StructureClass {
        if !self.is_connected() {
            return StructureClass::Disconnected;
        }
        let budget = self.m() * (self.k - 1);
        if self.n == budget + 1 {
            StructureClass::Hypertree
        } else if self.n == budget {
            StructureClass::Unicyclic
        } else {
            StructureClass::OtherConnected
        }
    }

    /// Removes edge `e`, keeping all vertices (isolated vertices may appear).
    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        if e >= self.m() {
            return Err(Error::BadParam(format!(
                "edge id {e} out of range (m = {})",
                self.m()
            )));
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != e)
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph::build(self.k, self.n, &edges)
    }

    /// Removes several edges at once, keeping all vertices.
    pub fn delete_edges(&self, ids: &[usize]) -> Result<Self> {
        for &e in ids {
            if e >= self.m() {
                return Err(Error::BadParam(format!(
                    "edge id {e} out of range (m = {})",
                    self.m()
                )));
            }
        }
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| !ids.contains(i))
            .map(|(_, e)| e.clone())
            .collect();
        Hypergraph::build(self.k, self.n, &edges)
    }

    /// Removes `v` and every edge containing it, then relabels the remaining
    /// vertices to `0..n-1` preserving order.
    pub fn delete_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        if self.n == 1 {
            return Err(Error::BadParam(
                "cannot delete the only vertex".into(),
            ));
        }
        let relabel = |w: usize| if w > v { w - 1 } else { w };
        let edges: Vec<Vec<usize>> = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&v).is_err())
            .map(|e| e.iter().map(|&w| relabel(w)).collect())
            .collect();
        Hypergraph::build(self.k, self.n - 1, &edges)
    }

    /// Maximal connected pieces as vertex sets, each sorted, the list sorted
    /// by minimum vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut edge_seen = vec![false; self.m()];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &e in &inc[v] {
                    if !edge_seen[e] {
                        edge_seen[e] = true;
                        for &w in &self.edges[e] {
                            if !seen[w] {
                                seen[w] = true;
                                comp.push(w);
                                queue.push_back(w);
                            }
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Edges that are pendant: exactly one vertex of the edge has degree >= 2.
    /// Returns `(edge id, attachment vertex)` pairs. For a single-edge
    /// hypergraph no edge qualifies (every vertex has degree 1).
    pub fn pendant_edges(&self) -> Vec<(usize, usize)> {
        let mut deg = vec![0usize; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        self.edges
            .iter()
            .enumerate()
            .filter_map(|(i, e)| {
                let heavy: Vec<usize> = e.iter().copied().filter(|&v| deg[v] >= 2).collect();
                (heavy.len() == 1).then(|| (i, heavy[0]))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c63() -> Hypergraph {
        Hypergraph::build(3, 6, &[vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap()
    }

    #[test]
    fn build_single_edge() {
        let g = Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(g.n(), 3);
    }

    #[test]
    fn build_normalizes_edge_order() {
        let g = Hypergraph::build(3, 6, &[vec![4, 0, 5], vec![2, 1, 0], vec![3, 4, 2]]).unwrap();
        assert_eq!(g, c63());
        assert_eq!(
            g.edges(),
            &[vec![0, 1, 2], vec![0, 4, 5], vec![2, 3, 4]]
        );
    }

    #[test]
    fn build_rejects_repeated_vertex() {
        let err = Hypergraph::build(3, 3, &[vec![0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::EdgeWrongSize { .. }));
    }

    #[test]
    fn build_rejects_wrong_size() {
        let err = Hypergraph::build(3, 4, &[vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::EdgeWrongSize { .. }));
    }

    #[test]
    fn build_rejects_out_of_range() {
        let err = Hypergraph::build(3, 3, &[vec![0, 1, 3]]).unwrap_err();
        assert_eq!(err, Error::VertexOutOfRange { v: 3, n: 3 });
    }

    #[test]
    fn build_rejects_duplicate_edge() {
        let err = Hypergraph::build(3, 4, &[vec![0, 1, 2], vec![2, 1, 0]]).unwrap_err();
        assert!(matches!(err, Error::DuplicateEdge { .. }));
    }

    #[test]
    fn build_rejects_bad_k_and_n() {
        assert!(Hypergraph::build(1, 3, &[]).is_err());
        assert!(Hypergraph::build(3, 0, &[]).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap().is_connected());
        assert!(!Hypergraph::build(3, 6, &[vec![0, 1, 2], vec![3, 4, 5]])
            .unwrap()
            .is_connected());
        assert!(c63().is_connected());
        assert!(Hypergraph::build(2, 1, &[]).unwrap().is_connected());
    }

    #[test]
    fn classification() {
        let single = Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(single.classify(), StructureClass::Hypertree);
        assert_eq!(c63().classify(), StructureClass::Unicyclic);
        // three 3-edges pairwise sharing 2 vertices on 5 vertices
        let tight = Hypergraph::build(3, 5, &[vec![0, 1, 2], vec![0, 1, 3], vec![0, 1, 4]]).unwrap();
        assert_eq!(tight.classify(), StructureClass::OtherConnected);
        let split = Hypergraph::build(3, 6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(split.classify(), StructureClass::Disconnected);
        let vertex = Hypergraph::build(3, 1, &[]).unwrap();
        assert_eq!(vertex.classify(), StructureClass::Hypertree);
    }

    #[test]
    fn degrees_and_incidence() {
        let g = c63();
        assert_eq!(g.degree(0).unwrap(), 2);
        assert_eq!(g.incident_edges(0).unwrap(), vec![0, 1]);
        assert_eq!(g.degree(1).unwrap(), 1);
        assert!(g.degree(6).is_err());
        let single = Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap();
        for v in 0..3 {
            assert_eq!(single.degree(v).unwrap(), 1);
        }
    }

    #[test]
    fn delete_edge_keeps_vertices() {
        let single = Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap();
        let g = single.delete_edge(0).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 0);
        assert!(!g.is_connected());
        assert_eq!(g.components().len(), 3);
    }

    #[test]
    fn delete_vertex_relabels() {
        // deleting vertex 0 of C_{6,3} removes both incident edges
        let g = c63().delete_vertex(0).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edges(), &[vec![1, 2, 3]]);
    }

    #[test]
    fn components_split() {
        let g = c63();
        // remove both edges through vertex 0 (ids 0 and 1 in normal form)
        let rest = g.delete_edges(&[0, 1]).unwrap();
        assert_eq!(
            rest.components(),
            vec![vec![0], vec![1], vec![2, 3, 4], vec![5]]
        );
        assert_eq!(c63().components(), vec![vec![0, 1, 2, 3, 4, 5]]);
    }

    #[test]
    fn pendant_edge_detection() {
        // loose path with 2 edges: both are pendant at the shared vertex
        let g = Hypergraph::build(3, 5, &[vec![0, 1, 2], vec![2, 3, 4]]).unwrap();
        assert_eq!(g.pendant_edges(), vec![(0, 2), (1, 2)]);
        // a single edge has no pendant edge
        let single = Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap();
        assert!(single.pendant_edges().is_empty());
        // cycle edges are never pendant
        assert!(c63().pendant_edges().is_empty());
    }
}
