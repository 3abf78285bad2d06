//! Distances and transmission-type sums.
//!
//! Distance is the length of a shortest alternating vertex/edge walk, which a
//! breadth-first search over the incidence structure computes directly: one
//! hop traverses one edge.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use num_rational::Ratio;
use std::collections::VecDeque;

/// All-pairs shortest-path table of a connected hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest entry (the diameter of the hypergraph).
    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

/// BFS hop counts from `u` to every vertex. Errors with `Disconnected` if
/// some vertex is unreachable.
pub fn distances_from(g: &Hypergraph, u: usize) -> Result<Vec<u32>> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { v: u, n: g.n() });
    }
    let inc = g.incidence();
    bfs(g, &inc, u)
}

fn bfs(g: &Hypergraph, inc: &[Vec<usize>], u: usize) -> Result<Vec<u32>> {
    let mut dist = vec![u32::MAX; g.n()];
    let mut edge_seen = vec![false; g.m()];
    dist[u] = 0;
    let mut queue = VecDeque::from([u]);
    while let Some(v) = queue.pop_front() {
        for &e in &inc[v] {
            if !edge_seen[e] {
                edge_seen[e] = true;
                for &w in g.edge(e) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    if dist.contains(&u32::MAX) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Full distance table via one BFS per source vertex.
pub fn all_pairs(g: &Hypergraph) -> Result<DistanceMatrix> {
    let inc = g.incidence();
    let n = g.n();
    let mut d = Vec::with_capacity(n * n);
    for u in 0..n {
        d.extend(bfs(g, &inc, u)?);
    }
    Ok(DistanceMatrix { n, d })
}

/// Transmission: the sum of distances over all unordered vertex pairs.
pub fn transmission(g: &Hypergraph) -> Result<u64> {
    let inc = g.incidence();
    let mut total: u64 = 0;
    for u in 0..g.n() {
        let dist = bfs(g, &inc, u)?;
        total += dist.iter().map(|&d| d as u64).sum::<u64>();
    }
    // every unordered pair is counted once from each endpoint
    Ok(total / 2)
}

/// Row sum of the distance table: the transmission of a single vertex.
pub fn sigma_vertex(g: &Hypergraph, u: usize) -> Result<u64> {
    Ok(distances_from(g, u)?.iter().map(|&d| d as u64).sum())
}

fn check_subset(g: &Hypergraph, a: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.n()];
    for &v in a {
        if v >= g.n() {
            return Err(Error::BadSubset {
                reason: format!("vertex {v} out of range (n = {})", g.n()),
            });
        }
        if seen[v] {
            return Err(Error::BadSubset {
                reason: format!("vertex {v} repeated"),
            });
        }
        seen[v] = true;
    }
    Ok(())
}

/// Sum of distances over unordered pairs inside `a`.
pub fn sigma_subset(g: &Hypergraph, a: &[usize]) -> Result<u64> {
    check_subset(g, a)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let inc = g.incidence();
    let mut total: u64 = 0;
    for (i, &u) in a.iter().enumerate() {
        let dist = bfs(g, &inc, u)?;
        for &v in &a[i + 1..] {
            total += dist[v] as u64;
        }
    }
    Ok(total)
}

/// Sum of distances over `a x b` for disjoint vertex sets.
pub fn sigma_between(g: &Hypergraph, a: &[usize], b: &[usize]) -> Result<u64> {
    check_subset(g, a)?;
    check_subset(g, b)?;
    if let Some(&v) = a.iter().find(|v| b.contains(v)) {
        return Err(Error::Overlap { v });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let inc = g.incidence();
    let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
    let mut total: u64 = 0;
    for &u in small {
        let dist = bfs(g, &inc, u)?;
        for &v in large {
            total += dist[v] as u64;
        }
    }
    Ok(total)
}

/// Average distance `2 sigma / (n (n-1))` as an exact fraction.
pub fn average_distance(g: &Hypergraph) -> Result<Ratio<u64>> {
    if g.n() < 2 {
        return Err(Error::BadParam(
            "average distance needs at least 2 vertices".into(),
        ));
    }
    let sigma = transmission(g)?;
    let n = g.n() as u64;
    Ok(Ratio::new(2 * sigma, n * (n - 1)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c63() -> Hypergraph {
        Hypergraph::build(3, 6, &[vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap()
    }

    fn single() -> Hypergraph {
        Hypergraph::build(3, 3, &[vec![0, 1, 2]]).unwrap()
    }

    #[test]
    fn distances_on_loose_cycle() {
        assert_eq!(distances_from(&c63(), 0).unwrap(), vec![0, 1, 1, 2, 1, 1]);
    }

    #[test]
    fn distances_on_single_edge() {
        for u in 0..3 {
            let d = distances_from(&single(), u).unwrap();
            assert_eq!(d[u], 0);
            assert_eq!(d.iter().sum::<u32>(), 2);
        }
    }

    #[test]
    fn distances_reject_disconnected() {
        let g = Hypergraph::build(3, 6, &[vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert_eq!(distances_from(&g, 0).unwrap_err(), Error::Disconnected);
        assert_eq!(transmission(&g).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn all_pairs_single_edge() {
        let d = all_pairs(&single()).unwrap();
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(d.get(u, v), u32::from(u != v));
            }
        }
    }

    #[test]
    fn all_pairs_loose_cycle_histogram() {
        let d = all_pairs(&c63()).unwrap();
        let mut ones = 0;
        let mut twos = 0;
        for u in 0..6 {
            for v in (u + 1)..6 {
                match d.get(u, v) {
                    1 => ones += 1,
                    2 => twos += 1,
                    other => panic!("unexpected distance {other}"),
                }
            }
        }
        assert_eq!((ones, twos), (9, 6));
        assert_eq!(d.diameter(), 2);
    }

    #[test]
    fn transmission_values() {
        assert_eq!(transmission(&single()).unwrap(), 3);
        assert_eq!(transmission(&c63()).unwrap(), 21);
    }

    #[test]
    fn sigma_vertex_values() {
        assert_eq!(sigma_vertex(&single(), 0).unwrap(), 2);
        assert_eq!(sigma_vertex(&c63(), 0).unwrap(), 6);
        let total: u64 = (0..6).map(|u| sigma_vertex(&c63(), u).unwrap()).sum();
        assert_eq!(total, 2 * transmission(&c63()).unwrap());
    }

    #[test]
    fn sigma_subset_values() {
        let g = c63();
        assert_eq!(sigma_subset(&g, &[]).unwrap(), 0);
        assert_eq!(sigma_subset(&g, &[3]).unwrap(), 0);
        assert_eq!(sigma_subset(&g, &[0, 2, 4]).unwrap(), 3);
        let all: Vec<usize> = (0..6).collect();
        assert_eq!(sigma_subset(&g, &all).unwrap(), transmission(&g).unwrap());
        assert!(matches!(
            sigma_subset(&g, &[0, 0]).unwrap_err(),
            Error::BadSubset { .. }
        ));
    }

    #[test]
    fn sigma_between_values() {
        let g = c63();
        assert_eq!(sigma_between(&g, &[], &[0, 1]).unwrap(), 0);
        assert_eq!(sigma_between(&g, &[0], &[3]).unwrap(), 2);
        assert_eq!(
            sigma_between(&g, &[0, 1], &[0]).unwrap_err(),
            Error::Overlap { v: 0 }
        );
        // bipartition identity
        let a = [0, 1, 2];
        let b = [3, 4, 5];
        let sum = sigma_subset(&g, &a).unwrap()
            + sigma_subset(&g, &b).unwrap()
            + sigma_between(&g, &a, &b).unwrap();
        assert_eq!(sum, transmission(&g).unwrap());
    }

    #[test]
    fn average_distance_values() {
        assert_eq!(average_distance(&single()).unwrap(), Ratio::new(1, 1));
        assert_eq!(average_distance(&c63()).unwrap(), Ratio::new(7, 5));
        let c43 = Hypergraph::build(3, 4, &[vec![0, 1, 2], vec![0, 2, 3]]).unwrap();
        assert_eq!(transmission(&c43).unwrap(), 7);
        assert_eq!(average_distance(&c43).unwrap(), Ratio::new(7, 6));
        let vertex = Hypergraph::build(2, 1, &[]).unwrap();
        assert!(average_distance(&vertex).is_err());
    }
}
