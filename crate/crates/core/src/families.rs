//! Constructors for the named hypergraph families and attachment operations.
//!
//! Labeling is deterministic throughout: cycle vertices come first in cycle
//! order, attachment vertices follow in construction order. For a 2-cycle the
//! shared vertices are `0` and `k-1` (the loose-cycle labeling), so
//! `tilde_c2(k, 0, 0)` and `cg_star(k, 2, [0, 0])` are structurally equal to
//! `loose_cycle(k, 2)`.

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A hypergraph with a distinguished root vertex, used for grafting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rooted {
    pub graph: Hypergraph,
    pub root: usize,
}

impl Rooted {
    pub fn new(graph: Hypergraph, root: usize) -> Result<Self> {
        if root >= graph.n() {
            return Err(Error::VertexOutOfRange {
                v: root,
                n: graph.n(),
            });
        }
        Ok(Rooted { graph, root })
    }

    /// The trivial rooted hypergraph: one vertex, no edges.
    pub fn trivial(k: usize) -> Result<Self> {
        Ok(Rooted {
            graph: Hypergraph::build(k, 1, &[])?,
            root: 0,
        })
    }

    pub fn is_trivial(&self) -> bool {
        self.graph.m() == 0
    }
}

/// Loose path with `m` edges: consecutive edges share exactly one vertex.
/// Edge `i` spans vertices `i(k-1) ..= i(k-1)+k-1`.
pub fn loose_path(k: usize, m: usize) -> Result<Hypergraph> {
    if k < 2 || m < 1 {
        return Err(Error::BadParam(format!(
            "loose path needs k >= 2 and m >= 1 (got k={k}, m={m})"
        )));
    }
    let n = m * (k - 1) + 1;
    let edges: Vec<Vec<usize>> = (0..m)
        .map(|i| (i * (k - 1)..i * (k - 1) + k).collect())
        .collect();
    Hypergraph::build(k, n, &edges)
}

/// Loose cycle with `g` edges on `g(k-1)` vertices. Edge `i` spans
/// `i(k-1) ..= i(k-1)+k-1` with wraparound to vertex 0. For `g = 2` the two
/// edges share exactly the two vertices `0` and `k-1`.
pub fn loose_cycle(k: usize, g: usize) -> Result<Hypergraph> {
    let ok = (k >= 3 && g >= 2) || (k == 2 && g >= 3);
    if !ok {
        return Err(Error::BadParam(format!(
            "loose cycle needs k >= 3, g >= 2 or k = 2, g >= 3 (got k={k}, g={g})"
        )));
    }
    let n = g * (k - 1);
    let edges: Vec<Vec<usize>> = (0..g)
        .map(|i| (i * (k - 1)..i * (k - 1) + k).map(|v| v % n).collect())
        .collect();
    Hypergraph::build(k, n, &edges)
}

/// Hyperstar with `t` edges all sharing the center vertex 0.
/// `t = 0` yields the single-vertex hypergraph.
pub fn hyperstar(k: usize, t: usize) -> Result<Hypergraph> {
    if k < 2 {
        return Err(Error::BadParam(format!("hyperstar needs k >= 2 (got {k})")));
    }
    let n = t * (k - 1) + 1;
    let edges: Vec<Vec<usize>> = (0..t)
        .map(|i| {
            let mut e = vec![0];
            e.extend(i * (k - 1) + 1..i * (k - 1) + k);
            e
        })
        .collect();
    Hypergraph::build(k, n, &edges)
}

/// Attaches a pendant path of `p` edges at `u`. New vertices get ids
/// `n, n+1, ...`; each new edge hangs off the last fresh vertex of the
/// previous one. `p = 0` returns the input unchanged.
pub fn attach_pendant_path(g: &Hypergraph, u: usize, p: usize) -> Result<Hypergraph> {
    if u >= g.n() {
        return Err(Error::VertexOutOfRange { v: u, n: g.n() });
    }
    let k = g.k();
    let mut edges = g.edges().to_vec();
    let mut anchor = u;
    let mut next = g.n();
    for _ in 0..p {
        let mut e = vec![anchor];
        e.extend(next..next + k - 1);
        anchor = next + k - 2;
        next += k - 1;
        edges.push(e);
    }
    Hypergraph::build(k, next, &edges)
}

/// Two pendant paths of lengths `p` and `q` at the same vertex `u`.
pub fn g_u(g: &Hypergraph, u: usize, p: usize, q: usize) -> Result<Hypergraph> {
    if g.m() < 1 {
        return Err(Error::BadParam("base hypergraph needs at least one edge".into()));
    }
    if p < 1 {
        return Err(Error::BadParam(format!("need p >= 1 (got p={p}, q={q})")));
    }
    let with_p = attach_pendant_path(g, u, p)?;
    attach_pendant_path(&with_p, u, q)
}

/// A pendant path of length `p` at `u` and one of length `q` at `v`, where
/// `u` and `v` lie in a common edge.
pub fn g_uv(g: &Hypergraph, u: usize, v: usize, p: usize, q: usize) -> Result<Hypergraph> {
    if u == v {
        return Err(Error::BadParam(format!("u and v must differ (both {u})")));
    }
    if u >= g.n() || v >= g.n() {
        let w = if u >= g.n() { u } else { v };
        return Err(Error::VertexOutOfRange { v: w, n: g.n() });
    }
    let coedge = g
        .edges()
        .iter()
        .any(|e| e.binary_search(&u).is_ok() && e.binary_search(&v).is_ok());
    if !coedge {
        return Err(Error::NotCoEdge { u, v });
    }
    let with_p = attach_pendant_path(g, u, p)?;
    attach_pendant_path(&with_p, v, q)
}

/// Identifies the attachment vertex of pendant edge `e`: the unique vertex of
/// degree >= 2, or the largest id of the edge when the hypergraph has a
/// single edge (every vertex then has degree 1 and one must be designated).
pub fn pendant_anchor(g: &Hypergraph, e: usize) -> Result<usize> {
    if e >= g.m() {
        return Err(Error::BadParam(format!(
            "edge id {e} out of range (m = {})",
            g.m()
        )));
    }
    if g.m() == 1 {
        return Ok(*g.edge(e).last().expect("edges are nonempty"));
    }
    let heavy: Vec<usize> = g
        .edge(e)
        .iter()
        .copied()
        .filter(|&v| g.degree(v).expect("vertex in range") >= 2)
        .collect();
    if heavy.len() == 1 {
        Ok(heavy[0])
    } else {
        Err(Error::NotPendantEdge { e })
    }
}

/// Grafts `k-1` rooted hypergraphs onto the pendant edge `e`.
///
/// With `w_k` the attachment vertex of `e` and `w_1 < ... < w_{k-1}` its
/// degree-1 vertices in ascending id order, the root of the `i`-th part is
/// identified with `w_k` for `i <= s` and with `w_i` for `i > s` (1-based).
/// Remaining vertices of the parts get fresh ids in construction order.
pub fn graft_at_pendant_edge(
    g: &Hypergraph,
    e: usize,
    s: usize,
    parts: &[Rooted],
) -> Result<Hypergraph> {
    let k = g.k();
    if parts.len() != k - 1 {
        return Err(Error::BadParam(format!(
            "expected {} rooted parts, got {}",
            k - 1,
            parts.len()
        )));
    }
    if s > k - 1 {
        return Err(Error::BadParam(format!("s = {s} exceeds k-1 = {}", k - 1)));
    }
    for part in parts {
        if part.graph.k() != k {
            return Err(Error::BadParam(format!(
                "part uniformity {} differs from base {k}",
                part.graph.k()
            )));
        }
    }
    let w_k = pendant_anchor(g, e)?;
    let w: Vec<usize> = g.edge(e).iter().copied().filter(|&v| v != w_k).collect();
    let mut edges = g.edges().to_vec();
    let mut next = g.n();
    for (j, part) in parts.iter().enumerate() {
        let target = if j < s { w_k } else { w[j] };
        // map part vertices: root -> target, the rest -> fresh ids ascending
        let mut map = vec![usize::MAX; part.graph.n()];
        map[part.root] = target;
        for v in 0..part.graph.n() {
            if v != part.root {
                map[v] = next;
                next += 1;
            }
        }
        for pe in part.graph.edges() {
            edges.push(pe.iter().map(|&v| map[v]).collect());
        }
    }
    Hypergraph::build(k, next, &edges)
}

/// `cg_star(k, g, t)`: loose cycle of girth `g` with a hyperstar of `t[i]`
/// edges centered at cycle vertex `i(k-1)` for each `i`.
pub fn cg_star(k: usize, g: usize, t: &[usize]) -> Result<Hypergraph> {
    if t.len() != g {
        return Err(Error::BadParam(format!(
            "expected {g} star sizes, got {}",
            t.len()
        )));
    }
    let mut h = loose_cycle(k, g)?;
    for (i, &ti) in t.iter().enumerate() {
        let center = i * (k - 1);
        for _ in 0..ti {
            h = attach_pendant_path(&h, center, 1)?;
        }
    }
    Ok(h)
}

/// The 2-cycle with pendant paths of lengths `p` and `q` attached at the
/// first non-shared vertex of each cycle edge. `tilde_c2(k, 0, 0)` is exactly
/// `loose_cycle(k, 2)`.
pub fn tilde_c2(k: usize, p: usize, q: usize) -> Result<Hypergraph> {
    if k < 3 {
        return Err(Error::BadParam(format!("tilde-c2 needs k >= 3 (got {k})")));
    }
    let base = loose_cycle(k, 2)?;
    // shared vertices are 0 and k-1; the first non-shared vertices are 1 and k
    let with_p = attach_pendant_path(&base, 1, p)?;
    attach_pendant_path(&with_p, k, q)
}

/// Triangle with a pendant path of `m-3` edges (2-uniform), `m` vertices and
/// `m` edges.
pub fn lollipop_graph(m: usize) -> Result<Hypergraph> {
    if m < 3 {
        return Err(Error::BadParam(format!("lollipop needs m >= 3 (got {m})")));
    }
    let triangle = Hypergraph::build(2, 3, &[vec![0, 1], vec![1, 2], vec![0, 2]])?;
    attach_pendant_path(&triangle, 0, m - 3)
}

/// Triangle with `m-3` pendant edges at one vertex (2-uniform), `m` vertices
/// and `m` edges.
pub fn triangle_star_graph(m: usize) -> Result<Hypergraph> {
    if m < 3 {
        return Err(Error::BadParam(format!(
            "triangle-star needs m >= 3 (got {m})"
        )));
    }
    let mut edges = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
    for i in 0..m - 3 {
        edges.push(vec![0, 3 + i]);
    }
    Hypergraph::build(2, m, &edges)
}

/// A parsed family descriptor, the CLI's `--family` syntax.
///
/// Grammar: `<family>:k=<int>[,g=<int>][,m=<int>][,p=<int>,q=<int>][,t=<int>/<int>/...]`
/// with families `loose-path`, `loose-cycle`, `hyperstar` (m = edge count),
/// `cg-star`, `c2-star` (cg-star with g = 2), `tilde-c2`, `lollipop-graph`
/// and `triangle-star-graph` (both 2-uniform, parameter m only).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilySpec {
    LoosePath { k: usize, m: usize },
    LooseCycle { k: usize, g: usize },
    Hyperstar { k: usize, m: usize },
    CgStar { k: usize, g: usize, t: Vec<usize> },
    TildeC2 { k: usize, p: usize, q: usize },
    LollipopGraph { m: usize },
    TriangleStarGraph { m: usize },
}

impl FamilySpec {
    pub fn build(&self) -> Result<Hypergraph> {
        match self {
            FamilySpec::LoosePath { k, m } => loose_path(*k, *m),
            FamilySpec::LooseCycle { k, g } => loose_cycle(*k, *g),
            FamilySpec::Hyperstar { k, m } => hyperstar(*k, *m),
            FamilySpec::CgStar { k, g, t } => cg_star(*k, *g, t),
            FamilySpec::TildeC2 { k, p, q } => tilde_c2(*k, *p, *q),
            FamilySpec::LollipopGraph { m } => lollipop_graph(*m),
            FamilySpec::TriangleStarGraph { m } => triangle_star_graph(*m),
        }
    }
}

struct Params {
    pairs: Vec<(String, String)>,
}

impl Params {
    fn get(&self, key: &str) -> Result<usize> {
        let raw = self
            .pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::BadParam(format!("missing parameter `{key}`")))?;
        raw.parse()
            .map_err(|_| Error::BadParam(format!("parameter `{key}` is not an integer: `{raw}`")))
    }

    fn get_list(&self, key: &str) -> Result<Vec<usize>> {
        let raw = self
            .pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
            .ok_or_else(|| Error::BadParam(format!("missing parameter `{key}`")))?;
        raw.split('/')
            .map(|part| {
                part.parse().map_err(|_| {
                    Error::BadParam(format!("parameter `{key}` has a non-integer entry: `{part}`"))
                })
            })
            .collect()
    }

    fn expect_only(&self, keys: &[&str]) -> Result<()> {
        for (k, _) in &self.pairs {
            if !keys.contains(&k.as_str()) {
                return Err(Error::BadParam(format!("unexpected parameter `{k}`")));
            }
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::BadParam(format!("missing `:` in family spec `{s}`")))?;
        let pairs: Vec<(String, String)> = rest
            .split(',')
            .filter(|part| !part.is_empty())
            .map(|part| {
                part.split_once('=')
                    .map(|(k, v)| (k.to_string(), v.to_string()))
                    .ok_or_else(|| Error::BadParam(format!("malformed parameter `{part}`")))
            })
            .collect::<Result<_>>()?;
        let params = Params { pairs };
        match name {
            "loose-path" => {
                params.expect_only(&["k", "m"])?;
                Ok(FamilySpec::LoosePath {
                    k: params.get("k")?,
                    m: params.get("m")?,
                })
            }
            "loose-cycle" => {
                params.expect_only(&["k", "g"])?;
                Ok(FamilySpec::LooseCycle {
                    k: params.get("k")?,
                    g: params.get("g")?,
                })
            }
            "hyperstar" => {
                params.expect_only(&["k", "m"])?;
                Ok(FamilySpec::Hyperstar {
                    k: params.get("k")?,
                    m: params.get("m")?,
                })
            }
            "cg-star" => {
                params.expect_only(&["k", "g", "t"])?;
                Ok(FamilySpec::CgStar {
                    k: params.get("k")?,
                    g: params.get("g")?,
                    t: params.get_list("t")?,
                })
            }
            "c2-star" => {
                params.expect_only(&["k", "t"])?;
                Ok(FamilySpec::CgStar {
                    k: params.get("k")?,
                    g: 2,
                    t: params.get_list("t")?,
                })
            }
            "tilde-c2" => {
                params.expect_only(&["k", "p", "q"])?;
                Ok(FamilySpec::TildeC2 {
                    k: params.get("k")?,
                    p: params.get("p")?,
                    q: params.get("q")?,
                })
            }
            "lollipop-graph" => {
                params.expect_only(&["m"])?;
                Ok(FamilySpec::LollipopGraph { m: params.get("m")? })
            }
            "triangle-star-graph" => {
                params.expect_only(&["m"])?;
                Ok(FamilySpec::TriangleStarGraph { m: params.get("m")? })
            }
            other => Err(Error::BadParam(format!("unknown family `{other}`"))),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::LoosePath { k, m } => write!(f, "loose-path:k={k},m={m}"),
            FamilySpec::LooseCycle { k, g } => write!(f, "loose-cycle:k={k},g={g}"),
            FamilySpec::Hyperstar { k, m } => write!(f, "hyperstar:k={k},m={m}"),
            FamilySpec::CgStar { k, g, t } => {
                let list: Vec<String> = t.iter().map(|v| v.to_string()).collect();
                write!(f, "cg-star:k={k},g={g},t={}", list.join("/"))
            }
            FamilySpec::TildeC2 { k, p, q } => write!(f, "tilde-c2:k={k},p={p},q={q}"),
            FamilySpec::LollipopGraph { m } => write!(f, "lollipop-graph:m={m}"),
            FamilySpec::TriangleStarGraph { m } => write!(f, "triangle-star-graph:m={m}"),
        }
    }
}
