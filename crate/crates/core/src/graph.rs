//! Immutable simple graphs with bitset adjacency, hop distances and the
//! standard families used throughout the crate.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// A finite simple undirected graph on vertices `0..order`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges and both orientations
    /// of the same edge collapse to one edge.
    pub fn new(order: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if order == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![VertexSet::empty(order); order];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj, label: None })
    }

    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, row)| !row.contains(u) && row.iter().all(|v| adj[v].contains(u))));
        Graph { adj, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Graph {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Adjacency row of `v`. Panics if `v` is out of range; use
    /// [`Graph::neighbors`] for a checked lookup.
    #[inline]
    pub fn row(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.order() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        }
    }

    /// Open neighborhood N(v).
    pub fn neighbors(&self, v: usize) -> Result<&VertexSet> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Closed neighborhood N[v] = N(v) + v.
    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed_row(v))
    }

    pub(crate) fn closed_row(&self, v: usize) -> VertexSet {
        let mut s = self.adj[v].clone();
        s.insert(v);
        s
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `start`.
    pub fn reachable_from(&self, start: usize) -> VertexSet {
        self.reachable_within(start, &self.vertices())
    }

    /// Vertices reachable from `start` using only vertices of `allowed`
    /// (`start` itself must be allowed).
    pub(crate) fn reachable_within(&self, start: usize, allowed: &VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(self.order(), start);
        let mut frontier = seen.clone();
        while !frontier.is_empty() {
            let mut next = VertexSet::empty(self.order());
            for v in &frontier {
                next.union_with(&self.adj[v]);
            }
            next.intersect_with(allowed);
            next.difference_with(&seen);
            seen.union_with(&next);
            frontier = next;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.reachable_from(0).is_full()
    }

    pub(crate) fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_complete(&self) -> bool {
        (0..self.order()).all(|v| self.degree(v) + 1 == self.order())
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adj[v])
        })
    }

    /// True iff N[v] induces a complete graph.
    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.adj[v])
    }

    pub fn simplicial_vertices(&self) -> VertexSet {
        VertexSet::from_indices(self.order(), (0..self.order()).filter(|&v| self.is_simplicial(v)))
    }

    /// Induced subgraph on `s`, vertices renumbered in increasing order.
    pub fn induced(&self, s: &VertexSet) -> Graph {
        let members = s.to_vec();
        let k = members.len();
        let mut rows = vec![VertexSet::empty(k); k];
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate() {
                if self.adjacent(u, v) {
                    rows[i].insert(j);
                }
            }
        }
        Graph::from_rows(rows)
    }

    pub fn bfs_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn distances(&self) -> DistanceMatrix {
        let n = self.order();
        let mut d = Vec::with_capacity(n * n);
        for s in 0..n {
            d.extend(self.bfs_from(s));
        }
        DistanceMatrix { order: n, d }
    }

    pub fn diameter(&self) -> Result<usize> {
        self.distances().diameter()
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        self.distances().eccentricity(v)
    }

    pub fn eccentric_vertices(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        self.distances().eccentric_vertices(v)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order())
            .field("label", &self.label)
            .field("edges", &self.edges())
            .finish()
    }
}

/// All-pairs hop distances; `None` marks unreachable pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    order: usize,
    d: Vec<Option<usize>>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        self.d[u * self.order + v]
    }

    fn finite(&self, u: usize, v: usize) -> Result<usize> {
        self.get(u, v).ok_or(Error::Disconnected)
    }

    pub fn eccentricity(&self, v: usize) -> Result<usize> {
        (0..self.order).try_fold(0, |acc, x| Ok(acc.max(self.finite(v, x)?)))
    }

    pub fn eccentric_vertices(&self, v: usize) -> Result<VertexSet> {
        let e = self.eccentricity(v)?;
        Ok(VertexSet::from_indices(
            self.order,
            (0..self.order).filter(|&x| self.get(v, x) == Some(e)),
        ))
    }

    pub fn diameter(&self) -> Result<usize> {
        (0..self.order).try_fold(0, |acc, v| Ok(acc.max(self.eccentricity(v)?)))
    }

    /// Lexicographically smallest pair `(u, v)`, `u < v`, at distance equal
    /// to the diameter. `None` for a single-vertex graph.
    pub fn first_diametral_pair(&self) -> Result<Option<(usize, usize)>> {
        let diam = self.diameter()?;
        for u in 0..self.order {
            for v in u + 1..self.order {
                if self.get(u, v) == Some(diam) {
                    return Ok(Some((u, v)));
                }
            }
        }
        Ok(None)
    }
}

/// Named graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    /// A triangle with one pendant vertex attached to a triangle vertex:
    /// edges 01, 02, 12, 23. Only defined on four vertices.
    PawPendant,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::PawPendant => "paw_pendant",
        }
    }

    pub fn build(self, n: usize) -> Result<Graph> {
        let invalid = |reason| Error::InvalidFamily {
            kind: self.name().to_string(),
            order: n,
            reason,
        };
        match self {
            Family::Path => {
                if n < 2 {
                    return Err(invalid("paths need at least 2 vertices"));
                }
                let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
                Ok(Graph::new(n, &edges)?.with_label(format!("P{n}")))
            }
            Family::Cycle => {
                if n < 3 {
                    return Err(invalid("cycles need at least 3 vertices"));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Ok(Graph::new(n, &edges)?.with_label(format!("C{n}")))
            }
            Family::Complete => {
                if n < 2 {
                    return Err(invalid("complete graphs need at least 2 vertices"));
                }
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Ok(Graph::new(n, &edges)?.with_label(format!("K{n}")))
            }
            Family::PawPendant => {
                if n != 4 {
                    return Err(invalid("defined on exactly 4 vertices"));
                }
                Ok(Graph::new(4, &[(0, 1), (0, 2), (1, 2), (2, 3)])?.with_label("paw_pendant"))
            }
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "path" | "P" => Ok(Family::Path),
            "cycle" | "C" => Ok(Family::Cycle),
            "complete" | "K" => Ok(Family::Complete),
            "paw_pendant" => Ok(Family::PawPendant),
            other => Err(Error::InvalidFamily {
                kind: other.to_string(),
                order: 0,
                reason: "unknown family",
            }),
        }
    }
}

pub fn family(kind: Family, n: usize) -> Result<Graph> {
    kind.build(n)
}
