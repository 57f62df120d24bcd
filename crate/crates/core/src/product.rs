//! Strong, Cartesian and lexicographic products of two graphs.
//!
//! Product vertices are encoded as `(g, h) -> g * right_order + h`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{family, Family, Graph};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Strong,
    Cartesian,
    Lexicographic,
}

impl ProductKind {
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Strong => "strong",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Lexicographic => "lex",
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            ProductKind::Strong => "⊠",
            ProductKind::Cartesian => "□",
            ProductKind::Lexicographic => "∘",
        }
    }

    /// Adjacency rule between `(g1, h1)` and `(g2, h2)`.
    fn adjacent(self, left: &Graph, right: &Graph, (g1, h1): (usize, usize), (g2, h2): (usize, usize)) -> bool {
        let ge = left.adjacent(g1, g2);
        let he = right.adjacent(h1, h2);
        match self {
            ProductKind::Strong => (ge && h1 == h2) || (g1 == g2 && he) || (ge && he),
            ProductKind::Cartesian => (ge && h1 == h2) || (g1 == g2 && he),
            ProductKind::Lexicographic => ge || (g1 == g2 && he),
        }
    }
}

impl FromStr for ProductKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "strong" => Ok(ProductKind::Strong),
            "cartesian" => Ok(ProductKind::Cartesian),
            "lex" | "lexicographic" => Ok(ProductKind::Lexicographic),
            other => Err(format!("unknown product kind {other:?}")),
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A materialized product graph together with its factor sizes.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    left_order: usize,
    right_order: usize,
    kind: ProductKind,
}

impl ProductGraph {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn left_order(&self) -> usize {
        self.left_order
    }

    pub fn right_order(&self) -> usize {
        self.right_order
    }

    pub fn encode(&self, g: usize, h: usize) -> Result<usize> {
        if g >= self.left_order {
            return Err(Error::VertexOutOfRange {
                vertex: g,
                order: self.left_order,
            });
        }
        if h >= self.right_order {
            return Err(Error::VertexOutOfRange {
                vertex: h,
                order: self.right_order,
            });
        }
        Ok(g * self.right_order + h)
    }

    pub fn decode(&self, v: usize) -> Result<(usize, usize)> {
        self.graph.check_vertex(v)?;
        Ok((v / self.right_order, v % self.right_order))
    }

    /// Unchecked encode for indices already known to be in range.
    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    #[inline]
    pub fn coords(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }

    /// The layer with fixed second coordinate `h`: `{(g, h) : g in V(G)}`.
    pub fn g_layer(&self, h: usize) -> Result<VertexSet> {
        if h >= self.right_order {
            return Err(Error::VertexOutOfRange {
                vertex: h,
                order: self.right_order,
            });
        }
        Ok(VertexSet::from_indices(
            self.graph.order(),
            (0..self.left_order).map(|g| self.index(g, h)),
        ))
    }

    /// The layer with fixed first coordinate `g`: `{(g, h) : h in V(H)}`.
    pub fn h_layer(&self, g: usize) -> Result<VertexSet> {
        if g >= self.left_order {
            return Err(Error::VertexOutOfRange {
                vertex: g,
                order: self.left_order,
            });
        }
        Ok(VertexSet::from_indices(
            self.graph.order(),
            (0..self.right_order).map(|h| self.index(g, h)),
        ))
    }

    /// Renders a set of product vertices as `{(g,h),...}`.
    pub fn format_set(&self, s: &VertexSet) -> String {
        let parts: Vec<String> = s
            .iter()
            .map(|v| {
                let (g, h) = self.coords(v);
                format!("({g},{h})")
            })
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

pub fn product(kind: ProductKind, left: &Graph, right: &Graph) -> ProductGraph {
    let (ng, nh) = (left.order(), right.order());
    let n = ng * nh;
    let mut rows = vec![VertexSet::empty(n); n];
    for a in 0..n {
        let pa = (a / nh, a % nh);
        for b in a + 1..n {
            let pb = (b / nh, b % nh);
            if kind.adjacent(left, right, pa, pb) {
                rows[a].insert(b);
                rows[b].insert(a);
            }
        }
    }
    let label = format!(
        "{}{}{}",
        left.label().unwrap_or("G"),
        kind.symbol(),
        right.label().unwrap_or("H")
    );
    ProductGraph {
        graph: Graph::from_rows(rows).with_label(label),
        left_order: ng,
        right_order: nh,
        kind,
    }
}

pub fn strong_product(left: &Graph, right: &Graph) -> ProductGraph {
    product(ProductKind::Strong, left, right)
}

pub fn cartesian_product(left: &Graph, right: &Graph) -> ProductGraph {
    product(ProductKind::Cartesian, left, right)
}

pub fn lexicographic_product(left: &Graph, right: &Graph) -> ProductGraph {
    product(ProductKind::Lexicographic, left, right)
}

/// Checks that `G ⊠ K_n` and `G ∘ K_n` have literally the same edge set
/// under the shared encoding.
pub fn strong_equals_lex_on_complete(g: &Graph, n: usize) -> Result<bool> {
    let k = family(Family::Complete, n)?;
    let strong = strong_product(g, &k);
    let lex = lexicographic_product(g, &k);
    Ok(strong.graph().edges() == lex.graph().edges())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        family(Family::Path, n).unwrap()
    }

    #[test]
    fn p2_strong_p2_is_k4() {
        let p = strong_product(&path(2), &path(2));
        assert!(p.graph().is_complete());
        assert_eq!(p.graph().order(), 4);
    }

    #[test]
    fn p3_strong_p3_center_is_universal() {
        let p = strong_product(&path(3), &path(3));
        let center = p.encode(1, 1).unwrap();
        assert_eq!(p.graph().degree(center), 8);
        assert_eq!(p.graph().size(), 20);
    }

    #[test]
    fn encoding() {
        let p = strong_product(&path(3), &path(4));
        assert_eq!(p.encode(2, 3).unwrap(), 11);
        assert_eq!(p.decode(0).unwrap(), (0, 0));
        assert_eq!(p.decode(11).unwrap(), (2, 3));
        assert!(p.encode(3, 0).is_err());
        assert!(p.encode(0, 4).is_err());
        assert!(p.decode(12).is_err());
    }

    #[test]
    fn layers() {
        let p = strong_product(&path(3), &path(3));
        let layer = p.g_layer(0).unwrap();
        assert_eq!(p.format_set(&layer), "{(0,0),(1,0),(2,0)}");
        assert_eq!(p.graph().induced(&layer).size(), 2);
        assert!(p.g_layer(3).is_err());

        let paw = family(Family::PawPendant, 4).unwrap();
        let square = strong_product(&paw, &paw);
        let h_layer = square.h_layer(3).unwrap();
        assert_eq!(square.graph().induced(&h_layer).edges(), paw.edges());
    }

    #[test]
    fn cartesian_and_lex_rules() {
        let c = cartesian_product(&path(2), &path(2));
        assert_eq!(c.graph().size(), 4);
        let l = lexicographic_product(&path(2), &path(3));
        // every (0,*) is adjacent to every (1,*): 9 edges, plus 2 copies of P3
        assert_eq!(l.graph().size(), 9 + 4);
    }

    #[test]
    fn strong_vs_lex_on_complete_examples() {
        assert!(strong_equals_lex_on_complete(&path(3), 2).unwrap());
        let paw = family(Family::PawPendant, 4).unwrap();
        assert!(strong_equals_lex_on_complete(&paw, 3).unwrap());
        assert!(strong_equals_lex_on_complete(&path(2), 2).unwrap());
        // not true for a non-complete second factor
        let s = strong_product(&path(3), &path(3));
        let l = lexicographic_product(&path(3), &path(3));
        assert_ne!(s.graph().edges(), l.graph().edges());
    }
}
