//! Exact toll number, t-hull number, geodetic number and hull number by
//! cardinality-ascending subset search.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::product::ProductGraph;
use crate::toll::{IntervalKind, IntervalTable};
use crate::vertex_set::VertexSet;

/// Graphs up to this order are searched without a cap on the set size.
pub const UNBOUNDED_SEARCH_ORDER: usize = 16;
/// Largest order searched at all; above [`UNBOUNDED_SEARCH_ORDER`] only sets
/// of size at most [`BOUNDED_SEARCH_SIZE`] are tried.
pub const MAX_SEARCH_ORDER: usize = 30;
pub const BOUNDED_SEARCH_SIZE: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantResult {
    pub value: usize,
    #[serde(serialize_with = "serialize_set")]
    pub witness: VertexSet,
    /// Candidate sets examined.
    pub explored: u64,
}

fn serialize_set<S: serde::Serializer>(s: &VertexSet, ser: S) -> std::result::Result<S::Ok, S::Error> {
    ser.collect_seq(s.iter())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Goal {
    /// One closure step reaches `V`.
    Closure,
    /// Iterated closure reaches `V`.
    Hull,
}

fn max_size_for(order: usize) -> Result<usize> {
    if order <= UNBOUNDED_SEARCH_ORDER {
        Ok(order)
    } else if order <= MAX_SEARCH_ORDER {
        Ok(BOUNDED_SEARCH_SIZE)
    } else {
        Err(Error::TooLarge {
            what: "exact invariant search",
            limit: MAX_SEARCH_ORDER,
            order,
        })
    }
}

/// Smallest set containing `forced` whose closure (or hull) is `V`. Sizes
/// ascend from `lower`; within a size, sets are tried in lexicographic order
/// so the witness is the lexicographically least minimum set.
fn minimum_set(
    table: &IntervalTable,
    forced: &VertexSet,
    lower: usize,
    max_size: usize,
    goal: Goal,
) -> Result<InvariantResult> {
    let n = table.order();
    let forced_list = forced.to_vec();
    let free: Vec<usize> = forced.complement().to_vec();
    let mut explored = 0u64;
    let start = lower.max(forced_list.len());

    for k in start..=max_size.min(n) {
        let extra = k - forced_list.len();
        let mut found = None;
        for_each_combination(free.len(), extra, |pick| {
            explored += 1;
            let mut members = forced_list.clone();
            members.extend(pick.iter().map(|&i| free[i]));
            members.sort_unstable();
            let ok = match goal {
                Goal::Closure => table.covers(&members),
                Goal::Hull => {
                    let seed = VertexSet::from_indices(n, members.iter().copied());
                    table.hull(&seed).hull().is_full()
                }
            };
            if ok {
                found = Some(members);
            }
            ok
        });
        if let Some(members) = found {
            return Ok(InvariantResult {
                value: k,
                witness: VertexSet::from_indices(n, members),
                explored,
            });
        }
    }
    Err(Error::SearchExhausted {
        max_size: max_size.min(n),
        order: n,
    })
}

/// Calls `visit` on each `k`-subset of `0..n` in lexicographic order until
/// it returns `true`.
pub(crate) fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize]) -> bool) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if visit(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn search(g: &Graph, kind: IntervalKind, goal: Goal, max_size: Option<usize>) -> Result<InvariantResult> {
    let order = g.order();
    let cap = match max_size {
        Some(m) => m.min(max_size_for(order).unwrap_or(m)),
        None => max_size_for(order)?,
    };
    let table = IntervalTable::new(g, kind)?;
    // vertices that every valid set must contain
    let forced = match kind {
        IntervalKind::Toll => table.extreme_vertices(&g.simplicial_vertices()),
        // extreme vertices of geodesic convexity are the simplicial ones
        IntervalKind::Geodesic | IntervalKind::Monophonic => g.simplicial_vertices(),
    };
    minimum_set(&table, &forced, order.min(2), cap, goal)
}

/// Minimum size of a set whose toll closure is `V`.
pub fn toll_number(g: &Graph) -> Result<InvariantResult> {
    search(g, IntervalKind::Toll, Goal::Closure, None)
}

/// Toll number with an explicit cap on the set size.
pub fn toll_number_bounded(g: &Graph, max_size: usize) -> Result<InvariantResult> {
    search(g, IntervalKind::Toll, Goal::Closure, Some(max_size))
}

/// Minimum size of a set whose toll convex hull is `V`.
pub fn t_hull_number(g: &Graph) -> Result<InvariantResult> {
    search(g, IntervalKind::Toll, Goal::Hull, None)
}

pub fn t_hull_number_bounded(g: &Graph, max_size: usize) -> Result<InvariantResult> {
    search(g, IntervalKind::Toll, Goal::Hull, Some(max_size))
}

pub fn geodetic_number(g: &Graph) -> Result<InvariantResult> {
    search(g, IntervalKind::Geodesic, Goal::Closure, None)
}

pub fn hull_number(g: &Graph) -> Result<InvariantResult> {
    search(g, IntervalKind::Geodesic, Goal::Hull, None)
}

/// True iff some neighbor `w` of `v` has `N[w] ⊆ N[v]`.
pub fn has_dominated_neighbor(g: &Graph, v: usize) -> bool {
    let closed = g.closed_row(v);
    g.row(v).iter().any(|w| g.closed_row(w).is_subset(&closed))
}

/// The lexicographically first pair of distinct non-adjacent vertices,
/// neither of which has a dominated neighbor.
pub fn dominance_free_pair(g: &Graph) -> Option<(usize, usize)> {
    let n = g.order();
    let free: Vec<bool> = (0..n).map(|v| !has_dominated_neighbor(g, v)).collect();
    for a in (0..n).filter(|&a| free[a]) {
        for b in (a + 1..n).filter(|&b| free[b]) {
            if !g.adjacent(a, b) {
                return Some((a, b));
            }
        }
    }
    None
}

/// For a strong product of connected non-complete graphs, a pair of product
/// vertices whose presence is equivalent to toll number 2.
pub fn tn2_witness_predicate(p: &ProductGraph) -> Option<(usize, usize)> {
    dominance_free_pair(p.graph())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};
    use crate::product::strong_product;

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_indices(n, v.iter().copied())
    }

    #[test]
    fn combinations_in_lex_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(
            seen,
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        let mut count = 0;
        for_each_combination(3, 0, |_| {
            count += 1;
            false
        });
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| panic!("no 3-subsets of a 2-set"));
    }

    #[test]
    fn path_invariants() {
        let p4 = family(Family::Path, 4).unwrap();
        let tn = toll_number(&p4).unwrap();
        assert_eq!((tn.value, tn.witness.clone()), (2, set(4, &[0, 3])));
        assert_eq!(t_hull_number(&p4).unwrap().value, 2);
        assert_eq!(geodetic_number(&p4).unwrap().value, 2);
        assert_eq!(hull_number(&p4).unwrap().value, 2);
    }

    #[test]
    fn small_graph_invariants() {
        let k2 = family(Family::Complete, 2).unwrap();
        assert_eq!(t_hull_number(&k2).unwrap().value, 2);
        let c4 = family(Family::Cycle, 4).unwrap();
        assert_eq!(geodetic_number(&c4).unwrap().value, 2);
        let k4 = family(Family::Complete, 4).unwrap();
        assert_eq!(geodetic_number(&k4).unwrap().value, 4);
        assert_eq!(toll_number(&k4).unwrap().value, 4);
    }

    #[test]
    fn product_toll_numbers() {
        let paw = family(Family::PawPendant, 4).unwrap();
        let square = strong_product(&paw, &paw);
        let tn = toll_number(square.graph()).unwrap();
        assert_eq!(tn.value, 3);
        assert_eq!(t_hull_number(square.graph()).unwrap().value, 2);

        let p3 = family(Family::Path, 3).unwrap();
        let grid = strong_product(&p3, &p3);
        assert_eq!(toll_number(grid.graph()).unwrap().value, 2);
    }

    #[test]
    fn predicate_examples() {
        let p3 = family(Family::Path, 3).unwrap();
        let grid = strong_product(&p3, &p3);
        let g = grid.graph();
        let (a, b) = (grid.index(0, 0), grid.index(2, 2));
        assert!(!has_dominated_neighbor(g, a) && !has_dominated_neighbor(g, b));
        assert!(tn2_witness_predicate(&grid).is_some());

        let paw = family(Family::PawPendant, 4).unwrap();
        assert_eq!(tn2_witness_predicate(&strong_product(&paw, &paw)), None);

        let p4 = family(Family::Path, 4).unwrap();
        let p44 = strong_product(&p4, &p4);
        assert!(!has_dominated_neighbor(p44.graph(), p44.index(0, 0)));
        assert!(!has_dominated_neighbor(p44.graph(), p44.index(3, 3)));
    }

    #[test]
    fn large_graphs_refused() {
        let c = family(Family::Cycle, 31).unwrap();
        assert!(matches!(toll_number(&c), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn disconnected_refused() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(toll_number(&g), Err(Error::Disconnected));
    }
}
