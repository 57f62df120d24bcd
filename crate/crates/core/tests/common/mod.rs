//! Reference implementations shared by the integration test targets. They
//! follow the definitions literally and use nothing from the library beyond
//! `Graph` construction and adjacency.

#![allow(dead_code)]

use std::collections::BTreeSet;

use tollkit::Graph;

/// Every vertex on some tolled walk of at most `max_len` edges, found by
/// enumerating walks vertex by vertex and checking the three walk clauses
/// literally.
pub fn brute_force_toll_interval(g: &Graph, u: usize, v: usize, max_len: usize) -> BTreeSet<usize> {
    if u == v {
        return BTreeSet::from([u]);
    }
    if g.adjacent(u, v) {
        return BTreeSet::from([u, v]);
    }
    let mut out = BTreeSet::new();
    let mut walk = vec![u];
    fn extend(g: &Graph, u: usize, v: usize, walk: &mut Vec<usize>, max_len: usize, out: &mut BTreeSet<usize>) {
        let n = g.order();
        let last = *walk.last().unwrap();
        // close the walk when the last inner vertex is the first one touching v
        if walk.len() >= 2 && g.adjacent(last, v) {
            let inner = &walk[1..];
            let k = inner.len();
            let ok = inner
                .iter()
                .enumerate()
                .all(|(i, &w)| g.adjacent(u, w) == (i == 0) && g.adjacent(v, w) == (i == k - 1));
            if ok {
                out.extend(walk.iter().copied());
                out.insert(v);
            }
            return;
        }
        if walk.len() > max_len {
            return;
        }
        for w in 0..n {
            if g.adjacent(last, w) {
                walk.push(w);
                extend(g, u, v, walk, max_len, out);
                walk.pop();
            }
        }
    }
    extend(g, u, v, &mut walk, max_len, &mut out);
    out
}

/// Number of isomorphism classes among connected graphs on `n` vertices,
/// by full permutation canonical form over every edge mask.
pub fn brute_force_connected_count(n: usize, skip_complete: bool) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let g = Graph::new(n, &edges).unwrap();
        if !g.is_connected() || (skip_complete && g.is_complete()) {
            continue;
        }
        let canon = perms
            .iter()
            .map(|p| {
                let mut e: Vec<_> = edges.iter().map(|&(a, b)| (p[a].min(p[b]), p[a].max(p[b]))).collect();
                e.sort();
                e
            })
            .min()
            .unwrap();
        classes.insert(canon);
    }
    classes.len()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}
