//! Toll convexity: tolled walks, toll intervals, closures, hulls and extreme
//! vertices. Geodesic and monophonic intervals live here as well since they
//! are sub-intervals of the toll interval and share the closure machinery.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A vertex sequence. Adjacency is checked when the walk is validated
/// against a graph, not at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Walk {
    vertices: Vec<usize>,
}

impl Walk {
    pub fn new(vertices: Vec<usize>) -> Walk {
        Walk { vertices }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }
}

/// A tolled walk between `u` and `v` passing through `member`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TollCertificate {
    pub u: usize,
    pub v: usize,
    pub member: usize,
    pub walk: Walk,
}

/// Decides whether `walk` is a tolled `u,v`-walk in `g`.
///
/// Conventions: the only tolled walk from a vertex to itself is that vertex;
/// for an edge `uv` the walk `u, v` is tolled. Otherwise the walk is
/// `u, w1, ..., wk, v` with `k >= 1`, consecutive vertices adjacent, `u`
/// adjacent to `wi` only for `i = 1` and `v` adjacent to `wi` only for `i = k`.
pub fn is_tolled_walk(g: &Graph, walk: &Walk, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let w = walk.vertices();
    for &x in w {
        g.check_vertex(x)?;
    }
    if w.first() != Some(&u) || w.last() != Some(&v) {
        return Err(Error::WalkEndpoints {
            expected_start: u,
            expected_end: v,
        });
    }
    if u == v {
        return Ok(w.len() == 1);
    }
    if w.windows(2).any(|p| !g.adjacent(p[0], p[1])) {
        return Ok(false);
    }
    if g.adjacent(u, v) {
        return Ok(w.len() == 2);
    }
    let inner = &w[1..w.len() - 1];
    let k = inner.len();
    if k == 0 {
        return Ok(false);
    }
    Ok(inner
        .iter()
        .enumerate()
        .all(|(i, &x)| g.adjacent(u, x) == (i == 0) && g.adjacent(v, x) == (i == k - 1)))
}

fn check_pair(g: &Graph, u: usize, v: usize) -> Result<()> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    g.require_connected()
}

/// The toll interval `T(u, v)`: every vertex on some tolled `u,v`-walk.
pub fn toll_interval(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(toll_interval_unchecked(g, u, v))
}

/// Toll interval by neighborhood decomposition.
///
/// For non-adjacent `u != v`, a tolled walk `u, w1, ..., wk, v` either has
/// `k = 1` with `w1` a common neighbor, or has `w1` in `N(u) - N(v)`, `wk` in
/// `N(v) - N(u)` and every other inner vertex in `F = V - N[u] - N[v]`.
/// Inner segments may revisit vertices, so a component of `G[F]` that
/// touches both sides contributes all of its vertices.
pub(crate) fn toll_interval_unchecked(g: &Graph, u: usize, v: usize) -> VertexSet {
    let n = g.order();
    let mut members = VertexSet::from_indices(n, [u, v]);
    if u == v || g.adjacent(u, v) {
        return members;
    }
    let nu = g.row(u);
    let nv = g.row(v);
    members.union_with(&nu.intersection(nv));

    let u_side = nu.difference(nv);
    let v_side = nv.difference(nu);
    let mut free = nu.union(nv).complement();
    free.remove(u);
    free.remove(v);

    for a in &u_side {
        let direct = g.row(a).intersection(&v_side);
        if !direct.is_empty() {
            members.insert(a);
            members.union_with(&direct);
        }
    }

    let mut unvisited = free.clone();
    while let Some(start) = unvisited.first() {
        let component = g.reachable_within(start, &free);
        unvisited.difference_with(&component);
        let mut boundary = VertexSet::empty(n);
        for x in &component {
            boundary.union_with(g.row(x));
        }
        let touch_u = boundary.intersection(&u_side);
        let touch_v = boundary.intersection(&v_side);
        if !touch_u.is_empty() && !touch_v.is_empty() {
            members.union_with(&component);
            members.union_with(&touch_u);
            members.union_with(&touch_v);
        }
    }
    members
}

/// Reference toll interval computed straight from the walk definition.
///
/// Inner vertices of a tolled walk form a walk in the directed state graph
/// where a step `x -> y` is allowed iff `xy` is an edge, `x` is not a
/// neighbor of `v` (only the last inner vertex may be), and `y` is not a
/// neighbor of `u` (only the first inner vertex may be). Inner walks start in
/// `N(u)` and end in `N(v)`; a vertex is a member iff it is reachable from a
/// start state and can reach an end state.
pub fn toll_interval_oracle(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    Ok(oracle_unchecked(g, u, v))
}

fn oracle_unchecked(g: &Graph, u: usize, v: usize) -> VertexSet {
    let n = g.order();
    if u == v {
        return VertexSet::singleton(n, u);
    }
    if g.adjacent(u, v) {
        return VertexSet::from_indices(n, [u, v]);
    }
    let adj: Vec<Vec<usize>> = (0..n).map(|x| g.row(x).to_vec()).collect();
    let near_u: Vec<bool> = (0..n).map(|x| g.adjacent(u, x)).collect();
    let near_v: Vec<bool> = (0..n).map(|x| g.adjacent(v, x)).collect();
    let step = |x: usize, y: usize| !near_v[x] && !near_u[y];

    let forward = state_search(n, (0..n).filter(|&x| near_u[x]), |x| {
        adj[x].iter().copied().filter(move |&y| step(x, y)).collect()
    });
    let backward = state_search(n, (0..n).filter(|&x| near_v[x]), |y| {
        adj[y].iter().copied().filter(move |&x| step(x, y)).collect()
    });
    let mut out = VertexSet::from_indices(n, [u, v]);
    for x in 0..n {
        if forward[x] && backward[x] {
            out.insert(x);
        }
    }
    out
}

fn state_search(n: usize, starts: impl Iterator<Item = usize>, next: impl Fn(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for s in starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        for y in next(x) {
            if !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// A tolled `u,v`-walk through `member`, or `None` if `member` is not in
/// `T(u, v)`.
pub fn toll_certificate(g: &Graph, u: usize, v: usize, member: usize) -> Result<Option<TollCertificate>> {
    check_pair(g, u, v)?;
    g.check_vertex(member)?;
    let cert = |walk: Vec<usize>| TollCertificate {
        u,
        v,
        member,
        walk: Walk::new(walk),
    };
    if u == v {
        return Ok((member == u).then(|| cert(vec![u])));
    }
    if g.adjacent(u, v) {
        return Ok((member == u || member == v).then(|| cert(vec![u, v])));
    }
    let n = g.order();
    let step = |x: usize, y: usize| g.adjacent(x, y) && !g.adjacent(v, x) && !g.adjacent(u, y);

    // forward: shortest inner walk from N(u) to member
    let starts: Vec<usize> = g.row(u).to_vec();
    let endpoint = member == u || member == v;
    let goal = |x: usize| if endpoint { g.adjacent(v, x) } else { x == member };
    let Some(head) = shortest_state_path(n, &starts, goal, step) else {
        return Ok(None);
    };
    let last = *head.last().unwrap();
    let Some(tail) = shortest_state_path(n, &[last], |x| g.adjacent(v, x), step) else {
        return Ok(None);
    };
    let mut walk = vec![u];
    walk.extend(&head);
    walk.extend(&tail[1..]);
    walk.push(v);
    Ok(Some(cert(walk)))
}

fn shortest_state_path(
    n: usize,
    starts: &[usize],
    is_goal: impl Fn(usize) -> bool,
    step: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for &s in starts {
        if !seen[s] {
            seen[s] = true;
            queue.push_back(s);
        }
    }
    while let Some(x) = queue.pop_front() {
        if is_goal(x) {
            let mut path = vec![x];
            let mut cur = x;
            while parent[cur] != usize::MAX {
                cur = parent[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for y in 0..n {
            if !seen[y] && step(x, y) {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Geodesic interval `I(u, v)`: vertices on some shortest `u,v`-path.
pub fn geodesic_interval(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    let du = g.bfs_from(u);
    let dv = g.bfs_from(v);
    Ok(geodesic_from_rows(&du, &dv, v))
}

fn geodesic_from_rows(du: &[Option<usize>], dv: &[Option<usize>], v: usize) -> VertexSet {
    let n = du.len();
    let d = du[v].expect("connected");
    VertexSet::from_indices(n, (0..n).filter(|&x| du[x].unwrap() + dv[x].unwrap() == d))
}

/// Largest order accepted by the induced-path enumeration.
pub const MONOPHONIC_MAX_ORDER: usize = 10;

/// Monophonic interval `M(u, v)`: vertices on some induced `u,v`-path.
/// Exponential; restricted to graphs with at most
/// [`MONOPHONIC_MAX_ORDER`] vertices.
pub fn monophonic_interval(g: &Graph, u: usize, v: usize) -> Result<VertexSet> {
    check_pair(g, u, v)?;
    if g.order() > MONOPHONIC_MAX_ORDER {
        return Err(Error::TooLarge {
            what: "monophonic interval",
            limit: MONOPHONIC_MAX_ORDER,
            order: g.order(),
        });
    }
    let n = g.order();
    let mut out = VertexSet::singleton(n, u);
    if u == v {
        return Ok(out);
    }
    let mut path = vec![u];
    let mut on_path = VertexSet::singleton(n, u);
    induced_paths(g, v, &mut path, &mut on_path, &mut out);
    Ok(out)
}

fn induced_paths(g: &Graph, target: usize, path: &mut Vec<usize>, on_path: &mut VertexSet, out: &mut VertexSet) {
    let last = *path.last().unwrap();
    if g.adjacent(last, target) {
        out.union_with(on_path);
        out.insert(target);
        return;
    }
    // neighbours of everything on the path except `last` are blocked
    let mut blocked = on_path.clone();
    for &p in &path[..path.len() - 1] {
        blocked.union_with(g.row(p));
    }
    for w in g.row(last).difference(&blocked).iter() {
        path.push(w);
        on_path.insert(w);
        induced_paths(g, target, path, on_path, out);
        on_path.remove(w);
        path.pop();
    }
}

/// Iterated closures `S = T^0[S] ⊂ T^1[S] ⊂ ...` up to the fixpoint.
/// Stages strictly increase; the last stage is convex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullTrace {
    pub stages: Vec<VertexSet>,
}

impl HullTrace {
    pub fn hull(&self) -> &VertexSet {
        self.stages.last().expect("at least the seed stage")
    }

    pub fn steps(&self) -> usize {
        self.stages.len() - 1
    }
}

/// Which interval function an [`IntervalTable`] tabulates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntervalKind {
    Toll,
    Geodesic,
    Monophonic,
}

/// All pairwise intervals of one graph, computed once. Closures, hulls and
/// convexity tests are unions over this table.
#[derive(Clone, Debug)]
pub struct IntervalTable {
    order: usize,
    kind: IntervalKind,
    intervals: Vec<VertexSet>,
}

impl IntervalTable {
    pub fn new(g: &Graph, kind: IntervalKind) -> Result<IntervalTable> {
        g.require_connected()?;
        let n = g.order();
        let mut intervals: Vec<VertexSet> = Vec::with_capacity(n * n);
        match kind {
            IntervalKind::Toll => {
                for u in 0..n {
                    for v in 0..n {
                        intervals.push(if v < u {
                            intervals[v * n + u].clone()
                        } else {
                            toll_interval_unchecked(g, u, v)
                        });
                    }
                }
            }
            IntervalKind::Geodesic => {
                let rows: Vec<_> = (0..n).map(|s| g.bfs_from(s)).collect();
                for u in 0..n {
                    for v in 0..n {
                        intervals.push(geodesic_from_rows(&rows[u], &rows[v], v));
                    }
                }
            }
            IntervalKind::Monophonic => {
                for u in 0..n {
                    for v in 0..n {
                        intervals.push(if v < u {
                            intervals[v * n + u].clone()
                        } else {
                            monophonic_interval(g, u, v)?
                        });
                    }
                }
            }
        }
        Ok(IntervalTable {
            order: n,
            kind,
            intervals,
        })
    }

    pub fn toll(g: &Graph) -> Result<IntervalTable> {
        Self::new(g, IntervalKind::Toll)
    }

    pub fn geodesic(g: &Graph) -> Result<IntervalTable> {
        Self::new(g, IntervalKind::Geodesic)
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn interval(&self, u: usize, v: usize) -> &VertexSet {
        &self.intervals[u * self.order + v]
    }

    /// Union of the intervals between all pairs of `s` (including `u = v`).
    pub fn closure(&self, s: &VertexSet) -> VertexSet {
        let members = s.to_vec();
        let mut out = s.clone();
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                out.union_with(self.interval(u, v));
            }
        }
        out
    }

    /// True iff the closure of the vertices in `set` is everything.
    pub fn covers(&self, set: &[usize]) -> bool {
        let mut out = VertexSet::from_indices(self.order, set.iter().copied());
        for (i, &u) in set.iter().enumerate() {
            for &v in &set[i + 1..] {
                out.union_with(self.interval(u, v));
            }
            if out.is_full() {
                return true;
            }
        }
        out.is_full()
    }

    pub fn is_convex(&self, s: &VertexSet) -> bool {
        self.closure(s) == *s
    }

    pub fn hull(&self, s: &VertexSet) -> HullTrace {
        let mut stages = vec![s.clone()];
        loop {
            let next = self.closure(stages.last().unwrap());
            if next == *stages.last().unwrap() {
                return HullTrace { stages };
            }
            stages.push(next);
        }
    }

    /// Vertices `x` lying in no interval between two vertices other than `x`.
    pub fn extreme_vertices(&self, candidates: &VertexSet) -> VertexSet {
        let n = self.order;
        let mut out = VertexSet::empty(n);
        'cand: for x in candidates {
            for a in 0..n {
                for b in a + 1..n {
                    if a != x && b != x && self.interval(a, b).contains(x) {
                        continue 'cand;
                    }
                }
            }
            out.insert(x);
        }
        out
    }
}

/// `T[S]`: the union of toll intervals over all pairs of `s`.
pub fn toll_closure(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    g.require_connected()?;
    let members = s.to_vec();
    let mut out = s.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            out.union_with(&toll_interval_unchecked(g, u, v));
        }
    }
    Ok(out)
}

pub fn is_toll_convex(g: &Graph, s: &VertexSet) -> Result<bool> {
    Ok(toll_closure(g, s)? == *s)
}

pub fn toll_hull(g: &Graph, s: &VertexSet) -> Result<HullTrace> {
    Ok(IntervalTable::toll(g)?.hull(s))
}

/// True iff `V - {v}` is toll convex.
pub fn is_extreme_vertex(g: &Graph, v: usize) -> Result<bool> {
    g.check_vertex(v)?;
    g.require_connected()?;
    if !g.is_simplicial(v) {
        return Ok(false);
    }
    let n = g.order();
    for a in (0..n).filter(|&a| a != v) {
        for b in (a + 1..n).filter(|&b| b != v) {
            if toll_interval_unchecked(g, a, b).contains(v) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Ext(G)`. Only simplicial vertices are tested, since every extreme vertex
/// is simplicial.
pub fn extreme_vertices(g: &Graph) -> Result<VertexSet> {
    let table = IntervalTable::toll(g)?;
    Ok(table.extreme_vertices(&g.simplicial_vertices()))
}
