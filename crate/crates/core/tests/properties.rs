use proptest::prelude::*;

use tollkit::harness::{replay, run_check, sweep, Check, Counterexample, Outcome, VerificationReport};
use tollkit::{
    cartesian_product, emit_edge_list, emit_graph6, enumerate_connected, extreme_vertices, is_tolled_walk,
    lexicographic_product, parse_edge_list, parse_graph6, strong_product, toll_certificate, toll_closure, toll_hull,
    toll_interval, toll_interval_oracle, Corpus, Execution, Graph, IntervalTable, VertexSet,
};

/// Graph on `n` vertices from a bit per vertex pair.
fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, &edges).unwrap()
}

fn any_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

/// Connected graphs: a random tree on parents `p[i] < i` plus random extra edges.
fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        let parents: Vec<_> = (1..n).map(|i| 0..i).collect();
        (
            parents,
            proptest::collection::vec(prop::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(move |(parents, bits)| {
                let mut edges: Vec<_> = parents.iter().enumerate().map(|(i, &p)| (p, i + 1)).collect();
                edges.extend(graph_from_bits(n, &bits).edges());
                edges.sort_unstable();
                edges.dedup();
                Graph::new(n, &edges).unwrap()
            })
    })
}

fn subset(n: usize, mask: u64) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn fast_interval_matches_oracle(g in connected_graph(2, 12)) {
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                let t = toll_interval(&g, u, v).unwrap();
                prop_assert_eq!(&t, &toll_interval_oracle(&g, u, v).unwrap());
                prop_assert_eq!(&t, &toll_interval(&g, v, u).unwrap());
                prop_assert!(t.contains(u) && t.contains(v));
            }
        }
    }

    #[test]
    fn certificates_witness_exactly_the_members(g in connected_graph(2, 9)) {
        let n = g.order();
        for u in 0..n {
            for v in 0..n {
                let t = toll_interval(&g, u, v).unwrap();
                for x in 0..n {
                    match toll_certificate(&g, u, v, x).unwrap() {
                        Some(c) => {
                            prop_assert!(t.contains(x));
                            prop_assert!(c.walk.contains(x));
                            prop_assert!(is_tolled_walk(&g, &c.walk, u, v).unwrap());
                        }
                        None => prop_assert!(!t.contains(x)),
                    }
                }
            }
        }
    }

    #[test]
    fn simplicial_matches_pairwise_adjacency(g in any_graph(9)) {
        for v in g.vertices().iter() {
            let nbrs = g.neighbors(v).unwrap().to_vec();
            let brute = nbrs.iter().all(|&a| nbrs.iter().all(|&b| a == b || g.adjacent(a, b)));
            prop_assert_eq!(g.is_simplicial(v), brute);
        }
    }

    #[test]
    fn product_edge_counts(g in any_graph(5), h in any_graph(5)) {
        let (ng, nh, eg, eh) = (g.order(), h.order(), g.size(), h.size());
        prop_assert_eq!(strong_product(&g, &h).graph().size(), eg * nh + ng * eh + 2 * eg * eh);
        prop_assert_eq!(cartesian_product(&g, &h).graph().size(), eg * nh + ng * eh);
        prop_assert_eq!(lexicographic_product(&g, &h).graph().size(), eg * nh * nh + ng * eh);
    }

    #[test]
    fn strong_product_commutes_under_coordinate_swap(g in any_graph(5), h in any_graph(5)) {
        let gh = strong_product(&g, &h);
        let hg = strong_product(&h, &g);
        let mut swapped: Vec<_> = gh
            .graph()
            .edges()
            .into_iter()
            .map(|(a, b)| {
                let ((x1, y1), (x2, y2)) = (gh.coords(a), gh.coords(b));
                let (a, b) = (hg.index(y1, x1), hg.index(y2, x2));
                (a.min(b), a.max(b))
            })
            .collect();
        swapped.sort_unstable();
        prop_assert_eq!(swapped, hg.graph().edges());
    }

    #[test]
    fn closure_is_extensive_and_monotone(g in connected_graph(2, 10), a in any::<u64>(), b in any::<u64>()) {
        let n = g.order();
        let small = subset(n, a & b);
        let large = subset(n, a);
        let cs = toll_closure(&g, &small).unwrap();
        let cl = toll_closure(&g, &large).unwrap();
        prop_assert!(small.is_subset(&cs));
        prop_assert!(cs.is_subset(&cl));
    }

    #[test]
    fn hull_is_convex_and_idempotent(g in connected_graph(2, 10), mask in any::<u64>()) {
        let n = g.order();
        let table = IntervalTable::toll(&g).unwrap();
        let hull = toll_hull(&g, &subset(n, mask)).unwrap().hull().clone();
        prop_assert!(table.is_convex(&hull));
        let again = toll_hull(&g, &hull).unwrap();
        prop_assert_eq!(again.hull(), &hull);
    }

    #[test]
    fn extreme_vertices_are_simplicial(g in connected_graph(2, 10)) {
        for v in extreme_vertices(&g).unwrap().iter() {
            prop_assert!(g.is_simplicial(v));
        }
    }

    #[test]
    fn graph6_and_edge_list_round_trip(g in any_graph(12)) {
        prop_assert_eq!(&parse_graph6(&emit_graph6(&g)).unwrap(), &g);
        prop_assert_eq!(&parse_edge_list(&emit_edge_list(&g)).unwrap(), &g);
    }
}

#[test]
fn graph6_long_form_round_trip() {
    let n = 70;
    let edges: Vec<_> = (0..n)
        .flat_map(|u| {
            (u + 1..n)
                .filter(move |v| (u * 7 + v * 3) % 5 == 0)
                .map(move |v| (u, v))
        })
        .collect();
    let g = Graph::new(n, &edges).unwrap();
    let line = emit_graph6(&g);
    assert!(line.starts_with('~'));
    assert_eq!(parse_graph6(&line).unwrap(), g);
}

#[test]
fn some_simplicial_vertex_is_not_extreme() {
    let found = (3..=6)
        .flat_map(|n| enumerate_connected(n, false).unwrap().graphs)
        .find(|g| {
            let ext = extreme_vertices(g).unwrap();
            g.simplicial_vertices().iter().any(|v| !ext.contains(v))
        });
    let g = found.expect("a simplicial vertex inside some toll interval");
    // a pendant on the middle of a path sits on a walk that backtracks through it
    assert!(g.order() >= 5, "{g:?}");
}

fn strip_timing(mut reports: Vec<VerificationReport>) -> Vec<VerificationReport> {
    for r in &mut reports {
        r.millis = 0;
    }
    reports
}

#[test]
fn sweep_is_identical_sequential_and_parallel() {
    let corpus = tollkit::io::enumerate_connected_range(2, 4, false).unwrap();
    let seq = sweep(&corpus, &corpus, &Check::ALL, Execution::Sequential).unwrap();
    let par = sweep(&corpus, &corpus, &Check::ALL, Execution::Parallel).unwrap();
    assert_eq!(seq.len(), corpus.len() * corpus.len() * Check::ALL.len());
    assert_eq!(strip_timing(seq), strip_timing(par));
}

#[test]
fn replay_reproduces_only_real_violations() {
    let p3 = parse_graph6("Bg").unwrap();
    let mut report = run_check(Check::Covers, &p3, &p3).unwrap();
    assert_eq!(report.outcome, Outcome::Pass);
    assert!(!replay(&report).unwrap());

    // (1,1) is a common neighbor of the corners, so it is in T((0,0),(2,2))
    report.outcome = Outcome::Fail;
    let forged = |vertex| Counterexample::IntervalMembership {
        a: (0, 0),
        b: (2, 2),
        vertex,
        claims: vec![],
    };
    report.counterexample = Some(forged((1, 1)));
    assert!(!replay(&report).unwrap());

    // the interval of an adjacent pair is just the pair
    report.counterexample = Some(Counterexample::IntervalMembership {
        a: (0, 0),
        b: (0, 1),
        vertex: (2, 2),
        claims: vec![],
    });
    assert!(replay(&report).unwrap());

    report.counterexample = Some(Counterexample::ExtremeVertex { vertex: (0, 0) });
    assert!(!replay(&report).unwrap());
    report.counterexample = Some(Counterexample::NotTollSet {
        set: vec![(0, 0), (2, 2)],
    });
    assert!(!replay(&report).unwrap());
    report.counterexample = Some(Counterexample::NotTollSet {
        set: vec![(0, 0), (0, 1)],
    });
    assert!(replay(&report).unwrap());
    report.counterexample = Some(Counterexample::HullNumber { th: Some(2) });
    assert!(!replay(&report).unwrap());
}

#[test]
fn corpus_file_round_trip() {
    let corpus = enumerate_connected(5, true).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("five.g6");
    std::fs::write(&path, format!("# five vertices\n{}", corpus.to_graph6_lines())).unwrap();
    let back = Corpus::read(&path).unwrap();
    assert_eq!(back.graphs, corpus.graphs);
}
