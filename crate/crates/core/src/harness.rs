//! Executable checks of the structural results on toll convexity in strong
//! products, run on single factor pairs or swept over corpora.
//!
//! Hypotheses act as filters: an instance that does not satisfy them
//! yields a `skip` report with a reason. A mathematical failure is reported
//! as data with a replayable counterexample; only internal errors abort.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exec::{map_ordered, Execution};
use crate::graph::Graph;
use crate::io::{emit_graph6, parse_graph6, Corpus};
use crate::product::{strong_product, ProductGraph};
use crate::search::{t_hull_number_bounded, tn2_witness_predicate, toll_number_bounded};
use crate::toll::{is_extreme_vertex, IntervalTable};
use crate::vertex_set::VertexSet;

pub type Coord = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Toll-interval membership claims for product pairs whose coordinates
    /// are non-adjacent in both factors.
    Lemmas,
    /// Such intervals contain every vertex outside the two open neighborhoods.
    Covers,
    /// Strong products of non-complete graphs have no extreme vertices.
    NoExtreme,
    /// `tn ∈ {2, 3}`, the diametral triple is a toll set, and `tn = 2` iff a
    /// dominance-free non-adjacent pair exists.
    TnCharacterization,
    /// `th = 2` with the diametral pair as a t-hull set.
    Th2,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Lemmas,
        Check::Covers,
        Check::NoExtreme,
        Check::TnCharacterization,
        Check::Th2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Lemmas => "lemmas",
            Check::Covers => "covers",
            Check::NoExtreme => "no_extreme",
            Check::TnCharacterization => "tn_characterization",
            Check::Th2 => "th2",
        }
    }

    /// Parses a check name; `all` expands to every check.
    pub fn parse_list(s: &str) -> std::result::Result<Vec<Check>, String> {
        if s == "all" {
            return Ok(Check::ALL.to_vec());
        }
        s.split(',').map(|p| p.trim().parse()).collect()
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Check, String> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown check {s:?}"))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Pass,
    Fail,
    Skip,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skip => "skip",
        })
    }
}

/// The data needed to reproduce a failed check. Product vertices are given
/// as factor coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Counterexample {
    /// `vertex` was claimed to lie in `T(a, b)` but does not.
    IntervalMembership {
        a: Coord,
        b: Coord,
        vertex: Coord,
        claims: Vec<String>,
    },
    /// `vertex` is extreme in the product.
    ExtremeVertex { vertex: Coord },
    /// The toll number or the predicate disagree with the characterization.
    /// `tn` is `None` when no toll set of size at most 3 exists.
    TollNumber {
        tn: Option<usize>,
        predicate: Option<(Coord, Coord)>,
    },
    /// `set` was expected to be a toll set but is not.
    NotTollSet { set: Vec<Coord> },
    /// `th` is `None` when no t-hull set of size 2 exists.
    HullNumber { th: Option<usize> },
    /// `set` was expected to be a t-hull set but is not.
    NotHullSet { set: Vec<Coord> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem: Check,
    pub g6_left: String,
    pub g6_right: String,
    pub outcome: Outcome,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    pub millis: u64,
}

impl VerificationReport {
    /// One `key=value` line.
    pub fn to_line(&self) -> String {
        let mut line = format!(
            "theorem={} left={} right={} outcome={} millis={}",
            self.theorem, self.g6_left, self.g6_right, self.outcome, self.millis
        );
        if let Some(note) = &self.note {
            line.push_str(&format!(" note={note:?}"));
        }
        if let Some(cx) = &self.counterexample {
            line.push_str(" counterexample=");
            line.push_str(&serde_json::to_string(cx).expect("counterexample serializes"));
        }
        line
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Summary {
        let mut s = Summary::default();
        for r in reports {
            match r.outcome {
                Outcome::Pass => s.pass += 1,
                Outcome::Fail => s.fail += 1,
                Outcome::Skip => s.skip += 1,
            }
        }
        s
    }
}

/// Machine-readable form of a sweep: one JSON document.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SweepDocument {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl SweepDocument {
    pub fn new(reports: Vec<VerificationReport>) -> SweepDocument {
        let summary = Summary::of(&reports);
        SweepDocument { reports, summary }
    }
}

struct Instance<'a> {
    left: &'a Graph,
    right: &'a Graph,
    product: ProductGraph,
}

impl Instance<'_> {
    fn coord(&self, v: usize) -> Coord {
        self.product.coords(v)
    }

    fn coords(&self, s: &[usize]) -> Vec<Coord> {
        s.iter().map(|&v| self.coord(v)).collect()
    }

    /// Product pairs `a < b` whose coordinates are distinct and non-adjacent
    /// in both factors.
    fn separated_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.product.graph().order();
        let mut out = Vec::new();
        for a in 0..n {
            let (x1, y1) = self.coord(a);
            for b in a + 1..n {
                let (x2, y2) = self.coord(b);
                if x1 != x2 && y1 != y2 && !self.left.adjacent(x1, x2) && !self.right.adjacent(y1, y2) {
                    out.push((a, b));
                }
            }
        }
        out
    }
}

struct Verdict {
    outcome: Outcome,
    note: Option<String>,
    counterexample: Option<Counterexample>,
}

impl Verdict {
    fn pass(note: impl Into<String>) -> Verdict {
        Verdict {
            outcome: Outcome::Pass,
            note: Some(note.into()),
            counterexample: None,
        }
    }

    fn skip(reason: impl Into<String>) -> Verdict {
        Verdict {
            outcome: Outcome::Skip,
            note: Some(reason.into()),
            counterexample: None,
        }
    }

    fn fail(note: impl Into<String>, cx: Counterexample) -> Verdict {
        Verdict {
            outcome: Outcome::Fail,
            note: Some(note.into()),
            counterexample: Some(cx),
        }
    }
}

/// Runs one check on the strong product of `left` and `right`.
pub fn run_check(check: Check, left: &Graph, right: &Graph) -> Result<VerificationReport> {
    let start = Instant::now();
    let verdict = if !left.is_connected() || !right.is_connected() {
        Verdict::skip("disconnected factor")
    } else {
        let needs_noncomplete = matches!(check, Check::NoExtreme | Check::TnCharacterization | Check::Th2);
        if needs_noncomplete && (left.is_complete() || right.is_complete()) {
            Verdict::skip("complete factor")
        } else {
            let inst = Instance {
                left,
                right,
                product: strong_product(left, right),
            };
            match check {
                Check::Lemmas => interval_lemmas(&inst)?,
                Check::Covers => corollary_covers(&inst)?,
                Check::NoExtreme => no_extreme(&inst)?,
                Check::TnCharacterization => tn_characterization(&inst)?,
                Check::Th2 => th_two(&inst)?,
            }
        }
    };
    Ok(VerificationReport {
        theorem: check,
        g6_left: emit_graph6(left),
        g6_right: emit_graph6(right),
        outcome: verdict.outcome,
        note: verdict.note,
        counterexample: verdict.counterexample,
        millis: start.elapsed().as_millis() as u64,
    })
}

pub fn check_interval_lemmas(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    run_check(Check::Lemmas, left, right)
}

pub fn check_corollary_covers(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    run_check(Check::Covers, left, right)
}

pub fn check_no_extreme(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    run_check(Check::NoExtreme, left, right)
}

pub fn check_tn_bound_and_characterization(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    run_check(Check::TnCharacterization, left, right)
}

pub fn check_th(left: &Graph, right: &Graph) -> Result<VerificationReport> {
    run_check(Check::Th2, left, right)
}

/// Which membership claims apply to `(x, y)` for the pair `a, b`.
fn applicable_claims(in_tg: bool, in_th: bool, inner_g: bool, inner_h: bool, outside: bool) -> Vec<&'static str> {
    let mut claims = Vec::new();
    if in_tg && in_th {
        claims.push("in_both");
    }
    if !in_tg && in_th && outside {
        claims.push("right_only_outside");
    }
    if !in_tg && inner_h {
        claims.push("right_inner");
    }
    if in_tg && !in_th && outside {
        claims.push("left_only_outside");
    }
    if inner_g && !in_th {
        claims.push("left_inner");
    }
    if !in_tg && !in_th && outside {
        claims.push("neither_outside");
    }
    claims
}

fn interval_lemmas(inst: &Instance) -> Result<Verdict> {
    let pairs = inst.separated_pairs();
    if pairs.is_empty() {
        return Ok(Verdict::skip("no pair non-adjacent in both factors"));
    }
    let tg = IntervalTable::toll(inst.left)?;
    let th = IntervalTable::toll(inst.right)?;
    let tp = IntervalTable::toll(inst.product.graph())?;
    let g = inst.product.graph();
    let mut claims_checked = 0usize;
    for &(a, b) in &pairs {
        let ((x1, y1), (x2, y2)) = (inst.coord(a), inst.coord(b));
        let interval = tp.interval(a, b);
        let ig = tg.interval(x1, x2);
        let ih = th.interval(y1, y2);
        for v in 0..g.order() {
            let (x, y) = inst.coord(v);
            let in_tg = ig.contains(x);
            let in_th = ih.contains(y);
            let claims = applicable_claims(
                in_tg,
                in_th,
                in_tg && x != x1 && x != x2,
                in_th && y != y1 && y != y2,
                !g.adjacent(a, v) && !g.adjacent(b, v),
            );
            claims_checked += claims.len();
            if !claims.is_empty() && !interval.contains(v) {
                return Ok(Verdict::fail(
                    format!("interval claim {} violated", claims.join("/")),
                    Counterexample::IntervalMembership {
                        a: (x1, y1),
                        b: (x2, y2),
                        vertex: (x, y),
                        claims: claims.into_iter().map(String::from).collect(),
                    },
                ));
            }
        }
    }
    Ok(Verdict::pass(format!("{} pairs, {claims_checked} claims", pairs.len())))
}

fn corollary_covers(inst: &Instance) -> Result<Verdict> {
    let pairs = inst.separated_pairs();
    if pairs.is_empty() {
        return Ok(Verdict::skip("no pair non-adjacent in both factors"));
    }
    let g = inst.product.graph();
    let tp = IntervalTable::toll(g)?;
    for &(a, b) in &pairs {
        let mut expected = g.row(a).union(g.row(b)).complement();
        expected.difference_with(tp.interval(a, b));
        if let Some(v) = expected.first() {
            return Ok(Verdict::fail(
                "vertex outside both neighborhoods missing from the interval",
                Counterexample::IntervalMembership {
                    a: inst.coord(a),
                    b: inst.coord(b),
                    vertex: inst.coord(v),
                    claims: vec!["outside_neighborhoods".into()],
                },
            ));
        }
    }
    Ok(Verdict::pass(format!("{} pairs", pairs.len())))
}

fn no_extreme(inst: &Instance) -> Result<Verdict> {
    let g = inst.product.graph();
    let table = IntervalTable::toll(g)?;
    let ext = table.extreme_vertices(&g.vertices());
    if let Some(v) = ext.first() {
        return Ok(Verdict::fail(
            format!("{} extreme vertices", ext.len()),
            Counterexample::ExtremeVertex { vertex: inst.coord(v) },
        ));
    }
    // contrapositive of the layer argument, checked independently of the above:
    // a product vertex over a non-extreme factor vertex is never extreme
    let ext_left = IntervalTable::toll(inst.left)?.extreme_vertices(&inst.left.vertices());
    let ext_right = IntervalTable::toll(inst.right)?.extreme_vertices(&inst.right.vertices());
    for v in 0..g.order() {
        let (x, y) = inst.coord(v);
        if (!ext_left.contains(x) || !ext_right.contains(y)) && is_extreme_vertex(g, v)? {
            return Ok(Verdict::fail(
                "extreme vertex over a non-extreme factor vertex",
                Counterexample::ExtremeVertex { vertex: (x, y) },
            ));
        }
    }
    Ok(Verdict::pass(format!(
        "Ext empty; factor Ext sizes {} and {}",
        ext_left.len(),
        ext_right.len()
    )))
}

/// `{(x1,y1), (x2,y1), (x2,y2)}` from the lexicographically first diametral
/// pairs of the factors.
fn diametral_triple(inst: &Instance) -> Result<[usize; 3]> {
    let (x1, x2) = inst
        .left
        .distances()
        .first_diametral_pair()?
        .expect("non-trivial factor");
    let (y1, y2) = inst
        .right
        .distances()
        .first_diametral_pair()?
        .expect("non-trivial factor");
    let p = &inst.product;
    Ok([p.index(x1, y1), p.index(x2, y1), p.index(x2, y2)])
}

fn tn_characterization(inst: &Instance) -> Result<Verdict> {
    let g = inst.product.graph();
    let table = IntervalTable::toll(g)?;

    let triple = diametral_triple(inst)?;
    let mut sorted = triple.to_vec();
    sorted.sort_unstable();
    if !table.covers(&sorted) {
        return Ok(Verdict::fail(
            "diametral triple is not a toll set",
            Counterexample::NotTollSet {
                set: inst.coords(&triple),
            },
        ));
    }

    let tn = match toll_number_bounded(g, 3) {
        Ok(r) => Some(r.value),
        Err(crate::error::Error::SearchExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    let predicate = tn2_witness_predicate(&inst.product);
    let predicate_coords = predicate.map(|(a, b)| (inst.coord(a), inst.coord(b)));
    let consistent = matches!(tn, Some(2) | Some(3)) && (tn == Some(2)) == predicate.is_some();
    if !consistent {
        return Ok(Verdict::fail(
            format!(
                "tn={tn:?}, predicate {}",
                if predicate.is_some() { "present" } else { "absent" }
            ),
            Counterexample::TollNumber {
                tn,
                predicate: predicate_coords,
            },
        ));
    }
    if let Some((a, b)) = predicate {
        if !table.covers(&[a, b]) {
            return Ok(Verdict::fail(
                "dominance-free pair is not a toll set",
                Counterexample::NotTollSet {
                    set: inst.coords(&[a, b]),
                },
            ));
        }
    }
    Ok(Verdict::pass(format!(
        "tn={}, predicate {}",
        tn.unwrap(),
        match predicate_coords {
            Some((a, b)) => format!("{a:?}{b:?}").replace(' ', ""),
            None => "absent".into(),
        }
    )))
}

fn th_two(inst: &Instance) -> Result<Verdict> {
    let g = inst.product.graph();
    let table = IntervalTable::toll(g)?;
    let [a, _, b] = diametral_triple(inst)?;
    let seed = VertexSet::from_indices(g.order(), [a, b]);
    let trace = table.hull(&seed);
    if !trace.hull().is_full() {
        return Ok(Verdict::fail(
            "diametral pair is not a t-hull set",
            Counterexample::NotHullSet {
                set: inst.coords(&[a, b]),
            },
        ));
    }
    let th = match t_hull_number_bounded(g, 2) {
        Ok(r) => Some(r.value),
        Err(crate::error::Error::SearchExhausted { .. }) => None,
        Err(e) => return Err(e),
    };
    if th != Some(2) {
        return Ok(Verdict::fail(format!("th={th:?}"), Counterexample::HullNumber { th }));
    }
    Ok(Verdict::pass(format!(
        "th=2, diametral hull in {} steps",
        trace.steps()
    )))
}

/// Runs every check on every `(left, right)` factor pair. Reports are in
/// `left`-major, then `right`, then check order for any execution mode.
pub fn sweep(left: &Corpus, right: &Corpus, checks: &[Check], exec: Execution) -> Result<Vec<VerificationReport>> {
    let mut jobs = Vec::with_capacity(left.len() * right.len() * checks.len());
    for g in &left.graphs {
        for h in &right.graphs {
            for &c in checks {
                jobs.push((g, h, c));
            }
        }
    }
    map_ordered(&jobs, exec, |&(g, h, c)| run_check(c, g, h))
        .into_iter()
        .collect()
}

/// Re-executes the operations behind a failed report. Returns `true` iff the
/// recorded violation is reproduced; reports without a counterexample
/// return `false`.
pub fn replay(report: &VerificationReport) -> Result<bool> {
    let Some(cx) = &report.counterexample else {
        return Ok(false);
    };
    let left = parse_graph6(&report.g6_left)?;
    let right = parse_graph6(&report.g6_right)?;
    let p = strong_product(&left, &right);
    let g = p.graph();
    let idx = |(x, y): Coord| p.encode(x, y);
    Ok(match cx {
        Counterexample::IntervalMembership { a, b, vertex, .. } => {
            !crate::toll::toll_interval(g, idx(*a)?, idx(*b)?)?.contains(idx(*vertex)?)
        }
        Counterexample::ExtremeVertex { vertex } => is_extreme_vertex(g, idx(*vertex)?)?,
        Counterexample::TollNumber { tn, predicate } => {
            let now = toll_number_bounded(g, 3).ok().map(|r| r.value);
            let pred = tn2_witness_predicate(&p).map(|(a, b)| (p.coords(a), p.coords(b)));
            now == *tn
                && pred == *predicate
                && !(matches!(now, Some(2) | Some(3)) && (now == Some(2)) == pred.is_some())
        }
        Counterexample::NotTollSet { set } => {
            let mut members = set.iter().map(|&c| idx(c)).collect::<Result<Vec<_>>>()?;
            members.sort_unstable();
            !IntervalTable::toll(g)?.covers(&members)
        }
        Counterexample::HullNumber { th } => {
            let now = t_hull_number_bounded(g, 2).ok().map(|r| r.value);
            now == *th && now != Some(2)
        }
        Counterexample::NotHullSet { set } => {
            let members = set.iter().map(|&c| idx(c)).collect::<Result<Vec<_>>>()?;
            let seed = VertexSet::from_indices(g.order(), members);
            !IntervalTable::toll(g)?.hull(&seed).hull().is_full()
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};

    fn fam(kind: Family, n: usize) -> Graph {
        family(kind, n).unwrap()
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(c.name().parse::<Check>().unwrap(), c);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(json, format!("\"{}\"", c.name()));
        }
        assert_eq!(Check::parse_list("all").unwrap().len(), 5);
        assert_eq!(
            Check::parse_list("th2,covers").unwrap(),
            vec![Check::Th2, Check::Covers]
        );
        assert!(Check::parse_list("bogus").is_err());
    }

    #[test]
    fn lemma_examples() {
        let p3 = fam(Family::Path, 3);
        assert_eq!(check_interval_lemmas(&p3, &p3).unwrap().outcome, Outcome::Pass);
        let paw = fam(Family::PawPendant, 4);
        assert_eq!(check_interval_lemmas(&paw, &paw).unwrap().outcome, Outcome::Pass);
        let r = check_interval_lemmas(&fam(Family::Path, 2), &p3).unwrap();
        assert_eq!(r.outcome, Outcome::Skip);
    }

    #[test]
    fn covers_examples() {
        let p3 = fam(Family::Path, 3);
        assert_eq!(check_corollary_covers(&p3, &p3).unwrap().outcome, Outcome::Pass);
        let c5 = fam(Family::Cycle, 5);
        assert_eq!(
            check_corollary_covers(&c5, &fam(Family::Path, 4)).unwrap().outcome,
            Outcome::Pass
        );
        let k3 = fam(Family::Complete, 3);
        assert_eq!(check_corollary_covers(&k3, &k3).unwrap().outcome, Outcome::Skip);
    }

    #[test]
    fn no_extreme_examples() {
        let paw = fam(Family::PawPendant, 4);
        assert_eq!(check_no_extreme(&paw, &paw).unwrap().outcome, Outcome::Pass);
        let p3 = fam(Family::Path, 3);
        assert_eq!(check_no_extreme(&p3, &p3).unwrap().outcome, Outcome::Pass);
        let r = check_no_extreme(&fam(Family::Complete, 3), &p3).unwrap();
        assert_eq!(r.outcome, Outcome::Skip);
        assert_eq!(r.note.as_deref(), Some("complete factor"));
    }

    #[test]
    fn tn_examples() {
        let p3 = fam(Family::Path, 3);
        let r = check_tn_bound_and_characterization(&p3, &p3).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert!(r.note.unwrap().starts_with("tn=2"));

        let paw = fam(Family::PawPendant, 4);
        let r = check_tn_bound_and_characterization(&paw, &paw).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
        assert_eq!(r.note.as_deref(), Some("tn=3, predicate absent"));

        let r = check_tn_bound_and_characterization(&fam(Family::Path, 4), &fam(Family::Cycle, 5)).unwrap();
        assert_eq!(r.outcome, Outcome::Pass);
    }

    #[test]
    fn th_examples() {
        let paw = fam(Family::PawPendant, 4);
        assert_eq!(check_th(&paw, &paw).unwrap().outcome, Outcome::Pass);
        let p3 = fam(Family::Path, 3);
        assert_eq!(check_th(&p3, &p3).unwrap().outcome, Outcome::Pass);
        assert_eq!(check_th(&fam(Family::Cycle, 4), &p3).unwrap().outcome, Outcome::Pass);
    }

    #[test]
    fn disconnected_factor_is_skipped() {
        let g = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let r = check_th(&g, &fam(Family::Path, 3)).unwrap();
        assert_eq!(r.outcome, Outcome::Skip);
        assert_eq!(r.note.as_deref(), Some("disconnected factor"));
    }

    #[test]
    fn empty_sweep() {
        let empty = Corpus::new(vec![], "empty");
        let other = Corpus::new(vec![fam(Family::Path, 3)], "p3");
        assert!(sweep(&empty, &other, &Check::ALL, Execution::Sequential)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn forged_counterexamples_do_not_replay() {
        let p3 = fam(Family::Path, 3);
        let mut r = check_corollary_covers(&p3, &p3).unwrap();
        r.outcome = Outcome::Fail;
        r.counterexample = Some(Counterexample::IntervalMembership {
            a: (0, 0),
            b: (2, 2),
            vertex: (1, 1),
            claims: vec!["in_both".into()],
        });
        assert!(!replay(&r).unwrap());
        r.counterexample = Some(Counterexample::NotTollSet {
            set: vec![(0, 0), (0, 1)],
        });
        assert!(replay(&r).unwrap());
    }
}
