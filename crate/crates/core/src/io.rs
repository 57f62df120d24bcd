//! graph6 and edge-list formats, corpus files, and exhaustive enumeration of
//! small connected graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

const G6_HEADER: &str = ">>graph6<<";

/// Decodes one graph6 line. Accepts the short header (n <= 62) and both long
/// forms, with or without the `>>graph6<<` prefix.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let bad = |msg: &str| Error::Graph6(format!("{msg} in {line:?}"));

    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b:#04x} outside the printable range")));
    }
    let (n, body) = match bytes {
        [] => return Err(bad("empty line")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(bad("truncated 36-bit header"));
            }
            (decode_big_endian(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(bad("truncated 18-bit header"));
            }
            (decode_big_endian(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let bits = n * (n - 1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(bad(&format!("truncated adjacency: {} of {expected} bytes", body.len())));
    }
    if body.len() > expected {
        return Err(bad("trailing bytes after adjacency"));
    }

    let mut rows = vec![VertexSet::empty(n); n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = body[k / 6] - 63;
            if chunk & (1 << (5 - k % 6)) != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 && (body[k / 6] - 63) & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Ok(Graph::from_rows(rows))
}

fn decode_big_endian(chunks: &[u8]) -> usize {
    chunks.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize)
}

/// Encodes a graph as one graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.adjacent(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `n` followed by whitespace-separated `u v` pairs.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text.split_whitespace();
    let n: usize = tokens
        .next()
        .ok_or_else(|| Error::EdgeList("missing vertex count".into()))?
        .parse()
        .map_err(|e| Error::EdgeList(format!("vertex count: {e}")))?;
    let values = tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|e| Error::EdgeList(format!("token {t:?}: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if values.len() % 2 != 0 {
        return Err(Error::EdgeList("odd number of endpoint tokens".into()));
    }
    let edges: Vec<_> = values.chunks(2).map(|p| (p[0], p[1])).collect();
    Graph::new(n, &edges)
}

/// Vertex count on the first line, then one sorted `u v` pair per line.
pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = g.order().to_string();
    for (u, v) in g.edges() {
        write!(out, "\n{u} {v}").unwrap();
    }
    out
}

/// An ordered list of graphs plus a description of where it came from.
#[derive(Clone, Debug)]
pub struct Corpus {
    pub graphs: Vec<Graph>,
    pub source: String,
}

impl Corpus {
    pub fn new(graphs: Vec<Graph>, source: impl Into<String>) -> Corpus {
        Corpus {
            graphs,
            source: source.into(),
        }
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    /// One graph6 line per graph; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, source: impl Into<String>) -> Result<Corpus> {
        let graphs = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(parse_graph6)
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus::new(graphs, source))
    }

    pub fn read(path: &Path) -> Result<Corpus> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Corpus::parse(&text, path.display().to_string())
    }

    pub fn to_graph6_lines(&self) -> String {
        let mut out = String::new();
        for g in &self.graphs {
            out.push_str(&emit_graph6(g));
            out.push('\n');
        }
        out
    }

    pub fn concat(corpora: impl IntoIterator<Item = Corpus>) -> Corpus {
        let mut graphs = Vec::new();
        let mut sources = Vec::new();
        for c in corpora {
            graphs.extend(c.graphs);
            sources.push(c.source);
        }
        Corpus::new(graphs, sources.join("+"))
    }
}

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// All connected graphs on `n` vertices up to isomorphism, ordered by
/// canonical code. Supports `2 <= n <= 7`.
pub fn enumerate_connected(n: usize, skip_complete: bool) -> Result<Corpus> {
    if !(2..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::EnumerationRange(n));
    }
    let graphs = all_graphs_canonical(n)
        .into_iter()
        .map(|code| graph_from_code(n, code))
        .filter(|g| g.is_connected() && !(skip_complete && g.is_complete()))
        .collect();
    let suffix = if skip_complete { ",noncomplete" } else { "" };
    Ok(Corpus::new(graphs, format!("connected:{n}{suffix}")))
}

/// Connected graphs for every order in `lo..=hi`, concatenated in order.
pub fn enumerate_connected_range(lo: usize, hi: usize, skip_complete: bool) -> Result<Corpus> {
    let parts = (lo..=hi)
        .map(|n| enumerate_connected(n, skip_complete))
        .collect::<Result<Vec<_>>>()?;
    Ok(Corpus::concat(parts))
}

/// Bit index of pair `i < j` in graph6 column order.
#[inline]
fn pair_bit(i: usize, j: usize) -> usize {
    j * (j - 1) / 2 + i
}

/// Adjacency code: bit `pair_bit(i, j)` set iff `ij` is an edge.
#[cfg(test)]
pub(crate) fn graph_code(g: &Graph) -> u64 {
    let mut code = 0u64;
    for (i, j) in g.edges() {
        code |= 1 << pair_bit(i, j);
    }
    code
}

pub(crate) fn graph_from_code(n: usize, code: u64) -> Graph {
    let mut rows = vec![VertexSet::empty(n); n];
    for j in 1..n {
        for i in 0..j {
            if code & (1 << pair_bit(i, j)) != 0 {
                rows[i].insert(j);
                rows[j].insert(i);
            }
        }
    }
    Graph::from_rows(rows)
}

/// Canonical adjacency code: the minimum code over all relabelings that
/// order vertices by a relabeling-invariant key (degree, then the sorted
/// degrees of the neighbors). Only permutations inside equal-key cells are
/// tried; all of them are tried.
pub(crate) fn canonical_code(n: usize, code: u64) -> u64 {
    let adj: Vec<u32> = (0..n)
        .map(|u| {
            (0..n)
                .filter(|&v| v != u && code & (1 << pair_bit(u.min(v), u.max(v))) != 0)
                .fold(0u32, |m, v| m | 1 << v)
        })
        .collect();
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let key = |v: usize| {
        let mut nd: Vec<u32> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| deg[w]).collect();
        nd.sort_unstable();
        (deg[v], nd)
    };
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    let mut last = None;
    for &v in &order {
        let k = key(v);
        if last.as_ref() != Some(&k) {
            cells.push(Vec::new());
            last = Some(k);
        }
        cells.last_mut().unwrap().push(v);
    }

    // position -> original vertex, built cell by cell
    let mut best = u64::MAX;
    let mut labeling = Vec::with_capacity(n);
    permute_cells(&mut cells, 0, &mut labeling, &mut |lab: &[usize]| {
        let mut c = 0u64;
        for j in 1..n {
            for i in 0..j {
                if adj[lab[i]] >> lab[j] & 1 == 1 {
                    c |= 1 << pair_bit(i, j);
                }
            }
        }
        best = best.min(c);
    });
    best
}

fn permute_cells(cells: &mut [Vec<usize>], cell: usize, labeling: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if cell == cells.len() {
        visit(labeling);
        return;
    }
    let k = cells[cell].len();
    heap_permutations(cells, cell, k, labeling, visit);
}

// Heap's algorithm over one cell, recursing into the next cell per permutation.
fn heap_permutations(
    cells: &mut [Vec<usize>],
    cell: usize,
    k: usize,
    labeling: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if k <= 1 {
        let base = labeling.len();
        labeling.extend_from_slice(&cells[cell]);
        permute_cells(cells, cell + 1, labeling, visit);
        labeling.truncate(base);
        return;
    }
    for i in 0..k {
        heap_permutations(cells, cell, k - 1, labeling, visit);
        let swap = if k.is_multiple_of(2) { i } else { 0 };
        if i + 1 < k {
            cells[cell].swap(swap, k - 1);
        }
    }
}

/// Canonical codes of every graph (connected or not) on `n` vertices, built
/// by attaching one new vertex in every possible way to each graph on `n-1`.
fn all_graphs_canonical(n: usize) -> BTreeSet<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for m in 2..=n {
        let prev = m - 1;
        let mut next = BTreeSet::new();
        for &code in &level {
            for mask in 0u64..(1 << prev) {
                let mut c = code;
                for i in 0..prev {
                    if mask >> i & 1 == 1 {
                        c |= 1 << pair_bit(i, prev);
                    }
                }
                next.insert(canonical_code(m, c));
            }
        }
        level = next;
    }
    level
}
