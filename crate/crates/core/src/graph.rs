//! Simple undirected graphs with dense integer node ids, degree sequences,
//! and the SNAP-style edge-list text format.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// Multiset of positive integer degrees; the interchange format between
/// sampling, fitting, and graph generation. Zero-degree entries are excluded
/// by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<u64>);

impl DegreeSequence {
    pub fn new(degrees: Vec<u64>) -> Result<Self> {
        if degrees.iter().any(|&d| d == 0) {
            return Err(Error::domain("degree sequence entries must be >= 1"));
        }
        Ok(DegreeSequence(degrees))
    }

    /// Internal constructor for paths that guarantee positivity.
    pub(crate) fn from_raw(degrees: Vec<u64>) -> Self {
        debug_assert!(degrees.iter().all(|&d| d > 0));
        DegreeSequence(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, u64> {
        self.0.iter()
    }

    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn max(&self) -> Option<u64> {
        self.0.iter().copied().max()
    }

    pub fn into_vec(self) -> Vec<u64> {
        self.0
    }

    /// Degrees as floats, for the continuous-sample estimators.
    pub fn to_f64(&self) -> Vec<f64> {
        self.0.iter().map(|&d| d as f64).collect()
    }
}

impl From<DegreeSequence> for Vec<u64> {
    fn from(seq: DegreeSequence) -> Vec<u64> {
        seq.0
    }
}

/// Simple undirected graph over node ids 0..n-1 with sorted adjacency lists.
/// Invariants: symmetric adjacency, no self-loops, no duplicate edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

/// Duplicate edges and self-loops removed while normalizing an edge list.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CleanupCounts {
    pub self_loops: u64,
    pub duplicates: u64,
}

impl Graph {
    /// Graph with `n` nodes and no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Build from a list of edges that must already be clean: endpoints in
    /// range, no self-loops, no duplicates (as unordered pairs).
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Graph> {
        let (graph, counts) = Graph::from_edges_cleaning(n, edges.to_vec())?;
        if counts.self_loops > 0 || counts.duplicates > 0 {
            return Err(Error::domain(format!(
                "edge list not simple: {} self-loops, {} duplicates",
                counts.self_loops, counts.duplicates
            )));
        }
        Ok(graph)
    }

    /// Build from an arbitrary edge list, dropping self-loops and collapsing
    /// duplicate unordered pairs, reporting how many of each were removed.
    pub fn from_edges_cleaning(n: usize, edges: Vec<(u32, u32)>) -> Result<(Graph, CleanupCounts)> {
        let mut counts = CleanupCounts::default();
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            if (a as usize) >= n || (b as usize) >= n {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) out of range for n={n}"
                )));
            }
            if a == b {
                counts.self_loops += 1;
                continue;
            }
            pairs.push((a.min(b), a.max(b)));
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        counts.duplicates = (before - pairs.len()) as u64;
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &pairs {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let edge_count = pairs.len();
        Ok((Graph { adj, edge_count }, counts))
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    /// Edges as unordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            let u = u as u32;
            list.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn is_connected(&self) -> bool {
        let n = self.node_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = std::collections::VecDeque::new();
        seen[0] = true;
        queue.push_back(0u32);
        let mut reached = 1usize;
        while let Some(u) = queue.pop_front() {
            for &v in self.neighbors(u as usize) {
                if !seen[v as usize] {
                    seen[v as usize] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == n
    }

    /// SNAP-style edge list: one "u v" pair per line, u < v, ascending.
    pub fn write_edge_list<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(w, "{u} {v}")?;
        }
        Ok(())
    }

    pub fn edge_list_string(&self) -> String {
        let mut out = Vec::new();
        self.write_edge_list(&mut out).expect("in-memory write");
        String::from_utf8(out).expect("ascii edge list")
    }
}

/// Result of parsing a SNAP-style edge list: the cleaned graph, cleanup
/// counts, and the dense-id-to-original-id map.
#[derive(Debug)]
pub struct EdgeListParse {
    pub graph: Graph,
    pub self_loops_dropped: u64,
    pub duplicates_dropped: u64,
    /// `id_map[new_id] = original_id`, ascending in the original ids.
    pub id_map: Vec<u64>,
}

/// Parse a whitespace-separated "u v" edge list. Lines beginning with '#'
/// and blank lines are ignored; node ids are arbitrary non-negative integers
/// remapped to dense 0..n-1.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<EdgeListParse> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut it = trimmed.split_whitespace();
        let (a, b) = match (it.next(), it.next(), it.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected two node ids, got `{trimmed}`"),
                })
            }
        };
        let parse = |tok: &str| -> Result<u64> {
            tok.parse::<u64>().map_err(|_| Error::Parse {
                line: line_no,
                msg: format!("invalid node id `{tok}`"),
            })
        };
        raw_edges.push((parse(a)?, parse(b)?));
    }
    if raw_edges.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no edges found in input".into(),
        });
    }
    let mut dense: BTreeMap<u64, u32> = BTreeMap::new();
    for &(a, b) in &raw_edges {
        let next = dense.len() as u32;
        dense.entry(a).or_insert(next);
        let next = dense.len() as u32;
        dense.entry(b).or_insert(next);
    }
    // BTreeMap insertion order is arrival order; remap so ids ascend with the
    // original ids for deterministic output.
    let mut id_map: Vec<u64> = dense.keys().copied().collect();
    id_map.sort_unstable();
    let lookup: BTreeMap<u64, u32> = id_map
        .iter()
        .enumerate()
        .map(|(new, &orig)| (orig, new as u32))
        .collect();
    let edges: Vec<(u32, u32)> = raw_edges
        .iter()
        .map(|&(a, b)| (lookup[&a], lookup[&b]))
        .collect();
    let (graph, counts) = Graph::from_edges_cleaning(id_map.len(), edges)?;
    Ok(EdgeListParse {
        graph,
        self_loops_dropped: counts.self_loops,
        duplicates_dropped: counts.duplicates,
        id_map,
    })
}

/// Parse a degree file: one positive integer per line ('#' comments allowed).
pub fn read_degrees<R: BufRead>(reader: R) -> Result<DegreeSequence> {
    let mut degrees = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let d: u64 = trimmed.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("invalid degree `{trimmed}`"),
        })?;
        if d == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: "degrees must be >= 1".into(),
            });
        }
        degrees.push(d);
    }
    if degrees.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no degrees found in input".into(),
        });
    }
    Ok(DegreeSequence::from_raw(degrees))
}
