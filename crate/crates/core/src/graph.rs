//! Labeled graph families and neighborhood queries.
//!
//! All graphs are immutable once built and hold at most [`MAX_VERTICES`]
//! vertices, so vertex sets fit in a single machine word. Prisms and
//! ladders use the labeling `t_i -> i`, `b_i -> n + i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Dense vertex index, contiguous in `[0, n_vertices)`.
pub type VertexId = usize;

/// Hard capacity: one u64 mask per vertex set.
pub const MAX_VERTICES: usize = 64;

/// Membership mask over the vertices of one graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    pub fn singleton(v: VertexId) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1 << v)
    }

    /// Full vertex set of a graph on `n` vertices.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn mask(self) -> u64 {
        self.0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, v: VertexId) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: VertexId) {
        debug_assert!(v < MAX_VERTICES);
        self.0 |= 1 << v;
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    /// Complement within the full set on `n` vertices.
    pub fn complement(self, n: usize) -> VertexSet {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Ascending iterator over member ids.
    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Parsed family descriptor. The text grammar is exact:
/// `prism:<n>` (n>=3), `cycle:<n>` (n>=3), `path:<n>` (n>=1),
/// `ladder:<n>` (n>=2), `complete:<n>` (n>=1), `star:<n>` (total
/// vertices, n>=2), `wheel:<n>` (hub + cycle, n>=4), `fan:<n>` (hub +
/// path, n>=2), `kbipartite:<m>,<n>`, `house`, `bintree:<n>` (n>=1).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Prism(usize),
    Cycle(usize),
    Path(usize),
    Ladder(usize),
    Complete(usize),
    Star(usize),
    Wheel(usize),
    Fan(usize),
    KBipartite(usize, usize),
    House,
    BinTree(usize),
}

impl FamilySpec {
    fn check(self) -> Result<Self> {
        let range = |family: &str, detail: String| Error::ParamRange {
            family: family.to_string(),
            detail,
        };
        match self {
            FamilySpec::Prism(n) if n < 3 => Err(range("prism", format!("n={n}, need n>=3"))),
            FamilySpec::Cycle(n) if n < 3 => Err(range("cycle", format!("n={n}, need n>=3"))),
            FamilySpec::Path(n) if n < 1 => Err(range("path", format!("n={n}, need n>=1"))),
            FamilySpec::Ladder(n) if n < 2 => Err(range("ladder", format!("n={n}, need n>=2"))),
            FamilySpec::Complete(n) if n < 1 => {
                Err(range("complete", format!("n={n}, need n>=1")))
            }
            FamilySpec::Star(n) if n < 2 => Err(range("star", format!("n={n}, need n>=2"))),
            FamilySpec::Wheel(n) if n < 4 => Err(range("wheel", format!("n={n}, need n>=4"))),
            FamilySpec::Fan(n) if n < 2 => Err(range("fan", format!("n={n}, need n>=2"))),
            FamilySpec::KBipartite(m, n) if m < 1 || n < 1 => {
                Err(range("kbipartite", format!("m={m}, n={n}, need m,n>=1")))
            }
            FamilySpec::BinTree(n) if n < 1 => Err(range("bintree", format!("n={n}, need n>=1"))),
            other => Ok(other),
        }
    }

    pub fn n_vertices(self) -> usize {
        match self {
            FamilySpec::Prism(n) | FamilySpec::Ladder(n) => 2 * n,
            FamilySpec::Cycle(n)
            | FamilySpec::Path(n)
            | FamilySpec::Complete(n)
            | FamilySpec::Star(n)
            | FamilySpec::Wheel(n)
            | FamilySpec::Fan(n)
            | FamilySpec::BinTree(n) => n,
            FamilySpec::KBipartite(m, n) => m + n,
            FamilySpec::House => 5,
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Prism(n) => write!(f, "prism:{n}"),
            FamilySpec::Cycle(n) => write!(f, "cycle:{n}"),
            FamilySpec::Path(n) => write!(f, "path:{n}"),
            FamilySpec::Ladder(n) => write!(f, "ladder:{n}"),
            FamilySpec::Complete(n) => write!(f, "complete:{n}"),
            FamilySpec::Star(n) => write!(f, "star:{n}"),
            FamilySpec::Wheel(n) => write!(f, "wheel:{n}"),
            FamilySpec::Fan(n) => write!(f, "fan:{n}"),
            FamilySpec::KBipartite(m, n) => write!(f, "kbipartite:{m},{n}"),
            FamilySpec::House => write!(f, "house"),
            FamilySpec::BinTree(n) => write!(f, "bintree:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::FamilySpec(s.to_string());
        let spec = match s.split_once(':') {
            None => match s {
                "house" => FamilySpec::House,
                _ => return Err(bad()),
            },
            Some((name, args)) => {
                let one = || args.parse::<usize>().map_err(|_| bad());
                match name {
                    "prism" => FamilySpec::Prism(one()?),
                    "cycle" => FamilySpec::Cycle(one()?),
                    "path" => FamilySpec::Path(one()?),
                    "ladder" => FamilySpec::Ladder(one()?),
                    "complete" => FamilySpec::Complete(one()?),
                    "star" => FamilySpec::Star(one()?),
                    "wheel" => FamilySpec::Wheel(one()?),
                    "fan" => FamilySpec::Fan(one()?),
                    "bintree" => FamilySpec::BinTree(one()?),
                    "kbipartite" => {
                        let (m, n) = args.split_once(',').ok_or_else(bad)?;
                        FamilySpec::KBipartite(
                            m.parse().map_err(|_| bad())?,
                            n.parse().map_err(|_| bad())?,
                        )
                    }
                    _ => return Err(bad()),
                }
            }
        };
        spec.check()
    }
}

/// Immutable labeled undirected graph with per-vertex neighborhood masks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    adjacency: Vec<VertexSet>,
    closed: Vec<VertexSet>,
    family: String,
}

impl Graph {
    fn with_edges(n: usize, family: String, edges: &[(usize, usize)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                requested: n,
                limit: MAX_VERTICES,
            });
        }
        let mut adjacency = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            debug_assert!(a != b && a < n && b < n);
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        let closed = adjacency
            .iter()
            .enumerate()
            .map(|(v, adj)| adj.union(VertexSet::singleton(v)))
            .collect();
        Ok(Graph {
            n_vertices: n,
            adjacency,
            closed,
            family,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn family(&self) -> &str {
        &self.family
    }

    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.n_vertices)
    }

    /// Open neighborhood of `v`.
    pub fn adjacency(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v])
    }

    /// Closed neighborhood `N[v] = {v} ∪ neighbors(v)`.
    pub fn closed_neighborhood(&self, v: VertexId) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.closed[v])
    }

    /// Unchecked closed neighborhood, for hot loops over valid ids.
    pub(crate) fn closed_unchecked(&self, v: VertexId) -> VertexSet {
        self.closed[v]
    }

    pub fn degree(&self, v: VertexId) -> Result<usize> {
        Ok(self.adjacency(v)?.len())
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs `(a, b)` with `a < b`, ascending.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for a in 0..self.n_vertices {
            for b in self.adjacency[a].iter() {
                if a < b {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Mask-based breadth traversal over the induced subgraph on `within`.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        let Some(start) = within.iter().next() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adjacency[v].intersection(within));
            }
            frontier = next.intersection(seen.complement(self.n_vertices));
            seen = seen.union(next);
        }
        within.is_subset_of(seen)
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.full_set())
    }

    /// Deterministic DOT rendering: vertices ascending, each edge once.
    pub fn to_dot(&self) -> String {
        use std::fmt::Write;
        let name: String = self
            .family
            .chars()
            .map(|c| if c.is_alphanumeric() { c } else { '_' })
            .collect();
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n_vertices {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.n_vertices {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n_vertices: self.n_vertices,
            })
        }
    }
}

/// Builds the labeled graph for a family spec.
///
/// Labeling conventions: prisms and ladders place the top row at
/// `0..n` and the bottom row at `n..2n`; hubs (wheel, fan, star) and
/// bipartite left parts start at id 0; the binary tree is heap-indexed
/// (vertex `k > 0` is adjacent to `(k-1)/2`); the house is the 4-cycle
/// `0-1-2-3` with apex 4 adjacent to 0 and 1.
pub fn build_family(spec: FamilySpec) -> Result<Graph> {
    let spec = spec.check()?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    match spec {
        FamilySpec::Prism(n) => {
            for i in 0..n {
                edges.push((i, (i + 1) % n));
                edges.push((n + i, n + (i + 1) % n));
                edges.push((i, n + i));
            }
        }
        FamilySpec::Cycle(n) => {
            for i in 0..n {
                edges.push((i, (i + 1) % n));
            }
        }
        FamilySpec::Path(n) => {
            for i in 1..n {
                edges.push((i - 1, i));
            }
        }
        FamilySpec::Ladder(n) => {
            for i in 1..n {
                edges.push((i - 1, i));
                edges.push((n + i - 1, n + i));
            }
            for i in 0..n {
                edges.push((i, n + i));
            }
        }
        FamilySpec::Complete(n) => {
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b));
                }
            }
        }
        FamilySpec::Star(n) => {
            for v in 1..n {
                edges.push((0, v));
            }
        }
        FamilySpec::Wheel(n) => {
            let rim = n - 1;
            for k in 0..rim {
                edges.push((1 + k, 1 + (k + 1) % rim));
                edges.push((0, 1 + k));
            }
        }
        FamilySpec::Fan(n) => {
            for v in 1..n {
                edges.push((0, v));
            }
            for v in 2..n {
                edges.push((v - 1, v));
            }
        }
        FamilySpec::KBipartite(m, n) => {
            for a in 0..m {
                for b in 0..n {
                    edges.push((a, m + b));
                }
            }
        }
        FamilySpec::House => {
            edges.extend_from_slice(&[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1)]);
        }
        FamilySpec::BinTree(n) => {
            for k in 1..n {
                edges.push(((k - 1) / 2, k));
            }
        }
    }
    Graph::with_edges(spec.n_vertices(), spec.to_string(), &edges)
}

/// Parse-and-build convenience for CLI-style family strings.
pub fn build_family_str(s: &str) -> Result<Graph> {
    build_family(s.parse()?)
}
