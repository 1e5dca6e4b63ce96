//! Immutable indexed graphs tagged with their construction recipe.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::gens::GenFamily;
use crate::perm::Permutation;

/// A sorted `k`-subset of `{1..n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct KSubset(Vec<usize>);

impl KSubset {
    pub fn new(mut values: Vec<usize>, n: usize) -> Result<Self> {
        values.sort_unstable();
        if values.iter().any(|&v| v == 0 || v > n) {
            return Err(Error::InvalidParams(format!("subset values must lie in 1..={n}")));
        }
        if values.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParams("subset values must be distinct".into()));
        }
        Ok(Self(values))
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.0.iter().any(|v| other.0.binary_search(v).is_ok())
    }
}

impl fmt::Display for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.0.iter().join(","))
    }
}

impl fmt::Debug for KSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// What a vertex stands for.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexLabel {
    Index(usize),
    Perm(Permutation),
    Dihedral(DihedralElement),
    Subset(KSubset),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Index(i) => write!(f, "{i}"),
            VertexLabel::Perm(p) => write!(f, "{p}"),
            VertexLabel::Dihedral(d) => write!(f, "{d}"),
            VertexLabel::Subset(s) => write!(f, "{s}"),
        }
    }
}

/// Construction provenance; standard recipes rebuild bit-identically.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Recipe {
    CayleyPerm { family: GenFamily, n: usize },
    CayleyDihedral { n: usize, t1: Vec<usize>, t2: Vec<usize> },
    Circulant { n: usize, diffs: Vec<usize> },
    KneserComplement { n: usize, k: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    Path { n: usize },
    Petersen,
    Custom { name: String },
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::CayleyPerm { family, n } => write!(f, "cayley({family}, n={n})"),
            Recipe::CayleyDihedral { n, t1, t2 } => {
                write!(f, "cayley-dihedral(n={n}, t1={{{}}}, t2={{{}}})", t1.iter().join(","), t2.iter().join(","))
            }
            Recipe::Circulant { n, diffs } => {
                write!(f, "circulant(n={n}, d={{{}}})", diffs.iter().join(","))
            }
            Recipe::KneserComplement { n, k } => write!(f, "kneser-complement({n},{k})"),
            Recipe::Cycle { n } => write!(f, "C_{n}"),
            Recipe::Complete { n } => write!(f, "K_{n}"),
            Recipe::CompleteBipartite { a, b } => write!(f, "K_{{{a},{b}}}"),
            Recipe::Path { n } => write!(f, "P_{n}"),
            Recipe::Petersen => write!(f, "petersen"),
            Recipe::Custom { name } => write!(f, "{name}"),
        }
    }
}

/// Simple undirected graph with indexed vertices and sorted edge list.
#[derive(Clone, Debug)]
pub struct Graph {
    labels: Vec<VertexLabel>,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    inc: Vec<Vec<usize>>,
    recipe: Recipe,
    max_degree: usize,
}

impl Graph {
    /// Builds from a label list and an edge set; pairs are normalized to
    /// `(low, high)`, loops rejected, duplicates collapsed.
    pub fn build(labels: Vec<VertexLabel>, edge_pairs: impl IntoIterator<Item = (usize, usize)>, recipe: Recipe) -> Result<Self> {
        let n = labels.len();
        let mut set = BTreeSet::new();
        for (u, v) in edge_pairs {
            if u == v {
                return Err(Error::InvalidParams(format!("loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidParams(format!("edge ({u},{v}) out of range")));
            }
            set.insert((u.min(v), u.max(v)));
        }
        let edges: Vec<(usize, usize)> = set.into_iter().collect();
        let mut adj = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for (ei, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj[v].push(u);
            inc[u].push(ei);
            inc[v].push(ei);
        }
        for l in &mut adj {
            l.sort_unstable();
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        Ok(Self { labels, edges, adj, inc, recipe, max_degree })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)], name: &str) -> Result<Self> {
        Self::build(
            (0..n).map(VertexLabel::Index).collect(),
            edges.iter().copied(),
            Recipe::Custom { name: name.to_string() },
        )
    }

    pub fn n_vertices(&self) -> usize {
        self.labels.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, ei: usize) -> (usize, usize) {
        self.edges[ei]
    }

    /// Edge id of `{u, v}`, if present.
    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.inc[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn recipe(&self) -> &Recipe {
        &self.recipe
    }

    pub fn is_regular(&self) -> bool {
        self.adj.iter().all(|l| l.len() == self.max_degree)
    }

    pub fn is_connected(&self) -> bool {
        if self.n_vertices() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n_vertices()];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &self.adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == self.n_vertices()
    }

    /// 2-coloring by BFS; `Err` carries a vertex on an odd cycle.
    pub fn bipartition(&self) -> Result<Vec<u8>> {
        let n = self.n_vertices();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &y in &self.adj[x] {
                    if side[y] == u8::MAX {
                        side[y] = 1 - side[x];
                        queue.push_back(y);
                    } else if side[y] == side[x] {
                        return Err(Error::NotBipartite(y));
                    }
                }
            }
        }
        Ok(side)
    }

    /// DOT text; byte-deterministic.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{l}\"];\n"));
        }
        for &(u, v) in &self.edges {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }

    /// JSON document `{recipe, labels, edges}`; byte-deterministic.
    pub fn to_json(&self) -> Result<String> {
        let doc = GraphDoc {
            recipe: self.recipe.clone(),
            labels: self.labels.iter().map(|l| l.to_string()).collect(),
            edges: self.edges.clone(),
        };
        Ok(serde_json::to_string_pretty(&doc)?)
    }
}

#[derive(Serialize, Deserialize)]
pub struct GraphDoc {
    pub recipe: Recipe,
    pub labels: Vec<String>,
    pub edges: Vec<(usize, usize)>,
}

/// Circulant graph on `{0..n-1}` with symmetric difference set `diffs`.
pub fn circulant_graph(n: usize, diffs: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("circulant needs n >= 2".into()));
    }
    let set: BTreeSet<usize> = diffs.iter().copied().collect();
    for &d in &set {
        if d == 0 || d >= n {
            return Err(Error::InvalidParams(format!("difference {d} out of (0,{n})")));
        }
        if !set.contains(&(n - d)) {
            return Err(Error::InvalidParams(format!(
                "difference set not symmetric: {d} present, {} missing",
                n - d
            )));
        }
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for &d in &set {
            edges.push((u, (u + d) % n));
        }
    }
    Graph::build(
        (0..n).map(VertexLabel::Index).collect(),
        edges,
        Recipe::Circulant { n, diffs: set.into_iter().collect() },
    )
}

/// All `k`-subsets of `{1..n}` in colexicographic order.
pub fn ksubsets_colex(n: usize, k: usize) -> Vec<KSubset> {
    let mut subs: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    subs.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    subs.into_iter().map(KSubset).collect()
}

/// Complement of the Kneser graph: `k`-subsets adjacent iff they intersect.
pub fn kneser_complement_graph(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k > n {
        return Err(Error::InvalidParams(format!("need 1 <= k <= n, got n={n} k={k}")));
    }
    let subs = ksubsets_colex(n, k);
    let mut edges = Vec::new();
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if subs[i].intersects(&subs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(
        subs.into_iter().map(VertexLabel::Subset).collect(),
        edges,
        Recipe::KneserComplement { n, k },
    )
}

pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParams("cycle needs n >= 3".into()));
    }
    Graph::build(
        (0..n).map(VertexLabel::Index).collect(),
        (0..n).map(|i| (i, (i + 1) % n)),
        Recipe::Cycle { n },
    )
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    Graph::build(
        (0..n).map(VertexLabel::Index).collect(),
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))),
        Recipe::Complete { n },
    )
}

pub fn complete_bipartite_graph(a: usize, b: usize) -> Result<Graph> {
    Graph::build(
        (0..a + b).map(VertexLabel::Index).collect(),
        (0..a).flat_map(|i| (0..b).map(move |j| (i, a + j))),
        Recipe::CompleteBipartite { a, b },
    )
}

pub fn path_graph(n: usize) -> Result<Graph> {
    if n < 2 {
        return Err(Error::InvalidParams("path needs n >= 2".into()));
    }
    Graph::build(
        (0..n).map(VertexLabel::Index).collect(),
        (0..n - 1).map(|i| (i, i + 1)),
        Recipe::Path { n },
    )
}

/// The Petersen graph: 2-subsets of `{1..5}`, adjacency = disjointness.
pub fn petersen_graph() -> Result<Graph> {
    let subs = ksubsets_colex(5, 2);
    let mut edges = Vec::new();
    for i in 0..subs.len() {
        for j in i + 1..subs.len() {
            if !subs[i].intersects(&subs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::build(
        subs.into_iter().map(VertexLabel::Subset).collect(),
        edges,
        Recipe::Petersen,
    )
}

/// Rebuilds a graph from its recipe; `Custom` recipes cannot be rebuilt.
pub fn rebuild(recipe: &Recipe) -> Result<Graph> {
    match recipe {
        Recipe::CayleyPerm { family, n } => crate::cayley::cayley_graph_perm(*family, *n),
        Recipe::CayleyDihedral { n, t1, t2 } => crate::cayley::cayley_graph_dihedral(*n, t1, t2),
        Recipe::Circulant { n, diffs } => circulant_graph(*n, diffs),
        Recipe::KneserComplement { n, k } => kneser_complement_graph(*n, *k),
        Recipe::Cycle { n } => cycle_graph(*n),
        Recipe::Complete { n } => complete_graph(*n),
        Recipe::CompleteBipartite { a, b } => complete_bipartite_graph(*a, *b),
        Recipe::Path { n } => path_graph(*n),
        Recipe::Petersen => petersen_graph(),
        Recipe::Custom { name } => Err(Error::Unsupported(format!(
            "custom recipe {name:?} cannot be rebuilt"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circulant_c5() {
        let g = circulant_graph(5, &[1, 4]).unwrap();
        assert_eq!(g.n_vertices(), 5);
        assert_eq!(g.n_edges(), 5);
        assert!(g.is_regular());
        assert!(g.is_connected());
    }

    #[test]
    fn circulant_c12_is_power_of_cycle_at_k1() {
        let g = circulant_graph(12, &[1, 11]).unwrap();
        assert_eq!(g.n_edges(), 12);
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn circulant_two_triangles() {
        let g = circulant_graph(6, &[2, 4]).unwrap();
        assert_eq!(g.n_edges(), 6);
        assert!(!g.is_connected());
        assert_eq!(g.max_degree(), 2);
    }

    #[test]
    fn circulant_rejects_asymmetric_diffs() {
        assert!(circulant_graph(7, &[1]).is_err());
        assert!(circulant_graph(7, &[0, 7]).is_err());
    }

    #[test]
    fn kneser_complement_octahedron() {
        let g = kneser_complement_graph(4, 2).unwrap();
        assert_eq!(g.n_vertices(), 6);
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 4); // C(4,2)-1-C(2,2)
    }

    #[test]
    fn kneser_complement_of_petersen() {
        let g = kneser_complement_graph(5, 2).unwrap();
        assert_eq!(g.n_vertices(), 10);
        assert_eq!(g.max_degree(), 6); // 10-1-3
        assert!(g.is_regular());
    }

    #[test]
    fn kneser_complement_singletons_edgeless() {
        let g = kneser_complement_graph(7, 1).unwrap();
        assert_eq!(g.n_vertices(), 7);
        assert_eq!(g.n_edges(), 0);
    }

    #[test]
    fn colex_order_of_pairs() {
        let subs = ksubsets_colex(4, 2);
        let strs: Vec<String> = subs.iter().map(|s| s.to_string()).collect();
        assert_eq!(strs, ["{1,2}", "{1,3}", "{2,3}", "{1,4}", "{2,4}", "{3,4}"]);
    }

    #[test]
    fn rebuild_reproduces_bit_identical_graph() {
        let g = kneser_complement_graph(5, 2).unwrap();
        let h = rebuild(g.recipe()).unwrap();
        assert_eq!(g.edges(), h.edges());
        assert_eq!(g.to_json().unwrap(), h.to_json().unwrap());
        let c = circulant_graph(9, &[1, 2, 7, 8]).unwrap();
        let c2 = rebuild(c.recipe()).unwrap();
        assert_eq!(c.to_json().unwrap(), c2.to_json().unwrap());
    }

    #[test]
    fn handshake_for_regular_recipes() {
        for g in [
            circulant_graph(10, &[1, 2, 8, 9]).unwrap(),
            kneser_complement_graph(4, 2).unwrap(),
            petersen_graph().unwrap(),
        ] {
            assert!(g.is_regular());
            assert_eq!(2 * g.n_edges(), g.n_vertices() * g.max_degree());
        }
    }

    #[test]
    fn petersen_shape() {
        let g = petersen_graph().unwrap();
        assert_eq!((g.n_vertices(), g.n_edges(), g.max_degree()), (10, 15, 3));
    }
}
