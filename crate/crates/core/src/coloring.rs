//! The total-coloring data model and the strict verifier.
//!
//! The verifier is the single source of truth: every colorer's output must
//! pass [`verify_total`], nothing self-certifies.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Recipe};

/// Vertex and edge colors over a fixed graph; entries may be unset while a
/// construction is in flight. Color ids are dense small integers from 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalColoring {
    vertex_colors: Vec<Option<usize>>,
    edge_colors: Vec<Option<usize>>,
}

impl TotalColoring {
    pub fn empty(g: &Graph) -> Self {
        Self {
            vertex_colors: vec![None; g.n_vertices()],
            edge_colors: vec![None; g.n_edges()],
        }
    }

    pub fn from_parts(vertex_colors: Vec<Option<usize>>, edge_colors: Vec<Option<usize>>) -> Self {
        Self { vertex_colors, edge_colors }
    }

    pub fn vertex_color(&self, v: usize) -> Option<usize> {
        self.vertex_colors[v]
    }

    pub fn edge_color(&self, ei: usize) -> Option<usize> {
        self.edge_colors[ei]
    }

    pub fn set_vertex(&mut self, v: usize, c: usize) {
        self.vertex_colors[v] = Some(c);
    }

    pub fn set_edge(&mut self, ei: usize, c: usize) {
        self.edge_colors[ei] = Some(c);
    }

    pub fn vertex_colors(&self) -> &[Option<usize>] {
        &self.vertex_colors
    }

    pub fn edge_colors(&self) -> &[Option<usize>] {
        &self.edge_colors
    }

    pub fn is_complete(&self) -> bool {
        self.vertex_colors.iter().all(Option::is_some) && self.edge_colors.iter().all(Option::is_some)
    }

    /// `max used id + 1` over vertices and edges.
    pub fn palette_size(&self) -> usize {
        self.vertex_colors
            .iter()
            .chain(self.edge_colors.iter())
            .flatten()
            .max()
            .map_or(0, |&m| m + 1)
    }

    pub fn fits(&self, g: &Graph) -> bool {
        self.vertex_colors.len() == g.n_vertices() && self.edge_colors.len() == g.n_edges()
    }
}

/// A conflict found by the verifier; locations are vertex indices and edge
/// endpoint pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    VertexVertex { u: usize, v: usize },
    VertexEdge { v: usize, edge: (usize, usize) },
    EdgeEdge { e1: (usize, usize), e2: (usize, usize), shared: usize },
}

#[derive(Clone, Debug, Default)]
pub struct VerifyReport {
    pub violations: Vec<Violation>,
    pub palette: usize,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks every adjacent vertex pair, every vertex/incident edge pair, and
/// every adjacent edge pair. Requires a complete coloring of this graph.
pub fn verify_total(g: &Graph, c: &TotalColoring) -> Result<VerifyReport> {
    if !c.fits(g) {
        return Err(Error::ColoringShape(format!(
            "coloring has {} vertex / {} edge entries; graph has {} / {}",
            c.vertex_colors.len(),
            c.edge_colors.len(),
            g.n_vertices(),
            g.n_edges()
        )));
    }
    if let Some(v) = c.vertex_colors.iter().position(Option::is_none) {
        return Err(Error::IncompleteColoring(format!("vertex {v} uncolored")));
    }
    if let Some(ei) = c.edge_colors.iter().position(Option::is_none) {
        let (u, v) = g.edge(ei);
        return Err(Error::IncompleteColoring(format!("edge ({u},{v}) uncolored")));
    }
    let mut report = VerifyReport {
        violations: Vec::new(),
        palette: c.palette_size(),
    };
    for (ei, &(u, v)) in g.edges().iter().enumerate() {
        let cu = c.vertex_colors[u].unwrap();
        let cv = c.vertex_colors[v].unwrap();
        let ce = c.edge_colors[ei].unwrap();
        if cu == cv {
            report.violations.push(Violation::VertexVertex { u, v });
        }
        if ce == cu {
            report.violations.push(Violation::VertexEdge { v: u, edge: (u, v) });
        }
        if ce == cv {
            report.violations.push(Violation::VertexEdge { v, edge: (u, v) });
        }
    }
    for v in 0..g.n_vertices() {
        let inc = g.incident_edges(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                if c.edge_colors[inc[i]] == c.edge_colors[inc[j]] {
                    report.violations.push(Violation::EdgeEdge {
                        e1: g.edge(inc[i]),
                        e2: g.edge(inc[j]),
                        shared: v,
                    });
                }
            }
        }
    }
    Ok(report)
}

/// Disjoint vertex classes covering the whole graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexPartition {
    classes: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn new(classes: Vec<Vec<usize>>, n_vertices: usize) -> Result<Self> {
        let mut seen = vec![false; n_vertices];
        for class in &classes {
            for &v in class {
                if v >= n_vertices {
                    return Err(Error::InvalidParams(format!("vertex {v} out of range")));
                }
                if seen[v] {
                    return Err(Error::InvalidParams(format!("vertex {v} in two classes")));
                }
                seen[v] = true;
            }
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidParams(format!("vertex {v} uncovered")));
        }
        Ok(Self { classes })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn n_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&v))
            .expect("partition covers all vertices")
    }

    /// Index from vertex to class, O(1) lookups.
    pub fn class_map(&self, n_vertices: usize) -> Vec<usize> {
        let mut map = vec![usize::MAX; n_vertices];
        for (ci, class) in self.classes.iter().enumerate() {
            for &v in class {
                map[v] = ci;
            }
        }
        map
    }

    /// First in-class edge, if any class is not independent.
    pub fn properness_witness(&self, g: &Graph) -> Option<(usize, usize)> {
        let map = self.class_map(g.n_vertices());
        g.edges().iter().copied().find(|&(u, v)| map[u] == map[v])
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.properness_witness(g).is_none()
    }
}

/// A set of pairwise non-incident edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub edge_ids: Vec<usize>,
    pub perfect: bool,
}

/// Merges a vertex partition, per-class absorbed matchings, and a coloring of
/// the leftover edges into one total coloring.
///
/// `class_edges[c]` is absorbed with color `c`; remainder colors are offset
/// by the class count. Violations are reported with their location; the
/// output may be incomplete if the remainder does not cover all edges left.
pub fn merge_partial_total(
    g: &Graph,
    base: &VertexPartition,
    class_edges: &[Vec<usize>],
    remainder: &[(usize, usize)],
) -> Result<TotalColoring> {
    if class_edges.len() > base.n_classes() {
        return Err(Error::MergeConflict(format!(
            "{} matching groups for {} classes",
            class_edges.len(),
            base.n_classes()
        )));
    }
    let map = base.class_map(g.n_vertices());
    if let Some((u, v)) = base.properness_witness(g) {
        return Err(Error::MergeConflict(format!(
            "base class {} contains adjacent vertices {u} and {v}",
            map[u]
        )));
    }
    let mut coloring = TotalColoring::empty(g);
    for (v, &c) in map.iter().enumerate() {
        coloring.set_vertex(v, c);
    }
    for (c, edges) in class_edges.iter().enumerate() {
        let mut touched = vec![false; g.n_vertices()];
        for &ei in edges {
            if ei >= g.n_edges() {
                return Err(Error::MergeConflict(format!("edge id {ei} out of range")));
            }
            let (u, v) = g.edge(ei);
            if coloring.edge_color(ei).is_some() {
                return Err(Error::MergeConflict(format!("edge ({u},{v}) assigned twice")));
            }
            if map[u] == c || map[v] == c {
                return Err(Error::MergeConflict(format!(
                    "edge ({u},{v}) colored {c} touches class-{c} vertex"
                )));
            }
            if touched[u] || touched[v] {
                return Err(Error::MergeConflict(format!(
                    "edges of class {c} share an endpoint at ({u},{v})"
                )));
            }
            touched[u] = true;
            touched[v] = true;
            coloring.set_edge(ei, c);
        }
    }
    let offset = base.n_classes();
    for &(ei, rc) in remainder {
        if ei >= g.n_edges() {
            return Err(Error::MergeConflict(format!("remainder edge id {ei} out of range")));
        }
        if coloring.edge_color(ei).is_some() {
            let (u, v) = g.edge(ei);
            return Err(Error::MergeConflict(format!(
                "remainder re-colors already-colored edge ({u},{v})"
            )));
        }
        coloring.set_edge(ei, offset + rc);
    }
    Ok(coloring)
}

/// On-disk certificate: recipe, colors, palette, verification outcome.
#[derive(Serialize, Deserialize)]
pub struct CertificateDoc {
    pub recipe: Recipe,
    pub vertex_colors: Vec<usize>,
    /// Keyed `"u-v"` with `u < v`.
    pub edge_colors: BTreeMap<String, usize>,
    pub palette: usize,
    pub verified: bool,
    pub violations: Vec<Violation>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub construction: Vec<String>,
}

impl CertificateDoc {
    pub fn new(g: &Graph, c: &TotalColoring, report: &VerifyReport, construction: Vec<String>) -> Result<Self> {
        if !c.is_complete() {
            return Err(Error::IncompleteColoring("certificate needs a complete coloring".into()));
        }
        let mut edge_colors = BTreeMap::new();
        for (ei, &(u, v)) in g.edges().iter().enumerate() {
            edge_colors.insert(format!("{u}-{v}"), c.edge_color(ei).unwrap());
        }
        Ok(Self {
            recipe: g.recipe().clone(),
            vertex_colors: c.vertex_colors().iter().map(|c| c.unwrap()).collect(),
            edge_colors,
            palette: report.palette,
            verified: report.is_valid(),
            violations: report.violations.clone(),
            construction,
        })
    }

    /// Reconstructs the coloring against `g` (which must match the recipe).
    pub fn to_coloring(&self, g: &Graph) -> Result<TotalColoring> {
        if self.vertex_colors.len() != g.n_vertices() {
            return Err(Error::ColoringShape("vertex count mismatch".into()));
        }
        let mut coloring = TotalColoring::empty(g);
        for (v, &c) in self.vertex_colors.iter().enumerate() {
            coloring.set_vertex(v, c);
        }
        for (key, &c) in &self.edge_colors {
            let (u, v) = key
                .split_once('-')
                .and_then(|(a, b)| Some((a.parse().ok()?, b.parse().ok()?)))
                .ok_or_else(|| Error::ColoringShape(format!("bad edge key {key:?}")))?;
            let ei = g
                .edge_id(u, v)
                .ok_or_else(|| Error::ColoringShape(format!("edge {key} not in graph")))?;
            coloring.set_edge(ei, c);
        }
        Ok(coloring)
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cycle_graph, Graph};

    fn triangle() -> Graph {
        cycle_graph(3).unwrap()
    }

    #[test]
    fn canonical_triangle_coloring_is_valid() {
        let g = triangle();
        let mut c = TotalColoring::empty(&g);
        // vertex v -> v; edge {u,v} -> the third color
        for v in 0..3 {
            c.set_vertex(v, v);
        }
        for (ei, &(u, v)) in g.edges().iter().enumerate() {
            c.set_edge(ei, 3 - u - v);
        }
        let report = verify_total(&g, &c).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.palette, 3);
    }

    #[test]
    fn monochromatic_c4_reports_every_vertex_conflict() {
        let g = cycle_graph(4).unwrap();
        let mut c = TotalColoring::empty(&g);
        for v in 0..4 {
            c.set_vertex(v, 1);
        }
        for ei in 0..4 {
            c.set_edge(ei, 2 + ei);
        }
        let report = verify_total(&g, &c).unwrap();
        let vv = report
            .violations
            .iter()
            .filter(|v| matches!(v, Violation::VertexVertex { .. }))
            .count();
        assert_eq!(vv, 4);
    }

    #[test]
    fn incomplete_coloring_is_an_error() {
        let g = triangle();
        let c = TotalColoring::empty(&g);
        assert!(matches!(verify_total(&g, &c), Err(Error::IncompleteColoring(_))));
    }

    #[test]
    fn wrong_shape_is_an_error() {
        let g = triangle();
        let c = TotalColoring::from_parts(vec![Some(0); 5], vec![Some(0); 3]);
        assert!(matches!(verify_total(&g, &c), Err(Error::ColoringShape(_))));
    }

    #[test]
    fn partition_checks_cover_and_disjointness() {
        assert!(VertexPartition::new(vec![vec![0, 1], vec![2]], 3).is_ok());
        assert!(VertexPartition::new(vec![vec![0, 1], vec![1, 2]], 3).is_err());
        assert!(VertexPartition::new(vec![vec![0, 1]], 3).is_err());
    }

    #[test]
    fn merge_empty_matchings_leaves_edges_unset() {
        let g = triangle();
        let base = VertexPartition::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
        let c = merge_partial_total(&g, &base, &[], &[]).unwrap();
        assert!(!c.is_complete());
        assert_eq!(c.vertex_color(1), Some(1));
    }

    #[test]
    fn merge_rejects_conflicting_matching_placement() {
        let g = triangle();
        let base = VertexPartition::new(vec![vec![0], vec![1], vec![2]], 3).unwrap();
        // edge (0,1) colored 0 touches class-0 vertex 0
        let err = merge_partial_total(&g, &base, &[vec![0]], &[]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("(0,1)"), "got: {msg}");
    }

    #[test]
    fn certificate_roundtrip() {
        let g = triangle();
        let mut c = TotalColoring::empty(&g);
        for v in 0..3 {
            c.set_vertex(v, v);
        }
        for (ei, &(u, v)) in g.edges().iter().enumerate() {
            c.set_edge(ei, 3 - u - v);
        }
        let report = verify_total(&g, &c).unwrap();
        let doc = CertificateDoc::new(&g, &c, &report, vec![]).unwrap();
        let json = doc.to_json().unwrap();
        let doc2 = CertificateDoc::from_json(&json).unwrap();
        let c2 = doc2.to_coloring(&g).unwrap();
        assert_eq!(c, c2);
        assert_eq!(json, doc2.to_json().unwrap());
    }
}
