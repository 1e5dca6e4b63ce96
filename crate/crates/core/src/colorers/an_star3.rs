//! Total coloring of `C(A_n, S)` with `S` the 3-cycles `(1 2 m)`, `(1 m 2)`.
//!
//! Each triple `{x, (1 2 m)∘x, (1 m 2)∘x}` is a triangle, so a proper
//! 3-partition automatically places triangle members in three different
//! classes. The colorer finds a balanced proper 3-partition by DFS, absorbs
//! a maximum matching of every class pair into the third class, and colors
//! the remaining edges with fresh Misra–Gries colors, so the palette is at
//! most `3 + (Δ - 2) + 1 = Δ + 2` when all matchings are perfect.

use super::ColoredInstance;
use crate::cayley::cayley_graph_perm;
use crate::coloring::{merge_partial_total, VertexPartition};
use crate::edge_color::{matching_between_classes, misra_gries_edge_color};
use crate::error::{Error, Result};
use crate::gens::GenFamily;
use crate::graph::Graph;

pub const AN_STAR3_MAX_N: usize = 6;

/// Balanced proper 3-partition by DFS in vertex order with class caps.
fn balanced_three_partition(g: &Graph, budget: u64) -> Result<VertexPartition> {
    let n = g.n_vertices();
    if n % 3 != 0 {
        return Err(Error::ConstructionFailed(format!(
            "vertex count {n} is not divisible by 3"
        )));
    }
    let cap = n / 3;
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut counts = [0usize; 3];
    let mut nodes: u64 = 0;

    fn dfs(
        g: &Graph,
        v: usize,
        cap: usize,
        color: &mut [Option<usize>],
        counts: &mut [usize; 3],
        nodes: &mut u64,
        budget: u64,
    ) -> Result<bool> {
        if v == g.n_vertices() {
            return Ok(true);
        }
        *nodes += 1;
        if *nodes > budget {
            return Err(Error::BudgetExhausted(format!(
                "balanced 3-partition search used {budget} nodes"
            )));
        }
        for c in 0..3 {
            if counts[c] < cap && g.neighbors(v).iter().all(|&w| color[w] != Some(c)) {
                color[v] = Some(c);
                counts[c] += 1;
                if dfs(g, v + 1, cap, color, counts, nodes, budget)? {
                    return Ok(true);
                }
                color[v] = None;
                counts[c] -= 1;
            }
        }
        Ok(false)
    }

    if !dfs(g, 0, cap, &mut color, &mut counts, &mut nodes, budget)? {
        return Err(Error::ConstructionFailed(
            "no balanced proper 3-partition found".into(),
        ));
    }
    let mut classes = vec![Vec::new(); 3];
    for v in 0..n {
        classes[color[v].unwrap()].push(v);
    }
    VertexPartition::new(classes, n)
}

/// Builds `C(A_n, star-3-cycles)` and totally colors it. The palette is
/// reported, never asserted to equal `n` (the achieved value is what the
/// audit records).
pub fn total_color_an_star3(n: usize) -> Result<ColoredInstance> {
    if !(4..=AN_STAR3_MAX_N).contains(&n) {
        return Err(Error::InvalidParams(format!(
            "an-star3 supports 4 <= n <= {AN_STAR3_MAX_N}, got {n}"
        )));
    }
    let g = cayley_graph_perm(GenFamily::Star3Cycles, n)?;
    let mut log = vec![format!(
        "graph: {} vertices, {}-regular",
        g.n_vertices(),
        g.max_degree()
    )];
    let partition = balanced_three_partition(&g, 50_000_000)?;
    log.push(format!(
        "balanced proper 3-partition: sizes {:?}",
        partition.classes().iter().map(Vec::len).collect::<Vec<_>>()
    ));

    let classes = partition.classes();
    let mut class_edges: Vec<Vec<usize>> = vec![Vec::new(); 3];
    for (a, b, third) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
        let m = matching_between_classes(&g, &classes[a], &classes[b])?;
        log.push(format!(
            "matching {a}-{b}: size {} (perfect: {}) absorbed into class {third}",
            m.edge_ids.len(),
            m.perfect
        ));
        class_edges[third] = m.edge_ids;
    }
    let mut absorbed = vec![false; g.n_edges()];
    for edges in &class_edges {
        for &ei in edges {
            absorbed[ei] = true;
        }
    }
    let rem_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(ei, _)| !absorbed[*ei])
        .map(|(_, &e)| e)
        .collect();
    let mut remainder = Vec::new();
    if !rem_edges.is_empty() {
        let sub = Graph::from_edges(g.n_vertices(), &rem_edges, "an-star3 remainder")?;
        let colors = misra_gries_edge_color(&sub);
        let palette = colors.iter().max().map_or(0, |m| m + 1);
        log.push(format!(
            "remainder: Misra–Gries with {palette} colors on Δ={} subgraph",
            sub.max_degree()
        ));
        for (si, &(u, v)) in sub.edges().iter().enumerate() {
            remainder.push((g.edge_id(u, v).expect("edge of g"), colors[si]));
        }
    }
    let coloring = merge_partial_total(&g, &partition, &class_edges, &remainder)?;
    Ok(ColoredInstance { graph: g, coloring, log })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_total;
    use crate::graph::VertexLabel;
    use crate::perm::Permutation;

    #[test]
    fn a4_total_coloring_within_tcc() {
        let inst = total_color_an_star3(4).unwrap();
        assert_eq!(inst.graph.n_vertices(), 12);
        assert_eq!(inst.graph.max_degree(), 4);
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid(), "violations: {:?}", report.violations);
        assert!(report.palette <= 6, "palette {} exceeds Δ+2", report.palette);
    }

    #[test]
    fn a5_total_coloring_within_tcc() {
        let inst = total_color_an_star3(5).unwrap();
        assert_eq!(inst.graph.n_vertices(), 60);
        assert_eq!(inst.graph.max_degree(), 6);
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid());
        assert!(report.palette <= 8);
    }

    #[test]
    fn triangle_members_get_three_distinct_classes() {
        let inst = total_color_an_star3(4).unwrap();
        let find = |s: &str| {
            let p = Permutation::parse_cycles(4, s).unwrap();
            inst.graph
                .labels()
                .iter()
                .position(|l| matches!(l, VertexLabel::Perm(q) if *q == p))
                .unwrap()
        };
        let tri = [find("e"), find("(1 2 3)"), find("(1 3 2)")];
        let colors: Vec<_> = tri.iter().map(|&v| inst.coloring.vertex_color(v).unwrap()).collect();
        assert_eq!(colors.iter().collect::<std::collections::HashSet<_>>().len(), 3);
    }
}
