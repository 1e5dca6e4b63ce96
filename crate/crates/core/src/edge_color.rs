//! Edge-coloring subroutines: a constructive Δ+1 coloring for arbitrary
//! simple graphs, an exact-Δ coloring for bipartite graphs, and maximum
//! bipartite matchings by augmenting paths.

use std::collections::HashSet;

use crate::coloring::Matching;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Proper edge coloring with at most Δ+1 colors (Misra–Gries).
///
/// Deterministic: edges are processed in index order and neighbor scans
/// follow sorted adjacency lists.
pub fn misra_gries_edge_color(g: &Graph) -> Vec<usize> {
    let delta = g.max_degree();
    let mut colors: Vec<Option<usize>> = vec![None; g.n_edges()];
    let mut used: Vec<HashSet<usize>> = vec![HashSet::new(); g.n_vertices()];

    let free_color = |used: &HashSet<usize>| -> usize {
        (0..=delta).find(|c| !used.contains(c)).expect("degree <= delta")
    };
    let is_free = |used: &[HashSet<usize>], v: usize, c: usize| !used[v].contains(&c);

    for ei in 0..g.n_edges() {
        let (u, v) = g.edge(ei);

        // Maximal fan of u starting at v: each next spoke's color is free on
        // the previous fan vertex.
        let mut fan_vertices = vec![v];
        let mut fan_edges = vec![ei];
        let mut in_fan = vec![false; g.n_vertices()];
        in_fan[v] = true;
        let mut last = v;
        loop {
            let mut extended = false;
            for &w in g.neighbors(u) {
                if in_fan[w] {
                    continue;
                }
                let we = g.edge_id(u, w).unwrap();
                if let Some(c) = colors[we] {
                    if is_free(&used, last, c) {
                        fan_vertices.push(w);
                        fan_edges.push(we);
                        in_fan[w] = true;
                        last = w;
                        extended = true;
                        break;
                    }
                }
            }
            if !extended {
                break;
            }
        }

        let c = free_color(&used[u]);
        let d = free_color(&used[last]);

        // Invert the d/c-alternating path starting at u. Since c is free at
        // u the walk is a simple path: each vertex carries at most one edge
        // of each color and the path can never return to u.
        if c != d {
            let mut path = Vec::new();
            let mut cur = u;
            let mut want = d;
            'grow: loop {
                for &w in g.neighbors(cur) {
                    let we = g.edge_id(cur, w).unwrap();
                    if colors[we] == Some(want) {
                        path.push(we);
                        cur = w;
                        want = if want == d { c } else { d };
                        continue 'grow;
                    }
                }
                break;
            }
            let mut touched = Vec::new();
            for &pe in &path {
                let old = colors[pe].unwrap();
                colors[pe] = Some(if old == c { d } else { c });
                let (a, b) = g.edge(pe);
                touched.push(a);
                touched.push(b);
            }
            touched.sort_unstable();
            touched.dedup();
            for x in touched {
                used[x] = g
                    .incident_edges(x)
                    .iter()
                    .filter_map(|&ej| colors[ej])
                    .collect();
            }
        }

        // First fan prefix whose tip has d free (after the inversion).
        let mut w_idx = 0;
        for (i, &x) in fan_vertices.iter().enumerate() {
            if is_free(&used, x, d) {
                w_idx = i;
                break;
            }
        }

        // Rotate the prefix and close with d.
        for i in 1..=w_idx {
            let next = colors[fan_edges[i]].expect("fan spokes beyond the first are colored");
            let target = fan_edges[i - 1];
            if let Some(old) = colors[target] {
                let (a, b) = g.edge(target);
                used[a].remove(&old);
                used[b].remove(&old);
            }
            let (a, b) = g.edge(target);
            // the rotation frees `next` at its old spoke before reuse
            let src = fan_edges[i];
            let (sa, sb) = g.edge(src);
            used[sa].remove(&next);
            used[sb].remove(&next);
            colors[src] = None;
            used[a].insert(next);
            used[b].insert(next);
            colors[target] = Some(next);
        }
        let target = fan_edges[w_idx];
        if let Some(old) = colors[target] {
            let (a, b) = g.edge(target);
            used[a].remove(&old);
            used[b].remove(&old);
        }
        let (a, b) = g.edge(target);
        used[a].insert(d);
        used[b].insert(d);
        colors[target] = Some(d);
    }

    colors.into_iter().map(|c| c.expect("all edges colored")).collect()
}

/// Proper edge coloring of a bipartite graph with exactly Δ colors, by
/// alternating-path recoloring. Errors on non-bipartite input.
pub fn konig_bipartite_edge_color(g: &Graph) -> Result<Vec<usize>> {
    g.bipartition()?;
    let delta = g.max_degree();
    let mut colors: Vec<Option<usize>> = vec![None; g.n_edges()];
    let mut used: Vec<Vec<bool>> = vec![vec![false; delta]; g.n_vertices()];

    let free = |used: &[Vec<bool>], v: usize| -> usize {
        used[v].iter().position(|&b| !b).expect("degree bound leaves a free color")
    };

    for ei in 0..g.n_edges() {
        let (u, v) = g.edge(ei);
        let alpha = free(&used, u);
        let beta = free(&used, v);
        if alpha != beta {
            // Flip the alpha/beta-alternating path out of v; in a bipartite
            // graph it cannot end at u, so alpha becomes free at v while
            // staying free at u.
            let mut path = Vec::new();
            let mut cur = v;
            let mut want = alpha;
            loop {
                let mut next = None;
                for &ej in g.incident_edges(cur) {
                    if colors[ej] == Some(want) {
                        next = Some(ej);
                        break;
                    }
                }
                let Some(ej) = next else { break };
                path.push(ej);
                let (a, b) = g.edge(ej);
                cur = if a == cur { b } else { a };
                want = if want == alpha { beta } else { alpha };
            }
            let mut touched = Vec::new();
            for &ej in &path {
                let old = colors[ej].unwrap();
                colors[ej] = Some(if old == alpha { beta } else { alpha });
                let (a, b) = g.edge(ej);
                touched.push(a);
                touched.push(b);
            }
            touched.sort_unstable();
            touched.dedup();
            for x in touched {
                for c in 0..delta {
                    used[x][c] = false;
                }
                for &ej in g.incident_edges(x) {
                    if let Some(c) = colors[ej] {
                        used[x][c] = true;
                    }
                }
            }
        }
        colors[ei] = Some(alpha);
        used[u][alpha] = true;
        used[v][alpha] = true;
    }
    Ok(colors.into_iter().map(|c| c.expect("all colored")).collect())
}

/// Maximum matching between two disjoint vertex sets by augmenting paths
/// (deterministic scan order by vertex index).
pub fn matching_between_classes(g: &Graph, a: &[usize], b: &[usize]) -> Result<Matching> {
    let mut in_a = vec![false; g.n_vertices()];
    let mut in_b = vec![false; g.n_vertices()];
    for &x in a {
        in_a[x] = true;
    }
    for &x in b {
        if in_a[x] {
            return Err(Error::InvalidParams(format!("classes not disjoint at vertex {x}")));
        }
        in_b[x] = true;
    }
    let mut mate_b: Vec<Option<usize>> = vec![None; g.n_vertices()];

    fn augment(
        g: &Graph,
        x: usize,
        in_b: &[bool],
        mate_b: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &y in g.neighbors(x) {
            if in_b[y] && !seen[y] {
                seen[y] = true;
                if mate_b[y].is_none() || augment(g, mate_b[y].unwrap(), in_b, mate_b, seen) {
                    mate_b[y] = Some(x);
                    return true;
                }
            }
        }
        false
    }

    let mut a_sorted = a.to_vec();
    a_sorted.sort_unstable();
    let mut size = 0usize;
    for &x in &a_sorted {
        let mut seen = vec![false; g.n_vertices()];
        if augment(g, x, &in_b, &mut mate_b, &mut seen) {
            size += 1;
        }
    }
    let mut edge_ids = Vec::with_capacity(size);
    for y in 0..g.n_vertices() {
        if let Some(x) = mate_b[y] {
            edge_ids.push(g.edge_id(x, y).expect("matched along an edge"));
        }
    }
    edge_ids.sort_unstable();
    Ok(Matching {
        edge_ids,
        perfect: size == a.len() && size == b.len(),
    })
}

/// Greedy total coloring (vertices then edges of the total graph in index
/// order); used as the baseline strategy, never as a correctness oracle.
pub fn greedy_total_color(g: &Graph) -> crate::coloring::TotalColoring {
    let mut c = crate::coloring::TotalColoring::empty(g);
    for v in 0..g.n_vertices() {
        let mut used: HashSet<usize> = HashSet::new();
        for &w in g.neighbors(v) {
            if let Some(cw) = c.vertex_color(w) {
                used.insert(cw);
            }
        }
        c.set_vertex(v, (0..).find(|x| !used.contains(x)).unwrap());
    }
    for ei in 0..g.n_edges() {
        let (u, v) = g.edge(ei);
        let mut used: HashSet<usize> = HashSet::new();
        used.insert(c.vertex_color(u).unwrap());
        used.insert(c.vertex_color(v).unwrap());
        for &x in [u, v].iter() {
            for &ej in g.incident_edges(x) {
                if let Some(ce) = c.edge_color(ej) {
                    used.insert(ce);
                }
            }
        }
        c.set_edge(ei, (0..).find(|x| !used.contains(x)).unwrap());
    }
    c
}

/// Checks a proper edge coloring (no two incident edges share a color).
pub fn is_proper_edge_coloring(g: &Graph, colors: &[usize]) -> bool {
    if colors.len() != g.n_edges() {
        return false;
    }
    for v in 0..g.n_vertices() {
        let inc = g.incident_edges(v);
        for i in 0..inc.len() {
            for j in i + 1..inc.len() {
                if colors[inc[i]] == colors[inc[j]] {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite_graph, complete_graph, cycle_graph, path_graph, petersen_graph};

    fn palette(colors: &[usize]) -> usize {
        colors.iter().max().map_or(0, |m| m + 1)
    }

    #[test]
    fn mg_on_k4_within_bound() {
        let g = complete_graph(4).unwrap();
        let colors = misra_gries_edge_color(&g);
        assert!(is_proper_edge_coloring(&g, &colors));
        assert!(palette(&colors) <= g.max_degree() + 1);
    }

    #[test]
    fn mg_on_c5_needs_three() {
        let g = cycle_graph(5).unwrap();
        let colors = misra_gries_edge_color(&g);
        assert!(is_proper_edge_coloring(&g, &colors));
        assert_eq!(palette(&colors), 3);
    }

    #[test]
    fn mg_on_petersen_exactly_four() {
        let g = petersen_graph().unwrap();
        let colors = misra_gries_edge_color(&g);
        assert!(is_proper_edge_coloring(&g, &colors));
        // class 2 graph: 3 colors impossible, bound gives <= 4
        assert_eq!(palette(&colors), 4);
    }

    #[test]
    fn konig_k33_exactly_delta() {
        let g = complete_bipartite_graph(3, 3).unwrap();
        let colors = konig_bipartite_edge_color(&g).unwrap();
        assert!(is_proper_edge_coloring(&g, &colors));
        assert_eq!(palette(&colors), 3);
    }

    #[test]
    fn konig_even_cycle_two_colors() {
        let g = cycle_graph(6).unwrap();
        let colors = konig_bipartite_edge_color(&g).unwrap();
        assert!(is_proper_edge_coloring(&g, &colors));
        assert_eq!(palette(&colors), 2);
    }

    #[test]
    fn konig_path_two_colors() {
        let g = path_graph(4).unwrap();
        let colors = konig_bipartite_edge_color(&g).unwrap();
        assert!(is_proper_edge_coloring(&g, &colors));
        assert_eq!(palette(&colors), 2);
    }

    #[test]
    fn konig_rejects_odd_cycle() {
        let g = cycle_graph(5).unwrap();
        assert!(konig_bipartite_edge_color(&g).is_err());
    }

    #[test]
    fn matching_between_c6_sides_is_perfect() {
        let g = cycle_graph(6).unwrap();
        let m = matching_between_classes(&g, &[0, 2, 4], &[1, 3, 5]).unwrap();
        assert_eq!(m.edge_ids.len(), 3);
        assert!(m.perfect);
    }

    #[test]
    fn unbalanced_classes_not_perfect() {
        let g = complete_bipartite_graph(2, 3).unwrap();
        let m = matching_between_classes(&g, &[0, 1], &[2, 3, 4]).unwrap();
        assert_eq!(m.edge_ids.len(), 2);
        assert!(!m.perfect);
    }
}
