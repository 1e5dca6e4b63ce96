//! Total colorings of `C(S_n, {(1 2), c, c⁻¹})` and
//! `C(A_n, {(1 2 3), (1 3 2), c, c⁻¹})` with `c = (1 2 … n)`.
//!
//! The target is a Δ+1 coloring: three vertex classes with pairwise perfect
//! matchings absorbed into the third class, and the remaining regular
//! subgraph edge-colored with the minimum number of fresh colors (one color
//! for the 1-factor left by the 3-regular family, two for the even-cycle
//! remainder of the 4-regular family). The orbit search backtracks across
//! seeds and levels; exhaustion is reported as a failure, which the claims
//! layer then settles with the exact solver.

use std::collections::HashMap;

use super::sn_tm::{orbit_extend_level_multi, sn_tm_seed_classes, LevelAccept, LevelKind, LevelOutcome};
use super::ColoredInstance;
use crate::cayley::cayley_graph_perm;
use crate::coloring::{merge_partial_total, VertexPartition};
use crate::edge_color::{konig_bipartite_edge_color, matching_between_classes};
use crate::error::{Error, Result};
use crate::gens::GenFamily;
use crate::graph::{Graph, VertexLabel};
use crate::perm::Permutation;

pub const SN_CYCLE_MAX_N: usize = 5;
pub const AN_CYCLE_MAX_N: usize = 5;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CycleGroupKind {
    Sn,
    An,
}

fn perm_labels(g: &Graph) -> Result<Vec<Permutation>> {
    g.labels()
        .iter()
        .map(|l| match l {
            VertexLabel::Perm(p) => Ok(p.clone()),
            other => Err(Error::ColoringShape(format!("expected permutation label, got {other}"))),
        })
        .collect()
}

fn class_indices(
    classes: &[Vec<Permutation>; 3],
    index: &HashMap<Permutation, usize>,
    degree: usize,
) -> Result<[Vec<usize>; 3]> {
    let mut out: [Vec<usize>; 3] = Default::default();
    for (c, class) in classes.iter().enumerate() {
        for p in class {
            let embedded = p.extend_to(degree)?;
            out[c].push(*index.get(&embedded).ok_or_else(|| {
                Error::ConstructionFailed(format!("element {embedded} is not a vertex"))
            })?);
        }
    }
    Ok(out)
}

/// The four balanced proper 2/2/2 partitions of the prism `C(S_3, S)`,
/// first class containing the identity, in deterministic order.
fn prism_seed_partitions() -> Result<Vec<[Vec<Permutation>; 3]>> {
    let g = cayley_graph_perm(GenFamily::SnAdjacentCycle, 3)?;
    let elems = perm_labels(&g)?;
    let n = elems.len();
    let mut seeds = Vec::new();
    let mut color = vec![usize::MAX; n];
    let mut counts = [0usize; 3];

    fn rec(
        g: &Graph,
        elems: &[Permutation],
        v: usize,
        color: &mut [usize],
        counts: &mut [usize; 3],
        seeds: &mut Vec<[Vec<Permutation>; 3]>,
    ) {
        if v == g.n_vertices() {
            let mut classes: [Vec<Permutation>; 3] = Default::default();
            for (i, &c) in color.iter().enumerate() {
                classes[c].push(elems[i].clone());
            }
            seeds.push(classes);
            return;
        }
        for c in 0..3 {
            if counts[c] < 2 && g.neighbors(v).iter().all(|&w| color[w] != c) {
                color[v] = c;
                counts[c] += 1;
                rec(g, elems, v + 1, color, counts, seeds);
                color[v] = usize::MAX;
                counts[c] -= 1;
            }
        }
    }

    color[0] = 0;
    counts[0] = 1;
    rec(&g, &elems, 1, &mut color, &mut counts, &mut seeds);
    Ok(seeds)
}

/// Chain search for the `S_n` family: prism seeds, then one orbit level per
/// degree, accepting only partitions whose class pairs carry perfect
/// matchings at the final level.
fn sn_cycle_partition(n: usize) -> Result<(Graph, VertexPartition, Vec<String>)> {
    let g = cayley_graph_perm(GenFamily::SnAdjacentCycle, n)?;
    let seeds = prism_seed_partitions()?;
    if n == 3 {
        let elems = perm_labels(&g)?;
        let index: HashMap<Permutation, usize> = elems.iter().cloned().zip(0..).collect();
        for (si, seed) in seeds.iter().enumerate() {
            let classes = class_indices(seed, &index, 3)?;
            let part = VertexPartition::new(classes.to_vec(), g.n_vertices())?;
            let perfect = [(0, 1), (0, 2), (1, 2)].iter().all(|&(a, b)| {
                matching_between_classes(&g, &part.classes()[a], &part.classes()[b])
                    .map(|m| m.perfect)
                    .unwrap_or(false)
            });
            if part.is_proper(&g) && perfect {
                return Ok((g, part, vec![format!("prism seed #{si}")]));
            }
        }
        return Err(Error::ConstructionFailed(
            "no prism seed has pairwise perfect matchings".into(),
        ));
    }

    // alternatives tried per intermediate level before giving up on a seed
    const LEVEL_WIDTH: usize = 40;

    fn chain(
        classes: &[Vec<Permutation>; 3],
        k: usize,
        n: usize,
        log: &mut Vec<String>,
    ) -> Result<Option<[Vec<Permutation>; 3]>> {
        if k > n {
            return Ok(Some(classes.clone()));
        }
        let g = cayley_graph_perm(GenFamily::SnAdjacentCycle, k)?;
        let elems = perm_labels(&g)?;
        let index: HashMap<Permutation, usize> = elems.iter().cloned().zip(0..).collect();
        let base = class_indices(classes, &index, k)?;
        let accept = if k == n {
            LevelAccept::PerfectMatchings
        } else {
            LevelAccept::Proper
        };
        let max = if k == n { 1 } else { LEVEL_WIDTH };
        let outcomes = match orbit_extend_level_multi(
            &g,
            &base,
            k,
            LevelKind::CycleCoset,
            accept,
            4,
            500_000,
            max,
        ) {
            Ok(o) => o,
            Err(Error::BudgetExhausted(_)) => Vec::new(),
            Err(e) => return Err(e),
        };
        for outcome in outcomes {
            let next: [Vec<Permutation>; 3] = outcome
                .classes
                .clone()
                .map(|class| class.into_iter().map(|v| elems[v].clone()).collect());
            let before = log.len();
            log.push(format!("level {k}:"));
            log.extend(outcome.log.iter().map(|s| format!("  {s}")));
            if let Some(done) = chain(&next, k + 1, n, log)? {
                return Ok(Some(done));
            }
            log.truncate(before);
        }
        Ok(None)
    }

    let mut log = Vec::new();
    for (si, seed) in seeds.iter().enumerate() {
        log.push(format!("prism seed #{si}"));
        if let Some(final_classes) = chain(seed, 4, n, &mut log)? {
            let elems = perm_labels(&g)?;
            let index: HashMap<Permutation, usize> = elems.iter().cloned().zip(0..).collect();
            let classes = class_indices(&final_classes, &index, n)?;
            let part = VertexPartition::new(classes.to_vec(), g.n_vertices())?;
            return Ok((g, part, log));
        }
        log.clear();
    }
    Err(Error::ConstructionFailed(format!(
        "no orbit program over {} prism seeds yields class-pair perfect matchings at n={n}",
        seeds.len()
    )))
}

/// Seed search for the `A_n` family: the `A_4` triangles `{x, (1 2 3)∘x,
/// (1 3 2)∘x}` are assigned all `6^4` class patterns in deterministic order;
/// each seed is extended one level and accepted only with perfect matchings
/// and an even-cycle remainder (the Δ+1 witness).
fn an_cycle_partition(n: usize) -> Result<(Graph, VertexPartition, Vec<String>)> {
    let g = cayley_graph_perm(GenFamily::An3CycleNCycle, n)?;
    let elems = perm_labels(&g)?;
    let index: HashMap<Permutation, usize> = elems.iter().cloned().zip(0..).collect();

    // triangles of the embedded A_4, in vertex order
    let c123 = Permutation::parse_cycles(n, "(1 2 3)")?;
    let c132 = Permutation::parse_cycles(n, "(1 3 2)")?;
    let mut triangles: Vec<[usize; 3]> = Vec::new();
    let mut seen = vec![false; g.n_vertices()];
    // embedded A_4: even permutations fixing symbols above 4
    let mut a4: Vec<usize> = (0..g.n_vertices())
        .filter(|&v| (5..=n).all(|s| elems[v].apply(s) == s))
        .collect();
    a4.sort_unstable();
    for &v in &a4 {
        if seen[v] {
            continue;
        }
        let t1 = index[&c123.compose(&elems[v])?];
        let t2 = index[&c132.compose(&elems[v])?];
        triangles.push([v, t1, t2]);
        seen[v] = true;
        seen[t1] = true;
        seen[t2] = true;
    }
    if triangles.len() != 4 {
        return Err(Error::ConstructionFailed(format!(
            "expected 4 seed triangles, found {}",
            triangles.len()
        )));
    }

    const PATTERNS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];

    let total = 6usize.pow(triangles.len() as u32);
    for code in 0..total {
        let mut classes: [Vec<usize>; 3] = Default::default();
        let mut rem = code;
        let mut pats = vec![0usize; triangles.len()];
        for slot in (0..triangles.len()).rev() {
            pats[slot] = rem % 6;
            rem /= 6;
        }
        for (tri, &pi) in triangles.iter().zip(pats.iter()) {
            for (pos, &v) in tri.iter().enumerate() {
                classes[PATTERNS[pi][pos]].push(v);
            }
        }
        let base_classes: [Vec<Permutation>; 3] =
            classes.clone().map(|cl| cl.into_iter().map(|v| elems[v].clone()).collect());
        let base = class_indices(&base_classes, &index, n)?;
        let outcomes: Vec<LevelOutcome> = match orbit_extend_level_multi(
            &g,
            &base,
            n,
            LevelKind::CycleCoset,
            LevelAccept::MatchingsAndBipartiteRemainder,
            4,
            5_000,
            1,
        ) {
            Ok(o) => o,
            Err(Error::BudgetExhausted(_)) => continue,
            Err(e) => return Err(e),
        };
        if let Some(outcome) = outcomes.into_iter().next() {
            let mut log = vec![format!("A_4 triangle seed pattern #{code}")];
            log.extend(outcome.log);
            let part = VertexPartition::new(outcome.classes.to_vec(), g.n_vertices())?;
            return Ok((g, part, log));
        }
    }
    Err(Error::ConstructionFailed(format!(
        "no A_4 seed pattern among {total} extends to a Δ+1 witness at n={n}"
    )))
}

/// Builds and totally colors the adjacent-transposition/cycle Cayley graph.
/// On success the palette is Δ+1 (a Type I witness).
pub fn total_color_adjacent_cycle(kind: CycleGroupKind, n: usize) -> Result<ColoredInstance> {
    let (g, partition, mut log) = match kind {
        CycleGroupKind::Sn => {
            if !(3..=SN_CYCLE_MAX_N).contains(&n) {
                return Err(Error::InvalidParams(format!(
                    "sn-cycle supports 3 <= n <= {SN_CYCLE_MAX_N}, got {n}"
                )));
            }
            sn_cycle_partition(n)?
        }
        CycleGroupKind::An => {
            if n % 2 == 0 {
                return Err(Error::Inapplicable(format!(
                    "the n-cycle is an odd permutation for even n={n}, so the \
                     generating set lies outside A_{n}"
                )));
            }
            if !(5..=AN_CYCLE_MAX_N).contains(&n) {
                return Err(Error::InvalidParams(format!(
                    "an-cycle supports odd 5 <= n <= {AN_CYCLE_MAX_N}, got {n}"
                )));
            }
            an_cycle_partition(n)?
        }
    };

    let classes = partition.classes();
    let mut class_edges: Vec<Vec<usize>> = vec![Vec::new(); 3];
    for (a, b, third) in [(0usize, 1usize, 2usize), (0, 2, 1), (1, 2, 0)] {
        let m = matching_between_classes(&g, &classes[a], &classes[b])?;
        if !m.perfect {
            return Err(Error::ConstructionFailed(format!(
                "matching between classes {a} and {b} is not perfect"
            )));
        }
        log.push(format!("matching {a}-{b} absorbed into class {third}"));
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
        let sub = Graph::from_edges(g.n_vertices(), &rem_edges, "cycle remainder")?;
        let colors = konig_bipartite_edge_color(&sub)?;
        let palette = colors.iter().max().map_or(0, |m| m + 1);
        log.push(format!(
            "remainder: {}-regular, edge-colored with {palette} fresh colors",
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

    #[test]
    fn sn_cycle_n3_prism_palette_four() {
        let inst = total_color_adjacent_cycle(CycleGroupKind::Sn, 3).unwrap();
        assert_eq!(inst.graph.n_vertices(), 6);
        assert_eq!(inst.graph.max_degree(), 3);
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.palette, 4);
    }

    #[test]
    fn sn_cycle_n4_palette_four() {
        let inst = total_color_adjacent_cycle(CycleGroupKind::Sn, 4).unwrap();
        assert_eq!(inst.graph.n_vertices(), 24);
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid(), "violations: {:?}", report.violations);
        assert_eq!(report.palette, 4);
    }

    #[test]
    fn an_cycle_even_n_is_inapplicable() {
        assert!(matches!(
            total_color_adjacent_cycle(CycleGroupKind::An, 4),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn an_cycle_n5_palette_five() {
        let inst = total_color_adjacent_cycle(CycleGroupKind::An, 5).unwrap();
        assert_eq!(inst.graph.n_vertices(), 60);
        assert_eq!(inst.graph.max_degree(), 4);
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid(), "violations: {:?}", report.violations);
        assert_eq!(report.palette, 5);
    }
}
