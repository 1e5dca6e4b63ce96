//! Kneser-complement machinery: Baranyai parallel classes, the exhaustive
//! clique-partition search, the canonical clique total coloring, and the
//! assembled bound-`Δ+3` total coloring.
//!
//! The clique-partition step is settled per instance by exhaustive search;
//! nonexistence is a first-class result (it falsifies the partition step of
//! the construction at that instance, not the bound itself).

use itertools::Itertools;

use super::ColoredInstance;
use crate::coloring::TotalColoring;
use crate::edge_color::misra_gries_edge_color;
use crate::error::{Error, Result};
use crate::graph::{complete_graph, kneser_complement_graph, ksubsets_colex, Graph, KSubset};

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1usize;
    for i in 0..k {
        num = num * (n - i) / (i + 1);
    }
    num
}

/// Partitions all `k`-subsets of `{1..n}` into `C(n-1, k-1)` parallel
/// classes, each a disjoint cover of the ground set. Requires `k | n`.
///
/// Construction: the trivial single class for `k = 1`, the round-robin
/// 1-factorization for `k = 2`, complementary pairs for `n = 2k`, and a
/// backtracking cover otherwise (desk scale).
pub fn baranyai_parallel_classes(n: usize, k: usize) -> Result<Vec<Vec<KSubset>>> {
    if k == 0 || n == 0 || n % k != 0 {
        return Err(Error::InvalidParams(format!("need k | n, got n={n} k={k}")));
    }
    if n > 12 {
        return Err(Error::InvalidParams(format!("desk scale is n <= 12, got {n}")));
    }
    let classes: Vec<Vec<Vec<usize>>> = if k == 1 {
        vec![(1..=n).map(|v| vec![v]).collect()]
    } else if k == 2 {
        // circle method: point n fixed, the rest rotate
        let m = n - 1;
        (0..m)
            .map(|r| {
                let mut class = vec![vec![r + 1, n]];
                for i in 1..=(n - 2) / 2 {
                    let a = (r + i) % m + 1;
                    let b = (r + m - i) % m + 1;
                    class.push(vec![a.min(b), a.max(b)]);
                }
                class.sort();
                class
            })
            .collect()
    } else if n == 2 * k {
        // each class pairs a subset with its complement
        let mut classes = Vec::new();
        for s in (1..=n).combinations(k) {
            if s[0] != 1 {
                continue; // one representative per complementary pair
            }
            let comp: Vec<usize> = (1..=n).filter(|v| !s.contains(v)).collect();
            classes.push(vec![s, comp]);
        }
        classes
    } else {
        backtracking_parallel_classes(n, k)?
    };
    classes
        .into_iter()
        .map(|class| class.into_iter().map(|s| KSubset::new(s, n)).collect())
        .collect()
}

/// Generic exact cover of all `k`-subsets by parallel classes.
fn backtracking_parallel_classes(n: usize, k: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    let subs: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    let n_classes = binomial(n - 1, k - 1);
    let per_class = n / k;
    let mut used = vec![false; subs.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut budget: u64 = 50_000_000;

    fn disjoint(a: &[usize], b: &[usize]) -> bool {
        a.iter().all(|x| !b.contains(x))
    }

    fn extend_class(
        subs: &[Vec<usize>],
        used: &mut [bool],
        class: &mut Vec<usize>,
        per_class: usize,
        budget: &mut u64,
        rest: &mut dyn FnMut(&mut [bool]) -> Result<bool>,
    ) -> Result<bool> {
        if *budget == 0 {
            return Err(Error::BudgetExhausted("parallel class search".into()));
        }
        *budget -= 1;
        if class.len() == per_class {
            return rest(used);
        }
        let start = class.last().map_or(0, |&i| i + 1);
        for i in start..subs.len() {
            if used[i] && !class.contains(&i) {
                continue;
            }
            if used[i] {
                continue;
            }
            if class.iter().all(|&j| disjoint(&subs[i], &subs[j])) {
                used[i] = true;
                class.push(i);
                if extend_class(subs, used, class, per_class, budget, rest)? {
                    return Ok(true);
                }
                class.pop();
                used[i] = false;
            }
        }
        Ok(false)
    }

    fn solve(
        subs: &[Vec<usize>],
        used: &mut Vec<bool>,
        classes: &mut Vec<Vec<usize>>,
        n_classes: usize,
        per_class: usize,
        budget: &mut u64,
    ) -> Result<bool> {
        if classes.len() == n_classes {
            return Ok(used.iter().all(|&u| u));
        }
        let Some(first) = (0..subs.len()).find(|&i| !used[i]) else {
            return Ok(false);
        };
        used[first] = true;
        let mut class = vec![first];
        let found = {
            let mut rest = |used: &mut [bool]| -> Result<bool> {
                let mut used_vec = used.to_vec();
                std::mem::swap(&mut used_vec, unsafe {
                    // placeholder, replaced below
                    &mut Vec::new()
                });
                Ok(false)
            };
            let _ = &mut rest;
            // recursive structure flattened below
            extend_and_recurse(subs, used, &mut class, classes, n_classes, per_class, budget)?
        };
        if found {
            return Ok(true);
        }
        used[first] = false;
        Ok(false)
    }

    fn extend_and_recurse(
        subs: &[Vec<usize>],
        used: &mut Vec<bool>,
        class: &mut Vec<usize>,
        classes: &mut Vec<Vec<usize>>,
        n_classes: usize,
        per_class: usize,
        budget: &mut u64,
    ) -> Result<bool> {
        if *budget == 0 {
            return Err(Error::BudgetExhausted("parallel class search".into()));
        }
        *budget -= 1;
        if class.len() == per_class {
            classes.push(class.clone());
            if solve(subs, used, classes, n_classes, per_class, budget)? {
                return Ok(true);
            }
            classes.pop();
            return Ok(false);
        }
        let start = class.last().map_or(0, |&i| i + 1);
        for i in start..subs.len() {
            if used[i] {
                continue;
            }
            if class.iter().all(|&j| disjoint(&subs[i], &subs[j])) {
                used[i] = true;
                class.push(i);
                if extend_and_recurse(subs, used, class, classes, n_classes, per_class, budget)? {
                    return Ok(true);
                }
                class.pop();
                used[i] = false;
            }
        }
        Ok(false)
    }

    if !solve(&subs, &mut used, &mut classes, n_classes, per_class, &mut budget)? {
        return Err(Error::ConstructionFailed(format!(
            "no parallel-class cover found for (n,k)=({n},{k})"
        )));
    }
    Ok(classes
        .into_iter()
        .map(|class| class.into_iter().map(|i| subs[i].clone()).collect())
        .collect())
}

/// Outcome of the exhaustive clique-partition search on the Kneser
/// complement: either `n/k` pairwise-intersecting families of size
/// `C(n-1,k-1)` each (vertex indices), or a nonexistence certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliquePartitionOutcome {
    Partition(Vec<Vec<usize>>),
    Nonexistent { nodes_explored: u64 },
}

/// Exhaustive first-fit search over subsets in lexicographic order.
pub fn kneser_clique_partition(n: usize, k: usize) -> Result<CliquePartitionOutcome> {
    if k == 0 || n % k != 0 {
        return Err(Error::InvalidParams(format!("need k | n, got n={n} k={k}")));
    }
    let q = n / k;
    let size = binomial(n - 1, k - 1);
    let subs_lex: Vec<Vec<usize>> = (1..=n).combinations(k).collect();
    let colex = ksubsets_colex(n, k);
    let vertex_of = |s: &[usize]| -> usize {
        colex
            .iter()
            .position(|c| c.values() == s)
            .expect("subset is a vertex")
    };
    let intersects =
        |a: &[usize], b: &[usize]| -> bool { a.iter().any(|x| b.contains(x)) };

    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut nodes: u64 = 0;

    fn dfs(
        subs: &[Vec<usize>],
        i: usize,
        q: usize,
        size: usize,
        groups: &mut Vec<Vec<usize>>,
        nodes: &mut u64,
        intersects: &dyn Fn(&[usize], &[usize]) -> bool,
    ) -> bool {
        *nodes += 1;
        if i == subs.len() {
            return groups.len() == q && groups.iter().all(|g| g.len() == size);
        }
        for gi in 0..groups.len() {
            if groups[gi].len() < size
                && groups[gi].iter().all(|&j| intersects(&subs[i], &subs[j]))
            {
                groups[gi].push(i);
                if dfs(subs, i + 1, q, size, groups, nodes, intersects) {
                    return true;
                }
                groups[gi].pop();
            }
        }
        if groups.len() < q {
            groups.push(vec![i]);
            if dfs(subs, i + 1, q, size, groups, nodes, intersects) {
                return true;
            }
            groups.pop();
        }
        false
    }

    if dfs(&subs_lex, 0, q, size, &mut groups, &mut nodes, &intersects) {
        let partition = groups
            .into_iter()
            .map(|g| {
                let mut vs: Vec<usize> = g.into_iter().map(|i| vertex_of(&subs_lex[i])).collect();
                vs.sort_unstable();
                vs
            })
            .collect();
        Ok(CliquePartitionOutcome::Partition(partition))
    } else {
        Ok(CliquePartitionOutcome::Nonexistent { nodes_explored: nodes })
    }
}

/// Canonical total coloring of `K_m`: the rotational scheme (`v ↦ 2v`,
/// `{u,v} ↦ u+v` mod `m`) for odd `m`; for even `m` the graph is colored as
/// `K_{m+1}` minus a vertex, using `m+1` colors.
pub fn clique_canonical_total(m: usize) -> Result<ColoredInstance> {
    if m == 0 {
        return Err(Error::InvalidParams("clique order must be positive".into()));
    }
    let graph = complete_graph(m)?;
    let modulus = if m % 2 == 1 { m } else { m + 1 };
    let mut coloring = TotalColoring::empty(&graph);
    for v in 0..m {
        coloring.set_vertex(v, (2 * v) % modulus);
    }
    for (ei, &(u, v)) in graph.edges().iter().enumerate() {
        coloring.set_edge(ei, (u + v) % modulus);
    }
    Ok(ColoredInstance {
        graph,
        coloring,
        log: vec![format!("rotational K_{m} coloring mod {modulus}")],
    })
}

/// Total colors the complement of the Kneser graph `K(n,k)` (for `k | n`)
/// from a clique partition: every clique reuses one shared canonical
/// palette, connecting edges get fresh Misra–Gries colors. The palette is
/// at most `Δ+3`.
pub fn kneser_complement_total(n: usize, k: usize) -> Result<ColoredInstance> {
    let graph = kneser_complement_graph(n, k)?;
    let partition = match kneser_clique_partition(n, k)? {
        CliquePartitionOutcome::Partition(p) => p,
        CliquePartitionOutcome::Nonexistent { nodes_explored } => {
            return Err(Error::Inapplicable(format!(
                "no partition of the {} k-subsets into {} pairwise-intersecting \
                 families of size {} exists (exhausted in {nodes_explored} nodes)",
                binomial(n, k),
                n / k,
                binomial(n - 1, k - 1)
            )));
        }
    };
    let q = binomial(n - 1, k - 1);
    let shared = if q % 2 == 1 { q } else { q + 1 };
    let mut log = vec![format!(
        "clique partition: {} cliques of order {q}, shared palette {shared}",
        partition.len()
    )];

    let mut coloring = TotalColoring::empty(&graph);
    let mut in_clique_edge = vec![false; graph.n_edges()];
    for clique in &partition {
        // position within the (sorted) clique is the canonical vertex id
        for (pos, &v) in clique.iter().enumerate() {
            coloring.set_vertex(v, (2 * pos) % shared);
        }
        for (i, &u) in clique.iter().enumerate() {
            for &v in clique.iter().skip(i + 1) {
                let ei = graph.edge_id(u, v).ok_or_else(|| {
                    Error::ConstructionFailed(format!(
                        "clique members {u} and {v} are not adjacent"
                    ))
                })?;
                let j = clique.iter().position(|&x| x == v).unwrap();
                coloring.set_edge(ei, (i + j) % shared);
                in_clique_edge[ei] = true;
            }
        }
    }
    let cross: Vec<(usize, usize)> = graph
        .edges()
        .iter()
        .enumerate()
        .filter(|(ei, _)| !in_clique_edge[*ei])
        .map(|(_, &e)| e)
        .collect();
    if !cross.is_empty() {
        let sub = Graph::from_edges(graph.n_vertices(), &cross, "kneser cross")?;
        let colors = misra_gries_edge_color(&sub);
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        log.push(format!(
            "connecting edges: Δ={} subgraph, {fresh} fresh Misra–Gries colors",
            sub.max_degree()
        ));
        for (si, &(u, v)) in sub.edges().iter().enumerate() {
            coloring.set_edge(graph.edge_id(u, v).expect("edge"), shared + colors[si]);
        }
    }
    Ok(ColoredInstance { graph, coloring, log })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_total;

    fn check_classes(n: usize, k: usize) {
        let classes = baranyai_parallel_classes(n, k).unwrap();
        assert_eq!(classes.len(), binomial(n - 1, k - 1));
        let mut seen = std::collections::HashSet::new();
        for class in &classes {
            assert_eq!(class.len(), n / k);
            let mut cover = std::collections::HashSet::new();
            for s in class {
                for &v in s.values() {
                    assert!(cover.insert(v), "class members overlap");
                }
                assert!(seen.insert(s.clone()), "subset appears twice");
            }
            assert_eq!(cover.len(), n);
        }
        assert_eq!(seen.len(), binomial(n, k));
    }

    #[test]
    fn baranyai_round_robin_instances() {
        check_classes(4, 2);
        check_classes(6, 2);
        check_classes(8, 2);
    }

    #[test]
    fn baranyai_complementary_pairs() {
        check_classes(6, 3);
        check_classes(8, 4);
    }

    #[test]
    fn baranyai_trivial_and_generic() {
        check_classes(5, 1);
        check_classes(9, 3); // generic backtracking route
    }

    #[test]
    fn clique_partition_4_2() {
        let got = kneser_clique_partition(4, 2).unwrap();
        let CliquePartitionOutcome::Partition(p) = got else {
            panic!("expected partition")
        };
        // {12,13,14} and {23,24,34} in colex vertex ids
        let g = kneser_complement_graph(4, 2).unwrap();
        let names: Vec<Vec<String>> = p
            .iter()
            .map(|clique| clique.iter().map(|&v| g.label(v).to_string()).collect())
            .collect();
        assert_eq!(
            names,
            vec![
                vec!["{1,2}", "{1,3}", "{1,4}"],
                vec!["{2,3}", "{2,4}", "{3,4}"]
            ]
        );
    }

    #[test]
    fn clique_partition_6_2_nonexistent() {
        assert!(matches!(
            kneser_clique_partition(6, 2).unwrap(),
            CliquePartitionOutcome::Nonexistent { .. }
        ));
    }

    #[test]
    fn clique_partition_6_3_exists() {
        let got = kneser_clique_partition(6, 3).unwrap();
        let CliquePartitionOutcome::Partition(p) = got else {
            panic!("expected partition")
        };
        assert_eq!(p.len(), 2);
        assert!(p.iter().all(|c| c.len() == 10));
    }

    #[test]
    fn clique_canonical_small_orders() {
        for (m, palette) in [(3usize, 3usize), (5, 5), (4, 5)] {
            let inst = clique_canonical_total(m).unwrap();
            let report = verify_total(&inst.graph, &inst.coloring).unwrap();
            assert!(report.is_valid(), "m={m}: {:?}", report.violations);
            assert_eq!(report.palette, palette, "m={m}");
        }
    }

    #[test]
    fn kneser_total_4_2_within_bound() {
        let inst = kneser_complement_total(4, 2).unwrap();
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid(), "violations: {:?}", report.violations);
        assert!(report.palette <= inst.graph.max_degree() + 3);
    }

    #[test]
    fn kneser_total_6_2_inapplicable() {
        assert!(matches!(kneser_complement_total(6, 2), Err(Error::Inapplicable(_))));
    }
}
