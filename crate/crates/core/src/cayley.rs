//! Cayley graph construction and generator-induced edge factors.
//!
//! Vertices `x` and `y` are adjacent iff `x = s ∘ y` for some generator `s`
//! (generators act on the left; right multiplications are then graph
//! automorphisms, which the orbit-based colorers rely on).

use std::collections::HashMap;

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::gens::{
    dihedral_custom_set, perm_generating_set, validate_generating_set, GenFamily, GeneratingSet,
};
use crate::graph::{Graph, Recipe, VertexLabel};
use crate::group::{alternating_group, dihedral_group, generate_group, GroupElement};
use crate::perm::Permutation;

/// Builds the Cayley graph of `group` under `gens`, with vertices indexed in
/// the order of `group`. The set is validated first (inverse-closed,
/// identity-free, generates the group).
pub fn cayley_graph<E, F>(group: &[E], gens: &GeneratingSet<E>, label: F, recipe: Recipe) -> Result<Graph>
where
    E: GroupElement,
    F: Fn(&E) -> VertexLabel,
{
    let report = validate_generating_set(gens, group);
    if !report.is_valid() {
        return Err(Error::InvalidGeneratingSet(
            report
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }
    let index: HashMap<&E, usize> = group.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut edges = Vec::new();
    for (j, y) in group.iter().enumerate() {
        for s in gens.elements() {
            let x = s.op(y);
            let i = *index
                .get(&x)
                .ok_or_else(|| Error::InvalidGeneratingSet(format!("product {x} escapes the group")))?;
            edges.push((i, j));
        }
    }
    let labels = group.iter().map(|e| label(e)).collect();
    Graph::build(labels, edges, recipe)
}

/// Cayley graph for a named permutation family, vertices in BFS order.
pub fn cayley_graph_perm(family: GenFamily, n: usize) -> Result<Graph> {
    let gens = perm_generating_set(family, n)?;
    let group = generate_group(gens.elements());
    let expected: usize = match family {
        GenFamily::Star3Cycles | GenFamily::An3CycleNCycle => {
            let fact: usize = (1..=n).product();
            fact / 2
        }
        _ => (1..=n).product(),
    };
    if group.len() != expected {
        // e.g. an-3cycle-ncycle at even n closes to all of S_n
        let witness = match family {
            GenFamily::Star3Cycles | GenFamily::An3CycleNCycle => {
                validate_generating_set(&gens, &alternating_group(n))
            }
            _ => validate_generating_set(&gens, &crate::group::symmetric_group(n)),
        };
        return Err(Error::InvalidGeneratingSet(format!(
            "{family} at n={n}: {}",
            witness
                .violations
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )));
    }
    cayley_graph(
        &group,
        &gens,
        |e| VertexLabel::Perm(e.clone()),
        Recipe::CayleyPerm { family, n },
    )
}

/// Cayley graph on `D_2n`; vertices are rotations `e..s^(n-1)` then
/// reflections `r..rs^(n-1)`.
pub fn cayley_graph_dihedral(n: usize, t1: &[usize], t2: &[usize]) -> Result<Graph> {
    let gens = dihedral_custom_set(n, t1, t2)?;
    let group = dihedral_group(n)?;
    let mut t1 = t1.to_vec();
    t1.sort_unstable();
    t1.dedup();
    let mut t2 = t2.to_vec();
    t2.sort_unstable();
    t2.dedup();
    cayley_graph(
        &group,
        &gens,
        |e| VertexLabel::Dihedral(*e),
        Recipe::CayleyDihedral { n, t1, t2 },
    )
}

/// One edge class of a Cayley graph: the edges induced by a generator and its
/// inverse. Involutions induce perfect matchings, other generators disjoint
/// cycles covering every vertex (a 2-factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorFactor {
    /// Canonical representative (min of `s`, `s⁻¹`) printed for logs.
    pub generator: String,
    pub involution: bool,
    pub edge_ids: Vec<usize>,
}

impl GeneratorFactor {
    pub fn kind(&self) -> &'static str {
        if self.involution {
            "matching"
        } else {
            "2-factor"
        }
    }
}

fn factor_classes<E: GroupElement>(elements: &[E], gens: &GeneratingSet<E>, g: &Graph) -> Result<Vec<GeneratorFactor>> {
    let mut reps: Vec<E> = Vec::new();
    for s in gens.elements() {
        let rep = std::cmp::min(s.clone(), s.inv());
        if !reps.contains(&rep) {
            reps.push(rep);
        }
    }
    let mut classes: Vec<GeneratorFactor> = reps
        .iter()
        .map(|s| GeneratorFactor {
            generator: s.to_string(),
            involution: s.inv() == *s,
            edge_ids: Vec::new(),
        })
        .collect();
    for (ei, &(u, v)) in g.edges().iter().enumerate() {
        // u = s ∘ v for some generator s; class key is min(s, s⁻¹)
        let s = elements[u].op(&elements[v].inv());
        let rep = std::cmp::min(s.clone(), s.inv());
        let pos = reps
            .iter()
            .position(|r| *r == rep)
            .ok_or_else(|| Error::InvalidGeneratingSet(format!("edge {ei} not induced by any generator")))?;
        classes[pos].edge_ids.push(ei);
    }
    // Degree check: involution classes are perfect matchings, others 2-factors.
    for cls in &classes {
        let mut deg = vec![0usize; g.n_vertices()];
        for &ei in &cls.edge_ids {
            let (u, v) = g.edge(ei);
            deg[u] += 1;
            deg[v] += 1;
        }
        let want = if cls.involution { 1 } else { 2 };
        if deg.iter().any(|&d| d != want) {
            return Err(Error::InvalidGeneratingSet(format!(
                "generator class {} is not a {}",
                cls.generator,
                cls.kind()
            )));
        }
    }
    Ok(classes)
}

/// Partitions the edges of a Cayley-recipe graph by the generator pair
/// `{s, s⁻¹}` inducing them.
pub fn generator_factor_decomposition(g: &Graph) -> Result<Vec<GeneratorFactor>> {
    match g.recipe().clone() {
        Recipe::CayleyPerm { family, n } => {
            let gens = perm_generating_set(family, n)?;
            let elements: Vec<Permutation> = g
                .labels()
                .iter()
                .map(|l| match l {
                    VertexLabel::Perm(p) => Ok(p.clone()),
                    other => Err(Error::ColoringShape(format!("non-permutation label {other}"))),
                })
                .collect::<Result<_>>()?;
            factor_classes(&elements, &gens, g)
        }
        Recipe::CayleyDihedral { n, t1, t2 } => {
            let gens = dihedral_custom_set(n, &t1, &t2)?;
            let elements: Vec<DihedralElement> = g
                .labels()
                .iter()
                .map(|l| match l {
                    VertexLabel::Dihedral(d) => Ok(*d),
                    other => Err(Error::ColoringShape(format!("non-dihedral label {other}"))),
                })
                .collect::<Result<_>>()?;
            factor_classes(&elements, &gens, g)
        }
        other => Err(Error::Unsupported(format!("no Cayley recipe on {other}"))),
    }
}

/// Checks that translation by `elements[u]⁻¹ followed by elements[v]`-side
/// multiplication maps the graph onto itself (vertex-transitivity witness
/// for the pair `(u, v)`).
pub fn translation_is_automorphism<E: GroupElement>(elements: &[E], g: &Graph, u: usize, v: usize) -> bool {
    // With left-action adjacency, right translation x ↦ x ∘ t is an
    // automorphism; t = u⁻¹ ∘ v maps u to v.
    let t = elements[u].inv().op(&elements[v]);
    let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let image: Vec<usize> = match elements
        .iter()
        .map(|x| index.get(&x.op(&t)).copied())
        .collect::<Option<Vec<_>>>()
    {
        Some(im) => im,
        None => return false,
    };
    if image[u] != v {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(a, b)| g.edge_id(image[a], image[b]).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::symmetric_group;

    #[test]
    fn s3_tm_is_a_hexagon() {
        let g = cayley_graph_perm(GenFamily::MinTranspositions, 3).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges()), (6, 6));
        assert!(g.is_regular() && g.max_degree() == 2 && g.is_connected());
        assert!(g.bipartition().is_ok());
    }

    #[test]
    fn a4_star3_shape() {
        let g = cayley_graph_perm(GenFamily::Star3Cycles, 4).unwrap();
        assert_eq!((g.n_vertices(), g.n_edges(), g.max_degree()), (12, 24, 4));
    }

    #[test]
    fn dihedral_three_regular() {
        let g = cayley_graph_dihedral(5, &[1, 4], &[0]).unwrap();
        assert_eq!(g.n_vertices(), 10);
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 3);
    }

    #[test]
    fn cayley_regularity_matches_set_size() {
        let g = cayley_graph_perm(GenFamily::MinTranspositions, 4).unwrap();
        assert!(g.is_regular());
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.n_edges(), 24 * 3 / 2);
    }

    #[test]
    fn invalid_set_is_rejected() {
        let gens = GeneratingSet::new(
            GenFamily::AllTranspositions,
            vec![Permutation::transposition(3, 1, 2).unwrap()],
        );
        let group = symmetric_group(3);
        assert!(cayley_graph(
            &group,
            &gens,
            |e| VertexLabel::Perm(e.clone()),
            Recipe::Custom { name: "bad".into() }
        )
        .is_err());
    }

    #[test]
    fn an_cycle_at_even_n_is_rejected() {
        assert!(cayley_graph_perm(GenFamily::An3CycleNCycle, 4).is_err());
        assert!(cayley_graph_perm(GenFamily::An3CycleNCycle, 5).is_ok());
    }

    #[test]
    fn tm_factors_into_matchings() {
        let g = cayley_graph_perm(GenFamily::MinTranspositions, 4).unwrap();
        let classes = generator_factor_decomposition(&g).unwrap();
        assert_eq!(classes.len(), 3);
        for c in &classes {
            assert!(c.involution);
            assert_eq!(c.edge_ids.len(), 12);
        }
        let total: usize = classes.iter().map(|c| c.edge_ids.len()).sum();
        assert_eq!(total, g.n_edges());
    }

    #[test]
    fn dihedral_factor_kinds() {
        // D_12 with generators {r, s, s^5}: r-class a matching, rotation class a 2-factor
        let g = cayley_graph_dihedral(6, &[1, 5], &[0]).unwrap();
        let classes = generator_factor_decomposition(&g).unwrap();
        let matchings: Vec<_> = classes.iter().filter(|c| c.involution).collect();
        let two_factors: Vec<_> = classes.iter().filter(|c| !c.involution).collect();
        assert_eq!(matchings.len(), 1);
        assert_eq!(matchings[0].edge_ids.len(), 6);
        assert_eq!(two_factors.len(), 1);
        assert_eq!(two_factors[0].edge_ids.len(), 12);
    }

    #[test]
    fn s3_mixed_factor_decomposition() {
        let g = cayley_graph_perm(GenFamily::SnAdjacentCycle, 3).unwrap();
        let classes = generator_factor_decomposition(&g).unwrap();
        // (1 2) matching of 3 edges; {(1 2 3),(1 3 2)} 2-factor of 6 edges
        let m: usize = classes.iter().filter(|c| c.involution).map(|c| c.edge_ids.len()).sum();
        let f: usize = classes.iter().filter(|c| !c.involution).map(|c| c.edge_ids.len()).sum();
        assert_eq!((m, f), (3, 6));
    }

    #[test]
    fn sampled_translations_are_automorphisms() {
        let gens = perm_generating_set(GenFamily::MinTranspositions, 4).unwrap();
        let group = generate_group(gens.elements());
        let g = cayley_graph_perm(GenFamily::MinTranspositions, 4).unwrap();
        for (u, v) in [(0, 5), (3, 17), (11, 23), (7, 7)] {
            assert!(translation_is_automorphism(&group, &g, u, v));
        }
    }
}
