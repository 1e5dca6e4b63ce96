//! Canonical total coloring of powers of cycles `C_n^k` when `(2k+1) | n`.
//!
//! Vertex `v` gets `2v mod (2k+1)` and edge `{u,v}` gets `(u+v) mod (2k+1)`.
//! All three conflict families are empty by modular identities: adjacent
//! vertices differ by `d` with `0 < |d| <= k < 2k+1`, so `2u ≢ 2v`; a vertex
//! and an incident edge collide only if `u ≡ v`; two edges at `u` collide
//! only if their far endpoints agree mod `2k+1`, impossible within a window
//! of width `2k`. Divisibility keeps the wrap-around differences in the same
//! residue classes. The color classes are arithmetic progressions with
//! common difference `2k+1`.

use super::ColoredInstance;
use crate::coloring::TotalColoring;
use crate::error::{Error, Result};
use crate::graph::{circulant_graph, Graph};

/// Difference set `{±1, …, ±k}` mod `n`.
pub fn power_cycle_diffs(n: usize, k: usize) -> Vec<usize> {
    let mut d: Vec<usize> = (1..=k).collect();
    d.extend((1..=k).rev().map(|i| n - i));
    d.sort_unstable();
    d.dedup();
    d
}

pub fn power_cycle_graph(n: usize, k: usize) -> Result<Graph> {
    circulant_graph(n, &power_cycle_diffs(n, k))
}

/// The modulus `2k+1`-coloring of `C_n^k`; rejects instances where
/// `(2k+1) ∤ n` instead of falling back.
pub fn canonical_power_cycle_total(n: usize, k: usize) -> Result<ColoredInstance> {
    let m = 2 * k + 1;
    if k == 0 {
        return Err(Error::InvalidParams("power of cycle needs k >= 1".into()));
    }
    if n < m {
        return Err(Error::InvalidParams(format!("need n >= 2k+1, got n={n} k={k}")));
    }
    if n % m != 0 {
        return Err(Error::Inapplicable(format!(
            "canonical coloring needs (2k+1) | n; got n={n}, 2k+1={m}"
        )));
    }
    let graph = power_cycle_graph(n, k)?;
    let mut coloring = TotalColoring::empty(&graph);
    for v in 0..n {
        coloring.set_vertex(v, (2 * v) % m);
    }
    for (ei, &(u, v)) in graph.edges().iter().enumerate() {
        coloring.set_edge(ei, (u + v) % m);
    }
    Ok(ColoredInstance {
        graph,
        coloring,
        log: vec![format!("canonical power-of-cycle coloring mod {m} on C_{n}^{k}")],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::verify_total;

    #[test]
    fn c12_k1_uses_three_colors() {
        let inst = canonical_power_cycle_total(12, 1).unwrap();
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.palette, 3);
    }

    #[test]
    fn c36_k4_uses_nine_colors() {
        let inst = canonical_power_cycle_total(36, 4).unwrap();
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.palette, 9);
    }

    #[test]
    fn c20_k2_uses_five_colors() {
        let inst = canonical_power_cycle_total(20, 2).unwrap();
        let report = verify_total(&inst.graph, &inst.coloring).unwrap();
        assert!(report.is_valid());
        assert_eq!(report.palette, 5);
    }

    #[test]
    fn divisibility_violation_is_rejected() {
        assert!(matches!(
            canonical_power_cycle_total(10, 1),
            Err(Error::Inapplicable(_))
        ));
    }

    #[test]
    fn classes_are_arithmetic_progressions() {
        let inst = canonical_power_cycle_total(36, 4).unwrap();
        let m = 9;
        for c in 0..m {
            let members: Vec<usize> = (0..36)
                .filter(|&v| inst.coloring.vertex_color(v) == Some(c))
                .collect();
            assert!(members.windows(2).all(|w| w[1] - w[0] == m));
        }
    }
}
