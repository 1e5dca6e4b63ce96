//! Group elements and closure generation.

use std::collections::{HashMap, VecDeque};
use std::fmt::{Debug, Display};
use std::hash::Hash;

use itertools::Itertools;

use crate::dihedral::DihedralElement;
use crate::error::Result;
use crate::perm::Permutation;

/// Common surface of the two element kinds used as Cayley graph vertices.
///
/// `op` is total because callers guarantee matching degree/order; the
/// fallible entry points are the inherent `compose` methods.
pub trait GroupElement: Clone + Eq + Ord + Hash + Debug + Display {
    fn op(&self, rhs: &Self) -> Self;
    fn inv(&self) -> Self;
    fn identity_like(&self) -> Self;
    fn is_identity(&self) -> bool;
}

impl GroupElement for Permutation {
    fn op(&self, rhs: &Self) -> Self {
        self.compose(rhs).expect("same degree")
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn identity_like(&self) -> Self {
        Permutation::identity(self.degree())
    }
    fn is_identity(&self) -> bool {
        Permutation::is_identity(self)
    }
}

impl GroupElement for DihedralElement {
    fn op(&self, rhs: &Self) -> Self {
        self.compose(rhs).expect("same order")
    }
    fn inv(&self) -> Self {
        self.inverse()
    }
    fn identity_like(&self) -> Self {
        DihedralElement::identity(self.order_n())
    }
    fn is_identity(&self) -> bool {
        DihedralElement::is_identity(self)
    }
}

/// Closure of a generating set by breadth-first left multiplication.
///
/// Generators are processed in sorted order and the identity comes first, so
/// the output order is deterministic. On a generating set of the whole group
/// this is also the BFS order of the Cayley graph from the identity.
pub fn generate_group<E: GroupElement>(gens: &[E]) -> Vec<E> {
    let mut gens: Vec<E> = gens.iter().cloned().collect();
    gens.sort();
    gens.dedup();
    let start = match gens.first() {
        Some(g) => g.identity_like(),
        None => return Vec::new(),
    };
    let mut order = vec![start.clone()];
    let mut seen: HashMap<E, usize> = HashMap::new();
    seen.insert(start.clone(), 0);
    let mut queue = VecDeque::new();
    queue.push_back(start);
    while let Some(x) = queue.pop_front() {
        for s in &gens {
            let y = s.op(&x);
            if !seen.contains_key(&y) {
                seen.insert(y.clone(), order.len());
                order.push(y.clone());
                queue.push_back(y);
            }
        }
    }
    order
}

/// All of `S_n` in lexicographic image order.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    (1..=n)
        .permutations(n)
        .map(|im| Permutation::from_images(im).expect("bijection"))
        .collect()
}

/// All of `A_n` in lexicographic image order.
pub fn alternating_group(n: usize) -> Vec<Permutation> {
    symmetric_group(n).into_iter().filter(|p| p.is_even()).collect()
}

/// All of `D_2n`: rotations `e, s, …, s^(n-1)` first, then reflections
/// `r, rs, …, rs^(n-1)`.
pub fn dihedral_group(n: usize) -> Result<Vec<DihedralElement>> {
    let mut out = Vec::with_capacity(2 * n);
    for a in 0..n {
        out.push(DihedralElement::new(n, a, false)?);
    }
    for a in 0..n {
        out.push(DihedralElement::new(n, a, true)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::{perm_generating_set, GenFamily};

    #[test]
    fn tm_generates_s3() {
        let gens = perm_generating_set(GenFamily::MinTranspositions, 3).unwrap();
        let group = generate_group(gens.elements());
        assert_eq!(group.len(), 6);
        assert!(group[0].is_identity());
    }

    #[test]
    fn star3_generates_a4() {
        let gens = perm_generating_set(GenFamily::Star3Cycles, 4).unwrap();
        let group = generate_group(gens.elements());
        assert_eq!(group.len(), 12);
        let brute = alternating_group(4);
        let mut sorted = group.clone();
        sorted.sort();
        assert_eq!(sorted, brute);
    }

    #[test]
    fn dihedral_generators_close_to_2n() {
        let n = 5;
        let gens = vec![
            DihedralElement::reflection(n, 0),
            DihedralElement::rotation(n, 1),
            DihedralElement::rotation(n, n - 1),
        ];
        assert_eq!(generate_group(&gens).len(), 2 * n);
    }

    #[test]
    fn group_sizes_at_desk_scale() {
        for n in 2..=6 {
            let gens = perm_generating_set(GenFamily::MinTranspositions, n.max(3)).unwrap();
            let size = generate_group(gens.elements()).len();
            let fact: usize = (1..=n.max(3)).product();
            assert_eq!(size, fact);
        }
        for n in [4, 5, 6] {
            let gens = perm_generating_set(GenFamily::Star3Cycles, n).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(generate_group(gens.elements()).len(), fact / 2);
        }
        for n in [3, 8, 64] {
            assert_eq!(dihedral_group(n).unwrap().len(), 2 * n);
        }
    }
}
