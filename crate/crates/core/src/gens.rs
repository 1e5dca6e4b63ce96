//! Generating sets for the graph families, plus validation.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dihedral::DihedralElement;
use crate::error::{Error, Result};
use crate::group::{generate_group, GroupElement};
use crate::perm::Permutation;

/// Named families of generating sets.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenFamily {
    /// `T_m = {(1 2), (1 3), …, (1 n)}` in `S_n`.
    MinTranspositions,
    /// All transpositions of `S_n`.
    AllTranspositions,
    /// `{(1 2 3), (1 2 4), …, (1 2 n), (1 n 2), …, (1 3 2)}` in `A_n`.
    Star3Cycles,
    /// `{(1 2), (1 2 … n), (n … 2 1)}` in `S_n`.
    SnAdjacentCycle,
    /// `{(1 2 3), (1 3 2), (1 2 … n), (n … 2 1)}` in `A_n`.
    An3CycleNCycle,
    /// Rotations `s^±1 … s^±k` plus the reflection `r` in `D_2n`.
    DihedralInterval,
    /// Explicit rotation differences and reflection indices in `D_2n`.
    DihedralCustom,
}

impl fmt::Display for GenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            GenFamily::MinTranspositions => "min-transpositions",
            GenFamily::AllTranspositions => "all-transpositions",
            GenFamily::Star3Cycles => "star-3cycles",
            GenFamily::SnAdjacentCycle => "sn-adjacent-cycle",
            GenFamily::An3CycleNCycle => "an-3cycle-ncycle",
            GenFamily::DihedralInterval => "dihedral-interval",
            GenFamily::DihedralCustom => "dihedral-custom",
        };
        write!(f, "{s}")
    }
}

/// An ordered, duplicate-free set of group elements with its family tag.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratingSet<E: GroupElement> {
    elements: Vec<E>,
    family: GenFamily,
}

impl<E: GroupElement> GeneratingSet<E> {
    pub fn new(family: GenFamily, elements: Vec<E>) -> Self {
        let mut seen = HashSet::new();
        let elements = elements
            .into_iter()
            .filter(|e| seen.insert(e.clone()))
            .collect();
        Self { elements, family }
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn family(&self) -> GenFamily {
        self.family
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &E) -> bool {
        self.elements.contains(e)
    }
}

/// Builds the named permutation-group generating sets.
pub fn perm_generating_set(family: GenFamily, n: usize) -> Result<GeneratingSet<Permutation>> {
    match family {
        GenFamily::MinTranspositions => {
            if n <= 2 {
                return Err(Error::InvalidParams("min-transpositions needs n > 2".into()));
            }
            let els = (2..=n)
                .map(|i| Permutation::transposition(n, 1, i))
                .collect::<Result<Vec<_>>>()?;
            Ok(GeneratingSet::new(family, els))
        }
        GenFamily::AllTranspositions => {
            if n < 2 {
                return Err(Error::InvalidParams("all-transpositions needs n >= 2".into()));
            }
            let mut els = Vec::new();
            for a in 1..=n {
                for b in a + 1..=n {
                    els.push(Permutation::transposition(n, a, b)?);
                }
            }
            Ok(GeneratingSet::new(family, els))
        }
        GenFamily::Star3Cycles => {
            if n < 4 {
                return Err(Error::InvalidParams("star-3cycles needs n >= 4".into()));
            }
            let mut els = Vec::new();
            for m in 3..=n {
                els.push(Permutation::from_cycle(n, &[1, 2, m])?);
            }
            for m in (3..=n).rev() {
                els.push(Permutation::from_cycle(n, &[1, m, 2])?);
            }
            Ok(GeneratingSet::new(family, els))
        }
        GenFamily::SnAdjacentCycle => {
            if n < 3 {
                return Err(Error::InvalidParams("sn-adjacent-cycle needs n >= 3".into()));
            }
            let c = Permutation::forward_cycle(n);
            Ok(GeneratingSet::new(
                family,
                vec![Permutation::transposition(n, 1, 2)?, c.inverse(), c],
            ))
        }
        GenFamily::An3CycleNCycle => {
            if n < 4 {
                return Err(Error::InvalidParams("an-3cycle-ncycle needs n >= 4".into()));
            }
            let c = Permutation::forward_cycle(n);
            Ok(GeneratingSet::new(
                family,
                vec![
                    Permutation::from_cycle(n, &[1, 2, 3])?,
                    Permutation::from_cycle(n, &[1, 3, 2])?,
                    c.inverse(),
                    c,
                ],
            ))
        }
        GenFamily::DihedralInterval | GenFamily::DihedralCustom => Err(Error::InvalidParams(
            format!("{family} is a dihedral family; use the dihedral constructors"),
        )),
    }
}

/// `{s^±1 … s^±k, r}` in `D_2n`.
pub fn dihedral_interval_set(n: usize, k: usize) -> Result<GeneratingSet<DihedralElement>> {
    if k == 0 || 2 * k >= n {
        return Err(Error::InvalidParams(format!(
            "dihedral-interval needs 1 <= k < n/2, got n={n} k={k}"
        )));
    }
    let mut els = Vec::new();
    for d in 1..=k {
        els.push(DihedralElement::rotation(n, d));
    }
    for d in (1..=k).rev() {
        els.push(DihedralElement::rotation(n, n - d));
    }
    els.push(DihedralElement::reflection(n, 0));
    Ok(GeneratingSet::new(GenFamily::DihedralInterval, els))
}

/// Explicit rotation differences `t1` and reflection indices `t2` in `D_2n`.
pub fn dihedral_custom_set(n: usize, t1: &[usize], t2: &[usize]) -> Result<GeneratingSet<DihedralElement>> {
    if n == 0 {
        return Err(Error::InvalidParams("n must be positive".into()));
    }
    let mut els = Vec::new();
    for &d in t1 {
        if d == 0 || d >= n {
            return Err(Error::InvalidParams(format!("rotation difference {d} out of (0,{n})")));
        }
        if !t1.contains(&((n - d) % n)) {
            return Err(Error::InvalidGeneratingSet(format!(
                "rotation differences not inverse-closed: {d} present, {} missing",
                (n - d) % n
            )));
        }
        els.push(DihedralElement::rotation(n, d));
    }
    for &i in t2 {
        if i >= n {
            return Err(Error::InvalidParams(format!("reflection index {i} out of [0,{n})")));
        }
        els.push(DihedralElement::reflection(n, i));
    }
    Ok(GeneratingSet::new(GenFamily::DihedralCustom, els))
}

/// A property violated by a candidate generating set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GenSetViolation {
    ContainsIdentity,
    NotInverseClosed { element: String },
    NotInGroup { element: String },
    DoesNotGenerate { closure: usize, group: usize },
    Empty,
}

impl fmt::Display for GenSetViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenSetViolation::ContainsIdentity => write!(f, "contains the identity"),
            GenSetViolation::NotInverseClosed { element } => {
                write!(f, "not inverse-closed: inverse of {element} missing")
            }
            GenSetViolation::NotInGroup { element } => {
                write!(f, "element {element} lies outside the stated group")
            }
            GenSetViolation::DoesNotGenerate { closure, group } => {
                write!(f, "closure has {closure} elements, group has {group}")
            }
            GenSetViolation::Empty => write!(f, "empty generating set"),
        }
    }
}

/// Result of [`validate_generating_set`]; empty means valid.
#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    pub violations: Vec<GenSetViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks inverse-closure, identity exclusion, membership, and that the
/// closure of the set equals the stated group. Violations are data.
pub fn validate_generating_set<E: GroupElement>(
    gens: &GeneratingSet<E>,
    group: &[E],
) -> ValidationReport {
    let mut report = ValidationReport::default();
    if gens.is_empty() {
        report.violations.push(GenSetViolation::Empty);
        return report;
    }
    let group_set: HashSet<&E> = group.iter().collect();
    for e in gens.elements() {
        if e.is_identity() {
            report.violations.push(GenSetViolation::ContainsIdentity);
        }
        if !gens.contains(&e.inv()) {
            report.violations.push(GenSetViolation::NotInverseClosed {
                element: e.to_string(),
            });
        }
        if !group_set.contains(e) {
            report.violations.push(GenSetViolation::NotInGroup {
                element: e.to_string(),
            });
        }
    }
    // Closure only meaningful for in-group, non-identity sets.
    if report.is_valid() {
        let closure = generate_group(gens.elements());
        if closure.len() != group.len() {
            report.violations.push(GenSetViolation::DoesNotGenerate {
                closure: closure.len(),
                group: group.len(),
            });
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{alternating_group, symmetric_group};

    #[test]
    fn tm_matches_definition() {
        let g = perm_generating_set(GenFamily::MinTranspositions, 4).unwrap();
        let want: Vec<Permutation> = ["(1 2)", "(1 3)", "(1 4)"]
            .iter()
            .map(|s| Permutation::parse_cycles(4, s).unwrap())
            .collect();
        assert_eq!(g.elements(), &want[..]);
    }

    #[test]
    fn star3_matches_definition_at_4() {
        let g = perm_generating_set(GenFamily::Star3Cycles, 4).unwrap();
        let want: Vec<Permutation> = ["(1 2 3)", "(1 2 4)", "(1 4 2)", "(1 3 2)"]
            .iter()
            .map(|s| Permutation::parse_cycles(4, s).unwrap())
            .collect();
        assert_eq!(g.elements(), &want[..]);
    }

    #[test]
    fn dihedral_interval_d72_example() {
        // n=36, k=4: rotations ±1..±4 and r — nine generators
        let g = dihedral_interval_set(36, 4).unwrap();
        assert_eq!(g.len(), 9);
        let rots: Vec<usize> = g
            .elements()
            .iter()
            .filter(|e| !e.is_reflection())
            .map(|e| e.rot())
            .collect();
        assert_eq!(rots, vec![1, 2, 3, 4, 32, 33, 34, 35]);
    }

    #[test]
    fn validation_flags_non_generating_subset() {
        let gens = GeneratingSet::new(
            GenFamily::AllTranspositions,
            vec![Permutation::transposition(3, 1, 2).unwrap()],
        );
        let report = validate_generating_set(&gens, &symmetric_group(3));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, GenSetViolation::DoesNotGenerate { closure: 2, group: 6 })));
    }

    #[test]
    fn validation_flags_missing_inverse() {
        let gens = GeneratingSet::new(
            GenFamily::Star3Cycles,
            vec![Permutation::parse_cycles(3, "(1 2 3)").unwrap()],
        );
        let report = validate_generating_set(&gens, &symmetric_group(3));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, GenSetViolation::NotInverseClosed { .. })));
    }

    #[test]
    fn an_cycle_even_n_has_odd_cycle_outside_group() {
        // the n-cycle is odd for even n, so it cannot lie in A_n
        let gens = perm_generating_set(GenFamily::An3CycleNCycle, 4).unwrap();
        let report = validate_generating_set(&gens, &alternating_group(4));
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, GenSetViolation::NotInGroup { .. })));
        // and at odd n it is valid
        let gens5 = perm_generating_set(GenFamily::An3CycleNCycle, 5).unwrap();
        assert!(validate_generating_set(&gens5, &alternating_group(5)).is_valid());
    }

    #[test]
    fn standard_sets_validate() {
        assert!(validate_generating_set(
            &perm_generating_set(GenFamily::MinTranspositions, 4).unwrap(),
            &symmetric_group(4)
        )
        .is_valid());
        assert!(validate_generating_set(
            &perm_generating_set(GenFamily::SnAdjacentCycle, 4).unwrap(),
            &symmetric_group(4)
        )
        .is_valid());
        assert!(validate_generating_set(
            &perm_generating_set(GenFamily::Star3Cycles, 5).unwrap(),
            &alternating_group(5)
        )
        .is_valid());
    }
}
