//! Permutations of `{1..n}` stored as image sequences.
//!
//! Composition is right-to-left: `compose(p, q)` applies `q` first, then `p`.
//! Cycle notation is parsed and printed in canonical form (each cycle starts
//! at its smallest moved symbol, cycles ordered by that symbol); the identity
//! prints as `e`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A bijection on `{1..n}`; `images[i]` is the image of symbol `i+1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-indexed images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (1..=n).collect(),
        }
    }

    /// The transposition `(a b)` on `n` symbols.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycle(n, &[a, b])
    }

    /// A single cycle `(c0 c1 ... ck)` on `n` symbols.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut images: Vec<usize> = (1..=n).collect();
        for w in cycle.windows(2) {
            if w[0] == 0 || w[0] > n || w[1] > n {
                return Err(Error::InvalidPermutation(format!(
                    "cycle symbol out of range 1..={n}"
                )));
            }
            images[w[0] - 1] = w[1];
        }
        if let (Some(&last), Some(&first)) = (cycle.last(), cycle.first()) {
            if last == 0 || last > n {
                return Err(Error::InvalidPermutation(format!(
                    "cycle symbol out of range 1..={n}"
                )));
            }
            images[last - 1] = first;
        }
        Self::from_images(images)
    }

    /// The forward `n`-cycle `(1 2 ... n)`.
    pub fn forward_cycle(n: usize) -> Self {
        let syms: Vec<usize> = (1..=n).collect();
        Self::from_cycle(n, &syms).expect("valid cycle")
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of symbol `i` (1-indexed).
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `self ∘ rhs`: applies `rhs` first, then `self`.
    pub fn compose(&self, rhs: &Self) -> Result<Self> {
        if self.degree() != rhs.degree() {
            return Err(Error::DegreeMismatch(self.degree(), rhs.degree()));
        }
        Ok(Self {
            images: rhs.images.iter().map(|&v| self.images[v - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0usize; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Self { images: inv }
    }

    /// Position of symbol `s`, i.e. `self⁻¹(s)`.
    pub fn position_of(&self, s: usize) -> usize {
        self.images.iter().position(|&v| v == s).expect("in range") + 1
    }

    /// +1 for even permutations, -1 for odd.
    pub fn sign(&self) -> i8 {
        if self.is_even() {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut odd_transpositions = 0usize;
        for i in 0..n {
            if !seen[i] {
                let mut j = i;
                let mut len = 0usize;
                while !seen[j] {
                    seen[j] = true;
                    j = self.images[j] - 1;
                    len += 1;
                }
                odd_transpositions += len - 1;
            }
        }
        odd_transpositions % 2 == 0
    }

    /// Re-embeds into `S_m` for `m >= degree`, fixing the new top symbols.
    pub fn extend_to(&self, m: usize) -> Result<Self> {
        if m < self.degree() {
            return Err(Error::InvalidParams(format!(
                "cannot shrink degree {} to {m}",
                self.degree()
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=m);
        Ok(Self { images })
    }

    /// Disjoint cycles, each rotated to start at its smallest symbol,
    /// ordered by that symbol. Fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if !seen[i] && self.images[i] != i + 1 {
                let mut cycle = Vec::new();
                let mut j = i;
                while !seen[j] {
                    seen[j] = true;
                    cycle.push(j + 1);
                    j = self.images[j] - 1;
                }
                out.push(cycle);
            }
        }
        out
    }

    /// Parses cycle notation like `"(1 2)(3 4)"` or `"e"` at a given degree.
    pub fn parse_cycles(n: usize, input: &str) -> Result<Self> {
        let s = input.trim();
        if s == "e" || s.is_empty() || s == "()" {
            return Ok(Self::identity(n));
        }
        let mut result = Self::identity(n);
        let mut rest = s;
        let mut cycles = Vec::new();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| Error::CycleParse {
                input: input.to_string(),
                reason: "expected '('".into(),
            })?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::CycleParse {
                    input: input.to_string(),
                    reason: format!("unexpected text {:?}", &rest[..open]),
                });
            }
            let close = rest.find(')').ok_or_else(|| Error::CycleParse {
                input: input.to_string(),
                reason: "unbalanced '('".into(),
            })?;
            let body = &rest[open + 1..close];
            let syms: Vec<usize> = body
                .split([' ', ','])
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>().map_err(|_| Error::CycleParse {
                        input: input.to_string(),
                        reason: format!("bad symbol {t:?}"),
                    })
                })
                .collect::<Result<_>>()?;
            if syms.len() < 2 {
                return Err(Error::CycleParse {
                    input: input.to_string(),
                    reason: "cycle needs at least two symbols".into(),
                });
            }
            cycles.push(syms);
            rest = &rest[close + 1..];
        }
        // Disjoint cycles commute, so composition order does not matter here;
        // overlapping input cycles are rejected.
        let mut moved = vec![false; n];
        for syms in &cycles {
            for &v in syms {
                if v == 0 || v > n {
                    return Err(Error::CycleParse {
                        input: input.to_string(),
                        reason: format!("symbol {v} out of range 1..={n}"),
                    });
                }
                if moved[v - 1] {
                    return Err(Error::CycleParse {
                        input: input.to_string(),
                        reason: format!("symbol {v} appears in two cycles"),
                    });
                }
                moved[v - 1] = true;
            }
            result = result.compose(&Self::from_cycle(n, syms)?)?;
        }
        Ok(result)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, s) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(n, s).unwrap()
    }

    #[test]
    fn compose_identity_is_neutral() {
        let e = Permutation::identity(4);
        let x = p(4, "(1 2 4)");
        assert_eq!(e.compose(&x).unwrap(), x);
        assert_eq!(x.compose(&e).unwrap(), x);
    }

    #[test]
    fn compose_applies_right_operand_first() {
        // 1→3→3, 2→2→1, 3→1→2
        let got = p(3, "(1 2)").compose(&p(3, "(1 3)")).unwrap();
        assert_eq!(got.images(), &[3, 1, 2]);
        assert_eq!(got.to_string(), "(1 3 2)");
    }

    #[test]
    fn inverse_of_forward_cycle_is_reverse() {
        let n = 6;
        let c = Permutation::forward_cycle(n);
        let mut rev: Vec<usize> = (1..=n).rev().collect();
        rev.rotate_left(n - 1); // (n n-1 ... 1) as a cycle starting anywhere
        assert_eq!(c.inverse(), Permutation::from_cycle(n, &rev).unwrap());
        assert!(c.compose(&c.inverse()).unwrap().is_identity());
    }

    #[test]
    fn inverse_of_three_cycle() {
        assert_eq!(p(3, "(1 2 3)").inverse(), p(3, "(1 3 2)"));
    }

    #[test]
    fn parity_of_cycles() {
        assert!(p(4, "(1 2 3)").is_even());
        assert!(!p(4, "(1 2)").is_even());
        // an n-cycle has sign (-1)^(n-1)
        assert!(!Permutation::forward_cycle(4).is_even());
        assert!(Permutation::forward_cycle(5).is_even());
    }

    #[test]
    fn cycle_notation_roundtrip_and_canonical_form() {
        let x = p(5, "(2 5)(1 3)");
        assert_eq!(x.to_string(), "(1 3)(2 5)");
        assert_eq!(Permutation::parse_cycles(5, &x.to_string()).unwrap(), x);
        assert_eq!(Permutation::identity(3).to_string(), "e");
        assert_eq!(Permutation::parse_cycles(3, "e").unwrap(), Permutation::identity(3));
    }

    #[test]
    fn parse_rejects_overlap_and_range() {
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1)").is_err());
    }

    #[test]
    fn extend_embeds_fixing_top_symbols() {
        let x = p(3, "(1 2)").extend_to(5).unwrap();
        assert_eq!(x.images(), &[2, 1, 3, 4, 5]);
    }
}
