//! Regular genus: Euler characteristic of the regular embedding, hole counts,
//! and the minimum ρ over cyclic color permutations fixing the last color.

use std::fmt;

use serde::Serialize;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::halfint::HalfInteger;

/// A permutation `(ε_0, …, ε_d)` of the colors with `ε_d = d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CyclicPermutation {
    seq: Vec<usize>,
}

impl CyclicPermutation {
    pub fn new(seq: Vec<usize>) -> Result<Self> {
        if seq.len() < 2 {
            return Err(GemError::PermutationMismatch(seq));
        }
        let d = seq.len() - 1;
        let mut seen = vec![false; d + 1];
        for &c in &seq {
            if c > d || seen[c] {
                return Err(GemError::PermutationMismatch(seq));
            }
            seen[c] = true;
        }
        if seq[d] != d {
            return Err(GemError::PermutationMismatch(seq));
        }
        Ok(CyclicPermutation { seq })
    }

    pub fn dim(&self) -> usize {
        self.seq.len() - 1
    }

    pub fn colors(&self) -> &[usize] {
        &self.seq
    }

    /// Consecutive color pairs with cyclic wrap-around, `(ε_d, ε_0)` included.
    pub fn consecutive_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.seq.len();
        (0..n).map(move |i| (self.seq[i], self.seq[(i + 1) % n]))
    }

    /// The permutation with the first d entries reversed, `ε_d = d` kept.
    /// Its consecutive-pair multiset is identical, so χ is invariant.
    pub fn reversed(&self) -> Self {
        let d = self.dim();
        let mut seq: Vec<usize> = self.seq[..d].iter().rev().copied().collect();
        seq.push(d);
        CyclicPermutation { seq }
    }

    /// All d! permutations of the colors with `ε_d = d`, in lexicographic
    /// order of the leading d entries.
    pub fn all_for_dim(dim: usize) -> Vec<Self> {
        let mut head: Vec<usize> = (0..dim).collect();
        let mut out = Vec::new();
        loop {
            let mut seq = head.clone();
            seq.push(dim);
            out.push(CyclicPermutation { seq });
            if !next_permutation(&mut head) {
                break;
            }
        }
        out
    }
}

impl fmt::Display for CyclicPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.seq.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Advance to the next lexicographic permutation; false when wrapped.
fn next_permutation(seq: &mut [usize]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

fn check_permutation(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<()> {
    if eps.dim() != g.dim() {
        return Err(GemError::PermutationMismatch(eps.colors().to_vec()));
    }
    Ok(())
}

/// Euler characteristic of the regular embedding surface for `eps`:
/// the sum of consecutive-pair cycle counts plus `(1-d)·ṗ + (2-d)·p̄`.
pub fn euler_characteristic(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<i64> {
    check_permutation(g, eps)?;
    let d = g.dim() as i64;
    let stats = g.vertex_stats();
    let mut chi = (1 - d) * stats.p_dot as i64 + (2 - d) * stats.p_bar as i64;
    for (a, b) in eps.consecutive_pairs() {
        chi += g.cycle_count(a, b)? as i64;
    }
    Ok(chi)
}

/// Number of holes of the regular embedding: the `{ε_0, ε_{d-1}}`-colored
/// cycles of the boundary graph, and 0 for closed gems.
pub fn holes(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<usize> {
    check_permutation(g, eps)?;
    if g.is_closed() {
        return Ok(0);
    }
    let boundary = g.boundary_graph()?;
    holes_from_boundary(&boundary, eps)
}

fn holes_from_boundary(
    boundary: &crate::boundary::BoundaryGraph,
    eps: &CyclicPermutation,
) -> Result<usize> {
    let d = eps.dim();
    boundary.cycle_count(eps.colors()[0], eps.colors()[d - 1])
}

/// ρ_ε = 1 − χ_ε/2 − λ_ε/2, exactly.
pub fn regular_genus_for(g: &ColoredGraph, eps: &CyclicPermutation) -> Result<HalfInteger> {
    let chi = euler_characteristic(g, eps)?;
    let lambda = holes(g, eps)? as i64;
    Ok(HalfInteger::from_twice(2 - chi - lambda))
}

/// One evaluated permutation in a [`GenusReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusRow {
    pub permutation: CyclicPermutation,
    pub chi: i64,
    pub lambda: usize,
    pub rho: HalfInteger,
}

/// χ, λ and ρ for every permutation with `ε_d = d`, plus the minimum and the
/// lexicographically smallest permutation attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenusReport {
    pub rows: Vec<GenusRow>,
    pub rho: HalfInteger,
    pub argmin: CyclicPermutation,
    /// Distinct ρ values in ascending order (reversal symmetry collapses
    /// permutations pairwise, so duplicates are expected).
    pub distinct_rho: Vec<HalfInteger>,
}

/// Evaluate all permutations of the color set with `ε_d = d` and take the
/// minimum. Rows appear in lexicographic permutation order.
pub fn regular_genus(g: &ColoredGraph) -> GenusReport {
    let boundary = if g.is_closed() { None } else { Some(g.boundary_graph().expect("has boundary")) };
    let mut rows = Vec::new();
    for eps in CyclicPermutation::all_for_dim(g.dim()) {
        let chi = euler_characteristic(g, &eps).expect("permutation fits graph");
        let lambda = match &boundary {
            None => 0,
            Some(b) => holes_from_boundary(b, &eps).expect("colors are valid"),
        };
        let rho = HalfInteger::from_twice(2 - chi - lambda as i64);
        rows.push(GenusRow { permutation: eps, chi, lambda, rho });
    }
    let rho = rows.iter().map(|r| r.rho).min().expect("at least one permutation");
    let argmin = rows
        .iter()
        .find(|r| r.rho == rho)
        .expect("minimum comes from a row")
        .permutation
        .clone();
    let mut distinct_rho: Vec<HalfInteger> = rows.iter().map(|r| r.rho).collect();
    distinct_rho.sort();
    distinct_rho.dedup();
    GenusReport { rows, rho, argmin, distinct_rho }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{d3_gem, s3_gem};

    #[test]
    fn permutation_enumeration_is_lexicographic() {
        let all = CyclicPermutation::all_for_dim(3);
        assert_eq!(all.len(), 6);
        assert_eq!(all[0].colors(), &[0, 1, 2, 3]);
        assert_eq!(all[1].colors(), &[0, 2, 1, 3]);
        assert_eq!(all[5].colors(), &[2, 1, 0, 3]);
        assert!(CyclicPermutation::new(vec![0, 3, 2, 1]).is_err());
        assert!(CyclicPermutation::new(vec![0, 0, 1, 3]).is_err());
    }

    #[test]
    fn sphere_gem_has_genus_zero() {
        let g = s3_gem();
        for eps in CyclicPermutation::all_for_dim(3) {
            assert_eq!(euler_characteristic(&g, &eps).unwrap(), 2);
            assert_eq!(holes(&g, &eps).unwrap(), 0);
            assert_eq!(regular_genus_for(&g, &eps).unwrap(), HalfInteger::ZERO);
        }
        let report = regular_genus(&g);
        assert_eq!(report.rho, HalfInteger::ZERO);
        assert_eq!(report.rows.len(), 6);
        assert_eq!(report.argmin.colors(), &[0, 1, 2, 3]);
    }

    #[test]
    fn ball_gem_has_genus_zero_with_one_hole() {
        let g = d3_gem();
        for eps in CyclicPermutation::all_for_dim(3) {
            assert_eq!(euler_characteristic(&g, &eps).unwrap(), 1);
            assert_eq!(holes(&g, &eps).unwrap(), 1);
            assert_eq!(regular_genus_for(&g, &eps).unwrap(), HalfInteger::ZERO);
        }
    }

    #[test]
    fn reversal_preserves_chi() {
        let g = d3_gem();
        for eps in CyclicPermutation::all_for_dim(3) {
            let rev = eps.reversed();
            assert_eq!(
                euler_characteristic(&g, &eps).unwrap(),
                euler_characteristic(&g, &rev).unwrap()
            );
        }
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let g = s3_gem();
        let eps = CyclicPermutation::new(vec![0, 1, 2]).unwrap();
        assert!(euler_characteristic(&g, &eps).is_err());
    }
}
