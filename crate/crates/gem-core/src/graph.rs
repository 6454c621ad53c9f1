//! The gem data model: edge-colored multigraphs regular with respect to the
//! last color, and the residue/cycle censuses everything else is built from.
//!
//! A gem of dimension `d` has colors `0..=d`, one partial matching per color.
//! Colors `0..d` must be perfect matchings; vertices missing a `d`-colored
//! edge are the boundary vertices. Loops are forbidden, parallel edges of
//! distinct colors are allowed, and the graph must be connected.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{GemError, Result};
use crate::unionfind::UnionFind;

/// An edge-colored multigraph with colors `0..=dim`, validated on construction.
///
/// Vertices are dense indices `0..vertex_count`. Equality is equality of the
/// per-color matching sets; no isomorphism testing happens here.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    dim: usize,
    vertex_count: usize,
    /// `partners[color][vertex]` is the other endpoint of the `color`-edge at
    /// `vertex`, if any.
    partners: Vec<Vec<Option<usize>>>,
}

/// Vertex counts: `p` half the vertices, `p_bar` half the boundary vertices,
/// `p_dot = p - p_bar` half the interior vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexStats {
    pub p: usize,
    pub p_bar: usize,
    pub p_dot: usize,
}

impl ColoredGraph {
    /// Build a gem from explicit per-color edge lists, checking every
    /// structural invariant eagerly.
    pub fn from_matchings(
        dim: usize,
        vertex_count: usize,
        matchings: &[Vec<(usize, usize)>],
    ) -> Result<Self> {
        if dim < 1 {
            return Err(GemError::InvalidDim(dim));
        }
        if vertex_count == 0 || vertex_count % 2 != 0 {
            return Err(GemError::InvalidVertexCount(vertex_count));
        }
        if matchings.len() != dim + 1 {
            return Err(GemError::WrongColorCount { expected: dim + 1, got: matchings.len() });
        }
        let mut partners = vec![vec![None; vertex_count]; dim + 1];
        for (color, pairs) in matchings.iter().enumerate() {
            for &(a, b) in pairs {
                for v in [a, b] {
                    if v >= vertex_count {
                        return Err(GemError::VertexOutOfRange { vertex: v, count: vertex_count });
                    }
                }
                if a == b {
                    return Err(GemError::LoopEdge { vertex: a, color });
                }
                for v in [a, b] {
                    if partners[color][v].is_some() {
                        return Err(GemError::DuplicateVertexInColor { vertex: v, color });
                    }
                }
                partners[color][a] = Some(b);
                partners[color][b] = Some(a);
            }
        }
        Self::from_partners(dim, vertex_count, partners, true)
    }

    /// Internal constructor from partner arrays. Matching consistency is
    /// assumed; perfectness of colors `< dim` is checked, and connectivity
    /// only when `require_connected` (boundary graphs may be disconnected).
    pub(crate) fn from_partners(
        dim: usize,
        vertex_count: usize,
        partners: Vec<Vec<Option<usize>>>,
        require_connected: bool,
    ) -> Result<Self> {
        for (color, row) in partners.iter().enumerate().take(dim) {
            let uncovered = row.iter().filter(|p| p.is_none()).count();
            if uncovered > 0 {
                return Err(GemError::NonPerfectMatching { color, uncovered });
            }
        }
        let graph = ColoredGraph { dim, vertex_count, partners };
        if require_connected && !graph.is_connected() {
            return Err(GemError::Disconnected);
        }
        Ok(graph)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// The color set Δ = {0, …, dim}.
    pub fn colors(&self) -> impl Iterator<Item = usize> {
        0..=self.dim
    }

    fn check_color(&self, color: usize) -> Result<()> {
        if color > self.dim {
            Err(GemError::InvalidColor { color, dim: self.dim })
        } else {
            Ok(())
        }
    }

    fn check_vertex(&self, vertex: usize) -> Result<()> {
        if vertex >= self.vertex_count {
            Err(GemError::VertexOutOfRange { vertex, count: self.vertex_count })
        } else {
            Ok(())
        }
    }

    /// The other endpoint of the `color`-edge at `vertex`, if there is one.
    pub fn partner(&self, color: usize, vertex: usize) -> Option<usize> {
        self.partners[color][vertex]
    }

    /// Edges of one color as sorted pairs `(a, b)` with `a < b`.
    pub fn edges(&self, color: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (v, &p) in self.partners[color].iter().enumerate() {
            if let Some(u) = p {
                if v < u {
                    out.push((v, u));
                }
            }
        }
        out
    }

    /// All matchings, color by color, in canonical order.
    pub fn matchings(&self) -> Vec<Vec<(usize, usize)>> {
        self.colors().map(|c| self.edges(c)).collect()
    }

    /// True when `vertex` has no edge of the last color.
    pub fn is_boundary_vertex(&self, vertex: usize) -> bool {
        self.partners[self.dim][vertex].is_none()
    }

    /// Boundary vertices in ascending order.
    pub fn boundary_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| self.is_boundary_vertex(v)).collect()
    }

    pub fn is_closed(&self) -> bool {
        self.partners[self.dim].iter().all(|p| p.is_some())
    }

    pub fn vertex_stats(&self) -> VertexStats {
        let p = self.vertex_count / 2;
        let p_bar = self.boundary_vertices().len() / 2;
        VertexStats { p, p_bar, p_dot: p - p_bar }
    }

    fn union_find_over(&self, colors: &[usize]) -> UnionFind {
        let mut uf = UnionFind::new(self.vertex_count);
        for &c in colors {
            for (v, &p) in self.partners[c].iter().enumerate() {
                if let Some(u) = p {
                    uf.union(v, u);
                }
            }
        }
        uf
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = self.colors().collect();
        self.union_find_over(&all).component_count() == 1
    }

    /// Number of connected components of the residue keeping only `colors`.
    /// Isolated vertices count as components.
    pub fn residue_count(&self, colors: &[usize]) -> Result<usize> {
        for &c in colors {
            self.check_color(c)?;
        }
        Ok(self.union_find_over(colors).component_count())
    }

    /// Components of the residue keeping only `colors`, each sorted ascending,
    /// ordered by smallest member.
    pub fn residue_components(&self, colors: &[usize]) -> Result<Vec<Vec<usize>>> {
        for &c in colors {
            self.check_color(c)?;
        }
        Ok(self.union_find_over(colors).components())
    }

    /// Number of `{i, j}`-colored cycles: components of the bicolored residue
    /// in which every vertex carries both colors. Open paths are excluded.
    pub fn cycle_count(&self, i: usize, j: usize) -> Result<usize> {
        self.check_color(i)?;
        self.check_color(j)?;
        if i == j {
            return Err(GemError::InvalidColor { color: j, dim: self.dim });
        }
        let comps = self.residue_components(&[i, j])?;
        Ok(comps
            .iter()
            .filter(|comp| {
                comp.iter().all(|&v| self.partners[i][v].is_some() && self.partners[j][v].is_some())
            })
            .count())
    }

    /// 2-colorability of the underlying multigraph; callers read this as
    /// orientability of the represented space.
    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.vertex_count];
        for start in 0..self.vertex_count {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                let sv = side[v].unwrap();
                for c in 0..=self.dim {
                    if let Some(u) = self.partners[c][v] {
                        match side[u] {
                            None => {
                                side[u] = Some(!sv);
                                stack.push(u);
                            }
                            Some(su) => {
                                if su == sv {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
        true
    }

    /// Colors of Δ minus one, used for the `Γ_ĉ` residues.
    fn colors_without(&self, c: usize) -> Vec<usize> {
        self.colors().filter(|&x| x != c).collect()
    }

    /// True when every residue `Γ_ĉ` is connected.
    pub fn is_contracted(&self) -> bool {
        self.colors().all(|c| {
            self.residue_count(&self.colors_without(c)).expect("colors are valid") == 1
        })
    }

    /// ∂-contracted: `Γ_d̂` connected and every `Γ_ĉ` (c < d) has exactly `h`
    /// components, `h` the number of boundary-graph components.
    pub fn is_boundary_contracted(&self) -> Result<bool> {
        let boundary = self.boundary_graph()?;
        let h = boundary.h();
        if self.residue_count(&self.colors_without(self.dim))? != 1 {
            return Ok(false);
        }
        for c in 0..self.dim {
            if self.residue_count(&self.colors_without(c))? != h {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Full census over all color subsets plus all bicolored cycle counts.
    pub fn census(&self) -> Census {
        let mut residue_counts = BTreeMap::new();
        let all: Vec<usize> = self.colors().collect();
        for mask in 0u32..(1 << (self.dim + 1)) {
            let subset: Vec<usize> =
                all.iter().copied().filter(|&c| mask & (1 << c) != 0).collect();
            let count = self.residue_count(&subset).expect("colors are valid");
            residue_counts.insert(subset, count);
        }
        let mut cycle_counts = BTreeMap::new();
        for i in 0..self.dim {
            for j in (i + 1)..=self.dim {
                cycle_counts.insert((i, j), self.cycle_count(i, j).expect("colors are valid"));
            }
        }
        Census { residue_counts, cycle_counts }
    }

    /// f-vector and Euler characteristic of the associated simplicial cell
    /// complex: the complex has as many k-simplices labeled by a color set B
    /// (|B| = k+1) as the residue over the complementary colors has components.
    pub fn complex_summary(&self) -> ComplexSummary {
        let d = self.dim;
        let all: Vec<usize> = self.colors().collect();
        let mut f_vector = vec![0usize; d + 1];
        for mask in 0u32..(1 << (d + 1)) {
            let subset: Vec<usize> =
                all.iter().copied().filter(|&c| mask & (1 << c) != 0).collect();
            if subset.is_empty() {
                continue;
            }
            let k = subset.len() - 1;
            let complement: Vec<usize> =
                all.iter().copied().filter(|&c| mask & (1 << c) == 0).collect();
            f_vector[k] += self.residue_count(&complement).expect("colors are valid");
        }
        let euler_characteristic: i64 = f_vector
            .iter()
            .enumerate()
            .map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum();
        let h = if self.is_closed() {
            0
        } else {
            self.boundary_graph().expect("graph has boundary").h()
        };
        let minimal_vertex_count = d * usize::max(1, h) + 1;
        ComplexSummary {
            f_vector: f_vector.clone(),
            euler_characteristic,
            vertex_count_of_complex: f_vector[0],
            minimal_vertex_count,
            has_minimal_vertex_count: f_vector[0] == minimal_vertex_count,
        }
    }
}

/// Residue counts `g_B` over every color subset and bicolored cycle counts
/// `C_{ij}` over every color pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Census {
    residue_counts: BTreeMap<Vec<usize>, usize>,
    cycle_counts: BTreeMap<(usize, usize), usize>,
}

impl Census {
    /// `g_B` for a color subset; colors may be given in any order.
    pub fn residue(&self, colors: &[usize]) -> Option<usize> {
        let mut key = colors.to_vec();
        key.sort_unstable();
        key.dedup();
        self.residue_counts.get(&key).copied()
    }

    /// `C_{ij}` for an unordered color pair.
    pub fn cycles(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.cycle_counts.get(&key).copied()
    }

    pub fn residue_entries(&self) -> impl Iterator<Item = (&Vec<usize>, usize)> {
        self.residue_counts.iter().map(|(k, &v)| (k, v))
    }

    pub fn cycle_entries(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.cycle_counts.iter().map(|(&k, &v)| (k, v))
    }
}

/// Simplex counts of the associated complex per dimension, with the
/// crystallization vertex-count condition `f_0 = d·max{1,h}+1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplexSummary {
    pub f_vector: Vec<usize>,
    pub euler_characteristic: i64,
    pub vertex_count_of_complex: usize,
    pub minimal_vertex_count: usize,
    pub has_minimal_vertex_count: bool,
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;

    pub(crate) fn s3_gem() -> ColoredGraph {
        let edge = vec![(0, 1)];
        ColoredGraph::from_matchings(3, 2, &[edge.clone(), edge.clone(), edge.clone(), edge])
            .unwrap()
    }

    pub(crate) fn d3_gem() -> ColoredGraph {
        let edge = vec![(0, 1)];
        ColoredGraph::from_matchings(3, 2, &[edge.clone(), edge.clone(), edge, vec![]]).unwrap()
    }

    #[test]
    fn s3_gem_is_valid_and_closed() {
        let g = s3_gem();
        assert_eq!(g.vertex_stats(), VertexStats { p: 1, p_bar: 0, p_dot: 1 });
        assert!(g.is_closed());
        assert!(g.is_connected());
        assert!(g.is_contracted());
        assert!(g.is_bipartite());
    }

    #[test]
    fn d3_gem_has_boundary() {
        let g = d3_gem();
        assert_eq!(g.vertex_stats(), VertexStats { p: 1, p_bar: 1, p_dot: 0 });
        assert!(!g.is_closed());
        assert_eq!(g.boundary_vertices(), vec![0, 1]);
    }

    #[test]
    fn rejects_non_perfect_matching() {
        // Color 0 only covers two of four vertices.
        let err = ColoredGraph::from_matchings(
            3,
            4,
            &[
                vec![(0, 1)],
                vec![(0, 1), (2, 3)],
                vec![(0, 2), (1, 3)],
                vec![(0, 3), (1, 2)],
            ],
        )
        .unwrap_err();
        assert_eq!(err, GemError::NonPerfectMatching { color: 0, uncovered: 2 });
    }

    #[test]
    fn rejects_loops_duplicates_and_bad_indices() {
        let loop_err =
            ColoredGraph::from_matchings(1, 2, &[vec![(0, 0)], vec![(0, 1)]]).unwrap_err();
        assert_eq!(loop_err, GemError::LoopEdge { vertex: 0, color: 0 });

        let dup_err =
            ColoredGraph::from_matchings(1, 4, &[vec![(0, 1), (1, 2)], vec![(0, 1), (2, 3)]])
                .unwrap_err();
        assert_eq!(dup_err, GemError::DuplicateVertexInColor { vertex: 1, color: 0 });

        let range_err =
            ColoredGraph::from_matchings(1, 2, &[vec![(0, 5)], vec![(0, 1)]]).unwrap_err();
        assert_eq!(range_err, GemError::VertexOutOfRange { vertex: 5, count: 2 });
    }

    #[test]
    fn rejects_disconnected() {
        // All four colors pair (0,1) and (2,3): two separate blocks.
        let m: Vec<Vec<(usize, usize)>> = (0..4).map(|_| vec![(0, 1), (2, 3)]).collect();
        let err = ColoredGraph::from_matchings(3, 4, &m).unwrap_err();
        assert_eq!(err, GemError::Disconnected);
    }

    #[test]
    fn residue_counts_on_trivial_gems() {
        let s3 = s3_gem();
        assert_eq!(s3.residue_count(&[0, 1]).unwrap(), 1);
        assert_eq!(s3.cycle_count(0, 1).unwrap(), 1);

        let d3 = d3_gem();
        assert_eq!(d3.residue_count(&[0, 3]).unwrap(), 1);
        assert_eq!(d3.cycle_count(0, 3).unwrap(), 0);
        // Empty subset: every vertex is its own component.
        assert_eq!(d3.residue_count(&[]).unwrap(), 2);
        assert!(d3.residue_count(&[7]).is_err());
    }

    #[test]
    fn complex_summary_of_trivial_gems() {
        let s3 = s3_gem().complex_summary();
        assert_eq!(s3.f_vector, vec![4, 6, 4, 2]);
        assert_eq!(s3.euler_characteristic, 0);
        assert!(s3.has_minimal_vertex_count);

        // With isolated vertices counted, the color-3 residue of the ball gem
        // contributes two triangles, giving χ = 1 = χ(∂)/2.
        let d3 = d3_gem().complex_summary();
        assert_eq!(d3.f_vector, vec![4, 6, 5, 2]);
        assert_eq!(d3.euler_characteristic, 1);
        assert!(d3.has_minimal_vertex_count);
    }

    #[test]
    fn census_identities_on_trivial_gems() {
        let d3 = d3_gem();
        let census = d3.census();
        assert_eq!(census.residue(&[0, 1]), Some(1));
        assert_eq!(census.cycles(0, 1), Some(1));
        assert_eq!(census.cycles(0, 3), Some(0));
        // g_{i3} = p̄ + C_{i3}
        let stats = d3.vertex_stats();
        for i in 0..3 {
            assert_eq!(
                census.residue(&[i, 3]).unwrap(),
                stats.p_bar + census.cycles(i, 3).unwrap()
            );
        }
    }
}
