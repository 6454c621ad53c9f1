//! Boundary graphs: the (d−1)-dimensional gem induced on boundary vertices.
//!
//! Two boundary vertices are joined by a j-colored boundary edge exactly when
//! the parent graph joins them by a path alternating colors j and d. Each
//! component of the boundary graph represents one boundary-surface component.

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::unionfind::UnionFind;

/// The boundary gem of a graph with boundary, together with its component
/// decomposition. The underlying graph may be disconnected (h ≥ 2); every
/// color class is a perfect matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryGraph {
    graph: ColoredGraph,
    /// Parent vertex of each boundary-graph vertex, ascending.
    parent_vertices: Vec<usize>,
    /// Component index (0-based, ordered by smallest vertex) per vertex.
    component_ids: Vec<usize>,
    component_count: usize,
}

impl ColoredGraph {
    /// The boundary graph `(∂Γ, ∂γ)`. Fails with `CLOSED_GRAPH` when the
    /// graph has no boundary vertices.
    pub fn boundary_graph(&self) -> Result<BoundaryGraph> {
        if self.dim() < 2 {
            return Err(GemError::Dimension { expected: 2, actual: self.dim() });
        }
        let parent_vertices = self.boundary_vertices();
        if parent_vertices.is_empty() {
            return Err(GemError::ClosedGraph);
        }
        let mut local = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in parent_vertices.iter().enumerate() {
            local[v] = i;
        }
        let d = self.dim();
        let n = parent_vertices.len();
        let mut partners = vec![vec![None; n]; d];
        for j in 0..d {
            for (i, &u) in parent_vertices.iter().enumerate() {
                // Walk the (j, d)-alternating path from u to the other
                // endpoint missing a d-edge.
                let mut cur = self.partner(j, u).expect("color < d is perfect");
                loop {
                    match self.partner(d, cur) {
                        None => break,
                        Some(next) => {
                            cur = self.partner(j, next).expect("color < d is perfect");
                        }
                    }
                }
                debug_assert_ne!(cur, u, "alternating path returned to its start");
                partners[j][i] = Some(local[cur]);
            }
        }
        let graph = ColoredGraph::from_partners(d - 1, n, partners, false)?;

        let mut uf = UnionFind::new(n);
        for j in 0..d {
            for v in 0..n {
                if let Some(u) = graph.partner(j, v) {
                    uf.union(v, u);
                }
            }
        }
        let comps = uf.components();
        let component_count = comps.len();
        let mut component_ids = vec![0usize; n];
        for (idx, comp) in comps.iter().enumerate() {
            for &v in comp {
                component_ids[v] = idx;
            }
        }
        Ok(BoundaryGraph { graph, parent_vertices, component_ids, component_count })
    }
}

impl BoundaryGraph {
    /// The boundary gem itself (dimension one less than the parent).
    pub fn graph(&self) -> &ColoredGraph {
        &self.graph
    }

    pub fn parent_vertices(&self) -> &[usize] {
        &self.parent_vertices
    }

    pub fn component_ids(&self) -> &[usize] {
        &self.component_ids
    }

    /// Number of boundary components.
    pub fn h(&self) -> usize {
        self.component_count
    }

    /// `∂g_{ij}`: the number of `{i,j}`-colored cycles of the boundary graph.
    /// All boundary matchings are perfect, so every bicolored component is a
    /// cycle.
    pub fn cycle_count(&self, i: usize, j: usize) -> Result<usize> {
        self.graph.cycle_count(i, j)
    }

    /// Each boundary component as a standalone connected gem with densely
    /// re-indexed vertices, ordered by smallest parent vertex. The second
    /// element maps local vertices back to parent vertices.
    pub fn components(&self) -> Vec<(ColoredGraph, Vec<usize>)> {
        let n = self.graph.vertex_count();
        let d = self.graph.dim();
        let mut out = Vec::new();
        for comp_idx in 0..self.component_count {
            let members: Vec<usize> =
                (0..n).filter(|&v| self.component_ids[v] == comp_idx).collect();
            let mut local = vec![usize::MAX; n];
            for (i, &v) in members.iter().enumerate() {
                local[v] = i;
            }
            let mut partners = vec![vec![None; members.len()]; d + 1];
            for c in 0..=d {
                for (i, &v) in members.iter().enumerate() {
                    partners[c][i] = self.graph.partner(c, v).map(|u| local[u]);
                }
            }
            let graph = ColoredGraph::from_partners(d, members.len(), partners, true)
                .expect("boundary component is a valid connected gem");
            let parents = members.iter().map(|&v| self.parent_vertices[v]).collect();
            out.push((graph, parents));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{d3_gem, s3_gem};

    #[test]
    fn boundary_of_ball_gem_is_sphere_gem() {
        let b = d3_gem().boundary_graph().unwrap();
        assert_eq!(b.graph().dim(), 2);
        assert_eq!(b.graph().vertex_count(), 2);
        assert_eq!(b.h(), 1);
        assert!(b.graph().is_closed());
        for j in 0..3 {
            assert_eq!(b.graph().edges(j), vec![(0, 1)]);
            assert_eq!(b.cycle_count(j, (j + 1) % 3).unwrap(), 1);
        }
        assert_eq!(b.parent_vertices(), &[0, 1]);
    }

    #[test]
    fn closed_graph_has_no_boundary_graph() {
        assert_eq!(s3_gem().boundary_graph().unwrap_err(), GemError::ClosedGraph);
    }

    #[test]
    fn boundary_paths_pass_through_interior() {
        // Two vertices joined by colors 0,1,2; a color-3 edge to a second
        // block: boundary paths must traverse the interior pair.
        let g = ColoredGraph::from_matchings(
            3,
            4,
            &[
                vec![(0, 1), (2, 3)],
                vec![(0, 1), (2, 3)],
                vec![(0, 1), (2, 3)],
                vec![(1, 2)],
            ],
        )
        .unwrap();
        let b = g.boundary_graph().unwrap();
        assert_eq!(b.parent_vertices(), &[0, 3]);
        assert_eq!(b.graph().vertex_count(), 2);
        assert_eq!(b.h(), 1);
        // Each color joins the two remaining boundary vertices through the
        // interior color-3 edge.
        for j in 0..3 {
            assert_eq!(b.graph().edges(j), vec![(0, 1)]);
        }
    }
}
