//! Compact storage for simple undirected graphs.
//!
//! Graphs are assembled with a [`GraphBuilder`] and then frozen into a
//! [`Graph`], which keeps every adjacency list sorted in one contiguous
//! offsets + targets layout (CSR). A frozen graph is never mutated again, so
//! it can be shared freely between threads running traversals.

use std::collections::VecDeque;

use thiserror::Error;

/// Dense vertex identifier in `0..n`.
pub type VertexId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0} is not allowed in a simple graph")]
    SelfLoop(VertexId),
    #[error("vertex {vertex} out of range for graph with {order} vertices")]
    VertexOutOfRange { vertex: VertexId, order: usize },
}

/// Accumulates unordered edges before freezing them into a [`Graph`].
///
/// Duplicate insertions (in either orientation) are accepted and collapse
/// into a single edge on [`finalize`](GraphBuilder::finalize).
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl GraphBuilder {
    pub fn new(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
        }
    }

    pub fn with_capacity(order: usize, edges: usize) -> Self {
        Self {
            order,
            edges: Vec::with_capacity(edges),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        for x in [u, v] {
            if x >= self.order {
                return Err(GraphError::VertexOutOfRange {
                    vertex: x,
                    order: self.order,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.edges.push((u.min(v), u.max(v)));
        Ok(())
    }

    pub fn finalize(self) -> Graph {
        let GraphBuilder { order, mut edges } = self;
        edges.sort_unstable();
        edges.dedup();

        let mut offsets = vec![0usize; order + 1];
        for &(u, v) in &edges {
            offsets[u + 1] += 1;
            offsets[v + 1] += 1;
        }
        for i in 0..order {
            offsets[i + 1] += offsets[i];
        }

        // Walking the pairs in (u, v) order appends each list in ascending
        // order: every (w, x) with w < x precedes every (x, y).
        let mut cursor = offsets[..order].to_vec();
        let mut targets = vec![0usize; offsets[order]];
        for &(u, v) in &edges {
            targets[cursor[u]] = v;
            cursor[u] += 1;
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }

        Graph {
            order,
            size: edges.len(),
            offsets,
            targets,
        }
    }
}

/// Immutable simple undirected graph in CSR form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    order: usize,
    size: usize,
    offsets: Vec<usize>,
    targets: Vec<VertexId>,
}

impl Graph {
    /// Wraps an already sorted, symmetric CSR layout.
    ///
    /// Used by constructors that can emit adjacency lists directly in
    /// canonical order. Symmetry is the caller's responsibility; see
    /// [`check_invariants`](Graph::check_invariants).
    pub(crate) fn from_csr(offsets: Vec<usize>, targets: Vec<VertexId>) -> Self {
        let order = offsets.len() - 1;
        assert_eq!(offsets[order], targets.len());
        assert_eq!(targets.len() % 2, 0);
        Graph {
            order,
            size: targets.len() / 2,
            offsets,
            targets,
        }
    }

    /// Number of vertices `|V|`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges `|E|`.
    pub fn size(&self) -> usize {
        self.size
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.order {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order,
            })
        }
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.offsets[v + 1] - self.offsets[v])
    }

    /// Sorted, duplicate-free neighbors of `v`.
    pub fn neighbors(&self, v: VertexId) -> Result<&[VertexId], GraphError> {
        self.check_vertex(v)?;
        Ok(self.adj(v))
    }

    #[inline]
    pub(crate) fn adj(&self, v: VertexId) -> &[VertexId] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub(crate) fn deg(&self, v: VertexId) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    /// All degrees in vertex order.
    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.offsets.windows(2).map(|w| w[1] - w[0])
    }

    /// Every edge once as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        (0..self.order).flat_map(move |u| {
            let adj = self.adj(u);
            let start = adj.partition_point(|&w| w <= u);
            adj[start..].iter().map(move |&v| (u, v))
        })
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order && v < self.order && self.adj(u).binary_search(&v).is_ok()
    }

    /// Smallest-id vertex of maximum degree; `None` for the empty graph.
    pub fn max_degree_vertex(&self) -> Option<VertexId> {
        let mut best: Option<(usize, VertexId)> = None;
        for v in 0..self.order {
            let d = self.deg(v);
            if best.is_none_or(|(bd, _)| d > bd) {
                best = Some((d, v));
            }
        }
        best.map(|(_, v)| v)
    }

    /// True iff a breadth-first traversal from vertex 0 reaches every
    /// vertex. The empty and single-vertex graphs are connected.
    pub fn is_connected(&self) -> bool {
        if self.order <= 1 {
            return true;
        }
        let mut seen = vec![false; self.order];
        let mut queue = VecDeque::new();
        seen[0] = true;
        queue.push_back(0);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &w in self.adj(u) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
        reached == self.order
    }

    pub fn degree_histogram(&self) -> DegreeTable {
        let mut counts = std::collections::BTreeMap::new();
        for d in self.degrees() {
            *counts.entry(d).or_insert(0u64) += 1;
        }
        DegreeTable::from_rows(counts.into_iter().map(|(degree, count)| DegreeRow { degree, count }))
    }

    /// Verifies sortedness, symmetry, the absence of loops and the
    /// handshake identity. Linear in `n + m` up to the symmetry lookups.
    pub fn check_invariants(&self) -> Result<(), String> {
        if self.offsets.len() != self.order + 1 || self.offsets[self.order] != self.targets.len() {
            return Err("offsets do not cover targets".into());
        }
        if self.targets.len() != 2 * self.size {
            return Err(format!(
                "degree sum {} != 2m = {}",
                self.targets.len(),
                2 * self.size
            ));
        }
        for u in 0..self.order {
            let adj = self.adj(u);
            if adj.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("adjacency of {u} not strictly increasing"));
            }
            for &v in adj {
                if v >= self.order {
                    return Err(format!("neighbor {v} of {u} out of range"));
                }
                if v == u {
                    return Err(format!("self-loop at {u}"));
                }
                if self.adj(v).binary_search(&u).is_err() {
                    return Err(format!("edge {u}-{v} not symmetric"));
                }
            }
        }
        Ok(())
    }
}

/// One `(degree, count)` row of a degree table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub struct DegreeRow {
    pub degree: usize,
    pub count: u64,
}

/// Degree sequence summarized as rows sorted by degree, descending, with
/// every count positive and no degree repeated.
#[derive(Debug, Clone, PartialEq, Eq, Default, serde::Serialize)]
#[serde(transparent)]
pub struct DegreeTable {
    rows: Vec<DegreeRow>,
}

impl DegreeTable {
    /// Normalizes arbitrary rows: merges equal degrees, drops empty rows
    /// and sorts by degree descending.
    pub fn from_rows(rows: impl IntoIterator<Item = DegreeRow>) -> Self {
        let mut merged = std::collections::BTreeMap::new();
        for r in rows {
            if r.count > 0 {
                *merged.entry(r.degree).or_insert(0u64) += r.count;
            }
        }
        let rows = merged
            .into_iter()
            .rev()
            .map(|(degree, count)| DegreeRow { degree, count })
            .collect();
        Self { rows }
    }

    pub fn rows(&self) -> &[DegreeRow] {
        &self.rows
    }

    /// Rows as plain `(degree, count)` pairs, handy in assertions.
    pub fn pairs(&self) -> Vec<(usize, u64)> {
        self.rows.iter().map(|r| (r.degree, r.count)).collect()
    }

    pub fn vertex_count(&self) -> u64 {
        self.rows.iter().map(|r| r.count).sum()
    }

    pub fn degree_sum(&self) -> u64 {
        self.rows.iter().map(|r| r.degree as u64 * r.count).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
        let mut b = GraphBuilder::new(n);
        for &(u, v) in edges {
            b.add_edge(u, v).unwrap();
        }
        b.finalize()
    }

    #[test]
    fn symmetric_duplicates_collapse() {
        let g = graph(2, &[(0, 1), (1, 0)]);
        assert_eq!(g.size(), 1);
        assert_eq!(g.neighbors(0).unwrap(), &[1]);
    }

    #[test]
    fn loops_and_out_of_range_are_rejected() {
        let mut b = GraphBuilder::new(3);
        assert_eq!(b.add_edge(0, 0), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            b.add_edge(1, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, order: 3 })
        );
    }

    #[test]
    fn path_degrees() {
        let g = graph(3, &[(0, 1), (1, 2)]);
        let d: Vec<_> = g.degrees().collect();
        assert_eq!(d, vec![1, 2, 1]);
        assert_eq!(g.neighbors(1).unwrap(), &[0, 2]);
        assert!(g.is_connected());
    }

    #[test]
    fn empty_builder() {
        let g = GraphBuilder::new(5).finalize();
        assert_eq!(g.size(), 0);
        assert!(g.degrees().all(|d| d == 0));
        assert_eq!(g.neighbors(4).unwrap(), &[] as &[usize]);
        assert_eq!(g.degree(2), Ok(0));
        assert!(g.degree(5).is_err());
    }

    #[test]
    fn triangle_and_k4() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!((g.order(), g.size()), (3, 3));
        assert!(g.degrees().all(|d| d == 2));

        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(k4.degree_histogram().pairs(), vec![(3, 4)]);
    }

    #[test]
    fn connectivity_edge_cases() {
        assert!(!graph(4, &[(0, 1), (2, 3)]).is_connected());
        assert!(graph(1, &[]).is_connected());
    }

    #[test]
    fn edges_are_listed_once_in_order() {
        let g = graph(4, &[(2, 3), (0, 2), (1, 0)]);
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (2, 3)]);
        assert!(g.check_invariants().is_ok());
    }

    #[test]
    fn degree_table_merges_rows() {
        let t = DegreeTable::from_rows([
            DegreeRow { degree: 3, count: 4 },
            DegreeRow { degree: 5, count: 2 },
            DegreeRow { degree: 3, count: 8 },
            DegreeRow { degree: 9, count: 0 },
        ]);
        assert_eq!(t.pairs(), vec![(5, 2), (3, 12)]);
        assert_eq!(t.vertex_count(), 14);
        assert_eq!(t.degree_sum(), 46);
    }
}
