//! The extremal scale-free family `G*_t`.
//!
//! `G*_0` is a star with two leaves. `G*_t` is obtained from two copies of
//! `G*_{t-1}`: inside each copy (from `t = 2` on) every edge not touching a
//! leaf is dropped, and a fresh hub is joined to every vertex of both copies.
//!
//! Every vertex carries a [`VertexAddress`]: its class plus the bit string of
//! copy indices chosen on the way down from the hub. Unrolled, the
//! duplications form a complete binary tree of depth `t + 1` whose root is
//! the hub, whose internal levels are the former hubs ([`VertexClass::Active`]),
//! then the seed centers, then the seed leaves. Canonical vertex ids sort
//! addresses by (class rank, path), which is exactly heap order on that tree:
//! the vertex at depth `d` with path value `p` gets id `2^d - 1 + p`.
//!
//! Two constructors are provided:
//!
//! * [`build_recursive`] replays the duplicate / prune / attach procedure
//!   literally and then relabels vertices canonically.
//! * [`build_direct`] writes the final adjacency in one pass from the tree:
//!   each leaf is adjacent to all of its ancestors and the hub is adjacent to
//!   everything.
//!
//! Both must produce the same [`Graph`] value for every `t`.
//!
//! # The pruning rule
//!
//! The pruning step keeps "edges adjacent to vertices at level 2". Level 2 is
//! read here as the leaf class: the seed-star leaves, labelled once when
//! `G*_1` is built and never relabelled. Reading it instead as whatever
//! vertices sit at tree depth 2 of the copy being pruned gives 54 edges for
//! `t = 3` where the closed-form size is 78; the leaf reading reproduces the
//! size formula for every `t`. [`PruneRule::DepthTwo`] keeps the rejected
//! reading available as a regression fixture.
//!
//! # Hub degree
//!
//! The hub is adjacent to all other `2^{t+2} - 2` vertices, which is what
//! [`closed_form_degree_table`] reports. A hub degree of `2^{t+2}` would
//! exceed `n - 1`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::graph::{DegreeRow, DegreeTable, Graph, GraphBuilder, VertexId};

/// Largest `t` the constructors accept. `G*_30` already needs about
/// 2^36 adjacency entries.
pub const MAX_BUILD_T: u32 = 30;

/// Default ceiling for [`build_recursive`] in campaigns (8191 vertices at 11,
/// 16383 at 12).
pub const DEFAULT_RECURSIVE_BUDGET: u32 = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("closed-form value for t = {t} does not fit in 64 bits")]
    Overflow { t: u32 },
    #[error("t = {t} exceeds the construction limit {limit}")]
    TooLarge { t: u32, limit: u32 },
    #[error("degree table is only defined for t >= 1 (got t = {t})")]
    UnsupportedT { t: u32 },
    #[error("graph with {actual} vertices cannot be G*_{t} (expected {expected})")]
    OrderMismatch { t: u32, expected: u64, actual: usize },
}

/// `|V*_t| = 2^{t+2} - 1`.
pub fn order_formula(t: u32) -> Result<u64, ModelError> {
    1u64.checked_shl(t + 2)
        .map(|p| p - 1)
        .ok_or(ModelError::Overflow { t })
}

/// `|E*_t| = 2^{t+1} (t + 2) - 2`.
pub fn size_formula(t: u32) -> Result<u64, ModelError> {
    let overflow = ModelError::Overflow { t };
    if t + 1 >= 64 {
        return Err(overflow);
    }
    (1u64 << (t + 1))
        .checked_mul(u64::from(t) + 2)
        .map(|x| x - 2)
        .ok_or(overflow)
}

/// Role of a vertex in `G*_t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexClass {
    /// The vertex added at the last step, adjacent to all others.
    Hub,
    /// The hub added at construction step `s`, later demoted; `1 <= s <= t - 1`.
    Active(u32),
    /// Center of a seed-star copy.
    Center,
    /// Leaf of a seed-star copy.
    Leaf,
}

impl VertexClass {
    fn rank(self) -> (u8, std::cmp::Reverse<u32>) {
        match self {
            VertexClass::Hub => (0, std::cmp::Reverse(0)),
            VertexClass::Active(s) => (1, std::cmp::Reverse(s)),
            VertexClass::Center => (2, std::cmp::Reverse(0)),
            VertexClass::Leaf => (3, std::cmp::Reverse(0)),
        }
    }

    /// Depth in the ancestry tree of `G*_t` (the length of the address path).
    pub fn depth(self, t: u32) -> u32 {
        match self {
            VertexClass::Hub => 0,
            VertexClass::Active(s) => t - s,
            VertexClass::Center => t,
            VertexClass::Leaf => t + 1,
        }
    }

    fn at_depth(t: u32, depth: u32) -> Self {
        if depth == t + 1 {
            VertexClass::Leaf
        } else if depth == t {
            VertexClass::Center
        } else if depth == 0 {
            VertexClass::Hub
        } else {
            VertexClass::Active(t - depth)
        }
    }

    /// Degree every vertex of this class has in `G*_t`.
    pub fn degree_in(self, t: u32) -> u64 {
        match self {
            VertexClass::Hub => (1u64 << (t + 2)) - 2,
            VertexClass::Active(s) => (1u64 << (s + 1)) + 1,
            VertexClass::Center if t == 0 => 2,
            VertexClass::Center => 3,
            VertexClass::Leaf => u64::from(t) + 1,
        }
    }

    /// Number of vertices of this class in `G*_t`.
    pub fn count_in(self, t: u32) -> u64 {
        1u64 << self.depth(t)
    }
}

impl PartialOrd for VertexClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl fmt::Display for VertexClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexClass::Hub => f.write_str("hub"),
            VertexClass::Active(s) => write!(f, "active({s})"),
            VertexClass::Center => f.write_str("center"),
            VertexClass::Leaf => f.write_str("leaf"),
        }
    }
}

/// Copy indices from the hub down to a vertex, first choice most significant.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AncestryPath {
    // `len` first so equal-length paths compare by value, i.e. lexicographically.
    len: u8,
    bits: u64,
}

impl AncestryPath {
    pub const EMPTY: AncestryPath = AncestryPath { len: 0, bits: 0 };

    pub fn new(bits: u64, len: u8) -> Self {
        debug_assert!(len < 64 && bits >> len == 0);
        Self { len, bits }
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> u64 {
        self.bits
    }

    /// Path of the same vertex seen from one level higher, inside copy `bit`.
    pub fn prepend(self, bit: bool) -> Self {
        Self {
            len: self.len + 1,
            bits: self.bits | (u64::from(bit) << self.len),
        }
    }

    pub fn bit(&self, i: usize) -> bool {
        (self.bits >> (self.len as usize - 1 - i)) & 1 == 1
    }
}

impl fmt::Display for AncestryPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.bit(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VertexAddress {
    pub class: VertexClass,
    pub path: AncestryPath,
}

impl VertexAddress {
    /// Address of canonical vertex `id` in `G*_t`.
    pub fn from_canonical_id(t: u32, id: VertexId) -> Self {
        let depth = (id as u64 + 1).ilog2();
        let value = id as u64 + 1 - (1u64 << depth);
        let class = if t == 0 && depth == 0 {
            VertexClass::Center
        } else {
            VertexClass::at_depth(t, depth)
        };
        VertexAddress {
            class,
            path: AncestryPath::new(value, depth as u8),
        }
    }

    pub fn canonical_id(&self) -> VertexId {
        ((1u64 << self.path.len()) - 1 + self.path.value()) as VertexId
    }
}

impl PartialOrd for VertexAddress {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexAddress {
    fn cmp(&self, other: &Self) -> Ordering {
        self.class
            .cmp(&other.class)
            .then_with(|| self.path.cmp(&other.path))
    }
}

impl fmt::Display for VertexAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.class, self.path)
    }
}

/// `G*_t` with canonical vertex ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassifiedGraph {
    graph: Graph,
    t: u32,
}

impl ClassifiedGraph {
    /// Attaches canonical addressing to an arbitrary graph of the right
    /// order. Nothing about the edges is checked; see [`class_census`].
    pub fn new(graph: Graph, t: u32) -> Result<Self, ModelError> {
        let expected = order_formula(t)?;
        if graph.order() as u64 != expected {
            return Err(ModelError::OrderMismatch {
                t,
                expected,
                actual: graph.order(),
            });
        }
        Ok(Self { graph, t })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn address_of(&self, v: VertexId) -> VertexAddress {
        assert!(v < self.graph.order(), "vertex {v} out of range");
        VertexAddress::from_canonical_id(self.t, v)
    }

    pub fn class_of(&self, v: VertexId) -> VertexClass {
        self.address_of(v).class
    }

    /// The hub (vertex 0); `None` for the seed star.
    pub fn hub(&self) -> Option<VertexId> {
        (self.t >= 1).then_some(0)
    }

    /// Canonical ids of all vertices in `class`, as a contiguous range.
    pub fn vertices_of(&self, class: VertexClass) -> std::ops::Range<VertexId> {
        let depth = class.depth(self.t);
        let start = (1usize << depth) - 1;
        start..start + (1usize << depth)
    }
}

fn check_buildable(t: u32) -> Result<(), ModelError> {
    if t > MAX_BUILD_T {
        return Err(ModelError::TooLarge {
            t,
            limit: MAX_BUILD_T,
        });
    }
    size_formula(t)?;
    Ok(())
}

/// Degree table of `G*_t` from the closed form, rows with equal degree merged.
pub fn closed_form_degree_table(t: u32) -> Result<DegreeTable, ModelError> {
    if t == 0 {
        return Err(ModelError::UnsupportedT { t });
    }
    check_buildable(t)?;
    let classes = std::iter::once(VertexClass::Hub)
        .chain((1..t).rev().map(VertexClass::Active))
        .chain([VertexClass::Center, VertexClass::Leaf]);
    Ok(DegreeTable::from_rows(classes.map(|c| DegreeRow {
        degree: c.degree_in(t) as usize,
        count: c.count_in(t),
    })))
}

/// Builds `G*_t` straight into CSR form in canonical order.
///
/// Each adjacency list is produced already sorted: the hub sees every other
/// vertex, an internal vertex sees the hub plus the contiguous block of its
/// leaf descendants, and a leaf sees its ancestors.
pub fn build_direct(t: u32) -> Result<ClassifiedGraph, ModelError> {
    check_buildable(t)?;
    let n = order_formula(t)? as usize;
    let leaf_depth = t + 1;
    let first_leaf = (1usize << leaf_depth) - 1;

    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0usize);
    let mut acc = 0usize;
    for v in 0..n {
        acc += if v == 0 {
            n - 1
        } else if v < first_leaf {
            let depth = (v + 1).ilog2();
            1 + (1usize << (leaf_depth - depth))
        } else {
            leaf_depth as usize
        };
        offsets.push(acc);
    }

    let mut targets = Vec::with_capacity(acc);
    targets.extend(1..n);
    for v in 1..first_leaf {
        let shift = leaf_depth - (v + 1).ilog2();
        let lo = ((v + 1) << shift) - 1;
        targets.push(0);
        targets.extend(lo..lo + (1usize << shift));
    }
    let mut chain = Vec::with_capacity(leaf_depth as usize);
    for v in first_leaf..n {
        chain.clear();
        let mut a = v;
        while a > 0 {
            a = (a - 1) / 2;
            chain.push(a);
        }
        targets.extend(chain.iter().rev());
    }
    debug_assert_eq!(targets.len(), acc);

    Ok(ClassifiedGraph {
        graph: Graph::from_csr(offsets, targets),
        t,
    })
}

/// Which vertices' edges survive pruning inside a copy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PruneRule {
    /// Keep edges touching a seed leaf. Reproduces the closed-form sizes.
    #[default]
    LeafClass,
    /// Keep edges touching a vertex at depth 2 of the copy being pruned.
    /// Wrong from `t = 3` on; kept as a regression fixture.
    DepthTwo,
}

/// What happened at one duplication step of [`build_recursive_traced`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepTrace {
    pub step: u32,
    pub deleted_per_copy: usize,
    pub kept_per_copy: usize,
    /// Every deleted edge joined two non-leaf vertices.
    pub deleted_all_non_leaf: bool,
    /// Every kept intra-copy edge touches a leaf.
    pub kept_all_touch_leaf: bool,
}

/// Replays the duplication procedure literally and relabels canonically.
pub fn build_recursive(t: u32) -> Result<ClassifiedGraph, ModelError> {
    build_recursive_traced(t, PruneRule::LeafClass).map(|(g, _)| g)
}

pub fn build_recursive_traced(
    t: u32,
    rule: PruneRule,
) -> Result<(ClassifiedGraph, Vec<StepTrace>), ModelError> {
    check_buildable(t)?;

    // The seed star: center, then its two leaves.
    let mut addrs = vec![
        VertexAddress {
            class: VertexClass::Center,
            path: AncestryPath::EMPTY,
        },
        VertexAddress {
            class: VertexClass::Leaf,
            path: AncestryPath::new(0, 1),
        },
        VertexAddress {
            class: VertexClass::Leaf,
            path: AncestryPath::new(1, 1),
        },
    ];
    let mut edges: Vec<(VertexId, VertexId)> = vec![(0, 1), (0, 2)];
    let mut trace = Vec::with_capacity(t as usize);

    for step in 1..=t {
        let k = addrs.len();

        let keep = |&(u, v): &(VertexId, VertexId)| -> bool {
            if step < 2 {
                return true;
            }
            let (a, b) = (addrs[u], addrs[v]);
            match rule {
                PruneRule::LeafClass => a.class == VertexClass::Leaf || b.class == VertexClass::Leaf,
                PruneRule::DepthTwo => a.path.len() == 2 || b.path.len() == 2,
            }
        };
        let is_leaf = |v: VertexId| addrs[v].class == VertexClass::Leaf;

        let (kept, deleted): (Vec<_>, Vec<_>) = edges.iter().copied().partition(keep);
        trace.push(StepTrace {
            step,
            deleted_per_copy: deleted.len(),
            kept_per_copy: kept.len(),
            deleted_all_non_leaf: deleted.iter().all(|&(u, v)| !is_leaf(u) && !is_leaf(v)),
            kept_all_touch_leaf: kept.iter().all(|&(u, v)| is_leaf(u) || is_leaf(v)),
        });

        let mut next_addrs = Vec::with_capacity(2 * k + 1);
        let mut next_edges = Vec::with_capacity(2 * kept.len() + 2 * k);
        for copy in 0..2 {
            let bit = copy == 1;
            let offset = copy * k;
            next_addrs.extend(addrs.iter().map(|a| VertexAddress {
                class: match a.class {
                    VertexClass::Hub => VertexClass::Active(step - 1),
                    c => c,
                },
                path: a.path.prepend(bit),
            }));
            next_edges.extend(kept.iter().map(|&(u, v)| (u + offset, v + offset)));
        }
        let hub = 2 * k;
        next_addrs.push(VertexAddress {
            class: VertexClass::Hub,
            path: AncestryPath::EMPTY,
        });
        next_edges.extend((0..hub).map(|v| (v, hub)));

        addrs = next_addrs;
        edges = next_edges;
    }

    // Relabel by sorted address.
    let mut order: Vec<VertexId> = (0..addrs.len()).collect();
    order.sort_unstable_by_key(|&v| addrs[v]);
    let mut canon = vec![0; addrs.len()];
    for (id, &v) in order.iter().enumerate() {
        assert_eq!(
            addrs[v],
            VertexAddress::from_canonical_id(t, id),
            "sorted address order must coincide with heap order"
        );
        canon[v] = id;
    }

    let mut builder = GraphBuilder::with_capacity(addrs.len(), edges.len());
    for (u, v) in edges {
        builder
            .add_edge(canon[u], canon[v])
            .expect("constructor emits only valid simple edges");
    }
    Ok((
        ClassifiedGraph {
            graph: builder.finalize(),
            t,
        },
        trace,
    ))
}

/// Observed number of vertices per class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub hub: u64,
    /// `(step, count)` for steps `t - 1` down to 1.
    pub active: Vec<(u32, u64)>,
    pub center: u64,
    pub leaf: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusViolation {
    #[error("census needs t >= 1 (got t = {0})")]
    UnsupportedT(u32),
    #[error("vertex {vertex} ({class}) has degree {actual}, expected {expected}")]
    DegreeMismatch {
        vertex: VertexId,
        class: VertexClass,
        expected: u64,
        actual: u64,
    },
    #[error("class {class} has {actual} vertices, expected {expected}")]
    CountMismatch {
        class: VertexClass,
        expected: u64,
        actual: u64,
    },
}

/// Counts vertices per class and checks every degree against its class.
/// Stops at the first violation.
pub fn class_census(g: &ClassifiedGraph) -> Result<ClassCensus, CensusViolation> {
    let t = g.t();
    if t == 0 {
        return Err(CensusViolation::UnsupportedT(t));
    }
    let mut census = ClassCensus {
        hub: 0,
        active: (1..t).rev().map(|s| (s, 0)).collect(),
        center: 0,
        leaf: 0,
    };
    for v in 0..g.graph().order() {
        let class = g.class_of(v);
        let expected = class.degree_in(t);
        let actual = g.graph().deg(v) as u64;
        if actual != expected {
            return Err(CensusViolation::DegreeMismatch {
                vertex: v,
                class,
                expected,
                actual,
            });
        }
        match class {
            VertexClass::Hub => census.hub += 1,
            VertexClass::Active(s) => census.active[(t - 1 - s) as usize].1 += 1,
            VertexClass::Center => census.center += 1,
            VertexClass::Leaf => census.leaf += 1,
        }
    }
    let observed = std::iter::once((VertexClass::Hub, census.hub))
        .chain(census.active.iter().map(|&(s, c)| (VertexClass::Active(s), c)))
        .chain([
            (VertexClass::Center, census.center),
            (VertexClass::Leaf, census.leaf),
        ]);
    for (class, actual) in observed {
        let expected = class.count_in(t);
        if actual != expected {
            return Err(CensusViolation::CountMismatch {
                class,
                expected,
                actual,
            });
        }
    }
    Ok(census)
}
