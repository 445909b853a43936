use std::cmp::Reverse;

use rayon::prelude::*;
use serde::Serialize;

use super::AnalyticsError;
use crate::graph::{Graph, VertexId};

/// All-source BFS is skipped above this many vertices.
pub const DEFAULT_EXACT_BUDGET: usize = 1 << 16;

const UNSEEN: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DiameterMethod {
    Exact,
    Bounded,
}

impl std::fmt::Display for DiameterMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DiameterMethod::Exact => "exact",
            DiameterMethod::Bounded => "bounded",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterResult {
    pub diameter: usize,
    /// A pair at distance `diameter`.
    pub witness: (VertexId, VertexId),
    pub method: DiameterMethod,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DiameterBounds {
    pub lower: usize,
    pub upper: usize,
    /// A pair at distance `lower`.
    pub lower_witness: (VertexId, VertexId),
}

/// Reusable BFS buffers.
struct Bfs {
    dist: Vec<u32>,
    queue: Vec<VertexId>,
}

/// Outcome of one traversal.
struct Sweep {
    ecc: usize,
    /// Smallest id at distance `ecc`.
    farthest: VertexId,
    reached: usize,
}

impl Bfs {
    fn new(n: usize) -> Self {
        Self {
            dist: vec![UNSEEN; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(&mut self, g: &Graph, src: VertexId) -> Sweep {
        self.dist.fill(UNSEEN);
        self.queue.clear();
        self.dist[src] = 0;
        self.queue.push(src);
        let mut head = 0;
        while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let du = self.dist[u] + 1;
            for &w in g.adj(u) {
                if self.dist[w] == UNSEEN {
                    self.dist[w] = du;
                    self.queue.push(w);
                }
            }
        }
        let last = *self.queue.last().expect("source is always queued");
        let ecc = self.dist[last];
        // BFS order is by distance but not by id within a layer
        let farthest = self
            .queue
            .iter()
            .rev()
            .take_while(|&&v| self.dist[v] == ecc)
            .copied()
            .min()
            .unwrap_or(last);
        Sweep {
            ecc: ecc as usize,
            farthest,
            reached: self.queue.len(),
        }
    }
}

/// Breadth-first search from up to 64 sources at once. Bit `i` of a
/// vertex's word records whether source `i` has reached it.
struct BatchBfs {
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl BatchBfs {
    fn new(n: usize) -> Self {
        Self {
            visited: vec![0; n],
            frontier: vec![0; n],
            next: vec![0; n],
        }
    }

    /// `(eccentricity, smallest farthest vertex)` for each source in
    /// `sources` (at most 64). The graph must be connected.
    fn run(&mut self, g: &Graph, sources: std::ops::Range<VertexId>) -> Vec<(usize, VertexId)> {
        let k = sources.len();
        debug_assert!(k > 0 && k <= 64);
        let full = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        self.visited.fill(0);
        self.frontier.fill(0);
        let mut out: Vec<(usize, VertexId)> = sources.clone().map(|s| (0, s)).collect();
        for (i, s) in sources.enumerate() {
            self.visited[s] |= 1 << i;
            self.frontier[s] |= 1 << i;
        }

        let mut level = 0;
        loop {
            level += 1;
            let mut progressed = false;
            for v in 0..g.order() {
                let seen = self.visited[v];
                if seen == full {
                    self.next[v] = 0;
                    continue;
                }
                let reach = g.adj(v).iter().fold(0u64, |acc, &w| acc | self.frontier[w]);
                let fresh = reach & !seen;
                self.next[v] = fresh;
                if fresh != 0 {
                    self.visited[v] = seen | fresh;
                    progressed = true;
                    // v ascends, so the first hit at a new level is the
                    // smallest vertex at that distance
                    let mut bits = fresh;
                    while bits != 0 {
                        let i = bits.trailing_zeros() as usize;
                        bits &= bits - 1;
                        if out[i].0 != level {
                            out[i] = (level, v);
                        }
                    }
                }
            }
            if !progressed {
                return out;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
        }
    }
}

/// Shortest-path distance, `None` if unreachable.
pub fn distance(g: &Graph, u: VertexId, v: VertexId) -> Option<usize> {
    let mut bfs = Bfs::new(g.order());
    bfs.run(g, u);
    match bfs.dist[v] {
        UNSEEN => None,
        d => Some(d as usize),
    }
}

/// Largest distance from `v`, `None` if some vertex is unreachable.
pub fn eccentricity(g: &Graph, v: VertexId) -> Option<usize> {
    let sweep = Bfs::new(g.order()).run(g, v);
    (sweep.reached == g.order()).then_some(sweep.ecc)
}

pub fn exact_diameter(g: &Graph) -> Result<DiameterResult, AnalyticsError> {
    exact_diameter_with_budget(g, DEFAULT_EXACT_BUDGET)
}

/// Maximum eccentricity over all sources: one BFS per vertex, run 64 at a
/// time with bitsets and spread over the rayon pool. The witness is the
/// lexicographically smallest pair at maximum distance, independent of
/// scheduling.
pub fn exact_diameter_with_budget(
    g: &Graph,
    budget: usize,
) -> Result<DiameterResult, AnalyticsError> {
    let n = g.order();
    if n < 2 {
        return Err(AnalyticsError::TooSmall { order: n });
    }
    if n > budget {
        return Err(AnalyticsError::ExceedsBudget { order: n, budget });
    }
    if !g.is_connected() {
        return Err(AnalyticsError::Disconnected);
    }

    let (ecc, Reverse(u), v) = (0..n.div_ceil(64))
        .into_par_iter()
        .map_init(
            || BatchBfs::new(n),
            |bfs, batch| {
                let start = batch * 64;
                let sources = start..(start + 64).min(n);
                bfs.run(g, sources)
                    .into_iter()
                    .enumerate()
                    .map(|(i, (ecc, far))| (ecc, Reverse(start + i), far))
                    .max_by_key(|&(ecc, src, _)| (ecc, src))
                    .expect("non-empty batch")
            },
        )
        .max_by_key(|&(ecc, src, _)| (ecc, src))
        .expect("n >= 2");

    Ok(DiameterResult {
        diameter: ecc,
        witness: (u, v),
        method: DiameterMethod::Exact,
    })
}

/// Cheap diameter bracket from three traversals.
///
/// The lower bound is a double sweep: BFS from vertex 0, then from the
/// farthest vertex it found. The upper bound is twice the eccentricity of a
/// maximum-degree vertex (triangle inequality through that vertex).
pub fn fast_diameter_bounds(g: &Graph) -> Result<DiameterBounds, AnalyticsError> {
    let n = g.order();
    if n == 0 {
        return Err(AnalyticsError::TooSmall { order: 0 });
    }
    let mut bfs = Bfs::new(n);
    let first = bfs.run(g, 0);
    if first.reached != n {
        return Err(AnalyticsError::Disconnected);
    }
    let second = bfs.run(g, first.farthest);
    let (lower, lower_witness) = if second.ecc > first.ecc {
        let (a, b) = (first.farthest, second.farthest);
        (second.ecc, (a.min(b), a.max(b)))
    } else {
        (first.ecc, (0, first.farthest))
    };

    let hub = g.max_degree_vertex().expect("n >= 1");
    let hub_ecc = if hub == 0 { first.ecc } else { bfs.run(g, hub).ecc };

    Ok(DiameterBounds {
        lower,
        upper: 2 * hub_ecc,
        lower_witness,
    })
}

/// Exact diameter within `budget`; above it, the fast bounds, accepted only
/// when they coincide.
pub fn measure_diameter(g: &Graph, budget: usize) -> Result<DiameterResult, AnalyticsError> {
    if g.order() <= budget {
        return exact_diameter_with_budget(g, budget);
    }
    let b = fast_diameter_bounds(g)?;
    if b.lower != b.upper {
        return Err(AnalyticsError::BoundsInconclusive {
            lower: b.lower,
            upper: b.upper,
        });
    }
    Ok(DiameterResult {
        diameter: b.lower,
        witness: b.lower_witness,
        method: DiameterMethod::Bounded,
    })
}
