//! Seeded preferential-attachment (Barabási–Albert) baseline.
//!
//! Growth starts from a complete graph on `m + 1` vertices. Every later
//! vertex picks `m` distinct existing targets, each drawn uniformly from the
//! list of edge endpoints recorded so far (so with probability proportional
//! to degree); a target already chosen for the same vertex is redrawn. Only
//! edges present before the new vertex arrived are eligible.
//!
//! Randomness comes from ChaCha8 seeded with `seed_from_u64(seed)`, so equal
//! seeds give identical graphs on every platform.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct BaConfig {
    /// Final number of vertices.
    pub n: usize,
    /// Edges added with each new vertex.
    pub m: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BaselineError {
    #[error("invalid preferential-attachment config: {0}")]
    InvalidConfig(String),
}

impl BaConfig {
    pub fn new(n: usize, m: usize, seed: u64) -> Result<Self, BaselineError> {
        let cfg = Self { n, m, seed };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), BaselineError> {
        if self.m < 1 {
            return Err(BaselineError::InvalidConfig("m must be at least 1".into()));
        }
        if self.n < self.m + 1 {
            return Err(BaselineError::InvalidConfig(format!(
                "n = {} must be at least m + 1 = {}",
                self.n,
                self.m + 1
            )));
        }
        Ok(())
    }

    /// `m (n - m - 1) + m (m + 1) / 2`.
    pub fn expected_size(&self) -> usize {
        self.m * (self.n - self.m - 1) + self.m * (self.m + 1) / 2
    }
}

pub fn generate_ba(cfg: &BaConfig) -> Result<Graph, BaselineError> {
    cfg.validate()?;
    let BaConfig { n, m, seed } = *cfg;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut builder = GraphBuilder::with_capacity(n, cfg.expected_size());
    let mut endpoints: Vec<VertexId> = Vec::with_capacity(2 * cfg.expected_size());

    for u in 0..=m {
        for v in u + 1..=m {
            builder.add_edge(u, v).expect("clique edge");
            endpoints.extend([u, v]);
        }
    }

    let mut targets: Vec<VertexId> = Vec::with_capacity(m);
    for v in m + 1..n {
        targets.clear();
        while targets.len() < m {
            let w = endpoints[rng.random_range(0..endpoints.len())];
            if !targets.contains(&w) {
                targets.push(w);
            }
        }
        for &w in &targets {
            builder.add_edge(w, v).expect("attachment edge");
            endpoints.extend([w, v]);
        }
    }
    Ok(builder.finalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_when_no_growth() {
        let g = generate_ba(&BaConfig::new(3, 2, 1).unwrap()).unwrap();
        assert_eq!(g.size(), 3);
        assert!(g.degrees().all(|d| d == 2));
    }

    #[test]
    fn size_and_connectivity() {
        let cfg = BaConfig::new(1024, 2, 99).unwrap();
        let g = generate_ba(&cfg).unwrap();
        assert_eq!(g.size(), 2045);
        assert_eq!(cfg.expected_size(), 2045);
        assert!(g.is_connected());
        assert!(g.check_invariants().is_ok());
    }

    #[test]
    fn m_one_is_a_tree() {
        let g = generate_ba(&BaConfig { n: 50, m: 1, seed: 3 }).unwrap();
        assert_eq!(g.size(), 49);
        assert!(g.is_connected());
    }

    #[test]
    fn deterministic() {
        let cfg = BaConfig::new(1024, 2, 7).unwrap();
        assert_eq!(generate_ba(&cfg).unwrap(), generate_ba(&cfg).unwrap());
        let other = BaConfig { seed: 8, ..cfg };
        assert_ne!(generate_ba(&cfg).unwrap(), generate_ba(&other).unwrap());
    }

    #[test]
    fn invalid() {
        assert!(BaConfig::new(2, 2, 0).is_err());
        assert!(BaConfig::new(10, 0, 0).is_err());
        assert!(generate_ba(&BaConfig { n: 1, m: 3, seed: 0 }).is_err());
    }
}
