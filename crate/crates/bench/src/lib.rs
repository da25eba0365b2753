//! Fixed benchmark inputs, seeded so runs are comparable.

use gelab_core::corpus::{named_graphs, random_graph};
use gelab_core::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// A named graph from the core corpus.
pub fn named(name: &str) -> Graph {
    named_graphs()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, g)| g)
        .unwrap_or_else(|| panic!("no named graph `{name}`"))
}

/// `G(n, p)` with a seed derived from `n`.
pub fn random(n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6e1a_b000 + n as u64);
    random_graph(&mut rng, n, p)
}
