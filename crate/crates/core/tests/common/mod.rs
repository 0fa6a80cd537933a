#![allow(dead_code)]

pub mod dense;

use bfz_core::bfz_quiver::BfzQuiver;
use bfz_core::cartan_graph::{cartan_matrix, LabeledGraph};
use bfz_core::coxeter_words::SignConvention;
use bfz_core::random::{random_pattern, random_reduced_word};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn a3() -> LabeledGraph {
    LabeledGraph::path(3)
}

pub fn d4() -> LabeledGraph {
    LabeledGraph::new(4, &[(1, 3), (2, 3), (4, 3)]).unwrap()
}

pub fn e6() -> LabeledGraph {
    LabeledGraph::new(6, &[(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]).unwrap()
}

pub const E6_WORD: [u32; 17] = [1, 3, 2, 5, 4, 3, 6, 1, 5, 6, 4, 3, 2, 1, 4, 5, 6];
pub const D4_WORD: [u32; 8] = [4, 3, 1, 3, 2, 3, 1, 4];

/// Random `(u, v, pattern)` inputs with `ℓ(u) + ℓ(v) <= max_total`, half of
/// them with the default all-u-then-v order.
pub fn corpus(
    g: &LabeledGraph,
    count: usize,
    max_total: usize,
    seed: u64,
) -> Vec<(Vec<u32>, Vec<u32>, Vec<u8>)> {
    let c = cartan_matrix(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let u = random_reduced_word(&mut rng, &c, max_total / 2);
            let v = random_reduced_word(&mut rng, &c, max_total - u.len());
            let pattern = if i % 2 == 0 {
                std::iter::repeat_n(0, u.len())
                    .chain(std::iter::repeat_n(1, v.len()))
                    .collect()
            } else {
                random_pattern(&mut rng, u.len(), v.len())
            };
            (u, v, pattern)
        })
        .collect()
}

pub fn build(
    g: &LabeledGraph,
    u: &[u32],
    v: &[u32],
    pattern: Option<&[u8]>,
    conv: SignConvention,
) -> BfzQuiver {
    BfzQuiver::build(g, u, v, pattern, conv).unwrap()
}
