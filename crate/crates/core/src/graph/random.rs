//! Uniform random graphs G(n, d).
//!
//! The stream is ChaCha8 (`rand_chacha`) seeded with `seed_from_u64`, so a
//! given `(n, d, seed)` produces the same graph on every platform. Pairs are
//! drawn in row-major order over `u < v`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Builder, Graph, GraphError};

/// Each of the n(n-1)/2 pairs becomes an edge independently with
/// probability `density`.
pub fn gen_random(n: usize, density: f64, seed: u64) -> Result<Graph, GraphError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    gen_random_with(&mut rng, n, density)
}

/// Like [`gen_random`] but draws from a caller-owned stream, which keeps
/// advancing across calls.
pub fn gen_random_with<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> Result<Graph, GraphError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(GraphError::InvalidDensity(density));
    }
    let mut b = Builder::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                b.add_edge(u, v).expect("in range");
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extreme_densities() {
        for seed in [0, 1, 99] {
            assert_eq!(gen_random(100, 0.0, seed).unwrap().edge_count(), 0);
            assert_eq!(gen_random(100, 1.0, seed).unwrap(), Graph::complete(100));
        }
    }

    #[test]
    fn deterministic_per_seed() {
        let a = gen_random(250, 0.5, 42).unwrap();
        let b = gen_random(250, 0.5, 42).unwrap();
        let c = gen_random(250, 0.5, 43).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn density_is_roughly_respected() {
        let g = gen_random(400, 0.3, 7).unwrap();
        let pairs = 400.0 * 399.0 / 2.0;
        let observed = g.edge_count() as f64 / pairs;
        assert!((observed - 0.3).abs() < 0.01, "observed density {observed}");
    }

    #[test]
    fn rejects_bad_density() {
        assert!(matches!(gen_random(5, 1.5, 0), Err(GraphError::InvalidDensity(_))));
        assert!(matches!(gen_random(5, -0.1, 0), Err(GraphError::InvalidDensity(_))));
        assert!(matches!(gen_random(5, f64::NAN, 0), Err(GraphError::InvalidDensity(_))));
    }
}
