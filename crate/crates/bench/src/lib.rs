//! Seeded inputs shared by the benchmarks in `benches/`.

use cocycle_core::zlin::IntMatrix;
use cocycle_core::{Cochain, FinAbGroup, FourCocycleData};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// An `n x n` matrix with entries in `[-20, 20]`.
pub fn matrix(n: usize, seed: u64) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, rng.gen_range(-20i64..=20));
        }
    }
    m
}

pub fn cochain(b: &FinAbGroup, a: &FinAbGroup, arity: usize, seed: u64) -> Cochain {
    Cochain::random(b, a, arity, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// `dm` for a random 3-cochain `m`.
pub fn four_coboundary(b: &FinAbGroup, seed: u64) -> FourCocycleData {
    FourCocycleData::new(cochain(b, b, 3, seed).coboundary()).expect("coboundaries are cocycles")
}

#[cfg(test)]
mod tests {
    #[test]
    fn inputs_are_reproducible() {
        assert!(super::matrix(5, 1) == super::matrix(5, 1));
        let b = cocycle_core::FinAbGroup::cyclic(2);
        assert!(super::four_coboundary(&b, 3).f().is_cocycle().passed());
    }
}
