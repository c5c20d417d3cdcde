//! Seeded random code generation for the property suites. Everything is
//! driven by a caller-provided ChaCha stream so reports can print one
//! seed and be replayed exactly.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::codes::{BinaryLinearCode, Budget, Z2uCode, Z4Code};
use crate::rings::{Symbol, Z2u, Z4};
use crate::vectors::MixedVector;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_vector<S: Symbol>(rng: &mut ChaCha8Rng, alpha: usize, beta: usize) -> MixedVector<S> {
    let symbols = S::all();
    MixedVector::new(
        (0..alpha).map(|_| rng.gen()).collect(),
        (0..beta).map(|_| symbols[rng.gen_range(0..4)]).collect(),
    )
}

/// Random shape with ambient group of order 2^alpha * 4^beta at most
/// 2^max_log2 and beta >= 1.
fn random_shape(rng: &mut ChaCha8Rng, max_log2: usize) -> (usize, usize) {
    loop {
        let beta = rng.gen_range(1..=max_log2 / 2);
        let alpha = rng.gen_range(0..=max_log2 - 2 * beta);
        if alpha + 2 * beta <= max_log2 {
            return (alpha, beta);
        }
    }
}

/// A random additive code over the mixed Z2[u] alphabet, ambient order
/// at most 2^max_log2.
pub fn random_z2u_code(rng: &mut ChaCha8Rng, max_log2: usize) -> Z2uCode {
    let (alpha, beta) = random_shape(rng, max_log2);
    let k = rng.gen_range(1..=3);
    let gens: Vec<MixedVector<Z2u>> = (0..k).map(|_| random_vector(rng, alpha, beta)).collect();
    Z2uCode::span(alpha, beta, &gens).expect("shapes match")
}

/// A random additive code over the mixed Z4 alphabet, ambient order at
/// most 2^max_log2.
pub fn random_z4_code(rng: &mut ChaCha8Rng, max_log2: usize) -> Z4Code {
    let (alpha, beta) = random_shape(rng, max_log2);
    let k = rng.gen_range(1..=3);
    let gens: Vec<MixedVector<Z4>> = (0..k).map(|_| random_vector(rng, alpha, beta)).collect();
    Z4Code::span(alpha, beta, &gens, Budget(1 << max_log2)).expect("ambient bounded")
}

/// A random binary linear code of length n with up to k generator rows.
pub fn random_binary_code(rng: &mut ChaCha8Rng, n: usize, k: usize) -> BinaryLinearCode {
    let rows: Vec<Bits> = (0..k)
        .map(|_| Bits::from_bools(&(0..n).map(|_| rng.gen()).collect::<Vec<bool>>()))
        .collect();
    BinaryLinearCode::span(n, &rows).expect("rows have length n")
}
