//! Named verification suites: each re-checks one algebraic statement the
//! rest of the crate relies on, either exhaustively at small sizes or
//! over a seeded random corpus. The fast production routes (pullback
//! duals, generator-pair linearity tests) are compared against
//! independent brute-force oracles here instead of being trusted.

use std::collections::HashSet;

use crate::codes::{dual_z2u_bruteforce, is_z2u_additive_set, macwilliams_transform, Budget};
use crate::corpus;
use crate::error::Result;
use crate::rings::{Symbol, Z2u, Z2U_ONE_PLUS_U, Z2U_U, Z2U_ZERO};
use crate::structure::convert_z2z4;
use crate::vectors::{theta_inv, MixedVector};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl SuiteReport {
    fn new(name: &'static str, pass: bool, detail: String) -> Self {
        SuiteReport { name, pass, detail }
    }
}

pub const SUITES: &[&str] = &[
    "cor1", "lemma2", "lemma4", "lemma5", "prop1", "prop2", "thm3",
];

/// Runs one suite by name, or all of them in name order.
pub fn run(name: &str, seed: u64) -> Option<Vec<SuiteReport>> {
    Some(match name {
        "lemma2" => vec![lemma2()],
        "prop1" => vec![prop1()],
        "cor1" => vec![cor1(seed)],
        "prop2" => vec![prop2(seed)],
        "lemma4" => vec![lemma4()],
        "lemma5" => vec![lemma5(seed)],
        "thm3" => vec![thm3(seed)],
        "all" => SUITES
            .iter()
            .map(|s| run(s, seed).expect("known suite").remove(0))
            .collect(),
        _ => return None,
    })
}

fn all_ring_vectors<S: Symbol>(beta: usize) -> Vec<MixedVector<S>> {
    all_mixed(0, beta)
}

fn all_mixed<S: Symbol>(alpha: usize, beta: usize) -> Vec<MixedVector<S>> {
    let symbols = S::all();
    let total = 1u64 << (alpha + 2 * beta);
    (0..total)
        .map(|c| {
            MixedVector::new(
                (0..alpha).map(|i| c >> i & 1 == 1).collect(),
                (0..beta)
                    .map(|j| symbols[(c >> (alpha + 2 * j) & 3) as usize])
                    .collect(),
            )
        })
        .collect()
}

/// psi(x') . psi(y') = 1 exactly when the ring product x'.y' is 1 or u;
/// exhaustive for beta <= 3.
pub fn lemma2() -> SuiteReport {
    let mut pairs = 0u64;
    for beta in 0..=3usize {
        let vs = all_ring_vectors::<Z2u>(beta);
        for x in &vs {
            for y in &vs {
                pairs += 1;
                let binary = x.gray().dot(&y.gray());
                let ring = x.inner_product(y).expect("same shape");
                if binary != matches!(ring, crate::rings::Z2U_ONE | Z2U_U) {
                    return SuiteReport::new(
                        "lemma2",
                        false,
                        format!("counterexample x'={x} y'={y}"),
                    );
                }
            }
        }
    }
    SuiteReport::new("lemma2", true, format!("{pairs} pairs checked exhaustively"))
}

/// The two inner-product clauses relating x.y to the binary dot products
/// of the Gray images; exhaustive for alpha <= 2, beta <= 2.
pub fn prop1() -> SuiteReport {
    let mut pairs = 0u64;
    for alpha in 0..=2usize {
        for beta in 0..=2usize {
            let vs = all_mixed::<Z2u>(alpha, beta);
            for x in &vs {
                for y in &vs {
                    pairs += 1;
                    let ring = x.inner_product(y).expect("same shape");
                    let dot = x.gray().dot(&y.gray());
                    if ring == Z2U_ZERO && dot {
                        return SuiteReport::new(
                            "prop1",
                            false,
                            format!("clause (i) fails at x={x} y={y}"),
                        );
                    }
                    if ring != Z2U_ZERO && !dot {
                        let y2 = y.scalar_mul(Z2U_ONE_PLUS_U);
                        if !x.gray().dot(&y2.gray()) {
                            return SuiteReport::new(
                                "prop1",
                                false,
                                format!("clause (ii) fails at x={x} y={y}"),
                            );
                        }
                    }
                }
            }
        }
    }
    SuiteReport::new("prop1", true, format!("{pairs} pairs checked exhaustively"))
}

/// The Gray image of the mixed dual equals the binary dual of the Gray
/// image; brute-force ambient dual vs kernel pullback over a random
/// corpus.
pub fn cor1(seed: u64) -> SuiteReport {
    let run = || -> Result<SuiteReport> {
        let mut rng = corpus::rng(seed);
        for i in 0..100 {
            let c = corpus::random_z2u_code(&mut rng, 14);
            let oracle: HashSet<_> = dual_z2u_bruteforce(&c, Budget::default())?
                .into_iter()
                .map(|v| v.gray())
                .collect();
            let fast: HashSet<_> = c
                .dual()
                .gray_code()
                .enumerate(Budget::default())?
                .collect();
            if oracle != fast {
                return Ok(SuiteReport::new(
                    "cor1",
                    false,
                    format!("dual mismatch at corpus index {i} (seed {seed})"),
                ));
            }
        }
        Ok(SuiteReport::new(
            "cor1",
            true,
            format!("100 random codes, seed {seed}"),
        ))
    };
    run().unwrap_or_else(|e| SuiteReport::new("cor1", false, format!("error: {e}")))
}

/// The dual is additive at the same (alpha, beta), the double dual is
/// the original code, and MacWilliams maps one enumerator to the other.
pub fn prop2(seed: u64) -> SuiteReport {
    let run = || -> Result<SuiteReport> {
        let mut rng = corpus::rng(seed);
        for i in 0..100 {
            let c = corpus::random_z2u_code(&mut rng, 14);
            let d = c.dual();
            let fail = |what: &str| {
                Ok(SuiteReport::new(
                    "prop2",
                    false,
                    format!("{what} at corpus index {i} (seed {seed})"),
                ))
            };
            if d.alpha() != c.alpha() || d.beta() != c.beta() {
                return fail("parameter change");
            }
            if d.dual() != c {
                return fail("double dual mismatch");
            }
            // additivity of the dual, checked on the explicit word set:
            // u-closure everywhere, additive closure against generators
            let words: Vec<_> = d.enumerate(Budget::default())?.collect();
            let set: HashSet<_> = words.iter().cloned().collect();
            let gens: Vec<_> = d
                .gray_code()
                .rows()
                .iter()
                .map(|r| MixedVector::<Z2u>::gray_inv(r, d.alpha(), d.beta()).expect("shape"))
                .collect();
            for w in &words {
                if !set.contains(&w.times_u()) {
                    return fail("u-closure failure");
                }
                for g in &gens {
                    if !set.contains(&w.add(g)?) {
                        return fail("additive closure failure");
                    }
                }
            }
            // MacWilliams consistency
            let wc = c.gray_code().weight_enumerator(Budget::default())?;
            let wd = d.gray_code().weight_enumerator(Budget::default())?;
            if macwilliams_transform(&wc, wc.size())? != wd {
                return fail("MacWilliams mismatch");
            }
        }
        Ok(SuiteReport::new(
            "prop2",
            true,
            format!("100 random codes, seed {seed}"),
        ))
    };
    run().unwrap_or_else(|e| SuiteReport::new("prop2", false, format!("error: {e}")))
}

/// Phi(x) + Phi(y) = Phi(x + y) + Phi(2(x * y)); exhaustive for
/// alpha <= 2, beta <= 2.
pub fn lemma4() -> SuiteReport {
    let mut pairs = 0u64;
    for alpha in 0..=2usize {
        for beta in 0..=2usize {
            let vs = all_mixed::<crate::rings::Z4>(alpha, beta);
            for x in &vs {
                for y in &vs {
                    pairs += 1;
                    let s = x.star(y).expect("same shape");
                    let twice = s.add(&s).expect("same shape");
                    let lhs = x.gray().xor(&y.gray());
                    let rhs = x
                        .add(y)
                        .expect("same shape")
                        .gray()
                        .xor(&twice.gray());
                    if lhs != rhs {
                        return SuiteReport::new(
                            "lemma4",
                            false,
                            format!("identity fails at x={x} y={y}"),
                        );
                    }
                }
            }
        }
    }
    SuiteReport::new("lemma4", true, format!("{pairs} pairs checked exhaustively"))
}

/// The generator-pair linearity test agrees with the XOR-closure oracle
/// on the full Gray image, over a random Z4 corpus.
pub fn lemma5(seed: u64) -> SuiteReport {
    let mut rng = corpus::rng(seed);
    let mut linear = 0u32;
    for i in 0..200 {
        let c = corpus::random_z4_code(&mut rng, 10);
        let grays: HashSet<_> = c.gray_words().into_iter().collect();
        let oracle = grays
            .iter()
            .all(|x| grays.iter().all(|y| grays.contains(&x.xor(y))));
        if c.is_gray_linear() != oracle {
            return SuiteReport::new(
                "lemma5",
                false,
                format!("disagreement at corpus index {i} (seed {seed})"),
            );
        }
        if oracle {
            linear += 1;
        }
    }
    SuiteReport::new(
        "lemma5",
        true,
        format!("200 random codes, {linear} Gray-linear, seed {seed}"),
    )
}

/// Conversion from the Z4 alphabet: the output is an additive Z2[u]
/// module with the same Gray image, on the Gray-linear subset of the
/// corpus.
pub fn thm3(seed: u64) -> SuiteReport {
    let run = || -> Result<SuiteReport> {
        let mut rng = corpus::rng(seed);
        let mut converted = 0u32;
        for i in 0..200 {
            let c = corpus::random_z4_code(&mut rng, 10);
            if !c.is_gray_linear() {
                continue;
            }
            converted += 1;
            let out = convert_z2z4(&c)?;
            let fail = |what: &str| {
                Ok(SuiteReport::new(
                    "thm3",
                    false,
                    format!("{what} at corpus index {i} (seed {seed})"),
                ))
            };
            let out_words: Vec<_> = out.enumerate(Budget::default())?.collect();
            if !is_z2u_additive_set(&out_words) {
                return fail("output not additive");
            }
            let gray_in: HashSet<_> = c.gray_words().into_iter().collect();
            let gray_out: HashSet<_> = out_words.iter().map(|w| w.gray()).collect();
            if gray_in != gray_out {
                return fail("Gray image changed");
            }
            // words correspond under the alphabet change
            for w in &out_words {
                if !c.contains(&theta_inv(w))? {
                    return fail("preimage escape");
                }
            }
        }
        Ok(SuiteReport::new(
            "thm3",
            true,
            format!("{converted} Gray-linear codes converted, seed {seed}"),
        ))
    };
    run().unwrap_or_else(|e| SuiteReport::new("thm3", false, format!("error: {e}")))
}
