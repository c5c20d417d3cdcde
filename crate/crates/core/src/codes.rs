//! Binary linear codes and additive codes over the two mixed alphabets:
//! span and closure, membership, enumeration, duality, weight
//! enumerators and the MacWilliams transform.
//!
//! A Z2Z2[u]-additive code is stored through the binary reduced row
//! echelon form of the Gray images of its generators together with
//! their u-multiples; the module span equals that GF(2) span because the
//! Gray map is additive and `g, u*g` generate the cyclic module of `g`.
//! A Z2Z4-additive code keeps an explicit closure set, since its Gray
//! image is in general not linear.

use std::collections::HashSet;

use crate::bits::{Bits, Rref};
use crate::error::{Error, Result};
use crate::rings::{Symbol, Z2u, Z4};
use crate::vectors::MixedVector;

/// Cap on the number of elements any enumeration is allowed to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1 << 24)
    }
}

impl Budget {
    fn check_log2(self, log2_size: u32) -> Result<u64> {
        if log2_size >= 63 || (1u64 << log2_size) > self.0 {
            Err(Error::BudgetExceeded {
                log2_size,
                budget: self.0,
            })
        } else {
            Ok(1 << log2_size)
        }
    }
}

/// A GF(2) row space held in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryLinearCode {
    rref: Rref,
}

impl BinaryLinearCode {
    pub fn span(n: usize, rows: &[Bits]) -> Result<Self> {
        Ok(BinaryLinearCode {
            rref: Rref::new(n, rows)?,
        })
    }

    pub fn zero(n: usize) -> Self {
        BinaryLinearCode {
            rref: Rref::new(n, &[]).expect("empty row list"),
        }
    }

    pub fn len(&self) -> usize {
        self.rref.n()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn dim(&self) -> usize {
        self.rref.rank()
    }

    /// Generator matrix rows (RREF, pivots ascending).
    pub fn rows(&self) -> &[Bits] {
        self.rref.rows()
    }

    pub fn contains(&self, w: &Bits) -> bool {
        self.rref.contains(w)
    }

    /// Kernel of the generator matrix under the standard inner product.
    pub fn dual(&self) -> Self {
        BinaryLinearCode {
            rref: Rref::new(self.len(), &self.rref.kernel()).expect("kernel rows"),
        }
    }

    /// Deterministic codeword stream: lexicographic in the Gray/binary
    /// image, driven by a counter over the information set.
    pub fn enumerate(&self, budget: Budget) -> Result<CodewordIter> {
        let total = budget.check_log2(self.dim() as u32)?;
        Ok(CodewordIter {
            rows: self.rows().to_vec(),
            current: Bits::zeros(self.len()),
            counter: 0,
            total,
        })
    }

    pub fn weight_enumerator(&self, budget: Budget) -> Result<WeightEnumerator> {
        let mut counts = vec![0u64; self.len() + 1];
        for w in self.enumerate(budget)? {
            counts[w.weight()] += 1;
        }
        Ok(WeightEnumerator { counts })
    }

    /// Minimum nonzero weight; `None` for the zero code.
    pub fn min_distance(&self, budget: Budget) -> Result<Option<usize>> {
        let mut best = None;
        for w in self.enumerate(budget)? {
            let wt = w.weight();
            if wt > 0 && best.map_or(true, |b| wt < b) {
                best = Some(wt);
            }
        }
        Ok(best)
    }

    /// The code on relabelled coordinates: new coordinate `t` reads old
    /// coordinate `order[t]`.
    pub fn relabel(&self, order: &[usize]) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: order.len(),
            });
        }
        let rows: Vec<Bits> = self
            .rows()
            .iter()
            .map(|r| Bits::from_bools(&order.iter().map(|&p| r.get(p)).collect::<Vec<_>>()))
            .collect();
        Self::span(self.len(), &rows)
    }
}

pub struct CodewordIter {
    rows: Vec<Bits>,
    current: Bits,
    counter: u64,
    total: u64,
}

impl Iterator for CodewordIter {
    type Item = Bits;

    fn next(&mut self) -> Option<Bits> {
        if self.counter == self.total {
            return None;
        }
        let out = self.current.clone();
        let flipped = self.counter ^ (self.counter + 1);
        self.counter += 1;
        if self.counter < self.total {
            let k = self.rows.len();
            for j in 0..64 {
                if flipped >> j & 1 == 1 && (j as usize) < k {
                    self.current.xor_assign(&self.rows[k - 1 - j as usize]);
                }
            }
        }
        Some(out)
    }
}

/// A Z2Z2[u]-additive code: a Z2[u]-submodule of Z2^alpha x Z2[u]^beta.
#[derive(Clone, Debug)]
pub struct Z2uCode {
    alpha: usize,
    beta: usize,
    generators: Vec<MixedVector<Z2u>>,
    gray: BinaryLinearCode,
}

impl PartialEq for Z2uCode {
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.beta == other.beta && self.gray == other.gray
    }
}
impl Eq for Z2uCode {}

impl Z2uCode {
    /// Smallest Z2[u]-submodule containing the generators, realized as
    /// the GF(2) span of the Gray images of `g` and `u*g` for each
    /// generator `g`.
    pub fn span(alpha: usize, beta: usize, generators: &[MixedVector<Z2u>]) -> Result<Self> {
        let mut rows = Vec::with_capacity(2 * generators.len());
        for g in generators {
            if g.alpha() != alpha || g.beta() != beta {
                return Err(Error::ShapeMismatch {
                    expected_alpha: alpha,
                    expected_beta: beta,
                    got_alpha: g.alpha(),
                    got_beta: g.beta(),
                });
            }
            rows.push(g.gray());
            rows.push(g.times_u().gray());
        }
        Ok(Z2uCode {
            alpha,
            beta,
            generators: generators.to_vec(),
            gray: BinaryLinearCode::span(alpha + 2 * beta, &rows)?,
        })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn generators(&self) -> &[MixedVector<Z2u>] {
        &self.generators
    }

    /// The binary Gray image, which is always linear for this alphabet.
    pub fn gray_code(&self) -> &BinaryLinearCode {
        &self.gray
    }

    pub fn log2_size(&self) -> u32 {
        self.gray.dim() as u32
    }

    pub fn contains(&self, x: &MixedVector<Z2u>) -> Result<bool> {
        if x.alpha() != self.alpha || x.beta() != self.beta {
            return Err(Error::ShapeMismatch {
                expected_alpha: self.alpha,
                expected_beta: self.beta,
                got_alpha: x.alpha(),
                got_beta: x.beta(),
            });
        }
        Ok(self.gray.contains(&x.gray()))
    }

    pub fn enumerate(&self, budget: Budget) -> Result<impl Iterator<Item = MixedVector<Z2u>> + '_> {
        let (alpha, beta) = (self.alpha, self.beta);
        Ok(self
            .gray
            .enumerate(budget)?
            .map(move |w| MixedVector::gray_inv(&w, alpha, beta).expect("shape fixed")))
    }

    /// Fast dual: pull the binary dual of the Gray image back through
    /// the Gray map. Correct because the Z2[u] dual Gray-images to the
    /// binary dual; the brute-force route below exists to test exactly
    /// that instead of assuming it.
    pub fn dual(&self) -> Self {
        let dual_bin = self.gray.dual();
        let gens: Vec<MixedVector<Z2u>> = dual_bin
            .rows()
            .iter()
            .map(|r| MixedVector::gray_inv(r, self.alpha, self.beta).expect("length matches"))
            .collect();
        let code = Z2uCode::span(self.alpha, self.beta, &gens).expect("shapes match");
        debug_assert_eq!(code.gray, dual_bin);
        code
    }
}

/// Brute-force dual over the whole ambient module. Exists as an
/// independent oracle for the fast pullback route.
pub fn dual_z2u_bruteforce(
    code: &Z2uCode,
    budget: Budget,
) -> Result<Vec<MixedVector<Z2u>>> {
    enumerate_ambient::<Z2u>(code.alpha(), code.beta(), budget, |v| {
        code.generators()
            .iter()
            .all(|g| v.inner_product(g).expect("same shape") == Z2u::zero())
    })
}

/// Lemma-1 closure test on an explicit set of vectors: closed under
/// addition and under multiplication by u.
pub fn is_z2u_additive_set(words: &[MixedVector<Z2u>]) -> bool {
    let set: HashSet<&MixedVector<Z2u>> = words.iter().collect();
    words.iter().all(|x| {
        set.contains(&x.times_u())
            && words
                .iter()
                .all(|y| x.add(y).map(|s| set.contains(&s)).unwrap_or(false))
    })
}

fn enumerate_ambient<S: Symbol>(
    alpha: usize,
    beta: usize,
    budget: Budget,
    mut keep: impl FnMut(&MixedVector<S>) -> bool,
) -> Result<Vec<MixedVector<S>>> {
    let n = (alpha + 2 * beta) as u32;
    let total = budget.check_log2(n)?;
    let symbols = S::all();
    let mut out = Vec::new();
    for c in 0..total {
        let bits: Vec<bool> = (0..alpha).map(|i| c >> i & 1 == 1).collect();
        let ring: Vec<S> = (0..beta)
            .map(|j| symbols[(c >> (alpha + 2 * j) & 3) as usize])
            .collect();
        let v = MixedVector::new(bits, ring);
        if keep(&v) {
            out.push(v);
        }
    }
    out.sort();
    Ok(out)
}

/// A Z2Z4-additive code: an additive subgroup of Z2^alpha x Z4^beta,
/// kept as an explicit sorted closure set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Z4Code {
    alpha: usize,
    beta: usize,
    generators: Vec<MixedVector<Z4>>,
    words: Vec<MixedVector<Z4>>,
}

impl Z4Code {
    /// Smallest additive subgroup containing the generators, by closure
    /// under addition.
    pub fn span(
        alpha: usize,
        beta: usize,
        generators: &[MixedVector<Z4>],
        budget: Budget,
    ) -> Result<Self> {
        for g in generators {
            if g.alpha() != alpha || g.beta() != beta {
                return Err(Error::ShapeMismatch {
                    expected_alpha: alpha,
                    expected_beta: beta,
                    got_alpha: g.alpha(),
                    got_beta: g.beta(),
                });
            }
        }
        let mut set = HashSet::new();
        set.insert(MixedVector::<Z4>::zero(alpha, beta));
        let mut frontier: Vec<MixedVector<Z4>> = vec![MixedVector::zero(alpha, beta)];
        while let Some(x) = frontier.pop() {
            for g in generators {
                let y = x.add(g).expect("same shape");
                if set.insert(y.clone()) {
                    if set.len() as u64 > budget.0 {
                        return Err(Error::BudgetExceeded {
                            log2_size: (alpha + 2 * beta) as u32,
                            budget: budget.0,
                        });
                    }
                    frontier.push(y);
                }
            }
        }
        let mut words: Vec<MixedVector<Z4>> = set.into_iter().collect();
        words.sort();
        Ok(Z4Code {
            alpha,
            beta,
            generators: generators.to_vec(),
            words,
        })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn generators(&self) -> &[MixedVector<Z4>] {
        &self.generators
    }

    pub fn size(&self) -> u64 {
        self.words.len() as u64
    }

    /// Codewords in sorted order.
    pub fn words(&self) -> &[MixedVector<Z4>] {
        &self.words
    }

    pub fn contains(&self, x: &MixedVector<Z4>) -> Result<bool> {
        if x.alpha() != self.alpha || x.beta() != self.beta {
            return Err(Error::ShapeMismatch {
                expected_alpha: self.alpha,
                expected_beta: self.beta,
                got_alpha: x.alpha(),
                got_beta: x.beta(),
            });
        }
        Ok(self.words.binary_search(x).is_ok())
    }

    pub fn gray_words(&self) -> Vec<Bits> {
        self.words.iter().map(|w| w.gray()).collect()
    }

    /// Lemma-5 test: the Gray image is linear iff `2(x*y)` stays in the
    /// code; checking generator pairs suffices since the coordinatewise
    /// product distributes over addition.
    pub fn is_gray_linear(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, x)| {
            self.generators[i..].iter().all(|y| {
                let s = x.star(y).expect("same shape");
                let twice = s.add(&s).expect("same shape");
                self.contains(&twice).expect("same shape")
            })
        })
    }

    /// Brute-force dual over the ambient group.
    pub fn dual(&self, budget: Budget) -> Result<Z4Code> {
        let words = enumerate_ambient::<Z4>(self.alpha, self.beta, budget, |v| {
            self.generators
                .iter()
                .all(|g| v.inner_product(g).expect("same shape") == Z4::zero())
        })?;
        Ok(Z4Code {
            alpha: self.alpha,
            beta: self.beta,
            generators: minimal_generators(&words, self.alpha, self.beta),
            words,
        })
    }

    pub fn weight_enumerator(&self) -> WeightEnumerator {
        let n = self.alpha + 2 * self.beta;
        let mut counts = vec![0u64; n + 1];
        for w in &self.words {
            counts[w.gray().weight()] += 1;
        }
        WeightEnumerator { counts }
    }
}

/// Greedy compact generating set for an explicit subgroup.
fn minimal_generators(
    words: &[MixedVector<Z4>],
    alpha: usize,
    beta: usize,
) -> Vec<MixedVector<Z4>> {
    let mut gens: Vec<MixedVector<Z4>> = Vec::new();
    let mut have: HashSet<MixedVector<Z4>> = HashSet::new();
    have.insert(MixedVector::zero(alpha, beta));
    for w in words {
        if have.contains(w) {
            continue;
        }
        gens.push(w.clone());
        // re-close
        let mut frontier: Vec<MixedVector<Z4>> = have.iter().cloned().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.add(g).expect("same shape");
                if have.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
    }
    gens
}

/// Histogram of Gray-image Hamming weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    counts: Vec<u64>,
}

impl WeightEnumerator {
    pub fn new(counts: Vec<u64>) -> Self {
        WeightEnumerator { counts }
    }

    /// Coefficients A_0 ..= A_n.
    pub fn coefficients(&self) -> &[u64] {
        &self.counts
    }

    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn size(&self) -> u64 {
        self.counts.iter().sum()
    }
}

/// Binary MacWilliams transform in exact integer arithmetic. Applied to
/// the enumerator of a linear code of the stated size, the result is the
/// enumerator of its dual.
pub fn macwilliams_transform(w: &WeightEnumerator, size: u64) -> Result<WeightEnumerator> {
    let sum = w.size();
    if sum != size || size == 0 {
        return Err(Error::InconsistentEnumerator { sum, size });
    }
    let n = w.length();
    let binom = binomial_table(n);
    let mut counts = vec![0u64; n + 1];
    for (j, slot) in counts.iter_mut().enumerate() {
        let mut acc: i128 = 0;
        for (i, &a) in w.coefficients().iter().enumerate() {
            if a == 0 {
                continue;
            }
            acc += a as i128 * krawtchouk(&binom, n, j, i);
        }
        if acc < 0 || acc % size as i128 != 0 {
            return Err(Error::InconsistentEnumerator { sum, size });
        }
        *slot = (acc / size as i128) as u64;
    }
    Ok(WeightEnumerator { counts })
}

/// K_j(i; n) = sum_s (-1)^s C(i,s) C(n-i, j-s).
fn krawtchouk(binom: &[Vec<i128>], n: usize, j: usize, i: usize) -> i128 {
    let mut acc: i128 = 0;
    for s in 0..=j.min(i) {
        if j - s > n - i {
            continue;
        }
        let term = binom[i][s] * binom[n - i][j - s];
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn binomial_table(n: usize) -> Vec<Vec<i128>> {
    let mut t = vec![vec![0i128; n + 1]; n + 1];
    for (i, row) in t.iter_mut().enumerate() {
        row[0] = 1;
        for j in 1..=i {
            row[j] = if j == i { 1 } else { 0 };
        }
    }
    for i in 2..=n {
        for j in 1..i {
            t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Z2U_ONE, Z2U_U};

    fn b(s: &str) -> Bits {
        Bits::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    fn z4v(bits: &[u8], ring: &[u8]) -> MixedVector<Z4> {
        MixedVector::new(
            bits.iter().map(|&x| x == 1).collect(),
            ring.iter().map(|&x| Z4::new(x)).collect(),
        )
    }

    #[test]
    fn binary_span_examples() {
        let c = BinaryLinearCode::span(2, &[b("11"), b("11")]).unwrap();
        assert_eq!(c.dim(), 1);
        let z = BinaryLinearCode::span(3, &[]).unwrap();
        assert_eq!(z.dim(), 0);
        assert!(z.contains(&b("000")));
    }

    #[test]
    fn enumerate_is_lexicographic_and_complete() {
        let c = BinaryLinearCode::span(3, &[b("110"), b("011")]).unwrap();
        let words: Vec<Bits> = c.enumerate(Budget::default()).unwrap().collect();
        assert_eq!(words.len(), 4);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert!(words[0].is_zero());
    }

    #[test]
    fn enumerate_budget_exceeded() {
        let rows: Vec<Bits> = (0..5)
            .map(|i| {
                let mut r = Bits::zeros(5);
                r.set(i, true);
                r
            })
            .collect();
        let c = BinaryLinearCode::span(5, &rows).unwrap();
        assert!(matches!(
            c.enumerate(Budget(16)),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn binary_dual_examples() {
        // even(3) <-> repetition(3)
        let even = BinaryLinearCode::span(3, &[b("110"), b("011")]).unwrap();
        let rep = even.dual();
        assert_eq!(rep.dim(), 1);
        assert!(rep.contains(&b("111")));
        assert_eq!(rep.dual(), even);
        // full space -> zero code
        let full = BinaryLinearCode::span(2, &[b("10"), b("01")]).unwrap();
        assert_eq!(full.dual().dim(), 0);
    }

    #[test]
    fn z2u_span_single_generator() {
        let g = MixedVector::new(vec![false], vec![Z2U_ONE]);
        let c = Z2uCode::span(1, 1, &[g]).unwrap();
        assert_eq!(c.log2_size(), 2);
        let words: Vec<_> = c.enumerate(Budget::default()).unwrap().collect();
        assert_eq!(words.len(), 4);
        for w in &words {
            assert!(!w.bits[0]);
        }
        // closed under u and addition
        assert!(is_z2u_additive_set(&words));
    }

    #[test]
    fn z2u_empty_span_is_zero_code() {
        let c = Z2uCode::span(2, 1, &[]).unwrap();
        assert_eq!(c.log2_size(), 0);
        assert!(c.contains(&MixedVector::zero(2, 1)).unwrap());
    }

    #[test]
    fn z2u_dual_trivial_cases() {
        let zero = Z2uCode::span(1, 1, &[]).unwrap();
        let full = zero.dual();
        assert_eq!(full.log2_size(), 3);
        assert_eq!(full.dual().log2_size(), 0);
    }

    #[test]
    fn z2u_bruteforce_dual_matches_pullback() {
        let g1 = MixedVector::new(vec![true, false], vec![Z2U_ONE]);
        let g2 = MixedVector::new(vec![false, true], vec![Z2U_U]);
        let c = Z2uCode::span(2, 1, &[g1, g2]).unwrap();
        let oracle = dual_z2u_bruteforce(&c, Budget::default()).unwrap();
        let fast = c.dual();
        let mut fast_words: Vec<_> = fast.enumerate(Budget::default()).unwrap().collect();
        fast_words.sort();
        assert_eq!(oracle, fast_words);
        assert!(is_z2u_additive_set(&oracle));
    }

    #[test]
    fn z4_span_examples() {
        let c = Z4Code::span(
            0,
            3,
            &[z4v(&[], &[1, 1, 1]), z4v(&[], &[0, 2, 3])],
            Budget::default(),
        )
        .unwrap();
        assert_eq!(c.size(), 16);
        let two = Z4Code::span(0, 1, &[z4v(&[], &[2])], Budget::default()).unwrap();
        assert_eq!(two.size(), 2);
        let zero = Z4Code::span(1, 1, &[], Budget::default()).unwrap();
        assert_eq!(zero.size(), 1);
    }

    #[test]
    fn z4_dual_examples() {
        let c = Z4Code::span(
            0,
            3,
            &[z4v(&[], &[1, 1, 1]), z4v(&[], &[0, 2, 3])],
            Budget::default(),
        )
        .unwrap();
        let d = c.dual(Budget::default()).unwrap();
        assert!(d.contains(&z4v(&[], &[1, 1, 2])).unwrap());
        // Phi(1,1,2) = (0,1,0,1,1,1) is not in the binary dual of the Gray image
        let gray = BinaryLinearCode::span(6, &c.gray_words()).unwrap();
        assert!(!gray.dual().contains(&b("010111")));

        let two = Z4Code::span(0, 1, &[z4v(&[], &[2])], Budget::default()).unwrap();
        let td = two.dual(Budget::default()).unwrap();
        assert_eq!(td.size(), 2);
        assert!(td.contains(&z4v(&[], &[2])).unwrap());
    }

    #[test]
    fn z4_dual_of_zero_is_full_ambient() {
        let zero = Z4Code::span(1, 1, &[], Budget::default()).unwrap();
        assert_eq!(zero.dual(Budget::default()).unwrap().size(), 8);
    }

    #[test]
    fn gray_linearity_lemma() {
        let yes = Z4Code::span(
            0,
            3,
            &[z4v(&[], &[1, 1, 1]), z4v(&[], &[0, 2, 3])],
            Budget::default(),
        )
        .unwrap();
        assert!(yes.is_gray_linear());
        // binary-only code is trivially Gray linear
        let bin = Z4Code::span(3, 0, &[z4v(&[1, 1, 0], &[])], Budget::default()).unwrap();
        assert!(bin.is_gray_linear());
        // generator test agrees with the XOR-closure oracle
        let c = Z4Code::span(
            0,
            4,
            &[z4v(&[], &[1, 1, 1, 0]), z4v(&[], &[0, 1, 2, 1])],
            Budget::default(),
        )
        .unwrap();
        let grays: HashSet<Bits> = c.gray_words().into_iter().collect();
        let oracle = grays
            .iter()
            .all(|x| grays.iter().all(|y| grays.contains(&x.xor(y))));
        assert_eq!(c.is_gray_linear(), oracle);
    }

    #[test]
    fn weight_enumerator_examples() {
        let rep = BinaryLinearCode::span(3, &[b("111")]).unwrap();
        let w = rep.weight_enumerator(Budget::default()).unwrap();
        assert_eq!(w.coefficients(), &[1, 0, 0, 1]);
        assert_eq!(w.size(), 2);
    }

    #[test]
    fn macwilliams_examples() {
        let rep = BinaryLinearCode::span(3, &[b("111")]).unwrap();
        let w = rep.weight_enumerator(Budget::default()).unwrap();
        let even = macwilliams_transform(&w, 2).unwrap();
        assert_eq!(even.coefficients(), &[1, 0, 3, 0]);
        // full space -> zero code
        let full = BinaryLinearCode::span(2, &[b("10"), b("01")]).unwrap();
        let wf = full.weight_enumerator(Budget::default()).unwrap();
        let z = macwilliams_transform(&wf, 4).unwrap();
        assert_eq!(z.coefficients(), &[1, 0, 0]);
    }

    #[test]
    fn macwilliams_rejects_inconsistent_size() {
        let w = WeightEnumerator::new(vec![1, 0, 1]);
        assert!(matches!(
            macwilliams_transform(&w, 3),
            Err(Error::InconsistentEnumerator { .. })
        ));
    }
}
