//! The characterization engine: involution checking, backtracking search
//! for code-preserving coordinate pairings, admissible (alpha, beta)
//! parameters, and conversion from the Z4 alphabet.
//!
//! A binary linear code carries a Z2Z2[u] structure with beta ring
//! coordinates exactly when some involution in its automorphism group
//! fixes all but beta transposed pairs. The search below enumerates
//! candidate pairings with two sound prunings:
//!
//! * coordinates may only be paired when their permutation-invariant
//!   signatures (weight-class incidence counts over the smaller of the
//!   code and its dual) agree;
//! * a partial pairing is abandoned as soon as some generator's partial
//!   image cannot be extended to any codeword, decided coordinates only
//!   (a masked rank test against the generator matrix).
//!
//! Both prunings are invariant under automorphisms, so the first
//! certificate found in branch order is the lexicographically least
//! valid pairing, and running to completion proves non-existence.

use std::time::{Duration, Instant};

use crate::codes::{BinaryLinearCode, Budget, Z2uCode, Z4Code};
use crate::error::{Error, Result};
use crate::rings::Z2u;
use crate::vectors::{theta, MixedVector, Pairing};

/// A witnessed Z2Z2[u] structure for a binary linear code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCertificate {
    pub pairing: Pairing,
    pub witness_checked: bool,
}

impl StructureCertificate {
    pub fn alpha(&self) -> usize {
        self.pairing.alpha()
    }

    pub fn beta(&self) -> usize {
        self.pairing.beta()
    }
}

/// Search limits. Exceeding them yields [`SearchOutcome::Unknown`],
/// never a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct SearchLimits {
    pub node_budget: u64,
    pub timeout: Duration,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            node_budget: 10_000_000,
            timeout: Duration::from_secs(60),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    /// A valid pairing exists; the lexicographically least one.
    Found {
        certificate: StructureCertificate,
        nodes: u64,
    },
    /// The whole space was exhausted without finding a pairing.
    NonExistent { nodes: u64 },
    /// Node or time budget ran out before the space was exhausted.
    Unknown { nodes: u64 },
}

impl SearchOutcome {
    pub fn nodes(&self) -> u64 {
        match self {
            SearchOutcome::Found { nodes, .. }
            | SearchOutcome::NonExistent { nodes }
            | SearchOutcome::Unknown { nodes } => *nodes,
        }
    }

    pub fn certificate(&self) -> Option<&StructureCertificate> {
        match self {
            SearchOutcome::Found { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// True iff applying the pairing to every generator row lands inside the
/// code; by linearity this extends to all codewords.
pub fn check_involution(code: &BinaryLinearCode, pairing: &Pairing) -> Result<bool> {
    if pairing.n() != code.len() {
        return Err(Error::LengthMismatch {
            expected: code.len(),
            got: pairing.n(),
        });
    }
    for row in code.rows() {
        if !code.contains(&pairing.apply(row)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Reads the pairs of a valid certificate as ring coordinates: reorders
/// the code so the fixed coordinates come first, then each transposed
/// pair, and pulls the result back through the Gray map.
pub fn to_additive(code: &BinaryLinearCode, cert: &StructureCertificate) -> Result<Z2uCode> {
    if !check_involution(code, &cert.pairing)? {
        return Err(Error::InvalidCertificate);
    }
    let mut order: Vec<usize> = cert.pairing.fixed().to_vec();
    for &(i, j) in cert.pairing.pairs() {
        order.push(i);
        order.push(j);
    }
    let relabeled = code.relabel(&order)?;
    let (alpha, beta) = (cert.alpha(), cert.beta());
    let gens: Vec<MixedVector<Z2u>> = relabeled
        .rows()
        .iter()
        .map(|r| MixedVector::gray_inv(r, alpha, beta).expect("length matches"))
        .collect();
    let additive = Z2uCode::span(alpha, beta, &gens)?;
    debug_assert_eq!(additive.gray_code(), &relabeled);
    Ok(additive)
}

/// Backtracking search for a code-preserving involution with exactly
/// `beta` transpositions. Deterministic: returns the lexicographically
/// least valid pairing under (smallest unpaired coordinate first,
/// smallest partner first).
pub fn find_involution(
    code: &BinaryLinearCode,
    beta: usize,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    let n = code.len();
    if n > 64 {
        return Err(Error::TooLong(n));
    }
    if 2 * beta > n {
        return Ok(SearchOutcome::NonExistent { nodes: 0 });
    }
    if beta == 0 {
        return Ok(SearchOutcome::Found {
            certificate: StructureCertificate {
                pairing: Pairing::identity(n),
                witness_checked: true,
            },
            nodes: 0,
        });
    }
    let rows: Vec<u64> = code
        .rows()
        .iter()
        .map(|r| r.as_u64().expect("n <= 64"))
        .collect();
    let sig = coordinate_signatures(code);
    let mut s = Searcher {
        n,
        rows,
        sig,
        partner: vec![UNDECIDED; n],
        decided: 0,
        images: vec![0; code.dim()],
        pairs_left: beta,
        fixed_left: n - 2 * beta,
        nodes: 0,
        node_budget: limits.node_budget,
        deadline: Instant::now() + limits.timeout,
        aborted: false,
        found: None,
    };
    s.dfs();
    Ok(match (s.found, s.aborted) {
        (Some(pairing), _) => SearchOutcome::Found {
            certificate: StructureCertificate {
                pairing,
                witness_checked: true,
            },
            nodes: s.nodes,
        },
        (None, false) => SearchOutcome::NonExistent { nodes: s.nodes },
        (None, true) => SearchOutcome::Unknown { nodes: s.nodes },
    })
}

/// Per-beta outcome of the admissible-parameter sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleReport {
    /// All (alpha, beta) for which a structure was found, ascending beta.
    pub found: Vec<(usize, usize)>,
    /// Betas whose search hit the limits; the report is partial there.
    pub unknown: Vec<usize>,
}

/// Sweeps beta upward and decides each independently: an involution with
/// beta pairs does not imply one with beta - 1.
pub fn admissible_parameters(
    code: &BinaryLinearCode,
    limits: &SearchLimits,
) -> Result<AdmissibleReport> {
    let n = code.len();
    let mut report = AdmissibleReport {
        found: Vec::new(),
        unknown: Vec::new(),
    };
    for beta in 0..=n / 2 {
        match find_involution(code, beta, limits)? {
            SearchOutcome::Found { .. } => report.found.push((n - 2 * beta, beta)),
            SearchOutcome::NonExistent { .. } => {}
            SearchOutcome::Unknown { .. } => report.unknown.push(beta),
        }
    }
    Ok(report)
}

/// Change of alphabet Z4 -> Z2[u] on a code whose Gray image is linear;
/// the Gray images of input and output coincide.
pub fn convert_z2z4(code: &Z4Code) -> Result<Z2uCode> {
    if !code.is_gray_linear() {
        return Err(Error::GrayImageNonlinear);
    }
    let gens: Vec<MixedVector<Z2u>> = code.generators().iter().map(theta).collect();
    Z2uCode::span(code.alpha(), code.beta(), &gens)
}

/// Brute-force automorphism group order over all n! coordinate
/// permutations. Test oracle only; capped at n <= 8.
pub fn brute_force_aut_order(code: &BinaryLinearCode) -> Result<u64> {
    let n = code.len();
    if n > 8 {
        return Err(Error::TooLong(n));
    }
    let rows: Vec<u64> = code
        .rows()
        .iter()
        .map(|r| r.as_u64().expect("n <= 8"))
        .collect();
    let mut basis = [0u64; 64];
    for &r in &rows {
        let mut v = r;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                break;
            }
            v ^= basis[h];
        }
    }
    let in_span = |word: u64| {
        let mut v = word;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                return false;
            }
            v ^= basis[h];
        }
        true
    };
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0u64;
    permute(&mut perm, n, &mut |p| {
        let ok = rows.iter().all(|&row| {
            let mut image = 0u64;
            for (i, &src) in p.iter().enumerate() {
                image |= (row >> src & 1) << i;
            }
            in_span(image)
        });
        if ok {
            count += 1;
        }
    });
    Ok(count)
}

// Heap's algorithm.
fn permute(perm: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k <= 1 {
        visit(perm);
        return;
    }
    for i in 0..k {
        permute(perm, k - 1, visit);
        if k % 2 == 0 {
            perm.swap(i, k - 1);
        } else {
            perm.swap(0, k - 1);
        }
    }
}

const UNDECIDED: usize = usize::MAX;

struct Searcher {
    n: usize,
    rows: Vec<u64>,
    sig: Vec<u64>,
    partner: Vec<usize>,
    decided: u64,
    images: Vec<u64>,
    pairs_left: usize,
    fixed_left: usize,
    nodes: u64,
    node_budget: u64,
    deadline: Instant,
    aborted: bool,
    found: Option<Pairing>,
}

impl Searcher {
    /// Returns true when the search should stop (found or aborted).
    fn dfs(&mut self) -> bool {
        if self.pairs_left == 0 {
            // remaining coordinates are all fixed; final membership check
            let full = mask_n(self.n);
            let ok = self
                .rows
                .iter()
                .zip(&self.images)
                .all(|(&r, &im)| reduce(&self.rows, full, im | (r & !self.decided)) == 0);
            if ok {
                let pairs: Vec<(usize, usize)> = (0..self.n)
                    .filter(|&i| self.partner[i] != UNDECIDED && self.partner[i] > i)
                    .map(|i| (i, self.partner[i]))
                    .collect();
                self.found = Some(Pairing::new(self.n, pairs).expect("pairs are disjoint"));
                return true;
            }
            return false;
        }
        let Some(i) = (0..self.n).find(|&i| self.partner[i] == UNDECIDED) else {
            return false;
        };
        // pair i with an ascending partner first: lex-least certificate
        for j in i + 1..self.n {
            if self.partner[j] != UNDECIDED || self.sig[i] != self.sig[j] {
                continue;
            }
            if self.tick() {
                return true;
            }
            self.partner[i] = j;
            self.partner[j] = i;
            self.pairs_left -= 1;
            self.decided |= bit(i) | bit(j);
            for (im, &r) in self.images.iter_mut().zip(&self.rows) {
                *im |= (r >> j & 1) << i | (r >> i & 1) << j;
            }
            if self.feasible() && self.dfs() {
                return true;
            }
            for im in &mut self.images {
                *im &= !(bit(i) | bit(j));
            }
            self.decided &= !(bit(i) | bit(j));
            self.pairs_left += 1;
            self.partner[i] = UNDECIDED;
            self.partner[j] = UNDECIDED;
        }
        if self.fixed_left > 0 {
            if self.tick() {
                return true;
            }
            self.partner[i] = i;
            self.fixed_left -= 1;
            self.decided |= bit(i);
            for (im, &r) in self.images.iter_mut().zip(&self.rows) {
                *im |= r & bit(i);
            }
            if self.feasible() && self.dfs() {
                return true;
            }
            for im in &mut self.images {
                *im &= !bit(i);
            }
            self.decided &= !bit(i);
            self.fixed_left += 1;
            self.partner[i] = UNDECIDED;
        }
        false
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.node_budget
            || (self.nodes % 4096 == 0 && Instant::now() >= self.deadline)
        {
            self.aborted = true;
            return true;
        }
        false
    }

    /// Every generator's partial image must match some codeword on the
    /// decided coordinates.
    fn feasible(&self) -> bool {
        self.images
            .iter()
            .all(|&im| reduce(&self.rows, self.decided, im) == 0)
    }
}

#[inline]
fn bit(i: usize) -> u64 {
    1u64 << i
}

fn mask_n(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Residual of `word` against the span of `rows`, all restricted to the
/// columns in `mask`. Zero iff the masked word lies in the masked span.
fn reduce(rows: &[u64], mask: u64, word: u64) -> u64 {
    let mut basis = [0u64; 64];
    for &r in rows {
        let mut v = r & mask;
        while v != 0 {
            let h = 63 - v.leading_zeros() as usize;
            if basis[h] == 0 {
                basis[h] = v;
                break;
            }
            v ^= basis[h];
        }
    }
    let mut v = word & mask;
    while v != 0 {
        let h = 63 - v.leading_zeros() as usize;
        if basis[h] == 0 {
            return v;
        }
        v ^= basis[h];
    }
    0
}

/// Permutation-invariant per-coordinate signatures: for the smaller of
/// the code and its dual, the count of codewords of each weight whose
/// support contains the coordinate. Automorphisms preserve these, so
/// unequal signatures can never be transposed by a valid involution.
fn coordinate_signatures(code: &BinaryLinearCode) -> Vec<u64> {
    use std::collections::HashMap;

    let n = code.len();
    let side = if code.dim() * 2 <= n {
        code.clone()
    } else {
        code.dual()
    };
    if side.dim() > 20 {
        return vec![0; n];
    }
    let words: Vec<u64> = side
        .enumerate(Budget(1 << 21))
        .expect("dim <= 20")
        .map(|w| w.as_u64().expect("n <= 64"))
        .collect();
    let mut profile: Vec<Vec<u64>> = vec![vec![0; n + 1]; n];
    for &w in &words {
        let wt = w.count_ones() as usize;
        for (i, p) in profile.iter_mut().enumerate() {
            if w >> i & 1 == 1 {
                p[wt] += 1;
            }
        }
    }
    let mut ids: HashMap<Vec<u64>, u64> = HashMap::new();
    profile
        .into_iter()
        .map(|p| {
            let next = ids.len() as u64;
            *ids.entry(p).or_insert(next)
        })
        .collect()
}
