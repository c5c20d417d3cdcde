//! Bit vectors and GF(2) row reduction.
//!
//! Words are packed into `u64` blocks, bit `i` of the vector living in
//! block `i / 64`. All linear algebra in the crate goes through [`Rref`].

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// A fixed-length vector over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Bits {
    len: usize,
    blocks: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            blocks: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Bits::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.blocks[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if b {
            self.blocks[i / 64] |= mask;
        } else {
            self.blocks[i / 64] &= !mask;
        }
    }

    pub fn xor_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.blocks.iter_mut().zip(&other.blocks) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &Bits) -> Bits {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Standard binary inner product (parity of the AND).
    pub fn dot(&self, other: &Bits) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.blocks
            .iter()
            .zip(&other.blocks)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn weight(&self) -> usize {
        self.blocks.iter().map(|b| b.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|&b| b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn swap(&mut self, i: usize, j: usize) {
        let (a, b) = (self.get(i), self.get(j));
        self.set(i, b);
        self.set(j, a);
    }

    /// The word as a single block, low coordinate in bit 0.
    pub fn as_u64(&self) -> Result<u64> {
        if self.len > 64 {
            return Err(Error::TooLong(self.len));
        }
        Ok(self.blocks.first().copied().unwrap_or(0))
    }

    pub fn from_u64(word: u64, len: usize) -> Self {
        assert!(len <= 64);
        let mut v = Bits::zeros(len);
        if len > 0 {
            v.blocks[0] = if len == 64 {
                word
            } else {
                word & ((1u64 << len) - 1)
            };
        }
        v
    }
}

impl PartialOrd for Bits {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Bits {
    /// Lexicographic with coordinate 0 most significant.
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.iter().zip(other.iter()) {
            match a.cmp(&b) {
                Ordering::Equal => continue,
                ord => return ord,
            }
        }
        self.len.cmp(&other.len)
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            write!(f, "{}", u8::from(b))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a set of GF(2) rows.
///
/// Rows are linearly independent after construction; `pivots[r]` is the
/// leading column of row `r`, strictly increasing in `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    n: usize,
    rows: Vec<Bits>,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn new(n: usize, input: &[Bits]) -> Result<Self> {
        let mut m = Rref {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        };
        for r in input {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            m.insert(r.clone());
        }
        Ok(m)
    }

    fn insert(&mut self, mut row: Bits) {
        row = self.reduce(&row);
        let Some(p) = row.iter().position(|b| b) else {
            return;
        };
        // keep pivots strictly increasing and clear the new pivot column above
        let at = self.pivots.partition_point(|&q| q < p);
        for r in &mut self.rows {
            if r.get(p) {
                r.xor_assign(&row);
            }
        }
        self.rows.insert(at, row);
        self.pivots.insert(at, p);
    }

    /// Residual of `v` after reduction against the rows.
    pub fn reduce(&self, v: &Bits) -> Bits {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &Bits) -> bool {
        v.len() == self.n && self.reduce(v).is_zero()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Bits] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis of the kernel `{ v : G v^T = 0 }`, i.e. the dual code of the row space.
    pub fn kernel(&self) -> Vec<Bits> {
        let pivot_set: Vec<bool> = {
            let mut s = vec![false; self.n];
            for &p in &self.pivots {
                s[p] = true;
            }
            s
        };
        let mut basis = Vec::with_capacity(self.n - self.rank());
        for j in 0..self.n {
            if pivot_set[j] {
                continue;
            }
            let mut v = Bits::zeros(self.n);
            v.set(j, true);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if row.get(j) {
                    v.set(p, true);
                }
            }
            basis.push(v);
        }
        basis
    }
}
