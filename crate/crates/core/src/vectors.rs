//! Mixed-alphabet vectors in Z2^alpha x R^beta, the extended Gray maps,
//! and coordinate pairings (involutions).
//!
//! The Gray image of a vector of shape (alpha, beta) is a binary word of
//! length n = alpha + 2*beta: the alpha binary coordinates first, then the
//! two image bits of each ring coordinate in order, so ring coordinate `i`
//! (0-based) occupies binary positions alpha + 2i and alpha + 2i + 1.

use std::fmt;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::rings::{vartheta, vartheta_inv, Symbol, Z2u, Z4};

/// An element of Z2^alpha x R^beta.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedVector<S: Symbol> {
    pub bits: Vec<bool>,
    pub ring: Vec<S>,
}

impl<S: Symbol> MixedVector<S> {
    pub fn new(bits: Vec<bool>, ring: Vec<S>) -> Self {
        MixedVector { bits, ring }
    }

    pub fn zero(alpha: usize, beta: usize) -> Self {
        MixedVector {
            bits: vec![false; alpha],
            ring: vec![S::zero(); beta],
        }
    }

    pub fn alpha(&self) -> usize {
        self.bits.len()
    }

    pub fn beta(&self) -> usize {
        self.ring.len()
    }

    /// Length of the Gray image.
    pub fn gray_len(&self) -> usize {
        self.alpha() + 2 * self.beta()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b) && self.ring.iter().all(|&s| s == S::zero())
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.alpha() != other.alpha() || self.beta() != other.beta() {
            return Err(Error::ShapeMismatch {
                expected_alpha: self.alpha(),
                expected_beta: self.beta(),
                got_alpha: other.alpha(),
                got_beta: other.beta(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(MixedVector {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a ^ b)
                .collect(),
            ring: self
                .ring
                .iter()
                .zip(&other.ring)
                .map(|(&a, &b)| a.add(b))
                .collect(),
        })
    }

    /// Scalar action: the binary part is scaled by the bit image of
    /// lambda, the ring part by lambda itself.
    pub fn scalar_mul(&self, lambda: S) -> Self {
        let p = lambda.to_bit();
        MixedVector {
            bits: self.bits.iter().map(|&b| b & p).collect(),
            ring: self.ring.iter().map(|&s| lambda.mul(s)).collect(),
        }
    }

    /// Inner product: the binary coordinates contribute through
    /// `lift_bit` (u*sum for Z2[u], 2*sum for Z4), the ring coordinates
    /// through ring products.
    pub fn inner_product(&self, other: &Self) -> Result<S> {
        self.check_shape(other)?;
        let parity = self
            .bits
            .iter()
            .zip(&other.bits)
            .fold(false, |acc, (&a, &b)| acc ^ (a & b));
        let mut acc = S::lift_bit(parity);
        for (&a, &b) in self.ring.iter().zip(&other.ring) {
            acc = acc.add(a.mul(b));
        }
        Ok(acc)
    }

    /// Coordinatewise product (bit product on the binary part).
    pub fn star(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        Ok(MixedVector {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| a & b)
                .collect(),
            ring: self
                .ring
                .iter()
                .zip(&other.ring)
                .map(|(&a, &b)| a.mul(b))
                .collect(),
        })
    }

    /// Extended Gray map: identity on the binary part, the two-bit
    /// symbol map coordinatewise on the ring part.
    pub fn gray(&self) -> Bits {
        let mut out = Bits::zeros(self.gray_len());
        for (i, &b) in self.bits.iter().enumerate() {
            out.set(i, b);
        }
        for (i, &s) in self.ring.iter().enumerate() {
            let (hi, lo) = s.gray();
            out.set(self.alpha() + 2 * i, hi);
            out.set(self.alpha() + 2 * i + 1, lo);
        }
        out
    }

    /// Inverse Gray map at a fixed shape.
    pub fn gray_inv(word: &Bits, alpha: usize, beta: usize) -> Result<Self> {
        if word.len() != alpha + 2 * beta {
            return Err(Error::LengthMismatch {
                expected: alpha + 2 * beta,
                got: word.len(),
            });
        }
        Ok(MixedVector {
            bits: (0..alpha).map(|i| word.get(i)).collect(),
            ring: (0..beta)
                .map(|i| S::from_gray(word.get(alpha + 2 * i), word.get(alpha + 2 * i + 1)))
                .collect(),
        })
    }
}

impl MixedVector<Z2u> {
    /// Multiplication by u; shorthand for `scalar_mul(u)`.
    pub fn times_u(&self) -> Self {
        self.scalar_mul(crate::rings::Z2U_U)
    }
}

/// theta: change of alphabet Z4 -> Z2[u], coordinatewise vartheta on the
/// ring part. Satisfies gray(theta(x)) = gray(x).
pub fn theta(x: &MixedVector<Z4>) -> MixedVector<Z2u> {
    MixedVector {
        bits: x.bits.clone(),
        ring: x.ring.iter().map(|&s| vartheta(s)).collect(),
    }
}

pub fn theta_inv(x: &MixedVector<Z2u>) -> MixedVector<Z4> {
    MixedVector {
        bits: x.bits.clone(),
        ring: x.ring.iter().map(|&s| vartheta_inv(s)).collect(),
    }
}

impl<S: Symbol> fmt::Display for MixedVector<S> {
    /// Vector literal syntax: `(b1 ... b_alpha | r1 ... r_beta)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, &b) in self.bits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", u8::from(b))?;
        }
        write!(f, " |")?;
        for &s in &self.ring {
            write!(f, " {s}")?;
        }
        write!(f, ")")
    }
}

impl<S: Symbol> fmt::Debug for MixedVector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An involution on coordinate positions: disjoint transpositions plus
/// the remaining fixed coordinates.
///
/// Stored 0-indexed with each pair `(i, j)` satisfying `i < j` and the
/// pair list sorted by first endpoint; external formats are 1-indexed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Pairing {
    n: usize,
    pairs: Vec<(usize, usize)>,
    fixed: Vec<usize>,
}

impl Pairing {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut canon: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            if a >= n || b >= n {
                return Err(Error::InvalidPairing(format!(
                    "coordinate {} out of range 1..={n}",
                    a.max(b) + 1
                )));
            }
            if a == b {
                return Err(Error::InvalidPairing(format!(
                    "coordinate {} paired with itself",
                    a + 1
                )));
            }
            let (lo, hi) = (a.min(b), a.max(b));
            if seen[lo] || seen[hi] {
                return Err(Error::InvalidPairing(format!(
                    "coordinate {} appears in two pairs",
                    if seen[lo] { lo } else { hi } + 1
                )));
            }
            seen[lo] = true;
            seen[hi] = true;
            canon.push((lo, hi));
        }
        canon.sort_unstable();
        let fixed = (0..n).filter(|&i| !seen[i]).collect();
        Ok(Pairing {
            n,
            pairs: canon,
            fixed,
        })
    }

    pub fn identity(n: usize) -> Self {
        Pairing {
            n,
            pairs: Vec::new(),
            fixed: (0..n).collect(),
        }
    }

    /// The pairing that swaps the two Gray-image bits of every ring
    /// coordinate at shape (alpha, beta).
    pub fn canonical(alpha: usize, beta: usize) -> Self {
        Pairing {
            n: alpha + 2 * beta,
            pairs: (0..beta)
                .map(|i| (alpha + 2 * i, alpha + 2 * i + 1))
                .collect(),
            fixed: (0..alpha).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn fixed(&self) -> &[usize] {
        &self.fixed
    }

    /// Number of fixed coordinates.
    pub fn alpha(&self) -> usize {
        self.fixed.len()
    }

    /// Number of transpositions.
    pub fn beta(&self) -> usize {
        self.pairs.len()
    }

    pub fn apply(&self, w: &Bits) -> Result<Bits> {
        if w.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: w.len(),
            });
        }
        let mut out = w.clone();
        for &(i, j) in &self.pairs {
            out.swap(i, j);
        }
        Ok(out)
    }
}

impl fmt::Display for Pairing {
    /// Certificate text format, 1-indexed:
    /// `pairs: (1,2) (3,4) ; fixed: 5 6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pairs:")?;
        for &(i, j) in &self.pairs {
            write!(f, " ({},{})", i + 1, j + 1)?;
        }
        write!(f, " ; fixed:")?;
        for &i in &self.fixed {
            write!(f, " {}", i + 1)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Z2U_ONE, Z2U_ONE_PLUS_U, Z2U_U, Z2U_ZERO};

    pub fn z2u(bits: &[u8], ring: &[Z2u]) -> MixedVector<Z2u> {
        MixedVector::new(bits.iter().map(|&b| b == 1).collect(), ring.to_vec())
    }

    pub fn z4(bits: &[u8], ring: &[u8]) -> MixedVector<Z4> {
        MixedVector::new(
            bits.iter().map(|&b| b == 1).collect(),
            ring.iter().map(|&v| Z4::new(v)).collect(),
        )
    }

    fn b(s: &str) -> Bits {
        Bits::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
    }

    #[test]
    fn scalar_mul_by_u() {
        // u * (1 | 1, 1+u) = (0 | u, u)
        let x = z2u(&[1], &[Z2U_ONE, Z2U_ONE_PLUS_U]);
        assert_eq!(x.times_u(), z2u(&[0], &[Z2U_U, Z2U_U]));
        // identity and zero scalars
        assert_eq!(x.scalar_mul(Z2U_ONE), x);
        let y = z2u(&[1], &[Z2U_U, Z2U_ZERO]);
        assert!(y.scalar_mul(Z2U_ZERO).is_zero());
    }

    #[test]
    fn inner_product_z2u_examples() {
        let x = z2u(&[1], &[Z2U_ONE]);
        assert_eq!(x.inner_product(&x).unwrap(), Z2U_ONE_PLUS_U);
        let zero = MixedVector::<Z2u>::zero(1, 1);
        assert_eq!(zero.inner_product(&x).unwrap(), Z2U_ZERO);
        let a = z2u(&[], &[Z2U_ONE, Z2U_U]);
        let c = z2u(&[], &[Z2U_U, Z2U_ONE]);
        assert_eq!(a.inner_product(&c).unwrap(), Z2U_ZERO);
    }

    #[test]
    fn inner_product_z4_examples() {
        let x = z4(&[1], &[1]);
        let y = z4(&[1], &[3]);
        assert_eq!(x.inner_product(&y).unwrap(), Z4::new(1));
        let a = z4(&[], &[1, 1, 2]);
        assert_eq!(a.inner_product(&a).unwrap(), Z4::new(2));
        assert_eq!(
            MixedVector::<Z4>::zero(1, 1)
                .inner_product(&z4(&[1], &[2]))
                .unwrap(),
            Z4::new(0)
        );
    }

    #[test]
    fn gray_psi_examples() {
        assert_eq!(z2u(&[0, 1], &[Z2U_U]).gray(), b("0111"));
        assert!(MixedVector::<Z2u>::zero(2, 1).gray().is_zero());
        assert_eq!(z2u(&[], &[Z2U_ONE_PLUS_U, Z2U_ONE]).gray(), b("1001"));
    }

    #[test]
    fn gray_phi_examples() {
        assert_eq!(z4(&[], &[1, 1, 1]).gray(), b("010101"));
        assert!(MixedVector::<Z4>::zero(0, 3).gray().is_zero());
        assert_eq!(z4(&[], &[0, 2, 3]).gray(), b("001110"));
    }

    #[test]
    fn star_examples() {
        assert_eq!(
            z4(&[], &[1]).star(&z4(&[], &[3])).unwrap(),
            z4(&[], &[3])
        );
        assert_eq!(
            z4(&[], &[2]).star(&z4(&[], &[2])).unwrap(),
            z4(&[], &[0])
        );
        let x = z4(&[1, 0], &[1, 3]);
        assert!(x.star(&MixedVector::zero(2, 2)).unwrap().is_zero());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(
            theta(&z4(&[], &[2, 3])),
            z2u(&[], &[Z2U_U, Z2U_ONE_PLUS_U])
        );
        assert!(theta(&MixedVector::<Z4>::zero(1, 2)).is_zero());
        assert_eq!(theta(&z4(&[1], &[1])), z2u(&[1], &[Z2U_ONE]));
    }

    #[test]
    fn pairing_apply() {
        let p = Pairing::new(2, vec![(0, 1)]).unwrap();
        assert_eq!(p.apply(&b("01")).unwrap(), b("10"));
        let id = Pairing::identity(3);
        assert_eq!(id.apply(&b("101")).unwrap(), b("101"));
        // the H3 pairing: swap (4,5) and (6,7), 1-indexed
        let p = Pairing::new(7, vec![(3, 4), (5, 6)]).unwrap();
        assert_eq!(p.apply(&b("1010110")).unwrap(), b("1011001"));
    }

    #[test]
    fn pairing_rejects_overlap() {
        assert!(Pairing::new(4, vec![(0, 1), (1, 2)]).is_err());
        assert!(Pairing::new(4, vec![(0, 4)]).is_err());
        assert!(Pairing::new(4, vec![(2, 2)]).is_err());
    }

    #[test]
    fn pairing_display_is_one_indexed() {
        let p = Pairing::new(7, vec![(5, 6), (3, 4)]).unwrap();
        assert_eq!(p.to_string(), "pairs: (4,5) (6,7) ; fixed: 1 2 3");
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let x = z2u(&[1], &[Z2U_ONE]);
        let y = MixedVector::<Z2u>::zero(2, 1);
        assert!(matches!(
            x.add(&y),
            Err(Error::ShapeMismatch { .. })
        ));
    }
}
