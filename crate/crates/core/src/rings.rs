//! Arithmetic for the three alphabets Z2, Z4 and Z2[u], plus the
//! single-symbol maps between them.
//!
//! Z2[u] = {0, 1, u, 1+u} with u^2 = 0. Addition is componentwise XOR
//! (the additive group is the Klein four-group) and the units are
//! exactly {1, 1+u}. Z4 is the usual ring of integers modulo 4.
//!
//! Text encoding of symbols is fixed across all file formats:
//! `0 1 u v` for Z2[u] (with `v` = 1+u) and `0 1 2 3` for Z4.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul};

/// An element a + b*u of Z2[u].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Z2u {
    /// Constant part.
    pub a: bool,
    /// Coefficient of u.
    pub b: bool,
}

pub const Z2U_ZERO: Z2u = Z2u { a: false, b: false };
pub const Z2U_ONE: Z2u = Z2u { a: true, b: false };
pub const Z2U_U: Z2u = Z2u { a: false, b: true };
pub const Z2U_ONE_PLUS_U: Z2u = Z2u { a: true, b: true };

impl Add for Z2u {
    type Output = Z2u;
    fn add(self, rhs: Z2u) -> Z2u {
        Z2u {
            a: self.a ^ rhs.a,
            b: self.b ^ rhs.b,
        }
    }
}

impl Mul for Z2u {
    type Output = Z2u;
    fn mul(self, rhs: Z2u) -> Z2u {
        // (a + bu)(c + du) = ac + (ad + bc)u, since u^2 = 0
        Z2u {
            a: self.a & rhs.a,
            b: (self.a & rhs.b) ^ (self.b & rhs.a),
        }
    }
}

impl Z2u {
    /// The projection pi: pi(0) = pi(u) = 0, pi(1) = pi(1+u) = 1.
    pub fn pi(self) -> bool {
        self.a
    }

    /// The Gray-like image of a single symbol:
    /// 0 -> (0,0), 1 -> (0,1), u -> (1,1), 1+u -> (1,0).
    pub fn psi(self) -> (bool, bool) {
        (self.b, self.a ^ self.b)
    }

    pub fn psi_inv(hi: bool, lo: bool) -> Z2u {
        Z2u {
            a: hi ^ lo,
            b: hi,
        }
    }

    pub fn is_unit(self) -> bool {
        self.a
    }
}

impl fmt::Display for Z2u {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match (self.a, self.b) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "u",
            (true, true) => "v",
        })
    }
}

/// An element of Z4.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Z4(u8);

impl Z4 {
    pub fn new(v: u8) -> Z4 {
        Z4(v & 3)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The classical Gray image: 0 -> (0,0), 1 -> (0,1), 2 -> (1,1), 3 -> (1,0).
    pub fn phi(self) -> (bool, bool) {
        match self.0 {
            0 => (false, false),
            1 => (false, true),
            2 => (true, true),
            _ => (true, false),
        }
    }

    pub fn phi_inv(hi: bool, lo: bool) -> Z4 {
        match (hi, lo) {
            (false, false) => Z4(0),
            (false, true) => Z4(1),
            (true, true) => Z4(2),
            (true, false) => Z4(3),
        }
    }

    pub fn is_unit(self) -> bool {
        self.0 & 1 == 1
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) & 3)
    }
}

impl Mul for Z4 {
    type Output = Z4;
    fn mul(self, rhs: Z4) -> Z4 {
        Z4((self.0 * rhs.0) & 3)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// vartheta: Z4 -> Z2[u], a monoid isomorphism on the multiplicative
/// structure: 0 -> 0, 1 -> 1, 2 -> u, 3 -> 1+u. Not additive.
pub fn vartheta(x: Z4) -> Z2u {
    match x.value() {
        0 => Z2U_ZERO,
        1 => Z2U_ONE,
        2 => Z2U_U,
        _ => Z2U_ONE_PLUS_U,
    }
}

pub fn vartheta_inv(x: Z2u) -> Z4 {
    match (x.a, x.b) {
        (false, false) => Z4::new(0),
        (true, false) => Z4::new(1),
        (false, true) => Z4::new(2),
        (true, true) => Z4::new(3),
    }
}

/// Common interface for the two ring alphabets that sit next to the
/// binary coordinates of a mixed vector.
pub trait Symbol: Copy + Eq + Hash + Ord + fmt::Debug + fmt::Display {
    /// Name used in the `ring` header of code files.
    const RING_NAME: &'static str;

    fn zero() -> Self;
    fn add(self, rhs: Self) -> Self;
    fn mul(self, rhs: Self) -> Self;

    /// Two-bit Gray image of the symbol.
    fn gray(self) -> (bool, bool);
    fn from_gray(hi: bool, lo: bool) -> Self;

    /// Reduction mod the maximal ideal; scales binary coordinates under
    /// the scalar action.
    fn to_bit(self) -> bool;
    /// Image of a binary coordinate product inside the ring: `u * p`
    /// for Z2[u], `2 * p` for Z4.
    fn lift_bit(parity: bool) -> Self;

    fn from_token(tok: &str) -> Option<Self>;
    fn all() -> [Self; 4];
}

impl Symbol for Z2u {
    const RING_NAME: &'static str = "z2u";

    fn zero() -> Self {
        Z2U_ZERO
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn gray(self) -> (bool, bool) {
        self.psi()
    }
    fn from_gray(hi: bool, lo: bool) -> Self {
        Z2u::psi_inv(hi, lo)
    }
    fn to_bit(self) -> bool {
        self.pi()
    }
    fn lift_bit(parity: bool) -> Self {
        Z2u {
            a: false,
            b: parity,
        }
    }
    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "0" => Some(Z2U_ZERO),
            "1" => Some(Z2U_ONE),
            "u" => Some(Z2U_U),
            "v" => Some(Z2U_ONE_PLUS_U),
            _ => None,
        }
    }
    fn all() -> [Self; 4] {
        [Z2U_ZERO, Z2U_ONE, Z2U_U, Z2U_ONE_PLUS_U]
    }
}

impl Symbol for Z4 {
    const RING_NAME: &'static str = "z4";

    fn zero() -> Self {
        Z4::new(0)
    }
    fn add(self, rhs: Self) -> Self {
        self + rhs
    }
    fn mul(self, rhs: Self) -> Self {
        self * rhs
    }
    fn gray(self) -> (bool, bool) {
        self.phi()
    }
    fn from_gray(hi: bool, lo: bool) -> Self {
        Z4::phi_inv(hi, lo)
    }
    fn to_bit(self) -> bool {
        self.0 & 1 == 1
    }
    fn lift_bit(parity: bool) -> Self {
        Z4::new(if parity { 2 } else { 0 })
    }
    fn from_token(tok: &str) -> Option<Self> {
        match tok {
            "0" => Some(Z4::new(0)),
            "1" => Some(Z4::new(1)),
            "2" => Some(Z4::new(2)),
            "3" => Some(Z4::new(3)),
            _ => None,
        }
    }
    fn all() -> [Self; 4] {
        [Z4::new(0), Z4::new(1), Z4::new(2), Z4::new(3)]
    }
}
