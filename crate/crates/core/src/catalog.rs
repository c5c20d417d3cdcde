//! Named code constructions and worked-example fixtures: repetition and
//! even codes, the Hamming/simplex/Hadamard family, the two Golay codes,
//! a length-12 code with trivial automorphism group, and the exact
//! mixed-alphabet generator matrices used throughout the tests.
//!
//! `hamming(t)` uses the parity-check matrix whose columns are all
//! nonzero t-bit values in ascending numeric order, top row most
//! significant. For t = 3 this is byte-identical to the fixture matrix
//! `m3()`; the fixture `m4()` is kept verbatim instead of regenerated
//! because its column order is not ascending (1-8, then 10, 12, 14, 9,
//! 11, 13, 15).

use crate::bits::Bits;
use crate::codes::{BinaryLinearCode, Z2uCode};
use crate::error::{Error, Result};
use crate::rings::{Z2u, Z2U_ONE, Z2U_ONE_PLUS_U, Z2U_U, Z2U_ZERO};
use crate::vectors::MixedVector;

fn row(s: &str) -> Bits {
    Bits::from_bools(&s.chars().map(|c| c == '1').collect::<Vec<_>>())
}

fn rows(strs: &[&str]) -> Vec<Bits> {
    strs.iter().map(|s| row(s)).collect()
}

fn z2u_row(bits: &str, ring: &str) -> MixedVector<Z2u> {
    MixedVector::new(
        bits.chars().map(|c| c == '1').collect(),
        ring.chars()
            .map(|c| match c {
                '0' => Z2U_ZERO,
                '1' => Z2U_ONE,
                'u' => Z2U_U,
                'v' => Z2U_ONE_PLUS_U,
                _ => unreachable!("fixture symbol"),
            })
            .collect(),
    )
}

/// The two-word repetition code of odd length.
pub fn repetition(n: usize) -> Result<BinaryLinearCode> {
    if n % 2 == 0 {
        return Err(Error::EvenLength(n));
    }
    let mut g = Bits::zeros(n);
    for i in 0..n {
        g.set(i, true);
    }
    BinaryLinearCode::span(n, &[g])
}

/// All even-weight words of length n (dimension n - 1).
pub fn even_code(n: usize) -> BinaryLinearCode {
    let gens: Vec<Bits> = (0..n.saturating_sub(1))
        .map(|i| {
            let mut g = Bits::zeros(n);
            g.set(i, true);
            g.set(i + 1, true);
            g
        })
        .collect();
    BinaryLinearCode::span(n, &gens).expect("rows have length n")
}

/// Parity-check matrix of `hamming(t)`: row r of t is the weight of bit
/// t-1-r over columns 1..2^t-1 ascending.
pub fn hamming_check(t: usize) -> Vec<Bits> {
    let n = (1usize << t) - 1;
    (0..t)
        .map(|r| {
            let mut g = Bits::zeros(n);
            for j in 1..=n {
                if j >> (t - 1 - r) & 1 == 1 {
                    g.set(j - 1, true);
                }
            }
            g
        })
        .collect()
}

/// The [2^t-1, 2^t-1-t, 3] Hamming code.
pub fn hamming(t: usize) -> BinaryLinearCode {
    simplex(t).dual()
}

/// The dual of the Hamming code: all nonzero words of weight 2^(t-1).
pub fn simplex(t: usize) -> BinaryLinearCode {
    let n = (1usize << t) - 1;
    BinaryLinearCode::span(n, &hamming_check(t)).expect("rows have length n")
}

/// Overall parity extension of an arbitrary code.
pub fn extend(c: &BinaryLinearCode) -> BinaryLinearCode {
    let n = c.len();
    let gens: Vec<Bits> = c
        .rows()
        .iter()
        .map(|r| {
            let mut g = Bits::zeros(n + 1);
            for (i, b) in r.iter().enumerate() {
                g.set(i, b);
            }
            g.set(n, r.weight() % 2 == 1);
            g
        })
        .collect();
    BinaryLinearCode::span(n + 1, &gens).expect("rows have length n + 1")
}

pub fn extended_hamming(t: usize) -> BinaryLinearCode {
    extend(&hamming(t))
}

/// The linear Hadamard code: dual of the extended Hamming code.
pub fn hadamard_linear(t: usize) -> BinaryLinearCode {
    extended_hamming(t).dual()
}

/// The [23,12,7] Golay code via the quadratic-residue construction: the
/// generator polynomial is gcd(x^23 + 1, sum of x^r over the nonzero
/// squares mod 23).
pub fn golay23() -> BinaryLinearCode {
    let m = (1u64 << 23) | 1; // x^23 + 1
    let mut q = 0u64;
    for i in 1..23u64 {
        q |= 1 << (i * i % 23);
    }
    let g = poly_gcd(m, q);
    debug_assert_eq!(deg(g), 11);
    let gens: Vec<Bits> = (0..12).map(|i| Bits::from_u64(g << i, 23)).collect();
    BinaryLinearCode::span(23, &gens).expect("rows have length 23")
}

/// The self-dual [24,12,8] extended Golay code.
pub fn golay24() -> BinaryLinearCode {
    extend(&golay23())
}

fn deg(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

fn poly_gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        // a mod b over GF(2)
        while a != 0 && deg(a) >= deg(b) {
            a ^= b << (deg(a) - deg(b));
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// A [12,6] code whose automorphism group is trivial, so it admits no
/// structure with beta > 0.
pub fn trivial_aut_example() -> BinaryLinearCode {
    BinaryLinearCode::span(
        12,
        &rows(&[
            "111001000000",
            "001110000000",
            "000011100000",
            "000000111000",
            "000000001110",
            "100000000011",
        ]),
    )
    .expect("rows have length 12")
}

/// The parity-check matrix of hamming(3), columns 1..7 ascending.
pub fn m3() -> Vec<Bits> {
    rows(&["0001111", "0110011", "1010101"])
}

/// A parity-check matrix for a length-15 Hamming code, in the fixed
/// column order the mixed fixtures below are written against (not the
/// ascending order of `hamming_check(4)`).
pub fn m4() -> Vec<Bits> {
    rows(&[
        "000000011111111",
        "000111100110011",
        "011001101010101",
        "101010100001111",
    ])
}

/// `m4()` after the column permutation that makes every row-span
/// generator pair up under coordinates (4,5), (6,7), ..., (14,15).
pub fn m4_permuted() -> Vec<Bits> {
    rows(&[
        "110010111100100",
        "011000101111001",
        "110101011011000",
        "101001001110110",
    ])
}

/// The Hamming code checked by `m4()`.
pub fn h4() -> BinaryLinearCode {
    BinaryLinearCode::span(15, &m4()).expect("rows").dual()
}

/// The simplex code generated by `m4()` (the dual of `h4()`).
pub fn simplex_m4() -> BinaryLinearCode {
    BinaryLinearCode::span(15, &m4()).expect("rows")
}

/// The (3,2) additive code whose Gray image is simplex(3), pairing the
/// last four coordinates as (4,5) and (6,7).
pub fn h3_fixture() -> Z2uCode {
    Z2uCode::span(
        3,
        2,
        &[
            z2u_row("000", "uu"),
            z2u_row("011", "0u"),
            z2u_row("101", "11"),
        ],
    )
    .expect("shape (3,2)")
}

/// The (7,4) additive code whose Gray image is `simplex_m4()`, pairing
/// coordinates (8,9), (10,11), (12,13), (14,15).
pub fn h4_fixture_74() -> Z2uCode {
    Z2uCode::span(
        7,
        4,
        &[
            z2u_row("0000000", "uuuu"),
            z2u_row("0001111", "0u0u"),
            z2u_row("0110011", "1111"),
            z2u_row("1010101", "00uu"),
        ],
    )
    .expect("shape (7,4)")
}

/// The (3,6) generator matrix written against `m4_permuted()`, pairing
/// coordinates (4,5), (6,7), ..., (14,15).
pub fn h4_fixture_36() -> Z2uCode {
    Z2uCode::span(
        3,
        6,
        &[
            z2u_row("110", "11uv10"),
            z2u_row("011", "011uv1"),
            z2u_row("110", "vvu1v0"),
            z2u_row("101", "0v1u1v"),
        ],
    )
    .expect("shape (3,6)")
}

/// Mixed generators over Z2[u]^4 spanning a module whose preimage under
/// the alphabet change is not an additive Z4 code.
pub fn non_z4_example() -> Z2uCode {
    Z2uCode::span(
        0,
        4,
        &[z2u_row("", "111u"), z2u_row("", "1u11")],
    )
    .expect("shape (0,4)")
}

/// Named lookup used by the command-line `catalog` verb.
pub fn by_name(name: &str, t: usize) -> Option<CatalogCode> {
    Some(match name {
        "repetition" => CatalogCode::Binary(repetition(t).ok()?),
        "even" => CatalogCode::Binary(even_code(t)),
        "hamming" => CatalogCode::Binary(hamming(t)),
        "simplex" => CatalogCode::Binary(simplex(t)),
        "extended-hamming" => CatalogCode::Binary(extended_hamming(t)),
        "hadamard" => CatalogCode::Binary(hadamard_linear(t)),
        "golay23" => CatalogCode::Binary(golay23()),
        "golay24" => CatalogCode::Binary(golay24()),
        "trivial-aut" => CatalogCode::Binary(trivial_aut_example()),
        "h3-fixture" => CatalogCode::Additive(h3_fixture()),
        "h4-fixture-74" => CatalogCode::Additive(h4_fixture_74()),
        "h4-fixture-36" => CatalogCode::Additive(h4_fixture_36()),
        _ => return None,
    })
}

#[derive(Clone, Debug)]
pub enum CatalogCode {
    Binary(BinaryLinearCode),
    Additive(Z2uCode),
}

/// Names accepted by [`by_name`]; entries flag whether the size
/// parameter is meaningful.
pub const NAMES: &[(&str, bool)] = &[
    ("repetition", true),
    ("even", true),
    ("hamming", true),
    ("simplex", true),
    ("extended-hamming", true),
    ("hadamard", true),
    ("golay23", false),
    ("golay24", false),
    ("trivial-aut", false),
    ("h3-fixture", false),
    ("h4-fixture-74", false),
    ("h4-fixture-36", false),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::Budget;

    fn params(c: &BinaryLinearCode) -> (usize, usize, Option<usize>) {
        (c.len(), c.dim(), c.min_distance(Budget::default()).unwrap())
    }

    #[test]
    fn repetition_and_even() {
        let r3 = repetition(3).unwrap();
        assert_eq!(params(&r3), (3, 1, Some(3)));
        assert_eq!(repetition(1).unwrap().dim(), 1);
        assert!(matches!(repetition(4), Err(Error::EvenLength(4))));
        let e3 = even_code(3);
        assert_eq!(params(&e3), (3, 2, Some(2)));
        assert_eq!(e3.dual(), r3);
        assert_eq!(even_code(1).dim(), 0);
    }

    #[test]
    fn hamming_family_parameters() {
        assert_eq!(params(&hamming(3)), (7, 4, Some(3)));
        assert_eq!(params(&hamming(4)), (15, 11, Some(3)));
        assert_eq!(hamming(2), repetition(3).unwrap());
        // simplex: constant weight 2^(t-1)
        let w = simplex(3).weight_enumerator(Budget::default()).unwrap();
        assert_eq!(w.coefficients()[4], 7);
        assert_eq!(w.size(), 8);
        assert_eq!(params(&extended_hamming(3)), (8, 4, Some(4)));
        let h = hadamard_linear(3);
        assert_eq!(params(&h), (8, 4, Some(4)));
        let hw = h.weight_enumerator(Budget::default()).unwrap();
        assert_eq!(hw.coefficients()[8], 1);
        assert_eq!(hw.coefficients()[4], 14);
    }

    #[test]
    fn hamming_check_reproduces_m3() {
        assert_eq!(hamming_check(3), m3());
        // the length-15 fixture matrix spans the same-parameter code but
        // in a different column order than the ascending construction
        assert_eq!(params(&h4()), (15, 11, Some(3)));
        assert_eq!(simplex_m4().dim(), 4);
    }

    #[test]
    fn sphere_packing() {
        // 2^k (1 + n) = 2^n for Hamming codes
        for t in [3usize, 4] {
            let n = (1u64 << t) - 1;
            let k = n - t as u64;
            assert_eq!((1u64 << k) * (1 + n), 1u64 << n);
        }
        // radius 3 at length 23
        let balls: u64 = 1 + 23 + 23 * 22 / 2 + 23 * 22 * 21 / 6;
        assert_eq!((1u64 << 12) * balls, 1u64 << 23);
    }

    #[test]
    fn golay_parameters() {
        let g = golay23();
        assert_eq!(params(&g), (23, 12, Some(7)));
        let g24 = golay24();
        assert_eq!(params(&g24), (24, 12, Some(8)));
        let w = g24.weight_enumerator(Budget::default()).unwrap();
        for (i, &a) in w.coefficients().iter().enumerate() {
            assert!(a == 0 || matches!(i, 0 | 8 | 12 | 16 | 24), "weight {i}");
        }
        assert_eq!(g24.dual(), g24);
    }

    #[test]
    fn trivial_aut_shape() {
        let c = trivial_aut_example();
        assert_eq!((c.len(), c.dim()), (12, 6));
        assert!(c.contains(&row("111001000000")));
    }

    #[test]
    fn fixtures_gray_to_simplex() {
        assert_eq!(h3_fixture().gray_code(), &simplex(3));
        assert_eq!(h4_fixture_74().gray_code(), &simplex_m4());
        let s36 = h4_fixture_36();
        assert_eq!((s36.alpha(), s36.beta()), (3, 6));
        // the binary span of the generator rows alone is the simplex in
        // the permuted column order
        let row_span = BinaryLinearCode::span(
            15,
            &s36.generators().iter().map(|g| g.gray()).collect::<Vec<_>>(),
        )
        .unwrap();
        assert_eq!(
            row_span,
            BinaryLinearCode::span(15, &m4_permuted()).unwrap()
        );
        // the generator rows are not u-closed, so the module span is
        // strictly larger than the row span
        assert_eq!(s36.log2_size(), 5);
    }

    #[test]
    fn permuted_m4_is_column_permutation() {
        // multiset of columns agrees with m4()
        let a = m4();
        let b = m4_permuted();
        let col = |m: &[Bits], j: usize| (0..4).map(|r| m[r].get(j)).collect::<Vec<_>>();
        let mut ca: Vec<_> = (0..15).map(|j| col(&a, j)).collect();
        let mut cb: Vec<_> = (0..15).map(|j| col(&b, j)).collect();
        ca.sort();
        cb.sort();
        assert_eq!(ca, cb);
    }

    #[test]
    fn catalog_lookup() {
        assert!(by_name("hamming", 3).is_some());
        assert!(by_name("nonesuch", 3).is_none());
        for &(name, sized) in NAMES {
            assert!(by_name(name, if sized { 3 } else { 0 }).is_some());
        }
    }
}
