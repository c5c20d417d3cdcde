//! Text formats: code files, weight enumerator files, and pairing
//! certificates.
//!
//! Code file layout, bit-exact:
//!
//! ```text
//! ring z2|z4|z2u
//! alpha A beta B
//! <one generator per line, space-separated symbols>
//! ```
//!
//! Binary codes use `ring z2`, `beta 0`. Symbols are `0 1` on the binary
//! part and `0 1 2 3` / `0 1 u v` on the ring part. `#` starts a comment.

use std::fmt::Write as _;

use crate::codes::{BinaryLinearCode, Budget, WeightEnumerator, Z2uCode, Z4Code};
use crate::error::{Error, Result};
use crate::rings::{Symbol, Z2u, Z4};
use crate::vectors::{MixedVector, Pairing};

/// A code of any of the three alphabets, as read from a code file.
#[derive(Clone, Debug)]
pub enum AnyCode {
    Binary(BinaryLinearCode),
    Z2u(Z2uCode),
    Z4(Z4Code),
}

impl AnyCode {
    pub fn ring_name(&self) -> &'static str {
        match self {
            AnyCode::Binary(_) => "z2",
            AnyCode::Z2u(_) => Z2u::RING_NAME,
            AnyCode::Z4(_) => Z4::RING_NAME,
        }
    }

    pub fn alpha(&self) -> usize {
        match self {
            AnyCode::Binary(c) => c.len(),
            AnyCode::Z2u(c) => c.alpha(),
            AnyCode::Z4(c) => c.alpha(),
        }
    }

    pub fn beta(&self) -> usize {
        match self {
            AnyCode::Binary(_) => 0,
            AnyCode::Z2u(c) => c.beta(),
            AnyCode::Z4(c) => c.beta(),
        }
    }

    /// Length of the binary (Gray) image.
    pub fn gray_len(&self) -> usize {
        self.alpha() + 2 * self.beta()
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines with comments stripped, paired with their 1-based numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

pub fn parse_code(text: &str, budget: Budget) -> Result<AnyCode> {
    let mut lines = content_lines(text);
    let (ln, ring_line) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let ring = ring_line
        .strip_prefix("ring")
        .map(str::trim)
        .ok_or_else(|| err(ln, "expected `ring z2|z4|z2u`"))?;
    let (ln, shape_line) = lines
        .next()
        .ok_or_else(|| err(ln, "expected `alpha A beta B`"))?;
    let toks: Vec<&str> = shape_line.split_whitespace().collect();
    let (alpha, beta) = match toks.as_slice() {
        ["alpha", a, "beta", b] => (
            a.parse::<usize>().map_err(|_| err(ln, "bad alpha"))?,
            b.parse::<usize>().map_err(|_| err(ln, "bad beta"))?,
        ),
        _ => return Err(err(ln, "expected `alpha A beta B`")),
    };
    let gens: Vec<(usize, &str)> = lines.collect();
    match ring {
        "z2" => {
            if beta != 0 {
                return Err(err(ln, "ring z2 requires beta 0"));
            }
            let rows = gens
                .iter()
                .map(|&(ln, s)| {
                    let v = parse_mixed::<Z2u>(s, alpha, 0, ln)?;
                    Ok(v.gray())
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyCode::Binary(BinaryLinearCode::span(alpha, &rows)?))
        }
        "z2u" => {
            let g = gens
                .iter()
                .map(|&(ln, s)| parse_mixed::<Z2u>(s, alpha, beta, ln))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyCode::Z2u(Z2uCode::span(alpha, beta, &g)?))
        }
        "z4" => {
            let g = gens
                .iter()
                .map(|&(ln, s)| parse_mixed::<Z4>(s, alpha, beta, ln))
                .collect::<Result<Vec<_>>>()?;
            Ok(AnyCode::Z4(Z4Code::span(alpha, beta, &g, budget)?))
        }
        other => Err(err(1, format!("unknown ring `{other}`"))),
    }
}

fn parse_mixed<S: Symbol>(
    line: &str,
    alpha: usize,
    beta: usize,
    ln: usize,
) -> Result<MixedVector<S>> {
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks.len() != alpha + beta {
        return Err(err(
            ln,
            format!("expected {} symbols, got {}", alpha + beta, toks.len()),
        ));
    }
    let bits = toks[..alpha]
        .iter()
        .map(|&t| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(err(ln, format!("bad binary symbol `{t}`"))),
        })
        .collect::<Result<Vec<bool>>>()?;
    let ring = toks[alpha..]
        .iter()
        .map(|&t| S::from_token(t).ok_or_else(|| err(ln, format!("bad ring symbol `{t}`"))))
        .collect::<Result<Vec<S>>>()?;
    Ok(MixedVector::new(bits, ring))
}

fn render_mixed<S: Symbol>(v: &MixedVector<S>) -> String {
    let mut toks: Vec<String> = v.bits.iter().map(|&b| u8::from(b).to_string()).collect();
    toks.extend(v.ring.iter().map(|s| s.to_string()));
    toks.join(" ")
}

pub fn render_code(code: &AnyCode) -> String {
    let mut out = String::new();
    writeln!(out, "ring {}", code.ring_name()).unwrap();
    writeln!(out, "alpha {} beta {}", code.alpha(), code.beta()).unwrap();
    match code {
        AnyCode::Binary(c) => {
            for r in c.rows() {
                let v = MixedVector::<Z2u>::gray_inv(r, c.len(), 0).expect("beta 0");
                writeln!(out, "{}", render_mixed(&v)).unwrap();
            }
        }
        AnyCode::Z2u(c) => {
            // RREF of the Gray image pulled back: canonical row set
            for r in c.gray_code().rows() {
                let v = MixedVector::<Z2u>::gray_inv(r, c.alpha(), c.beta()).expect("shape");
                writeln!(out, "{}", render_mixed(&v)).unwrap();
            }
        }
        AnyCode::Z4(c) => {
            for g in c.generators() {
                writeln!(out, "{}", render_mixed(g)).unwrap();
            }
        }
    }
    out
}

/// Weight enumerator file: `n N`, `size S`, then `w count` per nonzero
/// coefficient, ascending w.
pub fn render_enumerator(w: &WeightEnumerator) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", w.length()).unwrap();
    writeln!(out, "size {}", w.size()).unwrap();
    for (i, &a) in w.coefficients().iter().enumerate() {
        if a != 0 {
            writeln!(out, "{i} {a}").unwrap();
        }
    }
    out
}

pub fn parse_enumerator(text: &str) -> Result<WeightEnumerator> {
    let mut lines = content_lines(text);
    let (ln, first) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let n: usize = first
        .strip_prefix("n ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| err(ln, "expected `n N`"))?;
    let (ln, second) = lines.next().ok_or_else(|| err(ln, "expected `size S`"))?;
    let size: u64 = second
        .strip_prefix("size ")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| err(ln, "expected `size S`"))?;
    let mut counts = vec![0u64; n + 1];
    for (ln, line) in lines {
        let mut it = line.split_whitespace();
        let (w, a) = match (it.next(), it.next(), it.next()) {
            (Some(w), Some(a), None) => (
                w.parse::<usize>().map_err(|_| err(ln, "bad weight"))?,
                a.parse::<u64>().map_err(|_| err(ln, "bad count"))?,
            ),
            _ => return Err(err(ln, "expected `weight count`")),
        };
        if w > n {
            return Err(err(ln, format!("weight {w} exceeds length {n}")));
        }
        counts[w] += a;
    }
    let we = WeightEnumerator::new(counts);
    if we.size() != size {
        return Err(Error::InconsistentEnumerator {
            sum: we.size(),
            size,
        });
    }
    Ok(we)
}

/// Parses the 1-indexed certificate format
/// `pairs: (i,j) (k,l) ... ; fixed: a b ...` for a known length n.
/// The fixed list, when present, must name exactly the unpaired
/// coordinates.
pub fn parse_pairing(text: &str, n: usize) -> Result<Pairing> {
    let text = text.trim();
    let rest = text
        .strip_prefix("pairs:")
        .ok_or_else(|| Error::InvalidPairing("expected `pairs:` prefix".into()))?;
    let (pair_part, fixed_part) = match rest.split_once(';') {
        Some((p, f)) => (
            p,
            Some(f.trim().strip_prefix("fixed:").ok_or_else(|| {
                Error::InvalidPairing("expected `fixed:` after `;`".into())
            })?),
        ),
        None => (rest, None),
    };
    let mut pairs = Vec::new();
    for tok in pair_part.split_whitespace() {
        let inner = tok
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::InvalidPairing(format!("bad pair token `{tok}`")))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| Error::InvalidPairing(format!("bad pair token `{tok}`")))?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPairing(format!("bad coordinate `{a}`")))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| Error::InvalidPairing(format!("bad coordinate `{b}`")))?;
        if a == 0 || b == 0 {
            return Err(Error::InvalidPairing("coordinates are 1-indexed".into()));
        }
        pairs.push((a - 1, b - 1));
    }
    let p = Pairing::new(n, pairs)?;
    if let Some(fixed) = fixed_part {
        let mut listed = fixed
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>()
                    .ok()
                    .and_then(|v| v.checked_sub(1))
                    .ok_or_else(|| Error::InvalidPairing(format!("bad fixed coordinate `{t}`")))
            })
            .collect::<Result<Vec<usize>>>()?;
        listed.sort_unstable();
        if listed.as_slice() != p.fixed() {
            return Err(Error::InvalidPairing(
                "fixed list disagrees with the pairs".into(),
            ));
        }
    }
    Ok(p)
}
