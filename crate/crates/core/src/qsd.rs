//! Quasi-self-dual codes over the rings E and F.
//!
//! Every element of E (and of F) is `a·s + c·t` for bits `s, t`, so a word of
//! length `n` is a pair of bit rows. A QSD code with residue `B` is
//! `a·B ⊕ c·B⊥` and is stored as that pair of binary codes.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{dot, mask, rref, BinaryCode, MAX_LEN};
use crate::rings::{Ring4, RingElem, RingName};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum QsdRing {
    E,
    F,
}

impl QsdRing {
    pub fn name(self) -> RingName {
        match self {
            QsdRing::E => RingName::E,
            QsdRing::F => RingName::F,
        }
    }

    pub fn ring(self) -> Ring4 {
        Ring4::new(self.name())
    }
}

impl TryFrom<RingName> for QsdRing {
    type Error = Error;

    fn try_from(name: RingName) -> Result<Self> {
        match name {
            RingName::E => Ok(QsdRing::E),
            RingName::F => Ok(QsdRing::F),
            other => Err(Error::NotQsd(other)),
        }
    }
}

impl FromStr for QsdRing {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<RingName>()?.try_into()
    }
}

impl fmt::Display for QsdRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.name().fmt(f)
    }
}

/// A word over E or F as its `(s, t)` bit rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingWord {
    pub ring: QsdRing,
    pub n: usize,
    pub s: u64,
    pub t: u64,
}

impl RingWord {
    pub fn new(ring: QsdRing, n: usize, s: u64, t: u64) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::LengthOutOfRange(n));
        }
        if (s | t) & !mask(n) != 0 {
            return Err(Error::Parse(format!("bits beyond length {n}")));
        }
        Ok(RingWord { ring, n, s, t })
    }

    pub fn from_elems(ring: QsdRing, elems: &[RingElem]) -> Result<Self> {
        let (mut s, mut t) = (0u64, 0u64);
        for (i, e) in elems.iter().enumerate() {
            let (si, ti) = e.to_pair();
            s |= (si as u64) << i;
            t |= (ti as u64) << i;
        }
        RingWord::new(ring, elems.len(), s, t)
    }

    /// Parses symbols `0 a b c`, with or without separating spaces.
    pub fn parse(ring: QsdRing, text: &str) -> Result<Self> {
        let elems = text
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(RingElem::from_symbol)
            .collect::<Result<Vec<_>>>()?;
        RingWord::from_elems(ring, &elems)
    }

    pub fn get(&self, i: usize) -> RingElem {
        RingElem::from_pair(self.s >> i & 1 == 1, self.t >> i & 1 == 1)
    }

    pub fn elems(&self) -> Vec<RingElem> {
        (0..self.n).map(|i| self.get(i)).collect()
    }

    /// Number of coordinates equal to each of `0, a, b, c`.
    pub fn symbol_counts(&self) -> [u32; 4] {
        let m = mask(self.n);
        let (s, t) = (self.s, self.t);
        [
            (!s & !t & m).count_ones(),
            (s & !t).count_ones(),
            (s & t).count_ones(),
            (!s & t).count_ones(),
        ]
    }

    pub fn add(&self, other: &RingWord) -> Result<RingWord> {
        self.compatible(other)?;
        Ok(RingWord {
            s: self.s ^ other.s,
            t: self.t ^ other.t,
            ..*self
        })
    }

    fn compatible(&self, other: &RingWord) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring.name(),
                right: other.ring.name(),
            });
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    /// Coordinatewise `e·x`.
    pub fn scale_left(&self, e: RingElem) -> RingWord {
        self.map(|x| self.ring.ring().mul(e, x))
    }

    /// Coordinatewise `x·e`.
    pub fn scale_right(&self, e: RingElem) -> RingWord {
        self.map(|x| self.ring.ring().mul(x, e))
    }

    fn map(&self, f: impl Fn(RingElem) -> RingElem) -> RingWord {
        let elems: Vec<RingElem> = self.elems().into_iter().map(f).collect();
        RingWord::from_elems(self.ring, &elems).expect("same length")
    }

    /// The same symbols read over the other ring.
    pub fn with_ring(&self, ring: QsdRing) -> RingWord {
        RingWord { ring, ..*self }
    }
}

impl fmt::Display for RingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let syms: Vec<String> = self
            .elems()
            .iter()
            .map(|e| e.symbol().to_string())
            .collect();
        f.write_str(&syms.join(" "))
    }
}

/// `Σ xᵢyᵢ` with the factors kept in order.
pub fn inner_product(x: &RingWord, y: &RingWord) -> Result<RingElem> {
    x.compatible(y)?;
    Ok(inner_product_bits(x.ring, x.s, x.t, y.s, y.t))
}

/// Bit-level inner product. In E, `xy = a·sₓs_y + c·tₓs_y`; in F,
/// `xy = a·sₓs_y + c·sₓt_y`.
#[inline]
pub fn inner_product_bits(ring: QsdRing, xs: u64, xt: u64, ys: u64, yt: u64) -> RingElem {
    let s = dot(xs, ys);
    let t = match ring {
        QsdRing::E => dot(xt, ys),
        QsdRing::F => dot(xs, yt),
    };
    RingElem::from_pair(s, t)
}

/// Inner product by folding the ring tables, coordinate by coordinate.
pub fn inner_product_by_table(x: &RingWord, y: &RingWord) -> Result<RingElem> {
    x.compatible(y)?;
    let ring = x.ring.ring();
    Ok((0..x.n).fold(RingElem::ZERO, |acc, i| {
        ring.add(acc, ring.mul(x.get(i), y.get(i)))
    }))
}

/// True iff `words` has exactly `2ⁿ` distinct members, all of length `n` over
/// `ring`, and every ordered pair is orthogonal.
pub fn is_qsd(ring: QsdRing, n: usize, words: &[RingWord]) -> bool {
    if n >= 32 || words.len() != 1usize << n {
        return false;
    }
    if words.iter().any(|w| w.ring != ring || w.n != n) {
        return false;
    }
    let mut sorted: Vec<(u64, u64)> = words.iter().map(|w| (w.s, w.t)).collect();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != words.len() {
        return false;
    }
    words.par_iter().all(|x| {
        words
            .iter()
            .all(|y| inner_product_bits(ring, x.s, x.t, y.s, y.t) == RingElem::ZERO)
    })
}

/// Binary image of `words` under `a, b ↦ 1` and `0, c ↦ 0`, spanned.
pub fn residue(n: usize, words: &[RingWord]) -> Result<BinaryCode> {
    BinaryCode::from_generators(n, words.iter().map(|w| w.s))
}

/// Span of the `x` with `c·x` among `words`.
pub fn torsion(n: usize, words: &[RingWord]) -> Result<BinaryCode> {
    BinaryCode::from_generators(n, words.iter().filter(|w| w.s == 0).map(|w| w.t))
}

/// A QSD code over E or F stored as `(res, tor)` with `tor = res⊥`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QsdCode {
    ring: QsdRing,
    res: BinaryCode,
    tor: BinaryCode,
}

/// `C = a·B ⊕ c·B⊥` for a self-orthogonal binary code `B`.
pub fn build_qsd(ring: QsdRing, residue: &BinaryCode) -> Result<QsdCode> {
    if !residue.is_self_orthogonal() {
        return Err(Error::NotSelfOrthogonal);
    }
    Ok(QsdCode {
        ring,
        res: residue.clone(),
        tor: residue.dual(),
    })
}

impl QsdCode {
    pub fn ring(&self) -> QsdRing {
        self.ring
    }

    pub fn len(&self) -> usize {
        self.res.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn residue(&self) -> &BinaryCode {
        &self.res
    }

    pub fn torsion(&self) -> &BinaryCode {
        &self.tor
    }

    /// `k₁ = dim res`.
    pub fn k1(&self) -> usize {
        self.res.dim()
    }

    /// `log₂|C| = dim res + dim tor`.
    pub fn log2_size(&self) -> usize {
        self.res.dim() + self.tor.dim()
    }

    /// All `2ⁿ` codewords `a·s + c·t`.
    pub fn codewords(&self) -> impl Iterator<Item = RingWord> + '_ {
        let (ring, n) = (self.ring, self.len());
        self.res.codewords().flat_map(move |s| {
            self.tor
                .codewords()
                .map(move |t| RingWord { ring, n, s, t })
        })
    }

    pub fn contains(&self, w: &RingWord) -> bool {
        w.ring == self.ring && w.n == self.len() && self.res.contains(w.s) && self.tor.contains(w.t)
    }

    /// Additive generators: `a·r` for each residue row and `c·t` for each torsion row.
    pub fn additive_generators(&self) -> Vec<RingWord> {
        let (ring, n) = (self.ring, self.len());
        let a_rows = self
            .res
            .rows()
            .iter()
            .map(|&s| RingWord { ring, n, s, t: 0 });
        let c_rows = self
            .tor
            .rows()
            .iter()
            .map(|&t| RingWord { ring, n, s: 0, t });
        a_rows.chain(c_rows).collect()
    }

    /// Module generators: `a·r` for each residue row, then `c·t` for torsion
    /// rows outside the residue. Over E they generate `C` under left
    /// multiplication; over F under right multiplication, since `(a·r)·c = c·r` there.
    pub fn generator_matrix(&self) -> Vec<RingWord> {
        let (ring, n) = (self.ring, self.len());
        let extra = rref(
            self.tor
                .rows()
                .iter()
                .map(|&t| self.res.reduce(t))
                .filter(|&t| t != 0),
        );
        let a_rows = self
            .res
            .rows()
            .iter()
            .map(|&s| RingWord { ring, n, s, t: 0 });
        let c_rows = extra.into_iter().map(|t| RingWord { ring, n, s: 0, t });
        a_rows.chain(c_rows).collect()
    }

    /// Orthogonality of every ordered pair of additive generators, which by
    /// biadditivity covers the whole code.
    pub fn is_self_orthogonal(&self) -> bool {
        let gens = self.additive_generators();
        gens.iter().all(|x| {
            gens.iter()
                .all(|y| inner_product_bits(self.ring, x.s, x.t, y.s, y.t) == RingElem::ZERO)
        })
    }

    /// Rebuilds a code from a spanning set, checking the QSD conditions.
    pub fn from_words(ring: QsdRing, n: usize, words: &[RingWord]) -> Result<QsdCode> {
        if n > 32 {
            return Err(Error::LengthOutOfRange(n));
        }
        // pivots prefer the low (s) half, so rows with no s-part span the torsion
        let packed = rref(words.iter().map(|w| w.s | (w.t << n)));
        let res = BinaryCode::from_generators(n, packed.iter().map(|v| v & mask(n)))?;
        let tor = BinaryCode::from_generators(
            n,
            packed.iter().filter(|v| *v & mask(n) == 0).map(|v| v >> n),
        )?;
        let code = QsdCode { ring, res, tor };
        if code.tor != code.res.dual() || !code.is_self_orthogonal() {
            return Err(Error::NotQsd(ring.name()));
        }
        Ok(code)
    }

    /// Rebuilds a code from module generators over its ring. The rings have
    /// no identity, so each row enters the span alongside its multiples.
    pub fn from_generator_matrix(ring: QsdRing, n: usize, rows: &[RingWord]) -> Result<QsdCode> {
        let mut span = Vec::with_capacity(rows.len() * 5);
        for r in rows {
            if r.n != n || r.ring != ring {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: r.n,
                });
            }
            span.push(*r);
            for e in RingElem::ALL {
                span.push(match ring {
                    QsdRing::E => r.scale_left(e),
                    QsdRing::F => r.scale_right(e),
                });
            }
        }
        QsdCode::from_words(ring, n, &span)
    }

    /// The generator matrix as rows of space-separated symbols.
    pub fn generator_text(&self) -> String {
        self.generator_matrix()
            .iter()
            .map(|r| format!("{r}\n"))
            .collect()
    }
}

/// Reads the code over F through the symbol bijection `a ↦ a, b ↦ b, c ↦ c`.
pub fn transfer_e_to_f(code: &QsdCode) -> Result<QsdCode> {
    if code.ring != QsdRing::E {
        return Err(Error::RingMismatch {
            left: code.ring.name(),
            right: RingName::E,
        });
    }
    if !code.is_self_orthogonal() || code.tor != code.res.dual() {
        return Err(Error::NotQsd(RingName::E));
    }
    let out = QsdCode {
        ring: QsdRing::F,
        res: code.res.clone(),
        tor: code.tor.clone(),
    };
    if !out.is_self_orthogonal() {
        return Err(Error::NotQsd(RingName::F));
    }
    Ok(out)
}
