//! Bit-packed binary linear codes.
//!
//! A word of length `n` is a `u64` whose bit `i` holds coordinate `i`, so the
//! leftmost character of the ASCII form `11000` is bit 0. Codes are stored as
//! generator rows in reduced row-echelon form with the pivot of each row at its
//! lowest set bit (leftmost column first), rows sorted by pivot. Two codes are
//! equal exactly when their stored rows are equal.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_LEN: usize = 64;

#[inline]
pub fn mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn weight(bits: u64) -> u32 {
    bits.count_ones()
}

/// Binary inner product of two bit rows.
#[inline]
pub fn dot(u: u64, v: u64) -> bool {
    (u & v).count_ones() & 1 == 1
}

/// Reverses the first `n` bits of `bits`.
#[inline]
pub fn reverse_bits(bits: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        bits.reverse_bits() >> (64 - n)
    }
}

/// A binary word with an explicit length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: usize,
    bits: u64,
}

impl Word {
    pub fn new(len: usize, bits: u64) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::LengthOutOfRange(len));
        }
        Ok(Self {
            len,
            bits: bits & mask(len),
        })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> u32 {
        weight(self.bits)
    }

    pub fn get(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    fn check_len(&self, other: &Word) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0;
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '0' => {}
                '1' => {
                    if len < 64 {
                        bits |= 1 << len;
                    }
                }
                other => {
                    return Err(Error::Parse(format!(
                        "unexpected character {other:?} in binary row"
                    )))
                }
            }
            len += 1;
        }
        Word::new(len, bits)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Number of coordinates where `u` and `v` differ.
pub fn hamming_distance(u: &Word, v: &Word) -> Result<u32> {
    u.check_len(v)?;
    Ok(weight(u.bits ^ v.bits))
}

/// Number of coordinates where both `u` and `v` are one.
pub fn intersection_weight(u: &Word, v: &Word) -> Result<u32> {
    u.check_len(v)?;
    Ok(weight(u.bits & v.bits))
}

/// A permutation of coordinates: coordinate `i` moves to position `images[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    /// Builds the permutation sending `order[p]` to position `p`.
    pub fn from_order(order: &[usize]) -> Result<Self> {
        let mut images = vec![usize::MAX; order.len()];
        for (p, &i) in order.iter().enumerate() {
            if i >= order.len() || images[i] != usize::MAX {
                return Err(Error::Parse(format!("{order:?} is not an ordering")));
            }
            images[i] = p;
        }
        Ok(Self { images })
    }

    /// A single transposition on `n` points.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Self { images }
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, bits: u64) -> u64 {
        let mut out = 0;
        let mut rest = bits;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out |= 1 << self.images[i];
        }
        out
    }
}

/// Reduces `rows` to reduced row-echelon form, dropping dependent rows.
pub fn rref(rows: impl IntoIterator<Item = u64>) -> Vec<u64> {
    let mut basis: Vec<u64> = Vec::new();
    for mut r in rows {
        for &b in &basis {
            if r & (b & b.wrapping_neg()) != 0 {
                r ^= b;
            }
        }
        if r == 0 {
            continue;
        }
        let pivot = r & r.wrapping_neg();
        for b in basis.iter_mut() {
            if *b & pivot != 0 {
                *b ^= r;
            }
        }
        basis.push(r);
    }
    basis.sort_by_key(|b| b.trailing_zeros());
    basis
}

/// Weight distribution `A[i]` of a binary code.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightDistribution(pub Vec<u64>);

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

/// A binary linear `[n, k]` code held in canonical RREF.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCode {
    n: usize,
    rows: Vec<u64>,
}

impl BinaryCode {
    /// The span of `generators`, which may be dependent.
    pub fn from_generators(n: usize, generators: impl IntoIterator<Item = u64>) -> Result<Self> {
        if n > MAX_LEN {
            return Err(Error::LengthOutOfRange(n));
        }
        let m = mask(n);
        let mut rows = Vec::new();
        for g in generators {
            if g & !m != 0 {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: 64 - g.leading_zeros() as usize,
                });
            }
            rows.push(g);
        }
        Ok(Self {
            n,
            rows: rref(rows),
        })
    }

    /// Parses ASCII rows such as `["11000", "00110"]`.
    pub fn from_rows<S: AsRef<str>>(rows: &[S]) -> Result<Self> {
        let words = rows
            .iter()
            .map(|r| r.as_ref().parse::<Word>())
            .collect::<Result<Vec<_>>>()?;
        let n = words.first().map(Word::len).unwrap_or(0);
        for w in &words {
            if w.len() != n {
                return Err(Error::LengthMismatch {
                    left: n,
                    right: w.len(),
                });
            }
        }
        Self::from_generators(n, words.iter().map(Word::bits))
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            rows: Vec::new(),
        }
    }

    pub fn full(n: usize) -> Self {
        Self {
            n,
            rows: (0..n).map(|i| 1u64 << i).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn row_words(&self) -> Vec<Word> {
        self.rows
            .iter()
            .map(|&r| Word {
                len: self.n,
                bits: r,
            })
            .collect()
    }

    pub fn size(&self) -> u128 {
        1u128 << self.dim()
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.trailing_zeros() as usize)
            .collect()
    }

    /// Reduces `v` modulo the code; zero iff `v` is a codeword.
    pub fn reduce(&self, mut v: u64) -> u64 {
        for &r in &self.rows {
            if v & (r & r.wrapping_neg()) != 0 {
                v ^= r;
            }
        }
        v
    }

    pub fn contains(&self, v: u64) -> bool {
        v & !mask(self.n) == 0 && self.reduce(v) == 0
    }

    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.n == other.n && self.rows.iter().all(|&r| other.contains(r))
    }

    /// All `2^k` codewords in Gray-code order, starting at zero.
    pub fn codewords(&self) -> Codewords<'_> {
        Codewords {
            rows: &self.rows,
            current: 0,
            index: 0,
            end: 1u64 << self.rows.len(),
        }
    }

    pub fn dual(&self) -> BinaryCode {
        let mut pivot_mask = 0u64;
        for &r in &self.rows {
            pivot_mask |= r & r.wrapping_neg();
        }
        let mut dual_rows = Vec::with_capacity(self.n - self.dim());
        for f in 0..self.n {
            if pivot_mask >> f & 1 == 1 {
                continue;
            }
            let mut v = 1u64 << f;
            for &r in &self.rows {
                if r >> f & 1 == 1 {
                    v |= r & r.wrapping_neg();
                }
            }
            dual_rows.push(v);
        }
        BinaryCode {
            n: self.n,
            rows: rref(dual_rows),
        }
    }

    /// True iff every pair of generators, including each with itself, meets evenly.
    pub fn is_self_orthogonal(&self) -> bool {
        self.rows
            .iter()
            .enumerate()
            .all(|(i, &u)| self.rows[i..].iter().all(|&v| !dot(u, v)))
    }

    pub fn weight_distribution(&self) -> WeightDistribution {
        let mut counts = vec![0u64; self.n + 1];
        for w in self.codewords() {
            counts[weight(w) as usize] += 1;
        }
        WeightDistribution(counts)
    }

    pub fn min_distance(&self) -> Option<u32> {
        self.codewords().skip(1).map(weight).min()
    }

    pub fn permute(&self, sigma: &Permutation) -> Result<BinaryCode> {
        if sigma.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: sigma.len(),
            });
        }
        Ok(BinaryCode {
            n: self.n,
            rows: rref(self.rows.iter().map(|&r| sigma.apply(r))),
        })
    }

    /// Restriction to the coordinates outside `positions`, keeping their order.
    pub fn puncture(&self, positions: u64) -> BinaryCode {
        let keep: Vec<usize> = (0..self.n).filter(|&i| positions >> i & 1 == 0).collect();
        let squeeze = |w: u64| {
            keep.iter()
                .enumerate()
                .fold(0u64, |acc, (p, &i)| acc | ((w >> i & 1) << p))
        };
        BinaryCode {
            n: keep.len(),
            rows: rref(self.rows.iter().map(|&r| squeeze(r))),
        }
    }

    /// Parses one row per line; blank lines and `#` comments are skipped.
    pub fn parse_ascii(text: &str) -> Result<BinaryCode> {
        let rows: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect();
        if rows.is_empty() {
            return Err(Error::Parse("no generator rows".into()));
        }
        Self::from_rows(&rows)
    }

    /// One row per line; the zero code is written as a single zero row.
    pub fn to_ascii(&self) -> String {
        let mut out = String::new();
        if self.rows.is_empty() {
            out.push_str(&"0".repeat(self.n));
            out.push('\n');
        }
        for w in self.row_words() {
            out.push_str(&w.to_string());
            out.push('\n');
        }
        out
    }

    /// Compact form `n:hex,hex,...` with bit `i` of each row holding coordinate `i`.
    pub fn to_hex(&self) -> String {
        let rows: Vec<String> = self.rows.iter().map(|r| format!("{r:x}")).collect();
        format!("{}:{}", self.n, rows.join(","))
    }

    pub fn parse_hex(text: &str) -> Result<BinaryCode> {
        let (n, rows) = text
            .trim()
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in {text:?}")))?;
        let n: usize = n
            .parse()
            .map_err(|_| Error::Parse(format!("bad length {n:?}")))?;
        let rows = rows
            .split(',')
            .filter(|r| !r.is_empty())
            .map(|r| {
                u64::from_str_radix(r, 16).map_err(|_| Error::Parse(format!("bad hex row {r:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(n, rows)
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self.row_words().iter().map(Word::to_string).collect();
        write!(f, "[{},{}]<{}>", self.n, self.dim(), rows.join(","))
    }
}

impl Serialize for BinaryCode {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let rows: Vec<String> = self.row_words().iter().map(Word::to_string).collect();
        let mut st = serializer.serialize_struct("BinaryCode", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.dim())?;
        st.serialize_field("rows", &rows)?;
        st.end()
    }
}

pub struct Codewords<'a> {
    rows: &'a [u64],
    current: u64,
    index: u64,
    end: u64,
}

impl Iterator for Codewords<'_> {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        if self.index >= self.end {
            return None;
        }
        if self.index > 0 {
            self.current ^= self.rows[self.index.trailing_zeros() as usize];
        }
        self.index += 1;
        Some(self.current)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.index) as usize;
        (left, Some(left))
    }
}
