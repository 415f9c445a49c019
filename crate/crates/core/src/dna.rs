//! DNA words, the alphabet map from E and F, and reverse-complement distances.
//!
//! The optimized distance `d_RC^m` maximizes, over coordinate permutations σ,
//! the least `d_H(σ(x)^RC, σ(y))` for `x, y` in the GC-content-`m` subcode.
//! That quantity only depends on σ through the involution
//! `τ(j) = σ⁻¹(n−1−σ(j))`, which pairs the coordinates that reversal swaps, so
//! the search runs over coordinate pairings instead of all of `S_n`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{mask, reverse_bits, weight, BinaryCode, Permutation};
use crate::qsd::{QsdCode, RingWord};
use crate::rings::{Ring4, RingElem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Nucleotide {
    A,
    T,
    G,
    C,
}

impl Nucleotide {
    pub fn complement(self) -> Nucleotide {
        match self {
            Nucleotide::A => Nucleotide::T,
            Nucleotide::T => Nucleotide::A,
            Nucleotide::G => Nucleotide::C,
            Nucleotide::C => Nucleotide::G,
        }
    }

    pub fn is_gc(self) -> bool {
        matches!(self, Nucleotide::G | Nucleotide::C)
    }

    pub fn from_char(ch: char) -> Result<Nucleotide> {
        match ch.to_ascii_uppercase() {
            'A' => Ok(Nucleotide::A),
            'T' => Ok(Nucleotide::T),
            'G' => Ok(Nucleotide::G),
            'C' => Ok(Nucleotide::C),
            other => Err(Error::Parse(format!("not a nucleotide: {other:?}"))),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Nucleotide::A => 'A',
            Nucleotide::T => 'T',
            Nucleotide::G => 'G',
            Nucleotide::C => 'C',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DnaWord(pub Vec<Nucleotide>);

impl DnaWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reverse(&self) -> DnaWord {
        DnaWord(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> DnaWord {
        DnaWord(self.0.iter().map(|b| b.complement()).collect())
    }

    pub fn reverse_complement(&self) -> DnaWord {
        DnaWord(self.0.iter().rev().map(|b| b.complement()).collect())
    }

    pub fn gc_content(&self) -> usize {
        self.0.iter().filter(|b| b.is_gc()).count()
    }

    pub fn hamming_distance(&self, other: &DnaWord) -> Result<usize> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.0.iter().zip(&other.0).filter(|(x, y)| x != y).count())
    }

    /// Coordinate `i` moves to position `sigma.image(i)`.
    pub fn permute(&self, sigma: &Permutation) -> DnaWord {
        let mut out = self.0.clone();
        for (i, &b) in self.0.iter().enumerate() {
            out[sigma.image(i)] = b;
        }
        DnaWord(out)
    }
}

impl FromStr for DnaWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(Nucleotide::from_char)
            .collect::<Result<_>>()
            .map(DnaWord)
    }
}

impl fmt::Display for DnaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|b| write!(f, "{}", b.as_char()))
    }
}

impl Serialize for DnaWord {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The bijection between a ring and `{A, T, G, C}`: `0 ↦ A`, `α ↦ T`, the
/// first GC element to G and its complement to C. For E and F this is
/// `A ↔ 0, T ↔ c, G ↔ a, C ↔ b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphabetMap {
    to_base: [Nucleotide; 4],
}

impl AlphabetMap {
    pub fn new(ring: &Ring4) -> Result<AlphabetMap> {
        let mut to_base = [Nucleotide::A; 4];
        let g = RingElem::ALL
            .into_iter()
            .find(|&x| ring.gc_content(x).unwrap_or(false))
            .ok_or(Error::NoGcMap(ring.name()))?;
        to_base[ring.alpha().index()] = Nucleotide::T;
        to_base[g.index()] = Nucleotide::G;
        to_base[ring.complement(g).index()] = Nucleotide::C;
        Ok(AlphabetMap { to_base })
    }

    pub fn base(&self, x: RingElem) -> Nucleotide {
        self.to_base[x.index()]
    }

    pub fn elem(&self, b: Nucleotide) -> RingElem {
        RingElem::ALL
            .into_iter()
            .find(|&x| self.to_base[x.index()] == b)
            .expect("alphabet map is a bijection")
    }

    pub fn word(&self, w: &RingWord) -> DnaWord {
        DnaWord(w.elems().into_iter().map(|x| self.base(x)).collect())
    }
}

/// An explicit DNA code, kept sorted and free of duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DnaCode {
    n: usize,
    words: Vec<DnaWord>,
    #[serde(skip)]
    origin: Option<QsdCode>,
}

impl DnaCode {
    pub fn new(n: usize, words: impl IntoIterator<Item = DnaWord>) -> Result<DnaCode> {
        let words: BTreeSet<DnaWord> = words.into_iter().collect();
        if let Some(w) = words.iter().find(|w| w.len() != n) {
            return Err(Error::LengthMismatch {
                left: n,
                right: w.len(),
            });
        }
        Ok(DnaCode {
            n,
            words: words.into_iter().collect(),
            origin: None,
        })
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &[DnaWord] {
        &self.words
    }

    pub fn origin(&self) -> Option<&QsdCode> {
        self.origin.as_ref()
    }

    pub fn fixed_gc_subcode(&self, m: usize) -> DnaCode {
        DnaCode {
            n: self.n,
            words: self
                .words
                .iter()
                .filter(|w| w.gc_content() == m)
                .cloned()
                .collect(),
            origin: None,
        }
    }

    /// Complete weight enumerator with `(w, x, y, z)` counting `(A, G, C, T)`.
    pub fn cwe(&self) -> crate::enumerators::WeightEnumerator {
        let mut out = crate::enumerators::WeightEnumerator::new(self.n, 4);
        for w in &self.words {
            let mut e = vec![0u32; 4];
            for b in &w.0 {
                e[match b {
                    Nucleotide::A => 0,
                    Nucleotide::G => 1,
                    Nucleotide::C => 2,
                    Nucleotide::T => 3,
                }] += 1;
            }
            out.add_term(e, 1);
        }
        out
    }

    /// Least `d_H(x^RC, y)` over ordered pairs, including `x = y`.
    pub fn min_rc_distance(&self) -> Option<usize> {
        self.words
            .iter()
            .flat_map(|x| {
                let rc = x.reverse_complement();
                self.words
                    .iter()
                    .map(move |y| rc.hamming_distance(y).expect("equal lengths"))
            })
            .min()
    }
}

pub fn to_dna(code: &QsdCode) -> DnaCode {
    let map = AlphabetMap::new(&code.ring().ring()).expect("E and F carry a GC map");
    let words: BTreeSet<DnaWord> = code.codewords().map(|w| map.word(&w)).collect();
    DnaCode {
        n: code.len(),
        words: words.into_iter().collect(),
        origin: Some(code.clone()),
    }
}

/// A pairing of coordinates with exactly `n mod 2` fixed points.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    images: Vec<usize>,
}

impl Involution {
    pub fn new(images: Vec<usize>) -> Result<Involution> {
        let n = images.len();
        let valid = images
            .iter()
            .enumerate()
            .all(|(i, &j)| j < n && images[j] == i);
        let fixed = images.iter().enumerate().filter(|(i, &j)| *i == j).count();
        if !valid || fixed != n % 2 {
            return Err(Error::Parse(format!("{images:?} is not a maximal pairing")));
        }
        Ok(Involution { images })
    }

    /// All pairings of `n` coordinates, in a fixed order: the lowest unpaired
    /// coordinate is first left fixed (when allowed), then paired upward.
    pub fn all(n: usize) -> Vec<Involution> {
        fn rec(images: &mut Vec<usize>, fixed_left: bool, out: &mut Vec<Involution>) {
            let n = images.len();
            let Some(i) = (0..n).find(|&i| images[i] == usize::MAX) else {
                out.push(Involution {
                    images: images.clone(),
                });
                return;
            };
            if fixed_left {
                images[i] = i;
                rec(images, false, out);
                images[i] = usize::MAX;
            }
            for j in i + 1..n {
                if images[j] == usize::MAX {
                    images[i] = j;
                    images[j] = i;
                    rec(images, fixed_left, out);
                    images[i] = usize::MAX;
                    images[j] = usize::MAX;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![usize::MAX; n], n % 2 == 1, &mut out);
        out
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

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&i| self.images[i] > i)
            .map(|i| (i, self.images[i]))
            .collect()
    }

    pub fn fixed_point(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.images[i] == i)
    }

    /// Bit `j` of the result is bit `τ(j)` of `bits`.
    #[inline]
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

    /// A permutation σ with `σ⁻¹(n−1−σ(j)) = τ(j)`: the `p`-th pair goes to
    /// positions `p` and `n−1−p`, a fixed point to the middle.
    pub fn to_permutation(&self) -> Permutation {
        let n = self.len();
        let mut images = vec![0; n];
        for (p, (i, j)) in self.pairs().into_iter().enumerate() {
            images[i] = p;
            images[j] = n - 1 - p;
        }
        if let Some(f) = self.fixed_point() {
            images[f] = n / 2;
        }
        Permutation::new(images).expect("pairs fill every position")
    }

    /// The involution a permutation induces under reversal.
    pub fn from_permutation(sigma: &Permutation) -> Involution {
        let n = sigma.len();
        let mut inverse = vec![0; n];
        for i in 0..n {
            inverse[sigma.image(i)] = i;
        }
        Involution {
            images: (0..n).map(|j| inverse[n - 1 - sigma.image(j)]).collect(),
        }
    }
}

impl Serialize for Involution {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Involution", 2)?;
        st.serialize_field("pairs", &self.pairs())?;
        st.serialize_field("fixed", &self.fixed_point())?;
        st.end()
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, j) in self.pairs() {
            write!(f, "({} {})", i + 1, j + 1)?;
        }
        if let Some(x) = self.fixed_point() {
            write!(f, "({})", x + 1)?;
        }
        Ok(())
    }
}

/// Distance between the reverse complement of `x` and `y`, on `(s, t)` rows.
/// Complementing flips `t`; reversal mirrors both rows.
#[inline]
pub fn rc_distance_bits(n: usize, x: (u64, u64), y: (u64, u64)) -> u32 {
    let rs = reverse_bits(x.0, n);
    let rt = reverse_bits(x.1, n) ^ mask(n);
    weight((rs ^ y.0) | (rt ^ y.1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Operator {
    ReverseComplement,
    Reverse,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RcProfile {
    pub m: usize,
    pub d_rc: u32,
    pub witness: Involution,
}

/// `(s, t)` rows of the codewords of GC-content `m`.
pub fn fixed_gc_words(code: &QsdCode, m: usize) -> Vec<(u64, u64)> {
    let residues: Vec<u64> = code
        .residue()
        .codewords()
        .filter(|&s| weight(s) as usize == m)
        .collect();
    let torsion: Vec<u64> = code.torsion().codewords().collect();
    residues
        .iter()
        .flat_map(|&s| torsion.iter().map(move |&t| (s, t)))
        .collect()
}

fn distance_under(words: &[(u64, u64)], tau: &Involution, flip: u64, stop_below: u32) -> u32 {
    let moved: Vec<(u64, u64)> = words
        .iter()
        .map(|&(s, t)| (tau.apply(s), tau.apply(t) ^ flip))
        .collect();
    let mut best = u32::MAX;
    for &(xs, xt) in &moved {
        for &(ys, yt) in words {
            let d = weight((xs ^ ys) | (xt ^ yt));
            if d < best {
                best = d;
                if best < stop_below || best == 0 {
                    return best;
                }
            }
        }
    }
    best
}

/// Least distance for the single pairing `tau`.
pub fn d_rc_for_involution(code: &QsdCode, m: usize, tau: &Involution) -> Result<u32> {
    let words = fixed_gc_words(code, m);
    if words.is_empty() {
        return Err(Error::EmptySubcode(m));
    }
    Ok(distance_under(&words, tau, mask(code.len()), 0))
}

fn optimize(code: &QsdCode, m: usize, op: Operator) -> Result<RcProfile> {
    let n = code.len();
    let words = fixed_gc_words(code, m);
    if words.is_empty() {
        return Err(Error::EmptySubcode(m));
    }
    let flip = match op {
        Operator::ReverseComplement => mask(n),
        Operator::Reverse => 0,
    };
    let involutions = Involution::all(n);
    let best = AtomicU32::new(0);
    // Pruning is strict, so every pairing that reaches the maximum is scored exactly.
    let scores: Vec<u32> = involutions
        .par_iter()
        .map(|tau| {
            let d = distance_under(&words, tau, flip, best.load(Ordering::Relaxed));
            best.fetch_max(d, Ordering::Relaxed);
            d
        })
        .collect();
    let d_rc = *scores.iter().max().expect("at least one pairing");
    let index = scores
        .iter()
        .position(|&d| d == d_rc)
        .expect("maximum is attained");
    Ok(RcProfile {
        m,
        d_rc,
        witness: involutions[index].clone(),
    })
}

/// Exact `d_RC^m`; an empty subcode is an error, never a zero.
pub fn d_rc_exact(code: &QsdCode, m: usize) -> Result<RcProfile> {
    optimize(code, m, Operator::ReverseComplement)
}

/// The same optimization for the reverse constraint `d_H(x^R, y)`.
pub fn d_r_exact(code: &QsdCode, m: usize) -> Result<RcProfile> {
    optimize(code, m, Operator::Reverse)
}

/// GC-contents with a nonempty subcode, ascending.
pub fn gc_contents(res: &BinaryCode) -> Vec<usize> {
    let dist = res.weight_distribution();
    (0..=res.len()).filter(|&m| dist.get(m) > 0).collect()
}

/// `d_RC^m` for every GC-content present in the code.
pub fn d_rc_profile(code: &QsdCode) -> Vec<RcProfile> {
    gc_contents(code.residue())
        .into_iter()
        .map(|m| d_rc_exact(code, m).expect("content is present"))
        .collect()
}

/// `2·min(m, n−m)` for a residue spanned by one word of weight `m`.
pub fn d_rc_formula_1gen(n: usize, m: usize) -> Result<u32> {
    if m % 2 == 1 || m > n {
        return Err(Error::InvalidShape(format!(
            "one generator of weight {m} in length {n}"
        )));
    }
    Ok(2 * m.min(n - m) as u32)
}

/// Predicted `(content, d)` pairs for two disjoint generators of weights `m1`, `m2`.
pub fn d_rc_formula_2gen(n: usize, m1: usize, m2: usize) -> Result<Vec<(usize, u32)>> {
    if m1 == 0 || m2 == 0 || m1 % 2 == 1 || m2 % 2 == 1 || m1 + m2 > n {
        return Err(Error::InvalidShape(format!(
            "disjoint generators {m1}, {m2} in length {n}"
        )));
    }
    let m = m1 + m2;
    let two_min = |x: usize| 2 * x.min(n - x) as u32;
    let mut out = if m1 == m2 {
        let d = m.min(2 * (n - n / 2) - m) as u32;
        vec![(m1, d), (m, two_min(m))]
    } else {
        vec![(m1, two_min(m1)), (m2, two_min(m2)), (m, two_min(m))]
    };
    out.sort();
    Ok(out)
}

/// `0, 1, 2` for `n ≡ 0 (mod 4)`, `n` odd, `n ≡ 2 (mod 4)`.
pub fn delta(n: usize) -> u32 {
    match n % 4 {
        0 => 0,
        2 => 2,
        _ => 1,
    }
}

/// Predicted `(content, d)` pairs for generators meeting in `m3` positions,
/// with `m1`, `m2` positions private to each.
pub fn d_rc_formula_overlap(
    n: usize,
    m1: usize,
    m2: usize,
    m3: usize,
) -> Result<Vec<(usize, u32)>> {
    let ms = [m1, m2, m3];
    if ms.iter().any(|&x| x == 0 || x % 2 == 1) || m1 + m2 + m3 > n {
        return Err(Error::InvalidShape(format!(
            "overlap {m1}, {m2}, {m3} in length {n}"
        )));
    }
    let two_min = |x: usize| 2 * x.min(n - x) as u32;
    let half_floor = n / 2;
    let mut out = Vec::new();
    if m1 != m2 && m2 != m3 && m1 != m3 {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            let c = ms[i] + ms[j];
            out.push((c, two_min(c)));
        }
    } else if m1 == m2 && m2 == m3 {
        let p = m1;
        let d = if 6 * p < n {
            4 * p as u32
        } else if 4 * p < n {
            (n - 2 * p) as u32 - delta(n)
        } else {
            2 * (half_floor - p) as u32
        };
        out.push((2 * p, d));
    } else {
        let (p, q) = if m1 == m2 {
            (m1, m3)
        } else if m1 == m3 {
            (m1, m2)
        } else {
            (m2, m1)
        };
        out.push((2 * p, two_min(2 * p)));
        let d = if 2 * (2 * p + q) < n {
            2 * (p + q) as u32
        } else if 4 * p < n {
            (n - 2 * p) as u32 - delta(n)
        } else {
            2 * (half_floor - p) as u32
        };
        out.push((p + q, d));
    }
    out.sort();
    Ok(out)
}

/// Residue structures covered by the closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ResidueShape {
    Trivial,
    OneGenerator { m: usize },
    Disjoint { m1: usize, m2: usize },
    Overlap { m1: usize, m2: usize, m3: usize },
    Other,
}

impl ResidueShape {
    pub fn detect(res: &BinaryCode) -> ResidueShape {
        match res.dim() {
            0 => ResidueShape::Trivial,
            1 => ResidueShape::OneGenerator {
                m: weight(res.rows()[0]) as usize,
            },
            2 => {
                let (u, v) = (res.rows()[0], res.rows()[1]);
                // each covered position lies in exactly two of u, v, u + v
                let mut atoms = [weight(u & v), weight(u & !v), weight(v & !u)].map(|x| x as usize);
                atoms.sort();
                if atoms[0] == 0 {
                    ResidueShape::Disjoint {
                        m1: atoms[1],
                        m2: atoms[2],
                    }
                } else {
                    ResidueShape::Overlap {
                        m1: atoms[0],
                        m2: atoms[1],
                        m3: atoms[2],
                    }
                }
            }
            _ => ResidueShape::Other,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ResidueShape::Trivial => "trivial",
            ResidueShape::OneGenerator { .. } => "one-generator",
            ResidueShape::Disjoint { .. } => "disjoint",
            ResidueShape::Overlap { .. } => "overlap",
            ResidueShape::Other => "other",
        }
    }

    /// Closed-form `(content, d)` pairs, or `None` outside the covered shapes.
    /// The zero content is left out; it is always 0.
    pub fn predict(&self, n: usize) -> Option<Vec<(usize, u32)>> {
        match *self {
            ResidueShape::OneGenerator { m } => d_rc_formula_1gen(n, m).ok().map(|d| vec![(m, d)]),
            ResidueShape::Disjoint { m1, m2 } => d_rc_formula_2gen(n, m1, m2).ok(),
            ResidueShape::Overlap { m1, m2, m3 } => d_rc_formula_overlap(n, m1, m2, m3).ok(),
            ResidueShape::Trivial | ResidueShape::Other => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsd::{build_qsd, QsdRing};

    fn qsd(rows: &[&str]) -> QsdCode {
        build_qsd(QsdRing::E, &BinaryCode::from_rows(rows).unwrap()).unwrap()
    }

    #[test]
    fn reverse_complement_example() {
        let w: DnaWord = "TCGGCAACATG".parse().unwrap();
        assert_eq!(w.reverse_complement().to_string(), "CATGTTGCCGA");
        assert_eq!(w.reverse().reverse(), w);
        assert_eq!(w.reverse().complement(), w.complement().reverse());
        for b in [Nucleotide::A, Nucleotide::T, Nucleotide::G, Nucleotide::C] {
            assert_ne!(b.complement(), b);
        }
    }

    #[test]
    fn alphabet_map_for_e() {
        let map = AlphabetMap::new(&Ring4::new(crate::rings::RingName::E)).unwrap();
        let w = RingWord::parse(QsdRing::E, "a a 0 0 0").unwrap();
        assert_eq!(map.word(&w).to_string(), "GGAAA");
        assert_eq!(map.base(RingElem::B), Nucleotide::C);
        assert_eq!(map.base(RingElem::C), Nucleotide::T);
        let k = Ring4::new(crate::rings::RingName::K);
        assert!(AlphabetMap::new(&k).is_err());
    }

    #[test]
    fn all_torsion_word_is_all_t() {
        let code = qsd(&["0000"]);
        let dna = to_dna(&code);
        assert!(dna.words().iter().any(|w| w.to_string() == "TTTT"));
        assert_eq!(dna.size(), 16);
    }

    #[test]
    fn fixed_gc_subcodes() {
        let dna = to_dna(&qsd(&["1111"]));
        let top = dna.fixed_gc_subcode(4);
        assert_eq!(top.size(), 8);
        assert!(top.words().iter().all(|w| w.0.iter().all(|b| b.is_gc())));
        assert_eq!(dna.fixed_gc_subcode(0).size(), 8);
        assert_eq!(dna.fixed_gc_subcode(2).size(), 0);
    }

    #[test]
    fn involution_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| Involution::all(n).len()).collect();
        assert_eq!(counts, [1, 1, 3, 3, 15, 15, 105, 105]);
        for tau in Involution::all(7) {
            assert!(tau.fixed_point().is_some());
            assert_eq!(Involution::from_permutation(&tau.to_permutation()), tau);
        }
    }

    #[test]
    fn bit_distance_matches_strings() {
        let code = qsd(&["11110000", "00111100"]);
        let map = AlphabetMap::new(&code.ring().ring()).unwrap();
        let words: Vec<RingWord> = code.codewords().step_by(7).collect();
        for x in &words {
            for y in &words {
                let d = map
                    .word(x)
                    .reverse_complement()
                    .hamming_distance(&map.word(y))
                    .unwrap();
                assert_eq!(rc_distance_bits(8, (x.s, x.t), (y.s, y.t)) as usize, d);
            }
        }
    }

    #[test]
    fn worked_example_distances() {
        let code = qsd(&["11000", "00110"]);
        assert_eq!(d_rc_exact(&code, 0).unwrap().d_rc, 0);
        assert_eq!(d_rc_exact(&code, 2).unwrap().d_rc, 2);
        assert_eq!(d_rc_exact(&code, 4).unwrap().d_rc, 2);
        assert_eq!(d_rc_exact(&code, 1), Err(Error::EmptySubcode(1)));
    }

    #[test]
    fn single_block_of_four_in_length_eight() {
        assert_eq!(d_rc_exact(&qsd(&["11110000"]), 4).unwrap().d_rc, 8);
    }

    #[test]
    fn witness_realizes_the_value() {
        let code = qsd(&["11110000", "00001100"]);
        for m in [2, 4, 6] {
            let p = d_rc_exact(&code, m).unwrap();
            let sigma = p.witness.to_permutation();
            let sub: Vec<DnaWord> = to_dna(&code)
                .fixed_gc_subcode(m)
                .words()
                .iter()
                .map(|w| w.permute(&sigma))
                .collect();
            let literal = DnaCode::new(8, sub).unwrap().min_rc_distance().unwrap();
            assert_eq!(literal as u32, p.d_rc, "m = {m}");
        }
    }

    #[test]
    fn formulas() {
        assert_eq!(d_rc_formula_1gen(6, 2).unwrap(), 4);
        assert_eq!(d_rc_formula_1gen(4, 4).unwrap(), 0);
        assert_eq!(d_rc_formula_1gen(7, 4).unwrap(), 6);
        assert!(d_rc_formula_1gen(7, 3).is_err());
        assert_eq!(d_rc_formula_2gen(5, 2, 2).unwrap(), [(2, 2), (4, 2)]);
        assert_eq!(
            d_rc_formula_2gen(8, 2, 4).unwrap(),
            [(2, 4), (4, 8), (6, 4)]
        );
        assert_eq!(d_rc_formula_2gen(6, 2, 2).unwrap(), [(2, 2), (4, 4)]);
        assert_eq!(d_rc_formula_overlap(8, 2, 2, 2).unwrap(), [(4, 4)]);
        assert_eq!(
            d_rc_formula_overlap(12, 2, 4, 6).unwrap(),
            [(6, 12), (8, 8), (10, 4)]
        );
        assert!(d_rc_formula_overlap(8, 2, 2, 0).is_err());
        assert_eq!([4, 5, 6, 7].map(delta), [0, 1, 2, 1]);
    }

    #[test]
    fn shapes() {
        let s = |rows: &[&str]| ResidueShape::detect(&BinaryCode::from_rows(rows).unwrap());
        assert_eq!(
            s(&["110000", "001111"]),
            ResidueShape::Disjoint { m1: 2, m2: 4 }
        );
        assert_eq!(
            s(&["111100", "001111"]),
            ResidueShape::Overlap {
                m1: 2,
                m2: 2,
                m3: 2
            }
        );
        assert_eq!(s(&["1100"]), ResidueShape::OneGenerator { m: 2 });
        assert_eq!(s(&["110000", "001100", "000011"]), ResidueShape::Other);
    }

    #[test]
    fn reverse_only_distance_is_available() {
        let code = qsd(&["1100"]);
        // the zero word is its own reverse
        assert_eq!(d_r_exact(&code, 0).unwrap().d_rc, 0);
        assert!(d_r_exact(&code, 2).is_ok());
    }
}
