//! Literal oracles shared by the integration targets: DNA strings built from
//! printed symbols and searches over every permutation of S_n.
#![allow(dead_code)]

use itertools::Itertools;
use qsd_dna::classify::{census, CensusOptions};
use qsd_dna::{build_qsd, QsdCode, QsdRing, RingWord};

/// `0, a, b, c ↦ A, G, C, T` on the printed symbols.
pub fn dna_string(w: &RingWord) -> Vec<u8> {
    w.to_string()
        .split(' ')
        .map(|s| match s {
            "0" => b'A',
            "a" => b'G',
            "b" => b'C',
            "c" => b'T',
            other => panic!("unexpected symbol {other}"),
        })
        .collect()
}

pub fn complement(b: u8) -> u8 {
    match b {
        b'A' => b'T',
        b'T' => b'A',
        b'G' => b'C',
        b'C' => b'G',
        _ => unreachable!(),
    }
}

pub fn gc(w: &[u8]) -> usize {
    w.iter().filter(|&&b| b == b'G' || b == b'C').count()
}

pub fn fixed_gc(code: &QsdCode, m: usize) -> Vec<Vec<u8>> {
    code.codewords()
        .map(|w| dna_string(&w))
        .filter(|w| gc(w) == m)
        .collect()
}

/// `min d_H(x^RC, y)` over ordered pairs of `words` after moving coordinate
/// `j` to position `perm[j]`, abandoning once it drops to `floor`.
pub fn rc_min(words: &[Vec<u8>], perm: &[usize], floor: u32) -> u32 {
    let n = perm.len();
    let moved: Vec<Vec<u8>> = words
        .iter()
        .map(|w| {
            let mut out = vec![0u8; n];
            for (j, &p) in perm.iter().enumerate() {
                out[p] = w[j];
            }
            out
        })
        .collect();
    let mut best = u32::MAX;
    for x in &moved {
        let rc: Vec<u8> = x.iter().rev().map(|&b| complement(b)).collect();
        for y in &moved {
            let d = rc.iter().zip(y).filter(|(p, q)| p != q).count() as u32;
            best = best.min(d);
            if best <= floor {
                return best;
            }
        }
    }
    best
}

/// `max over σ ∈ S_n` of the reverse-complement distance, by listing every permutation.
pub fn literal_d_rc(words: &[Vec<u8>], n: usize) -> u32 {
    let mut best = 0;
    for perm in (0..n).permutations(n) {
        best = best.max(rc_min(words, &perm, best));
        if best as usize == n {
            break;
        }
    }
    best
}

pub fn census_codes(n: usize) -> Vec<QsdCode> {
    census(n, None, &CensusOptions::default())
        .unwrap()
        .into_iter()
        .flat_map(|e| e.representatives)
        .map(|r| build_qsd(QsdRing::E, &r).unwrap())
        .collect()
}
