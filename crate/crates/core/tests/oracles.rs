//! Independent brute-force oracles: literal searches over all of S_n and a
//! symbol-level reading of the DNA words, sharing nothing with the library's
//! bit-packed fast paths beyond codeword listing.

mod common;

use std::collections::BTreeSet;

use common::{census_codes, dna_string, fixed_gc, gc, literal_d_rc, rc_min};
use itertools::Itertools;
use qsd_dna::classify::{census, CensusOptions};
use qsd_dna::dna::{d_rc_exact, gc_contents};
use qsd_dna::{build_qsd, BinaryCode, QsdCode, QsdRing};

fn code(rows: &[&str]) -> QsdCode {
    build_qsd(QsdRing::E, &BinaryCode::from_rows(rows).unwrap()).unwrap()
}

#[test]
fn involution_search_equals_literal_permutation_search_up_to_six() {
    for n in 1..=6 {
        for c in census_codes(n) {
            for m in gc_contents(c.residue()) {
                let words = fixed_gc(&c, m);
                assert_eq!(
                    d_rc_exact(&c, m).unwrap().d_rc,
                    literal_d_rc(&words, n),
                    "n={n} res={} m={m}",
                    c.residue()
                );
            }
        }
    }
}

#[test]
fn witness_pairings_attain_the_reported_distance() {
    for n in 1..=8 {
        for c in census_codes(n) {
            for m in gc_contents(c.residue()) {
                let p = d_rc_exact(&c, m).unwrap();
                let perm = p.witness.to_permutation();
                let words = fixed_gc(&c, m);
                assert_eq!(
                    rc_min(&words, perm.images(), 0),
                    p.d_rc,
                    "n={n} res={} m={m}",
                    c.residue()
                );
            }
        }
    }
}

#[test]
fn printed_values_above_the_exact_search_are_unattainable() {
    // Each printed value exceeds every permutation's distance.
    let cases: [(&[&str], usize, u32); 3] = [
        (&["111100", "001111"], 4, 4),
        (&["1111000", "0011110"], 4, 4),
        (&["1100000", "0011000", "0000110"], 2, 4),
    ];
    for (rows, m, printed) in cases {
        let c = code(rows);
        let literal = literal_d_rc(&fixed_gc(&c, m), c.len());
        assert!(literal < printed, "{rows:?} m={m}: literal {literal}");
        assert_eq!(literal, d_rc_exact(&c, m).unwrap().d_rc);
    }
}

#[test]
fn printed_zeros_are_beaten_by_an_explicit_permutation() {
    // A literal permutation with every pair at distance ≥ 4 refutes a printed 0.
    for rows in [
        &["11110000", "00001111"][..],
        &["11110000", "00001100", "00000011"][..],
    ] {
        let c = code(rows);
        let p = d_rc_exact(&c, 4).unwrap();
        let d = rc_min(&fixed_gc(&c, 4), p.witness.to_permutation().images(), 0);
        assert_eq!(d, 4, "{rows:?}");
    }
}

#[test]
fn two_generator_formula_counterexample_at_seven() {
    // Residue <1100000, 0011000>: the equal-weight case predicts 4 at m = 2.
    let c = code(&["1100000", "0011000"]);
    assert_eq!(qsd_dna::dna::d_rc_formula_2gen(7, 2, 2).unwrap()[0], (2, 4));
    assert_eq!(literal_d_rc(&fixed_gc(&c, 2), 7), 2);
}

/// Class representative by literal minimization over S_n of the sorted codeword list.
fn literal_canonical(code: &BinaryCode) -> Vec<u64> {
    let n = code.len();
    let words: Vec<u64> = code.codewords().collect();
    (0..n)
        .permutations(n)
        .map(|perm| {
            let mut image: Vec<u64> = words
                .iter()
                .map(|&w| {
                    (0..n)
                        .filter(|&j| w >> j & 1 == 1)
                        .map(|j| 1u64 << perm[j])
                        .sum()
                })
                .collect();
            image.sort_unstable();
            image
        })
        .min()
        .unwrap()
}

#[test]
fn census_counts_match_literal_orbit_counting_up_to_seven() {
    for n in 1..=7 {
        let mut level: Vec<BinaryCode> = vec![BinaryCode::zero(n)];
        let fast = census(n, None, &CensusOptions::default()).unwrap();
        for (k, cell) in fast.iter().enumerate() {
            if k > 0 {
                let mut seen = BTreeSet::new();
                let mut next = Vec::new();
                for parent in &level {
                    for v in 1..(1u64 << n) {
                        if v.count_ones() % 2 == 1
                            || parent.contains(v)
                            || !parent.dual().contains(v)
                        {
                            continue;
                        }
                        let rows: Vec<u64> = parent.rows().iter().copied().chain([v]).collect();
                        let child = BinaryCode::from_generators(n, rows).unwrap();
                        if seen.insert(literal_canonical(&child)) {
                            next.push(child);
                        }
                    }
                }
                level = next;
            }
            assert_eq!(level.len(), cell.count, "n={n} k={k}");
        }
    }
}

#[test]
fn gc_enumerator_counts_match_dna_strings() {
    for n in 1..=7 {
        for c in census_codes(n) {
            let gcw = qsd_dna::gcw_direct(&c);
            for m in 0..=n {
                let literal = c.codewords().filter(|w| gc(&dna_string(w)) == m).count() as u64;
                assert_eq!(
                    qsd_dna::enumerators::fixed_gc_subcode_size(&gcw, m),
                    literal
                );
            }
        }
    }
}

#[test]
fn printed_values_above_the_exact_search_are_unattainable_at_eight() {
    let cases: [(&[&str], usize, u32); 2] = [
        (&["11001100", "00111100", "00000011"], 6, 4),
        (&["10001110", "01010110", "00111010"], 4, 4),
    ];
    for (rows, m, printed) in cases {
        let c = code(rows);
        let literal = literal_d_rc(&fixed_gc(&c, m), 8);
        assert!(literal < printed, "{rows:?} m={m}: literal {literal}");
        assert_eq!(literal, d_rc_exact(&c, m).unwrap().d_rc);
    }
}
