use proptest::prelude::*;
use qsd_dna::classify::{canonical_form, census, CensusOptions};
use qsd_dna::dna::{d_rc_exact, gc_contents, rc_distance_bits, AlphabetMap};
use qsd_dna::gf2::mask;
use qsd_dna::qsd::{inner_product_bits, inner_product_by_table};
use qsd_dna::{build_qsd, BinaryCode, Permutation, QsdRing, RingWord};

fn ring() -> impl Strategy<Value = QsdRing> {
    prop_oneof![Just(QsdRing::E), Just(QsdRing::F)]
}

fn word(n: usize) -> impl Strategy<Value = (u64, u64)> {
    (0..=mask(n), 0..=mask(n))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|images| Permutation::new(images).unwrap())
}

/// A census representative of length `n` in 2..=8.
fn so_code() -> impl Strategy<Value = BinaryCode> {
    (2usize..=8).prop_flat_map(|n| {
        let reps: Vec<BinaryCode> = census(n, None, &CensusOptions::default())
            .unwrap()
            .into_iter()
            .flat_map(|e| e.representatives)
            .collect();
        proptest::sample::select(reps)
    })
}

fn code_and_permutation() -> impl Strategy<Value = (BinaryCode, Permutation)> {
    so_code().prop_flat_map(|c| {
        let n = c.len();
        (Just(c), permutation(n))
    })
}

proptest! {
    #[test]
    fn packed_inner_product_matches_the_ring_table(
        ring in ring(),
        (n, x, y) in (1usize..=12).prop_flat_map(|n| (Just(n), word(n), word(n)))
    ) {
        let u = RingWord::new(ring, n, x.0, x.1).unwrap();
        let v = RingWord::new(ring, n, y.0, y.1).unwrap();
        prop_assert_eq!(inner_product_bits(ring, x.0, x.1, y.0, y.1), inner_product_by_table(&u, &v).unwrap());
    }

    #[test]
    fn bit_level_rc_distance_matches_dna_strings(
        (n, x, y) in (1usize..=16).prop_flat_map(|n| (Just(n), word(n), word(n)))
    ) {
        let map = AlphabetMap::new(&QsdRing::E.ring()).unwrap();
        let u = map.word(&RingWord::new(QsdRing::E, n, x.0, x.1).unwrap());
        let v = map.word(&RingWord::new(QsdRing::E, n, y.0, y.1).unwrap());
        prop_assert_eq!(rc_distance_bits(n, x, y) as usize, u.reverse_complement().hamming_distance(&v).unwrap());
    }

    #[test]
    fn dual_of_dual_is_the_code(c in so_code()) {
        prop_assert_eq!(c.dual().dual(), c.clone());
        prop_assert!(c.is_subcode_of(&c.dual()));
        prop_assert_eq!(c.dim() + c.dual().dim(), c.len());
    }

    #[test]
    fn weight_distribution_survives_permutation((c, p) in code_and_permutation()) {
        prop_assert_eq!(c.permute(&p).unwrap().weight_distribution(), c.weight_distribution());
    }

    #[test]
    fn canonical_form_is_a_class_invariant((c, p) in code_and_permutation()) {
        let moved = c.permute(&p).unwrap();
        prop_assert_eq!(canonical_form(&moved), canonical_form(&c));
        prop_assert_eq!(canonical_form(&canonical_form(&c)), canonical_form(&c));
    }

    #[test]
    fn d_rc_is_invariant_under_coordinate_permutation((c, p) in code_and_permutation()) {
        prop_assume!(c.len() <= 7);
        let a = build_qsd(QsdRing::E, &c).unwrap();
        let b = build_qsd(QsdRing::E, &c.permute(&p).unwrap()).unwrap();
        for m in gc_contents(&c) {
            prop_assert_eq!(d_rc_exact(&a, m).unwrap().d_rc, d_rc_exact(&b, m).unwrap().d_rc);
        }
    }

    #[test]
    fn content_zero_distance_is_zero(c in so_code()) {
        let q = build_qsd(QsdRing::E, &c).unwrap();
        prop_assert_eq!(d_rc_exact(&q, 0).unwrap().d_rc, 0);
    }

    #[test]
    fn qsd_codes_are_closed_under_complement(c in so_code(), ring in ring()) {
        let q = build_qsd(ring, &c).unwrap();
        let all_c = RingWord::new(ring, c.len(), 0, mask(c.len())).unwrap();
        for w in q.codewords().take(64) {
            prop_assert!(q.contains(&w.add(&all_c).unwrap()));
        }
    }
}
