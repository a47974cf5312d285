use std::collections::BTreeSet;

use latin_hadamard::coloring::{
    choices_from_index, color, enumerate_colorings, enumerate_colorings_par, is_latin_hadamard,
    partial_orthogonality_report, sign_pattern_is_hadamard, symbolic_gram, symbolic_row_gram,
    SignedLatinSquare,
};
use latin_hadamard::reference::{LATIN_HADAMARD_4X4, LATIN_HADAMARD_8X8};
use latin_hadamard::{LatinSquare, Sign};

mod common;
use common::{COLORED_W3, COLORED_W3_INDEX};

fn reference_8() -> BTreeSet<Vec<Vec<i64>>> {
    LATIN_HADAMARD_8X8
        .iter()
        .map(|m| {
            m.iter()
                .map(|r| r.iter().map(|&v| v as i64).collect())
                .collect()
        })
        .collect()
}

fn reference_4() -> BTreeSet<Vec<Vec<i64>>> {
    LATIN_HADAMARD_4X4
        .iter()
        .map(|m| {
            m.iter()
                .map(|r| r.iter().map(|&v| v as i64).collect())
                .collect()
        })
        .collect()
}

fn orthogonal_to_first_line(h: &SignedLatinSquare) -> bool {
    let cols = symbolic_gram(h);
    let rows = symbolic_row_gram(h);
    (2..=h.n()).all(|j| cols.pair(1, j).is_empty() && rows.pair(1, j).is_empty())
}

#[test]
fn candidate_counts() {
    for (w, expected) in [(2u32, 2usize), (3, 16), (4, 2048)] {
        let count = enumerate_colorings(&LatinSquare::new(w)).unwrap().count();
        assert_eq!(count, expected, "w={w}");
    }
}

#[test]
fn every_candidate_is_orthogonal_to_first_row_and_column() {
    for w in 1..=4 {
        for h in enumerate_colorings_par(&LatinSquare::new(w)).unwrap() {
            assert!(h.signs().is_normalized());
            assert!((2..=h.n()).all(|k| h.signs().get(k, k) == Sign::Minus));
            assert!(
                orthogonal_to_first_line(&h),
                "w={w} choices={:?}",
                h.choice_bits()
            );
        }
    }
}

#[test]
fn survivors_match_reference_tables() {
    let four: BTreeSet<_> = enumerate_colorings(&LatinSquare::new(2))
        .unwrap()
        .map(|h| h.unwrap())
        .filter(is_latin_hadamard)
        .map(|h| h.rows())
        .collect();
    assert_eq!(four, reference_4());

    let eight: BTreeSet<_> = enumerate_colorings_par(&LatinSquare::new(3))
        .unwrap()
        .into_iter()
        .filter(is_latin_hadamard)
        .map(|h| h.rows())
        .collect();
    assert_eq!(eight.len(), 16);
    assert_eq!(eight, reference_8());
}

#[test]
fn no_order_sixteen_survivor() {
    let all = enumerate_colorings_par(&LatinSquare::new(4)).unwrap();
    assert_eq!(all.len(), 2048);
    for h in &all {
        assert!(!is_latin_hadamard(h));
        assert!(!symbolic_gram(h).is_off_diagonal_zero());
    }
}

#[test]
fn parallel_and_sequential_enumeration_agree() {
    let s = LatinSquare::new(3);
    let seq: Vec<_> = enumerate_colorings(&s)
        .unwrap()
        .map(|h| h.unwrap())
        .collect();
    let par = enumerate_colorings_par(&s).unwrap();
    assert_eq!(seq, par);
}

#[test]
fn reference_coloring_choice_vector() {
    let s = LatinSquare::new(3);
    let h = color(&s, &choices_from_index(3, COLORED_W3_INDEX)).unwrap();
    let rows: Vec<Vec<i64>> = COLORED_W3.iter().map(|r| r.to_vec()).collect();
    assert_eq!(h.rows(), rows);
    assert!(is_latin_hadamard(&h));
    assert!(sign_pattern_is_hadamard(&h));
}

#[test]
fn all_plus_order_eight_is_reference() {
    let h = color(&LatinSquare::new(3), &[Sign::Plus; 4]).unwrap();
    assert!(reference_8().contains(&h.rows()));
}

#[test]
fn order_sixteen_half_blocks_are_orthogonal() {
    let h = color(&LatinSquare::new(4), &[Sign::Plus; 11]).unwrap();
    let pairs = partial_orthogonality_report(&h);
    for j in 1..=16 {
        for jp in (j + 1)..=16 {
            if (j <= 8) == (jp <= 8) {
                assert!(pairs.contains(&(j, jp)), "({j},{jp})");
            }
        }
    }
    assert!(pairs.len() < 120);
}

#[test]
fn reference_sign_patterns_are_hadamard() {
    for m in LATIN_HADAMARD_8X8.iter() {
        let rows: Vec<Vec<i64>> = m
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        let h = SignedLatinSquare::from_rows(&rows).unwrap();
        assert!(sign_pattern_is_hadamard(&h));
        assert!(is_latin_hadamard(&h));
        assert_eq!(partial_orthogonality_report(&h).len(), 28);
    }
    let rows: Vec<Vec<i64>> = LATIN_HADAMARD_4X4[0]
        .iter()
        .map(|r| r.iter().map(|&v| v as i64).collect())
        .collect();
    assert!(sign_pattern_is_hadamard(
        &SignedLatinSquare::from_rows(&rows).unwrap()
    ));
}
