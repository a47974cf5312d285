use std::collections::BTreeSet;

use latin_hadamard::{CornerQuad, LatinSquare};

mod common;
use common::STRUCTURED_W4;

/// Every AB-BA quad by scanning all row and column pairs.
fn brute_force_quads(s: &LatinSquare) -> BTreeSet<CornerQuad> {
    let n = s.n();
    let mut out = BTreeSet::new();
    for i1 in 1..=n {
        for i2 in (i1 + 1)..=n {
            for j1 in 1..=n {
                for j2 in (j1 + 1)..=n {
                    let a = s.get(i1, j1);
                    let b = s.get(i1, j2);
                    if s.get(i2, j1) == b && s.get(i2, j2) == a {
                        out.insert(CornerQuad {
                            i1,
                            j1,
                            i2,
                            j2,
                            a,
                            b,
                        });
                    }
                }
            }
        }
    }
    out
}

#[test]
fn order_sixteen_matches_reference() {
    let s = LatinSquare::new(4);
    let expected: Vec<Vec<u32>> = STRUCTURED_W4.iter().map(|r| r.to_vec()).collect();
    assert_eq!(s.rows(), expected);
}

#[test]
fn quads_match_brute_force() {
    for w in 1..=4 {
        let s = LatinSquare::new(w);
        let fast: BTreeSet<CornerQuad> = s.abba_quads().unwrap().into_iter().collect();
        assert_eq!(fast, brute_force_quads(&s), "w={w}");
        // One partner per (row, column pair), each quad seen from two rows.
        let n = s.n();
        assert_eq!(fast.len(), n * (n - 1) / 2 * n / 2);
    }
}

#[test]
fn every_row_and_column_pair_has_a_partner() {
    let s = LatinSquare::new(5);
    let n = s.n();
    for i1 in 1..=n {
        for j1 in 1..=n {
            for j2 in 1..=n {
                if j1 == j2 {
                    continue;
                }
                let q = s.find_abba_partner(i1, j1, j2).unwrap();
                assert_ne!(q.i2, i1);
                assert_eq!(s.get(q.i2, j1), q.b);
                assert_eq!(s.get(q.i2, j2), q.a);
            }
        }
    }
}

#[test]
fn entries_are_xor_of_indices() {
    // Independent closed form: S[i][j] = ((i-1) xor (j-1)) + 1.
    for w in 0..=6 {
        let s = LatinSquare::new(w);
        for i in 1..=s.n() {
            for j in 1..=s.n() {
                assert_eq!(s.get(i, j) as usize, ((i - 1) ^ (j - 1)) + 1);
            }
        }
    }
}

#[test]
fn json_round_trip() {
    let s = LatinSquare::new(3);
    let text = serde_json::to_string(&s).unwrap();
    let back: LatinSquare = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
    assert_eq!(LatinSquare::from_rows(&s.rows()).unwrap(), s);
}
