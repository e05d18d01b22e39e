//! Exhaustive comparisons of the fast algorithms against brute force on
//! small families.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use transmission::corpus::{affine_by_length, by_length, window_perms};
use transmission::demazure::{
    bruhat_lower_set, demazure, demazure_by_max_oracle, DEFAULT_ORACLE_BOUND,
};
use transmission::oracle::{bruteforce_reduced_tuples, naive_hecke_tally, pointwise_bruhat_leq};
use transmission::words::{hecke_word_count, reduced_tuples};
use transmission::Perm;

#[test]
fn demazure_matches_oracle_on_s4_window() {
    let family = window_perms(&[0, 1, 2, 3]);
    for a in family.iter().step_by(3) {
        for b in &family {
            assert_eq!(
                demazure(a, b).unwrap(),
                demazure_by_max_oracle(a, b, DEFAULT_ORACLE_BOUND).unwrap(),
                "{a} * {b}"
            );
        }
    }
}

#[test]
fn demazure_matches_oracle_on_affine_s3() {
    let family = affine_by_length(3, 0, 2).unwrap();
    let shifted = affine_by_length(3, 1, 1).unwrap();
    for a in family.iter().chain(&shifted) {
        for b in family.iter().chain(&shifted) {
            assert_eq!(
                demazure(a, b).unwrap(),
                demazure_by_max_oracle(a, b, DEFAULT_ORACLE_BOUND).unwrap(),
                "{a} * {b}"
            );
        }
    }
}

#[test]
fn lower_set_of_gamma_rd() {
    let g = transmission::bntheory::gamma_rd(1, -1).unwrap();
    let lower = bruhat_lower_set(&g, DEFAULT_ORACLE_BOUND).unwrap();
    let (chi, lo, vals) = g.finitary_parts().unwrap();
    let mut sorted = vals.to_vec();
    sorted.sort_unstable();
    let range = (lo - 6, lo + vals.len() as i64 + 6);
    let direct: BTreeSet<Perm> = permutations(&sorted)
        .into_iter()
        .map(|v| Perm::make_finitary(chi, lo, v).unwrap())
        .filter(|q| pointwise_bruhat_leq(q, &g, range, range).unwrap())
        .collect();
    assert_eq!(lower, direct);
    assert!(lower.contains(&Perm::iota(-1, 0).unwrap()));
    assert!(lower.contains(&g));
}

fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[test]
fn hecke_counts_match_naive_enumeration() {
    for (k, letters) in [(0, vec![-1, 0, 1, 2]), (2, vec![0, 1]), (3, vec![0, 1, 2])] {
        let tally = naive_hecke_tally(k, &letters, 4).unwrap();
        for p in by_length(k, 0, &letters, 3).unwrap().concat() {
            for (g, counts) in tally.iter().enumerate() {
                let naive = counts.get(&p).copied().unwrap_or(0);
                assert_eq!(
                    hecke_word_count(&p, g).unwrap(),
                    BigUint::from(naive),
                    "H({g}, {p})"
                );
            }
        }
    }
}

fn tuple_targets() -> Vec<Perm> {
    let mut out = Vec::new();
    for shift in -1..=1 {
        out.extend(by_length(0, shift, &[0, 1, 2], 4).unwrap().concat());
        out.extend(affine_by_length(2, shift, 4).unwrap());
        out.extend(affine_by_length(3, shift, 3).unwrap());
    }
    out
}

#[test]
fn reduced_tuples_match_bruteforce() {
    let shift_patterns: [&[i64]; 4] = [&[0, 0], &[1, -1], &[0, 0, 0], &[-1, 1, 0]];
    for target in tuple_targets() {
        let chi = target.shift();
        for pattern in shift_patterns {
            if pattern.len() == 3 && target.inv_count() > 3 {
                continue;
            }
            let mut shifts = pattern.to_vec();
            shifts[0] += chi;
            for cap in [None, Some(1), Some(2)] {
                let fast: BTreeSet<Vec<Perm>> = reduced_tuples(&target, &shifts, cap)
                    .unwrap()
                    .into_iter()
                    .map(|t| t.factors)
                    .collect();
                let slow = bruteforce_reduced_tuples(&target, &shifts, cap).unwrap();
                assert_eq!(fast, slow, "{target} shifts {shifts:?} cap {cap:?}");
            }
        }
    }
}

#[test]
fn reduced_tuple_shift_sum_is_checked() {
    let t = Perm::sigma(0, 2).unwrap();
    assert_eq!(
        reduced_tuples(&t, &[1, 0], None).unwrap_err().kind(),
        "ShiftSumMismatch"
    );
}
