//! Small exhaustive and random families of permutations used by tests, the
//! acceptance suite and the CLI self-test.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bntheory::{gamma_rd, gamma_splitting, SplittingType};
use crate::demazure::permutations;
use crate::error::Result;
use crate::perm::Perm;

/// All shift-0 period-0 permutations supported on `window`.
pub fn window_perms(window: &[i64]) -> Vec<Perm> {
    let lo = window.first().copied().unwrap_or(0);
    permutations(window)
        .into_iter()
        .map(|v| Perm::make_finitary(0, lo, v).expect("rearrangement of the window"))
        .collect()
}

/// Elements `iota(shift) * x` with `x` of length at most `max_len`, grouped by
/// length, generated by breadth-first search over `letters`.
pub fn by_length(k: i64, shift: i64, letters: &[i64], max_len: usize) -> Result<Vec<Vec<Perm>>> {
    let gens = letters
        .iter()
        .map(|&m| Perm::sigma(m, k))
        .collect::<Result<Vec<_>>>()?;
    let mut levels = vec![vec![Perm::iota(shift, k)?]];
    for len in 1..=max_len {
        let mut next = BTreeSet::new();
        for p in &levels[len - 1] {
            for s in &gens {
                let q = p.compose(s)?;
                if q.inv_count() == len {
                    next.insert(q);
                }
            }
        }
        levels.push(next.into_iter().collect());
    }
    Ok(levels)
}

/// Period-`k` elements (`k >= 2`) of the given shift and length at most
/// `max_len`.
pub fn affine_by_length(k: i64, shift: i64, max_len: usize) -> Result<Vec<Perm>> {
    let letters: Vec<i64> = (0..k).collect();
    Ok(by_length(k, shift, &letters, max_len)?.concat())
}

/// A random permutation of period `k` whose values stay within `extent` of
/// their positions (`k >= 2`), resp. supported in a window of at most
/// `extent` positions with shift in `[-3, 3]` (`k = 0`).
pub fn random_perm<R: Rng>(rng: &mut R, k: i64, extent: i64) -> Perm {
    if k == 0 {
        let len = rng.gen_range(0..=extent);
        let lo = rng.gen_range(-3..=3 - len.min(3));
        let chi = rng.gen_range(-3..=3);
        let mut vals: Vec<i64> = (lo - chi..lo + len - chi).collect();
        vals.shuffle(rng);
        return Perm::make_finitary(chi, lo, vals).expect("shuffled window");
    }
    loop {
        let w: Vec<i64> = (0..k)
            .map(|i| i + rng.gen_range(-extent..=extent))
            .collect();
        if let Ok(p) = Perm::make_affine(k, w) {
            return p;
        }
    }
}

/// Nondecreasing `k`-tuples with entries in `lo..=hi`.
pub fn splitting_types(k: usize, lo: i64, hi: i64) -> Vec<SplittingType> {
    fn go(k: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<SplittingType>) {
        if cur.len() == k {
            out.push(SplittingType::new(cur.clone()).expect("nondecreasing"));
            return;
        }
        let start = cur.last().copied().unwrap_or(lo);
        for e in start..=hi {
            cur.push(e);
            go(k, lo, hi, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, lo, hi, &mut Vec::new(), &mut out);
    out
}

/// The fixed corpus used for format round trips: named examples, small
/// exhaustive families of several periods and shifts, Brill-Noether and
/// splitting-type permutations, and a seeded random sample.
pub fn text_corpus() -> Vec<Perm> {
    use rand::SeedableRng;

    let mut out = BTreeSet::new();
    out.insert(Perm::make_finitary(1, -1, vec![1, -1, 0, -2]).expect("valid"));
    out.insert(Perm::make_affine(2, vec![0, 3]).expect("valid"));
    for n in -3..=3 {
        for k in [0, 2, 3, 4] {
            out.insert(Perm::iota(n, k).expect("valid"));
            out.insert(Perm::sigma(n, k).expect("valid"));
        }
    }
    out.extend(window_perms(&[-1, 0, 1, 2]));
    for k in [2, 3] {
        for shift in -1..=1 {
            out.extend(affine_by_length(k, shift, 3).expect("valid"));
        }
    }
    for r in 0..=4 {
        for chi in r - 5..r {
            out.insert(gamma_rd(r, chi).expect("valid"));
        }
    }
    for k in 2..=3 {
        for e in splitting_types(k, -3, 1) {
            out.insert(gamma_splitting(&e).expect("valid"));
        }
    }
    let mut rng = rand::rngs::StdRng::seed_from_u64(7);
    for _ in 0..100 {
        let k = [0, 2, 3][rng.gen_range(0..3)];
        out.insert(random_perm(&mut rng, k, 6));
    }
    out.into_iter().collect()
}
