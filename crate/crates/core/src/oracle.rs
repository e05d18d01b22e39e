//! Slow reference implementations that check the fast paths by exhaustive
//! search.

use std::collections::{BTreeSet, HashMap};

use crate::bntheory::{is_bigrassmannian, recompose, ResidualPeriodic};
use crate::corpus::by_length;
use crate::demazure::{compose_all, demazure, is_reduced_tuple, permutations};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Bruhat comparison by checking `s_a <= s_b` at every point of a box.
pub fn pointwise_bruhat_leq(
    a: &Perm,
    b: &Perm,
    a_range: (i64, i64),
    b_range: (i64, i64),
) -> Result<bool> {
    a.same_period(b)?;
    if a.shift() != b.shift() {
        return Err(Error::ShiftMismatch(a.shift(), b.shift()));
    }
    for x in a_range.0..=a_range.1 {
        for y in b_range.0..=b_range.1 {
            if a.slipface(x, y) > b.slipface(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Closed form of the slipface of `iota(n) sigma(m)`:
/// `max(a - b + n, 0) + [a + n = b = m + 1 mod k]`.
pub fn slipface_iota_sigma(n: i64, m: i64, k: i64, a: i64, b: i64) -> u64 {
    let congruent = |x: i64, y: i64| {
        if k == 0 {
            x == y
        } else {
            (x - y).rem_euclid(k) == 0
        }
    };
    let bump = a + n == b && congruent(b, m + 1);
    (a - b + n).max(0) as u64 + bump as u64
}

/// `tally[g][p]` = number of length-`g` words over `letters` and the
/// identity letter whose Demazure product is `p`, for `g <= max_len`.
/// Products are computed with the min-plus Demazure product.
pub fn naive_hecke_tally(
    k: i64,
    letters: &[i64],
    max_len: usize,
) -> Result<Vec<HashMap<Perm, u64>>> {
    let gens = letters
        .iter()
        .map(|&m| Perm::sigma(m, k))
        .collect::<Result<Vec<_>>>()?;
    let mut tally = vec![HashMap::new(); max_len + 1];
    fn go(
        prefix: &Perm,
        depth: usize,
        gens: &[Perm],
        tally: &mut [HashMap<Perm, u64>],
    ) -> Result<()> {
        *tally[depth].entry(prefix.clone()).or_insert(0) += 1;
        if depth + 1 == tally.len() {
            return Ok(());
        }
        // identity letter
        go(prefix, depth + 1, gens, tally)?;
        for s in gens {
            go(&demazure(prefix, s)?, depth + 1, gens, tally)?;
        }
        Ok(())
    }
    go(&Perm::identity(k)?, 0, &gens, &mut tally)?;
    Ok(tally)
}

/// All reduced tuples with the given shifts multiplying to `target`, found
/// by trying every candidate for the first factors and solving for the last.
/// Candidates of shift `c` are `iota(c) x` with `x` of shift 0 and length at
/// most `min(cap, inv(target))`; for period 0 the generators range over the
/// span of `target` padded by the total absolute shift.
pub fn bruteforce_reduced_tuples(
    target: &Perm,
    shifts: &[i64],
    cap: Option<usize>,
) -> Result<BTreeSet<Vec<Perm>>> {
    if shifts.is_empty() {
        return Err(Error::EmptySequence);
    }
    let k = target.period();
    let len = target.inv_count();
    let cap = cap.unwrap_or(len).min(len);
    let letters: Vec<i64> = if k == 0 {
        let pad: i64 = shifts.iter().map(|c| c.abs()).sum::<i64>() + 1;
        let (lo, hi) = target.span();
        (lo - pad..=hi + pad).collect()
    } else {
        (0..k).collect()
    };
    let mut candidates = Vec::new();
    for &c in &shifts[..shifts.len() - 1] {
        candidates.push(by_length(k, c, &letters, cap)?.concat());
    }
    let mut out = BTreeSet::new();
    let mut idx = vec![0usize; candidates.len()];
    loop {
        let mut factors: Vec<Perm> = idx
            .iter()
            .zip(&candidates)
            .map(|(&i, c)| c[i].clone())
            .collect();
        let prefix = if factors.is_empty() {
            Perm::identity(k)?
        } else {
            compose_all(&factors)?
        };
        let last = prefix.inverse().compose(target)?;
        if last.shift() == shifts[shifts.len() - 1] && last.inv_count() <= cap {
            factors.push(last);
            if is_reduced_tuple(&factors)? {
                out.insert(factors);
            }
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < candidates[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Every residual `rho` for which `rho + 1 + k pi` is bigrassmannian, by
/// trying all `k!` permutations of the residues.
pub fn bigrassmannian_residuals(pi: &[i64]) -> Result<Vec<Vec<i64>>> {
    let residues: Vec<i64> = (0..pi.len() as i64).collect();
    let mut out = Vec::new();
    for rho in permutations(&residues) {
        let p = recompose(&ResidualPeriodic {
            rho: rho.clone(),
            pi: pi.to_vec(),
        })?;
        if is_bigrassmannian(&p)? {
            out.push(rho);
        }
    }
    Ok(out)
}
