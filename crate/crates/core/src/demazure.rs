//! The Demazure product, computed as a min-plus product of slipface
//! functions and read back into a permutation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{check_period, hull, Perm};

/// Default cap on candidates examined by the brute-force oracles.
pub const DEFAULT_ORACLE_BOUND: u64 = 1_000_000;

/// Values of a slipface function on the rectangle
/// `[a_lo, a_hi] x [b_lo, b_hi]` (inclusive), together with its asymptotic
/// shift and validity margin.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlipfaceTable {
    pub a_range: (i64, i64),
    pub b_range: (i64, i64),
    /// Shift `chi`: `s(a, b) = chi + a - b` once `a - b >= margin`.
    pub chi: i64,
    /// `s(a, b) = 0` once `a - b <= -margin`.
    pub margin: i64,
    /// Row-major by `b`, then `a`.
    values: Vec<u64>,
}

impl SlipfaceTable {
    pub fn from_fn(
        a_range: (i64, i64),
        b_range: (i64, i64),
        chi: i64,
        margin: i64,
        mut f: impl FnMut(i64, i64) -> u64,
    ) -> SlipfaceTable {
        let mut values = Vec::new();
        for b in b_range.0..=b_range.1 {
            for a in a_range.0..=a_range.1 {
                values.push(f(a, b));
            }
        }
        SlipfaceTable {
            a_range,
            b_range,
            chi,
            margin,
            values,
        }
    }

    /// Like [`SlipfaceTable::from_fn`], but `f` is only consulted on the
    /// diagonal band `|a - b| < margin`; the rest is filled in from the
    /// asymptotic form.
    pub fn from_band(
        a_range: (i64, i64),
        b_range: (i64, i64),
        chi: i64,
        margin: i64,
        mut f: impl FnMut(i64, i64) -> u64,
    ) -> SlipfaceTable {
        Self::from_fn(a_range, b_range, chi, margin, |a, b| {
            if a - b <= -margin {
                0
            } else if a - b >= margin {
                (chi + a - b) as u64
            } else {
                f(a, b)
            }
        })
    }

    /// Build from explicit rows (one `Vec` per `b`, each indexed by `a`).
    pub fn from_rows(
        a_lo: i64,
        b_lo: i64,
        chi: i64,
        margin: i64,
        rows: Vec<Vec<u64>>,
    ) -> Result<SlipfaceTable> {
        let width = rows.first().map_or(0, Vec::len);
        if width == 0 || rows.iter().any(|r| r.len() != width) || margin < 1 {
            return Err(Error::BadParameters(
                "slipface table must be a nonempty rectangle".into(),
            ));
        }
        Ok(SlipfaceTable {
            a_range: (a_lo, a_lo + width as i64 - 1),
            b_range: (b_lo, b_lo + rows.len() as i64 - 1),
            chi,
            margin,
            values: rows.into_iter().flatten().collect(),
        })
    }

    /// Tabulates `p` on the given rectangle.
    pub fn tabulate(p: &Perm, a_range: (i64, i64), b_range: (i64, i64)) -> SlipfaceTable {
        Self::from_fn(a_range, b_range, p.shift(), p.margin(), |a, b| {
            p.slipface(a, b)
        })
    }

    /// Default box for `p`: its span padded by `2M + 2` on every side.
    pub fn default_box(p: &Perm) -> ((i64, i64), (i64, i64)) {
        let (lo, hi) = p.span();
        let pad = 2 * p.margin() + 2;
        ((lo - pad, hi + pad), (lo - pad, hi + pad))
    }

    pub fn around(p: &Perm) -> SlipfaceTable {
        let (a, b) = Self::default_box(p);
        Self::tabulate(p, a, b)
    }

    pub fn get(&self, a: i64, b: i64) -> Option<u64> {
        let (a_lo, a_hi) = self.a_range;
        let (b_lo, b_hi) = self.b_range;
        if a < a_lo || a > a_hi || b < b_lo || b > b_hi {
            return None;
        }
        let width = (a_hi - a_lo + 1) as usize;
        Some(self.values[(b - b_lo) as usize * width + (a - a_lo) as usize])
    }

    /// Rows of the table, one per `b`.
    pub fn rows(&self) -> Vec<Vec<u64>> {
        let width = (self.a_range.1 - self.a_range.0 + 1) as usize;
        self.values.chunks(width).map(<[u64]>::to_vec).collect()
    }

    fn cells(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        (self.b_range.0..=self.b_range.1)
            .flat_map(move |b| (self.a_range.0..=self.a_range.1).map(move |a| (a, b)))
    }

    /// Checks the asymptotic form, submodularity, and (for `k >= 2`)
    /// invariance under `(a, b) -> (a + k, b + k)`.
    pub fn validate(&self, k: i64) -> Result<()> {
        for (a, b) in self.cells() {
            let v = self.get(a, b).expect("cell in range") as i64;
            if (a - b <= -self.margin && v != 0) || (a - b >= self.margin && v != self.chi + a - b)
            {
                return Err(Error::BadAsymptotics(a, b));
            }
        }
        for (a, b) in self.cells() {
            if let (Some(s00), Some(s10), Some(s01), Some(s11)) = (
                self.get(a, b),
                self.get(a + 1, b),
                self.get(a, b + 1),
                self.get(a + 1, b + 1),
            ) {
                if (s10 + s01) < (s00 + s11) {
                    return Err(Error::NotSubmodular(a, b));
                }
            }
        }
        if k >= 2 {
            for (a, b) in self.cells() {
                if let Some(shifted) = self.get(a + k, b + k) {
                    if shifted != self.get(a, b).expect("cell in range") {
                        return Err(Error::InconsistentPeriod(a, b));
                    }
                }
            }
        }
        Ok(())
    }

    /// `p(y)`: the unique `x` with `s(x, y) - s(x, y + 1) = 0` and
    /// `s(x + 1, y) - s(x + 1, y + 1) = 1`.
    fn recover_value(&self, y: i64) -> Option<i64> {
        let m = self.margin;
        (y - m..=y + m).find(|&x| {
            let step = |a: i64| Some(self.get(a, y)? as i64 - self.get(a, y + 1)? as i64);
            step(x) == Some(0) && step(x + 1) == Some(1)
        })
    }

    /// Positions `y` whose value is fully determined by the table.
    fn recoverable(&self) -> (i64, i64) {
        let m = self.margin;
        let lo = self.b_range.0.max(self.a_range.0 + m);
        let hi = (self.b_range.1 - 1).min(self.a_range.1 - m - 1);
        (lo, hi)
    }
}

/// The unique permutation whose slipface function agrees with `t` on its box.
///
/// For period 0, positions outside the recoverable part of the box are
/// taken to follow the shift `n -> n - chi`; the result is checked against
/// every cell of the table.
pub fn perm_from_slipface(t: &SlipfaceTable, k: i64) -> Result<Perm> {
    check_period(k)?;
    t.validate(k)?;
    let (lo, hi) = t.recoverable();
    let p = if k == 0 {
        if hi < lo {
            Perm::iota(t.chi, 0)?
        } else {
            let vals = (lo..=hi)
                .map(|y| t.recover_value(y).ok_or(Error::TableTooSmall))
                .collect::<Result<Vec<_>>>()?;
            Perm::make_finitary(t.chi, lo, vals).map_err(|_| Error::TableTooSmall)?
        }
    } else {
        if hi - lo + 1 < k {
            return Err(Error::TableTooSmall);
        }
        let mut window = vec![0; k as usize];
        for y in lo..lo + k {
            let v = t.recover_value(y).ok_or(Error::TableTooSmall)?;
            window[y.rem_euclid(k) as usize] = v - y.div_euclid(k) * k;
        }
        Perm::make_affine(k, window).map_err(|_| Error::TableTooSmall)?
    };
    if p.shift() != t.chi
        || t.cells()
            .any(|(a, b)| t.get(a, b) != Some(p.slipface(a, b)))
    {
        return Err(Error::TableTooSmall);
    }
    Ok(p)
}

/// `min_l s_a(x, l) + s_b(l, y)`.
///
/// Below `x - M_a` the sum is nonincreasing in `l` and above `y + M_b` it is
/// nondecreasing, so the minimum is attained between the two; the scan is
/// widened if a neighbour outside the range ever beats it.
pub fn min_plus(a: &Perm, b: &Perm, x: i64, y: i64) -> u64 {
    let f = |l: i64| a.slipface(x, l) + b.slipface(l, y);
    let (p, q) = (x - a.margin(), y + b.margin());
    let (mut lo, mut hi) = (p.min(q), p.max(q));
    loop {
        let best = (lo..=hi).map(f).min().expect("nonempty scan");
        if f(lo - 1) >= best && f(hi + 1) >= best {
            return best;
        }
        let w = hi - lo + 1;
        lo -= w;
        hi += w;
    }
}

/// The Demazure product `a * b`.
pub fn demazure(a: &Perm, b: &Perm) -> Result<Perm> {
    let k = a.same_period(b)?;
    let chi = a.shift() + b.shift();
    let margin = a.margin() + b.margin();
    let (ylo, yhi) = if k == 0 {
        let chi_b = b.shift();
        let (l, h) = hull(&[
            b.support(),
            a.support().map(|(l, h)| (l + chi_b, h + chi_b)),
            Some((0, 1)),
        ]);
        (l, h - 1)
    } else {
        (0, k)
    };
    let mut pad = margin + 1;
    loop {
        let b_range = (ylo - pad, yhi + pad);
        let a_range = (b_range.0 - margin - 1, b_range.1 + margin + 2);
        let table =
            SlipfaceTable::from_band(a_range, b_range, chi, margin, |x, y| min_plus(a, b, x, y));
        match perm_from_slipface(&table, k) {
            Err(Error::TableTooSmall) if pad < 64 * (margin + 1) => pad *= 2,
            other => return other,
        }
    }
}

/// Left fold of [`demazure`] over a nonempty sequence.
pub fn demazure_fold(ps: &[Perm]) -> Result<Perm> {
    let (first, rest) = ps.split_first().ok_or(Error::EmptySequence)?;
    rest.iter()
        .try_fold(first.clone(), |acc, p| demazure(&acc, p))
}

/// Ordinary product `ps[0] * ps[1] * ...`.
pub fn compose_all(ps: &[Perm]) -> Result<Perm> {
    let (first, rest) = ps.split_first().ok_or(Error::EmptySequence)?;
    rest.iter().try_fold(first.clone(), |acc, p| acc.compose(p))
}

/// True iff `a` and `b^-1` share no inversion class.
pub fn is_reduced_pair(a: &Perm, b: &Perm) -> Result<bool> {
    a.same_period(b)?;
    let inv_a = a.inversion_classes();
    Ok(b.inverse().inversion_classes().is_disjoint(&inv_a))
}

/// True iff the inversion set of the product is the disjoint union of the
/// inversion sets of the factors, each pulled back through the product of
/// the factors to its right.
pub fn is_reduced_tuple(ps: &[Perm]) -> Result<bool> {
    let Some(first) = ps.first() else {
        return Ok(true);
    };
    for p in ps {
        first.same_period(p)?;
    }
    let k = first.period();
    let product = compose_all(ps)?;
    let mut suffix = Perm::identity(k)?;
    let mut seen = BTreeSet::new();
    for factor in ps.iter().rev() {
        for class in factor.inversion_classes() {
            let (x, y) = (suffix.apply_inverse(class.m), suffix.apply_inverse(class.n));
            if x >= y || !seen.insert(product.canonical_pair(x, y)) {
                return Ok(false);
            }
        }
        suffix = factor.compose(&suffix)?;
    }
    Ok(seen == product.inversion_classes())
}

/// `inv(product) = sum of inv(factor)`.
pub fn is_length_additive(ps: &[Perm]) -> Result<bool> {
    if ps.is_empty() {
        return Ok(true);
    }
    let product = compose_all(ps)?;
    Ok(product.inv_count() == ps.iter().map(Perm::inv_count).sum::<usize>())
}

/// All `q` with the same period and shift as `p` and `q <= p` in Bruhat
/// order, by exhaustive search.
///
/// Every such `q` has displacement at most that of `p` (period `k`), resp.
/// is supported in the window of `p` (period 0).
pub fn bruhat_lower_set(p: &Perm, bound: u64) -> Result<BTreeSet<Perm>> {
    let mut out = BTreeSet::new();
    if let Some((chi, lo, vals)) = p.finitary_parts() {
        let count = (1..=vals.len() as u64).try_fold(1u64, |acc, n| acc.checked_mul(n));
        if count.is_none_or(|c| c > bound) {
            return Err(Error::TooLarge(bound));
        }
        let mut sorted = vals.to_vec();
        sorted.sort_unstable();
        for arrangement in permutations(&sorted) {
            let q = Perm::make_finitary(chi, lo, arrangement)?;
            if q.bruhat_leq(p)? {
                out.insert(q);
            }
        }
        return Ok(out);
    }
    let k = p.period();
    let d = p.displacement();
    let count = (2 * d as u64 + 1).checked_pow(k as u32);
    if count.is_none_or(|c| c > bound) {
        return Err(Error::TooLarge(bound));
    }
    let shift = p.shift();
    let mut window = Vec::with_capacity(k as usize);
    let mut used = vec![false; k as usize];
    affine_windows(k, d, &mut window, &mut used, &mut |w| {
        let q = Perm::make_affine(k, w.to_vec()).expect("distinct residues");
        if q.shift() == shift && q.bruhat_leq(p).expect("same period and shift") {
            out.insert(q);
        }
    });
    Ok(out)
}

pub(crate) fn affine_windows(
    k: i64,
    d: i64,
    window: &mut Vec<i64>,
    used: &mut [bool],
    visit: &mut impl FnMut(&[i64]),
) {
    let i = window.len() as i64;
    if i == k {
        visit(window);
        return;
    }
    for v in i - d..=i + d {
        let r = v.rem_euclid(k) as usize;
        if !used[r] {
            used[r] = true;
            window.push(v);
            affine_windows(k, d, window, used, visit);
            window.pop();
            used[r] = false;
        }
    }
}

/// All arrangements of `items` (lexicographic order for sorted input).
pub(crate) fn permutations(items: &[i64]) -> Vec<Vec<i64>> {
    if items.is_empty() {
        return vec![Vec::new()];
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

/// Bruhat maximum of `{ a1 * b1 : a1 <= a, b1 <= b }`, by enumeration.
pub fn demazure_by_max_oracle(a: &Perm, b: &Perm, bound: u64) -> Result<Perm> {
    a.same_period(b)?;
    let lower_a = bruhat_lower_set(a, bound)?;
    let lower_b = bruhat_lower_set(b, bound)?;
    let pairs = (lower_a.len() as u64).saturating_mul(lower_b.len() as u64);
    if pairs > bound {
        return Err(Error::TooLarge(bound));
    }
    let mut products = BTreeSet::new();
    for x in &lower_a {
        for y in &lower_b {
            products.insert(x.compose(y)?);
        }
    }
    let mut maxima = Vec::new();
    for candidate in &products {
        let mut dominates = true;
        for other in &products {
            if !other.bruhat_leq(candidate)? {
                dominates = false;
                break;
            }
        }
        if dominates {
            maxima.push(candidate.clone());
        }
    }
    match maxima.as_slice() {
        [m] => Ok(m.clone()),
        _ => Err(Error::NoUniqueMax),
    }
}
