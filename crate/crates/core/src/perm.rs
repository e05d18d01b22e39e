//! Finitely presented permutations of the integers.
//!
//! Two families are supported:
//!
//! * period `0`: permutations agreeing with the shift `n -> n - chi` outside a
//!   finite window of positions (almost-sign-preserving, finitely many
//!   inversions);
//! * period `k >= 2`: extended `k`-affine permutations, `p(n + k) = p(n) + k`,
//!   stored by their values on `0..k`.
//!
//! Values are always kept in canonical form, so derived equality and hashing
//! coincide with equality of the underlying maps on `Z`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    /// `p(n) = vals[n - lo]` on `lo..lo + len`, `p(n) = n - chi` elsewhere.
    Finitary { chi: i64, lo: i64, vals: Vec<i64> },
    /// `p(i + q k) = window[i] + q k`.
    Affine { k: i64, window: Vec<i64> },
}

/// A bijection `Z -> Z` of one of the two supported families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "crate::format::PermJson", into = "crate::format::PermJson")]
pub struct Perm {
    repr: Repr,
}

/// Canonical representative `(m, n)`, `m < n`, of a class of inversions.
///
/// For period `k >= 2` the pair is translated so that `n` lies in `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InversionClass {
    pub m: i64,
    pub n: i64,
}

pub(crate) fn check_period(k: i64) -> Result<()> {
    if k == 0 || k >= 2 {
        Ok(())
    } else {
        Err(Error::BadPeriod(k))
    }
}

impl Perm {
    /// Extended `k`-affine permutation with `p(i) = window[i]` for `0 <= i < k`.
    pub fn make_affine(k: i64, window: Vec<i64>) -> Result<Perm> {
        if k < 2 {
            return Err(Error::BadPeriod(k));
        }
        if window.len() != k as usize {
            return Err(Error::WrongWindowLength {
                expected: k as usize,
                got: window.len(),
            });
        }
        let mut seen: Vec<Option<i64>> = vec![None; k as usize];
        for &w in &window {
            let r = w.rem_euclid(k) as usize;
            if let Some(prev) = seen[r] {
                return Err(Error::DuplicateResidue(prev, w, k));
            }
            seen[r] = Some(w);
        }
        Ok(Perm {
            repr: Repr::Affine { k, window },
        })
    }

    /// Period-0 permutation equal to `n -> n - chi` outside `lo..lo + vals.len()`.
    pub fn make_finitary(chi: i64, lo: i64, vals: Vec<i64>) -> Result<Perm> {
        let len = vals.len() as i64;
        let (min, max) = (lo - chi, lo + len - 1 - chi);
        let mut seen = vec![false; vals.len()];
        for &v in &vals {
            if v < min || v > max || seen[(v - min) as usize] {
                return Err(Error::NotAWindowPermutation { lo: min, hi: max });
            }
            seen[(v - min) as usize] = true;
        }
        Ok(Self::trimmed(chi, lo, vals))
    }

    fn trimmed(chi: i64, mut lo: i64, mut vals: Vec<i64>) -> Perm {
        let start = vals
            .iter()
            .enumerate()
            .position(|(i, &v)| v != lo + i as i64 - chi)
            .unwrap_or(vals.len());
        vals.drain(..start);
        lo += start as i64;
        while let Some(&last) = vals.last() {
            if last == lo + vals.len() as i64 - 1 - chi {
                vals.pop();
            } else {
                break;
            }
        }
        if vals.is_empty() {
            lo = 0;
        }
        Perm {
            repr: Repr::Finitary { chi, lo, vals },
        }
    }

    /// Builds a period-0 permutation from its values on `range`, assuming
    /// `n -> n - chi` elsewhere.
    pub(crate) fn finitary_from_fn(
        chi: i64,
        range: (i64, i64),
        f: impl Fn(i64) -> i64,
    ) -> Result<Perm> {
        let (lo, hi) = range;
        let vals = (lo..hi).map(f).collect();
        Self::make_finitary(chi, lo, vals)
    }

    pub fn identity(k: i64) -> Result<Perm> {
        Self::iota(0, k)
    }

    /// The shift `m -> m - n` in period `k`.
    pub fn iota(n: i64, k: i64) -> Result<Perm> {
        check_period(k)?;
        if k == 0 {
            Ok(Perm {
                repr: Repr::Finitary {
                    chi: n,
                    lo: 0,
                    vals: Vec::new(),
                },
            })
        } else {
            Self::make_affine(k, (0..k).map(|i| i - n).collect())
        }
    }

    /// Exchanges `n` and `n + 1` for every `n = m (mod k)`; for `k = 0` only
    /// the single pair `m, m + 1`.
    pub fn sigma(m: i64, k: i64) -> Result<Perm> {
        check_period(k)?;
        if k == 0 {
            return Ok(Perm {
                repr: Repr::Finitary {
                    chi: 0,
                    lo: m,
                    vals: vec![m + 1, m],
                },
            });
        }
        let r = m.rem_euclid(k);
        let window = (0..k)
            .map(|i| {
                if i == r {
                    i + 1
                } else if (i - 1).rem_euclid(k) == r {
                    i - 1
                } else {
                    i
                }
            })
            .collect();
        Self::make_affine(k, window)
    }

    /// The period `k` (0 for the finitary family).
    pub fn period(&self) -> i64 {
        match &self.repr {
            Repr::Finitary { .. } => 0,
            Repr::Affine { k, .. } => *k,
        }
    }

    /// `(chi, lo, vals)` of a period-0 permutation.
    pub fn finitary_parts(&self) -> Option<(i64, i64, &[i64])> {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => Some((*chi, *lo, vals)),
            Repr::Affine { .. } => None,
        }
    }

    /// Values on `0..k` of an affine permutation.
    pub fn affine_window(&self) -> Option<&[i64]> {
        match &self.repr {
            Repr::Affine { window, .. } => Some(window),
            Repr::Finitary { .. } => None,
        }
    }

    pub fn apply(&self, n: i64) -> i64 {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => {
                let i = n - lo;
                if i >= 0 && i < vals.len() as i64 {
                    vals[i as usize]
                } else {
                    n - chi
                }
            }
            Repr::Affine { k, window } => window[n.rem_euclid(*k) as usize] + n.div_euclid(*k) * k,
        }
    }

    pub fn apply_inverse(&self, m: i64) -> i64 {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => match vals.iter().position(|&v| v == m) {
                Some(i) => lo + i as i64,
                None => m + chi,
            },
            Repr::Affine { k, window } => {
                let r = m.rem_euclid(*k);
                let i = window
                    .iter()
                    .position(|&w| w.rem_euclid(*k) == r)
                    .expect("affine window covers every residue");
                i as i64 + (m - window[i])
            }
        }
    }

    pub fn inverse(&self) -> Perm {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => {
                if vals.is_empty() {
                    return Perm {
                        repr: Repr::Finitary {
                            chi: -chi,
                            lo: 0,
                            vals: Vec::new(),
                        },
                    };
                }
                let new_lo = lo - chi;
                let mut inv = vec![0; vals.len()];
                for (i, &v) in vals.iter().enumerate() {
                    inv[(v - new_lo) as usize] = lo + i as i64;
                }
                Self::trimmed(-chi, new_lo, inv)
            }
            Repr::Affine { k, .. } => Perm {
                repr: Repr::Affine {
                    k: *k,
                    window: (0..*k).map(|j| self.apply_inverse(j)).collect(),
                },
            },
        }
    }

    /// `(self * other)(n) = self(other(n))`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        let k = self.same_period(other)?;
        if k != 0 {
            return Ok(Perm {
                repr: Repr::Affine {
                    k,
                    window: (0..k).map(|i| self.apply(other.apply(i))).collect(),
                },
            });
        }
        let chi_b = other.shift();
        let range = hull(&[
            other.support(),
            self.support().map(|(l, h)| (l + chi_b, h + chi_b)),
        ]);
        Self::finitary_from_fn(self.shift() + chi_b, range, |n| self.apply(other.apply(n)))
    }

    pub(crate) fn same_period(&self, other: &Perm) -> Result<i64> {
        let (a, b) = (self.period(), other.period());
        if a == b {
            Ok(a)
        } else {
            Err(Error::PeriodMismatch(a, b))
        }
    }

    /// Half-open range of positions where a period-0 permutation differs from
    /// its shift; `None` for shifts and for affine permutations.
    pub fn support(&self) -> Option<(i64, i64)> {
        match &self.repr {
            Repr::Finitary { lo, vals, .. } if !vals.is_empty() => {
                Some((*lo, lo + vals.len() as i64))
            }
            _ => None,
        }
    }

    /// Closed range of positions that contains every "interesting" position:
    /// the support together with `0` (period 0) or `0..k` (period `k`).
    pub fn span(&self) -> (i64, i64) {
        match &self.repr {
            Repr::Finitary { .. } => match self.support() {
                Some((lo, hi)) => (lo.min(0), (hi - 1).max(0)),
                None => (0, 0),
            },
            Repr::Affine { k, .. } => (0, k - 1),
        }
    }

    /// `max |p(n) - n|` over all `n`.
    pub fn displacement(&self) -> i64 {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => vals
                .iter()
                .enumerate()
                .map(|(i, &v)| (v - lo - i as i64).abs())
                .fold(chi.abs(), i64::max),
            Repr::Affine { window, .. } => window
                .iter()
                .enumerate()
                .map(|(i, &w)| (w - i as i64).abs())
                .max()
                .unwrap_or(0),
        }
    }

    /// Margin `M >= 1` with `s(a, b) = 0` for `a - b <= -M` and
    /// `s(a, b) = shift + a - b` for `a - b >= M`.
    pub fn margin(&self) -> i64 {
        self.displacement().max(1)
    }

    /// Shift from the representation: `chi`, or `-sum(w[i] - i) / k`.
    fn repr_shift(&self) -> i64 {
        match &self.repr {
            Repr::Finitary { chi, .. } => *chi,
            Repr::Affine { k, window } => {
                let total: i64 = window.iter().enumerate().map(|(i, &w)| w - i as i64).sum();
                -total / k
            }
        }
    }

    /// `#{n >= 0 : p(n) < 0} - #{n < 0 : p(n) >= 0}`, by direct count.
    ///
    /// Every contributing `n` satisfies `|n| <= displacement`.
    pub fn counted_shift(&self) -> i64 {
        let d = self.displacement();
        let (lo, hi) = self.span();
        let (from, to) = (lo.min(-d) - 1, hi.max(d) + 1);
        let mut count = 0;
        for n in from..=to {
            let v = self.apply(n);
            if n >= 0 && v < 0 {
                count += 1;
            } else if n < 0 && v >= 0 {
                count -= 1;
            }
        }
        count
    }

    pub fn shift(&self) -> i64 {
        let s = self.repr_shift();
        debug_assert_eq!(s, self.counted_shift(), "shift disagreement for {self:?}");
        s
    }

    /// Slipface function `s(a, b) = #{n >= b : p(n) < a}`.
    pub fn slipface(&self, a: i64, b: i64) -> u64 {
        match &self.repr {
            Repr::Finitary { chi, lo, vals } => {
                let hi = lo + vals.len() as i64;
                let inside = vals
                    .iter()
                    .enumerate()
                    .filter(|&(i, &v)| lo + i as i64 >= b && v < a)
                    .count() as i64;
                // positions n outside the window with b <= n < a + chi
                let (from, to) = (b, a + chi);
                let total = (to - from).max(0);
                let overlap = (to.min(hi) - from.max(*lo)).max(0);
                (inside + total - overlap) as u64
            }
            Repr::Affine { k, window } => window
                .iter()
                .enumerate()
                .map(|(r, &w)| {
                    let r = r as i64;
                    // n = r + q k >= b and w + q k < a
                    let q_min = div_ceil(b - r, *k);
                    let q_max = (a - 1 - w).div_euclid(*k);
                    (q_max - q_min + 1).max(0)
                })
                .sum::<i64>() as u64,
        }
    }

    fn class_of(&self, m: i64, n: i64) -> InversionClass {
        match self.period() {
            0 => InversionClass { m, n },
            k => {
                let t = n.div_euclid(k) * k;
                InversionClass { m: m - t, n: n - t }
            }
        }
    }

    /// One representative per class of inversions `(m, n)`, `m < n`,
    /// `p(m) > p(n)`.
    pub fn inversion_classes(&self) -> BTreeSet<InversionClass> {
        let mut out = BTreeSet::new();
        match &self.repr {
            Repr::Finitary { lo, vals, .. } => {
                // both endpoints of an inversion lie in the window
                for i in 0..vals.len() {
                    for j in i + 1..vals.len() {
                        if vals[i] > vals[j] {
                            out.insert(InversionClass {
                                m: lo + i as i64,
                                n: lo + j as i64,
                            });
                        }
                    }
                }
            }
            Repr::Affine { k, .. } => {
                // p(m) > p(n) with m < n forces n - m < 2 * displacement
                let reach = 2 * self.displacement() + 1;
                for n in 0..*k {
                    let pn = self.apply(n);
                    for m in n - reach..n {
                        if self.apply(m) > pn {
                            out.insert(InversionClass { m, n });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn inv_count(&self) -> usize {
        match &self.repr {
            Repr::Finitary { vals, .. } => {
                let mut c = 0;
                for i in 0..vals.len() {
                    for j in i + 1..vals.len() {
                        if vals[i] > vals[j] {
                            c += 1;
                        }
                    }
                }
                c
            }
            Repr::Affine { .. } => self.inversion_classes().len(),
        }
    }

    /// Canonical class of an arbitrary ordered pair, without checking that it
    /// is an inversion.
    pub(crate) fn canonical_pair(&self, m: i64, n: i64) -> InversionClass {
        self.class_of(m, n)
    }

    /// Positions `m` (one per class mod `k`) with `p(m) > p(m + 1)`.
    pub fn descents_right(&self) -> BTreeSet<i64> {
        let range = match &self.repr {
            Repr::Finitary { .. } => match self.support() {
                Some((lo, hi)) => lo..hi - 1,
                None => 0..0,
            },
            Repr::Affine { k, .. } => 0..*k,
        };
        range
            .filter(|&m| self.apply(m) > self.apply(m + 1))
            .collect()
    }

    /// Values `m` (one per class mod `k`) with `p^-1(m) > p^-1(m + 1)`.
    pub fn descents_left(&self) -> BTreeSet<i64> {
        self.inverse().descents_right()
    }

    /// Pairs `(a, b)` with `p^-1(a-1) >= b > p^-1(a)` and `p(b-1) >= a > p(b)`;
    /// for period `k` one representative per translation class, `b` in `0..k`.
    pub fn essential_set(&self) -> BTreeSet<(i64, i64)> {
        let mut out = BTreeSet::new();
        let candidates: Vec<i64> = match &self.repr {
            Repr::Finitary { .. } => self.descents_right().into_iter().map(|m| m + 1).collect(),
            Repr::Affine { k, .. } => (0..*k)
                .filter(|&b| self.apply(b - 1) > self.apply(b))
                .collect(),
        };
        for b in candidates {
            let (low, high) = (self.apply(b), self.apply(b - 1));
            for a in low + 1..=high {
                if self.apply_inverse(a - 1) >= b && b > self.apply_inverse(a) {
                    out.insert((a, b));
                }
            }
        }
        out
    }

    /// Bruhat order: `s_self <= s_other` pointwise, decided on the essential
    /// set of `self`.
    pub fn bruhat_leq(&self, other: &Perm) -> Result<bool> {
        self.same_period(other)?;
        let (a, b) = (self.shift(), other.shift());
        if a != b {
            return Err(Error::ShiftMismatch(a, b));
        }
        Ok(self
            .essential_set()
            .into_iter()
            .all(|(x, y)| self.slipface(x, y) <= other.slipface(x, y)))
    }

    pub fn is_identity(&self) -> bool {
        self.is_iota() && self.shift() == 0
    }

    /// True for the shifts `iota(n, k)`.
    pub fn is_iota(&self) -> bool {
        match &self.repr {
            Repr::Finitary { vals, .. } => vals.is_empty(),
            Repr::Affine { window, .. } => window.windows(2).all(|w| w[1] == w[0] + 1),
        }
    }

    /// `Some(m)` (with `m` in `0..k` when `k >= 2`) if this is `sigma(m, k)`.
    pub fn sigma_index(&self) -> Option<i64> {
        if self.shift() != 0 {
            return None;
        }
        let desc = self.descents_right();
        if desc.len() != 1 {
            return None;
        }
        let m = *desc.iter().next()?;
        match Perm::sigma(m, self.period()) {
            Ok(s) if &s == self => Some(m),
            _ => None,
        }
    }

    /// The same map regarded as an element of period `k`; `k` must be a
    /// multiple of the current period (period-0 maps cannot be re-periodized
    /// unless they are shifts).
    pub fn with_period(&self, k: i64) -> Result<Perm> {
        check_period(k)?;
        let own = self.period();
        if own == k {
            return Ok(self.clone());
        }
        if own == 0 {
            if self.is_iota() {
                return Perm::iota(self.shift(), k);
            }
            return Err(Error::PeriodMismatch(own, k));
        }
        if k == 0 || k % own != 0 {
            return Err(Error::PeriodMismatch(own, k));
        }
        Perm::make_affine(k, (0..k).map(|i| self.apply(i)).collect())
    }
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Smallest half-open range containing all of the given ranges, or `(0, 0)`.
pub(crate) fn hull(ranges: &[Option<(i64, i64)>]) -> (i64, i64) {
    let mut it = ranges.iter().flatten();
    match it.next() {
        None => (0, 0),
        Some(&(l, h)) => it.fold((l, h), |(l0, h0), &(l1, h1)| (l0.min(l1), h0.max(h1))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bitangent() -> Perm {
        Perm::make_finitary(1, -1, vec![1, -1, 0, -2]).unwrap()
    }

    #[test]
    fn sigma_two_swaps_even_pairs() {
        let s = Perm::sigma(0, 2).unwrap();
        assert_eq!(s, Perm::make_affine(2, vec![1, 0]).unwrap());
        assert_eq!(s.apply(4), 5);
        assert_eq!(s.apply(5), 4);
        assert_eq!(Perm::sigma(-1, 2).unwrap(), Perm::sigma(1, 2).unwrap());
    }

    #[test]
    fn affine_shift_from_window() {
        let p = Perm::make_affine(3, vec![0, 1, 5]).unwrap();
        assert_eq!(p.shift(), -1);
        assert_eq!(p.counted_shift(), -1);
        let g = Perm::make_affine(2, vec![0, 3]).unwrap();
        assert_eq!(g.shift(), -1);
    }

    #[test]
    fn duplicate_residue_rejected() {
        assert!(matches!(
            Perm::make_affine(3, vec![0, 3, 1]),
            Err(Error::DuplicateResidue(0, 3, 3))
        ));
        assert!(matches!(
            Perm::make_affine(2, vec![0]),
            Err(Error::WrongWindowLength { .. })
        ));
    }

    #[test]
    fn finitary_construction_and_trimming() {
        assert!(Perm::make_finitary(0, 5, vec![5, 6]).unwrap().is_identity());
        assert_eq!(
            Perm::make_finitary(0, 0, vec![]).unwrap(),
            Perm::identity(0).unwrap()
        );
        assert!(matches!(
            Perm::make_finitary(1, 0, vec![0, 1]),
            Err(Error::NotAWindowPermutation { lo: -1, hi: 0 })
        ));
        let t = bitangent();
        assert_eq!(t.apply(-1), 1);
        assert_eq!(t.apply(2), -2);
        assert_eq!(t.apply(7), 6);
        assert_eq!(t.apply(-5), -6);
    }

    #[test]
    fn bad_period() {
        assert_eq!(Perm::iota(0, 1), Err(Error::BadPeriod(1)));
        assert_eq!(Perm::sigma(0, -2), Err(Error::BadPeriod(-2)));
    }

    #[test]
    fn iota_evaluation_and_shift() {
        let i = Perm::iota(3, 0).unwrap();
        assert_eq!(i.apply(7), 4);
        assert_eq!(i.shift(), 3);
        for k in [0, 2, 3, 5] {
            for n in -4..=4 {
                assert_eq!(Perm::iota(n, k).unwrap().shift(), n);
                assert_eq!(Perm::sigma(n, k).unwrap().shift(), 0);
            }
        }
    }

    #[test]
    fn compose_hand_example() {
        let p = Perm::sigma(0, 0)
            .unwrap()
            .compose(&Perm::sigma(1, 0).unwrap())
            .unwrap();
        assert_eq!(p, Perm::make_finitary(0, 0, vec![1, 2, 0]).unwrap());
        for n in -1..=3 {
            let expect = match n {
                0 => 1,
                1 => 2,
                2 => 0,
                _ => n,
            };
            assert_eq!(p.apply(n), expect);
        }
        let id = Perm::iota(2, 0)
            .unwrap()
            .compose(&Perm::iota(-2, 0).unwrap())
            .unwrap();
        assert!(id.is_identity());
        assert_eq!(
            Perm::sigma(0, 0)
                .unwrap()
                .compose(&Perm::sigma(0, 2).unwrap()),
            Err(Error::PeriodMismatch(0, 2))
        );
    }

    #[test]
    fn bitangent_slipfaces() {
        let t = bitangent();
        assert_eq!(t.shift(), 1);
        assert_eq!(t.slipface(1, 0), 3);
        assert_eq!(t.slipface(-1, 2), 1);
        let ti = t.inverse();
        assert_eq!(ti.slipface(2, -1), 3);
        assert_eq!(ti.slipface(0, 1), 1);
        assert_eq!(t.inv_count(), 5);
        assert_eq!(t.descents_right(), BTreeSet::from([-1, 1]));
    }

    #[test]
    fn iota_three_slipfaces() {
        let i = Perm::iota(3, 0).unwrap();
        assert_eq!(i.slipface(1, 0), 4);
        assert_eq!(i.slipface(-2, 3), 0);
    }

    #[test]
    fn slipface_matches_brute_count() {
        let ps = [
            bitangent(),
            Perm::make_affine(3, vec![0, 1, 5]).unwrap(),
            Perm::make_affine(2, vec![-3, 4]).unwrap(),
        ];
        for p in &ps {
            for a in -8..=8 {
                for b in -8..=8 {
                    let brute = (b..b + 60).filter(|&n| p.apply(n) < a).count() as u64;
                    assert_eq!(p.slipface(a, b), brute, "{p:?} at ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn inversion_counts() {
        assert_eq!(Perm::identity(0).unwrap().inv_count(), 0);
        assert_eq!(Perm::make_affine(2, vec![0, 3]).unwrap().inv_count(), 1);
        let classes = Perm::make_affine(2, vec![0, 3])
            .unwrap()
            .inversion_classes();
        assert_eq!(classes, BTreeSet::from([InversionClass { m: -1, n: 0 }]));
    }

    #[test]
    fn essential_sets() {
        assert!(Perm::identity(0).unwrap().essential_set().is_empty());
        assert_eq!(
            Perm::sigma(0, 0).unwrap().essential_set(),
            BTreeSet::from([(1, 1)])
        );
        let gamma = Perm::make_finitary(-1, -2, vec![1, 2, -1, 0]).unwrap();
        assert_eq!(gamma.essential_set(), BTreeSet::from([(1, 0)]));
    }

    #[test]
    fn bruhat_examples() {
        let id = Perm::identity(0).unwrap();
        let s0 = Perm::sigma(0, 0).unwrap();
        let s1 = Perm::sigma(1, 0).unwrap();
        assert!(id.bruhat_leq(&s0).unwrap());
        assert!(!s0.bruhat_leq(&s1).unwrap());
        assert_eq!(s0.slipface(1, 1), 1);
        assert_eq!(s1.slipface(1, 1), 0);
        assert_eq!(
            id.bruhat_leq(&Perm::iota(1, 0).unwrap()),
            Err(Error::ShiftMismatch(0, 1))
        );
    }

    #[test]
    fn descents() {
        assert!(Perm::identity(0).unwrap().descents_right().is_empty());
        assert_eq!(
            Perm::sigma(3, 0).unwrap().descents_right(),
            BTreeSet::from([3])
        );
        assert_eq!(
            Perm::sigma(4, 3).unwrap().descents_right(),
            BTreeSet::from([1])
        );
    }

    #[test]
    fn sigma_index_detection() {
        assert_eq!(Perm::sigma(5, 3).unwrap().sigma_index(), Some(2));
        assert_eq!(Perm::sigma(-4, 0).unwrap().sigma_index(), Some(-4));
        assert_eq!(bitangent().sigma_index(), None);
    }

    #[test]
    fn reperiodize() {
        let s = Perm::sigma(0, 2).unwrap();
        let s4 = s.with_period(4).unwrap();
        assert_eq!(s4.affine_window(), Some(&[1, 0, 3, 2][..]));
        assert_eq!(s4.inv_count(), 2);
        assert!(s.with_period(3).is_err());
        assert_eq!(
            Perm::iota(2, 0).unwrap().with_period(3).unwrap(),
            Perm::iota(2, 3).unwrap()
        );
    }
}
