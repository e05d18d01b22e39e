//! Line bundles on genus-1 curves with two marked points `p`, `q` whose
//! difference has torsion order `k`, and twice-marked chains of such curves.
//!
//! The Picard group of each component is collapsed to `k + 1` classes:
//! `Generic`, or `Torsion(m)` for `L = O(mq + (d - m)p)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::demazure::{affine_windows, demazure_fold, permutations};
use crate::error::{Error, Result};
use crate::format::Parser;
use crate::perm::{check_period, Perm};
use crate::words::reduced_tuples;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    Generic,
    Torsion(i64),
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Class::Generic => write!(f, "G"),
            Class::Torsion(m) => write!(f, "T {m}"),
        }
    }
}

/// Degree-`d` bundle on a genus-1 component with torsion order `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct G1Bundle {
    pub k: i64,
    pub d: i64,
    pub cls: Class,
}

impl G1Bundle {
    /// Torsion residues are reduced mod `k` when `k >= 2`.
    pub fn new(k: i64, d: i64, cls: Class) -> Result<G1Bundle> {
        check_period(k)?;
        let cls = match cls {
            Class::Torsion(m) if k >= 2 => Class::Torsion(m.rem_euclid(k)),
            c => c,
        };
        Ok(G1Bundle { k, d, cls })
    }
}

/// All classes of a component with torsion order `k >= 2`.
pub fn classes(k: i64) -> Vec<Class> {
    std::iter::once(Class::Generic)
        .chain((0..k).map(Class::Torsion))
        .collect()
}

/// `iota_{d-1} sigma_{m-1}` for `Torsion(m)`, `iota_{d-1}` for `Generic`.
pub fn genus1_tau(b: &G1Bundle) -> Result<Perm> {
    let base = Perm::iota(b.d - 1, b.k)?;
    match b.cls {
        Class::Generic => Ok(base),
        Class::Torsion(m) => base.compose(&Perm::sigma(m - 1, b.k)?),
    }
}

/// A chain `E_1 - E_2 - ... - E_l` marked at `p` on `E_1` and `q` on `E_l`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ChainSpec {
    pub k: i64,
    pub components: Vec<G1Bundle>,
}

impl ChainSpec {
    pub fn new(k: i64, components: Vec<G1Bundle>) -> Result<ChainSpec> {
        check_period(k)?;
        if components.is_empty() {
            return Err(Error::EmptySequence);
        }
        if let Some(c) = components.iter().find(|c| c.k != k) {
            return Err(Error::PeriodMismatch(k, c.k));
        }
        Ok(ChainSpec { k, components })
    }

    /// Builds the chain from degrees and classes of equal length.
    pub fn from_parts(k: i64, degrees: &[i64], cls: &[Class]) -> Result<ChainSpec> {
        if degrees.len() != cls.len() {
            return Err(Error::BadParameters(
                "degree and class counts differ".into(),
            ));
        }
        let components = degrees
            .iter()
            .zip(cls)
            .map(|(&d, &c)| G1Bundle::new(k, d, c))
            .collect::<Result<_>>()?;
        ChainSpec::new(k, components)
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.components.iter().map(|c| c.d).collect()
    }

    /// Number of `Generic` components, the dimension of the stratum.
    pub fn dimension(&self) -> usize {
        self.components
            .iter()
            .filter(|c| c.cls == Class::Generic)
            .count()
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "chain k={} [", self.k)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "d={}:{}", c.d, c.cls)?;
        }
        write!(f, "]")
    }
}

impl FromStr for ChainSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<ChainSpec> {
        let mut p = Parser::new(s)?;
        p.keyword("chain")?;
        let k = p.field("k")?;
        let parts = p.list(|p| {
            let d = p.field("d")?;
            p.sym(':')?;
            let cls = match p.ident()?.as_str() {
                "G" => Class::Generic,
                "T" => Class::Torsion(p.int()?),
                other => {
                    return Err(Error::Parse(format!(
                        "expected `G` or `T`, found `{other}`"
                    )))
                }
            };
            Ok((d, cls))
        })?;
        p.finish()?;
        let (degrees, cls): (Vec<i64>, Vec<Class>) = parts.into_iter().unzip();
        ChainSpec::from_parts(k, &degrees, &cls)
    }
}

/// Demazure product of the component permutations.
pub fn chain_tau(c: &ChainSpec) -> Result<Perm> {
    let taus = c
        .components
        .iter()
        .map(genus1_tau)
        .collect::<Result<Vec<_>>>()?;
    demazure_fold(&taus)
}

fn check_target(k: i64, degrees: &[i64], tau: &Perm) -> Result<()> {
    check_period(k)?;
    if degrees.is_empty() {
        return Err(Error::EmptySequence);
    }
    if tau.period() != k {
        return Err(Error::PeriodMismatch(tau.period(), k));
    }
    let expected: i64 = degrees.iter().map(|d| d - 1).sum();
    if tau.shift() != expected {
        return Err(Error::ShiftMismatch(tau.shift(), expected));
    }
    Ok(())
}

/// Every class assignment on a chain with the given degrees, paired with its
/// transmission permutation. Requires `k >= 2`.
pub fn chain_assignments(k: i64, degrees: &[i64]) -> Result<Vec<(ChainSpec, Perm)>> {
    if k < 2 {
        return Err(Error::BadPeriod(k));
    }
    if degrees.is_empty() {
        return Err(Error::EmptySequence);
    }
    let all = classes(k);
    let mut out = Vec::new();
    let mut idx = vec![0usize; degrees.len()];
    loop {
        let cls: Vec<Class> = idx.iter().map(|&i| all[i]).collect();
        let chain = ChainSpec::from_parts(k, degrees, &cls)?;
        let tau = chain_tau(&chain)?;
        out.push((chain, tau));
        // odometer
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(out);
            }
            idx[pos] += 1;
            if idx[pos] < all.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Points of the transmission locus `W^tau`: assignments whose chain
/// permutation lies above `tau` in Bruhat order.
pub fn wtau_points_bruteforce(k: i64, degrees: &[i64], tau: &Perm) -> Result<BTreeSet<ChainSpec>> {
    if k < 2 {
        return Err(Error::BadPeriod(k));
    }
    check_target(k, degrees, tau)?;
    filter_points(&chain_assignments(k, degrees)?, tau)
}

/// [`wtau_points_bruteforce`] over precomputed [`chain_assignments`].
pub fn filter_points(assignments: &[(ChainSpec, Perm)], tau: &Perm) -> Result<BTreeSet<ChainSpec>> {
    let mut out = BTreeSet::new();
    for (chain, ct) in assignments {
        if tau.bruhat_leq(ct)? {
            out.insert(chain.clone());
        }
    }
    Ok(out)
}

/// Strata of `W^tau`, one per reduced tuple of `tau` with factors of length
/// at most 1. A `Generic` component in a stratum label ranges over every
/// class. Works for every period, including 0.
pub fn wtau_strata(k: i64, degrees: &[i64], tau: &Perm) -> Result<BTreeSet<ChainSpec>> {
    check_target(k, degrees, tau)?;
    let shifts: Vec<i64> = degrees.iter().map(|d| d - 1).collect();
    let mut out = BTreeSet::new();
    for tuple in reduced_tuples(tau, &shifts, Some(1))? {
        let mut cls = Vec::with_capacity(degrees.len());
        for (factor, &c) in tuple.factors.iter().zip(&shifts) {
            // factor = iota_c sigma_{m-1} or iota_c
            let rest = Perm::iota(-c, k)?.compose(factor)?;
            if rest.is_identity() {
                cls.push(Class::Generic);
            } else {
                let j = rest
                    .sigma_index()
                    .expect("factors of length one are iota times a generator");
                cls.push(Class::Torsion(j + 1));
            }
        }
        out.insert(ChainSpec::from_parts(k, degrees, &cls)?);
    }
    Ok(out)
}

/// All chains obtained from a stratum label by replacing each `Generic`
/// component with every class. Requires `k >= 2`.
pub fn expand_stratum(label: &ChainSpec) -> Result<Vec<ChainSpec>> {
    if label.k < 2 {
        return Err(Error::BadPeriod(label.k));
    }
    let mut out = vec![Vec::new()];
    for c in &label.components {
        let options = match c.cls {
            Class::Generic => classes(label.k),
            t => vec![t],
        };
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Class>| {
                options.iter().map(move |&o| {
                    let mut v = prefix.clone();
                    v.push(o);
                    v
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|cls| ChainSpec::from_parts(label.k, &label.degrees(), &cls))
        .collect()
}

/// Union of the expanded strata from [`wtau_strata`]. Requires `k >= 2`.
pub fn wtau_points_via_words(k: i64, degrees: &[i64], tau: &Perm) -> Result<BTreeSet<ChainSpec>> {
    if k < 2 {
        return Err(Error::BadPeriod(k));
    }
    let mut out = BTreeSet::new();
    for label in wtau_strata(k, degrees, tau)? {
        out.extend(expand_stratum(&label)?);
    }
    Ok(out)
}

/// Shape of `W^alpha` on a single component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocusShape {
    /// Every class.
    Full,
    /// Exactly one torsion class.
    Point,
    Empty,
    Other,
}

impl LocusShape {
    fn expected(inv: usize) -> LocusShape {
        match inv {
            0 => LocusShape::Full,
            1 => LocusShape::Point,
            _ => LocusShape::Empty,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralityFailure {
    pub perm: Perm,
    pub inv: usize,
    pub expected: LocusShape,
    pub found: LocusShape,
    pub points: Vec<Class>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvRow {
    pub perms: usize,
    pub full: usize,
    pub point: usize,
    pub empty: usize,
    pub other: usize,
}

/// Single-component loci for every `alpha` of period `group_k` with small
/// displacement, on a curve of torsion order `curve_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneralityReport {
    pub curve_k: i64,
    pub group_k: i64,
    pub bound: i64,
    pub checked: usize,
    pub by_inv: BTreeMap<usize, InvRow>,
    pub failures: Vec<GeneralityFailure>,
    pub pass: bool,
}

/// [`generality_report`] with matching curve and group periods.
pub fn genus1_generality_report(k: i64, bound: i64) -> Result<GeneralityReport> {
    generality_report(k, k, bound)
}

/// Checks that `W^alpha` is everything when `inv(alpha) = 0`, one torsion
/// point when `inv(alpha) = 1`, and empty otherwise, for every `alpha` with
/// displacement at most `bound` (support in `[-bound, bound)` for period 0)
/// and degree `shift + 1` in `[-bound, bound]`.
///
/// `curve_k` must divide `group_k` (or both be 0). When `curve_k < group_k`
/// the pattern is expected to fail: `sigma_0` of period `curve_k` has length
/// `group_k / curve_k` in period `group_k` yet a nonempty locus.
pub fn generality_report(curve_k: i64, group_k: i64, bound: i64) -> Result<GeneralityReport> {
    check_period(curve_k)?;
    check_period(group_k)?;
    if bound < 1 {
        return Err(Error::BadParameters(format!(
            "bound must be positive, got {bound}"
        )));
    }
    let compatible = if curve_k == 0 {
        group_k == 0
    } else {
        group_k % curve_k == 0
    };
    if !compatible {
        return Err(Error::PeriodMismatch(curve_k, group_k));
    }
    let mut report = GeneralityReport {
        curve_k,
        group_k,
        bound,
        checked: 0,
        by_inv: BTreeMap::new(),
        failures: Vec::new(),
        pass: true,
    };
    for alpha in generality_candidates(group_k, bound)? {
        let d = alpha.shift() + 1;
        let cls_range: Vec<Class> = if curve_k >= 2 {
            classes(curve_k)
        } else {
            // a torsion point above alpha has sigma_{m-1} inside alpha's span
            let (lo, hi) = alpha.span();
            std::iter::once(Class::Generic)
                .chain((lo - 1..=hi + 2).map(Class::Torsion))
                .collect()
        };
        let mut points = Vec::new();
        for &cls in &cls_range {
            let tau = genus1_tau(&G1Bundle::new(curve_k, d, cls)?)?.with_period(group_k)?;
            if alpha.bruhat_leq(&tau)? {
                points.push(cls);
            }
        }
        let found = if points.len() == cls_range.len() {
            LocusShape::Full
        } else if points.is_empty() {
            LocusShape::Empty
        } else if let [Class::Torsion(_)] = points[..] {
            LocusShape::Point
        } else {
            LocusShape::Other
        };
        let inv = alpha.inv_count();
        let row = report.by_inv.entry(inv).or_default();
        row.perms += 1;
        match found {
            LocusShape::Full => row.full += 1,
            LocusShape::Point => row.point += 1,
            LocusShape::Empty => row.empty += 1,
            LocusShape::Other => row.other += 1,
        }
        let expected = LocusShape::expected(inv);
        if found != expected {
            report.failures.push(GeneralityFailure {
                perm: alpha,
                inv,
                expected,
                found,
                points,
            });
        }
        report.checked += 1;
    }
    report.pass = report.failures.is_empty();
    Ok(report)
}

fn generality_candidates(k: i64, bound: i64) -> Result<Vec<Perm>> {
    let mut out = Vec::new();
    if k == 0 {
        let window: Vec<i64> = (-bound..bound).collect();
        for arrangement in permutations(&window) {
            for d in -bound..=bound {
                let vals = arrangement.iter().map(|v| v - (d - 1)).collect();
                out.push(Perm::make_finitary(d - 1, -bound, vals)?);
            }
        }
        return Ok(out);
    }
    let mut window = Vec::new();
    let mut used = vec![false; k as usize];
    affine_windows(k, bound, &mut window, &mut used, &mut |w| {
        let p = Perm::make_affine(k, w.to_vec()).expect("distinct residues");
        if (p.shift() + 1).abs() <= bound {
            out.push(p);
        }
    });
    Ok(out)
}

impl fmt::Display for GeneralityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "curve k={} group k={} bound={} checked={} result={}",
            self.curve_k,
            self.group_k,
            self.bound,
            self.checked,
            if self.pass { "pass" } else { "FAIL" }
        )?;
        writeln!(
            f,
            "{:>5} {:>7} {:>7} {:>7} {:>7} {:>7}",
            "inv", "perms", "full", "point", "empty", "other"
        )?;
        for (inv, r) in &self.by_inv {
            writeln!(
                f,
                "{:>5} {:>7} {:>7} {:>7} {:>7} {:>7}",
                inv, r.perms, r.full, r.point, r.empty, r.other
            )?;
        }
        for fail in &self.failures {
            let pts: Vec<String> = fail.points.iter().map(Class::to_string).collect();
            writeln!(
                f,
                "failure: {} inv={} expected={:?} found={:?} points=[{}]",
                fail.perm,
                fail.inv,
                fail.expected,
                fail.found,
                pts.join(", ")
            )?;
        }
        Ok(())
    }
}
