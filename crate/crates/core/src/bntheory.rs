//! Permutations attached to Brill-Noether loci and to splitting types of
//! degree-`k` covers.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::{write_list, Parser};
use crate::perm::Perm;

/// A nondecreasing `k`-tuple `e_1 <= ... <= e_k`, `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SplittingType {
    entries: Vec<i64>,
}

impl SplittingType {
    pub fn new(entries: Vec<i64>) -> Result<SplittingType> {
        if entries.len() < 2 {
            return Err(Error::BadParameters(format!(
                "splitting type needs k >= 2 entries, got {}",
                entries.len()
            )));
        }
        if entries.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::BadParameters(
                "splitting type must be nondecreasing".into(),
            ));
        }
        Ok(SplittingType { entries })
    }

    pub fn k(&self) -> i64 {
        self.entries.len() as i64
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "split k={} e=", self.k())?;
        write_list(f, &self.entries)
    }
}

impl FromStr for SplittingType {
    type Err = Error;

    fn from_str(s: &str) -> Result<SplittingType> {
        let mut p = Parser::new(s)?;
        p.keyword("split")?;
        let k = p.field("k")?;
        p.keyword("e")?;
        p.sym('=')?;
        let e = p.list(Parser::int)?;
        p.finish()?;
        if e.len() as i64 != k {
            return Err(Error::Parse(format!("k={k} but {} entries given", e.len())));
        }
        SplittingType::new(e)
    }
}

/// Expected codimension `u(e) = sum over m, n of max(0, e_m - e_n - 1)`.
pub fn splitting_u(e: &SplittingType) -> usize {
    let es = e.entries();
    es.iter()
        .flat_map(|&a| es.iter().map(move |&b| (a - b - 1).max(0)))
        .sum::<i64>() as usize
}

/// `x_e(m) = sum over n of max(e_n + 1 + m, 0)`.
pub fn splitting_x(e: &SplittingType, m: i64) -> u64 {
    e.entries().iter().map(|&x| (x + 1 + m).max(0)).sum::<i64>() as u64
}

/// `d(e) = g - 1 + sum over n of (e_n + 1)`.
pub fn splitting_d(e: &SplittingType, g: i64) -> i64 {
    g - 1 + e.entries().iter().map(|x| x + 1).sum::<i64>()
}

/// The period-0 permutation `gamma^r_chi`: increasing bijections
/// `(-inf, -1] -> (-inf, -r-1] u [1, r-chi]` and
/// `[0, inf) -> [-r, 0] u [r-chi+1, inf)`. Requires `r >= max(0, chi + 1)`.
pub fn gamma_rd(r: i64, chi: i64) -> Result<Perm> {
    if r < 0 || r < chi + 1 {
        return Err(Error::BadParameters(format!(
            "gamma_rd needs r >= max(0, chi + 1), got r={r}, chi={chi}"
        )));
    }
    let gap = r - chi;
    // positions -gap..=-1 go to 1..=gap, positions 0..=r go to -r..=0
    let vals = (1..=gap).chain(-r..=0).collect();
    Perm::make_finitary(chi, -gap, vals)
}

/// `p(n) = rho(n) + 1 + k pi(n)` with `rho` a permutation of `0..k` and `pi`
/// a function on residues.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ResidualPeriodic {
    pub rho: Vec<i64>,
    pub pi: Vec<i64>,
}

fn require_affine(p: &Perm) -> Result<&[i64]> {
    p.affine_window()
        .ok_or_else(|| Error::BadParameters("operation needs period k >= 2".into()))
}

pub fn rho_pi_decompose(p: &Perm) -> Result<ResidualPeriodic> {
    let w = require_affine(p)?;
    let k = p.period();
    Ok(ResidualPeriodic {
        rho: w.iter().map(|&v| (v - 1).rem_euclid(k)).collect(),
        pi: w.iter().map(|&v| (v - 1).div_euclid(k)).collect(),
    })
}

pub fn recompose(rp: &ResidualPeriodic) -> Result<Perm> {
    let k = rp.rho.len() as i64;
    if rp.pi.len() as i64 != k {
        return Err(Error::BadParameters("rho and pi lengths differ".into()));
    }
    let mut seen = vec![false; rp.rho.len()];
    for &r in &rp.rho {
        if r < 0 || r >= k || seen[r as usize] {
            return Err(Error::BadParameters(
                "rho is not a permutation of 0..k".into(),
            ));
        }
        seen[r as usize] = true;
    }
    Perm::make_affine(
        k,
        rp.rho
            .iter()
            .zip(&rp.pi)
            .map(|(r, q)| r + 1 + k * q)
            .collect(),
    )
}

/// Increasing on `0..k` with inverse increasing on `1..=k`.
pub fn is_bigrassmannian(p: &Perm) -> Result<bool> {
    let w = require_affine(p)?;
    let k = p.period();
    let forward = w.windows(2).all(|x| x[0] < x[1]);
    let backward = (1..k).all(|a| p.apply_inverse(a) < p.apply_inverse(a + 1));
    Ok(forward && backward)
}

/// The unique residual `rho` making `rho + 1 + k pi` bigrassmannian, for
/// nondecreasing `pi`: indices of the largest `pi` value first (in
/// increasing order), then the next largest, and so on.
pub fn bigrassmannian_rho(pi: &[i64]) -> Vec<i64> {
    (0..pi.len())
        .map(|n| {
            let above = pi.iter().filter(|&&x| x > pi[n]).count();
            let tied_before = pi[..n].iter().filter(|&&x| x == pi[n]).count();
            (above + tied_before) as i64
        })
        .collect()
}

/// The bigrassmannian permutation `gamma_e` with `pi(n) = -e_{k-n} - 1`.
pub fn gamma_splitting(e: &SplittingType) -> Result<Perm> {
    let es = e.entries();
    let k = es.len();
    let pi: Vec<i64> = (0..k).map(|n| -es[k - 1 - n] - 1).collect();
    let rho = bigrassmannian_rho(&pi);
    recompose(&ResidualPeriodic { rho, pi })
}

/// Sorted `(-pi(0) - 1, ..., -pi(k-1) - 1)`.
pub fn splitting_type_of(p: &Perm) -> Result<SplittingType> {
    let rp = rho_pi_decompose(p)?;
    let mut e: Vec<i64> = rp.pi.iter().map(|q| -q - 1).collect();
    e.sort_unstable();
    SplittingType::new(e)
}

/// `sum over m, n of max(0, pi(n) - pi(m) - 1)`, the number of inversion
/// classes whose two ends lie in different blocks `[qk, qk + k)` and whose
/// values lie in different blocks `[1 + qk, 1 + qk + k)`. A lower bound for
/// `inv_k(p)`, attained exactly by bigrassmannian permutations.
pub fn inv_bound_from_pi(p: &Perm) -> Result<usize> {
    let pi = rho_pi_decompose(p)?.pi;
    Ok(pi
        .iter()
        .flat_map(|&n| pi.iter().map(move |&m| (n - m - 1).max(0)))
        .sum::<i64>() as usize)
}
