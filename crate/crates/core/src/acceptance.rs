//! The acceptance suite: nine exact checks with time limits, shared by the
//! `acceptance` test target and the CLI `selftest` command.

use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::bntheory::{
    bigrassmannian_rho, gamma_rd, gamma_splitting, is_bigrassmannian, rho_pi_decompose,
    splitting_type_of, splitting_u, splitting_x,
};
use crate::corpus::{
    affine_by_length, by_length, random_perm, splitting_types, text_corpus, window_perms,
};
use crate::curves::{
    chain_assignments, filter_points, generality_report, genus1_generality_report,
    wtau_points_via_words,
};
use crate::demazure::{demazure, demazure_by_max_oracle, SlipfaceTable, DEFAULT_ORACLE_BOUND};
use crate::error::Result;
use crate::oracle::{naive_hecke_tally, slipface_iota_sigma};
use crate::perm::Perm;
use crate::words::{hecke_word_count, reduced_word_count, reduced_words};

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub checks: usize,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let limit = match self.limit {
            Some(l) => format!("{:?}", l),
            None => "none".into(),
        };
        write!(
            f,
            "[{}] {}. {}: {} checks in {:.3?} (limit {}){}",
            if self.pass { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks,
            self.elapsed,
            limit,
            if self.detail.is_empty() {
                String::new()
            } else {
                format!(" - {}", self.detail)
            }
        )
    }
}

#[derive(Default)]
struct Checks {
    count: usize,
    failed: usize,
    messages: Vec<String>,
}

impl Checks {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.count += 1;
        if !ok {
            self.failed += 1;
            if self.messages.len() < 5 {
                self.messages.push(what());
            }
        }
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, got: T, want: T, what: impl FnOnce() -> String) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", what()));
    }

    fn run(&mut self, r: Result<()>) {
        if let Err(e) = r {
            self.check(false, || format!("error: {e}"));
        }
    }
}

pub const CRITERIA: [(u8, &str, Option<u64>); 9] = [
    (1, "bitangent and iota_3 slipface values", Some(1)),
    (
        2,
        "Demazure product agrees with the Bruhat-max oracle",
        Some(10_000),
    ),
    (3, "randomized identity suite", None),
    (4, "gamma^r_chi grid", Some(1_000)),
    (5, "splitting-type grid", Some(30_000)),
    (6, "genus-1 generality reports", Some(10_000)),
    (
        7,
        "chain points: reduced tuples versus brute force",
        Some(60_000),
    ),
    (8, "reduced and Hecke word counts", Some(60_000)),
    (9, "text and JSON round trips on the corpus", Some(10_000)),
];

/// Runs criterion `id` (1 to 9).
pub fn run_criterion(id: u8) -> CriterionResult {
    let (_, name, limit_ms) = CRITERIA[(id - 1) as usize];
    let mut checks = Checks::default();
    let start = Instant::now();
    let outcome = match id {
        1 => criterion_1(&mut checks),
        2 => criterion_2(&mut checks),
        3 => criterion_3(&mut checks),
        4 => criterion_4(&mut checks),
        5 => criterion_5(&mut checks),
        6 => criterion_6(&mut checks),
        7 => criterion_7(&mut checks),
        8 => criterion_8(&mut checks),
        9 => criterion_9(&mut checks),
        _ => panic!("no criterion {id}"),
    };
    checks.run(outcome);
    let elapsed = start.elapsed();
    let limit = limit_ms.map(Duration::from_millis);
    let in_time = limit.is_none_or(|l| elapsed <= l);
    let mut detail = checks.messages.clone();
    if checks.failed > detail.len() {
        detail.push(format!("{} failures in total", checks.failed));
    }
    if !in_time {
        detail.push("time limit exceeded".into());
    }
    CriterionResult {
        id,
        name,
        pass: checks.failed == 0 && in_time,
        checks: checks.count,
        detail: detail.join("; "),
        elapsed,
        limit,
    }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=9).map(run_criterion).collect()
}

fn criterion_1(c: &mut Checks) -> Result<()> {
    let tau = Perm::make_finitary(1, -1, vec![1, -1, 0, -2])?;
    let inv = tau.inverse();
    c.eq(tau.slipface(1, 0), 3, || "s_tau(1,0)".into());
    c.eq(tau.slipface(-1, 2), 1, || "s_tau(-1,2)".into());
    c.eq(inv.slipface(0, 1), 1, || "s_tau^-1(0,1)".into());
    c.eq(inv.slipface(2, -1), 3, || "s_tau^-1(2,-1)".into());
    c.eq(tau.inv_count(), 5, || "inv(tau)".into());
    let iota = Perm::iota(3, 0)?;
    c.eq(iota.slipface(1, 0), 4, || "s_iota3(1,0)".into());
    c.eq(iota.slipface(-2, 3), 0, || "s_iota3(-2,3)".into());
    // h^1 of the twist by -2p + 3q is read off the inverse at (3, -2 + 1)
    c.eq(iota.inverse().slipface(3, -1), 1, || {
        "s_iota3^-1(3,-1)".into()
    });
    Ok(())
}

fn criterion_2(c: &mut Checks) -> Result<()> {
    let small = window_perms(&[0, 1, 2]);
    let affine = affine_by_length(2, 0, 4)?;
    for family in [&small, &affine] {
        for a in family.iter() {
            for b in family.iter() {
                let fast = demazure(a, b)?;
                let slow = demazure_by_max_oracle(a, b, DEFAULT_ORACLE_BOUND)?;
                c.eq(&fast, &slow, || format!("{a} * {b}"));
            }
        }
    }
    Ok(())
}

fn criterion_3(c: &mut Checks) -> Result<()> {
    let mut rng = StdRng::seed_from_u64(3);
    let periods = [0, 2, 3];
    let mut draw = |i: usize| random_perm(&mut rng, periods[i % 3], 6);
    for i in 0..1000 {
        let p = draw(i);
        let q = p.inverse();
        let chi = p.shift();
        let ok = (-6..=6).all(|a| {
            (-6..=6).all(|b| p.slipface(a, b) as i64 - q.slipface(b, a) as i64 == chi + a - b)
        });
        c.check(ok, || format!("duality fails for {p}"));
    }
    for i in 0..1000 {
        let (a, b) = (draw(i), draw(i));
        let want = a.shift() + b.shift();
        c.eq(a.compose(&b)?.shift(), want, || {
            format!("shift of {a} . {b}")
        });
        c.eq(demazure(&a, &b)?.shift(), want, || {
            format!("shift of {a} * {b}")
        });
    }
    for i in 0..1000 {
        let (a, b, d) = (draw(i), draw(i), draw(i));
        let left = demazure(&demazure(&a, &b)?, &d)?;
        let right = demazure(&a, &demazure(&b, &d)?)?;
        c.eq(&left, &right, || format!("associativity for {a}, {b}, {d}"));
    }
    for i in 0..1000 {
        let p = draw(i);
        let t = SlipfaceTable::around(&p);
        c.check(t.validate(p.period()).is_ok(), || {
            format!("table of {p} invalid")
        });
    }
    for k in periods {
        for n in -3..=3 {
            let ms: Vec<i64> = if k == 0 {
                (-6..=6).collect()
            } else {
                (0..k).collect()
            };
            for m in ms {
                let p = Perm::iota(n, k)?.compose(&Perm::sigma(m, k)?)?;
                let ok = (-6..=6).all(|a| {
                    (-6..=6).all(|b| p.slipface(a, b) == slipface_iota_sigma(n, m, k, a, b))
                });
                c.check(ok, || format!("closed form fails for iota{n} s{m} @{k}"));
            }
        }
    }
    Ok(())
}

fn criterion_4(c: &mut Checks) -> Result<()> {
    for r in 0..=4 {
        for chi in r - 5..=r - 1 {
            let g = gamma_rd(r, chi)?;
            c.eq(g.inv_count() as i64, (r + 1) * (r - chi), || {
                format!("inv gamma({r},{chi})")
            });
            c.eq(g.essential_set(), [(1, 0)].into(), || {
                format!("Ess gamma({r},{chi})")
            });
            c.eq(g.slipface(1, 0) as i64, r + 1, || {
                format!("s(1,0) gamma({r},{chi})")
            });
            c.eq(g.shift(), chi, || format!("shift gamma({r},{chi})"));
        }
    }
    Ok(())
}

fn criterion_5(c: &mut Checks) -> Result<()> {
    for k in 2..=4usize {
        let ki = k as i64;
        for e in splitting_types(k, -3, 1) {
            let g = gamma_splitting(&e)?;
            c.check(is_bigrassmannian(&g)?, || {
                format!("gamma({e}) not bigrassmannian")
            });
            c.eq(g.inv_count(), splitting_u(&e), || format!("inv gamma({e})"));
            for b in -2..=2 {
                for delta in -5..=5 {
                    let a = b + delta;
                    c.eq(
                        g.slipface(1 + a * ki, b * ki),
                        splitting_x(&e, delta),
                        || format!("s(1+{a}k,{b}k) for {e}"),
                    );
                }
            }
            c.eq(splitting_type_of(&g)?, e.clone(), || {
                format!("splitting type of gamma({e})")
            });
            let rp = rho_pi_decompose(&g)?;
            let found = crate::oracle::bigrassmannian_residuals(&rp.pi)?;
            c.eq(found, vec![bigrassmannian_rho(&rp.pi)], || {
                format!("residual search for {e}")
            });
        }
    }
    Ok(())
}

fn criterion_6(c: &mut Checks) -> Result<()> {
    for k in [2, 3] {
        let r = genus1_generality_report(k, 3)?;
        c.check(r.pass, || {
            format!("report for k={k} fails: {} failures", r.failures.len())
        });
        c.check(r.by_inv.get(&1).is_some_and(|row| row.point > 0), || {
            format!("no length-1 cases for k={k}")
        });
    }
    for (k, big) in [(2, 4), (3, 6)] {
        let bound = if big == 4 { 3 } else { 1 };
        let r = generality_report(k, big, bound)?;
        let s0 = Perm::sigma(0, k)?.with_period(big)?;
        c.check(!r.pass, || format!("k={k} inside k'={big} not flagged"));
        c.check(
            r.failures
                .iter()
                .any(|f| f.perm == s0 && f.inv == (big / k) as usize),
            || format!("s0@{k} not among the failures for k'={big}"),
        );
    }
    Ok(())
}

fn criterion_7(c: &mut Checks) -> Result<()> {
    for k in [2, 3] {
        let targets = affine_by_length(k, 0, 3)?;
        for len in 1..=3 {
            let degrees = vec![1; len];
            let points = chain_assignments(k, &degrees)?;
            for tau in &targets {
                let brute = filter_points(&points, tau)?;
                let words = wtau_points_via_words(k, &degrees, tau)?;
                c.eq(&words, &brute, || {
                    format!("points of {tau} on {len} components, k={k}")
                });
                if tau.inv_count() == len {
                    let count = reduced_word_count(tau)?;
                    c.eq(BigUint::from(brute.len()), count, || {
                        format!("bijection for {tau}, k={k}")
                    });
                }
            }
        }
    }
    Ok(())
}

fn criterion_8(c: &mut Checks) -> Result<()> {
    let s = |m| Perm::sigma(m, 0).expect("valid");
    let s3 = s(0).compose(&s(1))?.compose(&s(0))?;
    c.eq(reduced_word_count(&s3)?, BigUint::from(2u32), || {
        "S3 longest".into()
    });
    let s4 = Perm::make_finitary(0, 0, vec![3, 2, 1, 0])?;
    c.eq(reduced_word_count(&s4)?, BigUint::from(16u32), || {
        "S4 longest, recursion".into()
    });
    c.eq(reduced_words(&s4)?.count(), 16, || {
        "S4 longest, enumeration".into()
    });

    for (k, letters) in [(0, vec![-1, 0, 1, 2]), (2, vec![0, 1])] {
        let tally = naive_hecke_tally(k, &letters, 4)?;
        for p in by_length(k, 0, &letters, 3)?.concat() {
            for (g, counts) in tally.iter().enumerate() {
                let naive = counts.get(&p).copied().unwrap_or(0);
                c.eq(hecke_word_count(&p, g)?, BigUint::from(naive), || {
                    format!("H({g}, {p})")
                });
            }
        }
    }
    for p in text_corpus()
        .iter()
        .filter(|p| p.shift() == 0 && p.inv_count() <= 8)
    {
        c.eq(
            hecke_word_count(p, p.inv_count())?,
            reduced_word_count(p)?,
            || format!("H(inv, {p})"),
        );
    }
    Ok(())
}

fn criterion_9(c: &mut Checks) -> Result<()> {
    for p in text_corpus() {
        let text = p.to_string();
        let back: Result<Perm> = text.parse();
        c.check(
            back.as_ref()
                .is_ok_and(|q| q == &p && q.to_string() == text),
            || format!("text round trip of {text}"),
        );
        let json = serde_json::to_string(&p).expect("serializable");
        let back: std::result::Result<Perm, _> = serde_json::from_str(&json);
        c.check(back.is_ok_and(|q| q == p), || {
            format!("JSON round trip of {json}")
        });
    }
    Ok(())
}
