//! `tperm`: command-line access to the transmission permutation library.
//!
//! Exit status: 0 on success, 1 when `selftest` finds a failing criterion,
//! 2 on malformed input, 3 on a domain error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use transmission::acceptance::run_all;
use transmission::bntheory::{
    gamma_rd, gamma_splitting, splitting_d, splitting_type_of, splitting_u, splitting_x,
    SplittingType,
};
use transmission::curves::{
    chain_tau, generality_report, wtau_points_bruteforce, wtau_points_via_words, wtau_strata,
    ChainSpec,
};
use transmission::demazure::{compose_all, demazure_by_max_oracle, demazure_fold, SlipfaceTable};
use transmission::words::{hecke_word_count, reduced_word_count, reduced_words};
use transmission::{Error, Perm};

#[derive(Parser)]
#[command(name = "tperm", version, about = "Transmission permutations")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Use the brute-force Bruhat-max oracle for `demazure`, examining at
    /// most this many candidates.
    #[arg(long, global = true, value_name = "N")]
    oracle_bound: Option<u64>,
    /// Slipface table range `a0:a1,b0:b1` (inclusive).
    #[arg(
        long = "box",
        global = true,
        value_name = "A0:A1,B0:B1",
        allow_hyphen_values = true
    )]
    table_box: Option<String>,
    /// Print only the number of results.
    #[arg(long, global = true)]
    count_only: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and print a permutation in canonical form.
    Show { perm: String },
    /// Inverse permutation.
    Inverse { perm: String },
    /// Ordinary product, rightmost factor applied first.
    Compose {
        #[arg(required = true, num_args = 1..)]
        perms: Vec<String>,
    },
    /// Demazure product of one or more factors.
    Demazure {
        #[arg(required = true, num_args = 1..)]
        perms: Vec<String>,
    },
    /// `s(a, b)`, or the whole table when `a` and `b` are omitted.
    #[command(allow_negative_numbers = true)]
    Slipface {
        perm: String,
        a: Option<i64>,
        b: Option<i64>,
    },
    /// Number of inversion classes.
    Inv { perm: String },
    /// Essential set.
    Ess { perm: String },
    /// Whether the first permutation is below the second in Bruhat order.
    Bruhat { lower: String, upper: String },
    /// Reduced words of a shift-0 permutation, one per line.
    ReducedWords { perm: String },
    /// Number of length-`g` Hecke words with Demazure product `perm`.
    #[command(allow_negative_numbers = true)]
    HeckeCount { perm: String, g: usize },
    /// Brill-Noether permutation for rank `r` and Euler characteristic `chi`.
    #[command(allow_negative_numbers = true)]
    GammaRd { r: i64, chi: i64 },
    /// Data of a splitting type: u, x over a range, d for a genus, gamma.
    #[command(allow_negative_numbers = true)]
    GammaSplit {
        split: String,
        #[arg(long, default_value_t = 0)]
        genus: i64,
        #[arg(long, default_value_t = -3)]
        x_from: i64,
        #[arg(long, default_value_t = 3)]
        x_to: i64,
    },
    /// Splitting type of a bigrassmannian permutation.
    SplitOf { perm: String },
    /// Demazure product of the components of a chain.
    ChainTau { chain: String },
    /// Points of the transmission locus of `tau` on a chain with the given
    /// comma-separated degrees.
    #[command(allow_negative_numbers = true)]
    WtauPoints {
        k: i64,
        #[arg(allow_hyphen_values = true)]
        degrees: String,
        tau: String,
        /// `brute`, `words`, or `strata` (reduced-tuple strata; the only
        /// method for period 0).
        #[arg(long, default_value = "words")]
        method: String,
    },
    /// Single-component transmission loci versus length.
    #[command(allow_negative_numbers = true)]
    Genus1Report {
        k: i64,
        bound: i64,
        /// Period of the permutations tested, a multiple of `k`.
        #[arg(long)]
        group_k: Option<i64>,
    },
    /// Run the acceptance suite.
    Selftest,
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

type Outcome = Result<Output, Failure>;

struct Output {
    text: String,
    json: Value,
    ok: bool,
}

fn out(text: impl Into<String>, json: Value) -> Outcome {
    Ok(Output {
        text: text.into(),
        json,
        ok: true,
    })
}

fn perm(s: &str) -> Result<Perm, Failure> {
    Ok(s.parse()?)
}

fn perms(v: &[String]) -> Result<Vec<Perm>, Failure> {
    v.iter().map(|s| perm(s)).collect()
}

fn pj(p: &Perm) -> Value {
    json!({ "text": p.to_string(), "perm": p })
}

fn parse_range(s: &str) -> Result<Range, Failure> {
    let bad = || Failure::Lib(Error::Parse(format!("bad range `{s}`, expected `lo:hi`")));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo = lo.trim().parse().map_err(|_| bad())?;
    let hi = hi.trim().parse().map_err(|_| bad())?;
    Ok((lo, hi))
}

type Range = (i64, i64);

fn parse_box(s: &str) -> Result<(Range, Range), Failure> {
    let (a, b) = s.split_once(',').ok_or_else(|| {
        Failure::Lib(Error::Parse(format!(
            "bad box `{s}`, expected `a0:a1,b0:b1`"
        )))
    })?;
    Ok((parse_range(a)?, parse_range(b)?))
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Show { perm: p } => {
            let p = perm(p)?;
            out(p.to_string(), pj(&p))
        }
        Command::Inverse { perm: p } => {
            let q = perm(p)?.inverse();
            out(q.to_string(), pj(&q))
        }
        Command::Compose { perms: ps } => {
            let q = compose_all(&perms(ps)?)?;
            out(q.to_string(), pj(&q))
        }
        Command::Demazure { perms: ps } => {
            let ps = perms(ps)?;
            let q = match cli.oracle_bound {
                Some(bound) => {
                    let mut acc = ps[0].clone();
                    for p in &ps[1..] {
                        acc = demazure_by_max_oracle(&acc, p, bound)?;
                    }
                    acc
                }
                None => demazure_fold(&ps)?,
            };
            out(q.to_string(), pj(&q))
        }
        Command::Slipface { perm: p, a, b } => {
            let p = perm(p)?;
            match (a, b) {
                (Some(a), Some(b)) => {
                    let v = p.slipface(*a, *b);
                    out(v.to_string(), json!(v))
                }
                (None, None) => {
                    let (ar, br) = match &cli.table_box {
                        Some(s) => parse_box(s)?,
                        None => SlipfaceTable::default_box(&p),
                    };
                    if ar.0 > ar.1 || br.0 > br.1 {
                        return Err(Failure::Usage("empty box".into()));
                    }
                    let t = SlipfaceTable::tabulate(&p, ar, br);
                    let width = t
                        .rows()
                        .iter()
                        .flatten()
                        .map(|v| v.to_string().len())
                        .chain([ar.0.to_string().len(), ar.1.to_string().len()])
                        .max()
                        .unwrap_or(1);
                    let label = br.0.to_string().len().max(br.1.to_string().len()).max(3);
                    let mut text = format!("{:>label$} |", "b\\a");
                    for a in ar.0..=ar.1 {
                        text += &format!(" {a:>width$}");
                    }
                    for (row, b) in t.rows().iter().zip(br.0..=br.1) {
                        text += &format!("\n{b:>label$} |");
                        for v in row {
                            text += &format!(" {v:>width$}");
                        }
                    }
                    out(text, json!(t))
                }
                _ => Err(Failure::Usage("give both a and b, or neither".into())),
            }
        }
        Command::Inv { perm: p } => {
            let p = perm(p)?;
            let classes: Vec<(i64, i64)> =
                p.inversion_classes().iter().map(|c| (c.m, c.n)).collect();
            out(
                p.inv_count().to_string(),
                json!({ "inv": p.inv_count(), "classes": classes }),
            )
        }
        Command::Ess { perm: p } => {
            let p = perm(p)?;
            let ess: Vec<(i64, i64)> = p.essential_set().into_iter().collect();
            let text = ess
                .iter()
                .map(|(a, b)| format!("({a},{b}) s={}", p.slipface(*a, *b)))
                .collect::<Vec<_>>()
                .join("\n");
            out(text, json!(ess))
        }
        Command::Bruhat { lower, upper } => {
            let v = perm(lower)?.bruhat_leq(&perm(upper)?)?;
            out(v.to_string(), json!(v))
        }
        Command::ReducedWords { perm: p } => {
            let p = perm(p)?;
            if cli.count_only {
                let n = reduced_word_count(&p)?;
                return out(n.to_string(), json!(n.to_string()));
            }
            let words: Vec<String> = reduced_words(&p)?.map(|w| w.to_string()).collect();
            out(words.join("\n"), json!(words))
        }
        Command::HeckeCount { perm: p, g } => {
            let n = hecke_word_count(&perm(p)?, *g)?;
            out(n.to_string(), json!(n.to_string()))
        }
        Command::GammaRd { r, chi } => {
            let g = gamma_rd(*r, *chi)?;
            out(g.to_string(), pj(&g))
        }
        Command::GammaSplit {
            split,
            genus,
            x_from,
            x_to,
        } => {
            let e: SplittingType = split.parse()?;
            let g = gamma_splitting(&e)?;
            let u = splitting_u(&e);
            let d = splitting_d(&e, *genus);
            let xs: Vec<(i64, u64)> = (*x_from..=*x_to).map(|m| (m, splitting_x(&e, m))).collect();
            let mut text = format!("{e}\nu = {u}\nd = {d} (g = {genus})\n");
            for (m, x) in &xs {
                text += &format!("x({m}) = {x}\n");
            }
            text += &format!("gamma = {g}");
            out(
                text,
                json!({ "split": e, "u": u, "g": genus, "d": d, "x": xs, "gamma": pj(&g) }),
            )
        }
        Command::SplitOf { perm: p } => {
            let e = splitting_type_of(&perm(p)?)?;
            out(e.to_string(), json!(e))
        }
        Command::ChainTau { chain } => {
            let c: ChainSpec = chain.parse()?;
            let t = chain_tau(&c)?;
            out(t.to_string(), pj(&t))
        }
        Command::WtauPoints {
            k,
            degrees,
            tau,
            method,
        } => {
            let degrees = degrees
                .split(',')
                .map(|d| {
                    d.trim().parse::<i64>().map_err(|_| {
                        Failure::Lib(Error::Parse(format!("bad degree list `{degrees}`")))
                    })
                })
                .collect::<Result<Vec<_>, _>>()?;
            let tau = perm(tau)?;
            let points = match method.as_str() {
                "brute" => wtau_points_bruteforce(*k, &degrees, &tau)?,
                "words" => wtau_points_via_words(*k, &degrees, &tau)?,
                "strata" => wtau_strata(*k, &degrees, &tau)?,
                other => return Err(Failure::Usage(format!("unknown method `{other}`"))),
            };
            if cli.count_only {
                return out(points.len().to_string(), json!(points.len()));
            }
            let text: Vec<String> = points.iter().map(ChainSpec::to_string).collect();
            out(text.join("\n"), json!(points))
        }
        Command::Genus1Report { k, bound, group_k } => {
            let r = generality_report(*k, group_k.unwrap_or(*k), *bound)?;
            let text = r.to_string().trim_end().to_string();
            out(text, json!(r))
        }
        Command::Selftest => {
            let results = run_all();
            let ok = results.iter().all(|r| r.pass);
            let text = results
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let js: Vec<Value> = results
                .iter()
                .map(|r| {
                    json!({
                        "id": r.id,
                        "name": r.name,
                        "pass": r.pass,
                        "checks": r.checks,
                        "detail": r.detail,
                        "elapsed_ms": r.elapsed.as_secs_f64() * 1000.0,
                    })
                })
                .collect();
            Ok(Output {
                text,
                json: json!({ "pass": ok, "criteria": js }),
                ok,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(o) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not an error for a batch tool
            let _ = if cli.json {
                writeln!(stdout, "{}", o.json)
            } else if !o.text.is_empty() {
                writeln!(stdout, "{}", o.text)
            } else {
                Ok(())
            };
            if o.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse() { 2 } else { 3 })
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: UsageError: {msg}");
            ExitCode::from(2)
        }
    }
}
