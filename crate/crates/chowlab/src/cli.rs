//! Command-line front end: `chow`, `sfy`, `scd`, `fuzz`, `export`.
//!
//! Exit code 0 iff every requested verdict passes; parse and validation
//! failures exit nonzero with a diagnostic on stderr. All randomized
//! behavior is a pure function of `--seed`.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::checks::{invariant_suite, shrink_poset};
use crate::chow::chow_chain_sum;
use crate::family::{gen_random_graded, FamilySpec};
use crate::io::{parse_poset_json, to_canonical_json, to_dot};
use crate::monomial::{is_monomial_order_ideal, is_pure_ideal};
use crate::poly::gamma_vector;
use crate::poset::{Poset, WeakRank};
use crate::roots::count_real_roots;
use crate::scd::{
    grid_cover, grid_points, grid_rank, grid_whitney, initial_elements_formula,
    scd_product_of_chains, sfy_generate, whitney_of_starts,
};
use crate::seq::{
    delta, hibi_check, is_log_concave, is_o_sequence, is_palindromic, is_pure_o_len3,
    is_si_sequence, is_unimodal,
};

#[derive(Parser)]
#[command(name = "chowlab", version, about = "Chow polynomials, symmetric chain decompositions and sequence certificates for finite posets")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chow polynomial of a poset with sequence verdicts
    Chow {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// SFY monomial order ideal of a poset with pureness verdicts
    Sfy {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Symmetric chain decomposition of a product of chains
    Scd {
        /// Chain ranks r_1 r_2 ... (each at least 1)
        #[arg(required = true)]
        bounds: Vec<u32>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sequence certificates for a comma-separated integer row
    Seq {
        /// Sequence like `1,4,1`
        values: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Random-poset campaign over the full invariant suite
    Fuzz {
        /// Campaign seed (all randomness derives from it)
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 6)]
        max_rank: u64,
        #[arg(long, default_value_t = 4)]
        max_width: u64,
        /// Worker threads (defaults to the rayon global pool)
        #[arg(long)]
        jobs: Option<usize>,
        /// Directory for minimized failing posets
        #[arg(long, default_value = "fuzz-failures")]
        out_dir: PathBuf,
    },
    /// Export a poset as DOT, CSV h-vector, or canonical poset file
    Export {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = Format::Structured)]
        format: Format,
        /// Write to a file instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct InputArgs {
    /// Family spec like `chain(3)`, `boolean(3)`, `product(2,2)`,
    /// `nonpure(m=5)`, `nonlogconcave(7,9)`, `random(seed,max_rank,max_width)`
    #[arg(long)]
    family: Option<String>,
    /// Poset file (JSON with elements/covers/rank)
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Dot,
    Structured,
}

impl InputArgs {
    fn load(&self) -> Result<(Poset, WeakRank), String> {
        let (poset, rank) = if let Some(spec) = &self.family {
            let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
            spec.generate().map_err(|e| format!("{e}"))?
        } else {
            let path = self.input.as_ref().expect("clap enforces one input source");
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_poset_json(&text).map_err(|e| format!("{e}"))?
        };
        let report = rank.validate(&poset);
        if !report.is_valid() {
            let pairs: Vec<String> = report
                .violations
                .iter()
                .map(|&(l, h)| format!("({}, {})", poset.id(l), poset.id(h)))
                .collect();
            return Err(format!(
                "invalid weak rank: bottom rank {} / non-increasing covers {}",
                report.bottom_rank,
                pairs.join(" ")
            ));
        }
        Ok((poset, rank))
    }
}

/// One printed check or value; verdicts drive the exit code.
struct Report {
    format: Format,
    lines: Vec<String>,
    all_pass: bool,
}

impl Report {
    fn new(format: Format) -> Self {
        Report {
            format,
            lines: Vec::new(),
            all_pass: true,
        }
    }

    fn value(&mut self, name: &str, value: impl std::fmt::Display) {
        match self.format {
            Format::Structured => self.lines.push(
                serde_json::json!({"record": "value", "name": name, "value": value.to_string()})
                    .to_string(),
            ),
            _ => self.lines.push(format!("{name}: {value}")),
        }
    }

    fn verdict(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.all_pass &= pass;
        match self.format {
            Format::Structured => self.lines.push(
                serde_json::json!({"record": "verdict", "name": name, "pass": pass, "witness": witness})
                    .to_string(),
            ),
            _ => {
                let mark = if pass { "true" } else { "FALSE" };
                match witness {
                    Some(w) if !pass => self.lines.push(format!("{name}: {mark} ({w})")),
                    _ => self.lines.push(format!("{name}: {mark}")),
                }
            }
        }
    }

    fn print(self) -> bool {
        let mut stdout = std::io::stdout().lock();
        for line in &self.lines {
            let _ = writeln!(stdout, "{line}");
        }
        self.all_pass
    }
}

/// Runs the CLI; returns the process exit code.
pub fn run(cli: Cli) -> u8 {
    let outcome = match cli.command {
        Command::Chow { input, format } => input.load().map(|(p, r)| cmd_chow(&p, &r, format)),
        Command::Sfy { input, format } => input.load().map(|(p, r)| cmd_sfy(&p, &r, format)),
        Command::Scd { bounds, format } => cmd_scd(&bounds, format),
        Command::Seq { values, format } => cmd_seq(&values, format),
        Command::Fuzz {
            seed,
            trials,
            max_rank,
            max_width,
            jobs,
            out_dir,
        } => cmd_fuzz(seed, trials, max_rank, max_width, jobs, &out_dir),
        Command::Export {
            input,
            format,
            output,
        } => input.load().and_then(|(p, r)| cmd_export(&p, &r, format, output.as_deref())),
    };
    match outcome {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn seq_of(coeffs: &[BigInt]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_chow(poset: &Poset, rank: &WeakRank, format: Format) -> bool {
    let h = chow_chain_sum(poset, rank);
    if format == Format::Csv {
        println!("{}", h.to_csv());
        return true;
    }
    let coeffs = h.coeffs().to_vec();
    let mut report = Report::new(format);
    report.value("h", h.to_csv());
    report.value("polynomial", &h);
    let p = is_palindromic(&coeffs);
    report.verdict("palindromic", p.holds, p.witness.map(|i| format!("index {i}")));
    let u = is_unimodal(&coeffs);
    report.verdict("unimodal", u.holds, u.witness.map(|i| format!("index {i}")));
    let lc = is_log_concave(&coeffs);
    report.verdict("log-concave", lc.holds, lc.witness.map(|i| format!("index {i}")));
    match gamma_vector(&h) {
        Ok(g) => {
            report.value("gamma", seq_of(&g));
            report.value(
                "gamma-positive",
                g.iter().all(|x| x >= &BigInt::from(0)),
            );
        }
        Err(e) => report.value("gamma", format!("undefined ({e})")),
    }
    match count_real_roots(&h) {
        Ok(k) => report.value("real-roots", k),
        Err(e) => report.value("real-roots", format!("undefined ({e})")),
    }
    match is_si_sequence(&coeffs) {
        Ok(v) => report.verdict("si-sequence", v.holds, v.failure.map(|f| format!("{f:?}"))),
        Err(e) => report.verdict("si-sequence", false, Some(e.to_string())),
    }
    report.print()
}

fn cmd_sfy(poset: &Poset, rank: &WeakRank, format: Format) -> bool {
    let sfy = sfy_generate(poset, rank);
    let h: Vec<BigInt> = sfy.h_vector().iter().map(|&c| BigInt::from(c)).collect();
    if format == Format::Csv {
        println!("{}", seq_of(&h));
        return true;
    }
    let n = rank.poset_rank(poset);
    let mut report = Report::new(format);
    report.value("poset-rank", n);
    report.value("h", seq_of(&h));
    if format == Format::Text {
        for m in sfy.iter() {
            report.value("monomial", m.render(poset));
        }
    }
    let ideal = is_monomial_order_ideal(&sfy);
    report.verdict(
        "order-ideal",
        ideal.is_ideal(),
        ideal
            .witness
            .as_ref()
            .map(|(m, d)| format!("{} missing {}", m.render(poset), d.render(poset))),
    );
    let expected = if rank.is_ranked(poset) {
        let d = if n == 0 { 0 } else { (n - 1) / 2 };
        report.value("expected-pure-degree", d);
        Some(d)
    } else {
        None
    };
    match is_pure_ideal(&sfy, expected) {
        Ok(p) => report.verdict(
            "pure",
            p.pure,
            (!p.pure).then(|| {
                p.offenders
                    .iter()
                    .take(3)
                    .map(|m| format!("maximal {} of degree {}", m.render(poset), m.degree()))
                    .collect::<Vec<_>>()
                    .join("; ")
            }),
        ),
        Err(e) => report.verdict("pure", false, Some(e.to_string())),
    }
    let chow = chow_chain_sum(poset, rank);
    match delta(chow.coeffs()) {
        Ok(d) => {
            let padded: Vec<BigInt> = sfy
                .h_vector_padded(d.len())
                .into_iter()
                .map(BigInt::from)
                .collect();
            report.verdict(
                "h-equals-delta-chow",
                padded == d,
                (padded != d).then(|| format!("delta(chow) = {}", seq_of(&d))),
            );
        }
        Err(e) => report.verdict("h-equals-delta-chow", false, Some(e.to_string())),
    }
    report.print()
}

fn cmd_scd(bounds: &[u32], format: Format) -> Result<bool, String> {
    if bounds.iter().any(|&r| r < 1) {
        return Err("scd bounds must all be at least 1".into());
    }
    let dec = scd_product_of_chains(bounds).map_err(|e| e.to_string())?;
    let render_point =
        |p: &Vec<u32>| p.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(".");
    if format == Format::Csv {
        let mut out = String::new();
        for chain in &dec.chains {
            out.push_str(
                &chain.iter().map(render_point).collect::<Vec<_>>().join(","),
            );
            out.push('\n');
        }
        print!("{out}");
        return Ok(true);
    }
    let host_rank: u64 = bounds.iter().map(|&r| r as u64).sum();
    let mut report = Report::new(format);
    report.value("chains", dec.chains.len());
    if format == Format::Text {
        for chain in &dec.chains {
            report.value(
                "chain",
                chain.iter().map(render_point).collect::<Vec<_>>().join(","),
            );
        }
        for start in dec.chain_starts() {
            report.value("initial", render_point(&start));
        }
    }
    let axioms = dec.verify(&grid_points(bounds), grid_rank, grid_cover, host_rank);
    report.verdict("partition", axioms.is_partition, None);
    report.verdict("saturated", axioms.all_saturated, None);
    report.verdict("symmetric", axioms.all_symmetric, None);
    let mut starts = dec.chain_starts();
    starts.sort_unstable();
    let mut formula = initial_elements_formula(bounds);
    formula.sort_unstable();
    report.verdict("starts-match-formula", starts == formula, None);
    let w: Vec<BigInt> = grid_whitney(bounds).into_iter().map(BigInt::from).collect();
    let dw = delta(&w).map_err(|e| e.to_string())?;
    let got: Vec<BigInt> = whitney_of_starts(&dec, grid_rank, host_rank)
        .into_iter()
        .map(BigInt::from)
        .collect();
    report.value("start-whitney", seq_of(&got));
    report.verdict(
        "whitney-identity",
        got == dw,
        (got != dw).then(|| format!("delta(W) = {}", seq_of(&dw))),
    );
    Ok(report.print())
}

fn cmd_seq(values: &str, format: Format) -> Result<bool, String> {
    let seq: Vec<BigInt> = values
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("bad integer `{part}`"))
        })
        .collect::<Result<_, _>>()?;
    let mut report = Report::new(format);
    report.value("sequence", seq_of(&seq));
    let p = is_palindromic(&seq);
    report.verdict("palindromic", p.holds, p.witness.map(|i| format!("index {i}")));
    let u = is_unimodal(&seq);
    report.verdict("unimodal", u.holds, u.witness.map(|i| format!("index {i}")));
    let lc = is_log_concave(&seq);
    report.verdict("log-concave", lc.holds, lc.witness.map(|i| format!("index {i}")));
    match delta(&seq) {
        Ok(d) => report.value("delta", seq_of(&d)),
        Err(e) => report.value("delta", format!("undefined ({e})")),
    }
    match is_o_sequence(&seq) {
        Ok(v) => report.verdict("o-sequence", v.holds, v.witness.map(|i| format!("index {i}"))),
        Err(e) => report.verdict("o-sequence", false, Some(e.to_string())),
    }
    match is_si_sequence(&seq) {
        Ok(v) => report.verdict("si-sequence", v.holds, v.failure.map(|f| format!("{f:?}"))),
        Err(e) => report.verdict("si-sequence", false, Some(e.to_string())),
    }
    if seq.len() == 3 {
        match is_pure_o_len3(&seq) {
            Ok(v) => report.value("pure-o-sequence", v),
            Err(e) => report.value("pure-o-sequence", format!("undefined ({e})")),
        }
    }
    let hibi = hibi_check(&seq);
    report.value("hibi-inequalities", hibi.holds);
    Ok(report.print())
}

fn cmd_fuzz(
    seed: u64,
    trials: u64,
    max_rank: u64,
    max_width: u64,
    jobs: Option<usize>,
    out_dir: &std::path::Path,
) -> Result<bool, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let trial_seeds: Vec<u64> = (0..trials).map(|_| rng.gen()).collect();

    let run = || -> Vec<(u64, u64, Vec<crate::checks::Violation>)> {
        trial_seeds
            .par_iter()
            .enumerate()
            .filter_map(|(i, &trial_seed)| {
                let (poset, rank) = gen_random_graded(trial_seed, max_rank, max_width).ok()?;
                let violations = invariant_suite(&poset, &rank);
                (!violations.is_empty()).then_some((i as u64, trial_seed, violations))
            })
            .collect()
    };
    let mut failures = match jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .map_err(|e| e.to_string())?
            .install(run),
        None => run(),
    };
    failures.sort_by_key(|(i, _, _)| *i);

    println!(
        "fuzz: seed {seed}, {trials} trials, max rank {max_rank}, max width {max_width}"
    );
    if failures.is_empty() {
        println!("fuzz: 0 violations");
        return Ok(true);
    }
    std::fs::create_dir_all(out_dir).map_err(|e| e.to_string())?;
    for (trial, trial_seed, violations) in &failures {
        for violation in violations {
            eprintln!(
                "trial {trial}: {} failed: {}",
                violation.check, violation.detail
            );
            let (poset, rank) = gen_random_graded(*trial_seed, max_rank, max_width)
                .expect("trial regenerates deterministically");
            let check = violation.check;
            let (sp, sr) = shrink_poset(&poset, &rank, |p, r| {
                invariant_suite(p, r).iter().any(|v| v.check == check)
            });
            let path = out_dir.join(format!("trial-{trial}-{check}.json"));
            std::fs::write(&path, to_canonical_json(&sp, &sr)).map_err(|e| e.to_string())?;
            eprintln!("minimized poset written to {}", path.display());
        }
    }
    println!("fuzz: {} failing trials", failures.len());
    Ok(false)
}

fn cmd_export(
    poset: &Poset,
    rank: &WeakRank,
    format: Format,
    output: Option<&std::path::Path>,
) -> Result<bool, String> {
    let text = match format {
        Format::Dot => to_dot(poset, rank),
        Format::Csv => {
            let mut row = chow_chain_sum(poset, rank).to_csv();
            row.push('\n');
            row
        }
        Format::Structured | Format::Text => to_canonical_json(poset, rank),
    };
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| e.to_string())?,
        None => print!("{text}"),
    }
    Ok(true)
}
