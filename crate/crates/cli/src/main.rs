//! One binary, subcommand dispatch. All numeric I/O is exact "p/q"
//! strings; exit code 0 means every verdict was true, 1 means some verdict
//! was false, 2 means the input could not be processed.

mod params_io;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use dbmw_core::admissibility::{self, default_a_max, AdmissibilityReport};
use dbmw_core::bmw2::{self, Gen};
use dbmw_core::repn;
use dbmw_core::ring::Ring;
use dbmw_core::symfun;
use dbmw_core::{MultiPoly, ParameterSet, Rational};

use params_io::{load_params, symbolic_params_json, LoadedParams};
use report::{Format, Report};

#[derive(Parser)]
#[command(name = "dbmw", version, about = "Exact computations in two-strand degenerate cyclotomic BMW algebras")]
struct Cli {
    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value = "json")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tables of Schur q-functions, eta polynomials or signed elementary
    /// symmetric functions.
    Qfun {
        #[arg(long)]
        r: usize,
        /// Highest index to emit (defaults to 2r+2; ignored for kind=a).
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value = "q")]
        kind: Kind,
    },
    /// Parameter admissibility: check, solve for the universal parameters,
    /// or certify the equivalences.
    Admiss {
        #[command(subcommand)]
        cmd: AdmissCmd,
    },
    /// The two-strand algebra: structure constants and ad-hoc reductions.
    Bmw2 {
        #[command(subcommand)]
        cmd: Bmw2Cmd,
    },
    /// The r-dimensional module and the kappa system.
    Repn {
        #[command(subcommand)]
        cmd: RepnCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Q,
    Eta,
    A,
}

#[derive(Subcommand)]
enum AdmissCmd {
    /// Run all three admissibility checks on a parameter file.
    Check {
        #[arg(long)]
        params: PathBuf,
        #[arg(long)]
        upto: Option<usize>,
    },
    /// Solve for the universal admissible parameters H_0..H_upto.
    Solve {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        upto: Option<usize>,
        /// Also write the solution as a parameter file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Certify that the solver output is admissible, u-admissible and
    /// weakly admissible, symbolically.
    Verify {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        upto: Option<usize>,
    },
}

#[derive(Subcommand)]
enum Bmw2Cmd {
    /// Emit the structure constants (generator times basis word), with an
    /// optional certification sweep.
    Build {
        #[arg(long)]
        r: usize,
        /// Parameter file; defaults to the symbolic u-admissible parameters.
        #[arg(long)]
        params: Option<PathBuf>,
        /// Run the relation, associativity and reduction-consistency checks.
        #[arg(long)]
        certify: bool,
        /// Force the symbolic ground ring.
        #[arg(long)]
        symbolic: bool,
        /// Seed for the randomized reduction-consistency sweep.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Number of random words in the sweep.
        #[arg(long, default_value_t = 200)]
        words: usize,
    },
    /// Reduce a generator word onto the spanning set.
    Reduce {
        #[arg(long)]
        r: usize,
        /// Whitespace-separated tokens e, s, x1, x2.
        #[arg(long)]
        word: String,
        #[arg(long)]
        params: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum RepnCmd {
    /// Build the module and verify every matrix relation.
    Verify {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        params: Option<PathBuf>,
        /// Work over the rational-function field.
        #[arg(long)]
        symbolic: bool,
    },
    /// Solve the Cauchy-type kappa system at a numeric point.
    Kappa {
        /// Comma-separated exact values, e.g. "2,3" or "1/2,5/3".
        #[arg(long)]
        u: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let rendered = report.emit(cli.format);
            print!("{rendered}");
            if !rendered.ends_with('\n') {
                println!();
            }
            match report.verdict {
                Some(false) => ExitCode::from(1),
                _ => ExitCode::SUCCESS,
            }
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    match &cli.command {
        Command::Qfun { r, limit, kind } => run_qfun(*r, *limit, *kind),
        Command::Admiss { cmd } => match cmd {
            AdmissCmd::Check { params, upto } => run_check(params, *upto),
            AdmissCmd::Solve { r, upto, out } => run_solve(*r, *upto, out.as_deref()),
            AdmissCmd::Verify { r, upto } => run_verify(*r, *upto),
        },
        Command::Bmw2 { cmd } => match cmd {
            Bmw2Cmd::Build {
                r,
                params,
                certify,
                symbolic,
                seed,
                words,
            } => run_build(*r, params.as_deref(), *certify, *symbolic, *seed, *words),
            Bmw2Cmd::Reduce { r, word, params } => run_reduce(*r, word, params.as_deref()),
        },
        Command::Repn { cmd } => match cmd {
            RepnCmd::Verify {
                r,
                params,
                symbolic,
            } => run_repn_verify(*r, params.as_deref(), *symbolic),
            RepnCmd::Kappa { u } => run_kappa(u),
        },
    }
}

fn run_qfun(r: usize, limit: Option<usize>, kind: Kind) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let mut limit = limit.unwrap_or(default_a_max(r));
    let (kind_name, polys): (&str, Vec<MultiPoly>) = match kind {
        Kind::Q => ("q", symfun::schur_q(r, limit).q),
        Kind::Eta => ("eta", symfun::eta(r, limit).eta),
        Kind::A => {
            // the signed elementary symmetric functions always run 0..=r
            limit = r;
            ("a", symfun::signed_elementary(r).a)
        }
    };
    let digest = format!("qfun r={r} limit={limit} kind={kind_name}");
    let mut report = Report::new("qfun", digest.as_bytes())
        .with_extra("r", json!(r))
        .with_extra("limit", json!(limit))
        .with_extra("kind", json!(kind_name));
    report.results_key = "entries";
    for (i, p) in polys.iter().enumerate() {
        report.push_poly(&format!("{kind_name}_{i}"), p);
    }
    Ok(report)
}

fn push_admissibility_rows(report: &mut Report, adm: &AdmissibilityReport) {
    for (name, verdict) in [
        ("weak", &adm.weak),
        ("admissible", &adm.admissible),
        ("u_admissible", &adm.u_admissible),
    ] {
        let mut row = json!({
            "name": name,
            "status": if verdict.ok { "pass" } else { "fail" },
        });
        if let Some(w) = &verdict.witness {
            row["witness"] = json!(w.to_string());
        }
        report.push_row(row);
    }
    report.push_value("checked_up_to", json!(adm.checked_up_to));
    report.push_value(
        "omega_source",
        if adm.omega_extended {
            "stored prefix extended by the recurrence"
        } else {
            "stored prefix only"
        },
    );
}

fn run_check(path: &std::path::Path, upto: Option<usize>) -> anyhow::Result<Report> {
    let loaded = load_params(path)?;
    let a_max = upto.unwrap_or(default_a_max(loaded.r()));
    let bytes = std::fs::read(path)?;
    let mut report = Report::new("admiss check", &bytes);
    let adm = match &loaded {
        LoadedParams::Numeric(p) => admissibility::check_all(p, a_max),
        LoadedParams::Symbolic(p) => admissibility::check_all(p, a_max),
    };
    push_admissibility_rows(&mut report, &adm);
    report.verdict = Some(adm.all_ok());
    Ok(report)
}

fn run_solve(r: usize, upto: Option<usize>, out: Option<&std::path::Path>) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let a_max = upto.unwrap_or(default_a_max(r));
    let h = admissibility::solve_universal(r, a_max);
    let digest = format!("solve r={r} upto={a_max}");
    let mut report = Report::new("admiss solve", digest.as_bytes()).with_extra("r", json!(r));
    for (a, p) in h.iter().enumerate() {
        report.push_poly(&format!("H_{a}"), p);
    }
    if let Some(path) = out {
        let doc = symbolic_params_json(r, &h);
        std::fs::write(path, serde_json::to_string_pretty(&doc)?)?;
        report.push_value("params_written", path.display().to_string());
    }
    Ok(report)
}

fn run_verify(r: usize, upto: Option<usize>) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let a_max = upto.unwrap_or(default_a_max(r));
    let digest = format!("verify r={r} upto={a_max}");
    let mut report = Report::new("admiss verify", digest.as_bytes());
    let adm = admissibility::verify_equivalence(r, a_max);
    push_admissibility_rows(&mut report, &adm);
    report.verdict = Some(adm.all_ok());
    Ok(report)
}

fn expansion_row<K: Ring>(
    word: String,
    generator: Option<Gen>,
    el: &bmw2::AlgebraElement<K>,
) -> serde_json::Value {
    let expansion: Vec<_> = el
        .iter()
        .map(|(w, c)| json!({ "word": w.to_string(), "coeff": c.to_string() }))
        .collect();
    match generator {
        Some(g) => json!({
            "word": word,
            "generator": g.to_string(),
            "expansion": expansion,
        }),
        None => json!({ "name": format!("reduce {word}"), "expansion": expansion }),
    }
}

fn load_or_default(
    r: usize,
    path: Option<&std::path::Path>,
    symbolic: bool,
) -> anyhow::Result<(LoadedParams, Vec<u8>)> {
    let (loaded, digest) = match path {
        Some(p) => (load_params(p)?, std::fs::read(p)?),
        None => (
            LoadedParams::Symbolic(ParameterSet::symbolic_eta(r)),
            format!("symbolic eta r={r}").into_bytes(),
        ),
    };
    anyhow::ensure!(
        loaded.r() == r,
        "parameter file has r = {}, expected {r}",
        loaded.r()
    );
    if symbolic {
        if let LoadedParams::Numeric(_) = loaded {
            anyhow::bail!("--symbolic requires a symbolic parameter file (or none)");
        }
    }
    Ok((loaded, digest))
}

fn run_build(
    r: usize,
    path: Option<&std::path::Path>,
    certify: bool,
    symbolic: bool,
    seed: u64,
    words: usize,
) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let (loaded, digest) = load_or_default(r, path, symbolic)?;
    let mut report = Report::new("bmw2 build", &digest);
    match loaded {
        LoadedParams::Numeric(p) => build_into(&mut report, p, certify, seed, words),
        LoadedParams::Symbolic(p) => build_into(&mut report, p, certify, seed, words),
    }
    Ok(report)
}

fn build_into<K: Ring>(
    report: &mut Report,
    params: ParameterSet<K>,
    certify: bool,
    seed: u64,
    words: usize,
) {
    let table = bmw2::build_table(params);
    for g in Gen::ALL {
        for w in table.words() {
            report.push_row(expansion_row(w.to_string(), Some(g), table.left_mult(g, w)));
        }
    }
    if certify {
        let mut cert = table.check_relations();
        cert.extend(table.check_associativity());
        cert.push(reduction_consistency_sweep(&table, seed, words));
        report.push_check_rows(&cert);
        report.verdict = Some(cert.all_pass());
    }
}

/// Seeded random-word sweep: reducing a concatenation must agree with
/// multiplying the reductions.
fn reduction_consistency_sweep<K: Ring>(
    table: &bmw2::StructureTable<K>,
    seed: u64,
    words: usize,
) -> dbmw_core::CheckRow {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let name = format!("reduction_consistency_{words}_words");
    for _ in 0..words {
        let len = rng.gen_range(0..=8);
        let word: Vec<Gen> = (0..len)
            .map(|_| Gen::ALL[rng.gen_range(0..4)])
            .collect();
        let split = rng.gen_range(0..=len);
        let (w1, w2) = word.split_at(split);
        let whole = table.reducer().reduce_word(&word);
        let product = table.multiply(
            &table.reducer().reduce_word(w1),
            &table.reducer().reduce_word(w2),
        );
        if whole != product {
            let text: Vec<String> = word.iter().map(|g| g.to_string()).collect();
            return dbmw_core::CheckRow::fail(
                name,
                format!("word \"{}\" split at {split}", text.join(" ")),
            );
        }
    }
    dbmw_core::CheckRow::pass(name)
}

fn run_reduce(r: usize, word: &str, path: Option<&std::path::Path>) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let gens = bmw2::parse_word(word)?;
    let (loaded, digest) = load_or_default(r, path, false)?;
    let mut report = Report::new("bmw2 reduce", &digest);
    match loaded {
        LoadedParams::Numeric(p) => {
            report.push_row(expansion_row(word.to_string(), None, &bmw2::reduce_word(p, &gens)))
        }
        LoadedParams::Symbolic(p) => {
            report.push_row(expansion_row(word.to_string(), None, &bmw2::reduce_word(p, &gens)))
        }
    }
    Ok(report)
}

fn run_repn_verify(
    r: usize,
    path: Option<&std::path::Path>,
    symbolic: bool,
) -> anyhow::Result<Report> {
    anyhow::ensure!(r >= 1, "r must be at least 1");
    let (loaded, digest) = load_or_default(r, path, symbolic)?;
    let mut report = Report::new("repn verify", &digest);
    let check = match loaded {
        LoadedParams::Numeric(p) => repn::verify_module_relations(&repn::build_module(&p)),
        LoadedParams::Symbolic(p) => {
            repn::verify_module_relations(&repn::build_module(&p.lift_to_ratfunc()))
        }
    };
    report.push_check_rows_keyed(&check, "relation");
    report.verdict = Some(check.all_pass());
    Ok(report)
}

fn run_kappa(u_spec: &str) -> anyhow::Result<Report> {
    let u: Vec<Rational> = u_spec
        .split(',')
        .map(|s| s.trim().parse::<Rational>())
        .collect::<dbmw_core::Result<_>>()?;
    let mut report = Report::new("repn kappa", u_spec.as_bytes());
    let kappa = repn::solve_kappa(&u)?;
    for (i, k) in kappa.iter().enumerate() {
        report.push_value(&format!("kappa_{}", i + 1), k.to_string());
    }
    let gamma = symfun::gamma_values(&u)?;
    let matches = kappa == gamma;
    report.push_row(json!({
        "name": "matches_gamma_closed_form",
        "status": if matches { "pass" } else { "fail" },
    }));
    report.verdict = Some(matches);
    Ok(report)
}
