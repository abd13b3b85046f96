//! `alcove-spin`: enumerate the sets, run the checks, and print certificates
//! and reports as sorted-key JSON (or CSV for `report --csv`).
//!
//! Exit status: 0 on success, 1 when a check fails or the time budget runs
//! out, 2 on a usage error.

use std::process::ExitCode;
use std::sync::mpsc;
use std::time::Duration;

use alcove_spin::codec::{certificate_value, set_value};
use alcove_spin::report::Report;
use alcove_spin::root_datum::{validate_orbit_classifier, w_circ_group};
use alcove_spin::spin_exterior::{a_matrix, eigenspace_dimension, sigma_sign};
use alcove_spin::{
    adm, adm_circ, ascent_chain, enumerate_perm, enumerate_perm_sp, z_set, IndexSet, Mu,
};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "alcove-spin", version, about)]
struct Cli {
    /// Allow n = 4 and the experimental n = 5.
    #[arg(long, global = true, env = "ALCOVE_SPIN_LONG")]
    long: bool,

    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Wall-clock budget in seconds; the run fails once it is exceeded.
    #[arg(long, global = true, default_value_t = 3600)]
    budget_secs: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the sets as a sorted JSON array of elements.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        set: SetName,
        /// Needed for every set except z and z-even.
        #[arg(long, value_parser = parse_mu)]
        mu: Option<Mu>,
    },
    /// Run the equality and containment checks and print the report.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_mu)]
        mu: Mu,
        /// Leave out elapsed_ms so the output is reproducible.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print an ascent certificate for every element of Perm^sp(μ).
    Ascent {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_mu)]
        mu: Mu,
    },
    /// Facts about the involution a on ∧^n V.
    SpinOp {
        #[arg(long)]
        n: usize,
    },
    /// Reports for several n and both μ.
    Report {
        /// Defaults to 2 and 3, plus 4 with --long.
        #[arg(long, value_delimiter = ',')]
        n: Vec<usize>,
        #[arg(long, value_parser = parse_mu)]
        mu: Option<Mu>,
        #[arg(long)]
        csv: bool,
        #[arg(long)]
        no_timing: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SetName {
    AdmCirc,
    Adm,
    PermSp,
    Perm,
    Z,
    ZEven,
}

fn parse_mu(s: &str) -> Result<Mu, String> {
    Mu::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<alcove_spin::Error> for Failure {
    fn from(e: alcove_spin::Error) -> Self {
        Failure::Check(e.to_string())
    }
}

/// Output text and whether every check passed.
type Outcome = Result<(String, bool), Failure>;

fn check_n(n: usize, long: bool) -> Result<(), Failure> {
    match n {
        2 | 3 => {}
        4 | 5 if long => {}
        4 | 5 => return Err(Failure::Usage(format!("n = {n} needs --long"))),
        _ => return Err(Failure::Usage(format!("n = {n} is outside 2..=5"))),
    }
    // The parity shortcut for orbit membership is checked before it is used.
    validate_orbit_classifier(n)?;
    Ok(())
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn enumerate(n: usize, set: SetName, mu: Option<Mu>) -> Outcome {
    let need_mu = || mu.ok_or_else(|| Failure::Usage("this set needs --mu".into()));
    let elements = match set {
        SetName::AdmCirc => adm_circ(n, need_mu()?),
        SetName::Adm => adm(n, need_mu()?),
        SetName::PermSp => enumerate_perm_sp(n, need_mu()?),
        SetName::Perm => enumerate_perm(n, need_mu()?),
        SetName::Z => z_set(n),
        SetName::ZEven => z_set(n)
            .into_iter()
            .filter(|w| w.is_in_identity_component())
            .collect(),
    };
    Ok((pretty(&set_value(&elements)), true))
}

fn report(n: usize, mu: Mu, no_timing: bool) -> Result<Report, Failure> {
    let r = Report::build(n, mu)?;
    Ok(if no_timing { r.without_timing() } else { r })
}

fn ascent(n: usize, mu: Mu) -> Outcome {
    let mut certs = Vec::new();
    let mut ok = true;
    for w in enumerate_perm_sp(n, mu) {
        match ascent_chain(&w, mu) {
            Ok(cert) => certs.push(certificate_value(&cert)),
            Err(e) => {
                ok = false;
                eprintln!("no certificate for {w:?}: {e}");
            }
        }
    }
    Ok((pretty(&Value::Array(certs)), ok))
}

fn spin_op(n: usize) -> Outcome {
    let (m, involution) = a_matrix(n)?;
    let trace: i64 = (0..m.len()).map(|k| m[k][k]).sum();
    let plus = eigenspace_dimension(n, 1)?;
    let minus = eigenspace_dimension(n, -1)?;
    let mut signs = serde_json::Map::new();
    for mu in Mu::ALL {
        let e = IndexSet::zeros_of(mu.cocharacter(n).coords());
        signs.insert(mu.label().into(), json!(sigma_sign(&e)?));
    }
    let ok = involution && plus + minus == m.len();
    let out = json!({
        "n": n,
        "dimension": m.len(),
        "involution": involution,
        "trace": trace,
        "eigenspace_dims": { "plus": plus, "minus": minus },
        "isotropic_sign": signs,
        "w_circ_order": w_circ_group(n).len(),
    });
    Ok((pretty(&out), ok))
}

fn reports(ns: Vec<usize>, mu: Option<Mu>, csv: bool, no_timing: bool, long: bool) -> Outcome {
    let ns = if ns.is_empty() {
        if long {
            vec![2, 3, 4]
        } else {
            vec![2, 3]
        }
    } else {
        ns
    };
    for &n in &ns {
        check_n(n, long)?;
    }
    let mus: Vec<Mu> = mu.map_or(Mu::ALL.to_vec(), |m| vec![m]);
    let mut all = Vec::new();
    for &n in &ns {
        for &m in &mus {
            all.push(report(n, m, no_timing)?);
        }
    }
    let ok = all.iter().all(Report::passed);
    let text = if csv {
        let mut lines = vec![Report::CSV_HEADER.to_string()];
        lines.extend(all.iter().map(Report::csv_row));
        lines.join("\n")
    } else {
        pretty(&Value::Array(all.iter().map(Report::to_value).collect()))
    };
    Ok((text, ok))
}

fn run(command: Command, long: bool) -> Outcome {
    match command {
        Command::Enumerate { n, set, mu } => {
            check_n(n, long)?;
            enumerate(n, set, mu)
        }
        Command::Verify { n, mu, no_timing } => {
            check_n(n, long)?;
            let r = report(n, mu, no_timing)?;
            Ok((pretty(&r.to_value()), r.passed()))
        }
        Command::Ascent { n, mu } => {
            check_n(n, long)?;
            ascent(n, mu)
        }
        Command::SpinOp { n } => {
            check_n(n, long)?;
            spin_op(n)
        }
        Command::Report {
            n,
            mu,
            csv,
            no_timing,
        } => reports(n, mu, csv, no_timing, long),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if threads == 0 {
            eprintln!("error: --threads must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .expect("global pool is configured once");
    }
    let (long, budget) = (cli.long, Duration::from_secs(cli.budget_secs));
    let (tx, rx) = mpsc::channel();
    std::thread::spawn(move || {
        let _ = tx.send(run(cli.command, long));
    });
    match rx.recv_timeout(budget) {
        Ok(Ok((text, ok))) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a check failed");
                ExitCode::from(1)
            }
        }
        Ok(Err(Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Ok(Err(Failure::Check(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(_) => {
            eprintln!("error: budget of {}s exceeded", budget.as_secs());
            ExitCode::from(1)
        }
    }
}
